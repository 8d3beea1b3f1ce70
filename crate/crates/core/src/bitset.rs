//! Internal bitset adjacency used by the exact solvers.

use crate::coloring::EdgeColoring;
use crate::graph::Graph;

pub(crate) const WORD_BITS: usize = 64;

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

#[inline]
pub(crate) fn set_bit(words: &mut [u64], i: usize) {
    words[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
}

#[inline]
pub(crate) fn clear_bit(words: &mut [u64], i: usize) {
    words[i / WORD_BITS] &= !(1u64 << (i % WORD_BITS));
}

#[cfg_attr(not(test), allow(dead_code))]
#[inline]
pub(crate) fn test_bit(words: &[u64], i: usize) -> bool {
    words[i / WORD_BITS] >> (i % WORD_BITS) & 1 != 0
}

pub(crate) fn count_bits(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

pub(crate) fn is_empty(words: &[u64]) -> bool {
    words.iter().all(|&w| w == 0)
}

/// Clears every bit with index below `n`.
pub(crate) fn clear_below(words: &mut [u64], n: usize) {
    let full_words = n / WORD_BITS;
    for w in words.iter_mut().take(full_words) {
        *w = 0;
    }
    let rem = n % WORD_BITS;
    if rem != 0 && full_words < words.len() {
        words[full_words] &= !((1u64 << rem) - 1);
    }
}

/// dst = a & b, element-wise over equal-length slices.
pub(crate) fn and_into(dst: &mut [u64], a: &[u64], b: &[u64]) {
    debug_assert_eq!(dst.len(), a.len());
    debug_assert_eq!(dst.len(), b.len());
    for ((d, &x), &y) in dst.iter_mut().zip(a).zip(b) {
        *d = x & y;
    }
}

/// Iterates set-bit positions in ascending order.
pub(crate) struct SetBits<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl<'a> SetBits<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        let current = words.first().copied().unwrap_or(0);
        SetBits {
            words,
            word_idx: 0,
            current,
        }
    }
}

impl Iterator for SetBits<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD_BITS + bit)
    }
}

/// Dense adjacency-matrix view of a graph, one bitset row per vertex.
#[derive(Clone)]
pub(crate) struct BitGraph {
    pub(crate) n: usize,
    pub(crate) words: usize,
    rows: Vec<u64>,
}

impl BitGraph {
    pub(crate) fn empty(n: usize) -> Self {
        let words = words_for(n);
        BitGraph {
            n,
            words,
            rows: vec![0u64; n * words],
        }
    }

    pub(crate) fn from_graph(g: &Graph) -> Self {
        let mut bg = BitGraph::empty(g.vertex_count());
        for v in 0..g.vertex_count() {
            for &u in g.neighbors(v) {
                set_bit(bg.row_mut(v), u as usize);
            }
        }
        bg
    }

    /// Adjacency of the complement graph, diagonal excluded.
    pub(crate) fn complement_of(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut bg = BitGraph::empty(n);
        for v in 0..n {
            let row = bg.row_mut(v);
            for w in row.iter_mut() {
                *w = u64::MAX;
            }
            // mask tail bits beyond n
            let tail = n % WORD_BITS;
            if tail != 0 {
                *row.last_mut().expect("n >= 1") = (1u64 << tail) - 1;
            }
            clear_bit(row, v);
            for &u in g.neighbors(v) {
                clear_bit(row, u as usize);
            }
        }
        bg
    }

    /// Adjacency of one color class of a complete-graph edge coloring.
    pub(crate) fn from_color_class(c: &EdgeColoring, color: u16) -> Self {
        let s = c.vertex_count();
        let mut bg = BitGraph::empty(s);
        for u in 0..s {
            for v in (u + 1)..s {
                if c.color(u, v) == color {
                    set_bit(bg.row_mut(u), v);
                    set_bit(bg.row_mut(v), u);
                }
            }
        }
        bg
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    fn row_mut(&mut self, v: usize) -> &mut [u64] {
        &mut self.rows[v * self.words..(v + 1) * self.words]
    }

    #[cfg_attr(not(test), allow(dead_code))]
    #[inline]
    pub(crate) fn adjacent(&self, u: usize, v: usize) -> bool {
        test_bit(self.row(u), v)
    }

    /// Bitset with all `n` vertex bits set.
    pub(crate) fn full_set(&self) -> Vec<u64> {
        let mut words = vec![u64::MAX; self.words];
        let tail = self.n % WORD_BITS;
        if tail != 0 {
            words[self.words - 1] = (1u64 << tail) - 1;
        }
        if self.n == 0 {
            words.clear();
        }
        words
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_bits_iterates_in_order() {
        let mut words = vec![0u64; 2];
        for i in [0, 5, 63, 64, 100] {
            set_bit(&mut words, i);
        }
        let got: Vec<usize> = SetBits::new(&words).collect();
        assert_eq!(got, vec![0, 5, 63, 64, 100]);
        assert_eq!(count_bits(&words), 5);
    }

    #[test]
    fn complement_rows_match_definition() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let bg = BitGraph::from_graph(&g);
        let cg = BitGraph::complement_of(&g);
        for u in 0..5 {
            for v in 0..5 {
                if u == v {
                    assert!(!bg.adjacent(u, v));
                    assert!(!cg.adjacent(u, v));
                } else {
                    assert_eq!(bg.adjacent(u, v), !cg.adjacent(u, v));
                }
            }
        }
    }

    #[test]
    fn full_set_masks_tail() {
        let g = Graph::from_edges(70, &[]).unwrap();
        let bg = BitGraph::from_graph(&g);
        let full = bg.full_set();
        assert_eq!(count_bits(&full), 70);
    }
}

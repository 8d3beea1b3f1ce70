//! Exact maximum clique / maximum independent set search and the small-case
//! exhaustive Ramsey oracle.
//!
//! The clique engine is a branch-and-bound over bitset neighbor rows with
//! greedy-coloring upper bounds. At every node the candidate set is greedily
//! partitioned into color classes (scanning vertices in ascending index
//! order); a branch is cut when the current clique plus the candidate's
//! class index cannot beat the incumbent. All choices are pure functions of
//! the input graph with ties broken by lowest vertex index, so the result —
//! size, witness, and node count — is deterministic.

use crate::bitset::{self, BitGraph};
use crate::coloring::EdgeColoring;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Outcome of an exact search. `witness` is sorted ascending and always
/// re-checks against the adjacency relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub size: usize,
    pub witness: Vec<usize>,
    pub nodes_explored: u64,
    /// Always true: this module only performs exact searches.
    pub exact: bool,
}

/// Exact maximum clique of `g`.
pub fn max_clique(g: &Graph, cfg: &Config) -> Result<SearchResult> {
    check_solver_cap(g.vertex_count(), cfg)?;
    let bg = BitGraph::from_graph(g);
    let result = solve_max_clique(&bg);
    debug_assert!(g.is_clique(&result.witness));
    Ok(result)
}

/// Exact independence number of `g`, solved as a maximum clique of the
/// complement.
pub fn max_independent_set(g: &Graph, cfg: &Config) -> Result<SearchResult> {
    check_solver_cap(g.vertex_count(), cfg)?;
    let bg = BitGraph::complement_of(g);
    let result = solve_max_clique(&bg);
    debug_assert!(g.is_independent_set(&result.witness));
    Ok(result)
}

/// Exact maximum monochromatic clique in one color class of a coloring,
/// without materializing the class as a [`Graph`].
pub fn max_clique_in_color(c: &EdgeColoring, color: u16, cfg: &Config) -> Result<SearchResult> {
    if color == 0 || color > c.color_count() {
        return Err(Error::ColorOutOfRange {
            color: color as u32,
            color_count: c.color_count(),
        });
    }
    check_solver_cap(c.vertex_count(), cfg)?;
    let bg = BitGraph::from_color_class(c, color);
    Ok(solve_max_clique(&bg))
}

/// Looks for any `K_k` in the given color class and returns one witness,
/// sorted ascending, or `None`. Early-exits on the first hit; the witness
/// need not be maximum. `k` must be at least 2.
pub fn has_monochromatic_clique(
    c: &EdgeColoring,
    color: u16,
    k: usize,
) -> Result<Option<Vec<usize>>> {
    assert!(k >= 2, "clique size must be at least 2");
    if color == 0 || color > c.color_count() {
        return Err(Error::ColorOutOfRange {
            color: color as u32,
            color_count: c.color_count(),
        });
    }
    let bg = BitGraph::from_color_class(c, color);
    Ok(find_clique_of_size(&bg, k))
}

/// Decides whether some `n`-coloring of `K_s` avoids every monochromatic
/// `K_k`, i.e. whether `s` is still below the diagonal Ramsey number, by
/// enumerating all `n^C(s,2)` colorings.
///
/// Enumeration order: edges of `K_s` are listed lexicographically
/// `(0,1), (0,2), ..., (s-2,s-1)`; a coloring is the base-`n` digit string
/// over that edge order with edge 0 as the least significant digit, counted
/// upward from the all-color-1 coloring.
pub fn exhaustive_ramsey_check(s: usize, n: u16, k: usize, cfg: &Config) -> Result<bool> {
    assert!(s >= 1, "vertex count must be positive");
    assert!(n >= 1, "color count must be positive");
    assert!(k >= 2, "clique size must be at least 2");
    let edges: Vec<(usize, usize)> = (0..s)
        .flat_map(|u| ((u + 1)..s).map(move |v| (u, v)))
        .collect();
    let total = count_colorings(n, edges.len());
    if total > cfg.ramsey_enum_cap {
        return Err(Error::CapExceeded {
            what: "ramsey enumeration",
            size: total,
            cap: cfg.ramsey_enum_cap,
        });
    }

    // Edge indices of every k-subset's pairs, fixed once.
    let mut edge_index = vec![vec![0usize; s]; s];
    for (i, &(u, v)) in edges.iter().enumerate() {
        edge_index[u][v] = i;
        edge_index[v][u] = i;
    }
    let subsets: Vec<Vec<usize>> = k_subsets(s, k)
        .into_iter()
        .map(|vs| {
            let mut pair_edges = Vec::with_capacity(k * (k - 1) / 2);
            for i in 0..vs.len() {
                for j in (i + 1)..vs.len() {
                    pair_edges.push(edge_index[vs[i]][vs[j]]);
                }
            }
            pair_edges
        })
        .collect();

    let mut digits = vec![0u16; edges.len()];
    loop {
        let monochromatic = subsets.iter().any(|pair_edges| {
            let first = digits[pair_edges[0]];
            pair_edges[1..].iter().all(|&e| digits[e] == first)
        });
        if !monochromatic {
            return Ok(true);
        }
        // Increment the base-n counter; full wrap means the space is spent.
        let mut pos = 0;
        loop {
            if pos == digits.len() {
                return Ok(false);
            }
            digits[pos] += 1;
            if digits[pos] < n {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

fn count_colorings(n: u16, edge_count: usize) -> u128 {
    let mut total: u128 = 1;
    for _ in 0..edge_count {
        total = match total.checked_mul(n as u128) {
            Some(t) => t,
            None => return u128::MAX,
        };
        if total > u128::MAX / 2 {
            return u128::MAX;
        }
    }
    total
}

fn k_subsets(s: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > s {
        return out;
    }
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, s: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let remaining = k - current.len();
        for v in start..=(s - remaining) {
            current.push(v);
            rec(v + 1, s, k, current, out);
            current.pop();
        }
    }
    rec(0, s, k, &mut current, &mut out);
    out
}

fn check_solver_cap(n: usize, cfg: &Config) -> Result<()> {
    if n > cfg.solver_vertex_cap {
        return Err(Error::CapExceeded {
            what: "solver input",
            size: n as u128,
            cap: cfg.solver_vertex_cap as u128,
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Branch-and-bound engine
// ---------------------------------------------------------------------------

struct Searcher<'a> {
    g: &'a BitGraph,
    best_size: usize,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
}

pub(crate) fn solve_max_clique(g: &BitGraph) -> SearchResult {
    if g.n == 0 {
        return SearchResult {
            size: 0,
            witness: Vec::new(),
            nodes_explored: 0,
            exact: true,
        };
    }
    let mut searcher = Searcher {
        g,
        best_size: 0,
        best: Vec::new(),
        current: Vec::new(),
        nodes: 0,
    };
    searcher.expand(g.full_set());
    let mut witness = searcher.best;
    witness.sort_unstable();
    SearchResult {
        size: searcher.best_size,
        witness,
        nodes_explored: searcher.nodes,
        exact: true,
    }
}

impl Searcher<'_> {
    fn expand(&mut self, mut candidates: Vec<u64>) {
        self.nodes += 1;
        let order = self.color_sort(&candidates);
        for &(v, class) in order.iter().rev() {
            if self.current.len() + class <= self.best_size {
                return;
            }
            self.current.push(v);
            let mut child = vec![0u64; self.g.words];
            bitset::and_into(&mut child, &candidates, self.g.row(v));
            if bitset::is_empty(&child) {
                if self.current.len() > self.best_size {
                    self.best_size = self.current.len();
                    self.best = self.current.clone();
                }
            } else {
                self.expand(child);
            }
            self.current.pop();
            bitset::clear_bit(&mut candidates, v);
        }
    }

    /// Greedy coloring of the candidate set. Returns `(vertex, class)` in
    /// ascending class order; within a class, ascending vertex order. The
    /// class index is an upper bound on any clique inside the remaining
    /// candidates up to that point.
    fn color_sort(&self, candidates: &[u64]) -> Vec<(usize, usize)> {
        let mut order = Vec::with_capacity(bitset::count_bits(candidates));
        let mut uncolored = candidates.to_vec();
        let mut avail = vec![0u64; self.g.words];
        let mut class = 0usize;
        while !bitset::is_empty(&uncolored) {
            class += 1;
            avail.copy_from_slice(&uncolored);
            while let Some(v) = bitset::SetBits::new(&avail).next() {
                order.push((v, class));
                bitset::clear_bit(&mut uncolored, v);
                bitset::clear_bit(&mut avail, v);
                for (a, &row) in avail.iter_mut().zip(self.g.row(v)) {
                    *a &= !row;
                }
            }
        }
        order
    }
}

/// Depth-first search for a clique of exactly `k` vertices, taking vertices
/// in ascending order so the first witness found is canonical.
fn find_clique_of_size(g: &BitGraph, k: usize) -> Option<Vec<usize>> {
    if g.n < k {
        return None;
    }
    let mut current = Vec::with_capacity(k);
    let full = g.full_set();
    if extend_to_size(g, k, &full, &mut current) {
        Some(current)
    } else {
        None
    }
}

fn extend_to_size(g: &BitGraph, k: usize, candidates: &[u64], current: &mut Vec<usize>) -> bool {
    if current.len() == k {
        return true;
    }
    if current.len() + bitset::count_bits(candidates) < k {
        return false;
    }
    let mut child = vec![0u64; g.words];
    for v in bitset::SetBits::new(candidates) {
        bitset::and_into(&mut child, candidates, g.row(v));
        // Only vertices above v keep the enumeration increasing.
        bitset::clear_below(&mut child, v + 1);
        current.push(v);
        if extend_to_size(g, k, &child, current) {
            return true;
        }
        current.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn cfg() -> Config {
        Config::default()
    }

    fn c5() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn mis_of_edgeless_graph_is_everything() {
        let g = Graph::empty(7).unwrap();
        let r = max_independent_set(&g, &cfg()).unwrap();
        assert_eq!(r.size, 7);
        assert_eq!(r.witness, vec![0, 1, 2, 3, 4, 5, 6]);
        assert!(r.exact);
    }

    #[test]
    fn mis_of_pentagon_is_two() {
        let r = max_independent_set(&c5(), &cfg()).unwrap();
        assert_eq!(r.size, 2);
        assert!(c5().is_independent_set(&r.witness));
    }

    #[test]
    fn clique_of_complete_graph() {
        let g = Graph::complete(4).unwrap();
        let r = max_clique(&g, &cfg()).unwrap();
        assert_eq!(r.size, 4);
        assert_eq!(r.witness, vec![0, 1, 2, 3]);
    }

    #[test]
    fn clique_of_pentagon_is_an_edge() {
        let r = max_clique(&c5(), &cfg()).unwrap();
        assert_eq!(r.size, 2);
        assert!(c5().is_clique(&r.witness));
    }

    #[test]
    fn duality_on_small_graphs() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (2, 5)]).unwrap();
        let clique = max_clique(&g, &cfg()).unwrap();
        let dual = max_independent_set(&g.complement(), &cfg()).unwrap();
        assert_eq!(clique.size, dual.size);
    }

    #[test]
    fn results_are_deterministic() {
        let g = c5();
        let a = max_independent_set(&g, &cfg()).unwrap();
        let b = max_independent_set(&g, &cfg()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn solver_cap_is_enforced() {
        let g = Graph::empty(10).unwrap();
        let tight = Config {
            solver_vertex_cap: 5,
            ..Config::default()
        };
        let err = max_independent_set(&g, &tight).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn gf16_color_class_is_triangle_free() {
        let c = catalog::generate_gf16_three_coloring();
        let r = max_clique_in_color(&c, 1, &cfg()).unwrap();
        assert_eq!(r.size, 2);
    }

    #[test]
    fn mono_clique_search_misses_on_k5_coloring() {
        let c = catalog::generate_k5_two_coloring();
        assert_eq!(has_monochromatic_clique(&c, 1, 3).unwrap(), None);
        assert_eq!(has_monochromatic_clique(&c, 2, 3).unwrap(), None);
    }

    #[test]
    fn mono_clique_search_finds_triangle() {
        let c = EdgeColoring::from_fn(3, 1, |_, _| 1).unwrap();
        assert_eq!(
            has_monochromatic_clique(&c, 1, 3).unwrap(),
            Some(vec![0, 1, 2])
        );
    }

    #[test]
    fn mono_clique_search_rejects_bad_color() {
        let c = catalog::generate_k5_two_coloring();
        assert!(matches!(
            has_monochromatic_clique(&c, 3, 3),
            Err(Error::ColorOutOfRange { color: 3, .. })
        ));
    }

    #[test]
    fn one_color_ramsey_number_is_k() {
        // With one color, K_s is monochromatic: s=2 avoids K_3, s=3 cannot.
        assert!(exhaustive_ramsey_check(2, 1, 3, &cfg()).unwrap());
        assert!(!exhaustive_ramsey_check(3, 1, 3, &cfg()).unwrap());
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let tight = Config {
            ramsey_enum_cap: 100,
            ..Config::default()
        };
        let err = exhaustive_ramsey_check(6, 2, 3, &tight).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn k_subsets_counts() {
        assert_eq!(k_subsets(5, 3).len(), 10);
        assert_eq!(k_subsets(4, 5).len(), 0);
        assert_eq!(k_subsets(3, 3), vec![vec![0, 1, 2]]);
    }
}

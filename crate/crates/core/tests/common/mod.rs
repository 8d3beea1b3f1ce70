//! Shared test oracles, kept independent of the library's search paths:
//! brute-force subset enumeration, maximal-set enumeration with pivoting,
//! exhaustive monochromatic-clique scans, and a seeded generator for
//! reproducible random instances.

#![allow(dead_code)]

use ramsey_forge::{EdgeColoring, Graph};

/// SplitMix64: tiny deterministic RNG for reproducible random instances.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// True with probability `percent / 100`.
    pub fn chance(&mut self, percent: u64) -> bool {
        self.below(100) < percent
    }
}

pub fn random_graph(rng: &mut SplitMix64, n: usize, edge_percent: u64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.chance(edge_percent) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated edges are in range")
}

pub fn random_coloring(rng: &mut SplitMix64, s: usize, n: u16) -> EdgeColoring {
    EdgeColoring::from_fn(s, n, |_, _| rng.below(n as u64) as u16 + 1)
        .expect("generated colors are in range")
}

/// Exact independence number by enumerating all `2^n` subsets. Only for
/// small graphs.
pub fn brute_force_alpha(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 20, "subset enumeration only meant for tiny graphs");
    let mut best = 0;
    for mask in 0u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if g.is_independent_set(&set) {
            best = size;
        }
    }
    best
}

/// Exact maximum clique by subset enumeration on the complement.
pub fn brute_force_max_clique(g: &Graph) -> usize {
    brute_force_alpha(&g.complement())
}

/// Exact independence number by enumerating all maximal independent sets
/// with a pivoting Bron-Kerbosch recursion over the non-adjacency relation.
/// Independent of both the branch-and-bound solver and the subset oracle.
/// Handles up to 128 vertices.
pub fn alpha_via_maximal_enumeration(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 128, "mask-based enumeration limited to 128 vertices");
    // non_adj[v]: vertices that can join an independent set with v.
    let mut non_adj = vec![0u128; n];
    for (u, mask) in non_adj.iter_mut().enumerate() {
        for v in 0..n {
            if u != v && !g.has_edge(u, v) {
                *mask |= 1 << v;
            }
        }
    }
    let mut best = 0usize;
    let full = if n == 128 { !0u128 } else { (1u128 << n) - 1 };
    bron_kerbosch(&non_adj, 0, full, 0, &mut best);
    best
}

fn bron_kerbosch(non_adj: &[u128], r_size: usize, p: u128, x: u128, best: &mut usize) {
    if p == 0 && x == 0 {
        *best = (*best).max(r_size);
        return;
    }
    // Pivot on the candidate dominating the most of p.
    let mut pivot = usize::MAX;
    let mut pivot_cover = 0u32;
    let mut scan = p | x;
    while scan != 0 {
        let u = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        let cover = (p & non_adj[u]).count_ones();
        if pivot == usize::MAX || cover > pivot_cover {
            pivot = u;
            pivot_cover = cover;
        }
    }
    let mut candidates = p & !non_adj[pivot];
    let mut p = p;
    let mut x = x;
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        let bit = 1u128 << v;
        bron_kerbosch(non_adj, r_size + 1, p & non_adj[v], x & non_adj[v], best);
        p &= !bit;
        x |= bit;
    }
}

/// Scans every vertex triple for a monochromatic triangle; returns the
/// first one found (with its color) and the number of triples inspected.
pub fn mono_triangle_scan(c: &EdgeColoring) -> (Option<(u16, [usize; 3])>, u64) {
    let s = c.vertex_count();
    let mut scanned = 0u64;
    for u in 0..s {
        for v in (u + 1)..s {
            let cuv = c.color(u, v);
            for w in (v + 1)..s {
                scanned += 1;
                if c.color(u, w) == cuv && c.color(v, w) == cuv {
                    return (Some((cuv, [u, v, w])), scanned);
                }
            }
        }
    }
    (None, scanned)
}

/// True if any edge carries the given color.
pub fn has_edge_in_color(c: &EdgeColoring, color: u16) -> bool {
    c.pairs().any(|(u, v)| c.color(u, v) == color)
}

/// Brute-force isomorphism test by permutation search. Only for tiny graphs.
pub fn isomorphic_brute(g1: &Graph, g2: &Graph) -> bool {
    let n = g1.vertex_count();
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    assert!(n <= 8, "permutation search only meant for tiny graphs");
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        (0..n).all(|u| {
            ((u + 1)..n).all(|v| g1.has_edge(u, v) == g2.has_edge(p[u], p[v]))
        })
    })
}

/// Calls `check` on every permutation until one passes.
fn permutations(perm: &mut Vec<usize>, k: usize, check: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == perm.len() {
        return check(perm);
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        if permutations(perm, k + 1, check) {
            perm.swap(k, i);
            return true;
        }
        perm.swap(k, i);
    }
    false
}

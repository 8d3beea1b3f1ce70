//! Product constructions on graphs and colorings: the strong product and
//! its powers, the composition product `G[H]`, the two-block coloring
//! construction behind the `R_{2n}(k)` lower bound, and the
//! coloring-to-graph-family translation.

use crate::coloring::EdgeColoring;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solvers;

/// Identity of a vertex in the two-block construction's output. The first
/// `s*s` vertices are `Grid(i1, i2)` in row-major order (`i1*s + i2`); the
/// remaining `m*t` are `Copy(i, j)` in `i*t + j` order, the `j`-th vertex of
/// the `i`-th copy block. Both orders are part of the output contract so
/// certificates are bit-reproducible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductVertex {
    Grid(usize, usize),
    Copy(usize, usize),
}

impl ProductVertex {
    /// Flat index given the base sizes `s` (grid side) and `t` (copy size).
    pub fn index(&self, s: usize, t: usize) -> usize {
        match *self {
            ProductVertex::Grid(i1, i2) => i1 * s + i2,
            ProductVertex::Copy(i, j) => s * s + i * t + j,
        }
    }

    /// Inverse of [`ProductVertex::index`] for a construction with grid
    /// side `s`, `m` copy blocks of size `t`.
    pub fn from_index(idx: usize, s: usize, m: usize, t: usize) -> ProductVertex {
        debug_assert!(idx < s * s + m * t);
        if idx < s * s {
            ProductVertex::Grid(idx / s, idx % s)
        } else {
            let rest = idx - s * s;
            ProductVertex::Copy(rest / t, rest % t)
        }
    }
}

/// Strong product: vertices are pairs in row-major index order
/// (`(u1, u2) -> u1 * |V2| + u2`); two distinct pairs are adjacent iff each
/// coordinate is equal or adjacent. Commutative and associative up to the
/// corresponding index permutations.
pub fn strong_product(g1: &Graph, g2: &Graph) -> Graph {
    let (n1, n2) = (g1.vertex_count(), g2.vertex_count());
    let n = n1.checked_mul(n2).expect("product vertex count overflow");
    let mut edges = Vec::new();
    for u1 in 0..n1 {
        for u2 in 0..n2 {
            let u = u1 * n2 + u2;
            // Enumerate closed neighborhoods coordinate-wise; keep v > u so
            // each edge appears once.
            for &v1 in std::iter::once(&(u1 as u32)).chain(g1.neighbors(u1)) {
                for &v2 in std::iter::once(&(u2 as u32)).chain(g2.neighbors(u2)) {
                    let v = (v1 as usize) * n2 + v2 as usize;
                    if v > u {
                        edges.push((u, v));
                    }
                }
            }
        }
    }
    Graph::from_edges(n, &edges).expect("endpoints in range by construction")
}

/// `n`-fold strong product of `g` with itself, folded left: the power-`p`
/// vertex `(v_1, ..., v_p)` has index `v_1 * c^(p-1) + ... + v_p` where `c`
/// is the base vertex count. Refuses outputs above the configured cap.
pub fn graph_power(g: &Graph, n: u32, cfg: &Config) -> Result<Graph> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    let base = g.vertex_count();
    let mut size: u128 = base as u128;
    for _ in 1..n {
        size = size.saturating_mul(base as u128);
    }
    if size > cfg.graph_power_cap as u128 {
        return Err(Error::CapExceeded {
            what: "graph power",
            size,
            cap: cfg.graph_power_cap as u128,
        });
    }
    let mut power = g.clone();
    for _ in 1..n {
        power = strong_product(&power, g);
    }
    Ok(power)
}

/// Composition product `G[H]` on `V(G) x V(H)` (row-major): `(u1, v1)` and
/// `(u2, v2)` are adjacent iff `u1 = u2` and `{v1, v2}` is an edge of `H`,
/// or `{u1, u2}` is an edge of `G` — disjoint copies of `H`, joined
/// completely along the edges of `G`.
pub fn composition_graph(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let n = ng.checked_mul(nh).expect("product vertex count overflow");
    let mut edges = Vec::new();
    for u1 in 0..ng {
        // Within one copy of H.
        for (v1, v2) in h.edges() {
            edges.push((u1 * nh + v1, u1 * nh + v2));
        }
        // Complete join along G-edges, kept one-sided.
        for &u2 in g.neighbors(u1) {
            let u2 = u2 as usize;
            if u2 < u1 {
                continue;
            }
            for v1 in 0..nh {
                for v2 in 0..nh {
                    edges.push((u1 * nh + v1, u2 * nh + v2));
                }
            }
        }
    }
    Graph::from_edges(n, &edges).expect("endpoints in range by construction")
}

/// Composition product of colorings on `V(g) x V(h)` (row-major): an edge
/// within a copy (`u1 = u2`) takes the color of `{v1, v2}` in `h`; an edge
/// across copies takes the color of `{u1, u2}` in `g`. Color palettes may
/// coincide; relabel first when disjointness is wanted. The output palette
/// is the larger of the two inputs'.
pub fn composition_coloring(g: &EdgeColoring, h: &EdgeColoring) -> EdgeColoring {
    let (sg, sh) = (g.vertex_count(), h.vertex_count());
    let s = sg.checked_mul(sh).expect("product vertex count overflow");
    let n = g.color_count().max(h.color_count());
    EdgeColoring::from_fn(s, n, |a, b| {
        let (u1, v1) = (a / sh, a % sh);
        let (u2, v2) = (b / sh, b % sh);
        if u1 == u2 {
            h.color(v1, v2)
        } else {
            g.color(u1, u2)
        }
    })
    .expect("colors in range by construction")
}

/// Builds the `2n`-colored witness on `s^2 + m*t` vertices from a valid
/// `n`-coloring `g` of `K_s` and a valid helper coloring `h` of `K_t`.
///
/// Preconditions, each reported with a witness on failure:
/// - `g` avoids monochromatic `K_k` in all of its `n` colors;
/// - the first `m` vertices of `g` induce no color-1 edge (normalize with
///   [`EdgeColoring::relabel_colors`] and
///   [`EdgeColoring::induced_subcoloring`] first);
/// - `h` uses the same `n` colors and avoids `K_{k-1}` in color 1 and `K_k`
///   in colors `2..=n`;
/// - `m <= s`, and the output size fits the configured coloring cap.
///
/// Output layout and colors: see [`ProductVertex`] for the vertex order.
/// With grid vertices `(i1, i2)` and copy vertices `(i, j)`:
/// - grid-grid, same row (`i1 = j1`): color `g(i2, j2) + n`;
/// - grid-grid, same column inside the block (`i2 = j2 < m`) with
///   `g(i1, j1) = 1`: color `n + 1`;
/// - grid-grid otherwise: color `g(i1, j1)`;
/// - copy-copy inside one block: color `h(j1, j2)`;
/// - copy-copy across blocks `i1 != i2`: color `g(i1, i2) + n`;
/// - grid `(i1, j1)` to copy `(i2, j2)` with `j1 != i2`: color
///   `g(j1, i2) + n`;
/// - grid `(i1, q)` to copy `(q, j2)`: color 1.
pub fn theorem2_construct(
    g: &EdgeColoring,
    m: usize,
    h: &EdgeColoring,
    k: usize,
    cfg: &Config,
) -> Result<EdgeColoring> {
    let s = g.vertex_count();
    let t = h.vertex_count();
    let n = g.color_count();
    if h.color_count() != n {
        return Err(Error::ColorCountMismatch {
            left: n,
            right: h.color_count(),
        });
    }
    if m > s {
        return Err(Error::BlockTooLarge { m, s });
    }
    let n_out = (n as u64) * 2;
    if n_out > u16::MAX as u64 {
        return Err(Error::TooManyColors {
            requested: n_out,
            max: u16::MAX,
        });
    }
    // The helper's color-1 bound is k-1, which must itself be a clique
    // size of at least 2.
    if k < 3 {
        return Err(Error::SpecEntryTooSmall { index: 0, value: k - 1 });
    }

    // g must avoid K_k in every color.
    for color in 1..=n {
        if let Some(witness) = solvers::has_monochromatic_clique(g, color, k)? {
            return Err(Error::BaseColoringInvalid {
                which: "g",
                color,
                k,
                witness,
            });
        }
    }
    // h must avoid K_{k-1} in color 1 and K_k elsewhere.
    for color in 1..=n {
        let bound = if color == 1 { k - 1 } else { k };
        if let Some(witness) = solvers::has_monochromatic_clique(h, color, bound)? {
            return Err(Error::BaseColoringInvalid {
                which: "h",
                color,
                k: bound,
                witness,
            });
        }
    }
    // The designated block must be free of color-1 edges.
    for u in 0..m {
        for v in (u + 1)..m {
            if g.color(u, v) == 1 {
                return Err(Error::ColorOneEdgeInBlock { u, v });
            }
        }
    }

    let size = s * s + m * t;
    if size > cfg.coloring_size_cap {
        return Err(Error::CapExceeded {
            what: "constructed coloring",
            size: size as u128,
            cap: cfg.coloring_size_cap as u128,
        });
    }

    EdgeColoring::from_fn(size, n_out as u16, |a, b| {
        let va = ProductVertex::from_index(a, s, m, t);
        let vb = ProductVertex::from_index(b, s, m, t);
        match (va, vb) {
            (ProductVertex::Grid(i1, i2), ProductVertex::Grid(j1, j2)) => {
                if i1 == j1 {
                    g.color(i2, j2) + n
                } else if i2 == j2 && i2 < m && g.color(i1, j1) == 1 {
                    n + 1
                } else {
                    g.color(i1, j1)
                }
            }
            (ProductVertex::Copy(i1, j1), ProductVertex::Copy(i2, j2)) => {
                if i1 == i2 {
                    h.color(j1, j2)
                } else {
                    g.color(i1, i2) + n
                }
            }
            (ProductVertex::Grid(_, j1), ProductVertex::Copy(i2, _))
            | (ProductVertex::Copy(i2, _), ProductVertex::Grid(_, j1)) => {
                if j1 != i2 {
                    g.color(j1, i2) + n
                } else {
                    1
                }
            }
        }
    })
}

/// Translates an `n`-coloring into `n` graphs on the same vertex set:
/// `G_i` has the edge `{u, v}` iff the edge's color differs from `i`.
/// Independent sets of `G_i` are exactly the color-`i` cliques of the
/// coloring, so a coloring avoiding `K_{k_i+1}` in color `i` yields
/// `alpha(G_i) <= k_i`, and the vertex diagonal is independent in the
/// strong product of the family.
pub fn emt_product_graphs(c: &EdgeColoring) -> Vec<Graph> {
    let s = c.vertex_count();
    (1..=c.color_count())
        .map(|color| {
            let edges: Vec<(usize, usize)> = c
                .pairs()
                .filter(|&(u, v)| c.color(u, v) != color)
                .collect();
            Graph::from_edges(s, &edges).expect("endpoints in range by construction")
        })
        .collect()
}

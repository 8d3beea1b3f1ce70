//! Complete-graph edge colorings, forbidden-clique specs, and verification.

use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solvers;

/// An edge coloring of the complete graph on `vertex_count` vertices with
/// colors `1..=color_count`. Every unordered pair of distinct vertices
/// carries exactly one color. Colors are 1-based; storage is a dense
/// symmetric matrix so lookups are O(1) in both directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    vertex_count: usize,
    color_count: u16,
    colors: Vec<u16>, // row-major s*s, 0 on the diagonal
}

impl EdgeColoring {
    /// Builds a coloring by evaluating `f` on every pair `u < v`. The value
    /// must lie in `1..=color_count`.
    pub fn from_fn(
        vertex_count: usize,
        color_count: u16,
        mut f: impl FnMut(usize, usize) -> u16,
    ) -> Result<EdgeColoring> {
        if vertex_count == 0 {
            return Err(Error::EmptyVertexSet);
        }
        if color_count == 0 {
            return Err(Error::NoColors);
        }
        let mut colors = vec![0u16; vertex_count * vertex_count];
        for u in 0..vertex_count {
            for v in (u + 1)..vertex_count {
                let c = f(u, v);
                if c == 0 || c > color_count {
                    return Err(Error::ColorOutOfRange {
                        color: c as u32,
                        color_count,
                    });
                }
                colors[u * vertex_count + v] = c;
                colors[v * vertex_count + u] = c;
            }
        }
        Ok(EdgeColoring {
            vertex_count,
            color_count,
            colors,
        })
    }

    /// Builds a coloring from the upper triangle listed row by row:
    /// row `i` holds the colors of `{i, j}` for `j = i+1 .. vertex_count-1`.
    pub fn from_upper_triangle(
        vertex_count: usize,
        color_count: u16,
        upper: &[u16],
    ) -> Result<EdgeColoring> {
        let expected = vertex_count * vertex_count.saturating_sub(1) / 2;
        assert_eq!(upper.len(), expected, "upper triangle length mismatch");
        let mut it = upper.iter().copied();
        EdgeColoring::from_fn(vertex_count, color_count, |_, _| {
            it.next().expect("length checked above")
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn color_count(&self) -> u16 {
        self.color_count
    }

    /// Color of the edge `{u, v}`. Panics if `u == v` or out of range.
    #[inline]
    pub fn color(&self, u: usize, v: usize) -> u16 {
        assert!(u != v, "edge endpoints must be distinct");
        self.colors[u * self.vertex_count + v]
    }

    /// The graph on the same vertex set whose edges are exactly the pairs
    /// carrying `color`. The classes over all colors partition the complete
    /// graph's edge set.
    pub fn color_class(&self, color: u16) -> Result<Graph> {
        self.check_color(color)?;
        let edges: Vec<(usize, usize)> = self
            .pairs()
            .filter(|&(u, v)| self.color(u, v) == color)
            .collect();
        Graph::from_edges(self.vertex_count, &edges)
    }

    /// Restriction to an ordered vertex subset: the result's edge `{i, j}`
    /// has the color of `{vertices[i], vertices[j]}`. The color count is
    /// preserved.
    pub fn induced_subcoloring(&self, vertices: &[usize]) -> Result<EdgeColoring> {
        if vertices.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut seen = vec![false; self.vertex_count];
        for &v in vertices {
            if v >= self.vertex_count {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    vertex_count: self.vertex_count,
                });
            }
            if seen[v] {
                return Err(Error::DuplicateVertex { vertex: v });
            }
            seen[v] = true;
        }
        EdgeColoring::from_fn(vertices.len(), self.color_count, |i, j| {
            self.color(vertices[i], vertices[j])
        })
    }

    /// Renames colors through a permutation of `1..=color_count`;
    /// `perm[i]` is the new name of color `i + 1`.
    pub fn relabel_colors(&self, perm: &[u16]) -> Result<EdgeColoring> {
        let n = self.color_count;
        if perm.len() != n as usize {
            return Err(Error::NotAPermutation { color_count: n });
        }
        let mut seen = vec![false; n as usize];
        for &p in perm {
            if p == 0 || p > n || seen[(p - 1) as usize] {
                return Err(Error::NotAPermutation { color_count: n });
            }
            seen[(p - 1) as usize] = true;
        }
        EdgeColoring::from_fn(self.vertex_count, n, |u, v| {
            perm[(self.color(u, v) - 1) as usize]
        })
    }

    /// Same coloring declared over a palette of `color_count` colors. Fails
    /// if some edge uses a color above the new count. Used to widen a
    /// palette before relabeling into a disjoint range.
    pub fn with_color_count(&self, color_count: u16) -> Result<EdgeColoring> {
        if color_count == 0 {
            return Err(Error::NoColors);
        }
        if let Some(&max_used) = self
            .colors
            .iter()
            .filter(|&&c| c != 0)
            .max()
        {
            if max_used > color_count {
                return Err(Error::ColorOutOfRange {
                    color: max_used as u32,
                    color_count,
                });
            }
        }
        let mut out = self.clone();
        out.color_count = color_count;
        Ok(out)
    }

    /// All unordered pairs `(u, v)` with `u < v` in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let s = self.vertex_count;
        (0..s).flat_map(move |u| ((u + 1)..s).map(move |v| (u, v)))
    }

    fn check_color(&self, color: u16) -> Result<()> {
        if color == 0 || color > self.color_count {
            return Err(Error::ColorOutOfRange {
                color: color as u32,
                color_count: self.color_count,
            });
        }
        Ok(())
    }
}

/// Forbidden monochromatic clique sizes, one per color: entry `i` forbids a
/// monochromatic `K_{k_i}` in color `i + 1`. Every entry is at least 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringSpec {
    forbidden: Vec<usize>,
}

impl ColoringSpec {
    pub fn new(forbidden: Vec<usize>) -> Result<ColoringSpec> {
        for (index, &value) in forbidden.iter().enumerate() {
            if value < 2 {
                return Err(Error::SpecEntryTooSmall { index, value });
            }
        }
        Ok(ColoringSpec { forbidden })
    }

    /// The diagonal spec `(k, ..., k)` over `colors` colors.
    pub fn uniform(colors: u16, k: usize) -> Result<ColoringSpec> {
        ColoringSpec::new(vec![k; colors as usize])
    }

    pub fn len(&self) -> usize {
        self.forbidden.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forbidden.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.forbidden
    }

    /// Spec with entries moved by the same color permutation used in
    /// [`EdgeColoring::relabel_colors`]: the bound that followed color `i`
    /// now follows color `perm[i - 1]`.
    pub fn permuted(&self, perm: &[u16]) -> Result<ColoringSpec> {
        if perm.len() != self.forbidden.len() {
            return Err(Error::NotAPermutation {
                color_count: self.forbidden.len() as u16,
            });
        }
        let mut out = vec![0usize; self.forbidden.len()];
        for (i, &p) in perm.iter().enumerate() {
            if p == 0 || p as usize > out.len() || out[(p - 1) as usize] != 0 {
                return Err(Error::NotAPermutation {
                    color_count: self.forbidden.len() as u16,
                });
            }
            out[(p - 1) as usize] = self.forbidden[i];
        }
        ColoringSpec::new(out)
    }
}

/// Exact per-color verification outcome: the maximum monochromatic clique
/// in each color class together with one witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorMaxClique {
    pub color: u16,
    pub max_clique: usize,
    pub witness: Vec<usize>,
}

/// Result of checking a coloring against a [`ColoringSpec`]. Carries exact
/// maxima, not just the verdict, so it doubles as a certificate payload.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub spec: ColoringSpec,
    pub entries: Vec<ColorMaxClique>,
    pub pass: bool,
}

/// Checks a coloring against a spec by computing the exact maximum
/// monochromatic clique of every color class. Passes iff every maximum is
/// strictly below the corresponding forbidden size.
///
/// With `cfg.threads > 1` the color classes are solved on worker threads;
/// the report is identical to the sequential one.
pub fn validate_coloring(
    c: &EdgeColoring,
    spec: &ColoringSpec,
    cfg: &Config,
) -> Result<VerificationReport> {
    if spec.len() != c.color_count() as usize {
        return Err(Error::SpecLengthMismatch {
            spec_len: spec.len(),
            color_count: c.color_count(),
        });
    }
    let colors: Vec<u16> = (1..=c.color_count()).collect();
    let results = solve_color_classes(c, &colors, cfg)?;
    let entries: Vec<ColorMaxClique> = colors
        .iter()
        .zip(results)
        .map(|(&color, r)| ColorMaxClique {
            color,
            max_clique: r.size,
            witness: r.witness,
        })
        .collect();
    let pass = entries
        .iter()
        .zip(spec.values())
        .all(|(e, &k)| e.max_clique < k);
    Ok(VerificationReport {
        spec: spec.clone(),
        entries,
        pass,
    })
}

fn solve_color_classes(
    c: &EdgeColoring,
    colors: &[u16],
    cfg: &Config,
) -> Result<Vec<solvers::SearchResult>> {
    let workers = cfg.threads.max(1).min(colors.len().max(1));
    if workers <= 1 || colors.len() <= 1 {
        return colors
            .iter()
            .map(|&color| solvers::max_clique_in_color(c, color, cfg))
            .collect();
    }
    let mut slots: Vec<Option<Result<solvers::SearchResult>>> =
        (0..colors.len()).map(|_| None).collect();
    std::thread::scope(|scope| {
        let mut handles = Vec::with_capacity(workers);
        for w in 0..workers {
            handles.push(scope.spawn(move || {
                let mut out = Vec::new();
                let mut idx = w;
                while idx < colors.len() {
                    out.push((idx, solvers::max_clique_in_color(c, colors[idx], cfg)));
                    idx += workers;
                }
                out
            }));
        }
        for handle in handles {
            for (idx, res) in handle.join().expect("verification worker panicked") {
                slots[idx] = Some(res);
            }
        }
    });
    // Merge in color order so the outcome is independent of scheduling.
    slots
        .into_iter()
        .map(|slot| slot.expect("every color solved"))
        .collect()
}

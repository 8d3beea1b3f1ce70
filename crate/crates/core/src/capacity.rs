//! Capacity lower-bound pipeline over strong powers, the product upper-bound
//! cross-check, majority-neighborhood extraction, and the bound arithmetic.

use crate::coloring::{ColoringSpec, EdgeColoring};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io;
use crate::products;
use crate::solvers;

/// One row of capacity evidence: the exact independence number of the
/// `power`-th strong power and its `power`-th root.
#[derive(Clone, Debug, PartialEq)]
pub struct CapacityRow {
    pub power: u32,
    pub alpha: usize,
    pub root: f64,
}

/// Capacity lower-bound evidence for one graph. Every row's root is a valid
/// lower bound on the capacity because the alpha sequence is
/// supermultiplicative; `best` is the largest root seen. When a cap stopped
/// the climb early, `truncated_at` names the first power that was refused.
#[derive(Clone, Debug, PartialEq)]
pub struct CapacityBound {
    /// Hash of the graph's canonical serialization.
    pub graph_id: String,
    pub rows: Vec<CapacityRow>,
    pub best: f64,
    pub truncated_at: Option<u32>,
}

/// Computes exact `alpha(G^p)` for `p = 1..=max_power` together with the
/// roots `alpha^(1/p)`. A cap hit at some power returns the completed rows
/// with an explicit truncation marker rather than an error.
pub fn capacity_lower_bound(g: &Graph, max_power: u32, cfg: &Config) -> Result<CapacityBound> {
    if max_power == 0 {
        return Err(Error::ZeroPower);
    }
    let graph_id = io::object_hash(io::graph_to_string(g).as_bytes());
    let base = g.vertex_count();
    let mut rows: Vec<CapacityRow> = Vec::new();
    let mut truncated_at = None;
    let mut power_graph = g.clone();
    for power in 1..=max_power {
        if power > 1 {
            let next = (power_graph.vertex_count() as u128) * base as u128;
            if next > cfg.graph_power_cap as u128 {
                truncated_at = Some(power);
                break;
            }
            power_graph = products::strong_product(&power_graph, g);
        }
        let alpha = match solvers::max_independent_set(&power_graph, cfg) {
            Ok(result) => result.size,
            Err(Error::CapExceeded { .. }) => {
                truncated_at = Some(power);
                break;
            }
            Err(e) => return Err(e),
        };
        if let Some(prev) = rows.last() {
            let floor = prev.alpha * rows[0].alpha;
            assert!(
                alpha >= floor,
                "alpha sequence lost supermultiplicativity at power {power}: {alpha} < {floor}"
            );
        }
        rows.push(CapacityRow {
            power,
            alpha,
            root: (alpha as f64).powf(1.0 / power as f64),
        });
    }
    let best = rows.iter().map(|r| r.root).fold(0.0, f64::max);
    Ok(CapacityBound {
        graph_id,
        rows,
        best,
        truncated_at,
    })
}

/// Cross-check of the product upper bound: true iff the exact independence
/// number of the strong product is strictly below the supplied Ramsey value
/// `R(alpha(G_1)+1, ..., alpha(G_n)+1)`. A false return means either a
/// solver bug or a wrong supplied value.
pub fn emt_upper_bound_check(graphs: &[Graph], ramsey_value: usize, cfg: &Config) -> Result<bool> {
    assert!(!graphs.is_empty(), "need at least one factor");
    let mut product = graphs[0].clone();
    for g in &graphs[1..] {
        product = products::strong_product(&product, g);
    }
    let alpha = solvers::max_independent_set(&product, cfg)?;
    Ok(alpha.size < ramsey_value)
}

/// A vertex together with its largest single-color neighborhood.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MajorityNeighborhood {
    pub vertex: usize,
    pub color: u16,
    /// The neighbors joined to `vertex` in `color`, sorted ascending. Never
    /// induces an edge of that color when the input is triangle-free per
    /// color.
    pub members: Vec<usize>,
}

/// Finds the vertex/color pair with the most same-colored neighbors in a
/// coloring that is triangle-free in every color. Ties break toward the
/// lowest vertex, then the lowest color. By pigeonhole the returned set has
/// at least `ceil((s-1)/n)` members, and it induces no edge of the chosen
/// color, so (after moving it to the front and renaming its color to 1) it
/// is ready-made input for the two-block construction.
pub fn majority_neighborhood(c: &EdgeColoring, cfg: &Config) -> Result<MajorityNeighborhood> {
    let s = c.vertex_count();
    let n = c.color_count();
    let spec = ColoringSpec::uniform(n, 3).expect("3 is a valid clique bound");
    let report = crate::coloring::validate_coloring(c, &spec, cfg)?;
    if let Some(entry) = report.entries.iter().find(|e| e.max_clique >= 3) {
        return Err(Error::InputViolatesSpec {
            color: entry.color,
            witness: entry.witness.clone(),
        });
    }

    let mut counts = vec![vec![0usize; n as usize]; s];
    for (u, v) in c.pairs() {
        let idx = (c.color(u, v) - 1) as usize;
        counts[u][idx] += 1;
        counts[v][idx] += 1;
    }
    let (mut best_vertex, mut best_color, mut best_count) = (0usize, 1u16, counts[0][0]);
    for (v, per_color) in counts.iter().enumerate() {
        for (idx, &count) in per_color.iter().enumerate() {
            if count > best_count {
                best_vertex = v;
                best_color = idx as u16 + 1;
                best_count = count;
            }
        }
    }
    let members: Vec<usize> = (0..s)
        .filter(|&u| u != best_vertex && c.color(best_vertex, u) == best_color)
        .collect();
    debug_assert_eq!(members.len(), best_count);
    let guarantee = (s - 1).div_ceil(n as usize);
    assert!(
        members.len() >= guarantee,
        "pigeonhole guarantee violated: {} < {guarantee}",
        members.len()
    );
    debug_assert!(members.iter().enumerate().all(|(i, &u)| {
        members[i + 1..]
            .iter()
            .all(|&w| c.color(u, w) != best_color)
    }));
    Ok(MajorityNeighborhood {
        vertex: best_vertex,
        color: best_color,
        members,
    })
}

/// The two-block bound value `s^2 + m*t + 1`.
pub fn theorem2_bound(s: u64, m: u64, t: u64) -> u64 {
    assert!(m <= s, "block size m must not exceed s");
    s.checked_mul(s)
        .and_then(|sq| m.checked_mul(t).and_then(|mt| sq.checked_add(mt)))
        .and_then(|v| v.checked_add(1))
        .expect("bound arithmetic overflow")
}

/// The recurrence bound on `R_{2n}(3)` from supplied values of `R_n(3)` and
/// `R_{n-1}(3)`: returns `(m, (r_n - 1)^2 + m*(r_{n-1} - 1) + 1)` with
/// `m = ceil((r_n - 2) / n)`. The Ramsey values are caller-supplied inputs
/// and should carry provenance in any report built from the result.
pub fn corollary_bound(r_n: u64, r_n_minus_1: u64, n: u64) -> (u64, u64) {
    assert!(r_n >= 3 && r_n_minus_1 >= 3, "Ramsey values must be at least 3");
    assert!(n >= 2, "n must be at least 2");
    let m = (r_n - 2).div_ceil(n);
    let side = r_n - 1;
    let bound = side * side + m * (r_n_minus_1 - 1) + 1;
    (m, bound)
}

/// Inputs and outcome of a bound computation, ready for certification.
/// External Ramsey values are never hard-coded: they arrive as inputs and
/// every one should be covered by a provenance note.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub s: u64,
    pub m: u64,
    pub t: u64,
    /// Color count of the base coloring; the certified claim concerns
    /// twice this many colors.
    pub colors: u16,
    pub k: usize,
    /// `s^2 + m*t + 1`, exact integer arithmetic.
    pub bound: u64,
    pub corollary: Option<CorollaryArithmetic>,
    pub provenance: Vec<String>,
}

/// The recurrence arithmetic attached to a [`BoundReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryArithmetic {
    pub r_n: u64,
    pub r_n_minus_1: u64,
    pub n: u64,
    pub m: u64,
    pub bound: u64,
}

impl BoundReport {
    pub fn new(s: u64, m: u64, t: u64, colors: u16, k: usize) -> BoundReport {
        BoundReport {
            s,
            m,
            t,
            colors,
            k,
            bound: theorem2_bound(s, m, t),
            corollary: None,
            provenance: Vec::new(),
        }
    }

    pub fn with_corollary(mut self, r_n: u64, r_n_minus_1: u64, n: u64) -> BoundReport {
        let (m, bound) = corollary_bound(r_n, r_n_minus_1, n);
        self.corollary = Some(CorollaryArithmetic {
            r_n,
            r_n_minus_1,
            n,
            m,
            bound,
        });
        self
    }

    pub fn with_provenance(mut self, notes: Vec<String>) -> BoundReport {
        self.provenance = notes;
        self
    }

    /// The certified claim, e.g. `R_4(3) >= 30`.
    pub fn claim(&self) -> String {
        format!("R_{}({}) >= {}", 2 * self.colors as u64, self.k, self.bound)
    }
}

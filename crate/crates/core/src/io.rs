//! File formats and certificate persistence.
//!
//! Both object formats are plain text and canonical on write, so a
//! write/read/write round trip is byte-identical:
//!
//! - colorings: a header line `s n`, then `s - 1` lines where line `i`
//!   (0-based) lists the colors of `{i, j}` for `j > i`, single-space
//!   separated, newline-terminated, no trailing spaces;
//! - graphs: a header line `p <vertices> <edges>`, then one `e u v` line
//!   per edge with 0-based endpoints, `u < v`, in lexicographic order.
//!
//! Certificates are line-oriented records with a fixed field order and a
//! leading `certver 1` version line; they embed the object hash so third
//! parties can re-verify the serialized object independently.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::capacity::BoundReport;
use crate::coloring::{EdgeColoring, VerificationReport};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solvers::SearchResult;

/// Version string embedded in certificates.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Lowercase hex SHA-256 of a canonical serialization.
pub fn object_hash(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut out = String::with_capacity(64);
    for byte in digest {
        write!(out, "{byte:02x}").expect("writing to String cannot fail");
    }
    out
}

// ---------------------------------------------------------------------------
// Colorings
// ---------------------------------------------------------------------------

/// Canonical text form of a coloring.
pub fn coloring_to_string(c: &EdgeColoring) -> String {
    let s = c.vertex_count();
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", s, c.color_count());
    for u in 0..s.saturating_sub(1) {
        for v in (u + 1)..s {
            if v > u + 1 {
                out.push(' ');
            }
            let _ = write!(out, "{}", c.color(u, v));
        }
        out.push('\n');
    }
    out
}

pub fn write_coloring(c: &EdgeColoring, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, coloring_to_string(c)).map_err(|e| Error::io(path, e))
}

pub fn read_coloring(path: impl AsRef<Path>) -> Result<EdgeColoring> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_coloring(&text)
}

/// Parses the coloring format; errors carry 1-based line numbers.
pub fn parse_coloring(text: &str) -> Result<EdgeColoring> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::format(1, "missing header, expected `s n`"))?;
    let mut parts = header.split_ascii_whitespace();
    let s: usize = parts
        .next()
        .and_then(|tok| tok.parse().ok())
        .filter(|&s| s >= 1)
        .ok_or_else(|| Error::format(1, "malformed header, expected `s n` with s >= 1"))?;
    let n: u16 = parts
        .next()
        .and_then(|tok| tok.parse().ok())
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::format(1, "malformed header, expected `s n` with n >= 1"))?;
    if parts.next().is_some() {
        return Err(Error::format(1, "trailing tokens after header"));
    }

    let mut upper: Vec<u16> = Vec::with_capacity(s * s.saturating_sub(1) / 2);
    for i in 0..s.saturating_sub(1) {
        let line_no = i + 2;
        let (_, line) = lines
            .next()
            .ok_or_else(|| Error::format(line_no, format!("missing row for vertex {i}")))?;
        let expected = s - 1 - i;
        let mut count = 0usize;
        for tok in line.split_ascii_whitespace() {
            let color: u16 = tok.parse().map_err(|_| {
                Error::format(line_no, format!("invalid color token {tok:?}"))
            })?;
            if color == 0 || color > n {
                return Err(Error::format(
                    line_no,
                    format!("color {color} out of range 1..={n}"),
                ));
            }
            upper.push(color);
            count += 1;
        }
        if count != expected {
            return Err(Error::format(
                line_no,
                format!("row has {count} colors, expected {expected}"),
            ));
        }
    }
    if let Some((idx, line)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(Error::format(
            idx + 1,
            format!("unexpected content {line:?} after coloring rows"),
        ));
    }
    EdgeColoring::from_upper_triangle(s, n, &upper)
}

// ---------------------------------------------------------------------------
// Graphs
// ---------------------------------------------------------------------------

/// Canonical text form of a graph.
pub fn graph_to_string(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p {} {}", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

pub fn write_graph(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, graph_to_string(g)).map_err(|e| Error::io(path, e))
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_graph(&text)
}

/// Parses the edge-list format; errors carry 1-based line numbers.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::format(1, "missing header, expected `p <vertices> <edges>`"))?;
    let mut parts = header.split_ascii_whitespace();
    if parts.next() != Some("p") {
        return Err(Error::format(1, "malformed header, expected `p <vertices> <edges>`"));
    }
    let vertices: usize = parts
        .next()
        .and_then(|tok| tok.parse().ok())
        .filter(|&v| v >= 1)
        .ok_or_else(|| Error::format(1, "malformed vertex count in header"))?;
    let edge_count: usize = parts
        .next()
        .and_then(|tok| tok.parse().ok())
        .ok_or_else(|| Error::format(1, "malformed edge count in header"))?;
    if parts.next().is_some() {
        return Err(Error::format(1, "trailing tokens after header"));
    }

    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(edge_count);
    let mut seen = std::collections::HashSet::new();
    for k in 0..edge_count {
        let line_no = k + 2;
        let (_, line) = lines
            .next()
            .ok_or_else(|| {
                Error::format(line_no, format!("expected {edge_count} edges, found {k}"))
            })?;
        let mut parts = line.split_ascii_whitespace();
        if parts.next() != Some("e") {
            return Err(Error::format(line_no, "malformed edge line, expected `e u v`"));
        }
        let u: usize = parts
            .next()
            .and_then(|tok| tok.parse().ok())
            .ok_or_else(|| Error::format(line_no, "malformed edge endpoint"))?;
        let v: usize = parts
            .next()
            .and_then(|tok| tok.parse().ok())
            .ok_or_else(|| Error::format(line_no, "malformed edge endpoint"))?;
        if parts.next().is_some() {
            return Err(Error::format(line_no, "trailing tokens after edge"));
        }
        if u == v {
            return Err(Error::format(line_no, format!("self-loop at vertex {u}")));
        }
        if u >= vertices || v >= vertices {
            return Err(Error::format(
                line_no,
                format!("edge endpoint out of range 0..{vertices}"),
            ));
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(Error::format(
                line_no,
                format!("duplicate edge {{{},{}}}", key.0, key.1),
            ));
        }
        edges.push(key);
    }
    if let Some((idx, line)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return Err(Error::format(
            idx + 1,
            format!("unexpected content {line:?} after edge list"),
        ));
    }
    Graph::from_edges(vertices, &edges)
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertKind {
    ColoringValidity,
    AlphaValue,
    Bound,
}

impl CertKind {
    fn label(self) -> &'static str {
        match self {
            CertKind::ColoringValidity => "coloring-validity",
            CertKind::AlphaValue => "alpha-value",
            CertKind::Bound => "bound",
        }
    }
}

/// Kind-specific certificate payload.
#[derive(Clone, Debug)]
pub enum CertBody {
    Coloring {
        vertices: usize,
        colors: u16,
        report: VerificationReport,
    },
    Alpha {
        vertices: usize,
        result: SearchResult,
    },
    Bound {
        report: BoundReport,
        /// Verification of the constructed object, when one exists.
        verification: Option<(usize, VerificationReport)>,
    },
}

/// A self-contained, re-verifiable record of a claim: the hash of the
/// object it concerns, the claim, and the verification evidence produced by
/// this process. Serialization is deterministic; re-running the same
/// pipeline reproduces the same bytes.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub kind: CertKind,
    pub object_hash: String,
    pub claim: String,
    pub body: CertBody,
    pub tool_version: String,
    pub provenance: Vec<String>,
}

impl Certificate {
    pub fn new(kind: CertKind, object_hash: String, claim: String, body: CertBody) -> Certificate {
        Certificate {
            kind,
            object_hash,
            claim,
            body,
            tool_version: TOOL_VERSION.to_string(),
            provenance: Vec::new(),
        }
    }

    pub fn with_provenance(mut self, notes: Vec<String>) -> Certificate {
        self.provenance = notes;
        self
    }
}

fn write_verification(out: &mut String, report: &VerificationReport) {
    let _ = write!(out, "spec");
    for k in report.spec.values() {
        let _ = write!(out, " {k}");
    }
    out.push('\n');
    for entry in &report.entries {
        let _ = write!(out, "color {} max-clique {} witness", entry.color, entry.max_clique);
        for v in &entry.witness {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    let _ = writeln!(out, "verdict {}", if report.pass { "pass" } else { "fail" });
}

/// Renders a certificate in its stable line order.
pub fn certificate_to_string(cert: &Certificate) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "certver 1");
    let _ = writeln!(out, "tool ramsey-forge {}", cert.tool_version);
    let _ = writeln!(out, "kind {}", cert.kind.label());
    let _ = writeln!(out, "object sha256 {}", cert.object_hash);
    let _ = writeln!(out, "claim {}", cert.claim);
    match &cert.body {
        CertBody::Coloring {
            vertices,
            colors,
            report,
        } => {
            let _ = writeln!(out, "vertices {vertices}");
            let _ = writeln!(out, "colors {colors}");
            write_verification(&mut out, report);
        }
        CertBody::Alpha { vertices, result } => {
            let _ = writeln!(out, "vertices {vertices}");
            let _ = writeln!(out, "alpha {}", result.size);
            let _ = write!(out, "witness");
            for v in &result.witness {
                let _ = write!(out, " {v}");
            }
            out.push('\n');
        }
        CertBody::Bound {
            report,
            verification,
        } => {
            let _ = writeln!(out, "s {}", report.s);
            let _ = writeln!(out, "m {}", report.m);
            let _ = writeln!(out, "t {}", report.t);
            let _ = writeln!(out, "colors {}", report.colors);
            let _ = writeln!(out, "k {}", report.k);
            let _ = writeln!(out, "theorem2-bound {}", report.bound);
            if let Some(cor) = &report.corollary {
                let _ = writeln!(
                    out,
                    "corollary rn {} rn1 {} n {} m {} bound {}",
                    cor.r_n, cor.r_n_minus_1, cor.n, cor.m, cor.bound
                );
            }
            if let Some((vertices, report)) = verification {
                let _ = writeln!(out, "vertices {vertices}");
                write_verification(&mut out, report);
            }
        }
    }
    for note in &cert.provenance {
        let _ = writeln!(out, "provenance {note}");
    }
    out.push_str("end\n");
    out
}

pub fn write_certificate(cert: &Certificate, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, certificate_to_string(cert)).map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::coloring::ColoringSpec;
    use crate::config::Config;

    #[test]
    fn coloring_round_trip_is_identity() {
        let c = catalog::generate_k5_two_coloring();
        let text = coloring_to_string(&c);
        let back = parse_coloring(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(coloring_to_string(&back), text);
    }

    #[test]
    fn k5_coloring_text_is_stable() {
        let text = coloring_to_string(&catalog::generate_k5_two_coloring());
        assert_eq!(text, "5 2\n1 2 2 1\n1 2 2\n1 2\n1\n");
    }

    #[test]
    fn single_vertex_coloring_round_trips() {
        let c = EdgeColoring::from_fn(1, 3, |_, _| unreachable!()).unwrap();
        let text = coloring_to_string(&c);
        assert_eq!(text, "1 3\n");
        assert_eq!(parse_coloring(&text).unwrap(), c);
    }

    #[test]
    fn coloring_parse_rejects_color_out_of_range() {
        let err = parse_coloring("5 2\n1 2 2 1\n1 3 2\n1 2\n1\n").unwrap_err();
        match err {
            Error::Format { line, message } => {
                assert_eq!(line, 3);
                assert!(message.contains("color 3"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn coloring_parse_rejects_short_row() {
        let err = parse_coloring("5 2\n1 2 2\n1 2 2\n1 2\n1\n").unwrap_err();
        assert!(matches!(err, Error::Format { line: 2, .. }));
    }

    #[test]
    fn coloring_parse_rejects_empty_file() {
        let err = parse_coloring("").unwrap_err();
        assert!(matches!(err, Error::Format { line: 1, .. }));
    }

    #[test]
    fn coloring_parse_rejects_trailing_rows() {
        let err = parse_coloring("2 1\n1\n1\n").unwrap_err();
        assert!(matches!(err, Error::Format { line: 3, .. }));
    }

    #[test]
    fn graph_round_trip_is_identity() {
        let g = catalog::generate_cycle(5).unwrap();
        let text = graph_to_string(&g);
        assert_eq!(text, "p 5 5\ne 0 1\ne 0 4\ne 1 2\ne 2 3\ne 3 4\n");
        let back = parse_graph(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(graph_to_string(&back), text);
    }

    #[test]
    fn graph_parse_rejects_self_loop() {
        let err = parse_graph("p 3 1\ne 2 2\n").unwrap_err();
        match err {
            Error::Format { line, message } => {
                assert_eq!(line, 2);
                assert!(message.contains("self-loop"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn graph_parse_rejects_duplicate_edge() {
        let err = parse_graph("p 3 2\ne 0 1\ne 1 0\n").unwrap_err();
        match err {
            Error::Format { line, message } => {
                assert_eq!(line, 3);
                assert!(message.contains("duplicate"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn graph_parse_rejects_count_mismatch() {
        let err = parse_graph("p 3 2\ne 0 1\n").unwrap_err();
        assert!(matches!(err, Error::Format { line: 3, .. }));
        let err = parse_graph("p 3 1\ne 0 1\ne 1 2\n").unwrap_err();
        assert!(matches!(err, Error::Format { line: 3, .. }));
    }

    #[test]
    fn files_round_trip_on_disk() {
        let dir = tempfile::tempdir().unwrap();
        let cpath = dir.path().join("k5.col");
        let gpath = dir.path().join("c5.g");
        let c = catalog::generate_k5_two_coloring();
        let g = catalog::generate_cycle(5).unwrap();
        write_coloring(&c, &cpath).unwrap();
        write_graph(&g, &gpath).unwrap();
        assert_eq!(read_coloring(&cpath).unwrap(), c);
        assert_eq!(read_graph(&gpath).unwrap(), g);
    }

    #[test]
    fn missing_file_reports_path() {
        let err = read_coloring("/nonexistent/k5.col").unwrap_err();
        assert!(matches!(err, Error::Io { .. }));
    }

    #[test]
    fn object_hash_matches_sha256_test_vector() {
        assert_eq!(
            object_hash(b""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
        assert_eq!(
            object_hash(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }

    #[test]
    fn certificate_layout_is_stable() {
        let c = catalog::generate_k5_two_coloring();
        let spec = ColoringSpec::new(vec![3, 3]).unwrap();
        let report = crate::coloring::validate_coloring(&c, &spec, &Config::default()).unwrap();
        let cert = Certificate::new(
            CertKind::ColoringValidity,
            object_hash(coloring_to_string(&c).as_bytes()),
            "(3,3;5)-coloring verified".to_string(),
            CertBody::Coloring {
                vertices: 5,
                colors: 2,
                report,
            },
        )
        .with_provenance(vec!["catalog:k5-two-coloring".to_string()]);
        let text = certificate_to_string(&cert);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "certver 1");
        assert_eq!(lines[1], format!("tool ramsey-forge {TOOL_VERSION}"));
        assert_eq!(lines[2], "kind coloring-validity");
        assert!(lines[3].starts_with("object sha256 "));
        assert_eq!(lines[4], "claim (3,3;5)-coloring verified");
        assert_eq!(lines[5], "vertices 5");
        assert_eq!(lines[6], "colors 2");
        assert_eq!(lines[7], "spec 3 3");
        assert!(lines[8].starts_with("color 1 max-clique 2 witness "));
        assert!(lines[9].starts_with("color 2 max-clique 2 witness "));
        assert_eq!(lines[10], "verdict pass");
        assert_eq!(lines[11], "provenance catalog:k5-two-coloring");
        assert_eq!(lines[12], "end");
    }

    #[test]
    fn certificate_write_fails_on_bad_path() {
        let cert = Certificate::new(
            CertKind::Bound,
            object_hash(b"x"),
            "test".to_string(),
            CertBody::Bound {
                report: crate::capacity::BoundReport::new(5, 2, 2, 2, 3),
                verification: None,
            },
        );
        assert!(matches!(
            write_certificate(&cert, "/nonexistent/dir/cert.txt"),
            Err(Error::Io { .. })
        ));
    }
}

//! Command-line pipelines: generate catalog objects, run constructions,
//! verify colorings, compute capacity evidence, and write certificates.
//!
//! Exit codes: 0 success, 1 a requested verification failed, 2 usage or
//! input error, 3 a configured size cap was exceeded.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ramsey_forge::capacity::{self, BoundReport};
use ramsey_forge::coloring::{self, VerificationReport};
use ramsey_forge::config::Config;
use ramsey_forge::error::Error;
use ramsey_forge::io::{self, CertBody, CertKind, Certificate};
use ramsey_forge::{catalog, products, solvers, ColoringSpec};

#[derive(Parser)]
#[command(
    name = "ramsey-forge",
    version,
    about = "Construct, compose, and certify Ramsey lower-bound edge colorings \
             and capacity lower bounds from exact independence-number search",
    after_help = "The RAMSEY_FORGE_CAP environment variable overrides every \
                  vertex-count cap at once."
)]
struct Cli {
    /// Worker threads for per-color verification. Results are identical for
    /// any value; the default keeps timing-sensitive logs reproducible.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a coloring against forbidden clique sizes, one per color.
    Verify {
        /// Coloring file.
        coloring: PathBuf,
        /// Comma-separated forbidden clique sizes, e.g. `3,3`.
        #[arg(long, value_delimiter = ',', required = true)]
        spec: Vec<usize>,
        #[command(flatten)]
        cert: CertArgs,
    },
    /// Build a product, power, two-block construction, or graph family.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Exact independence number of a graph.
    Alpha {
        /// Graph file.
        graph: PathBuf,
        #[command(flatten)]
        cert: CertArgs,
    },
    /// Capacity lower-bound table alpha(G^n)^(1/n) for n up to a limit.
    Capacity {
        /// Graph file.
        graph: PathBuf,
        #[arg(long, value_name = "N")]
        max_power: u32,
    },
    /// Bound arithmetic from explicit inputs; no Ramsey value is assumed.
    Bound {
        /// s m t: computes s^2 + m*t + 1.
        #[arg(long, num_args = 3, value_names = ["S", "M", "T"], conflicts_with = "corollary")]
        theorem2: Option<Vec<u64>>,
        /// R_n(3) R_{n-1}(3) n: computes m and the recurrence bound.
        #[arg(long, num_args = 3, value_names = ["RN", "RN1", "N"])]
        corollary: Option<Vec<u64>>,
        /// Base color count for the certified claim (theorem2 cert only).
        #[arg(long, requires = "theorem2")]
        colors: Option<u16>,
        /// Forbidden clique size for the certified claim (theorem2 cert only).
        #[arg(long, requires = "theorem2")]
        k: Option<usize>,
        #[command(flatten)]
        cert: CertArgs,
    },
    /// Emit a catalog object (to stdout unless --out is given).
    Catalog {
        #[command(subcommand)]
        object: CatalogObject,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Strong product of two graphs.
    StrongProduct {
        #[arg(long)]
        g1: PathBuf,
        #[arg(long)]
        g2: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// n-fold strong power of a graph.
    Power {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Composition product of two graphs or two colorings.
    Composition {
        /// Two graph files: base, then inner.
        #[arg(long, num_args = 2, value_names = ["G", "H"], conflicts_with = "colorings")]
        graphs: Option<Vec<PathBuf>>,
        /// Two coloring files: base, then inner.
        #[arg(long, num_args = 2, value_names = ["G", "H"])]
        colorings: Option<Vec<PathBuf>>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Two-block witness on s^2 + m*t vertices from a valid n-coloring g
    /// (first m vertices free of color-1 edges) and helper coloring h.
    /// The output is auto-verified and the certified bound printed.
    Theorem2 {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        h: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        cert: CertArgs,
    },
    /// One graph per color: edge iff the coloring differs from that color.
    Emt {
        #[arg(long)]
        coloring: PathBuf,
        /// Graphs are written to <prefix>_<color>.g.
        #[arg(long)]
        out_prefix: String,
    },
}

#[derive(Subcommand)]
enum CatalogObject {
    /// Cycle graph on n vertices.
    Cycle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The 2-colored K_5 with color 1 on the pentagon.
    K5 {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The 3-colored K_16 over GF(16) cubic-residue cosets.
    Gf16 {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct CertArgs {
    /// Write a certificate of the outcome to this path.
    #[arg(long)]
    cert: Option<PathBuf>,
    /// Provenance note recorded in the certificate; repeatable.
    #[arg(long)]
    provenance: Vec<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match Config::from_env() {
        Ok(cfg) => cfg.with_threads(cli.threads),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match run(cli.command, &cfg) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::CapExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(command: Command, cfg: &Config) -> Result<ExitCode, Error> {
    match command {
        Command::Verify {
            coloring,
            spec,
            cert,
        } => cmd_verify(&coloring, &spec, &cert, cfg),
        Command::Construct { kind } => cmd_construct(kind, cfg),
        Command::Alpha { graph, cert } => cmd_alpha(&graph, &cert, cfg),
        Command::Capacity { graph, max_power } => cmd_capacity(&graph, max_power, cfg),
        Command::Bound {
            theorem2,
            corollary,
            colors,
            k,
            cert,
        } => cmd_bound(theorem2, corollary, colors, k, &cert),
        Command::Catalog { object } => cmd_catalog(object),
    }
}

fn print_verification(report: &VerificationReport) {
    for entry in &report.entries {
        print!("color {} max-clique {} witness", entry.color, entry.max_clique);
        for v in &entry.witness {
            print!(" {v}");
        }
        println!();
    }
    println!("verdict {}", if report.pass { "pass" } else { "fail" });
}

fn spec_claim(spec: &[usize], vertices: usize, pass: bool) -> String {
    let sizes: Vec<String> = spec.iter().map(usize::to_string).collect();
    format!(
        "({};{})-coloring {}",
        sizes.join(","),
        vertices,
        if pass { "verified" } else { "refuted" }
    )
}

fn cmd_verify(
    path: &Path,
    spec: &[usize],
    cert: &CertArgs,
    cfg: &Config,
) -> Result<ExitCode, Error> {
    let c = io::read_coloring(path)?;
    let spec = ColoringSpec::new(spec.to_vec())?;
    let report = coloring::validate_coloring(&c, &spec, cfg)?;
    print_verification(&report);
    if let Some(cert_path) = &cert.cert {
        let certificate = Certificate::new(
            CertKind::ColoringValidity,
            io::object_hash(io::coloring_to_string(&c).as_bytes()),
            spec_claim(spec.values(), c.vertex_count(), report.pass),
            CertBody::Coloring {
                vertices: c.vertex_count(),
                colors: c.color_count(),
                report: report.clone(),
            },
        )
        .with_provenance(cert.provenance.clone());
        io::write_certificate(&certificate, cert_path)?;
        println!("certificate written to {}", cert_path.display());
    }
    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_alpha(path: &Path, cert: &CertArgs, cfg: &Config) -> Result<ExitCode, Error> {
    let g = io::read_graph(path)?;
    let result = solvers::max_independent_set(&g, cfg)?;
    println!("alpha {}", result.size);
    print!("witness");
    for v in &result.witness {
        print!(" {v}");
    }
    println!();
    if let Some(cert_path) = &cert.cert {
        let certificate = Certificate::new(
            CertKind::AlphaValue,
            io::object_hash(io::graph_to_string(&g).as_bytes()),
            format!("alpha = {}", result.size),
            CertBody::Alpha {
                vertices: g.vertex_count(),
                result,
            },
        )
        .with_provenance(cert.provenance.clone());
        io::write_certificate(&certificate, cert_path)?;
        println!("certificate written to {}", cert_path.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_capacity(path: &Path, max_power: u32, cfg: &Config) -> Result<ExitCode, Error> {
    let g = io::read_graph(path)?;
    let bound = capacity::capacity_lower_bound(&g, max_power, cfg)?;
    for row in &bound.rows {
        println!("n {} alpha {} root {:.12}", row.power, row.alpha, row.root);
    }
    println!("best {:.12}", bound.best);
    if let Some(power) = bound.truncated_at {
        println!("truncated at power {power}: cap exceeded");
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bound(
    theorem2: Option<Vec<u64>>,
    corollary: Option<Vec<u64>>,
    colors: Option<u16>,
    k: Option<usize>,
    cert: &CertArgs,
) -> Result<ExitCode, Error> {
    let report = match (theorem2, corollary) {
        (Some(args), None) => {
            let (s, m, t) = (args[0], args[1], args[2]);
            if m > s {
                return Err(Error::BlockTooLarge {
                    m: m as usize,
                    s: s as usize,
                });
            }
            let report = BoundReport::new(s, m, t, colors.unwrap_or(0), k.unwrap_or(0));
            println!("bound={}", report.bound);
            report
        }
        (None, Some(args)) => {
            let (r_n, r_n_minus_1, n) = (args[0], args[1], args[2]);
            if r_n < 3 || r_n_minus_1 < 3 || n < 2 {
                return Err(Error::Format {
                    line: 0,
                    message: "corollary needs Ramsey values >= 3 and n >= 2".to_string(),
                });
            }
            let (m, _) = capacity::corollary_bound(r_n, r_n_minus_1, n);
            let report = BoundReport::new(r_n - 1, m, r_n_minus_1 - 1, n as u16, 3)
                .with_corollary(r_n, r_n_minus_1, n);
            println!("m={m} bound={}", report.bound);
            report
        }
        _ => {
            return Err(Error::Format {
                line: 0,
                message: "exactly one of --theorem2 or --corollary is required".to_string(),
            })
        }
    };
    if let Some(cert_path) = &cert.cert {
        let claim = if report.colors > 0 && report.k > 0 {
            report.claim()
        } else {
            format!(
                "s^2 + m*t + 1 = {} (s={}, m={}, t={})",
                report.bound, report.s, report.m, report.t
            )
        };
        let input_line = format!("bound s {} m {} t {}", report.s, report.m, report.t);
        let certificate = Certificate::new(
            CertKind::Bound,
            io::object_hash(input_line.as_bytes()),
            claim,
            CertBody::Bound {
                report: report.with_provenance(cert.provenance.clone()),
                verification: None,
            },
        )
        .with_provenance(cert.provenance.clone());
        io::write_certificate(&certificate, cert_path)?;
        println!("certificate written to {}", cert_path.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_construct(kind: ConstructKind, cfg: &Config) -> Result<ExitCode, Error> {
    match kind {
        ConstructKind::StrongProduct { g1, g2, out } => {
            let a = io::read_graph(&g1)?;
            let b = io::read_graph(&g2)?;
            let p = products::strong_product(&a, &b);
            io::write_graph(&p, &out)?;
            println!("wrote {}-vertex graph to {}", p.vertex_count(), out.display());
            Ok(ExitCode::SUCCESS)
        }
        ConstructKind::Power { graph, n, out } => {
            let g = io::read_graph(&graph)?;
            let p = products::graph_power(&g, n, cfg)?;
            io::write_graph(&p, &out)?;
            println!("wrote {}-vertex graph to {}", p.vertex_count(), out.display());
            Ok(ExitCode::SUCCESS)
        }
        ConstructKind::Composition {
            graphs,
            colorings,
            out,
        } => match (graphs, colorings) {
            (Some(paths), None) => {
                let g = io::read_graph(&paths[0])?;
                let h = io::read_graph(&paths[1])?;
                let p = products::composition_graph(&g, &h);
                io::write_graph(&p, &out)?;
                println!("wrote {}-vertex graph to {}", p.vertex_count(), out.display());
                Ok(ExitCode::SUCCESS)
            }
            (None, Some(paths)) => {
                let g = io::read_coloring(&paths[0])?;
                let h = io::read_coloring(&paths[1])?;
                let p = products::composition_coloring(&g, &h);
                io::write_coloring(&p, &out)?;
                println!(
                    "wrote {}-vertex coloring to {}",
                    p.vertex_count(),
                    out.display()
                );
                Ok(ExitCode::SUCCESS)
            }
            _ => Err(Error::Format {
                line: 0,
                message: "exactly one of --graphs or --colorings is required".to_string(),
            }),
        },
        ConstructKind::Theorem2 {
            g,
            m,
            h,
            k,
            out,
            cert,
        } => cmd_construct_theorem2(&g, m, &h, k, &out, &cert, cfg),
        ConstructKind::Emt {
            coloring,
            out_prefix,
        } => {
            let c = io::read_coloring(&coloring)?;
            let graphs = products::emt_product_graphs(&c);
            for (i, g) in graphs.iter().enumerate() {
                let path = PathBuf::from(format!("{}_{}.g", out_prefix, i + 1));
                io::write_graph(g, &path)?;
                println!("wrote {}-vertex graph to {}", g.vertex_count(), path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn cmd_construct_theorem2(
    g_path: &Path,
    m: usize,
    h_path: &Path,
    k: usize,
    out: &Path,
    cert: &CertArgs,
    cfg: &Config,
) -> Result<ExitCode, Error> {
    let g = io::read_coloring(g_path)?;
    let h = io::read_coloring(h_path)?;
    let f = products::theorem2_construct(&g, m, &h, k, cfg)?;
    io::write_coloring(&f, out)?;
    println!("wrote {}-vertex coloring to {}", f.vertex_count(), out.display());

    let spec = ColoringSpec::uniform(f.color_count(), k)?;
    let report = coloring::validate_coloring(&f, &spec, cfg)?;
    print_verification(&report);

    let bound_report = BoundReport::new(
        g.vertex_count() as u64,
        m as u64,
        h.vertex_count() as u64,
        g.color_count(),
        k,
    )
    .with_provenance(cert.provenance.clone());
    if report.pass {
        println!("certifies {}", bound_report.claim());
    }
    if let Some(cert_path) = &cert.cert {
        let certificate = Certificate::new(
            CertKind::Bound,
            io::object_hash(io::coloring_to_string(&f).as_bytes()),
            bound_report.claim(),
            CertBody::Bound {
                report: bound_report,
                verification: Some((f.vertex_count(), report.clone())),
            },
        )
        .with_provenance(cert.provenance.clone());
        io::write_certificate(&certificate, cert_path)?;
        println!("certificate written to {}", cert_path.display());
    }
    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_catalog(object: CatalogObject) -> Result<ExitCode, Error> {
    let (text, out) = match object {
        CatalogObject::Cycle { n, out } => {
            (io::graph_to_string(&catalog::generate_cycle(n)?), out)
        }
        CatalogObject::K5 { out } => (
            io::coloring_to_string(&catalog::generate_k5_two_coloring()),
            out,
        ),
        CatalogObject::Gf16 { out } => (
            io::coloring_to_string(&catalog::generate_gf16_three_coloring()),
            out,
        ),
    };
    match out {
        Some(path) => {
            std::fs::write(&path, &text).map_err(|e| Error::Io {
                path: path.clone(),
                source: e,
            })?;
            println!("wrote {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

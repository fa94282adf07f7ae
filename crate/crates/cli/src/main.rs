//! Command-line entry point tying the generators, constructions, checker
//! and solver into reproducible file-based experiments.
//!
//! Exit codes: 0 on success (valid certificate, feasible instance, lemma
//! holds); 1 on domain negatives (invalid certificate, infeasible or
//! timed-out instance, failed reproduction); 2 on usage and input errors.

mod repro;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use circtotal::colouring;
use circtotal::constructions;
use circtotal::hegraph::{self, HalfEdgeGraph};
use circtotal::solver::{self, ChiStatus, FeasibilityStatus, SearchConfig};
use circtotal::CircularColouring;

#[derive(Parser)]
#[command(
    name = "circtotal",
    version,
    about = "Exact circular total colouring: generate graphs, build and check certificates, decide feasibility, compute chi''_c"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Hk,
    Hprime,
    Gkn,
    Cycle,
    Moebius,
    Prism,
    Kab,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    All0,
    Tweak,
    Refine,
    ThmLim,
    ThmImprove,
    ThmK3,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Lemma {
    All0,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Fast,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph family and write it as a `heg 1` file.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(short = 'k', long)]
        k: Option<usize>,
        #[arg(short = 'n', long)]
        n: Option<usize>,
        #[arg(short = 'm', long)]
        m: Option<usize>,
        #[arg(short = 'a', long)]
        a: Option<usize>,
        #[arg(short = 'b', long)]
        b: Option<usize>,
        #[arg(short = 'o', long, value_name = "FILE")]
        output: PathBuf,
    },
    /// Build a constructive colouring and write it as a `pqc 1` file.
    Construct {
        #[arg(long, value_enum)]
        method: Method,
        #[arg(short = 'k', long)]
        k: Option<usize>,
        #[arg(short = 'n', long)]
        n: Option<usize>,
        /// Optional graph file to validate the certificate against.
        #[arg(long, value_name = "FILE")]
        graph: Option<PathBuf>,
        #[arg(short = 'o', long, value_name = "FILE")]
        output: PathBuf,
    },
    /// Check a certificate against a graph; exits 1 on any violation.
    Check {
        graph: PathBuf,
        cert: PathBuf,
    },
    /// Decide whether the graph admits a (p,q)-total colouring.
    Feasible {
        graph: PathBuf,
        #[arg(short = 'p', long)]
        p: u32,
        #[arg(short = 'q', long)]
        q: u32,
        /// Wall-clock budget in seconds for the search.
        #[arg(long, value_name = "SECS")]
        timeout: Option<u64>,
        /// Disable pinning one maximum-degree element to colour 0.
        #[arg(long)]
        no_symmetry: bool,
        /// Write the certificate here when feasible.
        #[arg(long, value_name = "FILE")]
        cert: Option<PathBuf>,
    },
    /// Compute the circular total chromatic number exactly.
    Chi {
        graph: PathBuf,
        /// Denominator bound override (default: number of elements).
        #[arg(long)]
        qmax: Option<usize>,
        /// Wall-clock budget in seconds per feasibility call.
        #[arg(long, value_name = "SECS")]
        timeout: Option<u64>,
        /// Also print an approximate decimal value, clearly marked.
        #[arg(long)]
        decimal: bool,
        /// Write the witness certificate here.
        #[arg(long, value_name = "FILE")]
        cert: Option<PathBuf>,
    },
    /// Exhaustively verify a structural lemma about the generated families.
    VerifyLemma {
        lemma: Lemma,
        #[arg(short = 'k', long)]
        k: usize,
    },
    /// Replay the acceptance suite and print a summary table.
    Repro {
        #[arg(long, value_enum, default_value = "fast")]
        suite: Suite,
        /// Wall-clock budget in seconds per solver call (full suite).
        #[arg(long, value_name = "SECS")]
        timeout: Option<u64>,
    },
}

fn main() -> ExitCode {
    // behave like an ordinary unix tool when stdout is a closed pipe
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read_graph(path: &Path) -> Result<HalfEdgeGraph> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read graph file `{}`", path.display()))?;
    HalfEdgeGraph::from_heg_str(&text)
        .with_context(|| format!("in graph file `{}`", path.display()))
}

fn read_cert(path: &Path) -> Result<CircularColouring> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read certificate file `{}`", path.display()))?;
    CircularColouring::from_pqc_str(&text)
        .with_context(|| format!("in certificate file `{}`", path.display()))
}

fn config(timeout: Option<u64>, qmax: Option<usize>, symmetry: bool) -> SearchConfig {
    let mut cfg = SearchConfig::default();
    if let Some(secs) = timeout {
        cfg.time_budget = Duration::from_secs(secs);
    }
    cfg.qmax = qmax;
    cfg.symmetry_breaking = symmetry;
    cfg
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Gen {
            family,
            k,
            n,
            m,
            a,
            b,
            output,
        } => {
            let need = |value: Option<usize>, flag: &str| {
                value.with_context(|| format!("family requires {flag}"))
            };
            let g = match family {
                Family::Hk => hegraph::hk(need(k, "-k")?)?,
                Family::Hprime => hegraph::hprime(need(k, "-k")?)?,
                Family::Gkn => hegraph::gkn(need(k, "-k")?, need(n, "-n")?)?,
                Family::Cycle => hegraph::cycle(need(m, "-m")?)?,
                Family::Moebius => hegraph::moebius(need(n, "-n")?)?,
                Family::Prism => hegraph::prism(need(m, "-m")?)?,
                Family::Kab => hegraph::complete_bipartite(need(a, "-a")?, need(b, "-b")?)?,
            };
            std::fs::write(&output, g.to_heg_string())
                .with_context(|| format!("cannot write `{}`", output.display()))?;
            println!(
                "wrote {} ({} vertices, {} edges, {} half-edges)",
                output.display(),
                g.vertex_count(),
                g.edge_count(),
                g.half_edge_count()
            );
            Ok(ExitCode::SUCCESS)
        }

        Command::Construct {
            method,
            k,
            n,
            graph,
            output,
        } => {
            let need = |value: Option<usize>, flag: &str| {
                value.with_context(|| format!("method requires {flag}"))
            };
            let c = match method {
                Method::All0 => {
                    let k = need(k, "-k")?;
                    let latin = circtotal::LatinSquare::back_circulant(k)
                        .map_err(anyhow::Error::from)?;
                    constructions::all0(k, &latin)?
                }
                Method::Tweak => constructions::tweak(need(k, "-k")?, need(n, "-n")?)?,
                Method::Refine => constructions::refine(need(k, "-k")?, need(n, "-n")?)?,
                Method::ThmLim => constructions::thm_lim(need(k, "-k")?, need(n, "-n")?)?,
                Method::ThmImprove => {
                    constructions::thm_improve(need(k, "-k")?, need(n, "-n")?)?
                }
                Method::ThmK3 => {
                    if let Some(k) = k {
                        if k != 3 {
                            bail!("thm-k3 is a construction for k = 3, got -k {k}");
                        }
                    }
                    constructions::thm_k3(need(n, "-n")?)?
                }
            };
            if let Some(path) = graph {
                let g = read_graph(&path)?;
                if let Some(violation) = validate(&g, &c)? {
                    println!("{violation}");
                    return Ok(ExitCode::from(1));
                }
            }
            std::fs::write(&output, c.to_pqc_string())
                .with_context(|| format!("cannot write `{}`", output.display()))?;
            println!(
                "wrote {} (a ({},{})-total colouring of {} elements)",
                output.display(),
                c.p(),
                c.q(),
                c.len()
            );
            Ok(ExitCode::SUCCESS)
        }

        Command::Check { graph, cert } => {
            let g = read_graph(&graph)?;
            let c = read_cert(&cert)?;
            match validate(&g, &c)? {
                None => {
                    println!("valid ({},{})", c.p(), c.q());
                    Ok(ExitCode::SUCCESS)
                }
                Some(report) => {
                    println!("{report}");
                    Ok(ExitCode::from(1))
                }
            }
        }

        Command::Feasible {
            graph,
            p,
            q,
            timeout,
            no_symmetry,
            cert,
        } => {
            if p < 1 || q < 1 {
                bail!("p and q must be at least 1");
            }
            let g = read_graph(&graph)?;
            let t = g.conflict_graph();
            let cfg = config(timeout, None, !no_symmetry);
            let start = Instant::now();
            let out = solver::feasible(&t, p, q, &cfg);
            let wall = start.elapsed();
            match out.status {
                FeasibilityStatus::Feasible(colouring) => {
                    if let Some(path) = &cert {
                        std::fs::write(path, colouring.to_pqc_string())
                            .with_context(|| format!("cannot write `{}`", path.display()))?;
                    }
                    println!("feasible ({p},{q})");
                    println!("nodes {}", out.nodes_explored);
                    println!("wall_ms {}", wall.as_millis());
                    if let Some(path) = &cert {
                        println!("certificate {}", path.display());
                    }
                    Ok(ExitCode::SUCCESS)
                }
                FeasibilityStatus::Infeasible => {
                    println!("infeasible ({p},{q})");
                    println!("nodes {}", out.nodes_explored);
                    println!("wall_ms {}", wall.as_millis());
                    Ok(ExitCode::from(1))
                }
                FeasibilityStatus::Timeout => {
                    println!("timeout ({p},{q})");
                    println!("nodes {}", out.nodes_explored);
                    println!("wall_ms {}", wall.as_millis());
                    Ok(ExitCode::from(1))
                }
            }
        }

        Command::Chi {
            graph,
            qmax,
            timeout,
            decimal,
            cert,
        } => {
            let g = read_graph(&graph)?;
            let cfg = config(timeout, qmax, true);
            let start = Instant::now();
            let r = solver::chi_total(&g, &cfg);
            let wall = start.elapsed();
            let cert_path = match (cert, &r.witness) {
                (Some(path), Some(witness)) => {
                    std::fs::write(&path, witness.to_pqc_string())
                        .with_context(|| format!("cannot write `{}`", path.display()))?;
                    Some(path)
                }
                _ => None,
            };
            match &r.status {
                ChiStatus::Exact(value) => {
                    println!("exact {value}");
                    println!("status exact");
                    println!("value {value}");
                    if decimal {
                        println!("approx {:.6} (decimal, approximate)", value.to_f64());
                    }
                }
                ChiStatus::Bounded { lower, upper } => {
                    let upper_text = upper
                        .map(|u| u.to_string())
                        .unwrap_or_else(|| "unknown".to_string());
                    println!("bounded [{lower}, {upper_text}]");
                    println!("status bounded");
                    println!("lower {lower}");
                    println!("upper {upper_text}");
                    if decimal {
                        println!("approx_lower {:.6} (decimal, approximate)", lower.to_f64());
                    }
                }
            }
            println!("qmax {}", r.denominator_bound_used);
            println!("calls {}", r.feasibility_calls);
            println!("nodes {}", r.nodes_total);
            println!("wall_ms {}", wall.as_millis());
            if let Some(path) = cert_path {
                println!("certificate {}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::VerifyLemma { lemma: Lemma::All0, k } => {
            let report = solver::verify_half_edge_uniform(k)?;
            if report.uniform {
                println!(
                    "holds for k={k}: all half-edges share one colour in each of the {} \
                     ({},1)-total colourings of hk({k})",
                    report.colourings_visited,
                    k + 1
                );
                Ok(ExitCode::SUCCESS)
            } else {
                println!(
                    "FAILS for k={k}: counterexample found after {} colourings",
                    report.colourings_visited
                );
                Ok(ExitCode::from(1))
            }
        }

        Command::Repro { suite, timeout } => {
            let full = suite == Suite::Full;
            let ok = repro::run(full, timeout)?;
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

/// Label-set equality plus the circular distance check; `None` when the
/// certificate is valid for the graph.
fn validate(g: &HalfEdgeGraph, c: &CircularColouring) -> Result<Option<String>> {
    let t = g.conflict_graph();
    let graph_labels: Vec<&str> = t.labels().collect();
    let cert_labels: Vec<&str> = c.iter().map(|(l, _)| l).collect();
    if graph_labels != cert_labels {
        let missing: Vec<&str> = graph_labels
            .iter()
            .filter(|l| c.get(l).is_none())
            .copied()
            .collect();
        let extra: Vec<&str> = cert_labels
            .iter()
            .filter(|l| t.index_of(l).is_none())
            .copied()
            .collect();
        let mut msg = String::from("invalid: certificate labels do not match the graph");
        if !missing.is_empty() {
            let _ = write!(msg, "; missing {missing:?}");
        }
        if !extra.is_empty() {
            let _ = write!(msg, "; extra {extra:?}");
        }
        return Ok(Some(msg));
    }
    let violations = colouring::check(&t, c)?;
    if violations.is_empty() {
        return Ok(None);
    }
    let mut msg = format!(
        "invalid ({},{}): {} violation(s)",
        c.p(),
        c.q(),
        violations.len()
    );
    for v in violations.iter().take(10) {
        let _ = write!(msg, "\n  {v}");
    }
    if violations.len() > 10 {
        let _ = write!(msg, "\n  ...");
    }
    Ok(Some(msg))
}

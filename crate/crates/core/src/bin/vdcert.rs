//! Command-line front end.
//!
//! Exit codes: 0 success, 1 rejected input or internal failure, 2 parse
//! error, 3 graph is not connected bipartite, 4 size cap exceeded.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use vdcert::harness::{run_suite, RunOptions, SuiteConfig};
use vdcert::{
    decompose_bipartite_complement, is_shedding_vertex_graph, is_shelling_order,
    shelling_from_certificate, verify_certificate, BruteForceOracle, CertificateDocument, Error,
    Graph, ShellingOrder, SimplicialComplex,
};

#[derive(Parser)]
#[command(
    name = "vdcert",
    version,
    about = "Vertex-decomposition certificates for complements of connected bipartite graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certificate for the independence complex of the graph's complement.
    Decompose {
        /// Edge-list file, or `-` for stdin.
        graph: PathBuf,
        /// Re-verify the certificate before printing it.
        #[arg(long)]
        verify: bool,
    },
    /// Facet list of the independence complex of a graph.
    Complex {
        graph: PathBuf,
        /// Use the complement of the graph.
        #[arg(long)]
        complement: bool,
    },
    /// Exhaustive vertex-decomposability check.
    CheckVd {
        /// Facet-list file, or `-` for stdin.
        complex: PathBuf,
        /// Print a certificate when the complex is vertex decomposable.
        #[arg(long)]
        certificate: bool,
        /// Largest vertex count accepted.
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
    /// Check a certificate against a complex.
    Verify {
        complex: PathBuf,
        certificate: PathBuf,
    },
    /// Shelling order induced by a certificate, one facet per line.
    Shelling {
        complex: PathBuf,
        certificate: PathBuf,
    },
    /// Check a facet order read from stdin.
    CheckShelling { complex: PathBuf },
    /// Shedding vertices of the graph's independence complex.
    Shed {
        graph: PathBuf,
        /// Use the complement of the graph.
        #[arg(long)]
        complement: bool,
    },
    /// Exhaustive and randomized checks; prints a JSON report.
    Suite {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 7)]
        oracle_max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 64)]
        random_samples: usize,
        #[arg(long, default_value_t = 24)]
        random_max_n: usize,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Include wall-clock times per stage (breaks reproducibility).
        #[arg(long)]
        timings: bool,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. }
            | Error::InvalidComplex(_)
            | Error::TooManyVertices(_)
            | Error::FormatVersion(_) => 2,
            Error::NotBipartite { .. } | Error::Disconnected { .. } => 3,
            _ => 1,
        };
        Failure::new(code, e.to_string())
    }
}

type CliResult = Result<(), Failure>;

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Graph::parse_edge_list(&read_input(path)?)
        .map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))
}

fn read_complex(path: &Path) -> Result<SimplicialComplex, Failure> {
    SimplicialComplex::parse_facet_list(&read_input(path)?)
        .map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))
}

fn read_certificate(path: &Path) -> Result<CertificateDocument, Failure> {
    CertificateDocument::from_json(&read_input(path)?)
        .map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))
}

fn emit(text: &str) -> CliResult {
    io::stdout()
        .write_all(text.as_bytes())
        .map_err(|e| Failure::new(1, format!("writing output: {e}")))
}

fn checked_certificate(
    complex: &SimplicialComplex,
    doc: &CertificateDocument,
) -> Result<(), Failure> {
    if doc.vertex_count != complex.vertex_count() {
        return Err(Failure::new(
            1,
            format!(
                "certificate is for {} vertices, complex has {}",
                doc.vertex_count,
                complex.vertex_count()
            ),
        ));
    }
    verify_certificate(complex, &doc.certificate).map_err(|e| Failure::new(1, e.to_string()))
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Decompose { graph, verify } => {
            let g = read_graph(&graph)?;
            let cert = decompose_bipartite_complement(&g)?;
            if verify {
                let complex = SimplicialComplex::independence_complex(&g.complement());
                verify_certificate(&complex, &cert)?;
            }
            emit(&CertificateDocument::new(g.vertex_count(), cert).to_json())
        }
        Command::Complex { graph, complement } => {
            let mut g = read_graph(&graph)?;
            if complement {
                g = g.complement();
            }
            emit(&SimplicialComplex::independence_complex(&g).to_facet_list())
        }
        Command::CheckVd {
            complex,
            certificate,
            max_n,
        } => {
            let c = read_complex(&complex)?;
            if c.vertex_count() > max_n {
                return Err(Failure::new(
                    4,
                    format!(
                        "complex has {} vertices, above the cap of {max_n} (raise with --max-n)",
                        c.vertex_count()
                    ),
                ));
            }
            let cert = BruteForceOracle::new().certify(&c);
            emit(if cert.is_some() { "true\n" } else { "false\n" })?;
            match cert {
                Some(cert) if certificate => {
                    emit(&CertificateDocument::new(c.vertex_count(), cert).to_json())
                }
                _ => Ok(()),
            }
        }
        Command::Verify {
            complex,
            certificate,
        } => {
            let c = read_complex(&complex)?;
            let doc = read_certificate(&certificate)?;
            checked_certificate(&c, &doc)?;
            emit("valid\n")
        }
        Command::Shelling {
            complex,
            certificate,
        } => {
            let c = read_complex(&complex)?;
            let doc = read_certificate(&certificate)?;
            checked_certificate(&c, &doc)?;
            let order = shelling_from_certificate(&c, &doc.certificate)?;
            emit(&order.to_lines())
        }
        Command::CheckShelling { complex } => {
            let c = read_complex(&complex)?;
            let order = ShellingOrder::parse_lines(&read_input(Path::new("-"))?, c.vertex_count())
                .map_err(|e| Failure::new(2, format!("stdin: {e}")))?;
            match is_shelling_order(&c, &order) {
                Ok(true) => emit("true\n"),
                Ok(false) => {
                    emit("false\n")?;
                    Err(Failure::new(1, "order violates the shelling condition"))
                }
                Err(e) => {
                    emit("false\n")?;
                    Err(Failure::new(1, e.to_string()))
                }
            }
        }
        Command::Shed { graph, complement } => {
            let mut g = read_graph(&graph)?;
            if complement {
                g = g.complement();
            }
            let verdicts = (0..g.vertex_count())
                .map(|v| is_shedding_vertex_graph(&g, v).map(|s| (v, s)))
                .collect::<Result<Vec<_>, _>>()?;
            let shedding: Vec<String> = verdicts
                .iter()
                .filter(|(_, s)| *s)
                .map(|(v, _)| v.to_string())
                .collect();
            let mut out = format!("shedding: {}\n", shedding.join(" "));
            for (v, s) in verdicts {
                out.push_str(&format!("{v} {s}\n"));
            }
            emit(&out)
        }
        Command::Suite {
            max_n,
            oracle_max_n,
            seed,
            random_samples,
            random_max_n,
            jobs,
            timings,
            output,
        } => {
            let config = SuiteConfig {
                max_n,
                oracle_max_n,
                seed,
                random_samples,
                random_max_n,
            };
            let options = RunOptions {
                jobs,
                record_timings: timings,
            };
            let report = run_suite(&config, options).map_err(|e| Failure::new(2, e.to_string()))?;
            let text = report.to_json();
            match output {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| Failure::new(1, format!("{}: {e}", path.display())))?,
                None => emit(&text)?,
            }
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::new(
                    1,
                    format!("{} failures recorded", report.failures.len()),
                ))
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("vdcert: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

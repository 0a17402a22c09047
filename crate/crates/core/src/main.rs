use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use clawfree::cycle_space::{cycle_basis, enumerate_cycle_space};
use clawfree::expansion::{certify_with, verify_3ec_remark, verify_certificate, CertifyOptions};
use clawfree::format::{
    parse_graph, serialize_certificate, serialize_decomposition, serialize_graph,
};
use clawfree::oracle::{count_perfect_matchings, count_two_factors, enumerate_perfect_matchings};
use clawfree::predicates::{
    bridges, find_claw, is_cubic, is_three_edge_connected, is_two_edge_connected,
};
use clawfree::structure::{build, classify};
use clawfree::{generators, Error, Multigraph};

/// Perfect matchings of claw-free cubic bridgeless graphs.
#[derive(Parser)]
#[command(name = "clawfree", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report cubicity, claw-freeness, bridges and edge connectivity.
    Check {
        file: PathBuf,
        /// Exit 1 unless the graph is cubic.
        #[arg(long)]
        cubic: bool,
        /// Exit 1 unless the graph is simple and claw-free.
        #[arg(long)]
        claw_free: bool,
        /// Exit 1 unless the graph is 2-edge-connected.
        #[arg(long)]
        bridgeless: bool,
    },
    /// Classify as K4, a ring of diamonds, or an expansion of a base multigraph.
    Decompose { file: PathBuf },
    /// Build a graph from a base multigraph and per-edge diamond counts.
    Build {
        #[arg(long)]
        base: PathBuf,
        /// Comma-separated lengths, one per base edge.
        #[arg(long, value_delimiter = ',')]
        lengths: Vec<usize>,
    },
    /// Generate corpus graphs.
    Gen {
        #[command(subcommand)]
        which: Gen,
    },
    /// Exact perfect-matching (and optionally 2-factor) counts.
    Count {
        file: PathBuf,
        #[arg(long)]
        two_factors: bool,
    },
    /// Fundamental cycle basis, and optionally every member of the cycle space.
    CycleSpace {
        file: PathBuf,
        #[arg(long)]
        enumerate: bool,
        #[arg(long, default_value_t = 1 << 20)]
        cap: u64,
    },
    /// Emit a certificate family of distinct perfect matchings.
    Certify {
        file: PathBuf,
        /// Union both expansion branches instead of the one the size dictates.
        #[arg(long)]
        both_branches: bool,
        /// Cross-check every member against the brute-force enumeration.
        #[arg(long)]
        verify_oracle: bool,
        #[arg(long, default_value_t = 1 << 20)]
        cap: u64,
    },
    /// Check the exact 2^(n/6+1) count for a 3-edge-connected graph.
    #[command(name = "verify-3ec")]
    Verify3ec { file: PathBuf },
}

#[derive(Subcommand)]
enum Gen {
    /// Ring of d >= 2 diamonds.
    Ring { d: usize },
    /// Bridged claw-free cubic graph with 9 perfect matchings.
    Fig1 { segments: usize },
    /// Random cubic 2-edge-connected base multigraph.
    RandomBase {
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    /// The checked property does not hold.
    Property(String),
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::CapExceeded { .. } | Error::LengthCount { .. } => Failure::Usage(msg),
            Error::StructureViolation(_)
            | Error::BoundFailure { .. }
            | Error::DegreeViolation { .. }
            | Error::RoutingMismatch { .. }
            | Error::NoTwoFactor
            | Error::NotExpanded => Failure::Internal(msg),
            _ => Failure::Property(msg),
        }
    }
}

fn read_graph(path: &PathBuf) -> Result<Multigraph, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
    };
    parse_graph(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn join(items: impl IntoIterator<Item = usize>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn run(cli: Cli) -> Result<String, Failure> {
    let mut out = String::new();
    match cli.command {
        Command::Check {
            file,
            cubic,
            claw_free,
            bridgeless,
        } => {
            let g = read_graph(&file)?;
            let is_cubic = is_cubic(&g);
            let claw = find_claw(&g).ok();
            let br = bridges(&g);
            let two = is_two_edge_connected(&g);
            out += &format!("vertices={}\nedges={}\n", g.vertex_count(), g.edge_count());
            out += &format!("simple={}\ncubic={is_cubic}\n", g.is_simple());
            match &claw {
                None => out += "claw_free=n/a\n",
                Some(None) => out += "claw_free=true\n",
                Some(Some(c)) => {
                    out += &format!("claw_free=false\nclaw={} {}\n", c.center, join(c.leaves))
                }
            }
            out += &format!("bridges={}\nbridge_edges={}\n", br.len(), join(br.iter()));
            out += &format!("two_edge_connected={two}\n");
            out += &format!("three_edge_connected={}\n", is_three_edge_connected(&g));
            let failed =
                (cubic && !is_cubic) || (claw_free && claw != Some(None)) || (bridgeless && !two);
            if failed {
                print!("{out}");
                return Err(Failure::Property("required property does not hold".into()));
            }
        }
        Command::Decompose { file } => {
            let g = read_graph(&file)?;
            out = serialize_decomposition(&classify(&g)?, g.vertex_count());
        }
        Command::Build { base, lengths } => {
            let h = read_graph(&base)?;
            let (g, _) = build(&h, &lengths)?;
            out = serialize_graph(&g);
        }
        Command::Gen { which } => {
            let g =
                match which {
                    Gen::Ring { d } => generators::ring_of_diamonds(d)
                        .map_err(|e| Failure::Usage(e.to_string()))?,
                    Gen::Fig1 { segments } => generators::figure1_graph(segments),
                    Gen::RandomBase { k, seed } => generators::random_base(k, seed)
                        .map_err(|e| Failure::Usage(e.to_string()))?,
                };
            out = serialize_graph(&g);
        }
        Command::Count { file, two_factors } => {
            let g = read_graph(&file)?;
            out += "method=backtracking\n";
            out += &format!("perfect_matchings={}\n", count_perfect_matchings(&g));
            if two_factors {
                out += &format!("two_factors={}\n", count_two_factors(&g));
            }
        }
        Command::CycleSpace {
            file,
            enumerate,
            cap,
        } => {
            let h = read_graph(&file)?;
            let basis = cycle_basis(&h);
            out += &format!(
                "dimension={}\nmembers={}\n",
                basis.dimension(),
                basis.size()
            );
            for (i, b) in basis.basis.iter().enumerate() {
                out += &format!("basis.{i}={}\n", join(b.iter()));
            }
            if enumerate {
                for c in enumerate_cycle_space(&h, cap)? {
                    out += &format!("member={}\n", join(c.iter()));
                }
            }
        }
        Command::Certify {
            file,
            both_branches,
            verify_oracle,
            cap,
        } => {
            let g = read_graph(&file)?;
            let cert = certify_with(&g, CertifyOptions { both_branches, cap })?;
            let report = verify_certificate(&g, &cert);
            if !report.is_valid() {
                return Err(Failure::Internal(report.issues.join("; ")));
            }
            out = serialize_certificate(&cert);
            if verify_oracle {
                let all = enumerate_perfect_matchings(&g, cap)?;
                let missing = cert
                    .matchings
                    .iter()
                    .filter(|m| all.binary_search(m).is_err())
                    .count();
                out += &format!("oracle_count={}\n", all.len());
                if missing > 0 || cert.matchings.len() > all.len() {
                    print!("{out}");
                    return Err(Failure::Internal(format!(
                        "{missing} certificate members are not perfect matchings per the oracle"
                    )));
                }
                out += "oracle_check=pass\n";
            }
        }
        Command::Verify3ec { file } => {
            let g = read_graph(&file)?;
            let r = verify_3ec_remark(&g)?;
            out += &format!("perfect_matchings={}\n", r.perfect_matchings);
            out += &format!("expected={}\n", r.expected);
            out += &format!("diamond_free={}\n", r.diamond_free);
            out += &format!("bijection={}\n", r.bijection);
            out += &format!("holds={}\n", r.holds());
            if !r.holds() {
                print!("{out}");
                return Err(Failure::Property("remark does not hold".into()));
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Property(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}

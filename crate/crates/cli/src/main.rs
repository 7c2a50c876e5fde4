//! `qsl2`: command-line access to the exact quantum sl2 computations.

mod commands;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use report::Report;

#[derive(Parser)]
#[command(name = "qsl2", version, about = "Exact graphical calculus for quantum sl2")]
struct Cli {
    /// Print a JSON document instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
pub struct Tuple {
    #[arg(long)]
    pub i: usize,
    #[arg(long)]
    pub j: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub s: usize,
    #[arg(long)]
    pub t: usize,
}

#[derive(Args, Clone, Copy)]
pub struct Label {
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub s: usize,
    #[arg(long)]
    pub i: usize,
    #[arg(long)]
    pub j: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Quantum integers, binomials and factorials.
    Qnum {
        #[arg(long)]
        n: usize,
        /// Print the binomial [n, k] instead of [n].
        #[arg(long)]
        k: Option<usize>,
        /// Print [n]! instead of [n].
        #[arg(long, conflicts_with = "k")]
        factorial: bool,
        /// Use the renormalization starting in degree 0.
        #[arg(long)]
        renorm: bool,
    },
    /// 3j-symbols C (and the twisted symbol D) by one route or all of them.
    Threej {
        #[command(flatten)]
        tuple: Tuple,
        /// direct, sum, classical, twisted, positivity, alternating or all.
        #[arg(long, default_value = "direct")]
        route: String,
    },
    /// Oriented line arrangements grouped by the number a of reversed arcs.
    Arrangements {
        #[command(flatten)]
        tuple: Tuple,
        /// List the classes (a, multiplicity, sign, gamma).
        #[arg(long)]
        list: bool,
    },
    /// Diagram networks written in the layer language.
    Network {
        #[command(subcommand)]
        action: NetworkAction,
    },
    /// Theta network value, checked against the factorial formula.
    Theta {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        k: usize,
    },
    /// Colored unknot value, or its graded Euler characteristic with --ext.
    Unknot {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ext: bool,
    },
    /// Fractional graded Euler characteristics.
    Euler {
        #[command(subcommand)]
        kind: EulerKind,
        /// Number of t-degrees computed.
        #[arg(long, global = true, default_value_t = 20)]
        t_order: usize,
        /// q-adic precision of the inverse series.
        #[arg(long, global = true, default_value_t = 40)]
        q_order: i64,
    },
    /// Minimal projective resolution of a standard module at q = 1.
    Resolution {
        #[command(flatten)]
        label: Label,
    },
    /// Twisted canonical basis vectors and the inverse expansion.
    Basis {
        #[command(flatten)]
        label: Label,
        /// Expand v_r ⊗ v_s in the twisted canonical basis instead.
        #[arg(long)]
        inverse: bool,
    },
}

#[derive(Subcommand)]
enum NetworkAction {
    /// Evaluate a network file.
    Eval {
        file: std::path::PathBuf,
        /// Apply to the basis vector with this comma-separated index.
        #[arg(long)]
        apply: Option<String>,
        /// Print the dual coefficient at this comma-separated index.
        #[arg(long)]
        pair: Option<String>,
    },
}

#[derive(Subcommand)]
enum EulerKind {
    /// Coinvariant algebra of the full flag variety of C^n.
    Flag {
        #[arg(long)]
        n: usize,
    },
    /// Cohomology of the Grassmannian Gr(k, n).
    Grassmannian {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Deviations of a power series with constant term 1, read from a file of
    /// integer coefficients c_0 c_1 c_2 ...
    Deviations {
        #[arg(long)]
        series: std::path::PathBuf,
    },
}

fn run(cli: Cli) -> Result<Report, report::Failure> {
    match cli.command {
        Command::Qnum {
            n,
            k,
            factorial,
            renorm,
        } => Ok(commands::qnum(n, k, factorial, renorm)),
        Command::Threej { tuple, route } => commands::threej(tuple, &route),
        Command::Arrangements { tuple, list } => commands::arrangements(tuple, list),
        Command::Network {
            action: NetworkAction::Eval { file, apply, pair },
        } => commands::network_eval(&file, apply.as_deref(), pair.as_deref()),
        Command::Theta { i, j, k } => commands::theta(i, j, k),
        Command::Unknot { n, ext } => commands::unknot(n, ext),
        Command::Euler { kind, t_order, q_order } => match kind {
            EulerKind::Flag { n } => commands::euler_flag(n, t_order, q_order),
            EulerKind::Grassmannian { k, n } => commands::euler_grassmannian(k, n, t_order, q_order),
            EulerKind::Deviations { series } => commands::euler_deviations(&series, t_order),
        },
        Command::Resolution { label } => commands::resolution(label),
        Command::Basis { label, inverse } => commands::basis(label, inverse),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(rep) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&rep.to_json()).expect("JSON values serialize"));
            } else {
                print!("{}", rep.text);
                if !rep.text.ends_with('\n') {
                    println!();
                }
            }
            if rep.disagreement {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => {
            eprintln!("qsl2: {f}");
            f.exit_code()
        }
    }
}

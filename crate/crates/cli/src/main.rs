mod commands;
mod error;
mod input;
mod report;
mod selfcheck;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use error::CliError;
use report::Report;

#[derive(Parser)]
#[command(name = "sigmaloci", version, about = "Jumping loci, tangent cones and Sigma-invariants")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads for support sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Simplicial complex utilities.
    #[command(subcommand)]
    Complex(ComplexCmd),
    /// Jumping loci of toric complexes.
    #[command(subcommand)]
    Toric(ToricCmd),
    /// Exponential tangent cone of a system of Laurent polynomials.
    Tau1(Tau1Args),
    /// Fox derivatives of the relators.
    Fox(PresentationArgs),
    /// Alexander matrix over the free abelianization.
    Alexander(PresentationArgs),
    /// Pointwise membership in the first characteristic variety.
    Charvar1(Charvar1Args),
    /// Rational arrangement whose complement lies in the first Sigma-invariant.
    #[command(name = "sigma1-bound")]
    Sigma1Bound(Sigma1BoundArgs),
    /// Whether the infinite cyclic cover along `z` has finite first Betti number.
    #[command(name = "cover-z")]
    CoverZ(CoverZArgs),
    /// Sigma-invariants of right-angled Artin groups.
    #[command(subcommand)]
    Sigma(SigmaCmd),
    /// Homological finiteness of free abelian covers.
    #[command(subcommand)]
    Cover(CoverCmd),
    /// Artin kernels.
    #[command(name = "artin-kernel", subcommand)]
    ArtinKernel(ArtinKernelCmd),
    /// Bestvina-Brady groups.
    #[command(subcommand)]
    Bb(BbCmd),
    /// Seeded randomized consistency checks.
    Selfcheck(SelfcheckArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SpaceInput {
    /// Simplicial complex file.
    #[arg(long)]
    complex: Option<PathBuf>,
    /// Graph file; its flag complex is used.
    #[arg(long)]
    graph: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ComplexCmd {
    /// Reduced homology.
    Betti {
        #[command(flatten)]
        input: SpaceInput,
        #[arg(long, default_value = "Z")]
        coeff: String,
    },
    /// Barycentric subdivision, in canonical text form.
    Subdivide {
        #[command(flatten)]
        input: SpaceInput,
    },
}

#[derive(Args)]
struct LocusArgs {
    #[command(flatten)]
    input: SpaceInput,
    #[arg(long)]
    i: usize,
    #[arg(long, default_value_t = 1)]
    d: usize,
    #[arg(long, default_value = "Q")]
    field: String,
    /// Largest vertex count for the support sweep.
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Subcommand)]
enum ToricCmd {
    /// Maximal supports of the resonance variety.
    Resonance(LocusArgs),
    /// Maximal supports of the characteristic variety.
    Charvar(LocusArgs),
    /// Betti numbers of the Aomoto complex at a class supported on a vertex set.
    Aomoto {
        #[command(flatten)]
        input: SpaceInput,
        /// Space-separated vertex names.
        #[arg(long, allow_hyphen_values = true)]
        support: String,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, default_value = "Q")]
        field: String,
    },
}

#[derive(Args)]
struct Tau1Args {
    /// Polynomial in t1, t2, ...; may be repeated.
    #[arg(long, allow_hyphen_values = true)]
    poly: Vec<String>,
    /// File with one polynomial per line.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Number of variables (default: largest index used).
    #[arg(long)]
    nvars: Option<usize>,
    /// Largest support size for the partition search.
    #[arg(long)]
    cap: Option<usize>,
    /// Also print the tangent cone form of a single polynomial.
    #[arg(long)]
    tc1: bool,
}

#[derive(Args)]
struct PresentationArgs {
    #[arg(long)]
    presentation: PathBuf,
}

#[derive(Args)]
struct Charvar1Args {
    #[arg(long)]
    presentation: PathBuf,
    /// Point of the character torus in coordinates of the free abelianization.
    #[arg(long, allow_hyphen_values = true)]
    point: String,
    #[arg(long, default_value_t = 1)]
    d: usize,
    #[arg(long, default_value = "Q")]
    field: String,
}

#[derive(Args)]
struct Sigma1BoundArgs {
    #[arg(long)]
    presentation: PathBuf,
    /// Largest number of minors.
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Args)]
struct CoverZArgs {
    #[arg(long)]
    presentation: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    z: String,
}

#[derive(Args)]
struct CharacterArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Character such as `a=1 b=0 c=2`.
    #[arg(long, allow_hyphen_values = true)]
    chi: String,
}

#[derive(Subcommand)]
enum SigmaCmd {
    /// Whether a character lies in the q-th Sigma-invariant.
    Member {
        #[command(flatten)]
        character: CharacterArgs,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value = "Z")]
        coeff: String,
    },
    /// Verdict for every nonempty support.
    Describe {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value = "Z")]
        coeff: String,
        #[arg(long)]
        cap: Option<usize>,
    },
}

#[derive(Subcommand)]
enum CoverCmd {
    /// Finiteness of Betti numbers up to degree q of the cover given by an epimorphism.
    Toric {
        #[command(flatten)]
        input: SpaceInput,
        /// Integer matrix rows separated by `;`.
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long)]
        cap: Option<usize>,
    },
}

#[derive(Args)]
struct KernelArgs {
    #[command(flatten)]
    character: CharacterArgs,
    /// Assume trivial monodromy where it cannot be checked combinatorially.
    #[arg(long)]
    assume_trivial_monodromy: bool,
}

#[derive(Subcommand)]
enum ArtinKernelCmd {
    /// Components of the first characteristic variety.
    V11(KernelArgs),
    /// Upper bound for the first Sigma-invariant.
    Sigma1(KernelArgs),
}

#[derive(Subcommand)]
enum BbCmd {
    /// Finiteness predicates.
    Predicates {
        #[arg(long)]
        graph: PathBuf,
    },
}

#[derive(Args)]
struct SelfcheckArgs {
    #[arg(long, default_value_t = sigmaloci::catalog::DEFAULT_SEED)]
    seed: u64,
    /// Random instances per check.
    #[arg(long, default_value_t = 20)]
    rounds: usize,
}

fn dispatch(command: Command) -> Result<Report, CliError> {
    use commands as c;
    match command {
        Command::Complex(ComplexCmd::Betti { input, coeff }) => c::complex_betti(&input, &coeff),
        Command::Complex(ComplexCmd::Subdivide { input }) => c::complex_subdivide(&input),
        Command::Toric(ToricCmd::Resonance(a)) => c::toric_locus(&a, false),
        Command::Toric(ToricCmd::Charvar(a)) => c::toric_locus(&a, true),
        Command::Toric(ToricCmd::Aomoto { input, support, max_degree, field }) => {
            c::toric_aomoto(&input, &support, max_degree, &field)
        }
        Command::Tau1(a) => c::tau1(&a),
        Command::Fox(a) => c::fox(&a.presentation),
        Command::Alexander(a) => c::alexander(&a.presentation),
        Command::Charvar1(a) => c::charvar1(&a),
        Command::Sigma1Bound(a) => c::sigma1_bound(&a),
        Command::CoverZ(a) => c::cover_z(&a),
        Command::Sigma(SigmaCmd::Member { character, q, coeff }) => c::sigma_member(&character, q, &coeff),
        Command::Sigma(SigmaCmd::Describe { graph, q, coeff, cap }) => c::sigma_describe(&graph, q, &coeff, cap),
        Command::Cover(CoverCmd::Toric { input, nu, q, field, cap }) => c::cover_toric(&input, &nu, q, &field, cap),
        Command::ArtinKernel(ArtinKernelCmd::V11(a)) => c::artin_kernel_v11(&a),
        Command::ArtinKernel(ArtinKernelCmd::Sigma1(a)) => c::artin_kernel_sigma1(&a),
        Command::Bb(BbCmd::Predicates { graph }) => c::bb_predicates(&graph),
        Command::Selfcheck(a) => selfcheck::run(a.seed, a.rounds),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("error: cannot start {jobs} workers: {e}");
            return ExitCode::from(2);
        }
    }
    match dispatch(cli.command) {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&report.json).expect("serializable")),
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

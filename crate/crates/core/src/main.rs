use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use sphereconvex::bounds::{check_face_pair_bounds, formula_table_csv};
use sphereconvex::io::{read_polytope, ConeFile, PolytopeFile};
use sphereconvex::metrics::{hausdorff, BodyMesh, DEFAULT_RESOLUTION};
use sphereconvex::polytope::{generate, Kind, SphericalPolytope};
use sphereconvex::separation::{count_face_partition_pairs, semi_separation_center, Census, CountMode};
use sphereconvex::verify::{self, Suite, VerifyConfig};
use sphereconvex::{Error, Result};

#[derive(Parser)]
#[command(name = "sphereconvex", version, about = "Exact spherical polytopes, polarity and separation centers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a polytope file
    Gen {
        #[arg(long)]
        kind: Kind,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the polar polytope
    Polar {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Semi-separation center C(W1, W2) as a cone file
    Sepcenter {
        #[arg(long)]
        w1: PathBuf,
        #[arg(long)]
        w2: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Partition census of the vertex set
    Partitions {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count face-partition pairs
    Countfp {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "by-face")]
        mode: CountMode,
    },
    /// Bound report for a simple polytope, or the formula table for (d, p)
    Bounds {
        #[arg(long = "in", conflicts_with_all = ["d", "p"])]
        input: Option<PathBuf>,
        #[arg(long, requires = "p")]
        d: Option<usize>,
        #[arg(long, requires = "d")]
        p: Option<usize>,
    },
    /// Hausdorff distance between two polytopes
    Hausdorff {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
        resolution: f64,
    },
    /// Run verification suites
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
        resolution: f64,
        /// Also write the full manifest here, pass or fail
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn json_line<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

// Ok(true) is success, Ok(false) a verification failure.
fn run(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Gen { kind, d, p, seed, out } => {
            let poly = generate(kind, d, p, seed)?;
            emit(out.as_ref(), &PolytopeFile::from_polytope(&poly).to_json())?;
        }
        Command::Polar { input, out } => {
            let polar = read_polytope(&input)?.polar_polytope()?;
            emit(out.as_ref(), &PolytopeFile::from_polytope(&polar).to_json())?;
        }
        Command::Sepcenter { w1, w2, out } => {
            let (a, b) = (read_polytope(&w1)?, read_polytope(&w2)?);
            let c = semi_separation_center(&a, &b)?;
            emit(out.as_ref(), &ConeFile::from_center(&c, a.ambient() + 1).to_json())?;
        }
        Command::Partitions { input, out } => {
            let poly = read_polytope(&input)?;
            emit(out.as_ref(), &json_line(&Census::of(poly.vertices())?))?;
        }
        Command::Countfp { input, mode } => {
            println!("{}", count_face_partition_pairs(&read_polytope(&input)?, mode)?);
        }
        Command::Bounds { input, d, p } => match (input, d, p) {
            (Some(path), _, _) => print!("{}", check_face_pair_bounds(&read_polytope(&path)?)?.to_csv()),
            (None, Some(d), Some(p)) => print!("{}", formula_table_csv(d, p)?),
            _ => return Err(Error::InvalidParameter("bounds needs --in FILE or --d D --p P".into())),
        },
        Command::Hausdorff { a, b, resolution } => {
            let mesh = |p: &SphericalPolytope| BodyMesh::of_polytope(p, resolution);
            let h = hausdorff(&mesh(&read_polytope(&a)?)?, &mesh(&read_polytope(&b)?)?)?;
            print!("{}", json_line(&h));
        }
        Command::Verify { suite, seed, trials, resolution, manifest } => {
            let m = verify::run(suite, &VerifyConfig { seed, trials, resolution })?;
            if let Some(path) = manifest {
                std::fs::write(path, m.to_json())?;
            }
            if !m.pass {
                print!("{}", m.failures().to_json());
                return Ok(false);
            }
            print!("{}", m.to_json());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

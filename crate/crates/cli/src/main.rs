use clap::{Args, Parser, Subcommand};
use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;
use std::sync::Arc;
use taftvar::homology;
use taftvar::io::{parse_module, parse_module_over, write_module};
use taftvar::modops;
use taftvar::structure;
use taftvar::suites::{self, Suite};
use taftvar::taft;
use taftvar::variety::{self, SupportOracle};
use taftvar::{Algebra, Error, PrimeField, ProjPoint};

#[derive(Parser)]
#[command(
    name = "taftvar",
    version,
    about = "Varieties and Ext for doubles of Taft algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an algebra and report its structure.
    #[command(subcommand)]
    Alg(AlgCmd),
    /// Module operations on JSON module files.
    #[command(subcommand)]
    Mod(ModCmd),
    /// Rank and support varieties.
    #[command(subcommand)]
    Variety(VarietyCmd),
    /// Ext dimensions.
    #[command(subcommand)]
    Ext(ExtCmd),
    /// Run a seeded property suite.
    Suite {
        name: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also print the elapsed time.
        #[arg(long)]
        timing: bool,
    },
    /// Write a seeded random module: quotient of A^R by S random vectors.
    Random {
        #[arg(long, value_parser = parse_pair, default_value = "1,2")]
        dim_hint: (usize, usize),
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Args, Clone)]
struct AlgArgs {
    #[arg(long, default_value = "d-taft")]
    family: String,
    #[arg(long, default_value_t = 2)]
    n: u64,
    /// Defaults to 17 for n = 2 and 163 for n = 3.
    #[arg(long)]
    p: Option<u64>,
}

#[derive(Subcommand)]
enum AlgCmd {
    Build {
        #[command(flatten)]
        alg: AlgArgs,
        /// Write the algebra descriptor as JSON.
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Subcommand)]
enum ModCmd {
    /// Parse, verify relations, and report top and projectivity.
    Check {
        #[arg(long)]
        module: String,
    },
    Tensor {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Induce from H_{ab}: the trivial module, or the restriction of --module.
    Induce {
        #[arg(long, value_parser = parse_pair)]
        point: (usize, usize),
        #[arg(long)]
        module: Option<String>,
        #[arg(long)]
        out: Option<String>,
    },
    /// Restrict to H_{ab} and report projectivity there.
    Restrict {
        #[arg(long)]
        module: String,
        #[arg(long, value_parser = parse_pair)]
        point: (usize, usize),
    },
    /// Write a named module: k, k-, P+, P-, V1, V2.
    Standard {
        #[arg(long)]
        name: String,
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Subcommand)]
enum VarietyCmd {
    Rank {
        #[arg(long)]
        module: String,
    },
    Support {
        #[arg(long)]
        module: String,
    },
    Compare {
        #[arg(long)]
        module: String,
    },
}

#[derive(Subcommand)]
enum ExtCmd {
    Dims {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 8)]
        upto: usize,
    },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once([',', ':'])
        .ok_or_else(|| format!("expected two integers, got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((num(a)?, num(b)?))
}

enum Failure {
    Usage(String),
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

type Outcome = Result<(String, bool), Failure>;

fn read(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))
}

fn write_or_print(out: &Option<String>, text: &str, report: &mut String) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, text)
                .map_err(|e| Failure::Usage(format!("cannot write {path}: {e}")))?;
            writeln!(report, "wrote={path}").unwrap();
        }
        None => writeln!(report, "{text}").unwrap(),
    }
    Ok(())
}

fn build_algebra(a: &AlgArgs) -> Result<Arc<Algebra>, Failure> {
    let field = match a.p {
        Some(p) => PrimeField::new(p, a.n)?,
        None => PrimeField::default_for(a.n)?,
    };
    let alg = match a.family.as_str() {
        "d-taft" => taft::build_drinfeld_double(a.n as usize, field)?,
        "basic-A" => taft::build_basic_algebra_a(field)?,
        other => return Err(Failure::Usage(format!("unknown family {other:?}"))),
    };
    Ok(Arc::new(alg))
}

fn point(alg: &Algebra, (a, b): (usize, usize)) -> Result<ProjPoint, Failure> {
    let f = alg.field();
    let r = |x: usize| (x % f.p() as usize) as u32;
    Ok(ProjPoint::new(&f, r(a), r(b))?)
}

fn run(cli: Cli) -> Outcome {
    let mut out = String::new();
    let mut ok = true;
    match cli.command {
        Command::Alg(AlgCmd::Build { alg, out: path }) => {
            let a = build_algebra(&alg)?;
            let f = a.field();
            let central = structure::central_primitive_idempotents(&a)?;
            let rad = structure::radical_basis(&a)?;
            writeln!(out, "family={}", a.family().tag()).unwrap();
            writeln!(out, "n={}", alg.n).unwrap();
            writeln!(out, "p={}", f.p()).unwrap();
            writeln!(out, "dim={}", a.dim()).unwrap();
            writeln!(out, "radical_dim={}", rad.len()).unwrap();
            writeln!(out, "central_idempotents={}", central.len()).unwrap();
            if let Some(t) = a.tables() {
                for s in t.simples() {
                    writeln!(
                        out,
                        "simple={} dim={} pim_dim={}",
                        s.label,
                        s.dim,
                        s.pim_dim()
                    )
                    .unwrap();
                }
            }
            writeln!(out, "relations=verified").unwrap();
            if a.hopf().is_some() {
                writeln!(out, "hopf=verified").unwrap();
            }
            if let Some(p) = path {
                let desc = serde_json::json!({
                    "p": f.p(),
                    "family": a.family().tag(),
                    "n": alg.n,
                    "dim": a.dim(),
                });
                let text = serde_json::to_string_pretty(&desc).unwrap();
                write_or_print(&Some(p), &text, &mut out)?;
            }
        }
        Command::Mod(cmd) => match cmd {
            ModCmd::Check { module } => {
                let m = parse_module(&read(&module)?)?;
                writeln!(out, "dim={}", m.dim()).unwrap();
                if m.algebra().tables().is_some() {
                    for (label, k) in modops::top_multiplicities(&m)? {
                        writeln!(out, "top {label}={k}").unwrap();
                    }
                    writeln!(out, "projective={}", modops::is_projective(&m)?).unwrap();
                }
                writeln!(out, "relations=ok").unwrap();
            }
            ModCmd::Tensor {
                left,
                right,
                out: path,
            } => {
                let m = parse_module(&read(&left)?)?;
                let n = parse_module_over(&read(&right)?, m.algebra())?;
                let t = modops::tensor(&m, &n)?;
                write_or_print(&path, &write_module(&t)?, &mut out)?;
                writeln!(out, "dim={}", t.dim()).unwrap();
            }
            ModCmd::Induce {
                point: pt,
                module,
                out: path,
            } => {
                let (d, src) = match module {
                    Some(file) => {
                        let m = parse_module(&read(&file)?)?;
                        (m.algebra().clone(), Some(m))
                    }
                    None => (
                        build_algebra(&AlgArgs {
                            family: "d-taft".into(),
                            n: 2,
                            p: None,
                        })?,
                        None,
                    ),
                };
                let emb = taft::subalgebra_h(&d, point(&d, pt)?)?;
                let base = match src {
                    Some(m) => modops::restrict(&m, &emb)?,
                    None => modops::trivial_module(&emb.sub, Some(&emb))?,
                };
                let ind = modops::induce(&emb, &base)?;
                write_or_print(&path, &write_module(&ind.rep)?, &mut out)?;
                writeln!(out, "dim={}", ind.rep.dim()).unwrap();
            }
            ModCmd::Restrict { module, point: pt } => {
                let m = parse_module(&read(&module)?)?;
                let pt = point(m.algebra(), pt)?;
                let emb = taft::subalgebra_h(m.algebra(), pt)?;
                let r = modops::restrict(&m, &emb)?;
                writeln!(out, "point={pt}").unwrap();
                writeln!(out, "dim={}", r.dim()).unwrap();
                writeln!(out, "projective={}", modops::is_projective(&r)?).unwrap();
            }
            ModCmd::Standard {
                name,
                alg,
                out: path,
            } => {
                let a = build_algebra(&alg)?;
                let m = modops::standard_module(&a, &name)?;
                write_or_print(&path, &write_module(&m)?, &mut out)?;
                writeln!(out, "dim={}", m.dim()).unwrap();
            }
        },
        Command::Variety(cmd) => {
            let (module, which) = match cmd {
                VarietyCmd::Rank { module } => (module, 0),
                VarietyCmd::Support { module } => (module, 1),
                VarietyCmd::Compare { module } => (module, 2),
            };
            let m = parse_module(&read(&module)?)?;
            let rank = || variety::rank_variety(&m);
            let support = || SupportOracle::new(m.algebra())?.variety(&m);
            match which {
                0 | 1 => {
                    let v = if which == 0 { rank()? } else { support()? };
                    writeln!(out, "{v}").unwrap();
                    writeln!(out, "points={}", v.len()).unwrap();
                }
                _ => {
                    let (r, s) = (rank()?, support()?);
                    ok = r == s;
                    writeln!(out, "rank={}", r.to_string().replace('\n', ",")).unwrap();
                    writeln!(out, "support={}", s.to_string().replace('\n', ",")).unwrap();
                    writeln!(out, "agree={ok}").unwrap();
                }
            }
        }
        Command::Ext(ExtCmd::Dims {
            source,
            target,
            upto,
        }) => {
            let m = parse_module(&read(&source)?)?;
            let n = parse_module_over(&read(&target)?, m.algebra())?;
            let dims = homology::ext_dims(&m, &n, upto)?;
            let line: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
            writeln!(out, "{}", line.join(" ")).unwrap();
            writeln!(out, "upto={upto}").unwrap();
        }
        Command::Suite {
            name,
            trials,
            seed,
            timing,
        } => {
            let suite: Suite = name.parse()?;
            if trials == 0 {
                return Err(Failure::Usage("--trials must be at least 1".into()));
            }
            let d = build_algebra(&AlgArgs {
                family: "d-taft".into(),
                n: 2,
                p: None,
            })?;
            let report = suites::run_suite(&d, suite, trials, seed)?;
            if timing {
                writeln!(out, "elapsed_ms={}", report.elapsed.as_millis()).unwrap();
            }
            writeln!(out, "{report}").unwrap();
            ok = report.passed();
        }
        Command::Random {
            dim_hint: (r, s),
            seed,
            alg,
            out: path,
        } => {
            let a = build_algebra(&alg)?;
            let m = modops::random_module(&a, r.max(1), s, seed)?;
            write_or_print(&path, &write_module(&m)?, &mut out)?;
            writeln!(out, "dim={}", m.dim()).unwrap();
        }
    }
    Ok((out, ok))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::UnknownSuite(_)
        | Error::UnknownSymbol(_)
        | Error::NotPrime(_) => 2,
        Error::NoRootOfUnity { .. } | Error::CharacteristicTwo | Error::UnsupportedAlgebra(_) => 2,
        Error::RelationViolated(_) | Error::DimensionMismatch { .. } => 1,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, ok)) => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

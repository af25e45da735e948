//! Command-line front end: products, Steenrod squares, canonical lifts,
//! degrees, the even-diagram basis and the packaged enumerative problems,
//! with text or canonical JSON output.
//!
//! Exit status: 0 on success, 1 on a domain error (the message names the
//! failing invariant; `lift` failures carry the obstruction class in JSON
//! mode), 2 on a usage error.

use schubert_cli::render;

use clap::{Args, Parser, Subcommand, ValueEnum};
use render::*;
use schubert::chow_witt::schubert_problem;
use schubert::icoh::IClass;
use schubert::witt::WClass;
use schubert::{Ch2Class, ChowClass, CwClass, Error, Frame, GwDegree, Partition, Twist};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "schubert",
    version,
    about = "Exact oriented Schubert calculus on Grassmannians",
    long_about = "Computes products, Steenrod squares, canonical lifts and \
                  quadratic-form-valued intersection numbers in the Chow, mod-2 Chow, \
                  W-cohomology, I-cohomology and Chow-Witt rings of Gr(k,n). \
                  Partitions are comma-separated (\"5,3,3,1,1\", \"0\" for the empty \
                  diagram); frames are \"KxW\" or \"Gr(k,n)\"."
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Render each diagram as ASCII rows of '#'
    #[arg(long, global = true)]
    diagrams: bool,
    /// Fill rendered diagrams with the checkerboard pattern (B/W)
    #[arg(long, global = true, requires = "diagrams")]
    checkerboard: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Ring {
    /// Integral Chow ring
    Chow,
    /// Mod-2 Chow ring
    Ch2,
    /// W-cohomology on the even-diagram basis
    W,
    /// I-cohomology (free part + torsion)
    I,
    /// Chow-Witt ring
    Cw,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TwistArg {
    /// Trivial twist
    O,
    /// Determinant twist
    Det,
}

impl From<TwistArg> for Twist {
    fn from(t: TwistArg) -> Twist {
        match t {
            TwistArg::O => Twist::O,
            TwistArg::Det => Twist::Det,
        }
    }
}

#[derive(Args)]
struct ClassArgs {
    /// Frame, as KxW or Gr(k,n)
    #[arg(long)]
    frame: String,
    /// Basis diagrams to multiply
    #[arg(required = true)]
    partitions: Vec<String>,
    /// Per-factor twists for the i and cw rings, e.g. "o,det,o";
    /// defaults to the unique liftable twist of each factor
    #[arg(long)]
    twists: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply basis classes in one of the five rings
    Mult {
        #[arg(long, value_enum)]
        ring: Ring,
        #[command(flatten)]
        class: ClassArgs,
    },
    /// Twisted Steenrod square of a sum of mod-2 basis classes
    Sq2 {
        #[arg(long, value_enum)]
        twist: TwistArg,
        #[arg(long)]
        frame: String,
        #[arg(required = true)]
        partitions: Vec<String>,
    },
    /// Canonical Chow-Witt lift of a Schubert class, or its obstruction
    Lift {
        #[arg(long, value_enum)]
        twist: TwistArg,
        #[arg(long)]
        frame: String,
        partition: String,
    },
    /// Degree of the product of the given classes
    Degree {
        #[arg(long, value_enum, default_value_t = Ring::Cw)]
        ring: Ring,
        #[command(flatten)]
        class: ClassArgs,
    },
    /// List all even diagrams of a frame with twist and codimension
    EvenBasis {
        #[arg(long)]
        frame: String,
    },
    /// Packaged enumerative problems
    Problem {
        #[command(subcommand)]
        which: ProblemCommand,
    },
}

#[derive(Subcommand)]
enum ProblemCommand {
    /// Refined count of balanced 4i-dimensional subspaces in Gr(4i,4j)
    Balanced { i: u32, j: u32 },
    /// Degree of the 2n-th power of the first Pontryagin class in Gr(4,2n+4)
    P1power { n: u32 },
    /// Refined degree of Gr(2,n+1) in the Pluecker embedding
    Plucker { n: u32 },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let style = Style {
        diagrams: cli.diagrams,
        checkerboard: cli.checkerboard,
    };
    match run(&cli.command, cli.format, style) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            if cli.format == Format::Json {
                if let Ok(json) = serde_json::to_string(&error_dto(&err)) {
                    println!("{json}");
                }
            }
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: &Command, format: Format, style: Style) -> Result<(), Error> {
    match command {
        Command::Mult { ring, class } => {
            let (frame, parts, twists) = parse_class_args(class)?;
            let out = multiply(*ring, frame, &parts, &twists)?;
            emit(&out, format, style)
        }
        Command::Sq2 {
            twist,
            frame,
            partitions,
        } => {
            let frame: Frame = frame.parse()?;
            let mut x = Ch2Class::zero(frame);
            for s in partitions {
                let p: Partition = s.parse()?;
                x = x.add(&Ch2Class::basis(frame, &p)?)?;
            }
            let result = x.sq2((*twist).into());
            emit(
                &sq2_output(frame, (*twist).into(), &x, &result),
                format,
                style,
            )
        }
        Command::Lift {
            twist,
            frame,
            partition,
        } => {
            let frame: Frame = frame.parse()?;
            let p: Partition = partition.parse()?;
            let lifted = CwClass::lift(&p, frame, (*twist).into())?;
            emit(&lift_output(&p, &lifted), format, style)
        }
        Command::Degree { ring, class } => {
            let (frame, parts, twists) = parse_class_args(class)?;
            let out = degree(*ring, frame, &parts, &twists)?;
            emit(&out, format, style)
        }
        Command::EvenBasis { frame } => {
            let frame: Frame = frame.parse()?;
            emit(&even_basis_output(frame)?, format, style)
        }
        Command::Problem { which } => {
            let report = match which {
                ProblemCommand::Balanced { i, j } => schubert::problems::balanced_report(*i, *j)?,
                ProblemCommand::P1power { n } => schubert::problems::p1_power_report(*n)?,
                ProblemCommand::Plucker { n } => schubert::problems::plucker(*n)?,
            };
            emit(&problem_output(&report), format, style)
        }
    }
}

/// Frame, factors and optional per-factor twists of a mult/degree call.
type ParsedClasses = (Frame, Vec<Partition>, Vec<Option<Twist>>);

fn parse_class_args(class: &ClassArgs) -> Result<ParsedClasses, Error> {
    let frame: Frame = class.frame.parse()?;
    let parts: Result<Vec<Partition>, Error> = class.partitions.iter().map(|s| s.parse()).collect();
    let parts = parts?;
    for p in &parts {
        if !p.fits(frame) {
            return Err(Error::Frame {
                partition: p.clone(),
                frame,
            });
        }
    }
    let twists = match &class.twists {
        None => vec![None; parts.len()],
        Some(spec) => {
            let given: Result<Vec<Option<Twist>>, Error> = spec
                .split(',')
                .map(|t| match t.trim() {
                    "o" | "O" => Ok(Some(Twist::O)),
                    "det" | "Det" => Ok(Some(Twist::Det)),
                    other => Err(Error::Input(format!("unknown twist {other:?}"))),
                })
                .collect();
            let given = given?;
            if given.len() != parts.len() {
                return Err(Error::Input(format!(
                    "{} twists given for {} factors",
                    given.len(),
                    parts.len()
                )));
            }
            given
        }
    };
    Ok((frame, parts, twists))
}

/// Picks the twist of each factor: an explicit flag wins; an even diagram
/// uses its own twist; otherwise the unique twist with vanishing Steenrod
/// square, if there is exactly one.
fn resolve_twist(p: &Partition, frame: Frame, given: Option<Twist>) -> Result<Twist, Error> {
    if let Some(tw) = given {
        return Ok(tw);
    }
    if p.is_even(frame)? {
        return p.twist(frame);
    }
    let class = Ch2Class::basis(frame, p)?;
    match (
        class.sq2(Twist::O).is_zero(),
        class.sq2(Twist::Det).is_zero(),
    ) {
        (true, false) => Ok(Twist::O),
        (false, true) => Ok(Twist::Det),
        (true, true) => Err(Error::Input(format!(
            "both twists of {p} are liftable; pass --twists explicitly"
        ))),
        (false, false) => Err(Error::NotLiftable {
            partition: p.clone(),
            twist: Twist::O,
            obstruction: class.sq2(Twist::O),
        }),
    }
}

fn multiply(
    ring: Ring,
    frame: Frame,
    parts: &[Partition],
    twists: &[Option<Twist>],
) -> Result<Output, Error> {
    match ring {
        Ring::Chow => {
            let mut acc = ChowClass::unit(frame);
            for p in parts {
                acc = acc.mul(&ChowClass::basis(frame, p)?)?;
            }
            Ok(chow_output(&acc))
        }
        Ring::Ch2 => {
            let mut acc = Ch2Class::unit(frame);
            for p in parts {
                acc = acc.mul(&Ch2Class::basis(frame, p)?)?;
            }
            Ok(ch2_output(&acc))
        }
        Ring::W => {
            let mut acc = WClass::unit(frame);
            for p in parts {
                acc = acc.mul(&WClass::even_basis(p, frame)?)?;
            }
            Ok(w_output(&acc))
        }
        Ring::I => {
            let mut acc = IClass::unit(frame);
            for (p, tw) in parts.iter().zip(twists) {
                let tw = resolve_twist(p, frame, *tw)?;
                acc = acc.mul(CwClass::lift(p, frame, tw)?.ipart())?;
            }
            Ok(i_output(&acc))
        }
        Ring::Cw => {
            let mut acc = CwClass::unit(frame);
            for (p, tw) in parts.iter().zip(twists) {
                let tw = resolve_twist(p, frame, *tw)?;
                acc = acc.mul(&CwClass::lift(p, frame, tw)?)?;
            }
            Ok(cw_output(&acc))
        }
    }
}

fn degree(
    ring: Ring,
    frame: Frame,
    parts: &[Partition],
    twists: &[Option<Twist>],
) -> Result<Output, Error> {
    match ring {
        Ring::Chow => {
            let mut acc = ChowClass::unit(frame);
            for p in parts {
                acc = acc.mul(&ChowClass::basis(frame, p)?)?;
            }
            Ok(degree_output(frame, GwDegree::Plain(acc.degree()?)))
        }
        Ring::Ch2 => {
            let mut acc = Ch2Class::unit(frame);
            for p in parts {
                acc = acc.mul(&Ch2Class::basis(frame, p)?)?;
            }
            Ok(mod2_degree_output(frame, acc.contains(&frame.rect())))
        }
        Ring::W => {
            let mut acc = WClass::unit(frame);
            for p in parts {
                acc = acc.mul(&WClass::even_basis(p, frame)?)?;
            }
            Ok(witt_degree_output(frame, acc.degree()?))
        }
        Ring::I | Ring::Cw => {
            let factors: Result<Vec<(Partition, Twist)>, Error> = parts
                .iter()
                .zip(twists)
                .map(|(p, tw)| Ok((p.clone(), resolve_twist(p, frame, *tw)?)))
                .collect();
            let deg = schubert_problem(&factors?, frame)?;
            Ok(degree_output(frame, deg))
        }
    }
}

fn emit(out: &Output, format: Format, style: Style) -> Result<(), Error> {
    match format {
        Format::Text => print!("{}", out.render_text(style)),
        Format::Json => {
            let json = serde_json::to_string(&out.dto)
                .map_err(|e| Error::Internal(format!("JSON serialization failed: {e}")))?;
            println!("{json}");
        }
    }
    Ok(())
}

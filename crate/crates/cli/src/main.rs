use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pldebound::bound::{self, DenomBound, Plde};
use pldebound::hull::{self, CornerData};
use pldebound::io::{self, EquationSource};
use pldebound::oracle;
use pldebound::poly::ShiftVector;
use pldebound::spread::{self, ExtInt};

/// Denominator bounds for rational solutions of linear partial difference
/// equations with polynomial coefficients.
#[derive(Parser)]
#[command(name = "pldebound", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Aperiodic denominator bound (combined over all corners by default)
    Bound(BoundArgs),
    /// Spread of two polynomials: points and lattice cosets
    Spread {
        #[arg(long)]
        vars: String,
        p: String,
        q: String,
        #[arg(long)]
        json: bool,
    },
    /// Dispersion and per-coordinate dispersions of two polynomials
    Disp {
        #[arg(long)]
        vars: String,
        p: String,
        q: String,
    },
    /// Periodic and aperiodic parts of a polynomial
    Split {
        #[arg(long)]
        vars: String,
        p: String,
    },
    /// Corner points of the support with inner vectors
    Corners {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Structure set W for one corner
    Structure {
        file: String,
        #[arg(long)]
        corner: usize,
        /// Slab depth; defaults to the dispersion bound
        #[arg(long)]
        depth: Option<u64>,
        #[arg(long, value_name = "v1,v2,...")]
        inner_vector: Option<String>,
    },
    /// Substitute a candidate solution and compare with the bound
    Verify {
        file: String,
        #[arg(long)]
        solution: String,
        #[arg(long)]
        refined: bool,
    },
}

#[derive(Args)]
struct BoundArgs {
    file: String,
    /// Bound for a single corner (index into the `corners` listing)
    #[arg(long, conflicts_with = "all")]
    corner: Option<usize>,
    /// Every per-corner bound followed by the combined bound
    #[arg(long)]
    all: bool,
    /// Restrict the dispersion to must-contain factor classes
    #[arg(long)]
    refined: bool,
    #[arg(long, value_name = "v1,v2,...", requires = "corner")]
    inner_vector: Option<String>,
    #[arg(long, group = "format")]
    json: bool,
    #[arg(long, group = "format")]
    factored: bool,
    #[arg(long, group = "format")]
    expanded: bool,
}

enum Failure {
    Input(String),
    Verification(String),
}

impl From<pldebound::Error> for Failure {
    fn from(e: pldebound::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            print!("{out}");
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Bound(args) => bound_cmd(args),
        Command::Spread { vars, p, q, json } => {
            let vars = io::parse_var_list(&vars)?;
            let s = spread::spread(&io::parse_poly(&p, &vars)?, &io::parse_poly(&q, &vars)?)?;
            Ok(if json { format!("{}\n", io::spread_json(&s)) } else { format!("{}\n", io::format_spread(&s)) })
        }
        Command::Disp { vars, p, q } => {
            let vars = io::parse_var_list(&vars)?;
            let (p, q) = (io::parse_poly(&p, &vars)?, io::parse_poly(&q, &vars)?);
            let mut out = format!("{}\n", spread::disp(&p, &q)?);
            for (k, v) in vars.iter().enumerate() {
                writeln!(out, "{v}: {}", spread::disp_k(&p, &q, k)?).unwrap();
            }
            Ok(out)
        }
        Command::Split { vars, p } => {
            let vars = io::parse_var_list(&vars)?;
            let (per, aper) = spread::split_periodic(&io::parse_poly(&p, &vars)?)?;
            Ok(format!("periodic: {}\naperiodic: {}\n", io::format_poly(&per, &vars), io::format_poly(&aper, &vars)))
        }
        Command::Corners { file, json } => {
            let src = load(&file)?;
            let corners = hull::corner_points(src.equation.support());
            if json {
                return Ok(format!("{}\n", serde_json::to_string_pretty(&corners).expect("serializable")));
            }
            Ok(corners.iter().enumerate().map(|(i, c)| format!("{i}: {} inner {}\n", c.point, c.inner)).collect())
        }
        Command::Structure { file, corner, depth, inner_vector } => {
            let src = load(&file)?;
            let c = pick_corner(&src.equation, corner, inner_vector.as_deref())?;
            let depth = match depth {
                Some(d) => d,
                None => match bound::dispersion_bound(&src.equation, false)? {
                    ExtInt::NegInf => 0,
                    ExtInt::Finite(d) => d.max(0) as u64,
                    ExtInt::PosInf => return Err(Failure::Input("dispersion bound is infinite".into())),
                },
            };
            let w = hull::find_structure_set(src.equation.support(), &c, depth)?;
            let items: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            Ok(format!("{{{}}}\n", items.join(",")))
        }
        Command::Verify { file, solution, refined } => verify_cmd(&file, &solution, refined),
    }
}

fn load(file: &str) -> Result<EquationSource, Failure> {
    let text = std::fs::read_to_string(file).map_err(|e| Failure::Input(format!("{file}: {e}")))?;
    Ok(io::parse_equation_file(&text)?)
}

fn parse_vector(text: &str) -> Result<ShiftVector, Failure> {
    text.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Failure::Input(format!("bad vector {text:?}"))))
        .collect::<Result<Vec<_>, _>>()
        .map(ShiftVector)
}

fn pick_corner(e: &Plde, index: usize, inner: Option<&str>) -> Result<CornerData, Failure> {
    let corners = hull::corner_points(e.support());
    let mut c = corners
        .get(index)
        .cloned()
        .ok_or_else(|| Failure::Input(format!("corner index {index} out of range (there are {})", corners.len())))?;
    if let Some(v) = inner {
        c.inner = parse_vector(v)?;
        c.validate(e.support())?;
    }
    Ok(c)
}

fn render(b: &DenomBound, vars: &[String], args: &BoundArgs) -> String {
    let body = if args.json {
        io::bound_json(b, vars)
    } else if args.factored {
        io::format_bound_factored(b, vars)
    } else if args.expanded {
        io::format_poly(&b.expand(), vars)
    } else {
        io::format_bound(b, vars)
    };
    format!("{body}\n")
}

fn bound_cmd(args: BoundArgs) -> Outcome {
    let src = load(&args.file)?;
    let e = &src.equation;
    if let Some(i) = args.corner {
        let c = pick_corner(e, i, args.inner_vector.as_deref())?;
        let s = bound::dispersion_bound(e, args.refined)?;
        return Ok(render(&bound::aperiodic_bound_at_corner(e, &c, s)?, &src.vars, &args));
    }
    let combined = bound::combined_bound(e, args.refined)?;
    if !args.all {
        return Ok(render(&combined, &src.vars, &args));
    }
    let s = bound::dispersion_bound(e, args.refined)?;
    let mut out = String::new();
    for c in hull::corner_points(e.support()) {
        writeln!(out, "corner {}:", c.point).unwrap();
        out.push_str(&render(&bound::aperiodic_bound_at_corner(e, &c, s)?, &src.vars, &args));
    }
    out.push_str("combined:\n");
    out.push_str(&render(&combined, &src.vars, &args));
    Ok(out)
}

fn verify_cmd(file: &str, solution: &str, refined: bool) -> Outcome {
    let src = load(file)?;
    let y = io::parse_rational_function(solution, &src.vars)?;
    let residual = oracle::apply_plde(&src.equation, &y)?;
    let holds = residual.is_zero();
    let (_, aperiodic) = spread::split_periodic(y.denominator())?;
    let b = bound::combined_bound(&src.equation, refined)?;
    let divides = aperiodic.divides(&b.expand());
    let mut out = String::new();
    if holds {
        out.push_str("equation holds: yes\n");
    } else {
        writeln!(out, "equation holds: no (residual {})", io::format_rational_function(&residual, &src.vars)).unwrap();
    }
    writeln!(out, "aperiodic denominator: {}", io::format_poly(&aperiodic, &src.vars)).unwrap();
    writeln!(out, "divides bound: {}", if divides { "yes" } else { "no" }).unwrap();
    if holds && divides {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

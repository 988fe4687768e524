//! `llt`: compute LLT polynomials and related symmetric functions, and run
//! verification sweeps over families of diagrams.

mod report;

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{builder::PossibleValuesParser, Args, Parser, Subcommand, ValueEnum};
use llt::charge::g_tilde;
use llt::colorings::{chromatic_qsym, llt_poly};
use llt::diagrams::parse_strict;
use llt::hall_littlewood::{hl_transformed, Series};
use llt::orientations::{charge_rhs, dump, lltc_poly};
use llt::verify::{run_sweep, Check, Scope, SweepOptions};
use llt::{AreaSequence, Basis, Error, Form, Limits, Partition, StripDiagram, SymFunc, VarShift};
use serde_json::json;

use report::{Format, RunReport};

#[derive(Parser, Debug)]
#[command(name = "llt", version, about = "Exact LLT polynomial computation and identity verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for sweeps and enumeration (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Largest number of vertices (and colors) the coloring engine will enumerate.
    #[arg(long, global = true, default_value_t = Limits::default().max_vertices)]
    max_colors: usize,

    /// Largest number of orientable edges the orientation engine will enumerate.
    #[arg(long, global = true, default_value_t = Limits::default().max_bits)]
    max_bits: usize,

    /// Accept strict edges that are not outer corners.
    #[arg(long, global = true)]
    unchecked: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute one symmetric function and print its expansion.
    Compute(ComputeArgs),
    /// Run a verification sweep; exits 1 if any instance fails.
    Verify(VerifyArgs),
    /// List named-family members, or build one family member.
    Families(FamiliesArgs),
    /// Print the statistics of every orientation of a diagram.
    DumpOrientations(DiagramArgs),
}

#[derive(Args, Debug, Clone, Default)]
struct DiagramArgs {
    /// Area sequence, e.g. `0,1,2,2`.
    #[arg(long)]
    area: Option<String>,
    /// Strict edges, e.g. `1-4,2-5`; `all-corners` sweeps every subset of outer corners.
    #[arg(long)]
    strict: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Object {
    Llt,
    Lltc,
    Chromatic,
    Hl,
    Gtilde,
    ChargeRhs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    M,
    E,
    H,
    P,
    S,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::M => Basis::M,
            BasisArg::E => Basis::E,
            BasisArg::H => Basis::H,
            BasisArg::P => Basis::P,
            BasisArg::S => Basis::S,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormArg {
    Plain,
    Shifted,
}

impl From<FormArg> for Form {
    fn from(f: FormArg) -> Form {
        match f {
            FormArg::Plain => Form::Plain,
            FormArg::Shifted => Form::Shifted,
        }
    }
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[arg(value_enum)]
    object: Object,
    #[command(flatten)]
    diagram: DiagramArgs,
    /// Partition for `hl`, e.g. `2,1`.
    #[arg(long)]
    partition: Option<String>,
    #[arg(long, value_enum, default_value_t = BasisArg::S)]
    basis: BasisArg,
    /// `shifted` reports the value at q+1.
    #[arg(long, value_enum, default_value_t = FormArg::Plain)]
    form: FormArg,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_parser = PossibleValuesParser::new(Check::ALL.map(Check::name)))]
    check: String,
    /// Sweep every instance of size 1..=n.
    #[arg(long)]
    n: Option<usize>,
    #[command(flatten)]
    diagram: DiagramArgs,
    /// Take every k-th area sequence at the largest size only.
    #[arg(long)]
    sample_stride: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    Complete,
    Line,
    Lollipop,
    MeltingLollipop,
    MeltingComplete,
    Rectangular,
}

#[derive(Args, Debug)]
struct FamiliesArgs {
    /// List named-family members of every size up to n.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum)]
    kind: Option<FamilyKind>,
    /// Family parameters, e.g. `7,2,3` for melting-lollipop (m,k,n).
    #[arg(long)]
    params: Option<String>,
}

enum CliError {
    Usage(String),
    Core(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// The invocation without `--threads`, so reports agree across thread counts.
fn command_echo() -> String {
    let mut parts = vec!["llt".to_string()];
    let mut args = std::env::args().skip(1);
    while let Some(a) = args.next() {
        if a == "--threads" {
            args.next();
        } else if !a.starts_with("--threads=") {
            parts.push(a);
        }
    }
    parts.join(" ")
}

fn parse_list(s: &str, what: &str) -> CliResult<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| t.trim().parse().map_err(|_| usage(format!("cannot parse {what} {s:?}")))).collect()
}

/// The diagram named by `--area`/`--strict`, and whether `all-corners` was requested.
fn parse_diagram(args: &DiagramArgs, unchecked: bool) -> CliResult<Option<(StripDiagram, bool)>> {
    let Some(area) = &args.area else {
        if args.strict.as_deref().is_some_and(|s| s != "all-corners") {
            return Err(usage("--strict needs --area"));
        }
        return Ok(None);
    };
    let area: AreaSequence = area.parse()?;
    let (strict, all_corners) = match args.strict.as_deref() {
        None => (Default::default(), false),
        Some("all-corners") => (Default::default(), true),
        Some(s) => (parse_strict(s)?, false),
    };
    let d = StripDiagram::new(area, strict)?;
    if !unchecked {
        d.validate_vertical_strip()?;
    }
    Ok(Some((d, all_corners)))
}

fn required_diagram(args: &DiagramArgs, unchecked: bool) -> CliResult<StripDiagram> {
    match parse_diagram(args, unchecked)? {
        Some((d, false)) => Ok(d),
        Some((_, true)) => Err(usage("`--strict all-corners` only applies to verify")),
        None => Err(usage("--area is required")),
    }
}

fn unicellular_area(d: &StripDiagram) -> CliResult<AreaSequence> {
    if !d.strict().is_empty() {
        return Err(usage("this object takes an area sequence without strict edges"));
    }
    Ok(d.area().clone())
}

fn in_form(f: SymFunc, form: Form) -> llt::Result<SymFunc> {
    match form {
        Form::Plain => Ok(f),
        Form::Shifted => f.shift_var(VarShift::Up),
    }
}

fn compute(cli: &Cli, args: &ComputeArgs, limits: &Limits, out: &mut impl Write) -> CliResult<u8> {
    let form: Form = args.form.into();
    let value = match args.object {
        Object::Hl => {
            let parts = args.partition.as_deref().ok_or_else(|| usage("hl needs --partition"))?;
            let lambda = Partition::new(parse_list(parts, "partition")?);
            let series = match form {
                Form::Plain => Series::Standard,
                Form::Shifted => Series::Shifted,
            };
            hl_transformed(&lambda, series)
        }
        object => {
            let d = required_diagram(&args.diagram, cli.unchecked)?;
            match object {
                Object::Llt => in_form(llt_poly(&d, limits)?, form)?,
                Object::Lltc => lltc_poly(&d, form, limits)?,
                Object::Chromatic => in_form(chromatic_qsym(&unicellular_area(&d)?, limits)?, form)?,
                Object::Gtilde => in_form(g_tilde(&unicellular_area(&d)?), form)?,
                Object::ChargeRhs => charge_rhs(&d, form, limits)?,
                Object::Hl => unreachable!("handled above"),
            }
        }
    };
    let basis: Basis = args.basis.into();
    let form_name = match form {
        Form::Plain => "plain",
        Form::Shifted => "shifted",
    };
    let object = args.object.to_possible_value().expect("no skipped variants").get_name().to_string();
    // The p-basis needs rational coefficients in general.
    if basis == Basis::P {
        let p = value.to_p_rational();
        match cli.format {
            Format::Text => {
                for (lambda, c) in p.terms() {
                    writeln!(out, "p{lambda}: {c}")?;
                }
            }
            Format::Json => writeln!(
                out,
                "{}",
                json!({ "command": command_echo(), "object": object, "form": form_name, "value": p })
            )?,
        }
        return Ok(0);
    }
    let value = value.to_basis(basis)?;
    match cli.format {
        Format::Text => {
            if value.is_zero() {
                writeln!(out, "0")?;
            }
            for (lambda, c) in value.terms() {
                writeln!(out, "{}{lambda}: {c}", basis.letter())?;
            }
        }
        Format::Json => writeln!(
            out,
            "{}",
            json!({ "command": command_echo(), "object": object, "form": form_name, "value": value })
        )?,
    }
    Ok(0)
}

fn verify(cli: &Cli, args: &VerifyArgs, limits: &Limits, out: &mut impl Write) -> CliResult<u8> {
    let check = Check::from_name(&args.check).expect("clap restricts the names");
    let diagram = parse_diagram(&args.diagram, cli.unchecked)?;
    let mut all_corners = diagram.as_ref().is_some_and(|(_, all)| *all);
    if args.diagram.area.is_none() && args.diagram.strict.as_deref() == Some("all-corners") {
        all_corners = true;
    }
    let scope = match (args.n, diagram) {
        (Some(n), None) => Scope::UpTo(n),
        (None, Some((d, _))) => {
            if !check.is_area_based() {
                return Err(usage(format!("{} takes --n, not --area", check.name())));
            }
            Scope::Diagram(d)
        }
        (Some(_), Some(_)) => return Err(usage("give either --n or --area, not both")),
        (None, None) => return Err(usage("verify needs --n or --area")),
    };
    if all_corners && !matches!(check, Check::Conjecture) {
        return Err(usage("`--strict all-corners` only applies to verify conjecture"));
    }
    let opts = SweepOptions { scope, all_corners, sample_top: args.sample_stride, limits: *limits };
    let start = Instant::now();
    let sweep = run_sweep(check, &opts)?;
    let report = RunReport::from_sweep(command_echo(), &sweep, start.elapsed());
    report::write_sweep(out, cli.format, &sweep, &report)?;
    Ok(report.exit_code())
}

fn families(cli: &Cli, args: &FamiliesArgs, out: &mut impl Write) -> CliResult<u8> {
    if let Some(kind) = args.kind {
        let p = parse_list(args.params.as_deref().unwrap_or(""), "parameters")?;
        let arity = |k: usize| {
            if p.len() == k {
                Ok(())
            } else {
                Err(usage(format!("{kind:?} takes {k} parameter(s)")))
            }
        };
        let a = match kind {
            FamilyKind::Complete => {
                arity(1)?;
                AreaSequence::complete(p[0])
            }
            FamilyKind::Line => {
                arity(1)?;
                AreaSequence::line(p[0])?
            }
            FamilyKind::Lollipop => {
                arity(2)?;
                AreaSequence::lollipop(p[0], p[1])?
            }
            FamilyKind::MeltingLollipop => {
                arity(3)?;
                AreaSequence::melting_lollipop(p[0], p[1], p[2])?
            }
            FamilyKind::MeltingComplete => {
                arity(2)?;
                AreaSequence::melting_complete(p[0], p[1])?
            }
            FamilyKind::Rectangular => {
                arity(2)?;
                AreaSequence::rectangular(p[0], p[1])?
            }
        };
        match cli.format {
            Format::Text => writeln!(out, "{a}")?,
            Format::Json => writeln!(out, "{}", json!({ "area": a.values() }))?,
        }
        return Ok(0);
    }
    let n = args.n.unwrap_or(6);
    for size in 1..=n {
        for a in AreaSequence::enumerate(size) {
            let names = a.named_families();
            if names.is_empty() {
                continue;
            }
            match cli.format {
                Format::Text => writeln!(out, "{a}: {}", names.join(", "))?,
                Format::Json => writeln!(out, "{}", json!({ "area": a.values(), "families": names }))?,
            }
        }
    }
    Ok(0)
}

fn dump_orientations(cli: &Cli, args: &DiagramArgs, limits: &Limits, out: &mut impl Write) -> CliResult<u8> {
    let d = required_diagram(args, cli.unchecked)?;
    for r in dump(&d, limits)? {
        match cli.format {
            Format::Text => {
                let sigma = r.sigma.as_ref().map_or(String::new(), |s| {
                    format!(" sigma=({})", s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
                });
                let hrv = r.hrv.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
                writeln!(out, "mask={} asc={} hrv=({hrv}) hrvpp={}{sigma}", r.mask, r.asc, r.hrvpp)?;
            }
            Format::Json => writeln!(out, "{}", serde_json::to_string(&r).map_err(io::Error::other)?)?,
        }
    }
    Ok(0)
}

fn run(cli: &Cli) -> CliResult<u8> {
    let limits = Limits { max_vertices: cli.max_colors, max_bits: cli.max_bits };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = match &cli.command {
        Command::Compute(args) => compute(cli, args, &limits, &mut out)?,
        Command::Verify(args) => verify(cli, args, &limits, &mut out)?,
        Command::Families(args) => families(cli, args, &mut out)?,
        Command::DumpOrientations(args) => dump_orientations(cli, args, &limits, &mut out)?,
    };
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        builder = builder.num_threads(t);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    };
    match pool.install(|| run(&cli)) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Core(e @ Error::ResourceLimit(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(CliError::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

//! Command-line front end for `twincover`.
//!
//! Every command writes one report to standard output: a JSON object by
//! default, or CSV with `--csv`. Exit status is 0 on success, 2 when the
//! input is outside the scope of the classifier, 1 on error.

pub mod census;
pub mod render;

use std::fmt;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use twincover::{
    cover_jsj_satellite, decide, lift_two_bridge, parse_presentation_capped, seifert_cover, BigInt,
    Int, KnotPresentation, TwoBridge, Verdict,
};

pub use census::CensusRow;

/// Environment variable bounding the absolute value of every input integer.
pub const MAX_INT_VAR: &str = "TWINCOVER_MAX_INT";

#[derive(Parser, Debug)]
#[command(name = "twincover", version, about = "Double branched cover twins of tunnel number one knots")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit JSON (the default)
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,

    /// Emit CSV with a header row
    #[arg(long, global = true)]
    pub csv: bool,

    /// Use arbitrary-precision integers instead of i64
    #[arg(long, global = true)]
    pub bigint: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether a knot is determined by its double branched cover
    Classify {
        presentation: String,
        /// Work with the mirror image
        #[arg(long)]
        mirror: bool,
    },
    /// Seifert invariants of the double branched cover
    Cover {
        presentation: String,
        #[arg(long)]
        mirror: bool,
    },
    /// Lift the 2-bridge link b(2α, β) to the double cover branched over one component
    #[command(allow_negative_numbers = true)]
    Lift { two_alpha: String, beta: String },
    /// JSJ pieces of the cover of a satellite knot
    Jsj {
        presentation: String,
        #[arg(long)]
        mirror: bool,
    },
    /// Census of a family over a bounded grid
    Tabulate {
        family: Family,
        /// Largest q for the torus family
        #[arg(long)]
        max: Option<u32>,
        /// Largest αᵢ (montesinos) or α (twobridge-lift)
        #[arg(long)]
        max_alpha: Option<u32>,
        /// Largest |b| for the montesinos family
        #[arg(long)]
        max_b: Option<u32>,
        /// Add an independent check column
        #[arg(long)]
        verify: bool,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Torus,
    Montesinos,
    TwobridgeLift,
}

#[derive(Debug)]
pub enum CliError {
    Core(twincover::Error),
    BadBounds(String),
    BadEnv(String),
    Usage(String),
    Output(String),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.code(),
            CliError::BadBounds(_) => "bad_bounds",
            CliError::BadEnv(_) => "bad_env",
            CliError::Usage(_) => "usage",
            CliError::Output(_) => "output",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::BadBounds(s) | CliError::BadEnv(s) | CliError::Usage(s) | CliError::Output(s) => {
                f.write_str(s)
            }
        }
    }
}

impl From<twincover::Error> for CliError {
    fn from(e: twincover::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

/// Exit status and standard output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout }
    }

    pub fn error(e: &CliError) -> Self {
        let body = json!({ "error": e.code(), "detail": e.to_string() });
        Outcome { code: 1, stdout: format!("{body}\n") }
    }
}

/// Parses arguments and runs the command. `max_int` is the value of
/// [`MAX_INT_VAR`], if set.
pub fn main_with<A, T>(args: A, max_int: Option<&str>) -> Outcome
where
    A: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, max_int),
        Err(e) if !e.use_stderr() => Outcome::ok(e.to_string()),
        Err(e) => Outcome::error(&CliError::Usage(e.to_string().trim_end().to_string())),
    }
}

pub fn run(cli: &Cli, max_int: Option<&str>) -> Outcome {
    let result = if cli.bigint {
        run_with::<BigInt>(cli, max_int)
    } else {
        run_with::<i64>(cli, max_int)
    };
    result.unwrap_or_else(|e| Outcome::error(&e))
}

/// Cap from the environment. A cap beyond the range of `I` caps nothing.
fn parse_cap<I: Int>(max_int: Option<&str>) -> Result<Option<I>, CliError> {
    let Some(raw) = max_int else { return Ok(None) };
    let bad = || CliError::BadEnv(format!("{MAX_INT_VAR}={raw:?} is not a non-negative integer"));
    let value: BigInt = raw.trim().parse().map_err(|_| bad())?;
    if value < BigInt::from(0) {
        return Err(bad());
    }
    Ok(I::from_str_radix(&value.to_string(), 10).ok())
}

fn parse_int<I: Int>(text: &str, cap: Option<&I>) -> Result<I, CliError> {
    let value = I::from_str_radix(text.trim().trim_start_matches('+'), 10).map_err(|_| {
        twincover::Error::Parse { position: 0, message: format!("{text:?} is not an integer") }
    })?;
    if let Some(cap) = cap {
        if value.abs_c()? > *cap {
            return Err(twincover::Error::IntegerCap { value: text.to_string(), cap: cap.to_string() }.into());
        }
    }
    Ok(value)
}

fn parse_knot<I: Int>(text: &str, mirror: bool, cap: Option<&I>) -> Result<KnotPresentation<I>, CliError> {
    let k = parse_presentation_capped(text, cap)?;
    Ok(if mirror { k.mirror()? } else { k })
}

fn bound<I: Int>(name: &str, value: Option<u32>, cap: Option<&I>) -> Result<I, CliError> {
    let v = value.ok_or_else(|| CliError::BadBounds(format!("--{name} is required for this family")))?;
    if v == 0 {
        return Err(CliError::BadBounds(format!("--{name} must be positive")));
    }
    parse_int(&v.to_string(), cap)
}

fn json_out(v: &Value) -> String {
    format!("{v}\n")
}

fn csv_out(header: &[&str], rows: &[Vec<String>]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    into_string(w)
}

fn into_string(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
}

pub fn rows_csv(rows: &[CensusRow]) -> Result<String, CliError> {
    let mut buf = Vec::new();
    census::write_csv(rows, &mut buf)?;
    String::from_utf8(buf).map_err(|e| CliError::Output(e.to_string()))
}

fn run_with<I: Int>(cli: &Cli, max_int: Option<&str>) -> Result<Outcome, CliError> {
    let cap = parse_cap::<I>(max_int)?;
    let cap = cap.as_ref();
    match &cli.command {
        Command::Classify { presentation, mirror } => run_classify(&parse_knot(presentation, *mirror, cap)?, cli.csv),
        Command::Cover { presentation, mirror } => run_cover(&parse_knot(presentation, *mirror, cap)?, cli.csv),
        Command::Lift { two_alpha, beta } => {
            let link = TwoBridge::new(parse_int(two_alpha, cap)?, parse_int(beta, cap)?)?;
            run_lift(&link, cli.csv)
        }
        Command::Jsj { presentation, mirror } => run_jsj(&parse_knot(presentation, *mirror, cap)?, cli.csv),
        Command::Tabulate { family, max, max_alpha, max_b, verify } => {
            let rows = match family {
                Family::Torus => census::torus_rows::<I>(&bound("max", *max, cap)?, *verify)?,
                Family::Montesinos => census::montesinos_rows::<I>(
                    &bound("max-alpha", *max_alpha, cap)?,
                    &parse_int(&max_b.unwrap_or(0).to_string(), cap)?,
                    *verify,
                )?,
                Family::TwobridgeLift => census::lift_rows::<I>(&bound("max-alpha", *max_alpha, cap)?)?,
            };
            run_tabulate(*family, &rows, cli.csv)
        }
    }
}

pub fn run_classify<I: Int>(k: &KnotPresentation<I>, csv: bool) -> Result<Outcome, CliError> {
    let d = decide(k)?;
    let stdout = if csv {
        rows_csv(&[CensusRow::from_determination(k, &d)])?
    } else {
        json_out(&render::determination(k, &d))
    };
    let code = if d.verdict == Verdict::OutOfScope { 2 } else { 0 };
    Ok(Outcome { code, stdout })
}

pub fn run_cover<I: Int>(k: &KnotPresentation<I>, csv: bool) -> Result<Outcome, CliError> {
    let c = seifert_cover(k)?;
    let b = c.integer_part()?;
    if csv {
        let row = vec![
            k.to_string(),
            census::fibers_text(&c),
            c.euler.to_string(),
            b.map(|b| b.to_string()).unwrap_or_default(),
        ];
        return Ok(Outcome::ok(csv_out(&["presentation", "fibers", "euler", "b"], &[row])?));
    }
    let mut v = render::report(json!({ "presentation": k.to_string() }));
    if let (Value::Object(m), Value::Object(extra)) = (&mut v, render::cover(&c)) {
        m.extend(extra);
        m.insert("b".into(), b.as_ref().map_or(Value::Null, render::int));
    }
    Ok(Outcome::ok(json_out(&v)))
}

pub fn run_lift<I: Int>(link: &TwoBridge<I>, csv: bool) -> Result<Outcome, CliError> {
    let l = lift_two_bridge(link)?;
    if csv {
        let cf = l.expansion.coefficients().iter().map(|c| c.to_string()).collect::<Vec<_>>();
        let row = vec![
            link.to_string(),
            l.lifted.to_string(),
            l.components.to_string(),
            l.linking_parity.to_string(),
            l.hyperbolic.to_string(),
            cf.join(" "),
        ];
        let header = ["link", "lifted", "components", "linking_parity", "hyperbolic", "cf"];
        return Ok(Outcome::ok(csv_out(&header, &[row])?));
    }
    Ok(Outcome::ok(json_out(&render::lift(link, &l))))
}

pub fn run_jsj<I: Int>(k: &KnotPresentation<I>, csv: bool) -> Result<Outcome, CliError> {
    let KnotPresentation::Satellite(s) = k else {
        return Err(twincover::Error::BadInput(format!("jsj needs a satellite presentation, got {k}")).into());
    };
    let g = cover_jsj_satellite(s)?;
    if csv {
        let header = ["index", "kind", "knot", "neighbors"];
        let rows: Vec<Vec<String>> = g
            .pieces
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let neighbors: Vec<String> = g
                    .edges
                    .iter()
                    .filter_map(|&(a, b)| match (a == i, b == i) {
                        (true, _) => Some(b.to_string()),
                        (_, true) => Some(a.to_string()),
                        _ => None,
                    })
                    .collect();
                vec![i.to_string(), p.kind().to_string(), render::piece_knot(p), neighbors.join(" ")]
            })
            .collect();
        return Ok(Outcome::ok(csv_out(&header, &rows)?));
    }
    let mut v = render::report(json!({ "presentation": k.to_string() }));
    if let (Value::Object(m), Value::Object(extra)) = (&mut v, render::jsj(&g)) {
        m.extend(extra);
    }
    Ok(Outcome::ok(json_out(&v)))
}

pub fn run_tabulate(family: Family, rows: &[CensusRow], csv: bool) -> Result<Outcome, CliError> {
    if csv {
        return Ok(Outcome::ok(rows_csv(rows)?));
    }
    let name = family.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    let v = render::report(json!({ "family": name, "count": rows.len(), "rows": rows }));
    Ok(Outcome::ok(json_out(&v)))
}

//! Command-line front end. Data goes to stdout, diagnostics to stderr.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::arith::{factor, perfect_powers, power_gap_pairs, FactorBudget};
use crate::curve::{CurvePoint, WeierstrassCurve};
use crate::error::Error;
use crate::points::{canonical_shape, log_distance, point_length};
use crate::search::{
    choose_generators, gm_hypotheses_check, hall_ratio, hall_scan, integral_points_mordell,
    lattice_length_search, small_rational_point_search, torsion_points, HallRecord, LatticeSearch,
};

#[derive(Debug, Parser)]
#[command(name = "mordell", version, about = "Integral points, Hall ratios and length-bounded points on elliptic curves")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct BudgetArgs {
    /// Trial-division bound.
    #[arg(long, default_value_t = FactorBudget::default().trial_bound, value_parser = clap::value_parser!(u64).range(1..))]
    pub trial_bound: u64,
    /// Total Pollard rho iterations per number.
    #[arg(long, default_value_t = FactorBudget::default().rho_iterations)]
    pub rho_iterations: u64,
    /// Miller-Rabin rounds above the deterministic range.
    #[arg(long, default_value_t = FactorBudget::default().mr_rounds, value_parser = clap::value_parser!(u32).range(1..))]
    pub mr_rounds: u32,
}

impl From<BudgetArgs> for FactorBudget {
    fn from(b: BudgetArgs) -> Self {
        FactorBudget { trial_bound: b.trial_bound, rho_iterations: b.rho_iterations, mr_rounds: b.mr_rounds }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Integral points on y^2 = x^3 + d with |x| <= bound.
    Integral {
        #[arg(short, allow_hyphen_values = true)]
        d: BigInt,
        #[arg(long, default_value = "10000")]
        bound: BigInt,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Hall ratios log x / (2 log |d|).
    Hall {
        /// File of `d x` pairs, one per line (`#` starts a comment).
        #[arg(long, conflicts_with_all = ["d", "bound"])]
        pairs: Option<PathBuf>,
        #[arg(short, allow_hyphen_values = true, required_unless_present = "pairs")]
        d: Option<BigInt>,
        #[arg(long, required_unless_present = "pairs")]
        bound: Option<BigInt>,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Perfect powers up to a limit, or pairs of them differing by a gap.
    Powers {
        #[arg(long)]
        limit: BigInt,
        #[arg(long)]
        gap: Option<BigInt>,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Points with x = A/B^2, B <= b-max, |A| <= a-max.
    SmallPoints {
        #[arg(long)]
        curve: WeierstrassCurve,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        b_max: u64,
        #[arg(long, default_value = "10")]
        a_max: BigInt,
    },
    /// Census of lengths and distances over m P + n Q, |m|, |n| <= range.
    SearchLength {
        #[arg(long)]
        curve: WeierstrassCurve,
        /// Generator; give twice. Omitted: chosen from a small-point search.
        #[arg(long = "gen", num_args = 1)]
        generators: Vec<CurvePoint>,
        #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(1..))]
        range: u32,
        /// Length bound for rows counted toward h_bar.
        #[arg(short, default_value_t = 1)]
        k: u32,
        /// Reference point: `inf` or `(x,y)`.
        #[arg(long = "ref", default_value = "inf")]
        reference: CurvePoint,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
        /// Worker threads (default: all cores).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        threads: Option<u64>,
        /// Torsion point T; also search m P + n Q + T. Repeatable.
        #[arg(long = "coset")]
        cosets: Vec<CurvePoint>,
        /// Search all torsion translates found by the small-point search.
        #[arg(long, conflicts_with = "cosets")]
        torsion_cosets: bool,
        /// Count rows of length exactly k instead of at most k.
        #[arg(long)]
        exact_length: bool,
        /// Count length-1 rows only when B itself is prime.
        #[arg(long)]
        strict_prime: bool,
        /// B bound for generator discovery.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        search_b_max: u64,
        /// |A| bound for generator discovery.
        #[arg(long, default_value = "10")]
        search_a_max: BigInt,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Check independence hypotheses for Q1, Q2 on y^2 = x^3 - N x.
    GmCheck {
        #[arg(short = 'N')]
        n: BigInt,
        #[arg(long)]
        q1: CurvePoint,
        #[arg(long)]
        q2: CurvePoint,
        #[arg(long, default_value_t = 12)]
        relation_bound: u32,
    },
    /// Factor an integer within a budget.
    Factor {
        #[arg(allow_hyphen_values = true)]
        n: BigInt,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// The (A/B^2, C/B^3) shape and length of a point.
    Shape {
        point: CurvePoint,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Length of a point: distinct primes dividing B.
    Length {
        point: CurvePoint,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Logarithmic distance from a reference point.
    Distance {
        #[arg(long = "ref", default_value = "inf")]
        reference: CurvePoint,
        point: CurvePoint,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
}

/// A failure with its exit code: 1 for runtime errors, 2 for usage errors.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: 1, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: 1, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

/// Parse `args` and run; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Logs in table output keep three decimals, truncated like published tables.
fn three_decimals(v: f64) -> String {
    if v.is_finite() {
        format!("{:.3}", (v * 1000.0).trunc() / 1000.0)
    } else {
        v.to_string()
    }
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Integral { d, bound, format } => {
            let sols = integral_points_mordell(&d, &bound)?;
            match format {
                Format::Json => writeln!(out, "{}", json(&sols))?,
                Format::Csv => {
                    writeln!(out, "x,y")?;
                    for s in &sols {
                        writeln!(out, "{},{}", s.x, s.y)?;
                    }
                }
                Format::Pretty => {
                    if sols.is_empty() {
                        writeln!(err, "no integral points with |x| <= {bound}")?;
                    }
                    for s in &sols {
                        let sign = if s.y == BigInt::from(0) { "" } else { "±" };
                        writeln!(out, "({}, {sign}{})", s.x, s.y)?;
                    }
                }
            }
        }
        Command::Hall { pairs, d, bound, format } => {
            let records = match pairs {
                Some(path) => read_pairs(&path)?
                    .into_iter()
                    .map(|(line, d, x)| {
                        hall_ratio(&d, &x).map_err(|e| Failure {
                            code: 1,
                            message: format!("{}:{line}: pair (d = {d}, x = {x}): {e}", path.display()),
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?,
                None => {
                    let (d, bound) = (d.expect("required by clap"), bound.expect("required by clap"));
                    hall_scan(&d, &bound)?
                }
            };
            write_hall(&records, format, out)?;
        }
        Command::Powers { limit, gap, format } => match gap {
            Some(gap) => {
                let pairs = power_gap_pairs(&limit, &gap);
                match format {
                    Format::Json => writeln!(out, "{}", json(&pairs.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect::<Vec<_>>()))?,
                    Format::Csv => {
                        writeln!(out, "a,b")?;
                        for (a, b) in &pairs {
                            writeln!(out, "{a},{b}")?;
                        }
                    }
                    Format::Pretty => {
                        for (a, b) in &pairs {
                            writeln!(out, "({a}, {b})")?;
                        }
                    }
                }
            }
            None => {
                let seq = perfect_powers(&limit);
                match format {
                    Format::Json => writeln!(out, "{}", json(&seq))?,
                    Format::Csv => {
                        writeln!(out, "value,base,exponent")?;
                        for e in &seq {
                            writeln!(out, "{},{},{}", e.value, e.base, e.exponent)?;
                        }
                    }
                    Format::Pretty => {
                        let terms: Vec<String> = seq.iter().map(|e| e.value.to_string()).collect();
                        writeln!(out, "{}", terms.join(", "))?;
                    }
                }
            }
        },
        Command::SmallPoints { curve, b_max, a_max } => {
            for p in small_rational_point_search(&curve, b_max, &a_max)? {
                writeln!(out, "{p}")?;
            }
        }
        Command::SearchLength {
            curve,
            generators,
            range,
            k,
            reference,
            format,
            threads,
            cosets,
            torsion_cosets,
            exact_length,
            strict_prime,
            search_b_max,
            search_a_max,
            budget,
        } => {
            let discovered = generators.is_empty();
            let candidates = if discovered || torsion_cosets {
                small_rational_point_search(&curve, search_b_max, &search_a_max)?
            } else {
                Vec::new()
            };
            let cosets = if torsion_cosets { torsion_points(&curve, &candidates) } else { cosets };
            let (p, q) = match generators.as_slice() {
                [p, q] => (p.clone(), q.clone()),
                [] => {
                    choose_generators(&curve, &candidates, 12).ok_or_else(|| Failure {
                        code: 1,
                        message: format!(
                            "no independent generator pair among points with B <= {search_b_max}, |A| <= {search_a_max}"
                        ),
                    })?
                }
                _ => return Err(usage("--gen must be given exactly twice, or not at all")),
            };
            if discovered {
                writeln!(err, "note: generators {p}, {q} were chosen by small-point search; h_bar depends on this basis")?;
            }
            let params = LatticeSearch {
                range,
                k,
                reference,
                budget: budget.into(),
                cosets,
                exact_length,
                strict_prime,
                threads: threads.map(|t| t as usize),
            };
            let report = lattice_length_search(&curve, &p, &q, &params)?;
            if report.coverage.unresolved_count > 0 {
                writeln!(
                    err,
                    "warning: {} rows left undecided by the factoring budget",
                    report.coverage.unresolved_count
                )?;
            }
            match format {
                Format::Csv => write!(out, "{}", report.to_csv())?,
                Format::Json => writeln!(out, "{}", report.to_json())?,
                Format::Pretty => {
                    let c = &report.coverage;
                    writeln!(out, "curve       {}", report.curve)?;
                    writeln!(out, "generators  P = {}, Q = {}", report.generators[0], report.generators[1])?;
                    writeln!(out, "reference   {}", report.reference)?;
                    if !report.cosets.is_empty() {
                        writeln!(out, "cosets      {}", report.cosets.join(", "))?;
                    }
                    let rel = if report.exact_length { "=" } else { "<=" };
                    let prime = if report.strict_prime { ", B prime" } else { "" };
                    writeln!(out, "range       {}   length {rel} {}{prime}", c.range, report.k)?;
                    match (report.h_bar, &report.argmax, report.ratio) {
                        (Some(h), Some(a), Some(r)) => {
                            let shift = if a.coset > 0 { format!(" + {}", report.cosets[a.coset - 1]) } else { String::new() };
                            writeln!(
                                out,
                                "h_bar       {}   at (m, n) = ({}, {}){shift}, B has {} digits",
                                three_decimals(h),
                                a.m,
                                a.n,
                                a.b_digits
                            )?;
                            writeln!(out, "h_E         {}", three_decimals(report.h_e))?;
                            writeln!(out, "ratio       {}", three_decimals(r))?;
                        }
                        _ => {
                            writeln!(out, "h_bar       none (no qualifying rows)")?;
                            writeln!(out, "h_E         {}", three_decimals(report.h_e))?;
                        }
                    }
                    writeln!(
                        out,
                        "coverage    {} rows, {} counted, {} unresolved, {} at the reference, {} identity, {} duplicates",
                        c.rows, c.counted, c.unresolved_count, c.infinite_proximity_count, c.identity_count, c.duplicate_count
                    )?;
                }
            }
        }
        Command::GmCheck { n, q1, q2, relation_bound } => {
            let report = gm_hypotheses_check(&n, &q1, &q2, relation_bound)?;
            writeln!(out, "{report}")?;
            if !report.passed() {
                return Err(Failure { code: 1, message: "hypotheses not satisfied".into() });
            }
        }
        Command::Factor { n, budget } => {
            let f = factor(&n, &budget.into())?;
            let sign = if n < BigInt::from(0) { "-" } else { "" };
            writeln!(out, "{sign}{f}")?;
            if !f.is_complete() {
                writeln!(err, "warning: cofactor {} left unsplit by the budget", f.cofactor)?;
            }
        }
        Command::Shape { point, budget } => {
            let s = canonical_shape(&point)?;
            let len = point_length(&point, &budget.into())?;
            writeln!(out, "A={} B={} C={}", s.a, s.b, s.c)?;
            writeln!(out, "length {len}")?;
        }
        Command::Length { point, budget } => {
            writeln!(out, "{}", point_length(&point, &budget.into())?)?;
        }
        Command::Distance { reference, point, format } => {
            let h = log_distance(&reference, &point)?;
            match format {
                Format::Json => writeln!(out, "{}", json(&h))?,
                Format::Csv => writeln!(out, "h\n{h}")?,
                Format::Pretty => match h.finite() {
                    Some(v) => writeln!(out, "{}", three_decimals(v))?,
                    None => writeln!(out, "{h}")?,
                },
            }
        }
    }
    Ok(())
}

fn read_pairs(path: &PathBuf) -> Result<Vec<(usize, BigInt, BigInt)>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure { code: 1, message: format!("{}: {e}", path.display()) })?;
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(|c: char| c == ',' || c.is_whitespace()).filter(|f| !f.is_empty()).collect();
        let parsed = match fields.as_slice() {
            [d, x] => d.parse::<BigInt>().ok().zip(x.parse::<BigInt>().ok()),
            _ => None,
        };
        let (d, x) = parsed.ok_or_else(|| Failure {
            code: 1,
            message: format!("{}:{}: expected `d x`, got {raw:?}", path.display(), i + 1),
        })?;
        pairs.push((i + 1, d, x));
    }
    Ok(pairs)
}

fn write_hall(records: &[HallRecord], format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", json(records)),
        Format::Csv => {
            writeln!(out, "d,x,log_x,ratio")?;
            for r in records {
                writeln!(out, "{},{},{},{}", r.d, r.x, r.log_x, r.ratio)?;
            }
            Ok(())
        }
        Format::Pretty => {
            writeln!(out, "{:>12} {:>22} {:>8} {:>8}", "d", "x", "log x", "ratio")?;
            for r in records {
                writeln!(out, "{:>12} {:>22} {:>8} {:>8}", r.d, r.x, three_decimals(r.log_x), three_decimals(r.ratio))?;
            }
            Ok(())
        }
    }
}

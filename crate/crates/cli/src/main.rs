//! Command-line front end for the almost-square experiments.
//!
//! Every subcommand validates its parameters up front, runs one experiment,
//! and writes a headered CSV (or JSON lines with --format json). Exit codes
//! distinguish tool failures from falsified mathematics:
//!
//!   0  success
//!   1  runtime error (I/O, malformed input file, internal failure)
//!   2  usage error (unknown flag, parameter outside its precondition)
//!   3  the experiment ran but its property failed (a bound violated, a
//!      probe ratio above the alert threshold, or no qualifying candidate)

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_rational::Rational64;
use num_traits::{Signed, Zero};

use nearsq::experiments::{
    fit_exponent, log_grid, max_gap_two_squares, mult_table_count, product_gap,
    quarter_point_check, scan_worst_offset, two_squares_near, GapRecord, ScanMethod,
};
use nearsq::expsum::{default_probe_grid, fractional_count, probe_conjecture};
use nearsq::report::{self, Format};
use nearsq::search::{
    brute_force_nearest, conditional_find, d_search, floor_pow_times, search_window,
};
use nearsq::{parse_rational, Error};

#[derive(Parser)]
#[command(
    name = "nearsq",
    version,
    about = "Search for almost squares near x and run the companion gap and exponential-sum experiments",
    propagate_version = true
)]
struct Cli {
    /// Worker threads (0 = all cores); output bytes do not depend on this
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,

    /// Output path, '-' for stdout
    #[arg(long, global = true, default_value = "-")]
    output: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Format {
        match f {
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Exhaustive scan over factor pairs in the window
    Brute,
    /// Scan over the half-difference d with exact nearest-square rounding
    Dsearch,
    /// Equidistribution-driven scan of {d²/(2√x)} mod 1
    Conditional,
}

fn rational(s: &str) -> Result<Rational64, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn biguint(s: &str) -> Result<BigUint, String> {
    s.parse::<BigUint>().map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Find the almost square nearest to x: factors a, b within c2·x^θ of √x
    Find(FindArgs),
    /// Minimal offsets across an x-grid, for exponent estimation
    Scan(ScanArgs),
    /// Lower-bound check at x ≈ (k + 1/4)²: offsets cannot beat (1/4)√x − c2²x^(2θ) − 1
    Quarter(QuarterArgs),
    /// Gap floor among window products in [x − c·x^(1/2+θ), x]: max gap ≥ x^(1/2−θ)/(4c)
    ProductGap(ProductGapArgs),
    /// Distinct values in the n × n multiplication table
    Multtable(MultArgs),
    /// Sums of two squares: nearest representation and gap statistics
    #[command(subcommand)]
    TwoSquares(TwoSquaresCmd),
    /// Twisted incomplete Salié sums against their conjectured envelope
    SalieProbe(ProbeArgs),
    /// Count n ≤ N with {p·n²/q} in the window (λ−Δ, λ+Δ) mod 1
    FractionalCount(FracArgs),
    /// Least-squares exponent fit over a scan CSV (columns x, offset)
    Fit(FitArgs),
}

#[derive(Args)]
struct FindArgs {
    /// Target integer
    #[arg(long, value_parser = biguint)]
    x: BigUint,
    /// Window exponent θ
    #[arg(long, value_parser = rational, default_value = "0.25")]
    theta: Rational64,
    /// Window width coefficient
    #[arg(long, value_parser = rational, default_value = "2")]
    c2: Rational64,
    /// Search strategy
    #[arg(long, value_enum, default_value_t = Method::Brute)]
    method: Method,
    /// Window sharpening for the conditional method
    #[arg(long, value_parser = rational, default_value = "0.01")]
    eps: Rational64,
}

#[derive(Args)]
struct ScanArgs {
    /// Grid start
    #[arg(long, default_value_t = 10_000)]
    x_from: u64,
    /// Grid end
    #[arg(long, default_value_t = 1_000_000)]
    x_to: u64,
    /// Number of geometrically spaced grid points
    #[arg(long, default_value_t = 20)]
    points: usize,
    /// Explicit comma-separated x list overriding the grid
    #[arg(long)]
    xs: Option<String>,
    #[arg(long, value_parser = rational, default_value = "0.25")]
    theta: Rational64,
    #[arg(long, value_parser = rational, default_value = "2")]
    c2: Rational64,
    /// brute or dsearch
    #[arg(long, value_enum, default_value_t = Method::Brute)]
    method: Method,
}

#[derive(Args)]
struct QuarterArgs {
    /// Quarter-point index: x is the nearest integer to (k + 1/4)²
    #[arg(long)]
    k: u64,
    #[arg(long, value_parser = rational, default_value = "0.15")]
    theta: Rational64,
    #[arg(long, value_parser = rational, default_value = "1")]
    c2: Rational64,
}

#[derive(Args)]
struct ProductGapArgs {
    #[arg(long, value_parser = biguint)]
    x: BigUint,
    #[arg(long, value_parser = rational, default_value = "0.3")]
    theta: Rational64,
    /// Window and interval coefficient
    #[arg(long, value_parser = rational, default_value = "1")]
    c: Rational64,
}

#[derive(Args)]
struct MultArgs {
    /// Table size
    #[arg(long)]
    n: u64,
}

#[derive(Subcommand)]
enum TwoSquaresCmd {
    /// Nearest D² + d² to x over d ≤ d-max
    Near {
        #[arg(long, value_parser = biguint)]
        x: BigUint,
        #[arg(long)]
        d_max: u64,
    },
    /// Largest gap between consecutive sums of two squares in [lo, hi]
    Gap {
        #[arg(long)]
        lo: u64,
        #[arg(long)]
        hi: u64,
    },
}

#[derive(Args)]
struct ProbeArgs {
    /// Largest modulus in the default grid (odd non-squares)
    #[arg(long, default_value_t = 200)]
    q_max: u64,
    /// Largest twist a (coprime to q)
    #[arg(long, default_value_t = 5)]
    a_max: i64,
    /// Exponent ε in the envelope's q^ε factor
    #[arg(long, default_value_t = 0.1)]
    eps: f64,
    /// Exit 3 when any ratio exceeds this threshold
    #[arg(long)]
    alert_ratio: Option<f64>,
}

#[derive(Args)]
struct FracArgs {
    #[arg(long, default_value_t = 1)]
    p: u64,
    #[arg(long)]
    q: u64,
    /// Window center (rational, e.g. 0.3 or 1/4)
    #[arg(long, value_parser = rational)]
    lambda: Rational64,
    /// Window half-width (rational in (0, 1/2])
    #[arg(long, value_parser = rational)]
    delta: Rational64,
    /// Scan length N
    #[arg(long)]
    n: u64,
}

#[derive(Args)]
struct FitArgs {
    /// Scan CSV to read ('-' for stdin)
    #[arg(long, default_value = "-")]
    input: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = validate(&cli.command) {
        eprintln!("error: {msg}");
        eprintln!("For more information, try '--help'.");
        return ExitCode::from(2);
    }
    if cli.workers > 0 {
        // ignore failure: the pool can only be set once (tests call run twice)
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.workers)
            .build_global();
    }
    let format = cli.format.into();
    match run(&cli.command, format) {
        Ok(output) => {
            match emit(&cli.output, &output.lines) {
                // a closed pipe downstream is not our failure
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
                Err(e) => {
                    eprintln!("error: cannot write output: {e}");
                    return ExitCode::from(1);
                }
                Ok(()) => {}
            }
            ExitCode::from(if output.property_failed { 3 } else { 0 })
        }
        Err(Error::NoCandidate(hi)) => {
            eprintln!("no candidate d in [0, {hi}] hit the target window");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

/// Parameter checks shared by parse-time validation; violations are usage
/// errors (exit 2), found before any computation starts.
fn validate(cmd: &Command) -> Result<(), String> {
    let window_theta = |theta: Rational64| -> Result<(), String> {
        if theta.is_negative() || theta >= Rational64::new(1, 2) {
            Err(format!("theta = {theta} must lie in [0, 1/2)"))
        } else {
            Ok(())
        }
    };
    let positive = |v: Rational64, name: &str| -> Result<(), String> {
        if v.is_positive() {
            Ok(())
        } else {
            Err(format!("{name} = {v} must be positive"))
        }
    };
    match cmd {
        Command::Find(a) => {
            if a.x.is_zero() {
                return Err("x must be positive".into());
            }
            positive(a.c2, "c2")?;
            match a.method {
                Method::Conditional => {
                    if a.theta <= Rational64::new(1, 4) || a.theta >= Rational64::new(1, 3) {
                        return Err(format!(
                            "theta = {} must lie in (1/4, 1/3) for --method conditional",
                            a.theta
                        ));
                    }
                    if !a.eps.is_positive() || a.theta - a.eps * 2 <= Rational64::zero() {
                        return Err(format!("eps = {} must satisfy 0 < 2*eps < theta", a.eps));
                    }
                    Ok(())
                }
                _ => window_theta(a.theta),
            }
        }
        Command::Scan(a) => {
            if a.method == Method::Conditional {
                return Err("scan supports --method brute or dsearch".into());
            }
            if a.xs.is_none() {
                if a.x_from < 1 || a.x_from > a.x_to {
                    return Err("need 1 <= x-from <= x-to".into());
                }
                if a.points < 2 {
                    return Err("need at least 2 grid points".into());
                }
            }
            positive(a.c2, "c2")?;
            window_theta(a.theta)
        }
        Command::Quarter(a) => {
            if a.k == 0 {
                return Err("k must be positive".into());
            }
            if a.theta.is_negative() || a.theta >= Rational64::new(1, 4) {
                return Err(format!("theta = {} must lie in [0, 1/4)", a.theta));
            }
            positive(a.c2, "c2")
        }
        Command::ProductGap(a) => {
            if a.x.is_zero() {
                return Err("x must be positive".into());
            }
            positive(a.c, "c")?;
            window_theta(a.theta)
        }
        Command::Multtable(a) => {
            if a.n == 0 || a.n > nearsq::experiments::MULT_TABLE_LIMIT {
                return Err(format!(
                    "n must lie in [1, {}]",
                    nearsq::experiments::MULT_TABLE_LIMIT
                ));
            }
            Ok(())
        }
        Command::TwoSquares(TwoSquaresCmd::Near { x, d_max }) => {
            let dm = BigUint::from(*d_max);
            if &dm * &dm >= *x {
                return Err("need d_max^2 < x".into());
            }
            Ok(())
        }
        Command::TwoSquares(TwoSquaresCmd::Gap { lo, hi }) => {
            if lo > hi {
                return Err("need lo <= hi".into());
            }
            if *hi > nearsq::experiments::SIEVE_LIMIT {
                return Err(format!(
                    "hi exceeds the sieve limit {}",
                    nearsq::experiments::SIEVE_LIMIT
                ));
            }
            Ok(())
        }
        Command::SalieProbe(a) => {
            if a.q_max < 3 {
                return Err("q-max must be at least 3".into());
            }
            if a.a_max < 1 {
                return Err("a-max must be at least 1".into());
            }
            if a.eps < 0.0 {
                return Err("eps must be nonnegative".into());
            }
            Ok(())
        }
        Command::FractionalCount(a) => {
            use num_integer::Integer;
            if a.q == 0 || a.p.gcd(&a.q) != 1 {
                return Err("p and q must be coprime (q >= 1)".into());
            }
            if !a.delta.is_positive() || a.delta > Rational64::new(1, 2) {
                return Err(format!("delta = {} must lie in (0, 1/2]", a.delta));
            }
            Ok(())
        }
        Command::Fit(_) => Ok(()),
    }
}

struct Output {
    lines: Vec<String>,
    property_failed: bool,
}

impl Output {
    fn ok(lines: Vec<String>) -> Self {
        Output {
            lines,
            property_failed: false,
        }
    }
}

fn run(cmd: &Command, format: Format) -> Result<Output, Error> {
    match cmd {
        Command::Find(a) => {
            let hit = match a.method {
                Method::Brute => {
                    let w = search_window(&a.x, a.theta, a.c2)?;
                    brute_force_nearest(&a.x, &w)?
                }
                Method::Dsearch => {
                    let d_hi = floor_pow_times(&a.x, a.theta, a.c2)?;
                    let d_hi = u64::try_from(&d_hi)
                        .map_err(|_| Error::InvalidInput("d range too large".into()))?;
                    d_search(&a.x, 0, d_hi)?
                }
                Method::Conditional => conditional_find(&a.x, a.theta, a.eps)?,
            };
            let mut lines = header(format, report::FIND_HEADER);
            lines.push(report::find_row(&hit, format));
            Ok(Output::ok(lines))
        }
        Command::Scan(a) => {
            let xs: Vec<BigUint> = match &a.xs {
                Some(list) => list
                    .split(',')
                    .map(|s| {
                        s.trim()
                            .parse::<BigUint>()
                            .map_err(|e| Error::InvalidInput(format!("bad x '{s}': {e}")))
                    })
                    .collect::<Result<_, _>>()?,
                None => log_grid(a.x_from, a.x_to, a.points),
            };
            let method = match a.method {
                Method::Brute => ScanMethod::Brute,
                _ => ScanMethod::DSearch,
            };
            let recs = scan_worst_offset(&xs, a.theta, a.c2, method)?;
            let mut lines = header(format, report::GAP_HEADER);
            lines.extend(recs.iter().map(|r| report::scan_row(r, format)));
            Ok(Output::ok(lines))
        }
        Command::Quarter(a) => {
            let check = quarter_point_check(a.k, a.theta, a.c2)?;
            let mut lines = header(format, report::GAP_HEADER);
            lines.push(report::quarter_row(&check, format));
            Ok(Output {
                lines,
                property_failed: !check.pass,
            })
        }
        Command::ProductGap(a) => {
            let check = product_gap(&a.x, a.theta, a.c)?;
            let mut lines = header(format, report::GAP_HEADER);
            lines.push(report::product_gap_row(&check, format));
            Ok(Output {
                lines,
                property_failed: !check.pass,
            })
        }
        Command::Multtable(a) => {
            let count = mult_table_count(a.n)?;
            let mut lines = header(format, report::MULTTABLE_HEADER);
            lines.push(report::multtable_row(a.n, count, format));
            Ok(Output::ok(lines))
        }
        Command::TwoSquares(TwoSquaresCmd::Near { x, d_max }) => {
            let r = two_squares_near(x, *d_max)?;
            let mut lines = header(format, report::TWO_SQUARES_NEAR_HEADER);
            lines.push(report::two_squares_near_row(&r, format));
            Ok(Output::ok(lines))
        }
        Command::TwoSquares(TwoSquaresCmd::Gap { lo, hi }) => {
            let (gap, at) = max_gap_two_squares(*lo, *hi)?;
            let mut lines = header(format, report::TWO_SQUARES_GAP_HEADER);
            lines.push(report::two_squares_gap_row(*lo, *hi, gap, at, format));
            Ok(Output::ok(lines))
        }
        Command::SalieProbe(a) => {
            let grid = default_probe_grid(a.q_max, a.a_max);
            let probe = probe_conjecture(&grid, a.eps);
            for (q, why) in &probe.skipped {
                eprintln!("skipped a={} q={}: {why}", q.a, q.q);
            }
            let mut lines = header(format, report::PROBE_HEADER);
            lines.extend(report::probe_rows(&probe, format));
            let exceeded = match (a.alert_ratio, probe.max_ratio()) {
                (Some(alert), Some((_, max))) => max > alert,
                _ => false,
            };
            Ok(Output {
                lines,
                property_failed: exceeded,
            })
        }
        Command::FractionalCount(a) => {
            let r = fractional_count(a.p, a.q, a.lambda, a.delta, a.n)?;
            let mut lines = header(format, report::FRACTIONAL_HEADER);
            lines.push(report::fractional_row(&r, a.lambda, a.delta, format));
            Ok(Output::ok(lines))
        }
        Command::Fit(a) => {
            let text = if a.input == "-" {
                use std::io::Read;
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| Error::InvalidInput(format!("cannot read stdin: {e}")))?;
                buf
            } else {
                std::fs::read_to_string(&a.input)
                    .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", a.input)))?
            };
            let records = parse_scan_csv(&text)?;
            let fit = fit_exponent(&records)?;
            let mut lines = header(format, report::FIT_HEADER);
            lines.push(report::fit_row(fit.slope, fit.intercept, fit.count, format));
            Ok(Output::ok(lines))
        }
    }
}

fn header(format: Format, head: &str) -> Vec<String> {
    match format {
        Format::Csv => vec![head.to_string()],
        Format::Json => Vec::new(),
    }
}

/// Read (x, offset) pairs back out of a scan CSV by header position.
fn parse_scan_csv(text: &str) -> Result<Vec<GapRecord>, Error> {
    let mut lines = text.lines();
    let head = lines
        .next()
        .ok_or_else(|| Error::InvalidInput("empty input".into()))?;
    let cols: Vec<&str> = head.split(',').collect();
    let find = |name: &str| {
        cols.iter()
            .position(|c| c.trim() == name)
            .ok_or_else(|| Error::InvalidInput(format!("missing column '{name}'")))
    };
    let xi = find("x")?;
    let oi = find("offset")?;
    let mut out = Vec::new();
    for (ln, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        let get = |i: usize| -> Result<&str, Error> {
            fields
                .get(i)
                .copied()
                .ok_or_else(|| Error::InvalidInput(format!("line {}: too few fields", ln + 2)))
        };
        let x = get(xi)?
            .trim()
            .parse::<BigUint>()
            .map_err(|e| Error::InvalidInput(format!("line {}: bad x: {e}", ln + 2)))?;
        let offset = get(oi)?
            .trim()
            .parse::<BigUint>()
            .map_err(|e| Error::InvalidInput(format!("line {}: bad offset: {e}", ln + 2)))?;
        out.push(GapRecord {
            x,
            offset,
            meta: String::new(),
        });
    }
    Ok(out)
}

fn emit(target: &str, lines: &[String]) -> std::io::Result<()> {
    if target == "-" {
        let stdout = std::io::stdout();
        let mut w = stdout.lock();
        for line in lines {
            writeln!(w, "{line}")?;
        }
        w.flush()
    } else {
        let mut file = std::io::BufWriter::new(std::fs::File::create(target)?);
        for line in lines {
            writeln!(file, "{line}")?;
        }
        file.flush()
    }
}

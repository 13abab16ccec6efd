mod caps;
mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use zeta2::approx::{
    continued_fraction, convergents, lemma4_bound, sondow_inequality_check_budget, zeta2_convergents, Lemma4Mode,
    RVConstants, RV_A, RV_B,
};
use zeta2::arith::zeta2_enclosure_capped;
use zeta2::euler::{approximation_gap_capped, euler_product, qn_bound_report_capped};
use zeta2::primes::{nth_prime_limit_estimate, sieve_capped, PrimeTable};
use zeta2::staircase::{
    default_exponent, euclid_baseline, staircase_certify_budget, theorem1_gate_capped, theorem2_sequence,
    theorem3_sequence, theorem3_tower, tower_normalize, Hypothesis, PiAssumption, QBoundMode, StepWitness,
    THEOREM3_CHECKPOINTS,
};
use zeta2::verify::{run_suite, Suite, DEFAULT_SEED};
use zeta2::{Error, Result};

use caps::Caps;
use output::{error_record, write_records, Format};

#[derive(Parser)]
#[command(name = "zeta2", version, about = "Exact Euler-product approximations to zeta(2) and prime-gap certificates")]
struct Cli {
    /// Output format; JSON is one record per line.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,

    /// Emit a metadata record before the data records.
    #[arg(long, global = true)]
    meta: bool,

    /// Sieve limit; defaults to what the command needs.
    #[arg(long, global = true)]
    sieve_limit: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StairMode {
    #[value(name = "factorial-squared")]
    FactorialSquared,
    #[value(name = "power-2piN")]
    PowerTwoPiN,
    #[value(name = "assumed-g")]
    AssumedG,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GChoice {
    LogPower,
    LogLog,
    NearPnt,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Raw,
    Shifted,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Arith,
    Primes,
    Euler,
    Approx,
    Staircase,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Exact partial Euler product p_N/q_N.
    Euler {
        #[arg(long = "N")]
        n: u64,
    },
    /// Enclosure of |zeta(2) - p_N/q_N| and the empirical exponent.
    Gap {
        #[arg(long = "N")]
        n: u64,
        #[arg(long, default_value_t = 30)]
        digits: u32,
    },
    /// The chain q_N <= prod (p^2 - 1) <= N^(2 pi(N)) and q_N <= (N!)^2.
    Qbounds {
        #[arg(long = "N")]
        n: u64,
    },
    /// Rigorous enclosure of zeta(2) = pi^2/6.
    Zeta2 {
        #[arg(long)]
        digits: u32,
    },
    /// Certified continued-fraction quotients of zeta(2).
    Cf {
        #[arg(long, default_value_t = 60)]
        digits: u32,
        #[arg(long, default_value_t = 20)]
        terms: usize,
    },
    /// Convergents of zeta(2) with their empirical exponents.
    Exponents {
        #[arg(long, default_value_t = 60)]
        digits: u32,
        #[arg(long = "max-q")]
        max_q: BigUint,
    },
    /// d_n = lcm(1..n) and log d_n.
    Dn {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        log_only: bool,
    },
    /// The gate 10 q_N^6 < (N!)^14.
    Theorem1 {
        #[arg(long = "N")]
        n: u64,
    },
    /// The sequence x_{n+1} = exp((ln x_n)^e) from x_0 = e^e.
    Theorem2 {
        #[arg(long)]
        n: u32,
    },
    /// The recursion a_{n+1} = a_n + ln a_n from a_2 = e.
    Theorem3 {
        #[arg(long)]
        n: u64,
        /// Compare checkpoints against p_n from a sieve.
        #[arg(long)]
        sieve: bool,
    },
    /// Staircase certificate under an irrationality-measure hypothesis.
    Staircase {
        #[arg(long, value_enum)]
        mode: StairMode,
        /// Exponent m > b; defaults to floor(b) + 1.
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, default_value_t = 5.45)]
        b: f64,
        #[arg(long)]
        start: u64,
        #[arg(long)]
        steps: usize,
        /// Assumed pi(x) <= g(x), for `--mode assumed-g`.
        #[arg(long, value_enum, default_value = "log-power")]
        g: GChoice,
        /// epsilon for `--g near-pnt`.
        #[arg(long, default_value_t = 0.5)]
        epsilon: f64,
    },
    /// mu <= 1 + rho/sigma from growth constants (a, b).
    Lemma4 {
        #[arg(long, default_value_t = RV_A, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, default_value_t = RV_B, allow_negative_numbers = true)]
        b: f64,
        #[arg(long, value_enum, default_value = "raw")]
        mode: ModeArg,
    },
    /// p_{n+1} <= (p_1 ... p_n)^(2 mu).
    Sondow {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value = "5.45")]
        mu: String,
    },
    /// Euclid's bound: largest k with 2^(2^k) <= exp^level(mantissa).
    Euclid {
        #[arg(long)]
        level: u32,
        #[arg(long, allow_negative_numbers = true)]
        mantissa: f64,
    },
    /// Seeded self-checks.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Euler { .. } => "euler",
            Command::Gap { .. } => "gap",
            Command::Qbounds { .. } => "qbounds",
            Command::Zeta2 { .. } => "zeta2",
            Command::Cf { .. } => "cf",
            Command::Exponents { .. } => "exponents",
            Command::Dn { .. } => "dn",
            Command::Theorem1 { .. } => "theorem1",
            Command::Theorem2 { .. } => "theorem2",
            Command::Theorem3 { .. } => "theorem3",
            Command::Staircase { .. } => "staircase",
            Command::Lemma4 { .. } => "lemma4",
            Command::Sondow { .. } => "sondow",
            Command::Euclid { .. } => "euclid",
            Command::Verify { .. } => "verify",
        }
    }
}

/// Records plus whether every verification they carry passed.
struct Outcome {
    records: Vec<Value>,
    verified: bool,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("records serialize")
}

fn ok(records: Vec<Value>) -> Result<Outcome> {
    Ok(Outcome { records, verified: true })
}

struct Ctx {
    caps: Caps,
    sieve_limit: Option<u64>,
}

impl Ctx {
    fn table(&self, needed: u64) -> Result<PrimeTable> {
        sieve_capped(self.sieve_limit.unwrap_or(needed).max(needed), self.caps.sieve)
    }

    fn check_digits(&self, digits: u32) -> Result<()> {
        if digits > self.caps.digits {
            return Err(Error::ResourceLimit { what: "digits", requested: digits.into(), cap: self.caps.digits.into() });
        }
        Ok(())
    }
}

fn run(ctx: &Ctx, cmd: &Command) -> Result<Outcome> {
    let caps = ctx.caps;
    match *cmd {
        Command::Euler { n } => {
            let a = euler_product(&ctx.table(n)?, n)?;
            ok(vec![json!({ "n": a.n, "value": a.value, "p": a.p().to_string(), "q": a.q().to_string(), "q_digits": a.q_digits })])
        }
        Command::Gap { n, digits } => {
            ctx.check_digits(digits)?;
            ok(vec![to_value(&approximation_gap_capped(&ctx.table(n)?, n, digits, caps.digits)?)])
        }
        Command::Qbounds { n } => {
            let r = qn_bound_report_capped(&ctx.table(n)?, n, caps.factorial)?;
            let verified = r.all_hold();
            Ok(Outcome { records: vec![to_value(&r)], verified })
        }
        Command::Zeta2 { digits } => {
            let z = zeta2_enclosure_capped(digits, caps.digits)?;
            ok(vec![json!({
                "digits": digits,
                "lo": z.lo(),
                "hi": z.hi(),
                "lo_decimal": z.lo().to_decimal_string(digits),
                "hi_decimal": z.hi().to_decimal_string(digits),
            })])
        }
        Command::Cf { digits, terms } => {
            let z = zeta2_enclosure_capped(digits, caps.digits)?;
            let cf = continued_fraction(&z, terms)?;
            let recs = convergents(&cf)?;
            ok(recs.iter().map(to_value).collect())
        }
        Command::Exponents { digits, ref max_q } => {
            ctx.check_digits(digits)?;
            let m = zeta2_convergents(digits, max_q)?;
            ok(m.records
                .iter()
                .zip(&m.running_max)
                .map(|(r, max)| {
                    let mut v = to_value(r);
                    v["running_max"] = max.map_or(Value::Null, |x| Value::String(format!("{x}")));
                    v
                })
                .collect())
        }
        Command::Dn { n, log_only } => {
            let t = ctx.table(n)?;
            let l = t.log_lcm_to(n)?;
            let mut v = to_value(&l);
            if !log_only {
                let bits = (l.log_lcm / std::f64::consts::LN_2).ceil() as u64;
                if bits > caps.bigint_bits {
                    return Err(Error::ResourceLimit { what: "big-integer bits", requested: bits, cap: caps.bigint_bits });
                }
                v["d_n"] = Value::String(t.lcm_to(n)?.to_string());
            }
            ok(vec![v])
        }
        Command::Theorem1 { n } => ok(vec![to_value(&theorem1_gate_capped(&ctx.table(n)?, n, caps.factorial)?)]),
        Command::Theorem2 { n } => ok(theorem2_sequence(n)?.iter().map(to_value).collect()),
        Command::Theorem3 { n, sieve } => {
            let table = if sieve { Some(ctx.table(nth_prime_limit_estimate(n))?) } else { None };
            let r = theorem3_sequence(n, table.as_ref(), &THEOREM3_CHECKPOINTS)?;
            let mut v = to_value(&r);
            v["x_final"] = to_value(&theorem3_tower(r.a_final)?);
            let verified = r.sandwich_holds && r.strictly_increasing && r.increments_at_least_one;
            Ok(Outcome { records: vec![v], verified })
        }
        Command::Staircase { mode, m, b, start, steps, g, epsilon } => {
            let q_mode = match mode {
                StairMode::FactorialSquared => QBoundMode::FactorialSquared,
                StairMode::PowerTwoPiN => QBoundMode::PowerTwoPiN,
                StairMode::AssumedG => QBoundMode::AssumedG {
                    assumption: match g {
                        GChoice::LogPower => PiAssumption::LogPower { b },
                        GChoice::LogLog => PiAssumption::LogLog { b },
                        GChoice::NearPnt => PiAssumption::NearPnt { epsilon },
                    },
                },
            };
            let hyp = Hypothesis { measure_bound: b, exponent: m.unwrap_or_else(|| default_exponent(b)), q_mode };
            let t = ctx.table(ctx.sieve_limit.unwrap_or(start.max(1_000_000)))?;
            let cert = staircase_certify_budget(&t, hyp, start, steps, caps.bigint_bits)?;
            let checks = cert.reverify(&t)?;
            let assumed = matches!(q_mode, QBoundMode::AssumedG { .. });
            let mut verified = cert.is_consistent(&t);
            let records = cert
                .steps
                .iter()
                .zip(&checks)
                .map(|(s, check)| {
                    if let StepWitness::Exact { holds, .. } = s.witness {
                        verified &= holds || assumed;
                    }
                    verified &= check.unwrap_or(true);
                    let mut v = to_value(s);
                    v["start"] = json!(cert.start);
                    v["pi_start"] = json!(cert.pi_start);
                    v["hypothesis"] = to_value(&cert.hypothesis);
                    v["reverified"] = to_value(check);
                    v
                })
                .collect();
            Ok(Outcome { records, verified })
        }
        Command::Lemma4 { a, b, mode } => {
            let mode = match mode {
                ModeArg::Raw => Lemma4Mode::Raw,
                ModeArg::Shifted => Lemma4Mode::Shifted,
            };
            let c = RVConstants::new(a, b, mode);
            let bound = lemma4_bound(a, b, mode)?;
            ok(vec![json!({ "a": c.a, "b": c.b, "mode": mode, "rho": c.rho, "sigma": c.sigma, "bound": bound, "below_two": bound < 2.0 })])
        }
        Command::Sondow { n, ref mu } => {
            let mu = mu.parse()?;
            let t = ctx.table(nth_prime_limit_estimate(n + 1).max(30))?;
            ok(vec![to_value(&sondow_inequality_check_budget(&t, n, &mu, caps.bigint_bits)?)])
        }
        Command::Euclid { level, mantissa } => {
            let x = tower_normalize(level, mantissa)?;
            ok(vec![json!({ "level": level, "mantissa": mantissa, "tower": x, "k": euclid_baseline(&x) })])
        }
        Command::Verify { suite, seed } => {
            let suite = match suite {
                SuiteArg::Arith => Suite::Arith,
                SuiteArg::Primes => Suite::Primes,
                SuiteArg::Euler => Suite::Euler,
                SuiteArg::Approx => Suite::Approx,
                SuiteArg::Staircase => Suite::Staircase,
                SuiteArg::All => Suite::All,
            };
            let results = run_suite(suite, seed);
            let verified = results.iter().all(|r| r.passed);
            Ok(Outcome { records: results.iter().map(to_value).collect(), verified })
        }
    }
}

fn fail(kind: &str, reason: &str) -> ExitCode {
    let _ = writeln!(io::stderr(), "{}", error_record(kind, reason));
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("").trim_start_matches("error: ");
            return fail("usage", first);
        }
    };
    let caps = match Caps::from_env() {
        Ok(c) => c,
        Err(e) => return fail(e.kind(), &e.to_string()),
    };
    let ctx = Ctx { caps, sieve_limit: cli.sieve_limit };
    let outcome = match run(&ctx, &cli.command) {
        Ok(o) => o,
        Err(e) => return fail(e.kind(), &e.to_string()),
    };
    let meta = cli.meta.then(|| {
        json!({ "meta": {
            "tool": "zeta2",
            "version": env!("CARGO_PKG_VERSION"),
            "command": cli.command.name(),
            "records": outcome.records.len(),
            "verified": outcome.verified,
        }})
    });
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    if let Err(e) = write_records(&mut out, cli.format, meta.as_ref(), &outcome.records).and_then(|_| out.flush()) {
        if e.kind() != io::ErrorKind::BrokenPipe {
            return fail("io", &e.to_string());
        }
    }
    if outcome.verified {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

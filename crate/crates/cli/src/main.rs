//! Command-line front end: catalog verification, singular-value computation
//! and certification, Picard-Fuchs derivation reports, identity suites, and
//! pi digits.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand};

use onepi_core::algebraic::{AlgebraicNumber, QuadraticIrrational, Rat};
use onepi_core::certify;
use onepi_core::checks;
use onepi_core::modular::{self, CaseTag};
use onepi_core::picard_fuchs as pf;
use onepi_core::series::{self, Verdict, VerificationReport};

#[derive(Parser)]
#[command(
    name = "onepi",
    version,
    about = "Verification laboratory for hypergeometric 1/pi series and singular values"
)]
struct Cli {
    /// Emit machine-readable JSON instead of the human summary
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for fan-out subcommands (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify catalog series (and the named closed-form identities) against pi
    VerifySeries {
        /// Path to a catalog JSON file (default: the embedded catalog)
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Verify a single entry by id (also matches named identities)
        #[arg(long)]
        id: Option<String>,
        /// Agreement tolerance in decimal digits
        #[arg(long, default_value_t = 50)]
        tol: u32,
    },
    /// Print an enclosure of the singular value s2 at a CM point
    S2 {
        /// Binary quadratic form a,b,c with tau = (-b + sqrt(b^2-4ac))/(2a)
        #[arg(long)]
        tau: String,
        /// Working precision in bits
        #[arg(long)]
        prec: Option<u32>,
    },
    /// Certify that s2(tau) equals an algebraic number (guessed or supplied)
    Certify {
        #[arg(long)]
        tau: String,
        #[arg(long)]
        prec: Option<u32>,
        /// Candidate value, e.g. "5/14" or "(103 - 12*sqrt(5))/186"
        #[arg(long)]
        candidate: Option<String>,
    },
    /// Print decimal digits of pi
    Pi {
        #[arg(long)]
        digits: usize,
        /// Compute through a catalog series instead of the default
        #[arg(long)]
        series: Option<String>,
    },
    /// Derive the period differential equation for a hauptmodul case and
    /// check its hypergeometric pullback
    DerivePf {
        /// One of 1B, 2B, 2C, 3B
        #[arg(long)]
        case: String,
    },
    /// Run the deterministic identity suites
    CheckIdentities {
        /// One of clausen, euler, e2, modular-relations, periods, precursors,
        /// wz (default: all)
        #[arg(long)]
        suite: Option<String>,
    },
}

fn default_prec() -> u32 {
    std::env::var("ONEPI_PRECISION_BITS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(256)
}

fn parse_tau(s: &str) -> anyhow::Result<QuadraticIrrational> {
    let parts: Vec<i64> = s
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .with_context(|| format!("--tau expects three integers a,b,c, got '{s}'"))?;
    if parts.len() != 3 {
        bail!("--tau expects three integers a,b,c, got '{s}'");
    }
    QuadraticIrrational::new(parts[0], parts[1], parts[2])
        .map_err(|e| anyhow!("invalid form: {e}"))
}

/// Parses "p/q", "(A + B*sqrt(M))/D", or "A/D + B/D*sqrt(M)" (spaces
/// optional, either sign on either term).
fn parse_candidate(s: &str) -> anyhow::Result<AlgebraicNumber> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let (inner, den) = match compact.strip_prefix('(') {
        Some(rest) => {
            let close = rest
                .rfind(')')
                .ok_or_else(|| anyhow!("unbalanced parentheses in '{s}'"))?;
            let tail = &rest[close + 1..];
            let den = match tail.strip_prefix('/') {
                Some(d) => d
                    .parse::<i64>()
                    .with_context(|| format!("bad denominator in '{s}'"))?,
                None if tail.is_empty() => 1,
                None => bail!("unexpected trailing text in '{s}'"),
            };
            (rest[..close].to_string(), den)
        }
        None => (compact, 1),
    };
    // split into signed terms at top level
    let mut terms: Vec<String> = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for (i, ch) in inner.chars().enumerate() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            '+' | '-' if i > 0 && depth == 0 => {
                terms.push(std::mem::take(&mut cur));
            }
            _ => {}
        }
        if !(ch == '+' && i > 0 && depth == 0) {
            cur.push(ch);
        }
    }
    terms.push(cur);
    let mut p = Rat::new(0.into(), 1.into());
    let mut q = Rat::new(0.into(), 1.into());
    let mut radicand: i64 = 0;
    for term in terms {
        if term.is_empty() {
            continue;
        }
        if let Some(pos) = term.find("sqrt(") {
            let close = pos
                + term[pos..]
                    .find(')')
                    .ok_or_else(|| anyhow!("missing ')' after sqrt in '{s}'"))?;
            let m: i64 = term[pos + 5..close]
                .parse()
                .with_context(|| format!("bad radicand in '{s}'"))?;
            if radicand != 0 && radicand != m {
                bail!("mixed radicands in '{s}'");
            }
            radicand = m;
            let after = &term[close + 1..];
            let before = term[..pos].trim_end_matches('*');
            let mut coef = match before {
                "" | "+" => Rat::new(1.into(), 1.into()),
                "-" => Rat::new((-1).into(), 1.into()),
                other => parse_rational(other)?,
            };
            if let Some(d) = after.strip_prefix('/') {
                coef /= parse_rational(d)?;
            } else if !after.is_empty() {
                bail!("unexpected text after sqrt term in '{s}'");
            }
            q += coef;
        } else {
            p += parse_rational(&term)?;
        }
    }
    let den_rat = Rat::new(den.into(), 1.into());
    Ok(AlgebraicNumber::new(p / &den_rat, q / den_rat, radicand))
}

fn parse_rational(s: &str) -> anyhow::Result<Rat> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: i128 = num.parse().with_context(|| format!("bad rational '{s}'"))?;
    let d: i128 = den.parse().with_context(|| format!("bad rational '{s}'"))?;
    Ok(Rat::new(n.into(), d.into()))
}

fn print_reports(reports: &[VerificationReport], json: bool) -> Verdict {
    let mut verdict = Verdict::Pass;
    for r in reports {
        verdict = verdict.merge(r.verdict);
    }
    if json {
        println!("{}", serde_json::to_string_pretty(reports).expect("serializable"));
    } else {
        for r in reports {
            let tag = match r.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "FAIL",
                Verdict::Inconclusive => "inconclusive",
            };
            let extra = match r.digits_per_term {
                Some(d) => format!("  ({d:.3} digits/term, N = {})", r.truncation_index),
                None => String::new(),
            };
            println!("{tag:12} {}{extra}", r.id);
            if r.verdict != Verdict::Pass {
                if let Some(n) = &r.note {
                    println!("             note: {n}");
                }
                println!("             lhs: {}", r.lhs);
                println!("             rhs: {}", r.rhs);
            }
        }
        println!(
            "{} checks: {}",
            reports.len(),
            match verdict {
                Verdict::Pass => "all pass",
                Verdict::Fail => "FAILURES present",
                Verdict::Inconclusive => "inconclusive results present",
            }
        );
    }
    verdict
}

fn run_verify_series(
    catalog: Option<PathBuf>,
    id: Option<String>,
    tol: u32,
    json: bool,
) -> anyhow::Result<Verdict> {
    use rayon::prelude::*;
    let prec = default_prec();
    let specs = match &catalog {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            series::parse_catalog(&text).map_err(|e| anyhow!("{e}"))?
        }
        None => series::default_catalog(),
    };
    let mut series_jobs: Vec<&series::SeriesSpec> = specs.iter().collect();
    let mut named_jobs: Vec<&str> = series::NAMED_IDENTITIES.to_vec();
    if let Some(id) = &id {
        series_jobs.retain(|s| &s.id == id);
        named_jobs.retain(|n| n == id);
        if series_jobs.is_empty() && named_jobs.is_empty() {
            bail!("no catalog entry or named identity with id '{id}'");
        }
    }
    let reports: Vec<VerificationReport> = series_jobs
        .par_iter()
        .map(|s| series::evaluate_series(s, prec, tol).map_err(|e| anyhow!("{}: {e}", s.id)))
        .chain(
            named_jobs
                .par_iter()
                .map(|n| series::evaluate_named_identity(n, prec, tol).map_err(|e| anyhow!("{n}: {e}"))),
        )
        .collect::<anyhow::Result<_>>()?;
    Ok(print_reports(&reports, json))
}

fn run_s2(tau: &QuadraticIrrational, prec: u32, json: bool) -> anyhow::Result<Verdict> {
    let red = tau.reduce();
    let enc = modular::s2(&red.embed(prec), prec).map_err(|e| anyhow!("{e}"))?;
    let digits = (prec as usize) * 3 / 10;
    if json {
        println!(
            "{}",
            serde_json::json!({
                "tau": {"a": tau.a, "b": tau.b, "c": tau.c, "d": tau.d()},
                "reduced": {"a": red.a, "b": red.b, "c": red.c},
                "precision_bits": prec,
                "s2": enc.to_string_decimal(digits),
            })
        );
    } else {
        println!(
            "s2 at tau = (-({}) + sqrt(-{}))/(2*{}) [{} bits]",
            tau.b,
            tau.d(),
            tau.a,
            prec
        );
        println!("{}", enc.to_string_decimal(digits));
    }
    Ok(Verdict::Pass)
}

fn run_certify(
    tau: &QuadraticIrrational,
    prec: u32,
    candidate: Option<String>,
    json: bool,
) -> anyhow::Result<Verdict> {
    let cert = match candidate {
        Some(expr) => {
            let cand = parse_candidate(&expr)?;
            let input =
                certify::input_for_candidate(tau, cand, prec).map_err(|e| anyhow!("{e}"))?;
            certify::certify_s2(&input, prec).map_err(|e| anyhow!("{e}"))?
        }
        None => certify::guess_and_certify(tau, prec).map_err(|e| anyhow!("{e}"))?,
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&cert).expect("serializable"));
    } else {
        println!(
            "certification for s2 at form ({}, {}, {}), disc -{}:",
            cert.tau[0], cert.tau[1], cert.tau[2], cert.disc
        );
        println!("  candidate: {}", cert.candidate);
        for e in &cert.embeddings {
            println!(
                "  form ({}, {}, {}): N = {}, M has {} digits, gap {} -> {}",
                e.form[0],
                e.form[1],
                e.form[2],
                e.n,
                e.m_digits,
                e.gap,
                if e.gap_below_one { "below 1" } else { "NOT below 1" }
            );
        }
        println!("  verdict: {:?} at {} bits", cert.verdict, cert.precision_bits);
    }
    Ok(cert.verdict)
}

fn run_pi(digits: usize, series_id: Option<String>, json: bool) -> anyhow::Result<Verdict> {
    let spec = match &series_id {
        Some(id) => Some(
            series::find_series(id).ok_or_else(|| anyhow!("no catalog series with id '{id}'"))?,
        ),
        None => None,
    };
    // the flag counts digits after the decimal point; the library counts
    // significant digits including the leading 3
    let out = series::pi_digits(digits + 1, spec.as_ref()).map_err(|e| anyhow!("{e}"))?;
    if json {
        println!(
            "{}",
            serde_json::json!({"digits": digits, "series": series_id, "pi": out})
        );
    } else {
        println!("{out}");
    }
    Ok(Verdict::Pass)
}

fn run_derive_pf(case_name: &str, json: bool) -> anyhow::Result<Verdict> {
    let case = CaseTag::parse(case_name)
        .ok_or_else(|| anyhow!("unknown case '{case_name}'; expected 1B, 2A, 2B, 2C, 3A, 3B"))?;
    let (g2, g3, _disc) = pf::curve_invariants(case).map_err(|e| anyhow!("{e}"))?;
    let triple = pf::pqr_from_invariants(&g2, &g3).map_err(|e| anyhow!("{e}"))?;
    let ode = pf::second_order_from_system(&triple).map_err(|e| anyhow!("{e}"))?;
    let j = pf::j_of_uniformizer(case).map_err(|e| anyhow!("{e}"))?;
    let normalized = pf::normalized_ode_from_j(&j).map_err(|e| anyhow!("{e}"))?;
    let [al, be, a, b, c] = pf::period_parameters(case).map_err(|e| anyhow!("{e}"))?;
    let (ok, residual) = pf::pullback_check(&normalized, &al, &be, &a, &b, &c);
    let verdict = if ok { Verdict::Pass } else { Verdict::Fail };
    if json {
        println!(
            "{}",
            serde_json::json!({
                "case": case.name(),
                "ode": {"p": format!("{}", ode.p), "q": format!("{}", ode.q)},
                "normalized": {"p": format!("{}", normalized.p), "q": format!("{}", normalized.q)},
                "pullback": {
                    "exponents": [al.to_string(), be.to_string()],
                    "hypergeometric": [a.to_string(), b.to_string(), c.to_string()],
                    "exact_match": ok,
                    "residual": [format!("{}", residual[0]), format!("{}", residual[1])],
                },
            })
        );
    } else {
        println!("case {}:", case.name());
        println!("  period equation  w'' + P w' + Q w = 0 with");
        println!("    P = {}", ode.p);
        println!("    Q = {}", ode.q);
        println!("  J-normalized form u'' + p u' + q u = 0 with");
        println!("    p = {}", normalized.p);
        println!("    q = {}", normalized.q);
        println!(
            "  pullback through xi^(-{al}) (1-xi)^(-{be}): hypergeometric ({a}, {b}; {c}) -> {}",
            if ok { "exact match" } else { "MISMATCH" }
        );
    }
    Ok(verdict)
}

fn run_check_identities(suite: Option<String>, json: bool) -> anyhow::Result<Verdict> {
    use rayon::prelude::*;
    let prec = default_prec();
    let suites: Vec<&str> = match &suite {
        Some(s) => {
            if !checks::SUITES.contains(&s.as_str()) {
                bail!("unknown suite '{s}'; available: {}", checks::SUITES.join(", "));
            }
            vec![s.as_str()]
        }
        None => checks::SUITES.to_vec(),
    };
    let groups: Vec<Vec<VerificationReport>> = suites
        .par_iter()
        .map(|name| checks::run_suite(name, prec).map_err(|e| anyhow!("suite {name}: {e}")))
        .collect::<anyhow::Result<_>>()?;
    let reports: Vec<VerificationReport> = groups.into_iter().flatten().collect();
    Ok(print_reports(&reports, json))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .ok();
    }
    let prec = default_prec();
    let result = match cli.cmd {
        Cmd::VerifySeries { catalog, id, tol } => run_verify_series(catalog, id, tol, cli.json),
        Cmd::S2 { tau, prec: p } => {
            parse_tau(&tau).and_then(|t| run_s2(&t, p.unwrap_or(prec), cli.json))
        }
        Cmd::Certify { tau, prec: p, candidate } => {
            parse_tau(&tau).and_then(|t| run_certify(&t, p.unwrap_or(prec), candidate, cli.json))
        }
        Cmd::Pi { digits, series } => run_pi(digits, series, cli.json),
        Cmd::DerivePf { case } => run_derive_pf(&case, cli.json),
        Cmd::CheckIdentities { suite } => run_check_identities(suite, cli.json),
    };
    match result {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

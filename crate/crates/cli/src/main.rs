mod args;

use std::fmt::Write as _;
use std::process::ExitCode;

use artinforge::groebner::Engine;
use artinforge::paperlab::{
    build_ideal, enumerate_points, verify_points_satisfy_ideal, BernoulliTriangle, Built, Lab, Status,
    VerificationReport,
};
use artinforge::quotient::{hilbert_series, standard_monomials, QuotientAlgebra};
use artinforge::reptheory::{half_powerset_character, powerset_character, subset_character, xn_character};
use artinforge::{Error, QClassFunction, QIdeal, Q};
use clap::error::ErrorKind;
use clap::{CommandFactory, Parser};
use rayon::prelude::*;
use serde_json::{json, Value};

use args::{check_n, CharacterArgs, CharacterKind, Cli, Command, Format, IdealArgs, SingleArgs, TriangleArgs, VerifyArgs};

/// Failure modes that map to distinct exit codes.
enum Failure {
    Usage(String),
    Checks,
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, failure) = match run(&cli.command) {
        Ok(out) => (out, None),
        Err(Failure::Checks) => (String::new(), Some(ExitCode::from(1))),
        Err(Failure::Usage(msg)) => Cli::command().error(ErrorKind::ValueValidation, msg).exit(),
        Err(Failure::Library(e)) => {
            eprintln!("error: {e}");
            let code = if matches!(e, Error::ResourceLimit { .. }) { 3 } else { 1 };
            (String::new(), Some(ExitCode::from(code)))
        }
    };
    print!("{out}");
    failure.unwrap_or(ExitCode::SUCCESS)
}

fn run(command: &Command) -> Outcome {
    match command {
        Command::Verify(a) => verify(a),
        Command::Groebner(a) => groebner(a),
        Command::Hilbert(a) => hilbert(a),
        Command::Character(a) => character(a),
        Command::Socle(a) => socle(a),
        Command::Challenge(a) => challenge(a),
        Command::Points(a) => points(a),
        Command::Triangle(a) => triangle(a),
    }
}

fn usage(r: Result<(), String>) -> Result<(), Failure> {
    r.map_err(Failure::Usage)
}

fn line(v: &Value) -> String {
    // serde_json maps are ordered by key, so output is canonical
    format!("{v}\n")
}

fn verify(a: &VerifyArgs) -> Outcome {
    usage(check_n(a.n.lo, a.n.hi, a.common.allow_large_n))?;
    let lab = Lab::new(Engine::new(a.common.pair_cap));
    let jobs: Vec<(&str, usize)> = a.claims.0.iter().flat_map(|&c| a.n.iter().map(move |n| (c, n))).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs as usize)
        .build()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let results: Vec<_> = pool.install(|| jobs.par_iter().map(|&(c, n)| lab.verify(c, n)).collect());

    let mut reports: Vec<VerificationReport> = Vec::new();
    let mut limit = None;
    for r in results {
        match r {
            Ok(mut rep) => {
                if !a.timings {
                    rep.millis = 0;
                }
                reports.push(rep);
            }
            Err(e) => limit = limit.or(Some(e)),
        }
    }
    reports.sort_by(|x, y| (x.claim.as_str(), x.n).cmp(&(y.claim.as_str(), y.n)));

    let mut out = String::new();
    for r in &reports {
        match a.common.format {
            Format::Json => out.push_str(&line(&serde_json::to_value(r).expect("report serialises"))),
            Format::Text if a.timings => writeln!(out, "{r} [{} ms]", r.millis).unwrap(),
            Format::Text => writeln!(out, "{r}").unwrap(),
        }
    }
    let count = |s| reports.iter().filter(|r| r.status == s).count();
    let failed = count(Status::Fail);
    if a.common.format == Format::Text {
        writeln!(out, "{} pass, {failed} fail, {} skipped", count(Status::Pass), count(Status::Skipped)).unwrap();
    }
    print!("{out}");
    if let Some(e) = limit {
        return Err(e.into());
    }
    if failed > 0 {
        return Err(Failure::Checks);
    }
    Ok(String::new())
}

fn named_ideal(a: &IdealArgs) -> Result<QIdeal, Failure> {
    usage(check_n(a.n, a.n, a.common.allow_large_n))?;
    match build_ideal::<Q>(a.ideal, a.n)? {
        Built::Ideal(i) => Ok(i),
        Built::Dual(_) => Err(Failure::Usage("not an ideal".into())),
    }
}

fn groebner(a: &IdealArgs) -> Outcome {
    let ideal = named_ideal(a)?;
    let gb = Engine::new(a.common.pair_cap).buchberger(&ideal, a.order)?;
    let ring = gb.ring();
    let basis: Vec<String> = gb.elements().iter().map(|g| ring.format(g)).collect();
    Ok(match a.common.format {
        Format::Text => basis.iter().map(|b| format!("{b}\n")).collect(),
        Format::Json => {
            let lms: Vec<String> = gb.leading_monomials().iter().map(|m| ring.format_monomial(m)).collect();
            line(&json!({
                "ideal": a.ideal.to_string(),
                "n": a.n,
                "order": a.order.to_string(),
                "variables": ring.names(),
                "basis": basis,
                "leading_monomials": lms,
            }))
        }
    })
}

fn hilbert(a: &IdealArgs) -> Outcome {
    let ideal = named_ideal(a)?;
    let gb = Engine::new(a.common.pair_cap).buchberger(&ideal, a.order)?;
    let h = hilbert_series(&standard_monomials(&gb)?);
    Ok(match a.common.format {
        Format::Text => format!("{h}\n"),
        Format::Json => line(&json!({
            "ideal": a.ideal.to_string(),
            "n": a.n,
            "coefficients": h.coefficients(),
            "dimension": h.dimension(),
        })),
    })
}

fn socle(a: &IdealArgs) -> Outcome {
    let ideal = named_ideal(a)?;
    let alg = QuotientAlgebra::from_ideal(&Engine::new(a.common.pair_cap), &ideal, a.order)?;
    let basis: Vec<String> = alg.socle_basis().iter().map(|p| alg.ring().format(p)).collect();
    Ok(match a.common.format {
        Format::Text => {
            let mut out = format!("dimension {}\n", basis.len());
            for b in &basis {
                writeln!(out, "{b}").unwrap();
            }
            out
        }
        Format::Json => line(&json!({
            "ideal": a.ideal.to_string(),
            "n": a.n,
            "dimension": basis.len(),
            "gorenstein": basis.len() == 1,
            "basis": basis,
        })),
    })
}

fn class_function_text(c: &QClassFunction) -> String {
    c.values().map(|(p, v)| format!("{p} {v}\n")).collect()
}

fn character(a: &CharacterArgs) -> Outcome {
    usage(check_n(a.n, a.n, a.common.allow_large_n))?;
    let c: QClassFunction = match a.kind {
        CharacterKind::Points => xn_character(a.n)?,
        CharacterKind::Powerset => powerset_character(a.n),
        CharacterKind::HalfPowerset => half_powerset_character(a.n)?,
        CharacterKind::Subset => subset_character(a.n, a.k)?,
    };
    Ok(match a.common.format {
        Format::Text => class_function_text(&c),
        Format::Json => line(&serde_json::to_value(&c).expect("class function serialises")),
    })
}

fn challenge(a: &SingleArgs) -> Outcome {
    usage(check_n(a.n, a.n, a.common.allow_large_n))?;
    let series = Lab::new(Engine::new(a.common.pair_cap)).challenge_series(a.n)?;
    Ok(match a.common.format {
        Format::Text => {
            let mut out = String::new();
            for (k, c) in series.terms() {
                let vals: Vec<String> = c.values().map(|(p, v)| format!("{p}={v}")).collect();
                writeln!(out, "t^{k}: {}", vals.join(" ")).unwrap();
            }
            out
        }
        Format::Json => line(&serde_json::to_value(&series).expect("series serialises")),
    })
}

fn points(a: &SingleArgs) -> Outcome {
    usage(check_n(a.n, a.n, a.common.allow_large_n))?;
    if a.n < 3 {
        return Err(Failure::Usage("points are listed for n >= 3".into()));
    }
    let pts: Vec<String> = enumerate_points(a.n)?.iter().map(|p| p.to_string()).collect();
    let mut report = verify_points_satisfy_ideal(a.n)?;
    report.millis = 0;
    let out = match a.common.format {
        Format::Text => {
            let mut out: String = pts.iter().map(|p| format!("{p}\n")).collect();
            writeln!(out, "{report}").unwrap();
            out
        }
        Format::Json => line(&json!({
            "n": a.n,
            "count": pts.len(),
            "points": pts,
            "report": serde_json::to_value(&report).expect("report serialises"),
        })),
    };
    if !report.is_pass() {
        print!("{out}");
        return Err(Failure::Checks);
    }
    Ok(out)
}

fn triangle(a: &TriangleArgs) -> Outcome {
    if a.n.lo < 2 || a.n.hi > 60 {
        return Err(Failure::Usage("triangle rows are printed for 2 <= n <= 60".into()));
    }
    let t = BernoulliTriangle::new(a.n.hi);
    let mut out = String::new();
    for n in a.n.iter() {
        let row = t.a_row(n);
        let sum: u128 = row.iter().sum();
        match a.format {
            Format::Text => {
                let cells: Vec<String> = row.iter().map(u128::to_string).collect();
                writeln!(out, "{n}: {}", cells.join(" ")).unwrap();
            }
            Format::Json => {
                let cells: Vec<String> = row.iter().map(u128::to_string).collect();
                out.push_str(&line(&json!({ "n": n, "row": cells, "sum": sum.to_string() })));
            }
        }
    }
    Ok(out)
}

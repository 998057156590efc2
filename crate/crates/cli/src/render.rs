//! Text and JSON reports for the subcommands.

use std::fmt::Write as _;

use num_bigint::BigInt;
use polybound::oracle::{
    oracle_charpoly, oracle_minpoly, CHARPOLY_ORACLE_LIMIT, MINPOLY_ORACLE_LIMIT,
};
use polybound::{
    best_minpoly_bound, cassini_bound, closed_form_bound, gershgorin_bound, hadamard_bound,
    mignotte_bound, minpoly_mod, plan_primes, prime_stream, reconstruct_charpoly_with_report,
    reconstruct_minpoly_with_report, reduce_mod, spectral_coeff_bound, spectral_radius_bound,
    windowed_search_bound, CoeffBound, ComputeOptions, IntPolynomial, IntegerMatrix, SpectralBound,
};
use serde_json::{json, Value};

use crate::{Failure, Subject};

pub enum DegreeSource {
    Given(usize),
    Probe,
}

fn big_json(x: &BigInt) -> Value {
    serde_json::from_str(&x.to_string()).expect("integer literal is valid JSON")
}

fn bound_json(b: &CoeffBound) -> Value {
    json!({
        "method": b.method.as_str(),
        "bits": b.bits,
        "value_decimal_approx": b.decimal_approx(),
        "meta": serde_json::to_value(&b.meta).expect("meta serializes"),
    })
}

fn spectral_json(s: &SpectralBound) -> Value {
    json!({ "method": s.method.as_str(), "beta": s.beta })
}

fn bound_line(out: &mut String, b: &CoeffBound) {
    let _ = write!(
        out,
        "{:<16} bits {:>14.6}  value ~ {}",
        b.method.as_str(),
        b.bits,
        b.decimal_approx()
    );
    let m = &b.meta;
    if let Some(j) = m.argmax_j {
        let _ = write!(out, "  argmax j = {j}");
    }
    if let Some(w) = m.window {
        let _ = write!(out, "  window = {w:.4}");
    }
    if let Some(s) = m.scanned {
        let _ = write!(out, "  scanned = {s}");
    }
    if m.exhaustive {
        out.push_str("  (exhaustive)");
    }
    out.push('\n');
}

fn to_string_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON value serializes");
    s.push('\n');
    s
}

pub fn charpoly_bounds(a: &IntegerMatrix, prime_bits: u32, json: bool) -> Result<String, Failure> {
    let n = a.n();
    let b = a.max_abs_f64();
    let bounds = [
        hadamard_bound(n, b),
        closed_form_bound(n, b),
        windowed_search_bound(n, b),
    ];
    let plan = plan_primes(&bounds[2].with_planning_slack(n), prime_bits)?;
    if json {
        return Ok(to_string_pretty(&json!({
            "subject": "charpoly",
            "n": n,
            "max_abs_entry": big_json(&a.stats().max_abs),
            "bounds": bounds.iter().map(bound_json).collect::<Vec<_>>(),
            "prime_bits": prime_bits,
            "planned_primes": plan.primes.len(),
        })));
    }
    let mut out = format!("n = {n}, B = {}\n", a.stats().max_abs);
    for bound in &bounds {
        bound_line(&mut out, bound);
    }
    let _ = writeln!(
        out,
        "planned primes ({prime_bits}-bit): {}",
        plan.primes.len()
    );
    Ok(out)
}

pub fn minpoly_bounds(
    a: &IntegerMatrix,
    degree: DegreeSource,
    prime_bits: u32,
    json: bool,
) -> Result<String, Failure> {
    let n = a.n();
    let (d, source) = match degree {
        DegreeSource::Given(d) => {
            if d == 0 || d > n {
                return Err(Failure::flags(format!(
                    "--degree must lie in 1..={n}, got {d}"
                )));
            }
            (d, "given".to_string())
        }
        DegreeSource::Probe => {
            let p = prime_stream(prime_bits, [])?.next_prime()?;
            let m = minpoly_mod(&reduce_mod(a, p))?;
            (m.degree().expect("nonzero"), format!("probe mod {p}"))
        }
    };
    let gersh = gershgorin_bound(a);
    let cass = cassini_bound(a);
    let combined = spectral_radius_bound(a);
    let spectral = spectral_coeff_bound(combined.beta, d)?;
    let mignotte = mignotte_bound(&windowed_search_bound(n, a.max_abs_f64()), d, n)?;
    let best = best_minpoly_bound(a, d)?;
    let plan = plan_primes(&best.with_planning_slack(n), prime_bits)?;
    if json {
        return Ok(to_string_pretty(&json!({
            "subject": "minpoly",
            "n": n,
            "degree": d,
            "degree_source": source,
            "spectral_radius": {
                "gershgorin": spectral_json(&gersh),
                "cassini": spectral_json(&cass),
                "combined": spectral_json(&combined),
            },
            "bounds": [bound_json(&spectral), bound_json(&mignotte)],
            "best": bound_json(&best),
            "prime_bits": prime_bits,
            "planned_primes": plan.primes.len(),
        })));
    }
    let mut out = format!("n = {n}, degree d = {d} ({source})\n");
    let _ = writeln!(
        out,
        "spectral radius: gershgorin {} ({}), cassini {} ({}), combined {}",
        gersh.beta,
        gersh.method.as_str(),
        cass.beta,
        cass.method.as_str(),
        combined.beta
    );
    bound_line(&mut out, &spectral);
    bound_line(&mut out, &mignotte);
    let _ = writeln!(out, "best: {}", best.method.as_str());
    let _ = writeln!(
        out,
        "planned primes ({prime_bits}-bit): {}",
        plan.primes.len()
    );
    Ok(out)
}

enum Verdict {
    Match,
    Mismatch,
    Skipped,
}

impl Verdict {
    fn as_str(&self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::Skipped => "skipped",
        }
    }
}

fn verify(a: &IntegerMatrix, subject: Subject, poly: &IntPolynomial) -> Result<Verdict, Failure> {
    let n = a.n();
    let expected = match subject {
        Subject::Charpoly if n <= CHARPOLY_ORACLE_LIMIT => oracle_charpoly(a)?,
        Subject::Minpoly if n <= MINPOLY_ORACLE_LIMIT => oracle_minpoly(a)?,
        _ => return Ok(Verdict::Skipped),
    };
    Ok(if &expected == poly {
        Verdict::Match
    } else {
        Verdict::Mismatch
    })
}

pub fn compute(
    a: &IntegerMatrix,
    subject: Subject,
    prime_bits: u32,
    json: bool,
    check: bool,
) -> Result<String, Failure> {
    let opts = ComputeOptions { prime_bits };
    let (poly, primes) = match subject {
        Subject::Charpoly => {
            let r = reconstruct_charpoly_with_report(a, opts)?;
            (r.poly, r.plan.primes.len())
        }
        Subject::Minpoly => {
            let r = reconstruct_minpoly_with_report(a, opts)?;
            (r.poly, r.primes.len())
        }
    };
    let verdict = if check {
        Some(verify(a, subject, &poly)?)
    } else {
        None
    };
    match &verdict {
        Some(Verdict::Skipped) => eprintln!(
            "verify: skipped, dimension {} exceeds the oracle limit",
            a.n()
        ),
        Some(v) => eprintln!("verify: {}", v.as_str()),
        None => {}
    }
    let out = if json {
        let mut v = json!({
            "subject": match subject { Subject::Charpoly => "charpoly", Subject::Minpoly => "minpoly" },
            "degree": poly.degree(),
            "coeffs": poly.coeffs().iter().map(big_json).collect::<Vec<_>>(),
            "primes": primes,
        });
        if let Some(verdict) = &verdict {
            v["verify"] = json!(verdict.as_str());
        }
        to_string_pretty(&v)
    } else {
        format!("{poly}\n")
    };
    if matches!(verdict, Some(Verdict::Mismatch)) {
        // report on stderr, result stays on stdout
        print!("{out}");
        return Err(Failure::verification(
            "result differs from the exact oracle",
        ));
    }
    Ok(out)
}

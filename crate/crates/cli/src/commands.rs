use std::fmt::Write as _;
use std::process::ExitCode;

use serde_json::{json, Value};

use numsemi::semigroup::{SemigroupTable, DEFAULT_MAX_CELLS};
use numsemi::sweep::{check_pair, coprime_pairs, sweep};
use numsemi::{
    conductor_bound, divide, gap_polynomial, graded_dims, hilbert_series, in_kernel, phi_evaluate,
    rank_nullity_check, reciprocal_duality, series_identity_check, verify_functional_equation,
    BivariatePolynomial, Error, GeneratorSet, KernelMethod, SeriesKind,
};

use crate::output::{poly_json, series_json, Output};
use crate::{Cli, Command, MAX_BOUND_ENV};

pub enum CliError {
    /// Precondition failure, exit code 2.
    Domain(String),
    /// Malformed input, exit code 3.
    Parse(String),
}

impl CliError {
    pub fn report(&self) -> ExitCode {
        match self {
            CliError::Domain(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            CliError::Parse(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(3)
            }
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

type CmdResult = Result<Output, CliError>;

pub fn max_cells_from_env() -> Result<u64, CliError> {
    match std::env::var(MAX_BOUND_ENV) {
        Err(_) => Ok(DEFAULT_MAX_CELLS),
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Parse(format!("{MAX_BOUND_ENV}={v:?} is not a nonnegative integer"))
        }),
    }
}

pub fn run(cli: &Cli, max_cells: u64) -> CmdResult {
    match &cli.command {
        Command::Frobenius { generators, gaps, witness } => {
            frobenius(generators, *gaps, *witness, max_cells)
        }
        Command::Gaps { generators } => list_gaps(generators, max_cells),
        Command::GapPoly { generators } => gap_poly(generators, max_cells),
        Command::Verify { sweep: Some(bound), .. } => verify_sweep(*bound, max_cells),
        Command::Verify { a: Some(a), b: Some(b), .. } => verify_pair(*a, *b, max_cells),
        Command::Verify { .. } => {
            Err(CliError::Parse("verify needs a pair `a b` or --sweep B".into()))
        }
        Command::Divide { g, a, b } => divide_cmd(g, *a, *b),
        Command::Kernel { g, a, b } => kernel_cmd(g, *a, *b),
        Command::Hilbert { which, a, b, order_pos, order } => {
            hilbert(which, a, b, order.or(*order_pos), max_cells)
        }
        Command::RankNullity { a, b, order } => rank_nullity(*a, *b, *order, max_cells),
    }
}

fn table(generators: &[i64], max_cells: u64) -> Result<SemigroupTable, CliError> {
    let set = GeneratorSet::new(generators)?;
    Ok(SemigroupTable::with_limit(&set, max_cells)?)
}

/// Validates a pair and checks its table fits under the cap.
fn pair(a: i64, b: i64, max_cells: u64) -> Result<(u64, u64), CliError> {
    let to_u = |v: i64| u64::try_from(v).map_err(|_| Error::NonPositiveGenerator(v));
    let (a, b) = (to_u(a)?, to_u(b)?);
    let set = GeneratorSet::pair(a, b)?;
    let cells = conductor_bound(&set)?.saturating_add(1);
    if cells > max_cells {
        return Err(Error::TableTooLarge { cells, limit: max_cells }.into());
    }
    Ok((a, b))
}

/// Kernel commands accept any distinct coprime positive pair, including 1.
fn kernel_pair(a: i64, b: i64) -> Result<(u64, u64), CliError> {
    let to_exp = |v: i64| u32::try_from(v).map_err(|_| Error::NonPositiveGenerator(v));
    let (a, b) = (to_exp(a)? as u64, to_exp(b)? as u64);
    in_kernel(&BivariatePolynomial::zero(), a, b, KernelMethod::Evaluate)?;
    Ok((a, b))
}

fn parse_poly(g: &str) -> Result<BivariatePolynomial, CliError> {
    g.parse().map_err(|e: numsemi::ParseError| CliError::Parse(format!("in {g:?}: {e}")))
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn frobenius(
    generators: &[i64],
    show_gaps: bool,
    witness: Option<u64>,
    max_cells: u64,
) -> CmdResult {
    let t = table(generators, max_cells)?;
    let set = t.generators();
    let mut text = format!("frobenius={} genus={}\n", t.frobenius(), t.genus());
    let _ = writeln!(
        text,
        "gap_count={} conductor_bound={} symmetric={}",
        t.gaps().len(),
        t.bound(),
        t.is_symmetric()
    );
    let mut result = json!({
        "frobenius": t.frobenius(),
        "genus": t.genus(),
        "gap_count": t.gaps().len(),
        "conductor_bound": t.bound(),
        "symmetric": t.is_symmetric(),
    });
    if show_gaps {
        let _ = writeln!(text, "gaps={}", join(t.gaps(), ","));
        result["gaps"] = json!(t.gaps());
    }
    if let Some(n) = witness {
        match t.represent(n) {
            Some(r) => {
                let terms: Vec<String> = r
                    .coefficients
                    .iter()
                    .zip(set.elements())
                    .map(|(c, a)| format!("{c}*{a}"))
                    .collect();
                let _ = writeln!(text, "witness {n} = {}", terms.join(" + "));
                result["witness"] = json!({"n": n, "coefficients": r.coefficients});
            }
            None => {
                let _ = writeln!(text, "witness {n}: none, {n} is a gap");
                result["witness"] = json!({"n": n, "coefficients": null});
            }
        }
    }
    Ok(Output::new("frobenius", json!({"generators": set.elements()}), result, text))
}

fn list_gaps(generators: &[i64], max_cells: u64) -> CmdResult {
    let t = table(generators, max_cells)?;
    let text = format!("gaps={}\ngenus={}\n", join(t.gaps(), ","), t.genus());
    let result = json!({"gaps": t.gaps(), "genus": t.genus()});
    Ok(Output::new("gaps", json!({"generators": t.generators().elements()}), result, text))
}

fn gap_poly(generators: &[i64], max_cells: u64) -> CmdResult {
    let t = table(generators, max_cells)?;
    let f = gap_polynomial(t.generators())?;
    let mut text = format!("f_A(q) = {f}\n");
    let mut result =
        json!({"gap_polynomial": poly_json(&f), "g_polynomial": null, "reciprocal": null});
    if !f.is_zero() {
        let g = numsemi::g_polynomial(t.generators())?;
        let r = f.reciprocal()?;
        let _ = writeln!(text, "g_A(q) = {g}");
        let _ = writeln!(text, "reciprocal f_A(q) = {r}");
        result["g_polynomial"] = poly_json(&g);
        result["reciprocal"] = poly_json(&r);
    }
    Ok(Output::new("gap-poly", json!({"generators": t.generators().elements()}), result, text))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn verify_pair(a: i64, b: i64, max_cells: u64) -> CmdResult {
    let (a, b) = pair(a, b, max_cells)?;
    let checks = [
        ("functional_equation", verify_functional_equation(a, b)?),
        ("reciprocal_duality", reciprocal_duality(a, b)?),
        ("series_identity", series_identity_check(a, b, (a * b + 10) as usize)?),
        ("rank_nullity", rank_nullity_check(a, b, 3 * a * b)?),
    ];
    let mut text = String::new();
    let mut result = serde_json::Map::new();
    for (name, ok) in checks {
        let _ = writeln!(text, "{name} {}", verdict(ok));
        result.insert(name.to_string(), Value::Bool(ok));
    }
    let all = checks.iter().all(|(_, ok)| *ok);
    result.insert("passed".into(), Value::Bool(all));
    let mut out = Output::new("verify", json!({"a": a, "b": b}), Value::Object(result), text);
    out.all_passed = all;
    Ok(out)
}

fn verify_sweep(bound: u64, max_cells: u64) -> CmdResult {
    if let Some(&(a, b)) = coprime_pairs(bound).last() {
        pair(a as i64, b as i64, max_cells)?;
    }
    let reports = sweep(bound)?;
    let failures: Vec<(u64, u64)> =
        reports.iter().filter(|r| !r.passed()).map(|r| (r.a, r.b)).collect();
    let passed = reports.len() - failures.len();
    let mut text = format!("{} pairs, {passed} PASS\n", reports.len());
    for (a, b) in &failures {
        let _ = writeln!(text, "FAIL ({a}, {b}): {:?}", check_pair(*a, *b)?);
    }
    let result = json!({"pairs": reports.len(), "passed": passed, "failures": failures});
    let mut out = Output::new("verify", json!({"sweep": bound}), result, text);
    out.all_passed = failures.is_empty();
    Ok(out)
}

fn kernel_verdicts(g: &BivariatePolynomial, a: u64, b: u64) -> Result<(bool, bool), CliError> {
    Ok((in_kernel(g, a, b, KernelMethod::Evaluate)?, in_kernel(g, a, b, KernelMethod::Divide)?))
}

fn divide_cmd(g: &str, a: i64, b: i64) -> CmdResult {
    let poly = parse_poly(g)?;
    let (a, b) = kernel_pair(a, b)?;
    let divisor = BivariatePolynomial::binomial(a as u32, b as u32);
    let d = divide(&poly, &divisor)?;
    let (ev, dv) = kernel_verdicts(&poly, a, b)?;
    let text = format!(
        "divisor = {divisor}\nquotient = {}\nremainder = {}\nin_kernel evaluate={ev} divide={dv}\n",
        d.quotient, d.remainder
    );
    let result = json!({
        "divisor": divisor.to_string(),
        "quotient": d.quotient.to_string(),
        "remainder": d.remainder.to_string(),
        "in_kernel": {"evaluate": ev, "divide": dv},
    });
    Ok(Output::new("divide", json!({"g": poly.to_string(), "a": a, "b": b}), result, text))
}

fn kernel_cmd(g: &str, a: i64, b: i64) -> CmdResult {
    let poly = parse_poly(g)?;
    let (a, b) = kernel_pair(a, b)?;
    let image = phi_evaluate(&poly, a, b);
    let (ev, dv) = kernel_verdicts(&poly, a, b)?;
    let text = format!("image = {image}\nin_kernel evaluate={ev} divide={dv}\n");
    let result = json!({
        "image": image.to_string(),
        "in_kernel": {"evaluate": ev, "divide": dv},
    });
    Ok(Output::new("kernel", json!({"g": poly.to_string(), "a": a, "b": b}), result, text))
}

fn hilbert(which: &str, a: &str, b: &str, order: Option<usize>, max_cells: u64) -> CmdResult {
    let kind: SeriesKind = which.parse().map_err(CliError::Parse)?;
    let order = order.ok_or_else(|| CliError::Parse("missing truncation order N".into()))?;
    let parse_gen = |s: &str| -> Result<Option<i64>, CliError> {
        if s == "-" {
            return Ok(None);
        }
        s.parse().map(Some).map_err(|_| CliError::Parse(format!("{s:?} is not an integer or `-`")))
    };
    let (a, b) = match (kind.uses_pair(), parse_gen(a)?, parse_gen(b)?) {
        (false, _, _) => (0, 0),
        (true, Some(a), Some(b)) => pair(a, b, max_cells)?,
        (true, _, _) => {
            return Err(CliError::Domain(format!("series {kind} needs a generator pair")));
        }
    };
    let s = hilbert_series(kind, a, b, order)?;
    let text = format!("{kind} = {}\n{s}\n", kind.closed_form(a, b));
    let inputs = if kind.uses_pair() {
        json!({"which": kind.name(), "a": a, "b": b, "order": order})
    } else {
        json!({"which": kind.name(), "a": null, "b": null, "order": order})
    };
    Ok(Output::new("hilbert", inputs, series_json(&s), text))
}

fn rank_nullity(a: i64, b: i64, order: Option<u64>, max_cells: u64) -> CmdResult {
    let (a, b) = pair(a, b, max_cells)?;
    let nmax = order.unwrap_or(3 * a * b);
    let dims = graded_dims(a, b, nmax)?;
    let holds = dims.rows().all(|(_, e, r, k)| e == r + k);
    let mut text = String::from("n dim_E dim_R dim_K\n");
    for (n, e, r, k) in dims.rows() {
        let _ = writeln!(text, "{n} {e} {r} {k}");
    }
    let _ = writeln!(text, "rank_nullity {}", verdict(holds));
    let rows: Vec<[u64; 4]> = dims.rows().map(|(n, e, r, k)| [n, e, r, k]).collect();
    let result = json!({"rows": rows, "holds": holds});
    let mut out = Output::new("rank-nullity", json!({"a": a, "b": b, "order": nmax}), result, text);
    out.all_passed = holds;
    Ok(out)
}

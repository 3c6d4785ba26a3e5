use daha_core::combinat::{lambda_family, singular_values, Composition, SingularParams};
use daha_core::daha::{check_daha_relations_with, Status};
use daha_core::exactalg::{format_rat, parse_rat, render_latex, render_text, BigRat, PolyJson, QPoly};
use daha_core::exec::Execution;
use daha_core::jack::{
    is_shifted_singular, is_singular, nonsym_jack, shifted_jack_with, specialize, t_action_decompose, JackResult,
    Method,
};
use daha_core::qkz::{
    build_solution_with, verify_cyclic_with, verify_eigenproblem, verify_exchange_with, verify_qkz_numeric,
    QkzParams, QkzReport, TensorPoly,
};
use serde_json::{json, Value};

use crate::args::{Command, LambdaArgs, MethodArg, NumericArgs, SingularTarget};

/// Failure modes that map onto distinct exit codes.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(String),
}

impl From<daha_core::Error> for CliError {
    fn from(e: daha_core::Error) -> Self {
        use daha_core::Error::*;
        match e {
            InvalidParams(_) | InvalidSubdivision(_) | Parse(_) | IndexOutOfRange { .. } | ArityMismatch { .. } => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Compute(e.to_string()),
        }
    }
}

/// Everything a command produces, rendered later in the requested format.
pub struct Output {
    pub json: Value,
    pub text: String,
    pub latex: Option<String>,
    pub passed: bool,
}

impl Output {
    fn verdict(json: Value, text: String, passed: bool) -> Self {
        Output { json, text, latex: None, passed }
    }
}

pub fn supports_latex(cmd: &Command) -> bool {
    matches!(cmd, Command::Jack(_) | Command::ShiftedJack { .. } | Command::Specialize { .. })
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_lambda(args: &LambdaArgs) -> Result<Composition, CliError> {
    let lambda = Composition::parse(&args.lambda)?;
    if lambda.is_empty() {
        return Err(usage("--lambda must have at least one part"));
    }
    if let Some(n) = args.n {
        if n != lambda.len() {
            return Err(usage(format!("--n {n} does not match --lambda with {} parts", lambda.len())));
        }
    }
    Ok(lambda)
}

fn parse_kappa(s: &str) -> Result<BigRat, CliError> {
    parse_rat(s).map_err(|e| usage(format!("--kappa: {e}")))
}

fn parse_list<T: std::str::FromStr>(flag: &str, s: &str) -> Result<Vec<T>, CliError> {
    s.split(',')
        .map(|t| t.trim().parse::<T>().map_err(|_| usage(format!("--{flag}: cannot parse {t:?}"))))
        .collect()
}

fn method(m: MethodArg) -> Method {
    match m {
        MethodArg::Phi => Method::ViaPhi,
        MethodArg::Interp => Method::ViaInterpolation,
    }
}

fn qkz_params(kappa0: BigRat, big_n: usize, numeric: &NumericArgs) -> Result<QkzParams, CliError> {
    let p = match &numeric.p {
        Some(s) => s.split(',').map(|t| parse_rat(t.trim())).collect::<Result<Vec<_>, _>>()?,
        None => vec![BigRat::from_integer(1.into()); big_n],
    };
    if p.len() != big_n {
        return Err(usage(format!("--p needs {big_n} entries, found {}", p.len())));
    }
    Ok(QkzParams::new(kappa0, p)?)
}

fn jack_output(r: &std::sync::Arc<JackResult>) -> Output {
    Output {
        json: r.to_json_value(),
        text: r.render_text(),
        latex: Some(r.render_latex()),
        passed: true,
    }
}

pub fn run(cmd: &Command, exec: Execution) -> Result<Output, CliError> {
    match cmd {
        Command::Jack(args) => Ok(jack_output(&nonsym_jack(&parse_lambda(args)?)?)),
        Command::ShiftedJack { lambda, method: m } => {
            let lambda = parse_lambda(lambda)?;
            Ok(jack_output(&shifted_jack_with(&lambda, method(*m), exec)?))
        }
        Command::Specialize { lambda, kappa, method: m } => {
            let lambda = parse_lambda(lambda)?;
            let kappa0 = parse_kappa(kappa)?;
            let source = match m {
                Some(m) => shifted_jack_with(&lambda, method(*m), exec)?,
                None => nonsym_jack(&lambda)?,
            };
            let f = specialize(&source.poly, &kappa0)?;
            let var = source.variable();
            let mut json = json!({
                "lambda": lambda.parts(),
                "kind": source.kind,
                "kappa": format_rat(&kappa0),
            });
            merge(&mut json, serde_json::to_value(PolyJson::from_poly(&f)).expect("serializable"));
            Ok(Output {
                json,
                text: render_text(&f, var),
                latex: Some(render_latex(&f, var)),
                passed: true,
            })
        }
        Command::SingularCheck(target) => singular_check(target, exec),
        Command::Relations { n, deg } => {
            if *n == 0 {
                return Err(usage("--n must be positive"));
            }
            let reports = check_daha_relations_with(*n, *deg, exec);
            let passed = reports.iter().all(|r| r.status == Status::Pass);
            let text = reports
                .iter()
                .map(|r| format!("{} {}", status_word(r.status), r.relation))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output::verdict(serde_json::to_value(&reports).expect("serializable"), text, passed))
        }
        Command::SingularValues { n, bound } => {
            let values: Vec<String> = singular_values(*n, *bound).iter().map(format_rat).collect();
            Ok(Output::verdict(json!(values), values.join("\n"), true))
        }
        Command::QkzBuild { family, d, verify, numeric } => {
            let p = SingularParams::new(family.k, family.r, family.s, family.m, family.l)?;
            let d: Vec<usize> = parse_list("d", d)?;
            let params = qkz_params(p.kappa0(), d.len(), numeric)?;
            let f = build_solution_with(&p, &d, exec)?;
            if !*verify {
                let text = tensor_text(&f);
                return Ok(Output::verdict(f.to_json_value(), text, true));
            }
            let reports = verify_all(&f, &params, numeric, exec)?;
            let passed = reports.iter().all(QkzReport::passed);
            let text = format!("{}\n{}", tensor_text(&f), reports_text(&reports));
            let json = json!({ "solution": f.to_json_value(), "reports": reports });
            Ok(Output::verdict(json, text, passed))
        }
        Command::QkzVerify { input, kappa, numeric } => {
            let raw = std::fs::read_to_string(input).map_err(|e| usage(format!("--input {}: {e}", input.display())))?;
            let f = parse_tensor(&raw)?;
            let params = qkz_params(parse_kappa(kappa)?, f.profile.big_n(), numeric)?;
            let reports = verify_all(&f, &params, numeric, exec)?;
            let passed = reports.iter().all(QkzReport::passed);
            Ok(Output::verdict(json!(reports), reports_text(&reports), passed))
        }
        Command::TAction { lambda, i } => {
            let mu = parse_lambda(lambda)?;
            let r = t_action_decompose(&mu, *i)?;
            let text = format!("{} T{} on E_{:?} ({:?} case)", status_word(r.status), r.i, mu.parts(), r.case);
            Ok(Output::verdict(r.to_json_value(), text, r.status == Status::Pass))
        }
    }
}

fn singular_check(t: &SingularTarget, exec: Execution) -> Result<Output, CliError> {
    let (lambda, kappa0) = match (&t.lambda, t.k) {
        (Some(l), None) => {
            let lambda = parse_lambda(&LambdaArgs { n: t.n, lambda: l.clone() })?;
            (lambda, parse_kappa(t.kappa.as_deref().unwrap_or_default())?)
        }
        (None, Some(k)) => {
            let p = SingularParams::new(k, t.r.unwrap(), t.s.unwrap(), t.m.unwrap(), t.l.unwrap())?;
            let lambda = lambda_family(&p)?;
            if t.n.is_some_and(|n| n != lambda.len()) {
                return Err(usage(format!("--n does not match the family size {}", lambda.len())));
            }
            let kappa0 = match &t.kappa {
                Some(s) => parse_kappa(s)?,
                None => p.kappa0(),
            };
            (lambda, kappa0)
        }
        _ => return Err(usage("give either --lambda with --kappa, or --k --r --s --m --l")),
    };
    let xi = specialize(&nonsym_jack(&lambda)?.poly, &kappa0)?;
    let e = specialize(&shifted_jack_with(&lambda, Method::ViaPhi, exec)?.poly, &kappa0)?;
    let (a, b) = (is_singular(&xi, &kappa0), is_shifted_singular(&e, &kappa0));
    let json = json!({
        "lambda": lambda.parts(),
        "kappa": format_rat(&kappa0),
        "singular": a,
        "shifted_singular": b,
    });
    let text = format!(
        "lambda = {:?}, kappa = {}: singular = {a}, shifted singular = {b}",
        lambda.parts(),
        format_rat(&kappa0)
    );
    Ok(Output::verdict(json, text, a && b))
}

fn verify_all(
    f: &TensorPoly<BigRat>,
    params: &QkzParams,
    numeric: &NumericArgs,
    exec: Execution,
) -> Result<Vec<QkzReport>, CliError> {
    let delta = f.profile.delta().to_vec();
    let mut reports = vec![
        verify_eigenproblem(&f.component(&delta), &delta, &params.kappa0),
        verify_exchange_with(f, exec),
        verify_cyclic_with(f, params, exec),
    ];
    if numeric.samples > 0 {
        reports.push(verify_qkz_numeric(f, params, numeric.samples, numeric.tol, numeric.seed)?);
    }
    Ok(reports)
}

/// Accepts either a bare tensor or the `{"solution", "reports"}` object that
/// `qkz-build --verify` emits.
fn parse_tensor(raw: &str) -> Result<TensorPoly<BigRat>, CliError> {
    let v: Value = serde_json::from_str(raw).map_err(|e| usage(format!("--input: {e}")))?;
    let inner = v.get("solution").unwrap_or(&v);
    Ok(TensorPoly::from_json_str(&inner.to_string())?)
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        a.extend(b);
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
    }
}

fn tensor_text(f: &TensorPoly<BigRat>) -> String {
    f.profile
        .index_set()
        .iter()
        .map(|eps| {
            let c: QPoly = f.component(eps);
            let label: Vec<String> = eps.iter().map(ToString::to_string).collect();
            format!("F[{}] = {}", label.join(","), render_text(&c, 'z'))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn reports_text(reports: &[QkzReport]) -> String {
    reports
        .iter()
        .map(|r| {
            let mut line = format!("{} {:?}", status_word(r.status), r.check).to_lowercase();
            line.replace_range(..4, status_word(r.status));
            if let Some(res) = r.max_residual {
                line.push_str(&format!(" (max residual {res:.3e})"));
            }
            if !r.failures.is_empty() {
                line.push_str(&format!(": {}", r.failures.join("; ")));
            }
            line
        })
        .collect::<Vec<_>>()
        .join("\n")
}

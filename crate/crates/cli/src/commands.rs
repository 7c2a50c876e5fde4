use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use qsl2::bases::{projective_class_in_standard, standard_in_twisted, BasisExpansion};
use qsl2::eulerchar::{
    ci_poincare, deviations, euler_inverse, flag_degrees, grassmannian_degrees, BigradedSeries,
};
use qsl2::laurent::{qbinom, qfact, qfact_renorm, qint, qint_renorm};
use qsl2::networks::{
    eval_network, parse_network, theta_formula, theta_network, unknot_contributions, unknot_ext_euler,
    unknot_value,
};
use qsl2::resolutions::{delta_in_projectives, resolution_table};
use qsl2::tensor_rep::TensorVector;
use qsl2::threej::{arrangements as arrangement_classes, Route};
use qsl2::{LaurentPoly, LaurentSeries};
use serde_json::{json, Value};

use crate::report::{Failure, Report};
use crate::{Label, Tuple};

fn tuple_json(t: Tuple) -> Value {
    json!({"i": t.i, "j": t.j, "k": t.k, "r": t.r, "s": t.s, "t": t.t})
}

fn label_json(l: Label) -> Value {
    json!({"r": l.r, "s": l.s, "i": l.i, "j": l.j})
}

fn expansion_json(e: &BasisExpansion) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .map(|(idx, c)| json!({"index": idx, "coeff": c.to_string()}))
        .collect();
    json!({"basis": e.basis().to_string(), "terms": terms})
}

fn ranks_json(s: &BigradedSeries) -> Value {
    let map: serde_json::Map<String, Value> = (0..s.t_order)
        .filter_map(|m| s.coeff(m).map(|p| (m.to_string(), Value::String(p.to_string()))))
        .collect();
    Value::Object(map)
}

pub fn qnum(n: usize, k: Option<usize>, factorial: bool, renorm: bool) -> Report {
    let (name, value) = match (k, factorial) {
        (Some(k), _) => {
            let b = qbinom(n as i64, k as i64);
            let b = if renorm && k <= n { b.shift((k * (n - k)) as i64) } else { b };
            (format!("[{n},{k}]"), b)
        }
        (None, true) => (format!("[{n}]!"), if renorm { qfact_renorm(n) } else { qfact(n) }),
        (None, false) => (format!("[{n}]"), if renorm { qint_renorm(n) } else { qint(n) }),
    };
    Report::new(
        "qnum",
        json!({"n": n, "k": k, "factorial": factorial, "renorm": renorm, "name": name}),
        Value::String(value.to_string()),
        value.to_string(),
    )
}

pub fn threej(t: Tuple, route: &str) -> Result<Report, Failure> {
    let eval = |r: Route| r.eval(t.i, t.j, t.k, t.r, t.s, t.t);
    if route != "all" {
        let r: Route = route
            .parse()
            .map_err(|_| Failure::Usage(format!("unknown route {route:?}; expected one of {}", route_names())))?;
        let v = eval(r)?;
        let mut rep = Report::new("threej", tuple_json(t), Value::String(v.to_string()), v.to_string());
        rep.routes.push(r.name().to_string());
        return Ok(rep);
    }
    let mut values = Vec::new();
    for r in Route::ALL {
        values.push((r, eval(r)?));
    }
    let get = |r: Route| values.iter().find(|(x, _)| *x == r).map(|(_, v)| v.clone()).unwrap();
    let c = get(Route::Direct);
    let mut problems = Vec::new();
    for r in [Route::Sum, Route::Alternating] {
        if get(r) != c {
            problems.push(format!("{} differs from direct", r.name()));
        }
    }
    if get(Route::Classical) != LaurentPoly::constant(c.at_one()) {
        problems.push("classical differs from C at q=1".to_string());
    }
    if get(Route::Twisted) != get(Route::Positivity) {
        problems.push("positivity differs from twisted".to_string());
    }
    let mut text = String::new();
    for (r, v) in &values {
        let _ = writeln!(text, "{:<12} {:<6} {v}", r.name(), r.symbol());
    }
    if problems.is_empty() {
        text.push_str("agreement: direct, sum and alternating give C; classical is C at q=1; twisted and positivity give D\n");
    } else {
        let _ = writeln!(text, "disagreement: {}", problems.join("; "));
    }
    let value: serde_json::Map<String, Value> = values
        .iter()
        .map(|(r, v)| (r.name().to_string(), json!({"symbol": r.symbol(), "value": v.to_string()})))
        .collect();
    let mut rep = Report::new("threej", tuple_json(t), Value::Object(value), text);
    rep.routes = Route::ALL.iter().map(|r| r.name().to_string()).collect();
    rep.disagreement = !problems.is_empty();
    Ok(rep)
}

fn route_names() -> String {
    let mut names: Vec<&str> = Route::ALL.iter().map(|r| r.name()).collect();
    names.push("all");
    names.join(", ")
}

pub fn arrangements(t: Tuple, list: bool) -> Result<Report, Failure> {
    let classes = arrangement_classes(t.i, t.j, t.k, t.r, t.s, t.t)?;
    let raw: u64 = classes.iter().map(|c| c.multiplicity).sum();
    let signed: i64 = classes.iter().map(|c| i64::from(c.sign) * c.multiplicity as i64).sum();
    let mut text = format!("raw count {raw}\nsigned total {signed}\n");
    if list {
        for c in &classes {
            let _ = writeln!(
                text,
                "a={} multiplicity={} sign={:+} gamma={}",
                c.a, c.multiplicity, c.sign, c.gamma
            );
        }
    }
    let rows: Vec<Value> = classes
        .iter()
        .map(|c| json!({"a": c.a, "multiplicity": c.multiplicity, "sign": c.sign, "gamma": c.gamma}))
        .collect();
    Ok(Report::new(
        "arrangements",
        tuple_json(t),
        json!({"raw_count": raw, "signed_total": signed, "classes": rows}),
        text,
    ))
}

fn parse_index(s: &str) -> Result<Vec<usize>, Failure> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("index tuple {s:?}: {p:?} is not a nonnegative integer")))
        })
        .collect()
}

pub fn network_eval(file: &Path, apply: Option<&str>, pair: Option<&str>) -> Result<Report, Failure> {
    let text = std::fs::read_to_string(file).map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
    let expr = parse_network(&text)?;
    let inputs = json!({"file": file.display().to_string(), "apply": apply, "pair": pair});
    let apply = apply.map(parse_index).transpose()?;
    let pair = pair.map(parse_index).transpose()?;

    let image = match (&apply, expr.input_width()) {
        (Some(idx), _) => Some(expr.apply(&TensorVector::basis(expr.input_shape().clone(), idx)?)?),
        (None, 0) => Some(expr.apply(&TensorVector::basis(expr.input_shape().clone(), &[])?)?),
        (None, _) => None,
    };
    if let Some(b) = &pair {
        let v = image.ok_or_else(|| Failure::Usage("--pair needs --apply unless the network has input 0".to_string()))?;
        expr.output_shape().check_index(b)?;
        let c = v.dual_coeff(b);
        return Ok(Report::new("network", inputs, Value::String(c.to_string()), c.to_string()));
    }
    if let Some(v) = image {
        if v.shape().is_empty() {
            let c = v.coeff(&[]);
            return Ok(Report::new("network", inputs, Value::String(c.to_string()), c.to_string()));
        }
        let terms: Vec<Value> = v
            .terms()
            .map(|(idx, c)| json!({"index": idx, "coeff": c.to_string()}))
            .collect();
        return Ok(Report::new(
            "network",
            inputs,
            json!({"shape": expr.output_shape().dims(), "terms": terms}),
            v.to_string(),
        ));
    }
    let m = eval_network(&expr)?;
    let mut text = String::new();
    let mut entries = Vec::new();
    for (out, input, c) in m.entries() {
        let _ = writeln!(text, "{out:?} <- {input:?}: {c}");
        entries.push(json!({"out": out, "in": input, "coeff": c.to_string()}));
    }
    if entries.is_empty() {
        text.push_str("0\n");
    }
    Ok(Report::new(
        "network",
        inputs,
        json!({"domain": expr.input_shape().dims(), "codomain": expr.output_shape().dims(), "entries": entries}),
        text,
    ))
}

pub fn theta(i: usize, j: usize, k: usize) -> Result<Report, Failure> {
    let net = theta_network(i, j, k)?;
    let formula = theta_formula(i, j, k)?;
    let agree = net == formula;
    let text = format!(
        "{net}\nformula {}\n",
        if agree { "agrees" } else { "DIFFERS" }
    );
    let mut rep = Report::new(
        "theta",
        json!({"i": i, "j": j, "k": k}),
        json!({"network": net.to_string(), "formula": formula.to_string()}),
        text,
    );
    rep.routes = vec!["network".to_string(), "formula".to_string()];
    rep.disagreement = !agree;
    Ok(rep)
}

pub fn unknot(n: usize, ext: bool) -> Result<Report, Failure> {
    let inputs = json!({"n": n, "ext": ext});
    if ext {
        let parts = unknot_contributions(n)?;
        let total = unknot_ext_euler(n);
        let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
        return Ok(Report::new(
            "unknot",
            inputs,
            json!({"euler_characteristic": total.to_string(), "contributions": parts}),
            total.to_string(),
        ));
    }
    let v = unknot_value(n);
    Ok(Report::new("unknot", inputs, Value::String(v.to_string()), v.to_string()))
}

fn euler_report(
    command_inputs: Value,
    gens: &[usize],
    rels: &[usize],
    t_order: usize,
    q_order: i64,
) -> Result<Report, Failure> {
    let ranks = ci_poincare(gens, rels, t_order)?;
    let inverse = euler_inverse(gens, rels, q_order)?;
    let mut text = String::new();
    for m in 0..t_order {
        let _ = writeln!(text, "t^{m}: {}", ranks.coeff(m).unwrap_or_default());
    }
    let _ = writeln!(text, "euler characteristic: {inverse}");
    let devs = if t_order >= 2 {
        let d = deviations(&ranks.at_q_one(), t_order - 1)?;
        let _ = writeln!(text, "deviations: {:?}", d.c);
        d.c
    } else {
        Vec::new()
    };
    Ok(Report::new(
        "euler",
        command_inputs,
        json!({
            "generator_degrees": gens,
            "relation_degrees": rels,
            "ranks": ranks_json(&ranks),
            "euler_characteristic": inverse.to_string(),
            "deviations": devs,
        }),
        text,
    ))
}

pub fn euler_flag(n: usize, t_order: usize, q_order: i64) -> Result<Report, Failure> {
    let (g, r) = flag_degrees(n);
    euler_report(
        json!({"kind": "flag", "n": n, "t_order": t_order, "q_order": q_order}),
        &g,
        &r,
        t_order,
        q_order,
    )
}

pub fn euler_grassmannian(k: usize, n: usize, t_order: usize, q_order: i64) -> Result<Report, Failure> {
    let (g, r) = grassmannian_degrees(k, n)?;
    euler_report(
        json!({"kind": "grassmannian", "k": k, "n": n, "t_order": t_order, "q_order": q_order}),
        &g,
        &r,
        t_order,
        q_order,
    )
}

pub fn euler_deviations(file: &Path, t_order: usize) -> Result<Report, Failure> {
    let text = std::fs::read_to_string(file).map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
    let coeffs: Vec<BigInt> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(|l| l.split(|c: char| c.is_whitespace() || c == ','))
        .filter(|w| !w.is_empty())
        .map(|w| {
            w.parse()
                .map_err(|_| Failure::Usage(format!("{}: {w:?} is not an integer", file.display())))
        })
        .collect::<Result<_, _>>()?;
    if coeffs.is_empty() {
        return Err(Failure::Usage(format!("{}: no coefficients", file.display())));
    }
    let max_m = (coeffs.len() - 1).min(t_order);
    let series = LaurentSeries::new(0, coeffs.clone(), coeffs.len() as i64);
    let d = deviations(&series, max_m)?;
    Ok(Report::new(
        "euler",
        json!({"kind": "deviations", "series": file.display().to_string(), "t_order": t_order}),
        json!({"deviations": d.c}),
        format!("deviations: {:?}", d.c),
    ))
}

pub fn resolution(l: Label) -> Result<Report, Failure> {
    let t = resolution_table(l.r, l.s, l.i, l.j)?;
    let delta = delta_in_projectives(l.r, l.s, l.i, l.j)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for (m, row) in t.rows.iter().enumerate() {
        let parts: Vec<String> = row.iter().map(|p| format!("{} P({},{})", p.multiplicity, p.r, p.s)).collect();
        let _ = writeln!(text, "Q_{m}: {}", if parts.is_empty() { "0".to_string() } else { parts.join(" + ") });
        let terms: Vec<Value> = row
            .iter()
            .map(|p| json!({"r": p.r, "s": p.s, "multiplicity": p.multiplicity.to_string()}))
            .collect();
        rows.push(Value::Array(terms));
    }
    let _ = writeln!(text, "length {}", t.length());
    let _ = writeln!(text, "[Delta] = {delta}");
    Ok(Report::new(
        "resolution",
        label_json(l),
        json!({"length": t.length(), "rows": rows, "delta": expansion_json(&delta)}),
        text,
    ))
}

pub fn basis(l: Label, inverse: bool) -> Result<Report, Failure> {
    let e = if inverse {
        standard_in_twisted(l.r, l.s, l.i, l.j)?
    } else {
        projective_class_in_standard(l.r, l.s, l.i, l.j)?
    };
    let mut inputs = label_json(l);
    inputs["inverse"] = Value::Bool(inverse);
    Ok(Report::new("basis", inputs, expansion_json(&e), e.to_string()))
}

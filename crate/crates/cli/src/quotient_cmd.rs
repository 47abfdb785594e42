use coxkit::finite_quotient::{close_group, quotient_report as report_of, reynolds_invariants, CycloMatrix, CycloNum, MatGroup};
use coxkit::polyring::default_names;
use serde_json::{json, Value};

use crate::json::*;

/// An entry is a coefficient array in powers of `ζₙ` or a single rational.
fn cyclo_of(n: u32, v: &Value) -> Res<CycloNum> {
    match v {
        Value::Array(cs) => Ok(CycloNum::new(n, cs.iter().map(rat_of).collect::<Res<Vec<_>>>()?)),
        other => Ok(CycloNum::from_rat(n, rat_of(other)?)),
    }
}

fn group_of(v: &Value, cap: usize) -> Res<MatGroup> {
    let dim = usize_of(field(v, "dim")?)?;
    let n = u32::try_from(usize_of(field(v, "conductor")?)?).map_err(malformed)?;
    if n == 0 {
        return Err(malformed("conductor must be positive"));
    }
    let gens = array_of(field(v, "generators")?)?
        .iter()
        .map(|g| {
            let rows = array_of(g)?
                .iter()
                .map(|r| array_of(r)?.iter().map(|x| cyclo_of(n, x)).collect::<Res<Vec<_>>>())
                .collect::<Res<Vec<_>>>()?;
            if rows.len() != dim {
                return Err(malformed("matrix size does not match `dim`"));
            }
            CycloMatrix::from_rows(n, rows).map_err(malformed)
        })
        .collect::<Res<Vec<_>>>()?;
    close_group(gens, cap).map_err(domain)
}

pub fn quotient_report(v: &Value, cap: usize) -> Res<Value> {
    let g = group_of(v, cap)?;
    let r = report_of(&g);
    Ok(json!({
        "kind": "quotient_report",
        "order_g": count(r.order_g),
        "pseudoreflections": count(r.num_pseudoreflections),
        "order_h": count(r.order_h),
        "order_htilde": count(r.order_htilde),
        "f_abelian": r.f_abelian,
        "commutant_order": count(r.commutant_order),
        "n_invariants": ints(&r.n_invariants),
        "is_toric": r.is_toric,
    }))
}

pub fn reynolds(v: &Value, cap: usize) -> Res<Value> {
    let g = group_of(v, cap)?;
    let d = u32::try_from(usize_of(field(v, "degree")?)?).map_err(malformed)?;
    let basis = reynolds_invariants(&g, d).map_err(domain)?;
    let names = default_names("x", g.dim());
    Ok(json!({
        "kind": "invariants",
        "degree": count(d as usize),
        "dimension": count(basis.len()),
        "invariants": basis.iter().map(|p| p.to_string_with(&names)).collect::<Vec<_>>(),
    }))
}

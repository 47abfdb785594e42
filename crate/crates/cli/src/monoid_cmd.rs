use coxkit::exactgeom::IntMatrix;
use coxkit::monoids::{divisor_theory as theory_of, extend_embedding, is_saturated, AffineMonoid, AxiomReport, ExtensionResult, FreeEmbedding, MonoidHom};
use serde_json::{json, Value};

use crate::json::*;

fn monoid_of(v: &Value) -> Res<AffineMonoid> {
    let n = usize_of(field(v, "ambient_rank")?)?;
    let gens = int_rows_of(field(v, "generators")?)?;
    match v.get("lattice") {
        Some(l) => AffineMonoid::with_lattice(n, gens, &matrix_of(l, n)?).map_err(malformed),
        None => AffineMonoid::new(n, gens).map_err(malformed),
    }
}

pub fn divisor_theory(v: &Value) -> Res<Value> {
    let m = monoid_of(v)?;
    let dt = theory_of(&m).map_err(domain)?;
    let ambient: Vec<Value> = dt.ambient_functionals_rat().iter().map(|r| Value::Array(r.iter().map(rat).collect())).collect();
    Ok(json!({
        "kind": "divisor_theory",
        "free_rank": count(dt.free_rank()),
        "lattice": rows(m.group_basis().rows()),
        "functionals": rows(dt.functionals().rows()),
        "ambient_functionals": ambient,
        "images": rows(dt.images()),
    }))
}

fn report_json(r: &AxiomReport) -> Value {
    match r {
        AxiomReport::Pass { elements, divisors } => json!({
            "kind": "pass", "elements_checked": count(*elements), "divisors_checked": count(*divisors)
        }),
        AxiomReport::FailsFirst { a, b, c1 } => json!({ "kind": "fails_first", "a": ints(a), "b": ints(b), "c1": ints(c1) }),
        AxiomReport::FailsSecond { d1, d2 } => json!({ "kind": "fails_second", "d1": ints(d1), "d2": ints(d2) }),
    }
}

/// Checks the divisor theory of the monoid, or the embedding given by
/// `images` when present.
pub fn check_axioms(v: &Value, depth: u32) -> Res<Value> {
    let m = monoid_of(v)?;
    let embedding = match v.get("images") {
        Some(imgs) => {
            let images = int_rows_of(imgs)?;
            let rank = images.first().map_or(0, |r| r.len());
            FreeEmbedding::new(m, rank, images).map_err(malformed)?
        }
        None => theory_of(&m).map_err(domain)?.embedding(),
    };
    let report = embedding.verify_axioms(depth);
    Ok(json!({
        "kind": "axiom_report",
        "depth": count(depth as usize),
        "passed": report.passed(),
        "report": report_json(&report),
    }))
}

pub fn saturate(v: &Value) -> Res<Value> {
    let m = monoid_of(v)?;
    let s = is_saturated(&m);
    Ok(json!({
        "kind": "saturation",
        "saturated": s.saturated,
        "witness": s.witness.as_ref().map(|w| ints(w)),
        "hilbert_basis": rows(&s.hilbert_basis),
    }))
}

pub fn extend(v: &Value, depth: u32) -> Res<Value> {
    let m = monoid_of(field(v, "monoid")?)?;
    let alpha_v = field(v, "alpha")?;
    let alpha = if let Some(mat) = alpha_v.get("matrix") {
        let rows = int_rows_of(mat)?;
        let mat = IntMatrix::from_rows(m.ambient_rank(), rows).map_err(malformed)?;
        MonoidHom::from_matrix(&m, &mat).map_err(malformed)?
    } else {
        let images = int_rows_of(field(alpha_v, "generator_images")?)?;
        let rank = images.first().map_or(0, |r| r.len());
        MonoidHom::from_images(&m, rank, images).map_err(malformed)?
    };
    let dt = theory_of(&m).map_err(domain)?;
    let res = extend_embedding(&dt, &alpha, depth).map_err(domain)?;
    Ok(match res {
        ExtensionResult::Beta(b) => json!({ "kind": "beta", "beta": rows(b.rows()), "divisor_images": rows(dt.images()) }),
        ExtensionResult::ViolationStar { a, b, s } => json!({ "kind": "violation_star", "a": ints(&a), "b": ints(&b), "s": ints(&s) }),
        ExtensionResult::ViolationStarStar { witness_set, common_prime_index } => json!({
            "kind": "violation_star_star",
            "witness_set": rows(&witness_set),
            "common_prime_index": count(common_prime_index),
        }),
        ExtensionResult::NotAnEmbedding { a, b } => json!({ "kind": "not_an_embedding", "a": ints(&a), "b": ints(&b) }),
    })
}

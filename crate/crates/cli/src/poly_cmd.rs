use coxkit::exactgeom::IntVector;
use coxkit::grading::{
    certify_rho, elementary, quadric_ring, shear_family as family, single_shear, tame_search, wildness_certificate, AbGroup,
    Elementary, GradedEndo, GradedRing, RhoCertificate, Wildness,
};
use coxkit::polyring::{compose_sequence, default_names, jacobian as jac, poly_det, substitute, PolyMap};
use serde_json::{json, Map, Value};

use crate::json::*;
use crate::toric_cmd::normalization_json;

fn names_of(v: &Value) -> Res<Vec<String>> {
    if let Some(names) = v.get("var_names") {
        return Ok(strings_of(names)?.into_iter().map(String::from).collect());
    }
    Ok(default_names("y", usize_of(field(v, "num_vars")?)?))
}

fn map_of(v: &Value, names: &[String]) -> Res<PolyMap> {
    PolyMap::new(names.len(), polys_of(v, names)?).map_err(malformed)
}

/// `[φ₁, …, φₙ]` composes to `φₙ ∘ ⋯ ∘ φ₁`.
pub fn compose(v: &Value) -> Res<Value> {
    let names = names_of(v)?;
    let maps = array_of(field(v, "maps")?)?.iter().map(|m| map_of(m, &names)).collect::<Res<Vec<_>>>()?;
    if maps.iter().any(|m| m.images().len() != names.len()) {
        return Err(malformed("each map needs one image per variable"));
    }
    let c = compose_sequence(names.len(), &maps).map_err(malformed)?;
    Ok(json!({ "kind": "composite", "images": polys(c.images(), &names), "is_identity": c.is_identity() }))
}

pub fn jacobian(v: &Value) -> Res<Value> {
    let names = names_of(v)?;
    let m = map_of(field(v, "map")?, &names)?;
    let j = jac(&m);
    let det = poly_det(&j).map_err(malformed)?;
    Ok(json!({
        "kind": "jacobian",
        "jacobian": j.iter().map(|row| polys(row, &names)).collect::<Vec<_>>(),
        "determinant": det.to_string_with(&names),
    }))
}

pub fn parse(v: &Value) -> Res<Value> {
    let names = names_of(v)?;
    let p = poly_of(str_of(field(v, "text")?)?, &names)?;
    let terms: Vec<Value> = p
        .sorted_terms()
        .into_iter()
        .map(|(e, c)| json!({ "exponent": e.iter().map(|&k| count(k as usize)).collect::<Vec<_>>(), "coeff": rat(c) }))
        .collect();
    Ok(json!({
        "kind": "polynomial",
        "canonical": p.to_string_with(&names),
        "terms": terms,
        "total_degree": p.total_degree().map(|d| count(d as usize)),
    }))
}

fn grading_of(v: &Value) -> Res<GradedRing> {
    let a = usize_of(field(v, "free_rank")?)?;
    let torsion = match v.get("torsion") {
        Some(t) => int_vec_of(t)?,
        None => Vec::new(),
    };
    let group = AbGroup::new(a, torsion).map_err(malformed)?;
    let degs: Vec<IntVector> = int_rows_of(field(v, "var_degrees")?)?;
    let elems = degs
        .iter()
        .map(|d| {
            if d.len() != group.ngens() {
                return Err(malformed("degree length does not match the group"));
            }
            Ok(group.from_vector(d))
        })
        .collect::<Res<Vec<_>>>()?;
    GradedRing::new(group, elems).map_err(malformed)
}

fn step_of(ring: &GradedRing, v: &Value, names: &[String]) -> Res<GradedEndo> {
    if let Some(s) = v.get("shear") {
        let var = usize_of(field(s, "var")?)?;
        let f = poly_of(str_of(field(s, "f")?)?, names)?;
        return single_shear(ring, var, f).map_err(domain);
    }
    let a = rat_rows_of(field(v, "linear")?)?;
    elementary(ring, Elementary::Linear(a)).map_err(domain)
}

fn cert_json(c: &RhoCertificate, names: &[String]) -> Value {
    json!({
        "rho": polys(c.rho.images(), names),
        "f": c.f.to_string_with(names),
        "g": c.g.to_string_with(names),
        "f_in_i3": c.f_in_i3,
        "g_in_i3": c.g_in_i3,
        "fixes_y3_y4": c.fixes_y3_y4,
        "det_j": c.det_j.to_string_with(names),
        "residual": c.residual.to_string_with(names),
        "residual_in_i2": c.residual_in_i2,
        "det_is_constant": c.det_is_constant,
        "holds": c.holds(),
    })
}

/// Sections present in the input are answered: `steps` (a proposed
/// decomposition of ζ), `rho` (a replacement composite to certify) and
/// `tame_search` (maximal length of a bounded search).
pub fn wildness_cert(v: &Value) -> Res<Value> {
    let ring = quadric_ring();
    let names = ring.names();
    let mut out = Map::new();
    out.insert("kind".into(), json!("wildness"));
    if let Some(steps) = v.get("steps") {
        let seq = array_of(steps)?.iter().map(|s| step_of(&ring, s, &names)).collect::<Res<Vec<_>>>()?;
        let res = match wildness_certificate(&seq).map_err(domain)? {
            Wildness::NotZeta { var, expected, found } => json!({
                "kind": "not_zeta",
                "var": count(var),
                "expected": expected.to_string_with(&names),
                "found": found.to_string_with(&names),
            }),
            Wildness::Certificate(c) => {
                let mut j = cert_json(&c, &names);
                j["kind"] = json!("certificate");
                j
            }
        };
        out.insert("decomposition".into(), res);
    }
    if let Some(rho) = v.get("rho") {
        let m = map_of(rho, &names)?;
        out.insert("rho_certificate".into(), cert_json(&certify_rho(&m).map_err(domain)?, &names));
    }
    if let Some(len) = v.get("tame_search") {
        let s = tame_search(usize_of(len)?);
        out.insert(
            "tame_search".into(),
            json!({
                "max_len": count(s.max_len),
                "generators": count(s.generators),
                "explored": count(s.explored),
                "found": s.found.map(|p| p.into_iter().map(count).collect::<Vec<_>>()),
            }),
        );
    }
    Ok(Value::Object(out))
}

pub fn shear_family(v: &Value) -> Res<Value> {
    let ring = grading_of(field(v, "grading")?)?;
    let names = ring.names();
    let var = usize_of(field(v, "var")?)?;
    let f = poly_of(str_of(field(v, "f")?)?, &names)?;
    let h = poly_of(str_of(field(v, "h")?)?, &names)?;
    let k = u32::try_from(usize_of(field(v, "k")?)?).map_err(malformed)?;
    let e = family(&ring, var, &f, &h, k).map_err(domain)?;
    let mut out = json!({
        "kind": "shear",
        "images": polys(e.map().images(), &names),
        "normalization": normalization_json(ring.group(), &e.check_normalizes()),
    });
    if let Some(p) = v.get("probe") {
        let p = poly_of(str_of(p)?, &names)?;
        let image = substitute(&p, e.map()).map_err(malformed)?;
        out["probe_image"] = json!(image.to_string_with(&names));
        out["probe_total_degree"] = json!(image.total_degree().map(|d| count(d as usize)));
    }
    Ok(out)
}

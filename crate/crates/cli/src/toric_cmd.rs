use coxkit::exactgeom::Cone;
use coxkit::grading::{AbGroup, GradedEndo, GroupElem, Neither, Normalization};
use coxkit::polyring::{default_names, PolyMap};
use coxkit::toric_cox::{cox_data as cox_of, CoxData};
use serde_json::{json, Value};

use crate::json::*;

fn cone_of(v: &Value) -> Res<Cone> {
    let n = usize_of(field(v, "ambient_rank")?)?;
    let rays = int_rows_of(v.get("rays").or_else(|| v.get("generators")).ok_or_else(|| malformed("missing field `rays`"))?)?;
    Cone::new(n, &rays).map_err(domain)
}

fn data_of(v: &Value) -> Res<CoxData> {
    cox_of(&cone_of(v)?).map_err(domain)
}

pub(crate) fn group_json(g: &AbGroup) -> Value {
    json!({ "free_rank": count(g.free_rank()), "torsion": ints(g.torsion()) })
}

pub(crate) fn elem_json(g: &AbGroup, e: &GroupElem) -> Value {
    ints(&g.to_vector(e))
}

pub(crate) fn normalization_json(g: &AbGroup, n: &Normalization) -> Value {
    match n {
        Normalization::Preserves => json!({ "kind": "preserves" }),
        Normalization::Normalizes(dm) => json!({
            "kind": "normalizes",
            "generator_images": dm.generator_images().map(|v| v.iter().map(|e| elem_json(g, e)).collect::<Vec<_>>()),
            "degree_images": dm.targets().iter().map(|e| elem_json(g, e)).collect::<Vec<_>>(),
        }),
        Normalization::Neither(Neither::NotWellDefined { relation }) => {
            json!({ "kind": "neither", "reason": "not_well_defined", "relation": ints(relation) })
        }
        Normalization::Neither(Neither::NotInvertible { witness }) => {
            json!({ "kind": "neither", "reason": "not_invertible", "witness": elem_json(g, witness) })
        }
    }
}

pub fn cox_data(v: &Value) -> Res<Value> {
    let cd = data_of(v)?;
    let g = cd.cl_group();
    let names = default_names("y", cd.num_vars());
    Ok(json!({
        "kind": "cox_data",
        "cl_group": group_json(g),
        "var_degrees": cd.var_degrees().iter().map(|e| elem_json(g, e)).collect::<Vec<_>>(),
        "rays": rows(cd.rays()),
        "ray_pairing": rows(cd.ray_pairing().rows()),
        "coordinates": rows(cd.coordinates()),
        "pullbacks": polys(cd.pullback_map().images(), &names),
    }))
}

pub fn pullback(v: &Value) -> Res<Value> {
    let cd = data_of(field(v, "cone")?)?;
    let names = default_names("y", cd.num_vars());
    let chars = int_rows_of(field(v, "characters")?)?;
    let out = chars.iter().map(|u| cd.pullback(u).map_err(domain)).collect::<Res<Vec<_>>>()?;
    Ok(json!({ "kind": "pullback", "pullbacks": polys(&out, &names) }))
}

pub fn verify_lift(v: &Value) -> Res<Value> {
    let cd = data_of(field(v, "cone")?)?;
    let xs = cd.coordinate_names();
    let ys = default_names("y", cd.num_vars());
    let psi = PolyMap::new(xs.len(), polys_of(field(v, "psi")?, &xs)?).map_err(malformed)?;
    let ring = cd.ring();
    let phi_map = PolyMap::new(ys.len(), polys_of(field(v, "phi")?, &ys)?).map_err(malformed)?;
    let phi = GradedEndo::new(&ring, phi_map).map_err(domain)?;
    let lift = cd.verify_lift(&psi, &phi).map_err(malformed)?;
    let violated = match v.get("relations") {
        Some(r) => cd.check_relations(&psi, &polys_of(r, &xs)?).map_err(domain)?,
        None => None,
    };
    Ok(json!({
        "kind": "lift_check",
        "lift": lift,
        "normalization": normalization_json(ring.group(), &phi.check_normalizes()),
        "violated_relation": violated.map(count),
    }))
}

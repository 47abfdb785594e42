use std::collections::HashSet;

use super::{elementary, Elementary, GradedEndo, GradedRing, GradingError};
use crate::exactgeom::rat;
use crate::polyring::{compose_sequence, in_ideal_power, jacobian, poly_det, Poly, PolyMap};

const N: usize = 4;

fn y(i: usize) -> Poly {
    Poly::var(N, i)
}

/// `ℤ`-grading `(1, 1, −1, −1)` of `𝕂[y₁, y₂, y₃, y₄]`.
pub fn quadric_ring() -> GradedRing {
    GradedRing::integer(&[1, 1, -1, -1])
}

/// `Δ = y₁y₄ − y₂y₃`.
pub fn delta() -> Poly {
    &(&y(0) * &y(3)) - &(&y(1) * &y(2))
}

/// Anick's automorphism `(y₁, y₂ + y₁Δ, y₃, y₄ + y₃Δ)`.
pub fn zeta() -> PolyMap {
    let d = delta();
    PolyMap::new(N, vec![y(0), &y(1) + &(&y(0) * &d), y(2), &y(3) + &(&y(2) * &d)]).unwrap()
}

/// `(y₁, y₂ − y₁Δ, y₃, y₄ − y₃Δ)`.
pub fn zeta_inverse() -> PolyMap {
    let d = delta();
    PolyMap::new(N, vec![y(0), &y(1) - &(&y(0) * &d), y(2), &y(3) - &(&y(2) * &d)]).unwrap()
}

/// `(y₃, y₄, y₁, y₂)`, which reverses the quadric grading.
pub fn transpose_map() -> PolyMap {
    PolyMap::new(N, vec![y(2), y(3), y(0), y(1)]).unwrap()
}

/// Nagata's automorphism of `𝕂[y₁, y₂, y₃]`.
pub fn nagata() -> PolyMap {
    let v = |i| Poly::var(3, i);
    let w = &(&v(0) * &v(2)) + &v(1).pow(2);
    let two = Poly::constant(3, rat(2));
    let a = &(&v(0) - &(&(&two * &v(1)) * &w)) - &(&v(2) * &w.pow(2));
    let b = &v(1) + &(&v(2) * &w);
    PolyMap::new(3, vec![a, b, v(2)]).unwrap()
}

/// Whether Nagata's map is graded for the `ℤ`-degrees `(a, b, c)`: every
/// image homogeneous of the degree of its variable.
pub fn nagata_homogeneous(a: i64, b: i64, c: i64) -> bool {
    let ring = GradedRing::integer(&[a, b, c]);
    nagata()
        .images()
        .iter()
        .enumerate()
        .all(|(i, p)| ring.is_homogeneous_of(p, ring.var_degree(i)))
}

/// Composite of `seq` after replacing every shear of a frozen variable by
/// its linear part.
pub fn rho_replace(seq: &[GradedEndo], frozen: &[usize]) -> Result<PolyMap, GradingError> {
    let Some(first) = seq.first() else {
        return Ok(PolyMap::identity(N));
    };
    let n = first.ring().num_vars();
    let mut maps = Vec::with_capacity(seq.len());
    for (step, e) in seq.iter().enumerate() {
        if !e.is_elementary() {
            return Err(GradingError::NotElementary { step });
        }
        if e.ring() != first.ring() {
            return Err(GradingError::RingMismatch);
        }
        let replaced = match e.shifted_var() {
            Some(v) if frozen.contains(&v) => e.linear_part()?,
            _ => e.clone(),
        };
        maps.push(replaced.map().clone());
    }
    Ok(compose_sequence(n, &maps)?)
}

/// Checks on a replacement composite `ρ` against `ζ`, with `I = (y₁, y₂)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoCertificate {
    pub rho: PolyMap,
    /// `ζ(y₁) − ρ(y₁)`.
    pub f: Poly,
    /// `ζ(y₂) − ρ(y₂)`.
    pub g: Poly,
    pub f_in_i3: bool,
    pub g_in_i3: bool,
    pub fixes_y3_y4: bool,
    pub det_j: Poly,
    /// `det J(ρ) − (1 − y₁y₃)`.
    pub residual: Poly,
    pub residual_in_i2: bool,
    pub det_is_constant: bool,
}

impl RhoCertificate {
    /// All structural checks hold, so `ρ` is not invertible.
    pub fn holds(&self) -> bool {
        self.f_in_i3 && self.g_in_i3 && self.fixes_y3_y4 && self.residual_in_i2 && !self.det_is_constant
    }
}

pub fn certify_rho(rho: &PolyMap) -> Result<RhoCertificate, GradingError> {
    if rho.source_vars() != N || rho.target_vars() != N {
        return Err(GradingError::NotQuadric);
    }
    let z = zeta();
    let ideal = [0usize, 1];
    let f = z.image(0) - rho.image(0);
    let g = z.image(1) - rho.image(1);
    let det_j = poly_det(&jacobian(rho))?;
    let base = &Poly::one(N) - &(&y(0) * &y(2));
    let residual = &det_j - &base;
    Ok(RhoCertificate {
        f_in_i3: in_ideal_power(&f, &ideal, 3),
        g_in_i3: in_ideal_power(&g, &ideal, 3),
        fixes_y3_y4: rho.image(2) == &y(2) && rho.image(3) == &y(3),
        residual_in_i2: in_ideal_power(&residual, &ideal, 2),
        det_is_constant: det_j.is_constant(),
        rho: rho.clone(),
        f,
        g,
        det_j,
        residual,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Wildness {
    /// The sequence composes to a map differing from `ζ` at `var`.
    NotZeta { var: usize, expected: Poly, found: Poly },
    Certificate(Box<RhoCertificate>),
}

/// Tests a proposed decomposition `ζ = φₙ ∘ ⋯ ∘ φ₁` into graded elementary
/// maps, given as `[φ₁, …, φₙ]`.
pub fn wildness_certificate(seq: &[GradedEndo]) -> Result<Wildness, GradingError> {
    let ring = quadric_ring();
    for (step, e) in seq.iter().enumerate() {
        if e.ring() != &ring {
            return Err(GradingError::NotQuadric);
        }
        if !e.is_elementary() {
            return Err(GradingError::NotElementary { step });
        }
        if !e.preserves_grading() {
            return Err(GradingError::NotGradingPreserving { step });
        }
    }
    let maps: Vec<PolyMap> = seq.iter().map(|e| e.map().clone()).collect();
    let composite = compose_sequence(N, &maps)?;
    let z = zeta();
    if let Some(var) = composite.first_difference(&z) {
        return Ok(Wildness::NotZeta {
            var,
            expected: z.image(var).clone(),
            found: composite.image(var).clone(),
        });
    }
    let rho = rho_replace(seq, &[2, 3])?;
    Ok(Wildness::Certificate(Box::new(certify_rho(&rho)?)))
}

/// Outcome of a bounded breadth-first search for `ζ` among composites of
/// graded elementary maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TameSearch {
    pub max_len: usize,
    pub generators: usize,
    /// Distinct composites reached, the identity included.
    pub explored: usize,
    /// Indices into [`tame_generators`] of a decomposition `[φ₁, …, φₙ]`.
    pub found: Option<Vec<usize>>,
}

/// The four shear shapes with `H ∈ {±1, ±u, ±v}` for the two degree-zero
/// products `u, v` of each shape, followed by the sign changes `yᵢ ↦ −yᵢ`.
pub fn tame_generators() -> Vec<GradedEndo> {
    let ring = quadric_ring();
    // (shifted variable, multiplier, the two arguments of H)
    let shapes = [(0, 1, [(1, 2), (1, 3)]), (1, 0, [(0, 2), (0, 3)]), (2, 3, [(0, 3), (1, 3)]), (3, 2, [(0, 2), (1, 2)])];
    let mut out = Vec::new();
    for (var, mult, args) in shapes {
        let hs = [Poly::one(N), &y(args[0].0) * &y(args[0].1), &y(args[1].0) * &y(args[1].1)];
        for h in hs {
            for sign in [1, -1] {
                let f = (&y(mult) * &h).scale(&rat(sign));
                out.push(elementary(&ring, Elementary::Shear { var, f }).expect("graded shear"));
            }
        }
    }
    for i in 0..N {
        let a = (0..N).map(|r| (0..N).map(|c| rat(if r != c { 0 } else if r == i { -1 } else { 1 })).collect()).collect();
        out.push(elementary(&ring, Elementary::Linear(a)).expect("sign change"));
    }
    out
}

pub fn tame_search(max_len: usize) -> TameSearch {
    let gens = tame_generators();
    let target = zeta();
    let mut seen: HashSet<PolyMap> = HashSet::new();
    seen.insert(PolyMap::identity(N));
    let mut frontier: Vec<(PolyMap, Vec<usize>)> = vec![(PolyMap::identity(N), Vec::new())];
    let mut found = None;
    'outer: for _ in 0..max_len {
        let mut next = Vec::new();
        for (m, path) in &frontier {
            for (gi, g) in gens.iter().enumerate() {
                let c = crate::polyring::compose(g.map(), m).expect("same ring");
                if seen.insert(c.clone()) {
                    let mut p = path.clone();
                    p.push(gi);
                    if c == target {
                        found = Some(p);
                        break 'outer;
                    }
                    next.push((c, p));
                }
            }
        }
        frontier = next;
    }
    TameSearch {
        max_len,
        generators: gens.len(),
        explored: seen.len(),
        found,
    }
}

/// The chain `[φ₁, …, φ₆]` in `𝕂[y₁, …, y₅]` composing to `ζ` extended by
/// `y₅ ↦ y₅`.
pub fn zeta_chain_5() -> Vec<PolyMap> {
    let v = |i| Poly::var(5, i);
    let d = &(&v(0) * &v(3)) - &(&v(1) * &v(2));
    let step = |i: usize, add: Poly| {
        let mut images: Vec<Poly> = (0..5).map(v).collect();
        images[i] = &images[i] + &add;
        PolyMap::new(5, images).unwrap()
    };
    vec![
        step(4, d.clone()),
        step(1, &v(0) * &v(4)),
        step(3, &v(2) * &v(4)),
        step(4, -&d),
        step(1, -&(&v(0) * &v(4))),
        step(3, -&(&v(2) * &v(4))),
    ]
}

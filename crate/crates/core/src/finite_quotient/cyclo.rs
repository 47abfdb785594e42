use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use num_traits::{One, Zero};

use crate::exactgeom::Rat;
use crate::polyring::fmt_rat;

type UPoly = Vec<Rat>;

fn trim(mut p: UPoly) -> UPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn sub(a: &[Rat], b: &[Rat]) -> UPoly {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    trim(out)
}

fn mul(a: &[Rat], b: &[Rat]) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Quotient and remainder of `a` by a nonzero `b`.
fn divrem(a: &[Rat], b: &[Rat]) -> (UPoly, UPoly) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut q = vec![Rat::zero(); r.len().saturating_sub(db)];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] / &lead;
        for (i, x) in b.iter().enumerate() {
            r[k + i] -= &c * x;
        }
        q[k] = c;
        r = trim(r);
    }
    (trim(q), r)
}

thread_local! {
    static PHI: RefCell<HashMap<u32, Rc<UPoly>>> = RefCell::new(HashMap::new());
}

/// Coefficients of `Φₙ`, lowest degree first.
pub fn cyclotomic_poly(n: u32) -> Rc<UPoly> {
    assert!(n >= 1);
    if let Some(p) = PHI.with(|m| m.borrow().get(&n).cloned()) {
        return p;
    }
    let mut num = vec![Rat::zero(); n as usize + 1];
    num[0] = -Rat::one();
    num[n as usize] = Rat::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        num = divrem(&num, &cyclotomic_poly(d)).0;
    }
    let p = Rc::new(num);
    PHI.with(|m| m.borrow_mut().insert(n, p.clone()));
    p
}

/// An element of `ℚ(ζₙ)`, stored as its remainder modulo `Φₙ` in powers of
/// `ζₙ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycloNum {
    n: u32,
    coeffs: Vec<Rat>,
}

impl CycloNum {
    pub fn new(n: u32, coeffs: Vec<Rat>) -> CycloNum {
        let phi = cyclotomic_poly(n);
        CycloNum {
            n,
            coeffs: divrem(&coeffs, &phi).1,
        }
    }

    pub fn zero(n: u32) -> CycloNum {
        CycloNum { n, coeffs: Vec::new() }
    }

    pub fn from_rat(n: u32, r: Rat) -> CycloNum {
        CycloNum::new(n, vec![r])
    }

    pub fn one(n: u32) -> CycloNum {
        CycloNum::from_rat(n, Rat::one())
    }

    /// `ζₙᵏ` for the primitive root `ζₙ = e^{2πi/n}`.
    pub fn root_of_unity(n: u32, k: i64) -> CycloNum {
        let e = k.rem_euclid(n as i64) as usize;
        let mut c = vec![Rat::zero(); e + 1];
        c[e] = Rat::one();
        CycloNum::new(n, c)
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    /// Coefficients of the reduced representative, lowest power first.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn as_rational(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(Rat::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn add(&self, o: &CycloNum) -> CycloNum {
        debug_assert_eq!(self.n, o.n);
        let neg: Vec<Rat> = o.coeffs.iter().map(|x| -x).collect();
        CycloNum {
            n: self.n,
            coeffs: sub(&self.coeffs, &neg),
        }
    }

    pub fn sub(&self, o: &CycloNum) -> CycloNum {
        debug_assert_eq!(self.n, o.n);
        CycloNum {
            n: self.n,
            coeffs: sub(&self.coeffs, &o.coeffs),
        }
    }

    pub fn neg(&self) -> CycloNum {
        CycloNum {
            n: self.n,
            coeffs: self.coeffs.iter().map(|x| -x).collect(),
        }
    }

    pub fn mul(&self, o: &CycloNum) -> CycloNum {
        debug_assert_eq!(self.n, o.n);
        CycloNum::new(self.n, mul(&self.coeffs, &o.coeffs))
    }

    pub fn scale(&self, r: &Rat) -> CycloNum {
        CycloNum {
            n: self.n,
            coeffs: trim(self.coeffs.iter().map(|x| x * r).collect()),
        }
    }

    pub fn inverse(&self) -> Option<CycloNum> {
        if self.is_zero() {
            return None;
        }
        let phi = cyclotomic_poly(self.n);
        let (mut r0, mut r1) = (phi.to_vec(), self.coeffs.clone());
        let (mut s0, mut s1): (UPoly, UPoly) = (Vec::new(), vec![Rat::one()]);
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1);
            let s = sub(&s0, &mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        let c = r0[0].clone();
        Some(CycloNum::new(self.n, s0.iter().map(|x| x / &c).collect()))
    }

    pub fn pow(&self, k: u32) -> CycloNum {
        (0..k).fold(CycloNum::one(self.n), |acc, _| acc.mul(self))
    }
}

impl fmt::Display for CycloNum {
    /// Polynomial in `z = ζₙ`, highest power first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rat::zero();
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mon = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            if mon.is_empty() {
                f.write_str(&fmt_rat(&abs))?;
            } else if abs.is_one() {
                f.write_str(&mon)?;
            } else {
                write!(f, "{}*{}", fmt_rat(&abs), mon)?;
            }
        }
        Ok(())
    }
}

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactgeom::Rat;

pub type Exponent = Vec<u32>;

/// Sparse polynomial with rational coefficients in a fixed number of variables.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exponent, Rat>,
}

/// Graded lexicographic order, larger terms first.
pub fn grlex_desc(a: &Exponent, b: &Exponent) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

impl Poly {
    pub fn zero(nvars: usize) -> Poly {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Poly {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Poly {
        Self::constant(nvars, Rat::one())
    }

    pub fn var(nvars: usize, i: usize) -> Poly {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, Rat::one())
    }

    pub fn monomial(nvars: usize, exponent: Exponent, coeff: Rat) -> Poly {
        assert_eq!(exponent.len(), nvars);
        let mut p = Self::zero(nvars);
        p.add_term(exponent, coeff);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, Rat)>) -> Poly {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(e, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, exponent: Exponent, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exponent) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&exponent);
                }
            }
            None => {
                self.terms.insert(exponent, coeff);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, Rat> {
        &self.terms
    }

    /// Terms in graded lexicographic order, leading term first.
    pub fn sorted_terms(&self) -> Vec<(&Exponent, &Rat)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| grlex_desc(a.0, b.0));
        t
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn coeff(&self, exponent: &[u32]) -> Rat {
        self.terms.get(exponent).cloned().unwrap_or_else(Rat::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|e| e[i] > 0)
    }

    /// The part of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &Rat) -> Poly {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c * Rat::from_integer(BigInt::from(e[i])));
        }
        out
    }

    /// Simultaneous substitution `y_i ↦ images[i]`; all images share one ring.
    pub fn eval_polys(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let target = images.first().map_or(0, |p| p.nvars);
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::one(target), p.clone()]).collect();
        let mut out = Poly::zero(target);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= k as usize {
                    let next = cache.last().unwrap() * &images[i];
                    cache.push(next);
                }
                term = &term * &cache[k as usize];
            }
            out = &out + &term;
        }
        out
    }

    /// Total degree in the selected variables of each term, minimized over terms.
    pub fn min_degree_in(&self, vars: &[usize]) -> Option<u32> {
        self.terms.keys().map(|e| vars.iter().map(|&i| e[i]).sum()).min()
    }

    /// Same polynomial in a ring with `extra` more variables appended.
    pub fn extend_vars(&self, extra: usize) -> Poly {
        Poly {
            nvars: self.nvars + extra,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2.extend(std::iter::repeat_n(0, extra));
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    /// Canonical text in the parser grammar, using the given variable names.
    pub fn to_string_with(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.nvars);
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let a = c.abs();
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| if x == 1 { names[i].clone() } else { format!("{}^{}", names[i], x) })
                .collect();
            if factors.is_empty() {
                s.push_str(&fmt_rat(&a));
            } else if a.is_one() {
                s.push_str(&factors.join("*"));
            } else {
                s.push_str(&fmt_rat(&a));
                s.push('*');
                s.push_str(&factors.join("*"));
            }
        }
        s
    }
}

pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Default names `y1, …, yn`.
pub fn default_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&default_names("y", self.nvars)))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "adding polynomials from different rings");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "subtracting polynomials from different rings");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "multiplying polynomials from different rings");
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rat::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// `true` iff every term has degree at least `k` in the variables `vars`,
/// i.e. `p` lies in the k-th power of the ideal generated by those variables.
pub fn in_ideal_power(p: &Poly, vars: &[usize], k: u32) -> bool {
    p.min_degree_in(vars).is_none_or(|d| d >= k)
}

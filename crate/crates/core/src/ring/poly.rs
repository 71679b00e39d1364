//! Multivariate polynomials over [`Scalar`] in the variables of a realization.
//!
//! Variables are the fundamental-weight basis of the dual representation,
//! one per color; every variable carries graded degree 2.  Representation is
//! a sorted map from exponent vectors, so the zero polynomial is the empty
//! map and equality is structural.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::ring::scalar::Scalar;

/// Exponent vector, one entry per variable.
pub type Mono = Vec<u16>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Mono, Scalar>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Scalar::one())
    }

    /// The variable with the given index.
    pub fn var(nvars: usize, idx: usize) -> Self {
        assert!(idx < nvars);
        let mut e = vec![0; nvars];
        e[idx] = 1;
        let mut p = Poly::zero(nvars);
        p.terms.insert(e, Scalar::one());
        p
    }

    pub fn monomial(nvars: usize, exps: Mono, c: Scalar) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&e| e == 0))
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        if self.terms.is_empty() {
            return Some(Scalar::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u16]) -> Scalar {
        self.terms.get(exps).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Graded degree: each variable sits in degree 2.  Zero has degree 0.
    pub fn degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| 2 * e.iter().map(|&x| x as i64).sum::<i64>())
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().map(|&x| x as i64).sum::<i64>());
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    pub fn add_term(&mut self, exps: Mono, c: Scalar) {
        assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = &*o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        let mut out = Poly::zero(self.nvars);
        for (e, v) in &self.terms {
            out.terms.insert(e.clone(), v * c);
        }
        out
    }

    pub fn pow(&self, mut n: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.nvars);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitute each variable by the given linear (or arbitrary) form.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.nvars);
        let out_vars = images.first().map(|p| p.nvars).unwrap_or(self.nvars);
        let mut out = Poly::zero(out_vars);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(out_vars, c.clone());
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    term = &term * &images[i].pow(exp as u32);
                }
            }
            out += &term;
        }
        out
    }

    /// Attempt exact division, returning `None` if `divisor` does not divide.
    pub fn try_div(&self, divisor: &Poly) -> Option<Poly> {
        assert_eq!(self.nvars, divisor.nvars);
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero(self.nvars));
        }
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.inv()));
        }
        // Long division in the lex order of the exponent map (BTreeMap keys
        // are lex-ordered; the last key is the leading monomial).
        let (dlead, dcoeff) = divisor.terms.iter().next_back().unwrap();
        let dcoeff_inv = dcoeff.inv();
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars);
        while !rem.is_zero() {
            let (rlead, rcoeff) = rem.terms.iter().next_back().unwrap();
            let mut q = vec![0u16; self.nvars];
            for i in 0..self.nvars {
                if rlead[i] < dlead[i] {
                    return None;
                }
                q[i] = rlead[i] - dlead[i];
            }
            let qc = rcoeff * &dcoeff_inv;
            let qterm = Poly::monomial(self.nvars, q, qc);
            rem = &rem - &(&qterm * divisor);
            quot += &qterm;
        }
        Some(quot)
    }

    /// Leading coefficient in the lex order.
    pub fn leading_coeff(&self) -> Scalar {
        self.terms
            .iter()
            .next_back()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        assert_eq!(self.nvars, rhs.nvars);
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let c = c1 * c2;
                if c.is_zero() {
                    continue;
                }
                let e: Mono = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c);
            }
        }
        out
    }
}

/// Render with the given variable names (`w_<color>` by convention).
pub fn format_poly(p: &Poly, names: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (e, c) in p.terms.iter().rev() {
        let mono: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(|(i, &x)| {
                if x == 1 {
                    names[i].clone()
                } else {
                    format!("{}^{}", names[i], x)
                }
            })
            .collect();
        let cs = format!("{c}");
        let piece = if mono.is_empty() {
            cs
        } else if c.is_one() {
            mono.join("*")
        } else if cs == "-1" {
            format!("-{}", mono.join("*"))
        } else if cs.contains('+') || (cs.contains('-') && !cs.starts_with('-')) {
            format!("({})*{}", cs, mono.join("*"))
        } else {
            format!("{}*{}", cs, mono.join("*"))
        };
        if out.is_empty() {
            out = piece;
        } else if let Some(stripped) = piece.strip_prefix('-') {
            out = format!("{out} - {stripped}");
        } else {
            out = format!("{out} + {piece}");
        }
    }
    out
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("w{i}")).collect();
        write!(f, "{}", format_poly(self, &names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Poly {
        Poly::var(2, 0)
    }
    fn y() -> Poly {
        Poly::var(2, 1)
    }

    #[test]
    fn arithmetic_and_degree() {
        let p = &(&x() + &y()) * &(&x() - &y()); // x^2 - y^2
        let q = &(&x() * &x()) - &(&y() * &y());
        assert_eq!(p, q);
        assert_eq!(p.degree(), 4); // graded degree: variables in degree 2
        assert!(p.is_homogeneous());
        assert!((&p - &q).is_zero());
    }

    #[test]
    fn exact_division() {
        let p = &(&x() + &y()) * &(&x() + &(&y() * &y()));
        let q = p.try_div(&(&x() + &y())).unwrap();
        assert_eq!(q, &x() + &(&y() * &y()));
        assert!(p.try_div(&(&x() - &y())).is_none());
    }

    #[test]
    fn substitution_is_ring_hom() {
        let p = &(&x() * &y()) + &x();
        // x -> x + y, y -> y
        let images = vec![&x() + &y(), y()];
        let sub = p.substitute(&images);
        let expect = &(&(&x() + &y()) * &y()) + &(&x() + &y());
        assert_eq!(sub, expect);
    }

    #[test]
    fn zero_has_unique_representation() {
        let z = &(&x() - &x()) * &y();
        assert!(z.is_zero());
        assert_eq!(z, Poly::zero(2));
        assert_eq!(z.num_terms(), 0);
    }
}

//! The fraction field of the polynomial ring.
//!
//! Equality is decided by cross-multiplication, never by canonical forms.
//! Construction applies cheap opportunistic simplifications (constant
//! denominators, exact division) and [`Frac::cancel_factors`] lets callers
//! strip known linear factors such as roots; both are compactions only and
//! are never relied upon for correctness.

use std::ops::{Add, Mul, Neg, Sub};

use crate::ring::poly::Poly;
use crate::ring::scalar::Scalar;

#[derive(Clone)]
pub struct Frac {
    pub num: Poly,
    pub den: Poly,
}

impl Frac {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "fraction with zero denominator");
        let mut f = Frac { num, den };
        f.compact();
        f
    }

    pub fn from_poly(num: Poly) -> Self {
        let one = Poly::one(num.nvars());
        Frac { num, den: one }
    }

    pub fn zero(nvars: usize) -> Self {
        Frac::from_poly(Poly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Frac::from_poly(Poly::one(nvars))
    }

    pub fn from_scalar(nvars: usize, c: Scalar) -> Self {
        Frac::from_poly(Poly::constant(nvars, c))
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_poly(&self) -> Option<Poly> {
        self.den.as_constant().map(|c| self.num.scale(&c.inv()))
    }

    pub fn inv(&self) -> Frac {
        assert!(!self.num.is_zero(), "inverting zero fraction");
        Frac::new(self.den.clone(), self.num.clone())
    }

    fn compact(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one(self.num.nvars());
            return;
        }
        if let Some(c) = self.den.as_constant() {
            if !c.is_one() {
                self.num = self.num.scale(&c.inv());
                self.den = Poly::one(self.num.nvars());
            }
            return;
        }
        if let Some(q) = self.num.try_div(&self.den) {
            self.num = q;
            self.den = Poly::one(self.num.nvars());
            return;
        }
        // Normalize the denominator's leading coefficient to 1.
        let lc = self.den.leading_coeff();
        if !lc.is_one() {
            let inv = lc.inv();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    /// Cancel any of the given factors dividing both numerator and
    /// denominator.  Intended for the (finitely many) roots of a realization.
    pub fn cancel_factors(&mut self, factors: &[Poly]) {
        if self.num.is_zero() || self.den.is_constant() {
            return;
        }
        let mut changed = true;
        while changed {
            changed = false;
            for f in factors {
                if f.degree() > self.den.degree() {
                    continue;
                }
                while let (Some(dq), Some(nq)) = (self.den.try_div(f), self.num.try_div(f)) {
                    self.den = dq;
                    self.num = nq;
                    changed = true;
                    if self.den.is_constant() {
                        self.compact();
                        return;
                    }
                }
            }
        }
        self.compact();
    }

    /// Apply a ring automorphism (variable substitution) to both parts.
    pub fn substitute(&self, images: &[Poly]) -> Frac {
        Frac::new(self.num.substitute(images), self.den.substitute(images))
    }
}

impl PartialEq for Frac {
    fn eq(&self, other: &Self) -> bool {
        // ad = cb, no canonical form required.
        &self.num * &other.den == &other.num * &self.den
    }
}
impl Eq for Frac {}

impl Add for &Frac {
    type Output = Frac;
    fn add(self, rhs: &Frac) -> Frac {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Frac::new(&self.num + &rhs.num, self.den.clone());
        }
        // If one denominator divides the other, reuse the larger one.
        if let Some(q) = rhs.den.try_div(&self.den) {
            return Frac::new(&(&self.num * &q) + &rhs.num, rhs.den.clone());
        }
        if let Some(q) = self.den.try_div(&rhs.den) {
            return Frac::new(&self.num + &(&rhs.num * &q), self.den.clone());
        }
        Frac::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &Frac {
    type Output = Frac;
    fn sub(self, rhs: &Frac) -> Frac {
        self + &(-rhs)
    }
}

impl Mul for &Frac {
    type Output = Frac;
    fn mul(self, rhs: &Frac) -> Frac {
        if self.is_zero() || rhs.is_zero() {
            return Frac::zero(self.nvars());
        }
        // Try the diagonal cancellations before multiplying out.
        let (mut n1, mut d2) = (self.num.clone(), rhs.den.clone());
        if let Some(q) = n1.try_div(&d2) {
            n1 = q;
            d2 = Poly::one(n1.nvars());
        }
        let (mut n2, mut d1) = (rhs.num.clone(), self.den.clone());
        if let Some(q) = n2.try_div(&d1) {
            n2 = q;
            d1 = Poly::one(n2.nvars());
        }
        Frac::new(&n1 * &n2, &d1 * &d2)
    }
}

impl Neg for &Frac {
    type Output = Frac;
    fn neg(self) -> Frac {
        Frac { num: -&self.num, den: self.den.clone() }
    }
}

impl std::fmt::Debug for Frac {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_constant() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?})/({:?})", self.num, self.den)
        }
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
    fn cross_multiplication_equality() {
        // (x^2-y^2)/(x-y) == (x+y)/1
        let a = Frac { num: &(&x() * &x()) - &(&y() * &y()), den: &x() - &y() };
        let b = Frac::from_poly(&x() + &y());
        assert_eq!(a, b);
        assert_ne!(a, Frac::from_poly(x()));
    }

    #[test]
    fn arithmetic() {
        let a = Frac::new(Poly::one(2), x());
        let b = Frac::new(Poly::one(2), y());
        let s = &a + &b;
        assert_eq!(s, Frac::new(&x() + &y(), &x() * &y()));
        let p = &a * &b;
        assert_eq!(p, Frac::new(Poly::one(2), &x() * &y()));
        assert!((&s - &s).is_zero());
        assert_eq!(&a * &a.inv(), Frac::one(2));
    }

    #[test]
    fn cancel_known_factors() {
        let mut f = Frac {
            num: &(&x() + &y()) * &x(),
            den: &(&x() + &y()) * &y(),
        };
        f.cancel_factors(&[&x() + &y()]);
        assert_eq!(f.num, x());
        assert_eq!(f.den, y());
    }
}

//! Exact scalars: rationals and real quadratic extensions `a + b*sqrt(d)`.
//!
//! A [`Scalar`] lives in either `Q` or `Q(sqrt(d))` for a squarefree `d >= 2`.
//! Values with a vanishing irrational part collapse to the rational variant on
//! construction, so equality and hashing are structural.  The embedding into
//! the reals with `sqrt(d) > 0` is fixed, making [`Scalar::sign`] total.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// The coefficient field of a realization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    /// The rational numbers.
    Q,
    /// The real quadratic extension `Q(sqrt(d))`, `d` squarefree and `>= 2`.
    Qsqrt(i64),
}

impl FieldSpec {
    pub fn contains(&self, s: &Scalar) -> bool {
        match (s, self) {
            (Scalar::Rat(_), _) => true,
            (Scalar::Quad { d, .. }, FieldSpec::Qsqrt(fd)) => d == fd,
            (Scalar::Quad { .. }, FieldSpec::Q) => false,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Q => write!(f, "Q"),
            FieldSpec::Qsqrt(d) => write!(f, "Q(sqrt({d}))"),
        }
    }
}

/// An element of `Q` or of a fixed real quadratic extension.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Quad { a: BigRational, b: BigRational, d: i64 },
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn rational(r: BigRational) -> Self {
        Scalar::Rat(r)
    }

    /// `a + b*sqrt(d)`, collapsing to the rational variant when `b = 0`.
    pub fn quadratic(a: BigRational, b: BigRational, d: i64) -> Self {
        assert!(d >= 2, "quadratic field requires d >= 2");
        if b.is_zero() {
            Scalar::Rat(a)
        } else {
            Scalar::Quad { a, b, d }
        }
    }

    /// `sqrt(d)` itself.
    pub fn sqrt_of(d: i64) -> Self {
        Scalar::quadratic(BigRational::zero(), BigRational::one(), d)
    }

    /// The golden ratio `(1 + sqrt(5)) / 2`.
    pub fn phi() -> Self {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        Scalar::quadratic(half.clone(), half, 5)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            // b != 0 is an invariant, and sqrt(d) is irrational.
            Scalar::Quad { .. } => false,
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rat(_))
    }

    /// The discriminant of the quadratic part, if any.
    pub fn quad_d(&self) -> Option<i64> {
        match self {
            Scalar::Rat(_) => None,
            Scalar::Quad { d, .. } => Some(*d),
        }
    }

    fn parts(&self, d: i64) -> (BigRational, BigRational) {
        match self {
            Scalar::Rat(a) => (a.clone(), BigRational::zero()),
            Scalar::Quad { a, b, d: sd } => {
                assert_eq!(*sd, d, "mixed quadratic discriminants {sd} and {d}");
                (a.clone(), b.clone())
            }
        }
    }

    fn common_d(&self, other: &Scalar) -> Option<i64> {
        match (self.quad_d(), other.quad_d()) {
            (None, None) => None,
            (Some(d), None) | (None, Some(d)) => Some(d),
            (Some(d1), Some(d2)) => {
                assert_eq!(d1, d2, "mixed quadratic discriminants {d1} and {d2}");
                Some(d1)
            }
        }
    }

    /// Exact sign in the embedding with `sqrt(d) > 0`: `-1`, `0` or `1`.
    pub fn sign(&self) -> i32 {
        match self {
            Scalar::Rat(r) => {
                if r.is_zero() {
                    0
                } else if r.is_positive() {
                    1
                } else {
                    -1
                }
            }
            Scalar::Quad { a, b, d } => {
                let sa = if a.is_zero() {
                    0
                } else if a.is_positive() {
                    1
                } else {
                    -1
                };
                let sb = if b.is_positive() { 1 } else { -1 };
                if sa == 0 || sa == sb {
                    return sb;
                }
                // Mixed signs: compare a^2 against b^2 d.
                let lhs = a * a;
                let rhs = b * b * BigRational::from_integer(BigInt::from(*d));
                match lhs.cmp(&rhs) {
                    std::cmp::Ordering::Greater => sa,
                    std::cmp::Ordering::Less => sb,
                    std::cmp::Ordering::Equal => unreachable!("sqrt(d) rational"),
                }
            }
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => {
                assert!(!r.is_zero(), "division by zero scalar");
                Scalar::Rat(r.recip())
            }
            Scalar::Quad { a, b, d } => {
                // 1/(a + b sqrt d) = (a - b sqrt d)/(a^2 - b^2 d)
                let norm = a * a - b * b * BigRational::from_integer(BigInt::from(*d));
                assert!(!norm.is_zero(), "quadratic scalar with zero norm");
                Scalar::quadratic(a / &norm, -b / &norm, *d)
            }
        }
    }

    /// Galois conjugate `a - b*sqrt(d)` (identity on rationals).
    pub fn conjugate(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(r.clone()),
            Scalar::Quad { a, b, d } => Scalar::quadratic(a.clone(), -b.clone(), *d),
        }
    }

    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rat(r) if r.is_integer() => {
                use num::ToPrimitive;
                r.to_integer().to_i64()
            }
            _ => None,
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match self.common_d(rhs) {
            None => match (self, rhs) {
                (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
                _ => unreachable!(),
            },
            Some(d) => {
                let (a1, b1) = self.parts(d);
                let (a2, b2) = rhs.parts(d);
                Scalar::quadratic(a1 + a2, b1 + b2, d)
            }
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match self.common_d(rhs) {
            None => match (self, rhs) {
                (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
                _ => unreachable!(),
            },
            Some(d) => {
                let (a1, b1) = self.parts(d);
                let (a2, b2) = rhs.parts(d);
                let dd = BigRational::from_integer(BigInt::from(d));
                Scalar::quadratic(&a1 * &a2 + &b1 * &b2 * dd, &a1 * &b2 + &b1 * &a2, d)
            }
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Quad { a, b, d } => Scalar::Quad { a: -a, b: -b, d: *d },
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => fmt_rational(r, f),
            Scalar::Quad { a, b, d } => {
                if !a.is_zero() {
                    fmt_rational(a, f)?;
                    write!(f, "{}", if b.is_positive() { "+" } else { "-" })?;
                } else if b.is_negative() {
                    write!(f, "-")?;
                }
                let babs = b.abs();
                if !babs.is_one() {
                    fmt_rational(&babs, f)?;
                    write!(f, "*")?;
                }
                write!(f, "sqrt({d})")
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parse a scalar expression such as `-1`, `3/2`, `-phi`, `1+2*sqrt(5)`,
/// `-sqrt(2)`.  Used for Cartan entries in realization config files.
pub fn parse_scalar(input: &str) -> Result<Scalar, String> {
    let mut p = Parser { s: input.as_bytes(), i: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.i != p.s.len() {
        return Err(format!("trailing input in scalar `{input}`"));
    }
    Ok(v)
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.i < self.s.len() && (self.s[self.i] as char).is_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.i).copied()
    }

    fn expr(&mut self) -> Result<Scalar, String> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.i += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.i += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, String> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.i += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.i += 1;
                    let rhs = self.factor()?;
                    if rhs.is_zero() {
                        return Err("division by zero".into());
                    }
                    acc = &acc / &rhs;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Scalar, String> {
        match self.peek() {
            Some(b'-') => {
                self.i += 1;
                Ok(-self.factor()?)
            }
            Some(b'+') => {
                self.i += 1;
                self.factor()
            }
            Some(b'(') => {
                self.i += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err("expected `)`".into());
                }
                self.i += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.i;
                while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
                    self.i += 1;
                }
                let n: i64 = std::str::from_utf8(&self.s[start..self.i])
                    .unwrap()
                    .parse()
                    .map_err(|e| format!("bad integer: {e}"))?;
                Ok(Scalar::from_int(n))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.i;
                while self.i < self.s.len() && self.s[self.i].is_ascii_alphabetic() {
                    self.i += 1;
                }
                let word = std::str::from_utf8(&self.s[start..self.i]).unwrap();
                match word {
                    "phi" => Ok(Scalar::phi()),
                    "sqrt" => {
                        if self.peek() != Some(b'(') {
                            return Err("expected `(` after sqrt".into());
                        }
                        self.i += 1;
                        let arg = self.expr()?;
                        if self.peek() != Some(b')') {
                            return Err("expected `)`".into());
                        }
                        self.i += 1;
                        let d = arg
                            .as_i64()
                            .ok_or_else(|| "sqrt argument must be an integer".to_string())?;
                        if d < 2 {
                            return Err(format!("sqrt({d}) not supported"));
                        }
                        Ok(Scalar::sqrt_of(d))
                    }
                    other => Err(format!("unknown symbol `{other}`")),
                }
            }
            _ => Err("unexpected end of scalar expression".into()),
        }
    }
}

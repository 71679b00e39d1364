//! The Hecke algebra over `Z[v, v^-1]`: standard and Kazhdan-Lusztig bases,
//! bar involution, the standard trace and pairing, and Deodhar's defect
//! expansion.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coxeter::{CoxeterError, CoxeterSystem, Decoration, Element, Expression};
use crate::ring::Color;

/// A Laurent polynomial in `v` with integer coefficients, stored sparsely.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: std::collections::BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    /// `c * v^k`.
    pub fn monomial(exp: i64, c: i64) -> Self {
        let mut p = LaurentPoly::zero();
        if c != 0 {
            p.coeffs.insert(exp, c);
        }
        p
    }

    pub fn v(exp: i64) -> Self {
        LaurentPoly::monomial(exp, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn add_term(&mut self, exp: i64, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&exp);
        }
    }

    /// Substitute `v -> v^-1`.
    pub fn bar(&self) -> Self {
        let mut out = LaurentPoly::zero();
        for (&e, &c) in &self.coeffs {
            out.coeffs.insert(-e, c);
        }
        out
    }

    /// All coefficients in strictly positive powers of `v`.
    pub fn in_v_z_v(&self) -> bool {
        self.coeffs.keys().all(|&e| e > 0)
    }

    pub fn has_negative_coeff(&self) -> bool {
        self.coeffs.values().any(|&c| c < 0)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, &c) in &rhs.coeffs {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, &c) in &rhs.coeffs {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, &c1) in &self.coeffs {
            for (&e2, &c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e, &c) in &self.coeffs {
            out.coeffs.insert(e, -c);
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, &c) in &self.coeffs {
            let mag = c.abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            }
            match (e, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "v")?,
                (1, m) => write!(f, "{m}v")?,
                (e, 1) => write!(f, "v^{e}")?,
                (e, m) => write!(f, "{m}v^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An element of the Hecke algebra in standard-basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HeckeElt {
    coeffs: HashMap<Element, LaurentPoly>,
}

impl HeckeElt {
    pub fn zero() -> Self {
        HeckeElt::default()
    }

    pub fn unit(sys: &CoxeterSystem) -> Self {
        HeckeElt::std_basis(sys.identity())
    }

    /// The standard basis element `H_w`.
    pub fn std_basis(w: Element) -> Self {
        let mut h = HeckeElt::zero();
        h.coeffs.insert(w, LaurentPoly::one());
        h
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, w: Element) -> LaurentPoly {
        self.coeffs.get(&w).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = (Element, &LaurentPoly)> {
        self.coeffs.iter().map(|(&w, p)| (w, p))
    }

    pub fn add_term(&mut self, w: Element, p: &LaurentPoly) {
        if p.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(w).or_default();
        *entry = &*entry + p;
        if entry.is_zero() {
            self.coeffs.remove(&w);
        }
    }

    pub fn scale(&self, p: &LaurentPoly) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (&w, c) in &self.coeffs {
            out.add_term(w, &(c * p));
        }
        out
    }
}

impl Add for &HeckeElt {
    type Output = HeckeElt;
    fn add(self, rhs: &HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        for (&w, p) in &rhs.coeffs {
            out.add_term(w, p);
        }
        out
    }
}

impl Sub for &HeckeElt {
    type Output = HeckeElt;
    fn sub(self, rhs: &HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        for (&w, p) in &rhs.coeffs {
            out.add_term(w, &-p);
        }
        out
    }
}

/// Hecke algebra operations tied to a Coxeter ball.
pub struct HeckeAlgebra<'a> {
    sys: &'a CoxeterSystem,
}

impl<'a> HeckeAlgebra<'a> {
    pub fn new(sys: &'a CoxeterSystem) -> Self {
        HeckeAlgebra { sys }
    }

    pub fn system(&self) -> &CoxeterSystem {
        self.sys
    }

    /// Right multiplication by the standard generator `H_s`, via
    /// `H_x H_s = H_xs` if `xs > x`, else `H_xs + (v^-1 - v) H_x`.
    pub fn mul_gen_std(&self, h: &HeckeElt, s: Color) -> Result<HeckeElt, CoxeterError> {
        let mut out = HeckeElt::zero();
        for (x, c) in h.support() {
            let xs = self.sys.mul_color(x, s)?;
            if self.sys.length(xs) > self.sys.length(x) {
                out.add_term(xs, c);
            } else {
                out.add_term(xs, c);
                out.add_term(x, &(c * &(&LaurentPoly::v(-1) - &LaurentPoly::v(1))));
            }
        }
        Ok(out)
    }

    /// Right multiplication by the Kazhdan-Lusztig generator `b_s = H_s + v`:
    /// `H_x b_s = H_xs + v H_x` if `xs > x`, else `H_xs + v^-1 H_x`.
    pub fn mul_kl_gen(&self, h: &HeckeElt, s: Color) -> Result<HeckeElt, CoxeterError> {
        let mut out = HeckeElt::zero();
        for (x, c) in h.support() {
            let xs = self.sys.mul_color(x, s)?;
            let up = self.sys.length(xs) > self.sys.length(x);
            out.add_term(xs, c);
            out.add_term(x, &(c * &LaurentPoly::v(if up { 1 } else { -1 })));
        }
        Ok(out)
    }

    /// The product `b_{s_1} ... b_{s_k}` over a word.
    pub fn product_of_kl_gens(&self, word: &[Color]) -> Result<HeckeElt, CoxeterError> {
        let mut h = HeckeElt::unit(self.sys);
        for &s in word {
            h = self.mul_kl_gen(&h, s)?;
        }
        Ok(h)
    }

    /// General product, multiplying through the canonical word of `b`'s
    /// standard basis elements.
    pub fn mul(&self, a: &HeckeElt, b: &HeckeElt) -> Result<HeckeElt, CoxeterError> {
        let mut out = HeckeElt::zero();
        for (w, c) in b.support() {
            let mut acc = a.scale(c);
            for &s in self.sys.word(w) {
                acc = self.mul_gen_std(&acc, s)?;
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    /// `bar(H_w) = (H_{w^-1})^{-1}`, extended v-semilinearly.
    pub fn bar(&self, h: &HeckeElt) -> Result<HeckeElt, CoxeterError> {
        let mut out = HeckeElt::zero();
        let mut memo: HashMap<Element, HeckeElt> = HashMap::new();
        for (w, c) in h.support() {
            let img = self.bar_std(w, &mut memo)?.scale(&c.bar());
            out = &out + &img;
        }
        Ok(out)
    }

    fn bar_std(
        &self,
        w: Element,
        memo: &mut HashMap<Element, HeckeElt>,
    ) -> Result<HeckeElt, CoxeterError> {
        if let Some(h) = memo.get(&w) {
            return Ok(h.clone());
        }
        let result = if w == self.sys.identity() {
            HeckeElt::unit(self.sys)
        } else {
            let s = *self.sys.right_descents(w).first().unwrap();
            let ws = self.sys.mul_color(w, s)?;
            let prev = self.bar_std(ws, memo)?;
            // bar(H_s) = H_s^-1 = H_s + (v - v^-1)
            let mut out = self.mul_gen_std(&prev, s)?;
            out = &out + &prev.scale(&(&LaurentPoly::v(1) - &LaurentPoly::v(-1)));
            out
        };
        memo.insert(w, result.clone());
        Ok(result)
    }

    /// The Kazhdan-Lusztig basis element `b_w`, by the standard recursion.
    /// Panics with a diagnostic dump if a computed KL polynomial has a
    /// negative coefficient, which at the supported crystallographic ranks
    /// would indicate a bug.
    pub fn kl_element(&self, w: Element) -> Result<HeckeElt, CoxeterError> {
        let mut memo: HashMap<Element, HeckeElt> = HashMap::new();
        self.kl_memo(w, &mut memo)
    }

    fn kl_memo(
        &self,
        w: Element,
        memo: &mut HashMap<Element, HeckeElt>,
    ) -> Result<HeckeElt, CoxeterError> {
        if let Some(h) = memo.get(&w) {
            return Ok(h.clone());
        }
        let result = if w == self.sys.identity() {
            HeckeElt::unit(self.sys)
        } else {
            let s = *self.sys.right_descents(w).first().unwrap();
            let ws = self.sys.mul_color(w, s)?;
            let mut h = self.mul_kl_gen(&self.kl_memo(ws, memo)?, s)?;
            // Subtract mu-corrections until all lower coefficients lie in vZ[v].
            let mut lower: Vec<Element> = h
                .support()
                .map(|(x, _)| x)
                .filter(|&x| x != w)
                .collect();
            lower.sort_by_key(|&x| std::cmp::Reverse(self.sys.length(x)));
            for x in lower {
                let mu = h.coeff(x).coeff(0);
                if mu != 0 {
                    let bx = self.kl_memo(x, memo)?;
                    h = &h - &bx.scale(&LaurentPoly::monomial(0, mu));
                }
            }
            h
        };
        self.check_kl_normal_form(w, &result);
        memo.insert(w, result.clone());
        Ok(result)
    }

    fn check_kl_normal_form(&self, w: Element, h: &HeckeElt) {
        let mut ok = h.coeff(w) == LaurentPoly::one();
        for (x, c) in h.support() {
            if x != w {
                ok &= c.in_v_z_v() && self.sys.bruhat_leq(x, w);
            }
            if c.has_negative_coeff() {
                ok = false;
            }
        }
        if !ok {
            let mut dump = String::new();
            for (x, c) in h.support() {
                dump.push_str(&format!("  h[{:?}] = {c}\n", self.sys.word(x)));
            }
            panic!(
                "KL element for {:?} violates normal form or positivity:\n{dump}",
                self.sys.word(w)
            );
        }
    }

    /// The standard trace: the coefficient of `H_e`.
    pub fn epsilon(&self, h: &HeckeElt) -> LaurentPoly {
        h.coeff(self.sys.identity())
    }

    /// The antiinvolution fixing each `b_s` with `omega(v) = v^-1`:
    /// `omega(c H_w) = bar(c) (H_{w^-1})^-1`.
    pub fn omega(&self, h: &HeckeElt) -> Result<HeckeElt, CoxeterError> {
        let mut out = HeckeElt::zero();
        let mut memo: HashMap<Element, HeckeElt> = HashMap::new();
        for (w, c) in h.support() {
            let winv = self.sys.inv(w)?;
            let img = self.bar_std(winv, &mut memo)?.scale(&c.bar());
            out = &out + &img;
        }
        Ok(out)
    }

    /// The standard pairing `(a, b) = epsilon(b * omega(a))`.
    pub fn pairing(&self, a: &HeckeElt, b: &HeckeElt) -> Result<LaurentPoly, CoxeterError> {
        let oa = self.omega(a)?;
        Ok(self.epsilon(&self.mul(b, &oa)?))
    }

    /// Deodhar's expansion `sum_e v^{d(e)} H_{endpoint(e)}` over all
    /// 01-sequences of the word.
    pub fn deodhar_expand(&self, word: &Expression) -> Result<HeckeElt, CoxeterError> {
        let mut out = HeckeElt::zero();
        for e in self.sys.all_subexpressions(word)? {
            out.add_term(e.endpoint(), &LaurentPoly::v(e.defect));
        }
        Ok(out)
    }

    /// Per-endpoint defect statistics of a word (the graded rank of the
    /// light-leaves space to each endpoint).
    pub fn defect_generating_function(
        &self,
        word: &Expression,
    ) -> Result<HashMap<Element, LaurentPoly>, CoxeterError> {
        let mut out: HashMap<Element, LaurentPoly> = HashMap::new();
        for e in self.sys.all_subexpressions(word)? {
            out.entry(e.endpoint())
                .or_default()
                .add_term(e.defect, 1);
        }
        out.retain(|_, p| !p.is_zero());
        Ok(out)
    }

    /// Expand `b_s b_t b_s ...` (`k + 1` factors) in the KL basis of the
    /// dihedral parabolic, returning the coefficients `c_{k,d}` keyed by the
    /// length `d + 1` prefix of the alternating word.
    pub fn rank2_product_expansion(
        &self,
        s: Color,
        t: Color,
        k: u32,
    ) -> Result<Vec<(Expression, LaurentPoly)>, CoxeterError> {
        let word: Expression = (0..=k as usize)
            .map(|i| if i % 2 == 0 { s } else { t })
            .collect();
        let mut rest = self.product_of_kl_gens(&word)?;
        let mut out = Vec::new();
        // Repeatedly strip the KL element of the longest surviving prefix.
        for len in (0..=word.len()).rev() {
            let prefix: Expression = word[..len].to_vec();
            let w = self.sys.from_word(&prefix)?;
            if self.sys.length(w) != len {
                continue; // not reduced (cannot happen for alternating words)
            }
            let c = rest.coeff(w);
            if c.is_zero() {
                continue;
            }
            let bw = self.kl_element(w)?;
            rest = &rest - &bw.scale(&c);
            out.push((prefix, c));
        }
        assert!(rest.is_zero(), "rank-2 expansion left a remainder");
        out.reverse();
        Ok(out)
    }

    /// The graded rank of `Hom(B_x, B_y)`: the pairing of the products of
    /// KL generators over the two words.
    pub fn graded_hom_rank(
        &self,
        x: &Expression,
        y: &Expression,
    ) -> Result<LaurentPoly, CoxeterError> {
        let bx = self.product_of_kl_gens(x)?;
        let by = self.product_of_kl_gens(y)?;
        self.pairing(&bx, &by)
    }

    /// Defect-based formula for the graded Hom rank:
    /// `sum_w (sum_{e in M(x,w)} v^{d(e)}) (sum_{f in M(y,w)} v^{d(f)})`.
    /// Used as an independent cross-check of [`Self::graded_hom_rank`].
    pub fn graded_hom_rank_by_defects(
        &self,
        x: &Expression,
        y: &Expression,
    ) -> Result<LaurentPoly, CoxeterError> {
        let gx = self.defect_generating_function(x)?;
        let gy = self.defect_generating_function(y)?;
        let mut out = LaurentPoly::zero();
        for (w, px) in &gx {
            if let Some(py) = gy.get(w) {
                out = &out + &(px * py);
            }
        }
        Ok(out)
    }

    /// Render a Hecke element with canonical words, longest first.
    pub fn format(&self, h: &HeckeElt) -> String {
        if h.is_zero() {
            return "0".to_string();
        }
        let mut items: Vec<(Element, &LaurentPoly)> = h.support().collect();
        items.sort_by_key(|(w, _)| {
            (std::cmp::Reverse(self.sys.length(*w)), self.sys.word(*w).clone())
        });
        items
            .iter()
            .map(|(w, c)| {
                let name = if *w == self.sys.identity() {
                    "H(e)".to_string()
                } else {
                    format!(
                        "H({})",
                        self.sys
                            .word(*w)
                            .iter()
                            .map(|&s| self.sys.realization().color_name(s))
                            .collect::<Vec<_>>()
                            .join(" ")
                    )
                };
                format!("({c})*{name}")
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Decoration-based defect recomputation, used in tests as an oracle.
pub fn defect_from_decorations(decorations: &[Decoration]) -> i64 {
    decorations
        .iter()
        .map(|d| match d {
            Decoration::U0 => 1,
            Decoration::D0 => -1,
            _ => 0,
        })
        .sum()
}

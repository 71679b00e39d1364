//! Realizations of Coxeter systems and the graded polynomial ring they act on.
//!
//! A realization is the data of a Coxeter matrix together with a Cartan
//! matrix over an exact field.  We work with minimal realizations: the
//! coroots form a basis of the reflection representation, and the polynomial
//! ring is generated by the dual basis (one fundamental weight per color,
//! each of graded degree 2), so that `alpha_t = sum_s a_st * w_s`.

pub mod frac;
pub mod poly;
pub mod scalar;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use frac::Frac;
pub use poly::{format_poly, Mono, Poly};
pub use scalar::{parse_scalar, FieldSpec, Scalar};

/// A simple reflection, indexed by its position in the color list.
pub type Color = usize;

/// Coxeter matrix entry: finite order, or `None` for infinity.
pub type CoxEntry = Option<u32>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingError {
    #[error("technical condition failed: [m]_x or [m]_y nonzero for pair ({0}, {1})")]
    TechnicalConditionFailed(String, String),
    #[error("braid relation failed for pair ({0}, {1})")]
    BraidRelationFailed(String, String),
    #[error("realization is not balanced at pair ({0}, {1})")]
    UnbalancedRealization(String, String),
    #[error("unsupported Coxeter entry {0} (must be one of 2,3,4,5,6 or infinity)")]
    UnsupportedCoxeterEntry(u32),
    #[error("geometric realization needs more than one quadratic extension")]
    UnsupportedFieldExtension,
    #[error("demazure division was not exact (ring bug)")]
    InternalDivisionFailure,
    #[error("invalid realization input: {0}")]
    InvalidInput(String),
}

/// The flavor of a two-colored quantum number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QFlavor {
    X,
    Y,
}

/// Two-colored quantum number `[k]` at the point `(x, y)`, by the recursion
/// `[2]_x [k]_y = [k+1]_x + [k-1]_x` with `[0] = 0`, `[1] = 1`, `[2]_x = x`.
pub fn quantum_number(k: u32, flavor: QFlavor, x: &Scalar, y: &Scalar) -> Scalar {
    // qx[k] = [k]_x, qy[k] = [k]_y, built up together.
    let mut qx = (Scalar::zero(), Scalar::one()); // ([k-1]_x, [k]_x) at k = 1
    let mut qy = (Scalar::zero(), Scalar::one());
    if k == 0 {
        return Scalar::zero();
    }
    for _ in 1..k {
        let next_x = &(x * &qy.1) - &qx.0;
        let next_y = &(y * &qx.1) - &qy.0;
        qx = (qx.1.clone(), next_x);
        qy = (qy.1.clone(), next_y);
    }
    match flavor {
        QFlavor::X => qx.1,
        QFlavor::Y => qy.1,
    }
}

/// Validated realization data.
#[derive(Clone)]
pub struct Realization {
    names: Vec<String>,
    coxeter: Vec<Vec<CoxEntry>>,
    cartan: Vec<Vec<Scalar>>,
    field: FieldSpec,
    /// Per-color substitution giving the contragredient action on the
    /// fundamental-weight basis of the dual representation.
    refl: Vec<Vec<Poly>>,
    balanced: bool,
}

impl fmt::Debug for Realization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Realization({} colors, field {})", self.rank(), self.field)
    }
}

impl Realization {
    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn color_name(&self, s: Color) -> &str {
        &self.names[s]
    }

    pub fn color_by_name(&self, name: &str) -> Option<Color> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_balanced(&self) -> bool {
        self.balanced
    }

    pub fn coxeter_entry(&self, s: Color, t: Color) -> CoxEntry {
        if s == t {
            Some(1)
        } else {
            self.coxeter[s][t]
        }
    }

    /// `m_st` for distinct colors, panicking on infinity.
    pub fn m(&self, s: Color, t: Color) -> u32 {
        self.coxeter[s][t].expect("m_st is infinite")
    }

    pub fn cartan_entry(&self, s: Color, t: Color) -> &Scalar {
        &self.cartan[s][t]
    }

    /// The simple root `alpha_t` expressed in the weight basis.
    pub fn alpha(&self, t: Color) -> Poly {
        let n = self.rank();
        let mut p = Poly::zero(n);
        for s in 0..n {
            p.add_term(
                {
                    let mut e = vec![0u16; n];
                    e[s] = 1;
                    e
                },
                self.cartan[s][t].clone(),
            );
        }
        p
    }

    /// The fundamental weight `w_s` (the canonical Demazure dual `delta`).
    pub fn weight(&self, s: Color) -> Poly {
        Poly::var(self.rank(), s)
    }

    /// Action of the simple reflection `s` on a polynomial.
    pub fn act_color(&self, s: Color, f: &Poly) -> Poly {
        f.substitute(&self.refl[s])
    }

    /// Action of a word (applied left to right: the group element is the
    /// product of the letters, acting via `w = s_1 ... s_k`).
    pub fn act_word(&self, word: &[Color], f: &Poly) -> Poly {
        // (s_1 ... s_k)(f) = s_1(s_2(...s_k(f)))
        let mut out = f.clone();
        for &s in word.iter().rev() {
            out = self.act_color(s, &out);
        }
        out
    }

    /// The substitution images of a single reflection.
    pub fn refl_subst(&self, s: Color) -> &[Poly] {
        &self.refl[s]
    }

    /// Demazure operator `f -> (f - s(f)) / alpha_s`.
    pub fn demazure(&self, s: Color, f: &Poly) -> Result<Poly, RingError> {
        let diff = f - &self.act_color(s, f);
        diff.try_div(&self.alpha(s))
            .ok_or(RingError::InternalDivisionFailure)
    }

    /// Pairing `<alpha_s^vee, f>` for linear `f`, i.e. the coefficient of
    /// `w_s`; equals `demazure` on degree-2 polynomials.
    pub fn coroot_pairing(&self, s: Color, f: &Poly) -> Scalar {
        let n = self.rank();
        let mut e = vec![0u16; n];
        e[s] = 1;
        f.coeff(&e)
    }

    fn validate(&self) -> Result<(), RingError> {
        let n = self.rank();
        for s in 0..n {
            if self.cartan[s][s] != Scalar::from_int(2) {
                return Err(RingError::InvalidInput(format!(
                    "cartan diagonal entry for {} is not 2",
                    self.names[s]
                )));
            }
            for t in 0..n {
                if !self.field.contains(&self.cartan[s][t]) {
                    return Err(RingError::InvalidInput(format!(
                        "cartan entry ({}, {}) not in field {}",
                        self.names[s], self.names[t], self.field
                    )));
                }
            }
            // s^2 = id on the dual representation.
            let twice: Vec<Poly> = self.refl[s]
                .iter()
                .map(|img| img.substitute(&self.refl[s]))
                .collect();
            if !is_identity_subst(&twice) {
                return Err(RingError::BraidRelationFailed(
                    self.names[s].clone(),
                    self.names[s].clone(),
                ));
            }
        }
        for s in 0..n {
            for t in (s + 1)..n {
                let names = (self.names[s].clone(), self.names[t].clone());
                let m = match self.coxeter[s][t] {
                    None => continue, // m = infinity: no condition
                    Some(m) => m,
                };
                if !(2..=6).contains(&m) {
                    return Err(RingError::UnsupportedCoxeterEntry(m));
                }
                let x = &self.cartan[s][t];
                let y = &self.cartan[t][s];
                if !quantum_number(m, QFlavor::X, x, y).is_zero()
                    || !quantum_number(m, QFlavor::Y, x, y).is_zero()
                {
                    return Err(RingError::TechnicalConditionFailed(names.0, names.1));
                }
                // (st)^m = id on the dual representation.
                let mut subst: Vec<Poly> = (0..n).map(|i| Poly::var(n, i)).collect();
                for _ in 0..m {
                    subst = compose_subst(&subst, &self.refl[s]);
                    subst = compose_subst(&subst, &self.refl[t]);
                }
                if !is_identity_subst(&subst) {
                    return Err(RingError::BraidRelationFailed(names.0, names.1));
                }
                // Balance is checked at the point (-a_st, -a_ts): for the
                // geometric realization this is (2cos(pi/m), 2cos(pi/m)),
                // where [m-1] = 1.  Odd-index quantum numbers only see the
                // product xy, so the technical condition above is unaffected
                // by the sign, but [m-1] for odd m is not.
                let (nx, ny) = (-x, -y);
                if !quantum_number(m - 1, QFlavor::X, &nx, &ny).is_one()
                    || !quantum_number(m - 1, QFlavor::Y, &nx, &ny).is_one()
                {
                    return Err(RingError::UnbalancedRealization(names.0, names.1));
                }
            }
        }
        Ok(())
    }
}

/// `outer . inner` as substitutions: first apply `inner`, then `outer`.
fn compose_subst(outer: &[Poly], inner: &[Poly]) -> Vec<Poly> {
    outer.iter().map(|p| p.substitute(inner)).collect()
}

fn is_identity_subst(subst: &[Poly]) -> bool {
    subst
        .iter()
        .enumerate()
        .all(|(i, p)| *p == Poly::var(subst.len(), i))
}

/// Build and validate a realization from explicit matrices.
pub fn build_realization(
    names: Vec<String>,
    coxeter: Vec<Vec<CoxEntry>>,
    cartan: Vec<Vec<Scalar>>,
    field: FieldSpec,
) -> Result<Realization, RingError> {
    let n = names.len();
    if coxeter.len() != n
        || cartan.len() != n
        || coxeter.iter().any(|r| r.len() != n)
        || cartan.iter().any(|r| r.len() != n)
    {
        return Err(RingError::InvalidInput("matrix rank mismatch".into()));
    }
    for s in 0..n {
        for t in 0..n {
            if coxeter[s][t] != coxeter[t][s] {
                return Err(RingError::InvalidInput("coxeter matrix not symmetric".into()));
            }
            if s == t && coxeter[s][t] != Some(1) {
                return Err(RingError::InvalidInput("coxeter diagonal must be 1".into()));
            }
        }
    }
    // Reflection substitutions: s sends w_s -> w_s - alpha_s, fixes other w_u.
    let mut refl = Vec::with_capacity(n);
    for s in 0..n {
        let mut images: Vec<Poly> = (0..n).map(|i| Poly::var(n, i)).collect();
        let mut alpha_s = Poly::zero(n);
        for u in 0..n {
            let mut e = vec![0u16; n];
            e[u] = 1;
            alpha_s.add_term(e, cartan[u][s].clone());
        }
        images[s] = &images[s] - &alpha_s;
        refl.push(images);
    }
    let r = Realization { names, coxeter, cartan, field, refl, balanced: true };
    r.validate()?;
    Ok(r)
}

/// Cartan entry `-2 cos(pi/m)` of the geometric realization.
fn geometric_entry(m: CoxEntry) -> Result<(Scalar, Option<i64>), RingError> {
    match m {
        None => Ok((Scalar::from_int(-2), None)),
        Some(2) => Ok((Scalar::zero(), None)),
        Some(3) => Ok((Scalar::from_int(-1), None)),
        Some(4) => Ok((-Scalar::sqrt_of(2), Some(2))),
        Some(5) => Ok((-Scalar::phi(), Some(5))),
        Some(6) => Ok((-Scalar::sqrt_of(3), Some(3))),
        Some(m) => Err(RingError::UnsupportedCoxeterEntry(m)),
    }
}

/// The geometric realization of a Coxeter matrix, over the smallest
/// supported field.  Mixed irrationalities (for example both `m = 4` and
/// `m = 5` occurring) exceed a single quadratic extension and are rejected.
pub fn geometric_realization(
    names: Vec<String>,
    coxeter: Vec<Vec<CoxEntry>>,
) -> Result<Realization, RingError> {
    let n = names.len();
    let mut need_d: Option<i64> = None;
    let mut cartan = vec![vec![Scalar::zero(); n]; n];
    for s in 0..n {
        for t in 0..n {
            if s == t {
                cartan[s][t] = Scalar::from_int(2);
                continue;
            }
            let (entry, d) = geometric_entry(coxeter[s][t])?;
            if let Some(d) = d {
                match need_d {
                    None => need_d = Some(d),
                    Some(prev) if prev == d => {}
                    Some(_) => return Err(RingError::UnsupportedFieldExtension),
                }
            }
            cartan[s][t] = entry;
        }
    }
    let field = match need_d {
        None => FieldSpec::Q,
        Some(d) => FieldSpec::Qsqrt(d),
    };
    build_realization(names, coxeter, cartan, field)
}

/// Realization config file contents (TOML or JSON).
#[derive(Debug, Serialize, Deserialize)]
pub struct RealizationConfig {
    pub colors: Vec<String>,
    /// `0` encodes infinity.
    pub coxeter: Vec<Vec<u32>>,
    /// Cartan entries as scalar expressions, or omitted for geometric.
    #[serde(default)]
    pub cartan: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub field: Option<FieldSpec>,
}

impl RealizationConfig {
    pub fn parse_str(text: &str) -> Result<Self, String> {
        if text.trim_start().starts_with('{') {
            serde_json::from_str(text).map_err(|e| format!("bad JSON config: {e}"))
        } else {
            toml::from_str(text).map_err(|e| format!("bad TOML config: {e}"))
        }
    }

    pub fn build(&self) -> Result<Realization, RingError> {
        let n = self.colors.len();
        let coxeter: Vec<Vec<CoxEntry>> = self
            .coxeter
            .iter()
            .map(|row| row.iter().map(|&m| if m == 0 { None } else { Some(m) }).collect())
            .collect();
        match &self.cartan {
            None => geometric_realization(self.colors.clone(), coxeter),
            Some(rows) => {
                let mut cartan = vec![vec![Scalar::zero(); n]; n];
                for (s, row) in rows.iter().enumerate() {
                    for (t, entry) in row.iter().enumerate() {
                        cartan[s][t] =
                            parse_scalar(entry).map_err(RingError::InvalidInput)?;
                    }
                }
                let field = self.field.unwrap_or_else(|| {
                    cartan
                        .iter()
                        .flatten()
                        .find_map(|c| c.quad_d())
                        .map(FieldSpec::Qsqrt)
                        .unwrap_or(FieldSpec::Q)
                });
                build_realization(self.colors.clone(), coxeter, cartan, field)
            }
        }
    }
}

/// Coxeter matrices for the standard types used throughout the test suite
/// and the CLI `--type` shortcut.
pub fn preset_coxeter(name: &str) -> Option<(Vec<String>, Vec<Vec<CoxEntry>>)> {
    fn mat(names: &[&str], entries: &[&[u32]]) -> (Vec<String>, Vec<Vec<CoxEntry>>) {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let m = entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&e| if e == 0 { None } else { Some(e) })
                    .collect()
            })
            .collect();
        (names, m)
    }
    Some(match name {
        "A1" => mat(&["s"], &[&[1]]),
        "A1xA1" => mat(&["s", "t"], &[&[1, 2], &[2, 1]]),
        "A2" => mat(&["s", "t"], &[&[1, 3], &[3, 1]]),
        "B2" => mat(&["s", "t"], &[&[1, 4], &[4, 1]]),
        "H2" | "I2(5)" => mat(&["s", "t"], &[&[1, 5], &[5, 1]]),
        "G2" | "I2(6)" => mat(&["s", "t"], &[&[1, 6], &[6, 1]]),
        "I2(inf)" => mat(&["s", "t"], &[&[1, 0], &[0, 1]]),
        "A3" => mat(&["s", "t", "u"], &[&[1, 3, 2], &[3, 1, 3], &[2, 3, 1]]),
        "B3" => mat(&["s", "t", "u"], &[&[1, 4, 2], &[4, 1, 3], &[2, 3, 1]]),
        "H3" => mat(&["s", "t", "u"], &[&[1, 5, 2], &[5, 1, 3], &[2, 3, 1]]),
        "A1xA1xA1" => mat(&["s", "t", "u"], &[&[1, 2, 2], &[2, 1, 2], &[2, 2, 1]]),
        "A1xI2(2)" => mat(&["s", "t", "u"], &[&[1, 2, 2], &[2, 1, 2], &[2, 2, 1]]),
        "A1xI2(3)" => mat(&["s", "t", "u"], &[&[1, 3, 2], &[3, 1, 2], &[2, 2, 1]]),
        "A1xI2(4)" => mat(&["s", "t", "u"], &[&[1, 4, 2], &[4, 1, 2], &[2, 2, 1]]),
        "A1xI2(5)" => mat(&["s", "t", "u"], &[&[1, 5, 2], &[5, 1, 2], &[2, 2, 1]]),
        _ => return None,
    })
}

/// Geometric realization of a preset type.
pub fn preset_geometric(name: &str) -> Option<Realization> {
    let (names, cox) = preset_coxeter(name)?;
    geometric_realization(names, cox).ok()
}

/// The integral (crystallographic) Cartan matrices used in worked examples.
pub fn preset_integral(name: &str) -> Option<Realization> {
    let (names, cox) = preset_coxeter(name)?;
    let n = names.len();
    let mut cartan = vec![vec![Scalar::zero(); n]; n];
    for s in 0..n {
        for t in 0..n {
            cartan[s][t] = if s == t {
                Scalar::from_int(2)
            } else {
                match cox[s][t] {
                    Some(2) => Scalar::zero(),
                    Some(3) => Scalar::from_int(-1),
                    // Asymmetric integral entries for m = 4, 6.
                    Some(4) => Scalar::from_int(if s < t { -1 } else { -2 }),
                    Some(6) => Scalar::from_int(if s < t { -1 } else { -3 }),
                    _ => return None,
                }
            };
        }
    }
    build_realization(names, cox, cartan, FieldSpec::Q).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Realization {
        preset_integral("A2").unwrap()
    }

    #[test]
    fn quantum_numbers_match_recursion() {
        let x = Scalar::from_int(-1);
        let y = Scalar::from_int(-1); // A2: xy = 1
        assert_eq!(quantum_number(0, QFlavor::X, &x, &y), Scalar::zero());
        assert_eq!(quantum_number(1, QFlavor::X, &x, &y), Scalar::one());
        // [3] = xy - 1 = 0 at xy = 1
        assert_eq!(quantum_number(3, QFlavor::X, &x, &y), Scalar::zero());
        // B2 integral: x = -1, y = -2: [4]_x = x(xy - 2) = 0 at xy = 2
        let (x, y) = (Scalar::from_int(-1), Scalar::from_int(-2));
        assert_eq!(quantum_number(4, QFlavor::X, &x, &y), Scalar::zero());
        assert_eq!(quantum_number(4, QFlavor::Y, &x, &y), Scalar::zero());
        assert_eq!(quantum_number(3, QFlavor::X, &x, &y), Scalar::one());
        // Generic point: [3] = xy - 1.
        let (x, y) = (Scalar::from_int(5), Scalar::from_int(7));
        assert_eq!(quantum_number(3, QFlavor::X, &x, &y), Scalar::from_int(34));
        assert_eq!(quantum_number(3, QFlavor::Y, &x, &y), Scalar::from_int(34));
    }

    #[test]
    fn builds_standard_realizations() {
        assert!(preset_integral("A2").is_some());
        assert!(preset_integral("B2").is_some());
        assert!(preset_integral("G2").is_some());
        assert!(preset_geometric("A3").is_some());
        assert!(preset_geometric("B3").is_some());
        assert!(preset_geometric("H3").is_some());
        assert!(preset_geometric("A1xA1xA1").is_some());
    }

    #[test]
    fn geometric_entries() {
        let r = preset_geometric("A2").unwrap();
        assert_eq!(*r.cartan_entry(0, 1), Scalar::from_int(-1));
        let r = preset_geometric("H2").unwrap();
        assert_eq!(*r.cartan_entry(0, 1), -Scalar::phi());
        let r = preset_geometric("A1xA1").unwrap();
        assert_eq!(*r.cartan_entry(0, 1), Scalar::zero());
        // Mixed m = 4 and m = 5 needs two extensions.
        let (names, cox) = preset_coxeter("B3").unwrap();
        let mut cox5 = cox.clone();
        cox5[1][2] = Some(5);
        cox5[2][1] = Some(5);
        assert_eq!(
            geometric_realization(names, cox5).unwrap_err(),
            RingError::UnsupportedFieldExtension
        );
    }

    #[test]
    fn rejects_bad_cartan() {
        let (names, cox) = preset_coxeter("B2").unwrap();
        // xy = 1 fails the technical condition for m = 4.
        let cartan = vec![
            vec![Scalar::from_int(2), Scalar::from_int(-1)],
            vec![Scalar::from_int(-1), Scalar::from_int(2)],
        ];
        let err = build_realization(names, cox, cartan, FieldSpec::Q).unwrap_err();
        assert!(matches!(err, RingError::TechnicalConditionFailed(_, _)));
    }

    #[test]
    fn rejects_unbalanced() {
        // m = 3 with x = -1/2, y = -2 satisfies [3] = xy - 1 = 0 but
        // [2] = 1/2 != 1 at the balance point.
        let (names, cox) = preset_coxeter("A2").unwrap();
        let cartan = vec![
            vec![Scalar::from_int(2), Scalar::from_ratio(-1, 2)],
            vec![Scalar::from_int(-2), Scalar::from_int(2)],
        ];
        let err = build_realization(names, cox, cartan, FieldSpec::Q).unwrap_err();
        assert_eq!(
            err,
            RingError::UnbalancedRealization("s".into(), "t".into())
        );
    }

    #[test]
    fn action_and_demazure() {
        let r = a2();
        let (s, t) = (0, 1);
        let alpha_s = r.alpha(s);
        // s(alpha_s) = -alpha_s
        assert_eq!(r.act_color(s, &alpha_s), -&alpha_s);
        // s(w_t) = w_t, s(w_s) = w_s - alpha_s
        assert_eq!(r.act_color(s, &r.weight(t)), r.weight(t));
        assert_eq!(r.act_color(s, &r.weight(s)), &r.weight(s) - &alpha_s);
        // d_s(alpha_s) = 2, d_s(alpha_t) = a_st, d_s(const) = 0
        assert_eq!(r.demazure(s, &alpha_s).unwrap(), Poly::constant(2, Scalar::from_int(2)));
        assert_eq!(
            r.demazure(s, &r.alpha(t)).unwrap(),
            Poly::constant(2, r.cartan_entry(s, t).clone())
        );
        assert!(r.demazure(s, &Poly::one(2)).unwrap().is_zero());
        // t(alpha_s) = alpha_s + alpha_t in A2
        assert_eq!(r.act_color(t, &alpha_s), &alpha_s + &r.alpha(t));
    }

    #[test]
    fn demazure_properties() {
        let r = a2();
        let s = 0;
        let f = {
            // (w_s + 2 w_t)^2 + w_s w_t
            let g = &r.weight(0) + &r.weight(1).scale(&Scalar::from_int(2));
            &(&g * &g) + &(&r.weight(0) * &r.weight(1))
        };
        let g = &r.weight(1) + &r.weight(0);
        let ds_f = r.demazure(s, &f).unwrap();
        // Image is s-invariant, so d_s d_s = 0.
        assert!(r.demazure(s, &ds_f).unwrap().is_zero());
        assert_eq!(r.act_color(s, &ds_f), ds_f);
        // Twisted Leibniz: d(fg) = f d(g) + d(f) s(g)
        let lhs = r.demazure(s, &(&f * &g)).unwrap();
        let rhs = &(&f * &r.demazure(s, &g).unwrap())
            + &(&r.demazure(s, &f).unwrap() * &r.act_color(s, &g));
        assert_eq!(lhs, rhs);
        // f = d_s(f) * delta + (s-invariant), delta = w_s
        let h = &f - &(&ds_f * &r.weight(s));
        assert_eq!(r.act_color(s, &h), h);
        // Degree drops by 2.
        assert_eq!(ds_f.degree(), f.degree() - 2);
    }

    #[test]
    fn braid_relation_on_dual_rep() {
        for name in ["A2", "B2", "G2"] {
            let r = preset_integral(name).unwrap();
            let m = r.m(0, 1);
            let f = &r.weight(0) + &r.weight(1).scale(&Scalar::from_int(3));
            let mut g = f.clone();
            for _ in 0..m {
                g = r.act_color(1, &r.act_color(0, &g));
            }
            assert_eq!(g, f);
            // (st) has order exactly m: stopping earlier moves f.
            let mut h = f.clone();
            for _ in 0..(m - 1) {
                h = r.act_color(1, &r.act_color(0, &h));
            }
            assert_ne!(h, f);
        }
    }

    #[test]
    fn config_roundtrip() {
        let cfg = r#"{
            "colors": ["s", "t"],
            "coxeter": [[1, 4], [4, 1]],
            "cartan": [["2", "-1"], ["-2", "2"]],
            "field": "Q"
        }"#;
        let parsed = RealizationConfig::parse_str(cfg).unwrap();
        let r = parsed.build().unwrap();
        assert!(r.is_balanced());
        assert_eq!(*r.cartan_entry(1, 0), Scalar::from_int(-2));
        let geo = r#"{"colors": ["s", "t"], "coxeter": [[1, 5], [5, 1]]}"#;
        let r = RealizationConfig::parse_str(geo).unwrap().build().unwrap();
        assert_eq!(r.field(), FieldSpec::Qsqrt(5));
    }
}

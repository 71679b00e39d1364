//! Exact computational engine for the diagrammatic category of Soergel
//! bimodules.
//!
//! The crate is organized around the localization technique: Soergel
//! diagrams (built from dots, trivalent vertices, `2m`-valent vertices and
//! polynomial boxes) are evaluated to sparse matrices over the fraction
//! field of the polynomial ring of a realization, indexed by the standard
//! summands of a Bott-Samelson object.  All arithmetic is exact, over the
//! rationals or a real quadratic extension.
//!
//! Module layout:
//!
//! * [`ring`] — scalars, multivariate polynomials, fractions, realizations.
//! * [`coxeter`] — the group ball, Bruhat order, subexpressions, rex graphs.
//! * [`hecke`] — the Hecke algebra with its standard and canonical bases.
//! * [`diagram`] — diagrams as slice words, light leaves and double leaves.
//! * [`bimod`] — the Bott-Samelson tensor backend and the braid-vertex solver.
//! * [`localize`] — evaluation to standard matrices and the relation suite.
//! * [`jw`] — the two-colored Temperley-Lieb algebra and Jones-Wenzl projectors.
//! * [`report`] — machine- and human-readable check reports.

pub mod bimod;
pub mod coxeter;
pub mod diagram;
pub mod hecke;
pub mod jw;
pub mod localize;
pub mod report;
pub mod ring;

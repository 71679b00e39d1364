//! The Coxeter group model: a BFS-generated ball of elements with canonical
//! ShortLex reduced words, Bruhat order, subexpressions with Deodhar
//! decorations, and reduced-expression graphs.
//!
//! Elements are identified by their exact action on the dual representation
//! (a substitution of the weight variables), so equality needs no word-level
//! normal forms.  For finite groups of order at most 14400 the whole group
//! is materialized; otherwise exploration stops at a configurable radius.

use std::collections::HashMap;

use thiserror::Error;

use crate::ring::{Color, Poly, Realization};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("product leaves the materialized ball (radius {0})")]
    RadiusExceeded(usize),
    #[error("expression is not reduced")]
    NotReducedExpression,
    #[error("subexpressions live on different underlying expressions")]
    MismatchedExpressions,
    #[error("unknown color `{0}`")]
    UnknownColor(String),
}

/// A word in the generators (not necessarily reduced).
pub type Expression = Vec<Color>;

/// Handle into the ball table of a [`CoxeterSystem`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(pub u32);

/// Deodhar decoration of one index of a 01-sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decoration {
    U0,
    U1,
    D0,
    D1,
}

impl Decoration {
    pub fn is_up(self) -> bool {
        matches!(self, Decoration::U0 | Decoration::U1)
    }
    pub fn bit(self) -> bool {
        matches!(self, Decoration::U1 | Decoration::D1)
    }
}

/// A 01-sequence on an expression, with its Bruhat stroll and defect.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subexpression {
    pub word: Expression,
    pub bits: Vec<bool>,
    /// `stroll[i]` is the product of the first `i` selected letters; the
    /// stroll has length `len(word) + 1` and starts at the identity.
    pub stroll: Vec<Element>,
    pub decorations: Vec<Decoration>,
    pub defect: i64,
}

impl Subexpression {
    pub fn endpoint(&self) -> Element {
        *self.stroll.last().unwrap()
    }
}

struct ElemData {
    word: Expression,
    length: u32,
    /// Right multiplication table; `None` if outside the ball.
    right: Vec<Option<Element>>,
    /// Left multiplication table; `None` if outside the ball.
    left: Vec<Option<Element>>,
    /// Substitution images of the weight variables under the element.
    subst: Vec<Poly>,
}

/// A materialized ball of a Coxeter group.
pub struct CoxeterSystem {
    realization: Realization,
    elems: Vec<ElemData>,
    index: HashMap<Vec<Poly>, Element>,
    radius: usize,
    full_group: bool,
    bruhat_cache: std::sync::RwLock<HashMap<(Element, Element), bool>>,
}

/// Default bound on the number of materialized elements (the order of H4).
const DEFAULT_MAX_ELEMENTS: usize = 14400;
const DEFAULT_RADIUS: usize = 12;
const MAX_AUTO_RADIUS: usize = 64;

impl CoxeterSystem {
    /// Build the ball.  With `radius = None` the whole group is materialized
    /// when it has at most 14400 elements, and exploration stops at radius
    /// 12 (or when the element bound is hit) otherwise.
    pub fn build(realization: Realization, radius: Option<usize>) -> Self {
        let n = realization.rank();
        let id_subst: Vec<Poly> = (0..n).map(|i| Poly::var(n, i)).collect();
        let mut sys = CoxeterSystem {
            realization,
            elems: vec![ElemData {
                word: vec![],
                length: 0,
                right: vec![None; n],
                left: vec![None; n],
                subst: id_subst.clone(),
            }],
            index: HashMap::from([(id_subst, Element(0))]),
            radius: 0,
            full_group: false,
            bruhat_cache: std::sync::RwLock::new(HashMap::new()),
        };
        let mut frontier = vec![Element(0)];
        let mut level = 0usize;
        loop {
            let mut next = Vec::new();
            for &w in &frontier {
                for s in 0..n {
                    let subst = sys.compose_right(&sys.elems[w.0 as usize].subst, s);
                    if let Some(&x) = sys.index.get(&subst) {
                        sys.elems[w.0 as usize].right[s] = Some(x);
                        continue;
                    }
                    let mut word = sys.elems[w.0 as usize].word.clone();
                    word.push(s);
                    let x = Element(sys.elems.len() as u32);
                    sys.index.insert(subst.clone(), x);
                    sys.elems.push(ElemData {
                        word,
                        length: level as u32 + 1,
                        right: vec![None; n],
                        left: vec![None; n],
                        subst,
                    });
                    sys.elems[w.0 as usize].right[s] = Some(x);
                    next.push(x);
                }
            }
            if next.is_empty() {
                sys.full_group = true;
                sys.radius = level;
                break;
            }
            level += 1;
            frontier = next;
            let stop = match radius {
                Some(r) => level >= r,
                None => {
                    level >= MAX_AUTO_RADIUS
                        || (level >= DEFAULT_RADIUS && sys.elems.len() > DEFAULT_MAX_ELEMENTS)
                }
            };
            if stop {
                sys.radius = level;
                // Fill right-mul entries that stay inside the ball.
                for i in 0..sys.elems.len() {
                    for s in 0..n {
                        if sys.elems[i].right[s].is_none() {
                            let subst = sys.compose_right(&sys.elems[i].subst, s);
                            if let Some(&x) = sys.index.get(&subst) {
                                sys.elems[i].right[s] = Some(x);
                            }
                        }
                    }
                }
                break;
            }
        }
        // Left multiplication table: s * w = (w^-1 s)^-1, computed directly
        // from the stored actions.
        for i in 0..sys.elems.len() {
            for s in 0..n {
                let subst: Vec<Poly> = sys.elems[i]
                    .subst
                    .iter()
                    .map(|p| p.substitute(sys.realization.refl_subst(s)))
                    .collect();
                sys.elems[i].left[s] = sys.index.get(&subst).copied();
            }
        }
        sys
    }

    fn compose_right(&self, subst_w: &[Poly], s: Color) -> Vec<Poly> {
        // (ws)(x_i) = w(s(x_i))
        self.realization
            .refl_subst(s)
            .iter()
            .map(|p| p.substitute(subst_w))
            .collect()
    }

    pub fn realization(&self) -> &Realization {
        &self.realization
    }

    pub fn rank(&self) -> usize {
        self.realization.rank()
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn is_full_group(&self) -> bool {
        self.full_group
    }

    pub fn element_count(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.elems.len() as u32).map(Element)
    }

    pub fn identity(&self) -> Element {
        Element(0)
    }

    pub fn generator(&self, s: Color) -> Element {
        self.elems[0].right[s].expect("generators are always in the ball")
    }

    pub fn length(&self, w: Element) -> usize {
        self.elems[w.0 as usize].length as usize
    }

    /// Canonical (ShortLex-least) reduced word.
    pub fn word(&self, w: Element) -> &Expression {
        &self.elems[w.0 as usize].word
    }

    pub fn mul_color(&self, w: Element, s: Color) -> Result<Element, CoxeterError> {
        self.elems[w.0 as usize].right[s].ok_or(CoxeterError::RadiusExceeded(self.radius))
    }

    /// The endpoint of a word, starting at the identity.
    pub fn from_word(&self, word: &[Color]) -> Result<Element, CoxeterError> {
        let mut w = self.identity();
        for &s in word {
            w = self.mul_color(w, s)?;
        }
        Ok(w)
    }

    pub fn mul(&self, a: Element, b: Element) -> Result<Element, CoxeterError> {
        // Compose actions and look up; this cannot fail spuriously on
        // intermediate lengths the way letter-by-letter multiplication can.
        let sa = &self.elems[a.0 as usize].subst;
        let sb = &self.elems[b.0 as usize].subst;
        let subst: Vec<Poly> = sb.iter().map(|p| p.substitute(sa)).collect();
        self.index
            .get(&subst)
            .copied()
            .ok_or(CoxeterError::RadiusExceeded(self.radius))
    }

    pub fn inv(&self, a: Element) -> Result<Element, CoxeterError> {
        let mut word = self.word(a).clone();
        word.reverse();
        let n = self.rank();
        let mut subst: Vec<Poly> = (0..n).map(|i| Poly::var(n, i)).collect();
        for &s in &word {
            subst = self.compose_right(&subst, s);
        }
        self.index
            .get(&subst)
            .copied()
            .ok_or(CoxeterError::RadiusExceeded(self.radius))
    }

    /// Right descent set: `s` with `ws < w`.
    pub fn right_descents(&self, w: Element) -> Vec<Color> {
        (0..self.rank())
            .filter(|&s| match self.elems[w.0 as usize].right[s] {
                Some(x) => self.length(x) < self.length(w),
                None => false,
            })
            .collect()
    }

    pub fn left_descents(&self, w: Element) -> Vec<Color> {
        (0..self.rank())
            .filter(|&s| match self.elems[w.0 as usize].left[s] {
                Some(x) => self.length(x) < self.length(w),
                None => false,
            })
            .collect()
    }

    pub fn mul_color_left(&self, s: Color, w: Element) -> Result<Element, CoxeterError> {
        self.elems[w.0 as usize].left[s].ok_or(CoxeterError::RadiusExceeded(self.radius))
    }

    /// Bruhat order by the descent recursion: for a left descent `s` of `w`,
    /// `v <= w` iff `min(v, sv) <= sw`.
    pub fn bruhat_leq(&self, v: Element, w: Element) -> bool {
        if v == self.identity() {
            return true;
        }
        if self.length(v) > self.length(w) {
            return false;
        }
        if let Some(&cached) = self.bruhat_cache.read().unwrap().get(&(v, w)) {
            return cached;
        }
        let s = (0..self.rank())
            .find(|&s| {
                matches!(self.elems[w.0 as usize].left[s],
                         Some(x) if self.length(x) < self.length(w))
            })
            .expect("non-identity element has a descent");
        let sw = self.elems[w.0 as usize].left[s].unwrap();
        let sv = self.elems[v.0 as usize].left[s].expect("shorter element stays in ball");
        let result = if self.length(sv) < self.length(v) {
            self.bruhat_leq(sv, sw)
        } else {
            self.bruhat_leq(v, sw)
        };
        self.bruhat_cache.write().unwrap().insert((v, w), result);
        result
    }

    /// Act on a polynomial by a group element.
    pub fn act(&self, w: Element, f: &Poly) -> Poly {
        f.substitute(&self.elems[w.0 as usize].subst)
    }

    /// The root `w(alpha_s)`.
    pub fn root(&self, w: Element, s: Color) -> Poly {
        self.act(w, &self.realization.alpha(s))
    }

    /// All roots `w(alpha_s)` over the ball, each normalized to leading
    /// coefficient 1.  Used for opportunistic fraction cancellation.
    pub fn all_roots(&self) -> Vec<Poly> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for w in self.elements() {
            for s in 0..self.rank() {
                let r = self.root(w, s);
                let lc = r.leading_coeff();
                let normalized = r.scale(&lc.inv());
                if seen.insert(normalized.clone()) {
                    out.push(normalized);
                }
            }
        }
        out
    }

    /// All 01-sequences of `word` with the given endpoint, fully decorated.
    pub fn subexpressions(
        &self,
        word: &Expression,
        target: Element,
    ) -> Result<Vec<Subexpression>, CoxeterError> {
        Ok(self
            .all_subexpressions(word)?
            .into_iter()
            .filter(|e| e.endpoint() == target)
            .collect())
    }

    /// All 01-sequences of `word`, decorated, in bit-lex order.
    pub fn all_subexpressions(
        &self,
        word: &Expression,
    ) -> Result<Vec<Subexpression>, CoxeterError> {
        let m = word.len();
        let mut out = Vec::with_capacity(1 << m);
        for mask in 0..(1u64 << m) {
            out.push(self.subexpression(word, |i| mask >> i & 1 == 1)?);
        }
        Ok(out)
    }

    /// Decorate a single 01-sequence.
    pub fn subexpression(
        &self,
        word: &Expression,
        bit: impl Fn(usize) -> bool,
    ) -> Result<Subexpression, CoxeterError> {
        let m = word.len();
        let mut stroll = Vec::with_capacity(m + 1);
        let mut decorations = Vec::with_capacity(m);
        let mut bits = Vec::with_capacity(m);
        let mut defect = 0i64;
        let mut cur = self.identity();
        stroll.push(cur);
        for i in 0..m {
            let s = word[i];
            let moved = self.mul_color(cur, s)?;
            let up = self.length(moved) > self.length(cur);
            let b = bit(i);
            let dec = match (up, b) {
                (true, true) => Decoration::U1,
                (true, false) => Decoration::U0,
                (false, true) => Decoration::D1,
                (false, false) => Decoration::D0,
            };
            match dec {
                Decoration::U0 => defect += 1,
                Decoration::D0 => defect -= 1,
                _ => {}
            }
            if b {
                cur = moved;
            }
            bits.push(b);
            stroll.push(cur);
            decorations.push(dec);
        }
        Ok(Subexpression { word: word.clone(), bits, stroll, decorations, defect })
    }

    /// Path dominance: `a <= b` iff `b`'s stroll dominates `a`'s pointwise.
    pub fn path_dominance_leq(
        &self,
        a: &Subexpression,
        b: &Subexpression,
    ) -> Result<bool, CoxeterError> {
        if a.word != b.word {
            return Err(CoxeterError::MismatchedExpressions);
        }
        Ok(a.stroll
            .iter()
            .zip(&b.stroll)
            .all(|(x, y)| self.bruhat_leq(*x, *y)))
    }

    /// All reduced words for `w`.
    pub fn enumerate_rex(&self, w: Element) -> Vec<Expression> {
        let mut memo: HashMap<Element, Vec<Expression>> = HashMap::new();
        self.rex_memo(w, &mut memo);
        let mut rexes = memo.remove(&w).unwrap();
        rexes.sort();
        rexes
    }

    fn rex_memo(&self, w: Element, memo: &mut HashMap<Element, Vec<Expression>>) {
        if memo.contains_key(&w) {
            return;
        }
        if w == self.identity() {
            memo.insert(w, vec![vec![]]);
            return;
        }
        let mut out = Vec::new();
        for s in self.right_descents(w) {
            let ws = self.mul_color(w, s).unwrap();
            self.rex_memo(ws, memo);
            for r in memo.get(&ws).unwrap().clone() {
                let mut r = r;
                r.push(s);
                out.push(r);
            }
        }
        memo.insert(w, out);
    }

    /// Check that a word is reduced.
    pub fn is_reduced(&self, word: &[Color]) -> Result<bool, CoxeterError> {
        Ok(self.length(self.from_word(word)?) == word.len())
    }

    /// The rex graph of `w`.
    pub fn rex_graph(&self, w: Element) -> RexGraph {
        let vertices = self.enumerate_rex(w);
        let lookup: HashMap<&Expression, usize> =
            vertices.iter().enumerate().map(|(i, r)| (r, i)).collect();
        let mut edges = Vec::new();
        for (i, rex) in vertices.iter().enumerate() {
            for edge in self.braid_moves(rex) {
                let j = lookup[&edge.result];
                if i < j {
                    edges.push(RexEdge {
                        from: i,
                        to: j,
                        position: edge.position,
                        colors: edge.colors,
                        distant: edge.distant,
                    });
                }
            }
        }
        RexGraph { vertices, edges }
    }

    /// All single braid moves applicable to a word.
    pub fn braid_moves(&self, word: &Expression) -> Vec<BraidMove> {
        let mut out = Vec::new();
        for pos in 0..word.len() {
            if pos + 1 >= word.len() {
                continue;
            }
            let (a, b) = (word[pos], word[pos + 1]);
            if a == b {
                continue;
            }
            let m = match self.realization.coxeter_entry(a, b) {
                Some(m) => m as usize,
                None => continue,
            };
            if pos + m > word.len() {
                continue;
            }
            let alternating = (0..m).all(|k| word[pos + k] == if k % 2 == 0 { a } else { b });
            if !alternating {
                continue;
            }
            let mut result = word.clone();
            for k in 0..m {
                result[pos + k] = if k % 2 == 0 { b } else { a };
            }
            out.push(BraidMove { position: pos, colors: (a, b), distant: m == 2, result });
        }
        out
    }

    /// Shortest braid-move path between two rexes of the same element (BFS,
    /// deterministic tie-breaking by word order).
    pub fn rex_path(
        &self,
        from: &Expression,
        to: &Expression,
    ) -> Result<Vec<BraidMove>, CoxeterError> {
        if !self.is_reduced(from)? || !self.is_reduced(to)? {
            return Err(CoxeterError::NotReducedExpression);
        }
        if self.from_word(from)? != self.from_word(to)? {
            return Err(CoxeterError::MismatchedExpressions);
        }
        if from == to {
            return Ok(vec![]);
        }
        let mut prev: HashMap<Expression, (Expression, BraidMove)> = HashMap::new();
        let mut queue = std::collections::VecDeque::from([from.clone()]);
        prev.insert(from.clone(), (from.clone(), BraidMove::dummy()));
        while let Some(cur) = queue.pop_front() {
            let mut moves = self.braid_moves(&cur);
            moves.sort_by(|a, b| a.result.cmp(&b.result));
            for mv in moves {
                if prev.contains_key(&mv.result) {
                    continue;
                }
                prev.insert(mv.result.clone(), (cur.clone(), mv.clone()));
                if &mv.result == to {
                    let mut path = Vec::new();
                    let mut node = to.clone();
                    while node != *from {
                        let (parent, mv) = prev[&node].clone();
                        path.push(mv);
                        node = parent;
                    }
                    path.reverse();
                    return Ok(path);
                }
                queue.push_back(mv.result.clone());
            }
        }
        unreachable!("rex graph is connected");
    }
}

/// One application of a braid relation to a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidMove {
    pub position: usize,
    /// Colors `(a, b)`: the subword read `a b a ...` before the move.
    pub colors: (Color, Color),
    pub distant: bool,
    pub result: Expression,
}

impl BraidMove {
    fn dummy() -> Self {
        BraidMove { position: 0, colors: (0, 0), distant: false, result: vec![] }
    }
}

/// The reduced-expression graph of an element.
#[derive(Debug, Clone)]
pub struct RexGraph {
    pub vertices: Vec<Expression>,
    pub edges: Vec<RexEdge>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RexEdge {
    pub from: usize,
    pub to: usize,
    pub position: usize,
    pub colors: (Color, Color),
    pub distant: bool,
}

impl RexGraph {
    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            adj[e.from].push(e.to);
            adj[e.to].push(e.from);
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.vertices.len()
    }
}

/// Parse a word like `"s t s"` against a realization's color names.
pub fn parse_word(realization: &Realization, text: &str) -> Result<Expression, CoxeterError> {
    text.split_whitespace()
        .map(|name| {
            realization
                .color_by_name(name)
                .ok_or_else(|| CoxeterError::UnknownColor(name.to_string()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{preset_geometric, preset_integral};

    fn sys(name: &str) -> CoxeterSystem {
        CoxeterSystem::build(
            preset_integral(name).or_else(|| preset_geometric(name)).unwrap(),
            None,
        )
    }

    #[test]
    fn a2_ball() {
        let w = sys("A2");
        assert!(w.is_full_group());
        assert_eq!(w.element_count(), 6);
        let s = w.generator(0);
        assert_eq!(w.mul(s, s).unwrap(), w.identity());
        let sts = w.from_word(&[0, 1, 0]).unwrap();
        let tst = w.from_word(&[1, 0, 1]).unwrap();
        assert_eq!(sts, tst);
        assert_eq!(w.length(sts), 3);
        assert_eq!(w.right_descents(sts), vec![0, 1]);
        // inv(st) = ts
        let st = w.from_word(&[0, 1]).unwrap();
        let ts = w.from_word(&[1, 0]).unwrap();
        assert_eq!(w.inv(st).unwrap(), ts);
        assert_eq!(w.word(sts), &vec![0, 1, 0]);
    }

    #[test]
    fn group_orders() {
        assert_eq!(sys("B2").element_count(), 8);
        assert_eq!(sys("A3").element_count(), 24);
        assert_eq!(sys("B3").element_count(), 48);
        assert_eq!(sys("G2").element_count(), 12);
        assert_eq!(sys("H3").element_count(), 120);
        assert_eq!(sys("A1xA1xA1").element_count(), 8);
    }

    #[test]
    fn infinite_dihedral_truncates() {
        let r = preset_geometric("I2(inf)").unwrap();
        let w = CoxeterSystem::build(r, Some(5));
        assert!(!w.is_full_group());
        assert_eq!(w.radius(), 5);
        assert_eq!(w.element_count(), 11);
        let deep = w.from_word(&[0, 1, 0, 1, 0]).unwrap();
        assert_eq!(w.mul_color(deep, 1), Err(CoxeterError::RadiusExceeded(5)));
    }

    /// Brute-force Bruhat order via the subword property.
    fn bruhat_brute(w: &CoxeterSystem, v: Element, x: Element) -> bool {
        let word = w.word(x).clone();
        let m = word.len();
        (0..(1u64 << m)).any(|mask| {
            let sub: Vec<Color> =
                (0..m).filter(|i| mask >> i & 1 == 1).map(|i| word[i]).collect();
            w.from_word(&sub).map(|e| e == v).unwrap_or(false)
        })
    }

    #[test]
    fn bruhat_matches_brute_force() {
        for name in ["A2", "B2"] {
            let w = sys(name);
            for v in w.elements() {
                for x in w.elements() {
                    assert_eq!(
                        w.bruhat_leq(v, x),
                        bruhat_brute(&w, v, x),
                        "bruhat mismatch in {name}"
                    );
                }
            }
        }
        // Spot checks from worked cases.
        let w = sys("A2");
        let sts = w.from_word(&[0, 1, 0]).unwrap();
        let st = w.from_word(&[0, 1]).unwrap();
        assert!(w.bruhat_leq(w.generator(0), sts));
        assert!(w.bruhat_leq(w.generator(1), sts));
        assert!(!w.bruhat_leq(sts, st));
        for x in w.elements() {
            assert!(w.bruhat_leq(w.identity(), x));
        }
    }

    #[test]
    fn bruhat_h3_small_ball() {
        let w = sys("H3");
        let small: Vec<Element> = w.elements().filter(|&x| w.length(x) <= 5).collect();
        for &v in &small {
            for &x in &small {
                assert_eq!(w.bruhat_leq(v, x), bruhat_brute(&w, v, x));
            }
        }
    }

    #[test]
    fn defect_examples_from_worked_cases() {
        let w = sys("A2");
        // sss expressing e: defects {1, 1, -1, 3}
        let subs = w.subexpressions(&vec![0, 0, 0], w.identity()).unwrap();
        let mut defects: Vec<i64> = subs.iter().map(|e| e.defect).collect();
        defects.sort();
        assert_eq!(defects, vec![-1, 1, 1, 3]);
        // sss expressing s: defects {-2, 0, 0, 2}, matching the coefficient
        // v^-2 + 2 + v^2 of H_s in the Deodhar expansion of the cube.
        let subs = w.subexpressions(&vec![0, 0, 0], w.generator(0)).unwrap();
        let mut defects: Vec<i64> = subs.iter().map(|e| e.defect).collect();
        defects.sort();
        assert_eq!(defects, vec![-2, 0, 0, 2]);
        // sts expressing s: two subexpressions with defects {0, 2}
        let subs = w.subexpressions(&vec![0, 1, 0], w.generator(0)).unwrap();
        let mut defects: Vec<i64> = subs.iter().map(|e| e.defect).collect();
        defects.sort();
        assert_eq!(defects, vec![0, 2]);
        // s expressing t: empty
        assert!(w.subexpressions(&vec![0], w.generator(1)).unwrap().is_empty());
        // Decorations of the worked subexpression (U1, U0, D0) for sts -> s.
        let e = w.subexpression(&vec![0, 1, 0], |i| i == 0).unwrap();
        assert_eq!(e.decorations, vec![Decoration::U1, Decoration::U0, Decoration::D0]);
        assert_eq!(e.defect, 0);
    }

    #[test]
    fn all_ones_subexpression_of_rex() {
        let w = sys("B2");
        for x in w.elements() {
            let rex = w.word(x).clone();
            let e = w.subexpression(&rex, |_| true).unwrap();
            assert_eq!(e.endpoint(), x);
            assert!(e.decorations.iter().all(|d| *d == Decoration::U1));
            assert_eq!(e.defect, 0);
        }
    }

    #[test]
    fn path_dominance() {
        let w = sys("A2");
        let word = vec![0usize, 0];
        let e11 = w.subexpression(&word, |_| true).unwrap();
        let e10 = w.subexpression(&word, |i| i == 0).unwrap();
        // strolls (e,s,e) vs (e,s,s): pointwise e<=e, s<=s, e<=s
        assert!(w.path_dominance_leq(&e11, &e10).unwrap());
        assert!(!w.path_dominance_leq(&e10, &e11).unwrap());
        assert!(w.path_dominance_leq(&e11, &e11).unwrap());
        let other = w.subexpression(&vec![0, 1], |_| true).unwrap();
        assert_eq!(
            w.path_dominance_leq(&e11, &other),
            Err(CoxeterError::MismatchedExpressions)
        );
    }

    #[test]
    fn dominance_implies_endpoint_comparison() {
        let w = sys("A2");
        for len in 0..=6usize {
            for wordmask in 0..(1u64 << len) {
                let word: Expression =
                    (0..len).map(|i| (wordmask >> i & 1) as Color).collect();
                let subs = w.all_subexpressions(&word).unwrap();
                for a in &subs {
                    for b in &subs {
                        if w.path_dominance_leq(a, b).unwrap() {
                            assert!(w.bruhat_leq(a.endpoint(), b.endpoint()));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rex_enumeration() {
        let w = sys("A2");
        let w0 = w.from_word(&[0, 1, 0]).unwrap();
        let rexes = w.enumerate_rex(w0);
        assert_eq!(rexes, vec![vec![0, 1, 0], vec![1, 0, 1]]);
        let g = w.rex_graph(w0);
        assert_eq!(g.edges.len(), 1);
        assert!(g.is_connected());

        // A1xA1xA1: 6 rexes of w0 forming a hexagon of distant moves.
        let w = sys("A1xA1xA1");
        let w0 = w.from_word(&[0, 1, 2]).unwrap();
        let g = w.rex_graph(w0);
        assert_eq!(g.vertices.len(), 6);
        assert_eq!(g.edges.len(), 6);
        assert!(g.is_connected());
        assert!(g.edges.iter().all(|e| e.distant));

        // A3: 16 rexes of the longest element.
        let w = sys("A3");
        let w0 = w.from_word(&[0, 1, 0, 2, 1, 0]).unwrap();
        assert_eq!(w.length(w0), 6);
        let g = w.rex_graph(w0);
        assert_eq!(g.vertices.len(), 16);
        assert!(g.is_connected());
    }

    #[test]
    fn rex_lengths_and_connectivity() {
        for name in ["A2", "B2", "A3"] {
            let w = sys(name);
            for x in w.elements() {
                let g = w.rex_graph(x);
                assert!(g.is_connected());
                for rex in &g.vertices {
                    assert_eq!(rex.len(), w.length(x));
                    assert!(w.is_reduced(rex).unwrap());
                }
            }
        }
    }

    #[test]
    fn rex_path_is_valid() {
        let w = sys("A3");
        let w0 = w.from_word(&[0, 1, 0, 2, 1, 0]).unwrap();
        let rexes = w.enumerate_rex(w0);
        let path = w.rex_path(&rexes[0], &rexes[15]).unwrap();
        let mut cur = rexes[0].clone();
        for mv in &path {
            let moves = w.braid_moves(&cur);
            assert!(moves.contains(mv));
            cur = mv.result.clone();
        }
        assert_eq!(cur, rexes[15]);
    }

    #[test]
    fn word_parsing() {
        let r = preset_integral("A2").unwrap();
        assert_eq!(parse_word(&r, "s t s").unwrap(), vec![0, 1, 0]);
        assert!(matches!(parse_word(&r, "s q"), Err(CoxeterError::UnknownColor(_))));
    }
}

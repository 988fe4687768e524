//! Linear recursions among LLT polynomials: the corner identity linking
//! vertical-strip and unicellular diagrams, Lee's three-term relation and its
//! dual, the complete-graph recursions, and reduction drivers that express a
//! polynomial through simpler base cases.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use crate::coeff::{q_integer, LaurentPoly, RatFunc, VarShift};
use crate::colorings::llt_poly;
use crate::diagrams::{AreaSequence, StripDiagram};
use crate::error::{Error, Result};
use crate::orientations::lltc_poly;
use crate::partitions::Partition;
use crate::symfunc::{e_n, Basis, SymFunc};
use crate::{Form, Limits};

/// Which family of polynomials a recursion is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `G_{a,s}` from colorings.
    G,
    /// `LLTc_{a,s}` from orientations.
    Lltc,
}

/// Lee's relation or its transpose.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Lee,
    Dual,
}

/// The polynomial of `d` on the given side.
pub fn side_value(d: &StripDiagram, side: Side, form: Form, limits: &Limits) -> Result<SymFunc> {
    match side {
        Side::G => {
            let g = llt_poly(d, limits)?;
            match form {
                Form::Plain => Ok(g),
                Form::Shifted => g.shift_var(VarShift::Up),
            }
        }
        Side::Lltc => lltc_poly(d, form, limits),
    }
}

fn rat(p: LaurentPoly) -> RatFunc {
    RatFunc::from_poly(p)
}

fn q() -> LaurentPoly {
    LaurentPoly::q_pow(1)
}

/// `Σ c_k · [k]` with rational-function coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearExpression<K: Ord> {
    terms: BTreeMap<K, RatFunc>,
}

impl<K: Ord + Clone> LinearExpression<K> {
    pub fn zero() -> Self {
        LinearExpression { terms: BTreeMap::new() }
    }

    pub fn single(k: K) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(k, RatFunc::one());
        LinearExpression { terms }
    }

    pub fn terms(&self) -> &BTreeMap<K, RatFunc> {
        &self.terms
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Self, c: &RatFunc) {
        for (k, v) in &other.terms {
            let sum = match self.terms.get(k) {
                Some(old) => old.add(&v.mul(c)),
                None => v.mul(c),
            };
            if sum.is_zero() {
                self.terms.remove(k);
            } else {
                self.terms.insert(k.clone(), sum);
            }
        }
    }

    /// `Σ c_k · value(k)` over a common denominator, which must divide exactly.
    pub fn evaluate(&self, degree: usize, value: impl Fn(&K) -> Result<SymFunc>) -> Result<SymFunc> {
        let mut den = LaurentPoly::one();
        for c in self.terms.values() {
            let g = den.gcd(c.den());
            den = (&den * c.den()).div_exact(&g)?;
        }
        let mut acc = SymFunc::zero(degree, Basis::M);
        for (k, c) in &self.terms {
            let factor = c.num() * &den.div_exact(c.den())?;
            acc = acc.add(&value(k)?.scale(&factor))?;
        }
        acc.try_map_coeffs(|c| c.div_exact(&den))
    }
}

impl<K: Ord + fmt::Display> fmt::Display for LinearExpression<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})[{k}]")?;
        }
        Ok(())
    }
}

impl<K: Ord + fmt::Display> fmt::Debug for LinearExpression<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Both sides of `F_{a∪ε,s}(q+1) = F_{a,s}(q+1) + q F_{a,s∪ε}(q+1)` for an outer corner `ε`.
pub fn corner_identity_sides(
    d: &StripDiagram,
    eps: (usize, usize),
    side: Side,
    limits: &Limits,
) -> Result<(SymFunc, SymFunc)> {
    if !d.outer_corners().contains(&eps) {
        return Err(Error::NotAnOuterCorner(eps.0, eps.1));
    }
    let f = |x: &StripDiagram| side_value(x, side, Form::Shifted, limits);
    let lhs = f(&d.with_edge(eps.0, eps.1)?)?;
    let rhs = f(d)?.add(&f(&d.with_strict(eps.0, eps.1)?)?.scale(&q()))?;
    Ok((lhs, rhs))
}

pub fn corner_identity_check(d: &StripDiagram, eps: (usize, usize), side: Side, limits: &Limits) -> Result<bool> {
    let (lhs, rhs) = corner_identity_sides(d, eps, side, limits)?;
    Ok(lhs == rhs)
}

/// Writes `G_{a,s}` as a combination of unicellular `G_b` by repeatedly using
/// `G_{a,s∪ε} = (G_{a∪ε,s} - G_{a,s}) / (q - 1)`.
///
/// Strict edges are tried in reverse canonical order, backtracking when a
/// branch reaches a strict edge that is no longer an outer corner.
pub fn strip_to_unicellular(d: &StripDiagram) -> Result<LinearExpression<AreaSequence>> {
    if d.strict().is_empty() {
        return Ok(LinearExpression::single(d.area().clone()));
    }
    let mut order: Vec<(usize, usize)> = d.strict().iter().copied().collect();
    order.sort_by_key(|&(u, v)| std::cmp::Reverse((v, u)));
    let inv = RatFunc::new(LaurentPoly::one(), &q() - &LaurentPoly::one())?;
    for (u, v) in order {
        let base = d.without_strict(u, v);
        if !base.outer_corners().contains(&(u, v)) {
            continue;
        }
        let up = match strip_to_unicellular(&base.with_edge(u, v)?) {
            Err(Error::IrreducibleStrictEdge(_)) => continue,
            r => r?,
        };
        let down = match strip_to_unicellular(&base) {
            Err(Error::IrreducibleStrictEdge(_)) => continue,
            r => r?,
        };
        let mut out = LinearExpression::zero();
        out.add_scaled(&up, &inv);
        out.add_scaled(&down, &inv.neg());
        return Ok(out);
    }
    Err(Error::IrreducibleStrictEdge(d.to_string()))
}

/// The diagrams taking part in Lee's relation (or its dual) at an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeeTriple {
    pub a0: AreaSequence,
    pub a1: AreaSequence,
    pub a2: AreaSequence,
    /// Strict edge of the two-term identity on `a1`.
    pub s1: (usize, usize),
    /// Strict edge of the two-term identity on `a2`.
    pub s2: (usize, usize),
}

pub fn lee_triple(a: &AreaSequence, edge: (usize, usize), variant: Variant) -> Result<LeeTriple> {
    let (i, j) = edge;
    let allowed = match variant {
        Variant::Lee => a.admissible_edges(),
        Variant::Dual => a.dual_admissible_edges(),
    };
    if !allowed.contains(&edge) {
        return Err(Error::NotAdmissible(i, j));
    }
    let a1 = a.bumped(j, -1)?;
    let (a2, s2) = match variant {
        Variant::Lee => (a.bumped(j, -2)?, (i + 1, j)),
        Variant::Dual => (a1.bumped(j - 1, -1)?, (i, j - 1)),
    };
    Ok(LeeTriple { a0: a.clone(), a1, a2, s1: (i, j), s2 })
}

/// Both sides of `F_{a1,{s1}} = q F_{a2,{s2}}`.
pub fn two_term_sides(
    a: &AreaSequence,
    edge: (usize, usize),
    variant: Variant,
    side: Side,
    limits: &Limits,
) -> Result<(SymFunc, SymFunc)> {
    let t = lee_triple(a, edge, variant)?;
    let d1 = StripDiagram::new(t.a1, [t.s1].into())?;
    let d2 = StripDiagram::new(t.a2, [t.s2].into())?;
    let lhs = side_value(&d1, side, Form::Plain, limits)?;
    let rhs = side_value(&d2, side, Form::Plain, limits)?.scale(&q());
    Ok((lhs, rhs))
}

pub fn two_term_check(
    a: &AreaSequence,
    edge: (usize, usize),
    variant: Variant,
    side: Side,
    limits: &Limits,
) -> Result<bool> {
    let (lhs, rhs) = two_term_sides(a, edge, variant, side, limits)?;
    Ok(lhs == rhs)
}

/// Both sides of `F_{a0} - F_{a1} = q (F_{a1} - F_{a2})`.
pub fn lee_sides(
    a: &AreaSequence,
    edge: (usize, usize),
    variant: Variant,
    side: Side,
    limits: &Limits,
) -> Result<(SymFunc, SymFunc)> {
    let t = lee_triple(a, edge, variant)?;
    let f = |x: &AreaSequence| side_value(&StripDiagram::unicellular(x.clone()), side, Form::Plain, limits);
    let (g0, g1, g2) = (f(&t.a0)?, f(&t.a1)?, f(&t.a2)?);
    Ok((g0.sub(&g1)?, g1.sub(&g2)?.scale(&q())))
}

pub fn lee_check(
    a: &AreaSequence,
    edge: (usize, usize),
    variant: Variant,
    side: Side,
    limits: &Limits,
) -> Result<bool> {
    let (lhs, rhs) = lee_sides(a, edge, variant, side, limits)?;
    Ok(lhs == rhs)
}

/// `Σ_{S ⊆ [n-1], |S| = n-1-i} Π_j x^{s_j - j} (x^j - 1)` with `s_1 < s_2 < …`.
fn subset_sum(n: usize, i: usize, x: &LaurentPoly) -> LaurentPoly {
    let size = n - 1 - i;
    let one = LaurentPoly::one();
    let mut total = LaurentPoly::zero();
    for mask in 0u32..1 << (n - 1) {
        if mask.count_ones() as usize != size {
            continue;
        }
        let mut term = LaurentPoly::one();
        let members = (1..n).filter(|s| mask >> (s - 1) & 1 == 1);
        for (j, s) in (1..).zip(members) {
            term = &term * &(&x.pow((s - j) as u32) * &(&x.pow(j as u32) - &one));
        }
        total += &term;
    }
    total
}

/// Both sides of `Π_{k=i+1}^{n-1} (q^k - 1) = Σ_{S ⊆ [n-1], |S| = n-1-i} Π_j q^{s_j-j}(q^j - 1)`.
pub fn q_binomial_sides(n: usize, i: usize) -> Result<(LaurentPoly, LaurentPoly)> {
    if i >= n {
        return Err(Error::BadParams(format!("need i < n, got i={i}, n={n}")));
    }
    let one = LaurentPoly::one();
    let lhs = (i + 1..n).fold(LaurentPoly::one(), |acc, k| &acc * &(&LaurentPoly::q_pow(k as i64) - &one));
    Ok((lhs, subset_sum(n, i, &q())))
}

/// `G_{K_n}` or `LLTc_{K_n}` in the e-basis, built only from the recursion.
pub fn complete_rec(n: usize, side: Side) -> Result<SymFunc> {
    let one = LaurentPoly::one();
    let x = match side {
        Side::G => q(),
        Side::Lltc => LaurentPoly::from_ints(0, &[1, 1]),
    };
    let mut built: Vec<SymFunc> = vec![SymFunc::one()];
    for m in 1..=n {
        let mut acc = SymFunc::zero(m, Basis::E);
        for (i, prev) in built.iter().enumerate() {
            let c = match side {
                Side::G => (i + 1..m).fold(LaurentPoly::one(), |acc, k| &acc * &(&x.pow(k as u32) - &one)),
                Side::Lltc => subset_sum(m, i, &x),
            };
            acc = acc.add(&e_n(m - i).mul(prev)?.scale(&c))?;
        }
        built.push(acc);
    }
    let top = built.pop().expect("K_0 is present");
    match side {
        Side::G => Ok(top),
        Side::Lltc => top.shift_var(VarShift::Down),
    }
}

/// `G_{K_k} G_{K_{n-k}}` and `G_a` for the rectangular `a`.
pub fn rectangular_factorization_sides(k: usize, n: usize, limits: &Limits) -> Result<(SymFunc, SymFunc)> {
    if k == 0 || k > n {
        return Err(Error::BadParams(format!("need 1 ≤ k ≤ n, got k={k}, n={n}")));
    }
    let complete = |m: usize| -> Result<SymFunc> {
        if m == 0 {
            return Ok(SymFunc::one());
        }
        llt_poly(&StripDiagram::unicellular(AreaSequence::complete(m)), limits)
    };
    let direct = llt_poly(&StripDiagram::unicellular(AreaSequence::rectangular(k, n)?), limits)?;
    Ok((direct, complete(k)?.mul(&complete(n - k)?)?))
}

pub fn rectangular_factorization_check(k: usize, n: usize, limits: &Limits) -> Result<bool> {
    let (lhs, rhs) = rectangular_factorization_sides(k, n, limits)?;
    Ok(lhs == rhs)
}

/// Why one branch of the abelian reduction was abandoned.
enum Fail {
    Cycle,
    Depth(usize),
    Hard(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Hard(e)
    }
}

/// One use of Lee's relation, read as an equation for the current partition.
struct Step {
    /// `G_λ = Σ c · G_child`.
    children: Vec<(Partition, RatFunc)>,
}

struct AbelianReducer {
    n: usize,
    max_depth: usize,
    memo: HashMap<Partition, LinearExpression<Partition>>,
    active: HashSet<Partition>,
}

/// Default bound on the nesting of the abelian reduction.
pub const ABELIAN_DEPTH: usize = 64;

/// Expresses `G_λ` (λ abelian inside the staircase of size `n`) as a
/// combination of rectangular `G_μ`, following the case analysis
/// (empty, one full row, one row, domino removal, domino addition or row
/// reduction). Every use of Lee's relation is checked for admissibility.
pub fn abelian_reduce(lambda: &Partition, n: usize) -> Result<LinearExpression<Partition>> {
    abelian_reduce_with_depth(lambda, n, ABELIAN_DEPTH)
}

pub fn abelian_reduce_with_depth(
    lambda: &Partition,
    n: usize,
    max_depth: usize,
) -> Result<LinearExpression<Partition>> {
    let a = AreaSequence::from_staircase(lambda, n)?;
    if !a.is_abelian() {
        return Err(Error::NotAbelian(lambda.to_string()));
    }
    let mut r = AbelianReducer { n, max_depth, memo: HashMap::new(), active: HashSet::new() };
    match r.reduce(lambda, 0) {
        Ok(e) => Ok(e),
        Err(Fail::Hard(e)) => Err(e),
        Err(Fail::Depth(d)) => Err(Error::DepthExceeded(d)),
        Err(Fail::Cycle) => Err(Error::AdmissibilityViolation(format!("every reduction of {lambda} is circular"))),
    }
}

/// `G_μ` for a rectangular staircase partition, from colorings.
pub fn evaluate_staircase(expr: &LinearExpression<Partition>, n: usize, limits: &Limits) -> Result<SymFunc> {
    expr.evaluate(n, |mu| llt_poly(&StripDiagram::unicellular(AreaSequence::from_staircase(mu, n)?), limits))
}

impl AbelianReducer {
    fn area(&self, lambda: &[usize]) -> Option<AreaSequence> {
        AreaSequence::from_staircase(&Partition::new(lambda.to_vec()), self.n).ok()
    }

    /// Row `r` (1-indexed) corresponds to vertex `n + 1 - r`.
    fn vertex(&self, r: usize) -> usize {
        self.n + 1 - r
    }

    fn admissible(&self, a0: &[usize], r: usize, variant: Variant) -> bool {
        let Some(a) = self.area(a0) else { return false };
        let j = self.vertex(r);
        let i = j - a.a(j).min(j);
        lee_triple(&a, (i, j), variant).is_ok()
    }

    fn with_row(lambda: &[usize], r: usize, len: usize) -> Vec<usize> {
        let mut v = lambda.to_vec();
        if v.len() < r {
            v.resize(r, 0);
        }
        v[r - 1] = len;
        v
    }

    fn is_partition(v: &[usize]) -> bool {
        v.windows(2).all(|w| w[0] >= w[1])
    }

    fn part(lambda: &[usize], r: usize) -> usize {
        lambda.get(r - 1).copied().unwrap_or(0)
    }

    /// Lee at row `r` with `λ` in position `a2` (removing a horizontal domino).
    fn remove_horizontal(&self, lambda: &[usize], r: usize) -> Option<Step> {
        let len = Self::part(lambda, r);
        if len < 2 {
            return None;
        }
        let a0 = Self::with_row(lambda, r, len - 2);
        let a1 = Self::with_row(lambda, r, len - 1);
        if !Self::is_partition(&a0) || !self.admissible(&a0, r, Variant::Lee) {
            return None;
        }
        // G2 = ((1+q) G1 - G0) / q
        let inv_q = RatFunc::new(LaurentPoly::one(), q()).ok()?;
        let one_plus_q = rat(LaurentPoly::from_ints(0, &[1, 1]));
        Some(Step { children: vec![(Partition::new(a1), one_plus_q.mul(&inv_q)), (Partition::new(a0), inv_q.neg())] })
    }

    /// Dual Lee at rows `r, r+1` with `λ` in position `a2` (removing a vertical domino).
    fn remove_vertical(&self, lambda: &[usize], r: usize) -> Option<Step> {
        let len = Self::part(lambda, r);
        if len == 0 || Self::part(lambda, r + 1) != len {
            return None;
        }
        let a1 = Self::with_row(lambda, r + 1, len - 1);
        let a0 = Self::with_row(&a1, r, len - 1);
        if !Self::is_partition(&a0) || !Self::is_partition(&a1) || !self.admissible(&a0, r, Variant::Dual) {
            return None;
        }
        let inv_q = RatFunc::new(LaurentPoly::one(), q()).ok()?;
        let one_plus_q = rat(LaurentPoly::from_ints(0, &[1, 1]));
        Some(Step { children: vec![(Partition::new(a1), one_plus_q.mul(&inv_q)), (Partition::new(a0), inv_q.neg())] })
    }

    /// Lee at row `r` with `λ` in position `a0` (adding a horizontal domino).
    fn add_horizontal(&self, lambda: &[usize], r: usize) -> Option<Step> {
        let len = Self::part(lambda, r);
        let a1 = Self::with_row(lambda, r, len + 1);
        let a2 = Self::with_row(lambda, r, len + 2);
        if !Self::is_partition(&a2) || !self.abelian(&a2) || !self.admissible(lambda, r, Variant::Lee) {
            return None;
        }
        // G0 = (1+q) G1 - q G2
        Some(Step {
            children: vec![
                (Partition::new(a1), rat(LaurentPoly::from_ints(0, &[1, 1]))),
                (Partition::new(a2), rat(-q())),
            ],
        })
    }

    /// Dual Lee at rows `r, r+1` with `λ` in position `a0` (adding a vertical domino).
    fn add_vertical(&self, lambda: &[usize], r: usize) -> Option<Step> {
        let len = Self::part(lambda, r);
        if Self::part(lambda, r + 1) != len {
            return None;
        }
        let a1 = Self::with_row(lambda, r, len + 1);
        let a2 = Self::with_row(&a1, r + 1, len + 1);
        if !Self::is_partition(&a1) || !self.abelian(&a2) || !self.admissible(lambda, r, Variant::Dual) {
            return None;
        }
        Some(Step {
            children: vec![
                (Partition::new(a1), rat(LaurentPoly::from_ints(0, &[1, 1]))),
                (Partition::new(a2), rat(-q())),
            ],
        })
    }

    /// Telescoping Lee along row `r`: with `G_t` the partition whose row `r`
    /// has length `t` and `m = λ_r`,
    /// `G_m = (G_0 + (q + … + q^m) G_{m+1}) / [m+1]_q`.
    fn row_reduction(&self, lambda: &[usize], r: usize) -> Option<Step> {
        let m = Self::part(lambda, r);
        if m == 0 || lambda.len() != r {
            return None;
        }
        let next = Self::with_row(lambda, r, m + 1);
        if !Self::is_partition(&next) || self.area(&next).is_none() {
            return None;
        }
        for t in 0..m {
            if !self.admissible(&Self::with_row(lambda, r, t), r, Variant::Lee) {
                return None;
            }
        }
        let den = q_integer(m + 1);
        let s = &den - &LaurentPoly::one();
        Some(Step {
            children: vec![
                (Partition::new(Self::with_row(lambda, r, 0)), RatFunc::new(LaurentPoly::one(), den.clone()).ok()?),
                (Partition::new(next), RatFunc::new(s, den).ok()?),
            ],
        })
    }

    fn abelian(&self, lambda: &[usize]) -> bool {
        self.area(lambda).is_some_and(|a| a.is_abelian())
    }

    fn candidates(&self, lambda: &Partition) -> Vec<Step> {
        let l = lambda.len();
        let parts = lambda.parts();
        let mut out = Vec::new();
        if l == 1 {
            out.extend(self.row_reduction(parts, 1));
        } else if (1..=l).any(|i| parts[i - 1] <= l - i) {
            for r in 1..=l {
                out.extend(self.remove_horizontal(parts, r));
                out.extend(self.remove_vertical(parts, r));
            }
        } else {
            for r in 1..=l {
                out.extend(self.add_horizontal(parts, r));
                if r < l {
                    out.extend(self.add_vertical(parts, r));
                }
            }
            if parts[l - 1] < parts[l - 2] {
                out.extend(self.row_reduction(parts, l));
            }
        }
        out
    }

    fn reduce(&mut self, lambda: &Partition, depth: usize) -> std::result::Result<LinearExpression<Partition>, Fail> {
        if let Some(e) = self.memo.get(lambda) {
            return Ok(e.clone());
        }
        if self.active.contains(lambda) {
            return Err(Fail::Cycle);
        }
        if depth > self.max_depth {
            return Err(Fail::Depth(depth));
        }
        let a = AreaSequence::from_staircase(lambda, self.n)?;
        if a.is_rectangular() {
            return Ok(LinearExpression::single(lambda.clone()));
        }
        let steps = self.candidates(lambda);
        if steps.is_empty() {
            return Err(Fail::Hard(Error::AdmissibilityViolation(format!(
                "no admissible Lee step reduces {lambda} (n = {})",
                self.n
            ))));
        }
        self.active.insert(lambda.clone());
        let mut last = Fail::Cycle;
        'steps: for step in steps {
            let mut out = LinearExpression::zero();
            for (child, c) in &step.children {
                match self.reduce(child, depth + 1) {
                    Ok(e) => out.add_scaled(&e, c),
                    Err(Fail::Hard(e)) => {
                        self.active.remove(lambda);
                        return Err(Fail::Hard(e));
                    }
                    Err(f) => {
                        last = f;
                        continue 'steps;
                    }
                }
            }
            self.active.remove(lambda);
            self.memo.insert(lambda.clone(), out.clone());
            return Ok(out);
        }
        self.active.remove(lambda);
        Err(last)
    }
}

/// A complete graph followed by a disjoint path: `(0, 1, …, p-1, 0, 1, …, 1)`, `p ≥ 0`.
pub fn is_complete_line(a: &AreaSequence) -> bool {
    let v = a.values();
    let prefix = v.iter().enumerate().take_while(|&(i, &x)| x == i).count();
    (0..=prefix).any(|p| match &v[p..] {
        [] => true,
        [first, rest @ ..] => *first == 0 && rest.iter().all(|&x| x == 1),
    })
}

/// Expresses a melting lollipop through complete-plus-line base cases.
///
/// With `G_t` the melting lollipop `(m, t, n)` and `M = m - 1`, Lee's relation
/// in row `m` telescopes to `G_t = ([M-t] G_0 + q^{M-t} [t] G_M) / [M]`;
/// `G_M` is a base case and `G_0` is the melting lollipop `(m+1, m-1, n-1)`.
pub fn melting_lollipop_reduce(m: usize, k: usize, n: usize) -> Result<LinearExpression<AreaSequence>> {
    let a = AreaSequence::melting_lollipop(m, k, n)?;
    if is_complete_line(&a) {
        return Ok(LinearExpression::single(a));
    }
    if k == 0 {
        if n == 0 {
            return Err(Error::BadParams(format!("melting_lollipop({m},0,0) should be complete")));
        }
        return melting_lollipop_reduce(m + 1, m - 1, n - 1);
    }
    let big_m = m - 1;
    for t in 0..big_m - 1 {
        let a0 = AreaSequence::melting_lollipop(m, t, n)?;
        let i = m - a0.a(m);
        if !a0.admissible_edges().contains(&(i, m)) {
            return Err(Error::AdmissibilityViolation(format!("({i},{m}) in {a0}")));
        }
    }
    let g0 = melting_lollipop_reduce(m, 0, n)?;
    let top = LinearExpression::single(AreaSequence::melting_lollipop(m, big_m, n)?);
    let den = q_integer(big_m);
    let c0 = RatFunc::new(q_integer(big_m - k), den.clone())?;
    let c_top = RatFunc::new(&LaurentPoly::q_pow((big_m - k) as i64) * &q_integer(k), den)?;
    let mut out = LinearExpression::zero();
    out.add_scaled(&g0, &c0);
    out.add_scaled(&top, &c_top);
    Ok(out)
}

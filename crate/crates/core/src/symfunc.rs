//! Homogeneous symmetric functions with Laurent-polynomial coefficients.
//!
//! A [`Sym`] stores a sparse expansion in one of the classical bases. All
//! conversions pivot through the monomial basis using transition matrices
//! that are computed once per `(basis, degree)` and cached.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::coeff::{JsonScalar, Laurent, LaurentPoly, RatLaurentPoly, Scalar, VarShift};
use crate::error::{Error, Result};
use crate::partitions::{kostka, partitions_of, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    M,
    E,
    H,
    P,
    S,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::M => 'm',
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::P => 'p',
            Basis::S => 's',
        }
    }

    pub fn all() -> [Basis; 5] {
        [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S]
    }
}

impl std::str::FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(Basis::M),
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            "p" => Ok(Basis::P),
            "s" => Ok(Basis::S),
            _ => Err(Error::BadParams(format!("unknown basis {s:?}"))),
        }
    }
}

/// A homogeneous symmetric function of fixed degree.
#[derive(Clone)]
pub struct Sym<S: Scalar> {
    degree: usize,
    basis: Basis,
    terms: BTreeMap<Partition, Laurent<S>>,
}

/// Integer-coefficient symmetric function.
pub type SymFunc = Sym<BigInt>;
/// Rational-coefficient symmetric function, used where `1/z_λ` appears.
pub type RatSymFunc = Sym<BigRational>;

/// Row `λ` holds the monomial expansion of the basis element indexed by `λ`.
struct Transition {
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    rows: Vec<Vec<(usize, BigInt)>>,
}

type TransitionCache = RwLock<HashMap<(Basis, usize), Arc<Transition>>>;

fn transition(basis: Basis, n: usize) -> Arc<Transition> {
    static CACHE: OnceLock<TransitionCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = cache.read().expect("transition cache poisoned").get(&(basis, n)) {
        return t.clone();
    }
    let t = Arc::new(build_transition(basis, n));
    cache.write().expect("transition cache poisoned").entry((basis, n)).or_insert(t).clone()
}

fn build_transition(basis: Basis, n: usize) -> Transition {
    let parts = partitions_of(n);
    let index: HashMap<Partition, usize> = parts.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let rows = parts
        .iter()
        .map(|l| {
            parts
                .iter()
                .enumerate()
                .filter_map(|(j, mu)| {
                    let v = match basis {
                        Basis::M => BigInt::from(u8::from(l == mu)),
                        Basis::S => kostka(l, mu.parts()).expect("same size"),
                        Basis::H => count_matrices(l.parts(), mu.parts(), Fill::Any),
                        Basis::E => count_matrices(l.parts(), mu.parts(), Fill::ZeroOne),
                        Basis::P => count_matrices(l.parts(), mu.parts(), Fill::WholeRow),
                    };
                    (!v.is_zero()).then_some((j, v))
                })
                .collect()
        })
        .collect();
    Transition { parts, index, rows }
}

#[derive(Clone, Copy)]
enum Fill {
    /// Nonnegative integer matrices (`h` into `m`).
    Any,
    /// 0-1 matrices (`e` into `m`).
    ZeroOne,
    /// Each row concentrated in a single column (`p` into `m`).
    WholeRow,
}

/// Matrices with the given row sums and column sums under a fill rule.
fn count_matrices(rows: &[usize], cols: &[usize], fill: Fill) -> BigInt {
    fn rec(rows: &[usize], caps: Vec<usize>, fill: Fill, memo: &mut HashMap<(usize, Vec<usize>), BigInt>) -> BigInt {
        let Some((&r, rest)) = rows.split_first() else {
            return BigInt::from(u8::from(caps.iter().all(|&c| c == 0)));
        };
        let key = (rows.len(), caps.clone());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        let mut caps = caps;
        distribute(r, 0, &mut caps, fill, &mut |c| {
            let mut sorted = c.to_vec();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            total += rec(rest, sorted, fill, memo);
        });
        memo.insert(key, total.clone());
        total
    }
    fn distribute(left: usize, col: usize, caps: &mut Vec<usize>, fill: Fill, f: &mut dyn FnMut(&[usize])) {
        if left == 0 {
            f(caps);
            return;
        }
        if col == caps.len() {
            return;
        }
        let max = match fill {
            Fill::Any => caps[col].min(left),
            Fill::ZeroOne => caps[col].min(left).min(1),
            Fill::WholeRow => {
                if caps[col] >= left {
                    left
                } else {
                    0
                }
            }
        };
        for take in (0..=max).rev() {
            if matches!(fill, Fill::WholeRow) && take != 0 && take != left {
                continue;
            }
            caps[col] -= take;
            distribute(left - take, col + 1, caps, fill, f);
            caps[col] += take;
        }
    }
    let mut memo = HashMap::new();
    rec(rows, cols.to_vec(), fill, &mut memo)
}

impl<S: Scalar> Sym<S> {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        Sym { degree, basis, terms: BTreeMap::new() }
    }

    /// The constant function `1` in degree 0.
    pub fn one() -> Self {
        Self::basis_element(Basis::E, Partition::empty())
    }

    /// The single basis element `b_λ`.
    pub fn basis_element(basis: Basis, index: Partition) -> Self {
        let mut terms = BTreeMap::new();
        let degree = index.size();
        terms.insert(index, Laurent::one());
        Sym { degree, basis, terms }
    }

    /// Builds from `(index, coefficient)` pairs, summing repeats and dropping zeros.
    pub fn from_terms(
        degree: usize,
        basis: Basis,
        terms: impl IntoIterator<Item = (Partition, Laurent<S>)>,
    ) -> Result<Self> {
        let mut out = Self::zero(degree, basis);
        for (p, c) in terms {
            if p.size() != degree {
                return Err(Error::SizeMismatch(format!("{p} in degree {degree}")));
            }
            out.add_term(p, &c);
        }
        Ok(out)
    }

    /// Monomial-basis function from content counts.
    pub fn from_monomials(degree: usize, counts: BTreeMap<Partition, Laurent<S>>) -> Result<Self> {
        Self::from_terms(degree, Basis::M, counts)
    }

    fn add_term(&mut self, p: Partition, c: &Laurent<S>) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Laurent<S>> {
        &self.terms
    }

    pub fn coeff(&self, p: &Partition) -> Laurent<S> {
        self.terms.get(p).cloned().unwrap_or_else(Laurent::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Monomial expansion, which never leaves the coefficient ring.
    pub fn to_m(&self) -> Self {
        if self.basis == Basis::M {
            return self.clone();
        }
        let t = transition(self.basis, self.degree);
        let mut acc: Vec<Laurent<S>> = vec![Laurent::zero(); t.parts.len()];
        for (p, c) in &self.terms {
            for (j, v) in &t.rows[t.index[p]] {
                acc[*j] += &c.scale(&S::from_bigint(v));
            }
        }
        Self::collect(self.degree, Basis::M, &t.parts, acc)
    }

    fn collect(degree: usize, basis: Basis, parts: &[Partition], acc: Vec<Laurent<S>>) -> Self {
        Sym { degree, basis, terms: parts.iter().cloned().zip(acc).filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Expands in `target`. Over the integers this fails only for the power-sum
    /// basis when some `z_λ` denominator survives.
    pub fn to_basis(&self, target: Basis) -> Result<Self> {
        if target == self.basis {
            return Ok(self.clone());
        }
        let m = self.to_m();
        let n = self.degree;
        match target {
            Basis::M => Ok(m),
            Basis::S | Basis::E => {
                let t = transition(target, n);
                let mut r: Vec<Laurent<S>> = t.parts.iter().map(|p| m.coeff(p)).collect();
                let mut out = vec![Laurent::zero(); t.parts.len()];
                for i in 0..t.parts.len() {
                    if r[i].is_zero() {
                        continue;
                    }
                    let c = r[i].clone();
                    // s_μ leads with m_μ; e_{μ'} leads with m_μ.
                    let lead = match target {
                        Basis::S => i,
                        _ => t.index[&t.parts[i].conjugate()],
                    };
                    for (j, v) in &t.rows[lead] {
                        r[*j] -= &c.scale(&S::from_bigint(v));
                    }
                    out[lead] = c;
                }
                Ok(Self::collect(n, target, &t.parts, out))
            }
            Basis::H => {
                let w = m.omega().to_basis(Basis::E)?;
                Ok(Sym { degree: n, basis: Basis::H, terms: w.terms })
            }
            Basis::P => {
                let t = transition(Basis::P, n);
                let mut r: Vec<Laurent<S>> = t.parts.iter().map(|p| m.coeff(p)).collect();
                let mut out = vec![Laurent::zero(); t.parts.len()];
                // p_μ only involves m_ν with ν ⊵ μ, so sweep from the lex-smallest.
                for i in (0..t.parts.len()).rev() {
                    if r[i].is_zero() {
                        continue;
                    }
                    let diag = t.rows[i].iter().find(|(j, _)| *j == i).expect("p_μ has m_μ").1.clone();
                    let c = r[i]
                        .div_scalar(&S::from_bigint(&diag))
                        .ok_or_else(|| Error::NonIntegralCoefficient(format!("p{}", t.parts[i])))?;
                    for (j, v) in &t.rows[i] {
                        r[*j] -= &c.scale(&S::from_bigint(v));
                    }
                    out[i] = c;
                }
                Ok(Self::collect(n, Basis::P, &t.parts, out))
            }
        }
    }

    /// The involution `ω` (`h ↔ e`, `s_λ ↔ s_λ'`, `p_λ ↦ ±p_λ`), kept in the same basis.
    pub fn omega(&self) -> Self {
        let relabel = |basis, terms| Sym { degree: self.degree, basis, terms };
        match self.basis {
            Basis::E => relabel(Basis::H, self.terms.clone()),
            Basis::H => relabel(Basis::E, self.terms.clone()),
            Basis::S => relabel(Basis::S, self.terms.iter().map(|(p, c)| (p.conjugate(), c.clone())).collect()),
            Basis::P => relabel(
                Basis::P,
                self.terms
                    .iter()
                    .map(|(p, c)| {
                        let odd = (p.size() - p.len()) % 2 == 1;
                        (p.clone(), if odd { -c } else { c.clone() })
                    })
                    .collect(),
            ),
            Basis::M => self.to_basis(Basis::S).expect("Schur expansion is integral").omega().to_m(),
        }
        .rebased(self.basis)
    }

    /// Converts to `basis` if that stays in the ring, otherwise leaves the basis as is.
    fn rebased(self, basis: Basis) -> Self {
        if self.basis == basis {
            return self;
        }
        self.to_basis(basis).unwrap_or(self)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let rhs = other.to_basis(self.basis).or_else(|_| other.to_basis(Basis::M))?;
        let mut out = if rhs.basis == self.basis { self.clone() } else { self.to_m() };
        for (p, c) in rhs.terms {
            out.add_term(p, &c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c)
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree && !(self.is_zero() && other.is_zero()) {
            return Err(Error::SizeMismatch(format!("degree {} vs degree {}", self.degree, other.degree)));
        }
        Ok(())
    }

    /// Multiplies every coefficient by a Laurent polynomial.
    pub fn scale(&self, k: &Laurent<S>) -> Self {
        self.map_coeffs(|c| c * k)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Laurent<S>) -> Laurent<S>) -> Self {
        let mut out = Self::zero(self.degree, self.basis);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), &f(c));
        }
        out
    }

    pub fn try_map_coeffs(&self, f: impl Fn(&Laurent<S>) -> Result<Laurent<S>>) -> Result<Self> {
        let mut out = Self::zero(self.degree, self.basis);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), &f(c)?);
        }
        Ok(out)
    }

    /// Applies a substitution of `q` to every coefficient.
    pub fn shift_var(&self, mode: VarShift) -> Result<Self> {
        self.try_map_coeffs(|c| c.shift_var(mode))
    }

    /// Product; the result is expressed in `self`'s basis when that is integral,
    /// otherwise in the elementary basis.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let multiplicative = |b: Basis| matches!(b, Basis::E | Basis::H | Basis::P);
        let (lhs, rhs) = if self.basis == other.basis && multiplicative(self.basis) {
            (self.clone(), other.clone())
        } else {
            (self.to_basis(Basis::E)?, other.to_basis(Basis::E)?)
        };
        let mut out = Self::zero(self.degree + other.degree, lhs.basis);
        for (p, c) in &lhs.terms {
            for (r, d) in &rhs.terms {
                out.add_term(p.union(r), &(c * d));
            }
        }
        Ok(out.rebased(self.basis))
    }

    /// Positivity in `basis`: every coefficient lies in `N[q]`. Returns the first
    /// offending coefficient, or `None` when positive.
    pub fn positivity_witness(&self, basis: Basis) -> Result<Option<(Partition, Laurent<S>)>> {
        let f = self.to_basis(basis)?;
        Ok(f.terms.into_iter().find(|(_, c)| !c.is_in_nq()))
    }

    pub fn is_positive(&self, basis: Basis) -> Result<bool> {
        Ok(self.positivity_witness(basis)?.is_none())
    }

    /// Expands into an explicit polynomial in `k` variables: exponent vector to coefficient.
    pub fn monomial_expansion(&self, k: usize) -> BTreeMap<Vec<usize>, Laurent<S>> {
        let m = self.to_m();
        let mut out = BTreeMap::new();
        for (p, c) in &m.terms {
            if p.len() > k {
                continue;
            }
            let mut exps = p.parts().to_vec();
            exps.resize(k, 0);
            exps.sort_unstable();
            loop {
                out.insert(exps.clone(), c.clone());
                if !next_permutation(&mut exps) {
                    break;
                }
            }
        }
        out
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl SymFunc {
    pub fn to_rational(&self) -> RatSymFunc {
        Sym {
            degree: self.degree,
            basis: self.basis,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), c.to_rational())).collect(),
        }
    }

    /// Power-sum expansion, promoting to rational coefficients.
    pub fn to_p_rational(&self) -> RatSymFunc {
        self.to_rational().to_basis(Basis::P).expect("rational power-sum expansion exists")
    }

    /// The alphabet substitution `X ↦ X(q - 1)`: `p_k ↦ (q^k - 1) p_k`.
    pub fn pleth_scale(&self) -> RatSymFunc {
        self.to_p_rational().pleth_scale()
    }
}

impl RatSymFunc {
    /// The alphabet substitution `X ↦ X(q - 1)` in the power-sum basis.
    pub fn pleth_scale(&self) -> RatSymFunc {
        let p = self.to_basis(Basis::P).expect("rational power-sum expansion exists");
        let mut out = Sym::zero(p.degree, Basis::P);
        for (lambda, c) in &p.terms {
            let mut factor = RatLaurentPoly::one();
            for &k in lambda.parts() {
                factor = &factor * &(&RatLaurentPoly::q_pow(k as i64) - &RatLaurentPoly::one());
            }
            out.add_term(lambda.clone(), &(c * &factor));
        }
        out
    }

    /// Integer-coefficient version in the same basis, if every coefficient is integral.
    pub fn to_integer(&self) -> Option<SymFunc> {
        let terms =
            self.terms.iter().map(|(p, c)| Some((p.clone(), c.to_integer()?))).collect::<Option<BTreeMap<_, _>>>()?;
        Some(Sym { degree: self.degree, basis: self.basis, terms })
    }
}

impl<S: Scalar> PartialEq for Sym<S> {
    /// Equality as symmetric functions, independent of the stored basis.
    fn eq(&self, other: &Self) -> bool {
        if self.is_zero() && other.is_zero() {
            return true;
        }
        if self.degree != other.degree {
            return false;
        }
        if self.basis == other.basis {
            return self.terms == other.terms;
        }
        self.to_m().terms == other.to_m().terms
    }
}

impl<S: Scalar> fmt::Display for Sym<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| {
                if c.is_one() {
                    format!("{}{p}", self.basis.letter())
                } else {
                    format!("({c}){}{p}", self.basis.letter())
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<S: Scalar> fmt::Debug for Sym<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "S: JsonScalar")]
struct JsonTerm<S: Scalar> {
    index: Partition,
    coeff: Laurent<S>,
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "S: JsonScalar")]
struct JsonSym<S: Scalar> {
    degree: usize,
    basis: Basis,
    terms: Vec<JsonTerm<S>>,
}

impl<S: JsonScalar> Serialize for Sym<S> {
    fn serialize<Z: serde::Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        JsonSym {
            degree: self.degree,
            basis: self.basis,
            terms: self.terms.iter().map(|(p, c)| JsonTerm { index: p.clone(), coeff: c.clone() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de, S: JsonScalar> Deserialize<'de> for Sym<S> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = JsonSym::<S>::deserialize(d)?;
        Sym::from_terms(raw.degree, raw.basis, raw.terms.into_iter().map(|t| (t.index, t.coeff)))
            .map_err(serde::de::Error::custom)
    }
}

/// `e_n` as a symmetric function.
pub fn e_n(n: usize) -> SymFunc {
    SymFunc::basis_element(Basis::E, Partition::new(vec![n]))
}

/// Convenience for tests and fixtures: `Σ c_λ b_λ` from small integer coefficient lists.
pub fn sym_from_ints(basis: Basis, terms: &[(&[usize], i64, &[i64])]) -> SymFunc {
    let degree = terms.first().map_or(0, |t| t.0.iter().sum());
    SymFunc::from_terms(
        degree,
        basis,
        terms.iter().map(|(p, min, c)| (Partition::new(p.to_vec()), LaurentPoly::from_ints(*min, c))),
    )
    .expect("consistent degrees")
}

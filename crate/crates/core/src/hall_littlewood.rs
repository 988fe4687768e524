//! Transformed Hall–Littlewood polynomials via raising operators, Kostka–Foulkes
//! polynomials, and the vertical-strip diagram `Γ_μ` whose LLT polynomial is a
//! Hall–Littlewood polynomial.

use std::collections::{BTreeMap, BTreeSet};

use crate::coeff::LaurentPoly;
use crate::colorings::llt_poly;
use crate::diagrams::{AreaSequence, StripDiagram};
use crate::error::{Error, Result};
use crate::orientations::OrientationSpace;
use crate::partitions::Partition;
use crate::symfunc::{Basis, SymFunc};
use crate::Limits;

/// Which expansion of `(1 - R)/(1 - qR)` the raising operators use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Series {
    /// `1 + Σ_{t≥1} (q^t - q^{t-1}) R^t`, giving `H_λ(x; q)`.
    Standard,
    /// `1 + Σ_{t≥1} q(1+q)^{t-1} R^t`, giving `H_λ(x; q + 1)` directly.
    Shifted,
}

impl Series {
    fn coeff(self, t: u32) -> LaurentPoly {
        if t == 0 {
            return LaurentPoly::one();
        }
        match self {
            Series::Standard => LaurentPoly::q_pow(t as i64) - LaurentPoly::q_pow(t as i64 - 1),
            Series::Shifted => LaurentPoly::q_pow(1) * LaurentPoly::from_ints(0, &[1, 1]).pow(t - 1),
        }
    }
}

/// `H_λ = Π_{i<j} (1 - R_ij)/(1 - q R_ij) h_λ` in the h-basis.
///
/// Pairs are applied with the second index descending, so once every pair
/// ending in `j` has acted, entry `j` is final and each series can stop as
/// soon as it would drive that entry negative.
pub fn hl_transformed(lambda: &Partition, series: Series) -> SymFunc {
    let n = lambda.size();
    if n == 0 {
        return SymFunc::one();
    }
    let mut start: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    start.resize(n, 0);
    let mut state: BTreeMap<Vec<i64>, LaurentPoly> = BTreeMap::new();
    state.insert(start, LaurentPoly::one());
    let coeffs: Vec<LaurentPoly> = (0..=n as u32).map(|t| series.coeff(t)).collect();
    for j in (1..n).rev() {
        for i in (0..j).rev() {
            let mut next: BTreeMap<Vec<i64>, LaurentPoly> = BTreeMap::new();
            for (v, c) in state {
                for t in 0..=v[j] {
                    let mut w = v.clone();
                    w[i] += t;
                    w[j] -= t;
                    let term = &c * &coeffs[t as usize];
                    let slot = next.entry(w).or_insert_with(LaurentPoly::zero);
                    *slot += &term;
                }
            }
            next.retain(|_, c| !c.is_zero());
            state = next;
        }
    }
    let terms = state.into_iter().map(|(v, c)| (Partition::new(v.into_iter().map(|x| x as usize).collect()), c));
    SymFunc::from_terms(n, Basis::H, terms).expect("raising preserves the degree")
}

/// The Kostka–Foulkes polynomial `K_λμ(q)`, the `s_λ`-coefficient of `H_μ`.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Result<LaurentPoly> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!("|{lambda}| != |{mu}|")));
    }
    Ok(hl_transformed(mu, Series::Standard).to_basis(Basis::S)?.coeff(lambda))
}

/// `Σ_{i≥2} C(μ_i, 2)`, the number of triangle edges of `Γ_μ`.
pub fn triangle_count(mu: &Partition) -> usize {
    mu.parts().iter().skip(1).map(|&m| m * m.saturating_sub(1) / 2).sum()
}

/// The edges of `Γ_μ` joining consecutive blocks.
///
/// Block `j` is `{s_{j-1}+1, …, s_j}` with `s_j = μ_1 + … + μ_j`; block `j ≥ 2`
/// is attached by `s_{j-1} - i → s_{j-1} + k + 1` for `i, k ≥ 0`, `i + k ≤ μ_j - 2`.
pub fn triangle_edges(mu: &Partition) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut s = 0;
    for (j, &m) in mu.parts().iter().enumerate() {
        if j > 0 && m >= 2 {
            for i in 0..=m - 2 {
                for k in 0..=m - 2 - i {
                    out.push((s - i, s + k + 1));
                }
            }
        }
        s += m;
    }
    out.sort_by_key(|&(u, v)| (v, u));
    out
}

/// The vertical-strip diagram `Γ_μ`: a clique on each block, the triangle
/// edges between blocks, and every outer corner marked strict.
pub fn gamma_mu(mu: &Partition) -> Result<StripDiagram> {
    let n = mu.size();
    if n == 0 {
        return Err(Error::BadParams("Γ_μ needs a nonempty partition".into()));
    }
    let mut edges: BTreeSet<(usize, usize)> = triangle_edges(mu).into_iter().collect();
    let mut s = 0;
    for &m in mu.parts() {
        for v in s + 1..=s + m {
            for u in s + 1..v {
                edges.insert((u, v));
            }
        }
        s += m;
    }
    let mut area = vec![0; n];
    for &(_, v) in &edges {
        area[v - 1] += 1;
    }
    let contiguous = edges.iter().all(|&(u, v)| u + area[v - 1] >= v);
    let a = AreaSequence::new(area)
        .ok()
        .filter(|_| contiguous)
        .ok_or_else(|| Error::NotUnitInterval(format!("edge set of Γ_{mu}")))?;
    let base = StripDiagram::unicellular(a.clone());
    StripDiagram::new(a, base.outer_corners().into_iter().collect())
}

/// Both sides of `ωG_{Γμ}(x; q) = q^{Σ_{i≥2} C(μ_i,2)} H_{μ'}(x; q)`.
pub fn hl_relation_sides(mu: &Partition, limits: &Limits) -> Result<(SymFunc, SymFunc)> {
    let lhs = llt_poly(&gamma_mu(mu)?, limits)?.omega();
    let prefactor = LaurentPoly::q_pow(triangle_count(mu) as i64);
    let rhs = hl_transformed(&mu.conjugate(), Series::Standard).scale(&prefactor);
    Ok((lhs, rhs))
}

pub fn check_hl_relation(mu: &Partition, limits: &Limits) -> Result<bool> {
    let (lhs, rhs) = hl_relation_sides(mu, limits)?;
    Ok(lhs == rhs)
}

/// Outcome of comparing the triangle-restricted orientation sum with `ωH_{μ'}`.
#[derive(Clone, Debug, PartialEq)]
pub struct RestrictedSumOutcome {
    /// `Σ q^asc e_hrvpp` over orientations of `Γ_μ` with every triangle edge ascending.
    pub restricted: SymFunc,
    /// `q^{Σ C(μ_i,2)} ωH_{μ'}(x; q + 1)`.
    pub target: SymFunc,
}

impl RestrictedSumOutcome {
    pub fn agrees(&self) -> bool {
        self.restricted == self.target
    }
}

/// Tests the tempting guess that forcing the triangle edges of `Γ_μ` to
/// ascend isolates `ωH_{μ'}(x; q + 1)` (up to the `q` those edges contribute).
pub fn restricted_orientation_sum(mu: &Partition, limits: &Limits) -> Result<RestrictedSumOutcome> {
    let d = gamma_mu(mu)?;
    let space = OrientationSpace::new(&d, limits)?;
    let forced = space.mask_of(&triangle_edges(mu));
    let mut acc: BTreeMap<Partition, LaurentPoly> = BTreeMap::new();
    for mask in 0..space.count() {
        if mask & forced == forced {
            *acc.entry(space.hrvpp(mask)).or_insert_with(LaurentPoly::zero) +=
                &LaurentPoly::q_pow(space.asc(mask) as i64);
        }
    }
    let restricted = SymFunc::from_terms(mu.size(), Basis::E, acc)?;
    let prefactor = LaurentPoly::q_pow(triangle_count(mu) as i64);
    let target = hl_transformed(&mu.conjugate(), Series::Shifted).omega().scale(&prefactor);
    Ok(RestrictedSumOutcome { restricted, target })
}

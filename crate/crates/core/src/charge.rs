//! Generalized cocharge `wt_a` on standard tableaux, the Schur-positive
//! polynomial `G̃_a` built from it, and its orientation expansion.

use std::collections::BTreeSet;

use crate::coeff::{LaurentPoly, VarShift};
use crate::colorings::llt_poly;
use crate::diagrams::{AreaSequence, StripDiagram};
use crate::error::{Error, Result};
use crate::orientations::{charge_rhs, OrientationSpace};
use crate::partitions::{partitions_of, syt_enumerate, Tableau};
use crate::symfunc::{Basis, SymFunc};
use crate::{Form, Limits};

fn checked_descents(a: &AreaSequence, t: &Tableau) -> Result<BTreeSet<usize>> {
    if !t.is_standard() {
        return Err(Error::NotStandard(format!("{:?}", t.rows())));
    }
    if t.size() != a.n() {
        return Err(Error::SizeMismatch(format!("tableau of size {} for n = {}", t.size(), a.n())));
    }
    Ok(t.descents())
}

/// `wt_a(T) = Σ_{i ∈ Des(T)} a_{n+1-i}`.
pub fn wt(a: &AreaSequence, t: &Tableau) -> Result<usize> {
    let n = a.n();
    Ok(checked_descents(a, t)?.iter().map(|&i| a.a(n + 1 - i)).sum())
}

/// `modwt_a(T) = Σ_{i ∈ [n-1] \ Des(T)} a_{n+1-i}`, which equals `wt_a(T')`.
pub fn modwt(a: &AreaSequence, t: &Tableau) -> Result<usize> {
    let n = a.n();
    let des = checked_descents(a, t)?;
    Ok((1..n).filter(|i| !des.contains(i)).map(|i| a.a(n + 1 - i)).sum())
}

fn tableau_sum(a: &AreaSequence, stat: impl Fn(&BTreeSet<usize>) -> usize) -> SymFunc {
    let n = a.n();
    let terms = partitions_of(n).into_iter().map(|lambda| {
        let mut c = LaurentPoly::zero();
        for (_, des) in syt_enumerate(&lambda) {
            c += &LaurentPoly::q_pow(stat(&des) as i64);
        }
        (lambda, c)
    });
    SymFunc::from_terms(n, Basis::S, terms).expect("shapes are partitions of n")
}

/// `G̃_a = Σ_λ Σ_{T ∈ SYT(λ)} q^{wt_a(T)} s_λ`.
pub fn g_tilde(a: &AreaSequence) -> SymFunc {
    let n = a.n();
    tableau_sum(a, |des| des.iter().map(|&i| a.a(n + 1 - i)).sum())
}

/// `ωG̃_a = Σ_λ Σ_T q^{modwt_a(T)} s_λ`, assembled directly from `modwt`.
pub fn omega_g_tilde(a: &AreaSequence) -> SymFunc {
    let n = a.n();
    tableau_sum(a, |des| (1..n).filter(|i| !des.contains(i)).map(|i| a.a(n + 1 - i)).sum())
}

/// `G̃_a == G_a`, for area sequences in one of the named families.
pub fn check_family_equality(a: &AreaSequence, limits: &Limits) -> Result<bool> {
    if a.named_families().is_empty() {
        return Err(Error::NotInFamilies(a.to_string()));
    }
    Ok(g_tilde(a) == llt_poly(&StripDiagram::unicellular(a.clone()), limits)?)
}

/// `G̃_a == G_a` without the family precondition.
pub fn g_tilde_equals_llt(a: &AreaSequence, limits: &Limits) -> Result<bool> {
    Ok(g_tilde(a) == llt_poly(&StripDiagram::unicellular(a.clone()), limits)?)
}

/// Both sides of `G̃_a(x; q+1) = Σ_θ q^{asc θ} e_{σ(θ)}`.
pub fn charge_theorem_sides(a: &AreaSequence, limits: &Limits) -> Result<(SymFunc, SymFunc)> {
    let lhs = g_tilde(a).shift_var(VarShift::Up)?;
    let rhs = charge_rhs(&StripDiagram::unicellular(a.clone()), Form::Shifted, limits)?;
    Ok((lhs, rhs))
}

pub fn check_charge_theorem(a: &AreaSequence, limits: &Limits) -> Result<bool> {
    let (lhs, rhs) = charge_theorem_sides(a, limits)?;
    Ok(lhs == rhs)
}

/// Both sides of the fixed-tableau identity
/// `Π_{i ∉ Des T} (1+q)^{a_{n+1-i}} = Σ_{θ : Des T ⊆ D(σ θ)} q^{asc θ}`,
/// the right side by brute force over all orientations.
pub fn fixed_tableau_sides(a: &AreaSequence, t: &Tableau, limits: &Limits) -> Result<(LaurentPoly, LaurentPoly)> {
    let n = a.n();
    let lhs = LaurentPoly::from_ints(0, &[1, 1]).pow(modwt(a, t)? as u32);
    let des = t.descents();
    let space = OrientationSpace::new(&StripDiagram::unicellular(a.clone()), limits)?;
    let mut rhs = LaurentPoly::zero();
    for mask in 0..space.count() {
        let d = space.sigma(mask)?.d_set();
        if des.iter().all(|i| d.contains(i)) && des.iter().all(|&i| i < n) {
            rhs += &LaurentPoly::q_pow(space.asc(mask) as i64);
        }
    }
    Ok((lhs, rhs))
}

pub fn check_fixed_tableau(a: &AreaSequence, t: &Tableau, limits: &Limits) -> Result<bool> {
    let (lhs, rhs) = fixed_tableau_sides(a, t, limits)?;
    Ok(lhs == rhs)
}

/// Area sequences of length `n`, in enumeration order, split by whether `G̃_a = G_a`.
pub fn equality_locus(n: usize, limits: &Limits) -> Result<(Vec<AreaSequence>, Vec<AreaSequence>)> {
    let mut equal = Vec::new();
    let mut unequal = Vec::new();
    for a in AreaSequence::enumerate(n) {
        if g_tilde_equals_llt(&a, limits)? {
            equal.push(a);
        } else {
            unequal.push(a);
        }
    }
    Ok((equal, unequal))
}

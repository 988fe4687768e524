//! Verification sweeps: each check expands into a deterministic list of
//! instances, evaluated in parallel and reported in instance order.

use std::fmt::Display;

use rayon::prelude::*;

use crate::charge::{charge_theorem_sides, check_fixed_tableau, g_tilde};
use crate::coeff::{LaurentPoly, VarShift};
use crate::colorings::{llt_poly, pleth_sides};
use crate::diagrams::{AreaSequence, StripDiagram};
use crate::error::{Error, Result};
use crate::hall_littlewood::{hl_relation_sides, hl_transformed, Series};
use crate::orientations::lltc_poly;
use crate::partitions::{partitions_of, syt_enumerate, Partition};
use crate::powersum::{check_b_theta, equivalent_conjecture_sides, pexpansion_sides};
use crate::recursions::{
    abelian_reduce, complete_rec, corner_identity_sides, evaluate_staircase, is_complete_line, lee_sides,
    melting_lollipop_reduce, q_binomial_sides, rectangular_factorization_sides, strip_to_unicellular, two_term_sides,
    Side, Variant,
};
use crate::symfunc::{Basis, SymFunc};
use crate::{Form, Limits};

/// A verification that can be swept over instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Conjecture,
    Omega,
    RowColArea,
    Corner,
    Lee,
    DualLee,
    TwoTerm,
    CompleteRec,
    QBinomial,
    Rectangular,
    LineGraph,
    AbelianReduce,
    StripReduce,
    MeltingLollipop,
    HlRelation,
    HlPositivity,
    Charge,
    FixedTableau,
    Family,
    Plethysm,
    Pexpansion,
    BTheta,
    Equivalent,
}

impl Check {
    pub const ALL: [Check; 23] = [
        Check::Conjecture,
        Check::Omega,
        Check::RowColArea,
        Check::Corner,
        Check::Lee,
        Check::DualLee,
        Check::TwoTerm,
        Check::CompleteRec,
        Check::QBinomial,
        Check::Rectangular,
        Check::LineGraph,
        Check::AbelianReduce,
        Check::StripReduce,
        Check::MeltingLollipop,
        Check::HlRelation,
        Check::HlPositivity,
        Check::Charge,
        Check::FixedTableau,
        Check::Family,
        Check::Plethysm,
        Check::Pexpansion,
        Check::BTheta,
        Check::Equivalent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Conjecture => "conjecture",
            Check::Omega => "omega",
            Check::RowColArea => "row-col-area",
            Check::Corner => "corner",
            Check::Lee => "lee",
            Check::DualLee => "dual-lee",
            Check::TwoTerm => "two-term",
            Check::CompleteRec => "complete-rec",
            Check::QBinomial => "q-binomial",
            Check::Rectangular => "rectangular",
            Check::LineGraph => "line-graph",
            Check::AbelianReduce => "abelian-reduce",
            Check::StripReduce => "strip-reduce",
            Check::MeltingLollipop => "melting-lollipop",
            Check::HlRelation => "hl-relation",
            Check::HlPositivity => "hl-positivity",
            Check::Charge => "charge",
            Check::FixedTableau => "fixed-tableau",
            Check::Family => "family",
            Check::Plethysm => "plethysm",
            Check::Pexpansion => "pexpansion",
            Check::BTheta => "b-theta",
            Check::Equivalent => "equivalent",
        }
    }

    pub fn from_name(s: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == s)
    }

    /// Whether the check is indexed by area sequences (and so accepts a single diagram).
    pub fn is_area_based(self) -> bool {
        !matches!(
            self,
            Check::CompleteRec
                | Check::QBinomial
                | Check::Rectangular
                | Check::LineGraph
                | Check::MeltingLollipop
                | Check::HlRelation
                | Check::HlPositivity
        )
    }
}

/// What a sweep ranges over.
#[derive(Clone, Debug)]
pub enum Scope {
    /// Every instance of size `1..=n`.
    UpTo(usize),
    /// Instances derived from one diagram.
    Diagram(StripDiagram),
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub scope: Scope,
    /// Conjecture sweeps: also every set of strict edges drawn from the outer corners.
    pub all_corners: bool,
    /// Take only every `k`-th area sequence at the largest size (enumeration order).
    pub sample_top: Option<usize>,
    pub limits: Limits,
}

impl SweepOptions {
    pub fn up_to(n: usize) -> Self {
        SweepOptions { scope: Scope::UpTo(n), all_corners: false, sample_top: None, limits: Limits::default() }
    }
}

/// The result of one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub instance: String,
    pub pass: bool,
    pub expected: String,
    pub actual: String,
}

impl Outcome {
    fn compare<T: PartialEq + Display>(instance: String, expected: T, actual: T) -> Outcome {
        let pass = expected == actual;
        Outcome { instance, pass, expected: expected.to_string(), actual: actual.to_string() }
    }

    fn holds(instance: String, pass: bool) -> Outcome {
        Outcome { instance, pass, expected: "true".into(), actual: pass.to_string() }
    }
}

/// All outcomes of one sweep, in instance order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepResult {
    pub check: Check,
    pub outcomes: Vec<Outcome>,
}

impl SweepResult {
    pub fn instances(&self) -> usize {
        self.outcomes.len()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Outcome> {
        self.outcomes.iter().filter(|o| !o.pass)
    }

    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.pass)
    }
}

type Task = Box<dyn Fn() -> Result<Outcome> + Send + Sync>;

fn task(f: impl Fn() -> Result<Outcome> + Send + Sync + 'static) -> Task {
    Box::new(f)
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::G => "G",
        Side::Lltc => "LLTc",
    }
}

fn unicellular_g(a: &AreaSequence, limits: &Limits) -> Result<SymFunc> {
    llt_poly(&StripDiagram::unicellular(a.clone()), limits)
}

/// Runs `check` over the instances selected by `opts` on the current rayon pool.
pub fn run_sweep(check: Check, opts: &SweepOptions) -> Result<SweepResult> {
    let tasks = build_tasks(check, opts)?;
    let results: Vec<Result<Outcome>> = tasks.par_iter().map(|t| t()).collect();
    let outcomes = results.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(SweepResult { check, outcomes })
}

fn areas(opts: &SweepOptions) -> Result<Vec<AreaSequence>> {
    match &opts.scope {
        Scope::UpTo(n) => {
            let mut out = Vec::new();
            for size in 1..=*n {
                let all = AreaSequence::enumerate(size);
                match opts.sample_top {
                    Some(k) if size == *n && k > 1 => out.extend(all.into_iter().step_by(k)),
                    _ => out.extend(all),
                }
            }
            Ok(out)
        }
        Scope::Diagram(d) => Ok(vec![d.area().clone()]),
    }
}

fn max_size(check: Check, opts: &SweepOptions) -> Result<usize> {
    match &opts.scope {
        Scope::UpTo(n) => Ok(*n),
        Scope::Diagram(_) => Err(Error::BadParams(format!("{} sweeps take --n, not a diagram", check.name()))),
    }
}

fn require_unicellular(check: Check, opts: &SweepOptions) -> Result<()> {
    match &opts.scope {
        Scope::Diagram(d) if !d.strict().is_empty() => {
            Err(Error::BadParams(format!("{} takes an area sequence without strict edges", check.name())))
        }
        _ => Ok(()),
    }
}

/// The diagrams a strip-aware sweep ranges over: a given diagram as is (or every
/// strict subset of its outer corners with `all_corners`), otherwise every area
/// sequence, expanded to all vertical strips when `expand` is set.
fn diagrams(opts: &SweepOptions, expand: bool) -> Result<Vec<StripDiagram>> {
    if let Scope::Diagram(d) = &opts.scope {
        return Ok(if opts.all_corners { StripDiagram::all_vertical_strips(d.area()) } else { vec![d.clone()] });
    }
    let mut out = Vec::new();
    for a in areas(opts)? {
        if expand {
            out.extend(StripDiagram::all_vertical_strips(&a));
        } else {
            out.push(StripDiagram::unicellular(a));
        }
    }
    Ok(out)
}

fn build_tasks(check: Check, opts: &SweepOptions) -> Result<Vec<Task>> {
    let limits = opts.limits;
    let mut tasks: Vec<Task> = Vec::new();
    match check {
        Check::Conjecture => {
            for d in diagrams(opts, opts.all_corners)? {
                tasks.push(task(move || {
                    Ok(Outcome::compare(format!("a={d}"), llt_poly(&d, &limits)?, lltc_poly(&d, Form::Plain, &limits)?))
                }));
            }
        }
        Check::Omega => {
            require_unicellular(check, opts)?;
            for a in areas(opts)? {
                tasks.push(task(move || {
                    let lhs = unicellular_g(&a, &limits)?.omega();
                    let rhs = unicellular_g(&a.transpose(), &limits)?
                        .shift_var(VarShift::Invert)?
                        .scale(&LaurentPoly::q_pow(a.total() as i64));
                    Ok(Outcome::compare(format!("a={a}"), lhs, rhs))
                }));
            }
        }
        Check::RowColArea => {
            require_unicellular(check, opts)?;
            for a in areas(opts)? {
                tasks.push(task(move || {
                    let sorted = |x: &AreaSequence| {
                        let mut v = x.values().to_vec();
                        v.sort_unstable();
                        AreaSequence::new(v).map(|s| s.to_string()).unwrap_or_else(|_| format!("{:?}", x))
                    };
                    Ok(Outcome::compare(format!("a={a}"), sorted(&a), sorted(&a.transpose())))
                }));
            }
        }
        Check::Corner => {
            for d in diagrams(opts, true)? {
                for eps in d.outer_corners() {
                    for side in [Side::G, Side::Lltc] {
                        let d = d.clone();
                        tasks.push(task(move || {
                            let (lhs, rhs) = corner_identity_sides(&d, eps, side, &limits)?;
                            Ok(Outcome::compare(
                                format!("a={d} corner {}-{} side {}", eps.0, eps.1, side_name(side)),
                                lhs,
                                rhs,
                            ))
                        }));
                    }
                }
            }
        }
        Check::Lee | Check::DualLee | Check::TwoTerm => {
            require_unicellular(check, opts)?;
            let variants: &[Variant] = match check {
                Check::Lee => &[Variant::Lee],
                Check::DualLee => &[Variant::Dual],
                _ => &[Variant::Lee, Variant::Dual],
            };
            for a in areas(opts)? {
                for &variant in variants {
                    let edges = match variant {
                        Variant::Lee => a.admissible_edges(),
                        Variant::Dual => a.dual_admissible_edges(),
                    };
                    for e in edges {
                        for side in [Side::G, Side::Lltc] {
                            let a = a.clone();
                            let two_term = check == Check::TwoTerm;
                            tasks.push(task(move || {
                                let (lhs, rhs) = if two_term {
                                    two_term_sides(&a, e, variant, side, &limits)?
                                } else {
                                    lee_sides(&a, e, variant, side, &limits)?
                                };
                                let v = match variant {
                                    Variant::Lee => "lee",
                                    Variant::Dual => "dual",
                                };
                                Ok(Outcome::compare(
                                    format!("a={a} edge {}-{} {v} side {}", e.0, e.1, side_name(side)),
                                    lhs,
                                    rhs,
                                ))
                            }));
                        }
                    }
                }
            }
        }
        Check::CompleteRec => {
            for m in 1..=max_size(check, opts)? {
                for side in [Side::G, Side::Lltc] {
                    tasks.push(task(move || {
                        let d = StripDiagram::unicellular(AreaSequence::complete(m));
                        let direct = match side {
                            Side::G => llt_poly(&d, &limits)?,
                            Side::Lltc => lltc_poly(&d, Form::Plain, &limits)?,
                        };
                        Ok(Outcome::compare(format!("K_{m} side {}", side_name(side)), direct, complete_rec(m, side)?))
                    }));
                }
            }
        }
        Check::QBinomial => {
            for m in 1..=max_size(check, opts)? {
                for i in 0..m {
                    tasks.push(task(move || {
                        let (lhs, rhs) = q_binomial_sides(m, i)?;
                        Ok(Outcome::compare(format!("n={m} i={i}"), lhs, rhs))
                    }));
                }
            }
        }
        Check::Rectangular => {
            for m in 1..=max_size(check, opts)? {
                for k in 1..=m {
                    tasks.push(task(move || {
                        let (lhs, rhs) = rectangular_factorization_sides(k, m, &limits)?;
                        Ok(Outcome::compare(format!("k={k} n={m}"), lhs, rhs))
                    }));
                }
            }
        }
        Check::LineGraph => {
            for m in 1..=max_size(check, opts)? {
                tasks.push(task(move || {
                    let d = StripDiagram::unicellular(AreaSequence::line(m)?);
                    Ok(Outcome::compare(
                        format!("line n={m}"),
                        llt_poly(&d, &limits)?,
                        lltc_poly(&d, Form::Plain, &limits)?,
                    ))
                }));
            }
        }
        Check::AbelianReduce => {
            require_unicellular(check, opts)?;
            let single = matches!(opts.scope, Scope::Diagram(_));
            for a in areas(opts)? {
                if !single && !a.is_abelian() {
                    continue;
                }
                tasks.push(task(move || {
                    let n = a.n();
                    let lambda = a.to_staircase();
                    let expr = abelian_reduce(&lambda, n)?;
                    let rectangular =
                        expr.keys().all(|mu| AreaSequence::from_staircase(mu, n).is_ok_and(|x| x.is_rectangular()));
                    let mut out = Outcome::compare(
                        format!("a={a} lambda={lambda}"),
                        unicellular_g(&a, &limits)?,
                        evaluate_staircase(&expr, n, &limits)?,
                    );
                    if !rectangular {
                        out.pass = false;
                        out.actual = format!("non-rectangular terms in {expr}");
                    }
                    Ok(out)
                }));
            }
        }
        Check::StripReduce => {
            for d in diagrams(opts, true)? {
                tasks.push(task(move || {
                    let expr = strip_to_unicellular(&d)?;
                    let value = expr.evaluate(d.n(), |a| unicellular_g(a, &limits))?;
                    Ok(Outcome::compare(format!("a={d}"), llt_poly(&d, &limits)?, value))
                }));
            }
        }
        Check::MeltingLollipop => {
            for total in 1..=max_size(check, opts)? {
                for m in 1..=total {
                    for k in 0..m {
                        let n = total - m;
                        tasks.push(task(move || {
                            let expr = melting_lollipop_reduce(m, k, n)?;
                            let a = AreaSequence::melting_lollipop(m, k, n)?;
                            let mut out = Outcome::compare(
                                format!("m={m} k={k} n={n}"),
                                unicellular_g(&a, &limits)?,
                                expr.evaluate(total, |b| unicellular_g(b, &limits))?,
                            );
                            if !expr.keys().all(is_complete_line) {
                                out.pass = false;
                                out.actual = format!("non-base terms in {expr}");
                            }
                            Ok(out)
                        }));
                    }
                }
            }
        }
        Check::HlRelation => {
            for m in 1..=max_size(check, opts)? {
                for mu in partitions_of(m) {
                    tasks.push(task(move || {
                        let (lhs, rhs) = hl_relation_sides(&mu, &limits)?;
                        Ok(Outcome::compare(format!("mu={mu}"), rhs, lhs))
                    }));
                }
            }
        }
        Check::HlPositivity => {
            for m in 1..=max_size(check, opts)? {
                for lambda in partitions_of(m) {
                    tasks.push(task(move || hl_positivity(&lambda)));
                }
            }
        }
        Check::Charge => {
            require_unicellular(check, opts)?;
            for a in areas(opts)? {
                tasks.push(task(move || {
                    let (lhs, rhs) = charge_theorem_sides(&a, &limits)?;
                    Ok(Outcome::compare(format!("a={a}"), lhs, rhs))
                }));
            }
        }
        Check::FixedTableau => {
            require_unicellular(check, opts)?;
            for a in areas(opts)? {
                tasks.push(task(move || {
                    let mut bad = Vec::new();
                    for lambda in partitions_of(a.n()) {
                        for (t, _) in syt_enumerate(&lambda) {
                            if !check_fixed_tableau(&a, &t, &limits)? {
                                bad.push(t.to_string());
                            }
                        }
                    }
                    let mut out = Outcome::holds(format!("a={a}"), bad.is_empty());
                    if !bad.is_empty() {
                        out.actual = format!("fails for {}", bad.join("; "));
                    }
                    Ok(out)
                }));
            }
        }
        Check::Family => {
            require_unicellular(check, opts)?;
            let single = matches!(opts.scope, Scope::Diagram(_));
            for a in areas(opts)? {
                let families = a.named_families();
                if families.is_empty() {
                    if single {
                        return Err(Error::NotInFamilies(a.to_string()));
                    }
                    continue;
                }
                tasks.push(task(move || {
                    Ok(Outcome::compare(
                        format!("a={a} ({})", families.join(", ")),
                        unicellular_g(&a, &limits)?,
                        g_tilde(&a),
                    ))
                }));
            }
        }
        Check::Plethysm => {
            require_unicellular(check, opts)?;
            for a in areas(opts)? {
                tasks.push(task(move || {
                    let (lhs, rhs) = pleth_sides(&a, &limits)?;
                    Ok(Outcome::compare(format!("a={a}"), lhs, rhs))
                }));
            }
        }
        Check::Pexpansion => {
            require_unicellular(check, opts)?;
            for a in areas(opts)? {
                tasks.push(task(move || {
                    let (lhs, rhs) = pexpansion_sides(&a, &limits)?;
                    Ok(Outcome::compare(format!("a={a}"), lhs, rhs))
                }));
            }
        }
        Check::BTheta => {
            require_unicellular(check, opts)?;
            for a in areas(opts)? {
                tasks.push(task(move || Ok(Outcome::holds(format!("a={a}"), check_b_theta(&a, &limits)?))));
            }
        }
        Check::Equivalent => {
            require_unicellular(check, opts)?;
            for a in areas(opts)? {
                tasks.push(task(move || {
                    let (lhs, rhs) = equivalent_conjecture_sides(&a, &limits)?;
                    let fmt = |m: &std::collections::BTreeMap<Partition, LaurentPoly>| {
                        m.iter().map(|(l, c)| format!("{l}: {c}")).collect::<Vec<_>>().join("; ")
                    };
                    Ok(Outcome::compare(format!("a={a}"), fmt(&lhs), fmt(&rhs)))
                }));
            }
        }
    }
    Ok(tasks)
}

/// `H_λ(x;0) = s_λ`, dominance triangularity, and h-positivity of `H_λ(x;q+1)`.
fn hl_positivity(lambda: &Partition) -> Result<Outcome> {
    let h = hl_transformed(lambda, Series::Standard);
    let schur = h.to_basis(Basis::S)?;
    let mut problems = Vec::new();
    for (mu, c) in schur.terms() {
        let at_zero = c.coeff(0);
        let expect_zero = if mu == lambda { 1 } else { 0 };
        if !c.is_polynomial() || at_zero != expect_zero.into() {
            problems.push(format!("H(x;0) coefficient of s{mu} is {at_zero}"));
        }
        if !lambda.dominance_leq(mu)? {
            problems.push(format!("s{mu} appears but does not dominate {lambda}"));
        }
    }
    if !schur.coeff(lambda).is_one() {
        problems.push(format!("coefficient of s{lambda} is {}", schur.coeff(lambda)));
    }
    let shifted = h.shift_var(VarShift::Up)?;
    if shifted != hl_transformed(lambda, Series::Shifted) {
        problems.push("shifted series differs from H(x;q+1)".into());
    }
    if let Some((mu, c)) = shifted.to_basis(Basis::H)?.positivity_witness(Basis::H)? {
        problems.push(format!("h{mu} coefficient {c} of H(x;q+1) is not in N[q]"));
    }
    let mut out = Outcome::holds(format!("lambda={lambda}"), problems.is_empty());
    if !problems.is_empty() {
        out.actual = problems.join("; ");
    }
    Ok(out)
}

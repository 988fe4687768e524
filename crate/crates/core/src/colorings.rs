//! LLT polynomials and chromatic quasisymmetric functions by brute-force
//! enumeration of vertex colorings.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::coeff::{LaurentPoly, VarShift};
use crate::diagrams::{AreaSequence, StripDiagram};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::symfunc::SymFunc;
use crate::Limits;

/// Colorings are weighted by `q^asc`; in proper mode monochromatic edges are forbidden.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Valid,
    Proper,
}

/// Bits per color in the packed content code.
const CODE_BITS: u32 = 4;

struct Graph {
    n: usize,
    /// Ordinary in-neighbours `u < v` of each vertex (0-indexed).
    edge_in: Vec<Vec<usize>>,
    /// Strict in-neighbours `u < v` of each vertex.
    strict_in: Vec<Vec<usize>>,
}

impl Graph {
    fn new(d: &StripDiagram) -> Self {
        let n = d.n();
        let mut edge_in = vec![Vec::new(); n];
        let mut strict_in = vec![Vec::new(); n];
        for (u, v) in d.area().edges() {
            edge_in[v - 1].push(u - 1);
        }
        for &(u, v) in d.strict() {
            strict_in[v - 1].push(u - 1);
        }
        Graph { n, edge_in, strict_in }
    }
}

/// Content code to the ascent-count distribution of the colorings with that content.
type Bins = HashMap<u64, Vec<u64>>;

fn enumerate(g: &Graph, colors: usize, mode: Mode, first_color: usize) -> Bins {
    struct State<'a> {
        g: &'a Graph,
        colors: usize,
        mode: Mode,
        kappa: Vec<usize>,
        bins: Bins,
    }
    fn rec(st: &mut State, v: usize, asc: usize, code: u64) {
        if v == st.g.n {
            let slot = st.bins.entry(code).or_default();
            if slot.len() <= asc {
                slot.resize(asc + 1, 0);
            }
            slot[asc] += 1;
            return;
        }
        'color: for c in 0..st.colors {
            for &u in &st.g.strict_in[v] {
                if st.kappa[u] >= c {
                    continue 'color;
                }
            }
            let mut up = 0;
            for &u in &st.g.edge_in[v] {
                let cu = st.kappa[u];
                if st.mode == Mode::Proper && cu == c {
                    continue 'color;
                }
                up += usize::from(cu < c);
            }
            st.kappa[v] = c;
            rec(st, v + 1, asc + up, code + (1 << (CODE_BITS * c as u32)));
        }
    }
    let mut st = State { g, colors, mode, kappa: vec![0; g.n], bins: Bins::new() };
    st.kappa[0] = first_color;
    rec(&mut st, 1, 0, 1 << (CODE_BITS * first_color as u32));
    st.bins
}

fn merge(mut a: Bins, b: Bins) -> Bins {
    for (k, v) in b {
        let slot = a.entry(k).or_default();
        if slot.len() < v.len() {
            slot.resize(v.len(), 0);
        }
        for (i, x) in v.into_iter().enumerate() {
            slot[i] += x;
        }
    }
    a
}

fn decode(code: u64, colors: usize) -> Vec<usize> {
    (0..colors).map(|c| ((code >> (CODE_BITS * c as u32)) & 0xF) as usize).collect()
}

/// Number of distinct arrangements of `λ`, padded with zeros, over `colors` positions.
fn arrangements(lambda: &Partition, colors: usize) -> u128 {
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    let mut den = fact(colors - lambda.len());
    for &m in lambda.multiplicities().iter().skip(1) {
        den *= fact(m);
    }
    fact(colors) / den
}

/// Bins all colorings with `colors` colors into the monomial basis, checking
/// that the counts are constant on rearrangements of each content.
fn run(d: &StripDiagram, colors: usize, mode: Mode, limits: &Limits) -> Result<SymFunc> {
    let n = d.n();
    if n > limits.max_vertices || colors > limits.max_vertices.max(n) + 1 || colors > 15 {
        return Err(Error::ResourceLimit(format!(
            "{n} vertices with {colors} colors exceeds the coloring bound {}",
            limits.max_vertices
        )));
    }
    if n == 0 {
        return Ok(SymFunc::one());
    }
    if colors < n {
        return Err(Error::BadParams(format!("need at least {n} colors, got {colors}")));
    }
    let g = Graph::new(d);
    let bins = (0..colors).into_par_iter().map(|c| enumerate(&g, colors, mode, c)).reduce(Bins::new, merge);

    let mut by_shape: BTreeMap<Partition, (Vec<u64>, u128)> = BTreeMap::new();
    for (code, dist) in &bins {
        let shape = Partition::new(decode(*code, colors));
        let entry = by_shape.entry(shape.clone()).or_insert_with(|| (dist.clone(), 0));
        if &entry.0 != dist {
            return Err(Error::NotSymmetric(format!("content {:?} of {d}", decode(*code, colors))));
        }
        entry.1 += 1;
    }
    let mut terms = BTreeMap::new();
    for (shape, (dist, seen)) in by_shape {
        if seen != arrangements(&shape, colors) {
            return Err(Error::NotSymmetric(format!("missing rearrangements of {shape} in {d}")));
        }
        let coeff = LaurentPoly::from_coeffs(0, dist.into_iter().map(BigInt::from).collect());
        terms.insert(shape, coeff);
    }
    SymFunc::from_monomials(n, terms)
}

/// The vertical-strip LLT polynomial `G_{a,s}(x; q)` in the monomial basis.
pub fn llt_poly(d: &StripDiagram, limits: &Limits) -> Result<SymFunc> {
    run(d, d.n(), Mode::Valid, limits)
}

/// As [`llt_poly`], enumerating colorings with more colors than vertices.
pub fn llt_poly_with_colors(d: &StripDiagram, colors: usize, limits: &Limits) -> Result<SymFunc> {
    run(d, colors, Mode::Valid, limits)
}

/// The chromatic quasisymmetric function `X_a(x; q)` in the monomial basis.
pub fn chromatic_qsym(a: &AreaSequence, limits: &Limits) -> Result<SymFunc> {
    run(&StripDiagram::unicellular(a.clone()), a.n(), Mode::Proper, limits)
}

/// The number of ascents of a coloring, or `None` if it violates a strict edge.
pub fn coloring_ascents(d: &StripDiagram, kappa: &[usize]) -> Option<usize> {
    if d.strict().iter().any(|&(u, v)| kappa[u - 1] >= kappa[v - 1]) {
        return None;
    }
    Some(d.area().edges().iter().filter(|&&(u, v)| kappa[u - 1] < kappa[v - 1]).count())
}

/// `G_a[X(q-1); q] = (q-1)^n X_a(x; q)`, compared in the power-sum basis.
pub fn check_pleth_relation(a: &AreaSequence, limits: &Limits) -> Result<bool> {
    let (lhs, rhs) = pleth_sides(a, limits)?;
    Ok(lhs == rhs)
}

/// Both sides of the plethystic relation as rational power-sum expansions.
pub fn pleth_sides(
    a: &AreaSequence,
    limits: &Limits,
) -> Result<(crate::symfunc::RatSymFunc, crate::symfunc::RatSymFunc)> {
    let d = StripDiagram::unicellular(a.clone());
    let lhs = llt_poly(&d, limits)?.pleth_scale();
    let factor = LaurentPoly::from_ints(1, &[1]).shift_var(VarShift::Down)?.pow(a.n() as u32);
    let rhs = chromatic_qsym(a, limits)?.to_p_rational().scale(&factor.to_rational());
    Ok((lhs, rhs))
}

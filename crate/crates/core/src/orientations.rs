//! Orientations of unit-interval graphs and the statistics `asc`, `hrv`,
//! `hrvpp` and `σ`, with the orientation sums built from them.
//!
//! An orientation is a bitmask over the ordinary edges in canonical order; a
//! set bit means the edge keeps its direction `u → v` (is ascending). Strict
//! edges carry no bit and are always traversable.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::coeff::{LaurentPoly, VarShift};
use crate::diagrams::StripDiagram;
use crate::error::{Error, Result};
use crate::partitions::{Composition, Partition};
use crate::symfunc::{Basis, SymFunc};
use crate::{Form, Limits};

/// Precomputed adjacency for iterating over all orientations of a diagram.
#[derive(Clone, Debug)]
pub struct OrientationSpace {
    diagram: StripDiagram,
    edges: Vec<(usize, usize)>,
    /// Out-edges `(w, bit)` of each vertex (1-indexed); `None` marks a strict edge.
    out: Vec<Vec<(usize, Option<usize>)>>,
    /// Bits of the ordinary in-edges of each vertex.
    in_bits: Vec<u64>,
}

/// One orientation's statistics, as emitted by the dump command.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct OrientationRecord {
    pub mask: u64,
    pub asc: usize,
    pub hrv: Vec<usize>,
    pub hrvpp: Partition,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<usize>>,
}

impl OrientationSpace {
    pub fn new(d: &StripDiagram, limits: &Limits) -> Result<Self> {
        let edges = d.area().edges();
        if edges.len() > limits.max_bits || edges.len() > 63 {
            return Err(Error::ResourceLimit(format!(
                "{} edges exceeds the orientation bound of {} bits",
                edges.len(),
                limits.max_bits
            )));
        }
        let n = d.n();
        let mut out = vec![Vec::new(); n + 1];
        let mut in_bits = vec![0u64; n + 1];
        for (bit, &(u, v)) in edges.iter().enumerate() {
            out[u].push((v, Some(bit)));
            in_bits[v] |= 1 << bit;
        }
        for &(u, v) in d.strict() {
            out[u].push((v, None));
        }
        Ok(OrientationSpace { diagram: d.clone(), edges, out, in_bits })
    }

    pub fn diagram(&self) -> &StripDiagram {
        &self.diagram
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `2^{|E|}`.
    pub fn count(&self) -> u64 {
        1 << self.edges.len()
    }

    pub fn asc(&self, mask: u64) -> usize {
        mask.count_ones() as usize
    }

    /// The mask whose ascending edges are exactly `asc` (which must be edges).
    pub fn mask_of(&self, asc: &[(usize, usize)]) -> u64 {
        asc.iter().map(|e| 1u64 << self.edges.iter().position(|x| x == e).expect("edge of the diagram")).sum()
    }

    /// `hrv(u)` for `u = 1..=n` (index 0 unused), by one sweep from `n` down,
    /// valid because every traversable edge increases the label.
    pub fn hrv(&self, mask: u64) -> Vec<usize> {
        let n = self.diagram.n();
        let mut h: Vec<usize> = (0..=n).collect();
        for v in (1..=n).rev() {
            for &(w, bit) in &self.out[v] {
                if bit.is_none_or(|b| mask >> b & 1 == 1) {
                    h[v] = h[v].max(h[w]);
                }
            }
        }
        h
    }

    /// Sizes of the fibres of `hrv`, sorted.
    pub fn hrvpp(&self, mask: u64) -> Partition {
        let n = self.diagram.n();
        let h = self.hrv(mask);
        let mut sizes = vec![0; n + 1];
        for &x in &h[1..] {
            sizes[x] += 1;
        }
        Partition::new(sizes)
    }

    /// The set partition `hrvp`, blocks keyed by their highest reachable vertex.
    pub fn hrvp(&self, mask: u64) -> BTreeMap<usize, Vec<usize>> {
        let h = self.hrv(mask);
        let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &x) in h.iter().enumerate().skip(1) {
            blocks.entry(x).or_default().push(v);
        }
        blocks
    }

    /// Vertices with no ascending in-edge.
    pub fn bottoms(&self, mask: u64) -> Vec<usize> {
        (1..=self.diagram.n()).filter(|&v| self.in_bits[v] & mask == 0).collect()
    }

    /// Gaps between consecutive bottoms read from the top, with `s_0 = n + 1`.
    pub fn sigma(&self, mask: u64) -> Result<Composition> {
        if !self.diagram.strict().is_empty() {
            return Err(Error::StrictEdgesPresent);
        }
        let mut prev = self.diagram.n() + 1;
        let mut parts = Vec::new();
        for b in self.bottoms(mask).into_iter().rev() {
            parts.push(prev - b);
            prev = b;
        }
        Composition::new(parts)
    }

    pub fn record(&self, mask: u64) -> OrientationRecord {
        OrientationRecord {
            mask,
            asc: self.asc(mask),
            hrv: self.hrv(mask)[1..].to_vec(),
            hrvpp: self.hrvpp(mask),
            sigma: self.sigma(mask).ok().map(|c| c.parts().to_vec()),
        }
    }

    /// `Σ_θ q^{asc θ} e_{key(θ)}` accumulated in parallel over mask ranges.
    pub fn e_sum(&self, key: impl Fn(u64) -> Partition + Sync) -> SymFunc {
        let total = self.count();
        let chunk = (total / 64).max(1024);
        let starts: Vec<u64> = (0..total).step_by(chunk as usize).collect();
        let merged = starts
            .into_par_iter()
            .map(|start| {
                let mut acc: HashMap<Partition, Vec<u64>> = HashMap::new();
                for mask in start..(start + chunk).min(total) {
                    let slot = acc.entry(key(mask)).or_default();
                    let asc = self.asc(mask);
                    if slot.len() <= asc {
                        slot.resize(asc + 1, 0);
                    }
                    slot[asc] += 1;
                }
                acc
            })
            .reduce(HashMap::new, |mut a, b| {
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
            });
        let terms = merged
            .into_iter()
            .map(|(p, v)| (p, LaurentPoly::from_coeffs(0, v.into_iter().map(BigInt::from).collect())));
        SymFunc::from_terms(self.diagram.n(), Basis::E, terms).expect("keys are partitions of n")
    }
}

/// Converts an orientation sum (a function of `q` read at `q + 1`) into the requested form.
fn in_form(raw: SymFunc, form: Form) -> Result<SymFunc> {
    match form {
        Form::Shifted => Ok(raw),
        Form::Plain => raw.shift_var(VarShift::Down),
    }
}

/// `LLTc_{a,s}`: the orientation sum `Σ q^asc e_hrvpp` is its value at `q + 1`.
pub fn lltc_poly(d: &StripDiagram, form: Form, limits: &Limits) -> Result<SymFunc> {
    let space = OrientationSpace::new(d, limits)?;
    in_form(space.e_sum(|m| space.hrvpp(m)), form)
}

/// `Σ_θ q^asc e_σ(θ)`, which equals `G̃_a(x; q + 1)`.
pub fn charge_rhs(d: &StripDiagram, form: Form, limits: &Limits) -> Result<SymFunc> {
    if !d.strict().is_empty() {
        return Err(Error::StrictEdgesPresent);
    }
    let space = OrientationSpace::new(d, limits)?;
    in_form(space.e_sum(|m| space.sigma(m).expect("unicellular").sorted()), form)
}

/// Per-orientation records in mask order.
pub fn dump(d: &StripDiagram, limits: &Limits) -> Result<Vec<OrientationRecord>> {
    let space = OrientationSpace::new(d, limits)?;
    Ok((0..space.count()).map(|m| space.record(m)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::AreaSequence;
    use crate::symfunc::sym_from_ints;
    use std::collections::BTreeSet;

    fn a(v: &[usize]) -> AreaSequence {
        AreaSequence::new(v.to_vec()).unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn paper_example() -> (OrientationSpace, u64) {
        let d = StripDiagram::new(a(&[0, 1, 2, 2, 2, 2]), BTreeSet::from([(1, 4), (2, 5)])).unwrap();
        let space = OrientationSpace::new(&d, &Limits::default()).unwrap();
        let mask = space.mask_of(&[(1, 3), (2, 3), (2, 4), (3, 4), (5, 6)]);
        (space, mask)
    }

    #[test]
    fn counts() {
        let lim = Limits::default();
        let s = OrientationSpace::new(&StripDiagram::unicellular(a(&[0, 1])), &lim).unwrap();
        assert_eq!(s.count(), 2);
        let s = OrientationSpace::new(&StripDiagram::unicellular(a(&[0, 1, 2, 2, 2, 2])), &lim).unwrap();
        assert_eq!(s.count(), 512);
        let s = OrientationSpace::new(&StripDiagram::unicellular(a(&[])), &lim).unwrap();
        assert_eq!(s.count(), 1);
        let tight = Limits { max_bits: 5, ..lim };
        assert!(matches!(
            OrientationSpace::new(&StripDiagram::unicellular(AreaSequence::complete(4)), &tight),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn worked_hrv() {
        let (space, mask) = paper_example();
        assert_eq!(space.asc(mask), 5);
        assert_eq!(space.hrv(mask)[1..], [4, 6, 4, 4, 6, 6]);
        let blocks: Vec<Vec<usize>> = space.hrvp(mask).into_values().collect();
        assert_eq!(blocks, vec![vec![1, 3, 4], vec![2, 5, 6]]);
        assert_eq!(space.hrvpp(mask), part(&[3, 3]));
        assert!(matches!(space.sigma(mask), Err(Error::StrictEdgesPresent)));
    }

    #[test]
    fn extreme_orientations() {
        let lim = Limits::default();
        for n in 1..=5 {
            for x in AreaSequence::enumerate(n) {
                let space = OrientationSpace::new(&StripDiagram::unicellular(x.clone()), &lim).unwrap();
                let h = space.hrv(0);
                assert!((1..=n).all(|u| h[u] == u));
                assert_eq!(space.hrvpp(0), Partition::new(vec![1; n]));
                assert_eq!(space.sigma(0).unwrap().parts(), vec![1; n].as_slice());
                if x.components().len() == 1 {
                    let all = space.count() - 1;
                    assert!(space.hrv(all)[1..].iter().all(|&v| v == n));
                    assert_eq!(space.bottoms(all), vec![1]);
                    assert_eq!(space.sigma(all).unwrap().parts(), &[n]);
                }
            }
        }
    }

    #[test]
    fn sigma_differs_from_hrvpp() {
        let d = StripDiagram::unicellular(a(&[0, 1, 2, 3, 2, 2]));
        let space = OrientationSpace::new(&d, &Limits::default()).unwrap();
        let mask = space.mask_of(&[(1, 2), (1, 4), (2, 4), (3, 5), (4, 5)]);
        assert_eq!(space.bottoms(mask), vec![1, 3, 6]);
        let sigma = space.sigma(mask).unwrap();
        assert_eq!(sigma.parts(), &[1, 3, 2]);
        let d_set: BTreeSet<usize> = sigma.d_set().into_iter().filter(|&x| x < 6).collect();
        assert_eq!(d_set, BTreeSet::from([1, 4]));
        assert_eq!(space.hrvpp(mask), part(&[5, 1]));
        assert_eq!(sigma.sorted(), part(&[3, 2, 1]));
        assert_ne!(sigma.sorted(), space.hrvpp(mask));
    }

    /// Reachability by repeated relaxation over all strict and ascending edges.
    fn hrv_by_closure(space: &OrientationSpace, mask: u64) -> Vec<usize> {
        let n = space.diagram().n();
        let mut reach = vec![vec![false; n + 1]; n + 1];
        for (u, row) in reach.iter_mut().enumerate() {
            row[u] = true;
        }
        let mut arcs: Vec<(usize, usize)> =
            space.edges().iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
        arcs.extend(space.diagram().strict().iter().copied());
        loop {
            let mut changed = false;
            for &(u, v) in &arcs {
                let below = reach[v].clone();
                for (w, &r) in below.iter().enumerate().skip(1) {
                    if r && !reach[u][w] {
                        reach[u][w] = true;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        (0..=n).map(|u| if u == 0 { 0 } else { (1..=n).rev().find(|&w| reach[u][w]).unwrap() }).collect()
    }

    #[test]
    fn sweep_matches_transitive_closure() {
        let lim = Limits::default();
        for n in 1..=5 {
            for x in AreaSequence::enumerate(n) {
                for d in StripDiagram::all_vertical_strips(&x) {
                    let space = OrientationSpace::new(&d, &lim).unwrap();
                    for mask in 0..space.count() {
                        let h = space.hrv(mask);
                        assert_eq!(h, hrv_by_closure(&space, mask), "{d} mask {mask}");
                        assert!((1..=n).all(|u| h[u] >= u));
                        assert_eq!(space.hrvpp(mask).size(), n);
                        assert!(space.asc(mask) <= x.total());
                        if d.strict().is_empty() {
                            assert_eq!(space.sigma(mask).unwrap().size(), n);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn worked_lltc_table() {
        let d = StripDiagram::new(a(&[0, 1, 2, 2, 2, 2]), BTreeSet::from([(1, 4), (2, 5)])).unwrap();
        let got = lltc_poly(&d, Form::Shifted, &Limits::default()).unwrap();
        let expect = sym_from_ints(
            Basis::E,
            &[
                (&[6], 3, &[4, 20, 41, 44, 26, 8, 1]),
                (&[3, 3], 2, &[2, 7, 9, 5, 1]),
                (&[4, 2], 2, &[2, 9, 16, 14, 6, 1]),
                (&[5, 1], 2, &[4, 22, 48, 53, 31, 9, 1]),
                (&[3, 2, 1], 1, &[4, 14, 18, 10, 2]),
                (&[4, 1, 1], 1, &[1, 8, 20, 22, 11, 2]),
                (&[2, 2, 1, 1], 0, &[1, 3, 3, 1]),
                (&[3, 1, 1, 1], 1, &[1, 3, 3, 1]),
            ],
        );
        assert_eq!(got.basis(), Basis::E);
        assert_eq!(got.terms(), expect.terms());
    }

    #[test]
    fn two_vertex_forms() {
        let d = StripDiagram::unicellular(a(&[0, 1]));
        let lim = Limits::default();
        let shifted = lltc_poly(&d, Form::Shifted, &lim).unwrap();
        assert_eq!(shifted.terms(), sym_from_ints(Basis::E, &[(&[1, 1], 0, &[1]), (&[2], 1, &[1])]).terms());
        let plain = lltc_poly(&d, Form::Plain, &lim).unwrap();
        assert_eq!(plain.terms(), sym_from_ints(Basis::E, &[(&[1, 1], 0, &[1]), (&[2], 0, &[-1, 1])]).terms());
        assert_eq!(plain, sym_from_ints(Basis::S, &[(&[2], 0, &[1]), (&[1, 1], 1, &[1])]));
        let empty = lltc_poly(&StripDiagram::unicellular(a(&[])), Form::Plain, &lim).unwrap();
        assert_eq!(empty, SymFunc::one());
    }

    #[test]
    fn charge_sum_small() {
        let lim = Limits::default();
        let r = charge_rhs(&StripDiagram::unicellular(a(&[0, 1])), Form::Shifted, &lim).unwrap();
        assert_eq!(r.terms(), sym_from_ints(Basis::E, &[(&[1, 1], 0, &[1]), (&[2], 1, &[1])]).terms());
        let r = charge_rhs(&StripDiagram::unicellular(a(&[0, 0, 0])), Form::Shifted, &lim).unwrap();
        assert_eq!(r.terms(), sym_from_ints(Basis::E, &[(&[1, 1, 1], 0, &[1])]).terms());
    }

    #[test]
    fn dump_records() {
        let recs = dump(&StripDiagram::unicellular(a(&[0, 1])), &Limits::default()).unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[1].hrvpp, part(&[2]));
        assert_eq!(recs[1].sigma, Some(vec![2]));
        let js = serde_json::to_string(&recs[0]).unwrap();
        assert_eq!(js, r#"{"mask":0,"asc":0,"hrv":[1,2],"hrvpp":[1,1],"sigma":[1,1]}"#);
    }
}

//! Area sequences, unit-interval graphs and vertical-strip diagrams.
//!
//! Vertices are 1-indexed. An area sequence `a` gives the graph with edges
//! `(i - a_i) → i, …, (i - 1) → i`; edges are listed sorted by target and then
//! by source, and that order fixes the bit positions used by orientations.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct AreaSequence(Vec<usize>);

impl AreaSequence {
    pub fn new(a: Vec<usize>) -> Result<Self> {
        for (idx, &ai) in a.iter().enumerate() {
            if ai > idx {
                return Err(Error::InvalidAreaSequence(format!("{a:?}: a_{} > {idx}", idx + 1)));
            }
            if idx > 0 && ai > a[idx - 1] + 1 {
                return Err(Error::InvalidAreaSequence(format!("{a:?}: a_{} > a_{} + 1", idx + 1, idx)));
            }
        }
        Ok(AreaSequence(a))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// `a_i`, 1-indexed.
    pub fn a(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// `a_1 + … + a_n`, the number of edges.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Whether `(u, v)` with `u < v` is an edge.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < v && v <= self.n() && u >= 1 && v - self.a(v) <= u
    }

    /// Edges `(u, v)`, sorted by `v` then `u`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.n()).flat_map(|v| (v - self.a(v)..v).map(move |u| (u, v))).collect()
    }

    /// Reverses every edge and relabels `j ↦ n + 1 - j`.
    pub fn transpose(&self) -> AreaSequence {
        let n = self.n();
        let mut indeg = vec![0; n];
        for (u, _) in self.edges() {
            // (u, v) becomes (n+1-v, n+1-u), an in-edge of n+1-u.
            indeg[n - u] += 1;
        }
        AreaSequence(indeg)
    }

    /// All area sequences of length `n`.
    pub fn enumerate(n: usize) -> Vec<AreaSequence> {
        fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<AreaSequence>) {
            if cur.len() == n {
                out.push(AreaSequence(cur.clone()));
                return;
            }
            let i = cur.len();
            let max = if i == 0 { 0 } else { (cur[i - 1] + 1).min(i) };
            for v in 0..=max {
                cur.push(v);
                rec(n, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut out);
        out
    }

    /// `a + δ e_v`, validated.
    pub fn bumped(&self, v: usize, delta: isize) -> Result<AreaSequence> {
        let mut a = self.0.clone();
        let new = a[v - 1] as isize + delta;
        if new < 0 {
            return Err(Error::InvalidAreaSequence(format!("{self} with a_{v} {delta:+}")));
        }
        a[v - 1] = new as usize;
        AreaSequence::new(a)
    }

    /// Connected components, as vertex ranges `[start, end]`.
    pub fn components(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for v in 1..=self.n() {
            if self.a(v) == 0 {
                out.push((v, v));
            } else {
                out.last_mut().expect("a_1 = 0 starts a component").1 = v;
            }
        }
        out
    }

    /// The shape `λ_i = n - i - a_{n+1-i}` of the non-edge cells.
    pub fn to_staircase(&self) -> Partition {
        let n = self.n();
        Partition::new((1..=n).map(|i| n - i - self.a(n + 1 - i)).collect())
    }

    /// Inverse of [`AreaSequence::to_staircase`] for a fixed `n`.
    pub fn from_staircase(lambda: &Partition, n: usize) -> Result<AreaSequence> {
        if lambda.len() > n || (0..lambda.len()).any(|i| lambda.part(i) > n - 1 - i) {
            return Err(Error::NotInStaircase(format!("{lambda} for n = {n}")));
        }
        let mut a = vec![0; n];
        for i in 1..=n {
            a[n - i] = n - i - lambda.part(i - 1);
        }
        AreaSequence::new(a).map_err(|_| Error::NotInStaircase(format!("{lambda} for n = {n}")))
    }

    /// The rectangular sequence whose non-edges form a `k × (n - k)` block:
    /// two cliques on `1..=k` and `k+1..=n`.
    pub fn rectangular(k: usize, n: usize) -> Result<AreaSequence> {
        if k > n {
            return Err(Error::BadParams(format!("rectangular needs k ≤ n, got k={k}, n={n}")));
        }
        Ok(AreaSequence((1..=n).map(|i| if i <= k { i - 1 } else { i - k - 1 }).collect()))
    }

    /// The `k` for which this sequence is rectangular (`0` for the complete graph).
    pub fn rectangular_k(&self) -> Option<usize> {
        let n = self.n();
        (0..=n).find(|&k| Self::rectangular(k, n).is_ok_and(|r| r == *self))
    }

    pub fn is_rectangular(&self) -> bool {
        self.rectangular_k().is_some()
    }

    /// Dominates some rectangular sequence entrywise.
    pub fn is_abelian(&self) -> bool {
        let n = self.n();
        (0..=n).any(|k| {
            let r = Self::rectangular(k, n).expect("k ≤ n");
            self.0.iter().zip(r.values()).all(|(x, y)| x >= y)
        })
    }

    /// Edges `(i, j)` satisfying the conditions for Lee's recursion.
    pub fn admissible_edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (3..=n)
            .filter_map(|j| {
                let aj = self.a(j);
                if aj < 2 || (j < n && aj < self.a(j + 1) + 1) {
                    return None;
                }
                let i = j - aj;
                (self.a(i) + 1 == self.a(i + 1)).then_some((i, j))
            })
            .collect()
    }

    /// `(i, j)` such that `(n+1-j, n+1-i)` is admissible for the transpose.
    pub fn dual_admissible_edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out: Vec<(usize, usize)> =
            self.transpose().admissible_edges().into_iter().map(|(i, j)| (n + 1 - j, n + 1 - i)).collect();
        out.sort_by_key(|&(u, v)| (v, u));
        out
    }

    pub fn classify(&self) -> Classification {
        Classification {
            rectangular: self.is_rectangular(),
            abelian: self.is_abelian(),
            admissible: self.admissible_edges(),
            dual_admissible: self.dual_admissible_edges(),
        }
    }

    pub fn complete(n: usize) -> AreaSequence {
        AreaSequence((0..n).collect())
    }

    /// `(0, 1, 1, …, 1)` on `n ≥ 1` vertices.
    pub fn line(n: usize) -> Result<AreaSequence> {
        if n == 0 {
            return Err(Error::BadParams("line graph needs n ≥ 1".into()));
        }
        Ok(AreaSequence((0..n).map(|i| usize::from(i > 0)).collect()))
    }

    /// Complete graph on `m` vertices with a path of `n` more attached.
    pub fn lollipop(m: usize, n: usize) -> Result<AreaSequence> {
        if m == 0 || n == 0 {
            return Err(Error::BadParams(format!("lollipop needs m, n ≥ 1, got m={m}, n={n}")));
        }
        Ok(AreaSequence((1..=m + n).map(|i| if i <= m { i - 1 } else { 1 }).collect()))
    }

    /// `(0, 1, …, n-2, n-k-1)` for `0 ≤ k ≤ n - 1`.
    pub fn melting_complete(n: usize, k: usize) -> Result<AreaSequence> {
        if n == 0 || k > n - 1 {
            return Err(Error::BadParams(format!("melting complete needs 0 ≤ k ≤ n-1, got n={n}, k={k}")));
        }
        Ok(AreaSequence((1..=n).map(|i| if i < n { i - 1 } else { n - k - 1 }).collect()))
    }

    /// `(0, 1, …, m-2, m-1-k, 1, …, 1)` with `n` trailing ones, `0 ≤ k ≤ m - 1`.
    pub fn melting_lollipop(m: usize, k: usize, n: usize) -> Result<AreaSequence> {
        if m == 0 || k > m - 1 {
            return Err(Error::BadParams(format!("melting lollipop needs m ≥ 1 and 0 ≤ k ≤ m-1, got m={m}, k={k}")));
        }
        Ok(AreaSequence(
            (1..=m + n)
                .map(|i| match i.cmp(&m) {
                    std::cmp::Ordering::Less => i - 1,
                    std::cmp::Ordering::Equal => m - 1 - k,
                    std::cmp::Ordering::Greater => 1,
                })
                .collect(),
        ))
    }

    /// Names of the families (complete, line, lollipop, melting complete,
    /// melting lollipop) containing this sequence, with parameters.
    pub fn named_families(&self) -> Vec<String> {
        let n = self.n();
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        if *self == Self::complete(n) {
            out.push(format!("complete({n})"));
        }
        if Self::line(n).is_ok_and(|l| l == *self) {
            out.push(format!("line({n})"));
        }
        for m in 1..n {
            if Self::lollipop(m, n - m).is_ok_and(|l| l == *self) {
                out.push(format!("lollipop({m},{})", n - m));
            }
        }
        for k in 0..n {
            if Self::melting_complete(n, k).is_ok_and(|l| l == *self) {
                out.push(format!("melting_complete({n},{k})"));
            }
        }
        for m in 1..n {
            for k in 0..m {
                if Self::melting_lollipop(m, k, n - m).is_ok_and(|l| l == *self) {
                    out.push(format!("melting_lollipop({m},{k},{})", n - m));
                }
            }
        }
        out
    }
}

/// Structural facts about an area sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub rectangular: bool,
    pub abelian: bool,
    pub admissible: Vec<(usize, usize)>,
    pub dual_admissible: Vec<(usize, usize)>,
}

impl TryFrom<Vec<usize>> for AreaSequence {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        AreaSequence::new(v)
    }
}

impl From<AreaSequence> for Vec<usize> {
    fn from(a: AreaSequence) -> Self {
        a.0
    }
}

impl FromStr for AreaSequence {
    type Err = Error;

    /// Parses a comma list such as `0,1,2,3,2,2`; the empty string is the empty sequence.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(AreaSequence(Vec::new()));
        }
        let vals = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidAreaSequence(format!("cannot parse {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        AreaSequence::new(vals)
    }
}

impl fmt::Display for AreaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for AreaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses strict edges written as `2-5,3-6`.
pub fn parse_strict(s: &str) -> Result<BTreeSet<(usize, usize)>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(BTreeSet::new());
    }
    s.split(',')
        .map(|t| {
            let bad = || Error::BadParams(format!("cannot parse strict edge {t:?}"));
            let (u, v) = t.trim().split_once('-').ok_or_else(bad)?;
            Ok((u.trim().parse().map_err(|_| bad())?, v.trim().parse().map_err(|_| bad())?))
        })
        .collect()
}

pub fn format_strict(s: &BTreeSet<(usize, usize)>) -> String {
    s.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(",")
}

/// A unit-interval graph with a set of strict (directed) non-edges.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawStrip", into = "RawStrip")]
pub struct StripDiagram {
    area: AreaSequence,
    strict: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawStrip {
    area: Vec<usize>,
    #[serde(default)]
    strict: Vec<(usize, usize)>,
}

impl TryFrom<RawStrip> for StripDiagram {
    type Error = Error;

    fn try_from(r: RawStrip) -> Result<Self> {
        StripDiagram::new(AreaSequence::new(r.area)?, r.strict.into_iter().collect())
    }
}

impl From<StripDiagram> for RawStrip {
    fn from(d: StripDiagram) -> Self {
        RawStrip { area: d.area.0, strict: d.strict.into_iter().collect() }
    }
}

impl StripDiagram {
    /// Strict pairs must be non-edges `(u, v)` with `u < v`; they need not be outer corners.
    pub fn new(area: AreaSequence, strict: BTreeSet<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &strict {
            if !(1 <= u && u < v && v <= area.n()) || area.has_edge(u, v) {
                return Err(Error::BadParams(format!("strict pair ({u},{v}) must be a non-edge u<v of {area}")));
            }
        }
        Ok(StripDiagram { area, strict })
    }

    pub fn unicellular(area: AreaSequence) -> Self {
        StripDiagram { area, strict: BTreeSet::new() }
    }

    pub fn area(&self) -> &AreaSequence {
        &self.area
    }

    pub fn strict(&self) -> &BTreeSet<(usize, usize)> {
        &self.strict
    }

    pub fn n(&self) -> usize {
        self.area.n()
    }

    fn is_corner_of_area(&self, u: usize, v: usize) -> bool {
        let a = &self.area;
        u >= 1
            && u < v
            && v <= a.n()
            && !a.has_edge(u, v)
            && (v == u + 1 || (a.has_edge(u + 1, v) && a.has_edge(u, v - 1)))
    }

    /// Non-edges that can be added keeping the unit-interval property,
    /// excluding those already strict.
    pub fn outer_corners(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (2..=n)
            .filter_map(|v| {
                let u = v.checked_sub(self.area.a(v) + 1).filter(|&u| u >= 1)?;
                (self.is_corner_of_area(u, v) && !self.strict.contains(&(u, v))).then_some((u, v))
            })
            .collect()
    }

    /// Whether every strict edge is an outer corner of the underlying graph.
    pub fn is_vertical_strip(&self) -> bool {
        self.strict.iter().all(|&(u, v)| self.is_corner_of_area(u, v))
    }

    /// Errors unless this is a canonical vertical-strip diagram.
    pub fn validate_vertical_strip(&self) -> Result<()> {
        match self.strict.iter().find(|&&(u, v)| !self.is_corner_of_area(u, v)) {
            None => Ok(()),
            Some(&(u, v)) => Err(Error::NotAnOuterCorner(u, v)),
        }
    }

    /// Adds the outer corner `(u, v)` as an ordinary edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<StripDiagram> {
        if !self.is_corner_of_area(u, v) || self.strict.contains(&(u, v)) {
            return Err(Error::NotAnOuterCorner(u, v));
        }
        Ok(StripDiagram { area: self.area.bumped(v, 1)?, strict: self.strict.clone() })
    }

    /// Marks the outer corner `(u, v)` as strict.
    pub fn with_strict(&self, u: usize, v: usize) -> Result<StripDiagram> {
        if !self.is_corner_of_area(u, v) || self.strict.contains(&(u, v)) {
            return Err(Error::NotAnOuterCorner(u, v));
        }
        let mut strict = self.strict.clone();
        strict.insert((u, v));
        Ok(StripDiagram { area: self.area.clone(), strict })
    }

    pub fn without_strict(&self, u: usize, v: usize) -> StripDiagram {
        let mut strict = self.strict.clone();
        strict.remove(&(u, v));
        StripDiagram { area: self.area.clone(), strict }
    }

    /// All diagrams on `a` whose strict set is a subset of the outer corners.
    pub fn all_vertical_strips(a: &AreaSequence) -> Vec<StripDiagram> {
        let base = StripDiagram::unicellular(a.clone());
        let corners = base.outer_corners();
        (0u32..1 << corners.len())
            .map(|mask| StripDiagram {
                area: a.clone(),
                strict: corners.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect(),
            })
            .collect()
    }
}

impl fmt::Display for StripDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.strict.is_empty() {
            write!(f, "{}", self.area)
        } else {
            write!(f, "{} strict {}", self.area, format_strict(&self.strict))
        }
    }
}

impl fmt::Debug for StripDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

//! Partitions, compositions, Young tableaux, descents and Kostka numbers.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Accepts only sequences that already are partitions.
    pub fn from_parts(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadParams(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part (0-indexed), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition((1..=first).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }

    /// `self ⊴ other` in dominance order.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(format!("{self} vs {other}")));
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Multiplicity `m_i` of each part size `i` (index 0 unused).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// `z_λ = ∏ i^{m_i} m_i!`
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (i, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for k in 1..=m {
                z *= i * k;
            }
        }
        z
    }

    /// Union of parts, sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        Partition::new(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    /// Whether the Young diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Number of standard Young tableaux via the hook-length formula.
    pub fn hook_count(&self) -> BigInt {
        let n = self.size();
        let conj = self.conjugate();
        let mut num: BigInt = (1..=n).product();
        let mut den = BigInt::one();
        for (r, &len) in self.0.iter().enumerate() {
            for c in 0..len {
                den *= (len - c - 1) + (conj.part(c) - r - 1) + 1;
            }
        }
        num /= den;
        num
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::from_parts(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All partitions of `n` in lexicographically decreasing order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::BadParams(format!("{parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The partition obtained by sorting the parts.
    pub fn sorted(&self) -> Partition {
        Partition::new(self.0.clone())
    }

    /// Partial sums `{γ_1, γ_1+γ_2, …}`, including the total.
    pub fn d_set(&self) -> BTreeSet<usize> {
        self.0
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// Inverse of [`Composition::d_set`].
    pub fn from_d_set(d: &BTreeSet<usize>) -> Composition {
        let mut prev = 0;
        Composition(
            d.iter()
                .map(|&s| {
                    let p = s - prev;
                    prev = s;
                    p
                })
                .collect(),
        )
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All compositions of `n`.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition(Vec::new())];
    }
    // Subsets of [n-1] as cut points.
    (0u64..1 << (n - 1))
        .map(|mask| {
            let mut d: BTreeSet<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            d.insert(n);
            Composition::from_d_set(&d)
        })
        .collect()
}

/// A Young tableau in English convention: `rows[0]` is the top row.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Tableau { rows };
        let lens: Vec<usize> = t.rows.iter().map(|r| r.len()).collect();
        Partition::from_parts(lens)?;
        Ok(t)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(|r| r.len()).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| below > above));
        rows_ok && cols_ok && self.rows.iter().flatten().all(|&e| e >= 1)
    }

    pub fn is_standard(&self) -> bool {
        let mut seen: Vec<usize> = self.rows.iter().flatten().copied().collect();
        seen.sort_unstable();
        self.is_semistandard() && seen.iter().enumerate().all(|(i, &e)| e == i + 1)
    }

    /// Rows read bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// `{i : i+1 lies in a strictly lower row than i}`, i.e. `i+1` precedes `i`
    /// in the reading word.
    pub fn descents(&self) -> BTreeSet<usize> {
        let mut row_of = vec![0; self.size() + 2];
        for (r, row) in self.rows.iter().enumerate() {
            for &e in row {
                row_of[e] = r;
            }
        }
        (1..self.size()).filter(|&i| row_of[i + 1] > row_of[i]).collect()
    }

    pub fn transpose(&self) -> Tableau {
        let width = self.rows.first().map_or(0, |r| r.len());
        Tableau {
            rows: (0..width).map(|c| self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect()).collect(),
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// All standard Young tableaux of shape `λ`, each with its descent set.
///
/// Built by placing the largest remaining entry into each removable corner
/// in turn, so the order is deterministic.
pub fn syt_enumerate(shape: &Partition) -> Vec<(Tableau, BTreeSet<usize>)> {
    fn rec(shape: &mut Vec<usize>, filled: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
        let n: usize = shape.iter().sum();
        if n == 0 {
            let mut rows = filled.clone();
            for r in &mut rows {
                r.reverse();
            }
            out.push(Tableau { rows });
            return;
        }
        for r in 0..shape.len() {
            let removable = shape[r] > 0 && (r + 1 == shape.len() || shape[r + 1] < shape[r]);
            if !removable {
                continue;
            }
            shape[r] -= 1;
            filled[r].push(n);
            rec(shape, filled, out);
            filled[r].pop();
            shape[r] += 1;
        }
    }
    let mut out = Vec::new();
    let mut sh = shape.parts().to_vec();
    let mut filled = vec![Vec::new(); sh.len()];
    rec(&mut sh, &mut filled, &mut out);
    out.into_iter()
        .map(|t| {
            let d = t.descents();
            (t, d)
        })
        .collect()
}

/// Kostka number `K_{λ,γ}`: semistandard tableaux of shape `λ` and content `γ`.
pub fn kostka(shape: &Partition, content: &[usize]) -> Result<BigInt> {
    if shape.size() != content.iter().sum::<usize>() {
        return Err(Error::SizeMismatch(format!("{shape} vs content {content:?}")));
    }
    let mut memo = HashMap::new();
    Ok(kostka_rec(shape.parts(), content, &mut memo))
}

/// Removes horizontal strips for the largest letter, recursing on the rest.
fn kostka_rec(shape: &[usize], content: &[usize], memo: &mut HashMap<(Vec<usize>, usize), BigInt>) -> BigInt {
    let Some((&last, rest)) = content.split_last() else {
        return if shape.is_empty() { BigInt::one() } else { BigInt::from(0) };
    };
    let key = (shape.to_vec(), content.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigInt::from(0);
    let mut inner = shape.to_vec();
    horizontal_strips(shape, 0, last, &mut inner, &mut |nu| {
        let trimmed: Vec<usize> = nu.iter().copied().filter(|&p| p > 0).collect();
        total += kostka_rec(&trimmed, rest, memo);
    });
    memo.insert(key, total.clone());
    total
}

/// Calls `f` with every `ν ⊆ λ` such that `λ/ν` is a horizontal strip of size `k`.
fn horizontal_strips(outer: &[usize], row: usize, k: usize, inner: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if row == outer.len() {
        if k == 0 {
            f(inner);
        }
        return;
    }
    // ν_row ≥ λ_{row+1} keeps the strip horizontal.
    let lower = outer.get(row + 1).copied().unwrap_or(0);
    let max_take = (outer[row] - lower).min(k);
    for take in 0..=max_take {
        inner[row] = outer[row] - take;
        horizontal_strips(outer, row + 1, k - take, inner, f);
    }
    inner[row] = outer[row];
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::from_parts(v.to_vec()).unwrap()
    }

    /// Partition counts from the pentagonal-number recurrence.
    fn partition_count(n: usize) -> usize {
        let mut c = vec![0i64; n + 1];
        c[0] = 1;
        for m in 1..=n {
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                c[m] += sign * c[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    c[m] += sign * c[m - g2];
                }
                k += 1;
            }
        }
        c[n] as usize
    }

    #[test]
    fn small_partition_lists() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        for n in 0..=12 {
            let ps = partitions_of(n);
            assert_eq!(ps.len(), partition_count(n));
            assert!(ps.windows(2).all(|w| w[0] > w[1]));
        }
        assert_eq!(partitions_of(8).len(), 22);
    }

    #[test]
    fn conjugation() {
        assert_eq!(p(&[3, 3, 2, 1]).conjugate(), p(&[4, 3, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        for l in partitions_of(8) {
            assert_eq!(l.conjugate().conjugate(), l);
        }
    }

    #[test]
    fn dominance() {
        assert!(p(&[2, 2]).dominance_leq(&p(&[3, 1])).unwrap());
        assert!(!p(&[3, 1]).dominance_leq(&p(&[2, 2])).unwrap());
        let (a, b) = (p(&[2, 2, 2]), p(&[3, 1, 1, 1]));
        assert!(!a.dominance_leq(&b).unwrap() && !b.dominance_leq(&a).unwrap());
        assert!(matches!(p(&[2]).dominance_leq(&p(&[1])), Err(Error::SizeMismatch(_))));
        // Dominance flips under conjugation.
        for a in partitions_of(6) {
            for b in partitions_of(6) {
                assert_eq!(a.dominance_leq(&b).unwrap(), b.conjugate().dominance_leq(&a.conjugate()).unwrap());
            }
        }
    }

    #[test]
    fn z_values() {
        assert_eq!(p(&[1, 1, 1]).z(), BigInt::from(6));
        assert_eq!(p(&[2, 1]).z(), BigInt::from(2));
        for n in 0..=8usize {
            let fact: BigInt = (1..=n).product();
            let total: BigInt = partitions_of(n).iter().map(|l| &fact / l.z()).sum();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn worked_tableau() {
        let t = Tableau::new(vec![vec![1, 3, 4], vec![2, 6, 8], vec![5], vec![7]]).unwrap();
        assert!(t.is_standard());
        assert_eq!(t.reading_word(), vec![7, 5, 2, 6, 8, 1, 3, 4]);
        assert_eq!(t.descents(), BTreeSet::from([1, 4, 6]));
        let syts = syt_enumerate(&p(&[3, 3, 1, 1]));
        assert!(syts.iter().any(|(s, d)| s == &t && d == &BTreeSet::from([1, 4, 6])));
    }

    #[test]
    fn syt_counts() {
        let single = syt_enumerate(&p(&[5]));
        assert_eq!(single.len(), 1);
        assert!(single[0].1.is_empty());
        assert_eq!(syt_enumerate(&p(&[2, 2])).len(), 2);
        for n in 0..=7usize {
            let fact: BigInt = (1..=n).product();
            let mut sum = BigInt::from(0);
            for l in partitions_of(n) {
                let syts = syt_enumerate(&l);
                assert_eq!(BigInt::from(syts.len()), l.hook_count());
                assert!(syts.iter().all(|(t, _)| t.is_standard() && t.shape() == l));
                let distinct: BTreeSet<Vec<usize>> = syts.iter().map(|(t, _)| t.reading_word()).collect();
                assert_eq!(distinct.len(), syts.len());
                sum += BigInt::from(syts.len() * syts.len());
            }
            assert_eq!(sum, fact);
        }
    }

    #[test]
    fn transpose_complements_descents() {
        for n in 1..=6 {
            for l in partitions_of(n) {
                for (t, d) in syt_enumerate(&l) {
                    let tt = t.transpose();
                    assert!(tt.is_standard());
                    assert_eq!(tt.shape(), l.conjugate());
                    let comp: BTreeSet<usize> = (1..n).filter(|i| !d.contains(i)).collect();
                    assert_eq!(tt.descents(), comp);
                }
            }
        }
    }

    /// Counts SSYT by filling cells in reading order with bounded values.
    fn ssyt_count(shape: &Partition, content: &[usize]) -> usize {
        let cells: Vec<(usize, usize)> =
            shape.parts().iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
        let k = content.len();
        let mut grid: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
        let mut used = vec![0; k + 1];
        fn rec(
            idx: usize,
            cells: &[(usize, usize)],
            grid: &mut Vec<Vec<usize>>,
            used: &mut Vec<usize>,
            content: &[usize],
        ) -> usize {
            if idx == cells.len() {
                return usize::from((1..=content.len()).all(|v| used[v] == content[v - 1]));
            }
            let (r, c) = cells[idx];
            let mut total = 0;
            for v in 1..=content.len() {
                if used[v] == content[v - 1] {
                    continue;
                }
                if c > 0 && grid[r][c - 1] > v {
                    continue;
                }
                if r > 0 && grid[r - 1][c] >= v {
                    continue;
                }
                grid[r][c] = v;
                used[v] += 1;
                total += rec(idx + 1, cells, grid, used, content);
                used[v] -= 1;
            }
            grid[r][c] = 0;
            total
        }
        rec(0, &cells, &mut grid, &mut used, content)
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p(&[2, 1]), &[1, 1, 1]).unwrap(), BigInt::from(2));
        assert_eq!(kostka(&p(&[1, 1]), &[2]).unwrap(), BigInt::from(0));
        assert!(matches!(kostka(&p(&[2]), &[1]), Err(Error::SizeMismatch(_))));
        for n in 0..=6 {
            for l in partitions_of(n) {
                assert_eq!(kostka(&l, l.parts()).unwrap(), BigInt::one());
            }
        }
    }

    #[test]
    fn kostka_matches_direct_enumeration() {
        for n in 1..=6 {
            for l in partitions_of(n) {
                for g in compositions_of(n).iter().filter(|g| g.parts().len() <= 4) {
                    assert_eq!(kostka(&l, g.parts()).unwrap(), BigInt::from(ssyt_count(&l, g.parts())), "{l} {g}");
                }
            }
        }
    }

    #[test]
    fn standardization_bijection() {
        for n in 1..=7 {
            for l in partitions_of(n) {
                let syts = syt_enumerate(&l);
                for g in compositions_of(n).iter().filter(|g| g.parts().len() <= 4) {
                    let d = g.d_set();
                    let count = syts.iter().filter(|(_, des)| des.is_subset(&d)).count();
                    assert_eq!(kostka(&l, g.parts()).unwrap(), BigInt::from(count));
                }
            }
        }
    }

    #[test]
    fn kostka_symmetric_in_content() {
        for n in 1..=6 {
            for l in partitions_of(n) {
                for g in compositions_of(n) {
                    let sorted = g.sorted();
                    assert_eq!(kostka(&l, g.parts()).unwrap(), kostka(&l, sorted.parts()).unwrap());
                }
            }
        }
    }

    #[test]
    fn d_sets() {
        let g = Composition::new(vec![1, 3, 2]).unwrap();
        assert_eq!(g.d_set(), BTreeSet::from([1, 4, 6]));
        let masked: BTreeSet<usize> = g.d_set().into_iter().filter(|&x| x < 6).collect();
        assert_eq!(masked, BTreeSet::from([1, 4]));
        assert_eq!(Composition::new(vec![5]).unwrap().d_set(), BTreeSet::from([5]));
        for n in 1..=6 {
            for c in compositions_of(n) {
                assert_eq!(Composition::from_d_set(&c.d_set()), c);
            }
        }
    }

    #[test]
    fn partition_json() {
        let s = serde_json::to_string(&p(&[3, 1])).unwrap();
        assert_eq!(s, "[3,1]");
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }

    proptest! {
        #[test]
        fn conjugate_preserves_size(parts in prop::collection::vec(1usize..7, 0..7)) {
            let l = Partition::new(parts);
            prop_assert_eq!(l.conjugate().size(), l.size());
            prop_assert_eq!(l.conjugate().len(), l.part(0));
        }
    }
}

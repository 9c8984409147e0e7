//! The type `A_{n-1}` weight lattice `Z^n`, together with the partition,
//! composition and standard tableau combinatorics used for counting and
//! character identities.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("simple root index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("weight length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(usize),
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),
    #[error("invalid composition {0:?}: parts must be positive")]
    InvalidComposition(Vec<usize>),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// An element of `Z^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    /// The `k`-th unit vector `e_k` (1-based).
    pub fn unit(n: usize, k: usize) -> Self {
        let mut coords = vec![0; n];
        coords[k - 1] = 1;
        Weight(coords)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Coordinate `k`, 1-based, matching the `wt_k` notation.
    pub fn get(&self, k: usize) -> i64 {
        self.0[k - 1]
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Equality in `Z^n / Z(1, ..., 1)`.
    pub fn eq_modulo_ones(&self, other: &Weight) -> bool {
        if self.len() != other.len() {
            return false;
        }
        if self.is_empty() {
            return true;
        }
        let shift = self.0[0] - other.0[0];
        self.0.iter().zip(&other.0).all(|(a, b)| a - b == shift)
    }

    fn zip_with(&self, other: &Weight, op: impl Fn(i64, i64) -> i64) -> Weight {
        assert_eq!(self.len(), other.len(), "weight length mismatch");
        Weight(self.0.iter().zip(&other.0).map(|(&a, &b)| op(a, b)).collect())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `alpha_i = e_i - e_{i+1}` in rank `n`.
pub fn simple_root(i: usize, n: usize) -> Result<Weight, WeightError> {
    if i == 0 || i >= n {
        return Err(WeightError::IndexOutOfRange {
            index: i,
            max: n.saturating_sub(1),
        });
    }
    let mut coords = vec![0; n];
    coords[i - 1] = 1;
    coords[i] = -1;
    Ok(Weight(coords))
}

pub fn pairing(u: &Weight, v: &Weight) -> Result<i64, WeightError> {
    if u.len() != v.len() {
        return Err(WeightError::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(u.0.iter().zip(&v.0).map(|(a, b)| a * b).sum())
}

/// `<wt, alpha_i> = wt_i - wt_{i+1}`, without materialising the root.
#[inline]
pub fn pair_with_root(wt: &Weight, i: usize) -> i64 {
    wt.0[i - 1] - wt.0[i]
}

/// `rho = (n-1, ..., 1, 0)`.
pub fn rho(n: usize) -> Result<Weight, WeightError> {
    if n < 2 {
        return Err(WeightError::RankTooSmall(n));
    }
    Ok(Weight((0..n).rev().map(|k| k as i64).collect()))
}

fn parse_parts(input: &str) -> Result<Vec<usize>, WeightError> {
    let trimmed = input.trim().trim_start_matches('(').trim_end_matches(')');
    if trimmed.is_empty() {
        return Err(WeightError::Parse {
            input: input.to_string(),
            reason: "empty".into(),
        });
    }
    trimmed
        .split(',')
        .map(|tok| {
            tok.trim().parse::<usize>().map_err(|e| WeightError::Parse {
                input: input.to_string(),
                reason: e.to_string(),
            })
        })
        .collect()
}

/// An integer partition with positive, weakly decreasing parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, WeightError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if !ok {
            return Err(WeightError::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The parts padded with zeros to a weight of length `n`.
    pub fn to_weight(&self, n: usize) -> Weight {
        let mut coords: Vec<i64> = self.0.iter().map(|&p| p as i64).collect();
        coords.resize(n, 0);
        Weight(coords)
    }

    /// All partitions of `m`, in reverse lexicographic order.
    pub fn all(m: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                prefix.push(p);
                go(rest - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(m, m, &mut Vec::new(), &mut out);
        out
    }

    /// Number of standard tableaux of this shape by the hook length formula.
    pub fn hook_length_count(&self) -> u128 {
        let conjugate: Vec<usize> = (0..self.0.first().copied().unwrap_or(0))
            .map(|c| self.0.iter().filter(|&&row| row > c).count())
            .collect();
        let mut hooks: u128 = 1;
        for (r, &row) in self.0.iter().enumerate() {
            for (c, &col) in conjugate.iter().enumerate().take(row) {
                hooks *= ((row - c - 1) + (col - r - 1) + 1) as u128;
            }
        }
        let factorial: u128 = (1..=self.size() as u128).product();
        factorial / hooks
    }
}

impl FromStr for Partition {
    type Err = WeightError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Partition::new(parse_parts(s)?)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

fn fmt_parts(parts: &[usize], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "(")?;
    for (k, p) in parts.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

/// An ordered sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, WeightError> {
        if parts.contains(&0) {
            return Err(WeightError::InvalidComposition(parts));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Proper partial sums `a_1, a_1 + a_2, ...`, excluding the total.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.0.len().saturating_sub(1));
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// The composition of `k` whose descent set is `descents` (sorted, in `1..k`).
    pub fn from_descents(k: usize, descents: &[usize]) -> Composition {
        let mut parts = Vec::with_capacity(descents.len() + 1);
        let mut prev = 0;
        for &d in descents {
            parts.push(d - prev);
            prev = d;
        }
        parts.push(k - prev);
        Composition(parts)
    }

    /// Reads a composition off a content vector by dropping trailing zeros.
    /// Returns `None` if a zero remains in the middle.
    pub fn from_content(wt: &Weight) -> Option<Composition> {
        let mut coords = wt.coords().to_vec();
        while coords.last() == Some(&0) {
            coords.pop();
        }
        if coords.iter().any(|&c| c <= 0) {
            return None;
        }
        Some(Composition(coords.into_iter().map(|c| c as usize).collect()))
    }
}

impl FromStr for Composition {
    type Err = WeightError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Composition::new(parse_parts(s)?)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

/// A standard Young tableau, stored as rows in English notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Checks shape, entries `1..=k` and row/column increase.
    pub fn new(rows: Vec<Vec<usize>>) -> Option<Self> {
        let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
        Partition::new(shape).ok()?;
        let k: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; k + 1];
        for &e in rows.iter().flatten() {
            if e == 0 || e > k || seen[e] {
                return None;
            }
            seen[e] = true;
        }
        for (r, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return None;
            }
            if r > 0 && row.iter().zip(&rows[r - 1]).any(|(below, above)| below <= above) {
                return None;
            }
        }
        Some(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Row (0-based) holding `entry`.
    fn row_of(&self, entry: usize) -> usize {
        self.rows
            .iter()
            .position(|row| row.contains(&entry))
            .expect("entry present in a standard tableau")
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                write!(f, "|")?;
            }
            for (c, e) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

/// All standard tableaux of `shape`, each exactly once.
///
/// Entries are placed in increasing order; entry `k` may go at the end of
/// any row whose length stays within the shape and does not exceed the row
/// above it.
pub fn enumerate_syt(shape: &Partition) -> Vec<StandardTableau> {
    fn go(
        shape: &[usize],
        next: usize,
        total: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if next > total {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(next);
                go(shape, next + 1, total, rows, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.len()];
    go(shape.parts(), 1, shape.size(), &mut rows, &mut out);
    out
}

/// `j` is a descent when `j + 1` lies in a strictly lower row than `j`.
pub fn descent_set(t: &StandardTableau) -> Vec<usize> {
    (1..t.size())
        .filter(|&j| t.row_of(j + 1) > t.row_of(j))
        .collect()
}

pub fn descent_composition(t: &StandardTableau) -> Composition {
    Composition::from_descents(t.size(), &descent_set(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn simple_roots() {
        assert_eq!(simple_root(1, 3).unwrap().coords(), &[1, -1, 0]);
        assert_eq!(simple_root(2, 3).unwrap().coords(), &[0, 1, -1]);
        assert_eq!(simple_root(1, 2).unwrap().coords(), &[1, -1]);
        assert!(simple_root(0, 3).is_err());
        assert!(simple_root(3, 3).is_err());
    }

    #[test]
    fn pairings_of_roots() {
        let a = |i| simple_root(i, 4).unwrap();
        assert_eq!(pairing(&a(1), &a(1)).unwrap(), 2);
        assert_eq!(pairing(&a(1), &a(2)).unwrap(), -1);
        assert_eq!(pairing(&a(1), &a(3)).unwrap(), 0);
        assert!(pairing(&Weight::zero(2), &Weight::zero(3)).is_err());
    }

    #[test]
    fn rho_pairs_to_one() {
        assert_eq!(rho(3).unwrap().coords(), &[2, 1, 0]);
        assert_eq!(rho(2).unwrap().coords(), &[1, 0]);
        assert!(rho(1).is_err());
        for n in 2..8 {
            let r = rho(n).unwrap();
            for i in 1..n {
                assert_eq!(pairing(&simple_root(i, n).unwrap(), &r).unwrap(), 1);
            }
        }
    }

    #[test]
    fn syt_counts() {
        assert_eq!(enumerate_syt(&p(&[1])).len(), 1);
        assert_eq!(enumerate_syt(&p(&[2, 1])).len(), 2);
        assert_eq!(enumerate_syt(&p(&[2, 1, 1])).len(), 3);
    }

    /// Brute force: every filling of the shape by a permutation of 1..k,
    /// filtered by the tableau conditions.
    fn brute_force_syt(shape: &Partition) -> usize {
        let k = shape.size();
        let mut perm: Vec<usize> = (1..=k).collect();
        let mut count = 0;
        loop {
            let mut rows = Vec::new();
            let mut rest = &perm[..];
            for &len in shape.parts() {
                rows.push(rest[..len].to_vec());
                rest = &rest[len..];
            }
            if StandardTableau::new(rows).is_some() {
                count += 1;
            }
            // next permutation
            let Some(i) = (1..k).rev().find(|&i| perm[i - 1] < perm[i]) else {
                break;
            };
            let j = (i..k).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
            perm.swap(i - 1, j);
            perm[i..].reverse();
        }
        count
    }

    #[test]
    fn syt_matches_hook_length_and_brute_force() {
        for m in 1..=6 {
            for shape in Partition::all(m) {
                let tableaux = enumerate_syt(&shape);
                assert_eq!(tableaux.len() as u128, shape.hook_length_count(), "{shape}");
                if m <= 5 {
                    assert_eq!(tableaux.len(), brute_force_syt(&shape), "{shape}");
                }
                let mut dedup = tableaux.clone();
                dedup.sort();
                dedup.dedup();
                assert_eq!(dedup.len(), tableaux.len());
                assert!(tableaux.iter().all(|t| StandardTableau::new(t.rows().to_vec()).is_some()));
            }
        }
    }

    #[test]
    fn descent_compositions() {
        let one_row = StandardTableau::new(vec![vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(descent_composition(&one_row).parts(), &[4]);
        let t = StandardTableau::new(vec![vec![1, 2], vec![3]]).unwrap();
        assert_eq!(descent_composition(&t).parts(), &[2, 1]);
        let t = StandardTableau::new(vec![vec![1, 3], vec![2]]).unwrap();
        assert_eq!(descent_composition(&t).parts(), &[1, 2]);
    }

    #[test]
    fn invalid_tableaux_rejected() {
        assert!(StandardTableau::new(vec![vec![2, 1]]).is_none());
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2, 4], vec![5]]).is_some());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![2]]).is_none());
        assert!(StandardTableau::new(vec![vec![1], vec![2, 3]]).is_none());
    }

    #[test]
    fn parsing() {
        assert_eq!("2,1,1".parse::<Partition>().unwrap(), p(&[2, 1, 1]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
        assert_eq!("1,2".parse::<Composition>().unwrap().parts(), &[1, 2]);
        assert!("1,0".parse::<Composition>().is_err());
    }

    #[test]
    fn composition_descents_roundtrip() {
        let c = Composition::new(vec![1, 2, 1]).unwrap();
        assert_eq!(c.descent_set(), vec![1, 3]);
        assert_eq!(Composition::from_descents(4, &[1, 3]), c);
        assert_eq!(
            Composition::from_content(&Weight::new(vec![2, 1, 0])).unwrap().parts(),
            &[2, 1]
        );
        assert!(Composition::from_content(&Weight::new(vec![1, 0, 1])).is_none());
    }

    #[test]
    fn quotient_equality() {
        let a = Weight::new(vec![2, 2, 1]);
        assert!(a.eq_modulo_ones(&Weight::new(vec![1, 1, 0])));
        assert!(!a.eq_modulo_ones(&Weight::new(vec![1, 0, 0])));
    }

    proptest! {
        #[test]
        fn pairing_symmetric_bilinear(
            u in proptest::collection::vec(-20i64..20, 5),
            v in proptest::collection::vec(-20i64..20, 5),
            w in proptest::collection::vec(-20i64..20, 5),
            s in -5i64..5,
        ) {
            let (u, v, w) = (Weight::new(u), Weight::new(v), Weight::new(w));
            prop_assert_eq!(pairing(&u, &v).unwrap(), pairing(&v, &u).unwrap());
            let sum = &u + &w;
            prop_assert_eq!(
                pairing(&sum, &v).unwrap(),
                pairing(&u, &v).unwrap() + pairing(&w, &v).unwrap()
            );
            let scaled = Weight::new(u.coords().iter().map(|c| c * s).collect());
            prop_assert_eq!(pairing(&scaled, &v).unwrap(), s * pairing(&u, &v).unwrap());
        }

        #[test]
        fn descent_composition_sums_to_size(m in 1usize..=6, pick in 0usize..64) {
            let shapes = Partition::all(m);
            let shape = &shapes[pick % shapes.len()];
            for t in enumerate_syt(shape) {
                prop_assert_eq!(descent_composition(&t).size(), m);
            }
        }
    }
}

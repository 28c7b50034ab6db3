//! Integer partitions.
//!
//! A [`Partition`] stores its positive parts in weakly decreasing order; zero
//! parts are stripped at construction so the empty partition is the only
//! partition of weight 0. The [`Ord`] implementation sorts by weight first and
//! then reverse-lexicographically, which refines the dominance order on each
//! `P_n`. Every sparse map keyed by partitions iterates in that order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Single-row partition `(n)`; `(0)` is the empty partition.
    pub fn row(n: usize) -> Self {
        sort_to_partition(&[n])
    }

    /// Builds a partition from parts that are already weakly decreasing.
    /// Zero parts are dropped. Returns an error if the input is not sorted.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::MalformedPartition(format!("{parts:?}")));
        }
        Ok(sort_to_partition(&parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Last (smallest) part, if any.
    pub fn last(&self) -> Option<usize> {
        self.parts.last().copied()
    }

    /// `m_i(λ)`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn z(&self) -> BigInt {
        z_lambda(self)
    }

    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        dominance_geq(self, other)
    }

    pub fn union(&self, other: &Partition) -> Partition {
        union(self, other)
    }

    /// The partition obtained by deleting one copy of `part`, if present.
    pub fn without_part(&self, part: usize) -> Option<Partition> {
        let idx = self.parts.iter().position(|&p| p == part)?;
        let mut parts = self.parts.clone();
        parts.remove(idx);
        Some(Partition { parts })
    }
}

/// Rearranges non-negative integers into a partition, dropping zeros.
pub fn sort_to_partition(values: &[usize]) -> Partition {
    let mut parts: Vec<usize> = values.iter().copied().filter(|&v| v > 0).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition { parts }
}

/// `z_λ = Π_i i^{m_i} m_i!`.
pub fn z_lambda(lambda: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (part, mult) in lambda.multiplicities() {
        for k in 1..=mult {
            z *= BigInt::from(part) * BigInt::from(k);
        }
    }
    z
}

/// Dominance order `λ ≥ μ`; both partitions must have the same weight.
pub fn dominance_geq(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.weight() != mu.weight() {
        return Err(Error::IncomparableWeights(lambda.clone(), mu.clone()));
    }
    Ok(dominates_unchecked(lambda.parts(), mu.parts()))
}

pub(crate) fn dominates_unchecked(lambda: &[usize], mu: &[usize]) -> bool {
    let len = lambda.len().max(mu.len());
    let (mut sl, mut sm) = (0usize, 0usize);
    for i in 0..len {
        sl += lambda.get(i).copied().unwrap_or(0);
        sm += mu.get(i).copied().unwrap_or(0);
        if sl < sm {
            return false;
        }
    }
    true
}

/// Strict dominance `λ > μ` for partitions of equal weight.
pub fn dominates_strictly(lambda: &Partition, mu: &Partition) -> bool {
    lambda != mu
        && lambda.weight() == mu.weight()
        && dominates_unchecked(lambda.parts(), mu.parts())
}

/// `λ ∪ μ`: multiplicities add.
pub fn union(lambda: &Partition, mu: &Partition) -> Partition {
    let mut parts = Vec::with_capacity(lambda.len() + mu.len());
    let (a, b) = (lambda.parts(), mu.parts());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] >= b[j]) {
            parts.push(a[i]);
            i += 1;
        } else {
            parts.push(b[j]);
            j += 1;
        }
    }
    Partition { parts }
}

/// `λ⁺ = [λ_1, …, λ_{s-2}, λ_{s-1}+1, λ_s−1]`.
pub fn lambda_plus(lambda: &Partition) -> Result<Partition> {
    let s = lambda.len();
    if s < 2 {
        return Err(Error::TooFewParts(lambda.clone()));
    }
    let mut values = lambda.parts().to_vec();
    values[s - 2] += 1;
    values[s - 1] -= 1;
    Ok(sort_to_partition(&values))
}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first.
pub fn enumerate(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` that dominate `lambda`, in enumeration order.
pub fn dominating(lambda: &Partition) -> Vec<Partition> {
    enumerate(lambda.weight())
        .into_iter()
        .filter(|mu| dominates_unchecked(mu.parts(), lambda.parts()))
        .collect()
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the comma-separated form `"3,2,1"`; `""` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| tok.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::MalformedPartition(s.to_string()))?;
        Partition::new(parts).map_err(|_| Error::MalformedPartition(s.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn sort_examples() {
        assert_eq!(sort_to_partition(&[1, 3, 2]), p(&[3, 2, 1]));
        assert_eq!(sort_to_partition(&[2, 0, 2]), p(&[2, 2]));
        assert_eq!(sort_to_partition(&[]), Partition::empty());
    }

    #[test]
    fn z_examples() {
        assert_eq!(z_lambda(&Partition::empty()), BigInt::from(1));
        assert_eq!(z_lambda(&p(&[2, 1])), BigInt::from(2));
        assert_eq!(z_lambda(&p(&[1, 1, 1])), BigInt::from(6));
        assert_eq!(z_lambda(&p(&[2, 2, 1])), BigInt::from(8));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_geq(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap());
        assert!(!dominance_geq(&p(&[2, 2]), &p(&[3, 1])).unwrap());
        assert!(dominance_geq(&p(&[3, 1]), &p(&[3, 1])).unwrap());
        assert_eq!(
            dominance_geq(&p(&[2]), &p(&[1])),
            Err(Error::IncomparableWeights(p(&[2]), p(&[1])))
        );
    }

    #[test]
    fn union_examples() {
        assert_eq!(union(&p(&[2, 1]), &p(&[2])), p(&[2, 2, 1]));
        assert_eq!(union(&p(&[3]), &Partition::empty()), p(&[3]));
        assert_eq!(union(&p(&[1, 1]), &p(&[1])), p(&[1, 1, 1]));
    }

    #[test]
    fn lambda_plus_examples() {
        assert_eq!(lambda_plus(&p(&[2, 2])).unwrap(), p(&[3, 1]));
        assert_eq!(lambda_plus(&p(&[3, 1, 1])).unwrap(), p(&[3, 2]));
        assert_eq!(lambda_plus(&p(&[2, 1])).unwrap(), p(&[3]));
        assert!(matches!(lambda_plus(&p(&[4])), Err(Error::TooFewParts(_))));
        assert!(lambda_plus(&Partition::empty()).is_err());
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate(0), vec![Partition::empty()]);
        assert_eq!(enumerate(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        let four = enumerate(4);
        assert_eq!(four.len(), 5);
        assert_eq!(four[0], p(&[4]));
        assert_eq!(four[4], p(&[1, 1, 1, 1]));
    }

    #[test]
    fn enumeration_matches_ord() {
        for n in 0..=8 {
            let list = enumerate(n);
            let mut sorted = list.clone();
            sorted.sort();
            assert_eq!(list, sorted);
        }
    }

    #[test]
    fn text_and_json_forms() {
        let lam: Partition = "3,2,1".parse().unwrap();
        assert_eq!(lam, p(&[3, 2, 1]));
        assert_eq!(lam.to_string(), "3,2,1");
        assert_eq!(serde_json::to_string(&lam).unwrap(), "[3,2,1]");
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "");
        assert_eq!(serde_json::to_string(&Partition::empty()).unwrap(), "[]");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}

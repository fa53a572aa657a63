//! Finitely supported degree tables, the common currency for Hom spaces.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Map from cohomological degree to dimension, optionally refined by an
/// internal weight. Equality compares the degree marginal only.
#[derive(Clone, Default, Serialize)]
pub struct DegreeTable {
    entries: BTreeMap<i64, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    weights: Option<BTreeMap<(i64, i64), u64>>,
}

impl DegreeTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (i64, u64)>>(pairs: I) -> Self {
        let mut t = Self::new();
        for (d, dim) in pairs {
            t.add(d, dim);
        }
        t
    }

    /// Adds `dim` to degree `d`; zero dimensions are not stored.
    pub fn add(&mut self, d: i64, dim: u64) {
        if dim > 0 {
            *self.entries.entry(d).or_insert(0) += dim;
        }
    }

    /// Records `dim` classes in degree `d` of internal weight `t`, updating
    /// both channels.
    pub fn add_weighted(&mut self, d: i64, t: i64, dim: u64) {
        if dim == 0 {
            return;
        }
        self.add(d, dim);
        *self.weights.get_or_insert_with(BTreeMap::new).entry((d, t)).or_insert(0) += dim;
    }

    pub fn get(&self, d: i64) -> u64 {
        self.entries.get(&d).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.entries.iter().map(|(&d, &m)| (d, m))
    }

    pub fn weights(&self) -> Option<&BTreeMap<(i64, i64), u64>> {
        self.weights.as_ref()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Alternating sum `sum_d (-1)^d dim_d`.
    pub fn euler(&self) -> i64 {
        self.iter().map(|(d, m)| if d.rem_euclid(2) == 0 { m as i64 } else { -(m as i64) }).sum()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.entries.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.entries.keys().next_back().copied()
    }

    /// Moves every entry from degree `d` to `d + by`.
    pub fn shifted(&self, by: i64) -> Self {
        DegreeTable {
            entries: self.entries.iter().map(|(&d, &m)| (d + by, m)).collect(),
            weights: self.weights.as_ref().map(|w| w.iter().map(|(&(d, t), &m)| ((d + by, t), m)).collect()),
        }
    }

    /// Degree-wise convolution: the Kunneth product of two graded spaces.
    pub fn convolve(&self, other: &DegreeTable) -> Self {
        let mut out = DegreeTable::new();
        for (d1, m1) in self.iter() {
            for (d2, m2) in other.iter() {
                out.add(d1 + d2, m1.checked_mul(m2).expect("dimension overflow"));
            }
        }
        out
    }

    /// Entry-wise sum.
    pub fn merge(&mut self, other: &DegreeTable) {
        for (d, m) in other.iter() {
            self.add(d, m);
        }
    }

    /// Whether the weight channel, when present, sums back to the degree
    /// marginal.
    pub fn weights_consistent(&self) -> bool {
        let Some(w) = &self.weights else { return true };
        let mut marginal: BTreeMap<i64, u64> = BTreeMap::new();
        for (&(d, _), &m) in w {
            *marginal.entry(d).or_insert(0) += m;
        }
        marginal == self.entries
    }

    /// Drops the weight channel.
    pub fn dims(&self) -> Self {
        DegreeTable { entries: self.entries.clone(), weights: None }
    }
}

impl PartialEq for DegreeTable {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for DegreeTable {}

impl fmt::Debug for DegreeTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `{0:1, 3:1}`
impl fmt::Display for DegreeTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (d, m)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}:{m}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_and_shift() {
        let t = DegreeTable::from_pairs([(0, 1), (3, 1)]);
        assert_eq!(t.euler(), 0);
        assert_eq!(t.shifted(-1), DegreeTable::from_pairs([(-1, 1), (2, 1)]));
        assert_eq!(DegreeTable::from_pairs([(-1, 5)]).euler(), -5);
    }

    #[test]
    fn convolution_adds_degrees() {
        let one = DegreeTable::from_pairs([(1, 1)]);
        let cube = one.convolve(&one).convolve(&one);
        assert_eq!(cube, DegreeTable::from_pairs([(3, 1)]));
        let a = DegreeTable::from_pairs([(0, 1), (1, 1)]);
        assert_eq!(a.convolve(&a), DegreeTable::from_pairs([(0, 1), (1, 2), (2, 1)]));
    }

    #[test]
    fn weights_track_marginal() {
        let mut t = DegreeTable::new();
        t.add_weighted(1, 0, 2);
        t.add_weighted(1, 3, 1);
        assert_eq!(t.get(1), 3);
        assert!(t.weights_consistent());
        assert_eq!(t, DegreeTable::from_pairs([(1, 3)]));
    }

    #[test]
    fn zero_dimensions_not_stored() {
        let t = DegreeTable::from_pairs([(2, 0)]);
        assert!(t.is_empty());
    }
}

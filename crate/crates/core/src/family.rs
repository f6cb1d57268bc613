//! Families of ternary strings and their structural tests: neighborliness,
//! volume, partitions, laminations and twin-pair reduction.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::count::Count;
use crate::nbx::{self, NbxError};
use crate::strings::{BinaryString, StringError, Symbol, TernaryString};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("empty family")]
    Empty,
    #[error("member {index} has length {found}, expected {expected}")]
    LengthMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("duplicate member {0}")]
    Duplicate(String),
    #[error("k = {k} out of range 1..={d}")]
    KOutOfRange { k: usize, d: usize },
    #[error("family is not a partition")]
    NotPartition,
    #[error("no twin of {0} in the family")]
    NoTwin(String),
    #[error(transparent)]
    String(#[from] StringError),
    #[error(transparent)]
    Nbx(#[from] NbxError),
}

/// An ordered, duplicate-free list of strings of a common length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Family {
    dim: usize,
    members: Vec<TernaryString>,
}

impl Family {
    pub fn new(dim: usize, members: Vec<TernaryString>) -> Result<Self, FamilyError> {
        let mut seen = HashSet::with_capacity(members.len());
        for (index, m) in members.iter().enumerate() {
            if m.len() != dim {
                return Err(FamilyError::LengthMismatch {
                    index,
                    expected: dim,
                    found: m.len(),
                });
            }
            if !seen.insert(m) {
                return Err(FamilyError::Duplicate(m.to_string()));
            }
        }
        Ok(Family { dim, members })
    }

    /// Infers the dimension from the first member.
    pub fn from_strings(members: Vec<TernaryString>) -> Result<Self, FamilyError> {
        let dim = members.first().ok_or(FamilyError::Empty)?.len();
        Self::new(dim, members)
    }

    pub fn parse_list(strings: &[&str]) -> Result<Self, FamilyError> {
        let members = strings.iter().map(|s| s.parse()).collect::<Result<Vec<_>, _>>()?;
        Self::from_strings(members)
    }

    pub fn from_nbx(text: &str) -> Result<Self, FamilyError> {
        Self::from_strings(nbx::parse(text)?)
    }

    pub fn to_nbx(&self) -> String {
        nbx::format(&self.members)
    }

    /// The full cube `H^d` in numeric order.
    pub fn full_cube(dim: usize) -> Self {
        assert!(dim < 64, "full cube too large");
        let members = (0..1u64 << dim).map(|b| TernaryString::from_bits(dim, b)).collect();
        Family { dim, members }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[TernaryString] {
        &self.members
    }

    pub fn into_members(self) -> Vec<TernaryString> {
        self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, TernaryString> {
        self.members.iter()
    }

    pub fn contains(&self, x: &TernaryString) -> bool {
        self.members.contains(x)
    }

    /// Members in sorted order; equal for families with the same member set.
    pub fn canonical_members(&self) -> Vec<TernaryString> {
        let mut v = self.members.clone();
        v.sort();
        v
    }

    pub fn same_members(&self, other: &Family) -> bool {
        self.dim == other.dim && self.canonical_members() == other.canonical_members()
    }

    /// Exhaustive pairwise check of `1 <= d(x, y) <= k`.
    pub fn verify_neighborly(&self, k: usize) -> Result<NeighborlinessReport, FamilyError> {
        if self.members.is_empty() {
            return Err(FamilyError::Empty);
        }
        if k == 0 || k > self.dim {
            return Err(FamilyError::KOutOfRange { k, d: self.dim });
        }
        let mut report = NeighborlinessReport {
            k,
            valid: true,
            min_distance: None,
            max_distance: None,
            violations: Vec::new(),
        };
        let masks: Option<Vec<(u64, u64)>> = self.members.iter().map(TernaryString::masks).collect();
        let distance = |i: usize, j: usize| match &masks {
            Some(m) => (((m[i].0 & m[j].1) | (m[i].1 & m[j].0)).count_ones()) as usize,
            None => self.members[i].conflicts(&self.members[j]),
        };
        let n = self.members.len();
        let rows: Vec<(Option<usize>, Option<usize>, Vec<Violation>)> = (0..n)
            .into_par_iter()
            .map(|i| {
                let (mut lo, mut hi, mut bad) = (None::<usize>, None::<usize>, Vec::new());
                for j in i + 1..n {
                    let dist = distance(i, j);
                    lo = Some(lo.map_or(dist, |m| m.min(dist)));
                    hi = Some(hi.map_or(dist, |m| m.max(dist)));
                    if dist == 0 || dist > k {
                        bad.push(Violation { i, j, distance: dist });
                    }
                }
                (lo, hi, bad)
            })
            .collect();
        for (lo, hi, bad) in rows {
            report.min_distance = match (report.min_distance, lo) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            };
            report.max_distance = report.max_distance.max(hi);
            report.violations.extend(bad);
        }
        report.valid = report.violations.is_empty();
        Ok(report)
    }

    pub fn is_neighborly(&self, k: usize) -> bool {
        self.verify_neighborly(k).map(|r| r.valid).unwrap_or(false)
    }

    /// `vol(F) = Σ 2^{j(x)}`.
    pub fn volume<C: Count>(&self) -> C {
        self.members
            .iter()
            .fold(C::zero(), |acc, x| acc + C::pow2(x.joker_count()))
    }

    fn pairwise_disjoint(members: &[TernaryString]) -> bool {
        members
            .iter()
            .enumerate()
            .all(|(i, x)| members[i + 1..].iter().all(|y| x.conflicts(y) >= 1))
    }

    fn has_full_volume(&self) -> bool {
        if self.dim < 127 {
            self.volume::<u128>() == u128::pow2(self.dim)
        } else {
            self.volume::<BigUint>() == BigUint::pow2(self.dim)
        }
    }

    /// Pairwise disjoint subcubes covering the whole of `H^d`.
    pub fn is_partition(&self) -> bool {
        !self.members.is_empty() && self.has_full_volume() && Self::pairwise_disjoint(&self.members)
    }

    /// `F^{i,s}`: members with symbol `s` at coordinate `i`.
    pub fn slice(&self, i: usize, s: Symbol) -> Result<Family, FamilyError> {
        if i == 0 || i > self.dim {
            return Err(StringError::IndexOutOfRange {
                index: i,
                len: self.dim,
            }
            .into());
        }
        let members = self
            .members
            .iter()
            .filter(|x| x.symbol(i).map(|sym| sym == s).unwrap_or(false))
            .cloned()
            .collect();
        Ok(Family { dim: self.dim, members })
    }

    /// `F_{-i}` for a family whose members stay distinct after deletion.
    fn delete_coord(&self, i: usize) -> Result<Family, FamilyError> {
        let members = self
            .members
            .iter()
            .map(|x| x.delete_coord(i))
            .collect::<Result<Vec<_>, _>>()?;
        Family::new(self.dim - 1, members)
    }

    /// Coordinates (1-based) at which every member is 0 or 1.
    pub fn common_support(&self) -> Vec<usize> {
        (1..=self.dim)
            .filter(|&i| self.members.iter().all(|x| x.symbol(i).unwrap() != Symbol::Joker))
            .collect()
    }

    /// Smallest coordinate `i` along which the partition splits as
    /// `F^{i,0} ∪ F^{i,1}`, or `None` if it is not a lamination.
    pub fn is_lamination(&self) -> Option<usize> {
        if !self.is_partition() {
            return None;
        }
        self.common_support().first().copied()
    }

    pub fn is_total_lamination(&self) -> bool {
        if !self.is_partition() {
            return false;
        }
        let mut memo = HashMap::new();
        total_lamination(self.canonical_members(), self.dim, &mut memo)
    }

    /// Repeated twin merging of a least-joker member, down to the all-joker
    /// singleton. The trace starts with `self`.
    pub fn reduce_to_trivial(&self) -> Result<Vec<Family>, FamilyError> {
        if !self.is_partition() {
            return Err(FamilyError::NotPartition);
        }
        let mut trace = vec![self.clone()];
        let mut current = self.members.clone();
        while current.len() > 1 {
            let xi = least_jokers(&current);
            let x = &current[xi];
            let yi = current
                .iter()
                .position(|y| x.is_twin_pair(y))
                .ok_or_else(|| FamilyError::NoTwin(x.to_string()))?;
            let union = x.twin_union(&current[yi])?;
            current[xi] = union;
            current.remove(yi);
            trace.push(Family {
                dim: self.dim,
                members: current.clone(),
            });
        }
        Ok(trace)
    }

    /// `Σ sgn(x)` over the members sharing the support of the first
    /// least-joker member. Zero on every partition with at least two
    /// members; the one-member partition `{*^d}` gives 1.
    pub fn sgn_sum(&self) -> Result<i64, FamilyError> {
        if !self.is_partition() {
            return Err(FamilyError::NotPartition);
        }
        let v = &self.members[least_jokers(&self.members)];
        Ok(self
            .members
            .iter()
            .filter(|x| x.same_support(v))
            .map(|x| i64::from(x.sign()))
            .sum())
    }

    /// Every member has at most `d - k` jokers.
    pub fn max_joker_ok(&self, k: usize) -> bool {
        self.members.iter().all(|x| x.joker_count() + k <= self.dim)
    }
}

fn least_jokers(members: &[TernaryString]) -> usize {
    let mut best = 0;
    for (i, x) in members.iter().enumerate() {
        if x.joker_count() < members[best].joker_count() {
            best = i;
        }
    }
    best
}

/// `members` is a sorted partition of `H^dim`.
fn total_lamination(members: Vec<TernaryString>, dim: usize, memo: &mut HashMap<Vec<TernaryString>, bool>) -> bool {
    if members.len() == 1 && members[0].joker_count() == dim {
        return true;
    }
    if dim < 64 && members.len() as u64 == 1u64 << dim && members.iter().all(TernaryString::is_binary) {
        return true;
    }
    if let Some(&known) = memo.get(&members) {
        return known;
    }
    let family = Family { dim, members };
    let mut result = false;
    for i in family.common_support() {
        let mut halves = [Symbol::Zero, Symbol::One].into_iter().map(|s| {
            let mut sub = family.slice(i, s).unwrap().delete_coord(i).unwrap().members;
            sub.sort();
            sub
        });
        let (zero, one) = (halves.next().unwrap(), halves.next().unwrap());
        if total_lamination(zero, dim - 1, memo) && total_lamination(one, dim - 1, memo) {
            result = true;
            break;
        }
    }
    memo.insert(family.members, result);
    result
}

/// Maximum pairwise Hamming distance of a nonempty set of cube vertices.
pub fn diameter(points: &[BinaryString]) -> Result<usize, FamilyError> {
    let first = points.first().ok_or(FamilyError::Empty)?;
    let mut best = 0;
    for (i, u) in points.iter().enumerate() {
        if u.len() != first.len() {
            return Err(FamilyError::LengthMismatch {
                index: i,
                expected: first.len(),
                found: u.len(),
            });
        }
        for v in &points[i + 1..] {
            best = best.max(u.hamming(v)?);
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    /// 0-based member indices, `i < j`.
    pub i: usize,
    pub j: usize,
    pub distance: usize,
}

/// Outcome of [`Family::verify_neighborly`]. Distances are `None` for a
/// single-member family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborlinessReport {
    pub k: usize,
    pub valid: bool,
    pub min_distance: Option<usize>,
    pub max_distance: Option<usize>,
    pub violations: Vec<Violation>,
}

impl Serialize for NeighborlinessReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("NeighborlinessReport", 4)?;
        st.serialize_field("valid", &self.valid)?;
        st.serialize_field("min_distance", &self.min_distance)?;
        st.serialize_field("max_distance", &self.max_distance)?;
        let v: Vec<[usize; 3]> = self.violations.iter().map(|v| [v.i, v.j, v.distance]).collect();
        st.serialize_field("violations", &v)?;
        st.end()
    }
}

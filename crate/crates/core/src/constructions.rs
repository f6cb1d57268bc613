//! Explicit neighborly families and the `m(k,d)` / `m̄(k,d)` optimizers.
//!
//! Every public constructor verifies the advertised neighborliness of its
//! output before returning it.

use std::collections::HashMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::count::Count;
use crate::family::{Family, FamilyError};
use crate::strings::{Symbol, TernaryString};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("constructed family failed verification: {0}")]
    VerificationFailed(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

fn invalid(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::InvalidParameters(msg.into())
}

fn checked(family: Family, k: usize, expected_len: usize) -> Result<Family, ConstructionError> {
    if family.len() != expected_len {
        return Err(ConstructionError::VerificationFailed(format!(
            "size {} differs from the expected {expected_len}",
            family.len()
        )));
    }
    let report = family.verify_neighborly(k)?;
    if !report.valid {
        return Err(ConstructionError::VerificationFailed(format!(
            "{} pairs violate {k}-neighborliness",
            report.violations.len()
        )));
    }
    Ok(family)
}

fn canonical_members(d: usize) -> Vec<TernaryString> {
    let zero: TernaryString = TernaryString::from_symbols(&[Symbol::Zero]);
    let one: TernaryString = TernaryString::from_symbols(&[Symbol::One]);
    let mut members = vec![zero.clone(), one];
    for len in 2..=d {
        let mut next: Vec<_> = members.iter().map(|x| zero.concat(x)).collect();
        next.push(TernaryString::from_symbols(&[Symbol::One]).concat(&TernaryString::jokers(len - 1)));
        members = next;
    }
    members
}

/// `C_d`: `C_1 = {0, 1}` and `C_d = 0·C_{d-1} ∪ {1*^{d-1}}`.
pub fn canonical(d: usize) -> Result<Family, ConstructionError> {
    if d == 0 {
        return Err(invalid("canonical family needs d >= 1"));
    }
    checked(Family::new(d, canonical_members(d))?, 1, d + 1)
}

/// Binary strings within Hamming distance `⌊k/2⌋` of `0^d`, by weight and
/// then text order.
pub fn ball_family(k: usize, d: usize) -> Result<Family, ConstructionError> {
    if k == 0 || k >= d {
        return Err(invalid(format!("ball family needs 1 <= k <= d-1, got k={k}, d={d}")));
    }
    let radius = k / 2;
    let mut members = Vec::new();
    for weight in 0..=radius {
        let mut level = Vec::new();
        let mut positions: Vec<usize> = (1..=weight).collect();
        loop {
            let mut s = TernaryString::from_symbols(&vec![Symbol::Zero; d]);
            for &p in &positions {
                s = s.with_symbol(p, Symbol::One).unwrap();
            }
            level.push(s);
            if !next_combination(&mut positions, d) {
                break;
            }
        }
        level.sort();
        members.extend(level);
    }
    let expected = crate::count::ball_size::<u128>(d, radius) as usize;
    checked(Family::new(d, members)?, k, expected)
}

/// Advances a sorted 1-based combination of `{1..n}`; false when exhausted.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let r = c.len();
    for i in (0..r).rev() {
        if c[i] < n - (r - 1 - i) {
            c[i] += 1;
            for j in i + 1..r {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// All concatenations `uv`, `u ∈ F`, `v ∈ G`, in row-major order.
pub fn product(f: &Family, g: &Family) -> Family {
    let members = f.iter().flat_map(|u| g.iter().map(move |v| u.concat(v))).collect();
    Family::new(f.dim() + g.dim(), members).expect("concatenations of distinct strings are distinct")
}

/// Parameters of the fragmented construction: `m` blocks of widths
/// `a_1..a_m` plus a prefix of width `C(m,k) - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FragmentPlan {
    pub k: usize,
    pub d: usize,
    pub m: usize,
    pub a: Vec<usize>,
}

fn binom_usize(n: usize, r: usize) -> Option<usize> {
    if r > n {
        return Some(0);
    }
    let mut acc: u128 = 1;
    for i in 0..r.min(n - r) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return None;
        }
    }
    Some(acc as usize)
}

/// Total width `C(m,k) + m - 1` of the narrowest plan with `m` blocks.
fn min_width(m: usize, k: usize) -> Option<usize> {
    binom_usize(m, k)?.checked_add(m - 1)
}

impl FragmentPlan {
    pub fn new(k: usize, d: usize, a: Vec<usize>) -> Result<Self, ConstructionError> {
        let m = a.len();
        if k == 0 || k > m || m > d {
            return Err(invalid(format!("need 1 <= k <= m <= d, got k={k}, m={m}, d={d}")));
        }
        if a.contains(&0) {
            return Err(invalid("block widths must be positive"));
        }
        let blocks = binom_usize(m, k).ok_or_else(|| invalid("C(m,k) overflows"))?;
        if min_width(m, k).is_none_or(|w| w > d) {
            return Err(invalid(format!("d={d} is below C(m,k)+m-1")));
        }
        let sum: usize = a.iter().sum();
        if sum != d + 1 - blocks {
            return Err(invalid(format!(
                "block widths sum to {sum}, expected d - C(m,k) + 1 = {}",
                d + 1 - blocks
            )));
        }
        Ok(FragmentPlan { k, d, m, a })
    }

    /// The plan with `m` blocks whose widths differ by at most one.
    pub fn balanced(k: usize, d: usize, m: usize) -> Result<Self, ConstructionError> {
        let width = min_width(m.max(1), k).filter(|&w| w <= d && k >= 1 && k <= m);
        let width = width.ok_or_else(|| invalid(format!("no plan with m={m} blocks for k={k}, d={d}")))?;
        FragmentPlan::new(k, d, balanced(d - width + m, m))
    }

    /// Number of prefix blocks `C(m,k)`.
    pub fn block_count(&self) -> usize {
        binom_usize(self.m, self.k).unwrap()
    }

    /// `Σ_B Π_{i∈B}(a_i + 1)`.
    pub fn size<C: Count>(&self) -> C {
        elementary_symmetric(self.a.iter().map(|&ai| C::from_usize_exact(ai + 1)), self.k)
    }
}

/// `e_k(x_1, ..., x_n)`.
fn elementary_symmetric<C: Count>(xs: impl IntoIterator<Item = C>, k: usize) -> C {
    let mut e = vec![C::zero(); k + 1];
    e[0] = C::one();
    for x in xs {
        for j in (1..=k).rev() {
            let add = e[j - 1].clone() * x.clone();
            e[j] = e[j].clone() + add;
        }
    }
    e[k].clone()
}

/// k-subsets of `{1..m}` in colexicographic order.
fn colex_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut c: Vec<usize> = (1..=k).collect();
    loop {
        out.push(c.clone());
        if !next_combination(&mut c, m) {
            break;
        }
    }
    out.sort_by(|x, y| x.iter().rev().cmp(y.iter().rev()));
    out
}

/// The per-`B` subfamilies `v_B R_B` of the fragmented construction, `B`
/// in colexicographic order.
pub fn fragmented_blocks(plan: &FragmentPlan) -> Result<Vec<Family>, ConstructionError> {
    let plan = FragmentPlan::new(plan.k, plan.d, plan.a.clone())?;
    let subsets = colex_subsets(plan.m, plan.k);
    let prefix_len = subsets.len() - 1;
    let prefixes = if prefix_len == 0 {
        vec![None]
    } else {
        canonical_members(prefix_len).into_iter().map(Some).collect()
    };
    let pieces: Vec<Family> = plan
        .a
        .iter()
        .map(|&ai| Family::new(ai, canonical_members(ai)).unwrap())
        .collect();
    let mut blocks = Vec::with_capacity(subsets.len());
    for (subset, prefix) in subsets.iter().zip(prefixes) {
        let mut r_b = match &prefix {
            Some(p) => Family::new(prefix_len, vec![p.clone()])?,
            None => Family::new(0, vec![TernaryString::jokers(0)])?,
        };
        for (i, piece) in pieces.iter().enumerate() {
            let x = if subset.contains(&(i + 1)) {
                piece.clone()
            } else {
                Family::new(piece.dim(), vec![TernaryString::jokers(piece.dim())])?
            };
            r_b = product(&r_b, &x);
        }
        blocks.push(r_b);
    }
    Ok(blocks)
}

/// Union of [`fragmented_blocks`], verified k-neighborly.
pub fn fragmented(plan: &FragmentPlan) -> Result<Family, ConstructionError> {
    let members: Vec<_> = fragmented_blocks(plan)?
        .into_iter()
        .flat_map(Family::into_members)
        .collect();
    let expected = plan.size::<u128>() as usize;
    checked(Family::new(plan.d, members)?, plan.k, expected)
}

/// `{0v : v ∈ H^{d-1}} ∪ {1*w : w ∈ H^{d-2}}`, a maximum (d-1)-neighborly
/// family.
pub fn extremal_dminus1(d: usize) -> Result<Family, ConstructionError> {
    if !(2..64).contains(&d) {
        return Err(invalid(format!("extremal family needs 2 <= d <= 63, got {d}")));
    }
    let zero = TernaryString::from_symbols(&[Symbol::Zero]);
    let one_joker = TernaryString::from_symbols(&[Symbol::One, Symbol::Joker]);
    let mut members: Vec<_> = (0..1u64 << (d - 1))
        .map(|b| zero.concat(&TernaryString::from_bits(d - 1, b)))
        .collect();
    if d == 2 {
        members.push(one_joker);
    } else {
        members.extend((0..1u64 << (d - 2)).map(|b| one_joker.concat(&TernaryString::from_bits(d - 2, b))));
    }
    checked(Family::new(d, members)?, d - 1, 3 << (d - 2))
}

/// Optimum of the fragmented construction for one `(k, d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MValue<C> {
    pub value: C,
    pub plan: FragmentPlan,
    /// False if some unbalanced block-width vector beat the balanced one
    /// for the same `m`.
    pub balanced_optimal: bool,
    /// False if the composition scan hit its cap for some `m`.
    pub exhaustive: bool,
}

impl<C: Count> Serialize for MValue<C> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("MValue", 3)?;
        st.serialize_field("value", &self.value.to_json())?;
        st.serialize_field("m", &self.plan.m)?;
        st.serialize_field("a", &self.plan.a)?;
        st.end()
    }
}

/// Optimum of products of fragmented constructions over splits of `(k, d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MBarValue<C> {
    pub value: C,
    pub parts: Vec<MValue<C>>,
}

impl<C: Count> Serialize for MBarValue<C> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("MBarValue", 2)?;
        st.serialize_field("value", &self.value.to_json())?;
        st.serialize_field("parts", &self.parts.iter().map(|p| &p.plan).collect::<Vec<_>>())?;
        st.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MValueOptions {
    /// Maximum number of block-width vectors scanned per `m`, besides the
    /// balanced one.
    pub composition_cap: usize,
}

impl Default for MValueOptions {
    fn default() -> Self {
        MValueOptions {
            composition_cap: 100_000,
        }
    }
}

/// Non-increasing vectors of `parts` positive integers summing to `total`,
/// in decreasing lexicographic order, at most `cap` of them.
fn partitions_into(total: usize, parts: usize, cap: usize) -> (Vec<Vec<usize>>, bool) {
    fn rec(rest: usize, parts: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, cap: usize) -> bool {
        if out.len() >= cap {
            return false;
        }
        if parts == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return true;
        }
        // each remaining part is at least 1 and at most `max`
        let hi = max.min(rest - (parts - 1));
        let lo = rest.div_ceil(parts);
        for v in (lo..=hi).rev() {
            cur.push(v);
            let done = rec(rest - v, parts - 1, v, cur, out, cap);
            cur.pop();
            if !done {
                return false;
            }
        }
        true
    }
    let mut out = Vec::new();
    let complete = total >= parts && rec(total, parts, total, &mut Vec::new(), &mut out, cap);
    (out, complete || total < parts)
}

fn balanced(total: usize, parts: usize) -> Vec<usize> {
    (0..parts)
        .map(|i| total / parts + usize::from(i < total % parts))
        .collect()
}

/// `m(k, d)` with a witness plan; ties go to smaller `m`, then to the
/// lexicographically largest block widths.
pub fn m_value<C: Count>(k: usize, d: usize) -> Result<MValue<C>, ConstructionError> {
    m_value_with(k, d, MValueOptions::default())
}

pub fn m_value_with<C: Count>(k: usize, d: usize, opts: MValueOptions) -> Result<MValue<C>, ConstructionError> {
    if k == 0 || k > d {
        return Err(invalid(format!("m(k,d) needs 1 <= k <= d, got k={k}, d={d}")));
    }
    let mut best: Option<MValue<C>> = None;
    let mut balanced_optimal = true;
    let mut exhaustive = true;
    let mut m = k;
    while let Some(width) = min_width(m, k).filter(|&w| w <= d) {
        let budget = d - width + m;
        let (mut candidates, complete) = partitions_into(budget, m, opts.composition_cap);
        exhaustive &= complete;
        let bal = balanced(budget, m);
        if !candidates.contains(&bal) {
            candidates.push(bal.clone());
        }
        let eval = |a: &Vec<usize>| elementary_symmetric(a.iter().map(|&ai| C::from_usize_exact(ai + 1)), k);
        let bal_value = eval(&bal);
        let mut best_m: Option<(C, &Vec<usize>)> = None;
        for a in &candidates {
            let v = eval(a);
            if best_m.as_ref().is_none_or(|(bv, _)| v > *bv) {
                best_m = Some((v, a));
            }
        }
        let (value, a) = best_m.unwrap();
        if value > bal_value {
            balanced_optimal = false;
        }
        if best.as_ref().is_none_or(|b| value > b.value) {
            best = Some(MValue {
                value,
                plan: FragmentPlan { k, d, m, a: a.clone() },
                balanced_optimal: true,
                exhaustive: true,
            });
        }
        m += 1;
    }
    let mut best = best.expect("m = k is always feasible when k <= d");
    best.balanced_optimal = balanced_optimal;
    best.exhaustive = exhaustive;
    Ok(best)
}

/// `m̄(k, d)` by dynamic programming over `(k', d')` prefixes.
pub fn mbar_value<C: Count>(k: usize, d: usize) -> Result<MBarValue<C>, ConstructionError> {
    if k == 0 || k > d {
        return Err(invalid(format!("m̄(k,d) needs 1 <= k <= d, got k={k}, d={d}")));
    }
    let mut single: HashMap<(usize, usize), MValue<C>> = HashMap::new();
    for kk in 1..=k {
        for dd in kk..=d {
            single.insert((kk, dd), m_value(kk, dd)?);
        }
    }
    // best[(k', d')] = (value, split) where split = None for a single part
    // or Some((k1, d1)) meaning best(k1, d1) × m(k' - k1, d' - d1).
    type Cell<C> = (C, Option<(usize, usize)>);
    let mut best: HashMap<(usize, usize), Cell<C>> = HashMap::new();
    for kk in 1..=k {
        for dd in kk..=d {
            let mut cell = (single[&(kk, dd)].value.clone(), None);
            for k1 in 1..kk {
                let k2 = kk - k1;
                for d1 in k1..=dd - k2 {
                    let v = best[&(k1, d1)].0.clone() * single[&(k2, dd - d1)].value.clone();
                    if v > cell.0 {
                        cell = (v, Some((k1, d1)));
                    }
                }
            }
            best.insert((kk, dd), cell);
        }
    }
    let mut parts = Vec::new();
    let (mut kk, mut dd) = (k, d);
    loop {
        match best[&(kk, dd)].1 {
            None => {
                parts.push(single[&(kk, dd)].clone());
                break;
            }
            Some((k1, d1)) => {
                parts.push(single[&(kk - k1, dd - d1)].clone());
                kk = k1;
                dd = d1;
            }
        }
    }
    parts.sort_by_key(|p| std::cmp::Reverse((p.plan.k, p.plan.d)));
    Ok(MBarValue {
        value: best[&(k, d)].0.clone(),
        parts,
    })
}

/// A verified k-neighborly family of size `m̄(k, d)`: the product of the
/// fragmented constructions of the optimal split.
pub fn realize_mbar(k: usize, d: usize) -> Result<Family, ConstructionError> {
    let witness = mbar_value::<u128>(k, d)?;
    let mut family = Family::new(0, vec![TernaryString::jokers(0)])?;
    for part in &witness.parts {
        family = product(&family, &fragmented(&part.plan)?);
    }
    checked(family, k, witness.value as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(s: &[&str]) -> Family {
        Family::parse_list(s).unwrap()
    }

    #[test]
    fn canonical_families() {
        assert_eq!(canonical(1).unwrap(), fam(&["0", "1"]));
        assert_eq!(canonical(2).unwrap(), fam(&["00", "01", "1*"]));
        assert_eq!(canonical(3).unwrap(), fam(&["000", "001", "01*", "1**"]));
        assert!(canonical(0).is_err());
        for d in 1..=16 {
            let c = canonical(d).unwrap();
            assert_eq!(c.len(), d + 1);
            assert!(c.is_partition());
        }
    }

    #[test]
    fn ball_families() {
        assert_eq!(ball_family(2, 4).unwrap().len(), 5);
        assert_eq!(ball_family(3, 5).unwrap().len(), 6);
        assert_eq!(ball_family(1, 4).unwrap(), fam(&["0000"]));
        assert_eq!(ball_family(4, 6).unwrap().len(), 1 + 6 + 15);
        assert!(ball_family(4, 4).is_err());
        assert!(ball_family(0, 4).is_err());
    }

    #[test]
    fn products() {
        let p = product(&canonical(3).unwrap(), &canonical(4).unwrap());
        assert_eq!((p.len(), p.dim()), (20, 7));
        assert!(p.is_neighborly(2));
        assert!(!p.is_neighborly(1));

        let c3 = canonical(3).unwrap();
        let padded = product(&c3, &fam(&["**"]));
        assert_eq!(padded.len(), 4);
        assert!(padded.is_neighborly(1));
        assert_eq!(padded.members()[2].to_string(), "01***");

        let q = product(&canonical(2).unwrap(), &canonical(1).unwrap());
        assert_eq!(q.len(), 6);
        assert!(q.is_neighborly(2));
    }

    #[test]
    fn fragmented_worked_examples() {
        let plan = FragmentPlan::new(2, 7, vec![2, 2, 1]).unwrap();
        let blocks = fragmented_blocks(&plan).unwrap();
        let sizes: Vec<_> = blocks.iter().map(Family::len).collect();
        assert_eq!(sizes, vec![9, 6, 6]);
        // (00)(C_2 C_2 *), (01)(C_2 ** C_1), (1*)(** C_2 C_1)
        assert_eq!(blocks[0].members()[0].to_string(), "000000*");
        assert_eq!(blocks[1].members()[5].to_string(), "011***1");
        assert_eq!(blocks[2].members()[0].to_string(), "1***000");
        let f = fragmented(&plan).unwrap();
        assert_eq!(f.len(), 21);
        assert!(f.is_neighborly(2));

        let plan = FragmentPlan::new(3, 10, vec![2, 2, 2, 1]).unwrap();
        let sizes: Vec<_> = fragmented_blocks(&plan).unwrap().iter().map(Family::len).collect();
        assert_eq!(sizes, vec![27, 18, 18, 18]);
        assert_eq!(fragmented(&plan).unwrap().len(), 81);
    }

    #[test]
    fn balanced_plans() {
        assert_eq!(FragmentPlan::balanced(2, 7, 3).unwrap().a, vec![2, 2, 1]);
        assert_eq!(FragmentPlan::balanced(3, 10, 4).unwrap().a, vec![2, 2, 2, 1]);
        assert!(FragmentPlan::balanced(2, 4, 3).is_err());
        assert!(FragmentPlan::balanced(3, 10, 2).is_err());
    }

    #[test]
    fn fragmented_with_single_block_is_a_product() {
        let plan = FragmentPlan::new(3, 6, vec![2, 2, 2]).unwrap();
        let f = fragmented(&plan).unwrap();
        let c2 = canonical(2).unwrap();
        assert_eq!(f, product(&product(&c2, &c2), &c2));
        assert_eq!(f.len(), 27);
    }

    #[test]
    fn plan_validation() {
        assert!(FragmentPlan::new(2, 7, vec![2, 2, 2]).is_err());
        assert!(FragmentPlan::new(2, 7, vec![5, 0, 0]).is_err());
        assert!(FragmentPlan::new(4, 7, vec![2, 2, 1]).is_err());
        assert!(FragmentPlan::new(2, 4, vec![1, 1, 1]).is_err());
        assert_eq!(FragmentPlan::new(2, 7, vec![2, 2, 1]).unwrap().size::<u64>(), 21);
    }

    #[test]
    fn extremal_families() {
        assert_eq!(extremal_dminus1(2).unwrap(), fam(&["00", "01", "1*"]));
        let f3 = extremal_dminus1(3).unwrap();
        assert_eq!(f3.len(), 6);
        assert!(f3.is_neighborly(2));
        assert_eq!(f3.volume::<u64>(), 8);
        for d in 2..=12 {
            let f = extremal_dminus1(d).unwrap();
            assert_eq!(f.len(), 3 << (d - 2));
            assert!(f.is_partition());
        }
        assert!(extremal_dminus1(1).is_err());
    }

    #[test]
    fn m_values() {
        assert_eq!(m_value::<u64>(2, 7).unwrap().value, 21);
        let m310 = m_value::<u64>(3, 10).unwrap();
        assert_eq!(m310.value, 81);
        assert_eq!(m310.plan.a, vec![2, 2, 2, 1]);
        assert_eq!(m_value::<u64>(2, 18).unwrap().value, 120);
        assert_eq!(m_value::<u64>(1, 9).unwrap().value, 10);
        assert_eq!(m_value::<u64>(4, 4).unwrap().value, 16);
        assert!(m_value::<u64>(5, 4).is_err());
    }

    #[test]
    fn mbar_values() {
        let w = mbar_value::<u64>(3, 10).unwrap();
        assert_eq!(w.value, 84);
        let shape: Vec<_> = w.parts.iter().map(|p| (p.plan.k, p.plan.d)).collect();
        assert_eq!(shape, vec![(2, 7), (1, 3)]);
        for d in 1..=12 {
            assert_eq!(mbar_value::<u64>(1, d).unwrap().value, d as u64 + 1);
        }
    }

    #[test]
    fn mbar_realizations() {
        let f = realize_mbar(3, 10).unwrap();
        assert_eq!(f.len(), 84);
        assert!(f.is_neighborly(3));
        assert_eq!(realize_mbar(1, 6).unwrap().len(), 7);
        assert_eq!(realize_mbar(2, 7).unwrap().len(), 21);
    }

    #[test]
    fn serialization() {
        let m = m_value::<u64>(2, 7).unwrap();
        assert_eq!(
            serde_json::to_value(&m).unwrap(),
            serde_json::json!({"value": 21, "m": 3, "a": [2, 2, 1]})
        );
        let mb = mbar_value::<u64>(3, 10).unwrap();
        assert_eq!(
            serde_json::to_value(&mb).unwrap(),
            serde_json::json!({"value": 84, "parts": [
                {"k": 2, "d": 7, "m": 3, "a": [2, 2, 1]},
                {"k": 1, "d": 3, "m": 1, "a": [3]}
            ]})
        );
    }

    #[test]
    fn partition_enumeration() {
        let (p, complete) = partitions_into(5, 3, 100);
        assert!(complete);
        assert_eq!(p, vec![vec![3, 1, 1], vec![2, 2, 1]]);
        let (p, complete) = partitions_into(10, 3, 2);
        assert!(!complete);
        assert_eq!(p.len(), 2);
        assert_eq!(balanced(5, 3), vec![2, 2, 1]);
    }
}

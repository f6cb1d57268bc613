//! Lower and upper bounds on `n(k, d)`, the maximum size of a
//! k-neighborly family in `S^d`.
//!
//! All arithmetic is exact. The refined closed forms round with
//! `⌊x⌉ = ⌈x - 1⌉` evaluated on rationals.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::constructions::{m_value, mbar_value};
use crate::count::{ball_size, serialize_count, Count};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("need 1 <= k <= d, got k={k}, d={d}")]
    OutOfRange { k: usize, d: usize },
    #[error("no t >= 1 with k + 2t - 2 <= d - 1 (k={k}, d={d})")]
    NoValidT { k: usize, d: usize },
    #[error("t={t} invalid for k={k}, d={d}")]
    InvalidT { k: usize, d: usize, t: usize },
    #[error("refined bound needs k <= d - 1 (k={k}, d={d})")]
    RefinedUndefined { k: usize, d: usize },
    #[error("table is missing entry (k={k}, d={d})")]
    MissingEntry { k: usize, d: usize },
}

fn check_range(k: usize, d: usize) -> Result<(), BoundsError> {
    if k == 0 || k > d {
        Err(BoundsError::OutOfRange { k, d })
    } else {
        Ok(())
    }
}

/// `κ(s, d)`: the maximum size of a subset of `H^d` with diameter at most `s`.
pub fn kappa<C: Count>(s: usize, d: usize) -> C {
    if s >= d {
        C::pow2(d)
    } else if s.is_multiple_of(2) {
        ball_size(d, s / 2)
    } else {
        C::binomial(d - 1, s / 2) + ball_size(d, s / 2)
    }
}

/// `Π_{i<k} (⌊(d+i)/k⌋ + 1)`.
pub fn product_lower<C: Count>(k: usize, d: usize) -> Result<C, BoundsError> {
    check_range(k, d)?;
    Ok((0..k).fold(C::one(), |acc, i| acc * C::from_usize_exact((d + i) / k + 1)))
}

/// `Σ_{i=0}^{k} 2^i C(d, i)`.
pub fn weighted_sum_upper<C: Count>(k: usize, d: usize) -> Result<C, BoundsError> {
    check_range(k, d)?;
    Ok((0..=k).fold(C::zero(), |acc, i| acc + C::pow2(i) * C::binomial(d, i)))
}

/// `1 + Σ_{i=1}^{k} 2^{i-1} C(d, i)`.
pub fn huang_sudakov_upper<C: Count>(k: usize, d: usize) -> Result<C, BoundsError> {
    check_range(k, d)?;
    Ok((1..=k).fold(C::one(), |acc, i| acc + C::pow2(i - 1) * C::binomial(d, i)))
}

/// `Σ_{i=0}^{⌊k/2⌋} C(d, i)`, the size of the radius-`⌊k/2⌋` ball family.
pub fn ball_lower<C: Count>(k: usize, d: usize) -> Result<C, BoundsError> {
    check_range(k, d)?;
    Ok(ball_size(d, k / 2))
}

/// `2^{d-t} + Σ_{i=0}^{⌈(k+2t-2)/2⌉} C(d, i)` for `t >= 1`, `k + 2t - 2 <= d - 1`.
pub fn thm_upper<C: Count>(k: usize, d: usize, t: usize) -> Result<C, BoundsError> {
    check_range(k, d)?;
    if t == 0 || k + 2 * t - 2 > d - 1 {
        return Err(BoundsError::InvalidT { k, d, t });
    }
    Ok(C::pow2(d - t) + ball_size(d, (k + 2 * t - 2).div_ceil(2)))
}

/// Minimum of [`thm_upper`] over all valid `t`, with the smallest minimizing `t`.
pub fn thm_upper_best<C: Count>(k: usize, d: usize) -> Result<(C, usize), BoundsError> {
    check_range(k, d)?;
    let mut best: Option<(C, usize)> = None;
    let mut t = 1;
    while k + 2 * t - 2 < d {
        let v = thm_upper::<C>(k, d, t)?;
        if best.as_ref().is_none_or(|(b, _)| v < *b) {
            best = Some((v, t));
        }
        t += 1;
    }
    best.ok_or(BoundsError::NoValidT { k, d })
}

/// Lexicographically maximal solution `a_0, ..., a_{d-1}` of the joker-level
/// integer program `Σ_{l<=i} 2^l f_l <= κ(k+2i, d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreedyProfile<C: Count> {
    #[serde(skip)]
    pub a: Vec<C>,
    #[serde(serialize_with = "serialize_count")]
    pub total: C,
}

impl<C: Count> GreedyProfile<C> {
    /// Checks every constraint `Σ_{l<=i} 2^l a_l <= κ(k+2i, d)`.
    pub fn is_feasible(&self, k: usize, d: usize) -> bool {
        let mut used = C::zero();
        for (i, ai) in self.a.iter().enumerate() {
            used = used + C::pow2(i) * ai.clone();
            if used > kappa(k + 2 * i, d) {
                return false;
            }
        }
        true
    }
}

/// Maximum of `Σ f_i` subject to the `κ` prefix constraints, via the
/// lexicographic greedy solution.
pub fn greedy_kappa_upper<C: Count>(k: usize, d: usize) -> Result<(C, GreedyProfile<C>), BoundsError> {
    check_range(k, d)?;
    let mut a = Vec::with_capacity(d);
    let mut used = C::zero();
    for i in 0..d {
        let cap = kappa::<C>(k + 2 * i, d);
        let room = if cap > used { cap - used.clone() } else { C::zero() };
        let ai = room / C::pow2(i);
        used = used + C::pow2(i) * ai.clone();
        a.push(ai);
    }
    let total = a.iter().fold(C::zero(), |acc, x| acc + x.clone());
    Ok((total.clone(), GreedyProfile { a, total }))
}

/// `⌊x⌉ = ⌈x - 1⌉` for `x > 0`.
fn round_down_strict<C: Count>(x: &Ratio<C>) -> C {
    debug_assert!(!x.is_zero());
    x.ceil().to_integer() - C::one()
}

/// `⌊c / 2^e + 1/2⌉`.
fn rounded_term<C: Count>(c: C, e: usize) -> C {
    let two = C::one() + C::one();
    let x = Ratio::new(c, C::pow2(e)) + Ratio::new(C::one(), two);
    round_down_strict(&x)
}

/// The refined closed-form upper bound, one expression per parity case of
/// `(k, d)`, first (rounded) line of each case.
pub fn refined_upper<C: Count>(k: usize, d: usize) -> Result<C, BoundsError> {
    check_range(k, d)?;
    if k == d {
        return Err(BoundsError::RefinedUndefined { k, d });
    }
    let half_k = k / 2;
    let h = (d - k) / 2;
    let head = ball_size::<C>(d, half_k);
    // (λ): a_{h+1} = 2^{d-h-2} when d - k is odd
    let lambda = || C::pow2(d - h - 2);
    let value = match (k.is_multiple_of(2), d.is_multiple_of(2)) {
        (true, true) => {
            let mut v = head;
            for i in 1..h {
                v = v + rounded_term(C::binomial(d, half_k + i), i);
            }
            // ⌊2^{(d+k)/2-1} + C(d, d/2) / 2^{h+1} + 1/2⌉
            let last = Ratio::from_integer(C::pow2((d + k) / 2 - 1))
                + Ratio::new(C::binomial(d, d / 2), C::pow2(h + 1))
                + Ratio::new(C::one(), C::one() + C::one());
            v + round_down_strict(&last)
        }
        (true, false) => {
            let mut v = lambda() + head;
            for i in 1..=h {
                v = v + rounded_term(C::binomial(d, half_k + i), i);
            }
            v
        }
        (false, true) => {
            let mut v = lambda() + C::binomial(d - 1, half_k) + head;
            for i in 1..=h {
                v = v + rounded_term(C::binomial(d - 1, half_k + i), i - 1);
            }
            v
        }
        (false, false) => {
            let mut v = C::binomial(d - 1, half_k) + head;
            for i in 1..h {
                v = v + rounded_term(C::binomial(d - 1, half_k + i), i - 1);
            }
            // ⌊2^{(d+k)/2-1} + C(d-1, (d-1)/2) / 2^h + 1/2⌉
            let last = Ratio::from_integer(C::pow2((d + k) / 2 - 1))
                + Ratio::new(C::binomial(d - 1, (d - 1) / 2), C::pow2(h))
                + Ratio::new(C::one(), C::one() + C::one());
            v + round_down_strict(&last)
        }
    };
    Ok(value)
}

/// Where a bound value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundMethod {
    /// `n(1, d) = d + 1`.
    ExactOneNeighborly,
    /// `n(d, d) = 2^d`.
    ExactFullCube,
    /// `n(d-1, d) = 3·2^{d-2}`.
    ExactCodimensionOne,
    Product,
    Ball,
    Fragmented,
    FragmentedProduct,
    TrivialCube,
    WeightedSum,
    HuangSudakov,
    Kleitman {
        t: usize,
    },
    GreedyKappa,
    Refined,
}

impl BoundMethod {
    pub fn is_exact(self) -> bool {
        matches!(
            self,
            BoundMethod::ExactOneNeighborly | BoundMethod::ExactFullCube | BoundMethod::ExactCodimensionOne
        )
    }
}

impl fmt::Display for BoundMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundMethod::ExactOneNeighborly => f.write_str("exact:n(1,d)=d+1"),
            BoundMethod::ExactFullCube => f.write_str("exact:n(d,d)=2^d"),
            BoundMethod::ExactCodimensionOne => f.write_str("exact:n(d-1,d)=3*2^(d-2)"),
            BoundMethod::Product => f.write_str("product"),
            BoundMethod::Ball => f.write_str("ball"),
            BoundMethod::Fragmented => f.write_str("m"),
            BoundMethod::FragmentedProduct => f.write_str("mbar"),
            BoundMethod::TrivialCube => f.write_str("2^d"),
            BoundMethod::WeightedSum => f.write_str("weighted-sum"),
            BoundMethod::HuangSudakov => f.write_str("huang-sudakov"),
            BoundMethod::Kleitman { t } => write!(f, "kleitman(t={t})"),
            BoundMethod::GreedyKappa => f.write_str("greedy-kappa"),
            BoundMethod::Refined => f.write_str("refined"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bound<C> {
    pub value: C,
    pub method: BoundMethod,
}

impl<C: Count> Serialize for Bound<C> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Bound", 2)?;
        st.serialize_field("value", &self.value.to_json())?;
        st.serialize_field("method", &self.method.to_string())?;
        st.end()
    }
}

/// Best known lower and upper bound on `n(k, d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsEntry<C> {
    pub k: usize,
    pub d: usize,
    pub lower: Bound<C>,
    pub upper: Bound<C>,
}

impl<C: Count> BoundsEntry<C> {
    pub fn is_exact(&self) -> bool {
        self.lower.value == self.upper.value
    }
}

impl<C: Count> Serialize for BoundsEntry<C> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BoundsEntry", 5)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("lower", &self.lower)?;
        st.serialize_field("upper", &self.upper)?;
        st.serialize_field("exact", &self.is_exact())?;
        st.end()
    }
}

/// The exact value of `n(k, d)` when one of the closed cases applies.
pub fn exact_special<C: Count>(k: usize, d: usize) -> Option<Bound<C>> {
    if k == 0 || k > d {
        None
    } else if k == d {
        Some(Bound {
            value: C::pow2(d),
            method: BoundMethod::ExactFullCube,
        })
    } else if k == 1 {
        Some(Bound {
            value: C::from_usize_exact(d + 1),
            method: BoundMethod::ExactOneNeighborly,
        })
    } else if k + 1 == d {
        Some(Bound {
            value: C::from_usize_exact(3) * C::pow2(d - 2),
            method: BoundMethod::ExactCodimensionOne,
        })
    } else {
        None
    }
}

/// Every applicable lower-bound method.
pub fn lower_bounds<C: Count>(k: usize, d: usize) -> Result<Vec<Bound<C>>, BoundsError> {
    check_range(k, d)?;
    let mut out = vec![Bound {
        value: product_lower(k, d)?,
        method: BoundMethod::Product,
    }];
    if k < d {
        out.push(Bound {
            value: ball_lower(k, d)?,
            method: BoundMethod::Ball,
        });
    }
    let m = m_value::<C>(k, d).expect("range checked");
    out.push(Bound {
        value: m.value,
        method: BoundMethod::Fragmented,
    });
    let mbar = mbar_value::<C>(k, d).expect("range checked");
    out.push(Bound {
        value: mbar.value,
        method: BoundMethod::FragmentedProduct,
    });
    out.extend(exact_special(k, d));
    Ok(out)
}

/// Every applicable upper-bound method.
pub fn upper_bounds<C: Count>(k: usize, d: usize) -> Result<Vec<Bound<C>>, BoundsError> {
    check_range(k, d)?;
    let mut out = vec![
        Bound {
            value: C::pow2(d),
            method: BoundMethod::TrivialCube,
        },
        Bound {
            value: weighted_sum_upper(k, d)?,
            method: BoundMethod::WeightedSum,
        },
        Bound {
            value: huang_sudakov_upper(k, d)?,
            method: BoundMethod::HuangSudakov,
        },
    ];
    if let Ok((value, t)) = thm_upper_best(k, d) {
        out.push(Bound {
            value,
            method: BoundMethod::Kleitman { t },
        });
    }
    out.push(Bound {
        value: greedy_kappa_upper(k, d)?.0,
        method: BoundMethod::GreedyKappa,
    });
    if k < d {
        out.push(Bound {
            value: refined_upper(k, d)?,
            method: BoundMethod::Refined,
        });
    }
    out.extend(exact_special(k, d));
    Ok(out)
}

/// Best bounds on `n(k, d)`. Exact cases short-circuit to the known value;
/// otherwise the largest lower and smallest upper bound win, earlier
/// methods on ties.
pub fn best_bounds<C: Count>(k: usize, d: usize) -> Result<BoundsEntry<C>, BoundsError> {
    check_range(k, d)?;
    if let Some(exact) = exact_special::<C>(k, d) {
        return Ok(BoundsEntry {
            k,
            d,
            lower: exact.clone(),
            upper: exact,
        });
    }
    let lower = lower_bounds::<C>(k, d)?
        .into_iter()
        .reduce(|a, b| if b.value > a.value { b } else { a })
        .unwrap();
    let upper = upper_bounds::<C>(k, d)?
        .into_iter()
        .reduce(|a, b| if b.value < a.value { b } else { a })
        .unwrap();
    Ok(BoundsEntry { k, d, lower, upper })
}

/// [`best_bounds`] for every `1 <= k <= min(d, kmax)`, `1 <= d <= dmax`,
/// ordered by `d` then `k`.
pub fn bounds_table<C: Count>(kmax: usize, dmax: usize) -> Vec<BoundsEntry<C>> {
    use rayon::prelude::*;
    let cells: Vec<(usize, usize)> = (1..=dmax)
        .flat_map(|d| (1..=kmax.min(d)).map(move |k| (k, d)))
        .collect();
    cells
        .into_par_iter()
        .map(|(k, d)| best_bounds(k, d).expect("cells are in range"))
        .collect()
}

/// One checked cell of the Pascal-triangle audit:
/// `lower(k,d) <= upper(k-1,d-1) + upper(k,d-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PascalFinding<C: Count> {
    pub k: usize,
    pub d: usize,
    #[serde(serialize_with = "serialize_count")]
    pub lower: C,
    #[serde(serialize_with = "serialize_count")]
    pub rhs: C,
    pub violated: bool,
}

impl<C: Count> PascalFinding<C> {
    /// `rhs - lower` when the inequality holds, `lower - rhs` otherwise.
    pub fn margin(&self) -> C {
        if self.violated {
            self.lower.clone() - self.rhs.clone()
        } else {
            self.rhs.clone() - self.lower.clone()
        }
    }
}

/// Audits a bounds table against `n(k,d) <= n(k-1,d-1) + n(k,d-1)`.
///
/// Cells whose predecessors fall outside the table's `(k, d)` bounding box
/// are skipped; a predecessor inside the box but absent is an error. For
/// `k = d` the cell `(d, d-1)` is read as `n(d-1, d-1) = 2^{d-1}`.
pub fn pascal_audit<C: Count>(table: &[BoundsEntry<C>]) -> Result<Vec<PascalFinding<C>>, BoundsError> {
    let map: BTreeMap<(usize, usize), &BoundsEntry<C>> = table.iter().map(|e| ((e.k, e.d), e)).collect();
    let Some(kmin) = table.iter().map(|e| e.k).min() else {
        return Ok(Vec::new());
    };
    let kmax = table.iter().map(|e| e.k).max().unwrap();
    let dmin = table.iter().map(|e| e.d).min().unwrap();
    let dmax = table.iter().map(|e| e.d).max().unwrap();
    let in_box = |k: usize, d: usize| (kmin..=kmax).contains(&k) && (dmin..=dmax).contains(&d) && k <= d;
    let upper_at = |k: usize, d: usize| -> Result<Option<C>, BoundsError> {
        if k > d {
            // n(k, d) = n(d, d) once k >= d
            return Ok(Some(C::pow2(d)));
        }
        if !in_box(k, d) {
            return Ok(None);
        }
        map.get(&(k, d))
            .map(|e| Some(e.upper.value.clone()))
            .ok_or(BoundsError::MissingEntry { k, d })
    };
    let mut findings = Vec::new();
    for (&(k, d), entry) in &map {
        if k < 2 || d < 2 {
            continue;
        }
        let (Some(a), Some(b)) = (upper_at(k - 1, d - 1)?, upper_at(k, d - 1)?) else {
            continue;
        };
        let rhs = a + b;
        findings.push(PascalFinding {
            k,
            d,
            lower: entry.lower.value.clone(),
            violated: entry.lower.value > rhs,
            rhs,
        });
    }
    Ok(findings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn kappa_values() {
        assert_eq!(kappa::<u64>(2, 4), 5);
        assert_eq!(kappa::<u64>(3, 5), 10);
        assert_eq!(kappa::<u64>(0, 5), 1);
        assert_eq!(kappa::<u64>(7, 5), 32);
        for d in 2..=20 {
            assert_eq!(kappa::<u64>(d - 1, d), 1 << (d - 1), "d={d}");
        }
    }

    #[test]
    fn product_and_weighted_sum() {
        assert_eq!(product_lower::<u64>(2, 7).unwrap(), 20);
        assert_eq!(product_lower::<u64>(3, 6).unwrap(), 27);
        assert_eq!(weighted_sum_upper::<u64>(1, 3).unwrap(), 7);
        assert!(product_lower::<u64>(0, 3).is_err());
        assert!(weighted_sum_upper::<u64>(4, 3).is_err());
    }

    #[test]
    fn huang_sudakov() {
        for d in 1..=10 {
            assert_eq!(huang_sudakov_upper::<u64>(1, d).unwrap(), d as u64 + 1);
        }
        assert_eq!(huang_sudakov_upper::<u64>(2, 4).unwrap(), 17);
        for d in 1..=16 {
            for k in 1..=d {
                assert!(huang_sudakov_upper::<u64>(k, d).unwrap() <= weighted_sum_upper::<u64>(k, d).unwrap());
            }
        }
    }

    #[test]
    fn kleitman_bound() {
        assert_eq!(thm_upper::<u64>(5, 8, 1).unwrap(), 221);
        assert_eq!(thm_upper::<u64>(5, 8, 2).unwrap(), 227);
        assert_eq!(thm_upper_best::<u64>(5, 8).unwrap(), (221, 1));
        assert_eq!(
            thm_upper::<u64>(5, 8, 3),
            Err(BoundsError::InvalidT { k: 5, d: 8, t: 3 })
        );
        assert_eq!(
            thm_upper::<u64>(5, 8, 0),
            Err(BoundsError::InvalidT { k: 5, d: 8, t: 0 })
        );
        assert_eq!(thm_upper_best::<u64>(4, 4), Err(BoundsError::NoValidT { k: 4, d: 4 }));
    }

    #[test]
    fn greedy_profiles() {
        let (v, p) = greedy_kappa_upper::<u64>(2, 3).unwrap();
        assert_eq!((v, p.a.clone()), (6, vec![4, 2, 0]));
        assert!(p.is_feasible(2, 3));
        let (v, p) = greedy_kappa_upper::<u64>(2, 4).unwrap();
        assert_eq!((v, p.a), (10, vec![5, 5, 0, 0]));
        for d in 1..=12 {
            assert_eq!(greedy_kappa_upper::<u64>(d, d).unwrap().0, 1 << d);
        }
    }

    #[test]
    fn refined_bounds() {
        assert_eq!(refined_upper::<u64>(2, 4).unwrap(), 10);
        assert_eq!(refined_upper::<u64>(2, 3).unwrap(), 6);
        for d in 2..=16 {
            assert_eq!(refined_upper::<u64>(d - 1, d).unwrap(), 3 << (d - 2), "d={d}");
        }
        assert_eq!(
            refined_upper::<u64>(3, 3),
            Err(BoundsError::RefinedUndefined { k: 3, d: 3 })
        );
    }

    #[test]
    fn rounding_is_ceiling_minus_one() {
        let r = |n: u64, q: u64| round_down_strict(&Ratio::new(n, q));
        assert_eq!(r(6, 1), 5);
        assert_eq!(r(11, 2), 5);
        assert_eq!(r(1, 2), 0);
        assert_eq!(r(13, 4), 3);
    }

    #[test]
    fn best_bound_examples() {
        let e = best_bounds::<u64>(1, 5).unwrap();
        assert_eq!((e.lower.value, e.upper.value), (6, 6));
        let e = best_bounds::<u64>(4, 5).unwrap();
        assert_eq!((e.lower.value, e.upper.value), (24, 24));
        assert_eq!(e.lower.method, BoundMethod::ExactCodimensionOne);
        let e = best_bounds::<u64>(2, 3).unwrap();
        assert_eq!((e.lower.value, e.upper.value), (6, 6));
        // without the special, formulas alone still meet at 6
        let lo = lower_bounds::<u64>(2, 3)
            .unwrap()
            .into_iter()
            .filter(|b| !b.method.is_exact())
            .map(|b| b.value)
            .max();
        let hi = upper_bounds::<u64>(2, 3)
            .unwrap()
            .into_iter()
            .filter(|b| !b.method.is_exact())
            .map(|b| b.value)
            .min();
        assert_eq!((lo, hi), (Some(6), Some(6)));
        let e = best_bounds::<u64>(2, 7).unwrap();
        assert_eq!(e.lower.value, 21);
        assert_eq!(e.lower.method, BoundMethod::Fragmented);
    }

    #[test]
    fn entry_json() {
        let e = best_bounds::<u64>(2, 3).unwrap();
        assert_eq!(
            serde_json::to_value(&e).unwrap(),
            serde_json::json!({
                "k": 2, "d": 3,
                "lower": {"value": 6, "method": "exact:n(d-1,d)=3*2^(d-2)"},
                "upper": {"value": 6, "method": "exact:n(d-1,d)=3*2^(d-2)"},
                "exact": true
            })
        );
    }

    #[test]
    fn count_types_agree() {
        for d in 1..=16 {
            for k in 1..=d {
                let a = best_bounds::<u64>(k, d).unwrap();
                let b = best_bounds::<BigUint>(k, d).unwrap();
                assert_eq!(BigUint::from(a.lower.value), b.lower.value);
                assert_eq!(BigUint::from(a.upper.value), b.upper.value);
                assert_eq!(a.upper.method, b.upper.method);
            }
        }
    }

    #[test]
    fn audit_single_and_fabricated() {
        let one = vec![best_bounds::<u64>(3, 7).unwrap()];
        assert!(pascal_audit(&one).unwrap().is_empty());

        let mut table: Vec<_> = (1..=4)
            .flat_map(|d| (1..=d).map(move |k| (k, d)))
            .map(|(k, d)| best_bounds::<u64>(k, d).unwrap())
            .collect();
        assert!(pascal_audit(&table).unwrap().iter().all(|f| !f.violated));
        let cell = table.iter_mut().find(|e| (e.k, e.d) == (2, 4)).unwrap();
        cell.lower.value = 99;
        let violations: Vec<_> = pascal_audit(&table)
            .unwrap()
            .into_iter()
            .filter(|f| f.violated)
            .collect();
        assert_eq!(violations.len(), 1);
        assert_eq!((violations[0].k, violations[0].d), (2, 4));
        assert_eq!(violations[0].margin(), 99 - 10);
    }

    #[test]
    fn audit_detects_holes() {
        let table: Vec<_> = [(1, 2), (2, 3)]
            .iter()
            .map(|&(k, d)| best_bounds::<u64>(k, d).unwrap())
            .collect();
        assert_eq!(
            pascal_audit(&table).unwrap_err(),
            BoundsError::MissingEntry { k: 2, d: 2 }
        );
    }
}

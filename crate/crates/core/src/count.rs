//! Exact unsigned integer counts.
//!
//! Every size, volume and bound in the crate is an exact integer. The
//! numeric code is written once against [`Count`] and instantiated for
//! `u64`, `u128` and [`BigUint`]; see the aliases at the crate root.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{FromPrimitive, ToPrimitive, Unsigned};

/// An exact, unsigned integer scalar.
pub trait Count:
    Clone + Ord + Hash + Debug + Display + Integer + Unsigned + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    fn from_usize_exact(n: usize) -> Self {
        Self::from_usize(n).expect("count type too narrow")
    }

    /// `2^e`.
    fn pow2(e: usize) -> Self {
        let two = Self::one() + Self::one();
        num_traits::pow(two, e)
    }

    /// Binomial coefficient `C(n, r)`, zero when `r > n`.
    fn binomial(n: usize, r: usize) -> Self {
        if r > n {
            return Self::zero();
        }
        let r = r.min(n - r);
        let mut acc = Self::one();
        for i in 0..r {
            // acc = C(n, i) here; C(n, i) * (n - i) is divisible by i + 1.
            acc = acc * Self::from_usize_exact(n - i) / Self::from_usize_exact(i + 1);
        }
        acc
    }

    /// JSON number when it fits in `u64`, decimal string otherwise.
    fn to_json(&self) -> serde_json::Value {
        match self.to_u64() {
            Some(v) => serde_json::Value::from(v),
            None => serde_json::Value::String(self.to_string()),
        }
    }
}

impl Count for u64 {}
impl Count for u128 {}
impl Count for BigUint {}

/// `Σ_{i=0}^{r} C(n, i)`, the size of a Hamming ball of radius `r` in `H^n`.
pub fn ball_size<C: Count>(n: usize, r: usize) -> C {
    (0..=r.min(n)).fold(C::zero(), |acc, i| acc + C::binomial(n, i))
}

pub(crate) fn serialize_count<C: Count, S: serde::Serializer>(v: &C, s: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&v.to_json(), s)
}

//! The dictionary mapping irreducible valence-polynomial factors to
//! their assigned values.
//!
//! Values live in the field of real radicals of the form `r^(1/k)` with
//! `r` rational: the assignment step takes k-th roots, and products and
//! quotients of such radicals stay in the class. In every run at this
//! scale `k = 1` and all values are integers, but the arithmetic is kept
//! exact so that a hypothetical irrational assignment is represented and
//! compared faithfully rather than rounded.

use crate::coxgroup::ElemId;
use crate::error::Error;
use crate::Result;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// An exact real number of the form `radicand^(1/index)`.
///
/// The representation is normalized: the index is reduced whenever the
/// radicand is a perfect power, so equal values have equal fields.
#[derive(Clone, PartialEq, Eq)]
pub struct GammaValue {
    radicand: BigRational,
    index: u32,
}

impl GammaValue {
    pub fn one() -> Self {
        GammaValue {
            radicand: BigRational::one(),
            index: 1,
        }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        GammaValue {
            radicand: BigRational::from_integer(n.into()),
            index: 1,
        }
    }

    pub fn from_rational(r: BigRational) -> Self {
        GammaValue {
            radicand: r,
            index: 1,
        }
    }

    fn normalized(mut radicand: BigRational, mut index: u32) -> Self {
        // Reduce the index by any prime over which the radicand is a
        // perfect power.
        let mut p = 2;
        while index > 1 && p <= index {
            if index % p == 0 {
                if let Some(root) = rational_exact_root(&radicand, p) {
                    radicand = root;
                    index /= p;
                    continue;
                }
            }
            p += 1;
        }
        GammaValue { radicand, index }
    }

    pub fn is_rational(&self) -> bool {
        self.index == 1
    }

    pub fn is_integer(&self) -> bool {
        self.index == 1 && self.radicand.is_integer()
    }

    pub fn eq_integer(&self, n: u64) -> bool {
        // r^(1/k) = n exactly when r = n^k.
        let n = BigRational::from_integer(BigInt::from(n));
        self.radicand == pow_rational(&n, self.index)
    }

    pub fn mul(&self, other: &GammaValue) -> GammaValue {
        let l = lcm_u32(self.index, other.index);
        let r = pow_rational(&self.radicand, l / self.index)
            * pow_rational(&other.radicand, l / other.index);
        GammaValue::normalized(r, l)
    }

    /// `self / other`; other must be nonzero.
    pub fn div(&self, other: &GammaValue) -> Result<GammaValue> {
        if other.radicand.is_zero() {
            return Err(Error::Element("division by a zero dictionary value".into()));
        }
        let l = lcm_u32(self.index, other.index);
        let r = pow_rational(&self.radicand, l / self.index)
            / pow_rational(&other.radicand, l / other.index);
        Ok(GammaValue::normalized(r, l))
    }

    /// The k-th root; the radicand must be nonnegative when any even
    /// root is involved.
    pub fn root(&self, k: u32) -> Result<GammaValue> {
        if k == 0 {
            return Err(Error::Element("zeroth root is undefined".into()));
        }
        let index = self
            .index
            .checked_mul(k)
            .ok_or_else(|| Error::CapExceeded("radical index overflow".into()))?;
        if self.radicand.is_negative() && index % 2 == 0 {
            return Err(Error::Element(
                "even root of a negative dictionary value".into(),
            ));
        }
        Ok(GammaValue::normalized(self.radicand.clone(), index))
    }

    /// Integer power, for evaluating products over factor multiplicities.
    pub fn pow(&self, e: u32) -> GammaValue {
        if e == 0 {
            return GammaValue::one();
        }
        GammaValue::normalized(pow_rational(&self.radicand, e), self.index)
    }
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    a / a.gcd(&b) * b
}

fn pow_rational(r: &BigRational, e: u32) -> BigRational {
    num_traits::pow::pow(r.clone(), e as usize)
}

/// The exact n-th root of a rational, if it is itself rational.
fn rational_exact_root(r: &BigRational, n: u32) -> Option<BigRational> {
    let root_of = |x: &BigInt| -> Option<BigInt> {
        if x.is_negative() {
            if n % 2 == 0 {
                return None;
            }
            return root_of_positive(&-x, n).map(|r| -r);
        }
        root_of_positive(x, n)
    };
    Some(BigRational::new(root_of(r.numer())?, root_of(r.denom())?))
}

fn root_of_positive(x: &BigInt, n: u32) -> Option<BigInt> {
    let r = x.nth_root(n);
    if num_traits::pow::pow(r.clone(), n as usize) == *x {
        Some(r)
    } else {
        None
    }
}

impl fmt::Display for GammaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.index == 1 {
            write!(f, "{}", self.radicand)
        } else {
            write!(f, "({})^(1/{})", self.radicand, self.index)
        }
    }
}

impl fmt::Debug for GammaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Where a dictionary key was first defined.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub group: String,
    pub u: ElemId,
    pub v: ElemId,
    pub h: usize,
    /// Compact digest identifying the flipclass: path count and a hash
    /// of its canonical key.
    pub flipclass: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GammaEntry {
    pub value: GammaValue,
    pub provenance: Provenance,
}

/// Ordered dictionary from canonical factor strings to values. Keys are
/// never overwritten: an attempted conflicting redefinition is the
/// caller's signal to record a violation.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct GammaTable {
    entries: BTreeMap<String, GammaEntry>,
}

impl GammaTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &str) -> Option<&GammaEntry> {
        self.entries.get(key)
    }

    pub fn is_defined(&self, key: &str) -> bool {
        self.entries.contains_key(key)
    }

    /// Defines a fresh key. Returns false (and leaves the table
    /// unchanged) when the key is already present.
    pub fn define(&mut self, key: String, value: GammaValue, provenance: Provenance) -> bool {
        use std::collections::btree_map::Entry;
        match self.entries.entry(key) {
            Entry::Occupied(_) => false,
            Entry::Vacant(slot) => {
                slot.insert(GammaEntry { value, provenance });
                true
            }
        }
    }

    /// Value of a product of keys with multiplicities; `None` when some
    /// key is undefined. The empty product evaluates to 1.
    pub fn eval_product<'a>(
        &self,
        factors: impl IntoIterator<Item = (&'a str, u32)>,
    ) -> Option<GammaValue> {
        let mut acc = GammaValue::one();
        for (key, mult) in factors {
            let entry = self.entries.get(key)?;
            acc = acc.mul(&entry.value.pow(mult));
        }
        Some(acc)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &GammaEntry)> {
        self.entries.iter()
    }
}

/// Serde form of [`GammaValue`]: the radicand as a `num/den` string.
#[derive(Serialize, Deserialize)]
struct GammaValueRepr {
    radicand: String,
    index: u32,
}

impl Serialize for GammaValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GammaValueRepr {
            radicand: self.radicand.to_string(),
            index: self.index,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GammaValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = GammaValueRepr::deserialize(d)?;
        let radicand: BigRational = repr
            .radicand
            .parse()
            .map_err(|e| serde::de::Error::custom(format!("bad radicand: {e}")))?;
        if repr.index == 0 {
            return Err(serde::de::Error::custom("radical index must be positive"));
        }
        Ok(GammaValue::normalized(radicand, repr.index))
    }
}

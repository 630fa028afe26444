//! The modified R-polynomials of Bruhat intervals.
//!
//! Two independent computations are provided. [`rtilde_dyer`] sums
//! `q^h` over all label-increasing paths from `u` to `v` for a chosen
//! reflection ordering; the result is independent of the ordering.
//! [`rtilde_recurrence`] uses the right-descent recurrence
//!
//! ```text
//! R(u, u) = 1
//! R(u, v) = 0                       unless u < v
//! R(u, v) = R(us, vs)               if s is a right descent of both
//! R(u, v) = R(us, vs) + q R(u, vs)  if s is a right descent of v only
//! ```
//!
//! Agreement of the two on every interval is one of the deeper
//! consistency checks in the test suite.

use crate::caps::Caps;
use crate::coxgroup::{CoxGroup, ElemId, ReflectionOrdering};
use crate::error::Error;
use crate::Result;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Sub};

/// A polynomial in one variable `q` with arbitrary-precision integer
/// coefficients, stored densely by exponent.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    /// `coeffs[i]` is the coefficient of `q^i`; no trailing zeros.
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::monomial(0)
    }

    /// The monomial `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        QPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Adds `c * q^k` in place.
    pub fn add_monomial(&mut self, k: usize, c: BigInt) {
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, BigInt::zero());
        }
        self.coeffs[k] += c;
        self.trim();
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// Value at `q = 1`, i.e. the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Whether `self` and `other` agree in all coefficients of `q^k`
    /// for `k < modulus`.
    pub fn congruent_mod(&self, other: &QPoly, modulus: usize) -> bool {
        (0..modulus).all(|k| self.coeff(k) == other.coeff(k))
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(mut self, rhs: QPoly) -> QPoly {
        self += rhs;
        self
    }
}

impl AddAssign for QPoly {
    fn add_assign(&mut self, rhs: QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (i, c) in rhs.coeffs.into_iter().enumerate() {
            self.coeffs[i] += c;
        }
        self.trim();
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(mut self, rhs: QPoly) -> QPoly {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (i, c) in rhs.coeffs.into_iter().enumerate() {
            self.coeffs[i] -= c;
        }
        self.trim();
        self
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for QPoly {
    /// Descending powers, e.g. `q^5 + 2q^3 + q`; the zero polynomial
    /// prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.sign() == num_bigint::Sign::Minus {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{}", mag)?;
            }
            match k {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{}", k)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({})", self)
    }
}

/// Computes the modified R-polynomial of `[u, v]` as the generating
/// function of increasing paths: the coefficient of `q^h` is the number
/// of `h`-edge paths from `u` to `v` whose labels rise strictly in
/// `ordering`.
pub fn rtilde_dyer(
    g: &CoxGroup,
    ordering: &ReflectionOrdering,
    u: ElemId,
    v: ElemId,
    caps: &Caps,
) -> Result<QPoly> {
    if u == v {
        return Ok(QPoly::one());
    }
    if !g.bruhat_leq(u, v) {
        return Ok(QPoly::zero());
    }
    let below = g.down_set(v);
    let mut acc = QPoly::zero();
    let mut visits = 0u64;
    dyer_dfs(g, ordering, v, u, 0, None, &below, &mut visits, caps, &mut acc)?;
    Ok(acc)
}

#[allow(clippy::too_many_arguments)]
fn dyer_dfs(
    g: &CoxGroup,
    ordering: &ReflectionOrdering,
    v: ElemId,
    x: ElemId,
    depth: usize,
    floor: Option<u32>,
    below: &crate::bitset::BitSet,
    visits: &mut u64,
    caps: &Caps,
    acc: &mut QPoly,
) -> Result<()> {
    *visits += 1;
    if *visits > caps.max_paths {
        return Err(Error::CapExceeded(format!(
            "increasing-path sum exceeded {} visited nodes",
            caps.max_paths
        )));
    }
    if x == v {
        acc.add_monomial(depth, BigInt::one());
        // v has no strict upper bounds inside [u, v], so recursion below
        // would find nothing; fall through for uniformity.
    }
    for &(t, y) in g.up_edges(x) {
        if !below.contains(y as usize) {
            continue;
        }
        let pos = ordering.position(t);
        if floor.is_some_and(|f| pos <= f) {
            continue;
        }
        dyer_dfs(g, ordering, v, y, depth + 1, Some(pos), below, visits, caps, acc)?;
    }
    Ok(())
}

/// Memo table for [`rtilde_recurrence`], reusable across queries on the
/// same group.
#[derive(Default)]
pub struct RtildeTable {
    memo: HashMap<(ElemId, ElemId), QPoly>,
}

impl RtildeTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }
}

/// Computes the modified R-polynomial of `[u, v]` by the right-descent
/// recurrence, memoized in `table`.
pub fn rtilde_recurrence(g: &CoxGroup, u: ElemId, v: ElemId, table: &mut RtildeTable) -> QPoly {
    if u == v {
        return QPoly::one();
    }
    if g.length(u) >= g.length(v) || !g.bruhat_leq(u, v) {
        return QPoly::zero();
    }
    if let Some(p) = table.memo.get(&(u, v)) {
        return p.clone();
    }
    let s = *g
        .right_descents(v)
        .first()
        .expect("a non-identity element has a right descent");
    let vs = g.right_mult_gen(v, s);
    let us = g.right_mult_gen(u, s);
    let result = if g.length(us) < g.length(u) {
        rtilde_recurrence(g, us, vs, table)
    } else {
        rtilde_recurrence(g, us, vs, table) + rtilde_recurrence(g, u, vs, table).shift(1)
    };
    table.memo.insert((u, v), result.clone());
    result
}

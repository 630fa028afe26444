//! Dense univariate polynomials over ℤ.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::modpoly::{self, ModPoly};

/// A polynomial in ℤ[t], stored densely (index i holds the coefficient of
/// t^i, with no trailing zeros).
///
/// The derived `Ord` is an arbitrary but deterministic total order used for
/// map keys; reported factor lists are sorted by `(degree, coefficients)`
/// explicitly.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        UniPoly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        UniPoly::from_coeffs(vec![c.into()])
    }

    /// The monomial `c * t^e`.
    pub fn monomial(c: impl Into<BigInt>, e: usize) -> Self {
        let mut v = vec![BigInt::zero(); e + 1];
        v[e] = c.into();
        UniPoly::from_coeffs(v)
    }

    /// Builds from low-to-high coefficients, trimming trailing zeros.
    pub fn from_coeffs<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; 0 for constants and for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Low-to-high coefficients (no trailing zeros).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Number of trailing zero coefficients, i.e. the multiplicity of the
    /// factor t (0 for the zero polynomial).
    pub fn valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    /// Divides by `t^k`, which must divide exactly.
    pub fn shift_down(&self, k: usize) -> UniPoly {
        assert!(self.valuation() >= k, "t^k does not divide the polynomial");
        UniPoly::from_coeffs(self.coeffs[k..].to_vec())
    }

    pub fn derivative(&self) -> UniPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect::<Vec<_>>();
        UniPoly::from_coeffs(coeffs)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// GCD of all coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient (zero unchanged).
    pub fn primitive_part(&self) -> UniPoly {
        let mut g = self.content();
        if g.is_zero() {
            return self.clone();
        }
        if self.lc().is_negative() {
            g = -g;
        }
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(&g);
                    debug_assert!(r.is_zero());
                    q
                })
                .collect::<Vec<_>>(),
        )
    }

    /// Largest absolute value of a coefficient.
    pub fn max_coeff_abs(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_default()
    }

    /// Sum of squared coefficients (square of the Euclidean norm).
    pub fn norm2_sq(&self) -> BigInt {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    /// Exact division: returns `q` with `self = q * d`, or
    /// [`Error::DivisionFails`].
    pub fn exact_div(&self, d: &UniPoly) -> Result<UniPoly> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(UniPoly::zero());
        }
        let (n, m) = (self.coeffs.len(), d.coeffs.len());
        if n < m {
            return Err(Error::DivisionFails);
        }
        let dlc = d.lc();
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); n - m + 1];
        for k in (0..=n - m).rev() {
            if rem[k + m - 1].is_zero() {
                continue;
            }
            let (qc, r) = rem[k + m - 1].div_rem(&dlc);
            if !r.is_zero() {
                return Err(Error::DivisionFails);
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                let t = &qc * dj;
                rem[k + j] -= t;
            }
            q[k] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::DivisionFails);
        }
        Ok(UniPoly::from_coeffs(q))
    }

    pub fn divisible_by(&self, d: &UniPoly) -> bool {
        self.exact_div(d).is_ok()
    }

    /// GCD in ℤ[t]: `gcd(content, content) * gcd(primitive parts)`, the
    /// latter computed by the small-primes modular algorithm with CRT
    /// recovery. The result has non-negative leading coefficient.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() {
            return other.primitive_part_signed_content();
        }
        if other.is_zero() {
            return self.primitive_part_signed_content();
        }
        let cont = self.content().gcd(&other.content());
        let f = self.primitive_part();
        let g = other.primitive_part();
        let pp = primitive_gcd(&f, &g);
        &UniPoly::constant(cont) * &pp
    }

    /// Absolute value, essentially: the polynomial with positive leading
    /// coefficient (used to normalize gcd of a polynomial with zero).
    fn primitive_part_signed_content(&self) -> UniPoly {
        if self.lc().is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Factors into integer content and irreducible primitive factors with
    /// multiplicities, using default caps. See
    /// [`UniFactorization`](crate::UniFactorization).
    pub fn factor(&self) -> crate::Result<crate::UniFactorization> {
        self.factor_with_caps(&crate::FactorCaps::default())
    }

    /// Factors with explicit resource caps.
    pub fn factor_with_caps(&self, caps: &crate::FactorCaps) -> crate::Result<crate::UniFactorization> {
        crate::factor_uni::factor_unipoly(self, caps)
    }

    /// Yun's squarefree decomposition of a primitive polynomial with
    /// positive leading coefficient: returns `(g_i, i)` with
    /// `self = Π g_i^i`, each `g_i` squarefree, primitive, non-constant,
    /// and pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, u32)> {
        assert!(!self.is_zero() && self.degree() >= 1, "need a non-constant polynomial");
        debug_assert!(self.content().is_one() && self.lc().is_positive());
        let deriv = self.derivative();
        let g = self.gcd(&deriv);
        if g.degree() == 0 {
            return vec![(self.clone(), 1)];
        }
        let mut out = Vec::new();
        let mut w = self.exact_div(&g).expect("gcd divides");
        let mut y = deriv.exact_div(&g).expect("gcd divides derivative");
        let mut i = 1u32;
        loop {
            let z = &y - &w.derivative();
            if z.is_zero() {
                if w.degree() >= 1 {
                    out.push((w, i));
                }
                return out;
            }
            let gi = w.gcd(&z);
            if gi.degree() >= 1 {
                out.push((gi.clone(), i));
            }
            w = w.exact_div(&gi).expect("Yun invariant: gi divides w");
            y = z.exact_div(&gi).expect("Yun invariant: gi divides z");
            i += 1;
        }
    }
}

/// GCD of two nonzero primitive polynomials (primitive, positive lc).
fn primitive_gcd(f: &UniPoly, g: &UniPoly) -> UniPoly {
    if f.degree() == 0 || g.degree() == 0 {
        return UniPoly::one();
    }
    let gamma = f.lc().gcd(&g.lc());
    // Combined CRT image of gamma * (monic gcd mod p), with its modulus.
    let mut best: Option<(Vec<BigInt>, BigInt, usize)> = None;
    let mut primes = modpoly::primes_descending_from(u64::MAX >> 1);
    for _ in 0..200 {
        let p = primes.next().expect("prime iterator is unbounded");
        if (f.lc() % p).is_zero() || (g.lc() % p).is_zero() {
            continue;
        }
        let fp = ModPoly::from_unipoly(f, p);
        let gp = ModPoly::from_unipoly(g, p);
        let mut hp = fp.gcd(&gp);
        if hp.degree() == 0 {
            return UniPoly::one();
        }
        let gam = modpoly::to_mod(&gamma, p);
        hp = hp.mul_scalar(gam);
        let raw: Vec<u64> = (0..=hp.degree()).map(|i| hp.coeff(i)).collect();
        match &mut best {
            Some((coeffs, modulus, deg)) if hp.degree() == *deg => {
                for (a, &b) in coeffs.iter_mut().zip(&raw) {
                    *a = modpoly::crt_combine(a, modulus, b, p);
                }
                *modulus *= BigInt::from(p);
            }
            Some((_, _, deg)) if hp.degree() > *deg => continue, // unlucky prime
            _ => {
                let lifted = raw.iter().map(|&c| modpoly::sym_lift_u64(c, p)).collect();
                best = Some((lifted, BigInt::from(p), hp.degree()));
            }
        }
        let (coeffs, _, _) = best.as_ref().expect("just set");
        let candidate = UniPoly::from_coeffs(coeffs.clone()).primitive_part();
        if !candidate.is_zero() && f.divisible_by(&candidate) && g.divisible_by(&candidate) {
            return candidate;
        }
    }
    unreachable!("modular gcd failed to stabilize after 200 primes")
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match (e, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{a}*t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{a}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect::<Vec<_>>())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coeff(i) + rhs.coeff(i))
            .collect::<Vec<_>>();
        UniPoly::from_coeffs(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coeff(i) - rhs.coeff(i))
            .collect::<Vec<_>>();
        UniPoly::from_coeffs(coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
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
        UniPoly::from_coeffs(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(coeffs.to_vec())
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[1, 2]); // 2t + 1
        let b = p(&[-1, 1]); // t - 1
        assert_eq!(&a * &b, p(&[-1, -1, 2]));
        assert_eq!(&a + &b, p(&[0, 3]));
        assert_eq!((&a - &a), UniPoly::zero());
        assert_eq!(a.eval(&BigInt::from(3)), BigInt::from(7));
    }

    #[test]
    fn exact_division() {
        let a = p(&[2, 0, 3]); // 3t^2 + 2
        let b = p(&[-1, 5]); // 5t - 1
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert!(prod.exact_div(&p(&[1, 1])).is_err());
        assert!(p(&[1, 2]).exact_div(&p(&[0, 0, 1])).is_err());
    }

    #[test]
    fn gcd_of_products() {
        let a = p(&[1, 1]); // t + 1
        let b = p(&[2, 3]); // 3t + 2
        let c = p(&[-5, 0, 1]); // t^2 - 5
        let f = &(&a * &b) * &c;
        let g = &(&a * &c) * &c;
        let d = f.gcd(&g);
        assert_eq!(d, &a * &c);
        // Content is combined.
        let f2 = &f * &UniPoly::constant(6);
        let g2 = &g * &UniPoly::constant(10);
        assert_eq!(f2.gcd(&g2), &UniPoly::constant(2) * &(&a * &c));
    }

    #[test]
    fn gcd_with_zero_and_constants() {
        let a = p(&[-3, 0, 2]);
        assert_eq!(UniPoly::zero().gcd(&a), a);
        assert_eq!(a.gcd(&UniPoly::zero()), a);
        assert_eq!(p(&[4]).gcd(&p(&[6])), p(&[2]));
    }

    #[test]
    fn squarefree_decomposition_of_nested_powers() {
        let a = p(&[1, 1]);
        let b = p(&[2, 1]);
        let c = p(&[3, 1]);
        // (t+1)(t+2)^2(t+3)^3
        let f = &(&(&a * &b) * &b) * &(&(&c * &c) * &c);
        let parts = f.squarefree_decomposition();
        assert_eq!(parts, vec![(a, 1), (b, 2), (c, 3)]);
    }

    #[test]
    fn squarefree_decomposition_of_squarefree_input() {
        let f = p(&[1, 1, 0, 2]); // irreducible-ish squarefree
        assert_eq!(f.squarefree_decomposition(), vec![(f.clone(), 1)]);
    }

    #[test]
    fn valuation_and_shift() {
        let f = p(&[0, 0, 3, 1]);
        assert_eq!(f.valuation(), 2);
        assert_eq!(f.shift_down(2), p(&[3, 1]));
        assert_eq!(UniPoly::zero().valuation(), 0);
    }
}

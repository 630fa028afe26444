//! Factorization in ℤ[x, y] by Kronecker substitution.
//!
//! For a primitive polynomial q with deg_x q < K := deg_x q + 1, the map
//! y ↦ x^K sends monomials x^i y^j to distinct powers x^(i + Kj), and any
//! divisor of q (whose x-degree is also < K) maps injectively onto a
//! sub-product of the univariate image's irreducible factors. Factoring the
//! image over ℤ and un-substituting minimal factor subsets therefore finds
//! exactly the irreducible bivariate factors: a subset that maps back to a
//! divisor of q but has no smaller such subset cannot split further, since a
//! proper bivariate factorization would split the subset. Every recovered
//! factor is certified by exact division, so the routine never returns a
//! wrong factorization.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::factor_uni::factor_unipoly;
use crate::unipoly::UniPoly;
use crate::FactorCaps;

/// Factorization of an element of ℤ[x, y]: a signed integer content and
/// primitive irreducible factors (positive leading coefficient in graded-lex
/// order) with multiplicities, sorted canonically. The zero polynomial has
/// content 0 and no factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiFactorization {
    pub content: BigInt,
    pub factors: Vec<(BiPoly, u32)>,
}

impl BiFactorization {
    /// Multiplies the factorization back out (used for verification).
    pub fn expand(&self) -> BiPoly {
        let mut acc = BiPoly::constant(self.content.clone());
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m);
        }
        acc
    }

    /// The distinct irreducible factors, without multiplicities.
    pub fn distinct_factors(&self) -> impl Iterator<Item = &BiPoly> {
        self.factors.iter().map(|(f, _)| f)
    }
}

pub fn factor_bivariate(p: &BiPoly, caps: &FactorCaps) -> Result<BiFactorization> {
    if p.is_zero() {
        return Ok(BiFactorization { content: BigInt::zero(), factors: Vec::new() });
    }
    if p.total_degree() > caps.max_total_degree {
        return Err(Error::CapExceeded(format!(
            "total degree {} exceeds factorization cap {}",
            p.total_degree(),
            caps.max_total_degree
        )));
    }

    let mut content = p.content();
    let (_, lc) = p.leading().expect("nonzero");
    if lc.is_negative() {
        content = -content;
    }
    let mut q = p.primitive_part();
    let mut factors: Vec<(BiPoly, u32)> = Vec::new();

    // Monomial content: powers of x and y are irreducible factors.
    let vx = q.iter().map(|((xe, _), _)| xe).min().expect("nonzero");
    let vy = q.iter().map(|((_, ye), _)| ye).min().expect("nonzero");
    if vx > 0 || vy > 0 {
        let shifted =
            BiPoly::from_terms(q.iter().map(|((xe, ye), c)| (c.clone(), xe - vx, ye - vy)));
        if vx > 0 {
            factors.push((BiPoly::x(), vx));
        }
        if vy > 0 {
            factors.push((BiPoly::y(), vy));
        }
        q = shifted;
    }

    if !q.is_constant() {
        factor_primitive(&q, caps, &mut factors)?;
    }

    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0).then(a.1.cmp(&b.1)));
    let out = BiFactorization { content, factors };
    assert_eq!(out.expand(), *p, "factorization must multiply back to the input");
    Ok(out)
}

/// Factors a primitive non-constant polynomial with positive graded-lex
/// leading coefficient and no monomial content, appending to `factors`.
fn factor_primitive(
    q: &BiPoly,
    caps: &FactorCaps,
    factors: &mut Vec<(BiPoly, u32)>,
) -> Result<()> {
    let k = q.deg_x() + 1;

    // Univariate image under y ↦ x^K and its irreducible factors. The image
    // may pick up a power of t even though q has no monomial content; those
    // t's are genuine leaves (factor images have matching t-valuations) and
    // participate in recombination like any other prime.
    let image = kronecker_image(q, k);
    let ufac = factor_unipoly(&image, caps)?;
    debug_assert!(ufac.content.abs().is_one(), "image of a primitive polynomial is primitive");

    // Remaining leaf multiset, as (distinct factor, count) in a fixed order.
    let mut leaves: Vec<(UniPoly, u32)> = ufac.factors;
    let two = BigInt::from(2);
    let evals: Vec<(BigInt, BigInt)> = leaves
        .iter()
        .map(|(f, _)| (f.eval(&BigInt::one()), f.eval(&two)))
        .collect();

    let mut budget = caps.max_division_attempts;
    let mut q = q.clone();
    'extract: while !q.is_constant() {
        let remaining: u32 = leaves.iter().map(|(_, c)| c).sum();
        // Filter targets; a zero value disables that filter.
        let q1 = q.eval(&BigInt::one(), &BigInt::one());
        let q2 = kronecker_image(&q, k).eval(&two);

        let mut d = 1;
        while 2 * d <= remaining {
            let mut take = vec![0u32; leaves.len()];
            if try_subsets(
                &mut take, 0, d, &leaves, &evals, (&q1, &q2), &q, k, &mut budget, factors,
            )? {
                // A factor was extracted; `try_subsets` already updated
                // `factors`, and left the chosen take-vector in `take` so we
                // can update `q` and the leaf counts here.
                let cand = &factors.last().expect("just pushed").0;
                let mult = factors.last().expect("just pushed").1;
                q = divide_out(&q, cand, mult);
                // Zero slots are kept (not removed) so that leaf indices stay
                // aligned with the precomputed evaluation table.
                for (slot, t) in leaves.iter_mut().zip(&take) {
                    slot.1 = slot
                        .1
                        .checked_sub(t * mult)
                        .expect("extracted factor's leaves are available");
                }
                continue 'extract;
            }
            d += 1;
        }
        // No subset of size ≤ half divides q, so q itself is irreducible.
        factors.push((q.clone(), 1));
        return Ok(());
    }
    debug_assert!(
        leaves.iter().all(|(_, c)| *c == 0),
        "all leaves consumed once q is reduced to a unit"
    );
    Ok(())
}

/// The univariate image of `q` under y ↦ t^K (x ↦ t).
fn kronecker_image(q: &BiPoly, k: u32) -> UniPoly {
    let mut coeffs = vec![
        BigInt::zero();
        q.iter()
            .map(|((xe, ye), _)| (xe + k * ye) as usize)
            .max()
            .map_or(0, |d| d + 1)
    ];
    for ((xe, ye), c) in q.iter() {
        coeffs[(xe + k * ye) as usize] = c.clone();
    }
    UniPoly::from_coeffs(coeffs)
}

/// The inverse substitution on a polynomial whose x-degree is < K in every
/// recovered monomial: t^e ↦ x^(e mod K) y^(e div K).
fn un_kronecker(u: &UniPoly, k: u32) -> BiPoly {
    BiPoly::from_terms(
        u.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (c.clone(), e as u32 % k, e as u32 / k)),
    )
}

/// Recursively enumerates take-vectors of total weight `d` over the leaf
/// multiset; for each, tests whether the corresponding product un-substitutes
/// to a divisor of `q`. On success pushes `(factor, multiplicity)` onto
/// `factors`, leaves the winning take-vector in `take`, and returns true.
#[allow(clippy::too_many_arguments)]
fn try_subsets(
    take: &mut Vec<u32>,
    idx: usize,
    d_left: u32,
    leaves: &[(UniPoly, u32)],
    evals: &[(BigInt, BigInt)],
    targets: (&BigInt, &BigInt),
    q: &BiPoly,
    k: u32,
    budget: &mut u64,
    factors: &mut Vec<(BiPoly, u32)>,
) -> Result<bool> {
    if d_left == 0 {
        if *budget == 0 {
            return Err(Error::CapExceeded(
                "trial-division budget exhausted during bivariate recombination".into(),
            ));
        }
        *budget -= 1;
        return Ok(test_candidate(take, leaves, evals, targets, q, k, factors));
    }
    if idx == leaves.len() {
        return Ok(false);
    }
    let max_here = leaves[idx].1.min(d_left);
    for t in (0..=max_here).rev() {
        take[idx] = t;
        if try_subsets(take, idx + 1, d_left - t, leaves, evals, targets, q, k, budget, factors)? {
            return Ok(true);
        }
    }
    take[idx] = 0;
    Ok(false)
}

fn test_candidate(
    take: &[u32],
    leaves: &[(UniPoly, u32)],
    evals: &[(BigInt, BigInt)],
    (q1, q2): (&BigInt, &BigInt),
    q: &BiPoly,
    k: u32,
    factors: &mut Vec<(BiPoly, u32)>,
) -> bool {
    // Cheap filters first: the candidate's values at t = 1 and t = 2 equal
    // the bivariate candidate's values at (1,1) and (2,2^K), which must
    // divide q's.
    for (target, pick) in [(q1, 0usize), (q2, 1)] {
        if target.is_zero() {
            continue;
        }
        let mut e = BigInt::one();
        for (i, &t) in take.iter().enumerate() {
            for _ in 0..t {
                e *= if pick == 0 { &evals[i].0 } else { &evals[i].1 };
            }
        }
        if e.is_zero() || !(target % &e).is_zero() {
            return false;
        }
    }

    let mut prod = UniPoly::one();
    for (i, &t) in take.iter().enumerate() {
        for _ in 0..t {
            prod = &prod * &leaves[i].0;
        }
    }
    let cand = un_kronecker(&prod, k).primitive_part();
    if cand.is_constant() || cand.deg_x() > q.deg_x() || cand.deg_y() > q.deg_y() {
        return false;
    }
    if !q.divisible_by(&cand) {
        return false;
    }
    // Full multiplicity of the newly found irreducible factor.
    let mut mult = 1;
    let mut rest = q.exact_div(&cand).expect("just verified divisibility");
    while rest.divisible_by(&cand) {
        rest = rest.exact_div(&cand).expect("just verified divisibility");
        mult += 1;
    }
    factors.push((cand, mult));
    true
}

fn divide_out(q: &BiPoly, f: &BiPoly, mult: u32) -> BiPoly {
    let mut out = q.clone();
    for _ in 0..mult {
        out = out.exact_div(f).expect("factor divides");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::FactorCaps;

    fn p(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    fn factors_of(s: &str) -> BiFactorization {
        p(s).factor().unwrap()
    }

    #[test]
    fn diamond_polynomial_is_irreducible() {
        assert!(p("x^2 + 2*y").is_irreducible().unwrap());
    }

    #[test]
    fn square_of_diamond_polynomial() {
        let fac = factors_of("x^4 + 4*x^2*y + 4*y^2");
        assert_eq!(fac.content, BigInt::one());
        assert_eq!(fac.factors, vec![(p("x^2 + 2*y"), 2)]);
    }

    #[test]
    fn monomial_content_and_integer_content() {
        let fac = factors_of("6*x^3*y + 12*x^2*y^2");
        assert_eq!(fac.content, BigInt::from(6));
        assert_eq!(
            fac.factors,
            vec![(p("x"), 2), (p("x + 2*y"), 1), (p("y"), 1)]
        );
    }

    #[test]
    fn difference_of_squares() {
        let fac = factors_of("x^2 - y^2");
        assert_eq!(fac.factors, vec![(p("x + y"), 1), (p("x - y"), 1)]);
    }

    #[test]
    fn mixed_product_roundtrip() {
        let a = p("x^2 + 2*y");
        let b = p("x^3 - y + 4");
        let c = p("2*x + 3*y^2");
        let prod = &(&a * &b) * &c;
        let fac = prod.factor().unwrap();
        assert_eq!(fac.expand(), prod);
        assert_eq!(fac.factors.len(), 3);
        for (f, m) in &fac.factors {
            assert_eq!(*m, 1);
            assert!([&a, &b, &c].contains(&f));
        }
    }

    #[test]
    fn univariate_inputs_factor_too() {
        let fac = factors_of("x^2 - 1");
        assert_eq!(fac.factors, vec![(p("x + 1"), 1), (p("x - 1"), 1)]);
        let fac = factors_of("y^2 + y");
        assert_eq!(fac.factors, vec![(p("y"), 1), (p("y + 1"), 1)]);
    }

    #[test]
    fn constants_and_zero() {
        let fac = BiPoly::constant(-6).factor().unwrap();
        assert_eq!(fac.content, BigInt::from(-6));
        assert!(fac.factors.is_empty());
        let fac = BiPoly::zero().factor().unwrap();
        assert_eq!(fac.content, BigInt::zero());
        assert!(fac.factors.is_empty());
        assert!(!BiPoly::constant(7).is_irreducible().unwrap());
        assert!(BiPoly::y().is_irreducible().unwrap());
    }

    #[test]
    fn degree_cap_is_enforced() {
        let caps = FactorCaps { max_total_degree: 3, ..FactorCaps::default() };
        let err = p("x^4 + 4*x^2*y + 4*y^2").factor_with_caps(&caps).unwrap_err();
        assert!(matches!(err, Error::CapExceeded(_)));
    }

    #[test]
    fn negative_leading_coefficient() {
        let fac = factors_of("-x^2 + y^2");
        assert_eq!(fac.content, BigInt::from(-1));
        assert_eq!(fac.factors, vec![(p("x + y"), 1), (p("x - y"), 1)]);
    }
}

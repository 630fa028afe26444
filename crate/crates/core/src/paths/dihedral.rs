//! Closed-form path counts for dihedral intervals.
//!
//! In a dihedral reflection subgroup every Bruhat level strictly between
//! the endpoints holds two elements, and an increasing path is determined
//! by its sequence of length jumps. Jumps are odd, so `h`-paths across a
//! length gap of `d` correspond to compositions of `d` into `h` odd
//! parts, of which there are `C((d+h)/2 - 1, h-1)`. One increasing path
//! exists per flipclass here, which makes the same binomial count the
//! number of flipclasses.

use super::rtilde::QPoly;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Binomial coefficient `C(n, k)` in exact arithmetic.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Number of flipclasses of `h`-paths between dihedral-interval endpoints
/// whose lengths differ by `d`.
///
/// Nonzero exactly when `h` and `d` share parity and `1 <= h <= d`
/// (or `h == d == 0`).
pub fn dihedral_flipclass_count(d: u64, h: u64) -> BigUint {
    if d == 0 {
        return if h == 0 { BigUint::one() } else { BigUint::zero() };
    }
    if h == 0 || h > d || (d - h) % 2 != 0 {
        return BigUint::zero();
    }
    binomial((d + h) / 2 - 1, h - 1)
}

/// All compositions of `d` into exactly `h` odd positive parts, in
/// lexicographic order.
pub fn odd_compositions(d: u64, h: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(h as usize);
    fill_odd(d, h, &mut parts, &mut out);
    out
}

fn fill_odd(d: u64, h: u64, parts: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if h == 0 {
        if d == 0 {
            out.push(parts.clone());
        }
        return;
    }
    // Remaining h - 1 odd parts use at least h - 1, so this part is at
    // most d - (h - 1); it must also leave the right parity behind.
    let mut part = 1;
    while part + (h - 1) <= d {
        if (d - part - (h - 1)) % 2 == 0 {
            parts.push(part);
            fill_odd(d - part, h - 1, parts, out);
            parts.pop();
        }
        part += 2;
    }
}

/// The modified R-polynomial of a dihedral interval with length gap `d`:
/// the coefficient of `q^h` is [`dihedral_flipclass_count`]`(d, h)`.
pub fn dihedral_rtilde(d: u64) -> QPoly {
    let mut p = QPoly::zero();
    if d == 0 {
        return QPoly::one();
    }
    let mut h = if d % 2 == 0 { 2 } else { 1 };
    while h <= d {
        p.add_monomial(h as usize, BigInt::from(dihedral_flipclass_count(d, h)));
        h += 2;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::coxgroup::{CoxGroup, ReflectionOrdering};
    use crate::paths::{enumerate_flipclasses, rtilde_dyer};

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(10, 0), BigUint::one());
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn counts_match_odd_compositions() {
        for d in 0..=12u64 {
            for h in 0..=12u64 {
                assert_eq!(
                    BigUint::from(odd_compositions(d, h).len()),
                    dihedral_flipclass_count(d, h),
                    "d={d} h={h}"
                );
            }
        }
    }

    #[test]
    fn counts_match_enumeration_in_a_heptagon_group() {
        let g = CoxGroup::from_name("I2(7)", &Caps::default()).unwrap();
        let ordering = ReflectionOrdering::default_for(&g);
        let caps = Caps::default();
        for h in [1usize, 3, 5, 7] {
            let classes = enumerate_flipclasses(&g, &ordering, g.identity(), h, &caps, |v| {
                v == g.w0()
            })
            .unwrap();
            assert_eq!(
                BigUint::from(classes.len()),
                dihedral_flipclass_count(7, h as u64),
                "h={h}"
            );
            for class in &classes {
                assert_eq!(
                    class.count_increasing(|t| ordering.position(t)),
                    1,
                    "dihedral flipclasses hold exactly one increasing path"
                );
            }
        }
        assert!(enumerate_flipclasses(&g, &ordering, g.identity(), 2, &caps, |v| {
            v == g.w0()
        })
        .unwrap()
        .is_empty());
    }

    #[test]
    fn closed_form_polynomial_matches_path_sums() {
        for m in [3u32, 4, 5, 6] {
            let g = CoxGroup::from_name(&format!("I2({m})"), &Caps::default()).unwrap();
            let ordering = ReflectionOrdering::default_for(&g);
            let p = rtilde_dyer(&g, &ordering, g.identity(), g.w0(), &Caps::default()).unwrap();
            assert_eq!(p, dihedral_rtilde(m as u64), "m={m}");
        }
    }

    #[test]
    fn sub_interval_gap_four() {
        // Any dihedral interval with gap 4 has polynomial q^4 + 2q^2.
        let g = CoxGroup::from_name("I2(7)", &Caps::default()).unwrap();
        let ordering = ReflectionOrdering::default_for(&g);
        let u = g.generator(0);
        let v = (0..g.size() as u32)
            .find(|&x| g.length(x) == 5 && g.bruhat_leq(u, x))
            .unwrap();
        let p = rtilde_dyer(&g, &ordering, u, v, &Caps::default()).unwrap();
        assert_eq!(p, dihedral_rtilde(4));
        assert_eq!(p.to_string(), "q^4 + 2q^2");
    }
}

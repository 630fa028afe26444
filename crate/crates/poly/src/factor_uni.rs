//! Complete factorization in ℤ[t].
//!
//! Pipeline: content/sign and powers of t are split off, Yun's algorithm
//! separates squarefree parts, each part is factored modulo a small prime
//! (Berlekamp), the modular factorization is lifted by quadratic multifactor
//! Hensel lifting until the modulus exceeds a Mignotte-style coefficient
//! bound, and true factors are recovered by Zassenhaus subset recombination
//! with cheap evaluation filters before each trial division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::modpoly::{self, ModPoly};
use crate::unipoly::UniPoly;
use crate::FactorCaps;

/// Factorization of a nonzero element of ℤ[t]: a signed integer content and
/// primitive irreducible factors (positive leading coefficient) with
/// multiplicities, sorted by `(degree, coefficients)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniFactorization {
    pub content: BigInt,
    pub factors: Vec<(UniPoly, u32)>,
}

impl UniFactorization {
    /// Multiplies the factorization back out (used for verification).
    pub fn expand(&self) -> UniPoly {
        let mut acc = UniPoly::constant(self.content.clone());
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = &acc * f;
            }
        }
        acc
    }
}

/// Factors a nonzero polynomial over ℤ. Panics on the zero polynomial.
pub fn factor_unipoly(f: &UniPoly, caps: &FactorCaps) -> Result<UniFactorization> {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let mut content = f.content();
    if f.lc().is_negative() {
        content = -content;
    }
    let mut pp = f.primitive_part();
    let mut factors: Vec<(UniPoly, u32)> = Vec::new();

    let v = pp.valuation();
    if v > 0 {
        factors.push((UniPoly::monomial(1, 1), v as u32));
        pp = pp.shift_down(v);
    }

    let mut budget = caps.max_division_attempts;
    if pp.degree() == 1 {
        factors.push((pp, 1));
    } else if pp.degree() >= 2 {
        for (part, mult) in pp.squarefree_decomposition() {
            if part.degree() == 1 {
                factors.push((part, mult));
                continue;
            }
            for irr in factor_squarefree(&part, &mut budget)? {
                factors.push((irr, mult));
            }
        }
    }

    factors.sort_by(|a, b| {
        (a.0.degree(), a.0.coeffs())
            .cmp(&(b.0.degree(), b.0.coeffs()))
            .then(a.1.cmp(&b.1))
    });
    let out = UniFactorization { content, factors };
    debug_assert_eq!(out.expand(), *f, "factorization must multiply back");
    Ok(out)
}

/// Factors a primitive squarefree polynomial with positive leading
/// coefficient, degree ≥ 2, and nonzero constant term.
fn factor_squarefree(g: &UniPoly, budget: &mut u64) -> Result<Vec<UniPoly>> {
    debug_assert!(g.degree() >= 2 && !g.coeff(0).is_zero());
    let lcg = g.lc();

    // Pick a small odd prime p with p ∤ lc(g) and g squarefree mod p; among
    // the first few valid primes keep the one with the fewest modular
    // factors (fewer leaves make recombination cheaper).
    let mut best: Option<(u64, Vec<ModPoly>)> = None;
    let mut seen = 0;
    for p in modpoly::primes_ascending().take_while(|&p| p < 2000) {
        if (&lcg % p).is_zero() {
            continue;
        }
        let gp = ModPoly::from_unipoly(g, p).make_monic();
        if !gp.is_squarefree() {
            continue;
        }
        let modular = modpoly::berlekamp(&gp);
        if modular.len() == 1 {
            return Ok(vec![g.clone()]);
        }
        if best.as_ref().is_none_or(|(_, b)| modular.len() < b.len()) {
            best = Some((p, modular));
        }
        seen += 1;
        if seen >= 4 {
            break;
        }
    }
    let (p, modular) =
        best.expect("a squarefree polynomial is squarefree modulo some prime below 2000");

    // Hensel-lift the modular factorization until the modulus exceeds twice
    // the Mignotte bound for coefficients of lc(g) * (factor of g).
    let norm = g.norm2_sq().sqrt() + 1u32;
    let bound: BigInt = BigInt::from(4) * lcg.abs() * (BigInt::one() << g.degree()) * norm + 1;
    let mut tree = HenselTree::build(&modular);
    let mut m = BigInt::from(p);
    while m < bound {
        let m2 = &m * &m;
        let w = modinv_big(&lcg.mod_floor(&m2), &m2).expect("p ∤ lc(g) so lc is invertible");
        let ghat: Vec<BigInt> = g.coeffs().iter().map(|c| (c * &w).mod_floor(&m2)).collect();
        debug_assert!(ghat.last().expect("nonzero").is_one());
        tree.lift_level(&ghat, &m2);
        m = m2;
    }
    let mut leaves = Vec::new();
    tree.collect_leaves(&mut leaves);

    zassenhaus(g, &leaves, &m, budget)
}

/// Recombines monic modular factors `leaves` (mod `m`) into the true factors
/// of `g` by trying subsets in order of increasing cardinality. Subsets are
/// filtered by divisibility of evaluations at 0, 1, and -1 before any full
/// trial division.
fn zassenhaus(
    g: &UniPoly,
    leaves: &[Vec<BigInt>],
    m: &BigInt,
    budget: &mut u64,
) -> Result<Vec<UniPoly>> {
    let evals: Vec<[BigInt; 3]> = leaves
        .iter()
        .map(|l| [pm_eval0(l), pm_eval1(l, m), pm_eval_neg1(l, m)])
        .collect();

    let mut remaining: Vec<usize> = (0..leaves.len()).collect();
    let mut fstar = g.clone();
    let mut out = Vec::new();
    let mut d = 1;
    'size: while 2 * d <= remaining.len() {
        let n = remaining.len();
        let lcf = fstar.lc();
        let fvals = [
            &lcf * fstar.coeff(0),
            &lcf * fstar.eval(&BigInt::one()),
            &lcf * fstar.eval(&-BigInt::one()),
        ];
        let mut combo: Vec<usize> = (0..d).collect();
        loop {
            if *budget == 0 {
                return Err(Error::CapExceeded(
                    "trial-division budget exhausted during factor recombination".into(),
                ));
            }
            *budget -= 1;

            if passes_eval_filters(&combo, &remaining, &evals, &lcf, &fvals, m) {
                // Full candidate: primitive part of lc(f*) * Π leaves mod m.
                let mut prod = vec![lcf.mod_floor(m)];
                for &pos in &combo {
                    prod = pm_mul(&prod, &leaves[remaining[pos]], m);
                }
                let cand = UniPoly::from_coeffs(
                    prod.iter().map(|c| modpoly::sym_lift(c, m)).collect::<Vec<_>>(),
                )
                .primitive_part();
                if cand.degree() >= 1 {
                    if let Ok(q) = fstar.exact_div(&cand) {
                        out.push(cand);
                        fstar = q;
                        for &pos in combo.iter().rev() {
                            remaining.remove(pos);
                        }
                        continue 'size;
                    }
                }
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
        d += 1;
    }
    if fstar.degree() >= 1 {
        out.push(fstar);
    }
    Ok(out)
}

/// Divisibility filters: for a true factor, lc(f*) * Π leaves is exactly an
/// integer multiple of the primitive factor, so its value at 0, 1, -1 must
/// divide lc(f*) * f*(same point). Points where f* vanishes are skipped.
fn passes_eval_filters(
    combo: &[usize],
    remaining: &[usize],
    evals: &[[BigInt; 3]],
    lcf: &BigInt,
    fvals: &[BigInt; 3],
    m: &BigInt,
) -> bool {
    for k in 0..3 {
        if fvals[k].is_zero() {
            continue;
        }
        let mut e = lcf.mod_floor(m);
        for &pos in combo {
            e = (e * &evals[remaining[pos]][k]).mod_floor(m);
        }
        let e = modpoly::sym_lift(&e, m);
        if e.is_zero() || !fvals[k].is_multiple_of(&e) {
            return false;
        }
    }
    true
}

/// Advances `combo` to the next d-subset of `0..n` in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let d = combo.len();
    let mut i = d;
    while i > 0 {
        i -= 1;
        if combo[i] != i + n - d {
            combo[i] += 1;
            for j in i + 1..d {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

// ---------------------------------------------------------------------------
// Multifactor Hensel lifting
// ---------------------------------------------------------------------------

/// Factor tree for quadratic multifactor Hensel lifting. Each node stores
/// the (monic) product of the leaves below it and, for interior nodes, a
/// Bézout pair (s, t) with s·left + t·right ≡ 1 modulo the current modulus.
struct HenselTree {
    prod: Vec<BigInt>,
    bezout: Option<(Vec<BigInt>, Vec<BigInt>)>,
    children: Option<(Box<HenselTree>, Box<HenselTree>)>,
}

impl HenselTree {
    /// Builds the tree from monic, pairwise coprime factors over F_p.
    fn build(leaves: &[ModPoly]) -> HenselTree {
        let (node, _) = HenselTree::build_rec(leaves);
        node
    }

    fn build_rec(leaves: &[ModPoly]) -> (HenselTree, ModPoly) {
        if leaves.len() == 1 {
            let leaf = leaves[0].clone();
            let node = HenselTree {
                prod: to_big_vec(&leaf),
                bezout: None,
                children: None,
            };
            return (node, leaf);
        }
        let mid = leaves.len() / 2;
        let (lnode, lp) = HenselTree::build_rec(&leaves[..mid]);
        let (rnode, rp) = HenselTree::build_rec(&leaves[mid..]);
        let prod = lp.mul(&rp);
        let (one, s0, t0) = lp.xgcd(&rp);
        assert_eq!(one.degree(), 0, "modular factors must be pairwise coprime");
        // Normalize so that deg s < deg rp and deg t < deg lp.
        let (q, s) = s0.divrem(&rp);
        let t = t0.add(&q.mul(&lp));
        let node = HenselTree {
            prod: to_big_vec(&prod),
            bezout: Some((to_big_vec(&s), to_big_vec(&t))),
            children: Some((Box::new(lnode), Box::new(rnode))),
        };
        (node, prod)
    }

    /// One quadratic lifting step: the node's invariants, currently valid
    /// modulo m, are upgraded to hold modulo m² against the given (monic)
    /// target product.
    fn lift_level(&mut self, target: &[BigInt], m2: &BigInt) {
        self.prod = target.to_vec();
        let Some((left, right)) = self.children.as_mut() else {
            return;
        };
        let (s, t) = self.bezout.as_ref().expect("interior node has a Bézout pair");
        let g = &left.prod;
        let h = &right.prod;

        let e = pm_sub(target, &pm_mul(g, h, m2), m2);
        let (q, r) = pm_divrem(&pm_mul(s, &e, m2), h, m2);
        let gstar = pm_add(&pm_add(g, &pm_mul(t, &e, m2), m2), &pm_mul(&q, g, m2), m2);
        let hstar = pm_add(h, &r, m2);
        debug_assert!(hstar.last().is_some_and(BigInt::is_one), "lifted factor stays monic");
        debug_assert!(gstar.last().is_some_and(BigInt::is_one), "lifted factor stays monic");

        let sg = pm_mul(s, &gstar, m2);
        let th = pm_mul(t, &hstar, m2);
        let b = pm_sub(&pm_add(&sg, &th, m2), &[BigInt::one()], m2);
        let (c, d) = pm_divrem(&pm_mul(s, &b, m2), &hstar, m2);
        let sstar = pm_sub(s, &d, m2);
        let tstar = pm_sub(&pm_sub(t, &pm_mul(t, &b, m2), m2), &pm_mul(&c, &gstar, m2), m2);

        self.bezout = Some((sstar, tstar));
        left.lift_level(&gstar, m2);
        right.lift_level(&hstar, m2);
    }

    fn collect_leaves(&self, out: &mut Vec<Vec<BigInt>>) {
        match &self.children {
            None => out.push(self.prod.clone()),
            Some((l, r)) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }
}

fn to_big_vec(f: &ModPoly) -> Vec<BigInt> {
    f.coeffs().iter().map(|&c| BigInt::from(c)).collect()
}

// ---------------------------------------------------------------------------
// Dense polynomial arithmetic modulo m (coefficients kept in [0, m))
// ---------------------------------------------------------------------------

fn pm_trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn pm_add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut out: Vec<BigInt> = (0..n)
        .map(|i| {
            (a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero)).mod_floor(m)
        })
        .collect();
    pm_trim(&mut out);
    out
}

fn pm_sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut out: Vec<BigInt> = (0..n)
        .map(|i| {
            (a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero)).mod_floor(m)
        })
        .collect();
    pm_trim(&mut out);
    out
}

fn pm_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    for c in &mut out {
        *c = c.mod_floor(m);
    }
    pm_trim(&mut out);
    out
}

/// Division with remainder modulo m; the divisor must be monic.
fn pm_divrem(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    assert!(b.last().is_some_and(BigInt::is_one), "divisor must be monic");
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let mut r = a.to_vec();
    let nb = b.len();
    let mut q = vec![BigInt::zero(); r.len() - nb + 1];
    for k in (0..q.len()).rev() {
        let qc = r[k + nb - 1].clone();
        if qc.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] = (&r[k + j] - &qc * bj).mod_floor(m);
        }
        q[k] = qc;
    }
    pm_trim(&mut q);
    r.truncate(nb - 1);
    pm_trim(&mut r);
    (q, r)
}

fn pm_eval0(a: &[BigInt]) -> BigInt {
    a.first().cloned().unwrap_or_default()
}

fn pm_eval1(a: &[BigInt], m: &BigInt) -> BigInt {
    a.iter().sum::<BigInt>().mod_floor(m)
}

fn pm_eval_neg1(a: &[BigInt], m: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for (i, c) in a.iter().enumerate() {
        if i % 2 == 0 {
            acc += c;
        } else {
            acc -= c;
        }
    }
    acc.mod_floor(m)
}

fn modinv_big(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

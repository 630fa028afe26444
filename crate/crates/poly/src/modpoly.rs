//! Univariate polynomial arithmetic over F_p (p an odd prime below 2^63),
//! plus the small number-theoretic helpers the factorization pipeline needs:
//! deterministic Miller–Rabin for u64, prime iterators, symmetric lifts and
//! CRT recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::unipoly::UniPoly;

// ---------------------------------------------------------------------------
// Modular scalar arithmetic
// ---------------------------------------------------------------------------

#[inline]
fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse of `a` modulo the prime `p` (panics if `a ≡ 0`).
fn invm(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "zero has no inverse");
    powm(a, p - 2, p)
}

/// Deterministic Miller–Rabin for u64 (the 12 smallest prime bases suffice
/// for all 64-bit integers).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powm(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulm(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Odd primes strictly below `start`, in descending order.
pub fn primes_descending_from(start: u64) -> impl Iterator<Item = u64> {
    let mut n = if start % 2 == 0 { start - 1 } else { start - 2 };
    std::iter::from_fn(move || loop {
        if n < 3 {
            return None;
        }
        let cand = n;
        n -= 2;
        if is_prime_u64(cand) {
            return Some(cand);
        }
    })
}

/// Odd primes in ascending order starting from 3.
pub fn primes_ascending() -> impl Iterator<Item = u64> {
    let mut n = 1u64;
    std::iter::from_fn(move || loop {
        n += 2;
        if is_prime_u64(n) {
            return Some(n);
        }
    })
}

/// Reduces a big integer into `[0, p)`.
pub fn to_mod(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits in u64")
}

/// Symmetric lift of a residue mod p into `(-p/2, p/2]`.
pub fn sym_lift_u64(c: u64, p: u64) -> BigInt {
    if c > p / 2 {
        BigInt::from(c) - BigInt::from(p)
    } else {
        BigInt::from(c)
    }
}

/// Symmetric lift of a residue in `[0, m)` into `(-m/2, m/2]`.
pub fn sym_lift(c: &BigInt, m: &BigInt) -> BigInt {
    if c * 2 > *m {
        c - m
    } else {
        c.clone()
    }
}

/// Combines `x ≡ a (mod m)` (symmetric representative) with `x ≡ b (mod p)`
/// into the symmetric representative mod `m * p`.
pub fn crt_combine(a: &BigInt, m: &BigInt, b: u64, p: u64) -> BigInt {
    let pm = BigInt::from(p);
    let m_inv = to_mod(m, p);
    let diff = to_mod(&(BigInt::from(b) - a), p);
    let k = mulm(diff, invm(m_inv, p), p);
    let combined = a + m * BigInt::from(k);
    let modulus = m * &pm;
    sym_lift(&combined.mod_floor(&modulus), &modulus)
}

// ---------------------------------------------------------------------------
// Polynomials over F_p
// ---------------------------------------------------------------------------

/// A dense polynomial over F_p, `p` an odd prime below 2^63.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ModPoly {
    p: u64,
    c: Vec<u64>,
}

impl ModPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut c: Vec<u64> = coeffs.into_iter().map(|x| x % p).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        ModPoly { p, c }
    }

    pub fn zero(p: u64) -> Self {
        ModPoly { p, c: Vec::new() }
    }

    pub fn constant(p: u64, c: u64) -> Self {
        ModPoly::new(p, vec![c])
    }

    pub fn from_unipoly(f: &UniPoly, p: u64) -> Self {
        ModPoly::new(p, f.coeffs().iter().map(|c| to_mod(c, p)).collect())
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.c.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn lc(&self) -> u64 {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn add(&self, rhs: &ModPoly) -> ModPoly {
        let n = self.c.len().max(rhs.c.len());
        ModPoly::new(
            self.p,
            (0..n).map(|i| addm(self.coeff(i), rhs.coeff(i), self.p)).collect(),
        )
    }

    pub fn sub(&self, rhs: &ModPoly) -> ModPoly {
        let n = self.c.len().max(rhs.c.len());
        ModPoly::new(
            self.p,
            (0..n).map(|i| subm(self.coeff(i), rhs.coeff(i), self.p)).collect(),
        )
    }

    pub fn sub_scalar(&self, s: u64) -> ModPoly {
        let mut c = self.c.clone();
        if c.is_empty() {
            c.push(0);
        }
        c[0] = subm(c[0], s % self.p, self.p);
        ModPoly::new(self.p, c)
    }

    pub fn mul(&self, rhs: &ModPoly) -> ModPoly {
        if self.is_zero() || rhs.is_zero() {
            return ModPoly::zero(self.p);
        }
        let mut out = vec![0u64; self.c.len() + rhs.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.c.iter().enumerate() {
                out[i + j] = addm(out[i + j], mulm(a, b, self.p), self.p);
            }
        }
        ModPoly::new(self.p, out)
    }

    pub fn mul_scalar(&self, s: u64) -> ModPoly {
        ModPoly::new(self.p, self.c.iter().map(|&a| mulm(a, s, self.p)).collect())
    }

    pub fn make_monic(&self) -> ModPoly {
        if self.is_zero() || self.lc() == 1 {
            return self.clone();
        }
        self.mul_scalar(invm(self.lc(), self.p))
    }

    /// Division with remainder; the divisor may be non-monic (its leading
    /// coefficient is inverted).
    pub fn divrem(&self, d: &ModPoly) -> (ModPoly, ModPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.c.len() < d.c.len() {
            return (ModPoly::zero(self.p), self.clone());
        }
        let p = self.p;
        let dlc_inv = invm(d.lc(), p);
        let mut r = self.c.clone();
        let m = d.c.len();
        let mut q = vec![0u64; r.len() - m + 1];
        for k in (0..q.len()).rev() {
            let qc = mulm(r[k + m - 1], dlc_inv, p);
            if qc == 0 {
                continue;
            }
            q[k] = qc;
            for (j, &dj) in d.c.iter().enumerate() {
                r[k + j] = subm(r[k + j], mulm(qc, dj, p), p);
            }
        }
        (ModPoly::new(p, q), ModPoly::new(p, r))
    }

    pub fn rem(&self, d: &ModPoly) -> ModPoly {
        self.divrem(d).1
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &ModPoly) -> ModPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*other = g`,
    /// `g` monic.
    pub fn xgcd(&self, other: &ModPoly) -> (ModPoly, ModPoly, ModPoly) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (ModPoly::constant(p, 1), ModPoly::zero(p));
        let (mut t0, mut t1) = (ModPoly::zero(p), ModPoly::constant(p, 1));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
            (t0, t1) = (t1, t);
        }
        if r0.is_zero() || r0.lc() == 1 {
            return (r0, s0, t0);
        }
        let inv = invm(r0.lc(), p);
        (r0.mul_scalar(inv), s0.mul_scalar(inv), t0.mul_scalar(inv))
    }

    pub fn derivative(&self) -> ModPoly {
        let p = self.p;
        ModPoly::new(
            p,
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mulm(c, (i as u64) % p, p))
                .collect(),
        )
    }

    /// True iff the polynomial is squarefree over F_p. A vanishing
    /// derivative (a polynomial in t^p) counts as not squarefree.
    pub fn is_squarefree(&self) -> bool {
        if self.degree() == 0 {
            return true;
        }
        let d = self.derivative();
        if d.is_zero() {
            return false;
        }
        self.gcd(&d).degree() == 0
    }

    /// `self^e mod f` by repeated squaring.
    pub fn pow_mod(&self, mut e: u64, f: &ModPoly) -> ModPoly {
        let mut base = self.rem(f);
        let mut acc = ModPoly::constant(self.p, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(f);
            }
            base = base.mul(&base).rem(f);
            e >>= 1;
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// Berlekamp factorization over F_p (small p)
// ---------------------------------------------------------------------------

/// Factors a monic squarefree polynomial over F_p into monic irreducibles,
/// sorted. Intended for small `p`: the splitting step scans all residues.
pub fn berlekamp(f: &ModPoly) -> Vec<ModPoly> {
    let p = f.modulus();
    let n = f.degree();
    debug_assert!(f.lc() == 1 && f.is_squarefree());
    if n <= 1 {
        return vec![f.clone()];
    }

    // Frobenius images: column i is x^(p*i) mod f.
    let xp = ModPoly::new(p, vec![0, 1]).pow_mod(p, f);
    let mut cols: Vec<ModPoly> = Vec::with_capacity(n);
    let mut cur = ModPoly::constant(p, 1);
    for _ in 0..n {
        cols.push(cur.clone());
        cur = cur.mul(&xp).rem(f);
    }

    // Nullspace basis of (Q - I).
    let mut mat = vec![vec![0u64; n]; n];
    for (i, col) in cols.iter().enumerate() {
        for j in 0..n {
            mat[j][i] = col.coeff(j);
        }
    }
    for i in 0..n {
        mat[i][i] = subm(mat[i][i], 1, p);
    }
    let basis = nullspace(mat, p);
    let r = basis.len();
    debug_assert!(r >= 1);

    let basis_polys: Vec<ModPoly> = basis
        .into_iter()
        .map(|v| ModPoly::new(p, v))
        .filter(|v| v.degree() >= 1)
        .collect();

    let mut factors = vec![f.clone()];
    'split: while factors.len() < r {
        for v in &basis_polys {
            for idx in 0..factors.len() {
                if factors[idx].degree() < 2 {
                    continue;
                }
                let g = factors[idx].clone();
                let vr = v.rem(&g);
                for c in 0..p {
                    let h = g.gcd(&vr.sub_scalar(c));
                    if h.degree() > 0 && h.degree() < g.degree() {
                        let (q, rem) = g.divrem(&h);
                        debug_assert!(rem.is_zero());
                        factors[idx] = h.make_monic();
                        factors.push(q.make_monic());
                        continue 'split;
                    }
                }
            }
        }
        unreachable!("Berlekamp basis must separate all {r} factors");
    }
    factors.sort();
    factors
}

/// Nullspace basis of a square matrix over F_p (row-major).
fn nullspace(mut mat: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let n = mat.len();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut row = 0;
    for col in 0..n {
        let Some(pr) = (row..n).find(|&r| mat[r][col] != 0) else {
            continue;
        };
        mat.swap(row, pr);
        let inv = invm(mat[row][col], p);
        for x in &mut mat[row] {
            *x = mulm(*x, inv, p);
        }
        for r in 0..n {
            if r != row && mat[r][col] != 0 {
                let factor = mat[r][col];
                for cidx in 0..n {
                    let t = mulm(factor, mat[row][cidx], p);
                    mat[r][cidx] = subm(mat[r][cidx], t, p);
                }
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
        if row == n {
            break;
        }
    }
    let mut basis = Vec::new();
    for col in 0..n {
        if pivot_of_col[col].is_some() {
            continue;
        }
        let mut v = vec![0u64; n];
        v[col] = 1;
        for (c, pivot) in pivot_of_col.iter().enumerate() {
            if let Some(r) = pivot {
                v[c] = subm(0, mat[*r][col], p);
            }
        }
        basis.push(v);
    }
    basis
}

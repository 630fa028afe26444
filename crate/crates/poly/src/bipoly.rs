//! Sparse bivariate polynomials over ℤ with a canonical string form.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::factor_bi::{self, BiFactorization};
use crate::FactorCaps;

/// Exponent pair `(x_exp, y_exp)` of a monomial.
pub type Monomial = (u32, u32);

/// Graded-lexicographic comparison of monomials: first by total degree, then
/// by x-exponent. This is the order used both for the canonical string form
/// (descending) and as the term order for exact division.
fn cmp_grlex(a: Monomial, b: Monomial) -> Ordering {
    let (ax, ay) = a;
    let (bx, by) = b;
    (ax + ay, ax).cmp(&(bx + by, bx))
}

/// A sparse polynomial in ℤ[x, y].
///
/// Only nonzero coefficients are stored. Equality, hashing, and the canonical
/// string form are all structural, so two polynomials compare equal exactly
/// when they are equal in the ring.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    /// Map from exponent pair to (nonzero) coefficient.
    terms: BTreeMap<Monomial, BigInt>,
}

impl BiPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        BiPoly::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        BiPoly::constant(BigInt::one())
    }

    /// A constant polynomial.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        BiPoly::monomial(c, 0, 0)
    }

    /// The monomial `c * x^xe * y^ye`.
    pub fn monomial(c: impl Into<BigInt>, xe: u32, ye: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((xe, ye), c);
        }
        BiPoly { terms }
    }

    /// The variable x.
    pub fn x() -> Self {
        BiPoly::monomial(1, 1, 0)
    }

    /// The variable y.
    pub fn y() -> Self {
        BiPoly::monomial(1, 0, 1)
    }

    /// Builds a polynomial from `(coeff, x_exp, y_exp)` triples, summing
    /// duplicate monomials.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (C, u32, u32)>) -> Self {
        let mut p = BiPoly::zero();
        for (c, xe, ye) in terms {
            p.add_term(c.into(), (xe, ye));
        }
        p
    }

    /// Adds `c * x^m.0 * y^m.1` in place.
    pub fn add_term(&mut self, c: BigInt, m: Monomial) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True iff the polynomial is a (possibly zero) integer constant.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&m| m == (0, 0))
    }

    /// Number of stored (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of `x^xe * y^ye` (zero if the monomial is absent).
    pub fn coeff(&self, xe: u32, ye: u32) -> BigInt {
        self.terms.get(&(xe, ye)).cloned().unwrap_or_default()
    }

    /// Iterates over `(monomial, coefficient)` pairs in ascending map order.
    pub fn iter(&self) -> impl Iterator<Item = (Monomial, &BigInt)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    /// Total degree, or 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|&(x, y)| x + y).max().unwrap_or(0)
    }

    /// Degree in x, or 0 for the zero polynomial.
    pub fn deg_x(&self) -> u32 {
        self.terms.keys().map(|&(x, _)| x).max().unwrap_or(0)
    }

    /// Degree in y, or 0 for the zero polynomial.
    pub fn deg_y(&self) -> u32 {
        self.terms.keys().map(|&(_, y)| y).max().unwrap_or(0)
    }

    /// Leading monomial and coefficient in graded-lex order, if nonzero.
    pub fn leading(&self) -> Option<(Monomial, &BigInt)> {
        self.terms
            .iter()
            .max_by(|a, b| cmp_grlex(*a.0, *b.0))
            .map(|(&m, c)| (m, c))
    }

    /// GCD of all coefficients (non-negative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and normalizes the graded-lex leading
    /// coefficient to be positive. Returns the primitive part; the zero
    /// polynomial is returned unchanged.
    pub fn primitive_part(&self) -> BiPoly {
        let g = self.content();
        if g.is_zero() {
            return self.clone();
        }
        let mut p = self.div_exact_int(&g);
        if let Some((_, lc)) = p.leading() {
            if lc.is_negative() {
                p = -&p;
            }
        }
        p
    }

    /// Divides every coefficient by `d`, which must divide each exactly.
    fn div_exact_int(&self, d: &BigInt) -> BiPoly {
        let terms = self
            .terms
            .iter()
            .map(|(&m, c)| {
                let (q, r) = c.div_rem(d);
                debug_assert!(r.is_zero(), "non-exact integer division of coefficients");
                (m, q)
            })
            .collect();
        BiPoly { terms }
    }

    /// Evaluates at integer arguments.
    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (&(xe, ye), c) in &self.terms {
            acc += c * x.pow(xe) * y.pow(ye);
        }
        acc
    }

    /// Substitutes x ↦ y, y ↦ x.
    pub fn swap_vars(&self) -> BiPoly {
        let terms = self.terms.iter().map(|(&(x, y), c)| ((y, x), c.clone())).collect();
        BiPoly { terms }
    }

    /// Raises to a non-negative power by repeated squaring.
    pub fn pow(&self, mut e: u32) -> BiPoly {
        let mut base = self.clone();
        let mut acc = BiPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact division: returns `q` with `self = q * d`, or
    /// [`Error::DivisionFails`] if no such `q` exists in ℤ[x, y].
    ///
    /// Runs long division with respect to the graded-lex term order; since
    /// that is a monomial order the remainder's leading monomial strictly
    /// decreases, so the loop terminates.
    pub fn exact_div(&self, d: &BiPoly) -> Result<BiPoly> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (dm, dc) = d.leading().expect("nonzero divisor has a leading term");
        let dc = dc.clone();
        let mut q = BiPoly::zero();
        let mut r = self.clone();
        while let Some((rm, rc)) = r.leading() {
            if rm.0 < dm.0 || rm.1 < dm.1 {
                return Err(Error::DivisionFails);
            }
            let (qc, rem) = rc.div_rem(&dc);
            if !rem.is_zero() {
                return Err(Error::DivisionFails);
            }
            let qm = (rm.0 - dm.0, rm.1 - dm.1);
            let t = BiPoly::monomial(qc, qm.0, qm.1);
            r = &r - &(&t * d);
            q = &q + &t;
        }
        Ok(q)
    }

    /// True iff `d` divides `self` exactly.
    pub fn divisible_by(&self, d: &BiPoly) -> bool {
        self.exact_div(d).is_ok()
    }

    /// Factors into integer content and irreducible primitive factors with
    /// multiplicities, using default caps. See [`BiFactorization`].
    pub fn factor(&self) -> Result<BiFactorization> {
        self.factor_with_caps(&FactorCaps::default())
    }

    /// Factors with explicit resource caps.
    pub fn factor_with_caps(&self, caps: &FactorCaps) -> Result<BiFactorization> {
        factor_bi::factor_bivariate(self, caps)
    }

    /// True iff the polynomial is irreducible over ℤ: unit content and a
    /// single primitive factor with multiplicity 1. Constants are never
    /// irreducible by this convention.
    pub fn is_irreducible(&self) -> Result<bool> {
        if self.is_constant() {
            return Ok(false);
        }
        let f = self.factor()?;
        Ok(f.content.abs().is_one() && f.factors.len() == 1 && f.factors[0].1 == 1)
    }

    /// Canonical ordering on polynomials: by total degree, then by the
    /// canonical string. Used to report factor lists deterministically.
    pub fn canonical_cmp(&self, other: &BiPoly) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.to_string().cmp(&other.to_string()))
    }

    /// Terms in canonical (printing) order: graded-lex descending.
    fn terms_canonical(&self) -> Vec<(Monomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(&m, c)| (m, c)).collect();
        v.sort_by(|a, b| cmp_grlex(b.0, a.0));
        v
    }
}

impl fmt::Display for BiPoly {
    /// Canonical string form: terms in graded-lex descending order, joined
    /// by ` + ` / ` - `, each term `c*x^i*y^j` with unit coefficients and
    /// zero exponents elided (e.g. `x^4 + 4*x^2*y + 4*y^2`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((xe, ye), c)) in self.terms_canonical().into_iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            let mut parts: Vec<String> = Vec::new();
            if !a.is_one() || (xe == 0 && ye == 0) {
                parts.push(a.to_string());
            }
            match xe {
                0 => {}
                1 => parts.push("x".into()),
                _ => parts.push(format!("x^{xe}")),
            }
            match ye {
                0 => {}
                1 => parts.push("y".into()),
                _ => parts.push(format!("y^{ye}")),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl FromStr for BiPoly {
    type Err = Error;

    /// Parses the canonical string form (and reasonable variants: arbitrary
    /// whitespace, `+`/`-` without surrounding spaces, repeated variables in
    /// a term).
    fn from_str(s: &str) -> Result<Self> {
        Parser { s: s.as_bytes(), pos: 0 }.parse()
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn parse(&mut self) -> Result<BiPoly> {
        let mut acc = BiPoly::zero();
        self.skip_ws();
        if self.pos == self.s.len() {
            return Err(self.error("empty input"));
        }
        let mut sign = 1i32;
        if self.peek() == Some(b'-') {
            sign = -1;
            self.pos += 1;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        loop {
            let (c, m) = self.parse_term()?;
            acc.add_term(if sign < 0 { -c } else { c }, m);
            self.skip_ws();
            match self.peek() {
                None => return Ok(acc),
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                Some(ch) => return Err(self.error(format!("expected '+' or '-', found '{}'", ch as char))),
            }
            self.pos += 1;
        }
    }

    /// One term: `factor ('*' factor)*` where factor is an integer, `x[^k]`,
    /// or `y[^k]`.
    fn parse_term(&mut self) -> Result<(BigInt, Monomial)> {
        let mut coeff = BigInt::one();
        let mut xe: u32 = 0;
        let mut ye: u32 = 0;
        let mut first = true;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'0'..=b'9') => coeff *= self.parse_int()?,
                Some(b'x') => {
                    self.pos += 1;
                    xe = xe
                        .checked_add(self.parse_exponent()?)
                        .ok_or_else(|| self.error("exponent overflow"))?;
                }
                Some(b'y') => {
                    self.pos += 1;
                    ye = ye
                        .checked_add(self.parse_exponent()?)
                        .ok_or_else(|| self.error("exponent overflow"))?;
                }
                _ if first => return Err(self.error("expected a term")),
                _ => return Err(self.error("expected a factor after '*'")),
            }
            first = false;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((coeff, (xe, ye)));
            }
        }
    }

    fn parse_exponent(&mut self) -> Result<u32> {
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let n = self.parse_int()?;
            u32::try_from(n).map_err(|_| self.error("exponent out of range"))
        } else {
            Ok(1)
        }
    }

    fn parse_int(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).expect("digits are ascii");
        txt.parse::<BigInt>().map_err(|e| self.error(e.to_string()))
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        let terms = self.terms.iter().map(|(&m, c)| (m, -c)).collect();
        BiPoly { terms }
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.add_term(c.clone(), m);
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.add_term(-c, m);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(ax, ay), ac) in &self.terms {
            for (&(bx, by), bc) in &rhs.terms {
                out.add_term(ac * bc, (ax + bx, ay + by));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_string_matches_expected_forms() {
        assert_eq!(p("x^2 + 2*y").to_string(), "x^2 + 2*y");
        assert_eq!(p("2*y + x^2").to_string(), "x^2 + 2*y");
        assert_eq!(BiPoly::zero().to_string(), "0");
        assert_eq!(BiPoly::one().to_string(), "1");
        assert_eq!(p("-x + 1").to_string(), "-x + 1");
        assert_eq!(p("y^2*x^0 - 3").to_string(), "y^2 - 3");
        // Graded-lex: total degree first, then x-exponent.
        assert_eq!(p("y^3 + x*y + x^2").to_string(), "y^3 + x^2 + x*y");
    }

    #[test]
    fn square_of_diamond_polynomial() {
        let d = p("x^2 + 2*y");
        let d2 = &d * &d;
        assert_eq!(d2.to_string(), "x^4 + 4*x^2*y + 4*y^2");
        assert_eq!(d2, p("x^4 + 4*x^2*y + 4*y^2"));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<BiPoly>().is_err());
        assert!("x +".parse::<BiPoly>().is_err());
        assert!("z^2".parse::<BiPoly>().is_err());
        assert!("3 * * x".parse::<BiPoly>().is_err());
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = p("x^2 + 2*y");
        let b = p("x^3 - y + 4");
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert!(prod.exact_div(&p("x + 1")).is_err());
        assert!(a.exact_div(&BiPoly::zero()).is_err());
    }

    #[test]
    fn content_and_primitive_part() {
        let f = p("6*x^2*y + 4*y^2");
        assert_eq!(f.content(), BigInt::from(2));
        assert_eq!(f.primitive_part(), p("3*x^2*y + 2*y^2"));
        let g = p("-2*x - 4");
        // Leading coefficient is normalized positive.
        assert_eq!(g.primitive_part(), p("x + 2"));
    }

    #[test]
    fn eval_and_swap() {
        let f = p("x^2 + 2*y");
        assert_eq!(f.eval(&BigInt::from(3), &BigInt::from(5)), BigInt::from(19));
        assert_eq!(f.swap_vars(), p("y^2 + 2*x"));
    }
}

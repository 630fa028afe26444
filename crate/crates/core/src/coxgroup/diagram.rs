//! Coxeter diagrams: parsing and classification data.
//!
//! A diagram is a product of irreducible factors from the finite families
//! `A`, `B`, `D`, `E6..E8`, `F4`, `G2`, `H3`, `H4` and `I2(m)`. Diagram
//! strings look like `"A3"`, `"B4"`, `"I2(7)"` or `"A2xA1"`. Generator
//! numbering follows Bourbaki: within `B_n` the bond of order 4 joins the
//! last two generators (short root last), within `F4` it joins the middle
//! two, and within `E_n` the branch node is generator 2 attached to
//! generator 4.

use super::scalar::Scalar;
use crate::error::Error;
use crate::Result;
use std::fmt;

/// An irreducible factor of a finite Coxeter diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    /// `A_n`, `n >= 1`: the symmetric group on `n + 1` letters.
    A(usize),
    /// `B_n`, `n >= 2`: signed permutations.
    B(usize),
    /// `D_n`, `n >= 4`: evenly signed permutations.
    D(usize),
    /// `E_n` for `n` in `{6, 7, 8}`.
    E(usize),
    /// `F_4`.
    F4,
    /// `G_2`.
    G2,
    /// `H_3`.
    H3,
    /// `H_4`.
    H4,
    /// The dihedral group `I_2(m)` of order `2m`, `m >= 2`.
    I2(u32),
}

/// How a factor is realised for element storage.
///
/// Crystallographic factors and the `H` family act on their root systems
/// with exact coordinates in `Q(sqrt 5)`. Dihedral factors whose Cartan
/// data would leave `Q(sqrt 5)` are realised instead as symmetries of a
/// regular `m`-gon, acting on `m` labelled points; the path machinery only
/// ever needs linear independence of their label roots, which a synthetic
/// planar assignment provides.
#[derive(Debug, Clone)]
pub enum Realization {
    /// Reflection representation with the given Cartan matrix; entry
    /// `[i][j]` is `2 (a_i, a_j) / (a_i, a_i)` for simple roots `a_i`.
    Geometric { cartan: Vec<Vec<Scalar>> },
    /// Action of `I_2(m)` on the vertices `0..m` of a regular `m`-gon.
    Polygon { m: u32 },
}

impl Family {
    /// Number of generators.
    pub fn rank(&self) -> usize {
        match self {
            Family::A(n) | Family::B(n) | Family::D(n) | Family::E(n) => *n,
            Family::F4 | Family::H4 => 4,
            Family::G2 | Family::I2(_) => 2,
            Family::H3 => 3,
        }
    }

    /// Group order.
    pub fn order(&self) -> u128 {
        fn fact(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        match self {
            Family::A(n) => fact(n + 1),
            Family::B(n) => (1u128 << n) * fact(*n),
            Family::D(n) => (1u128 << (n - 1)) * fact(*n),
            Family::E(6) => 51_840,
            Family::E(7) => 2_903_040,
            Family::E(8) => 696_729_600,
            Family::E(_) => unreachable!("validated at parse time"),
            Family::F4 => 1_152,
            Family::G2 => 12,
            Family::H3 => 120,
            Family::H4 => 14_400,
            Family::I2(m) => 2 * *m as u128,
        }
    }

    /// Number of reflections, i.e. the length of the longest element.
    pub fn reflection_count(&self) -> usize {
        match self {
            Family::A(n) => n * (n + 1) / 2,
            Family::B(n) => n * n,
            Family::D(n) => n * (n - 1),
            Family::E(6) => 36,
            Family::E(7) => 63,
            Family::E(8) => 120,
            Family::E(_) => unreachable!("validated at parse time"),
            Family::F4 => 24,
            Family::G2 => 6,
            Family::H3 => 15,
            Family::H4 => 60,
            Family::I2(m) => *m as usize,
        }
    }

    /// True for Weyl groups (crystallographic factors).
    pub fn is_crystallographic(&self) -> bool {
        match self {
            Family::A(_) | Family::B(_) | Family::D(_) | Family::E(_) => true,
            Family::F4 | Family::G2 => true,
            Family::H3 | Family::H4 => false,
            Family::I2(m) => matches!(m, 2 | 3 | 4 | 6),
        }
    }

    /// Coxeter matrix entry `m(i, j)` for generators of this factor,
    /// 0-based local indices.
    pub fn coxeter_entry(&self, i: usize, j: usize) -> u32 {
        if i == j {
            return 1;
        }
        let (lo, hi) = (i.min(j), i.max(j));
        let chain = |bond: u32, at: usize| -> u32 {
            // Chain diagram with one special bond between `at` and `at + 1`.
            if hi == lo + 1 {
                if lo == at {
                    bond
                } else {
                    3
                }
            } else {
                2
            }
        };
        match self {
            Family::A(_) => chain(3, usize::MAX),
            Family::B(n) => chain(4, n - 2),
            Family::D(n) => {
                // Chain 0..n-2 plus generator n-1 attached to n-3.
                let n = *n;
                if hi == n - 1 {
                    if lo == n - 3 {
                        3
                    } else {
                        2
                    }
                } else {
                    chain(3, usize::MAX)
                }
            }
            Family::E(_) => {
                // Bourbaki: chain 1-3-4-5-6(-7-8) with 2 attached to 4.
                // 0-based: chain 0-2-3-4-5(-6-7) with 1 attached to 3.
                let adjacent = |a: usize, b: usize| -> bool {
                    matches!((a, b), (0, 2) | (1, 3)) || (a >= 2 && b == a + 1)
                };
                if adjacent(lo, hi) {
                    3
                } else {
                    2
                }
            }
            Family::F4 => chain(4, 1),
            Family::G2 => 6,
            Family::H3 | Family::H4 => chain(5, 0),
            Family::I2(m) => *m,
        }
    }

    /// The realization used to store elements of this factor.
    pub fn realization(&self) -> Realization {
        match self {
            Family::I2(m) => {
                // A reflection representation over Q(sqrt 5) needs
                // 4 cos^2(pi/m) in the field, which holds exactly for
                // these m. Odd m forces equal root lengths (a single
                // reflection class), so both off-diagonal entries are
                // -2 cos(pi/m); even m uses the two-length form with
                // entries -1 and -4 cos^2(pi/m).
                let pair = match *m {
                    2 => Some((Scalar::zero(), Scalar::zero())),
                    3 => Some((-Scalar::one(), -Scalar::one())),
                    4 => Some((-Scalar::one(), -Scalar::from_int(2))),
                    5 => Some((-Scalar::golden(), -Scalar::golden())),
                    6 => Some((-Scalar::one(), -Scalar::from_int(3))),
                    10 => Some((-Scalar::one(), -Scalar::with_sqrt5(5, 1, 2))),
                    _ => None,
                };
                match pair {
                    Some((a12, a21)) => {
                        let two = Scalar::from_int(2);
                        let cartan = vec![vec![two.clone(), a12], vec![a21, two]];
                        Realization::Geometric { cartan }
                    }
                    None => Realization::Polygon { m: *m },
                }
            }
            _ => Realization::Geometric {
                cartan: self.cartan(),
            },
        }
    }

    /// Cartan matrix of a non-polygonal factor.
    fn cartan(&self) -> Vec<Vec<Scalar>> {
        let n = self.rank();
        let mut a = vec![vec![Scalar::zero(); n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = Scalar::from_int(2);
        }
        let mut bond = |i: usize, j: usize, ij: Scalar, ji: Scalar| {
            a[i][j] = ij;
            a[j][i] = ji;
        };
        let m1 = || -Scalar::one();
        match self {
            Family::A(n) => {
                for i in 0..n - 1 {
                    bond(i, i + 1, m1(), m1());
                }
            }
            Family::B(n) => {
                for i in 0..n - 2 {
                    bond(i, i + 1, m1(), m1());
                }
                // Short root last: the final bond has order 4.
                bond(n - 2, n - 1, m1(), -Scalar::from_int(2));
            }
            Family::D(n) => {
                for i in 0..n - 2 {
                    bond(i, i + 1, m1(), m1());
                }
                bond(n - 3, n - 1, m1(), m1());
            }
            Family::E(n) => {
                bond(0, 2, m1(), m1());
                bond(1, 3, m1(), m1());
                for i in 2..n - 1 {
                    bond(i, i + 1, m1(), m1());
                }
            }
            Family::F4 => {
                bond(0, 1, m1(), m1());
                bond(1, 2, m1(), -Scalar::from_int(2));
                bond(2, 3, m1(), m1());
            }
            Family::G2 => {
                bond(0, 1, m1(), -Scalar::from_int(3));
            }
            Family::H3 | Family::H4 => {
                bond(0, 1, -Scalar::golden(), -Scalar::golden());
                for i in 1..self.rank() - 1 {
                    bond(i, i + 1, m1(), m1());
                }
            }
            Family::I2(_) => unreachable!("dihedral factors use realization()"),
        }
        a
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A(n) => write!(f, "A{n}"),
            Family::B(n) => write!(f, "B{n}"),
            Family::D(n) => write!(f, "D{n}"),
            Family::E(n) => write!(f, "E{n}"),
            Family::F4 => write!(f, "F4"),
            Family::G2 => write!(f, "G2"),
            Family::H3 => write!(f, "H3"),
            Family::H4 => write!(f, "H4"),
            Family::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// A finite Coxeter diagram: an ordered product of irreducible factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    factors: Vec<Family>,
}

impl Diagram {
    /// Parse a diagram string such as `"A3"`, `"I2(7)"` or `"B3xA1"`.
    pub fn parse(text: &str) -> Result<Diagram> {
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::Diagram("empty diagram string".into()));
        }
        let mut factors = Vec::new();
        for token in cleaned.split('x') {
            factors.push(parse_factor(token, text)?);
        }
        Ok(Diagram { factors })
    }

    /// The irreducible factors, in input order.
    pub fn factors(&self) -> &[Family] {
        &self.factors
    }

    /// Total number of generators.
    pub fn rank(&self) -> usize {
        self.factors.iter().map(Family::rank).sum()
    }

    /// Group order, or an error if it overflows `u64`.
    pub fn order(&self) -> Result<u64> {
        let mut product: u128 = 1;
        for f in &self.factors {
            product = product
                .checked_mul(f.order())
                .filter(|&p| p <= u64::MAX as u128)
                .ok_or_else(|| Error::Diagram(format!("order of {self} overflows u64")))?;
        }
        Ok(product as u64)
    }

    /// Total number of reflections, i.e. the length of the longest element.
    pub fn reflection_count(&self) -> usize {
        self.factors.iter().map(Family::reflection_count).sum()
    }

    /// Coxeter matrix over global 0-based generator indices; `m(i, i) = 1`
    /// and generators of distinct factors commute.
    pub fn coxeter_matrix(&self) -> Vec<Vec<u32>> {
        let n = self.rank();
        let mut m = vec![vec![2; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        let mut base = 0;
        for f in &self.factors {
            let r = f.rank();
            for i in 0..r {
                for j in 0..r {
                    m[base + i][base + j] = f.coxeter_entry(i, j);
                }
            }
            base += r;
        }
        m
    }

    /// True when every factor is a Weyl group.
    pub fn is_crystallographic(&self) -> bool {
        self.factors.iter().all(Family::is_crystallographic)
    }

    /// True when every factor is of type `A`.
    pub fn is_type_a(&self) -> bool {
        self.factors.iter().all(|f| matches!(f, Family::A(_)))
    }

    /// Factor index and local generator index for a global generator index.
    pub fn factor_of_generator(&self, s: usize) -> (usize, usize) {
        let mut base = 0;
        for (fi, f) in self.factors.iter().enumerate() {
            if s < base + f.rank() {
                return (fi, s - base);
            }
            base += f.rank();
        }
        panic!("generator index {s} out of range for {self}");
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, fam) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{fam}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Diagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Diagram> {
        Diagram::parse(s)
    }
}

fn parse_factor(token: &str, original: &str) -> Result<Family> {
    let bad = |msg: &str| Error::Diagram(format!("{msg} in {original:?}"));
    if let Some(rest) = token.strip_prefix("I2(") {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| bad("unterminated I2(...)"))?;
        let m: u32 = inner
            .parse()
            .map_err(|_| bad("I2 parameter is not a number"))?;
        if m < 2 {
            return Err(bad("I2 parameter must be at least 2"));
        }
        return Ok(Family::I2(m));
    }
    let mut chars = token.chars();
    let letter = chars.next().ok_or_else(|| bad("empty factor"))?;
    let digits = chars.as_str();
    let n: usize = digits
        .parse()
        .map_err(|_| bad("factor rank is not a number"))?;
    match (letter, n) {
        ('A', n) if n >= 1 => Ok(Family::A(n)),
        ('B', n) if n >= 2 => Ok(Family::B(n)),
        ('C', n) if n >= 2 => Ok(Family::B(n)),
        ('D', n) if n >= 4 => Ok(Family::D(n)),
        ('E', n @ 6..=8) => Ok(Family::E(n)),
        ('F', 4) => Ok(Family::F4),
        ('G', 2) => Ok(Family::G2),
        ('H', 3) => Ok(Family::H3),
        ('H', 4) => Ok(Family::H4),
        _ => Err(bad("unknown factor")),
    }
}

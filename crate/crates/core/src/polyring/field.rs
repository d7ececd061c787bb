//! Exact coefficient fields: the rationals and prime fields `F_p`.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default modulus when a prime field is selected without an explicit `p`.
pub const DEFAULT_PRIME: u32 = 32003;

/// A coefficient field tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u32),
}

impl Field {
    /// The prime field `F_p`, rejecting composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Self> {
        if !(2..1 << 31).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p as u32))
    }

    /// 0 for the rationals.
    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => FieldElement::Prime {
                residue: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(self, n: &BigInt) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                FieldElement::Prime {
                    residue: r.to_u32().expect("residue below modulus"),
                    modulus: p,
                }
            }
        }
    }

    /// `num / den`; fails when `den` vanishes in this field.
    pub fn from_fraction(self, num: &BigInt, den: &BigInt) -> Result<FieldElement> {
        let d = self.from_bigint(den);
        self.from_bigint(num).checked_div(&d)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "qq"),
            Field::Prime(p) => write!(f, "fp={p}"),
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 4 {
        return n >= 2;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of [`Field`]. Rationals are kept in lowest terms with a
/// positive denominator; prime-field residues lie in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Prime { residue: u32, modulus: u32 },
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rationals,
            FieldElement::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_zero(),
            FieldElement::Prime { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_one(),
            FieldElement::Prime { residue, .. } => *residue == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            FieldElement::Rational(q) => FieldElement::Rational(q.recip()),
            FieldElement::Prime { residue, modulus } => FieldElement::Prime {
                residue: pow_mod(*residue as u64, *modulus as u64 - 2, *modulus as u64) as u32,
                modulus: *modulus,
            },
        })
    }

    pub fn checked_div(&self, rhs: &FieldElement) -> Result<FieldElement> {
        let inv = rhs.inv().ok_or(Error::DivisionByZero)?;
        Ok(self * &inv)
    }

    pub fn pow(&self, mut exp: u32) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElement::Rational(q) => Some(q),
            FieldElement::Prime { .. } => None,
        }
    }

    /// Balanced representative in `(-p/2, p/2]` for residues, the value itself
    /// for rationals.
    pub fn to_rational_repr(&self) -> BigRational {
        match self {
            FieldElement::Rational(q) => q.clone(),
            FieldElement::Prime { residue, modulus } => {
                let r = *residue as i64;
                let p = *modulus as i64;
                let v = if r > p / 2 { r - p } else { r };
                BigRational::from_integer(BigInt::from(v))
            }
        }
    }

    /// Sign used when printing: negative coefficients print with a leading `-`.
    pub fn is_negative_repr(&self) -> bool {
        self.to_rational_repr().is_negative()
    }

    fn expect_same(&self, other: &FieldElement) -> u32 {
        match (self, other) {
            (FieldElement::Prime { modulus: a, .. }, FieldElement::Prime { modulus: b, .. })
                if a == b =>
            {
                *a
            }
            _ => panic!(
                "mixed coefficient fields: {:?} vs {:?}",
                self.field(),
                other.field()
            ),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl Ord for FieldElement {
    /// Numeric order on rationals, residue order on prime fields. Only used for
    /// deterministic sorting of points.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => a.cmp(b),
            (FieldElement::Prime { residue: a, .. }, FieldElement::Prime { residue: b, .. }) => {
                a.cmp(b)
            }
            (FieldElement::Rational(_), _) => Ordering::Less,
            _ => Ordering::Greater,
        }
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a + b),
            (FieldElement::Prime { residue: a, .. }, FieldElement::Prime { residue: b, .. }) => {
                let p = self.expect_same(rhs);
                FieldElement::Prime {
                    residue: ((*a as u64 + *b as u64) % p as u64) as u32,
                    modulus: p,
                }
            }
            _ => {
                self.expect_same(rhs);
                unreachable!()
            }
        }
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a - b),
            (FieldElement::Prime { residue: a, .. }, FieldElement::Prime { residue: b, .. }) => {
                let p = self.expect_same(rhs);
                FieldElement::Prime {
                    residue: ((*a as u64 + p as u64 - *b as u64) % p as u64) as u32,
                    modulus: p,
                }
            }
            _ => {
                self.expect_same(rhs);
                unreachable!()
            }
        }
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a * b),
            (FieldElement::Prime { residue: a, .. }, FieldElement::Prime { residue: b, .. }) => {
                let p = self.expect_same(rhs);
                FieldElement::Prime {
                    residue: ((*a as u64 * *b as u64) % p as u64) as u32,
                    modulus: p,
                }
            }
            _ => {
                self.expect_same(rhs);
                unreachable!()
            }
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(-a),
            FieldElement::Prime { residue, modulus } => FieldElement::Prime {
                residue: if *residue == 0 { 0 } else { modulus - residue },
                modulus: *modulus,
            },
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.to_rational_repr();
        if q.is_integer() {
            write!(f, "{}", q.numer())
        } else {
            write!(f, "{}/{}", q.numer(), q.denom())
        }
    }
}

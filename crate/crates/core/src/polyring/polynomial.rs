use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{Field, FieldElement};
use super::monomial::{Monomial, Vars, NVARS};
use super::order::grevlex_cmp;
use crate::error::{Error, Result};

/// The ambient ring `k[vars]` of a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    pub vars: Vars,
    pub field: Field,
}

impl PolyRing {
    pub const fn new(vars: Vars, field: Field) -> Self {
        PolyRing { vars, field }
    }

    /// `k[x,y,z]`.
    pub const fn projective(field: Field) -> Self {
        PolyRing {
            vars: Vars::XYZ,
            field,
        }
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    fn check(&self, other: &PolyRing) -> Result<()> {
        if self != other {
            return Err(Error::RingMismatch(format!(
                "{} over {} vs {} over {}",
                self.vars, self.field, other.vars, other.field
            )));
        }
        Ok(())
    }
}

/// A sparse polynomial. Terms are stored strictly descending in grevlex
/// (`x > y > z`) with no zero coefficients, so structural equality is
/// polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<(Monomial, FieldElement)>,
}

impl Polynomial {
    pub fn zero(ring: PolyRing) -> Self {
        Polynomial {
            ring,
            terms: Vec::new(),
        }
    }

    pub fn one(ring: PolyRing) -> Self {
        Polynomial::constant(ring, ring.field.one())
    }

    pub fn constant(ring: PolyRing, c: FieldElement) -> Self {
        Polynomial::monomial(ring, Monomial::ONE, c)
    }

    pub fn monomial(ring: PolyRing, m: Monomial, c: FieldElement) -> Self {
        assert!(m.support().is_subset(ring.vars), "monomial outside ring");
        assert_eq!(c.field(), ring.field, "coefficient from another field");
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring,
            terms: vec![(m, c)],
        }
    }

    pub fn variable(ring: PolyRing, var: usize) -> Self {
        Polynomial::monomial(ring, Monomial::var(var, 1), ring.field.one())
    }

    /// Builds a polynomial from arbitrary terms: duplicates are combined and
    /// zeros dropped. Panics on monomials outside the ring.
    pub fn from_terms<I>(ring: PolyRing, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, FieldElement)>,
    {
        let mut raw: Vec<(Monomial, FieldElement)> = terms.into_iter().collect();
        for (m, c) in &raw {
            assert!(
                m.support().is_subset(ring.vars),
                "monomial {m} outside {}",
                ring.vars
            );
            assert_eq!(c.field(), ring.field, "coefficient from another field");
        }
        raw.sort_by(|a, b| grevlex_cmp(&b.0, &a.0));
        let mut terms: Vec<(Monomial, FieldElement)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match terms.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = &*lc + &c,
                _ => terms.push((m, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        Polynomial { ring, terms }
    }

    /// Terms already sorted descending in grevlex with nonzero coefficients.
    pub(crate) fn from_sorted(ring: PolyRing, terms: Vec<(Monomial, FieldElement)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| grevlex_cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> PolyRing {
        self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field
    }

    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE)
    }

    /// Leading term under grevlex.
    pub fn leading_term(&self) -> Option<&(Monomial, FieldElement)> {
        self.terms.first()
    }

    pub fn leading_coefficient(&self) -> Option<&FieldElement> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElement {
        self.terms
            .iter()
            .find(|(tm, _)| tm == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.ring.field.zero())
    }

    /// Maximum total degree, `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.total_degree())
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.exponent(var))
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self
                .terms
                .iter()
                .all(|(t, _)| t.total_degree() == m.total_degree()),
        }
    }

    /// Variables that actually occur.
    pub fn support(&self) -> Vars {
        self.terms
            .iter()
            .fold(Vars::EMPTY, |acc, (m, _)| acc.union(m.support()))
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        Ok(self.mul_unchecked(other))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match grevlex_cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for (m, c) in &b[j..] {
            out.push((*m, if negate { -c } else { c.clone() }));
        }
        Polynomial::from_sorted(self.ring, out)
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.ring);
        }
        let mut acc = Polynomial::zero(self.ring);
        // accumulate row by row so each merge stays sorted
        let (short, long) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (m, c) in &short.terms {
            acc = acc.merge(&long.mul_term(m, c), false);
        }
        acc
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring);
        }
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect();
        Polynomial::from_sorted(self.ring, terms)
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        self.mul_term(&Monomial::ONE, c)
    }

    pub fn pow(&self, mut n: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(self.ring);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative.
    pub fn differentiate(&self, var: usize) -> Polynomial {
        let field = self.ring.field;
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(var) > 0)
            .map(|(m, c)| {
                let e = m.exponent(var);
                (m.with_exponent(var, e - 1), c * &field.from_i64(e as i64))
            });
        Polynomial::from_terms(self.ring, terms)
    }

    /// Substitutes 1 for `var`; the result lives in the ring without `var`.
    pub fn dehomogenize(&self, var: usize) -> Polynomial {
        let ring = PolyRing::new(self.ring.vars.without(var), self.ring.field);
        Polynomial::from_terms(
            ring,
            self.terms.iter().map(|(m, c)| (m.without(var), c.clone())),
        )
    }

    /// `var^n * self(x/var, ...)`: homogeneous of degree `target` in the ring
    /// extended by `var`.
    pub fn homogenize(&self, var: usize, target: u32) -> Result<Polynomial> {
        let degree = self.total_degree().unwrap_or(0);
        if degree > target {
            return Err(Error::DegreeTooLow { target, degree });
        }
        let ring = PolyRing::new(self.ring.vars.with(var), self.ring.field);
        Ok(Polynomial::from_terms(
            ring,
            self.terms.iter().map(|(m, c)| {
                let e = m.exponent(var) + target - m.total_degree();
                (m.with_exponent(var, e), c.clone())
            }),
        ))
    }

    /// Substitutes `images[i]` for each active variable `i`; inactive slots
    /// are ignored.
    pub fn substitute(&self, images: &[Polynomial; NVARS]) -> Result<Polynomial> {
        let target = images
            .iter()
            .enumerate()
            .find(|(i, _)| self.ring.vars.contains(*i))
            .map(|(_, p)| p.ring)
            .unwrap_or(self.ring);
        for (i, p) in images.iter().enumerate() {
            if self.ring.vars.contains(i) {
                target.check(&p.ring)?;
            }
        }
        let mut powers: [Vec<Polynomial>; NVARS] = [Vec::new(), Vec::new(), Vec::new()];
        for v in self.ring.vars.iter() {
            let top = self.degree_in(v);
            let mut pw = Vec::with_capacity(top as usize + 1);
            pw.push(Polynomial::one(target));
            for k in 1..=top as usize {
                let next = &pw[k - 1] * &images[v];
                pw.push(next);
            }
            powers[v] = pw;
        }
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for v in self.ring.vars.iter() {
                let e = m.exponent(v) as usize;
                if e > 0 {
                    t = &t * &powers[v][e];
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// `self(v_1 + a_1, ..., v_n + a_n)` over the active variables in
    /// ascending order.
    pub fn translate(&self, point: &[FieldElement]) -> Result<Polynomial> {
        let vars: Vec<usize> = self.ring.vars.iter().collect();
        if point.len() != vars.len() {
            return Err(Error::ArityMismatch {
                expected: vars.len(),
                got: point.len(),
            });
        }
        let mut images: [Polynomial; NVARS] = core::array::from_fn(|_| Polynomial::zero(self.ring));
        for (&v, a) in vars.iter().zip(point) {
            images[v] =
                &Polynomial::variable(self.ring, v) + &Polynomial::constant(self.ring, a.clone());
        }
        self.substitute(&images)
    }

    /// Value at a point given in active-variable order.
    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement> {
        let vars: Vec<usize> = self.ring.vars.iter().collect();
        if point.len() != vars.len() {
            return Err(Error::ArityMismatch {
                expected: vars.len(),
                got: point.len(),
            });
        }
        let mut slot: [FieldElement; NVARS] = core::array::from_fn(|_| self.ring.field.zero());
        for (&v, a) in vars.iter().zip(point) {
            slot[v] = a.clone();
        }
        let mut acc = self.ring.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in vars.iter().copied() {
                let e = m.exponent(v);
                if e > 0 {
                    t = &t * &slot[v].pow(e);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Exact quotient `self / g`, `None` if `g` does not divide `self`.
    pub fn div_exact(&self, g: &Polynomial) -> Option<Polynomial> {
        let (gm, gc) = g.leading_term()?;
        let ginv = gc.inv()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading_term() {
            let q = gm.quotient_of(m)?;
            let qc = c * &ginv;
            rem = rem.merge(&g.mul_term(&q, &qc), true);
            quot.push((q, qc));
        }
        Some(Polynomial::from_terms(self.ring, quot))
    }

    /// Scaled so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            Some(c) if !c.is_one() => self.scale(&c.inv().expect("nonzero")),
            _ => self.clone(),
        }
    }

    /// Over the rationals: integer coefficients with content 1 and positive
    /// leading coefficient. Over a prime field: monic.
    pub fn primitive(&self) -> Polynomial {
        if self.ring.field != Field::Rationals || self.is_zero() {
            return self.monic();
        }
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            den = den.lcm(c.as_rational().expect("rational").denom());
        }
        let mut num = BigInt::zero();
        for (_, c) in &self.terms {
            let q = c.as_rational().expect("rational");
            num = num.gcd(&(q.numer() * (&den / q.denom())));
        }
        let mut s = BigRational::new(den, num);
        if self.terms[0]
            .1
            .as_rational()
            .expect("rational")
            .is_negative()
        {
            s = -s;
        }
        self.scale(&FieldElement::Rational(s))
    }

    /// Re-tags the polynomial into a ring containing its support.
    pub fn with_ring(&self, ring: PolyRing) -> Result<Polynomial> {
        if ring.field != self.ring.field || !self.support().is_subset(ring.vars) {
            return Err(Error::RingMismatch(format!(
                "cannot move polynomial from {} into {}",
                self.ring.vars, ring.vars
            )));
        }
        Ok(Polynomial {
            ring,
            terms: self.terms.clone(),
        })
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::from_sorted(
            self.ring,
            self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        )
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text form, re-readable by [`super::parse_polynomial`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let q = c.to_rational_repr();
            let neg = q.is_negative();
            let abs = q.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = abs.is_one();
            let coeff = if abs.is_integer() {
                format!("{}", abs.numer())
            } else {
                format!("{}/{}", abs.numer(), abs.denom())
            };
            if *m == Monomial::ONE {
                write!(f, "{coeff}")?;
            } else if unit {
                write!(f, "{m}")?;
            } else {
                write!(f, "{coeff}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;
    use proptest::prelude::*;

    const QQ: Field = Field::Rationals;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, QQ).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert!((&p("x") + &p("-x")).is_zero());
        assert_eq!(&p("x+y") * &p("x-y"), p("x^2-y^2"));
        let cubic = p("y^2*z - x^3 - x^2*z");
        assert_eq!(&cubic * &p("1"), cubic);
        assert_eq!((&p("x+y") * &p("x+y")).total_degree(), Some(2));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = p("x");
        let b = Polynomial::variable(PolyRing::projective(Field::Prime(7)), 0);
        assert!(matches!(a.checked_add(&b), Err(Error::RingMismatch(_))));
        let c = p("y").dehomogenize(0);
        assert!(a.checked_mul(&c).is_err());
    }

    #[test]
    fn derivatives() {
        let f = p("y^2*z - x^3 - x^2*z");
        assert_eq!(f.differentiate(0), p("-3*x^2 - 2*x*z"));
        assert_eq!(f.differentiate(1), p("2*y*z"));
        assert!(p("x^5").differentiate(2).is_zero());
    }

    #[test]
    fn dehomogenize_examples() {
        assert_eq!(p("x^2").dehomogenize(2), p("x^2").dehomogenize(2));
        assert_eq!(p("x^2").dehomogenize(2).terms(), p("x^2").terms());
        assert!(p("z^3").dehomogenize(2).is_constant());
        let g = p("2*x*z + 3*y^2").dehomogenize(0);
        assert_eq!(g.ring().vars, Vars::XYZ.without(0));
        assert_eq!(alloc::format!("{g}"), "3*y^2 + 2*z");
    }

    #[test]
    fn homogenize_examples() {
        let ring = PolyRing::new(Vars::XYZ.without(2), QQ);
        let f = p("x + 1").with_ring(ring).unwrap();
        assert_eq!(f.homogenize(2, 1).unwrap(), p("x + z"));
        let g = p("y^2").with_ring(ring).unwrap();
        assert_eq!(g.homogenize(2, 4).unwrap(), p("y^2*z^2"));
        assert_eq!(
            g.homogenize(2, 1),
            Err(Error::DegreeTooLow {
                target: 1,
                degree: 2
            })
        );
    }

    #[test]
    fn translate_and_evaluate() {
        let ring = PolyRing::new(Vars::XYZ.without(2), QQ);
        let x = Polynomial::variable(ring, 0);
        let one = QQ.one();
        let zero = QQ.zero();
        assert_eq!(
            x.translate(&[one.clone(), zero.clone()]).unwrap(),
            &x + &Polynomial::one(ring)
        );
        let cubic = p("y^2*z - x^3 - x^2*z");
        assert!(cubic
            .evaluate(&[zero.clone(), zero.clone(), one.clone()])
            .unwrap()
            .is_zero());
        assert_eq!(
            p("x").evaluate(&[QQ.from_i64(5)]),
            Err(Error::ArityMismatch {
                expected: 3,
                got: 1
            })
        );
        assert!(p("2*x*z + 3*y^2")
            .evaluate(&[one, zero.clone(), zero])
            .unwrap()
            .is_zero());
    }

    #[test]
    fn primitive_normalization() {
        assert_eq!(p("-4*x + 6/5*y").primitive(), p("10*x - 3*y"));
        assert_eq!(p("0").primitive(), p("0"));
    }

    #[test]
    fn exact_division() {
        let f = &p("x^2 - y^2") * &p("x*z + 3");
        assert_eq!(f.div_exact(&p("x*z + 3")), Some(p("x^2 - y^2")));
        assert_eq!(p("x^2 + 1").div_exact(&p("x + 1")), None);
    }

    fn arb_poly(vars: Vars, max_deg: u32) -> impl Strategy<Value = Polynomial> {
        let ring = PolyRing::new(vars, QQ);
        proptest::collection::vec((proptest::array::uniform3(0u32..=max_deg), -9i64..=9), 0..8)
            .prop_map(move |raw| {
                Polynomial::from_terms(
                    ring,
                    raw.into_iter().filter_map(|(e, c)| {
                        let mut e = e;
                        for (v, x) in e.iter_mut().enumerate() {
                            if !vars.contains(v) {
                                *x = 0;
                            }
                        }
                        if e.iter().sum::<u32>() > max_deg {
                            return None;
                        }
                        Some((Monomial::new(e), QQ.from_i64(c)))
                    }),
                )
            })
    }

    fn arb_homogeneous(max_deg: u32) -> impl Strategy<Value = Polynomial> {
        (
            1..=max_deg,
            proptest::collection::vec((0u32..=6, 0u32..=6, -9i64..=9), 1..8),
        )
            .prop_map(|(d, raw)| {
                Polynomial::from_terms(
                    PolyRing::projective(QQ),
                    raw.into_iter().map(move |(a, b, c)| {
                        let a = a.min(d);
                        let b = b.min(d - a);
                        (Monomial::new([a, b, d - a - b]), QQ.from_i64(c))
                    }),
                )
            })
    }

    proptest! {
        #[test]
        fn homogenize_dehomogenize_round_trip(g in arb_homogeneous(6)) {
            prop_assume!(!g.is_zero());
            let d = g.total_degree().unwrap();
            let back = g.dehomogenize(2).homogenize(2, d).unwrap();
            // exact when z does not divide every term
            let zpow = g.terms().iter().map(|(m, _)| m.exponent(2)).min().unwrap();
            if zpow == 0 {
                prop_assert_eq!(back, g.clone());
            }
            let f = g.dehomogenize(2);
            let deg = f.total_degree().unwrap_or(0);
            prop_assert_eq!(f.homogenize(2, deg + 2).unwrap().dehomogenize(2), f);
        }

        #[test]
        fn translate_round_trip(f in arb_poly(Vars::XYZ.without(2), 6), a in -5i64..5, b in -5i64..5) {
            let there = f.translate(&[QQ.from_i64(a), QQ.from_i64(b)]).unwrap();
            let back = there.translate(&[QQ.from_i64(-a), QQ.from_i64(-b)]).unwrap();
            prop_assert_eq!(&back, &f);
            let at_origin = there.evaluate(&[QQ.zero(), QQ.zero()]).unwrap();
            prop_assert_eq!(at_origin, f.evaluate(&[QQ.from_i64(a), QQ.from_i64(b)]).unwrap());
        }

        #[test]
        fn euler_identity(f in arb_homogeneous(6)) {
            let deg = f.total_degree().unwrap_or(0) as i64;
            let mut lhs = Polynomial::zero(f.ring());
            for v in 0..NVARS {
                lhs = &lhs + &(&Polynomial::variable(f.ring(), v) * &f.differentiate(v));
            }
            prop_assert_eq!(lhs, f.scale(&QQ.from_i64(deg)));
        }

        #[test]
        fn multiplication_distributes(a in arb_poly(Vars::XYZ, 4), b in arb_poly(Vars::XYZ, 4), c in arb_poly(Vars::XYZ, 4)) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!((&a * &b).div_exact(&b).filter(|_| !b.is_zero()), if b.is_zero() { None } else { Some(a.clone()) });
        }
    }
}

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::IdealBasis;
use crate::polyring::{gcd_all, Field, PolyRing, Polynomial};

/// A reduced plane projective curve `F = 0` of degree `d + 1`, with
/// `char k` not dividing `d + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    polynomial: Polynomial,
    degree: u32,
}

impl Curve {
    pub fn polynomial(&self) -> &Polynomial {
        &self.polynomial
    }

    pub fn field(&self) -> Field {
        self.polynomial.field()
    }

    pub fn ring(&self) -> PolyRing {
        self.polynomial.ring()
    }

    /// `deg F = d + 1`.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// The degree of the partial derivatives.
    pub fn d(&self) -> u32 {
        self.degree - 1
    }

    /// `(F_x, F_y, F_z)`.
    pub fn partials(&self) -> [Polynomial; 3] {
        core::array::from_fn(|v| self.polynomial.differentiate(v))
    }

    /// Checks `x F_x + y F_y + z F_z = (d + 1) F`.
    pub fn euler_identity_holds(&self) -> bool {
        let ring = self.ring();
        let lhs = self
            .partials()
            .iter()
            .enumerate()
            .fold(Polynomial::zero(ring), |acc, (v, p)| {
                &acc + &(&Polynomial::variable(ring, v) * p)
            });
        lhs == self
            .polynomial
            .scale(&self.field().from_i64(self.degree as i64))
    }
}

/// Checks that `f` defines a reduced curve in the projective plane.
pub fn validate_curve(f: &Polynomial) -> Result<Curve> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.ring().vars.len() != 3 {
        return Err(Error::RingMismatch(format!(
            "curves live in k[x,y,z], not k[{}]",
            f.ring().vars
        )));
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let degree = f.total_degree().expect("nonzero");
    if degree == 0 {
        return Err(Error::ConstantPolynomial);
    }
    if let Field::Prime(p) = f.field() {
        if degree.is_multiple_of(p) {
            return Err(Error::BadCharacteristic {
                characteristic: p,
                degree,
            });
        }
    }
    let curve = Curve {
        polynomial: f.clone(),
        degree,
    };
    let partials = curve.partials();
    let g = gcd_all(core::iter::once(f).chain(partials.iter())).expect("nonzero input");
    if !g.is_constant() {
        return Err(Error::NotReduced {
            factor: format!("{}", g.primitive()),
        });
    }
    debug_assert!(curve.euler_identity_holds());
    Ok(curve)
}

/// `J_F = <F_x, F_y, F_z>`.
pub fn jacobian_ideal(curve: &Curve) -> IdealBasis {
    let parts: Vec<Polynomial> = curve.partials().into();
    IdealBasis::new(curve.ring(), parts).expect("partials share the curve's ring")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideal_equal;
    use crate::polyring::parse_polynomial;

    fn curve(s: &str) -> Result<Curve> {
        validate_curve(&parse_polynomial(s, Field::Rationals).unwrap())
    }

    #[test]
    fn validation() {
        assert!(matches!(curve("x^2*y"), Err(Error::NotReduced { .. })));
        assert_eq!(curve("x*y*z").unwrap().d(), 2);
        assert_eq!(curve("x^2 + y"), Err(Error::NotHomogeneous));
        assert_eq!(curve("0"), Err(Error::ZeroPolynomial));
        assert_eq!(curve("5"), Err(Error::ConstantPolynomial));
        let f3 = parse_polynomial("y^2*z - x^3 - x^2*z", Field::Prime(3)).unwrap();
        assert_eq!(
            validate_curve(&f3),
            Err(Error::BadCharacteristic {
                characteristic: 3,
                degree: 3
            })
        );
        assert!(matches!(
            curve("(x + y)^2*z"),
            Err(Error::NotReduced { .. })
        ));
        assert!(curve("x").is_ok());
    }

    #[test]
    fn jacobian() {
        let c = curve("y^2*z - x^3 - x^2*z").unwrap();
        let expect = ["-3*x^2 - 2*x*z", "2*y*z", "y^2 - x^2"];
        let parts = c.partials();
        for (p, e) in parts.iter().zip(expect) {
            assert_eq!(*p, parse_polynomial(e, Field::Rationals).unwrap());
        }
        assert!(c.euler_identity_holds());

        let c = curve("y^2*z^2 - x^4 + 2*x^3*z - x^2*z^2").unwrap();
        let expected = IdealBasis::new(
            c.ring(),
            ["y*z^2", "x^2*z + 2*y^2*z - x*z^2", "x^3 + 3*y^2*z - x*z^2"]
                .iter()
                .map(|s| parse_polynomial(s, Field::Rationals).unwrap()),
        )
        .unwrap();
        assert!(ideal_equal(&jacobian_ideal(&c), &expected).unwrap());
    }
}

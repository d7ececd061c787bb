use alloc::vec::Vec;
use core::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::roots::{coefficients, roots};
use super::Curve;
use crate::error::{Error, Result};
use crate::groebner::{
    elimination_ideal, hilbert_degree, saturation, vector_space_dimension, IdealBasis,
};
use crate::polyring::{gcd_all, Field, FieldElement, PolyRing, Polynomial, Vars, NVARS};

/// A point of the projective plane over the base field, scaled so its last
/// nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    coords: [FieldElement; NVARS],
}

impl ProjectivePoint {
    pub fn new(coords: [FieldElement; NVARS]) -> Result<Self> {
        let last = coords
            .iter()
            .rposition(|c| !c.is_zero())
            .ok_or(Error::ZeroPoint)?;
        let inv = coords[last].inv().expect("nonzero");
        Ok(ProjectivePoint {
            coords: core::array::from_fn(|i| &coords[i] * &inv),
        })
    }

    pub fn from_integers(field: Field, coords: [i64; NVARS]) -> Result<Self> {
        ProjectivePoint::new(coords.map(|c| field.from_i64(c)))
    }

    pub fn coordinates(&self) -> &[FieldElement; NVARS] {
        &self.coords
    }

    pub fn field(&self) -> Field {
        self.coords[0].field()
    }

    /// Index of the coordinate normalized to 1.
    pub fn chart(&self) -> usize {
        self.coords
            .iter()
            .rposition(|c| !c.is_zero())
            .expect("nonzero point")
    }

    /// The remaining coordinates in the chart, ascending by variable.
    pub fn affine(&self) -> Vec<FieldElement> {
        let c = self.chart();
        (0..NVARS)
            .filter(|&i| i != c)
            .map(|i| self.coords[i].clone())
            .collect()
    }

    pub fn lies_on(&self, f: &Polynomial) -> Result<bool> {
        Ok(f.evaluate(&self.coords)?.is_zero())
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}:{}:{})",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

/// The base-field points of a zero-dimensional homogeneous ideal, each with
/// its local multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroLocus {
    /// Ascending by coordinates.
    pub points: Vec<(ProjectivePoint, u64)>,
    /// `deg R/I`.
    pub degree: u64,
    /// Part of the degree carried by points outside the base field.
    pub residual: u64,
}

impl ZeroLocus {
    pub fn local_sum(&self) -> u64 {
        self.points.iter().map(|(_, m)| m).sum()
    }

    pub fn is_complete(&self) -> bool {
        self.residual == 0
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

fn check_plane_ideal(ideal: &IdealBasis) -> Result<()> {
    if ideal.ring().vars != Vars::XYZ {
        return Err(Error::RingMismatch("expected an ideal of k[x,y,z]".into()));
    }
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    Ok(())
}

/// Base-field points of `V(I)` with their local degrees. The plane is
/// scanned in three charts: `z = 1`, then `z = 0, y = 1`, then `(1:0:0)`.
/// `seed` drives root splitting over prime fields.
pub fn projective_points(ideal: &IdealBasis, seed: u64) -> Result<ZeroLocus> {
    check_plane_ideal(ideal)?;
    let degree = hilbert_degree(ideal)?;
    if degree == 0 {
        return Ok(ZeroLocus {
            points: Vec::new(),
            degree,
            residual: 0,
        });
    }
    let field = ideal.ring().field;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = Vec::new();

    // z = 1: eliminate x, then back-substitute each y-root
    let affine = ideal.dehomogenize(2);
    let eliminant = univariate_gcd(elimination_ideal(&affine, Vars::single(1))?.generators())?;
    for b in roots(&coefficients(&eliminant, 1), field, &mut rng) {
        let at_b: Vec<Polynomial> = affine
            .generators()
            .iter()
            .map(|g| specialize(g, 1, &b))
            .collect::<Result<_>>()?;
        for a in roots(&coefficients(&univariate_gcd(&at_b)?, 0), field, &mut rng) {
            found.push(ProjectivePoint::new([a, b.clone(), field.one()])?);
        }
    }

    // z = 0, y = 1
    let line: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| Ok(specialize(g, 2, &field.zero())?.dehomogenize(1)))
        .collect::<Result<_>>()?;
    for a in roots(&coefficients(&univariate_gcd(&line)?, 0), field, &mut rng) {
        found.push(ProjectivePoint::new([a, field.one(), field.zero()])?);
    }

    let corner = ProjectivePoint::from_integers(field, [1, 0, 0])?;
    if ideal
        .generators()
        .iter()
        .map(|g| corner.lies_on(g))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|on| on)
    {
        found.push(corner);
    }

    found.sort();
    found.dedup();
    let mut points = Vec::with_capacity(found.len());
    for p in found {
        let m = local_degree(ideal, &p)?;
        points.push((p, m));
    }
    let local: u64 = points.iter().map(|(_, m)| m).sum();
    Ok(ZeroLocus {
        points,
        degree,
        residual: degree.checked_sub(local).ok_or(Error::NotZeroDimensional)?,
    })
}

/// Gcd of polynomials in a single variable; a zero result means the
/// variety contains a whole line in this chart.
fn univariate_gcd(polys: &[Polynomial]) -> Result<Polynomial> {
    match gcd_all(polys.iter().filter(|p| !p.is_zero())) {
        Some(g) => Ok(g),
        None => Err(Error::NotZeroDimensional),
    }
}

/// Substitutes the constant `value` for `var`, keeping the ring.
fn specialize(f: &Polynomial, var: usize, value: &FieldElement) -> Result<Polynomial> {
    let ring = f.ring();
    let images: [Polynomial; NVARS] = core::array::from_fn(|v| {
        if v == var {
            Polynomial::constant(ring, value.clone())
        } else if ring.vars.contains(v) {
            Polynomial::variable(ring, v)
        } else {
            Polynomial::zero(ring)
        }
    });
    f.substitute(&images)
}

/// Multiplicity of the point `p` in the zero-dimensional scheme `V(I)`:
/// `dim k[u,v]/J - dim k[u,v]/(J : m^∞)` for the affine ideal `J` of the
/// chart of `p`, translated so that `p` is the origin `m`. Zero exactly
/// when `p` is not in `V(I)`.
pub fn local_degree(ideal: &IdealBasis, p: &ProjectivePoint) -> Result<u64> {
    check_plane_ideal(ideal)?;
    let j = ideal.dehomogenize(p.chart()).translate(&p.affine())?;
    local_dimension_at_origin(&j)
}

/// `dim k[u,v]/J - dim k[u,v]/(J : m^∞)` for `m` the ideal of the origin.
pub fn local_dimension_at_origin(j: &IdealBasis) -> Result<u64> {
    let ring = j.ring();
    let total = vector_space_dimension(j)
        .dimension()
        .ok_or(Error::InfiniteLocalDimension)?;
    let origin = IdealBasis::new(
        ring,
        ring.vars.iter().map(|v| Polynomial::variable(ring, v)),
    )?;
    let (away, _) = saturation(j, &origin)?;
    let rest = vector_space_dimension(&away)
        .dimension()
        .ok_or(Error::InfiniteLocalDimension)?;
    Ok((total - rest) as u64)
}

/// The projective change `(x, y, z) ↦ (x, y, a x + b y + c z)` with `c ≠ 0`.
/// Points move forward; polynomials are pulled back through the inverse,
/// so `p ∈ V(f)` iff `change(p) ∈ V(change(f))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateChange {
    a: FieldElement,
    b: FieldElement,
    c: FieldElement,
}

impl CoordinateChange {
    pub fn new(a: FieldElement, b: FieldElement, c: FieldElement) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(CoordinateChange { a, b, c })
    }

    pub fn identity(field: Field) -> Self {
        CoordinateChange {
            a: field.zero(),
            b: field.zero(),
            c: field.one(),
        }
    }

    /// Entries drawn from `-3..=3` by a seeded generator; a zero `c` is
    /// redrawn.
    pub fn random(field: Field, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut draw = || field.from_i64((rng.next_u32() % 7) as i64 - 3);
        let (a, b) = (draw(), draw());
        loop {
            let c = draw();
            if !c.is_zero() {
                return CoordinateChange { a, b, c };
            }
        }
    }

    /// `(a, b, c)`.
    pub fn entries(&self) -> [&FieldElement; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn apply_point(&self, p: &ProjectivePoint) -> ProjectivePoint {
        let [x, y, z] = p.coordinates();
        let w = &(&(&self.a * x) + &(&self.b * y)) + &(&self.c * z);
        ProjectivePoint::new([x.clone(), y.clone(), w]).expect("invertible change")
    }

    /// `f ∘ change⁻¹`, i.e. `z ↦ (z - a x - b y) / c`.
    pub fn apply_polynomial(&self, f: &Polynomial) -> Result<Polynomial> {
        let ring = PolyRing::projective(f.field());
        let f = f.with_ring(ring)?;
        let var = |v| Polynomial::variable(ring, v);
        let inv = self.c.inv().expect("nonzero");
        let z = &(&var(2) - &var(0).scale(&self.a)) - &var(1).scale(&self.b);
        f.substitute(&[var(0), var(1), z.scale(&inv)])
    }

    pub fn apply_ideal(&self, ideal: &IdealBasis) -> Result<IdealBasis> {
        let gens = ideal
            .generators()
            .iter()
            .map(|g| self.apply_polynomial(g))
            .collect::<Result<Vec<_>>>()?;
        IdealBasis::new(PolyRing::projective(ideal.ring().field), gens)
    }

    pub fn apply_curve(&self, curve: &Curve) -> Result<Curve> {
        super::validate_curve(&self.apply_polynomial(curve.polynomial())?)
    }
}

/// Transforms `curve` by [`CoordinateChange::random`].
pub fn random_coordinate_change(curve: &Curve, seed: u64) -> Result<(Curve, CoordinateChange)> {
    let change = CoordinateChange::random(curve.field(), seed);
    Ok((change.apply_curve(curve)?, change))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;
    use alloc::string::ToString;
    use alloc::vec;

    const QQ: Field = Field::Rationals;

    fn ideal(gens: &[&str]) -> IdealBasis {
        IdealBasis::new(
            PolyRing::projective(QQ),
            gens.iter().map(|s| parse_polynomial(s, QQ).unwrap()),
        )
        .unwrap()
    }

    fn pt(c: [i64; 3]) -> ProjectivePoint {
        ProjectivePoint::from_integers(QQ, c).unwrap()
    }

    #[test]
    fn normalization() {
        let p = ProjectivePoint::from_integers(QQ, [2, 4, 0]).unwrap();
        assert_eq!(p.to_string(), "(1/2:1:0)");
        assert_eq!(p.chart(), 1);
        assert_eq!(p, pt([-1, -2, 0]));
        assert_eq!(
            ProjectivePoint::from_integers(QQ, [0, 0, 0]),
            Err(Error::ZeroPoint)
        );
    }

    #[test]
    fn points_and_multiplicities() {
        let z = projective_points(&ideal(&["2*z^2", "y*z", "2*x*z + 3*y^2"]), 0).unwrap();
        assert_eq!(z.points, vec![(pt([1, 0, 0]), 3)]);
        assert_eq!((z.degree, z.residual), (3, 0));

        let z = projective_points(&ideal(&["2*x*y - y*z", "z"]), 0).unwrap();
        assert_eq!(z.points, vec![(pt([0, 1, 0]), 1), (pt([1, 0, 0]), 1)]);

        let b2 = ideal(&["y*z^2", "x^2*z", "x*y*z", "5*y^2*z - 3*x^3"]);
        let z = projective_points(&b2, 0).unwrap();
        assert_eq!(z.points, vec![(pt([0, 0, 1]), 2), (pt([0, 1, 0]), 4)]);
        assert!(z.is_complete());

        // x^2 + y^2 has no rational zeros; (0:0:1) with multiplicity 1 is missed
        let z = projective_points(&ideal(&["x^2 + y^2", "z"]), 0).unwrap();
        assert!(z.points.is_empty());
        assert_eq!(z.residual, 2);

        let z = projective_points(&ideal(&["x", "y", "z"]), 0).unwrap();
        assert_eq!((z.degree, z.points.len()), (0, 0));
        assert_eq!(
            projective_points(&ideal(&["x*y"]), 0),
            Err(Error::NotZeroDimensional)
        );
    }

    #[test]
    fn points_over_a_prime_field() {
        let f = Field::Prime(32003);
        let ideal = |a: &str| {
            IdealBasis::new(
                PolyRing::projective(f),
                [a, "y - 5*z"]
                    .iter()
                    .map(|s| parse_polynomial(s, f).unwrap()),
            )
            .unwrap()
        };
        // 32003 ≡ 3 mod 8, so 2 is not a square
        let z = projective_points(&ideal("x^2 - 2*z^2"), 7).unwrap();
        assert_eq!((z.points.len(), z.residual), (0, 2));
        let z = projective_points(&ideal("x^2 - 9*z^2"), 7).unwrap();
        let at = |x| ProjectivePoint::from_integers(f, [x, 5, 1]).unwrap();
        assert_eq!(z.points, vec![(at(3), 1), (at(-3), 1)]);
    }

    #[test]
    fn local_degrees() {
        let i = ideal(&["2*z^2", "y*z", "2*x*z + 3*y^2"]);
        assert_eq!(local_degree(&i, &pt([1, 0, 0])), Ok(3));
        assert_eq!(local_degree(&i, &pt([0, 0, 1])), Ok(0));
    }

    #[test]
    fn coordinate_change() {
        let one = QQ.one();
        let change = CoordinateChange::new(one.clone(), QQ.zero(), one).unwrap();
        assert_eq!(change.apply_point(&pt([1, 0, 0])), pt([1, 0, 1]));
        let i = ideal(&["2*z^2", "y*z", "2*x*z + 3*y^2"]);
        let moved = change.apply_ideal(&i).unwrap();
        assert_eq!(local_degree(&moved, &pt([1, 0, 1])), Ok(3));
        let id = CoordinateChange::identity(QQ);
        let f = parse_polynomial("y^2*z - x^3", QQ).unwrap();
        assert_eq!(id.apply_polynomial(&f).unwrap(), f);
        for seed in 0..20 {
            let c = CoordinateChange::random(QQ, seed);
            assert!(!c.entries()[2].is_zero());
            assert_eq!(hilbert_degree(&c.apply_ideal(&i).unwrap()), Ok(3));
        }
    }
}

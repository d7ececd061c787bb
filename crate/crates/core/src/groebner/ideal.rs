use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::engine::{self, ModuleOrder, SVec};
use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, PolyRing, Polynomial, Vars};

/// Generators of an ideal. Zero generators are dropped, so an empty list is
/// the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealBasis {
    ring: PolyRing,
    generators: Vec<Polynomial>,
    homogeneous: bool,
}

impl IdealBasis {
    pub fn new<I>(ring: PolyRing, generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = Polynomial>,
    {
        let mut gens = Vec::new();
        for g in generators {
            if g.ring() != ring {
                return Err(Error::RingMismatch(format!(
                    "generator in {} over {}, ideal in {} over {}",
                    g.ring().vars,
                    g.field(),
                    ring.vars,
                    ring.field
                )));
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        let homogeneous = gens.iter().all(Polynomial::is_homogeneous);
        Ok(IdealBasis {
            ring,
            generators: gens,
            homogeneous,
        })
    }

    /// Ideal generated by polynomials of one ring; the list must be
    /// nonempty so the ring is known.
    pub fn from_polynomials(generators: &[Polynomial]) -> Result<Self> {
        let ring = generators.first().ok_or(Error::EmptyInput)?.ring();
        IdealBasis::new(ring, generators.iter().cloned())
    }

    pub fn unit(ring: PolyRing) -> Self {
        IdealBasis {
            ring,
            generators: vec![Polynomial::one(ring)],
            homogeneous: true,
        }
    }

    pub fn ring(&self) -> PolyRing {
        self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Generator-wise dehomogenization.
    pub fn dehomogenize(&self, var: usize) -> IdealBasis {
        let ring = PolyRing::new(self.ring.vars.without(var), self.ring.field);
        IdealBasis::new(ring, self.generators.iter().map(|g| g.dehomogenize(var)))
            .expect("dehomogenized generators share a ring")
    }

    /// Generator-wise translation `v_i -> v_i + a_i`.
    pub fn translate(&self, point: &[crate::polyring::FieldElement]) -> Result<IdealBasis> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.translate(point))
            .collect::<Result<Vec<_>>>()?;
        IdealBasis::new(self.ring, gens)
    }

    pub fn sum(&self, other: &IdealBasis) -> Result<IdealBasis> {
        IdealBasis::new(
            self.ring,
            self.generators
                .iter()
                .chain(other.generators.iter())
                .cloned(),
        )
    }
}

/// A Gröbner basis tagged with its monomial order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: PolyRing,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    internal: Vec<SVec>,
    reduced: bool,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.order == other.order && self.elements == other.elements
    }
}

impl Eq for GroebnerBasis {}

impl GroebnerBasis {
    fn from_internal(ring: PolyRing, order: MonomialOrder, internal: Vec<SVec>) -> Self {
        let elements = internal.iter().map(|v| v.component(0, ring)).collect();
        GroebnerBasis {
            ring,
            order,
            elements,
            internal,
            reduced: true,
        }
    }

    pub fn ring(&self) -> PolyRing {
        self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Elements ascending by leading monomial under the basis order.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Leading monomials under the basis order, in element order.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.internal
            .iter()
            .map(|v| v.lead().expect("nonzero").mon)
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.is_constant())
    }

    pub fn ideal(&self) -> IdealBasis {
        IdealBasis::new(self.ring, self.elements.iter().cloned()).expect("same ring")
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring() != self.ring {
            return Err(Error::RingMismatch(format!(
                "{} is not the ring of the basis {}",
                f.ring().vars,
                self.ring.vars
            )));
        }
        let mo = ModuleOrder::new(self.order);
        let v = SVec::from_polynomial(f, 0, &mo);
        Ok(engine::normal_form(v, &self.internal, &mo).component(0, self.ring))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Checks that every S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        engine::is_groebner(&self.internal, &ModuleOrder::new(self.order))
    }
}

/// Reduced Gröbner basis of `ideal` under `order`.
pub fn buchberger(ideal: &IdealBasis, order: MonomialOrder) -> GroebnerBasis {
    let mo = ModuleOrder::new(order);
    let vecs = ideal
        .generators
        .iter()
        .map(|g| SVec::from_polynomial(g, 0, &mo))
        .collect();
    GroebnerBasis::from_internal(ideal.ring, order, engine::groebner(vecs, mo, vec![0]))
}

/// Grevlex basis, the default for everything except elimination.
pub fn groebner_basis(ideal: &IdealBasis) -> GroebnerBasis {
    buchberger(ideal, MonomialOrder::grevlex())
}

pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    gb.normal_form(f)
}

/// `b ⊆ a`.
pub fn ideal_contains(a: &IdealBasis, b: &IdealBasis) -> Result<bool> {
    let gb = groebner_basis(a);
    for g in b.generators() {
        if !gb.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Equality by two-sided membership.
pub fn ideal_equal(a: &IdealBasis, b: &IdealBasis) -> Result<bool> {
    Ok(ideal_contains(a, b)? && ideal_contains(b, a)?)
}

fn reduced_ideal(ring: PolyRing, gens: Vec<Polynomial>) -> Result<IdealBasis> {
    Ok(groebner_basis(&IdealBasis::new(ring, gens)?).ideal())
}

/// `I ∩ k[keep]`, with the generators left in the ring of `I`.
pub fn elimination_ideal(ideal: &IdealBasis, keep: Vars) -> Result<IdealBasis> {
    let eliminate = Vars::from_indices(
        &ideal
            .ring
            .vars
            .iter()
            .filter(|&v| !keep.contains(v))
            .collect::<Vec<_>>(),
    );
    let gb = buchberger(ideal, MonomialOrder::elimination(eliminate));
    IdealBasis::new(
        ideal.ring,
        gb.elements()
            .iter()
            .filter(|g| g.support().is_subset(keep))
            .cloned(),
    )
}

/// `I ∩ J`, from the module generated by `(g, g)` and `(h, 0)`: the
/// elements with vanishing first component carry the intersection in the
/// second.
pub fn intersection(a: &IdealBasis, b: &IdealBasis) -> Result<IdealBasis> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch(format!(
            "{} vs {}",
            a.ring.vars, b.ring.vars
        )));
    }
    if a.is_zero() || b.is_zero() {
        return IdealBasis::new(a.ring, []);
    }
    let mo = ModuleOrder::new(MonomialOrder::grevlex());
    let mut vecs = Vec::new();
    for g in &a.generators {
        vecs.push(SVec::from_components([(0, g), (1, g)], &mo));
    }
    for h in &b.generators {
        vecs.push(SVec::from_polynomial(h, 0, &mo));
    }
    let gb = engine::groebner(vecs, mo, vec![0, 0]);
    IdealBasis::new(
        a.ring,
        gb.iter()
            .filter(|v| v.lead().expect("nonzero").pos == 1)
            .map(|v| v.component(1, a.ring)),
    )
}

/// `I : f`.
pub fn quotient_by(ideal: &IdealBasis, f: &Polynomial) -> Result<IdealBasis> {
    if f.is_zero() {
        return Err(Error::ZeroQuotient);
    }
    if f.is_constant() {
        return reduced_ideal(ideal.ring, ideal.generators.clone());
    }
    let principal = IdealBasis::new(ideal.ring, [f.clone()])?;
    let meet = intersection(ideal, &principal)?;
    let gens = meet
        .generators
        .iter()
        .map(|g| g.div_exact(f).expect("intersection lies in <f>"))
        .collect();
    reduced_ideal(ideal.ring, gens)
}

/// `I : J`, the intersection of `I : h` over the generators of `J`.
pub fn ideal_quotient(ideal: &IdealBasis, by: &IdealBasis) -> Result<IdealBasis> {
    let mut gens = by.generators.iter();
    let first = gens.next().ok_or(Error::ZeroQuotient)?;
    let mut acc = quotient_by(ideal, first)?;
    for h in gens {
        acc = intersection(&acc, &quotient_by(ideal, h)?)?;
    }
    reduced_ideal(ideal.ring, acc.generators)
}

pub const SATURATION_CAP: u32 = 64;

/// `(I : J^∞)` together with the least `s` such that `I : J^s = I : J^(s+1)`.
pub fn saturation(ideal: &IdealBasis, by: &IdealBasis) -> Result<(IdealBasis, u32)> {
    saturation_with_cap(ideal, by, SATURATION_CAP)
}

pub fn saturation_with_cap(
    ideal: &IdealBasis,
    by: &IdealBasis,
    cap: u32,
) -> Result<(IdealBasis, u32)> {
    if by.is_zero() {
        return Err(Error::ZeroQuotient);
    }
    let mut current = reduced_ideal(ideal.ring, ideal.generators.clone())?;
    for s in 0..cap {
        let next = ideal_quotient(&current, by)?;
        // both sides are reduced grevlex bases, so equality is structural
        if next.generators == current.generators {
            return Ok((current, s));
        }
        current = next;
    }
    Err(Error::SaturationDiverged { cap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_polynomial, Field};

    const QQ: Field = Field::Rationals;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, QQ).unwrap()
    }

    fn ideal(gens: &[&str]) -> IdealBasis {
        IdealBasis::new(PolyRing::projective(QQ), gens.iter().map(|s| p(s))).unwrap()
    }

    fn strs(gb: &GroebnerBasis) -> Vec<alloc::string::String> {
        gb.elements().iter().map(|g| format!("{g}")).collect()
    }

    #[test]
    fn already_reduced() {
        let gb = groebner_basis(&ideal(&["x", "y"]));
        assert_eq!(strs(&gb), ["y", "x"]);
        assert!(gb.is_groebner());
    }

    #[test]
    fn twisted_cubic_lex() {
        let order = MonomialOrder::lex_with([2, 1, 0]);
        let gb = buchberger(&ideal(&["y - x^2", "z - x^3"]), order);
        assert!(gb.is_groebner());
        assert!(gb.contains(&p("y - x^2")).unwrap());
        assert!(gb.contains(&p("z - x^3")).unwrap());
        // hand S-polynomial check: the pair has coprime leads z and y
        assert_eq!(gb.elements().len(), 2);
    }

    #[test]
    fn redundant_generator_collapses() {
        for order in [MonomialOrder::grevlex(), MonomialOrder::lex()] {
            let gb = buchberger(&ideal(&["x^2 - 1", "x - 1"]), order);
            assert_eq!(gb.elements(), &[p("x - 1")]);
        }
    }

    #[test]
    fn normal_forms() {
        let gb = groebner_basis(&ideal(&["x"]));
        assert!(gb.normal_form(&p("x^2")).unwrap().is_zero());
        assert_eq!(gb.normal_form(&p("x^2 + y")).unwrap(), p("y"));
    }

    #[test]
    fn elimination() {
        let r = elimination_ideal(&ideal(&["y - x^2", "y"]), Vars::single(0)).unwrap();
        assert!(ideal_equal(&r, &ideal(&["x^2"])).unwrap());
        let r = elimination_ideal(&ideal(&["x - 1", "y - 2"]), Vars::single(1).with(2)).unwrap();
        assert!(ideal_equal(&r, &ideal(&["y - 2"])).unwrap());
        let yz = PolyRing::new(Vars::XYZ.without(0), QQ);
        let z = IdealBasis::new(yz, [p("z").with_ring(yz).unwrap()]).unwrap();
        assert!(elimination_ideal(&z, Vars::single(1)).unwrap().is_zero());
    }

    #[test]
    fn quotients() {
        let i = ideal(&["x^2", "x*y"]);
        let q = quotient_by(&i, &p("x")).unwrap();
        assert!(ideal_equal(&q, &ideal(&["x", "y"])).unwrap());
        assert!(ideal_equal(&quotient_by(&i, &p("1")).unwrap(), &i).unwrap());
        let q = quotient_by(&ideal(&["x"]), &p("y")).unwrap();
        assert!(ideal_equal(&q, &ideal(&["x"])).unwrap());
        assert_eq!(quotient_by(&i, &p("0")), Err(Error::ZeroQuotient));
    }

    #[test]
    fn intersections() {
        let r = intersection(&ideal(&["x"]), &ideal(&["y"])).unwrap();
        assert!(ideal_equal(&r, &ideal(&["x*y"])).unwrap());
        let r = intersection(&ideal(&["x^2", "y"]), &ideal(&["x", "y^2"])).unwrap();
        assert!(ideal_equal(&r, &ideal(&["x^2", "x*y", "y^2"])).unwrap());
    }

    #[test]
    fn saturations() {
        let m = ideal(&["x", "y"]);
        let (s, k) = saturation(&ideal(&["x^2", "x*y"]), &m).unwrap();
        assert!(ideal_equal(&s, &ideal(&["x"])).unwrap());
        assert_eq!(k, 1);
        let (s, k) = saturation(&ideal(&["x"]), &ideal(&["y"])).unwrap();
        assert!(ideal_equal(&s, &ideal(&["x"])).unwrap());
        assert_eq!(k, 0);
    }
}

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::engine::{self, Engine, ModuleOrder, SVec, Term};
use crate::error::{Error, Result};
use crate::polyring::{
    gcd_all, Field, FieldElement, Monomial, MonomialOrder, PolyRing, Polynomial,
};

/// An element of the graded free module `R(-s_1) ⊕ ... ⊕ R(-s_m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleVector {
    ring: PolyRing,
    components: Vec<Polynomial>,
    shifts: Vec<i32>,
}

impl ModuleVector {
    pub fn new(components: Vec<Polynomial>, shifts: Vec<i32>) -> Result<Self> {
        let ring = components.first().ok_or(Error::EmptyInput)?.ring();
        if shifts.len() != components.len() {
            return Err(Error::ArityMismatch {
                expected: components.len(),
                got: shifts.len(),
            });
        }
        if let Some(c) = components.iter().find(|c| c.ring() != ring) {
            return Err(Error::RingMismatch(format!(
                "component in {} vs {}",
                c.ring().vars,
                ring.vars
            )));
        }
        Ok(ModuleVector {
            ring,
            components,
            shifts,
        })
    }

    /// A vector of `R^m` with all shifts zero.
    pub fn unshifted(components: Vec<Polynomial>) -> Result<Self> {
        let n = components.len();
        ModuleVector::new(components, vec![0; n])
    }

    pub fn zero(ring: PolyRing, shifts: Vec<i32>) -> Self {
        ModuleVector {
            ring,
            components: shifts.iter().map(|_| Polynomial::zero(ring)).collect(),
            shifts,
        }
    }

    /// The `i`-th standard basis vector.
    pub fn basis_vector(ring: PolyRing, shifts: Vec<i32>, i: usize) -> Self {
        let mut v = ModuleVector::zero(ring, shifts);
        v.components[i] = Polynomial::one(ring);
        v
    }

    pub fn ring(&self) -> PolyRing {
        self.ring
    }

    pub fn field(&self) -> Field {
        self.ring.field
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn shifts(&self) -> &[i32] {
        &self.shifts
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    /// The common shifted degree of all terms, `None` for the zero vector or
    /// an inhomogeneous one.
    pub fn degree(&self) -> Option<i32> {
        let mut deg = None;
        for (c, s) in self.components.iter().zip(&self.shifts) {
            for (m, _) in c.terms() {
                let d = m.total_degree() as i32 + s;
                match deg {
                    None => deg = Some(d),
                    Some(e) if e != d => return None,
                    _ => {}
                }
            }
        }
        deg
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// Largest shifted degree of a term.
    fn sugar(&self) -> i32 {
        self.components
            .iter()
            .zip(&self.shifts)
            .filter_map(|(c, s)| c.total_degree().map(|d| d as i32 + s))
            .max()
            .unwrap_or(0)
    }

    /// `Σ v_i g_i`.
    pub fn dot(&self, gens: &[Polynomial]) -> Result<Polynomial> {
        if gens.len() != self.rank() {
            return Err(Error::ArityMismatch {
                expected: self.rank(),
                got: gens.len(),
            });
        }
        let mut acc = Polynomial::zero(self.ring);
        for (c, g) in self.components.iter().zip(gens) {
            acc = acc.checked_add(&c.checked_mul(g)?)?;
        }
        Ok(acc)
    }

    /// `Σ v_i w_i` for vectors `w_i` of a common free module.
    pub fn combine(&self, vectors: &[ModuleVector]) -> Result<ModuleVector> {
        let first = vectors.first().ok_or(Error::EmptyInput)?;
        if vectors.len() != self.rank() {
            return Err(Error::ArityMismatch {
                expected: self.rank(),
                got: vectors.len(),
            });
        }
        let mut acc = ModuleVector::zero(self.ring, first.shifts.clone());
        for (c, w) in self.components.iter().zip(vectors) {
            acc = acc.checked_add(&w.scale(c)?)?;
        }
        Ok(acc)
    }

    pub fn scale(&self, f: &Polynomial) -> Result<ModuleVector> {
        Ok(ModuleVector {
            ring: self.ring,
            components: self
                .components
                .iter()
                .map(|c| c.checked_mul(f))
                .collect::<Result<_>>()?,
            shifts: self.shifts.clone(),
        })
    }

    pub fn checked_add(&self, other: &ModuleVector) -> Result<ModuleVector> {
        self.check_same_module(other)?;
        Ok(ModuleVector {
            ring: self.ring,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
            shifts: self.shifts.clone(),
        })
    }

    pub fn checked_sub(&self, other: &ModuleVector) -> Result<ModuleVector> {
        let minus = other.scale(&Polynomial::constant(self.ring, -self.ring.field.one()))?;
        self.checked_add(&minus)
    }

    fn check_same_module(&self, other: &ModuleVector) -> Result<()> {
        if self.ring != other.ring || self.shifts != other.shifts {
            return Err(Error::RingMismatch(format!(
                "free modules differ: shifts {:?} vs {:?}",
                self.shifts, other.shifts
            )));
        }
        Ok(())
    }

    /// Drops the `i`-th coordinate.
    pub fn without_component(&self, i: usize) -> ModuleVector {
        let mut v = self.clone();
        v.components.remove(i);
        v.shifts.remove(i);
        v
    }

    pub fn with_shifts(&self, shifts: Vec<i32>) -> Result<ModuleVector> {
        ModuleVector::new(self.components.clone(), shifts)
    }

    /// Monic gcd of the components (zero for the zero vector).
    pub fn content(&self) -> Polynomial {
        gcd_all(self.components.iter().filter(|c| !c.is_zero()))
            .unwrap_or_else(|| Polynomial::zero(self.ring))
    }

    pub fn div_exact(&self, f: &Polynomial) -> Option<ModuleVector> {
        let components = self
            .components
            .iter()
            .map(|c| {
                if c.is_zero() {
                    Some(c.clone())
                } else {
                    c.div_exact(f)
                }
            })
            .collect::<Option<Vec<_>>>()?;
        Some(ModuleVector {
            ring: self.ring,
            components,
            shifts: self.shifts.clone(),
        })
    }

    /// Divided by its content, then scaled so that over the rationals all
    /// coefficients are coprime integers, and the leading coefficient under
    /// the default module order is positive (one over a prime field).
    pub fn normalized(&self) -> ModuleVector {
        if self.is_zero() {
            return self.clone();
        }
        let v = self.div_exact(&self.content()).expect("content divides");
        let lead = v.lead_term(&ModuleOrder::new(MonomialOrder::grevlex()));
        let scale = match self.ring.field {
            Field::Prime(_) => lead.coef.inv().expect("nonzero"),
            Field::Rationals => {
                let s = integer_scale(&v);
                if (&lead.coef * &s).is_negative_repr() {
                    -s
                } else {
                    s
                }
            }
        };
        v.scale(&Polynomial::constant(self.ring, scale))
            .expect("same ring")
    }

    fn lead_term(&self, order: &ModuleOrder) -> Term {
        self.to_svec(order).lead().expect("nonzero").clone()
    }

    pub(crate) fn to_svec(&self, order: &ModuleOrder) -> SVec {
        SVec::from_components(
            self.components
                .iter()
                .enumerate()
                .map(|(i, c)| (i as u32, c)),
            order,
        )
    }

    pub(crate) fn from_svec(ring: PolyRing, shifts: Vec<i32>, v: &SVec, offset: u32) -> Self {
        let components = (0..shifts.len() as u32)
            .map(|i| v.component(i + offset, ring))
            .collect();
        ModuleVector {
            ring,
            components,
            shifts,
        }
    }
}

/// Rational making all coefficients coprime integers (positive).
fn integer_scale(v: &ModuleVector) -> FieldElement {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_rational::BigRational;
    use num_traits::{One, Zero};
    let mut den = BigInt::one();
    let mut num = BigInt::zero();
    for c in &v.components {
        for (_, q) in c.terms() {
            den = den.lcm(q.as_rational().expect("rational").denom());
        }
    }
    for c in &v.components {
        for (_, q) in c.terms() {
            let q = q.as_rational().expect("rational");
            num = num.gcd(&(q.numer() * (&den / q.denom())));
        }
    }
    FieldElement::Rational(BigRational::new(den, num))
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn common_module(vectors: &[ModuleVector]) -> Result<(PolyRing, Vec<i32>)> {
    let first = vectors.first().ok_or(Error::EmptyInput)?;
    for v in vectors {
        first.check_same_module(v)?;
    }
    Ok((first.ring, first.shifts.clone()))
}

/// A Gröbner basis of a submodule, position over term.
#[derive(Clone, Debug)]
pub struct ModuleGroebnerBasis {
    ring: PolyRing,
    shifts: Vec<i32>,
    order: MonomialOrder,
    elements: Vec<ModuleVector>,
    internal: Vec<SVec>,
}

impl ModuleGroebnerBasis {
    pub fn elements(&self) -> &[ModuleVector] {
        &self.elements
    }

    pub fn shifts(&self) -> &[i32] {
        &self.shifts
    }

    pub fn normal_form(&self, v: &ModuleVector) -> Result<ModuleVector> {
        if v.ring != self.ring || v.shifts.len() != self.shifts.len() {
            return Err(Error::RingMismatch("vector outside the free module".into()));
        }
        let mo = ModuleOrder::new(self.order);
        let r = engine::normal_form(v.to_svec(&mo), &self.internal, &mo);
        Ok(ModuleVector::from_svec(self.ring, v.shifts.clone(), &r, 0))
    }

    pub fn contains(&self, v: &ModuleVector) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    pub fn is_groebner(&self) -> bool {
        engine::is_groebner(&self.internal, &ModuleOrder::new(self.order))
    }
}

/// Reduced Gröbner basis of the submodule generated by `vectors`.
pub fn module_buchberger(
    vectors: &[ModuleVector],
    order: MonomialOrder,
) -> Result<ModuleGroebnerBasis> {
    let (ring, shifts) = common_module(vectors)?;
    let mo = ModuleOrder::new(order);
    let internal = engine::groebner(
        vectors.iter().map(|v| v.to_svec(&mo)).collect(),
        mo,
        shifts.clone(),
    );
    let elements = internal
        .iter()
        .map(|v| ModuleVector::from_svec(ring, shifts.clone(), v, 0))
        .collect();
    Ok(ModuleGroebnerBasis {
        ring,
        shifts,
        order,
        elements,
        internal,
    })
}

/// Whether the submodules generated by `a` and `b` coincide.
pub fn module_equal(a: &[ModuleVector], b: &[ModuleVector]) -> Result<bool> {
    let ga = module_buchberger(a, MonomialOrder::grevlex())?;
    let gb = module_buchberger(b, MonomialOrder::grevlex())?;
    for v in b {
        if !ga.contains(v)? {
            return Ok(false);
        }
    }
    for v in a {
        if !gb.contains(v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Syzygies of `gens` as vectors of `R^k` with the given shifts, from a
/// Gröbner basis of the graph `{(Σ a_i g_i, a)}`: position over term makes
/// the elements with vanishing first block a basis of the syzygy module.
fn syzygies_with_shifts(gens: &[ModuleVector], tracking: Vec<i32>) -> Result<Vec<ModuleVector>> {
    let (ring, shifts) = common_module(gens)?;
    let m = shifts.len() as u32;
    let mo = ModuleOrder::new(MonomialOrder::grevlex());
    let one = ring.field.one();
    let vecs = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut terms = g.to_svec(&mo).terms;
            terms.push(Term {
                pos: m + i as u32,
                mon: Monomial::ONE,
                coef: one.clone(),
            });
            SVec::from_terms(&mo, terms)
        })
        .collect();
    let mut all = shifts;
    all.extend_from_slice(&tracking);
    let gb = engine::groebner(vecs, mo, all);
    Ok(gb
        .iter()
        .filter(|v| v.lead().expect("nonzero").pos >= m)
        .map(|v| ModuleVector::from_svec(ring, tracking.clone(), v, m))
        .collect())
}

/// Generators of the first syzygy module of `gens`. The output lives in
/// `R^k` shifted by the generator degrees, so syzygies of homogeneous
/// generators are homogeneous.
pub fn syzygy_basis(gens: &[ModuleVector]) -> Result<Vec<ModuleVector>> {
    let tracking = gens.iter().map(ModuleVector::sugar).collect();
    syzygies_with_shifts(gens, tracking)
}

/// [`syzygy_basis`] for polynomials.
pub fn polynomial_syzygies(gens: &[Polynomial]) -> Result<Vec<ModuleVector>> {
    let vs = gens
        .iter()
        .map(|g| ModuleVector::unshifted(vec![g.clone()]))
        .collect::<Result<Vec<_>>>()?;
    syzygy_basis(&vs)
}

fn lead_cmp(a: &ModuleVector, b: &ModuleVector, mo: &ModuleOrder) -> Ordering {
    let (la, lb) = (a.lead_term(mo), b.lead_term(mo));
    mo.cmp(la.pos, &la.mon, lb.pos, &lb.mon)
}

/// A minimal homogeneous generating set, ascending by degree and then by
/// leading term. A generator is kept when it is not in the submodule
/// spanned by the ones kept before it; a degree-truncated Gröbner basis of
/// the kept set decides this.
pub fn minimalize_generators(gens: &[ModuleVector]) -> Result<Vec<ModuleVector>> {
    let mo = ModuleOrder::new(MonomialOrder::grevlex());
    minimalize_by(gens, |a, b| lead_cmp(a, b, &mo))
}

/// Like [`minimalize_generators`], but generators of equal degree are
/// considered in the order given, so a preferred generator listed first
/// is always kept.
pub fn minimalize_in_order(gens: &[ModuleVector]) -> Result<Vec<ModuleVector>> {
    minimalize_by(gens, |_, _| Ordering::Equal)
}

fn minimalize_by<F>(gens: &[ModuleVector], tie: F) -> Result<Vec<ModuleVector>>
where
    F: Fn(&ModuleVector, &ModuleVector) -> Ordering,
{
    let (_, shifts) = common_module(gens)?;
    let mo = ModuleOrder::new(MonomialOrder::grevlex());
    let mut sorted: Vec<(i32, &ModuleVector)> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        sorted.push((g.degree().ok_or(Error::NotHomogeneousVector)?, g));
    }
    sorted.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| tie(a.1, b.1)));
    let mut engine = Engine::new(mo, shifts);
    let mut kept = Vec::new();
    for (deg, g) in sorted {
        engine.run(Some(deg));
        let v = g.to_svec(&mo);
        if !engine.reduce(v.clone()).is_zero() {
            kept.push(g.clone());
            engine.push_generator(v);
        }
    }
    Ok(kept)
}

/// Relations among the generators of a module: each row `r` satisfies
/// `Σ r_j gen_j = 0`, and `column_shifts[j]` is the degree of `gen_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationMatrix {
    pub ring: PolyRing,
    pub column_shifts: Vec<i32>,
    pub rows: Vec<ModuleVector>,
}

impl PresentationMatrix {
    pub fn ncols(&self) -> usize {
        self.column_shifts.len()
    }

    /// `C v`, one entry per row.
    pub fn apply(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        self.rows.iter().map(|r| r.dot(v)).collect()
    }
}

fn minimal_if_graded(rows: Vec<ModuleVector>) -> Result<Vec<ModuleVector>> {
    if rows.is_empty() || !rows.iter().all(ModuleVector::is_homogeneous) {
        return Ok(rows);
    }
    minimalize_generators(&rows)
}

pub fn presentation(gens: &[ModuleVector]) -> Result<PresentationMatrix> {
    let (ring, _) = common_module(gens)?;
    let syz = syzygy_basis(gens)?;
    let column_shifts = gens.iter().map(ModuleVector::sugar).collect();
    Ok(PresentationMatrix {
        ring,
        column_shifts,
        rows: minimal_if_graded(syz)?,
    })
}

/// Presentation of the quotient of the module generated by `gens` by the
/// submodule generated by `gens[chosen]`, in terms of the images of the
/// remaining generators.
pub fn quotient_presentation(gens: &[ModuleVector], chosen: usize) -> Result<PresentationMatrix> {
    let (ring, _) = common_module(gens)?;
    if chosen >= gens.len() {
        return Err(Error::ArityMismatch {
            expected: gens.len(),
            got: chosen + 1,
        });
    }
    let syz = syzygy_basis(gens)?;
    let rows: Vec<ModuleVector> = syz
        .iter()
        .map(|r| r.without_component(chosen))
        .filter(|r| !r.is_zero())
        .collect();
    let mut column_shifts: Vec<i32> = gens.iter().map(ModuleVector::sugar).collect();
    column_shifts.remove(chosen);
    let rows = if rows.is_empty() {
        rows
    } else {
        minimal_if_graded(rows)?
    };
    Ok(PresentationMatrix {
        ring,
        column_shifts,
        rows,
    })
}

/// Generators of `{v : C v = 0}`, the syzygies of the columns of `C`.
/// Kernel vectors carry shifts `-column_shifts`, so the degree of a
/// homogeneous `v` is the common offset `deg v_j - column_shifts[j]`.
pub fn kernel_of_presentation(c: &PresentationMatrix) -> Result<Vec<ModuleVector>> {
    let shifts: Vec<i32> = c.column_shifts.iter().map(|s| -s).collect();
    if c.rows.is_empty() {
        return Ok((0..c.ncols())
            .map(|j| ModuleVector::basis_vector(c.ring, shifts.clone(), j))
            .collect());
    }
    let row_shifts: Vec<i32> = c.rows.iter().map(|r| -r.sugar()).collect();
    let columns = (0..c.ncols())
        .map(|j| {
            ModuleVector::new(
                c.rows.iter().map(|r| r.component(j).clone()).collect(),
                row_shifts.clone(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let kernel = syzygies_with_shifts(&columns, shifts)?;
    minimal_if_graded(kernel)
}

//! Brute-force verifiers built on exact linear algebra over monomial bases.
//! Nothing here touches the Gröbner engine, so agreement between the two is
//! evidence that both are right.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{IdealBasis, ModuleVector};
use crate::polyring::{monomials_of_degree, Field, FieldElement, Monomial, PolyRing, Polynomial};

/// Exact rank of a dense matrix. Rows are inserted one at a time into a
/// sparse echelon form: each row is reduced against the pivot rows by
/// fraction-free steps `p·r - c·pivot` and then divided by the gcd of its
/// entries, so all arithmetic stays in the integers. Over a prime field
/// the same loop runs on residues.
pub fn rank(field: Field, rows: &[Vec<FieldElement>]) -> usize {
    match field {
        Field::Rationals => {
            let mut echelon = BTreeMap::new();
            for r in rows {
                insert_integer_row(&mut echelon, sparse(&integer_row(r)));
            }
            echelon.len()
        }
        Field::Prime(p) => {
            let p = p as u64;
            let mut echelon = BTreeMap::new();
            for r in rows {
                let residues: Vec<u64> = r
                    .iter()
                    .map(|c| match c {
                        FieldElement::Prime { residue, .. } => *residue as u64,
                        FieldElement::Rational(_) => panic!("mixed fields"),
                    })
                    .collect();
                insert_prime_row(&mut echelon, sparse(&residues), p);
            }
            echelon.len()
        }
    }
}

type SparseRow<T> = Vec<(usize, T)>;

fn sparse<T: Clone + Zero>(row: &[T]) -> SparseRow<T> {
    row.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| (j, c.clone()))
        .collect()
}

/// The row scaled by the lcm of its denominators.
fn integer_row(row: &[FieldElement]) -> Vec<BigInt> {
    let q = |c: &FieldElement| c.as_rational().expect("rational entries").clone();
    let den = row
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(q(c).denom()));
    row.iter()
        .map(|c| {
            let c = q(c);
            c.numer() * (&den / c.denom())
        })
        .collect()
}

/// Entrywise `f(x_j, y_j)` over the union of the supports.
fn combine<T, F>(x: &SparseRow<T>, y: &SparseRow<T>, f: F) -> SparseRow<T>
where
    T: Clone + Zero,
    F: Fn(Option<&T>, Option<&T>) -> T,
{
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(x.len() + y.len());
    while i < x.len() || j < y.len() {
        let (col, v) = match (x.get(i), y.get(j)) {
            (Some(a), Some(b)) if a.0 == b.0 => {
                i += 1;
                j += 1;
                (a.0, f(Some(&a.1), Some(&b.1)))
            }
            (Some(a), Some(b)) if a.0 > b.0 => {
                j += 1;
                (b.0, f(None, Some(&b.1)))
            }
            (Some(a), _) => {
                i += 1;
                (a.0, f(Some(&a.1), None))
            }
            (None, Some(b)) => {
                j += 1;
                (b.0, f(None, Some(&b.1)))
            }
            (None, None) => unreachable!(),
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    out
}

fn make_primitive(row: &mut SparseRow<BigInt>) {
    let g = row.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for (_, c) in row.iter_mut() {
            *c = &*c / &g;
        }
    }
}

fn insert_integer_row(
    echelon: &mut BTreeMap<usize, SparseRow<BigInt>>,
    mut row: SparseRow<BigInt>,
) {
    let zero = BigInt::zero();
    while let Some((lead_col, lead)) = row.first().cloned() {
        let Some(pivot) = echelon.get(&lead_col) else {
            make_primitive(&mut row);
            echelon.insert(lead_col, row);
            return;
        };
        let p = &pivot[0].1;
        row = combine(&row, pivot, |a, b| {
            p * a.unwrap_or(&zero) - &lead * b.unwrap_or(&zero)
        });
        make_primitive(&mut row);
    }
}

fn insert_prime_row(
    echelon: &mut BTreeMap<usize, SparseRow<u64>>,
    mut row: SparseRow<u64>,
    p: u64,
) {
    while let Some(&(lead_col, lead)) = row.first() {
        let Some(pivot) = echelon.get(&lead_col) else {
            let inv = pow_mod(lead, p - 2, p);
            for (_, c) in row.iter_mut() {
                *c = *c * inv % p;
            }
            echelon.insert(lead_col, row);
            return;
        };
        // pivot rows are monic
        row = combine(&row, pivot, |a, b| {
            (a.copied().unwrap_or(0) + p - lead * b.copied().unwrap_or(0) % p) % p
        });
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Coefficient vectors of all `monomial * generator` products of degree
/// `degree`, over the monomials of that degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSliceMatrix {
    pub degree: u32,
    pub columns: Vec<Monomial>,
    pub rows: Vec<Vec<FieldElement>>,
}

impl DegreeSliceMatrix {
    pub fn new(ideal: &IdealBasis, degree: u32) -> Result<Self> {
        if !ideal.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let ring = ideal.ring();
        let columns = monomials_of_degree(ring.vars, degree);
        let mut rows = Vec::new();
        for g in ideal.generators() {
            let dg = g.total_degree().expect("nonzero generator");
            if dg > degree {
                continue;
            }
            for m in monomials_of_degree(ring.vars, degree - dg) {
                rows.push(dense(&g.mul_term(&m, &ring.field.one()), &columns, ring));
            }
        }
        Ok(DegreeSliceMatrix {
            degree,
            columns,
            rows,
        })
    }

    pub fn rank(&self, field: Field) -> usize {
        rank(field, &self.rows)
    }
}

fn dense(f: &Polynomial, columns: &[Monomial], ring: PolyRing) -> Vec<FieldElement> {
    debug_assert_eq!(f.ring(), ring);
    columns.iter().map(|m| f.coefficient(m)).collect()
}

/// `dim_k (R/I)_n` for a homogeneous ideal.
pub fn graded_dim_bruteforce(ideal: &IdealBasis, n: u32) -> Result<usize> {
    let slice = DegreeSliceMatrix::new(ideal, n)?;
    Ok(slice.columns.len() - slice.rank(ideal.ring().field))
}

/// Largest degree probed by [`degree_bruteforce`].
pub const DEGREE_CAP: u32 = 40;

/// The eventual value of `n ↦ dim_k (R/I)_n`: the first value constant on
/// `window` consecutive degrees, starting at twice the largest generator
/// degree plus two.
pub fn degree_bruteforce(ideal: &IdealBasis, window: u32) -> Result<u64> {
    let window = window.max(1);
    let top = ideal
        .generators()
        .iter()
        .filter_map(Polynomial::total_degree)
        .max()
        .unwrap_or(0);
    let mut n = 2 * top + 2;
    let mut values: Vec<usize> = Vec::new();
    while n <= DEGREE_CAP {
        values.push(graded_dim_bruteforce(ideal, n)?);
        let w = window as usize;
        if values.len() >= w
            && values[values.len() - w..]
                .iter()
                .all(|&v| v == values[values.len() - 1])
        {
            return Ok(values[values.len() - 1] as u64);
        }
        n += 1;
    }
    Err(Error::NotStabilized(format!(
        "graded dimensions {values:?} not constant on {window} degrees up to {DEGREE_CAP}"
    )))
}

/// `dim_k k[u,v]/(J + m^D)` for the ideal `m` of the origin.
pub fn truncated_dimension(j: &IdealBasis, order: u32) -> usize {
    let ring = j.ring();
    let columns: Vec<Monomial> = (0..order)
        .flat_map(|k| monomials_of_degree(ring.vars, k))
        .collect();
    let mut rows = Vec::new();
    for g in j.generators() {
        for m in &columns {
            let p = g.mul_term(m, &ring.field.one());
            rows.push(dense(&p, &columns, ring));
        }
    }
    columns.len() - rank(ring.field, &rows)
}

/// Local multiplicity of the origin in `V(J)` for an affine ideal: the
/// value of [`truncated_dimension`] once it agrees for `D` and `D + 1`.
pub fn local_dim_bruteforce(j: &IdealBasis, cap: u32) -> Result<u64> {
    let mut prev = truncated_dimension(j, 1);
    for order in 2..=cap {
        let next = truncated_dimension(j, order);
        if next == prev {
            return Ok(next as u64);
        }
        prev = next;
    }
    Err(Error::NotStabilized(format!(
        "local dimension still growing at order {cap}"
    )))
}

/// `Σ v_i g_i = 0` by direct expansion.
pub fn syzygy_verify(v: &ModuleVector, gens: &[Polynomial]) -> bool {
    if v.rank() != gens.len() {
        return false;
    }
    let mut acc = Polynomial::zero(v.ring());
    for (a, g) in v.components().iter().zip(gens) {
        match a.checked_mul(g).and_then(|t| acc.checked_add(&t)) {
            Ok(s) => acc = s,
            Err(_) => return false,
        }
    }
    acc.is_zero()
}

/// Oracle graded dimensions for `n = 0..=max`, convenient for comparisons.
pub fn graded_dims(ideal: &IdealBasis, max: u32) -> Result<Vec<usize>> {
    (0..=max).map(|n| graded_dim_bruteforce(ideal, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_polynomial, Vars};
    use alloc::vec;

    const QQ: Field = Field::Rationals;

    fn ideal(ring: PolyRing, gens: &[&str]) -> IdealBasis {
        IdealBasis::new(
            ring,
            gens.iter().map(|s| {
                parse_polynomial(s, ring.field)
                    .unwrap()
                    .with_ring(ring)
                    .unwrap()
            }),
        )
        .unwrap()
    }

    fn xyz(gens: &[&str]) -> IdealBasis {
        ideal(PolyRing::projective(QQ), gens)
    }

    #[test]
    fn graded_dims() {
        assert_eq!(graded_dim_bruteforce(&xyz(&["x", "y"]), 4), Ok(1));
        assert_eq!(graded_dim_bruteforce(&xyz(&["2*x*y - y*z", "z"]), 3), Ok(2));
        assert_eq!(graded_dim_bruteforce(&xyz(&[]), 2), Ok(6));
    }

    #[test]
    fn degrees() {
        assert_eq!(
            degree_bruteforce(&xyz(&["2*z^2", "y*z", "2*x*z + 3*y^2"]), 3),
            Ok(3)
        );
        assert_eq!(degree_bruteforce(&xyz(&["x", "y"]), 3), Ok(1));
        assert!(matches!(
            degree_bruteforce(&xyz(&["x"]), 3),
            Err(Error::NotStabilized(_))
        ));
    }

    #[test]
    fn local_dims() {
        let yz = PolyRing::new(Vars::XYZ.without(0), QQ);
        assert_eq!(
            local_dim_bruteforce(&ideal(yz, &["z^2", "y*z", "2*z + 3*y^2"]), 30),
            Ok(3)
        );
        assert_eq!(local_dim_bruteforce(&ideal(yz, &["y", "z"]), 30), Ok(1));
        let xy = PolyRing::new(Vars::XYZ.without(2), QQ);
        assert!(matches!(
            local_dim_bruteforce(&ideal(xy, &["x + y"]), 30),
            Err(Error::NotStabilized(_))
        ));
        assert_eq!(local_dim_bruteforce(&ideal(xy, &["x - 1", "y"]), 30), Ok(0));
    }

    #[test]
    fn syzygies() {
        let gens: Vec<Polynomial> = ["x", "y", "z"]
            .iter()
            .map(|s| parse_polynomial(s, QQ).unwrap())
            .collect();
        let v = |p: [&str; 3]| {
            ModuleVector::unshifted(p.iter().map(|s| parse_polynomial(s, QQ).unwrap()).collect())
                .unwrap()
        };
        assert!(syzygy_verify(&v(["y", "-x", "0"]), &gens));
        assert!(!syzygy_verify(&v(["1", "0", "0"]), &gens));
        assert!(!syzygy_verify(&v(["1", "0", "0"]), &gens[..2]));
    }

    #[test]
    fn rank_is_exact_and_order_free() {
        let q = |n: i64, d: i64| {
            FieldElement::Rational(num_rational::BigRational::new(n.into(), d.into()))
        };
        let rows = vec![
            vec![q(1, 2), q(1, 3), q(0, 1)],
            vec![q(3, 1), q(2, 1), q(0, 1)],
            vec![q(0, 1), q(5, 7), q(1, 1)],
        ];
        assert_eq!(rank(QQ, &rows), 2);
        let mut shuffled = rows.clone();
        shuffled.rotate_left(1);
        assert_eq!(rank(QQ, &shuffled), 2);
        let f = Field::Prime(7);
        let rows: Vec<Vec<FieldElement>> = [[1, 2, 3], [2, 4, 6], [0, 0, 1]]
            .iter()
            .map(|r| r.iter().map(|&c| f.from_i64(c)).collect())
            .collect();
        assert_eq!(rank(f, &rows), 2);
    }
}

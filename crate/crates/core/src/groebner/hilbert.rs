//! Quotient dimensions and Hilbert series from leading-term ideals.

use alloc::vec;
use alloc::vec::Vec;

use super::ideal::{groebner_basis, GroebnerBasis, IdealBasis};
use crate::error::{Error, Result};
use crate::polyring::{grevlex_cmp, monomials_of_degree, Monomial, Vars, NVARS};

/// `dim_k k[vars]/I` together with its standard monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuotientDimension {
    /// Standard monomials, ascending in grevlex.
    Finite(Vec<Monomial>),
    Infinite,
}

impl QuotientDimension {
    pub fn dimension(&self) -> Option<usize> {
        match self {
            QuotientDimension::Finite(s) => Some(s.len()),
            QuotientDimension::Infinite => None,
        }
    }
}

pub fn vector_space_dimension(ideal: &IdealBasis) -> QuotientDimension {
    standard_monomials(&groebner_basis(ideal))
}

/// Standard monomials of a basis; finite exactly when every active
/// variable has a pure power among the leading monomials.
pub fn standard_monomials(gb: &GroebnerBasis) -> QuotientDimension {
    let leads = gb.leading_monomials();
    let vars = gb.ring().vars;
    if leads.contains(&Monomial::ONE) {
        return QuotientDimension::Finite(Vec::new());
    }
    let mut bound = [0u32; NVARS];
    for v in vars.iter() {
        match leads
            .iter()
            .filter(|m| m.support() == Vars::single(v))
            .map(|m| m.exponent(v))
            .min()
        {
            Some(e) => bound[v] = e,
            None => return QuotientDimension::Infinite,
        }
    }
    let mut out = Vec::new();
    let mut e = [0u32; NVARS];
    loop {
        let m = Monomial::new(e);
        if !leads.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        // odometer over the box below the pure powers
        let mut k = 0;
        loop {
            if k == NVARS {
                out.sort_by(grevlex_cmp);
                return QuotientDimension::Finite(out);
            }
            if vars.contains(k) && e[k] + 1 < bound[k] {
                e[k] += 1;
                break;
            }
            e[k] = 0;
            k += 1;
        }
    }
}

/// Number of standard monomials of total degree `degree`.
pub fn standard_monomial_count(gb: &GroebnerBasis, degree: u32) -> usize {
    let leads = gb.leading_monomials();
    monomials_of_degree(gb.ring().vars, degree)
        .into_iter()
        .filter(|m| !leads.iter().any(|l| l.divides(m)))
        .count()
}

/// Hilbert series `numerator(t) / (1 - t)^nvars` of `k[vars]/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: Vec<i128>,
    nvars: usize,
}

impl HilbertSeries {
    /// Coefficients of the numerator, lowest degree first.
    pub fn numerator(&self) -> &[i128] {
        &self.numerator
    }

    /// Cancels `(1 - t)` factors: returns the reduced numerator and the
    /// Krull dimension, or `None` for the zero quotient.
    pub fn reduced(&self) -> Option<(Vec<i128>, usize)> {
        let mut n = self.numerator.clone();
        if n.is_empty() {
            return None;
        }
        let mut k = 0;
        while n.iter().sum::<i128>() == 0 {
            n = divide_one_minus_t(&n);
            k += 1;
        }
        Some((n, self.nvars - k))
    }

    pub fn krull_dimension(&self) -> Option<usize> {
        self.reduced().map(|(_, d)| d)
    }

    /// Multiplicity: the reduced numerator at `t = 1`, zero for the zero
    /// quotient.
    pub fn multiplicity(&self) -> u64 {
        match self.reduced() {
            None => 0,
            Some((n, _)) => u64::try_from(n.iter().sum::<i128>()).expect("positive multiplicity"),
        }
    }
}

pub fn hilbert_series(ideal: &IdealBasis) -> Result<HilbertSeries> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let gb = groebner_basis(ideal);
    Ok(HilbertSeries {
        numerator: numerator(gb.leading_monomials()),
        nvars: gb.ring().vars.len(),
    })
}

/// Degree of `R/I` for a homogeneous ideal of `k[x,y,z]` whose zero set in
/// the projective plane is finite. Zero when the zero set is empty.
pub fn hilbert_degree(ideal: &IdealBasis) -> Result<u64> {
    let hs = hilbert_series(ideal)?;
    match hs.krull_dimension() {
        None | Some(0) => Ok(0),
        Some(1) => Ok(hs.multiplicity()),
        Some(_) => Err(Error::NotZeroDimensional),
    }
}

fn divide_one_minus_t(n: &[i128]) -> Vec<i128> {
    // n = (1 - t) q  =>  q_i = q_{i-1} + n_i
    let mut q = Vec::with_capacity(n.len().saturating_sub(1));
    let mut acc = 0;
    for &c in &n[..n.len() - 1] {
        acc += c;
        q.push(acc);
    }
    while q.last() == Some(&0) {
        q.pop();
    }
    q
}

fn add(a: &mut Vec<i128>, b: &[i128], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &c) in b.iter().enumerate() {
        a[i + shift] += c;
    }
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(grevlex_cmp);
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|o| o.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator of the Hilbert series of `k[...]/M` for a monomial ideal,
/// by pivoting `N(M) = N(M + <p>) + t^deg(p) N(M : p)` on a variable power
/// until the generators are pairwise coprime.
fn numerator(gens: Vec<Monomial>) -> Vec<i128> {
    let gens = minimalize(gens);
    if gens.contains(&Monomial::ONE) {
        return Vec::new();
    }
    let mut count = [0usize; NVARS];
    for g in &gens {
        for v in g.support().iter() {
            count[v] += 1;
        }
    }
    let Some(v) = (0..NVARS)
        .filter(|&v| count[v] >= 2)
        .max_by_key(|&v| (count[v], NVARS - v))
    else {
        // pairwise coprime: a complete intersection
        let mut n = vec![1i128];
        for g in &gens {
            let mut next = n.clone();
            let shifted: Vec<i128> = n.iter().map(|c| -c).collect();
            add(&mut next, &shifted, g.total_degree() as usize);
            n = next;
        }
        return n;
    };
    let e = gens
        .iter()
        .map(|g| g.exponent(v))
        .filter(|&e| e > 0)
        .min()
        .expect("pivot variable occurs");
    let pivot = Monomial::var(v, e);
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| !pivot.divides(g)).copied().collect();
    plus.push(pivot);
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| g.with_exponent(v, g.exponent(v).saturating_sub(e)))
        .collect();
    let mut n = numerator(plus);
    add(&mut n, &numerator(colon), e as usize);
    n
}

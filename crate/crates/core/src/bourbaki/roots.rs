//! Roots in the base field of univariate polynomials: Cantor-Zassenhaus
//! over `F_p`, and over the rationals Hensel lifting of roots modulo a
//! large prime followed by rational reconstruction.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::RngCore;

use crate::polyring::{is_prime, Field, FieldElement, Polynomial};

/// Dense coefficients of `f` in `var`, lowest degree first. `f` must not
/// involve any other variable.
pub(crate) fn coefficients(f: &Polynomial, var: usize) -> Vec<FieldElement> {
    let field = f.field();
    let mut out = vec![field.zero(); f.degree_in(var) as usize + 1];
    for (m, c) in f.terms() {
        debug_assert_eq!(m.total_degree(), m.exponent(var));
        out[m.exponent(var) as usize] = c.clone();
    }
    out
}

/// Distinct roots of a nonzero univariate polynomial in its base field,
/// ascending.
pub(crate) fn roots(
    coeffs: &[FieldElement],
    field: Field,
    rng: &mut ChaCha8Rng,
) -> Vec<FieldElement> {
    let mut out: Vec<FieldElement> = match field {
        Field::Prime(p) => {
            let f: Vec<u64> = coeffs
                .iter()
                .map(|c| match c {
                    FieldElement::Prime { residue, .. } => *residue as u64,
                    FieldElement::Rational(_) => unreachable!("field checked"),
                })
                .collect();
            roots_mod_p(&trim(f), p as u64, rng)
                .into_iter()
                .map(|r| field.from_i64(r as i64))
                .collect()
        }
        Field::Rationals => {
            let f: Vec<BigRational> = coeffs
                .iter()
                .map(|c| c.as_rational().expect("field checked").clone())
                .collect();
            rational_roots(&f, rng)
                .into_iter()
                .map(FieldElement::Rational)
                .collect()
        }
    };
    out.sort();
    out.dedup();
    out
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn sub_poly(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

fn mul_poly(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

/// Quotient and remainder by a nonzero divisor.
fn div_rem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut r = a.to_vec();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let inv = inv_mod(*b.last().expect("nonzero divisor"), p);
    let mut q = vec![0u64; r.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let c = r[k + b.len() - 1] * inv % p;
        q[k] = c;
        if c != 0 {
            for (j, &y) in b.iter().enumerate() {
                r[k + j] = (r[k + j] + p - c * y % p) % p;
            }
        }
    }
    r.truncate(b.len() - 1);
    (trim(q), trim(r))
}

fn monic(a: Vec<u64>, p: u64) -> Vec<u64> {
    match a.last() {
        Some(&l) if l != 1 => {
            let inv = inv_mod(l, p);
            a.iter().map(|c| c * inv % p).collect()
        }
        _ => a,
    }
}

fn gcd_poly(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let (_, r) = div_rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(a, p)
}

fn pow_poly_mod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = div_rem(base, f, p).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = div_rem(&mul_poly(&acc, &b, p), f, p).1;
        }
        b = div_rem(&mul_poly(&b, &b, p), f, p).1;
        e >>= 1;
    }
    acc
}

fn eval_mod(f: &[u64], x: u64, p: u64) -> u64 {
    f.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
}

fn derivative_mod(f: &[u64], p: u64) -> Vec<u64> {
    trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u64 % p) * c % p)
            .collect(),
    )
}

const EXHAUSTIVE_BELOW: u64 = 1024;

/// Distinct roots in `F_p` of a trimmed polynomial.
fn roots_mod_p(f: &[u64], p: u64, rng: &mut ChaCha8Rng) -> Vec<u64> {
    if f.len() <= 1 {
        return Vec::new();
    }
    if p < EXHAUSTIVE_BELOW {
        return (0..p).filter(|&x| eval_mod(f, x, p) == 0).collect();
    }
    let f = monic(f.to_vec(), p);
    let xp = pow_poly_mod(&[0, 1], p, &f, p);
    let split = gcd_poly(&f, &sub_poly(&xp, &[0, 1], p), p);
    let mut out = Vec::new();
    split_linear(split, p, rng, &mut out);
    out
}

/// Equal-degree splitting of a monic product of distinct linear factors.
fn split_linear(g: Vec<u64>, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<u64>) {
    match g.len() {
        0 | 1 => {}
        2 => out.push((p - g[0]) % p),
        n => loop {
            let a = rng.next_u64() % p;
            let t = pow_poly_mod(&[a, 1], (p - 1) / 2, &g, p);
            let s = gcd_poly(&g, &sub_poly(&t, &[1], p), p);
            if s.len() > 1 && s.len() < n {
                let (q, _) = div_rem(&g, &s, p);
                split_linear(s, p, rng, out);
                split_linear(monic(q, p), p, rng, out);
                return;
            }
        },
    }
}

/// Primitive integer coefficients of a nonzero rational polynomial.
fn integer_coefficients(f: &[BigRational]) -> Vec<BigInt> {
    let den = f.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let mut out: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

fn rat_trim(mut a: Vec<BigRational>) -> Vec<BigRational> {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn rat_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let lead = b.last().expect("nonzero divisor");
    while r.len() >= b.len() {
        let c = r.last().expect("nonempty") / lead;
        let k = r.len() - b.len();
        for (j, y) in b.iter().enumerate() {
            r[k + j] -= &c * y;
        }
        r.pop();
        r = rat_trim(r);
    }
    r
}

fn rat_div(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let lead = b.last().expect("nonzero divisor");
    let mut q = vec![BigRational::zero(); a.len() + 1 - b.len()];
    for k in (0..q.len()).rev() {
        let c = &r[k + b.len() - 1] / lead;
        for (j, y) in b.iter().enumerate() {
            r[k + j] -= &c * y;
        }
        q[k] = c;
    }
    rat_trim(q)
}

/// `f / gcd(f, f')`.
fn squarefree_part(f: &[BigRational]) -> Vec<BigRational> {
    let df: Vec<BigRational> = rat_trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect(),
    );
    if df.is_empty() {
        return f.to_vec();
    }
    let (mut a, mut b) = (f.to_vec(), df);
    while !b.is_empty() {
        let r = rat_rem(&a, &b);
        a = b;
        b = r;
    }
    rat_div(f, &a)
}

fn eval_int(f: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    f.iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

fn inv_big(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// `n / d` with `|n|, |d| <= bound` and `n ≡ r d (mod m)`, if one exists.
fn rational_reconstruction(r: &BigInt, m: &BigInt, bound: &BigInt) -> Option<BigRational> {
    let (mut r0, mut r1) = (m.clone(), r.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = core::mem::replace(&mut r1, r2);
        let t2 = &t0 - &q * &t1;
        t0 = core::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > *bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

const MODULUS_SEARCH: u64 = 200;

fn rational_roots(f: &[BigRational], rng: &mut ChaCha8Rng) -> Vec<BigRational> {
    let f = rat_trim(f.to_vec());
    if f.len() <= 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let start = f.iter().position(|c| !c.is_zero()).expect("nonzero");
    if start > 0 {
        out.push(BigRational::zero());
    }
    let f = squarefree_part(&f[start..]);
    if f.len() <= 1 {
        return out;
    }
    let a = integer_coefficients(&f);
    let df: Vec<BigInt> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    let lead = a.last().expect("nonzero").clone();
    // any root n/d has |n| <= |a_0| and |d| <= |a_n|
    let bound = a[0].abs().max(lead.abs());
    let target: BigInt = &bound * &bound * 2u32;

    let mut ell = (1u64 << 31) - 1;
    for _ in 0..MODULUS_SEARCH {
        while !is_prime(ell) {
            ell -= 2;
        }
        let p = BigInt::from(ell);
        let reduce = |v: &[BigInt]| {
            trim(
                v.iter()
                    .map(|c| c.mod_floor(&p).to_u64().expect("below modulus"))
                    .collect(),
            )
        };
        let fm = reduce(&a);
        if fm.len() == a.len() && gcd_poly(&fm, &derivative_mod(&fm, ell), ell).len() == 1 {
            for r in roots_mod_p(&fm, ell, rng) {
                let (mut r, mut m) = (BigInt::from(r), p.clone());
                while m <= target {
                    m = &m * &m;
                    let d = inv_big(&eval_int(&df, &r, &m), &m).expect("simple root lifts");
                    r = (&r - eval_int(&a, &r, &m) * d).mod_floor(&m);
                }
                let n = (&m / 2u32).sqrt();
                if let Some(q) = rational_reconstruction(&r, &m, &n) {
                    if evaluate(&f, &q).is_zero() {
                        out.push(q);
                    }
                }
            }
            return out;
        }
        ell -= 2;
    }
    unreachable!(
        "a squarefree integer polynomial stays squarefree modulo all but finitely many primes"
    )
}

fn evaluate(f: &[BigRational], x: &BigRational) -> BigRational {
    f.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c)
}

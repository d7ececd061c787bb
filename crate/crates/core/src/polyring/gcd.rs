//! Multivariate gcd by recursive content / primitive-part splitting with a
//! subresultant remainder sequence in the main variable.

use alloc::vec::Vec;

use super::monomial::Monomial;
use super::polynomial::Polynomial;

/// Monic greatest common divisor. `gcd(0, 0) = 0`.
pub fn multivariate_gcd(f: &Polynomial, g: &Polynomial) -> Polynomial {
    gcd_rec(f, g).monic()
}

/// Gcd of a whole list; zero entries are skipped.
pub fn gcd_all<'a, I>(polys: I) -> Option<Polynomial>
where
    I: IntoIterator<Item = &'a Polynomial>,
{
    let mut acc: Option<Polynomial> = None;
    for p in polys {
        acc = Some(match acc {
            None => p.monic(),
            Some(a) => multivariate_gcd(&a, p),
        });
        if acc
            .as_ref()
            .is_some_and(|a| a.is_constant() && !a.is_zero())
        {
            break;
        }
    }
    acc
}

fn gcd_rec(f: &Polynomial, g: &Polynomial) -> Polynomial {
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    if f.is_constant() || g.is_constant() {
        return Polynomial::one(f.ring());
    }
    let support = f.support().union(g.support());
    let var = support.iter().next().expect("nonconstant input");
    if f.degree_in(var) == 0 {
        return gcd_rec(f, &content(g, var));
    }
    if g.degree_in(var) == 0 {
        return gcd_rec(&content(f, var), g);
    }
    let cf = content(f, var);
    let cg = content(g, var);
    let pf = coefficients(&f.div_exact(&cf).expect("content divides"), var);
    let pg = coefficients(&g.div_exact(&cg).expect("content divides"), var);
    let c = gcd_rec(&cf, &cg);
    let h = from_coefficients(&subresultant_gcd(pf, pg, var), var, f);
    &c * &h
}

/// Gcd of the coefficients of `f` viewed as a polynomial in `var`.
fn content(f: &Polynomial, var: usize) -> Polynomial {
    let coeffs = coefficients(f, var);
    let mut acc = Polynomial::zero(f.ring());
    for c in coeffs.iter().rev() {
        if c.is_zero() {
            continue;
        }
        acc = gcd_rec(&acc, c);
        if acc.is_constant() {
            break;
        }
    }
    acc.monic()
}

/// Dense coefficient list in `var`, index = exponent. Coefficients are free
/// of `var` but stay in the same ring.
fn coefficients(f: &Polynomial, var: usize) -> Vec<Polynomial> {
    let deg = f.degree_in(var) as usize;
    let mut buckets: Vec<Vec<_>> = (0..=deg).map(|_| Vec::new()).collect();
    for (m, c) in f.terms() {
        buckets[m.exponent(var) as usize].push((m.without(var), c.clone()));
    }
    buckets
        .into_iter()
        .map(|t| Polynomial::from_terms(f.ring(), t))
        .collect()
}

fn from_coefficients(coeffs: &[Polynomial], var: usize, like: &Polynomial) -> Polynomial {
    let one = like.field().one();
    let mut acc = Polynomial::zero(like.ring());
    for (k, c) in coeffs.iter().enumerate() {
        acc = &acc + &c.mul_term(&Monomial::var(var, k as u32), &one);
    }
    acc
}

fn trim(mut p: Vec<Polynomial>) -> Vec<Polynomial> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn deg(p: &[Polynomial]) -> usize {
    p.len() - 1
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) a mod b`.
fn pseudo_remainder(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let lb = b.last().expect("nonzero divisor").clone();
    let mut r: Vec<Polynomial> = a.to_vec();
    let mut e = deg(a) + 1 - deg(b);
    while !r.is_empty() && r.len() >= b.len() {
        let lr = r.last().expect("nonempty").clone();
        let shift = deg(&r) - deg(b);
        let mut next: Vec<Polynomial> = r.iter().map(|c| c * &lb).collect();
        for (i, bc) in b.iter().enumerate() {
            next[i + shift] = &next[i + shift] - &(bc * &lr);
        }
        r = trim(next);
        e -= 1;
    }
    let factor = lb.pow(e as u32);
    r.iter().map(|c| c * &factor).collect()
}

fn primitive_part(p: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut c = Polynomial::zero(p[0].ring());
    for q in p.iter().rev() {
        c = gcd_rec(&c, q);
        if c.is_constant() {
            break;
        }
    }
    let c = c.monic();
    p.into_iter()
        .map(|q| q.div_exact(&c).expect("content divides"))
        .collect()
}

/// Gcd of two primitive polynomials in `var` over `k[other vars]`.
fn subresultant_gcd(a: Vec<Polynomial>, b: Vec<Polynomial>, _var: usize) -> Vec<Polynomial> {
    let (mut a, mut b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let ring = a[0].ring();
    let mut g = Polynomial::one(ring);
    let mut h = Polynomial::one(ring);
    loop {
        let delta = (deg(&a) - deg(&b)) as u32;
        let r = pseudo_remainder(&a, &b);
        if r.is_empty() {
            return primitive_part(b);
        }
        if r.len() == 1 {
            return alloc::vec![Polynomial::one(ring)];
        }
        let divisor = &g * &h.pow(delta);
        a = b;
        b = r
            .iter()
            .map(|c| {
                c.div_exact(&divisor)
                    .expect("subresultant division is exact")
            })
            .collect();
        g = a.last().expect("nonzero").clone();
        if delta > 0 {
            let num = g.pow(delta);
            let den = h.pow(delta - 1);
            h = num.div_exact(&den).expect("subresultant division is exact");
        }
    }
}

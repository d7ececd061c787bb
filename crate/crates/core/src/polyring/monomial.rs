use core::fmt;

/// Number of variable slots. Rings with fewer variables leave slots unused.
pub const NVARS: usize = 3;

pub const VAR_NAMES: [char; NVARS] = ['x', 'y', 'z'];

/// A set of active variables, as a bitmask over `x, y, z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vars(u8);

impl Vars {
    pub const XYZ: Vars = Vars(0b111);
    pub const EMPTY: Vars = Vars(0);

    pub fn single(var: usize) -> Vars {
        assert!(var < NVARS, "variable index out of range");
        Vars(1 << var)
    }

    pub fn from_indices(indices: &[usize]) -> Vars {
        indices.iter().fold(Vars::EMPTY, |acc, &i| acc.with(i))
    }

    pub fn contains(self, var: usize) -> bool {
        var < NVARS && self.0 & (1 << var) != 0
    }

    pub fn with(self, var: usize) -> Vars {
        assert!(var < NVARS, "variable index out of range");
        Vars(self.0 | (1 << var))
    }

    pub fn without(self, var: usize) -> Vars {
        Vars(self.0 & !(1 << var))
    }

    pub fn union(self, other: Vars) -> Vars {
        Vars(self.0 | other.0)
    }

    pub fn is_subset(self, other: Vars) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Active variable indices in ascending order (`x` first).
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..NVARS).filter(move |&i| self.contains(i))
    }
}

impl fmt::Display for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k[")?;
        for (n, i) in self.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", VAR_NAMES[i])?;
        }
        write!(f, "]")
    }
}

/// A power product `x^a y^b z^c` with its total degree cached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; NVARS],
    degree: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        exps: [0; NVARS],
        degree: 0,
    };

    pub fn new(exps: [u32; NVARS]) -> Monomial {
        let mut e = [0u16; NVARS];
        for (slot, &v) in e.iter_mut().zip(exps.iter()) {
            *slot = u16::try_from(v).expect("exponent overflow");
        }
        Monomial {
            exps: e,
            degree: exps.iter().sum(),
        }
    }

    pub fn var(var: usize, exp: u32) -> Monomial {
        let mut e = [0; NVARS];
        e[var] = exp;
        Monomial::new(e)
    }

    #[inline]
    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var] as u32
    }

    pub fn exponents(&self) -> [u32; NVARS] {
        [
            self.exps[0] as u32,
            self.exps[1] as u32,
            self.exps[2] as u32,
        ]
    }

    #[inline]
    pub fn total_degree(&self) -> u32 {
        self.degree
    }

    /// Variables with a positive exponent.
    pub fn support(&self) -> Vars {
        (0..NVARS)
            .filter(|&i| self.exps[i] > 0)
            .fold(Vars::EMPTY, |acc, i| acc.with(i))
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps[0] <= other.exps[0]
            && self.exps[1] <= other.exps[1]
            && self.exps[2] <= other.exps[2]
    }

    /// `other / self` when `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut exps = other.exps;
        for (a, b) in exps.iter_mut().zip(self.exps.iter()) {
            *a -= *b;
        }
        Some(Monomial {
            exps,
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(other.exps.iter()) {
            *a = (*a).max(*b);
        }
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(other.exps.iter()) {
            *a = (*a).min(*b);
        }
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Drops a variable (sets its exponent to zero).
    pub fn without(&self, var: usize) -> Monomial {
        let mut e = self.exponents();
        e[var] = 0;
        Monomial::new(e)
    }

    /// Exponent of `var` raised to `exp`.
    pub fn with_exponent(&self, var: usize, exp: u32) -> Monomial {
        let mut e = self.exponents();
        e[var] = exp;
        Monomial::new(e)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, &e) in VAR_NAMES.iter().zip(&self.exps) {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

/// All monomials of total degree `degree` in the given variables, in
/// descending grevlex order.
pub fn monomials_of_degree(vars: Vars, degree: u32) -> alloc::vec::Vec<Monomial> {
    let idx: alloc::vec::Vec<usize> = vars.iter().collect();
    let mut out = alloc::vec::Vec::new();
    fn rec(
        idx: &[usize],
        pos: usize,
        left: u32,
        cur: &mut [u32; NVARS],
        out: &mut alloc::vec::Vec<Monomial>,
    ) {
        if pos + 1 == idx.len() {
            cur[idx[pos]] = left;
            out.push(Monomial::new(*cur));
            cur[idx[pos]] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[idx[pos]] = e;
            rec(idx, pos + 1, left - e, cur, out);
        }
        cur[idx[pos]] = 0;
    }
    if idx.is_empty() {
        if degree == 0 {
            out.push(Monomial::ONE);
        }
        return out;
    }
    rec(&idx, 0, degree, &mut [0; NVARS], &mut out);
    out.sort_by(|a, b| super::order::grevlex_cmp(b, a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_is_cached_sum() {
        let m = Monomial::new([2, 0, 5]);
        assert_eq!(m.total_degree(), 7);
        assert_eq!(m.mul(&Monomial::var(1, 3)).total_degree(), 10);
        assert_eq!(
            Monomial::new([3, 1, 0]).lcm(&Monomial::new([1, 2, 2])),
            Monomial::new([3, 2, 2])
        );
    }

    #[test]
    fn division() {
        let a = Monomial::new([1, 1, 0]);
        let b = Monomial::new([2, 1, 3]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b), Some(Monomial::new([1, 0, 3])));
        assert_eq!(b.quotient_of(&a), None);
    }

    #[test]
    fn degree_slices_have_binomial_size() {
        for n in 0..8u32 {
            assert_eq!(
                monomials_of_degree(Vars::XYZ, n).len() as u32,
                (n + 2) * (n + 1) / 2
            );
            assert_eq!(
                monomials_of_degree(Vars::XYZ.without(0), n).len() as u32,
                n + 1
            );
        }
    }

    #[test]
    fn display() {
        assert_eq!(alloc::format!("{}", Monomial::new([2, 0, 1])), "x^2*z");
        assert_eq!(alloc::format!("{}", Monomial::ONE), "1");
        assert_eq!(alloc::format!("{}", Vars::XYZ.without(1)), "k[x,z]");
    }
}

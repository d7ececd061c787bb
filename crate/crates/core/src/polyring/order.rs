//! Monomial orders.

use core::cmp::Ordering;

use super::monomial::{Monomial, Vars, NVARS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Grevlex,
    Lex,
    /// Block order: the first `block` variables of the precedence are compared
    /// by grevlex first, the remaining ones break ties by grevlex. Any
    /// polynomial whose leading monomial avoids the first block lies entirely
    /// in the remaining variables.
    Elimination {
        block: usize,
    },
}

/// A term order on monomials together with a variable precedence
/// (`precedence[0]` is the largest variable).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: [usize; NVARS],
}

impl MonomialOrder {
    /// Graded reverse lexicographic with `x > y > z`.
    pub const fn grevlex() -> Self {
        MonomialOrder {
            kind: OrderKind::Grevlex,
            precedence: [0, 1, 2],
        }
    }

    /// Lexicographic with `x > y > z`.
    pub const fn lex() -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            precedence: [0, 1, 2],
        }
    }

    pub fn lex_with(precedence: [usize; NVARS]) -> Self {
        assert!(
            is_permutation(&precedence),
            "precedence must be a permutation"
        );
        MonomialOrder {
            kind: OrderKind::Lex,
            precedence,
        }
    }

    pub fn grevlex_with(precedence: [usize; NVARS]) -> Self {
        assert!(
            is_permutation(&precedence),
            "precedence must be a permutation"
        );
        MonomialOrder {
            kind: OrderKind::Grevlex,
            precedence,
        }
    }

    /// An elimination order for the variables in `eliminate`.
    pub fn elimination(eliminate: Vars) -> Self {
        let mut precedence = [0; NVARS];
        let mut n = 0;
        for v in (0..NVARS).filter(|&v| eliminate.contains(v)) {
            precedence[n] = v;
            n += 1;
        }
        let block = n;
        for v in (0..NVARS).filter(|&v| !eliminate.contains(v)) {
            precedence[n] = v;
            n += 1;
        }
        MonomialOrder {
            kind: OrderKind::Elimination { block },
            precedence,
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn precedence(&self) -> [usize; NVARS] {
        self.precedence
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::Grevlex => grevlex_on(&self.precedence, a, b),
            OrderKind::Lex => {
                for &v in &self.precedence {
                    match a.exponent(v).cmp(&b.exponent(v)) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::Elimination { block } => {
                let (first, rest) = self.precedence.split_at(block);
                grevlex_on(first, a, b).then_with(|| grevlex_on(rest, a, b))
            }
        }
    }
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::grevlex()
    }
}

fn is_permutation(p: &[usize; NVARS]) -> bool {
    let mut seen = [false; NVARS];
    for &v in p {
        if v >= NVARS || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

#[inline]
fn grevlex_on(vars: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    let da: u32 = vars.iter().map(|&v| a.exponent(v)).sum();
    let db: u32 = vars.iter().map(|&v| b.exponent(v)).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for &v in vars.iter().rev() {
        match a.exponent(v).cmp(&b.exponent(v)) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

/// The canonical storage order of [`super::Polynomial`]: grevlex, `x > y > z`.
#[inline]
pub fn grevlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    match a.total_degree().cmp(&b.total_degree()) {
        Ordering::Equal => {}
        o => return o,
    }
    for v in (0..NVARS).rev() {
        match a.exponent(v).cmp(&b.exponent(v)) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: [u32; 3]) -> Monomial {
        Monomial::new(e)
    }

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::grevlex();
        assert_eq!(o.cmp(&m([1, 0, 0]), &m([0, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m([0, 1, 0]), &m([0, 0, 1])), Ordering::Greater);
        // x*z < y^2 in grevlex
        assert_eq!(o.cmp(&m([1, 0, 1]), &m([0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m([0, 0, 5]), &m([1, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_and_elimination() {
        let lex = MonomialOrder::lex_with([2, 1, 0]);
        assert_eq!(lex.cmp(&m([5, 0, 0]), &m([0, 0, 1])), Ordering::Less);
        let elim = MonomialOrder::elimination(Vars::single(1));
        // anything containing y beats any y-free monomial
        assert_eq!(elim.cmp(&m([0, 1, 0]), &m([7, 0, 3])), Ordering::Greater);
        assert_eq!(elim.cmp(&m([2, 0, 0]), &m([1, 0, 1])), Ordering::Greater);
    }

    fn orders() -> [MonomialOrder; 5] {
        [
            MonomialOrder::grevlex(),
            MonomialOrder::lex(),
            MonomialOrder::lex_with([1, 2, 0]),
            MonomialOrder::elimination(Vars::single(0)),
            MonomialOrder::elimination(Vars::single(2).with(1)),
        ]
    }

    proptest! {
        #[test]
        fn orders_are_admissible(a in proptest::array::uniform3(0u32..6),
                                 b in proptest::array::uniform3(0u32..6),
                                 w in proptest::array::uniform3(0u32..6)) {
            let (a, b, w) = (m(a), m(b), m(w));
            for o in orders() {
                // multiplicative
                prop_assert_eq!(o.cmp(&a, &b), o.cmp(&a.mul(&w), &b.mul(&w)));
                // refines divisibility
                if a.divides(&b) && a != b {
                    prop_assert_eq!(o.cmp(&a, &b), Ordering::Less);
                }
                // total
                prop_assert_eq!(o.cmp(&a, &b) == Ordering::Equal, a == b);
            }
            prop_assert_eq!(grevlex_cmp(&a, &b), MonomialOrder::grevlex().cmp(&a, &b));
        }
    }
}

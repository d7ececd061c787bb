//! Buchberger's algorithm on sparse module vectors.
//!
//! Ideals are the rank-one case. Vectors are ordered position over term,
//! where a smaller position index is the larger one, so position 0 dominates.
//! Pairs are handled with the Gebauer-Möller update and selected by sugar,
//! which equals the shifted degree on homogeneous input.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::polyring::{FieldElement, Monomial, MonomialOrder, PolyRing, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub pos: u32,
    pub mon: Monomial,
    pub coef: FieldElement,
}

/// Position over term with position 0 largest.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct ModuleOrder {
    pub mono: MonomialOrder,
}

impl ModuleOrder {
    pub fn new(mono: MonomialOrder) -> Self {
        ModuleOrder { mono }
    }

    #[inline]
    pub fn cmp(&self, ap: u32, am: &Monomial, bp: u32, bm: &Monomial) -> Ordering {
        bp.cmp(&ap).then_with(|| self.mono.cmp(am, bm))
    }

    #[inline]
    fn cmp_terms(&self, a: &Term, b: &Term) -> Ordering {
        self.cmp(a.pos, &a.mon, b.pos, &b.mon)
    }
}

/// Terms strictly descending under the order the vector was built with.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct SVec {
    pub terms: Vec<Term>,
}

impl SVec {
    pub fn from_terms(order: &ModuleOrder, mut terms: Vec<Term>) -> SVec {
        terms.sort_by(|a, b| order.cmp_terms(b, a));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(l) if l.pos == t.pos && l.mon == t.mon => l.coef = &l.coef + &t.coef,
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coef.is_zero());
        SVec { terms: out }
    }

    pub fn from_polynomial(p: &Polynomial, pos: u32, order: &ModuleOrder) -> SVec {
        SVec::from_components(core::iter::once((pos, p)), order)
    }

    pub fn from_components<'a, I>(parts: I, order: &ModuleOrder) -> SVec
    where
        I: IntoIterator<Item = (u32, &'a Polynomial)>,
    {
        let terms = parts
            .into_iter()
            .flat_map(|(pos, p)| {
                p.terms().iter().map(move |(m, c)| Term {
                    pos,
                    mon: *m,
                    coef: c.clone(),
                })
            })
            .collect();
        SVec::from_terms(order, terms)
    }

    /// The component at `pos` as a polynomial of `ring`.
    pub fn component(&self, pos: u32, ring: PolyRing) -> Polynomial {
        Polynomial::from_terms(
            ring,
            self.terms
                .iter()
                .filter(|t| t.pos == pos)
                .map(|t| (t.mon, t.coef.clone())),
        )
    }

    #[inline]
    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monic(mut self) -> SVec {
        if let Some(l) = self.terms.first() {
            if !l.coef.is_one() {
                let inv = l.coef.inv().expect("nonzero leading coefficient");
                for t in &mut self.terms {
                    t.coef = &t.coef * &inv;
                }
            }
        }
        self
    }

    /// Largest shifted degree of a term.
    pub fn sugar(&self, shifts: &[i32]) -> i32 {
        self.terms
            .iter()
            .map(|t| t.mon.total_degree() as i32 + shifts[t.pos as usize])
            .max()
            .unwrap_or(i32::MIN)
    }
}

/// `a - c * m * g`, merged in order.
fn sub_mul(
    a: &[Term],
    g: &[Term],
    m: &Monomial,
    c: &FieldElement,
    order: &ModuleOrder,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + g.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < g.len() {
        let gm = g[j].mon.mul(m);
        match order.cmp(a[i].pos, &a[i].mon, g[j].pos, &gm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(Term {
                    pos: g[j].pos,
                    mon: gm,
                    coef: -&(&g[j].coef * c),
                });
                j += 1;
            }
            Ordering::Equal => {
                let v = &a[i].coef - &(&g[j].coef * c);
                if !v.is_zero() {
                    out.push(Term {
                        pos: a[i].pos,
                        mon: a[i].mon,
                        coef: v,
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    for t in &g[j..] {
        out.push(Term {
            pos: t.pos,
            mon: t.mon.mul(m),
            coef: -&(&t.coef * c),
        });
    }
    out
}

/// Reduces `p` by monic reducers found through `find`, which returns a
/// reducer whose leading term divides the given one together with its
/// sugar. With `full` unset only the leading term is reduced.
pub(crate) fn reduce<'a, F>(
    p: SVec,
    mut sugar: i32,
    order: &ModuleOrder,
    full: bool,
    find: F,
) -> (SVec, i32)
where
    F: Fn(u32, &Monomial) -> Option<(&'a SVec, i32)>,
{
    let mut done: Vec<Term> = Vec::new();
    let mut rest = p.terms;
    let mut start = 0;
    while start < rest.len() {
        let lead = &rest[start];
        match find(lead.pos, &lead.mon) {
            Some((g, gsugar)) => {
                let gl = g.lead().expect("nonzero reducer");
                let q = gl.mon.quotient_of(&lead.mon).expect("reducer divides");
                let c = lead.coef.clone();
                sugar = sugar.max(gsugar + q.total_degree() as i32);
                // the leading terms cancel exactly, skip them on both sides
                rest = sub_mul(&rest[start + 1..], &g.terms[1..], &q, &c, order);
                start = 0;
            }
            None if full => {
                done.push(rest[start].clone());
                start += 1;
            }
            None => break,
        }
    }
    done.extend(rest.drain(start..));
    (SVec { terms: done }, sugar)
}

/// Normal form with respect to a fixed list of monic vectors.
pub(crate) fn normal_form(p: SVec, basis: &[SVec], order: &ModuleOrder) -> SVec {
    reduce(p, 0, order, true, |pos, m| {
        basis
            .iter()
            .find(|g| {
                let l = g.lead().expect("nonzero basis element");
                l.pos == pos && l.mon.divides(m)
            })
            .map(|g| (g, 0))
    })
    .0
}

/// S-vector of two monic vectors with leading terms in the same position.
pub(crate) fn s_vector(f: &SVec, g: &SVec, order: &ModuleOrder) -> SVec {
    let (fl, gl) = (f.lead().expect("nonzero"), g.lead().expect("nonzero"));
    let lcm = fl.mon.lcm(&gl.mon);
    let mf = fl.mon.quotient_of(&lcm).expect("divides lcm");
    let mg = gl.mon.quotient_of(&lcm).expect("divides lcm");
    let one = fl.coef.field().one();
    let scaled: Vec<Term> = f.terms[1..]
        .iter()
        .map(|t| Term {
            pos: t.pos,
            mon: t.mon.mul(&mf),
            coef: t.coef.clone(),
        })
        .collect();
    SVec {
        terms: sub_mul(&scaled, &g.terms[1..], &mg, &one, order),
    }
}

#[derive(Clone, Debug)]
struct Elem {
    vec: SVec,
    pos: u32,
    lead: Monomial,
    sugar: i32,
    live: bool,
}

#[derive(Clone, Debug)]
enum Job {
    Pair(usize, usize),
    Generator(SVec),
}

#[derive(Clone, Debug)]
struct Entry {
    sugar: i32,
    pos: u32,
    lcm: Monomial,
    job: Job,
}

impl Entry {
    fn indices(&self) -> (usize, usize) {
        match self.job {
            Job::Pair(i, j) => (i, j),
            Job::Generator(_) => (usize::MAX, usize::MAX),
        }
    }
}

/// Incremental Buchberger state. Generators may be pushed at any time and
/// the computation resumed, optionally only up to a sugar bound.
#[derive(Clone, Debug)]
pub(crate) struct Engine {
    order: ModuleOrder,
    shifts: Vec<i32>,
    product_criterion: bool,
    elems: Vec<Elem>,
    queue: Vec<Entry>,
}

impl Engine {
    /// `shifts` has one entry per position. The product criterion is only
    /// sound for ideals, so it is enabled for rank one.
    pub fn new(order: ModuleOrder, shifts: Vec<i32>) -> Self {
        let product_criterion = shifts.len() == 1;
        Engine {
            order,
            shifts,
            product_criterion,
            elems: Vec::new(),
            queue: Vec::new(),
        }
    }

    pub fn push_generator(&mut self, v: SVec) {
        let Some(l) = v.lead() else { return };
        let entry = Entry {
            sugar: v.sugar(&self.shifts),
            pos: l.pos,
            lcm: l.mon,
            job: Job::Generator(v),
        };
        self.queue.push(entry);
    }

    /// Processes queued work with sugar at most `bound` (everything when
    /// `None`).
    pub fn run(&mut self, bound: Option<i32>) {
        while let Some(k) = self.select(bound) {
            let entry = self.queue.swap_remove(k);
            let (v, sugar) = match entry.job {
                Job::Generator(v) => (v, entry.sugar),
                Job::Pair(i, j) => (
                    s_vector(&self.elems[i].vec, &self.elems[j].vec, &self.order),
                    entry.sugar,
                ),
            };
            let (h, sugar) = self.reduce_live(v, sugar, true);
            if !h.is_zero() {
                self.insert(h.monic(), sugar);
            }
        }
    }

    fn select(&self, bound: Option<i32>) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (k, e) in self.queue.iter().enumerate() {
            if bound.is_some_and(|b| e.sugar > b) {
                continue;
            }
            best = match best {
                None => Some(k),
                Some(b) => {
                    let cur = &self.queue[b];
                    let ord = e
                        .sugar
                        .cmp(&cur.sugar)
                        .then_with(|| self.order.cmp(e.pos, &e.lcm, cur.pos, &cur.lcm))
                        .then_with(|| e.indices().cmp(&cur.indices()));
                    if ord == Ordering::Less {
                        Some(k)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        best
    }

    fn reduce_live(&self, v: SVec, sugar: i32, full: bool) -> (SVec, i32) {
        let elems = &self.elems;
        reduce(v, sugar, &self.order, full, |pos, m| {
            elems
                .iter()
                .find(|e| e.live && e.pos == pos && e.lead.divides(m))
                .map(|e| (&e.vec, e.sugar))
        })
    }

    /// Normal form of `v` against the current (possibly partial) basis.
    pub fn reduce(&self, v: SVec) -> SVec {
        let sugar = v.sugar(&self.shifts);
        self.reduce_live(v, sugar, true).0
    }

    /// Gebauer-Möller update for a new monic element.
    fn insert(&mut self, h: SVec, sugar: i32) {
        let l = h.lead().expect("nonzero");
        let (tp, tm) = (l.pos, l.mon);
        let t = self.elems.len();

        #[derive(Clone, Copy)]
        struct Cand {
            i: usize,
            lcm: Monomial,
            coprime: bool,
            sugar: i32,
        }
        let mut cands: Vec<Cand> = Vec::new();
        for (i, e) in self.elems.iter().enumerate() {
            if !e.live || e.pos != tp {
                continue;
            }
            let lcm = e.lead.lcm(&tm);
            let d = lcm.total_degree() as i32;
            let s = (e.sugar + d - e.lead.total_degree() as i32)
                .max(sugar + d - tm.total_degree() as i32);
            cands.push(Cand {
                i,
                lcm,
                coprime: self.product_criterion && e.lead.is_coprime(&tm),
                sugar: s,
            });
        }
        // criterion M: drop pairs whose lcm is properly divisible by another's
        let keep_m: Vec<bool> = cands
            .iter()
            .map(|c| {
                !cands
                    .iter()
                    .any(|o| o.lcm != c.lcm && o.lcm.divides(&c.lcm))
            })
            .collect();
        let mut survivors: Vec<Cand> = cands
            .into_iter()
            .zip(keep_m)
            .filter_map(|(c, k)| k.then_some(c))
            .collect();
        // criterion F: one pair per lcm, none if any of them is coprime
        survivors.sort_by(|a, b| self.order.mono.cmp(&a.lcm, &b.lcm).then(a.i.cmp(&b.i)));
        let mut filtered: Vec<Cand> = Vec::new();
        let mut k = 0;
        while k < survivors.len() {
            let end = k + survivors[k..]
                .iter()
                .take_while(|c| c.lcm == survivors[k].lcm)
                .count();
            if !survivors[k..end].iter().any(|c| c.coprime) {
                filtered.push(survivors[k]);
            }
            k = end;
        }
        // chain criterion on old pairs
        let elems = &self.elems;
        self.queue.retain(|e| match e.job {
            Job::Pair(i, j) if e.pos == tp => {
                let li = elems[i].lead.lcm(&tm);
                let lj = elems[j].lead.lcm(&tm);
                !(tm.divides(&e.lcm) && li != e.lcm && lj != e.lcm)
            }
            _ => true,
        });
        for c in filtered {
            self.queue.push(Entry {
                sugar: c.sugar,
                pos: tp,
                lcm: c.lcm,
                job: Job::Pair(c.i, t),
            });
        }
        for e in &mut self.elems {
            if e.live && e.pos == tp && tm.divides(&e.lead) {
                e.live = false;
            }
        }
        self.elems.push(Elem {
            vec: h,
            pos: tp,
            lead: tm,
            sugar,
            live: true,
        });
    }

    /// The interreduced monic basis, ascending by leading term.
    pub fn finish(&self) -> Vec<SVec> {
        let mut out: Vec<SVec> = self
            .elems
            .iter()
            .filter(|e| e.live)
            .map(|e| {
                // leads are pairwise non-dividing, so only the tail can move
                let mut terms = e.vec.terms.clone();
                let lead = terms.remove(0);
                let (tail, _) = self.reduce_live(SVec { terms }, e.sugar, true);
                let mut terms = alloc::vec![lead];
                terms.extend(tail.terms);
                SVec { terms }.monic()
            })
            .collect();
        out.sort_by(|a, b| {
            let (a, b) = (a.lead().expect("nonzero"), b.lead().expect("nonzero"));
            self.order.cmp(a.pos, &a.mon, b.pos, &b.mon)
        });
        out
    }
}

/// Reduced Gröbner basis of the given vectors.
pub(crate) fn groebner(vectors: Vec<SVec>, order: ModuleOrder, shifts: Vec<i32>) -> Vec<SVec> {
    let mut engine = Engine::new(order, shifts);
    for v in vectors {
        engine.push_generator(v);
    }
    engine.run(None);
    engine.finish()
}

/// Every S-vector of `basis` reduces to zero.
pub(crate) fn is_groebner(basis: &[SVec], order: &ModuleOrder) -> bool {
    for (i, f) in basis.iter().enumerate() {
        for g in &basis[i + 1..] {
            if f.lead().expect("nonzero").pos != g.lead().expect("nonzero").pos {
                continue;
            }
            if !normal_form(s_vector(f, g, order), basis, order).is_zero() {
                return false;
            }
        }
    }
    true
}

//! Division and Buchberger's algorithm, optionally tracking how each basis
//! element is built from the input generators.

use std::collections::VecDeque;

use crate::poly::{Coeff, Monomial, PolyRing, Polynomial};

use super::GbError;

pub(crate) struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub(crate) fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    fn tick(&mut self) -> Result<(), GbError> {
        self.used += 1;
        if self.used > self.limit {
            Err(GbError::Budget { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

/// Quotient terms per divisor, plus the fully reduced remainder.
pub(crate) struct Division {
    pub quotients: Vec<Vec<(Monomial, Coeff)>>,
    pub remainder: Polynomial,
}

/// Full multivariate division of `p` by `divisors`, first divisor wins.
pub(crate) fn divide(
    p: &Polynomial,
    divisors: &[&Polynomial],
    want_quotients: bool,
    budget: &mut Budget,
) -> Result<Division, GbError> {
    let lms: Vec<&Monomial> = divisors
        .iter()
        .map(|d| d.leading_monomial().expect("nonzero divisor"))
        .collect();
    let mut quotients = vec![Vec::new(); if want_quotients { divisors.len() } else { 0 }];
    let mut r = p.clone();
    let mut cursor = 0;
    while cursor < r.len() {
        let (m, c) = r.term(cursor).clone();
        match lms.iter().position(|lm| lm.divides(&m)) {
            Some(k) => {
                budget.tick()?;
                let g = divisors[k];
                let q = m.checked_div(lms[k]).expect("divides");
                let qc = &c * &g.leading_coeff().unwrap().inv().expect("nonzero");
                r.sub_mul_from(cursor, &qc, &q, g);
                if want_quotients {
                    quotients[k].push((q, qc));
                }
            }
            None => cursor += 1,
        }
    }
    Ok(Division { quotients, remainder: r })
}

pub(crate) struct Basis {
    /// Reduced, monic, ascending by leading monomial.
    pub polys: Vec<Polynomial>,
    /// `polys[k] = sum_j reps[k][j] * gens[j]` when tracking.
    pub reps: Option<Vec<Vec<Polynomial>>>,
}

struct Elem {
    poly: Polynomial,
    rep: Option<Vec<Polynomial>>,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine<'a> {
    ring: &'a PolyRing,
    elems: Vec<Elem>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    budget: Budget,
}

fn sub_rep(a: &mut [Polynomial], b: &[Polynomial], m: &Monomial, c: &Coeff) {
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x = &*x - &y.mul_term(m, c);
        }
    }
}

impl Engine<'_> {
    fn lm(&self, i: usize) -> &Monomial {
        self.elems[i].poly.leading_monomial().expect("basis elements are nonzero")
    }

    /// Reduces `e` fully by the elements listed in `by`.
    fn reduce(&mut self, e: &mut Elem, by: &[usize]) -> Result<(), GbError> {
        if e.poly.is_zero() || by.is_empty() {
            return Ok(());
        }
        let divisors: Vec<&Polynomial> = by.iter().map(|&k| &self.elems[k].poly).collect();
        let want = e.rep.is_some();
        let d = divide(&e.poly, &divisors, want, &mut self.budget)?;
        if let Some(rep) = e.rep.as_mut() {
            for (slot, q) in by.iter().zip(&d.quotients) {
                let grep = self.elems[*slot].rep.as_ref().expect("tracked");
                for (m, c) in q {
                    sub_rep(rep, grep, m, c);
                }
            }
        }
        e.poly = d.remainder;
        Ok(())
    }

    fn make_monic(e: &mut Elem) {
        let inv = e.poly.leading_coeff().expect("nonzero").inv().expect("nonzero");
        if inv.is_one() {
            return;
        }
        e.poly = e.poly.scale(&inv);
        if let Some(rep) = e.rep.as_mut() {
            for r in rep.iter_mut() {
                *r = r.scale(&inv);
            }
        }
    }

    /// Gebauer-Moeller installation of a new element.
    fn update(&mut self, h: usize) {
        let lmh = self.lm(h).clone();
        let mut c: VecDeque<(usize, Monomial)> = self
            .active
            .iter()
            .map(|&g| (g, lmh.lcm(self.lm(g))))
            .collect();
        let mut d: Vec<(usize, Monomial)> = Vec::new();
        while let Some((g1, l1)) = c.pop_front() {
            let keep = lmh.coprime(self.lm(g1))
                || (!c.iter().any(|(_, l2)| l2.divides(&l1)) && !d.iter().any(|(_, l2)| l2.divides(&l1)));
            if keep {
                d.push((g1, l1));
            }
        }
        let fresh: Vec<Pair> = d
            .into_iter()
            .filter(|(g, _)| !lmh.coprime(self.lm(*g)))
            .map(|(g, l)| Pair { i: g, j: h, lcm: l })
            .collect();
        let old = std::mem::take(&mut self.pairs);
        let kept: Vec<Pair> = old
            .into_iter()
            .filter(|p| {
                !lmh.divides(&p.lcm)
                    || self.lm(p.i).lcm(&lmh) == p.lcm
                    || self.lm(p.j).lcm(&lmh) == p.lcm
            })
            .collect();
        self.pairs = kept;
        self.pairs.extend(fresh);
        let active = std::mem::take(&mut self.active);
        self.active = active
            .into_iter()
            .filter(|&g| !lmh.divides(self.lm(g)))
            .collect();
        self.active.push(h);
    }

    fn insert(&mut self, mut e: Elem) -> Result<(), GbError> {
        let by = self.active.clone();
        self.reduce(&mut e, &by)?;
        if e.poly.is_zero() {
            return Ok(());
        }
        Self::make_monic(&mut e);
        self.elems.push(e);
        let h = self.elems.len() - 1;
        self.update(h);
        Ok(())
    }

    fn next_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let ring = self.ring;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let ord = ring
                .cmp_monomials(&a.lcm, &b.lcm)
                .then((a.i, a.j).cmp(&(b.i, b.j)));
            if ord == std::cmp::Ordering::Less {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, p: &Pair) -> Elem {
        let (a, b) = (&self.elems[p.i], &self.elems[p.j]);
        let one = self.ring.field().one();
        let ma = p.lcm.checked_div(self.lm(p.i)).unwrap();
        let mb = p.lcm.checked_div(self.lm(p.j)).unwrap();
        let poly = &a.poly.mul_term(&ma, &one) - &b.poly.mul_term(&mb, &one);
        let rep = match (&a.rep, &b.rep) {
            (Some(ra), Some(rb)) => Some(
                ra.iter()
                    .zip(rb)
                    .map(|(x, y)| &x.mul_term(&ma, &one) - &y.mul_term(&mb, &one))
                    .collect(),
            ),
            _ => None,
        };
        Elem { poly, rep }
    }
}

/// Reduced Groebner basis of `gens` in the order of `ring`.
pub(crate) fn groebner(
    ring: &PolyRing,
    gens: &[Polynomial],
    track: bool,
    limit: u64,
) -> Result<Basis, GbError> {
    let mut eng = Engine {
        ring,
        elems: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        budget: Budget::new(limit),
    };
    let n = gens.len();
    for (k, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let rep = track.then(|| {
            (0..n)
                .map(|j| if j == k { ring.one() } else { ring.zero() })
                .collect()
        });
        eng.insert(Elem { poly: g.clone(), rep })?;
    }
    while let Some(p) = eng.next_pair() {
        let s = eng.spoly(&p);
        eng.insert(s)?;
    }
    // interreduce the minimal basis
    let mut active = eng.active.clone();
    active.sort_by(|&a, &b| ring.cmp_monomials(eng.lm(a), eng.lm(b)));
    let mut polys = Vec::with_capacity(active.len());
    let mut reps = track.then(Vec::new);
    for (pos, &k) in active.iter().enumerate() {
        let others: Vec<usize> = active
            .iter()
            .enumerate()
            .filter(|&(q, _)| q != pos)
            .map(|(_, &o)| o)
            .collect();
        let mut e = Elem {
            poly: eng.elems[k].poly.clone(),
            rep: eng.elems[k].rep.clone(),
        };
        eng.reduce(&mut e, &others)?;
        Engine::make_monic(&mut e);
        polys.push(e.poly);
        if let (Some(rs), Some(r)) = (reps.as_mut(), e.rep) {
            rs.push(r);
        }
    }
    Ok(Basis { polys, reps })
}

/// Quotients of `p` against a basis, as polynomials, and the remainder.
pub(crate) fn divide_with_quotients(
    p: &Polynomial,
    basis: &[Polynomial],
    limit: u64,
) -> Result<(Vec<Polynomial>, Polynomial), GbError> {
    let divisors: Vec<&Polynomial> = basis.iter().collect();
    let mut budget = Budget::new(limit);
    let d = divide(p, &divisors, true, &mut budget)?;
    let qs = d
        .quotients
        .into_iter()
        .map(|q| Polynomial::from_terms(p.ring(), q))
        .collect();
    Ok((qs, d.remainder))
}

pub(crate) fn reduce_by(p: &Polynomial, basis: &[Polynomial], limit: u64) -> Result<Polynomial, GbError> {
    let divisors: Vec<&Polynomial> = basis.iter().collect();
    let mut budget = Budget::new(limit);
    Ok(divide(p, &divisors, false, &mut budget)?.remainder)
}

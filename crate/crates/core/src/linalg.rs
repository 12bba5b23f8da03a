//! Sparse linear algebra over the coefficient field, on coordinates with
//! respect to the monomials of bounded weighted degree.

use std::collections::{BTreeMap, HashMap};

use xsquare_algebra::poly::monomials_of_degree;
use xsquare_algebra::{Coeff, Ideal, Monomial, MonomialOrder, PolyRing, Polynomial, RingHom};

use crate::Result;

/// Sorted by index, no zero entries.
pub type SparseVec = Vec<(usize, Coeff)>;

/// The monomials of weighted degree `<= d`, indexed.
#[derive(Clone, Debug)]
pub struct MonomialIndex {
    ring: PolyRing,
    mons: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialIndex {
    pub fn upto(ring: &PolyRing, d: u64) -> Self {
        let mut mons = Vec::new();
        for e in 0..=d {
            mons.extend(monomials_of_degree(ring.weights(), e));
        }
        let index = mons.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        MonomialIndex { ring: ring.clone(), mons, index }
    }

    pub fn len(&self) -> usize {
        self.mons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mons.is_empty()
    }

    /// `None` if `p` has a term beyond the bound.
    pub fn coords(&self, p: &Polynomial) -> Option<SparseVec> {
        let mut v: SparseVec = p
            .terms()
            .iter()
            .map(|(m, c)| self.index.get(m).map(|&i| (i, c.clone())))
            .collect::<Option<_>>()?;
        v.sort_by_key(|e| e.0);
        Some(v)
    }

    pub fn poly(&self, v: &SparseVec) -> Polynomial {
        Polynomial::from_terms(&self.ring, v.iter().map(|(i, c)| (self.mons[*i].clone(), c.clone())))
    }
}

/// `a + k b`.
fn axpy(a: &SparseVec, k: &Coeff, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, k * &b[j].1));
            j += 1;
        } else {
            let c = &a[i].1 + &(k * &b[j].1);
            if !c.is_zero() {
                out.push((a[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// A subspace in row echelon form, rows keyed by pivot with pivot entry 1.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn spanned_by(vectors: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut e = Echelon::new();
        for v in vectors {
            e.insert(v);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut pos = 0;
        while pos < v.len() {
            let (i, c) = (v[pos].0, v[pos].1.clone());
            match self.rows.get(&i) {
                Some(row) => v = axpy(&v, &-&c, row),
                None => pos += 1,
            }
        }
        v
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((pivot, lead)) = r.first().cloned() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero field element");
        let row = r.into_iter().map(|(i, c)| (i, &c * &inv)).collect();
        self.rows.insert(pivot, row);
        true
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }
}

/// The same ideal over a degree-compatible order, so that its basis spans
/// every filtered piece.
fn degree_compatible(ideal: &Ideal) -> Result<Ideal> {
    let ring = ideal.ring();
    if ring.order().is_degree_compatible(ring.nvars()) {
        return Ok(ideal.clone());
    }
    Ok(ideal.reorder(&ring.with_order(MonomialOrder::DegRevLex)?)?)
}

/// A spanning set of `I_{<=d}`: `m g` over basis elements `g` and monomials
/// `m` with `deg(m g) <= d`. Returned in the ideal's own ring.
pub fn ideal_piece(ideal: &Ideal, d: u64) -> Result<Vec<Polynomial>> {
    let ring = ideal.ring().clone();
    let work = degree_compatible(ideal)?;
    let mut out = Vec::new();
    for g in work.groebner_basis()? {
        let Some(dg) = g.degree() else { continue };
        if dg > d {
            continue;
        }
        let g = g.transfer_by_name(&ring)?;
        let one = ring.field().one();
        for e in 0..=d - dg {
            for m in monomials_of_degree(ring.weights(), e) {
                out.push(g.mul_term(&m, &one));
            }
        }
    }
    Ok(out)
}

/// Echelon form of `span(polys)` in `index` coordinates; polynomials beyond
/// the bound are an error of the caller and panic.
pub fn span_of(index: &MonomialIndex, polys: &[Polynomial]) -> Echelon {
    Echelon::spanned_by(polys.iter().map(|p| index.coords(p).expect("polynomial within the degree bound")))
}

/// `dim I_{<=d}`.
pub fn piece_dim(ideal: &Ideal, d: u64) -> Result<usize> {
    let index = MonomialIndex::upto(ideal.ring(), d);
    Ok(span_of(&index, &ideal_piece(ideal, d)?).rank())
}

/// `dim f(span(polys))` for a ring map `f` that does not raise degree.
pub fn image_rank(f: &RingHom, polys: &[Polynomial], d: u64) -> usize {
    let index = MonomialIndex::upto(f.codomain(), d);
    let images: Vec<Polynomial> = polys.iter().map(|p| f.apply(p)).collect();
    span_of(&index, &images).rank()
}

//! Brute-force linear algebra oracles for tests.
//!
//! Everything here works degree by degree on explicit monomial bases with
//! exact Gaussian elimination, and never touches the Groebner engine. For
//! homogeneous ideals the Macaulay span in degree `d` is exactly `I_d`.

use std::collections::HashMap;

use xsquare_algebra::poly::{monomials_of_degree, Coeff, Field, Monomial, PolyRing, Polynomial, RingHom};

/// Basis of the degree-`d` piece (or the degree `<= d` piece) of a free
/// module `R^n` whose `i`-th generator sits in degree `shifts[i]`.
#[derive(Clone)]
pub struct DegreeBasis {
    ring: PolyRing,
    items: Vec<(usize, Monomial)>,
    index: HashMap<(usize, Monomial), usize>,
}

impl DegreeBasis {
    pub fn ring_piece(ring: &PolyRing, d: u64) -> Self {
        Self::module_piece(ring, &[0], d)
    }

    pub fn module_piece(ring: &PolyRing, shifts: &[u64], d: u64) -> Self {
        Self::build(ring, shifts, d..=d)
    }

    /// All degrees `0..=d`.
    pub fn ring_upto(ring: &PolyRing, d: u64) -> Self {
        Self::build(ring, &[0], 0..=d)
    }

    fn build(ring: &PolyRing, shifts: &[u64], degrees: std::ops::RangeInclusive<u64>) -> Self {
        let mut items = Vec::new();
        for d in degrees {
            for (i, &s) in shifts.iter().enumerate() {
                if d < s {
                    continue;
                }
                for m in monomials_of_degree(ring.weights(), d - s) {
                    items.push((i, m));
                }
            }
        }
        let index = items.iter().cloned().enumerate().map(|(k, it)| (it, k)).collect();
        DegreeBasis { ring: ring.clone(), items, index }
    }

    pub fn dim(&self) -> usize {
        self.items.len()
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn items(&self) -> &[(usize, Monomial)] {
        &self.items
    }

    /// Coordinates of a module element. `None` if some term lies outside.
    pub fn try_coords(&self, v: &[Polynomial]) -> Option<Vec<Coeff>> {
        let mut out = vec![self.ring.field().zero(); self.dim()];
        for (i, p) in v.iter().enumerate() {
            for (m, c) in p.terms() {
                let k = *self.index.get(&(i, m.clone()))?;
                out[k] = c.clone();
            }
        }
        Some(out)
    }

    pub fn coords(&self, v: &[Polynomial]) -> Vec<Coeff> {
        self.try_coords(v).expect("element outside the degree piece")
    }

    pub fn poly_coords(&self, p: &Polynomial) -> Vec<Coeff> {
        self.coords(std::slice::from_ref(p))
    }

    pub fn element(&self, c: &[Coeff], rank: usize) -> Vec<Polynomial> {
        let mut parts: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); rank];
        for (k, x) in c.iter().enumerate() {
            if !x.is_zero() {
                let (i, m) = &self.items[k];
                parts[*i].push((m.clone(), x.clone()));
            }
        }
        parts.into_iter().map(|t| Polynomial::from_terms(&self.ring, t)).collect()
    }

    pub fn poly(&self, c: &[Coeff]) -> Polynomial {
        self.element(c, 1).pop().unwrap()
    }

    pub fn basis_poly(&self, k: usize) -> Polynomial {
        let (_, m) = &self.items[k];
        Polynomial::monomial(&self.ring, m.clone(), self.ring.field().one())
    }
}

/// A subspace of `field^n` kept in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Subspace {
    field: Field,
    n: usize,
    rows: Vec<Vec<Coeff>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, n: usize) -> Self {
        Subspace { field, n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn span(field: Field, n: usize, vectors: impl IntoIterator<Item = Vec<Coeff>>) -> Self {
        let mut s = Self::zero(field, n);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[Vec<Coeff>] {
        &self.rows
    }

    fn reduce(&self, mut v: Vec<Coeff>) -> Vec<Coeff> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (a, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *a = &*a - &(&f * b);
                }
            }
        }
        v
    }

    /// Adds a vector; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<Coeff>) -> bool {
        assert_eq!(v.len(), self.n, "vector length");
        let v = self.reduce(v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().unwrap();
        let v: Vec<Coeff> = v.iter().map(|c| c * &inv).collect();
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (a, b) in row.iter_mut().zip(&v) {
                if !b.is_zero() {
                    *a = &*a - &(&f * b);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn contains(&self, v: &[Coeff]) -> bool {
        self.reduce(v.to_vec()).iter().all(|c| c.is_zero())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn equals(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone());
        }
        s
    }
}

/// Null space of the linear map whose `j`-th column is `columns[j]`.
pub fn kernel(field: Field, columns: &[Vec<Coeff>], target_dim: usize) -> Subspace {
    let n = columns.len();
    // row-reduce the matrix [A^T | I]; rows whose A-part vanishes span the kernel
    let mut rows: Vec<Vec<Coeff>> = columns
        .iter()
        .enumerate()
        .map(|(j, col)| {
            assert_eq!(col.len(), target_dim, "column length");
            let mut r = col.clone();
            r.extend((0..n).map(|k| if k == j { field.one() } else { field.zero() }));
            r
        })
        .collect();
    let mut lead = 0;
    for c in 0..target_dim {
        let Some(p) = (lead..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(lead, p);
        let inv = rows[lead][c].inv().unwrap();
        let pivot: Vec<Coeff> = rows[lead].iter().map(|x| x * &inv).collect();
        for r in (lead + 1)..rows.len() {
            if rows[r][c].is_zero() {
                continue;
            }
            let f = rows[r][c].clone();
            for (a, b) in rows[r].iter_mut().zip(&pivot) {
                if !b.is_zero() {
                    *a = &*a - &(&f * b);
                }
            }
        }
        rows[lead] = pivot;
        lead += 1;
    }
    Subspace::span(field, n, rows.into_iter().skip(lead).map(|r| r[target_dim..].to_vec()))
}

/// Image of a subspace under the linear map with the given columns.
pub fn image(field: Field, columns: &[Vec<Coeff>], target_dim: usize, of: &Subspace) -> Subspace {
    let mut out = Subspace::zero(field, target_dim);
    for v in of.basis() {
        let mut acc = vec![field.zero(); target_dim];
        for (x, col) in v.iter().zip(columns) {
            if x.is_zero() {
                continue;
            }
            for (a, b) in acc.iter_mut().zip(col) {
                if !b.is_zero() {
                    *a = &*a + &(x * b);
                }
            }
        }
        out.insert(acc);
    }
    out
}

/// `I_d` for an ideal generated by weighted-homogeneous `gens`.
pub fn macaulay_piece(ring: &PolyRing, gens: &[Polynomial], d: u64) -> Subspace {
    let basis = DegreeBasis::ring_piece(ring, d);
    let one = ring.field().one();
    let mut s = Subspace::zero(ring.field(), basis.dim());
    for g in gens {
        assert!(g.is_homogeneous(), "macaulay_piece needs homogeneous generators");
        let Some(dg) = g.degree() else { continue };
        if dg > d {
            continue;
        }
        for m in monomials_of_degree(ring.weights(), d - dg) {
            s.insert(basis.poly_coords(&g.mul_term(&m, &one)));
        }
    }
    s
}

/// Span of `m * g` with `deg(m * g) <= d`, inside the degree `<= d` space.
/// For inhomogeneous ideals this is a lower bound for `I ∩ V_{<=d}`.
pub fn macaulay_upto(ring: &PolyRing, gens: &[Polynomial], d: u64) -> (DegreeBasis, Subspace) {
    let basis = DegreeBasis::ring_upto(ring, d);
    let one = ring.field().one();
    let mut s = Subspace::zero(ring.field(), basis.dim());
    for g in gens {
        let Some(dg) = g.degree() else { continue };
        for e in 0..=d.saturating_sub(dg) {
            if dg > d {
                break;
            }
            for m in monomials_of_degree(ring.weights(), e) {
                s.insert(basis.poly_coords(&g.mul_term(&m, &one)));
            }
        }
    }
    (basis, s)
}

/// Columns of a graded ring map restricted to degree `d` (images of the
/// degree-`d` monomials, written in the codomain's degree-`d` basis).
pub fn hom_columns(h: &RingHom, d: u64) -> (DegreeBasis, DegreeBasis, Vec<Vec<Coeff>>) {
    let src = DegreeBasis::ring_piece(h.domain(), d);
    let dst = DegreeBasis::ring_piece(h.codomain(), d);
    let cols = (0..src.dim())
        .map(|k| dst.poly_coords(&h.apply(&src.basis_poly(k))))
        .collect();
    (src, dst, cols)
}

/// `∩ Ker h` in degree `d` of the common domain.
pub fn joint_kernel(homs: &[&RingHom], d: u64) -> (DegreeBasis, Subspace) {
    let dom = homs[0].domain().clone();
    let src = DegreeBasis::ring_piece(&dom, d);
    let mut cols: Vec<Vec<Coeff>> = vec![Vec::new(); src.dim()];
    let mut total = 0;
    for h in homs {
        let (_, dst, c) = hom_columns(h, d);
        total += dst.dim();
        for (col, part) in cols.iter_mut().zip(c) {
            col.extend(part);
        }
    }
    let k = kernel(dom.field(), &cols, total);
    (src, k)
}

/// Independent polynomial evaluation at a point.
pub fn eval(p: &Polynomial, point: &[Coeff]) -> Coeff {
    let field = p.ring().field();
    let mut acc = field.zero();
    for (m, c) in p.terms() {
        let mut t = c.clone();
        for (x, &e) in point.iter().zip(m.exponents()) {
            for _ in 0..e {
                t = &t * x;
            }
        }
        acc = &acc + &t;
    }
    acc
}

/// Relation vectors of `g` in degree `d`: kernel of `v -> sum v_i g_i` on the
/// degree-`d` piece of `R^n` with shifts `deg g_i`.
pub fn syzygy_piece(ring: &PolyRing, g: &[Polynomial], d: u64) -> (DegreeBasis, Subspace) {
    let shifts: Vec<u64> = g.iter().map(|p| p.degree().unwrap_or(0)).collect();
    let src = DegreeBasis::module_piece(ring, &shifts, d);
    let dst = DegreeBasis::ring_piece(ring, d);
    let one = ring.field().one();
    let cols: Vec<Vec<Coeff>> = src
        .items()
        .iter()
        .map(|(i, m)| dst.poly_coords(&g[*i].mul_term(m, &one)))
        .collect();
    let k = kernel(ring.field(), &cols, dst.dim());
    (src, k)
}

/// Degree-`d` piece of the submodule of `R^n` generated by `vectors`
/// (homogeneous with respect to `shifts`).
pub fn submodule_piece(ring: &PolyRing, shifts: &[u64], vectors: &[Vec<Polynomial>], d: u64) -> (DegreeBasis, Subspace) {
    let basis = DegreeBasis::module_piece(ring, shifts, d);
    let one = ring.field().one();
    let mut s = Subspace::zero(ring.field(), basis.dim());
    for v in vectors {
        let dv = v
            .iter()
            .zip(shifts)
            .filter_map(|(c, s)| c.degree().map(|e| e + s))
            .max();
        let Some(dv) = dv else { continue };
        if dv > d {
            continue;
        }
        for m in monomials_of_degree(ring.weights(), d - dv) {
            let w: Vec<Polynomial> = v.iter().map(|c| c.mul_term(&m, &one)).collect();
            s.insert(basis.coords(&w));
        }
    }
    (basis, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use xsquare_algebra::parse_poly;

    #[test]
    fn kernel_of_a_small_map() {
        let f = Field::Rational;
        // columns (1,1), (2,2), (0,1): kernel spanned by (2,-1,0)
        let cols = vec![
            vec![f.from_i64(1), f.from_i64(1)],
            vec![f.from_i64(2), f.from_i64(2)],
            vec![f.from_i64(0), f.from_i64(1)],
        ];
        let k = kernel(f, &cols, 2);
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[f.from_i64(2), f.from_i64(-1), f.from_i64(0)]));
    }

    #[test]
    fn macaulay_of_monomial_ideal() {
        let r = PolyRing::new(&["x", "y"], Field::Rational).unwrap();
        let g = vec![parse_poly("x^2", &r).unwrap(), parse_poly("x*y", &r).unwrap()];
        assert_eq!(macaulay_piece(&r, &g, 3).dim(), 3);
        let (_, syz) = syzygy_piece(&r, &g, 3);
        assert_eq!(syz.dim(), 1);
    }
}

use std::fmt;

use crate::poly::{Field, MonomialOrder, PolyRing, Polynomial};

use super::engine::divide_with_quotients;
use super::{GbError, Ideal};

/// Element of a free module `R^n`.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeModuleVector {
    coords: Vec<Polynomial>,
}

impl FreeModuleVector {
    pub fn new(coords: Vec<Polynomial>) -> Self {
        if let Some(first) = coords.first() {
            assert!(coords.iter().all(|c| c.ring() == first.ring()), "coordinates share a ring");
        }
        FreeModuleVector { coords }
    }

    pub fn zero(ring: &PolyRing, rank: usize) -> Self {
        FreeModuleVector { coords: vec![ring.zero(); rank] }
    }

    pub fn unit(ring: &PolyRing, rank: usize, i: usize) -> Self {
        let mut v = Self::zero(ring, rank);
        v.coords[i] = ring.one();
        v
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Polynomial] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// `sum v_i * g_i`.
    pub fn dot(&self, g: &[Polynomial]) -> Polynomial {
        assert_eq!(g.len(), self.rank(), "rank");
        let ring = g.first().map(|p| p.ring().clone()).unwrap_or_else(|| self.coords[0].ring().clone());
        let mut acc = ring.zero();
        for (a, b) in self.coords.iter().zip(g) {
            if !a.is_zero() && !b.is_zero() {
                acc = &acc + &(a * b);
            }
        }
        acc
    }

    pub fn add(&self, other: &FreeModuleVector) -> FreeModuleVector {
        FreeModuleVector::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &FreeModuleVector) -> FreeModuleVector {
        FreeModuleVector::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, p: &Polynomial) -> FreeModuleVector {
        FreeModuleVector::new(self.coords.iter().map(|a| a * p).collect())
    }

    pub fn neg(&self) -> FreeModuleVector {
        FreeModuleVector::new(self.coords.iter().map(|a| -a).collect())
    }

    /// Largest weighted degree where coordinate `i` carries the shift `shifts[i]`.
    pub fn degree(&self, shifts: &[u64]) -> Option<u64> {
        self.coords
            .iter()
            .zip(shifts)
            .filter_map(|(c, s)| c.degree().map(|d| d + s))
            .max()
    }
}

impl fmt::Display for FreeModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for FreeModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Generators of the relation module of a tuple.
#[derive(Clone, Debug)]
pub struct SyzygyBasis {
    pub tuple: Vec<Polynomial>,
    pub vectors: Vec<FreeModuleVector>,
}

impl SyzygyBasis {
    pub fn verify(&self) -> bool {
        self.vectors.iter().all(|v| v.dot(&self.tuple).is_zero())
    }
}

/// Relation module of `g` from a cofactor-tracked basis: every S-pair of the
/// reduced basis, pulled back to `g`, together with the rows `e_j - B_j A`
/// expressing the round trip generators -> basis -> generators.
pub fn syzygies(g: &[Polynomial], budget: u64) -> Result<SyzygyBasis, GbError> {
    assert!(!g.is_empty(), "syzygies of an empty tuple");
    let ring = g[0].ring().clone();
    let n = g.len();
    let nonzero: Vec<usize> = (0..n).filter(|&j| !g[j].is_zero()).collect();
    let mut out: Vec<FreeModuleVector> = Vec::new();
    for j in 0..n {
        if g[j].is_zero() {
            out.push(FreeModuleVector::unit(&ring, n, j));
        }
    }
    let ideal = Ideal::new(&ring, g.to_vec())?.with_budget(budget);
    let (basis, reps) = ideal.tracked_basis()?;
    // widen reps from the nonzero generators to all of g
    let a: Vec<FreeModuleVector> = reps
        .into_iter()
        .map(|r| {
            let mut v = FreeModuleVector::zero(&ring, n);
            for (k, c) in nonzero.iter().zip(r) {
                v.coords[*k] = c;
            }
            v
        })
        .collect();
    let pull_back = |coeffs: &[Polynomial]| -> FreeModuleVector {
        let mut v = FreeModuleVector::zero(&ring, n);
        for (c, row) in coeffs.iter().zip(&a) {
            if !c.is_zero() {
                v = v.add(&row.scale(c));
            }
        }
        v
    };
    for &j in &nonzero {
        let (qs, r) = divide_with_quotients(&g[j], &basis, budget)?;
        debug_assert!(r.is_zero());
        let v = FreeModuleVector::unit(&ring, n, j).sub(&pull_back(&qs));
        out.push(v);
    }
    let one = ring.field().one();
    for k in 0..basis.len() {
        for l in (k + 1)..basis.len() {
            let (lk, ll) = (basis[k].leading_monomial().unwrap(), basis[l].leading_monomial().unwrap());
            let lcm = lk.lcm(ll);
            let mk = lcm.checked_div(lk).unwrap();
            let ml = lcm.checked_div(ll).unwrap();
            let s = &basis[k].mul_term(&mk, &one) - &basis[l].mul_term(&ml, &one);
            let (mut qs, r) = divide_with_quotients(&s, &basis, budget)?;
            debug_assert!(r.is_zero());
            qs[k] = &qs[k] - &Polynomial::monomial(&ring, mk.clone(), one.clone());
            qs[l] = &qs[l] + &Polynomial::monomial(&ring, ml.clone(), one.clone());
            out.push(pull_back(&qs).neg());
        }
    }
    let mut vectors: Vec<FreeModuleVector> = Vec::new();
    for v in out {
        if v.is_zero() {
            continue;
        }
        let v = normalize_sign(v);
        if !vectors.contains(&v) {
            vectors.push(v);
        }
    }
    Ok(SyzygyBasis { tuple: g.to_vec(), vectors })
}

/// Scales so the first nonzero coordinate has leading coefficient 1.
fn normalize_sign(v: FreeModuleVector) -> FreeModuleVector {
    let lc = v
        .coords
        .iter()
        .find(|c| !c.is_zero())
        .and_then(|c| c.leading_coeff().cloned());
    match lc {
        Some(c) if !c.is_one() => {
            let inv = c.inv().unwrap();
            FreeModuleVector::new(v.coords.iter().map(|p| p.scale(&inv)).collect())
        }
        _ => v,
    }
}

/// Encodes a submodule `U` of `R^n` as the ideal `U_e + (e)^2` of `R[e_1..e_n]`,
/// `e_i` of weight `shifts[i]`. Module membership and Hilbert data of `R^n/U`
/// become ideal questions: `v ∈ U` iff `sum v_i e_i` is in the ideal, and the
/// quotient's Hilbert function is that of `R[e]/(U_e + (e)^2)` minus that of `R`.
pub struct ModuleEncoding {
    pub ring: PolyRing,
    pub base: PolyRing,
    pub rank: usize,
}

impl ModuleEncoding {
    pub fn new(base: &PolyRing, shifts: &[u32], prefix: &str) -> Result<Self, GbError> {
        let mut names: Vec<String> = base.names().to_vec();
        let mut weights: Vec<u32> = base.weights().to_vec();
        for (i, &s) in shifts.iter().enumerate() {
            let name = base.fresh_name(&format!("{prefix}{}", i + 1), &names);
            names.push(name);
            weights.push(s.max(1));
        }
        let ring = PolyRing::with_weights(&names, &weights, base.field(), MonomialOrder::DegRevLex)?;
        Ok(ModuleEncoding { ring, base: base.clone(), rank: shifts.len() })
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn basis_var(&self, i: usize) -> Polynomial {
        self.ring.var(self.base.nvars() + i)
    }

    pub fn embed_scalar(&self, p: &Polynomial) -> Result<Polynomial, GbError> {
        let map: Vec<Option<usize>> = (0..self.base.nvars()).map(Some).collect();
        Ok(p.transfer(&self.ring, &map)?)
    }

    pub fn encode(&self, v: &FreeModuleVector) -> Result<Polynomial, GbError> {
        let mut acc = self.ring.zero();
        for (i, c) in v.coords().iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &(&self.embed_scalar(c)? * &self.basis_var(i));
            }
        }
        Ok(acc)
    }

    /// Decodes an element of e-degree exactly one.
    pub fn decode(&self, p: &Polynomial) -> FreeModuleVector {
        let nb = self.base.nvars();
        let mut parts: Vec<Vec<_>> = vec![Vec::new(); self.rank];
        for (m, c) in p.terms() {
            let e: Vec<usize> = (0..self.rank).filter(|&i| m.exponent(nb + i) > 0).collect();
            assert!(e.len() == 1 && m.exponent(nb + e[0]) == 1, "not linear in the basis");
            let mono = crate::poly::Monomial::from_exponents(&m.exponents()[..nb]);
            parts[e[0]].push((mono, c.clone()));
        }
        FreeModuleVector::new(
            parts
                .into_iter()
                .map(|t| Polynomial::from_terms(&self.base, t))
                .collect(),
        )
    }

    /// `U_e + (e)^2`.
    pub fn submodule_ideal(&self, vectors: &[FreeModuleVector], budget: u64) -> Result<Ideal, GbError> {
        let mut gens = Vec::new();
        for v in vectors {
            gens.push(self.encode(v)?);
        }
        for i in 0..self.rank {
            for j in i..self.rank {
                gens.push(&self.basis_var(i) * &self.basis_var(j));
            }
        }
        Ok(Ideal::new(&self.ring, gens)?.with_budget(budget))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn polys(r: &PolyRing, s: &[&str]) -> Vec<Polynomial> {
        s.iter().map(|t| parse_poly(t, r).unwrap()).collect()
    }

    #[test]
    fn syzygy_examples() {
        let r = PolyRing::new(&["x", "y"], Field::Rational).unwrap();
        let s = syzygies(&polys(&r, &["x^2", "x*y"]), 10_000).unwrap();
        assert!(s.verify());
        assert_eq!(s.vectors.len(), 1);
        assert_eq!(s.vectors[0].to_string(), "(y, -x)");
        let s = syzygies(&polys(&r, &["x"]), 10_000).unwrap();
        assert!(s.vectors.is_empty());
        let s = syzygies(&polys(&r, &["x", "x"]), 10_000).unwrap();
        assert_eq!(s.vectors.len(), 1);
        assert_eq!(s.vectors[0].to_string(), "(1, -1)");
    }

    #[test]
    fn zero_entries_are_free_syzygies() {
        let r = PolyRing::new(&["x"], Field::Rational).unwrap();
        let s = syzygies(&polys(&r, &["0", "x"]), 10_000).unwrap();
        assert_eq!(s.vectors[0].to_string(), "(1, 0)");
    }

    #[test]
    fn module_encoding_roundtrip() {
        let r = PolyRing::new(&["x", "y"], Field::Rational).unwrap();
        let enc = ModuleEncoding::new(&r, &[2, 2], "e").unwrap();
        let v = FreeModuleVector::new(polys(&r, &["y", "-x"]));
        let p = enc.encode(&v).unwrap();
        assert_eq!(enc.decode(&p), v);
        let u = enc.submodule_ideal(&[v.clone()], 10_000).unwrap();
        assert!(u.contains(&enc.encode(&v.scale(&r.var(0))).unwrap()).unwrap());
        let w = FreeModuleVector::new(polys(&r, &["y", "0"]));
        assert!(!u.contains(&enc.encode(&w).unwrap()).unwrap());
    }
}

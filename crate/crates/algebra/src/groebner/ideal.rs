use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::poly::{PolyRing, Polynomial};

use super::engine::{divide_with_quotients, groebner, reduce_by};
use super::{GbError, DEFAULT_BUDGET};

/// An ideal given by generators, with a lazily computed reduced Groebner
/// basis in the order of its ring.
#[derive(Clone)]
pub struct Ideal {
    ring: PolyRing,
    gens: Vec<Polynomial>,
    budget: u64,
    basis: OnceLock<Result<Arc<Vec<Polynomial>>, GbError>>,
    tracked: OnceLock<Result<Arc<Tracked>, GbError>>,
}

struct Tracked {
    polys: Vec<Polynomial>,
    reps: Vec<Vec<Polynomial>>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &PolyRing, gens: Vec<Polynomial>) -> Result<Self, GbError> {
        for g in &gens {
            if g.ring() != ring {
                return Err(GbError::Poly(crate::poly::PolyError::RingMismatch(format!(
                    "generator in {:?}, ideal in {ring:?}",
                    g.ring()
                ))));
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            budget: DEFAULT_BUDGET,
            basis: OnceLock::new(),
            tracked: OnceLock::new(),
        })
    }

    pub fn zero(ring: &PolyRing) -> Self {
        Self::new(ring, Vec::new()).expect("empty generator list")
    }

    pub fn unit(ring: &PolyRing) -> Self {
        Self::new(ring, vec![ring.one()]).expect("same ring")
    }

    /// Replaces the reduction-step budget used for basis computations.
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self.basis = OnceLock::new();
        self.tracked = OnceLock::new();
        self
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    /// Reduced basis: monic, inter-reduced, ascending by leading monomial.
    pub fn groebner_basis(&self) -> Result<&[Polynomial], GbError> {
        let r = self.basis.get_or_init(|| {
            groebner(&self.ring, &self.gens, false, self.budget).map(|b| Arc::new(b.polys))
        });
        match r {
            Ok(b) => Ok(b.as_slice()),
            Err(e) => Err(e.clone()),
        }
    }

    fn tracked(&self) -> Result<Arc<Tracked>, GbError> {
        self.tracked
            .get_or_init(|| {
                let b = groebner(&self.ring, &self.gens, true, self.budget)?;
                Ok(Arc::new(Tracked {
                    polys: b.polys,
                    reps: b.reps.expect("tracking requested"),
                }))
            })
            .clone()
    }

    /// Basis together with the expression of each element in the generators.
    pub fn tracked_basis(&self) -> Result<(Vec<Polynomial>, Vec<Vec<Polynomial>>), GbError> {
        let t = self.tracked()?;
        Ok((t.polys.clone(), t.reps.clone()))
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial, GbError> {
        self.check_ring(p)?;
        reduce_by(p, self.groebner_basis()?, self.budget)
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool, GbError> {
        Ok(self.normal_form(p)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool, GbError> {
        for g in other.gens() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equal as ideals. Rings must have the same variables; orders may differ.
    pub fn equals(&self, other: &Ideal) -> Result<bool, GbError> {
        if !self.ring.same_variables(&other.ring) {
            return Err(GbError::Poly(crate::poly::PolyError::RingMismatch(format!(
                "{:?} vs {:?}",
                self.ring, other.ring
            ))));
        }
        if self.ring == other.ring {
            return Ok(self.groebner_basis()? == other.groebner_basis()?);
        }
        let moved = other.reorder(&self.ring)?;
        Ok(self.groebner_basis()? == moved.groebner_basis()?)
    }

    /// Cofactors `c` with `sum c_i * gens[i] = p`, against the generators as
    /// stored (zero generators were dropped at construction).
    pub fn lift_cofactors(&self, p: &Polynomial) -> Result<Vec<Polynomial>, GbError> {
        self.check_ring(p)?;
        let t = self.tracked()?;
        let (qs, r) = divide_with_quotients(p, &t.polys, self.budget)?;
        if !r.is_zero() {
            return Err(GbError::NotMember(r.to_string()));
        }
        let mut out = vec![self.ring.zero(); self.gens.len()];
        for (q, rep) in qs.iter().zip(&t.reps) {
            if q.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(rep) {
                if !a.is_zero() {
                    *o = &*o + &(q * a);
                }
            }
        }
        Ok(out)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal, GbError> {
        self.check_same_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Ideal::new(&self.ring, gens)?.with_budget(self.budget))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal, GbError> {
        self.check_same_ring(other)?;
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * b);
            }
        }
        Ok(Ideal::new(&self.ring, gens)?.with_budget(self.budget))
    }

    /// Adds generators.
    pub fn extend(&self, more: impl IntoIterator<Item = Polynomial>) -> Result<Ideal, GbError> {
        let mut gens = self.gens.clone();
        gens.extend(more);
        Ok(Ideal::new(&self.ring, gens)?.with_budget(self.budget))
    }

    pub fn is_unit(&self) -> Result<bool, GbError> {
        Ok(self.groebner_basis()?.iter().any(|g| g.is_constant()))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// The same ideal in a ring with the same variables but another order.
    pub fn reorder(&self, ring: &PolyRing) -> Result<Ideal, GbError> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.transfer_by_name(ring))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Ideal::new(ring, gens)?.with_budget(self.budget))
    }

    /// Moves generators into `ring` by variable name.
    pub fn transfer_by_name(&self, ring: &PolyRing) -> Result<Ideal, GbError> {
        self.reorder(ring)
    }

    fn check_ring(&self, p: &Polynomial) -> Result<(), GbError> {
        if p.ring() != &self.ring {
            return Err(GbError::Poly(crate::poly::PolyError::RingMismatch(format!(
                "{:?} vs {:?}",
                p.ring(),
                self.ring
            ))));
        }
        Ok(())
    }

    fn check_same_ring(&self, other: &Ideal) -> Result<(), GbError> {
        if self.ring != other.ring {
            return Err(GbError::Poly(crate::poly::PolyError::RingMismatch(format!(
                "{:?} vs {:?}",
                self.ring, other.ring
            ))));
        }
        Ok(())
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "Ideal({})", gens.join(", "))
    }
}

/// Reduced basis of the ideal generated by `gens`.
pub fn buchberger(ring: &PolyRing, gens: &[Polynomial], budget: u64) -> Result<Vec<Polynomial>, GbError> {
    Ok(groebner(ring, gens, false, budget)?.polys)
}

pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool, GbError> {
    a.equals(b)
}

use crate::poly::{monomials_of_degree, Monomial, MonomialOrder};

use super::{GbError, Ideal};

/// Dimensions of the degree `<= d` pieces for `d = 0..=max_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDims {
    pub max_degree: u64,
    pub dims: Vec<u64>,
}

impl GradedDims {
    pub fn from_graded(graded: &[u64]) -> Self {
        let mut acc = 0;
        let dims = graded
            .iter()
            .map(|&g| {
                acc += g;
                acc
            })
            .collect::<Vec<_>>();
        GradedDims { max_degree: dims.len().saturating_sub(1) as u64, dims }
    }

    pub fn zeros(max_degree: u64) -> Self {
        GradedDims { max_degree, dims: vec![0; max_degree as usize + 1] }
    }

    /// Per-degree dimensions (successive differences).
    pub fn graded(&self) -> Vec<u64> {
        let mut prev = 0;
        self.dims
            .iter()
            .map(|&d| {
                let g = d - prev;
                prev = d;
                g
            })
            .collect()
    }

    /// Entrywise difference; `None` if it would go negative.
    pub fn checked_sub(&self, other: &GradedDims) -> Option<GradedDims> {
        if self.dims.len() != other.dims.len() {
            return None;
        }
        let dims = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()?;
        Some(GradedDims { max_degree: self.max_degree, dims })
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.dims.windows(2).all(|w| w[0] <= w[1])
    }
}

/// Affine Hilbert function of `R/I`: the number of standard monomials of
/// weighted degree `<= d`. Uses a degree-compatible order, recomputing the
/// basis if the ring's own order is not one.
pub fn affine_hilbert(ideal: &Ideal, max_degree: u64) -> Result<GradedDims, GbError> {
    let ring = ideal.ring();
    let lms: Vec<Monomial> = if ring.order().is_degree_compatible(ring.nvars()) {
        leading(ideal)?
    } else {
        let graded = ring.with_order(MonomialOrder::DegRevLex)?;
        leading(&ideal.reorder(&graded)?)?
    };
    let mut graded = Vec::with_capacity(max_degree as usize + 1);
    for d in 0..=max_degree {
        let count = monomials_of_degree(ring.weights(), d)
            .iter()
            .filter(|m| !lms.iter().any(|l| l.divides(m)))
            .count();
        graded.push(count as u64);
    }
    Ok(GradedDims::from_graded(&graded))
}

fn leading(ideal: &Ideal) -> Result<Vec<Monomial>, GbError> {
    Ok(ideal
        .groebner_basis()?
        .iter()
        .map(|g| g.leading_monomial().unwrap().clone())
        .collect())
}

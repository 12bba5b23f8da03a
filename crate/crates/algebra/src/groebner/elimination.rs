//! Elimination with block orders: elimination ideals, kernels and preimages
//! of ring maps, and intersections via a tag variable.

use crate::poly::{MonomialOrder, PolyRing, Polynomial, RingHom};

use super::engine::reduce_by;
use super::{GbError, Ideal};

/// `I ∩ k[retained variables]`, returned in the ring of `I`.
pub fn eliminate(ideal: &Ideal, vars: &[usize]) -> Result<Ideal, GbError> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let mut elim = vec![false; n];
    for &v in vars {
        if v >= n {
            return Err(GbError::InvalidArgument(format!("variable index {v} out of range")));
        }
        elim[v] = true;
    }
    let order: Vec<usize> = (0..n).filter(|&i| elim[i]).chain((0..n).filter(|&i| !elim[i])).collect();
    let k = order.iter().filter(|&&i| elim[i]).count();
    if k == 0 {
        return Ok(ideal.clone());
    }
    let names: Vec<&str> = order.iter().map(|&i| ring.name(i)).collect();
    let weights: Vec<u32> = order.iter().map(|&i| ring.weights()[i]).collect();
    let joint = PolyRing::with_weights(&names, &weights, ring.field(), MonomialOrder::Block(k))?;
    let moved = ideal.reorder(&joint)?;
    let kept = moved
        .groebner_basis()?
        .iter()
        .filter(|g| (0..k).all(|v| !g.involves(v)))
        .map(|g| g.transfer_by_name(ring))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Ideal::new(ring, kept)?.with_budget(ideal.budget()))
}

/// `I ∩ J` as the `t`-free part of `t I + (1 - t) J`.
pub fn ideal_intersect(a: &Ideal, b: &Ideal) -> Result<Ideal, GbError> {
    let ring = a.ring();
    if ring != b.ring() {
        return Err(GbError::Poly(crate::poly::PolyError::RingMismatch(format!(
            "{ring:?} vs {:?}",
            b.ring()
        ))));
    }
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(ring).with_budget(a.budget()));
    }
    let t = ring.fresh_name("t", &[]);
    let mut names = vec![t];
    names.extend(ring.names().iter().cloned());
    let mut weights = vec![1];
    weights.extend(ring.weights());
    let joint = PolyRing::with_weights(&names, &weights, ring.field(), MonomialOrder::Block(1))?;
    let shift: Vec<Option<usize>> = (0..ring.nvars()).map(|i| Some(i + 1)).collect();
    let tv = joint.var(0);
    let one_minus_t = &joint.one() - &tv;
    let mut gens = Vec::new();
    for g in a.gens() {
        gens.push(&tv * &g.transfer(&joint, &shift)?);
    }
    for g in b.gens() {
        gens.push(&one_minus_t * &g.transfer(&joint, &shift)?);
    }
    let tagged = Ideal::new(&joint, gens)?.with_budget(a.budget().max(b.budget()));
    let back: Vec<Option<usize>> = std::iter::once(None).chain((0..ring.nvars()).map(Some)).collect();
    let kept = tagged
        .groebner_basis()?
        .iter()
        .filter(|g| !g.involves(0))
        .map(|g| g.transfer(ring, &back))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Ideal::new(ring, kept)?.with_budget(a.budget()))
}

/// The graph of a ring map `h: A -> B/J` inside `B ⊗ A`, with `B` variables
/// first under a block order. Serves kernels and preimages.
pub struct HomGraph {
    hom: RingHom,
    joint: PolyRing,
    ideal: Ideal,
    to_joint_dom: Vec<Option<usize>>,
    to_joint_cod: Vec<Option<usize>>,
    from_joint_dom: Vec<Option<usize>>,
}

impl HomGraph {
    pub fn new(hom: &RingHom, modulo: Option<&Ideal>, budget: u64) -> Result<Self, GbError> {
        let (dom, cod) = (hom.domain(), hom.codomain());
        let ncod = cod.nvars();
        let mut names: Vec<String> = Vec::new();
        for n in cod.names() {
            let fresh = dom.fresh_name(&format!("{n}_"), &names);
            names.push(fresh);
        }
        names.extend(dom.names().iter().cloned());
        let mut weights = cod.weights().to_vec();
        weights.extend(dom.weights());
        let joint = PolyRing::with_weights(&names, &weights, dom.field(), MonomialOrder::Block(ncod))?;
        let to_joint_cod: Vec<Option<usize>> = (0..ncod).map(Some).collect();
        let to_joint_dom: Vec<Option<usize>> = (0..dom.nvars()).map(|i| Some(ncod + i)).collect();
        let from_joint_dom: Vec<Option<usize>> = (0..ncod)
            .map(|_| None)
            .chain((0..dom.nvars()).map(Some))
            .collect();
        let mut gens = Vec::new();
        for (i, im) in hom.images().iter().enumerate() {
            gens.push(&joint.var(ncod + i) - &im.transfer(&joint, &to_joint_cod)?);
        }
        if let Some(j) = modulo {
            if j.ring() != cod {
                return Err(GbError::Poly(crate::poly::PolyError::RingMismatch(
                    "modulus ideal must live in the codomain".into(),
                )));
            }
            for g in j.gens() {
                gens.push(g.transfer(&joint, &to_joint_cod)?);
            }
        }
        let ideal = Ideal::new(&joint, gens)?.with_budget(budget);
        Ok(HomGraph {
            hom: hom.clone(),
            joint,
            ideal,
            to_joint_dom,
            to_joint_cod,
            from_joint_dom,
        })
    }

    pub fn hom(&self) -> &RingHom {
        &self.hom
    }

    /// Kernel of `A -> B/J`.
    pub fn kernel(&self) -> Result<Ideal, GbError> {
        let ncod = self.hom.codomain().nvars();
        let dom = self.hom.domain();
        let kept = self
            .ideal
            .groebner_basis()?
            .iter()
            .filter(|g| (0..ncod).all(|v| !g.involves(v)))
            .map(|g| g.transfer(dom, &self.from_joint_dom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Ideal::new(dom, kept)?.with_budget(self.ideal.budget()))
    }

    /// Some `a` with `h(a) ≡ p (mod J)`, or `None` if `p` is not in the image.
    pub fn preimage(&self, p: &Polynomial) -> Result<Option<Polynomial>, GbError> {
        let q = p.transfer(&self.joint, &self.to_joint_cod)?;
        let r = reduce_by(&q, self.ideal.groebner_basis()?, self.ideal.budget())?;
        let ncod = self.hom.codomain().nvars();
        if (0..ncod).any(|v| r.involves(v)) {
            return Ok(None);
        }
        Ok(Some(r.transfer(self.hom.domain(), &self.from_joint_dom)?))
    }

    pub fn embed_domain(&self, p: &Polynomial) -> Result<Polynomial, GbError> {
        Ok(p.transfer(&self.joint, &self.to_joint_dom)?)
    }
}

pub fn hom_kernel(hom: &RingHom, budget: u64) -> Result<Ideal, GbError> {
    HomGraph::new(hom, None, budget)?.kernel()
}

/// Kernel of `A -> B -> B/J`.
pub fn hom_kernel_modulo(hom: &RingHom, modulo: &Ideal, budget: u64) -> Result<Ideal, GbError> {
    HomGraph::new(hom, Some(modulo), budget)?.kernel()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, Field};

    fn ideal(r: &PolyRing, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| parse_poly(g, r).unwrap()).collect()).unwrap()
    }

    #[test]
    fn elimination_example() {
        let r = PolyRing::new(&["x", "y"], Field::Rational).unwrap();
        let e = eliminate(&ideal(&r, &["y - x^2", "y"]), &[1]).unwrap();
        assert!(e.equals(&ideal(&r, &["x^2"])).unwrap());
        assert!(eliminate(&Ideal::zero(&r), &[0]).unwrap().is_zero());
    }

    #[test]
    fn intersection_examples() {
        let r = PolyRing::new(&["x", "y"], Field::Rational).unwrap();
        let i = ideal(&r, &["x"]);
        let j = ideal(&r, &["y"]);
        assert!(ideal_intersect(&i, &j).unwrap().equals(&ideal(&r, &["x*y"])).unwrap());
        assert!(ideal_intersect(&i, &i).unwrap().equals(&i).unwrap());
    }

    #[test]
    fn kernels_of_fixture_a_faces() {
        let r1 = PolyRing::with_weights(&["x", "S"], &[1, 2], Field::Rational, MonomialOrder::DegRevLex).unwrap();
        let r0 = PolyRing::new(&["x"], Field::Rational).unwrap();
        let x = r0.var(0);
        let d0 = RingHom::new(&r1, &r0, vec![x.clone(), r0.zero()]).unwrap();
        let d1 = RingHom::new(&r1, &r0, vec![x.clone(), &x * &x]).unwrap();
        assert!(hom_kernel(&d0, 10_000).unwrap().equals(&ideal(&r1, &["S"])).unwrap());
        assert!(hom_kernel(&d1, 10_000).unwrap().equals(&ideal(&r1, &["S - x^2"])).unwrap());
        assert!(hom_kernel(&RingHom::identity(&r1), 10_000).unwrap().is_zero());
    }

    #[test]
    fn preimage_through_subalgebra() {
        let a = PolyRing::new(&["u"], Field::Rational).unwrap();
        let b = PolyRing::new(&["x"], Field::Rational).unwrap();
        let h = RingHom::new(&a, &b, vec![parse_poly("x^2", &b).unwrap()]).unwrap();
        let g = HomGraph::new(&h, None, 10_000).unwrap();
        let pre = g.preimage(&parse_poly("x^4 + 3", &b).unwrap()).unwrap().unwrap();
        assert_eq!(h.apply(&pre), parse_poly("x^4 + 3", &b).unwrap());
        assert!(g.preimage(&parse_poly("x", &b).unwrap()).unwrap().is_none());
        let modx3 = ideal(&b, &["x^3"]);
        let g = HomGraph::new(&h, Some(&modx3), 10_000).unwrap();
        assert!(g.preimage(&parse_poly("x^5 + x^2", &b).unwrap()).unwrap().is_some());
    }
}

use super::polynomial::{check_same, Polynomial};
use super::ring::PolyRing;
use super::PolyError;

/// A `k`-algebra homomorphism given by the images of the domain variables.
#[derive(Clone, Debug, PartialEq)]
pub struct RingHom {
    domain: PolyRing,
    codomain: PolyRing,
    images: Vec<Polynomial>,
}

impl RingHom {
    pub fn new(domain: &PolyRing, codomain: &PolyRing, images: Vec<Polynomial>) -> Result<Self, PolyError> {
        if images.len() != domain.nvars() {
            return Err(PolyError::RingMismatch(format!(
                "{} images for {} variables",
                images.len(),
                domain.nvars()
            )));
        }
        if domain.field() != codomain.field() {
            return Err(PolyError::RingMismatch("fields differ".into()));
        }
        for im in &images {
            check_same(im.ring(), codomain)?;
        }
        Ok(RingHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            images,
        })
    }

    pub fn identity(ring: &PolyRing) -> Self {
        let images = (0..ring.nvars()).map(|i| ring.var(i)).collect();
        RingHom {
            domain: ring.clone(),
            codomain: ring.clone(),
            images,
        }
    }

    /// Sends each domain variable to the codomain variable of the same name,
    /// or to zero if there is none.
    pub fn by_name(domain: &PolyRing, codomain: &PolyRing) -> Result<Self, PolyError> {
        let images = domain
            .names()
            .iter()
            .map(|n| codomain.var_named(n).unwrap_or_else(|| codomain.zero()))
            .collect();
        Self::new(domain, codomain, images)
    }

    pub fn domain(&self) -> &PolyRing {
        &self.domain
    }

    pub fn codomain(&self) -> &PolyRing {
        &self.codomain
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &Polynomial {
        &self.images[i]
    }

    pub fn checked_apply(&self, p: &Polynomial) -> Result<Polynomial, PolyError> {
        check_same(p.ring(), &self.domain)?;
        let n = self.domain.nvars();
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); n];
        let mut terms = Vec::new();
        for (m, c) in p.terms() {
            let mut acc = self.codomain.constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 || acc.is_zero() {
                    continue;
                }
                let cache = &mut powers[i];
                if cache.is_empty() {
                    cache.push(self.codomain.one());
                }
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap() * &self.images[i];
                    cache.push(next);
                }
                acc = &acc * &cache[e as usize];
            }
            terms.extend(acc.terms().iter().cloned());
        }
        Ok(Polynomial::from_terms(&self.codomain, terms))
    }

    /// Substitution; panics on ring mismatch.
    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        match self.checked_apply(p) {
            Ok(q) => q,
            Err(e) => panic!("{e}"),
        }
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &RingHom) -> Result<RingHom, PolyError> {
        check_same(&self.codomain, &other.domain)?;
        let images = self
            .images
            .iter()
            .map(|p| other.apply(p))
            .collect();
        RingHom::new(&self.domain, &other.codomain, images)
    }

    /// Equality as maps: same rings and same images.
    pub fn agrees_with(&self, other: &RingHom) -> bool {
        self.domain == other.domain && self.codomain == other.codomain && self.images == other.images
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, Field};

    #[test]
    fn faces_of_fixture_a() {
        let r1 = PolyRing::new(&["x", "S"], Field::Rational).unwrap();
        let r0 = PolyRing::new(&["x"], Field::Rational).unwrap();
        let x = r0.var(0);
        let d0 = RingHom::new(&r1, &r0, vec![x.clone(), r0.zero()]).unwrap();
        let d1 = RingHom::new(&r1, &r0, vec![x.clone(), &x * &x]).unwrap();
        let s = r1.var(1);
        assert!(d0.apply(&s).is_zero());
        assert_eq!(d1.apply(&s), parse_poly("x^2", &r0).unwrap());
        let p = parse_poly("S^2 - x*S + 3", &r1).unwrap();
        assert_eq!(RingHom::identity(&r1).apply(&p), p);
    }

    #[test]
    fn composition_matches_sequential_application() {
        let a = PolyRing::new(&["u", "v"], Field::Rational).unwrap();
        let b = PolyRing::new(&["x", "y"], Field::Rational).unwrap();
        let h = RingHom::new(&a, &b, vec![parse_poly("x+y", &b).unwrap(), parse_poly("x*y", &b).unwrap()]).unwrap();
        let g = RingHom::new(&b, &b, vec![parse_poly("y^2", &b).unwrap(), parse_poly("x-1", &b).unwrap()]).unwrap();
        let p = parse_poly("u^3 - 2*u*v + 5", &a).unwrap();
        assert_eq!(h.then(&g).unwrap().apply(&p), g.apply(&h.apply(&p)));
    }

    #[test]
    fn rejects_bad_image_count() {
        let a = PolyRing::new(&["u"], Field::Rational).unwrap();
        assert!(RingHom::new(&a, &a, vec![]).is_err());
    }
}

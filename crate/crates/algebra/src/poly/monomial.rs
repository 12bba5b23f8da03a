use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Exponent vector aligned with a ring's variable list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[u16; 16]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn var(nvars: usize, i: usize, exp: u16) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = exp;
        m
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = self.0.clone();
        for (a, &b) in out.iter_mut().zip(other.0.iter()) {
            *a = a.checked_add(b)?;
        }
        Some(Monomial(out))
    }

    /// Product; panics if an exponent overflows `u16`.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("monomial exponent overflow")
    }

    pub fn checked_pow(&self, e: u32) -> Option<Monomial> {
        let mut out = self.0.clone();
        for a in out.iter_mut() {
            let v = (*a as u32).checked_mul(e)?;
            *a = u16::try_from(v).ok()?;
        }
        Some(Monomial(out))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = self.0.clone();
        for (a, &b) in out.iter_mut().zip(other.0.iter()) {
            *a = a.checked_sub(b)?;
        }
        Some(Monomial(out))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub(crate) fn exponents_mut(&mut self) -> &mut SmallVec<[u16; 16]> {
        &mut self.0
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// Monomial orders. `DegRevLex` and the blocks of `Block` use weighted degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    /// Weighted degrevlex on the first `k` variables, ties broken by weighted
    /// degrevlex on the rest. Eliminates the first block.
    Block(usize),
}

impl MonomialOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial, weights: &[u32]) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::Lex => ea.cmp(eb),
            MonomialOrder::DegRevLex => grevlex(ea, eb, weights),
            MonomialOrder::Block(k) => {
                let k = k.min(ea.len());
                grevlex(&ea[..k], &eb[..k], &weights[..k])
                    .then_with(|| grevlex(&ea[k..], &eb[k..], &weights[k..]))
            }
        }
    }

    /// Whether the order refines weighted degree, so leading terms see the
    /// top filtered piece.
    pub fn is_degree_compatible(self, nvars: usize) -> bool {
        match self {
            MonomialOrder::DegRevLex => true,
            MonomialOrder::Lex => nvars <= 1,
            MonomialOrder::Block(k) => k == 0 || k >= nvars,
        }
    }
}

fn grevlex(a: &[u16], b: &[u16], w: &[u32]) -> Ordering {
    let da: u64 = a.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum();
    let db: u64 = b.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum();
    da.cmp(&db).then_with(|| {
        for i in (0..a.len()).rev() {
            if a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    })
}

/// All monomials in `weights.len()` variables of weighted degree exactly `d`.
pub fn monomials_of_degree(weights: &[u32], d: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u16; weights.len()];
    fill(weights, 0, d, &mut cur, &mut out);
    out
}

fn fill(weights: &[u32], i: usize, rest: u64, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
    if i == weights.len() {
        if rest == 0 {
            out.push(Monomial::from_exponents(cur));
        }
        return;
    }
    let w = weights[i] as u64;
    let mut e = 0u64;
    while e * w <= rest {
        cur[i] = e as u16;
        fill(weights, i + 1, rest - e * w, cur, out);
        e += 1;
    }
    cur[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_breaks_ties_from_the_last_variable() {
        let o = MonomialOrder::DegRevLex;
        let w = [1, 1, 1];
        // x*z < y^2 in degrevlex
        assert_eq!(o.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0]), &w), Ordering::Less);
        assert_eq!(o.compare(&m(&[2, 0, 0]), &m(&[0, 1, 0]), &w), Ordering::Greater);
    }

    #[test]
    fn weights_change_degree() {
        let o = MonomialOrder::DegRevLex;
        // S of weight 2 beats x
        assert_eq!(o.compare(&m(&[0, 1]), &m(&[1, 0]), &[1, 2]), Ordering::Greater);
        assert_eq!(o.compare(&m(&[2, 0]), &m(&[0, 1]), &[1, 2]), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_first_block() {
        let o = MonomialOrder::Block(1);
        // t beats any monomial free of t
        assert_eq!(o.compare(&m(&[1, 0, 0]), &m(&[0, 9, 9]), &[1, 1, 1]), Ordering::Greater);
    }

    #[test]
    fn degree_enumeration_counts() {
        assert_eq!(monomials_of_degree(&[1, 1], 3).len(), 4);
        assert_eq!(monomials_of_degree(&[1, 2], 4).len(), 3);
        assert_eq!(monomials_of_degree(&[], 0).len(), 1);
        assert!(monomials_of_degree(&[2], 3).is_empty());
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[2, 1]);
        let b = m(&[1, 3]);
        assert_eq!(a.lcm(&b), m(&[2, 3]));
        assert!(m(&[1, 1]).divides(&a));
        assert_eq!(a.checked_div(&m(&[1, 1])), Some(m(&[1, 0])));
        assert_eq!(a.checked_div(&b), None);
        assert!(m(&[1, 0]).coprime(&m(&[0, 4])));
    }
}

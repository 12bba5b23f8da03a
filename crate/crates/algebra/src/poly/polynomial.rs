use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Coeff;
use super::monomial::Monomial;
use super::ring::PolyRing;
use super::PolyError;

/// Sparse polynomial. Terms are stored in strictly descending monomial order
/// with no zero coefficients, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<(Monomial, Coeff)>,
}

pub(crate) fn check_same(a: &PolyRing, b: &PolyRing) -> Result<(), PolyError> {
    if a == b {
        Ok(())
    } else {
        Err(PolyError::RingMismatch(format!("{a:?} vs {b:?}")))
    }
}

impl Polynomial {
    pub fn zero(ring: &PolyRing) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn monomial(ring: &PolyRing, m: Monomial, c: Coeff) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial arity");
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(m, c)] }
    }

    /// Builds a canonical polynomial from arbitrary terms (duplicates summed).
    pub fn from_terms<I>(ring: &PolyRing, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Coeff)>,
    {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity");
            match acc.get_mut(&m) {
                Some(e) => *e = &*e + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &PolyRing, acc: HashMap<Monomial, Coeff>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Trusts the caller that `terms` are already canonical.
    pub(crate) fn from_sorted(ring: &PolyRing, terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp_monomials(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The constant coefficient.
    pub fn constant_term(&self) -> Coeff {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.ring.field().zero(),
        }
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn coeff_of(&self, m: &Monomial) -> Coeff {
        self.terms
            .binary_search_by(|(t, _)| self.ring.cmp_monomials(m, t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| self.ring.field().zero())
    }

    /// Largest weighted degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| self.ring.weighted_degree(m)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.iter().map(|(m, _)| self.ring.weighted_degree(m));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// The sum of terms of weighted degree `d`.
    pub fn homogeneous_part(&self, d: u64) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| self.ring.weighted_degree(m) == d)
            .cloned()
            .collect();
        Polynomial::from_sorted(&self.ring, terms)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(var) > 0)
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        check_same(&self.ring, &other.ring)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        check_same(&self.ring, &other.ring)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        check_same(&self.ring, &other.ring)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let rhs = |c: &Coeff| if negate { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match ring.cmp_monomials(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), rhs(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), rhs(c))));
        Polynomial::from_sorted(ring, out)
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut acc: HashMap<Monomial, Coeff> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(e) => *e = &*e + &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Polynomial::from_map(&self.ring, acc)
    }

    /// `c * m * self`. Monomial multiplication preserves the order, so no sort.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(t, d)| (t.mul(m), d * c))
            .collect();
        Polynomial::from_sorted(&self.ring, terms)
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// `self^e`; errors if an exponent would overflow.
    pub fn checked_pow(&self, e: u32) -> Result<Polynomial, PolyError> {
        if e == 0 {
            return Ok(self.ring.one());
        }
        if let Some(d) = self.terms.iter().flat_map(|(m, _)| m.exponents().iter()).max() {
            if (*d as u64) * (e as u64) > u16::MAX as u64 {
                return Err(PolyError::ExponentOverflow { pos: 0 });
            }
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            let mut cp = c.clone();
            for _ in 1..e {
                cp = &cp * c;
            }
            let m = m.checked_pow(e).ok_or(PolyError::ExponentOverflow { pos: 0 })?;
            return Ok(Polynomial::monomial(&self.ring, m, cp));
        }
        let mut base = self.clone();
        let mut acc = self.ring.one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.product(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.product(&base);
            }
        }
        Ok(acc)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        self.checked_pow(e).expect("exponent overflow")
    }

    /// Moves the polynomial into `target`, sending variable `i` to
    /// `var_map[i]`. Errors if a used variable has no image.
    pub fn transfer(&self, target: &PolyRing, var_map: &[Option<usize>]) -> Result<Polynomial, PolyError> {
        if self.ring.field() != target.field() {
            return Err(PolyError::RingMismatch("fields differ".into()));
        }
        let n = target.nvars();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut out = Monomial::one(n);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match var_map.get(i).copied().flatten() {
                    Some(j) => out.exponents_mut()[j] += e,
                    None => {
                        return Err(PolyError::RingMismatch(format!(
                            "variable `{}` has no image in {target:?}",
                            self.ring.name(i)
                        )))
                    }
                }
            }
            terms.push((out, c.clone()));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Transfer by matching variable names.
    pub fn transfer_by_name(&self, target: &PolyRing) -> Result<Polynomial, PolyError> {
        let map: Vec<Option<usize>> = self
            .ring
            .names()
            .iter()
            .map(|n| target.var_index(n))
            .collect();
        self.transfer(target, &map)
    }

    /// Replaces the term list from `start` on by `tail - c*m*g`, leaving the
    /// first `start` terms untouched. Requires `c*m*lt(g)` to be at most the
    /// term at `start`.
    pub(crate) fn sub_mul_from(&mut self, start: usize, c: &Coeff, m: &Monomial, g: &Polynomial) {
        let ring = self.ring.clone();
        let tail = self.terms.split_off(start);
        let mut out = Vec::with_capacity(tail.len() + g.terms.len());
        let mut gi = g.terms.iter().map(|(t, d)| (t.mul(m), -&(d * c))).peekable();
        let mut ti = tail.into_iter().peekable();
        loop {
            let ord = match (ti.peek(), gi.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(a), Some(b)) => ring.cmp_monomials(&a.0, &b.0),
            };
            match ord {
                Ordering::Greater => out.push(ti.next().unwrap()),
                Ordering::Less => out.push(gi.next().unwrap()),
                Ordering::Equal => {
                    let (ma, ca) = ti.next().unwrap();
                    let (_, cb) = gi.next().unwrap();
                    let s = &ca + &cb;
                    if !s.is_zero() {
                        out.push((ma, s));
                    }
                }
            }
        }
        self.terms.extend(out);
    }

    pub(crate) fn term(&self, i: usize) -> &(Monomial, Coeff) {
        &self.terms[i]
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                match self.$checked(rhs) {
                    Ok(p) => p,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial::from_sorted(&self.ring, terms)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Renders in the input grammar: `x^2*y - 3/2*y + 1`.
pub fn format_poly(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms.iter().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        let mono = format_monomial(&p.ring, m);
        if mono.is_empty() {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&a.to_string());
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

fn format_monomial(ring: &PolyRing, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.name(i).to_string()),
            _ => parts.push(format!("{}^{e}", ring.name(i))),
        }
    }
    parts.join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", format_poly(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    fn ring() -> PolyRing {
        PolyRing::new(&["x", "S"], Field::Rational).unwrap()
    }

    #[test]
    fn arithmetic_is_canonical() {
        let r = ring();
        let x = r.var(0);
        let s = r.var(1);
        let x2 = &x * &x;
        assert!((&x2 - &x2).is_zero());
        let p = &s * &(&s - &x2);
        assert_eq!(format_poly(&p), "-x^2*S + S^2");
        assert_eq!(p.len(), 2);
        assert_eq!(p.scale(&Field::Rational.one()), p);
    }

    #[test]
    fn formatting_signs_and_fractions() {
        let r = ring();
        let half = Field::Rational
            .from_ratio(&(-1).into(), &2.into())
            .unwrap();
        let p = &r.var(0).scale(&half) - &r.one();
        assert_eq!(format_poly(&p), "-1/2*x - 1");
        assert_eq!(format_poly(&-&r.var(1)), "-S");
        assert_eq!(format_poly(&r.zero()), "0");
    }

    #[test]
    fn pow_and_overflow() {
        let r = ring();
        let p = &r.var(0) + &r.one();
        assert_eq!(format_poly(&p.pow(2)), "x^2 + 2*x + 1");
        assert!(r.var(0).pow(300).checked_pow(300).is_err());
    }

    #[test]
    #[should_panic(expected = "ring mismatch")]
    fn mismatch_panics_in_operators() {
        let a = ring();
        let b = PolyRing::new(&["y"], Field::Rational).unwrap();
        let _ = &a.var(0) + &b.var(0);
    }

    #[test]
    fn transfer_renames() {
        let a = ring();
        let b = PolyRing::new(&["S", "z", "x"], Field::Rational).unwrap();
        let p = &a.var(0) * &a.var(1);
        let q = p.transfer_by_name(&b).unwrap();
        assert_eq!(format_poly(&q), "S*x");
        assert!(q.transfer_by_name(&PolyRing::new(&["x"], Field::Rational).unwrap()).is_err());
    }
}

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::field::{Coeff, Field};
use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::Polynomial;
use super::PolyError;

/// A polynomial ring `k[x_1, ..., x_n]` with positive integer variable weights
/// and a monomial order. Cheap to clone; equality compares contents.
#[derive(Clone)]
pub struct PolyRing {
    inner: Arc<RingData>,
}

struct RingData {
    names: Vec<String>,
    weights: Vec<u32>,
    field: Field,
    order: MonomialOrder,
    index: HashMap<String, usize>,
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    /// Unit weights, degrevlex.
    pub fn new<S: AsRef<str>>(names: &[S], field: Field) -> Result<Self, PolyError> {
        let weights = vec![1; names.len()];
        Self::with_weights(names, &weights, field, MonomialOrder::DegRevLex)
    }

    pub fn with_weights<S: AsRef<str>>(
        names: &[S],
        weights: &[u32],
        field: Field,
        order: MonomialOrder,
    ) -> Result<Self, PolyError> {
        if names.len() != weights.len() {
            return Err(PolyError::InvalidRing(format!(
                "{} names but {} weights",
                names.len(),
                weights.len()
            )));
        }
        if let Field::Prime(p) = field {
            if !Field::valid_prime(p as u64) {
                return Err(PolyError::InvalidRing(format!("{p} is not a supported prime")));
            }
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            let n = n.as_ref();
            if !is_identifier(n) {
                return Err(PolyError::InvalidRing(format!("`{n}` is not a valid variable name")));
            }
            if index.insert(n.to_string(), i).is_some() {
                return Err(PolyError::InvalidRing(format!("duplicate variable `{n}`")));
            }
        }
        if weights.contains(&0) {
            return Err(PolyError::InvalidRing("variable weights must be positive".into()));
        }
        if let MonomialOrder::Block(k) = order {
            if k > names.len() {
                return Err(PolyError::InvalidRing(format!(
                    "block size {k} exceeds {} variables",
                    names.len()
                )));
            }
        }
        Ok(PolyRing {
            inner: Arc::new(RingData {
                names: names.iter().map(|s| s.as_ref().to_string()).collect(),
                weights: weights.to_vec(),
                field,
                order,
                index,
            }),
        })
    }

    /// Same variables and weights under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Self, PolyError> {
        Self::with_weights(&self.inner.names, &self.inner.weights, self.inner.field, order)
    }

    pub fn nvars(&self) -> usize {
        self.inner.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.inner.names[i]
    }

    pub fn weights(&self) -> &[u32] {
        &self.inner.weights
    }

    pub fn field(&self) -> Field {
        self.inner.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.inner.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.inner.index.get(name).copied()
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::monomial(self, Monomial::var(self.nvars(), i, 1), self.field().one())
    }

    pub fn var_named(&self, name: &str) -> Option<Polynomial> {
        self.var_index(name).map(|i| self.var(i))
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self)
    }

    pub fn one(&self) -> Polynomial {
        self.constant(self.field().one())
    }

    pub fn constant(&self, c: Coeff) -> Polynomial {
        Polynomial::monomial(self, Monomial::one(self.nvars()), c)
    }

    pub fn from_i64(&self, n: i64) -> Polynomial {
        self.constant(self.field().from_i64(n))
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.inner.order.compare(a, b, &self.inner.weights)
    }

    pub fn weighted_degree(&self, m: &Monomial) -> u64 {
        m.weighted_degree(&self.inner.weights)
    }

    pub fn ptr_eq(&self, other: &PolyRing) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    /// Same variables, weights and field; the order may differ.
    pub fn same_variables(&self, other: &PolyRing) -> bool {
        self.ptr_eq(other)
            || (self.inner.names == other.inner.names
                && self.inner.weights == other.inner.weights
                && self.inner.field == other.inner.field)
    }

    /// A name not in `taken` and not in this ring, derived from `base`.
    pub fn fresh_name(&self, base: &str, taken: &[String]) -> String {
        let mut name = base.to_string();
        while self.var_index(&name).is_some() || taken.iter().any(|t| t == &name) {
            name.push('_');
        }
        name
    }
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        self.same_variables(other) && self.inner.order == other.inner.order
    }
}

impl Eq for PolyRing {}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = match self.inner.field {
            Field::Rational => "Q".to_string(),
            Field::Prime(p) => format!("F{p}"),
        };
        write!(f, "{field}[{}]", self.inner.names.join(","))?;
        if self.inner.weights.iter().any(|&w| w != 1) {
            write!(f, " weights {:?}", self.inner.weights)?;
        }
        write!(f, " {:?}", self.inner.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_rings() {
        assert!(PolyRing::new(&["x", "x"], Field::Rational).is_err());
        assert!(PolyRing::new(&["1x"], Field::Rational).is_err());
        assert!(PolyRing::new(&["x"], Field::Prime(10)).is_err());
        assert!(PolyRing::with_weights(&["x"], &[0], Field::Rational, MonomialOrder::DegRevLex).is_err());
        assert!(PolyRing::with_weights(&["x"], &[1], Field::Rational, MonomialOrder::Block(2)).is_err());
    }

    #[test]
    fn content_equality() {
        let a = PolyRing::new(&["x", "y"], Field::Rational).unwrap();
        let b = PolyRing::new(&["x", "y"], Field::Rational).unwrap();
        assert_eq!(a, b);
        let lex = a.with_order(MonomialOrder::Lex).unwrap();
        assert_ne!(a, lex);
        assert!(a.same_variables(&lex));
        assert_eq!(a.fresh_name("x", &[]), "x_");
    }
}

//! The pair `(q, t)` as elements of a coefficient field.

use super::field::Field;
use super::ratfunc::RatFunc;
use super::spec::{SpecMap, SpecRF};

/// Images of `q` and `t` (with cached inverses) in a field `F`.
#[derive(Clone, Debug, PartialEq)]
pub struct Params<F> {
    pub q: F,
    pub t: F,
    q_inv: F,
    t_inv: F,
}

impl<F: Field> Params<F> {
    pub fn new(q: F, t: F) -> Self {
        let q_inv = q.inverse().expect("q must be nonzero");
        let t_inv = t.inverse().expect("t must be nonzero");
        Params { q, t, q_inv, t_inv }
    }

    pub fn q_inv(&self) -> &F {
        &self.q_inv
    }

    pub fn t_inv(&self) -> &F {
        &self.t_inv
    }

    /// The parameters `(1/q, 1/t)`.
    pub fn inverted(&self) -> Self {
        Params {
            q: self.q_inv.clone(),
            t: self.t_inv.clone(),
            q_inv: self.q.clone(),
            t_inv: self.t.clone(),
        }
    }

    pub fn q_pow(&self, a: i64) -> F {
        let base = if a < 0 { &self.q_inv } else { &self.q };
        base.pow_i(a.abs()).unwrap()
    }

    pub fn t_pow(&self, b: i64) -> F {
        let base = if b < 0 { &self.t_inv } else { &self.t };
        base.pow_i(b.abs()).unwrap()
    }

    /// `q^a t^b`.
    pub fn mono(&self, a: i64, b: i64) -> F {
        self.q_pow(a).times(&self.t_pow(b))
    }

    /// `1 - q^a t^b`.
    pub fn one_minus(&self, a: i64, b: i64) -> F {
        F::one().minus(&self.mono(a, b))
    }
}

impl Params<RatFunc> {
    /// Indeterminate `q, t`.
    pub fn generic() -> Self {
        Params::new(RatFunc::q(), RatFunc::t())
    }
}

impl Params<SpecRF> {
    pub fn from_map(map: &SpecMap) -> Self {
        Params::new(map.q(), map.t())
    }
}

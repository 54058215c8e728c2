//! Exact coefficient arithmetic: integers and rationals, Laurent polynomials
//! in `q, t`, reduced rational functions, cyclotomic fields and monomial
//! specializations of the parameters.

pub mod cyclo;
pub mod dense;
pub mod field;
pub mod params;
pub mod qtpoly;
pub mod ratfunc;
pub mod spec;
pub mod unirf;
pub mod upoly;

pub use cyclo::{cyclotomic, euler_phi, Cyclo};
pub use field::Field;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use params::Params;
pub use qtpoly::{QTPoly, QtExp};
pub use ratfunc::RatFunc;
pub use spec::{MonoImage, SpecMap, SpecRF};
pub use unirf::{Alpha, Laurent, UniRatFunc, Z};

pub(crate) use field::write_term;

use serde_json::{json, Value};

/// Rational number from two machine integers.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// JSON serialization of scalars as lists of `{exponents..., "c": "p/q"}` terms.
pub trait ToJson {
    fn to_json(&self) -> Value;
}

fn rat_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn qt_terms(p: &QTPoly, d: &BigInt) -> Vec<Value> {
    p.terms()
        .iter()
        .map(|(e, c)| json!({"q": e.q, "t": e.t, "z": 0, "w": 0, "c": rat_string(&BigRational::new(c.clone(), d.clone()))}))
        .collect()
}

impl ToJson for RatFunc {
    fn to_json(&self) -> Value {
        // a constant denominator is folded into rational numerator coefficients
        match self.den().as_constant() {
            Some(d) => {
                json!({"num": qt_terms(self.num(), &d), "den": qt_terms(&QTPoly::one(), &BigInt::from(1))})
            }
            None => {
                json!({"num": qt_terms(self.num(), &BigInt::from(1)), "den": qt_terms(self.den(), &BigInt::from(1))})
            }
        }
    }
}

fn z_terms(p: &Laurent<Cyclo>) -> Vec<Value> {
    let mut out = Vec::new();
    for (e, c) in p.terms() {
        for (k, x) in c.coeffs().iter().enumerate() {
            if !num_traits::Zero::is_zero(x) {
                out.push(json!({"q": 0, "t": 0, "z": e, "w": k, "c": rat_string(x)}));
            }
        }
    }
    out
}

impl ToJson for SpecRF {
    fn to_json(&self) -> Value {
        let den = Laurent {
            low: 0,
            c: self.den().clone(),
        };
        json!({"num": z_terms(self.num()), "den": z_terms(&den)})
    }
}

impl ToJson for BigRational {
    fn to_json(&self) -> Value {
        json!({"num": [{"q": 0, "t": 0, "z": 0, "w": 0, "c": rat_string(self)}], "den": [{"q": 0, "t": 0, "z": 0, "w": 0, "c": "1/1"}]})
    }
}

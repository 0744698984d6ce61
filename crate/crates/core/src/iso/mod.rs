//! Isomorphism of representations: linear-algebra search and closed-form
//! criteria.

mod hom;

pub use hom::{hom_space, is_homomorphism};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{Field, Fq, Matrix};
use crate::reps::{matrix_json, FamilyParams, RepSpec, Representation};

pub const DEFAULT_BUDGET: usize = 256;
const MAX_SCAN_DIM: usize = 2;
const MAX_SCAN_FIELD: u64 = 49;

#[derive(Debug, Clone)]
pub struct IsoVerdict {
    pub isomorphic: bool,
    pub intertwiner: Option<Matrix>,
    /// Which clause or search path decided the verdict.
    pub criterion: String,
}

impl IsoVerdict {
    fn no(criterion: impl Into<String>) -> Self {
        IsoVerdict { isomorphic: false, intertwiner: None, criterion: criterion.into() }
    }

    fn decided(isomorphic: bool, criterion: impl Into<String>) -> Self {
        IsoVerdict { isomorphic, intertwiner: None, criterion: criterion.into() }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({"isomorphic": self.isomorphic, "criterion": self.criterion});
        if let Some(m) = &self.intertwiner {
            v["intertwiner"] = matrix_json(m.field(), m);
        }
        v
    }
}

pub fn find_intertwiner(r1: &Representation, r2: &Representation) -> Result<IsoVerdict> {
    find_intertwiner_with(r1, r2, 0, DEFAULT_BUDGET)
}

/// Solves for the module maps `r1 -> r2` and looks for an invertible one:
/// every line of the solution space is tried when it has dimension at
/// most 2 over a field of order at most 49, and `budget` seeded random
/// combinations are tried otherwise.
pub fn find_intertwiner_with(r1: &Representation, r2: &Representation, seed: u64, budget: usize) -> Result<IsoVerdict> {
    if r1.params() != r2.params() {
        return Err(Error::ContextMismatch);
    }
    if r1.dim() != r2.dim() {
        return Ok(IsoVerdict::no(format!("dimensions differ ({} vs {})", r1.dim(), r2.dim())));
    }
    let f = r1.field();
    let basis = hom_space(r1, r2);
    let h = basis.len();
    if h == 0 {
        return Ok(IsoVerdict::no("no nonzero module map"));
    }
    let found = |m: Matrix, how: String| IsoVerdict { isomorphic: true, intertwiner: Some(m), criterion: how };
    if h <= MAX_SCAN_DIM && f.order() <= MAX_SCAN_FIELD {
        for coeffs in projective_points(f, h) {
            let m = combine(f, &basis, &coeffs);
            if is_invertible(&m) {
                return Ok(found(m, format!("invertible map in a {h}-dimensional hom space")));
            }
        }
        return Ok(IsoVerdict::no(format!("no invertible map in a {h}-dimensional hom space")));
    }
    if is_invertible(&basis[0]) {
        return Ok(found(basis[0].clone(), format!("invertible map in a {h}-dimensional hom space")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget {
        let coeffs: Vec<Fq> = (0..h).map(|_| f.random(&mut rng)).collect();
        let m = combine(f, &basis, &coeffs);
        if is_invertible(&m) {
            return Ok(found(m, format!("invertible map in a {h}-dimensional hom space")));
        }
    }
    Err(Error::Inconclusive(budget))
}

fn is_invertible(m: &Matrix) -> bool {
    m.rank() == m.rows()
}

fn combine(f: &Field, basis: &[Matrix], coeffs: &[Fq]) -> Matrix {
    let mut out = Matrix::zero(f, basis[0].rows(), basis[0].cols());
    for (b, &c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            out = out.add(&b.scale(c));
        }
    }
    out
}

/// Coefficient vectors with leading nonzero entry 1.
fn projective_points(f: &Field, h: usize) -> Vec<Vec<Fq>> {
    let elems: Vec<Fq> = f.elements().collect();
    let mut out = Vec::new();
    for lead in 0..h {
        let mut tails: Vec<Vec<Fq>> = vec![Vec::new()];
        for _ in lead + 1..h {
            tails = tails
                .into_iter()
                .flat_map(|t| elems.iter().map(move |&e| {
                    let mut t = t.clone();
                    t.push(e);
                    t
                }))
                .collect();
        }
        for t in tails {
            let mut v = vec![Fq::ZERO; lead];
            v.push(Fq::ONE);
            v.extend(t);
            out.push(v);
        }
    }
    out
}

/// `prod_{c in F_p} (k^2/4 - (mu + c)^2)`, evaluated factor by factor.
pub fn product_term(field: &Field, mu: Fq, k: Fq) -> Fq {
    let k2_4 = field.mul(field.mul(k, k), field.inv(field.from_int(4)).expect("4 is a unit in odd characteristic"));
    field.product((0..field.characteristic() as i64).map(|c| {
        let m = field.add(mu, field.from_int(c));
        field.sub(k2_4, field.mul(m, m))
    }))
}

/// The closed-form isomorphism criteria for two family instances.
///
/// V16 is decided by `c' = c and theta' = theta`; the shorter statement
/// `theta' = theta` is recorded in the criterion text when the two differ.
pub fn criterion_iso(s1: &RepSpec, s2: &RepSpec) -> Result<IsoVerdict> {
    if s1.params() != s2.params() {
        return Err(Error::ContextMismatch);
    }
    let params = s1.params();
    let f = params.field();
    let k = params.k();
    let eq = |a: Fq, b: Fq| a == b;
    use FamilyParams as P;
    let verdict = match (*s1.family_params(), *s2.family_params()) {
        (P::V01 { beta, a }, P::V01 { beta: b2, a: a2 }) => {
            if eq(b2, beta) && eq(a2, a) {
                IsoVerdict::decided(true, "beta' = beta, a' = a")
            } else {
                let b4 = f.mul(f.from_int(4), f.mul(beta, beta));
                let other = f.div(f.sub(b4, f.mul(k, k)), f.mul(b4, a))?;
                let hit = eq(b2, f.neg(beta)) && eq(a2, other);
                IsoVerdict::decided(hit, "beta' = -beta, a' = (4 beta^2 - k^2) / (4 a beta^2)")
            }
        }
        (P::V02 { a, b }, P::V02 { a: a2, b: b2 }) | (P::V05 { a, b }, P::V05 { a: a2, b: b2 }) => {
            IsoVerdict::decided(eq(a, a2) && eq(b, b2), "a' = a, b' = b")
        }
        (P::V03 { beta, a }, P::V03 { beta: b2, a: a2 }) => {
            if eq(b2, beta) && eq(a2, a) {
                IsoVerdict::decided(true, "beta' = beta, a' = a")
            } else {
                let hit = eq(b2, f.neg(beta)) && eq(a2, f.inv(a)?);
                IsoVerdict::decided(hit, "beta' = -beta, a' = 1/a")
            }
        }
        (P::V04 { a }, P::V04 { a: a2 }) => {
            if eq(a2, a) {
                IsoVerdict::decided(true, "a' = a")
            } else {
                IsoVerdict::decided(eq(a2, f.inv(a)?), "a' = 1/a")
            }
        }
        (P::V11 { mu, d }, P::V11 { mu: m2, d: d2 }) => {
            if f.in_prime_field(f.sub(m2, mu)) {
                IsoVerdict::decided(eq(d2, d), "mu' - mu in F_p and d' = d")
            } else if f.in_prime_field(f.add(m2, mu)) {
                let hit = eq(f.mul(d, d2), product_term(f, mu, k));
                IsoVerdict::decided(hit, "mu' + mu in F_p and d d' = prod_c (k^2/4 - (mu + c)^2)")
            } else {
                IsoVerdict::no("neither mu' - mu nor mu' + mu lies in F_p")
            }
        }
        (P::V12 { theta }, P::V12 { theta: t2 }) | (P::V13 { theta }, P::V13 { theta: t2 }) => {
            IsoVerdict::decided(eq(theta, t2), "theta' = theta")
        }
        (P::V14 { c }, P::V14 { c: c2 }) | (P::V15 { c }, P::V15 { c: c2 }) => {
            IsoVerdict::decided(eq(c, c2), "c' = c")
        }
        (P::V16 { c, theta }, P::V16 { c: c2, theta: t2 }) => {
            let full = eq(c, c2) && eq(theta, t2);
            let short = eq(theta, t2);
            let text = if full == short {
                "c' = c and theta' = theta".to_string()
            } else {
                "c' = c and theta' = theta (differs from theta' = theta alone)".to_string()
            };
            IsoVerdict::decided(full, text)
        }
        (P::V17 { a }, P::V17 { a: a2 }) => IsoVerdict::decided(eq(a, a2), "a' = a"),
        _ => IsoVerdict::no("different families"),
    };
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraParams;
    use crate::field::make_field;
    use crate::reps::build_rep;

    #[test]
    fn product_term_vanishes_at_half_k() {
        let f = make_field(5, 2).unwrap();
        let k = f.gen();
        let half = f.div(k, f.from_int(2)).unwrap();
        assert_eq!(product_term(&f, half, k), f.zero());
    }

    #[test]
    fn projective_point_count() {
        let f = make_field(3, 1).unwrap();
        assert_eq!(projective_points(&f, 2).len(), 4);
    }

    #[test]
    fn v03_pair_is_isomorphic() {
        let f = make_field(7, 1).unwrap();
        let p = AlgebraParams::new(&f, f.zero(), f.zero()).unwrap();
        let (beta, a) = (f.from_int(2), f.from_int(3));
        let s1 = RepSpec::new(&p, FamilyParams::V03 { beta, a }).unwrap();
        let s2 = RepSpec::new(&p, FamilyParams::V03 { beta: f.neg(beta), a: f.inv(a).unwrap() }).unwrap();
        let v = find_intertwiner(&build_rep(&s1).unwrap(), &build_rep(&s2).unwrap()).unwrap();
        assert!(v.isomorphic);
        assert!(criterion_iso(&s1, &s2).unwrap().isomorphic);
    }
}

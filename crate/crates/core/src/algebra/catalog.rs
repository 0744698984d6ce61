use serde::Serialize;

use super::{AlgebraElement, AlgebraParams, Monomial};
use crate::error::Result;
use crate::field::{Field, Fq};

/// A change of variables applied by [`normalize_params`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamNote {
    /// `y` is replaced by `c * y`.
    ScaleY(Fq),
    /// `s` is replaced by `-s` (and `k` by `-k`).
    NegateS,
}

impl ParamNote {
    pub fn describe(&self, field: &Field) -> String {
        match self {
            ParamNote::ScaleY(c) => format!("y -> {}*y", field.format(*c)),
            ParamNote::NegateS => "s -> -s".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct NormalizedParams {
    pub params: AlgebraParams,
    pub notes: Vec<ParamNote>,
}

#[derive(Serialize)]
struct NotesJson<'a> {
    t: Vec<u32>,
    k: Vec<u32>,
    notes: &'a [String],
}

impl NormalizedParams {
    pub fn to_json(&self) -> serde_json::Value {
        let f = self.params.field();
        let notes: Vec<String> = self.notes.iter().map(|n| n.describe(f)).collect();
        serde_json::to_value(NotesJson { t: f.coeffs(self.params.t()), k: f.coeffs(self.params.k()), notes: &notes })
            .expect("plain data serializes")
    }
}

/// Brings arbitrary `(t, k)` to `t in {0, 1}`.
///
/// Nonzero `t` is rescaled to 1 via `y -> y / t`. When the given `t` is
/// already 1 and `k` lies in the prime field, `k` is replaced by whichever of
/// `k`, `-k` has an even lift in `[0, p)`, negating `s` if needed.
pub fn normalize_params(field: &Field, t: Fq, k: Fq) -> NormalizedParams {
    let mut notes = Vec::new();
    if t.is_zero() {
        let params = AlgebraParams::new(field, Fq::ZERO, k).expect("t = 0 is admissible");
        return NormalizedParams { params, notes };
    }
    let mut k_new = k;
    if t != Fq::ONE {
        let inv = field.inv(t).expect("t is nonzero");
        k_new = field.mul(k, inv);
        notes.push(ParamNote::ScaleY(inv));
    } else if let Some(lift) = field.lift(k) {
        if lift % 2 == 1 {
            k_new = field.neg(k);
            notes.push(ParamNote::NegateS);
        }
    }
    let params = AlgebraParams::new(field, Fq::ONE, k_new).expect("t = 1 is admissible");
    NormalizedParams { params, notes }
}

/// The distinguished central elements: `X + X^-1`, `y^2`, `X y - y X^-1` when
/// `t = 0`, and `X^p + X^-p`, `(y^p - y)^2` when `t = 1`.
pub fn central_elements(params: &AlgebraParams) -> Vec<(String, AlgebraElement)> {
    let x = AlgebraElement::x(params);
    let xi = AlgebraElement::x_inv(params);
    let y = AlgebraElement::y(params);
    if params.t().is_zero() {
        vec![
            ("X+X^-1".into(), &x + &xi),
            ("y^2".into(), &y * &y),
            ("X*y-y*X^-1".into(), &(&x * &y) - &(&y * &xi)),
        ]
    } else {
        let p = params.field().characteristic() as i32;
        let xp = AlgebraElement::monomial(params, Monomial::new(0, p, 0), Fq::ONE);
        let xmp = AlgebraElement::monomial(params, Monomial::new(0, -p, 0), Fq::ONE);
        let yp = y.pow(p as u32);
        let d = &yp - &y;
        vec![("X^p+X^-p".into(), &xp + &xmp), ("(y^p-y)^2".into(), &d * &d)]
    }
}

/// `A = s X` and `B = s y + k/2`.
pub fn intertwiners(params: &AlgebraParams) -> Result<(AlgebraElement, AlgebraElement)> {
    let f = params.field();
    let a = AlgebraElement::monomial(params, Monomial::new(1, 1, 0), Fq::ONE);
    let half_k = f.div(params.k(), f.from_int(2))?;
    let b = &AlgebraElement::monomial(params, Monomial::new(1, 0, 1), Fq::ONE) + &AlgebraElement::scalar(params, half_k);
    Ok((a, b))
}

/// Image under the isomorphism H(t, k) -> H(t, -k) fixing X and y and
/// sending s to -s.
pub fn negate_k(elem: &AlgebraElement) -> AlgebraElement {
    let params = elem.params();
    let f = params.field();
    let target = params.with_k(f.neg(params.k()));
    let mut out = AlgebraElement::zero(&target);
    for (m, c) in elem.terms() {
        out.add_term(m, if m.i == 1 { f.neg(c) } else { c });
    }
    out
}

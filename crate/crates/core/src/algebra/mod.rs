//! The rank-one trigonometric Cherednik algebra H(t, k).
//!
//! Generators X, X^-1, s, y subject to
//!
//! ```text
//! s X = X^-1 s,   s^2 = 1,   s y + y s = -k,   X y X^-1 = y - t + k s.
//! ```
//!
//! Elements are kept as linear combinations of the monomials `s^i X^j y^l`.

mod catalog;
mod parse;
mod rewrite;

pub use catalog::{central_elements, intertwiners, negate_k, normalize_params, NormalizedParams, ParamNote};
pub use parse::parse;
pub use rewrite::{normalize, normalize_with, Gen, GeneratorWord, Strategy};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, Fq};

/// Parameters of H(t, k) over a fixed field; `t` is 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraParams {
    field: Field,
    t: Fq,
    k: Fq,
}

impl AlgebraParams {
    pub fn new(field: &Field, t: Fq, k: Fq) -> Result<Self> {
        if t != Fq::ZERO && t != Fq::ONE {
            return Err(Error::BadParameter(format!(
                "t must be 0 or 1 after normalization, got {}",
                field.format(t)
            )));
        }
        Ok(AlgebraParams { field: field.clone(), t, k })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn t(&self) -> Fq {
        self.t
    }

    pub fn k(&self) -> Fq {
        self.k
    }

    pub fn is_trigonometric(&self) -> bool {
        self.t == Fq::ONE
    }

    pub fn with_k(&self, k: Fq) -> Self {
        AlgebraParams { k, ..self.clone() }
    }

    pub fn with_t(&self, t: Fq) -> Result<Self> {
        AlgebraParams::new(&self.field, t, self.k)
    }
}

/// The PBW monomial `s^i X^j y^l`. The derived order compares `(i, j, l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub i: u8,
    pub j: i32,
    pub l: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { i: 0, j: 0, l: 0 };

    pub fn new(i: u8, j: i32, l: u32) -> Self {
        assert!(i < 2, "s exponent must be 0 or 1");
        Monomial { i, j, l }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.i == 1 {
            parts.push("s".to_string());
        }
        match self.j {
            0 => {}
            1 => parts.push("X".into()),
            j => parts.push(format!("X^{j}")),
        }
        match self.l {
            0 => {}
            1 => parts.push("y".into()),
            l => parts.push(format!("y^{l}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A finite linear combination of PBW monomials with nonzero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    params: AlgebraParams,
    terms: BTreeMap<Monomial, Fq>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    i: u8,
    j: i32,
    l: u32,
    coeff: Vec<u32>,
}

impl AlgebraElement {
    pub fn zero(params: &AlgebraParams) -> Self {
        AlgebraElement { params: params.clone(), terms: BTreeMap::new() }
    }

    pub fn scalar(params: &AlgebraParams, c: Fq) -> Self {
        Self::monomial(params, Monomial::ONE, c)
    }

    pub fn one(params: &AlgebraParams) -> Self {
        Self::scalar(params, Fq::ONE)
    }

    pub fn monomial(params: &AlgebraParams, m: Monomial, c: Fq) -> Self {
        let mut e = Self::zero(params);
        e.add_term(m, c);
        e
    }

    pub fn x(params: &AlgebraParams) -> Self {
        Self::monomial(params, Monomial::new(0, 1, 0), Fq::ONE)
    }

    pub fn x_inv(params: &AlgebraParams) -> Self {
        Self::monomial(params, Monomial::new(0, -1, 0), Fq::ONE)
    }

    pub fn s(params: &AlgebraParams) -> Self {
        Self::monomial(params, Monomial::new(1, 0, 0), Fq::ONE)
    }

    pub fn y(params: &AlgebraParams) -> Self {
        Self::monomial(params, Monomial::new(0, 0, 1), Fq::ONE)
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    fn field(&self) -> &Field {
        &self.params.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, Fq)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> Fq {
        self.terms.get(&m).copied().unwrap_or(Fq::ZERO)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Fq) {
        if c.is_zero() {
            return;
        }
        let f = self.params.field.clone();
        let slot = self.terms.entry(m).or_insert(Fq::ZERO);
        *slot = f.add(*slot, c);
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.params == other.params {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg_ref())
    }

    fn neg_ref(&self) -> Self {
        self.scale(self.field().from_int(-1))
    }

    pub fn scale(&self, c: Fq) -> Self {
        let f = self.field().clone();
        let mut out = Self::zero(&self.params);
        for (m, a) in self.terms() {
            out.add_term(m, f.mul(c, a));
        }
        out
    }

    /// Normal-form product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut engine = ProductEngine::new(&self.params);
        let mut out = Self::zero(&self.params);
        let f = self.field().clone();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let c = f.mul(ca, cb);
                for (m, d) in engine.monomial_product(a, b).terms() {
                    out.add_term(m, f.mul(c, d));
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut acc = Self::one(&self.params);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Commutator `ab - ba`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    /// Reinterprets the same coefficients over different parameters.
    pub fn with_params(&self, params: &AlgebraParams) -> Result<Self> {
        if params.field != self.params.field {
            return Err(Error::ContextMismatch);
        }
        Ok(AlgebraElement { params: params.clone(), terms: self.terms.clone() })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let f = self.field();
        let terms: Vec<TermJson> = self
            .terms()
            .map(|(m, c)| TermJson { i: m.i, j: m.j, l: m.l, coeff: f.coeffs(c) })
            .collect();
        serde_json::to_value(terms).expect("plain data serializes")
    }

    pub fn from_json(params: &AlgebraParams, value: &serde_json::Value) -> Result<Self> {
        let terms: Vec<TermJson> =
            serde_json::from_value(value.clone()).map_err(|e| Error::Format(e.to_string()))?;
        let mut out = Self::zero(params);
        for t in terms {
            if t.i > 1 {
                return Err(Error::Format(format!("s exponent {} is not 0 or 1", t.i)));
            }
            let c = params.field.from_canonical_coeffs(&t.coeff)?;
            out.add_term(Monomial::new(t.i, t.j, t.l), c);
        }
        Ok(out)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.field();
        let parts: Vec<String> = self
            .terms()
            .map(|(m, c)| {
                if m == Monomial::ONE {
                    field.format(c)
                } else if c == Fq::ONE {
                    m.to_string()
                } else {
                    format!("{}*{}", field.format(c), m)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement({self})")
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&AlgebraElement> for &AlgebraElement {
            type Output = AlgebraElement;

            /// Panics when the operands have different parameters.
            fn $method(self, rhs: &AlgebraElement) -> AlgebraElement {
                self.$try(rhs).expect("operands over different algebras")
            }
        }

        impl $tr<AlgebraElement> for AlgebraElement {
            type Output = AlgebraElement;

            fn $method(self, rhs: AlgebraElement) -> AlgebraElement {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;

    fn neg(self) -> AlgebraElement {
        self.neg_ref()
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;

    fn neg(self) -> AlgebraElement {
        self.neg_ref()
    }
}

/// Multiplies PBW monomials using closed forms for `y X^j`, memoizing
/// `y^l s^i X^j` within one product.
struct ProductEngine<'a> {
    params: &'a AlgebraParams,
    cache: HashMap<(u32, u8, i32), AlgebraElement>,
}

impl<'a> ProductEngine<'a> {
    fn new(params: &'a AlgebraParams) -> Self {
        ProductEngine { params, cache: HashMap::new() }
    }

    /// `y X^j = X^j y + j t X^j - k sgn(j) sum_e s X^e`, where e runs over
    /// j, j-2, ..., 2-j for j > 0 and over j+2, j+4, ..., -j for j < 0.
    fn y_times_x_power(&self, j: i32) -> AlgebraElement {
        let p = self.params;
        let f = &p.field;
        let mut out = AlgebraElement::monomial(p, Monomial::new(0, j, 1), Fq::ONE);
        if j == 0 {
            return out;
        }
        out.add_term(Monomial::new(0, j, 0), f.mul(f.from_int(j as i64), p.t));
        let (exps, sign): (Vec<i32>, i64) = if j > 0 {
            ((0..j).map(|m| j - 2 * m).collect(), -1)
        } else {
            ((0..-j).map(|m| j + 2 + 2 * m).collect(), 1)
        };
        let c = f.mul(f.from_int(sign), p.k);
        for e in exps {
            out.add_term(Monomial::new(1, e, 0), c);
        }
        out
    }

    /// `y s^i X^j` in normal form.
    fn y_times(&self, i: u8, j: i32) -> AlgebraElement {
        let yx = self.y_times_x_power(j);
        if i == 0 {
            return yx;
        }
        // y s X^j = -k X^j - s (y X^j)
        let f = &self.params.field;
        let mut out = AlgebraElement::monomial(self.params, Monomial::new(0, j, 0), f.neg(self.params.k));
        for (m, c) in yx.terms() {
            out.add_term(Monomial::new(1 - m.i, m.j, m.l), f.neg(c));
        }
        out
    }

    /// `y^l s^i X^j` in normal form.
    fn y_power_times(&mut self, l: u32, i: u8, j: i32) -> AlgebraElement {
        if l == 0 {
            return AlgebraElement::monomial(self.params, Monomial::new(i, j, 0), Fq::ONE);
        }
        if let Some(e) = self.cache.get(&(l, i, j)) {
            return e.clone();
        }
        let inner = self.y_power_times(l - 1, i, j);
        let f = self.params.field.clone();
        let mut out = AlgebraElement::zero(self.params);
        for (m, c) in inner.terms() {
            // y s^a X^b y^c = (y s^a X^b) y^c
            for (n, d) in self.y_times(m.i, m.j).terms() {
                out.add_term(Monomial::new(n.i, n.j, n.l + m.l), f.mul(c, d));
            }
        }
        self.cache.insert((l, i, j), out.clone());
        out
    }

    /// `(s^a X^b y^c)(s^d X^e y^g)`.
    fn monomial_product(&mut self, left: Monomial, right: Monomial) -> AlgebraElement {
        let mid = self.y_power_times(left.l, right.i, right.j);
        let mut out = AlgebraElement::zero(self.params);
        for (m, c) in mid.terms() {
            // s^a X^b s^i X^j = s^(a+i) X^(j + (-1)^i b)
            let j = if m.i == 0 { m.j + left.j } else { m.j - left.j };
            let i = (left.i + m.i) % 2;
            out.add_term(Monomial::new(i, j, m.l + right.l), c);
        }
        out
    }
}

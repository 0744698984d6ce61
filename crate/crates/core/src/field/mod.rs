//! Exact arithmetic in GF(p^m) for odd primes p.
//!
//! Elements are stored packed as `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`, where
//! `c_i` are the coefficients of the residue polynomial modulo the field's
//! modulus. Small fields (q <= 2^20) multiply through discrete log tables;
//! larger ones fall back to polynomial multiplication.

mod matrix;
pub(crate) mod poly;
mod subspace;

pub use matrix::Matrix;
pub use matrix::Rref;
pub use subspace::{spin, EchelonBasis};
pub(crate) use matrix::eval_poly;

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use poly::Poly;

const TABLE_LIMIT: u64 = 1 << 20;

/// An element of a finite field, meaningful only together with its [`Field`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fq(pub(crate) u32);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Packed representation (base-p digits are the polynomial coefficients).
    pub fn packed(self) -> u32 {
        self.0
    }
}

struct Tables {
    log: Vec<u32>,
    exp: Vec<u32>,
}

struct Inner {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    tables: Option<Tables>,
}

/// A finite field GF(p^m) with a deterministically chosen modulus.
///
/// Cloning is cheap; all clones share one immutable context.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.m == other.0.m)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.m)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Builds GF(p^m) whose modulus is the lexicographically smallest monic
/// irreducible polynomial of degree `m`, comparing coefficients from
/// `x^{m-1}` down to the constant term. For `m = 1` the modulus is `x`.
pub fn make_field(p: i64, m: i64) -> Result<Field> {
    if p == 2 {
        return Err(Error::EvenCharacteristic);
    }
    if p < 2 || !is_prime(p as u64) {
        return Err(Error::NotPrime(p.max(0) as u64));
    }
    if m < 1 {
        return Err(Error::BadDegree(m));
    }
    let (p, m) = (p as u64, m as u32);
    let q = p
        .checked_pow(m)
        .filter(|&q| q <= u32::MAX as u64)
        .ok_or(Error::FieldTooLarge { p, m })?;

    let modulus: Poly = (0..q)
        .map(|n| {
            let mut coeffs: Poly = (0..m).map(|i| n / p.pow(i) % p).collect();
            coeffs.push(1);
            coeffs
        })
        .find(|f| m == 1 || poly::is_irreducible(f, p))
        .expect("an irreducible polynomial of every degree exists");

    let mut inner = Inner {
        p: p as u32,
        m,
        q: q as u32,
        modulus: modulus.iter().map(|&c| c as u32).collect(),
        tables: None,
    };
    if m > 1 && q <= TABLE_LIMIT {
        inner.tables = Some(build_tables(&inner));
    }
    Ok(Field(Arc::new(inner)))
}

fn unpack(inner: &Inner, x: u32) -> Poly {
    let p = inner.p as u64;
    let mut x = x as u64;
    let mut out = Vec::with_capacity(inner.m as usize);
    for _ in 0..inner.m {
        out.push(x % p);
        x /= p;
    }
    poly::trim(&mut out);
    out
}

fn pack(inner: &Inner, c: &Poly) -> u32 {
    let p = inner.p as u64;
    c.iter().rev().fold(0u64, |acc, &d| acc * p + d) as u32
}

fn modulus_poly(inner: &Inner) -> Poly {
    inner.modulus.iter().map(|&c| c as u64).collect()
}

fn build_tables(inner: &Inner) -> Tables {
    let p = inner.p as u64;
    let f = modulus_poly(inner);
    let order = inner.q as u64 - 1;
    let factors = prime_factors(order);
    let generator = (1..inner.q)
        .map(|g| unpack(inner, g))
        .find(|g| {
            factors
                .iter()
                .all(|&r| poly::pow_mod(g, order / r, &f, p) != vec![1])
        })
        .expect("the multiplicative group of a finite field is cyclic");

    let mut log = vec![0u32; inner.q as usize];
    let mut exp = vec![0u32; 2 * order as usize];
    let mut cur: Poly = vec![1];
    for i in 0..order as usize {
        let packed = pack(inner, &cur);
        exp[i] = packed;
        exp[i + order as usize] = packed;
        log[packed as usize] = i as u32;
        cur = poly::mul_mod(&cur, &generator, &f, p);
    }
    Tables { log, exp }
}

impl Field {
    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.m
    }

    /// Number of elements, p^m.
    pub fn order(&self) -> u64 {
        self.0.q as u64
    }

    /// Modulus coefficients, constant term first, including the leading 1.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> Fq {
        Fq::ZERO
    }

    pub fn one(&self) -> Fq {
        Fq::ONE
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Fq {
        Fq(n.rem_euclid(self.0.p as i64) as u32)
    }

    /// The residue class of `x` (the generator of the extension).
    pub fn gen(&self) -> Fq {
        if self.0.m == 1 {
            // modulus is x, so x = 0
            Fq::ZERO
        } else {
            Fq(self.0.p)
        }
    }

    /// Builds an element from polynomial coefficients (constant term
    /// first). Integers are reduced mod p; at most m coefficients.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Result<Fq> {
        if coeffs.len() > self.0.m as usize {
            return Err(Error::InvalidElement(format!(
                "{} coefficients for an extension of degree {}",
                coeffs.len(),
                self.0.m
            )));
        }
        let p = self.0.p as i64;
        let reduced: Poly = coeffs.iter().map(|&c| c.rem_euclid(p) as u64).collect();
        Ok(Fq(pack(&self.0, &reduced)))
    }

    /// Strict variant used when loading serialized data: exactly m
    /// coefficients, each already in [0, p).
    pub fn from_canonical_coeffs(&self, coeffs: &[u32]) -> Result<Fq> {
        if coeffs.len() != self.0.m as usize || coeffs.iter().any(|&c| c >= self.0.p) {
            return Err(Error::InvalidElement(format!(
                "{coeffs:?} is not a canonical element of {self:?}"
            )));
        }
        Ok(Fq(pack(&self.0, &coeffs.iter().map(|&c| c as u64).collect())))
    }

    /// Exactly m coefficients in [0, p), constant term first.
    pub fn coeffs(&self, x: Fq) -> Vec<u32> {
        let p = self.0.p;
        let mut v = x.0;
        (0..self.0.m)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    }

    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        let p = self.0.p;
        if self.0.m == 1 {
            let s = a.0 as u64 + b.0 as u64;
            return Fq((s % p as u64) as u32);
        }
        let (mut a, mut b) = (a.0, b.0);
        let (mut out, mut scale) = (0u32, 1u32);
        for _ in 0..self.0.m {
            let d = (a % p + b % p) % p;
            out += d * scale;
            scale = scale.wrapping_mul(p);
            a /= p;
            b /= p;
        }
        Fq(out)
    }

    pub fn neg(&self, a: Fq) -> Fq {
        let p = self.0.p;
        if self.0.m == 1 {
            return Fq(if a.0 == 0 { 0 } else { p - a.0 });
        }
        let mut a = a.0;
        let (mut out, mut scale) = (0u32, 1u32);
        for _ in 0..self.0.m {
            let d = (p - a % p) % p;
            out += d * scale;
            scale = scale.wrapping_mul(p);
            a /= p;
        }
        Fq(out)
    }

    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if a.0 == 0 || b.0 == 0 {
            return Fq::ZERO;
        }
        if self.0.m == 1 {
            return Fq((a.0 as u64 * b.0 as u64 % self.0.p as u64) as u32);
        }
        match &self.0.tables {
            Some(t) => Fq(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]),
            None => self.mul_reference(a, b),
        }
    }

    /// Multiplication by polynomial arithmetic, bypassing the log tables.
    pub fn mul_reference(&self, a: Fq, b: Fq) -> Fq {
        let inner = &self.0;
        let prod = poly::mul_mod(
            &unpack(inner, a.0),
            &unpack(inner, b.0),
            &modulus_poly(inner),
            inner.p as u64,
        );
        Fq(pack(inner, &prod))
    }

    pub fn inv(&self, a: Fq) -> Result<Fq> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        if self.0.m == 1 {
            return Ok(Fq(poly::pow_mod_p(a.0 as u64, self.0.p as u64 - 2, self.0.p as u64) as u32));
        }
        match &self.0.tables {
            Some(t) => {
                let order = self.0.q - 1;
                Ok(Fq(t.exp[((order - t.log[a.0 as usize]) % order) as usize]))
            }
            None => Ok(self.pow(a, self.0.q as u64 - 2)),
        }
    }

    pub fn div(&self, a: Fq, b: Fq) -> Result<Fq> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fq, mut exp: u64) -> Fq {
        let mut acc = Fq::ONE;
        let mut base = a;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, a: Fq, exp: i64) -> Result<Fq> {
        if exp >= 0 {
            Ok(self.pow(a, exp as u64))
        } else {
            Ok(self.pow(self.inv(a)?, exp.unsigned_abs()))
        }
    }

    /// x -> x^p.
    pub fn frobenius(&self, a: Fq) -> Fq {
        self.pow(a, self.0.p as u64)
    }

    /// Membership in the prime subfield, tested as Frobenius fixedness.
    pub fn in_prime_field(&self, a: Fq) -> bool {
        self.frobenius(a) == a
    }

    /// Canonical integer lift of a prime-field element to [0, p).
    pub fn lift(&self, a: Fq) -> Option<u32> {
        (a.0 < self.0.p).then_some(a.0)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.0.q).map(Fq)
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Fq {
        Fq(rng.gen_range(0..self.0.q))
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Fq {
        Fq(rng.gen_range(1..self.0.q))
    }

    pub fn sum<I: IntoIterator<Item = Fq>>(&self, it: I) -> Fq {
        it.into_iter().fold(Fq::ZERO, |acc, x| self.add(acc, x))
    }

    pub fn product<I: IntoIterator<Item = Fq>>(&self, it: I) -> Fq {
        it.into_iter().fold(Fq::ONE, |acc, x| self.mul(acc, x))
    }

    /// Human-readable form: the integer for prime fields, `[c0,c1,...]`
    /// otherwise.
    pub fn format(&self, a: Fq) -> String {
        if self.0.m == 1 {
            a.0.to_string()
        } else {
            let c: Vec<String> = self.coeffs(a).iter().map(u32::to_string).collect();
            format!("[{}]", c.join(","))
        }
    }

    /// Parses a command-line literal: an integer, or `c0,c1,...` (optionally
    /// bracketed) for extension fields.
    pub fn parse_literal(&self, text: &str) -> Result<Fq> {
        let body = text.trim().trim_start_matches('[').trim_end_matches(']');
        let coeffs = body
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidElement(format!("cannot parse {text:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.from_coeffs(&coeffs)
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            p: self.0.p,
            m: self.0.m,
            modulus: self.0.modulus.clone(),
        }
    }
}

/// Serialized form of a field: `{"p": int, "m": int, "modulus": [int]}`,
/// modulus constant term first with the leading 1 included.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub m: u32,
    pub modulus: Vec<u32>,
}

impl FieldDescriptor {
    /// Rebuilds the field and checks that the stored modulus matches the
    /// deterministic choice.
    pub fn to_field(&self) -> Result<Field> {
        let field = make_field(self.p as i64, self.m as i64)?;
        if field.modulus() != self.modulus.as_slice() {
            return Err(Error::Format(format!(
                "modulus {:?} differs from the canonical {:?}",
                self.modulus,
                field.modulus()
            )));
        }
        Ok(field)
    }
}

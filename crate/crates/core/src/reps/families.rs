//! Explicit matrices for every family.
//!
//! Indices from the prime field are stored as their lifts in `[0, p)`;
//! labels `v[mu+c]` and `v[-mu+c]` are kept as a sign and an offset. For the
//! trigonometric families the X matrix is produced column by column from
//! the already assembled s matrix: `X e_src = coef * s e_tgt`.

use std::collections::HashMap;

use super::spec::{even_k, FamilyParams, RepSpec};
use super::{Origin, Representation};
use crate::error::{Error, Result};
use crate::field::{Field, Fq, Matrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Label {
    /// `letter[j]` with `j` in the prime field.
    Fp(char, u32),
    /// `v[sign*mu + c]`.
    Shift(i8, u32),
    /// Positional basis of the two-dimensional families.
    Pos(u32),
}

impl Label {
    fn text(self) -> String {
        match self {
            Label::Fp(c, j) => format!("{c}[{j}]"),
            Label::Shift(1, 0) => "v[mu]".into(),
            Label::Shift(_, 0) => "v[-mu]".into(),
            Label::Shift(1, c) => format!("v[mu+{c}]"),
            Label::Shift(_, c) => format!("v[-mu+{c}]"),
            Label::Pos(i) => format!("v{i}"),
        }
    }
}

struct Builder {
    f: Field,
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
    weights: Vec<Fq>,
    s: Matrix,
    x: Matrix,
    y: Matrix,
}

#[derive(Clone, Copy)]
enum Gen {
    S,
    X,
    Y,
}

impl Builder {
    fn new(f: &Field, labels: Vec<Label>, weights: Vec<Fq>) -> Self {
        let n = labels.len();
        let index = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        Builder {
            f: f.clone(),
            labels,
            index,
            weights,
            s: Matrix::zero(f, n, n),
            x: Matrix::zero(f, n, n),
            y: Matrix::zero(f, n, n),
        }
    }

    fn idx(&self, l: Label) -> usize {
        *self.index.get(&l).unwrap_or_else(|| panic!("label {} not in basis", l.text()))
    }

    /// `g e_src = sum coef * e_target`.
    fn set(&mut self, g: Gen, src: Label, terms: &[(Fq, Label)]) {
        let j = self.idx(src);
        let targets: Vec<(usize, Fq)> = terms.iter().map(|&(c, l)| (self.idx(l), c)).collect();
        let m = match g {
            Gen::S => &mut self.s,
            Gen::X => &mut self.x,
            Gen::Y => &mut self.y,
        };
        for (i, c) in targets {
            let v = self.f.add(m.get(i, j), c);
            m.set(i, j, v);
        }
    }

    /// `X e_src = coef * s e_tgt`.
    fn x_from_s(&mut self, src: Label, tgt: Label, coef: Fq) {
        let col: Vec<Fq> = self.s.column(self.idx(tgt)).into_iter().map(|v| self.f.mul(coef, v)).collect();
        let j = self.idx(src);
        self.x.set_column(j, &col);
    }

    fn finish(self, spec: &RepSpec) -> Result<Representation> {
        let labels = self.labels.iter().map(|l| l.text()).collect();
        let rep = Representation::assemble(
            Origin::Family(spec.clone()),
            spec.params(),
            self.x,
            self.s,
            self.y,
            Some(labels),
            Some(self.weights),
        )
        .map_err(|e| match e {
            Error::Singular => Error::BadParameter(format!("{}: X is not invertible", spec.key())),
            other => other,
        })?;
        rep.check_relations()?;
        Ok(rep)
    }
}

/// Small helpers for the recurring scalar expressions.
struct Sc<'a> {
    f: &'a Field,
    k: Fq,
}

impl Sc<'_> {
    fn int(&self, n: i64) -> Fq {
        self.f.from_int(n)
    }

    fn div(&self, a: Fq, b: Fq) -> Result<Fq> {
        self.f.div(a, b)
    }

    /// `k / (2 x)`
    fn k_over_2(&self, x: Fq) -> Result<Fq> {
        self.div(self.k, self.f.mul(self.int(2), x))
    }

    /// `k^2 / (4 x)`
    fn k2_over_4(&self, x: Fq) -> Result<Fq> {
        self.div(self.f.mul(self.k, self.k), self.f.mul(self.int(4), x))
    }
}

pub(super) fn build(spec: &RepSpec) -> Result<Representation> {
    let params = spec.params();
    let f = params.field().clone();
    let sc = Sc { f: &f, k: params.k() };
    let rep = match *spec.family_params() {
        FamilyParams::V01 { beta, a } => v01(&sc, beta, a),
        FamilyParams::V02 { a, b } => v02(&sc, a, b),
        FamilyParams::V03 { beta, a } => diagonal_pair(&sc, beta, a),
        FamilyParams::V04 { a } => diagonal_pair(&sc, Fq::ZERO, a),
        FamilyParams::V05 { a, b } => {
            let mut bl = Builder::new(&f, vec![Label::Pos(0)], vec![Fq::ZERO]);
            bl.set(Gen::X, Label::Pos(0), &[(a, Label::Pos(0))]);
            bl.set(Gen::S, Label::Pos(0), &[(b, Label::Pos(0))]);
            Ok(bl)
        }
        FamilyParams::V11 { mu, d } => v11(&sc, mu, d),
        FamilyParams::V12 { theta } => v12(&sc, theta),
        FamilyParams::V13 { theta } => v13(&sc, theta),
        FamilyParams::V14 { c } => v14_v15(&sc, Some(c), None),
        FamilyParams::V15 { c } => v14_v15(&sc, None, Some(c)),
        FamilyParams::V16 { c, theta } => v16(&sc, c, theta),
        FamilyParams::V17 { a } => v17(&sc, a),
    };
    let builder = rep.map_err(|e| match e {
        Error::DivisionByZero => Error::BadParameter(format!("{}: division by zero in the action formulas", spec.key())),
        other => other,
    })?;
    builder.finish(spec)
}

fn v01(sc: &Sc, beta: Fq, a: Fq) -> Result<Builder> {
    let f = sc.f;
    let k = sc.k;
    let (v0, v1) = (Label::Pos(0), Label::Pos(1));
    let mut b = Builder::new(f, vec![v0, v1], vec![beta, f.neg(beta)]);
    let beta2 = f.mul(beta, beta);
    let k2_4b2 = sc.div(f.mul(k, k), f.mul(sc.int(4), beta2))?;
    b.set(Gen::Y, v0, &[(beta, v0)]);
    b.set(Gen::Y, v1, &[(f.neg(beta), v1)]);
    b.set(Gen::X, v0, &[(a, v0), (f.neg(k2_4b2), v1)]);
    b.set(Gen::X, v1, &[(Fq::ONE, v0), (sc.div(f.sub(Fq::ONE, k2_4b2), a)?, v1)]);
    let k_2b = sc.k_over_2(beta)?;
    // (k^3 - 4 k beta^2) / (8 a beta^3)
    let num = f.sub(f.pow(k, 3), f.mul(sc.int(4), f.mul(k, beta2)));
    let den = f.mul(sc.int(8), f.mul(a, f.pow(beta, 3)));
    b.set(Gen::S, v0, &[(f.neg(k_2b), v0), (sc.div(num, den)?, v1)]);
    let two_a_b_k = sc.div(f.mul(sc.int(2), f.mul(a, beta)), k)?;
    b.set(Gen::S, v1, &[(f.neg(two_a_b_k), v0), (k_2b, v1)]);
    Ok(b)
}

fn v02(sc: &Sc, a: Fq, bb: Fq) -> Result<Builder> {
    let f = sc.f;
    let k = sc.k;
    let (v0, v1) = (Label::Pos(0), Label::Pos(1));
    let mut b = Builder::new(f, vec![v0, v1], vec![Fq::ZERO, Fq::ZERO]);
    b.set(Gen::Y, v1, &[(Fq::ONE, v0)]);
    b.set(Gen::S, v0, &[(Fq::ONE, v0), (f.neg(k), v1)]);
    b.set(Gen::S, v1, &[(f.from_int(-1), v1)]);
    b.set(Gen::X, v0, &[(a, v0), (f.neg(f.mul(a, k)), v1)]);
    b.set(Gen::X, v1, &[(bb, v0), (f.sub(a, f.mul(k, bb)), v1)]);
    Ok(b)
}

/// V03 (and V04 with `beta = 0`): y = diag(beta, -beta), X = diag(a, 1/a), s swaps.
fn diagonal_pair(sc: &Sc, beta: Fq, a: Fq) -> Result<Builder> {
    let f = sc.f;
    let (v0, v1) = (Label::Pos(0), Label::Pos(1));
    let mut b = Builder::new(f, vec![v0, v1], vec![beta, f.neg(beta)]);
    b.set(Gen::Y, v0, &[(beta, v0)]);
    b.set(Gen::Y, v1, &[(f.neg(beta), v1)]);
    b.set(Gen::X, v0, &[(a, v0)]);
    b.set(Gen::X, v1, &[(f.inv(a)?, v1)]);
    b.set(Gen::S, v0, &[(Fq::ONE, v1)]);
    b.set(Gen::S, v1, &[(Fq::ONE, v0)]);
    Ok(b)
}

fn p_of(f: &Field) -> u32 {
    f.characteristic()
}

fn neg_mod(j: u32, p: u32) -> u32 {
    (p - j % p) % p
}

/// `-j - 1 mod p`.
fn reflect(j: u32, p: u32) -> u32 {
    (2 * p - j - 1) % p
}

fn v11(sc: &Sc, mu: Fq, d: Fq) -> Result<Builder> {
    let f = sc.f;
    let p = p_of(f);
    let plus = |c: u32| Label::Shift(1, c);
    let minus = |c: u32| Label::Shift(-1, c);
    let mut labels: Vec<Label> = (0..p).map(plus).collect();
    labels.extend((0..p).map(minus));
    let weights = labels
        .iter()
        .map(|l| match *l {
            Label::Shift(1, c) => f.add(mu, f.from_int(c as i64)),
            Label::Shift(_, c) => f.add(f.neg(mu), f.from_int(c as i64)),
            _ => unreachable!(),
        })
        .collect::<Vec<_>>();
    let mut b = Builder::new(f, labels.clone(), weights.clone());
    for (l, w) in labels.iter().zip(&weights) {
        b.set(Gen::Y, *l, &[(*w, *l)]);
    }
    for j in 1..p {
        let mj = f.add(mu, f.from_int(j as i64));
        let (pos, neg) = (plus(j), minus(neg_mod(j, p)));
        b.set(Gen::S, neg, &[(f.neg(f.inv(mj)?), pos), (sc.k_over_2(mj)?, neg)]);
        b.set(Gen::S, pos, &[(f.sub(sc.k2_over_4(mj)?, mj), neg), (f.neg(sc.k_over_2(mj)?), pos)]);
    }
    let (pos, neg) = (plus(0), minus(0));
    b.set(Gen::S, neg, &[(sc.k_over_2(mu)?, neg), (f.neg(f.div(d, mu)?), pos)]);
    let first = f.sub(sc.k2_over_4(f.mul(d, mu))?, f.div(mu, d)?);
    b.set(Gen::S, pos, &[(first, neg), (f.neg(sc.k_over_2(mu)?), pos)]);
    for l in labels {
        let Label::Shift(sign, c) = l else { unreachable!() };
        b.x_from_s(l, Label::Shift(-sign, reflect(c, p)), Fq::ONE);
    }
    Ok(b)
}

/// The `v` pair for index `j`:
/// `s v[-j] = (1/j) v[j] + k/(2j) v[-j]`,
/// `s v[j] = (j - k^2/(4j)) v[-j] - k/(2j) v[j]`.
fn standard_pair(sc: &Sc, b: &mut Builder, letter: char, j: u32) -> Result<()> {
    let f = sc.f;
    let p = p_of(f);
    let jj = f.from_int(j as i64);
    let (pos, neg) = (Label::Fp(letter, j), Label::Fp(letter, neg_mod(j, p)));
    b.set(Gen::S, neg, &[(f.inv(jj)?, pos), (sc.k_over_2(jj)?, neg)]);
    b.set(Gen::S, pos, &[(f.sub(jj, sc.k2_over_4(jj)?), neg), (f.neg(sc.k_over_2(jj)?), pos)]);
    Ok(())
}

/// The `w` pair for index `j`:
/// `s w[-j] = (1/j^2) v[j] + k/(2j^2) v[-j] - (1/j) w[j] + k/(2j) w[-j]`,
/// `s w[j] = (1 + k^2/(4j^2)) v[-j] + k/(2j^2) v[j] - k/(2j) w[j] + (k^2/(4j) - j) w[-j]`.
fn w_pair(sc: &Sc, b: &mut Builder, j: u32) -> Result<()> {
    let f = sc.f;
    let p = p_of(f);
    let jj = f.from_int(j as i64);
    let j2 = f.mul(jj, jj);
    let (vp, vn) = (Label::Fp('v', j), Label::Fp('v', neg_mod(j, p)));
    let (wp, wn) = (Label::Fp('w', j), Label::Fp('w', neg_mod(j, p)));
    b.set(
        Gen::S,
        wn,
        &[(f.inv(j2)?, vp), (sc.k_over_2(j2)?, vn), (f.neg(f.inv(jj)?), wp), (sc.k_over_2(jj)?, wn)],
    );
    b.set(
        Gen::S,
        wp,
        &[
            (f.add(Fq::ONE, sc.k2_over_4(j2)?), vn),
            (sc.k_over_2(j2)?, vp),
            (f.neg(sc.k_over_2(jj)?), wp),
            (f.sub(sc.k2_over_4(jj)?, jj), wn),
        ],
    );
    Ok(())
}

/// `s v[0] = -k w[0]`, `s w[0] = -(1/k) v[0]`.
fn zero_pair(sc: &Sc, b: &mut Builder) -> Result<()> {
    let f = sc.f;
    let (v0, w0) = (Label::Fp('v', 0), Label::Fp('w', 0));
    b.set(Gen::S, v0, &[(f.neg(sc.k), w0)]);
    b.set(Gen::S, w0, &[(f.neg(f.inv(sc.k)?), v0)]);
    Ok(())
}

fn fp_weights(f: &Field, labels: &[Label]) -> Vec<Fq> {
    labels
        .iter()
        .map(|l| match *l {
            Label::Fp(_, j) => f.from_int(j as i64),
            _ => unreachable!(),
        })
        .collect()
}

/// y is diagonal on every `Fp` label, with `y w[j] = j w[j] + v[j]`.
fn set_y_fp(b: &mut Builder) {
    let labels = b.labels.clone();
    for l in labels {
        let Label::Fp(letter, j) = l else { unreachable!() };
        let w = b.f.from_int(j as i64);
        if letter == 'w' {
            b.set(Gen::Y, l, &[(w, l), (Fq::ONE, Label::Fp('v', j))]);
        } else {
            b.set(Gen::Y, l, &[(w, l)]);
        }
    }
}

fn v12(sc: &Sc, theta: Fq) -> Result<Builder> {
    let f = sc.f;
    let p = p_of(f);
    let h = (p - 1) / 2;
    let mut labels: Vec<Label> = (0..p).map(|j| Label::Fp('v', j)).collect();
    labels.extend((0..p).map(|j| Label::Fp('w', j)));
    let mut b = Builder::new(f, labels.clone(), fp_weights(f, &labels));
    set_y_fp(&mut b);
    zero_pair(sc, &mut b)?;
    for j in 1..=h {
        standard_pair(sc, &mut b, 'v', j)?;
        w_pair(sc, &mut b, j)?;
    }
    let minus_one = f.from_int(-1);
    for j in 0..p {
        let (v, w) = (Label::Fp('v', j), Label::Fp('w', j));
        if j == h {
            b.x_from_s(v, v, theta);
            b.x_from_s(w, w, f.neg(theta));
        } else {
            b.x_from_s(v, Label::Fp('v', reflect(j, p)), minus_one);
            b.x_from_s(w, Label::Fp('w', reflect(j, p)), Fq::ONE);
        }
    }
    Ok(b)
}

/// Even lift `k` in `[2, p-1]`; callers have validated the spec.
fn half_k(sc: &Sc) -> Result<u32> {
    even_k(sc.f, sc.k)
        .map(|k| k / 2)
        .ok_or_else(|| Error::BadParameter("k must be even with 2 <= k <= p-1".into()))
}

fn v13(sc: &Sc, theta: Fq) -> Result<Builder> {
    let f = sc.f;
    let p = p_of(f);
    let h = (p - 1) / 2;
    let hk = half_k(sc)?;
    // v[k/2], ..., v[-k/2 - 1]
    let labels: Vec<Label> = (hk..p - hk).map(|j| Label::Fp('v', j)).collect();
    let mut b = Builder::new(f, labels.clone(), fp_weights(f, &labels));
    set_y_fp(&mut b);
    for j in hk + 1..=h {
        let jj = f.from_int(j as i64);
        let (pos, neg) = (Label::Fp('v', j), Label::Fp('v', neg_mod(j, p)));
        b.set(Gen::S, neg, &[(sc.k_over_2(jj)?, neg), (f.neg(f.inv(jj)?), pos)]);
        b.set(Gen::S, pos, &[(f.sub(sc.k2_over_4(jj)?, jj), neg), (f.neg(sc.k_over_2(jj)?), pos)]);
    }
    let vk = Label::Fp('v', hk);
    b.set(Gen::S, vk, &[(f.from_int(-1), vk)]);
    for l in labels {
        let Label::Fp(_, j) = l else { unreachable!() };
        if j == h {
            b.x_from_s(l, l, theta);
        } else {
            b.x_from_s(l, Label::Fp('v', reflect(j, p)), f.from_int(-1));
        }
    }
    Ok(b)
}

/// V14 when `c14` is given, V15 when `c15` is given. They share the v and w
/// blocks; V15 adds the u block and couples v and u at `(p-1)/2`.
fn v14_v15(sc: &Sc, c14: Option<Fq>, c15: Option<Fq>) -> Result<Builder> {
    let f = sc.f;
    let p = p_of(f);
    let h = (p - 1) / 2;
    let hk = half_k(sc)?;
    let mut labels: Vec<Label> = (0..p).map(|j| Label::Fp('v', j)).collect();
    // w indices -k/2 .. k/2 - 1, ordered by lift
    let mut w_idx: Vec<u32> = (0..hk).chain(p - hk..p).collect();
    w_idx.sort_unstable();
    labels.extend(w_idx.iter().map(|&j| Label::Fp('w', j)));
    if c15.is_some() {
        labels.extend((hk..p - hk).map(|j| Label::Fp('u', j)));
    }
    let mut b = Builder::new(f, labels.clone(), fp_weights(f, &labels));
    set_y_fp(&mut b);
    zero_pair(sc, &mut b)?;
    for j in (1..hk).chain(hk + 1..=h) {
        standard_pair(sc, &mut b, 'v', j)?;
    }
    let (vkp, vkn) = (Label::Fp('v', hk), Label::Fp('v', p - hk));
    b.set(Gen::S, vkn, &[(Fq::ONE, vkn)]);
    b.set(Gen::S, vkp, &[(f.from_int(2), vkn), (f.from_int(-1), vkp)]);
    for j in 1..hk {
        w_pair(sc, &mut b, j)?;
    }
    let two_k = f.div(f.from_int(2), sc.k)?;
    let wkn = Label::Fp('w', p - hk);
    b.set(Gen::S, wkn, &[(f.neg(two_k), vkp), (two_k, vkn), (Fq::ONE, wkn)]);
    if let Some(c) = c15 {
        for j in hk + 1..=h {
            let jj = f.from_int(j as i64);
            let (up, un) = (Label::Fp('u', j), Label::Fp('u', neg_mod(j, p)));
            b.set(Gen::S, up, &[(f.neg(f.inv(jj)?), un), (f.neg(sc.k_over_2(jj)?), up)]);
            b.set(Gen::S, un, &[(f.sub(sc.k2_over_4(jj)?, jj), up), (sc.k_over_2(jj)?, un)]);
        }
        let uk = Label::Fp('u', hk);
        b.set(Gen::S, uk, &[(f.mul(c, two_k), vkn), (f.from_int(-1), uk)]);
    }
    let minus_one = f.from_int(-1);
    for j in 0..p {
        let v = Label::Fp('v', j);
        if j != h {
            b.x_from_s(v, Label::Fp('v', reflect(j, p)), minus_one);
        } else if let Some(c) = c14 {
            b.x_from_s(v, v, c);
        } else {
            b.x_from_s(v, Label::Fp('u', j), Fq::ONE);
        }
    }
    for &j in &w_idx {
        b.x_from_s(Label::Fp('w', j), Label::Fp('w', reflect(j, p)), Fq::ONE);
    }
    if c15.is_some() {
        for j in hk..p - hk {
            let u = Label::Fp('u', j);
            if j == h {
                b.x_from_s(u, Label::Fp('v', j), Fq::ONE);
            } else {
                b.x_from_s(u, Label::Fp('u', reflect(j, p)), minus_one);
            }
        }
    }
    Ok(b)
}

fn v16(sc: &Sc, c: Fq, theta: Fq) -> Result<Builder> {
    let f = sc.f;
    let p = p_of(f);
    let h = (p - 1) / 2;
    let labels: Vec<Label> = (0..p).map(|j| Label::Fp('v', j)).collect();
    let mut b = Builder::new(f, labels.clone(), fp_weights(f, &labels));
    set_y_fp(&mut b);
    b.set(Gen::S, Label::Fp('v', 0), &[(c, Label::Fp('v', 0))]);
    for j in 1..=h {
        let jj = f.from_int(j as i64);
        let (pos, neg) = (Label::Fp('v', j), Label::Fp('v', p - j));
        b.set(Gen::S, pos, &[(f.neg(jj), neg)]);
        b.set(Gen::S, neg, &[(f.neg(f.inv(jj)?), pos)]);
    }
    for j in 0..p {
        let v = Label::Fp('v', j);
        if j == h {
            b.x_from_s(v, v, theta);
        } else {
            b.x_from_s(v, Label::Fp('v', reflect(j, p)), Fq::ONE);
        }
    }
    Ok(b)
}

fn v17(sc: &Sc, a: Fq) -> Result<Builder> {
    let f = sc.f;
    let p = p_of(f);
    let h = (p - 1) / 2;
    let mut labels: Vec<Label> = (0..p).map(|j| Label::Fp('v', j)).collect();
    labels.extend((0..p).map(|j| Label::Fp('u', j)));
    let mut b = Builder::new(f, labels.clone(), fp_weights(f, &labels));
    set_y_fp(&mut b);
    let (v0, u0) = (Label::Fp('v', 0), Label::Fp('u', 0));
    b.set(Gen::S, v0, &[(Fq::ONE, v0)]);
    b.set(Gen::S, u0, &[(a, v0), (f.from_int(-1), u0)]);
    for j in 1..=h {
        let jj = f.from_int(j as i64);
        let (vp, vn) = (Label::Fp('v', j), Label::Fp('v', p - j));
        let (up, un) = (Label::Fp('u', j), Label::Fp('u', p - j));
        b.set(Gen::S, vn, &[(f.neg(f.inv(jj)?), vp)]);
        b.set(Gen::S, vp, &[(f.neg(jj), vn)]);
        b.set(Gen::S, up, &[(f.inv(jj)?, un)]);
        b.set(Gen::S, un, &[(jj, up)]);
    }
    for j in 0..p {
        let (v, u) = (Label::Fp('v', j), Label::Fp('u', j));
        if j == h {
            b.x_from_s(v, u, Fq::ONE);
            b.x_from_s(u, v, Fq::ONE);
        } else {
            b.x_from_s(v, Label::Fp('v', reflect(j, p)), Fq::ONE);
            b.x_from_s(u, Label::Fp('u', reflect(j, p)), Fq::ONE);
        }
    }
    Ok(b)
}

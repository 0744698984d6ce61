#![allow(dead_code)]

use cherednik::algebra::AlgebraParams;
use cherednik::field::{make_field, Field, Fq, Matrix};
use cherednik::reps::{build_rep, sample_spec, Family, FamilyParams, RepSpec, Representation};
use rand::Rng;

pub const PRIMES: [i64; 4] = [3, 5, 7, 11];
pub const DEGREES: [i64; 2] = [1, 2];

pub fn fields() -> Vec<Field> {
    PRIMES
        .iter()
        .flat_map(|&p| DEGREES.iter().map(move |&m| make_field(p, m).unwrap()))
        .collect()
}

pub fn params(f: &Field, t: i64, k: Fq) -> AlgebraParams {
    AlgebraParams::new(f, f.from_int(t), k).unwrap()
}

/// Every `k` for small fields, a spread of values plus every prime-field
/// value for larger ones.
pub fn k_values<R: Rng>(f: &Field, rng: &mut R) -> Vec<Fq> {
    let all: Vec<Fq> = f.elements().collect();
    if all.len() <= 25 {
        return all;
    }
    let mut out: Vec<Fq> = (0..f.characteristic() as i64).map(|i| f.from_int(i)).collect();
    while out.len() < f.characteristic() as usize + 6 {
        let k = f.random(rng);
        if !out.contains(&k) {
            out.push(k);
        }
    }
    out
}

/// `count` sampled instances per admissible family, built.
pub fn sampled_reps<R: Rng>(params: &AlgebraParams, count: usize, rng: &mut R) -> Vec<(RepSpec, Representation)> {
    let mut out = Vec::new();
    for fam in Family::ALL {
        for _ in 0..count {
            let Some(spec) = sample_spec(params, fam, rng) else { break };
            let rep = build_rep(&spec).unwrap_or_else(|e| panic!("{}: {e}", spec.key()));
            out.push((spec, rep));
        }
    }
    out
}

/// All module maps `r1 -> r2` from the full Kronecker system
/// `M r1(g) - r2(g) M = 0`, unknowns ordered row-major.
pub fn kronecker_hom_dim(r1: &Representation, r2: &Representation) -> usize {
    let f = r1.field();
    let (n1, n2) = (r1.dim(), r2.dim());
    let unknowns = n1 * n2;
    let mut rows: Vec<Vec<Fq>> = Vec::new();
    for (a, b) in [(r1.x(), r2.x()), (r1.s(), r2.s()), (r1.y(), r2.y())] {
        // entry (i, j) of M a - b M
        for i in 0..n2 {
            for j in 0..n1 {
                let mut row = vec![Fq::ZERO; unknowns];
                for l in 0..n1 {
                    let idx = i * n1 + l;
                    row[idx] = f.add(row[idx], a.get(l, j));
                }
                for l in 0..n2 {
                    let idx = l * n1 + j;
                    row[idx] = f.sub(row[idx], b.get(i, l));
                }
                rows.push(row);
            }
        }
    }
    Matrix::from_rows(f, rows).unwrap().kernel().len()
}

/// Entrywise product of the factors `k^2/4 - (mu + c)^2`.
pub fn literal_product(f: &Field, mu: Fq, k: Fq) -> Fq {
    let quarter = f.inv(f.from_int(4)).unwrap();
    let mut acc = f.one();
    for c in 0..f.characteristic() as i64 {
        let m = f.add(mu, f.from_int(c));
        acc = f.mul(acc, f.sub(f.mul(quarter, f.mul(k, k)), f.mul(m, m)));
    }
    acc
}

/// Partners that the closed-form clauses declare isomorphic to `spec`.
pub fn engineered_partners(spec: &RepSpec) -> Vec<RepSpec> {
    let params = spec.params();
    let f = params.field();
    let k = params.k();
    let inv = |x: Fq| f.inv(x).unwrap_or(Fq::ZERO);
    let candidates = match *spec.family_params() {
        FamilyParams::V01 { beta, a } => {
            let b2 = f.mul(beta, beta);
            let num = f.sub(f.mul(f.from_int(4), b2), f.mul(k, k));
            let den = f.mul(f.from_int(4), f.mul(a, b2));
            vec![FamilyParams::V01 { beta: f.neg(beta), a: f.mul(num, inv(den)) }]
        }
        FamilyParams::V03 { beta, a } => vec![FamilyParams::V03 { beta: f.neg(beta), a: inv(a) }],
        FamilyParams::V04 { a } => vec![FamilyParams::V04 { a: inv(a) }],
        FamilyParams::V11 { mu, d } => vec![
            FamilyParams::V11 { mu: f.neg(mu), d: f.mul(literal_product(f, mu, k), inv(d)) },
            FamilyParams::V11 { mu: f.add(mu, f.one()), d },
            FamilyParams::V11 { mu: f.sub(f.one(), mu), d: f.mul(literal_product(f, mu, k), inv(d)) },
        ],
        other => vec![other],
    };
    candidates.into_iter().filter_map(|fp| RepSpec::new(params, fp).ok()).collect()
}

//! Module homomorphisms between two representations.
//!
//! The source is written as a span of words applied to a few seed vectors;
//! a homomorphism is then fixed by the images of the seeds, which are
//! solved for from the requirement that it commute with X, s and y.

use crate::field::{EchelonBasis, Fq, Matrix};
use crate::reps::Representation;

/// Basis of `{M : M r1(g) = r2(g) M for g = X, s, y}`; each `M` is
/// `dim r2 x dim r1`.
pub fn hom_space(r1: &Representation, r2: &Representation) -> Vec<Matrix> {
    let f = r1.field();
    let (n1, n2) = (r1.dim(), r2.dim());
    let g1 = [r1.x(), r1.s(), r1.y()];
    let g2 = [r2.x(), r2.s(), r2.y()];

    // Spin standard basis vectors until the source is covered, recording
    // how each new vector arose.
    enum Step {
        Seed(usize),
        Apply(usize, usize),
    }
    let mut echelon = EchelonBasis::new(f, n1);
    let mut vectors: Vec<Vec<Fq>> = Vec::new();
    let mut steps: Vec<Step> = Vec::new();
    let mut seeds = 0;
    for e in 0..n1 {
        if echelon.is_full() {
            break;
        }
        let mut v = vec![Fq::ZERO; n1];
        v[e] = Fq::ONE;
        if !echelon.insert(&v) {
            continue;
        }
        vectors.push(v);
        steps.push(Step::Seed(seeds));
        seeds += 1;
        let mut cursor = vectors.len() - 1;
        while cursor < vectors.len() {
            for (gi, g) in g1.iter().enumerate() {
                let w = g.mul_vec(&vectors[cursor]);
                if echelon.insert(&w) {
                    vectors.push(w);
                    steps.push(Step::Apply(gi, cursor));
                }
            }
            cursor += 1;
        }
    }

    // Image of each vector as a linear function of the seed images.
    let unknowns = seeds * n2;
    let mut images: Vec<Matrix> = Vec::with_capacity(n1);
    for step in &steps {
        let l = match *step {
            Step::Seed(j) => Matrix::from_fn(f, n2, unknowns, |r, c| if c == j * n2 + r { Fq::ONE } else { Fq::ZERO }),
            Step::Apply(gi, parent) => g2[gi].mul(&images[parent]),
        };
        images.push(l);
    }

    let u = Matrix::from_columns(f, n1, &vectors);
    let u_inv = u.inverse().expect("spun vectors are independent");
    let mut rows: Vec<Vec<Fq>> = Vec::new();
    for (gi, g) in g1.iter().enumerate() {
        for (i, v) in vectors.iter().enumerate() {
            let coords = u_inv.mul_vec(&g.mul_vec(v));
            let mut lhs = Matrix::zero(f, n2, unknowns);
            for (j, &c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    lhs = lhs.add(&images[j].scale(c));
                }
            }
            let residual = lhs.sub(&g2[gi].mul(&images[i]));
            rows.extend(residual.to_rows().into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
        }
    }
    let kernel = if rows.is_empty() {
        Matrix::identity(f, unknowns).to_rows()
    } else {
        Matrix::from_rows(f, rows).expect("rows of equal length").kernel()
    };
    kernel
        .iter()
        .map(|w| {
            let cols: Vec<Vec<Fq>> = images.iter().map(|l| l.mul_vec(w)).collect();
            Matrix::from_columns(f, n2, &cols).mul(&u_inv)
        })
        .collect()
}

/// `M r1(g) = r2(g) M` for `g = X, s, y`.
pub fn is_homomorphism(r1: &Representation, r2: &Representation, m: &Matrix) -> bool {
    if m.rows() != r2.dim() || m.cols() != r1.dim() || m.field() != r1.field() {
        return false;
    }
    [(r1.x(), r2.x()), (r1.s(), r2.s()), (r1.y(), r2.y())]
        .iter()
        .all(|(a, b)| m.mul(a) == b.mul(m))
}

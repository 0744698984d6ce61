//! Checks on concrete representations.

mod intertwiner;
mod irreducible;
mod report;

pub use intertwiner::{ba_cycle_scalar, check_intertwiner_maps};
pub use irreducible::{
    exhaustive_invariant_search, is_irreducible, is_irreducible_with_budget, spans_submodule, Verdict, DEFAULT_BUDGET,
};
pub use report::{Check, Report, Status};

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{central_elements, AlgebraElement, AlgebraParams};
use crate::error::{Error, Result};
use crate::field::{Field, Fq, Matrix};
use crate::reps::Representation;

pub const RELATION_NAMES: [&str; 4] = ["sX = X^-1 s", "s^2 = 1", "sy + ys = -k", "XyX^-1 = y - t + ks"];

/// The four matrices `sX - X^-1 s`, `s^2 - 1`, `sy + ys + k`,
/// `X y X^-1 - y + t - k s`, evaluated with the given parameters.
pub fn relation_residues(rep: &Representation, params: &AlgebraParams) -> Vec<(&'static str, Matrix)> {
    let (x, xi, s, y) = (rep.x(), rep.x_inv(), rep.s(), rep.y());
    let (t, k) = (params.t(), params.k());
    let f = rep.field();
    let r1 = s.mul(x).sub(&xi.mul(s));
    let r2 = s.mul(s).add_scalar(f.neg(Fq::ONE));
    let r3 = s.mul(y).add(&y.mul(s)).add_scalar(k);
    let r4 = x.mul(y).mul(xi).sub(y).add_scalar(t).sub(&s.scale(k));
    RELATION_NAMES.into_iter().zip([r1, r2, r3, r4]).collect()
}

/// Verifies the defining relations with the representation's own parameters.
pub fn verify_relations(rep: &Representation) -> Report {
    verify_relations_with(rep, rep.params())
}

/// Verifies the defining relations of H(t, k) for `params`, which may
/// differ from the parameters the matrices were built for.
pub fn verify_relations_with(rep: &Representation, params: &AlgebraParams) -> Report {
    let f = rep.field();
    let mut report = Report::default();
    for (name, m) in relation_residues(rep, params) {
        let check = match m.first_nonzero() {
            None => Check::new(name, true),
            Some((i, j, v)) => Check::new(name, false)
                .with_detail(format!("entry ({i},{j}) is {}", f.format(v)))
                .with_witness(json!({"row": i, "col": j, "value": f.coeffs(v)})),
        };
        report.push(check);
    }
    report
}

/// Scalars by which the distinguished central elements act.
#[derive(Debug, Clone)]
pub struct CentralCharacter {
    pub assignments: Vec<(String, AlgebraElement, Fq)>,
}

impl CentralCharacter {
    pub fn get(&self, name: &str) -> Option<Fq> {
        self.assignments.iter().find(|(n, _, _)| n == name).map(|(_, _, c)| *c)
    }

    pub fn to_json(&self, field: &Field) -> Value {
        Value::Array(
            self.assignments
                .iter()
                .map(|(name, z, c)| json!({"name": name, "element": z.to_string(), "value": field.coeffs(*c)}))
                .collect(),
        )
    }
}

pub fn central_character(rep: &Representation) -> Result<CentralCharacter> {
    let mut assignments = Vec::new();
    for (name, z) in central_elements(rep.params()) {
        let m = rep.matrix_of(&z)?;
        let c = m.scalar_value().ok_or_else(|| Error::NotScalar(name.clone()))?;
        assignments.push((name, z, c));
    }
    Ok(CentralCharacter { assignments })
}

/// Eigenspace data of one candidate eigenvalue.
#[derive(Debug, Clone)]
pub struct EigenReport {
    pub eigenvalue: Fq,
    pub eig_dim: usize,
    pub gen_dim: usize,
    pub basis: Vec<Vec<Fq>>,
}

#[derive(Serialize)]
struct EigenJson {
    eigenvalue: Vec<u32>,
    eig_dim: usize,
    gen_dim: usize,
    basis: Vec<Vec<Vec<u32>>>,
}

impl EigenReport {
    pub fn to_json(&self, field: &Field) -> Value {
        serde_json::to_value(EigenJson {
            eigenvalue: field.coeffs(self.eigenvalue),
            eig_dim: self.eig_dim,
            gen_dim: self.gen_dim,
            basis: self.basis.iter().map(|v| v.iter().map(|&x| field.coeffs(x)).collect()).collect(),
        })
        .expect("plain data serializes")
    }
}

/// Basis of `ker(op - lambda)`.
pub fn eigenspace(op: &Matrix, lambda: Fq) -> Vec<Vec<Fq>> {
    let f = op.field();
    op.add_scalar(f.neg(lambda)).kernel()
}

/// Basis of `ker(op - lambda)^n`, `n` the size of `op`.
pub fn generalized_eigenspace(op: &Matrix, lambda: Fq) -> Vec<Vec<Fq>> {
    let f = op.field();
    op.add_scalar(f.neg(lambda)).pow(op.rows() as u64).kernel()
}

/// Eigenspace and generalized eigenspace dimensions of `op` for each
/// candidate; absent eigenvalues report zero.
pub fn eigenspaces(rep: &Representation, op: &Matrix, candidates: &[Fq]) -> Result<Vec<EigenReport>> {
    if op.rows() != rep.dim() || !op.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "operator is {}x{}, representation has dimension {}",
            op.rows(),
            op.cols(),
            rep.dim()
        )));
    }
    Ok(candidates
        .iter()
        .map(|&lambda| {
            let basis = eigenspace(op, lambda);
            EigenReport {
                eigenvalue: lambda,
                eig_dim: basis.len(),
                gen_dim: generalized_eigenspace(op, lambda).len(),
                basis,
            }
        })
        .collect())
}

/// Eigenvalues of `op` lying in the field, found by evaluating the
/// characteristic polynomial everywhere; fields above 2^16 elements only
/// test 0.
pub fn field_eigenvalues(op: &Matrix) -> Vec<Fq> {
    let f = op.field();
    let cp = op.charpoly();
    if f.order() > 1 << 16 {
        return if cp[0].is_zero() { vec![Fq::ZERO] } else { Vec::new() };
    }
    f.elements().filter(|&x| crate::field::eval_poly(f, &cp, x).is_zero()).collect()
}

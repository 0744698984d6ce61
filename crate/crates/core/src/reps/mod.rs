//! Explicit finite-dimensional representations of H(t, k).

mod families;
mod sample;
mod spec;
mod two_dim;

pub use sample::{admissible_families, sample_spec};
pub use spec::{Family, FamilyParams, RepSpec};
pub use two_dim::{solve_two_dim_model, TwoDimModel};

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{AlgebraElement, AlgebraParams};
use crate::error::{Error, Result};
use crate::field::{Field, Fq, Matrix};

/// Where a representation came from.
#[derive(Debug, Clone, PartialEq)]
pub enum Origin {
    Family(RepSpec),
    DirectSum(Box<Origin>, Box<Origin>),
    Custom,
}

impl Origin {
    pub fn describe(&self) -> String {
        match self {
            Origin::Family(spec) => spec.key(),
            Origin::DirectSum(a, b) => format!("({}) + ({})", a.describe(), b.describe()),
            Origin::Custom => "custom".into(),
        }
    }
}

/// Matrices of X, X^-1, s, y on a labelled basis.
#[derive(Debug, Clone)]
pub struct Representation {
    origin: Origin,
    params: AlgebraParams,
    labels: Vec<String>,
    weights: Option<Vec<Fq>>,
    x: Matrix,
    x_inv: Matrix,
    s: Matrix,
    y: Matrix,
}

/// Builds the representation described by `spec`, checking the defining
/// relations before returning it.
pub fn build_rep(spec: &RepSpec) -> Result<Representation> {
    families::build(spec)
}

impl Representation {
    /// Assembles a representation from raw matrices, inverting X and
    /// checking the defining relations.
    pub fn from_matrices(
        params: &AlgebraParams,
        x: Matrix,
        s: Matrix,
        y: Matrix,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let rep = Self::assemble(Origin::Custom, params, x, s, y, labels, None)?;
        rep.check_relations()?;
        Ok(rep)
    }

    pub(crate) fn assemble(
        origin: Origin,
        params: &AlgebraParams,
        x: Matrix,
        s: Matrix,
        y: Matrix,
        labels: Option<Vec<String>>,
        weights: Option<Vec<Fq>>,
    ) -> Result<Self> {
        let n = x.rows();
        for (name, m) in [("X", &x), ("s", &s), ("y", &y)] {
            if !m.is_square() || m.rows() != n {
                return Err(Error::DimensionMismatch(format!(
                    "{name} is {}x{}, expected {n}x{n}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != params.field() {
                return Err(Error::ContextMismatch);
            }
        }
        if n == 0 {
            return Err(Error::DimensionMismatch("zero-dimensional representation".into()));
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| format!("e{i}")).collect());
        if labels.len() != n {
            return Err(Error::DimensionMismatch(format!("{} labels for dimension {n}", labels.len())));
        }
        let x_inv = x.inverse()?;
        Ok(Representation { origin, params: params.clone(), labels, weights, x, x_inv, s, y })
    }

    pub(crate) fn check_relations(&self) -> Result<()> {
        let failed: Vec<String> = crate::analysis::relation_residues(self, &self.params)
            .into_iter()
            .filter(|(_, m)| !m.is_zero())
            .map(|(name, _)| name.to_string())
            .collect();
        if failed.is_empty() {
            Ok(())
        } else {
            Err(Error::RelationFailed(format!("{} on {}", failed.join(", "), self.origin.describe())))
        }
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    pub fn spec(&self) -> Option<&RepSpec> {
        match &self.origin {
            Origin::Family(s) => Some(s),
            _ => None,
        }
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn field(&self) -> &Field {
        self.params.field()
    }

    pub fn dim(&self) -> usize {
        self.x.rows()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The y-eigenvalue attached to each basis vector, when known.
    pub fn weights(&self) -> Option<&[Fq]> {
        self.weights.as_deref()
    }

    /// Distinct y-eigenvalues from the basis labels, in first-seen order.
    pub fn weight_candidates(&self) -> Option<Vec<Fq>> {
        self.weights.as_ref().map(|w| {
            let mut out: Vec<Fq> = Vec::new();
            for &x in w {
                if !out.contains(&x) {
                    out.push(x);
                }
            }
            out
        })
    }

    pub fn x(&self) -> &Matrix {
        &self.x
    }

    pub fn x_inv(&self) -> &Matrix {
        &self.x_inv
    }

    pub fn s(&self) -> &Matrix {
        &self.s
    }

    pub fn y(&self) -> &Matrix {
        &self.y
    }

    /// X, X^-1, s, y in that order.
    pub fn generators(&self) -> [&Matrix; 4] {
        [&self.x, &self.x_inv, &self.s, &self.y]
    }

    fn check_element(&self, elem: &AlgebraElement) -> Result<()> {
        if elem.params().field() != self.field() {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    /// Applies `elem` to the coordinate vector `v`.
    pub fn act(&self, elem: &AlgebraElement, v: &[Fq]) -> Result<Vec<Fq>> {
        self.check_element(elem)?;
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!("vector of length {} for dimension {}", v.len(), self.dim())));
        }
        let f = self.field();
        let mut out = vec![Fq::ZERO; self.dim()];
        for (m, c) in elem.terms() {
            let mut w = v.to_vec();
            for _ in 0..m.l {
                w = self.y.mul_vec(&w);
            }
            let xm = if m.j >= 0 { &self.x } else { &self.x_inv };
            for _ in 0..m.j.unsigned_abs() {
                w = xm.mul_vec(&w);
            }
            if m.i == 1 {
                w = self.s.mul_vec(&w);
            }
            for (o, &a) in out.iter_mut().zip(&w) {
                *o = f.add(*o, f.mul(c, a));
            }
        }
        Ok(out)
    }

    /// Matrix of `elem`, where `s^i X^j y^l` acts as `S^i X^j Y^l`.
    pub fn matrix_of(&self, elem: &AlgebraElement) -> Result<Matrix> {
        self.check_element(elem)?;
        let f = self.field();
        let n = self.dim();
        let mut x_pows: HashMap<i32, Matrix> = HashMap::new();
        let mut y_pows: HashMap<u32, Matrix> = HashMap::new();
        let mut out = Matrix::zero(f, n, n);
        for (m, c) in elem.terms() {
            let xp = x_pows
                .entry(m.j)
                .or_insert_with(|| {
                    if m.j >= 0 {
                        self.x.pow(m.j as u64)
                    } else {
                        self.x_inv.pow(m.j.unsigned_abs() as u64)
                    }
                })
                .clone();
            let yp = y_pows.entry(m.l).or_insert_with(|| self.y.pow(m.l as u64));
            let mut term = xp.mul(yp);
            if m.i == 1 {
                term = self.s.mul(&term);
            }
            out = out.add(&term.scale(c));
        }
        Ok(out)
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if self.params != other.params {
            return Err(Error::ContextMismatch);
        }
        let labels = self
            .labels
            .iter()
            .map(|l| format!("1:{l}"))
            .chain(other.labels.iter().map(|l| format!("2:{l}")))
            .collect();
        let weights = match (&self.weights, &other.weights) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        Ok(Representation {
            origin: Origin::DirectSum(Box::new(self.origin.clone()), Box::new(other.origin.clone())),
            params: self.params.clone(),
            labels,
            weights,
            x: Matrix::block_diag(&self.x, &other.x),
            x_inv: Matrix::block_diag(&self.x_inv, &other.x_inv),
            s: Matrix::block_diag(&self.s, &other.s),
            y: Matrix::block_diag(&self.y, &other.y),
        })
    }

    /// Same matrices regarded over other parameters (for negative checks).
    pub fn with_params(&self, params: &AlgebraParams) -> Result<Representation> {
        if params.field() != self.field() {
            return Err(Error::ContextMismatch);
        }
        Ok(Representation { params: params.clone(), origin: Origin::Custom, ..self.clone() })
    }

    pub fn to_json(&self) -> Value {
        let f = self.field();
        json!({
            "spec": self.spec().map(RepSpec::to_json),
            "params": params_json(&self.params),
            "dim": self.dim(),
            "labels": self.labels,
            "mats": {
                "X": matrix_json(f, &self.x),
                "Xinv": matrix_json(f, &self.x_inv),
                "s": matrix_json(f, &self.s),
                "y": matrix_json(f, &self.y),
            }
        })
    }

    /// Loads a representation and re-validates it: family representations
    /// are rebuilt from their spec and compared entry by entry, others are
    /// re-checked against the defining relations.
    pub fn from_json(value: &Value) -> Result<Representation> {
        let stored: StoredRep = serde_json::from_value(value.clone()).map_err(|e| Error::Format(e.to_string()))?;
        let params = params_from_json(&stored.params)?;
        let f = params.field().clone();
        let x = matrix_from_json(&f, &stored.mats.x)?;
        let x_inv = matrix_from_json(&f, &stored.mats.x_inv)?;
        let s = matrix_from_json(&f, &stored.mats.s)?;
        let y = matrix_from_json(&f, &stored.mats.y)?;
        if x.rows() != stored.dim {
            return Err(Error::Format(format!("dim {} does not match matrices", stored.dim)));
        }
        let rep = match stored.spec.filter(|v| !v.is_null()) {
            Some(spec_json) => {
                let spec = RepSpec::from_json(&spec_json)?;
                if spec.params() != &params {
                    return Err(Error::Format("spec parameters differ from stored parameters".into()));
                }
                let rep = build_rep(&spec)?;
                if rep.x != x || rep.s != s || rep.y != y || rep.labels != stored.labels {
                    return Err(Error::Format(format!("stored matrices differ from a fresh build of {}", spec.key())));
                }
                rep
            }
            None => Representation::from_matrices(&params, x, s, y, Some(stored.labels))?,
        };
        if rep.x_inv != x_inv {
            return Err(Error::Format("stored Xinv is not the inverse of X".into()));
        }
        Ok(rep)
    }
}

#[derive(Deserialize)]
struct StoredMats {
    #[serde(rename = "X")]
    x: Vec<Vec<Vec<u32>>>,
    #[serde(rename = "Xinv")]
    x_inv: Vec<Vec<Vec<u32>>>,
    s: Vec<Vec<Vec<u32>>>,
    y: Vec<Vec<Vec<u32>>>,
}

#[derive(Deserialize)]
struct StoredRep {
    spec: Option<Value>,
    params: Value,
    dim: usize,
    labels: Vec<String>,
    mats: StoredMats,
}

#[derive(Serialize, Deserialize)]
struct ParamsJson {
    field: crate::field::FieldDescriptor,
    t: Vec<u32>,
    k: Vec<u32>,
}

pub(crate) fn params_json(params: &AlgebraParams) -> Value {
    let f = params.field();
    serde_json::to_value(ParamsJson { field: f.descriptor(), t: f.coeffs(params.t()), k: f.coeffs(params.k()) })
        .expect("plain data serializes")
}

pub(crate) fn params_from_json(value: &Value) -> Result<AlgebraParams> {
    let p: ParamsJson = serde_json::from_value(value.clone()).map_err(|e| Error::Format(e.to_string()))?;
    let f = p.field.to_field()?;
    let t = f.from_canonical_coeffs(&p.t)?;
    let k = f.from_canonical_coeffs(&p.k)?;
    AlgebraParams::new(&f, t, k)
}

pub fn matrix_json(field: &Field, m: &Matrix) -> Value {
    let rows: Vec<Vec<Vec<u32>>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|&x| field.coeffs(x)).collect())
        .collect();
    serde_json::to_value(rows).expect("plain data serializes")
}

fn matrix_from_json(field: &Field, rows: &[Vec<Vec<u32>>]) -> Result<Matrix> {
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|c| field.from_canonical_coeffs(c)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let m = Matrix::from_rows(field, parsed)?;
    if !m.is_square() {
        return Err(Error::Format("generator matrices must be square".into()));
    }
    Ok(m)
}

//! Randomized Norton test and an exhaustive oracle.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::{eigenspace, field_eigenvalues, generalized_eigenspace};
use crate::error::{Error, Result};
use crate::field::{spin, EchelonBasis, Field, Fq, Matrix};
use crate::reps::Representation;

pub const DEFAULT_BUDGET: usize = 64;
const MAX_WORD_LEN: usize = 4;
const MAX_KERNEL_LINES: u64 = 4096;
const MAX_EXHAUSTIVE_LINES: u64 = 250_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Irreducible,
    /// Basis of a proper nonzero invariant subspace.
    Reducible(Vec<Vec<Fq>>),
}

impl Verdict {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Verdict::Irreducible)
    }

    pub fn to_json(&self, field: &Field) -> Value {
        match self {
            Verdict::Irreducible => json!({"verdict": "irreducible"}),
            Verdict::Reducible(basis) => json!({
                "verdict": "reducible",
                "witness": basis.iter().map(|v| v.iter().map(|&x| field.coeffs(x)).collect::<Vec<_>>()).collect::<Vec<_>>(),
            }),
        }
    }
}

/// True when `basis` spans a proper nonzero subspace stable under X, X^-1, s, y.
pub fn spans_submodule(rep: &Representation, basis: &[Vec<Fq>]) -> bool {
    let f = rep.field();
    let mut span = EchelonBasis::new(f, rep.dim());
    for v in basis {
        if v.len() != rep.dim() {
            return false;
        }
        span.insert(v);
    }
    if span.dim() == 0 || span.is_full() {
        return false;
    }
    let vectors = span.vectors().to_vec();
    rep.generators().iter().all(|g| vectors.iter().all(|v| span.contains(&g.mul_vec(v))))
}

pub fn is_irreducible(rep: &Representation, seed: u64) -> Result<Verdict> {
    is_irreducible_with_budget(rep, seed, DEFAULT_BUDGET)
}

/// Norton's criterion with random elements `theta` built from words of
/// length at most four in the generators. Each attempt tries `theta - lambda`
/// for every root `lambda` of the characteristic polynomial in the field.
pub fn is_irreducible_with_budget(rep: &Representation, seed: u64, budget: usize) -> Result<Verdict> {
    let n = rep.dim();
    if n == 1 {
        return Ok(Verdict::Irreducible);
    }
    let f = rep.field();
    let gens = rep.generators();
    let gens_t: Vec<Matrix> = gens.iter().map(|g| g.transpose()).collect();
    let gens_t: Vec<&Matrix> = gens_t.iter().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..budget {
        let theta = random_element(f, &gens, &mut rng);
        for lambda in field_eigenvalues(&theta) {
            let m = theta.add_scalar(f.neg(lambda));
            if let Some(v) = norton_step(f, &m, &gens, &gens_t) {
                return Ok(v);
            }
        }
    }
    Err(Error::Inconclusive(budget))
}

fn random_element(f: &Field, gens: &[&Matrix; 4], rng: &mut ChaCha8Rng) -> Matrix {
    let n = gens[0].rows();
    let mut out = Matrix::scalar(f, n, f.random(rng));
    for _ in 0..3 {
        let len = rng.gen_range(1..=MAX_WORD_LEN);
        let mut w = gens[rng.gen_range(0..4)].clone();
        for _ in 1..len {
            w = w.mul(gens[rng.gen_range(0..4)]);
        }
        out = out.add(&w.scale(f.random_nonzero(rng)));
    }
    out
}

/// One singular element: `Some` when it settles the question.
fn norton_step(f: &Field, m: &Matrix, gens: &[&Matrix; 4], gens_t: &[&Matrix]) -> Option<Verdict> {
    let kernel = m.kernel();
    if kernel.is_empty() {
        return None;
    }
    let seeds: Vec<Vec<Fq>> = if kernel.len() == 1 {
        kernel.clone()
    } else if line_count(f.order(), kernel.len()) <= MAX_KERNEL_LINES {
        lines_in_span(f, &kernel)
    } else {
        // Too many lines to certify; the basis vectors may still expose a witness.
        for v in &kernel {
            let closure = spin(f, std::slice::from_ref(v), gens);
            if !closure.is_full() {
                return Some(Verdict::Reducible(closure.vectors().to_vec()));
            }
        }
        return None;
    };
    for v in &seeds {
        let closure = spin(f, std::slice::from_ref(v), gens);
        if !closure.is_full() {
            return Some(Verdict::Reducible(closure.vectors().to_vec()));
        }
    }
    let w = m.transpose().kernel().swap_remove(0);
    let dual = spin(f, &[w], gens_t);
    if !dual.is_full() {
        let annihilator = Matrix::from_rows(f, dual.vectors().to_vec()).expect("rows of equal length").kernel();
        return Some(Verdict::Reducible(annihilator));
    }
    Some(Verdict::Irreducible)
}

fn line_count(q: u64, d: usize) -> u64 {
    let mut total: u64 = 0;
    let mut pw: u64 = 1;
    for _ in 0..d {
        total = total.saturating_add(pw);
        pw = pw.saturating_mul(q);
    }
    total
}

/// One representative of every line in the span of `basis`, normalized
/// so that the first nonzero coefficient is 1.
fn lines_in_span(f: &Field, basis: &[Vec<Fq>]) -> Vec<Vec<Fq>> {
    let elems: Vec<Fq> = f.elements().collect();
    let q = elems.len();
    let d = basis.len();
    let n = basis.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for lead in 0..d {
        let rest = d - lead - 1;
        let mut idx = vec![0usize; rest];
        loop {
            let mut v = basis[lead].clone();
            for (r, &e) in idx.iter().enumerate() {
                let c = elems[e];
                if !c.is_zero() {
                    for (vi, &bi) in v.iter_mut().zip(&basis[lead + 1 + r]) {
                        *vi = f.add(*vi, f.mul(c, bi));
                    }
                }
            }
            debug_assert_eq!(v.len(), n);
            out.push(v);
            let mut pos = 0;
            while pos < rest {
                idx[pos] += 1;
                if idx[pos] < q {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == rest {
                break;
            }
        }
    }
    out
}

/// Spins every line; a proper closure is a witness. Lines are taken from
/// the whole space when there are at most 250000 of them, and otherwise
/// from the y-eigenspaces, which suffices when the characteristic
/// polynomial of y splits over the field.
pub fn exhaustive_invariant_search(rep: &Representation) -> Result<Verdict> {
    let n = rep.dim();
    let f = rep.field();
    let q = f.order();
    if n > 10 || q > 9 {
        return Err(Error::BudgetExceeded(format!("dimension {n} over a field of order {q}")));
    }
    let gens = rep.generators();
    let candidates: Vec<Vec<Fq>> = if line_count(q, n) <= MAX_EXHAUSTIVE_LINES {
        let ident: Vec<Vec<Fq>> = Matrix::identity(f, n).to_rows();
        lines_in_span(f, &ident)
    } else {
        let roots = field_eigenvalues(rep.y());
        let split: usize = roots.iter().map(|&r| generalized_eigenspace(rep.y(), r).len()).sum();
        if split != n {
            return Err(Error::BudgetExceeded(format!("y does not split and there are {} lines", line_count(q, n))));
        }
        let mut out = Vec::new();
        for r in roots {
            let basis = eigenspace(rep.y(), r);
            if line_count(q, basis.len()) > MAX_EXHAUSTIVE_LINES {
                return Err(Error::BudgetExceeded(format!("eigenspace of dimension {}", basis.len())));
            }
            out.extend(lines_in_span(f, &basis));
        }
        out
    };
    for v in &candidates {
        let closure = spin(f, std::slice::from_ref(v), &gens);
        if !closure.is_full() {
            return Ok(Verdict::Reducible(closure.vectors().to_vec()));
        }
    }
    Ok(Verdict::Irreducible)
}

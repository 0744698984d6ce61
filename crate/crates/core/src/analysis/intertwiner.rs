//! The intertwiners `A = sX` and `B = sy + k/2` on concrete modules.

use serde_json::json;

use super::{eigenspace, field_eigenvalues, generalized_eigenspace, Check, Report};
use crate::error::{Error, Result};
use crate::field::{EchelonBasis, Field, Fq, Matrix};
use crate::reps::{Family, Representation};

fn a_matrix(rep: &Representation) -> Matrix {
    rep.s().mul(rep.x())
}

fn b_matrix(rep: &Representation) -> Result<Matrix> {
    let f = rep.field();
    let half_k = f.div(rep.params().k(), f.from_int(2))?;
    Ok(rep.s().mul(rep.y()).add_scalar(half_k))
}

fn span_of(f: &Field, n: usize, vectors: &[Vec<Fq>]) -> EchelonBasis {
    let mut b = EchelonBasis::new(f, n);
    for v in vectors {
        b.insert(v);
    }
    b
}

fn image_rank(f: &Field, n: usize, op: &Matrix, basis: &[Vec<Fq>]) -> usize {
    let images: Vec<Vec<Fq>> = basis.iter().map(|v| op.mul_vec(v)).collect();
    span_of(f, n, &images).dim()
}

fn maps_into(op: &Matrix, basis: &[Vec<Fq>], target: &EchelonBasis) -> bool {
    basis.iter().all(|v| target.contains(&op.mul_vec(v)))
}

type Space = fn(&Matrix, Fq) -> Vec<Vec<Fq>>;

/// Checks on the y-eigenspaces (and generalized eigenspaces) of a module
/// over H(1, k):
///
/// * `A^2 = 1` and `A` maps `V[b]` isomorphically onto `V[-b-1]`;
/// * `B` maps `V[b]` into `V[-b]`;
/// * `B` is injective on `V[b]` exactly when `b` is not `k/2` or `-k/2`
///   (checked as stated, together with the one-sided version);
/// * on `V[k/2] + V[-k/2]` the square of `B` vanishes (on the generalized
///   spaces it is nilpotent), so `B` is not injective there.
pub fn check_intertwiner_maps(rep: &Representation) -> Result<Report> {
    let f = rep.field();
    let params = rep.params();
    if params.t() != Fq::ONE {
        return Err(Error::BadParameter("the intertwiner checks need t = 1".into()));
    }
    let n = rep.dim();
    let k = params.k();
    let half_k = f.div(k, f.from_int(2))?;
    let special = [half_k, f.neg(half_k)];
    let a = a_matrix(rep);
    let b = b_matrix(rep)?;
    let mut candidates = rep.weight_candidates().unwrap_or_else(|| field_eigenvalues(rep.y()));
    for extra in special {
        if !candidates.contains(&extra) {
            candidates.push(extra);
        }
    }
    let mut report = Report::default();
    report.push(match a.mul(&a).add_scalar(f.neg(Fq::ONE)).first_nonzero() {
        None => Check::new("A^2 = 1", true),
        Some((i, j, v)) => Check::new("A^2 = 1", false).with_detail(format!("entry ({i},{j}) of A^2 - 1 is {}", f.format(v))),
    });
    let spaces: [(&str, Space); 2] = [("V", eigenspace), ("generalized V", generalized_eigenspace)];
    for (tag, space) in spaces {
        let mut a_fail = None;
        let mut b_into_fail = None;
        let mut iff_fail = None;
        let mut if_fail = None;
        for &beta in &candidates {
            let src = space(rep.y(), beta);
            if src.is_empty() {
                continue;
            }
            let a_tgt = space(rep.y(), f.sub(f.neg(beta), Fq::ONE));
            let a_ok = a_tgt.len() == src.len()
                && maps_into(&a, &src, &span_of(f, n, &a_tgt))
                && image_rank(f, n, &a, &src) == src.len();
            if !a_ok && a_fail.is_none() {
                a_fail = Some(beta);
            }
            if !maps_into(&b, &src, &span_of(f, n, &space(rep.y(), f.neg(beta)))) && b_into_fail.is_none() {
                b_into_fail = Some(beta);
            }
            let injective = image_rank(f, n, &b, &src) == src.len();
            let generic = !special.contains(&beta);
            if injective != generic && iff_fail.is_none() {
                iff_fail = Some((beta, injective));
            }
            if generic && !injective && if_fail.is_none() {
                if_fail = Some(beta);
            }
        }
        let fmt = |x: Fq| f.format(x);
        report.push(match a_fail {
            None => Check::new(format!("A: {tag}[b] -> {tag}[-b-1] is bijective"), true),
            Some(beta) => Check::new(format!("A: {tag}[b] -> {tag}[-b-1] is bijective"), false)
                .with_detail(format!("fails at b = {}", fmt(beta)))
                .with_witness(json!({"b": f.coeffs(beta)})),
        });
        report.push(match b_into_fail {
            None => Check::new(format!("B maps {tag}[b] into {tag}[-b]"), true),
            Some(beta) => Check::new(format!("B maps {tag}[b] into {tag}[-b]"), false)
                .with_detail(format!("fails at b = {}", fmt(beta)))
                .with_witness(json!({"b": f.coeffs(beta)})),
        });
        report.push(match iff_fail {
            None => Check::new(format!("B injective on {tag}[b] iff b != +-k/2"), true),
            Some((beta, inj)) => Check::new(format!("B injective on {tag}[b] iff b != +-k/2"), false)
                .with_detail(format!(
                    "b = {}: B is {}injective",
                    fmt(beta),
                    if inj { "" } else { "not " }
                ))
                .with_witness(json!({"b": f.coeffs(beta), "injective": inj})),
        });
        report.push(match if_fail {
            None => Check::new(format!("B injective on {tag}[b] if b != +-k/2"), true),
            Some(beta) => Check::new(format!("B injective on {tag}[b] if b != +-k/2"), false)
                .with_detail(format!("fails at b = {}", fmt(beta)))
                .with_witness(json!({"b": f.coeffs(beta)})),
        });
        let mut joint: Vec<Vec<Fq>> = space(rep.y(), special[0]);
        if special[1] != special[0] {
            joint.extend(space(rep.y(), special[1]));
        }
        if tag == "V" {
            let b2 = b.mul(&b);
            let square_ok = joint.iter().all(|v| b2.mul_vec(v).iter().all(|x| x.is_zero()));
            report.push(Check::new("B^2 = 0 on V[k/2] + V[-k/2]", square_ok));
        }
        let injective_on_joint = !joint.is_empty() && image_rank(f, n, &b, &joint) == joint.len();
        report.push(Check::new(format!("B not injective on {tag}[k/2] + {tag}[-k/2]"), !injective_on_joint));
    }
    Ok(report)
}

/// The scalars by which `(BA)^p` acts on the `+mu` and `-mu` halves of a
/// V11 module.
pub fn ba_cycle_scalar(rep: &Representation) -> Result<(Fq, Fq)> {
    match rep.spec() {
        Some(spec) if spec.family() == Family::V11 => {}
        _ => return Err(Error::BadParameter("the cycle scalar is defined on V11 modules".into())),
    }
    let f = rep.field();
    let p = f.characteristic() as usize;
    let cycle = b_matrix(rep)?.mul(&a_matrix(rep)).pow(p as u64);
    let block = |lo: usize, name: &str| -> Result<Fq> {
        let c = cycle.get(lo, lo);
        for i in 0..2 * p {
            for j in lo..lo + p {
                let expect = if i == j { c } else { Fq::ZERO };
                if cycle.get(i, j) != expect {
                    return Err(Error::NotScalarOnBlock(name.into()));
                }
            }
        }
        Ok(c)
    };
    Ok((block(0, "+mu")?, block(p, "-mu")?))
}

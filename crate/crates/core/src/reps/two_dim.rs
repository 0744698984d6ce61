use crate::algebra::AlgebraParams;
use crate::error::{Error, Result};
use crate::field::{Fq, Matrix};

/// A two-dimensional representation of H(0, k) with y = diag(beta, -beta),
/// written as
///
/// ```text
/// s = [[gamma0, delta0], [gamma1, delta1]],  X = [[theta0, omega0], [theta1, omega1]].
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoDimModel {
    pub beta: Fq,
    pub gamma0: Fq,
    pub gamma1: Fq,
    pub delta0: Fq,
    pub delta1: Fq,
    pub theta0: Fq,
    pub theta1: Fq,
    pub omega0: Fq,
    pub omega1: Fq,
}

/// Solves for the model with `omega0 = 1`:
///
/// ```text
/// omega1 = (1 - k^2 / (4 beta^2)) / theta0
/// theta1 = theta0 omega1 - 1
/// gamma0 = (2 beta / k) (theta0 omega1 - 1)
/// gamma1 = (2 beta / k) (theta0 omega1^2 - omega1)
/// delta0 = -(2 beta / k) theta0
/// delta1 = (2 beta / k) (1 - theta0 omega1)
/// ```
pub fn solve_two_dim_model(beta: Fq, theta0: Fq, params: &AlgebraParams) -> Result<TwoDimModel> {
    let f = params.field();
    let k = params.k();
    if !params.t().is_zero() {
        return Err(Error::BadParameter("the two-dimensional model needs t = 0".into()));
    }
    if beta.is_zero() || theta0.is_zero() || k.is_zero() {
        return Err(Error::BadParameter("beta, theta0 and k must be nonzero".into()));
    }
    let four_b2 = f.mul(f.from_int(4), f.mul(beta, beta));
    let omega1 = f.div(f.sub(Fq::ONE, f.div(f.mul(k, k), four_b2)?), theta0)?;
    let t0w1 = f.mul(theta0, omega1);
    let theta1 = f.sub(t0w1, Fq::ONE);
    let r = f.div(f.mul(f.from_int(2), beta), k)?;
    Ok(TwoDimModel {
        beta,
        gamma0: f.mul(r, theta1),
        gamma1: f.mul(r, f.sub(f.mul(t0w1, omega1), omega1)),
        delta0: f.neg(f.mul(r, theta0)),
        delta1: f.mul(r, f.sub(Fq::ONE, t0w1)),
        theta0,
        theta1,
        omega0: Fq::ONE,
        omega1,
    })
}

impl TwoDimModel {
    pub fn s_matrix(&self, params: &AlgebraParams) -> Matrix {
        let f = params.field();
        Matrix::from_rows(f, vec![vec![self.gamma0, self.delta0], vec![self.gamma1, self.delta1]])
            .expect("2x2 rows")
    }

    pub fn x_matrix(&self, params: &AlgebraParams) -> Matrix {
        let f = params.field();
        Matrix::from_rows(f, vec![vec![self.theta0, self.omega0], vec![self.theta1, self.omega1]])
            .expect("2x2 rows")
    }

    pub fn y_matrix(&self, params: &AlgebraParams) -> Matrix {
        let f = params.field();
        Matrix::from_rows(f, vec![vec![self.beta, Fq::ZERO], vec![Fq::ZERO, f.neg(self.beta)]]).expect("2x2 rows")
    }
}

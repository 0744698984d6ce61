use rand::Rng;

use super::spec::{Family, FamilyParams, RepSpec};
use crate::algebra::AlgebraParams;
use crate::field::{Field, Fq};

const ATTEMPTS: usize = 200;

fn is_sign_parameter(family: Family, name: &str) -> bool {
    matches!(
        (family, name),
        (Family::V02, "a")
            | (Family::V05, _)
            | (Family::V12, _)
            | (Family::V13, _)
            | (Family::V14, _)
            | (Family::V16, _)
    )
}

fn draw<R: Rng + ?Sized>(f: &Field, family: Family, name: &str, rng: &mut R) -> Fq {
    if is_sign_parameter(family, name) {
        if rng.gen_bool(0.5) {
            Fq::ONE
        } else {
            f.from_int(-1)
        }
    } else {
        f.random(rng)
    }
}

/// A random admissible instance of `family`, or `None` when none turned up
/// (for instance when the family needs a larger field).
pub fn sample_spec<R: Rng + ?Sized>(params: &AlgebraParams, family: Family, rng: &mut R) -> Option<RepSpec> {
    let f = params.field();
    for _ in 0..ATTEMPTS {
        let values: Vec<Fq> = family.parameter_names().iter().map(|n| draw(f, family, n, rng)).collect();
        let fp = FamilyParams::from_values(family, &values).expect("value count matches the family");
        if let Ok(spec) = RepSpec::new(params, fp) {
            return Some(spec);
        }
    }
    None
}

/// Families for which sampling finds an admissible instance over `params`.
pub fn admissible_families<R: Rng + ?Sized>(params: &AlgebraParams, rng: &mut R) -> Vec<Family> {
    Family::ALL.into_iter().filter(|&fam| sample_spec(params, fam, rng).is_some()).collect()
}

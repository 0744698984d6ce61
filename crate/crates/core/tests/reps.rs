mod common;

use cherednik::algebra::{parse, AlgebraParams};
use cherednik::analysis::verify_relations;
use cherednik::field::{make_field, Fq, Matrix};
use cherednik::reps::{build_rep, sample_spec, solve_two_dim_model, Family, FamilyParams, RepSpec, Representation};
use cherednik::Error;
use common::{fields, k_values, params, sampled_reps};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Dimensions as a plain table, with `k` lifted to `[0, p)`.
fn table_dim(fam: Family, p: usize, k: usize) -> usize {
    match fam {
        Family::V05 => 1,
        Family::V01 | Family::V02 | Family::V03 | Family::V04 => 2,
        Family::V16 => p,
        Family::V13 => p - k,
        Family::V14 => p + k,
        _ => 2 * p,
    }
}

#[test]
fn sampled_instances_satisfy_relations_and_dimensions() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for f in fields() {
        let ks = k_values(&f, &mut rng);
        for t in [0, 1] {
            for &k in &ks {
                let params = params(&f, t, k);
                for (spec, rep) in sampled_reps(&params, 3, &mut rng) {
                    let report = verify_relations(&rep);
                    assert!(report.all_pass(), "{}: {}", spec.key(), report.to_tsv());
                    let p = f.characteristic() as usize;
                    let k_lift = f.lift(k).unwrap_or(0) as usize;
                    assert_eq!(rep.dim(), table_dim(spec.family(), p, k_lift), "{}", spec.key());
                }
            }
        }
    }
}

#[test]
fn families_need_their_parameter_regime() {
    let f = make_field(7, 1).unwrap();
    let rational = params(&f, 0, f.one());
    let trig = params(&f, 1, f.from_int(2));
    assert!(RepSpec::new(&trig, FamilyParams::V01 { beta: f.one(), a: f.one() }).is_err());
    assert!(RepSpec::new(&rational, FamilyParams::V13 { theta: f.one() }).is_err());
    assert!(RepSpec::new(&trig, FamilyParams::V13 { theta: f.from_int(2) }).is_err());
    assert!(RepSpec::new(&params(&f, 0, f.zero()), FamilyParams::V04 { a: f.from_int(-1) }).is_err());
    // mu in the prime field
    assert!(RepSpec::new(&trig, FamilyParams::V11 { mu: f.from_int(3), d: f.one() }).is_err());
    // k in the prime field
    assert!(RepSpec::new(&trig, FamilyParams::V12 { theta: f.one() }).is_err());
}

#[test]
fn v05_example() {
    let f = make_field(7, 1).unwrap();
    let params = params(&f, 0, f.zero());
    let rep = build_rep(&RepSpec::new(&params, FamilyParams::V05 { a: f.one(), b: f.from_int(-1) }).unwrap()).unwrap();
    assert_eq!(rep.dim(), 1);
    assert_eq!(rep.y().get(0, 0), f.zero());
    assert_eq!(rep.x().get(0, 0), f.one());
    assert_eq!(rep.s().get(0, 0), f.from_int(6));
}

#[test]
fn v13_example() {
    let f = make_field(5, 1).unwrap();
    let params = params(&f, 1, f.from_int(2));
    let rep = build_rep(&RepSpec::new(&params, FamilyParams::V13 { theta: f.one() }).unwrap()).unwrap();
    assert_eq!(rep.dim(), 3);
    assert_eq!(rep.weights().unwrap(), &[f.from_int(1), f.from_int(2), f.from_int(3)]);
    assert_eq!(rep.s().column(0), vec![f.from_int(-1), f.zero(), f.zero()]);
}

#[test]
fn v01_example() {
    let f = make_field(7, 1).unwrap();
    let params = params(&f, 0, f.from_int(2));
    let rep = build_rep(&RepSpec::new(&params, FamilyParams::V01 { beta: f.one(), a: f.one() }).unwrap()).unwrap();
    assert_eq!(rep.s().column(0), vec![f.from_int(6), f.zero()]);
}

#[test]
fn v03_action_on_first_vector() {
    let f = make_field(11, 1).unwrap();
    let params = params(&f, 0, f.zero());
    let beta = f.from_int(3);
    let rep = build_rep(&RepSpec::new(&params, FamilyParams::V03 { beta, a: f.from_int(5) }).unwrap()).unwrap();
    let v0 = vec![f.one(), f.zero()];
    assert_eq!(rep.act(&parse("y", &params).unwrap(), &v0).unwrap(), vec![beta, f.zero()]);
    assert_eq!(rep.act(&parse("s", &params).unwrap(), &v0).unwrap(), vec![f.zero(), f.one()]);
    assert_eq!(rep.act(&parse("1", &params).unwrap(), &v0).unwrap(), v0);
    assert!(matches!(rep.act(&parse("y", &params).unwrap(), &[f.one()]), Err(Error::DimensionMismatch(_))));
}

#[test]
fn matrix_of_examples() {
    let f = make_field(3, 2).unwrap();
    let params = params(&f, 1, f.zero());
    let mu = f.gen();
    let rep = build_rep(&RepSpec::new(&params, FamilyParams::V11 { mu, d: f.from_int(2) }).unwrap()).unwrap();
    let id = Matrix::identity(&f, rep.dim());
    assert_eq!(rep.matrix_of(&parse("s*s", &params).unwrap()).unwrap(), id);
    assert_eq!(rep.matrix_of(&parse("X*Xinv", &params).unwrap()).unwrap(), id);
    let d = f.sub(f.pow(mu, 3), mu);
    let expect = id.scale(f.mul(d, d));
    assert_eq!(rep.matrix_of(&parse("(y^3 - y)^2", &params).unwrap()).unwrap(), expect);
}

#[test]
fn v12_wraparound_sign() {
    for (p, m) in [(3, 2), (5, 2), (7, 2)] {
        let f = make_field(p, m).unwrap();
        let params = params(&f, 1, f.gen());
        let h = (p as usize - 1) / 2;
        for theta in [f.one(), f.from_int(-1)] {
            let rep = build_rep(&RepSpec::new(&params, FamilyParams::V12 { theta }).unwrap()).unwrap();
            let n = p as usize;
            let xs = |i: usize| rep.x().column(i);
            let ss = |i: usize| rep.s().column(i);
            let scaled = |c: Fq, v: Vec<Fq>| v.into_iter().map(|x| f.mul(c, x)).collect::<Vec<_>>();
            assert_eq!(xs(h), scaled(theta, ss(h)));
            assert_eq!(xs(n + h), scaled(f.neg(theta), ss(n + h)));
        }
    }
}

#[test]
fn direct_sums_are_block_diagonal() {
    let f = make_field(5, 1).unwrap();
    let params = params(&f, 0, f.zero());
    let a = build_rep(&RepSpec::new(&params, FamilyParams::V05 { a: f.one(), b: f.one() }).unwrap()).unwrap();
    let b = build_rep(&RepSpec::new(&params, FamilyParams::V03 { beta: f.one(), a: f.from_int(2) }).unwrap()).unwrap();
    let sum = a.direct_sum(&b).unwrap();
    assert_eq!(sum.dim(), 3);
    assert_eq!(sum.x(), &Matrix::block_diag(a.x(), b.x()));
    assert!(verify_relations(&sum).all_pass());
    let other = params.with_k(f.one());
    let c = build_rep(&RepSpec::new(&other, FamilyParams::V02 { a: f.one(), b: f.one() }).unwrap()).unwrap();
    assert!(a.direct_sum(&c).is_err());
}

#[test]
fn saved_representations_load_identically() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let dir = tempfile::tempdir().unwrap();
    for (p, m, t, k) in [(7, 1, 0, 3), (7, 1, 1, 4), (5, 2, 1, 2), (3, 2, 0, 0)] {
        let f = make_field(p, m).unwrap();
        let params = params(&f, t, f.from_int(k));
        for (spec, rep) in sampled_reps(&params, 1, &mut rng) {
            let path = dir.path().join(format!("{}.json", spec.family()));
            std::fs::write(&path, serde_json::to_string(&rep.to_json()).unwrap()).unwrap();
            let text = std::fs::read_to_string(&path).unwrap();
            let loaded = Representation::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
            assert_eq!(loaded.x(), rep.x());
            assert_eq!(loaded.s(), rep.s());
            assert_eq!(loaded.y(), rep.y());
            assert_eq!(loaded.spec(), Some(&spec));
            assert!(verify_relations(&loaded).all_pass());
        }
    }
}

#[test]
fn tampered_json_is_rejected() {
    let f = make_field(7, 1).unwrap();
    let params = params(&f, 0, f.zero());
    let rep = build_rep(&RepSpec::new(&params, FamilyParams::V04 { a: f.from_int(3) }).unwrap()).unwrap();
    let mut json = rep.to_json();
    let entry = f.add(rep.s().get(0, 0), f.one());
    json["mats"]["s"][0][0] = serde_json::json!(f.coeffs(entry));
    assert!(matches!(Representation::from_json(&json), Err(Error::Format(_))));
    // without a spec the relations are checked instead
    json["spec"] = serde_json::Value::Null;
    assert!(matches!(Representation::from_json(&json), Err(Error::RelationFailed(_))));
}

#[test]
fn inline_specs_parse() {
    let f = make_field(3, 2).unwrap();
    let params = params(&f, 1, f.one());
    let spec = RepSpec::parse_inline(&params, "V11:mu=1,1;d=2").unwrap();
    assert_eq!(spec.family_params(), &FamilyParams::V11 { mu: f.add(f.one(), f.gen()), d: f.from_int(2) });
    assert!(RepSpec::parse_inline(&params, "V99:a=1").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn two_dimensional_model_matches_v01(ctx in 0usize..4, seed in any::<u64>()) {
        let (p, m) = [(5, 1), (7, 1), (11, 1), (5, 2)][ctx];
        let f = make_field(p, m).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let params = AlgebraParams::new(&f, f.zero(), f.random_nonzero(&mut rng)).unwrap();
        let spec = sample_spec(&params, Family::V01, &mut rng).unwrap();
        let FamilyParams::V01 { beta, a } = *spec.family_params() else { unreachable!() };
        let rep = build_rep(&spec).unwrap();
        let model = solve_two_dim_model(beta, a, &params).unwrap();
        prop_assert_eq!(&model.x_matrix(&params), rep.x());
        prop_assert_eq!(&model.s_matrix(&params), rep.s());
        prop_assert_eq!(&model.y_matrix(&params), rep.y());
        prop_assert_eq!(model.x_matrix(&params).determinant().unwrap(), f.one());
    }
}

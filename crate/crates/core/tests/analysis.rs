mod common;

use cherednik::algebra::AlgebraParams;
use cherednik::analysis::{
    ba_cycle_scalar, central_character, check_intertwiner_maps, eigenspace, eigenspaces, exhaustive_invariant_search,
    is_irreducible, spans_submodule, verify_relations, Verdict,
};
use cherednik::field::{make_field, EchelonBasis, Field, Fq, Matrix};
use cherednik::reps::{build_rep, sample_spec, Family, FamilyParams, RepSpec, Representation};
use cherednik::Error;
use common::{literal_product, params, sampled_reps};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn build(params: &AlgebraParams, fp: FamilyParams) -> Representation {
    build_rep(&RepSpec::new(params, fp).unwrap()).unwrap()
}

fn inverse_2x2(f: &Field, m: &Matrix) -> Matrix {
    let (a, b, c, d) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
    let det = f.sub(f.mul(a, d), f.mul(b, c));
    let r = f.inv(det).unwrap();
    Matrix::from_rows(f, vec![vec![f.mul(r, d), f.neg(f.mul(r, b))], vec![f.neg(f.mul(r, c)), f.mul(r, a)]]).unwrap()
}

fn assert_valid_witness(rep: &Representation, witness: &[Vec<Fq>]) {
    assert!(!witness.is_empty() && witness.len() < rep.dim());
    let mut span = EchelonBasis::new(rep.field(), rep.dim());
    for v in witness {
        span.insert(v);
    }
    assert_eq!(span.dim(), witness.len());
    for g in [rep.x(), rep.x_inv(), rep.s(), rep.y()] {
        for v in witness {
            assert!(span.contains(&g.mul_vec(v)));
        }
    }
    assert!(spans_submodule(rep, witness));
}

#[test]
fn central_scalars_of_v02() {
    for (p, m) in [(5, 1), (7, 1), (3, 2)] {
        let f = make_field(p, m).unwrap();
        for k in f.elements().filter(|k| !k.is_zero()) {
            let params = params(&f, 0, k);
            for a in [f.one(), f.from_int(-1)] {
                for b in f.elements() {
                    let cc = central_character(&build(&params, FamilyParams::V02 { a, b })).unwrap();
                    assert_eq!(cc.get("X+X^-1"), Some(f.sub(f.mul(f.from_int(2), a), f.mul(k, b))));
                    assert_eq!(cc.get("X*y-y*X^-1"), Some(f.neg(f.mul(a, k))));
                }
            }
        }
    }
}

#[test]
fn central_scalar_of_v03_matches_direct_computation() {
    let f = make_field(11, 1).unwrap();
    let params = params(&f, 0, f.zero());
    for beta in f.elements().filter(|b| !b.is_zero()) {
        for a in f.elements().filter(|a| !a.is_zero()) {
            let rep = build(&params, FamilyParams::V03 { beta, a });
            let xi = inverse_2x2(&f, rep.x());
            let z = rep.x().mul(rep.y()).sub(&rep.y().mul(&xi));
            let expect = f.mul(beta, f.sub(a, f.inv(a).unwrap()));
            assert_eq!(z, Matrix::identity(&f, 2).scale(expect));
            assert_eq!(central_character(&rep).unwrap().get("X*y-y*X^-1"), Some(expect));
        }
    }
}

#[test]
fn central_scalar_of_v11() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (p, m) in [(3, 2), (5, 2), (7, 2)] {
        let f = make_field(p, m).unwrap();
        for _ in 0..10 {
            let params = params(&f, 1, f.random(&mut rng));
            let spec = sample_spec(&params, Family::V11, &mut rng).unwrap();
            let FamilyParams::V11 { mu, .. } = *spec.family_params() else { unreachable!() };
            let d = f.sub(f.pow(mu, p as u64), mu);
            let cc = central_character(&build_rep(&spec).unwrap()).unwrap();
            assert_eq!(cc.get("(y^p-y)^2"), Some(f.mul(d, d)));
        }
    }
}

#[test]
fn central_elements_are_scalar_on_every_instance() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for (p, m) in [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2)] {
        let f = make_field(p, m).unwrap();
        for t in [0, 1] {
            for k in f.elements() {
                for (spec, rep) in sampled_reps(&params(&f, t, k), 2, &mut rng) {
                    assert!(central_character(&rep).is_ok(), "{}", spec.key());
                }
            }
        }
    }
}

#[test]
fn non_scalar_central_elements_are_reported() {
    let f = make_field(5, 1).unwrap();
    let params = params(&f, 0, f.zero());
    let a = build(&params, FamilyParams::V05 { a: f.one(), b: f.one() });
    let b = build(&params, FamilyParams::V05 { a: f.from_int(-1), b: f.one() });
    assert!(matches!(central_character(&a.direct_sum(&b).unwrap()), Err(Error::NotScalar(_))));
}

#[test]
fn eigen_census() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for (p, m) in [(3, 2), (5, 2), (7, 2)] {
        let f = make_field(p, m).unwrap();
        let fp: Vec<Fq> = (0..p).map(|c| f.from_int(c)).collect();
        for _ in 0..5 {
            let params = params(&f, 1, f.random(&mut rng));
            let spec = sample_spec(&params, Family::V11, &mut rng).unwrap();
            let FamilyParams::V11 { mu, .. } = *spec.family_params() else { unreachable!() };
            let rep = build_rep(&spec).unwrap();
            let labels: Vec<Fq> = fp.iter().flat_map(|&c| [f.add(mu, c), f.sub(c, mu)]).collect();
            for r in eigenspaces(&rep, rep.y(), &labels).unwrap() {
                assert_eq!((r.eig_dim, r.gen_dim), (1, 1));
            }
            if let Some(spec) = sample_spec(&params, Family::V12, &mut rng) {
                let rep = build_rep(&spec).unwrap();
                for r in eigenspaces(&rep, rep.y(), &fp).unwrap() {
                    assert_eq!((r.eig_dim, r.gen_dim), (1, 2));
                }
            }
        }
        for k in (2..p).step_by(2) {
            let params = params(&f, 1, f.from_int(k));
            let rep = build(&params, FamilyParams::V15 { c: f.random_nonzero(&mut rng) });
            for r in eigenspaces(&rep, rep.y(), &fp).unwrap() {
                assert_eq!(r.gen_dim, 2);
            }
        }
    }
    let f = make_field(7, 1).unwrap();
    let rep = build(&params(&f, 0, f.from_int(3)), FamilyParams::V02 { a: f.one(), b: f.from_int(4) });
    let r = &eigenspaces(&rep, rep.y(), &[f.zero()]).unwrap()[0];
    assert_eq!((r.eig_dim, r.gen_dim), (1, 2));
}

#[test]
fn intertwiner_checks_on_v11_and_v13() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for (p, m) in [(3, 2), (5, 2), (7, 2)] {
        let f = make_field(p, m).unwrap();
        for _ in 0..5 {
            // k outside the prime field keeps +-k/2 off every weight
            let mut k = f.random(&mut rng);
            while f.in_prime_field(k) {
                k = f.random(&mut rng);
            }
            let params = params(&f, 1, k);
            let spec = sample_spec(&params, Family::V11, &mut rng).unwrap();
            let FamilyParams::V11 { mu, .. } = *spec.family_params() else { unreachable!() };
            let report = check_intertwiner_maps(&build_rep(&spec).unwrap()).unwrap();
            // B stays injective on every eigenspace, also at mu = +-k/2
            let half_k = f.div(k, f.from_int(2)).unwrap();
            let on_special = mu == half_k || mu == f.neg(half_k);
            for c in report.failures() {
                assert!(on_special && c.name.contains(" iff "), "{}", report.to_tsv());
            }
        }
        for k in (2..p).step_by(2) {
            let params = params(&f, 1, f.from_int(k));
            for theta in [f.one(), f.from_int(-1)] {
                let rep = build(&params, FamilyParams::V13 { theta });
                assert!(check_intertwiner_maps(&rep).unwrap().all_pass());
                let half_k = f.div(params.k(), f.from_int(2)).unwrap();
                let b = rep.s().mul(rep.y()).add_scalar(half_k);
                // B maps V[k/2] into the zero space V[-k/2]
                assert!(eigenspace(rep.y(), f.neg(half_k)).is_empty());
                let low = eigenspace(rep.y(), half_k);
                assert_eq!(low.len(), 1);
                assert!(b.mul_vec(&low[0]).iter().all(|x| x.is_zero()));
            }
        }
    }
}

#[test]
fn a_squares_to_one_everywhere() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let f = make_field(5, 2).unwrap();
    for _ in 0..6 {
        let params = params(&f, 1, f.random(&mut rng));
        for (_, rep) in sampled_reps(&params, 2, &mut rng) {
            assert!(check_intertwiner_maps(&rep).unwrap().get("A^2 = 1").unwrap().passed());
        }
    }
}

#[test]
fn cycle_scalars() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for (p, m) in [(3, 2), (5, 2), (7, 2), (11, 2)] {
        let f = make_field(p, m).unwrap();
        for _ in 0..8 {
            let params = params(&f, 1, f.random(&mut rng));
            let spec = sample_spec(&params, Family::V11, &mut rng).unwrap();
            let FamilyParams::V11 { mu, d } = *spec.family_params() else { unreachable!() };
            let (plus, minus) = ba_cycle_scalar(&build_rep(&spec).unwrap()).unwrap();
            assert_eq!(plus, d);
            assert_eq!(f.mul(plus, minus), literal_product(&f, mu, params.k()));
        }
    }
}

/// Known reducible points of the families carrying a free parameter in
/// the trigonometric case: V17 at a = +-2, V15 at two values of c.
fn reducible_exception(spec: &RepSpec) -> bool {
    let f = spec.params().field();
    match *spec.family_params() {
        FamilyParams::V17 { a } => a == f.from_int(2) || a == f.from_int(-2),
        FamilyParams::V15 { .. } => true,
        _ => false,
    }
}

#[test]
fn family_instances_are_irreducible_under_five_seeds() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for (p, m) in [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2)] {
        let f = make_field(p, m).unwrap();
        for t in [0, 1] {
            for k in f.elements() {
                for (spec, rep) in sampled_reps(&params(&f, t, k), 2, &mut rng) {
                    for seed in 0..5 {
                        match is_irreducible(&rep, seed).unwrap() {
                            Verdict::Irreducible => {}
                            Verdict::Reducible(w) => {
                                assert!(reducible_exception(&spec), "{}", spec.key());
                                assert_valid_witness(&rep, &w);
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn v17_is_reducible_exactly_at_plus_minus_two() {
    for p in [3, 5, 7, 11] {
        let f = make_field(p, 1).unwrap();
        let params = params(&f, 1, f.zero());
        for a in f.elements() {
            let rep = build(&params, FamilyParams::V17 { a });
            let verdict = is_irreducible(&rep, 0).unwrap();
            let special = a == f.from_int(2) || a == f.from_int(-2);
            assert_eq!(!verdict.is_irreducible(), special, "p = {p}, a = {}", f.format(a));
            if let Verdict::Reducible(w) = verdict {
                assert_eq!(w.len(), p as usize);
                assert_valid_witness(&rep, &w);
            }
        }
    }
}

#[test]
fn v15_is_reducible_at_exactly_two_values_of_c() {
    for p in [5, 7, 11] {
        let f = make_field(p, 1).unwrap();
        for k in (2..p).step_by(2) {
            let params = params(&f, 1, f.from_int(k));
            let bad: Vec<Fq> = f
                .elements()
                .filter(|&c| !is_irreducible(&build(&params, FamilyParams::V15 { c }), 0).unwrap().is_irreducible())
                .collect();
            assert_eq!(bad.len(), 2, "p = {p}, k = {k}");
            assert_eq!(bad[0], f.neg(bad[1]));
            if k == 2 {
                assert!(bad.contains(&f.one()));
            }
            let Verdict::Reducible(w) = is_irreducible(&build(&params, FamilyParams::V15 { c: bad[0] }), 0).unwrap()
            else {
                unreachable!()
            };
            assert_eq!(w.len(), (p - k) as usize);
        }
    }
}

#[test]
fn exhaustive_oracle_agrees_in_budget() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for (p, m) in [(3, 1), (5, 1), (7, 1), (3, 2)] {
        let f = make_field(p, m).unwrap();
        for t in [0, 1] {
            for k in f.elements() {
                for (spec, rep) in sampled_reps(&params(&f, t, k), 2, &mut rng) {
                    if rep.dim() > 10 {
                        continue;
                    }
                    let fast = is_irreducible(&rep, 0).unwrap();
                    let slow = exhaustive_invariant_search(&rep).unwrap();
                    assert_eq!(fast.is_irreducible(), slow.is_irreducible(), "{}", spec.key());
                    if let Verdict::Reducible(w) = slow {
                        assert_valid_witness(&rep, &w);
                    }
                }
            }
        }
    }
    let big = build(&params(&make_field(11, 1).unwrap(), 0, make_field(11, 1).unwrap().one()), FamilyParams::V02 {
        a: make_field(11, 1).unwrap().one(),
        b: Fq::ZERO,
    });
    assert!(matches!(exhaustive_invariant_search(&big), Err(Error::BudgetExceeded(_))));
}

#[test]
fn direct_sums_are_reducible() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for (p, m) in [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2)] {
        let f = make_field(p, m).unwrap();
        for t in [0, 1] {
            let params = params(&f, t, f.random(&mut rng));
            let reps = sampled_reps(&params, 1, &mut rng);
            for (_, r1) in &reps {
                for (_, r2) in reps.iter().take(3) {
                    let sum = r1.direct_sum(r2).unwrap();
                    let Verdict::Reducible(w) = is_irreducible(&sum, 1).unwrap() else {
                        panic!("direct sum reported irreducible")
                    };
                    assert_valid_witness(&sum, &w);
                    assert!(verify_relations(&sum).all_pass());
                }
            }
        }
    }
    let f = make_field(5, 1).unwrap();
    let params = params(&f, 0, f.zero());
    let a = build(&params, FamilyParams::V05 { a: f.one(), b: f.one() });
    let b = build(&params, FamilyParams::V05 { a: f.one(), b: f.from_int(-1) });
    let Verdict::Reducible(w) = exhaustive_invariant_search(&a.direct_sum(&b).unwrap()).unwrap() else { panic!() };
    assert_eq!(w.len(), 1);
}

#[test]
fn forced_v04_with_unit_parameter_is_reducible() {
    for p in [5, 7, 11] {
        let f = make_field(p, 1).unwrap();
        let params = params(&f, 0, f.zero());
        for a in [f.one(), f.from_int(-1)] {
            let rep = build_rep(&RepSpec::new_unchecked(&params, FamilyParams::V04 { a })).unwrap();
            let Verdict::Reducible(w) = is_irreducible(&rep, 0).unwrap() else { panic!("a = {}", f.format(a)) };
            assert_valid_witness(&rep, &w);
        }
    }
}

#[test]
fn verification_report_formats() {
    let f = make_field(7, 1).unwrap();
    let rep = build(&params(&f, 1, f.from_int(2)), FamilyParams::V13 { theta: f.one() });
    let report = verify_relations(&rep);
    let tsv = report.to_tsv();
    assert_eq!(tsv.lines().next(), Some("name\tstatus\tdetail"));
    assert_eq!(tsv.lines().count(), 5);
    assert_eq!(report.to_json().as_array().map(Vec::len), Some(4));
}

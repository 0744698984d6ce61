mod common;

use cherednik::field::{make_field, Fq, Matrix};
use cherednik::iso::{criterion_iso, find_intertwiner, hom_space, is_homomorphism, product_term};
use cherednik::reps::{build_rep, Family, FamilyParams, RepSpec, Representation};
use cherednik::Error;
use common::{engineered_partners, kronecker_hom_dim, literal_product, params, sampled_reps};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn commutes(r1: &Representation, r2: &Representation, m: &Matrix) -> bool {
    [(r1.x(), r2.x()), (r1.s(), r2.s()), (r1.y(), r2.y())].iter().all(|(a, b)| m.mul(a) == b.mul(m))
}

fn check_pair(r1: &Representation, r2: &Representation, s1: &RepSpec, s2: &RepSpec) -> bool {
    let oracle = find_intertwiner(r1, r2).unwrap();
    if let Some(m) = &oracle.intertwiner {
        assert!(commutes(r1, r2, m));
        assert_eq!(m.rank(), m.rows());
    }
    let criterion = criterion_iso(s1, s2).unwrap();
    assert_eq!(oracle.isomorphic, criterion.isomorphic, "{} vs {}: {}", s1.key(), s2.key(), criterion.criterion);
    oracle.isomorphic
}

#[test]
fn hom_space_matches_kronecker_solver() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for (p, m) in [(3, 1), (5, 1), (3, 2), (7, 1)] {
        let f = make_field(p, m).unwrap();
        for t in [0, 1] {
            for _ in 0..3 {
                let params = params(&f, t, f.random(&mut rng));
                let reps = sampled_reps(&params, 2, &mut rng);
                for (_, r1) in &reps {
                    for (_, r2) in reps.iter().filter(|(_, r)| r.dim() <= 10) {
                        if r1.dim() > 10 {
                            continue;
                        }
                        let basis = hom_space(r1, r2);
                        assert_eq!(basis.len(), kronecker_hom_dim(r1, r2));
                        for m in &basis {
                            assert!(commutes(r1, r2, m));
                            assert!(is_homomorphism(r1, r2, m));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn hom_space_of_a_direct_sum() {
    let f = make_field(5, 1).unwrap();
    let params = params(&f, 0, f.zero());
    let v = build_rep(&RepSpec::new(&params, FamilyParams::V03 { beta: f.one(), a: f.from_int(2) }).unwrap()).unwrap();
    let vv = v.direct_sum(&v).unwrap();
    assert_eq!(hom_space(&vv, &vv).len(), 4);
    assert_eq!(kronecker_hom_dim(&vv, &vv), 4);
}

#[test]
fn every_instance_is_isomorphic_to_itself() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let f = make_field(3, 2).unwrap();
    for t in [0, 1] {
        let params = params(&f, t, f.random(&mut rng));
        for (spec, rep) in sampled_reps(&params, 2, &mut rng) {
            let v = find_intertwiner(&rep, &rep).unwrap();
            assert!(v.isomorphic, "{}", spec.key());
            assert!(is_homomorphism(&rep, &rep, &Matrix::identity(&f, rep.dim())));
            // Schur: endomorphisms of an absolutely irreducible module are scalars
            assert_eq!(hom_space(&rep, &rep).len(), 1);
        }
    }
}

#[test]
fn engineered_positives_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut seen = 0;
    for (p, m) in [(5, 1), (7, 1), (3, 2), (5, 2)] {
        let f = make_field(p, m).unwrap();
        for t in [0, 1] {
            for _ in 0..4 {
                let params = params(&f, t, f.random(&mut rng));
                for (spec, rep) in sampled_reps(&params, 2, &mut rng) {
                    for partner in engineered_partners(&spec) {
                        let other = build_rep(&partner).unwrap();
                        assert!(check_pair(&rep, &other, &spec, &partner), "{} vs {}", spec.key(), partner.key());
                        seen += 1;
                    }
                }
            }
        }
    }
    assert!(seen > 100);
}

#[test]
fn random_pairs_agree_and_are_symmetric() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for (p, m) in [(3, 1), (5, 1), (7, 1), (3, 2)] {
        let f = make_field(p, m).unwrap();
        for t in [0, 1] {
            for k in f.elements() {
                let params = params(&f, t, k);
                let a = sampled_reps(&params, 2, &mut rng);
                let b = sampled_reps(&params, 2, &mut rng);
                for ((s1, r1), (s2, r2)) in a.iter().zip(&b) {
                    let forward = check_pair(r1, r2, s1, s2);
                    let backward = check_pair(r2, r1, s2, s1);
                    assert_eq!(forward, backward);
                }
            }
        }
    }
}

#[test]
fn equal_dimension_families_are_never_isomorphic() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for (p, m) in [(3, 2), (5, 2)] {
        let f = make_field(p, m).unwrap();
        for t in [0, 1] {
            for _ in 0..3 {
                let params = params(&f, t, f.random(&mut rng));
                let reps = sampled_reps(&params, 1, &mut rng);
                for (s1, r1) in &reps {
                    for (s2, r2) in &reps {
                        if s1.family() != s2.family() && r1.dim() == r2.dim() {
                            assert!(!check_pair(r1, r2, s1, s2));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn documented_verdicts() {
    let f = make_field(5, 2).unwrap();
    let trig = params(&f, 1, f.gen());
    let plus = RepSpec::new(&trig, FamilyParams::V12 { theta: f.one() }).unwrap();
    let minus = RepSpec::new(&trig, FamilyParams::V12 { theta: f.from_int(-1) }).unwrap();
    assert!(!check_pair(&build_rep(&plus).unwrap(), &build_rep(&minus).unwrap(), &plus, &minus));

    let f = make_field(7, 1).unwrap();
    let rational = params(&f, 0, f.zero());
    let v05 = |b: i64| RepSpec::new(&rational, FamilyParams::V05 { a: f.one(), b: f.from_int(b) }).unwrap();
    assert!(!criterion_iso(&v05(1), &v05(-1)).unwrap().isomorphic);
    let v04 = |a: Fq| RepSpec::new(&rational, FamilyParams::V04 { a }).unwrap();
    let a = f.from_int(3);
    assert!(criterion_iso(&v04(a), &v04(f.inv(a).unwrap())).unwrap().isomorphic);
    let v03 = RepSpec::new(&rational, FamilyParams::V03 { beta: f.one(), a }).unwrap();
    let v03b = RepSpec::new(&rational, FamilyParams::V03 { beta: f.from_int(-1), a: f.inv(a).unwrap() }).unwrap();
    assert!(check_pair(&build_rep(&v03).unwrap(), &build_rep(&v03b).unwrap(), &v03, &v03b));

    let other = build_rep(&RepSpec::new(&params(&f, 0, f.one()), FamilyParams::V02 { a: f.one(), b: f.one() }).unwrap()).unwrap();
    assert!(matches!(find_intertwiner(&build_rep(&v03).unwrap(), &other), Err(Error::ContextMismatch)));
}

#[test]
fn family_specific_negatives() {
    let f = make_field(7, 1).unwrap();
    let trig = params(&f, 1, f.from_int(4));
    let zero_k = params(&f, 1, f.zero());
    let cases = [
        (&trig, FamilyParams::V13 { theta: f.one() }, FamilyParams::V13 { theta: f.from_int(-1) }),
        (&trig, FamilyParams::V14 { c: f.one() }, FamilyParams::V14 { c: f.from_int(-1) }),
        (&trig, FamilyParams::V15 { c: f.from_int(3) }, FamilyParams::V15 { c: f.from_int(5) }),
        (&zero_k, FamilyParams::V17 { a: f.from_int(3) }, FamilyParams::V17 { a: f.from_int(5) }),
        (&zero_k, FamilyParams::V16 { c: f.one(), theta: f.one() }, FamilyParams::V16 { c: f.one(), theta: f.from_int(-1) }),
    ];
    for (params, a, b) in cases {
        let (s1, s2) = (RepSpec::new(params, a).unwrap(), RepSpec::new(params, b).unwrap());
        assert!(!check_pair(&build_rep(&s1).unwrap(), &build_rep(&s2).unwrap(), &s1, &s2), "{}", s1.key());
    }
}

#[test]
fn v16_clause_follows_the_oracle() {
    let f = make_field(7, 1).unwrap();
    let params = params(&f, 1, f.zero());
    let signs = [f.one(), f.from_int(-1)];
    for c1 in signs {
        for t1 in signs {
            for c2 in signs {
                for t2 in signs {
                    let s1 = RepSpec::new(&params, FamilyParams::V16 { c: c1, theta: t1 }).unwrap();
                    let s2 = RepSpec::new(&params, FamilyParams::V16 { c: c2, theta: t2 }).unwrap();
                    let iso = check_pair(&build_rep(&s1).unwrap(), &build_rep(&s2).unwrap(), &s1, &s2);
                    assert_eq!(iso, c1 == c2 && t1 == t2);
                }
            }
        }
    }
}

#[test]
fn product_vanishes_at_half_k() {
    let f = make_field(5, 2).unwrap();
    let k = f.gen();
    let half = f.div(k, f.from_int(2)).unwrap();
    assert_eq!(product_term(&f, half, k), f.zero());
    assert_eq!(product_term(&f, f.neg(half), k), f.zero());
}

proptest! {
    #[test]
    fn product_closed_forms(ctx in 0usize..6, seed in any::<u64>()) {
        let (p, m) = [(3, 1), (3, 2), (5, 2), (7, 2), (11, 1), (11, 2)][ctx];
        let f = make_field(p, m).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (mu, k) = (f.random(&mut rng), f.random(&mut rng));
        let lit = literal_product(&f, mu, k);
        prop_assert_eq!(product_term(&f, mu, k), lit);
        let artin = |x: Fq| f.sub(f.pow(x, p as u64), x);
        let half = f.div(k, f.from_int(2)).unwrap();
        prop_assert_eq!(lit, f.mul(artin(f.sub(half, mu)), artin(f.add(half, mu))));
        let at_zero = artin(mu);
        prop_assert_eq!(literal_product(&f, mu, f.zero()), f.neg(f.mul(at_zero, at_zero)));
    }
}

#[test]
fn different_families_are_reported_as_such() {
    let f = make_field(5, 1).unwrap();
    let params = params(&f, 0, f.zero());
    let a = RepSpec::new(&params, FamilyParams::V03 { beta: f.one(), a: f.from_int(2) }).unwrap();
    let b = RepSpec::new(&params, FamilyParams::V04 { a: f.from_int(2) }).unwrap();
    let v = criterion_iso(&a, &b).unwrap();
    assert!(!v.isomorphic);
    assert_eq!(v.criterion, "different families");
    assert_eq!(a.family(), Family::V03);
}

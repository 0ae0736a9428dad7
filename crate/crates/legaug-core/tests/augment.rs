mod common;

use legaug_core::algebra::FieldSpec;
use legaug_core::augment::*;
use legaug_core::dga::{build_ce_dga, BasePoints, CeDga};
use legaug_core::diagram::FrontDiagram;
use legaug_core::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn dga(text: &str) -> CeDga {
    build_ce_dga(&FrontDiagram::parse(text).unwrap(), BasePoints::Single)
}

fn as_residues(augs: &[Augmentation]) -> Vec<(Vec<u64>, Vec<u64>)> {
    let r = |v: &legaug_core::algebra::FieldValue| v.to_i64().unwrap() as u64;
    let mut out: Vec<_> = augs.iter().map(|a| (a.values.iter().map(r).collect(), a.tvalues.iter().map(r).collect())).collect();
    out.sort();
    out
}

#[test]
fn trefoil_counts() {
    let t = dga("plat 2: 2 2 2");
    for p in [2u64, 3, 5] {
        let augs = enumerate_augmentations(&t, FieldSpec::Prime(p), 0, DEFAULT_BUDGET).unwrap();
        assert_eq!(augs.len() as u64, p + p + (p - 1) * (p - 1));
        assert_eq!(as_residues(&augs), common::brute_augmentations(&t, p, 0));
        for a in &augs {
            assert_eq!(a.t_product(), FieldSpec::Prime(p).from_i64(-1));
            assert!(a.value_of(&t, "q1").unwrap().is_zero());
            assert_eq!(a.provenance, Provenance::BruteForce);
        }
    }
}

#[test]
fn agrees_with_naive_search_on_random_fronts() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..60 {
        let d = common::random_front(&mut rng, 1..=2, 0..=5);
        let dga = build_ce_dga(&d, BasePoints::Single);
        for rho in [0u32, 1, 2] {
            if check_rho(&dga, rho).is_err() {
                continue;
            }
            for p in [2u64, 3] {
                let augs = enumerate_augmentations(&dga, FieldSpec::Prime(p), rho, DEFAULT_BUDGET).unwrap();
                assert_eq!(as_residues(&augs), common::brute_augmentations(&dga, p, rho), "{}", d.to_plat_string());
            }
        }
    }
}

#[test]
fn left_trefoil_dga_varieties() {
    let text = "var t -2\ngen c1 -1 | 0\ngen c2 -1 | 0\ngen c3 1 | 0\n\
                gen c4 -1 | +1*t^1*[] +1*[c1,c2]\ngen c5 1 | +1*[] +1*[c2,c3]\ngen c6 1 | +1*[] +1*[c3,c1]\n";
    let d = CeDga::parse(text).unwrap();
    for (p, expected) in [(3u64, vec![2]), (5, vec![1, 4]), (7, vec![3, 5, 6])] {
        // −x² over the nonzero x
        let mut oracle: Vec<i64> = (1..p).map(|x| ((p - x * x % p) % p) as i64).collect();
        oracle.sort();
        oracle.dedup();
        assert_eq!(oracle, expected);
        let v = augmentation_variety(&d, FieldSpec::Prime(p), 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(v.residues(), expected);
    }
}

#[test]
fn stabilization_scales_counts() {
    let t = dga("plat 2: 2 2 2");
    let f3 = FieldSpec::Prime(3);
    let base = enumerate_augmentations(&t, f3, 1, DEFAULT_BUDGET).unwrap().len();
    // ρ = 1 divides every degree: e2 is free, e1 is forced to 0
    let s = t.stabilize(2);
    assert_eq!(enumerate_augmentations(&s, f3, 1, DEFAULT_BUDGET).unwrap().len(), 3 * base);
    let base0 = enumerate_augmentations(&t, f3, 0, DEFAULT_BUDGET).unwrap().len();
    assert_eq!(enumerate_augmentations(&s, f3, 0, DEFAULT_BUDGET).unwrap().len(), base0);
}

#[test]
fn errors() {
    let t = dga("plat 2: 2 2 2");
    assert_eq!(enumerate_augmentations(&t, FieldSpec::Rationals, 0, DEFAULT_BUDGET), Err(Error::InfiniteField));
    assert!(matches!(enumerate_augmentations(&t, FieldSpec::Prime(5), 0, 10), Err(Error::Budget { .. })));
    assert!(matches!(check_rho(&dga("plat 2: 2 1"), 0), Err(Error::Rho { .. })));
}

#[test]
fn verification_over_rationals() {
    use legaug_core::algebra::field::rational;
    let t = dga("plat 2: 2 2 2");
    let q = FieldSpec::Rationals;
    let aug = Augmentation {
        field: q,
        rho: 0,
        values: vec![rational(1, 2), rational(0, 1), rational(1, 2), rational(0, 1), rational(0, 1)],
        tvalues: vec![rational(-1, 1)],
        provenance: Provenance::Given,
    };
    assert!(is_augmentation(&t, &aug));
    assert!(common::is_augmentation(&t, &aug));
    let mut bad = aug.clone();
    bad.values[0] = rational(1, 3);
    assert!(!is_augmentation(&t, &bad));
    assert!(matches!(check_augmentation(&t, &bad), Err(Error::NotAugmentation(_))));
}

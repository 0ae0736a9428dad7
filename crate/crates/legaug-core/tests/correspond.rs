mod common;

use legaug_core::algebra::field::rational;
use legaug_core::algebra::{FieldSpec, FieldValue};
use legaug_core::augment::{enumerate_augmentations, Augmentation, Provenance};
use legaug_core::correspond::*;
use legaug_core::dga::{build_ce_dga, BasePoints};
use legaug_core::diagram::FrontDiagram;
use legaug_core::rulings::{enumerate_rulings, rho_divides, NormalRuling};
use legaug_core::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn front(text: &str) -> FrontDiagram {
    FrontDiagram::parse(text).unwrap()
}

/// Nonzero a-values exactly on the pairs of the ruling, at every dip.
fn property_r(d: &DippedAugmentation, ruling: &NormalRuling, n: usize, width: usize) -> bool {
    (0..=n).all(|k| {
        (1..=width).all(|r| {
            (1..r).all(|s| {
                let paired = ruling.states[k].partner(r - 1) == s - 1;
                d.value(GenKey::A(k, r, s)).is_zero() != paired
            })
        })
    })
}

fn dipped_is_valid(d: &DippedAugmentation) -> bool {
    common::check_d_squared_and_degree(&d.stage.dga).is_ok()
        && common::residues(&d.stage.dga, &d.values, &d.tvalues, d.field).iter().all(|r| r.is_zero())
}

#[test]
fn trefoil_half_augmentation_dipped_values() {
    let t = front("plat 2: 2 2 2");
    let q = FieldSpec::Rationals;
    let aug = Augmentation {
        field: q,
        rho: 0,
        values: vec![rational(1, 2), rational(0, 1), rational(1, 2), rational(0, 1), rational(0, 1)],
        tvalues: vec![rational(-1, 1)],
        provenance: Provenance::Given,
    };
    let w = augmentation_to_ruling(&t, &aug).unwrap();
    assert_eq!(w.ruling.switches, vec![0, 1, 2]);
    let names = [
        "a0_4_3", "a0_2_1", "c1", "b1_3_2", "a1_4_3", "a1_2_1", "c2", "b2_3_2", "a2_4_3", "a2_2_1", "c3", "b3_3_2", "a3_4_3",
        "a3_2_1",
    ];
    let expected = [(1, 1), (1, 1), (-1, 2), (-2, 1), (-1, 2), (-1, 2), (2, 1), (1, 2), (-1, 1), (-1, 1), (-1, 1), (-1, 1), (1, 1), (1, 1)];
    let dga = &w.dipped.stage.dga;
    for (name, (n, d)) in names.iter().zip(expected) {
        let g = dga.index_of(name).unwrap();
        assert_eq!(w.dipped.values[g], rational(n, d), "{name}");
    }
    let nonzero = w.dipped.values.iter().filter(|v| !v.is_zero()).count();
    assert_eq!(nonzero, names.len());
    assert_eq!(w.dipped.tvalues, vec![rational(-1, 1); 5]);
    assert!(dipped_is_valid(&w.dipped));
    assert!(property_r(&w.dipped, &w.ruling, 3, 4));
    // undipping returns the input
    assert_eq!(undip_augmentation(&w.dipped).unwrap().values, aug.values);
}

#[test]
fn augmentation_to_ruling_on_random_fronts() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut runs = 0;
    while runs < 60 {
        let d = common::random_front(&mut rng, 2..=3, 3..=7);
        let dga = build_ce_dga(&d, BasePoints::Single);
        let two_r = 2 * d.classical_invariants().r;
        for rho in [0u32, 1, 2] {
            if !rho_divides(rho, two_r) {
                continue;
            }
            let Ok(augs) = enumerate_augmentations(&dga, FieldSpec::Prime(3), rho, 1 << 20) else { continue };
            let rulings = enumerate_rulings(&d, rho).unwrap();
            for aug in augs.iter().take(3) {
                runs += 1;
                let w = augmentation_to_ruling(&d, aug).unwrap();
                assert!(rulings.contains(&w.ruling), "{}", d.to_plat_string());
                assert!(dipped_is_valid(&w.dipped));
                assert!(property_r(&w.dipped, &w.ruling, d.n(), d.width()));
                assert_eq!(w.dipped.tvalues.len() % 2, 1);
                let back = undip_augmentation(&w.dipped).unwrap();
                assert!(common::is_augmentation(&dga, &back));
                assert_eq!(back.values, aug.values);
            }
        }
    }
}

#[test]
fn ruling_to_augmentation_on_random_fronts() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..60 {
        let d = common::random_front(&mut rng, 1..=3, 0..=8);
        let dga = build_ce_dga(&d, BasePoints::Single);
        let two_r = 2 * d.classical_invariants().r;
        for rho in [0u32, 1, 2] {
            if !rho_divides(rho, two_r) {
                continue;
            }
            for r in enumerate_rulings(&d, rho).unwrap() {
                let dipped = ruling_to_dipped_augmentation(&d, &r, FieldSpec::Rationals, rho).unwrap();
                assert!(dipped_is_valid(&dipped));
                assert!(property_r(&dipped, &r, d.n(), d.width()));
                let aug = undip_augmentation(&dipped).unwrap();
                assert!(common::is_augmentation(&dga, &aug));
                assert_eq!(aug.t_product(), rational(-1, 1));
            }
        }
    }
}

#[test]
fn odd_variety_constructor() {
    let d = front("plat 3: 4 2 2 1 1 1 2");
    let dga = build_ce_dga(&d, BasePoints::Single);
    let unoriented: Vec<NormalRuling> = enumerate_rulings(&d, 1).unwrap().into_iter().filter(|r| !r.is_oriented()).collect();
    assert!(!unoriented.is_empty());
    for p in [3i64, 5, 7] {
        let f = FieldSpec::Prime(p as u64);
        for x in 1..p {
            let xv = f.from_i64(x);
            for r in &unoriented {
                let aug = construct_odd_variety_augmentation(&d, r, &xv, 1).unwrap();
                assert!(common::is_augmentation(&dga, &aug));
                assert_eq!(aug.t_product(), f.from_i64(-x * x));
            }
        }
    }
    let two = FieldSpec::Prime(5).from_i64(2);
    assert_eq!(construct_odd_variety_augmentation(&d, &unoriented[0], &two, 1).unwrap().t_product(), FieldValue::Mod { value: 1, p: 5 });
    let t = front("plat 2: 2 2 2");
    let oriented = &enumerate_rulings(&t, 1).unwrap()[0];
    assert_eq!(construct_odd_variety_augmentation(&t, oriented, &two, 1), Err(Error::OrientedRuling));
}

#[test]
fn odd_constructor_on_random_fronts() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let mut built = 0;
    let f = FieldSpec::Prime(7);
    for _ in 0..300 {
        let d = common::random_front(&mut rng, 2..=3, 3..=9);
        let two_r = 2 * d.classical_invariants().r;
        if two_r == 0 {
            continue;
        }
        let dga = build_ce_dga(&d, BasePoints::Single);
        for r in enumerate_rulings(&d, 1).unwrap().into_iter().filter(|r| !r.is_oriented()) {
            let aug = construct_odd_variety_augmentation(&d, &r, &f.from_i64(3), 1).unwrap();
            assert!(common::is_augmentation(&dga, &aug));
            assert_eq!(aug.t_product(), f.from_i64(-9));
            built += 1;
        }
    }
    assert!(built > 0);
}

#[test]
fn invalid_inputs() {
    let t = front("plat 2: 2 2 2");
    let f = FieldSpec::Prime(3);
    let bad = Augmentation {
        field: f,
        rho: 0,
        values: vec![f.one(); 5],
        tvalues: vec![f.one()],
        provenance: Provenance::Given,
    };
    assert!(matches!(augmentation_to_ruling(&t, &bad), Err(Error::NotAugmentation(_))));
}

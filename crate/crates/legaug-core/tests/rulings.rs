mod common;

use legaug_core::dga::{build_ce_dga, BasePoints};
use legaug_core::diagram::FrontDiagram;
use legaug_core::rulings::*;
use legaug_core::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn front(text: &str) -> FrontDiagram {
    FrontDiagram::parse(text).unwrap()
}

fn switch_sets(d: &FrontDiagram, rho: u32) -> Vec<Vec<usize>> {
    let mut s: Vec<Vec<usize>> = enumerate_rulings(d, rho).unwrap().into_iter().map(|r| r.switches).collect();
    s.sort();
    s
}

fn oracle(d: &FrontDiagram, rho: u32) -> Vec<Vec<usize>> {
    let mut s = common::brute_rulings(d, &build_ce_dga(d, BasePoints::Single), rho);
    s.sort();
    s
}

#[test]
fn trefoil_rulings() {
    let d = front("plat 2: 2 2 2");
    let sets = switch_sets(&d, 0);
    assert_eq!(sets, vec![vec![0], vec![0, 1, 2], vec![2]]);
    assert_eq!(sets, oracle(&d, 0));
    assert_eq!(format_polynomial(&ruling_count_polynomial(&d, 0).unwrap()), "2z^-1 + z");
}

#[test]
fn unknot_and_stabilized() {
    let u = front("plat 1:");
    for rho in 0..4 {
        assert_eq!(switch_sets(&u, rho), vec![Vec::<usize>::new()]);
    }
    assert_eq!(format_polynomial(&ruling_count_polynomial(&u, 0).unwrap()), "z^-1");
    let s = front("plat 2: 2 1");
    assert!(enumerate_rulings(&s, 1).unwrap().is_empty());
    assert!(matches!(enumerate_rulings(&s, 0), Err(Error::Rho { .. })));
    assert_eq!(format_polynomial(&ruling_count_polynomial(&s, 1).unwrap()), "0");
}

#[test]
fn render_lists_pairs_per_slice() {
    let r = &enumerate_rulings(&front("plat 1:"), 0).unwrap()[0];
    assert_eq!(r.render().lines().count(), 1);
    assert!(r.render().contains("(1 2)"));
}

#[test]
fn ruling_from_switches_validates() {
    let d = front("plat 2: 2 2 2");
    assert!(ruling_from_switches(&d, 0, &[0, 1, 2]).is_ok());
    assert!(matches!(ruling_from_switches(&d, 0, &[1]), Err(Error::InvalidRuling(_))));
}

#[test]
fn agrees_with_subset_oracle_on_random_fronts() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..150 {
        let d = common::random_front(&mut rng, 1..=3, 0..=9);
        let dga = build_ce_dga(&d, BasePoints::Single);
        let two_r = 2 * d.classical_invariants().r;
        for rho in 0..=4 {
            if !rho_divides(rho, two_r) {
                continue;
            }
            let mut expected = common::brute_rulings(&d, &dga, rho);
            expected.sort();
            assert_eq!(switch_sets(&d, rho), expected, "{} rho={rho}", d.to_plat_string());
        }
    }
}

#[test]
fn parity_and_orientation_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..150 {
        let d = common::random_front(&mut rng, 1..=3, 0..=9);
        let two_r = 2 * d.classical_invariants().r;
        for rho in 0..=4 {
            if !rho_divides(rho, two_r) {
                continue;
            }
            for r in enumerate_rulings(&d, rho).unwrap() {
                assert!(r.parity_check(&d));
                assert_eq!((d.n() - r.switches.len()) % 2, 0);
                let counts = r.interlaced_counts();
                assert_eq!((counts[0], counts[d.n()]), (0, 0));
                for j in 0..d.n() {
                    let step = counts[j + 1] as i64 - counts[j] as i64;
                    if r.switches.contains(&j) {
                        assert_eq!(step, 0);
                    } else {
                        assert_eq!(step.abs(), 1);
                    }
                }
                if rho % 2 == 0 {
                    assert!(r.is_oriented(), "even rho with a negative switch");
                }
            }
        }
    }
}

//! End-to-end acceptance checks over the bundled corpus. Prints one
//! `PASS`/`FAIL` line per criterion and exits nonzero if any fails.

#[path = "../../legaug-core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;

use legaug::input::Input;
use legaug::parallel::{augmentation_variety, enumerate_augmentations};
use legaug_core::algebra::field::rational;
use legaug_core::algebra::{FieldSpec, FieldValue};
use legaug_core::augment::{Augmentation, Provenance, DEFAULT_BUDGET};
use legaug_core::correspond::{
    augmentation_to_ruling, ruling_to_dipped_augmentation, undip_augmentation, DippedAugmentation, GenKey,
};
use legaug_core::dga::CeDga;
use legaug_core::diagram::FrontDiagram;
use legaug_core::lift::{lift_z2_augmentation, reduce_mod2, Z2Augmentation};
use legaug_core::rulings::{enumerate_rulings, rho_divides, NormalRuling};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn corpus(name: &str) -> Input {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name);
    Input::load(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn front(name: &str) -> FrontDiagram {
    corpus(name).front("acceptance").unwrap().clone()
}

const FRONTS: [&str; 4] = ["trefoil.plat", "unknot.plat", "stabilized-unknot.plat", "left-trefoil.plat"];

/// ρ values checked for a front: all of 0..=4 that divide `2r`.
fn legal_rhos(d: &FrontDiagram) -> Vec<u32> {
    let two_r = 2 * d.classical_invariants().r;
    (0..=4).filter(|&rho| rho_divides(rho, two_r)).collect()
}

fn augs(dga: &CeDga, p: u64, rho: u32) -> Vec<Augmentation> {
    enumerate_augmentations(dga, FieldSpec::Prime(p), rho, DEFAULT_BUDGET, None).unwrap()
}

fn variety(dga: &CeDga, p: u64, rho: u32) -> Vec<i64> {
    augmentation_variety(dga, FieldSpec::Prime(p), rho, DEFAULT_BUDGET, None).unwrap().residues()
}

fn from_residues(p: u64, rho: u32, vals: &[u64], tvals: &[u64]) -> Augmentation {
    let f = FieldSpec::Prime(p);
    Augmentation {
        field: f,
        rho,
        values: vals.iter().map(|&v| f.from_i64(v as i64)).collect(),
        tvalues: tvals.iter().map(|&v| f.from_i64(v as i64)).collect(),
        provenance: Provenance::Given,
    }
}

fn dipped_residues_vanish(d: &DippedAugmentation) -> bool {
    common::residues(&d.stage.dga, &d.values, &d.tvalues, d.field).iter().all(|r| r.is_zero())
}

/// Nonzero a-values exactly on the ruled pairs at every dip.
fn property_r(d: &DippedAugmentation, ruling: &NormalRuling, diagram: &FrontDiagram) -> bool {
    (0..=diagram.n()).all(|k| {
        (1..=diagram.width()).all(|r| {
            (1..r).all(|s| {
                let paired = ruling.states[k].partner(r - 1) == s - 1;
                d.value(GenKey::A(k, r, s)).is_zero() != paired
            })
        })
    })
}

fn sorted_switches(d: &FrontDiagram, rho: u32) -> Vec<Vec<usize>> {
    let mut s: Vec<Vec<usize>> = enumerate_rulings(d, rho).unwrap().into_iter().map(|r| r.switches).collect();
    s.sort();
    s
}

fn oracle_switches(d: &FrontDiagram, rho: u32) -> Vec<Vec<usize>> {
    let mut s = common::brute_rulings(d, &Input::Front(d.clone()).dga(), rho);
    s.sort();
    s
}

fn minus_one(aug: &Augmentation) -> bool {
    aug.t_product() == aug.field.from_i64(-1)
}

/// Dipped DGAs met while checking the correspondence, for the ∂² check.
#[derive(Default)]
struct Dipped(Vec<CeDga>, BTreeSet<String>);

impl Dipped {
    fn add(&mut self, d: &DippedAugmentation) {
        if self.1.insert(d.stage.dga.to_text()) {
            self.0.push(d.stage.dga.clone());
        }
    }
}

fn c1_trefoil_dga() -> Outcome {
    let dga = corpus("trefoil.plat").dga();
    ensure!(dga.gen_names == ["c1", "c2", "c3", "q1", "q2"], "generators {:?}", dga.gen_names);
    ensure!(dga.gradings == [0, 0, 0, 1, 1] && dga.var_gradings == [0], "gradings {:?} {:?}", dga.gradings, dga.var_gradings);
    for c in ["c1", "c2", "c3"] {
        ensure!(dga.differential_text(c) == "0", "d{c} = {}", dga.differential_text(c));
    }
    let q1 = dga.differential_text("q1");
    let q2 = dga.differential_text("q2");
    ensure!(q1 == "+1*t^1*[] +1*[c1] +1*[c3] +1*[c1,c2,c3]", "dq1 = {q1}");
    ensure!(q2 == "+1*[] -1*[c1] -1*[c3] -1*[c3,c2,c1]", "dq2 = {q2}");
    Ok(format!("dq1 = {q1}; dq2 = {q2}"))
}

fn c2_d_squared(dipped: &Dipped) -> Outcome {
    let mut fixtures: Vec<CeDga> = FRONTS.iter().map(|f| corpus(f).dga()).collect();
    fixtures.push(corpus("left-trefoil.dga").dga());
    for dga in &fixtures {
        common::check_d_squared_and_degree(dga)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..200 {
        let d = common::random_front(&mut rng, 1..=3, 0..=8);
        common::check_d_squared_and_degree(&Input::Front(d.clone()).dga()).map_err(|e| format!("{}: {e}", d.to_plat_string()))?;
    }
    ensure!(!dipped.0.is_empty(), "no dipped diagrams collected");
    for dga in &dipped.0 {
        common::check_d_squared_and_degree(dga)?;
    }
    Ok(format!("{} fixtures, 200 random fronts, {} dipped diagrams", fixtures.len(), dipped.0.len()))
}

fn c3_ruling_counts() -> Outcome {
    let t = front("trefoil.plat");
    let sets = sorted_switches(&t, 0);
    ensure!(sets == vec![vec![0], vec![0, 1, 2], vec![2]], "trefoil switch sets {sets:?}");
    ensure!(sets == oracle_switches(&t, 0), "trefoil disagrees with the subset oracle");
    let u = front("unknot.plat");
    ensure!(sorted_switches(&u, 0).len() == 1 && oracle_switches(&u, 0).len() == 1, "unknot count");
    let s = front("stabilized-unknot.plat");
    // ρ = 0 is not a legal grading period when r ≠ 0: there are no ρ = 0 rulings
    let zero = match enumerate_rulings(&s, 0) {
        Ok(r) => r.len(),
        Err(_) => 0,
    };
    let one = enumerate_rulings(&s, 1).unwrap().len();
    ensure!(zero == 0 && one == 0 && oracle_switches(&s, 1).is_empty(), "stabilized counts {zero}, {one}");
    Ok("trefoil 3 {c1},{c3},{c1,c2,c3}; unknot 1; stabilized unknot 0 (rho 0, 1)".into())
}

fn c4_trefoil_counts() -> Outcome {
    let dga = corpus("trefoil.plat").dga();
    let mut counts = Vec::new();
    for p in [2u64, 3, 5] {
        let found = augs(&dga, p, 0);
        let expected = (p + p + (p - 1) * (p - 1)) as usize;
        ensure!(found.len() == expected, "F{p}: {} augmentations, expected {expected}", found.len());
        ensure!(common::brute_augmentations(&dga, p, 0).len() == expected, "F{p}: oracle disagrees");
        for a in &found {
            ensure!(minus_one(a), "F{p}: eps(t) = {:?}", a.tvalues);
            ensure!(a.values[3].is_zero() && a.values[4].is_zero(), "F{p}: q augmented");
        }
        counts.push(format!("F{p}:{}", found.len()));
    }
    Ok(counts.join(" "))
}

fn c5_even_rho() -> Outcome {
    let mut inputs: Vec<(String, CeDga)> = FRONTS.iter().map(|f| (f.to_string(), corpus(f).dga())).collect();
    inputs.push(("left-trefoil.dga".into(), corpus("left-trefoil.dga").dga()));
    let mut checked = 0;
    for (name, dga) in &inputs {
        for rho in [0u32, 2] {
            if !rho_divides(rho, dga.two_r()) {
                continue;
            }
            for p in [2u64, 3, 5, 7] {
                let v = variety(dga, p, rho);
                ensure!(v.iter().all(|&x| x == p as i64 - 1), "{name} rho={rho} F{p}: {v:?}");
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (DGA, rho, p) cases, all eps(t) = -1"))
}

fn c6_odd_varieties() -> Outcome {
    let trefoil = corpus("trefoil.plat").dga();
    let left = corpus("left-trefoil.dga").dga();
    let stab = corpus("stabilized-unknot.plat").dga();
    for p in [3u64, 5, 7] {
        let v = variety(&trefoil, p, 1);
        ensure!(v == vec![p as i64 - 1], "trefoil F{p}: {v:?}");
        let v = variety(&stab, p, 1);
        ensure!(v.is_empty(), "stabilized unknot F{p}: {v:?}");
        let oracle: BTreeSet<i64> = (1..p as i64).map(|x| (-x * x).rem_euclid(p as i64)).collect();
        let v = variety(&left, p, 1);
        ensure!(v == oracle.into_iter().collect::<Vec<_>>(), "left trefoil F{p}: {v:?}");
    }
    let shown: Vec<String> = [3u64, 5, 7].iter().map(|&p| format!("F{p} {:?}", variety(&left, p, 1))).collect();
    Ok(format!("trefoil {{-1}}; left trefoil {}; stabilized unknot empty", shown.join(", ")))
}

fn c7_existence(dipped: &mut Dipped) -> Outcome {
    let mut cases = 0;
    for name in FRONTS {
        let d = front(name);
        let dga = Input::Front(d.clone()).dga();
        for rho in legal_rhos(&d) {
            let rulings = enumerate_rulings(&d, rho).unwrap();
            for p in [2u64, 3] {
                let found = augs(&dga, p, rho);
                ensure!(found.is_empty() == rulings.is_empty(), "{name} rho={rho} F{p}: {} augs, {} rulings", found.len(), rulings.len());
                if let Some(a) = found.first() {
                    dipped.add(&augmentation_to_ruling(&d, a).map_err(|e| e.to_string())?.dipped);
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (diagram, rho, field) cases agree"))
}

fn c8_aug_to_ruling(dipped: &mut Dipped) -> Outcome {
    let mut runs = 0;
    for name in ["trefoil.plat", "unknot.plat"] {
        let d = front(name);
        let dga = Input::Front(d.clone()).dga();
        for rho in [0u32, 1] {
            let rulings = enumerate_rulings(&d, rho).unwrap();
            for p in [2u64, 3, 5] {
                for (vals, tvals) in common::brute_augmentations(&dga, p, rho) {
                    let aug = from_residues(p, rho, &vals, &tvals);
                    let w = augmentation_to_ruling(&d, &aug).map_err(|e| format!("{name} {vals:?}: {e}"))?;
                    ensure!(rulings.contains(&w.ruling), "{name} {vals:?}: not a ruling");
                    ensure!(property_r(&w.dipped, &w.ruling, &d), "{name} {vals:?}: property R");
                    ensure!(dipped_residues_vanish(&w.dipped), "{name} {vals:?}: eps o d != 0");
                    ensure!(w.dipped.tvalues.len() % 2 == 1, "{name} {vals:?}: even base-point count");
                    dipped.add(&w.dipped);
                    runs += 1;
                }
            }
        }
    }
    Ok(format!("{runs} augmentations"))
}

fn c9_ruling_to_aug(dipped: &mut Dipped) -> Outcome {
    let mut runs = 0;
    for name in ["trefoil.plat", "unknot.plat"] {
        let d = front(name);
        let dga = Input::Front(d.clone()).dga();
        for r in enumerate_rulings(&d, 0).unwrap() {
            let da = ruling_to_dipped_augmentation(&d, &r, FieldSpec::Rationals, 0).map_err(|e| e.to_string())?;
            ensure!(dipped_residues_vanish(&da) && property_r(&da, &r, &d), "{name} {:?}: dipped invalid", r.switches);
            let aug = undip_augmentation(&da).map_err(|e| e.to_string())?;
            ensure!(common::is_augmentation(&dga, &aug), "{name} {:?}: undipped invalid", r.switches);
            ensure!(minus_one(&aug), "{name} {:?}: eps(t) = {:?}", r.switches, aug.tvalues);
            dipped.add(&da);
            runs += 1;
        }
    }
    ensure!(runs == 4, "{runs} rulings");
    Ok("3 trefoil rulings and the unknot".into())
}

fn c10_trefoil_dipped_values(dipped: &mut Dipped) -> Outcome {
    let d = front("trefoil.plat");
    let aug = Augmentation {
        field: FieldSpec::Rationals,
        rho: 0,
        values: vec![rational(1, 2), rational(0, 1), rational(1, 2), rational(0, 1), rational(0, 1)],
        tvalues: vec![rational(-1, 1)],
        provenance: Provenance::Given,
    };
    let w = augmentation_to_ruling(&d, &aug).map_err(|e| e.to_string())?;
    let names = [
        "a0_4_3", "a0_2_1", "c1", "b1_3_2", "a1_4_3", "a1_2_1", "c2", "b2_3_2", "a2_4_3", "a2_2_1", "c3", "b3_3_2", "a3_4_3",
        "a3_2_1",
    ];
    let expected: Vec<FieldValue> = [(1, 1), (1, 1), (-1, 2), (-2, 1), (-1, 2), (-1, 2), (2, 1), (1, 2), (-1, 1), (-1, 1), (-1, 1), (-1, 1), (1, 1), (1, 1)]
        .iter()
        .map(|&(n, q)| rational(n, q))
        .collect();
    let dga = &w.dipped.stage.dga;
    let got: Vec<FieldValue> = names.iter().map(|n| w.dipped.values[dga.index_of(n).unwrap()].clone()).collect();
    ensure!(got == expected, "values {got:?}");
    let nonzero = w.dipped.values.iter().filter(|v| !v.is_zero()).count();
    ensure!(nonzero == names.len(), "{nonzero} nonzero values");
    ensure!(w.dipped.tvalues.iter().all(|t| *t == rational(-1, 1)), "base points {:?}", w.dipped.tvalues);
    dipped.add(&w.dipped);
    Ok("(1,1,-1/2,-2,-1/2,-1/2,2,1/2,-1,-1,-1,-1,1,1), base points -1".into())
}

fn c11_parity() -> Outcome {
    let mut fronts: Vec<FrontDiagram> = FRONTS.iter().map(|f| front(f)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    fronts.extend((0..200).map(|_| common::random_front(&mut rng, 1..=3, 0..=8)));
    let mut count = 0;
    for d in &fronts {
        for rho in legal_rhos(d) {
            for r in enumerate_rulings(d, rho).unwrap() {
                let label = format!("{} {:?}", d.to_plat_string(), r.switches);
                ensure!(r.parity_check(d), "{label}: m+s+a- even");
                ensure!((d.n() - r.switches.len()) % 2 == 0, "{label}: n-s odd");
                let c = r.interlaced_counts();
                ensure!(c[0] == 0 && c[d.n()] == 0, "{label}: interlacing at the ends");
                for j in 0..d.n() {
                    let step = c[j + 1] as i64 - c[j] as i64;
                    let ok = if r.switches.contains(&j) { step == 0 } else { step.abs() == 1 };
                    ensure!(ok, "{label}: interlacing step {step} at crossing {}", j + 1);
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} rulings"))
}

fn c12_lift() -> Outcome {
    let mut runs = 0;
    for name in ["trefoil.plat", "unknot.plat"] {
        let d = front(name);
        let dga = Input::Front(d.clone()).dga();
        for rho in [0u32, 1] {
            for (vals, _) in common::brute_augmentations(&reduce_mod2(&dga), 2, rho) {
                let z2 = Z2Augmentation { rho, values: vals.iter().map(|&v| v == 1).collect() };
                let aug = lift_z2_augmentation(&d, &z2).map_err(|e| format!("{name} {vals:?}: {e}"))?;
                ensure!(minus_one(&aug), "{name} {vals:?}: eps(t) = {:?}", aug.tvalues);
                ensure!(common::is_augmentation(&dga, &aug), "{name} {vals:?}: eps o d != 0");
                for (g, v) in aug.values.iter().enumerate() {
                    let n = v.to_i64().ok_or_else(|| format!("{name} {vals:?}: non-integer value"))?;
                    ensure!(n.rem_euclid(2) as u64 == vals[g], "{name} {vals:?}: parity differs at {}", dga.gen_names[g]);
                }
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} mod-2 augmentations lifted"))
}

fn main() {
    let mut dipped = Dipped::default();
    let mut results: Vec<(u32, Outcome)> = Vec::new();
    let mut run = |n: u32, f: &mut dyn FnMut(&mut Dipped) -> Outcome, dipped: &mut Dipped| {
        let outcome = catch_unwind(AssertUnwindSafe(|| f(dipped))).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let (status, detail) = match &outcome {
            Ok(s) => ("PASS", s.clone()),
            Err(s) => ("FAIL", s.clone()),
        };
        println!("criterion {n:>2}: {status} - {detail}");
        results.push((n, outcome));
    };
    run(1, &mut |_| c1_trefoil_dga(), &mut dipped);
    run(3, &mut |_| c3_ruling_counts(), &mut dipped);
    run(4, &mut |_| c4_trefoil_counts(), &mut dipped);
    run(5, &mut |_| c5_even_rho(), &mut dipped);
    run(6, &mut |_| c6_odd_varieties(), &mut dipped);
    run(7, &mut c7_existence, &mut dipped);
    run(8, &mut c8_aug_to_ruling, &mut dipped);
    run(9, &mut c9_ruling_to_aug, &mut dipped);
    run(10, &mut c10_trefoil_dipped_values, &mut dipped);
    run(11, &mut |_| c11_parity(), &mut dipped);
    run(12, &mut |_| c12_lift(), &mut dipped);
    // needs the dipped diagrams gathered above
    run(2, &mut |d| c2_d_squared(d), &mut dipped);
    let failed = results.iter().filter(|(_, o)| o.is_err()).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

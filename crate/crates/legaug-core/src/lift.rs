//! Lifting mod-2 augmentations to integer augmentations with `ε(t) = −1`.
//!
//! A mod-2 augmentation is run through the augmentation→ruling algorithm
//! over `F_2`. Its dipped values then say which original crossings are
//! augmented; giving each of those the value `1` over the rationals and
//! solving the dipped diagram yields an augmentation whose a-lattice values
//! are all `±1`. Undipping it gives an integer-valued augmentation of the
//! original DGA that reduces to the input mod 2.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{FieldSpec, FieldValue};
use crate::augment::{check_augmentation, Augmentation, Provenance};
use crate::correspond::{augmentation_to_ruling, solve_dipped, undip_augmentation, DippedAugmentation, GenKey};
use crate::dga::{build_ce_dga, BasePoints, CeDga};
use crate::diagram::FrontDiagram;
use crate::error::Error;
use crate::rulings::NormalRuling;

/// A mod-2 augmentation: one bit per generator, with `t ↦ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Z2Augmentation {
    pub rho: u32,
    pub values: Vec<bool>,
}

impl Z2Augmentation {
    /// Reads the bits off an augmentation over `F_2`.
    pub fn from_augmentation(aug: &Augmentation) -> Result<Self, Error> {
        if aug.field != FieldSpec::Prime(2) {
            return Err(Error::NotAugmentation(String::from("a mod-2 augmentation must be over F2")));
        }
        Ok(Z2Augmentation { rho: aug.rho, values: aug.values.iter().map(|v| !v.is_zero()).collect() })
    }

    /// The same map as an augmentation over `F_2` of the single-base-point DGA.
    pub fn to_augmentation(&self) -> Augmentation {
        let f2 = FieldSpec::Prime(2);
        Augmentation {
            field: f2,
            rho: self.rho,
            values: self.values.iter().map(|&b| if b { f2.one() } else { f2.zero() }).collect(),
            tvalues: alloc::vec![f2.one()],
            provenance: Provenance::Given,
        }
    }
}

/// The mod-2 reduction of a DGA: `t_i ↦ 1`, coefficients mod 2.
pub fn reduce_mod2(dga: &CeDga) -> CeDga {
    dga.reduce_mod2()
}

/// `Π ε(a^k_{rs})` over the pairs `(r, s)` of the ruling at dip `k`.
pub fn dip_product(dipped: &DippedAugmentation, ruling: &NormalRuling, k: usize) -> FieldValue {
    let state = &ruling.states[k];
    let mut acc = dipped.field.one();
    for pos in 0..state.0.len() {
        let partner = state.partner(pos);
        if partner < pos {
            acc = acc.mul(&dipped.value(GenKey::A(k, pos + 1, partner + 1)));
        }
    }
    acc
}

/// Lifts a mod-2 augmentation of the diagram's DGA to an integer
/// augmentation with `ε(t) = −1` that agrees with it mod 2.
///
/// The result is stored over the rationals; every value is an integer.
pub fn lift_z2_augmentation(diagram: &FrontDiagram, z2: &Z2Augmentation) -> Result<Augmentation, Error> {
    let plain = build_ce_dga(diagram, BasePoints::Single);
    if z2.values.len() != plain.len() {
        return Err(Error::NotAugmentation(format!("expected {} values, got {}", plain.len(), z2.values.len())));
    }
    let input = z2.to_augmentation();
    check_augmentation(&plain, &input)?;
    let witness = augmentation_to_ruling(diagram, &input)?;
    let q = FieldSpec::Rationals;
    let cvals: Vec<FieldValue> = (1..=diagram.n())
        .map(|j| if witness.dipped.value(GenKey::C(j)).is_zero() { q.zero() } else { q.one() })
        .collect();
    let dipped = solve_dipped(diagram, &witness.ruling, &cvals, q, z2.rho)?;
    let mut aug = undip_augmentation(&dipped)?;
    aug.provenance = Provenance::Lifted;
    // generators that occur in no differential (the q's) are unconstrained:
    // they take the input bit
    let mut free = alloc::vec![true; plain.len()];
    for d in &plain.differentials {
        for g in d.generators() {
            free[g] = false;
        }
    }
    for g in (0..plain.len()).filter(|&g| free[g]) {
        aug.values[g] = if z2.values[g] { q.one() } else { q.zero() };
    }
    check_augmentation(&plain, &aug)?;
    for (g, v) in aug.values.iter().enumerate() {
        let n = v.to_i64().ok_or_else(|| Error::Internal(format!("{} lifts to non-integer {v}", plain.gen_names[g])))?;
        if (n.rem_euclid(2) == 1) != z2.values[g] {
            return Err(Error::Internal(format!("{} lifts to {n}, which disagrees mod 2", plain.gen_names[g])));
        }
    }
    if aug.t_product() != q.from_i64(-1) {
        return Err(Error::Internal(format!("lifted ε(t) = {}", aug.t_product())));
    }
    Ok(aug)
}

//! Parallel drivers over the core's exhaustive searches.

use legaug_core::algebra::FieldSpec;
use legaug_core::augment::{Augmentation, AugmentationSearch, AugmentationVariety};
use legaug_core::dga::CeDga;
use rayon::prelude::*;

use crate::error::CliError;

/// Every ρ-graded augmentation over `F_p`, searched one branch per worker.
/// The result is in the same order as the sequential search.
pub fn enumerate_augmentations(
    dga: &CeDga,
    field: FieldSpec,
    rho: u32,
    budget: u128,
    jobs: Option<usize>,
) -> Result<Vec<Augmentation>, CliError> {
    let search = AugmentationSearch::new(dga, field, rho)?;
    search.check_budget(budget)?;
    let run = || search.branches().par_iter().flat_map_iter(|&b| search.run_branch(b)).collect::<Vec<_>>();
    match jobs {
        Some(n) => Ok(rayon::ThreadPoolBuilder::new().num_threads(n).build()?.install(run)),
        None => Ok(run()),
    }
}

/// The augmentation variety, computed with [`enumerate_augmentations`].
pub fn augmentation_variety(
    dga: &CeDga,
    field: FieldSpec,
    rho: u32,
    budget: u128,
    jobs: Option<usize>,
) -> Result<AugmentationVariety, CliError> {
    let augs = enumerate_augmentations(dga, field, rho, budget, jobs)?;
    Ok(AugmentationVariety::from_augmentations(field, rho, &augs))
}

//! Stabilizer systems of Fedosov jets: assembly, exact kernel dimensions,
//! obstruction operators, explicit witnesses and random generic jets.

mod obstruction;
mod random;
mod system;
pub(crate) mod witness;

pub use obstruction::{
    first_order_obstruction, obstruction_from_linear_coefficients, two_jet_obstruction, ObsCol,
    ObsRow, ObsVars, ObstructionMatrix,
};
pub use random::{compatible_component_dimension, random_compatible_jet, DEFAULT_COEFFICIENT_BOUND};
pub use system::{
    assemble_stabilizer_system, orbit_dimension, stabilizer_dimension, unknown_count,
    StabilizerSolution, StabilizerSystem, SysCol, SysRow,
};
pub use witness::{witness_jet, WitnessKind};

/// One cell of a genericity scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlateauCell {
    pub seed: u64,
    pub stabilizer: usize,
    pub orbit: usize,
}

/// Sampled evidence for the generic stabilizer dimension at (n, k).
///
/// The stabilizer dimension is upper-semicontinuous, so the plateau (the
/// generic value) is the minimum over the sample; any seed above it is
/// listed as a disagreement rather than silently accepted.
#[derive(Clone, Debug)]
pub struct PlateauReport {
    pub n: usize,
    pub k: usize,
    pub cells: Vec<PlateauCell>,
    pub witness: Option<(WitnessKind, usize)>,
    pub plateau: usize,
    pub disagreeing_seeds: Vec<u64>,
}

/// Run the stabilizer computation over the given seeds (and an optional
/// witness jet) and report the plateau.
pub fn genericity_scan(
    n: usize,
    k: usize,
    seeds: &[u64],
    bound: u32,
    witness: Option<WitnessKind>,
) -> crate::Result<PlateauReport> {
    let mut cells = Vec::with_capacity(seeds.len());
    for &seed in seeds {
        let jet = random_compatible_jet(n, k, seed, bound)?;
        let sol = assemble_stabilizer_system(&jet)?.solve();
        cells.push(PlateauCell {
            seed,
            stabilizer: sol.stabilizer_dimension(),
            orbit: sol.orbit_dimension(),
        });
    }
    let witness_cell = match witness {
        Some(kind) => {
            let jet = witness_jet(kind, n)?;
            assert_eq!(jet.order(), k, "witness order must match k");
            Some((kind, stabilizer_dimension(&jet)?))
        }
        None => None,
    };
    let plateau = cells
        .iter()
        .map(|c| c.stabilizer)
        .chain(witness_cell.iter().map(|w| w.1))
        .min()
        .expect("at least one cell");
    let disagreeing_seeds = cells
        .iter()
        .filter(|c| c.stabilizer != plateau)
        .map(|c| c.seed)
        .collect();
    Ok(PlateauReport {
        n,
        k,
        cells,
        witness: witness_cell,
        plateau,
        disagreeing_seeds,
    })
}

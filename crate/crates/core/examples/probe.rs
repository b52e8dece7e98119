use fedosov::stabilizer::*;
use std::time::Instant;

fn main() {
    // witnesses
    for (kind, n, k) in [
        (WitnessKind::Dim2OneJet, 1usize, 1usize),
        (WitnessKind::Dim2TwoJet, 1, 2),
        (WitnessKind::HighDim1Jet, 2, 1),
    ] {
        let jet = witness_jet(kind, n).unwrap();
        let t = Instant::now();
        let sol = assemble_stabilizer_system(&jet).unwrap().solve();
        println!(
            "witness {kind} n={n} k={k}: stab={} orbit={} unknowns={} ({:?})",
            sol.stabilizer_dimension(),
            sol.orbit_dimension(),
            sol.unknowns,
            t.elapsed()
        );
    }
    // random plateaus
    for n in 1..=3usize {
        for k in 0..=3usize {
            if n == 3 && k == 3 { continue; }
            if n == 2 && k == 3 { continue; }
            let mut dims = Vec::new();
            let t = Instant::now();
            for seed in 1..=5u64 {
                let jet = random_compatible_jet(n, k, seed, 5).unwrap();
                let sol = assemble_stabilizer_system(&jet).unwrap().solve();
                dims.push((sol.stabilizer_dimension(), sol.orbit_dimension()));
            }
            println!("n={n} k={k}: {:?} ({:?})", dims, t.elapsed());
        }
    }
}

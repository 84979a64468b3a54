//! A seeded random audit of the Hopf trace identity: random complexes,
//! random gradient fields from free-face collapse, and a mix of chain maps.
//! Pass a seed as the first argument to vary the sweep (default 0).
//!
//! Run with `cargo run --example random_audit [seed]`.

use hopftrace::chain_map::verify_hopf;
use hopftrace::generate::{
    random_chain_map, random_complex, random_gradient_field, rng, subdivision_composed_map, MapKind,
};

fn main() -> hopftrace::Result<()> {
    let seed: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(0);
    let mut r = rng(seed);
    let trials = 200usize;
    let mut by_kind = [0usize; 4];
    for t in 0..trials {
        let (k, phi) = if t % 4 == 3 {
            let base = random_complex(&mut r, 2, 40);
            subdivision_composed_map(&base)?
        } else {
            let k = random_complex(&mut r, 3, 250);
            let kind = [MapKind::Identity, MapKind::Zero, MapKind::Induced][t % 4];
            let phi = random_chain_map(&mut r, &k, kind)?;
            (k, phi)
        };
        let v = random_gradient_field(&mut r, &k);
        let report = verify_hopf(&phi, &v)?;
        assert!(
            report.equal(),
            "counterexample at trial {t}: lhs {} != rhs {}",
            report.lhs,
            report.rhs
        );
        by_kind[t % 4] += 1;
    }
    println!("seed {seed}: {trials} random triples, all equal");
    println!(
        "  identity: {}, zero: {}, induced: {}, subdivision-composed: {}",
        by_kind[0], by_kind[1], by_kind[2], by_kind[3]
    );
    Ok(())
}

//! The combinatorial Hopf trace identity on the hexagon:
//! `Σ (-1)^q tr(φ_q) = Σ (-1)^q Σ_{σ critical} ⟨σ←, φ_q(σ→)⟩`.
//!
//! Run with `cargo run --example hopf_trace`.

use hopftrace::chain_map::{verify_hopf, ChainMap};
use hopftrace::collapse::circle_witness;
use hopftrace::dvf::DiscreteVectorField;
use hopftrace::simplex::{Simplex, Vertex};
use hopftrace::simplicial_map::SimplicialMap;

fn main() -> hopftrace::Result<()> {
    // C_6 with the two-critical gradient field: vertex 0 and edge [2,3]
    let witness = circle_witness(6)?;
    let k = witness.complex().clone();
    let field = witness.dvf();
    println!(
        "hexagon critical cells: {} and {}",
        witness.base_vertex(),
        witness.top_cell()
    );

    for (name, phi) in [
        ("identity", ChainMap::identity(k.clone())),
        ("zero map", ChainMap::zero(k.clone(), k.clone())),
    ] {
        let report = verify_hopf(&phi, field)?;
        println!(
            "{name:>9}: lhs = {}, rhs = {}, equal = {}",
            report.lhs,
            report.rhs,
            report.equal()
        );
    }

    // a rotation fixes no simplex, so the trace side is forced to 0
    let rotation = SimplicialMap::new(
        k.clone(),
        k.clone(),
        (0..6).map(|i| (Vertex(i), Vertex((i + 1) % 6))).collect(),
    )?;
    let phi = ChainMap::induced(&rotation)?;
    let report = verify_hopf(&phi, field)?;
    println!(
        " rotation: lhs = {}, rhs = {}, equal = {}",
        report.lhs,
        report.rhs,
        report.equal()
    );

    // a field with a closed trajectory is rejected with the witness
    let c3 = hopftrace::complex::cycle_complex(3)?;
    let cyclic = DiscreteVectorField::new(
        c3,
        [
            (Simplex::from_ids([0]), Simplex::from_ids([0, 1])),
            (Simplex::from_ids([1]), Simplex::from_ids([1, 2])),
            (Simplex::from_ids([2]), Simplex::from_ids([0, 2])),
        ],
    )
    .expect("pairs form a matching");
    match cyclic.gradient_certificate() {
        Ok(_) => println!("unexpected: cyclic field certified"),
        Err(trajectory) => println!("cyclic field rejected, witness: {trajectory}"),
    }
    Ok(())
}

//! Constructive combinatorial spheres: simplex-boundary skeleta, joins with
//! the five-step gradient field, and barycentric subdivision with witness
//! transfer.
//!
//! Run with `cargo run --example build_spheres`.

use hopftrace::collapse::{circle_witness, gvf_join, skeleton_sphere_witness, sphere_witness_bd};
use hopftrace::generate::zero_sphere_witness;

fn main() -> hopftrace::Result<()> {
    // boundaries of simplices: Δ^n_{n-1} is an (n-1)-sphere
    for n in 2..=5 {
        let w = skeleton_sphere_witness(n)?;
        println!(
            "∂Δ^{n}: dim {}, counts {:?}, critical {} / {}",
            w.dim(),
            w.complex().counts(),
            w.base_vertex(),
            w.top_cell(),
        );
    }

    // the octahedron as S^0 * S^0 * S^0
    let s0 = zero_sphere_witness()?;
    let (_, _, square) = gvf_join(&s0, &zero_sphere_witness()?)?;
    println!("\nS^0 * S^0: counts {:?}", square.complex().counts());
    let (_, _, octahedron) = gvf_join(&square, &zero_sphere_witness()?)?;
    println!("octahedron: counts {:?}", octahedron.complex().counts());
    println!(
        "octahedron Euler characteristic: {}",
        octahedron.complex().euler_characteristic()
    );

    // a 3-sphere as the join of two circles
    let (_, _, sphere3) = gvf_join(&circle_witness(6)?, &circle_witness(6)?)?;
    println!(
        "\nC_6 * C_6: dim {}, counts {:?}, χ = {}",
        sphere3.dim(),
        sphere3.complex().counts(),
        sphere3.complex().euler_characteristic()
    );

    // witness transfer across barycentric subdivision
    let hexagon = circle_witness(6)?;
    let (bd, _, w_bd) = sphere_witness_bd(&hexagon, 0)?;
    println!(
        "\nBd(C_6) = C_12: counts {:?}, critical {} / {}",
        bd.counts(),
        w_bd.base_vertex(),
        w_bd.top_cell()
    );
    let (bd2, _, w_bd2) = sphere_witness_bd(&w_bd, 0)?;
    println!(
        "Bd²(C_6) = C_24: counts {:?}, dim {}",
        bd2.counts(),
        w_bd2.dim()
    );
    Ok(())
}

//! Orientations of combinatorial spheres: the witness orientation, the
//! two-element orientation set {ξ, -ξ}, cycles as integer multiples of the
//! fundamental cycle, and orientation-independence of the degree.
//!
//! Run with `cargo run --example orientations`.

use hopftrace::chain_map::ChainMap;
use hopftrace::generate::octahedron_witness;
use hopftrace::simplex::Vertex;
use hopftrace::simplicial_map::SimplicialMap;
use hopftrace::sphere::{
    degree_of_chain_map, degree_with_orientation, orientation_from_witness, orientation_pair,
};

fn main() -> hopftrace::Result<()> {
    let w = octahedron_witness()?;
    let k = w.complex().clone();

    let xi = orientation_from_witness(&w)?;
    println!("witness orientation of the octahedron: {:?}", xi.signs());
    let cycle = xi.fundamental_cycle(&k)?;
    println!(
        "fundamental cycle is a cycle: {}",
        cycle.boundary(&k)?.is_zero()
    );

    let (a, b) = orientation_pair(&k)?;
    println!("solver pair: {:?} and its negation", a.signs());
    assert!(xi == a || xi == b);

    // every top cycle is an integer multiple of the fundamental cycle
    let tripled = cycle.scaled(3)?;
    println!(
        "3·[S]: coefficients {:?} (one magnitude)",
        tripled.terms().map(|(_, x)| x).collect::<Vec<_>>()
    );

    // the antipodal map of the octahedron (swap each S^0 factor)
    let antipodal = SimplicialMap::new(
        k.clone(),
        k.clone(),
        [(0u64, 1u64), (1, 0), (2, 3), (3, 2), (4, 5), (5, 4)]
            .into_iter()
            .map(|(a, b)| (Vertex(a), Vertex(b)))
            .collect(),
    )?;
    let phi = ChainMap::induced(&antipodal)?;
    let degree = degree_of_chain_map(&phi, &w)?;
    println!("\nantipodal map degree on the 2-sphere: {degree}");
    let d1 = degree_with_orientation(&phi, &k, &a)?;
    let d2 = degree_with_orientation(&phi, &k, &b)?;
    println!("degree with ξ: {d1}, with -ξ: {d2} (orientation-independent)");
    Ok(())
}

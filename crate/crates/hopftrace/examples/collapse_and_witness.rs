//! Greedy collapses: full collapsibility of a simplex, honest failure on a
//! hollow triangle, collapse onto a subcomplex, and sphere-witness
//! derivation from scratch.
//!
//! Run with `cargo run --example collapse_and_witness`.

use std::collections::BTreeSet;

use hopftrace::collapse::{
    derive_sphere_witness, greedy_collapse, gvf_cone_transfer, gvf_skeleton_minus_facet,
};
use hopftrace::complex::{fresh_vertex, skeleton_of_simplex, SimplicialComplex};
use hopftrace::simplex::Simplex;

fn main() -> hopftrace::Result<()> {
    // a solid triangle collapses to a point: 3 free-face pairs + (∅, v)
    let triangle = SimplicialComplex::from_maximal(&[vec![0, 1, 2]]);
    let field = greedy_collapse(&triangle, &BTreeSet::new(), 0).expect("solid simplices collapse");
    println!(
        "solid triangle: {} pairs, critical = {:?}",
        field.len(),
        field.critical_simplices()
    );

    // its boundary cannot: no free face exists
    let hollow = hopftrace::complex::cycle_complex(3)?;
    match greedy_collapse(&hollow, &BTreeSet::new(), 2) {
        Ok(_) => println!("unexpected collapse of a circle"),
        Err(stuck) => println!("hollow triangle: {stuck}"),
    }

    // collapse onto a kept subcomplex
    let keep: BTreeSet<Simplex> = [
        Simplex::from_ids([0]),
        Simplex::from_ids([1]),
        Simplex::from_ids([0, 1]),
    ]
    .into_iter()
    .collect();
    let onto_edge = greedy_collapse(&triangle, &keep, 0).expect("collapses onto an edge");
    println!(
        "triangle onto edge [0 1]: critical = {:?}",
        onto_edge.critical_simplices()
    );

    // the skeleton-minus-facet collapsing field on a simplex boundary
    let (complex, field) = gvf_skeleton_minus_facet(3)?;
    println!(
        "\n∂Δ³ minus a facet: counts {:?}, {} pairs, critical = {:?}",
        complex.counts(),
        field.len(),
        field.critical_simplices()
    );

    // transferring collapsibility to a cone leaves exactly the base critical
    let apex = fresh_vertex(&complex);
    let (coned, transferred) = gvf_cone_transfer(&field, apex)?;
    println!(
        "cone transfer: {} simplices stay critical out of {} in the cone",
        transferred.critical_simplices().len(),
        coned.len()
    );

    // deriving a sphere witness with no field given
    let sphere = skeleton_of_simplex(3, 2)?;
    let witness = derive_sphere_witness(&sphere, 0)?;
    println!(
        "\nderived witness on ∂Δ³: critical {} / {}",
        witness.base_vertex(),
        witness.top_cell()
    );
    Ok(())
}

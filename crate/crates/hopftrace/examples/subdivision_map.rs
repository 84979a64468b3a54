//! The subdivision chain map `g_#: C_#(K) -> C_#(Bd(K))`: commutes with
//! boundaries, carries each d-simplex to its (d+1)! barycentric pieces with
//! ±1 coefficients, and sends fundamental cycles to fundamental cycles.
//!
//! Run with `cargo run --example subdivision_map`.

use hopftrace::chain::Chain;
use hopftrace::chain_map::subdivision_chain_map;
use hopftrace::collapse::circle_witness;
use hopftrace::generate::octahedron_witness;
use hopftrace::sphere::orientation_from_witness;
use hopftrace::subdivision::SubdivisionTower;

fn main() -> hopftrace::Result<()> {
    // on the octahedron: each triangle subdivides into 3! signed pieces
    let oct = octahedron_witness()?;
    let tower = SubdivisionTower::build(oct.complex().clone(), 1);
    let g = subdivision_chain_map(&tower)?;
    match g.verify() {
        Ok(()) => println!("∂ ∘ g = g ∘ ∂ verified on every simplex of the octahedron"),
        Err(witness) => println!("chain-map property failed at {witness}"),
    }
    let first_triangle = &oct.complex().simplices(2)[0];
    let image = g.apply(&Chain::unit(first_triangle.clone()))?;
    println!(
        "g({first_triangle}) has {} pieces, all coefficients ±1: {}",
        image.support_size(),
        image.terms().all(|(_, x)| x == 1 || x == -1)
    );

    // fundamental cycles map to fundamental cycles (coefficients stay ±1)
    let hexagon = circle_witness(6)?;
    let tower = SubdivisionTower::build(hexagon.complex().clone(), 2);
    let g2 = subdivision_chain_map(&tower)?;
    let xi = orientation_from_witness(&hexagon)?;
    let cycle = xi.fundamental_cycle(hexagon.complex())?;
    let image = g2.apply(&cycle)?;
    println!(
        "\ng²[C_6 cycle]: {} edges of Bd²(C_6), boundary zero: {}, unit coefficients: {}",
        image.support_size(),
        image.boundary(tower.top())?.is_zero(),
        image.terms().all(|(_, x)| x == 1 || x == -1)
    );
    Ok(())
}

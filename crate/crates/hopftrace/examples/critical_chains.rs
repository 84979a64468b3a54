//! Critical and co-critical chains on the hexagon: the dynamic program over
//! the trajectory digraph, the brute-force enumeration oracle, and the
//! modified basis with its unimodular change of basis.
//!
//! Run with `cargo run --example critical_chains`.

use hopftrace::chain::BasisElement;
use hopftrace::collapse::circle_witness;
use hopftrace::dvf::Direction;
use hopftrace::linalg::determinant;
use hopftrace::morse::{
    chain_from_enumeration, co_critical_chain, critical_chain, enumerate_trajectories,
    modified_basis,
};

fn main() -> hopftrace::Result<()> {
    let w = circle_witness(6)?;
    let v = w.dvf();
    let cert = v.require_gradient()?;

    let top = w.top_cell();
    let fwd = critical_chain(v, &cert, top)?;
    println!("critical chain {top}→ = {fwd:?}");
    println!("∂({top}→) = 0: {}", fwd.boundary(w.complex())?.is_zero());

    let base = w.base_vertex();
    let back = co_critical_chain(v, &cert, base)?;
    println!("co-critical chain {base}← = {back:?}");

    // the enumeration oracle agrees with the dynamic program
    let trajectories = enumerate_trajectories(v, top, Direction::Down, 10_000)?;
    println!(
        "\n{} descending trajectories start at {top}:",
        trajectories.len()
    );
    for t in trajectories.iter().filter(|t| !t.is_trivial()).take(3) {
        println!("  weight {:+}: ends at {}", t.weight, t.terminal());
    }
    let brute = chain_from_enumeration(v, top, Direction::Down, 10_000)?;
    println!("enumeration sum equals the DP chain: {}", brute == fwd);

    // the modified basis in each dimension, with determinant ±1
    for q in 0..=1 {
        let basis = modified_basis(v, &cert, q)?;
        let tags: Vec<&str> = basis
            .provenance()
            .iter()
            .map(|p| match p {
                BasisElement::Simplex(_) => "simplex",
                BasisElement::CriticalChain(_) => "critical",
                BasisElement::BoundaryImage(_) => "∂-image",
                BasisElement::DownSimplex(_) => "down",
            })
            .collect();
        let det = determinant(&basis.change_of_basis_matrix(w.complex())?)?;
        println!("\ndim {q} modified basis: {tags:?}, det = {det}");
    }
    Ok(())
}

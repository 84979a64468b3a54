//! The cone lemma: any simplicial map out of a cone `x*S` annihilates the
//! fundamental cycle of `S` — the mechanism behind the nonexistence half of
//! the Tucker-type statements.
//!
//! Run with `cargo run --example cone_lemma`.

use hopftrace::collapse::circle_witness;
use hopftrace::complex::{cone, fresh_vertex};
use hopftrace::generate::{random_cone_maps, rng};
use hopftrace::simplex::Vertex;
use hopftrace::simplicial_map::SimplicialMap;
use hopftrace::sphere::cone_lemma_check;

fn main() -> hopftrace::Result<()> {
    let w = circle_witness(6)?;
    let apex = fresh_vertex(w.complex());
    let coned = cone(apex, w.complex())?;
    println!("cone over C_6: apex {apex}, counts {:?}", coned.counts());

    // the constant map
    let constant = SimplicialMap::constant(coned.clone(), w.complex().clone(), Vertex(0))?;
    println!(
        "constant map annihilates [S]: {}",
        cone_lemma_check(&constant, &w)?
    );

    // a spread of random simplicial maps out of the cone
    let mut r = rng(2024);
    let maps = random_cone_maps(&mut r, &coned, w.complex(), 50, 15);
    let mut all = true;
    for f in &maps {
        all &= cone_lemma_check(f, &w)?;
    }
    println!("50 random simplicial cone maps annihilate [S]: {all}");
    Ok(())
}

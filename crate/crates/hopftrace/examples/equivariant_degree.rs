//! The equivariant degree theorem end to end: the position-mod-6 map
//! `Bd²(C_6) -> C_6` is Z_3-equivariant and has combinatorial degree
//! 4 ≡ 1 (mod 3), certified two ways (chain-map route and signed
//! preimage count).
//!
//! Also writes the complex/map/action files for the equivalent CLI run:
//!
//! ```text
//! hopftrace degree --map imod6.json --target c6.complex.json -k 2 \
//!     --target-action c6.action.json
//! ```
//!
//! Run with `cargo run --example equivariant_degree`.

use hopftrace::action::verify_degree_mod_p;
use hopftrace::generate::equivariant_mod6_fixture;
use hopftrace::io::{to_canonical_json, ActionFile, ComplexFile, MapFile};

fn main() -> hopftrace::Result<()> {
    let fx = equivariant_mod6_fixture()?;
    println!(
        "source: Bd²(C_6) with {} vertices; target: C_6; induced Z_3 action",
        fx.tower.top().vertex_count()
    );

    let verdict = verify_degree_mod_p(
        &fx.map,
        &fx.witness,
        &fx.tower,
        &fx.source_action,
        &fx.target_action,
    )?;
    println!(
        "combinatorial degree (subdivision ∘ induced): {}",
        verdict.degree
    );
    println!(
        "signed preimage oracle:                       {}",
        verdict.oracle_degree
    );
    println!(
        "degree ≡ {} (mod {}): pass = {}",
        verdict.residue, verdict.p, verdict.pass
    );

    // the same inputs as files, for the CLI workflow
    let dir = std::env::temp_dir().join("hopftrace-equivariant-degree");
    std::fs::create_dir_all(&dir)?;
    let write = |name: &str, text: String| -> hopftrace::Result<()> {
        let path = dir.join(name);
        std::fs::write(&path, text)?;
        println!("wrote {}", path.display());
        Ok(())
    };
    write(
        "c6.complex.json",
        to_canonical_json(&ComplexFile::from_complex(fx.tower.base()))?,
    )?;
    write(
        "c6.action.json",
        to_canonical_json(&ActionFile::from_action(&fx.target_action))?,
    )?;
    write(
        "imod6.json",
        to_canonical_json(&MapFile::from_map(&fx.map))?,
    )?;
    write(
        "c24.dvf.json",
        to_canonical_json(&hopftrace::io::DvfFile::from_field(fx.witness.dvf()))?,
    )?;
    println!(
        "\nequivalent CLI run:\n  hopftrace degree --map {}/imod6.json --target {}/c6.complex.json \\\n      -k 2 --target-action {}/c6.action.json",
        dir.display(),
        dir.display(),
        dir.display()
    );
    Ok(())
}

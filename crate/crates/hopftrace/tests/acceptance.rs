//! Acceptance suite: one test per criterion, each printing a PASS line.
//! Everything here is exact integer arithmetic; no tolerances anywhere.

use hopftrace::action::{build_zp_circle, odd_dimension_check, verify_degree_mod_p};
use hopftrace::chain::Chain;
use hopftrace::chain_map::{verify_hopf, ChainMap};
use hopftrace::collapse::{gvf_join, skeleton_sphere_witness};
use hopftrace::complex::{cone, fresh_vertex};
use hopftrace::dvf::Direction;
use hopftrace::generate::{
    self, equivariant_mod6_fixture, octahedron_witness, random_chain_map, random_complex,
    random_gradient_field, random_self_map, rng, sphere_fixture_set, subdivision_composed_map,
    zero_sphere_witness, MapKind,
};
use hopftrace::morse::{chain_from_enumeration, co_critical_chain, critical_chain, modified_basis};
use hopftrace::simplex::Simplex;
use hopftrace::sphere::{
    degree_with_orientation, orientation_from_witness, orientation_pair, SphereWitness,
};
use hopftrace::subdivision::SubdivisionTower;

fn s(ids: &[u64]) -> Simplex {
    Simplex::from_ids(ids.iter().copied())
}

/// Criterion 1: the Hopf trace identity holds exactly on 1000 randomized
/// (complex, gradient field, chain map) triples.
#[test]
fn criterion_01_hopf_trace_identity_randomized() {
    let mut r = rng(0xB0B1);
    let mut checked = 0usize;
    for t in 0..1000usize {
        let (k, phi) = if t % 4 == 3 {
            // endomorphism of C_#(Bd(base)): subdivision ∘ last-vertex
            let base = random_complex(&mut r, 2, 40);
            let (bd, phi) = subdivision_composed_map(&base).expect("subdivision composes");
            (bd, phi)
        } else {
            let k = random_complex(&mut r, 3, 300);
            let kind = [MapKind::Identity, MapKind::Zero, MapKind::Induced][t % 4];
            let phi = random_chain_map(&mut r, &k, kind).expect("map builds");
            (k, phi)
        };
        let v = random_gradient_field(&mut r, &k);
        let report = verify_hopf(&phi, &v).expect("both sides evaluate");
        assert!(
            report.equal(),
            "trial {t}: lhs {} != rhs {} on {:?}",
            report.lhs,
            report.rhs,
            k
        );
        checked += 1;
    }
    assert_eq!(checked, 1000);
    println!("criterion 01 (Hopf trace identity, 1000 randomized triples): PASS");
}

/// Criterion 2: the identity specialization gives the Euler characteristic
/// `(-1)^d + 1` on the named sphere witnesses.
#[test]
fn criterion_02_euler_characteristic_specialization() {
    let mut cases: Vec<(&str, SphereWitness)> = vec![
        ("C_3", hopftrace::collapse::circle_witness(3).unwrap()),
        ("C_6", hopftrace::collapse::circle_witness(6).unwrap()),
        ("octahedron", octahedron_witness().unwrap()),
        (
            "boundary of the 4-simplex",
            skeleton_sphere_witness(4).unwrap(),
        ),
    ];
    let c6 = hopftrace::collapse::circle_witness(6).unwrap();
    let (_, _, sphere3) = gvf_join(&c6, &hopftrace::collapse::circle_witness(6).unwrap()).unwrap();
    cases.push(("join-built 3-sphere", sphere3));

    for (name, w) in &cases {
        let d = w.dim();
        let expected = if d % 2 == 0 { 2 } else { 0 };
        let id = ChainMap::identity(w.complex().clone());
        let report = verify_hopf(&id, w.dvf()).unwrap();
        assert_eq!(report.lhs, expected, "{name}: lhs");
        assert_eq!(report.rhs, expected, "{name}: rhs");
    }
    let dims: Vec<i64> = cases.iter().map(|(_, w)| w.dim()).collect();
    assert_eq!(dims, vec![1, 1, 2, 3, 3]);
    println!("criterion 02 (Euler specialization on 5 sphere witnesses): PASS");
}

/// Criterion 3: the modified basis has change-of-basis determinant ±1 in
/// every dimension, over 100 random (complex, gradient field) pairs.
#[test]
fn criterion_03_modified_basis_unimodular() {
    let mut r = rng(0xBA515);
    for trial in 0..100 {
        let k = random_complex(&mut r, 3, 200);
        let v = random_gradient_field(&mut r, &k);
        let cert = v.require_gradient().expect("generated fields are gradient");
        for q in 0..=k.dim() {
            let basis = modified_basis(&v, &cert, q).unwrap();
            let matrix = basis.change_of_basis_matrix(&k).unwrap();
            let det = hopftrace::linalg::determinant(&matrix).unwrap();
            assert!(det == 1 || det == -1, "trial {trial} dim {q}: det = {det}");
        }
    }
    println!("criterion 03 (modified basis determinant ±1, 100 random pairs): PASS");
}

/// Criterion 4: the duality `⟨σ→, c⟩_{S̃} = ⟨σ←, c⟩_std` over 100 random
/// chains per critical simplex on 20 random instances.
#[test]
fn criterion_04_duality_of_critical_chains() {
    use rand::Rng;
    let mut r = rng(0xD0A1);
    for _ in 0..20 {
        let k = random_complex(&mut r, 3, 150);
        let v = random_gradient_field(&mut r, &k);
        let cert = v.require_gradient().unwrap();
        let census = v.census();
        for (q, crit) in census.critical.iter().enumerate() {
            if crit.is_empty() {
                continue;
            }
            let q = q as i64;
            let basis = modified_basis(&v, &cert, q).unwrap();
            let simplices = k.simplices(q);
            for sigma in crit {
                let fwd = critical_chain(&v, &cert, sigma).unwrap();
                let back = co_critical_chain(&v, &cert, sigma).unwrap();
                for _ in 0..100 {
                    let mut c = Chain::zero(q);
                    for s in simplices {
                        if r.gen_bool(0.4) {
                            c.add_term(s, r.gen_range(-9..=9)).unwrap();
                        }
                    }
                    let lhs = hopftrace::chain::inner_product(&k, &fwd, &c, Some(&basis)).unwrap();
                    let rhs = back.dot(&c).unwrap();
                    assert_eq!(lhs, rhs, "σ = {sigma}, c = {c:?}");
                }
            }
        }
    }
    println!("criterion 04 (critical/co-critical duality, 20 instances x 100 chains): PASS");
}

/// Criterion 5: the equivariant example has combinatorial degree 4 agreeing
/// with the oracle and ≡ 1 (mod 3); identity maps on Z_p circles have
/// degree 1 for p in {2, 3, 5}.
#[test]
fn criterion_05_degree_theorem() {
    let fx = equivariant_mod6_fixture().unwrap();
    let verdict = verify_degree_mod_p(
        &fx.map,
        &fx.witness,
        &fx.tower,
        &fx.source_action,
        &fx.target_action,
    )
    .unwrap();
    assert_eq!(verdict.degree, 4);
    assert_eq!(verdict.oracle_degree, 4);
    assert_eq!(verdict.p, 3);
    assert_eq!(verdict.residue, 1);
    assert!(verdict.pass);

    for (p, m) in [(2u64, 2u64), (3, 2), (5, 1)] {
        let (w, a) = build_zp_circle(p, m).unwrap();
        let tower = SubdivisionTower::build(w.complex().clone(), 0);
        let f = hopftrace::simplicial_map::SimplicialMap::identity(w.complex().clone());
        let verdict = verify_degree_mod_p(&f, &w, &tower, &a, &a).unwrap();
        assert_eq!(verdict.degree, 1, "identity on the Z_{p} circle");
        assert_eq!(verdict.oracle_degree, 1);
        assert!(verdict.pass);
    }
    println!("criterion 05 (degree theorem: mod-6 example = 4 ≡ 1 (mod 3), identities = 1): PASS");
}

/// Criterion 6: the five-step join field on (S^0,S^0), (S^0,C_6), (C_6,C_6)
/// is a gradient field with exactly two critical cells of dimensions
/// {0, m+n+1}; the S^0 * S^0 stage matches the hand-derived 4-pair field.
#[test]
fn criterion_06_join_construction() {
    let s0 = zero_sphere_witness().unwrap();
    let c6 = hopftrace::collapse::circle_witness(6).unwrap();

    let cases = [
        (
            "S0 * S0",
            gvf_join(&s0, &zero_sphere_witness().unwrap()).unwrap(),
        ),
        ("S0 * C6", gvf_join(&s0, &c6).unwrap()),
        (
            "C6 * C6",
            gvf_join(&c6, &hopftrace::collapse::circle_witness(6).unwrap()).unwrap(),
        ),
    ];
    for (name, (joined, _, w)) in &cases {
        // witness construction re-verifies is_gradient and the census
        let m_plus_n_plus_1 = w.top_cell().dim();
        assert_eq!(joined.dim(), m_plus_n_plus_1, "{name}");
        assert_eq!(w.base_vertex().dim(), 0, "{name}");
        assert_eq!(w.dvf().critical_simplices().len(), 2, "{name}");
    }
    assert_eq!(cases[0].1 .2.dim(), 1);
    assert_eq!(cases[1].1 .2.dim(), 2);
    assert_eq!(cases[2].1 .2.dim(), 3);

    // the hand-derived field on the square
    let (_, _, sq) = gvf_join(&s0, &zero_sphere_witness().unwrap()).unwrap();
    let pairs: Vec<(Simplex, Simplex)> = sq
        .dvf()
        .pairs()
        .map(|(a, b)| (a.clone(), b.clone()))
        .collect();
    assert_eq!(
        pairs,
        vec![
            (Simplex::empty(), s(&[2])),
            (s(&[0]), s(&[0, 2])),
            (s(&[1]), s(&[1, 2])),
            (s(&[3]), s(&[0, 3])),
        ]
    );
    assert_eq!(sq.base_vertex(), &s(&[2]));
    assert_eq!(sq.top_cell(), &s(&[1, 3]));
    println!("criterion 06 (five-step join fields, octahedron stage hand-checked): PASS");
}

/// Criterion 7: 200 random simplicial maps out of cone(C_6) and 200 out of
/// cone(octahedron) all annihilate the fundamental cycle.
#[test]
fn criterion_07_cone_lemma() {
    let mut r = rng(0xC0DE);
    let mut total = 0usize;
    for w in [
        hopftrace::collapse::circle_witness(6).unwrap(),
        octahedron_witness().unwrap(),
    ] {
        let apex = fresh_vertex(w.complex());
        let coned = cone(apex, w.complex()).unwrap();
        let maps = generate::random_cone_maps(&mut r, &coned, w.complex(), 200, 12);
        assert_eq!(maps.len(), 200);
        for f in &maps {
            assert!(
                hopftrace::sphere::cone_lemma_check(f, &w).unwrap(),
                "map {:?} does not annihilate the fundamental cycle",
                f.vertex_map()
            );
            total += 1;
        }
    }
    assert_eq!(total, 400);
    println!("criterion 07 (cone lemma, 400/400 random cone maps annihilate): PASS");
}

/// Criterion 8: cycles on sphere witnesses have unit-magnitude-ratio top
/// coefficients, the orientation solver finds exactly {ξ, -ξ}, and degree
/// is invariant under the orientation swap.
#[test]
fn criterion_08_orientation_suite() {
    let mut r = rng(0x0A1E);
    for (name, w) in sphere_fixture_set().unwrap() {
        let k = w.complex().clone();
        let d = w.dim();
        let fundamental = orientation_from_witness(&w)
            .unwrap()
            .fundamental_cycle(&k)
            .unwrap();

        // generated d-cycles: integer multiples of chain-map images of the
        // fundamental cycle, plus the critical chain itself
        let mut cycles: Vec<Chain> = vec![w.top_critical_chain().unwrap()];
        for _ in 0..10 {
            use rand::Rng;
            let phi = ChainMap::induced(&random_self_map(&mut r, &k)).unwrap();
            let scale: i64 = r.gen_range(-4..=4);
            let image = phi.apply(&fundamental).unwrap().scaled(scale).unwrap();
            cycles.push(image);
        }
        for cycle in &cycles {
            assert!(cycle.boundary(&k).unwrap().is_zero(), "{name}: not a cycle");
            let magnitudes: Vec<u64> = k
                .simplices(d)
                .iter()
                .map(|t| cycle.coefficient(t).unsigned_abs())
                .collect();
            let first = magnitudes[0];
            assert!(
                magnitudes.iter().all(|&m| m == first),
                "{name}: top coefficients differ in magnitude: {magnitudes:?}"
            );
        }

        // the solver's pair, cross-checked against the witness orientation
        let (xi, neg) = orientation_pair(&k).unwrap();
        assert_eq!(neg, xi.negated());
        let from_witness = orientation_from_witness(&w).unwrap();
        assert!(from_witness == xi || from_witness == neg, "{name}");
        for o in [&xi, &neg] {
            assert!(o
                .fundamental_cycle(&k)
                .unwrap()
                .boundary(&k)
                .unwrap()
                .is_zero());
        }
        // exhaustive check on small fixtures: no third orientation exists
        let tops = k.simplices(d).len();
        if tops <= 12 {
            let mut found = 0usize;
            for mask in 0..(1u64 << tops) {
                let signs: Vec<i64> = (0..tops)
                    .map(|i| if mask & (1 << i) != 0 { 1 } else { -1 })
                    .collect();
                let c =
                    Chain::from_terms(d, k.simplices(d).iter().cloned().zip(signs.iter().copied()))
                        .unwrap();
                if c.boundary(&k).unwrap().is_zero() {
                    found += 1;
                    assert!(signs == xi.signs() || signs == neg.signs(), "{name}");
                }
            }
            assert_eq!(found, 2, "{name}: expected exactly two orientations");
        }

        // degree is orientation-independent
        let phi = ChainMap::induced(&random_self_map(&mut r, &k)).unwrap();
        let d1 = degree_with_orientation(&phi, &k, &xi).unwrap();
        let d2 = degree_with_orientation(&phi, &k, &neg).unwrap();
        assert_eq!(d1, d2, "{name}");
    }
    println!("criterion 08 (orientation suite over the sphere fixture set): PASS");
}

/// Criterion 9: dynamic programming equals brute-force trajectory
/// enumeration for every critical simplex on every fixture small enough to
/// enumerate.
#[test]
fn criterion_09_dp_vs_enumeration() {
    let mut fields: Vec<(String, hopftrace::dvf::DiscreteVectorField)> = Vec::new();
    for n in [3u64, 4, 5, 6, 8, 12] {
        let w = hopftrace::collapse::circle_witness(n).unwrap();
        fields.push((format!("circle C_{n}"), w.dvf().clone()));
    }
    for n in 2..=4 {
        let w = skeleton_sphere_witness(n).unwrap();
        fields.push((format!("boundary of the {n}-simplex"), w.dvf().clone()));
    }
    fields.push((
        "octahedron".into(),
        octahedron_witness().unwrap().dvf().clone(),
    ));
    let mut r = rng(0x09);
    for i in 0..10 {
        let k = random_complex(&mut r, 3, 120);
        let v = random_gradient_field(&mut r, &k);
        fields.push((format!("random fixture {i}"), v));
    }

    for (name, v) in &fields {
        assert!(
            v.complex().len() <= 200,
            "{name} exceeds the enumeration fixture bound"
        );
        let cert = v.require_gradient().unwrap();
        for sigma in v.critical_simplices() {
            let dp = critical_chain(v, &cert, &sigma).unwrap();
            let brute = chain_from_enumeration(v, &sigma, Direction::Down, 5_000_000).unwrap();
            assert_eq!(dp, brute, "{name}: critical chain of {sigma}");
            let dp_co = co_critical_chain(v, &cert, &sigma).unwrap();
            let brute_co = chain_from_enumeration(v, &sigma, Direction::Up, 5_000_000).unwrap();
            assert_eq!(dp_co, brute_co, "{name}: co-critical chain of {sigma}");
        }
    }
    println!(
        "criterion 09 (DP equals trajectory enumeration on {} fixtures): PASS",
        fields.len()
    );
}

/// Criterion 10: every constructed free Z_p sphere with p > 2 has odd
/// dimension, exhaustively over the constructor fixture set.
#[test]
fn criterion_10_odd_dimension_gate() {
    let mut cases = Vec::new();
    for (p, m) in [(2u64, 2u64), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1)] {
        let (w, a) = build_zp_circle(p, m).unwrap();
        cases.push((format!("Z_{p} circle C_{}", p * m), w, a));
    }
    // joins of Z_p circles carry the diagonal action
    for (p, m) in [(2u64, 2u64), (3, 1), (3, 2), (5, 1)] {
        let (w1, a1) = build_zp_circle(p, m).unwrap();
        let (w2, a2) = build_zp_circle(p, m).unwrap();
        let (joined, emb, w) = gvf_join(&w1, &w2).unwrap();
        let action = a1.join(&a2, &joined, &emb).unwrap();
        cases.push((format!("Z_{p} join sphere of dim {}", w.dim()), w, action));
    }
    for (name, w, a) in &cases {
        assert!(
            odd_dimension_check(w, a),
            "{name}: p = {}, dim = {}",
            a.order(),
            w.dim()
        );
        if a.order() > 2 {
            assert_eq!(w.dim() % 2, 1, "{name}");
        }
    }
    println!(
        "criterion 10 (odd-dimension gate over {} constructed actions): PASS",
        cases.len()
    );
}

//! Greedy collapses and constructive gradient-field builders: the
//! skeleton-minus-facet field, cone transfer, the five-step join field, and
//! witness transfer across barycentric subdivision.

use std::collections::{BTreeMap, BTreeSet};

use crate::complex::{join, ComplexHandle, JoinEmbedding, SimplicialComplex};
use crate::dvf::DiscreteVectorField;
use crate::error::{Error, Result};
use crate::simplex::{Simplex, Vertex};
use crate::sphere::SphereWitness;
use crate::subdivision::{barycentric_subdivision, BdMap};

/// Total search states a backtracking collapse may visit before giving up.
const COLLAPSE_NODE_BUDGET: usize = 200_000;

/// A stuck greedy collapse, with the remaining simplices as a partial state
/// dump.
#[derive(Clone, Debug)]
pub struct CollapseStuck {
    pub remaining: Vec<Simplex>,
    pub explored: usize,
}

impl std::fmt::Display for CollapseStuck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "no free face among {} remaining simplices after exploring {} states; stuck on",
            self.remaining.len(),
            self.explored
        )?;
        for s in self.remaining.iter().take(16) {
            write!(f, " {s}")?;
        }
        if self.remaining.len() > 16 {
            write!(f, " … ({} more)", self.remaining.len() - 16)?;
        }
        Ok(())
    }
}

/// Collapses `k` onto the subcomplex `keep` by repeatedly pairing a free
/// face (a simplex outside `keep` with exactly one cofacet remaining) with
/// that cofacet, smallest free face first in canonical order.
///
/// `keep` lists the non-empty simplices to retain; an empty `keep` asks for
/// full collapsibility, and the final lone vertex is then paired with `∅`.
/// `backtrack_depth` bounds how many non-greedy choices the search may make;
/// failure is returned as a value, never silently.
pub fn greedy_collapse(
    k: &ComplexHandle,
    keep: &BTreeSet<Simplex>,
    backtrack_depth: usize,
) -> std::result::Result<DiscreteVectorField, CollapseStuck> {
    for s in keep {
        assert!(k.contains(s), "keep must be a subcomplex of the complex");
        for f in s.nonempty_faces() {
            assert!(f == *s || keep.contains(&f), "keep must be downward closed");
        }
    }
    let remaining: BTreeSet<Simplex> = k.iter().cloned().collect();
    let mut explored = 0usize;
    let mut pairs: Vec<(Simplex, Simplex)> = Vec::new();
    let found = collapse_search(
        k,
        remaining.clone(),
        keep,
        backtrack_depth,
        &mut explored,
        &mut pairs,
    );
    match found {
        Some(pairs) => Ok(DiscreteVectorField::new(k.clone(), pairs)
            .expect("collapse pairs form a matching of facets")),
        None => {
            // rerun greedily to report the stuck frontier
            let mut state = remaining;
            loop {
                let free = free_faces(k, &state, keep);
                match free.first() {
                    Some((gamma, delta)) => {
                        state.remove(gamma);
                        state.remove(delta);
                    }
                    None => break,
                }
            }
            Err(CollapseStuck {
                remaining: state.into_iter().collect(),
                explored,
            })
        }
    }
}

/// Free faces of the current state, paired with their unique cofacet, in
/// canonical order.
fn free_faces(
    k: &ComplexHandle,
    remaining: &BTreeSet<Simplex>,
    keep: &BTreeSet<Simplex>,
) -> Vec<(Simplex, Simplex)> {
    let mut out = Vec::new();
    for gamma in remaining {
        if keep.contains(gamma) {
            continue;
        }
        let mut cofacets = k.cofacets(gamma).iter().filter(|c| remaining.contains(*c));
        if let (Some(delta), None) = (cofacets.next(), cofacets.next()) {
            out.push((gamma.clone(), delta.clone()));
        }
    }
    out
}

fn collapse_search(
    k: &ComplexHandle,
    remaining: BTreeSet<Simplex>,
    keep: &BTreeSet<Simplex>,
    budget: usize,
    explored: &mut usize,
    pairs: &mut Vec<(Simplex, Simplex)>,
) -> Option<Vec<(Simplex, Simplex)>> {
    let start_len = pairs.len();
    let found = collapse_search_inner(k, remaining, keep, budget, explored, pairs);
    if found.is_none() {
        pairs.truncate(start_len);
    }
    found
}

fn collapse_search_inner(
    k: &ComplexHandle,
    mut remaining: BTreeSet<Simplex>,
    keep: &BTreeSet<Simplex>,
    budget: usize,
    explored: &mut usize,
    pairs: &mut Vec<(Simplex, Simplex)>,
) -> Option<Vec<(Simplex, Simplex)>> {
    loop {
        *explored += 1;
        if *explored > COLLAPSE_NODE_BUDGET {
            return None;
        }
        let free = free_faces(k, &remaining, keep);
        if free.is_empty() {
            return finishing_pairs(&remaining, keep, pairs);
        }
        if budget == 0 || free.len() == 1 {
            // pure greedy step, no choice point retained
            let (gamma, delta) = free.into_iter().next().unwrap();
            remaining.remove(&gamma);
            remaining.remove(&delta);
            pairs.push((gamma, delta));
            continue;
        }
        // branch: the greedy choice is free, each alternative costs one
        // deviation from the budget
        for (idx, (gamma, delta)) in free.into_iter().enumerate() {
            let mut next_remaining = remaining.clone();
            next_remaining.remove(&gamma);
            next_remaining.remove(&delta);
            pairs.push((gamma, delta));
            let next_budget = if idx > 0 { budget - 1 } else { budget };
            if let Some(found) =
                collapse_search(k, next_remaining, keep, next_budget, explored, pairs)
            {
                return Some(found);
            }
            pairs.pop();
        }
        return None;
    }
}

/// Accept the final state: exactly `keep` remains, or, when collapsing to a
/// point, a single vertex that gets paired with `∅`.
fn finishing_pairs(
    remaining: &BTreeSet<Simplex>,
    keep: &BTreeSet<Simplex>,
    pairs: &[(Simplex, Simplex)],
) -> Option<Vec<(Simplex, Simplex)>> {
    if remaining == keep {
        return Some(pairs.to_vec());
    }
    if keep.is_empty() && remaining.len() == 1 {
        let last = remaining.iter().next().unwrap();
        if last.dim() == 0 {
            let mut out = pairs.to_vec();
            out.push((Simplex::empty(), last.clone()));
            return Some(out);
        }
    }
    None
}

/// The complex with one maximal simplex removed.
pub fn complex_minus_top(k: &ComplexHandle, top: &Simplex) -> Result<ComplexHandle> {
    if !k.contains(top) || !k.cofacets(top).is_empty() {
        return Err(Error::Domain(format!(
            "{top} is not a maximal simplex of the complex"
        )));
    }
    Ok(SimplicialComplex::from_simplices(
        k.iter().filter(|s| *s != top).cloned(),
    ))
}

/// `Δ^n_{n-1}` minus the facet `{0,…,n-1}`, with the collapsing field
/// `α ↦ α ∪ {n}` (for non-empty `α` not containing `n`); the single
/// critical simplex is the vertex `{n}`.
pub fn gvf_skeleton_minus_facet(n: i64) -> Result<(ComplexHandle, DiscreteVectorField)> {
    if n < 1 {
        return Err(Error::domain("skeleton-minus-facet needs n >= 1"));
    }
    let sphere = crate::complex::skeleton_of_simplex(n, n - 1)?;
    let facet = Simplex::from_ids(0..n as u64);
    let complex = complex_minus_top(&sphere, &facet)?;
    let field = apex_pairing_field(&complex, Vertex(n as u64), false)?;
    Ok((complex, field))
}

/// The boundary of the n-simplex as a certified sphere: the
/// skeleton-minus-facet field plus the removed facet left critical.
pub fn skeleton_sphere_witness(n: i64) -> Result<SphereWitness> {
    if n < 1 {
        return Err(Error::domain("sphere skeleton needs n >= 1"));
    }
    let sphere = crate::complex::skeleton_of_simplex(n, n - 1)?;
    let field = apex_pairing_field(&sphere, Vertex(n as u64), false)?;
    SphereWitness::new(field)
}

/// Pairs every simplex not containing `apex` with its apex extension.
/// With `include_empty`, also pairs `(∅, {apex})`.
fn apex_pairing_field(
    k: &ComplexHandle,
    apex: Vertex,
    include_empty: bool,
) -> Result<DiscreteVectorField> {
    let mut pairs = Vec::new();
    if include_empty {
        pairs.push((Simplex::empty(), Simplex::vertex(apex)));
    }
    for alpha in k.iter() {
        if alpha.contains_vertex(apex) {
            continue;
        }
        if let Some(beta) = alpha.with_vertex(apex) {
            if k.contains(&beta) {
                pairs.push((alpha.clone(), beta));
            }
        }
    }
    DiscreteVectorField::new(k.clone(), pairs)
        .map_err(|v| Error::Domain(format!("apex pairing is not a matching: {v}")))
}

/// The canonical full-collapse field on a cone `x*K`: every simplex of `K`
/// (and `∅`) is paired with its apex extension; the apex vertex is the
/// only critical cell.
pub fn cone_collapse_field(coned: &ComplexHandle, apex: Vertex) -> Result<DiscreteVectorField> {
    apex_pairing_field(coned, apex, true)
}

/// Transfers a collapsibility witness on `K` to the cone `x*K`: the field
/// `{(σ ∪ {x}, τ ∪ {x}) : (σ, τ) ∈ V}` collapses `x*K` into `K`.
///
/// The input must have a single critical simplex, a vertex; when that vertex
/// is unmatched rather than paired with `∅`, the pair is added internally so
/// the apex copy `({x}, {x, v})` exists.
pub fn gvf_cone_transfer(
    v_on_k: &DiscreteVectorField,
    apex: Vertex,
) -> Result<(ComplexHandle, DiscreteVectorField)> {
    let k = v_on_k.complex();
    let crit = v_on_k.critical_simplices();
    if crit.len() != 1 || crit[0].dim() != 0 {
        return Err(Error::domain(
            "cone transfer requires a collapsibility witness (a single critical vertex)",
        ));
    }
    v_on_k.require_gradient()?;
    let coned = crate::complex::cone(apex, k)?;
    let mut pairs: Vec<(Simplex, Simplex)> = v_on_k
        .pairs()
        .map(|(a, b)| {
            (
                a.with_vertex(apex).expect("apex fresh"),
                b.with_vertex(apex).expect("apex fresh"),
            )
        })
        .collect();
    if v_on_k.vertex_paired_with_empty().is_none() {
        // normalize: treat the unmatched critical vertex as paired with ∅
        pairs.push((
            Simplex::vertex(apex),
            crit[0].with_vertex(apex).expect("apex fresh"),
        ));
    }
    let field = DiscreteVectorField::new(coned.clone(), pairs)
        .map_err(|v| Error::Domain(format!("transferred pairs are not a matching: {v}")))?;
    Ok((coned, field))
}

/// The join of two certified spheres with the five-step gradient field:
/// step 1 pairs `σ⊔∅` with `σ⊔d_0`; step 2 runs `V_D` on `∅⊔D`; step 3
/// runs `V_C` against every `τ ∉ {∅, d_0}`; step 4 runs `V_D` over the two
/// critical cells of `C`; step 5 pairs `∅⊔d_n` with `c_0⊔d_n`. Exactly
/// `c_m⊔d_n` and `∅⊔d_0` stay critical.
pub fn gvf_join(
    c: &SphereWitness,
    d: &SphereWitness,
) -> Result<(ComplexHandle, JoinEmbedding, SphereWitness)> {
    let (joined, emb) = join(c.complex(), d.complex());
    let c0 = c.base_vertex();
    let cm = c.top_cell();
    let d0 = d.base_vertex();
    let dn = d.top_cell();

    let mut pairs: Vec<(Simplex, Simplex)> = Vec::new();
    let empty = Simplex::empty();

    // Step 1: (σ⊔∅, σ⊔d_0) for every σ in C, including σ = ∅
    pairs.push((empty.clone(), emb.join_simplex(&empty, d0)));
    for sigma in c.complex().iter() {
        pairs.push((emb.join_simplex(sigma, &empty), emb.join_simplex(sigma, d0)));
    }
    // Step 2: (∅⊔τ, ∅⊔V_D(τ)) for upward-matched τ ≠ ∅
    for (tau, v_tau) in d.dvf().pairs() {
        if tau.is_empty() {
            continue;
        }
        pairs.push((
            emb.join_simplex(&empty, tau),
            emb.join_simplex(&empty, v_tau),
        ));
    }
    // Step 3: (σ⊔τ, V_C(σ)⊔τ) for upward-matched σ ≠ ∅ and τ ∉ {∅, d_0}
    for (sigma, v_sigma) in c.dvf().pairs() {
        if sigma.is_empty() {
            continue;
        }
        for tau in d.complex().iter() {
            if tau == d0 {
                continue;
            }
            pairs.push((emb.join_simplex(sigma, tau), emb.join_simplex(v_sigma, tau)));
        }
    }
    // Step 4: (σ⊔τ, σ⊔V_D(τ)) for σ critical in C, upward-matched τ ≠ ∅
    for sigma in [c0, cm] {
        for (tau, v_tau) in d.dvf().pairs() {
            if tau.is_empty() {
                continue;
            }
            pairs.push((emb.join_simplex(sigma, tau), emb.join_simplex(sigma, v_tau)));
        }
    }
    // Step 5: (∅⊔d_n, c_0⊔d_n)
    pairs.push((emb.join_simplex(&empty, dn), emb.join_simplex(c0, dn)));

    let field = DiscreteVectorField::new(joined.clone(), pairs)
        .map_err(|v| Error::Integrity(format!("join field is not a matching: {v}")))?;
    let witness = SphereWitness::new(field)?;
    Ok((joined, emb, witness))
}

/// Transfers a sphere witness across one barycentric subdivision: removes a
/// top flag through the barycenter of the old top cell, collapses the rest
/// greedily, and leaves that flag critical.
pub fn sphere_witness_bd(
    s: &SphereWitness,
    backtrack_depth: usize,
) -> Result<(ComplexHandle, BdMap, SphereWitness)> {
    let (bd, map) = barycentric_subdivision(s.complex());
    let v_top = map
        .vertex_of(s.top_cell())
        .ok_or_else(|| Error::integrity("companion map lacks the top-cell barycenter"))?;
    let d = bd.dim();
    let candidates: Vec<Simplex> = bd
        .simplices(d)
        .iter()
        .filter(|t| t.contains_vertex(v_top))
        .cloned()
        .collect();
    let mut last_failure: Option<CollapseStuck> = None;
    for tau in candidates {
        let without = complex_minus_top(&bd, &tau)?;
        match greedy_collapse(&without, &BTreeSet::new(), backtrack_depth) {
            Ok(collapse) => {
                let pairs: Vec<(Simplex, Simplex)> = collapse
                    .pairs()
                    .map(|(a, b)| (a.clone(), b.clone()))
                    .collect();
                let field = DiscreteVectorField::new(bd.clone(), pairs)
                    .map_err(|v| Error::Integrity(format!("collapse field invalid on Bd: {v}")))?;
                let witness = SphereWitness::new(field)?;
                return Ok((bd, map, witness));
            }
            Err(stuck) => last_failure = Some(stuck),
        }
    }
    Err(Error::CollapseFailed(format!(
        "no top simplex through the barycenter {v_top} admits a greedy collapse (budget {backtrack_depth}); last: {}",
        last_failure.map(|s| s.to_string()).unwrap_or_else(|| "no candidates".into())
    )))
}

/// Derives a sphere witness for a pseudomanifold from scratch: tries each
/// maximal simplex in canonical order, collapsing the complement.
pub fn derive_sphere_witness(k: &ComplexHandle, backtrack_depth: usize) -> Result<SphereWitness> {
    if let Err(failure) = crate::complex::is_pseudomanifold(k) {
        return Err(Error::Domain(format!("not a pseudomanifold: {failure:?}")));
    }
    let d = k.dim();
    let mut last_failure: Option<CollapseStuck> = None;
    for tau in k.simplices(d) {
        let without = complex_minus_top(k, tau)?;
        match greedy_collapse(&without, &BTreeSet::new(), backtrack_depth) {
            Ok(collapse) => {
                let pairs: Vec<(Simplex, Simplex)> = collapse
                    .pairs()
                    .map(|(a, b)| (a.clone(), b.clone()))
                    .collect();
                let field = DiscreteVectorField::new(k.clone(), pairs)
                    .map_err(|v| Error::Integrity(format!("collapse field invalid: {v}")))?;
                return SphereWitness::new(field);
            }
            Err(stuck) => last_failure = Some(stuck),
        }
    }
    Err(Error::CollapseFailed(format!(
        "no maximal simplex admits a greedy collapse of the complement (budget {backtrack_depth}); last: {}",
        last_failure.map(|s| s.to_string()).unwrap_or_else(|| "no candidates".into())
    )))
}

/// The circle `C_n` with the standard two-critical field: vertex `0` and a
/// far edge `[m, m+1]` critical, all other vertices paired along the two
/// arcs running away from the critical edge.
pub fn circle_witness(n: u64) -> Result<SphereWitness> {
    let k = crate::complex::cycle_complex(n)?;
    let m = n / 2 - 1;
    let mut pairs = Vec::new();
    for i in 1..=m {
        // left arc: vertex i pairs with the edge toward 0
        pairs.push((Simplex::from_ids([i]), Simplex::from_ids([i - 1, i])));
    }
    for i in m + 1..n {
        // right arc: vertex i pairs with the edge away from 0
        pairs.push((Simplex::from_ids([i]), Simplex::from_ids([i, (i + 1) % n])));
    }
    let field = DiscreteVectorField::new(k, pairs)
        .map_err(|v| Error::Integrity(format!("circle field is not a matching: {v}")))?;
    SphereWitness::new(field)
}

/// Restricts a collapsibility field and adds the union with another field;
/// used to compose cone transfer with an inner collapse.
pub fn union_fields(
    complex: ComplexHandle,
    a: &DiscreteVectorField,
    b: &DiscreteVectorField,
) -> Result<DiscreteVectorField> {
    let pairs: Vec<(Simplex, Simplex)> = a
        .pairs()
        .chain(b.pairs())
        .map(|(x, y)| (x.clone(), y.clone()))
        .collect::<BTreeMap<_, _>>()
        .into_iter()
        .collect();
    DiscreteVectorField::new(complex, pairs)
        .map_err(|v| Error::Domain(format!("union is not a matching: {v}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::cycle_complex;

    fn s(ids: &[u64]) -> Simplex {
        Simplex::from_ids(ids.iter().copied())
    }

    #[test]
    fn full_triangle_collapses_to_point() {
        let k = SimplicialComplex::from_maximal(&[vec![0, 1, 2]]);
        let field = greedy_collapse(&k, &BTreeSet::new(), 0).unwrap();
        assert_eq!(field.len(), 4); // 3 free-face pairs + the final (∅, v)
        assert!(field.vertex_paired_with_empty().is_some());
        assert_eq!(field.critical_simplices().len(), 1);
        assert!(field.gradient_certificate().is_ok());
    }

    #[test]
    fn hollow_triangle_cannot_collapse() {
        let k = cycle_complex(3).unwrap();
        let stuck = greedy_collapse(&k, &BTreeSet::new(), 2).unwrap_err();
        assert_eq!(stuck.remaining.len(), 6);
    }

    #[test]
    fn path_collapses() {
        // Bd(C_6) minus one edge is a path
        let c6 = cycle_complex(6).unwrap();
        let (bd, _) = barycentric_subdivision(&c6);
        let top = bd.simplices(1)[0].clone();
        let path = complex_minus_top(&bd, &top).unwrap();
        let field = greedy_collapse(&path, &BTreeSet::new(), 0).unwrap();
        assert_eq!(field.critical_simplices().len(), 1);
    }

    #[test]
    fn collapse_onto_subcomplex() {
        // full triangle onto its boundary edge [0,1]
        let k = SimplicialComplex::from_maximal(&[vec![0, 1, 2]]);
        let keep: BTreeSet<Simplex> = [s(&[0]), s(&[1]), s(&[0, 1])].into_iter().collect();
        let field = greedy_collapse(&k, &keep, 0).unwrap();
        for kept in &keep {
            assert!(field.is_critical(kept));
        }
        assert_eq!(field.critical_simplices().len(), 3);
    }

    #[test]
    fn skeleton_minus_facet_examples() {
        let (c, field) = gvf_skeleton_minus_facet(2).unwrap();
        assert_eq!(c.counts(), vec![3, 2]);
        let pairs: Vec<_> = field.pairs().map(|(a, b)| (a.clone(), b.clone())).collect();
        assert_eq!(pairs, vec![(s(&[0]), s(&[0, 2])), (s(&[1]), s(&[1, 2]))]);
        assert_eq!(field.critical_simplices(), vec![s(&[2])]);

        let (c3, field3) = gvf_skeleton_minus_facet(3).unwrap();
        assert_eq!(c3.simplices(2).len(), 3);
        assert_eq!(field3.len(), 7 - 1); // 6 pairs: vertices {0,1,2}, edges {01,02,12} paired up
        assert_eq!(field3.critical_simplices(), vec![s(&[3])]);

        for n in 2..=5 {
            let (_, f) = gvf_skeleton_minus_facet(n).unwrap();
            assert!(f.gradient_certificate().is_ok(), "n = {n}");
        }
    }

    #[test]
    fn skeleton_sphere_witnesses() {
        for n in 2..=4 {
            let w = skeleton_sphere_witness(n).unwrap();
            assert_eq!(w.dim(), n - 1);
            assert_eq!(w.base_vertex(), &Simplex::from_ids([n as u64]));
            assert_eq!(w.top_cell(), &Simplex::from_ids(0..n as u64));
        }
        // n = 1: a 0-sphere; both critical cells are vertices
        let w = skeleton_sphere_witness(1).unwrap();
        assert_eq!(w.dim(), 0);
        assert_eq!(w.top_cell().dim(), 0);
    }

    #[test]
    fn cone_transfer_of_tiny_witness() {
        // K = {∅, {0}} with V = {(∅, {0})} transfers to {({x}, {x,0})}
        let k = SimplicialComplex::from_maximal(&[vec![0]]);
        let v = DiscreteVectorField::new(k, [(Simplex::empty(), s(&[0]))]).unwrap();
        let apex = Vertex(7);
        let (coned, w) = gvf_cone_transfer(&v, apex).unwrap();
        let pairs: Vec<_> = w.pairs().map(|(a, b)| (a.clone(), b.clone())).collect();
        assert_eq!(pairs, vec![(s(&[7]), s(&[0, 7]))]);
        // the unpaired simplices are exactly K
        assert_eq!(w.critical_simplices(), vec![s(&[0])]);
        assert!(w.gradient_certificate().is_ok());
        let _ = coned;
    }

    #[test]
    fn cone_transfer_of_skeleton_witness() {
        let (k, v) = gvf_skeleton_minus_facet(2).unwrap();
        let apex = crate::complex::fresh_vertex(&k);
        let (coned, w) = gvf_cone_transfer(&v, apex).unwrap();
        assert!(w.gradient_certificate().is_ok());
        // critical cells of the transfer = all simplices of K
        assert_eq!(w.critical_simplices().len(), k.len());
        // composing with K's own collapse yields full collapsibility
        let v_pairs: Vec<_> = v.pairs().map(|(a, b)| (a.clone(), b.clone())).collect();
        let mut v_on_cone = v_pairs;
        v_on_cone.push((Simplex::empty(), s(&[2])));
        let inner = DiscreteVectorField::new(coned.clone(), v_on_cone).unwrap();
        let full = union_fields(coned, &w, &inner).unwrap();
        assert!(full.gradient_certificate().is_ok());
        assert_eq!(full.critical_simplices(), vec![s(&[2])]);
    }

    #[test]
    fn join_of_zero_spheres_matches_hand_derivation() {
        let s0 = |a: u64, b: u64| {
            let k = SimplicialComplex::from_maximal(&[vec![a], vec![b]]);
            let v = DiscreteVectorField::new(k, [(Simplex::empty(), s(&[a]))]).unwrap();
            SphereWitness::new(v).unwrap()
        };
        let c = s0(0, 1);
        let d = s0(0, 1);
        let (joined, emb, w) = gvf_join(&c, &d).unwrap();
        assert_eq!(joined.counts(), vec![4, 4]);
        // embedding: left {0,1} -> {0,1}, right {0,1} -> {2,3}
        let a = emb.left[&Vertex(0)].0;
        let b = emb.left[&Vertex(1)].0;
        let cc = emb.right[&Vertex(0)].0;
        let dd = emb.right[&Vertex(1)].0;
        assert_eq!((a, b, cc, dd), (0, 1, 2, 3));
        let pairs: Vec<_> = w
            .dvf()
            .pairs()
            .map(|(x, y)| (x.clone(), y.clone()))
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
        assert_eq!(w.base_vertex(), &s(&[2]));
        assert_eq!(w.top_cell(), &s(&[1, 3]));
    }

    #[test]
    fn octahedron_join_is_gradient_with_two_critical() {
        let s0 = |a: u64, b: u64| {
            let k = SimplicialComplex::from_maximal(&[vec![a], vec![b]]);
            let v = DiscreteVectorField::new(k, [(Simplex::empty(), s(&[a]))]).unwrap();
            SphereWitness::new(v).unwrap()
        };
        let (_, _, square) = gvf_join(&s0(0, 1), &s0(0, 1)).unwrap();
        let (oct, _, w) = gvf_join(&square, &s0(0, 1)).unwrap();
        assert_eq!(oct.counts(), vec![6, 12, 8]);
        assert_eq!(w.dim(), 2);
        assert_eq!(w.top_cell().dim(), 2);
        assert_eq!(w.base_vertex().dim(), 0);
    }

    #[test]
    fn join_dimension_is_sum_plus_one() {
        let c6 = circle_witness(6).unwrap();
        let (_, _, w) = gvf_join(&c6, &c6).unwrap();
        assert_eq!(w.dim(), 3);
        assert_eq!(w.top_cell().dim(), 3);
    }

    #[test]
    fn circle_witness_matches_figure_field() {
        let w = circle_witness(6).unwrap();
        let pairs: Vec<_> = w
            .dvf()
            .pairs()
            .map(|(a, b)| (a.clone(), b.clone()))
            .collect();
        assert_eq!(
            pairs,
            vec![
                (s(&[1]), s(&[0, 1])),
                (s(&[2]), s(&[1, 2])),
                (s(&[3]), s(&[3, 4])),
                (s(&[4]), s(&[4, 5])),
                (s(&[5]), s(&[0, 5])),
            ]
        );
        assert_eq!(w.base_vertex(), &s(&[0]));
        assert_eq!(w.top_cell(), &s(&[2, 3]));
    }

    #[test]
    fn bd_transfer_on_circle() {
        let w = circle_witness(6).unwrap();
        let (bd, _, wbd) = sphere_witness_bd(&w, 0).unwrap();
        assert_eq!(bd.counts(), vec![12, 12]);
        assert_eq!(wbd.dim(), 1);
        assert_eq!(wbd.top_cell().dim(), 1);
        // Euler characteristic of a 1-sphere
        assert_eq!(bd.euler_characteristic(), 0);
    }

    #[test]
    fn derive_witness_on_tetra_boundary() {
        let k = crate::complex::skeleton_of_simplex(3, 2).unwrap();
        let w = derive_sphere_witness(&k, 0).unwrap();
        assert_eq!(w.dim(), 2);
    }
}

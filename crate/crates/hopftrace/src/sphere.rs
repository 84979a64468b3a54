//! Combinatorial spheres: certified witnesses, orientations, fundamental
//! cycles, and degrees of chain maps and simplicial maps.
//!
//! A sphere witness is a pseudomanifold together with a gradient vector
//! field having exactly two critical simplices, one top-dimensional and one
//! a vertex. Orientations come in exactly two flavors `{ξ, -ξ}`; every
//! top-dimensional cycle is an integer multiple of the fundamental cycle,
//! which is what makes the degree a well-defined integer.

use std::collections::HashMap;

use crate::chain::Chain;
use crate::chain_map::{subdivision_chain_map, ChainMap};
use crate::complex::{is_pseudomanifold, ComplexHandle};
use crate::dvf::{DiscreteVectorField, GradientCertificate};
use crate::error::{Error, Result};
use crate::morse::{co_critical_chain, critical_chain};
use crate::simplex::Simplex;
use crate::simplicial_map::SimplicialMap;
use crate::subdivision::SubdivisionTower;

/// A certified combinatorial sphere: pseudomanifold + gradient field with
/// exactly two critical cells, the top cell and the base vertex.
#[derive(Clone, Debug)]
pub struct SphereWitness {
    complex: ComplexHandle,
    dvf: DiscreteVectorField,
    cert: GradientCertificate,
    top_cell: Simplex,
    base_vertex: Simplex,
}

impl SphereWitness {
    /// Validates the witness conditions and designates the two critical
    /// cells. For 0-spheres (both critical cells are vertices) the base is
    /// the vertex paired with `∅` when present, else the smaller vertex.
    pub fn new(dvf: DiscreteVectorField) -> Result<Self> {
        let complex = dvf.complex().clone();
        if let Err(failure) = is_pseudomanifold(&complex) {
            return Err(Error::Domain(format!(
                "complex is not a pseudomanifold: {failure:?}"
            )));
        }
        let cert = dvf.require_gradient()?;
        let d = complex.dim();
        let crit = dvf.critical_simplices();
        if crit.len() != 2 {
            return Err(Error::Domain(format!(
                "expected exactly 2 critical simplices, found {}",
                crit.len()
            )));
        }
        let (base_vertex, top_cell) = if d == 0 {
            match dvf.vertex_paired_with_empty() {
                Some(v) => {
                    let other = crit.iter().find(|s| *s != v).expect("two critical cells");
                    (v.clone(), other.clone())
                }
                None => (crit[0].clone(), crit[1].clone()),
            }
        } else {
            let base = crit.iter().find(|s| s.dim() == 0);
            let top = crit.iter().find(|s| s.dim() == d);
            match (base, top) {
                (Some(b), Some(t)) => (b.clone(), t.clone()),
                _ => {
                    return Err(Error::Domain(format!(
                        "critical cells must have dimensions 0 and {d}, got {:?}",
                        crit.iter().map(|s| s.dim()).collect::<Vec<_>>()
                    )))
                }
            }
        };
        let witness = SphereWitness {
            complex,
            dvf,
            cert,
            top_cell,
            base_vertex,
        };
        // ∂(top→) must vanish on a genuine sphere witness
        let fwd = witness.top_critical_chain()?;
        if !fwd.boundary(witness.complex())?.is_zero() {
            return Err(Error::integrity(
                "boundary of the top critical chain is nonzero; not a sphere witness",
            ));
        }
        Ok(witness)
    }

    pub fn complex(&self) -> &ComplexHandle {
        &self.complex
    }

    pub fn dvf(&self) -> &DiscreteVectorField {
        &self.dvf
    }

    pub fn certificate(&self) -> &GradientCertificate {
        &self.cert
    }

    pub fn dim(&self) -> i64 {
        self.complex.dim()
    }

    pub fn top_cell(&self) -> &Simplex {
        &self.top_cell
    }

    pub fn base_vertex(&self) -> &Simplex {
        &self.base_vertex
    }

    /// The critical chain of the top cell.
    pub fn top_critical_chain(&self) -> Result<Chain> {
        critical_chain(&self.dvf, &self.cert, &self.top_cell)
    }

    /// The co-critical chain of the base vertex (all-ones on vertices).
    pub fn base_co_critical_chain(&self) -> Result<Chain> {
        co_critical_chain(&self.dvf, &self.cert, &self.base_vertex)
    }
}

/// Per-top-simplex signs `ξ_i ∈ {±1}` (canonical d-simplex order) whose
/// weighted sum of top cells is a cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationVector {
    dim: i64,
    signs: Vec<i64>,
}

impl OrientationVector {
    pub fn dim(&self) -> i64 {
        self.dim
    }

    pub fn signs(&self) -> &[i64] {
        &self.signs
    }

    pub fn sign_of(&self, k: &ComplexHandle, sigma: &Simplex) -> Result<i64> {
        let i = k
            .position(sigma)
            .filter(|_| sigma.dim() == self.dim)
            .ok_or_else(|| Error::Domain(format!("{sigma} is not a top simplex")))?;
        Ok(self.signs[i])
    }

    pub fn negated(&self) -> OrientationVector {
        OrientationVector {
            dim: self.dim,
            signs: self.signs.iter().map(|s| -s).collect(),
        }
    }

    /// The fundamental cycle `Σ ξ_i σ_i`.
    pub fn fundamental_cycle(&self, k: &ComplexHandle) -> Result<Chain> {
        Chain::from_terms(
            self.dim,
            k.simplices(self.dim)
                .iter()
                .cloned()
                .zip(self.signs.iter().copied()),
        )
    }
}

/// Extracts the orientation from a witness: `ξ_i` is the coefficient of
/// `σ_i` in the top critical chain. Any coefficient off `±1` is an
/// integrity error (the witness is broken).
pub fn orientation_from_witness(w: &SphereWitness) -> Result<OrientationVector> {
    let chain = w.top_critical_chain()?;
    let d = w.dim();
    let tops = w.complex().simplices(d);
    let mut signs = Vec::with_capacity(tops.len());
    for sigma in tops {
        let x = chain.coefficient(sigma);
        if x != 1 && x != -1 {
            return Err(Error::Integrity(format!(
                "top critical chain has coefficient {x} on {sigma}; expected ±1"
            )));
        }
        signs.push(x);
    }
    Ok(OrientationVector { dim: d, signs })
}

/// Solves for an orientation on a pseudomanifold by sign propagation across
/// shared facets; returns the pair `{ξ, -ξ}`. Fails with the inconsistent
/// facet when the pseudomanifold is non-orientable.
pub fn orientation_pair(k: &ComplexHandle) -> Result<(OrientationVector, OrientationVector)> {
    if let Err(failure) = is_pseudomanifold(k) {
        return Err(Error::Domain(format!("not a pseudomanifold: {failure:?}")));
    }
    let d = k.dim();
    let tops = k.simplices(d);
    let index: HashMap<&Simplex, usize> = tops.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut signs = vec![0i64; tops.len()];
    signs[0] = 1;
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for tau in tops[i].facets() {
            for nb in k.cofacets(&tau) {
                let j = index[nb];
                if j == i {
                    continue;
                }
                // cancellation across the shared facet: ξ_i[σ_i,τ] + ξ_j[σ_j,τ] = 0
                let forced = -signs[i]
                    * crate::simplex::incidence_number(&tops[i], &tau)
                    * crate::simplex::incidence_number(&tops[j], &tau);
                if signs[j] == 0 {
                    signs[j] = forced;
                    stack.push(j);
                } else if signs[j] != forced {
                    return Err(Error::Integrity(format!(
                        "orientation parity clash across facet {tau}; pseudomanifold is non-orientable"
                    )));
                }
            }
        }
    }
    let xi = OrientationVector { dim: d, signs };
    // final verification that the signed sum is a cycle
    let cycle = xi.fundamental_cycle(k)?;
    if !cycle.boundary(k)?.is_zero() {
        return Err(Error::integrity("propagated signs do not form a cycle"));
    }
    let neg = xi.negated();
    Ok((xi, neg))
}

/// The unique integer `m` with `φ_d([S_ξ]) = m·[S_ξ]`, verified on every
/// top simplex; any mismatch is an integrity error, never a silent answer.
pub fn degree_of_chain_map(phi: &ChainMap, w: &SphereWitness) -> Result<i64> {
    if !phi.is_endomorphism() || phi.source().as_ref() != w.complex().as_ref() {
        return Err(Error::domain(
            "degree requires an endomorphism of the witness complex",
        ));
    }
    let xi = orientation_from_witness(w)?;
    let cycle = xi.fundamental_cycle(w.complex())?;
    let image = phi.apply(&cycle)?;
    let top_sign = xi.sign_of(w.complex(), w.top_cell())?;
    let m = image.coefficient(w.top_cell()) * top_sign;
    let expected = cycle.scaled(m)?;
    if image != expected {
        return Err(Error::Integrity(format!(
            "image of the fundamental cycle is not {m}·[S]; not a chain map on a sphere"
        )));
    }
    Ok(m)
}

/// Degree computed against an explicit orientation (used by the invariance
/// checks: the result must match for `ξ` and `-ξ`).
pub fn degree_with_orientation(
    phi: &ChainMap,
    k: &ComplexHandle,
    xi: &OrientationVector,
) -> Result<i64> {
    let cycle = xi.fundamental_cycle(k)?;
    let image = phi.apply(&cycle)?;
    let top = &k.simplices(xi.dim())[0];
    let m = image.coefficient(top) * xi.signs()[0];
    if image != cycle.scaled(m)? {
        return Err(Error::integrity(
            "image of the fundamental cycle is not an integer multiple",
        ));
    }
    Ok(m)
}

/// The combinatorial degree of `f: Bd^k(S) -> S`: the degree of the
/// endomorphism `g^k_# ∘ f_#` of `C_#(Bd^k(S))`, where `w_bd` certifies
/// `Bd^k(S)` as a sphere and `tower` carries the subdivision companion maps.
pub fn combinatorial_degree(
    f: &SimplicialMap,
    w_bd: &SphereWitness,
    tower: &SubdivisionTower,
) -> Result<i64> {
    if f.source().as_ref() != tower.top().as_ref() {
        return Err(Error::domain(
            "map source must be the top of the subdivision tower",
        ));
    }
    if f.target().as_ref() != tower.base().as_ref() {
        return Err(Error::domain(
            "map target must be the base of the subdivision tower",
        ));
    }
    if w_bd.complex().as_ref() != tower.top().as_ref() {
        return Err(Error::domain("witness must certify the subdivided sphere"));
    }
    let g = subdivision_chain_map(tower)?;
    let f_sharp = ChainMap::induced(f)?;
    let phi = g.compose(&f_sharp)?;
    degree_of_chain_map(&phi, w_bd)
}

/// Transports an orientation of the subdivided sphere down the tower: the
/// orientation `η` on the base with `g^k([S_η]) = [S'_ξ]`. Only one column
/// of the subdivision map is consulted to fix the global sign.
pub fn transported_orientation(
    tower: &SubdivisionTower,
    xi_top: &OrientationVector,
) -> Result<OrientationVector> {
    let base = tower.base();
    let (eta, eta_neg) = orientation_pair(base)?;
    if tower.steps() == 0 {
        if eta.signs() == xi_top.signs() {
            return Ok(eta);
        }
        if eta_neg.signs() == xi_top.signs() {
            return Ok(eta_neg);
        }
        return Err(Error::integrity(
            "orientation matches neither orientation of the base sphere",
        ));
    }
    let d = base.dim();
    let sigma1 = &base.simplices(d)[0];
    let g = subdivision_chain_map(tower)?;
    let column = g.apply(&Chain::unit(sigma1.clone()))?;
    let (piece, coeff) = column
        .terms()
        .next()
        .ok_or_else(|| Error::integrity("subdivision image of a top simplex is empty"))?;
    let xi_on_piece = xi_top.sign_of(tower.top(), piece)?;
    // want η(σ1)·coeff = ξ(piece)
    let needed = xi_on_piece * coeff;
    if eta.sign_of(base, sigma1)? == needed {
        Ok(eta)
    } else {
        Ok(eta_neg)
    }
}

/// Signed preimage-count oracle for the degree of `f` between oriented
/// spheres of equal dimension: for a top simplex `σ` of the target,
/// `Σ_{σ': f(σ') = σ} ξ'_{σ'}·sgn(f|σ')·η_σ`. The sum must be independent
/// of `σ`; inconsistency is an integrity error.
pub fn degree_oracle_preimage(
    f: &SimplicialMap,
    source_orientation: &OrientationVector,
    target_orientation: &OrientationVector,
) -> Result<i64> {
    let d = source_orientation.dim();
    if target_orientation.dim() != d {
        return Err(Error::domain("oracle requires equal sphere dimensions"));
    }
    // group signed preimages by target top simplex
    let tgt_tops = f.target().simplices(d);
    let mut sums: HashMap<&Simplex, i64> = tgt_tops.iter().map(|s| (s, 0)).collect();
    for (i, sigma_src) in f.source().simplices(d).iter().enumerate() {
        if let Some((sign, image)) = f.signed_image(sigma_src) {
            if image.dim() == d {
                *sums.get_mut(&image).expect("image is a target top simplex") +=
                    sign * source_orientation.signs()[i];
            }
        }
    }
    let mut degree = None;
    for (j, sigma_tgt) in tgt_tops.iter().enumerate() {
        let value = sums[sigma_tgt] * target_orientation.signs()[j];
        match degree {
            None => degree = Some(value),
            Some(prev) if prev != value => {
                return Err(Error::Integrity(format!(
                    "signed preimage count differs across target simplices: {prev} vs {value} at {sigma_tgt}"
                )))
            }
            _ => {}
        }
    }
    degree.ok_or_else(|| Error::domain("target sphere has no top simplices"))
}

/// Cone lemma check: for a simplicial `f: x*S -> T` with `dim T <= dim S`,
/// the induced chain map annihilates the fundamental cycle of `S`.
pub fn cone_lemma_check(f: &SimplicialMap, w: &SphereWitness) -> Result<bool> {
    let d = w.dim();
    if f.target().dim() > d {
        return Err(Error::domain("cone lemma requires dim(T) <= dim(S)"));
    }
    for sigma in w.complex().iter() {
        if !f.source().contains(sigma) {
            return Err(Error::domain("map source does not contain the sphere"));
        }
    }
    let xi = orientation_from_witness(w)?;
    // the fundamental cycle of S viewed inside C_d(x*S)
    let cycle = Chain::from_terms(
        d,
        w.complex()
            .simplices(d)
            .iter()
            .cloned()
            .zip(xi.signs().iter().copied()),
    )?;
    let phi = ChainMap::induced(f)?;
    Ok(phi.apply(&cycle)?.is_zero())
}

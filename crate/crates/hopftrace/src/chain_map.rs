//! Chain maps, the subdivision chain map, traces, and the combinatorial
//! Hopf trace formula.
//!
//! A chain map is stored as one sparse column per source simplex, per
//! dimension. Traces are read off the diagonal without densifying.

use std::fmt;

use crate::chain::{add_coeff, mul_coeff, Chain};
use crate::complex::{ComplexHandle, SimplicialComplex};
use crate::dvf::{DiscreteVectorField, GradientCertificate};
use crate::error::{Error, Result};
use crate::morse::{co_critical_chain, critical_chain};
use crate::simplex::{Simplex, Vertex};
use crate::simplicial_map::SimplicialMap;
use crate::subdivision::{BdMap, SubdivisionTower};

/// A sequence of homomorphisms `φ_q: C_q(source) -> C_q(target)`.
#[derive(Clone)]
pub struct ChainMap {
    source: ComplexHandle,
    target: ComplexHandle,
    /// `cols[q][i]` is the image of the `i`-th q-simplex of the source.
    cols: Vec<Vec<Chain>>,
}

impl fmt::Debug for ChainMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChainMap(dims 0..={})", self.cols.len() as i64 - 1)
    }
}

impl ChainMap {
    fn empty_cols(source: &SimplicialComplex) -> Vec<Vec<Chain>> {
        (0..=source.dim().max(-1))
            .map(|q| source.simplices(q).iter().map(|_| Chain::zero(q)).collect())
            .collect()
    }

    /// The identity endomorphism of `C_#(K)`.
    pub fn identity(k: ComplexHandle) -> Self {
        let cols = (0..=k.dim().max(-1))
            .map(|q| {
                k.simplices(q)
                    .iter()
                    .map(|s| Chain::unit(s.clone()))
                    .collect()
            })
            .collect();
        ChainMap {
            source: k.clone(),
            target: k,
            cols,
        }
    }

    /// The zero map.
    pub fn zero(source: ComplexHandle, target: ComplexHandle) -> Self {
        let cols = Self::empty_cols(&source);
        ChainMap {
            source,
            target,
            cols,
        }
    }

    /// The chain map induced by a simplicial map: a signed image simplex
    /// when the dimension is preserved, zero when the image degenerates.
    pub fn induced(f: &SimplicialMap) -> Result<Self> {
        let source = f.source().clone();
        let target = f.target().clone();
        let mut cols = Self::empty_cols(&source);
        for q in 0..=source.dim().max(-1) {
            for (i, sigma) in source.simplices(q).iter().enumerate() {
                if let Some((sign, image)) = f.signed_image(sigma) {
                    let mut c = Chain::zero(q);
                    c.add_term(&image, sign)?;
                    cols[q as usize][i] = c;
                }
            }
        }
        Ok(ChainMap {
            source,
            target,
            cols,
        })
    }

    /// Builds a chain map from explicit columns.
    pub fn from_columns(
        source: ComplexHandle,
        target: ComplexHandle,
        mut columns: impl FnMut(i64, &Simplex) -> Result<Chain>,
    ) -> Result<Self> {
        let mut cols = Self::empty_cols(&source);
        for q in 0..=source.dim().max(-1) {
            for (i, sigma) in source.simplices(q).iter().enumerate() {
                let c = columns(q, sigma)?;
                if !c.is_zero() {
                    if c.dim() != q {
                        return Err(Error::domain("column dimension mismatch"));
                    }
                    if !c.supported_on(&target) {
                        return Err(Error::domain("column not supported on the target complex"));
                    }
                }
                cols[q as usize][i] = c;
            }
        }
        Ok(ChainMap {
            source,
            target,
            cols,
        })
    }

    pub fn source(&self) -> &ComplexHandle {
        &self.source
    }

    pub fn target(&self) -> &ComplexHandle {
        &self.target
    }

    /// The image of the `i`-th q-simplex.
    pub fn column(&self, q: i64, i: usize) -> &Chain {
        &self.cols[q as usize][i]
    }

    /// Applies `φ_q` to a q-chain by linearity.
    pub fn apply(&self, c: &Chain) -> Result<Chain> {
        let q = c.dim();
        if q < 0 || q >= self.cols.len() as i64 {
            return Ok(Chain::zero(q));
        }
        let mut out = Chain::zero(q);
        for (s, x) in c.terms() {
            let i = self
                .source
                .position(s)
                .ok_or_else(|| Error::Domain(format!("{s} is not in the source complex")))?;
            out = out.add_scaled(&self.cols[q as usize][i], x)?;
        }
        Ok(out)
    }

    /// Matrix composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &ChainMap) -> Result<ChainMap> {
        if other.target.as_ref() != self.source.as_ref() {
            return Err(Error::domain(
                "composition mismatch: target of inner != source of outer",
            ));
        }
        let mut cols = Self::empty_cols(&other.source);
        for (q, bucket) in cols.iter_mut().enumerate() {
            for (i, col) in bucket.iter_mut().enumerate() {
                *col = self.apply(&other.cols[q][i])?;
            }
        }
        Ok(ChainMap {
            source: other.source.clone(),
            target: self.target.clone(),
            cols,
        })
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source.as_ref() == self.target.as_ref()
    }

    /// Exact commutation with boundaries, `∂ ∘ φ_q = φ_{q-1} ∘ ∂`; returns
    /// the first failing simplex otherwise.
    pub fn verify(&self) -> std::result::Result<(), Simplex> {
        for q in 0..self.cols.len() as i64 {
            for (i, sigma) in self.source.simplices(q).iter().enumerate() {
                let lhs = self.cols[q as usize][i]
                    .boundary(&self.target)
                    .expect("columns are supported on the target");
                let rhs = self
                    .apply(
                        &Chain::unit(sigma.clone())
                            .boundary(&self.source)
                            .expect("in source"),
                    )
                    .expect("boundary stays in the source");
                if lhs != rhs {
                    return Err(sigma.clone());
                }
            }
        }
        Ok(())
    }

    /// `Σ_q (-1)^q tr(φ_q)` in the standard simplex basis.
    pub fn alternating_trace(&self) -> Result<i64> {
        if !self.is_endomorphism() {
            return Err(Error::domain("alternating trace requires an endomorphism"));
        }
        let mut acc = 0i64;
        for q in 0..self.cols.len() as i64 {
            let sign = if q % 2 == 0 { 1 } else { -1 };
            for (i, sigma) in self.source.simplices(q).iter().enumerate() {
                let diag = self.cols[q as usize][i].coefficient(sigma);
                acc = add_coeff(acc, mul_coeff(sign, diag, "trace")?, "trace")?;
            }
        }
        Ok(acc)
    }
}

/// Cone of a chain at `apex`: prepends the apex to each simplex and re-sorts
/// into canonical order, tracking permutation parity. Satisfies
/// `[x*σ, x*τ] = -[σ, τ]` and `[x*σ, σ] = 1` for an apex ordered first.
pub fn cone_chain(apex: Vertex, c: &Chain) -> Result<Chain> {
    let mut out = Chain::zero(c.dim() + 1);
    for (s, x) in c.terms() {
        let coned = s
            .with_vertex(apex)
            .ok_or_else(|| Error::Domain(format!("cone apex {apex} already in {s}")))?;
        let passed = s.vertices().iter().filter(|&&v| v < apex).count();
        let sign = if passed % 2 == 0 { 1 } else { -1 };
        out.add_term(&coned, mul_coeff(x, sign, "cone sign")?)?;
    }
    Ok(out)
}

/// The single-step subdivision chain map `C_#(K) -> C_#(Bd(K))`: vertices go
/// to their barycenters and `g(σ)` is the cone of `g(∂σ)` at `v_σ`.
pub fn subdivision_step(base: &ComplexHandle, bd: &ComplexHandle, map: &BdMap) -> Result<ChainMap> {
    let mut memo: std::collections::HashMap<Simplex, Chain> = std::collections::HashMap::new();
    for q in 0..=base.dim().max(-1) {
        for sigma in base.simplices(q) {
            let v_sigma = map
                .vertex_of(sigma)
                .ok_or_else(|| Error::domain("companion map does not cover the base complex"))?;
            let g = if q == 0 {
                Chain::unit(Simplex::vertex(v_sigma))
            } else {
                let mut g_boundary = Chain::zero(q - 1);
                for (i, tau) in sigma.facets().into_iter().enumerate() {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    g_boundary = g_boundary.add_scaled(&memo[&tau], sign)?;
                }
                cone_chain(v_sigma, &g_boundary)?
            };
            memo.insert(sigma.clone(), g);
        }
    }
    ChainMap::from_columns(base.clone(), bd.clone(), |_, sigma| Ok(memo[sigma].clone()))
}

/// The k-th subdivision chain map `C_#(K) -> C_#(Bd^k(K))` along a tower.
pub fn subdivision_chain_map(tower: &SubdivisionTower) -> Result<ChainMap> {
    let mut current = ChainMap::identity(tower.base().clone());
    let mut below = tower.base().clone();
    for (bd, map) in tower.levels() {
        let step = subdivision_step(&below, bd, map)?;
        current = step.compose(&current)?;
        below = bd.clone();
    }
    Ok(current)
}

/// Both sides of the Hopf trace identity, kept exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HopfReport {
    pub lhs: i64,
    pub rhs: i64,
}

impl HopfReport {
    pub fn equal(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// The right-hand side `Σ_q (-1)^q Σ_{σ∈Crit_q} ⟨σ←, φ_q(σ→)⟩` in the
/// standard basis.
pub fn hopf_rhs(
    phi: &ChainMap,
    v: &DiscreteVectorField,
    cert: &GradientCertificate,
) -> Result<i64> {
    if !phi.is_endomorphism() || phi.source().as_ref() != v.complex().as_ref() {
        return Err(Error::domain(
            "Hopf trace requires an endomorphism of the field's complex",
        ));
    }
    let census = v.census();
    let mut acc = 0i64;
    for (q, crit) in census.critical.iter().enumerate() {
        let sign = if q % 2 == 0 { 1 } else { -1 };
        for sigma in crit {
            let fwd = critical_chain(v, cert, sigma)?;
            let back = co_critical_chain(v, cert, sigma)?;
            let image = phi.apply(&fwd)?;
            let term = back.dot(&image)?;
            acc = add_coeff(acc, mul_coeff(sign, term, "hopf rhs")?, "hopf rhs")?;
        }
    }
    Ok(acc)
}

/// Evaluates both sides of the Hopf trace identity for `phi` and `v`.
pub fn verify_hopf(phi: &ChainMap, v: &DiscreteVectorField) -> Result<HopfReport> {
    let cert = v.require_gradient()?;
    let lhs = phi.alternating_trace()?;
    let rhs = hopf_rhs(phi, v, &cert)?;
    Ok(HopfReport { lhs, rhs })
}

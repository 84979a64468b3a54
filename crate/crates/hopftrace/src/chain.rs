//! Integer chains, boundary operators, and inner products.
//!
//! Coefficients are overflow-checked `i64`; any overflow surfaces as an
//! [`Error::Overflow`] instead of wrapping.

use std::collections::BTreeMap;
use std::fmt;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::simplex::Simplex;

/// Checked coefficient addition.
pub(crate) fn add_coeff(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow(ctx))
}

/// Checked coefficient multiplication.
pub(crate) fn mul_coeff(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow(ctx))
}

/// A sparse integer chain of a fixed dimension.
///
/// Zero coefficients are never stored; the map is keyed in canonical simplex
/// order so iteration and serialization are deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct Chain {
    dim: i64,
    coeffs: BTreeMap<Simplex, i64>,
}

impl Chain {
    /// The zero chain of dimension `dim`.
    pub fn zero(dim: i64) -> Self {
        Chain {
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    /// The chain `1·σ`.
    pub fn unit(sigma: Simplex) -> Self {
        let dim = sigma.dim();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(sigma, 1);
        Chain { dim, coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (Simplex, i64)>>(dim: i64, terms: I) -> Result<Self> {
        let mut c = Chain::zero(dim);
        for (s, x) in terms {
            c.add_term(&s, x)?;
        }
        Ok(c)
    }

    pub fn dim(&self) -> i64 {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of simplices with nonzero coefficient.
    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficient(&self, s: &Simplex) -> i64 {
        self.coeffs.get(s).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Simplex, i64)> {
        self.coeffs.iter().map(|(s, &x)| (s, x))
    }

    pub fn support(&self) -> impl Iterator<Item = &Simplex> {
        self.coeffs.keys()
    }

    /// Adds `x·σ` in place.
    pub fn add_term(&mut self, sigma: &Simplex, x: i64) -> Result<()> {
        if x == 0 {
            return Ok(());
        }
        debug_assert_eq!(sigma.dim(), self.dim, "term dimension mismatch");
        match self.coeffs.get_mut(sigma) {
            Some(c) => {
                *c = add_coeff(*c, x, "chain term")?;
                if *c == 0 {
                    self.coeffs.remove(sigma);
                }
            }
            None => {
                self.coeffs.insert(sigma.clone(), x);
            }
        }
        Ok(())
    }

    /// `self + scale·other`.
    pub fn add_scaled(&self, other: &Chain, scale: i64) -> Result<Chain> {
        if self.dim != other.dim && !other.is_zero() {
            return Err(Error::domain("chain dimension mismatch in addition"));
        }
        let mut out = self.clone();
        for (s, x) in other.terms() {
            out.add_term(s, mul_coeff(x, scale, "chain scale")?)?;
        }
        Ok(out)
    }

    pub fn scaled(&self, scale: i64) -> Result<Chain> {
        Chain::zero(self.dim).add_scaled(self, scale)
    }

    pub fn negated(&self) -> Chain {
        let coeffs = self.coeffs.iter().map(|(s, &x)| (s.clone(), -x)).collect();
        Chain {
            dim: self.dim,
            coeffs,
        }
    }

    /// Standard-basis inner product `Σ s_i s'_i`.
    pub fn dot(&self, other: &Chain) -> Result<i64> {
        let mut acc: i64 = 0;
        let (small, big) = if self.coeffs.len() <= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (s, x) in small.terms() {
            let y = big.coefficient(s);
            acc = add_coeff(acc, mul_coeff(x, y, "inner product")?, "inner product")?;
        }
        Ok(acc)
    }

    /// The boundary `∂c = Σ c(σ)·Σ_τ [σ,τ]·τ` inside `k`.
    ///
    /// Chains of dimension 0 map to the zero (-1)-chain: `C_q = 0` for `q < 0`,
    /// so the `(∅)`-term is never produced.
    pub fn boundary(&self, k: &SimplicialComplex) -> Result<Chain> {
        let mut out = Chain::zero(self.dim - 1);
        for (sigma, x) in self.terms() {
            if !k.contains(sigma) {
                return Err(Error::Domain(format!(
                    "simplex {sigma} not in the ambient complex"
                )));
            }
            if self.dim == 0 {
                continue;
            }
            for (i, tau) in sigma.facets().into_iter().enumerate() {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                out.add_term(&tau, mul_coeff(x, sign, "boundary")?)?;
            }
        }
        Ok(out)
    }

    /// Checks every simplex in the support lies in `k`.
    pub fn supported_on(&self, k: &SimplicialComplex) -> bool {
        self.support().all(|s| k.contains(s))
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (s, x)) in self.terms().enumerate() {
            if i == 0 {
                if x < 0 {
                    write!(f, "-")?;
                }
            } else if x < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = x.unsigned_abs();
            if a != 1 {
                write!(f, "{a}·")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Where a basis element of a [`BasisQ`] came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisElement {
    /// A plain simplex of the standard basis.
    Simplex(Simplex),
    /// A critical chain `σ→`.
    CriticalChain(Simplex),
    /// `α̃ = ∂(V(α))` for an upward-matched simplex `α`.
    BoundaryImage(Simplex),
    /// A downward-matched simplex kept as-is.
    DownSimplex(Simplex),
}

/// An ordered integer basis of `C_q(K)` with provenance per element.
#[derive(Clone, Debug)]
pub struct BasisQ {
    dim: i64,
    elements: Vec<Chain>,
    provenance: Vec<BasisElement>,
    /// Set when the basis is a modified basis `S̃_q`; enables the fast
    /// structural coordinate solve.
    structure: Option<ModifiedStructure>,
}

/// Partition data behind a modified basis: elements are ordered as
/// critical chains, then boundary images in topological order, then the
/// downward-matched simplices.
#[derive(Clone, Debug)]
pub(crate) struct ModifiedStructure {
    pub crit: Vec<Simplex>,
    pub up_topo: Vec<Simplex>,
    pub down: Vec<Simplex>,
}

impl BasisQ {
    /// The standard simplex basis of `C_q(K)`.
    pub fn standard(k: &SimplicialComplex, q: i64) -> Self {
        let elements: Vec<Chain> = k
            .simplices(q)
            .iter()
            .map(|s| Chain::unit(s.clone()))
            .collect();
        let provenance = k
            .simplices(q)
            .iter()
            .map(|s| BasisElement::Simplex(s.clone()))
            .collect();
        BasisQ {
            dim: q,
            elements,
            provenance,
            structure: None,
        }
    }

    pub(crate) fn from_parts(
        dim: i64,
        elements: Vec<Chain>,
        provenance: Vec<BasisElement>,
        structure: Option<ModifiedStructure>,
    ) -> Self {
        BasisQ {
            dim,
            elements,
            provenance,
            structure,
        }
    }

    pub fn dim(&self) -> i64 {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Chain] {
        &self.elements
    }

    pub fn provenance(&self) -> &[BasisElement] {
        &self.provenance
    }

    /// Index of the element tagged as critical chain of `sigma`.
    pub fn position_of_critical(&self, sigma: &Simplex) -> Option<usize> {
        self.provenance
            .iter()
            .position(|p| matches!(p, BasisElement::CriticalChain(s) if s == sigma))
    }

    /// Index of the element tagged `α̃` for `alpha`.
    pub fn position_of_boundary_image(&self, alpha: &Simplex) -> Option<usize> {
        self.provenance
            .iter()
            .position(|p| matches!(p, BasisElement::BoundaryImage(s) if s == alpha))
    }

    /// Index of the element tagged as the plain/down simplex `beta`.
    pub fn position_of_simplex(&self, beta: &Simplex) -> Option<usize> {
        self.provenance.iter().position(|p| match p {
            BasisElement::Simplex(s) | BasisElement::DownSimplex(s) => s == beta,
            _ => false,
        })
    }

    /// Integer coordinates of `c` in this basis.
    ///
    /// Uses the structural solve for modified bases; otherwise falls back to
    /// exact integer elimination. Errors when the basis does not span or the
    /// coordinates are not integral.
    pub fn coordinates(&self, k: &SimplicialComplex, c: &Chain) -> Result<Vec<i64>> {
        if c.dim() != self.dim && !c.is_zero() {
            return Err(Error::domain(
                "chain dimension does not match basis dimension",
            ));
        }
        let n = k.simplices(self.dim).len();
        if self.elements.len() != n {
            return Err(Error::domain("basis size does not match the complex"));
        }
        if let Some(structure) = &self.structure {
            return self.structural_coordinates(c, structure);
        }
        // generic exact solve
        let mut matrix = vec![vec![0i64; self.elements.len()]; n];
        for (j, e) in self.elements.iter().enumerate() {
            for (s, x) in e.terms() {
                let row = k
                    .position(s)
                    .ok_or_else(|| Error::domain("basis element not supported on complex"))?;
                matrix[row][j] = x;
            }
        }
        let mut rhs = vec![0i64; n];
        for (s, x) in c.terms() {
            let row = k
                .position(s)
                .ok_or_else(|| Error::domain("chain not supported on complex"))?;
            rhs[row] = x;
        }
        crate::linalg::solve_exact(&matrix, &rhs)
    }

    /// O(nnz) solve exploiting the replacement-theorem block structure of a
    /// modified basis: the system is unit on critical rows, triangular with
    /// ±1 diagonal on the upward block, unit on the downward block.
    fn structural_coordinates(&self, c: &Chain, st: &ModifiedStructure) -> Result<Vec<i64>> {
        let p = st.crit.len();
        let l = st.up_topo.len();
        // x_up by back-substitution over the reversed topological order
        let mut x_up = vec![0i64; l];
        for j in (0..l).rev() {
            let elem = &self.elements[p + j];
            // residual coefficient of α_j after removing later columns
            let alpha = &st.up_topo[j];
            let mut r = c.coefficient(alpha);
            for (jj, x) in x_up.iter().enumerate().skip(j + 1) {
                if *x != 0 {
                    let a = self.elements[p + jj].coefficient(alpha);
                    r = add_coeff(r, -mul_coeff(a, *x, "basis solve")?, "basis solve")?;
                }
            }
            let diag = elem.coefficient(alpha);
            if diag != 1 && diag != -1 {
                return Err(Error::integrity(format!(
                    "modified basis diagonal at {alpha} is {diag}, expected ±1"
                )));
            }
            x_up[j] = r * diag; // diag ∈ {±1}: division by diag
        }
        // x_crit directly from critical rows (critical chains are unit there,
        // up-columns may hit critical rows)
        let mut x_crit = vec![0i64; p];
        for (i, sigma) in st.crit.iter().enumerate() {
            let mut r = c.coefficient(sigma);
            for (jj, x) in x_up.iter().enumerate() {
                if *x != 0 {
                    let a = self.elements[p + jj].coefficient(sigma);
                    r = add_coeff(r, -mul_coeff(a, *x, "basis solve")?, "basis solve")?;
                }
            }
            x_crit[i] = r;
        }
        // x_down = residual on down rows
        let mut out = Vec::with_capacity(self.elements.len());
        out.extend_from_slice(&x_crit);
        out.extend_from_slice(&x_up);
        let mut residual = c.clone();
        for (i, x) in x_crit.iter().enumerate() {
            if *x != 0 {
                residual = residual.add_scaled(&self.elements[i], -x)?;
            }
        }
        for (j, x) in x_up.iter().enumerate() {
            if *x != 0 {
                residual = residual.add_scaled(&self.elements[p + j], -x)?;
            }
        }
        let mut x_down = vec![0i64; st.down.len()];
        for (s, x) in residual.terms() {
            match st.down.binary_search_by(|d| d.cmp(s)) {
                Ok(idx) => x_down[idx] = x,
                Err(_) => {
                    return Err(Error::integrity(format!(
                        "residual outside the downward block at {s}; basis is not spanning"
                    )))
                }
            }
        }
        out.extend_from_slice(&x_down);
        Ok(out)
    }

    /// The change-of-basis matrix from the standard simplex basis
    /// (rows = simplices in canonical order, columns = basis elements).
    pub fn change_of_basis_matrix(&self, k: &SimplicialComplex) -> Result<Vec<Vec<i64>>> {
        let n = k.simplices(self.dim).len();
        if self.elements.len() != n {
            return Err(Error::domain("basis size does not match the complex"));
        }
        let mut matrix = vec![vec![0i64; n]; n];
        for (j, e) in self.elements.iter().enumerate() {
            for (s, x) in e.terms() {
                let row = k
                    .position(s)
                    .ok_or_else(|| Error::domain("basis element not supported on complex"))?;
                matrix[row][j] = x;
            }
        }
        Ok(matrix)
    }
}

/// Inner product of `c1` and `c2` with respect to `basis`; `None` means the
/// standard simplex basis.
pub fn inner_product(
    k: &SimplicialComplex,
    c1: &Chain,
    c2: &Chain,
    basis: Option<&BasisQ>,
) -> Result<i64> {
    match basis {
        None => c1.dot(c2),
        Some(b) => {
            let x = b.coordinates(k, c1)?;
            let y = b.coordinates(k, c2)?;
            let mut acc = 0i64;
            for (a, b) in x.iter().zip(&y) {
                acc = add_coeff(acc, mul_coeff(*a, *b, "inner product")?, "inner product")?;
            }
            Ok(acc)
        }
    }
}

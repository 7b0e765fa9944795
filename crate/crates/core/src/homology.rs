//! Reduced and relative simplicial homology over a coefficient field.
//!
//! Chain groups come from the augmented chain complex: degree -1 is spanned
//! by the empty face, so the empty complex `{∅}` has a single unit of
//! homology in degree -1 while the void complex has none anywhere. Betti
//! numbers are computed from exact boundary ranks,
//! `h_i = #(i-faces) - rank ∂_i - rank ∂_{i+1}`.

use std::collections::BTreeMap;
use std::fmt;

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, SparseMatrix};

/// Betti numbers by degree; only nonzero entries are stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BettiVector(BTreeMap<i64, usize>);

impl BettiVector {
    pub fn new() -> Self {
        BettiVector(BTreeMap::new())
    }

    pub fn set(&mut self, degree: i64, value: usize) {
        if value != 0 {
            self.0.insert(degree, value);
        } else {
            self.0.remove(&degree);
        }
    }

    pub fn get(&self, degree: i64) -> usize {
        self.0.get(&degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degrees with nonzero Betti number, ascending.
    pub fn support(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.0.iter().map(|(&d, &v)| (d, v))
    }

    pub fn max_nonzero_degree(&self) -> Option<i64> {
        self.0.keys().next_back().copied()
    }

    /// Alternating sum `Σ (-1)^i h_i`, for comparison against the reduced
    /// Euler characteristic.
    pub fn euler(&self) -> i64 {
        self.0
            .iter()
            .map(|(&d, &v)| if d.rem_euclid(2) == 0 { v as i64 } else { -(v as i64) })
            .sum()
    }
}

impl fmt::Debug for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (d, v)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "h{d}={v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromIterator<(i64, usize)> for BettiVector {
    fn from_iter<I: IntoIterator<Item = (i64, usize)>>(iter: I) -> Self {
        let mut out = BettiVector::new();
        for (d, v) in iter {
            out.set(d, v);
        }
        out
    }
}

/// The boundary map `∂_d : C_d -> C_{d-1}` of the augmented chain complex,
/// as an integer matrix with rows indexed by (d-1)-faces and columns by
/// d-faces, both in lexicographic order. The entry for a d-face σ and the
/// face obtained by deleting its k-th smallest vertex is `(-1)^k`; in
/// particular `∂_0` sends every vertex to the empty face with sign +1.
pub fn boundary_matrix(x: &SimplicialComplex, d: i64) -> SparseMatrix {
    if x.is_void() || d < 0 {
        // ∂_{-1} lands in the zero group; lower d has no domain either
        let cols = if d >= -1 { x.num_faces_of_dim(d) } else { 0 };
        return SparseMatrix::zero(0, cols);
    }
    let targets = x.faces_of_dim(d - 1);
    let sources = x.faces_of_dim(d);
    let index_of: BTreeMap<VertexSet, usize> =
        targets.iter().copied().enumerate().map(|(i, f)| (f, i)).collect();

    // Build column-by-column, then transpose to restore sorted rows. Within
    // one column, deleting vertices in decreasing order visits the target
    // faces in increasing lexicographic order.
    let mut by_cols = SparseMatrix::zero(sources.len(), targets.len());
    for (col, &sigma) in sources.iter().enumerate() {
        let removals: Vec<(usize, usize)> = sigma.vertices().enumerate().collect();
        for &(k, v) in removals.iter().rev() {
            let row = index_of[&sigma.without(v)];
            let sign = if k % 2 == 0 { 1 } else { -1 };
            by_cols.push(col, row, sign);
        }
    }
    by_cols.transpose()
}

/// Reduced Betti numbers of `x` over `field`, for every degree from -1 up
/// to the dimension. The void complex has all of them zero.
pub fn reduced_betti(x: &SimplicialComplex, field: FieldSpec) -> BettiVector {
    let mut out = BettiVector::new();
    let Some(dim) = x.dim() else {
        return out;
    };
    let mut rank_next = 0; // rank ∂_{-1} into the zero group
    let mut d = -1;
    while d <= dim {
        let rank_here = rank_next;
        rank_next = boundary_matrix(x, d + 1).rank(field);
        let faces = x.num_faces_of_dim(d);
        out.set(d, faces - rank_here - rank_next);
        d += 1;
    }
    out
}

/// Reduced Betti number of `x` in a single degree.
pub fn reduced_betti_in_degree(x: &SimplicialComplex, degree: i64, field: FieldSpec) -> usize {
    if x.is_void() || degree < -1 {
        return 0;
    }
    let faces = x.num_faces_of_dim(degree);
    if faces == 0 {
        return 0;
    }
    let rank_down = boundary_matrix(x, degree).rank(field);
    let rank_up = boundary_matrix(x, degree + 1).rank(field);
    faces - rank_down - rank_up
}

/// Betti numbers of the pair `(x, a)` over `field`, from the quotient chain
/// complex: degree-i chains are spanned by i-faces of `x` not in `a`, and
/// boundary terms landing in `a` are dropped.
///
/// Requires `a` to be a non-void subcomplex of `x` on the same ground set;
/// since `a` then contains the empty face, all degrees below 0 vanish.
pub fn relative_betti(
    x: &SimplicialComplex,
    a: &SimplicialComplex,
    field: FieldSpec,
) -> Result<BettiVector> {
    if x.ground_size() != a.ground_size() {
        return Err(Error::GroundMismatch(x.ground_size(), a.ground_size()));
    }
    if a.is_void() {
        return Err(Error::VoidSubcomplex);
    }
    if !a.facets().iter().all(|f| x.member(*f)) {
        return Err(Error::NotSubcomplex);
    }

    let mut out = BettiVector::new();
    let Some(dim) = x.dim() else {
        return Ok(out);
    };
    let quotient_faces =
        |d: i64| -> Vec<VertexSet> { x.faces_of_dim(d).into_iter().filter(|f| !a.member(*f)).collect() };

    let mut rank_next = 0;
    let mut faces_next = quotient_faces(0);
    let mut d = 0;
    while d <= dim {
        let faces_here = std::mem::take(&mut faces_next);
        faces_next = quotient_faces(d + 1);
        let rank_here = rank_next;
        let up = quotient_boundary(&faces_next, &faces_here);
        rank_next = up.rank(field);
        out.set(d, faces_here.len() - rank_here - rank_next);
        d += 1;
    }
    Ok(out)
}

/// Boundary matrix of the quotient complex between explicit face bases.
fn quotient_boundary(sources: &[VertexSet], targets: &[VertexSet]) -> SparseMatrix {
    let index_of: BTreeMap<VertexSet, usize> =
        targets.iter().copied().enumerate().map(|(i, f)| (f, i)).collect();
    let mut by_cols = SparseMatrix::zero(sources.len(), targets.len());
    for (col, &sigma) in sources.iter().enumerate() {
        let removals: Vec<(usize, usize)> = sigma.vertices().enumerate().collect();
        for &(k, v) in removals.iter().rev() {
            if let Some(&row) = index_of.get(&sigma.without(v)) {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                by_cols.push(col, row, sign);
            }
        }
    }
    by_cols.transpose()
}

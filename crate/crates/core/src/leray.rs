//! Leray numbers via induced subcomplexes and via links, and the P(k,m)
//! vanishing conditions interpolating between the two.
//!
//! The Leray number of a non-void complex is the least d >= 0 such that
//! every induced subcomplex has vanishing reduced homology in all degrees
//! >= d. Degree -1 never counts: the empty induced subcomplex always has
//! h_{-1} = 1 and would otherwise rule out d = 0 for every complex.

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::homology::reduced_betti;
use crate::linalg::FieldSpec;

/// A Leray number together with a witness certifying it is not smaller.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LerayComputation {
    pub value: usize,
    /// A vertex subset (induced method) or face (link method) whose
    /// associated complex has nonzero homology in degree `value - 1`.
    /// `None` exactly when `value` is 0.
    pub witness: Option<(VertexSet, i64)>,
}

/// Least d such that every induced subcomplex is homologically trivial in
/// degrees >= d, by direct enumeration of all vertex subsets.
pub fn leray_number(x: &SimplicialComplex, field: FieldSpec) -> Result<usize> {
    Ok(leray_number_detailed(x, field)?.value)
}

pub fn leray_number_detailed(
    x: &SimplicialComplex,
    field: FieldSpec,
) -> Result<LerayComputation> {
    if x.is_void() {
        return Err(Error::VoidComplex);
    }
    let n = x.ground_size();
    let mut top: i64 = -1;
    let mut witness = None;
    // Increasing popcount visits cheap subcomplexes first; a subset can
    // only raise the maximum when its dimension bound |S| - 1 exceeds it.
    for subset in subsets_by_size(n) {
        if subset.len() as i64 - 1 <= top {
            continue;
        }
        let betti = reduced_betti(&x.induced(subset), field);
        if let Some(d) = betti.max_nonzero_degree() {
            if d > top && d >= 0 {
                top = d;
                witness = Some((subset, d));
            }
        }
    }
    Ok(LerayComputation { value: (top + 1) as usize, witness })
}

/// Least d such that every link has trivial homology in degrees >= d
/// (the link of the empty face being the complex itself).
pub fn leray_number_via_links(x: &SimplicialComplex, field: FieldSpec) -> Result<usize> {
    Ok(leray_number_via_links_detailed(x, field)?.value)
}

pub fn leray_number_via_links_detailed(
    x: &SimplicialComplex,
    field: FieldSpec,
) -> Result<LerayComputation> {
    if x.is_void() {
        return Err(Error::VoidComplex);
    }
    let mut top: i64 = -1;
    let mut witness = None;
    for face in x.all_faces() {
        let betti = reduced_betti(&x.link(face), field);
        if let Some(d) = betti.max_nonzero_degree() {
            if d > top && d >= 0 {
                top = d;
                witness = Some((face, d));
            }
        }
    }
    Ok(LerayComputation { value: (top + 1) as usize, witness })
}

/// All subsets of `[0, n)` ordered by size, then lexicographically.
fn subsets_by_size(n: usize) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = (0..1u64 << n).map(|b| VertexSet::from_bits(b as u32)).collect();
    out.sort_by_key(|s| (s.len(), *s));
    out
}

/// For a fixed complex, the top degree of nonvanishing link homology over
/// all pairs B ⊆ A of vertex subsets, aggregated by (|A|, |B|).
///
/// The condition P(k,m) at threshold d asks that h_i(lk(X[A], B)) = 0
/// whenever |A| >= n-k, |B| <= m and i >= d, so it only depends on these
/// per-size maxima. Building the table costs 3^n homology computations but
/// then answers every (d, k, m) query in O(n^2).
pub struct LinkVanishing {
    n: usize,
    /// `max_top[a][b]` = largest degree >= 0 with nonvanishing homology over
    /// pairs with |A| = a, |B| = b, or -1 when all such links are trivial.
    max_top: Vec<Vec<i64>>,
}

impl LinkVanishing {
    pub fn new(x: &SimplicialComplex, field: FieldSpec) -> Self {
        let n = x.ground_size();
        let mut max_top = vec![vec![-1i64; n + 1]; n + 1];
        for a_bits in 0..1u64 << n {
            let a = VertexSet::from_bits(a_bits as u32);
            let restricted = x.induced(a);
            for b in a.subsets() {
                let betti = reduced_betti(&restricted.link(b), field);
                if let Some(d) = betti.max_nonzero_degree() {
                    if d >= 0 {
                        let slot = &mut max_top[a.len()][b.len()];
                        *slot = (*slot).max(d);
                    }
                }
            }
        }
        LinkVanishing { n, max_top }
    }

    /// Whether P(k,m) holds at threshold `d`.
    pub fn check(&self, d: usize, k: usize, m: usize) -> bool {
        let min_a = self.n.saturating_sub(k);
        for a in min_a..=self.n {
            for b in 0..=m.min(a) {
                if self.max_top[a][b] >= d as i64 {
                    return false;
                }
            }
        }
        true
    }
}

/// Whether h_i(lk(X[A], B)) = 0 for all B ⊆ A ⊆ V with |A| >= |V| - k and
/// |B| <= m, in every degree i >= d. A void complex satisfies this
/// vacuously. For repeated queries on one complex build [`LinkVanishing`]
/// once instead.
pub fn check_p(
    x: &SimplicialComplex,
    d: usize,
    k: usize,
    m: usize,
    field: FieldSpec,
) -> bool {
    LinkVanishing::new(x, field).check(d, k, m)
}

//! The squarefree monomial ideal attached to a complex, and its homological
//! invariants: graded Betti numbers, Castelnuovo-Mumford regularity, and
//! projective dimension.
//!
//! No free resolutions are constructed. Graded Betti numbers of the ideal
//! come entirely from the combinatorial formula
//! β_{i,j} = Σ_{|W|=j} h_{j-i-2}(X[W]), summed over vertex subsets W, with
//! i >= 0 (the W = ∅ term, which would need i = -1, is excluded).

use std::collections::BTreeMap;
use std::fmt;

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::homology::reduced_betti;
use crate::linalg::FieldSpec;

/// Graded Betti numbers β_{i,j} of a squarefree monomial ideal; only
/// nonzero entries are stored. The zero ideal has an empty table.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), usize>,
}

impl BettiTable {
    pub fn new() -> Self {
        BettiTable::default()
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    fn add(&mut self, i: usize, j: usize, value: usize) {
        if value != 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries as ((i, j), β), in lexicographic (i, j) order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// max{j - i} over nonzero entries; `None` for the empty table.
    pub fn regularity(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, j)| j - i).max()
    }

    /// max{i} over nonzero entries; `None` for the empty table.
    pub fn max_homological_degree(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, ((i, j), v)) in self.entries.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "b[{i},{j}]={v}")?;
        }
        write!(f, "}}")
    }
}

/// A squarefree monomial ideal given by the supports of its minimal
/// generators, which form an antichain of non-empty vertex sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdealInput {
    n: usize,
    generators: Vec<VertexSet>,
}

impl MonomialIdealInput {
    /// Build from arbitrary squarefree generator supports; non-minimal
    /// generators are discarded. The empty support (a unit ideal) is
    /// rejected, but an empty generator list (the zero ideal) is fine.
    pub fn new(n: usize, generators: &[VertexSet]) -> Result<Self> {
        if n == 0 || n > crate::complex::MAX_GROUND {
            return Err(Error::GroundSize(n));
        }
        let full = VertexSet::full(n);
        let mut gens = Vec::new();
        for g in generators {
            if g.is_empty() {
                return Err(Error::UnitIdeal);
            }
            if !g.is_subset(full) {
                let vertex = g.difference(full).min_vertex().unwrap();
                return Err(Error::VertexOutOfRange { vertex, ground: n });
            }
            gens.push(*g);
        }
        gens.sort();
        gens.dedup();
        let minimal: Vec<VertexSet> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| *h != **g && h.is_subset(**g)))
            .copied()
            .collect();
        Ok(MonomialIdealInput { n, generators: minimal })
    }

    pub fn variables(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[VertexSet] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }
}

/// Minimal non-faces of `x`: the supports of the minimal generators of its
/// associated squarefree ideal. Empty exactly when `x` is a full simplex.
pub fn minimal_nonfaces(x: &SimplicialComplex) -> Result<Vec<VertexSet>> {
    x.minimal_non_faces()
}

/// The complex whose faces are the sets containing no generator support:
/// the inverse of [`minimal_nonfaces`]. Generators equal to the whole
/// ideal's ring (empty support) are rejected upstream in
/// [`MonomialIdealInput::new`].
pub fn complex_of_ideal(ideal: &MonomialIdealInput) -> SimplicialComplex {
    let n = ideal.variables();
    // faces avoid every generator; facets are the maximal such sets
    let mut faces = Vec::new();
    for bits in 0..1u64 << n {
        let s = VertexSet::from_bits(bits as u32);
        if ideal.generators().iter().all(|g| !g.is_subset(s)) {
            faces.push(s);
        }
    }
    SimplicialComplex::from_facets(n, &faces)
        .expect("the empty set avoids every non-empty generator")
}

/// Graded Betti numbers of the ideal of `x` by direct summation over all
/// vertex subsets W: β_{i,j} += h_{j-i-2}(X[W]) for each |W| = j. A full
/// simplex (zero ideal) yields the empty table.
pub fn betti_table(x: &SimplicialComplex, field: FieldSpec) -> Result<BettiTable> {
    if x.is_void() {
        return Err(Error::VoidComplex);
    }
    let n = x.ground_size();
    let mut table = BettiTable::new();
    for bits in 1..1u64 << n {
        let w = VertexSet::from_bits(bits as u32);
        let j = w.len();
        let h = reduced_betti(&x.induced(w), field);
        for (degree, value) in h.support() {
            // degree = j - i - 2 and i >= 0 restrict to degree <= j - 2
            let i = j as i64 - degree - 2;
            if i >= 0 {
                table.add(i as usize, j, value);
            }
        }
    }
    Ok(table)
}

/// Castelnuovo-Mumford regularity of the ideal of `x`, as max{j - i} over
/// the nonzero graded Betti numbers. `None` when the ideal is zero (full
/// simplex), where no convention is imposed.
pub fn regularity(x: &SimplicialComplex, field: FieldSpec) -> Result<Option<usize>> {
    Ok(betti_table(x, field)?.regularity())
}

/// Projective dimension of the quotient ring by the ideal of `x`:
/// 1 + max{i : β_{i,j}(I) != 0}, the shift accounting for the ideal
/// sitting one step into a resolution of the quotient. The zero ideal
/// gives 0 (the ring resolves itself).
pub fn projective_dimension_quotient(
    x: &SimplicialComplex,
    field: FieldSpec,
) -> Result<usize> {
    Ok(betti_table(x, field)?.max_homological_degree().map_or(0, |i| i + 1))
}

/// Outcome of a two-complex inequality check that may be inapplicable
/// because a needed invariant is undefined on the inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairCheck {
    /// All quantities were defined; `ok` says whether the inequalities held.
    Checked(PairCheckValues),
    /// Some ideal was zero, making a regularity undefined; nothing asserted.
    Skipped { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCheckValues {
    pub lhs_intersection: usize,
    pub lhs_union: usize,
    pub rhs_x: usize,
    pub rhs_y: usize,
    pub intersection_ok: bool,
    pub union_ok: bool,
}

impl PairCheck {
    pub fn all_ok(&self) -> bool {
        match self {
            PairCheck::Checked(v) => v.intersection_ok && v.union_ok,
            PairCheck::Skipped { .. } => true,
        }
    }
}

fn any_full_simplex(xs: &[&SimplicialComplex]) -> bool {
    xs.iter().any(|x| x.is_full_simplex())
}

/// Regularity bounds for sums and intersections of two squarefree ideals:
/// reg(I_X + I_Y) <= reg(I_X) + reg(I_Y) - 1 and
/// reg(I_X ∩ I_Y) <= reg(I_X) + reg(I_Y), phrased through the complexes
/// (the sum is the ideal of X ∩ Y, the intersection that of X ∪ Y).
/// Skipped when any involved ideal is zero, which happens exactly when
/// `x` or `y` is a full simplex.
pub fn check_theorem_mono(
    x: &SimplicialComplex,
    y: &SimplicialComplex,
    field: FieldSpec,
) -> Result<PairCheck> {
    if x.ground_size() != y.ground_size() {
        return Err(Error::GroundMismatch(x.ground_size(), y.ground_size()));
    }
    if x.is_void() || y.is_void() {
        return Err(Error::VoidComplex);
    }
    if any_full_simplex(&[x, y]) {
        return Ok(PairCheck::Skipped {
            reason: "zero ideal: regularity undefined on a full simplex".into(),
        });
    }
    // X, Y proper implies X∩Y and X∪Y proper, so every regularity exists
    let reg_x = regularity(x, field)?.expect("proper complex has nonzero ideal");
    let reg_y = regularity(y, field)?.expect("proper complex has nonzero ideal");
    let reg_inter = regularity(&x.intersection(y)?, field)?
        .expect("intersection of proper complexes is proper");
    let reg_union =
        regularity(&x.union(y)?, field)?.expect("union of proper complexes is proper");
    Ok(PairCheck::Checked(PairCheckValues {
        lhs_intersection: reg_inter,
        lhs_union: reg_union,
        rhs_x: reg_x,
        rhs_y: reg_y,
        intersection_ok: reg_inter <= reg_x + reg_y - 1,
        union_ok: reg_union <= reg_x + reg_y,
    }))
}

/// Projective-dimension bounds for the same two ideal operations:
/// pd(I_X ∩ I_Y) <= pd(I_X) + pd(I_Y) and
/// pd(I_X + I_Y) <= pd(I_X) + pd(I_Y) + 1, with pd of a nonzero ideal
/// taken as pd of the quotient minus one. Skipped on full simplices.
pub fn check_theorem_proj(
    x: &SimplicialComplex,
    y: &SimplicialComplex,
    field: FieldSpec,
) -> Result<PairCheck> {
    if x.ground_size() != y.ground_size() {
        return Err(Error::GroundMismatch(x.ground_size(), y.ground_size()));
    }
    if x.is_void() || y.is_void() {
        return Err(Error::VoidComplex);
    }
    if any_full_simplex(&[x, y]) {
        return Ok(PairCheck::Skipped {
            reason: "zero ideal: projective dimension of I undefined on a full simplex"
                .into(),
        });
    }
    let pd_ideal = |z: &SimplicialComplex| -> Result<usize> {
        // z proper, so I_z != 0 and pd(S/I_z) >= 1
        Ok(projective_dimension_quotient(z, field)? - 1)
    };
    let pd_x = pd_ideal(x)?;
    let pd_y = pd_ideal(y)?;
    let pd_union = pd_ideal(&x.union(y)?)?;
    let pd_inter = pd_ideal(&x.intersection(y)?)?;
    Ok(PairCheck::Checked(PairCheckValues {
        lhs_intersection: pd_inter,
        lhs_union: pd_union,
        rhs_x: pd_x,
        rhs_y: pd_y,
        union_ok: pd_union <= pd_x + pd_y,
        intersection_ok: pd_inter <= pd_x + pd_y + 1,
    }))
}

/// Both sides of the duality identity pd(S/I_X) = reg(I_{X*}), where X*
/// is the Alexander dual. Defined whenever the dual exists, i.e. for
/// proper non-void complexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TeraiValues {
    pub pd_quotient: usize,
    pub reg_dual: usize,
}

impl TeraiValues {
    pub fn ok(&self) -> bool {
        self.pd_quotient == self.reg_dual
    }
}

pub fn check_terai(x: &SimplicialComplex, field: FieldSpec) -> Result<TeraiValues> {
    let dual = x.alexander_dual()?;
    let pd_quotient = projective_dimension_quotient(x, field)?;
    let reg_dual = regularity(&dual, field)?
        .expect("dual of a proper complex is proper, so its ideal is nonzero");
    Ok(TeraiValues { pd_quotient, reg_dual })
}

//! Homological bounds for intersections and unions of complexes, and the
//! nerve/Helly side of the same story.
//!
//! The central inequality bounds h_{k-1}(X ∩ Y) by a double sum over faces
//! σ of Y of products h_{i-1}(X[σ]) · h_{j-1}(lk(Y,σ)) with i + j = k. Its
//! proof factors through two intermediate inequalities (a long exact
//! sequence bound and a spectral-sequence diagonal count), and all three
//! steps are checked independently here.

use std::collections::BTreeMap;

use crate::complex::{SimplicialComplex, VertexSet, MAX_GROUND};
use crate::error::{Error, Result};
use crate::homology::{reduced_betti, relative_betti, BettiVector};
use crate::leray::leray_number;
use crate::linalg::FieldSpec;

/// Per-face data shared by the bound, its proof steps, and the E1 page:
/// for every face σ of `y` (including the empty face), the reduced Betti
/// vectors of the induced subcomplex X[σ] and of lk(Y, σ).
fn face_terms(
    x: &SimplicialComplex,
    y: &SimplicialComplex,
    field: FieldSpec,
) -> Vec<(VertexSet, BettiVector, BettiVector)> {
    y.all_faces()
        .into_iter()
        .map(|sigma| {
            let hx = reduced_betti(&x.induced(sigma), field);
            let hy = reduced_betti(&y.link(sigma), field);
            (sigma, hx, hy)
        })
        .collect()
}

fn product_sum(hx: &BettiVector, hy: &BettiVector, k: i64) -> usize {
    // Σ_{i+j=k, i,j >= 0} h_{i-1} · h_{j-1}
    (0..=k).map(|i| hx.get(i - 1) * hy.get(k - i - 1)).sum()
}

fn require_same_ground(x: &SimplicialComplex, y: &SimplicialComplex) -> Result<()> {
    if x.ground_size() != y.ground_size() {
        return Err(Error::GroundMismatch(x.ground_size(), y.ground_size()));
    }
    Ok(())
}

/// The right-hand side of the intersection bound at level `k`:
/// Σ_{σ ∈ Y} Σ_{i+j=k} h_{i-1}(X[σ]) · h_{j-1}(lk(Y,σ)), σ ranging over
/// all faces of `y` including the empty one. The σ = ∅ term is exactly
/// h_{k-1}(Y), since X[∅] = {∅} and lk(Y,∅) = Y.
pub fn theorem1_rhs(
    x: &SimplicialComplex,
    y: &SimplicialComplex,
    k: usize,
    field: FieldSpec,
) -> Result<usize> {
    require_same_ground(x, y)?;
    Ok(face_terms(x, y, field)
        .iter()
        .map(|(_, hx, hy)| product_sum(hx, hy, k as i64))
        .sum())
}

/// Dimensions of the first page of the spectral sequence converging to
/// H_*(Y, X ∩ Y), indexed by (p, q) with p + q the homological degree.
///
/// The population rule, with n = dim Y, is
/// dims(p, q) = Σ_{σ ∈ Y, dim σ = n-p} Σ_{i+j=p+q} h_{i-1}(X[σ]) · h_{j-1}(lk(Y,σ)).
/// Support lies in 0 <= p <= n and p + q >= 0; q itself can be negative
/// (a facet σ with lk = {∅} contributes j = 0 terms on diagonals below
/// p), so q is signed here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E1Page {
    /// Dimension of Y.
    pub n: i64,
    dims: BTreeMap<(usize, i64), usize>,
}

impl E1Page {
    pub fn dim_at(&self, p: usize, q: i64) -> usize {
        self.dims.get(&(p, q)).copied().unwrap_or(0)
    }

    /// Total dimension along the diagonal p + q = k.
    pub fn diagonal_sum(&self, k: i64) -> usize {
        self.dims.iter().filter(|((p, q), _)| *p as i64 + q == k).map(|(_, v)| v).sum()
    }

    /// Nonzero entries as ((p, q), dim), ascending in (p, q).
    pub fn entries(&self) -> impl Iterator<Item = ((usize, i64), usize)> + '_ {
        self.dims.iter().map(|(&k, &v)| (k, v))
    }
}

pub fn e1_page(
    x: &SimplicialComplex,
    y: &SimplicialComplex,
    field: FieldSpec,
) -> Result<E1Page> {
    require_same_ground(x, y)?;
    let n = y.dim().ok_or(Error::VoidComplex)?;
    if x.is_void() {
        return Err(Error::VoidComplex);
    }
    let mut dims = BTreeMap::new();
    for (sigma, hx, hy) in face_terms(x, y, field) {
        if sigma.is_empty() {
            continue;
        }
        let p = (n - sigma.dim()) as usize;
        for (di, a) in hx.support() {
            for (dj, b) in hy.support() {
                // degrees d = i-1 translate to i = d+1 >= 0
                let k = di + dj + 2;
                let q = k - p as i64;
                *dims.entry((p, q)).or_insert(0) += a * b;
            }
        }
    }
    Ok(E1Page { n, dims })
}

/// One level of the three-step verification of the intersection bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremOneLevel {
    pub k: usize,
    /// h_{k-1}(X ∩ Y).
    pub lhs: usize,
    /// The full double sum over faces of Y.
    pub rhs: usize,
    /// h_{k-1}(Y), also the σ = ∅ share of `rhs`.
    pub y_term: usize,
    /// h_k(Y, X ∩ Y).
    pub relative: usize,
    /// Σ_{p+q=k} E1_{p,q}.
    pub e1_diagonal: usize,
    /// (a): lhs <= rhs.
    pub bound_ok: bool,
    /// (b): lhs <= y_term + relative.
    pub les_ok: bool,
    /// (c): relative <= e1_diagonal.
    pub e1_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremOneReport {
    pub levels: Vec<TheoremOneLevel>,
}

impl TheoremOneReport {
    pub fn all_ok(&self) -> bool {
        self.levels.iter().all(|l| l.bound_ok && l.les_ok && l.e1_ok)
    }

    pub fn first_violation(&self) -> Option<&TheoremOneLevel> {
        self.levels.iter().find(|l| !(l.bound_ok && l.les_ok && l.e1_ok))
    }
}

/// Check the intersection bound and both proof steps for every level
/// k in [0, min(dim X, dim Y) + 2]; beyond that range all quantities
/// vanish because the relevant chain groups are empty.
pub fn verify_theorem1(
    x: &SimplicialComplex,
    y: &SimplicialComplex,
    field: FieldSpec,
) -> Result<TheoremOneReport> {
    require_same_ground(x, y)?;
    let (Some(dim_x), Some(dim_y)) = (x.dim(), y.dim()) else {
        return Err(Error::VoidComplex);
    };
    let terms = face_terms(x, y, field);
    let inter = x.intersection(y)?;
    let h_inter = reduced_betti(&inter, field);
    let h_rel = relative_betti(y, &inter, field)?;
    let page = e1_page(x, y, field)?;

    let mut levels = Vec::new();
    for k in 0..=(dim_x.min(dim_y) + 2).max(0) as usize {
        let lhs = h_inter.get(k as i64 - 1);
        let rhs: usize =
            terms.iter().map(|(_, hx, hy)| product_sum(hx, hy, k as i64)).sum();
        let y_term = terms
            .iter()
            .find(|(s, _, _)| s.is_empty())
            .map(|(_, _, hy)| hy.get(k as i64 - 1))
            .unwrap_or(0);
        let relative = h_rel.get(k as i64);
        let e1_diagonal = page.diagonal_sum(k as i64);
        levels.push(TheoremOneLevel {
            k,
            lhs,
            rhs,
            y_term,
            relative,
            e1_diagonal,
            bound_ok: lhs <= rhs,
            les_ok: lhs <= y_term + relative,
            e1_ok: relative <= e1_diagonal,
        });
    }
    Ok(TheoremOneReport { levels })
}

/// Outcome of checking the Leray bounds for intersections and unions of a
/// family: L(∩ X_i) <= Σ L(X_i) and L(∪ X_i) <= Σ L(X_i) + r - 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremTwoReport {
    pub leray_each: Vec<usize>,
    pub leray_intersection: usize,
    pub leray_union: usize,
    pub intersection_bound: usize,
    pub union_bound: usize,
}

impl TheoremTwoReport {
    pub fn intersection_ok(&self) -> bool {
        self.leray_intersection <= self.intersection_bound
    }

    pub fn union_ok(&self) -> bool {
        self.leray_union <= self.union_bound
    }

    pub fn all_ok(&self) -> bool {
        self.intersection_ok() && self.union_ok()
    }

    pub fn intersection_slack(&self) -> usize {
        self.intersection_bound - self.leray_intersection
    }

    pub fn union_slack(&self) -> usize {
        self.union_bound - self.leray_union
    }
}

pub fn verify_theorem2(
    family: &[SimplicialComplex],
    field: FieldSpec,
) -> Result<TheoremTwoReport> {
    let Some(first) = family.first() else {
        return Err(Error::EmptyFamily);
    };
    let mut inter = first.clone();
    let mut union = first.clone();
    let mut leray_each = Vec::with_capacity(family.len());
    for x in family {
        require_same_ground(first, x)?;
        leray_each.push(leray_number(x, field)?);
    }
    for x in &family[1..] {
        inter = inter.intersection(x)?;
        union = union.union(x)?;
    }
    let sum: usize = leray_each.iter().sum();
    Ok(TheoremTwoReport {
        leray_intersection: leray_number(&inter, field)?,
        leray_union: leray_number(&union, field)?,
        intersection_bound: sum,
        union_bound: sum + family.len() - 1,
        leray_each,
    })
}

/// Rank inequalities read off the Mayer-Vietoris sequence of (X, Y), plus
/// the exact Euler-characteristic identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MayerVietorisLevel {
    pub k: i64,
    pub union_k: usize,
    pub x_k: usize,
    pub y_k: usize,
    pub inter_below: usize,
    /// h_k(X∪Y) <= h_k(X) + h_k(Y) + h_{k-1}(X∩Y).
    pub union_ok: bool,
    /// h_{k-1}(X∩Y) <= h_{k-1}(X) + h_{k-1}(Y) + h_k(X∪Y).
    pub inter_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MayerVietorisReport {
    pub levels: Vec<MayerVietorisLevel>,
    pub euler_lhs: i64,
    pub euler_rhs: i64,
}

impl MayerVietorisReport {
    pub fn euler_ok(&self) -> bool {
        self.euler_lhs == self.euler_rhs
    }

    pub fn all_ok(&self) -> bool {
        self.euler_ok() && self.levels.iter().all(|l| l.union_ok && l.inter_ok)
    }
}

pub fn mayer_vietoris_check(
    x: &SimplicialComplex,
    y: &SimplicialComplex,
    field: FieldSpec,
) -> Result<MayerVietorisReport> {
    require_same_ground(x, y)?;
    if x.is_void() || y.is_void() {
        return Err(Error::VoidComplex);
    }
    let union = x.union(y)?;
    let inter = x.intersection(y)?;
    let hu = reduced_betti(&union, field);
    let hx = reduced_betti(x, field);
    let hy = reduced_betti(y, field);
    let hi = reduced_betti(&inter, field);

    let top = union.dim().unwrap_or(-1) + 1;
    let mut levels = Vec::new();
    for k in -1..=top {
        let union_k = hu.get(k);
        let x_k = hx.get(k);
        let y_k = hy.get(k);
        let inter_below = hi.get(k - 1);
        levels.push(MayerVietorisLevel {
            k,
            union_k,
            x_k,
            y_k,
            inter_below,
            union_ok: union_k <= x_k + y_k + inter_below,
            inter_ok: inter_below <= hx.get(k - 1) + hy.get(k - 1) + union_k,
        });
    }
    Ok(MayerVietorisReport {
        levels,
        euler_lhs: x.reduced_euler() + y.reduced_euler(),
        euler_rhs: union.reduced_euler() + inter.reduced_euler(),
    })
}

/// A finite family of subsets of a ground set, in a fixed order, possibly
/// with repeats. Used for nerves and Helly numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    ground_size: usize,
    sets: Vec<VertexSet>,
}

impl SetFamily {
    pub fn new(ground_size: usize, sets: Vec<VertexSet>) -> Result<Self> {
        if ground_size == 0 || ground_size > MAX_GROUND {
            return Err(Error::GroundSize(ground_size));
        }
        if sets.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let full = VertexSet::full(ground_size);
        for s in &sets {
            if !s.is_subset(full) {
                let vertex = s.difference(full).min_vertex().unwrap();
                return Err(Error::VertexOutOfRange { vertex, ground: ground_size });
            }
        }
        Ok(SetFamily { ground_size, sets })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    /// Intersection of the members selected by `mask`, the empty selection
    /// giving the whole ground set.
    fn intersections(&self) -> Vec<u32> {
        let m = self.sets.len();
        let mut table = vec![0u32; 1 << m];
        table[0] = VertexSet::full(self.ground_size).bits();
        for mask in 1..1u64 << m {
            let low = mask.trailing_zeros() as usize;
            table[mask as usize] =
                table[(mask & (mask - 1)) as usize] & self.sets[low].bits();
        }
        table
    }
}

/// Nerve of the family: one vertex per member (by index), with a subfamily
/// spanning a face exactly when its members share a point. The empty
/// subfamily always qualifies, so the nerve is never void.
pub fn nerve(fam: &SetFamily) -> Result<SimplicialComplex> {
    let m = fam.len();
    if m > MAX_GROUND {
        return Err(Error::GroundSize(m));
    }
    let inter = fam.intersections();
    let is_face: Vec<bool> =
        inter.iter().enumerate().map(|(mask, &i)| mask == 0 || i != 0).collect();
    // facets = faces none of whose one-element extensions is a face
    let mut facets = Vec::new();
    for mask in 0..1u64 << m {
        if !is_face[mask as usize] {
            continue;
        }
        let maximal = (0..m)
            .all(|v| mask & (1 << v) != 0 || !is_face[(mask | 1 << v) as usize]);
        if maximal {
            facets.push(VertexSet::from_bits(mask as u32));
        }
    }
    SimplicialComplex::from_facets(m, &facets)
}

/// The least h >= 1 such that every subfamily all of whose subfamilies of
/// size <= h have a common point itself has a common point. Computed by
/// exhaustive search over subfamilies; always at most the family size.
pub fn helly_number(fam: &SetFamily) -> usize {
    let m = fam.len();
    let inter = fam.intersections();
    for h in 1..m {
        // premise[K]: every L ⊆ K with |L| <= h has nonempty intersection
        let mut premise = vec![false; 1 << m];
        premise[0] = true;
        let mut violated = false;
        for mask in 1..1u64 << m {
            let holds = (0..m)
                .filter(|v| mask & (1 << v) != 0)
                .all(|v| premise[(mask & !(1 << v)) as usize])
                && ((mask.count_ones() as usize) > h || inter[mask as usize] != 0);
            premise[mask as usize] = holds;
            if holds && inter[mask as usize] == 0 {
                violated = true;
                break;
            }
        }
        if !violated {
            return h;
        }
    }
    // h = |F| always works: the premise then includes K itself
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    const GF2: FieldSpec = FieldSpec::GF(2);

    fn vs(vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(vs.iter().copied())
    }

    fn circle3() -> SimplicialComplex {
        SimplicialComplex::boundary_of_simplex(3, VertexSet::full(3)).unwrap()
    }

    #[test]
    fn rhs_sigma_empty_share() {
        // X = Y = triangle boundary: the σ = ∅ term alone is h_{k-1}(Y)
        let x = circle3();
        for k in 0..=3usize {
            let rhs = theorem1_rhs(&x, &x, k, GF2).unwrap();
            let y_term = reduced_betti(&x, GF2).get(k as i64 - 1);
            assert!(rhs >= y_term, "k={k}");
        }
        // k = 2: LHS h_1(X∩Y) = 1 must be bounded
        assert!(theorem1_rhs(&x, &x, 2, GF2).unwrap() >= 1);
    }

    #[test]
    fn verify_theorem1_self_pair() {
        let x = circle3();
        let report = verify_theorem1(&x, &x, GF2).unwrap();
        assert!(report.all_ok(), "{report:?}");
        // h_k(X, X) = 0 throughout
        assert!(report.levels.iter().all(|l| l.relative == 0));
        // at k = 2 the bound is met with lhs = 1
        assert_eq!(report.levels[2].lhs, 1);
    }

    #[test]
    fn verify_theorem1_four_cycle_pair() {
        // two arcs composing a 4-cycle
        let x = SimplicialComplex::from_facets(4, &[vs(&[0, 1]), vs(&[1, 2])]).unwrap();
        let y = SimplicialComplex::from_facets(4, &[vs(&[0, 3]), vs(&[2, 3])]).unwrap();
        let report = verify_theorem1(&x, &y, GF2).unwrap();
        assert!(report.all_ok(), "{report:?}");
        // intersection is the two points {0} and {2}
        assert_eq!(report.levels[1].lhs, 1);
    }

    #[test]
    fn e1_page_negative_q_is_populated() {
        // Y has a facet {3,4} hanging off a solid tetrahedron; X omits the
        // edge {3,4}. The facet contributes at q = -1, and dropping that
        // entry would break the diagonal bound for h_1(Y, X∩Y).
        let y = SimplicialComplex::from_facets(5, &[vs(&[0, 1, 2, 3]), vs(&[3, 4])]).unwrap();
        let x = SimplicialComplex::from_facets(
            5,
            &[vs(&[0, 1, 2, 3]), vs(&[0, 1, 2, 4])],
        )
        .unwrap();
        let page = e1_page(&x, &y, GF2).unwrap();
        assert_eq!(page.n, 3);
        assert_eq!(page.dim_at(2, -1), 1);
        assert_eq!(page.diagonal_sum(1), 1);

        let report = verify_theorem1(&x, &y, GF2).unwrap();
        assert!(report.all_ok(), "{report:?}");
        assert_eq!(report.levels[1].relative, 1);
    }

    #[test]
    fn e1_page_of_simplex_pair() {
        let x = SimplicialComplex::simplex(3).unwrap();
        let page = e1_page(&x, &x, GF2).unwrap();
        assert_eq!(page.entries().count(), 0);
    }

    #[test]
    fn theorem2_on_single_complex() {
        let x = circle3();
        let r = verify_theorem2(std::slice::from_ref(&x), GF2).unwrap();
        assert!(r.all_ok());
        assert_eq!(r.intersection_slack(), 0);
        assert_eq!(r.union_slack(), 0);
        assert_eq!(r.leray_each, vec![2]);
    }

    #[test]
    fn mayer_vietoris_two_arcs() {
        // X = path 0-1-2, Y = path 0-3-2; union is a 4-cycle
        let x = SimplicialComplex::from_facets(4, &[vs(&[0, 1]), vs(&[1, 2])]).unwrap();
        let y = SimplicialComplex::from_facets(4, &[vs(&[0, 3]), vs(&[2, 3])]).unwrap();
        let report = mayer_vietoris_check(&x, &y, GF2).unwrap();
        assert!(report.all_ok(), "{report:?}");
        let level1 = report.levels.iter().find(|l| l.k == 1).unwrap();
        assert_eq!(level1.union_k, 1);
        assert_eq!(level1.inter_below, 1);
        assert_eq!(report.euler_lhs, 0);
    }

    #[test]
    fn nerve_examples() {
        // pairwise disjoint sets: isolated vertices
        let fam = SetFamily::new(6, vec![vs(&[0, 1]), vs(&[2]), vs(&[3, 4])]).unwrap();
        let n = nerve(&fam).unwrap();
        assert_eq!(n.facets(), &[vs(&[0]), vs(&[1]), vs(&[2])]);

        // pairwise intersecting but no common point: boundary of a triangle
        let fam = SetFamily::new(3, vec![vs(&[0, 1]), vs(&[1, 2]), vs(&[0, 2])]).unwrap();
        let n = nerve(&fam).unwrap();
        assert_eq!(n, SimplicialComplex::boundary_of_simplex(3, VertexSet::full(3)).unwrap());

        // common element: full simplex
        let fam = SetFamily::new(4, vec![vs(&[0, 1]), vs(&[0, 2]), vs(&[0, 3])]).unwrap();
        assert!(nerve(&fam).unwrap().is_full_simplex());

        // an empty member yields a non-vertex
        let fam = SetFamily::new(3, vec![VertexSet::EMPTY, vs(&[1])]).unwrap();
        let n = nerve(&fam).unwrap();
        assert_eq!(n.facets(), &[vs(&[1])]);
    }

    #[test]
    fn helly_examples() {
        // common element
        let fam = SetFamily::new(4, vec![vs(&[0, 1]), vs(&[0, 2]), vs(&[0, 3])]).unwrap();
        assert_eq!(helly_number(&fam), 1);

        // the triangle family needs all three sets inspected
        let fam = SetFamily::new(3, vec![vs(&[0, 1]), vs(&[1, 2]), vs(&[0, 2])]).unwrap();
        assert_eq!(helly_number(&fam), 3);
        let l = leray_number(&nerve(&fam).unwrap(), GF2).unwrap();
        assert_eq!(1 + l, 3);

        // intervals on a line have Helly number <= 2
        let fam = SetFamily::new(
            6,
            vec![vs(&[0, 1, 2]), vs(&[1, 2, 3]), vs(&[2, 3, 4]), vs(&[4, 5])],
        )
        .unwrap();
        assert!(helly_number(&fam) <= 2);

        // a single set
        let fam = SetFamily::new(2, vec![vs(&[0])]).unwrap();
        assert_eq!(helly_number(&fam), 1);
    }

    #[test]
    fn family_validation() {
        assert_eq!(SetFamily::new(3, vec![]).unwrap_err(), Error::EmptyFamily);
        assert_eq!(
            SetFamily::new(2, vec![vs(&[0, 2])]).unwrap_err(),
            Error::VertexOutOfRange { vertex: 2, ground: 2 }
        );
    }
}

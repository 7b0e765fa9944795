//! Finite simplicial complexes on a fixed ground set, stored by facets.
//!
//! The void complex (no faces at all) and the empty complex (exactly the
//! empty face) are distinct objects, tracked by an explicit status flag;
//! the distinction matters for reduced homology in degree -1.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Hard representation limit: vertex sets are stored as 32-bit masks.
pub const MAX_GROUND: usize = 31;

/// A set of vertices out of a ground set `[0, n)`, stored as a bitmask.
///
/// Ordering is lexicographic on the sorted vertex list (so `{0,3} < {1,2}`
/// and a set precedes its proper supersets), which fixes a deterministic
/// iteration order for every face listing in this crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < 32);
        VertexSet(1 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        let mut bits = 0u32;
        for v in vs {
            debug_assert!(v < 32);
            bits |= 1 << v;
        }
        VertexSet(bits)
    }

    /// The full set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_GROUND + 1);
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u32::MAX >> (32 - n))
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Dimension as a face: `|s| - 1`, so the empty face has dimension -1.
    pub fn dim(self) -> i64 {
        self.len() as i64 - 1
    }

    pub fn contains(self, v: usize) -> bool {
        v < 32 && self.0 & (1 << v) != 0
    }

    pub fn with(self, v: usize) -> Self {
        debug_assert!(v < 32);
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u32 << v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn complement_in(self, n: usize) -> Self {
        VertexSet(Self::full(n).0 & !self.0)
    }

    /// Relabel every vertex `v` as `v + offset`.
    pub fn shifted(self, offset: usize) -> Self {
        VertexSet(self.0 << offset)
    }

    pub fn min_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Vertices in increasing order.
    pub fn vertices(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// All subsets, in descending bitmask order ending with the empty set.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let full = self.0;
        let mut next = Some(full);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 { None } else { Some((cur - 1) & full) };
            Some(VertexSet(cur))
        })
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Equal;
        }
        // Smallest vertex on which the two sets disagree; below it the sorted
        // lists coincide. The set holding it wins unless the other set still
        // has larger vertices (then the other list is lexicographically
        // larger), or loses if the other list has already ended (prefix rule).
        let low = diff.trailing_zeros();
        if self.0 & (1 << low) != 0 {
            if other.0 >> low >> 1 != 0 {
                Less
            } else {
                Greater
            }
        } else if self.0 >> low >> 1 != 0 {
            Greater
        } else {
            Less
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Whether a complex has any faces at all.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Status {
    /// No faces, not even the empty one.
    Void,
    /// Contains the empty face (and possibly more).
    NonVoid,
}

/// A finite simplicial complex on the ground set `[0, n)`.
///
/// Stored by its facets (inclusion-maximal faces), kept as a sorted
/// antichain. A non-void complex whose only face is the empty set has the
/// single facet `{}`; the void complex has no facets and `Status::Void`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground_size: usize,
    status: Status,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    fn check_ground(n: usize) -> Result<()> {
        if n == 0 || n > MAX_GROUND {
            return Err(Error::GroundSize(n));
        }
        Ok(())
    }

    /// The void complex `{}` on ground set `[0, n)`.
    pub fn void(n: usize) -> Result<Self> {
        Self::check_ground(n)?;
        Ok(SimplicialComplex { ground_size: n, status: Status::Void, facets: Vec::new() })
    }

    /// The empty complex `{∅}`.
    pub fn empty_complex(n: usize) -> Result<Self> {
        Self::check_ground(n)?;
        Ok(SimplicialComplex {
            ground_size: n,
            status: Status::NonVoid,
            facets: vec![VertexSet::EMPTY],
        })
    }

    /// Downward closure of the listed faces. Non-maximal entries are
    /// discarded; an empty list yields the void complex and `[{}]` yields
    /// the empty complex.
    pub fn from_facets(n: usize, faces: &[VertexSet]) -> Result<Self> {
        Self::check_ground(n)?;
        let full = VertexSet::full(n);
        for f in faces {
            if !f.is_subset(full) {
                let vertex = f.difference(full).min_vertex().unwrap();
                return Err(Error::VertexOutOfRange { vertex, ground: n });
            }
        }
        if faces.is_empty() {
            return Self::void(n);
        }
        Ok(SimplicialComplex {
            ground_size: n,
            status: Status::NonVoid,
            facets: maximal_antichain(faces.iter().copied()),
        })
    }

    /// For internal use when `facets` is already a sorted antichain.
    fn from_antichain(n: usize, facets: Vec<VertexSet>) -> Self {
        debug_assert!(facets.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(!facets.is_empty());
        SimplicialComplex { ground_size: n, status: Status::NonVoid, facets }
    }

    /// The full simplex on the whole ground set.
    pub fn simplex(n: usize) -> Result<Self> {
        Self::check_ground(n)?;
        Ok(Self::from_antichain(n, vec![VertexSet::full(n)]))
    }

    /// The full simplex on the vertex set `a`, within ground set `[0, n)`.
    pub fn simplex_on(n: usize, a: VertexSet) -> Result<Self> {
        Self::from_facets(n, &[a])
    }

    /// The boundary of the simplex on `a`: all proper subsets of `a`.
    pub fn boundary_of_simplex(n: usize, a: VertexSet) -> Result<Self> {
        Self::check_ground(n)?;
        if a.is_empty() {
            return Err(Error::EmptySimplexBoundary);
        }
        let faces: Vec<VertexSet> = a.vertices().map(|v| a.without(v)).collect();
        Self::from_facets(n, &faces)
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn is_void(&self) -> bool {
        self.status == Status::Void
    }

    /// Facets in lexicographic order; empty exactly for the void complex.
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Dimension of the complex; `None` for the void complex, `-1` for `{∅}`.
    pub fn dim(&self) -> Option<i64> {
        if self.is_void() {
            return None;
        }
        Some(self.facets.iter().map(|f| f.dim()).max().unwrap())
    }

    pub fn is_full_simplex(&self) -> bool {
        self.facets == [VertexSet::full(self.ground_size)]
    }

    /// Face membership: `s` is a face iff it lies under some facet.
    pub fn member(&self, s: VertexSet) -> bool {
        self.facets.iter().any(|f| s.is_subset(*f))
    }

    /// Every face, including the empty face, in lexicographic order.
    pub fn all_faces(&self) -> BTreeSet<VertexSet> {
        let mut out = BTreeSet::new();
        for f in &self.facets {
            for s in f.subsets() {
                out.insert(s);
            }
        }
        out
    }

    /// Faces of dimension `d` (so `d = -1` lists only the empty face).
    pub fn faces_of_dim(&self, d: i64) -> Vec<VertexSet> {
        if self.is_void() || d < -1 {
            return Vec::new();
        }
        let want = (d + 1) as usize;
        let mut out = BTreeSet::new();
        for f in &self.facets {
            if f.len() < want {
                continue;
            }
            for s in f.subsets() {
                if s.len() == want {
                    out.insert(s);
                }
            }
        }
        out.into_iter().collect()
    }

    pub fn num_faces_of_dim(&self, d: i64) -> usize {
        self.faces_of_dim(d).len()
    }

    /// Reduced Euler characteristic from face counts: the empty face
    /// contributes -1, each d-face `(-1)^d`. Zero for the void complex.
    pub fn reduced_euler(&self) -> i64 {
        let mut chi = 0i64;
        for face in self.all_faces() {
            chi += if face.len() % 2 == 0 { -1 } else { 1 };
        }
        chi
    }

    /// Induced subcomplex on `s`: faces of `self` contained in `s`.
    /// The ground set is kept as-is.
    pub fn induced(&self, s: VertexSet) -> Self {
        if self.is_void() {
            return self.clone();
        }
        let candidates: Vec<VertexSet> = self.facets.iter().map(|f| f.intersection(s)).collect();
        Self::from_antichain(self.ground_size, maximal_antichain(candidates))
    }

    /// Link of `a`: faces disjoint from `a` whose union with `a` is a face.
    /// Void when `a` is not a face.
    pub fn link(&self, a: VertexSet) -> Self {
        if self.is_void() || !self.member(a) {
            return SimplicialComplex {
                ground_size: self.ground_size,
                status: Status::Void,
                facets: Vec::new(),
            };
        }
        // Facets of the link are f \ a for facets f containing a; these are
        // automatically incomparable but not necessarily sorted.
        let mut facets: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|f| a.is_subset(**f))
            .map(|f| f.difference(a))
            .collect();
        facets.sort();
        Self::from_antichain(self.ground_size, facets)
    }

    /// Star of `a`: faces whose union with `a` is a face. Void when `a` is
    /// not a face.
    pub fn star(&self, a: VertexSet) -> Self {
        if self.is_void() || !self.member(a) {
            return SimplicialComplex {
                ground_size: self.ground_size,
                status: Status::Void,
                facets: Vec::new(),
            };
        }
        let facets: Vec<VertexSet> =
            self.facets.iter().filter(|f| a.is_subset(**f)).copied().collect();
        Self::from_antichain(self.ground_size, facets)
    }

    /// Face-set intersection. The void complex absorbs.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        if self.ground_size != other.ground_size {
            return Err(Error::GroundMismatch(self.ground_size, other.ground_size));
        }
        if self.is_void() || other.is_void() {
            return Self::void(self.ground_size);
        }
        let mut candidates = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                candidates.push(f.intersection(*g));
            }
        }
        Ok(Self::from_antichain(self.ground_size, maximal_antichain(candidates)))
    }

    /// Face-set union. The void complex is the identity.
    pub fn union(&self, other: &Self) -> Result<Self> {
        if self.ground_size != other.ground_size {
            return Err(Error::GroundMismatch(self.ground_size, other.ground_size));
        }
        if self.is_void() {
            return Ok(other.clone());
        }
        if other.is_void() {
            return Ok(self.clone());
        }
        let candidates = self.facets.iter().chain(&other.facets).copied();
        Ok(Self::from_antichain(self.ground_size, maximal_antichain(candidates)))
    }

    /// Join: all unions of a face of `self` with a face of `other`, with
    /// `other`'s vertices relabeled by offset `self.ground_size()`. Joining
    /// with the void complex gives the void complex.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let n = self.ground_size + other.ground_size;
        Self::check_ground(n)?;
        if self.is_void() || other.is_void() {
            return Self::void(n);
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                facets.push(f.union(g.shifted(self.ground_size)));
            }
        }
        facets.sort();
        Ok(Self::from_antichain(n, facets))
    }

    /// Inclusion-minimal non-faces, in lexicographic order. Empty exactly
    /// for the full simplex.
    pub fn minimal_non_faces(&self) -> Result<Vec<VertexSet>> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let n = self.ground_size;
        let mut out = Vec::new();
        for bits in 0u32..1 << n {
            let s = VertexSet::from_bits(bits);
            if self.member(s) {
                continue;
            }
            if s.vertices().all(|v| self.member(s.without(v))) {
                out.push(s);
            }
        }
        out.sort();
        Ok(out)
    }

    /// Alexander dual: faces are the complements of non-faces. Rejected for
    /// the void complex and the full simplex, where the dual would have no
    /// faces or lack the empty face.
    pub fn alexander_dual(&self) -> Result<Self> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        if self.is_full_simplex() {
            return Err(Error::DualOfFullSimplex);
        }
        let n = self.ground_size;
        let mut facets: Vec<VertexSet> =
            self.minimal_non_faces()?.iter().map(|m| m.complement_in(n)).collect();
        facets.sort();
        Ok(Self::from_antichain(n, facets))
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "Complex(n={}, void)", self.ground_size);
        }
        write!(f, "Complex(n={}, facets=[", self.ground_size)?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{facet}")?;
        }
        write!(f, "])")
    }
}

/// Keep the inclusion-maximal sets, deduplicated and sorted.
fn maximal_antichain<I: IntoIterator<Item = VertexSet>>(sets: I) -> Vec<VertexSet> {
    let mut v: Vec<VertexSet> = sets.into_iter().collect();
    v.sort();
    v.dedup();
    let keep: Vec<VertexSet> = v
        .iter()
        .filter(|s| !v.iter().any(|t| *t != **s && s.is_subset(*t)))
        .copied()
        .collect();
    keep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(vs.iter().copied())
    }

    fn triangle_boundary() -> SimplicialComplex {
        SimplicialComplex::from_facets(3, &[vs(&[0, 1]), vs(&[1, 2]), vs(&[0, 2])]).unwrap()
    }

    #[test]
    fn vertex_set_lex_order() {
        // lexicographic on sorted vertex lists, not numeric on masks
        assert!(vs(&[0, 3]) < vs(&[1, 2]));
        assert!(vs(&[0, 1]) < vs(&[0, 2]));
        assert!(vs(&[0]) < vs(&[0, 1]));
        assert!(VertexSet::EMPTY < vs(&[0]));
        assert!(vs(&[1]) > vs(&[0, 2]));
    }

    #[test]
    fn from_facets_void_and_empty() {
        let void = SimplicialComplex::from_facets(3, &[]).unwrap();
        assert!(void.is_void());
        assert_eq!(void.facets().len(), 0);
        assert!(!void.member(VertexSet::EMPTY));

        let empty = SimplicialComplex::from_facets(3, &[VertexSet::EMPTY]).unwrap();
        assert!(!empty.is_void());
        assert_eq!(empty.facets(), &[VertexSet::EMPTY]);
        assert!(empty.member(VertexSet::EMPTY));
        assert_eq!(empty.dim(), Some(-1));
    }

    #[test]
    fn from_facets_discards_non_maximal() {
        let x =
            SimplicialComplex::from_facets(3, &[vs(&[0]), vs(&[0, 1]), VertexSet::EMPTY]).unwrap();
        assert_eq!(x.facets(), &[vs(&[0, 1])]);
    }

    #[test]
    fn from_facets_rejects_out_of_range() {
        let err = SimplicialComplex::from_facets(2, &[vs(&[0, 2])]).unwrap_err();
        assert_eq!(err, Error::VertexOutOfRange { vertex: 2, ground: 2 });
    }

    #[test]
    fn triangle_boundary_membership() {
        let x = triangle_boundary();
        assert_eq!(x.facets().len(), 3);
        assert!(x.member(vs(&[0, 1])));
        assert!(!x.member(vs(&[0, 1, 2])));
        assert_eq!(x.faces_of_dim(1), vec![vs(&[0, 1]), vs(&[0, 2]), vs(&[1, 2])]);
        assert_eq!(x.faces_of_dim(2), Vec::<VertexSet>::new());
        assert_eq!(x.faces_of_dim(-1), vec![VertexSet::EMPTY]);
    }

    #[test]
    fn induced_examples() {
        let x = triangle_boundary();
        assert_eq!(x.induced(VertexSet::full(3)), x);
        // induced on an edge's endpoints keeps the full edge
        let e = x.induced(vs(&[0, 1]));
        assert_eq!(e.facets(), &[vs(&[0, 1])]);
        // induced on the empty set of a non-void complex is {∅}
        let nothing = x.induced(VertexSet::EMPTY);
        assert_eq!(nothing.facets(), &[VertexSet::EMPTY]);
        // induced of void is void
        let void = SimplicialComplex::void(3).unwrap();
        assert!(void.induced(vs(&[0])).is_void());
    }

    #[test]
    fn link_and_star_examples() {
        let x = triangle_boundary();
        assert_eq!(x.link(VertexSet::EMPTY), x);
        assert_eq!(x.star(VertexSet::EMPTY), x);

        // link of a vertex of the triangle boundary: the two opposite vertices
        let lk = x.link(vs(&[0]));
        assert_eq!(lk.facets(), &[vs(&[1]), vs(&[2])]);

        // star of that vertex: the two incident edges
        let st = x.star(vs(&[0]));
        assert_eq!(st.facets(), &[vs(&[0, 1]), vs(&[0, 2])]);
        let st_faces: Vec<VertexSet> = st.all_faces().into_iter().collect();
        assert_eq!(
            st_faces,
            vec![VertexSet::EMPTY, vs(&[0]), vs(&[0, 1]), vs(&[0, 2]), vs(&[1]), vs(&[2])]
        );

        // link and star of a non-face are void
        assert!(x.link(vs(&[0, 1, 2])).is_void());
        assert!(x.star(vs(&[0, 1, 2])).is_void());
    }

    #[test]
    fn intersection_union_identities() {
        let x = triangle_boundary();
        let void = SimplicialComplex::void(3).unwrap();
        assert_eq!(x.intersection(&x).unwrap(), x);
        assert_eq!(x.union(&void).unwrap(), x);
        assert!(x.intersection(&void).unwrap().is_void());
        let y = SimplicialComplex::simplex(3).unwrap();
        assert_eq!(x.intersection(&y).unwrap(), x);
        assert_eq!(x.union(&y).unwrap(), y);
    }

    #[test]
    fn ground_mismatch_rejected() {
        let x = triangle_boundary();
        let z = SimplicialComplex::simplex(4).unwrap();
        assert_eq!(x.intersection(&z).unwrap_err(), Error::GroundMismatch(3, 4));
    }

    #[test]
    fn join_examples() {
        let two_points = SimplicialComplex::boundary_of_simplex(2, vs(&[0, 1])).unwrap();
        let square = two_points.join(&two_points).unwrap();
        assert_eq!(square.ground_size(), 4);
        // 4-cycle: 0-2-1-3-0
        assert_eq!(square.facets(), &[vs(&[0, 2]), vs(&[0, 3]), vs(&[1, 2]), vs(&[1, 3])]);

        let empty = SimplicialComplex::empty_complex(1).unwrap();
        let joined = empty.join(&two_points).unwrap();
        assert_eq!(joined.facets(), &[vs(&[1]), vs(&[2])]);

        let void = SimplicialComplex::void(1).unwrap();
        assert!(void.join(&two_points).unwrap().is_void());
    }

    #[test]
    fn boundary_of_simplex_examples() {
        let pt = SimplicialComplex::boundary_of_simplex(1, vs(&[0])).unwrap();
        assert_eq!(pt.facets(), &[VertexSet::EMPTY]);

        let s2 = SimplicialComplex::boundary_of_simplex(4, VertexSet::full(4)).unwrap();
        assert_eq!(s2.facets().len(), 4);
        assert_eq!(s2.dim(), Some(2));

        assert_eq!(
            SimplicialComplex::boundary_of_simplex(2, VertexSet::EMPTY).unwrap_err(),
            Error::EmptySimplexBoundary
        );
    }

    #[test]
    fn minimal_non_faces_examples() {
        let full = SimplicialComplex::simplex(3).unwrap();
        assert!(full.minimal_non_faces().unwrap().is_empty());

        let boundary = SimplicialComplex::boundary_of_simplex(3, VertexSet::full(3)).unwrap();
        assert_eq!(boundary.minimal_non_faces().unwrap(), vec![VertexSet::full(3)]);

        let two_points = SimplicialComplex::boundary_of_simplex(2, vs(&[0, 1])).unwrap();
        assert_eq!(two_points.minimal_non_faces().unwrap(), vec![vs(&[0, 1])]);
    }

    #[test]
    fn alexander_dual_examples() {
        // dual of the boundary of the full simplex is {∅}
        for n in 2..=5 {
            let x = SimplicialComplex::boundary_of_simplex(n, VertexSet::full(n)).unwrap();
            let dual = x.alexander_dual().unwrap();
            assert_eq!(dual.facets(), &[VertexSet::EMPTY], "n={n}");
            // and back again
            assert_eq!(dual.alexander_dual().unwrap(), x, "n={n}");
        }

        let void = SimplicialComplex::void(2).unwrap();
        assert_eq!(void.alexander_dual().unwrap_err(), Error::VoidComplex);
        let full = SimplicialComplex::simplex(2).unwrap();
        assert_eq!(full.alexander_dual().unwrap_err(), Error::DualOfFullSimplex);
    }

    #[test]
    fn reduced_euler_examples() {
        assert_eq!(SimplicialComplex::void(2).unwrap().reduced_euler(), 0);
        assert_eq!(SimplicialComplex::empty_complex(2).unwrap().reduced_euler(), -1);
        // 3-cycle: -1 + 3 - 3 = -1, matching h0~ - h1~ for a circle
        assert_eq!(triangle_boundary().reduced_euler(), -1);
        assert_eq!(SimplicialComplex::simplex(4).unwrap().reduced_euler(), 0);
    }
}

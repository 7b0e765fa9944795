//! Deterministic construction of test-corpus complexes: the join family of
//! sphere-boundary factors, random skeleton-plus-faces complexes, and
//! random flag complexes.
//!
//! Randomness comes from SplitMix64, chosen because it is fully specified
//! by three published 64-bit constants and therefore reproduces the same
//! corpus on every platform. Probabilities are exact rationals; a face is
//! included when `draw < p.num * 2^64 / p.den`, computed in 128-bit
//! arithmetic, so no floating point is involved anywhere.

use std::str::FromStr;

use crate::complex::{SimplicialComplex, VertexSet, MAX_GROUND};
use crate::error::{Error, Result};

/// SplitMix64 with the standard finalizer constants.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform value in `[0, bound)` by rejection-free 128-bit scaling.
    pub fn below(&mut self, bound: u64) -> u64 {
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }
}

/// An exact probability in [0, 1], stored as a fraction.
///
/// Parsed from either a decimal like `0.25` (digits only, up to 18 places)
/// or a fraction like `1/3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Probability {
    num: u64,
    den: u64,
}

impl Probability {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 || num > den {
            return Err(Error::ProbabilitySyntax(format!("{num}/{den}")));
        }
        Ok(Probability { num, den })
    }

    pub const ZERO: Probability = Probability { num: 0, den: 1 };
    pub const ONE: Probability = Probability { num: 1, den: 1 };

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Decide one Bernoulli trial by consuming one PRNG draw.
    ///
    /// The draw always happens, even for probabilities 0 and 1, so that the
    /// stream position after sampling a face never depends on the
    /// probability value.
    pub fn sample(&self, rng: &mut SplitMix64) -> bool {
        let draw = rng.next_u64();
        if self.is_one() {
            return true;
        }
        let threshold = ((self.num as u128) << 64) / self.den as u128;
        (draw as u128) < threshold
    }
}

impl FromStr for Probability {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ProbabilitySyntax(s.to_string());
        if let Some((a, b)) = s.split_once('/') {
            let num: u64 = a.parse().map_err(|_| bad())?;
            let den: u64 = b.parse().map_err(|_| bad())?;
            return Probability::new(num, den).map_err(|_| bad());
        }
        if let Some((int, frac)) = s.split_once('.') {
            if int.is_empty()
                || frac.is_empty()
                || frac.len() > 18
                || !frac.bytes().all(|b| b.is_ascii_digit())
            {
                return Err(bad());
            }
            let whole: u64 = int.parse().map_err(|_| bad())?;
            let den = 10u64.pow(frac.len() as u32);
            let part: u64 = frac.parse().map_err(|_| bad())?;
            let num = whole.checked_mul(den).and_then(|w| w.checked_add(part)).ok_or_else(bad)?;
            return Probability::new(num, den).map_err(|_| bad());
        }
        let whole: u64 = s.parse().map_err(|_| bad())?;
        Probability::new(whole, 1).map_err(|_| bad())
    }
}

impl std::fmt::Display for Probability {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// The join family used for tightness tests: on a ground set split into
/// consecutive blocks V_1, ..., V_r of sizes a_1, ..., a_r, the i-th
/// complex is the join of full simplices on every block except V_i, where
/// the boundary of the simplex is taken instead. Its facets are the sets
/// missing exactly one vertex of V_i.
pub fn join_example_family(a: &[usize]) -> Result<Vec<SimplicialComplex>> {
    if a.iter().any(|&ai| ai == 0) {
        return Err(Error::EmptyBlock);
    }
    let n: usize = a.iter().sum();
    if n == 0 || n > MAX_GROUND {
        return Err(Error::GroundSize(n));
    }
    let full = VertexSet::full(n);
    let mut out = Vec::with_capacity(a.len());
    let mut offset = 0;
    for &ai in a {
        let facets: Vec<VertexSet> =
            (offset..offset + ai).map(|v| full.without(v)).collect();
        out.push(SimplicialComplex::from_facets(n, &facets)?);
        offset += ai;
    }
    Ok(out)
}

/// The full (d-1)-skeleton of the simplex on `[0, n)` plus each d-face
/// independently with probability `p_face`, the d-faces being visited in
/// lexicographic order with one draw each.
pub fn random_lm(n: usize, d: usize, p_face: Probability, seed: u64) -> Result<SimplicialComplex> {
    if n == 0 || n > MAX_GROUND {
        return Err(Error::GroundSize(n));
    }
    if d >= n {
        return Err(Error::SkeletonDim { d, n });
    }
    let mut rng = SplitMix64::new(seed);
    let full = SimplicialComplex::simplex(n)?;
    let mut facets = full.faces_of_dim(d as i64 - 1);
    for face in full.faces_of_dim(d as i64) {
        if p_face.sample(&mut rng) {
            facets.push(face);
        }
    }
    SimplicialComplex::from_facets(n, &facets)
}

/// Clique complex of a random graph: each edge independently with
/// probability `p_edge` (edges in lexicographic order, one draw each),
/// then all cliques become faces.
pub fn random_flag(n: usize, p_edge: Probability, seed: u64) -> Result<SimplicialComplex> {
    if n == 0 || n > MAX_GROUND {
        return Err(Error::GroundSize(n));
    }
    let mut rng = SplitMix64::new(seed);
    let mut adjacency = vec![0u32; n];
    for u in 0..n {
        for v in u + 1..n {
            if p_edge.sample(&mut rng) {
                adjacency[u] |= 1 << v;
                adjacency[v] |= 1 << u;
            }
        }
    }
    let facets = maximal_cliques(n, &adjacency);
    SimplicialComplex::from_facets(n, &facets)
}

/// Maximal cliques via Bron-Kerbosch with pivoting. Isolated vertices are
/// cliques of size one, so the result always covers every vertex.
fn maximal_cliques(n: usize, adjacency: &[u32]) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let all = VertexSet::full(n).bits();
    bron_kerbosch(adjacency, 0, all, 0, &mut out);
    out
}

fn bron_kerbosch(adj: &[u32], r: u32, mut p: u32, mut x: u32, out: &mut Vec<VertexSet>) {
    if p == 0 && x == 0 {
        out.push(VertexSet::from_bits(r));
        return;
    }
    // pivot on a vertex with most neighbors in p
    let pivot = {
        let mut best = 0;
        let mut best_deg = 0;
        let mut cands = p | x;
        let mut found = false;
        while cands != 0 {
            let v = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            let deg = (adj[v] & p).count_ones();
            if !found || deg > best_deg {
                best = v;
                best_deg = deg;
                found = true;
            }
        }
        best
    };
    let mut candidates = p & !adj[pivot];
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        let bit = 1u32 << v;
        candidates &= candidates - 1;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= !bit;
        x |= bit;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::reduced_betti;
    use crate::leray::leray_number;
    use crate::linalg::FieldSpec;

    const GF2: FieldSpec = FieldSpec::GF(2);

    fn p(s: &str) -> Probability {
        s.parse().unwrap()
    }

    #[test]
    fn probability_parsing() {
        assert_eq!(p("0.25"), Probability::new(25, 100).unwrap());
        assert_eq!(p("1/3"), Probability::new(1, 3).unwrap());
        assert_eq!(p("0"), Probability::ZERO);
        assert_eq!(p("1"), Probability::ONE);
        assert_eq!(p("1.0"), Probability::new(10, 10).unwrap());
        assert_eq!(p("0.375"), Probability::new(375, 1000).unwrap());
        assert!("1.5".parse::<Probability>().is_err());
        assert!("3/2".parse::<Probability>().is_err());
        assert!("-0.5".parse::<Probability>().is_err());
        assert!("".parse::<Probability>().is_err());
        assert!("0.".parse::<Probability>().is_err());
        assert!(".5".parse::<Probability>().is_err());
        assert!("1/0".parse::<Probability>().is_err());
        assert!("0.12e3".parse::<Probability>().is_err());
    }

    #[test]
    fn probability_extremes_sample_deterministically() {
        let mut rng = SplitMix64::new(7);
        for _ in 0..100 {
            assert!(Probability::ONE.sample(&mut rng));
        }
        let mut rng = SplitMix64::new(7);
        for _ in 0..100 {
            assert!(!Probability::ZERO.sample(&mut rng));
        }
    }

    #[test]
    fn splitmix_known_values() {
        // first outputs for seed 0 of the reference algorithm
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220A8397B1DCDAF);
        assert_eq!(rng.next_u64(), 0x6E789E6AA1B965F4);
        assert_eq!(rng.next_u64(), 0x06C45D188009454F);
    }

    #[test]
    fn join_family_shapes() {
        // a = (2): boundary of an edge = two isolated points
        let fam = join_example_family(&[2]).unwrap();
        assert_eq!(fam.len(), 1);
        assert_eq!(
            fam[0].facets(),
            &[VertexSet::singleton(0), VertexSet::singleton(1)]
        );

        // a = (2, 2): each factor has the two facets missing one vertex of
        // its own block (in lexicographic order)
        let fam = join_example_family(&[2, 2]).unwrap();
        let all = VertexSet::full(4);
        assert_eq!(fam[0].facets(), &[all.without(1), all.without(0)]);
        assert_eq!(fam[1].facets(), &[all.without(3), all.without(2)]);

        for (i, &ai) in [3usize, 3].iter().enumerate() {
            let fam = join_example_family(&[3, 3]).unwrap();
            assert_eq!(leray_number(&fam[i], GF2).unwrap(), ai - 1, "factor {i}");
        }

        assert_eq!(join_example_family(&[2, 0]).unwrap_err(), Error::EmptyBlock);
    }

    #[test]
    fn join_family_intersection_and_union() {
        // a = (2,2,2): L(∩) = 3, L(∪) = 5
        let fam = join_example_family(&[2, 2, 2]).unwrap();
        let inter = fam[1..].iter().try_fold(fam[0].clone(), |acc, x| acc.intersection(x)).unwrap();
        let union = fam[1..].iter().try_fold(fam[0].clone(), |acc, x| acc.union(x)).unwrap();
        assert_eq!(leray_number(&inter, GF2).unwrap(), 3);
        assert_eq!(leray_number(&union, GF2).unwrap(), 5);
    }

    #[test]
    fn lm_extremes() {
        let full_skeleton = random_lm(5, 2, Probability::ONE, 42).unwrap();
        assert_eq!(full_skeleton.faces_of_dim(2).len(), 10);
        assert_eq!(full_skeleton.dim(), Some(2));

        let lower = random_lm(5, 2, Probability::ZERO, 42).unwrap();
        assert_eq!(lower.dim(), Some(1));
        assert_eq!(lower.faces_of_dim(1).len(), 10);

        // d = 0: the (-1)-skeleton {∅} plus random vertices
        let verts = random_lm(4, 0, Probability::ONE, 1).unwrap();
        assert!(!verts.is_full_simplex());
        assert_eq!(verts.faces_of_dim(0).len(), 4);
        let none = random_lm(4, 0, Probability::ZERO, 1).unwrap();
        assert_eq!(none.facets(), &[VertexSet::EMPTY]);

        assert_eq!(
            random_lm(4, 4, Probability::ONE, 0).unwrap_err(),
            Error::SkeletonDim { d: 4, n: 4 }
        );
    }

    #[test]
    fn lm_determinism() {
        let a = random_lm(7, 2, p("0.37"), 12345).unwrap();
        let b = random_lm(7, 2, p("0.37"), 12345).unwrap();
        assert_eq!(a, b);
        let c = random_lm(7, 2, p("0.37"), 12346).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn flag_extremes_and_determinism() {
        assert!(random_flag(5, Probability::ONE, 9).unwrap().is_full_simplex());

        let isolated = random_flag(5, Probability::ZERO, 9).unwrap();
        assert_eq!(isolated.facets().len(), 5);
        assert_eq!(leray_number(&isolated, GF2).unwrap(), 1);

        let a = random_flag(8, p("1/2"), 77).unwrap();
        let b = random_flag(8, p("1/2"), 77).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn flag_complexes_are_flag() {
        // every minimal non-face of a clique complex is an edge
        for seed in 0..20 {
            let x = random_flag(7, p("0.5"), seed).unwrap();
            for nf in x.minimal_non_faces().unwrap() {
                assert_eq!(nf.len(), 2, "seed={seed} nonface={nf}");
            }
        }
    }

    #[test]
    fn generated_complexes_are_downward_closed() {
        for seed in 0..10 {
            let x = random_lm(6, 2, p("0.4"), seed).unwrap();
            for f in x.facets() {
                for s in f.subsets() {
                    assert!(x.member(s), "seed={seed} face={s}");
                }
            }
            let h = reduced_betti(&x, GF2);
            assert_eq!(h.get(-1), 0, "seed={seed}");
        }
    }
}

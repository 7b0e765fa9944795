//! Shared helpers for the integration suites: an independent integer
//! Smith-form homology oracle, naive re-implementations of the set
//! operations straight from their definitions, and seeded corpus builders.
//!
//! Everything here deliberately avoids the library's own elimination code:
//! ranks come from integer diagonalization with checked arithmetic, and
//! face manipulations enumerate all subsets.

#![allow(dead_code)]

use leray_core::{
    random_flag, random_lm, FieldSpec, Probability, SimplicialComplex, SplitMix64, VertexSet,
};

pub fn vs(vertices: &[usize]) -> VertexSet {
    VertexSet::from_vertices(vertices.iter().copied())
}

pub fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
    let sets: Vec<VertexSet> = facets.iter().map(|f| vs(f)).collect();
    SimplicialComplex::from_facets(n, &sets).unwrap()
}

/// Diagonalize an integer matrix by row and column operations, returning
/// the nonzero diagonal entries. The divisibility chain is not enforced:
/// the counts used downstream (number of nonzero entries, number divisible
/// by a given prime) are invariant without it.
pub fn integer_diagonal(mut m: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut diag = Vec::new();
    let mut top = 0;
    while top < rows && top < cols {
        // smallest nonzero entry of the working submatrix as pivot
        let mut pivot: Option<(usize, usize)> = None;
        for r in top..rows {
            for c in top..cols {
                if m[r][c] != 0
                    && pivot.is_none_or(|(pr, pc)| m[r][c].abs() < m[pr][pc].abs())
                {
                    pivot = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        m.swap(top, pr);
        for row in &mut m {
            row.swap(top, pc);
        }
        let mut dirty = true;
        while dirty {
            dirty = false;
            for r in top + 1..rows {
                if m[r][top] != 0 {
                    let q = m[r][top] / m[top][top];
                    for c in top..cols {
                        m[r][c] = m[r][c].checked_sub(q.checked_mul(m[top][c]).unwrap()).unwrap();
                    }
                    if m[r][top] != 0 {
                        // remainder smaller than the pivot: promote it
                        m.swap(top, r);
                        dirty = true;
                    }
                }
            }
            for c in top + 1..cols {
                if m[top][c] != 0 {
                    let q = m[top][c] / m[top][top];
                    for row in m.iter_mut().skip(top) {
                        row[c] = row[c].checked_sub(q.checked_mul(row[top]).unwrap()).unwrap();
                    }
                    if m[top][c] != 0 {
                        for row in &mut m {
                            row.swap(top, c);
                        }
                        dirty = true;
                    }
                }
            }
        }
        diag.push(m[top][top]);
        top += 1;
    }
    diag
}

/// Dense boundary matrix of the augmented chain complex as plain integers,
/// built independently of the library's sparse construction.
pub fn dense_boundary(x: &SimplicialComplex, d: i64) -> Vec<Vec<i128>> {
    if x.is_void() || d < 0 {
        return Vec::new();
    }
    let targets = x.faces_of_dim(d - 1);
    let sources = x.faces_of_dim(d);
    let mut m = vec![vec![0i128; sources.len()]; targets.len()];
    for (col, sigma) in sources.iter().enumerate() {
        for (k, v) in sigma.vertices().enumerate() {
            let tau = sigma.without(v);
            let row = targets.iter().position(|t| *t == tau).unwrap();
            m[row][col] = if k % 2 == 0 { 1 } else { -1 };
        }
    }
    m
}

/// Reduced Betti number in one degree over `field`, from integer Smith
/// diagonals and universal coefficients:
/// over Q it is the free rank; over GF(p) the free rank plus the p-divisible
/// diagonal counts of the two adjacent boundary maps.
pub fn oracle_betti(x: &SimplicialComplex, degree: i64, field: FieldSpec) -> usize {
    if x.is_void() || degree < -1 {
        return 0;
    }
    let faces = x.num_faces_of_dim(degree);
    if faces == 0 {
        return 0;
    }
    let d_here = integer_diagonal(dense_boundary(x, degree));
    let d_up = integer_diagonal(dense_boundary(x, degree + 1));
    let free = faces - d_here.len() - d_up.len();
    match field {
        FieldSpec::Q => free,
        FieldSpec::GF(p) => {
            let divisible =
                |diag: &[i128]| diag.iter().filter(|&&e| e % p as i128 == 0).count();
            free + divisible(&d_here) + divisible(&d_up)
        }
    }
}

/// All degrees with a nonzero oracle Betti number, as (degree, value).
pub fn oracle_betti_all(x: &SimplicialComplex, field: FieldSpec) -> Vec<(i64, usize)> {
    let Some(dim) = x.dim() else { return Vec::new() };
    (-1..=dim)
        .map(|d| (d, oracle_betti(x, d, field)))
        .filter(|&(_, v)| v != 0)
        .collect()
}

/// Textbook dense elimination over GF(p), independent of the library's
/// rank code.
pub fn naive_rank_gf(matrix: &[Vec<i64>], p: u64) -> usize {
    let rows = matrix.len();
    let cols = if rows == 0 { 0 } else { matrix[0].len() };
    let mut m: Vec<Vec<u64>> = matrix
        .iter()
        .map(|row| row.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| m[r][c] % p != 0) else { continue };
        m.swap(rank, pr);
        for r in 0..rows {
            if r != rank && m[r][c] % p != 0 {
                // scale row r by pivot and subtract a multiple: no inverses
                let a = m[rank][c] % p;
                let b = m[r][c] % p;
                for cc in 0..cols {
                    m[r][cc] = (m[r][cc] * a % p + (p - b % p) * (m[rank][cc] % p) % p) % p;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Faces of `x` by brute subset enumeration, for comparison with
/// `all_faces`.
pub fn naive_faces(x: &SimplicialComplex) -> Vec<VertexSet> {
    let n = x.ground_size();
    (0..1u64 << n)
        .map(|b| VertexSet::from_bits(b as u32))
        .filter(|s| x.member(*s))
        .collect()
}

/// Link by its definition: faces disjoint from `a` whose union with `a`
/// is again a face.
pub fn naive_link_faces(x: &SimplicialComplex, a: VertexSet) -> Vec<VertexSet> {
    naive_faces(x)
        .into_iter()
        .filter(|s| s.is_disjoint(a) && x.member(s.union(a)))
        .collect()
}

/// One deterministic mixed corpus of random complexes: alternating
/// skeleton-plus-random-faces and flag models, sizes 2..=max_n.
pub fn corpus(seed: u64, count: usize, max_n: usize) -> Vec<SimplicialComplex> {
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = 2 + rng.below(max_n as u64 - 1) as usize;
        let trial_seed = rng.next_u64();
        let den = 16;
        let num = rng.below(den + 1);
        let p = Probability::new(num, den).unwrap();
        let x = if out.len() % 2 == 0 {
            let d = 1 + rng.below(n as u64 - 1) as usize;
            random_lm(n, d, p, trial_seed).unwrap()
        } else {
            random_flag(n, p, trial_seed).unwrap()
        };
        out.push(x);
    }
    out
}

/// Corpus filtered to complexes that are not full simplices (so their
/// ideals are nonzero); keeps drawing until `count` survive.
pub fn proper_corpus(seed: u64, count: usize, max_n: usize) -> Vec<SimplicialComplex> {
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::with_capacity(count);
    let mut parity = 0usize;
    while out.len() < count {
        let n = 2 + rng.below(max_n as u64 - 1) as usize;
        let trial_seed = rng.next_u64();
        let den = 16;
        let num = rng.below(den + 1);
        let p = Probability::new(num, den).unwrap();
        let x = if parity % 2 == 0 {
            let d = 1 + rng.below(n as u64 - 1) as usize;
            random_lm(n, d, p, trial_seed).unwrap()
        } else {
            random_flag(n, p, trial_seed).unwrap()
        };
        parity += 1;
        if !x.is_full_simplex() {
            out.push(x);
        }
    }
    out
}

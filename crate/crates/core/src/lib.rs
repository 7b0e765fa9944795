//! Exact computations with simplicial complexes: reduced homology over
//! finite prime fields and the rationals, Leray numbers, Stanley-Reisner
//! graded Betti numbers, homological bounds for intersections and unions,
//! and nerve/Helly invariants of set families.
//!
//! All arithmetic is exact; no floating point is used anywhere.

pub mod algebra;
pub mod bounds;
pub mod complex;
pub mod error;
pub mod generators;
pub mod homology;
pub mod io;
pub mod leray;
pub mod linalg;

pub use algebra::{
    betti_table, check_terai, check_theorem_mono, check_theorem_proj, complex_of_ideal,
    minimal_nonfaces, projective_dimension_quotient, regularity, BettiTable,
    MonomialIdealInput, PairCheck, PairCheckValues, TeraiValues,
};
pub use bounds::{
    e1_page, helly_number, mayer_vietoris_check, nerve, theorem1_rhs, verify_theorem1,
    verify_theorem2, E1Page, MayerVietorisReport, SetFamily, TheoremOneReport,
    TheoremTwoReport,
};
pub use complex::{SimplicialComplex, Status, VertexSet, MAX_GROUND};
pub use error::{Error, Result};
pub use generators::{join_example_family, random_flag, random_lm, Probability, SplitMix64};
pub use homology::{reduced_betti, reduced_betti_in_degree, relative_betti, BettiVector};
pub use leray::{
    check_p, leray_number, leray_number_detailed, leray_number_via_links,
    leray_number_via_links_detailed, LerayComputation, LinkVanishing,
};
pub use linalg::{FieldSpec, SparseMatrix};

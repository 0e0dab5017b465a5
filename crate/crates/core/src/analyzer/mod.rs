//! Certificates for SCB questions: feasibility at a given `gamma`,
//! existence of a positive SCB, and the optimal value `gamma_sup`.

pub mod bounds;
pub mod check;
pub mod exists;
pub mod gamma_sup;
pub mod report;

pub use bounds::{
    cmp_algebraic, crossover, dominance_at, select_root, simple_root_bound, verify_against_poly, Crossover,
    DominanceSnapshot, PolyCheck, SimpleRootBound, SupOptions,
};
pub use check::{
    check_scb, infeasible_by_complex_dominance, CheckOptions, ComplexDominanceCert, FeasibleCert, InfeasibleCert,
    Verdict,
};
pub use exists::{scb_exists, Existence};
pub use gamma_sup::{gamma_sup, Candidates, GammaSup, GammaSupResult, Mechanism};

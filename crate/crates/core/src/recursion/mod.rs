//! The sequences `mu_n(gamma)` and `tau_n`: exact and interval evaluation,
//! numerators as polynomials in `gamma`, closed forms and tail bounds.

pub mod closed_form;
pub mod export;
pub mod gamma_poly;
pub mod interval_seq;
pub mod sequence;
pub mod tail;

pub use closed_form::{
    char_roots, classify, closed_form, closed_form_at, closed_form_escalating, closed_form_tau, ClosedForm,
    Dominance, GammaPoint, RootTerm,
};
pub use gamma_poly::{mu_numerator, mu_numerators};
pub use interval_seq::{escalating_sign_scan, eval_mu_interval, interval_sign_scan, IntervalScan, IntervalSeq};
pub use sequence::{eval_mu, eval_tau, exact_sign_scan, mu_prefix, ExactScan, ExactSeq};
pub use tail::{tail_certificate, TailCertificate, TailTerm};

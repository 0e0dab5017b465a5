//! Upper-bound candidates for `gamma_sup`.
//!
//! A simple positive root `g` of some `mu_n` bounds `gamma_sup` from above:
//! `mu_n` changes sign there. A switch of the dominant root from positive
//! real to a complex pair is the other source: past it the signs of `mu_n`
//! oscillate.

use std::cmp::Ordering;

use num_traits::{One, Zero};
use serde::Serialize;

use super::check::CheckOptions;
use crate::arith::{rat, rational::pow2, Rational};
use crate::error::{Error, Result};
use crate::methods::{Method, RootSelector};
use crate::poly::{isolate_real_roots, real_roots::smallest_positive_root, IntegerPoly, RealRootEnclosure};
use crate::recursion::{char_roots, classify, mu_numerators, Dominance};

#[derive(Clone, Debug)]
pub struct SimpleRootBound {
    pub root: RealRootEnclosure,
    /// index of the term whose numerator has the root
    pub n: usize,
}

/// Exact order of two real algebraic numbers.
pub fn cmp_algebraic(a: &RealRootEnclosure, b: &RealRootEnclosure) -> Ordering {
    let (mut a, mut b) = (a.clone(), b.clone());
    loop {
        if a.hi < b.lo {
            return Ordering::Less;
        }
        if b.hi < a.lo {
            return Ordering::Greater;
        }
        if a.is_root_of(&b.poly.to_rational()) {
            return Ordering::Equal;
        }
        if a.is_exact() && b.is_exact() {
            return a.lo.cmp(&b.lo);
        }
        a = a.bisect();
        b = b.bisect();
    }
}

/// Smallest positive simple root over the numerators of `mu_1..=mu_n_scan`.
pub fn simple_root_bound(m: &Method, n_scan: usize) -> Option<SimpleRootBound> {
    let mut best: Option<SimpleRootBound> = None;
    for (n, num) in mu_numerators(m, n_scan).into_iter().enumerate().skip(1) {
        if num.deg() < 1 {
            continue;
        }
        let Some((f1, _)) = num.squarefree_decomposition().into_iter().find(|(_, mult)| *mult == 1) else {
            continue;
        };
        let Some(root) = smallest_positive_root(&f1.to_integer_primitive()) else { continue };
        let better = match &best {
            None => true,
            Some(b) => cmp_algebraic(&root, &b.root) == Ordering::Less,
        };
        if better {
            best = Some(SimpleRootBound { root, n });
        }
    }
    best
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DominanceSnapshot {
    #[serde(serialize_with = "ser_rat")]
    pub gamma: Rational,
    pub class: &'static str,
    /// `(re, im, modulus)` approximations of the roots
    pub roots: Vec<(f64, f64, f64)>,
}

/// The dominant root switches from positive real (at `lo`) to a complex
/// pair (at `hi`) somewhere in `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Crossover {
    #[serde(serialize_with = "ser_rat")]
    pub lo: Rational,
    #[serde(serialize_with = "ser_rat")]
    pub hi: Rational,
    pub below: DominanceSnapshot,
    pub above: DominanceSnapshot,
}

fn ser_rat<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

fn class_name(d: Dominance) -> &'static str {
    match d {
        Dominance::NoRoots => "no-roots",
        Dominance::PositiveReal(_) => "positive-real",
        Dominance::NegativeReal(_) => "negative-real",
        Dominance::ComplexPair(_) => "complex-pair",
        Dominance::Undetermined => "undetermined",
    }
}

const CLASS_START_BITS: u64 = 128;
const CLASS_CAP_BITS: u64 = 8192;

/// Dominance class at `gamma` with its root approximations.
pub fn dominance_at(m: &Method, gamma: &Rational) -> Result<DominanceSnapshot> {
    let mut bits = CLASS_START_BITS;
    let mut last = None;
    while bits <= CLASS_CAP_BITS {
        if let Some(roots) = char_roots(m, gamma, bits)? {
            let d = classify(&roots);
            let approx = roots
                .iter()
                .map(|r| {
                    let (re, im) = r.approx();
                    (re, im, r.modulus().to_f64())
                })
                .collect();
            let snap = DominanceSnapshot { gamma: gamma.clone(), class: class_name(d), roots: approx };
            if d != Dominance::Undetermined {
                return Ok(snap);
            }
            last = Some(snap);
        }
        bits *= 2;
    }
    Ok(last.unwrap_or(DominanceSnapshot { gamma: gamma.clone(), class: "undetermined", roots: Vec::new() }))
}

/// First switch from positive-real to complex-pair dominance on the ladder
/// `2^-10, ..., 2^20`, narrowed by bisection to width at most `width`.
pub fn crossover(m: &Method, width: &Rational) -> Result<Option<Crossover>> {
    let mut prev: Option<DominanceSnapshot> = None;
    for e in -10..=20 {
        let g = pow2(e);
        let cur = dominance_at(m, &g)?;
        if let Some(p) = &prev {
            if p.class == "positive-real" && cur.class == "complex-pair" {
                return bisect_crossover(m, p.clone(), cur, width).map(Some);
            }
        }
        prev = Some(cur);
    }
    Ok(None)
}

fn bisect_crossover(
    m: &Method,
    mut below: DominanceSnapshot,
    mut above: DominanceSnapshot,
    width: &Rational,
) -> Result<Crossover> {
    'outer: while &(&above.gamma - &below.gamma) > width {
        let w = &above.gamma - &below.gamma;
        let half = &below.gamma + &w * rat(1, 2);
        // a midpoint where the moduli tie exactly is nudged off-center
        let tries = std::iter::once(half.clone()).chain((3..12).map(|j| &half + &w * pow2(-j)));
        for g in tries {
            let s = dominance_at(m, &g)?;
            match s.class {
                "positive-real" => {
                    below = s;
                    continue 'outer;
                }
                "complex-pair" => {
                    above = s;
                    continue 'outer;
                }
                _ => {}
            }
        }
        break;
    }
    Ok(Crossover { lo: below.gamma.clone(), hi: above.gamma.clone(), below, above })
}

/// Pick the root named by `selector` among the real roots of `poly`.
pub fn select_root(poly: &IntegerPoly, selector: RootSelector) -> Result<RealRootEnclosure> {
    let roots = isolate_real_roots(poly);
    let pick = match selector {
        RootSelector::Smallest => roots.first(),
        RootSelector::Unique => (roots.len() == 1).then(|| &roots[0]),
        RootSelector::SmallerOfTwo => (roots.len() == 2).then(|| &roots[0]),
    };
    pick.cloned().ok_or_else(|| {
        Error::RootEnclosure(format!("{selector:?} does not apply: {} real roots", roots.len()))
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "result")]
pub enum PolyCheck {
    Confirmed {
        /// the selected root, refined
        #[serde(serialize_with = "ser_rat")]
        root_lo: Rational,
        #[serde(serialize_with = "ser_rat")]
        root_hi: Rational,
    },
    Refuted {
        reason: String,
    },
}

impl PolyCheck {
    pub fn confirmed(&self) -> bool {
        matches!(self, PolyCheck::Confirmed { .. })
    }
}

/// Does `[lo, hi]` contain the root of `poly` picked by `selector`?
pub fn verify_against_poly(lo: &Rational, hi: &Rational, poly: &IntegerPoly, selector: RootSelector) -> PolyCheck {
    let root = match select_root(poly, selector) {
        Ok(r) => r,
        Err(e) => return PolyCheck::Refuted { reason: e.to_string() },
    };
    let inside = root.cmp_rational(lo) != Ordering::Less && root.cmp_rational(hi) != Ordering::Greater;
    if !inside {
        return PolyCheck::Refuted { reason: format!("root in [{}, {}] lies outside [{lo}, {hi}]", root.lo, root.hi) };
    }
    let w = (hi - lo).max(Rational::one() / Rational::from_integer(1_000_000_000_000i64.into()));
    let r = root.refine(&w);
    PolyCheck::Confirmed { root_lo: r.lo, root_hi: r.hi }
}

/// Options shared by the bound searches.
#[derive(Clone, Debug)]
pub struct SupOptions {
    /// target width of the `gamma_sup` enclosure
    pub tol: Rational,
    /// numerators of `mu_1..=mu_n_scan` are searched for simple roots
    pub n_scan: usize,
    pub check: CheckOptions,
}

impl Default for SupOptions {
    fn default() -> SupOptions {
        SupOptions { tol: rat(1, 1_000_000_000), n_scan: 20, check: CheckOptions::default() }
    }
}

impl SupOptions {
    pub fn is_valid(&self) -> bool {
        self.tol > Rational::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::methods::{catalog, known_value, KnownValue};

    #[test]
    fn ab_simple_roots() {
        for (name, v) in [("ab1", rat(1, 1)), ("ab2", rat(4, 9)), ("ab3", rat(84, 529))] {
            let b = simple_root_bound(&catalog(name).unwrap(), 20).unwrap();
            assert_eq!(b.n, 2, "{name}");
            assert_eq!(b.root.cmp_rational(&v), Ordering::Equal, "{name}");
        }
        assert!(simple_root_bound(&catalog("bdf1").unwrap(), 20).is_none());
    }

    #[test]
    fn bdf3_simple_root_at_six() {
        let b = simple_root_bound(&catalog("bdf3").unwrap(), 20).unwrap();
        assert_eq!(b.n, 6);
        let Some(KnownValue::RootOf { poly, selector, .. }) = known_value("bdf3") else { panic!() };
        let target = select_root(&poly, selector).unwrap();
        assert_eq!(cmp_algebraic(&b.root, &target), Ordering::Equal);
    }

    #[test]
    fn bdf3_crossover_at_five_sixths() {
        let c = crossover(&catalog("bdf3").unwrap(), &rat(1, 10_000_000)).unwrap().unwrap();
        assert!(c.lo <= rat(5, 6) && rat(5, 6) <= c.hi, "{} {}", c.lo, c.hi);
        assert_eq!(c.below.class, "positive-real");
    }

    #[test]
    fn bdf2_crossover_at_half() {
        let c = crossover(&catalog("bdf2").unwrap(), &rat(1, 1_000_000)).unwrap().unwrap();
        assert!(c.lo <= rat(1, 2) && rat(1, 2) <= c.hi);
    }

    #[test]
    fn poly_check_rejects_wrong_interval() {
        let Some(KnownValue::RootOf { poly, selector, .. }) = known_value("bdf4") else { panic!() };
        assert!(verify_against_poly(&rat(48, 100), &rat(49, 100), &poly, selector).confirmed());
        assert!(!verify_against_poly(&rat(49, 100), &rat(50, 100), &poly, selector).confirmed());
        assert!(!verify_against_poly(&rat(0, 1), &rat(1, 1), &poly, RootSelector::SmallerOfTwo).confirmed());
    }
}

//! Closed form of `mu_n(gamma)` through the roots of the characteristic
//! polynomial `P = C z^k - sum_j E_j z^(k-j)` of the recursion.
//!
//! Zero roots of `P` are stripped, leaving `Q` of degree `k'`. The recursion
//! has order `k'` and is homogeneous from `n = L + 1` on, `L` being the last
//! index with `b_L != 0`. With `s = max(0, L + 1 - k')` and
//! `nu_t = mu_{s+t}`, the generating function is
//! `sum_t nu_t z^-t = z N(z) / Q(z)` where
//! `N(z) = sum_{m<k'} z^(k'-1-m) sum_{i<=m} q_i nu_{m-i}` (`q_i` descending),
//! so `nu_t` is the sum of residues of `N(z) z^t / Q(z)`:
//! `nu_t = sum_roots sum_{l<mult} A_l C(t, l) rho^(t-l)`.
//! For a simple root `A_0 = N(rho) / Q'(rho)` and `c = A_0 rho^(-s)` is the
//! coefficient in `mu_n = sum c_j rho_j^n`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::interval_seq::IntervalSeq;
use super::sequence::ExactSeq;
use crate::arith::{rational::pow2, ComplexBox, Interval, Precision, Rational};
use crate::error::{Error, Result};
use crate::methods::Method;
use crate::poly::{enclose_family_roots, enclose_roots_at, ComplexRootEnclosure, RealRootEnclosure};

/// Where `gamma` sits: a rational, or a real algebraic number given by an
/// isolating enclosure.
#[derive(Clone, Debug)]
pub enum GammaPoint {
    Rational(Rational),
    Algebraic(RealRootEnclosure),
}

impl GammaPoint {
    pub fn describe(&self) -> String {
        match self {
            GammaPoint::Rational(q) => q.to_string(),
            GammaPoint::Algebraic(e) => format!("root of {:?} in [{}, {}]", e.poly, e.lo, e.hi),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RootTerm {
    pub root: ComplexRootEnclosure,
    /// `A_0..A_{mult-1}`
    pub coeffs: Vec<ComplexBox>,
    /// index of the conjugate term, for non-real roots
    pub conjugate: Option<usize>,
}

impl RootTerm {
    pub fn multiplicity(&self) -> usize {
        self.root.multiplicity
    }

    pub fn modulus(&self) -> Interval {
        self.root.modulus()
    }
}

#[derive(Clone, Debug)]
pub struct ClosedForm {
    pub shift: usize,
    pub zero_roots: usize,
    pub terms: Vec<RootTerm>,
    pub prec: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    /// `k' = 0`: the sequence vanishes from `shift` on
    NoRoots,
    PositiveReal(usize),
    NegativeReal(usize),
    /// index of the member with positive imaginary part
    ComplexPair(usize),
    /// moduli not separated at this precision (or genuinely tied)
    Undetermined,
}

fn binomial(t: usize, l: usize) -> BigInt {
    if l > t {
        return BigInt::zero();
    }
    let mut r = BigInt::one();
    for i in 0..l {
        r = r * BigInt::from(t - i) / BigInt::from(i + 1);
    }
    r
}

/// Taylor coefficients `p^(i)(z)/i!`, `i < count`, by repeated synthetic
/// division. `c` is ascending.
fn taylor(c: &[ComplexBox], z: &ComplexBox, count: usize) -> Vec<ComplexBox> {
    let p = z.prec();
    let mut a = c.to_vec();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        if a.is_empty() {
            out.push(ComplexBox::zero(p));
            continue;
        }
        let n = a.len() - 1;
        let mut q = vec![ComplexBox::zero(p); n];
        let mut acc = a[n].clone();
        for i in (0..n).rev() {
            q[i] = acc.clone();
            acc = a[i].add(&acc.mul(z));
        }
        out.push(acc);
        a = q;
    }
    out
}

impl ClosedForm {
    /// `mu_n` for `n >= shift`.
    pub fn value(&self, n: usize) -> ComplexBox {
        assert!(n >= self.shift, "closed form starts at n = {}", self.shift);
        let t = n - self.shift;
        let mut acc = ComplexBox::zero(self.prec);
        for term in &self.terms {
            for (l, a) in term.coeffs.iter().enumerate() {
                if l > t {
                    break;
                }
                let b = Interval::from_int(binomial(t, l), self.prec);
                let rp = term.root.enclosure.pow((t - l) as u32);
                acc = acc.add(&a.mul(&rp).scale(&b));
            }
        }
        acc
    }

    /// `c_j` with `mu_n = sum c_j rho_j^n`, for a simple root.
    pub fn coefficient(&self, j: usize) -> Option<ComplexBox> {
        let term = &self.terms[j];
        if term.multiplicity() != 1 {
            return None;
        }
        let r = &term.root.enclosure;
        let rs = r.pow(self.shift as u32);
        term.coeffs[0].div(&rs).ok()
    }

    pub fn dominance(&self) -> Dominance {
        if self.terms.is_empty() {
            return Dominance::NoRoots;
        }
        classify(&self.terms.iter().map(|t| t.root.clone()).collect::<Vec<_>>())
    }

    /// True iff some root of maximal modulus is certified and its
    /// coefficients exclude zero.
    pub fn dominant_coefficient_nonzero(&self, j: usize) -> bool {
        self.terms[j].coeffs.last().is_some_and(|a| !a.contains_zero())
    }
}

/// Strict dominance among certified root enclosures.
pub fn classify(roots: &[ComplexRootEnclosure]) -> Dominance {
    if roots.is_empty() {
        return Dominance::NoRoots;
    }
    let mods: Vec<Interval> = roots.iter().map(|r| r.modulus()).collect();
    for (j, r) in roots.iter().enumerate() {
        if !r.real && r.enclosure.im.lo().is_negative() {
            continue;
        }
        let partner = if r.real {
            None
        } else {
            let c = r.enclosure.conj();
            roots.iter().position(|o| !o.real && o.enclosure.intersects(&c))
        };
        let beats_all = (0..roots.len())
            .filter(|&i| i != j && Some(i) != partner)
            .all(|i| mods[i].hi() < mods[j].lo());
        if !beats_all {
            continue;
        }
        return if !r.real {
            Dominance::ComplexPair(j)
        } else if r.enclosure.re.lo().is_positive() {
            Dominance::PositiveReal(j)
        } else if r.enclosure.re.hi().is_negative() {
            Dominance::NegativeReal(j)
        } else {
            Dominance::Undetermined
        };
    }
    Dominance::Undetermined
}

/// Last index with `b_n != 0`.
fn last_forcing(m: &Method) -> usize {
    (0..=m.k).rev().find(|&n| !m.b[n].is_zero()).unwrap_or(0)
}

/// Roots of `mu`'s characteristic polynomial at a rational `gamma`, zero
/// roots removed, at `prec` bits; `None` if not separated.
pub fn char_roots(m: &Method, gamma: &Rational, prec: u64) -> Result<Option<Vec<ComplexRootEnclosure>>> {
    let p = m.char_poly_mu(gamma)?.strip_zero_roots();
    Ok(enclose_roots_at(&p, prec))
}

fn pair_conjugates(terms: &mut [RootTerm]) -> Result<()> {
    let n = terms.len();
    for j in 0..n {
        if terms[j].root.real {
            continue;
        }
        let c = terms[j].root.enclosure.conj();
        let hits: Vec<usize> =
            (0..n).filter(|&i| i != j && !terms[i].root.real && terms[i].root.enclosure.intersects(&c)).collect();
        if hits.len() != 1 {
            return Err(Error::Inconclusive("conjugate pairing ambiguous".into()));
        }
        terms[j].conjugate = Some(hits[0]);
    }
    Ok(())
}

/// Residue coefficients for one root from the Taylor data of `N` and `Q`.
fn residue_coeffs(nc: &[ComplexBox], qc: &[ComplexBox], z: &ComplexBox, mult: usize) -> Result<Vec<ComplexBox>> {
    let nt = taylor(nc, z, mult);
    let qt = taylor(qc, z, 2 * mult);
    let q = &qt[mult..];
    if q[0].contains_zero() {
        return Err(Error::Inconclusive("derivative at a root not separated from zero".into()));
    }
    let mut h: Vec<ComplexBox> = Vec::with_capacity(mult);
    for i in 0..mult {
        let mut acc = nt[i].clone();
        for r in 1..=i {
            acc = acc.sub(&q[r].mul(&h[i - r]));
        }
        h.push(acc.div(&q[0])?);
    }
    Ok((0..mult).map(|l| h[mult - 1 - l].clone()).collect())
}

/// `N` (ascending) from descending `Q` coefficients and `nu_0..nu_{k'-1}`.
fn numerator(q_desc: &[ComplexBox], nu: &[ComplexBox]) -> Vec<ComplexBox> {
    let kp = q_desc.len() - 1;
    let p = q_desc[0].prec();
    let mut out = vec![ComplexBox::zero(p); kp];
    for mm in 0..kp {
        let mut acc = ComplexBox::zero(p);
        for i in 0..=mm {
            acc = acc.add(&q_desc[i].mul(&nu[mm - i]));
        }
        out[kp - 1 - mm] = acc;
    }
    out
}

/// Closed form at `gamma`, one attempt at `prec` bits. Multiple roots are
/// rejected unless `allow_multiple` (rational `gamma` only).
/// Failures that more precision may cure are `Error::Inconclusive`.
pub fn closed_form_at(m: &Method, gamma: &GammaPoint, prec: u64, allow_multiple: bool) -> Result<ClosedForm> {
    match gamma {
        GammaPoint::Rational(g) => rational_closed_form(m, g, prec, allow_multiple),
        GammaPoint::Algebraic(e) => algebraic_closed_form(m, e, prec),
    }
}

fn rational_closed_form(m: &Method, g: &Rational, prec: u64, allow_multiple: bool) -> Result<ClosedForm> {
    let full = m.char_poly_mu(g)?;
    let zero_roots = full.zero_root_multiplicity();
    let q = full.strip_zero_roots();
    let kp = q.deg();
    let shift = (last_forcing(m) + 1).saturating_sub(kp);
    if kp == 0 {
        return Ok(ClosedForm { shift: last_forcing(m) + 1, zero_roots, terms: Vec::new(), prec });
    }
    let roots = enclose_roots_at(&q, prec).ok_or_else(|| Error::Inconclusive("roots not separated".into()))?;
    if !allow_multiple && roots.iter().any(|r| r.multiplicity > 1) {
        return Err(Error::ClosedFormUnavailable("multiple roots; use direct evaluation".into()));
    }
    let mut seq = ExactSeq::new(m, g)?;
    seq.advance_to(shift);
    let vals: Vec<Rational> = (0..=2 * m.k)
        .map(|_| {
            let t = seq.next_term();
            seq.value(&t)
        })
        .collect();
    let qb: Vec<ComplexBox> = q.ascending().iter().map(|a| ComplexBox::from_rational(a, prec)).collect();
    let q_desc: Vec<ComplexBox> = qb.iter().rev().cloned().collect();
    let nu: Vec<ComplexBox> = vals[..kp].iter().map(|v| ComplexBox::from_rational(v, prec)).collect();
    let nc = numerator(&q_desc, &nu);
    let mut terms = Vec::with_capacity(roots.len());
    for r in roots {
        let coeffs = residue_coeffs(&nc, &qb, &r.enclosure, r.multiplicity)?;
        terms.push(RootTerm { root: r, coeffs, conjugate: None });
    }
    pair_conjugates(&mut terms)?;
    let cf = ClosedForm { shift, zero_roots, terms, prec };
    for (t, v) in vals.iter().enumerate() {
        let b = cf.value(shift + t);
        if !b.re.contains_rational(v) || !b.im.contains_zero() {
            return Err(Error::ClosedFormUnavailable(format!("reconstruction failed at n = {}", shift + t)));
        }
    }
    Ok(cf)
}

fn algebraic_closed_form(m: &Method, e: &RealRootEnclosure, prec: u64) -> Result<ClosedForm> {
    let pp = m.char_param_poly();
    let zero_roots = pp.coeffs().iter().take_while(|c| e.is_root_of(c)).count();
    if zero_roots > 0 {
        return Err(Error::ClosedFormUnavailable("zero root at an algebraic gamma; pass it as a rational".into()));
    }
    if e.is_root_of(&pp.discriminant()) {
        return Err(Error::ClosedFormUnavailable("multiple roots; use direct evaluation".into()));
    }
    let narrow = e.refine(&pow2(-(prec as i64)));
    let gi = narrow.to_interval(prec);
    let ip = pp.at_interval(&gi);
    if ip.lc().contains_zero() {
        return Err(Error::Inconclusive("leading coefficient not separated from zero".into()));
    }
    let rep = pp.at(&narrow.midpoint());
    let roots = enclose_family_roots(&ip, &rep).ok_or_else(|| Error::Inconclusive("roots not separated".into()))?;
    let kp = ip.degree();
    let shift = (last_forcing(m) + 1).saturating_sub(kp);
    let mut seq = IntervalSeq::with_interval(m, &gi, prec)?;
    for _ in 0..shift {
        seq.next_term();
    }
    let vals: Vec<Interval> = (0..=2 * m.k).map(|_| seq.next_term()).collect();
    let qb: Vec<ComplexBox> = ip.coeffs().iter().map(|a| ComplexBox::real(a.clone())).collect();
    let q_desc: Vec<ComplexBox> = qb.iter().rev().cloned().collect();
    let nu: Vec<ComplexBox> = vals[..kp].iter().map(|v| ComplexBox::real(v.clone())).collect();
    let nc = numerator(&q_desc, &nu);
    let mut terms = Vec::with_capacity(roots.len());
    for r in roots {
        let coeffs = residue_coeffs(&nc, &qb, &r.enclosure, 1)?;
        terms.push(RootTerm { root: r, coeffs, conjugate: None });
    }
    pair_conjugates(&mut terms)?;
    let cf = ClosedForm { shift, zero_roots, terms, prec };
    for (t, v) in vals.iter().enumerate() {
        let b = cf.value(shift + t);
        if !b.re.intersects(v) || !b.im.contains_zero() {
            return Err(Error::ClosedFormUnavailable(format!("reconstruction failed at n = {}", shift + t)));
        }
    }
    Ok(cf)
}

/// [`closed_form_at`] with precision doubling from `start` up to `cap`.
pub fn closed_form_escalating(
    m: &Method,
    gamma: &GammaPoint,
    start: Precision,
    cap: Precision,
    allow_multiple: bool,
) -> Result<ClosedForm> {
    let mut prec = start;
    loop {
        match closed_form_at(m, gamma, prec.bits(), allow_multiple) {
            Err(Error::Inconclusive(why)) => match prec.escalate(cap) {
                Some(p) => prec = p,
                None => {
                    return Err(Error::PrecisionExhausted { cap_digits: cap.get(), context: why });
                }
            },
            other => return other,
        }
    }
}

/// Closed form of `mu_n(gamma)` with all roots simple.
pub fn closed_form(m: &Method, gamma: &GammaPoint, prec: Precision) -> Result<ClosedForm> {
    closed_form_escalating(m, gamma, prec, Precision::default_cap(), false)
}

/// Closed form of `tau_n = mu_n(0)`.
pub fn closed_form_tau(m: &Method, prec: Precision) -> Result<ClosedForm> {
    closed_form_escalating(m, &GammaPoint::Rational(Rational::zero()), prec, Precision::default_cap(), true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::methods::catalog;

    fn p64() -> Precision {
        Precision::digits(40).unwrap()
    }

    #[test]
    fn ebdf3_tau_coefficients_are_one() {
        let cf = closed_form_tau(&catalog("ebdf3").unwrap(), p64()).unwrap();
        assert_eq!(cf.shift, 1);
        assert_eq!(cf.terms.len(), 3);
        for j in 0..3 {
            let c = cf.coefficient(j).unwrap();
            assert!(c.re.contains_rational(&rat(1, 1)) && c.im.contains_zero(), "{c:?}");
        }
        assert!(matches!(cf.dominance(), Dominance::PositiveReal(_)));
    }

    #[test]
    fn bdf1_single_term() {
        let m = catalog("bdf1").unwrap();
        let cf = closed_form(&m, &GammaPoint::Rational(rat(1, 1)), p64()).unwrap();
        assert_eq!(cf.terms.len(), 1);
        let c = cf.coefficient(0).unwrap();
        assert!(c.re.contains_rational(&rat(1, 2)));
        assert!(cf.terms[0].root.enclosure.re.contains_rational(&rat(1, 2)));
    }

    #[test]
    fn bdf2_double_root_at_half() {
        let m = catalog("bdf2").unwrap();
        let g = GammaPoint::Rational(rat(1, 2));
        assert!(matches!(closed_form(&m, &g, p64()), Err(Error::ClosedFormUnavailable(_))));
        let cf = closed_form_escalating(&m, &g, p64(), p64(), true).unwrap();
        assert_eq!(cf.terms.len(), 1);
        assert_eq!(cf.terms[0].multiplicity(), 2);
        // mu_n = (n + 1) / 2^(n+1)
        let v = cf.value(10);
        assert!(v.re.contains_rational(&rat(11, 2048)));
    }

    #[test]
    fn ab1_eventually_zero() {
        let m = catalog("ab1").unwrap();
        let cf = closed_form(&m, &GammaPoint::Rational(rat(1, 1)), p64()).unwrap();
        assert!(cf.terms.is_empty());
        assert_eq!(cf.dominance(), Dominance::NoRoots);
    }

    #[test]
    fn complex_dominance_past_bdf4_bound() {
        let m = catalog("bdf4").unwrap();
        let cf = closed_form(&m, &GammaPoint::Rational(rat(1, 2)), p64()).unwrap();
        match cf.dominance() {
            Dominance::ComplexPair(j) => assert!(cf.dominant_coefficient_nonzero(j)),
            d => panic!("{d:?}"),
        }
        let cf = closed_form(&m, &GammaPoint::Rational(rat(2, 5)), p64()).unwrap();
        assert!(matches!(cf.dominance(), Dominance::PositiveReal(_)));
    }

    #[test]
    fn taylor_of_cubic() {
        // (z-1)^3 = z^3 - 3z^2 + 3z - 1 at z = 1: 0, 0, 0, 1
        let c: Vec<ComplexBox> = [-1i64, 3, -3, 1].iter().map(|&x| ComplexBox::from_rational(&rat(x, 1), 64)).collect();
        let t = taylor(&c, &ComplexBox::one(64), 4);
        assert!(t[0].contains_zero() && t[2].contains_zero());
        assert!(t[3].re.contains_rational(&rat(1, 1)));
    }
}

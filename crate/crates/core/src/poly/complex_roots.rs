//! Certified enclosures of all complex roots.
//!
//! Approximations come from Aberth iteration (first in `f64`, then polished
//! at the working precision). They are certified with the Gerschgorin
//! inclusion for the Weierstrass corrections: with
//! `W_i = p(z_i) / (lc * prod_{j != i} (z_i - z_j))`, every root lies in a
//! disk of center `z_i - W_i` and radius `(n - 1)|W_i|`, and a disk disjoint
//! from the others holds exactly one root. All of this is evaluated in
//! interval arithmetic, so it also covers polynomials whose coefficients
//! are only known to lie in intervals.

use num_complex::Complex64;
use num_rational::BigRational;

use super::RationalPoly;
use crate::arith::{ComplexBox, Float, Interval};
use crate::error::{Error, Result};

/// Polynomial with real interval coefficients, ascending order.
#[derive(Clone, Debug)]
pub struct IntervalPoly {
    c: Vec<Interval>,
}

impl IntervalPoly {
    pub fn from_ascending(c: Vec<Interval>) -> IntervalPoly {
        IntervalPoly { c }
    }

    pub fn from_rational(p: &RationalPoly, prec: u64) -> IntervalPoly {
        IntervalPoly { c: p.ascending().iter().map(|a| Interval::from_rational(a, prec)).collect() }
    }

    pub fn coeffs(&self) -> &[Interval] {
        &self.c
    }

    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> &Interval {
        self.c.last().expect("non-empty interval polynomial")
    }

    pub fn eval_box(&self, z: &ComplexBox) -> ComplexBox {
        let p = z.prec();
        let mut acc = ComplexBox::zero(p);
        for a in self.c.iter().rev() {
            acc = acc.mul(z).add(&ComplexBox::real(a.clone()));
        }
        acc
    }

    pub fn eval_interval(&self, x: &Interval) -> Interval {
        let mut acc = Interval::zero(x.prec());
        for a in self.c.iter().rev() {
            acc = acc.mul(x).add(a);
        }
        acc
    }
}

#[derive(Clone, Debug)]
pub struct ComplexRootEnclosure {
    pub enclosure: ComplexBox,
    pub multiplicity: usize,
    /// certified real; the imaginary part is then exactly `[0, 0]`
    pub real: bool,
}

impl ComplexRootEnclosure {
    pub fn modulus(&self) -> Interval {
        if self.real {
            self.enclosure.re.abs()
        } else {
            self.enclosure.abs()
        }
    }

    pub fn approx(&self) -> (f64, f64) {
        self.enclosure.to_c64()
    }

    pub fn contains_f64(&self, re: f64, im: f64) -> bool {
        self.enclosure.contains_f64(re, im)
    }
}

/// Aberth iteration in double precision on descending coefficients.
pub fn aberth_f64(desc: &[f64]) -> Vec<Complex64> {
    let n = desc.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let lc = desc[0];
    let a: Vec<f64> = desc.iter().map(|x| x / lc).collect();
    // Fujiwara-style radius for the starting circle
    let radius = (1..=n)
        .map(|i| a[i].abs().powf(1.0 / i as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4))
        .collect();
    let eval = |x: Complex64| {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for &c in &a {
            dp = dp * x + p;
            p = p * x + c;
        }
        (p, dp)
    };
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| 1.0 / (z[i] - z[j])).sum();
            let w = ratio / (1.0 - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                moved = moved.max(w.norm() / z[i].norm().max(1e-300));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

fn point_box(re: f64, im: f64, prec: u64) -> ComplexBox {
    ComplexBox::from_f64(re, im, prec)
}

fn mid(b: &ComplexBox) -> ComplexBox {
    let p = b.prec();
    ComplexBox::new(Interval::point(b.re.midpoint(), p), Interval::point(b.im.midpoint(), p))
}

/// Polish approximations at `prec` bits with Aberth steps on `p`.
pub fn polish(p: &RationalPoly, z: &[ComplexBox], prec: u64) -> Vec<ComplexBox> {
    let n = z.len();
    let mut z: Vec<ComplexBox> = z.iter().map(|b| mid(&b.with_precision(prec))).collect();
    let dp = p.derivative();
    let tol = Float::from_parts(1.into(), -(prec as i64) + 8);
    for _ in 0..200 {
        let mut converged = true;
        for i in 0..n {
            let pv = mid(&p.eval_box(&z[i]));
            if pv.re.lo().is_zero() && pv.im.lo().is_zero() {
                continue;
            }
            let dv = mid(&dp.eval_box(&z[i]));
            let Ok(ratio) = pv.div(&dv) else { continue };
            let ratio = mid(&ratio);
            let mut s = ComplexBox::zero(prec);
            let mut ok = true;
            for j in 0..n {
                if j != i {
                    match z[i].sub(&z[j]).recip() {
                        Ok(r) => s = s.add(&mid(&r)),
                        Err(_) => ok = false,
                    }
                }
            }
            if !ok {
                // coincident approximations: nudge apart
                let eps = Interval::point(Float::from_parts(1.into(), -(prec as i64) / 4), prec);
                z[i] = ComplexBox::new(z[i].re.add(&eps), z[i].im.add(&eps));
                converged = false;
                continue;
            }
            let denom = ComplexBox::one(prec).sub(&mid(&ratio.mul(&s)));
            let Ok(w) = ratio.div(&denom) else { continue };
            let w = mid(&w);
            z[i] = mid(&z[i].sub(&w));
            let scale = z[i].re.mag().max(z[i].im.mag()).max(Float::one());
            let step = w.re.mag().max(w.im.mag());
            if step > tol.mul_exact(&scale) {
                converged = false;
            }
        }
        if converged {
            break;
        }
    }
    z
}

/// Certify simple roots of an interval polynomial near `approx`.
/// Returns `None` if the inclusion disks overlap, a divisor straddles zero,
/// or a real/non-real classification is ambiguous.
pub fn certify(ip: &IntervalPoly, approx: &[ComplexBox]) -> Option<Vec<ComplexRootEnclosure>> {
    let n = ip.degree();
    if n == 0 || approx.len() != n || ip.lc().contains_zero() {
        return None;
    }
    let prec = ip.lc().prec();
    let mut boxes = Vec::with_capacity(n);
    for i in 0..n {
        let zi = &approx[i];
        let pv = ip.eval_box(zi);
        let mut d = ComplexBox::real(ip.lc().clone());
        for (j, zj) in approx.iter().enumerate() {
            if j != i {
                d = d.mul(&zi.sub(zj));
            }
        }
        let w = pv.div(&d).ok()?;
        let center = zi.sub(&w);
        let r = w.abs().hi().mul(&Float::from_int((n - 1) as i64), prec, crate::arith::Round::Up);
        let pad = Interval::new(r.neg(), r, prec);
        boxes.push(ComplexBox::new(center.re.add(&pad), center.im.add(&pad)));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if boxes[i].intersects(&boxes[j]) {
                return None;
            }
        }
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let c = boxes[i].conj();
        let hits: Vec<usize> = (0..n).filter(|&j| c.intersects(&boxes[j])).collect();
        let real = if hits == [i] {
            true
        } else if !hits.contains(&i) {
            false
        } else {
            return None;
        };
        let enclosure = if real {
            ComplexBox::real(boxes[i].re.clone())
        } else {
            boxes[i].clone()
        };
        out.push(ComplexRootEnclosure { enclosure, multiplicity: 1, real });
    }
    Some(out)
}

/// Approximations for the roots of a (square-free) rational polynomial.
pub fn approximate_roots(p: &RationalPoly, prec: u64) -> Vec<ComplexBox> {
    let z0 = aberth_f64(&p.to_f64_desc());
    let start: Vec<ComplexBox> = z0.iter().map(|z| point_box(z.re, z.im, prec)).collect();
    polish(p, &start, prec)
}

const START_BITS: u64 = 128;
const MAX_BITS: u64 = 1 << 17;

/// One attempt at `prec` bits: enclosures of all distinct roots of `p`
/// with multiplicities, or `None` if they could not be separated.
pub fn enclose_roots_at(p: &RationalPoly, prec: u64) -> Option<Vec<ComplexRootEnclosure>> {
    if p.deg() == 0 {
        return Some(Vec::new());
    }
    let mut all = Vec::new();
    for (f, m) in p.squarefree_decomposition() {
        let z = approximate_roots(&f, prec);
        let encs = certify(&IntervalPoly::from_rational(&f, prec), &z)?;
        all.extend(encs.into_iter().map(|mut e| {
            e.multiplicity = m;
            e
        }));
    }
    pairwise_disjoint(&all).then_some(all)
}

/// Enclosures of all complex roots of `p`, one per distinct root, with
/// multiplicities summing to the degree.
pub fn enclose_all_roots(p: &RationalPoly, target_width: &BigRational) -> Result<Vec<ComplexRootEnclosure>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.deg() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let mut prec = START_BITS;
    while prec <= MAX_BITS {
        if let Some(all) = enclose_roots_at(p, prec) {
            if all.iter().all(|e| e.enclosure.width().cmp_rational(target_width).is_le()) {
                return Ok(all);
            }
        }
        prec *= 2;
    }
    Err(Error::RootEnclosure(format!("could not separate the roots of {p:?}")))
}

/// Enclosures of the roots of every polynomial in an interval family, each
/// root certified simple. `rep` is a rational member used to seed the
/// approximations.
pub fn enclose_family_roots(ip: &IntervalPoly, rep: &RationalPoly) -> Option<Vec<ComplexRootEnclosure>> {
    let prec = ip.lc().prec();
    let z = approximate_roots(rep, prec);
    certify(ip, &z)
}

fn pairwise_disjoint(encs: &[ComplexRootEnclosure]) -> bool {
    for i in 0..encs.len() {
        for j in (i + 1)..encs.len() {
            if encs[i].enclosure.intersects(&encs[j].enclosure) {
                return false;
            }
        }
    }
    true
}

use std::fmt;

use num_rational::BigRational;

use super::float::Float;
use super::interval::Interval;
use crate::error::{Error, Result};

/// Rectangle `re + i*im` in the complex plane.
#[derive(Clone, PartialEq, Eq)]
pub struct ComplexBox {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexBox {
    pub fn new(re: Interval, im: Interval) -> ComplexBox {
        ComplexBox { re, im }
    }

    pub fn real(re: Interval) -> ComplexBox {
        let p = re.prec();
        ComplexBox { re, im: Interval::zero(p) }
    }

    pub fn from_rational(q: &BigRational, prec: u64) -> ComplexBox {
        ComplexBox::real(Interval::from_rational(q, prec))
    }

    pub fn from_f64(re: f64, im: f64, prec: u64) -> ComplexBox {
        ComplexBox {
            re: Interval::point(Float::from_f64(re).expect("finite"), prec),
            im: Interval::point(Float::from_f64(im).expect("finite"), prec),
        }
    }

    pub fn zero(prec: u64) -> ComplexBox {
        ComplexBox::real(Interval::zero(prec))
    }

    pub fn one(prec: u64) -> ComplexBox {
        ComplexBox::real(Interval::one(prec))
    }

    pub fn prec(&self) -> u64 {
        self.re.prec().max(self.im.prec())
    }

    pub fn conj(&self) -> ComplexBox {
        ComplexBox { re: self.re.clone(), im: -&self.im }
    }

    pub fn neg(&self) -> ComplexBox {
        ComplexBox { re: -&self.re, im: -&self.im }
    }

    pub fn add(&self, o: &ComplexBox) -> ComplexBox {
        ComplexBox { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &ComplexBox) -> ComplexBox {
        ComplexBox { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn mul(&self, o: &ComplexBox) -> ComplexBox {
        ComplexBox {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn scale(&self, s: &Interval) -> ComplexBox {
        ComplexBox { re: self.re.mul(s), im: self.im.mul(s) }
    }

    /// `|z|^2` with outward rounding.
    pub fn abs2(&self) -> Interval {
        self.re.sqr().add(&self.im.sqr())
    }

    pub fn abs(&self) -> Interval {
        self.abs2().sqrt().expect("abs2 is non-negative")
    }

    pub fn div(&self, o: &ComplexBox) -> Result<ComplexBox> {
        let d = o.abs2();
        if d.contains_zero() {
            return Err(Error::DivisionByZeroInterval);
        }
        let n = self.mul(&o.conj());
        Ok(ComplexBox { re: n.re.div(&d)?, im: n.im.div(&d)? })
    }

    pub fn recip(&self) -> Result<ComplexBox> {
        ComplexBox::one(self.prec()).div(self)
    }

    pub fn pow(&self, n: u32) -> ComplexBox {
        let mut result = ComplexBox::one(self.prec());
        let mut b = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        result
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn excludes_real_axis(&self) -> bool {
        !self.im.contains_zero()
    }

    pub fn intersects(&self, o: &ComplexBox) -> bool {
        self.re.intersects(&o.re) && self.im.intersects(&o.im)
    }

    pub fn is_subset(&self, o: &ComplexBox) -> bool {
        self.re.is_subset(&o.re) && self.im.is_subset(&o.im)
    }

    pub fn hull(&self, o: &ComplexBox) -> ComplexBox {
        ComplexBox { re: self.re.hull(&o.re), im: self.im.hull(&o.im) }
    }

    pub fn contains_f64(&self, re: f64, im: f64) -> bool {
        self.re.contains_float(&Float::from_f64(re).unwrap())
            && self.im.contains_float(&Float::from_f64(im).unwrap())
    }

    /// Larger side length, rounded up.
    pub fn width(&self) -> Float {
        self.re.width().max(self.im.width())
    }

    pub fn to_c64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    pub fn with_precision(&self, prec: u64) -> ComplexBox {
        ComplexBox { re: self.re.with_precision(prec), im: self.im.with_precision(prec) }
    }

    pub fn display_digits(&self, digits: usize) -> String {
        format!("{} + i{}", self.re.display_digits(digits), self.im.display_digits(digits))
    }
}

impl fmt::Debug for ComplexBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_digits(12))
    }
}

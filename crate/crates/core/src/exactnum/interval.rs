//! Certified interval arithmetic with exact rational endpoints.
//!
//! Operations are exact (no rounding), so enclosures are always rigorous.
//! Long iterations call `compress`, which rounds endpoints outward onto a
//! dyadic grid to keep denominators bounded.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl fmt::Debug for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl RatInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi, "inverted interval");
        RatInterval { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        RatInterval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn zero() -> Self {
        Self::point(BigRational::zero())
    }

    pub fn from_f64_guess(x: f64, radius: f64) -> Self {
        let lo = BigRational::from_float(x - radius).unwrap_or_else(BigRational::zero);
        let hi = BigRational::from_float(x + radius).unwrap_or_else(BigRational::zero);
        RatInterval::new(lo.min(hi.clone()), hi)
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains_interval(&self, other: &Self) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn strictly_contains(&self, other: &Self) -> bool {
        self.lo < other.lo && other.hi < self.hi
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !(self.hi < other.lo || other.hi < self.lo)
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = self.lo.clone().max(other.lo.clone());
        let hi = self.hi.clone().min(other.hi.clone());
        if lo <= hi {
            Some(RatInterval::new(lo, hi))
        } else {
            None
        }
    }

    pub fn hull(&self, other: &Self) -> Self {
        RatInterval::new(
            self.lo.clone().min(other.lo.clone()),
            self.hi.clone().max(other.hi.clone()),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        RatInterval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &Self) -> Self {
        RatInterval::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn neg(&self) -> Self {
        RatInterval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let c = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = c[0].clone();
        let mut hi = c[0].clone();
        for v in &c[1..] {
            if *v < lo {
                lo = v.clone();
            }
            if *v > hi {
                hi = v.clone();
            }
        }
        RatInterval::new(lo, hi)
    }

    pub fn mul_scalar(&self, s: &BigRational) -> Self {
        if s.is_negative() {
            RatInterval::new(&self.hi * s, &self.lo * s)
        } else {
            RatInterval::new(&self.lo * s, &self.hi * s)
        }
    }

    /// Reciprocal; caller must ensure the interval excludes zero.
    pub fn recip(&self) -> Self {
        assert!(!self.contains_zero(), "reciprocal of interval containing 0");
        RatInterval::new(BigRational::one() / &self.hi, BigRational::one() / &self.lo)
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.recip())
    }

    pub fn abs(&self) -> Self {
        if self.contains_zero() {
            let hi = self.hi.clone().max(-self.lo.clone());
            RatInterval::new(BigRational::zero(), hi)
        } else if self.hi.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Largest magnitude of any point in the interval.
    pub fn mag_upper(&self) -> BigRational {
        self.lo.abs().max(self.hi.abs())
    }

    /// Smallest magnitude of any point in the interval (0 if it straddles).
    pub fn mag_lower(&self) -> BigRational {
        if self.contains_zero() {
            BigRational::zero()
        } else {
            self.lo.abs().min(self.hi.abs())
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        if k == 0 {
            return Self::point(BigRational::one());
        }
        if k % 2 == 0 && self.contains_zero() {
            // even power of straddling interval: [0, max^k]
            let m = self.mag_upper();
            let mut hi = BigRational::one();
            for _ in 0..k {
                hi *= &m;
            }
            return RatInterval::new(BigRational::zero(), hi);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// sqrt enclosure of a nonnegative interval (clamps tiny negative lo to 0).
    pub fn sqrt(&self, bits: u32) -> Self {
        let lo = if self.lo.is_negative() {
            BigRational::zero()
        } else {
            rat_sqrt_lower(&self.lo, bits)
        };
        let hi = rat_sqrt_upper(&self.hi.clone().max(BigRational::zero()), bits);
        RatInterval::new(lo, hi)
    }

    /// Rounds endpoints outward to denominators 2^bits.
    pub fn compress(&self, bits: u32) -> Self {
        RatInterval::new(floor_dyadic(&self.lo, bits), ceil_dyadic(&self.hi, bits))
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.mid())
    }
}

pub fn rat_to_f64(r: &BigRational) -> f64 {
    let f = r.to_string();
    // Avoid precision traps on huge ints: use ratio of f64 conversions with
    // scaling when the parts are large.
    let n = r.numer();
    let d = r.denom();
    let nb = n.bits() as i64;
    let db = d.bits() as i64;
    if nb < 900 && db < 900 {
        use num_traits::ToPrimitive;
        let nf = n.to_f64().unwrap_or(f64::NAN);
        let df = d.to_f64().unwrap_or(f64::NAN);
        let v = nf / df;
        if v.is_finite() {
            return v;
        }
    }
    // Shift both down so they fit.
    let shift = (nb.max(db) - 512).max(0) as u64;
    use num_traits::ToPrimitive;
    let nf = (n >> shift).to_f64().unwrap_or(f64::NAN);
    let df = (d >> shift).to_f64().unwrap_or(f64::NAN);
    let v = nf / df;
    if v.is_finite() {
        v
    } else {
        let _ = f;
        f64::NAN
    }
}

/// Largest dyadic m/2^bits <= r.
pub fn floor_dyadic(r: &BigRational, bits: u32) -> BigRational {
    let scaled = r * BigRational::from_integer(BigInt::one() << bits);
    let fl = scaled.floor().to_integer();
    BigRational::new(fl, BigInt::one() << bits)
}

/// Smallest dyadic m/2^bits >= r.
pub fn ceil_dyadic(r: &BigRational, bits: u32) -> BigRational {
    let scaled = r * BigRational::from_integer(BigInt::one() << bits);
    let cl = scaled.ceil().to_integer();
    BigRational::new(cl, BigInt::one() << bits)
}

/// Dyadic lower bound on sqrt(r), r >= 0, with 2^-bits accuracy.
pub fn rat_sqrt_lower(r: &BigRational, bits: u32) -> BigRational {
    assert!(!r.is_negative());
    if r.is_zero() {
        return BigRational::zero();
    }
    // integer sqrt of floor(r * 4^bits): s^2 <= r*4^bits => (s/2^bits)^2 <= r
    let scaled = (r * BigRational::from_integer(BigInt::one() << (2 * bits)))
        .floor()
        .to_integer();
    let s = scaled.sqrt();
    BigRational::new(s, BigInt::one() << bits)
}

/// Dyadic upper bound on sqrt(r).
pub fn rat_sqrt_upper(r: &BigRational, bits: u32) -> BigRational {
    assert!(!r.is_negative());
    if r.is_zero() {
        return BigRational::zero();
    }
    let scaled = (r * BigRational::from_integer(BigInt::one() << (2 * bits)))
        .ceil()
        .to_integer();
    let s = scaled.sqrt();
    let s = if &s * &s < scaled { s + 1 } else { s };
    BigRational::new(s, BigInt::one() << bits)
}

/// An axis-aligned rectangle in the complex plane with rational corners.
#[derive(Clone, PartialEq, Eq)]
pub struct ComplexBox {
    pub re: RatInterval,
    pub im: RatInterval,
}

impl fmt::Debug for ComplexBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?} i)", self.re, self.im)
    }
}

impl ComplexBox {
    pub fn new(re: RatInterval, im: RatInterval) -> Self {
        ComplexBox { re, im }
    }

    pub fn point(re: BigRational, im: BigRational) -> Self {
        ComplexBox {
            re: RatInterval::point(re),
            im: RatInterval::point(im),
        }
    }

    pub fn real_point(re: BigRational) -> Self {
        Self::point(re, BigRational::zero())
    }

    pub fn zero() -> Self {
        Self::real_point(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::real_point(BigRational::one())
    }

    pub fn width(&self) -> BigRational {
        self.re.width().max(self.im.width())
    }

    pub fn mid(&self) -> (BigRational, BigRational) {
        (self.re.mid(), self.im.mid())
    }

    pub fn add(&self, o: &Self) -> Self {
        ComplexBox::new(self.re.add(&o.re), self.im.add(&o.im))
    }

    pub fn sub(&self, o: &Self) -> Self {
        ComplexBox::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }

    pub fn neg(&self) -> Self {
        ComplexBox::new(self.re.neg(), self.im.neg())
    }

    pub fn conj(&self) -> Self {
        ComplexBox::new(self.re.clone(), self.im.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        ComplexBox::new(re, im)
    }

    pub fn mul_scalar(&self, s: &BigRational) -> Self {
        ComplexBox::new(self.re.mul_scalar(s), self.im.mul_scalar(s))
    }

    /// |z|^2 enclosure.
    pub fn norm_sq(&self) -> RatInterval {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    /// Reciprocal; requires the box to exclude 0.
    pub fn recip(&self) -> Self {
        let n = self.norm_sq();
        assert!(!n.contains_zero(), "reciprocal of box containing 0");
        let inv = n.recip();
        ComplexBox::new(self.re.mul(&inv), self.im.neg().mul(&inv))
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.recip())
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = ComplexBox::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn contains_point(&self, re: &BigRational, im: &BigRational) -> bool {
        self.re.contains(re) && self.im.contains(im)
    }

    pub fn intersects(&self, o: &Self) -> bool {
        self.re.intersects(&o.re) && self.im.intersects(&o.im)
    }

    pub fn contains_box(&self, o: &Self) -> bool {
        self.re.contains_interval(&o.re) && self.im.contains_interval(&o.im)
    }

    pub fn strictly_contains(&self, o: &Self) -> bool {
        self.re.strictly_contains(&o.re) && self.im.strictly_contains(&o.im)
    }

    pub fn intersect(&self, o: &Self) -> Option<Self> {
        Some(ComplexBox::new(
            self.re.intersect(&o.re)?,
            self.im.intersect(&o.im)?,
        ))
    }

    pub fn compress(&self, bits: u32) -> Self {
        ComplexBox::new(self.re.compress(bits), self.im.compress(bits))
    }

    pub fn is_real_line(&self) -> bool {
        self.im.lo.is_zero() && self.im.hi.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat::rat;

    #[test]
    fn interval_mul_signs() {
        let a = RatInterval::new(rat(-1, 1), rat(2, 1));
        let b = RatInterval::new(rat(-3, 1), rat(1, 2));
        let c = a.mul(&b);
        assert_eq!(c.lo, rat(-6, 1));
        assert_eq!(c.hi, rat(3, 1));
    }

    #[test]
    fn sqrt_bounds_bracket() {
        let two = RatInterval::point(rat(2, 1));
        let s = two.sqrt(30);
        let mid = s.mid();
        let sq = &mid * &mid;
        assert!((sq - rat(2, 1)).abs() < rat(1, 1 << 20));
        assert!(s.lo.clone() * s.lo.clone() <= rat(2, 1));
        assert!(s.hi.clone() * s.hi.clone() >= rat(2, 1));
    }

    #[test]
    fn complex_mul_unit_circle() {
        // (3/5 + 4/5 i)^2 has modulus 1
        let z = ComplexBox::point(rat(3, 5), rat(4, 5));
        let z2 = z.pow(2);
        assert!(z2.norm_sq().contains(&rat(1, 1)));
        assert_eq!(z2.re.mid(), rat(-7, 25));
        assert_eq!(z2.im.mid(), rat(24, 25));
    }

    #[test]
    fn compress_is_outward() {
        let a = RatInterval::new(rat(1, 3), rat(2, 3));
        let c = a.compress(8);
        assert!(c.lo <= a.lo && a.hi <= c.hi);
        assert!(c.width() <= a.width() + rat(1, 128));
    }
}

//! Dense univariate polynomials over `BigRational`, with the field
//! operations (division, extended gcd, modular arithmetic) that integer
//! polynomials cannot provide. Used for number-field element arithmetic
//! modulo a defining polynomial.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::intpoly::IntPoly;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QPoly {
    /// Coefficients, lowest degree first; last entry nonzero.
    pub coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        QPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        QPoly::new(vec![c])
    }

    pub fn x() -> Self {
        QPoly::new(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn from_int(p: &IntPoly) -> Self {
        QPoly::new(
            p.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn to_int_primitive(&self) -> IntPoly {
        IntPoly::from_rational_coeffs(&self.coeffs).primitive()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading();
        QPoly::new(self.coeffs.iter().map(|c| c / &lc).collect())
    }

    pub fn neg(&self) -> Self {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }

    pub fn mul_scalar(&self, s: &BigRational) -> Self {
        QPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() || self.degree() < d.degree() {
            return (QPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        let n = self.degree();
        let lc = d.leading();
        let mut q = vec![BigRational::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let c = &rem[k + dd] / &lc;
            q[k] = c.clone();
            if !c.is_zero() {
                for i in 0..=dd {
                    let t = &c * &d.coeffs[i];
                    rem[k + i] -= t;
                }
            }
        }
        (QPoly::new(q), QPoly::new(rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns (g, s, t) monic with s*self + t*o = g.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (QPoly::one(), QPoly::zero());
        let (mut t0, mut t1) = (QPoly::zero(), QPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lc = r0.leading();
        (
            r0.mul_scalar(&(BigRational::one() / &lc)),
            s0.mul_scalar(&(BigRational::one() / &lc)),
            t0.mul_scalar(&(BigRational::one() / &lc)),
        )
    }

    /// Inverse of self modulo m (m irreducible over Q, self nonzero mod m).
    pub fn inv_mod(&self, m: &Self) -> Self {
        let (g, s, _) = self.ext_gcd(m);
        assert!(g.degree() == 0 && !g.is_zero(), "not invertible mod m");
        s.rem(m)
    }

    pub fn mulmod(&self, o: &Self, m: &Self) -> Self {
        self.mul(o).rem(m)
    }

    /// self^e mod m by binary powering.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut acc = QPoly::one();
        let mut base = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(&base, m);
            }
            base = base.mulmod(&base, m);
            e >>= 1;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return QPoly::zero();
        }
        QPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigRational::from_integer((i as i64 + 1).into()))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_interval(&self, x: &super::interval::RatInterval) -> super::interval::RatInterval {
        use super::interval::RatInterval;
        let mut acc = RatInterval::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&RatInterval::point(c.clone()));
        }
        acc
    }

    /// Complex interval Horner evaluation.
    pub fn eval_box(&self, z: &super::interval::ComplexBox) -> super::interval::ComplexBox {
        use super::interval::ComplexBox;
        let mut acc = ComplexBox::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(z).add(&ComplexBox::real_point(c.clone()));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat::{rat, rat_int};

    #[test]
    fn div_rem_and_gcd() {
        // (x^2-1) / (x-1) = x+1
        let a = QPoly::new(vec![rat_int(-1), rat_int(0), rat_int(1)]);
        let b = QPoly::new(vec![rat_int(-1), rat_int(1)]);
        let (q, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(q, QPoly::new(vec![rat_int(1), rat_int(1)]));
        let g = a.gcd(&b);
        assert_eq!(g, b.monic());
    }

    #[test]
    fn inverse_in_number_field() {
        // Q(i): m = x^2+1, inverse of x is -x
        let m = QPoly::new(vec![rat_int(1), rat_int(0), rat_int(1)]);
        let x = QPoly::x();
        let inv = x.inv_mod(&m);
        assert_eq!(inv, QPoly::new(vec![rat_int(0), rat_int(-1)]));
        // inverse of 1+2i is (1-2i)/5
        let z = QPoly::new(vec![rat_int(1), rat_int(2)]);
        let inv = z.inv_mod(&m);
        assert_eq!(inv, QPoly::new(vec![rat(1, 5), rat(-2, 5)]));
    }
}

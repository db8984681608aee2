//! Dense univariate polynomials over arbitrary-precision integers.
//!
//! Coefficients are stored lowest degree first; the representation is
//! canonical: empty for the zero polynomial, nonzero leading coefficient
//! otherwise.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use super::interval::RatInterval;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    /// Coefficients, lowest degree first. Invariant: last entry nonzero.
    pub coeffs: Vec<BigInt>,
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn x() -> Self {
        IntPoly::new(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Clears denominators of a rational coefficient vector (lowest first).
    pub fn from_rational_coeffs(coeffs: &[BigRational]) -> Self {
        let mut lcm = BigInt::one();
        for c in coeffs {
            lcm = lcm.lcm(c.denom());
        }
        IntPoly::new(
            coeffs
                .iter()
                .map(|c| c.numer() * (&lcm / c.denom()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports degree 0 by convention of callers
    /// that must handle it explicitly.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn neg(&self) -> Self {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn mul_scalar(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Multiplies by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        IntPoly::new(out)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Interval Horner evaluation over a real interval.
    pub fn eval_interval(&self, x: &RatInterval) -> RatInterval {
        let mut acc = RatInterval::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc
                .mul(x)
                .add(&RatInterval::point(BigRational::from_integer(c.clone())));
        }
        acc
    }

    /// gcd of all coefficients (nonnegative); zero polynomial has content 0.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().sign() == Sign::Minus {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Exact division; panics if not divisible (internal use only).
    pub fn div_exact(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        let n = self.degree();
        assert!(n >= dd, "degree too small in exact division");
        let mut q = vec![BigInt::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let (c, r) = rem[k + dd].div_rem(&d.coeffs[dd]);
            assert!(r.is_zero(), "inexact division");
            q[k] = c.clone();
            if !c.is_zero() {
                for i in 0..=dd {
                    rem[k + i] -= &c * &d.coeffs[i];
                }
            }
        }
        assert!(rem.iter().all(|c| c.is_zero()), "nonzero remainder");
        IntPoly::new(q)
    }

    /// Pseudo-remainder: returns prem(self, d) with the standard scaling
    /// lc(d)^(deg self - deg d + 1).
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        assert!(!d.is_zero());
        let mut r = self.clone();
        let dd = d.degree();
        let lc = d.leading();
        while !r.is_zero() && r.degree() >= dd {
            let k = r.degree() - dd;
            let rl = r.leading();
            r = r.mul_scalar(&lc).sub(&d.mul_scalar(&rl).shift_up(k));
        }
        r
    }

    /// Polynomial gcd over Z, primitive with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        let c = self.content().gcd(&other.content());
        a.mul_scalar(&c)
    }

    /// Square-free part: self / gcd(self, self'), primitive.
    pub fn square_free_part(&self) -> Self {
        if self.is_zero() || self.degree() == 0 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            self.primitive()
        } else {
            self.primitive().div_exact(&g.primitive()).primitive()
        }
    }

    /// Yun's square-free decomposition: returns [(g_1, 1), (g_2, 2), ...]
    /// with self = c * prod g_i^i, g_i square-free pairwise coprime,
    /// omitting trivial (constant) parts.
    pub fn square_free_decomposition(&self) -> Vec<(IntPoly, usize)> {
        let f = self.primitive();
        if f.degree() == 0 {
            return vec![];
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        if a0.degree() == 0 {
            return vec![(f, 1)];
        }
        let mut out = vec![];
        let mut b = f.div_exact(&a0).primitive();
        let mut c = df.div_exact(&a0).primitive();
        // Track scaling: work with primitive parts throughout; multiplicity
        // structure is unaffected by content.
        let mut i = 1usize;
        loop {
            let d = c.sub(&b.derivative());
            let g = b.gcd(&d);
            if g.degree() > 0 {
                out.push((g.clone(), i));
            }
            if g.degree() == b.degree() {
                // b / g is constant: done after this factor
                let bn = b.div_exact(&g);
                debug_assert!(bn.degree() == 0);
                break;
            }
            b = b.div_exact(&g).primitive();
            c = d.div_exact(&g).primitive();
            i += 1;
            if b.degree() == 0 {
                break;
            }
        }
        out
    }

    /// Resultant of two integer polynomials via the subresultant PRS.
    pub fn resultant(&self, other: &Self) -> BigInt {
        resultant_prs(self, other)
    }

    /// Reversed coefficients: x^deg * p(1/x). Trailing zero coefficients of
    /// p become leading zeros and are stripped, so the result encodes the
    /// nonzero roots' reciprocals.
    pub fn reverse(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        IntPoly::new(c)
    }

    /// p(-x).
    pub fn flip_sign(&self) -> Self {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Cauchy root bound: all complex roots have |z| <= 1 + max|a_i/a_d|.
    pub fn cauchy_bound(&self) -> BigRational {
        assert!(!self.is_zero());
        let lead = self.leading().abs();
        let mut m = BigInt::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let a = c.abs();
            if a > m {
                m = a;
            }
        }
        BigRational::one() + BigRational::new(m, lead)
    }

    /// Number of sign variations of the Sturm chain evaluated at x.
    fn sturm_variations(chain: &[IntPoly], x: &BigRational) -> usize {
        let mut last = 0i8;
        let mut var = 0usize;
        for p in chain {
            let v = p.eval_rat(x);
            let s = if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            };
            if s != 0 {
                if last != 0 && s != last {
                    var += 1;
                }
                last = s;
            }
        }
        var
    }

    /// Sturm chain of a (square-free preferred) polynomial.
    pub fn sturm_chain(&self) -> Vec<IntPoly> {
        let mut chain = vec![self.primitive(), self.derivative().primitive()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() || chain[n - 1].degree() == 0 && n >= 2 {
                if chain[n - 1].is_zero() {
                    chain.pop();
                }
                break;
            }
            let r = chain[n - 2].pseudo_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            // Normalize sign: pseudo_rem scales by lc^k which may flip sign.
            let lc = chain[n - 1].leading();
            let k = chain[n - 2].degree() + 1 - chain[n - 1].degree();
            let flip = lc.is_negative() && k % 2 == 1;
            let mut next = r.primitive().neg();
            if flip {
                next = next.neg();
            }
            chain.push(next);
        }
        chain
    }

    /// Counts distinct real roots in the half-open interval (lo, hi].
    pub fn count_real_roots_between(
        chain: &[IntPoly],
        lo: &BigRational,
        hi: &BigRational,
    ) -> usize {
        let a = Self::sturm_variations(chain, lo);
        let b = Self::sturm_variations(chain, hi);
        a.saturating_sub(b)
    }
}

/// Subresultant polynomial remainder sequence resultant over Z.
fn resultant_prs(p: &IntPoly, q: &IntPoly) -> BigInt {
    if p.is_zero() || q.is_zero() {
        return BigInt::zero();
    }
    if p.degree() == 0 {
        return p.coeffs[0].pow(q.degree() as u32);
    }
    if q.degree() == 0 {
        return q.coeffs[0].pow(p.degree() as u32);
    }
    // Fall back to a fraction-free Sylvester determinant via Bareiss; degrees
    // in this crate stay small and the implementation is simple to audit.
    let n = p.degree();
    let m = q.degree();
    let size = n + m;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for row in 0..m {
        for (i, c) in p.coeffs.iter().enumerate() {
            mat[row][row + n - i] = c.clone();
        }
    }
    for row in 0..n {
        for (i, c) in q.coeffs.iter().enumerate() {
            mat[m + row][row + m - i] = c.clone();
        }
    }
    bareiss_det(mat)
}

/// Fraction-free Bareiss determinant for BigInt matrices.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = &t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    if sign < 0 {
        -m[n - 1][n - 1].clone()
    } else {
        m[n - 1][n - 1].clone()
    }
}

/// The k-th cyclotomic polynomial, by iterated exact division of x^k - 1.
pub fn cyclotomic(k: u64) -> IntPoly {
    assert!(k >= 1);
    let mut num = {
        let mut c = vec![BigInt::zero(); k as usize + 1];
        c[0] = -BigInt::one();
        c[k as usize] = BigInt::one();
        IntPoly::new(c)
    };
    for d in 1..k {
        if k % d == 0 {
            let phi_d = cyclotomic(d);
            num = num.div_exact(&phi_d);
        }
    }
    num
}

/// Euler's totient.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn mul_and_div_exact() {
        let a = p(&[1, 2, 1]); // (x+1)^2
        let b = p(&[-1, 1]); // x-1
        let c = a.mul(&b);
        assert_eq!(c, p(&[-1, -1, 1, 1]));
        assert_eq!(c.div_exact(&b), a);
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = p(&[-1, 0, 1]); // x^2-1
        let b = p(&[1, 2, 1]); // (x+1)^2
        assert_eq!(a.gcd(&b), p(&[1, 1]));
    }

    #[test]
    fn square_free_decomposition_splits_multiplicity() {
        // x(x-1)^2
        let f = p(&[0, 1]).mul(&p(&[-1, 1])).mul(&p(&[-1, 1]));
        let dec = f.square_free_decomposition();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0], (p(&[0, 1]), 1));
        assert_eq!(dec[1], (p(&[-1, 1]), 2));
    }

    #[test]
    fn resultant_matches_known_values() {
        // res(x^2-2, x^2-3) = (2-3)^2 ... = product of (a_i - b_j) over roots = 1
        let a = p(&[-2, 0, 1]);
        let b = p(&[-3, 0, 1]);
        assert_eq!(a.resultant(&b), BigInt::from(1));
        // res(x-2, x-3) = 2-3... = p(3) with p = x-2 -> 1
        assert_eq!(p(&[-2, 1]).resultant(&p(&[-3, 1])), BigInt::from(1));
        // discriminant-ish: res(x^2-1, 2x) = 2^2 * (product of roots of x^2-1 under 2x)… check numerically: = 4*(1)(-1)*? use direct: det Sylvester
        let r = p(&[-1, 0, 1]).resultant(&p(&[0, 2]));
        assert_eq!(r, BigInt::from(-4));
    }

    #[test]
    fn sturm_counts_roots() {
        // (x^2-2)(x-3): roots -1.414, 1.414, 3
        let f = p(&[-2, 0, 1]).mul(&p(&[-3, 1]));
        let chain = f.sturm_chain();
        let c = IntPoly::count_real_roots_between(
            &chain,
            &BigRational::from_integer((-10).into()),
            &BigRational::from_integer(10.into()),
        );
        assert_eq!(c, 3);
        let c = IntPoly::count_real_roots_between(
            &chain,
            &BigRational::from_integer(0.into()),
            &BigRational::from_integer(2.into()),
        );
        assert_eq!(c, 1);
    }

    #[test]
    fn cyclotomic_basics() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(2), p(&[1, 1]));
        assert_eq!(cyclotomic(3), p(&[1, 1, 1]));
        assert_eq!(cyclotomic(4), p(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(euler_phi(12), 4);
    }
}

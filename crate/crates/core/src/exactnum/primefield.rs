//! Polynomial arithmetic over small prime fields, used by the integer
//! factorization routine (distinct-degree + equal-degree splitting).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub fn bigint_mod(a: &BigInt, p: u64) -> u64 {
    let m = a.mod_floor(&BigInt::from(p));
    debug_assert!(!m.is_negative());
    m.to_u64().unwrap()
}

/// Dense polynomial over F_p, lowest degree first, trimmed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMod {
    pub c: Vec<u64>,
    pub p: u64,
}

impl PolyMod {
    pub fn new(mut c: Vec<u64>, p: u64) -> Self {
        for x in &mut c {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        PolyMod { c, p }
    }

    pub fn zero(p: u64) -> Self {
        PolyMod { c: vec![], p }
    }

    pub fn one(p: u64) -> Self {
        PolyMod { c: vec![1], p }
    }

    pub fn x(p: u64) -> Self {
        PolyMod { c: vec![0, 1], p }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn leading(&self) -> u64 {
        *self.c.last().unwrap_or(&0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.leading(), self.p);
        PolyMod::new(self.c.iter().map(|&x| mul_mod(x, inv, self.p)).collect(), self.p)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let mut out = vec![0u64; n];
        for i in 0..n {
            let a = self.c.get(i).copied().unwrap_or(0);
            let b = o.c.get(i).copied().unwrap_or(0);
            out[i] = add_mod(a, b, self.p);
        }
        PolyMod::new(out, self.p)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let mut out = vec![0u64; n];
        for i in 0..n {
            let a = self.c.get(i).copied().unwrap_or(0);
            let b = o.c.get(i).copied().unwrap_or(0);
            out[i] = sub_mod(a, b, self.p);
        }
        PolyMod::new(out, self.p)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let mut out = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                out[i + j] = add_mod(out[i + j], mul_mod(a, b, self.p), self.p);
            }
        }
        PolyMod::new(out, self.p)
    }

    /// (quotient, remainder) with divisor required nonzero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero());
        if self.degree() < d.degree() || self.is_zero() {
            return (Self::zero(self.p), self.clone());
        }
        let p = self.p;
        let mut rem = self.c.clone();
        let dd = d.degree();
        let inv = inv_mod(d.leading(), p);
        let mut q = vec![0u64; self.degree() - dd + 1];
        for k in (0..=self.degree() - dd).rev() {
            let c = mul_mod(rem[k + dd], inv, p);
            q[k] = c;
            if c != 0 {
                for i in 0..=dd {
                    rem[k + i] = sub_mod(rem[k + i], mul_mod(c, d.c[i], p), p);
                }
            }
        }
        (PolyMod::new(q, p), PolyMod::new(rem, p))
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

    pub fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return Self::zero(self.p);
        }
        PolyMod::new(
            self.c[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| mul_mod(c, (i as u64 + 1) % self.p, self.p))
                .collect(),
            self.p,
        )
    }

    pub fn mulmod(&self, o: &Self, m: &Self) -> Self {
        self.mul(o).rem(m)
    }

    /// self^e mod m.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut r = Self::one(self.p);
        let mut b = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mulmod(&b, m);
            }
            b = b.mulmod(&b, m);
            e >>= 1;
        }
        r
    }
}

/// x^(p^k) mod f via repeated Frobenius powering.
fn frobenius_power(f: &PolyMod, k: usize) -> PolyMod {
    let p = f.p;
    let mut r = PolyMod::x(p);
    for _ in 0..k {
        r = r.pow_mod(p, f);
    }
    r
}

/// Distinct-degree factorization of a monic square-free f:
/// returns (product of irreducible factors of degree d, d) pairs.
fn distinct_degree(f: &PolyMod) -> Vec<(PolyMod, usize)> {
    let mut out = vec![];
    let mut f = f.monic();
    let p = f.p;
    let mut h = PolyMod::x(p);
    let mut d = 0usize;
    while f.degree() >= 1 {
        d += 1;
        if 2 * d > f.degree() {
            out.push((f.clone(), f.degree()));
            break;
        }
        h = h.pow_mod(p, &f);
        let g = f.gcd(&h.sub(&PolyMod::x(p)));
        if g.degree() > 0 {
            out.push((g.clone(), d));
            f = f.div_rem(&g).0.monic();
            h = h.rem(&f);
        }
    }
    out
}

/// Equal-degree splitting (Cantor-Zassenhaus) of f = product of irreducibles
/// of degree d. Odd p only.
fn equal_degree_split(f: &PolyMod, d: usize, rng_state: &mut u64) -> Vec<PolyMod> {
    let p = f.p;
    if f.degree() == d {
        return vec![f.monic()];
    }
    loop {
        // xorshift random polynomial of degree < deg f
        let mut c = vec![0u64; f.degree()];
        for x in c.iter_mut() {
            *rng_state ^= *rng_state << 13;
            *rng_state ^= *rng_state >> 7;
            *rng_state ^= *rng_state << 17;
            *x = *rng_state % p;
        }
        let r = PolyMod::new(c, p);
        if r.degree() == 0 {
            continue;
        }
        let g0 = f.gcd(&r);
        if g0.degree() > 0 && g0.degree() < f.degree() {
            let mut out = equal_degree_split(&g0, d, rng_state);
            out.extend(equal_degree_split(&f.div_rem(&g0).0, d, rng_state));
            return out;
        }
        // e = (p^d - 1)/2 computed with u128 guard; p^d can overflow u64 for
        // large d, so exponentiate via square-and-multiply on the exponent
        // bits of (p^d-1)/2 using BigInt-free chunking.
        let g = pow_poly_exp(&r, p, d, f);
        let g = g.sub(&PolyMod::one(p));
        let h = f.gcd(&g);
        if h.degree() > 0 && h.degree() < f.degree() {
            let mut out = equal_degree_split(&h, d, rng_state);
            out.extend(equal_degree_split(&f.div_rem(&h).0, d, rng_state));
            return out;
        }
    }
}

/// r^((p^d-1)/2) mod f, with the exponent handled as a big integer.
fn pow_poly_exp(r: &PolyMod, p: u64, d: usize, f: &PolyMod) -> PolyMod {
    let e = (BigInt::from(p).pow(d as u32) - 1) / 2;
    let (_, bytes) = e.to_bytes_be();
    let mut acc = PolyMod::one(p);
    for byte in bytes {
        for bit in (0..8).rev() {
            acc = acc.mulmod(&acc, f);
            if (byte >> bit) & 1 == 1 {
                acc = acc.mulmod(r, f);
            }
        }
    }
    acc
}

/// Full factorization of a monic square-free polynomial over F_p (p odd)
/// into monic irreducibles.
pub fn factor_squarefree_mod(f: &PolyMod) -> Vec<PolyMod> {
    let mut rng_state = 0x9e3779b97f4a7c15u64;
    let mut out = vec![];
    for (g, d) in distinct_degree(f) {
        out.extend(equal_degree_split(&g, d, &mut rng_state));
    }
    out.sort_by(|a, b| (a.degree(), &a.c).cmp(&(b.degree(), &b.c)));
    out
}

pub const SMALL_PRIMES: &[u64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
    197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293,
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_x4_minus_1_mod_5() {
        // x^4 - 1 = (x-1)(x+1)(x-2)(x+2) mod 5
        let f = PolyMod::new(vec![4, 0, 0, 0, 1], 5);
        let fs = factor_squarefree_mod(&f);
        assert_eq!(fs.len(), 4);
        let mut prod = PolyMod::one(5);
        for g in &fs {
            assert_eq!(g.degree(), 1);
            prod = prod.mul(g);
        }
        assert_eq!(prod, f.monic());
    }

    #[test]
    fn factor_irreducible_quadratic() {
        // x^2 + 1 irreducible mod 7 (since -1 is not a QR mod 7)
        let f = PolyMod::new(vec![1, 0, 1], 7);
        let fs = factor_squarefree_mod(&f);
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].degree(), 2);
    }
}

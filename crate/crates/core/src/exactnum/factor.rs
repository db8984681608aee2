//! Factorization of integer polynomials into irreducibles (Zassenhaus):
//! square-free decomposition, modular factorization, quadratic Hensel
//! lifting, and subset recombination against the Landau-Mignotte bound.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::intpoly::IntPoly;
use super::primefield::{bigint_mod, factor_squarefree_mod, PolyMod, SMALL_PRIMES};

/// Factors an arbitrary nonzero integer polynomial. Returns the rational
/// content (sign carried here) and the irreducible primitive factors with
/// positive leading coefficients and their multiplicities.
pub fn factor(p: &IntPoly) -> (BigInt, Vec<(IntPoly, usize)>) {
    assert!(!p.is_zero(), "cannot factor the zero polynomial");
    let mut content = p.content();
    if p.leading().is_negative() {
        content = -content;
    }
    let prim = p.primitive();
    if prim.degree() == 0 {
        return (content, vec![]);
    }
    let mut out: Vec<(IntPoly, usize)> = vec![];
    for (sf, mult) in prim.square_free_decomposition() {
        for f in factor_squarefree(&sf) {
            out.push((f, mult));
        }
    }
    out.sort_by(|a, b| (a.0.degree(), &a.0.coeffs).cmp(&(b.0.degree(), &b.0.coeffs)));
    (content, out)
}

/// Factors a primitive square-free polynomial with positive leading
/// coefficient into primitive irreducibles.
pub fn factor_squarefree(f: &IntPoly) -> Vec<IntPoly> {
    let mut f = f.primitive();
    let mut out = vec![];
    if f.degree() == 0 {
        return out;
    }
    // Pull out the root at 0 (at most one: square-free).
    if f.coeffs[0].is_zero() {
        out.push(IntPoly::x());
        f = IntPoly::new(f.coeffs[1..].to_vec());
        if f.degree() == 0 {
            return out;
        }
    }
    if f.degree() == 1 {
        out.push(f);
        return out;
    }
    out.extend(zassenhaus(&f));
    out
}

/// Landau-Mignotte style coefficient bound for divisors of f (including the
/// leading-coefficient correction).
fn factor_coeff_bound(f: &IntPoly) -> BigInt {
    let d = f.degree() as u32;
    let mut norm_sq = BigInt::zero();
    for c in &f.coeffs {
        norm_sq += c * c;
    }
    let norm = norm_sq.sqrt() + 1;
    (BigInt::one() << (d + 1)) * norm * f.leading().abs()
}

fn zassenhaus(f: &IntPoly) -> Vec<IntPoly> {
    debug_assert!(f.degree() >= 2 && !f.coeffs[0].is_zero());
    // Prime selection: p must not divide lc(f) and f mod p must stay
    // square-free.
    let (p, modular) = SMALL_PRIMES
        .iter()
        .find_map(|&p| {
            if bigint_mod(&f.leading(), p) == 0 {
                return None;
            }
            let fp = to_mod(f, p);
            if fp.degree() != f.degree() {
                return None;
            }
            let g = fp.gcd(&fp.derivative());
            if g.degree() != 0 {
                return None;
            }
            Some((p, factor_squarefree_mod(&fp.monic())))
        })
        .expect("no usable small prime (square-free input expected)");

    if modular.len() == 1 {
        return vec![f.clone()];
    }

    // Lift the modular factorization to p^k beyond twice the divisor bound.
    let bound = factor_coeff_bound(f);
    let mut pk = BigInt::from(p);
    let mut k = 1u32;
    while pk <= &bound * 2 {
        pk = &pk * p;
        k += 1;
    }
    let _ = k;
    let lifted = hensel_lift_tree(f, &modular, p, &pk);

    // Subset recombination.
    recombine(f, lifted, &pk)
}

fn to_mod(f: &IntPoly, p: u64) -> PolyMod {
    PolyMod::new(f.coeffs.iter().map(|c| bigint_mod(c, p)).collect(), p)
}

/// Polynomial with BigInt coefficients reduced mod m (canonical in [0, m)).
#[derive(Clone, Debug, PartialEq)]
struct PolyZm {
    c: Vec<BigInt>,
}

impl PolyZm {
    fn new(mut c: Vec<BigInt>, m: &BigInt) -> Self {
        for x in &mut c {
            *x = x.mod_floor(m);
        }
        while c.last().map_or(false, |x| x.is_zero()) {
            c.pop();
        }
        PolyZm { c }
    }
    fn from_int(f: &IntPoly, m: &BigInt) -> Self {
        Self::new(f.coeffs.clone(), m)
    }
    fn from_mod(f: &PolyMod, m: &BigInt) -> Self {
        Self::new(f.c.iter().map(|&x| BigInt::from(x)).collect(), m)
    }
    fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    fn leading(&self) -> BigInt {
        self.c.last().cloned().unwrap_or_else(BigInt::zero)
    }
    fn get(&self, i: usize) -> BigInt {
        self.c.get(i).cloned().unwrap_or_else(BigInt::zero)
    }
    fn add(&self, o: &Self, m: &BigInt) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|i| self.get(i) + o.get(i)).collect(), m)
    }
    fn sub(&self, o: &Self, m: &BigInt) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|i| self.get(i) - o.get(i)).collect(), m)
    }
    fn mul(&self, o: &Self, m: &BigInt) -> Self {
        if self.is_zero() || o.is_zero() {
            return PolyZm { c: vec![] };
        }
        let mut out = vec![BigInt::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out, m)
    }
    /// Division by a monic divisor, exact arithmetic mod m.
    fn div_rem_monic(&self, d: &Self, m: &BigInt) -> (Self, Self) {
        assert!(d.leading().is_one(), "divisor must be monic");
        if self.is_zero() || self.degree() < d.degree() {
            return (PolyZm { c: vec![] }, self.clone());
        }
        let mut rem = self.c.clone();
        let dd = d.degree();
        let n = self.degree();
        let mut q = vec![BigInt::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let c = rem[k + dd].mod_floor(m);
            q[k] = c.clone();
            if !c.is_zero() {
                for i in 0..=dd {
                    rem[k + i] = (&rem[k + i] - &c * &d.c[i]).mod_floor(m);
                }
            }
        }
        (Self::new(q, m), Self::new(rem, m))
    }
}

/// One quadratic Hensel step: given f ≡ g·h (mod m) with g monic,
/// s·g + t·h ≡ 1 (mod m), returns (g', h', s', t') valid mod m².
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    f: &IntPoly,
    g: &PolyZm,
    h: &PolyZm,
    s: &PolyZm,
    t: &PolyZm,
    m: &BigInt,
) -> (PolyZm, PolyZm, PolyZm, PolyZm) {
    let m2 = m * m;
    let fz = PolyZm::from_int(f, &m2);
    let g = PolyZm::new(g.c.clone(), &m2);
    let h = PolyZm::new(h.c.clone(), &m2);
    let s = PolyZm::new(s.c.clone(), &m2);
    let t = PolyZm::new(t.c.clone(), &m2);

    let e = fz.sub(&g.mul(&h, &m2), &m2);
    let (q, r) = s.mul(&e, &m2).div_rem_monic(&g, &m2);
    let g1 = g.add(&r, &m2);
    let h1 = h.add(&t.mul(&e, &m2), &m2).add(&q.mul(&h, &m2), &m2);

    let b = s
        .mul(&g1, &m2)
        .add(&t.mul(&h1, &m2), &m2)
        .sub(&PolyZm::new(vec![BigInt::one()], &m2), &m2);
    let (c, d) = s.mul(&b, &m2).div_rem_monic(&g1, &m2);
    let s1 = s.sub(&d, &m2);
    let t1 = t.sub(&t.mul(&b, &m2), &m2).sub(&c.mul(&h1, &m2), &m2);
    (g1, h1, s1, t1)
}

/// Extended Euclid over F_p returning (s, t) with s·a + t·b ≡ 1.
fn bezout_mod(a: &PolyMod, b: &PolyMod) -> (PolyMod, PolyMod) {
    let p = a.p;
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (PolyMod::one(p), PolyMod::zero(p));
    let (mut t0, mut t1) = (PolyMod::zero(p), PolyMod::one(p));
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
    // r0 = gcd, a unit for coprime inputs; normalize to 1
    assert_eq!(r0.degree(), 0, "factors not coprime");
    let inv = super::primefield::inv_mod(r0.leading(), p);
    (
        PolyMod::new(s0.c.iter().map(|&x| super::primefield::mul_mod(x, inv, p)).collect(), p),
        PolyMod::new(t0.c.iter().map(|&x| super::primefield::mul_mod(x, inv, p)).collect(), p),
    )
}

/// Lifts f ≡ lc · prod(monic g_i) from mod p to mod pk (pk a power of p).
/// Returns the lifted monic factors mod pk.
fn hensel_lift_tree(f: &IntPoly, factors: &[PolyMod], p: u64, pk: &BigInt) -> Vec<PolyZm> {
    if factors.len() == 1 {
        // f ≡ lc·g: the monic lift of f itself mod pk
        let lc_inv = modinv(&f.leading(), pk);
        let monic = PolyZm::new(
            f.coeffs.iter().map(|c| (c * &lc_inv).mod_floor(pk)).collect(),
            pk,
        );
        return vec![monic];
    }
    let half = factors.len() / 2;
    let (left, right) = factors.split_at(half);
    let pbig = BigInt::from(p);

    // g = prod left (monic), h = lc·prod right (carries the leading coeff)
    let mut gm = PolyMod::one(p);
    for x in left {
        gm = gm.mul(x);
    }
    let mut hm = PolyMod::new(vec![bigint_mod(&f.leading(), p)], p);
    for x in right {
        hm = hm.mul(x);
    }
    let (sm, tm) = bezout_mod(&gm, &hm);

    let mut g = PolyZm::from_mod(&gm, &pbig);
    let mut h = PolyZm::from_mod(&hm, &pbig);
    let mut s = PolyZm::from_mod(&sm, &pbig);
    let mut t = PolyZm::from_mod(&tm, &pbig);
    let mut m = pbig.clone();
    while &m < pk {
        let (g1, h1, s1, t1) = hensel_step(f, &g, &h, &s, &t, &m);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = &m * &m;
    }
    // Reduce to exactly mod pk.
    let g = PolyZm::new(g.c, pk);
    let h = PolyZm::new(h.c, pk);

    // Recurse: g is monic with factors `left`; h ≡ lc·prod right.
    let g_int = IntPoly::new(symmetric(&g, pk));
    let h_int = IntPoly::new(symmetric(&h, pk));
    let mut out = hensel_lift_tree(&g_int, left, p, pk);
    out.extend(hensel_lift_tree(&h_int, right, p, pk));
    out
}

/// Symmetric representative coefficients in (-m/2, m/2].
fn symmetric(f: &PolyZm, m: &BigInt) -> Vec<BigInt> {
    let half = m / 2;
    f.c.iter()
        .map(|c| {
            let c = c.mod_floor(m);
            if c > half {
                c - m
            } else {
                c
            }
        })
        .collect()
}

fn modinv(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "not invertible");
    e.x.mod_floor(m)
}

/// Tries all subsets of the lifted modular factors to discover the true
/// integer factors of f.
fn recombine(f: &IntPoly, lifted: Vec<PolyZm>, pk: &BigInt) -> Vec<IntPoly> {
    let mut remaining: Vec<PolyZm> = lifted;
    let mut f = f.clone();
    let mut out = vec![];
    let mut card = 1usize;
    'outer: while 2 * card <= remaining.len() {
        let idxs: Vec<usize> = (0..remaining.len()).collect();
        for subset in subsets_of_size(&idxs, card) {
            let mut prod = PolyZm::new(vec![f.leading()], pk);
            for &i in &subset {
                prod = prod.mul(&remaining[i], pk);
            }
            let cand = IntPoly::new(symmetric(&prod, pk)).primitive();
            if cand.degree() == 0 {
                continue;
            }
            if divides(&cand, &f) {
                out.push(cand.clone());
                f = f.div_exact(&cand).primitive();
                let keep: Vec<PolyZm> = remaining
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g.clone())
                    .collect();
                remaining = keep;
                continue 'outer;
            }
        }
        card += 1;
    }
    if f.degree() > 0 {
        out.push(f);
    }
    out.sort_by(|a, b| (a.degree(), &a.coeffs).cmp(&(b.degree(), &b.coeffs)));
    out
}

fn divides(d: &IntPoly, f: &IntPoly) -> bool {
    if d.degree() > f.degree() {
        return false;
    }
    // lc(d) must divide lc(f)·(unit) for a primitive divisor; test by
    // pseudo-division remainder.
    let r = f.pseudo_rem(d);
    r.is_zero()
}

fn subsets_of_size(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let n = items.len();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn factors_product_of_linears() {
        // (x-1)(x+2)(2x-3)
        let f = p(&[-1, 1]).mul(&p(&[2, 1])).mul(&p(&[-3, 2]));
        let (c, fs) = factor(&f);
        assert_eq!(c, BigInt::one());
        assert_eq!(fs.len(), 3);
        let mut prod = IntPoly::one();
        for (g, m) in &fs {
            assert_eq!(*m, 1);
            prod = prod.mul(g);
        }
        assert_eq!(prod, f);
    }

    #[test]
    fn factors_x4_plus_1() {
        // irreducible over Z but reducible mod every prime
        let f = p(&[1, 0, 0, 0, 1]);
        let (_, fs) = factor(&f);
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].0, f);
    }

    #[test]
    fn factors_cyclotomic_product() {
        // x^12 - 1 = prod of cyclotomics for d | 12
        let f = {
            let mut c = vec![BigInt::zero(); 13];
            c[0] = -BigInt::one();
            c[12] = BigInt::one();
            IntPoly::new(c)
        };
        let (_, fs) = factor(&f);
        assert_eq!(fs.len(), 6);
        let degs: Vec<usize> = fs.iter().map(|(g, _)| g.degree()).collect();
        assert_eq!(degs, vec![1, 1, 2, 2, 2, 4]);
    }

    #[test]
    fn factors_scaled_quadratic() {
        // 25x^2 - 30x + 25 = 5 (5x^2 - 6x + 5), irreducible quadratic
        let f = p(&[25, -30, 25]);
        let (c, fs) = factor(&f);
        assert_eq!(c, BigInt::from(5));
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].0, p(&[5, -6, 5]));
    }

    #[test]
    fn factors_with_multiplicity() {
        // x^2(x^2-2)^2(x+1)
        let x2 = p(&[0, 0, 1]);
        let f = x2
            .mul(&p(&[-2, 0, 1]))
            .mul(&p(&[-2, 0, 1]))
            .mul(&p(&[1, 1]));
        let (_, fs) = factor(&f);
        let mut found: Vec<(usize, usize)> = fs.iter().map(|(g, m)| (g.degree(), *m)).collect();
        found.sort();
        assert_eq!(found, vec![(1, 1), (1, 2), (2, 2)]);
    }

    #[test]
    fn factors_mixed_big_coeffs() {
        // (3x^2+2x+5)(7x^3 - x + 11)
        let f = p(&[5, 2, 3]).mul(&p(&[11, -1, 0, 7]));
        let (_, fs) = factor(&f);
        assert_eq!(fs.len(), 2);
        let mut prod = IntPoly::one();
        for (g, _) in &fs {
            prod = prod.mul(g);
        }
        assert_eq!(prod, f);
    }
}

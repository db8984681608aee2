//! Certified complex root isolation for square-free integer polynomials.
//!
//! Roots are located numerically (Aberth-Ehrlich in f64) and certified with
//! the Krawczyk operator in exact rational interval arithmetic; a complete
//! subdivision search backs up the numeric seeding. Every returned box
//! contains exactly one root and the boxes are pairwise disjoint.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::interval::{ComplexBox, RatInterval};
use super::intpoly::IntPoly;

/// Isolates all complex roots of a square-free polynomial.
pub fn isolate_roots(p: &IntPoly) -> Vec<ComplexBox> {
    assert!(!p.is_zero());
    let deg = p.degree();
    if deg == 0 {
        return vec![];
    }
    if deg == 1 {
        let root = BigRational::new(-p.coeffs[0].clone(), p.coeffs[1].clone());
        return vec![ComplexBox::real_point(root)];
    }
    if let Some(boxes) = seeded_isolation(p) {
        return boxes;
    }
    subdivision_isolation(p)
}

/// Krawczyk operator K(X) for p at box X. Returns None when the derivative
/// enclosure contains a singular midpoint inverse.
fn krawczyk(p: &IntPoly, dp: &IntPoly, x: &ComplexBox) -> Option<ComplexBox> {
    let (mre, mim) = x.mid();
    let m = ComplexBox::point(mre, mim);
    let pm = eval_box(p, &m);
    let dpx = eval_box(dp, x);
    // Y = 1 / mid(p'(X))
    let (yre, yim) = dpx.mid();
    let ynorm = &yre * &yre + &yim * &yim;
    if ynorm.is_zero() {
        return None;
    }
    let y = ComplexBox::point(&yre / &ynorm, -&yim / &ynorm);
    // K = m - Y p(m) + (1 - Y p'(X)) (X - m)
    let one = ComplexBox::one();
    let defect = one.sub(&y.mul(&dpx));
    let k = m
        .sub(&y.mul(&pm))
        .add(&defect.mul(&x.sub(&m)));
    Some(k)
}

pub fn eval_box(p: &IntPoly, z: &ComplexBox) -> ComplexBox {
    let mut acc = ComplexBox::zero();
    for c in p.coeffs.iter().rev() {
        acc = acc.mul(z).add(&ComplexBox::real_point(BigRational::from_integer(
            c.clone(),
        )));
    }
    acc
}

/// Does the box certainly contain exactly one root (Krawczyk contraction)?
fn verify_unique(p: &IntPoly, dp: &IntPoly, x: &ComplexBox) -> Option<ComplexBox> {
    let k = krawczyk(p, dp, x)?;
    if x.strictly_contains(&k) {
        k.intersect(x)
    } else {
        None
    }
}

/// f64 Aberth-Ehrlich root finding; pure heuristic, certified afterwards.
fn aberth_f64(p: &IntPoly) -> Vec<(f64, f64)> {
    let deg = p.degree();
    let coeffs: Vec<f64> = {
        let max_bits = p.coeffs.iter().map(|c| c.bits()).max().unwrap_or(1) as i64;
        let shift = (max_bits - 500).max(0) as u64;
        p.coeffs
            .iter()
            .map(|c| {
                use num_traits::ToPrimitive;
                (c >> shift).to_f64().unwrap_or(0.0)
            })
            .collect()
    };
    let eval = |z: (f64, f64)| -> (f64, f64) {
        let mut acc = (0.0f64, 0.0f64);
        for c in coeffs.iter().rev() {
            let re = acc.0 * z.0 - acc.1 * z.1 + c;
            let im = acc.0 * z.1 + acc.1 * z.0;
            acc = (re, im);
        }
        acc
    };
    let deval = |z: (f64, f64)| -> (f64, f64) {
        let mut acc = (0.0f64, 0.0f64);
        for (i, c) in coeffs.iter().enumerate().skip(1).rev() {
            let c = c * i as f64;
            let re = acc.0 * z.0 - acc.1 * z.1 + c;
            let im = acc.0 * z.1 + acc.1 * z.0;
            acc = (re, im);
        }
        acc
    };
    let r = {
        let lead = coeffs[deg].abs().max(1e-300);
        let maxc = coeffs[..deg].iter().fold(0.0f64, |a, c| a.max(c.abs()));
        1.0 + maxc / lead
    };
    let mut zs: Vec<(f64, f64)> = (0..deg)
        .map(|i| {
            let ang = 2.0 * std::f64::consts::PI * (i as f64 + 0.354) / deg as f64 + 0.7;
            (0.7 * r * ang.cos(), 0.7 * r * ang.sin())
        })
        .collect();
    for _ in 0..300 {
        let mut moved = 0.0f64;
        for i in 0..deg {
            let z = zs[i];
            let pv = eval(z);
            let dv = deval(z);
            let dn = dv.0 * dv.0 + dv.1 * dv.1;
            if dn < 1e-300 {
                continue;
            }
            // newton = p/p'
            let nw = (
                (pv.0 * dv.0 + pv.1 * dv.1) / dn,
                (pv.1 * dv.0 - pv.0 * dv.1) / dn,
            );
            let mut s = (0.0f64, 0.0f64);
            for (j, w) in zs.iter().enumerate() {
                if j == i {
                    continue;
                }
                let d = (z.0 - w.0, z.1 - w.1);
                let n = d.0 * d.0 + d.1 * d.1;
                if n < 1e-300 {
                    continue;
                }
                s = (s.0 + d.0 / n, s.1 + d.1 / n);
            }
            let denom = (1.0 - (nw.0 * s.0 - nw.1 * s.1), -(nw.0 * s.1 + nw.1 * s.0));
            let dn2 = denom.0 * denom.0 + denom.1 * denom.1;
            if dn2 < 1e-300 {
                continue;
            }
            let step = (
                (nw.0 * denom.0 + nw.1 * denom.1) / dn2,
                (nw.1 * denom.0 - nw.0 * denom.1) / dn2,
            );
            zs[i] = (z.0 - step.0, z.1 - step.1);
            moved += step.0.abs() + step.1.abs();
        }
        if moved < 1e-14 {
            break;
        }
    }
    zs
}

/// Attempts isolation from f64 seeds; None if certification fails.
fn seeded_isolation(p: &IntPoly) -> Option<Vec<ComplexBox>> {
    let deg = p.degree();
    let dp = p.derivative();
    let seeds = aberth_f64(p);
    // Radius heuristic: a fraction of the distance to the nearest other seed.
    let mut boxes: Vec<ComplexBox> = Vec::with_capacity(deg);
    for (i, &(re, im)) in seeds.iter().enumerate() {
        if !re.is_finite() || !im.is_finite() {
            return None;
        }
        let mut min_d = f64::INFINITY;
        for (j, &(re2, im2)) in seeds.iter().enumerate() {
            if i == j {
                continue;
            }
            let d = ((re - re2).powi(2) + (im - im2).powi(2)).sqrt();
            min_d = min_d.min(d);
        }
        let scale = (re.abs() + im.abs()).max(1.0);
        let mut radius = (min_d / 8.0).max(scale * 1e-12).min(scale);
        if !radius.is_finite() || radius <= 0.0 {
            radius = 1e-6;
        }
        let mut verified = None;
        for _ in 0..6 {
            let cand = ComplexBox::new(
                RatInterval::from_f64_guess(re, radius),
                RatInterval::from_f64_guess(im, radius),
            );
            if let Some(k) = verify_unique(p, &dp, &cand) {
                verified = Some(k.compress(200));
                break;
            }
            radius *= 0.25;
        }
        boxes.push(verified?);
    }
    // Pairwise disjointness; refine on demand.
    for _round in 0..40 {
        let mut all_disjoint = true;
        for i in 0..boxes.len() {
            for j in i + 1..boxes.len() {
                if boxes[i].intersects(&boxes[j]) {
                    all_disjoint = false;
                    boxes[i] = contract_step(p, &dp, &boxes[i])?;
                    boxes[j] = contract_step(p, &dp, &boxes[j])?;
                }
            }
        }
        if all_disjoint {
            return Some(boxes);
        }
    }
    None
}

/// One Krawczyk contraction step (box must already be verified).
fn contract_step(p: &IntPoly, dp: &IntPoly, x: &ComplexBox) -> Option<ComplexBox> {
    let k = krawczyk(p, dp, x)?;
    let nx = k.intersect(x)?;
    if nx.width() < x.width() {
        Some(nx.compress(240))
    } else {
        // force a split toward the midpoint to make progress
        Some(nx)
    }
}

/// Complete subdivision isolation within the Cauchy bound.
fn subdivision_isolation(p: &IntPoly) -> Vec<ComplexBox> {
    let deg = p.degree();
    let dp = p.derivative();
    let b = p.cauchy_bound();
    let full = ComplexBox::new(
        RatInterval::new(-b.clone(), b.clone()),
        RatInterval::new(-b.clone(), b),
    );
    let mut queue = vec![full];
    let mut found: Vec<ComplexBox> = vec![];
    let mut depth_guard = 0usize;
    while let Some(x) = queue.pop() {
        depth_guard += 1;
        assert!(
            depth_guard < 4_000_000,
            "subdivision isolation failed to converge"
        );
        // Exclusion test.
        let v = eval_box(p, &x);
        if !v.contains_zero() {
            continue;
        }
        // Verification test.
        if let Some(k) = verify_unique(p, &dp, &x) {
            let mut k = k.compress(200);
            // Deduplicate against previously found roots.
            let mut is_new = true;
            for f in found.iter_mut() {
                if f.intersects(&k) {
                    match same_root(p, &dp, f, &k) {
                        true => {
                            is_new = false;
                            break;
                        }
                        false => {
                            // refine both until disjoint (handled inside)
                            let (nf, nk) = force_disjoint(p, &dp, f, &k);
                            *f = nf;
                            k = nk;
                        }
                    }
                }
            }
            if is_new {
                found.push(k);
                if found.len() == deg {
                    break;
                }
            }
            continue;
        }
        // Split into four overlapping children (10% overlap, slightly
        // off-center so algebraic roots cannot sit on every cut forever).
        let wr = x.re.width();
        let wi = x.im.width();
        if wr.is_zero() && wi.is_zero() {
            continue;
        }
        let frac_lo = BigRational::new(11.into(), 20.into());
        let frac_hi = BigRational::new(9.into(), 20.into());
        let re_cut_hi = &x.re.lo + x.re.width() * &frac_lo;
        let re_cut_lo = &x.re.lo + x.re.width() * &frac_hi;
        let im_cut_hi = &x.im.lo + x.im.width() * &frac_lo;
        let im_cut_lo = &x.im.lo + x.im.width() * &frac_hi;
        let res = [
            RatInterval::new(x.re.lo.clone(), re_cut_hi.clone()),
            RatInterval::new(re_cut_lo.clone(), x.re.hi.clone()),
        ];
        let ims = [
            RatInterval::new(x.im.lo.clone(), im_cut_hi.clone()),
            RatInterval::new(im_cut_lo.clone(), x.im.hi.clone()),
        ];
        for r in &res {
            for i in &ims {
                queue.push(ComplexBox::new(r.clone(), i.clone()).compress(400));
            }
        }
    }
    assert_eq!(
        found.len(),
        deg,
        "root isolation incomplete: expected {deg} roots"
    );
    found.sort_by(|a, b| {
        (a.re.lo.clone(), a.im.lo.clone()).cmp(&(b.re.lo.clone(), b.im.lo.clone()))
    });
    found
}

/// Decides whether two verified boxes hold the same root.
fn same_root(p: &IntPoly, dp: &IntPoly, a: &ComplexBox, b: &ComplexBox) -> bool {
    let mut a = a.clone();
    let mut b = b.clone();
    loop {
        if !a.intersects(&b) {
            return false;
        }
        let hull = ComplexBox::new(a.re.hull(&b.re), a.im.hull(&b.im));
        if verify_unique(p, dp, &hull).is_some() {
            return true;
        }
        a = contract_step(p, dp, &a).expect("verified box must contract");
        b = contract_step(p, dp, &b).expect("verified box must contract");
    }
}

fn force_disjoint(
    p: &IntPoly,
    dp: &IntPoly,
    a: &ComplexBox,
    b: &ComplexBox,
) -> (ComplexBox, ComplexBox) {
    let mut a = a.clone();
    let mut b = b.clone();
    while a.intersects(&b) {
        a = contract_step(p, dp, &a).expect("verified box must contract");
        b = contract_step(p, dp, &b).expect("verified box must contract");
    }
    (a, b)
}

/// Shrinks a verified isolating box below the requested width.
pub fn refine_box(p: &IntPoly, x: &ComplexBox, target: &BigRational) -> ComplexBox {
    let dp = p.derivative();
    let mut cur = x.clone();
    if p.degree() == 1 {
        let root = BigRational::new(-p.coeffs[0].clone(), p.coeffs[1].clone());
        return ComplexBox::real_point(root);
    }
    let mut bits = 64u32;
    // The compression grid must outresolve the target width.
    {
        let mut t = target.clone();
        while t < BigRational::one() && bits < 100_000 {
            t = t * BigRational::from_integer(2.into());
            bits += 1;
        }
        bits += 64;
    }
    let mut stall = 0usize;
    while cur.width() > *target {
        match krawczyk(p, &dp, &cur).and_then(|k| k.intersect(&cur)) {
            Some(nx) => {
                let shrunk = nx.width() < cur.width();
                let nx = nx.compress(bits);
                let progress = nx.width() < cur.width();
                cur = nx;
                if !(shrunk && progress) {
                    stall += 1;
                    if stall > 4 {
                        cur = bisect_refine(p, &cur);
                        stall = 0;
                    }
                } else {
                    stall = 0;
                }
            }
            None => {
                cur = bisect_refine(p, &cur);
            }
        }
    }
    cur
}

/// Fallback refinement: overlapping quadrisection keeping exactly the
/// children that cannot be excluded; the invariant that `x` isolates one
/// root guarantees the kept region still contains it.
fn bisect_refine(p: &IntPoly, x: &ComplexBox) -> ComplexBox {
    let frac_lo = BigRational::new(11.into(), 20.into());
    let frac_hi = BigRational::new(9.into(), 20.into());
    let re_cut_hi = &x.re.lo + x.re.width() * &frac_lo;
    let re_cut_lo = &x.re.lo + x.re.width() * &frac_hi;
    let im_cut_hi = &x.im.lo + x.im.width() * &frac_lo;
    let im_cut_lo = &x.im.lo + x.im.width() * &frac_hi;
    let res = [
        RatInterval::new(x.re.lo.clone(), re_cut_hi),
        RatInterval::new(re_cut_lo, x.re.hi.clone()),
    ];
    let ims = [
        RatInterval::new(x.im.lo.clone(), im_cut_hi),
        RatInterval::new(im_cut_lo, x.im.hi.clone()),
    ];
    let mut keep: Option<ComplexBox> = None;
    for r in &res {
        for i in &ims {
            let child = ComplexBox::new(r.clone(), i.clone());
            let v = eval_box(p, &child);
            if v.contains_zero() {
                keep = Some(match keep {
                    None => child,
                    Some(k) => ComplexBox::new(k.re.hull(&child.re), k.im.hull(&child.im)),
                });
            }
        }
    }
    keep.expect("isolating box lost its root")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat::rat;

    #[test]
    fn isolates_quadratic_complex_pair() {
        // 5x^2 - 6x + 5: roots 3/5 ± 4/5 i
        let p = IntPoly::from_i64(&[5, -6, 5]);
        let roots = isolate_roots(&p);
        assert_eq!(roots.len(), 2);
        let expected = [(rat(3, 5), rat(4, 5)), (rat(3, 5), rat(-4, 5))];
        for (re, im) in expected {
            assert!(
                roots.iter().any(|b| b.contains_point(&re, &im)),
                "missing root {re} + {im} i"
            );
        }
    }

    #[test]
    fn isolates_real_roots_of_x2_minus_2() {
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        let roots = isolate_roots(&p);
        assert_eq!(roots.len(), 2);
        for b in &roots {
            assert!(b.im.contains(&rat(0, 1)));
        }
    }

    #[test]
    fn refine_sqrt2_to_high_precision() {
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        let roots = isolate_roots(&p);
        let pos = roots
            .iter()
            .find(|b| b.re.hi > rat(0, 1))
            .unwrap();
        let target = rat(1, 1 << 30) / rat(1 << 30, 1); // 2^-60
        let fine = refine_box(&p, pos, &target);
        assert!(fine.width() <= target);
        // 1.41421356... check enclosure against 665857/470832 (good approx)
        let approx = rat(665857, 470832);
        let err = (fine.re.mid() - approx).abs();
        assert!(err < rat(1, 1_000_000_000));
    }

    #[test]
    fn isolates_wilkinson_like_product() {
        // (x-1)(x-2)...(x-8): tightly spaced real roots
        let mut p = IntPoly::one();
        for k in 1..=8 {
            p = p.mul(&IntPoly::from_i64(&[-k, 1]));
        }
        let roots = isolate_roots(&p);
        assert_eq!(roots.len(), 8);
        for k in 1..=8i64 {
            let r = rat(k, 1);
            assert!(roots.iter().any(|b| b.contains_point(&r, &rat(0, 1))));
        }
    }

    #[test]
    fn isolates_cyclotomic_octic() {
        let p = super::super::intpoly::cyclotomic(16); // x^8+1
        let roots = isolate_roots(&p);
        assert_eq!(roots.len(), 8);
        for b in &roots {
            assert!(b.norm_sq().contains(&rat(1, 1)));
        }
    }
}

//! Dense univariate polynomials over the exact rationals, with Sturm
//! sequences and certified real-root isolation.
//!
//! Used for band-edge extraction from Jacobi-form spectral polynomials and
//! for root-free-interval certificates on Cohn polynomials.

use crate::rational::{sign, Rat};

/// Coefficients in ascending order; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UPoly {
    pub coeffs: Vec<Rat>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn constant(c: Rat) -> Self {
        UPoly::from_coeffs(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lc(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64();
        }
        acc
    }

    pub fn derivative(&self) -> UPoly {
        if self.coeffs.len() <= 1 {
            return UPoly::zero();
        }
        UPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Rat::from_int(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rat) -> UPoly {
        UPoly::from_coeffs(self.coeffs.iter().map(|k| k * c).collect())
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        self.scale(&self.lc().recip())
    }

    pub fn neg(&self) -> UPoly {
        UPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        UPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UPoly::from_coeffs(out)
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn div_rem(&self, divisor: &UPoly) -> (UPoly, UPoly) {
        assert!(!divisor.is_zero(), "univariate division by zero");
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        if self.degree() < dd || self.is_zero() {
            return (UPoly::zero(), self.clone());
        }
        let mut quo = vec![Rat::zero(); self.degree() - dd + 1];
        let inv_lc = divisor.lc().recip();
        for k in (dd..rem.len()).rev() {
            let q = &rem[k] * &inv_lc;
            if q.is_zero() {
                continue;
            }
            quo[k - dd] = q.clone();
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let t = c * &q;
                rem[k - dd + i] -= &t;
            }
        }
        rem.truncate(dd);
        (UPoly::from_coeffs(quo), UPoly::from_coeffs(rem))
    }

    /// Pseudo-remainder `lc(b)^(da-db+1) a mod b`; integer-preserving, so
    /// the gcd chain can strip content instead of dragging fractions.
    pub fn pseudo_rem(&self, divisor: &UPoly) -> UPoly {
        assert!(!divisor.is_zero(), "pseudo-division by zero");
        let dd = divisor.degree();
        if self.is_zero() || self.degree() < dd {
            return self.clone();
        }
        let lb = divisor.lc();
        let mut rem = self.coeffs.clone();
        let mut steps = 0u32;
        for k in (dd..rem.len()).rev() {
            let lead = rem[k].clone();
            for c in rem.iter_mut() {
                *c *= &lb;
            }
            if !lead.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    let t = c * &lead;
                    rem[k - dd + i] -= &t;
                }
            }
            steps += 1;
        }
        let want = (self.degree() - dd + 1) as u32;
        if steps < want {
            let extra = lb.pow(want - steps);
            for c in rem.iter_mut() {
                *c *= &extra;
            }
        }
        rem.truncate(dd);
        UPoly::from_coeffs(rem)
    }

    /// Monic gcd via a primitive pseudo-remainder sequence; coefficient
    /// growth stays polynomial instead of the fraction-Euclid blowup.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.primitive_positive();
        let mut b = other.primitive_positive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_positive();
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Squarefree part (each root once), monic.
    pub fn squarefree_part(&self) -> UPoly {
        if self.degree() == 0 || self.is_zero() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.monic();
        }
        self.div_rem(&g).0.monic()
    }

    /// Primitive integer form with positive leading coefficient.
    pub fn primitive_positive(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut content = Rat::zero();
        for c in &self.coeffs {
            content = content.gcd(c);
        }
        if self.lc().is_negative() {
            content = -content;
        }
        self.scale(&content.recip())
    }

    /// Sturm chain of the squarefree part. Entries are rescaled by positive
    /// constants (sign variations are unaffected) to keep coefficients small.
    pub fn sturm_chain(&self) -> Vec<UPoly> {
        let p = self.squarefree_part();
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            // Pseudo-remainder scaled by an even lc power stays a positive
            // multiple of the true remainder.
            let a = &chain[n - 2];
            let b = &chain[n - 1];
            let delta = (a.degree() as i64 - b.degree() as i64 + 1).max(1);
            let mut r = a.pseudo_rem(b);
            if delta % 2 == 1 {
                r = r.scale(&b.lc());
            }
            if r.is_zero() {
                break;
            }
            let mut content = Rat::zero();
            for c in &r.coeffs {
                content = content.gcd(c);
            }
            chain.push(r.neg().scale(&content.recip()));
        }
        chain
    }

    /// Number of distinct real roots in `(a, b]`, by Sturm's theorem.
    pub fn count_roots_in(&self, chain: &[UPoly], a: &Rat, b: &Rat) -> usize {
        let va = sign_variations(chain, a);
        let vb = sign_variations(chain, b);
        va.saturating_sub(vb)
    }

    /// Number of distinct real roots in `(a, +infinity)`.
    pub fn count_roots_above(&self, chain: &[UPoly], a: &Rat) -> usize {
        let va = sign_variations(chain, a);
        let vinf = sign_variations_at_infinity(chain);
        va.saturating_sub(vinf)
    }

    /// All distinct real roots to high precision, as f64.
    pub fn real_roots(&self) -> Vec<f64> {
        self.real_root_intervals()
            .into_iter()
            .map(|(lo, hi)| 0.5 * (lo.to_f64() + hi.to_f64()))
            .collect()
    }

    /// Certified rational brackets around every distinct real root, sorted,
    /// each of width below f64 resolution (exact arithmetic throughout).
    pub fn real_root_intervals(&self) -> Vec<(Rat, Rat)> {
        let sqf = self.squarefree_part();
        if sqf.degree() == 0 {
            return Vec::new();
        }
        let chain = sqf.sturm_chain();
        let bound = root_bound(&sqf);
        let total = sqf.count_roots_in(&chain, &-bound.clone(), &bound);
        let mut intervals = vec![(-bound.clone(), bound.clone(), total)];
        let mut isolated = Vec::new();
        while let Some((lo, hi, n)) = intervals.pop() {
            if n == 0 {
                continue;
            }
            if n == 1 {
                isolated.push((lo, hi));
                continue;
            }
            let mid = (&lo + &hi) / Rat::from_int(2);
            // Split at mid; nudge if mid is itself a root.
            let mut mid = mid;
            while sqf.eval(&mid).is_zero() {
                mid = (&lo + &mid) / Rat::from_int(2);
            }
            let left = sqf.count_roots_in(&chain, &lo, &mid);
            intervals.push((lo, mid.clone(), left));
            intervals.push((mid, hi, n - left));
        }
        let mut roots: Vec<(Rat, Rat)> = isolated
            .into_iter()
            .map(|(mut lo, mut hi)| {
                // Exact bisection down to f64 resolution; no floating
                // arithmetic touches the bracket, so cancellation in the
                // high-degree evaluation cannot stall convergence.
                for _ in 0..90 {
                    let mid = (&lo + &hi) / Rat::from_int(2);
                    let fm = sqf.eval(&mid);
                    if fm.is_zero() {
                        lo = mid.clone();
                        hi = mid;
                        break;
                    }
                    if sign(&sqf.eval(&lo)) * sign(&fm) <= 0 {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                    if hi.to_f64() - lo.to_f64() < 5e-16 * (1.0 + hi.to_f64().abs()) {
                        break;
                    }
                }
                (lo, hi)
            })
            .collect();
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        roots
    }
}

fn sign_variations(chain: &[UPoly], x: &Rat) -> usize {
    let mut vars = 0;
    let mut last = 0i32;
    for p in chain {
        let s = sign(&p.eval(x));
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            vars += 1;
        }
        last = s;
    }
    vars
}

fn sign_variations_at_infinity(chain: &[UPoly]) -> usize {
    let mut vars = 0;
    let mut last = 0i32;
    for p in chain {
        if p.is_zero() {
            continue;
        }
        let s = sign(&p.lc());
        if last != 0 && s != last {
            vars += 1;
        }
        last = s;
    }
    vars
}

/// Cauchy bound: all real roots lie in [-M, M], M = 1 + max |a_i / a_n|.
fn root_bound(p: &UPoly) -> Rat {
    let lc = p.lc().abs();
    let mut m = Rat::zero();
    for c in &p.coeffs {
        let q = c.abs() / lc.clone();
        if q > m {
            m = q;
        }
    }
    m + Rat::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn upoly(cs: &[i64]) -> UPoly {
        UPoly::from_coeffs(cs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let p = upoly(&[-1, 0, 1]);
        let d = upoly(&[-1, 1]);
        let (q, r) = p.div_rem(&d);
        assert_eq!(q, upoly(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(p.gcd(&d), d.monic());
    }

    #[test]
    fn sturm_counts_and_roots() {
        // (x - 1)(x - 2)(x + 3) has roots -3, 1, 2.
        let p = upoly(&[6, -7, 0, 1]).mul(&UPoly::constant(Rat::one()));
        let roots = p.real_roots();
        assert_eq!(roots.len(), 3);
        assert!((roots[0] + 3.0).abs() < 1e-12);
        assert!((roots[1] - 1.0).abs() < 1e-12);
        assert!((roots[2] - 2.0).abs() < 1e-12);
        let chain = p.sturm_chain();
        assert_eq!(p.count_roots_above(&chain, &Rat::zero()), 2);
        assert_eq!(p.count_roots_in(&chain, &Rat::from_int(-4), &Rat::zero()), 1);
    }

    #[test]
    fn repeated_roots_counted_once() {
        // (x - 1)^2 (x + 2)
        let p = upoly(&[-1, 1]).mul(&upoly(&[-1, 1])).mul(&upoly(&[2, 1]));
        let roots = p.real_roots();
        assert_eq!(roots.len(), 2);
    }

    #[test]
    fn close_roots_are_separated() {
        // roots at 0, 1/1024, 1: tight cluster near zero.
        let p = upoly(&[0, 1])
            .mul(&UPoly::from_coeffs(vec![Rat::frac(-1, 1024), Rat::one()]))
            .mul(&upoly(&[-1, 1]));
        let roots = p.real_roots();
        assert_eq!(roots.len(), 3);
        assert!((roots[1] - 1.0 / 1024.0).abs() < 1e-13);
    }
}

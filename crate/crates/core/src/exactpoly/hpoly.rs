//! Homogeneous bivariate polynomials with exact coefficients.
//!
//! `HPoly2G<F>` stores a form of structural degree `d` in variables `(s, t)`
//! as the coefficient list `c_0..c_d`, where `c_k` multiplies `s^(d-k) t^k`.
//! Leading or trailing zero coefficients are meaningful (they record factors
//! of `t` resp. `s`); only the identically-zero polynomial is normalised, to
//! degree 0 with a single zero coefficient.

use super::rat::{CoefField, Rat};
use num_traits::Zero;

/// Homogeneous polynomial in two variables over the field `F`.
#[derive(Clone, Debug, PartialEq)]
pub struct HPoly2G<F: CoefField> {
    coeffs: Vec<F>,
}

/// Homogeneous bivariate polynomial with exact rational coefficients.
pub type HPoly2 = HPoly2G<Rat>;

impl<F: CoefField> HPoly2G<F> {
    /// Builds a form from coefficients `c_k` of `s^(d-k) t^k`; the degree is
    /// `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "a polynomial needs at least one coefficient");
        let p = HPoly2G { coeffs };
        if p.is_zero() {
            Self::zero()
        } else {
            p
        }
    }

    pub fn zero() -> Self {
        HPoly2G { coeffs: vec![F::zero()] }
    }

    pub fn constant(c: F) -> Self {
        HPoly2G { coeffs: vec![c] }
    }

    /// The monomial `coef · s^i t^j`.
    pub fn monomial(coef: F, i: usize, j: usize) -> Self {
        if coef.is_zero() {
            return Self::zero();
        }
        let d = i + j;
        let mut coeffs = vec![F::zero(); d + 1];
        coeffs[j] = coef;
        HPoly2G { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Exact evaluation at `(s, t)`.
    pub fn eval(&self, s: &F, t: &F) -> F {
        // Two-sided Horner on the homogeneous form.
        let d = self.degree();
        let mut acc = F::zero();
        let mut t_pow = F::one();
        let mut pows_s = Vec::with_capacity(d + 1);
        let mut sp = F::one();
        for _ in 0..=d {
            pows_s.push(sp.clone());
            sp = sp * s.clone();
        }
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc + c.clone() * pows_s[d - k].clone() * t_pow.clone();
            }
            if k < d {
                t_pow = t_pow * t.clone();
            }
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        assert_eq!(
            self.degree(),
            other.degree(),
            "sum of homogeneous polynomials of different degrees is not homogeneous"
        );
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Self::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        HPoly2G { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn scale(&self, k: &F) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        HPoly2G { coeffs: self.coeffs.iter().map(|c| c.clone() * k.clone()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        HPoly2G { coeffs }
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::constant(F::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Number of factors of `t` dividing the form (degree if zero).
    pub fn t_multiplicity(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(self.degree())
    }

    /// Number of factors of `s` dividing the form (degree if zero).
    pub fn s_multiplicity(&self) -> usize {
        match self.coeffs.iter().rposition(|c| !c.is_zero()) {
            Some(last) => self.degree() - last,
            None => self.degree(),
        }
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dq = self.degree().checked_sub(divisor.degree())?;
        // Long division on the coefficient vectors, top (s-leading) first.
        let mut rem = self.coeffs.clone();
        let lead_idx = divisor.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        if lead_idx > 0 {
            // Divisor has a factor t^lead_idx; self must too.
            if self.t_multiplicity() < lead_idx {
                return None;
            }
        }
        let lead = divisor.coeffs[lead_idx].clone();
        let lead_inv = lead.inv();
        let mut quot = vec![F::zero(); dq + 1];
        for k in 0..=dq {
            // Position of s^(d-k) t^k in rem aligns with divisor's leading term.
            let idx = k + lead_idx;
            if idx >= rem.len() {
                return None;
            }
            let q = rem[idx].clone() * lead_inv.clone();
            quot[k] = q.clone();
            if q.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate().skip(lead_idx) {
                let pos = k + j;
                rem[pos] = rem[pos].clone() - q.clone() * dc.clone();
            }
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Self::new(quot))
        } else {
            None
        }
    }

    /// Scales so the leading (lowest-`k`) nonzero coefficient is 1.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lead = self.coeffs.iter().find(|c| !c.is_zero()).unwrap();
        self.scale(&lead.inv())
    }

    /// Maps coefficients into another field.
    pub fn map<G: CoefField>(&self, f: impl Fn(&F) -> G) -> HPoly2G<G> {
        HPoly2G::new(self.coeffs.iter().map(|c| f(c)).collect())
    }
}

impl HPoly2 {
    /// Convenience constructor from small integers.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| super::rat::rat_i(c)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat::{rat, rat_i};

    #[test]
    fn eval_examples() {
        // s² - t² at (1,0) -> 1 and at (1,1) -> 0.
        let p = HPoly2::from_ints(&[1, 0, -1]);
        assert_eq!(p.eval(&rat_i(1), &rat_i(0)), rat_i(1));
        assert_eq!(p.eval(&rat_i(1), &rat_i(1)), rat_i(0));
        // (s² + t²)² at (1,2) -> 25, expanded through mul as the oracle.
        let q = HPoly2::from_ints(&[1, 0, 1]);
        let q2 = q.mul(&q);
        assert_eq!(q2, HPoly2::from_ints(&[1, 0, 2, 0, 1]));
        assert_eq!(q2.eval(&rat_i(1), &rat_i(2)), rat_i(25));
        assert_eq!(q2.eval(&rat(1, 2), &rat(1, 2)), rat(1, 4));
    }

    #[test]
    fn structural_degree_is_kept() {
        // s·t² has degree 3 even though the s³ coefficient vanishes.
        let p = HPoly2::from_ints(&[0, 0, 1, 0]);
        assert_eq!(p.degree(), 3);
        assert_eq!(p.t_multiplicity(), 2);
        assert_eq!(p.s_multiplicity(), 1);
        assert!(HPoly2::from_ints(&[0, 0]).is_zero());
        assert_eq!(HPoly2::from_ints(&[0, 0]).degree(), 0);
    }

    #[test]
    fn exact_division() {
        let a = HPoly2::from_ints(&[1, 0, -1]); // s² - t² = (s-t)(s+t)
        let d = HPoly2::from_ints(&[1, -1]); // s - t
        let q = a.div_exact(&d).unwrap();
        assert_eq!(q, HPoly2::from_ints(&[1, 1]));
        assert!(a.div_exact(&HPoly2::from_ints(&[1, 1, 1])).is_none());
        // Division by a form with a t factor.
        let st = HPoly2::from_ints(&[0, 1]); // t
        let p = HPoly2::from_ints(&[0, 2, 0, -2]); // 2t(s² - t²)
        assert_eq!(p.div_exact(&st).unwrap(), HPoly2::from_ints(&[2, 0, -2]));
        assert!(HPoly2::from_ints(&[1, 0]).div_exact(&st).is_none());
    }
}

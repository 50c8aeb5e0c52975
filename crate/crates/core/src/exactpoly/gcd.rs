//! Greatest common divisors of homogeneous binary forms.
//!
//! The rational path dehomogenises at `t = 1`, clears denominators, runs the
//! subresultant pseudo-remainder sequence over the integers (which keeps the
//! intermediate coefficients from exploding), and rehomogenises, accounting
//! separately for common powers of `t` lost by the dehomogenisation.
//!
//! A plain monic Euclid over any coefficient field is kept alongside; it
//! serves the Gaussian-rational instances and cross-checks the subresultant
//! route in tests.

use super::hpoly::{HPoly2, HPoly2G};
use super::rat::{CoefField, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Gcd of two homogeneous rational forms.
///
/// The result is normalised so its leading (highest power of `s`) nonzero
/// coefficient is 1; `hp_gcd(a, 0)` is the monic form of `a`. The inputs must
/// not both be zero.
pub fn hp_gcd(a: &HPoly2, b: &HPoly2) -> HPoly2 {
    assert!(!(a.is_zero() && b.is_zero()), "gcd of two zero polynomials");
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let ta = a.t_multiplicity();
    let tb = b.t_multiplicity();
    let t_common = ta.min(tb);
    let ua = dehomogenize(a);
    let ub = dehomogenize(b);
    let g = int_poly_gcd(&ua, &ub);
    let core = rehomogenize(&g);
    HPoly2G::monomial(Rat::one(), 0, t_common).mul(&core).monic()
}

/// Gcd over an arbitrary coefficient field by monic Euclid.
pub fn hp_gcd_field<F: CoefField>(a: &HPoly2G<F>, b: &HPoly2G<F>) -> HPoly2G<F> {
    assert!(!(a.is_zero() && b.is_zero()), "gcd of two zero polynomials");
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let t_common = a.t_multiplicity().min(b.t_multiplicity());
    let mut f = strip_t(a);
    let mut g = strip_t(b);
    // Univariate Euclid in the s-degree, written on the homogeneous forms:
    // the remainder of forms with t ∤ f, t ∤ g is computed by long division
    // of the dehomogenised polynomials, then rehomogenised at its own degree.
    let mut uf = dehom_field(&f);
    let mut ug = dehom_field(&g);
    loop {
        if ug.iter().all(|c| c.is_zero()) {
            break;
        }
        let r = upoly_rem(&uf, &ug);
        uf = ug;
        ug = r;
    }
    f = rehom_field(&uf);
    g = HPoly2G::monomial(F::one(), 0, t_common);
    g.mul(&f).monic()
}

/// Folds `hp_gcd_field` over a list of forms (not all zero).
pub fn hp_gcd_many<F: CoefField>(forms: &[HPoly2G<F>]) -> HPoly2G<F> {
    let mut acc: Option<HPoly2G<F>> = None;
    for f in forms {
        if f.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => f.monic(),
            Some(g) => {
                if g.degree() == 0 {
                    g // already constant; gcd cannot shrink further
                } else {
                    hp_gcd_field(&g, f)
                }
            }
        });
    }
    acc.expect("gcd of an all-zero family")
}

fn strip_t<F: CoefField>(p: &HPoly2G<F>) -> HPoly2G<F> {
    let tm = p.t_multiplicity();
    let coeffs = p.coeffs()[tm..].to_vec();
    HPoly2G::new(coeffs)
}

/// Dehomogenised coefficients at `t = 1`, ascending in powers of `s`.
fn dehom_field<F: CoefField>(p: &HPoly2G<F>) -> Vec<F> {
    // coeff of s^(d-k) is coeffs[k]; ascending in s means reversed order.
    let mut v: Vec<F> = p.coeffs().to_vec();
    v.reverse();
    trim(&mut v);
    v
}

fn rehom_field<F: CoefField>(u: &[F]) -> HPoly2G<F> {
    let mut v = u.to_vec();
    trim(&mut v);
    v.reverse();
    HPoly2G::new(v)
}

fn trim<F: Zero>(v: &mut Vec<F>) {
    while v.len() > 1 && v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

/// Remainder of univariate division over a field (ascending coefficients).
fn upoly_rem<F: CoefField>(a: &[F], b: &[F]) -> Vec<F> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return rem;
    }
    let lead_inv = b[db].inv();
    while rem.len() >= b.len() && !(rem.len() == 1 && rem[0].is_zero()) {
        let da = rem.len() - 1;
        let q = rem[da].clone() * lead_inv.clone();
        let shift = da - db;
        for (j, bc) in b.iter().enumerate() {
            rem[shift + j] = rem[shift + j].clone() - q.clone() * bc.clone();
        }
        rem.pop();
        trim(&mut rem);
    }
    if rem.is_empty() {
        rem.push(F::zero());
    }
    rem
}

/// Dehomogenises a rational form at `t = 1` into a primitive integer
/// polynomial (ascending in `s`), dropping its rational content.
fn dehomogenize(p: &HPoly2) -> Vec<BigInt> {
    let rats = dehom_field(p);
    let mut den_lcm = BigInt::one();
    for c in &rats {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = rats.iter().map(|c| (c * Rat::from_integer(den_lcm.clone())).to_integer()).collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    if !content.is_zero() && !content.is_one() {
        for c in ints.iter_mut() {
            *c /= &content;
        }
    }
    ints
}

fn rehomogenize(u: &[BigInt]) -> HPoly2 {
    let mut v: Vec<Rat> = u.iter().map(|c| Rat::from_integer(c.clone())).collect();
    trim(&mut v);
    v.reverse();
    HPoly2G::new(v)
}

fn int_trim(v: &mut Vec<BigInt>) {
    while v.len() > 1 && v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

fn int_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    int_trim(&mut v);
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if content.is_zero() || content.is_one() {
        return v;
    }
    for c in v.iter_mut() {
        *c /= &content;
    }
    v
}

/// Pseudo-remainder: `lc(b)^(da-db+1) · a  mod  b` (ascending coefficients).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lc_b = b[db].clone();
    let mut rem = a.to_vec();
    let mut steps = a.len() as i64 - b.len() as i64 + 1;
    while rem.len() >= b.len() && !(rem.len() == 1 && rem[0].is_zero()) {
        let da = rem.len() - 1;
        let coef = rem[da].clone();
        let shift = da - db;
        for c in rem.iter_mut() {
            *c *= &lc_b;
        }
        for (j, bc) in b.iter().enumerate() {
            rem[shift + j] -= &coef * bc;
        }
        rem.pop();
        int_trim(&mut rem);
        if rem.is_empty() {
            rem.push(BigInt::zero());
        }
        steps -= 1;
    }
    // Pad the multiplier so the pseudo-remainder matches lc^(da-db+1)·a mod b.
    while steps > 0 {
        for c in rem.iter_mut() {
            *c *= &lc_b;
        }
        steps -= 1;
    }
    rem
}

/// Gcd of integer polynomials by the subresultant pseudo-remainder sequence.
fn int_poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut f = int_primitive(a.to_vec());
    let mut g = int_primitive(b.to_vec());
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    if g.len() == 1 && g[0].is_zero() {
        return f;
    }
    let mut h = BigInt::one();
    let mut s = BigInt::one();
    loop {
        let delta = f.len() - g.len();
        let rem = pseudo_rem(&f, &g);
        if rem.len() == 1 && rem[0].is_zero() {
            return int_primitive(g);
        }
        if rem.len() == 1 {
            return vec![BigInt::one()];
        }
        // Brown's coefficient reduction: divide by s·h^delta exactly.
        let mut divisor = s.clone();
        for _ in 0..delta {
            divisor *= &h;
        }
        let reduced: Vec<BigInt> = rem.iter().map(|c| c / &divisor).collect();
        f = g;
        g = reduced;
        s = f[f.len() - 1].clone();
        // h = s^delta · h^(1-delta), computed exactly.
        h = if delta == 0 {
            h
        } else {
            let mut num = s.clone();
            for _ in 1..delta {
                num *= &s;
            }
            let mut den = BigInt::one();
            for _ in 1..delta {
                den *= &h;
            }
            num / den
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat::{rat_i, GRat};

    #[test]
    fn gcd_linear_factor() {
        // gcd(s²-t², s-t) = s-t
        let a = HPoly2::from_ints(&[1, 0, -1]);
        let b = HPoly2::from_ints(&[1, -1]);
        assert_eq!(hp_gcd(&a, &b), HPoly2::from_ints(&[1, -1]));
    }

    #[test]
    fn gcd_coprime_monomials() {
        // gcd(s², t²) = 1
        let a = HPoly2::from_ints(&[1, 0, 0]);
        let b = HPoly2::from_ints(&[0, 0, 1]);
        assert_eq!(hp_gcd(&a, &b), HPoly2::from_ints(&[1]));
    }

    #[test]
    fn gcd_quadratic_common_factor() {
        // gcd((s²+t²)(s-t), (s²+t²)(s+t)) = s²+t², products expanded exactly
        // and the result checked by the exact-division oracle.
        let c = HPoly2::from_ints(&[1, 0, 1]);
        let a = c.mul(&HPoly2::from_ints(&[1, -1]));
        let b = c.mul(&HPoly2::from_ints(&[1, 1]));
        let g = hp_gcd(&a, &b);
        assert_eq!(g, c);
        assert!(a.div_exact(&g).is_some());
        assert!(b.div_exact(&g).is_some());
    }

    #[test]
    fn gcd_with_zero_is_monic_part() {
        let a = HPoly2::from_ints(&[3, 0, -3]);
        let g = hp_gcd(&a, &HPoly2::zero());
        assert_eq!(g, HPoly2::from_ints(&[1, 0, -1]));
    }

    #[test]
    fn gcd_tracks_powers_of_t() {
        // gcd(t²(s+t), t(s-t)) = t
        let t = HPoly2::from_ints(&[0, 1]);
        let a = t.mul(&t).mul(&HPoly2::from_ints(&[1, 1]));
        let b = t.mul(&HPoly2::from_ints(&[1, -1]));
        assert_eq!(hp_gcd(&a, &b), t);
    }

    #[test]
    fn field_euclid_matches_subresultant() {
        let c = HPoly2::from_ints(&[2, -1, 3]);
        let a = c.mul(&HPoly2::from_ints(&[1, -4, 0, 2]));
        let b = c.mul(&HPoly2::from_ints(&[5, 1]));
        assert_eq!(hp_gcd(&a, &b), hp_gcd_field(&a, &b));
    }

    #[test]
    fn gaussian_gcd() {
        // gcd over Q(i): common factor (s - i t).
        let i = GRat::i();
        let one = GRat::real(rat_i(1));
        let f = HPoly2G::new(vec![one.clone(), -i.clone()]); // s - i t
        let a = f.mul(&HPoly2G::new(vec![one.clone(), i.clone()])); // (s-it)(s+it) = s²+t²
        let b = f.mul(&HPoly2G::new(vec![one.clone(), one.clone()])); // (s-it)(s+t)
        let g = hp_gcd_field(&a, &b);
        assert_eq!(g, f.monic());
    }
}

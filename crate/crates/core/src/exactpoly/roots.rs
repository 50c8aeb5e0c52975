//! Numeric root finding for low-degree real polynomials, with multiplicities.
//!
//! Roots come from the companion-matrix eigenvalues; close roots are merged
//! into multiple roots by clustering, then each cluster representative is
//! polished by Newton iteration on the appropriate derivative. The contract
//! is backward error: the monic polynomial rebuilt from the returned roots
//! matches the input to within 1e-8 relative.

use crate::error::Error;
use crate::Result;
use nalgebra::DMatrix;
use num_complex::Complex64;

/// Relative radius used to merge eigenvalues into a multiple root. Double
/// roots computed at double precision split by about sqrt(machine epsilon),
/// i.e. 1e-8, so 1e-7 catches them while keeping genuinely distinct roots of
/// non-degenerate inputs apart.
pub const CLUSTER_RADIUS: f64 = 1e-7;

/// Coefficients below this fraction of the largest one are treated as zero
/// when reducing the degree.
const DEGENERATE_COEFF_TOL: f64 = 1e-12;

/// A complex root together with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexRoot {
    pub value: Complex64,
    pub multiplicity: usize,
}

/// All complex roots, with multiplicity, of a real polynomial of degree ≤ 4.
///
/// `coeffs` are descending: `coeffs[0]·x⁴ + coeffs[1]·x³ + … + coeffs[4]`.
/// Leading coefficients are dropped when negligible relative to the largest
/// coefficient, so degenerate quartics fall back to cubics, quadratics and so
/// on. Returns `AllCoefficientsZero` when every coefficient is negligible
/// (absolute tolerance 1e-12), which signals an identically satisfied
/// equation rather than a finite root set.
pub fn solve_real_coeff_quartic(coeffs: &[f64; 5]) -> Result<Vec<ComplexRoot>> {
    solve_real_poly(coeffs)
}

/// Same contract for an arbitrary descending coefficient slice.
pub fn solve_real_poly(coeffs: &[f64]) -> Result<Vec<ComplexRoot>> {
    let scale = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    if scale < 1e-12 {
        return Err(Error::AllCoefficientsZero);
    }
    let mut lead = 0;
    while lead < coeffs.len() - 1 && coeffs[lead].abs() <= DEGENERATE_COEFF_TOL * scale {
        lead += 1;
    }
    let work = &coeffs[lead..];
    let n = work.len() - 1;
    if n == 0 {
        return Ok(Vec::new());
    }
    let raw = companion_eigenvalues(work);
    let clusters = cluster_roots(&raw);
    let mut roots: Vec<ComplexRoot> = clusters
        .into_iter()
        .map(|(z, m)| ComplexRoot { value: polish_root(work, z, m), multiplicity: m })
        .collect();
    symmetrize_conjugates(&mut roots);
    roots.sort_by(|a, b| {
        (a.value.re, a.value.im)
            .partial_cmp(&(b.value.re, b.value.im))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(roots)
}

/// Roots of the homogeneous binary form `sum_j k[j] x^(d-j) y^j` as projective
/// pairs `(x : y)`, multiplicity-counted; the total always equals the degree.
/// Roots at or near `(1 : 0)` are handled through the reversed chart, so a
/// negligible leading coefficient costs no multiplicity.
pub fn solve_binary_form(coeffs: &[f64]) -> Result<Vec<(Complex64, Complex64, usize)>> {
    let d = coeffs.len() - 1;
    let scale = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    if scale < 1e-12 {
        return Err(Error::AllCoefficientsZero);
    }
    let norm: Vec<f64> = coeffs.iter().map(|c| c / scale).collect();
    let mut lead = 0;
    while lead < norm.len() - 1 && norm[lead].abs() <= DEGENERATE_COEFF_TOL {
        lead += 1;
    }
    let affine = companion_eigenvalues(&norm[lead..]);
    let mut projective: Vec<(Complex64, Complex64)> = affine
        .iter()
        .map(|&z| {
            if z.norm() > 1.0 {
                (Complex64::new(1.0, 0.0), 1.0 / z)
            } else {
                (z, Complex64::new(1.0, 0.0))
            }
        })
        .collect();
    for _ in 0..lead {
        projective.push((Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)));
    }
    let clusters = cluster_projective(&projective);
    let polished = clusters
        .into_iter()
        .map(|((x, y), m)| {
            // Polish in whichever chart keeps the coordinate small.
            if y.norm() >= x.norm() {
                let z = polish_root(&norm, x / y, m);
                if z.norm() <= 1.0 + 1e-12 {
                    return (z, Complex64::new(1.0, 0.0), m);
                }
                (Complex64::new(1.0, 0.0), 1.0 / z, m)
            } else {
                let rev: Vec<f64> = norm.iter().rev().copied().collect();
                let z = polish_root(&rev, y / x, m);
                (Complex64::new(1.0, 0.0), z, m)
            }
        })
        .collect();
    Ok(polished)
}

fn companion_eigenvalues(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    debug_assert!(n >= 1);
    let lead = coeffs[0];
    if n == 1 {
        return vec![Complex64::new(-coeffs[1] / lead, 0.0)];
    }
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        m[(i, n - 1)] = -coeffs[n - i] / lead;
    }
    match nalgebra::linalg::Schur::try_new(m.clone(), 1e-14, 0) {
        Some(schur) => schur.complex_eigenvalues().iter().copied().collect(),
        // Perturb minimally if the QR iteration stalls; for 4x4 companions
        // this is effectively unreachable.
        None => {
            let eps = 1e-13;
            let mut mp = m;
            for i in 0..n {
                mp[(i, i)] += eps * (i as f64 + 1.0);
            }
            nalgebra::linalg::Schur::new(mp).complex_eigenvalues().iter().copied().collect()
        }
    }
}

fn cluster_roots(roots: &[Complex64]) -> Vec<(Complex64, usize)> {
    let max_mag = roots.iter().fold(0.0f64, |m, z| m.max(z.norm()));
    let radius = CLUSTER_RADIUS * max_mag.max(1.0);
    let mut clusters: Vec<(Complex64, usize)> = Vec::new();
    for &z in roots {
        if let Some((c, m)) = clusters.iter_mut().find(|(c, _)| (*c - z).norm() <= radius) {
            // Update the centroid.
            let k = *m as f64;
            *c = (*c * k + z) / (k + 1.0);
            *m += 1;
        } else {
            clusters.push((z, 1));
        }
    }
    clusters
}

fn cluster_projective(roots: &[(Complex64, Complex64)]) -> Vec<((Complex64, Complex64), usize)> {
    // Chordal metric |x1·y2 - x2·y1| / (|r1|·|r2|) on normalised pairs.
    let mut clusters: Vec<((Complex64, Complex64), usize)> = Vec::new();
    for &(x, y) in roots {
        let n = (x.norm_sqr() + y.norm_sqr()).sqrt();
        let (x, y) = (x / n, y / n);
        let hit = clusters.iter_mut().find(|((cx, cy), _)| {
            (x * *cy - y * *cx).norm() <= CLUSTER_RADIUS
        });
        if let Some((_, m)) = hit {
            *m += 1;
        } else {
            clusters.push(((x, y), 1));
        }
    }
    clusters
}

/// Newton-polishes a root of multiplicity `m` by iterating on the (m-1)-th
/// derivative, where the root is simple. Steps that move outside the cluster
/// radius are rejected.
fn polish_root(coeffs: &[f64], z0: Complex64, multiplicity: usize) -> Complex64 {
    let mut der: Vec<f64> = coeffs.to_vec();
    for _ in 1..multiplicity {
        der = differentiate(&der);
    }
    if der.len() < 2 {
        return z0;
    }
    let guard = CLUSTER_RADIUS * z0.norm().max(1.0) * 4.0;
    let mut z = z0;
    for _ in 0..8 {
        let p = eval_poly(&der, z);
        let dp = eval_poly(&differentiate(&der), z);
        if dp.norm() == 0.0 {
            break;
        }
        let step = p / dp;
        if !step.re.is_finite() || !step.im.is_finite() {
            break;
        }
        if (z - step - z0).norm() > guard {
            break;
        }
        z -= step;
        if step.norm() <= 1e-16 * z.norm().max(1.0) {
            break;
        }
    }
    z
}

fn differentiate(coeffs: &[f64]) -> Vec<f64> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return vec![0.0];
    }
    coeffs[..n]
        .iter()
        .enumerate()
        .map(|(i, c)| c * (n - i) as f64)
        .collect()
}

fn eval_poly(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs.iter().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// Enforces exact conjugate pairing: near-real roots are snapped onto the
/// real axis, and complex clusters of equal multiplicity are averaged with
/// their conjugate partners.
fn symmetrize_conjugates(roots: &mut [ComplexRoot]) {
    let max_mag = roots.iter().fold(0.0f64, |m, r| m.max(r.value.norm()));
    let radius = CLUSTER_RADIUS * max_mag.max(1.0);
    for r in roots.iter_mut() {
        if r.value.im.abs() <= radius {
            r.value.im = 0.0;
        }
    }
    let n = roots.len();
    let mut paired = vec![false; n];
    for i in 0..n {
        if paired[i] || roots[i].value.im <= 0.0 {
            continue;
        }
        for j in 0..n {
            if i == j || paired[j] || roots[j].value.im >= 0.0 {
                continue;
            }
            if (roots[i].value - roots[j].value.conj()).norm() <= radius
                && roots[i].multiplicity == roots[j].multiplicity
            {
                let avg = (roots[i].value + roots[j].value.conj()) * 0.5;
                roots[i].value = avg;
                roots[j].value = avg.conj();
                paired[i] = true;
                paired[j] = true;
                break;
            }
        }
    }
}

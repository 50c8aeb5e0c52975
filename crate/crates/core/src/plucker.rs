//! Lines in projective 3-space through Plücker coordinates, spheres, and the
//! incidence/tangency forms on the Klein quadric.
//!
//! Conventions, used consistently everywhere: homogeneous points are
//! `(w, x, y, z)` with index 0 the homogenising coordinate; Plücker vectors
//! are ordered `(p01, p02, p03, p12, p13, p23)`; the line through affine
//! points `a` and `b` (as `(1, a)`, `(1, b)`) has direction part
//! `(p01, p02, p03) = b - a` and moment `(p23, -p13, p12) = a × b`.

use crate::error::Error;
use crate::Result;
use num_complex::Complex64;

/// Incidence tolerance on normalised coordinates: below the accumulated
/// rounding of six-term minors, above double precision noise.
pub const INCIDENCE_TOL: f64 = 1e-9;

/// Tangency-residual tolerance on normalised Plücker vectors.
pub const RESIDUAL_TOL: f64 = 1e-7;

pub mod vec3 {
    //! Small helpers on `[f64; 3]` vectors.

    pub fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
        a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
    }

    pub fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
        [
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ]
    }

    pub fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
        [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
    }

    pub fn add(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
        [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
    }

    pub fn scale(a: [f64; 3], k: f64) -> [f64; 3] {
        [a[0] * k, a[1] * k, a[2] * k]
    }

    pub fn norm(a: [f64; 3]) -> f64 {
        dot(a, a).sqrt()
    }

    pub fn normalize(a: [f64; 3]) -> [f64; 3] {
        scale(a, 1.0 / norm(a))
    }

    /// A unit vector orthogonal to `a`, chosen deterministically.
    pub fn any_orthogonal(a: [f64; 3]) -> [f64; 3] {
        let abs = [a[0].abs(), a[1].abs(), a[2].abs()];
        let mut k = 0;
        if abs[1] < abs[k] {
            k = 1;
        }
        if abs[2] < abs[k] {
            k = 2;
        }
        let mut e = [0.0; 3];
        e[k] = 1.0;
        normalize(cross(a, e))
    }
}

use vec3::*;

/// Affine point in 3-space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Point3 { x, y, z }
    }

    pub fn coords(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

impl From<[f64; 3]> for Point3 {
    fn from(c: [f64; 3]) -> Self {
        Point3 { x: c[0], y: c[1], z: c[2] }
    }
}

/// Homogeneous point `(w, x, y, z)`; equality is projective.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HomPoint4 {
    pub c0: f64,
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

impl HomPoint4 {
    pub fn new(c0: f64, c1: f64, c2: f64, c3: f64) -> Self {
        HomPoint4 { c0, c1, c2, c3 }
    }

    pub fn from_affine(p: Point3) -> Self {
        HomPoint4 { c0: 1.0, c1: p.x, c2: p.y, c3: p.z }
    }

    /// Point at infinity in the direction `d`.
    pub fn at_infinity(d: [f64; 3]) -> Self {
        HomPoint4 { c0: 0.0, c1: d[0], c2: d[1], c3: d[2] }
    }

    pub fn coords(self) -> [f64; 4] {
        [self.c0, self.c1, self.c2, self.c3]
    }
}

/// A line in projective 3-space as a normalised point of the Klein quadric.
///
/// Stored so the coordinate of largest magnitude is exactly 1, which makes
/// the representative canonical and all tolerances scale-free.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PluckerLine {
    coords: [f64; 6],
}

impl PluckerLine {
    /// Builds a line from raw coordinates, normalising and checking the
    /// Plücker relation.
    pub fn from_coords(raw: [f64; 6]) -> Result<Self> {
        let max = raw.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        if max <= 0.0 || !max.is_finite() {
            return Err(Error::InvalidArgument("zero or non-finite Plücker vector".into()));
        }
        let pivot = raw
            .iter()
            .copied()
            .max_by(|a, b| a.abs().partial_cmp(&b.abs()).unwrap())
            .unwrap();
        let coords = raw.map(|c| c / pivot);
        let line = PluckerLine { coords };
        if line.plucker_residual().abs() > 1e-9 {
            return Err(Error::InvalidArgument(format!(
                "coordinates violate the Plücker relation (residual {:.3e})",
                line.plucker_residual()
            )));
        }
        Ok(line)
    }

    /// The line through two projectively distinct homogeneous points.
    pub fn through_points(p: HomPoint4, q: HomPoint4) -> Result<Self> {
        let x = p.coords();
        let y = q.coords();
        let raw = [
            x[0] * y[1] - x[1] * y[0],
            x[0] * y[2] - x[2] * y[0],
            x[0] * y[3] - x[3] * y[0],
            x[1] * y[2] - x[2] * y[1],
            x[1] * y[3] - x[3] * y[1],
            x[2] * y[3] - x[3] * y[2],
        ];
        let sx = x.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        let sy = y.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        let scale = sx * sy;
        let max = raw.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        if max <= 1e-14 * scale {
            return Err(Error::CoincidentPoints);
        }
        Self::from_coords(raw)
    }

    /// The line through two affine points.
    pub fn through_affine(a: Point3, b: Point3) -> Result<Self> {
        Self::through_points(HomPoint4::from_affine(a), HomPoint4::from_affine(b))
    }

    /// The affine line through `p` with direction `d`.
    pub fn from_point_dir(p: Point3, d: [f64; 3]) -> Result<Self> {
        if norm(d) == 0.0 {
            return Err(Error::CoincidentPoints);
        }
        Self::through_points(HomPoint4::from_affine(p), HomPoint4::at_infinity(d))
    }

    pub fn x_axis() -> Self {
        PluckerLine { coords: [1.0, 0.0, 0.0, 0.0, 0.0, 0.0] }
    }

    pub fn z_axis() -> Self {
        PluckerLine { coords: [0.0, 0.0, 1.0, 0.0, 0.0, 0.0] }
    }

    pub fn coords(&self) -> [f64; 6] {
        self.coords
    }

    pub fn p01(&self) -> f64 {
        self.coords[0]
    }
    pub fn p02(&self) -> f64 {
        self.coords[1]
    }
    pub fn p03(&self) -> f64 {
        self.coords[2]
    }
    pub fn p12(&self) -> f64 {
        self.coords[3]
    }
    pub fn p13(&self) -> f64 {
        self.coords[4]
    }
    pub fn p23(&self) -> f64 {
        self.coords[5]
    }

    /// Residual of the Plücker relation `p03·p12 - p02·p13 + p01·p23`.
    pub fn plucker_residual(&self) -> f64 {
        self.coords[2] * self.coords[3] - self.coords[1] * self.coords[4]
            + self.coords[0] * self.coords[5]
    }

    /// Direction part; zero for a line at infinity.
    pub fn direction(&self) -> [f64; 3] {
        [self.coords[0], self.coords[1], self.coords[2]]
    }

    /// Moment part `a × b` for affine spanning points `a, b`.
    pub fn moment(&self) -> [f64; 3] {
        [self.coords[5], -self.coords[4], self.coords[3]]
    }

    pub fn is_affine(&self) -> bool {
        norm(self.direction()) > INCIDENCE_TOL
    }

    /// The affine point of the line closest to the origin.
    pub fn base_point(&self) -> Result<Point3> {
        let d = self.direction();
        let n2 = dot(d, d);
        if n2 <= INCIDENCE_TOL * INCIDENCE_TOL {
            return Err(Error::LineAtInfinity);
        }
        Ok(Point3::from(scale(cross(d, self.moment()), 1.0 / n2)))
    }

    /// Projective distance to another line: both representatives are
    /// canonical, but the sign may still differ near a pivot change.
    pub fn distance(&self, other: &PluckerLine) -> f64 {
        let mut dp = 0.0f64;
        let mut dm = 0.0f64;
        for k in 0..6 {
            dp += (self.coords[k] - other.coords[k]).powi(2);
            dm += (self.coords[k] + other.coords[k]).powi(2);
        }
        dp.sqrt().min(dm.sqrt())
    }

    /// Image under a rigid motion `x ↦ R·x + t`.
    pub fn transformed(&self, rot: &[[f64; 3]; 3], trans: [f64; 3]) -> Result<Self> {
        let d = self.direction();
        let b = self.base_point()?;
        let rd = apply_rot(rot, d);
        let rb = add(apply_rot(rot, b.coords()), trans);
        Self::from_point_dir(Point3::from(rb), rd)
    }
}

pub fn apply_rot(rot: &[[f64; 3]; 3], v: [f64; 3]) -> [f64; 3] {
    [dot(rot[0], v), dot(rot[1], v), dot(rot[2], v)]
}

/// The bilinear incidence form: zero exactly when the two lines meet in
/// projective space. Evaluated on the canonical representatives.
pub fn meet_form(a: &PluckerLine, b: &PluckerLine) -> f64 {
    let p = a.coords();
    let q = b.coords();
    p[0] * q[5] - p[1] * q[4] + p[2] * q[3] + p[3] * q[2] - p[4] * q[1] + p[5] * q[0]
}

/// True when the two affine lines have parallel directions; such lines meet
/// only at infinity and are excluded from affine transversal counts.
pub fn lines_parallel(a: &PluckerLine, b: &PluckerLine) -> bool {
    if !a.is_affine() || !b.is_affine() {
        return false;
    }
    let da = normalize(a.direction());
    let db = normalize(b.direction());
    norm(cross(da, db)) < INCIDENCE_TOL
}

/// Euclidean distance from an affine point to an affine line.
pub fn point_line_distance(p: Point3, m: &PluckerLine) -> Result<f64> {
    let d = m.direction();
    let nd = norm(d);
    if nd <= INCIDENCE_TOL {
        return Err(Error::LineAtInfinity);
    }
    // dist = |d × q + moment| / |d| since moment = a × d for points a on m.
    let v = add(cross(d, p.coords()), m.moment());
    Ok(norm(v) / nd)
}

/// Sphere with positive radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sphere {
    pub center: Point3,
    pub radius: f64,
}

impl Sphere {
    pub fn new(center: Point3, radius: f64) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::InvalidArgument(format!("sphere radius must be positive, got {radius}")));
        }
        Ok(Sphere { center, radius })
    }

    pub fn transformed(&self, rot: &[[f64; 3]; 3], trans: [f64; 3]) -> Self {
        Sphere {
            center: Point3::from(add(apply_rot(rot, self.center.coords()), trans)),
            radius: self.radius,
        }
    }
}

/// Symmetric 6×6 form on Plüccker coordinates, stored as its upper triangle
/// in the index order `(01, 02, 03, 12, 13, 23)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Sym6 {
    upper: [f64; 21],
}

fn ut_index(i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < 6);
    i * 6 - i * (i + 1) / 2 + j
}

impl Sym6 {
    pub fn zero() -> Self {
        Sym6 { upper: [0.0; 21] }
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        if i <= j {
            self.upper[ut_index(i, j)]
        } else {
            self.upper[ut_index(j, i)]
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        if i <= j {
            self.upper[ut_index(i, j)] = v;
        } else {
            self.upper[ut_index(j, i)] = v;
        }
    }

    /// Evaluates the quadratic form on a real 6-vector.
    pub fn quad_form(&self, p: [f64; 6]) -> f64 {
        let mut acc = 0.0;
        for i in 0..6 {
            acc += self.get(i, i) * p[i] * p[i];
            for j in (i + 1)..6 {
                acc += 2.0 * self.get(i, j) * p[i] * p[j];
            }
        }
        acc
    }

    /// Evaluates the quadratic form on a complex 6-vector (bilinear, not
    /// Hermitian: the algebraic extension used for complex tangents).
    pub fn quad_form_c(&self, p: [Complex64; 6]) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..6 {
            acc += self.get(i, i) * p[i] * p[i];
            for j in (i + 1)..6 {
                acc += 2.0 * self.get(i, j) * p[i] * p[j];
            }
        }
        acc
    }
}

/// The second exterior power of a sphere's quadric matrix: a line is tangent
/// to the sphere exactly when its Plücker vector is isotropic for this form.
pub fn wedge2_matrix(s: &Sphere) -> Sym6 {
    let [x, y, z] = s.center.coords();
    let r2 = s.radius * s.radius;
    let mut m = Sym6::zero();
    m.set(0, 0, y * y + z * z - r2);
    m.set(0, 1, -x * y);
    m.set(0, 2, -x * z);
    m.set(0, 3, y);
    m.set(0, 4, z);
    m.set(0, 5, 0.0);
    m.set(1, 1, x * x + z * z - r2);
    m.set(1, 2, -y * z);
    m.set(1, 3, -x);
    m.set(1, 4, 0.0);
    m.set(1, 5, z);
    m.set(2, 2, x * x + y * y - r2);
    m.set(2, 3, 0.0);
    m.set(2, 4, -x);
    m.set(2, 5, -y);
    m.set(3, 3, 1.0);
    m.set(3, 4, 0.0);
    m.set(3, 5, 0.0);
    m.set(4, 4, 1.0);
    m.set(4, 5, 0.0);
    m.set(5, 5, 1.0);
    m
}

/// Tangency residual `pᵀ(∧²Q)p` on the normalised representative; zero
/// within tolerance exactly when the line is tangent to the sphere.
pub fn tangency_residual(m: &PluckerLine, s: &Sphere) -> f64 {
    wedge2_matrix(s).quad_form(m.coords())
}

/// Plane `{a0·w + a1·x + a2·y + a3·z = 0}`; projective equality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Plane {
    pub a0: f64,
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
}

impl Plane {
    pub fn new(a0: f64, a1: f64, a2: f64, a3: f64) -> Self {
        Plane { a0, a1, a2, a3 }
    }

    /// Plane with normal `n` through the point `p`.
    pub fn from_normal_point(n: [f64; 3], p: Point3) -> Self {
        Plane { a0: -dot(n, p.coords()), a1: n[0], a2: n[1], a3: n[2] }
    }

    pub fn normal(&self) -> [f64; 3] {
        [self.a1, self.a2, self.a3]
    }

    pub fn is_affine(&self) -> bool {
        norm(self.normal()) > INCIDENCE_TOL * self.max_abs()
    }

    fn max_abs(&self) -> f64 {
        self.a0.abs().max(self.a1.abs()).max(self.a2.abs()).max(self.a3.abs())
    }

    fn normalized(&self) -> [f64; 4] {
        let m = self.max_abs();
        [self.a0 / m, self.a1 / m, self.a2 / m, self.a3 / m]
    }

    /// Signed evaluation at a homogeneous point (normalised coefficients).
    pub fn eval(&self, p: HomPoint4) -> f64 {
        let a = self.normalized();
        a[0] * p.c0 + a[1] * p.c1 + a[2] * p.c2 + a[3] * p.c3
    }

    /// Member of the pencil of planes through an affine line, by angle.
    ///
    /// The pencil is parametrised over `[0, π)`: the normal rotates in the
    /// plane orthogonal to the line direction.
    pub fn pencil_through_line(line: &PluckerLine, theta: f64) -> Result<Self> {
        let d = line.direction();
        if norm(d) <= INCIDENCE_TOL {
            return Err(Error::LineAtInfinity);
        }
        let base = line.base_point()?;
        let n1 = any_orthogonal(d);
        let n2 = normalize(cross(normalize(d), n1));
        let n = add(scale(n1, theta.cos()), scale(n2, theta.sin()));
        Ok(Self::from_normal_point(n, base))
    }
}

/// Incidence of a line in a plane: all four conditions `P·π = 0` on the
/// primal Plücker matrix, below tolerance on normalised data.
pub fn line_in_plane(m: &PluckerLine, pl: &Plane) -> bool {
    let p = m.coords();
    let a = pl.normalized();
    let c0 = p[0] * a[1] + p[1] * a[2] + p[2] * a[3];
    let c1 = -p[0] * a[0] + p[3] * a[2] + p[4] * a[3];
    let c2 = -p[1] * a[0] - p[3] * a[1] + p[5] * a[3];
    let c3 = -p[2] * a[0] - p[4] * a[1] - p[5] * a[2];
    c0.abs().max(c1.abs()).max(c2.abs()).max(c3.abs()) <= INCIDENCE_TOL
}

/// Incidence of a line with a point: all four conditions `Q·x = 0` on the
/// dual Plücker matrix.
pub fn line_through_point(m: &PluckerLine, p: HomPoint4) -> bool {
    let q = m.coords();
    let xm = p.coords().iter().fold(0.0f64, |a, c| a.max(c.abs()));
    let x = [p.c0 / xm, p.c1 / xm, p.c2 / xm, p.c3 / xm];
    let c0 = q[5] * x[1] - q[4] * x[2] + q[3] * x[3];
    let c1 = -q[5] * x[0] + q[2] * x[2] - q[1] * x[3];
    let c2 = q[4] * x[0] - q[2] * x[1] + q[0] * x[3];
    let c3 = -q[3] * x[0] + q[1] * x[1] - q[0] * x[2];
    c0.abs().max(c1.abs()).max(c2.abs()).max(c3.abs()) <= INCIDENCE_TOL
}

/// Orthonormal chart on an affine plane.
///
/// When the plane contains the x-axis the chart is `(u, v) = (x, μy + λz)`
/// with the plane written as `λy = μz`, matching the pencil chart used for
/// sections through a fixed line; otherwise an arbitrary deterministic
/// orthonormal frame is used.
#[derive(Debug, Clone, Copy)]
pub struct PlaneChart {
    pub origin: [f64; 3],
    pub e_u: [f64; 3],
    pub e_v: [f64; 3],
    pub normal: [f64; 3],
}

impl PlaneChart {
    pub fn of_plane(pl: &Plane) -> Result<Self> {
        if !pl.is_affine() {
            return Err(Error::InvalidArgument("chart of a non-affine plane".into()));
        }
        let a = pl.normalized();
        let n = [a[1], a[2], a[3]];
        let nn = normalize(n);
        if a[0].abs() <= INCIDENCE_TOL && a[1].abs() <= INCIDENCE_TOL {
            // Plane through the x-axis: λy = μz with (λ, -μ) = (a2, a3).
            let mut e_v = normalize([0.0, -a[3], a[2]]);
            let first = if e_v[1].abs() > 1e-13 { e_v[1] } else { e_v[2] };
            if first < 0.0 {
                e_v = scale(e_v, -1.0);
            }
            return Ok(PlaneChart { origin: [0.0; 3], e_u: [1.0, 0.0, 0.0], e_v, normal: nn });
        }
        let n2 = dot(n, n);
        let origin = scale(n, -a[0] / n2);
        let e_u = any_orthogonal(n);
        let e_v = cross(nn, e_u);
        Ok(PlaneChart { origin, e_u, e_v, normal: nn })
    }

    pub fn to_3d(&self, u: f64, v: f64) -> Point3 {
        Point3::from(add(self.origin, add(scale(self.e_u, u), scale(self.e_v, v))))
    }

    pub fn project(&self, p: Point3) -> (f64, f64) {
        let d = sub(p.coords(), self.origin);
        (dot(d, self.e_u), dot(d, self.e_v))
    }

    /// Height of a point over the plane.
    pub fn height(&self, p: Point3) -> f64 {
        dot(sub(p.coords(), self.origin), self.normal)
    }
}

/// Complex Plücker vector, normalised so the coordinate of largest modulus
/// is exactly 1. Used for the complex members of tangent sets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CPlucker {
    coords: [Complex64; 6],
}

impl CPlucker {
    pub fn from_coords(raw: [Complex64; 6]) -> Result<Self> {
        let pivot = raw
            .iter()
            .copied()
            .max_by(|a, b| a.norm_sqr().partial_cmp(&b.norm_sqr()).unwrap())
            .unwrap();
        if pivot.norm() <= 0.0 || !pivot.norm().is_finite() {
            return Err(Error::InvalidArgument("zero or non-finite complex Plücker vector".into()));
        }
        Ok(CPlucker { coords: raw.map(|c| c / pivot) })
    }

    /// Join of two homogeneous points with complex coordinates `(w, x, y, z)`.
    pub fn through_points(x: [Complex64; 4], y: [Complex64; 4]) -> Result<Self> {
        let raw = [
            x[0] * y[1] - x[1] * y[0],
            x[0] * y[2] - x[2] * y[0],
            x[0] * y[3] - x[3] * y[0],
            x[1] * y[2] - x[2] * y[1],
            x[1] * y[3] - x[3] * y[1],
            x[2] * y[3] - x[3] * y[2],
        ];
        Self::from_coords(raw)
    }

    pub fn coords(&self) -> [Complex64; 6] {
        self.coords
    }

    pub fn conj(&self) -> Self {
        CPlucker::from_coords(self.coords.map(|c| c.conj())).expect("conjugate of a valid vector")
    }

    /// Largest imaginary part of the canonical representative.
    pub fn imag_magnitude(&self) -> f64 {
        self.coords.iter().fold(0.0f64, |m, c| m.max(c.im.abs()))
    }

    /// The underlying real line, when the vector is real within tolerance.
    pub fn as_real(&self) -> Option<PluckerLine> {
        if self.imag_magnitude() <= 1e-7 {
            PluckerLine::from_coords(self.coords.map(|c| c.re)).ok()
        } else {
            None
        }
    }

    pub fn distance(&self, other: &CPlucker) -> f64 {
        let mut dp = 0.0f64;
        for k in 0..6 {
            dp += (self.coords[k] - other.coords[k]).norm_sqr();
        }
        dp.sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn x_axis_plucker_vector() {
        // Span of (1,0,0,0) and (0,1,0,0).
        let l = PluckerLine::through_points(
            HomPoint4::new(1.0, 0.0, 0.0, 0.0),
            HomPoint4::new(0.0, 1.0, 0.0, 0.0),
        )
        .unwrap();
        assert_eq!(l.coords(), [1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn minors_by_hand() {
        // (1,0,0,1) joined with (1,1,0,1) -> (1,0,0,0,-1,0) up to scale.
        let l = PluckerLine::through_points(
            HomPoint4::new(1.0, 0.0, 0.0, 1.0),
            HomPoint4::new(1.0, 1.0, 0.0, 1.0),
        )
        .unwrap();
        assert_eq!(l.coords(), [1.0, 0.0, 0.0, 0.0, -1.0, 0.0]);
    }

    #[test]
    fn coincident_points_rejected() {
        let p = HomPoint4::new(1.0, 2.0, 3.0, 4.0);
        assert_eq!(PluckerLine::through_points(p, p).unwrap_err(), Error::CoincidentPoints);
        // Projectively equal points too.
        let q = HomPoint4::new(2.0, 4.0, 6.0, 8.0);
        assert_eq!(PluckerLine::through_points(p, q).unwrap_err(), Error::CoincidentPoints);
    }

    #[test]
    fn meet_form_cases() {
        let x_axis = PluckerLine::x_axis();
        // Self-incidence equals twice the Plücker residual, so ~0.
        assert!(meet_form(&x_axis, &x_axis).abs() <= 2e-12);
        // The y-axis meets the x-axis at the origin.
        let y_axis = PluckerLine::through_points(
            HomPoint4::new(1.0, 0.0, 0.0, 0.0),
            HomPoint4::new(0.0, 0.0, 1.0, 0.0),
        )
        .unwrap();
        assert!(meet_form(&x_axis, &y_axis).abs() <= 1e-12);
        // Parallel offset line {y=1,z=1}: meets only at infinity, form still 0.
        let par = PluckerLine::from_point_dir(Point3::new(0.0, 1.0, 1.0), [1.0, 0.0, 0.0]).unwrap();
        assert!(meet_form(&x_axis, &par).abs() <= 1e-12);
        assert!(lines_parallel(&x_axis, &par));
        // Genuinely skew line through (0,1,1) with direction (1,0,1).
        let skew = PluckerLine::from_point_dir(Point3::new(0.0, 1.0, 1.0), [1.0, 0.0, 1.0]).unwrap();
        assert!(meet_form(&x_axis, &skew).abs() > 0.1);
        assert!(!lines_parallel(&x_axis, &skew));
    }

    #[test]
    fn meet_form_is_symmetric() {
        let a = PluckerLine::through_affine(Point3::new(0.3, -1.2, 0.7), Point3::new(2.0, 0.4, -0.9))
            .unwrap();
        let b = PluckerLine::through_affine(Point3::new(-1.0, 0.0, 2.0), Point3::new(0.5, 1.5, 0.2))
            .unwrap();
        assert_relative_eq!(meet_form(&a, &b), meet_form(&b, &a), max_relative = 1e-15);
    }

    #[test]
    fn wedge2_of_unit_sphere_is_diagonal() {
        let s = Sphere::new(Point3::new(0.0, 0.0, 0.0), 1.0).unwrap();
        let m = wedge2_matrix(&s);
        let expect = [-1.0, -1.0, -1.0, 1.0, 1.0, 1.0];
        for i in 0..6 {
            for j in 0..6 {
                let e = if i == j { expect[i] } else { 0.0 };
                assert_eq!(m.get(i, j), e);
            }
        }
    }

    #[test]
    fn wedge2_shifted_center_by_substitution() {
        // Center (1,0,0), r=1: substitute x0=1, y0=z0=0 by hand.
        let s = Sphere::new(Point3::new(1.0, 0.0, 0.0), 1.0).unwrap();
        let m = wedge2_matrix(&s);
        let mut expect = Sym6::zero();
        expect.set(0, 0, -1.0);
        expect.set(1, 1, 0.0);
        expect.set(2, 2, 0.0);
        expect.set(1, 3, -1.0);
        expect.set(2, 4, -1.0);
        expect.set(3, 3, 1.0);
        expect.set(4, 4, 1.0);
        expect.set(5, 5, 1.0);
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(m.get(i, j), expect.get(i, j), "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn wedge2_block_scaling() {
        // Scaling center and radius by λ multiplies the upper-left 3×3 block
        // by λ² and the off-diagonal linear blocks by λ.
        let lam = 3.0;
        let s1 = Sphere::new(Point3::new(0.4, -0.7, 1.1), 0.9).unwrap();
        let s2 = Sphere::new(Point3::new(0.4 * lam, -0.7 * lam, 1.1 * lam), 0.9 * lam).unwrap();
        let m1 = wedge2_matrix(&s1);
        let m2 = wedge2_matrix(&s2);
        for i in 0..3 {
            for j in 0..3 {
                assert_relative_eq!(m2.get(i, j), lam * lam * m1.get(i, j), max_relative = 1e-12);
            }
            for j in 3..6 {
                assert_relative_eq!(m2.get(i, j), lam * m1.get(i, j), max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn tangency_residual_examples() {
        let unit = Sphere::new(Point3::new(0.0, 0.0, 0.0), 1.0).unwrap();
        // The line {z=1, y=0} is tangent at (0,0,1).
        let tangent =
            PluckerLine::from_point_dir(Point3::new(0.0, 0.0, 1.0), [1.0, 0.0, 0.0]).unwrap();
        assert!(tangency_residual(&tangent, &unit).abs() <= 1e-12);
        // The x-axis is a secant: residual -1 on the canonical representative.
        assert_relative_eq!(tangency_residual(&PluckerLine::x_axis(), &unit), -1.0);
    }

    #[test]
    fn point_line_distances() {
        let x_axis = PluckerLine::x_axis();
        assert_eq!(point_line_distance(Point3::new(0.0, 0.0, 0.0), &x_axis).unwrap(), 0.0);
        assert_relative_eq!(point_line_distance(Point3::new(0.0, 1.0, 0.0), &x_axis).unwrap(), 1.0);
        assert_relative_eq!(point_line_distance(Point3::new(0.0, 3.0, 4.0), &x_axis).unwrap(), 5.0);
    }

    #[test]
    fn incidence_predicates() {
        let x_axis = PluckerLine::x_axis();
        let z0 = Plane::new(0.0, 0.0, 0.0, 1.0);
        let z1 = Plane::new(-1.0, 0.0, 0.0, 1.0);
        assert!(line_in_plane(&x_axis, &z0));
        assert!(!line_in_plane(&x_axis, &z1));
        assert!(line_through_point(&x_axis, HomPoint4::new(1.0, 0.0, 0.0, 0.0)));
        assert!(line_through_point(&x_axis, HomPoint4::new(1.0, 5.0, 0.0, 0.0)));
        assert!(!line_through_point(&x_axis, HomPoint4::new(1.0, 0.0, 1.0, 0.0)));
    }

    #[test]
    fn chart_of_plane_through_x_axis() {
        // Plane z=0 gets the chart (u,v) = (x,y).
        let chart = PlaneChart::of_plane(&Plane::new(0.0, 0.0, 0.0, 1.0)).unwrap();
        assert_eq!(chart.e_u, [1.0, 0.0, 0.0]);
        assert_eq!(chart.e_v, [0.0, 1.0, 0.0]);
        let (u, v) = chart.project(Point3::new(2.0, -3.0, 0.0));
        assert_eq!((u, v), (2.0, -3.0));
    }

    #[test]
    fn chart_roundtrip_general_plane() {
        let pl = Plane::from_normal_point([0.3, -0.8, 0.52], Point3::new(1.0, 2.0, -0.5));
        let chart = PlaneChart::of_plane(&pl).unwrap();
        let p = chart.to_3d(0.7, -1.3);
        let (u, v) = chart.project(p);
        assert_relative_eq!(u, 0.7, epsilon = 1e-12);
        assert_relative_eq!(v, -1.3, epsilon = 1e-12);
        assert!(chart.height(p).abs() < 1e-12);
        // Orthonormality.
        assert_relative_eq!(vec3::dot(chart.e_u, chart.e_v), 0.0, epsilon = 1e-14);
        assert_relative_eq!(vec3::norm(chart.e_u), 1.0, epsilon = 1e-14);
        assert_relative_eq!(vec3::norm(chart.e_v), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn tangency_matches_geometric_criterion() {
        // Residual within 1e-6 of zero iff |dist(center, line) - radius| small,
        // over a thousand seeded random line/sphere pairs.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let mut both = 0;
        for _ in 0..1000 {
            let c = Point3::new(
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
            );
            let r = rng.gen_range(0.2..2.5);
            let s = Sphere::new(c, r).unwrap();
            let p = Point3::new(
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
            );
            let d = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];
            let Ok(line) = PluckerLine::from_point_dir(p, d) else { continue };
            let geo = (point_line_distance(c, &line).unwrap() - r).abs() < 1e-6;
            let alg = tangency_residual(&line, &s).abs() < 1e-6;
            // Random pairs are essentially never tangent; both detectors must
            // agree on that, and on constructed tangents below.
            assert_eq!(geo, alg);
            both += 1;
            // Constructed tangent line: touch the sphere at a random point.
            let q = vec3::add(c.coords(), vec3::scale(vec3::normalize(d), r));
            let tangent_dir = vec3::any_orthogonal(vec3::sub(q, c.coords()));
            let t = PluckerLine::from_point_dir(Point3::from(q), tangent_dir).unwrap();
            assert!(tangency_residual(&t, &s).abs() < 1e-9);
            assert!((point_line_distance(c, &t).unwrap() - r).abs() < 1e-9);
        }
        assert!(both > 990);
    }
}

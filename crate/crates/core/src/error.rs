//! Error type shared by all modules.

/// Everything that can go wrong in the kernel.
///
/// Degenerate-geometry variants are informative rather than fatal: several of
/// them (`IdenticalSections`, `IdenticalCones`) witness configurations with
/// infinitely many common tangents, which is exactly what the classifier
/// looks for.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("every polynomial coefficient is below the degeneracy tolerance")]
    AllCoefficientsZero,
    #[error("the two points coincide and do not span a line")]
    CoincidentPoints,
    #[error("the line has no affine direction (line at infinity)")]
    LineAtInfinity,
    #[error("the two plane sections coincide: infinitely many common tangents in the plane")]
    IdenticalSections,
    #[error("degenerate input to the planar tangent solver: {0}")]
    DegenerateInput(String),
    #[error("the tangent cones from the point coincide: infinitely many common tangents")]
    IdenticalCones,
    #[error("the point lies on a sphere")]
    PointOnSphere,
    #[error("special point: the tangent-line correspondence is undefined there")]
    SpecialPoint,
    #[error("the curve does not lie on the sphere")]
    NotOnSphere,
    #[error("the curve is a special line: its image degenerates to a point")]
    SpecialLine,
    #[error("ratio {0} is forbidden for the quartic family")]
    ForbiddenRatio(String),
    #[error("ratio {0} is not a perfect square of a rational; exact verification unavailable")]
    IrrationalSqrt(String),
    #[error("special points are not expressible over the (Gaussian) rationals for this scene")]
    SpecialPointsIrrational,
    #[error("two spheres of the scene coincide within tolerance")]
    DegenerateScene,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

//! Exact rational arithmetic, homogeneous binary polynomial algebra, and the
//! shared complex root solver.

mod gcd;
mod hpoly;
mod rat;
mod roots;

pub use gcd::{hp_gcd, hp_gcd_field, hp_gcd_many};
pub use hpoly::{HPoly2, HPoly2G};
pub use rat::{rat, rat_i, rat_sqrt, CoefField, GRat, Rat};
pub use roots::{
    solve_binary_form, solve_real_coeff_quartic, solve_real_poly, ComplexRoot, CLUSTER_RADIUS,
};

//! Sub-Riemannian geometry of odd-dimensional spheres with the horizontal
//! distribution of the Hopf fibration.
//!
//! * [`sphere`]: points, tangent splitting, Hopf projection, SU(2) action.
//! * [`geodesic`]: closed-form geodesics on S^{2n-1} and their S^3 parametrization.
//! * [`classify`]: open/closed classification and fiber intersections.
//! * [`bvp`]: boundary value problem on S^3 from `(1, 0)`.
//! * [`distance`]: Carnot-Caratheodory distance, plus [`oracle`] for shooting checks.

pub mod bvp;
pub mod classify;
pub mod distance;
pub mod error;
pub mod format;
pub mod geodesic;
pub mod oracle;
pub mod sphere;

pub use bvp::{BranchSolution, Endpoint, EndpointCase, Family, SolverConfig};
pub use distance::{cc_distance, cc_distance_between, reduce_pair, DistanceResult};
pub use error::{Error, Result};
pub use geodesic::{eval_s3, GeneralGeodesic, S3GeodesicParams};
pub use oracle::{shooting_oracle, OracleConfig, OracleResult};
pub use sphere::{FiberPhase, SpherePoint, Su2Element, TangentVector};

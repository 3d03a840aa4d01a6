//! Littlewood-Richardson coefficients computed two independent ways (the
//! tableau rule and tail-positive triangle arrays), the Horn inequalities
//! that cut out the eigenvalue cone, and experiments built on top of them.

pub mod error;
pub mod hive;
pub mod horn;
pub mod partition;
mod simplex;
pub mod spectra;
pub mod tableau;
pub mod tail_cone;

pub use error::{Error, Result};
pub use hive::{count_tail_positive, enumerate_tail_positive, TailId, TriangleArray, TrianglePosition};
pub use horn::{cone_contains, generate_facets, saturation_scan, ConeQuery, HornInequality};
pub use partition::{FundamentalWeight, FundamentalWeightTriple, Partition, PartitionTriple};
pub use tableau::{lr_coefficient, lr_positive};
pub use tail_cone::{is_tail_positive_form, LinearForm, SubsetTriple, TailCertificate};

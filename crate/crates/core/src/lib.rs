//! Exact non-symmetric operads of planar rooted line arrangements, with the
//! companion operads of intervals, point configurations, polygonal chains,
//! words and planar trees.
//!
//! All geometry is done in exact rational arithmetic; only the
//! [`scattering`] module uses floating point.
//!
//! ```
//! use arrangeops::arrangement::{compose_hat, moving_frame, validate};
//! use arrangeops::rational::int;
//!
//! let p = validate(vec![(int(0), int(3)), (int(1), int(1)), (int(2), int(0))]).unwrap();
//! let q = validate(vec![(int(0), int(2)), (int(1), int(1)), (int(2), int(0))]).unwrap();
//! let pq = compose_hat(&p, 2, &q).unwrap();
//! assert_eq!(pq.rank(), 4);
//! assert_eq!(moving_frame(&pq), moving_frame(&p));
//! ```

pub mod arrangement;
pub mod chain;
pub mod geometry;
pub mod interval;
pub mod io;
pub mod operad;
pub mod rational;
pub mod sample;
pub mod samplers;
pub mod scattering;
pub mod svg;

pub use arrangement::{Arrangement, ArrangementError, RootedLine};
pub use geometry::{AffineMap2, Line2, Point2};
pub use operad::{IndexOutOfRange, Operad};
pub use rational::Rational;

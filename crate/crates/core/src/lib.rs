//! Executable cardinal arithmetic for the continuum.
//!
//! * [`finite_sets`]: finite sets, coverings `(N | M)`, cardinal `+ · ^`, and
//!   exponent laws witnessed by explicit bijections.
//! * [`dyadic`]: exact rationals in `[0,1]` and the dyadic points that have
//!   two binary expansions.
//! * [`binary_streams`]: eventually-periodic binary streams, their exact
//!   values, canonical forms, and the split of `B` into `B_X` and `B_S`.
//! * [`bijection`]: the shift map `B_X -> B` and its inverse, and a checked
//!   replay of the argument that `B_X ∼ B`.
//!
//! ```
//! use continuum::binary_streams::{expansions_of, parse_stream};
//! use continuum::bijection::{forward, inverse};
//!
//! let three_eighths = "3/8".parse().unwrap();
//! let both = expansions_of(&three_eighths).unwrap();
//! assert_eq!(both[0].to_string(), "011(0)");
//! assert_eq!(both[1].to_string(), "010(1)");
//!
//! let half = parse_stream("1(0)").unwrap();
//! let image = forward(&half).unwrap();
//! assert_eq!(image.to_string(), "0(1)");
//! assert_eq!(inverse(&image), half);
//! ```

pub mod bijection;
pub mod binary_streams;
pub mod dyadic;
mod error;
pub mod finite_sets;

pub use error::{Error, Result};

// The guide's code blocks run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/coverings.md")]
    mod coverings {}
    #[doc = include_str!("../../../book/src/dyadics.md")]
    mod dyadics {}
    #[doc = include_str!("../../../book/src/streams.md")]
    mod streams {}
    #[doc = include_str!("../../../book/src/bijection.md")]
    mod bijection {}
    #[doc = include_str!("../../../book/src/trace.md")]
    mod trace {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

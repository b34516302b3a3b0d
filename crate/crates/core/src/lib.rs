//! Superpositions of spin coherent states: second-order coherence and spin
//! squeezing, each computed twice, once from closed forms and once from an
//! exact matrix representation of the state.
//!
//! ```
//! use spincat::{closedform, oracle, states::{sscs, SscsParams}};
//!
//! let params = SscsParams::real(6, 0.8, std::f64::consts::PI);
//! let state = sscs(params.space()?, &params)?;
//! let exact = oracle::g2(&state)?;
//! let closed = closedform::g2(&params)?;
//! assert!((exact - closed).abs() < 1e-12);
//! # Ok::<(), spincat::SpinError>(())
//! ```

pub mod cli;
pub mod closedform;
pub mod error;
pub mod numeric;
pub mod oracle;
pub mod spinspace;
pub mod squeezing;
pub mod states;
pub mod verify;

pub use closedform::MomentSet;
pub use error::{Result, SpinError};
pub use spinspace::{SpinOperator, SpinSpace, SpinState};
pub use squeezing::{SqueezingReport, UnitVector, XiValue};
pub use states::SscsParams;

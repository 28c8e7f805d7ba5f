//! A computational social choice engine.
//!
//! The crate evaluates single-winner voting rules, committee-selection
//! rules, ballot distances, jury-theorem probabilities, and manipulation
//! searches over preference profiles, all with exact rational arithmetic.
//! On desk-scale domains it verifies the classical characterization and
//! impossibility theorems by exhaustive enumeration and backtracking
//! search: May's characterization of majority voting, Condorcet's jury
//! theorem, Arrow's theorem via decisive coalitions and ultrafilters, the
//! Gibbard-Satterthwaite theorem via blocking coalitions, Black's
//! single-peakedness guarantees, and the incompatibility of committee
//! stability with committee monotonicity.
//!
//! A quick taste:
//!
//! ```
//! use scrutineer_core::fixtures::fixture;
//! use scrutineer_core::rules::plurality;
//! use scrutineer_core::tournaments::condorcet_winner;
//!
//! let senate = fixture("PLINY")?;
//! let by_plurality = plurality(&senate).winners;
//! let condorcet = condorcet_winner(&senate, false);
//! assert_ne!(by_plurality, condorcet); // the Pliny story in two lines
//! # Ok::<(), scrutineer_core::Error>(())
//! ```

#![forbid(unsafe_code)]

pub mod alts;
pub mod axioms;
pub mod ballot;
pub mod consensus;
pub mod epistemic;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod games;
pub mod multiwinner;
pub mod profile;
pub mod rules;
pub mod strategy;
pub mod tournaments;

pub use alts::{Alt, AltSet, Alternatives, TieBreak};
pub use ballot::Ballot;
pub use error::{Error, Result};
pub use profile::{Profile, WeakOrder};
pub use rules::{ChoiceResult, RuleHandle, Score};

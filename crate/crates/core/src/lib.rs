//! Exact numerical extendability checks for smooth Weierstrass elliptic
//! surfaces `π: S → B` with section `C`, fiber `f` and fundamental line
//! bundle of degree `n`.
//!
//! The modules build on each other:
//!
//! - [`lattice`]: the rank-two Néron–Severi lattice `Z[C] ⊕ Z[f]`.
//! - [`invariants`]: Hodge numbers and Kodaira dimension from `(g, n)`.
//! - [`cohomology`]: line-bundle cohomology on the base and on `S`.
//! - [`scroll`]: cohomology on the rank-3 scroll containing `S`.
//! - [`extendability`]: verdicts and the finite classification lists.
//! - [`report`]: serializable reports shared by the `wext` binary.
//!
//! ```
//! use weierstrass_ext::{compute_invariants, SurfaceData};
//!
//! let inv = compute_invariants(SurfaceData::K3).unwrap();
//! assert_eq!(inv.p_g, 1);
//! ```

#![allow(clippy::int_plus_one)]

pub mod cohomology;
pub mod error;
pub mod extendability;
pub mod invariants;
pub mod lattice;
pub mod report;
pub mod scroll;

pub use cohomology::{
    base_point_free, curve_h, general_member_gonality, h1_vanishes, pushforward_summands, surface_h,
    very_ample_necessary, very_ample_sufficient, CohomologyAnswer, GenericityPolicy,
};
pub use error::{Error, Result};
pub use extendability::{Conclusion, GonalityStatus, Rule, Verdict};
pub use invariants::{compute_invariants, min_k3_sectional_genus, KodairaDimension, SurfaceInvariants};
pub use lattice::{
    canonical_class, genus_of_class, intersect, riemann_roch_chi, sectional_genus, DivisorClass, SurfaceData,
};
pub use scroll::{scroll_h, verify_scroll_claims, zak_nonextendable, ClaimReport, SplitBundle};

//! Exact computational backbone for Diophantine triples in Pisot-type
//! linear recurrence sequences: arbitrary-precision polynomial algebra,
//! number fields and splitting fields, Pisot certification, Binet data,
//! finiteness-hypothesis checks and desk-scale search.

pub mod arith;
pub mod cancel;
pub mod hypothesis;
pub mod nf;
pub mod pisot;
pub mod recurrence;
pub mod search;

pub use arith::{ArithError, Int, IntPoly, Rat, RatPoly};
pub use hypothesis::{
    squareness_in_splitting_field, theorem_applicability, ApplicabilityReport, Obstruction,
    SquarenessVerdict, Verdict,
};
pub use nf::{NFElem, NfError, NumberField};
pub use pisot::{certify_pisot, family_poly, Family, PisotCertificate, PisotRejection};
pub use recurrence::{binet_coefficients, build_from_trace, BinetData, RecError, RecurrenceSpec};

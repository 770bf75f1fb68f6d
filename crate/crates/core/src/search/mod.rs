//! Desk-scale search: sequence membership, triple enumeration, gcd
//! scans, and the classical quadruple formulas.

pub mod factorize;
pub mod gcdscan;
pub mod index;
pub mod quad;
pub mod triples;

pub use factorize::{factorize, is_prime, BudgetExhausted, Factorization};
pub use gcdscan::{gcd_scan, GcdRecord, GcdScanReport};
pub use index::{build_index, MembershipIndex};
pub use quad::{dplus_extension, euler_quadruple, QuadError};
pub use triples::{brute_force_triples, find_triples, SearchError, TripleHit};

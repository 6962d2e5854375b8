//! Complementary edge ideals of graphs: construction, closed-form
//! invariants of their powers, and brute-force oracles to check them.

pub mod error;
pub mod field;
pub mod formulas;
pub mod graph;
pub mod ideal;
pub mod monomial;
pub mod resolution;
pub mod varset;
pub mod verify;

pub use error::{Error, Result};
pub use field::{Field, Fp};
pub use graph::{ComponentSummary, Graph, InducedSubgraph};
pub use ideal::{classify_big_degree, BigDegreeCase, CaseClassification, LocalizedIdeal, MonomialIdeal};
pub use monomial::{Exponent, Monomial};
pub use resolution::{BettiEntry, BettiTable, RegPdDepth, SimplicialComplex};
pub use varset::VarSet;

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;
pub type F11 = Fp<11>;
pub type F13 = Fp<13>;

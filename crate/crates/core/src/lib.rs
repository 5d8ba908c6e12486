//! Exact Jeffrey–Kirwan residues of hyperplane arrangements, computed through
//! Gröbner bases of the cone-complement ideal, with a partial-fraction oracle
//! and Grothendieck residues on the side.
//!
//! ```
//! use jkres::{jk_residue, Configuration, JKProblem, MonomialOrder, Polynomial, QVector};
//!
//! let config = Configuration::from_int_rows(&[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
//! let p = Polynomial::parse("x2", 2).unwrap();
//! let problem = JKProblem::new(config, QVector::from_ints(&[2, 1]), p, MonomialOrder::GrevLex).unwrap();
//! assert_eq!(jk_residue(&problem).unwrap().value, jkres::linalg::rat(1));
//! ```

pub mod arrangement;
pub mod error;
pub mod groebner;
pub mod grothendieck;
pub mod jk;
pub mod linalg;
pub mod oracle;
pub mod poly;

#[cfg(feature = "testing")]
pub mod testing;

pub use arrangement::{ChamberSignature, Configuration, OrientedHyperplane};
pub use error::{Error, Result};
pub use groebner::{Division, GroebnerBasis};
pub use grothendieck::{residue_affine, residue_homogeneous, SplitMethod};
pub use jk::{jk_residue, JKProblem, JKReport, ShortCircuit};
pub use linalg::{QMatrix, QVector, Rational};
pub use oracle::{jk_oracle, total_partial_fraction, Decomposition, FractionTerm, RewriteStrategy};
pub use poly::{LinearForm, Monomial, MonomialOrder, Polynomial};

//! Exact computational toolkit for ribbon numbers of knots.
//!
//! A *ribbon code* is a finite tree together with a list of signed, labeled
//! markings on its edges; it is a combinatorial stand-in for a disk-band
//! presentation of a ribbon disk.  From a ribbon code the crate computes the
//! Alexander polynomial of the associated knot exactly, decides
//! irreducibility, reduces codes to irreducible form, and enumerates all
//! irreducible codes with a bounded number of markings.  The enumeration
//! yields, for each bound `r`, the finite set of Alexander polynomials
//! realized by knots of ribbon number at most `r`; membership in these sets,
//! a factorization test, genus, determinant, crosscap and unknotting data
//! combine into lower bounds for ribbon numbers of tabulated knots.  A
//! separate pipeline evaluates Kauffman brackets of planar diagrams and the
//! derived Jones determinants, which bound ribbon numbers of links.
//!
//! All arithmetic is exact: polynomials carry arbitrary-precision integer
//! coefficients, matrix determinants are computed fraction-free, and the
//! cyclotomic evaluations used for Jones determinants work in `Z[ω]` with
//! `ω^4 = -1`.  No floating point is used anywhere.
//!
//! The crate ships a CLI (`ribbonkit`) exposing the major operations:
//! `alex`, `reduce`, `enumerate`, `bound`, `upper`, `jones`, and `tables`.

#![warn(missing_docs)]

pub mod bounds;
pub mod code;
pub mod codegen;
pub mod diagram;
pub mod enumerate;
pub mod jones;
pub mod knotdb;
pub mod laurent;
pub mod seifert;
mod util;

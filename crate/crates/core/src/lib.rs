//! Exact arithmetic for Ore monoid rings `S = R[G; π]`.

pub mod addmap;
pub mod algebra;
pub mod catalog;
pub mod linalg;
pub mod monoid;
pub mod multiindex;
pub mod orering;
pub mod pistructure;
pub mod scalar;
pub mod simplicity;

pub use addmap::{AddMap, MapError, PowerOrbit};
pub use algebra::{AlgElem, Algebra, AlgebraError, Nucleus};
pub use monoid::{MonoidElem, MonoidError, MonoidSpec};
pub use multiindex::{ExtNat, MultiIndex, MultiIndexError};
pub use orering::{OreElem, OreError, OreRing, WindowBasis};
pub use pistructure::{Axiom, AxiomReport, AxiomStatus, Classification, DeltaFamily, PiError, PiStructure, Witness};
pub use simplicity::{
    Caps, CenterSearch, CoeffSimplicity, Evidence, InnerTerm, Method, SimplicityError, SimplicityReport, UnitSearch, Verdict,
};
pub use scalar::{BaseRing, BaseTag, Exact, Residues, ScalarError};

/// The rational numbers as a base ring.
pub type Rationals = Exact<num_rational::BigRational>;
/// Coefficient algebras over `Q`.
pub type RationalAlgebra = Algebra<Rationals>;
/// Coefficient algebras over `F_p` or `Z_n`.
pub type ResidueAlgebra = Algebra<Residues>;

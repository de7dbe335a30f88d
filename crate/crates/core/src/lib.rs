//! Symmetric quandles, their 3-cocycles, colorings of classical link
//! diagrams, and the triple-point weight of colored surface-link motion
//! pictures.

pub mod abelian;
pub mod assets;
pub mod cocycle;
pub mod coloring;
pub mod diagram;
pub mod error;
pub mod family;
pub mod modp;
pub mod movie;
pub mod quandle;

pub use abelian::{AbelianElement, AbelianSignature};
pub use cocycle::{
    check_lemma_admissible, cocycle_kernel_basis, make_theta, verify_cocycle3, Cocycle3,
    CocycleFile, FieldCocycleSpace, Triple,
};
pub use coloring::{count_colorings, enumerate_colorings, verify_coloring, Coloring};
pub use diagram::{parse_diagram, Crossing, DiagramFile, LinkDiagram};
pub use error::{Error, Result, ViolationReport};
pub use family::{generate_family, theorem1_report, FamilyParams, Theorem1Report};
pub use movie::{
    euler_and_genus, lower_bound, verify_r3, weight, ComponentSummary, LowerBound, Movie,
    MovieFile, R3Record, TriplePointEvent,
};
pub use quandle::{
    enumerate_good_involutions, verify_good_involution, verify_quandle, GoodInvolution, Quandle,
    QuandleFile, SymmetricQuandle,
};

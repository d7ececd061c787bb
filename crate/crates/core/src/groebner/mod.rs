//! Gröbner bases of ideals and submodules of free modules over `k[x,y,z]`
//! and its dehomogenized subrings, with the derived operations: elimination,
//! intersection, quotients, saturation, Hilbert series and syzygies.

mod engine;
mod hilbert;
mod ideal;
mod module;

pub use hilbert::{
    hilbert_degree, hilbert_series, standard_monomial_count, standard_monomials,
    vector_space_dimension, HilbertSeries, QuotientDimension,
};
pub use ideal::{
    buchberger, elimination_ideal, groebner_basis, ideal_contains, ideal_equal, ideal_quotient,
    intersection, normal_form, quotient_by, saturation, saturation_with_cap, GroebnerBasis,
    IdealBasis, SATURATION_CAP,
};
pub use module::{
    kernel_of_presentation, minimalize_generators, minimalize_in_order, module_buchberger,
    module_equal, polynomial_syzygies, presentation, quotient_presentation, syzygy_basis,
    ModuleGroebnerBasis, ModuleVector, PresentationMatrix,
};

//! Jets of symplectic forms, symmetric connections and origin-vanishing
//! vector fields, the graded Lie-derivative action, and the
//! mixed-derivative integration lemma.
//!
//! Index conventions: everything is 1-based; for i <= n the conjugate
//! index is written i + n (`SymplecticMatrix::bar`). Connection
//! coefficients are stored raised, keyed by upper index, sorted lower
//! pair and monomial; compatibility with the symplectic form is a checked
//! invariant of the lowered tensor, not a storage constraint.

mod connection;
mod field;
mod integrate;
mod io;
mod lie;
mod symplectic;
mod tensor;
mod validate;

pub use connection::{ConnectionJet, FedosovJet, SymmetricTensorJet};
pub use field::{hamiltonian_field, hamiltonian_vector_field, QuadraticHamiltonian, VectorFieldJet};
pub use integrate::{integrate_mixed, solve_hessian, SymmetricPolyFamily};
pub use io::{
    read_connection_jet, read_vector_field_jet, write_connection_jet, write_fedosov_jet,
    write_vector_field_jet,
};
pub use lie::{
    hessian_component, is_hamiltonian_jet, lie_derivative_connection, lie_derivative_form,
    reduced_lie_derivative, FormComponent,
};
pub use symplectic::SymplecticMatrix;
pub use tensor::{CoeffKey, TensorComponent};
pub use validate::{check_component, check_fedosov_jet, lowered_map, ValidationReport, Violation};

/// Connection components are tensor components whose compatibility is a
/// checked (not structural) property; they share the storage type.
pub type ConnectionComponent = TensorComponent;

//! Jets of symmetric connections and Fedosov structure jets.

use crate::error::Error;
use crate::jets::{SymplecticMatrix, TensorComponent};
use crate::Result;

/// k-jet of a symmetric connection: graded components Gamma_0 .. Gamma_k,
/// where Gamma_m has homogeneous degree-m coefficient polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionJet {
    n: usize,
    components: Vec<TensorComponent>,
}

impl ConnectionJet {
    /// The zero jet of the given order.
    pub fn zero(n: usize, order: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(ConnectionJet {
            n,
            components: (0..=order).map(|m| TensorComponent::zero(n, m)).collect(),
        })
    }

    /// Assemble from components; component m must have degree m.
    pub fn from_components(n: usize, components: Vec<TensorComponent>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        for (m, comp) in components.iter().enumerate() {
            if comp.half_dim() != n {
                return Err(Error::DimensionMismatch(comp.half_dim(), n));
            }
            if comp.degree() != m {
                return Err(Error::DegreeMismatch {
                    expected: m,
                    got: comp.degree(),
                });
            }
        }
        Ok(ConnectionJet { n, components })
    }

    pub fn half_dim(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.components.len() - 1
    }

    pub fn component(&self, m: usize) -> &TensorComponent {
        &self.components[m]
    }

    pub fn component_mut(&mut self, m: usize) -> &mut TensorComponent {
        &mut self.components[m]
    }

    pub fn components(&self) -> &[TensorComponent] {
        &self.components
    }

    /// Projection onto the lower-order jet (drop components above `order`).
    pub fn truncate(&self, order: usize) -> ConnectionJet {
        assert!(order <= self.order());
        ConnectionJet {
            n: self.n,
            components: self.components[..=order].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }
}

/// k-jet of a Fedosov structure in Darboux coordinates: the standard
/// symplectic matrix together with a compatible connection jet.
///
/// Compatibility (the lowered tensor J_{l a} Gamma^a_{ij} is fully
/// symmetric, per homogeneous degree) is a checked property, not a
/// storage constraint; see [`crate::jets::check_fedosov_jet`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FedosovJet {
    form: SymplecticMatrix,
    connection: ConnectionJet,
}

impl FedosovJet {
    pub fn new(connection: ConnectionJet) -> Result<Self> {
        let form = SymplecticMatrix::standard(connection.half_dim())?;
        Ok(FedosovJet { form, connection })
    }

    pub fn half_dim(&self) -> usize {
        self.connection.half_dim()
    }

    pub fn order(&self) -> usize {
        self.connection.order()
    }

    pub fn form(&self) -> &SymplecticMatrix {
        &self.form
    }

    pub fn connection(&self) -> &ConnectionJet {
        &self.connection
    }

    pub fn truncate(&self, order: usize) -> FedosovJet {
        FedosovJet {
            form: self.form,
            connection: self.connection.truncate(order),
        }
    }
}

/// k-jet of a (1,2)-tensor symmetric in its lower indices: the value type
/// of Lie derivatives of connection jets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricTensorJet {
    n: usize,
    components: Vec<TensorComponent>,
}

impl SymmetricTensorJet {
    pub fn zero(n: usize, order: usize) -> Self {
        SymmetricTensorJet {
            n,
            components: (0..=order).map(|m| TensorComponent::zero(n, m)).collect(),
        }
    }

    pub fn from_components(n: usize, components: Vec<TensorComponent>) -> Self {
        for (m, comp) in components.iter().enumerate() {
            assert_eq!(comp.degree(), m);
            assert_eq!(comp.half_dim(), n);
        }
        SymmetricTensorJet { n, components }
    }

    pub fn half_dim(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.components.len() - 1
    }

    pub fn component(&self, m: usize) -> &TensorComponent {
        &self.components[m]
    }

    pub fn components(&self) -> &[TensorComponent] {
        &self.components
    }

    pub fn truncate(&self, order: usize) -> SymmetricTensorJet {
        assert!(order <= self.order());
        SymmetricTensorJet {
            n: self.n,
            components: self.components[..=order].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }
}

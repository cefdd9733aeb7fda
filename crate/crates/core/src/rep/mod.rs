//! Explicit matrix representations of preprojective algebras and surface
//! group algebras, with exact End, tangent and Ext computations.

mod analysis;
mod build;
mod format;
mod quiver_rep;
mod surface_rep;

pub use analysis::{
    algebra_span_dim, cyclic_closure, end_dim, euler_characteristic, ext_profile, has_cyclic_vector,
    hom_dim, is_simple, is_two_sided_point, search_cyclic_vector, tangent_dim,
    tangent_dim_preprojective, tangent_dim_surface, tangent_identity, CyclicAnswer,
    CyclicCertificate, CyclicSource, ExtProfile,
};
pub use build::{
    build_extended_dynkin_cyclic, build_preprojective_simple, build_semisimple,
    build_surface_simple, build_two_sided_point, random_preprojective, random_quiver_rep,
    solve_commutator_equation, Certified, SURFACE_RETRIES,
};
pub use format::{parse_rep, write_quiver_rep, write_rep, write_surface_rep};
pub use quiver_rep::{lift_quiver_rep, QuiverRep};
pub use surface_rep::{generator_labels, SurfaceRep};

use crate::error::Result;
use crate::linalg::{Matrix, Scalar};
use crate::quiver::DimVector;

/// Isotypic decomposition `S_1^{e_1} + ... + S_k^{e_k}` of a block
/// semisimple representation, with pairwise non-isomorphic `S_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimpleStructure {
    pub blocks: Vec<IsotypicBlock>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotypicBlock {
    /// `dim S`.
    pub dim: usize,
    /// Dimension vector of `S`, for quiver representations.
    pub dim_vector: Option<DimVector>,
    /// `copies[j][i]`: global coordinate of basis vector `i` of copy `j`.
    pub copies: Vec<Vec<usize>>,
}

impl IsotypicBlock {
    pub fn mult(&self) -> usize {
        self.copies.len()
    }
}

impl SemisimpleStructure {
    /// A semisimple module is cyclic iff every multiplicity is at most the
    /// dimension of its simple.
    pub fn is_cyclic(&self) -> bool {
        self.blocks.iter().all(|b| b.mult() <= b.dim)
    }

    /// `sum_j b_j` over the copies of each block, where `b_j` is the `j`-th
    /// basis vector of the `j`-th copy. Cyclic when [`Self::is_cyclic`].
    pub fn canonical_vector(&self, size: usize) -> Vec<Scalar> {
        let mut v = vec![crate::linalg::int(0); size];
        for b in &self.blocks {
            for (j, copy) in b.copies.iter().enumerate() {
                if j < b.dim {
                    v[copy[j]] = crate::linalg::int(1);
                }
            }
        }
        v
    }

    /// `dim End = sum e_i^2`.
    pub fn end_dim(&self) -> usize {
        self.blocks.iter().map(|b| b.mult() * b.mult()).sum()
    }
}

/// A representation of either base algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rep {
    Quiver(QuiverRep),
    Surface(SurfaceRep),
}

impl Rep {
    pub fn size(&self) -> usize {
        match self {
            Rep::Quiver(r) => r.size(),
            Rep::Surface(r) => r.size(),
        }
    }

    /// Matrices which, with the identity, generate the image of the algebra.
    pub fn action_generators(&self) -> Vec<Matrix> {
        match self {
            Rep::Quiver(r) => r.action_generators(),
            Rep::Surface(r) => r.action_generators(),
        }
    }

    /// Whether the defining relation of the base algebra holds.
    pub fn check_relation(&self) -> Result<bool> {
        match self {
            Rep::Quiver(r) => r.check_preprojective(),
            Rep::Surface(r) => Ok(r.check_surface()),
        }
    }

    pub fn semisimple(&self) -> Option<&SemisimpleStructure> {
        match self {
            Rep::Quiver(r) => r.semisimple(),
            Rep::Surface(r) => r.semisimple(),
        }
    }

    pub fn as_quiver(&self) -> Option<&QuiverRep> {
        match self {
            Rep::Quiver(r) => Some(r),
            Rep::Surface(_) => None,
        }
    }

    pub fn as_surface(&self) -> Option<&SurfaceRep> {
        match self {
            Rep::Surface(r) => Some(r),
            Rep::Quiver(_) => None,
        }
    }

    /// Squared norm of the dimension vector, `n^2` for surface reps.
    pub fn dim_dot_self(&self) -> i64 {
        match self {
            Rep::Quiver(r) => r.dim().dot_self() as i64,
            Rep::Surface(r) => (r.size() * r.size()) as i64,
        }
    }
}

impl From<QuiverRep> for Rep {
    fn from(r: QuiverRep) -> Self {
        Rep::Quiver(r)
    }
}

impl From<SurfaceRep> for Rep {
    fn from(r: SurfaceRep) -> Self {
        Rep::Surface(r)
    }
}

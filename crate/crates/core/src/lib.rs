//! Exact computations for representation varieties and Nori-Hilbert
//! schemes of preprojective algebras and surface group algebras.
//!
//! - [`quiver`], [`classify`]: quivers, forms, Dynkin types.
//! - [`roots`]: positive roots by reflection.
//! - [`moduli`]: existence of simples, dimensions and smoothness verdicts.
//! - [`local`]: local quivers at semisimple points and witness search.
//! - [`rep`]: explicit matrix representations over the rationals.

pub mod classify;
pub mod error;
pub mod format;
pub mod linalg;
pub mod local;
pub mod moduli;
pub mod quiver;
pub mod rep;
pub mod roots;
pub mod sample;

pub use classify::{classify, classify_connected, ComponentClass, Diagram, QuiverClass};
pub use error::{Error, Result};
pub use linalg::{Matrix, Scalar, Span};
pub use local::{
    ext1_between_simples, find_singular_witness, is_cyclic_type, local_quiver,
    semisimple_point_smooth, zero_point_smooth, Factor, LocalModel, SemisimpleType,
};
pub use moduli::{
    admits_simples, extended_dynkin_lower_bound, hilb_dim_preprojective, hilb_smooth_preprojective,
    preprojective_report, quotient_dim_preprojective, rep_dim_preprojective, surface_hilb_dim,
    surface_hilb_smooth, surface_rep_dim, surface_report, ModuliReport, SimplesCriterion,
    SmoothVerdict, Verdict,
};
pub use quiver::{
    connected_components, double_quiver, families, half_quiver, p_form, support_restrict, sym_form,
    DimVector, Quiver,
};
pub use rep::{QuiverRep, Rep, SurfaceRep};
pub use roots::{classify_root, positive_roots_below, reflect, RootClass, RootKind, RootSystem};
pub use sample::Sampler;

//! Fixtures shared by the benchmarks.

use cy2::quiver::families::{kronecker, loops};
use cy2::rep::{build_preprojective_simple, build_semisimple, build_surface_simple};
use cy2::{DimVector, Matrix, Quiver, Rep, Sampler};

/// A dense random rational matrix.
pub fn random_matrix(n: usize, seed: u64) -> Matrix {
    Sampler::new(seed).matrix(n, n)
}

/// A certified simple of the preprojective algebra of the 2-loop quiver.
pub fn loops_simple(n: u64) -> Rep {
    let c = build_preprojective_simple(&loops(2), &DimVector::new(vec![n]), 0).expect("loops simple");
    Rep::Quiver(c.value)
}

/// A certified simple of the genus `g` surface group algebra.
pub fn surface_simple(g: usize, n: usize) -> Rep {
    Rep::Surface(build_surface_simple(g, n, 0).expect("surface simple").value)
}

/// A two-block semisimple point of the 2-loop quiver.
pub fn loops_semisimple() -> Rep {
    build_semisimple(&[(loops_simple(1), 2), (loops_simple(2), 1)]).expect("direct sum")
}

/// Quivers with dimension vectors for the combinatorial benchmarks.
pub fn moduli_cases() -> Vec<(&'static str, Quiver, DimVector)> {
    vec![
        ("loops2 (6)", loops(2), DimVector::new(vec![6])),
        ("kronecker3 (3,4)", kronecker(3), DimVector::new(vec![3, 4])),
        ("loops3 (3)", loops(3), DimVector::new(vec![3])),
    ]
}

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::linalg::Matrix;

use super::SemisimpleStructure;

/// `n`-dimensional representation of the genus-`g` surface group, stored as
/// `X_1, Y_1, ..., X_g, Y_g`.
#[derive(Clone, Debug)]
pub struct SurfaceRep {
    genus: usize,
    size: usize,
    gens: Vec<Matrix>,
    inverses: OnceLock<Vec<Matrix>>,
    pub(crate) semisimple: Option<SemisimpleStructure>,
}

impl PartialEq for SurfaceRep {
    fn eq(&self, other: &Self) -> bool {
        self.genus == other.genus && self.gens == other.gens
    }
}

impl Eq for SurfaceRep {}

/// `X1, Y1, ..., Xg, Yg`.
pub fn generator_labels(genus: usize) -> Vec<String> {
    (1..=genus)
        .flat_map(|i| [format!("X{i}"), format!("Y{i}")])
        .collect()
}

impl SurfaceRep {
    /// Checks shapes and invertibility of every generator.
    pub fn new(genus: usize, gens: Vec<Matrix>) -> Result<Self> {
        if genus == 0 {
            return Err(Error::Precondition("genus must be at least 1".into()));
        }
        if gens.len() != 2 * genus {
            return Err(Error::Shape(format!(
                "{} generators for genus {genus}",
                gens.len()
            )));
        }
        let n = gens[0].rows();
        if n == 0 {
            return Err(Error::Precondition("dimension must be at least 1".into()));
        }
        let labels = generator_labels(genus);
        for (m, label) in gens.iter().zip(&labels) {
            if (m.rows(), m.cols()) != (n, n) {
                return Err(Error::Shape(format!(
                    "{label} is {}x{}, expected {n}x{n}",
                    m.rows(),
                    m.cols()
                )));
            }
            if !m.is_invertible() {
                return Err(Error::Singular(label.clone()));
            }
        }
        Ok(SurfaceRep {
            genus,
            size: n,
            gens,
            inverses: OnceLock::new(),
            semisimple: None,
        })
    }

    pub fn identity(genus: usize, n: usize) -> Result<Self> {
        Self::new(genus, vec![Matrix::identity(n); 2 * genus])
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.gens
    }

    /// `X_i`, 1-based.
    pub fn x(&self, i: usize) -> &Matrix {
        &self.gens[2 * (i - 1)]
    }

    /// `Y_i`, 1-based.
    pub fn y(&self, i: usize) -> &Matrix {
        &self.gens[2 * (i - 1) + 1]
    }

    pub fn inverses(&self) -> &[Matrix] {
        self.inverses.get_or_init(|| {
            self.gens
                .iter()
                .map(|m| m.inverse().expect("invertibility checked at construction"))
                .collect()
        })
    }

    pub fn semisimple(&self) -> Option<&SemisimpleStructure> {
        self.semisimple.as_ref()
    }

    /// Letters of the relator `prod_i X_i Y_i X_i^-1 Y_i^-1` as
    /// `(generator index, inverted)`.
    pub fn relator_letters(&self) -> Vec<(usize, bool)> {
        (0..self.genus)
            .flat_map(|i| {
                let (x, y) = (2 * i, 2 * i + 1);
                [(x, false), (y, false), (x, true), (y, true)]
            })
            .collect()
    }

    pub(crate) fn letter(&self, (k, inv): (usize, bool)) -> &Matrix {
        if inv {
            &self.inverses()[k]
        } else {
            &self.gens[k]
        }
    }

    pub fn relator_value(&self) -> Matrix {
        self.relator_letters()
            .into_iter()
            .fold(Matrix::identity(self.size), |acc, l| &acc * self.letter(l))
    }

    pub fn check_surface(&self) -> bool {
        self.relator_value().is_identity()
    }

    /// The generators; inverses are polynomials in them, so these already
    /// generate the image of the group algebra.
    pub fn action_generators(&self) -> Vec<Matrix> {
        self.gens.clone()
    }
}

use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::quiver::{double_quiver, half_quiver, star_pairs, DimVector, Quiver};

use super::SemisimpleStructure;

/// Matrices `rho(a)` of shape `alpha_{h(a)} x alpha_{t(a)}`, one per arrow.
///
/// Global coordinates list the vertex spaces in vertex order, so vertex `v`
/// occupies `offset(v) .. offset(v) + alpha_v`.
#[derive(Clone, Debug)]
pub struct QuiverRep {
    quiver: Quiver,
    dim: DimVector,
    maps: Vec<Matrix>,
    offsets: Vec<usize>,
    pub(crate) semisimple: Option<SemisimpleStructure>,
}

impl PartialEq for QuiverRep {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver && self.dim == other.dim && self.maps == other.maps
    }
}

impl Eq for QuiverRep {}

impl QuiverRep {
    pub fn new(quiver: Quiver, dim: DimVector, maps: Vec<Matrix>) -> Result<Self> {
        quiver.check_dim(&dim)?;
        if maps.len() != quiver.arrows().len() {
            return Err(Error::Shape(format!(
                "{} matrices for {} arrows",
                maps.len(),
                quiver.arrows().len()
            )));
        }
        for (a, m) in quiver.arrows().iter().zip(&maps) {
            let want = (dim.get(a.head) as usize, dim.get(a.tail) as usize);
            if (m.rows(), m.cols()) != want {
                return Err(Error::Shape(format!(
                    "arrow `{}` needs {}x{}, got {}x{}",
                    a.label,
                    want.0,
                    want.1,
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let mut offsets = Vec::with_capacity(dim.len());
        let mut acc = 0;
        for &d in dim.entries() {
            offsets.push(acc);
            acc += d as usize;
        }
        Ok(QuiverRep {
            quiver,
            dim,
            maps,
            offsets,
            semisimple: None,
        })
    }

    pub fn zero(quiver: Quiver, dim: DimVector) -> Result<Self> {
        quiver.check_dim(&dim)?;
        let maps = quiver
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dim.get(a.head) as usize, dim.get(a.tail) as usize))
            .collect();
        Self::new(quiver, dim, maps)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dim(&self) -> &DimVector {
        &self.dim
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn map_by_label(&self, label: &str) -> Option<&Matrix> {
        self.quiver.arrow_index(label).map(|k| &self.maps[k])
    }

    /// Total dimension `|alpha|`.
    pub fn size(&self) -> usize {
        self.dim.total() as usize
    }

    pub fn offset(&self, v: usize) -> usize {
        self.offsets[v]
    }

    pub fn semisimple(&self) -> Option<&SemisimpleStructure> {
        self.semisimple.as_ref()
    }

    /// `rho(a)` placed in its block of an `|alpha| x |alpha|` matrix.
    pub fn embedded(&self, arrow: usize) -> Matrix {
        let a = &self.quiver.arrows()[arrow];
        let n = self.size();
        let mut m = Matrix::zeros(n, n);
        m.set_block(self.offsets[a.head], self.offsets[a.tail], &self.maps[arrow]);
        m
    }

    /// Projection onto the space at `v`.
    pub fn idempotent(&self, v: usize) -> Matrix {
        let n = self.size();
        let mut m = Matrix::zeros(n, n);
        for i in 0..self.dim.get(v) as usize {
            m[(self.offsets[v] + i, self.offsets[v] + i)] = One::one();
        }
        m
    }

    /// Vertex idempotents followed by embedded arrows: together with the
    /// identity they generate the image of the path algebra.
    pub fn action_generators(&self) -> Vec<Matrix> {
        let mut gens: Vec<Matrix> = (0..self.quiver.vertex_count())
            .filter(|&v| self.dim.get(v) > 0)
            .map(|v| self.idempotent(v))
            .collect();
        gens.extend((0..self.maps.len()).map(|k| self.embedded(k)));
        gens
    }

    /// The quiver `Q` with `double(Q)` equal to the underlying quiver.
    pub fn base_quiver(&self) -> Result<Quiver> {
        half_quiver(&self.quiver)
    }

    /// `sum_a [rho(a), rho(a*)]`, one block per vertex.
    pub fn relation_blocks(&self) -> Result<Vec<Matrix>> {
        let pairs = star_pairs(&self.quiver)?;
        let mut blocks: Vec<Matrix> = self
            .dim
            .entries()
            .iter()
            .map(|&d| Matrix::zeros(d as usize, d as usize))
            .collect();
        for (a, s) in pairs {
            let arrow = &self.quiver.arrows()[a];
            let (x, y) = (&self.maps[a], &self.maps[s]);
            blocks[arrow.head] = &blocks[arrow.head] + &(x * y);
            blocks[arrow.tail] = &blocks[arrow.tail] - &(y * x);
        }
        Ok(blocks)
    }

    /// Whether the preprojective relation holds. Fails on quivers that are
    /// not doubles.
    pub fn check_preprojective(&self) -> Result<bool> {
        Ok(self.relation_blocks()?.iter().all(Matrix::is_zero))
    }

    /// `rho(a) -> g_{h(a)} rho(a) g_{t(a)}^{-1}`.
    pub fn conjugate(&self, g: &[Matrix]) -> Result<QuiverRep> {
        if g.len() != self.quiver.vertex_count() {
            return Err(Error::Shape("one matrix per vertex required".into()));
        }
        let mut inv = Vec::with_capacity(g.len());
        for (v, m) in g.iter().enumerate() {
            let d = self.dim.get(v) as usize;
            if (m.rows(), m.cols()) != (d, d) {
                return Err(Error::Shape(format!("vertex {v} needs a {d}x{d} matrix")));
            }
            inv.push(
                m.inverse()
                    .ok_or_else(|| Error::Singular(self.quiver.vertices()[v].clone()))?,
            );
        }
        let maps = self
            .quiver
            .arrows()
            .iter()
            .zip(&self.maps)
            .map(|(a, m)| &(&g[a.head] * m) * &inv[a.tail])
            .collect();
        QuiverRep::new(self.quiver.clone(), self.dim.clone(), maps)
    }

    /// Applies the block-diagonal matrix `g` to a global coordinate vector.
    pub fn transform_vector(&self, g: &[Matrix], v: &[crate::linalg::Scalar]) -> Vec<crate::linalg::Scalar> {
        let mut out = Vec::with_capacity(v.len());
        for (u, m) in g.iter().enumerate() {
            let o = self.offsets[u];
            let d = self.dim.get(u) as usize;
            out.extend(m.mul_vec(&v[o..o + d]));
        }
        out
    }
}

/// Extends a representation of `Q` to `double(Q)` with zero starred maps.
pub fn lift_quiver_rep(rep: &QuiverRep) -> QuiverRep {
    let q = rep.quiver();
    let alpha = rep.dim();
    let mut maps = rep.maps().to_vec();
    maps.extend(
        q.arrows()
            .iter()
            .map(|a| Matrix::zeros(alpha.get(a.tail) as usize, alpha.get(a.head) as usize)),
    );
    QuiverRep::new(double_quiver(q), alpha.clone(), maps).expect("shapes follow from the input")
}

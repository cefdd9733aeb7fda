//! Local quivers at semisimple points of preprojective representation
//! varieties, cyclicity of semisimple types, and the search for cyclic
//! non-simple semisimple points.
//!
//! Multiplicity vectors of local quivers are always called `eps` here, to
//! keep them apart from the dimension vectors of simple factors.

use std::fmt;

use crate::error::{Error, Result};
use crate::moduli::SimplesCriterion;
use crate::quiver::{
    component_vertex_sets, double_quiver, p_unchecked, support_restrict, Arrow, DimVector, Quiver,
};

/// One isotypic block `S^e` of a semisimple representation, or `e`
/// pairwise non-isomorphic simples of the same dimension vector when
/// `distinct` is set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    pub dim: DimVector,
    pub mult: u64,
    pub distinct: bool,
}

impl Factor {
    pub fn new(dim: DimVector, mult: u64) -> Self {
        Factor {
            dim,
            mult,
            distinct: false,
        }
    }

    pub fn distinct(dim: DimVector, mult: u64) -> Self {
        Factor {
            dim,
            mult,
            distinct: true,
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} x{}", self.dim, self.mult)?;
        if self.distinct {
            write!(f, " distinct")?;
        }
        Ok(())
    }
}

/// Isomorphism type of a semisimple representation over a base quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimpleType {
    factors: Vec<Factor>,
}

impl SemisimpleType {
    /// Validates that dimension vectors are pairwise distinct, each admits
    /// simples, multiplicities are positive and `distinct` is only set where
    /// the simple locus is positive dimensional.
    pub fn new(q: &Quiver, factors: Vec<Factor>) -> Result<Self> {
        let crit = SimplesCriterion::new(q);
        Self::with_criterion(&crit, factors)
    }

    pub fn with_criterion(crit: &SimplesCriterion<'_>, factors: Vec<Factor>) -> Result<Self> {
        let q = crit.quiver();
        if factors.is_empty() {
            return Err(Error::Precondition("semisimple type has no factors".into()));
        }
        for (i, f) in factors.iter().enumerate() {
            q.check_dim(&f.dim)?;
            if f.mult == 0 {
                return Err(Error::Precondition(format!("factor {} has multiplicity 0", f.dim)));
            }
            if factors[..i].iter().any(|g| g.dim == f.dim) {
                return Err(Error::Precondition(format!("factor {} repeated", f.dim)));
            }
            if !crit.admits_simples(&f.dim)? {
                return Err(Error::Precondition(format!("{} admits no simples", f.dim)));
            }
            if f.distinct && f.mult > 1 && p_unchecked(q, &f.dim) == 0 {
                return Err(Error::Precondition(format!(
                    "{} has a single simple up to isomorphism",
                    f.dim
                )));
            }
        }
        Ok(SemisimpleType { factors })
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// `alpha = sum e_i beta_i`.
    pub fn total_dim(&self) -> DimVector {
        let n = self.factors[0].dim.len();
        self.factors
            .iter()
            .fold(DimVector::zeros(n), |acc, f| acc.add(&f.dim.scale(f.mult)))
    }

    /// Simple summands counted with multiplicity.
    pub fn factor_count(&self) -> u64 {
        self.factors.iter().map(|f| f.mult).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.factor_count() == 1
    }
}

impl fmt::Display for SemisimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// `dim Ext^1(S, T)` for simples of dimension vectors `beta`, `gamma`;
/// `same` says whether `S` and `T` are the same simple.
pub(crate) fn ext1(q: &Quiver, beta: &DimVector, gamma: &DimVector, same: bool) -> i64 {
    let delta = if same { 2 } else { 0 };
    delta - q.pairing(&beta.signed(), &gamma.signed())
}

/// `dim Ext^1` between simples of dimension vectors `beta` and `gamma`,
/// taken to be isomorphic when `beta == gamma`.
pub fn ext1_between_simples(q: &Quiver, beta: &DimVector, gamma: &DimVector) -> Result<u64> {
    let crit = SimplesCriterion::new(q);
    for v in [beta, gamma] {
        if !crit.admits_simples(v)? {
            return Err(Error::Precondition(format!("{v} admits no simples")));
        }
    }
    let e = ext1(q, beta, gamma, beta == gamma);
    if e < 0 {
        return Err(Error::Inconsistency(format!(
            "negative Ext^1 between {beta} and {gamma}"
        )));
    }
    Ok(e as u64)
}

/// Discrete local model at a semisimple point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalModel {
    /// Quiver with `dim Ext^1(S_i, S_j)` arrows `i -> j`.
    pub quiver: Quiver,
    /// A quiver whose double is `quiver`.
    pub half: Quiver,
    pub eps: DimVector,
    /// Dimension vector of the simple at each local vertex.
    pub simples: Vec<DimVector>,
}

/// Builds the local quiver of a semisimple type. `distinct` factors are
/// expanded into separate vertices of multiplicity one.
pub fn local_quiver(q: &Quiver, sstype: &SemisimpleType) -> Result<LocalModel> {
    let mut simples = Vec::new();
    let mut labels = Vec::new();
    let mut eps = Vec::new();
    for (i, f) in sstype.factors().iter().enumerate() {
        if f.distinct && f.mult > 1 {
            for j in 0..f.mult {
                simples.push(f.dim.clone());
                labels.push(format!("s{}_{}", i + 1, j + 1));
                eps.push(1);
            }
        } else {
            simples.push(f.dim.clone());
            labels.push(format!("s{}", i + 1));
            eps.push(f.mult);
        }
    }
    let k = simples.len();
    let mut arrows = Vec::new();
    for x in 0..k {
        for y in x..k {
            let e = ext1(q, &simples[x], &simples[y], x == y);
            if e < 0 {
                return Err(Error::Inconsistency(format!(
                    "negative Ext^1 between local vertices {x} and {y}"
                )));
            }
            let count = if x == y {
                if e % 2 != 0 {
                    return Err(Error::Inconsistency(format!(
                        "odd self-extension count {e} at local vertex {x}"
                    )));
                }
                e / 2
            } else {
                e
            };
            for _ in 0..count {
                arrows.push((x, y));
            }
        }
    }
    let mut half = Quiver::from_edges(k, &arrows);
    half = relabel(half, &labels);
    Ok(LocalModel {
        quiver: double_quiver(&half),
        half,
        eps: DimVector::new(eps),
        simples,
    })
}

fn relabel(q: Quiver, labels: &[String]) -> Quiver {
    let arrows: Vec<(String, String, String)> = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a): (usize, &Arrow)| {
            (
                format!("x{}", i + 1),
                labels[a.tail].clone(),
                labels[a.head].clone(),
            )
        })
        .collect();
    Quiver::new(labels.to_vec(), arrows).expect("local labels are unique")
}

/// A semisimple module is cyclic iff no simple occurs more often than its
/// dimension.
pub fn is_cyclic_type(sstype: &SemisimpleType) -> bool {
    sstype
        .factors()
        .iter()
        .all(|f| f.distinct || f.mult <= f.dim.total())
}

/// Whether the zero representation of the preprojective algebra of `q` is a
/// smooth point of its representation variety, for sincere `alpha`.
pub fn zero_point_smooth(q: &Quiver, alpha: &DimVector) -> Result<bool> {
    q.check_dim(alpha)?;
    if !alpha.is_sincere() {
        return Err(Error::NotSincere);
    }
    Ok(component_vertex_sets(q).iter().all(|c| {
        c.len() == 1 && (alpha.get(c[0]) == 1 || !q.has_loop(c[0]))
    }))
}

pub fn semisimple_point_smooth(q: &Quiver, sstype: &SemisimpleType) -> Result<bool> {
    let local = local_quiver(q, sstype)?;
    let r = support_restrict(&local.half, &local.eps)?;
    zero_point_smooth(&r.quiver, &r.dim)
}

/// Enumerates multisets of `parts` (indices into `cands`, nonincreasing)
/// with exactly `k` elements summing to `rest`.
fn multisets(
    cands: &[DimVector],
    rest: &DimVector,
    max_index: usize,
    k: usize,
    acc: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if k == 0 {
        return rest.is_zero() && visit(acc);
    }
    if rest.is_zero() || (rest.total() as usize) < k {
        return false;
    }
    for i in (0..=max_index).rev() {
        if let Some(r) = rest.checked_sub(&cands[i]) {
            acc.push(i);
            if multisets(cands, &r, i, k - 1, acc, visit) {
                return true;
            }
            acc.pop();
        }
    }
    false
}

/// Searches, fewest simple summands first, for a cyclic semisimple type of
/// dimension `alpha` with at least two summands.
///
/// Where a simple would occur more often than its dimension, the summands
/// are taken pairwise non-isomorphic when that is possible (`p(beta) > 0`).
/// Returns `None` when no such type exists, which happens for instance for
/// extended Dynkin quivers of type D and E at their imaginary root.
pub fn find_singular_witness(q: &Quiver, alpha: &DimVector) -> Result<Option<SemisimpleType>> {
    let crit = SimplesCriterion::new(q);
    if !crit.admits_simples(alpha)? {
        return Err(Error::Precondition(format!("{alpha} admits no simples")));
    }
    if alpha.as_unit().is_some() {
        return Err(Error::Precondition(
            "coordinate vectors carry only simple representations".into(),
        ));
    }
    let mut cands = Vec::new();
    for beta in crit.roots().positive_roots_below(alpha)? {
        if crit.admits_simples(&beta)? {
            cands.push(beta);
        }
    }
    if cands.is_empty() {
        return Ok(None);
    }
    let mut found = None;
    for k in 2..=alpha.total() as usize {
        let mut visit = |idx: &[usize]| -> bool {
            let mut factors: Vec<Factor> = Vec::new();
            for &i in idx {
                match factors.iter_mut().find(|f| f.dim == cands[i]) {
                    Some(f) => f.mult += 1,
                    None => factors.push(Factor::new(cands[i].clone(), 1)),
                }
            }
            for f in &mut factors {
                if f.mult > f.dim.total() && p_unchecked(q, &f.dim) > 0 {
                    f.distinct = true;
                }
            }
            let t = SemisimpleType { factors };
            if is_cyclic_type(&t) {
                found = Some(t);
                true
            } else {
                false
            }
        };
        let mut acc = Vec::new();
        if multisets(&cands, alpha, cands.len() - 1, k, &mut acc, &mut visit) {
            break;
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{families::*, p_form};

    fn dv(v: &[u64]) -> DimVector {
        DimVector::new(v.to_vec())
    }

    #[test]
    fn ext1_examples() {
        assert_eq!(ext1_between_simples(&loops(2), &dv(&[1]), &dv(&[1])).unwrap(), 4);
        let k = kronecker(2);
        assert_eq!(ext1_between_simples(&k, &dv(&[1, 0]), &dv(&[0, 1])).unwrap(), 2);
        let two = Quiver::from_edges(2, &[]);
        assert_eq!(ext1_between_simples(&two, &dv(&[1, 0]), &dv(&[0, 1])).unwrap(), 0);
        assert!(ext1_between_simples(&a2(), &dv(&[1, 1]), &dv(&[1, 0])).is_err());
    }

    #[test]
    fn local_quiver_examples() {
        let q = loops(2);
        let simple = SemisimpleType::new(&q, vec![Factor::new(dv(&[3]), 1)]).unwrap();
        let m = local_quiver(&q, &simple).unwrap();
        assert_eq!(m.quiver.vertex_count(), 1);
        assert_eq!(m.quiver.loops_at(0) as i64, 2 * p_form(&q, &dv(&[3])).unwrap());
        assert_eq!(m.eps, dv(&[1]));

        let t = SemisimpleType::new(&q, vec![Factor::new(dv(&[1]), 2)]).unwrap();
        let m = local_quiver(&q, &t).unwrap();
        assert_eq!(m.quiver.loops_at(0), 4);
        assert_eq!(m.eps, dv(&[2]));

        let k = kronecker(2);
        let t = SemisimpleType::new(
            &k,
            vec![Factor::new(dv(&[1, 0]), 1), Factor::new(dv(&[0, 1]), 1)],
        )
        .unwrap();
        let m = local_quiver(&k, &t).unwrap();
        assert_eq!(m.quiver.vertex_count(), 2);
        let count = |t, h| m.quiver.arrows().iter().filter(|a| a.tail == t && a.head == h).count();
        assert_eq!(count(0, 1), 2);
        assert_eq!(count(1, 0), 2);
        assert_eq!(count(0, 0), 0);
        assert_eq!(m.eps, dv(&[1, 1]));
        assert_eq!(double_quiver(&m.half), m.quiver);
    }

    #[test]
    fn distinct_factors_expand() {
        let q = loops(2);
        let t = SemisimpleType::new(&q, vec![Factor::distinct(dv(&[1]), 3)]).unwrap();
        let m = local_quiver(&q, &t).unwrap();
        assert_eq!(m.eps, dv(&[1, 1, 1]));
        assert_eq!(
            2 * p_form(&m.half, &m.eps).unwrap(),
            2 * p_form(&q, &dv(&[3])).unwrap()
        );
    }

    #[test]
    fn type_validation() {
        let q = a2();
        assert!(SemisimpleType::new(&q, vec![Factor::new(dv(&[1, 1]), 1)]).is_err());
        assert!(SemisimpleType::new(&q, vec![Factor::new(dv(&[1, 0]), 0)]).is_err());
        assert!(SemisimpleType::new(&q, vec![Factor::distinct(dv(&[1, 0]), 2)]).is_err());
        assert!(SemisimpleType::new(
            &q,
            vec![Factor::new(dv(&[1, 0]), 1), Factor::new(dv(&[1, 0]), 2)]
        )
        .is_err());
    }

    #[test]
    fn cyclic_types() {
        let q = loops(2);
        let t = |d, e| SemisimpleType::new(&q, vec![Factor::new(dv(&[d]), e)]).unwrap();
        assert!(is_cyclic_type(&t(2, 2)));
        assert!(!is_cyclic_type(&t(2, 3)));
        assert!(is_cyclic_type(&t(1, 1)));
    }

    #[test]
    fn zero_point_examples() {
        assert!(zero_point_smooth(&loops(4), &dv(&[1])).unwrap());
        assert!(!zero_point_smooth(&loops(4), &dv(&[2])).unwrap());
        assert!(zero_point_smooth(&Quiver::from_edges(2, &[]), &dv(&[3, 5])).unwrap());
        assert!(!zero_point_smooth(&a2(), &dv(&[1, 1])).unwrap());
        assert_eq!(zero_point_smooth(&a2(), &dv(&[1, 0])), Err(Error::NotSincere));
    }

    #[test]
    fn semisimple_point_examples() {
        let q = loops(2);
        let simple = SemisimpleType::new(&q, vec![Factor::new(dv(&[2]), 1)]).unwrap();
        assert!(semisimple_point_smooth(&q, &simple).unwrap());
        let doubled = SemisimpleType::new(&q, vec![Factor::new(dv(&[1]), 2)]).unwrap();
        assert!(!semisimple_point_smooth(&q, &doubled).unwrap());
        let two = Quiver::from_edges(2, &[(0, 0), (0, 0), (1, 1), (1, 1)]);
        let split = SemisimpleType::new(
            &two,
            vec![Factor::new(dv(&[1, 0]), 1), Factor::new(dv(&[0, 1]), 1)],
        )
        .unwrap();
        assert!(semisimple_point_smooth(&two, &split).unwrap());
    }

    #[test]
    fn witness_examples() {
        let w = find_singular_witness(&loops(2), &dv(&[2])).unwrap().unwrap();
        assert_eq!(w.factors(), &[Factor::distinct(dv(&[1]), 2)]);
        let w = find_singular_witness(&kronecker(2), &dv(&[1, 1])).unwrap().unwrap();
        assert_eq!(
            w.factors(),
            &[Factor::new(dv(&[1, 0]), 1), Factor::new(dv(&[0, 1]), 1)]
        );
        // The centre simple would be needed twice: no cyclic semisimple type.
        assert_eq!(find_singular_witness(&d4_tilde(), &dv(&[2, 1, 1, 1, 1])).unwrap(), None);
        let w = find_singular_witness(&loops(2), &dv(&[3])).unwrap().unwrap();
        assert_eq!(w.factor_count(), 2);
        assert!(find_singular_witness(&loops(2), &dv(&[1])).is_err());
        assert!(find_singular_witness(&loops(1), &dv(&[2])).is_err());
    }
}

//! Positive roots of a quiver via reflection to the fundamental region.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::quiver::{component_vertex_sets, DimVector, Quiver};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootKind {
    NotRoot,
    Real,
    Imaginary,
}

impl RootKind {
    pub fn is_root(self) -> bool {
        self != RootKind::NotRoot
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootClass {
    pub kind: RootKind,
    /// Vertices reflected at, in order.
    pub trace: Vec<usize>,
}

/// `alpha - (alpha, e_v) e_v`. Entries may come out negative.
pub fn reflect(q: &Quiver, alpha: &[i64], v: usize) -> Result<Vec<i64>> {
    if alpha.len() != q.vertex_count() {
        return Err(Error::DimMismatch {
            expected: q.vertex_count(),
            found: alpha.len(),
        });
    }
    if q.has_loop(v) {
        return Err(Error::LoopedVertex(q.vertices()[v].clone()));
    }
    let mut out = alpha.to_vec();
    out[v] -= q.pairing_with_unit(alpha, v);
    Ok(out)
}

pub(crate) fn support_connected(q: &Quiver, alpha: &[i64]) -> bool {
    let supp: Vec<usize> = (0..alpha.len()).filter(|&v| alpha[v] != 0).collect();
    if supp.is_empty() {
        return false;
    }
    component_vertex_sets(&q.induced(&supp)).len() == 1
}

/// Decides whether `alpha` is a positive root, and of which kind.
///
/// Reflects at the smallest loop-free vertex `v` with `(alpha, e_v) > 0`
/// until `alpha` is a coordinate vector, leaves the positive cone, or lands
/// in the fundamental region.
pub fn classify_root(q: &Quiver, alpha: &DimVector) -> Result<RootClass> {
    q.check_dim(alpha)?;
    if alpha.is_zero() {
        return Err(Error::ZeroVector);
    }
    let n = q.vertex_count();
    let loop_free: Vec<bool> = (0..n).map(|v| !q.has_loop(v)).collect();
    let mut cur = alpha.signed();
    let mut trace = Vec::new();
    loop {
        let supp: Vec<usize> = (0..n).filter(|&v| cur[v] != 0).collect();
        if supp.len() == 1 && cur[supp[0]] == 1 {
            let kind = if loop_free[supp[0]] {
                RootKind::Real
            } else {
                RootKind::Imaginary
            };
            return Ok(RootClass { kind, trace });
        }
        let pick = (0..n).find(|&v| loop_free[v] && q.pairing_with_unit(&cur, v) > 0);
        match pick {
            Some(v) => {
                cur[v] -= q.pairing_with_unit(&cur, v);
                trace.push(v);
                if cur[v] < 0 {
                    return Ok(RootClass {
                        kind: RootKind::NotRoot,
                        trace,
                    });
                }
            }
            None => {
                let kind = if support_connected(q, &cur) {
                    RootKind::Imaginary
                } else {
                    RootKind::NotRoot
                };
                return Ok(RootClass { kind, trace });
            }
        }
    }
}

/// Root classification with a per-quiver memo table.
///
/// The table sits behind a mutex so one instance can serve concurrent
/// queries.
pub struct RootSystem<'q> {
    quiver: &'q Quiver,
    memo: Mutex<HashMap<DimVector, RootKind>>,
}

impl<'q> RootSystem<'q> {
    pub fn new(quiver: &'q Quiver) -> Self {
        RootSystem {
            quiver,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn quiver(&self) -> &'q Quiver {
        self.quiver
    }

    pub fn kind(&self, alpha: &DimVector) -> Result<RootKind> {
        if let Some(&k) = self.memo.lock().unwrap().get(alpha) {
            return Ok(k);
        }
        let k = classify_root(self.quiver, alpha)?.kind;
        self.memo.lock().unwrap().insert(alpha.clone(), k);
        Ok(k)
    }

    /// All positive roots `0 < beta <= alpha`, in lexicographic order.
    pub fn positive_roots_below(&self, alpha: &DimVector) -> Result<Vec<DimVector>> {
        self.quiver.check_dim(alpha)?;
        let mut out = Vec::new();
        for beta in alpha.box_below() {
            if beta.is_zero() {
                continue;
            }
            if self.kind(&beta)?.is_root() {
                out.push(beta);
            }
        }
        Ok(out)
    }
}

pub fn positive_roots_below(q: &Quiver, alpha: &DimVector) -> Result<Vec<DimVector>> {
    RootSystem::new(q).positive_roots_below(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{families::*, p_form};

    fn dv(v: &[u64]) -> DimVector {
        DimVector::new(v.to_vec())
    }

    #[test]
    fn reflection_examples() {
        let q = a2();
        assert_eq!(reflect(&q, &[1, 0], 1).unwrap(), vec![1, 1]);
        assert_eq!(reflect(&q, &[1, 0], 0).unwrap(), vec![-1, 0]);
        // (alpha, e_2) = 0 for alpha = (2, 1) on A_2.
        assert_eq!(reflect(&q, &[2, 1], 1).unwrap(), vec![2, 1]);
        let k = kronecker(2);
        assert_eq!(reflect(&k, &[1, 1], 0).unwrap(), vec![1, 1]);
        assert!(matches!(
            reflect(&loops(1), &[1], 0),
            Err(Error::LoopedVertex(_))
        ));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_root(&a2(), &dv(&[1, 1])).unwrap().kind, RootKind::Real);
        assert_eq!(
            classify_root(&d4_tilde(), &dv(&[2, 1, 1, 1, 1])).unwrap().kind,
            RootKind::Imaginary
        );
        assert_eq!(classify_root(&a2(), &dv(&[2, 1])).unwrap().kind, RootKind::NotRoot);
        assert_eq!(classify_root(&a2(), &dv(&[0, 0])), Err(Error::ZeroVector));
        assert_eq!(classify_root(&loops(1), &dv(&[1])).unwrap().kind, RootKind::Imaginary);
        assert_eq!(classify_root(&loops(0), &dv(&[1])).unwrap().kind, RootKind::Real);
        assert_eq!(classify_root(&loops(0), &dv(&[2])).unwrap().kind, RootKind::NotRoot);
        let disjoint = Quiver::from_edges(2, &[]);
        assert_eq!(
            classify_root(&disjoint, &dv(&[1, 1])).unwrap().kind,
            RootKind::NotRoot
        );
    }

    #[test]
    fn trace_records_reflections() {
        let c = classify_root(&path(3), &dv(&[1, 1, 1])).unwrap();
        assert_eq!(c.kind, RootKind::Real);
        assert!(!c.trace.is_empty());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            positive_roots_below(&a2(), &dv(&[1, 1])).unwrap(),
            vec![dv(&[0, 1]), dv(&[1, 0]), dv(&[1, 1])]
        );
        assert_eq!(positive_roots_below(&loops(0), &dv(&[3])).unwrap(), vec![dv(&[1])]);
        assert_eq!(
            positive_roots_below(&loops(2), &dv(&[2])).unwrap(),
            vec![dv(&[1]), dv(&[2])]
        );
    }

    #[test]
    fn dynkin_root_counts() {
        // A_n has n(n+1)/2 positive roots, D4 has 12, all real.
        let big = |n| DimVector::new(vec![3; n]);
        assert_eq!(positive_roots_below(&path(4), &big(4)).unwrap().len(), 10);
        let d4 = star(&[1, 1, 1]);
        let roots = positive_roots_below(&d4, &big(4)).unwrap();
        assert_eq!(roots.len(), 12);
        for r in roots {
            assert_eq!(p_form(&d4, &r).unwrap(), 0);
        }
    }

    #[test]
    fn memo_is_consistent() {
        let q = d4_tilde();
        let rs = RootSystem::new(&q);
        let a = dv(&[2, 1, 1, 1, 1]);
        assert_eq!(rs.kind(&a).unwrap(), rs.kind(&a).unwrap());
    }
}

//! Quivers, dimension vectors and the quadratic forms attached to them.
//!
//! Vertex order is fixed when a [`Quiver`] is built and every vector or
//! matrix in the crate is indexed by it.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// Suffix appended to an arrow label to name its reverse in the double quiver.
pub const STAR: &str = "*";

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub label: String,
    pub tail: usize,
    pub head: usize,
}

impl Arrow {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

/// A finite quiver with labeled vertices and arrows.
///
/// Parallel arrows are distinct objects; loops are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from vertex labels and `(label, tail, head)` triples
    /// given by vertex label.
    pub fn new<V, A, T>(vertices: V, arrows: A) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (T, T, T)>,
        T: Into<String>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let mut q = Quiver {
            vertices,
            arrows: Vec::new(),
        };
        let mut seen = HashSet::new();
        for (label, tail, head) in arrows {
            let (label, tail, head) = (label.into(), tail.into(), head.into());
            let t = *index.get(&tail).ok_or(Error::UnknownVertex(tail))?;
            let h = *index.get(&head).ok_or(Error::UnknownVertex(head))?;
            if !seen.insert(label.clone()) {
                return Err(Error::DuplicateArrow(label));
            }
            q.arrows.push(Arrow {
                label,
                tail: t,
                head: h,
            });
        }
        Ok(q)
    }

    /// Builds a quiver from raw index pairs, labelling vertices `1..=n` and
    /// arrows `a1, a2, ...`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let arrows = edges
            .iter()
            .enumerate()
            .map(|(k, &(t, h))| {
                assert!(t < n && h < n, "edge endpoint out of range");
                Arrow {
                    label: format!("a{}", k + 1),
                    tail: t,
                    head: h,
                }
            })
            .collect();
        Quiver { vertices, arrows }
    }

    pub fn empty() -> Self {
        Quiver {
            vertices: Vec::new(),
            arrows: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    pub fn loops_at(&self, v: usize) -> usize {
        self.arrows
            .iter()
            .filter(|a| a.tail == v && a.head == v)
            .count()
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.loops_at(v) > 0
    }

    /// Number of arrows between `u` and `v` in either direction (loops at
    /// `u` when `u == v`).
    pub fn edges_between(&self, u: usize, v: usize) -> usize {
        self.arrows
            .iter()
            .filter(|a| (a.tail == u && a.head == v) || (a.tail == v && a.head == u))
            .count()
    }

    /// The same quiver with arrow `k` reversed.
    pub fn reverse_arrow(&self, k: usize) -> Self {
        let mut q = self.clone();
        let a = &mut q.arrows[k];
        std::mem::swap(&mut a.tail, &mut a.head);
        q
    }

    pub fn check_dim(&self, alpha: &DimVector) -> Result<()> {
        if alpha.len() != self.vertex_count() {
            return Err(Error::DimMismatch {
                expected: self.vertex_count(),
                found: alpha.len(),
            });
        }
        Ok(())
    }

    /// Symmetrised Euler form on integer lattice vectors; lengths must match.
    pub(crate) fn pairing(&self, beta: &[i64], gamma: &[i64]) -> i64 {
        let diag: i64 = beta.iter().zip(gamma).map(|(b, g)| b * g).sum();
        let off: i64 = self
            .arrows
            .iter()
            .map(|a| beta[a.tail] * gamma[a.head] + beta[a.head] * gamma[a.tail])
            .sum();
        2 * diag - off
    }

    /// `(beta, e_v)` for an integer lattice vector.
    pub(crate) fn pairing_with_unit(&self, beta: &[i64], v: usize) -> i64 {
        let mut s = 2 * beta[v];
        for a in &self.arrows {
            if a.tail == v {
                s -= beta[a.head];
            }
            if a.head == v {
                s -= beta[a.tail];
            }
        }
        s
    }

    /// Adjacency lists of the underlying undirected graph (loops omitted).
    pub(crate) fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for a in &self.arrows {
            if a.tail != a.head {
                adj[a.tail].push(a.head);
                adj[a.head].push(a.tail);
            }
        }
        adj
    }

    /// Induced subquiver on `keep` (indices in increasing order).
    pub fn induced(&self, keep: &[usize]) -> Self {
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        Quiver {
            vertices: keep.iter().map(|&v| self.vertices[v].clone()).collect(),
            arrows: self
                .arrows
                .iter()
                .filter(|a| pos[a.tail] != usize::MAX && pos[a.head] != usize::MAX)
                .map(|a| Arrow {
                    label: a.label.clone(),
                    tail: pos[a.tail],
                    head: pos[a.head],
                })
                .collect(),
        }
    }

    /// Subquiver on `keep` using only the listed arrows (indices into `self`).
    pub fn sub(&self, keep: &[usize], arrows: &[usize]) -> Self {
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        Quiver {
            vertices: keep.iter().map(|&v| self.vertices[v].clone()).collect(),
            arrows: arrows
                .iter()
                .map(|&k| {
                    let a = &self.arrows[k];
                    assert!(pos[a.tail] != usize::MAX && pos[a.head] != usize::MAX);
                    Arrow {
                        label: a.label.clone(),
                        tail: pos[a.tail],
                        head: pos[a.head],
                    }
                })
                .collect(),
        }
    }
}

/// A dimension vector: one nonnegative integer per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVector(Vec<u64>);

impl DimVector {
    pub fn new(entries: Vec<u64>) -> Self {
        DimVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    pub fn unit(n: usize, v: usize) -> Self {
        let mut e = vec![0; n];
        e[v] = 1;
        DimVector(e)
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> u64 {
        self.0[v]
    }

    /// `|alpha|`, the total dimension.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// `alpha . alpha = sum of squares`.
    pub fn dot_self(&self) -> u64 {
        self.0.iter().map(|a| a * a).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn is_sincere(&self) -> bool {
        self.0.iter().all(|&a| a > 0)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.0[v] > 0).collect()
    }

    /// The vertex `v` if this is the coordinate vector `e_v`.
    pub fn as_unit(&self) -> Option<usize> {
        let supp = self.support();
        (supp.len() == 1 && self.0[supp[0]] == 1).then(|| supp[0])
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &DimVector) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_sub(&self, other: &DimVector) -> Option<DimVector> {
        if !other.le(self) {
            return None;
        }
        Some(DimVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: u64) -> DimVector {
        DimVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn signed(&self) -> Vec<i64> {
        self.0.iter().map(|&a| a as i64).collect()
    }

    /// All vectors `0 <= beta <= self` in lexicographic order.
    pub fn box_below(&self) -> Vec<DimVector> {
        let mut out = vec![Vec::with_capacity(self.len())];
        for &bound in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=bound).map(move |x| {
                        let mut p = prefix.clone();
                        p.push(x);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(DimVector).collect()
    }

    pub fn restrict(&self, keep: &[usize]) -> DimVector {
        DimVector(keep.iter().map(|&v| self.0[v]).collect())
    }
}

impl From<Vec<u64>> for DimVector {
    fn from(v: Vec<u64>) -> Self {
        DimVector(v)
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// `p(alpha) = 1 - alpha.alpha + sum over arrows of alpha_h alpha_t`.
pub fn p_form(q: &Quiver, alpha: &DimVector) -> Result<i64> {
    q.check_dim(alpha)?;
    Ok(p_unchecked(q, alpha))
}

pub(crate) fn p_unchecked(q: &Quiver, alpha: &DimVector) -> i64 {
    let a = alpha.entries();
    let arrows: i64 = q
        .arrows()
        .iter()
        .map(|x| (a[x.head] * a[x.tail]) as i64)
        .sum();
    1 - alpha.dot_self() as i64 + arrows
}

/// The symmetric bilinear form `(beta, gamma)` with `(alpha, alpha) = 2 - 2p(alpha)`.
pub fn sym_form(q: &Quiver, beta: &DimVector, gamma: &DimVector) -> Result<i64> {
    q.check_dim(beta)?;
    q.check_dim(gamma)?;
    Ok(q.pairing(&beta.signed(), &gamma.signed()))
}

/// Adjoins a reversed arrow `a*` for every arrow `a`.
pub fn double_quiver(q: &Quiver) -> Quiver {
    let mut arrows = q.arrows.clone();
    arrows.extend(q.arrows.iter().map(|a| Arrow {
        label: format!("{}{STAR}", a.label),
        tail: a.head,
        head: a.tail,
    }));
    Quiver {
        vertices: q.vertices.clone(),
        arrows,
    }
}

/// Pairs `(a, a*)` of arrow indices in a double quiver, in the order the
/// unstarred arrows appear.
pub fn star_pairs(q: &Quiver) -> Result<Vec<(usize, usize)>> {
    let mut pairs = Vec::new();
    let mut used = vec![false; q.arrows.len()];
    for (i, a) in q.arrows.iter().enumerate() {
        if used[i] {
            continue;
        }
        let target = format!("{}{STAR}", a.label);
        if let Some(j) = q.arrow_index(&target) {
            let b = &q.arrows[j];
            if used[j] || b.tail != a.head || b.head != a.tail {
                return Err(Error::UnpairedArrow(a.label.clone()));
            }
            used[i] = true;
            used[j] = true;
            pairs.push((i, j));
        }
    }
    if let Some(i) = used.iter().position(|u| !u) {
        return Err(Error::UnpairedArrow(q.arrows[i].label.clone()));
    }
    Ok(pairs)
}

/// The quiver `Q` whose double is `q`, if `q` is a double quiver.
pub fn half_quiver(q: &Quiver) -> Result<Quiver> {
    let pairs = star_pairs(q)?;
    let arrows: Vec<usize> = pairs.iter().map(|&(a, _)| a).collect();
    let all: Vec<usize> = (0..q.vertex_count()).collect();
    Ok(q.sub(&all, &arrows))
}

/// Result of deleting the vertices where a dimension vector vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub quiver: Quiver,
    pub dim: DimVector,
    /// Original indices of the surviving vertices.
    pub kept: Vec<usize>,
}

impl Restriction {
    /// Set when `alpha` was zero and nothing survived.
    pub fn is_empty(&self) -> bool {
        self.kept.is_empty()
    }
}

/// Removes zero-dimensional vertices and their incident arrows.
pub fn support_restrict(q: &Quiver, alpha: &DimVector) -> Result<Restriction> {
    q.check_dim(alpha)?;
    let kept = alpha.support();
    Ok(Restriction {
        quiver: q.induced(&kept),
        dim: alpha.restrict(&kept),
        kept,
    })
}

/// Vertex sets of the connected components of the underlying graph, each
/// sorted, components ordered by smallest vertex.
pub fn component_vertex_sets(q: &Quiver) -> Vec<Vec<usize>> {
    let adj = q.neighbours();
    let mut seen = vec![false; q.vertex_count()];
    let mut comps = Vec::new();
    for s in 0..q.vertex_count() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

pub fn connected_components(q: &Quiver) -> Vec<Quiver> {
    component_vertex_sets(q)
        .iter()
        .map(|c| q.induced(c))
        .collect()
}

/// Frequently used quivers.
pub mod families {
    use super::Quiver;

    /// One vertex carrying `g` loops.
    pub fn loops(g: usize) -> Quiver {
        Quiver::from_edges(1, &vec![(0, 0); g])
    }

    /// `1 -> 2`.
    pub fn a2() -> Quiver {
        Quiver::from_edges(2, &[(0, 1)])
    }

    /// Linearly oriented path with `n` vertices.
    pub fn path(n: usize) -> Quiver {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Quiver::from_edges(n, &edges)
    }

    /// Two vertices joined by `m` parallel arrows; `m = 2` is extended `A_1`.
    pub fn kronecker(m: usize) -> Quiver {
        Quiver::from_edges(2, &vec![(0, 1); m])
    }

    /// Oriented cycle on `n >= 2` vertices (extended `A_{n-1}`).
    pub fn cycle(n: usize) -> Quiver {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Quiver::from_edges(n, &edges)
    }

    /// Extended `D_4`: centre vertex 1 with four leaves, arrows pointing inward.
    pub fn d4_tilde() -> Quiver {
        Quiver::from_edges(5, &[(1, 0), (2, 0), (3, 0), (4, 0)])
    }

    /// Star with centre 1 and arms of the given lengths (vertex counts).
    pub fn star(arms: &[usize]) -> Quiver {
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in arms {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((next, prev));
                prev = next;
                next += 1;
            }
        }
        Quiver::from_edges(next, &edges)
    }
}

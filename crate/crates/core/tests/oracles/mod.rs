//! Independent reference implementations used to cross-check the library.
//!
//! Each oracle takes a different route from the code it checks: orbit
//! closure instead of greedy reduction, full multiset enumeration instead of
//! memoised search, dual-number differentiation instead of assembled
//! Jacobians, and unstructured intertwiner systems instead of block ones.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use cy2::linalg::{int, Matrix, Scalar};
use cy2::quiver::{p_form, sym_form};
use cy2::rep::Rep;
use cy2::{DimVector, Quiver, RootKind};

fn in_box(v: &[i64], bound: &[u64]) -> bool {
    v.iter().zip(bound).all(|(&x, &b)| x >= 0 && x as u64 <= b)
}

fn pairing_unit(q: &Quiver, v: &[i64], u: usize) -> i64 {
    let mut e = vec![0; q.vertex_count()];
    e[u] = 1;
    let to_dim = |w: &[i64]| DimVector::new(w.iter().map(|&x| x.max(0) as u64).collect());
    // sym_form is bilinear, and v is nonnegative inside the box.
    sym_form(q, &to_dim(v), &to_dim(&e)).unwrap()
}

fn closure(q: &Quiver, seeds: Vec<Vec<i64>>, bound: &[u64]) -> HashSet<Vec<i64>> {
    let loop_free: Vec<usize> = (0..q.vertex_count()).filter(|&v| !q.has_loop(v)).collect();
    let mut seen: HashSet<Vec<i64>> = seeds.iter().cloned().collect();
    let mut queue: VecDeque<Vec<i64>> = seeds.into();
    while let Some(v) = queue.pop_front() {
        for &u in &loop_free {
            let mut w = v.clone();
            w[u] -= pairing_unit(q, &v, u);
            if in_box(&w, bound) && w.iter().any(|&x| x != 0) && seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    seen
}

fn connected_support(q: &Quiver, v: &[i64]) -> bool {
    let supp: Vec<usize> = (0..v.len()).filter(|&i| v[i] != 0).collect();
    let Some(&start) = supp.first() else {
        return false;
    };
    let mut seen = HashSet::from([start]);
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for a in q.arrows() {
            for (s, t) in [(a.tail, a.head), (a.head, a.tail)] {
                if s == x && v[t] != 0 && seen.insert(t) {
                    stack.push(t);
                }
            }
        }
    }
    seen.len() == supp.len()
}

fn box_vectors(bound: &[u64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=b as i64).map(move |x| {
                    let mut p = p.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    out
}

/// Root kind of every nonzero vector in the box `0 <= v <= bound`.
///
/// Real roots: orbit of the loop-free simple roots under reflections,
/// restricted to the box. Imaginary roots: orbit of the fundamental set
/// (connected support, `(v, e_u) <= 0` at every vertex) inside the box.
pub fn root_kinds(q: &Quiver, bound: &DimVector) -> HashMap<DimVector, RootKind> {
    let n = q.vertex_count();
    let b = bound.entries();
    let simple: Vec<Vec<i64>> = (0..n)
        .filter(|&v| !q.has_loop(v) && b[v] >= 1)
        .map(|v| {
            let mut e = vec![0; n];
            e[v] = 1;
            e
        })
        .collect();
    let real = closure(q, simple, b);
    let fundamental: Vec<Vec<i64>> = box_vectors(b)
        .into_iter()
        .filter(|v| {
            connected_support(q, v) && (0..n).all(|u| pairing_unit(q, v, u) <= 0)
        })
        .collect();
    let imaginary = closure(q, fundamental, b);
    let mut out = HashMap::new();
    for v in box_vectors(b) {
        if v.iter().all(|&x| x == 0) {
            continue;
        }
        let kind = match (real.contains(&v), imaginary.contains(&v)) {
            (true, false) => RootKind::Real,
            (false, true) => RootKind::Imaginary,
            (false, false) => RootKind::NotRoot,
            (true, true) => panic!("{v:?} is both real and imaginary"),
        };
        out.insert(DimVector::new(v.iter().map(|&x| x as u64).collect()), kind);
    }
    out
}

/// Crawley-Boevey's criterion by listing every multiset decomposition into
/// at least two positive roots.
pub fn naive_admits_simples(q: &Quiver, alpha: &DimVector) -> bool {
    let kinds = root_kinds(q, alpha);
    if !kinds[alpha].is_root() {
        return false;
    }
    let mut roots: Vec<DimVector> = kinds
        .iter()
        .filter(|(_, k)| k.is_root())
        .map(|(v, _)| v.clone())
        .collect();
    roots.sort();
    let p = |v: &DimVector| p_form(q, v).unwrap();
    let target = p(alpha);
    let mut all = Vec::new();
    decompositions(&roots, alpha, roots.len(), &mut Vec::new(), &mut all);
    all.iter()
        .filter(|d| d.len() >= 2)
        .all(|d| target > d.iter().map(|&i| p(&roots[i])).sum::<i64>())
}

fn decompositions(
    roots: &[DimVector],
    rest: &DimVector,
    limit: usize,
    acc: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if rest.is_zero() {
        out.push(acc.clone());
        return;
    }
    for i in 0..limit {
        if let Some(r) = rest.checked_sub(&roots[i]) {
            acc.push(i);
            decompositions(roots, &r, i + 1, acc, out);
            acc.pop();
        }
    }
}

/// `dim End` from the `n^2`-unknown system `E g = g E` over every action
/// generator, solved by reduced row echelon form.
pub fn naive_end_dim(rep: &Rep) -> usize {
    let n = rep.size();
    let gens = rep.action_generators();
    let mut rows = Vec::new();
    for g in &gens {
        for i in 0..n {
            for j in 0..n {
                // Coefficient of E[k][l] in (E g - g E)[i][j].
                let mut row = vec![int(0); n * n];
                for l in 0..n {
                    row[i * n + l] += &g[(l, j)];
                }
                for k in 0..n {
                    row[k * n + j] -= &g[(i, k)];
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return n * n;
    }
    let m = Matrix::from_rows(rows, n * n).unwrap();
    let (_, pivots) = m.rref();
    n * n - pivots.len()
}

/// Matrices over the dual numbers `Q[t]/t^2`.
#[derive(Clone)]
struct Dual {
    re: Matrix,
    eps: Matrix,
}

impl Dual {
    fn mul(&self, o: &Dual) -> Dual {
        Dual {
            re: &self.re * &o.re,
            eps: &(&self.re * &o.eps) + &(&self.eps * &o.re),
        }
    }

    fn sub(&self, o: &Dual) -> Dual {
        Dual {
            re: &self.re - &o.re,
            eps: &self.eps - &o.eps,
        }
    }

    /// The inverse given `inv`, the inverse of the real part.
    fn inverse_with(&self, inv: Matrix) -> Dual {
        Dual {
            eps: -&(&(&inv * &self.eps) * &inv),
            re: inv,
        }
    }
}

fn nullity_from_images(images: Vec<Vec<Scalar>>, vars: usize) -> usize {
    if images.is_empty() {
        return vars;
    }
    let cols = images[0].len();
    let mut span = cy2::Span::new(cols);
    for v in &images {
        span.insert(v);
    }
    vars - span.len()
}

/// Tangent dimension of the preprojective variety: differentiate the
/// relation along each coordinate direction with dual numbers.
pub fn tangent_preprojective(rep: &cy2::QuiverRep) -> usize {
    let q = rep.quiver();
    let n = rep.size();
    let pairs = cy2::quiver::star_pairs(q).unwrap();
    let emb: Vec<Matrix> = (0..q.arrows().len()).map(|k| rep.embedded(k)).collect();
    let mut images = Vec::new();
    for (k, a) in q.arrows().iter().enumerate() {
        for r in 0..rep.dim().get(a.head) as usize {
            for c in 0..rep.dim().get(a.tail) as usize {
                let mut dir = Matrix::zeros(n, n);
                dir[(rep.offset(a.head) + r, rep.offset(a.tail) + c)] = int(1);
                let dual = |i: usize| Dual {
                    re: emb[i].clone(),
                    eps: if i == k { dir.clone() } else { Matrix::zeros(n, n) },
                };
                let mut total = Matrix::zeros(n, n);
                for &(x, y) in &pairs {
                    let (dx, dy) = (dual(x), dual(y));
                    total = &total + &dx.mul(&dy).sub(&dy.mul(&dx)).eps;
                }
                images.push(total.entries().to_vec());
            }
        }
    }
    let vars = images.len();
    nullity_from_images(images, vars)
}

/// Tangent dimension of the surface variety via dual-number evaluation of
/// the relator.
pub fn tangent_surface(rep: &cy2::SurfaceRep) -> usize {
    let n = rep.size();
    let gens = rep.generators();
    let invs: Vec<Matrix> = gens.iter().map(|g| g.inverse().unwrap()).collect();
    let mut images = Vec::new();
    for k in 0..gens.len() {
        for i in 0..n {
            for j in 0..n {
                let mut dir = Matrix::zeros(n, n);
                dir[(i, j)] = int(1);
                let d: Vec<Dual> = gens
                    .iter()
                    .enumerate()
                    .map(|(m, g)| Dual {
                        re: g.clone(),
                        eps: if m == k { dir.clone() } else { Matrix::zeros(n, n) },
                    })
                    .collect();
                let mut acc = Dual {
                    re: Matrix::identity(n),
                    eps: Matrix::zeros(n, n),
                };
                for p in 0..rep.genus() {
                    let (x, y) = (&d[2 * p], &d[2 * p + 1]);
                    let xi = x.inverse_with(invs[2 * p].clone());
                    let yi = y.inverse_with(invs[2 * p + 1].clone());
                    acc = acc.mul(x).mul(y).mul(&xi).mul(&yi);
                }
                images.push(acc.eps.entries().to_vec());
            }
        }
    }
    let vars = images.len();
    nullity_from_images(images, vars)
}

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Span};
use crate::quiver::{p_unchecked, star_pairs, sym_form};
use crate::sample::Sampler;

use super::{QuiverRep, Rep, SurfaceRep};

/// Rank of the linear map whose value on basis vector `k` is `images(k)`,
/// given as sparse `(coordinate, value)` pairs in a space of dimension
/// `target`.
fn rank_of<F>(vars: usize, target: usize, images: F) -> usize
where
    F: Fn(usize, &mut Vec<Scalar>),
{
    let mut m = Matrix::zeros(vars, target);
    let mut row = vec![Scalar::zero(); target];
    for k in 0..vars {
        row.iter_mut().for_each(|x| x.set_zero());
        images(k, &mut row);
        for (j, x) in row.iter().enumerate() {
            if !x.is_zero() {
                m[(k, j)] = x.clone();
            }
        }
    }
    m.rank()
}

/// Vertex dimensions, arrow endpoints and maps of either kind of rep;
/// surface reps are one vertex with `2g` loops.
struct Blocks<'a> {
    dims: Vec<usize>,
    arrows: Vec<(usize, usize)>,
    maps: &'a [Matrix],
}

impl<'a> Blocks<'a> {
    fn of(rep: &'a Rep) -> Self {
        match rep {
            Rep::Quiver(r) => Blocks {
                dims: r.dim().entries().iter().map(|&d| d as usize).collect(),
                arrows: r.quiver().arrows().iter().map(|a| (a.tail, a.head)).collect(),
                maps: r.maps(),
            },
            Rep::Surface(r) => Blocks {
                dims: vec![r.size()],
                arrows: vec![(0, 0); r.generators().len()],
                maps: r.generators(),
            },
        }
    }
}

fn same_base(a: &Rep, b: &Rep) -> Result<()> {
    let ok = match (a, b) {
        (Rep::Quiver(x), Rep::Quiver(y)) => x.quiver() == y.quiver(),
        (Rep::Surface(x), Rep::Surface(y)) => x.genus() == y.genus(),
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition("representations of different algebras".into()))
    }
}

/// `dim Hom(M, N)`: families `phi_v : M_v -> N_v` with
/// `phi_{h(a)} M(a) = N(a) phi_{t(a)}` for every arrow or generator.
pub fn hom_dim(m: &Rep, n: &Rep) -> Result<usize> {
    same_base(m, n)?;
    let (src, dst) = (Blocks::of(m), Blocks::of(n));
    // Unknowns: the entries of each phi_v, row-major, vertex after vertex.
    let mut var_off = Vec::new();
    let mut vars = 0;
    for (s, d) in src.dims.iter().zip(&dst.dims) {
        var_off.push(vars);
        vars += s * d;
    }
    let mut eq_off = Vec::new();
    let mut eqs = 0;
    for &(t, h) in &src.arrows {
        eq_off.push(eqs);
        eqs += dst.dims[h] * src.dims[t];
    }
    let mut owner = Vec::with_capacity(vars);
    for (v, (s, d)) in src.dims.iter().zip(&dst.dims).enumerate() {
        for r in 0..*d {
            for c in 0..*s {
                owner.push((v, r, c));
            }
        }
    }
    let rank = rank_of(vars, eqs, |k, out| {
        let (v, r, c) = owner[k];
        for (idx, &(t, h)) in src.arrows.iter().enumerate() {
            let cols = src.dims[t];
            // phi_h M(a): row r picks up row c of M(a).
            if h == v {
                let ma = &src.maps[idx];
                for j in 0..cols {
                    let x = &ma[(c, j)];
                    if !x.is_zero() {
                        out[eq_off[idx] + r * cols + j] += x;
                    }
                }
            }
            // -N(a) phi_t: column c picks up column r of N(a).
            if t == v {
                let na = &dst.maps[idx];
                for i in 0..dst.dims[h] {
                    let x = &na[(i, r)];
                    if !x.is_zero() {
                        out[eq_off[idx] + i * cols + c] -= x;
                    }
                }
            }
        }
    });
    Ok(vars - rank)
}

/// `dim End(M)`, by exact nullspace rank.
pub fn end_dim(rep: &Rep) -> usize {
    hom_dim(rep, rep).expect("a representation shares its own base")
}

/// Dimension of the tangent space to the preprojective representation
/// variety at `rep`: the nullity of
/// `(X_a) -> sum_a [X_a, rho(a*)] + [rho(a), X_{a*}]`.
pub fn tangent_dim_preprojective(rep: &QuiverRep) -> Result<usize> {
    if !rep.check_preprojective()? {
        return Err(Error::RelationViolated);
    }
    let q = rep.quiver();
    let pairs = star_pairs(q)?;
    // partner[k] = (arrow whose map multiplies X_k, sign of the term).
    let mut partner = vec![(0, 0i8); q.arrows().len()];
    for &(a, s) in &pairs {
        partner[a] = (s, 1);
        partner[s] = (a, -1);
    }
    let dims: Vec<usize> = rep.dim().entries().iter().map(|&d| d as usize).collect();
    let mut eq_off = Vec::new();
    let mut eqs = 0;
    for d in &dims {
        eq_off.push(eqs);
        eqs += d * d;
    }
    let mut owner = Vec::new();
    for (k, a) in q.arrows().iter().enumerate() {
        for r in 0..dims[a.head] {
            for c in 0..dims[a.tail] {
                owner.push((k, r, c));
            }
        }
    }
    let rank = rank_of(owner.len(), eqs, |var, out| {
        let (k, r, c) = owner[var];
        let a = &q.arrows()[k];
        let (m, sign) = partner[k];
        let pm = rep.map(m);
        let (h, t) = (a.head, a.tail);
        // sign * (E pm - pm E) with E the unit matrix at (r, c) of block (h, t).
        for j in 0..dims[h] {
            let x = &pm[(c, j)];
            if !x.is_zero() {
                let slot = &mut out[eq_off[h] + r * dims[h] + j];
                if sign > 0 {
                    *slot += x;
                } else {
                    *slot -= x;
                }
            }
        }
        for i in 0..dims[t] {
            let x = &pm[(i, r)];
            if !x.is_zero() {
                let slot = &mut out[eq_off[t] + i * dims[t] + c];
                if sign > 0 {
                    *slot -= x;
                } else {
                    *slot += x;
                }
            }
        }
    });
    Ok(owner.len() - rank)
}

/// Fox-calculus Jacobian of the surface relator at `rep`, as an
/// `n^2 x 2g n^2` matrix.
pub(crate) fn fox_jacobian(rep: &SurfaceRep) -> Matrix {
    let n = rep.size();
    let letters = rep.relator_letters();
    let mut prefix = vec![Matrix::identity(n)];
    for &l in &letters {
        let next = prefix.last().unwrap() * rep.letter(l);
        prefix.push(next);
    }
    let mut suffix = vec![Matrix::identity(n); letters.len() + 1];
    for j in (0..letters.len()).rev() {
        suffix[j] = rep.letter(letters[j]) * &suffix[j + 1];
    }
    let nn = n * n;
    let mut jac = Matrix::zeros(nn, rep.generators().len() * nn);
    for (j, &(k, inv)) in letters.iter().enumerate() {
        // The letter contributes L xi_k R.
        let (left, right) = if inv {
            let xi = &rep.inverses()[k];
            (-&(&prefix[j] * xi), xi * &suffix[j + 1])
        } else {
            (prefix[j].clone(), suffix[j + 1].clone())
        };
        for kk in 0..n {
            for ll in 0..n {
                let col = k * nn + kk * n + ll;
                for i in 0..n {
                    let a = &left[(i, kk)];
                    if a.is_zero() {
                        continue;
                    }
                    for jj in 0..n {
                        let b = &right[(ll, jj)];
                        if !b.is_zero() {
                            jac[(i * n + jj, col)] += a * b;
                        }
                    }
                }
            }
        }
    }
    jac
}

/// `2g n^2 - rank J` for the Fox Jacobian `J` of the relator.
pub fn tangent_dim_surface(rep: &SurfaceRep) -> Result<usize> {
    if !rep.check_surface() {
        return Err(Error::RelationViolated);
    }
    let jac = fox_jacobian(rep);
    Ok(jac.cols() - jac.rank())
}

pub fn tangent_dim(rep: &Rep) -> Result<usize> {
    match rep {
        Rep::Quiver(r) => tangent_dim_preprojective(r),
        Rep::Surface(r) => tangent_dim_surface(r),
    }
}

/// The tangent dimension predicted from `dim End`:
/// `2p(alpha) + alpha.alpha - 2 + end` or `(2g-1) n^2 + end`.
pub fn tangent_identity(rep: &Rep, end: usize) -> Result<i64> {
    Ok(match rep {
        Rep::Quiver(r) => {
            let base = r.base_quiver()?;
            2 * p_unchecked(&base, r.dim()) + r.dim().dot_self() as i64 - 2 + end as i64
        }
        Rep::Surface(r) => {
            let n = r.size() as i64;
            (2 * r.genus() as i64 - 1) * n * n + end as i64
        }
    })
}

/// `sum (-1)^i h^i` forced by the base algebra: `(alpha, alpha)` or
/// `(2 - 2g) n^2`.
pub fn euler_characteristic(rep: &Rep) -> Result<i64> {
    Ok(match rep {
        Rep::Quiver(r) => sym_form(&r.base_quiver()?, r.dim(), r.dim())?,
        Rep::Surface(r) => {
            let n = r.size() as i64;
            (2 - 2 * r.genus() as i64) * n * n
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtProfile {
    pub h0: u64,
    pub h1: u64,
    pub h2: u64,
    pub tangent_dim: u64,
}

impl ExtProfile {
    pub fn euler(&self) -> i64 {
        self.h0 as i64 - self.h1 as i64 + self.h2 as i64
    }
}

pub fn ext_profile(rep: &Rep) -> Result<ExtProfile> {
    let t = tangent_dim(rep)? as i64;
    let h0 = end_dim(rep) as i64;
    let h1 = t - rep.dim_dot_self() + h0;
    if h1 < 0 {
        return Err(Error::Inconsistency(format!("h1 = {h1} < 0")));
    }
    Ok(ExtProfile {
        h0: h0 as u64,
        h1: h1 as u64,
        h2: h0 as u64,
        tangent_dim: t as u64,
    })
}

/// Dimension of the span of all words in the action generators.
pub fn algebra_span_dim(rep: &Rep) -> usize {
    let n = rep.size();
    let gens = rep.action_generators();
    let mut span = Span::new(n * n);
    let id = Matrix::identity(n);
    span.insert(id.entries());
    let mut queue = vec![id];
    while let Some(m) = queue.pop() {
        for g in &gens {
            let p = g * &m;
            if span.insert(p.entries()) {
                if span.is_full() {
                    return span.len();
                }
                queue.push(p);
            }
        }
    }
    span.len()
}

/// Absolute simplicity by span density: the words in the generators must
/// span all of `Mat_n`.
pub fn is_simple(rep: &Rep) -> bool {
    let n = rep.size();
    n > 0 && algebra_span_dim(rep) == n * n
}

/// Dimension of the submodule generated by `v`, and the number of closure
/// rounds that enlarged it.
pub fn cyclic_closure(rep: &Rep, v: &[Scalar]) -> (usize, usize) {
    let n = rep.size();
    assert_eq!(v.len(), n, "vector length");
    let gens = rep.action_generators();
    let mut span = Span::new(n);
    if !span.insert(v) {
        return (0, 0);
    }
    let mut frontier = vec![v.to_vec()];
    let mut rounds = 0;
    loop {
        let mut next = Vec::new();
        for w in &frontier {
            for g in &gens {
                let u = g.mul_vec(w);
                if span.insert(&u) {
                    next.push(u);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        rounds += 1;
        frontier = next;
    }
    assert!(rounds < n.max(1), "closure ran {rounds} rounds in dimension {n}");
    (span.len(), rounds)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CyclicSource {
    /// The canonical vector of a certified semisimple structure.
    Canonical,
    /// A standard basis vector.
    Basis(usize),
    Random { seed: u64, trial: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCertificate {
    pub vector: Vec<Scalar>,
    pub source: CyclicSource,
    pub rounds: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CyclicAnswer {
    Yes(CyclicCertificate),
    /// Certified by a semisimple structure: `(dim S_i, e_i)` with some
    /// `e_i > dim S_i`.
    No { blocks: Vec<(usize, usize)> },
    NotFound { tried: usize, seed: u64 },
}

impl CyclicAnswer {
    pub fn is_yes(&self) -> bool {
        matches!(self, CyclicAnswer::Yes(_))
    }
}

fn certify(rep: &Rep, v: Vec<Scalar>, source: CyclicSource) -> Option<CyclicCertificate> {
    let (d, rounds) = cyclic_closure(rep, &v);
    (d == rep.size()).then_some(CyclicCertificate {
        vector: v,
        source,
        rounds,
    })
}

/// Standard basis vectors, then `trials` seeded random vectors.
pub fn search_cyclic_vector(rep: &Rep, seed: u64, trials: usize) -> Option<CyclicCertificate> {
    let n = rep.size();
    for i in 0..n {
        let mut e = vec![Scalar::zero(); n];
        e[i] = crate::linalg::int(1);
        if let Some(c) = certify(rep, e, CyclicSource::Basis(i)) {
            return Some(c);
        }
    }
    let mut s = Sampler::new(seed);
    (0..trials).find_map(|trial| certify(rep, s.vector(n), CyclicSource::Random { seed, trial }))
}

/// Three-valued cyclicity test. `No` is only returned for reps carrying a
/// semisimple structure whose multiplicities exceed dimensions.
pub fn has_cyclic_vector(rep: &Rep, seed: u64, trials: usize) -> CyclicAnswer {
    let n = rep.size();
    if n == 0 {
        return CyclicAnswer::Yes(CyclicCertificate {
            vector: Vec::new(),
            source: CyclicSource::Canonical,
            rounds: 0,
        });
    }
    if let Some(s) = rep.semisimple() {
        if !s.is_cyclic() {
            return CyclicAnswer::No {
                blocks: s.blocks.iter().map(|b| (b.dim, b.mult())).collect(),
            };
        }
        if let Some(c) = certify(rep, s.canonical_vector(n), CyclicSource::Canonical) {
            return CyclicAnswer::Yes(c);
        }
    }
    match search_cyclic_vector(rep, seed, trials) {
        Some(c) => CyclicAnswer::Yes(c),
        None => CyclicAnswer::NotFound {
            tried: n + trials,
            seed,
        },
    }
}

/// A cyclic point is two-sided exactly when `dim End = n`.
pub fn is_two_sided_point(rep: &Rep, v: &[Scalar]) -> Result<bool> {
    if v.len() != rep.size() || cyclic_closure(rep, v).0 != rep.size() {
        return Err(Error::NotCyclic);
    }
    Ok(end_dim(rep) == rep.size())
}

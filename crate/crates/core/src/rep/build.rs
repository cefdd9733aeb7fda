use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{int, Matrix, Scalar};
use crate::moduli::admits_simples;
use crate::quiver::{double_quiver, families, DimVector, Quiver};
use crate::sample::Sampler;

use super::analysis::{hom_dim, is_simple};
use super::{IsotypicBlock, QuiverRep, Rep, SemisimpleStructure, SurfaceRep};

/// Attempts allowed for randomized surface constructions.
pub const SURFACE_RETRIES: usize = 64;

/// Attempts allowed when drawing simple preprojective representations.
const SIMPLE_RETRIES: usize = 64;

/// Trials when searching a solution space for an invertible element.
const INVERTIBLE_TRIALS: usize = 32;

/// A constructed value with the seed and number of attempts that produced
/// it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certified<T> {
    pub value: T,
    pub seed: u64,
    pub attempts: usize,
}

/// Block-diagonal direct sum of `parts`, each repeated `mult` times.
///
/// When every part is simple the result records its isotypic structure,
/// grouping isomorphic parts.
pub fn build_semisimple(parts: &[(Rep, usize)]) -> Result<Rep> {
    let Some((first, _)) = parts.first() else {
        return Err(Error::Precondition("no summands".into()));
    };
    if parts.iter().any(|(_, m)| *m == 0) {
        return Err(Error::Precondition("multiplicity 0".into()));
    }
    let copies: Vec<&Rep> = parts
        .iter()
        .flat_map(|(r, m)| std::iter::repeat_n(r, *m))
        .collect();
    let (sum, coords) = match first {
        Rep::Quiver(q0) => {
            let mut reps = Vec::new();
            for r in &copies {
                match r {
                    Rep::Quiver(x) if x.quiver() == q0.quiver() => reps.push(x),
                    _ => return Err(Error::Precondition("mixed base algebras".into())),
                }
            }
            let (s, c) = quiver_sum(&reps);
            (Rep::Quiver(s), c)
        }
        Rep::Surface(s0) => {
            let mut reps = Vec::new();
            for r in &copies {
                match r {
                    Rep::Surface(x) if x.genus() == s0.genus() => reps.push(x),
                    _ => return Err(Error::Precondition("mixed base algebras".into())),
                }
            }
            let (s, c) = surface_sum(&reps)?;
            (Rep::Surface(s), c)
        }
    };
    let structure = if parts.iter().all(|(r, _)| is_simple(r)) {
        Some(isotypic(parts, coords)?)
    } else {
        None
    };
    Ok(match sum {
        Rep::Quiver(mut r) => {
            r.semisimple = structure;
            Rep::Quiver(r)
        }
        Rep::Surface(mut r) => {
            r.semisimple = structure;
            Rep::Surface(r)
        }
    })
}

/// Groups simple parts into isomorphism classes; `coords[c]` lists the
/// global coordinates of copy `c` in summand order.
fn isotypic(parts: &[(Rep, usize)], coords: Vec<Vec<usize>>) -> Result<SemisimpleStructure> {
    let mut blocks: Vec<(usize, IsotypicBlock)> = Vec::new();
    let mut coords = coords.into_iter();
    for (p, (rep, mult)) in parts.iter().enumerate() {
        let mut class = None;
        for (i, (rep_idx, _)) in blocks.iter().enumerate() {
            if hom_dim(&parts[*rep_idx].0, rep)? > 0 {
                class = Some(i);
                break;
            }
        }
        let i = match class {
            Some(i) => i,
            None => {
                blocks.push((
                    p,
                    IsotypicBlock {
                        dim: rep.size(),
                        dim_vector: rep.as_quiver().map(|r| r.dim().clone()),
                        copies: Vec::new(),
                    },
                ));
                blocks.len() - 1
            }
        };
        for _ in 0..*mult {
            blocks[i].1.copies.push(coords.next().expect("one coordinate list per copy"));
        }
    }
    Ok(SemisimpleStructure {
        blocks: blocks.into_iter().map(|(_, b)| b).collect(),
    })
}

fn quiver_sum(reps: &[&QuiverRep]) -> (QuiverRep, Vec<Vec<usize>>) {
    let q = reps[0].quiver().clone();
    let nv = q.vertex_count();
    let total = reps
        .iter()
        .fold(DimVector::zeros(nv), |acc, r| acc.add(r.dim()));
    let maps = (0..q.arrows().len())
        .map(|k| {
            let blocks: Vec<&Matrix> = reps.iter().map(|r| r.map(k)).collect();
            Matrix::direct_sum(&blocks)
        })
        .collect();
    let sum = QuiverRep::new(q, total, maps).expect("block sums have matching shapes");
    let mut before = vec![0usize; nv];
    let coords = reps
        .iter()
        .map(|r| {
            let mut c = Vec::with_capacity(r.size());
            for v in 0..nv {
                let d = r.dim().get(v) as usize;
                for i in 0..d {
                    c.push(sum.offset(v) + before[v] + i);
                }
                before[v] += d;
            }
            c
        })
        .collect();
    (sum, coords)
}

fn surface_sum(reps: &[&SurfaceRep]) -> Result<(SurfaceRep, Vec<Vec<usize>>)> {
    let g = reps[0].genus();
    let gens = (0..2 * g)
        .map(|k| {
            let blocks: Vec<&Matrix> = reps.iter().map(|r| &r.generators()[k]).collect();
            Matrix::direct_sum(&blocks)
        })
        .collect();
    let mut start = 0;
    let coords = reps
        .iter()
        .map(|r| {
            let c = (start..start + r.size()).collect();
            start += r.size();
            c
        })
        .collect();
    Ok((SurfaceRep::new(g, gens)?, coords))
}

/// An invertible `Y` with `X Y X^-1 Y^-1 = D`, searched among random
/// elements of the solution space of `XY = DYX`.
pub fn solve_commutator_equation(
    x: &Matrix,
    d: &Matrix,
    sampler: &mut Sampler,
) -> Result<Option<Matrix>> {
    let n = x.rows();
    if !x.is_square() || (d.rows(), d.cols()) != (n, n) {
        return Err(Error::Shape("square matrices of one size required".into()));
    }
    let xinv = x.inverse().ok_or_else(|| Error::Singular("X".into()))?;
    if d.inverse().is_none() {
        return Err(Error::Singular("D".into()));
    }
    if d.is_identity() {
        return Ok(Some(Matrix::identity(n)));
    }
    // Column k of the system matrix is the image of the k-th unit matrix.
    let nn = n * n;
    let mut sys = Matrix::zeros(nn, nn);
    for k in 0..nn {
        let mut e = Matrix::zeros(n, n);
        e[(k / n, k % n)] = One::one();
        let img = &(x * &e) - &(&(d * &e) * x);
        for (i, v) in img.entries().iter().enumerate() {
            sys[(i, k)] = v.clone();
        }
    }
    let basis = sys.nullspace();
    if basis.is_empty() {
        return Ok(None);
    }
    for _ in 0..INVERTIBLE_TRIALS {
        let y = sampler.combination(&basis, nn);
        let y = Matrix::from_rows(y.chunks(n).map(<[Scalar]>::to_vec).collect(), n)?;
        if let Some(yinv) = y.inverse() {
            let check = &(&(&(x * &y) * &xinv) * &yinv);
            if check == d {
                return Ok(Some(y));
            }
        }
    }
    Ok(None)
}

/// A simple `n`-dimensional representation of the genus-`g` surface group
/// (`g >= 2`), certified by span density.
///
/// Pairs `1..g-2` commute, pair `g-1` is random, and the last pair solves
/// the commutator equation against a conjugate of a known solution.
pub fn build_surface_simple(genus: usize, n: usize, seed: u64) -> Result<Certified<SurfaceRep>> {
    if genus < 2 {
        return Err(Error::Precondition("simple surface reps need genus >= 2".into()));
    }
    if n == 0 {
        return Err(Error::Precondition("dimension must be at least 1".into()));
    }
    let mut s = Sampler::new(seed);
    for attempt in 1..=SURFACE_RETRIES {
        if n == 1 {
            let gens = (0..2 * genus)
                .map(|_| Matrix::scalar(1, &s.nonzero_rational()))
                .collect();
            return Ok(Certified {
                value: SurfaceRep::new(genus, gens)?,
                seed,
                attempts: attempt,
            });
        }
        if let Some(rep) = surface_attempt(genus, n, &mut s)? {
            if rep.check_surface() && is_simple(&Rep::Surface(rep.clone())) {
                return Ok(Certified {
                    value: rep,
                    seed,
                    attempts: attempt,
                });
            }
        }
    }
    Err(Error::Exhausted {
        what: format!("simple surface rep g={genus} n={n} seed={seed}"),
        attempts: SURFACE_RETRIES,
    })
}

fn surface_attempt(genus: usize, n: usize, s: &mut Sampler) -> Result<Option<SurfaceRep>> {
    let id = Matrix::identity(n);
    let mut gens = Vec::with_capacity(2 * genus);
    for _ in 0..genus - 2 {
        let x = s.invertible(n);
        let y = &x.scale(&s.nonzero_rational()) + &id.scale(&s.rational());
        if !y.is_invertible() {
            return Ok(None);
        }
        gens.push(x);
        gens.push(y);
    }
    let a = s.invertible(n);
    let b = s.invertible(n);
    let (ai, bi) = (a.inverse().unwrap(), b.inverse().unwrap());
    // [X_g, Y_g] must equal [A, B]^-1 = [B, A]; (B, A) is one solution and
    // conjugating by anything commuting with [B, A] gives more.
    let d = &(&(&b * &a) * &bi) * &ai;
    let p = &id.scale(&s.nonzero_rational()) + &d.scale(&s.rational());
    let Some(pi) = p.inverse() else {
        return Ok(None);
    };
    let xg = &(&p * &b) * &pi;
    let Some(yg) = solve_commutator_equation(&xg, &d, s)? else {
        return Ok(None);
    };
    gens.extend([a, b, xg, yg]);
    Ok(Some(SurfaceRep::new(genus, gens)?))
}

/// `X_1 = I + N` with `N e_i = e_{i+1}`, every other generator the
/// identity, and cyclic vector `e_1`. Its kernel ideal is two-sided.
pub fn build_two_sided_point(genus: usize, n: usize) -> Result<(SurfaceRep, Vec<Scalar>)> {
    if genus < 2 {
        return Err(Error::Precondition("two-sided points are built for genus >= 2".into()));
    }
    if n == 0 {
        return Err(Error::Precondition("dimension must be at least 1".into()));
    }
    let mut x1 = Matrix::identity(n);
    for i in 0..n - 1 {
        x1[(i + 1, i)] = One::one();
    }
    let mut gens = vec![Matrix::identity(n); 2 * genus];
    gens[0] = x1;
    let mut v = vec![Scalar::zero(); n];
    v[0] = One::one();
    Ok((SurfaceRep::new(genus, gens)?, v))
}

/// Cyclic but decomposable representation of the preprojective algebra of
/// extended `D_4` at its imaginary root.
///
/// Oriented away from leaf `2`, the only non-terminal arrow is the
/// injective map into the centre; the three terminal maps to the other
/// leaves get rank `1 - 1 = 0`, as do all starred arrows. The cyclic vector
/// is a vector at leaf `2`, plus a centre vector off the image, plus a
/// nonzero vector at each other leaf.
pub fn build_extended_dynkin_cyclic() -> (QuiverRep, Vec<Scalar>) {
    let q = double_quiver(&families::d4_tilde());
    let alpha = DimVector::new(vec![2, 1, 1, 1, 1]);
    let mut rep = QuiverRep::zero(q, alpha).expect("shapes follow from the dimension vector");
    let mut maps = rep.maps().to_vec();
    maps[0] = Matrix::from_i64(&[&[1], &[0]]);
    rep = QuiverRep::new(rep.quiver().clone(), rep.dim().clone(), maps)
        .expect("the injective map has the arrow's shape");
    let v = [0, 1, 1, 1, 1, 1].iter().map(|&x| int(x)).collect();
    (rep, v)
}

/// A representation of `Q` with independent random entries.
pub fn random_quiver_rep(q: &Quiver, dim: &DimVector, s: &mut Sampler) -> Result<QuiverRep> {
    q.check_dim(dim)?;
    let maps = q
        .arrows()
        .iter()
        .map(|a| s.matrix(dim.get(a.head) as usize, dim.get(a.tail) as usize))
        .collect();
    QuiverRep::new(q.clone(), dim.clone(), maps)
}

/// A point of the preprojective representation variety of `base`: random
/// maps on the arrows of `base`, and a random solution of the (linear)
/// relation for the starred maps.
pub fn random_preprojective(base: &Quiver, dim: &DimVector, s: &mut Sampler) -> Result<QuiverRep> {
    let front = random_quiver_rep(base, dim, s)?;
    let dims: Vec<usize> = dim.entries().iter().map(|&d| d as usize).collect();
    let mut eq_off = Vec::new();
    let mut eqs = 0;
    for d in &dims {
        eq_off.push(eqs);
        eqs += d * d;
    }
    // Unknowns: entries of rho(a*), shape alpha_t x alpha_h.
    let mut owner = Vec::new();
    for (k, a) in base.arrows().iter().enumerate() {
        for r in 0..dims[a.tail] {
            for c in 0..dims[a.head] {
                owner.push((k, r, c));
            }
        }
    }
    let mut sys = Matrix::zeros(eqs, owner.len());
    for (var, &(k, r, c)) in owner.iter().enumerate() {
        let a = &base.arrows()[k];
        let m = front.map(k);
        let (h, t) = (a.head, a.tail);
        // rho(a) E lands at the head, -E rho(a) at the tail.
        for i in 0..dims[h] {
            let x = &m[(i, r)];
            if !x.is_zero() {
                sys[(eq_off[h] + i * dims[h] + c, var)] += x;
            }
        }
        for j in 0..dims[t] {
            let x = &m[(c, j)];
            if !x.is_zero() {
                sys[(eq_off[t] + r * dims[t] + j, var)] -= x;
            }
        }
    }
    let sol = s.combination(&sys.nullspace(), owner.len());
    let mut maps = front.maps().to_vec();
    let mut pos = 0;
    for a in base.arrows() {
        let (rows, cols) = (dims[a.tail], dims[a.head]);
        let mut m = Matrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = sol[pos].clone();
                pos += 1;
            }
        }
        maps.push(m);
    }
    QuiverRep::new(double_quiver(base), dim.clone(), maps)
}

/// A simple representation of the preprojective algebra of `base`,
/// certified by span density. `dim` must admit simples.
pub fn build_preprojective_simple(
    base: &Quiver,
    dim: &DimVector,
    seed: u64,
) -> Result<Certified<QuiverRep>> {
    if !admits_simples(base, dim)? {
        return Err(Error::Precondition(format!("{dim} admits no simples")));
    }
    let mut s = Sampler::new(seed);
    for attempt in 1..=SIMPLE_RETRIES {
        let rep = random_preprojective(base, dim, &mut s)?;
        if is_simple(&Rep::Quiver(rep.clone())) {
            return Ok(Certified {
                value: rep,
                seed,
                attempts: attempt,
            });
        }
    }
    Err(Error::Exhausted {
        what: format!("simple preprojective rep of dimension {dim} seed={seed}"),
        attempts: SIMPLE_RETRIES,
    })
}

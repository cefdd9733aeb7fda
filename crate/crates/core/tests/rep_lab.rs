use cy2::linalg::{int, ratio};
use cy2::quiver::families::*;
use cy2::rep::*;
use cy2::{double_quiver, surface_rep_dim, DimVector, Matrix, Quiver, Sampler};

fn dv(v: &[u64]) -> DimVector {
    DimVector::new(v.to_vec())
}

fn two_loop_double() -> Quiver {
    double_quiver(&loops(2))
}

#[test]
fn preprojective_relation() {
    let zero = QuiverRep::zero(two_loop_double(), dv(&[2])).unwrap();
    assert!(zero.check_preprojective().unwrap());

    let q = double_quiver(&loops(1));
    let a = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
    let b = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
    let rep = QuiverRep::new(q.clone(), dv(&[2]), vec![a.clone(), b]).unwrap();
    assert!(!rep.check_preprojective().unwrap());
    let unstarred = QuiverRep::new(q, dv(&[2]), vec![a, Matrix::zeros(2, 2)]).unwrap();
    assert!(unstarred.check_preprojective().unwrap());

    let not_double = QuiverRep::zero(loops(1), dv(&[1])).unwrap();
    assert!(not_double.check_preprojective().is_err());
}

#[test]
fn surface_relation() {
    assert!(SurfaceRep::identity(2, 3).unwrap().check_surface());
    let x = Matrix::diagonal(&[int(1), int(2)]);
    let y = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
    let rep = SurfaceRep::new(1, vec![x, y]).unwrap();
    assert!(!rep.check_surface());
    let (tp, _) = build_two_sided_point(2, 3).unwrap();
    assert!(tp.check_surface());
    let singular = SurfaceRep::new(1, vec![Matrix::identity(2), Matrix::zeros(2, 2)]);
    assert!(matches!(singular, Err(cy2::Error::Singular(l)) if l == "Y1"));
}

#[test]
fn end_dims() {
    for n in 1..4 {
        let id = Rep::Surface(SurfaceRep::identity(2, n).unwrap());
        assert_eq!(end_dim(&id), n * n);
    }
    let s = build_surface_simple(2, 2, 1).unwrap().value;
    let s = Rep::Surface(s);
    assert_eq!(end_dim(&s), 1);
    let ss = build_semisimple(&[(s, 2)]).unwrap();
    assert_eq!(end_dim(&ss), 4);
}

#[test]
fn preprojective_tangents() {
    let zero = QuiverRep::zero(two_loop_double(), dv(&[2])).unwrap();
    assert_eq!(tangent_dim_preprojective(&zero).unwrap(), 16);
    let d4 = QuiverRep::zero(double_quiver(&d4_tilde()), dv(&[2, 1, 1, 1, 1])).unwrap();
    assert_eq!(tangent_dim_preprojective(&d4).unwrap(), 16);

    let simple = build_preprojective_simple(&loops(2), &dv(&[2]), 3).unwrap().value;
    assert_eq!(tangent_dim_preprojective(&simple).unwrap(), 2 * 5 + 4 - 1);

    let q = double_quiver(&loops(1));
    let bad = QuiverRep::new(
        q,
        dv(&[2]),
        vec![Matrix::from_i64(&[&[0, 1], &[0, 0]]), Matrix::from_i64(&[&[0, 0], &[1, 0]])],
    )
    .unwrap();
    assert_eq!(tangent_dim_preprojective(&bad), Err(cy2::Error::RelationViolated));
}

#[test]
fn surface_tangents() {
    for (g, n) in [(1, 1), (2, 2), (3, 2)] {
        let id = SurfaceRep::identity(g, n).unwrap();
        assert_eq!(tangent_dim_surface(&id).unwrap(), 2 * g * n * n);
    }
    let s = build_surface_simple(2, 2, 5).unwrap().value;
    assert_eq!(tangent_dim_surface(&s).unwrap(), 13);
    let (tp, _) = build_two_sided_point(2, 2).unwrap();
    assert_eq!(tangent_dim_surface(&tp).unwrap(), 14);
    let (tp, _) = build_two_sided_point(3, 3).unwrap();
    assert_eq!(end_dim(&Rep::Surface(tp.clone())), 3);
    assert_eq!(tangent_dim_surface(&tp).unwrap(), 48);
    let s3 = build_surface_simple(3, 2, 5).unwrap().value;
    assert_eq!(tangent_dim_surface(&s3).unwrap(), 21);
}

#[test]
fn profiles() {
    let s = Rep::Surface(build_surface_simple(2, 2, 11).unwrap().value);
    let p = ext_profile(&s).unwrap();
    assert_eq!((p.h0, p.h1, p.h2, p.tangent_dim), (1, 10, 1, 13));
    assert_eq!(p.euler(), -8);

    let id = Rep::Surface(SurfaceRep::identity(2, 1).unwrap());
    let p = ext_profile(&id).unwrap();
    assert_eq!((p.h0, p.h1, p.h2, p.tangent_dim), (1, 4, 1, 4));

    let zero = Rep::Quiver(QuiverRep::zero(two_loop_double(), dv(&[2])).unwrap());
    let p = ext_profile(&zero).unwrap();
    assert_eq!((p.h0, p.h1, p.h2, p.tangent_dim), (4, 16, 4, 16));
    assert_eq!(p.euler(), euler_characteristic(&zero).unwrap());
}

#[test]
fn simplicity() {
    let one = Rep::Quiver(QuiverRep::zero(two_loop_double(), dv(&[1])).unwrap());
    assert!(is_simple(&one));
    assert!(!is_simple(&Rep::Surface(SurfaceRep::identity(2, 2).unwrap())));
    let s = Rep::Surface(build_surface_simple(2, 2, 2).unwrap().value);
    assert!(is_simple(&s));
    assert!(!is_simple(&build_semisimple(&[(s, 2)]).unwrap()));
    // Zero rep at a non-unit dimension is not simple.
    let z = Rep::Quiver(QuiverRep::zero(two_loop_double(), dv(&[2])).unwrap());
    assert!(!is_simple(&z));
}

#[test]
fn cyclic_vectors() {
    let s = Rep::Quiver(build_preprojective_simple(&loops(2), &dv(&[2]), 9).unwrap().value);
    let ss2 = build_semisimple(&[(s.clone(), 2)]).unwrap();
    match has_cyclic_vector(&ss2, 1, 10) {
        CyclicAnswer::Yes(c) => {
            assert_eq!(c.source, CyclicSource::Canonical);
            assert!(c.rounds < 4);
        }
        other => panic!("{other:?}"),
    }
    let ss3 = build_semisimple(&[(s.clone(), 3)]).unwrap();
    assert_eq!(has_cyclic_vector(&ss3, 1, 10), CyclicAnswer::No { blocks: vec![(2, 3)] });
    assert!(search_cyclic_vector(&ss3, 1, 10).is_none());
    for i in 0..2 {
        let mut e = vec![int(0); 2];
        e[i] = int(1);
        assert_eq!(cyclic_closure(&s, &e).0, 2);
    }
}

#[test]
fn two_sided_points() {
    let (tp, v) = build_two_sided_point(2, 2).unwrap();
    let tp = Rep::Surface(tp);
    assert!(is_two_sided_point(&tp, &v).unwrap());
    let s = Rep::Surface(build_surface_simple(2, 2, 4).unwrap().value);
    let c = search_cyclic_vector(&s, 0, 4).unwrap();
    assert!(!is_two_sided_point(&s, &c.vector).unwrap());
    let (one, v1) = build_two_sided_point(2, 1).unwrap();
    assert!(is_two_sided_point(&Rep::Surface(one.clone()), &v1).unwrap());
    assert_eq!(one, SurfaceRep::identity(2, 1).unwrap());
    let zero = vec![int(0); 2];
    assert_eq!(is_two_sided_point(&tp, &zero), Err(cy2::Error::NotCyclic));
}

#[test]
fn mixed_sums_rejected() {
    let a = Rep::Surface(SurfaceRep::identity(2, 1).unwrap());
    let b = Rep::Surface(SurfaceRep::identity(3, 1).unwrap());
    assert!(build_semisimple(&[(a.clone(), 1), (b, 1)]).is_err());
    let c = Rep::Quiver(QuiverRep::zero(two_loop_double(), dv(&[1])).unwrap());
    assert!(build_semisimple(&[(a, 1), (c, 1)]).is_err());
}

#[test]
fn lifting() {
    let mut s = Sampler::new(3);
    let r = random_quiver_rep(&kronecker(2), &dv(&[2, 3]), &mut s).unwrap();
    let l = lift_quiver_rep(&r);
    assert!(l.check_preprojective().unwrap());
    assert_eq!(l.quiver(), &double_quiver(&kronecker(2)));
    assert_eq!(l.map(0), r.map(0));
    assert_eq!((l.map(2).rows(), l.map(2).cols()), (2, 3));
    let z = lift_quiver_rep(&QuiverRep::zero(a2(), dv(&[1, 1])).unwrap());
    assert!(z.maps().iter().all(Matrix::is_zero));
}

#[test]
fn commutator_equation() {
    let mut s = Sampler::new(0);
    let x = Matrix::diagonal(&[int(1), int(2)]);
    assert_eq!(
        solve_commutator_equation(&x, &Matrix::identity(2), &mut s).unwrap(),
        Some(Matrix::identity(2))
    );
    let d = Matrix::diagonal(&[int(2), ratio(1, 2)]);
    assert_eq!(solve_commutator_equation(&Matrix::identity(2), &d, &mut s).unwrap(), None);
    // Y = [[0, 1], [1, 0]] gives X Y X^-1 Y^-1 = diag(1/2, 2).
    let d = Matrix::diagonal(&[ratio(1, 2), int(2)]);
    let y = solve_commutator_equation(&x, &d, &mut s).unwrap().unwrap();
    let yinv = y.inverse().unwrap();
    let xinv = x.inverse().unwrap();
    assert_eq!(&(&(&x * &y) * &xinv) * &yinv, d);
}

#[test]
fn surface_simples() {
    let one = build_surface_simple(2, 1, 0).unwrap().value;
    assert!(one.check_surface());
    assert!(is_simple(&Rep::Surface(one)));
    let s = build_surface_simple(2, 2, 7).unwrap();
    assert_eq!(s, build_surface_simple(2, 2, 7).unwrap());
    assert_eq!(
        tangent_dim_surface(&s.value).unwrap() as i64,
        surface_rep_dim(2, 2).unwrap()
    );
    assert!(build_surface_simple(1, 2, 0).is_err());
}

#[test]
fn extended_dynkin_construction() {
    let (rep, v) = build_extended_dynkin_cyclic();
    assert!(rep.check_preprojective().unwrap());
    let r = Rep::Quiver(rep);
    assert_eq!(cyclic_closure(&r, &v).0, 6);
    assert!(has_cyclic_vector(&r, 0, 4).is_yes());
    assert!(end_dim(&r) >= 2);
    assert_eq!(tangent_dim(&r).unwrap() as i64, tangent_identity(&r, end_dim(&r)).unwrap());
}

#[test]
fn text_round_trip() {
    let s = build_surface_simple(2, 2, 3).unwrap().value;
    let text = write_surface_rep(&s);
    let back = parse_rep(&text, &mut |_| unreachable!()).unwrap();
    assert_eq!(back, Rep::Surface(s));
    assert_eq!(write_rep(&back, ""), text);

    let (d4, _) = build_extended_dynkin_cyclic();
    let text = write_quiver_rep(&d4, "d4.quiver");
    let base = d4_tilde();
    let back = parse_rep(&text, &mut |name| {
        assert_eq!(name, "d4.quiver");
        Ok(base.clone())
    })
    .unwrap();
    assert_eq!(back, Rep::Quiver(d4.clone()));
    // The double itself resolves to the same representation.
    let again = parse_rep(&text, &mut |_| Ok(d4.quiver().clone())).unwrap();
    assert_eq!(again, back);
}

#[test]
fn text_errors() {
    let err = parse_rep("surface g=1 n=1\nmatrix X1\n1\nmatrix X1\n1\n", &mut |_| unreachable!())
        .unwrap_err();
    assert!(matches!(err, cy2::Error::Parse { line: 4, .. }));
    let err =
        parse_rep("surface g=1 n=2\nmatrix X1\n1 0\n0\n", &mut |_| unreachable!()).unwrap_err();
    assert!(matches!(err, cy2::Error::Parse { line: 4, .. }));
    let err = parse_rep("surface g=1 n=1\nmatrix X1\n1/0\n", &mut |_| unreachable!()).unwrap_err();
    assert!(err.is_parse());
    let err = parse_rep("surface g=1 n=1\nmatrix X1\n1\n", &mut |_| unreachable!()).unwrap_err();
    assert!(err.is_parse());
    assert!(parse_rep("", &mut |_| unreachable!()).is_err());
}

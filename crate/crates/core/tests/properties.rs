use proptest::prelude::*;

use wexlat::auslander::{build_algebra, build_ext_bimodule};
use wexlat::exactness::{boolean_check, closed_flags};
use wexlat::field::{Matrix, PrimeField, Subspace};
use wexlat::lattice::enumerate_submodules;
use wexlat::quiver::type_a_category;

fn field() -> impl Strategy<Value = PrimeField> {
    prop::sample::select(vec![2u32, 3, 5, 7]).prop_map(|p| PrimeField::new(p).unwrap())
}

fn matrix() -> impl Strategy<Value = Matrix> {
    (field(), 0usize..6, 0usize..6).prop_flat_map(|(f, r, c)| {
        prop::collection::vec(0..f.modulus(), r * c)
            .prop_map(move |data| Matrix::from_vec(f, r, c, data))
    })
}

fn orientation(arrows: usize) -> impl Strategy<Value = String> {
    prop::collection::vec(prop::bool::ANY, arrows)
        .prop_map(|v| v.into_iter().map(|r| if r { 'R' } else { 'L' }).collect())
}

proptest! {
    #[test]
    fn rank_nullity(m in matrix()) {
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.rows(), m.cols());
        for v in k.row_vectors() {
            prop_assert!(m.mul_vec(&v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn rref_is_idempotent(m in matrix()) {
        let (r, pivots) = m.rref();
        let (rr, pivots2) = r.rref();
        prop_assert_eq!(&rr, &r);
        prop_assert_eq!(pivots, pivots2);
    }

    #[test]
    fn solve_finds_preimages(m in matrix(), seed in prop::collection::vec(0u32..7, 6)) {
        let f = m.field();
        let x: Vec<u32> = seed.iter().take(m.cols()).map(|&s| s % f.modulus()).chain(std::iter::repeat(0)).take(m.cols()).collect();
        let b = m.mul_vec(&x);
        let y = m.solve(&b).unwrap().expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn inverse_when_invertible(m in matrix()) {
        if m.is_square() && m.rank() == m.rows() {
            let inv = m.inverse().unwrap();
            prop_assert_eq!(m.mul(&inv), Matrix::identity(m.field(), m.rows()));
        } else if m.is_square() {
            prop_assert!(m.inverse().is_none());
        }
    }

    #[test]
    fn grassmann_formula(f in field(), rows in prop::collection::vec(prop::collection::vec(0u32..7, 5), 0..6), split in 0usize..6) {
        let rows: Vec<Vec<u32>> = rows.into_iter().map(|r| r.into_iter().map(|x| x % f.modulus()).collect()).collect();
        let split = split.min(rows.len());
        let u = Subspace::span(f, 5, &rows[..split]);
        let w = Subspace::span(f, 5, &rows[split..]);
        let s = u.sum(&w);
        let i = u.intersection(&w);
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(s.contains_subspace(&u) && s.contains_subspace(&w));
        prop_assert!(u.contains_subspace(&i) && w.contains_subspace(&i));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn type_a3_closed_count_any_orientation_and_field(o in orientation(2), f in field()) {
        let cat = type_a_category(3, &o, f).unwrap();
        let b = build_ext_bimodule(build_algebra(&cat).unwrap()).unwrap();
        let l = enumerate_submodules(&b).unwrap();
        let cl = closed_flags(&l, &b).unwrap();
        prop_assert_eq!(l.len(), 13);
        prop_assert_eq!(cl.closed_nodes().len(), 8);
        prop_assert!(boolean_check(&l, &b, &cl).unwrap().ok);
        prop_assert!(l.is_modular().is_ok());
    }
}

use giambelli::outside::{diagonal_count, enumerate_decompositions};
use giambelli::shapes::Partition;
use giambelli::smith::{smith_normal_form, smith_normal_form_with_witnesses};
use giambelli::{EuclideanDomain, Field, Matrix, QPoly, RationalFunction};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-5i64..=5, 0..5).prop_map(|c| QPoly::from_i64s(&c))
}

fn nonzero_poly() -> impl Strategy<Value = QPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

fn square(n: usize) -> impl Strategy<Value = Matrix<QPoly>> {
    prop::collection::vec(poly(), n * n).prop_map(move |v| {
        let mut it = v.into_iter();
        Matrix::from_fn(n, n, |_, _| it.next().unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn divmod_reconstructs(a in poly(), b in nonzero_poly()) {
        let (q, r) = a.divmod(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_and_bezout(a in poly(), b in poly()) {
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let g = a.gcd(&b).unwrap();
        prop_assert!(g.is_monic());
        prop_assert!(g.divides(&a) && g.divides(&b));
        let (g2, s, t) = a.bezout(&b).unwrap();
        prop_assert_eq!(&g2, &g);
        prop_assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn ratfunc_field_laws(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(a.normalize(), a.clone());
        prop_assert!(a.denom().is_monic());
        prop_assert_eq!((a.clone() + b.clone()) - b.clone(), a.clone());
        prop_assert_eq!(
            a.clone() * (b.clone() + c.clone()),
            a.clone() * b.clone() + a.clone() * c.clone()
        );
        if !b.is_zero() {
            prop_assert_eq!(a.clone() * b.clone() * b.inverse().unwrap(), a);
        }
    }

    #[test]
    fn snf_witnesses_and_invariance(a in square(3), i in 0usize..3, j in 0usize..3, k in poly()) {
        let base = smith_normal_form_with_witnesses(&a);
        prop_assert!(base.check_invariants(&a).is_ok());
        // unimodular row and column operations leave the Smith form unchanged
        let mut b = a.clone();
        if i != j {
            for col in 0..3 {
                let v = &b[(i, col)] + &(&k * &b[(j, col)]);
                b[(i, col)] = v;
            }
            b.swap_cols(i, j);
        }
        let neg = -QPoly::one();
        for row in 0..3 {
            b[(row, 0)] = &b[(row, 0)] * &neg;
        }
        prop_assert_eq!(smith_normal_form(&b).diagonal, base.diagonal);
    }
}

#[test]
fn partition_invariants() {
    let all = Partition::all_up_to(12);
    // partition numbers p(1..=12); the empty partition is excluded
    assert_eq!(all.len(), [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77].iter().sum::<usize>());
    for p in &all {
        assert_eq!(p.conjugate().conjugate(), *p);
        assert_eq!(p.conjugate().size(), p.size());
        assert_eq!(p.frobenius().to_partition(), *p);
        assert_eq!(p.conjugate().rank(), p.rank());
        let hook_cells: usize = (1..=p.rank()).map(|i| p.diagonal_hook(i).len()).sum();
        assert_eq!(hook_cells, p.size());
        for c in p.cells() {
            let h = p.hook_length(c).unwrap();
            assert!(h >= 1 && h <= p.size());
        }
    }
}

#[test]
fn decomposition_invariants() {
    for p in Partition::all_up_to(10).iter() {
        let d = diagonal_count(p).unwrap();
        let decs: Vec<_> = enumerate_decompositions(p).unwrap().collect();
        assert_eq!(decs.len(), 1 << (d - 1), "{p}");
        for dec in &decs {
            dec.check_invariants().unwrap_or_else(|e| panic!("{p} {}: {e}", dec.direction()));
            let cells: usize = dec.strips().iter().map(|s| s.len()).sum();
            assert_eq!(cells, p.size());
        }
    }
}

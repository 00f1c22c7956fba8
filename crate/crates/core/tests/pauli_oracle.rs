mod common;

use common::observable_matrix;
use proptest::prelude::*;
use qcontext::geometry::polar_space;
use qcontext::pauli::{is_symmetric, pi, product_sign, rho, symplectic_form, PauliObservable, Sign};
use qcontext::Gf2Vector;

#[test]
fn rho_and_pi_are_inverse_bijections() {
    for n in 1..=5 {
        let s = polar_space(n).unwrap();
        let mut labels = std::collections::HashSet::new();
        for i in 0..s.num_points() {
            let v = s.point(i);
            let o = rho(&v).unwrap();
            assert_eq!(pi(&o), v);
            assert!(o.is_observable());
            assert!(labels.insert(o.to_string()));
            assert_eq!(o.to_string().parse::<PauliObservable>().unwrap(), o);
        }
    }
}

#[test]
fn letter_convention() {
    let cases = [("10", "Z"), ("01", "X"), ("11", "Y")];
    for (bits, letter) in cases {
        assert_eq!(rho(&Gf2Vector::parse_bits(bits).unwrap()).unwrap().to_string(), letter);
    }
    assert!(rho(&Gf2Vector::zeros(4)).is_err());
}

#[test]
fn symmetric_iff_quadratic_form_vanishes() {
    for n in 1..=4 {
        let s = polar_space(n).unwrap();
        for i in 0..s.num_points() {
            let o = s.observable(i);
            let q0 = s.quadratic_form_value(None, i).unwrap();
            assert_eq!(is_symmetric(&o), !q0, "{o}");
            assert_eq!(is_symmetric(&o), o.y_count() % 2 == 0);
        }
    }
}

#[test]
fn mermin_square_signs() {
    let rows = [["XI", "IX", "XX"], ["IY", "YI", "YY"], ["XY", "YX", "ZZ"]];
    let p = |s: &str| s.parse::<PauliObservable>().unwrap();
    for r in rows {
        let f: Vec<_> = r.iter().map(|s| p(s)).collect();
        assert_eq!(product_sign(&f).unwrap().sign, Sign::Plus);
    }
    for c in 0..3 {
        let f: Vec<_> = rows.iter().map(|r| p(r[c])).collect();
        let want = if c == 2 { Sign::Minus } else { Sign::Plus };
        assert_eq!(product_sign(&f).unwrap().sign, want);
    }
}

fn observable(n: usize) -> impl Strategy<Value = PauliObservable> {
    proptest::collection::vec(any::<bool>(), 2 * n)
        .prop_filter("nonzero", |b| b.iter().any(|&x| x))
        .prop_map(|b| rho(&Gf2Vector::from_bools(&b)).unwrap())
}

proptest! {
    #[test]
    fn commutation_matches_dense(x in observable(3), y in observable(3)) {
        let (mx, my) = (observable_matrix(&x), observable_matrix(&y));
        let commute = mx.mul(&my).approx_eq(&my.mul(&mx));
        prop_assert_eq!(x.commutes_with(&y).unwrap(), commute);
        prop_assert_eq!(symplectic_form(x.coords(), y.coords()).unwrap(), !commute);
    }

    #[test]
    fn product_is_symmetric_in_commuting_order(x in observable(3), y in observable(3)) {
        prop_assume!(x.commutes_with(&y).unwrap());
        let xy = product_sign(&[x.clone(), y.clone()]).unwrap();
        let yx = product_sign(&[y, x]).unwrap();
        prop_assert_eq!(xy, yx);
    }

    #[test]
    fn product_matches_dense(fs in proptest::collection::vec(observable(2), 1..6)) {
        let prod = product_sign(&fs).unwrap();
        let dense = fs.iter().fold(common::Dense::identity(4), |acc, f| acc.mul(&observable_matrix(f)));
        prop_assert!(observable_matrix(&prod.result).approx_eq(&dense));
    }
}

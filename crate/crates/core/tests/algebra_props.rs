//! Randomized ring-axiom checks for the exact arithmetic layer.

use daha_core::exactalg::{rat, BigRat, KPoly, KappaScalar, QPoly, Scalar, UPoly};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = BigRat> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

fn qpoly(nvars: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec((prop::collection::vec(0u16..3, nvars), small_rat()), 0..5).prop_map(move |terms| {
        terms
            .into_iter()
            .fold(QPoly::zero(nvars), |acc, (e, c)| acc.add(&QPoly::monomial(&e, c)))
    })
}

fn kappa_scalar() -> impl Strategy<Value = KappaScalar> {
    (prop::collection::vec(small_rat(), 1..3), prop::collection::vec(small_rat(), 1..3)).prop_filter_map(
        "nonzero denominator",
        |(n, d)| {
            let den = UPoly::from_coeffs(d);
            if den.is_zero() { None } else { KappaScalar::from_fraction(UPoly::from_coeffs(n), den) }
        },
    )
}

proptest! {
    #[test]
    fn polynomial_ring_axioms(f in qpoly(2), g in qpoly(2), h in qpoly(2)) {
        prop_assert_eq!(f.add(&g), g.add(&f));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn kappa_field_axioms(a in kappa_scalar(), b in kappa_scalar(), c in kappa_scalar()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        if !b.is_zero() {
            prop_assert_eq!(a.div(&b).unwrap().mul(&b), a);
        }
    }

    #[test]
    fn kappa_polys_specialize_homomorphically(x in -5i64..5) {
        let k = KappaScalar::kappa();
        let f = KPoly::monomial(&[1, 0], k.add(&KappaScalar::one()));
        let g = KPoly::monomial(&[0, 1], k.clone());
        let at = BigRat::from_integer(x.into());
        let lhs = daha_core::jack::specialize(&f.mul(&g), &at).unwrap();
        let rhs = daha_core::jack::specialize(&f, &at).unwrap().mul(&daha_core::jack::specialize(&g, &at).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

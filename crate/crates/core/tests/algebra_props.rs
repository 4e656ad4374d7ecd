//! Randomized properties of the arithmetic, polynomial and Gröbner layers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use strongkoszul::field::Field;
use strongkoszul::grobner::{buchberger_polys, hilbert_function, is_groebner_basis, BuchbergerOptions};
use strongkoszul::ideal::IdealPresentation;
use strongkoszul::monomial::{Monomial, MonomialOrder};
use strongkoszul::poly::{Polynomial, Ring, RingRef};
use strongkoszul::rational::Rational;

fn ring(n: usize, field: Field) -> RingRef {
    Ring::new((1..=n).map(|i| format!("x{i}")).collect(), field).unwrap()
}

fn poly_from(r: &RingRef, terms: &[(i64, Vec<u16>)]) -> Polynomial {
    let f = r.field();
    Polynomial::from_terms(r, terms.iter().map(|(c, e)| (Monomial::from_slice(e), f.from_i64(*c))).collect())
}

fn terms(n: usize, max_exp: u16, len: usize) -> impl Strategy<Value = Vec<(i64, Vec<u16>)>> {
    prop::collection::vec((-5i64..=5, prop::collection::vec(0..=max_exp, n)), 0..=len)
}

/// Homogeneous terms of degree `d` in three variables.
fn homogeneous3(d: u16, len: usize) -> impl Strategy<Value = Vec<(i64, Vec<u16>)>> {
    prop::collection::vec((-4i64..=4, 0..=d, 0..=d), 1..=len).prop_map(move |v| {
        v.into_iter().filter(|(_, a, b)| a + b <= d).map(|(c, a, b)| (c, vec![a, b, d - a - b])).collect()
    })
}

fn ranking(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rationals_stay_in_lowest_terms(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
        let x = Rational::from_bigints(BigInt::from(a), BigInt::from(b)).unwrap();
        let y = Rational::from_bigints(BigInt::from(c), BigInt::from(-d)).unwrap();
        for r in [x.add(&y), x.mul(&y), x.sub(&y)] {
            prop_assert!(r.denom() > BigInt::from(0));
            prop_assert_eq!(num_integer::Integer::gcd(&r.numer(), &r.denom()), BigInt::from(1));
        }
        prop_assert!(Rational::from_bigints(BigInt::from(a), BigInt::from(0)).is_none());
    }

    #[test]
    fn prime_field_inverses(a in 1i64..100_000) {
        let f = Field::Prime(32003);
        let x = f.from_i64(a);
        if x.is_zero() {
            prop_assert!(x.inv().is_none());
        } else {
            prop_assert!(x.mul(&x.inv().unwrap()).is_one());
        }
        prop_assert!(f.from_i64(-a).add(&x).is_zero());
    }

    #[test]
    fn graded_orders_refine_divisibility(m in prop::collection::vec(0u16..4, 4), k in prop::collection::vec(0u16..3, 4), r in ranking(4)) {
        let a = Monomial::from_slice(&m);
        let b = a.mul(&Monomial::from_slice(&k));
        prop_assume!(a != b);
        for order in [MonomialOrder::revlex(r.clone()).unwrap(), MonomialOrder::lex(r.clone()).unwrap(), MonomialOrder::grevlex(4)] {
            prop_assert_eq!(order.cmp(&a, &b), std::cmp::Ordering::Less);
        }
    }

    #[test]
    fn tidiness_ignores_scaling(t in terms(3, 3, 5), c in prop::sample::select(vec![-3i64, -1, 2, 7])) {
        let r = ring(3, Field::Rational);
        let f = poly_from(&r, &t);
        prop_assert_eq!(f.is_tidy(), f.scale(&Field::Rational.from_i64(c)).is_tidy());
        for m in f.support() {
            prop_assert!(Polynomial::monomial(&r, m.clone()).is_tidy());
        }
    }

    #[test]
    fn zeroing_variables_is_a_ring_map(t1 in terms(3, 2, 4), t2 in terms(3, 2, 4), ys in prop::sample::subsequence(vec![0usize, 1, 2], 0..=3)) {
        let r = ring(3, Field::Rational);
        let (f, g) = (poly_from(&r, &t1), poly_from(&r, &t2));
        prop_assert_eq!(f.add(&g).set_variables_to_zero(&ys), f.set_variables_to_zero(&ys).add(&g.set_variables_to_zero(&ys)));
        prop_assert_eq!(f.mul(&g).set_variables_to_zero(&ys), f.set_variables_to_zero(&ys).mul(&g.set_variables_to_zero(&ys)));
    }

    #[test]
    fn linear_substitution_round_trip(t in terms(3, 2, 5), steps in prop::collection::vec((0usize..3, 0usize..3, -3i64..=3), 1..4)) {
        let r = ring(3, Field::Rational);
        let f = poly_from(&r, &t);
        let elementary = |i: usize, j: usize, c: i64| {
            let mut map = BTreeMap::new();
            map.insert(i, Polynomial::var(&r, i).add(&Polynomial::var(&r, j).scale(&Field::Rational.from_i64(c))));
            map
        };
        let steps: Vec<_> = steps.into_iter().filter(|(i, j, _)| i != j).collect();
        let mut g = f.clone();
        for &(i, j, c) in &steps {
            g = g.substitute_linear(&elementary(i, j, c)).unwrap();
        }
        for &(i, j, c) in steps.iter().rev() {
            g = g.substitute_linear(&elementary(i, j, -c)).unwrap();
        }
        prop_assert_eq!(g, f);
    }

    #[test]
    fn combinations_of_generators_reduce_to_zero(
        g1 in homogeneous3(2, 4), g2 in homogeneous3(2, 4), g3 in homogeneous3(3, 4),
        h1 in homogeneous3(2, 4), h2 in homogeneous3(2, 4), h3 in homogeneous3(1, 3),
        r in ranking(3),
    ) {
        let s = ring(3, Field::Rational);
        let gens: Vec<Polynomial> = [&g1, &g2, &g3].iter().map(|t| poly_from(&s, t)).filter(|p| !p.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let order = MonomialOrder::revlex(r).unwrap();
        let gb = buchberger_polys(&s, &gens, &order, &BuchbergerOptions::default());
        prop_assert!(is_groebner_basis(gb.basis(), &order));
        prop_assert!(gb.is_reduced());
        let mult = [&h1, &h2, &h3].map(|t| poly_from(&s, t));
        let mut f = Polynomial::zero(&s);
        for (g, h) in gens.iter().zip(mult.iter()) {
            f = f.add(&g.mul(h));
        }
        prop_assert!(gb.normal_form(&f).is_zero());
        for g in &gens {
            prop_assert!(gb.contains(g));
        }
    }

    #[test]
    fn reduced_basis_ignores_generator_order(g1 in homogeneous3(2, 4), g2 in homogeneous3(2, 4), g3 in homogeneous3(2, 4), perm in ranking(3)) {
        let s = ring(3, Field::Prime(101));
        let gens: Vec<Polynomial> = [&g1, &g2, &g3].iter().map(|t| poly_from(&s, t)).collect();
        let shuffled: Vec<Polynomial> = perm.iter().map(|&i| gens[i].clone()).filter(|g| !g.is_zero()).collect();
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let order = MonomialOrder::grevlex(3);
        let a = buchberger_polys(&s, &gens, &order, &BuchbergerOptions::default());
        let b = buchberger_polys(&s, &shuffled, &order, &BuchbergerOptions::default());
        prop_assert_eq!(a.basis(), b.basis());
    }

    #[test]
    fn hilbert_function_is_order_independent(g1 in homogeneous3(2, 4), g2 in homogeneous3(2, 4), r in ranking(3)) {
        let s = ring(3, Field::Rational);
        let gens: Vec<Polynomial> = [&g1, &g2].iter().map(|t| poly_from(&s, t)).filter(|p| !p.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let ideal = IdealPresentation::new(&s, gens).unwrap();
        let hf = |o: &MonomialOrder| ideal.groebner(o).initial_ideal().hilbert_function(0..6);
        let base = hf(&MonomialOrder::grevlex(3));
        prop_assert_eq!(&base, &hf(&MonomialOrder::revlex(r.clone()).unwrap()));
        prop_assert_eq!(&base, &hf(&MonomialOrder::lex(r).unwrap()));
        prop_assert_eq!(base, hilbert_function(&ideal, 0..6).unwrap());
    }
}

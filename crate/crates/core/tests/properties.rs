use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use mckay_core::arith::CyclotomicNumber as Cyc;
use mckay_core::fixtures::fixtures;
use mckay_core::groebner::{buchberger, jacobian_ideal, MonomialOrder};
use mckay_core::group::build_group;
use mckay_core::orbifold::{BivariatePoly, SkewAlgebra};
use mckay_core::poly::Polynomial;
use mckay_core::quiver::{graph_isomorphic, DynkinDiagram, Graph};
use mckay_core::roots::{characteristic_polynomial, coxeter_element};
use mckay_core::spectrum::{analyze, infer_weights, Grading};
use mckay_core::AdeType;

fn cyc_in(order: u32) -> impl Strategy<Value = Cyc> {
    let n = order as usize;
    prop::collection::vec((-6i64..=6, 1i64..=4), n).prop_map(move |cs| {
        let coeffs = cs
            .into_iter()
            .map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
            .collect();
        Cyc::from_coeffs(order, coeffs)
    })
}

fn cyc() -> impl Strategy<Value = Cyc> {
    (1u32..=30).prop_flat_map(cyc_in)
}

fn cyc_small() -> impl Strategy<Value = Cyc> {
    (1u32..=12).prop_flat_map(cyc_in)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_laws((a, b, c) in (1u32..=30).prop_flat_map(|n| (cyc_in(n), cyc_in(n), cyc_in(n)))) {
        prop_assert!((&a + &b).value_eq(&(&b + &a)));
        prop_assert!((&a * &b).value_eq(&(&b * &a)));
        prop_assert!((&(&a + &b) + &c).value_eq(&(&a + &(&b + &c))));
        prop_assert!((&(&a * &b) * &c).value_eq(&(&a * &(&b * &c))));
        prop_assert!((&a * &(&b + &c)).value_eq(&(&(&a * &b) + &(&a * &c))));
        prop_assert!((&a + &Cyc::zero(1)).value_eq(&a));
        prop_assert!((&a * &Cyc::one(1)).value_eq(&a));
        prop_assert!((&a - &a).is_zero());
        prop_assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn mixed_orders_promote_consistently(a in cyc_small(), b in cyc_small(), c in cyc_small()) {
        prop_assert!((&a * &b).value_eq(&(&b * &a)));
        prop_assert!((&(&a * &b) * &c).value_eq(&(&a * &(&b * &c))));
        prop_assert!((&a * &(&b + &c)).value_eq(&(&(&a * &b) + &(&a * &c))));
    }

    #[test]
    fn inverses(a in cyc()) {
        prop_assume!(!a.is_zero());
        let inv = a.inverse().unwrap();
        prop_assert!((&a * &inv).is_one());
    }

    #[test]
    fn galois_maps_are_ring_homomorphisms(
        (n, k, a, b) in (1u32..=30).prop_flat_map(|n| (Just(n), 1u32..=n, cyc_in(n), cyc_in(n)))
    ) {
        prop_assume!(num_integer::gcd(n, k) == 1);
        let s = |x: &Cyc| x.galois(k).unwrap();
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
    }
}

/// Brieskorn-Pham polynomials `x^p + y^q + z^r` and the Kleinian table.
fn jacobian_inputs() -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = AdeType::all_up_to(10)
        .into_iter()
        .map(|ade| fixtures().equation(ade).unwrap())
        .collect();
    for (p, q, r) in [(2, 3, 7), (3, 3, 3), (2, 4, 5), (3, 4, 5)] {
        out.push(Polynomial::parse(&format!("x^{p} + y^{q} + z^{r}")).unwrap());
    }
    out
}

#[test]
fn jacobian_s_pairs_reduce_to_zero() {
    for f in jacobian_inputs() {
        let w = infer_weights(&f).unwrap();
        for order in [w.monomial_order(), MonomialOrder::default()] {
            let gb = buchberger(&jacobian_ideal(&f), &order).unwrap();
            assert!(gb.s_pairs_reduce_to_zero(), "{f}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn brieskorn_pham_milnor_numbers(p in 2u32..=7, q in 2u32..=7, r in 2u32..=7) {
        let f = Polynomial::parse(&format!("x^{p} + y^{q} + z^{r}")).unwrap();
        let rep = analyze(&f, Grading::Shifted).unwrap();
        prop_assert_eq!(rep.basis.len() as u64, rep.mu_formula);
        prop_assert_eq!(rep.mu_formula, u64::from((p - 1) * (q - 1) * (r - 1)));
        // symmetry of the raw spectrum about 3/2
        let raw = analyze(&f, Grading::Raw).unwrap().spectrum;
        prop_assert!(raw.is_symmetric_about(&BigRational::from_integer(BigInt::from(3))));
    }

    #[test]
    fn isomorphism_survives_relabelling(ty in prop::sample::select(AdeType::all_up_to(9)), seed in any::<u64>()) {
        let g = DynkinDiagram::extended(ty).graph;
        let n = g.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let adjacency: Vec<Vec<u32>> = (0..n)
            .map(|i| (0..n).map(|j| g.adjacency()[perm[i]][perm[j]]).collect())
            .collect();
        let marks: Vec<u32> = (0..n).map(|i| g.marks().unwrap()[perm[i]]).collect();
        let h = Graph::new((0..n).map(|i| format!("u{i}")).collect(), adjacency).unwrap().with_marks(marks).unwrap();
        let map = graph_isomorphic(&h, &g).expect("relabelled graph is isomorphic");
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(h.adjacency()[i][j], g.adjacency()[map[i]][map[j]]);
            }
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

#[test]
fn coxeter_polynomial_independent_of_order_small_ranks() {
    for ty in AdeType::all_up_to(5) {
        let d = DynkinDiagram::reference(ty);
        let base = characteristic_polynomial(&coxeter_element(&d, None).unwrap().matrix);
        for p in permutations(ty.rank() as usize) {
            let t = coxeter_element(&d, Some(&p)).unwrap();
            assert_eq!(characteristic_polynomial(&t.matrix), base, "{ty} {p:?}");
            assert_eq!(t.order as u64, ty.coxeter_number());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn coxeter_polynomial_independent_of_order_large_ranks(
        ty in prop::sample::select(AdeType::all_up_to(10).into_iter().filter(|t| t.rank() > 5).collect::<Vec<_>>()),
        shuffled in Just((0..10usize).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let d = DynkinDiagram::reference(ty);
        let order: Vec<usize> = shuffled.into_iter().filter(|&i| i < ty.rank() as usize).collect();
        let base = characteristic_polynomial(&coxeter_element(&d, None).unwrap().matrix);
        let t = coxeter_element(&d, Some(&order)).unwrap();
        prop_assert_eq!(characteristic_polynomial(&t.matrix), base);
    }

    #[test]
    fn skew_product_associative(
        ty in prop::sample::select(vec!["A3", "D4", "D5", "E6", "E7"]),
        picks in prop::collection::vec((0usize..1000, 0usize..6), 6),
    ) {
        let g = build_group(ty.parse().unwrap()).unwrap();
        let alg = SkewAlgebra::new(&g);
        let n = g.cyclotomic_order();
        let polys = ["x", "y", "x*y + 1", "x^2 - 2*y", "y^3 + x", "1/2*x^2*y"];
        let elt = |(gi, pi): (usize, usize)| {
            let f = BivariatePoly::from_polynomial(&Polynomial::parse(polys[pi]).unwrap(), n).unwrap();
            alg.element(f, gi % g.order()).unwrap()
        };
        let sum = |i: usize| elt(picks[i]).add(&elt(picks[i + 1])).unwrap();
        let (a, b, c) = (sum(0), sum(2), sum(4));
        let left = alg.product(&alg.product(&a, &b).unwrap(), &c).unwrap();
        let right = alg.product(&a, &alg.product(&b, &c).unwrap()).unwrap();
        prop_assert!(left.value_eq(&right));
        prop_assert!(alg.product(&alg.unit(), &a).unwrap().value_eq(&a));
        prop_assert!(alg.product(&a, &alg.unit()).unwrap().value_eq(&a));
    }
}

use std::cmp::Ordering;

use bei_core::algebra::groebner::{buchberger_with_budget, divide, is_groebner};
use bei_core::algebra::monomial::base_variables;
use bei_core::algebra::{Field, Monomial, MonomialOrder, Polynomial, PrimeField, RankMode, VariableId};
use bei_core::graph::enumerate_closed_k4free;
use bei_core::ideal::{edge_binomial, edge_ideal, Variant};
use bei_core::rees::{phi_apply, rees_relations};
use proptest::prelude::*;

fn k() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

fn monomial(n: usize, max_deg: u32) -> impl Strategy<Value = Monomial> {
    let vars = base_variables(n);
    proptest::collection::vec(0..=max_deg, vars.len()).prop_map(move |exps| {
        // scale down to total degree <= max_deg
        let mut left = max_deg;
        Monomial::from_pairs(vars.iter().copied().zip(exps).map(|(v, e)| {
            let e = e.min(left);
            left -= e;
            (v, e)
        }))
    })
}

fn polynomial(n: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial<PrimeField>> {
    proptest::collection::vec((monomial(n, max_deg), -50i64..50), 0..=max_terms)
        .prop_map(|terms| Polynomial::from_int_terms(&k(), terms.into_iter().map(|(m, c)| (c, m))))
}

fn rees_monomial() -> impl Strategy<Value = Monomial> {
    let vars = vec![
        VariableId::edge(0, 1),
        VariableId::edge(0, 2),
        VariableId::edge(1, 2),
        VariableId::X(0),
        VariableId::X(1),
        VariableId::Y(0),
        VariableId::Y(2),
    ];
    proptest::collection::vec(0u32..3, vars.len())
        .prop_map(move |exps| Monomial::from_pairs(vars.iter().copied().zip(exps)))
}

fn orders() -> Vec<MonomialOrder> {
    let ranking = [VariableId::Y(1), VariableId::X(0), VariableId::Y(0), VariableId::X(1)];
    vec![
        MonomialOrder::LexR,
        MonomialOrder::RevLexS,
        MonomialOrder::ranked(&ranking, RankMode::Lex),
        MonomialOrder::ranked(&ranking, RankMode::DegRevLex),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in polynomial(4, 5, 5), b in polynomial(4, 5, 5), c in polynomial(4, 5, 5)) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        let one = Polynomial::constant(&k(), k().one());
        prop_assert_eq!(a.mul(&one), a.clone());
        prop_assert!(a.terms().iter().all(|(_, coef)| !k().is_zero(coef)));
    }

    #[test]
    fn order_axioms(u in monomial(2, 5), v in monomial(2, 5), w in monomial(2, 5)) {
        for order in orders() {
            let uv = order.cmp(&u, &v);
            prop_assert_eq!(uv, order.cmp(&v, &u).reverse());
            prop_assert_eq!(uv == Ordering::Equal, u == v);
            if uv == Ordering::Less && order.cmp(&v, &w) == Ordering::Less {
                prop_assert_eq!(order.cmp(&u, &w), Ordering::Less);
            }
            prop_assert_eq!(order.cmp(&u.mul(&w), &v.mul(&w)), uv);
            prop_assert_ne!(order.cmp(&Monomial::one(), &u), Ordering::Greater);
        }
    }

    #[test]
    fn revlex_axioms_on_rees_ring(u in rees_monomial(), v in rees_monomial(), w in rees_monomial()) {
        let order = MonomialOrder::RevLexS;
        let uv = order.cmp(&u, &v);
        prop_assert_eq!(uv, order.cmp(&v, &u).reverse());
        prop_assert_eq!(order.cmp(&u.mul(&w), &v.mul(&w)), uv);
        if uv != Ordering::Greater && order.cmp(&v, &w) != Ordering::Greater {
            prop_assert_ne!(order.cmp(&u, &w), Ordering::Greater);
        }
        prop_assert_ne!(order.cmp(&Monomial::one(), &u), Ordering::Greater);
    }

    #[test]
    fn division_contract(f in polynomial(3, 5, 6), b1 in polynomial(3, 3, 3), b2 in polynomial(3, 3, 3)) {
        let basis: Vec<_> = [b1, b2].into_iter().filter(|b| !b.is_zero()).collect();
        for order in [MonomialOrder::LexR, MonomialOrder::RevLexS] {
            let div = divide(&f, &basis, &order);
            let recombined = div
                .quotients
                .iter()
                .zip(&basis)
                .fold(div.remainder.clone(), |acc, (q, b)| acc.add(&q.mul(b)));
            prop_assert_eq!(recombined, f.clone());
            let leads: Vec<&Monomial> = basis.iter().map(|b| b.leading_monomial(&order).unwrap()).collect();
            for m in div.remainder.monomials() {
                prop_assert!(leads.iter().all(|l| !l.divides(m)));
            }
        }
    }
}

/// Homogeneous of a random degree in `1..=3`, the shape of every ideal here.
fn homogeneous(n: usize, max_terms: usize) -> impl Strategy<Value = Polynomial<PrimeField>> {
    let vars = base_variables(n);
    (1u32..=3).prop_flat_map(move |d| {
        let vars = vars.clone();
        let mono = proptest::collection::vec(0..vars.len(), d as usize)
            .prop_map(move |idx| idx.iter().fold(Monomial::one(), |m, &i| m.mul_var(vars[i])));
        proptest::collection::vec((mono, -50i64..50), 1..=max_terms)
            .prop_map(|terms| Polynomial::from_int_terms(&k(), terms.into_iter().map(|(m, c)| (c, m))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn buchberger_output_is_groebner(gens in proptest::collection::vec(homogeneous(2, 3), 1..4)) {
        let gens: Vec<_> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        for order in [MonomialOrder::LexR, MonomialOrder::RevLexS] {
            match buchberger_with_budget(&gens, &order, Some(2_000)) {
                Ok(gb) => {
                    prop_assert!(is_groebner(&gb, &order));
                    // every input reduces to zero modulo the output
                    for g in &gens {
                        prop_assert!(divide(g, &gb, &order).remainder.is_zero());
                    }
                }
                Err(_) => prop_assume!(false),
            }
        }
    }
}

#[test]
fn lex_leading_monomials_of_edge_binomials() {
    let f = k();
    for n in 2..=6 {
        for g in enumerate_closed_k4free(n).unwrap() {
            for e in g.edges() {
                let lead = Monomial::from_pairs([(VariableId::X(e.lo() as u16), 1), (VariableId::Y(e.hi() as u16), 1)]);
                assert_eq!(edge_binomial(&f, e).leading_monomial(&MonomialOrder::LexR), Some(&lead));
            }
            assert!(edge_ideal(&f, &g, Variant::Binomial).generators_are_groebner());
        }
    }
}

#[test]
fn relations_lie_in_the_kernel_on_corpus() {
    let f = k();
    for n in 2..=6 {
        for g in enumerate_closed_k4free(n).unwrap() {
            let koszul_pairs = {
                let cl = g.maximal_cliques().unwrap();
                let idx: Vec<usize> = g.edges().iter().map(|&e| cl.index_of(e).unwrap()).collect();
                (0..idx.len()).flat_map(|a| (a + 1..idx.len()).map(move |b| (a, b))).filter(|&(a, b)| idx[a] != idx[b]).count()
            };
            for v in Variant::BOTH {
                let rel = rees_relations(&f, &g, v).unwrap();
                for r in &rel {
                    assert!(phi_apply(&f, &r.body, &g, v).unwrap().is_zero(), "{} on {g:?}", r.body);
                }
                let counts = bei_core::rees::family_counts(&rel);
                assert_eq!(counts[1], 2 * g.triangles().len());
                assert_eq!(counts[2], 0);
                if v == Variant::Binomial {
                    assert_eq!(counts[0], koszul_pairs);
                }
            }
        }
    }
}

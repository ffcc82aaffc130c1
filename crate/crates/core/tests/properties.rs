//! Property tests for the algebra layers: canonical form, ring axioms,
//! Frobenius oracle equivalence, normal-form remainders, colon and power
//! identities, radical membership against brute force, and staircase
//! order-independence.

use fthresh_core::calculus::{bracket_power, ideal_power, minimal_generators};
use fthresh_core::groebner::GbLimits;
use fthresh_core::hilbert::standard_monomials;
use fthresh_core::ideal::{
    colon_ideal, ideal_contains, ideal_eq, ideal_membership, radical_membership, Ideal,
};
use fthresh_core::{FieldSpec, Monomial, MonomialOrder, Polynomial};
use proptest::prelude::*;

fn fp(p: u64) -> FieldSpec {
    FieldSpec::new(p).unwrap()
}

fn lim() -> GbLimits {
    GbLimits::default()
}

/// A random polynomial in `n` variables over F_p with small degrees.
fn arb_poly(p: u64, n: usize, max_terms: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    let term = (
        prop::collection::vec(0..=max_exp, n),
        1..(p as i64).max(2),
    );
    prop::collection::vec(term, 0..=max_terms).prop_map(move |terms| {
        Polynomial::from_terms(
            fp(p),
            n,
            terms
                .into_iter()
                .map(|(exps, c)| (Monomial::new(exps), c)),
        )
    })
}

fn canonical(f: &Polynomial) -> bool {
    let terms = f.terms();
    terms.iter().all(|&(_, c)| c != 0 && c < f.p())
        && terms.windows(2).all(|w| {
            w[1].0.cmp_order(&w[0].0, MonomialOrder::GrevLex) == std::cmp::Ordering::Less
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn add_mul_stay_canonical(
        f in arb_poly(5, 3, 5, 3),
        g in arb_poly(5, 3, 5, 3),
    ) {
        prop_assert!(canonical(&f.add(&g).unwrap()));
        prop_assert!(canonical(&f.mul(&g).unwrap()));
        prop_assert!(canonical(&f.sub(&g).unwrap()));
    }

    #[test]
    fn ring_axioms(
        f in arb_poly(3, 2, 4, 3),
        g in arb_poly(3, 2, 4, 3),
        h in arb_poly(3, 2, 4, 3),
    ) {
        // commutativity, associativity, distributivity
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        prop_assert_eq!(
            f.mul(&g).unwrap().mul(&h).unwrap(),
            f.mul(&g.mul(&h).unwrap()).unwrap()
        );
        prop_assert_eq!(
            f.add(&g).unwrap().mul(&h).unwrap(),
            f.mul(&h).unwrap().add(&g.mul(&h).unwrap()).unwrap()
        );
    }

    #[test]
    fn frobenius_matches_repeated_multiplication(
        f in arb_poly(5, 2, 5, 2),
        e in 0u32..=2,
    ) {
        let p = 5u32;
        let fast = f.frobenius_power(e).unwrap();
        let slow = f.pow(p.pow(e)).unwrap();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn frobenius_matches_p3(
        f in arb_poly(3, 3, 4, 2),
        e in 0u32..=2,
    ) {
        let fast = f.frobenius_power(e).unwrap();
        let slow = f.pow(3u32.pow(e)).unwrap();
        prop_assert_eq!(fast, slow);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn normal_form_is_a_remainder(
        f in arb_poly(5, 2, 5, 4),
        g1 in arb_poly(5, 2, 3, 2),
        g2 in arb_poly(5, 2, 3, 2),
    ) {
        let ideal = Ideal::new(fp(5), 2, vec![g1, g2]).unwrap();
        let gb = ideal.groebner(MonomialOrder::GrevLex, lim()).unwrap();
        let nf = gb.normal_form(&f).unwrap();
        // f - NF(f) lies in the ideal
        prop_assert!(gb.reduces_to_zero(&f.sub(&nf).unwrap()).unwrap());
        // no term of NF(f) is divisible by an initial monomial
        for (m, _) in nf.terms() {
            for lm in gb.initial_monomials() {
                prop_assert!(!lm.divides(m));
            }
        }
    }

    #[test]
    fn colon_ideal_invariants(
        g1 in arb_poly(3, 2, 2, 3),
        g2 in arb_poly(3, 2, 2, 3),
        h in arb_poly(3, 2, 2, 2),
    ) {
        prop_assume!(!h.is_zero());
        let i = Ideal::new(fp(3), 2, vec![g1, g2]).unwrap();
        let j = Ideal::new(fp(3), 2, vec![h.clone()]).unwrap();
        let c = colon_ideal(&i, &j, lim()).unwrap();
        // I lies inside (I : J)
        prop_assert!(ideal_contains(&c, &i, lim()).unwrap());
        // (I : J) J lies inside I
        for f in c.gens() {
            prop_assert!(ideal_membership(&f.mul(&h).unwrap(), &i, lim()).unwrap());
        }
    }

    #[test]
    fn power_additivity(
        g1 in arb_poly(2, 2, 2, 2),
        g2 in arb_poly(2, 2, 2, 2),
        s in 0u64..=2,
        t in 0u64..=2,
    ) {
        let a = Ideal::new(fp(2), 2, vec![g1, g2]).unwrap();
        prop_assume!(!a.is_zero());
        let left_s = ideal_power(&a, s, 10).unwrap();
        let left_t = ideal_power(&a, t, 10).unwrap();
        // product of the two power ideals
        let mut prod_gens = Vec::new();
        for f in left_s.gens() {
            for g in left_t.gens() {
                prod_gens.push(f.mul(g).unwrap());
            }
        }
        let prod = Ideal::new(fp(2), 2, prod_gens).unwrap();
        let direct = ideal_power(&a, s + t, 10).unwrap();
        prop_assert!(ideal_eq(&prod, &direct, lim()).unwrap());
    }
}

#[test]
fn bracket_power_composes() {
    for p in [2u64, 3] {
        let field = fp(p);
        let x = Polynomial::variable(field, 2, 0);
        let y = Polynomial::variable(field, 2, 1);
        let j = Ideal::new(
            field,
            2,
            vec![x.add(&y).unwrap(), x.mul(&y).unwrap()],
        )
        .unwrap();
        for e1 in 0..=2u32 {
            for e2 in 0..=2u32 {
                let nested = bracket_power(&bracket_power(&j, e1).unwrap(), e2).unwrap();
                let flat = bracket_power(&j, e1 + e2).unwrap();
                assert!(ideal_eq(&nested, &flat, lim()).unwrap(), "p={p} e1={e1} e2={e2}");
            }
        }
    }
}

#[test]
fn power_ladder_identity() {
    // a^r = a^{r - s p^e} (a^{[p^e]})^s for a = m, p = 2, e = 1, s = 1,
    // r = mu(a) p^e, as two-sided containment
    for n in 1..=3usize {
        let field = fp(2);
        let gens: Vec<Polynomial> = (0..n).map(|i| Polynomial::variable(field, n, i)).collect();
        let m = Ideal::new(field, n, gens).unwrap();
        let (mu, _) = minimal_generators(&m, lim()).unwrap();
        let r = (mu as u64) * 2;
        let lhs = ideal_power(&m, r, 50).unwrap();
        let low = ideal_power(&m, r - 2, 50).unwrap();
        let bracket = bracket_power(&m, 1).unwrap();
        let mut prod_gens = Vec::new();
        for f in low.gens() {
            for g in bracket.gens() {
                prod_gens.push(f.mul(g).unwrap());
            }
        }
        let rhs = Ideal::new(field, n, prod_gens).unwrap();
        assert!(ideal_eq(&lhs, &rhs, lim()).unwrap(), "n={n}");
    }
}

#[test]
fn radical_membership_matches_brute_force() {
    // zero-dimensional monomial-plus-one-binomial ideals in <= 3 variables
    let field = fp(3);
    let n = 3;
    let x = Polynomial::variable(field, n, 0);
    let y = Polynomial::variable(field, n, 1);
    let z = Polynomial::variable(field, n, 2);
    let binomials = [
        x.mul(&y).unwrap().sub(&z.pow(2).unwrap()).unwrap(),
        x.pow(2).unwrap().sub(&y.mul(&z).unwrap()).unwrap(),
    ];
    let one = Polynomial::one(field, n);
    let candidates = [
        x.clone(),
        y.clone(),
        z.clone(),
        x.add(&y).unwrap(),
        x.mul(&z).unwrap(),
        y.pow(2).unwrap(),
        x.add(&y).unwrap().add(&z).unwrap(),
        // not in the radical: units modulo the irrelevant ideal
        x.add(&one).unwrap(),
        one.scale(2),
    ];
    for binom in &binomials {
        let ideal = Ideal::new(
            field,
            n,
            vec![
                x.pow(3).unwrap(),
                y.pow(2).unwrap(),
                z.pow(3).unwrap(),
                binom.clone(),
            ],
        )
        .unwrap();
        for f in &candidates {
            let fast = radical_membership(f, &ideal, lim()).unwrap();
            let mut brute = false;
            let mut acc = Polynomial::one(field, n);
            for _ in 1..=20 {
                acc = acc.mul(f).unwrap();
                if ideal_membership(&acc, &ideal, lim()).unwrap() {
                    brute = true;
                    break;
                }
            }
            assert_eq!(fast, brute);
        }
    }
}

#[test]
fn standard_monomial_count_is_order_independent() {
    // the counts agree between grevlex and lex staircases
    let field = fp(3);
    let n = 3;
    let x = Polynomial::variable(field, n, 0);
    let y = Polynomial::variable(field, n, 1);
    let z = Polynomial::variable(field, n, 2);
    let systems = vec![
        vec![
            x.pow(2).unwrap(),
            y.pow(2).unwrap(),
            z.pow(2).unwrap(),
            x.mul(&y).unwrap().sub(&z.pow(2).unwrap()).unwrap(),
        ],
        vec![
            x.pow(3).unwrap(),
            y.pow(3).unwrap(),
            z.pow(2).unwrap(),
            x.mul(&y).unwrap().add(&y.mul(&z).unwrap()).unwrap(),
        ],
    ];
    for gens in systems {
        let ideal = Ideal::new(field, n, gens).unwrap();
        let grev = ideal.groebner(MonomialOrder::GrevLex, lim()).unwrap();
        let lex = ideal.groebner(MonomialOrder::Lex, lim()).unwrap();
        let count_grev = standard_monomials(&grev.initial_monomials(), n).unwrap().len();
        let count_lex = standard_monomials(&lex.initial_monomials(), n).unwrap().len();
        assert_eq!(count_grev, count_lex);
    }
}

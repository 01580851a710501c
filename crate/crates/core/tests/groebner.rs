use artinforge::groebner::*;
use artinforge::polyarith::{Ideal, Monomial, Polynomial, Ring, TermOrder};
use num_rational::BigRational;
use proptest::prelude::*;

type Q = BigRational;
const ORD: TermOrder = TermOrder::GRevLex;

fn ideal(ring: &Ring, gens: &[&str]) -> Ideal<Q> {
    Ideal::parse(ring.clone(), gens).unwrap()
}

fn i3() -> Ideal<Q> {
    ideal(&Ring::xs(3), &["x2*x3 - x1", "x1*x3 - x2", "x1*x2 - x3"])
}

fn monos(ring: &Ring, ms: &[&str]) -> MonomialIdeal {
    MonomialIdeal::new(ring.nvars(), ms.iter().map(|s| ring.parse_monomial(s).unwrap())).unwrap()
}

#[test]
fn basis_of_i3_has_the_expected_initial_ideal() {
    let gb = buchberger(&i3(), ORD).unwrap();
    assert!(gb.is_reduced());
    assert!(gb.s_pairs_reduce_to_zero().unwrap());
    let r = Ring::xs(3);
    let expected = monos(&r, &["x1^2", "x2^2", "x1*x2", "x1*x3", "x2*x3", "x3^3"]);
    assert!(initial_ideal(&gb).unwrap().same_generators(&expected));
    assert!(ideal_member(&r.parse("x3^3 - x3", ORD).unwrap(), &gb));
    assert!(!ideal_member(&r.parse("x1", ORD).unwrap(), &gb));
    assert!(ideal_member(&Polynomial::zero(3, ORD), &gb));
}

#[test]
fn small_bases() {
    let r2 = Ring::xs(2);
    for ord in [TermOrder::GRevLex, TermOrder::Lex, TermOrder::DegLex] {
        let gb = buchberger(&ideal(&r2, &["x1", "x2"]), ord).unwrap();
        assert_eq!(gb.display(), vec!["x2", "x1"]);
    }
    let gb = buchberger(&ideal(&r2, &["x1 - x2"]), TermOrder::Lex).unwrap();
    assert_eq!(gb.display(), vec!["x1 - x2"]);
    let gb = buchberger(&ideal(&r2, &["x1", "x1^2 + x2 - 1"]), ORD).unwrap();
    assert_eq!(gb.display(), vec!["x2 - 1", "x1"]);
    let unit = buchberger(&ideal(&r2, &["x1", "x1 + 1"]), ORD).unwrap();
    assert!(unit.is_unit());
    assert_eq!(unit.display(), vec!["1"]);
    assert!(buchberger(&Ideal::<Q>::zero(r2), ORD).unwrap().is_empty());
}

#[test]
fn non_reduced_input_is_a_contract_error() {
    let r = Ring::xs(2);
    let g = GroebnerBasis::from_elements_unchecked(r.clone(), ORD, vec![r.parse::<Q>("x1", ORD).unwrap()]);
    assert!(matches!(initial_ideal(&g), Err(artinforge::Error::Contract(_))));
}

#[test]
fn top_forms_of_i3() {
    let e = Engine::default();
    let k3 = top_form_ideal(&e, &i3()).unwrap();
    assert!(k3.is_homogeneous());
    let expected = ideal(&Ring::xs(3), &["x1^2 - x3^2", "x2^2 - x3^2", "x2*x3", "x1*x3", "x1*x2"]);
    assert!(ideal_equal(&e, &k3, &expected, ORD).unwrap());
    let homog = ideal(&Ring::xs(3), &["x1^2 - x2*x3", "x1*x2*x3"]);
    assert!(ideal_equal(&e, &top_form_ideal(&e, &homog).unwrap(), &homog, ORD).unwrap());
}

#[test]
fn equality_checks() {
    let e = Engine::default();
    let r = Ring::xs(4);
    let prop_form = ideal(&r, &["x1^2 - x4^2", "x2^2 - x4^2", "x3^2 - x4^2", "x2*x3*x4", "x1*x3*x4", "x1*x2*x4", "x1*x2*x3"]);
    let appendix_form = ideal(&r, &["x1^2 - x3^2", "x2^2 - x3^2", "x4^2 - x3^2", "x2*x3*x4", "x1*x3*x4", "x1*x2*x4", "x1*x2*x3"]);
    assert!(ideal_equal(&e, &prop_form, &appendix_form, ORD).unwrap());
    let j3 = ideal(&Ring::xs(3), &["x1^2", "x2^2", "x1*x2", "x1*x3", "x2*x3", "x3^3"]);
    assert!(!ideal_equal(&e, &i3(), &j3, ORD).unwrap());
    assert!(ideal_equal(&e, &i3(), &i3(), ORD).unwrap());
    assert!(ideal_equal(&e, &i3(), &i3(), TermOrder::Lex).unwrap());
}

#[test]
fn elimination() {
    let e = Engine::default();
    let r = Ring::new(["t", "x1", "x2"]);
    let got = eliminate(&e, &ideal(&r, &["t*x1", "x2 - t*x2"]), &[0]).unwrap();
    assert_eq!(got.ring(), &Ring::xs(2));
    assert!(ideal_equal(&e, &got, &ideal(&Ring::xs(2), &["x1*x2"]), ORD).unwrap());
    let same = eliminate(&e, &i3(), &[]).unwrap();
    assert!(ideal_equal(&e, &same, &i3(), ORD).unwrap());
    let graph = eliminate(&e, &ideal(&r, &["t - x1"]), &[0]).unwrap();
    assert!(graph.is_zero());
    // twisted cubic: eliminating the parameter leaves the three quadrics
    let r = Ring::new(["s", "x1", "x2", "x3"]);
    let cubic = eliminate(&e, &ideal(&r, &["x1 - s", "x2 - s^2", "x3 - s^3"]), &[0]).unwrap();
    let expected = ideal(&Ring::xs(3), &["x2 - x1^2", "x3 - x1^3"]);
    assert!(ideal_equal(&e, &cubic, &expected, ORD).unwrap());
}

#[test]
fn colon_ideals() {
    let e = Engine::default();
    let r = Ring::xs(3);
    let l3 = ideal(&r, &["x1^2 - x3^2", "x2^2 - x3^2", "x1*x2*x3"]);
    let k3 = ideal(&r, &["x1^2 - x3^2", "x2^2 - x3^2", "x2*x3", "x1*x3", "x1*x2"]);
    let colon = colon_ideal(&e, &l3, &k3).unwrap();
    let expected = l3.with_generator(r.parse("x3^2", ORD).unwrap()).unwrap();
    assert!(ideal_equal(&e, &colon, &expected, ORD).unwrap());
    // both inclusions by membership
    let cgb = buchberger(&colon, ORD).unwrap();
    assert!(expected.generators().iter().all(|g| cgb.contains(g)));
    let egb = buchberger(&expected, ORD).unwrap();
    assert!(colon.generators().iter().all(|g| egb.contains(g)));

    let unit = ideal(&r, &["1"]);
    assert!(ideal_equal(&e, &colon_ideal(&e, &i3(), &unit).unwrap(), &i3(), ORD).unwrap());
    let r2 = Ring::xs(2);
    let c = colon_ideal(&e, &ideal(&r2, &["x1*x2"]), &ideal(&r2, &["x1"])).unwrap();
    assert!(ideal_equal(&e, &c, &ideal(&r2, &["x2"]), ORD).unwrap());
    assert!(colon_ideal(&e, &i3(), &Ideal::zero(r.clone())).is_err());
}

#[test]
fn regular_elements() {
    let e = Engine::default();
    let r = Ring::xs(1);
    let x1 = r.parse::<Q>("x1", ORD).unwrap();
    assert!(!is_regular_element(&e, &ideal(&r, &["x1^2"]), &x1).unwrap());
    assert!(is_regular_element(&e, &Ideal::zero(r.clone()), &x1).unwrap());
    let r2 = Ring::xs(2);
    assert!(is_regular_element(&e, &ideal(&r2, &["x1^2"]), &r2.parse("x2", ORD).unwrap()).unwrap());
}

#[test]
fn krull_dimension_of_ideals() {
    let e = Engine::default();
    assert_eq!(krull_dim(&e, &i3()).unwrap(), 0);
    assert_eq!(krull_dim(&e, &ideal(&Ring::xs(3), &["x1*x2 - x3"])).unwrap(), 2);
    assert_eq!(krull_dim(&e, &ideal(&Ring::xs(2), &["x1"])).unwrap(), 1);
}

#[test]
fn pair_cap_is_enforced() {
    let e = Engine::new(2);
    let r = Ring::xs(4);
    let i4 = ideal(&r, &["x2*x3*x4 - x1", "x1*x3*x4 - x2", "x1*x2*x4 - x3", "x1*x2*x3 - x4"]);
    assert!(matches!(e.buchberger(&i4, ORD), Err(artinforge::Error::ResourceLimit { cap: 2, .. })));
}

#[test]
fn rational64_coefficients_give_the_same_basis() {
    use num_rational::Ratio;
    let r = Ring::xs(3);
    let small: Ideal<Ratio<i64>> = Ideal::parse(r.clone(), &["x2*x3 - x1", "x1*x3 - x2", "x1*x2 - x3"]).unwrap();
    let a = buchberger(&small, ORD).unwrap().display();
    let b = buchberger(&i3(), ORD).unwrap().display();
    assert_eq!(a, b);
}

// Brute-force colon of monomial ideals: m lies in (I : J) iff m*g lies in I for every generator g of J.
fn brute_colon_contains(i: &[Monomial], j: &[Monomial], m: &Monomial) -> bool {
    j.iter().all(|g| {
        let mg = m.mul(g);
        i.iter().any(|d| d.divides(&mg))
    })
}

fn monomial_ideal_strategy() -> impl Strategy<Value = Vec<Monomial>> {
    proptest::collection::vec(proptest::collection::vec(0u16..3, 3), 1..4)
        .prop_map(|v| v.into_iter().map(|e| Monomial::new(&e)).filter(|m| !m.is_one()).collect())
}

fn as_ideal(ms: &[Monomial]) -> Ideal<Q> {
    Ideal::new(
        Ring::xs(3),
        ms.iter().map(|m| Polynomial::monomial(m.clone(), Q::from_integer(1.into()), ORD)).collect(),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn colon_matches_degreewise_brute_force(i in monomial_ideal_strategy(), j in monomial_ideal_strategy()) {
        prop_assume!(!i.is_empty() && !j.is_empty());
        let e = Engine::default();
        let colon = colon_ideal(&e, &as_ideal(&i), &as_ideal(&j)).unwrap();
        let gb = buchberger(&colon, ORD).unwrap();
        for d in 0..=6 {
            for m in Monomial::all_of_degree(3, d) {
                let p = Polynomial::monomial(m.clone(), Q::from_integer(1.into()), ORD);
                prop_assert_eq!(gb.contains(&p), brute_colon_contains(&i, &j, &m), "degree {} monomial {}", d, m);
            }
        }
    }

    #[test]
    fn bases_are_canonical(seed in proptest::collection::vec((0usize..3, -2i64..3), 3), perm in Just(vec![0usize, 1, 2]).prop_shuffle()) {
        let r = Ring::xs(3);
        let pool = ["x1*x2 - x3", "x1^2 - x2*x3 + 1", "x3^2 - x1"];
        let gens: Vec<Polynomial<Q>> = seed
            .iter()
            .map(|&(k, c)| {
                let g: Polynomial<Q> = r.parse(pool[k], ORD).unwrap();
                let shift: Polynomial<Q> = r.parse(&format!("{}*x{} + 1", c.abs() + 1, k + 1), ORD).unwrap();
                if c == 0 { g } else { &g * &shift }
            })
            .collect();
        let rev: Vec<Polynomial<Q>> = perm.iter().map(|&i| gens[i].clone()).collect();
        let a = buchberger(&Ideal::new(r.clone(), gens).unwrap(), ORD).unwrap();
        let b = buchberger(&Ideal::new(r.clone(), rev).unwrap(), ORD).unwrap();
        prop_assert_eq!(a.elements(), b.elements());
        prop_assert!(a.s_pairs_reduce_to_zero().unwrap());
    }
}

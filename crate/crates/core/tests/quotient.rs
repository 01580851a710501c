use artinforge::groebner::{initial_ideal, top_form_ideal, Engine};
use artinforge::linalg::Matrix;
use artinforge::polyarith::{Ideal, Monomial, Polynomial, Ring, TermOrder};
use artinforge::quotient::{annihilator, annihilator_up_to, contract, hilbert_series, standard_monomials, DualPolynomial, QuotientAlgebra};
use artinforge::reptheory::Permutation;
use artinforge::{Error, Field};
use num_rational::BigRational;
use proptest::prelude::*;

type Q = BigRational;
const GREVLEX: TermOrder = TermOrder::GRevLex;

fn q(v: i64) -> Q {
    Q::from_i64(v)
}

/// The binomial ideal generated by `prod_{j != i} x_j - x_i`.
fn binomial_ideal(n: usize) -> Ideal<Q> {
    let ring = Ring::xs(n);
    if n == 2 {
        return Ideal::parse(ring, &["x1", "x2"]).unwrap();
    }
    let gens = (0..n)
        .map(|i| {
            let m = Monomial::squarefree(n, (0..n).filter(|&j| j != i));
            &Polynomial::monomial(m, q(1), GREVLEX) - &Polynomial::var(n, i, GREVLEX)
        })
        .collect();
    Ideal::new(ring, gens).unwrap()
}

fn initial(n: usize) -> Ideal<Q> {
    let gb = Engine::default().buchberger(&binomial_ideal(n), GREVLEX).unwrap();
    let lms = initial_ideal(&gb).unwrap();
    let gens = lms.generators().iter().map(|m| Polynomial::monomial(m.clone(), q(1), GREVLEX)).collect();
    Ideal::new(Ring::xs(n), gens).unwrap()
}

fn top_forms(n: usize) -> Ideal<Q> {
    top_form_ideal(&Engine::default(), &binomial_ideal(n)).unwrap()
}

fn algebra(ideal: &Ideal<Q>) -> QuotientAlgebra<Q> {
    QuotientAlgebra::from_ideal(&Engine::default(), ideal, GREVLEX).unwrap()
}

fn parse_ideal(n: usize, gens: &[&str]) -> Ideal<Q> {
    Ideal::parse(Ring::xs(n), gens).unwrap()
}

fn poly(n: usize, s: &str) -> Polynomial<Q> {
    Ring::xs(n).parse(s, GREVLEX).unwrap()
}

fn ints(v: &[Q]) -> Vec<i64> {
    v.iter().map(|x| x.to_integer().try_into().unwrap()).collect()
}

fn bernoulli_row(n: usize) -> Vec<u64> {
    // a_{n,k} = sum_{l <= min(k, 2n-4-k)} C(n-1, l), computed directly
    let binom = |a: u64, b: u64| (0..b).fold(1u64, |acc, i| acc * (a - i) / (i + 1));
    (0..=2 * n - 4)
        .map(|k| (0..=k.min(2 * n - 4 - k)).map(|l| binom(n as u64 - 1, l as u64)).sum())
        .collect()
}

#[test]
fn standard_basis_of_small_monomial_quotient() {
    let j3 = initial(3);
    let gb = Engine::default().buchberger(&j3, GREVLEX).unwrap();
    let b = standard_monomials(&gb).unwrap();
    assert_eq!(format!("{b:?}"), "{1; x1, x2, x3; x3^2}");
    assert_eq!(hilbert_series(&b).coefficients(), &[1, 3, 1]);
    assert_eq!(format!("{:?}", hilbert_series(&b)), "1 + 3t + 1t^2");

    let two = Engine::default().buchberger(&binomial_ideal(2), GREVLEX).unwrap();
    assert_eq!(format!("{:?}", standard_monomials(&two).unwrap()), "{1}");
}

#[test]
fn non_artinian_and_unreduced_inputs_fail() {
    let gb = Engine::default().buchberger(&parse_ideal(2, &["x1"]), GREVLEX).unwrap();
    assert!(matches!(standard_monomials(&gb), Err(Error::NotArtinian { .. })));
    let raw = artinforge::groebner::GroebnerBasis::from_elements_unchecked(Ring::xs(1), GREVLEX, vec![poly(1, "x1^2")]);
    assert!(matches!(standard_monomials(&raw), Err(Error::Contract(_))));
    let unit = Engine::default().buchberger(&parse_ideal(2, &["1"]), GREVLEX).unwrap();
    assert!(standard_monomials(&unit).unwrap().is_empty());
}

#[test]
fn hilbert_rows_and_dimensions() {
    let j6 = algebra(&initial(6));
    assert_eq!(j6.hilbert_series().coefficients(), &[1, 6, 16, 26, 31, 26, 16, 6, 1]);
    for n in 3..=6 {
        let j = algebra(&initial(n)).hilbert_series();
        let k = algebra(&top_forms(n)).hilbert_series();
        assert_eq!(j, k, "n = {n}");
        assert_eq!(j.coefficients(), bernoulli_row(n).as_slice());
        assert!(k.is_palindromic());
        let dim = 1 + (n as u64 - 2) * (1 << (n - 1));
        assert_eq!(j.dimension(), dim);
        assert_eq!(algebra(&binomial_ideal(n)).dimension() as u64, dim);
    }
    assert!(algebra(&top_forms(2)).hilbert_series().is_palindromic());
}

#[test]
fn coordinates() {
    let k3 = algebra(&top_forms(3));
    assert_eq!(k3.coords(&poly(3, "x1^2")).unwrap(), k3.coords(&poly(3, "x3^2")).unwrap());
    let zero = k3.coords(&Polynomial::zero(3, GREVLEX)).unwrap();
    assert!(zero.iter().all(|c| *c == q(0)));
    let j3 = algebra(&initial(3));
    assert!(j3.coords(&poly(3, "x3^3")).unwrap().iter().all(|c| *c == q(0)));
    assert!(j3.coords(&poly(2, "x1")).is_err());
}

#[test]
fn multiplication_matrices() {
    let j3 = algebra(&initial(3));
    // basis order: 1, x1, x2, x3, x3^2
    let m3 = j3.mult_matrix(2).unwrap();
    let mut expected = Matrix::<Q>::zeros(5, 5);
    expected[(3, 0)] = q(1);
    expected[(4, 3)] = q(1);
    assert_eq!(m3, &expected);
    assert!(j3.mult_matrix(3).is_err());

    for ideal in [top_forms(4), binomial_ideal(4), initial(4)] {
        let a = algebra(&ideal);
        for i in 0..4 {
            for j in 0..i {
                let (mi, mj) = (a.mult_matrix(i).unwrap(), a.mult_matrix(j).unwrap());
                assert_eq!(mi.mul(mj), mj.mul(mi));
            }
        }
    }

    let two = algebra(&binomial_ideal(2));
    for i in 0..2 {
        assert_eq!(two.mult_matrix(i).unwrap(), &Matrix::zeros(1, 1));
    }
}

#[test]
fn socles() {
    for n in 2..=6 {
        let k = algebra(&top_forms(n));
        assert_eq!(k.socle_dimension(), 1, "n = {n}");
        assert!(k.is_gorenstein());
    }
    let j3 = algebra(&initial(3));
    assert_eq!(j3.socle_dimension(), 3);
    let ring = Ring::xs(3);
    let socle: Vec<String> = j3.socle_basis().iter().map(|p| ring.format(p)).collect();
    assert_eq!(socle, vec!["x1", "x2", "x3^2"]);
    for n in 4..=6 {
        assert!(algebra(&initial(n)).socle_dimension() > 1);
    }
}

#[test]
fn socle_dimension_ignores_variable_labels() {
    let k4 = top_forms(4);
    let base = algebra(&k4).socle_dimension();
    let j4 = initial(4);
    let base_j = algebra(&j4).socle_dimension();
    for p in Permutation::all(4).iter().step_by(5) {
        assert_eq!(algebra(&k4.permute_vars(p.images())).socle_dimension(), base);
        assert_eq!(algebra(&j4.permute_vars(p.images())).socle_dimension(), base_j);
    }
}

#[test]
fn equivariant_traces() {
    let k3 = algebra(&top_forms(3));
    let id = Permutation::identity(3);
    assert_eq!(ints(&k3.equivariant_graded_trace(&id).unwrap()), vec![1, 3, 1]);
    let c3 = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
    assert_eq!(ints(&k3.equivariant_graded_trace(&c3).unwrap()), vec![1, 0, 1]);

    let j3 = algebra(&initial(3));
    let t12 = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
    assert_eq!(ints(&j3.equivariant_graded_trace(&t12).unwrap()), vec![1, 1, 1]);
    let t13 = Permutation::from_cycles(3, &[&[1, 3]]).unwrap();
    assert!(matches!(j3.equivariant_graded_trace(&t13), Err(Error::NotInvariant(_))));
    assert!(j3.equivariant_graded_trace(&Permutation::identity(2)).is_err());

    for n in 2..=5 {
        let k = algebra(&top_forms(n));
        let at_id: Vec<u64> = ints(&k.equivariant_graded_trace(&Permutation::identity(n)).unwrap())
            .into_iter()
            .map(|v| v as u64)
            .collect();
        assert_eq!(at_id, k.hilbert_series().coefficients());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn traces_are_class_functions(a in 0usize..120, b in 0usize..120) {
        let perms = Permutation::all(5);
        let (s, g) = (&perms[a], &perms[b]);
        let conj = g.compose(s).compose(&g.inverse());
        let k5 = algebra(&top_forms(5));
        prop_assert_eq!(k5.equivariant_graded_trace(s).unwrap(), k5.equivariant_graded_trace(&conj).unwrap());
    }
}

fn dual(n: usize, s: &str) -> DualPolynomial<Q> {
    DualPolynomial::parse(n, s).unwrap()
}

/// Sum of the squares of all degree-(n-2) monomials in y_1..y_n.
fn sum_of_squares(n: usize) -> DualPolynomial<Q> {
    let terms = Monomial::all_of_degree(n, n as u32 - 2).into_iter().map(|m| (m.mul(&m), q(1)));
    DualPolynomial::new(Polynomial::from_terms(n, GREVLEX, terms))
}

#[test]
fn contraction() {
    let g = dual(2, "y1^2 + y2^2");
    assert_eq!(contract(&poly(2, "x1"), &g).unwrap(), dual(2, "y1"));
    let g3 = dual(3, "y1^2 + y2^2 + y3^2");
    assert!(contract(&poly(3, "x1*x2"), &g3).unwrap().is_zero());
    assert_eq!(contract(&poly(3, "1"), &g3).unwrap(), g3);
    assert_eq!(contract(&poly(3, "2*x1 - x3"), &g3).unwrap(), dual(3, "2*y1 - y3"));
    assert!(contract(&poly(2, "x1"), &g3).is_err());
}

#[test]
fn annihilators() {
    let e = Engine::default();
    let ann = annihilator(&e, &dual(1, "y1^2")).unwrap();
    assert!(artinforge::groebner::ideal_equal(&e, &ann, &parse_ideal(1, &["x1^3"]), GREVLEX).unwrap());

    assert_eq!(sum_of_squares(3), dual(3, "y1^2 + y2^2 + y3^2"));
    assert_eq!(sum_of_squares(4).polynomial().len(), 10);
    for n in 3..=5 {
        let ann = annihilator(&e, &sum_of_squares(n)).unwrap();
        assert!(artinforge::groebner::ideal_equal(&e, &ann, &top_forms(n), GREVLEX).unwrap(), "n = {n}");
        let a = algebra(&ann);
        assert_eq!(a.socle_dimension(), 1);
        // raising the cutoff changes nothing
        let wider = annihilator_up_to(&e, &sum_of_squares(n), 2 * n as u32 - 2).unwrap();
        assert!(artinforge::groebner::ideal_equal(&e, &ann, &wider, GREVLEX).unwrap());
    }

    assert!(matches!(annihilator(&e, &dual(2, "y1^2 + y2")), Err(Error::NotHomogeneous)));
    let zero = DualPolynomial::new(Polynomial::<Q>::zero(2, GREVLEX));
    assert!(matches!(annihilator(&e, &zero), Err(Error::ZeroPolynomial)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]
    #[test]
    fn annihilators_are_gorenstein(coeffs in proptest::collection::vec(-2i64..3, 6)) {
        // random cubic-free quadric/cubic forms in 3 dual variables
        let e = Engine::default();
        let monos = Monomial::all_of_degree(3, 3);
        let terms = monos.iter().cloned().zip(coeffs.iter().map(|&c| q(c)));
        let g = DualPolynomial::new(Polynomial::from_terms(3, GREVLEX, terms));
        prop_assume!(!g.is_zero());
        let ann = annihilator(&e, &g).unwrap();
        let gb = e.buchberger(&ann, GREVLEX).unwrap();
        for m in Monomial::all_of_degree(3, 4) {
            prop_assert!(gb.contains(&Polynomial::monomial(m, q(1), GREVLEX)));
        }
        for p in ann.generators() {
            prop_assert!(contract(p, &g).unwrap().is_zero());
        }
        prop_assert_eq!(algebra(&ann).socle_dimension(), 1);
    }
}

use std::collections::{HashMap, HashSet};
use std::time::Instant;

use num_rational::BigRational;
use num_traits::One;

use super::bernoulli::{bernoulli_row, identity_check, row_sum_check, BernoulliTriangle};
use super::ideals::{
    binomial_ideal, dual_socle_generator, expected_initial_generators, expected_standard_monomials,
    homogeneous_expected, unprojection_base, unprojection_ideal,
};
use super::points::{enumerate_points, verify_points_satisfy_ideal};
use super::report::VerificationReport;
use super::codimension;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{
    colon_ideal, ideal_equal, initial_ideal, is_regular_element, krull_dim_monomial, top_form_ideal, Engine,
    GroebnerBasis, MonomialIdeal,
};
use crate::linalg::Matrix;
use crate::polyarith::{Ideal, Monomial, Polynomial, Ring, TermOrder};
use crate::quotient::{annihilator, hilbert_series, standard_monomials, QuotientAlgebra};
use crate::reptheory::{
    conjugacy_classes, half_powerset_character, powerset_character, subset_character, xn_character, ClassFunction,
    GradedClassFunction, Partition,
};

type Q = BigRational;
const ORD: TermOrder = TermOrder::GRevLex;

/// What a check found: success, or failure with a counterexample.
struct Outcome {
    ok: bool,
    witness: Option<String>,
}

impl Outcome {
    fn pass(witness: impl Into<String>) -> Self {
        Outcome { ok: true, witness: Some(witness.into()) }
    }

    fn fail(witness: impl Into<String>) -> Self {
        Outcome { ok: false, witness: Some(witness.into()) }
    }

    fn check(ok: bool, pass: impl Into<String>, fail: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(pass)
        } else {
            Self::fail(fail())
        }
    }
}

type Check = fn(&Lab, usize) -> Result<Outcome>;

/// A registered statement, checkable at each n >= `min_n`.
pub struct Claim {
    pub id: &'static str,
    pub min_n: usize,
    pub summary: &'static str,
    check: Check,
}

impl std::fmt::Debug for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (n >= {}): {}", self.id, self.min_n, self.summary)
    }
}

static CLAIMS: &[Claim] = &[
    Claim {
        id: "prop2_codim",
        min_n: 2,
        summary: "R/I_n has dimension 1 + (n-2) 2^(n-1), equal to the number of distinct points of its zero set",
        check: Lab::prop2_codim,
    },
    Claim {
        id: "thm1",
        min_n: 2,
        summary: "the S_n-character of R/I_n is [1] + (n-2)/2 [P(n)]",
        check: Lab::thm1,
    },
    Claim {
        id: "prop3_generators",
        min_n: 2,
        summary: "in_grevlex(I_n) is minimally generated by the squares, x_1..x_{n-1} and the monomials m(T)",
        check: Lab::prop3_generators,
    },
    Claim {
        id: "prop3_basis",
        min_n: 2,
        summary: "the monomials m(T,s) are exactly the standard monomials of in_grevlex(I_n)",
        check: Lab::prop3_basis,
    },
    Claim {
        id: "thm2",
        min_n: 2,
        summary: "the Hilbert series of R/J_n is row n of the symmetrised Bernoulli triangle",
        check: Lab::thm2,
    },
    Claim {
        id: "thm3",
        min_n: 2,
        summary: "the S_{n-1}-graded character of R/J_n is sum_k t^k sum_{l <= min(k, 2n-4-k)} [P_l(n-1)]",
        check: Lab::thm3,
    },
    Claim {
        id: "prop4_generators",
        min_n: 3,
        summary: "the top-form ideal K_n is generated by x_i^2 - x_n^2 and the n products of n-1 variables, with the Hilbert series of J_n",
        check: Lab::prop4_generators,
    },
    Claim {
        id: "thmG",
        min_n: 2,
        summary: "R/K_n has a one-dimensional socle (Gorenstein)",
        check: Lab::thm_g,
    },
    Claim {
        id: "inverse_system",
        min_n: 3,
        summary: "K_n is the annihilator of the sum of squares of all degree n-2 monomials in the dual variables",
        check: Lab::inverse_system,
    },
    Claim {
        id: "not_gorenstein_J",
        min_n: 3,
        summary: "R/J_n has socle dimension > 1",
        check: Lab::not_gorenstein_j,
    },
    Claim {
        id: "appendix_colon",
        min_n: 3,
        summary: "(L : K_{n-1}) = L + <x_{n-1}^2> in n-1 variables, and no linear form outside L lies in the colon",
        check: Lab::appendix_colon,
    },
    Claim {
        id: "appendix_unprojection",
        min_n: 3,
        summary: "substituting z = x_n in Q gives K_n",
        check: Lab::appendix_unprojection,
    },
    Claim {
        id: "appendix_regularity",
        min_n: 3,
        summary: "z - x_n is a nonzerodivisor modulo Q",
        check: Lab::appendix_regularity,
    },
    Claim {
        id: "appendix_krull",
        min_n: 3,
        summary: "in(L) and in(K_{n-1}) have Krull dimension 0, in(Q) has Krull dimension 1",
        check: Lab::appendix_krull,
    },
    Claim {
        id: "challenge",
        min_n: 2,
        summary: "the S_n-graded character of R/K_n specialises to thm1 at t = 1 and to thm2 at the identity",
        check: Lab::challenge,
    },
    Claim {
        id: "triangle",
        min_n: 2,
        summary: "recursion, symmetry, unimodality, row sum and the binomial identity of the triangle",
        check: Lab::triangle,
    },
];

/// All registered claims, in a fixed order.
pub fn claims() -> &'static [Claim] {
    CLAIMS
}

pub fn claim(id: &str) -> Option<&'static Claim> {
    CLAIMS.iter().find(|c| c.id == id)
}

/// Runs one claim with the default engine.
pub fn verify(id: &str, n: usize) -> Result<VerificationReport> {
    Lab::default().verify(id, n)
}

/// Runs claims against a configured Gröbner engine.
#[derive(Clone, Debug, Default)]
pub struct Lab {
    engine: Engine,
}

fn format_monomials(ms: &[Monomial]) -> String {
    let s: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
    s.join(", ")
}

/// Lists up to eight items, then elides the rest.
fn abbreviate(items: &[String]) -> String {
    if items.len() <= 8 {
        return items.join(", ");
    }
    format!("{}, ... ({} more)", items[..8].join(", "), items.len() - 8)
}

fn join<T: ToString>(xs: &[T]) -> String {
    let s: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    s.join(" ")
}

impl Lab {
    pub fn new(engine: Engine) -> Self {
        Lab { engine }
    }

    pub fn engine(&self) -> &Engine {
        &self.engine
    }

    /// Runs a claim. Resource limits are returned as errors; every other
    /// problem becomes a failed report.
    pub fn verify(&self, id: &str, n: usize) -> Result<VerificationReport> {
        let claim = claim(id).ok_or_else(|| Error::Range(format!("unknown claim {id:?}")))?;
        if n < claim.min_n {
            return Ok(VerificationReport::skipped(id, n, format!("requires n >= {}", claim.min_n)));
        }
        let start = Instant::now();
        let report = match (claim.check)(self, n) {
            Ok(Outcome { ok: true, witness }) => VerificationReport::pass(id, n, witness),
            Ok(Outcome { ok: false, witness }) => {
                VerificationReport::fail(id, n, witness.unwrap_or_else(|| "no witness".into()))
            }
            Err(e @ Error::ResourceLimit { .. }) => return Err(e),
            Err(e) => VerificationReport::fail(id, n, format!("error: {e}")),
        };
        Ok(report.timed(start))
    }

    fn gb_i(&self, n: usize) -> Result<GroebnerBasis<Q>> {
        self.engine.buchberger(&binomial_ideal(n)?, ORD)
    }

    /// `J_n`, computed as the initial ideal of `I_n`.
    pub fn j_ideal(&self, n: usize) -> Result<Ideal<Q>> {
        let lms = initial_ideal(&self.gb_i(n)?)?;
        let gens = lms.generators().iter().map(|m| Polynomial::monomial(m.clone(), Q::one(), ORD)).collect();
        Ideal::new(Ring::xs(n), gens)
    }

    /// `K_n`, computed as the ideal of top-degree forms of `I_n`.
    pub fn k_ideal(&self, n: usize) -> Result<Ideal<Q>> {
        top_form_ideal(&self.engine, &binomial_ideal(n)?)
    }

    fn algebra(&self, ideal: &Ideal<Q>) -> Result<QuotientAlgebra<Q>> {
        QuotientAlgebra::from_ideal(&self.engine, ideal, ORD)
    }

    fn equal(&self, a: &Ideal<Q>, b: &Ideal<Q>) -> Result<bool> {
        ideal_equal(&self.engine, a, b, ORD)
    }

    /// The S_n-graded character of `R/K_n`: per class, the per-degree traces
    /// of a representative.
    pub fn challenge_series(&self, n: usize) -> Result<GradedClassFunction<Q>> {
        let k = self.algebra(&self.k_ideal(n)?)?;
        let mut traces = std::collections::BTreeMap::new();
        for c in conjugacy_classes(n)? {
            traces.insert(c.cycle_type, k.equivariant_graded_trace(&c.representative)?);
        }
        let degrees = k.basis().num_degrees();
        let coefficients = (0..degrees)
            .map(|d| ClassFunction::from_fn(n, |p: &Partition| traces[p][d].clone()))
            .collect();
        GradedClassFunction::new(n, coefficients)
    }

    fn prop2_codim(&self, n: usize) -> Result<Outcome> {
        let dim = standard_monomials(&self.gb_i(n)?)?.len() as u64;
        if dim != codimension(n) {
            return Ok(Outcome::fail(format!("dimension {dim}, expected {}", codimension(n))));
        }
        if n == 2 {
            return Ok(Outcome::pass("dimension 1; I_2 is the maximal ideal of the origin"));
        }
        let points = enumerate_points(n)?.len() as u64;
        if points != dim {
            return Ok(Outcome::fail(format!("dimension {dim} but {points} points")));
        }
        let report = verify_points_satisfy_ideal(n)?;
        if !report.is_pass() {
            return Ok(Outcome::fail(report.witness.unwrap_or_default()));
        }
        Ok(Outcome::pass(format!("dimension {dim} = {points} distinct points")))
    }

    fn thm1(&self, n: usize) -> Result<Outcome> {
        let xn = xn_character::<Q>(n)?;
        let two = Q::from_i64(2);
        let rhs = ClassFunction::trivial(n)
            .scale(&two)
            .add(&powerset_character(n).scale(&Q::from_i64(n as i64 - 2)))?;
        if !xn.scale(&two).equals(&rhs)? {
            return Ok(Outcome::fail(format!("2 chi = {xn:?} * 2 but 2[1] + (n-2)[P(n)] = {rhs:?}")));
        }
        if n % 2 == 1 {
            let odd = ClassFunction::trivial(n).add(&half_powerset_character(n)?.scale(&Q::from_i64(n as i64 - 2)))?;
            if !xn.equals(&odd)? {
                return Ok(Outcome::fail(format!("chi = {xn} but [1] + (n-2) half = {odd}")));
            }
        }
        let identity = Partition::new(vec![1; n])?;
        let dim = Q::from_i64(codimension(n) as i64);
        Ok(Outcome::check(
            xn.value(&identity) == Some(&dim),
            format!("{xn}"),
            || format!("degree {} differs from dimension {dim}", xn.value(&identity).unwrap()),
        ))
    }

    fn prop3_generators(&self, n: usize) -> Result<Outcome> {
        let initial = initial_ideal(&self.gb_i(n)?)?;
        let listed = expected_initial_generators(n)?;
        let expected = MonomialIdeal::new(n, listed.iter().cloned())?;
        let got: HashSet<&Monomial> = initial.generators().iter().collect();
        let want: HashSet<&Monomial> = expected.generators().iter().collect();
        if got != want {
            let extra: Vec<Monomial> = got.difference(&want).map(|m| (*m).clone()).collect();
            let missing: Vec<Monomial> = want.difference(&got).map(|m| (*m).clone()).collect();
            return Ok(Outcome::fail(format!(
                "unexpected: [{}]; missing: [{}]",
                format_monomials(&extra),
                format_monomials(&missing)
            )));
        }
        // for n >= 3 the list itself is irredundant, so the sets agree exactly
        if n >= 3 && listed.len() != initial.generators().len() {
            return Ok(Outcome::fail(format!("the list has {} entries but only {} are minimal", listed.len(), got.len())));
        }
        Ok(Outcome::pass(format!("{} minimal generators", got.len())))
    }

    fn prop3_basis(&self, n: usize) -> Result<Outcome> {
        let basis = standard_monomials(&self.gb_i(n)?)?;
        let got: HashSet<&Monomial> = basis.monomials().iter().collect();
        let listed = expected_standard_monomials(n)?;
        let want: HashSet<&Monomial> = listed.iter().collect();
        if got != want || listed.len() != want.len() {
            let extra: Vec<Monomial> = got.difference(&want).map(|m| (*m).clone()).collect();
            let missing: Vec<Monomial> = want.difference(&got).map(|m| (*m).clone()).collect();
            return Ok(Outcome::fail(format!(
                "unexpected: [{}]; missing: [{}]",
                format_monomials(&extra),
                format_monomials(&missing)
            )));
        }
        // degree census through k = n-2-j+s with multiplicity C(n-1, n-2-j)
        let t = BernoulliTriangle::new(n);
        let binom = |m: usize, k: usize| if k == 0 { 1 } else { t.b(m, k) - t.b(m, k - 1) };
        let mut census = vec![0u128; 2 * n - 3];
        for j in 0..=n - 2 {
            for s in 0..=2 * j {
                census[n - 2 - j + s] += binom(n - 1, n - 2 - j);
            }
        }
        let hilbert: Vec<u128> = hilbert_series(&basis).coefficients().iter().map(|&c| c as u128).collect();
        Ok(Outcome::check(
            hilbert == census,
            format!("{} standard monomials; degree census {}", basis.len(), join(&census)),
            || format!("degree census {} but Hilbert function {}", join(&census), join(&hilbert)),
        ))
    }

    fn thm2(&self, n: usize) -> Result<Outcome> {
        let h = self.algebra(&self.j_ideal(n)?)?.hilbert_series();
        let got: Vec<u128> = h.coefficients().iter().map(|&c| c as u128).collect();
        let row = bernoulli_row(n);
        Ok(Outcome::check(got == row, h.to_string(), || {
            format!("Hilbert series {h} but triangle row {}", join(&row))
        }))
    }

    fn thm3(&self, n: usize) -> Result<Outcome> {
        let j = self.algebra(&self.j_ideal(n)?)?;
        let top = 2 * n - 4;
        let subsets = (0..n).map(|l| subset_character::<Q>(n - 1, l)).collect::<Result<Vec<_>>>()?;
        for c in conjugacy_classes(n - 1)? {
            let traces = j.equivariant_graded_trace(&c.representative.extend(n))?;
            let expected: Vec<Q> = (0..=top)
                .map(|k| {
                    (0..=k.min(top - k)).fold(Q::from_i64(0), |acc, l| acc + subsets[l].value(&c.cycle_type).unwrap().clone())
                })
                .collect();
            if traces != expected {
                return Ok(Outcome::fail(format!(
                    "class {}: traces {} but expected {}",
                    c.cycle_type,
                    join(&traces),
                    join(&expected)
                )));
            }
        }
        Ok(Outcome::pass(format!("{} classes of S_{}", conjugacy_classes(n - 1)?.len(), n - 1)))
    }

    fn prop4_generators(&self, n: usize) -> Result<Outcome> {
        let k = self.k_ideal(n)?;
        if !self.equal(&k, &homogeneous_expected(n)?)? {
            return Ok(Outcome::fail(format!("top-form ideal {} differs from the listed generators", k.display())));
        }
        let hk = self.algebra(&k)?.hilbert_series();
        let hj = self.algebra(&self.j_ideal(n)?)?.hilbert_series();
        Ok(Outcome::check(hk == hj, format!("Hilbert series {hk}"), || {
            format!("Hilbert series of K_n {hk} differs from J_n {hj}")
        }))
    }

    fn thm_g(&self, n: usize) -> Result<Outcome> {
        let k = self.algebra(&self.k_ideal(n)?)?;
        let socle = k.socle_basis();
        let shown: Vec<String> = socle.iter().map(|p| k.ring().format(p)).collect();
        Ok(Outcome::check(socle.len() == 1, format!("socle spanned by {}", shown.join(", ")), || {
            format!("socle dimension {}: {}", socle.len(), abbreviate(&shown))
        }))
    }

    fn inverse_system(&self, n: usize) -> Result<Outcome> {
        let g = dual_socle_generator::<Q>(n)?;
        let ann = annihilator(&self.engine, &g)?;
        let k = self.k_ideal(n)?;
        Ok(Outcome::check(
            self.equal(&ann, &k)?,
            format!("{} terms in g, {} minimal annihilator generators", g.polynomial().len(), ann.generators().len()),
            || format!("annihilator {} differs from K_n", ann.display()),
        ))
    }

    fn not_gorenstein_j(&self, n: usize) -> Result<Outcome> {
        let j = self.algebra(&self.j_ideal(n)?)?;
        let socle = j.socle_basis();
        let shown: Vec<String> = socle.iter().map(|p| j.ring().format(p)).collect();
        Ok(Outcome::check(
            socle.len() > 1,
            format!("socle dimension {}: {}", socle.len(), abbreviate(&shown)),
            || format!("socle dimension {}", socle.len()),
        ))
    }

    fn appendix_colon(&self, n: usize) -> Result<Outcome> {
        let m = n - 1;
        let l = unprojection_base::<Q>(n)?;
        let k = homogeneous_expected::<Q>(m)?;
        let square = Polynomial::monomial(Monomial::var_pow(m, m - 1, 2), Q::one(), ORD);
        let colon = colon_ideal(&self.engine, &l, &k)?;
        if !self.equal(&colon, &l.with_generator(square.clone())?)? {
            return Ok(Outcome::fail(format!("(L : K) = {} differs from L + <x{m}^2>", colon.display())));
        }
        let gl = self.engine.buchberger(&l, ORD)?;
        if gl.contains(&square) {
            return Ok(Outcome::fail(format!("x{m}^2 already lies in L")));
        }
        // u = sum c_i x_i lies in (L : K) iff every u * k_g reduces to zero modulo L;
        // the normal forms are linear in c, so the admissible c form a kernel.
        let products: Vec<Vec<Polynomial<Q>>> = (0..m)
            .map(|i| {
                k.generators()
                    .iter()
                    .map(|g| gl.normal_form(&g.mul_term(&Monomial::var(m, i), &Q::one())))
                    .collect()
            })
            .collect();
        let mut rows: HashMap<(usize, Monomial), usize> = HashMap::new();
        for per_gen in &products {
            for (gi, p) in per_gen.iter().enumerate() {
                for t in p.terms() {
                    let next = rows.len();
                    rows.entry((gi, t.mono.clone())).or_insert(next);
                }
            }
        }
        let mut mat = Matrix::zeros(rows.len(), m);
        for (i, per_gen) in products.iter().enumerate() {
            for (gi, p) in per_gen.iter().enumerate() {
                for t in p.terms() {
                    mat[(rows[&(gi, t.mono.clone())], i)] = t.coeff.clone();
                }
            }
        }
        for v in mat.nullspace() {
            let u = Polynomial::from_terms(m, ORD, (0..m).map(|i| (Monomial::var(m, i), v[i].clone())));
            if !gl.contains(&u) {
                return Ok(Outcome::fail(format!("linear form {} lies in (L : K) but not in L", Ring::xs(m).format(&u))));
            }
        }
        Ok(Outcome::pass(format!("ambient variables: {m}; colon generated over L by x{m}^2")))
    }

    fn appendix_unprojection(&self, n: usize) -> Result<Outcome> {
        let q = unprojection_ideal::<Q>(n)?;
        let substituted = q.substitute(n, &Polynomial::var(n, n - 1, ORD))?;
        let k = self.k_ideal(n)?;
        Ok(Outcome::check(
            self.equal(&substituted, &k)?,
            format!("ambient variables: {}", n + 1),
            || format!("Q(z = x{n}) = {} differs from K_n", substituted.display()),
        ))
    }

    fn appendix_regularity(&self, n: usize) -> Result<Outcome> {
        let q = unprojection_ideal::<Q>(n)?;
        let f = &Polynomial::var(n + 1, n, ORD) - &Polynomial::var(n + 1, n - 1, ORD);
        Ok(Outcome::check(
            is_regular_element(&self.engine, &q, &f)?,
            format!("ambient variables: {}", n + 1),
            || format!("z - x{n} is a zerodivisor modulo Q"),
        ))
    }

    fn appendix_krull(&self, n: usize) -> Result<Outcome> {
        let dim = |ideal: &Ideal<Q>| -> Result<usize> {
            krull_dim_monomial(&initial_ideal(&self.engine.buchberger(ideal, ORD)?)?)
        };
        let dl = dim(&unprojection_base(n)?)?;
        let dk = dim(&homogeneous_expected(n - 1)?)?;
        let dq = dim(&unprojection_ideal(n)?)?;
        let shown = format!("dim in(L) = {dl}, dim in(K_{}) = {dk}, dim in(Q) = {dq}", n - 1);
        Ok(Outcome::check((dl, dk, dq) == (0, 0, 1), shown.clone(), || shown))
    }

    fn challenge(&self, n: usize) -> Result<Outcome> {
        let series = self.challenge_series(n)?;
        let at_one = series.at_one();
        let xn = xn_character::<Q>(n)?;
        if !at_one.equals(&xn)? {
            return Ok(Outcome::fail(format!("value at t = 1 is {at_one}, point character is {xn}")));
        }
        let identity = Partition::new(vec![1; n])?;
        let dims = series.at_class(&identity).expect("every class is present");
        let hilbert = self.algebra(&self.k_ideal(n)?)?.hilbert_series();
        let expected: Vec<Q> = hilbert.coefficients().iter().map(|&c| Q::from_i64(c as i64)).collect();
        Ok(Outcome::check(
            dims == expected,
            format!("{} degrees x {} classes; both gates hold", series.coefficients().len(), at_one.values().count()),
            || format!("identity class gives {} but Hilbert series is {hilbert}", join(&dims)),
        ))
    }

    fn triangle(&self, n: usize) -> Result<Outcome> {
        let t = BernoulliTriangle::new(n);
        if !(1..=n).all(|m| t.recursion_holds(m)) {
            return Ok(Outcome::fail("recursion fails"));
        }
        if !t.row_shape_holds(n) {
            return Ok(Outcome::fail(format!("row {} is not symmetric unimodal", join(&t.a_row(n)))));
        }
        for r in [row_sum_check(n), identity_check(n)] {
            if !r.is_pass() {
                return Ok(Outcome::fail(r.witness.unwrap_or_default()));
            }
        }
        Ok(Outcome::pass(join(&t.a_row(n))))
    }
}

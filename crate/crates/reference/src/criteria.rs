//! The eight acceptance checks. Each returns a verdict with a one-line
//! detail; none of them panic on a mismatch.

use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use picard_core::algebra::{parse_element, ratio};
use picard_core::bundle::{
    base_polynomial, basis_vector, eval_trivial_family, formal_pushforward, BasisModel,
    TrivialFamilyModel,
};
use picard_core::grr::{
    chart_coordinates, index_realizations, degree2_piece, integrality_witness, r_param,
    s_param,
};
use picard_core::lattice::{
    admits_section, edge_kernel, smith_normal_form, torsion_orders, verify_free_basis, IntMatrix,
};
use picard_core::stable::{
    bigraded_hilbert, collapse_consistency, enumerate_generators, hilbert_series, AssocVariant,
    RingSpec,
};
use picard_core::{Element, Generator, Rational};

use crate::oracle::{binomial_oracle, count_monomials, determinantal_divisors};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub number: u8,
    pub title: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl CriterionResult {
    fn new(number: u8, title: &'static str, pass: bool, detail: String) -> CriterionResult {
        CriterionResult {
            number,
            title,
            pass,
            detail,
        }
    }

    pub fn verdict(&self) -> &'static str {
        if self.pass {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

impl std::fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "criterion {}: {} {}: {}",
            self.number,
            self.verdict(),
            self.title,
            self.detail
        )
    }
}

fn chart_text(coords: &[Element; 3]) -> String {
    format!("lambda: {}, zeta: {}, m_{{0,1}}: {}", coords[0], coords[1], coords[2])
}

/// The stated degree-2 form
/// `(6r^2+6r+1) lambda + 1/2 s^2 (m_{0,1} - m_{-1,2}) + (rs + 1/2 (s - s^2)) m_{0,1}`.
pub fn stated_degree2_form() -> Element {
    let (r, s) = (r_param(), s_param());
    let g = |x: Generator| Element::generator(x);
    let (lambda, m01, m12) = (g(Generator::lambda()), g(Generator::m(0, 1)), g(Generator::m(-1, 2)));
    let a = (&r * &r).scale(&ratio(6, 1)) + r.scale(&ratio(6, 1)) + Element::one();
    let b = (&s * &s).scale(&ratio(1, 2));
    let c = &r * &s + (&s - &s * &s).scale(&ratio(1, 2));
    a * lambda + b * (&m01 - m12) + c * m01
}

pub fn criterion_1() -> CriterionResult {
    let title = "degree-2 index expansion equals the stated closed form";
    let computed = degree2_piece(&r_param(), &s_param()).and_then(|p| chart_coordinates(&p));
    let expected = chart_coordinates(&stated_degree2_form());
    match (computed, expected) {
        (Ok(c), Ok(e)) => {
            let pass = c == e;
            let detail = if pass {
                chart_text(&c)
            } else {
                format!("computed [{}], stated [{}]", chart_text(&c), chart_text(&e))
            };
            CriterionResult::new(1, title, pass, detail)
        }
        (c, e) => CriterionResult::new(1, title, false, format!("{c:?} / {e:?}")),
    }
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|x| BigInt::from(*x)).collect()
}

pub fn criterion_2() -> CriterionResult {
    let title = "realizations at (0,0), (0,1), (1,1) and spanning";
    // lambda, lambda + zeta, 13 lambda + zeta + m_{0,1} in (lambda, zeta, m_{0,1}).
    let stated = [[1, 0, 0], [1, 1, 0], [13, 1, 1]];
    match index_realizations() {
        Ok((real, cert)) => {
            let mut mismatches = Vec::new();
            for (r, want) in real.iter().zip(stated) {
                if r.coordinates.to_vec() != ints(&want) {
                    mismatches.push(format!(
                        "({}, {}) gives {} = {:?}, stated {:?}",
                        r.r,
                        r.s,
                        r.class,
                        r.coordinates.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        want
                    ));
                }
            }
            let stated_cert =
                verify_free_basis(&stated.iter().map(|v| ints(v)).collect::<Vec<_>>()).expect("3x3");
            let pass = mismatches.is_empty() && cert.pass;
            let span = format!(
                "computed classes span Z^3: {} (det {}); stated classes det {}",
                cert.pass, cert.determinant, stated_cert.determinant
            );
            let detail = if mismatches.is_empty() {
                span
            } else {
                format!("{}; {span}", mismatches.join("; "))
            };
            CriterionResult::new(2, title, pass, detail)
        }
        Err(e) => CriterionResult::new(2, title, false, e.to_string()),
    }
}

pub fn criterion_3() -> CriterionResult {
    let mut failures = Vec::new();
    for r in -10..=10 {
        for s in -10..=10 {
            if let Err(e) = integrality_witness(r, s) {
                failures.push(e.to_string());
            }
        }
    }
    let detail = if failures.is_empty() {
        "441 of 441 points integral".to_string()
    } else {
        format!("{} failures, first: {}", failures.len(), failures[0])
    };
    CriterionResult::new(3, "integrality on [-10,10]^2", failures.is_empty(), detail)
}

pub fn criterion_4() -> CriterionResult {
    let title = "basis certificate for the three reference models";
    let expected = [[1, 0, 0], [0, 2, 1], [0, -1, 0]];
    let mut rows = Vec::new();
    for model in BasisModel::reference_models() {
        match basis_vector(&model).map(|v| v.integers()) {
            Ok(Some(v)) => rows.push(v),
            Ok(None) => return CriterionResult::new(4, title, false, "non-integral vector".into()),
            Err(e) => return CriterionResult::new(4, title, false, e.to_string()),
        }
    }
    let cert = verify_free_basis(&rows).expect("3x3");
    let exact = rows.iter().zip(expected).all(|(r, e)| *r == ints(&e));
    let shown: Vec<String> = rows
        .iter()
        .map(|r| format!("({})", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    CriterionResult::new(
        4,
        title,
        exact && cert.pass,
        format!("vectors {} det {}", shown.join(" "), cert.determinant),
    )
}

pub fn criterion_5() -> CriterionResult {
    let title = "fiber restriction on the product family";
    let x = |c: i64| base_polynomial(&[Rational::zero(), Rational::from_integer(c.into())]);
    let mut failures = Vec::new();
    for g in 2..=20i64 {
        for k in -10..=10i64 {
            let model = TrivialFamilyModel::new(g, k, 8).expect("g >= 2");
            let eval = |s: &str| {
                eval_trivial_family(&model, &parse_element(s, &[]).expect("class")).ok()
            };
            let checks = [
                ("lambda", eval("lambda"), x(0)),
                ("zeta", eval("zeta"), x(1 - g - k)),
                ("m_{0,1}", eval("m_{0,1}"), x(2 - 2 * g)),
            ];
            for (name, got, want) in checks {
                let ok = got.as_ref().is_some_and(|v| *v == want || (v.is_zero() && want.is_zero()));
                if !ok {
                    failures.push(format!("g={g} k={k} {name}"));
                }
            }
            if g <= 8 && k.abs() <= 5 {
                for i in -1..=3i32 {
                    for j in 1..=5u32 {
                        if i + j as i32 <= 0 {
                            continue;
                        }
                        let got = eval_trivial_family(&model, &Element::generator(Generator::m(i, j)));
                        if got.ok() != Some(base_polynomial(&binomial_oracle(g, k, i, j))) {
                            failures.push(format!("g={g} k={k} m_{{{i},{j}}}"));
                        }
                    }
                }
            }
        }
    }
    let detail = if failures.is_empty() {
        "all (g,k) in [2,20]x[-10,10] and the higher-class table agree".into()
    } else {
        format!("{} mismatches, first {}", failures.len(), failures[0])
    };
    CriterionResult::new(5, title, failures.is_empty(), detail)
}

pub fn criterion_6() -> CriterionResult {
    let title = "torsion orders, sections and the kernel vector";
    let mut failures = Vec::new();
    for g in 2..=30i64 {
        for k in -15..=15i64 {
            let expected = (2 - 2 * g).gcd(&(1 - g - k)).abs();
            let ok = match (torsion_orders(g, k), admits_section(g, k), edge_kernel(g, k)) {
                (Ok(t), Ok(sec), Ok(edge)) => {
                    t.h3_pic_order == expected
                        && sec == (k % (2 * g - 2) == 0)
                        && edge.apply(&edge.eta).is_zero()
                        && edge.apply(&edge.lambda).is_zero()
                        && edge.adapted_basis().is_unimodular()
                }
                _ => false,
            };
            if !ok {
                failures.push(format!("g={g} k={k}"));
            }
        }
    }
    let detail = if failures.is_empty() {
        "29 x 31 grid agrees".into()
    } else {
        format!("{} failures, first {}", failures.len(), failures[0])
    };
    CriterionResult::new(6, title, failures.is_empty(), detail)
}

pub fn criterion_7() -> CriterionResult {
    let title = "Hilbert series collapse to degree 20";
    let start = Instant::now();
    let mut failures = Vec::new();
    for g in 2..=20 {
        for k in -10..=10 {
            match collapse_consistency(g, k, 20) {
                Ok(r) if r.pass => {}
                _ => failures.push(format!("g={g} k={k}")),
            }
        }
    }
    let hol = hilbert_series(&RingSpec::Hol, 20).ok();
    let pic = hilbert_series(&RingSpec::Pic { g: 6, k: 0 }, 20).ok();
    let ranks = hol.as_ref().map(|h| h.coefficient(2)) == Some(3)
        && pic.as_ref().map(|h| h.coefficient(2)) == Some(2);
    let bigraded = [AssocVariant::Boundary, AssocVariant::Closed].iter().all(|v| {
        let single = match v {
            AssocVariant::Boundary => RingSpec::GammaTildeBoundary,
            AssocVariant::Closed => RingSpec::GammaTildeClosed,
        };
        bigraded_hilbert(*v, 20).and_then(|b| b.specialize()).ok() == hilbert_series(&single, 20).ok()
    });
    let elapsed = start.elapsed();
    let fast = elapsed.as_secs_f64() < 5.0;
    let pass = failures.is_empty() && ranks && bigraded && fast;
    let timing = if fast {
        "under 5 s".to_string()
    } else {
        format!("{:.2} s", elapsed.as_secs_f64())
    };
    let detail = format!(
        "{} collapse failures, degree-2 ranks 3/2: {ranks}, bigraded specializations: {bigraded}, {timing}",
        failures.len()
    );
    CriterionResult::new(7, title, pass, detail)
}

fn random_ey_poly(rng: &mut ChaCha8Rng) -> Element {
    (0..rng.gen_range(0..6)).fold(Element::zero(), |acc, _| {
        acc + Element::generator(Generator::e()).pow(rng.gen_range(0..5))
            * Element::generator(Generator::y()).pow(rng.gen_range(0..5))
            * Element::integer(rng.gen_range(-5..=5))
    })
}

fn random_param_poly(rng: &mut ChaCha8Rng) -> Element {
    (0..rng.gen_range(1..4)).fold(Element::zero(), |acc, _| {
        acc + Element::generator(Generator::param("r")).pow(rng.gen_range(0..3))
            * Element::integer(rng.gen_range(-4..=4))
    })
}

fn smith_agrees(rows: &[Vec<i64>]) -> bool {
    let a = IntMatrix::from_rows(rows).expect("rectangular");
    let s = smith_normal_form(&a);
    let contract = s.u.mul(&a).and_then(|m| m.mul(&s.v)).ok() == Some(s.d.clone())
        && s.u.is_unimodular()
        && s.v.is_unimodular();
    let diag = s.diagonal();
    let chain = diag.iter().all(|d| !d.is_negative())
        && diag.windows(2).all(|w| {
            if w[0].is_zero() {
                w[1].is_zero()
            } else {
                w[1].is_multiple_of(&w[0])
            }
        });
    let dd = determinantal_divisors(rows);
    let mut prod = BigInt::from(1);
    let divisors = diag.iter().enumerate().all(|(k, d)| {
        prod *= d;
        prod == BigInt::from(dd[k])
    });
    contract && chain && divisors
}

pub fn criterion_8() -> CriterionResult {
    let title = "engine against brute-force oracles";
    let mut failures = Vec::new();
    let specs = [
        RingSpec::Hol,
        RingSpec::Pic { g: 6, k: 0 },
        RingSpec::GammaTildeBoundary,
        RingSpec::GammaTildeClosed,
        RingSpec::AssocGraded { variant: AssocVariant::Boundary },
        RingSpec::AssocGraded { variant: AssocVariant::Closed },
    ];
    for spec in specs {
        let series = hilbert_series(&spec, 12).expect("in budget");
        let degrees: Vec<u32> = enumerate_generators(&spec, 12)
            .expect("in budget")
            .iter()
            .map(|g| g.degree)
            .collect();
        for n in 0..=12 {
            if series.coefficient(n) != count_monomials(&degrees, 0, n) {
                failures.push(format!("{} t^{n}", spec.label()));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for case in 0..500 {
        let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let rows: Vec<Vec<i64>> = (0..r)
            .map(|_| (0..c).map(|_| rng.gen_range(-50..=50)).collect())
            .collect();
        if !smith_agrees(&rows) {
            failures.push(format!("smith case {case}"));
        }
    }
    for case in 0..200 {
        let (p, q, a) = (
            random_ey_poly(&mut rng),
            random_ey_poly(&mut rng),
            random_param_poly(&mut rng),
        );
        let c = ratio(rng.gen_range(-7..=7), 1);
        let push = |x: &Element| formal_pushforward(x).expect("e, y polynomial");
        if push(&(&p + &q.scale(&c))) != push(&p) + push(&q).scale(&c)
            || push(&(&a * &p)) != &a * push(&p)
        {
            failures.push(format!("pushforward case {case}"));
        }
    }
    let detail = if failures.is_empty() {
        "series to degree 12, 500 Smith forms, 200 pushforward cases: no counterexamples".into()
    } else {
        format!("{} counterexamples, first {}", failures.len(), failures[0])
    };
    CriterionResult::new(8, title, failures.is_empty(), detail)
}

pub fn run_all() -> Vec<CriterionResult> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
    ]
}

use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use num_integer::Integer;
use rayon::prelude::*;
use serde_json::{json, Value};

use picard_core::algebra::{parse_element, Element, Generator};
use picard_core::bundle::{
    basis_vector, eval_trivial_family, BasisModel, FourManifoldModel, TrivialFamilyModel,
};
use picard_core::grr::{
    chart_coordinates, degree2_closed_form, index_chern_character, integrality_witness, r_param,
    s_param,
};
use picard_core::lattice::{torsion_orders, verify_free_basis};
use picard_core::stable::{collapse_consistency, enumerate_generators, hilbert_series, AssocVariant, RingSpec};
use picard_reference::criteria::run_all;

use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Ring {
    Hol,
    Pic,
    GammaTildeBoundary,
    GammaTildeClosed,
    AssocBoundary,
    AssocClosed,
}

impl Ring {
    pub fn spec(self, g: i64, k: i64) -> RingSpec {
        match self {
            Ring::Hol => RingSpec::Hol,
            Ring::Pic => RingSpec::Pic { g, k },
            Ring::GammaTildeBoundary => RingSpec::GammaTildeBoundary,
            Ring::GammaTildeClosed => RingSpec::GammaTildeClosed,
            Ring::AssocBoundary => RingSpec::AssocGraded {
                variant: AssocVariant::Boundary,
            },
            Ring::AssocClosed => RingSpec::AssocGraded {
                variant: AssocVariant::Closed,
            },
        }
    }
}

pub fn generators(ring: Ring, g: i64, k: i64, maxdeg: u32) -> Result<Report> {
    let spec = ring.spec(g, k);
    let gens = enumerate_generators(&spec, maxdeg)?;
    let assoc = matches!(spec, RingSpec::AssocGraded { .. });
    let columns: &[&str] = if assoc {
        &["name", "degree", "p", "q"]
    } else {
        &["name", "degree"]
    };
    let mut report = Report::new("generators", format!("Generators of {} to degree {maxdeg}", spec.label()), columns);
    for gen in gens {
        let mut cells = vec![json!(gen.name), json!(gen.degree)];
        if let Some((p, q)) = gen.bidegree {
            cells.extend([json!(p), json!(q)]);
        }
        report.row(cells);
    }
    Ok(report)
}

fn series_text(coefficients: &[u128]) -> String {
    coefficients.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub fn hilbert(ring: Ring, g: i64, k: i64, maxdeg: u32, check_collapse: bool) -> Result<Report> {
    if check_collapse {
        let collapse = collapse_consistency(g, k, maxdeg)?;
        let mut report = Report::new(
            "hilbert",
            format!("Collapse consistency for g = {g}, k = {k} to degree {maxdeg}"),
            &[
                "degree",
                "hol",
                "pic_extended",
                "closed_extended",
                "boundary_specialized",
                "closed",
                "closed_specialized",
                "pass",
            ],
        );
        for r in &collapse.rows {
            report.row(vec![
                json!(r.degree),
                json!(r.hol),
                json!(r.pic_extended),
                json!(r.closed_extended),
                json!(r.boundary_specialized),
                json!(r.closed),
                json!(r.closed_specialized),
                json!(r.pass),
            ]);
        }
        let failing: Vec<String> = collapse.rows.iter().filter(|r| !r.pass).map(|r| r.degree.to_string()).collect();
        let detail = if failing.is_empty() {
            format!("all degrees 0..={maxdeg} agree")
        } else {
            format!("degrees {} disagree", failing.join(", "))
        };
        report.certify("collapse", collapse.pass, detail);
        return Ok(report);
    }
    let spec = ring.spec(g, k);
    let series = hilbert_series(&spec, maxdeg)?;
    let mut report = Report::new(
        "hilbert",
        format!("Hilbert series of {} to degree {maxdeg}", spec.label()),
        &["degree", "coefficient"],
    );
    for (d, c) in series.coefficients.iter().enumerate() {
        report.row(vec![json!(d), json!(c)]);
    }
    report.note(format!("series: {}", series_text(&series.coefficients)));
    Ok(report)
}

fn chart_element(coords: &[Element; 3]) -> Element {
    let gen = |g: Generator| Element::generator(g);
    &coords[0] * gen(Generator::lambda())
        + &coords[1] * gen(Generator::zeta())
        + &coords[2] * gen(Generator::m(0, 1))
}

pub fn grr(r: i64, s: i64, symbolic: bool, maxdeg: u32) -> Result<Report> {
    let (re, se) = if symbolic {
        (r_param(), s_param())
    } else {
        (Element::integer(r), Element::integer(s))
    };
    let title = if symbolic {
        "Index character for symbolic r, s".to_string()
    } else {
        format!("Index character at r = {r}, s = {s}")
    };
    let expansion = index_chern_character(&re, &se, maxdeg)?;
    let mut report = Report::new("grr", title, &["degree", "class"]);
    for (d, piece) in expansion.pieces() {
        report.row(vec![json!(d), json!(piece.to_string())]);
    }
    let piece = expansion.piece(2);
    let coords = chart_coordinates(&piece)?;
    report.note(format!(
        "degree 2 in (lambda, zeta, m_{{0,1}}): {}",
        chart_element(&coords)
    ));
    if symbolic {
        let closed = degree2_closed_form(&re, &se);
        let pass = closed == piece;
        report.certify(
            "closed form",
            pass,
            format!("closed form {closed}"),
        );
    } else {
        match integrality_witness(r, s) {
            Ok(w) => {
                let text: Vec<String> = w.iter().map(ToString::to_string).collect();
                report.certify("integrality", true, format!("({})", text.join(", ")));
            }
            Err(e) => report.certify("integrality", false, e.to_string()),
        }
    }
    Ok(report)
}

pub fn load_model(name: &str) -> Result<FourManifoldModel> {
    if name == "hirzebruch" {
        return Ok(FourManifoldModel::hirzebruch_h1());
    }
    let text = std::fs::read_to_string(Path::new(name)).with_context(|| format!("reading model {name}"))?;
    Ok(FourManifoldModel::from_json(&text)?)
}

pub fn basis_check(model: &str, g: i64, k: i64) -> Result<Report> {
    let models = [
        BasisModel::UniversalStub,
        BasisModel::TrivialFamily(TrivialFamilyModel::new(g, k, 1)?),
        BasisModel::FourManifold(load_model(model)?),
    ];
    let mut report = Report::new(
        "basis-check",
        "Values of (lambda, m_{0,1}, zeta) on test bundles",
        &["model", "lambda", "m_{0,1}", "zeta"],
    );
    let mut vectors = Vec::new();
    let mut problems = Vec::new();
    for m in &models {
        match basis_vector(m) {
            Ok(v) => {
                report.row(vec![
                    json!(m.label()),
                    json!(v.lambda.to_string()),
                    json!(v.m01.to_string()),
                    json!(v.zeta.to_string()),
                ]);
                match v.integers() {
                    Some(ints) => vectors.push(ints),
                    None => problems.push(format!("{} is not integral", m.label())),
                }
            }
            Err(e) => problems.push(format!("{}: {e}", m.label())),
        }
    }
    if problems.is_empty() {
        let cert = verify_free_basis(&vectors)?;
        report.certify("free basis", cert.pass, format!("det {}", cert.determinant));
    } else {
        report.certify("free basis", false, problems.join("; "));
    }
    Ok(report)
}

/// Inclusive range `a:b`.
pub fn parse_range(text: &str) -> Result<(i64, i64)> {
    let (a, b) = text
        .split_once(':')
        .with_context(|| format!("expected a range a:b, got {text:?}"))?;
    let (a, b): (i64, i64) = (a.trim().parse()?, b.trim().parse()?);
    if a > b {
        bail!("empty range {text:?}");
    }
    Ok((a, b))
}

pub fn orders(g_range: (i64, i64), k_range: (i64, i64)) -> Result<Report> {
    let grid: Vec<(i64, i64)> = (g_range.0..=g_range.1)
        .flat_map(|g| (k_range.0..=k_range.1).map(move |k| (g, k)))
        .collect();
    let results: Vec<_> = grid.par_iter().map(|&(g, k)| torsion_orders(g, k)).collect();
    let mut report = Report::new(
        "orders",
        format!(
            "Torsion orders for g in {}..={}, k in {}..={}",
            g_range.0, g_range.1, k_range.0, k_range.1
        ),
        &[
            "g",
            "k",
            "h3_pic",
            "h1",
            "h3_gamma",
            "eta_lambda",
            "eta_zeta",
            "eta_m01",
            "dd_class_order",
            "admits_section",
        ],
    );
    let mut mismatches = 0usize;
    for r in results {
        let r = r?;
        if r.h3_pic_order != (2 - 2 * r.g).gcd(&(1 - r.g - r.k)) {
            mismatches += 1;
        }
        let [a, b, c] = r.eta_vector;
        report.row(vec![
            json!(r.g),
            json!(r.k),
            json!(r.h3_pic_order),
            json!(r.h1_mg_pic0_order),
            json!(r.h3_gamma_tilde_order),
            json!(a),
            json!(b),
            json!(c),
            json!(r.dd_class_order),
            json!(r.admits_section),
        ]);
    }
    report.certify(
        "gcd",
        mismatches == 0,
        format!("{} rows, {mismatches} mismatches", report.rows.len()),
    );
    Ok(report)
}

pub fn restrict(g: i64, k: i64, classes: &[String], truncation: u32) -> Result<Report> {
    let model = TrivialFamilyModel::new(g, k, truncation)?;
    let mut report = Report::new(
        "restrict",
        format!("Restriction to the product family, g = {g}, k = {k}"),
        &["class", "restriction"],
    );
    for class in classes {
        let el = parse_element(class, &[])?;
        let image = eval_trivial_family(&model, &el)?;
        report.row(vec![json!(class), Value::String(image.to_string())]);
    }
    Ok(report)
}

pub fn reproduce() -> Result<Report> {
    let mut report = Report::new(
        "reproduce",
        "Acceptance checks",
        &["criterion", "verdict", "check", "detail"],
    );
    for c in run_all() {
        report.row(vec![json!(c.number), json!(c.verdict()), json!(c.title), json!(c.detail)]);
        report.certify(&format!("criterion {}", c.number), c.pass, c.title);
    }
    Ok(report)
}

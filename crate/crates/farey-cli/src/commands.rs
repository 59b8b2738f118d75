//! Dispatch from parsed commands to library calls.

use farey::census::census;
use farey::cfrac::{
    convergents, eval_negative, eval_regular, expand_negative, expand_regular, format_word, negative_to_regular,
    parse_periodic, regular_to_negative, surd_negative_cf, CfKind, PeriodicWord,
};
use farey::dissect::{
    cells_of, dissection_sign, enumerate_3d, enumerate_triangulations, is_3d, quiddity_of, reconstruct_triangulation,
    reduce_word, total_sum_decomposition, Dissection,
};
use farey::fareywalk::{
    classify_walk, descent_polygon, farey_triangulate, index_by_determinant, index_of_polygon, quiddity_from_walk,
    t_rs, walk_from_word, FareyPolygon, WalkClass,
};
use farey::modmat::{classify_id, eval_genword, is_in_gamma, m_plus_word, m_word, GenWord, IdClass};
use farey::present::{
    conjugacy_class_rational, conjugacy_class_surd, matrix_dissection_word, minimal_presentation, t_matrix,
};
use farey::ptolemy::{
    det_exact, entries_forced, labeling_from_word, omega_matrix, omega_plus_matrix, verify_pp, Symmetry,
};
use farey::{Int, Matrix, Rational, Surd};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::output::{self as out, usage, CliError, CliResult, Report};
use crate::{render, selfcheck};
use crate::{CfCmd, Command, DissectCmd, Drawing, FareyCmd, MatCmd, Method, PtolemyCmd, QuiddityCmd, WalkCmd};

pub fn run(cmd: &Command) -> CliResult<Report> {
    match cmd {
        Command::Cf(c) => cf(c),
        Command::Mat(c) => mat(c),
        Command::Quiddity(c) => quiddity(c),
        Command::Dissect(c) => dissect(c),
        Command::Walk(c) => walk(c),
        Command::Farey(c) => farey_cmd(c),
        Command::Ptolemy(c) => ptolemy(c),
        Command::Census { n } => census_cmd(*n),
        Command::Render { word, out } => render_cmd(word, out),
        Command::Selfcheck { seed, cases } => Ok(selfcheck::run(*seed, *cases)),
    }
}

// Continued fractions -------------------------------------------------------

fn cf(cmd: &CfCmd) -> CliResult<Report> {
    match cmd {
        CfCmd::Expand { x, neg, reg, surd } => {
            if *surd {
                let parts = out::word(x)?;
                let [p, q, d] = parts.as_slice() else {
                    return Err(usage("a surd is given as p,q,d meaning (p+√d)/q"));
                };
                let s = Surd::new(p.clone(), q.clone(), d.clone())?;
                let w = surd_negative_cf(&s)?;
                return Ok(Report::new(
                    w.to_string(),
                    json!({ "x": s.to_string(), "prefix": out::ints(&w.prefix), "period": out::ints(&w.period) }),
                ));
            }
            let x = out::rational(x)?;
            let mut lines = Vec::new();
            let mut j = json!({ "x": x.to_string() });
            if !reg {
                let c = expand_negative(&x)?;
                lines.push(out::negative_text(&c));
                j["negative"] = out::ints(&c);
            }
            if !neg {
                let a = expand_regular(&x)?;
                lines.push(out::regular_text(&a));
                j["regular"] = out::ints(&a);
            }
            Ok(Report::new(lines.join("\n"), j))
        }
        CfCmd::Convert { word } => {
            let t = word.trim();
            if t.starts_with("[[") {
                let a = negative_to_regular(&out::word(t)?)?;
                Ok(Report::new(out::regular_text(&a), json!({ "regular": out::ints(&a) })))
            } else if t.starts_with('[') {
                let c = regular_to_negative(&out::word(t)?)?;
                Ok(Report::new(out::negative_text(&c), json!({ "negative": out::ints(&c) })))
            } else {
                Err(usage("write a negative word as [[c1,...]] and a regular word as [a1,...]"))
            }
        }
        CfCmd::Eval { word, convergents: show } => {
            let t = word.trim();
            if t.contains(';') {
                let pw = parse_periodic::<Int>(t)?;
                let x = eval_periodic(&pw)?;
                return Ok(Report::new(
                    x.to_string(),
                    json!({ "p": out::int(x.p()), "q": out::int(x.q()), "d": out::int(x.d()) }),
                ));
            }
            let (kind, value) = if t.starts_with("[[") {
                (CfKind::Negative, eval_negative(&out::word(t)?).to_string())
            } else if t.starts_with('[') {
                (CfKind::Regular, eval_regular(&out::word(t)?).to_string())
            } else {
                return Err(usage("write a negative word as [[c1,...]] and a regular word as [a1,...]"));
            };
            let mut j = json!({ "value": value });
            let mut text = value;
            if *show {
                let conv: Vec<String> = convergents(&out::word(t)?, kind).iter().map(|p| p.to_string()).collect();
                text = format!("{text}\nconvergents: {}", conv.join(" "));
                j["convergents"] = json!(conv);
            }
            Ok(Report::new(text, j))
        }
    }
}

/// Value of `[[prefix; period, period, ...]]`: the attracting fixed point of
/// `M(period)` moved by `M(prefix)`.
pub fn eval_periodic(pw: &PeriodicWord<Int>) -> CliResult<Surd> {
    let m = m_word(&pw.period);
    let (a, c, d) = (m.a().clone(), m.c().clone(), m.d().clone());
    let tr = &a + &d;
    let disc = &tr * &tr - Int::from(4);
    if c.is_zero() || !disc.is_positive() {
        return Err(CliError::Domain(farey::Error::NotHyperbolic(tr.abs().to_string())));
    }
    let (p, q) = (&a - &d, Int::from(2) * &c);
    let pre = m_word(&pw.prefix);
    let (ma, mb, mc, md) = (pre.a(), pre.b(), pre.c(), pre.d());
    // x = (u1 + A sqrt(D)) / (u2 + C sqrt(D)) with y = (p + sqrt(D)) / q.
    let u1 = ma * &p + mb * &q;
    let u2 = mc * &p + md * &q;
    let big_p = &u1 * &u2 - ma * mc * &disc;
    let big_q = ma * &u2 - &u1 * mc;
    let big_r = &u2 * &u2 - mc * mc * &disc;
    let g = big_p.gcd(&big_q).gcd(&big_r);
    let (mut np, nq, mut nr) = (big_p / &g, big_q / &g, big_r / &g);
    if nq.is_negative() {
        np = -np;
        nr = -nr;
    }
    Ok(Surd::new(np, nr, &nq * &nq * &disc)?)
}

// Matrices ------------------------------------------------------------------

fn matrix_report(m: &Matrix) -> Report {
    Report::new(m.to_string(), json!({ "matrix": out::mat(m) }))
}

fn mat(cmd: &MatCmd) -> CliResult<Report> {
    match cmd {
        MatCmd::Word { word } => Ok(matrix_report(&m_word(&out::word(word)?))),
        MatCmd::Plusword { word } => Ok(matrix_report(&m_plus_word(&out::word(word)?)?)),
        MatCmd::Genword { word } => {
            let g: GenWord<Int> = word.parse()?;
            Ok(matrix_report(&eval_genword(&g)))
        }
        MatCmd::Minpres { matrix } => {
            let p = minimal_presentation(&out::matrix(matrix)?)?;
            Ok(Report::new(format_word(&p.word), json!({ "word": out::ints(&p.word), "sign": p.sign })))
        }
        MatCmd::Conjclass { matrix, method } => {
            let a = out::matrix(matrix)?;
            let rational =
                matches!(method, Method::Rational | Method::Both).then(|| conjugacy_class_rational(&a)).transpose()?;
            let surd = matches!(method, Method::Surd | Method::Both).then(|| conjugacy_class_surd(&a)).transpose()?;
            if let (Some(r), Some(s)) = (&rational, &surd) {
                if r != s {
                    return Err(CliError::Check(format!("rational method gives {r}, surd method gives {s}")));
                }
            }
            let class = rational.or(surd).expect("at least one method runs");
            Ok(Report::new(class.to_string(), json!({ "class": out::ints(class.cycle()) })))
        }
        MatCmd::Gamma { matrix } => {
            let inside = is_in_gamma(&out::matrix(matrix)?);
            Ok(Report::new(inside.to_string(), json!({ "in_gamma": inside })))
        }
        MatCmd::Matdissect { matrix } => {
            let (w, class) = matrix_dissection_word(&out::matrix(matrix)?)?;
            Ok(Report::new(
                format!("{} {class}", format_word(&w)),
                json!({ "word": out::ints(&w), "class": class.to_string() }),
            ))
        }
        MatCmd::Tmatrix { matrix, out: drawing } => {
            let t = t_matrix(&out::matrix(matrix)?)?;
            let labels = &t.triangulation.labels;
            draw_labeled(&t.triangulation.base, labels, drawing)?;
            Ok(Report::new(
                format!(
                    "labels: {}\nquiddity: {}\nprefix: {}",
                    out::joined(labels, " "),
                    format_word(&t.quiddity),
                    format_word(t.prefix())
                ),
                json!({
                    "labels": out::strings(labels),
                    "quiddity": out::ints(&t.quiddity),
                    "k": t.k,
                    "prefix": out::ints(t.prefix()),
                    "dissection": out::dissection_json(&t.triangulation.base),
                }),
            ))
        }
    }
}

// Quiddities and dissections -------------------------------------------------

fn quiddity(cmd: &QuiddityCmd) -> CliResult<Report> {
    match cmd {
        QuiddityCmd::Check { word } => {
            let class = classify_id(&out::word(word)?);
            Ok(Report::new(class.to_string(), json!({ "class": class.to_string() })))
        }
        QuiddityCmd::Reduce { word } => {
            let (r, flips) = reduce_word(&out::word(word)?);
            Ok(Report::new(
                format!("{} ({flips} sign flips)", format_word(&r)),
                json!({ "word": out::ints(&r), "sign_flips": flips }),
            ))
        }
        QuiddityCmd::Reconstruct { word, out: drawing } => {
            let d = reconstruct_triangulation(&out::word(word)?)?;
            draw_plain(&d, drawing)?;
            Ok(Report::new(out::dissection_text(&d), out::dissection_json(&d)))
        }
    }
}

fn dissect(cmd: &DissectCmd) -> CliResult<Report> {
    match cmd {
        DissectCmd::Enumerate { n, triangulations } => {
            let all = if *triangulations { enumerate_triangulations(*n)? } else { enumerate_3d(*n)? };
            let text: Vec<String> = all
                .iter()
                .map(|d| format!("{}  quiddity {}", out::dissection_text(d), format_word(&quiddity_of::<Int>(d))))
                .collect();
            let j: Vec<Value> = all.iter().map(out::dissection_json).collect();
            Ok(Report::new(format!("{}\n{} dissections", text.join("\n"), all.len()), json!(j)))
        }
        DissectCmd::Validate { dissection } => {
            let d = out::dissection(dissection)?;
            let cells = cells_of(&d);
            let three_d = is_3d(&d);
            let sizes: Vec<usize> = cells.iter().map(|c| c.len()).collect();
            let mut j = json!({ "valid": true, "is_3d": three_d, "cells": cells });
            let mut text = format!("valid; cell sizes {}", out::joined(&sizes, ","));
            if three_d {
                let sign = dissection_sign(&d)?;
                let dec = total_sum_decomposition::<Int>(&d)?;
                text = format!("{text}; 3d-dissection, {sign}, quiddity sum {}", dec.sum);
                j["sign"] = json!(sign.to_string());
                j["sum"] = out::int(&dec.sum);
            } else {
                text.push_str("; not a 3d-dissection");
            }
            Ok(Report::new(text, j))
        }
        DissectCmd::Quiddity { dissection } => {
            let q = quiddity_of::<Int>(&out::dissection(dissection)?);
            Ok(Report::new(format_word(&q), out::ints(&q)))
        }
    }
}

// Walks and Farey polygons ----------------------------------------------------

fn walk_class_name(c: WalkClass) -> &'static str {
    match c {
        WalkClass::FareyPolygon => "FareyPolygon",
        WalkClass::PositiveWalk => "PositiveWalk",
        WalkClass::Walk => "Walk",
        WalkClass::Invalid => "Invalid",
    }
}

fn walk(cmd: &WalkCmd) -> CliResult<Report> {
    match cmd {
        WalkCmd::FromWord { word } => {
            let w = walk_from_word(&out::word(word)?)?;
            let anti = w.periodicity == farey::fareywalk::Periodicity::Antiperiodic;
            Ok(Report::new(
                format!("{} ({})", out::joined(&w.points, " "), if anti { "antiperiodic" } else { "periodic" }),
                out::walk_json(&w),
            ))
        }
        WalkCmd::Classify { walk } => {
            let c = walk_class_name(classify_walk(&out::walk(walk)?));
            Ok(Report::new(c, json!({ "class": c })))
        }
        WalkCmd::Quiddity { walk } => {
            let w = out::walk(walk)?;
            let by_det = index_by_determinant(&w);
            let q = quiddity_from_walk(&w)?;
            if q != by_det {
                return Err(CliError::Check(format!(
                    "triangle count {} differs from determinants {}",
                    format_word(&q),
                    format_word(&by_det)
                )));
            }
            Ok(Report::new(format_word(&q), out::ints(&q)))
        }
    }
}

fn polygon_report(p: &FareyPolygon<Int>, d: &Dissection, drawing: &Drawing) -> CliResult<Report> {
    let idx = index_of_polygon(p)?;
    draw_labeled(d, p.vertices(), drawing)?;
    Ok(Report::new(
        format!(
            "vertices: {}\nquiddity: {}\n{}",
            out::joined(p.vertices(), " "),
            format_word(&idx),
            out::dissection_text(d)
        ),
        json!({ "vertices": out::strings(p.vertices()), "quiddity": out::ints(&idx), "dissection": out::dissection_json(d) }),
    ))
}

fn farey_cmd(cmd: &FareyCmd) -> CliResult<Report> {
    match cmd {
        FareyCmd::Trs { x, out: drawing } => {
            let t = t_rs(&out::rational(x)?)?;
            let labels = &t.triangulation.labels;
            draw_labeled(&t.triangulation.base, labels, drawing)?;
            Ok(Report::new(
                format!(
                    "labels: {}\nquiddity: {}\nk: {}\nregular: {}",
                    out::joined(labels, " "),
                    format_word(&t.quiddity),
                    t.k,
                    out::regular_text(&t.a_data)
                ),
                json!({
                    "labels": out::strings(labels),
                    "quiddity": out::ints(&t.quiddity),
                    "k": t.k,
                    "regular": out::ints(&t.a_data),
                    "dissection": out::dissection_json(&t.triangulation.base),
                }),
            ))
        }
        FareyCmd::Polygon { targets, out: drawing } => {
            let p = descent_polygon(&out::rationals(targets)?)?;
            let d = farey_triangulate(&p)?;
            polygon_report(&p, &d, drawing)
        }
        FareyCmd::Triangulate { vertices, out: drawing } => {
            let p = FareyPolygon::new(out::rationals(vertices)?)?;
            let d = farey_triangulate(&p)?;
            polygon_report(&p, &d, drawing)
        }
    }
}

// Ptolemy --------------------------------------------------------------------

fn sign_mode(c: &[Int]) -> CliResult<Symmetry> {
    match classify_id(c) {
        IdClass::MinusId => Ok(Symmetry::Symmetric),
        IdClass::PlusId => Ok(Symmetry::Skew),
        IdClass::Neither => Err(CliError::Domain(farey::Error::NotASolution)),
    }
}

fn mode_name(m: Symmetry) -> &'static str {
    match m {
        Symmetry::Symmetric => "symmetric",
        Symmetry::Skew => "skew",
    }
}

fn ptolemy(cmd: &PtolemyCmd) -> CliResult<Report> {
    match cmd {
        PtolemyCmd::Table { word } => {
            let c = out::word(word)?;
            let l = labeling_from_word(&c, sign_mode(&c)?)?;
            let rows: Vec<String> = l.table().iter().map(|r| out::joined(r, "\t")).collect();
            Ok(Report::new(rows.join("\n"), json!({ "mode": mode_name(l.mode()), "table": out::table(l.table()) })))
        }
        PtolemyCmd::Verify { word } => {
            let c = out::word(word)?;
            let l = labeling_from_word(&c, sign_mode(&c)?)?;
            let (pp, forced) = (verify_pp(&l), entries_forced(&l));
            Ok(Report::new(
                format!(
                    "{} labeling: relations {}, entries forced {}",
                    mode_name(l.mode()),
                    if pp { "hold" } else { "fail" },
                    if forced { "yes" } else { "no" }
                ),
                json!({ "mode": mode_name(l.mode()), "relations_hold": pp, "entries_forced": forced }),
            )
            .failed_if(!(pp && forced)))
        }
        PtolemyCmd::Pfaffian { word } => {
            let c = out::word(word)?;
            let tr = m_word(&c).trace();
            let tr2 = &tr * &tr;
            let det = det_exact(omega_matrix(&c)?.rows());
            let mut ok = det == tr2;
            let mut text = format!("trace {tr}; det Omega {det}, trace^2 {tr2}");
            let mut j = json!({ "trace": out::int(&tr), "det_omega": out::int(&det) });
            if c.len() >= 2 {
                let plus = det_exact(&omega_plus_matrix(&c)?);
                let sign = if c.len() % 2 == 0 { Int::from(1) } else { Int::from(-1) };
                let expect = sign * (&tr2 - Int::from(4));
                ok &= plus == expect;
                text = format!("{text}; det Omega' {plus}, expected {expect}");
                j["det_omega_plus"] = out::int(&plus);
            }
            j["holds"] = json!(ok);
            Ok(Report::new(format!("{text}; {}", if ok { "holds" } else { "FAILS" }), j).failed_if(!ok))
        }
    }
}

// Census and drawings ---------------------------------------------------------

fn census_cmd(n_max: usize) -> CliResult<Report> {
    let rows = census(n_max)?;
    let mut text = Vec::new();
    let mut j = Vec::new();
    for r in &rows {
        let levels: Vec<String> = r.levels.iter().rev().map(|(s, (m, p))| format!("{s}:{m}/{p}")).collect();
        let failed: Vec<&str> = r.checks.iter().filter(|(_, ok)| !ok).map(|(name, _)| name.as_str()).collect();
        text.push(format!(
            "n={}  -Id {}  +Id {}  triangulations {}  3d-dissections {}  levels(sum:-Id/+Id) {}  checks {}",
            r.n,
            r.minus_id,
            r.plus_id,
            r.triangulations,
            r.dissections_3d,
            levels.join(" "),
            if failed.is_empty() {
                format!("{} pass", r.checks.len())
            } else {
                format!("FAILED {}", failed.join(", "))
            }
        ));
        let level_json: Vec<Value> =
            r.levels.iter().map(|(s, (m, p))| json!({ "sum": s, "minus_id": m, "plus_id": p })).collect();
        let checks: serde_json::Map<String, Value> = r.checks.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
        j.push(json!({
            "n": r.n,
            "minus_id": r.minus_id,
            "plus_id": r.plus_id,
            "levels": level_json,
            "triangulations": r.triangulations,
            "dissections_3d": r.dissections_3d,
            "checks": checks,
        }));
    }
    let all_pass = rows.iter().all(|r| r.all_pass());
    Ok(Report::new(text.join("\n"), json!(j)).failed_if(!all_pass))
}

fn render_cmd(word: &str, drawing: &Drawing) -> CliResult<Report> {
    let c = out::word(word)?;
    let d = match reconstruct_triangulation(&c) {
        Ok(d) => d,
        Err(_) => farey::present::realize_dissection(&c)?.ok_or(CliError::Domain(farey::Error::NotASolution))?,
    };
    if drawing.svg.is_none() && drawing.dot.is_none() {
        return Ok(Report::new(render::dot(&d, &[]).trim_end(), json!({ "dot": render::dot(&d, &[]) })));
    }
    draw_plain(&d, drawing)?;
    Ok(Report::new(out::dissection_text(&d), out::dissection_json(&d)))
}

fn write_drawings(svg: impl FnOnce() -> String, dot: impl FnOnce() -> String, drawing: &Drawing) -> CliResult<()> {
    if let Some(p) = &drawing.svg {
        std::fs::write(p, svg())?;
    }
    if let Some(p) = &drawing.dot {
        std::fs::write(p, dot())?;
    }
    Ok(())
}

fn draw_plain(d: &Dissection, drawing: &Drawing) -> CliResult<()> {
    write_drawings(|| render::polygon_svg(d, &[]), || render::dot(d, &[]), drawing)
}

/// Farey-strip drawing; labels are in polygon order, decreasing from `1/0`.
fn draw_labeled(d: &Dissection, labels: &[Rational], drawing: &Drawing) -> CliResult<()> {
    let names: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
    let mut by_value: Vec<usize> = (0..labels.len()).collect();
    by_value.sort_by(|&i, &j| labels[i].cmp(&labels[j]));
    let mut order = vec![0; labels.len()];
    for (rank, &v) in by_value.iter().enumerate() {
        order[v] = rank;
    }
    write_drawings(|| render::strip_svg(d, &names, &order), || render::dot(d, &names), drawing)
}

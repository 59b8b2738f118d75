//! Seeded randomized checks across every module.

use std::time::Instant;

use farey::census::census;
use farey::cfrac::{
    eval_negative, eval_regular, expand_negative, expand_regular, negative_to_regular, regular_to_negative,
    surd_negative_cf,
};
use farey::dissect::{enumerate_triangulations, quiddity_of, reconstruct_triangulation, reduce_word};
use farey::fareywalk::{quiddity_from_walk, t_rs, walk_from_word};
use farey::modmat::{classify_id, m_word, psl_eq, IdClass};
use farey::numcore::normalize;
use farey::present::{conjugacy_class_rational, conjugacy_class_surd, is_minimal, minimal_presentation};
use farey::ptolemy::{euler_identity_holds, labeling_from_word, trace_pfaffian_check, verify_pp, Symmetry};
use farey::{Int, Matrix, Surd};
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::commands::eval_periodic;
use crate::output::Report;

pub const DEFAULT_SEED: u64 = 0x5eed;
pub const DEFAULT_CASES: usize = 500;

type Check = fn(&mut ChaCha8Rng, usize) -> Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize, max_entry: i64) -> Vec<Int> {
    let len = rng.gen_range(1..=max_len);
    (0..len).map(|_| Int::from(rng.gen_range(1..=max_entry))).collect()
}

fn random_rs(rng: &mut ChaCha8Rng, max_len: usize) -> Matrix {
    let len = rng.gen_range(1..=max_len);
    (0..len).fold(Matrix::identity(), |m, _| match rng.gen_range(0..3) {
        0 => &m * &Matrix::r(),
        1 => &m * &Matrix::r().inverse(),
        _ => &m * &Matrix::s(),
    })
}

fn expansions(rng: &mut ChaCha8Rng, cases: usize) -> Result<(), String> {
    for _ in 0..cases {
        let s: i64 = rng.gen_range(1..1_000_000);
        let r: i64 = s + rng.gen_range(1..1_000_000);
        let x = normalize(Int::from(r), Int::from(s)).map_err(|e| e.to_string())?;
        let a = expand_regular(&x).map_err(|e| e.to_string())?;
        let c = expand_negative(&x).map_err(|e| e.to_string())?;
        ensure(eval_regular(&a) == x && eval_negative(&c).reduce() == x, || format!("{x}: evaluation"))?;
        ensure(regular_to_negative(&a).as_ref() == Ok(&c), || format!("{x}: regular to negative"))?;
        ensure(negative_to_regular(&c).as_ref() == Ok(&a), || format!("{x}: negative to regular"))?;
    }
    Ok(())
}

fn surds(rng: &mut ChaCha8Rng, cases: usize) -> Result<(), String> {
    let mut done = 0;
    while done < cases {
        let d: i64 = rng.gen_range(2..500);
        let root = (d as f64).sqrt() as i64;
        if root * root == d || (root + 1) * (root + 1) == d {
            continue;
        }
        let p: i64 = rng.gen_range(-50..50);
        let q: i64 = rng.gen_range(1..50);
        let x = Surd::new(Int::from(p), Int::from(q), Int::from(d)).map_err(|e| e.to_string())?;
        let w = surd_negative_cf(&x).map_err(|e| e.to_string())?;
        ensure(w.period.iter().all(|c| *c >= Int::from(2)) && w.period.iter().any(|c| *c > Int::from(2)), || {
            format!("{x}: period {w}")
        })?;
        let back = eval_periodic(&w).map_err(|e| e.to_string())?;
        let same = back.d() * x.q() * x.q() == x.d() * back.q() * back.q()
            && back.p() * x.q() == x.p() * back.q()
            && back.q().signum() == x.q().signum();
        ensure(same, || format!("{x}: {w} evaluates to {back}"))?;
        done += 1;
    }
    Ok(())
}

fn euler(rng: &mut ChaCha8Rng, cases: usize) -> Result<(), String> {
    for _ in 0..cases {
        let c = random_word(rng, 8, 9);
        let n = c.len();
        if n < 2 {
            continue;
        }
        let i = rng.gen_range(1..n);
        let j = rng.gen_range(i..n);
        let k = rng.gen_range(j + 1..=n);
        let l = rng.gen_range(k..=n);
        ensure(euler_identity_holds(&c, i, j, k, l) == Ok(true), || format!("{c:?} at ({i},{j},{k},{l})"))?;
    }
    Ok(())
}

fn pfaffian(rng: &mut ChaCha8Rng, cases: usize) -> Result<(), String> {
    for _ in 0..cases {
        let c = random_word(rng, 10, 6);
        ensure(trace_pfaffian_check(&c), || format!("{c:?}"))?;
    }
    Ok(())
}

fn presentations(rng: &mut ChaCha8Rng, cases: usize) -> Result<(), String> {
    for _ in 0..cases {
        let a = random_rs(rng, 30);
        if a.is_pm_identity() {
            continue;
        }
        let p = minimal_presentation(&a).map_err(|e| format!("{a}: {e}"))?;
        ensure(psl_eq(&m_word(&p.word), &a), || format!("{a}: word does not present it"))?;
        ensure(is_minimal(&p.word), || format!("{a}: {:?} is not minimal", p.word))?;
        let again = minimal_presentation(&m_word(&p.word)).map_err(|e| e.to_string())?;
        ensure(again.word == p.word, || format!("{a}: not idempotent"))?;
        ensure(reduce_word(&p.word).0 == p.word, || format!("{a}: reducible output"))?;
    }
    Ok(())
}

fn classes(rng: &mut ChaCha8Rng, cases: usize) -> Result<(), String> {
    let mut done = 0;
    while done < cases {
        let a = random_rs(rng, 30);
        if a.trace().abs() <= Int::from(2) {
            continue;
        }
        let r = conjugacy_class_rational(&a).map_err(|e| e.to_string())?;
        let s = conjugacy_class_surd(&a).map_err(|e| e.to_string())?;
        ensure(r == s, || format!("{a}: {r} vs {s}"))?;
        let g = random_rs(rng, 10);
        let b = &(&g * &a) * &g.inverse();
        ensure(conjugacy_class_rational(&b).as_ref() == Ok(&r), || format!("{a} conjugated by {g}"))?;
        done += 1;
    }
    Ok(())
}

fn triangulations(rng: &mut ChaCha8Rng, cases: usize) -> Result<(), String> {
    let pools: Vec<Vec<Vec<Int>>> =
        (3..=10).map(|n| enumerate_triangulations(n).unwrap().iter().map(quiddity_of::<Int>).collect()).collect();
    for _ in 0..cases {
        let pool = &pools[rng.gen_range(0..pools.len())];
        let q = &pool[rng.gen_range(0..pool.len())];
        ensure(classify_id(q) == IdClass::MinusId, || format!("{q:?}: sign"))?;
        let d = reconstruct_triangulation(q).map_err(|e| format!("{q:?}: {e}"))?;
        ensure(quiddity_of::<Int>(&d) == *q, || format!("{q:?}: reconstruction"))?;
        let w = walk_from_word(q).map_err(|e| format!("{q:?}: {e}"))?;
        ensure(quiddity_from_walk(&w).as_ref() == Ok(q), || format!("{q:?}: walk round trip"))?;
        let l = labeling_from_word(q, Symmetry::Symmetric).map_err(|e| format!("{q:?}: {e}"))?;
        ensure(verify_pp(&l), || format!("{q:?}: Ptolemy relations"))?;
    }
    Ok(())
}

fn farey_polygons(rng: &mut ChaCha8Rng, cases: usize) -> Result<(), String> {
    for _ in 0..cases {
        let s: i64 = rng.gen_range(1..5_000);
        let r: i64 = s + rng.gen_range(1..5_000);
        let x = normalize(Int::from(r), Int::from(s)).map_err(|e| e.to_string())?;
        let t = t_rs(&x).map_err(|e| e.to_string())?;
        ensure(t.triangulation.check(), || format!("{x}: labels"))?;
        ensure(classify_id(&t.quiddity) == IdClass::MinusId, || format!("{x}: quiddity sign"))?;
        ensure(t.a_data == expand_regular(&x).unwrap(), || format!("{x}: regular expansion"))?;
    }
    Ok(())
}

fn census_rows(_: &mut ChaCha8Rng, _: usize) -> Result<(), String> {
    let rows = census(8).map_err(|e| e.to_string())?;
    for r in &rows {
        let failed: Vec<&str> = r.checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect();
        ensure(failed.is_empty(), || format!("n={}: {}", r.n, failed.join(", ")))?;
    }
    ensure(classify_id(&ints(&[1, 1, 1])) == IdClass::MinusId, || "triangle".into())
}

pub fn run(seed: u64, cases: usize) -> Report {
    let checks: [(&str, Check); 9] = [
        ("continued fraction expansions", expansions),
        ("surd expansions", surds),
        ("Euler identity", euler),
        ("continuant determinants", pfaffian),
        ("minimal presentations", presentations),
        ("conjugacy classes", classes),
        ("triangulation quiddities", triangulations),
        ("Farey polygons", farey_polygons),
        ("census cross-checks", census_rows),
    ];
    let mut lines = Vec::new();
    let mut results = Vec::new();
    let mut failed = false;
    for (k, (name, check)) in checks.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
        let t = Instant::now();
        let outcome = check(&mut rng, cases);
        let ms = t.elapsed().as_millis();
        match &outcome {
            Ok(()) => lines.push(format!("PASS {name} ({ms} ms)")),
            Err(why) => {
                failed = true;
                lines.push(format!("FAIL {name}: {why}"));
            }
        }
        results.push(json!({ "check": name, "passed": outcome.is_ok(), "failure": outcome.err() }));
    }
    Report::new(lines.join("\n"), json!({ "seed": seed, "cases": cases, "checks": results })).failed_if(failed)
}

//! Exhaustive census of positive solutions of `M(c) = ±Id` for small `n`,
//! cross-checked against the dissection, walk and labeling modules.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::dissect::{dissection_sign, enumerate_3d, enumerate_triangulations, quiddity_of};
use crate::fareywalk::{farey_triangulate, quiddity_from_walk, walk_from_word, walk_polygon};
use crate::modmat::{classify_id, IdClass, Mat2};
use crate::ptolemy::{fill_labeling, labeling_from_word, verify_pp, Symmetry};
use crate::{Error, Result, Scalar};

/// Largest `n` accepted by [`census`].
pub const CENSUS_MAX_N: usize = 9;

/// Largest `n` for which the labeling and polygon checks run.
pub const CENSUS_HEAVY_MAX_N: usize = 8;

/// Per-`n` census summary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    pub minus_id: usize,
    pub plus_id: usize,
    /// Total sum to `(MinusId count, PlusId count)`.
    pub levels: BTreeMap<usize, (usize, usize)>,
    pub triangulations: usize,
    pub dissections_3d: usize,
    /// Named cross-checks with their verdicts; skipped checks are absent.
    pub checks: Vec<(String, bool)>,
}

impl CensusRow {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// All words of length `n` with entries `>= 1` and sum `<= max_sum` for which
/// `M(c) = ±Id`, sorted lexicographically.
pub fn solutions<T: Scalar>(n: usize, max_sum: usize) -> Vec<(Vec<T>, IdClass)> {
    if n == 0 || max_sum < n {
        return Vec::new();
    }
    let firsts: Vec<usize> = (1..=max_sum - (n - 1)).collect();
    let mut out: Vec<(Vec<T>, IdClass)> = firsts
        .into_par_iter()
        .flat_map_iter(|c0| {
            let mut found = Vec::new();
            let mut word = vec![c0];
            let m = Mat2::<T>::identity().times_m(&T::from_int(c0 as i64));
            dfs(n, max_sum - c0, &m, &mut word, &mut found);
            found
        })
        .collect();
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

fn dfs<T: Scalar>(n: usize, budget: usize, m: &Mat2<T>, word: &mut Vec<usize>, out: &mut Vec<(Vec<T>, IdClass)>) {
    if word.len() == n {
        let class = crate::modmat::classify_matrix(m);
        if class != IdClass::Neither {
            out.push((word.iter().map(|&c| T::from_int(c as i64)).collect(), class));
        }
        return;
    }
    let reserve = n - word.len() - 1;
    for c in 1..=budget - reserve {
        let next = m.times_m(&T::from_int(c as i64));
        word.push(c);
        dfs(n, budget - c, &next, word, out);
        word.pop();
    }
}

/// Census row for a single `n`.
pub fn census_row(n: usize) -> Result<CensusRow> {
    if !(3..=CENSUS_MAX_N).contains(&n) {
        return Err(Error::OutOfRange(format!("census n = {n}, expected 3..={CENSUS_MAX_N}")));
    }
    let bound = 3 * n - 6;
    let sols = solutions::<i64>(n, 3 * n);
    let triangulations = enumerate_triangulations(n)?;
    let dissections = enumerate_3d(n)?;

    let mut levels: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    let (mut minus_id, mut plus_id) = (0, 0);
    for (w, class) in &sols {
        let sum = w.iter().sum::<i64>() as usize;
        let e = levels.entry(sum).or_default();
        if *class == IdClass::MinusId {
            minus_id += 1;
            e.0 += 1;
        } else {
            plus_id += 1;
            e.1 += 1;
        }
    }

    let mut checks = Vec::new();

    checks.push(("no solutions above 3n-6".to_string(), levels.keys().all(|&s| s <= bound)));

    let sol_set: BTreeSet<Vec<i64>> = sols.iter().map(|(w, _)| w.clone()).collect();
    let quid_set: BTreeSet<Vec<i64>> = dissections.iter().map(quiddity_of::<i64>).collect();
    checks.push(("solutions equal 3d-dissection quiddities".to_string(), sol_set == quid_set));

    let parity_ok = dissections.iter().all(|d| dissection_sign(d).ok() == Some(classify_id(&quiddity_of::<i64>(d))));
    checks.push(("sign matches even-cell parity".to_string(), parity_ok));

    let level_ok = sols.iter().all(|(w, class)| {
        let drop = bound as i64 - w.iter().sum::<i64>();
        drop % 6 == 0 && ((drop / 6) % 2 == 0) == (*class == IdClass::MinusId)
    });
    checks.push(("level formula".to_string(), level_ok));

    let top = levels.get(&bound).map(|l| l.0).unwrap_or(0);
    checks.push(("totally positive count equals triangulations".to_string(), top == triangulations.len()));

    let walk_ok = sols
        .par_iter()
        .all(|(w, _)| walk_from_word(w).and_then(|walk| quiddity_from_walk(&walk)).map(|q| q == *w).unwrap_or(false));
    checks.push(("walk round trip".to_string(), walk_ok));

    if n <= CENSUS_HEAVY_MAX_N {
        let farey_ok = sols.par_iter().filter(|(w, _)| w.iter().sum::<i64>() as usize == bound).all(|(w, _)| {
            walk_from_word(w)
                .and_then(|walk| walk_polygon(&walk))
                .and_then(|p| farey_triangulate(&p))
                .map(|d| quiddity_of::<i64>(&d) == *w)
                .unwrap_or(false)
        });
        checks.push(("farey triangulation coincidence".to_string(), farey_ok));

        let ptolemy_ok = sols.par_iter().all(|(w, class)| {
            let wb: Vec<crate::Int> = w.iter().map(|&c| c.into()).collect();
            let sym = labeling_from_word(&wb, Symmetry::Symmetric).map(|l| verify_pp(&l)).unwrap_or(false);
            let skew = labeling_from_word(&wb, Symmetry::Skew).map(|l| verify_pp(&l)).unwrap_or(false);
            sym == (*class == IdClass::MinusId) && skew == (*class == IdClass::PlusId)
        });
        checks.push(("labeling mode matches sign".to_string(), ptolemy_ok));

        let fill_ok = sols.par_iter().all(|(w, class)| {
            let wb: Vec<crate::Int> = w.iter().map(|&c| c.into()).collect();
            let expected = if *class == IdClass::MinusId { Symmetry::Symmetric } else { Symmetry::Skew };
            fill_labeling(&wb).map(|l| l.mode() == expected).unwrap_or(false)
        });
        checks.push(("labeling filling succeeds".to_string(), fill_ok));
    }

    Ok(CensusRow {
        n,
        minus_id,
        plus_id,
        levels,
        triangulations: triangulations.len(),
        dissections_3d: dissections.len(),
        checks,
    })
}

/// Census rows for `n = 3..=n_max`.
pub fn census(n_max: usize) -> Result<Vec<CensusRow>> {
    if !(3..=CENSUS_MAX_N).contains(&n_max) {
        return Err(Error::OutOfRange(format!("census n_max = {n_max}, expected 3..={CENSUS_MAX_N}")));
    }
    (3..=n_max).map(census_row).collect()
}

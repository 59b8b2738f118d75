//! Polygon dissections, quiddities, surgeries on words, triangulation
//! reconstruction and exhaustive enumerators.

use std::collections::{BTreeMap, BTreeSet};

use crate::modmat::{classify_id, IdClass};
use crate::{Error, Result, Scalar};

/// Convex `n`-gon with vertices `0..n` in cyclic order and a set of pairwise
/// noncrossing diagonals `(i, j)`, `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dissection {
    n: usize,
    diagonals: BTreeSet<(usize, usize)>,
}

/// Word surgery located by the index of its first `1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Surgery {
    /// `(x, 1, y) -> (x-1, y-1)` for `x, y >= 2`; keeps `M`.
    Collapse(usize),
    /// `(x, 1, 1, y) -> (x+y-1)`; negates `M`.
    Merge(usize),
}

/// Total quiddity sum together with the cell census of a 3d-dissection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumDecomposition<T> {
    /// Sum of the quiddity.
    pub sum: T,
    /// `k -> N_k`, the number of cells with `3k` vertices.
    pub cell_counts: BTreeMap<usize, usize>,
    /// `3n - 6 * sum_k (k-1) N_k - 6`.
    pub predicted: T,
}

impl<T: Scalar> SumDecomposition<T> {
    pub fn holds(&self) -> bool {
        self.sum == self.predicted
    }
}

fn crosses(x: (usize, usize), y: (usize, usize)) -> bool {
    let ((i, j), (k, l)) = (x, y);
    (i < k && k < j && j < l) || (k < i && i < l && l < j)
}

impl Dissection {
    /// Validates and builds a dissection; pairs may be given in either order.
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(n: usize, diagonals: I) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidDissection(format!("polygon needs at least 3 vertices, got {n}")));
        }
        let mut set = BTreeSet::new();
        for (x, y) in diagonals {
            let (i, j) = (x.min(y), x.max(y));
            if j >= n {
                return Err(Error::InvalidDissection(format!("vertex {j} out of range for n={n}")));
            }
            if j - i < 2 || (i == 0 && j == n - 1) {
                return Err(Error::InvalidDissection(format!("({i},{j}) is a side, not a diagonal")));
            }
            set.insert((i, j));
        }
        let v: Vec<_> = set.iter().copied().collect();
        for (a, &x) in v.iter().enumerate() {
            for &y in &v[a + 1..] {
                if crosses(x, y) {
                    return Err(Error::InvalidDissection(format!("diagonals {x:?} and {y:?} cross")));
                }
            }
        }
        Ok(Dissection { n, diagonals: set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &BTreeSet<(usize, usize)> {
        &self.diagonals
    }

    /// Full triangulation: exactly `n - 3` diagonals.
    pub fn is_triangulation(&self) -> bool {
        self.diagonals.len() == self.n - 3
    }
}

/// Cells of the dissection, each as its ascending vertex cycle, sorted.
pub fn cells_of(d: &Dissection) -> Vec<Vec<usize>> {
    let mut cells: Vec<Vec<usize>> = vec![(0..d.n).collect()];
    for &(i, j) in &d.diagonals {
        let pos = cells
            .iter()
            .position(|c| c.contains(&i) && c.contains(&j))
            .expect("a noncrossing diagonal lies inside one cell");
        let cell = cells.swap_remove(pos);
        let inner: Vec<usize> = cell.iter().copied().filter(|&v| v >= i && v <= j).collect();
        let outer: Vec<usize> = cell.iter().copied().filter(|&v| v <= i || v >= j).collect();
        cells.push(inner);
        cells.push(outer);
    }
    cells.sort();
    cells
}

/// Number of cells incident to each vertex.
pub fn quiddity_of<T: Scalar>(d: &Dissection) -> Vec<T> {
    let mut counts = vec![0usize; d.n];
    for cell in cells_of(d) {
        for v in cell {
            counts[v] += 1;
        }
    }
    counts.into_iter().map(|k| T::from_usize(k).expect("count fits")).collect()
}

/// True iff every cell has a multiple of 3 vertices.
pub fn is_3d(d: &Dissection) -> bool {
    cells_of(d).iter().all(|c| c.len() % 3 == 0)
}

fn first_bad_cell(d: &Dissection) -> Option<usize> {
    cells_of(d).iter().map(|c| c.len()).find(|k| k % 3 != 0)
}

/// `MinusId` iff the number of even-sized cells is even.
pub fn dissection_sign(d: &Dissection) -> Result<IdClass> {
    if let Some(k) = first_bad_cell(d) {
        return Err(Error::Not3d(k));
    }
    let even = cells_of(d).iter().filter(|c| c.len() % 2 == 0).count();
    Ok(if even % 2 == 0 { IdClass::MinusId } else { IdClass::PlusId })
}

/// Quiddity sum and the cell census `N_k` of a 3d-dissection.
pub fn total_sum_decomposition<T: Scalar>(d: &Dissection) -> Result<SumDecomposition<T>> {
    if let Some(k) = first_bad_cell(d) {
        return Err(Error::Not3d(k));
    }
    let sum = quiddity_of::<T>(d).into_iter().fold(T::zero(), |a, b| a + b);
    let mut cell_counts = BTreeMap::new();
    for c in cells_of(d) {
        *cell_counts.entry(c.len() / 3).or_insert(0usize) += 1;
    }
    let drop: usize = cell_counts.iter().map(|(k, nk)| (k - 1) * nk).sum();
    let predicted = T::from_usize(3 * d.n).unwrap() - T::from_usize(6 * drop).unwrap() - T::from_int(6);
    Ok(SumDecomposition { sum, cell_counts, predicted })
}

/// All surgery sites of `c`, ordered left to right.
pub fn surgery_sites<T: Scalar>(c: &[T]) -> Vec<Surgery> {
    let two = T::from_int(2);
    let mut out = Vec::new();
    for i in 1..c.len().saturating_sub(1) {
        if !c[i].is_one() {
            continue;
        }
        if c[i + 1].is_one() {
            if i + 2 < c.len() {
                out.push(Surgery::Merge(i));
            }
        } else if c[i - 1] >= two && c[i + 1] >= two {
            out.push(Surgery::Collapse(i));
        }
    }
    out
}

/// Applies one surgery; returns the new word and whether `M` changed sign.
pub fn apply_surgery<T: Scalar>(c: &[T], s: Surgery) -> (Vec<T>, bool) {
    let mut out = Vec::with_capacity(c.len());
    match s {
        Surgery::Collapse(i) => {
            out.extend_from_slice(&c[..i - 1]);
            out.push(c[i - 1].clone() - T::one());
            out.push(c[i + 1].clone() - T::one());
            out.extend_from_slice(&c[i + 2..]);
            (out, false)
        }
        Surgery::Merge(i) => {
            out.extend_from_slice(&c[..i - 1]);
            out.push(c[i - 1].clone() + c[i + 2].clone() - T::one());
            out.extend_from_slice(&c[i + 3..]);
            (out, true)
        }
    }
}

/// Applies surgeries leftmost-first until none applies. Returns the reduced
/// word and the number of sign flips: `M(c) = (-1)^flips M(reduced)`.
pub fn reduce_word<T: Scalar>(c: &[T]) -> (Vec<T>, usize) {
    let mut cur = c.to_vec();
    let mut flips = 0;
    while let Some(&s) = surgery_sites(&cur).first() {
        let (next, flipped) = apply_surgery(&cur, s);
        flips += usize::from(flipped);
        cur = next;
    }
    (cur, flips)
}

/// Triangulation with quiddity `q`, built by cutting the leftmost ear.
pub fn reconstruct_triangulation<T: Scalar>(q: &[T]) -> Result<Dissection> {
    let n = q.len();
    let fail = |why: &str| Error::NotTotallyPositive(why.to_string());
    if n < 3 {
        return Err(fail("fewer than 3 entries"));
    }
    if q.iter().any(|x| !x.is_positive()) {
        return Err(fail("nonpositive entry"));
    }
    let sum = q.iter().cloned().fold(T::zero(), |a, b| a + b);
    if sum != T::from_usize(3 * n - 6).unwrap() {
        return Err(fail("sum differs from 3n-6"));
    }
    if classify_id(q) != IdClass::MinusId {
        return Err(fail("M(q) is not -Id"));
    }
    let mut verts: Vec<(usize, T)> = q.iter().cloned().enumerate().collect();
    let mut diagonals = Vec::new();
    while verts.len() > 3 {
        let m = verts.len();
        let j = verts.iter().position(|(_, v)| v.is_one()).ok_or_else(|| fail("no ear"))?;
        let (prev, next) = ((j + m - 1) % m, (j + 1) % m);
        diagonals.push((verts[prev].0, verts[next].0));
        for k in [prev, next] {
            verts[k].1 = verts[k].1.clone() - T::one();
            if !verts[k].1.is_positive() {
                return Err(fail("ear cut left a nonpositive entry"));
            }
        }
        verts.remove(j);
    }
    let d = Dissection::new(n, diagonals).map_err(|_| fail("ear cuts do not form a triangulation"))?;
    if quiddity_of::<T>(&d) != q {
        return Err(fail("reconstruction does not reproduce the quiddity"));
    }
    Ok(d)
}

fn dissect_interval(lo: usize, hi: usize, allowed: &dyn Fn(usize) -> bool) -> Vec<Vec<(usize, usize)>> {
    let inner = hi - lo - 1;
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << inner) {
        let size = mask.count_ones() as usize + 2;
        if !allowed(size) {
            continue;
        }
        let mut cell = vec![lo];
        cell.extend((0..inner).filter(|b| mask >> b & 1 == 1).map(|b| lo + 1 + b));
        cell.push(hi);
        let mut partial: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
        for w in cell.windows(2) {
            let (u, v) = (w[0], w[1]);
            if v - u < 2 {
                continue;
            }
            let subs = dissect_interval(u, v, allowed);
            let mut next = Vec::with_capacity(partial.len() * subs.len());
            for p in &partial {
                for s in &subs {
                    let mut q = p.clone();
                    q.push((u, v));
                    q.extend_from_slice(s);
                    next.push(q);
                }
            }
            partial = next;
        }
        out.extend(partial);
    }
    out
}

fn enumerate_with(n: usize, allowed: &dyn Fn(usize) -> bool) -> Result<Vec<Dissection>> {
    if !(3..=12).contains(&n) {
        return Err(Error::OutOfRange(format!("enumeration supports 3 <= n <= 12, got {n}")));
    }
    let mut out: Vec<Dissection> = dissect_interval(0, n - 1, allowed)
        .into_iter()
        .map(|diags| Dissection::new(n, diags).expect("enumerated diagonals are noncrossing"))
        .collect();
    out.sort();
    Ok(out)
}

/// Every triangulation of the `n`-gon, `3 <= n <= 12`, sorted.
pub fn enumerate_triangulations(n: usize) -> Result<Vec<Dissection>> {
    enumerate_with(n, &|k| k == 3)
}

/// Every 3d-dissection of the `n`-gon, `3 <= n <= 12`, sorted.
pub fn enumerate_3d(n: usize) -> Result<Vec<Dissection>> {
    enumerate_with(n, &|k| k % 3 == 0)
}

/// Lexicographically least rotation.
pub fn canonical_rotation<T: Scalar>(q: &[T]) -> Vec<T> {
    (0..q.len().max(1)).map(|r| rotate(q, r)).min().unwrap_or_default()
}

/// `q` rotated left by `r` places.
pub fn rotate<T: Clone>(q: &[T], r: usize) -> Vec<T> {
    if q.is_empty() {
        return Vec::new();
    }
    let r = r % q.len();
    q[r..].iter().chain(&q[..r]).cloned().collect()
}

/// Equality up to cyclic rotation.
pub fn eq_up_to_rotation<T: Scalar>(x: &[T], y: &[T]) -> bool {
    x.len() == y.len() && canonical_rotation(x) == canonical_rotation(y)
}

/// Equality up to rotation and reflection.
pub fn eq_up_to_dihedral<T: Scalar>(x: &[T], y: &[T]) -> bool {
    let rev: Vec<T> = y.iter().rev().cloned().collect();
    eq_up_to_rotation(x, y) || eq_up_to_rotation(x, &rev)
}

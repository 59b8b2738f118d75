//! Walks in the Farey graph, Farey polygons and their triangulations, the
//! Stern–Brocot construction of `T_{r/s}`, and quiddities read off walks.

use std::collections::{BTreeMap, BTreeSet};

use crate::dissect::{cells_of, quiddity_of, Dissection};
use crate::modmat::{classify_id, IdClass};
use crate::numcore::{is_farey_edge, mediant, ProjRational, SignedPair};
use crate::{Error, Result, Scalar};

/// Closing rule of a walk: point `N + i` is `+point i` or `-point i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Periodicity {
    Periodic,
    Antiperiodic,
}

/// Finite window of an (anti)periodic sequence of signed pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WalkSeq<T> {
    pub points: Vec<SignedPair<T>>,
    pub periodicity: Periodicity,
}

/// Outcome of [`classify_walk`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WalkClass {
    /// Positive walk tracing a Farey polygon once, from `1/0` down to `0/1`.
    FareyPolygon,
    /// Every consecutive determinant equals `+1`.
    PositiveWalk,
    /// Consecutive points are Farey neighbours but orientations mix.
    Walk,
    /// Some consecutive pair is not a Farey edge.
    Invalid,
}

/// Strictly decreasing Farey-adjacent vertices from `1/0` to `0/1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FareyPolygon<T> {
    vertices: Vec<ProjRational<T>>,
}

/// Dissection whose vertices carry projective labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTriangulation<T> {
    pub base: Dissection,
    pub labels: Vec<ProjRational<T>>,
}

/// The triangulated polygon `T_{r/s}` with its bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trs<T> {
    pub triangulation: LabeledTriangulation<T>,
    /// Even-length regular expansion read from the descent turns.
    pub a_data: Vec<T>,
    /// Quiddity in polygon order, starting at the vertex `1/0`.
    pub quiddity: Vec<T>,
    /// Polygon index of the vertex labeled `r/s`.
    pub k: usize,
}

impl<T: Scalar> WalkSeq<T> {
    pub fn new(points: Vec<SignedPair<T>>, periodicity: Periodicity) -> Self {
        WalkSeq { points, periodicity }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Point at any integer index of the (anti)periodic extension.
    pub fn point(&self, i: isize) -> SignedPair<T> {
        let n = self.points.len() as isize;
        let (lap, r) = (i.div_euclid(n), i.rem_euclid(n) as usize);
        let p = &self.points[r];
        if self.periodicity == Periodicity::Antiperiodic && lap % 2 != 0 {
            p.negated()
        } else {
            p.clone()
        }
    }

    /// `det(p_i, p_{i+1})` for `i = 0..N`, including the closing step.
    pub fn determinants(&self) -> Vec<T> {
        (0..self.len() as isize).map(|i| self.point(i).cross(&self.point(i + 1))).collect()
    }
}

impl<T: Scalar> FareyPolygon<T> {
    /// Validates the polygon conditions.
    pub fn new(vertices: Vec<ProjRational<T>>) -> Result<Self> {
        let n = vertices.len();
        let fail = |s: String| Err(Error::NotAPolygon(s));
        if n < 3 {
            return fail(format!("needs at least 3 vertices, got {n}"));
        }
        if !vertices[0].is_infinite() {
            return fail("first vertex must be 1/0".into());
        }
        if vertices[n - 1] != ProjRational::integer(T::zero()) {
            return fail("last vertex must be 0/1".into());
        }
        for i in 1..n {
            if vertices[i - 1] <= vertices[i] {
                return fail(format!("vertices {} and {} are not decreasing", vertices[i - 1], vertices[i]));
            }
            if !is_farey_edge(&vertices[i - 1], &vertices[i]) {
                return fail(format!("{} and {} are not Farey neighbours", vertices[i - 1], vertices[i]));
            }
        }
        Ok(FareyPolygon { vertices })
    }

    pub fn vertices(&self) -> &[ProjRational<T>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertex `i` as a signed pair with the antiperiodic extension
    /// `v_{-1} = -v_{n-1}` and `v_n = -v_0`.
    fn extended(&self, i: isize) -> SignedPair<T> {
        let n = self.len() as isize;
        let p = self.vertices[i.rem_euclid(n) as usize].to_pair();
        if i.div_euclid(n) % 2 != 0 {
            p.negated()
        } else {
            p
        }
    }
}

/// Walk `p_j = c_j p_{j-1} - p_{j-2}` from `p_{-1} = 0/-1`, `p_0 = 1/0`;
/// returns `p_0, ..., p_{n-1}`.
pub fn walk_from_word<T: Scalar>(c: &[T]) -> Result<WalkSeq<T>> {
    let periodicity = match classify_id(c) {
        IdClass::MinusId => Periodicity::Antiperiodic,
        IdClass::PlusId => Periodicity::Periodic,
        IdClass::Neither => return Err(Error::NotASolution),
    };
    let mut prev = SignedPair::new_unchecked(T::zero(), -T::one());
    let mut cur = SignedPair::new_unchecked(T::one(), T::zero());
    let mut points = Vec::with_capacity(c.len());
    for ci in c {
        points.push(cur.clone());
        let next = SignedPair::new_unchecked(
            ci.clone() * cur.num().clone() - prev.num().clone(),
            ci.clone() * cur.den().clone() - prev.den().clone(),
        );
        prev = cur;
        cur = next;
    }
    Ok(WalkSeq { points, periodicity })
}

fn is_polygon_shaped<T: Scalar>(w: &WalkSeq<T>) -> bool {
    let v: Vec<ProjRational<T>> = w.points.iter().map(|p| p.reduce()).collect();
    FareyPolygon::new(v).is_ok()
}

/// Classifies a sequence of signed pairs as a walk.
pub fn classify_walk<T: Scalar>(w: &WalkSeq<T>) -> WalkClass {
    if w.is_empty() {
        return WalkClass::Invalid;
    }
    let dets = w.determinants();
    if dets.iter().any(|d| !d.abs().is_one()) {
        return WalkClass::Invalid;
    }
    if !dets.iter().all(|d| d.is_one()) {
        return WalkClass::Walk;
    }
    if is_polygon_shaped(w) {
        WalkClass::FareyPolygon
    } else {
        WalkClass::PositiveWalk
    }
}

/// The Farey polygon traced by a walk of class `FareyPolygon`.
pub fn walk_polygon<T: Scalar>(w: &WalkSeq<T>) -> Result<FareyPolygon<T>> {
    if classify_walk(w) != WalkClass::FareyPolygon {
        return Err(Error::NotAPolygon("walk does not trace a Farey polygon".into()));
    }
    FareyPolygon::new(w.points.iter().map(|p| p.reduce()).collect())
}

/// Triangulation by every Farey edge joining two non-consecutive vertices.
pub fn farey_triangulate<T: Scalar>(p: &FareyPolygon<T>) -> Result<Dissection> {
    let n = p.len();
    let v = p.vertices();
    let mut diagonals = Vec::new();
    for i in 0..n {
        for j in i + 2..n {
            if !(i == 0 && j == n - 1) && is_farey_edge(&v[i], &v[j]) {
                diagonals.push((i, j));
            }
        }
    }
    let d = Dissection::new(n, diagonals).map_err(|e| Error::NotAPolygon(e.to_string()))?;
    if !d.is_triangulation() {
        return Err(Error::NotAPolygon("Farey edges do not triangulate the polygon".into()));
    }
    Ok(d)
}

/// `c_i = (r_{i-1} + r_{i+1}) / r_i = (s_{i-1} + s_{i+1}) / s_i`.
pub fn index_of_polygon<T: Scalar>(p: &FareyPolygon<T>) -> Result<Vec<T>> {
    (0..p.len() as isize)
        .map(|i| {
            let (a, b, m) = (p.extended(i - 1), p.extended(i + 1), p.extended(i));
            let rs = a.num().clone() + b.num().clone();
            let ss = a.den().clone() + b.den().clone();
            let bad = Error::NonIntegerIndex(i as usize);
            let c = if !m.num().is_zero() {
                let (c, rem) = rs.div_rem(m.num());
                if !rem.is_zero() {
                    return Err(bad);
                }
                c
            } else {
                let (c, rem) = ss.div_rem(m.den());
                if !rem.is_zero() {
                    return Err(bad);
                }
                c
            };
            if c.clone() * m.num().clone() != rs || c.clone() * m.den().clone() != ss {
                return Err(bad);
            }
            Ok(c)
        })
        .collect()
}

/// `det(p_{j-1}, p_{j+1})` for every `j`; equals `c_j` on a walk of a word.
pub fn index_by_determinant<T: Scalar>(w: &WalkSeq<T>) -> Vec<T> {
    (0..w.len() as isize).map(|j| w.point(j - 1).cross(&w.point(j + 1))).collect()
}

/// Recovers the word of a positive walk: `c_j` is the number of Farey
/// triangles, spanned by the visited points, that meet `p_j` on the positive
/// side of the walk.
pub fn quiddity_from_walk<T: Scalar>(w: &WalkSeq<T>) -> Result<Vec<T>> {
    match classify_walk(w) {
        WalkClass::FareyPolygon | WalkClass::PositiveWalk => {}
        other => return Err(Error::NotPositive(format!("walk classifies as {other:?}"))),
    }
    if index_by_determinant(w).iter().any(|c| !c.is_positive()) {
        return Err(Error::NotPositive("walk turns back on itself".into()));
    }
    // Cyclic order of the visited points: 1/0 first, then decreasing.
    let distinct: BTreeSet<ProjRational<T>> = w.points.iter().map(|p| p.reduce()).collect();
    let order: Vec<ProjRational<T>> = distinct.into_iter().rev().collect();
    let m = order.len();
    if m < 3 {
        return Err(Error::NotPositive("walk visits fewer than 3 points".into()));
    }
    let idx: BTreeMap<ProjRational<T>, usize> = order.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let adj: Vec<Vec<bool>> =
        (0..m).map(|a| (0..m).map(|b| a != b && is_farey_edge(&order[a], &order[b])).collect()).collect();
    let mut out = Vec::with_capacity(w.len());
    for j in 0..w.len() as isize {
        let cur = idx[&w.point(j).reduce()];
        let back = idx[&w.point(j - 1).reduce()];
        let fwd = idx[&w.point(j + 1).reduce()];
        let mut seen = 0usize;
        let mut t = fwd;
        loop {
            if adj[cur][t] {
                seen += 1;
            }
            if t == back {
                break;
            }
            t = (t + 1) % m;
        }
        out.push(T::from_usize(seen - 1).expect("count fits"));
    }
    Ok(out)
}

/// Vertices of the Farey triangles crossed on the way from the root triangle
/// `(0/1, 1/1, 1/0)` down to `x > 0`, in polygon order, and the turn sequence
/// (`true` when `x` lies right of the mediant).
fn stern_brocot_descent<T: Scalar>(x: &ProjRational<T>) -> (Vec<ProjRational<T>>, Vec<bool>) {
    let mut lo = ProjRational::integer(T::zero());
    let mut hi = ProjRational::infinity();
    let mut points = BTreeSet::from([lo.clone(), hi.clone()]);
    let mut turns = Vec::new();
    loop {
        let m = mediant(&lo, &hi);
        points.insert(m.clone());
        if m == *x {
            break;
        }
        if *x > m {
            turns.push(true);
            lo = m;
        } else {
            turns.push(false);
            hi = m;
        }
    }
    (points.into_iter().rev().collect(), turns)
}

/// Farey polygon spanned by the descents to every point of `targets`.
pub fn descent_polygon<T: Scalar>(targets: &[ProjRational<T>]) -> Result<FareyPolygon<T>> {
    let mut all = BTreeSet::new();
    for x in targets {
        if x.is_infinite() || !x.num().is_positive() {
            return Err(Error::OutOfRange(format!("{x} must be a positive rational")));
        }
        all.extend(stern_brocot_descent(x).0);
    }
    FareyPolygon::new(all.into_iter().rev().collect())
}

/// Labels of a triangulated polygon propagated from `1/0` at vertex 0 and
/// `0/1` at vertex `n-1`: each triangle's third vertex receives the Farey
/// sum of the other two. `None` if some triangle cannot be reached.
pub fn propagate_labels<T: Scalar>(base: &Dissection) -> Option<Vec<ProjRational<T>>> {
    let n = base.n();
    let mut labels: Vec<Option<ProjRational<T>>> = vec![None; n];
    labels[0] = Some(ProjRational::infinity());
    labels[n - 1] = Some(ProjRational::integer(T::zero()));
    let cells = cells_of(base);
    if cells.iter().any(|c| c.len() != 3) {
        return None;
    }
    let mut progress = true;
    while progress {
        progress = false;
        for c in &cells {
            let known: Vec<usize> = c.iter().copied().filter(|&v| labels[v].is_some()).collect();
            if known.len() == 2 {
                let third = *c.iter().find(|v| !known.contains(v)).unwrap();
                let s = mediant(labels[known[0]].as_ref().unwrap(), labels[known[1]].as_ref().unwrap());
                labels[third] = Some(s);
                progress = true;
            }
        }
    }
    labels.into_iter().collect()
}

impl<T: Scalar> LabeledTriangulation<T> {
    /// Every triangle has pairwise Farey-adjacent labels, one of which is the
    /// Farey sum of the other two.
    pub fn check(&self) -> bool {
        if self.labels.len() != self.base.n() || !self.base.is_triangulation() {
            return false;
        }
        cells_of(&self.base).iter().all(|c| {
            let l: Vec<&ProjRational<T>> = c.iter().map(|&v| &self.labels[v]).collect();
            let edges = is_farey_edge(l[0], l[1]) && is_farey_edge(l[1], l[2]) && is_farey_edge(l[0], l[2]);
            let sum = (0..3).any(|i| *l[i] == mediant(l[(i + 1) % 3], l[(i + 2) % 3]));
            edges && sum
        })
    }
}

/// The triangulated polygon `T_{r/s}` for `r/s > 1`.
pub fn t_rs<T: Scalar>(x: &ProjRational<T>) -> Result<Trs<T>> {
    if x.is_infinite() || x.num() <= x.den() {
        return Err(Error::OutOfRange(format!("{x} must be a finite rational > 1")));
    }
    let (vertices, turns) = stern_brocot_descent(x);
    let mut runs: Vec<usize> = Vec::new();
    for (i, t) in turns.iter().enumerate() {
        if i > 0 && turns[i - 1] == *t {
            *runs.last_mut().unwrap() += 1;
        } else {
            runs.push(1);
        }
    }
    // The final triangle adds one more step to the regular expansion.
    if runs.len() % 2 == 1 {
        runs.push(1);
    } else {
        *runs.last_mut().unwrap() += 1;
    }
    let a_data = runs.into_iter().map(|r| T::from_usize(r).unwrap()).collect();
    let polygon = FareyPolygon::new(vertices)?;
    let base = farey_triangulate(&polygon)?;
    let quiddity = quiddity_of(&base);
    let k = polygon.vertices().iter().position(|v| v == x).expect("target is a vertex");
    Ok(Trs { triangulation: LabeledTriangulation { base, labels: polygon.vertices }, a_data, quiddity, k })
}

/// Every Farey polygon with `n` vertices, by inserting Farey sums into edges.
pub fn enumerate_farey_polygons<T: Scalar>(n: usize) -> Vec<FareyPolygon<T>> {
    let mut level: BTreeSet<Vec<ProjRational<T>>> =
        BTreeSet::from([vec![ProjRational::infinity(), ProjRational::integer(T::zero())]]);
    for _ in 2..n {
        let mut next = BTreeSet::new();
        for poly in &level {
            for i in 0..poly.len() - 1 {
                let mut p = poly.clone();
                p.insert(i + 1, mediant(&poly[i], &poly[i + 1]));
                next.insert(p);
            }
        }
        level = next;
    }
    level.into_iter().filter_map(|v| FareyPolygon::new(v).ok()).collect()
}

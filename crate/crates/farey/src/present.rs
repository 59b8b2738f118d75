//! Minimal positive words `A = M(c1,...,ck)` in PSL(2,Z), conjugacy classes,
//! matrix dissections and the triangulated polygon `T_A`.

use std::fmt;

use crate::cfrac::surd_negative_cf;
use crate::dissect::{canonical_rotation, enumerate_3d, quiddity_of, reduce_word, Dissection};
use crate::fareywalk::{descent_polygon, farey_triangulate, LabeledTriangulation};
use crate::modmat::{classify_id, m_word, IdClass, Mat2};
use crate::numcore::{normalize, QuadSurd};
use crate::{Error, Result, Scalar};

/// Minimal word of a PSL element with the sign relating it to the input:
/// `M(word) = sign * A`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MinPres<T> {
    pub word: Vec<T>,
    pub sign: i8,
}

/// Conjugacy class of a hyperbolic element: a cyclic word with entries >= 2,
/// stored as its lexicographically least rotation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConjClass<T> {
    cycle: Vec<T>,
}

/// The polygon `T_A` together with the prefix read off its first vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TMatrix<T> {
    pub triangulation: LabeledTriangulation<T>,
    /// Quiddity of the whole polygon, starting at `1/0`.
    pub quiddity: Vec<T>,
    /// Number of leading vertices, ending at the vertex `b/d`.
    pub k: usize,
}

impl<T: Scalar> TMatrix<T> {
    /// Quiddity at the first `k` vertices.
    pub fn prefix(&self) -> &[T] {
        &self.quiddity[..self.k]
    }
}

impl<T: Scalar> ConjClass<T> {
    pub fn new(cycle: &[T]) -> Self {
        ConjClass { cycle: canonical_rotation(cycle) }
    }

    pub fn cycle(&self) -> &[T] {
        &self.cycle
    }
}

impl<T: Scalar> fmt::Display for ConjClass<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", crate::cfrac::format_word(&self.cycle))
    }
}

/// Blocks `k` with `A = ± R^{k1} S R^{k2} S ... R^{km} S`, obtained by the
/// centred Euclidean algorithm on the first column.
fn rs_blocks<T: Scalar>(m: &Mat2<T>) -> Vec<T> {
    let [mut a, mut b, mut c, mut d] = m.entries();
    let mut blocks = Vec::new();
    loop {
        if c.is_negative() {
            a = -a;
            b = -b;
            c = -c;
            d = -d;
        }
        if c.is_zero() {
            // ±R^{ab}, written as R^{ab} S R^0 S up to sign.
            blocks.push(a * b);
            blocks.push(T::zero());
            return blocks;
        }
        let k = a.div_ceil(&c);
        let (na, nb, nc, nd) = (c.clone(), d.clone(), k.clone() * c - a, k.clone() * d - b);
        blocks.push(k);
        a = na;
        b = nb;
        c = nc;
        d = nd;
    }
}

/// Positive word for `R^k S`: `(k)` when `k >= 1`, else `(1,1,2^{1-k},1,1)`.
fn block_word<T: Scalar>(k: &T, out: &mut Vec<T>) {
    if k.is_positive() {
        out.push(k.clone());
        return;
    }
    let twos = (T::one() - k.clone()).to_usize().expect("block exponent fits in usize");
    out.extend([T::one(), T::one()]);
    out.extend(std::iter::repeat_n(T::from_int(2), twos));
    out.extend([T::one(), T::one()]);
}

/// The unique shortest positive word presenting `A` in PSL(2,Z).
pub fn minimal_presentation<T: Scalar>(a: &Mat2<T>) -> Result<MinPres<T>> {
    if a.is_pm_identity() {
        return Err(Error::IsIdentity);
    }
    let mut raw = Vec::new();
    for k in rs_blocks(a) {
        block_word(&k, &mut raw);
    }
    let (word, _) = reduce_word(&raw);
    let m = m_word(&word);
    let sign = if m == *a {
        1
    } else {
        debug_assert!(m == -a.clone());
        -1
    };
    Ok(MinPres { word, sign })
}

/// Entries are >= 2 except possibly `c1` or `(c1,c2) = (1,1)` at the start
/// and `ck` or `(c_{k-1},ck) = (1,1)` at the end.
pub fn is_minimal<T: Scalar>(c: &[T]) -> bool {
    let k = c.len();
    c.iter().enumerate().all(|(i, x)| {
        if !x.is_positive() {
            return false;
        }
        if !x.is_one() {
            return true;
        }
        i == 0 || i + 1 == k || (i == 1 && c[0].is_one()) || (i + 2 == k && c[k - 1].is_one())
    })
}

fn hyperbolic_trace<T: Scalar>(a: &Mat2<T>) -> Result<T> {
    let t = a.trace().abs();
    if t < T::from_int(3) {
        return Err(Error::NotHyperbolic(t.to_string()));
    }
    Ok(t)
}

/// Removes cyclic surgery sites until every entry is >= 2.
fn cyclic_reduce<T: Scalar>(w: &[T]) -> Option<Vec<T>> {
    let two = T::from_int(2);
    let mut c = w.to_vec();
    'outer: loop {
        let n = c.len();
        let Some(i) = c.iter().position(|x| x.is_one()) else {
            return Some(c);
        };
        match n {
            0 | 1 => return None,
            2 => {
                // (x, 1) is conjugate to (x - 2).
                let x = c[(i + 1) % 2].clone() - two.clone();
                if !x.is_positive() {
                    return None;
                }
                c = vec![x];
                continue;
            }
            _ => {}
        }
        for i in (0..n).filter(|&j| c[j].is_one()) {
            let (p, q) = ((i + n - 1) % n, (i + 1) % n);
            if c[p] >= two && c[q] >= two {
                // (x, 1, y) -> (x-1, y-1) around the cycle.
                c[p] = c[p].clone() - T::one();
                c[q] = c[q].clone() - T::one();
                c.remove(i);
                continue 'outer;
            }
            if n >= 4 && c[q].is_one() {
                // (l, 1, 1, r) -> (l + r - 1) around the cycle.
                let (l, r) = ((i + n - 1) % n, (i + 2) % n);
                let merged = c[l].clone() + c[r].clone() - T::one();
                let mut next = vec![merged];
                next.extend((1..=n - 4).map(|t| c[(r + t) % n].clone()));
                c = next;
                continue 'outer;
            }
        }
        return None;
    }
}

/// Conjugacy class from the minimal word, reduced cyclically.
pub fn conjugacy_class_rational<T: Scalar>(a: &Mat2<T>) -> Result<ConjClass<T>> {
    let t = hyperbolic_trace(a)?;
    let w = minimal_presentation(a)?.word;
    let cycle = cyclic_reduce(&w).ok_or_else(|| Error::NotHyperbolic(t.to_string()))?;
    Ok(ConjClass::new(&cycle))
}

/// Conjugacy class from the period of the negative expansion of the
/// attractive fixed point `(a - d + sqrt(tr^2 - 4)) / (2c)`, taken for the
/// representative with positive trace. The period is repeated when `A` is a
/// proper power.
pub fn conjugacy_class_surd<T: Scalar>(a: &Mat2<T>) -> Result<ConjClass<T>> {
    let t = hyperbolic_trace(a)?;
    let b = a.sign_normalized();
    let two = T::from_int(2);
    let x = QuadSurd::new(b.a().clone() - b.d().clone(), two * b.c().clone(), t.clone() * t.clone() - T::from_int(4))?;
    let period = surd_negative_cf(&x)?.period;
    let mut cycle = period.clone();
    loop {
        let tr = m_word(&cycle).trace().abs();
        if tr == t {
            return Ok(ConjClass::new(&cycle));
        }
        if tr > t {
            return Err(Error::NotHyperbolic(t.to_string()));
        }
        cycle.extend(period.iter().cloned());
    }
}

/// Minimal word of `A` followed by the minimal word of `A^{-1}`; its matrix is
/// `±Id`, reported as the certificate.
pub fn matrix_dissection_word<T: Scalar>(a: &Mat2<T>) -> Result<(Vec<T>, IdClass)> {
    let mut w = minimal_presentation(a)?.word;
    w.extend(minimal_presentation(&a.inverse())?.word);
    let class = classify_id(&w);
    Ok((w, class))
}

/// A 3d-dissection with the given quiddity, searched exhaustively (`n <= 12`).
pub fn realize_dissection<T: Scalar>(q: &[T]) -> Result<Option<Dissection>> {
    Ok(enumerate_3d(q.len())?.into_iter().find(|d| quiddity_of::<T>(d) == q))
}

/// `T_A = T_{a/c} ∪ T_{b/d}` for `A = ±[[a,-b],[c,-d]]` with positive entries.
pub fn t_matrix<T: Scalar>(a: &Mat2<T>) -> Result<TMatrix<T>> {
    let shape = |m: &Mat2<T>| m.a().is_positive() && m.b().is_negative() && m.c().is_positive() && m.d().is_negative();
    let m = if shape(a) {
        a.clone()
    } else if shape(&-a.clone()) {
        -a.clone()
    } else {
        return Err(Error::WrongShape(format!("{a} is not ±[[a,-b],[c,-d]] with a,b,c,d > 0")));
    };
    let ac = normalize(m.a().clone(), m.c().clone())?;
    let bd = normalize(-m.b().clone(), -m.d().clone())?;
    let polygon = descent_polygon(&[ac, bd.clone()])?;
    let base = farey_triangulate(&polygon)?;
    let quiddity = quiddity_of(&base);
    let k = polygon.vertices().iter().position(|v| *v == bd).expect("b/d is a vertex") + 1;
    Ok(TMatrix { triangulation: LabeledTriangulation { base, labels: polygon.vertices().to_vec() }, quiddity, k })
}

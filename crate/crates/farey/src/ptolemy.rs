//! Continuant identities, Ptolemy–Plücker labelings of polygons, exact
//! determinants and the trace–Pfaffian formula.

use crate::cfrac::continuant;
use crate::fareywalk::t_rs;
use crate::modmat::{classify_id, m_word, IdClass};
use crate::numcore::{ProjRational, SignedPair};
use crate::{Error, Result, Scalar};

/// Symmetry imposed on a labeling: `x_{j,i} = x_{i,j}` or `x_{j,i} = -x_{i,j}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Symmetric,
    Skew,
}

/// Values `x_{i,j}` on the ordered vertex pairs of an `n`-gon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling<T> {
    n: usize,
    x: Vec<Vec<T>>,
    mode: Symmetry,
}

/// Square integer matrix, row-major.
pub type SquareMat<T> = Vec<Vec<T>>;

/// Skew-symmetric square matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewMat<T> {
    rows: SquareMat<T>,
}

impl<T: Scalar> Labeling<T> {
    /// Wraps an explicit `n × n` table.
    pub fn new(x: Vec<Vec<T>>, mode: Symmetry) -> Result<Self> {
        let n = x.len();
        if n < 3 || x.iter().any(|row| row.len() != n) {
            return Err(Error::OutOfRange("labeling table must be square with n >= 3".into()));
        }
        Ok(Labeling { n, x, mode })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Symmetry {
        self.mode
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.x[i][j]
    }

    pub fn table(&self) -> &[Vec<T>] {
        &self.x
    }

    /// Adds `delta` to the entry `(i, j)` and its mirror.
    pub fn perturbed(&self, i: usize, j: usize, delta: T) -> Self {
        let mut l = self.clone();
        l.x[i][j] = l.x[i][j].clone() + delta.clone();
        let mirrored = match self.mode {
            Symmetry::Symmetric => delta,
            Symmetry::Skew => -delta,
        };
        l.x[j][i] = l.x[j][i].clone() + mirrored;
        l
    }
}

impl<T: Scalar> SkewMat<T> {
    pub fn new(rows: SquareMat<T>) -> Result<Self> {
        let n = rows.len();
        let skew =
            rows.iter().all(|r| r.len() == n) && (0..n).all(|i| (0..n).all(|j| rows[i][j] == -rows[j][i].clone()));
        if !skew {
            return Err(Error::WrongShape("matrix is not skew-symmetric".into()));
        }
        Ok(SkewMat { rows })
    }

    pub fn rows(&self) -> &SquareMat<T> {
        &self.rows
    }
}

/// Continuant of `c_lo, ..., c_hi` (1-based, empty when `hi < lo`).
fn k_range<T: Scalar>(c: &[T], lo: usize, hi: usize) -> T {
    if hi < lo {
        T::one()
    } else {
        continuant(&c[lo - 1..hi])
    }
}

/// Euler's identity for `1 <= i <= j < k <= l <= n`:
/// `K(c_i..c_{k-1}) K(c_{j+1}..c_l) =
///  K(c_i..c_{j-1}) K(c_{k+1}..c_l) + K(c_i..c_l) K(c_{j+1}..c_{k-1})`.
pub fn euler_identity_holds<T: Scalar>(c: &[T], i: usize, j: usize, k: usize, l: usize) -> Result<bool> {
    if !(1 <= i && i <= j && j < k && k <= l && l <= c.len()) {
        return Err(Error::BadIndices(format!("need 1 <= i <= j < k <= l <= {}, got ({i},{j},{k},{l})", c.len())));
    }
    let lhs = k_range(c, i, k - 1) * k_range(c, j + 1, l);
    let rhs = k_range(c, i, j - 1) * k_range(c, k + 1, l) + k_range(c, i, l) * k_range(c, j + 1, k - 1);
    Ok(lhs == rhs)
}

/// `c_v` at polygon vertex `v`, with vertex 0 carrying `c_n`.
fn c_at<T: Scalar>(c: &[T], v: usize) -> &T {
    let n = c.len();
    &c[(v + n - 1) % n]
}

/// Continuant of the cyclic segment `c_{a+1}, ..., c_{b-1}` read from `a`
/// towards `b` in increasing cyclic order.
fn cyclic_entry<T: Scalar>(c: &[T], a: usize, b: usize) -> T {
    let n = c.len();
    let len = (b + n - a) % n - 1;
    let seg: Vec<T> = (1..=len).map(|t| c_at(c, (a + t) % n).clone()).collect();
    continuant(&seg)
}

/// Labeling `x_{i,j} = K(c_{i+1}, ..., c_{j-1})` for `i < j`, mirrored
/// according to `mode`. Requires `M(c) = -Id` for `Symmetric` and `Id` for
/// `Skew`.
#[allow(clippy::needless_range_loop)]
pub fn labeling_from_word<T: Scalar>(c: &[T], mode: Symmetry) -> Result<Labeling<T>> {
    let class = classify_id(c);
    let ok = matches!((mode, class), (Symmetry::Symmetric, IdClass::MinusId) | (Symmetry::Skew, IdClass::PlusId));
    if !ok || c.len() < 3 {
        return Err(Error::WrongSign(class.to_string()));
    }
    let n = c.len();
    let mut x = vec![vec![T::zero(); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let v = cyclic_entry(c, i, j);
            x[j][i] = match mode {
                Symmetry::Symmetric => v.clone(),
                Symmetry::Skew => -v.clone(),
            };
            x[i][j] = v;
        }
    }
    Ok(Labeling { n, x, mode })
}

/// Fills every ordered pair from the initial data `x_{i,i} = 0`,
/// `x_{i,i+1} = 1`, `x_{i-1,i+1} = c_i` by the three-term relation
/// `x_{a,b} = c_{b-1} x_{a,b-1} - x_{a,b-2}`, walking cyclically. The result
/// is a labeling only when the table closes up symmetrically or
/// skew-symmetrically and satisfies every Ptolemy–Plücker relation.
pub fn fill_labeling<T: Scalar>(c: &[T]) -> Option<Labeling<T>> {
    let n = c.len();
    if n < 3 {
        return None;
    }
    let mut x = vec![vec![T::zero(); n]; n];
    for a in 0..n {
        let (mut prev, mut cur) = (T::zero(), T::one());
        // Steps b = a+2, ..., a+n: the last one must return to x_{a,a} = 0.
        for step in 2..=n {
            let b = (a + step) % n;
            let next = c_at(c, (b + n - 1) % n).clone() * cur.clone() - prev;
            prev = cur;
            cur = next;
            if step < n {
                x[a][b] = cur.clone();
            } else if !cur.is_zero() {
                return None;
            }
        }
        x[a][(a + 1) % n] = T::one();
    }
    let symmetric = (0..n).all(|i| (0..n).all(|j| x[i][j] == x[j][i]));
    let skew = (0..n).all(|i| (0..n).all(|j| x[i][j] == -x[j][i].clone()));
    let mode = if symmetric {
        Symmetry::Symmetric
    } else if skew {
        Symmetry::Skew
    } else {
        return None;
    };
    let l = Labeling { n, x, mode };
    verify_pp(&l).then_some(l)
}

/// Checks `x_{i,i} = 0`, `x_{i,i+1} = 1` cyclically, the symmetry mode, and
/// `x_{i,j} x_{k,l} = x_{i,k} x_{j,l} + x_{i,l} x_{k,j}` for all
/// `i <= k <= j <= l`.
#[allow(clippy::needless_range_loop)]
pub fn verify_pp<T: Scalar>(l: &Labeling<T>) -> bool {
    let (n, x) = (l.n, &l.x);
    for i in 0..n {
        if !x[i][i].is_zero() || !x[i][(i + 1) % n].is_one() {
            return false;
        }
        for j in 0..n {
            let mirror = match l.mode {
                Symmetry::Symmetric => x[i][j].clone(),
                Symmetry::Skew => -x[i][j].clone(),
            };
            if x[j][i] != mirror {
                return false;
            }
        }
    }
    for i in 0..n {
        for k in i..n {
            for j in k..n {
                for m in j..n {
                    let lhs = x[i][j].clone() * x[k][m].clone();
                    let rhs = x[i][k].clone() * x[j][m].clone() + x[i][m].clone() * x[k][j].clone();
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Solves every relation of a strictly ordered quadruple for each of its
/// entries in turn (whenever the coefficient is nonzero) and checks that the
/// table value is the one forced.
pub fn entries_forced<T: Scalar>(l: &Labeling<T>) -> bool {
    let (n, x) = (l.n, &l.x);
    let solve = |num: T, den: &T, want: &T| -> bool {
        if den.is_zero() {
            return true;
        }
        let (q, r) = num.div_rem(den);
        r.is_zero() && q == *want
    };
    for i in 0..n {
        for k in i + 1..n {
            for j in k + 1..n {
                for m in j + 1..n {
                    let (ij, km, ik, jm, im, kj) = (&x[i][j], &x[k][m], &x[i][k], &x[j][m], &x[i][m], &x[k][j]);
                    let ok = solve(ik.clone() * jm.clone() + im.clone() * kj.clone(), km, ij)
                        && solve(ij.clone() * km.clone() - im.clone() * kj.clone(), jm, ik)
                        && solve(ij.clone() * km.clone() - ik.clone() * jm.clone(), kj, im);
                    if !ok {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// For `x > 1`: the symmetric labeling of the quiddity of `T_x` agrees with
/// `x_{i,j} = r_i s_j - s_i r_j` on the Farey labels, vertex 0 carrying `0/-1`.
pub fn determinant_formula_labels<T: Scalar>(x: &ProjRational<T>) -> Result<bool> {
    let t = t_rs(x)?;
    let n = t.quiddity.len();
    let lab = labeling_from_word(&t.quiddity, Symmetry::Symmetric)?;
    let labels = &t.triangulation.labels;
    let pair = |v: usize| -> SignedPair<T> {
        if v == 0 {
            SignedPair::new_unchecked(T::zero(), -T::one())
        } else {
            labels[v - 1].to_pair()
        }
    };
    for i in 0..n {
        for j in i + 1..n {
            if *lab.get(i, j) != pair(i).cross(&pair(j)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Symmetric tridiagonal matrix with `c` on the diagonal and 1 beside it.
fn tridiagonal<T: Scalar>(c: &[T]) -> SquareMat<T> {
    let n = c.len();
    let mut t = vec![vec![T::zero(); n]; n];
    for i in 0..n {
        t[i][i] = c[i].clone();
        if i + 1 < n {
            t[i][i + 1] = T::one();
            t[i + 1][i] = T::one();
        }
    }
    t
}

fn corner<T: Scalar>(n: usize, low: T) -> SquareMat<T> {
    let mut e = vec![vec![T::zero(); n]; n];
    if n >= 2 {
        e[0][n - 1] = T::one();
        e[n - 1][0] = low;
    }
    e
}

fn blocks<T: Scalar>(ul: &SquareMat<T>, ur: &SquareMat<T>, ll: &SquareMat<T>, lr: &SquareMat<T>) -> SquareMat<T> {
    let mut m: SquareMat<T> = Vec::with_capacity(2 * ul.len());
    for (a, b) in ul.iter().zip(ur) {
        m.push(a.iter().chain(b).cloned().collect());
    }
    for (a, b) in ll.iter().zip(lr) {
        m.push(a.iter().chain(b).cloned().collect());
    }
    m
}

/// `[[E, T], [-T, E]]`, `T` tridiagonal in `c`, `E` with `+1` top-right and
/// `-1` bottom-left (zero for `n = 1`).
pub fn omega_matrix<T: Scalar>(c: &[T]) -> Result<SkewMat<T>> {
    if c.is_empty() {
        return Err(Error::OutOfRange("omega needs a nonempty word".into()));
    }
    let t = tridiagonal(c);
    let neg: SquareMat<T> = t.iter().map(|r| r.iter().map(|v| -v.clone()).collect()).collect();
    let e = corner(c.len(), -T::one());
    SkewMat::new(blocks(&e, &t, &neg, &e))
}

/// The same layout with every minus sign dropped: `[[E', T], [T, E']]`.
pub fn omega_plus_matrix<T: Scalar>(c: &[T]) -> Result<SquareMat<T>> {
    if c.is_empty() {
        return Err(Error::OutOfRange("omega needs a nonempty word".into()));
    }
    let t = tridiagonal(c);
    let e = corner(c.len(), T::one());
    Ok(blocks(&e, &t, &t, &e))
}

/// Fraction-free (Bareiss) elimination with row pivoting.
pub fn det_exact<T: Scalar>(m: &[Vec<T>]) -> T {
    let n = m.len();
    let mut a: SquareMat<T> = m.to_vec();
    let mut sign = T::one();
    let mut prev = T::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = v / prev.clone();
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        T::one()
    } else {
        sign * a[n - 1][n - 1].clone()
    }
}

/// `det Omega = tr(M)^2` and, for `n >= 2`, `det Omega' = (-1)^n (tr(M)^2 - 4)`.
pub fn trace_pfaffian_check<T: Scalar>(c: &[T]) -> bool {
    let Ok(omega) = omega_matrix(c) else {
        return false;
    };
    let tr = m_word(c).trace();
    let tr2 = tr.clone() * tr;
    if det_exact(omega.rows()) != tr2 {
        return false;
    }
    if c.len() < 2 {
        return true;
    }
    let plus = omega_plus_matrix(c).expect("nonempty word");
    let sign = if c.len().is_multiple_of(2) { T::one() } else { -T::one() };
    det_exact(&plus) == sign * (tr2 - T::from_int(4))
}

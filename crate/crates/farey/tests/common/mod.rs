//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library except for type conversions.

#![allow(dead_code)]

use std::collections::BTreeSet;

use farey::{Int, Matrix};

pub fn big(v: &[i64]) -> Vec<Int> {
    farey::word(v)
}

pub fn mat(a: i64, b: i64, c: i64, d: i64) -> Matrix {
    Matrix::from_ints(a, b, c, d).unwrap()
}

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Reduced fraction with positive denominator.
pub fn reduce(p: i128, q: i128) -> (i128, i128) {
    let g = gcd(p, q);
    let (p, q) = (p / g, q / g);
    if q < 0 {
        (-p, -q)
    } else {
        (p, q)
    }
}

/// `c1 - 1/(c2 - 1/(...))`, evaluated from the innermost term outwards.
pub fn eval_neg_backward(c: &[i64]) -> (i128, i128) {
    let (mut p, mut q) = (*c.last().unwrap() as i128, 1i128);
    for &ci in c.iter().rev().skip(1) {
        let (np, nq) = (ci as i128 * p - q, p);
        p = np;
        q = nq;
    }
    reduce(p, q)
}

/// `a1 + 1/(a2 + 1/(...))`, evaluated from the innermost term outwards.
pub fn eval_reg_backward(a: &[i64]) -> (i128, i128) {
    let (mut p, mut q) = (*a.last().unwrap() as i128, 1i128);
    for &ai in a.iter().rev().skip(1) {
        let (np, nq) = (ai as i128 * p + q, p);
        p = np;
        q = nq;
    }
    reduce(p, q)
}

pub type M2 = [[i128; 2]; 2];

pub fn mul2(x: &M2, y: &M2) -> M2 {
    let mut z = [[0i128; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            z[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    z
}

/// Product of `[[c,-1],[1,0]]` by explicit 2×2 multiplication.
pub fn m_oracle(c: &[i64]) -> M2 {
    c.iter().fold([[1, 0], [0, 1]], |acc, &ci| mul2(&acc, &[[ci as i128, -1], [1, 0]]))
}

pub fn m_plus_oracle(a: &[i64]) -> M2 {
    a.iter().fold([[1, 0], [0, 1]], |acc, &ai| mul2(&acc, &[[ai as i128, 1], [1, 0]]))
}

pub fn to_m2(m: &Matrix) -> M2 {
    let e = m.entries();
    let f = |x: &Int| -> i128 { x.try_into().unwrap() };
    [[f(&e[0]), f(&e[1])], [f(&e[2]), f(&e[3])]]
}

/// Sign of `M(c)` as `Some(-1)`, `Some(1)` or `None`.
pub fn id_sign(c: &[i64]) -> Option<i8> {
    match m_oracle(c) {
        [[1, 0], [0, 1]] => Some(1),
        [[-1, 0], [0, -1]] => Some(-1),
        _ => None,
    }
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut total = 0i128;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| *v).collect())
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        total += sign * m[0][j] * cofactor_det(&minor);
    }
    total
}

/// `K(c1..cn)` as the determinant of the tridiagonal matrix with `c` on the
/// diagonal and `1` beside it.
pub fn continuant_oracle(c: &[i64]) -> i128 {
    let n = c.len();
    let mut m = vec![vec![0i128; n]; n];
    for i in 0..n {
        m[i][i] = c[i] as i128;
        if i + 1 < n {
            m[i][i + 1] = 1;
            m[i + 1][i] = 1;
        }
    }
    cofactor_det(&m)
}

pub fn catalan(n: usize) -> usize {
    let mut c = 1usize;
    for i in 0..n {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

fn crosses(a: (usize, usize), b: (usize, usize)) -> bool {
    let (i, j) = a;
    let (k, l) = b;
    (i < k && k < j && j < l) || (k < i && i < l && l < j)
}

/// Every set of pairwise noncrossing diagonals of an `n`-gon.
pub fn all_dissections(n: usize) -> Vec<BTreeSet<(usize, usize)>> {
    let diags: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 2..n).map(move |j| (i, j))).filter(|&(i, j)| !(i == 0 && j == n - 1)).collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(
        idx: usize,
        diags: &[(usize, usize)],
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<BTreeSet<(usize, usize)>>,
    ) {
        if idx == diags.len() {
            out.push(cur.iter().copied().collect());
            return;
        }
        go(idx + 1, diags, cur, out);
        if cur.iter().all(|&e| !crosses(e, diags[idx])) {
            cur.push(diags[idx]);
            go(idx + 1, diags, cur, out);
            cur.pop();
        }
    }
    go(0, &diags, &mut cur, &mut out);
    out
}

/// Cells of a dissection as vertex lists, found by tracing the faces to the
/// left of every side `i -> i+1` and of both orientations of every diagonal.
pub fn cells_oracle(n: usize, diags: &BTreeSet<(usize, usize)>) -> Vec<Vec<usize>> {
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for i in 0..n {
        adj[i].insert((i + 1) % n);
        adj[(i + 1) % n].insert(i);
    }
    for &(i, j) in diags {
        adj[i].insert(j);
        adj[j].insert(i);
    }
    let starts = (0..n).map(|i| (i, (i + 1) % n)).chain(diags.iter().flat_map(|&(i, j)| [(i, j), (j, i)]));
    let mut seen = BTreeSet::new();
    let mut cells = Vec::new();
    for start in starts {
        if seen.contains(&start) {
            continue;
        }
        let mut face = Vec::new();
        let (mut u, mut v) = start;
        loop {
            seen.insert((u, v));
            face.push(u);
            // Leave v towards the neighbour closest to u going backwards.
            let w = *adj[v].iter().filter(|&&w| w != u).min_by_key(|&&w| (u + n - w) % n).unwrap();
            u = v;
            v = w;
            if (u, v) == start {
                break;
            }
        }
        cells.push(face);
    }
    cells
}

/// Number of cells at each vertex.
pub fn quiddity_oracle(n: usize, diags: &BTreeSet<(usize, usize)>) -> Vec<i64> {
    let mut q = vec![0i64; n];
    for cell in cells_oracle(n, diags) {
        for v in cell {
            q[v] += 1;
        }
    }
    q
}

pub fn is_3d_oracle(n: usize, diags: &BTreeSet<(usize, usize)>) -> bool {
    cells_oracle(n, diags).iter().all(|c| c.len() % 3 == 0)
}

/// Every word of length `n` with entries `>= 1`, sum `<= max_sum`, and
/// `M(c) = ±Id`, with its sign, in lexicographic order.
pub fn solution_words(n: usize, max_sum: usize) -> Vec<(Vec<i64>, i8)> {
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    fn go(n: usize, budget: usize, word: &mut Vec<i64>, out: &mut Vec<(Vec<i64>, i8)>) {
        if word.len() == n {
            if let Some(s) = id_sign(word) {
                out.push((word.clone(), s));
            }
            return;
        }
        let reserve = n - word.len() - 1;
        for c in 1..=budget.saturating_sub(reserve) {
            word.push(c as i64);
            go(n, budget - c, word, out);
            word.pop();
        }
    }
    if max_sum >= n {
        go(n, max_sum, &mut word, &mut out);
    }
    out
}

//! Unimodular 2×2 matrices: word products, generator words, PSL equality and
//! membership in the semigroup generated by `R` and `L`.

use std::fmt;
use std::ops::Mul;

use crate::numcore::parse_int;
use crate::{Error, Result, Scalar};

/// `[[a, b], [c, d]]` with `ad - bc = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2<T> {
    a: T,
    b: T,
    c: T,
    d: T,
}

/// Whether `M(c)` is `-Id`, `Id`, or neither.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdClass {
    MinusId,
    PlusId,
    Neither,
}

/// Generator letter of SL(2,Z).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    R,
    L,
    S,
}

/// Product of generator powers; adjacent tokens never share a letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenWord<T> {
    tokens: Vec<(Letter, T)>,
}

impl<T: Scalar> Mat2<T> {
    /// Builds a matrix, rejecting determinants other than 1.
    pub fn new(a: T, b: T, c: T, d: T) -> Result<Self> {
        let det = a.clone() * d.clone() - b.clone() * c.clone();
        if !det.is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        Ok(Mat2 { a, b, c, d })
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(T::from_int(a), T::from_int(b), T::from_int(c), T::from_int(d))
    }

    pub fn identity() -> Self {
        Mat2 { a: T::one(), b: T::zero(), c: T::zero(), d: T::one() }
    }

    /// `R = [[1,1],[0,1]]`.
    pub fn r() -> Self {
        Self::r_pow(T::one())
    }

    /// `L = [[1,0],[1,1]]`.
    pub fn l() -> Self {
        Self::l_pow(T::one())
    }

    /// `S = [[0,-1],[1,0]]`.
    pub fn s() -> Self {
        Mat2 { a: T::zero(), b: -T::one(), c: T::one(), d: T::zero() }
    }

    pub fn r_pow(k: T) -> Self {
        Mat2 { a: T::one(), b: k, c: T::zero(), d: T::one() }
    }

    pub fn l_pow(k: T) -> Self {
        Mat2 { a: T::one(), b: T::zero(), c: k, d: T::one() }
    }

    /// `S^k`, which depends on `k mod 4`.
    pub fn s_pow(k: &T) -> Self {
        let r = k.mod_floor(&T::from_int(4)).to_u8().expect("residue mod 4");
        match r {
            0 => Self::identity(),
            1 => Self::s(),
            2 => -Self::identity(),
            _ => -Self::s(),
        }
    }

    pub fn a(&self) -> &T {
        &self.a
    }
    pub fn b(&self) -> &T {
        &self.b
    }
    pub fn c(&self) -> &T {
        &self.c
    }
    pub fn d(&self) -> &T {
        &self.d
    }

    pub fn entries(&self) -> [T; 4] {
        [self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()]
    }

    /// `self * [[c,-1],[1,0]]`: columns `(u, v)` become `(c u + v, -u)`.
    pub fn times_m(&self, c: &T) -> Self {
        Mat2 {
            a: c.clone() * self.a.clone() + self.b.clone(),
            b: -self.a.clone(),
            c: c.clone() * self.c.clone() + self.d.clone(),
            d: -self.c.clone(),
        }
    }

    pub fn trace(&self) -> T {
        self.a.clone() + self.d.clone()
    }

    pub fn inverse(&self) -> Self {
        Mat2 { a: self.d.clone(), b: -self.b.clone(), c: -self.c.clone(), d: self.a.clone() }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// True for `Id` and `-Id`.
    pub fn is_pm_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero()
    }

    /// Representative with positive trace, or with the first nonzero of
    /// `(c, a)` positive when the trace vanishes.
    pub fn sign_normalized(&self) -> Self {
        let t = self.trace();
        let flip = if !t.is_zero() {
            t.is_negative()
        } else if !self.c.is_zero() {
            self.c.is_negative()
        } else {
            self.a.is_negative()
        };
        if flip {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

impl<T> Default for GenWord<T> {
    fn default() -> Self {
        GenWord { tokens: Vec::new() }
    }
}

impl<T: Scalar> Mul for &Mat2<T> {
    type Output = Mat2<T>;
    fn mul(self, o: &Mat2<T>) -> Mat2<T> {
        Mat2 {
            a: self.a.clone() * o.a.clone() + self.b.clone() * o.c.clone(),
            b: self.a.clone() * o.b.clone() + self.b.clone() * o.d.clone(),
            c: self.c.clone() * o.a.clone() + self.d.clone() * o.c.clone(),
            d: self.c.clone() * o.b.clone() + self.d.clone() * o.d.clone(),
        }
    }
}

impl<T: Scalar> Mul for Mat2<T> {
    type Output = Mat2<T>;
    fn mul(self, o: Mat2<T>) -> Mat2<T> {
        &self * &o
    }
}

impl<T: Scalar> std::ops::Neg for Mat2<T> {
    type Output = Mat2<T>;
    fn neg(self) -> Mat2<T> {
        Mat2 { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
    }
}

impl<T: Scalar> fmt::Display for Mat2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl<T: Scalar> std::str::FromStr for Mat2<T> {
    type Err = Error;
    /// Accepts `a b c d` or `[[a,b],[c,d]]`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s
            .split(|ch: char| ch == ',' || ch == '[' || ch == ']' || ch.is_whitespace())
            .filter(|p| !p.is_empty())
            .collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!("expected four matrix entries, got {s:?}")));
        }
        Mat2::new(parse_int(parts[0])?, parse_int(parts[1])?, parse_int(parts[2])?, parse_int(parts[3])?)
    }
}

/// `M(c) = prod [[ci, -1], [1, 0]]`; the empty word gives `Id`.
pub fn m_word<T: Scalar>(c: &[T]) -> Mat2<T> {
    c.iter().fold(Mat2::identity(), |m, ci| m.times_m(ci))
}

/// `M+(a) = prod [[ai, 1], [1, 0]]`. For odd length the determinant is -1,
/// so the result is not a `Mat2`; callers use even-length words.
pub fn m_plus_word<T: Scalar>(a: &[T]) -> Result<Mat2<T>> {
    if a.len() % 2 == 1 {
        return Err(Error::OddLength(a.len()));
    }
    let mut m = Mat2::<T>::identity();
    for ai in a {
        m = Mat2 {
            a: ai.clone() * m.a.clone() + m.b.clone(),
            b: m.a,
            c: ai.clone() * m.c.clone() + m.d.clone(),
            d: m.c,
        };
    }
    Ok(m)
}

/// Equality in PSL(2,Z): `x = y` or `x = -y`.
pub fn psl_eq<T: Scalar>(x: &Mat2<T>, y: &Mat2<T>) -> bool {
    x == y || *x == -y.clone()
}

/// Classifies `M(c)` as `-Id`, `Id` or neither.
pub fn classify_id<T: Scalar>(c: &[T]) -> IdClass {
    classify_matrix(&m_word(c))
}

pub fn classify_matrix<T: Scalar>(m: &Mat2<T>) -> IdClass {
    if !m.is_pm_identity() {
        IdClass::Neither
    } else if m.a.is_one() {
        IdClass::PlusId
    } else {
        IdClass::MinusId
    }
}

/// `R^{c1} S R^{c2} S ... R^{ck} S`.
pub fn to_rs_word<T: Scalar>(c: &[T]) -> GenWord<T> {
    let mut g = GenWord::default();
    for ci in c {
        g.push(Letter::R, ci.clone());
        g.push(Letter::S, T::one());
    }
    g
}

/// `R^{a1} L^{a2} R^{a3} L^{a4} ...` for even-length `a`.
pub fn to_rl_word<T: Scalar>(a: &[T]) -> Result<GenWord<T>> {
    if a.len() % 2 == 1 {
        return Err(Error::OddLength(a.len()));
    }
    let mut g = GenWord::default();
    for pair in a.chunks(2) {
        g.push(Letter::R, pair[0].clone());
        g.push(Letter::L, pair[1].clone());
    }
    Ok(g)
}

/// Product of the generator matrices of `g`.
pub fn eval_genword<T: Scalar>(g: &GenWord<T>) -> Mat2<T> {
    g.tokens.iter().fold(Mat2::identity(), |m, (letter, k)| {
        let t = match letter {
            Letter::R => Mat2::r_pow(k.clone()),
            Letter::L => Mat2::l_pow(k.clone()),
            Letter::S => Mat2::s_pow(k),
        };
        &m * &t
    })
}

/// `a >= b >= d > 0` and `a >= c >= d > 0`.
pub fn is_in_gamma<T: Scalar>(m: &Mat2<T>) -> bool {
    let (a, b, c, d) = (&m.a, &m.b, &m.c, &m.d);
    d.is_positive() && a >= b && b >= d && a >= c && c >= d
}

impl<T: Scalar> GenWord<T> {
    /// Appends `letter^k`, merging with a trailing token of the same letter
    /// and dropping zero powers.
    pub fn push(&mut self, letter: Letter, k: T) {
        if k.is_zero() {
            return;
        }
        if let Some((last, p)) = self.tokens.last_mut() {
            if *last == letter {
                *p = p.clone() + k;
                if p.is_zero() {
                    self.tokens.pop();
                }
                return;
            }
        }
        self.tokens.push((letter, k));
    }

    pub fn tokens(&self) -> &[(Letter, T)] {
        &self.tokens
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Concatenation with normalization at the seam.
    pub fn concat(&self, other: &Self) -> Self {
        let mut g = self.clone();
        for (l, k) in &other.tokens {
            g.push(*l, k.clone());
        }
        g
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Letter::R => "R",
            Letter::L => "L",
            Letter::S => "S",
        };
        f.write_str(s)
    }
}

impl<T: Scalar> fmt::Display for GenWord<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.tokens.iter().map(|(l, k)| if k.is_one() { l.to_string() } else { format!("{l}^{k}") }).collect();
        f.write_str(&parts.join(" "))
    }
}

impl<T: Scalar> std::str::FromStr for GenWord<T> {
    type Err = Error;
    /// Parses tokens such as `R^2 S L^-3 R`.
    fn from_str(s: &str) -> Result<Self> {
        let mut g = GenWord::default();
        for tok in s.split_whitespace() {
            let (l, p) = tok.split_once('^').unwrap_or((tok, "1"));
            let letter = match l {
                "R" => Letter::R,
                "L" => Letter::L,
                "S" => Letter::S,
                _ => return Err(Error::Parse(format!("unknown generator {l:?}"))),
            };
            g.push(letter, parse_int(p)?);
        }
        Ok(g)
    }
}

impl fmt::Display for IdClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            IdClass::MinusId => "-Id",
            IdClass::PlusId => "+Id",
            IdClass::Neither => "neither",
        };
        f.write_str(s)
    }
}

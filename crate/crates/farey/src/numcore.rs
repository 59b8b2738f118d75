//! Projective rationals, sign-carrying pairs, Farey adjacency and real
//! quadratic surds.

use std::cmp::Ordering;
use std::fmt;

use crate::{Error, Result, Scalar};

/// Point `num/den` of the rational projective line in canonical form:
/// coprime, `den >= 0`, and infinity stored as `1/0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjRational<T> {
    num: T,
    den: T,
}

/// Coprime pair whose sign is kept, so `r/s` and `-r/-s` differ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPair<T> {
    num: T,
    den: T,
}

/// Real number `(p + sqrt(d)) / q` with `d > 0` not a square and `q | d - p^2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadSurd<T> {
    p: T,
    q: T,
    d: T,
}

/// Reduces `num/den` to canonical projective form.
pub fn normalize<T: Scalar>(num: T, den: T) -> Result<ProjRational<T>> {
    if num.is_zero() && den.is_zero() {
        return Err(Error::BothZero);
    }
    if den.is_zero() {
        return Ok(ProjRational::infinity());
    }
    let g = num.gcd(&den);
    let (mut n, mut d) = (num / g.clone(), den / g);
    if d.is_negative() {
        n = -n;
        d = -d;
    }
    Ok(ProjRational { num: n, den: d })
}

/// Farey sum `(r' + r'') / (s' + s'')` of two canonical points.
pub fn mediant<T: Scalar>(x: &ProjRational<T>, y: &ProjRational<T>) -> ProjRational<T> {
    normalize(x.num.clone() + y.num.clone(), x.den.clone() + y.den.clone())
        .expect("sum of two canonical denominators is never (0,0) with a nonzero numerator")
}

/// Determinant `r's'' - r''s'`.
pub fn cross<T: Scalar>(x: &ProjRational<T>, y: &ProjRational<T>) -> T {
    x.num.clone() * y.den.clone() - y.num.clone() * x.den.clone()
}

/// True iff the two points span an edge of the Farey graph.
pub fn is_farey_edge<T: Scalar>(x: &ProjRational<T>, y: &ProjRational<T>) -> bool {
    cross(x, y).abs().is_one()
}

/// One step of the negative continued fraction: `c = ceil(x)` and
/// `next = 1/(c - x)`, so that `x = c - 1/next`.
pub fn surd_ceil_step<T: Scalar>(x: &QuadSurd<T>) -> Result<(T, QuadSurd<T>)> {
    let c = x.floor() + T::one();
    let big_p = c.clone() * x.q.clone() - x.p.clone();
    let big_q = (big_p.clone() * big_p.clone() - x.d.clone()) / x.q.clone();
    let next = QuadSurd { p: big_p, q: big_q, d: x.d.clone() };
    Ok((c, next))
}

impl<T: Scalar> ProjRational<T> {
    /// Canonical infinity `1/0`.
    pub fn infinity() -> Self {
        ProjRational { num: T::one(), den: T::zero() }
    }

    /// The integer `v` as `v/1`.
    pub fn integer(v: T) -> Self {
        ProjRational { num: v, den: T::one() }
    }

    pub fn num(&self) -> &T {
        &self.num
    }

    pub fn den(&self) -> &T {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    /// The same point as a sign-carrying pair.
    pub fn to_pair(&self) -> SignedPair<T> {
        SignedPair { num: self.num.clone(), den: self.den.clone() }
    }

    /// The two Farey parents `p, q` with `self = mediant(p, q)`; for an
    /// integer `v` these are `1/0` and `(v-1)/1`. `None` for infinity.
    pub fn farey_parents(&self) -> Option<(Self, Self)> {
        if self.is_infinite() {
            return None;
        }
        let (r, s) = (self.num.clone(), self.den.clone());
        // Solve s*u - r*v = 1, then shift v into [0, s).
        let eg = s.extended_gcd(&r);
        let (mut u, mut v) = (eg.x, -eg.y);
        let t = v.div_floor(&s);
        u = u - t.clone() * r.clone();
        v = v - t * s.clone();
        let left = normalize(u.clone(), v.clone()).ok()?;
        let right = normalize(r - u, s - v).ok()?;
        Some((left, right))
    }
}

impl<T: Scalar> Ord for ProjRational<T> {
    /// Order by value with infinity above every finite point.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (self.num.clone() * other.den.clone()).cmp(&(other.num.clone() * self.den.clone())),
        }
    }
}

impl<T: Scalar> PartialOrd for ProjRational<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Scalar> fmt::Display for ProjRational<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl<T: Scalar> std::str::FromStr for ProjRational<T> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (n, d) = parse_fraction::<T>(s)?;
        normalize(n, d)
    }
}

impl<T: Scalar> SignedPair<T> {
    /// Builds a pair, requiring coprime entries that are not both zero.
    pub fn new(num: T, den: T) -> Result<Self> {
        if num.is_zero() && den.is_zero() {
            return Err(Error::BothZero);
        }
        if !num.gcd(&den).is_one() {
            return Err(Error::NotCoprime(num.to_string(), den.to_string()));
        }
        Ok(SignedPair { num, den })
    }

    /// Caller guarantees coprimality, e.g. a column of a unimodular matrix.
    pub(crate) fn new_unchecked(num: T, den: T) -> Self {
        debug_assert!(num.gcd(&den).is_one());
        SignedPair { num, den }
    }

    pub fn num(&self) -> &T {
        &self.num
    }

    pub fn den(&self) -> &T {
        &self.den
    }

    /// Determinant `r s' - r' s` against another pair.
    pub fn cross(&self, other: &Self) -> T {
        self.num.clone() * other.den.clone() - other.num.clone() * self.den.clone()
    }

    /// The projective point obtained by forgetting the sign.
    pub fn reduce(&self) -> ProjRational<T> {
        normalize(self.num.clone(), self.den.clone()).expect("pair is never (0,0)")
    }

    /// Pair with both entries negated.
    pub fn negated(&self) -> Self {
        SignedPair { num: -self.num.clone(), den: -self.den.clone() }
    }
}

impl<T: Scalar> fmt::Display for SignedPair<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl<T: Scalar> std::str::FromStr for SignedPair<T> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (n, d) = parse_fraction::<T>(s)?;
        SignedPair::new(n, d)
    }
}

impl<T: Scalar> QuadSurd<T> {
    /// Builds `(p + sqrt(d)) / q`, rescaling to the canonical form `q | d - p^2`.
    pub fn new(p: T, q: T, d: T) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if !d.is_positive() {
            return Err(Error::OutOfRange(format!("surd radicand {d} must be positive")));
        }
        let s = d.sqrt();
        if s.clone() * s == d {
            return Err(Error::NotIrrational(d.to_string()));
        }
        let (mut p, mut q, mut d) = (p, q, d);
        if !(d.clone() - p.clone() * p.clone()).is_multiple_of(&q) {
            let aq = q.abs();
            p = p * aq.clone();
            d = d * q.clone() * q.clone();
            q = q * aq;
        }
        Ok(QuadSurd { p, q, d })
    }

    pub fn p(&self) -> &T {
        &self.p
    }

    pub fn q(&self) -> &T {
        &self.q
    }

    pub fn d(&self) -> &T {
        &self.d
    }

    /// Exact `floor((p + sqrt(d)) / q)` from integer square-root bounds.
    pub fn floor(&self) -> T {
        let s = self.d.sqrt();
        if self.q.is_positive() {
            (self.p.clone() + s).div_floor(&self.q)
        } else {
            (-self.p.clone() - s - T::one()).div_floor(&(-self.q.clone()))
        }
    }
}

impl<T: Scalar> fmt::Display for QuadSurd<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}+√{})/{}", self.p, self.d, self.q)
    }
}

/// Parses an integer, accepting a leading ASCII or Unicode minus.
pub fn parse_int<T: Scalar>(s: &str) -> Result<T> {
    let t = s.trim();
    let (neg, body) = if let Some(rest) = t.strip_prefix('-') {
        (true, rest)
    } else if let Some(rest) = t.strip_prefix('\u{2212}') {
        (true, rest)
    } else {
        (false, t.strip_prefix('+').unwrap_or(t))
    };
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("not an integer: {s:?}")));
    }
    let v = T::from_str_radix(body, 10).map_err(|_| Error::Parse(format!("not an integer: {s:?}")))?;
    Ok(if neg { -v } else { v })
}

fn parse_fraction<T: Scalar>(s: &str) -> Result<(T, T)> {
    match s.split_once('/') {
        Some((n, d)) => Ok((parse_int(n)?, parse_int(d)?)),
        None => Ok((parse_int(s)?, T::one())),
    }
}

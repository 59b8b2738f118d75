//! Negative and regular continued fractions, continuants, convergents and
//! periodic negative expansions of quadratic surds.

use std::collections::HashMap;
use std::fmt;

use crate::numcore::{normalize, surd_ceil_step, ProjRational, QuadSurd, SignedPair};
use crate::{Error, Result, Scalar};

/// Eventually periodic word `prefix, period, period, ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodicWord<T> {
    pub prefix: Vec<T>,
    pub period: Vec<T>,
}

/// Which recurrence a convergent sequence follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CfKind {
    /// `x = c1 - 1/(c2 - ...)`.
    Negative,
    /// `x = a1 + 1/(a2 + ...)`.
    Regular,
}

fn greater_than_one<T: Scalar>(x: &ProjRational<T>) -> Result<(T, T)> {
    let (r, s) = (x.num().clone(), x.den().clone());
    if s.is_zero() || r <= s {
        return Err(Error::OutOfRange(format!("{x} must be a finite rational > 1")));
    }
    Ok((r, s))
}

/// Negative expansion by repeated ceilings for any positive `r/s`.
/// The first entry is 1 exactly when `r/s <= 1`; all later entries are >= 2.
pub fn ceil_expansion<T: Scalar>(r: T, s: T) -> Vec<T> {
    debug_assert!(r.is_positive() && s.is_positive());
    let (mut r, mut s) = (r, s);
    let mut out = Vec::new();
    while !s.is_zero() {
        let c = r.div_ceil(&s);
        let next = c.clone() * s.clone() - r;
        r = s;
        s = next;
        out.push(c);
    }
    out
}

/// The unique expansion `x = [[c1,...,ck]]` with all `ci >= 2`.
pub fn expand_negative<T: Scalar>(x: &ProjRational<T>) -> Result<Vec<T>> {
    let (r, s) = greater_than_one(x)?;
    Ok(ceil_expansion(r, s))
}

/// Regular expansion `x = [a1,...,a2m]` normalized to even length.
pub fn expand_regular<T: Scalar>(x: &ProjRational<T>) -> Result<Vec<T>> {
    let (mut r, mut s) = greater_than_one(x)?;
    let mut out = Vec::new();
    while !s.is_zero() {
        let (a, rem) = r.div_mod_floor(&s);
        out.push(a);
        r = s;
        s = rem;
    }
    if out.len() % 2 == 1 {
        let last = out.pop().expect("expansion is nonempty");
        out.push(last - T::one());
        out.push(T::one());
    }
    Ok(out)
}

/// `K_n(c1,...,cn)` with `K_0 = 1`.
pub fn continuant<T: Scalar>(w: &[T]) -> T {
    let (mut k, mut prev) = (T::one(), T::zero());
    for c in w {
        let next = c.clone() * k.clone() - prev;
        prev = k;
        k = next;
    }
    k
}

/// `(K_n(c1..cn), K_{n-1}(c2..cn))` without projective reduction.
pub fn eval_negative<T: Scalar>(w: &[T]) -> SignedPair<T> {
    let num = continuant(w);
    let den = if w.is_empty() { T::zero() } else { continuant(&w[1..]) };
    SignedPair::new_unchecked(num, den)
}

/// Value of `[a1,...,al]`; the empty word is `1/0`.
pub fn eval_regular<T: Scalar>(w: &[T]) -> ProjRational<T> {
    let (mut p, mut p_prev) = (T::one(), T::zero());
    let (mut q, mut q_prev) = (T::zero(), T::one());
    for a in w {
        let np = a.clone() * p.clone() + p_prev;
        let nq = a.clone() * q.clone() + q_prev;
        p_prev = p;
        q_prev = q;
        p = np;
        q = nq;
    }
    normalize(p, q).expect("convergent columns are unimodular")
}

fn check_positive<T: Scalar>(w: &[T]) -> Result<()> {
    match w.iter().find(|a| !a.is_positive()) {
        Some(a) => Err(Error::EntryBelowOne(a.to_string())),
        None => Ok(()),
    }
}

/// `(a1+1, 2^{a2-1}, a3+2, 2^{a4-1}, ..., a_{2m-1}+2, 2^{a_{2m}-1})`,
/// where `2^k` stands for `k` copies of 2.
pub fn regular_to_negative<T: Scalar>(a: &[T]) -> Result<Vec<T>> {
    if a.len() % 2 == 1 {
        return Err(Error::OddLength(a.len()));
    }
    check_positive(a)?;
    let two = T::from_int(2);
    let mut out = Vec::new();
    for (i, pair) in a.chunks(2).enumerate() {
        let shift = if i == 0 { T::one() } else { two.clone() };
        out.push(pair[0].clone() + shift);
        let copies = (pair[1].clone() - T::one())
            .to_usize()
            .ok_or_else(|| Error::OutOfRange(format!("run of {} twos", pair[1])))?;
        out.extend(std::iter::repeat_n(two.clone(), copies));
    }
    Ok(out)
}

/// Inverse of [`regular_to_negative`].
pub fn negative_to_regular<T: Scalar>(c: &[T]) -> Result<Vec<T>> {
    let two = T::from_int(2);
    if let Some(x) = c.iter().find(|x| **x < two) {
        return Err(Error::EntryBelowTwo(x.to_string()));
    }
    let mut out = Vec::new();
    let mut i = 0;
    while i < c.len() {
        let shift = if i == 0 { T::one() } else { two.clone() };
        out.push(c[i].clone() - shift);
        i += 1;
        let start = i;
        while i < c.len() && c[i] == two {
            i += 1;
        }
        out.push(T::from_usize(i - start + 1).expect("run length fits"));
    }
    Ok(out)
}

/// Convergents `(r_i, s_i)`, `i = 1..len(w)`, from the chosen recurrence.
pub fn convergents<T: Scalar>(w: &[T], kind: CfKind) -> Vec<SignedPair<T>> {
    let sign = match kind {
        CfKind::Negative => -T::one(),
        CfKind::Regular => T::one(),
    };
    let (mut r, mut r_prev) = (T::one(), T::zero());
    let (mut s, mut s_prev) = (T::zero(), sign.clone());
    let mut out = Vec::with_capacity(w.len());
    for c in w {
        let nr = c.clone() * r.clone() + sign.clone() * r_prev;
        let ns = c.clone() * s.clone() + sign.clone() * s_prev;
        r_prev = r;
        s_prev = s;
        r = nr;
        s = ns;
        out.push(SignedPair::new_unchecked(r.clone(), s.clone()));
    }
    out
}

/// Periodic negative expansion of a quadratic surd. The period is found by
/// the first repetition of the canonical surd state, hence minimal.
pub fn surd_negative_cf<T: Scalar>(x: &QuadSurd<T>) -> Result<PeriodicWord<T>> {
    let mut seen: HashMap<(T, T), usize> = HashMap::new();
    let mut coeffs = Vec::new();
    let mut cur = x.clone();
    loop {
        let key = (cur.p().clone(), cur.q().clone());
        if let Some(&start) = seen.get(&key) {
            let period = coeffs.split_off(start);
            return Ok(PeriodicWord { prefix: coeffs, period });
        }
        seen.insert(key, coeffs.len());
        let (c, next) = surd_ceil_step(&cur)?;
        coeffs.push(c);
        cur = next;
    }
}

/// Formats a word as `2,2,3`.
pub fn format_word<T: fmt::Display>(w: &[T]) -> String {
    w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Parses a comma-separated word, optionally wrapped in `[...]` or `[[...]]`
/// or `(...)`.
pub fn parse_word<T: Scalar>(s: &str) -> Result<Vec<T>> {
    let t = s.trim();
    let t = t.trim_start_matches(['[', '(']).trim_end_matches([']', ')']).trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',').map(crate::numcore::parse_int).collect()
}

/// Parses the periodic syntax `[[4;2,2,5]]` (prefix before `;`).
pub fn parse_periodic<T: Scalar>(s: &str) -> Result<PeriodicWord<T>> {
    let t = s.trim().trim_start_matches('[').trim_end_matches(']');
    let (pre, per) = t.split_once(';').ok_or_else(|| Error::Parse(format!("periodic word needs ';': {s:?}")))?;
    let period: Vec<T> = parse_word(per)?;
    if period.is_empty() {
        return Err(Error::Parse("empty period".into()));
    }
    Ok(PeriodicWord { prefix: parse_word(pre)?, period })
}

impl<T: fmt::Display> fmt::Display for PeriodicWord<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{};{}]]", format_word(&self.prefix), format_word(&self.period))
    }
}

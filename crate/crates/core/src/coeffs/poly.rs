//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients over the fixed symbol set `a, b, c, q, t, α`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub const NVARS: usize = 6;

/// Exponent vector indexed by [`Symbol::index`]. The derived array order is
/// pure lex with `a` most significant.
pub type Mono = [u16; NVARS];

const ONE_MONO: Mono = [0; NVARS];

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    A,
    B,
    C,
    Q,
    T,
    Alpha,
}

impl Symbol {
    pub const ALL: [Symbol; NVARS] = [
        Symbol::A,
        Symbol::B,
        Symbol::C,
        Symbol::Q,
        Symbol::T,
        Symbol::Alpha,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Symbol::A => "a",
            Symbol::B => "b",
            Symbol::C => "c",
            Symbol::Q => "q",
            Symbol::T => "t",
            Symbol::Alpha => "alpha",
        }
    }

    pub fn from_name(name: &str) -> Option<Symbol> {
        match name {
            "a" => Some(Symbol::A),
            "b" => Some(Symbol::B),
            "c" => Some(Symbol::C),
            "q" => Some(Symbol::Q),
            "t" => Some(Symbol::T),
            "alpha" | "α" => Some(Symbol::Alpha),
            _ => None,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn mono_mul(x: &Mono, y: &Mono) -> Mono {
    let mut out = *x;
    for i in 0..NVARS {
        out[i] += y[i];
    }
    out
}

fn mono_divides(d: &Mono, x: &Mono) -> bool {
    (0..NVARS).all(|i| d[i] <= x[i])
}

fn mono_div(x: &Mono, d: &Mono) -> Mono {
    let mut out = *x;
    for i in 0..NVARS {
        out[i] -= d[i];
    }
    out
}

/// Polynomial stored as `(monomial, coefficient)` pairs sorted strictly
/// descending in lex order; no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Mono, BigInt)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(ONE_MONO, c)],
            }
        }
    }

    pub fn var(s: Symbol) -> Self {
        Poly::monomial(s, 1, BigInt::one())
    }

    pub fn monomial(s: Symbol, exp: u16, c: BigInt) -> Self {
        let mut m = ONE_MONO;
        m[s.index()] = exp;
        Poly::from_terms(vec![(m, c)])
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(mut terms: Vec<(Mono, BigInt)>) -> Self {
        terms.sort_unstable_by(|x, y| y.0.cmp(&x.0));
        let mut out: Vec<(Mono, BigInt)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Mono, BigInt)] {
        &self.terms
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == ONE_MONO && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == ONE_MONO)
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if *m == ONE_MONO => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading(&self) -> Option<&(Mono, BigInt)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.terms
            .first()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigInt::zero)
    }

    pub fn degree_in(&self, s: Symbol) -> usize {
        let i = s.index();
        self.terms.iter().map(|(m, _)| m[i] as usize).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .iter()
            .map(|(m, _)| m.iter().map(|&e| e as usize).sum::<usize>())
            .max()
            .unwrap_or(0)
    }

    /// Bitmask of symbols that occur with positive exponent.
    pub fn var_mask(&self) -> u8 {
        let mut mask = 0u8;
        for (m, _) in &self.terms {
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    mask |= 1 << i;
                }
            }
        }
        mask
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        let mask = self.var_mask();
        Symbol::ALL
            .iter()
            .copied()
            .filter(|s| mask & (1 << s.index()) != 0)
            .collect()
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_mono(&self) -> Mono {
        let mut out = match self.terms.first() {
            Some((m, _)) => *m,
            None => return ONE_MONO,
        };
        for (m, _) in &self.terms[1..] {
            for i in 0..NVARS {
                out[i] = out[i].min(m[i]);
            }
        }
        out
    }

    /// Integer content (non-negative gcd of the coefficients).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, k: &BigInt) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    /// Divides every coefficient by `k`, which must divide them exactly.
    pub fn div_int(&self, k: &BigInt) -> Poly {
        if k.is_one() {
            return self.clone();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, c / k)).collect(),
        }
    }

    pub fn mul_mono(&self, mono: &Mono) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (mono_mul(m, mono), c.clone()))
                .collect(),
        }
    }

    pub fn div_mono(&self, mono: &Mono) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (mono_div(m, mono), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: usize) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Flips the sign if needed so the leading coefficient is positive.
    pub fn sign_normalized(self) -> Poly {
        if self.leading_coeff().is_negative() {
            -self
        } else {
            self
        }
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if d.is_monomial() {
            let (dm, dc) = &d.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !mono_divides(dm, m) {
                    return None;
                }
                let (q, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                out.push((mono_div(m, dm), q));
            }
            return Some(Poly { terms: out });
        }
        // quick degree rejection
        for s in Symbol::ALL {
            if d.degree_in(s) > self.degree_in(s) {
                return None;
            }
        }
        let (dm, dc) = &d.terms[0];
        let mut rem = self.clone();
        let mut quot: Vec<(Mono, BigInt)> = Vec::new();
        while let Some((rm, rc)) = rem.terms.first() {
            if !mono_divides(dm, rm) {
                return None;
            }
            let (q, r) = rc.div_rem(dc);
            if !r.is_zero() {
                return None;
            }
            let qm = mono_div(rm, dm);
            let tail = Poly {
                terms: d.terms[1..]
                    .iter()
                    .map(|(m, c)| (mono_mul(m, &qm), -(c * &q)))
                    .collect(),
            };
            rem.terms.remove(0);
            rem = &rem + &tail;
            quot.push((qm, q));
        }
        Some(Poly { terms: quot })
    }

    /// Coefficients with respect to `s`: entry `k` is the coefficient of `s^k`.
    pub fn coeffs_in(&self, s: Symbol) -> Vec<Poly> {
        let i = s.index();
        let deg = self.degree_in(s);
        let mut buckets: Vec<Vec<(Mono, BigInt)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let mut mm = *m;
            let e = mm[i] as usize;
            mm[i] = 0;
            buckets[e].push((mm, c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut t| {
                // removing one variable keeps lex order among terms of equal exponent
                t.sort_unstable_by(|x, y| y.0.cmp(&x.0));
                Poly { terms: t }
            })
            .collect()
    }

    pub fn from_coeffs_in(s: Symbol, coeffs: &[Poly]) -> Poly {
        let i = s.index();
        let mut terms = Vec::new();
        for (k, p) in coeffs.iter().enumerate() {
            for (m, c) in &p.terms {
                let mut mm = *m;
                mm[i] += k as u16;
                terms.push((mm, c.clone()));
            }
        }
        Poly::from_terms(terms)
    }

    /// Substitutes `x ↦ values[x]` for every symbol with a binding, keeping
    /// the others symbolic.
    pub fn eval_partial(&self, values: &[Option<Poly>; NVARS]) -> Poly {
        let mut powers: Vec<Vec<Poly>> = vec![Vec::new(); NVARS];
        for (i, v) in values.iter().enumerate() {
            if let Some(v) = v {
                let deg = self.degree_in(Symbol::ALL[i]);
                let mut pw = Vec::with_capacity(deg + 1);
                pw.push(Poly::one());
                for k in 1..=deg {
                    let next = &pw[k - 1] * v;
                    pw.push(next);
                }
                powers[i] = pw;
            }
        }
        let mut acc: Vec<(Mono, BigInt)> = Vec::new();
        for (m, c) in &self.terms {
            let mut free = *m;
            let mut term = Poly::constant(c.clone());
            for i in 0..NVARS {
                if values[i].is_some() {
                    term = &term * &powers[i][m[i] as usize];
                    free[i] = 0;
                }
            }
            acc.extend(term.mul_mono(&free).terms);
        }
        Poly::from_terms(acc)
    }

    /// Value modulo the prime `p` at the integer point `point` (residues mod p).
    pub(crate) fn eval_mod(&self, point: &[u64; NVARS], p: u64) -> u64 {
        let mut acc = 0u64;
        for (m, c) in &self.terms {
            let mut v = bigint_mod(c, p);
            for i in 0..NVARS {
                if m[i] > 0 {
                    v = mulmod(v, powmod(point[i], m[i] as u64, p), p);
                }
            }
            acc = addmod(acc, v, p);
        }
        acc
    }
}

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

pub(crate) fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn bigint_mod(c: &BigInt, p: u64) -> u64 {
    let r = c.mod_floor(&BigInt::from(p));
    let (_, digits) = r.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

fn merge(x: &[(Mono, BigInt)], y: &[(Mono, BigInt)], negate_y: bool) -> Vec<(Mono, BigInt)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() && j < y.len() {
        match x[i].0.cmp(&y[j].0) {
            std::cmp::Ordering::Greater => {
                out.push(x[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                let c = if negate_y { -&y[j].1 } else { y[j].1.clone() };
                out.push((y[j].0, c));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = if negate_y {
                    &x[i].1 - &y[j].1
                } else {
                    &x[i].1 + &y[j].1
                };
                if !c.is_zero() {
                    out.push((x[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&x[i..]);
    for t in &y[j..] {
        let c = if negate_y { -&t.1 } else { t.1.clone() };
        out.push((t.0, c));
    }
    out
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly {
            terms: merge(&self.terms, &rhs.terms, false),
        }
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        Poly {
            terms: merge(&self.terms, &rhs.terms, true),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let (small, big) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        if small.terms.len() == 1 {
            let (m, c) = &small.terms[0];
            return Poly {
                terms: big
                    .terms
                    .iter()
                    .map(|(bm, bc)| (mono_mul(bm, m), bc * c))
                    .collect(),
            };
        }
        let mut prods = Vec::with_capacity(small.terms.len() * big.terms.len());
        for (m1, c1) in &small.terms {
            for (m2, c2) in &big.terms {
                prods.push((mono_mul(m1, m2), c1 * c2));
            }
        }
        Poly::from_terms(prods)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -self.clone()
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

fn write_mono(f: &mut fmt::Formatter<'_>, m: &Mono) -> fmt::Result {
    let mut first = true;
    for s in Symbol::ALL {
        let e = m[s.index()];
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(s.name())?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    /// Expanded form, monomials lex-descending: `-a*b - a + b + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let abs = c.abs();
            if *m == ONE_MONO {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_mono(f, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Poly {
        Poly::var(Symbol::A)
    }
    fn b() -> Poly {
        Poly::var(Symbol::B)
    }

    #[test]
    fn display_is_lex_descending() {
        let p = &(&Poly::one() - &a()) * &(&Poly::one() + &b());
        assert_eq!(p.to_string(), "-a*b - a + b + 1");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!((&a() * &a()).scale(&BigInt::from(-3)).to_string(), "-3*a^2");
    }

    #[test]
    fn exact_division() {
        let bm1 = &b() - &Poly::one();
        let bp1 = &b() + &Poly::one();
        let prod = &bm1 * &bp1;
        assert_eq!(prod.div_exact(&bm1), Some(bp1.clone()));
        assert_eq!(bm1.div_exact(&bp1), None);
        assert_eq!(
            prod.scale(&BigInt::from(6)).div_exact(&Poly::constant(4)),
            None
        );
    }

    #[test]
    fn coeff_views_roundtrip() {
        let p = &(&(&a() * &b()) + &a().pow(3)) - &b();
        let cs = p.coeffs_in(Symbol::A);
        assert_eq!(cs.len(), 4);
        assert_eq!(Poly::from_coeffs_in(Symbol::A, &cs), p);
    }
}

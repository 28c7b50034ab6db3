use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::gcd::gcd;
use super::poly::{Poly, Symbol, NVARS};
use crate::error::{Error, Result};

/// Element of `Q(a, b, c, q, t, α)` in canonical form: `num/den` with
/// `gcd(num, den) = 1` over `Z[a, …, α]` (integer content included) and the
/// lex-leading coefficient of `den` positive. Structural equality is value
/// equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coeff {
    num: Poly,
    den: Poly,
}

impl Default for Coeff {
    fn default() -> Self {
        Coeff::zero()
    }
}

impl Coeff {
    pub fn zero() -> Self {
        Coeff {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Coeff::from_poly(Poly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Coeff::from_poly(Poly::constant(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Coeff::from_poly(Poly::constant(n))
    }

    pub fn from_ratio(r: &BigRational) -> Self {
        Coeff::canonical(Poly::constant(r.numer().clone()), Poly::constant(r.denom().clone()))
    }

    pub fn symbol(s: Symbol) -> Self {
        Coeff::from_poly(Poly::var(s))
    }

    pub fn from_poly(p: Poly) -> Self {
        Coeff {
            num: p,
            den: Poly::one(),
        }
    }

    /// `num / den` in canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Coeff::canonical(num, den))
    }

    fn canonical(num: Poly, den: Poly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Coeff::zero();
        }
        let g = gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        if den.leading_coeff().is_negative() {
            num = -num;
            den = -den;
        }
        Coeff { num, den }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a rational number, if it involves no symbols.
    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(BigRational::new(n, d))
    }

    /// Symbols occurring in numerator or denominator.
    pub fn symbols(&self) -> Vec<Symbol> {
        let mask = self.num.var_mask() | self.den.var_mask();
        Symbol::ALL
            .iter()
            .copied()
            .filter(|s| mask & (1 << s.index()) != 0)
            .collect()
    }

    pub fn inv(&self) -> Result<Coeff> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading_coeff().is_negative() {
            num = -num;
            den = -den;
        }
        Ok(Coeff { num, den })
    }

    pub fn checked_div(&self, rhs: &Coeff) -> Result<Coeff> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Coeff> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs() as usize;
        Ok(Coeff {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    pub fn powu(&self, e: usize) -> Coeff {
        Coeff {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn scale_int(&self, k: &BigInt) -> Coeff {
        self * &Coeff::from_bigint(k.clone())
    }

    /// Simultaneous substitution of rational-function values for symbols.
    pub fn substitute(&self, bindings: &[(Symbol, Coeff)]) -> Result<Coeff> {
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        let mut nums: [Option<Poly>; NVARS] = Default::default();
        let mut dens: [Option<Poly>; NVARS] = Default::default();
        for (s, v) in bindings {
            nums[s.index()] = Some(v.num.clone());
            dens[s.index()] = Some(v.den.clone());
        }
        let (sn, dn) = homogenized_eval(&self.num, &nums, &dens);
        let (sd, dd) = homogenized_eval(&self.den, &nums, &dens);
        if sd.is_zero() {
            return Err(Error::PoleAtSpecialization);
        }
        // num/den = (sn / Π d^dn) / (sd / Π d^dd)
        let mut top = sn;
        let mut bottom = sd;
        for i in 0..NVARS {
            let Some(d) = &dens[i] else { continue };
            if d.is_one() {
                continue;
            }
            if dd[i] > dn[i] {
                top = &top * &d.pow(dd[i] - dn[i]);
            } else if dn[i] > dd[i] {
                bottom = &bottom * &d.pow(dn[i] - dd[i]);
            }
        }
        Ok(Coeff::canonical(top, bottom))
    }

    /// Canonical string: `num` when the denominator is 1, else `((num))/((den))`.
    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }
}

/// `p(n_1/d_1, …) · Π d_i^{D_i}` with `D_i = deg_{x_i} p`, computed in
/// polynomial arithmetic only.
fn homogenized_eval(
    p: &Poly,
    nums: &[Option<Poly>; NVARS],
    dens: &[Option<Poly>; NVARS],
) -> (Poly, [usize; NVARS]) {
    let mut degs = [0usize; NVARS];
    let mut num_pows: Vec<Vec<Poly>> = vec![Vec::new(); NVARS];
    let mut den_pows: Vec<Vec<Poly>> = vec![Vec::new(); NVARS];
    for i in 0..NVARS {
        if let (Some(n), Some(d)) = (&nums[i], &dens[i]) {
            let deg = p.degree_in(Symbol::ALL[i]);
            degs[i] = deg;
            num_pows[i] = successive_powers(n, deg);
            den_pows[i] = successive_powers(d, deg);
        }
    }
    let mut acc: Vec<(super::poly::Mono, BigInt)> = Vec::new();
    for (m, c) in p.terms() {
        let mut free = *m;
        let mut term = Poly::constant(c.clone());
        for i in 0..NVARS {
            if nums[i].is_some() {
                let e = m[i] as usize;
                term = &term * &num_pows[i][e];
                term = &term * &den_pows[i][degs[i] - e];
                free[i] = 0;
            }
        }
        acc.extend(term.mul_mono(&free).terms().iter().cloned());
    }
    (Poly::from_terms(acc), degs)
}

fn successive_powers(x: &Poly, deg: usize) -> Vec<Poly> {
    let mut out = Vec::with_capacity(deg + 1);
    out.push(Poly::one());
    for k in 1..=deg {
        let next = &out[k - 1] * x;
        out.push(next);
    }
    out
}

fn add_impl(x: &Coeff, y: &Coeff, negate_y: bool) -> Coeff {
    let ynum = if negate_y { -&y.num } else { y.num.clone() };
    if y.is_zero() {
        return x.clone();
    }
    if x.is_zero() {
        return Coeff {
            num: ynum,
            den: y.den.clone(),
        };
    }
    if x.den == y.den {
        let num = &x.num + &ynum;
        if x.den.is_one() {
            return Coeff::from_poly(num);
        }
        return Coeff::canonical(num, x.den.clone());
    }
    if x.den.is_one() {
        return Coeff {
            num: &(&x.num * &y.den) + &ynum,
            den: y.den.clone(),
        };
    }
    if y.den.is_one() {
        return Coeff {
            num: &x.num + &(&ynum * &x.den),
            den: x.den.clone(),
        };
    }
    let g = gcd(&x.den, &y.den);
    if g.is_one() {
        let num = &(&x.num * &y.den) + &(&ynum * &x.den);
        if num.is_zero() {
            return Coeff::zero();
        }
        return Coeff {
            num,
            den: &x.den * &y.den,
        };
    }
    let xd = x.den.div_exact(&g).expect("gcd divides");
    let yd = y.den.div_exact(&g).expect("gcd divides");
    let num = &(&x.num * &yd) + &(&ynum * &xd);
    if num.is_zero() {
        return Coeff::zero();
    }
    let g2 = gcd(&num, &g);
    if g2.is_one() {
        return Coeff {
            num,
            den: &xd * &y.den,
        };
    }
    Coeff {
        num: num.div_exact(&g2).expect("gcd divides"),
        den: &xd * &y.den.div_exact(&g2).expect("gcd divides"),
    }
}

fn mul_impl(x: &Coeff, y: &Coeff) -> Coeff {
    if x.is_zero() || y.is_zero() {
        return Coeff::zero();
    }
    if x.den.is_one() && y.den.is_one() {
        return Coeff::from_poly(&x.num * &y.num);
    }
    let g1 = gcd(&x.num, &y.den);
    let g2 = gcd(&y.num, &x.den);
    let xn = x.num.div_exact(&g1).expect("gcd divides");
    let yd = y.den.div_exact(&g1).expect("gcd divides");
    let yn = y.num.div_exact(&g2).expect("gcd divides");
    let xd = x.den.div_exact(&g2).expect("gcd divides");
    Coeff {
        num: &xn * &yn,
        den: &xd * &yd,
    }
}

impl Add for &Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        add_impl(self, rhs, false)
    }
}

impl Sub for &Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        add_impl(self, rhs, true)
    }
}

impl Mul for &Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        mul_impl(self, rhs)
    }
}

impl Div for &Coeff {
    type Output = Coeff;
    /// Panics on division by zero; use [`Coeff::checked_div`] for fallible input.
    fn div(self, rhs: &Coeff) -> Coeff {
        self.checked_div(rhs).expect("division by zero Coeff")
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff {
            num: -self.num,
            den: self.den,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Coeff {
            type Output = Coeff;
            fn $m(self, rhs: Coeff) -> Coeff {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Coeff> for Coeff {
            type Output = Coeff;
            fn $m(self, rhs: &Coeff) -> Coeff {
                (&self).$m(rhs)
            }
        }
        impl $tr<Coeff> for &Coeff {
            type Output = Coeff;
            fn $m(self, rhs: Coeff) -> Coeff {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Coeff> for Coeff {
    fn add_assign(&mut self, rhs: &Coeff) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Coeff> for Coeff {
    fn sub_assign(&mut self, rhs: &Coeff) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Coeff> for Coeff {
    fn mul_assign(&mut self, rhs: &Coeff) {
        *self = &*self * rhs;
    }
}

impl Sum for Coeff {
    fn sum<I: Iterator<Item = Coeff>>(iter: I) -> Coeff {
        iter.fold(Coeff::zero(), |acc, x| &acc + &x)
    }
}

impl<'a> Sum<&'a Coeff> for Coeff {
    fn sum<I: Iterator<Item = &'a Coeff>>(iter: I) -> Coeff {
        iter.fold(Coeff::zero(), |acc, x| &acc + x)
    }
}

impl Product for Coeff {
    fn product<I: Iterator<Item = Coeff>>(iter: I) -> Coeff {
        iter.fold(Coeff::one(), |acc, x| &acc * &x)
    }
}

impl From<i64> for Coeff {
    fn from(n: i64) -> Coeff {
        Coeff::from_int(n)
    }
}

impl From<Symbol> for Coeff {
    fn from(s: Symbol) -> Coeff {
        Coeff::symbol(s)
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "(({}))/(({}))", self.num, self.den)
        }
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct CoeffJson {
    num: String,
    den: String,
}

impl Serialize for Coeff {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CoeffJson {
            num: self.num.to_string(),
            den: self.den.to_string(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Coeff {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = CoeffJson::deserialize(deserializer)?;
        let num: Coeff = raw.num.parse().map_err(serde::de::Error::custom)?;
        let den: Coeff = raw.den.parse().map_err(serde::de::Error::custom)?;
        num.checked_div(&den).map_err(serde::de::Error::custom)
    }
}

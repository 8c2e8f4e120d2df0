//! Sparse Laurent polynomials in `q, t, z, s` with arbitrary-precision
//! integer coefficients.
//!
//! Monomials are dense exponent vectors `[q, t, z, s]` ordered
//! lexicographically. The text form lists terms in increasing monomial
//! order, e.g. `1 + q^2 + 2*q^3*t`.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q = 0,
    T = 1,
    Z = 2,
    S = 3,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::Q, Var::T, Var::Z, Var::S];

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T => "t",
            Var::Z => "z",
            Var::S => "s",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Exponent vector over `[q, t, z, s]`.
pub type Exponents = [i32; 4];

pub fn exponents(q: i32, t: i32, z: i32, s: i32) -> Exponents {
    [q, t, z, s]
}

fn add_exp(a: &Exponents, b: &Exponents) -> Exponents {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

fn sub_exp(a: &Exponents, b: &Exponents) -> Exponents {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

/// A Laurent polynomial; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, [0; 4])
    }

    pub fn monomial(c: impl Into<BigInt>, e: Exponents) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, k: i32) -> Self {
        let mut e = [0; 4];
        e[v.index()] = k;
        Self::monomial(1, e)
    }

    /// `[n]_q = 1 + q + ... + q^{n-1}`.
    pub fn q_integer(n: usize) -> Self {
        (0..n).map(|k| Self::var_pow(Var::Q, k as i32)).sum()
    }

    /// Builds a polynomial from exponent/count pairs, merging duplicates.
    pub fn from_counts<I>(counts: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, i64)>,
    {
        let mut p = Self::zero();
        for (e, c) in counts {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    pub fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exponents) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// Coefficient of `q^k` in a polynomial in `q` alone.
    pub fn coeff_q(&self, k: i32) -> BigInt {
        self.coeff(&[k, 0, 0, 0])
    }

    fn leading(&self) -> Option<(&Exponents, &BigInt)> {
        self.terms.last_key_value()
    }

    pub fn max_degree(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|e| e[v.index()]).max()
    }

    pub fn min_degree(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|e| e[v.index()]).min()
    }

    fn min_exponents(&self) -> Exponents {
        let mut m = [0; 4];
        for v in Var::ALL {
            m[v.index()] = self.min_degree(v).unwrap_or(0);
        }
        m
    }

    /// Multiplies by the monomial with exponent vector `e`.
    pub fn shift(&self, e: Exponents) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (add_exp(k, &e), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Drops every term whose degree in `v` exceeds `max`.
    pub fn truncate(&self, v: Var, max: i32) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[v.index()] <= max)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    pub fn nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Sum of the coefficients, i.e. the value at `q = t = z = s = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Simultaneous substitution `v ↦ p_v`. A negative power of `v` is only
    /// allowed when `p_v` is a monomial with coefficient `±1`.
    pub fn substitute(&self, map: &[(Var, LaurentPoly)]) -> Result<Self> {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut kept = *e;
            let mut factor = Self::constant(c.clone());
            for (v, target) in map {
                let k = e[v.index()];
                kept[v.index()] = 0;
                let power = if k >= 0 {
                    target.pow(k as u32)
                } else {
                    target.unit_inverse()?.pow((-k) as u32)
                };
                factor = &factor * &power;
            }
            out += &factor.shift(kept);
        }
        Ok(out)
    }

    /// Inverse of a unit monomial `±x^e`.
    fn unit_inverse(&self) -> Result<Self> {
        match self.terms.iter().next() {
            Some((e, c)) if self.terms.len() == 1 && c.abs().is_one() => {
                Ok(Self::monomial(c.clone(), sub_exp(&[0; 4], e)))
            }
            _ => Err(Error::Substitution(format!(
                "negative power of non-monomial {self}"
            ))),
        }
    }

    /// Exact division. Both operands are first shifted to honest
    /// polynomials, then divided by leading-term elimination in lex order;
    /// any leftover remainder is an error.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::InexactDivision("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let shift_num = self.min_exponents();
        let shift_den = divisor.min_exponents();
        let mut rem = self.shift(sub_exp(&[0; 4], &shift_num));
        let den = divisor.shift(sub_exp(&[0; 4], &shift_den));
        let (lead_e, lead_c) = {
            let (e, c) = den.leading().expect("nonzero divisor");
            (*e, c.clone())
        };
        let mut quotient = Self::zero();
        while let Some((e, c)) = rem.leading() {
            let e = *e;
            let diff = sub_exp(&e, &lead_e);
            if diff.iter().any(|&x| x < 0) || !(c % &lead_c).is_zero() {
                return Err(Error::InexactDivision(format!(
                    "({self}) / ({divisor}) leaves remainder {rem}"
                )));
            }
            let step = Self::monomial(c / &lead_c, diff);
            rem -= &(&step * &den);
            quotient += &step;
        }
        Ok(quotient.shift(sub_exp(&shift_num, &shift_den)))
    }

    /// Lowest monomial where the two polynomials differ, with both coefficients.
    pub fn first_difference(&self, other: &LaurentPoly) -> Option<(Exponents, BigInt, BigInt)> {
        let diff = self - other;
        let (e, _) = diff.terms.iter().next()?;
        Some((*e, self.coeff(e), other.coeff(e)))
    }

    /// JSON array of `{exponents: [q,t,z,s], coeff}` in increasing monomial
    /// order. Coefficients outside the `i64` range are written as strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| {
                    let coeff = match c.to_i64() {
                        Some(x) => json!(x),
                        None => json!(c.to_string()),
                    };
                    json!({ "exponents": e, "coeff": coeff })
                })
                .collect(),
        )
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |reason: &str| Error::ParsePoly {
            input: value.to_string(),
            reason: reason.to_string(),
        };
        let arr = value.as_array().ok_or_else(|| bad("expected an array"))?;
        let mut p = Self::zero();
        for term in arr {
            let exps = term
                .get("exponents")
                .and_then(Value::as_array)
                .filter(|a| a.len() == 4)
                .ok_or_else(|| bad("exponents must be a length-4 array"))?;
            let mut e = [0i32; 4];
            for (slot, x) in e.iter_mut().zip(exps) {
                *slot = x
                    .as_i64()
                    .and_then(|x| i32::try_from(x).ok())
                    .ok_or_else(|| bad("exponent is not a 32-bit integer"))?;
            }
            let coeff = match term.get("coeff") {
                Some(Value::Number(n)) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| bad("coefficient is not an integer"))?,
                Some(Value::String(s)) => s.parse::<BigInt>().map_err(|_| bad("bad coefficient"))?,
                _ => return Err(bad("missing coefficient")),
            };
            p.add_term(e, coeff);
        }
        Ok(p)
    }
}

/// Variables inside a monomial are written alphabetically.
fn fmt_monomial(e: &Exponents) -> String {
    [Var::Q, Var::S, Var::T, Var::Z]
        .iter()
        .filter(|v| e[v.index()] != 0)
        .map(|v| match e[v.index()] {
            1 => v.name().to_string(),
            k => format!("{}^{k}", v.name()),
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let mono = fmt_monomial(e);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let bad = |reason: &str| Error::ParsePoly {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty input"));
        }
        // split into signed terms; a sign right after '^' belongs to an exponent
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && prev != Some('^') {
                if !current.is_empty() {
                    terms.push((negative, std::mem::take(&mut current)));
                } else if prev.is_some() {
                    return Err(bad("dangling sign"));
                }
                negative = ch == '-';
            } else {
                current.push(ch);
            }
            prev = Some(ch);
        }
        if current.is_empty() {
            return Err(bad("trailing sign"));
        }
        terms.push((negative, current));

        let mut p = Self::zero();
        for (neg, body) in terms {
            let mut coeff = BigInt::one();
            let mut e = [0i32; 4];
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(bad("empty factor"));
                }
                if factor.chars().all(|c| c.is_ascii_digit()) {
                    coeff *= factor.parse::<BigInt>().map_err(|_| bad("bad integer"))?;
                    continue;
                }
                let (name, power) = match factor.split_once('^') {
                    Some((n, k)) => (n, k.parse::<i32>().map_err(|_| bad("bad exponent"))?),
                    None => (factor, 1),
                };
                let v = Var::from_name(name).ok_or_else(|| bad("unknown variable"))?;
                e[v.index()] += power;
            }
            if neg {
                coeff = -coeff;
            }
            p.add_term(e, coeff);
        }
        Ok(p)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(add_exp(ea, eb), ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| acc * p)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn display_orders_monomials() {
        let x = p("2*t^2 + s^4 + 3*s^2*t");
        assert_eq!(x.to_string(), "s^4 + 3*s^2*t + 2*t^2");
        assert_eq!(p("q^2*t + 1").to_string(), "1 + q^2*t");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p("-q + q^-2").to_string(), "q^-2 - q");
        assert_eq!(p("-1").to_string(), "-1");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("1 +".parse::<LaurentPoly>().is_err());
        assert!("x^2".parse::<LaurentPoly>().is_err());
        assert!("q^".parse::<LaurentPoly>().is_err());
        assert!("2**q".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn q_integers_and_division() {
        let four = LaurentPoly::q_integer(4);
        assert_eq!(four.to_string(), "1 + q + q^2 + q^3");
        let two = LaurentPoly::q_integer(2);
        assert_eq!(four.div_exact(&two).unwrap(), p("1 + q^2"));
        assert!(four.div_exact(&LaurentPoly::q_integer(3)).is_err());
        assert!(four.div_exact(&LaurentPoly::zero()).is_err());
        assert!(p("1").div_exact(&p("2")).is_err());
    }

    #[test]
    fn laurent_division() {
        let a = p("q^-3 + q^-1*t");
        let b = p("q^-1");
        assert_eq!(a.div_exact(&b).unwrap(), p("q^-2 + t"));
        let c = p("s^2 - t^2");
        assert_eq!(c.div_exact(&p("s - t")).unwrap(), p("s + t"));
    }

    #[test]
    fn substitution() {
        let three = LaurentPoly::q_integer(3);
        let inv = three
            .substitute(&[(Var::Q, LaurentPoly::var_pow(Var::Q, -1))])
            .unwrap();
        assert_eq!(inv, p("1 + q^-1 + q^-2"));
        let x = p("q*t^2");
        let y = x
            .substitute(&[
                (Var::Q, LaurentPoly::var_pow(Var::Q, -1)),
                (Var::T, p("q^4*t")),
            ])
            .unwrap();
        assert_eq!(y, p("q^7*t^2"));
        assert!(p("q^-1").substitute(&[(Var::Q, p("1 + q"))]).is_err());
        assert_eq!(p("s^2 + t").substitute(&[(Var::S, p("1 + q")), (Var::T, p("-q"))]).unwrap(), p("1 + q + q^2"));
    }

    #[test]
    fn json_round_trip_with_huge_coefficient() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let x = LaurentPoly::monomial(big, [1, -2, 0, 3]) + p("-5*z");
        let back = LaurentPoly::from_json(&x.to_json()).unwrap();
        assert_eq!(back, x);
        let j = p("1 + q^2").to_json();
        assert_eq!(j.to_string(), r#"[{"coeff":1,"exponents":[0,0,0,0]},{"coeff":1,"exponents":[2,0,0,0]}]"#);
    }

    #[test]
    fn first_difference_reports_lowest_monomial() {
        let a = p("1 + 2*q + q^3");
        let b = p("1 + q + q^3 + q^4");
        let (e, x, y) = a.first_difference(&b).unwrap();
        assert_eq!(e, [1, 0, 0, 0]);
        assert_eq!((x, y), (BigInt::from(2), BigInt::from(1)));
        assert!(a.first_difference(&a).is_none());
    }
}

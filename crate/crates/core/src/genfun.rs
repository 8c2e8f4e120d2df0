//! Generating functions: statistic distributions over word families and
//! the named polynomial families built on [`LaurentPoly`].

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::family::Family;
use crate::poly::{Exponents, LaurentPoly, Var};
use crate::word::Word;

/// A word statistic that can be recorded as the exponent of a variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statistic {
    Maj,
    Inv,
    Des,
    Exc,
    /// `e(w)`; binary words only, may be negative.
    MaxExcess,
    Length,
}

impl Statistic {
    pub fn eval(self, w: &Word) -> Result<i64> {
        Ok(match self {
            Statistic::Maj => w.maj() as i64,
            Statistic::Inv => w.inv() as i64,
            Statistic::Des => w.des() as i64,
            Statistic::Exc => w.exc() as i64,
            Statistic::MaxExcess => w.max_excess()?,
            Statistic::Length => w.len() as i64,
        })
    }
}

/// `Σ_w Π_j x_j^{stat_j(w)}` over a finite collection of words.
pub fn distribution<'a, I>(words: I, stats: &[(Statistic, Var)]) -> Result<LaurentPoly>
where
    I: IntoIterator<Item = &'a Word>,
{
    let mut counts: HashMap<Exponents, i64> = HashMap::new();
    for w in words {
        let mut e = [0i32; 4];
        for &(stat, var) in stats {
            e[var as usize] += stat.eval(w)? as i32;
        }
        *counts.entry(e).or_insert(0) += 1;
    }
    Ok(LaurentPoly::from_counts(counts))
}

pub fn maj_distribution<'a>(words: impl IntoIterator<Item = &'a Word>) -> LaurentPoly {
    distribution(words, &[(Statistic::Maj, Var::Q)]).expect("maj is total")
}

pub fn inv_distribution<'a>(words: impl IntoIterator<Item = &'a Word>) -> LaurentPoly {
    distribution(words, &[(Statistic::Inv, Var::Q)]).expect("inv is total")
}

/// `Σ_w q^{maj w} t^{des w}`.
pub fn maj_des_distribution<'a>(words: impl IntoIterator<Item = &'a Word>) -> LaurentPoly {
    distribution(words, &[(Statistic::Maj, Var::Q), (Statistic::Des, Var::T)])
        .expect("maj and des are total")
}

/// `[n]! = [1][2]...[n]`.
pub fn q_factorial(n: usize) -> LaurentPoly {
    (1..=n).map(LaurentPoly::q_integer).product()
}

/// Gaussian binomial `[n; k] = Π_{i=1..k} (1 - q^{n-k+i}) / (1 - q^i)`,
/// zero outside `0 <= k <= n`.
pub fn q_binomial(n: i64, k: i64) -> LaurentPoly {
    if n < 0 || k < 0 || k > n {
        return LaurentPoly::zero();
    }
    let (n, k) = (n as usize, k.min(n - k) as usize);
    let mut c = vec![BigInt::zero(); k * (n - k) + k + 1];
    c[0] = BigInt::one();
    // degree of the running product
    let mut deg = 0;
    for i in 1..=k {
        let a = n - k + i;
        deg += a;
        for m in (a..=deg).rev() {
            let sub = c[m - a].clone();
            c[m] -= sub;
        }
        // dividing by 1 - q^i keeps every partial quotient a polynomial
        for m in i..=deg - i {
            let add = c[m - i].clone();
            c[m] += add;
        }
        for x in &mut c[deg - i + 1..=deg] {
            *x = BigInt::zero();
        }
        deg -= i;
    }
    c.truncate(deg + 1);
    series_from_coeffs(c)
}

fn ballot_words(ones: i64, twos: i64) -> Vec<Word> {
    if ones < 0 || twos < 0 {
        return Vec::new();
    }
    Family::Ballot {
        ones: ones as usize,
        twos: twos as usize,
    }
    .enumerate()
    .expect("finite family")
}

/// `c_n(q,t) = Σ_{w ∈ B_n} q^{maj w} t^{des w}`.
pub fn catalan_qt(n: usize) -> LaurentPoly {
    catalan_triangle_qt(2 * n as i64, n as i64)
}

/// `c_{n,d}(q,t)` over `B_{n-d,d}`; zero when `d < 0`.
pub fn catalan_triangle_qt(n: i64, d: i64) -> LaurentPoly {
    maj_des_distribution(&ballot_words(n - d, d))
}

/// `C_{n,d}(q) = Σ_{w ∈ B_{n-d,d}} q^{inv w}`.
pub fn catalan_triangle_q(n: i64, d: i64) -> LaurentPoly {
    inv_distribution(&ballot_words(n - d, d))
}

/// The Carlitz–Riordan `C_n(q) = C_{2n,n}(q)`.
pub fn q_catalan(n: usize) -> LaurentPoly {
    catalan_triangle_q(2 * n as i64, n as i64)
}

/// `δ_{n,d}(q,t) = c_{n,d}(q,t) - c_{n-1,d-1}(q,t)`.
pub fn catalan_delta_qt(n: i64, d: i64) -> LaurentPoly {
    &catalan_triangle_qt(n, d) - &catalan_triangle_qt(n - 1, d - 1)
}

/// `f_n(q,t)` by enumeration of binary words with no adjacent ones.
pub fn fib_poly(n: usize) -> LaurentPoly {
    maj_des_distribution(&Family::NoAdjacentOnes(n).enumerate().expect("finite family"))
}

/// `f_n = f_{n-1} + q^{n-1} t f_{n-2}` from `f_0 = 1`, `f_1 = 2`.
pub fn fib_poly_recursive(n: usize) -> LaurentPoly {
    let mut prev = LaurentPoly::one();
    if n == 0 {
        return prev;
    }
    let mut cur = LaurentPoly::constant(2);
    for m in 2..=n {
        let step = LaurentPoly::monomial(1, [m as i32 - 1, 1, 0, 0]);
        let next = &cur + &(&step * &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `Σ_k q^{k(k-1)} t^{k-1} ([n-k; k-1] + q^k t [n-k; k])`.
pub fn fib_poly_closed_form(n: usize) -> LaurentPoly {
    let n = n as i64;
    let mut total = LaurentPoly::zero();
    for k in 0..=n + 1 {
        let lead = LaurentPoly::monomial(1, [(k * (k - 1)) as i32, (k - 1) as i32, 0, 0]);
        let inner = &q_binomial(n - k, k - 1)
            + &(&LaurentPoly::monomial(1, [k as i32, 1, 0, 0]) * &q_binomial(n - k, k));
        total += &(&lead * &inner);
    }
    total
}

/// `Σ_k q^{k(k-1)} [n-k+1; k]`, the `t = 1` specialization of `f_n`.
pub fn fib_poly_at_t1(n: usize) -> LaurentPoly {
    let n = n as i64;
    (0..=n + 1)
        .map(|k| q_binomial(n - k + 1, k).shift([(k * (k - 1)) as i32, 0, 0, 0]))
        .sum()
}

/// `{n}` with `{0} = 0`, `{1} = 1`, `{n} = s{n-1} + t{n-2}`.
pub fn lucas_poly(n: usize) -> LaurentPoly {
    let s = LaurentPoly::var(Var::S);
    let t = LaurentPoly::var(Var::T);
    let mut prev = LaurentPoly::zero();
    let mut cur = LaurentPoly::one();
    if n == 0 {
        return prev;
    }
    for _ in 2..=n {
        let next = &(&s * &cur) + &(&t * &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `{n}! = {1}{2}...{n}`.
pub fn lucas_factorial(n: usize) -> LaurentPoly {
    (1..=n).map(lucas_poly).product()
}

/// Lucanomial `{n}! / ({k}! {n-k}!)`, zero outside `0 <= k <= n`.
pub fn lucanomial(n: i64, k: i64) -> Result<LaurentPoly> {
    if n < 0 || k < 0 || k > n {
        return Ok(LaurentPoly::zero());
    }
    let (n, k) = (n as usize, k as usize);
    let den = &lucas_factorial(k) * &lucas_factorial(n - k);
    lucas_factorial(n).div_exact(&den)
}

/// `C_{{n}} = lucanomial(2n, n) / {n+1}`.
pub fn st_catalan(n: usize) -> Result<LaurentPoly> {
    lucanomial(2 * n as i64, n as i64)?.div_exact(&lucas_poly(n + 1))
}

/// `Π 1/(1 - q^i)` over `1 <= i <= degree` with `allowed(i)`, modulo `q^{degree+1}`.
pub fn truncated_product(allowed: impl Fn(usize) -> bool, degree: usize) -> LaurentPoly {
    let mut coeffs = vec![BigInt::zero(); degree + 1];
    coeffs[0] = BigInt::one();
    for part in (1..=degree).filter(|&i| allowed(i)) {
        for m in part..=degree {
            let add = coeffs[m - part].clone();
            coeffs[m] += add;
        }
    }
    series_from_coeffs(coeffs)
}

fn series_from_coeffs(coeffs: Vec<BigInt>) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for (k, c) in coeffs.into_iter().enumerate() {
        p.add_term([k as i32, 0, 0, 0], c);
    }
    p
}

/// `(q)_k = (1-q)(1-q^2)...(1-q^k)`.
pub fn q_pochhammer(k: usize) -> LaurentPoly {
    (1..=k)
        .map(|i| LaurentPoly::one() - LaurentPoly::var_pow(Var::Q, i as i32))
        .product()
}

/// Power-series inverse of a polynomial in `q` with constant term `±1`,
/// modulo `q^{degree+1}`.
pub fn series_inverse(p: &LaurentPoly, degree: usize) -> Result<LaurentPoly> {
    let c0 = p.coeff_q(0);
    if !(c0 == BigInt::one() || c0 == -BigInt::one()) {
        return Err(Error::Domain(format!("{p} is not invertible as a power series")));
    }
    if p.min_degree(Var::Q).unwrap_or(0) < 0
        || [Var::T, Var::Z, Var::S]
            .iter()
            .any(|&v| p.max_degree(v).unwrap_or(0) != 0 || p.min_degree(v).unwrap_or(0) != 0)
    {
        return Err(Error::Domain(format!("{p} is not a power series in q")));
    }
    let a: Vec<BigInt> = (0..=degree as i32).map(|k| p.coeff_q(k)).collect();
    let mut b = vec![BigInt::zero(); degree + 1];
    b[0] = c0.clone();
    for m in 1..=degree {
        let mut acc = BigInt::zero();
        for j in 1..=m {
            acc += &a[j] * &b[m - j];
        }
        // c0 = ±1 so dividing by it is multiplying by it
        b[m] = -acc * &c0;
    }
    Ok(series_from_coeffs(b))
}

/// Carlitz's `Σ_k q^{k²-k} / (q)_k` modulo `q^{degree+1}`.
pub fn carlitz_series(degree: usize) -> LaurentPoly {
    let mut total = LaurentPoly::zero();
    let mut k = 0usize;
    while k * k - k <= degree {
        let inv = series_inverse(&q_pochhammer(k), degree).expect("unit constant term");
        total += &inv.shift([(k * k - k) as i32, 0, 0, 0]);
        k += 1;
    }
    total.truncate(Var::Q, degree as i32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn ballot_distribution_small() {
        let b2 = Family::Catalan(2).enumerate().unwrap();
        assert_eq!(maj_distribution(&b2), p("1 + q^2"));
        assert!(maj_distribution(&[]).is_zero());
        assert_eq!(catalan_qt(2), p("1 + q^2*t"));
        assert_eq!(catalan_qt(0), p("1"));
    }

    #[test]
    fn q_binomial_values() {
        assert_eq!(q_binomial(4, 2), p("1 + q + 2*q^2 + q^3 + q^4"));
        assert_eq!(q_binomial(7, 0), p("1"));
        assert!(q_binomial(3, -1).is_zero());
        assert!(q_binomial(3, 4).is_zero());
    }

    #[test]
    fn lucanomial_values() {
        assert_eq!(lucas_poly(4), p("s^3 + 2*s*t"));
        assert_eq!(lucanomial(4, 2).unwrap(), p("s^4 + 3*s^2*t + 2*t^2"));
        assert_eq!(st_catalan(1).unwrap(), p("1"));
        assert!(lucanomial(2, 3).unwrap().is_zero());
    }

    #[test]
    fn fibonacci_base_cases() {
        assert_eq!(fib_poly(0), p("1"));
        assert_eq!(fib_poly(1), p("2"));
        assert_eq!(fib_poly_recursive(1), p("2"));
        assert_eq!(fib_poly_closed_form(0), p("1"));
        assert_eq!(fib_poly_closed_form(1), p("2"));
    }

    #[test]
    fn no_part_one_product() {
        let pr = truncated_product(|i| i >= 2, 5);
        assert_eq!(pr, p("1 + q^2 + q^3 + 2*q^4 + 2*q^5"));
    }

    #[test]
    fn series_inverse_of_one_minus_q() {
        let inv = series_inverse(&p("1 - q"), 4).unwrap();
        assert_eq!(inv, p("1 + q + q^2 + q^3 + q^4"));
        assert!(series_inverse(&p("2 - q"), 4).is_err());
    }
}

//! Checks on lucanomials and the s,t-Catalan numbers.

use num_bigint::BigInt;

use crate::error::Result;
use crate::genfun::{lucanomial, q_binomial, st_catalan};
use crate::poly::{LaurentPoly, Var};

use super::{get, spec, CheckSpec, Checker, Params};

pub(super) fn checks() -> Vec<CheckSpec> {
    vec![
        spec!(
            "lucanomial-positivity",
            "every lucanomial {n choose k} is a polynomial in s,t with nonnegative integer coefficients",
            quick: &[("n", 8)],
            full: &[("n", 12)],
            positivity
        ),
        spec!(
            "st-catalan-split",
            "C_{{n}} = {2n-1 choose n-1} + t {2n-1 choose n-2}",
            quick: &[("n", 6)],
            full: &[("n", 8)],
            st_catalan_split
        ),
        spec!(
            "lucanomial-specializations",
            "s = t = 1 gives fibonomial coefficients and s = 1+q, t = -q gives q-binomial coefficients",
            quick: &[("n", 6)],
            full: &[("n", 10)],
            specializations
        ),
    ]
}

fn positivity(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for n in 0..=get(p, "n") as i64 {
        for k in 0..=n {
            let l = lucanomial(n, k)?;
            c.ensure(l.nonnegative_coefficients(), || format!("{{{n} choose {k}}} = {l}"));
        }
    }
    Ok(c)
}

fn st_catalan_split(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for n in 1..=get(p, "n") as i64 {
        let rhs = &lucanomial(2 * n - 1, n - 1)?
            + &(&LaurentPoly::var(Var::T) * &lucanomial(2 * n - 1, n - 2)?);
        c.polys(format!("n = {n}"), st_catalan(n as usize)?, rhs);
    }
    Ok(c)
}

/// `F_1 = F_2 = 1` indexing; the value of `{n}` at `s = t = 1`.
fn fib(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::from(0), BigInt::from(1));
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

fn fibonomial(n: usize, k: usize) -> BigInt {
    let num: BigInt = (n - k + 1..=n).map(fib).product();
    let den: BigInt = (1..=k).map(fib).product();
    num / den
}

fn specializations(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    let ones = [(Var::S, LaurentPoly::one()), (Var::T, LaurentPoly::one())];
    let q = LaurentPoly::var(Var::Q);
    let qs = [(Var::S, &LaurentPoly::one() + &q), (Var::T, -q.clone())];
    for n in 0..=get(p, "n") {
        for k in 0..=n {
            let l = lucanomial(n as i64, k as i64)?;
            c.polys(
                format!("s = t = 1 at ({n},{k})"),
                l.substitute(&ones)?,
                LaurentPoly::constant(fibonomial(n, k)),
            );
            c.polys(
                format!("s = 1+q, t = -q at ({n},{k})"),
                l.substitute(&qs)?,
                q_binomial(n as i64, k as i64),
            );
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonomial_values() {
        assert_eq!(fibonomial(4, 2), BigInt::from(6));
        assert_eq!(fibonomial(5, 2), BigInt::from(15));
        assert_eq!(fibonomial(5, 0), BigInt::from(1));
    }
}

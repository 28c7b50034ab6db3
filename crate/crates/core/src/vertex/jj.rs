//! Two-row coefficients `Q_{(m,n)} = Σ_i g_i q_{(m+i, n-i)}`.

use crate::coeffs::{Coeff, Symbol};
use crate::error::{Error, Result};

fn check(m: usize, n: usize) -> Result<()> {
    if n < 1 || m < n {
        return Err(Error::InvalidArgument(format!(
            "two-row coefficients need m >= n >= 1, got ({m},{n})"
        )));
    }
    Ok(())
}

fn b_pow(k: usize) -> Coeff {
    Coeff::symbol(Symbol::B).powu(k)
}

/// `g_i = Π_{k<i}(1 - a b^k) / Π_{k=1}^{i}(1 - b^k)
///      · Π_{k=1}^{i-1}(b^{m-n+k} - 1) / Π_{k=1}^{i}(b^{m-n+k} - a)
///      · (b^{m-n+2i} - 1)`, with `g_0 = 1`.
pub fn jj_closed_form(m: usize, n: usize, i: usize) -> Result<Coeff> {
    check(m, n)?;
    if i > n {
        return Err(Error::InvalidArgument(format!("index {i} exceeds n = {n}")));
    }
    if i == 0 {
        return Ok(Coeff::one());
    }
    let one = Coeff::one();
    let a = Coeff::symbol(Symbol::A);
    let d = m - n;
    let mut num = &b_pow(d + 2 * i) - &one;
    let mut den = Coeff::one();
    for k in 0..i {
        num *= &(&one - &(&a * &b_pow(k)));
    }
    for k in 1..=i {
        den *= &(&one - &b_pow(k));
        den *= &(&b_pow(d + k) - &a);
    }
    for k in 1..i {
        num *= &(&b_pow(d + k) - &one);
    }
    num.checked_div(&den)
}

/// `g_0 = 1`, `g_i = (1-a)(b^{m-n+2i} - 1) / ((1 - b^i)(b^{m-n+i} - a)) · Σ_{j<i} g_j`.
pub fn jj_recursion(m: usize, n: usize) -> Result<Vec<Coeff>> {
    check(m, n)?;
    let one = Coeff::one();
    let a = Coeff::symbol(Symbol::A);
    let d = m - n;
    let mut g = vec![Coeff::one()];
    let mut partial = Coeff::one();
    for i in 1..=n {
        let factor = (&(&one - &a) * &(&b_pow(d + 2 * i) - &one))
            .checked_div(&(&(&one - &b_pow(i)) * &(&b_pow(d + i) - &a)))?;
        let gi = &factor * &partial;
        partial += &gi;
        g.push(gi);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::cf;

    #[test]
    fn closed_form_examples() {
        assert_eq!(jj_closed_form(3, 2, 0).unwrap(), Coeff::one());
        assert_eq!(jj_closed_form(1, 1, 1).unwrap(), cf("(1-a)*(1+b)/(a-b)"));
        assert_eq!(jj_closed_form(1, 1, 1).unwrap(), cf("(1-a)*(b^2-1)/((1-b)*(b-a))"));
        assert_eq!(jj_closed_form(2, 1, 1).unwrap(), cf("(1-a)*(b^3-1)/((1-b)*(b^2-a))"));
        assert!(jj_closed_form(1, 2, 0).is_err());
        assert!(jj_closed_form(2, 2, 3).is_err());
    }

    #[test]
    fn recursion_matches_closed_form() {
        assert_eq!(
            jj_recursion(1, 1).unwrap(),
            vec![Coeff::one(), cf("(1-a)*(1+b)/(a-b)")]
        );
        for m in 1..=5 {
            for n in 1..=m {
                let g = jj_recursion(m, n).unwrap();
                for (i, gi) in g.iter().enumerate() {
                    assert_eq!(*gi, jj_closed_form(m, n, i).unwrap(), "({m},{n}) i={i}");
                }
            }
        }
    }
}

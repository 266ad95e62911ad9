//! Dense truncated power series over `Q`. All vectors passed together have
//! the same length `N + 1`; products drop everything past degree `N`.

use crate::exact::ExactFraction;

pub(crate) fn zero(len: usize) -> Vec<ExactFraction> {
    vec![ExactFraction::zero(); len]
}

pub(crate) fn one(len: usize) -> Vec<ExactFraction> {
    let mut v = zero(len);
    v[0] = ExactFraction::one();
    v
}

pub(crate) fn add(a: &[ExactFraction], b: &[ExactFraction]) -> Vec<ExactFraction> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn sub(a: &[ExactFraction], b: &[ExactFraction]) -> Vec<ExactFraction> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn scale(a: &[ExactFraction], s: &ExactFraction) -> Vec<ExactFraction> {
    a.iter().map(|x| x * s).collect()
}

pub(crate) fn mul(a: &[ExactFraction], b: &[ExactFraction]) -> Vec<ExactFraction> {
    let len = a.len();
    let mut out = zero(len);
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b[..len - i].iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += &(x * y);
            }
        }
    }
    out
}

pub(crate) fn pow(a: &[ExactFraction], mut n: u64) -> Vec<ExactFraction> {
    let mut base = a.to_vec();
    let mut acc = one(a.len());
    while n > 0 {
        if n & 1 == 1 {
            acc = mul(&acc, &base);
        }
        n >>= 1;
        if n > 0 {
            base = mul(&base, &base);
        }
    }
    acc
}

/// Multiplicative inverse; `a[0]` must be nonzero.
pub(crate) fn inverse(a: &[ExactFraction]) -> Vec<ExactFraction> {
    let len = a.len();
    let a0_inv = a[0].recip().expect("caller checked the augmentation");
    let mut out = zero(len);
    out[0] = a0_inv.clone();
    for m in 1..len {
        let s: ExactFraction = (1..=m).map(|k| &a[k] * &out[m - k]).sum();
        out[m] = -(s * &a0_inv);
    }
    out
}

/// `f(g)` for `g` with zero constant term, by Horner's rule.
pub(crate) fn compose(f: &[ExactFraction], g: &[ExactFraction]) -> Vec<ExactFraction> {
    debug_assert!(g[0].is_zero());
    let len = f.len();
    let mut acc = zero(len);
    for c in f.iter().rev() {
        acc = mul(&acc, g);
        acc[0] += c;
    }
    acc
}

/// `log(1 + h)` for `h` with zero constant term.
pub(crate) fn log_one_plus(h: &[ExactFraction]) -> Vec<ExactFraction> {
    let len = h.len();
    let coeffs: Vec<ExactFraction> = (0..len)
        .map(|m| match m {
            0 => ExactFraction::zero(),
            _ => {
                let c = ExactFraction::new(1, m as i64).expect("nonzero");
                if m % 2 == 1 {
                    c
                } else {
                    -c
                }
            }
        })
        .collect();
    compose(&coeffs, h)
}

/// `exp(a x) - 1` truncated to `len` coefficients.
pub(crate) fn exp_minus_one(a: i64, len: usize) -> Vec<ExactFraction> {
    let a = ExactFraction::from(a);
    (0..len)
        .map(|i| match i {
            0 => ExactFraction::zero(),
            _ => a.pow(i as i32) * ExactFraction::inv_factorial(i as u32),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<ExactFraction> {
        v.iter().map(|&x| ExactFraction::from(x)).collect()
    }

    #[test]
    fn truncated_product() {
        // (1+u)(1-u+u^2) = 1 + u^3 = 1 mod u^3
        assert_eq!(mul(&ints(&[1, 1, 0]), &ints(&[1, -1, 1])), ints(&[1, 0, 0]));
    }

    #[test]
    fn inverse_and_pow() {
        let a = ints(&[2, 1, 0, 3]);
        assert_eq!(mul(&a, &inverse(&a)), one(4));
        assert_eq!(pow(&ints(&[1, 1, 0, 0]), 3), ints(&[1, 3, 3, 1]));
        assert_eq!(pow(&ints(&[0, 1, 0]), 0), one(3));
    }

    #[test]
    fn composition() {
        // f(u) = u^2, g = u + u^2: f(g) = u^2 + 2u^3 mod u^4
        assert_eq!(compose(&ints(&[0, 0, 1, 0]), &ints(&[0, 1, 1, 0])), ints(&[0, 0, 1, 2]));
    }

    #[test]
    fn log_of_exp() {
        // log(1 + (e^x - 1)) = x
        let h = exp_minus_one(1, 9);
        let mut x = zero(9);
        x[1] = ExactFraction::one();
        assert_eq!(log_one_plus(&h), x);
    }
}

//! Univariate rational polynomials, exact interpolation and finite differences.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::poly::{fmt_rational, Rational};

/// Dense univariate polynomial; `coeffs[i]` multiplies `x^i`. No trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Newton interpolation through the given nodes (distinct abscissae).
    pub fn interpolate(points: &[(Rational, Rational)]) -> Self {
        let n = points.len();
        let xs: Vec<&Rational> = points.iter().map(|p| &p.0).collect();
        let mut dd: Vec<Rational> = points.iter().map(|p| p.1.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (xs[i] - xs[i - level]);
            }
        }
        // Horner-style expansion of the Newton form.
        let mut acc: Vec<Rational> = Vec::new();
        for i in (0..n).rev() {
            // acc <- acc * (x - xs[i]) + dd[i]
            let mut next = vec![Rational::zero(); acc.len() + 1];
            for (k, a) in acc.iter().enumerate() {
                next[k + 1] += a;
                next[k] -= a * xs[i];
            }
            next[0] += &dd[i];
            acc = next;
        }
        UniPoly::new(acc)
    }
}

impl fmt::Display for UniPoly {
    /// Highest power first, e.g. `389/81648000000*d^3 - 1513/63787500`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_in(f, "d")
    }
}

impl UniPoly {
    fn fmt_in(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let m = fmt_rational(&mag);
            match i {
                0 => write!(f, "{m}")?,
                1 if mag.is_one() => write!(f, "{var}")?,
                1 => write!(f, "{m}*{var}")?,
                _ if mag.is_one() => write!(f, "{var}^{i}")?,
                _ => write!(f, "{m}*{var}^{i}")?,
            }
        }
        Ok(())
    }

    pub fn display_in<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        struct D<'a>(&'a UniPoly, &'a str);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_in(f, self.1)
            }
        }
        D(self, var)
    }
}

impl Serialize for UniPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The `k`-th forward difference at the start of `values`:
/// `Σ_j (-1)^{k-j} C(k, j) values[j]`.
pub fn forward_difference<T>(values: &[T], k: usize) -> T
where
    T: Clone + std::ops::Sub<Output = T>,
{
    assert!(values.len() > k, "need k+1 values for a k-th difference");
    let mut row: Vec<T> = values[..=k].to_vec();
    for level in 0..k {
        for i in 0..(k - level) {
            row[i] = row[i + 1].clone() - row[i].clone();
        }
    }
    row[0].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    #[test]
    fn interpolation_recovers_cubic() {
        let p = UniPoly::new(vec![rat(-1, 3), int(0), int(2), rat(5, 7)]);
        let pts: Vec<_> = (0..4).map(|x| (int(x), p.eval(&int(x)))).collect();
        assert_eq!(UniPoly::interpolate(&pts), p);
        let shifted: Vec<_> = (7..12).map(|x| (int(x), p.eval(&int(x)))).collect();
        assert_eq!(UniPoly::interpolate(&shifted), p);
    }

    #[test]
    fn differences_of_powers() {
        // k-th difference of x^k with unit step is k!
        let vals: Vec<Rational> = (0..8).map(|x| int(x).pow(5)).collect();
        assert_eq!(forward_difference(&vals, 5), int(120));
        assert_eq!(forward_difference(&vals, 6), int(0));
    }

    #[test]
    fn display() {
        let p = UniPoly::new(vec![int(-20), int(10)]);
        assert_eq!(p.to_string(), "10*d - 20");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }
}

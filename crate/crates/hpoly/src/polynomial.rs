//! Dense polynomials with arbitrary-precision integer coefficients, plus the
//! exact rationals they evaluate to.
//!
//! Everything here is exact: evaluation uses Horner's rule over
//! [`Rational`], derivatives are formal, and no floating point appears
//! anywhere in this module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{Map, Value};
use std::fmt;
use std::ops::{Add, AddAssign};

/// Exact fraction; reduced, denominator positive.
pub type Rational = BigRational;

/// Builds a reduced rational from machine integers. Panics on `denom == 0`.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Renders a rational as `p` when integral, `p/q` otherwise.
pub fn rational_string(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Dense integer-coefficient polynomial; index `j` holds the coefficient of
/// `x^j`. Normalized so the top coefficient is never zero; the zero
/// polynomial is the empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// Exponent-parity classification of a polynomial as a real function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    OddFunction,
    EvenFunction,
    Neither,
    Zero,
}

/// Shape summary of a polynomial. Degree fields are `None` for the zero
/// polynomial rather than borrowing a magic number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyStructure {
    /// Largest exponent with a non-zero coefficient.
    pub degree: Option<usize>,
    /// Smallest exponent with a non-zero coefficient.
    pub min_degree: Option<usize>,
    /// Number of non-zero coefficients.
    pub nonzero_count: usize,
    /// Coefficient at `degree`.
    pub leading: Option<BigInt>,
    /// Coefficient at `min_degree`.
    pub trailing: Option<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// `coeff * x^exp`.
    pub fn monomial(coeff: BigInt, exp: usize) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = coeff;
        Self { coeffs }
    }

    /// Builds from a dense coefficient vector, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Convenience constructor from `(exponent, coefficient)` terms.
    pub fn from_terms(terms: &[(usize, i64)]) -> Self {
        let top = terms.iter().map(|&(e, _)| e).max().map_or(0, |e| e + 1);
        let mut coeffs = vec![BigInt::zero(); top];
        for &(exp, c) in terms {
            coeffs[exp] += BigInt::from(c);
        }
        Self::from_coeffs(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^j` (zero beyond the stored range).
    pub fn coeff(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Number of non-zero coefficients.
    pub fn nonzero_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Exact Horner evaluation.
    pub fn evaluate(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from(c.clone());
        }
        acc
    }

    /// Horner evaluation at an integer point.
    pub fn evaluate_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Formal first derivative.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * BigInt::from(j))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Formal `k`-th derivative; `k = 0` returns the polynomial unchanged.
    pub fn derivative_k(&self, k: usize) -> Self {
        let mut p = self.clone();
        for _ in 0..k {
            if p.is_zero() {
                break;
            }
            p = p.derivative();
        }
        p
    }

    pub fn structure(&self) -> PolyStructure {
        let degree = self.degree();
        let min_degree = self.min_degree();
        PolyStructure {
            degree,
            min_degree,
            nonzero_count: self.nonzero_count(),
            leading: degree.map(|d| self.coeffs[d].clone()),
            trailing: min_degree.map(|d| self.coeffs[d].clone()),
        }
    }

    /// Classifies the polynomial as an odd function, an even function,
    /// neither, or the zero polynomial.
    pub fn parity(&self) -> Parity {
        if self.is_zero() {
            return Parity::Zero;
        }
        let mut odd = true;
        let mut even = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if j % 2 == 0 {
                odd = false;
            } else {
                even = false;
            }
        }
        match (odd, even) {
            (true, _) => Parity::OddFunction,
            (_, true) => Parity::EvenFunction,
            _ => Parity::Neither,
        }
    }

    /// JSON rendering as an exponent -> coefficient map; coefficients are
    /// decimal strings so consumers never overflow a 64-bit slot.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                map.insert(j.to_string(), Value::String(c.to_string()));
            }
        }
        Value::Object(map)
    }

    fn add_assign_ref(&mut self, rhs: &IntPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (j, c) in rhs.coeffs.iter().enumerate() {
            self.coeffs[j] += c;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl AddAssign<&IntPolynomial> for IntPolynomial {
    fn add_assign(&mut self, rhs: &IntPolynomial) {
        self.add_assign_ref(rhs);
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(mut self, rhs: IntPolynomial) -> IntPolynomial {
        self.add_assign_ref(&rhs);
        self
    }
}

impl Add<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl fmt::Display for IntPolynomial {
    /// Canonical text rendering, ascending by exponent: `2x^2 + x^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            match j {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}")?;
                    }
                    if j == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{j}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// The falling-factorial product `(x-1)(x-2)...(x-k)`, expanded with exact
/// integer coefficients. Requires `k >= 1`.
pub fn vieta_q(k: usize) -> IntPolynomial {
    assert!(k >= 1, "vieta_q requires k >= 1");
    // multiply out (x - i) one factor at a time
    let mut coeffs = vec![BigInt::one()];
    for i in 1..=k {
        let root = BigInt::from(i);
        let mut next = vec![BigInt::zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * &root;
        }
        coeffs = next;
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// True when `|a - b| <= tol * max(|a|, |b|)`; both non-finite compare false.
pub fn approx_eq(a: f64, b: f64, rel_tol: f64) -> bool {
    if a == b {
        return true;
    }
    if !a.is_finite() || !b.is_finite() {
        return false;
    }
    (a - b).abs() <= rel_tol * a.abs().max(b.abs())
}

/// Converts a rational to the nearest f64 (used only where a caller asked
/// for an approximate index).
pub fn rational_to_f64(value: &Rational) -> f64 {
    value
        .to_f64()
        .unwrap_or_else(|| value.numer().to_f64().unwrap_or(f64::NAN) / value.denom().to_f64().unwrap_or(f64::NAN))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(terms: &[(usize, i64)]) -> IntPolynomial {
        IntPolynomial::from_terms(terms)
    }

    #[test]
    fn evaluate_examples() {
        // 2x^2 + x^3
        let p = poly(&[(2, 2), (3, 1)]);
        assert_eq!(p.evaluate(&rational(1, 1)), rational(3, 1));
        assert_eq!(p.evaluate(&rational(1, 2)), rational(5, 8));
        assert_eq!(IntPolynomial::zero().evaluate(&rational(7, 3)), Rational::zero());
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(poly(&[(3, 4)]).derivative(), poly(&[(2, 12)]));
        let h_p4 = poly(&[(2, 2), (3, 1)]);
        assert_eq!(h_p4.derivative_k(2).evaluate_int(&BigInt::one()), BigInt::from(10));
        assert_eq!(h_p4.derivative_k(0), h_p4);
        assert_eq!(IntPolynomial::zero().derivative(), IntPolynomial::zero());
    }

    #[test]
    fn vieta_small_cases() {
        assert_eq!(vieta_q(1), poly(&[(1, 1), (0, -1)]));
        assert_eq!(vieta_q(2), poly(&[(2, 1), (1, -3), (0, 2)]));
        assert_eq!(vieta_q(3), poly(&[(3, 1), (2, -6), (1, 11), (0, -6)]));
    }

    #[test]
    fn vieta_coefficient_identities() {
        for k in 1..=8usize {
            let q = vieta_q(k);
            assert_eq!(q.degree(), Some(k));
            assert_eq!(q.coeff(k), BigInt::one(), "monic");
            // a_{k,k-1} = -k(k+1)/2
            let expected = -BigInt::from(k as i64 * (k as i64 + 1) / 2);
            assert_eq!(q.coeff(k - 1), expected);
            // a_{k,0} = (-1)^k k!
            let mut factorial = BigInt::one();
            for i in 1..=k {
                factorial *= BigInt::from(i);
            }
            let sign = if k % 2 == 0 { 1 } else { -1 };
            assert_eq!(q.coeff(0), factorial * BigInt::from(sign));
        }
    }

    #[test]
    fn vieta_matches_direct_product() {
        for k in 1..=6usize {
            let q = vieta_q(k);
            for t in -3i64..=8 {
                let mut product = BigInt::one();
                for i in 1..=k as i64 {
                    product *= BigInt::from(t - i);
                }
                assert_eq!(q.evaluate_int(&BigInt::from(t)), product, "k={k}, t={t}");
            }
            for t in 1..=k as i64 {
                assert!(q.evaluate_int(&BigInt::from(t)).is_zero());
            }
        }
    }

    #[test]
    fn structure_examples() {
        let s = poly(&[(2, 2), (3, 1)]).structure();
        assert_eq!(
            (s.degree, s.min_degree, s.nonzero_count),
            (Some(3), Some(2), 2)
        );
        assert_eq!(s.leading, Some(BigInt::one()));
        assert_eq!(s.trailing, Some(BigInt::from(2)));

        let s = poly(&[(5, 4), (6, 4)]).structure();
        assert_eq!(
            (s.degree, s.min_degree, s.nonzero_count),
            (Some(6), Some(5), 2)
        );

        let s = poly(&[(3, 7)]).structure();
        assert_eq!(
            (s.degree, s.min_degree, s.nonzero_count),
            (Some(3), Some(3), 1)
        );
        assert_eq!(s.leading, s.trailing);

        let s = IntPolynomial::zero().structure();
        assert_eq!((s.degree, s.min_degree, s.nonzero_count), (None, None, 0));
        assert_eq!(s.leading, None);
    }

    #[test]
    fn parity_examples() {
        assert_eq!(poly(&[(3, 3)]).parity(), Parity::OddFunction);
        assert_eq!(poly(&[(2, 2), (3, 1)]).parity(), Parity::Neither);
        assert_eq!(poly(&[(2, 5), (4, 1)]).parity(), Parity::EvenFunction);
        assert_eq!(IntPolynomial::zero().parity(), Parity::Zero);
    }

    #[test]
    fn display_rendering() {
        assert_eq!(poly(&[(2, 2), (3, 1)]).to_string(), "2x^2 + x^3");
        assert_eq!(poly(&[(0, 2), (1, -3), (2, 1)]).to_string(), "2 - 3x + x^2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(poly(&[(1, 1)]).to_string(), "x");
    }

    #[test]
    fn json_rendering() {
        let v = poly(&[(2, 2), (3, 1)]).to_json();
        assert_eq!(v, serde_json::json!({"2": "2", "3": "1"}));
    }

    fn arb_poly() -> impl Strategy<Value = IntPolynomial> {
        proptest::collection::vec(-20i64..=20, 0..8).prop_map(|v| {
            IntPolynomial::from_coeffs(v.into_iter().map(BigInt::from).collect())
        })
    }

    proptest! {
        #[test]
        fn derivative_composes(p in arb_poly(), a in 0usize..=3, b in 0usize..=2) {
            prop_assert_eq!(p.derivative_k(a).derivative_k(b), p.derivative_k(a + b));
        }

        #[test]
        fn evaluation_is_additive(p in arb_poly(), q in arb_poly(), num in -9i64..=9, den in 1i64..=9) {
            let x = rational(num, den);
            let sum = &p + &q;
            prop_assert_eq!(sum.evaluate(&x), p.evaluate(&x) + q.evaluate(&x));
        }

        #[test]
        fn normalization_strips_trailing_zeros(p in arb_poly()) {
            if let Some(d) = p.degree() {
                prop_assert!(!p.coeff(d).is_zero());
            } else {
                prop_assert!(p.is_zero());
            }
        }
    }
}

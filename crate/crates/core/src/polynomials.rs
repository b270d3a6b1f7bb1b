//! Exact integer polynomials and the three families `G_i`, `F_i`, `H_i`
//! generated by the three-term recurrence
//!
//! ```text
//! P_{i+1}(x) = x P_i(x) - (k - 1) P_{i-1}(x)
//! ```
//!
//! with base cases `G_0 = 1, G_1 = x + 1`, `F_0 = 1, F_1 = x, F_2 = x^2 - k`
//! and `H_0 = 1, H_1 = x`. The recurrence is applied from `i >= 1` for `G`
//! and `H` and from `i >= 2` for `F`.
//!
//! `H_i` is the Dickson polynomial of the second kind with parameter `k - 1`.
//! Its conventional negative-index values `H_{-1} = 0` and
//! `H_{-2} = -1/(k-1)` are never needed by the formulas implemented here, so
//! [`dickson_family`] only accepts `i >= 0`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::PI;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
#[allow(unused_imports)]
use num_traits::Float;

use crate::interval::{ExactRational, Interval, Precision};
use crate::ParameterError;

/// Polynomial with arbitrary-precision integer coefficients, constant term
/// first. The coefficient vector never carries trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        IntPolynomial::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        IntPolynomial::from_coeffs(vec![c.into()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Coefficients, constant term first. Empty for the zero polynomial.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading_coefficient(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn coefficient(&self, power: usize) -> BigInt {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    /// Multiplies by `x`.
    pub fn shift(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigInt::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * BigInt::from(j))
                .collect(),
        )
    }

    /// Exact value at a rational point.
    ///
    /// Horner runs on the homogenised form `sum c_j p^j q^(n-j)` so that no
    /// intermediate rational needs normalising.
    pub fn eval_rational(&self, x: &ExactRational) -> ExactRational {
        let n = self.degree();
        let value = self.homogeneous_value(x);
        let denom = num_traits::pow(x.denom().clone(), n);
        ExactRational::new(value, denom)
    }

    /// Exact sign of the value at `x`.
    pub fn sign_at(&self, x: &ExactRational) -> Ordering {
        // q > 0, so the homogenised value has the sign of p(x).
        self.homogeneous_value(x).cmp(&BigInt::zero())
    }

    fn homogeneous_value(&self, x: &ExactRational) -> BigInt {
        let (p, q) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut q_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * p + c * &q_pow;
            q_pow *= q;
        }
        // acc = sum_j c_j p^j q^(n - j) with the powers of q accumulated from
        // the leading coefficient down.
        acc
    }

    /// Binary64 Horner evaluation. Diagnostic only; cancellation makes it
    /// unreliable near roots of high-degree members.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Interval Horner evaluation with outward rounding.
    pub fn eval_interval(&self, x: &Interval, precision: Precision) -> Interval {
        let mut acc = Interval::point(ExactRational::zero());
        for c in self.coeffs.iter().rev() {
            acc = (&acc * x).add_scalar(&ExactRational::from_integer(c.clone()));
            acc = acc.rounded(precision);
        }
        acc
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let magnitude = c.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let unit = magnitude.is_one();
            match power {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !unit {
                        write!(f, "{magnitude}")?;
                    }
                    f.write_str("x")?;
                    if power > 1 {
                        write!(f, "^{power}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs(
            (0..len)
                .map(|j| self.coefficient(j) + rhs.coefficient(j))
                .collect(),
        )
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs(
            (0..len)
                .map(|j| self.coefficient(j) - rhs.coefficient(j))
                .collect(),
        )
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Which of the three recurrence families to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    G,
    F,
    H,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::G => "G",
            Family::F => "F",
            Family::H => "H",
        }
    }
}

impl core::str::FromStr for Family {
    type Err = ParameterError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "G" | "g" => Ok(Family::G),
            "F" | "f" => Ok(Family::F),
            "H" | "h" => Ok(Family::H),
            _ => Err(ParameterError::UnknownFamily),
        }
    }
}

/// Members `P_0, ..., P_upto` of a family, in order.
pub fn family_sequence(kind: Family, k: u32, upto: usize) -> Result<Vec<IntPolynomial>, ParameterError> {
    check_degree(k)?;
    let x = IntPolynomial::x();
    let mut seq: Vec<IntPolynomial> = match kind {
        Family::G => vec![IntPolynomial::one(), &x + &IntPolynomial::one()],
        Family::F => vec![
            IntPolynomial::one(),
            x.clone(),
            &x.shift() - &IntPolynomial::constant(k),
        ],
        Family::H => vec![IntPolynomial::one(), x.clone()],
    };
    let km1 = BigInt::from(k - 1);
    while seq.len() <= upto {
        let i = seq.len() - 1;
        let next = &seq[i].shift() - &seq[i - 1].scale(&km1);
        seq.push(next);
    }
    seq.truncate(upto + 1);
    Ok(seq)
}

/// `G_i`, `F_i` or `H_i` for degree parameter `k`.
pub fn dickson_family(kind: Family, k: u32, i: usize) -> Result<IntPolynomial, ParameterError> {
    let mut seq = family_sequence(kind, k, i)?;
    Ok(seq.swap_remove(i))
}

pub(crate) fn check_degree(k: u32) -> Result<(), ParameterError> {
    if k < 3 {
        return Err(ParameterError::DegreeTooSmall { k, min: 3 });
    }
    Ok(())
}

/// `H_i(x)` in binary64 via the recurrence, which is far better conditioned
/// than Horner on the expanded coefficients.
pub fn h_value(k: u32, i: usize, x: f64) -> f64 {
    h_value_and_derivative(k, i, x).0
}

/// `(H_i(x), H_i'(x))` in binary64 via the recurrence and its derivative
/// `P'_{i+1} = P_i + x P'_i - (k-1) P'_{i-1}`.
pub fn h_value_and_derivative(k: u32, i: usize, x: f64) -> (f64, f64) {
    let km1 = f64::from(k) - 1.0;
    let (mut prev, mut cur) = (1.0, x);
    let (mut dprev, mut dcur) = (0.0, 1.0);
    if i == 0 {
        return (1.0, 0.0);
    }
    for _ in 1..i {
        let next = x * cur - km1 * prev;
        let dnext = cur + x * dcur - km1 * dprev;
        prev = cur;
        cur = next;
        dprev = dcur;
        dcur = dnext;
    }
    (cur, dcur)
}

/// Trigonometric form `H_{d-1}(-2s cos phi) = (-s)^(d-1) sin(d phi) / sin(phi)`
/// with `s = sqrt(k - 1)`.
pub fn h_closed_form(k: u32, d: u32, phi: f64) -> Result<f64, ParameterError> {
    check_degree(k)?;
    if d < 2 {
        return Err(ParameterError::DiameterTooSmall { d, min: 2 });
    }
    if !(phi > 0.0 && phi < PI) {
        return Err(ParameterError::AngleOutOfRange);
    }
    let s = (f64::from(k) - 1.0).sqrt();
    let d = f64::from(d);
    Ok((-s).powf(d - 1.0) * (d * phi).sin() / phi.sin())
}

/// The `d - 1` roots `2 sqrt(k-1) cos(i pi / d)` of `H_{d-1}`, ascending.
pub fn h_roots_closed_form(k: u32, d: u32) -> Result<Vec<f64>, ParameterError> {
    check_degree(k)?;
    if d < 2 {
        return Err(ParameterError::DiameterTooSmall { d, min: 2 });
    }
    let s = (f64::from(k) - 1.0).sqrt();
    let mut roots: Vec<f64> = (1..d)
        .map(|i| 2.0 * s * (f64::from(i) * PI / f64::from(d)).cos())
        .collect();
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}

//! Exact rationals and closed intervals with rational endpoints.
//!
//! Interval operations are exact; [`Interval::rounded`] then widens the
//! endpoints outward onto a dyadic grid with a fixed number of significant
//! bits, which is what keeps long Horner chains from growing unbounded
//! numerators. Rounding is always directed away from the enclosed set, so
//! every result is a certified enclosure.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

/// Reduced fraction with positive denominator.
pub type ExactRational = BigRational;

/// Working precision, in significant bits, for outward rounding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Precision(u32);

impl Precision {
    pub const MIN_BITS: u32 = 24;
    pub const MAX_BITS: u32 = 1 << 16;

    pub fn new(bits: u32) -> Option<Self> {
        (Self::MIN_BITS..=Self::MAX_BITS)
            .contains(&bits)
            .then_some(Precision(bits))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn widened(self, extra: u32) -> Self {
        Precision(self.0.saturating_add(extra).min(Self::MAX_BITS))
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision(128)
    }
}

/// Exact conversion of a finite binary64 value.
pub fn rational_from_f64(x: f64) -> ExactRational {
    BigRational::from_f64(x).expect("finite binary64 value")
}

pub fn rational_to_f64(x: &ExactRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn bit_length(x: &BigInt) -> i64 {
    x.bits() as i64
}

/// Rounds `x` to at most `bits + 1` significant bits, toward `-inf` when
/// `up` is false and toward `+inf` otherwise.
fn round_directed(x: &ExactRational, bits: u32, up: bool) -> ExactRational {
    let (num, den) = (x.numer(), x.denom());
    if num.is_zero() || bit_length(num) + bit_length(den) <= 2 * i64::from(bits) {
        return x.clone();
    }
    let shift = i64::from(bits) - (bit_length(num) - bit_length(den));
    let scaled = |n: BigInt, d: BigInt| if up { n.div_ceil(&d) } else { n.div_floor(&d) };
    if shift >= 0 {
        let m = scaled(num << shift as usize, den.clone());
        ExactRational::new(m, BigInt::one() << shift as usize)
    } else {
        let m = scaled(num.clone(), den << (-shift) as usize);
        ExactRational::from_integer(m << (-shift) as usize)
    }
}

/// Closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: ExactRational,
    hi: ExactRational,
}

impl Interval {
    /// Panics if `lo > hi`.
    pub fn new(lo: ExactRational, hi: ExactRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    pub fn point(x: ExactRational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::point(ExactRational::from_integer(n.into()))
    }

    pub fn lo(&self) -> &ExactRational {
        &self.lo
    }

    pub fn hi(&self) -> &ExactRational {
        &self.hi
    }

    pub fn width(&self) -> ExactRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> ExactRational {
        (&self.lo + &self.hi) / BigInt::from(2)
    }

    pub fn contains(&self, x: &ExactRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Sign of every member, if uniform and nonzero.
    pub fn strict_sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else {
            None
        }
    }

    pub fn add_scalar(&self, c: &ExactRational) -> Interval {
        Interval { lo: &self.lo + c, hi: &self.hi + c }
    }

    pub fn scale(&self, c: &ExactRational) -> Interval {
        if c.is_negative() {
            Interval { lo: &self.hi * c, hi: &self.lo * c }
        } else {
            Interval { lo: &self.lo * c, hi: &self.hi * c }
        }
    }

    /// Tight square: nonnegative even when the interval straddles zero.
    pub fn square(&self) -> Interval {
        let a = &self.lo * &self.lo;
        let b = &self.hi * &self.hi;
        if self.contains_zero() {
            Interval { lo: ExactRational::zero(), hi: a.max(b) }
        } else if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    pub fn powi(&self, q: u32) -> Interval {
        if q == 0 {
            return Interval::from_integer(1);
        }
        if q % 2 == 0 {
            return self.square().powi(q / 2);
        }
        let lo = num_traits::pow(self.lo.clone(), q as usize);
        let hi = num_traits::pow(self.hi.clone(), q as usize);
        Interval { lo, hi }
    }

    /// `1 / self`, or `None` when the interval contains zero.
    pub fn recip(&self) -> Option<Interval> {
        if self.contains_zero() {
            return None;
        }
        Some(Interval { lo: self.hi.recip(), hi: self.lo.recip() })
    }

    pub fn checked_div(&self, rhs: &Interval) -> Option<Interval> {
        rhs.recip().map(|r| self * &r)
    }

    /// Outward rounding onto `precision` significant bits.
    pub fn rounded(&self, precision: Precision) -> Interval {
        Interval {
            lo: round_directed(&self.lo, precision.bits(), false),
            hi: round_directed(&self.hi, precision.bits(), true),
        }
    }

    /// Integers `ceil(lo) ..= floor(hi)` as an inclusive pair; empty when
    /// the first exceeds the second.
    pub fn integer_span(&self) -> (BigInt, BigInt) {
        (self.lo.ceil().to_integer(), self.hi.floor().to_integer())
    }

    pub fn contains_integer(&self) -> bool {
        let (a, b) = self.integer_span();
        a <= b
    }

    pub fn lo_f64(&self) -> f64 {
        rational_to_f64(&self.lo)
    }

    pub fn hi_f64(&self) -> f64 {
        rational_to_f64(&self.hi)
    }

    pub fn mid_f64(&self) -> f64 {
        rational_to_f64(&self.midpoint())
    }

    pub fn width_f64(&self) -> f64 {
        rational_to_f64(&self.width())
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e}, {:e}]", self.lo_f64(), self.hi_f64())
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, rhs: &Interval) -> Interval {
        Interval { lo: &self.lo + &rhs.lo, hi: &self.hi + &rhs.hi }
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, rhs: &Interval) -> Interval {
        Interval { lo: &self.lo - &rhs.hi, hi: &self.hi - &rhs.lo }
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: -&self.hi, hi: -&self.lo }
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, rhs: &Interval) -> Interval {
        // Sign-case split avoids forming all four products when possible.
        let sign = |i: &Interval| {
            if !i.lo.is_negative() {
                Sign::Plus
            } else if !i.hi.is_positive() {
                Sign::Minus
            } else {
                Sign::NoSign
            }
        };
        let (a, b) = (self, rhs);
        match (sign(a), sign(b)) {
            (Sign::Plus, Sign::Plus) => Interval { lo: &a.lo * &b.lo, hi: &a.hi * &b.hi },
            (Sign::Minus, Sign::Minus) => Interval { lo: &a.hi * &b.hi, hi: &a.lo * &b.lo },
            (Sign::Plus, Sign::Minus) => Interval { lo: &a.hi * &b.lo, hi: &a.lo * &b.hi },
            (Sign::Minus, Sign::Plus) => Interval { lo: &a.lo * &b.hi, hi: &a.hi * &b.lo },
            _ => {
                let products = [&a.lo * &b.lo, &a.lo * &b.hi, &a.hi * &b.lo, &a.hi * &b.hi];
                let lo = products.iter().min().cloned().unwrap_or_default();
                let hi = products.iter().max().cloned().unwrap_or_default();
                Interval { lo, hi }
            }
        }
    }
}

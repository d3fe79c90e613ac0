use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Largest total copy count handled by the exact-arithmetic paths.
pub const MAX_TOTAL_COPIES: u32 = 512;

/// Factorials are tabulated up to `4 * MAX_TOTAL_COPIES`.
pub const FACTORIAL_LIMIT: usize = 4 * MAX_TOTAL_COPIES as usize;

static FACTORIALS: OnceLock<Vec<BigUint>> = OnceLock::new();

fn factorial_table() -> &'static [BigUint] {
    FACTORIALS.get_or_init(|| {
        let mut table = Vec::with_capacity(FACTORIAL_LIMIT + 1);
        let mut acc = BigUint::one();
        table.push(acc.clone());
        for k in 1..=FACTORIAL_LIMIT as u64 {
            acc *= k;
            table.push(acc.clone());
        }
        table
    })
}

/// `k!` as an exact integer.
///
/// Panics if `k` exceeds [`FACTORIAL_LIMIT`]; callers validate copy counts first.
pub fn factorial(k: u32) -> &'static BigUint {
    let table = factorial_table();
    assert!(
        (k as usize) < table.len(),
        "factorial argument {k} beyond table limit {FACTORIAL_LIMIT}"
    );
    &table[k as usize]
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

pub(crate) fn big_ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Natural log of a positive big integer, accurate to a few ulps for any size.
pub(crate) fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        x.to_f64().unwrap_or(f64::INFINITY).ln()
    } else {
        let shift = bits - 64;
        (x >> shift).to_f64().unwrap_or(f64::INFINITY).ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// An exact real number of the form `ratio · √radicand` with rational `ratio`
/// and non-negative rational `radicand`.
///
/// Wigner 6-j symbols and recoupling overlaps are always of this form. The
/// only lossy operation is [`ExactRational::to_f64`].
#[derive(Clone, Debug)]
pub struct ExactRational {
    ratio: BigRational,
    radicand: BigRational,
}

impl ExactRational {
    pub fn zero() -> Self {
        ExactRational {
            ratio: BigRational::zero(),
            radicand: BigRational::one(),
        }
    }

    pub fn from_ratio(ratio: BigRational) -> Self {
        ExactRational {
            ratio,
            radicand: BigRational::one(),
        }
    }

    pub fn from_integers(num: i64, den: i64) -> Self {
        Self::from_ratio(BigRational::new(num.into(), den.into()))
    }

    /// `ratio · √radicand`. A non-positive radicand yields zero.
    pub fn new(ratio: BigRational, radicand: BigRational) -> Self {
        if ratio.is_zero() || !radicand.is_positive() {
            return Self::zero();
        }
        ExactRational { ratio, radicand }
    }

    pub fn ratio(&self) -> &BigRational {
        &self.ratio
    }

    pub fn radicand(&self) -> &BigRational {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.ratio.is_zero()
    }

    /// -1, 0 or +1.
    pub fn signum(&self) -> i32 {
        if self.ratio.is_zero() {
            0
        } else if self.ratio.is_positive() {
            1
        } else {
            -1
        }
    }

    /// The exact square of the value.
    pub fn square(&self) -> BigRational {
        &self.ratio * &self.ratio * &self.radicand
    }

    /// `sign · value²`, a canonical form used for equality.
    pub fn signed_square(&self) -> BigRational {
        let sq = self.square();
        if self.ratio.is_negative() {
            -sq
        } else {
            sq
        }
    }

    /// The value as a rational if the radical part is a perfect square.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.ratio.is_zero() {
            return Some(BigRational::zero());
        }
        let num = self.radicand.numer().to_biguint()?;
        let den = self.radicand.denom().to_biguint()?;
        let (rn, rd) = (num.sqrt(), den.sqrt());
        if &rn * &rn == num && &rd * &rd == den {
            Some(&self.ratio * big_ratio(rn, rd))
        } else {
            None
        }
    }

    /// Multiply by `√factor`.
    pub fn mul_sqrt(self, factor: &BigRational) -> Self {
        Self::new(self.ratio, self.radicand * factor)
    }

    pub fn negate(self) -> Self {
        ExactRational {
            ratio: -self.ratio,
            radicand: self.radicand,
        }
    }

    pub fn abs(self) -> Self {
        ExactRational {
            ratio: self.ratio.abs(),
            radicand: self.radicand,
        }
    }

    /// Nearest 64-bit float. This is the only lossy conversion.
    pub fn to_f64(&self) -> f64 {
        if self.ratio.is_zero() {
            return 0.0;
        }
        let sq = self.square();
        let mag = match sq.to_f64() {
            Some(v) if v.is_normal() => v.sqrt(),
            _ => {
                let ln = ln_biguint(sq.numer().magnitude()) - ln_biguint(sq.denom().magnitude());
                (0.5 * ln).exp()
            }
        };
        f64::from(self.signum()) * mag
    }
}

impl PartialEq for ExactRational {
    fn eq(&self, other: &Self) -> bool {
        self.signed_square() == other.signed_square()
    }
}

impl Eq for ExactRational {}

impl From<BigRational> for ExactRational {
    fn from(r: BigRational) -> Self {
        Self::from_ratio(r)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => write!(f, "{r}"),
            None => {
                let sign = if self.ratio.is_negative() { "-" } else { "" };
                write!(f, "{sign}sqrt({})", self.square())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(*factorial(5), BigUint::from(120u32));
        assert_eq!(binomial(10, 3), BigUint::from(120u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
    }

    #[test]
    fn sqrt_forms() {
        let half_sqrt3 = ExactRational::new(
            BigRational::new(1.into(), 2.into()),
            BigRational::from_integer(3.into()),
        );
        assert!((half_sqrt3.to_f64() - 3f64.sqrt() / 2.0).abs() < 1e-16);
        assert!(half_sqrt3.as_rational().is_none());
        let quarter = ExactRational::new(
            BigRational::from_integer(1.into()),
            BigRational::new(1.into(), 4.into()),
        );
        assert_eq!(quarter.as_rational(), Some(BigRational::new(1.into(), 2.into())));
        assert_eq!(quarter, ExactRational::from_integers(1, 2));
        assert_ne!(quarter.clone().negate(), quarter);
    }

    #[test]
    fn huge_and_tiny_parts_convert() {
        let big = BigRational::from_integer(BigInt::from(10u32).pow(300));
        let tiny = BigRational::new(1.into(), BigInt::from(10u32).pow(600));
        let v = ExactRational::new(big, tiny);
        assert!((v.to_f64() - 1.0).abs() < 1e-14);
    }
}

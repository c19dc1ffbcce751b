//! Exact scalar layer.
//!
//! Every quantity compared against a theorem threshold (average degrees,
//! charges, rule amounts) is a [`Ratio`] over an integer type implementing
//! [`ExactInt`]. Machine integers are the fast path; [`BigInt`] removes any
//! overflow concern for large inputs. Floating point types deliberately do
//! not implement the trait: thresholds such as 20/7 sit exactly on the
//! boundary of the statements being checked.

use std::fmt::{Debug, Display};

pub use num_bigint::BigInt;
use num_integer::Integer;
pub use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Integer types usable as numerator/denominator of exact charges.
pub trait ExactInt:
    Integer + Signed + Clone + FromPrimitive + ToPrimitive + Display + Debug + Send + Sync + 'static
{
    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("value does not fit the chosen integer type")
    }
}

impl<T> ExactInt for T where
    T: Integer + Signed + Clone + FromPrimitive + ToPrimitive + Display + Debug + Send + Sync + 'static
{
}

/// Builds `num/den` in lowest terms. Panics on a zero denominator.
pub fn frac<T: ExactInt>(num: i64, den: i64) -> Ratio<T> {
    Ratio::new(T::from_i64_exact(num), T::from_i64_exact(den))
}

pub fn int<T: ExactInt>(v: i64) -> Ratio<T> {
    Ratio::from_integer(T::from_i64_exact(v))
}

/// Renders a rational as `num/den`, always with an explicit denominator.
pub fn ratio_string<T: ExactInt>(r: &Ratio<T>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse_ratio<T: ExactInt + std::str::FromStr>(s: &str) -> Option<Ratio<T>> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: T = n.trim().parse().ok()?;
            let d: T = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Ratio::new(n, d))
        }
        None => Some(Ratio::from_integer(s.parse().ok()?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_rendering() {
        let r: Ratio<i64> = frac(60, 22);
        assert_eq!(ratio_string(&r), "30/11");
        let r: Ratio<BigInt> = int(3);
        assert_eq!(ratio_string(&r), "3/1");
    }

    #[test]
    fn parse_round_trip() {
        let r: Ratio<i64> = parse_ratio("20/7").unwrap();
        assert_eq!(r, frac(20, 7));
        assert_eq!(parse_ratio::<i64>("4"), Some(int(4)));
        assert_eq!(parse_ratio::<i64>("1/0"), None);
    }

    #[test]
    fn thresholds_compare_exactly() {
        let a: Ratio<i64> = frac(20, 7);
        let b: Ratio<i64> = frac(30, 11);
        assert!(b < a);
        assert!(int::<i64>(3) > a);
        assert_eq!(frac::<i64>(3, 1) - frac(3, 7) + frac::<i64>(1, 7) * int(2), a);
    }
}

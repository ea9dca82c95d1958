//! Frequency values: exact rationals for rational-valued dispersions, floats otherwise.

use std::cmp::Ordering;
use std::f64::consts::TAU;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// An angular frequency (rad/s) or a frequency discrepancy in the same units.
#[derive(Debug, Clone, PartialEq)]
pub enum Omega {
    Exact(BigRational),
    Real(f64),
}

impl Omega {
    pub fn exact(numer: i64, denom: i64) -> Self {
        Omega::Exact(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Omega::Exact(_))
    }

    /// True zero. On the float path this is a bit-level test, never a tolerance.
    pub fn is_zero(&self) -> bool {
        match self {
            Omega::Exact(r) => r.is_zero(),
            Omega::Real(x) => *x == 0.0,
        }
    }

    pub fn abs(&self) -> Omega {
        match self {
            Omega::Exact(r) => Omega::Exact(r.abs()),
            Omega::Real(x) => Omega::Real(x.abs()),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Omega::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Omega::Real(x) => *x,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Omega::Exact(r) => Some(r),
            Omega::Real(_) => None,
        }
    }

    pub fn hz(&self) -> f64 {
        to_hz(self.to_f64())
    }

    /// Total order. Mixed kinds compare through their float values.
    pub fn total_cmp(&self, other: &Omega) -> Ordering {
        match (self, other) {
            (Omega::Exact(a), Omega::Exact(b)) => a.cmp(b),
            (Omega::Real(a), Omega::Real(b)) => a.total_cmp(b),
            _ => self.to_f64().total_cmp(&other.to_f64()),
        }
    }

    /// `|self| / |other|` as a float. Exact inputs divide exactly before rounding.
    pub fn abs_ratio(&self, other: &Omega) -> f64 {
        match (self, other) {
            (Omega::Exact(a), Omega::Exact(b)) if !b.is_zero() => {
                (a.abs() / b.abs()).to_f64().unwrap_or(f64::NAN)
            }
            _ => self.to_f64().abs() / other.to_f64().abs(),
        }
    }

    /// Serialized text: `p/q` for rationals, shortest round-trip decimal for floats.
    pub fn to_text(&self) -> String {
        match self {
            Omega::Exact(r) => format_rational(r),
            Omega::Real(x) => format!("{x:?}"),
        }
    }
}

impl fmt::Display for Omega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub(crate) fn format_rational(r: &BigRational) -> String {
    if r.denom() == &BigInt::from(1) {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Angular frequency with its Hz rendering.
#[derive(Debug, Clone, PartialEq)]
pub struct Frequency {
    pub omega: Omega,
    pub hz: f64,
}

impl Frequency {
    pub fn new(omega: Omega) -> Self {
        let hz = omega.hz();
        Self { omega, hz }
    }
}

/// Converts rad/s to Hz.
pub fn to_hz(omega: f64) -> f64 {
    omega / TAU
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hz_conversion() {
        assert_eq!(to_hz(0.0), 0.0);
        assert_eq!(to_hz(TAU), 1.0);
        assert!((to_hz(55.0646) - 8.7638).abs() < 5e-5);
    }

    #[test]
    fn exact_text_and_zero() {
        let w = Omega::exact(-2, 6);
        assert_eq!(w.to_text(), "-1/3");
        assert_eq!(Omega::exact(4, 2).to_text(), "2");
        assert!(Omega::exact(0, 7).is_zero());
        assert!(!Omega::Real(1e-300).is_zero());
    }

    #[test]
    fn ordering_and_ratio() {
        let a = Omega::exact(1, 3);
        let b = Omega::exact(-1, 2);
        assert_eq!(a.total_cmp(&b), Ordering::Greater);
        assert_eq!(a.abs_ratio(&b), 2.0 / 3.0);
        assert_eq!(Omega::Real(2.0).abs_ratio(&Omega::Real(-4.0)), 0.5);
    }
}

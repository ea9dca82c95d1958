//! Integer wave vectors and the finite spectral domains they live in.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A discrete mode `(m, n)` with positive integer wavenumbers.
///
/// Ordering is lexicographic on `(m, n)`; triads use it for their canonical
/// member order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WaveVector {
    pub m: u32,
    pub n: u32,
}

impl WaveVector {
    pub fn new(m: i64, n: i64) -> Result<Self> {
        if m < 1 || n < 1 {
            return Err(Error::InvalidWaveVector {
                m,
                n,
                reason: "both components must be at least 1",
            });
        }
        if m > u32::MAX as i64 || n > u32::MAX as i64 {
            return Err(Error::InvalidWaveVector {
                m,
                n,
                reason: "component exceeds 32 bits",
            });
        }
        Ok(Self {
            m: m as u32,
            n: n as u32,
        })
    }

    /// Squared Euclidean length `m² + n²`.
    pub fn norm_sqr(&self) -> u64 {
        let (m, n) = (self.m as u64, self.n as u64);
        m * m + n * n
    }

    pub fn norm(&self) -> f64 {
        (self.norm_sqr() as f64).sqrt()
    }
}

impl fmt::Display for WaveVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.m, self.n)
    }
}

/// Shorthand used heavily in tests and examples. Panics on non-positive input.
pub fn wv(m: u32, n: u32) -> WaveVector {
    WaveVector::new(m as i64, n as i64).expect("positive wave vector")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DomainShape {
    /// `1 <= m, n <= T`
    Square,
    /// `1 <= m <= n <= T`, the spherical-harmonic truncation.
    Triangular,
}

/// Finite truncation of the positive integer lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpectralDomain {
    pub truncation: u32,
    pub shape: DomainShape,
}

impl SpectralDomain {
    pub fn new(truncation: u32, shape: DomainShape) -> Result<Self> {
        if truncation < 1 {
            return Err(Error::InvalidParameter {
                name: "truncation",
                value: truncation as f64,
                reason: "must be at least 1",
            });
        }
        Ok(Self { truncation, shape })
    }

    pub fn square(truncation: u32) -> Self {
        Self::new(truncation, DomainShape::Square).expect("truncation >= 1")
    }

    pub fn triangular(truncation: u32) -> Self {
        Self::new(truncation, DomainShape::Triangular).expect("truncation >= 1")
    }

    pub fn contains(&self, k: WaveVector) -> bool {
        let t = self.truncation;
        match self.shape {
            DomainShape::Square => k.m <= t && k.n <= t,
            DomainShape::Triangular => k.m <= k.n && k.n <= t,
        }
    }

    pub fn len(&self) -> usize {
        let t = self.truncation as usize;
        match self.shape {
            DomainShape::Square => t * t,
            DomainShape::Triangular => t * (t + 1) / 2,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All modes in lexicographic order.
    pub fn modes(&self) -> impl Iterator<Item = WaveVector> + '_ {
        let t = self.truncation;
        let shape = self.shape;
        (1..=t).flat_map(move |m| {
            let lo = match shape {
                DomainShape::Square => 1,
                DomainShape::Triangular => m,
            };
            (lo..=t).map(move |n| WaveVector { m, n })
        })
    }
}

/// Dense `(m, n) -> position` lookup over a domain's lexicographic mode list.
#[derive(Debug, Clone)]
pub(crate) struct ModeIndex {
    side: usize,
    slots: Vec<u32>,
    pub(crate) modes: Vec<WaveVector>,
}

impl ModeIndex {
    const EMPTY: u32 = u32::MAX;

    pub(crate) fn new(domain: &SpectralDomain) -> Self {
        let side = domain.truncation as usize + 1;
        let mut slots = vec![Self::EMPTY; side * side];
        let modes: Vec<_> = domain.modes().collect();
        for (i, k) in modes.iter().enumerate() {
            slots[k.m as usize * side + k.n as usize] = i as u32;
        }
        Self { side, slots, modes }
    }

    #[inline]
    pub(crate) fn get(&self, m: u32, n: u32) -> Option<usize> {
        let (m, n) = (m as usize, n as usize);
        if m >= self.side || n >= self.side {
            return None;
        }
        match self.slots[m * self.side + n] {
            Self::EMPTY => None,
            i => Some(i as usize),
        }
    }

    pub(crate) fn position(&self, k: WaveVector) -> Option<usize> {
        self.get(k.m, k.n)
    }

    pub(crate) fn len(&self) -> usize {
        self.modes.len()
    }
}

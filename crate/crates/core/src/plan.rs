//! Experiment-facing quantities: wave amplitudes, the planetary amplitude
//! bound, Type A / Type B triad plans and basin geometry sweeps.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::classify::{class_counts, ClassCounts, ClassifyOptions};
use crate::dispersion::DispersionSpec;
use crate::error::{Error, Result};
use crate::resonance::{SearchOptions, Triad, TriadSearch};
use crate::vector::{SpectralDomain, WaveVector};

/// Steepness above which waves leave the weakly nonlinear range.
pub const MAX_WEAK_STEEPNESS: f64 = 0.2;

fn check_epsilon(epsilon: f64) -> Result<()> {
    if !epsilon.is_finite() || epsilon < 0.0 {
        return Err(Error::InvalidParameter {
            name: "epsilon",
            value: epsilon,
            reason: "steepness must be finite and non-negative",
        });
    }
    if epsilon > MAX_WEAK_STEEPNESS {
        log::warn!("steepness {epsilon} exceeds {MAX_WEAK_STEEPNESS}; waves are no longer weakly nonlinear");
    }
    Ok(())
}

/// Amplitude `a = ε / |k|` in cm for a unit-square wave vector.
pub fn steepness_amplitude(k: WaveVector, epsilon: f64) -> Result<f64> {
    check_epsilon(epsilon)?;
    Ok(epsilon / k.norm())
}

/// Amplitude using the basin-rescaled wavenumber of `spec`.
pub fn steepness_amplitude_in(spec: &DispersionSpec, k: WaveVector, epsilon: f64) -> Result<f64> {
    check_epsilon(epsilon)?;
    Ok(epsilon / spec.wavenumber(k))
}

#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeBound {
    pub m: u32,
    pub n: u32,
    pub exact: BigRational,
    pub approx: f64,
}

/// `6 m n! 2^{2n+1−m} / [5n (n+1)^{m+n+3} (n−m)(5n−m−3)]`, an upper bound
/// on the amplitude of spherical mode `(m, n)` in exact arithmetic.
pub fn planetary_amplitude_bound(m: u32, n: u32) -> Result<AmplitudeBound> {
    if m < 1 || n < 1 {
        return Err(Error::InvalidWaveVector {
            m: m as i64,
            n: n as i64,
            reason: "both components must be at least 1",
        });
    }
    if n == m {
        return Err(Error::SingularBound {
            m,
            n,
            reason: "n - m vanishes",
        });
    }
    if n < m {
        return Err(Error::SingularBound {
            m,
            n,
            reason: "n - m is negative",
        });
    }
    let (mi, ni) = (m as i64, n as i64);
    let tail = 5 * ni - mi - 3;
    if tail <= 0 {
        return Err(Error::SingularBound {
            m,
            n,
            reason: "5n - m - 3 is not positive",
        });
    }
    let factorial: BigInt = (2..=n).map(BigInt::from).product();
    let two_exp = 2 * ni + 1 - mi;
    let two = BigRational::from_integer(BigInt::from(2));
    let power_of_two = num_traits::pow::Pow::pow(&two, two_exp as i32);
    let numer = BigRational::from_integer(BigInt::from(6 * mi) * factorial) * power_of_two;
    let denom = BigInt::from(5 * ni)
        * num_traits::pow::Pow::pow(BigInt::from(ni + 1), (mi + ni + 3) as u32)
        * BigInt::from(ni - mi)
        * BigInt::from(tail);
    let exact = numer / BigRational::from_integer(denom);
    let approx = exact.to_f64().unwrap_or(0.0);
    Ok(AmplitudeBound {
        m,
        n,
        exact,
        approx,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentPlan {
    pub spec: DispersionSpec,
    pub domain: SpectralDomain,
    pub d_max: f64,
    pub d_min: f64,
    pub epsilon: f64,
    pub type_a: Vec<Triad>,
    pub type_b: Vec<Triad>,
    /// Recommended amplitude in cm for every wave in either list.
    pub amplitudes: BTreeMap<WaveVector, f64>,
    pub notes: Vec<String>,
}

pub fn plan_experiment(
    spec: &DispersionSpec,
    domain: SpectralDomain,
    d_max: f64,
    d_min: f64,
    epsilon: f64,
    options: SearchOptions,
) -> Result<ExperimentPlan> {
    if d_max.is_nan() || d_max <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "d_max",
            value: d_max,
            reason: "must be positive",
        });
    }
    if d_min.is_nan() || d_max >= d_min {
        return Err(Error::Usage(format!(
            "d_max ({d_max}) must be smaller than d_min ({d_min})"
        )));
    }
    check_epsilon(epsilon)?;
    let search = TriadSearch::new(spec, domain, options)?;
    let type_a = search.near(d_max)?;
    let type_b = search.max_discrepancy(d_min)?;
    let mut amplitudes = BTreeMap::new();
    for t in type_a.iter().chain(&type_b) {
        for k in t.members() {
            amplitudes.insert(k, epsilon / spec.wavenumber(k));
        }
    }
    let mut notes = vec![
        "amplitudes in cm, frequencies in Hz, c.g.s. units".to_string(),
        format!("Type A triads need driving frequencies accurate to better than d_max = {d_max:e} of the smallest triad frequency"),
    ];
    if epsilon > MAX_WEAK_STEEPNESS {
        notes.push(format!(
            "steepness {epsilon} is above the weakly nonlinear range"
        ));
    }
    if type_a.is_empty() {
        notes.push("no Type A triads at this d_max".to_string());
    }
    if type_b.is_empty() {
        notes.push("no Type B triads at this d_min".to_string());
    }
    Ok(ExperimentPlan {
        spec: *spec,
        domain,
        d_max,
        d_min,
        epsilon,
        type_a,
        type_b,
        amplitudes,
        notes,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepCell {
    pub lx: f64,
    pub ly: f64,
    pub triads: Vec<Triad>,
    pub counts: ClassCounts,
    pub resonance_free: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeometrySweepReport {
    pub base: DispersionSpec,
    pub domain: SpectralDomain,
    pub d_max: f64,
    pub classify: ClassifyOptions,
    /// Cells in `lx`-major order.
    pub cells: Vec<SweepCell>,
}

pub fn geometry_sweep(
    base: &DispersionSpec,
    domain: SpectralDomain,
    lx_values: &[f64],
    ly_values: &[f64],
    d_max: f64,
    classify: &ClassifyOptions,
) -> Result<GeometrySweepReport> {
    if lx_values.is_empty() || ly_values.is_empty() {
        return Err(Error::Usage("geometry grid must not be empty".into()));
    }
    let mut cells = Vec::with_capacity(lx_values.len() * ly_values.len());
    for &lx in lx_values {
        for &ly in ly_values {
            let spec = base.rescale_for_basin(lx, ly)?;
            let triads = TriadSearch::new(&spec, domain, classify.search)?.near(d_max)?;
            let counts = class_counts(&spec, domain, classify)?;
            let resonance_free = triads.is_empty();
            cells.push(SweepCell {
                lx,
                ly,
                triads,
                counts,
                resonance_free,
            });
        }
    }
    Ok(GeometrySweepReport {
        base: *base,
        domain,
        d_max,
        classify: *classify,
        cells,
    })
}

impl AmplitudeBound {
    pub fn ratio_text(&self) -> String {
        crate::omega::format_rational(&self.exact)
    }
}

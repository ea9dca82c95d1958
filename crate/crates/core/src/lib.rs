//! Three-wave resonance analysis over finite integer spectral domains.
//!
//! The crate enumerates exact and approximate resonant triads for several
//! dispersion relations, bounds frequency discrepancies from below, splits a
//! domain into active, passive and neutral modes, and computes quantities for
//! planning laboratory experiments.

pub mod classify;
pub mod dispersion;
pub mod error;
pub mod omega;
pub mod plan;
pub mod report;
pub mod resonance;
pub mod vector;

pub use classify::{
    cascade_path, class_counts, classify_modes, minimal_near_resonant, BridgePolicy, CascadeStep,
    ClassCounts, ClassifyOptions, CountPreset, Evidence, ModeClass, ModePartition,
};
pub use dispersion::{
    BasinGeometry, BasinKind, DispersionConfig, DispersionKind, DispersionSpec, Liquid, PlaneForm,
};
pub use error::{Error, ErrorKind, Result};
pub use omega::{to_hz, Frequency, Omega};
pub use plan::{
    geometry_sweep, plan_experiment, planetary_amplitude_bound, steepness_amplitude,
    AmplitudeBound, ExperimentPlan, GeometrySweepReport, SweepCell,
};
pub use resonance::{
    discrepancy, discrepancy_lower_bound, find_exact_triads, find_max_discrepancy_triads,
    find_near_triads, BoundMethod, Closure, DiscrepancyBound, LowerBound, ResonanceKind,
    SearchOptions, Selection, SignPattern, Triad, TriadSearch,
};
pub use vector::{wv, DomainShape, SpectralDomain, WaveVector};

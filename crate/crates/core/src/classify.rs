//! Active / passive / neutral partition of a spectral domain.

use std::collections::{BTreeMap, HashSet};
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::dispersion::DispersionSpec;
use crate::error::{Error, Result};
use crate::omega::Omega;
use crate::resonance::{ordered, SearchOptions, Triad, TriadSearch};
use crate::vector::{SpectralDomain, WaveVector};

/// Which minimal bridge waves of a resonant triad join the active class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BridgePolicy {
    /// The minimal bridge of each of the three member pairs.
    #[default]
    PerPair,
    /// Only the single smallest bridge over all three pairs.
    PerTriad,
}

impl FromStr for BridgePolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "per_pair" | "per-pair" | "pair" => Ok(BridgePolicy::PerPair),
            "per_triad" | "per-triad" | "triad" => Ok(BridgePolicy::PerTriad),
            _ => Err(Error::Usage(format!("unknown bridge policy `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifyOptions {
    /// Largest `|Ω|` still counted as an approximate interaction.
    pub omega_max: f64,
    #[serde(default)]
    pub bridge: BridgePolicy,
    #[serde(default)]
    pub search: SearchOptions,
}

impl ClassifyOptions {
    pub fn new(omega_max: f64) -> Self {
        Self {
            omega_max,
            bridge: BridgePolicy::default(),
            search: SearchOptions::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModeClass {
    Active,
    Passive,
    Neutral,
}

/// One link in an energy cascade: a donor pair of `source` and the wave
/// completing it with the smallest nonzero discrepancy.
#[derive(Debug, Clone, PartialEq)]
pub struct CascadeStep {
    pub source: Triad,
    pub donor: (WaveVector, WaveVector),
    pub bridge: WaveVector,
    pub discrepancy: Omega,
    /// The triad made of the donor pair and the bridge wave.
    pub formed: Triad,
}

#[derive(Debug, Clone, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum Evidence {
    /// Member of a resonant triad.
    Resonant(Triad),
    /// Minimal bridge wave for one pair of a resonant triad.
    Bridge(CascadeStep),
}

impl Evidence {
    /// The triad that justifies the assignment.
    pub fn triad(&self) -> &Triad {
        match self {
            Evidence::Resonant(t) => t,
            Evidence::Bridge(step) => &step.formed,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModeRecord {
    pub mode: WaveVector,
    pub class: ModeClass,
    /// Smallest `|Ω|` over the qualifying approximate triads (passive modes).
    pub min_abs_discrepancy: Option<Omega>,
    pub evidence: Vec<Evidence>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ClassCounts {
    pub active: usize,
    pub passive: usize,
    pub neutral: usize,
}

impl ClassCounts {
    pub fn total(&self) -> usize {
        self.active + self.passive + self.neutral
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModePartition {
    pub domain: SpectralDomain,
    pub spec: DispersionSpec,
    pub options: ClassifyOptions,
    /// One record per domain mode, in lexicographic order.
    pub records: Vec<ModeRecord>,
    pub resonant: Vec<Triad>,
}

impl ModePartition {
    pub fn record(&self, k: WaveVector) -> Option<&ModeRecord> {
        self.records
            .binary_search_by(|r| r.mode.cmp(&k))
            .ok()
            .map(|i| &self.records[i])
    }

    pub fn class_of(&self, k: WaveVector) -> Option<ModeClass> {
        self.record(k).map(|r| r.class)
    }

    pub fn modes_in(&self, class: ModeClass) -> impl Iterator<Item = WaveVector> + '_ {
        self.records
            .iter()
            .filter(move |r| r.class == class)
            .map(|r| r.mode)
    }

    pub fn counts(&self) -> ClassCounts {
        let mut c = ClassCounts::default();
        for r in &self.records {
            match r.class {
                ModeClass::Active => c.active += 1,
                ModeClass::Passive => c.passive += 1,
                ModeClass::Neutral => c.neutral += 1,
            }
        }
        c
    }
}

/// Geometries with calibrated classification settings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CountPreset {
    /// Spherical Rossby waves on a triangular domain, sum closure with the
    /// triangle rule on `n`, `omega_max = 0.015`.
    Sphere,
    /// Barotropic β-plane waves in a unit square, standing closure,
    /// `omega_max = 0.013`.
    Square,
    /// The same in a rectangle with `Lx = 1`, `Ly = 4`, `omega_max = 5.6e-5`.
    Rectangle,
}

impl CountPreset {
    pub const ALL: [CountPreset; 3] = [
        CountPreset::Sphere,
        CountPreset::Square,
        CountPreset::Rectangle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CountPreset::Sphere => "sphere",
            CountPreset::Square => "square",
            CountPreset::Rectangle => "rectangle",
        }
    }

    pub fn spec(self) -> DispersionSpec {
        let plane = DispersionSpec::bve_plane(crate::dispersion::PlaneForm::Barotropic);
        match self {
            CountPreset::Sphere => DispersionSpec::rossby_sphere(),
            CountPreset::Square => plane,
            CountPreset::Rectangle => plane.rescale_for_basin(1.0, 4.0).expect("positive lengths"),
        }
    }

    pub fn domain(self, truncation: u32) -> Result<SpectralDomain> {
        let shape = match self {
            CountPreset::Sphere => crate::vector::DomainShape::Triangular,
            _ => crate::vector::DomainShape::Square,
        };
        SpectralDomain::new(truncation, shape)
    }

    pub fn options(self) -> ClassifyOptions {
        use crate::resonance::Closure;
        let (omega_max, closure) = match self {
            CountPreset::Sphere => (0.015, Closure::Sum),
            CountPreset::Square => (0.013, Closure::Standing),
            CountPreset::Rectangle => (5.6e-5, Closure::Standing),
        };
        ClassifyOptions {
            omega_max,
            bridge: BridgePolicy::PerPair,
            search: SearchOptions {
                closure,
                ..SearchOptions::default()
            },
        }
    }
}

impl FromStr for CountPreset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CountPreset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown preset `{s}`")))
    }
}

fn check_omega_max(v: f64) -> Result<()> {
    if v > 0.0 && !v.is_nan() {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name: "omega_max",
            value: v,
            reason: "must be positive",
        })
    }
}

/// Minimal bridge for `pair` of `source`, skipping waves already in `source`
/// and completions that are themselves resonant.
fn bridge(
    search: &TriadSearch,
    source: &Triad,
    pair: (WaveVector, WaveVector),
) -> Result<Option<CascadeStep>> {
    let (a, b) = pair;
    let mut best: Option<CascadeStep> = None;
    for w in search.completions(a, b) {
        if source.contains(w) {
            continue;
        }
        let formed = search.triad(a, b, w)?;
        if formed.is_resonant() {
            continue;
        }
        let better = match &best {
            None => true,
            Some(cur) => formed
                .discrepancy
                .abs()
                .total_cmp(&cur.discrepancy.abs())
                .is_lt(),
        };
        if better {
            best = Some(CascadeStep {
                source: source.clone(),
                donor: pair,
                bridge: w,
                discrepancy: formed.discrepancy.clone(),
                formed,
            });
        }
    }
    Ok(best)
}

/// Smallest bridge over all three pairs; ties go to the lexicographically
/// first pair, then the first bridge wave.
fn best_bridge(search: &TriadSearch, source: &Triad) -> Result<Option<CascadeStep>> {
    let mut best: Option<CascadeStep> = None;
    for pair in source.pairs() {
        if let Some(step) = bridge(search, source, pair)? {
            let better = match &best {
                None => true,
                Some(cur) => step
                    .discrepancy
                    .abs()
                    .total_cmp(&cur.discrepancy.abs())
                    .is_lt(),
            };
            if better {
                best = Some(step);
            }
        }
    }
    Ok(best)
}

fn within(om: &Omega, omega_max: f64) -> bool {
    match om {
        Omega::Real(x) => x.abs() <= omega_max,
        Omega::Exact(r) => match BigRational::from_float(omega_max) {
            Some(b) => num_traits::Signed::abs(r) <= b,
            None => true,
        },
    }
}

pub fn classify_modes(
    spec: &DispersionSpec,
    domain: SpectralDomain,
    options: &ClassifyOptions,
) -> Result<ModePartition> {
    check_omega_max(options.omega_max)?;
    let search = TriadSearch::new(spec, domain, options.search)?;
    let resonant = search.resonant()?;

    let mut evidence: BTreeMap<WaveVector, Vec<Evidence>> = BTreeMap::new();
    let mut resonant_pairs = HashSet::new();
    for t in &resonant {
        for k in t.members() {
            evidence
                .entry(k)
                .or_default()
                .push(Evidence::Resonant(t.clone()));
        }
        resonant_pairs.extend(t.pairs());
    }
    for t in &resonant {
        let steps = match options.bridge {
            BridgePolicy::PerPair => {
                let mut v = Vec::new();
                for pair in t.pairs() {
                    v.extend(bridge(&search, t, pair)?);
                }
                v
            }
            BridgePolicy::PerTriad => best_bridge(&search, t)?.into_iter().collect(),
        };
        for step in steps {
            if within(&step.discrepancy, options.omega_max) {
                evidence
                    .entry(step.bridge)
                    .or_default()
                    .push(Evidence::Bridge(step));
            }
        }
    }

    let mut passive: BTreeMap<WaveVector, Omega> = BTreeMap::new();
    for t in search.within(options.omega_max)? {
        if t.pairs().iter().any(|p| resonant_pairs.contains(p)) {
            continue;
        }
        let om = t.discrepancy.abs();
        for k in t.members() {
            if evidence.contains_key(&k) {
                continue;
            }
            passive
                .entry(k)
                .and_modify(|cur| {
                    if om.total_cmp(cur).is_lt() {
                        *cur = om.clone();
                    }
                })
                .or_insert_with(|| om.clone());
        }
    }

    let records = search
        .modes()
        .iter()
        .map(|&mode| {
            if let Some(ev) = evidence.remove(&mode) {
                ModeRecord {
                    mode,
                    class: ModeClass::Active,
                    min_abs_discrepancy: None,
                    evidence: ev,
                }
            } else if let Some(om) = passive.remove(&mode) {
                ModeRecord {
                    mode,
                    class: ModeClass::Passive,
                    min_abs_discrepancy: Some(om),
                    evidence: Vec::new(),
                }
            } else {
                ModeRecord {
                    mode,
                    class: ModeClass::Neutral,
                    min_abs_discrepancy: None,
                    evidence: Vec::new(),
                }
            }
        })
        .collect();
    Ok(ModePartition {
        domain,
        spec: *spec,
        options: *options,
        records,
        resonant,
    })
}

pub fn class_counts(
    spec: &DispersionSpec,
    domain: SpectralDomain,
    options: &ClassifyOptions,
) -> Result<ClassCounts> {
    Ok(classify_modes(spec, domain, options)?.counts())
}

fn check_resonant_pair(triad: &Triad, pair: Option<(WaveVector, WaveVector)>) -> Result<()> {
    if !triad.is_resonant() {
        return Err(Error::Usage(format!("{} is not resonant", triad.label())));
    }
    if let Some((a, b)) = pair {
        if a == b || !triad.contains(a) || !triad.contains(b) {
            return Err(Error::Usage(format!(
                "donor pair {a}{b} is not a pair of {}",
                triad.label()
            )));
        }
    }
    Ok(())
}

/// The wave completing `pair` with the smallest nonzero `|Ω|`, or `None`
/// when no wave in the domain other than the triad's own members closes it.
pub fn minimal_near_resonant(
    spec: &DispersionSpec,
    domain: SpectralDomain,
    triad: &Triad,
    pair: (WaveVector, WaveVector),
    options: SearchOptions,
) -> Result<Option<CascadeStep>> {
    check_resonant_pair(triad, Some(pair))?;
    let search = TriadSearch::new(spec, domain, options)?;
    bridge(&search, triad, ordered(pair.0, pair.1))
}

/// Follows minimal bridges from `seed` for up to `depth` steps, stopping
/// when no bridge exists or a triad would repeat.
pub fn cascade_path(
    spec: &DispersionSpec,
    domain: SpectralDomain,
    seed: &Triad,
    depth: usize,
    options: SearchOptions,
) -> Result<Vec<CascadeStep>> {
    check_resonant_pair(seed, None)?;
    if depth == 0 {
        return Err(Error::InvalidParameter {
            name: "depth",
            value: 0.0,
            reason: "must be at least 1",
        });
    }
    let search = TriadSearch::new(spec, domain, options)?;
    let mut seen = HashSet::from([seed.members()]);
    let mut path = Vec::new();
    let mut current = seed.clone();
    while path.len() < depth {
        let Some(step) = best_bridge(&search, &current)? else {
            break;
        };
        if !seen.insert(step.formed.members()) {
            break;
        }
        current = step.formed.clone();
        path.push(step);
    }
    Ok(path)
}

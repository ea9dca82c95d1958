//! JSON, CSV and plain-text renderings of search, classification and plan results.

use std::io::Write;

use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::{Evidence, ModeClass, ModePartition};
use crate::dispersion::{DispersionConfig, DispersionSpec};
use crate::error::{Error, Result};
use crate::omega::{Frequency, Omega};
use crate::plan::{AmplitudeBound, ExperimentPlan, GeometrySweepReport};
use crate::resonance::{DiscrepancyBound, LowerBound, ResonanceKind, Triad};
use crate::vector::WaveVector;

/// Column order of triad CSV output.
pub const TRIAD_COLUMNS: [&str; 15] = [
    "m1",
    "n1",
    "m2",
    "n2",
    "m3",
    "n3",
    "omega1",
    "omega2",
    "omega3",
    "hz1",
    "hz2",
    "hz3",
    "discrepancy",
    "d_ratio",
    "signs",
];

/// Column order of mode-partition CSV output.
pub const MODE_COLUMNS: [&str; 4] = ["m", "n", "class", "min_abs_discrepancy"];

/// A number, or a `p/q` string for exact rationals.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Scalar {
    Float(f64),
    Text(String),
}

impl Scalar {
    fn approx(om: &Omega) -> Option<f64> {
        om.is_exact().then(|| om.to_f64())
    }
}

impl From<&Omega> for Scalar {
    fn from(om: &Omega) -> Self {
        match om {
            Omega::Real(x) => Scalar::Float(*x),
            Omega::Exact(_) => Scalar::Text(om.to_text()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TriadRecord {
    pub m1: u32,
    pub n1: u32,
    pub m2: u32,
    pub n2: u32,
    pub m3: u32,
    pub n3: u32,
    pub omega1: Scalar,
    pub omega2: Scalar,
    pub omega3: Scalar,
    pub hz1: f64,
    pub hz2: f64,
    pub hz3: f64,
    pub discrepancy: Scalar,
    pub d_ratio: f64,
    pub signs: String,
    pub resonance: ResonanceKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega1_approx: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega2_approx: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega3_approx: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discrepancy_approx: Option<f64>,
}

impl From<&Triad> for TriadRecord {
    fn from(t: &Triad) -> Self {
        let [f1, f2, f3] = &t.omegas;
        TriadRecord {
            m1: t.k1.m,
            n1: t.k1.n,
            m2: t.k2.m,
            n2: t.k2.n,
            m3: t.k3.m,
            n3: t.k3.n,
            omega1: (&f1.omega).into(),
            omega2: (&f2.omega).into(),
            omega3: (&f3.omega).into(),
            hz1: f1.hz,
            hz2: f2.hz,
            hz3: f3.hz,
            discrepancy: (&t.discrepancy).into(),
            d_ratio: t.d_ratio,
            signs: t.signs.to_string(),
            resonance: t.resonance(),
            omega1_approx: Scalar::approx(&f1.omega),
            omega2_approx: Scalar::approx(&f2.omega),
            omega3_approx: Scalar::approx(&f3.omega),
            discrepancy_approx: Scalar::approx(&t.discrepancy),
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report records serialize")
}

pub fn spec_json(spec: &DispersionSpec) -> Value {
    to_value(&DispersionConfig::from(*spec))
}

pub fn triads_json(triads: &[Triad]) -> Value {
    Value::Array(
        triads
            .iter()
            .map(|t| to_value(&TriadRecord::from(t)))
            .collect(),
    )
}

fn csv_err(e: csv::Error) -> Error {
    Error::Usage(format!("csv output failed: {e}"))
}

fn float_text(x: f64) -> String {
    format!("{x:?}")
}

fn scalar_text(om: &Omega) -> String {
    match om {
        Omega::Real(x) => float_text(*x),
        Omega::Exact(_) => om.to_text(),
    }
}

/// Writes triads as CSV in [`TRIAD_COLUMNS`] order.
pub fn write_triads_csv<W: Write>(out: W, triads: &[Triad], header: bool) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if header {
        w.write_record(TRIAD_COLUMNS).map_err(csv_err)?;
    }
    for t in triads {
        let mut row: Vec<String> = Vec::with_capacity(TRIAD_COLUMNS.len());
        for k in t.members() {
            row.push(k.m.to_string());
            row.push(k.n.to_string());
        }
        row.extend(t.omegas.iter().map(|f| scalar_text(&f.omega)));
        row.extend(t.omegas.iter().map(|f| float_text(f.hz)));
        row.push(scalar_text(&t.discrepancy));
        row.push(float_text(t.d_ratio));
        row.push(t.signs.to_string());
        w.write_record(&row).map_err(csv_err)?;
    }
    w.flush()
        .map_err(|e| Error::Usage(format!("csv output failed: {e}")))?;
    Ok(())
}

/// One line per triad: `[1,2][9,1][10,3]; (8.7638, 40.4435, 49.2073)` plus `D`.
pub fn triads_table(triads: &[Triad]) -> String {
    let mut s = String::new();
    for t in triads {
        s.push_str(&format!("{:<48} D = {:.4e}\n", t.to_string(), t.d_ratio));
    }
    s
}

pub fn frequency_json(k: WaveVector, f: &Frequency) -> Value {
    let mut v = json!({ "m": k.m, "n": k.n, "omega": Scalar::from(&f.omega), "hz": f.hz });
    if let Some(a) = Scalar::approx(&f.omega) {
        v["omega_approx"] = json!(a);
    }
    v
}

fn bound_json(b: &DiscrepancyBound) -> Value {
    let mut v = json!({
        "value": Scalar::from(&b.value),
        "method": b.method,
    });
    if let Some(a) = Scalar::approx(&b.value) {
        v["value_approx"] = json!(a);
    }
    if let Some(w) = &b.witness {
        v["witness"] = to_value(&TriadRecord::from(w));
    }
    v
}

pub fn lower_bound_json(b: &LowerBound) -> Value {
    json!({
        "triad_count": b.triad_count,
        "a_priori": b.a_priori.as_ref().map(bound_json),
        "finite_domain_min": match &b.finite_domain_min {
            Some(f) => bound_json(f),
            None => json!({ "method": "finite_domain_min", "value": null, "undefined": "no vector-closed triad with nonzero discrepancy" }),
        },
    })
}

pub fn lower_bound_table(b: &LowerBound) -> String {
    let mut s = format!("vector-closed triads: {}\n", b.triad_count);
    match &b.a_priori {
        Some(a) => s.push_str(&format!(
            "a priori 1/(bd):      {} ({:.6e})\n",
            a.value,
            a.value.to_f64()
        )),
        None => s.push_str("a priori 1/(bd):      n/a (real-valued dispersion)\n"),
    }
    match &b.finite_domain_min {
        Some(f) => {
            s.push_str(&format!(
                "finite-domain min:    {} ({:.6e})\n",
                f.value,
                f.value.to_f64()
            ));
            if let Some(w) = &f.witness {
                s.push_str(&format!("witness:              {w}\n"));
            }
        }
        None => s.push_str(
            "finite-domain min:    undefined (no vector-closed triad with nonzero discrepancy)\n",
        ),
    }
    s
}

pub fn amplitude_bound_json(b: &AmplitudeBound) -> Value {
    json!({ "m": b.m, "n": b.n, "exact": b.ratio_text(), "approx": b.approx })
}

fn class_name(c: ModeClass) -> &'static str {
    match c {
        ModeClass::Active => "active",
        ModeClass::Passive => "passive",
        ModeClass::Neutral => "neutral",
    }
}

fn evidence_json(e: &Evidence) -> Value {
    match e {
        Evidence::Resonant(t) => json!({ "kind": "resonant", "triad": TriadRecord::from(t) }),
        Evidence::Bridge(step) => json!({
            "kind": "bridge",
            "source": step.source.label(),
            "donor": [step.donor.0.to_string(), step.donor.1.to_string()],
            "triad": TriadRecord::from(&step.formed),
        }),
    }
}

pub fn partition_json(p: &ModePartition) -> Value {
    let c = p.counts();
    json!({
        "summary": {
            "active": c.active,
            "passive": c.passive,
            "neutral": c.neutral,
            "omega_max": p.options.omega_max,
        },
        "modes": p.records.iter().map(|r| json!({
            "m": r.mode.m,
            "n": r.mode.n,
            "class": class_name(r.class),
            "min_abs_discrepancy": r.min_abs_discrepancy.as_ref().map(Scalar::from),
            "evidence_triads": r.evidence.iter().map(evidence_json).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

pub fn write_partition_csv<W: Write>(out: W, p: &ModePartition, header: bool) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if header {
        w.write_record(MODE_COLUMNS).map_err(csv_err)?;
    }
    for r in &p.records {
        let min = r
            .min_abs_discrepancy
            .as_ref()
            .map(scalar_text)
            .unwrap_or_default();
        w.write_record([
            r.mode.m.to_string(),
            r.mode.n.to_string(),
            class_name(r.class).to_string(),
            min,
        ])
        .map_err(csv_err)?;
    }
    w.flush()
        .map_err(|e| Error::Usage(format!("csv output failed: {e}")))?;
    Ok(())
}

pub fn partition_table(p: &ModePartition) -> String {
    let c = p.counts();
    let mut s = format!(
        "active {}  passive {}  neutral {}  (omega_max = {})\n",
        c.active, c.passive, c.neutral, p.options.omega_max
    );
    for class in [ModeClass::Active, ModeClass::Passive, ModeClass::Neutral] {
        let modes: Vec<String> = p.modes_in(class).map(|k| k.to_string()).collect();
        s.push_str(&format!("{:<8} {}\n", class_name(class), modes.join("")));
    }
    s
}

pub fn plan_json(p: &ExperimentPlan) -> Value {
    json!({
        "spec": spec_json(&p.spec),
        "domain": p.domain,
        "d_max": p.d_max,
        "d_min": p.d_min,
        "epsilon": p.epsilon,
        "units": { "amplitude": "cm", "frequency": "Hz", "omega": "rad/s" },
        "type_a": triads_json(&p.type_a),
        "type_b": triads_json(&p.type_b),
        "amplitudes": p.amplitudes.iter().map(|(k, a)| json!({ "m": k.m, "n": k.n, "amplitude_cm": a })).collect::<Vec<_>>(),
        "notes": p.notes,
    })
}

pub fn plan_table(p: &ExperimentPlan) -> String {
    let mut s = format!("Type A (D <= {:e}): {} triads\n", p.d_max, p.type_a.len());
    s.push_str(&triads_table(&p.type_a));
    s.push_str(&format!(
        "Type B (D >= {}): {} triads\n",
        p.d_min,
        p.type_b.len()
    ));
    s.push_str(&triads_table(&p.type_b));
    s.push_str(&format!("Amplitudes (epsilon = {}, cm)\n", p.epsilon));
    for (k, a) in &p.amplitudes {
        s.push_str(&format!("{:<12} {:>12.6}\n", k.to_string(), a));
    }
    for note in &p.notes {
        s.push_str(&format!("note: {note}\n"));
    }
    s
}

pub fn sweep_json(r: &GeometrySweepReport) -> Value {
    json!({
        "spec": spec_json(&r.base),
        "domain": r.domain,
        "d_max": r.d_max,
        "omega_max": r.classify.omega_max,
        "cells": r.cells.iter().map(|c| json!({
            "lx": c.lx,
            "ly": c.ly,
            "triad_count": c.triads.len(),
            "resonance_free": c.resonance_free,
            "class_counts": c.counts,
            "triads": triads_json(&c.triads),
        })).collect::<Vec<_>>(),
    })
}

pub fn sweep_table(r: &GeometrySweepReport) -> String {
    let mut s = format!(
        "{:>10} {:>10} {:>8} {:>8} {:>8} {:>8} {:>15}\n",
        "lx", "ly", "triads", "active", "passive", "neutral", "resonance_free"
    );
    for c in &r.cells {
        s.push_str(&format!(
            "{:>10} {:>10} {:>8} {:>8} {:>8} {:>8} {:>15}\n",
            c.lx,
            c.ly,
            c.triads.len(),
            c.counts.active,
            c.counts.passive,
            c.counts.neutral,
            c.resonance_free
        ));
    }
    s
}

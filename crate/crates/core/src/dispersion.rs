//! Dispersion relations, basin geometry and frequency evaluation.
//!
//! Units are c.g.s. throughout: lengths in cm, `g` in cm/s², `mu_over_nu` in
//! cm³/s². Frequencies are angular (rad/s); Hz appears only on output.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::omega::{Frequency, Omega};
use crate::vector::WaveVector;

pub const DEFAULT_G: f64 = 981.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DispersionKind {
    /// `ω = −2m / (n(n+1))`, spherical Rossby / drift waves.
    RossbySphere,
    /// `ω = (m² + n²)^{3/2}`
    Capillary,
    /// `ω² = g k + (μ/ν) k³`
    GravityCapillary,
    /// `ω = k tanh(α k)`
    GravityTanh,
    /// Barotropic vorticity equation on a plane; see [`PlaneForm`].
    BvePlane,
}

impl DispersionKind {
    pub const ALL: [DispersionKind; 5] = [
        DispersionKind::RossbySphere,
        DispersionKind::Capillary,
        DispersionKind::GravityCapillary,
        DispersionKind::GravityTanh,
        DispersionKind::BvePlane,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DispersionKind::RossbySphere => "rossby_sphere",
            DispersionKind::Capillary => "capillary",
            DispersionKind::GravityCapillary => "gravity_capillary",
            DispersionKind::GravityTanh => "gravity_tanh",
            DispersionKind::BvePlane => "bve_plane",
        }
    }
}

impl fmt::Display for DispersionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DispersionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('-', "_");
        Self::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| Error::Usage(format!("unknown dispersion kind `{s}`")))
    }
}

/// Which rational form the planar vorticity-equation dispersion takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlaneForm {
    /// `ω = kx / (1 + kx + ky)` exactly as it is usually printed.
    #[default]
    Printed,
    /// `ω = kx / (1 + kx² + ky²)`, β-plane with unit deformation radius.
    Deformation,
    /// `ω = kx / (kx² + ky²)`, β-plane without deformation term.
    Barotropic,
}

impl FromStr for PlaneForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "printed" => Ok(PlaneForm::Printed),
            "deformation" => Ok(PlaneForm::Deformation),
            "barotropic" => Ok(PlaneForm::Barotropic),
            _ => Err(Error::Usage(format!("unknown plane form `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BasinKind {
    UnitSquare,
    Rectangle,
    Sphere,
    Plane,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasinGeometry {
    pub kind: BasinKind,
    #[serde(default = "one")]
    pub lx: f64,
    #[serde(default = "one")]
    pub ly: f64,
}

fn one() -> f64 {
    1.0
}

impl BasinGeometry {
    pub const UNIT_SQUARE: BasinGeometry = BasinGeometry {
        kind: BasinKind::UnitSquare,
        lx: 1.0,
        ly: 1.0,
    };
    pub const SPHERE: BasinGeometry = BasinGeometry {
        kind: BasinKind::Sphere,
        lx: 1.0,
        ly: 1.0,
    };
    pub const PLANE: BasinGeometry = BasinGeometry {
        kind: BasinKind::Plane,
        lx: 1.0,
        ly: 1.0,
    };

    pub fn rectangle(lx: f64, ly: f64) -> Result<Self> {
        check_length("lx", lx)?;
        check_length("ly", ly)?;
        Ok(Self {
            kind: BasinKind::Rectangle,
            lx,
            ly,
        })
    }
}

fn check_length(name: &'static str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value: v,
            reason: "basin lengths must be positive and finite",
        })
    }
}

fn check_positive(name: &'static str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value: v,
            reason: "must be positive and finite",
        })
    }
}

/// Liquids with tabulated surface-tension-to-density ratios.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Liquid {
    /// Clear water at 8 °C.
    Water,
    /// Glycerine at 20 °C.
    Glycerine,
    /// Benzol at 60 °C.
    Benzol,
    /// Benzaldehyde film on water at 20 °C.
    Benzaldehyde,
}

impl Liquid {
    pub const ALL: [Liquid; 4] = [
        Liquid::Water,
        Liquid::Glycerine,
        Liquid::Benzol,
        Liquid::Benzaldehyde,
    ];

    pub fn mu_over_nu(self) -> f64 {
        match self {
            Liquid::Water => 75.0,
            Liquid::Glycerine => 47.0,
            Liquid::Benzol => 27.0,
            Liquid::Benzaldehyde => 16.0,
        }
    }

    pub fn preset_name(self) -> &'static str {
        match self {
            Liquid::Water => "water-8C",
            Liquid::Glycerine => "glycerine-20C",
            Liquid::Benzol => "benzol-60C",
            Liquid::Benzaldehyde => "benzaldehyde-film-20C",
        }
    }
}

impl FromStr for Liquid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.to_ascii_lowercase();
        Liquid::ALL
            .into_iter()
            .find(|l| {
                let p = l.preset_name().to_ascii_lowercase();
                p == s || p.split('-').next() == Some(s.as_str())
            })
            .ok_or_else(|| Error::Usage(format!("unknown liquid `{s}`")))
    }
}

/// A validated, parameterized dispersion relation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "DispersionConfig", into = "DispersionConfig")]
pub struct DispersionSpec {
    kind: DispersionKind,
    g: f64,
    mu_over_nu: Option<f64>,
    alpha: Option<f64>,
    basin: BasinGeometry,
    plane_form: PlaneForm,
}

impl DispersionSpec {
    pub fn rossby_sphere() -> Self {
        Self::raw(DispersionKind::RossbySphere, BasinGeometry::SPHERE)
    }

    pub fn capillary() -> Self {
        Self::raw(DispersionKind::Capillary, BasinGeometry::UNIT_SQUARE)
    }

    pub fn gravity_capillary(mu_over_nu: f64) -> Result<Self> {
        check_positive("mu_over_nu", mu_over_nu)?;
        Ok(Self {
            mu_over_nu: Some(mu_over_nu),
            ..Self::raw(DispersionKind::GravityCapillary, BasinGeometry::UNIT_SQUARE)
        })
    }

    pub fn liquid(liquid: Liquid) -> Self {
        Self::gravity_capillary(liquid.mu_over_nu()).expect("preset values are positive")
    }

    pub fn gravity_tanh(alpha: f64) -> Result<Self> {
        check_positive("alpha", alpha)?;
        Ok(Self {
            alpha: Some(alpha),
            ..Self::raw(DispersionKind::GravityTanh, BasinGeometry::UNIT_SQUARE)
        })
    }

    pub fn bve_plane(form: PlaneForm) -> Self {
        Self {
            plane_form: form,
            ..Self::raw(DispersionKind::BvePlane, BasinGeometry::UNIT_SQUARE)
        }
    }

    fn raw(kind: DispersionKind, basin: BasinGeometry) -> Self {
        Self {
            kind,
            g: DEFAULT_G,
            mu_over_nu: None,
            alpha: None,
            basin,
            plane_form: PlaneForm::default(),
        }
    }

    pub fn with_g(mut self, g: f64) -> Result<Self> {
        check_positive("g", g)?;
        self.g = g;
        Ok(self)
    }

    pub fn kind(&self) -> DispersionKind {
        self.kind
    }
    pub fn g(&self) -> f64 {
        self.g
    }
    pub fn mu_over_nu(&self) -> Option<f64> {
        self.mu_over_nu
    }
    pub fn alpha(&self) -> Option<f64> {
        self.alpha
    }
    pub fn basin(&self) -> BasinGeometry {
        self.basin
    }
    pub fn plane_form(&self) -> PlaneForm {
        self.plane_form
    }

    /// True iff frequencies are exact rationals of the integer wavenumbers.
    pub fn is_exact(&self) -> bool {
        self.kind == DispersionKind::RossbySphere
    }

    /// Whether vector closure constrains the second component. The sphere
    /// closes only the zonal wavenumber `m`.
    pub fn closes_n(&self) -> bool {
        self.kind != DispersionKind::RossbySphere
    }

    pub fn is_admissible(&self, k: WaveVector) -> bool {
        self.kind != DispersionKind::RossbySphere || k.m <= k.n
    }

    fn check(&self, k: WaveVector) -> Result<()> {
        if self.is_admissible(k) {
            Ok(())
        } else {
            Err(Error::InvalidWaveVector {
                m: k.m as i64,
                n: k.n as i64,
                reason: "spherical modes need m <= n",
            })
        }
    }

    /// Basin-rescaled scalar wavenumber `|(m/Lx, n/Ly)|`, written so that
    /// `Lx = Ly = 1` yields `sqrt(m² + n²)` bit for bit.
    pub fn wavenumber(&self, k: WaveVector) -> f64 {
        self.wavenumber_sqr(k).sqrt()
    }

    fn wavenumber_sqr(&self, k: WaveVector) -> f64 {
        let (lx, ly) = (self.basin.lx, self.basin.ly);
        let a = k.m as f64 * ly;
        let b = k.n as f64 * lx;
        let area = lx * ly;
        (a * a + b * b) / (area * area)
    }

    pub fn eval_frequency(&self, k: WaveVector) -> Result<Frequency> {
        Ok(Frequency::new(self.omega(k)?))
    }

    pub fn omega(&self, k: WaveVector) -> Result<Omega> {
        self.check(k)?;
        Ok(if self.is_exact() {
            Omega::Exact(rossby_omega(k))
        } else {
            Omega::Real(self.omega_f64_unchecked(k))
        })
    }

    /// Float frequency without the admissibility check. Exact specs round
    /// their rational value.
    pub(crate) fn omega_f64_unchecked(&self, k: WaveVector) -> f64 {
        match self.kind {
            DispersionKind::RossbySphere => -2.0 * k.m as f64 / (k.n as f64 * (k.n as f64 + 1.0)),
            DispersionKind::Capillary => {
                let k2 = self.wavenumber_sqr(k);
                k2 * k2.sqrt()
            }
            DispersionKind::GravityCapillary => {
                let kk = self.wavenumber(k);
                let mu = self.mu_over_nu.expect("validated");
                (self.g * kk + mu * kk * kk * kk).sqrt()
            }
            DispersionKind::GravityTanh => {
                let kk = self.wavenumber(k);
                let alpha = self.alpha.expect("validated");
                kk * (alpha * kk).tanh()
            }
            DispersionKind::BvePlane => {
                let kx = k.m as f64 / self.basin.lx;
                let ky = k.n as f64 / self.basin.ly;
                match self.plane_form {
                    PlaneForm::Printed => kx / (1.0 + kx + ky),
                    PlaneForm::Deformation => kx / (1.0 + kx * kx + ky * ky),
                    PlaneForm::Barotropic => kx / (kx * kx + ky * ky),
                }
            }
        }
    }

    /// Returns this spec evaluated in an `Lx × Ly` rectangular basin.
    ///
    /// Wavenumbers become `(m/Lx, n/Ly)`; for a square of side `L` the
    /// gravity-capillary relation reads `ω² = g k/L + (μ/ν) k³/L³`.
    pub fn rescale_for_basin(&self, lx: f64, ly: f64) -> Result<Self> {
        if self.kind == DispersionKind::RossbySphere {
            return Err(Error::Usage(
                "spherical dispersion has no rectangular basin".into(),
            ));
        }
        let basin = if lx == 1.0 && ly == 1.0 {
            check_length("lx", lx)?;
            BasinGeometry::UNIT_SQUARE
        } else {
            BasinGeometry::rectangle(lx, ly)?
        };
        Ok(Self { basin, ..*self })
    }

    /// Short human-readable summary for report headers.
    pub fn describe(&self) -> String {
        let mut s = self.kind.name().to_string();
        if let Some(mu) = self.mu_over_nu {
            s.push_str(&format!(" mu/nu={mu}"));
        }
        if let Some(a) = self.alpha {
            s.push_str(&format!(" alpha={a}"));
        }
        if self.kind == DispersionKind::BvePlane {
            s.push_str(&format!(" form={:?}", self.plane_form).to_lowercase());
        }
        if self.basin.kind == BasinKind::Rectangle {
            s.push_str(&format!(" basin={}x{}", self.basin.lx, self.basin.ly));
        }
        s
    }
}

/// `−2m / (n(n+1))` in lowest terms.
pub(crate) fn rossby_omega(k: WaveVector) -> BigRational {
    let n = BigInt::from(k.n);
    let denom = &n * (&n + 1u32);
    BigRational::new(BigInt::from(-2i64 * k.m as i64), denom)
}

/// On-disk form of a [`DispersionSpec`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DispersionConfig {
    pub kind: DispersionKind,
    #[serde(default = "default_g")]
    pub g: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu_over_nu: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basin: Option<BasinGeometry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plane_form: Option<PlaneForm>,
}

fn default_g() -> f64 {
    DEFAULT_G
}

impl TryFrom<DispersionConfig> for DispersionSpec {
    type Error = Error;

    fn try_from(c: DispersionConfig) -> Result<Self> {
        use DispersionKind::*;
        check_positive("g", c.g)?;
        let sphere = c.kind == RossbySphere;
        let basin = match c.basin {
            None if sphere => BasinGeometry::SPHERE,
            None => BasinGeometry::UNIT_SQUARE,
            Some(b) => {
                check_length("basin.lx", b.lx)?;
                check_length("basin.ly", b.ly)?;
                match (b.kind, sphere) {
                    (BasinKind::Sphere, true) => b,
                    (BasinKind::Sphere, false) | (_, true) => {
                        return Err(Error::Usage(format!(
                            "basin `{:?}` is incompatible with dispersion `{}`",
                            b.kind, c.kind
                        )))
                    }
                    (BasinKind::UnitSquare | BasinKind::Plane, false)
                        if b.lx != 1.0 || b.ly != 1.0 =>
                    {
                        return Err(Error::Usage(
                            "unit_square and plane basins take no lengths".into(),
                        ))
                    }
                    _ => b,
                }
            }
        };
        let mut spec = DispersionSpec {
            kind: c.kind,
            g: c.g,
            mu_over_nu: None,
            alpha: None,
            basin,
            plane_form: PlaneForm::default(),
        };
        match c.kind {
            GravityCapillary => {
                let mu = c
                    .mu_over_nu
                    .ok_or_else(|| Error::Usage("gravity_capillary needs `mu_over_nu`".into()))?;
                check_positive("mu_over_nu", mu)?;
                spec.mu_over_nu = Some(mu);
            }
            GravityTanh => {
                let a = c
                    .alpha
                    .ok_or_else(|| Error::Usage("gravity_tanh needs `alpha`".into()))?;
                check_positive("alpha", a)?;
                spec.alpha = Some(a);
            }
            _ => {}
        }
        if c.mu_over_nu.is_some() && c.kind != GravityCapillary {
            return Err(Error::Usage(format!(
                "`mu_over_nu` does not apply to {}",
                c.kind
            )));
        }
        if c.alpha.is_some() && c.kind != GravityTanh {
            return Err(Error::Usage(format!(
                "`alpha` does not apply to {}",
                c.kind
            )));
        }
        match (c.plane_form, c.kind) {
            (Some(f), BvePlane) => spec.plane_form = f,
            (Some(_), _) => {
                return Err(Error::Usage(format!(
                    "`plane_form` does not apply to {}",
                    c.kind
                )))
            }
            _ => {}
        }
        Ok(spec)
    }
}

impl From<DispersionSpec> for DispersionConfig {
    fn from(s: DispersionSpec) -> Self {
        DispersionConfig {
            kind: s.kind,
            g: s.g,
            mu_over_nu: s.mu_over_nu,
            alpha: s.alpha,
            basin: Some(s.basin),
            plane_form: (s.kind == DispersionKind::BvePlane).then_some(s.plane_form),
        }
    }
}

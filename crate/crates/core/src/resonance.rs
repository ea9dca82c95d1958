//! Exhaustive triad enumeration over a spectral domain.
//!
//! Candidates are generated from a pair `(k1, k2)` by deriving the third
//! member through vector closure, so no triple loop over the domain is ever
//! run. Rows of the pair space (one row per `k1`) are independent and may be
//! processed on a rayon pool; results are globally sorted before return.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dispersion::{rossby_omega, DispersionSpec};
use crate::error::{Error, Result};
use crate::omega::{Frequency, Omega};
use crate::vector::{DomainShape, ModeIndex, SpectralDomain, WaveVector};

/// A float triad with `d_ratio` at or below this is reported as numerically exact.
pub const NUMERICALLY_EXACT_D: f64 = 1e-12;

/// How the third wave vector is tied to the first two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Closure {
    /// `k1 + k2 = k3` with `ω1 + ω2 − ω3`.
    #[default]
    Sum,
    /// Each component satisfies `c = a + b` or `c = |a − b|` independently,
    /// and the discrepancy is the smallest over the three inequivalent sign
    /// patterns. This is the closure of standing modes in a box.
    Standing,
}

impl FromStr for Closure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sum" => Ok(Closure::Sum),
            "standing" | "general" => Ok(Closure::Standing),
            _ => Err(Error::Usage(format!("unknown closure `{s}`"))),
        }
    }
}

/// Extra filter on the second wavenumber of a candidate triad.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Selection {
    /// `SphereTriangle` for the spherical dispersion, `None` otherwise.
    #[default]
    Auto,
    None,
    /// Pairwise distinct `n`, strict triangle `|n1 − n2| < n3 < n1 + n2` and
    /// odd `n1 + n2 + n3`.
    SphereTriangle,
}

impl Selection {
    pub fn resolve(self, spec: &DispersionSpec) -> Selection {
        match self {
            Selection::Auto if spec.is_exact() => Selection::SphereTriangle,
            Selection::Auto => Selection::None,
            other => other,
        }
    }

    pub fn admits(self, n: [u32; 3]) -> bool {
        match self {
            Selection::Auto | Selection::None => true,
            Selection::SphereTriangle => {
                let [a, b, c] = n;
                a != b && b != c && a != c && a.abs_diff(b) < c && c < a + b && (a + b + c) % 2 == 1
            }
        }
    }
}

impl FromStr for Selection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Selection::Auto),
            "none" => Ok(Selection::None),
            "sphere_triangle" | "sphere-triangle" | "triangle" => Ok(Selection::SphereTriangle),
            _ => Err(Error::Usage(format!("unknown selection rule `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchOptions {
    #[serde(default)]
    pub closure: Closure,
    #[serde(default)]
    pub selection: Selection,
    /// Worker count. `None` uses the global rayon pool, `Some(1)` runs inline.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threads: Option<usize>,
}

impl SearchOptions {
    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = Some(threads);
        self
    }
}

/// Signs applied to `(ω1, ω2, ω3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignPattern(pub [i8; 3]);

impl SignPattern {
    pub const SUM: SignPattern = SignPattern([1, 1, -1]);
    /// The inequivalent patterns up to an overall sign that can vanish for
    /// same-signed frequencies.
    pub const MIXED: [SignPattern; 3] = [
        SignPattern([1, 1, -1]),
        SignPattern([1, -1, 1]),
        SignPattern([-1, 1, 1]),
    ];

    fn apply_f64(self, w: [f64; 3]) -> f64 {
        let s = |i: usize| if self.0[i] < 0 { -w[i] } else { w[i] };
        (s(0) + s(1)) + s(2)
    }

    fn apply_exact(self, w: [&BigRational; 3]) -> BigRational {
        let mut acc = BigRational::zero();
        for (sign, x) in self.0.iter().zip(w) {
            if *sign < 0 {
                acc -= x;
            } else {
                acc += x;
            }
        }
        acc
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.0 {
            f.write_str(if s < 0 { "-" } else { "+" })?;
        }
        Ok(())
    }
}

impl FromStr for SignPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signs: Vec<i8> = s
            .chars()
            .filter(|c| *c != ',' && !c.is_whitespace())
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                _ => Err(Error::Usage(format!("bad sign pattern `{s}`"))),
            })
            .collect::<Result<_>>()?;
        let arr: [i8; 3] = signs
            .try_into()
            .map_err(|_| Error::Usage(format!("sign pattern `{s}` needs three signs")))?;
        Ok(SignPattern(arr))
    }
}

impl Serialize for SignPattern {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResonanceKind {
    Exact,
    NumericallyExact,
    Near,
}

/// Three vector-closed modes with their frequencies and discrepancy.
#[derive(Debug, Clone, PartialEq)]
pub struct Triad {
    pub k1: WaveVector,
    pub k2: WaveVector,
    pub k3: WaveVector,
    pub signs: SignPattern,
    pub omegas: [Frequency; 3],
    pub discrepancy: Omega,
    pub d_ratio: f64,
}

impl Triad {
    pub fn members(&self) -> [WaveVector; 3] {
        [self.k1, self.k2, self.k3]
    }

    pub fn contains(&self, k: WaveVector) -> bool {
        self.members().contains(&k)
    }

    /// The three member pairs, each in lexicographic order.
    pub fn pairs(&self) -> [(WaveVector, WaveVector); 3] {
        [
            ordered(self.k1, self.k2),
            ordered(self.k1, self.k3),
            ordered(self.k2, self.k3),
        ]
    }

    pub fn hz(&self) -> [f64; 3] {
        [self.omegas[0].hz, self.omegas[1].hz, self.omegas[2].hz]
    }

    pub fn resonance(&self) -> ResonanceKind {
        match &self.discrepancy {
            Omega::Exact(r) if r.is_zero() => ResonanceKind::Exact,
            Omega::Exact(_) => ResonanceKind::Near,
            Omega::Real(_) if self.d_ratio <= NUMERICALLY_EXACT_D => {
                ResonanceKind::NumericallyExact
            }
            Omega::Real(_) => ResonanceKind::Near,
        }
    }

    pub fn is_resonant(&self) -> bool {
        self.resonance() != ResonanceKind::Near
    }

    /// `[m1,n1][m2,n2][m3,n3]`
    pub fn label(&self) -> String {
        format!("{}{}{}", self.k1, self.k2, self.k3)
    }

    fn key(&self) -> (WaveVector, WaveVector, WaveVector) {
        (self.k1, self.k2, self.k3)
    }

    /// Order by `d_ratio` ascending, then lexicographically.
    pub fn cmp_by_ratio(&self, other: &Triad) -> Ordering {
        self.d_ratio
            .total_cmp(&other.d_ratio)
            .then_with(|| self.key().cmp(&other.key()))
    }

    pub fn cmp_lex(&self, other: &Triad) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for Triad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hz = self.hz();
        write!(
            f,
            "{}; ({:.4}, {:.4}, {:.4})",
            self.label(),
            hz[0],
            hz[1],
            hz[2]
        )
    }
}

pub(crate) fn ordered(a: WaveVector, b: WaveVector) -> (WaveVector, WaveVector) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Discrepancy `±ω1 ± ω2 ± ω3` for three admissible modes.
pub fn discrepancy(
    spec: &DispersionSpec,
    members: [WaveVector; 3],
    signs: SignPattern,
) -> Result<Omega> {
    let w = [
        spec.omega(members[0])?,
        spec.omega(members[1])?,
        spec.omega(members[2])?,
    ];
    Ok(match &w {
        [Omega::Exact(a), Omega::Exact(b), Omega::Exact(c)] => {
            Omega::Exact(signs.apply_exact([a, b, c]))
        }
        _ => Omega::Real(signs.apply_f64([w[0].to_f64(), w[1].to_f64(), w[2].to_f64()])),
    })
}

/// Whether three modes close under `closure` for this spec, in the given roles.
pub fn closes(
    spec: &DispersionSpec,
    closure: Closure,
    k1: WaveVector,
    k2: WaveVector,
    k3: WaveVector,
) -> bool {
    let fits = |a: u32, b: u32, c: u32| match closure {
        Closure::Sum => a + b == c,
        Closure::Standing => a + b == c || a.abs_diff(b) == c,
    };
    fits(k1.m, k2.m, k3.m) && (!spec.closes_n() || fits(k1.n, k2.n, k3.n))
}

enum Table {
    Exact(Vec<BigRational>),
    Real(Vec<f64>),
}

#[derive(Debug, Clone, Copy)]
struct Cand {
    i: usize,
    j: usize,
    k: usize,
}

/// Evaluated discrepancy of one candidate, before it becomes a [`Triad`].
enum Eval {
    Exact {
        omega: BigRational,
        signs: SignPattern,
    },
    Real {
        omega: f64,
        d: f64,
        signs: SignPattern,
    },
}

/// A prepared search: frequency table, index and options for one spec/domain.
pub struct TriadSearch {
    spec: DispersionSpec,
    domain: SpectralDomain,
    options: SearchOptions,
    index: ModeIndex,
    table: Table,
}

impl TriadSearch {
    pub fn new(
        spec: &DispersionSpec,
        domain: SpectralDomain,
        mut options: SearchOptions,
    ) -> Result<Self> {
        options.selection = options.selection.resolve(spec);
        if spec.is_exact() && domain.shape == DomainShape::Square && domain.truncation > 1 {
            return Err(Error::Usage(format!(
                "{} needs a triangular domain (m <= n)",
                spec.kind()
            )));
        }
        if options.threads == Some(0) {
            return Err(Error::Usage("thread count must be at least 1".into()));
        }
        let index = ModeIndex::new(&domain);
        for &k in &index.modes {
            if !spec.is_admissible(k) {
                return Err(Error::InvalidWaveVector {
                    m: k.m as i64,
                    n: k.n as i64,
                    reason: "outside the dispersion's admissible set",
                });
            }
        }
        let table = if spec.is_exact() {
            Table::Exact(index.modes.iter().map(|&k| rossby_omega(k)).collect())
        } else {
            Table::Real(
                index
                    .modes
                    .iter()
                    .map(|&k| spec.omega_f64_unchecked(k))
                    .collect(),
            )
        };
        Ok(Self {
            spec: *spec,
            domain,
            options,
            index,
            table,
        })
    }

    pub fn spec(&self) -> &DispersionSpec {
        &self.spec
    }

    pub fn domain(&self) -> SpectralDomain {
        self.domain
    }

    pub fn options(&self) -> SearchOptions {
        self.options
    }

    pub fn modes(&self) -> &[WaveVector] {
        &self.index.modes
    }

    fn omega_at(&self, i: usize) -> Omega {
        match &self.table {
            Table::Exact(t) => Omega::Exact(t[i].clone()),
            Table::Real(t) => Omega::Real(t[i]),
        }
    }

    /// Enumerates candidates whose first member is mode `i`.
    fn row(&self, i: usize, mut visit: impl FnMut(Cand)) {
        let modes = &self.index.modes;
        let t = self.domain.truncation;
        let a = modes[i];
        let sel = self.options.selection;
        let mut emit = |j: usize, k: usize| {
            if sel.admits([a.n, modes[j].n, modes[k].n]) {
                visit(Cand { i, j, k });
            }
        };
        let closes_n = self.spec.closes_n();
        match self.options.closure {
            Closure::Sum => {
                for (j, b) in modes.iter().enumerate().skip(i) {
                    let m3 = a.m + b.m;
                    if m3 > t {
                        break;
                    }
                    if closes_n {
                        if let Some(k) = self.index.get(m3, a.n + b.n) {
                            emit(j, k);
                        }
                    } else {
                        for n3 in m3..=t {
                            if let Some(k) = self.index.get(m3, n3) {
                                emit(j, k);
                            }
                        }
                    }
                }
            }
            Closure::Standing => {
                for (j, b) in modes.iter().enumerate().skip(i) {
                    let ms = [a.m + b.m, a.m.abs_diff(b.m)];
                    for m3 in ms {
                        if m3 == 0 || m3 > t {
                            continue;
                        }
                        if closes_n {
                            for n3 in [a.n + b.n, a.n.abs_diff(b.n)] {
                                if let Some(k) = self.index.get(m3, n3).filter(|&k| k > j) {
                                    emit(j, k);
                                }
                            }
                        } else {
                            for n3 in 1..=t {
                                if let Some(k) = self.index.get(m3, n3).filter(|&k| k > j) {
                                    emit(j, k);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    fn patterns(&self) -> &'static [SignPattern] {
        match self.options.closure {
            Closure::Sum => std::slice::from_ref(&SignPattern::SUM),
            Closure::Standing => &SignPattern::MIXED,
        }
    }

    fn eval(&self, c: Cand) -> Eval {
        match &self.table {
            Table::Real(t) => {
                let w = [t[c.i], t[c.j], t[c.k]];
                let mut best = (f64::INFINITY, SignPattern::SUM);
                for &p in self.patterns() {
                    let v = p.apply_f64(w);
                    if v.abs() < best.0.abs() {
                        best = (v, p);
                    }
                }
                let (omega, signs) = best;
                Eval::Real {
                    omega,
                    d: real_ratio(omega, w),
                    signs,
                }
            }
            Table::Exact(t) => {
                let w = [&t[c.i], &t[c.j], &t[c.k]];
                let mut best: Option<(BigRational, SignPattern)> = None;
                for &p in self.patterns() {
                    let v = p.apply_exact(w);
                    if best.as_ref().is_none_or(|(b, _)| v.abs() < b.abs()) {
                        best = Some((v, p));
                    }
                }
                let (omega, signs) = best.expect("at least one pattern");
                Eval::Exact { omega, signs }
            }
        }
    }

    fn exact_ratio(&self, c: Cand, omega: &BigRational) -> f64 {
        let Table::Exact(t) = &self.table else {
            unreachable!()
        };
        let min = [&t[c.i], &t[c.j], &t[c.k]]
            .into_iter()
            .map(|x| x.abs())
            .min()
            .expect("three");
        if min.is_zero() {
            return if omega.is_zero() { 0.0 } else { f64::INFINITY };
        }
        (omega.abs() / min).to_f64().unwrap_or(f64::INFINITY)
    }

    fn materialize(&self, c: Cand, e: Eval) -> Triad {
        let (discrepancy, d_ratio, signs) = match e {
            Eval::Real { omega, d, signs } => (Omega::Real(omega), d, signs),
            Eval::Exact { omega, signs } => {
                let d = self.exact_ratio(c, &omega);
                (Omega::Exact(omega), d, signs)
            }
        };
        let m = &self.index.modes;
        Triad {
            k1: m[c.i],
            k2: m[c.j],
            k3: m[c.k],
            signs,
            omegas: [c.i, c.j, c.k].map(|i| Frequency::new(self.omega_at(i))),
            discrepancy,
            d_ratio,
        }
    }

    /// Runs `f` on every row and returns the results in row order.
    fn rows<R: Send>(&self, f: impl Fn(usize) -> R + Sync + Send) -> Result<Vec<R>> {
        let n = self.index.len();
        match self.options.threads {
            Some(1) => Ok((0..n).map(f).collect()),
            Some(t) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build()
                    .map_err(|e| Error::Usage(format!("cannot start worker pool: {e}")))?;
                Ok(pool.install(|| (0..n).into_par_iter().map(&f).collect()))
            }
            None => Ok((0..n).into_par_iter().map(f).collect()),
        }
    }

    /// Every vector-closed triad passing `keep`, unsorted.
    fn collect(&self, keep: impl Fn(&Eval) -> bool + Sync + Send) -> Result<Vec<Triad>> {
        let rows = self.rows(|i| {
            let mut out = Vec::new();
            self.row(i, |c| {
                let e = self.eval(c);
                if keep(&e) {
                    out.push(self.materialize(c, e));
                }
            });
            out
        })?;
        Ok(rows.into_iter().flatten().collect())
    }

    /// Number of vector-closed candidates in the domain.
    pub fn count(&self) -> Result<usize> {
        Ok(self
            .rows(|i| {
                let mut n = 0usize;
                self.row(i, |_| n += 1);
                n
            })?
            .into_iter()
            .sum())
    }

    /// All vector-closed triads, lexicographically sorted.
    pub fn all(&self) -> Result<Vec<Triad>> {
        let mut v = self.collect(|_| true)?;
        v.sort_by(Triad::cmp_lex);
        Ok(v)
    }

    pub fn exact(&self) -> Result<Vec<Triad>> {
        if !self.spec.is_exact() {
            return Err(Error::NotExact {
                kind: self.spec.kind().name(),
            });
        }
        let mut v = self.collect(|e| matches!(e, Eval::Exact { omega, .. } if omega.is_zero()))?;
        v.sort_by(Triad::cmp_lex);
        Ok(v)
    }

    pub fn near(&self, d_max: f64) -> Result<Vec<Triad>> {
        check_threshold("d_max", d_max)?;
        let mut v = match &self.table {
            Table::Real(_) => self.collect(|e| matches!(e, Eval::Real { d, .. } if *d <= d_max))?,
            Table::Exact(_) => {
                let mut v = self.collect(|_| true)?;
                v.retain(|t| t.d_ratio <= d_max || t.discrepancy.is_zero());
                v
            }
        };
        v.sort_by(Triad::cmp_by_ratio);
        Ok(v)
    }

    pub fn max_discrepancy(&self, d_min: f64) -> Result<Vec<Triad>> {
        check_threshold("d_min", d_min)?;
        let mut v = match &self.table {
            Table::Real(_) => self.collect(|e| matches!(e, Eval::Real { d, .. } if *d >= d_min))?,
            Table::Exact(_) => {
                let mut v = self.collect(|_| true)?;
                v.retain(|t| t.d_ratio >= d_min);
                v
            }
        };
        v.sort_by(|a, b| b.d_ratio.total_cmp(&a.d_ratio).then_with(|| a.cmp_lex(b)));
        Ok(v)
    }

    /// Triads with `0 < |Ω| <= omega_max` that are not resonant, sorted lexicographically.
    pub fn within(&self, omega_max: f64) -> Result<Vec<Triad>> {
        check_threshold("omega_max", omega_max)?;
        let mut v = match &self.table {
            Table::Real(_) => self.collect(|e| {
                matches!(e, Eval::Real { omega, d, .. }
                    if *omega != 0.0 && omega.abs() <= omega_max && *d > NUMERICALLY_EXACT_D)
            })?,
            Table::Exact(_) => {
                let bound = BigRational::from_float(omega_max);
                self.collect(|e| {
                    matches!(e, Eval::Exact { omega, .. }
                        if !omega.is_zero() && bound.as_ref().is_none_or(|b| omega.abs() <= *b))
                })?
            }
        };
        v.sort_by(Triad::cmp_lex);
        Ok(v)
    }

    /// Resonant triads: exact zeros, or numerically exact ones on float specs.
    pub fn resonant(&self) -> Result<Vec<Triad>> {
        if self.spec.is_exact() {
            self.exact()
        } else {
            let mut v = self.near(NUMERICALLY_EXACT_D)?;
            v.sort_by(Triad::cmp_lex);
            Ok(v)
        }
    }

    /// Smallest nonzero `|Ω|` in the domain, with a lexicographically first witness.
    pub fn min_nonzero(&self) -> Result<Option<Triad>> {
        let best = self.rows(|i| {
            let mut best: Option<(Cand, Eval)> = None;
            self.row(i, |c| {
                let e = self.eval(c);
                if is_zero(&e) {
                    return;
                }
                let better = match &best {
                    None => true,
                    Some((_, b)) => abs_cmp(&e, b) == Ordering::Less,
                };
                if better {
                    best = Some((c, e));
                }
            });
            best.map(|(c, e)| self.materialize(c, e))
        })?;
        Ok(best.into_iter().flatten().min_by(|a, b| {
            a.discrepancy
                .abs()
                .total_cmp(&b.discrepancy.abs())
                .then_with(|| a.cmp_lex(b))
        }))
    }

    /// Waves that close a triad with the pair `(a, b)`, in lexicographic order.
    pub fn completions(&self, a: WaveVector, b: WaveVector) -> Vec<WaveVector> {
        let t = self.domain.truncation;
        let comps = |x: u32, y: u32| -> Vec<u32> {
            let mut v = vec![x + y];
            if x != y {
                v.push(x.abs_diff(y));
            }
            v
        };
        let ms = comps(a.m, b.m);
        let ns: Vec<u32> = if self.spec.closes_n() {
            comps(a.n, b.n)
        } else {
            (1..=t).collect()
        };
        let mut out = Vec::new();
        for &m in &ms {
            for &n in &ns {
                let Some(pos) = self.index.get(m, n) else {
                    continue;
                };
                let w = self.index.modes[pos];
                if w == a || w == b {
                    continue;
                }
                if self.arrange(a, b, w).is_some() {
                    out.push(w);
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Canonical role order for three modes, if they close under the options.
    fn arrange(&self, a: WaveVector, b: WaveVector, c: WaveVector) -> Option<[WaveVector; 3]> {
        let mut s = [a, b, c];
        s.sort();
        let sel = self.options.selection.admits([s[0].n, s[1].n, s[2].n]);
        if !sel {
            return None;
        }
        match self.options.closure {
            Closure::Standing => {
                if s[1] == s[2] {
                    return None;
                }
                closes(&self.spec, Closure::Standing, s[0], s[1], s[2]).then_some(s)
            }
            Closure::Sum => {
                // The sum member is the largest in m; try each as the sum slot.
                for (x, y, z) in [(s[0], s[1], s[2]), (s[0], s[2], s[1]), (s[1], s[2], s[0])] {
                    if closes(&self.spec, Closure::Sum, x, y, z) {
                        return Some([x, y, z]);
                    }
                }
                None
            }
        }
    }

    /// Evaluates three modes as a triad under these options. Fails if they
    /// are not vector-closed or fall outside the domain.
    pub fn triad(&self, a: WaveVector, b: WaveVector, c: WaveVector) -> Result<Triad> {
        let pos = |k: WaveVector| {
            self.index.position(k).ok_or(Error::InvalidWaveVector {
                m: k.m as i64,
                n: k.n as i64,
                reason: "outside the spectral domain",
            })
        };
        let [x, y, z] = self.arrange(a, b, c).ok_or_else(|| {
            Error::Usage(format!(
                "{a}{b}{c} is not vector-closed under the configured closure"
            ))
        })?;
        let cand = Cand {
            i: pos(x)?,
            j: pos(y)?,
            k: pos(z)?,
        };
        Ok(self.materialize(cand, self.eval(cand)))
    }
}

fn is_zero(e: &Eval) -> bool {
    match e {
        Eval::Exact { omega, .. } => omega.is_zero(),
        Eval::Real { omega, .. } => *omega == 0.0,
    }
}

fn abs_cmp(a: &Eval, b: &Eval) -> Ordering {
    match (a, b) {
        (Eval::Exact { omega: x, .. }, Eval::Exact { omega: y, .. }) => x.abs().cmp(&y.abs()),
        (Eval::Real { omega: x, .. }, Eval::Real { omega: y, .. }) => x.abs().total_cmp(&y.abs()),
        _ => unreachable!("one table kind per search"),
    }
}

fn real_ratio(omega: f64, w: [f64; 3]) -> f64 {
    let min = w[0].abs().min(w[1].abs()).min(w[2].abs());
    if min == 0.0 {
        if omega == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        omega.abs() / min
    }
}

fn check_threshold(name: &'static str, v: f64) -> Result<()> {
    if v > 0.0 && !v.is_nan() {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value: v,
            reason: "must be positive",
        })
    }
}

pub fn find_exact_triads(
    spec: &DispersionSpec,
    domain: SpectralDomain,
    options: SearchOptions,
) -> Result<Vec<Triad>> {
    if !spec.is_exact() {
        return Err(Error::NotExact {
            kind: spec.kind().name(),
        });
    }
    TriadSearch::new(spec, domain, options)?.exact()
}

pub fn find_near_triads(
    spec: &DispersionSpec,
    domain: SpectralDomain,
    d_max: f64,
    options: SearchOptions,
) -> Result<Vec<Triad>> {
    check_threshold("d_max", d_max)?;
    TriadSearch::new(spec, domain, options)?.near(d_max)
}

pub fn find_max_discrepancy_triads(
    spec: &DispersionSpec,
    domain: SpectralDomain,
    d_min: f64,
    options: SearchOptions,
) -> Result<Vec<Triad>> {
    check_threshold("d_min", d_min)?;
    TriadSearch::new(spec, domain, options)?.max_discrepancy(d_min)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundMethod {
    #[serde(rename = "rational_1_over_bd")]
    Rational1OverBd,
    FiniteDomainMin,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiscrepancyBound {
    pub value: Omega,
    pub method: BoundMethod,
    pub witness: Option<Triad>,
}

/// Both lower bounds for a spec/domain. A `None` finite-domain minimum means
/// the domain has no vector-closed triad with nonzero discrepancy, so the
/// minimum is taken over an empty set and is undefined.
#[derive(Debug, Clone, PartialEq)]
pub struct LowerBound {
    pub a_priori: Option<DiscrepancyBound>,
    pub finite_domain_min: Option<DiscrepancyBound>,
    pub triad_count: usize,
}

/// `1/(b·d)` for two rationals `a/b` and `c/d` in lowest terms. Any nonzero
/// difference of the two is at least this large.
pub fn pair_bound(x: &BigRational, y: &BigRational) -> BigRational {
    BigRational::new(One::one(), x.denom() * y.denom())
}

pub fn discrepancy_lower_bound(
    spec: &DispersionSpec,
    domain: SpectralDomain,
    options: SearchOptions,
) -> Result<LowerBound> {
    if domain.is_empty() {
        return Err(Error::Usage("domain is empty".into()));
    }
    let search = TriadSearch::new(spec, domain, options)?;
    let a_priori = match &search.table {
        Table::Exact(t) => {
            let lcm = t
                .iter()
                .fold(num_bigint::BigInt::one(), |acc, r| acc.lcm(r.denom()));
            Some(DiscrepancyBound {
                value: Omega::Exact(BigRational::new(One::one(), lcm)),
                method: BoundMethod::Rational1OverBd,
                witness: None,
            })
        }
        Table::Real(_) => None,
    };
    let finite_domain_min = search.min_nonzero()?.map(|t| DiscrepancyBound {
        value: t.discrepancy.abs(),
        method: BoundMethod::FiniteDomainMin,
        witness: Some(t),
    });
    Ok(LowerBound {
        a_priori,
        finite_domain_min,
        triad_count: search.count()?,
    })
}

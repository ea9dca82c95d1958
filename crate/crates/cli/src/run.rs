use std::fs;
use std::io::Write;
use std::path::Path;

use serde_json::{json, Value};
use wavetriad_core::report;
use wavetriad_core::{
    classify_modes, discrepancy_lower_bound, geometry_sweep, plan_experiment,
    planetary_amplitude_bound, BridgePolicy, ClassifyOptions, Closure, CountPreset,
    DispersionConfig, DispersionKind, DispersionSpec, DomainShape, Liquid, PlaneForm,
    SearchOptions, Selection, SpectralDomain, Triad, TriadSearch, WaveVector,
};

use crate::args::*;
use crate::error::{CliError, CliResult};

enum Body {
    Json(Value),
    Text(String),
}

struct Report {
    header: Value,
    body: Body,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse<T: std::str::FromStr<Err = wavetriad_core::Error>>(
    v: &Option<String>,
) -> CliResult<Option<T>> {
    v.as_deref()
        .map(str::parse)
        .transpose()
        .map_err(CliError::from)
}

fn read_config(path: &Path) -> CliResult<DispersionSpec> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        action: "read",
        path: path.to_path_buf(),
        source,
    })?;
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    let from_json = || serde_json::from_str::<DispersionSpec>(&text).map_err(|e| e.to_string());
    let from_toml = || toml::from_str::<DispersionSpec>(&text).map_err(|e| e.to_string());
    let parsed = match ext {
        "toml" => from_toml(),
        "json" => from_json(),
        _ => from_json().or_else(|_| from_toml()),
    };
    parsed.map_err(|e| {
        usage(format!(
            "invalid configuration `{}`: {}",
            path.display(),
            e.trim()
        ))
    })
}

pub fn resolve_spec(a: &DispersionArgs) -> CliResult<DispersionSpec> {
    let base = if let Some(path) = &a.config {
        let inline = a.dispersion.is_some()
            || a.mu_nu.is_some()
            || a.liquid.is_some()
            || a.g.is_some()
            || a.alpha.is_some()
            || a.plane_form.is_some();
        if inline {
            return Err(usage(
                "--config cannot be combined with inline dispersion flags",
            ));
        }
        read_config(path)?
    } else {
        let liquid: Option<Liquid> = parse(&a.liquid)?;
        let kind: Option<DispersionKind> = parse(&a.dispersion)?;
        let kind = match (kind, liquid) {
            (Some(k), Some(_)) if k != DispersionKind::GravityCapillary => {
                return Err(usage(format!(
                    "--liquid sets a gravity-capillary relation, not {k}"
                )))
            }
            (Some(k), _) => k,
            (None, Some(_)) => DispersionKind::GravityCapillary,
            (None, None) => {
                return Err(usage(
                    "one of --dispersion, --liquid or --config is required",
                ))
            }
        };
        let mu_over_nu = match (a.mu_nu, liquid) {
            (Some(_), Some(_)) => return Err(usage("--mu-nu and --liquid are contradictory")),
            (Some(mu), None) => Some(mu),
            (None, Some(l)) => Some(l.mu_over_nu()),
            (None, None) => None,
        };
        let plane_form: Option<PlaneForm> = parse(&a.plane_form)?;
        DispersionSpec::try_from(DispersionConfig {
            kind,
            g: a.g.unwrap_or(wavetriad_core::dispersion::DEFAULT_G),
            mu_over_nu,
            alpha: a.alpha,
            basin: None,
            plane_form,
        })?
    };
    if a.lx.is_some() || a.ly.is_some() {
        Ok(base.rescale_for_basin(a.lx.unwrap_or(1.0), a.ly.unwrap_or(1.0))?)
    } else {
        Ok(base)
    }
}

fn has_inline_spec(a: &DispersionArgs) -> bool {
    a.dispersion.is_some() || a.liquid.is_some() || a.config.is_some() || a.mu_nu.is_some()
}

fn domain_for(
    spec: &DispersionSpec,
    truncation: u32,
    shape: Option<Shape>,
) -> CliResult<SpectralDomain> {
    let shape = match shape {
        Some(Shape::Square) => DomainShape::Square,
        Some(Shape::Triangular) => DomainShape::Triangular,
        None if spec.is_exact() => DomainShape::Triangular,
        None => DomainShape::Square,
    };
    Ok(SpectralDomain::new(truncation, shape)?)
}

fn search_options(a: &SearchArgs, base: SearchOptions) -> CliResult<SearchOptions> {
    let closure: Option<Closure> = parse(&a.closure)?;
    let selection: Option<Selection> = parse(&a.selection)?;
    Ok(SearchOptions {
        closure: closure.unwrap_or(base.closure),
        selection: selection.unwrap_or(base.selection),
        threads: a.threads.or(base.threads),
    })
}

fn header(command: &str, spec: Option<&DispersionSpec>, extra: Value) -> Value {
    let mut h = json!({
        "tool": "wavetriad",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
    });
    if let Some(s) = spec {
        h["spec"] = report::spec_json(s);
    }
    if let Value::Object(map) = extra {
        for (k, v) in map {
            h[k] = v;
        }
    }
    h
}

fn csv_text(f: impl FnOnce(&mut Vec<u8>) -> wavetriad_core::Result<()>) -> CliResult<String> {
    let mut buf = Vec::new();
    f(&mut buf)?;
    Ok(String::from_utf8(buf).expect("csv output is utf-8"))
}

fn emit(report: Report, out: &OutputArgs) -> CliResult<()> {
    let text = match report.body {
        Body::Json(v) => {
            let doc = if out.no_header {
                v
            } else {
                json!({ "header": report.header, "payload": v })
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
            s.push('\n');
            s
        }
        Body::Text(t) => {
            if out.no_header {
                t
            } else {
                format!("# {}\n{}", report.header, t)
            }
        }
    };
    match &out.output {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            action: "write",
            path: path.clone(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            match stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
            {
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                r => r.map_err(CliError::Output),
            }
        }
    }
}

fn limited(mut v: Vec<Triad>, limit: Option<usize>) -> Vec<Triad> {
    if let Some(n) = limit {
        v.truncate(n);
    }
    v
}

fn find_triads(a: &FindArgs) -> CliResult<Report> {
    let spec = resolve_spec(&a.dispersion)?;
    let domain = domain_for(&spec, a.domain.truncation, a.domain.shape)?;
    let opts = search_options(&a.search, SearchOptions::default())?;
    let search = TriadSearch::new(&spec, domain, opts)?;
    let (mode, triads) = match (a.exact, a.d_max, a.d_min) {
        (true, _, _) => (json!({ "exact": true }), search.exact()?),
        (_, Some(d), _) => (json!({ "d_max": d }), search.near(d)?),
        (_, _, Some(d)) => (json!({ "d_min": d }), search.max_discrepancy(d)?),
        _ => return Err(usage("one of --d-max, --d-min or --exact is required")),
    };
    let total = triads.len();
    let triads = limited(triads, a.limit);
    let head = header(
        "find-triads",
        Some(&spec),
        json!({ "domain": domain, "search": opts, "thresholds": mode, "limit": a.limit, "total": total }),
    );
    let body = match a.output.format {
        Format::Json => Body::Json(report::triads_json(&triads)),
        Format::Csv => Body::Text(csv_text(|w| report::write_triads_csv(w, &triads, true))?),
        Format::Table => Body::Text(report::triads_table(&triads)),
    };
    Ok(Report { header: head, body })
}

fn classify(a: &ClassifyArgs) -> CliResult<Report> {
    let preset: Option<CountPreset> = parse(&a.preset)?;
    let (spec, base) = match preset {
        Some(p) => {
            if has_inline_spec(&a.dispersion) {
                return Err(usage(
                    "--preset fixes the dispersion; drop the dispersion flags",
                ));
            }
            (p.spec(), p.options())
        }
        None => {
            let om = a
                .omega_max
                .ok_or_else(|| usage("--omega-max is required without --preset"))?;
            (resolve_spec(&a.dispersion)?, ClassifyOptions::new(om))
        }
    };
    let shape = a.domain.shape.or(match preset {
        Some(CountPreset::Sphere) => Some(Shape::Triangular),
        Some(_) => Some(Shape::Square),
        None => None,
    });
    let domain = domain_for(&spec, a.domain.truncation, shape)?;
    let bridge: Option<BridgePolicy> = parse(&a.bridge)?;
    let options = ClassifyOptions {
        omega_max: a.omega_max.unwrap_or(base.omega_max),
        bridge: bridge.unwrap_or(base.bridge),
        search: search_options(&a.search, base.search)?,
    };
    let partition = classify_modes(&spec, domain, &options)?;
    let head = header(
        "classify",
        Some(&spec),
        json!({ "domain": domain, "classify": options, "preset": preset.map(|p| p.name()) }),
    );
    let body = match a.output.format {
        Format::Json => Body::Json(report::partition_json(&partition)),
        Format::Csv => Body::Text(csv_text(|w| {
            report::write_partition_csv(w, &partition, true)
        })?),
        Format::Table => Body::Text(report::partition_table(&partition)),
    };
    Ok(Report { header: head, body })
}

fn bound(a: &BoundArgs) -> CliResult<Report> {
    if let (Some(m), Some(n)) = (a.m, a.n) {
        let k = WaveVector::new(m, n)?;
        let b = planetary_amplitude_bound(k.m, k.n)?;
        let head = header(
            "bound",
            None,
            json!({ "m": m, "n": n, "quantity": "planetary_amplitude_bound" }),
        );
        let body = match a.output.format {
            Format::Json => Body::Json(report::amplitude_bound_json(&b)),
            Format::Csv => Body::Text(format!(
                "m,n,exact,approx\n{},{},{},{:?}\n",
                b.m,
                b.n,
                b.ratio_text(),
                b.approx
            )),
            Format::Table => Body::Text(format!("{} ({:.6e})\n", b.ratio_text(), b.approx)),
        };
        return Ok(Report { header: head, body });
    }
    let t = a
        .truncation
        .ok_or_else(|| usage("bound needs --T, or --m and --n for the amplitude bound"))?;
    let spec = resolve_spec(&a.dispersion)?;
    let domain = domain_for(&spec, t, a.shape)?;
    let opts = search_options(&a.search, SearchOptions::default())?;
    let lb = discrepancy_lower_bound(&spec, domain, opts)?;
    let head = header(
        "bound",
        Some(&spec),
        json!({ "domain": domain, "search": opts, "quantity": "discrepancy_lower_bound" }),
    );
    let body = match a.output.format {
        Format::Json => Body::Json(report::lower_bound_json(&lb)),
        Format::Csv => {
            let mut s = String::from("method,value,approx,witness\n");
            for b in lb.a_priori.iter().chain(&lb.finite_domain_min) {
                let method = serde_json::to_value(b.method).expect("method serializes");
                s.push_str(&format!(
                    "{},{},{:?},{}\n",
                    method.as_str().unwrap_or_default(),
                    b.value,
                    b.value.to_f64(),
                    b.witness.as_ref().map(|w| w.label()).unwrap_or_default()
                ));
            }
            if lb.finite_domain_min.is_none() {
                s.push_str("finite_domain_min,undefined,,\n");
            }
            Body::Text(s)
        }
        Format::Table => Body::Text(report::lower_bound_table(&lb)),
    };
    Ok(Report { header: head, body })
}

fn plan(a: &PlanArgs) -> CliResult<Report> {
    let spec = resolve_spec(&a.dispersion)?;
    let domain = domain_for(&spec, a.domain.truncation, a.domain.shape)?;
    let opts = search_options(&a.search, SearchOptions::default())?;
    let mut p = plan_experiment(&spec, domain, a.d_max, a.d_min, a.epsilon, opts)?;
    let totals = json!({ "type_a": p.type_a.len(), "type_b": p.type_b.len() });
    if a.limit.is_some() {
        p.type_a = limited(std::mem::take(&mut p.type_a), a.limit);
        p.type_b = limited(std::mem::take(&mut p.type_b), a.limit);
        let kept: std::collections::BTreeSet<WaveVector> = p
            .type_a
            .iter()
            .chain(&p.type_b)
            .flat_map(|t| t.members())
            .collect();
        p.amplitudes.retain(|k, _| kept.contains(k));
    }
    let head = header(
        "plan",
        Some(&spec),
        json!({ "domain": domain, "search": opts, "d_max": a.d_max, "d_min": a.d_min, "epsilon": a.epsilon, "limit": a.limit, "total": totals }),
    );
    let body = match a.output.format {
        Format::Json => Body::Json(report::plan_json(&p)),
        Format::Table => Body::Text(report::plan_table(&p)),
        Format::Csv => {
            let a_rows = csv_text(|w| report::write_triads_csv(w, &p.type_a, false))?;
            let b_rows = csv_text(|w| report::write_triads_csv(w, &p.type_b, false))?;
            let mut s = format!("type,{}\n", report::TRIAD_COLUMNS.join(","));
            for line in a_rows.lines() {
                s.push_str(&format!("A,{line}\n"));
            }
            for line in b_rows.lines() {
                s.push_str(&format!("B,{line}\n"));
            }
            Body::Text(s)
        }
    };
    Ok(Report { header: head, body })
}

fn sweep(a: &SweepArgs) -> CliResult<Report> {
    let spec = resolve_spec(&a.dispersion)?;
    let domain = domain_for(&spec, a.domain.truncation, a.domain.shape)?;
    let bridge: Option<BridgePolicy> = parse(&a.bridge)?;
    let options = ClassifyOptions {
        omega_max: a.omega_max,
        bridge: bridge.unwrap_or_default(),
        search: search_options(&a.search, SearchOptions::default())?,
    };
    let r = geometry_sweep(&spec, domain, &a.lx_values, &a.ly_values, a.d_max, &options)?;
    let head = header(
        "sweep",
        Some(&spec),
        json!({ "domain": domain, "classify": options, "d_max": a.d_max, "lx_values": a.lx_values, "ly_values": a.ly_values }),
    );
    let body = match a.output.format {
        Format::Json => Body::Json(report::sweep_json(&r)),
        Format::Table => Body::Text(report::sweep_table(&r)),
        Format::Csv => {
            let mut s = String::from("lx,ly,triad_count,active,passive,neutral,resonance_free\n");
            for c in &r.cells {
                s.push_str(&format!(
                    "{:?},{:?},{},{},{},{},{}\n",
                    c.lx,
                    c.ly,
                    c.triads.len(),
                    c.counts.active,
                    c.counts.passive,
                    c.counts.neutral,
                    c.resonance_free
                ));
            }
            Body::Text(s)
        }
    };
    Ok(Report { header: head, body })
}

fn eval(a: &EvalArgs) -> CliResult<Report> {
    let spec = resolve_spec(&a.dispersion)?;
    let k = WaveVector::new(a.m, a.n)?;
    let f = spec.eval_frequency(k)?;
    let head = header("eval", Some(&spec), json!({ "m": a.m, "n": a.n }));
    let body = match a.output.format {
        Format::Json => Body::Json(report::frequency_json(k, &f)),
        Format::Csv => Body::Text(format!(
            "m,n,omega,hz\n{},{},{},{:?}\n",
            k.m, k.n, f.omega, f.hz
        )),
        Format::Table => Body::Text(format!("{}\n", f.omega)),
    };
    Ok(Report { header: head, body })
}

pub fn run(cli: Cli) -> CliResult<()> {
    let (report, out) = match &cli.command {
        Command::FindTriads(a) => (find_triads(a)?, &a.output),
        Command::Classify(a) => (classify(a)?, &a.output),
        Command::Bound(a) => (bound(a)?, &a.output),
        Command::Plan(a) => (plan(a)?, &a.output),
        Command::Sweep(a) => (sweep(a)?, &a.output),
        Command::Eval(a) => (eval(a)?, &a.output),
    };
    emit(report, out)
}

use wavetriad_core::*;

fn members(t: &Triad) -> [(u32, u32); 3] {
    t.members().map(|k| (k.m, k.n))
}

#[test]
fn water_plan_has_both_triad_types() {
    let spec = DispersionSpec::liquid(Liquid::Water);
    let d = SpectralDomain::square(30);
    let plan = plan_experiment(&spec, d, 1e-5, 0.1, 0.1, SearchOptions::default()).unwrap();
    assert!(plan
        .type_a
        .iter()
        .any(|t| members(t) == [(1, 2), (9, 1), (10, 3)]));
    assert!(plan
        .type_b
        .iter()
        .any(|t| members(t) == [(11, 15), (14, 15), (25, 30)]));
    assert!(plan.type_a.iter().all(|t| t.d_ratio <= 1e-5));
    assert!(plan.type_b.iter().all(|t| t.d_ratio >= 0.1));
    for t in plan.type_a.iter().chain(&plan.type_b) {
        for k in t.members() {
            let a = plan.amplitudes[&k];
            assert_eq!(a, steepness_amplitude(k, 0.1).unwrap());
        }
    }
    assert_eq!(
        plan.type_a,
        find_near_triads(&spec, d, 1e-5, SearchOptions::default()).unwrap()
    );
    assert_eq!(
        plan.type_b,
        find_max_discrepancy_triads(&spec, d, 0.1, SearchOptions::default()).unwrap()
    );
    assert!(plan.notes.iter().any(|n| n.contains("cm")));
}

#[test]
fn glycerine_plan_frequencies() {
    let spec = DispersionSpec::liquid(Liquid::Glycerine);
    let plan = plan_experiment(
        &spec,
        SpectralDomain::square(30),
        1e-5,
        0.1,
        0.1,
        SearchOptions::default(),
    )
    .unwrap();
    let t = plan
        .type_a
        .iter()
        .find(|t| members(t) == [(1, 26), (16, 4), (17, 30)])
        .unwrap();
    for (got, want) in t.hz().iter().zip([147.0295, 75.8317, 222.8612]) {
        assert!((got - want).abs() < 1e-3);
    }
}

#[test]
fn rescaled_plan_uses_basin_wavenumber() {
    let spec = DispersionSpec::liquid(Liquid::Benzaldehyde)
        .rescale_for_basin(2.0, 2.0)
        .unwrap();
    let plan = plan_experiment(
        &spec,
        SpectralDomain::square(30),
        1e-5,
        0.5,
        0.1,
        SearchOptions::default(),
    )
    .unwrap();
    let k = wv(1, 14);
    assert!(plan.amplitudes.contains_key(&k));
    assert!((plan.amplitudes[&k] - 0.1 * 2.0 / k.norm()).abs() < 1e-15);
}

#[test]
fn sweep_over_two_squares() {
    let spec = DispersionSpec::liquid(Liquid::Benzaldehyde);
    let d = SpectralDomain::square(30);
    let opts = ClassifyOptions::new(1e-3);
    let report = geometry_sweep(&spec, d, &[1.0, 2.0], &[1.0, 2.0], 1e-5, &opts).unwrap();
    assert_eq!(report.cells.len(), 4);
    let cell = |lx: f64, ly: f64| {
        report
            .cells
            .iter()
            .find(|c| c.lx == lx && c.ly == ly)
            .unwrap()
    };
    let target = [(1, 6), (4, 5), (5, 11)];
    assert!(cell(1.0, 1.0).triads.iter().any(|t| members(t) == target));
    assert!(!cell(2.0, 2.0).triads.iter().any(|t| members(t) == target));
    for c in &report.cells {
        assert_eq!(c.resonance_free, c.triads.is_empty());
        assert_eq!(c.counts.total(), d.len());
    }
    let again = geometry_sweep(&spec, d, &[1.0, 2.0], &[1.0, 2.0], 1e-5, &opts).unwrap();
    assert_eq!(report, again);
}

#[test]
fn singleton_sweep_matches_direct_run() {
    let spec = DispersionSpec::liquid(Liquid::Benzol);
    let d = SpectralDomain::square(20);
    let opts = ClassifyOptions::new(0.05);
    let report = geometry_sweep(&spec, d, &[1.0], &[1.0], 1e-4, &opts).unwrap();
    let cell = &report.cells[0];
    assert_eq!(
        cell.triads,
        find_near_triads(&spec, d, 1e-4, SearchOptions::default()).unwrap()
    );
    assert_eq!(cell.counts, class_counts(&spec, d, &opts).unwrap());
}

#[test]
fn square_and_quarter_rectangle_differ() {
    let spec = DispersionSpec::bve_plane(PlaneForm::Barotropic);
    let opts = CountPreset::Rectangle.options();
    let report = geometry_sweep(
        &spec,
        SpectralDomain::square(10),
        &[1.0],
        &[1.0, 4.0],
        1e-5,
        &opts,
    )
    .unwrap();
    let (sq, rect) = (&report.cells[0], &report.cells[1]);
    assert_ne!(sq.counts.neutral, rect.counts.neutral);
    assert!(rect.counts.neutral > sq.counts.neutral);
}

#[test]
fn sweep_rejects_bad_grids() {
    let spec = DispersionSpec::liquid(Liquid::Water);
    let d = SpectralDomain::square(4);
    let opts = ClassifyOptions::new(0.1);
    assert!(geometry_sweep(&spec, d, &[], &[1.0], 1e-5, &opts).is_err());
    assert!(geometry_sweep(&spec, d, &[1.0], &[-1.0], 1e-5, &opts).is_err());
    assert!(geometry_sweep(
        &DispersionSpec::rossby_sphere(),
        SpectralDomain::triangular(4),
        &[1.0],
        &[1.0],
        1e-5,
        &opts
    )
    .is_err());
}

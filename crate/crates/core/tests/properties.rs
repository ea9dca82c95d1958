use proptest::prelude::*;
use wavetriad_core::*;

fn float_spec() -> impl Strategy<Value = DispersionSpec> {
    prop_oneof![
        (1.0f64..100.0).prop_map(|mu| DispersionSpec::gravity_capillary(mu).unwrap()),
        Just(DispersionSpec::capillary()),
        (0.1f64..5.0).prop_map(|a| DispersionSpec::gravity_tanh(a).unwrap()),
        prop_oneof![
            Just(PlaneForm::Printed),
            Just(PlaneForm::Deformation),
            Just(PlaneForm::Barotropic)
        ]
        .prop_map(DispersionSpec::bve_plane),
    ]
}

fn closure() -> impl Strategy<Value = Closure> {
    prop_oneof![Just(Closure::Sum), Just(Closure::Standing)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn unit_basin_is_identity(mu in 1.0f64..200.0, m in 1u32..200, n in 1u32..200) {
        let spec = DispersionSpec::gravity_capillary(mu).unwrap();
        let same = spec.rescale_for_basin(1.0, 1.0).unwrap();
        prop_assert_eq!(spec.omega(wv(m, n)).unwrap(), same.omega(wv(m, n)).unwrap());
    }

    #[test]
    fn gravity_capillary_increases_with_wavenumber(mu in 1.0f64..200.0, a in (1u32..60, 1u32..60), b in (1u32..60, 1u32..60)) {
        let spec = DispersionSpec::gravity_capillary(mu).unwrap();
        let (ka, kb) = (wv(a.0, a.1), wv(b.0, b.1));
        let (wa, wb) = (spec.omega(ka).unwrap().to_f64(), spec.omega(kb).unwrap().to_f64());
        match ka.norm_sqr().cmp(&kb.norm_sqr()) {
            std::cmp::Ordering::Less => prop_assert!(wa < wb),
            std::cmp::Ordering::Greater => prop_assert!(wa > wb),
            std::cmp::Ordering::Equal => prop_assert_eq!(wa, wb),
        }
    }

    #[test]
    fn hz_round_trip(spec in float_spec(), m in 1u32..100, n in 1u32..100) {
        let f = spec.eval_frequency(wv(m, n)).unwrap();
        let w = f.omega.to_f64();
        prop_assert!((f.hz * std::f64::consts::TAU - w).abs() <= 4.0 * f64::EPSILON * w.abs());
    }

    #[test]
    fn rossby_is_exact_and_repeatable(m in 1u32..500, extra in 0u32..500) {
        let spec = DispersionSpec::rossby_sphere();
        let k = wv(m, m + extra);
        let a = spec.omega(k).unwrap();
        prop_assert!(a.is_exact());
        prop_assert_eq!(a.clone(), spec.omega(k).unwrap());
        let expect = Omega::exact(-2 * m as i64, (k.n as i64) * (k.n as i64 + 1));
        prop_assert_eq!(a, expect);
    }

    #[test]
    fn swapping_first_two_members_keeps_discrepancy(spec in float_spec(), a in (1u32..40, 1u32..40), b in (1u32..40, 1u32..40)) {
        let (k1, k2) = (wv(a.0, a.1), wv(b.0, b.1));
        let k3 = wv(a.0 + b.0, a.1 + b.1);
        let x = discrepancy(&spec, [k1, k2, k3], SignPattern::SUM).unwrap();
        let y = discrepancy(&spec, [k2, k1, k3], SignPattern::SUM).unwrap();
        prop_assert_eq!(x, y);
    }

    #[test]
    fn steepness_inverts(eps in 0.001f64..0.2, m in 1u32..500, n in 1u32..500) {
        let k = wv(m, n);
        let a = steepness_amplitude(k, eps).unwrap();
        prop_assert!((a * k.norm() - eps).abs() <= 2.0 * f64::EPSILON * eps);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn returned_triads_close_and_revalidate(spec in float_spec(), t in 2u32..12, cl in closure(), d_max in 1e-4f64..1.0) {
        let opts = SearchOptions { closure: cl, ..Default::default() };
        let triads = find_near_triads(&spec, SpectralDomain::square(t), d_max, opts).unwrap();
        for tr in &triads {
            prop_assert!(resonance::closes(&spec, cl, tr.k1, tr.k2, tr.k3));
            prop_assert!(tr.k1 <= tr.k2);
            prop_assert!(tr.d_ratio <= d_max);
            let again = discrepancy(&spec, tr.members(), tr.signs).unwrap();
            prop_assert_eq!(&again, &tr.discrepancy);
            for (i, k) in tr.members().into_iter().enumerate() {
                prop_assert_eq!(&spec.omega(k).unwrap(), &tr.omegas[i].omega);
            }
            let hz = tr.hz();
            let min_hz = hz.iter().map(|x| x.abs()).fold(f64::INFINITY, f64::min);
            let hz_d = (hz[0] * tr.signs.0[0] as f64 + hz[1] * tr.signs.0[1] as f64 + hz[2] * tr.signs.0[2] as f64).abs() / min_hz;
            prop_assert!((hz_d - tr.d_ratio).abs() <= 1e-9 * (1.0 + tr.d_ratio));
        }
        prop_assert!(triads.windows(2).all(|w| w[0].cmp_by_ratio(&w[1]).is_lt()));
    }

    #[test]
    fn domains_are_monotone(spec in float_spec(), t in 2u32..10, grow in 1u32..5, d_max in 1e-3f64..1.0) {
        let small = find_near_triads(&spec, SpectralDomain::square(t), d_max, SearchOptions::default()).unwrap();
        let large = find_near_triads(&spec, SpectralDomain::square(t + grow), d_max, SearchOptions::default()).unwrap();
        for tr in &small {
            prop_assert!(large.iter().any(|x| x.members() == tr.members()));
        }
    }

    #[test]
    fn output_independent_of_workers(spec in float_spec(), t in 2u32..14, cl in closure()) {
        let base = SearchOptions { closure: cl, ..Default::default() };
        let one = find_near_triads(&spec, SpectralDomain::square(t), 0.5, base.with_threads(1)).unwrap();
        for threads in [2, 3] {
            let many = find_near_triads(&spec, SpectralDomain::square(t), 0.5, base.with_threads(threads)).unwrap();
            prop_assert_eq!(&one, &many);
        }
    }

    #[test]
    fn no_triad_undercuts_the_finite_minimum(spec in float_spec(), t in 2u32..12, cl in closure()) {
        let d = SpectralDomain::square(t);
        let opts = SearchOptions { closure: cl, ..Default::default() };
        let lb = discrepancy_lower_bound(&spec, d, opts).unwrap();
        let all = find_near_triads(&spec, d, f64::MAX, opts).unwrap();
        prop_assert_eq!(all.len(), lb.triad_count);
        match lb.finite_domain_min {
            None => prop_assert!(all.iter().all(|t| t.discrepancy.is_zero())),
            Some(b) => {
                for tr in all.iter().filter(|t| !t.discrepancy.is_zero()) {
                    prop_assert!(tr.discrepancy.abs().total_cmp(&b.value).is_ge());
                }
                prop_assert_eq!(b.witness.unwrap().discrepancy.abs(), b.value);
            }
        }
    }

    #[test]
    fn sphere_bounds_are_ordered(t in 3u32..16) {
        let spec = DispersionSpec::rossby_sphere();
        let d = SpectralDomain::triangular(t);
        let lb = discrepancy_lower_bound(&spec, d, SearchOptions::default()).unwrap();
        let a = lb.a_priori.unwrap().value;
        if let Some(f) = lb.finite_domain_min {
            prop_assert!(a.total_cmp(&f.value).is_le());
            let all = find_near_triads(&spec, d, f64::MAX, SearchOptions::default()).unwrap();
            for tr in all.iter().filter(|t| !t.discrepancy.is_zero()) {
                prop_assert!(tr.discrepancy.abs().total_cmp(&f.value).is_ge());
            }
        }
    }
}

#[test]
fn amplitude_bound_positive_with_minimum_at_seventeen() {
    // For m = 1 the bound falls until n = 17; beyond that n! 4^n outgrows (n+1)^n.
    let values: Vec<_> = (3..=20)
        .map(|n| planetary_amplitude_bound(1, n).unwrap())
        .collect();
    assert!(values.iter().all(|b| b.approx > 0.0));
    for w in values.windows(2) {
        if w[1].n <= 17 {
            assert!(w[1].exact < w[0].exact, "n = {}", w[1].n);
        } else {
            assert!(w[1].exact > w[0].exact, "n = {}", w[1].n);
        }
    }
    for m in 1..=8u32 {
        for n in m + 1..=30 {
            assert!(planetary_amplitude_bound(m, n).unwrap().approx > 0.0);
        }
    }
}

#[test]
fn amplitude_bound_float_rendering() {
    use num_traits::ToPrimitive;
    let b = planetary_amplitude_bound(1, 10).unwrap();
    assert_eq!(b.approx, b.exact.to_f64().unwrap());
    // 6·10!·2^20 / (50 · 11^14 · 9 · 46), evaluated independently
    let num: u128 = 6 * 3_628_800u128 * (1u128 << 20);
    let den: u128 = 50 * 11u128.pow(14) * 9 * 46;
    let approx = num as f64 / den as f64;
    assert!((b.approx - approx).abs() <= 2.0 * f64::EPSILON * approx);
}

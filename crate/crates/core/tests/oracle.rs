//! Independent brute-force oracles for the exact spherical search.

use std::collections::BTreeSet;

use wavetriad_core::*;

type Key = ((u32, u32), (u32, u32), (u32, u32));

/// `n(n+1)`, the denominator of `-2m/(n(n+1))` before reduction.
fn den(n: u32) -> i128 {
    n as i128 * (n as i128 + 1)
}

/// Numerator of `ω1 + ω2 − ω3` over the common denominator `d1 d2 d3`.
fn omega_num(a: (u32, u32), b: (u32, u32), c: (u32, u32)) -> i128 {
    let (d1, d2, d3) = (den(a.1), den(b.1), den(c.1));
    -2 * (a.0 as i128 * d2 * d3 + b.0 as i128 * d1 * d3 - c.0 as i128 * d1 * d2)
}

fn triangle_rule(n1: u32, n2: u32, n3: u32) -> bool {
    let (a, b, c) = (n1 as i64, n2 as i64, n3 as i64);
    a != b && b != c && a != c && (a - b).abs() < c && c < a + b && (a + b + c) % 2 == 1
}

fn naive_exact(t: u32, filtered: bool) -> BTreeSet<Key> {
    let modes: Vec<(u32, u32)> = (1..=t).flat_map(|n| (1..=n).map(move |m| (m, n))).collect();
    let mut out = BTreeSet::new();
    for &a in &modes {
        for &b in &modes {
            for &c in &modes {
                if a > b || a.0 + b.0 != c.0 {
                    continue;
                }
                if filtered && !triangle_rule(a.1, b.1, c.1) {
                    continue;
                }
                if omega_num(a, b, c) == 0 {
                    out.insert((a, b, c));
                }
            }
        }
    }
    out
}

fn keys(triads: &[Triad]) -> BTreeSet<Key> {
    triads
        .iter()
        .map(|t| ((t.k1.m, t.k1.n), (t.k2.m, t.k2.n), (t.k3.m, t.k3.n)))
        .collect()
}

#[test]
fn exact_search_matches_triple_loop() {
    let spec = DispersionSpec::rossby_sphere();
    let open = SearchOptions {
        selection: Selection::None,
        ..Default::default()
    };
    for t in 1..=20 {
        let d = SpectralDomain::triangular(t);
        let filtered = find_exact_triads(&spec, d, SearchOptions::default()).unwrap();
        assert_eq!(keys(&filtered), naive_exact(t, true), "T = {t}");
        let all = find_exact_triads(&spec, d, open).unwrap();
        assert_eq!(keys(&all), naive_exact(t, false), "T = {t}, no rule");
    }
}

#[test]
fn near_search_at_tiny_threshold_agrees_with_exact_search() {
    let spec = DispersionSpec::rossby_sphere();
    for t in [8, 14, 20] {
        let d = SpectralDomain::triangular(t);
        let exact = find_exact_triads(&spec, d, SearchOptions::default()).unwrap();
        let near = find_near_triads(&spec, d, f64::MIN_POSITIVE, SearchOptions::default()).unwrap();
        let zeros: Vec<Triad> = near
            .into_iter()
            .filter(|t| t.discrepancy.is_zero())
            .collect();
        assert_eq!(keys(&exact), keys(&zeros));
    }
}

#[test]
fn known_exact_triads() {
    let spec = DispersionSpec::rossby_sphere();
    let t14 = keys(
        &find_exact_triads(
            &spec,
            SpectralDomain::triangular(14),
            SearchOptions::default(),
        )
        .unwrap(),
    );
    assert!(t14.contains(&((4, 12), (5, 14), (9, 13))));
    assert!(t14.contains(&((2, 6), (3, 8), (5, 7))));
    let t10 = keys(
        &find_exact_triads(
            &spec,
            SpectralDomain::triangular(10),
            SearchOptions::default(),
        )
        .unwrap(),
    );
    assert_eq!(t10, BTreeSet::from([((2, 6), (3, 8), (5, 7))]));
    assert!(omega_num((4, 12), (5, 14), (9, 13)) == 0);
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Smallest nonzero `|Ω|` as a reduced fraction, by enumerating every triple.
fn naive_min(t: u32) -> (i128, i128) {
    let modes: Vec<(u32, u32)> = (1..=t).flat_map(|n| (1..=n).map(move |m| (m, n))).collect();
    let mut best: Option<(i128, i128)> = None;
    for &a in &modes {
        for &b in &modes {
            for &c in &modes {
                if a > b || a.0 + b.0 != c.0 || !triangle_rule(a.1, b.1, c.1) {
                    continue;
                }
                let num = omega_num(a, b, c).abs();
                if num == 0 {
                    continue;
                }
                let dd = den(a.1) * den(b.1) * den(c.1);
                let g = gcd(num, dd);
                let f = (num / g, dd / g);
                if best.is_none_or(|(p, q)| f.0 * q < p * f.1) {
                    best = Some(f);
                }
            }
        }
    }
    best.expect("some nonzero triad")
}

#[test]
fn finite_domain_minimum_matches_brute_force() {
    let spec = DispersionSpec::rossby_sphere();
    for t in [6, 10, 14] {
        let d = SpectralDomain::triangular(t);
        let lb = discrepancy_lower_bound(&spec, d, SearchOptions::default()).unwrap();
        let fdm = lb.finite_domain_min.unwrap();
        let (p, q) = naive_min(t);
        assert_eq!(fdm.value.to_text(), format!("{p}/{q}"), "T = {t}");
        let w = fdm.witness.unwrap();
        assert_eq!(w.discrepancy.abs(), fdm.value);
        let a = lb.a_priori.unwrap();
        assert!(a.value.total_cmp(&fdm.value).is_le());
    }
}

#[test]
fn lower_bound_is_undefined_without_triads() {
    let spec = DispersionSpec::rossby_sphere();
    let lb = discrepancy_lower_bound(
        &spec,
        SpectralDomain::triangular(2),
        SearchOptions::default(),
    )
    .unwrap();
    assert_eq!(lb.triad_count, 0);
    assert!(lb.finite_domain_min.is_none());
    assert!(lb.a_priori.is_some());
}

/// Number of triads `k1 <= k2` with `k1 + k2` in the square `[1, T]²`.
fn closed_count(t: u64) -> u64 {
    let per_axis = t * (t - 1) / 2;
    let diag = (t / 2) * (t / 2);
    (per_axis * per_axis + diag) / 2
}

#[test]
fn huge_threshold_returns_every_closed_triad() {
    let spec = DispersionSpec::liquid(Liquid::Benzol);
    for t in 1..=14u32 {
        let d = SpectralDomain::square(t);
        let all = find_near_triads(&spec, d, 1e6, SearchOptions::default()).unwrap();
        assert_eq!(all.len() as u64, closed_count(t as u64), "T = {t}");
        let all_b =
            find_max_discrepancy_triads(&spec, d, f64::MIN_POSITIVE, SearchOptions::default())
                .unwrap();
        assert_eq!(all_b.len(), all.len());
    }
}

/// Any wave closing a triad with `a` and `b` in some role assignment, by
/// scanning the whole domain.
fn brute_completions(
    spec: &DispersionSpec,
    d: SpectralDomain,
    a: WaveVector,
    b: WaveVector,
) -> Vec<WaveVector> {
    d.modes()
        .filter(|&w| w != a && w != b)
        .filter(|&w| {
            let mut s = [a, b, w];
            s.sort();
            triangle_rule(s[0].n, s[1].n, s[2].n)
                && (wavetriad_core::resonance::closes(spec, Closure::Sum, s[0], s[1], s[2])
                    || wavetriad_core::resonance::closes(spec, Closure::Sum, s[0], s[2], s[1])
                    || wavetriad_core::resonance::closes(spec, Closure::Sum, s[1], s[2], s[0]))
        })
        .collect()
}

#[test]
fn bridges_are_minimal() {
    let spec = DispersionSpec::rossby_sphere();
    let d = SpectralDomain::triangular(14);
    let search = TriadSearch::new(&spec, d, SearchOptions::default()).unwrap();
    let lb = discrepancy_lower_bound(&spec, d, SearchOptions::default())
        .unwrap()
        .finite_domain_min
        .unwrap();
    for seed in search.resonant().unwrap() {
        for pair in seed.pairs() {
            let step =
                minimal_near_resonant(&spec, d, &seed, pair, SearchOptions::default()).unwrap();
            let brute: Vec<_> = brute_completions(&spec, d, pair.0, pair.1)
                .into_iter()
                .filter(|w| !seed.contains(*w))
                .map(|w| {
                    (
                        search.triad(pair.0, pair.1, w).unwrap().discrepancy.abs(),
                        w,
                    )
                })
                .filter(|(om, _)| !om.is_zero())
                .collect();
            match step {
                None => assert!(brute.is_empty()),
                Some(step) => {
                    let best = brute
                        .iter()
                        .min_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)))
                        .unwrap();
                    assert_eq!(step.discrepancy.abs(), best.0);
                    assert_eq!(step.bridge, best.1);
                    assert!(step.discrepancy.abs().total_cmp(&lb.value).is_ge());
                }
            }
        }
    }
}

#[test]
fn tiny_domain_has_no_bridge() {
    let spec = DispersionSpec::rossby_sphere();
    let d = SpectralDomain::triangular(8);
    let seed = TriadSearch::new(&spec, d, SearchOptions::default())
        .unwrap()
        .triad(wv(2, 6), wv(3, 8), wv(5, 7))
        .unwrap();
    assert!(seed.is_resonant());
    let pairs = seed.pairs();
    let none = pairs
        .iter()
        .filter(|p| {
            minimal_near_resonant(&spec, d, &seed, **p, SearchOptions::default())
                .unwrap()
                .is_none()
        })
        .count();
    let brute_empty = pairs
        .iter()
        .filter(|p| {
            brute_completions(&spec, d, p.0, p.1)
                .into_iter()
                .all(|w| seed.contains(w))
        })
        .count();
    assert_eq!(none, brute_empty);
}

#[test]
fn cascade_path_is_stable_and_locally_minimal() {
    let spec = DispersionSpec::rossby_sphere();
    let d = SpectralDomain::triangular(14);
    let search = TriadSearch::new(&spec, d, SearchOptions::default()).unwrap();
    let seed = search.triad(wv(4, 12), wv(5, 14), wv(9, 13)).unwrap();
    let path = cascade_path(&spec, d, &seed, 3, SearchOptions::default()).unwrap();
    let again = cascade_path(&spec, d, &seed, 3, SearchOptions::default()).unwrap();
    assert_eq!(path, again);
    assert!(!path.is_empty() && path.len() <= 3);
    for step in &path {
        for pair in step.source.pairs() {
            for w in brute_completions(&spec, d, pair.0, pair.1) {
                if step.source.contains(w) {
                    continue;
                }
                let om = search.triad(pair.0, pair.1, w).unwrap().discrepancy.abs();
                if !om.is_zero() {
                    assert!(om.total_cmp(&step.discrepancy.abs()).is_ge());
                }
            }
        }
        assert!(step.formed.contains(step.bridge));
        assert!(step.formed.contains(step.donor.0) && step.formed.contains(step.donor.1));
    }
    for w in path.windows(2) {
        assert_eq!(w[0].formed, w[1].source);
    }
}

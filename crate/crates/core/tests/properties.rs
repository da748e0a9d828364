use proptest::prelude::*;

use weierstrass_ext::extendability::{
    fibra_pairs, k3_enumerate, nonextweier2_verdict, prop_numerical_check, Conclusion, GonalityStatus, K3Mode,
};
use weierstrass_ext::report::Report;
use weierstrass_ext::scroll::{scroll_h, sym_power, SplitBundle};
use weierstrass_ext::{
    canonical_class, compute_invariants, curve_h, h1_vanishes, riemann_roch_chi, surface_h, CohomologyAnswer,
    DivisorClass, GenericityPolicy, SurfaceData,
};

fn surface() -> impl Strategy<Value = SurfaceData> {
    (0u32..6, 1u32..6).prop_map(|(g, n)| SurfaceData::new(g, n))
}

fn policy() -> impl Strategy<Value = GenericityPolicy> {
    prop_oneof![
        Just(GenericityPolicy::RequireExact),
        Just(GenericityPolicy::AssumeGeneric)
    ]
}

fn generic_value(x: CohomologyAnswer) -> i64 {
    x.value().expect("generic policy gives values") as i64
}

proptest! {
    #[test]
    fn holomorphic_euler_characteristic(s in surface()) {
        let inv = compute_invariants(s).unwrap();
        prop_assert_eq!(inv.chi_o, 1 - inv.q + inv.p_g);
        prop_assert_eq!(inv.chi_o, s.degree());
    }

    #[test]
    fn curve_riemann_roch(g in 0u32..12, d in -40i64..40, policy in policy()) {
        let (h0, h1) = curve_h(g, d, policy);
        let chi = d + 1 - i64::from(g);
        let (lo0, hi0) = h0.bounds();
        let (lo1, hi1) = h1.bounds();
        prop_assert_eq!(lo0 as i64 - lo1 as i64, chi);
        prop_assert_eq!(hi0 as i64 - hi1 as i64, chi);
        if g == 0 {
            prop_assert!(h0.is_exact() && h1.is_exact());
        }
    }

    #[test]
    fn surface_euler_characteristic(s in surface(), alpha in -8i64..8, beta in -30i64..40) {
        let d = DivisorClass::new(alpha, beta);
        let policy = GenericityPolicy::AssumeGeneric;
        let h: Vec<i64> = (0..3).map(|q| generic_value(surface_h(d, s, q, policy).unwrap())).collect();
        prop_assert_eq!(h[0] - h[1] + h[2], riemann_roch_chi(d, s).unwrap());
    }

    #[test]
    fn surface_serre_duality(s in surface(), alpha in -8i64..8, beta in -30i64..40, policy in policy()) {
        let d = DivisorClass::new(alpha, beta);
        let k = canonical_class(s).unwrap();
        for q in 0..3u8 {
            prop_assert_eq!(surface_h(d, s, q, policy).unwrap(), surface_h(k - d, s, 2 - q, policy).unwrap());
        }
    }

    #[test]
    fn vanishing_criterion_agrees(s in surface(), alpha in 1i64..8, beta in -10i64..60) {
        let d = DivisorClass::new(alpha, beta);
        if h1_vanishes(d, s) {
            prop_assert_eq!(surface_h(d, s, 1, GenericityPolicy::AssumeGeneric).unwrap(), CohomologyAnswer::ZERO);
            if s.g == 0 {
                prop_assert_eq!(surface_h(d, s, 1, GenericityPolicy::RequireExact).unwrap(), CohomologyAnswer::ZERO);
            }
        }
    }

    #[test]
    fn sym_power_rank_and_degree(degrees in prop::collection::vec(-10i64..10, 3), u in 0u32..12) {
        let e = SplitBundle::new(degrees, 0);
        let sym = sym_power(&e, u);
        prop_assert_eq!(sym.rank() as u32, (u + 1) * (u + 2) / 2);
        // Each summand of E occurs u·C(u + 1, 2)/3 times across all multisets.
        prop_assert_eq!(sym.det_degree() * 3, e.det_degree() * i64::from(u) * sym.rank() as i64);
    }

    #[test]
    fn scroll_serre_duality(s in surface(), u in -8i64..8, m in -40i64..40, q in 0u8..4, policy in policy()) {
        let e = SplitBundle::weierstrass(s);
        let shift = 2 * s.genus() - 2 + e.det_degree();
        prop_assert_eq!(
            scroll_h(u, m, &e, q, policy).unwrap(),
            scroll_h(-3 - u, shift - m, &e, 3 - q, policy).unwrap()
        );
    }

    #[test]
    fn numerical_check_is_monotone_in_b(
        s in surface(),
        a in 3i64..16,
        b_offset in 1i64..60,
        alpha in 2i64..5,
        beta in 0i64..20,
        gonality in prop_oneof![
            Just(GonalityStatus::NonTrigonal),
            Just(GonalityStatus::NonHyperellipticTrigonal),
            Just(GonalityStatus::Trigonal)
        ],
    ) {
        let b = a * s.degree() + b_offset;
        let d0 = DivisorClass::new(alpha, beta);
        let fires = |b| prop_numerical_check(s, a, b, d0, gonality, true).unwrap().conclusion == Conclusion::NotExtendable;
        if fires(b) {
            prop_assert!(fires(b + 1));
        }
    }

    #[test]
    fn verdict_reports_round_trip(s in surface(), a in 3i64..14, b_offset in 1i64..30) {
        let b = a * s.degree() + b_offset;
        let mut r = Report::new("verdict").input("g", s.g).input("n", s.n).input("a", a).input("b", b);
        r.verdicts.push(nonextweier2_verdict(s, a, b, true).unwrap());
        let back: Report = serde_json::from_str(&r.to_json_string()).unwrap();
        prop_assert_eq!(back, r);
    }
}

#[test]
fn k3_lists_are_nested_and_in_the_genus_window() {
    let normal = k3_enumerate(K3Mode::Normal);
    let lci = k3_enumerate(K3Mode::Lci);
    assert!(lci.iter().all(|t| normal.contains(t)));
    assert!(k3_enumerate(K3Mode::LciTerminal).iter().all(|t| lci.contains(t)));
    assert!(normal
        .iter()
        .all(|t| (13..=37).contains(&t.genus) && t.genus == t.a * (t.b - t.a) + 1));
}

#[test]
fn factorial_pairs_are_a_subset() {
    assert!(fibra_pairs(true).is_subset(&fibra_pairs(false)));
}

use proptest::prelude::*;
use strathom::formats::{self, parse_diagram, table, Format};
use strathom::{fuzz, Error, BUNDLED_TABLE};
use strathom_core::diagram::{gauss_to_pd, trefoil};
use strathom_core::{certificate, CertificateConfig, GroupPresentation, Poset, Word};

fn table_knots() -> Vec<table::TableEntry> {
    table::parse(BUNDLED_TABLE).unwrap()
}

#[test]
fn three_notations_agree_on_trefoil() {
    let pd = parse_diagram(Format::Pd, "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
    let g = parse_diagram(Format::Gauss, "O1-U2-O3-U1-O2-U3-").unwrap();
    let dt = parse_diagram(Format::Dt, "4 6 2").unwrap();
    assert_eq!(pd, trefoil());
    assert_eq!(g.crossing_count(), 3);
    assert_eq!(g.writhe().abs(), 3);
    assert_eq!(dt.writhe().abs(), 3);
    let cfg = CertificateConfig { quotient_depth: 4, base_arc: 1 };
    let c = certificate(&pd, &cfg).unwrap();
    assert_eq!(certificate(&dt, &cfg).unwrap(), c);
    assert_eq!(certificate(&g, &cfg).unwrap(), c);
}

#[test]
fn format_names() {
    for f in [Format::Pd, Format::Gauss, Format::Dt] {
        assert_eq!(f.to_string().parse::<Format>().unwrap(), f);
    }
    assert!("knot".parse::<Format>().is_err());
}

#[test]
fn diagnostics_carry_line_numbers() {
    let e = formats::pd::parse("X(1,4,2,5)\nX(3,6,4,1)\nX(5,2,6;3)").unwrap_err();
    assert!(matches!(e, Error::Syntax { line: 3, .. }), "{e}");
    assert!(e.to_string().starts_with("line 3:"));
    let e = formats::pd::parse("X(1,1,1,1)").unwrap_err();
    assert!(matches!(e, Error::Diagram(_)));
    assert!(e.to_string().contains("1 (x4)"), "{e}");
    assert_eq!(e.exit_code(), 2);
}

#[test]
fn every_table_entry_round_trips() {
    let t = table_knots();
    for e in &t {
        let text = formats::pd::serialize(&e.diagram);
        assert_eq!(formats::pd::parse(&text).unwrap(), e.diagram, "{}", e.name);
        if !e.diagram.is_trivial() {
            let g = e.diagram.to_gauss();
            let back = gauss_to_pd(&g, true).unwrap();
            assert_eq!(back.crossing_count(), e.diagram.crossing_count(), "{}", e.name);
            assert_eq!(back.writhe(), e.diagram.writhe(), "{}", e.name);
        }
    }
    assert_eq!(table::parse(&table::serialize(&t)).unwrap(), t);
}

fn arb_poset() -> impl Strategy<Value = Poset> {
    (1usize..=6).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let labels: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
            let mut less = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if bits[i * n + j] {
                        less.push((labels[i].clone(), labels[j].clone()));
                    }
                }
            }
            Poset::from_covers(&labels, &less).unwrap()
        })
    })
}

fn arb_presentation() -> impl Strategy<Value = GroupPresentation> {
    (1usize..5).prop_flat_map(|g| {
        let letter = (1..=g as i64, any::<bool>()).prop_map(|(i, neg)| if neg { -i } else { i });
        proptest::collection::vec(proptest::collection::vec(letter, 0..8), 0..4).prop_map(move |rels| {
            GroupPresentation::new(g, rels.iter().map(|r| Word::from_signed(r)).collect())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pd_round_trip_after_moves(idx in 0usize..38, steps in 0usize..8, seed in any::<u64>()) {
        let t = table_knots();
        let d = fuzz::fuzz(&t[idx].diagram, steps, seed).unwrap().diagram;
        let text = formats::pd::serialize(&d);
        prop_assert_eq!(formats::pd::parse(&text).unwrap(), d.clone());
        // separators are flexible
        let spaced = text.replace(' ', " ,\n  ").replace(',', " , ");
        prop_assert_eq!(formats::pd::parse(&spaced).unwrap(), d);
    }

    #[test]
    fn poset_round_trip(p in arb_poset()) {
        let text = formats::poset::serialize(&p);
        prop_assert_eq!(formats::poset::parse(&text).unwrap(), p);
    }

    #[test]
    fn presentation_round_trip(p in arb_presentation()) {
        let text = formats::presentation::serialize(&p);
        prop_assert_eq!(formats::presentation::parse(&text).unwrap(), p);
    }

    #[test]
    fn garbage_never_panics(s in "[ X(),0-9a-z<:\n-]{0,40}") {
        let _ = formats::pd::parse(&s);
        let _ = formats::gauss::parse_code(&s);
        let _ = formats::dt::parse(&s);
        let _ = formats::poset::parse(&s);
        let _ = formats::complex::parse(&s);
        let _ = formats::presentation::parse(&s);
        let _ = table::parse(&s);
    }
}

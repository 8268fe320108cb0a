use lalg_core::fixtures;
use lalg_core::{enumerate, parse_algebra, parse_document, AlgebraDocument, DiagnosticCode, Kind};
use proptest::prelude::*;

#[test]
fn fixtures_round_trip() {
    for doc in [
        fixtures::table1_document(),
        fixtures::table2_document(),
        fixtures::two_element_document(),
    ] {
        let again = parse_document(doc.to_json().as_bytes()).unwrap();
        assert_eq!(again, doc);
        let pretty = parse_document(doc.to_json_pretty().as_bytes()).unwrap();
        assert_eq!(pretty, doc);
    }
}

#[test]
fn enumerated_algebras_round_trip() {
    for kind in [Kind::PreL, Kind::L] {
        for n in 1..=4 {
            for m in enumerate(n, kind).unwrap() {
                let doc = AlgebraDocument::from_table(&m).with_kind(kind);
                let back = parse_document(doc.to_json().as_bytes()).unwrap();
                assert_eq!(back.kind, Some(kind));
                assert_eq!(back.to_table().unwrap(), m);
            }
        }
    }
}

#[test]
fn diagnostics_carry_codes_and_locations() {
    let cases: [(&str, DiagnosticCode, &str); 6] = [
        (
            r#"{"size": 2, "unit": 1, "table": [[1,1],[0,1]"#,
            DiagnosticCode::MalformedJson,
            "1:",
        ),
        (
            r#"{"size": 0, "unit": 0, "table": []}"#,
            DiagnosticCode::EmptyCarrier,
            "size",
        ),
        (
            r#"{"size": 2, "unit": 1, "table": [[1,1]]}"#,
            DiagnosticCode::SizeMismatch,
            "table",
        ),
        (
            r#"{"size": 2, "unit": 1, "table": [[1,1],[0,7]]}"#,
            DiagnosticCode::EntryOutOfRange,
            "table[1][1]",
        ),
        (
            r#"{"size": 2, "unit": 4, "table": [[1,1],[0,1]]}"#,
            DiagnosticCode::UnitOutOfRange,
            "unit",
        ),
        (
            r#"{"size": 2, "unit": 1, "table": [[1,1],[0,1]], "names": ["x"]}"#,
            DiagnosticCode::NameCount,
            "names",
        ),
    ];
    for (text, code, location) in cases {
        let d = parse_algebra(text.as_bytes()).unwrap_err();
        assert_eq!(d.code, code, "{text}");
        assert!(d.location.starts_with(location), "{text}: {}", d.location);
        assert!(d.to_string().starts_with(code.as_str()));
    }
}

proptest! {
    #[test]
    fn arbitrary_valid_tables_round_trip(
        n in 1usize..6,
        unit_seed in 0usize..6,
        cells in proptest::collection::vec(0usize..6, 36),
    ) {
        let unit = unit_seed % n;
        let table: Vec<Vec<usize>> = (0..n)
            .map(|r| (0..n).map(|c| cells[r * 6 + c] % n).collect())
            .collect();
        let doc = AlgebraDocument { size: n, unit, table, names: None, source: None, kind: None };
        let back = parse_document(doc.to_json().as_bytes()).unwrap();
        prop_assert_eq!(&back, &doc);
        let m = back.to_table().unwrap();
        prop_assert_eq!(AlgebraDocument::from_table(&m), doc);
    }
}

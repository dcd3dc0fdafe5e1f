mod common;

use std::path::Path;

use bennequin::harness::{braid_corpus, Dedup, SearchConfig};
use bennequin::jaeger::{select_tables, FrontExpectation, WeightTable, FRONT_TABLE, JAEGER_TABLE};
use bennequin::{Event, MorseDiagram};
use common::*;

/// Set to regenerate the committed selection report.
const BLESS: &str = "BENNEQUIN_BLESS";

fn sweep_corpus() -> Vec<(String, MorseDiagram)> {
    let cfg = SearchConfig {
        max_strands: 5,
        max_letters: 4,
        dedup: Dedup::CyclicReverse,
        ..SearchConfig::default()
    };
    let infinity =
        MorseDiagram::new(vec![Event::Cup(0), Event::Crossing(0, -1), Event::Cap(0)]).unwrap();
    let mut corpus = vec![
        ("infinity curve".to_string(), infinity.clone()),
        ("mirrored infinity curve".to_string(), infinity.mirror()),
    ];
    corpus.extend(braid_corpus(&cfg));
    corpus
}

#[test]
fn weight_tables_are_forced() {
    let fronts = vec![
        FrontExpectation {
            front: front(SAUCER_FRONT),
            terms: example_one_terms(),
        },
        FrontExpectation {
            front: front(EXAMPLE_TWO_FRONT),
            terms: example_two_terms(),
        },
    ];
    let report = select_tables(&sweep_corpus(), &fronts);
    // reversing every orientation swaps the two senses of rotation and
    // negates r, so the sweep cannot separate these two tables; the printed
    // prefactor (t a^-1)^r picks the one with the unflipped sign
    let reversed = WeightTable {
        vertical: JAEGER_TABLE.horizontal,
        horizontal: JAEGER_TABLE.vertical,
        rotation_sign: -JAEGER_TABLE.rotation_sign,
        ..JAEGER_TABLE
    };
    let mut survivors = report.surviving_diagram_tables();
    survivors.sort_by_key(|t| -t.rotation_sign);
    assert_eq!(survivors, [JAEGER_TABLE, reversed]);
    assert_eq!(JAEGER_TABLE.rotation_sign, 1);
    assert_eq!(report.surviving_front_tables(), [FRONT_TABLE]);

    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/weight_table_selection.txt");
    let text = report.render();
    if std::env::var_os(BLESS).is_some() {
        std::fs::write(&path, &text).unwrap();
    } else {
        let saved = std::fs::read_to_string(&path)
            .expect("selection report missing; rerun with BENNEQUIN_BLESS=1");
        assert_eq!(
            saved, text,
            "selection report is stale; rerun with BENNEQUIN_BLESS=1"
        );
    }
}

mod common;

use bennequin::front::enumerate_fronts;
use bennequin::*;
use common::*;

fn p(terms: &[(i64, i32, i32)]) -> LaurentPoly {
    poly(terms)
}

#[test]
fn trefoil_golden_values() {
    let circle = p(&[(1, -1, 1), (-1, -1, -1)]);
    let homfly_factor = p(&[(2, 0, 1), (-1, 0, -1), (1, 2, 1)]);
    let kauffman_factor = p(&[
        (2, 0, 1),
        (-1, 0, -1),
        (1, 1, 0),
        (-1, 1, -2),
        (1, 2, 1),
        (-1, 2, -1),
    ]);
    let cube = LaurentPoly::monomial(1, 0, -3);
    let want_p = &(&cube * &circle) * &homfly_factor;
    let want_y = &(&cube * &(&LaurentPoly::one() + &circle)) * &kauffman_factor;

    let mut matches = Vec::new();
    for s in ["braid 2: 1 1 1", "braid 2: -1 -1 -1"] {
        let inv = full_invariants(&closure(s));
        if inv.p == want_p {
            assert_eq!(inv.y, want_y, "{s}");
            assert_eq!((inv.e_p, inv.e_y), (-5, -6));
            matches.push(s);
        }
    }
    assert_eq!(matches, ["braid 2: 1 1 1"]);
}

#[test]
fn unknot_and_curls() {
    let unknot = full_invariants(&closure("braid 1:"));
    assert_eq!(unknot.r, LaurentPoly::homfly_circle());
    assert_eq!((unknot.e_p, unknot.e_y), (-1, -1));
    let saucer = front(SAUCER_FRONT).morsify();
    assert_eq!(homfly_r(&saucer), p(&[(1, -1, 2), (-1, -1, 0)]));
    assert_eq!(
        kauffman_d(&saucer),
        p(&[(1, 0, 1), (1, -1, 2), (-1, -1, 0)])
    );
}

#[test]
fn first_worked_example() {
    let cert = lj_both_sides(&front(SAUCER_FRONT));
    let got: Vec<DeltaFraction> = cert.contributions.iter().map(|c| c.value.clone()).collect();
    assert!(same_multiset(&got, &example_one_terms()), "{got:?}");
    assert!(cert.equal);
    assert_eq!(cert.lhs, kauffman_side(1));
}

#[test]
fn second_worked_example() {
    let f = front(EXAMPLE_TWO_FRONT);
    assert_eq!(homfly_r(&f.morsify()), p(&[(1, -1, 3), (-1, -1, 1)]));
    let cert = lj_both_sides(&f);
    let got: Vec<DeltaFraction> = cert.contributions.iter().map(|c| c.value.clone()).collect();
    assert!(same_multiset(&got, &example_two_terms()), "{got:?}");
    assert!(cert.equal);
    assert_eq!(cert.lhs, kauffman_side(2));
}

#[test]
fn second_example_front_is_unique() {
    // the picture is not in the text; the fixture is the small front
    // reproducing the printed polynomial and the four printed terms, and the
    // only one
    let want = p(&[(1, -1, 3), (-1, -1, 1)]);
    let terms = example_two_terms();
    let mut engine = JaegerEngine::new();
    let mut matches = Vec::new();
    for f in enumerate_fronts(4, 2) {
        if f.components() != 1 || engine.skein.homfly(&f.morsify()) != want {
            continue;
        }
        let got: Vec<DeltaFraction> = engine
            .lj(&f)
            .contributions
            .into_iter()
            .map(|c| c.value)
            .collect();
        if same_multiset(&got, &terms) {
            matches.push(f.to_string());
        }
    }
    assert_eq!(matches, [EXAMPLE_TWO_FRONT]);
}

#[test]
fn ten_crossing_knot() {
    let b = braid(TEN_CROSSING_BRAID);
    assert_eq!(b.closure_components(), 1);
    let mut engine = SkeinEngine::new();
    let k = MorseDiagram::braid_closure(&b);
    assert_eq!(engine.invariants(&k).e_p, 3);

    let switched = b.with_letter_switched(0);
    assert_eq!(switched.letters()[0], 2);
    let d = MorseDiagram::braid_closure(&switched);
    let r = engine.homfly(&d);
    assert_eq!(r, LaurentPoly::homfly_circle().shift(0, d.writhe() as i32));

    let mut sum = k.clone();
    for n in 1..=3 {
        assert_eq!(engine.invariants(&sum).e_p, 4 * n - 1, "{n} copies");
        sum = sum.connected_sum(&k).unwrap();
    }
}

#[test]
fn witness_braid() {
    let b = braid(WITNESS_BRAID);
    assert_eq!((b.strands(), b.len(), b.closure_components()), (5, 20, 1));
    let cmp =
        inequalities::ep_ey_compare(&mut SkeinEngine::new(), &MorseDiagram::braid_closure(&b))
            .unwrap();
    assert_eq!((cmp.e_p, cmp.e_y, cmp.witness), (-9, -8, true));
}

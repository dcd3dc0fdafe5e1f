#![allow(dead_code)]

use bennequin::{BraidWord, DeltaFraction, FrontWord, LaurentPoly, MorseDiagram};

pub const SAUCER_FRONT: &str = "front: L 1; R 1";
pub const EXAMPLE_TWO_FRONT: &str = "front: L 1; X 1; R 1";
pub const TEN_CROSSING_BRAID: &str = "braid 4: -2 -2 -3 -3 -1 -1 -2 3 1 1 1";
pub const WITNESS_BRAID: &str = "braid 5: 3 2 1 -2 3 -4 -1 2 3 -4 -3 -2 3 -1 2 -1 4 3 2 1";

pub fn braid(s: &str) -> BraidWord {
    s.parse().unwrap()
}

pub fn closure(s: &str) -> MorseDiagram {
    MorseDiagram::braid_closure(&braid(s))
}

pub fn front(s: &str) -> FrontWord {
    s.parse().unwrap()
}

/// Terms are `(coefficient, t exponent, a exponent)`.
pub fn poly(terms: &[(i64, i32, i32)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms)
}

/// `(a t^-1)^k`
pub fn at(k: i32) -> LaurentPoly {
    LaurentPoly::monomial(1, -k, k)
}

pub fn over_delta(p: LaurentPoly) -> DeltaFraction {
    DeltaFraction::new(p, 1)
}

/// `(a^2 - 1) / (t - t^-1)`, the substituted value of a one-curl unknot.
pub fn curl_value() -> DeltaFraction {
    over_delta(poly(&[(1, 0, 2), (-1, 0, 0)]))
}

/// `(a^2 t^-1)^k (1 + (a^2 t^-1 - a^-2 t) / (t - t^-1))`
pub fn kauffman_side(k: i32) -> DeltaFraction {
    let unknot = over_delta(poly(&[(1, 1, 0), (-1, -1, 0), (1, -1, 2), (-1, 1, -2)]));
    unknot.scale(&LaurentPoly::monomial(1, -k, 2 * k))
}

/// The two printed terms of the first worked example.
pub fn example_one_terms() -> Vec<DeltaFraction> {
    vec![curl_value(), curl_value().scale(&at(2))]
}

/// The four printed terms of the second worked example.
pub fn example_two_terms() -> Vec<DeltaFraction> {
    let delta = LaurentPoly::delta_t();
    let twisted = over_delta(poly(&[(1, 0, 3), (-1, 0, 1)])).scale(&at(1));
    let pair_weight = &poly(&[(1, 1, -2)]) * &delta;
    let cusp_pair = (&curl_value() * &curl_value()).scale(&(&at(4) * &pair_weight));
    let horizontal = curl_value().scale(&(&at(2) * &-delta));
    vec![twisted.clone(), twisted, cusp_pair, horizontal]
}

pub fn same_multiset(a: &[DeltaFraction], b: &[DeltaFraction]) -> bool {
    let mut rest: Vec<&DeltaFraction> = b.iter().collect();
    a.len() == b.len()
        && a.iter().all(|x| match rest.iter().position(|y| *y == x) {
            Some(i) => {
                rest.swap_remove(i);
                true
            }
            None => false,
        })
}

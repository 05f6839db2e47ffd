mod common;

use common::{element, mode, sign};
use freerack_core::{Alphabet, GroupWord, RackElement, RackExpr, WordMode};
use proptest::prelude::*;

fn expr(m: WordMode) -> impl Strategy<Value = RackExpr> {
    let leaf = element(3, 4, WordMode::Free).prop_map(move |e| {
        RackExpr::element(&RackElement::new(
            e.base(),
            GroupWord::reduce(e.word().syllables().iter().copied(), m),
        ))
    });
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), sign(), inner.clone()).prop_map(|(l, s, r)| RackExpr::op(l, s, r)),
            (inner, -5i64..=5).prop_map(|(b, k)| RackExpr::power(b, k)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn display_parses_back((m, e) in mode().prop_flat_map(|m| (Just(m), expr(m)))) {
        let x = Alphabet::new(["a", "b", "c"]).unwrap();
        let text = e.display(&x).to_string();
        let back = RackExpr::parse(&x, m, &text).unwrap();
        prop_assert_eq!(&back, &e, "{}", text);
        prop_assert_eq!(back.evaluate(m).unwrap(), e.evaluate(m).unwrap());
    }

    #[test]
    fn parser_never_panics(text in "[abc();^ |>e0-9-]{0,24}") {
        let x = Alphabet::new(["a", "b", "c"]).unwrap();
        let _ = RackExpr::parse(&x, WordMode::Free, &text);
    }
}

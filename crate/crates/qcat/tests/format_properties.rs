//! Property tests for the serialization surfaces: scalar literals, the
//! arrow text format, and bracket-aware label splitting.

use proptest::prelude::*;
use qcat::arrow::Arrow;
use qcat::format::{parse_arrow, print_arrow};
use qcat::object::{split_labels, FinObject};
use qcat::scalar::{Gauss, Rat, Scalar, Sqrt2Ext};
use qcat::unit::scalar_arrow;

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (-9999i128..=9999, 1i128..=9999).prop_map(|(n, d)| Rat::new(n, d))
}

fn gauss_strategy() -> impl Strategy<Value = Gauss> {
    (rat_strategy(), rat_strategy()).prop_map(|(re, im)| Gauss::new(re, im))
}

fn sqrt2_strategy() -> impl Strategy<Value = Sqrt2Ext> {
    (rat_strategy(), rat_strategy()).prop_map(|(a, b)| Sqrt2Ext::new(a, b))
}

proptest! {
    #[test]
    fn rational_literals_round_trip(x in rat_strategy()) {
        let text = x.to_string();
        prop_assert_eq!(Rat::parse_literal(&text).unwrap(), x);
    }

    #[test]
    fn gaussian_literals_round_trip(x in gauss_strategy()) {
        let text = x.to_string();
        prop_assert_eq!(Gauss::parse_literal(&text).unwrap(), x);
    }

    #[test]
    fn sqrt2_literals_round_trip(x in sqrt2_strategy()) {
        let text = x.to_string();
        prop_assert_eq!(Sqrt2Ext::parse_literal(&text).unwrap(), x);
    }

    #[test]
    fn arrow_blocks_round_trip(entries in proptest::collection::vec(gauss_strategy(), 6)) {
        let dom = FinObject::from_names(&["p", "q"]);
        let cod = FinObject::from_names(&["(x,y)", "{u,v}", "L:w"]);
        let arrow = Arrow::new(dom, cod, entries).unwrap();
        let text = print_arrow("t", &arrow);
        let back = parse_arrow::<Gauss>(&text).unwrap();
        prop_assert_eq!(back.arrow.clone(), arrow);
        prop_assert_eq!(print_arrow("t", &back.arrow), text);
    }

    #[test]
    fn scalar_arrows_round_trip(x in rat_strategy()) {
        let arrow = scalar_arrow(x);
        let text = print_arrow("s", &arrow);
        prop_assert_eq!(parse_arrow::<Rat>(&text).unwrap().arrow, arrow);
    }

    #[test]
    fn label_splitting_joins_back(labels in proptest::collection::vec("[a-z]{1,4}", 1..5)) {
        // plain labels always survive a join/split cycle
        let joined = labels.join(",");
        prop_assert_eq!(split_labels(&joined), labels);
    }
}

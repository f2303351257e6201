mod common;

use common::graph;
use proptest::prelude::*;
use r2dom::io::{emit, parse, Format};

proptest! {
    #![proptest_config(common::config(300))]

    #[test]
    fn parse_emit_round_trip(g in graph(0, 30)) {
        for format in [Format::EdgeList, Format::Dimacs] {
            let text = emit(&g, format);
            let h = parse(&text, format).unwrap();
            prop_assert_eq!(&h, &g);
            prop_assert_eq!(emit(&h, format), text);
        }
    }

    #[test]
    fn comments_and_blank_lines_are_ignored(g in graph(1, 12)) {
        let text = emit(&g, Format::EdgeList);
        let noisy: String = text.lines().flat_map(|l| [format!("{l}  # note"), String::new()]).collect::<Vec<_>>().join("\n");
        prop_assert_eq!(parse(&noisy, Format::EdgeList).unwrap(), g.clone());
        let dimacs = format!("c generated\n{}", emit(&g, Format::Dimacs));
        prop_assert_eq!(parse(&dimacs, Format::Dimacs).unwrap(), g);
    }
}

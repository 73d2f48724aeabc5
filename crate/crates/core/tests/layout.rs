use zpg::graph::fixtures;
use zpg::layout::{embed, emit_drawing, parse_drawing, validate_drawing, CellUse, EmbedError, EmbedLimits, Violation};
use zpg::Direction;

#[test]
fn embed_outputs_validate() {
    for (name, g) in fixtures::all().into_iter().filter(|(n, _)| *n != "bridged16") {
        let r = embed(&g, &EmbedLimits::default()).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(validate_drawing(&g, &r.drawing), Ok(()), "{name}");
        assert_eq!(r.area, r.drawing.width * r.drawing.height);
        assert_eq!(parse_drawing(&emit_drawing(&r.drawing)).unwrap(), r.drawing);
    }
}

#[test]
fn embed_is_deterministic() {
    let g = fixtures::prism();
    let a = embed(&g, &EmbedLimits::default()).unwrap();
    let b = embed(&g, &EmbedLimits::default()).unwrap();
    assert_eq!(emit_drawing(&a.drawing), emit_drawing(&b.drawing));
}

#[test]
fn embed_budget_failure() {
    let g = fixtures::cube();
    let e = embed(&g, &EmbedLimits { max_side: 4, budget: 10 }).unwrap_err();
    assert!(matches!(e, EmbedError::Budget { max_side: 4, .. }));
}

#[test]
fn overlapping_paths_parse_but_fail_validation() {
    let text = "\
bounds 5 5
node 1 1 1
node 2 3 1
node 3 1 3
node 4 3 3
edge 1 2 : 2 1
edge 3 4 : 2 3
edge 1 3 : 1 2
edge 2 4 : 3 2
edge 1 4 : 0 1 0 2 0 3 0 4 1 4 2 4 3 4 4 4 4 3
edge 2 3 : 4 1 4 2 4 3 4 4 3 4 2 4 1 4 0 4 0 3
start 3
";
    let d = parse_drawing(text).unwrap();
    let errs = validate_drawing(&fixtures::k4(), &d).unwrap_err();
    assert!(errs.iter().any(|v| matches!(v, Violation::PathsOverlap(_))), "{errs:?}");
}

#[test]
fn tile_choice_follows_sides() {
    let g = fixtures::k4();
    let d = embed(&g, &EmbedLimits::default()).unwrap().drawing;
    for u in d.cell_uses() {
        if let CellUse::Path { sides, .. } = u {
            assert_ne!(sides[0], sides[1]);
            let straight = sides[0].opposite() == sides[1];
            let horizontal = sides.contains(&Direction::L) && sides.contains(&Direction::R);
            let vertical = sides.contains(&Direction::U) && sides.contains(&Direction::D);
            assert_eq!(straight, horizontal || vertical);
        }
    }
}

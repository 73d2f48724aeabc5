use std::path::Path;

use zpg::reduction::{
    builtin_tileset, load_tileset, verify_gadget, verify_tileset, TileKind, TileSet,
    BUILTIN_TILES,
};
use zpg::Direction;

#[test]
fn builtin_tiles_verify() {
    let ts = builtin_tileset();
    for r in verify_tileset(&ts) {
        assert!(r.passed(), "{r}");
    }
    let node = verify_gadget(&ts, TileKind::Node);
    assert_eq!(node.tally("cover"), (6, 6));
    assert_eq!(node.tally("exclusive"), (3, 3));
}

#[test]
fn tile_directory_loads() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/tiles");
    let ts = load_tileset(&dir).unwrap();
    assert_eq!(ts, builtin_tileset());
    assert_eq!(ts.node.ports, vec![Direction::R, Direction::D, Direction::L]);
}

fn with_node(rows: &str) -> TileSet {
    let node = format!("tile broken node\n{rows}");
    let gateway = format!(
        "tile broken-gateway gateway\n{}\nadded: 2 0 4 0\n",
        rows.lines()
            .enumerate()
            .map(|(y, l)| if y == 0 { "##.#.##".to_string() } else { l.to_string() })
            .collect::<Vec<_>>()
            .join("\n")
    );
    let mut texts: Vec<&str> = BUILTIN_TILES.to_vec();
    texts[2] = &node;
    texts[3] = &gateway;
    TileSet::from_texts(&texts).unwrap()
}

#[test]
fn broken_node_lane_fails() {
    // The builtin node with the sand cell at (2,3) on the left lane turned to rock.
    let ts = with_node("#######\n##.#.##\n#.___.#\n_.#_.._\n#.._..#\n#.....#\n###_###\n");
    let r = verify_gadget(&ts, TileKind::Node);
    assert!(!r.passed(), "{r}");
    assert!(r.tally("cover").0 < 6);
}

#[test]
fn leaky_node_fails_exclusivity() {
    // A walkable corridor joins the left and right ports, so a traversal can
    // cover a side pocket, leave, and come back for the rest.
    let ts = with_node("#######\n#######\n#.###.#\n_______\n###.###\n###.###\n###_###\n");
    let r = verify_gadget(&ts, TileKind::Node);
    assert!(r.tally("exclusive").0 < 3, "{r}");
}

#[test]
fn gateway_with_blind_return_lane_fails() {
    // Rock under the second added cell: the pad can be left but not re-entered
    // after the tour.
    let ts = with_node("#######\n##.####\n#.___.#\n_.._.._\n#.._..#\n#.....#\n###_###\n");
    let r = verify_gadget(&ts, TileKind::Gateway);
    assert!(!r.passed(), "{r}");
}

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/data/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn zpg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zpg")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn solve_fig1() {
    let o = zpg(&["solve", &fixture("fig1.garden")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("SOLVABLE "));
}

#[test]
fn solve_unsolvable_and_budget() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("walled.garden");
    std::fs::write(&path, "M_#.#\n").unwrap();
    let o = zpg(&["solve", path.to_str().unwrap()]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(1), "UNSOLVABLE\n"));

    std::fs::write(&path, "M..\n").unwrap();
    let o = zpg(&["solve", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "UNSOLVABLE\n");
    let o = zpg(&["solve", path.to_str().unwrap(), "--end-rule", "covered", "--stats"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "SOLVABLE R\n"));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("states="));

    let o = zpg(&["solve", &fixture("fig1.garden"), "--max-states", "1"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(1), "BUDGET\n"));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.garden");
    std::fs::write(&path, "M.\n.x\n").unwrap();
    let o = zpg(&["solve", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(zpg(&["solve", "/no/such/file"]).status.code(), Some(2));
    assert_eq!(zpg(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(zpg(&["solve", &fixture("fig1.garden"), "--end-rule", "lax"]).status.code(), Some(2));
}

#[test]
fn replay_outcomes() {
    let o = zpg(&["replay", &fixture("fig1.garden"), &fixture("fig1.solution")]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "SOLVED moves=23 cells=30\n"));
    let dir = tempfile::tempdir().unwrap();
    let short = dir.path().join("short.solution");
    std::fs::write(&short, "UUUR\n").unwrap();
    let o = zpg(&["replay", &fixture("fig1.garden"), short.to_str().unwrap()]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(1), "NOT SOLVED moves=4 covered=4/11\n"));
    std::fs::write(&short, "D\n").unwrap();
    let o = zpg(&["replay", &fixture("fig1.garden"), short.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("ILLEGAL"));
}

#[test]
fn render_formats() {
    let o = zpg(&["render", &fixture("fig1.garden")]);
    assert_eq!(stdout(&o), std::fs::read_to_string(fixture("fig1.garden")).unwrap());
    let o = zpg(&["render", &fixture("fig1.garden"), "--format", "svg"]);
    assert!(stdout(&o).starts_with("<svg"));
    let o = zpg(&["render", &fixture("fig1.garden"), "--solution", &fixture("fig1.solution")]);
    assert!(!stdout(&o).contains('.'));
}

#[test]
fn oracle_codes() {
    let o = zpg(&["oracle", &fixture("k4.graph")]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "HC 1 2 3 4\n"));
    let o = zpg(&["oracle", &fixture("bridged10.graph")]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(1), "NO HC\n"));
    let o = zpg(&["oracle", &fixture("bridged16.graph"), "--limit", "10"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn embed_compile_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let o = zpg(&["embed", &fixture("k4.graph")]);
    assert_eq!(o.status.code(), Some(0));
    let drawing = dir.path().join("k4.drawing");
    std::fs::write(&drawing, &o.stdout).unwrap();
    let tilemap = dir.path().join("k4.tilemap");
    let o = zpg(&["compile", &fixture("k4.graph"), drawing.to_str().unwrap(), "--tilemap", tilemap.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let garden = stdout(&o);
    let rows: Vec<&str> = garden.lines().collect();
    assert_eq!(rows.len() % 7, 0);
    assert!(rows.iter().all(|r| r.len() == rows[0].len() && r.len() % 7 == 0));
    assert!(std::fs::read_to_string(&tilemap).unwrap().starts_with("tilemap "));

    let compiled = dir.path().join("k4.garden");
    std::fs::write(&compiled, garden).unwrap();
    let o = zpg(&["solve", compiled.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_commands() {
    let o = zpg(&["verify-tiles"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("node (node): 9/9 cases PASS"));
    let tiles = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data/tiles");
    let o = zpg(&["verify-tiles", tiles.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));

    let o = zpg(&["verify-equivalence", &fixture("k4.graph"), &fixture("k4.drawing")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("agree=Agree"));
    let o = zpg(&["verify-equivalence", &fixture("bridged10.graph"), &fixture("bridged10.drawing")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("oracle=NoHc garden=Unsolvable agree=Agree"));
    let o = zpg(&["verify-equivalence", &fixture("cube.graph"), &fixture("cube.drawing"), "--max-states", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("agree=Inconclusive"));
    let o = zpg(&["verify-equivalence", &fixture("k4.graph"), &fixture("cube.drawing")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bench_lists_each_garden() {
    let o = zpg(&["bench", &fixture("fig1.garden"), &fixture("fig1.garden")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 2);
    assert!(out.contains("6x5 sand=11 SOLVABLE"));
    assert_eq!(zpg(&["bench"]).status.code(), Some(2));
}

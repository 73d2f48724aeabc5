use proptest::prelude::*;

use zpg::harness::naive_solve;
use zpg::reduction::{builtin_tileset, rotate_tile};
use zpg::solver::{enumerate_solutions, prune_dead_sand, solve, Pruning, SolverConfig, Verdict};
use zpg::{Cell, Direction, EndRule, Garden, Pos};

fn garden_strategy() -> impl Strategy<Value = Garden> {
    (1usize..=5, 1usize..=4)
        .prop_flat_map(|(w, h)| {
            let cell = prop_oneof![Just(Cell::Rock), Just(Cell::Sand), Just(Cell::Sand), Just(Cell::Walkable)];
            (Just(w), Just(h), proptest::collection::vec(cell, w * h), 0..w * h)
        })
        .prop_map(|(w, h, mut cells, m)| {
            cells[m] = Cell::Walkable;
            Garden::new(w, h, cells, Pos::new(m % w, m / w)).unwrap()
        })
}

fn moves_strategy() -> impl Strategy<Value = Vec<Direction>> {
    proptest::collection::vec(proptest::sample::select(Direction::ALL.to_vec()), 0..20)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn moves_preserve_invariants(g in garden_strategy(), moves in moves_strategy()) {
        let mut s = g.initial_state();
        for d in moves {
            let legal = g.legal_moves(&s).contains(&d);
            match g.apply_move(&s, d) {
                Ok((next, trace)) => {
                    prop_assert!(legal);
                    prop_assert!(s.covered.is_subset(&next.covered));
                    prop_assert_eq!(next.covered.len(), s.covered.len() + trace.covered_cells.len());
                    // The monk stands on walkable or covered sand, never on rock.
                    match g.cell(next.monk) {
                        Cell::Rock => prop_assert!(false, "monk on rock"),
                        Cell::Sand => prop_assert!(next.covered.contains(g.sand_id(next.monk).unwrap())),
                        Cell::Walkable => {}
                    }
                    s = next;
                }
                Err(_) => prop_assert!(!legal),
            }
        }
        prop_assert_eq!(g.render_text(None).lines().count(), g.height());
    }

    #[test]
    fn solver_agrees_with_naive(g in garden_strategy()) {
        for rule in [EndRule::Strict, EndRule::CoveredOnly] {
            let truth = naive_solve(&g, rule).unwrap();
            for pruning in [Pruning::ALL, Pruning::NONE] {
                let cfg = SolverConfig { end_rule: rule, pruning, ..SolverConfig::default() };
                match solve(&g, &cfg).verdict {
                    Verdict::Solvable(m) => {
                        prop_assert!(truth);
                        prop_assert!(g.replay(&m, rule).unwrap().1);
                    }
                    Verdict::Unsolvable => prop_assert!(!truth),
                    Verdict::BudgetExceeded => prop_assert!(false, "budget on a tiny garden"),
                }
            }
            if rule == EndRule::CoveredOnly && truth {
                prop_assert!(!prune_dead_sand(&g, &g.initial_state()));
            }
        }
    }

    #[test]
    fn enumerated_solutions_all_solve(g in garden_strategy()) {
        let cfg = SolverConfig::default();
        let e = enumerate_solutions(&g, &cfg, Some(50));
        for m in &e.solutions {
            prop_assert!(g.replay(m, EndRule::Strict).unwrap().1);
        }
        let solvable = matches!(solve(&g, &cfg).verdict, Verdict::Solvable(_));
        prop_assert_eq!(solvable, !e.solutions.is_empty());
    }

    #[test]
    fn rotations_compose(q in 0u8..8, r in 0u8..8) {
        let ts = builtin_tileset();
        for t in [&ts.straight, &ts.corner, &ts.node, &ts.gateway] {
            let once = rotate_tile(&rotate_tile(t, q), r);
            prop_assert_eq!(&once, &rotate_tile(t, (q + r) % 4));
            prop_assert_eq!(once.sand_count(), t.sand_count());
        }
    }
}

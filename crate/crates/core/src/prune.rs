//! Sound dead-state detection.
//!
//! Everything the monk will ever occupy lies in the 4-connected component of
//! open cells (walkable or uncovered sand) around him, because open cells only
//! ever close. On top of that reachability test we look at bridges of the
//! open-cell graph. The far side `P` of a bridge `(b, a)` can only be entered
//! by stepping from `b` to `a`. If `b` is sand it is covered behind the monk;
//! if `a` is sand and `P` holds more uncovered sand, leaving again strands
//! that sand. Either way a pocket holding uncovered sand is a one-way trip,
//! so two disjoint such pockets cannot both be covered.

use crate::garden::{Cell, Direction, Garden, GameState};

pub(crate) fn is_dead(g: &Garden, s: &GameState, needs_walkable_end: bool) -> bool {
    let uncovered_total = g.sand_count() - s.covered.len();
    if uncovered_total == 0 {
        return false;
    }
    let n = g.width() * g.height();
    let root = g.index(s.monk);
    let open = |i: usize| -> bool {
        i == root
            || match g.cells()[i] {
                Cell::Rock => false,
                Cell::Walkable => true,
                Cell::Sand => !s.covered.contains(g.sand_id(g.pos_of(i)).unwrap()),
            }
    };
    let open_sand = |i: usize| i != root && g.cells()[i] == Cell::Sand && open(i);

    let mut tin = vec![0u32; n];
    let mut low = vec![0u32; n];
    let mut tout = vec![0u32; n];
    let mut sand_sub = vec![0u32; n];
    let mut walk_sub = vec![0u32; n];
    let mut timer = 1u32;
    // (cell, parent, next direction index)
    let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
    tin[root] = timer;
    low[root] = timer;
    let mut pockets: Vec<(u32, u32)> = Vec::new();
    let mut dead = false;

    while let Some(top) = stack.last_mut() {
        let (v, parent, next) = *top;
        if next < 4 {
            top.2 += 1;
            let d = Direction::ALL[next];
            let Some(np) = g.step(g.pos_of(v), d) else { continue };
            let w = g.index(np);
            if w == parent || !open(w) {
                continue;
            }
            if tin[w] == 0 {
                timer += 1;
                tin[w] = timer;
                low[w] = timer;
                stack.push((w, v, 0));
            } else {
                low[v] = low[v].min(tin[w]);
            }
            continue;
        }
        stack.pop();
        tout[v] = timer;
        if open_sand(v) {
            sand_sub[v] += 1;
        } else if v != root {
            walk_sub[v] += 1;
        }
        if parent == usize::MAX {
            continue;
        }
        low[parent] = low[parent].min(low[v]);
        sand_sub[parent] += sand_sub[v];
        walk_sub[parent] += walk_sub[v];
        if low[v] > tin[parent] && sand_sub[v] > 0 {
            let entry_sand = open_sand(v);
            let beyond_entry = sand_sub[v] - u32::from(entry_sand);
            let terminal = g.cells()[parent] == Cell::Sand || (entry_sand && beyond_entry > 0);
            if terminal {
                if needs_walkable_end && walk_sub[v] == 0 {
                    dead = true;
                }
                pockets.push((tin[v], tout[v]));
            }
        }
    }
    if dead || (sand_sub[root] as usize) < uncovered_total {
        return true;
    }
    // Pockets from one bridge tree are nested or disjoint; they are all
    // enterable in one trip only if they form a chain.
    if let Some(&(inner_in, inner_out)) = pockets.iter().max_by_key(|p| p.0) {
        return pockets.iter().any(|&(a, b)| !(a <= inner_in && inner_out <= b));
    }
    false
}

//! Reidemeister–Schreier presentations of finite-index subgroups.

use std::collections::{HashSet, VecDeque};

use crate::fp::low_index::{column, CosetTable};
use crate::presentation::{cyclic_reduce, free_reduce, gen_index, inverse, Letter, Presentation, Word};

/// Longest replacement word Tietze elimination will substitute.
const MAX_SUBSTITUTION: usize = 16;

/// Spanning tree of the coset graph found by breadth-first search from coset 0.
/// `parent[d] = (c, col)` means `d` was first reached as `c · letter(col)`.
fn schreier_tree(t: &CosetTable) -> Vec<Option<(usize, usize)>> {
    let cols = 2 * t.num_generators();
    let mut parent = vec![None; t.index];
    let mut seen = vec![false; t.index];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(c) = queue.pop_front() {
        for col in 0..cols {
            let d = t.table[c][col];
            if !seen[d] {
                seen[d] = true;
                parent[d] = Some((c, col));
                queue.push_back(d);
            }
        }
    }
    parent
}

/// Letter ids per coset and generator.
type EdgeIds = Vec<Vec<Option<Letter>>>;

/// Schreier generator numbering: `ids[c][g]` is the 1-based letter for the
/// edge from `c` to `c·g`, or `None` when the edge lies in the spanning tree.
fn schreier_generators(t: &CosetTable) -> (EdgeIds, Vec<(usize, usize)>) {
    let n = t.num_generators();
    let parent = schreier_tree(t);
    let mut ids = vec![vec![None; n]; t.index];
    let mut edges = Vec::new();
    for (c, row) in ids.iter_mut().enumerate() {
        for (g, slot) in row.iter_mut().enumerate() {
            let fwd = column(g as Letter + 1);
            let d = t.table[c][fwd];
            let in_tree = parent[d] == Some((c, fwd)) || parent[c] == Some((d, fwd ^ 1));
            if !in_tree {
                edges.push((c, g));
                *slot = Some(edges.len() as Letter);
            }
        }
    }
    (ids, edges)
}

/// Presentation of the subgroup with coset table `t`, on Schreier generators
/// and every relator rewritten from every coset, without simplification.
pub fn raw_subgroup_presentation(p: &Presentation, t: &CosetTable) -> Presentation {
    let (ids, edges) = schreier_generators(t);
    let generators = edges.iter().map(|&(c, g)| format!("{}_{}", p.generators[g], c)).collect();
    let mut relators = Vec::with_capacity(t.index * p.relators.len());
    for start in 0..t.index {
        for r in &p.relators {
            let mut cur = start;
            let mut w = Word::new();
            for &l in r {
                let g = gen_index(l);
                if l > 0 {
                    w.extend(ids[cur][g]);
                    cur = t.act(cur, l);
                } else {
                    let prev = t.act(cur, l);
                    w.extend(ids[prev][g].map(|x| -x));
                    cur = prev;
                }
            }
            relators.push(w);
        }
    }
    Presentation::new(generators, relators)
}

/// Presentation of the subgroup with coset table `t`, simplified by Tietze moves.
pub fn subgroup_presentation(p: &Presentation, t: &CosetTable) -> Presentation {
    simplify(&raw_subgroup_presentation(p, t))
}

fn substitute(w: &[Letter], g: usize, replacement: &[Letter]) -> Word {
    let inv = inverse(replacement);
    let mut out = Word::with_capacity(w.len());
    for &l in w {
        if gen_index(l) == g {
            out.extend_from_slice(if l > 0 { replacement } else { &inv });
        } else {
            out.push(l);
        }
    }
    free_reduce(&out)
}

/// A relator in which generator `g` occurs exactly once, solved for `g`.
fn elimination(relators: &[Word], alive: &[bool]) -> Option<(usize, usize, Word)> {
    let mut best: Option<(usize, usize, Word)> = None;
    for (i, r) in relators.iter().enumerate() {
        if best.as_ref().is_some_and(|(j, _, _)| relators[*j].len() <= r.len()) {
            continue;
        }
        if r.len() > MAX_SUBSTITUTION + 1 {
            continue;
        }
        for (pos, &l) in r.iter().enumerate() {
            let g = gen_index(l);
            if !alive[g] || r.iter().filter(|&&x| gen_index(x) == g).count() != 1 {
                continue;
            }
            // r = u g^e v, so g^e = u⁻¹ v⁻¹
            let mut rhs = inverse(&r[..pos]);
            rhs.extend(inverse(&r[pos + 1..]));
            let solved = if l > 0 { rhs } else { inverse(&rhs) };
            best = Some((i, g, free_reduce(&solved)));
            break;
        }
    }
    best
}

/// Tietze simplification: drops trivial and duplicate relators and
/// eliminates generators that occur exactly once in some short relator.
pub fn simplify(p: &Presentation) -> Presentation {
    let n = p.num_generators();
    let mut alive = vec![true; n];
    let mut relators: Vec<Word> = p.relators.clone();
    loop {
        let mut seen = HashSet::new();
        relators = relators
            .iter()
            .map(|r| cyclic_reduce(r))
            .filter(|r| !r.is_empty() && seen.insert(r.clone()))
            .collect();
        let Some((i, g, replacement)) = elimination(&relators, &alive) else { break };
        relators.swap_remove(i);
        alive[g] = false;
        for r in relators.iter_mut() {
            *r = substitute(r, g, &replacement);
        }
    }
    let mut renumber = vec![0 as Letter; n];
    let mut generators = Vec::new();
    for g in 0..n {
        if alive[g] {
            generators.push(p.generators[g].clone());
            renumber[g] = generators.len() as Letter;
        }
    }
    let relators = relators
        .iter()
        .map(|r| r.iter().map(|&l| renumber[gen_index(l)] * l.signum()).collect())
        .collect();
    Presentation { generators, relators, distinguished: None }
}

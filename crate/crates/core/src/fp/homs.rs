//! Counting homomorphisms from a finitely presented group into a finite group.
//!
//! Generator images are chosen one generator at a time; each relator is
//! checked as soon as every generator it mentions has an image. Generators
//! are visited in a fixed order that closes relators as early as possible,
//! and the subtrees under the first generator are explored in parallel.

use rayon::prelude::*;

use crate::fp::catalogue::FiniteGroupTable;
use crate::presentation::{cyclic_reduce, gen_index, Letter, Presentation, Word};

struct HomSearch<'a> {
    group: &'a FiniteGroupTable,
    /// Generator visited at each depth.
    order: Vec<usize>,
    /// Relators that become fully assigned at each depth.
    checks: Vec<Vec<Word>>,
    /// Count only surjective homomorphisms.
    surjective: bool,
}

/// Visiting order: repeatedly take the generator that completes the most
/// relators, breaking ties by occurrence count and then by index.
fn visiting_order(n: usize, relators: &[Word]) -> Vec<usize> {
    let mut assigned = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let supports: Vec<Vec<usize>> = relators
        .iter()
        .map(|r| {
            let mut s: Vec<usize> = r.iter().map(|&l| gen_index(l)).collect();
            s.sort_unstable();
            s.dedup();
            s
        })
        .collect();
    for _ in 0..n {
        let best = (0..n)
            .filter(|&g| !assigned[g])
            .max_by_key(|&g| {
                let closes = supports
                    .iter()
                    .filter(|s| s.contains(&g) && s.iter().all(|&x| x == g || assigned[x]))
                    .count();
                let occurrences = relators.iter().flatten().filter(|&&l| gen_index(l) == g).count();
                (closes, occurrences, std::cmp::Reverse(g))
            })
            .expect("unassigned generator remains");
        assigned[best] = true;
        order.push(best);
    }
    order
}

impl<'a> HomSearch<'a> {
    fn new(p: &Presentation, group: &'a FiniteGroupTable, surjective: bool) -> Self {
        let relators: Vec<Word> = p.relators.iter().map(|r| cyclic_reduce(r)).filter(|r| !r.is_empty()).collect();
        let n = p.num_generators();
        let order = visiting_order(n, &relators);
        let mut depth_of = vec![0; n];
        for (d, &g) in order.iter().enumerate() {
            depth_of[g] = d;
        }
        let mut checks = vec![Vec::new(); n];
        for r in relators {
            let d = r.iter().map(|&l| depth_of[gen_index(l)]).max().expect("non-empty relator");
            checks[d].push(r);
        }
        HomSearch { group, order, checks, surjective }
    }

    fn eval(&self, w: &[Letter], images: &[u32]) -> u32 {
        w.iter().fold(0, |acc, &l| {
            let x = images[gen_index(l)];
            self.group.mul(acc, if l > 0 { x } else { self.group.inv(x) })
        })
    }

    fn holds_at(&self, depth: usize, images: &[u32]) -> bool {
        self.checks[depth].iter().all(|r| self.eval(r, images) == 0)
    }

    fn leaf(&self, images: &[u32]) -> u64 {
        if !self.surjective || self.group.subgroup_order(images) == self.group.order() {
            1
        } else {
            0
        }
    }

    fn descend(&self, depth: usize, images: &mut [u32]) -> u64 {
        if depth == self.order.len() {
            return self.leaf(images);
        }
        let g = self.order[depth];
        let mut total = 0;
        for x in 0..self.group.order() as u32 {
            images[g] = x;
            if self.holds_at(depth, images) {
                total += self.descend(depth + 1, images);
            }
        }
        total
    }

    fn count(&self) -> u64 {
        let n = self.order.len();
        if n == 0 {
            return self.leaf(&[]);
        }
        let first = self.order[0];
        (0..self.group.order() as u32)
            .into_par_iter()
            .map(|x| {
                let mut images = vec![0u32; n];
                images[first] = x;
                if self.holds_at(0, &images) {
                    self.descend(1, &mut images)
                } else {
                    0
                }
            })
            .sum()
    }
}

/// Number of homomorphisms `G → F` for the group `G` presented by `p`.
pub fn count_homomorphisms(p: &Presentation, f: &FiniteGroupTable) -> u64 {
    HomSearch::new(p, f, false).count()
}

/// Number of surjective homomorphisms `G → F`.
pub fn count_epimorphisms(p: &Presentation, f: &FiniteGroupTable) -> u64 {
    HomSearch::new(p, f, true).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::catalogue::load_catalogue;

    fn group(line: &str) -> FiniteGroupTable {
        load_catalogue(line).unwrap().remove(0)
    }

    fn pres(s: &str) -> Presentation {
        s.parse().unwrap()
    }

    #[test]
    fn documented_hom_counts() {
        let s3 = group("S3; 3; (1 2), (1 2 3)");
        assert_eq!(count_homomorphisms(&pres("<a | a^2>"), &s3), 4);
        assert_eq!(count_homomorphisms(&pres("<a, b | [a,b]>"), &s3), 18);
        let trivial = group("C1; 1; ()");
        assert_eq!(count_homomorphisms(&pres("<a, b | a^3 b^-2, [a,b]>"), &trivial), 1);
    }

    #[test]
    fn documented_epi_counts() {
        let c2 = group("C2; 2; (1 2)");
        let s3 = group("S3; 3; (1 2), (1 2 3)");
        assert_eq!(count_epimorphisms(&pres("<a | a^2>"), &c2), 1);
        assert_eq!(count_epimorphisms(&pres("<a | a^2>"), &s3), 0);
        assert_eq!(count_epimorphisms(&pres("<a, b | [a,b]>"), &c2), 3);
    }

    #[test]
    fn zero_generator_presentation() {
        let c2 = group("C2; 2; (1 2)");
        assert_eq!(count_homomorphisms(&pres("< | >"), &c2), 1);
        assert_eq!(count_epimorphisms(&pres("< | >"), &c2), 0);
    }

    #[test]
    fn free_group_counts_are_powers() {
        let s3 = group("S3; 3; (1 2), (1 2 3)");
        assert_eq!(count_homomorphisms(&pres("<a, b, c>"), &s3), 216);
    }

    #[test]
    fn visiting_order_prefers_constraining_generators() {
        let p = pres("<a, b, h | [a,h], [b,h], a^2 h, b^3 h, a b h>");
        let order = visiting_order(3, &p.relators);
        assert_eq!(order[0], 2);
    }
}

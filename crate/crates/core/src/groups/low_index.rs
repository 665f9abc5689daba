//! Subgroups of small index up to conjugacy, by backtracking over partial
//! coset tables.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::coset::CosetTable;
use super::free_word::column_of;
use super::presentation::Presentation;
use super::GroupError;

const UNDEF: usize = usize::MAX;

/// Bound on visited search nodes.
const NODE_LIMIT: usize = 50_000_000;

struct Search {
    ncols: usize,
    max_index: usize,
    relators: Vec<Vec<usize>>,
    nodes: usize,
    found: BTreeSet<CosetTable>,
}

#[derive(PartialEq)]
enum Scan {
    Unchanged,
    Deduced,
    Conflict,
}

fn scan(table: &mut [Vec<usize>], a: usize, w: &[usize]) -> Scan {
    let mut f = a;
    let mut i = 0;
    let mut b = a;
    let mut j = w.len();
    while i < j && table[f][w[i]] != UNDEF {
        f = table[f][w[i]];
        i += 1;
    }
    if i == j {
        return if f == b { Scan::Unchanged } else { Scan::Conflict };
    }
    while j > i && table[b][w[j - 1] ^ 1] != UNDEF {
        b = table[b][w[j - 1] ^ 1];
        j -= 1;
    }
    if j == i {
        return if f == b { Scan::Unchanged } else { Scan::Conflict };
    }
    if j == i + 1 {
        if table[b][w[i] ^ 1] != UNDEF {
            return Scan::Conflict;
        }
        table[f][w[i]] = b;
        table[b][w[i] ^ 1] = f;
        return Scan::Deduced;
    }
    Scan::Unchanged
}

impl Search {
    /// Closes the table under deductions; false on a contradiction.
    fn deduce(&self, table: &mut [Vec<usize>]) -> bool {
        loop {
            let mut changed = false;
            for c in 0..table.len() {
                for r in &self.relators {
                    match scan(table, c, r) {
                        Scan::Conflict => return false,
                        Scan::Deduced => changed = true,
                        Scan::Unchanged => {}
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn run(&mut self, table: Vec<Vec<usize>>) -> Result<(), GroupError> {
        self.nodes += 1;
        if self.nodes > NODE_LIMIT {
            return Err(GroupError::SearchLimit(NODE_LIMIT));
        }
        let hole = table
            .iter()
            .enumerate()
            .find_map(|(c, row)| row.iter().position(|&d| d == UNDEF).map(|x| (c, x)));
        let Some((c, x)) = hole else {
            let t = CosetTable::from_rows(self.ncols / 2, table)?;
            if t.conjugacy_key() == t {
                self.found.insert(t);
            }
            return Ok(());
        };
        let n = table.len();
        for d in 0..=n {
            if d == self.max_index {
                break;
            }
            let mut next = table.clone();
            if d == n {
                next.push(vec![UNDEF; self.ncols]);
            } else if next[d][x ^ 1] != UNDEF {
                continue;
            }
            next[c][x] = d;
            next[d][x ^ 1] = c;
            if self.deduce(&mut next) {
                self.run(next)?;
            }
        }
        Ok(())
    }
}

/// One standardized table per conjugacy class of subgroups of index at
/// most `max_index`, ordered by index and then by table.
pub fn low_index_subgroups(p: &Presentation, max_index: usize) -> Result<Vec<CosetTable>, GroupError> {
    let ncols = 2 * p.ngens();
    let mut s = Search {
        ncols,
        max_index: max_index.max(1),
        relators: p
            .relators()
            .iter()
            .map(|r| r.letters().iter().map(|&l| column_of(l)).collect())
            .collect(),
        nodes: 0,
        found: BTreeSet::new(),
    };
    let mut start = vec![vec![UNDEF; ncols]];
    if s.deduce(&mut start) {
        s.run(start)?;
    }
    let mut out: Vec<CosetTable> = s.found.into_iter().collect();
    out.sort_by(|a, b| a.index().cmp(&b.index()).then_with(|| a.cmp(b)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::todd_coxeter;

    fn pres(s: &str) -> Presentation {
        s.parse().unwrap()
    }

    #[test]
    fn index_one_is_whole_group() {
        for s in ["gens: x, y; rels: x^3, y^4, (x*y)^2", "gens: a, b; rels:"] {
            let t = low_index_subgroups(&pres(s), 1).unwrap();
            assert_eq!(t.len(), 1);
            assert_eq!(t[0].index(), 1);
        }
    }

    #[test]
    fn s4_subgroup_classes() {
        // Conjugacy classes of subgroups of S4 with index <= 4: S4, A4,
        // D8 (index 3), S3 (index 4).
        let p = pres("gens: x, y; rels: x^3, y^4, (x*y)^2");
        let t = low_index_subgroups(&p, 4).unwrap();
        let idx: Vec<usize> = t.iter().map(CosetTable::index).collect();
        assert_eq!(idx, vec![1, 2, 3, 4]);
        for table in &t {
            assert!(table.is_relator_closed(&p));
        }
        // The index-4 class is the point stabilizer: the action is the
        // natural one, whose image has order 24.
        let perms: Vec<Vec<usize>> = (0..2)
            .map(|g| (0..4).map(|c| t[3].rows()[c][2 * g]).collect())
            .collect();
        assert_eq!(perm_group_order(&perms), 24);
        let _ = todd_coxeter(&p, &[], 100).unwrap();
    }

    #[test]
    fn free_group_rank_two_index_two() {
        // Index-2 subgroups of F2 correspond to the three epimorphisms to Z2.
        let t = low_index_subgroups(&pres("gens: a, b; rels:"), 2).unwrap();
        assert_eq!(t.iter().filter(|t| t.index() == 2).count(), 3);
    }

    fn perm_group_order(gens: &[Vec<usize>]) -> usize {
        let n = gens[0].len();
        let id: Vec<usize> = (0..n).collect();
        let mut seen = BTreeSet::from([id.clone()]);
        let mut stack = vec![id];
        while let Some(p) = stack.pop() {
            for g in gens {
                let q: Vec<usize> = p.iter().map(|&i| g[i]).collect();
                if seen.insert(q.clone()) {
                    stack.push(q);
                }
            }
        }
        seen.len()
    }
}

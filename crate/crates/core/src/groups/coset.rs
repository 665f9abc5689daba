//! Coset tables and HLT coset enumeration with lookahead.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::free_word::{column_of, letter_of_column, FreeWord, Letter};
use super::presentation::Presentation;
use super::GroupError;

/// Default bound on the number of simultaneously allocated cosets.
pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

/// A complete coset table: `rows[c][col]` is the image of coset `c` under
/// the letter with column `col` (see [`column_of`]). Coset 0 is the
/// subgroup itself.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CosetTable {
    ngens: usize,
    rows: Vec<Vec<usize>>,
}

impl CosetTable {
    /// Builds a table from one permutation per generator (images of
    /// `0..n`), standardized at coset 0.
    pub fn from_permutations(perms: &[Vec<usize>]) -> Result<Self, GroupError> {
        let n = perms.first().map_or(1, Vec::len);
        let mut rows = vec![vec![0usize; 2 * perms.len()]; n];
        for (g, p) in perms.iter().enumerate() {
            if p.len() != n {
                return Err(GroupError::InconsistentTable);
            }
            let mut seen = vec![false; n];
            for (c, &d) in p.iter().enumerate() {
                if d >= n || seen[d] {
                    return Err(GroupError::InconsistentTable);
                }
                seen[d] = true;
                rows[c][2 * g] = d;
                rows[d][2 * g + 1] = c;
            }
        }
        let t = CosetTable { ngens: perms.len(), rows };
        t.standardize(0).ok_or(GroupError::InconsistentTable)
    }

    /// Wraps raw rows after checking that every column is a permutation
    /// and inverse columns agree.
    pub fn from_rows(ngens: usize, rows: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let t = CosetTable { ngens, rows };
        if t.is_consistent() {
            Ok(t)
        } else {
            Err(GroupError::InconsistentTable)
        }
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    /// Number of cosets, i.e. the index of the subgroup.
    pub fn index(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn act(&self, coset: usize, l: Letter) -> usize {
        self.rows[coset][column_of(l)]
    }

    pub fn trace(&self, coset: usize, w: &FreeWord) -> usize {
        w.letters().iter().fold(coset, |c, &l| self.act(c, l))
    }

    pub fn is_consistent(&self) -> bool {
        let n = self.rows.len();
        self.rows.iter().enumerate().all(|(c, row)| {
            row.len() == 2 * self.ngens
                && row
                    .iter()
                    .enumerate()
                    .all(|(col, &d)| d < n && self.rows[d][col ^ 1] == c)
        })
    }

    /// Every relator traced from every coset returns to it.
    pub fn is_relator_closed(&self, p: &Presentation) -> bool {
        (0..self.index()).all(|c| p.relators().iter().all(|r| self.trace(c, r) == c))
    }

    /// Renumbers cosets breadth-first from `base`, scanning columns in
    /// order. `None` if the action is not transitive.
    pub fn standardize(&self, base: usize) -> Option<CosetTable> {
        let n = self.rows.len();
        let mut order = Vec::with_capacity(n);
        let mut new_index = vec![usize::MAX; n];
        new_index[base] = 0;
        order.push(base);
        let mut i = 0;
        while i < order.len() {
            let c = order[i];
            for &d in &self.rows[c] {
                if new_index[d] == usize::MAX {
                    new_index[d] = order.len();
                    order.push(d);
                }
            }
            i += 1;
        }
        if order.len() != n {
            return None;
        }
        let rows = order
            .iter()
            .map(|&c| self.rows[c].iter().map(|&d| new_index[d]).collect())
            .collect();
        Some(CosetTable { ngens: self.ngens, rows })
    }

    /// Least standardization over all base points; equal for tables of
    /// conjugate subgroups.
    pub fn conjugacy_key(&self) -> CosetTable {
        (0..self.index())
            .filter_map(|b| self.standardize(b))
            .min()
            .expect("a table has at least one coset")
    }

    /// Spanning tree of the standardized numbering: for each coset other
    /// than 0, the (parent, column) through which it was first reached.
    pub fn schreier_tree(&self) -> Vec<Option<(usize, usize)>> {
        let n = self.rows.len();
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(c) = queue.pop_front() {
            for (col, &d) in self.rows[c].iter().enumerate() {
                if !seen[d] {
                    seen[d] = true;
                    parent[d] = Some((c, col));
                    queue.push_back(d);
                }
            }
        }
        parent
    }

    /// Coset representatives u_c along the Schreier tree.
    pub fn transversal(&self) -> Vec<FreeWord> {
        let tree = self.schreier_tree();
        let mut reps: Vec<Option<FreeWord>> = vec![None; self.index()];
        reps[0] = Some(FreeWord::empty());
        // Parents precede children in BFS order, and BFS order matches the
        // standardized numbering.
        let mut order: Vec<usize> = (1..self.index()).collect();
        order.sort_by_key(|&c| depth(&tree, c));
        for c in order {
            let (p, col) = tree[c].expect("transitive table");
            let mut w = reps[p].clone().expect("parent visited first");
            w.0.push(letter_of_column(col));
            reps[c] = Some(w);
        }
        reps.into_iter().map(|r| r.expect("all cosets reached")).collect()
    }
}

fn depth(tree: &[Option<(usize, usize)>], mut c: usize) -> usize {
    let mut d = 0;
    while let Some((p, _)) = tree[c] {
        c = p;
        d += 1;
    }
    d
}

const UNDEF: usize = usize::MAX;

enum Step {
    Full,
}

struct Enumerator {
    ncols: usize,
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    live: usize,
    max: usize,
    relators: Vec<Vec<usize>>,
}

impl Enumerator {
    fn new(ngens: usize, relators: &[FreeWord], max: usize) -> Self {
        let ncols = 2 * ngens;
        Enumerator {
            ncols,
            table: vec![vec![UNDEF; ncols]],
            parent: vec![0],
            live: 1,
            max,
            relators: relators.iter().map(columns).collect(),
        }
    }

    fn alive(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = c;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    fn define(&mut self, c: usize, x: usize) -> Result<(), Step> {
        if self.table.len() >= self.max {
            return Err(Step::Full);
        }
        let d = self.table.len();
        self.table.push(vec![UNDEF; self.ncols]);
        self.parent.push(d);
        self.live += 1;
        self.table[c][x] = d;
        self.table[d][x ^ 1] = c;
        Ok(())
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut Vec<usize>) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi] = lo;
        self.live -= 1;
        queue.push(hi);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let g = queue[i];
            i += 1;
            for x in 0..self.ncols {
                let d = self.table[g][x];
                if d == UNDEF {
                    continue;
                }
                self.table[d][x ^ 1] = UNDEF;
                let mu = self.rep(g);
                let nu = self.rep(d);
                if self.table[mu][x] != UNDEF {
                    let t = self.table[mu][x];
                    self.merge(nu, t, &mut queue);
                } else if self.table[nu][x ^ 1] != UNDEF {
                    let t = self.table[nu][x ^ 1];
                    self.merge(mu, t, &mut queue);
                } else {
                    self.table[mu][x] = nu;
                    self.table[nu][x ^ 1] = mu;
                }
            }
        }
    }

    /// Scans `w` from coset `a`, defining new cosets to close gaps when
    /// `fill` is set. Returns whether anything changed.
    fn scan(&mut self, a: usize, w: &[usize], fill: bool) -> Result<bool, Step> {
        if w.is_empty() {
            return Ok(false);
        }
        let mut f = a;
        let mut i = 0;
        let mut b = a;
        let mut j = w.len();
        loop {
            while i < j && self.table[f][w[i]] != UNDEF {
                f = self.table[f][w[i]];
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                    return Ok(true);
                }
                return Ok(false);
            }
            while j > i && self.table[b][w[j - 1] ^ 1] != UNDEF {
                b = self.table[b][w[j - 1] ^ 1];
                j -= 1;
            }
            if j == i {
                if f != b {
                    self.coincidence(f, b);
                    return Ok(true);
                }
                return Ok(false);
            }
            if j == i + 1 {
                self.table[f][w[i]] = b;
                self.table[b][w[i] ^ 1] = f;
                return Ok(true);
            }
            if !fill {
                return Ok(false);
            }
            self.define(f, w[i])?;
        }
    }

    fn lookahead(&mut self) {
        loop {
            let mut changed = false;
            let mut c = 0;
            while c < self.table.len() {
                for r in 0..self.relators.len() {
                    if !self.alive(c) {
                        break;
                    }
                    let w = self.relators[r].clone();
                    if let Ok(true) = self.scan(c, &w, false) {
                        changed = true;
                    }
                }
                c += 1;
            }
            if !changed {
                break;
            }
        }
    }

    /// Drops dead cosets, preserving order. Returns old → new index.
    fn compact(&mut self) -> Vec<usize> {
        let n = self.table.len();
        let mut map = vec![UNDEF; n];
        let mut next = 0;
        for (c, slot) in map.iter_mut().enumerate() {
            if self.parent[c] == c {
                *slot = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next);
        for c in 0..n {
            if map[c] != UNDEF {
                table.push(
                    self.table[c]
                        .iter()
                        .map(|&d| if d == UNDEF { UNDEF } else { map[d] })
                        .collect(),
                );
            }
        }
        self.table = table;
        self.parent = (0..next).collect();
        self.live = next;
        map
    }

    fn process(&mut self, c: usize) -> Result<(), Step> {
        for r in 0..self.relators.len() {
            if !self.alive(c) {
                return Ok(());
            }
            let w = self.relators[r].clone();
            self.scan(c, &w, true)?;
        }
        for x in 0..self.ncols {
            if !self.alive(c) {
                return Ok(());
            }
            if self.table[c][x] == UNDEF {
                self.define(c, x)?;
            }
        }
        Ok(())
    }

    /// Recovers from a full table; `position` is remapped to the first live
    /// coset at or after it.
    fn make_room(&mut self, position: usize) -> Result<usize, GroupError> {
        self.lookahead();
        if self.live >= self.max {
            return Err(GroupError::CosetLimit(self.max));
        }
        let map = self.compact();
        Ok(map[position.min(map.len())..]
            .iter()
            .copied()
            .find(|&d| d != UNDEF)
            .unwrap_or(self.table.len()))
    }
}

fn columns(w: &FreeWord) -> Vec<usize> {
    w.letters().iter().map(|&l| column_of(l)).collect()
}

/// Enumerates the cosets of ⟨subgroup⟩ in the group presented by `p`.
///
/// `max_cosets` bounds the number of cosets held at once; exceeding it is
/// reported as [`GroupError::CosetLimit`], which says nothing about the
/// index being infinite.
pub fn todd_coxeter(
    p: &Presentation,
    subgroup: &[FreeWord],
    max_cosets: usize,
) -> Result<CosetTable, GroupError> {
    let mut e = Enumerator::new(p.ngens(), p.relators(), max_cosets.max(1));
    let subgroup: Vec<Vec<usize>> = subgroup.iter().map(|w| columns(&w.free_reduce())).collect();
    let mut k = 0;
    while k < subgroup.len() {
        match e.scan(0, &subgroup[k], true) {
            Ok(_) => k += 1,
            Err(Step::Full) => {
                e.make_room(0)?;
            }
        }
    }
    let mut c = 0;
    while c < e.table.len() {
        if !e.alive(c) {
            c += 1;
            continue;
        }
        match e.process(c) {
            Ok(()) => c += 1,
            Err(Step::Full) => c = e.make_room(c)?,
        }
    }
    e.compact();
    if e.table.iter().any(|row| row.contains(&UNDEF)) {
        return Err(GroupError::InconsistentTable);
    }
    let table = CosetTable { ngens: p.ngens(), rows: e.table };
    table.standardize(0).ok_or(GroupError::InconsistentTable)
}

//! Stallings graphs over the free group F₂ = ⟨a, b⟩ and checks for
//! epimorphisms onto F₂.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::free_word::{generator_of, letter, FreeWord};
use super::presentation::Presentation;

/// A labelled directed graph with edges (source, label, target), label 0
/// for a and 1 for b.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StallingsGraph {
    vertices: usize,
    base: usize,
    edges: Vec<(usize, usize, usize)>,
}

impl StallingsGraph {
    /// The bouquet of loops at the base vertex spelling `words` (letters
    /// over generators 0 = a and 1 = b).
    pub fn from_words(words: &[FreeWord]) -> Self {
        let mut g = StallingsGraph { vertices: 1, base: 0, edges: Vec::new() };
        for w in words {
            let w = w.free_reduce();
            if w.is_empty() {
                continue;
            }
            let mut cur = 0;
            for (i, &l) in w.letters().iter().enumerate() {
                let next = if i + 1 == w.len() {
                    0
                } else {
                    g.vertices += 1;
                    g.vertices - 1
                };
                let label = generator_of(l);
                if l > 0 {
                    g.edges.push((cur, label, next));
                } else {
                    g.edges.push((next, label, cur));
                }
                cur = next;
            }
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    /// Pairs of distinct edges that violate foldedness.
    fn conflicts(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.edges.len() {
            for j in i + 1..self.edges.len() {
                let (s1, l1, t1) = self.edges[i];
                let (s2, l2, t2) = self.edges[j];
                if l1 == l2 && (s1 == s2 || t1 == t2) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Folds, resolving the `choose(n)`-th of the n current conflicts at
    /// each step. The result does not depend on `choose`.
    pub fn fold_with(&mut self, mut choose: impl FnMut(usize) -> usize) {
        loop {
            let conflicts = self.conflicts();
            if conflicts.is_empty() {
                break;
            }
            let (i, j) = conflicts[choose(conflicts.len()) % conflicts.len()];
            let (s1, _, t1) = self.edges[i];
            let (s2, _, t2) = self.edges[j];
            self.edges.remove(j);
            if s1 == s2 {
                self.identify(t1, t2);
            } else {
                self.identify(s1, s2);
            }
        }
        self.dedup_edges();
    }

    pub fn fold(&mut self) {
        self.fold_with(|_| 0);
    }

    fn identify(&mut self, u: usize, v: usize) {
        if u == v {
            return;
        }
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let last = self.vertices - 1;
        let relabel = |x: usize| {
            let x = if x == gone { keep } else { x };
            if x == last { gone } else { x }
        };
        for e in &mut self.edges {
            e.0 = relabel(e.0);
            e.2 = relabel(e.2);
        }
        self.base = relabel(self.base);
        self.vertices -= 1;
        self.dedup_edges();
    }

    fn dedup_edges(&mut self) {
        let set: BTreeSet<_> = self.edges.iter().copied().collect();
        self.edges = set.into_iter().collect();
    }

    pub fn is_folded(&self) -> bool {
        self.conflicts().is_empty()
    }

    /// Vertices renumbered breadth-first from the base; edges sorted.
    /// Equal for isomorphic based graphs once folded.
    pub fn canonical(&self) -> StallingsGraph {
        let mut order = vec![usize::MAX; self.vertices];
        let mut queue = vec![self.base];
        order[self.base] = 0;
        let mut i = 0;
        while i < queue.len() {
            let v = queue[i];
            i += 1;
            for label in 0..2 {
                let out = self.edges.iter().filter(|e| e.0 == v && e.1 == label).map(|e| e.2);
                let inc = self.edges.iter().filter(|e| e.2 == v && e.1 == label).map(|e| e.0);
                let mut next: Vec<usize> = out.collect();
                next.extend(inc);
                for u in next {
                    if order[u] == usize::MAX {
                        order[u] = queue.len();
                        queue.push(u);
                    }
                }
            }
        }
        for (next, o) in (queue.len()..).zip(order.iter_mut().filter(|o| **o == usize::MAX)) {
            *o = next;
        }
        let mut edges: Vec<_> = self.edges.iter().map(|&(s, l, t)| (order[s], l, order[t])).collect();
        edges.sort_unstable();
        StallingsGraph { vertices: self.vertices, base: 0, edges }
    }

    /// Folded graph is the rose: one vertex carrying an a-loop and a b-loop,
    /// i.e. the words generate F₂.
    pub fn is_full_rose(&self) -> bool {
        let loops = |l| self.edges.iter().any(|&(s, lab, t)| s == self.base && t == self.base && lab == l);
        loops(0) && loops(1)
    }
}

/// True iff the images send every relator of `p` to 1 in F₂ and generate F₂.
pub fn f2_witness_check(p: &Presentation, images: &[FreeWord]) -> bool {
    if images.len() != p.ngens() {
        return false;
    }
    if !p.relators().iter().all(|r| r.substitute(images).free_reduce().is_empty()) {
        return false;
    }
    let mut g = StallingsGraph::from_words(images);
    g.fold();
    g.is_full_rose()
}

/// Reduced words over {a, b} of length at most `bound`, shortlex.
fn reduced_words(bound: usize) -> Vec<FreeWord> {
    let alphabet = [letter(0, false), letter(0, true), letter(1, false), letter(1, true)];
    let mut out = vec![FreeWord::empty()];
    let mut layer = vec![FreeWord::empty()];
    for _ in 0..bound {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &alphabet {
                if w.letters().last() != Some(&-l) {
                    let mut v = w.0.clone();
                    v.push(l);
                    next.push(FreeWord(v));
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Bounded search for generator images witnessing an epimorphism onto F₂.
/// Deterministic; `None` is not a proof that no epimorphism exists.
pub fn f2_witness_search(p: &Presentation, length_bound: usize) -> Option<Vec<FreeWord>> {
    let candidates = reduced_words(length_bound);
    // Relators checkable once generators 0..=i have images.
    let mut ready: Vec<Vec<&FreeWord>> = vec![Vec::new(); p.ngens()];
    for r in p.relators() {
        if let Some(m) = r.letters().iter().map(|&l| generator_of(l)).max() {
            ready[m].push(r);
        }
    }
    let mut images = vec![FreeWord::empty(); p.ngens()];
    if search(p, &candidates, &ready, &mut images, 0) {
        Some(images)
    } else {
        None
    }
}

fn search(
    p: &Presentation,
    candidates: &[FreeWord],
    ready: &[Vec<&FreeWord>],
    images: &mut Vec<FreeWord>,
    i: usize,
) -> bool {
    if i == images.len() {
        return f2_witness_check(p, images);
    }
    for c in candidates {
        images[i] = c.clone();
        let prefix = &images[..=i];
        let ok = ready[i].iter().all(|r| r.substitute(prefix).free_reduce().is_empty());
        if ok && search(p, candidates, ready, images, i + 1) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i32]) -> FreeWord {
        FreeWord(v.to_vec())
    }

    fn pres(s: &str) -> Presentation {
        s.parse().unwrap()
    }

    #[test]
    fn witness_checks() {
        let p = pres("gens: g, h; rels:");
        assert!(f2_witness_check(&p, &[w(&[1]), w(&[2])]));
        assert!(!f2_witness_check(&p, &[w(&[1, 1]), w(&[2])]));
        let q = pres("gens: g, h; rels: g^2");
        assert!(!f2_witness_check(&q, &[w(&[1]), w(&[2])]));
        // Nielsen-equivalent generating pair.
        assert!(f2_witness_check(&p, &[w(&[1, 2]), w(&[2])]));
    }

    #[test]
    fn folding_a_squared_b() {
        let mut g = StallingsGraph::from_words(&[w(&[1, 1]), w(&[2])]);
        g.fold();
        assert!(g.is_folded());
        assert_eq!(g.vertex_count(), 2);
        assert!(!g.is_full_rose());
    }

    #[test]
    fn searches() {
        let p = pres("gens: g, h; rels:");
        assert_eq!(f2_witness_search(&p, 1), Some(vec![w(&[1]), w(&[2])]));
        let q = pres("gens: g, h; rels: g^3");
        assert_eq!(f2_witness_search(&q, 2), None);
    }
}

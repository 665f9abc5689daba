//! Reidemeister–Schreier presentations of finite-index subgroups.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::coset::CosetTable;
use super::free_word::{generator_of, letter, FreeWord};
use super::presentation::Presentation;
use super::GroupError;

/// Presentation of the subgroup whose coset table is `t`, on the Schreier
/// generators of non-tree edges, pruned of generators that a short relator
/// expresses in terms of the others.
///
/// Schreier generator `g_c` stands for u_c · g · u_{c·g}⁻¹ where u_c is the
/// tree representative of coset c.
pub fn reidemeister_schreier(p: &Presentation, t: &CosetTable) -> Result<Presentation, GroupError> {
    let (raw, eliminators) = schreier_rewrite(p, t)?;
    Ok(prune_presentation(&raw, eliminators))
}

/// The unpruned Schreier presentation, with n(g − 1) + 1 generators.
pub fn schreier_presentation(p: &Presentation, t: &CosetTable) -> Result<Presentation, GroupError> {
    schreier_rewrite(p, t).map(|(q, _)| q)
}

/// Rewrites of single-generator power relators come first; their number is
/// returned alongside.
fn schreier_rewrite(p: &Presentation, t: &CosetTable) -> Result<(Presentation, usize), GroupError> {
    if t.ngens() != p.ngens() || !t.is_consistent() || !t.is_relator_closed(p) {
        return Err(GroupError::InconsistentTable);
    }
    let t = t.standardize(0).ok_or(GroupError::InconsistentTable)?;
    let tree = t.schreier_tree();
    let n = t.index();
    let g = p.ngens();
    // symbol[c][gen] = Schreier generator index for edge c --gen--> c·gen.
    let mut symbol = vec![vec![None; g]; n];
    let mut names = Vec::new();
    for c in 0..n {
        for (gen, slot) in symbol[c].iter_mut().enumerate() {
            let d = t.rows()[c][2 * gen];
            let is_tree = tree[d] == Some((c, 2 * gen)) || tree[c] == Some((d, 2 * gen + 1));
            if !is_tree {
                *slot = Some(names.len());
                names.push(format!("{}_{}", p.generators()[gen], c));
            }
        }
    }
    let is_power = |r: &FreeWord| r.letters().iter().all(|&l| l == r.letters()[0]);
    let mut ordered: Vec<&FreeWord> = p.relators().iter().filter(|r| is_power(r)).collect();
    let powers = ordered.len();
    ordered.extend(p.relators().iter().filter(|r| !is_power(r)));
    let mut relators = Vec::new();
    let mut eliminators = 0;
    for (ri, r) in ordered.into_iter().enumerate() {
        for c in 0..n {
            let mut v = Vec::new();
            let mut cur = c;
            for &l in r.letters() {
                let gen = generator_of(l);
                if l > 0 {
                    if let Some(s) = symbol[cur][gen] {
                        v.push(letter(s, false));
                    }
                    cur = t.rows()[cur][2 * gen];
                } else {
                    let prev = t.rows()[cur][2 * gen + 1];
                    if let Some(s) = symbol[prev][gen] {
                        v.push(letter(s, true));
                    }
                    cur = prev;
                }
            }
            let v = FreeWord(v).cyclic_reduce();
            if !v.is_empty() {
                eliminators += usize::from(ri < powers);
                relators.push(v);
            }
        }
    }
    Ok((Presentation::new(names, relators), eliminators))
}

/// Eliminates generators occurring exactly once in one of the first
/// `eliminators` relators, or forming a relator on their own, then removes
/// duplicate relators up to rotation and inversion. Surviving generators
/// keep their names.
pub fn prune_presentation(p: &Presentation, eliminators: usize) -> Presentation {
    let mut names: Vec<String> = p.generators().to_vec();
    let mut rels: Vec<FreeWord> = p.relators().to_vec();
    let mut usable: Vec<bool> = (0..rels.len()).map(|i| i < eliminators).collect();
    let mut alive = vec![true; names.len()];
    loop {
        let mut best: Option<(usize, usize, usize)> = None;
        for (ri, r) in rels.iter().enumerate() {
            if !(usable[ri] || r.len() == 1) || best.is_some_and(|(len, _, _)| len <= r.len()) {
                continue;
            }
            let mut counts = vec![0usize; names.len()];
            for &l in r.letters() {
                counts[generator_of(l)] += 1;
            }
            if let Some(gen) = counts.iter().position(|&k| k == 1) {
                best = Some((r.len(), ri, gen));
            }
        }
        let Some((_, ri, gen)) = best else { break };
        let r = rels.remove(ri);
        usable.remove(ri);
        // r = u · g^e · v  ⇒  g^e = u⁻¹ v⁻¹, so g = (v u)^{-e}.
        let pos = r.letters().iter().position(|&l| generator_of(l) == gen).expect("present");
        let e = if r.letters()[pos] > 0 { 1 } else { -1 };
        let u = FreeWord(r.letters()[..pos].to_vec());
        let v = FreeWord(r.letters()[pos + 1..].to_vec());
        let image = v.concat(&u).pow(-e).free_reduce();
        let mut images: Vec<FreeWord> = (0..names.len()).map(FreeWord::generator).collect();
        images[gen] = image;
        let substituted: Vec<(FreeWord, bool)> = rels
            .iter()
            .zip(&usable)
            .map(|(w, &u)| (w.substitute(&images).cyclic_reduce(), u))
            .filter(|(w, _)| !w.is_empty())
            .collect();
        (rels, usable) = substituted.into_iter().unzip();
        alive[gen] = false;
    }
    // Renumber surviving generators.
    let mut new_index = vec![usize::MAX; names.len()];
    let mut kept = Vec::new();
    for (i, name) in names.drain(..).enumerate() {
        if alive[i] {
            new_index[i] = kept.len();
            kept.push(name);
        }
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for r in rels {
        let r = FreeWord(
            r.letters()
                .iter()
                .map(|&l| letter(new_index[generator_of(l)], l < 0))
                .collect(),
        );
        if seen.insert(r.cyclic_key()) {
            out.push(r);
        }
    }
    Presentation::new(kept, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{abelianization, low_index_subgroups, todd_coxeter, DEFAULT_MAX_COSETS};

    fn pres(s: &str) -> Presentation {
        s.parse().unwrap()
    }

    #[test]
    fn index_one_returns_original() {
        let p = pres("gens: x, y; rels: x^3, y^4, (x*y)^2");
        let t = todd_coxeter(&p, &[p.parse_word("x").unwrap(), p.parse_word("y").unwrap()], 10).unwrap();
        assert_eq!(t.index(), 1);
        let q = schreier_presentation(&p, &t).unwrap();
        assert_eq!(q.ngens(), 2);
        assert_eq!(q.relators().len(), 3);
        assert_eq!(abelianization(&q), abelianization(&p));
    }

    #[test]
    fn generator_count_before_pruning() {
        let p = pres("gens: x, y; rels: x^3, y^4, (x*y)^2");
        for t in low_index_subgroups(&p, 4).unwrap() {
            let q = schreier_presentation(&p, &t).unwrap();
            assert_eq!(q.ngens(), t.index() * (p.ngens() - 1) + 1);
        }
    }

    #[test]
    fn s4_point_stabilizer_has_finite_abelianization() {
        let p = pres("gens: x, y; rels: x^3, y^4, (x*y)^2");
        let t = low_index_subgroups(&p, 4).unwrap();
        let t4 = t.iter().find(|t| t.index() == 4).unwrap();
        let q = reidemeister_schreier(&p, t4).unwrap();
        let a = abelianization(&q);
        // S3 abelianizes to Z2.
        assert!(a.is_finite());
        assert_eq!(a.order(), Some(2.into()));
    }

    #[test]
    fn trivial_subgroup_of_finite_group() {
        let p = pres("gens: x, y; rels: x^2, y^3, (x*y)^3");
        let t = todd_coxeter(&p, &[], DEFAULT_MAX_COSETS).unwrap();
        let q = reidemeister_schreier(&p, &t).unwrap();
        assert!(abelianization(&q).is_trivial());
    }

    #[test]
    fn rejects_bad_table() {
        let p = pres("gens: x; rels: x^3");
        let t = CosetTable::from_permutations(&[vec![1, 0]]).unwrap();
        assert_eq!(reidemeister_schreier(&p, &t), Err(GroupError::InconsistentTable));
    }
}

use gtg_core::algebra::snf;
use gtg_core::groups::{
    abelianization, low_index_subgroups, reidemeister_schreier, relation_matrix, todd_coxeter, FreeWord, Presentation,
    StallingsGraph, DEFAULT_MAX_COSETS,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

const FINITE: [(&str, usize); 5] = [
    ("gens: x, y; rels: x^3, y^4, (x*y)^2", 24),
    ("gens: x, y; rels: x^2, y^3, (x*y)^3", 12),
    ("gens: x, y; rels: x^2, y^3, (x*y)^5", 60),
    ("gens: x, Y; rels: x^3, Y^2, (x*Y)^2", 6),
    ("gens: a, b; rels: a^4, b^2, (a*b)^2", 8),
];

fn pres(s: &str) -> Presentation {
    s.parse().unwrap()
}

#[test]
fn order_independent_of_relator_order() {
    let mut rng = StdRng::seed_from_u64(11);
    for (text, order) in FINITE {
        let p = pres(text);
        for _ in 0..6 {
            let mut idx: Vec<usize> = (0..p.relators().len()).collect();
            idx.shuffle(&mut rng);
            let q = p.permute_relators(&idx);
            let t = todd_coxeter(&q, &[], DEFAULT_MAX_COSETS).unwrap();
            assert_eq!(t.index(), order, "{}", text);
            assert!(t.is_consistent() && t.is_relator_closed(&q));
        }
    }
}

#[test]
fn lagrange() {
    // [G : H] · |H| = |G|, with |H| from the Reidemeister–Schreier
    // presentation.
    for (text, order) in FINITE {
        let p = pres(text);
        for t in low_index_subgroups(&p, 6).unwrap() {
            let q = reidemeister_schreier(&p, &t).unwrap();
            let h = todd_coxeter(&q, &[], DEFAULT_MAX_COSETS).unwrap();
            assert_eq!(t.index() * h.index(), order, "{} index {}", text, t.index());
        }
    }
}

#[test]
fn subgroup_indices_from_generators() {
    let p = pres("gens: x, y; rels: x^3, y^4, (x*y)^2");
    let idx = |gens: &[&str]| {
        let sub: Vec<FreeWord> = gens.iter().map(|g| p.parse_word(g).unwrap()).collect();
        todd_coxeter(&p, &sub, DEFAULT_MAX_COSETS).unwrap().index()
    };
    assert_eq!(idx(&["x"]), 8);
    assert_eq!(idx(&["y"]), 6);
    assert_eq!(idx(&["x", "y"]), 1);
    assert_eq!(idx(&["x*y"]), 12);
}

#[test]
fn abelianization_via_relation_matrix() {
    let p = pres("gens: x, y; rels: x^3, y^4, (x*y^2)^2");
    assert_eq!(abelianization(&p), snf(&relation_matrix(&p)));
    // 3x = 0 and 2x + 4y = 2x = 0 kill x, leaving Z/4 from y.
    assert_eq!(abelianization(&p).to_string(), "Z/4");
}

fn random_word(rng: &mut StdRng, len: usize) -> FreeWord {
    let letters = [1, -1, 2, -2];
    FreeWord((0..len).map(|_| *letters.choose(rng).unwrap()).collect()).free_reduce()
}

#[test]
fn folding_is_confluent() {
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..60 {
        let n = rng.gen_range(1..=4);
        let words: Vec<FreeWord> = (0..n).map(|_| { let len = rng.gen_range(1..=8); random_word(&mut rng, len) }).collect();
        let mut first = StallingsGraph::from_words(&words);
        first.fold();
        let first = first.canonical();
        for seed in 0..4u64 {
            let mut order = StdRng::seed_from_u64(seed);
            let mut g = StallingsGraph::from_words(&words);
            g.fold_with(|n| order.gen_range(0..n));
            assert!(g.is_folded());
            assert_eq!(g.canonical(), first, "{:?}", words);
        }
    }
}

//! Computational content of the essential-cyclic case: the kernel of
//! Γ → Z₁₂ and the abelian quotients K/L ≅ Z⁴ and K/N ≅ Z³.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{CertifyError, Check};
use crate::algebra::{snf, IntegerMatrix};
use crate::groups::{
    free_product_normal_form, reidemeister_schreier, CosetTable, FreeWord, Presentation,
};
use crate::trace::{essential_cyclic_z12, has_essential_cyclic, trace_polynomial, Signature};
use crate::words::Word;

/// a₁ … a₆ as words in x (letter 1) and y (letter 2).
pub fn lemma31_generators() -> [FreeWord; 6] {
    let conj = |pre: &[i32], j: usize, post: &[i32]| {
        let mut v = pre.to_vec();
        v.extend(core::iter::repeat_n(2, j));
        v.push(1);
        v.extend(core::iter::repeat_n(-2, j));
        v.extend_from_slice(post);
        FreeWord(v)
    };
    [
        conj(&[], 1, &[-1]),
        conj(&[], 2, &[-1]),
        conj(&[], 3, &[-1]),
        conj(&[1], 1, &[-1, -1]),
        conj(&[1], 2, &[-1, -1]),
        conj(&[1], 3, &[-1, -1]),
    ]
}

/// y²aᵢy² as a product of a_j^{±1}: (j, exponent) pairs, zero-based.
const CONJUGATES: [&[(usize, i64)]; 6] = [
    &[(2, 1), (1, -1)],
    &[(1, -1)],
    &[(0, 1), (1, -1)],
    &[(1, 1), (5, 1), (4, -1), (1, -1)],
    &[(1, 1), (4, -1), (1, -1)],
    &[(1, 1), (3, 1), (4, -1), (1, -1)],
];

const NAMES: [&str; 6] = ["a1", "a2", "a3", "a4", "a5", "a6"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma31Report {
    pub word: Word,
    /// Images of x and y in Z₁₂.
    pub z12_images: (i64, i64),
    pub kl_free_rank: usize,
    pub kn_free_rank: usize,
    pub kernel_generators: usize,
    pub kernel_relators: usize,
    pub checks: Vec<Check>,
}

impl Lemma31Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn product(parts: &[(usize, i64)], a: &[FreeWord; 6]) -> FreeWord {
    parts
        .iter()
        .fold(FreeWord::empty(), |acc, &(j, e)| acc.concat(&a[j].pow(e)))
}

fn render(parts: &[(usize, i64)]) -> String {
    let mut s = String::new();
    for &(j, e) in parts {
        s.push_str(NAMES[j]);
        if e < 0 {
            s.push_str("^-1");
        }
    }
    s
}

/// φ on exponent vectors of K/[K, K]-images: row i is the image of aᵢ.
fn phi_matrix() -> [[i64; 6]; 6] {
    let mut m = [[0i64; 6]; 6];
    for (i, parts) in CONJUGATES.iter().enumerate() {
        for &(j, e) in parts.iter() {
            m[i][j] += e;
        }
    }
    m
}

fn apply(v: &[i64; 6], m: &[[i64; 6]; 6]) -> [i64; 6] {
    let mut out = [0i64; 6];
    for (i, &vi) in v.iter().enumerate() {
        for j in 0..6 {
            out[j] += vi * m[i][j];
        }
    }
    out
}

fn in_lattice(rows: &[Vec<i64>], v: &[i64; 6]) -> bool {
    let base = snf(&IntegerMatrix::from_rows(6, rows));
    let mut more = rows.to_vec();
    more.push(v.to_vec());
    snf(&IntegerMatrix::from_rows(6, &more)) == base
}

/// Coset table of ker(Γ → Z₁₂) with x ↦ a, y ↦ b.
pub fn kernel_table(images: (i64, i64)) -> CosetTable {
    let perm = |s: i64| (0..12).map(|c| (c + s).rem_euclid(12) as usize).collect::<Vec<_>>();
    CosetTable::from_permutations(&[perm(images.0), perm(images.1)]).expect("translations are permutations")
}

pub fn lemma31_suite(w: &Word) -> Result<Lemma31Report, CertifyError> {
    let report = trace_polynomial(w, Signature::Gamma)?;
    let images = match essential_cyclic_z12(w) {
        Some(ab) if has_essential_cyclic(&report) => ab,
        _ => return Err(CertifyError::Precondition(format!("{} has no essential cyclic representation", w))),
    };
    let mut checks = Vec::new();
    let a = lemma31_generators();
    let y2 = FreeWord(vec![2, 2]);
    for (i, parts) in CONJUGATES.iter().enumerate() {
        let lhs = y2.concat(&a[i]).concat(&y2);
        let rhs = product(parts, &a);
        let (l, r) = (free_product_normal_form(&lhs, (3, 4)), free_product_normal_form(&rhs, (3, 4)));
        checks.push(Check::new(
            format!("y2 {} y2 = {}", NAMES[i], render(parts)),
            l == r,
            format!("{} vs {}", l, r),
        ));
    }

    let phi = phi_matrix();
    let mut rows_l: Vec<Vec<i64>> = Vec::new();
    for (i, row) in phi.iter().enumerate() {
        let mut r = row.to_vec();
        r[i] += 1;
        rows_l.push(r);
    }
    let kl = snf(&IntegerMatrix::from_rows(6, &rows_l));
    let mut rows_n = rows_l.clone();
    rows_n.push(vec![0, 0, 0, 0, 0, 1]);
    let kn = snf(&IntegerMatrix::from_rows(6, &rows_n));
    checks.push(Check::new("K/L = Z^4", kl.free_rank == 4 && kl.torsion.is_empty(), format!("{}", kl)));
    checks.push(Check::new("K/N = Z^3", kn.free_rank == 3 && kn.torsion.is_empty(), format!("{}", kn)));

    let mut antipodal = true;
    let mut stable = true;
    for i in 0..6 {
        let mut e = [0i64; 6];
        e[i] = 1;
        let img = apply(&e, &phi);
        let mut sum = img;
        sum[i] += 1;
        antipodal &= in_lattice(&rows_n, &sum);
    }
    for r in &rows_n {
        let v: [i64; 6] = r.as_slice().try_into().expect("six columns");
        stable &= in_lattice(&rows_n, &apply(&v, &phi));
    }
    checks.push(Check::new("phi(N) = N", stable, "images of N-relations lie in N"));
    checks.push(Check::new("phi is antipodal on K/N", antipodal, "ai + phi(ai) in N for all i"));

    let p = Presentation::triangle(w);
    let table = kernel_table(images);
    let closed = table.is_relator_closed(&p);
    checks.push(Check::new(
        "Z12 map is a homomorphism",
        closed,
        format!("x -> {}, y -> {}", images.0, images.1),
    ));
    let in_kernel = a.iter().all(|ai| table.trace(0, ai) == 0);
    checks.push(Check::new("a1..a6 lie in K", in_kernel, "traced from the base coset"));
    let (gens, rels) = if closed {
        let k = reidemeister_schreier(&p, &table)?;
        (k.ngens(), k.relators().len())
    } else {
        (0, 0)
    };
    checks.push(Check::new(
        "K has 6 generators and deficiency zero",
        gens == 6 && rels == 6,
        format!("{} generators, {} relators", gens, rels),
    ));
    Ok(Lemma31Report {
        word: w.clone(),
        z12_images: images,
        kl_free_rank: kl.free_rank,
        kn_free_rank: kn.free_rank,
        kernel_generators: gens,
        kernel_relators: rels,
        checks,
    })
}

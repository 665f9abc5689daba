//! Syllable normal forms in Z_p * Z_q = ⟨x, y | xᵖ = y^q = 1⟩.

use core::fmt;

use alloc::vec::Vec;

use super::free_word::{generator_of, FreeWord};

/// Alternating syllables (generator, exponent) with exponents in
/// 1..order; the empty form is the identity.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NormalForm(pub Vec<(usize, u32)>);

impl NormalForm {
    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for &(g, e) in &self.0 {
            let name = ["x", "y"].get(g).copied().unwrap_or("?");
            if e == 1 {
                f.write_str(name)?;
            } else {
                write!(f, "{}{}", name, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Normal form of a word over two generators with the given orders.
pub fn free_product_normal_form(word: &FreeWord, orders: (u32, u32)) -> NormalForm {
    let order = |g: usize| if g == 0 { orders.0 } else { orders.1 };
    let mut stack: Vec<(usize, u32)> = Vec::new();
    for &l in word.letters() {
        let g = generator_of(l);
        let n = order(g);
        let step = if l > 0 { 1 } else { n - 1 };
        match stack.last_mut() {
            Some(top) if top.0 == g => {
                top.1 = (top.1 + step) % n;
                if top.1 == 0 {
                    stack.pop();
                }
            }
            _ => {
                if step % n != 0 {
                    stack.push((g, step % n));
                }
            }
        }
    }
    NormalForm(stack)
}

/// Equality in the free product.
pub fn equal_in_free_product(a: &FreeWord, b: &FreeWord, orders: (u32, u32)) -> bool {
    free_product_normal_form(a, orders) == free_product_normal_form(b, orders)
}

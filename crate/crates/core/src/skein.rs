//! Scalar shadows of the basic skein lemmas.

use crate::category::CategoryData;
use crate::verlinde::VerlindeElement;
use crate::{Error, Label, Result, C64};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Over,
    Under,
}

/// Scalar by which a loop labeled `i` around a strand labeled `j` acts:
/// `s_ij / d_j` over, `s̄_ij / d_j` under.
pub fn encircle(cat: &CategoryData, i: Label, j: Label, o: Orientation) -> C64 {
    let s = match o {
        Orientation::Over => cat.s(i, j),
        Orientation::Under => cat.sbar(i, j),
    };
    s / cat.d(j)
}

/// The regular coloring `Ω = Σ_i d_i x_i`.
pub fn omega_vector(cat: &CategoryData) -> VerlindeElement<'_> {
    VerlindeElement::from_coeffs(cat, cat.dims().to_vec()).expect("rank matches")
}

/// `(1/𝔇) Σ_i d_i s_ij / d_j`: an Ω-loop around `j`, normalized.
pub fn killing_ring(cat: &CategoryData, j: Label) -> C64 {
    let sum: C64 = (0..cat.rank()).map(|i| cat.d(i) * cat.s(i, j)).sum();
    sum / (cat.d(j) * cat.global_dim())
}

/// Multiplicity of `X_k` in `X_{l₁} ⊗ ⋯ ⊗ X_{l_n}` (left to right).
pub fn hom_dim(cat: &CategoryData, k: Label, objects: &[Label]) -> Result<u64> {
    let Some((&first, rest)) = objects.split_first() else {
        return Err(Error::InvalidArgument("hom_dim needs at least one object".into()));
    };
    let r = cat.rank();
    let mut acc = vec![0u64; r];
    acc[first] = 1;
    for &x in rest {
        let mut next = vec![0u64; r];
        for (m, &c) in acc.iter().enumerate().filter(|(_, c)| **c != 0) {
            for k in cat.channels(m, x) {
                next[k] = c
                    .checked_mul(cat.n(m, x, k) as u64)
                    .and_then(|t| next[k].checked_add(t))
                    .ok_or_else(|| Error::SizeGuard("hom_dim overflowed u64".into()))?;
            }
        }
        acc = next;
    }
    Ok(acc[k])
}

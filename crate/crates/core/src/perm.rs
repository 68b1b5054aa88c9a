//! Mirrored ℤ-permutations stored by their base window.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupContext, Generator};

/// An element of C̃ₙ given by `[w(1), …, w(2n)]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPermutation")]
pub struct MirroredPermutation {
    ctx: GroupContext,
    window: Vec<i64>,
}

#[derive(Deserialize)]
struct RawPermutation {
    ctx: GroupContext,
    window: Vec<i64>,
}

impl TryFrom<RawPermutation> for MirroredPermutation {
    type Error = Error;

    fn try_from(raw: RawPermutation) -> Result<Self> {
        MirroredPermutation::from_base_window(raw.ctx, raw.window)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DescentClass {
    Descent,
    Ascent,
    Neither,
}

impl MirroredPermutation {
    pub fn identity(ctx: GroupContext) -> Self {
        let window = (1..=ctx.width() as i64).collect();
        MirroredPermutation { ctx, window }
    }

    /// Validates residues and balance. Coset minimality and family
    /// membership are not required.
    pub fn from_base_window(ctx: GroupContext, entries: Vec<i64>) -> Result<Self> {
        let width = ctx.width();
        if entries.len() != width {
            return Err(Error::WindowLength { expected: width, got: entries.len() });
        }
        let big_n = ctx.modulus();
        let mut seen: Vec<Option<i64>> = vec![None; big_n as usize];
        for &e in &entries {
            let r = e.rem_euclid(big_n) as usize;
            if r == 0 {
                return Err(Error::ZeroResidue(e));
            }
            if let Some(prev) = seen[r] {
                return Err(Error::ResidueClash(prev, e));
            }
            seen[r] = Some(e);
        }
        for i in 1..=width {
            let sum = entries[i - 1] + entries[width - i];
            if sum != big_n {
                return Err(Error::BalanceViolation { i, sum });
            }
        }
        Ok(MirroredPermutation { ctx, window: entries })
    }

    /// A base window that is also a family member and a minimal coset representative.
    pub fn from_minimal_window(ctx: GroupContext, entries: Vec<i64>) -> Result<Self> {
        let w = Self::from_base_window(ctx, entries)?;
        if !w.family_membership(&ctx) {
            return Err(Error::ParityViolation);
        }
        if !w.is_minimal_coset_rep() {
            return Err(Error::NotMinimal);
        }
        Ok(w)
    }

    pub(crate) fn from_window_unchecked(ctx: GroupContext, window: Vec<i64>) -> Self {
        MirroredPermutation { ctx, window }
    }

    pub fn ctx(&self) -> GroupContext {
        self.ctx
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn into_window(self) -> Vec<i64> {
        self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v == i as i64 + 1)
    }

    /// `w(k)` for any integer `k`.
    pub fn evaluate(&self, k: i64) -> i64 {
        let big_n = self.ctx.modulus();
        let r = k.rem_euclid(big_n);
        if r == 0 {
            return k;
        }
        self.window[(r - 1) as usize] + (k - r)
    }

    /// The generator `s_g` itself as a mirrored permutation.
    pub fn generator(ctx: GroupContext, g: Generator) -> Self {
        let n = ctx.n;
        let big_n = ctx.modulus();
        let mut head: Vec<i64> = (1..=n as i64).collect();
        let i = g.index();
        match i {
            0 if ctx.family.forked_left() => {
                head[0] = -2;
                head[1] = -1;
            }
            0 => head[0] = -1,
            _ if i == n && ctx.family.forked_right() => {
                head[n - 2] = n as i64 + 1;
                head[n - 1] = n as i64 + 2;
            }
            _ if i == n => head[n - 1] = n as i64 + 1,
            _ => head.swap(i - 1, i),
        }
        let mut window = head.clone();
        window.extend(head.iter().rev().map(|v| big_n - v));
        MirroredPermutation { ctx, window }
    }

    /// `(self ∘ other)(k) = self(other(k))`.
    pub fn compose(&self, other: &MirroredPermutation) -> MirroredPermutation {
        let window = other.window.iter().map(|&v| self.evaluate(v)).collect();
        MirroredPermutation { ctx: self.ctx, window }
    }

    /// Left action `s_g · w`: interchanges values.
    pub fn apply_generator_left(&self, g: Generator) -> MirroredPermutation {
        Self::generator(self.ctx, g).compose(self)
    }

    /// `|{i ≤ 0 : w(i) ≥ 1}|`.
    pub fn count_nonpositive_to_positive(&self) -> i64 {
        let big_n = self.ctx.modulus();
        self.window.iter().map(|&v| (v - 1).div_euclid(big_n).max(0)).sum()
    }

    /// `|{i ≤ n : w(i) ≥ n + 1}|`.
    pub fn count_low_to_high(&self) -> i64 {
        let n = self.ctx.n as i64;
        let big_n = self.ctx.modulus();
        self.window
            .iter()
            .enumerate()
            .map(|(j, &v)| {
                let kmax = if (j as i64) < n { 0 } else { -1 };
                let kmin = ceil_div(n + 1 - v, big_n);
                (kmax - kmin + 1).max(0)
            })
            .sum()
    }

    /// Parity conditions defining membership in the family's affine group.
    pub fn family_membership(&self, ctx: &GroupContext) -> bool {
        let first = !ctx.family.forked_left() || self.count_nonpositive_to_positive() % 2 == 0;
        let second = !ctx.family.forked_right() || self.count_low_to_high() % 2 == 0;
        first && second
    }

    /// The family's sorting condition for minimal length coset representatives.
    pub fn is_minimal_coset_rep(&self) -> bool {
        let n = self.ctx.n;
        let w = &self.window;
        if w[..n].windows(2).any(|p| p[0] >= p[1]) {
            return false;
        }
        if self.ctx.family.forked_right() {
            w[n - 1] < w[n + 1]
        } else {
            w[n - 1] < w[n]
        }
    }

    /// Minimal representative of the coset `wW`.
    ///
    /// Sorting the window is a right multiplication by `Cₙ`; in the
    /// `B̃/D`, `D̃/D` families the entries at `n` and `n + 1` are swapped when
    /// that is needed to stay inside the original group.
    pub fn normalize(&self) -> MirroredPermutation {
        let n = self.ctx.n;
        let target_parity = self.count_low_to_high() % 2;
        let mut window = self.window.clone();
        window.sort_unstable();
        let mut out = MirroredPermutation { ctx: self.ctx, window };
        if self.ctx.family.forked_right() && out.count_low_to_high() % 2 != target_parity {
            out.window.swap(n - 1, n);
        }
        out
    }

    /// Entries of the window as a sorted vector; canonical key of the coset.
    pub fn sorted_key(&self) -> Vec<i64> {
        let mut key = self.window.clone();
        key.sort_unstable();
        key
    }

    /// Classifies `s_g` against the length of this representative.
    pub fn descent_class(&self, g: Generator) -> Result<DescentClass> {
        if !self.is_minimal_coset_rep() {
            return Err(Error::NotMinimal);
        }
        let moved = self.apply_generator_left(g).normalize();
        if moved == *self {
            return Ok(DescentClass::Neither);
        }
        let before = crate::peeling::length_of_permutation(self);
        let after = crate::peeling::length_of_permutation(&moved);
        Ok(if after < before { DescentClass::Descent } else { DescentClass::Ascent })
    }

    /// Comma separated window, e.g. `-11,-9,-1,8,16,18`.
    pub fn window_string(&self) -> String {
        self.window.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for MirroredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.window_string())
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

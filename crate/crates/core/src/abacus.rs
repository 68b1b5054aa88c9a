//! Balanced flush abaci on `2n` runners.
//!
//! An abacus is stored as the level of the lowest bead on each runner.
//! Runner `r` (1-based) holds the entries `mN + r`; by flushness the entry
//! at level `m` is a bead exactly when `m <= levels[r]`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Generator, GroupContext};
use crate::perm::MirroredPermutation;

/// An entry label of the abacus, never a multiple of `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position {
    value: i64,
    runner: usize,
    level: i64,
}

impl Position {
    pub fn new(ctx: &GroupContext, value: i64) -> Result<Self> {
        let big_n = ctx.modulus();
        let r = value.rem_euclid(big_n);
        if r == 0 {
            return Err(Error::InvalidPosition(value));
        }
        Ok(Position { value, runner: r as usize, level: (value - r) / big_n })
    }

    pub fn value(self) -> i64 {
        self.value
    }

    /// Runner in `1..=2n`.
    pub fn runner(self) -> usize {
        self.runner
    }

    pub fn level(self) -> i64 {
        self.level
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawAbacus")]
pub struct Abacus {
    ctx: GroupContext,
    levels: Vec<i64>,
}

#[derive(Deserialize)]
struct RawAbacus {
    ctx: GroupContext,
    levels: Vec<i64>,
}

impl TryFrom<RawAbacus> for Abacus {
    type Error = Error;

    fn try_from(raw: RawAbacus) -> Result<Self> {
        Abacus::from_levels(raw.ctx, raw.levels)
    }
}

impl Abacus {
    pub fn identity(ctx: GroupContext) -> Self {
        Abacus { ctx, levels: vec![0; ctx.width()] }
    }

    /// Validates balance, and evenness where the family demands it.
    pub fn from_levels(ctx: GroupContext, levels: Vec<i64>) -> Result<Self> {
        let width = ctx.width();
        if levels.len() != width {
            return Err(Error::LevelsLength { expected: width, got: levels.len() });
        }
        for i in 1..=width {
            if levels[i - 1] + levels[width - i] != 0 {
                return Err(Error::Unbalanced(i));
            }
        }
        let a = Abacus { ctx, levels };
        if ctx.family.requires_even() && !a.is_even() {
            return Err(Error::ParityViolation);
        }
        Ok(a)
    }

    /// Rebuilds the balanced abacus from the levels of runners `1..=n`.
    pub(crate) fn from_upper_levels(ctx: GroupContext, upper: &[i64]) -> Self {
        let mut levels = upper.to_vec();
        levels.extend(upper.iter().rev().map(|v| -v));
        Abacus { ctx, levels }
    }

    /// The balanced flush abacus whose beads beyond `N` are exactly `beads`.
    pub(crate) fn from_beads_beyond_n(ctx: GroupContext, beads: &[i64]) -> Self {
        let width = ctx.width();
        let mut levels = vec![0i64; width];
        for &b in beads {
            let p = Position::new(&ctx, b).expect("bead positions avoid multiples of N");
            let slot = &mut levels[p.runner - 1];
            *slot = (*slot).max(p.level);
        }
        for i in 1..=width {
            if levels[i - 1] > 0 {
                levels[width - i] = -levels[i - 1];
            }
        }
        Abacus { ctx, levels }
    }

    pub fn from_permutation(w: &MirroredPermutation) -> Self {
        let ctx = w.ctx();
        let mut levels = vec![0i64; ctx.width()];
        for &e in w.window() {
            let p = Position::new(&ctx, e).expect("validated window");
            levels[p.runner - 1] = p.level;
        }
        Abacus { ctx, levels }
    }

    /// The minimal coset representative whose window entries are the lowest beads.
    pub fn to_permutation(&self) -> Result<MirroredPermutation> {
        if self.ctx.family.requires_even() && !self.is_even() {
            return Err(Error::ParityViolation);
        }
        let n = self.ctx.n;
        let mut window = self.lowest_beads();
        window.sort_unstable();
        let w = MirroredPermutation::from_window_unchecked(self.ctx, window.clone());
        if self.ctx.family.forked_right() && w.count_low_to_high() % 2 != 0 {
            window.swap(n - 1, n);
            return Ok(MirroredPermutation::from_window_unchecked(self.ctx, window));
        }
        Ok(w)
    }

    pub fn ctx(&self) -> GroupContext {
        self.ctx
    }

    pub fn levels(&self) -> &[i64] {
        &self.levels
    }

    /// Level of the lowest bead on `runner` (1-based).
    pub fn level(&self, runner: usize) -> i64 {
        self.levels[runner - 1]
    }

    /// Labels of the lowest bead on each runner, in runner order.
    pub fn lowest_beads(&self) -> Vec<i64> {
        let big_n = self.ctx.modulus();
        self.levels
            .iter()
            .enumerate()
            .map(|(r, &l)| l * big_n + r as i64 + 1)
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.levels.iter().all(|&l| l == 0)
    }

    pub fn is_balanced(&self) -> bool {
        let w = self.ctx.width();
        (0..w).all(|i| self.levels[i] + self.levels[w - 1 - i] == 0)
    }

    pub fn bead_at(&self, p: Position) -> bool {
        p.level <= self.levels[p.runner - 1]
    }

    /// Bead test on a raw label; labels divisible by `N` are rejected.
    pub fn bead_at_value(&self, value: i64) -> Result<bool> {
        Ok(self.bead_at(Position::new(&self.ctx, value)?))
    }

    /// Like [`Abacus::bead_at_value`] but labels divisible by `N` count as absent.
    pub(crate) fn is_bead(&self, value: i64) -> bool {
        let big_n = self.ctx.modulus();
        let r = value.rem_euclid(big_n);
        r != 0 && (value - r) / big_n <= self.levels[r as usize - 1]
    }

    pub(crate) fn is_gap(&self, value: i64) -> bool {
        value.rem_euclid(self.ctx.modulus()) != 0 && !self.is_bead(value)
    }

    /// First gap in reading order.
    pub fn first_gap(&self) -> i64 {
        let big_n = self.ctx.modulus();
        self.levels
            .iter()
            .enumerate()
            .map(|(r, &l)| (l + 1) * big_n + r as i64 + 1)
            .min()
            .expect("at least one runner")
    }

    /// Last bead in reading order.
    pub fn last_bead(&self) -> i64 {
        *self.lowest_beads().iter().max().expect("at least one runner")
    }

    pub fn is_active_bead(&self, value: i64) -> bool {
        self.is_bead(value) && value > self.first_gap()
    }

    /// Entries in reading order from the first gap to the last bead; `true`
    /// marks a bead. Everything before is a bead, everything after a gap.
    pub fn reading_band(&self) -> impl Iterator<Item = (i64, bool)> + '_ {
        let big_n = self.ctx.modulus();
        (self.first_gap()..=self.last_bead())
            .filter(move |v| v.rem_euclid(big_n) != 0)
            .map(move |v| (v, self.is_bead(v)))
    }

    /// Number of gaps strictly between `lo` and `hi`.
    pub fn gaps_between(&self, lo: i64, hi: i64) -> usize {
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        ((lo + 1)..hi).filter(|&v| self.is_gap(v)).count()
    }

    /// Bead positions greater than `threshold`, in descending order.
    pub fn beads_beyond(&self, threshold: i64) -> Vec<i64> {
        let mut out: Vec<i64> = (threshold + 1..=self.last_bead())
            .filter(|&v| self.is_bead(v))
            .collect();
        out.reverse();
        out
    }

    /// The gap `2N - b` paired with an active bead `b`.
    pub fn symmetric_gap(&self, b: i64) -> Result<i64> {
        if !self.is_active_bead(b) {
            return Err(Error::NotActiveBead(b));
        }
        Ok(2 * self.ctx.modulus() - b)
    }

    /// Even number of beads after `N`.
    pub fn is_even(&self) -> bool {
        self.levels[..self.ctx.n].iter().map(|l| l.abs()).sum::<i64>() % 2 == 0
    }

    /// Runner swaps and level shifts realising `s_g`.
    pub fn apply_generator(&self, g: Generator) -> Abacus {
        let n = self.ctx.n;
        let w = 2 * n;
        let old = &self.levels;
        let mut new = old.clone();
        // 0-based runner indices below
        let i = g.index();
        if i == 0 && self.ctx.family.forked_left() {
            new[0] = old[w - 2] + 1;
            new[1] = old[w - 1] + 1;
            new[w - 2] = old[0] - 1;
            new[w - 1] = old[1] - 1;
        } else if i == 0 {
            new[0] = old[w - 1] + 1;
            new[w - 1] = old[0] - 1;
        } else if i == n && self.ctx.family.forked_right() {
            new.swap(n - 2, n);
            new.swap(n - 1, n + 1);
        } else if i == n {
            new.swap(n - 1, n);
        } else {
            new.swap(i - 1, i);
            new.swap(w - i - 1, w - i);
        }
        Abacus { ctx: self.ctx, levels: new }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Family;

    fn c3() -> GroupContext {
        GroupContext::new(Family::CtildeOverC, 3).unwrap()
    }

    fn example() -> Abacus {
        let w = MirroredPermutation::from_base_window(c3(), vec![-11, -9, -1, 8, 16, 18]).unwrap();
        Abacus::from_permutation(&w)
    }

    #[test]
    fn levels_of_example() {
        let a = example();
        assert_eq!(a.levels(), &[1, 2, -2, 2, -2, -1]);
        assert!(a.is_balanced());
        assert!(!a.is_even());
        assert_eq!(a.first_gap(), -4);
        assert_eq!(a.last_bead(), 18);
        assert_eq!(a.to_permutation().unwrap().window(), &[-11, -9, -1, 8, 16, 18]);
    }

    #[test]
    fn identity_abacus() {
        let a = Abacus::from_permutation(&MirroredPermutation::identity(c3()));
        assert!(a.is_identity());
        assert!(a.is_even());
        assert!(a.to_permutation().unwrap().is_identity());
    }

    #[test]
    fn beads_and_gaps_are_complementary() {
        let a = example();
        assert!(a.bead_at_value(16).unwrap());
        assert!(!a.bead_at_value(-4).unwrap());
        assert_eq!(a.bead_at_value(14), Err(Error::InvalidPosition(14)));
        for i in -20..20i64 {
            if i % 7 == 0 {
                continue;
            }
            assert_ne!(a.is_bead(7 + i), a.is_bead(7 - i), "offset {i}");
        }
    }

    #[test]
    fn symmetric_gap_of_example() {
        let a = example();
        assert_eq!(a.symmetric_gap(8), Ok(6));
        assert!(!a.is_bead(6));
        assert_eq!(a.symmetric_gap(6), Err(Error::NotActiveBead(6)));
        assert_eq!(a.symmetric_gap(-20), Err(Error::NotActiveBead(-20)));
    }

    #[test]
    fn generators_are_involutions() {
        let a = Abacus::identity(c3());
        assert_eq!(a.apply_generator(Generator(0)).levels(), &[1, 0, 0, 0, 0, -1]);
        let b = example();
        for g in c3().generators() {
            assert_eq!(a.apply_generator(g).apply_generator(g), a);
            assert_eq!(b.apply_generator(g).apply_generator(g), b);
        }
    }

    #[test]
    fn from_levels_validation() {
        assert_eq!(Abacus::from_levels(c3(), vec![1, 0, 0, 0, 0, 0]), Err(Error::Unbalanced(1)));
        assert_eq!(
            Abacus::from_levels(c3(), vec![0; 4]),
            Err(Error::LevelsLength { expected: 6, got: 4 })
        );
        let bb = GroupContext::new(Family::BtildeOverB, 3).unwrap();
        assert_eq!(Abacus::from_levels(bb, vec![1, 0, 0, 0, 0, -1]), Err(Error::ParityViolation));
        assert!(Abacus::from_levels(bb, vec![1, 1, 0, 0, -1, -1]).is_ok());
    }

    #[test]
    fn json_round_trip() {
        let a = example();
        let s = serde_json::to_string(&a).unwrap();
        let back: Abacus = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<Abacus>(
            r#"{"ctx":{"family":"C~/C","n":3},"levels":[1,0,0,0,0,0]}"#
        )
        .is_err());
    }
}

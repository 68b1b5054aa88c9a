//! Symmetric `2n`-cores, box residues and the generator action on cores.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abacus::Abacus;
use crate::error::{Error, Result};
use crate::group::{Generator, GroupContext};

/// A box of a Young diagram, 1-based, English convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoxCoord {
    pub i: usize,
    pub j: usize,
}

impl BoxCoord {
    pub fn new(i: usize, j: usize) -> Self {
        BoxCoord { i, j }
    }

    /// Content `j - i`.
    pub fn content(self) -> i64 {
        self.j as i64 - self.i as i64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ResidueValue {
    Fixed(usize),
    /// Blank cell of a strip: neither addable nor removable.
    Undetermined,
    /// Cell carrying two residues at once, stored as `(low, high)`.
    DoubleAddable(usize, usize),
}

impl ResidueValue {
    pub fn matches(self, r: usize) -> bool {
        match self {
            ResidueValue::Fixed(x) => x == r,
            ResidueValue::DoubleAddable(a, b) => a == r || b == r,
            ResidueValue::Undetermined => false,
        }
    }
}

impl fmt::Display for ResidueValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResidueValue::Fixed(r) => write!(f, "{r}"),
            ResidueValue::Undetermined => write!(f, "."),
            ResidueValue::DoubleAddable(a, b) => write!(f, "{a}/{b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CorePartition {
    #[serde(skip)]
    ctx: GroupContext,
    rows: Vec<usize>,
}

#[derive(Deserialize)]
struct RawCore {
    rows: Vec<usize>,
}

/// Which diagonal strip a cell of the upper half falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Strip {
    Plain,
    Main,
    /// Upper escalator or descalator whose row intersection starts at `first_col`.
    Band { first_col: usize, escalator: bool },
}

impl CorePartition {
    pub fn empty(ctx: GroupContext) -> Self {
        CorePartition { ctx, rows: Vec::new() }
    }

    /// Validates partition shape, symmetry, the core condition and evenness.
    pub fn new(ctx: GroupContext, rows: Vec<usize>) -> Result<Self> {
        if rows.contains(&0) || rows.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::NotAPartition);
        }
        let lam = CorePartition { ctx, rows };
        if lam.conjugate() != lam.rows {
            return Err(Error::NotSymmetric);
        }
        let two_n = ctx.width();
        for b in lam.boxes() {
            if lam.hook(b).is_multiple_of(two_n) {
                return Err(Error::NotACore);
            }
        }
        if ctx.family.requires_even() && !lam.is_even() {
            return Err(Error::ParityViolation);
        }
        Ok(lam)
    }

    pub fn from_json(ctx: GroupContext, json: &str) -> Result<Self> {
        let raw: RawCore = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        CorePartition::new(ctx, raw.rows)
    }

    #[cfg(test)]
    pub(crate) fn from_rows_unchecked(ctx: GroupContext, rows: Vec<usize>) -> Self {
        CorePartition { ctx, rows }
    }

    pub fn ctx(&self) -> GroupContext {
        self.ctx
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Length of row `i` (1-based), zero past the last row.
    pub fn row_len(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.rows.get(i - 1).copied().unwrap_or(0)
    }

    pub fn col_len(&self, j: usize) -> usize {
        self.rows.iter().take_while(|&&r| r >= j).count()
    }

    pub fn contains_box(&self, b: BoxCoord) -> bool {
        b.i >= 1 && b.j >= 1 && b.j <= self.row_len(b.i)
    }

    pub fn boxes(&self) -> impl Iterator<Item = BoxCoord> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| (1..=r).map(move |j| BoxCoord::new(i + 1, j)))
    }

    /// Number of boxes `(k, k)`.
    pub fn diagonal_count(&self) -> usize {
        self.rows.iter().enumerate().filter(|(i, &r)| r > *i).count()
    }

    pub fn is_even(&self) -> bool {
        self.diagonal_count().is_multiple_of(2)
    }

    fn conjugate(&self) -> Vec<usize> {
        (1..=self.row_len(1)).map(|j| self.col_len(j)).collect()
    }

    fn hook(&self, b: BoxCoord) -> usize {
        (self.row_len(b.i) - b.j) + (self.col_len(b.j) - b.i) + 1
    }

    pub fn hook_length(&self, b: BoxCoord) -> Result<usize> {
        if !self.contains_box(b) {
            return Err(Error::BoxOutside(b.i, b.j));
        }
        Ok(self.hook(b))
    }

    /// Boxes with hook length below `2n`.
    pub fn is_skew(&self, b: BoxCoord) -> bool {
        self.contains_box(b) && self.hook(b) < self.ctx.width()
    }

    pub fn from_abacus(a: &Abacus) -> CorePartition {
        let mut gaps = 0usize;
        let mut rows = Vec::new();
        for (_, bead) in a.reading_band() {
            if bead {
                rows.push(gaps);
            } else {
                gaps += 1;
            }
        }
        rows.reverse();
        CorePartition { ctx: a.ctx(), rows }
    }

    /// Inverse of [`CorePartition::from_abacus`]; the input was validated on construction.
    pub fn to_abacus(&self) -> Abacus {
        let ctx = self.ctx;
        let two_n = ctx.width() as i64;
        let mut levels = vec![i64::MIN; ctx.width()];
        let rows = self.rows.len() as i64;
        for t in 1..=rows + two_n {
            let q = self.row_len(t as usize) as i64 - t + two_n;
            let m = q.div_euclid(two_n);
            let s = q.rem_euclid(two_n);
            let slot = &mut levels[s as usize];
            *slot = (*slot).max(m);
        }
        Abacus::from_levels(ctx, levels).expect("symmetric cores give balanced abaci")
    }

    /// Residue of the fixed diagonal through `b`.
    pub fn fixed_residue(ctx: GroupContext, b: BoxCoord) -> usize {
        let n = ctx.n as i64;
        let d = b.content().rem_euclid(2 * n);
        (if d <= n { d } else { 2 * n - d }) as usize
    }

    fn strip(&self, i: usize, j: usize) -> Strip {
        let fam = self.ctx.family;
        let n = self.ctx.n as i64;
        let diff = j as i64 - i as i64;
        debug_assert!(diff >= 0);
        if fam.forked_left() {
            if diff <= 1 {
                return Strip::Main;
            }
            let k = (diff + 1).div_euclid(2 * n);
            let off = diff + 1 - 2 * n * k;
            if k >= 1 && off <= 2 {
                return Strip::Band { first_col: i + (2 * n * k) as usize - 1, escalator: false };
            }
        }
        if fam.forked_right() && diff >= n - 1 {
            let k = (diff - (n - 1)).div_euclid(2 * n);
            let off = diff - (n - 1) - 2 * n * k;
            if off <= 2 {
                return Strip::Band {
                    first_col: i + (n - 1 + 2 * n * k) as usize,
                    escalator: true,
                };
            }
        }
        Strip::Plain
    }

    /// Residue of the cell `b`, which may lie inside or outside the partition.
    pub fn residue(&self, b: BoxCoord) -> ResidueValue {
        let (i, j) = if b.j >= b.i { (b.i, b.j) } else { (b.j, b.i) };
        let n = self.ctx.n;
        match self.strip(i, j) {
            Strip::Plain => ResidueValue::Fixed(Self::fixed_residue(self.ctx, BoxCoord::new(i, j))),
            Strip::Main => {
                if i == j || (i + j) % 4 == 3 {
                    ResidueValue::Fixed(0)
                } else {
                    ResidueValue::Fixed(1)
                }
            }
            Strip::Band { first_col, escalator } => {
                let (lo, hi) = if escalator { (n - 1, n) } else { (1, 0) };
                let t = j - first_col;
                let row = self.row_len(i);
                if row + 1 < first_col || row > first_col + 2 {
                    return ResidueValue::Undetermined;
                }
                let c = row + 1 - first_col;
                let da = ResidueValue::DoubleAddable(lo.min(hi), lo.max(hi));
                match (c, t) {
                    (_, 1) => ResidueValue::Fixed(hi),
                    (0, 0) | (3, 2) => da,
                    (0, 2) | (3, 0) => ResidueValue::Undetermined,
                    (1, 0) | (2, 2) => ResidueValue::Fixed(lo),
                    _ => ResidueValue::Fixed(hi),
                }
            }
        }
    }

    /// Edge-connected components of cells of residue `r` on one side of the rim.
    fn components(&self, r: usize, inside: bool) -> Vec<Vec<BoxCoord>> {
        let bound = self.row_len(1).max(self.rows.len()) + 3;
        let wanted = |b: BoxCoord| self.contains_box(b) == inside && self.residue(b).matches(r);
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for i in 1..=bound {
            for j in 1..=bound {
                let start = BoxCoord::new(i, j);
                if seen.contains(&start) || !wanted(start) {
                    continue;
                }
                let mut comp = Vec::new();
                let mut stack = vec![start];
                seen.insert(start);
                while let Some(b) = stack.pop() {
                    comp.push(b);
                    let mut next = vec![BoxCoord::new(b.i + 1, b.j), BoxCoord::new(b.i, b.j + 1)];
                    if b.i > 1 {
                        next.push(BoxCoord::new(b.i - 1, b.j));
                    }
                    if b.j > 1 {
                        next.push(BoxCoord::new(b.i, b.j - 1));
                    }
                    for nb in next {
                        if nb.i <= bound && nb.j <= bound && !seen.contains(&nb) && wanted(nb) {
                            seen.insert(nb);
                            stack.push(nb);
                        }
                    }
                }
                out.push(comp);
            }
        }
        out
    }

    fn is_shape(cells: &BTreeSet<BoxCoord>) -> bool {
        cells.iter().all(|b| {
            (b.i == 1 || cells.contains(&BoxCoord::new(b.i - 1, b.j)))
                && (b.j == 1 || cells.contains(&BoxCoord::new(b.i, b.j - 1)))
        })
    }

    fn with_cells(&self, cells: &BTreeSet<BoxCoord>) -> CorePartition {
        let mut rows = Vec::new();
        for b in cells {
            if rows.len() < b.i {
                rows.resize(b.i, 0);
            }
            rows[b.i - 1] = rows[b.i - 1].max(b.j);
        }
        CorePartition { ctx: self.ctx, rows }
    }

    /// Adds every addable `g`-component or removes every removable one.
    pub fn apply_generator(&self, g: Generator) -> CorePartition {
        let r = g.index();
        let current: BTreeSet<BoxCoord> = self.boxes().collect();
        let removable: Vec<_> = self
            .components(r, true)
            .into_iter()
            .filter(|c| {
                let mut rest = current.clone();
                for b in c {
                    rest.remove(b);
                }
                Self::is_shape(&rest)
            })
            .collect();
        if !removable.is_empty() {
            let mut rest = current;
            for b in removable.iter().flatten() {
                rest.remove(b);
            }
            return self.with_cells(&rest);
        }
        let addable: Vec<_> = self
            .components(r, false)
            .into_iter()
            .filter(|c| {
                let mut more = current.clone();
                more.extend(c.iter().copied());
                Self::is_shape(&more)
            })
            .collect();
        let mut more = current;
        more.extend(addable.into_iter().flatten());
        self.with_cells(&more)
    }

    /// The containment order `self ⊵ mu`.
    pub fn contains(&self, mu: &CorePartition) -> bool {
        for b in mu.boxes() {
            let (i, j) = if b.j >= b.i { (b.i, b.j) } else { (b.j, b.i) };
            if self.strip(i, j) == Strip::Plain && !self.contains_box(b) {
                return false;
            }
        }
        // rows of the upper and main regions; the lower ones are their transposes
        // and agree by symmetry of both partitions
        let reach = (self.row_len(1).max(self.rows.len())).max(mu.row_len(1).max(mu.rows.len())) as i64;
        for a in self.region_offsets(reach) {
            for k in 1..=reach {
                let cells: Vec<BoxCoord> = (k + a..=k + a + 2)
                    .filter(|&j| j >= 1)
                    .map(|j| BoxCoord::new(k as usize, j as usize))
                    .collect();
                if !Self::clause(self, mu, &cells) {
                    return false;
                }
            }
        }
        true
    }

    /// Offsets `a` of the escalator and descalator strips `a..=a+2` of contents.
    fn region_offsets(&self, reach: i64) -> Vec<i64> {
        let n = self.ctx.n as i64;
        let mut out = Vec::new();
        if self.ctx.family.forked_left() {
            out.push(-1);
            out.extend((1..).map(|k| 2 * n * k - 1).take_while(|&a| a <= reach));
        }
        if self.ctx.family.forked_right() {
            out.extend((0..).map(|k| n - 1 + 2 * n * k).take_while(|&a| a <= reach));
        }
        out
    }

    fn clause(lam: &CorePartition, mu: &CorePartition, cells: &[BoxCoord]) -> bool {
        let m = cells.iter().filter(|&&b| mu.contains_box(b)).count();
        let l = cells.iter().filter(|&&b| lam.contains_box(b)).count();
        let full = cells.len();
        match m {
            0 => true,
            1 => l == 1 || l == full,
            2 => l == 2 || l == full,
            _ => l == full,
        }
    }

    /// `x ≤ w` in Bruhat order, i.e. `w ⊵ x`.
    pub fn bruhat_leq(x: &CorePartition, w: &CorePartition) -> bool {
        w.contains(x)
    }
}

impl fmt::Display for CorePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Family;
    use crate::perm::MirroredPermutation;

    fn ctx(f: Family, n: usize) -> GroupContext {
        GroupContext::new(f, n).unwrap()
    }

    fn core_of(f: Family, n: usize, window: Vec<i64>) -> CorePartition {
        let w = MirroredPermutation::from_base_window(ctx(f, n), window).unwrap();
        CorePartition::from_abacus(&Abacus::from_permutation(&w))
    }

    #[test]
    fn c3_example_core() {
        let lam = core_of(Family::CtildeOverC, 3, vec![-11, -9, -1, 8, 16, 18]);
        assert_eq!(lam.rows(), &[10, 9, 6, 5, 5, 3, 2, 2, 2, 1]);
        let again = CorePartition::new(lam.ctx(), lam.rows().to_vec()).unwrap();
        assert_eq!(again.to_abacus().levels(), &[1, 2, -2, 2, -2, -1]);
    }

    #[test]
    fn d5_example_core() {
        let lam = core_of(Family::DtildeOverD, 5, vec![-12, -7, -5, 2, 3, 8, 9, 16, 18, 23]);
        assert_eq!(lam.rows(), &[11, 8, 7, 4, 3, 3, 3, 2, 1, 1, 1]);
        assert_eq!(lam.residue(BoxCoord::new(1, 12)), ResidueValue::Fixed(1));
        let after = lam.apply_generator(Generator(0));
        assert_eq!(lam.size() - after.size(), 4);
        assert_eq!(lam.apply_generator(Generator(2)), lam);
        assert_eq!(lam.apply_generator(Generator(5)), lam);
    }

    #[test]
    fn validation() {
        let c = ctx(Family::CtildeOverC, 3);
        assert_eq!(CorePartition::new(c, vec![1, 2]), Err(Error::NotAPartition));
        assert_eq!(CorePartition::new(c, vec![2]), Err(Error::NotSymmetric));
        assert_eq!(CorePartition::new(c, vec![6, 2, 1, 1, 1, 1]), Err(Error::NotACore));
        let d = ctx(Family::DtildeOverD, 4);
        assert_eq!(CorePartition::new(d, vec![1]), Err(Error::ParityViolation));
        assert!(CorePartition::new(d, vec![2, 2]).is_ok());
    }

    #[test]
    fn hooks() {
        let c = ctx(Family::CtildeOverC, 3);
        let single = CorePartition::new(c, vec![1]).unwrap();
        assert_eq!(single.hook_length(BoxCoord::new(1, 1)), Ok(1));
        assert_eq!(single.hook_length(BoxCoord::new(1, 2)), Err(Error::BoxOutside(1, 2)));
        let stair = CorePartition::from_rows_unchecked(c, vec![3, 2, 1]);
        assert_eq!(stair.hook_length(BoxCoord::new(1, 1)), Ok(5));
        assert_eq!(stair.hook_length(BoxCoord::new(2, 1)), Ok(3));
    }

    #[test]
    fn fixed_residues_c3() {
        let lam = CorePartition::empty(ctx(Family::CtildeOverC, 3));
        let top: Vec<_> = (1..=8).map(|j| lam.residue(BoxCoord::new(1, j))).collect();
        let want: Vec<_> = [0, 1, 2, 3, 2, 1, 0, 1].iter().map(|&r| ResidueValue::Fixed(r)).collect();
        assert_eq!(top, want);
        assert_eq!(lam.residue(BoxCoord::new(3, 1)), ResidueValue::Fixed(2));
    }

    #[test]
    fn main_descalator_blocks() {
        let lam = CorePartition::empty(ctx(Family::BtildeOverB, 3));
        let r = |i, j| lam.residue(BoxCoord::new(i, j));
        assert_eq!(r(1, 2), ResidueValue::Fixed(0));
        assert_eq!(r(2, 3), ResidueValue::Fixed(1));
        assert_eq!(r(3, 2), ResidueValue::Fixed(1));
        assert_eq!(r(3, 4), ResidueValue::Fixed(0));
        let block = lam.apply_generator(Generator(0));
        assert_eq!(block.rows(), &[2, 2]);
    }

    #[test]
    fn contains_basics() {
        let lam = core_of(Family::DtildeOverD, 5, vec![-12, -7, -5, 2, 3, 8, 9, 16, 18, 23]);
        let empty = CorePartition::empty(lam.ctx());
        assert!(lam.contains(&lam));
        assert!(lam.contains(&empty));
        assert!(!empty.contains(&lam));
        assert!(CorePartition::bruhat_leq(&empty, &lam));
    }
}

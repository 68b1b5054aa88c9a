//! Central peeling, bounded diagrams and partitions, canonical words and
//! the length formulas.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::abacus::Abacus;
use crate::cores::{BoxCoord, CorePartition, ResidueValue};
use crate::error::{Error, Result};
use crate::group::{Generator, GroupContext};
use crate::perm::MirroredPermutation;

pub type BoxSet = BTreeSet<BoxCoord>;

/// Generator indices of a reduced expression; the leftmost letter acts last.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word {
    pub letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| format!("s{l}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `s0 s1 s0`, `0 1 0`, `s0s1s0` and comma separated forms.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned = s.replace(['s', ','], " ");
        let letters = cleaned
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad letter `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word { letters })
    }
}

/// Fork offsets: `-1` where the Coxeter graph forks at that end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Offsets {
    pub x0: i64,
    pub xn: i64,
}

impl Offsets {
    pub fn of(ctx: GroupContext) -> Self {
        Offsets { x0: ctx.x0(), xn: ctx.xn() }
    }
}

/// A bounded partition with an optional starred part.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BoundedPartition {
    #[serde(skip)]
    ctx: GroupContext,
    parts: Vec<usize>,
    star: Option<usize>,
}

#[derive(Deserialize)]
struct RawBounded {
    parts: Vec<usize>,
    #[serde(default)]
    star: Option<usize>,
}

impl BoundedPartition {
    /// Validates the size bounds, multiplicities and star placement for the family.
    ///
    /// A star on any part of the starrable size is moved to the last such part.
    pub fn new(ctx: GroupContext, parts: Vec<usize>, star: Option<usize>) -> Result<Self> {
        let bad = |m: String| Err(Error::MalformedBounded(m));
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return bad("parts must be positive and weakly decreasing".into());
        }
        let n = ctx.n;
        let (max, once) = match (ctx.family.forked_left(), ctx.family.forked_right()) {
            (false, false) => (2 * n, n),
            (true, true) => (2 * n - 2, n - 2),
            _ => (2 * n - 1, n - 1),
        };
        if let Some(&p) = parts.first() {
            if p > max {
                return bad(format!("part {p} exceeds {max}"));
            }
        }
        for size in 1..=once {
            if parts.iter().filter(|&&p| p == size).count() > 1 {
                return bad(format!("part {size} repeated"));
            }
        }
        let star = match star {
            None => None,
            Some(idx) => {
                let starrable = (n as i64 + ctx.x0()) as usize;
                if !ctx.family.forked_right() {
                    return bad("stars only occur in families with a right fork".into());
                }
                if parts.get(idx) != Some(&starrable) {
                    return bad(format!("only a part of size {starrable} may be starred"));
                }
                parts.iter().rposition(|&p| p == starrable)
            }
        };
        Ok(BoundedPartition { ctx, parts, star })
    }

    pub fn empty(ctx: GroupContext) -> Self {
        BoundedPartition { ctx, parts: Vec::new(), star: None }
    }

    pub fn from_json(ctx: GroupContext, json: &str) -> Result<Self> {
        let raw: RawBounded = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        BoundedPartition::new(ctx, raw.parts, raw.star)
    }

    /// Parses `(8,8,5*,4)`; parentheses and separators are optional.
    pub fn parse(ctx: GroupContext, s: &str) -> Result<Self> {
        let cleaned = s.replace(['(', ')', ','], " ");
        let mut parts = Vec::new();
        let mut star = None;
        for tok in cleaned.split_whitespace() {
            let (num, starred) = match tok.strip_suffix('*') {
                Some(t) => (t, true),
                None => (tok, false),
            };
            let v = num.parse::<usize>().map_err(|_| Error::Parse(format!("bad part `{tok}`")))?;
            if starred {
                if star.is_some() {
                    return Err(Error::MalformedBounded("more than one star".into()));
                }
                star = Some(parts.len());
            }
            parts.push(v);
        }
        BoundedPartition::new(ctx, parts, star)
    }

    pub fn ctx(&self) -> GroupContext {
        self.ctx
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn star(&self) -> Option<usize> {
        self.star
    }

    pub fn is_starred(&self) -> bool {
        self.star.is_some()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for BoundedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, p)| if self.star == Some(i) { format!("{p}*") } else { p.to_string() })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// One step of central peeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelStep {
    pub before: CorePartition,
    pub letter: usize,
    pub removed: Vec<BoxCoord>,
    pub recorded: BoxCoord,
}

fn reference_offset(ctx: GroupContext) -> usize {
    if ctx.family.forked_left() {
        1
    } else {
        0
    }
}

/// Peels `λ` down to the empty partition, one generator at a time.
pub fn peel_trace(lam: &CorePartition) -> Result<Vec<PeelStep>> {
    let ctx = lam.ctx();
    let n = ctx.n;
    let off = reference_offset(ctx);
    let mut steps = Vec::new();
    let mut cur = lam.clone();
    while !cur.is_empty() {
        let d = (1..=cur.rows().len()).filter(|&i| cur.row_len(i) >= i + off).count();
        if d == 0 {
            return Err(Error::StuckPeel);
        }
        let corner = BoxCoord::new(d, cur.row_len(d));
        let letter = match cur.residue(corner) {
            ResidueValue::Fixed(r) => r,
            ResidueValue::DoubleAddable(lo, hi) => {
                if hi == n {
                    n
                } else {
                    lo.min(hi)
                }
            }
            ResidueValue::Undetermined => return Err(Error::StuckPeel),
        };
        let next = cur.apply_generator(Generator(letter));
        if next.size() >= cur.size() {
            return Err(Error::StuckPeel);
        }
        let removed: Vec<BoxCoord> = cur.boxes().filter(|b| !next.contains_box(*b)).collect();
        let mut in_row: Vec<BoxCoord> = removed.iter().copied().filter(|b| b.i == d).collect();
        if in_row.len() > 1 {
            let two_n = 2 * n as i64;
            if letter == n && ctx.family.forked_right() {
                in_row.retain(|b| b.content() != n as i64);
            } else if letter == 0 && ctx.family.forked_left() {
                in_row.retain(|b| b.content() != 0 && b.content() != two_n);
            }
        }
        let recorded = *in_row.first().ok_or(Error::StuckPeel)?;
        steps.push(PeelStep { before: cur.clone(), letter, removed, recorded });
        cur = next;
    }
    Ok(steps)
}

/// Canonical reduced word and upper diagram of `λ`.
pub fn central_peel(lam: &CorePartition) -> Result<(Word, BoxSet)> {
    let steps = peel_trace(lam)?;
    let word = Word::new(steps.iter().map(|s| s.letter).collect());
    let boxes = steps.iter().map(|s| s.recorded).collect();
    Ok((word, boxes))
}

/// Rebuilds a core from a word, applying letters right to left; every
/// letter must add boxes.
pub fn core_from_word(ctx: GroupContext, word: &Word) -> Result<CorePartition> {
    let mut lam = CorePartition::empty(ctx);
    for &l in word.letters.iter().rev() {
        let g = ctx.generator(l)?;
        let next = lam.apply_generator(g);
        if next.size() <= lam.size() {
            return Err(Error::NonReducedWord);
        }
        lam = next;
    }
    Ok(lam)
}

/// Skew boxes left-justified against the main diagonal, minus the fork diagonals.
pub fn bounded_diagram(lam: &CorePartition) -> BoxSet {
    let ctx = lam.ctx();
    let n = ctx.n as i64;
    let mut out = BoxSet::new();
    for i in 1..=lam.rows().len() {
        let row = lam.row_len(i);
        if row < i {
            break;
        }
        let skew = ((i + 1)..=row).filter(|&j| lam.is_skew(BoxCoord::new(i, j))).count();
        for j in i..=i + skew {
            let b = BoxCoord::new(i, j);
            if ctx.x0() == -1 && b.content() == 0 {
                continue;
            }
            if ctx.xn() == -1 && b.content() == n {
                continue;
            }
            out.insert(b);
        }
    }
    out
}

fn rows_of(boxes: &BoxSet) -> Vec<usize> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for b in boxes {
        *counts.entry(b.i).or_default() += 1;
    }
    counts.into_values().filter(|&c| c > 0).collect()
}

/// Row sizes of the upper diagram, starred per the family's rule.
pub fn bounded_partition(lam: &CorePartition) -> Result<BoundedPartition> {
    let ctx = lam.ctx();
    let steps = peel_trace(lam)?;
    let upper: BoxSet = steps.iter().map(|s| s.recorded).collect();
    let mut parts = rows_of(&upper);
    parts.sort_unstable_by(|a, b| b.cmp(a));
    let mut star = None;
    if ctx.family.forked_right() {
        let starrable = (ctx.n as i64 + ctx.x0()) as usize;
        // rows of U in top to bottom order, with their rightmost recorded box
        let mut by_row: BTreeMap<usize, (usize, BoxCoord)> = BTreeMap::new();
        for s in &steps {
            let e = by_row.entry(s.recorded.i).or_insert((0, s.recorded));
            e.0 += 1;
            if s.recorded.j >= e.1.j {
                e.1 = s.recorded;
            }
        }
        let letter_of: BTreeMap<BoxCoord, usize> =
            steps.iter().map(|s| (s.recorded, s.letter)).collect();
        let last = by_row.values().rfind(|(c, _)| *c == starrable);
        if let Some((_, b)) = last {
            if letter_of[b] == ctx.n - 1 {
                star = parts.iter().rposition(|&p| p == starrable);
            }
        }
    }
    Ok(BoundedPartition { ctx, parts, star })
}

pub fn bounded_from_abacus(a: &Abacus) -> BoundedPartition {
    let ctx = a.ctx();
    let n = ctx.n as i64;
    let big_n = ctx.modulus();
    let off = Offsets::of(ctx);
    let mut parts = Vec::new();
    let mut star = None;
    for b in a.beads_beyond(big_n) {
        let part = if b > big_n + n {
            a.gaps_between(b - big_n, b) as i64 + 1 + off.x0 + off.xn
        } else {
            if b == big_n + n && ctx.family.forked_right() {
                star = Some(parts.len());
            }
            b - big_n + off.x0
        };
        if part > 0 {
            parts.push(part as usize);
        } else if star == Some(parts.len()) {
            star = None;
        }
    }
    BoundedPartition { ctx, parts, star }
}

/// Inverse of [`bounded_from_abacus`].
pub fn abacus_from_bounded(beta: &BoundedPartition) -> Result<Abacus> {
    let ctx = beta.ctx;
    let n = ctx.n as i64;
    let big_n = ctx.modulus();
    let off = Offsets::of(ctx);
    let is_small = |idx: usize, p: usize| {
        let p = p as i64;
        p < n + off.x0 + 1 + off.xn || (p == n + off.x0 && (off.xn == 0 || beta.star == Some(idx)))
    };
    let mut big = Vec::new();
    let mut small = Vec::new();
    for (idx, &p) in beta.parts.iter().enumerate() {
        if is_small(idx, p) {
            small.push(p as i64);
        } else {
            big.push(p as i64);
        }
    }
    let mut placed: BTreeSet<i64> = BTreeSet::new();
    for &p in &small {
        placed.insert(big_n + p - off.x0);
    }
    if ctx.family.requires_even() && beta.parts.len() % 2 == 1 {
        placed.insert(big_n + 1);
    }
    // mirror images below N of the gaps in N+1..=N+n
    let mirrored: BTreeSet<i64> =
        (1..=n).filter(|j| !placed.contains(&(big_n + j))).map(|j| big_n - j).collect();
    let bead = |placed: &BTreeSet<i64>, p: i64| placed.contains(&p) || mirrored.contains(&p);
    let mut prev: Option<i64> = None;
    for &p in big.iter().rev() {
        let rank = match prev {
            None => p - (n + off.x0 + off.xn),
            Some(q) => p - q + 1,
        };
        if rank < 1 {
            return Err(Error::MalformedBounded(format!("part {p} cannot be placed")));
        }
        let mut pos = placed.iter().next_back().copied().unwrap_or(big_n - 1);
        let mut seen = 0;
        while seen < rank {
            pos += 1;
            if pos % big_n != 0 && bead(&placed, pos - big_n) {
                seen += 1;
            }
        }
        placed.insert(pos);
        prev = Some(p);
    }
    let beads: Vec<i64> = placed.into_iter().collect();
    let a = Abacus::from_beads_beyond_n(ctx, &beads);
    if bounded_from_abacus(&a) != *beta {
        return Err(Error::MalformedBounded(format!("{beta} is not in the image")));
    }
    Ok(a)
}

/// Residues of the left-justified boxes of `β`, row by row.
pub fn residue_filling(beta: &BoundedPartition) -> Vec<Vec<usize>> {
    let ctx = beta.ctx;
    let n = ctx.n;
    let parts = &beta.parts;
    let alternating = |row: usize, col: usize| -> usize {
        let above = parts[..row].iter().filter(|&&p| p >= col).count();
        above % 2
    };
    // the column whose residue depends on the star, and its row length
    let forked_col = if ctx.family.forked_left() { n - 1 } else { n };
    let forked_rows: Vec<usize> =
        (0..parts.len()).filter(|&r| parts[r] == forked_col).collect();
    let forked = |row: usize| -> usize {
        match forked_rows.iter().position(|&r| r == row) {
            None => n - 1,
            Some(k) => {
                let from_bottom = forked_rows.len() - 1 - k;
                let bottom = if beta.star.is_some() { n - 1 } else { n };
                let other = if bottom == n { n - 1 } else { n };
                if from_bottom.is_multiple_of(2) {
                    bottom
                } else {
                    other
                }
            }
        }
    };
    let cell = |row: usize, col: usize| -> usize {
        match (ctx.family.forked_left(), ctx.family.forked_right()) {
            (false, false) => {
                if col <= n + 1 {
                    col - 1
                } else {
                    2 * n + 1 - col
                }
            }
            (true, false) => {
                if col == 1 || col == 2 * n - 1 {
                    alternating(row, col)
                } else if col <= n {
                    col
                } else {
                    2 * n - col
                }
            }
            (false, true) => {
                if col < n {
                    col - 1
                } else if col == n {
                    forked(row)
                } else if col == n + 1 {
                    n
                } else {
                    2 * n - col
                }
            }
            (true, true) => {
                if col == 1 || col == 2 * n - 2 {
                    alternating(row, col)
                } else if col < n - 1 {
                    col
                } else if col == n - 1 {
                    forked(row)
                } else if col == n {
                    n
                } else {
                    2 * n - col - 1
                }
            }
        }
    };
    parts
        .iter()
        .enumerate()
        .map(|(r, &p)| (1..=p).map(|c| cell(r, c)).collect())
        .collect()
}

/// Reads a filling right to left in rows, bottom row first.
pub fn reading_word(filling: &[Vec<usize>]) -> Word {
    Word::new(filling.iter().rev().flat_map(|row| row.iter().rev().copied()).collect())
}

/// Length from gap counts between paired beads.
pub fn length_from_abacus(a: &Abacus) -> usize {
    let ctx = a.ctx();
    let n = ctx.n as i64;
    let big_n = ctx.modulus();
    let off = Offsets::of(ctx);
    let lowest = a.lowest_beads();
    let mut total: i64 = 0;
    for i in 1..=ctx.n {
        let (p, q) = (lowest[i - 1], lowest[2 * ctx.n - i]);
        let top = p.max(q);
        if top > big_n + n {
            let runner = top.rem_euclid(big_n);
            let paired = if runner <= n { big_n + runner } else { runner };
            total += a.gaps_between(paired, top) as i64;
        }
    }
    for b in a.beads_beyond(big_n) {
        total += if b > big_n + n { 1 + off.x0 + off.xn } else { b - big_n + off.x0 };
    }
    total as usize
}

/// Runner label of the last box of row `t`, where `row` may be zero.
fn end_runner(two_n: i64, row: usize, t: usize) -> i64 {
    (row as i64 - t as i64).rem_euclid(two_n) + 1
}

/// Topmost row ending on runner `i` or its partner.
fn longest_row_on(lam: &CorePartition, i: usize) -> Option<usize> {
    let two_n = lam.ctx().width() as i64;
    let pair = [i as i64, two_n + 1 - i as i64];
    (1..=lam.rows().len()).find(|&t| pair.contains(&end_runner(two_n, lam.row_len(t), t)))
}

/// Row data behind [`length_from_core`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreLengthTerms {
    /// For each runner pair `i = 1..=n`, the topmost row ending on it and the
    /// short row on the same runner, when both exist.
    pub pairs: Vec<Option<(usize, usize)>>,
    /// Rows reaching content `n` or beyond.
    pub d: usize,
}

pub fn core_length_terms(lam: &CorePartition) -> CoreLengthTerms {
    let n = lam.ctx().n;
    let two_n = lam.ctx().width() as i64;
    if lam.rows().first().is_none_or(|&r| r <= n) {
        return CoreLengthTerms { pairs: vec![None; n], d: 0 };
    }
    let pairs = (1..=n)
        .map(|i| {
            let top = longest_row_on(lam, i)?;
            let runner = end_runner(two_n, lam.row_len(top), top);
            let reach = lam.rows().len().max(n);
            let low = (1..=reach).find(|&t| {
                let c = lam.row_len(t) as i64 - t as i64;
                (-(n as i64)..n as i64).contains(&c) && end_runner(two_n, lam.row_len(t), t) == runner
            })?;
            Some((top, low))
        })
        .collect();
    let d = (1..=lam.rows().len())
        .filter(|&t| lam.row_len(t) as i64 - t as i64 >= n as i64)
        .count();
    CoreLengthTerms { pairs, d }
}

/// Length from row data of the core.
pub fn length_from_core(lam: &CorePartition) -> usize {
    let off = Offsets::of(lam.ctx());
    let terms = core_length_terms(lam);
    let mut total: i64 = terms
        .pairs
        .iter()
        .flatten()
        .map(|&(top, low)| lam.row_len(top) as i64 - lam.row_len(low) as i64)
        .sum();
    total += (1 + off.x0 + off.xn) * terms.d as i64;
    total += (terms.d + 1..=lam.rows().len())
        .map(|i| (lam.row_len(i) as i64 - i as i64 + 1 + off.x0).max(0))
        .sum::<i64>();
    total as usize
}

/// Per-runner-pair rim walk data: `(R(i), h(i))`, `None` when the pair
/// contributes nothing.
pub fn rim_walks(lam: &CorePartition) -> Vec<Option<(usize, usize)>> {
    let ctx = lam.ctx();
    let two_n = ctx.width() as i64;
    let rows = lam.rows().len();
    // the rim box of each content, keyed by content
    let rim_row = |c: i64| -> Option<usize> {
        (1..=rows).find(|&t| {
            let j = t as i64 + c;
            j >= 1
                && (j as usize) <= lam.row_len(t)
                && !lam.contains_box(BoxCoord::new(t + 1, j as usize + 1))
        })
    };
    (1..=ctx.n)
        .map(|i| {
            let top = longest_row_on(lam, i)?;
            let c_b = lam.row_len(top) as i64 - top as i64;
            if c_b < 0 {
                return None;
            }
            let runner = end_runner(two_n, lam.row_len(top), top);
            let met: BTreeSet<usize> = (i as i64 - 1..=c_b).filter_map(rim_row).collect();
            let h = met
                .into_iter()
                .filter(|&t| end_runner(two_n, lam.row_len(t), t) != runner)
                .count();
            Some((top, h))
        })
        .collect()
}

/// Length from rim walks and the fork diagonals.
pub fn length_from_rimwalk(lam: &CorePartition) -> usize {
    let ctx = lam.ctx();
    let off = Offsets::of(ctx);
    let mut total: i64 = rim_walks(lam)
        .into_iter()
        .flatten()
        .map(|(top, h)| lam.row_len(top) as i64 - top as i64 + 1 - h as i64)
        .sum();
    total += off.x0 * boxes_on_diagonal(lam, 0) as i64 + off.xn * boxes_on_diagonal(lam, ctx.n as i64) as i64;
    total as usize
}

/// Number of boxes of content `k`.
pub fn boxes_on_diagonal(lam: &CorePartition, k: i64) -> usize {
    (1..=lam.rows().len())
        .filter(|&t| {
            let j = t as i64 + k;
            j >= 1 && lam.row_len(t) as i64 >= j
        })
        .count()
}

/// Coxeter length of a minimal coset representative.
pub fn length_of_permutation(w: &MirroredPermutation) -> usize {
    length_from_abacus(&Abacus::from_permutation(w))
}

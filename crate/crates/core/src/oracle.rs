//! Brute-force ground truth: Cayley graph BFS over minimal coset
//! representatives and Bruhat comparison through the lifting property.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::GroupContext;
use crate::perm::MirroredPermutation;

/// Minimal coset representatives up to a length bound, with BFS lengths.
#[derive(Debug, Clone)]
pub struct LengthTable {
    ctx: GroupContext,
    max_len: usize,
    lengths: HashMap<Vec<i64>, usize>,
    /// Elements by length, each level sorted by window.
    levels: Vec<Vec<MirroredPermutation>>,
}

#[derive(Serialize)]
struct TableEntry<'a> {
    window: &'a [i64],
    length: usize,
}

#[derive(Serialize)]
struct TableDump<'a> {
    ctx: GroupContext,
    max_len: usize,
    entries: Vec<TableEntry<'a>>,
}

/// Left Cayley graph BFS from the identity, normalising after each step.
pub fn enumerate_quotient(ctx: GroupContext, max_len: usize) -> LengthTable {
    let identity = MirroredPermutation::identity(ctx);
    let mut lengths = HashMap::new();
    lengths.insert(identity.sorted_key(), 0);
    let mut levels = vec![vec![identity]];
    for len in 0..max_len {
        let mut next = Vec::new();
        for w in &levels[len] {
            for g in ctx.generators() {
                let v = w.apply_generator_left(g).normalize();
                let key = v.sorted_key();
                if let std::collections::hash_map::Entry::Vacant(e) = lengths.entry(key) {
                    e.insert(len + 1);
                    next.push(v);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort_by(|a, b| a.window().cmp(b.window()));
        levels.push(next);
    }
    LengthTable { ctx, max_len, lengths, levels }
}

/// BFS length of a single element, searching at most `limit` levels.
pub fn bfs_length(w: &MirroredPermutation, limit: usize) -> Option<usize> {
    let target = w.normalize().sorted_key();
    let ctx = w.ctx();
    let mut seen = HashMap::new();
    let start = MirroredPermutation::identity(ctx);
    seen.insert(start.sorted_key(), 0usize);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        let len = seen[&v.sorted_key()];
        if v.sorted_key() == target {
            return Some(len);
        }
        if len == limit {
            continue;
        }
        for g in ctx.generators() {
            let u = v.apply_generator_left(g).normalize();
            let key = u.sorted_key();
            if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(key) {
                e.insert(len + 1);
                queue.push_back(u);
            }
        }
    }
    None
}

impl LengthTable {
    pub fn ctx(&self) -> GroupContext {
        self.ctx
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    pub fn length(&self, w: &MirroredPermutation) -> Option<usize> {
        self.lengths.get(&w.sorted_key()).copied()
    }

    /// Number of elements of each length.
    pub fn counts(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.len()).collect()
    }

    /// Elements in length-lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = &MirroredPermutation> {
        self.levels.iter().flatten()
    }

    pub fn level(&self, len: usize) -> &[MirroredPermutation] {
        self.levels.get(len).map_or(&[], |l| l.as_slice())
    }

    pub fn to_json(&self) -> String {
        let entries = self
            .elements()
            .map(|w| TableEntry { window: w.window(), length: self.lengths[&w.sorted_key()] })
            .collect();
        let dump = TableDump { ctx: self.ctx, max_len: self.max_len, entries };
        serde_json::to_string(&dump).expect("table serialises")
    }

    /// A Bruhat comparator backed by this table.
    pub fn bruhat(&self) -> LiftingOracle<'_> {
        LiftingOracle { table: self, memo: HashMap::new() }
    }
}

/// Memoised lifting-property recursion.
pub struct LiftingOracle<'a> {
    table: &'a LengthTable,
    memo: HashMap<(Vec<i64>, Vec<i64>), bool>,
}

impl LiftingOracle<'_> {
    /// `x ≤ w` in Bruhat order.
    pub fn leq(&mut self, x: &MirroredPermutation, w: &MirroredPermutation) -> Result<bool> {
        let lx = self.table.length(x).ok_or(Error::NotEnumerated)?;
        let lw = self.table.length(w).ok_or(Error::NotEnumerated)?;
        Ok(self.leq_known(x, lx, w, lw))
    }

    fn leq_known(&mut self, x: &MirroredPermutation, lx: usize, w: &MirroredPermutation, lw: usize) -> bool {
        if lx > lw {
            return false;
        }
        if lw == 0 {
            return lx == 0;
        }
        let key = (x.sorted_key(), w.sorted_key());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let ctx = self.table.ctx();
        let (s, sw) = ctx
            .generators()
            .map(|g| (g, w.apply_generator_left(g).normalize()))
            .find(|(_, v)| self.table.length(v) == Some(lw - 1))
            .expect("every non-identity element has a descent");
        let sx = x.apply_generator_left(s).normalize();
        let (y, ly) = match self.table.length(&sx) {
            Some(l) if l < lx => (sx, l),
            _ => (x.clone(), lx),
        };
        let out = self.leq_known(&y, ly, &sw, lw - 1);
        self.memo.insert(key, out);
        out
    }
}

/// Bruhat comparison against a table; errors if either element is missing.
pub fn bruhat_leq_lifting(
    x: &MirroredPermutation,
    w: &MirroredPermutation,
    table: &LengthTable,
) -> Result<bool> {
    table.bruhat().leq(x, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Family, Generator};

    fn ctx(f: Family, n: usize) -> GroupContext {
        GroupContext::new(f, n).unwrap()
    }

    #[test]
    fn small_tables() {
        let c = ctx(Family::CtildeOverC, 2);
        assert_eq!(enumerate_quotient(c, 0).len(), 1);
        let t = enumerate_quotient(c, 1);
        assert_eq!(t.counts(), vec![1, 1]);
        let s0 = MirroredPermutation::identity(c).apply_generator_left(Generator(0));
        assert_eq!(t.length(&s0), Some(1));
    }

    #[test]
    fn neighbours_differ_by_one() {
        for f in Family::ALL {
            let c = ctx(f, f.min_rank());
            let t = enumerate_quotient(c, 6);
            for w in t.elements() {
                let lw = t.length(w).unwrap();
                for g in c.generators() {
                    let v = w.apply_generator_left(g).normalize();
                    if let Some(lv) = t.length(&v) {
                        assert!(lv.abs_diff(lw) <= 1);
                        assert_eq!(lv == lw, v == *w);
                    }
                }
            }
        }
    }

    #[test]
    fn single_lookup_matches_table() {
        let c = ctx(Family::DtildeOverD, 4);
        let t = enumerate_quotient(c, 5);
        for w in t.level(5) {
            assert_eq!(bfs_length(w, 10), Some(5));
        }
    }

    #[test]
    fn lifting_basics() {
        let c = ctx(Family::BtildeOverD, 3);
        let t = enumerate_quotient(c, 5);
        let mut b = t.bruhat();
        let e = MirroredPermutation::identity(c);
        for w in t.elements() {
            assert!(b.leq(&e, w).unwrap());
            assert!(b.leq(w, w).unwrap());
        }
        let far = MirroredPermutation::from_base_window(c, vec![-20, 2, 3, 4, 5, 27]);
        if let Ok(far) = far {
            assert_eq!(b.leq(&far, &e), Err(Error::NotEnumerated));
        }
    }

    #[test]
    fn json_dump() {
        let t = enumerate_quotient(ctx(Family::CtildeOverC, 2), 1);
        assert_eq!(
            t.to_json(),
            r#"{"ctx":{"family":"C~/C","n":2},"max_len":1,"entries":[{"window":[1,2,3,4],"length":0},{"window":[-1,2,3,6],"length":1}]}"#
        );
    }
}

//! Exhaustive cross-checks of every model against the BFS oracle.

use affine_abacus::cores::CorePartition;
use affine_abacus::oracle::enumerate_quotient;
use affine_abacus::peeling::*;
use affine_abacus::root::{coordinates, from_coordinates};
use affine_abacus::*;

fn contexts() -> Vec<GroupContext> {
    [
        (Family::CtildeOverC, 2),
        (Family::CtildeOverC, 3),
        (Family::BtildeOverB, 3),
        (Family::BtildeOverD, 3),
        (Family::DtildeOverD, 4),
    ]
    .into_iter()
    .map(|(f, n)| GroupContext::new(f, n).unwrap())
    .collect()
}

#[test]
fn lengths_and_round_trips() {
    for ctx in contexts() {
        let table = enumerate_quotient(ctx, 8);
        let mut seen_bounded = std::collections::HashSet::new();
        for w in table.elements() {
            let len = table.length(w).unwrap();
            assert!(w.is_minimal_coset_rep(), "{ctx} {w}");
            let a = Abacus::from_permutation(w);
            assert_eq!(a.to_permutation().unwrap(), *w, "{ctx} {w}");
            let lam = CorePartition::from_abacus(&a);
            assert_eq!(CorePartition::new(ctx, lam.rows().to_vec()).as_ref(), Ok(&lam), "{ctx} {w}");
            assert_eq!(lam.to_abacus(), a, "{ctx} {w}");
            assert_eq!(from_coordinates(&coordinates(&a)).unwrap(), a);
            let (word, boxes) = central_peel(&lam).unwrap();
            assert_eq!(word.len(), len, "{ctx} {w} word {word}");
            assert_eq!(boxes, bounded_diagram(&lam), "{ctx} {w} {lam}");
            assert_eq!(core_from_word(ctx, &word).unwrap(), lam, "{ctx} {w}");
            let beta = bounded_partition(&lam).unwrap();
            assert_eq!(bounded_from_abacus(&a), beta, "{ctx} {w} {lam}");
            assert_eq!(abacus_from_bounded(&beta).as_ref(), Ok(&a), "{ctx} {w} {beta}");
            assert!(seen_bounded.insert(beta.to_string()));
            assert_eq!(reading_word(&residue_filling(&beta)), word, "{ctx} {w} {beta}");
            assert_eq!(length_from_abacus(&a), len, "{ctx} {w}");
            assert_eq!(length_from_core(&lam), len, "{ctx} {w} {lam}");
            assert_eq!(length_from_rimwalk(&lam), len, "{ctx} {w} {lam}");
        }
    }
}

#[test]
fn actions_commute() {
    for ctx in contexts() {
        let table = enumerate_quotient(ctx, 6);
        for w in table.elements() {
            let a = Abacus::from_permutation(w);
            let lam = CorePartition::from_abacus(&a);
            for g in ctx.generators() {
                let moved = w.apply_generator_left(g).normalize();
                assert_eq!(Abacus::from_permutation(&moved), a.apply_generator(g), "{ctx} {w} s{}", g.0);
                assert_eq!(
                    CorePartition::from_abacus(&a.apply_generator(g)),
                    lam.apply_generator(g),
                    "{ctx} {w} {lam} s{}",
                    g.0
                );
                assert_eq!(coordinates(&a.apply_generator(g)), coordinates(&a).reflect(g));
            }
        }
    }
}

fn bruhat_mismatches(ctx: GroupContext, max_len: usize) -> Vec<(String, String)> {
    let table = enumerate_quotient(ctx, max_len);
    let mut oracle = table.bruhat();
    let elems: Vec<_> = table.elements().cloned().collect();
    let cores: Vec<_> =
        elems.iter().map(|w| CorePartition::from_abacus(&Abacus::from_permutation(w))).collect();
    let mut out = Vec::new();
    for (x, cx) in elems.iter().zip(&cores) {
        for (w, cw) in elems.iter().zip(&cores) {
            if CorePartition::bruhat_leq(cx, cw) != oracle.leq(x, w).unwrap() {
                out.push((cx.to_string(), cw.to_string()));
            }
        }
    }
    out
}

#[test]
fn bruhat_agrees_without_right_fork() {
    for ctx in contexts().into_iter().filter(|c| !c.family.forked_right()) {
        assert_eq!(bruhat_mismatches(ctx, 6), vec![], "{ctx}");
    }
}

/// With a right fork, containment accepts a few pairs that are incomparable.
/// In each, the smaller core ends its first row inside the corner escalator
/// and its second row just before the next one.
#[test]
fn right_fork_containment_gaps() {
    let b3 = GroupContext::new(Family::BtildeOverD, 3).unwrap();
    let pairs = |v: &[(&str, &str)]| v.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect::<Vec<_>>();
    assert_eq!(
        bruhat_mismatches(b3, 6),
        pairs(&[("(4,3,2,1)", "(5,5,2,2,2)"), ("(3,3,2)", "(5,4,2,2,1)")])
    );
    let d4 = GroupContext::new(Family::DtildeOverD, 4).unwrap();
    assert_eq!(
        bruhat_mismatches(d4, 6),
        pairs(&[("(5,4,2,2,1)", "(6,6,2,2,2,2)"), ("(4,4,2,2)", "(6,5,2,2,2,1)")])
    );
    let b4 = GroupContext::new(Family::BtildeOverD, 4).unwrap();
    assert_eq!(bruhat_mismatches(b4, 6), vec![]);
}

fn subword_leq(x: &MirroredPermutation, w: &MirroredPermutation) -> bool {
    let ctx = w.ctx();
    let lam = CorePartition::from_abacus(&Abacus::from_permutation(w));
    let word = central_peel(&lam).unwrap().0;
    let l = word.len();
    (0u32..1 << l).any(|mask| {
        let mut p = MirroredPermutation::identity(ctx);
        for k in (0..l).rev() {
            if mask >> k & 1 == 1 {
                p = p.apply_generator_left(Generator(word.letters[k]));
            }
        }
        p == *x
    })
}

#[test]
fn lifting_matches_subwords() {
    for ctx in contexts() {
        let table = enumerate_quotient(ctx, 5);
        let mut oracle = table.bruhat();
        let elems: Vec<_> = table.elements().cloned().collect();
        for x in &elems {
            for w in &elems {
                assert_eq!(oracle.leq(x, w).unwrap(), subword_leq(x, w), "{ctx} {x} {w}");
            }
        }
    }
}

#[test]
fn entry_sets_are_distinct() {
    for ctx in contexts() {
        let table = enumerate_quotient(ctx, 6);
        let keys: std::collections::HashSet<_> = table.elements().map(|w| w.sorted_key()).collect();
        assert_eq!(keys.len(), table.len());
    }
}

/// Among all orderings of a representative's entries that are valid family
/// members, exactly one satisfies the sorting condition.
#[test]
fn unique_minimal_ordering() {
    for ctx in contexts().into_iter().filter(|c| c.family == Family::BtildeOverD) {
        let table = enumerate_quotient(ctx, 6);
        for w in table.elements() {
            let n = ctx.n;
            let head = w.window()[..n].to_vec();
            let big_n = ctx.modulus();
            // every signed arrangement of the first half
            let mut count = 0;
            for perm in permutations(&mut head.clone()) {
                for signs in 0u32..1 << n {
                    let mut first = perm.clone();
                    for (k, v) in first.iter_mut().enumerate() {
                        if signs >> k & 1 == 1 {
                            *v = big_n - *v;
                        }
                    }
                    let mut window = first.clone();
                    window.extend(first.iter().rev().map(|v| big_n - v));
                    if let Ok(p) = MirroredPermutation::from_minimal_window(ctx, window) {
                        assert_eq!(p, *w);
                        count += 1;
                    }
                }
            }
            assert_eq!(count, 1, "{ctx} {w}");
        }
    }
}

fn permutations(items: &mut Vec<i64>) -> Vec<Vec<i64>> {
    if items.len() <= 1 {
        return vec![items.clone()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let x = items.remove(i);
        for mut rest in permutations(items) {
            rest.insert(0, x);
            out.push(rest);
        }
        items.insert(i, x);
    }
    out
}

#[test]
fn poset_covers_match_oracle() {
    for ctx in contexts() {
        let max_len = if ctx.family.forked_right() { 4 } else { 6 };
        let poset = affine_abacus::poset::bruhat_poset(ctx, max_len).unwrap();
        let table = enumerate_quotient(ctx, max_len);
        let mut oracle = table.bruhat();
        let mut covers = Vec::new();
        for (l, x) in poset.elements.iter().enumerate() {
            for (u, w) in poset.elements.iter().enumerate() {
                if poset.lengths[u] == poset.lengths[l] + 1 && oracle.leq(x, w).unwrap() {
                    covers.push((l, u));
                }
            }
        }
        assert_eq!(poset.covers, covers, "{ctx}");
    }
}

fn partitions(total: usize, max: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(total)).rev() {
        for mut rest in partitions(total - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Valid bounded partitions of each size, counting each star placement once.
fn bounded_counts(ctx: GroupContext, max_len: usize) -> Vec<usize> {
    (0..=max_len)
        .map(|size| {
            partitions(size, ctx.width())
                .into_iter()
                .map(|p| {
                    let plain = BoundedPartition::new(ctx, p.clone(), None).is_ok() as usize;
                    let starred = (0..p.len())
                        .filter(|&i| {
                            BoundedPartition::new(ctx, p.clone(), Some(i)).is_ok_and(|b| b.star() == Some(i))
                        })
                        .count();
                    plain + starred
                })
                .sum()
        })
        .collect()
}

#[test]
fn length_counts_fixture() {
    #[derive(serde::Deserialize)]
    struct Row {
        ctx: GroupContext,
        counts: Vec<usize>,
    }
    let rows: Vec<Row> = serde_json::from_str(include_str!("fixtures/length_counts.json")).unwrap();
    assert_eq!(rows.len(), contexts().len());
    for row in rows {
        let max_len = row.counts.len() - 1;
        assert_eq!(enumerate_quotient(row.ctx, max_len).counts(), row.counts, "{}", row.ctx);
        assert_eq!(bounded_counts(row.ctx, max_len), row.counts, "{}", row.ctx);
    }
}

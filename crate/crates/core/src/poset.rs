//! The Bruhat poset of a quotient, read off core containment.

use std::fmt::Write as _;

use crate::abacus::Abacus;
use crate::cores::CorePartition;
use crate::error::{Error, Result};
use crate::group::GroupContext;
use crate::oracle::enumerate_quotient;
use crate::peeling::bounded_partition;
use crate::perm::MirroredPermutation;

/// Largest length accepted for poset export.
pub const POSET_MAX_LEN: usize = 8;

/// Elements up to `max_len` in length-lexicographic order, with their lengths.
#[derive(Debug, Clone)]
pub struct BruhatPoset {
    pub elements: Vec<MirroredPermutation>,
    pub lengths: Vec<usize>,
    /// Cover pairs `(lower, upper)` as indices into `elements`.
    pub covers: Vec<(usize, usize)>,
}

pub fn bruhat_poset(ctx: GroupContext, max_len: usize) -> Result<BruhatPoset> {
    if max_len > POSET_MAX_LEN {
        return Err(Error::LengthBound { requested: max_len, bound: POSET_MAX_LEN });
    }
    let table = enumerate_quotient(ctx, max_len);
    let elements: Vec<MirroredPermutation> = table.elements().cloned().collect();
    let lengths: Vec<usize> = elements.iter().map(|w| table.length(w).expect("enumerated")).collect();
    let cores: Vec<CorePartition> =
        elements.iter().map(|w| CorePartition::from_abacus(&Abacus::from_permutation(w))).collect();
    let k = elements.len();
    let below: Vec<Vec<bool>> = (0..k)
        .map(|u| (0..k).map(|l| l != u && cores[u].contains(&cores[l])).collect())
        .collect();
    let mut covers = Vec::new();
    for u in 0..k {
        for l in 0..k {
            if below[u][l] && !(0..k).any(|m| below[u][m] && below[m][l]) {
                covers.push((l, u));
            }
        }
    }
    covers.sort_unstable();
    Ok(BruhatPoset { elements, lengths, covers })
}

/// DOT digraph with nodes labelled by bounded partitions and edges the covers.
pub fn poset_dot(ctx: GroupContext, max_len: usize) -> Result<String> {
    let poset = bruhat_poset(ctx, max_len)?;
    let mut out = String::new();
    let _ = writeln!(out, "digraph bruhat {{");
    let _ = writeln!(out, "  label=\"{ctx}, length <= {max_len}\";");
    let _ = writeln!(out, "  rankdir=BT;");
    for (i, w) in poset.elements.iter().enumerate() {
        let beta = bounded_partition(&CorePartition::from_abacus(&Abacus::from_permutation(w)))?;
        let label = if beta.parts().is_empty() { "e".to_string() } else { beta.to_string() };
        let _ = writeln!(out, "  n{i} [label=\"{label}\", length={}];", poset.lengths[i]);
    }
    for (l, u) in &poset.covers {
        let _ = writeln!(out, "  n{l} -> n{u};");
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Family;

    #[test]
    fn length_one() {
        let ctx = GroupContext::new(Family::CtildeOverC, 2).unwrap();
        let dot = poset_dot(ctx, 1).unwrap();
        assert_eq!(dot.matches("[label=").count(), 2);
        assert_eq!(dot.matches(" -> ").count(), 1);
        assert!(dot.contains("n0 [label=\"e\""));
    }

    #[test]
    fn graded_by_length() {
        for f in Family::ALL {
            let ctx = GroupContext::new(f, f.min_rank()).unwrap();
            let p = bruhat_poset(ctx, 4).unwrap();
            for &(l, u) in &p.covers {
                assert_eq!(p.lengths[u], p.lengths[l] + 1);
            }
        }
    }

    #[test]
    fn bound_is_enforced() {
        let ctx = GroupContext::new(Family::CtildeOverC, 2).unwrap();
        assert_eq!(
            poset_dot(ctx, POSET_MAX_LEN + 1),
            Err(Error::LengthBound { requested: POSET_MAX_LEN + 1, bound: POSET_MAX_LEN })
        );
    }
}

//! Root lattice coordinates and the affine reflection action.

use serde::{Deserialize, Serialize};

use crate::abacus::Abacus;
use crate::error::{Error, Result};
use crate::group::{Generator, GroupContext};

/// A point `Σ aᵢ eᵢ` of the root lattice, stored as `(a₁, …, aₙ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RootPoint {
    #[serde(skip)]
    ctx: GroupContext,
    coords: Vec<i64>,
}

#[derive(Deserialize)]
struct RawPoint {
    coords: Vec<i64>,
}

impl RootPoint {
    pub fn new(ctx: GroupContext, coords: Vec<i64>) -> Result<Self> {
        if coords.len() != ctx.n {
            return Err(Error::CoordsLength { expected: ctx.n, got: coords.len() });
        }
        let pt = RootPoint { ctx, coords };
        if ctx.family.requires_even() && !pt.is_even() {
            return Err(Error::ParityViolation);
        }
        Ok(pt)
    }

    /// Parses `{"coords":[...]}`; the context is not part of the JSON.
    pub fn from_json(ctx: GroupContext, json: &str) -> Result<Self> {
        let raw: RawPoint = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        RootPoint::new(ctx, raw.coords)
    }

    pub fn ctx(&self) -> GroupContext {
        self.ctx
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_even(&self) -> bool {
        self.coords.iter().map(|a| a.abs()).sum::<i64>() % 2 == 0
    }

    /// Reflection in the hyperplane of simple root `g`; `s0` is the affine one.
    pub fn reflect(&self, g: Generator) -> RootPoint {
        let n = self.ctx.n;
        let mut a = self.coords.clone();
        let i = g.index();
        if i == 0 && self.ctx.family.forked_left() {
            // longest root e1 + e2
            let (a1, a2) = (a[0], a[1]);
            a[0] = 1 - a2;
            a[1] = 1 - a1;
        } else if i == 0 {
            // longest root 2e1
            a[0] = 1 - a[0];
        } else if i == n && self.ctx.family.forked_right() {
            // e_{n-1} + e_n
            let (x, y) = (a[n - 2], a[n - 1]);
            a[n - 2] = -y;
            a[n - 1] = -x;
        } else if i == n {
            a[n - 1] = -a[n - 1];
        } else {
            a.swap(i - 1, i);
        }
        RootPoint { ctx: self.ctx, coords: a }
    }
}

impl std::fmt::Display for RootPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Levels of the lowest beads on runners `1..=n`.
pub fn coordinates(a: &Abacus) -> RootPoint {
    RootPoint { ctx: a.ctx(), coords: a.levels()[..a.ctx().n].to_vec() }
}

pub fn from_coordinates(pt: &RootPoint) -> Result<Abacus> {
    if pt.ctx.family.requires_even() && !pt.is_even() {
        return Err(Error::ParityViolation);
    }
    Ok(Abacus::from_upper_levels(pt.ctx, &pt.coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Family;
    use crate::perm::MirroredPermutation;

    fn ctx(f: Family, n: usize) -> GroupContext {
        GroupContext::new(f, n).unwrap()
    }

    #[test]
    fn example_coordinates() {
        let c = ctx(Family::CtildeOverC, 3);
        let w = MirroredPermutation::from_base_window(c, vec![-11, -9, -1, 8, 16, 18]).unwrap();
        let a = Abacus::from_permutation(&w);
        let pt = coordinates(&a);
        assert_eq!(pt.coords(), &[1, 2, -2]);
        assert_eq!(pt.to_string(), "(1,2,-2)");
        assert_eq!(from_coordinates(&pt).unwrap(), a);
    }

    #[test]
    fn identity_and_parity() {
        let c = ctx(Family::BtildeOverB, 3);
        assert!(coordinates(&Abacus::identity(c)).coords().iter().all(|&x| x == 0));
        assert_eq!(RootPoint::new(c, vec![1, 0, 0]), Err(Error::ParityViolation));
        assert_eq!(
            RootPoint::new(c, vec![1, 0]),
            Err(Error::CoordsLength { expected: 3, got: 2 })
        );
    }

    #[test]
    fn reflections() {
        let c = ctx(Family::CtildeOverC, 3);
        let pt = RootPoint::new(c, vec![1, 2, -2]).unwrap();
        assert_eq!(pt.reflect(Generator(0)).coords(), &[0, 2, -2]);
        assert_eq!(pt.reflect(Generator(3)).coords(), &[1, 2, 2]);
        for f in Family::ALL {
            let c = ctx(f, 4);
            let pt = RootPoint { ctx: c, coords: vec![3, -1, 2, 5] };
            for g in c.generators() {
                assert_eq!(pt.reflect(g).reflect(g), pt);
                if f.requires_even() {
                    assert_eq!(pt.reflect(g).is_even(), pt.is_even());
                }
            }
        }
    }

    #[test]
    fn json_shape() {
        let c = ctx(Family::CtildeOverC, 2);
        let pt = RootPoint::new(c, vec![1, -1]).unwrap();
        let s = serde_json::to_string(&pt).unwrap();
        assert_eq!(s, r#"{"coords":[1,-1]}"#);
        assert_eq!(RootPoint::from_json(c, &s).unwrap(), pt);
    }
}

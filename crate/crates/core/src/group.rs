//! Coxeter family, rank and generator alphabet.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The four parabolic quotients W̃/W handled by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "C~/C")]
    CtildeOverC,
    #[serde(rename = "B~/B")]
    BtildeOverB,
    #[serde(rename = "B~/D")]
    BtildeOverD,
    #[serde(rename = "D~/D")]
    DtildeOverD,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::CtildeOverC,
        Family::BtildeOverB,
        Family::BtildeOverD,
        Family::DtildeOverD,
    ];

    pub fn min_rank(self) -> usize {
        match self {
            Family::CtildeOverC => 2,
            Family::BtildeOverB | Family::BtildeOverD => 3,
            Family::DtildeOverD => 4,
        }
    }

    /// `s0` is the fork generator `s0^D` (otherwise `s0^C`).
    pub fn forked_left(self) -> bool {
        matches!(self, Family::BtildeOverB | Family::DtildeOverD)
    }

    /// `sn` is the fork generator `sn^D` (otherwise `sn^C`).
    pub fn forked_right(self) -> bool {
        matches!(self, Family::BtildeOverD | Family::DtildeOverD)
    }

    /// Abaci, cores and root points must be even.
    pub fn requires_even(self) -> bool {
        self.forked_left()
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::CtildeOverC => "C~/C",
            Family::BtildeOverB => "B~/B",
            Family::BtildeOverD => "B~/D",
            Family::DtildeOverD => "D~/D",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_uppercase();
        match key.as_str() {
            "CC" => Ok(Family::CtildeOverC),
            "BB" => Ok(Family::BtildeOverB),
            "BD" => Ok(Family::BtildeOverD),
            "DD" => Ok(Family::DtildeOverD),
            _ => Err(Error::Unknown { kind: "family", name: s.to_string() }),
        }
    }
}

/// A family together with its rank `n`. `N = 2n + 1` throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawContext")]
pub struct GroupContext {
    pub family: Family,
    pub n: usize,
}

#[derive(Deserialize)]
struct RawContext {
    family: Family,
    n: usize,
}

impl TryFrom<RawContext> for GroupContext {
    type Error = Error;

    fn try_from(raw: RawContext) -> Result<Self> {
        GroupContext::new(raw.family, raw.n)
    }
}

impl GroupContext {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let min = family.min_rank();
        if n < min {
            return Err(Error::RankTooSmall { family, n, min });
        }
        Ok(GroupContext { family, n })
    }

    /// `N = 2n + 1`.
    pub fn modulus(&self) -> i64 {
        2 * self.n as i64 + 1
    }

    /// Number of runners / window entries, `2n`.
    pub fn width(&self) -> usize {
        2 * self.n
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        (0..=self.n).map(Generator)
    }

    pub fn generator(&self, index: usize) -> Result<Generator> {
        if index <= self.n {
            Ok(Generator(index))
        } else {
            Err(Error::BadGenerator(index))
        }
    }

    /// Offset `x0`: -1 when `s0` is forked.
    pub fn x0(&self) -> i64 {
        if self.family.forked_left() {
            -1
        } else {
            0
        }
    }

    /// Offset `xn`: -1 when `sn` is forked.
    pub fn xn(&self) -> i64 {
        if self.family.forked_right() {
            -1
        } else {
            0
        }
    }

    /// Bond orders `m(i, j)` of the Coxeter graph, indexed by generator.
    pub fn coxeter_matrix(&self) -> Vec<Vec<u32>> {
        let n = self.n;
        let mut m = vec![vec![2u32; n + 1]; n + 1];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        let mut bond = |i: usize, j: usize, v: u32| {
            m[i][j] = v;
            m[j][i] = v;
        };
        for i in 1..n.saturating_sub(1) {
            bond(i, i + 1, 3);
        }
        if self.family.forked_left() {
            bond(0, 2, 3);
        } else {
            bond(0, 1, 4);
        }
        if self.family.forked_right() {
            bond(n - 2, n, 3);
        } else {
            bond(n - 1, n, 4);
        }
        m
    }
}

impl fmt::Display for GroupContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={}", self.family, self.n)
    }
}

/// Generator `s_i`; the family decides the flavour of `s0` and `sn`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Generator(pub usize);

impl Generator {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.0)
    }
}

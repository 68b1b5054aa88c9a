//! Named representations and length methods, with any-to-any conversion.
//!
//! Conversions route through the bijection tree
//! `window ↔ levels ↔ {core, root}` and `core ↔ {bounded, word}`.

use std::fmt;

use serde_json::{json, Value};

use crate::abacus::Abacus;
use crate::cores::CorePartition;
use crate::error::{Error, Result};
use crate::group::GroupContext;
use crate::oracle::bfs_length;
use crate::peeling::{
    abacus_from_bounded, bounded_partition, central_peel, core_from_word, length_from_abacus,
    length_from_core, length_from_rimwalk, BoundedPartition, Word,
};
use crate::perm::MirroredPermutation;
use crate::root::{coordinates, from_coordinates, RootPoint};

/// An element of a quotient in one of the six representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementDescriptor {
    Window(MirroredPermutation),
    Levels(Abacus),
    Core(CorePartition),
    Bounded(BoundedPartition),
    Word(GroupContext, Word),
    Root(RootPoint),
}

impl ElementDescriptor {
    pub fn ctx(&self) -> GroupContext {
        match self {
            ElementDescriptor::Window(w) => w.ctx(),
            ElementDescriptor::Levels(a) => a.ctx(),
            ElementDescriptor::Core(c) => c.ctx(),
            ElementDescriptor::Bounded(b) => b.ctx(),
            ElementDescriptor::Word(ctx, _) => *ctx,
            ElementDescriptor::Root(r) => r.ctx(),
        }
    }

    /// Name of the representation this value is stored in.
    pub fn kind(&self) -> &'static str {
        match self {
            ElementDescriptor::Window(_) => "window",
            ElementDescriptor::Levels(_) => "levels",
            ElementDescriptor::Core(_) => "core",
            ElementDescriptor::Bounded(_) => "bounded",
            ElementDescriptor::Word(..) => "word",
            ElementDescriptor::Root(_) => "root",
        }
    }

    /// The bare value without its context.
    pub fn value_json(&self) -> Value {
        match self {
            ElementDescriptor::Window(w) => json!(w.window()),
            ElementDescriptor::Levels(a) => json!(a.levels()),
            ElementDescriptor::Core(c) => json!(c.rows()),
            ElementDescriptor::Bounded(b) => json!(b.to_string()),
            ElementDescriptor::Word(_, w) => json!(w.to_string()),
            ElementDescriptor::Root(r) => json!(r.coords()),
        }
    }

    /// `{"ctx": …, "<kind>": …}`.
    pub fn to_json(&self) -> Value {
        let mut obj = serde_json::Map::new();
        obj.insert("ctx".into(), serde_json::to_value(self.ctx()).expect("context serialises"));
        obj.insert(self.kind().into(), self.value_json());
        Value::Object(obj)
    }

    pub fn abacus(&self) -> Result<Abacus> {
        representation(self.kind())?.to_abacus(self)
    }
}

impl fmt::Display for ElementDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementDescriptor::Window(w) => write!(f, "{w}"),
            ElementDescriptor::Levels(a) => {
                let parts: Vec<String> = a.levels().iter().map(|l| l.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
            ElementDescriptor::Core(c) => write!(f, "{c}"),
            ElementDescriptor::Bounded(b) => write!(f, "{b}"),
            ElementDescriptor::Word(_, w) if w.is_empty() => f.write_str("e"),
            ElementDescriptor::Word(_, w) => write!(f, "{w}"),
            ElementDescriptor::Root(r) => write!(f, "{r}"),
        }
    }
}

/// One of the six models, able to parse itself and move to and from an abacus.
pub trait Representation: Send + Sync {
    fn name(&self) -> &'static str;
    fn parse(&self, ctx: GroupContext, text: &str) -> Result<ElementDescriptor>;
    fn of_abacus(&self, a: &Abacus) -> Result<ElementDescriptor>;
    fn to_abacus(&self, el: &ElementDescriptor) -> Result<Abacus>;
}

fn mismatch(expected: &str, el: &ElementDescriptor) -> Error {
    Error::Parse(format!("expected a {expected}, got a {}", el.kind()))
}

/// Integers separated by commas or whitespace, optionally bracketed.
pub fn parse_ints(text: &str) -> Result<Vec<i64>> {
    text.replace(['[', ']', '(', ')', ','], " ")
        .split_whitespace()
        .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad integer `{t}`"))))
        .collect()
}

fn parse_sizes(text: &str) -> Result<Vec<usize>> {
    parse_ints(text)?
        .into_iter()
        .map(|v| usize::try_from(v).map_err(|_| Error::Parse(format!("negative entry {v}"))))
        .collect()
}

struct WindowRep;
struct LevelsRep;
struct CoreRep;
struct BoundedRep;
struct WordRep;
struct RootRep;

impl Representation for WindowRep {
    fn name(&self) -> &'static str {
        "window"
    }

    fn parse(&self, ctx: GroupContext, text: &str) -> Result<ElementDescriptor> {
        MirroredPermutation::from_minimal_window(ctx, parse_ints(text)?).map(ElementDescriptor::Window)
    }

    fn of_abacus(&self, a: &Abacus) -> Result<ElementDescriptor> {
        a.to_permutation().map(ElementDescriptor::Window)
    }

    fn to_abacus(&self, el: &ElementDescriptor) -> Result<Abacus> {
        match el {
            ElementDescriptor::Window(w) => Ok(Abacus::from_permutation(w)),
            _ => Err(mismatch("window", el)),
        }
    }
}

impl Representation for LevelsRep {
    fn name(&self) -> &'static str {
        "levels"
    }

    fn parse(&self, ctx: GroupContext, text: &str) -> Result<ElementDescriptor> {
        Abacus::from_levels(ctx, parse_ints(text)?).map(ElementDescriptor::Levels)
    }

    fn of_abacus(&self, a: &Abacus) -> Result<ElementDescriptor> {
        Ok(ElementDescriptor::Levels(a.clone()))
    }

    fn to_abacus(&self, el: &ElementDescriptor) -> Result<Abacus> {
        match el {
            ElementDescriptor::Levels(a) => Ok(a.clone()),
            _ => Err(mismatch("levels", el)),
        }
    }
}

impl Representation for CoreRep {
    fn name(&self) -> &'static str {
        "core"
    }

    fn parse(&self, ctx: GroupContext, text: &str) -> Result<ElementDescriptor> {
        CorePartition::new(ctx, parse_sizes(text)?).map(ElementDescriptor::Core)
    }

    fn of_abacus(&self, a: &Abacus) -> Result<ElementDescriptor> {
        Ok(ElementDescriptor::Core(CorePartition::from_abacus(a)))
    }

    fn to_abacus(&self, el: &ElementDescriptor) -> Result<Abacus> {
        match el {
            ElementDescriptor::Core(c) => Ok(c.to_abacus()),
            _ => Err(mismatch("core", el)),
        }
    }
}

impl Representation for BoundedRep {
    fn name(&self) -> &'static str {
        "bounded"
    }

    fn parse(&self, ctx: GroupContext, text: &str) -> Result<ElementDescriptor> {
        BoundedPartition::parse(ctx, text).map(ElementDescriptor::Bounded)
    }

    fn of_abacus(&self, a: &Abacus) -> Result<ElementDescriptor> {
        bounded_partition(&CorePartition::from_abacus(a)).map(ElementDescriptor::Bounded)
    }

    fn to_abacus(&self, el: &ElementDescriptor) -> Result<Abacus> {
        match el {
            ElementDescriptor::Bounded(b) => abacus_from_bounded(b),
            _ => Err(mismatch("bounded partition", el)),
        }
    }
}

impl Representation for WordRep {
    fn name(&self) -> &'static str {
        "word"
    }

    fn parse(&self, ctx: GroupContext, text: &str) -> Result<ElementDescriptor> {
        let trimmed = text.trim();
        let word = if trimmed == "e" { Word::default() } else { trimmed.parse()? };
        for &l in &word.letters {
            ctx.generator(l)?;
        }
        core_from_word(ctx, &word)?;
        Ok(ElementDescriptor::Word(ctx, word))
    }

    fn of_abacus(&self, a: &Abacus) -> Result<ElementDescriptor> {
        let (word, _) = central_peel(&CorePartition::from_abacus(a))?;
        Ok(ElementDescriptor::Word(a.ctx(), word))
    }

    fn to_abacus(&self, el: &ElementDescriptor) -> Result<Abacus> {
        match el {
            ElementDescriptor::Word(ctx, w) => Ok(core_from_word(*ctx, w)?.to_abacus()),
            _ => Err(mismatch("word", el)),
        }
    }
}

impl Representation for RootRep {
    fn name(&self) -> &'static str {
        "root"
    }

    fn parse(&self, ctx: GroupContext, text: &str) -> Result<ElementDescriptor> {
        RootPoint::new(ctx, parse_ints(text)?).map(ElementDescriptor::Root)
    }

    fn of_abacus(&self, a: &Abacus) -> Result<ElementDescriptor> {
        Ok(ElementDescriptor::Root(coordinates(a)))
    }

    fn to_abacus(&self, el: &ElementDescriptor) -> Result<Abacus> {
        match el {
            ElementDescriptor::Root(r) => from_coordinates(r),
            _ => Err(mismatch("root point", el)),
        }
    }
}

static REPRESENTATIONS: [&dyn Representation; 6] =
    [&WindowRep, &LevelsRep, &CoreRep, &BoundedRep, &WordRep, &RootRep];

/// All representations in their canonical order.
pub fn representations() -> &'static [&'static dyn Representation] {
    &REPRESENTATIONS
}

pub fn representation(name: &str) -> Result<&'static dyn Representation> {
    REPRESENTATIONS
        .iter()
        .copied()
        .find(|r| r.name() == name)
        .ok_or_else(|| Error::Unknown { kind: "representation", name: name.to_string() })
}

/// Converts `el` into the representation called `target`.
pub fn convert(el: &ElementDescriptor, target: &str) -> Result<ElementDescriptor> {
    let target = representation(target)?;
    if target.name() == el.kind() {
        return Ok(el.clone());
    }
    target.of_abacus(&el.abacus()?)
}

/// A way of computing Coxeter length.
pub trait LengthMethod: Send + Sync {
    fn name(&self) -> &'static str;
    fn length(&self, a: &Abacus) -> Result<usize>;
}

struct AbacusLength;
struct CoreLength;
struct RimWalkLength;
struct WordLength;
struct BfsLength;

impl LengthMethod for AbacusLength {
    fn name(&self) -> &'static str {
        "abacus"
    }

    fn length(&self, a: &Abacus) -> Result<usize> {
        Ok(length_from_abacus(a))
    }
}

impl LengthMethod for CoreLength {
    fn name(&self) -> &'static str {
        "core"
    }

    fn length(&self, a: &Abacus) -> Result<usize> {
        Ok(length_from_core(&CorePartition::from_abacus(a)))
    }
}

impl LengthMethod for RimWalkLength {
    fn name(&self) -> &'static str {
        "rimwalk"
    }

    fn length(&self, a: &Abacus) -> Result<usize> {
        Ok(length_from_rimwalk(&CorePartition::from_abacus(a)))
    }
}

impl LengthMethod for WordLength {
    fn name(&self) -> &'static str {
        "word"
    }

    fn length(&self, a: &Abacus) -> Result<usize> {
        Ok(central_peel(&CorePartition::from_abacus(a))?.0.len())
    }
}

/// Largest length searched by breadth-first search.
pub const BFS_LIMIT: usize = 24;

impl LengthMethod for BfsLength {
    fn name(&self) -> &'static str {
        "bfs"
    }

    fn length(&self, a: &Abacus) -> Result<usize> {
        bfs_length(&a.to_permutation()?, BFS_LIMIT).ok_or(Error::NotEnumerated)
    }
}

static LENGTH_METHODS: [&dyn LengthMethod; 5] =
    [&AbacusLength, &CoreLength, &RimWalkLength, &WordLength, &BfsLength];

pub fn length_methods() -> &'static [&'static dyn LengthMethod] {
    &LENGTH_METHODS
}

pub fn length_method(name: &str) -> Result<&'static dyn LengthMethod> {
    LENGTH_METHODS
        .iter()
        .copied()
        .find(|m| m.name() == name)
        .ok_or_else(|| Error::Unknown { kind: "length method", name: name.to_string() })
}

/// Every representation of the element, keyed by name, plus its length.
pub fn all_representations(a: &Abacus) -> Result<Value> {
    let mut obj = serde_json::Map::new();
    obj.insert("ctx".into(), serde_json::to_value(a.ctx()).expect("context serialises"));
    obj.insert("length".into(), json!(length_from_abacus(a)));
    for rep in representations() {
        obj.insert(rep.name().into(), rep.of_abacus(a)?.value_json());
    }
    Ok(Value::Object(obj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Family;

    fn c3() -> GroupContext {
        GroupContext::new(Family::CtildeOverC, 3).unwrap()
    }

    #[test]
    fn golden_conversions() {
        let w = representation("window").unwrap().parse(c3(), "-11,-9,-1,8,16,18").unwrap();
        assert_eq!(convert(&w, "core").unwrap().to_string(), "(10,9,6,5,5,3,2,2,2,1)");
        assert_eq!(convert(&w, "root").unwrap().to_string(), "(1,2,-2)");
        assert_eq!(convert(&w, "levels").unwrap().to_string(), "(1,2,-2,2,-2,-1)");
        assert_eq!(convert(&w, "bounded").unwrap().to_string(), "(5,5,4,2,1)");
        let word = convert(&w, "word").unwrap();
        assert_eq!(word.to_string(), "s0 s1 s0 s3 s2 s1 s0 s2 s3 s2 s1 s0 s2 s3 s2 s1 s0");
        assert_eq!(convert(&word, "window").unwrap(), w);
    }

    #[test]
    fn identity_everywhere() {
        for f in Family::ALL {
            let ctx = GroupContext::new(f, f.min_rank()).unwrap();
            let e = ElementDescriptor::Levels(Abacus::identity(ctx));
            for rep in representations() {
                let there = convert(&e, rep.name()).unwrap();
                assert_eq!(convert(&there, "levels").unwrap(), e);
                let text = there.to_string();
                assert_eq!(rep.parse(ctx, &text).unwrap(), there, "{} {text}", rep.name());
            }
        }
    }

    #[test]
    fn parse_errors() {
        let c = c3();
        assert_eq!(
            representation("window").unwrap().parse(c, "-9,-11,-1,8,18,16"),
            Err(Error::NotMinimal)
        );
        assert!(matches!(representation("nope"), Err(Error::Unknown { .. })));
        assert!(matches!(length_method("nope"), Err(Error::Unknown { .. })));
        assert!(matches!(representation("core").unwrap().parse(c, "2,x"), Err(Error::Parse(_))));
        assert_eq!(
            representation("word").unwrap().parse(c, "s0 s0"),
            Err(Error::NonReducedWord)
        );
        assert_eq!(representation("word").unwrap().parse(c, "s9"), Err(Error::BadGenerator(9)));
    }

    #[test]
    fn length_methods_agree_on_example() {
        let w = MirroredPermutation::from_minimal_window(c3(), vec![-11, -9, -1, 8, 16, 18]).unwrap();
        let a = Abacus::from_permutation(&w);
        for m in length_methods() {
            assert_eq!(m.length(&a).unwrap(), 17, "{}", m.name());
        }
    }

    #[test]
    fn json_shapes() {
        let w = representation("window").unwrap().parse(c3(), "-11,-9,-1,8,16,18").unwrap();
        assert_eq!(
            w.to_json().to_string(),
            r#"{"ctx":{"family":"C~/C","n":3},"window":[-11,-9,-1,8,16,18]}"#
        );
        let all = all_representations(&w.abacus().unwrap()).unwrap();
        assert_eq!(all["length"], 17);
        assert_eq!(all["root"], json!([1, 2, -2]));
        assert_eq!(all["bounded"], "(5,5,4,2,1)");
    }
}

//! Free-group words, Wirtinger presentations and the knot-table file format.
//!
//! Generators are 1-indexed; a letter is a nonzero signed integer whose sign
//! is the exponent, so `[1, 2, -1, -10]` stands for `x1 x2 x1^-1 x10^-1`.
//! Words are kept freely reduced at all times.

use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// A freely reduced word in a free group.
///
/// The empty word is the identity. Construction reduces eagerly, so two
/// words are equal in the free group iff they compare equal here.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct GroupWord {
    letters: Vec<i32>,
}

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord::default()
    }

    /// Build a word from raw letters, freely reducing. Letters must be
    /// nonzero.
    pub fn from_letters<I: IntoIterator<Item = i32>>(letters: I) -> Self {
        let mut w = GroupWord::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// Append one letter, cancelling against the current tail.
    pub fn push(&mut self, letter: i32) {
        assert!(letter != 0, "letter 0 is reserved");
        if self.letters.last() == Some(&-letter) {
            self.letters.pop();
        } else {
            self.letters.push(letter);
        }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Freely reduced concatenation.
    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    /// The inverse word: reversed, with all signs flipped.
    pub fn invert(&self) -> GroupWord {
        GroupWord {
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// Image of the abelianization sending every generator to 1.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Largest generator index appearing, 0 for the identity.
    pub fn max_generator(&self) -> i32 {
        self.letters.iter().map(|&l| l.abs()).max().unwrap_or(0)
    }

    /// Replace every letter by the image of its generator (inverted for
    /// negative letters) and reduce.
    pub fn substitute(&self, images: &BTreeMap<i32, GroupWord>) -> Result<GroupWord, WordError> {
        let mut out = GroupWord::identity();
        for &l in &self.letters {
            let img = images
                .get(&l.abs())
                .ok_or(WordError::MissingImage { generator: l.abs() })?;
            if l > 0 {
                for &m in &img.letters {
                    out.push(m);
                }
            } else {
                for &m in img.letters.iter().rev() {
                    out.push(-m);
                }
            }
        }
        Ok(out)
    }
}

/// Freely reduce an arbitrary letter sequence.
pub fn free_reduce<I: IntoIterator<Item = i32>>(letters: I) -> GroupWord {
    GroupWord::from_letters(letters)
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("generator {generator} has no image")]
    MissingImage { generator: i32 },
}

/// A Wirtinger presentation: `n` generators and `n - 1` conjugation
/// relators, each of the canonical shape `x_a x_b x_a^-1 x_c^-1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WirtingerPresentation {
    name: String,
    num_generators: u32,
    relators: Vec<GroupWord>,
}

/// The `(a, b, c)` of a relator `x_a x_b x_a^-1 x_c^-1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RelatorParts {
    pub conjugator: i32,
    pub from: i32,
    pub to: i32,
}

impl WirtingerPresentation {
    pub fn new(
        name: impl Into<String>,
        num_generators: u32,
        relators: Vec<GroupWord>,
    ) -> Result<Self, PresentationError> {
        let name = name.into();
        if num_generators == 0 {
            return Err(PresentationError::NoGenerators { name });
        }
        if relators.len() != num_generators as usize - 1 {
            return Err(PresentationError::WrongRelatorCount {
                name,
                expected: num_generators as usize - 1,
                got: relators.len(),
            });
        }
        let pres = WirtingerPresentation {
            name,
            num_generators,
            relators,
        };
        for (i, r) in pres.relators.iter().enumerate() {
            let parts = wirtinger_parts(r).ok_or_else(|| PresentationError::NonWirtingerRelator {
                name: pres.name.clone(),
                relator_index: i,
                relator: r.clone(),
            })?;
            for g in [parts.conjugator, parts.from, parts.to] {
                if g < 1 || g as u32 > num_generators {
                    return Err(PresentationError::IndexOutOfRange {
                        name: pres.name.clone(),
                        relator_index: i,
                        index: g,
                    });
                }
            }
            debug_assert_eq!(r.exponent_sum(), 0);
        }
        Ok(pres)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn num_generators(&self) -> u32 {
        self.num_generators
    }

    pub fn relators(&self) -> &[GroupWord] {
        &self.relators
    }

    /// Decompose relator `i` as `(a, b, c)` with `x_a x_b x_a^-1 = x_c`.
    pub fn relator_parts(&self, i: usize) -> RelatorParts {
        wirtinger_parts(&self.relators[i]).expect("relator shape checked at construction")
    }

    pub fn generators(&self) -> impl Iterator<Item = i32> {
        1..=self.num_generators as i32
    }
}

/// Check the canonical Wirtinger shape on an already reduced word.
fn wirtinger_parts(r: &GroupWord) -> Option<RelatorParts> {
    let l = r.letters();
    if l.len() != 4 {
        return None;
    }
    let (a, b, a2, c2) = (l[0], l[1], l[2], l[3]);
    if a < 1 || b < 1 || a2 != -a || c2 >= 0 || b == -c2 {
        return None;
    }
    Some(RelatorParts {
        conjugator: a,
        from: b,
        to: -c2,
    })
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("presentation {name} has no generators")]
    NoGenerators { name: String },
    #[error("presentation {name}: expected {expected} relators, got {got}")]
    WrongRelatorCount {
        name: String,
        expected: usize,
        got: usize,
    },
    #[error("presentation {name}: relator {relator_index} ({relator}) is not of Wirtinger shape")]
    NonWirtingerRelator {
        name: String,
        relator_index: usize,
        relator: GroupWord,
    },
    #[error("presentation {name}: relator {relator_index} uses generator {index} out of range")]
    IndexOutOfRange {
        name: String,
        relator_index: usize,
        index: i32,
    },
}

/// A named collection of presentations, as read from a knot-table file.
#[derive(Clone, Debug, Default)]
pub struct KnotTable {
    entries: BTreeMap<String, WirtingerPresentation>,
}

impl KnotTable {
    pub fn new() -> Self {
        KnotTable::default()
    }

    pub fn get(&self, name: &str) -> Option<&WirtingerPresentation> {
        self.entries.get(name)
    }

    pub fn insert(&mut self, pres: WirtingerPresentation) -> Result<(), KnotFileError> {
        match self.entries.get(pres.name()) {
            None => {
                self.entries.insert(pres.name().to_string(), pres);
                Ok(())
            }
            Some(existing) if existing == &pres => Ok(()),
            Some(_) => Err(KnotFileError::ConflictingDuplicate {
                name: pres.name().to_string(),
            }),
        }
    }

    /// Merge another table in. Identical duplicates are allowed; the same
    /// name with a different presentation is an error.
    pub fn merge(&mut self, other: KnotTable) -> Result<(), KnotFileError> {
        for (_, pres) in other.entries {
            self.insert(pres)?;
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in name order.
    pub fn iter(&self) -> impl Iterator<Item = (&String, &WirtingerPresentation)> {
        self.entries.iter()
    }

    pub fn names(&self) -> impl Iterator<Item = &String> {
        self.entries.keys()
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum KnotFileError {
    #[error("line {line}, col {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("knot {name} (line {line}): {source}")]
    Invariant {
        name: String,
        line: usize,
        #[source]
        source: PresentationError,
    },
    #[error("duplicate knot name {name} with conflicting presentations")]
    ConflictingDuplicate { name: String },
}

/// Parse a knot-table file.
///
/// ```text
/// knot <name>              # name: [A-Za-z0-9_]+
/// gens <n>
/// rel <i1> <i2> ... <ik>   # one line per relator, n-1 lines
/// ```
///
/// Blank lines separate entries and `#` starts a comment. Relators must be
/// written in canonical Wirtinger shape; a relator that only reduces to that
/// shape is rejected rather than repaired.
pub fn parse_knot_file(text: &str) -> Result<KnotTable, KnotFileError> {
    let mut table = KnotTable::new();
    let mut pending: Option<PendingKnot> = None;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let keyword = tokens.next().expect("nonempty line has a token");
        let col = content.find(keyword).unwrap_or(0) + 1;
        match keyword {
            "knot" => {
                if let Some(p) = pending.take() {
                    p.finish(&mut table)?;
                }
                let name = tokens
                    .next()
                    .ok_or_else(|| syntax(line, col, "missing knot name"))?;
                if !name
                    .chars()
                    .all(|c| c.is_ascii_alphanumeric() || c == '_')
                {
                    return Err(syntax(line, col, &format!("invalid knot name {name:?}")));
                }
                if tokens.next().is_some() {
                    return Err(syntax(line, col, "trailing tokens after knot name"));
                }
                pending = Some(PendingKnot {
                    name: name.to_string(),
                    line,
                    gens: None,
                    relators: Vec::new(),
                });
            }
            "gens" => {
                let p = pending
                    .as_mut()
                    .ok_or_else(|| syntax(line, col, "gens before any knot"))?;
                if p.gens.is_some() {
                    return Err(syntax(line, col, "duplicate gens line"));
                }
                let n: u32 = tokens
                    .next()
                    .ok_or_else(|| syntax(line, col, "missing generator count"))?
                    .parse()
                    .map_err(|_| syntax(line, col, "generator count is not a number"))?;
                if tokens.next().is_some() {
                    return Err(syntax(line, col, "trailing tokens after gens"));
                }
                p.gens = Some(n);
            }
            "rel" => {
                let p = pending
                    .as_mut()
                    .ok_or_else(|| syntax(line, col, "rel before any knot"))?;
                if p.gens.is_none() {
                    return Err(syntax(line, col, "rel before gens"));
                }
                let mut letters = Vec::new();
                for tok in tokens {
                    let v: i32 = tok
                        .parse()
                        .map_err(|_| syntax(line, col, &format!("bad relator letter {tok:?}")))?;
                    if v == 0 {
                        return Err(syntax(line, col, "relator letter 0 is invalid"));
                    }
                    letters.push(v);
                }
                if letters.is_empty() {
                    return Err(syntax(line, col, "empty relator"));
                }
                let reduced = GroupWord::from_letters(letters.iter().copied());
                if reduced.letters() != letters.as_slice() {
                    // Shaped-only-after-reduction input hides transcription
                    // errors, so it is rejected outright.
                    return Err(KnotFileError::Invariant {
                        name: p.name.clone(),
                        line,
                        source: PresentationError::NonWirtingerRelator {
                            name: p.name.clone(),
                            relator_index: p.relators.len(),
                            relator: reduced,
                        },
                    });
                }
                p.relators.push(reduced);
            }
            other => {
                return Err(syntax(line, col, &format!("unknown keyword {other:?}")));
            }
        }
    }
    if let Some(p) = pending.take() {
        p.finish(&mut table)?;
    }
    Ok(table)
}

struct PendingKnot {
    name: String,
    line: usize,
    gens: Option<u32>,
    relators: Vec<GroupWord>,
}

impl PendingKnot {
    fn finish(self, table: &mut KnotTable) -> Result<(), KnotFileError> {
        let gens = self.gens.ok_or_else(|| {
            syntax(self.line, 1, &format!("knot {} has no gens line", self.name))
        })?;
        let pres = WirtingerPresentation::new(self.name.clone(), gens, self.relators).map_err(
            |source| KnotFileError::Invariant {
                name: self.name.clone(),
                line: self.line,
                source,
            },
        )?;
        table.insert(pres)
    }
}

fn syntax(line: usize, col: usize, msg: &str) -> KnotFileError {
    KnotFileError::Syntax {
        line,
        col,
        msg: msg.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[i32]) -> GroupWord {
        GroupWord::from_letters(letters.iter().copied())
    }

    #[test]
    fn free_reduce_examples() {
        assert_eq!(w(&[1, 2, -2, -1]), GroupWord::identity());
        assert_eq!(w(&[1, 2, -1, -10]).letters(), &[1, 2, -1, -10]);
        assert_eq!(w(&[3, -3, 3]).letters(), &[3]);
    }

    #[test]
    fn free_reduce_is_retraction() {
        // Reducing a reduced word changes nothing.
        let cases: &[&[i32]] = &[&[1, 2, -2, 3, -1, 1], &[5, -5], &[], &[2, 2, 2, -2, -2, -2]];
        for c in cases {
            let once = w(c);
            let twice = GroupWord::from_letters(once.letters().iter().copied());
            assert_eq!(once, twice);
        }
    }

    #[test]
    fn concat_examples() {
        assert_eq!(w(&[1]).concat(&w(&[-1])), GroupWord::identity());
        assert_eq!(w(&[1, 2]).concat(&w(&[-2, 3])).letters(), &[1, 3]);
        assert_eq!(GroupWord::identity().concat(&w(&[5])).letters(), &[5]);
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w(&[1, 2, -3]).invert().letters(), &[3, -2, -1]);
        assert_eq!(GroupWord::identity().invert(), GroupWord::identity());
        assert_eq!(w(&[-4]).invert().letters(), &[4]);
        let u = w(&[1, -2, 3, 3]);
        assert_eq!(u.invert().invert(), u);
        assert_eq!(u.concat(&u.invert()), GroupWord::identity());
    }

    #[test]
    fn substitute_examples() {
        let mut images = BTreeMap::new();
        images.insert(2, w(&[1, 2, -3]));
        assert_eq!(w(&[2]).substitute(&images).unwrap().letters(), &[1, 2, -3]);
        assert_eq!(
            w(&[-2]).substitute(&images).unwrap().letters(),
            &[3, -2, -1]
        );
        assert_eq!(
            w(&[2, -2]).substitute(&images).unwrap(),
            GroupWord::identity()
        );
        assert_eq!(
            w(&[1]).substitute(&images),
            Err(WordError::MissingImage { generator: 1 })
        );
    }

    #[test]
    fn substitute_is_homomorphism() {
        let mut images = BTreeMap::new();
        images.insert(1, w(&[2, -3]));
        images.insert(2, w(&[1, 1]));
        images.insert(3, w(&[-2]));
        let u = w(&[1, 2, -3]);
        let v = w(&[3, -2, -1, 1]);
        let lhs = u.concat(&v).substitute(&images).unwrap();
        let rhs = u
            .substitute(&images)
            .unwrap()
            .concat(&v.substitute(&images).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn parse_trefoil() {
        let table =
            parse_knot_file("knot 3_1\ngens 3\nrel 3 1 -3 -2\nrel 1 2 -1 -3\n").unwrap();
        let p = table.get("3_1").unwrap();
        assert_eq!(p.num_generators(), 3);
        assert_eq!(p.relators().len(), 2);
        let parts = p.relator_parts(0);
        assert_eq!((parts.conjugator, parts.from, parts.to), (3, 1, 2));
    }

    #[test]
    fn parse_rejects_reducible_relator() {
        let err = parse_knot_file("knot X\ngens 2\nrel 1 1 -1 -2\n").unwrap_err();
        match err {
            KnotFileError::Invariant { name, .. } => assert_eq!(name, "X"),
            other => panic!("expected invariant violation, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_bad_counts_and_ranges() {
        // Too few relators.
        assert!(matches!(
            parse_knot_file("knot X\ngens 3\nrel 3 1 -3 -2\n"),
            Err(KnotFileError::Invariant {
                source: PresentationError::WrongRelatorCount { .. },
                ..
            })
        ));
        // Generator index out of range.
        assert!(matches!(
            parse_knot_file("knot X\ngens 2\nrel 5 1 -5 -2\n"),
            Err(KnotFileError::Invariant {
                source: PresentationError::IndexOutOfRange { .. },
                ..
            })
        ));
        // b == c is not a Wirtinger relator.
        assert!(matches!(
            parse_knot_file("knot X\ngens 2\nrel 1 2 -1 -2\n"),
            Err(KnotFileError::Invariant {
                source: PresentationError::NonWirtingerRelator { .. },
                ..
            })
        ));
    }

    #[test]
    fn parse_comments_and_blank_lines() {
        let text = "# a table\n\nknot 3_1  # trefoil\ngens 3\nrel 3 1 -3 -2\nrel 1 2 -1 -3\n\n";
        let table = parse_knot_file(text).unwrap();
        assert_eq!(table.len(), 1);
    }

    #[test]
    fn merge_rules() {
        let a = parse_knot_file("knot K\ngens 3\nrel 3 1 -3 -2\nrel 1 2 -1 -3\n").unwrap();
        let same = a.clone();
        let mut m = a.clone();
        m.merge(same).unwrap();
        assert_eq!(m.len(), 1);
        let b = parse_knot_file("knot K\ngens 3\nrel 3 2 -3 -1\nrel 1 2 -1 -3\n").unwrap();
        assert!(matches!(
            m.merge(b),
            Err(KnotFileError::ConflictingDuplicate { .. })
        ));
    }
}

use std::fmt;

use serde::{Deserialize, Serialize};

use super::GroupError;

/// One letter of a word: a generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(gen: usize) -> Self {
        Self {
            gen,
            inverse: false,
        }
    }

    pub fn neg(gen: usize) -> Self {
        Self { gen, inverse: true }
    }

    pub fn inv(self) -> Self {
        Self {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i32 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// A word in the generators, used verbatim (no implicit free reduction).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// `x_gen^k` for any nonzero integer `k`.
    pub fn power(gen: usize, k: i64) -> Self {
        let letter = if k < 0 {
            Letter::neg(gen)
        } else {
            Letter::pos(gen)
        };
        Self(vec![letter; k.unsigned_abs() as usize])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.gen).max()
    }

    /// Evaluates the word with a caller-supplied monoid: `identity`, and
    /// `apply(acc, letter)` multiplying the accumulator on the right.
    pub fn fold<T>(&self, identity: T, mut apply: impl FnMut(T, Letter) -> T) -> T {
        self.0.iter().fold(identity, |acc, &l| apply(acc, l))
    }

    /// Parses whitespace-separated tokens `name`, `name^-1`, or `name^k`.
    pub fn parse(text: &str, names: &[String]) -> Result<Word, GroupError> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => {
                    let k: i64 = e
                        .parse()
                        .map_err(|_| GroupError::BadWord(format!("bad exponent in `{tok}`")))?;
                    if k == 0 {
                        return Err(GroupError::BadWord(format!("zero exponent in `{tok}`")));
                    }
                    (n, k)
                }
                None => (tok, 1),
            };
            let gen = names
                .iter()
                .position(|g| g == name)
                .ok_or_else(|| GroupError::BadWord(format!("unknown generator `{name}`")))?;
            letters.extend(Word::power(gen, exp).0);
        }
        Ok(Word(letters))
    }

    /// Renders with generator names, one token per letter.
    pub fn render(&self, names: &[String]) -> String {
        self.0
            .iter()
            .map(|l| {
                let name = &names[l.gen];
                if l.inverse {
                    format!("{name}^-1")
                } else {
                    name.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Generators and relator words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    names: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Names must be distinct whitespace-free tokens; relators may only
    /// reference existing generators. An empty generator list presents the
    /// trivial group.
    pub fn new(names: Vec<String>, relators: Vec<Word>) -> Result<Self, GroupError> {
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.contains(char::is_whitespace) || name.contains('^') {
                return Err(GroupError::BadPresentation(format!(
                    "invalid generator name `{name}`"
                )));
            }
            if names[..i].contains(name) {
                return Err(GroupError::BadPresentation(format!(
                    "duplicate generator `{name}`"
                )));
            }
        }
        for w in &relators {
            if w.max_generator().is_some_and(|g| g >= names.len()) {
                return Err(GroupError::BadPresentation(
                    "relator references a missing generator".into(),
                ));
            }
        }
        Ok(Self { names, relators })
    }

    pub fn from_strs(names: &[&str], relators: &[&str]) -> Result<Self, GroupError> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let relators = relators
            .iter()
            .map(|r| Word::parse(r, &names))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(names, relators)
    }

    pub fn num_generators(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|w| w.render(&self.names))
            .collect();
        write!(f, "< {} | {} >", self.names.join(", "), rels.join(", "))
    }
}

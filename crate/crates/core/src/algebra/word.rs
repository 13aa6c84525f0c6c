use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// One of the four generators `z_a^alpha`, named `z{a}{alpha}`.
///
/// Variant order is the normal-order convention `z11 < z21 < z12 < z22`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Generator {
    #[serde(rename = "z11")]
    Z11,
    #[serde(rename = "z21")]
    Z21,
    #[serde(rename = "z12")]
    Z12,
    #[serde(rename = "z22")]
    Z22,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::Z11, Generator::Z21, Generator::Z12, Generator::Z22];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Generator::Z11 => "z11",
            Generator::Z21 => "z21",
            Generator::Z12 => "z12",
            Generator::Z22 => "z22",
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A generator or its adjoint.
///
/// The derived order compares `starred` first, so every unstarred letter
/// precedes every starred one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub starred: bool,
    pub generator: Generator,
}

impl Letter {
    pub const ALL: [Letter; 8] = [
        Letter::plain(Generator::Z11),
        Letter::plain(Generator::Z21),
        Letter::plain(Generator::Z12),
        Letter::plain(Generator::Z22),
        Letter::star(Generator::Z11),
        Letter::star(Generator::Z21),
        Letter::star(Generator::Z12),
        Letter::star(Generator::Z22),
    ];

    pub const fn plain(generator: Generator) -> Self {
        Letter { starred: false, generator }
    }

    pub const fn star(generator: Generator) -> Self {
        Letter { starred: true, generator }
    }

    pub fn adjoint(self) -> Self {
        Letter { starred: !self.starred, generator: self.generator }
    }

    /// Position in [`Letter::ALL`].
    pub fn index(self) -> usize {
        usize::from(self.starred) * 4 + self.generator.index()
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.starred {
            write!(f, "{}*", self.generator)
        } else {
            write!(f, "{}", self.generator)
        }
    }
}

impl FromStr for Letter {
    type Err = ();

    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        let (name, starred) = match s.strip_suffix('*') {
            Some(rest) => (rest, true),
            None => (s, false),
        };
        let generator = match name {
            "z11" => Generator::Z11,
            "z21" => Generator::Z21,
            "z12" => Generator::Z12,
            "z22" => Generator::Z22,
            _ => return Err(()),
        };
        Ok(Letter { starred, generator })
    }
}

/// A word in the free monoid on the eight letters; the empty word is the unit.
///
/// Words are ordered by length first, then lexicographically by letter. This
/// is the well-order under which every rewrite rule strictly decreases.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        Word(letters.into_iter().collect())
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
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Reversed word with every letter's star toggled.
    pub fn adjoint(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.adjoint()).collect())
    }

    /// Positions `i` where `letters[i] > letters[i + 1]`; exactly the spots a
    /// rewrite rule applies.
    pub fn descents(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.windows(2).enumerate().filter(|(_, w)| w[0] > w[1]).map(|(i, _)| i)
    }

    pub fn is_normal(&self) -> bool {
        self.descents().next().is_none()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Letter> for Word {
    fn from(letter: Letter) -> Self {
        Word(vec![letter])
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, letter) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

/// Parses whitespace-separated tokens `z11|z21|z12|z22`, each optionally
/// suffixed with `*`. Empty input is the unit word.
///
/// Error positions count tokens from 1.
pub fn parse_word(text: &str) -> Result<Word> {
    text.split_whitespace()
        .enumerate()
        .map(|(i, token)| {
            token.parse::<Letter>().map_err(|()| Error::Parse {
                position: i + 1,
                token: token.to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()
        .map(Word)
}

//! Boson words over the alphabet `{a, a†}`.
//!
//! Text syntax accepted by [`parse_word`]:
//!
//! * letter tokens `a` (annihilator), `d`, `a+` or `a†` (creator), case
//!   insensitive, whitespace between tokens optional;
//! * or the exponent form `rs:[r1,s1;r2,s2;...]` denoting
//!   `(a†)^r1 a^s1 (a†)^r2 a^s2 ...`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// `a`
    Annihilator,
    /// `a†`
    Creator,
}

impl Letter {
    pub fn token(self) -> &'static str {
        match self {
            Letter::Annihilator => "a",
            Letter::Creator => "a+",
        }
    }
}

/// A finite product of `a` and `a†`. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BosonWord {
    letters: Vec<Letter>,
}

impl BosonWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        BosonWord { letters }
    }

    pub fn empty() -> Self {
        BosonWord::default()
    }

    /// Builds `(a†)^r1 a^s1 ··· (a†)^rM a^sM` from its exponent pairs.
    pub fn from_rs(pairs: &[(usize, usize)]) -> Self {
        let mut letters = Vec::new();
        for &(r, s) in pairs {
            letters.extend(core::iter::repeat_n(Letter::Creator, r));
            letters.extend(core::iter::repeat_n(Letter::Annihilator, s));
        }
        BosonWord { letters }
    }

    /// Shortest exponent-pair encoding: maximal runs `(a†)^r a^s` with
    /// `r + s > 0`. Only the first `r` and the last `s` can be zero.
    pub fn to_rs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        let mut i = 0;
        let n = self.letters.len();
        while i < n {
            let mut r = 0;
            while i < n && self.letters[i] == Letter::Creator {
                r += 1;
                i += 1;
            }
            let mut s = 0;
            while i < n && self.letters[i] == Letter::Annihilator {
                s += 1;
                i += 1;
            }
            pairs.push((r, s));
        }
        pairs
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `|w|_{a†}`
    pub fn creators(&self) -> usize {
        self.letters.iter().filter(|&&l| l == Letter::Creator).count()
    }

    /// `|w|_a`
    pub fn annihilators(&self) -> usize {
        self.letters.len() - self.creators()
    }

    pub fn excess(&self) -> i64 {
        self.creators() as i64 - self.annihilators() as i64
    }

    pub fn power(&self, n: usize) -> Self {
        let mut letters = Vec::with_capacity(self.letters.len() * n);
        for _ in 0..n {
            letters.extend_from_slice(&self.letters);
        }
        BosonWord { letters }
    }

    pub fn ends_with_annihilator(&self) -> bool {
        self.letters.last() == Some(&Letter::Annihilator)
    }
}

impl From<Vec<Letter>> for BosonWord {
    fn from(letters: Vec<Letter>) -> Self {
        BosonWord { letters }
    }
}

/// Space-separated tokens, `a` and `a+`. The empty word prints as nothing.
impl fmt::Display for BosonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(l.token())?;
        }
        Ok(())
    }
}

impl FromStr for BosonWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

pub fn parse_word(text: &str) -> Result<BosonWord> {
    let start = text.len() - text.trim_start().len();
    if text[start..].starts_with("rs:") {
        return parse_rs(text, start + 3);
    }

    let mut letters = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((offset, c)) = chars.next() {
        let letter = match c {
            c if c.is_whitespace() => continue,
            'a' | 'A' => match chars.peek() {
                Some(&(_, '+')) | Some(&(_, '†')) => {
                    chars.next();
                    Letter::Creator
                }
                _ => Letter::Annihilator,
            },
            'd' | 'D' => Letter::Creator,
            other => {
                return Err(Error::Parse {
                    offset,
                    message: alloc::format!("unexpected character {other:?}"),
                })
            }
        };
        letters.push(letter);
    }
    Ok(BosonWord { letters })
}

fn parse_rs(text: &str, body_start: usize) -> Result<BosonWord> {
    let err = |offset: usize, message: &str| Error::Parse {
        offset,
        message: message.to_string(),
    };

    let rest = &text[body_start..];
    let open = body_start + (rest.len() - rest.trim_start().len());
    if !text[open..].starts_with('[') {
        return Err(err(open, "expected '[' after 'rs:'"));
    }
    let close = match text[open..].find(']') {
        Some(p) => open + p,
        None => return Err(err(text.len(), "missing closing ']'")),
    };
    if let Some(p) = text[close + 1..].find(|c: char| !c.is_whitespace()) {
        return Err(err(close + 1 + p, "trailing characters after ']'"));
    }

    let body = &text[open + 1..close];
    let mut pairs = Vec::new();
    if body.trim().is_empty() {
        return Ok(BosonWord::empty());
    }
    let mut pos = open + 1;
    for group in body.split(';') {
        let mut exps = Vec::with_capacity(2);
        let mut field_pos = pos;
        for field in group.split(',') {
            let lead = field.len() - field.trim_start().len();
            let trimmed = field.trim();
            let at = field_pos + lead;
            if trimmed.is_empty() {
                return Err(err(at, "empty exponent"));
            }
            let value: i64 = trimmed
                .parse()
                .map_err(|_| err(at, "exponent is not an integer"))?;
            if value < 0 {
                return Err(Error::validation(alloc::format!(
                    "negative exponent {value} at byte {at}"
                )));
            }
            exps.push(value as usize);
            field_pos += field.len() + 1;
        }
        if exps.len() != 2 {
            return Err(err(pos, "each group needs exactly two exponents r,s"));
        }
        pairs.push((exps[0], exps[1]));
        pos += group.len() + 1;
    }
    Ok(BosonWord::from_rs(&pairs))
}

pub fn excess(w: &BosonWord) -> i64 {
    w.excess()
}

pub fn word_power(w: &BosonWord, n: usize) -> BosonWord {
    w.power(n)
}

impl BosonWord {
    /// Renders the word with `a†` / `a` glyphs and no separators, as in `a†aa†`.
    pub fn to_glyphs(&self) -> String {
        self.letters
            .iter()
            .map(|l| match l {
                Letter::Annihilator => "a",
                Letter::Creator => "a†",
            })
            .collect()
    }
}

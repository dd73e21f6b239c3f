//! Freely reduced words over a finite ordered alphabet.
//!
//! Surface syntax: a lowercase letter is a generator, the same letter in
//! uppercase is its inverse, `^<int>` raises the preceding letter or
//! parenthesized group to a power, `1` is the identity, whitespace is
//! ignored between tokens. For example `b a^3 b^-1`, `(ab)^-2`, `abA`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Upper bound on the number of letters produced while parsing.
pub const DEFAULT_MAX_WORD_LEN: usize = 1_000_000;

/// Ordered set of single-character generator names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet(Arc<[char]>);

impl Alphabet {
    pub fn new(names: &str) -> Result<Self> {
        Self::from_chars(names.chars().filter(|c| !c.is_whitespace()))
    }

    pub fn from_chars(names: impl IntoIterator<Item = char>) -> Result<Self> {
        let names: Vec<char> = names.into_iter().collect();
        if names.is_empty() {
            return Err(Error::InvalidAlphabet("at least one generator is required".into()));
        }
        for (i, &c) in names.iter().enumerate() {
            if !c.is_ascii_lowercase() {
                return Err(Error::InvalidAlphabet(format!(
                    "generator '{c}' is not a lowercase letter"
                )));
            }
            if names[..i].contains(&c) {
                return Err(Error::InvalidAlphabet(format!("duplicate generator '{c}'")));
            }
        }
        Ok(Self(names.into()))
    }

    /// The two-generator alphabet `ab`.
    pub fn free_ab() -> Self {
        Self(Arc::from(['a', 'b']))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn names(&self) -> &[char] {
        &self.0
    }

    pub fn name(&self, index: usize) -> char {
        self.0[index]
    }

    pub fn index_of(&self, name: char) -> Option<usize> {
        self.0.iter().position(|&c| c == name)
    }

    pub(crate) fn ensure_same(&self, other: &Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({self})")
    }
}

/// A generator or its formal inverse.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: usize,
    pub inverse: bool,
}

impl Letter {
    pub const fn pos(index: usize) -> Self {
        Self { index, inverse: false }
    }

    pub const fn neg(index: usize) -> Self {
        Self { index, inverse: true }
    }

    pub const fn inv(self) -> Self {
        Self {
            index: self.index,
            inverse: !self.inverse,
        }
    }

    pub const fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.inverse != other.inverse
    }
}

/// Freely reduces a letter sequence with a single left-to-right stack pass.
pub fn reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        push_reduced(&mut out, l);
    }
    out
}

fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    match out.last() {
        Some(&last) if last.cancels(l) => {
            out.pop();
        }
        _ => out.push(l),
    }
}

/// An element of the free group on an [`Alphabet`], always stored freely reduced.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity(alphabet: &Alphabet) -> Self {
        Self {
            alphabet: alphabet.clone(),
            letters: Vec::new(),
        }
    }

    /// Builds the reduced word equal to `letters`.
    pub fn from_letters(alphabet: &Alphabet, letters: &[Letter]) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|l| l.index >= alphabet.rank()) {
            return Err(Error::LetterOutOfRange {
                index: bad.index,
                alphabet: alphabet.to_string(),
            });
        }
        Ok(Self {
            alphabet: alphabet.clone(),
            letters: reduce(letters),
        })
    }

    pub fn generator(alphabet: &Alphabet, index: usize) -> Result<Self> {
        Self::from_letters(alphabet, &[Letter::pos(index)])
    }

    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        parse_word(text, alphabet)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    pub fn inverse(&self) -> Self {
        Self {
            alphabet: self.alphabet.clone(),
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// The reduced product `self · other`.
    pub fn concat(&self, other: &Word) -> Result<Self> {
        self.alphabet.ensure_same(&other.alphabet)?;
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Ok(Self {
            alphabet: self.alphabet.clone(),
            letters,
        })
    }

    /// `self^e`, computed as `c · u^e · c⁻¹` where `u` is the cyclic reduction.
    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let e = e.unsigned_abs() as usize;
        if e == 0 || base.is_identity() {
            return Self::identity(&self.alphabet);
        }
        let w = &base.letters;
        let mut c = 0;
        while c < w.len() / 2 && w[c].cancels(w[w.len() - 1 - c]) {
            c += 1;
        }
        let core = &w[c..w.len() - c];
        let mut letters = Vec::with_capacity(2 * c + core.len() * e);
        letters.extend_from_slice(&w[..c]);
        for _ in 0..e {
            letters.extend_from_slice(core);
        }
        letters.extend_from_slice(&w[w.len() - c..]);
        Self {
            alphabet: self.alphabet.clone(),
            letters,
        }
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate(&self, g: &Word) -> Result<Self> {
        g.concat(self)?.concat(&g.inverse())
    }
}

impl fmt::Display for Word {
    /// Canonical rendering with runs collapsed into exponents, e.g. `b^2ab^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for run in self.letters.chunk_by(|x, y| x == y) {
            let letter = run[0];
            let name = self.alphabet.name(letter.index);
            match (letter.inverse, run.len()) {
                (false, 1) => write!(f, "{name}")?,
                (false, n) => write!(f, "{name}^{n}")?,
                (true, n) => write!(f, "{name}^-{n}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word> {
    parse_word_with_cap(text, alphabet, DEFAULT_MAX_WORD_LEN)
}

pub fn parse_word_with_cap(text: &str, alphabet: &Alphabet, cap: usize) -> Result<Word> {
    let mut parser = Parser {
        chars: text.char_indices().collect(),
        pos: 0,
        end: text.len(),
        alphabet,
        cap,
    };
    let letters = parser.sequence(0)?;
    parser.skip_ws();
    if let Some((offset, c)) = parser.peek() {
        return Err(Error::Syntax {
            offset,
            reason: format!("unexpected '{c}'"),
        });
    }
    Ok(Word {
        alphabet: alphabet.clone(),
        letters,
    })
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
    alphabet: &'a Alphabet,
    cap: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.pos).copied()
    }

    fn offset(&self) -> usize {
        self.peek().map_or(self.end, |(o, _)| o)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some((_, c)) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn sequence(&mut self, depth: usize) -> Result<Vec<Letter>> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            let Some((offset, c)) = self.peek() else {
                break;
            };
            let atom = match c {
                ')' => break,
                '(' => {
                    self.pos += 1;
                    let inner = self.sequence(depth + 1)?;
                    self.skip_ws();
                    match self.peek() {
                        Some((_, ')')) => self.pos += 1,
                        _ => {
                            return Err(Error::Syntax {
                                offset,
                                reason: "unclosed '('".into(),
                            })
                        }
                    }
                    inner
                }
                '1' => {
                    self.pos += 1;
                    Vec::new()
                }
                '^' => {
                    return Err(Error::MalformedExponent {
                        offset,
                        reason: "exponent without a preceding letter or group".into(),
                    })
                }
                c if c.is_ascii_alphabetic() => {
                    self.pos += 1;
                    let index = self
                        .alphabet
                        .index_of(c.to_ascii_lowercase())
                        .ok_or(Error::UnknownLetter { letter: c, offset })?;
                    vec![Letter {
                        index,
                        inverse: c.is_ascii_uppercase(),
                    }]
                }
                c => {
                    return Err(Error::Syntax {
                        offset,
                        reason: format!("unexpected '{c}'"),
                    })
                }
            };
            let atom = match self.exponent()? {
                None => atom,
                Some(e) => {
                    let grown = atom
                        .len()
                        .checked_mul(e.unsigned_abs() as usize)
                        .filter(|&n| n <= self.cap);
                    if grown.is_none() {
                        return Err(Error::WordTooLong { cap: self.cap });
                    }
                    Word {
                        alphabet: self.alphabet.clone(),
                        letters: atom,
                    }
                    .pow(e)
                    .letters
                }
            };
            for l in atom {
                push_reduced(&mut out, l);
            }
            if out.len() > self.cap {
                return Err(Error::WordTooLong { cap: self.cap });
            }
        }
        if depth == 0 {
            if let Some((offset, ')')) = self.peek() {
                return Err(Error::Syntax {
                    offset,
                    reason: "unmatched ')'".into(),
                });
            }
        }
        Ok(out)
    }

    fn exponent(&mut self) -> Result<Option<i64>> {
        self.skip_ws();
        match self.peek() {
            Some((_, '^')) => self.pos += 1,
            _ => return Ok(None),
        }
        self.skip_ws();
        let start = self.offset();
        let mut digits = String::new();
        if let Some((_, s @ ('-' | '+'))) = self.peek() {
            digits.push(s);
            self.pos += 1;
        }
        while let Some((_, d)) = self.peek().filter(|(_, d)| d.is_ascii_digit()) {
            digits.push(d);
            self.pos += 1;
        }
        if !digits.ends_with(|c: char| c.is_ascii_digit()) {
            return Err(Error::MalformedExponent {
                offset: start,
                reason: "expected an integer after '^'".into(),
            });
        }
        digits.parse::<i64>().map(Some).map_err(|_| Error::MalformedExponent {
            offset: start,
            reason: format!("exponent '{digits}' does not fit in 64 bits"),
        })
    }
}

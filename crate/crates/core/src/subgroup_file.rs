//! Plain-text subgroup files: one generator word per line, `#` comments,
//! and an optional leading `alphabet: <letters>` declaration. Without a
//! declaration the alphabet is `ab` plus any other letters used.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::error::Error;
use crate::word::{parse_word, Alphabet, Word};

#[derive(Debug, Error)]
pub enum FileError {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Error,
    },

    #[error(transparent)]
    Alphabet(#[from] Error),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubgroupFile {
    pub alphabet: Option<Alphabet>,
    /// Generator texts with their 1-based line numbers.
    pub lines: Vec<(usize, String)>,
}

impl SubgroupFile {
    pub fn parse(text: &str) -> Result<Self, FileError> {
        let mut file = SubgroupFile::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if let Some(decl) = content.strip_prefix("alphabet:") {
                if file.alphabet.is_some() || !file.lines.is_empty() {
                    return Err(FileError::Line {
                        line,
                        source: Error::Syntax {
                            offset: 0,
                            reason: "the alphabet must be declared once, before any word".into(),
                        },
                    });
                }
                let alphabet =
                    Alphabet::new(decl).map_err(|source| FileError::Line { line, source })?;
                file.alphabet = Some(alphabet);
                continue;
            }
            file.lines.push((line, content.to_string()));
        }
        Ok(file)
    }

    pub fn read(path: &Path) -> Result<Self, FileError> {
        let text = std::fs::read_to_string(path).map_err(|source| FileError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text)
    }

    /// Lowercased letters appearing in the generator lines.
    pub fn letters_used(&self) -> BTreeSet<char> {
        self.lines.iter().flat_map(|(_, t)| letters_in(t)).collect()
    }

    pub fn words(&self, alphabet: &Alphabet) -> Result<Vec<Word>, FileError> {
        self.lines
            .iter()
            .map(|(line, text)| {
                parse_word(text, alphabet).map_err(|source| FileError::Line { line: *line, source })
            })
            .collect()
    }
}

pub fn letters_in(text: &str) -> impl Iterator<Item = char> + '_ {
    text.chars()
        .filter(char::is_ascii_alphabetic)
        .map(|c| c.to_ascii_lowercase())
}

/// The common alphabet for a set of files plus extra word texts. Declared
/// alphabets must agree; otherwise `ab` and every letter used, sorted.
pub fn resolve_alphabet(files: &[&SubgroupFile], extra: &[&str]) -> Result<Alphabet, FileError> {
    let mut declared: Option<&Alphabet> = None;
    for a in files.iter().filter_map(|f| f.alphabet.as_ref()) {
        match declared {
            Some(d) if d != a => {
                return Err(FileError::Alphabet(Error::AlphabetMismatch {
                    left: d.to_string(),
                    right: a.to_string(),
                }))
            }
            _ => declared = Some(a),
        }
    }
    if let Some(a) = declared {
        return Ok(a.clone());
    }
    let mut letters: BTreeSet<char> = ['a', 'b'].into();
    for f in files {
        letters.extend(f.letters_used());
    }
    for t in extra {
        letters.extend(letters_in(t));
    }
    Ok(Alphabet::from_chars(letters)?)
}

//! Seeded random words and generator lists for property checks and the
//! bound-checking trials.

use std::ops::RangeInclusive;

use rand::Rng;

use crate::word::{Alphabet, Letter, Word};

/// A reduced word whose length is uniform in `0..=max_len`, each letter
/// uniform among those that do not cancel the previous one.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, alphabet: &Alphabet, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    random_word_of_len(rng, alphabet, len)
}

pub fn random_word_of_len<R: Rng + ?Sized>(rng: &mut R, alphabet: &Alphabet, len: usize) -> Word {
    let rank = alphabet.rank();
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = Letter {
            index: rng.gen_range(0..rank),
            inverse: rng.gen(),
        };
        if letters.last().is_some_and(|p| p.cancels(l)) {
            continue;
        }
        letters.push(l);
    }
    Word::from_letters(alphabet, &letters).expect("indices drawn from the alphabet")
}

/// Between `count.start()` and `count.end()` nonidentity words of length
/// `1..=max_len`.
pub fn random_generators<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: &Alphabet,
    count: RangeInclusive<usize>,
    max_len: usize,
) -> Vec<Word> {
    let n = rng.gen_range(count);
    (0..n)
        .map(|_| {
            let len = rng.gen_range(1..=max_len.max(1));
            random_word_of_len(rng, alphabet, len)
        })
        .collect()
}

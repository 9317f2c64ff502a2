//! Seeded random cyclic words.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::words::{CyclicWord, Letter};

/// Uniform letters with immediate cancellations rejected, then cyclic
/// reduction. Each `(seed, stream)` pair is an independent reproducible
/// sequence, so trials can be generated in any order.
pub struct WordSampler {
    rng: ChaCha8Rng,
    rank: usize,
    max_len: usize,
}

impl WordSampler {
    /// Panics if `rank` or `max_len` is zero.
    pub fn new(seed: u64, stream: u64, rank: usize, max_len: usize) -> Self {
        assert!(rank > 0 && max_len > 0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        WordSampler { rng, rank, max_len }
    }

    /// A nontrivial cyclically reduced word of length at most `max_len`.
    pub fn word(&mut self) -> CyclicWord {
        let len = self.rng.gen_range(1..=self.max_len);
        let mut letters: Vec<Letter> = Vec::with_capacity(len);
        while letters.len() < len {
            let l = Letter::from_id(self.rng.gen_range(0..2 * self.rank));
            if letters.last() != Some(&l.inv()) {
                letters.push(l);
            }
        }
        CyclicWord::from_letters(letters)
    }

    pub fn words<const N: usize>(&mut self) -> [CyclicWord; N] {
        std::array::from_fn(|_| self.word())
    }
}

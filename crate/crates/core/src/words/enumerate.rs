use super::{BraidWord, Letter, SmWord};

/// Freely reduced braid words of length `<= max_len`, shortest first.
///
/// Within one length, words are ordered lexicographically over the alphabet
/// `σ_1, σ_1^-1, σ_2, σ_2^-1, ...`.
pub fn enumerate_braid_words(n: usize, max_len: usize) -> BraidWordEnumerator {
    BraidWordEnumerator {
        alphabet: (1..n).flat_map(|i| [Letter::Sigma(i), Letter::SigmaInv(i)]).collect(),
        n,
        max_len,
        level: vec![Vec::new()],
        len: 0,
        pos: 0,
    }
}

pub struct BraidWordEnumerator {
    alphabet: Vec<Letter>,
    n: usize,
    max_len: usize,
    level: Vec<Vec<Letter>>,
    len: usize,
    pos: usize,
}

impl BraidWordEnumerator {
    fn advance_level(&mut self) {
        let mut next = Vec::with_capacity(self.level.len() * self.alphabet.len());
        for word in &self.level {
            for &l in &self.alphabet {
                if word.last().is_some_and(|&prev| prev.cancels(l)) {
                    continue;
                }
                let mut w = word.clone();
                w.push(l);
                next.push(w);
            }
        }
        self.level = next;
        self.len += 1;
        self.pos = 0;
    }
}

impl Iterator for BraidWordEnumerator {
    type Item = BraidWord;

    fn next(&mut self) -> Option<BraidWord> {
        while self.pos >= self.level.len() {
            if self.len >= self.max_len || self.level.is_empty() {
                return None;
            }
            self.advance_level();
        }
        let letters = self.level[self.pos].clone();
        self.pos += 1;
        Some(BraidWord(SmWord { n: self.n, letters }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn tokens(n: usize, max_len: usize) -> Vec<String> {
        enumerate_braid_words(n, max_len).map(|w| w.to_string()).collect()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(tokens(2, 0), vec![""]);
        assert_eq!(tokens(2, 1), vec!["", "s1", "S1"]);
        assert_eq!(tokens(2, 2), vec!["", "s1", "S1", "s1 s1", "S1 S1"]);
        assert_eq!(enumerate_braid_words(3, 2).count(), 17);
    }

    #[test]
    fn counts_match_reduced_word_formula() {
        // 1 + sum_{k=1}^{L} 2m (2m-1)^{k-1} with m = n-1 generators
        for n in 2..=4usize {
            let m = 2 * (n as u64 - 1);
            for max_len in 0..=5u32 {
                let expected: u64 = 1 + (1..=max_len).map(|k| m * (m - 1).pow(k - 1)).sum::<u64>();
                assert_eq!(enumerate_braid_words(n, max_len as usize).count() as u64, expected);
            }
        }
    }

    #[test]
    fn shortest_first_reduced_and_distinct() {
        let words: Vec<BraidWord> = enumerate_braid_words(3, 4).collect();
        assert!(words.windows(2).all(|p| p[0].len() <= p[1].len()));
        assert!(words.iter().all(|w| w.free_reduce() == *w));
        let unique: HashSet<_> = words.iter().collect();
        assert_eq!(unique.len(), words.len());
    }
}

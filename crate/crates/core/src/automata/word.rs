use crate::Symbol;

/// All words of length `0..=max_len` over `alphabet` in length-lexicographic
/// order (shorter first, then by the alphabet's order).
pub fn words_up_to(alphabet: &[Symbol], max_len: usize) -> impl Iterator<Item = Vec<Symbol>> + '_ {
    let k = alphabet.len();
    let mut digits: Vec<usize> = Vec::new();
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let word = digits.iter().map(|&d| alphabet[d]).collect();
        // advance the odometer; overflow grows the length
        let mut i = digits.len();
        loop {
            if i == 0 {
                if digits.len() == max_len || k == 0 {
                    done = true;
                } else {
                    digits = vec![0; digits.len() + 1];
                }
                break;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < k {
                break;
            }
            digits[i] = 0;
        }
        Some(word)
    })
}

/// `Σ_{l=0}^{max_len} k^l`, or `None` on overflow.
pub fn count_words_up_to(k: usize, max_len: usize) -> Option<u64> {
    let mut total: u64 = 0;
    let mut layer: u64 = 1;
    for l in 0..=max_len {
        if l > 0 {
            layer = layer.checked_mul(k as u64)?;
        }
        total = total.checked_add(layer)?;
        if k == 0 {
            break;
        }
    }
    Some(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_length_lex() {
        let words: Vec<String> = words_up_to(&['a', 'b'], 2)
            .map(|w| w.into_iter().collect())
            .collect();
        assert_eq!(words, ["", "a", "b", "aa", "ab", "ba", "bb"]);
    }

    #[test]
    fn counts_match_enumeration() {
        for k in 0..4 {
            for n in 0..5 {
                let alphabet: Vec<char> = "abc".chars().take(k).collect();
                assert_eq!(
                    words_up_to(&alphabet, n).count() as u64,
                    count_words_up_to(k, n).unwrap()
                );
            }
        }
        assert_eq!(count_words_up_to(2, 200), None);
    }

    #[test]
    fn max_len_zero_is_just_epsilon() {
        assert_eq!(
            words_up_to(&['a'], 0).collect::<Vec<_>>(),
            vec![Vec::<char>::new()]
        );
    }
}

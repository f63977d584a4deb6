//! LCS length by the standard row-rolling dynamic program.

use crate::error::{Error, Result};
use crate::lcs::word::WordPair;

/// Cell guard for full-table computations, `(len1+1)*(len2+1)` cells.
pub const LCS_TABLE_CELL_LIMIT: u64 = 1 << 28;

pub(crate) fn check_lcs_capacity(len1: u32, len2: u32, tables: u64) -> Result<()> {
    let cells = (len1 as u64 + 1) * (len2 as u64 + 1) * tables;
    if cells > LCS_TABLE_CELL_LIMIT {
        return Err(Error::Capacity {
            what: "LCS DP table",
            needed: cells,
            limit: LCS_TABLE_CELL_LIMIT,
        });
    }
    Ok(())
}

/// Length of the longest common subsequence of the pair's two words.
pub fn lcs_length(pair: &WordPair) -> Result<u32> {
    check_lcs_capacity(pair.len1(), pair.len2(), 1)?;
    let (a, b) = (pair.word1(), pair.word2());
    let mut row = vec![0u32; b.len() + 1];
    for &ca in a {
        let mut diag = 0u32;
        for (j, &cb) in b.iter().enumerate() {
            let up = row[j + 1];
            row[j + 1] = if ca == cb {
                diag + 1
            } else {
                up.max(row[j])
            };
            diag = up;
        }
    }
    Ok(row[b.len()])
}

/// Forward prefix table: `F[i][j]` = LCS of `word1[..i]` and `word2[..j]`.
pub(crate) fn lcs_forward_table(a: &[u32], b: &[u32]) -> Vec<Vec<u32>> {
    let mut f = vec![vec![0u32; b.len() + 1]; a.len() + 1];
    for i in 1..=a.len() {
        for j in 1..=b.len() {
            f[i][j] = if a[i - 1] == b[j - 1] {
                f[i - 1][j - 1] + 1
            } else {
                f[i - 1][j].max(f[i][j - 1])
            };
        }
    }
    f
}

/// Backward suffix table: `B[i][j]` = LCS of `word1[i..]` and `word2[j..]`.
pub(crate) fn lcs_backward_table(a: &[u32], b: &[u32]) -> Vec<Vec<u32>> {
    let mut t = vec![vec![0u32; b.len() + 1]; a.len() + 1];
    for i in (0..a.len()).rev() {
        for j in (0..b.len()).rev() {
            t[i][j] = if a[i] == b[j] {
                t[i + 1][j + 1] + 1
            } else {
                t[i + 1][j].max(t[i][j + 1])
            };
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lcs::word::uniform_dist;
    use crate::rng::mix2;

    #[test]
    fn identical_words_score_their_length() {
        let w: Vec<u32> = vec![0, 1, 0, 1, 1, 0];
        let p = WordPair::from_symbols(2, w.clone(), w).unwrap();
        assert_eq!(lcs_length(&p).unwrap(), 6);
    }

    #[test]
    fn disjoint_alphabets_score_zero() {
        let p = WordPair::from_symbols(4, vec![0, 1, 0, 1], vec![2, 3, 3, 2]).unwrap();
        assert_eq!(lcs_length(&p).unwrap(), 0);
    }

    #[test]
    fn classic_textbook_instance() {
        // Frozen by hand: LCS of (0,1,2,1,3) and (1,0,3,1,3) is (0,1,3) or
        // (1,1,3) etc., length 3.
        let p = WordPair::from_symbols(4, vec![0, 1, 2, 1, 3], vec![1, 0, 3, 1, 3]).unwrap();
        assert_eq!(lcs_length(&p).unwrap(), 3);
    }

    #[test]
    fn symmetric_in_the_two_words() {
        for trial in 0..100u64 {
            let p = WordPair::generate_uneven(9, 7, 3, &uniform_dist(3), mix2(0x1C5, trial))
                .unwrap();
            assert_eq!(lcs_length(&p).unwrap(), lcs_length(&p.swapped()).unwrap());
        }
    }

    #[test]
    fn appending_a_common_symbol_never_hurts() {
        for trial in 0..100u64 {
            let p =
                WordPair::generate(10, 2, &uniform_dist(2), mix2(0x1C6, trial)).unwrap();
            let base = lcs_length(&p).unwrap();
            let mut w1 = p.word1().to_vec();
            let mut w2 = p.word2().to_vec();
            w1.push(1);
            w2.push(1);
            let q = WordPair::from_symbols(2, w1, w2).unwrap();
            assert!(lcs_length(&q).unwrap() >= base);
        }
    }

    #[test]
    fn equality_with_shorter_word_iff_subsequence() {
        // word1 embedded in word2: LC hits the shorter length exactly.
        let sub = WordPair::from_symbols(3, vec![0, 2, 1], vec![0, 0, 2, 2, 1, 0]).unwrap();
        assert_eq!(lcs_length(&sub).unwrap(), 3);
        // Not a subsequence: strictly below the shorter length.
        let not = WordPair::from_symbols(3, vec![1, 2, 0], vec![0, 0, 2, 2, 1, 0]).unwrap();
        assert!(lcs_length(&not).unwrap() < 3);
    }

    #[test]
    fn bounded_by_the_shorter_word() {
        for trial in 0..50u64 {
            let p = WordPair::generate_uneven(12, 5, 2, &uniform_dist(2), mix2(0x1C7, trial))
                .unwrap();
            assert!(lcs_length(&p).unwrap() <= 5);
        }
    }
}

//! The alignment envelope: DP-grid points lying on at least one optimal
//! alignment path.
//!
//! Optimal alignments are monotone paths through the `(len1+1) x (len2+1)`
//! DP grid whose diagonal steps are the matched symbol pairs. A grid point
//! `(i, j)` is on such a path iff the prefix LCS `F(i,j)` plus the suffix
//! LCS `B(i,j)` equals the total: the two halves concatenate to an optimal
//! alignment through the point, and no point on an optimal path can do
//! better than the total.

use crate::error::Result;
use crate::lcs::dp::{check_lcs_capacity, lcs_backward_table, lcs_forward_table};
use crate::lcs::word::WordPair;

/// Per-row extremes of the on-path set, plus the LCS length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlignmentEnvelope {
    len1: u32,
    len2: u32,
    lc: u32,
    jmin: Vec<u32>,
    jmax: Vec<u32>,
}

impl AlignmentEnvelope {
    pub fn len1(&self) -> u32 {
        self.len1
    }

    pub fn len2(&self) -> u32 {
        self.len2
    }

    /// The LCS length.
    pub fn lc(&self) -> u32 {
        self.lc
    }

    /// Smallest on-path `j` in row `i`.
    pub fn jmin_at(&self, i: u32) -> u32 {
        self.jmin[i as usize]
    }

    /// Largest on-path `j` in row `i`.
    pub fn jmax_at(&self, i: u32) -> u32 {
        self.jmax[i as usize]
    }

    /// Iterate `(i, jmin, jmax)` over all rows.
    pub fn rows(&self) -> impl Iterator<Item = (u32, u32, u32)> + '_ {
        (0..=self.len1).map(move |i| (i, self.jmin_at(i), self.jmax_at(i)))
    }

    /// Largest `|i - j|` over the on-path set: the alignment's transversal
    /// deviation from the diagonal.
    pub fn max_deviation(&self) -> u32 {
        self.rows()
            .map(|(i, lo, hi)| hi.abs_diff(i).max(i.abs_diff(lo)))
            .max()
            .expect("at least one row")
    }
}

/// Compute the alignment envelope of a word pair.
pub fn alignment_envelope(pair: &WordPair) -> Result<AlignmentEnvelope> {
    check_lcs_capacity(pair.len1(), pair.len2(), 2)?;
    let (a, b) = (pair.word1(), pair.word2());
    let f = lcs_forward_table(a, b);
    let bt = lcs_backward_table(a, b);
    let lc = f[a.len()][b.len()];
    let mut jmin = vec![0u32; a.len() + 1];
    let mut jmax = vec![0u32; a.len() + 1];
    for i in 0..=a.len() {
        let mut lo = None;
        let mut hi = None;
        for j in 0..=b.len() {
            if f[i][j] + bt[i][j] == lc {
                if lo.is_none() {
                    lo = Some(j);
                }
                hi = Some(j);
            }
        }
        // Row i is crossed by the path that deletes straight through it.
        jmin[i] = lo.expect("every row meets an optimal path") as u32;
        jmax[i] = hi.unwrap() as u32;
    }
    Ok(AlignmentEnvelope {
        len1: pair.len1(),
        len2: pair.len2(),
        lc,
        jmin,
        jmax,
    })
}

/// Exact on-path point set, for oracle-scale comparisons.
pub fn on_alignment_points(pair: &WordPair) -> Result<Vec<(u32, u32)>> {
    check_lcs_capacity(pair.len1(), pair.len2(), 2)?;
    let (a, b) = (pair.word1(), pair.word2());
    let f = lcs_forward_table(a, b);
    let bt = lcs_backward_table(a, b);
    let lc = f[a.len()][b.len()];
    let mut out = Vec::new();
    for i in 0..=a.len() {
        for j in 0..=b.len() {
            if f[i][j] + bt[i][j] == lc {
                out.push((i as u32, j as u32));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_words_pinch_to_the_diagonal() {
        let w: Vec<u32> = vec![0, 1, 1, 0, 1];
        let p = WordPair::from_symbols(2, w.clone(), w).unwrap();
        let env = alignment_envelope(&p).unwrap();
        assert_eq!(env.lc(), 5);
        for (i, lo, hi) in env.rows() {
            assert_eq!(lo, i);
            assert_eq!(hi, i);
        }
        assert_eq!(env.max_deviation(), 0);
    }

    #[test]
    fn disjoint_alphabets_fill_the_rectangle() {
        let p = WordPair::from_symbols(4, vec![0, 1, 0], vec![2, 3, 2, 3]).unwrap();
        let env = alignment_envelope(&p).unwrap();
        assert_eq!(env.lc(), 0);
        for (_, lo, hi) in env.rows() {
            assert_eq!(lo, 0);
            assert_eq!(hi, 4);
        }
        assert_eq!(env.max_deviation(), 4);
    }

    #[test]
    fn envelope_bounds_are_monotone() {
        use crate::lcs::word::uniform_dist;
        use crate::rng::mix2;
        for trial in 0..200u64 {
            let p = WordPair::generate_uneven(8, 6, 2, &uniform_dist(2), mix2(0xE2, trial))
                .unwrap();
            let env = alignment_envelope(&p).unwrap();
            let mut prev = (0u32, 0u32);
            for (_, lo, hi) in env.rows() {
                assert!(lo <= hi);
                assert!(lo >= prev.0 && hi >= prev.1);
                prev = (lo, hi);
            }
        }
    }
}

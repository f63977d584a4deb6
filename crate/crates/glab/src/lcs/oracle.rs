//! Exhaustive LCS oracles: subsequence enumeration for the length, full
//! alignment-path enumeration for the on-path set.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::lcs::word::WordPair;

/// Length guard for `2^len` subsequence enumeration.
pub const ORACLE_MAX_SUBSEQ_LEN: u32 = 20;

/// Per-word length guard for alignment-path enumeration.
pub const ORACLE_MAX_ALIGN_LEN: u32 = 10;

/// Reference LCS length: enumerate every subsequence of the shorter word
/// and test it against the longer one.
pub fn brute_force_lcs_length(pair: &WordPair) -> Result<u32> {
    let (short, long) = if pair.len1() <= pair.len2() {
        (pair.word1(), pair.word2())
    } else {
        (pair.word2(), pair.word1())
    };
    if short.len() as u32 > ORACLE_MAX_SUBSEQ_LEN {
        return Err(Error::OracleScale {
            what: "subsequence enumeration",
            size: short.len() as u64,
            limit: ORACLE_MAX_SUBSEQ_LEN as u64,
        });
    }
    let mut best = 0u32;
    for mask in 0u64..(1u64 << short.len()) {
        if mask.count_ones() <= best {
            continue;
        }
        let candidate: Vec<u32> = short
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &c)| c)
            .collect();
        if is_subsequence(&candidate, long) {
            best = candidate.len() as u32;
        }
    }
    Ok(best)
}

fn is_subsequence(needle: &[u32], hay: &[u32]) -> bool {
    let mut it = hay.iter();
    needle.iter().all(|c| it.any(|h| h == c))
}

/// Union of grid points over all optimal alignment paths, by enumerating
/// every monotone path (right, up, and match-diagonal steps).
pub fn brute_force_alignment_union(pair: &WordPair) -> Result<BTreeSet<(u32, u32)>> {
    if pair.len1() > ORACLE_MAX_ALIGN_LEN || pair.len2() > ORACLE_MAX_ALIGN_LEN {
        return Err(Error::OracleScale {
            what: "alignment path enumeration",
            size: pair.len1().max(pair.len2()) as u64,
            limit: ORACLE_MAX_ALIGN_LEN as u64,
        });
    }
    let lc = brute_force_lcs_length(pair)?;
    let (a, b) = (pair.word1(), pair.word2());
    let mut union = BTreeSet::new();
    let mut trail: Vec<(u32, u32)> = vec![(0, 0)];

    fn recurse(
        a: &[u32],
        b: &[u32],
        lc: u32,
        matches: u32,
        trail: &mut Vec<(u32, u32)>,
        union: &mut BTreeSet<(u32, u32)>,
    ) {
        let (i, j) = *trail.last().unwrap();
        if i as usize == a.len() && j as usize == b.len() {
            if matches == lc {
                union.extend(trail.iter().copied());
            }
            return;
        }
        if (i as usize) < a.len() {
            trail.push((i + 1, j));
            recurse(a, b, lc, matches, trail, union);
            trail.pop();
        }
        if (j as usize) < b.len() {
            trail.push((i, j + 1));
            recurse(a, b, lc, matches, trail, union);
            trail.pop();
        }
        if (i as usize) < a.len() && (j as usize) < b.len() && a[i as usize] == b[j as usize] {
            trail.push((i + 1, j + 1));
            recurse(a, b, lc, matches + 1, trail, union);
            trail.pop();
        }
    }
    recurse(a, b, lc, 0, &mut trail, &mut union);
    Ok(union)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lcs::dp::lcs_length;
    use crate::lcs::envelope::on_alignment_points;
    use crate::lcs::word::uniform_dist;
    use crate::rng::{mix2, mix3};

    #[test]
    fn oracle_agrees_with_dp_on_random_pairs() {
        for trial in 0..300u64 {
            let seed = mix2(0x10C5, trial);
            let len1 = 1 + (mix3(seed, 1, 0) % 12) as u32;
            let len2 = 1 + (mix3(seed, 2, 0) % 12) as u32;
            let sigma = 2 + (mix3(seed, 3, 0) % 3) as u32;
            let p =
                WordPair::generate_uneven(len1, len2, sigma, &uniform_dist(sigma), seed)
                    .unwrap();
            assert_eq!(
                brute_force_lcs_length(&p).unwrap(),
                lcs_length(&p).unwrap(),
                "trial {trial}"
            );
        }
    }

    #[test]
    fn alignment_union_matches_envelope_identity() {
        for trial in 0..200u64 {
            let seed = mix2(0xA11C, trial);
            let len = 1 + (mix3(seed, 1, 0) % 8) as u32;
            let p = WordPair::generate(len, 2, &uniform_dist(2), seed).unwrap();
            let slow = brute_force_alignment_union(&p).unwrap();
            let fast: BTreeSet<(u32, u32)> =
                on_alignment_points(&p).unwrap().into_iter().collect();
            assert_eq!(fast, slow, "trial {trial}");
        }
    }

    #[test]
    fn guards_refuse_large_instances() {
        let p = WordPair::generate(24, 2, &uniform_dist(2), 0).unwrap();
        assert!(matches!(
            brute_force_lcs_length(&p),
            Err(Error::OracleScale { .. })
        ));
        let q = WordPair::generate(12, 2, &uniform_dist(2), 0).unwrap();
        assert!(matches!(
            brute_force_alignment_union(&q),
            Err(Error::OracleScale { .. })
        ));
    }
}

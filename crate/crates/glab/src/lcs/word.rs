//! Random word pairs with a common symbol distribution.

use crate::error::{Error, Result};
use crate::rng::{mix2, mix3, unit_f64};

/// Tolerance on the distribution's total mass.
const DIST_TOLERANCE: f64 = 1e-12;

/// Two random words over a shared alphabet, regenerable from
/// `(lengths, alphabet, dist, seed)`.
#[derive(Debug, Clone, PartialEq)]
pub struct WordPair {
    alphabet_size: u32,
    dist: Vec<f64>,
    seed: u64,
    symbols1: Vec<u32>,
    symbols2: Vec<u32>,
}

impl WordPair {
    /// Generate both words of length `len` with i.i.d. symbols.
    pub fn generate(len: u32, alphabet_size: u32, dist: &[f64], seed: u64) -> Result<Self> {
        Self::generate_uneven(len, len, alphabet_size, dist, seed)
    }

    /// Generate words of possibly different lengths.
    pub fn generate_uneven(
        len1: u32,
        len2: u32,
        alphabet_size: u32,
        dist: &[f64],
        seed: u64,
    ) -> Result<Self> {
        check_dist(alphabet_size, dist)?;
        let cdf = cumulative(dist);
        let word = |tag: u64, len: u32| -> Vec<u32> {
            (0..len)
                .map(|i| draw_symbol(&cdf, unit_f64(mix3(seed, tag, i as u64))))
                .collect()
        };
        Ok(Self {
            alphabet_size,
            dist: dist.to_vec(),
            seed,
            symbols1: word(1, len1),
            symbols2: word(2, len2),
        })
    }

    /// Fixture constructor from explicit symbols.
    pub fn from_symbols(alphabet_size: u32, symbols1: Vec<u32>, symbols2: Vec<u32>) -> Result<Self> {
        if alphabet_size < 2 {
            return Err(Error::InvalidArgument(format!(
                "alphabet must have at least 2 symbols, got {alphabet_size}"
            )));
        }
        if symbols1.iter().chain(&symbols2).any(|&c| c >= alphabet_size) {
            return Err(Error::InvalidArgument(
                "symbol outside alphabet range".into(),
            ));
        }
        let dist = vec![1.0 / alphabet_size as f64; alphabet_size as usize];
        Ok(Self {
            alphabet_size,
            dist,
            seed: 0,
            symbols1,
            symbols2,
        })
    }

    pub fn alphabet_size(&self) -> u32 {
        self.alphabet_size
    }

    pub fn dist(&self) -> &[f64] {
        &self.dist
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn len1(&self) -> u32 {
        self.symbols1.len() as u32
    }

    pub fn len2(&self) -> u32 {
        self.symbols2.len() as u32
    }

    pub fn word1(&self) -> &[u32] {
        &self.symbols1
    }

    pub fn word2(&self) -> &[u32] {
        &self.symbols2
    }

    /// The pair with its words swapped.
    pub fn swapped(&self) -> WordPair {
        WordPair {
            alphabet_size: self.alphabet_size,
            dist: self.dist.clone(),
            seed: self.seed,
            symbols1: self.symbols2.clone(),
            symbols2: self.symbols1.clone(),
        }
    }
}

/// Replication helper: pair `rep` of an experiment under `master_seed`.
pub fn word_pair_rep(
    len: u32,
    alphabet_size: u32,
    dist: &[f64],
    master_seed: u64,
    rep: u32,
) -> Result<WordPair> {
    WordPair::generate(len, alphabet_size, dist, mix2(master_seed, rep as u64))
}

/// The uniform distribution on `alphabet_size` symbols.
pub fn uniform_dist(alphabet_size: u32) -> Vec<f64> {
    vec![1.0 / alphabet_size as f64; alphabet_size as usize]
}

fn check_dist(alphabet_size: u32, dist: &[f64]) -> Result<()> {
    if alphabet_size < 2 {
        return Err(Error::InvalidArgument(format!(
            "alphabet must have at least 2 symbols, got {alphabet_size}"
        )));
    }
    if dist.len() != alphabet_size as usize {
        return Err(Error::InvalidArgument(format!(
            "distribution has {} entries for alphabet of {alphabet_size}",
            dist.len()
        )));
    }
    if dist.iter().any(|&w| w.is_nan() || w < 0.0 || !w.is_finite()) {
        return Err(Error::InvalidArgument(
            "distribution weights must be finite and nonnegative".into(),
        ));
    }
    let total: f64 = dist.iter().sum();
    if (total - 1.0).abs() > DIST_TOLERANCE {
        return Err(Error::InvalidArgument(format!(
            "distribution sums to {total}, not 1"
        )));
    }
    Ok(())
}

fn cumulative(dist: &[f64]) -> Vec<f64> {
    let mut acc = 0.0;
    dist.iter()
        .map(|w| {
            acc += w;
            acc
        })
        .collect()
}

fn draw_symbol(cdf: &[f64], u: f64) -> u32 {
    match cdf.iter().position(|&c| u < c) {
        Some(i) => i as u32,
        None => cdf.len() as u32 - 1,
    }
}

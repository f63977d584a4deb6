//! Counter-mode pseudo-randomness.
//!
//! Every random quantity in this crate is a pure function of a seed and a
//! small tuple of counters (vertex coordinates, replication index, stream
//! tag). There is no sequential generator state, so fields regenerate
//! bit-for-bit under any fill order and replications can run on any number
//! of workers without changing results.

/// SplitMix64 finalizer. Bijective on `u64`.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

const GOLDEN: u64 = 0x9e37_79b9_7f4a_7c15;

/// Hash a seed together with one counter.
///
/// For a fixed `seed`, the map `a -> mix2(seed, a)` is injective, so derived
/// streams for distinct counters never collide.
#[inline]
pub fn mix2(seed: u64, a: u64) -> u64 {
    mix64(mix64(seed.wrapping_add(GOLDEN)) ^ a)
}

/// Hash a seed together with two counters (e.g. vertex coordinates).
#[inline]
pub fn mix3(seed: u64, a: u64, b: u64) -> u64 {
    mix64(mix2(seed, a) ^ b)
}

/// Map hashed bits to a double in `[0, 1)` using the top 53 bits.
#[inline]
pub fn unit_f64(bits: u64) -> f64 {
    (bits >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// One Bernoulli(`s`) draw from hashed bits.
#[inline]
pub fn bernoulli(bits: u64, s: f64) -> bool {
    unit_f64(bits) < s
}

//! Counter-based deterministic random number generation.
//!
//! Every random quantity in a run is a pure function of `(seed, stream tag,
//! counter indices)`, so parallel runs and replays reproduce bit-identically
//! without shared generator state. The mixer is SplitMix64, which is
//! platform-stable and good enough for simulation noise (this is not a
//! cryptographic generator).

/// Stream tags keep independent noise consumers from colliding on the same
/// counter values.
pub mod stream {
    /// Measurement noise on the roll angle.
    pub const MEAS_THETA: u64 = 0x11;
    /// Measurement noise on the roll rate.
    pub const MEAS_RATE: u64 = 0x12;
    /// Band-limited disturbance noise; add the disturbance index.
    pub const DISTURBANCE: u64 = 0x20;
}

#[inline]
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Mix a seed, a stream tag, and a counter into one 64-bit word.
#[inline]
pub fn mix(seed: u64, tag: u64, counter: u64) -> u64 {
    splitmix64(splitmix64(seed ^ splitmix64(tag)) ^ counter)
}

/// Uniform sample in `[-1, 1)` keyed by `(seed, tag, counter)`.
#[inline]
pub fn uniform_signed(seed: u64, tag: u64, counter: u64) -> f64 {
    // 53 mantissa bits -> [0, 1), then shift to [-1, 1).
    let u = (mix(seed, tag, counter) >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
    2.0 * u - 1.0
}

/// Standard normal sample keyed by `(seed, tag, counter)` (Box–Muller on two
/// derived uniforms).
pub fn standard_normal(seed: u64, tag: u64, counter: u64) -> f64 {
    let w = mix(seed, tag, counter);
    let a = splitmix64(w ^ 0xa5a5_a5a5_a5a5_a5a5);
    let b = splitmix64(w ^ 0x5a5a_5a5a_5a5a_5a5a);
    let u1 = ((a >> 11) as f64 + 1.0) * (1.0 / (1u64 << 53) as f64); // (0, 1]
    let u2 = (b >> 11) as f64 * (1.0 / (1u64 << 53) as f64); // [0, 1)
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        assert_eq!(mix(1, 2, 3), mix(1, 2, 3));
        assert_ne!(mix(1, 2, 3), mix(1, 2, 4));
        assert_ne!(mix(1, 2, 3), mix(2, 2, 3));
    }

    #[test]
    fn uniform_range() {
        for i in 0..10_000 {
            let x = uniform_signed(42, 7, i);
            assert!((-1.0..1.0).contains(&x));
        }
    }

    #[test]
    fn normal_moments() {
        let n = 100_000;
        let mut sum = 0.0;
        let mut sum_sq = 0.0;
        for i in 0..n {
            let x = standard_normal(9, stream::MEAS_THETA, i);
            sum += x;
            sum_sq += x * x;
        }
        let mean = sum / n as f64;
        let var = sum_sq / n as f64 - mean * mean;
        assert!(mean.abs() < 0.01, "mean {mean}");
        assert!((var - 1.0).abs() < 0.02, "var {var}");
    }
}

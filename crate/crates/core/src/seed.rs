/// Derives an independent 64-bit seed from a base seed and a stream index.
///
/// Uses the splitmix64 finalizer, so consecutive indices produce
/// decorrelated seeds. Every seeded stage of the toolkit (per-iteration
/// SPSA perturbations, per-batch decode padding, bootstrap resamples)
/// derives its generator through this function, which is what makes
/// checkpoint resume and sharded sampling bit-identical to a single run.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    let mut z = base
        .wrapping_add(0x9e37_79b9_7f4a_7c15)
        .wrapping_add(index.wrapping_mul(0xbf58_476d_1ce4_e5b9));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

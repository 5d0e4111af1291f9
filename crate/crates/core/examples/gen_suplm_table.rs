//! Generates `src/fluct/suplm_table.rs`: quantiles of the limiting
//! distribution of the supLM statistic,
//!
//!   sup_{t in [trim, 1-trim]} ||B(t)||^2 / (t (1-t)),
//!
//! where B is a k-dimensional Brownian bridge. One 12-dimensional bridge
//! per path serves every k at once because the squared norm is cumulative
//! over dimensions.
//!
//! Run with `cargo run --release --example gen_suplm_table > src/fluct/suplm_table.rs`
//! from the crate root. Takes on the order of a minute.

use rand::distributions::Distribution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const PATHS: usize = 200_000;
const GRID: usize = 1500;
const MAX_K: usize = 12;
const SEED: u64 = 0x00C0_FFEE;
const TRIMS: [f64; 5] = [0.05, 0.10, 0.15, 0.20, 0.25];
const TAIL_PROBS: [f64; 44] = [
    0.96, 0.94, 0.92, 0.90, 0.85, 0.80, 0.75, 0.70, 0.65, 0.60, 0.55, 0.50, 0.45, 0.40, 0.35,
    0.30, 0.25, 0.22, 0.20, 0.18, 0.16, 0.14, 0.12, 0.10, 0.09, 0.08, 0.07, 0.06, 0.05, 0.045,
    0.04, 0.035, 0.03, 0.025, 0.02, 0.015, 0.01, 0.008, 0.006, 0.005, 0.004, 0.003, 0.002, 0.001,
];

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let normal = rand_distr::StandardNormal;
    // Window bounds per trim, as inclusive grid-index ranges.
    let windows: Vec<(usize, usize)> = TRIMS
        .iter()
        .map(|&tr| {
            let lo = (tr * GRID as f64).ceil() as usize;
            let hi = ((1.0 - tr) * GRID as f64).floor() as usize;
            (lo.max(1), hi.min(GRID - 1))
        })
        .collect();

    // stats[k-1][trim][path]
    let mut stats = vec![vec![vec![0f32; PATHS]; TRIMS.len()]; MAX_K];

    let mut bridge = vec![0f64; GRID];
    let mut acc = vec![0f64; GRID];
    let sqrt_n = (GRID as f64).sqrt();
    for path in 0..PATHS {
        for v in acc.iter_mut() {
            *v = 0.0;
        }
        for k in 0..MAX_K {
            let mut w = 0.0;
            for b in bridge.iter_mut() {
                let e: f64 = normal.sample(&mut rng);
                w += e / sqrt_n;
                *b = w;
            }
            let w1 = bridge[GRID - 1];
            for (i, b) in bridge.iter_mut().enumerate() {
                let t = (i + 1) as f64 / GRID as f64;
                *b -= t * w1;
                acc[i] += *b * *b;
            }
            for (trim_idx, &(lo, hi)) in windows.iter().enumerate() {
                let mut best = 0.0f64;
                for i in lo..=hi {
                    let t = i as f64 / GRID as f64;
                    let q = acc[i - 1] / (t * (1.0 - t));
                    if q > best {
                        best = q;
                    }
                }
                stats[k][trim_idx][path] = best as f32;
            }
        }
    }

    println!("//! Upper-tail quantiles of the supLM limiting distribution over a");
    println!("//! k-dimensional Brownian bridge, by dimension and trimming fraction.");
    println!("//!");
    println!(
        "//! Generated by `examples/gen_suplm_table.rs` ({PATHS} paths, {GRID}-point grid,"
    );
    println!("//! seed {SEED:#x}). Do not edit by hand.");
    println!();
    println!("pub const MAX_K: usize = {MAX_K};");
    println!("pub const N_TRIMS: usize = {};", TRIMS.len());
    println!("pub const N_PROBS: usize = {};", TAIL_PROBS.len());
    println!("pub const TRIMS: [f64; N_TRIMS] = {TRIMS:?};");
    println!("pub const TAIL_PROBS: [f64; N_PROBS] = {TAIL_PROBS:?};");
    println!();
    println!("/// `QUANTILES[k-1][trim][prob]`: statistic value whose upper-tail");
    println!("/// probability is `TAIL_PROBS[prob]` for a k-dimensional process.");
    println!("pub const QUANTILES: [[[f64; N_PROBS]; N_TRIMS]; MAX_K] = [");
    for k in 0..MAX_K {
        println!("    // k = {}", k + 1);
        println!("    [");
        for trim_idx in 0..TRIMS.len() {
            let mut sorted = stats[k][trim_idx].clone();
            sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let qs: Vec<String> = TAIL_PROBS
                .iter()
                .map(|&p| {
                    let h = (1.0 - p) * (PATHS - 1) as f64;
                    let i = h.floor() as usize;
                    let frac = h - i as f64;
                    let lo = sorted[i] as f64;
                    let hi = sorted[(i + 1).min(PATHS - 1)] as f64;
                    format!("{:.6}", lo + frac * (hi - lo))
                })
                .collect();
            println!("        [");
            for chunk in qs.chunks(8) {
                println!("            {},", chunk.join(", "));
            }
            println!("        ],");
        }
        println!("    ],");
    }
    println!("];");
}

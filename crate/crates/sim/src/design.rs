//! Scenario grids: the one-variable-at-a-time star design, the null
//! design for the false-split rate, and the full factorial grid.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::SimConfig;

pub const DELTA_BETA_GRID: [f64; 8] = [0.1, 0.3, 0.5, 0.7, 0.9, 1.1, 1.3, 1.5];
pub const N_GRID: [usize; 5] = [100, 300, 500, 700, 900];
pub const M_GRID: [usize; 4] = [10, 30, 50, 70];
pub const P_GRID: [usize; 4] = [1, 2, 3, 4];
pub const Q_GRID: [usize; 4] = [1, 2, 3, 4];

/// Replication counts small enough for a workstation run; raise them for
/// publication-grade precision.
pub const DESK_STAR_REPS: usize = 50;
pub const DESK_TYPE1_REPS: usize = 300;
pub const DESK_FACTORIAL_REPS: usize = 1;
pub const DESK_FACTORIAL_SUBSAMPLE: f64 = 0.02;

/// One simulation setting within a design. The id doubles as the seed key
/// of the setting, so it must be stable across runs of the same design.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub id: usize,
    /// "axis=value" for star scenarios, "default" for the base setting,
    /// the full coordinate list for factorial scenarios.
    pub label: String,
    pub config: SimConfig,
}

fn qual_str(qualitative: bool) -> &'static str {
    if qualitative {
        "yes"
    } else {
        "no"
    }
}

/// Star design: each axis value with the other variables at their
/// defaults. The base setting appears once, labeled "default"; axis
/// values equal to the default are skipped as duplicates of it.
pub fn star_scenarios() -> Vec<Scenario> {
    let base = SimConfig::default();
    let mut out = Vec::new();
    let mut seen: Vec<SimConfig> = Vec::new();
    let push = |label: String, config: SimConfig, out: &mut Vec<Scenario>, seen: &mut Vec<SimConfig>| {
        if seen.contains(&config) {
            return;
        }
        seen.push(config.clone());
        out.push(Scenario {
            id: out.len(),
            label,
            config,
        });
    };

    push("default".into(), base.clone(), &mut out, &mut seen);
    for &delta_beta in &DELTA_BETA_GRID {
        push(
            format!("delta_beta={delta_beta}"),
            SimConfig { delta_beta, ..base.clone() },
            &mut out,
            &mut seen,
        );
    }
    for &n in &N_GRID {
        push(format!("n={n}"), SimConfig { n, ..base.clone() }, &mut out, &mut seen);
    }
    for &qualitative in &[true, false] {
        push(
            format!("qualitative={}", qual_str(qualitative)),
            SimConfig { qualitative, ..base.clone() },
            &mut out,
            &mut seen,
        );
    }
    for &m in &M_GRID {
        push(format!("m={m}"), SimConfig { m, ..base.clone() }, &mut out, &mut seen);
    }
    for &p in &P_GRID {
        push(format!("p={p}"), SimConfig { p, ..base.clone() }, &mut out, &mut seen);
    }
    for &q in &Q_GRID {
        push(format!("q={q}"), SimConfig { q, ..base.clone() }, &mut out, &mut seen);
    }
    out
}

/// Null design: no predictive factors, so any split is a false positive.
/// Sample size varies over its grid, everything else stays default.
pub fn type1_scenarios() -> Vec<Scenario> {
    N_GRID
        .iter()
        .enumerate()
        .map(|(id, &n)| Scenario {
            id,
            label: format!("n={n}"),
            config: SimConfig {
                n,
                p: 0,
                ..SimConfig::default()
            },
        })
        .collect()
}

/// Full factorial grid over all six axes, 5120 scenarios in canonical
/// nesting order (delta_beta outermost, q innermost).
pub fn factorial_scenarios() -> Vec<Scenario> {
    let base = SimConfig::default();
    let mut out = Vec::with_capacity(5120);
    for &delta_beta in &DELTA_BETA_GRID {
        for &n in &N_GRID {
            for &qualitative in &[true, false] {
                for &m in &M_GRID {
                    for &p in &P_GRID {
                        for &q in &Q_GRID {
                            let id = out.len();
                            out.push(Scenario {
                                id,
                                label: format!(
                                    "delta_beta={delta_beta},n={n},qualitative={},m={m},p={p},q={q}",
                                    qual_str(qualitative)
                                ),
                                config: SimConfig {
                                    delta_beta,
                                    n,
                                    qualitative,
                                    m,
                                    p,
                                    q,
                                    ..base.clone()
                                },
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

/// Keeps each scenario independently with the given probability. Ids are
/// preserved, so per-replication seeds match a full run of the grid.
pub fn subsample_scenarios(scenarios: Vec<Scenario>, fraction: f64, seed: u64) -> Vec<Scenario> {
    let fraction = fraction.clamp(0.0, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    scenarios
        .into_iter()
        .filter(|_| rng.gen::<f64>() < fraction)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_design_has_22_distinct_settings() {
        let scenarios = star_scenarios();
        assert_eq!(scenarios.len(), 22);
        assert_eq!(scenarios[0].label, "default");
        for (i, sc) in scenarios.iter().enumerate() {
            assert_eq!(sc.id, i);
            sc.config.validate().unwrap();
        }
        for a in 0..scenarios.len() {
            for b in a + 1..scenarios.len() {
                assert_ne!(scenarios[a].config, scenarios[b].config);
            }
        }
    }

    #[test]
    fn star_design_skips_axis_values_equal_to_the_default() {
        let scenarios = star_scenarios();
        let labels: Vec<&str> = scenarios.iter().map(|s| s.label.as_str()).collect();
        assert!(!labels.contains(&"delta_beta=0.5"));
        assert!(!labels.contains(&"n=300"));
        assert!(!labels.contains(&"qualitative=yes"));
        assert!(labels.contains(&"qualitative=no"));
        assert!(labels.contains(&"delta_beta=1.5"));
        assert!(labels.contains(&"m=70"));
    }

    #[test]
    fn null_design_varies_only_n() {
        let scenarios = type1_scenarios();
        assert_eq!(scenarios.len(), 5);
        for sc in &scenarios {
            assert_eq!(sc.config.p, 0);
            assert_eq!(sc.config.q, 2);
            sc.config.validate().unwrap();
        }
        let ns: Vec<usize> = scenarios.iter().map(|s| s.config.n).collect();
        assert_eq!(ns, vec![100, 300, 500, 700, 900]);
    }

    #[test]
    fn factorial_grid_is_complete() {
        let scenarios = factorial_scenarios();
        assert_eq!(scenarios.len(), 5120);
        for (i, sc) in scenarios.iter().enumerate() {
            assert_eq!(sc.id, i);
            sc.config.validate().unwrap();
        }
        let first = &scenarios[0].config;
        assert_eq!(
            (first.delta_beta, first.n, first.qualitative, first.m, first.p, first.q),
            (0.1, 100, true, 10, 1, 1)
        );
        let last = &scenarios[5119].config;
        assert_eq!(
            (last.delta_beta, last.n, last.qualitative, last.m, last.p, last.q),
            (1.5, 900, false, 70, 4, 4)
        );
    }

    #[test]
    fn subsampling_is_deterministic_and_keeps_ids() {
        let a = subsample_scenarios(factorial_scenarios(), 0.01, 9);
        let b = subsample_scenarios(factorial_scenarios(), 0.01, 9);
        assert_eq!(a.len(), b.len());
        assert!(a.iter().zip(&b).all(|(x, y)| x.id == y.id));
        // Binomial(5120, 0.01) stays within 3 sigma of 51 effectively always.
        assert!(a.len() >= 25 && a.len() <= 80, "kept {}", a.len());
        let mut ids: Vec<usize> = a.iter().map(|s| s.id).collect();
        ids.dedup();
        assert!(ids.windows(2).all(|w| w[0] < w[1]));
        let c = subsample_scenarios(factorial_scenarios(), 0.01, 10);
        assert!(c.iter().map(|s| s.id).collect::<Vec<_>>() != ids || c.len() != a.len());
    }
}

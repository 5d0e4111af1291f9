//! Exponential-family definitions: link, inverse link, variance function
//! and per-observation log-likelihood for the three supported families.

use statrs::function::gamma::ln_gamma;

/// Mean clamp keeping log and division terms finite near the domain edge.
const MU_EPS: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Identity link, normal errors.
    Gaussian,
    /// Logit link, 0/1 response.
    Binomial,
    /// Log link, count response.
    Poisson,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Gaussian => "gaussian",
            Family::Binomial => "binomial",
            Family::Poisson => "poisson",
        }
    }

    /// Link g(mu) = eta.
    pub fn link(self, mu: f64) -> f64 {
        match self {
            Family::Gaussian => mu,
            Family::Binomial => {
                let m = mu.clamp(MU_EPS, 1.0 - MU_EPS);
                (m / (1.0 - m)).ln()
            }
            Family::Poisson => mu.max(MU_EPS).ln(),
        }
    }

    /// Inverse link g^{-1}(eta) = mu.
    pub fn inv_link(self, eta: f64) -> f64 {
        match self {
            Family::Gaussian => eta,
            Family::Binomial => {
                // Numerically symmetric logistic; avoids overflow for |eta| large.
                if eta >= 0.0 {
                    1.0 / (1.0 + (-eta).exp())
                } else {
                    let e = eta.exp();
                    e / (1.0 + e)
                }
            }
            Family::Poisson => eta.min(700.0).exp(),
        }
    }

    /// Variance function V(mu). For the canonical links used here this is
    /// also d mu / d eta.
    pub fn variance(self, mu: f64) -> f64 {
        match self {
            Family::Gaussian => 1.0,
            Family::Binomial => {
                let m = mu.clamp(MU_EPS, 1.0 - MU_EPS);
                m * (1.0 - m)
            }
            Family::Poisson => mu.max(MU_EPS),
        }
    }

    /// Log-likelihood contribution of a single observation. `dispersion`
    /// is the ML variance estimate for gaussian and ignored otherwise.
    pub fn log_density(self, y: f64, mu: f64, dispersion: f64) -> f64 {
        match self {
            Family::Gaussian => {
                let r = y - mu;
                -0.5 * ((2.0 * std::f64::consts::PI * dispersion).ln() + r * r / dispersion)
            }
            Family::Binomial => {
                let m = mu.clamp(MU_EPS, 1.0 - MU_EPS);
                y * m.ln() + (1.0 - y) * (1.0 - m).ln()
            }
            Family::Poisson => {
                let m = mu.max(MU_EPS);
                y * m.ln() - m - ln_gamma(y + 1.0)
            }
        }
    }

    /// Starting mean for iterative fitting, adjusted away from the
    /// domain boundary so the first working response is finite.
    pub fn initial_mean(self, y: f64) -> f64 {
        match self {
            Family::Gaussian => y,
            Family::Binomial => (y + 0.5) / 2.0,
            Family::Poisson => y + 0.1,
        }
    }

    /// Whether the response vector lies in the family's domain; returns the
    /// offending row indices otherwise.
    pub fn check_response(self, y: &[f64]) -> Vec<usize> {
        let bad = |v: f64| match self {
            Family::Gaussian => !v.is_finite(),
            Family::Binomial => !(v == 0.0 || v == 1.0),
            Family::Poisson => !(v.is_finite() && v >= 0.0 && v.fract() == 0.0),
        };
        y.iter()
            .enumerate()
            .filter(|(_, &v)| bad(v))
            .map(|(i, _)| i)
            .collect()
    }

    /// Gaussian fits have a closed form; the others iterate.
    pub fn is_gaussian(self) -> bool {
        matches!(self, Family::Gaussian)
    }
}

impl std::str::FromStr for Family {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "gaussian" | "gaussian-identity" | "normal" => Ok(Family::Gaussian),
            "binomial" | "binomial-logit" | "logistic" => Ok(Family::Binomial),
            "poisson" | "poisson-log" => Ok(Family::Poisson),
            other => Err(crate::Error::InvalidControl(format!(
                "unknown family `{other}` (expected gaussian, binomial or poisson)"
            ))),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn link_roundtrip() {
        let grids: [(Family, Vec<f64>); 3] = [
            (Family::Gaussian, vec![-3.0, 0.0, 2.5, 1e4]),
            (Family::Binomial, vec![0.01, 0.2, 0.5, 0.77, 0.99]),
            (Family::Poisson, vec![0.1, 1.0, 5.0, 120.0]),
        ];
        for (fam, mus) in grids {
            for mu in mus {
                let back = fam.inv_link(fam.link(mu));
                assert!((back - mu).abs() < 1e-12 * mu.abs().max(1.0), "{fam} {mu} {back}");
            }
        }
    }

    #[test]
    fn binomial_domain() {
        let bad = Family::Binomial.check_response(&[0.0, 1.0, 0.5, 1.0, 2.0]);
        assert_eq!(bad, vec![2, 4]);
    }

    #[test]
    fn poisson_domain() {
        let bad = Family::Poisson.check_response(&[0.0, 3.0, -1.0, 2.5]);
        assert_eq!(bad, vec![2, 3]);
    }

    #[test]
    fn variance_matches_mean_derivative() {
        // Canonical links: d mu / d eta = V(mu). Central differences.
        for fam in [Family::Binomial, Family::Poisson] {
            for eta in [-2.0, -0.5, 0.0, 1.0, 2.0] {
                let h = 1e-6;
                let d = (fam.inv_link(eta + h) - fam.inv_link(eta - h)) / (2.0 * h);
                let v = fam.variance(fam.inv_link(eta));
                assert!((d - v).abs() < 1e-8, "{fam} at {eta}: {d} vs {v}");
            }
        }
    }
}

//! Closed-form color-sum predictions for named families, exactly as
//! published. No correction is applied here; disagreement with the exact
//! values is reported by [`super::verify`].

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum PredictFamily {
    Path { n: usize },
    Cycle { n: usize },
    /// Sums over all complete extensions of `P_n`.
    ExtendedPath { n: usize },
    /// Sums over all complete extensions of `C_n`.
    ExtendedCycle { n: usize },
    /// `χ′` of the constructed extension of a bipartite graph with both
    /// sides even; `n = |X| >= m = |Y|`, `ell` bi-distinct non-adjacent pairs.
    BipartiteExtEven { n: usize, m: usize, ell: usize },
    /// Same with both sides odd.
    BipartiteExtOdd { n: usize, m: usize, ell: usize },
    /// Extensions of a bipartite graph of even order `n` with `|X| = |Y|`
    /// satisfying Hall's condition on non-neighbourhoods.
    HallBipartite { n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub chi_sum_min: usize,
    /// Absent for families where only the minimum is published.
    pub chi_sum_max: Option<usize>,
}

impl PredictFamily {
    pub fn name(&self) -> &'static str {
        match self {
            PredictFamily::Path { .. } => "path",
            PredictFamily::Cycle { .. } => "cycle",
            PredictFamily::ExtendedPath { .. } => "extended_path",
            PredictFamily::ExtendedCycle { .. } => "extended_cycle",
            PredictFamily::BipartiteExtEven { .. } => "bipartite_ext_even",
            PredictFamily::BipartiteExtOdd { .. } => "bipartite_ext_odd",
            PredictFamily::HallBipartite { .. } => "hall_bipartite",
        }
    }

    /// Builds a family from its name and positional parameters (`n` or
    /// `n, m, ell`).
    pub fn from_name(name: &str, params: &[usize]) -> Result<Self> {
        let one = || match params {
            [n] => Ok(*n),
            _ => Err(Error::InvalidParameter(format!("`{name}` takes one parameter n"))),
        };
        let three = || match params {
            [n, m, ell] => Ok((*n, *m, *ell)),
            _ => Err(Error::InvalidParameter(format!("`{name}` takes parameters n, m, ell"))),
        };
        Ok(match name {
            "path" => PredictFamily::Path { n: one()? },
            "cycle" => PredictFamily::Cycle { n: one()? },
            "extended_path" => PredictFamily::ExtendedPath { n: one()? },
            "extended_cycle" => PredictFamily::ExtendedCycle { n: one()? },
            "bipartite_ext_even" => {
                let (n, m, ell) = three()?;
                PredictFamily::BipartiteExtEven { n, m, ell }
            }
            "bipartite_ext_odd" => {
                let (n, m, ell) = three()?;
                PredictFamily::BipartiteExtOdd { n, m, ell }
            }
            "hall_bipartite" => PredictFamily::HallBipartite { n: one()? },
            other => return Err(Error::UnknownFamily(other.to_string())),
        })
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn both(min: usize, max: usize) -> Prediction {
    Prediction {
        chi_sum_min: min,
        chi_sum_max: Some(max),
    }
}

/// The `ℓ`-matched form: `3(n−ℓ)/2 + 7(m−ℓ)/2 + 3ℓ`.
fn bipartite_full(n: usize, m: usize, ell: usize) -> usize {
    3 * (n - ell) / 2 + 7 * (m - ell) / 2 + 3 * ell
}

/// The `ℓ−1`-matched form: `⌊(n−ℓ)/2⌋ + 2⌈(n−ℓ)/2⌉ + 7(m−ℓ+1)/2 + 3ℓ`.
fn bipartite_reduced(n: usize, m: usize, ell: usize) -> usize {
    let d = n - ell;
    d / 2 + 2 * d.div_ceil(2) + 7 * (m - ell + 1) / 2 + 3 * ell
}

fn check_bipartite(n: usize, m: usize, ell: usize, parity: usize) -> Result<()> {
    if m == 0 || n < m {
        return Err(invalid("need n >= m >= 1"));
    }
    if n % 2 != parity || m % 2 != parity {
        let kind = if parity == 0 { "even" } else { "odd" };
        return Err(invalid(format!("both sides must be {kind}")));
    }
    if ell > m {
        return Err(invalid("ell cannot exceed m"));
    }
    Ok(())
}

pub fn predict(family: PredictFamily) -> Result<Prediction> {
    match family {
        PredictFamily::Path { n } => match n {
            0 => Err(invalid("path needs n >= 1")),
            n if n % 2 == 0 => Ok(both(3 * n / 2, 3 * n / 2)),
            n => Ok(both(3 * (n / 2) + 1, 3 * (n / 2) + 2)),
        },
        PredictFamily::Cycle { n } => {
            if n < 3 {
                return Err(invalid("cycle needs n >= 3"));
            }
            let min = 3 * n.div_ceil(2);
            let max = if n % 2 == 0 { 5 * n / 2 } else { 5 * (n / 2) + 1 };
            Ok(both(min, max))
        }
        PredictFamily::ExtendedPath { n } => {
            if n < 4 || n % 2 == 1 {
                return Err(invalid("extended path needs even n >= 4"));
            }
            if n == 4 {
                Ok(both(7, 9))
            } else {
                Ok(both(3 * n / 2, 5 * n / 2 - 1))
            }
        }
        PredictFamily::ExtendedCycle { n } => {
            if n < 4 || n % 2 == 1 {
                return Err(invalid("extended cycle needs even n >= 4"));
            }
            if n == 4 {
                return Ok(both(10, 10));
            }
            let t = n / 2;
            let max = if t % 2 == 0 { 5 * n / 2 - 1 } else { 5 * n / 2 - 3 };
            Ok(both(3 * n / 2, max))
        }
        PredictFamily::BipartiteExtEven { n, m, ell } => {
            check_bipartite(n, m, ell, 0)?;
            let v = if ell % 2 == 0 {
                bipartite_full(n, m, ell)
            } else {
                bipartite_reduced(n, m, ell)
            };
            Ok(Prediction { chi_sum_min: v, chi_sum_max: None })
        }
        PredictFamily::BipartiteExtOdd { n, m, ell } => {
            check_bipartite(n, m, ell, 1)?;
            let v = if ell % 2 == 0 {
                bipartite_reduced(n, m, ell)
            } else {
                bipartite_full(n, m, ell)
            };
            Ok(Prediction { chi_sum_min: v, chi_sum_max: None })
        }
        PredictFamily::HallBipartite { n } => {
            if n < 4 || n % 2 == 1 {
                return Err(invalid("hall_bipartite needs even n >= 4"));
            }
            Ok(both(3 * n / 2, 5 * n / 2 - 3))
        }
    }
}

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Named graph families with canonical labellings.
///
/// Paths and cycles number their vertices consecutively; `K_{r,s}` puts
/// `X = 0..r` and `Y = r..r+s`. Serializes as its `kind:params` string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
}

impl Family {
    pub fn build(self) -> Result<Graph> {
        match self {
            Family::Path(n) => {
                if n < 1 {
                    return Err(Error::InvalidParameter("path needs n >= 1".into()));
                }
                Graph::new(n, (1..n).map(|i| (i - 1, i)))
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
                }
                Graph::new(n, (1..n).map(|i| (i - 1, i)).chain([(0, n - 1)]))
            }
            Family::Complete(n) => {
                if n < 1 {
                    return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
                }
                Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            }
            Family::CompleteBipartite(r, s) => {
                if r < 1 || s < 1 {
                    return Err(Error::InvalidParameter(
                        "complete bipartite graph needs r, s >= 1".into(),
                    ));
                }
                Graph::new(r + s, (0..r).flat_map(|u| (r..r + s).map(move |v| (u, v))))
            }
        }
    }
}

impl TryFrom<String> for Family {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Family> for String {
    fn from(f: Family) -> String {
        f.to_string()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteBipartite(r, s) => write!(f, "complete_bipartite:{r},{s}"),
        }
    }
}

/// Parses `kind:params`, e.g. `path:7`, `cycle:6`, `complete_bipartite:3,3`.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, params) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidParameter(format!("expected kind:params, got `{s}`")))?;
        let nums = params
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidParameter(format!("bad size `{p}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        let one = || match nums.as_slice() {
            [n] => Ok(*n),
            _ => Err(Error::InvalidParameter(format!("`{kind}` takes one size"))),
        };
        match kind.trim() {
            "path" => Ok(Family::Path(one()?)),
            "cycle" => Ok(Family::Cycle(one()?)),
            "complete" => Ok(Family::Complete(one()?)),
            "complete_bipartite" | "complete-bipartite" | "kbip" => match nums.as_slice() {
                [r, s] => Ok(Family::CompleteBipartite(*r, *s)),
                _ => Err(Error::InvalidParameter("complete_bipartite takes r,s".into())),
            },
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

//! Four-point hyperbolicity and interval slimness, in exact half-integer
//! arithmetic.

use crate::metric::MetricOracle;
use std::str::FromStr;

/// A nonnegative half-integer, stored doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(pub u32);

impl HalfInt {
    pub fn from_doubled(d: u32) -> HalfInt {
        HalfInt(d)
    }
    pub fn whole(k: u32) -> HalfInt {
        HalfInt(2 * k)
    }
    pub fn doubled(self) -> u32 {
        self.0
    }
    /// Largest integer <= the value (hop distances are integers).
    pub fn floor(self) -> usize {
        (self.0 / 2) as usize
    }
}

impl std::fmt::Display for HalfInt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for HalfInt {
    type Err = String;
    fn from_str(s: &str) -> Result<HalfInt, String> {
        let s = s.trim();
        if let Some(num) = s.strip_suffix("/2") {
            let k: u32 = num.trim().parse().map_err(|_| format!("bad half-integer `{s}`"))?;
            return Ok(HalfInt(k));
        }
        if let Some(whole) = s.strip_suffix(".5") {
            let k: u32 = if whole.is_empty() {
                0
            } else {
                whole.parse().map_err(|_| format!("bad half-integer `{s}`"))?
            };
            return Ok(HalfInt(2 * k + 1));
        }
        if let Some(whole) = s.strip_suffix(".0") {
            let k: u32 = whole.parse().map_err(|_| format!("bad half-integer `{s}`"))?;
            return Ok(HalfInt(2 * k));
        }
        let k: u32 = s.parse().map_err(|_| format!("bad half-integer `{s}`"))?;
        Ok(HalfInt(2 * k))
    }
}

/// The three pairwise distance sums of a 4-tuple, sorted descending.
pub fn distance_sums(m: &MetricOracle, u: usize, v: usize, x: usize, y: usize) -> [usize; 3] {
    let mut s = [
        m.dist(u, v) + m.dist(x, y),
        m.dist(u, x) + m.dist(v, y),
        m.dist(u, y) + m.dist(v, x),
    ];
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

/// Exact hyperbolicity: half the maximum gap between the two largest
/// distance sums over all 4-tuples.
pub fn delta_star(m: &MetricOracle) -> HalfInt {
    let n = m.n();
    let mut best = 0usize;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let s = distance_sums(m, a, b, c, d);
                    best = best.max(s[0] - s[1]);
                }
            }
        }
    }
    HalfInt(best as u32)
}

/// Every vertex of I(y,z) is within floor(delta) hops of I(x,y) union
/// I(x,z). Returns the least violating (x,y,z,u).
pub fn interval_delta_slim(m: &MetricOracle, delta: HalfInt) -> Option<Vec<usize>> {
    let n = m.n();
    let bound = delta.floor();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for u in 0..n {
                    if !m.between(y, u, z) {
                        continue;
                    }
                    let ok = (0..n).any(|v| {
                        (m.between(x, v, y) || m.between(x, v, z)) && m.dist(u, v) <= bound
                    });
                    if !ok {
                        return Some(vec![x, y, z, u]);
                    }
                }
            }
        }
    }
    None
}

/// Diagnostic: for every edge vw and vertices u,x with v between u,w and w
/// between v,x, require d(u,x) >= d(u,v) + d(w,x) + d(v,w) - i.
pub fn alpha_metric_check(m: &MetricOracle, i: usize) -> Option<Vec<usize>> {
    let n = m.n();
    for v in 0..n {
        for w in 0..n {
            if !m.edge(v, w) {
                continue;
            }
            for u in 0..n {
                if !m.between(u, v, w) {
                    continue;
                }
                for x in 0..n {
                    if !m.between(v, w, x) {
                        continue;
                    }
                    if m.dist(u, x) + i < m.dist(u, v) + m.dist(w, x) + 1 {
                        return Some(vec![v, w, u, x]);
                    }
                }
            }
        }
    }
    None
}

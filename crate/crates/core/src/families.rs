//! Deterministic generators for the named graph families accepted by the
//! `name(args)` input form and the CLI `gen` command.
//!
//! Canonical labelings:
//! - `hypercube(m)`: vertices are bitmask integers `0..2^m`.
//! - `halved_cube(m)`: even-weight bitmasks of length m, ascending.
//! - `johnson(m,k)`: k-subset bitmasks of `[m]`, ascending (colex order).
//! - `hamming(m1,..,md)`: mixed-radix tuples, coordinate 0 least significant.
//! - `cycle(k)`, `path(k)`: consecutive integers.
//! - `wheel(k)`, `almost_wheel(k)`: rim `0..k`, hub `k`; the almost wheel
//!   drops the spoke to rim vertex 0.
//! - `grid(p,q)`: vertex (r,c) is `r*q + c`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn bad(family: &str, msg: impl Into<String>) -> Error {
    Error::BadParams { family: family.into(), msg: msg.into() }
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(bad("complete", "need n >= 1"));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::new(n, &edges)?.with_name(format!("complete({n})")))
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a < 1 || b < 1 {
        return Err(bad("complete_bipartite", "need both parts >= 1"));
    }
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Ok(Graph::new(a + b, &edges)?.with_name(format!("complete_bipartite({a},{b})")))
}

/// K4 minus one edge: vertices 0,1 joined to everything, 2 and 3 nonadjacent.
pub fn k4_minus() -> Graph {
    Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        .unwrap()
        .with_name("k4_minus")
}

/// K33 minus one edge: parts {0,1,2} and {3,4,5}, edge (2,5) removed.
pub fn k33_minus() -> Graph {
    let mut edges = Vec::new();
    for u in 0..3 {
        for v in 3..6 {
            if !(u == 2 && v == 5) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(6, &edges).unwrap().with_name("k33_minus")
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(bad("path", "need n >= 1"));
    }
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Ok(Graph::new(n, &edges)?.with_name(format!("path({n})")))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(bad("cycle", "need n >= 3"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::new(n, &edges)?.with_name(format!("cycle({n})")))
}

pub fn star(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(bad("star", "need n >= 1"));
    }
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Ok(Graph::new(n, &edges)?.with_name(format!("star({n})")))
}

/// Spine of ceil(n/2) vertices with leaves attached round-robin.
pub fn caterpillar(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(bad("caterpillar", "need n >= 1"));
    }
    let spine = n.div_ceil(2);
    let mut edges: Vec<_> = (0..spine.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    for leaf in spine..n {
        edges.push(((leaf - spine) % spine, leaf));
    }
    Ok(Graph::new(n, &edges)?.with_name(format!("caterpillar({n})")))
}

/// Random tree: vertex i attaches to a uniform earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(bad("tree", "need n >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Ok(Graph::new(n, &edges)?.with_name(format!("tree({n},{seed})")))
}

pub fn hypercube(m: usize) -> Result<Graph> {
    if m > 16 {
        return Err(bad("hypercube", "dimension too large"));
    }
    let n = 1usize << m;
    let mut edges = Vec::new();
    for u in 0..n {
        for b in 0..m {
            let v = u ^ (1 << b);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(n, &edges)?.with_name(format!("hypercube({m})")))
}

/// Even-weight vertices of the hypercube, adjacent at Hamming distance 2.
pub fn halved_cube(m: usize) -> Result<Graph> {
    if m > 12 {
        return Err(bad("halved_cube", "dimension too large"));
    }
    let masks: Vec<usize> =
        (0..1usize << m).filter(|x| x.count_ones() % 2 == 0).collect();
    let mut edges = Vec::new();
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if (masks[i] ^ masks[j]).count_ones() == 2 {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::new(masks.len(), &edges)?.with_name(format!("halved_cube({m})")))
}

/// k-subsets of [m] (as ascending bitmasks), adjacent when they share k-1 elements.
pub fn johnson(m: usize, k: usize) -> Result<Graph> {
    if k > m || m > 16 || m == 0 {
        return Err(bad("johnson", "need 0 <= k <= m <= 16, m >= 1"));
    }
    let masks: Vec<usize> =
        (0..1usize << m).filter(|x| x.count_ones() as usize == k).collect();
    let mut edges = Vec::new();
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if (masks[i] ^ masks[j]).count_ones() == 2 {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::new(masks.len(), &edges)?.with_name(format!("johnson({m},{k})")))
}

/// Cartesian product of cliques K_{m1} x ... x K_{md}.
pub fn hamming(dims: &[usize]) -> Result<Graph> {
    if dims.is_empty() || dims.iter().any(|&d| d < 1) {
        return Err(bad("hamming", "need at least one factor, all >= 1"));
    }
    let n: usize = dims.iter().product();
    if n > 4096 {
        return Err(bad("hamming", "product too large"));
    }
    let decode = |mut x: usize| -> Vec<usize> {
        dims.iter()
            .map(|&d| {
                let c = x % d;
                x /= d;
                c
            })
            .collect()
    };
    let mut edges = Vec::new();
    for u in 0..n {
        let cu = decode(u);
        for v in u + 1..n {
            let cv = decode(v);
            if cu.iter().zip(&cv).filter(|(a, b)| a != b).count() == 1 {
                edges.push((u, v));
            }
        }
    }
    let label = dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",");
    Ok(Graph::new(n, &edges)?.with_name(format!("hamming({label})")))
}

/// n-octahedron: K_{2n} minus the perfect matching {2t, 2t+1}.
pub fn octahedron(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(bad("octahedron", "need n >= 2 (n = 1 is disconnected)"));
    }
    let mut edges = Vec::new();
    for u in 0..2 * n {
        for v in u + 1..2 * n {
            if v != u ^ 1 {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(2 * n, &edges)?.with_name(format!("octahedron({n})")))
}

pub fn wheel(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(bad("wheel", "need rim length >= 3"));
    }
    let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    edges.extend((0..k).map(|i| (i, k)));
    Ok(Graph::new(k + 1, &edges)?.with_name(format!("wheel({k})")))
}

/// Wheel with the spoke to rim vertex 0 removed.
pub fn almost_wheel(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(bad("almost_wheel", "need rim length >= 3"));
    }
    let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    edges.extend((1..k).map(|i| (i, k)));
    Ok(Graph::new(k + 1, &edges)?.with_name(format!("almost_wheel({k})")))
}

/// Path 0-1-2-3 plus an apex adjacent to all of it (the gem).
pub fn fan3() -> Graph {
    Graph::new(5, &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])
        .unwrap()
        .with_name("fan3")
}

/// Square 0-1-2-3 with a roof vertex 4 over the edge (0,1).
pub fn house() -> Graph {
    Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)])
        .unwrap()
        .with_name("house")
}

/// Two squares sharing an edge (the 2x3 grid).
pub fn domino() -> Graph {
    grid(2, 3).unwrap().with_name("domino")
}

pub fn grid(p: usize, q: usize) -> Result<Graph> {
    if p < 1 || q < 1 {
        return Err(bad("grid", "need p,q >= 1"));
    }
    let mut edges = Vec::new();
    for r in 0..p {
        for c in 0..q {
            if c + 1 < q {
                edges.push((r * q + c, r * q + c + 1));
            }
            if r + 1 < p {
                edges.push((r * q + c, (r + 1) * q + c));
            }
        }
    }
    Ok(Graph::new(p * q, &edges)?.with_name(format!("grid({p},{q})")))
}

fn cone(base_n: usize, base_edges: &[(usize, usize)], apexes: usize) -> Vec<(usize, usize)> {
    let mut edges = base_edges.to_vec();
    for a in 0..apexes {
        for v in 0..base_n {
            edges.push((base_n + a, v));
        }
    }
    edges
}

/// Path on 4d vertices plus one apex adjacent to everything.
pub fn chordal_a(d: usize) -> Result<Graph> {
    if d < 1 {
        return Err(bad("chordal_a", "need d >= 1"));
    }
    let base: Vec<_> = (0..4 * d - 1).map(|i| (i, i + 1)).collect();
    let edges = cone(4 * d, &base, 1);
    Ok(Graph::new(4 * d + 1, &edges)?.with_name(format!("chordal_a({d})")))
}

/// Disjoint path and cycle on 2d vertices each, plus one apex.
pub fn chordal_b(d: usize) -> Result<Graph> {
    if d < 2 {
        return Err(bad("chordal_b", "need d >= 2 so the cycle has length >= 3"));
    }
    let mut base: Vec<_> = (0..2 * d - 1).map(|i| (i, i + 1)).collect();
    base.extend((0..2 * d).map(|i| (2 * d + i, 2 * d + (i + 1) % (2 * d))));
    let edges = cone(4 * d, &base, 1);
    Ok(Graph::new(4 * d + 1, &edges)?.with_name(format!("chordal_b({d})")))
}

/// Path on 4d vertices plus two nonadjacent apexes.
pub fn dism_a(d: usize) -> Result<Graph> {
    if d < 1 {
        return Err(bad("dism_a", "need d >= 1"));
    }
    let base: Vec<_> = (0..4 * d - 1).map(|i| (i, i + 1)).collect();
    let edges = cone(4 * d, &base, 2);
    Ok(Graph::new(4 * d + 2, &edges)?.with_name(format!("dism_a({d})")))
}

/// Disjoint path and cycle on 2d vertices each, plus two nonadjacent apexes.
pub fn dism_b(d: usize) -> Result<Graph> {
    if d < 2 {
        return Err(bad("dism_b", "need d >= 2 so the cycle has length >= 3"));
    }
    let mut base: Vec<_> = (0..2 * d - 1).map(|i| (i, i + 1)).collect();
    base.extend((0..2 * d).map(|i| (2 * d + i, 2 * d + (i + 1) % (2 * d))));
    let edges = cone(4 * d, &base, 2);
    Ok(Graph::new(4 * d + 2, &edges)?.with_name(format!("dism_b({d})")))
}

/// Even cycle on 2d vertices plus one apex (the even wheel).
pub fn johnson_a(d: usize) -> Result<Graph> {
    if d < 2 {
        return Err(bad("johnson_a", "need d >= 2"));
    }
    let base: Vec<_> = (0..2 * d).map(|i| (i, (i + 1) % (2 * d))).collect();
    let edges = cone(2 * d, &base, 1);
    Ok(Graph::new(2 * d + 1, &edges)?.with_name(format!("johnson_a({d})")))
}

/// Two disjoint odd cycles on d vertices each plus one apex.
pub fn johnson_b(d: usize) -> Result<Graph> {
    if d < 3 || d % 2 == 0 {
        return Err(bad("johnson_b", "need odd d >= 3"));
    }
    let mut base: Vec<_> = (0..d).map(|i| (i, (i + 1) % d)).collect();
    base.extend((0..d).map(|i| (d + i, d + (i + 1) % d)));
    let edges = cone(2 * d, &base, 1);
    Ok(Graph::new(2 * d + 1, &edges)?.with_name(format!("johnson_b({d})")))
}

pub fn euler_a(r: usize) -> Result<Graph> {
    if r < 1 {
        return Err(bad("euler_a", "need r >= 1"));
    }
    Ok(complete_bipartite(2, 2 * r)?.with_name(format!("euler_a({r})")))
}

pub fn euler_b(r: usize) -> Result<Graph> {
    if r < 1 {
        return Err(bad("euler_b", "need r >= 1"));
    }
    Ok(complete_bipartite(2, 2 * r + 1)?.with_name(format!("euler_b({r})")))
}

pub fn dpo_a() -> Result<Graph> {
    Ok(crate::data::dpo_fixture("dpo_a")?.with_name("dpo_a"))
}

pub fn dpo_b() -> Result<Graph> {
    Ok(crate::data::dpo_fixture("dpo_b")?.with_name("dpo_b"))
}

/// A family invocation `name(args)`, before generation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: String,
    pub args: Vec<usize>,
}

impl FamilySpec {
    /// Parse `name(a,b,...)`. Asterisks are dropped and names lowercased,
    /// so `euler_A*(1)` means `euler_a(1)`. A bare `name` means `name()`.
    pub fn parse(text: &str) -> Result<FamilySpec> {
        let cleaned: String = text.chars().filter(|&c| c != '*' && !c.is_whitespace()).collect();
        let (name, args) = match cleaned.find('(') {
            None => (cleaned.as_str(), Vec::new()),
            Some(open) => {
                let inner = cleaned[open..]
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| Error::UnknownFamily(text.into()))?;
                let args = if inner.is_empty() {
                    Vec::new()
                } else {
                    inner
                        .split(',')
                        .map(|t| {
                            t.parse::<usize>().map_err(|_| Error::BadParams {
                                family: cleaned[..open].to_string(),
                                msg: format!("parameter `{t}` is not a nonnegative integer"),
                            })
                        })
                        .collect::<Result<Vec<_>>>()?
                };
                (&cleaned[..open], args)
            }
        };
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(Error::UnknownFamily(text.into()));
        }
        Ok(FamilySpec { name: name.to_ascii_lowercase(), args })
    }

    pub fn generate(&self) -> Result<Graph> {
        let need = |k: usize| -> Result<()> {
            if self.args.len() == k {
                Ok(())
            } else {
                Err(bad(&self.name, format!("expected {k} parameters, got {}", self.args.len())))
            }
        };
        let a = |i: usize| self.args[i];
        match self.name.as_str() {
            "complete" | "k" => {
                need(1)?;
                complete(a(0))
            }
            "complete_bipartite" | "kb" => {
                need(2)?;
                complete_bipartite(a(0), a(1))
            }
            "k4_minus" => {
                need(0)?;
                Ok(k4_minus())
            }
            "k33_minus" => {
                need(0)?;
                Ok(k33_minus())
            }
            "path" => {
                need(1)?;
                path(a(0))
            }
            "cycle" => {
                need(1)?;
                cycle(a(0))
            }
            "star" => {
                need(1)?;
                star(a(0))
            }
            "caterpillar" => {
                need(1)?;
                caterpillar(a(0))
            }
            "tree" => match self.args.len() {
                1 => random_tree(a(0), 0),
                2 => random_tree(a(0), a(1) as u64),
                _ => Err(bad("tree", "expected tree(n) or tree(n,seed)")),
            },
            "hypercube" => {
                need(1)?;
                hypercube(a(0))
            }
            "halved_cube" => {
                need(1)?;
                halved_cube(a(0))
            }
            "johnson" => {
                need(2)?;
                johnson(a(0), a(1))
            }
            "hamming" => {
                if self.args.is_empty() {
                    return Err(bad("hamming", "need at least one factor"));
                }
                hamming(&self.args)
            }
            "octahedron" => {
                need(1)?;
                octahedron(a(0))
            }
            "wheel" => {
                need(1)?;
                wheel(a(0))
            }
            "almost_wheel" => {
                need(1)?;
                almost_wheel(a(0))
            }
            "fan3" => {
                need(0)?;
                Ok(fan3())
            }
            "house" => {
                need(0)?;
                Ok(house())
            }
            "domino" => {
                need(0)?;
                Ok(domino())
            }
            "grid" => {
                need(2)?;
                grid(a(0), a(1))
            }
            "chordal_a" => {
                need(1)?;
                chordal_a(a(0))
            }
            "chordal_b" => {
                need(1)?;
                chordal_b(a(0))
            }
            "dism_a" => {
                need(1)?;
                dism_a(a(0))
            }
            "dism_b" => {
                need(1)?;
                dism_b(a(0))
            }
            "johnson_a" => {
                need(1)?;
                johnson_a(a(0))
            }
            "johnson_b" => {
                need(1)?;
                johnson_b(a(0))
            }
            "euler_a" => {
                need(1)?;
                euler_a(a(0))
            }
            "euler_b" => {
                need(1)?;
                euler_b(a(0))
            }
            "dpo_a" => {
                need(0)?;
                dpo_a()
            }
            "dpo_b" => {
                need(0)?;
                dpo_b()
            }
            _ => Err(Error::UnknownFamily(self.name.clone())),
        }
    }
}

/// Generate from a `name(args)` string.
pub fn generate(text: &str) -> Result<Graph> {
    FamilySpec::parse(text)?.generate()
}

/// Read a graph from text: either the `n m` edge-list format or a family
/// invocation `name(args)`.
pub fn graph_from_text(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if first
        .split_whitespace()
        .next()
        .map(|t| t.chars().all(|c| c.is_ascii_digit()))
        .unwrap_or(false)
    {
        Graph::parse(text)
    } else {
        generate(text.trim())
    }
}

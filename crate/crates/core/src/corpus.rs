//! Small-graph corpora for exhaustive and randomized testing.

use crate::graph::Graph;
use once_cell::sync::Lazy;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pair_index(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            v.push((i, j));
        }
    }
    v
}

fn from_mask(n: usize, mask: u64, pairs: &[(usize, usize)]) -> Graph {
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|(b, _)| mask >> b & 1 == 1)
        .map(|(_, &p)| p)
        .collect();
    Graph::new(n, &edges).expect("mask graphs are valid")
}

fn mask_connected(n: usize, mask: u64, pairs: &[(usize, usize)]) -> bool {
    let mut adj = [0u16; 16];
    for (b, &(i, j)) in pairs.iter().enumerate() {
        if mask >> b & 1 == 1 {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
    }
    let mut seen: u16 = 1;
    loop {
        let mut next = seen;
        let mut f = seen;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        if next == seen {
            break;
        }
        seen = next;
    }
    seen == (1u32 << n) as u16 - 1
}

/// All labeled connected graphs on exactly `n` vertices (n <= 6 is cheap).
pub fn labeled_connected(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n >= 1 && n <= 8, "labeled enumeration limited to n <= 8");
    let pairs = pair_index(n);
    let total: u64 = 1 << pairs.len();
    (0..total).filter_map(move |mask| {
        if mask_connected(n, mask, &pairs) {
            Some(from_mask(n, mask, &pairs))
        } else {
            None
        }
    })
}

fn canonical(n: usize, mask: u64, pairs: &[(usize, usize)]) -> u64 {
    // order vertices by a 1-round refinement; minimize the edge mask over
    // permutations consistent with the resulting color classes
    let mut adj = [0u16; 16];
    for (b, &(i, j)) in pairs.iter().enumerate() {
        if mask >> b & 1 == 1 {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
    }
    let color: Vec<(u32, Vec<u32>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<u32> = (0..n)
                .filter(|&w| adj[v] >> w & 1 == 1)
                .map(|w| adj[w].count_ones())
                .collect();
            nd.sort_unstable();
            (adj[v].count_ones(), nd)
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| color[a].cmp(&color[b]));
    // group boundaries
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match groups.last() {
            Some(last) if color[last[0]] == color[v] => groups.last_mut().unwrap().push(v),
            _ => groups.push(vec![v]),
        }
    }
    let mut bit = [[0usize; 16]; 16];
    for (b, &(i, j)) in pairs.iter().enumerate() {
        bit[i][j] = b;
        bit[j][i] = b;
    }
    let mut best = u64::MAX;
    // iterate over products of per-group permutations
    fn rec(
        gi: usize,
        groups: &[Vec<usize>],
        perm: &mut [usize; 16],
        pos: &mut usize,
        n: usize,
        mask: u64,
        pairs: &[(usize, usize)],
        bit: &[[usize; 16]; 16],
        best: &mut u64,
    ) {
        if gi == groups.len() {
            let mut relab = 0u64;
            for (b, &(i, j)) in pairs.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    relab |= 1 << bit[perm[i]][perm[j]];
                }
            }
            if relab < *best {
                *best = relab;
            }
            return;
        }
        let g = &groups[gi];
        let start = *pos;
        permute_group(g, 0, &mut vec![false; g.len()], perm, start, &mut |perm| {
            let mut pos2 = start + g.len();
            rec(gi + 1, groups, perm, &mut pos2, n, mask, pairs, bit, best);
        });
        *pos = start + g.len();
    }
    fn permute_group(
        g: &[usize],
        i: usize,
        used: &mut Vec<bool>,
        perm: &mut [usize; 16],
        start: usize,
        f: &mut impl FnMut(&mut [usize; 16]),
    ) {
        if i == g.len() {
            f(perm);
            return;
        }
        for k in 0..g.len() {
            if !used[k] {
                used[k] = true;
                perm[g[k]] = start + i;
                permute_group(g, i + 1, used, perm, start, f);
                used[k] = false;
            }
        }
    }
    let mut perm = [0usize; 16];
    let mut pos = 0usize;
    rec(0, &groups, &mut perm, &mut pos, n, mask, pairs, &bit, &mut best);
    best
}

fn connected_reps(nmax: usize) -> Vec<Graph> {
    let mut out = vec![Graph::new(1, &[]).unwrap()];
    let mut prev_masks: Vec<u64> = vec![0];
    for n in 2..=nmax {
        let pairs_prev = pair_index(n - 1);
        let pairs = pair_index(n);
        let mut bit = [[0usize; 16]; 16];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            bit[i][j] = b;
            bit[j][i] = b;
        }
        let mut seen = std::collections::HashSet::new();
        let mut level = Vec::new();
        for &pm in &prev_masks {
            let mut base = 0u64;
            for (b, &(i, j)) in pairs_prev.iter().enumerate() {
                if pm >> b & 1 == 1 {
                    base |= 1 << bit[i][j];
                }
            }
            for sub in 1u64..(1 << (n - 1)) {
                let mut mask = base;
                for v in 0..n - 1 {
                    if sub >> v & 1 == 1 {
                        mask |= 1 << bit[v][n - 1];
                    }
                }
                let canon = canonical(n, mask, &pairs);
                if seen.insert(canon) {
                    level.push(canon);
                }
            }
        }
        for &mask in &level {
            out.push(from_mask(n, mask, &pairs));
        }
        prev_masks = level;
    }
    out
}

static REPS7: Lazy<Vec<Graph>> = Lazy::new(|| connected_reps(7));
static REPS8: Lazy<Vec<Graph>> = Lazy::new(|| connected_reps(8));

/// Connected graphs with at most `nmax` vertices, one per isomorphism class.
pub fn connected_up_to_iso(nmax: usize) -> Vec<Graph> {
    assert!(nmax >= 1 && nmax <= 8, "corpus limited to n <= 8");
    let source: &[Graph] = if nmax <= 7 { &REPS7 } else { &REPS8 };
    source.iter().filter(|g| g.n() <= nmax).cloned().collect()
}

/// Seeded random connected graph on `n` vertices (edge probability 1/2,
/// resampled until connected).
pub fn random_connected(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// `count` seeded random connected graphs with 2..=nmax vertices.
pub fn random_corpus(count: usize, nmax: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(2..=nmax);
            random_connected(n, seed.wrapping_mul(0x9e37_79b9).wrapping_add(i as u64))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| labeled_connected(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728, 26704]);
    }

    #[test]
    fn iso_class_counts() {
        let reps = connected_up_to_iso(7);
        let mut by_n = [0usize; 8];
        for g in &reps {
            by_n[g.n()] += 1;
        }
        assert_eq!(&by_n[1..=7], &[1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn random_corpus_is_deterministic() {
        let a = random_corpus(10, 9, 42);
        let b = random_corpus(10, 9, 42);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.edges(), y.edges());
        }
        assert!(a.iter().all(|g| g.is_connected()));
    }
}

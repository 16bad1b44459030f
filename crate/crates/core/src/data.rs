//! Bundled transcription data: forbidden-subgraph lists and fixture graphs
//! that are data rather than code. Every file carries a `# check: n=.. m=..`
//! line validated at load; a failed check degrades the list to missing so
//! recognizers report NotAvailable instead of a wrong verdict.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::HashMap;

const PSEUDO_MEDIAN_H: [&str; 4] = [
    include_str!("../data/forbidden/pseudo_median_h1.graph"),
    include_str!("../data/forbidden/pseudo_median_h2.graph"),
    include_str!("../data/forbidden/pseudo_median_h3.graph"),
    include_str!("../data/forbidden/pseudo_median_h4.graph"),
];

const BEINEKE_F: [&str; 9] = [
    include_str!("../data/forbidden/beineke_f0.graph"),
    include_str!("../data/forbidden/beineke_f1.graph"),
    include_str!("../data/forbidden/beineke_f2.graph"),
    include_str!("../data/forbidden/beineke_f3.graph"),
    include_str!("../data/forbidden/beineke_f4.graph"),
    include_str!("../data/forbidden/beineke_f5.graph"),
    include_str!("../data/forbidden/beineke_f6.graph"),
    include_str!("../data/forbidden/beineke_f7.graph"),
    include_str!("../data/forbidden/beineke_f8.graph"),
];

const HALF_HYPERBOLIC_H: [&str; 4] = [
    include_str!("../data/forbidden/half_hyperbolic_h1.graph"),
    include_str!("../data/forbidden/half_hyperbolic_h2.graph"),
    include_str!("../data/forbidden/half_hyperbolic_h3.graph"),
    include_str!("../data/forbidden/half_hyperbolic_h4.graph"),
];

const DPO_A: &str = include_str!("../data/fixtures/dpo_a.graph");
const DPO_B: &str = include_str!("../data/fixtures/dpo_b.graph");

/// Index of the alpha_1 obstruction inside `half_hyperbolic_h` (0-based).
const ALPHA1_INDEX: usize = 3;

pub const LIST_NAMES: [&str; 4] =
    ["pseudo_median_h", "beineke_f", "beineke_f_primed", "half_hyperbolic_h"];

fn expected_counts(list: &str) -> usize {
    match list {
        "pseudo_median_h" => 4,
        "beineke_f" | "beineke_f_primed" => 9,
        "half_hyperbolic_h" => 4,
        _ => 0,
    }
}

/// Parse one data file, enforcing its recorded vertex/edge counts.
fn load_checked(text: &str) -> std::result::Result<Graph, String> {
    let check = text
        .lines()
        .find_map(|l| l.trim().strip_prefix("# check:"))
        .ok_or_else(|| "missing `# check:` line".to_string())?;
    let mut n = None;
    let mut m = None;
    for tok in check.split_whitespace() {
        if let Some(v) = tok.strip_prefix("n=") {
            n = v.parse::<usize>().ok();
        }
        if let Some(v) = tok.strip_prefix("m=") {
            m = v.parse::<usize>().ok();
        }
    }
    let (n, m) = match (n, m) {
        (Some(n), Some(m)) => (n, m),
        _ => return Err("malformed `# check:` line".into()),
    };
    let g = Graph::parse(text).map_err(|e| e.to_string())?;
    if g.n() != n || g.m() != m {
        return Err(format!(
            "transcription check failed: expected n={n} m={m}, file has n={} m={}",
            g.n(),
            g.m()
        ));
    }
    if !g.is_connected() {
        return Err("transcription is disconnected".into());
    }
    Ok(g)
}

fn add_universal_vertex(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = g.edges();
    edges.extend((0..n).map(|v| (v, n)));
    Graph::new(n + 1, &edges).expect("cone of a valid graph is valid")
}

/// The forbidden-subgraph lists, loaded and validated.
#[derive(Clone)]
pub struct ForbiddenLists {
    lists: HashMap<&'static str, std::result::Result<Vec<Graph>, String>>,
}

impl ForbiddenLists {
    /// Load the bundled transcriptions.
    pub fn bundled() -> ForbiddenLists {
        let mut lists = HashMap::new();
        let load_all = |files: &[&str]| -> std::result::Result<Vec<Graph>, String> {
            files.iter().map(|t| load_checked(t)).collect()
        };
        let beineke = load_all(&BEINEKE_F);
        let primed = beineke
            .as_ref()
            .map(|gs| gs.iter().map(add_universal_vertex).collect::<Vec<_>>())
            .map_err(|e| e.clone());
        lists.insert("pseudo_median_h", load_all(&PSEUDO_MEDIAN_H));
        lists.insert("beineke_f", beineke);
        lists.insert("beineke_f_primed", primed);
        lists.insert("half_hyperbolic_h", load_all(&HALF_HYPERBOLIC_H));
        ForbiddenLists { lists }
    }

    /// A copy with one list removed, for exercising the degraded path.
    pub fn without(&self, list: &str) -> ForbiddenLists {
        let mut out = self.clone();
        for name in LIST_NAMES {
            if name == list {
                out.lists.insert(name, Err(format!("list `{list}` withheld")));
            }
        }
        out
    }

    pub fn get(&self, list: &str) -> Result<&[Graph]> {
        match self.lists.get(list) {
            Some(Ok(gs)) => Ok(gs),
            Some(Err(reason)) => {
                Err(Error::MissingData { list: list.into(), msg: reason.clone() })
            }
            None => Err(Error::MissingData { list: list.into(), msg: "no such list".into() }),
        }
    }

    pub fn expected_len(&self, list: &str) -> usize {
        expected_counts(list)
    }

    /// The half-hyperbolic list entry violating the alpha_1 inequality.
    pub fn half_hyperbolic_alpha1(&self) -> Result<Graph> {
        Ok(self.get("half_hyperbolic_h")?[ALPHA1_INDEX].clone())
    }
}

/// A fixture graph shipped as data.
pub fn dpo_fixture(name: &str) -> Result<Graph> {
    let text = match name {
        "dpo_a" => DPO_A,
        "dpo_b" => DPO_B,
        _ => {
            return Err(Error::MissingData { list: name.into(), msg: "no such fixture".into() })
        }
    };
    load_checked(text).map_err(|msg| Error::MissingData { list: name.into(), msg })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_lists_validate() {
        let lists = ForbiddenLists::bundled();
        assert_eq!(lists.get("pseudo_median_h").unwrap().len(), 4);
        assert_eq!(lists.get("beineke_f").unwrap().len(), 9);
        assert_eq!(lists.get("beineke_f_primed").unwrap().len(), 9);
        assert_eq!(lists.get("half_hyperbolic_h").unwrap().len(), 4);
    }

    #[test]
    fn primed_graphs_add_one_universal_vertex() {
        let lists = ForbiddenLists::bundled();
        let base = lists.get("beineke_f").unwrap();
        let primed = lists.get("beineke_f_primed").unwrap();
        for (f, fp) in base.iter().zip(primed) {
            assert_eq!(fp.n(), f.n() + 1);
            let apex = fp.n() - 1;
            assert_eq!(fp.degree(apex), f.n());
        }
    }

    #[test]
    fn withheld_list_reports_missing() {
        let lists = ForbiddenLists::bundled().without("half_hyperbolic_h");
        assert!(matches!(
            lists.get("half_hyperbolic_h"),
            Err(Error::MissingData { .. })
        ));
        assert!(lists.get("beineke_f").is_ok());
    }

    #[test]
    fn dpo_fixtures_load() {
        let a = dpo_fixture("dpo_a").unwrap();
        let b = dpo_fixture("dpo_b").unwrap();
        assert_eq!((a.n(), a.m()), (12, 11));
        assert_eq!((b.n(), b.m()), (12, 12));
        assert!(a.is_tree());
        assert!(!b.is_tree());
    }

    #[test]
    fn check_line_is_enforced() {
        assert!(load_checked("# check: n=3 m=1\n3 2\n0 1\n1 2\n").is_err());
        assert!(load_checked("3 2\n0 1\n1 2\n").is_err());
        assert!(load_checked("# check: n=3 m=2\n3 2\n0 1\n1 2\n").is_ok());
    }
}

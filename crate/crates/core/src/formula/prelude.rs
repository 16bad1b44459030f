//! Macro definitions: named predicates resolved at parse time by
//! substitution, plus generated distance, subgraph, and isometric-subgraph
//! predicates for fixed pattern graphs.

use super::ast::{Formula, Var};
use super::lexer::{Lexer, Pos, Tok};
use super::parser::Parser;
use crate::data::ForbiddenLists;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::MetricOracle;
use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

/// Bound on the generated `dist_k` / `distle_k` predicates. First-order
/// formulas only express distance up to a fixed constant, so the bound is
/// compiled in; raise it when a pattern graph has larger diameter.
pub const DEFAULT_DIST_BOUND: usize = 6;

pub struct MacroDef {
    pub name: String,
    pub params: Vec<String>,
    body: Formula, // fully expanded
}

pub struct Prelude {
    defs: Vec<MacroDef>,
    index: HashMap<String, usize>,
    /// Definitions that failed to load (name -> reason), e.g. because a
    /// transcription list is missing. Dependents degrade, they don't panic.
    unavailable: HashMap<String, String>,
    counter: AtomicU64,
}

impl Prelude {
    pub fn empty() -> Prelude {
        Prelude {
            defs: Vec::new(),
            index: HashMap::new(),
            unavailable: HashMap::new(),
            counter: AtomicU64::new(0),
        }
    }

    /// The canonical prelude: generated predicates plus the bundled
    /// definition file.
    pub fn paper(lists: &ForbiddenLists) -> Result<Prelude> {
        Prelude::with_text(lists, include_str!("../../data/paper.folb"))
    }

    /// Generated predicates plus an alternate definition file.
    pub fn with_text(lists: &ForbiddenLists, text: &str) -> Result<Prelude> {
        let mut p = Prelude::empty();
        p.install_builtins(lists)?;
        p.extend_from_text(text)?;
        Ok(p)
    }

    pub fn define(&mut self, name: &str, params: Vec<String>, body: Formula) -> Result<()> {
        if self.index.contains_key(name) {
            return Err(Error::DuplicateMacro { name: name.into() });
        }
        for free in body.free_vars() {
            if !params.contains(&free) {
                return Err(Error::UnboundVariable(format!("{free} in def {name}")));
            }
        }
        self.index.insert(name.to_string(), self.defs.len());
        self.defs.push(MacroDef { name: name.to_string(), params, body });
        Ok(())
    }

    /// Expand an invocation: alpha-rename the stored body's bound variables
    /// to fresh reserved names, then substitute arguments for parameters.
    pub fn expand(&self, name: &str, args: &[String]) -> Result<Formula> {
        let def = match self.index.get(name) {
            Some(&i) => &self.defs[i],
            None => {
                return Err(match self.unavailable.get(name) {
                    Some(reason) => Error::MissingData { list: name.into(), msg: reason.clone() },
                    None => Error::UnknownMacro(name.into()),
                })
            }
        };
        if def.params.len() != args.len() {
            return Err(Error::ArityMismatch {
                name: name.into(),
                expected: def.params.len(),
                got: args.len(),
            });
        }
        let mut body = def.body.clone();
        let mut counter = self.counter.fetch_add(1_000_000, Ordering::Relaxed);
        body.freshen(&mut counter, &mut HashMap::new());
        let map: HashMap<String, String> = def
            .params
            .iter()
            .cloned()
            .zip(args.iter().cloned())
            .collect();
        body.substitute(&map);
        Ok(body)
    }

    /// A closed sentence defined by a zero-parameter macro.
    pub fn sentence(&self, name: &str) -> Result<Formula> {
        self.expand(name, &[])
    }

    pub fn has(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    pub fn why_unavailable(&self, name: &str) -> Option<&str> {
        self.unavailable.get(name).map(String::as_str)
    }

    /// All zero-parameter definitions, in definition order.
    pub fn sentence_names(&self) -> Vec<&str> {
        self.defs
            .iter()
            .filter(|d| d.params.is_empty())
            .map(|d| d.name.as_str())
            .collect()
    }

    /// Parse `def name(params) := formula` blocks. A failed definition is
    /// recorded as unavailable and parsing continues with the next one.
    pub fn extend_from_text(&mut self, text: &str) -> Result<()> {
        let toks = Lexer::tokenize(text)?;
        // split into segments starting at each `def`
        let mut starts: Vec<usize> = toks
            .iter()
            .enumerate()
            .filter(|(_, (t, _))| *t == Tok::Def)
            .map(|(i, _)| i)
            .collect();
        if starts.is_empty() {
            if toks.len() > 1 {
                let (_, pos) = toks[0];
                return Err(Error::Syntax {
                    line: pos.line,
                    col: pos.col,
                    expected: "`def`".into(),
                    found: toks[0].0.to_string(),
                });
            }
            return Ok(());
        }
        if starts[0] != 0 {
            let (_, pos) = toks[0];
            return Err(Error::Syntax {
                line: pos.line,
                col: pos.col,
                expected: "`def`".into(),
                found: toks[0].0.to_string(),
            });
        }
        starts.push(toks.len() - 1); // Eof index
        for w in starts.windows(2) {
            let mut seg: Vec<(Tok, Pos)> = toks[w[0]..w[1]].to_vec();
            let eof_pos = seg.last().map(|(_, p)| *p).unwrap_or(Pos { line: 0, col: 0 });
            seg.push((Tok::Eof, eof_pos));
            self.load_one_def(seg)?;
        }
        Ok(())
    }

    /// A malformed header or duplicate name is fatal; a body that fails to
    /// parse (e.g. it references a macro whose data is missing) records the
    /// definition as unavailable and loading continues.
    fn load_one_def(&mut self, seg: Vec<(Tok, Pos)>) -> Result<()> {
        // header: def name ( params ) :=
        let mut i = 1; // skip `def`
        let name = match &seg[i].0 {
            Tok::Ident(n) => n.clone(),
            t => {
                return Err(Error::Syntax {
                    line: seg[i].1.line,
                    col: seg[i].1.col,
                    expected: "a definition name".into(),
                    found: t.to_string(),
                })
            }
        };
        i += 1;
        let mut params = Vec::new();
        if seg[i].0 == Tok::LParen {
            i += 1;
            while seg[i].0 != Tok::RParen {
                match &seg[i].0 {
                    Tok::Ident(p) => params.push(p.clone()),
                    t => {
                        return Err(Error::Syntax {
                            line: seg[i].1.line,
                            col: seg[i].1.col,
                            expected: "a parameter".into(),
                            found: t.to_string(),
                        })
                    }
                }
                i += 1;
                if seg[i].0 == Tok::Comma {
                    i += 1;
                }
            }
            i += 1;
        }
        if seg[i].0 != Tok::Assign {
            return Err(Error::Syntax {
                line: seg[i].1.line,
                col: seg[i].1.col,
                expected: "`:=`".into(),
                found: seg[i].0.to_string(),
            });
        }
        i += 1;
        if self.index.contains_key(&name) {
            return Err(Error::DuplicateMacro { name });
        }
        let body_toks = seg[i..].to_vec();
        match Parser::from_tokens(body_toks, self).and_then(|mut p| p.parse_formula()) {
            Ok(body) => match self.define(&name, params, body) {
                Ok(()) => Ok(()),
                Err(Error::UnboundVariable(msg)) => {
                    self.unavailable.insert(name, Error::UnboundVariable(msg).to_string());
                    Ok(())
                }
                Err(e) => Err(e),
            },
            Err(e) => {
                self.unavailable.insert(name, e.to_string());
                Ok(())
            }
        }
    }

    // ----- generated definitions -----

    fn install_builtins(&mut self, lists: &ForbiddenLists) -> Result<()> {
        self.install_dist(DEFAULT_DIST_BOUND)?;
        for (name, g) in fixed_patterns() {
            self.define_subgraph(&format!("subgraph_{name}"), &g)?;
        }
        for (name, g) in fixed_isometric_patterns() {
            self.define_isometric(&format!("isometric_{name}"), &g)?;
        }
        self.define("int_delta_slim_0", vec![], make_int_delta_slim(self, 0)?)?;

        // transcription-backed lists; missing data degrades to unavailable
        self.install_list(lists, "pseudo_median_h", "subgraph_h", 1, false)?;
        self.install_list(lists, "beineke_f_primed", "subgraph_fp", 0, false)?;
        self.install_list(lists, "half_hyperbolic_h", "isometric_hh", 1, true)?;
        match lists.half_hyperbolic_alpha1() {
            Ok(g) => self.define_isometric("isometric_hc", &g)?,
            Err(e) => {
                self.unavailable.insert("isometric_hc".into(), e.to_string());
            }
        }
        Ok(())
    }

    fn install_list(
        &mut self,
        lists: &ForbiddenLists,
        list: &str,
        prefix: &str,
        base: usize,
        isometric: bool,
    ) -> Result<()> {
        match lists.get(list) {
            Ok(graphs) => {
                for (i, g) in graphs.iter().enumerate() {
                    let name = format!("{prefix}{}", base + i);
                    if isometric {
                        self.define_isometric(&name, g)?;
                    } else {
                        self.define_subgraph(&name, g)?;
                    }
                }
                Ok(())
            }
            Err(e) => {
                let reason = e.to_string();
                for i in 0..lists.expected_len(list) {
                    self.unavailable.insert(format!("{prefix}{}", base + i), reason.clone());
                }
                Ok(())
            }
        }
    }

    fn install_dist(&mut self, bound: usize) -> Result<()> {
        let x = || Var::new("x");
        let y = || Var::new("y");
        // distle0(x,y) := x = y
        let mut prev = Formula::Equal(x(), y());
        self.define("distle0", vec!["x".into(), "y".into()], prev.clone())?;
        self.define("dist0", vec!["x".into(), "y".into()], Formula::Equal(x(), y()))?;
        for k in 1..=bound {
            // phi_k: a path of length exactly k from x to y
            let mut chain: Vec<Var> = vec![x()];
            chain.extend((1..k).map(|i| Var::new(format!("p{i}"))));
            chain.push(y());
            let mut atoms: Vec<Formula> = Vec::new();
            for w in chain.windows(2) {
                atoms.push(Formula::Edge(w[0].clone(), w[1].clone()));
            }
            let mut phi = Formula::all(atoms);
            for i in (1..k).rev() {
                phi = Formula::exists(format!("p{i}"), phi);
            }
            let distle = Formula::or(prev.clone(), phi);
            self.define(&format!("distle{k}"), vec!["x".into(), "y".into()], distle.clone())?;
            let dist = Formula::and(distle.clone(), Formula::not(prev));
            self.define(&format!("dist{k}"), vec!["x".into(), "y".into()], dist)?;
            prev = distle;
        }
        Ok(())
    }

    /// `subgraph_<name>()`: the pattern occurs as an induced subgraph.
    /// Built as nested existentials with constraints placed as early as
    /// possible; distinctness is forced explicitly on non-adjacent pairs.
    pub fn define_subgraph(&mut self, name: &str, h: &Graph) -> Result<()> {
        let body = make_subgraph(h);
        self.define(name, vec![], body)
    }

    /// `isometric_<name>()`: the pattern occurs as an isometric subgraph;
    /// pairwise distances are pinned with the generated dist_k predicates.
    pub fn define_isometric(&mut self, name: &str, h: &Graph) -> Result<()> {
        let body = make_isometric(self, h)?;
        self.define(name, vec![], body)
    }
}

fn vname(i: usize) -> String {
    format!("w{i}")
}

pub fn make_subgraph(h: &Graph) -> Formula {
    let p = h.n();
    let mut body: Option<Formula> = None;
    for i in (0..p).rev() {
        let mut constraints = Vec::new();
        for j in 0..i {
            if h.adjacent(i, j) {
                constraints.push(Formula::Edge(Var::new(vname(j)), Var::new(vname(i))));
            } else {
                constraints.push(Formula::not(Formula::Equal(
                    Var::new(vname(j)),
                    Var::new(vname(i)),
                )));
                constraints.push(Formula::not(Formula::Edge(
                    Var::new(vname(j)),
                    Var::new(vname(i)),
                )));
            }
        }
        let here = match (constraints.is_empty(), body.take()) {
            (true, None) => Formula::Equal(Var::new(vname(i)), Var::new(vname(i))),
            (true, Some(b)) => b,
            (false, None) => Formula::all(constraints),
            (false, Some(b)) => Formula::and(Formula::all(constraints), b),
        };
        body = Some(Formula::exists(vname(i), here));
    }
    body.expect("patterns have at least one vertex")
}

pub fn make_isometric(prelude: &Prelude, h: &Graph) -> Result<Formula> {
    let hm = MetricOracle::new(h.clone())?;
    let p = h.n();
    let mut body: Option<Formula> = None;
    for i in (0..p).rev() {
        let mut constraints = Vec::new();
        for j in 0..i {
            let d = hm.dist(j, i);
            constraints.push(prelude.expand(&format!("dist{d}"), &[vname(j), vname(i)])?);
        }
        let here = match (constraints.is_empty(), body.take()) {
            (true, None) => Formula::Equal(Var::new(vname(i)), Var::new(vname(i))),
            (true, Some(b)) => b,
            (false, None) => Formula::all(constraints),
            (false, Some(b)) => Formula::and(Formula::all(constraints), b),
        };
        body = Some(Formula::exists(vname(i), here));
    }
    Ok(body.expect("patterns have at least one vertex"))
}

/// The interval-slimness sentence for hop bound `delta_floor`.
pub fn make_int_delta_slim(prelude: &Prelude, delta_floor: usize) -> Result<Formula> {
    let near = prelude.expand(&format!("distle{delta_floor}"), &["u".into(), "v".into()])?;
    let b = |a: &str, b2: &str, c: &str| Formula::Between(Var::new(a), Var::new(b2), Var::new(c));
    let body = Formula::implies(
        b("y", "u", "z"),
        Formula::exists(
            "v",
            Formula::and(Formula::or(b("x", "v", "y"), b("x", "v", "z")), near),
        ),
    );
    Ok(Formula::forall(
        "x",
        Formula::forall("y", Formula::forall("z", Formula::forall("u", body))),
    ))
}

fn fixed_patterns() -> Vec<(&'static str, Graph)> {
    use crate::families;
    vec![
        ("k23", families::complete_bipartite(2, 3).unwrap()),
        ("k4m", families::k4_minus()),
        ("c4", families::cycle(4).unwrap()),
        ("c5", families::cycle(5).unwrap()),
        ("w4", families::wheel(4).unwrap()),
        ("w4m", families::almost_wheel(4).unwrap()),
        ("house", families::house()),
        ("domino", families::domino()),
        ("fan3", families::fan3()),
    ]
}

fn fixed_isometric_patterns() -> Vec<(&'static str, Graph)> {
    use crate::families;
    vec![("k4m", families::k4_minus()), ("k33m", families::k33_minus())]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::ForbiddenLists;

    #[test]
    fn dist_macros_expand() {
        let p = Prelude::with_text(&ForbiddenLists::bundled(), "").unwrap();
        let f = p.expand("dist2", &["a".into(), "b".into()]).unwrap();
        assert_eq!(f.free_vars(), vec!["a".to_string(), "b".to_string()]);
        let a = f.analyze();
        assert_eq!(a.qr, 1); // one chain vertex
    }

    #[test]
    fn expansion_is_capture_free() {
        let mut p = Prelude::empty();
        let toks = "def f(x) := exists y (B(x,y,y) & !(x = y))";
        p.extend_from_text(toks).unwrap();
        // invoking f(y) must not capture the argument
        let f = p.expand("f", &["y".into()]).unwrap();
        assert_eq!(f.free_vars(), vec!["y".to_string()]);
        match f {
            Formula::Exists(v, _) => assert_ne!(v.name, "y"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn later_defs_may_use_earlier() {
        let mut p = Prelude::empty();
        p.extend_from_text(
            "def adj(x,y) := E(x,y)\ndef twostep(x,y) := exists m (adj(x,m) & adj(m,y))",
        )
        .unwrap();
        let f = p.expand("twostep", &["a".into(), "b".into()]).unwrap();
        assert_eq!(f.analyze().qr, 1);
    }

    #[test]
    fn forward_reference_is_unavailable_not_fatal() {
        let mut p = Prelude::empty();
        p.extend_from_text("def bad() := missing(x)\ndef ok() := forall x B(x,x,x)")
            .unwrap();
        assert!(p.has("ok"));
        assert!(!p.has("bad"));
        assert!(p.why_unavailable("bad").is_some());
    }

    #[test]
    fn duplicate_definition_is_fatal() {
        let mut p = Prelude::empty();
        let r = p.extend_from_text("def a() := forall x B(x,x,x)\ndef a() := forall x B(x,x,x)");
        assert!(matches!(r, Err(Error::DuplicateMacro { .. })));
    }

    #[test]
    fn def_bodies_must_close_over_params() {
        let mut p = Prelude::empty();
        // y is unbound -> def recorded unavailable
        p.extend_from_text("def f(x) := E(x,y)").unwrap();
        assert!(!p.has("f"));
    }
}

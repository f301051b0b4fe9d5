//! Dependency-graph analysis over (object, label) pairs: the "eventually
//! evolves" relation and single-object verdict prediction.

use crate::config::Configuration;
use crate::error::Result;
use crate::multiset::Multiset;
use crate::system::{LabelId, MembraneSystem, ObjId, RuleKind, ENV};
use crate::semantics::{Mode, Verdict};

/// A node of the dependency graph: an object type inside a membrane label.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct DepNode {
    pub object: ObjId,
    pub label: LabelId,
}

/// Directed graph over all |O|·|H| (object, label) pairs. Edges follow the
/// rules: evolution stays in the label, communication crosses the parent
/// edge, division fans out to both products.
#[derive(Clone, Debug)]
pub struct DependencyGraph {
    num_labels: usize,
    num_objects: usize,
    adj: Vec<Vec<usize>>,
}

impl DependencyGraph {
    fn idx(&self, node: DepNode) -> usize {
        node.object.0 as usize * self.num_labels + node.label.0 as usize
    }

    pub fn num_nodes(&self) -> usize {
        self.num_labels * self.num_objects
    }

    pub fn successors(&self, node: DepNode) -> Vec<DepNode> {
        self.adj[self.idx(node)]
            .iter()
            .map(|&i| DepNode {
                object: ObjId((i / self.num_labels) as u32),
                label: LabelId((i % self.num_labels) as u32),
            })
            .collect()
    }

    /// Reflexive-transitive reachability.
    pub fn reaches(&self, from: DepNode, to: DepNode) -> bool {
        let target = self.idx(to);
        let start = self.idx(from);
        let mut seen = vec![false; self.num_nodes()];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            if v == target {
                return true;
            }
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }
}

pub fn dependency_graph(sys: &MembraneSystem) -> DependencyGraph {
    let num_labels = sys.tree.len();
    let num_objects = sys.num_objects();
    let mut g = DependencyGraph {
        num_labels,
        num_objects,
        adj: vec![Vec::new(); num_labels * num_objects],
    };
    let mut edge = |from: DepNode, to: DepNode| {
        let (f, t) = (g.idx(from), g.idx(to));
        if !g.adj[f].contains(&t) {
            g.adj[f].push(t);
        }
    };
    for rule in &sys.rules {
        let at = |object, label| DepNode { object, label };
        match &rule.kind {
            RuleKind::Evolve(products) => {
                for (o, _) in products.iter() {
                    edge(at(rule.subject, rule.label), at(o, rule.label));
                }
            }
            RuleKind::CommIn(u) => {
                let parent = sys.tree.parent(rule.label).expect("validated: not env");
                edge(at(rule.subject, parent), at(*u, rule.label));
            }
            RuleKind::CommOut(u) => {
                let parent = sys.tree.parent(rule.label).expect("validated: not env");
                edge(at(rule.subject, rule.label), at(*u, parent));
            }
            RuleKind::Divide(u, v) => {
                edge(at(rule.subject, rule.label), at(*u, rule.label));
                edge(at(rule.subject, rule.label), at(*v, rule.label));
            }
        }
    }
    g
}

/// True iff `to` is reachable from `from` in the dependency graph. On some
/// computation path of the full system, `from`'s object then eventually
/// produces `to`'s object in `to`'s label.
pub fn eventually_evolves(sys: &MembraneSystem, from: DepNode, to: DepNode) -> bool {
    dependency_graph(sys).reaches(from, to)
}

/// The (object, label) pairs occupied by the initial configuration with the
/// given input.
pub fn occupied_nodes(sys: &MembraneSystem, input: Option<&Multiset>) -> Result<Vec<DepNode>> {
    let cfg = Configuration::initial(sys, input)?;
    let mut out = Vec::new();
    for node in cfg.nodes() {
        for (object, _) in node.contents.iter() {
            let dep = DepNode { object, label: node.label };
            if !out.contains(&dep) {
                out.push(dep);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// One row of the `analyze` table.
#[derive(Clone, Debug)]
pub struct AnalysisRow {
    pub node: DepNode,
    pub reaches_yes: bool,
    pub reaches_no: bool,
}

pub fn analyze(sys: &MembraneSystem, input: Option<&Multiset>) -> Result<Vec<AnalysisRow>> {
    let graph = dependency_graph(sys);
    let yes = sys.yes().map(|object| DepNode { object, label: ENV });
    let no = sys.no().map(|object| DepNode { object, label: ENV });
    Ok(occupied_nodes(sys, input)?
        .into_iter()
        .map(|node| AnalysisRow {
            node,
            reaches_yes: yes.map_or(false, |y| graph.reaches(node, y)),
            reaches_no: no.map_or(false, |n| graph.reaches(node, n)),
        })
        .collect())
}

/// Predicts the verdict of a confluent system by single-object reachability.
/// Only the modes whose acceptance is insensitive to multiplicities are
/// supported; recogniser mode must go through exploration.
pub fn predict_verdict(
    sys: &MembraneSystem,
    input: Option<&Multiset>,
    mode: Mode,
) -> Result<Verdict> {
    if mode == Mode::Recogniser {
        return Err(crate::error::Error::UnsupportedMode("recogniser".into()));
    }
    let rows = analyze(sys, input)?;
    let any_yes = rows.iter().any(|r| r.reaches_yes);
    let any_no = rows.iter().any(|r| r.reaches_no);
    Ok(match mode {
        Mode::Acknowledger => {
            if any_yes {
                Verdict::Accept
            } else {
                Verdict::Reject
            }
        }
        Mode::Recogniser1 => match (any_yes, any_no) {
            (true, true) => Verdict::Invalid("both-reachable".into()),
            (true, false) => Verdict::Accept,
            (false, true) => Verdict::Reject,
            (false, false) => Verdict::Invalid("neither-reachable".into()),
        },
        Mode::Recogniser => unreachable!(),
    })
}

//! Configurations: trees of membrane instances with multiset contents.
//!
//! Unlike the static label tree, a configuration may hold several instances
//! with the same label (division copies labels).

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::multiset::Multiset;
use crate::system::{LabelId, MembraneSystem, ENV};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MembraneNode {
    pub id: u64,
    pub label: LabelId,
    pub contents: Multiset,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

/// A tree of membrane instances, stored as an arena with the `env` instance
/// at index 0. Values are immutable during exploration; successor
/// configurations are fresh clones.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Configuration {
    nodes: Vec<MembraneNode>,
    next_id: u64,
}

impl Configuration {
    /// Builds the initial configuration: one instance per label, contents
    /// copied from the system, the input multiset (if any) unioned into the
    /// input membrane.
    pub fn initial(sys: &MembraneSystem, input: Option<&Multiset>) -> Result<Configuration> {
        let mut cfg = Configuration { nodes: Vec::new(), next_id: 0 };
        // preorder over the label tree so parents precede children
        cfg.add_subtree(sys, ENV, None);
        if let Some(ms) = input {
            if !ms.is_empty() {
                let label = sys.input_label.ok_or(Error::NoInputMembrane)?;
                let idx = cfg
                    .nodes
                    .iter()
                    .position(|n| n.label == label)
                    .expect("input label exists in a validated system");
                cfg.nodes[idx].contents = cfg.nodes[idx].contents.union(ms)?;
            }
        }
        Ok(cfg)
    }

    fn add_subtree(&mut self, sys: &MembraneSystem, label: LabelId, parent: Option<usize>) {
        let idx = self.nodes.len();
        let id = self.next_id;
        self.next_id += 1;
        self.nodes.push(MembraneNode {
            id,
            label,
            contents: sys.contents_of(label),
            parent,
            children: Vec::new(),
        });
        if let Some(p) = parent {
            self.nodes[p].children.push(idx);
        }
        for child in sys.tree.children(label) {
            self.add_subtree(sys, child, Some(idx));
        }
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn nodes(&self) -> &[MembraneNode] {
        &self.nodes
    }

    pub fn node(&self, idx: usize) -> &MembraneNode {
        &self.nodes[idx]
    }

    pub fn contents_mut(&mut self, idx: usize) -> &mut Multiset {
        &mut self.nodes[idx].contents
    }

    /// Multiplicity of `obj` in the environment instance.
    pub fn env_count(&self, sys: &MembraneSystem, obj: &str) -> u64 {
        match sys.obj_id(obj) {
            Some(o) => self.nodes[0].contents.count(o),
            None => 0,
        }
    }

    /// Appends a fresh instance as the last child of `parent`.
    pub(crate) fn push_child(
        &mut self,
        parent: usize,
        label: LabelId,
        contents: Multiset,
    ) -> usize {
        let idx = self.nodes.len();
        let id = self.next_id;
        self.next_id += 1;
        self.nodes.push(MembraneNode { id, label, contents, parent: Some(parent), children: Vec::new() });
        self.nodes[parent].children.push(idx);
        idx
    }

    pub(crate) fn insert_sibling_after(
        &mut self,
        sibling: usize,
        label: LabelId,
        contents: Multiset,
    ) -> usize {
        let parent = self.nodes[sibling].parent.expect("cannot duplicate env");
        let idx = self.push_child(parent, label, contents);
        // keep the copy adjacent to the original in the child list
        let children = &mut self.nodes[parent].children;
        let appended = children.pop().unwrap();
        debug_assert_eq!(appended, idx);
        let pos = children.iter().position(|&c| c == sibling).unwrap();
        children.insert(pos + 1, idx);
        idx
    }

    /// Instance indices in post-order (children before parents).
    pub fn post_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        fn walk(cfg: &Configuration, idx: usize, out: &mut Vec<usize>) {
            for &c in &cfg.nodes[idx].children {
                walk(cfg, c, out);
            }
            out.push(idx);
        }
        walk(self, 0, &mut out);
        out
    }

    /// Canonical key: equal for two configurations iff they coincide up to
    /// reordering of sibling subtrees and renaming of instance ids.
    pub fn canonical_key(&self) -> String {
        self.key_of(0)
    }

    fn key_of(&self, idx: usize) -> String {
        let node = &self.nodes[idx];
        let mut child_keys: Vec<String> =
            node.children.iter().map(|&c| self.key_of(c)).collect();
        child_keys.sort();
        format!("L{}|{}({})", node.label.0, node.contents, child_keys.join(";"))
    }

    /// Structured export; field names `id`, `label`, `contents`, `children`.
    pub fn to_json(&self, sys: &MembraneSystem) -> Value {
        self.json_of(sys, 0)
    }

    fn json_of(&self, sys: &MembraneSystem, idx: usize) -> Value {
        let node = &self.nodes[idx];
        let contents: serde_json::Map<String, Value> = node
            .contents
            .iter()
            .map(|(o, k)| (sys.obj_name(o).to_string(), json!(k)))
            .collect();
        let children: Vec<Value> =
            node.children.iter().map(|&c| self.json_of(sys, c)).collect();
        json!({
            "id": node.id,
            "label": sys.tree.name(node.label),
            "contents": contents,
            "children": children,
        })
    }
}

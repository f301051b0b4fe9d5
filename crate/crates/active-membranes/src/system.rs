//! Static description of an active membrane system without charges or
//! dissolution: object alphabet, label tree, rules and initial contents.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::multiset::Multiset;

/// Index of an object type, assigned by declaration order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ObjId(pub u32);

/// Index of a membrane label. `env` is always `LabelId(0)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LabelId(pub u32);

pub const ENV: LabelId = LabelId(0);
pub const ENV_NAME: &str = "env";
pub const YES_NAME: &str = "yes";
pub const NO_NAME: &str = "no";

/// Rooted tree of membrane labels; `env` is the unique root.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabelTree {
    names: Vec<String>,
    parent: Vec<Option<LabelId>>,
}

impl LabelTree {
    pub fn new() -> Self {
        LabelTree { names: vec![ENV_NAME.to_string()], parent: vec![None] }
    }

    pub fn add(&mut self, name: &str, parent: LabelId) -> Result<LabelId> {
        if self.id(name).is_some() {
            return Err(Error::DuplicateLabel(name.to_string()));
        }
        let id = LabelId(self.names.len() as u32);
        self.names.push(name.to_string());
        self.parent.push(Some(parent));
        Ok(id)
    }

    pub fn id(&self, name: &str) -> Option<LabelId> {
        self.names.iter().position(|n| n == name).map(|i| LabelId(i as u32))
    }

    pub fn name(&self, id: LabelId) -> &str {
        &self.names[id.0 as usize]
    }

    pub fn parent(&self, id: LabelId) -> Option<LabelId> {
        self.parent[id.0 as usize]
    }

    pub fn children(&self, id: LabelId) -> Vec<LabelId> {
        (0..self.len())
            .map(|i| LabelId(i as u32))
            .filter(|&c| self.parent(c) == Some(id))
            .collect()
    }

    pub fn is_leaf(&self, id: LabelId) -> bool {
        self.children(id).is_empty()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false // env is always present
    }

    pub fn labels(&self) -> impl Iterator<Item = LabelId> + '_ {
        (0..self.len()).map(|i| LabelId(i as u32))
    }
}

impl Default for LabelTree {
    fn default() -> Self {
        LabelTree::new()
    }
}

/// Payload of a developmental rule. The subject object and label live in
/// [`Rule`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RuleKind {
    /// `evolve h: o -> w` — rewrite `o` in an `h`-labelled membrane.
    Evolve(Multiset),
    /// `in h: o -> u` — `o` in the parent of an `h`-child moves into it as `u`.
    CommIn(ObjId),
    /// `out h: o -> u` — `o` in an `h`-labelled membrane moves to its parent as `u`.
    CommOut(ObjId),
    /// `div h: o -> u | v` — an elementary `h`-membrane containing `o` divides.
    Divide(ObjId, ObjId),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rule {
    pub subject: ObjId,
    pub label: LabelId,
    pub kind: RuleKind,
}

/// A validated membrane system.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MembraneSystem {
    pub name: String,
    objects: Vec<String>,
    pub tree: LabelTree,
    pub contents: BTreeMap<LabelId, Multiset>,
    pub rules: Vec<Rule>,
    pub input_label: Option<LabelId>,
}

impl MembraneSystem {
    pub fn obj_id(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|n| n == name).map(|i| ObjId(i as u32))
    }

    pub fn obj_name(&self, id: ObjId) -> &str {
        &self.objects[id.0 as usize]
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn object_names(&self) -> impl Iterator<Item = &str> {
        self.objects.iter().map(|s| s.as_str())
    }

    pub fn yes(&self) -> Option<ObjId> {
        self.obj_id(YES_NAME)
    }

    pub fn no(&self) -> Option<ObjId> {
        self.obj_id(NO_NAME)
    }

    pub fn contents_of(&self, label: LabelId) -> Multiset {
        self.contents.get(&label).cloned().unwrap_or_default()
    }
}

/// Incremental constructor; `finish` runs full validation.
pub struct SystemBuilder {
    name: String,
    objects: Vec<String>,
    object_index: BTreeMap<String, ObjId>,
    tree: LabelTree,
    contents: BTreeMap<LabelId, Multiset>,
    rules: Vec<Rule>,
    input_label: Option<LabelId>,
}

impl SystemBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        SystemBuilder {
            name: name.into(),
            objects: Vec::new(),
            object_index: BTreeMap::new(),
            tree: LabelTree::new(),
            contents: BTreeMap::new(),
            rules: Vec::new(),
            input_label: None,
        }
    }

    pub fn object(&mut self, name: &str) -> Result<ObjId> {
        if self.object_index.contains_key(name) {
            return Err(Error::DuplicateObject(name.to_string()));
        }
        let id = ObjId(self.objects.len() as u32);
        self.objects.push(name.to_string());
        self.object_index.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn lookup_object(&self, name: &str) -> Option<ObjId> {
        self.object_index.get(name).copied()
    }

    pub fn label(&mut self, name: &str, parent: LabelId) -> Result<LabelId> {
        self.tree.add(name, parent)
    }

    pub fn lookup_label(&self, name: &str) -> Option<LabelId> {
        self.tree.id(name)
    }

    pub fn set_input(&mut self, label: LabelId) {
        self.input_label = Some(label);
    }

    pub fn add_contents(&mut self, label: LabelId, obj: ObjId, n: u64) -> Result<()> {
        self.contents.entry(label).or_default().insert(obj, n)
    }

    pub fn evolve(&mut self, label: LabelId, subject: ObjId, products: Multiset) {
        self.rules.push(Rule { subject, label, kind: RuleKind::Evolve(products) });
    }

    pub fn comm_in(&mut self, child_label: LabelId, subject: ObjId, product: ObjId) {
        self.rules.push(Rule { subject, label: child_label, kind: RuleKind::CommIn(product) });
    }

    pub fn comm_out(&mut self, label: LabelId, subject: ObjId, product: ObjId) {
        self.rules.push(Rule { subject, label, kind: RuleKind::CommOut(product) });
    }

    pub fn divide(&mut self, label: LabelId, subject: ObjId, left: ObjId, right: ObjId) {
        self.rules.push(Rule { subject, label, kind: RuleKind::Divide(left, right) });
    }

    pub fn finish(self) -> Result<MembraneSystem> {
        let sys = MembraneSystem {
            name: self.name,
            objects: self.objects,
            tree: self.tree,
            contents: self.contents,
            rules: self.rules,
            input_label: self.input_label,
        };
        validate(&sys)?;
        Ok(sys)
    }
}

/// Checks every structural invariant of a system.
pub fn validate(sys: &MembraneSystem) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    for name in &sys.objects {
        if !seen.insert(name) {
            return Err(Error::DuplicateObject(name.clone()));
        }
    }
    let check_obj = |o: ObjId| -> Result<()> {
        if (o.0 as usize) < sys.objects.len() {
            Ok(())
        } else {
            Err(Error::UnknownObject(format!("#{}", o.0)))
        }
    };
    let check_label = |l: LabelId| -> Result<()> {
        if (l.0 as usize) < sys.tree.len() {
            Ok(())
        } else {
            Err(Error::UnknownLabel(format!("#{}", l.0)))
        }
    };
    for (&label, ms) in &sys.contents {
        check_label(label)?;
        for (obj, _) in ms.iter() {
            check_obj(obj)?;
        }
    }
    if let Some(l) = sys.input_label {
        check_label(l)?;
    }
    for rule in &sys.rules {
        check_obj(rule.subject)?;
        check_label(rule.label)?;
        let subject_name = sys.obj_name(rule.subject);
        if subject_name == YES_NAME || subject_name == NO_NAME {
            return Err(Error::ReservedObjectConsumed(subject_name.to_string()));
        }
        match &rule.kind {
            RuleKind::Evolve(products) => {
                for (obj, _) in products.iter() {
                    check_obj(obj)?;
                }
            }
            RuleKind::CommIn(u) => {
                check_obj(*u)?;
                if rule.label == ENV {
                    return Err(Error::EnvCommIn);
                }
            }
            RuleKind::CommOut(u) => {
                check_obj(*u)?;
                if rule.label == ENV {
                    return Err(Error::EnvCommOut);
                }
            }
            RuleKind::Divide(u, v) => {
                check_obj(*u)?;
                check_obj(*v)?;
                if rule.label == ENV {
                    return Err(Error::EnvDivide);
                }
                if !sys.tree.is_leaf(rule.label) {
                    return Err(Error::DivideNonLeaf(sys.tree.name(rule.label).to_string()));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn env_divide_rejected() {
        let mut b = SystemBuilder::new("t");
        let a = b.object("a").unwrap();
        let u = b.object("u").unwrap();
        let v = b.object("v").unwrap();
        b.divide(ENV, a, u, v);
        assert!(matches!(b.finish(), Err(Error::EnvDivide)));
    }

    #[test]
    fn reserved_subject_rejected() {
        let mut b = SystemBuilder::new("t");
        let y = b.object("yes").unwrap();
        let a = b.object("a").unwrap();
        b.evolve(ENV, y, Multiset::singleton(a));
        assert!(matches!(b.finish(), Err(Error::ReservedObjectConsumed(_))));
    }

    #[test]
    fn divide_on_non_leaf_rejected() {
        let mut b = SystemBuilder::new("t");
        let a = b.object("a").unwrap();
        let u = b.object("u").unwrap();
        let m1 = b.label("m1", ENV).unwrap();
        b.label("m2", m1).unwrap();
        b.divide(m1, a, u, u);
        assert!(matches!(b.finish(), Err(Error::DivideNonLeaf(_))));
    }

    #[test]
    fn duplicate_names_rejected() {
        let mut b = SystemBuilder::new("t");
        b.object("a").unwrap();
        assert!(matches!(b.object("a"), Err(Error::DuplicateObject(_))));
        b.label("m", ENV).unwrap();
        assert!(matches!(b.label("m", ENV), Err(Error::DuplicateLabel(_))));
    }
}

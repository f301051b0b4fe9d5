//! Line-oriented source grammar for membrane systems, and the two
//! serialization modes (compact `a*3` vs permissible `a, a, a`).

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::multiset::Multiset;
use crate::system::{LabelId, MembraneSystem, RuleKind, SystemBuilder, ENV, ENV_NAME};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SerializeMode {
    /// Multiplicities written as `a*3`.
    Compact,
    /// Every object occurrence written explicitly: `a, a, a`.
    Permissible,
}

pub fn parse_system(text: &str) -> Result<MembraneSystem> {
    let mut builder: Option<SystemBuilder> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let (head, rest) = split_head(line);
        let col = |needle: &str| raw.find(needle).map(|i| i + 1).unwrap_or(1);
        match head {
            "system" => {
                if builder.is_some() {
                    return Err(Error::syntax(line_no, 1, "duplicate `system` line"));
                }
                let name = rest.trim();
                if !is_ident(name) {
                    return Err(Error::syntax(line_no, col(name), "expected a system name"));
                }
                builder = Some(SystemBuilder::new(name));
            }
            "objects" => {
                let b = expect_builder(&mut builder, line_no)?;
                for name in split_list(rest) {
                    if !is_ident(name) {
                        return Err(Error::syntax(line_no, col(name), format!("bad object name `{name}`")));
                    }
                    b.object(name)?;
                }
            }
            "mu" => {
                let b = expect_builder(&mut builder, line_no)?;
                parse_mu(b, rest.trim(), line_no)?;
            }
            "input" => {
                let b = expect_builder(&mut builder, line_no)?;
                let name = rest.trim();
                let label = b
                    .lookup_label(name)
                    .ok_or_else(|| Error::UnknownLabel(name.to_string()))?;
                b.set_input(label);
            }
            "contents" => {
                let b = expect_builder(&mut builder, line_no)?;
                let (label_name, items) = split_colon(rest, line_no)?;
                let label = b
                    .lookup_label(label_name)
                    .ok_or_else(|| Error::UnknownLabel(label_name.to_string()))?;
                for item in split_list(items) {
                    let (obj, count) = parse_counted(item, line_no)?;
                    let id = b
                        .lookup_object(obj)
                        .ok_or_else(|| Error::UnknownObject(obj.to_string()))?;
                    b.add_contents(label, id, count)?;
                }
            }
            "evolve" | "in" | "out" | "div" => {
                let b = expect_builder(&mut builder, line_no)?;
                parse_rule(b, head, rest, line_no)?;
            }
            other => {
                return Err(Error::syntax(line_no, col(other), format!("unknown directive `{other}`")));
            }
        }
    }
    match builder {
        Some(b) => b.finish(),
        None => Err(Error::syntax(1, 1, "missing `system` line")),
    }
}

fn expect_builder<'a>(
    builder: &'a mut Option<SystemBuilder>,
    line_no: usize,
) -> Result<&'a mut SystemBuilder> {
    builder
        .as_mut()
        .ok_or_else(|| Error::syntax(line_no, 1, "`system <name>` must come first"))
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Splits `evolve env: ...` style lines into a directive and the rest.
/// The directive ends at whitespace or at `:` (for `objects:`, `mu:`, ...).
fn split_head(line: &str) -> (&str, &str) {
    let end = line
        .find(|c: char| c.is_whitespace() || c == ':')
        .unwrap_or(line.len());
    let head = &line[..end];
    let rest = line[end..].trim_start_matches(':');
    (head, rest)
}

fn split_colon(rest: &str, line_no: usize) -> Result<(&str, &str)> {
    let i = rest
        .find(':')
        .ok_or_else(|| Error::syntax(line_no, 1, "expected `:`"))?;
    Ok((rest[..i].trim(), &rest[i + 1..]))
}

fn split_list(text: &str) -> impl Iterator<Item = &str> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty())
}

fn is_ident(s: &str) -> bool {
    !s.is_empty()
        && s.chars().next().unwrap().is_ascii_alphabetic()
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_counted(item: &str, line_no: usize) -> Result<(&str, u64)> {
    match item.split_once('*') {
        Some((name, count)) => {
            let count: u64 = count
                .trim()
                .parse()
                .map_err(|_| Error::syntax(line_no, 1, format!("bad multiplicity in `{item}`")))?;
            Ok((name.trim(), count))
        }
        None => Ok((item, 1)),
    }
}

fn parse_mu(b: &mut SystemBuilder, text: &str, line_no: usize) -> Result<()> {
    let tokens = tokenize_mu(text, line_no)?;
    let mut pos = 0usize;
    let root = parse_mu_node(b, &tokens, &mut pos, None, line_no)?;
    if pos != tokens.len() {
        return Err(Error::syntax(line_no, 1, "trailing input after membrane structure"));
    }
    if root != ENV {
        return Err(Error::syntax(line_no, 1, "the root membrane must be `env`"));
    }
    Ok(())
}

#[derive(PartialEq, Debug)]
enum MuTok {
    Name(String),
    Open,
    Close,
    Comma,
}

fn tokenize_mu(text: &str, line_no: usize) -> Result<Vec<MuTok>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        match c {
            '(' => {
                out.push(MuTok::Open);
                chars.next();
            }
            ')' => {
                out.push(MuTok::Close);
                chars.next();
            }
            ',' => {
                out.push(MuTok::Comma);
                chars.next();
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let start = i;
                let mut end = i;
                while let Some(&(j, d)) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        end = j + d.len_utf8();
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(MuTok::Name(text[start..end].to_string()));
            }
            _ => return Err(Error::syntax(line_no, i + 1, format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

fn parse_mu_node(
    b: &mut SystemBuilder,
    tokens: &[MuTok],
    pos: &mut usize,
    parent: Option<LabelId>,
    line_no: usize,
) -> Result<LabelId> {
    let name = match tokens.get(*pos) {
        Some(MuTok::Name(n)) => n.clone(),
        _ => return Err(Error::syntax(line_no, 1, "expected a membrane label")),
    };
    *pos += 1;
    let label = match parent {
        None => {
            if name != ENV_NAME {
                return Err(Error::syntax(line_no, 1, "the root membrane must be `env`"));
            }
            ENV
        }
        Some(p) => b.label(&name, p)?,
    };
    if tokens.get(*pos) == Some(&MuTok::Open) {
        *pos += 1;
        if tokens.get(*pos) != Some(&MuTok::Close) {
            loop {
                parse_mu_node(b, tokens, pos, Some(label), line_no)?;
                match tokens.get(*pos) {
                    Some(MuTok::Comma) => *pos += 1,
                    Some(MuTok::Close) => break,
                    _ => return Err(Error::syntax(line_no, 1, "expected `,` or `)`")),
                }
            }
        }
        *pos += 1; // consume Close
    }
    Ok(label)
}

fn parse_rule(b: &mut SystemBuilder, head: &str, rest: &str, line_no: usize) -> Result<()> {
    let (label_name, body) = split_colon(rest, line_no)?;
    let label = b
        .lookup_label(label_name)
        .ok_or_else(|| Error::UnknownLabel(label_name.to_string()))?;
    let (lhs, rhs) = body
        .split_once("->")
        .ok_or_else(|| Error::syntax(line_no, 1, "expected `->`"))?;
    let subject_name = lhs.trim();
    let subject = b
        .lookup_object(subject_name)
        .ok_or_else(|| Error::UnknownObject(subject_name.to_string()))?;
    let rhs = rhs.trim();
    let one_obj = |b: &SystemBuilder, name: &str| -> Result<_> {
        if !is_ident(name) {
            return Err(Error::syntax(line_no, 1, format!("expected one object, got `{name}`")));
        }
        b.lookup_object(name)
            .ok_or_else(|| Error::UnknownObject(name.to_string()))
    };
    match head {
        "evolve" => {
            let mut products = Multiset::new();
            for name in rhs.split_whitespace() {
                products.insert(one_obj(b, name)?, 1)?;
            }
            b.evolve(label, subject, products);
        }
        "in" => {
            b.comm_in(label, subject, one_obj(b, rhs)?);
        }
        "out" => {
            b.comm_out(label, subject, one_obj(b, rhs)?);
        }
        "div" => {
            let (u, v) = rhs
                .split_once('|')
                .ok_or_else(|| Error::syntax(line_no, 1, "expected `|` in division rule"))?;
            b.divide(label, subject, one_obj(b, u.trim())?, one_obj(b, v.trim())?);
        }
        _ => unreachable!(),
    }
    Ok(())
}

/// Parses a standalone multiset expression such as `a*3, b` against a
/// system's object alphabet.
pub fn parse_multiset(sys: &MembraneSystem, text: &str) -> Result<Multiset> {
    let mut ms = Multiset::new();
    for item in split_list(text) {
        let (name, count) = parse_counted(item, 1)?;
        let id = sys
            .obj_id(name)
            .ok_or_else(|| Error::UnknownObject(name.to_string()))?;
        ms.insert(id, count)?;
    }
    Ok(ms)
}

pub fn serialize_system(sys: &MembraneSystem, mode: SerializeMode) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "system {}", sys.name);
    if sys.num_objects() > 0 {
        let names: Vec<&str> = sys.object_names().collect();
        let _ = writeln!(out, "objects: {}", names.join(", "));
    }
    let _ = writeln!(out, "mu: {}", mu_text(sys, ENV));
    if let Some(l) = sys.input_label {
        let _ = writeln!(out, "input: {}", sys.tree.name(l));
    }
    for (&label, ms) in &sys.contents {
        if ms.is_empty() {
            continue;
        }
        let _ = writeln!(out, "contents {}: {}", sys.tree.name(label), multiset_text(sys, ms, mode));
    }
    for rule in &sys.rules {
        let label = sys.tree.name(rule.label);
        let subject = sys.obj_name(rule.subject);
        match &rule.kind {
            RuleKind::Evolve(products) => {
                let mut rhs = Vec::new();
                for (obj, k) in products.iter() {
                    for _ in 0..k {
                        rhs.push(sys.obj_name(obj));
                    }
                }
                let _ = writeln!(out, "evolve {label}: {subject} -> {}", rhs.join(" "));
            }
            RuleKind::CommIn(u) => {
                let _ = writeln!(out, "in {label}: {subject} -> {}", sys.obj_name(*u));
            }
            RuleKind::CommOut(u) => {
                let _ = writeln!(out, "out {label}: {subject} -> {}", sys.obj_name(*u));
            }
            RuleKind::Divide(u, v) => {
                let _ = writeln!(
                    out,
                    "div {label}: {subject} -> {} | {}",
                    sys.obj_name(*u),
                    sys.obj_name(*v)
                );
            }
        }
    }
    out
}

fn mu_text(sys: &MembraneSystem, label: LabelId) -> String {
    let children = sys.tree.children(label);
    if children.is_empty() {
        format!("{}()", sys.tree.name(label))
    } else {
        let inner: Vec<String> = children.into_iter().map(|c| mu_text(sys, c)).collect();
        format!("{}( {} )", sys.tree.name(label), inner.join(", "))
    }
}

fn multiset_text(sys: &MembraneSystem, ms: &Multiset, mode: SerializeMode) -> String {
    let mut items = Vec::new();
    for (obj, k) in ms.iter() {
        let name = sys.obj_name(obj);
        match mode {
            SerializeMode::Compact => {
                if k == 1 {
                    items.push(name.to_string());
                } else {
                    items.push(format!("{name}*{k}"));
                }
            }
            SerializeMode::Permissible => {
                for _ in 0..k {
                    items.push(name.to_string());
                }
            }
        }
    }
    items.join(", ")
}

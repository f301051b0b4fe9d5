//! Space-bounded machines as bounded register programs, their configuration
//! graphs, acyclicity checking, and the complement-machine oracle.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// A polynomial in the input length `n` with non-negative integer
/// coefficients; `coeffs[i]` multiplies `n^i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundFn {
    pub coeffs: Vec<u64>,
}

impl BoundFn {
    pub fn constant(c: u64) -> Self {
        BoundFn { coeffs: vec![c] }
    }

    pub fn eval(&self, n: u64) -> u64 {
        let mut acc = 0u64;
        let mut pw = 1u64;
        for &c in &self.coeffs {
            acc = acc.saturating_add(c.saturating_mul(pw));
            pw = pw.saturating_mul(n);
        }
        acc
    }

    /// Parses sums of terms like `n^2+3n+1`, `2n`, `7`.
    pub fn parse(text: &str) -> Result<BoundFn> {
        let mut coeffs: Vec<u64> = Vec::new();
        let mut bump = |pow: usize, c: u64| {
            if coeffs.len() <= pow {
                coeffs.resize(pow + 1, 0);
            }
            coeffs[pow] += c;
        };
        for term in text.split('+').map(str::trim) {
            if term.is_empty() {
                return Err(Error::syntax(1, 1, format!("empty term in bound `{text}`")));
            }
            let bad = || Error::syntax(1, 1, format!("bad bound term `{term}`"));
            match term.split_once('n') {
                None => bump(0, term.parse().map_err(|_| bad())?),
                Some((coef, pow)) => {
                    let c: u64 = if coef.is_empty() { 1 } else { coef.parse().map_err(|_| bad())? };
                    let p: usize = match pow.strip_prefix('^') {
                        Some(p) => p.parse().map_err(|_| bad())?,
                        None if pow.is_empty() => 1,
                        None => return Err(bad()),
                    };
                    bump(p, c);
                }
            }
        }
        Ok(BoundFn { coeffs })
    }
}

impl std::fmt::Display for BoundFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut terms = Vec::new();
        for (p, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            terms.push(match (p, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "n".to_string(),
                (1, c) => format!("{c}n"),
                (p, 1) => format!("n^{p}"),
                (p, c) => format!("{c}n^{p}"),
            });
        }
        if terms.is_empty() {
            terms.push("0".to_string());
        }
        write!(f, "{}", terms.join("+"))
    }
}

/// Register and label operands are resolved to indices during parsing.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Instr {
    Inc(usize, usize),
    Dec(usize, usize),
    Set(usize, u64, usize),
    /// `copy r s goto L` assigns the value of `s` to `r`.
    Copy(usize, usize, usize),
    /// `brz r Lz Lnz`
    Brz(usize, usize, usize),
    /// `breq r s Le Lne`
    Breq(usize, usize, usize, usize),
    /// `read r L1 L0`: branch on the input bit at position `r`. Positions
    /// past the end of the input read as 0 (the input is zero-padded), so a
    /// program can detect the end of a unary word.
    Read(usize, usize, usize),
    Choice(usize, usize),
    Accept,
    Reject,
}

#[derive(Clone, Debug)]
pub struct RegisterProgram {
    pub name: String,
    pub registers: Vec<(String, BoundFn)>,
    /// `(label, instruction)` pairs; labels are unique.
    pub instrs: Vec<(String, Instr)>,
    pub start: usize,
}

impl RegisterProgram {
    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.instrs.iter().position(|(l, _)| l == label)
    }
}

/// A machine configuration: program counter plus register values.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ProgramConfig {
    pub pc: usize,
    pub regs: Vec<u64>,
}

/// A vertex of a configuration graph. Markers name the synthetic vertices of
/// the complement oracle's output.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Vertex {
    Machine(ProgramConfig),
    Marker(String),
}

/// The reachable configuration graph of a program on a fixed input.
#[derive(Clone, Debug)]
pub struct ConfigGraph {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(usize, usize)>,
    pub start: usize,
    pub accept: Vec<usize>,
}

impl ConfigGraph {
    pub fn successors(&self, v: usize) -> Vec<usize> {
        self.edges.iter().filter(|&&(f, _)| f == v).map(|&(_, t)| t).collect()
    }
}

/// Parses `1^k` or a raw bit string into a bit vector.
pub fn parse_input(text: &str) -> Result<Vec<bool>> {
    let text = text.trim();
    if let Some(k) = text.strip_prefix("1^") {
        let k: usize = k
            .parse()
            .map_err(|_| Error::MalformedBits(text.to_string()))?;
        return Ok(vec![true; k]);
    }
    if text == "e" || text.is_empty() {
        return Ok(Vec::new());
    }
    text.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Error::MalformedBits(text.to_string())),
        })
        .collect()
}

pub fn parse_program(text: &str) -> Result<RegisterProgram> {
    let mut name = "m".to_string();
    let mut registers: Vec<(String, BoundFn)> = Vec::new();
    let mut raw: Vec<(String, String, usize)> = Vec::new(); // label, body, line
    let mut start_label: Option<String> = None;
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        match words.next().unwrap() {
            "prog" => {
                name = words
                    .next()
                    .ok_or_else(|| Error::syntax(line_no, 1, "expected a program name"))?
                    .to_string();
            }
            "reg" => {
                let r = words
                    .next()
                    .ok_or_else(|| Error::syntax(line_no, 1, "expected a register name"))?;
                if words.next() != Some("bound") {
                    return Err(Error::syntax(line_no, 1, "expected `bound`"));
                }
                let expr: String = words.collect::<Vec<_>>().join("");
                registers.push((r.to_string(), BoundFn::parse(&expr)?));
            }
            "start" => {
                start_label = Some(
                    words
                        .next()
                        .ok_or_else(|| Error::syntax(line_no, 1, "expected a label"))?
                        .to_string(),
                );
            }
            head => {
                let label = head.strip_suffix(':').ok_or_else(|| {
                    Error::syntax(line_no, 1, format!("expected `<label>:`, got `{head}`"))
                })?;
                if raw.iter().any(|(l, _, _)| l == label) {
                    return Err(Error::DuplicateLabel(label.to_string()));
                }
                raw.push((label.to_string(), words.collect::<Vec<_>>().join(" "), line_no));
            }
        }
    }
    if raw.is_empty() {
        return Err(Error::syntax(1, 1, "a program needs at least one instruction"));
    }
    let reg = |n: &str| -> Result<usize> {
        registers
            .iter()
            .position(|(r, _)| r == n)
            .ok_or_else(|| Error::UnknownRegister(n.to_string()))
    };
    let lbl = |n: &str| -> Result<usize> {
        raw.iter()
            .position(|(l, _, _)| l == n)
            .ok_or_else(|| Error::UnknownInstrLabel(n.to_string()))
    };
    let mut instrs = Vec::new();
    for (label, body, line_no) in &raw {
        let w: Vec<&str> = body.split_whitespace().collect();
        let bad = || Error::syntax(*line_no, 1, format!("bad instruction `{body}`"));
        let goto = |w: &[&str], at: usize| -> Result<usize> {
            if w.get(at).copied() != Some("goto") {
                return Err(bad());
            }
            lbl(w.get(at + 1).ok_or_else(bad)?)
        };
        let instr = match w.first().copied().ok_or_else(bad)? {
            "inc" => Instr::Inc(reg(w.get(1).ok_or_else(bad)?)?, goto(&w, 2)?),
            "dec" => Instr::Dec(reg(w.get(1).ok_or_else(bad)?)?, goto(&w, 2)?),
            "set" => Instr::Set(
                reg(w.get(1).ok_or_else(bad)?)?,
                w.get(2).ok_or_else(bad)?.parse().map_err(|_| bad())?,
                goto(&w, 3)?,
            ),
            "copy" => Instr::Copy(
                reg(w.get(1).ok_or_else(bad)?)?,
                reg(w.get(2).ok_or_else(bad)?)?,
                goto(&w, 3)?,
            ),
            "brz" => Instr::Brz(
                reg(w.get(1).ok_or_else(bad)?)?,
                lbl(w.get(2).ok_or_else(bad)?)?,
                lbl(w.get(3).ok_or_else(bad)?)?,
            ),
            "breq" => Instr::Breq(
                reg(w.get(1).ok_or_else(bad)?)?,
                reg(w.get(2).ok_or_else(bad)?)?,
                lbl(w.get(3).ok_or_else(bad)?)?,
                lbl(w.get(4).ok_or_else(bad)?)?,
            ),
            "read" => Instr::Read(
                reg(w.get(1).ok_or_else(bad)?)?,
                lbl(w.get(2).ok_or_else(bad)?)?,
                lbl(w.get(3).ok_or_else(bad)?)?,
            ),
            "choice" => Instr::Choice(lbl(w.get(1).ok_or_else(bad)?)?, lbl(w.get(2).ok_or_else(bad)?)?),
            "accept" => Instr::Accept,
            "reject" => Instr::Reject,
            _ => return Err(bad()),
        };
        instrs.push((label.clone(), instr));
    }
    let start = match start_label {
        Some(l) => lbl(&l)?,
        None => 0,
    };
    Ok(RegisterProgram { name, registers, instrs, start })
}

/// Successor configurations of `c` on `input`. Out-of-bound increments and
/// sets, and decrements at zero, contribute no successor.
fn step(prog: &RegisterProgram, bounds: &[u64], input: &[bool], c: &ProgramConfig) -> Vec<ProgramConfig> {
    let go = |pc: usize, regs: Vec<u64>| ProgramConfig { pc, regs };
    match prog.instrs[c.pc].1 {
        Instr::Inc(r, l) => {
            if c.regs[r] < bounds[r] {
                let mut regs = c.regs.clone();
                regs[r] += 1;
                vec![go(l, regs)]
            } else {
                vec![]
            }
        }
        Instr::Dec(r, l) => {
            if c.regs[r] > 0 {
                let mut regs = c.regs.clone();
                regs[r] -= 1;
                vec![go(l, regs)]
            } else {
                vec![]
            }
        }
        Instr::Set(r, k, l) => {
            if k <= bounds[r] {
                let mut regs = c.regs.clone();
                regs[r] = k;
                vec![go(l, regs)]
            } else {
                vec![]
            }
        }
        Instr::Copy(r, s, l) => {
            if c.regs[s] <= bounds[r] {
                let mut regs = c.regs.clone();
                regs[r] = regs[s];
                vec![go(l, regs)]
            } else {
                vec![]
            }
        }
        Instr::Brz(r, lz, lnz) => {
            let l = if c.regs[r] == 0 { lz } else { lnz };
            vec![go(l, c.regs.clone())]
        }
        Instr::Breq(r, s, le, lne) => {
            let l = if c.regs[r] == c.regs[s] { le } else { lne };
            vec![go(l, c.regs.clone())]
        }
        Instr::Read(r, l1, l0) => {
            let pos = c.regs[r] as usize;
            let bit = input.get(pos).copied().unwrap_or(false);
            vec![go(if bit { l1 } else { l0 }, c.regs.clone())]
        }
        Instr::Choice(l1, l2) => {
            let mut out = vec![go(l1, c.regs.clone())];
            if l2 != l1 {
                out.push(go(l2, c.regs.clone()));
            }
            out
        }
        Instr::Accept | Instr::Reject => vec![],
    }
}

/// Breadth-first closure from the initial configuration (start label, all
/// registers zero).
pub fn build_config_graph(
    prog: &RegisterProgram,
    input: &[bool],
    vertex_cap: usize,
) -> Result<ConfigGraph> {
    let n = input.len() as u64;
    let bounds: Vec<u64> = prog.registers.iter().map(|(_, b)| b.eval(n)).collect();
    let init = ProgramConfig { pc: prog.start, regs: vec![0; prog.registers.len()] };

    let mut index: BTreeMap<ProgramConfig, usize> = BTreeMap::new();
    let mut vertices = vec![init.clone()];
    index.insert(init, 0);
    let mut edges = Vec::new();
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(at) = queue.pop_front() {
        let c = vertices[at].clone();
        for succ in step(prog, &bounds, input, &c) {
            let to = match index.get(&succ) {
                Some(&i) => i,
                None => {
                    if vertices.len() >= vertex_cap {
                        return Err(Error::BoundExceeded("config-graph-vertices".into()));
                    }
                    let i = vertices.len();
                    index.insert(succ.clone(), i);
                    vertices.push(succ);
                    queue.push_back(i);
                    i
                }
            };
            edges.push((at, to));
        }
    }
    let accept = vertices
        .iter()
        .enumerate()
        .filter(|(_, c)| matches!(prog.instrs[c.pc].1, Instr::Accept))
        .map(|(i, _)| i)
        .collect();
    let graph = ConfigGraph {
        vertices: vertices.into_iter().map(Vertex::Machine).collect(),
        edges,
        start: 0,
        accept,
    };
    if !check_acyclic(&graph) {
        return Err(Error::CyclicMachine);
    }
    Ok(graph)
}

/// True iff the graph has no directed cycle.
pub fn check_acyclic(graph: &ConfigGraph) -> bool {
    let n = graph.vertices.len();
    let mut adj = vec![Vec::new(); n];
    for &(f, t) in &graph.edges {
        adj[f].push(t);
    }
    #[derive(Clone, Copy, PartialEq)]
    enum Colour {
        White,
        Grey,
        Black,
    }
    let mut colour = vec![Colour::White; n];
    for s in 0..n {
        if colour[s] != Colour::White {
            continue;
        }
        let mut stack = vec![(s, 0usize)];
        colour[s] = Colour::Grey;
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if *next < adj[v].len() {
                let w = adj[v][*next];
                *next += 1;
                match colour[w] {
                    Colour::Grey => return false,
                    Colour::White => {
                        colour[w] = Colour::Grey;
                        stack.push((w, 0));
                    }
                    Colour::Black => {}
                }
            } else {
                colour[v] = Colour::Black;
                stack.pop();
            }
        }
    }
    true
}

/// True iff some accept vertex is reachable from the start vertex.
pub fn graph_accepts(graph: &ConfigGraph) -> bool {
    let n = graph.vertices.len();
    let mut adj = vec![Vec::new(); n];
    for &(f, t) in &graph.edges {
        adj[f].push(t);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![graph.start];
    seen[graph.start] = true;
    while let Some(v) = stack.pop() {
        if graph.accept.contains(&v) {
            return true;
        }
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}

/// The complement machine, realized as an oracle on the materialized graph:
/// its accept vertex `c_b` is reachable exactly when the original machine
/// rejects.
pub fn complement_graph_oracle(graph: &ConfigGraph) -> ConfigGraph {
    if graph_accepts(graph) {
        ConfigGraph {
            vertices: vec![Vertex::Marker("c_j".into())],
            edges: vec![],
            start: 0,
            accept: vec![],
        }
    } else {
        ConfigGraph {
            vertices: vec![Vertex::Marker("c_j".into()), Vertex::Marker("c_b".into())],
            edges: vec![(0, 1)],
            start: 0,
            accept: vec![1],
        }
    }
}

/// Instruments a program with a fresh step counter so that every jump passes
/// through an `inc`, making all configuration graphs acyclic by
/// construction. A computation exceeding the counter bound dead-ends (acts
/// as a reject sink).
pub fn auto_step_counter(prog: &RegisterProgram, bound: BoundFn) -> RegisterProgram {
    let mut out = prog.clone();
    let mut counter = "step".to_string();
    while out.registers.iter().any(|(r, _)| r == &counter) {
        counter.push('_');
    }
    let step_reg = out.registers.len();
    out.registers.push((counter, bound));

    let base = prog.instrs.len();
    // one tick stub per original label; jumps are redirected through it
    let tick = |l: usize| base + l;
    for (_, instr) in out.instrs.iter_mut() {
        *instr = match *instr {
            Instr::Inc(r, l) => Instr::Inc(r, tick(l)),
            Instr::Dec(r, l) => Instr::Dec(r, tick(l)),
            Instr::Set(r, k, l) => Instr::Set(r, k, tick(l)),
            Instr::Copy(r, s, l) => Instr::Copy(r, s, tick(l)),
            Instr::Brz(r, a, b) => Instr::Brz(r, tick(a), tick(b)),
            Instr::Breq(r, s, a, b) => Instr::Breq(r, s, tick(a), tick(b)),
            Instr::Read(r, a, b) => Instr::Read(r, tick(a), tick(b)),
            Instr::Choice(a, b) => Instr::Choice(tick(a), tick(b)),
            other @ (Instr::Accept | Instr::Reject) => other,
        };
    }
    for l in 0..base {
        let label = format!("{}__tick", prog.instrs[l].0);
        out.instrs.push((label, Instr::Inc(step_reg, l)));
    }
    out
}

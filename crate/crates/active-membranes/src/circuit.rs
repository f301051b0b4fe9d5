//! Boolean circuits as indexed gate lists, with a text format and an
//! evaluator.

use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Gate {
    /// The i-th input bit.
    Input(usize),
    Const(bool),
    And(Vec<usize>),
    Or(Vec<usize>),
    Not(usize),
}

/// An acyclic circuit; every fan-in references a lower gate index.
#[derive(Clone, Debug)]
pub struct Circuit {
    pub gates: Vec<Gate>,
    /// Parallel to `gates`: where a constant came from (e.g. which
    /// reachability fact produced it).
    pub provenance: Vec<Option<String>>,
    pub output: usize,
    pub input_len: usize,
    /// Gates below this index form the input-encoder stage; depth is
    /// measured beyond it.
    pub encoder_gates: usize,
}

impl Circuit {
    pub fn push(&mut self, gate: Gate) -> usize {
        self.gates.push(gate);
        self.provenance.push(None);
        self.gates.len() - 1
    }

    pub fn push_const(&mut self, value: bool, provenance: impl Into<String>) -> usize {
        let g = self.push(Gate::Const(value));
        self.provenance[g] = Some(provenance.into());
        g
    }

    fn check(&self) -> Result<()> {
        for (i, gate) in self.gates.iter().enumerate() {
            let fan_in: Vec<usize> = match gate {
                Gate::Input(_) | Gate::Const(_) => vec![],
                Gate::And(v) | Gate::Or(v) => v.clone(),
                Gate::Not(g) => vec![*g],
            };
            for g in fan_in {
                if g >= i {
                    return Err(Error::GateOutOfRange(g));
                }
            }
        }
        if self.output >= self.gates.len() {
            return Err(Error::GateOutOfRange(self.output));
        }
        Ok(())
    }

    /// Topological evaluation. And over an empty fan-in is 1, Or is 0.
    pub fn eval(&self, w: &[bool]) -> Result<bool> {
        if w.len() != self.input_len {
            return Err(Error::InputLenMismatch { expected: self.input_len, got: w.len() });
        }
        self.check()?;
        let mut value = vec![false; self.gates.len()];
        for (i, gate) in self.gates.iter().enumerate() {
            value[i] = match gate {
                Gate::Input(j) => *w
                    .get(*j)
                    .ok_or(Error::InputLenMismatch { expected: *j + 1, got: w.len() })?,
                Gate::Const(b) => *b,
                Gate::And(v) => v.iter().all(|&g| value[g]),
                Gate::Or(v) => v.iter().any(|&g| value[g]),
                Gate::Not(g) => !value[*g],
            };
        }
        Ok(value[self.output])
    }

    /// Longest gate path to the output counting only gates at or beyond the
    /// encoder boundary.
    pub fn depth_beyond_encoder(&self) -> usize {
        let mut depth = vec![0usize; self.gates.len()];
        for (i, gate) in self.gates.iter().enumerate() {
            let below: usize = match gate {
                Gate::Input(_) | Gate::Const(_) => 0,
                Gate::And(v) | Gate::Or(v) => v.iter().map(|&g| depth[g]).max().unwrap_or(0),
                Gate::Not(g) => depth[*g],
            };
            depth[i] = below + usize::from(i >= self.encoder_gates);
        }
        depth[self.output]
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "inputs {}", self.input_len);
        let _ = writeln!(out, "encoder {}", self.encoder_gates);
        let _ = writeln!(out, "output g{}", self.output);
        for (i, gate) in self.gates.iter().enumerate() {
            let body = match gate {
                Gate::Input(j) => format!("IN({j})"),
                Gate::Const(b) => format!("CONST({})", u8::from(*b)),
                Gate::And(v) => format!("AND({})", fan_in_text(v)),
                Gate::Or(v) => format!("OR({})", fan_in_text(v)),
                Gate::Not(g) => format!("NOT(g{g})"),
            };
            match &self.provenance[i] {
                Some(p) => {
                    let _ = writeln!(out, "g{i} = {body}  # {p}");
                }
                None => {
                    let _ = writeln!(out, "g{i} = {body}");
                }
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Circuit> {
        let mut c = Circuit {
            gates: Vec::new(),
            provenance: Vec::new(),
            output: 0,
            input_len: 0,
            encoder_gates: 0,
        };
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let (line, comment) = match raw.split_once('#') {
                Some((l, com)) => (l.trim(), Some(com.trim().to_string())),
                None => (raw.trim(), None),
            };
            if line.is_empty() {
                continue;
            }
            let bad = |msg: &str| Error::syntax(line_no, 1, msg.to_string());
            if let Some(rest) = line.strip_prefix("inputs ") {
                c.input_len = rest.trim().parse().map_err(|_| bad("bad input count"))?;
            } else if let Some(rest) = line.strip_prefix("encoder ") {
                c.encoder_gates = rest.trim().parse().map_err(|_| bad("bad encoder boundary"))?;
            } else if let Some(rest) = line.strip_prefix("output ") {
                c.output = parse_gate_ref(rest.trim()).ok_or_else(|| bad("bad output gate"))?;
            } else {
                let (lhs, rhs) = line.split_once('=').ok_or_else(|| bad("expected `=`"))?;
                let i = parse_gate_ref(lhs.trim()).ok_or_else(|| bad("bad gate name"))?;
                if i != c.gates.len() {
                    return Err(bad("gates must be listed in index order"));
                }
                let rhs = rhs.trim();
                let (op, args) = rhs
                    .split_once('(')
                    .and_then(|(op, rest)| rest.strip_suffix(')').map(|a| (op, a)))
                    .ok_or_else(|| bad("expected `OP(args)`"))?;
                let list = || -> Result<Vec<usize>> {
                    args.split(',')
                        .map(str::trim)
                        .filter(|s| !s.is_empty())
                        .map(|s| parse_gate_ref(s).ok_or_else(|| bad("bad fan-in gate")))
                        .collect()
                };
                let gate = match op {
                    "IN" => Gate::Input(args.trim().parse().map_err(|_| bad("bad input index"))?),
                    "CONST" => Gate::Const(match args.trim() {
                        "0" => false,
                        "1" => true,
                        _ => return Err(bad("bad constant")),
                    }),
                    "AND" => Gate::And(list()?),
                    "OR" => Gate::Or(list()?),
                    "NOT" => Gate::Not(parse_gate_ref(args.trim()).ok_or_else(|| bad("bad fan-in gate"))?),
                    _ => return Err(bad("unknown gate kind")),
                };
                c.gates.push(gate);
                c.provenance.push(comment);
            }
        }
        c.check()?;
        Ok(c)
    }
}

fn fan_in_text(v: &[usize]) -> String {
    v.iter().map(|g| format!("g{g}")).collect::<Vec<_>>().join(", ")
}

fn parse_gate_ref(s: &str) -> Option<usize> {
    s.strip_prefix('g')?.parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    #[test]
    fn basic_gates() {
        let mut c = Circuit {
            gates: vec![],
            provenance: vec![],
            output: 0,
            input_len: 2,
            encoder_gates: 0,
        };
        let i0 = c.push(Gate::Input(0));
        let i1 = c.push(Gate::Input(1));
        let or = c.push(Gate::Or(vec![i0, i1]));
        c.output = or;
        assert!(c.eval(&bits("01")).unwrap());
        assert!(!c.eval(&bits("00")).unwrap());
        c.output = c.push(Gate::Not(i0));
        assert!(!c.eval(&bits("10")).unwrap());
    }

    #[test]
    fn empty_fan_ins() {
        let mut c = Circuit {
            gates: vec![],
            provenance: vec![],
            output: 0,
            input_len: 0,
            encoder_gates: 0,
        };
        let and = c.push(Gate::And(vec![]));
        let or = c.push(Gate::Or(vec![]));
        c.output = and;
        assert!(c.eval(&[]).unwrap());
        c.output = or;
        assert!(!c.eval(&[]).unwrap());
    }

    #[test]
    fn forward_reference_rejected() {
        let c = Circuit {
            gates: vec![Gate::Not(1), Gate::Const(true)],
            provenance: vec![None, None],
            output: 0,
            input_len: 0,
            encoder_gates: 0,
        };
        assert!(matches!(c.eval(&[]), Err(Error::GateOutOfRange(1))));
    }

    #[test]
    fn text_round_trip() {
        let mut c = Circuit {
            gates: vec![],
            provenance: vec![],
            output: 0,
            input_len: 2,
            encoder_gates: 0,
        };
        let i0 = c.push(Gate::Input(0));
        let i1 = c.push(Gate::Input(1));
        c.encoder_gates = c.gates.len();
        let k = c.push_const(true, "initial object reaches yes");
        let a = c.push(Gate::And(vec![i0, k]));
        let o = c.push(Gate::Or(vec![a, i1]));
        c.output = o;
        let text = c.to_text();
        let d = Circuit::parse(&text).unwrap();
        assert_eq!(d.gates, c.gates);
        assert_eq!(d.output, c.output);
        assert_eq!(d.input_len, 2);
        assert_eq!(d.encoder_gates, 2);
        assert_eq!(d.provenance[k].as_deref(), Some("initial object reaches yes"));
        for w in ["00", "01", "10", "11"] {
            assert_eq!(c.eval(&bits(w)).unwrap(), d.eval(&bits(w)).unwrap());
        }
        assert_eq!(c.depth_beyond_encoder(), 3);
    }

    #[test]
    fn input_length_checked() {
        let c = Circuit {
            gates: vec![Gate::Input(0)],
            provenance: vec![None],
            output: 0,
            input_len: 1,
            encoder_gates: 0,
        };
        assert!(matches!(c.eval(&[]), Err(Error::InputLenMismatch { .. })));
    }
}

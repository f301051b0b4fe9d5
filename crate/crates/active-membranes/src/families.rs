//! Families of membrane systems: the PARITY construction, the configuration
//! graph → membrane compiler, tally-language-derived uniform families,
//! truth-table query extraction, and non-uniform circuit synthesis.

use std::collections::BTreeMap;

use crate::analysis::{eventually_evolves, DepNode};
use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};
use crate::multiset::Multiset;
use crate::reductions::{deinterleave, eval_reduction, interleave, Combiner, ReductionQuery};
use crate::semantics::{explore, ExploreResult, Mode, Verdict};
use crate::system::{MembraneSystem, ObjId, SystemBuilder, ENV, NO_NAME, YES_NAME};
use crate::tm::{build_config_graph, complement_graph_oracle, BoundFn, ConfigGraph, RegisterProgram};

/// Vertex cap used when materializing configuration graphs inside family
/// builders.
pub const GRAPH_VERTEX_CAP: usize = 100_000;

/// The semi-uniform PARITY system for a concrete word: a chain of objects
/// o_i (odd count of 1s so far) / e_i (even count), finishing with
/// `o_n -> yes` and `e_n -> no`. Deterministic; halts in exactly |x| steps.
pub fn parity_family(x: &str) -> Result<MembraneSystem> {
    let bits: Vec<bool> = x
        .chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Error::MalformedBits(x.to_string())),
        })
        .collect::<Result<_>>()?;
    if bits.is_empty() {
        return Err(Error::Family("parity needs a non-empty word".into()));
    }
    let n = bits.len();
    let mut b = SystemBuilder::new("parity");
    let mut o = Vec::with_capacity(n);
    let mut e = Vec::with_capacity(n);
    for i in 1..=n {
        o.push(b.object(&format!("o{i}"))?);
        e.push(b.object(&format!("e{i}"))?);
    }
    let yes = b.object(YES_NAME)?;
    let no = b.object(NO_NAME)?;
    b.add_contents(ENV, if bits[0] { o[0] } else { e[0] }, 1)?;
    // the transition for position i is driven by bit i+1; the initial object
    // already accounts for the first bit
    for i in 0..n - 1 {
        if bits[i + 1] {
            b.evolve(ENV, o[i], Multiset::singleton(e[i + 1]));
            b.evolve(ENV, e[i], Multiset::singleton(o[i + 1]));
        } else {
            b.evolve(ENV, o[i], Multiset::singleton(o[i + 1]));
            b.evolve(ENV, e[i], Multiset::singleton(e[i + 1]));
        }
    }
    b.evolve(ENV, o[n - 1], Multiset::singleton(yes));
    b.evolve(ENV, e[n - 1], Multiset::singleton(no));
    b.finish()
}

/// Encodes a configuration graph as evolution rules inside `env`: vertex `u`
/// with successors v₁…v_k becomes `evolve env: u -> v₁ … v_k`; accept
/// vertices evolve to `accept_product` instead. Returns the start-vertex
/// object.
fn add_graph(
    b: &mut SystemBuilder,
    graph: &ConfigGraph,
    prefix: &str,
    accept_product: ObjId,
) -> Result<ObjId> {
    let ids: Vec<ObjId> = (0..graph.vertices.len())
        .map(|i| b.object(&format!("{prefix}_v{i}")))
        .collect::<Result<_>>()?;
    for (i, &obj) in ids.iter().enumerate() {
        if graph.accept.contains(&i) {
            b.evolve(ENV, obj, Multiset::singleton(accept_product));
            continue;
        }
        let mut succs = graph.successors(i);
        succs.sort_unstable();
        succs.dedup();
        if succs.is_empty() {
            continue; // inert sink: the object simply remains
        }
        let mut products = Multiset::new();
        for s in succs {
            products.insert(ids[s], 1)?;
        }
        b.evolve(ENV, obj, products);
    }
    Ok(ids[graph.start])
}

/// Compiles one machine on one input into a membrane system: the
/// configuration graph floods towards `yes`, the complement-oracle graph
/// towards `no`. The result is deterministic, hence confluent, and valid in
/// both recogniser≥1 and acknowledger modes.
pub fn compile_semiuniform(
    prog: &RegisterProgram,
    input: &[bool],
    vertex_cap: usize,
) -> Result<MembraneSystem> {
    let graph = build_config_graph(prog, input, vertex_cap)?;
    let comp = complement_graph_oracle(&graph);
    let mut b = SystemBuilder::new(format!("compiled_{}", prog.name));
    let yes = b.object(YES_NAME)?;
    let no = b.object(NO_NAME)?;
    let start_m = add_graph(&mut b, &graph, "m", yes)?;
    let start_n = add_graph(&mut b, &comp, "n", no)?;
    b.set_input(ENV);
    b.add_contents(ENV, start_m, 1)?;
    b.add_contents(ENV, start_n, 1)?;
    b.finish()
}

/// How a family derives its unary oracle queries from an input word.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RSpec {
    /// One query: the value of the first ⌈log₂|x|⌉ bits of x, in unary.
    BinPrefix,
    /// One query 1^(i+1) per position i (1-based) holding a 1.
    OnePositions,
}

impl RSpec {
    /// Query lengths for a word; each `u` stands for the unary word 1^u.
    pub fn queries(&self, x: &str) -> Result<Vec<u64>> {
        match self {
            RSpec::BinPrefix => {
                let w = crate::reductions::bin_to_unary(x)?;
                Ok(vec![w.len() as u64])
            }
            RSpec::OnePositions => Ok(x
                .chars()
                .enumerate()
                .filter(|(_, c)| *c == '1')
                .map(|(i, _)| i as u64 + 1)
                .collect()),
        }
    }
}

#[derive(Clone, Debug)]
enum FamilyKind {
    /// Many-one style: graphs for the machine and its complement; the input
    /// encoder injects both start objects for u = |r(x)|.
    M,
    /// Disjunctive style: machine graphs only; the encoder injects one start
    /// object per queried unary word.
    Dtt,
}

/// A uniform family (f, e): `system(n)` depends only on the input length,
/// `encode` maps a word to the input multiset.
#[derive(Clone, Debug)]
pub struct UniformFamily {
    pub name: String,
    pub mode: Mode,
    pub prog: RegisterProgram,
    pub r: RSpec,
    pub q: BoundFn,
    kind: FamilyKind,
}

/// Uniform family deciding `x : 1^{|r(x)|} ∈ L(prog)` via paired machine and
/// complement graphs, in recogniser≥1 mode.
pub fn build_family_m(prog: RegisterProgram, r: RSpec, q: BoundFn) -> UniformFamily {
    UniformFamily {
        name: format!("m_family_{}", prog.name),
        mode: Mode::Recogniser1,
        prog,
        r,
        q,
        kind: FamilyKind::M,
    }
}

/// Uniform acknowledger family accepting iff at least one queried unary word
/// is in L(prog); no complement graphs.
pub fn build_family_dtt(prog: RegisterProgram, r: RSpec, q: BoundFn) -> UniformFamily {
    UniformFamily {
        name: format!("dtt_family_{}", prog.name),
        mode: Mode::Acknowledger,
        prog,
        r,
        q,
        kind: FamilyKind::Dtt,
    }
}

impl UniformFamily {
    /// The f-part: reads only the input length `n`. Holds graphs for every
    /// u ∈ 0..=q(n); a zero bound is degenerate (no graphs at all).
    pub fn system(&self, n: usize) -> Result<MembraneSystem> {
        let bound = self.q.eval(n as u64);
        let mut b = SystemBuilder::new(format!("{}_{n}", self.name));
        let yes = b.object(YES_NAME)?;
        let no = b.object(NO_NAME)?;
        if bound > 0 {
            for u in 0..=bound {
                let input = vec![true; u as usize];
                let graph = build_config_graph(&self.prog, &input, GRAPH_VERTEX_CAP)?;
                add_graph(&mut b, &graph, &format!("g{u}"), yes)?;
                if matches!(self.kind, FamilyKind::M) {
                    let comp = complement_graph_oracle(&graph);
                    add_graph(&mut b, &comp, &format!("h{u}"), no)?;
                }
            }
        }
        b.set_input(ENV);
        b.finish()
    }

    /// The e-part: the input multiset for a concrete word, drawing only from
    /// objects of `system(|x|)`.
    pub fn encode(&self, sys: &MembraneSystem, x: &str) -> Result<Multiset> {
        let bound = self.q.eval(x.len() as u64);
        let mut ms = Multiset::new();
        let start_obj = |u: u64, prefix: char| -> Result<ObjId> {
            // graph start vertices are always index 0 of their graph
            let name = format!("{prefix}{u}_v0");
            sys.obj_id(&name).ok_or(Error::UnknownObject(name))
        };
        for u in self.r.queries(x)? {
            if bound == 0 || u > bound {
                return Err(Error::QueryOutOfRange { queried: u, bound });
            }
            match self.kind {
                FamilyKind::M => {
                    ms.insert(start_obj(u, 'g')?, 1)?;
                    ms.insert(start_obj(u, 'h')?, 1)?;
                }
                FamilyKind::Dtt => {
                    let o = start_obj(u, 'g')?;
                    if ms.count(o) == 0 {
                        ms.insert(o, 1)?;
                    }
                }
            }
        }
        Ok(ms)
    }

    /// Exhaustive verdict of the family on one word.
    pub fn explore_word(&self, x: &str, max_configs: usize) -> Result<ExploreResult> {
        let sys = self.system(x.len())?;
        let input = self.encode(&sys, x)?;
        let report = explore(&sys, Some(&input), self.mode, max_configs)?;
        Ok(report.result)
    }
}

/// Pairing ⟨ordinal, n⟩: the value of the bit-interleaving of the two binary
/// encodings.
pub fn pair_ordinal(ordinal: usize, n: usize) -> u64 {
    let s = interleave(&format!("{ordinal:b}"), &format!("{n:b}"));
    u64::from_str_radix(&s, 2).expect("interleave outputs binary")
}

/// Inverse of [`pair_ordinal`].
pub fn unpair(k: u64) -> (u64, u64) {
    let mut s = format!("{k:b}");
    if s.len() % 2 != 0 {
        s.insert(0, '0');
    }
    let (a, b) = deinterleave(&s).expect("even length by construction");
    let parse = |t: &str| if t.is_empty() { 0 } else { u64::from_str_radix(t, 2).unwrap() };
    (parse(&a), parse(&b))
}

/// One oracle query of a truth-table reduction: the tally word 1^unary_len
/// encoding ⟨object ordinal, n⟩.
#[derive(Clone, Debug)]
pub struct TtQuery {
    pub object: String,
    pub ordinal: usize,
    pub n: usize,
    pub unary_len: u64,
}

/// A fully evaluated truth-table reduction.
#[derive(Clone, Debug)]
pub struct TtReduction {
    pub queries: Vec<TtQuery>,
    pub combiner: Combiner,
    pub answers: Vec<bool>,
    /// Constant terms contributed by the fixed initial contents, one per
    /// (object, label) pair.
    pub constant_terms: Vec<(String, bool)>,
    pub verdict: Verdict,
}

fn reserved_node(sys: &MembraneSystem, name: &str) -> Option<DepNode> {
    sys.obj_id(name).map(|object| DepNode { object, label: ENV })
}

/// Answers the tally oracle query 1^len against the family's f-part:
/// decodes ⟨ordinal, n⟩, rebuilds f(1ⁿ) and asks whether the object placed
/// in the input membrane eventually evolves to `target` in env.
fn tally_answer(
    family: &UniformFamily,
    cache: &mut BTreeMap<usize, MembraneSystem>,
    len: u64,
    target: &str,
) -> Result<bool> {
    let (ordinal, n) = unpair(len);
    let n = n as usize;
    if !cache.contains_key(&n) {
        let sys = family.system(n)?;
        cache.insert(n, sys);
    }
    let sys = &cache[&n];
    if ordinal as usize >= sys.num_objects() {
        return Ok(false);
    }
    let from = DepNode {
        object: ObjId(ordinal as u32),
        label: sys.input_label.unwrap_or(ENV),
    };
    let to = match reserved_node(sys, target) {
        Some(t) => t,
        None => return Ok(false),
    };
    Ok(eventually_evolves(sys, from, to))
}

fn tt_queries(family: &UniformFamily, x: &str) -> Result<(MembraneSystem, Vec<TtQuery>)> {
    let n = x.len();
    let sys = family.system(n)?;
    let e = family.encode(&sys, x)?;
    // one query per object *type* in e(x) — multiplicities are ignored
    let queries = e
        .iter()
        .map(|(obj, _)| TtQuery {
            object: sys.obj_name(obj).to_string(),
            ordinal: obj.0 as usize,
            n,
            unary_len: pair_ordinal(obj.0 as usize, n),
        })
        .collect();
    Ok((sys, queries))
}

fn constant_terms(sys: &MembraneSystem, target: &str, negate: bool) -> Vec<(String, bool)> {
    let mut out = Vec::new();
    for (&label, ms) in &sys.contents {
        for (object, _) in ms.iter() {
            let reaches = reserved_node(sys, target)
                .map_or(false, |t| eventually_evolves(sys, DepNode { object, label }, t));
            let term = if negate { !reaches } else { reaches };
            out.push((
                format!("({}, {})", sys.obj_name(object), sys.tree.name(label)),
                term,
            ));
        }
    }
    out
}

/// Disjunctive truth-table reduction of a uniform family to a tally oracle:
/// the oracle holds 1^⟨o,n⟩ iff o eventually evolves to `yes` in env.
pub fn uniform_to_dtt(family: &UniformFamily, x: &str) -> Result<TtReduction> {
    if family.mode == Mode::Recogniser {
        return Err(Error::UnsupportedMode("recogniser".into()));
    }
    let (sys, queries) = tt_queries(family, x)?;
    let mut cache = BTreeMap::new();
    let mut answers_by_len = BTreeMap::new();
    for q in &queries {
        let a = tally_answer(family, &mut cache, q.unary_len, YES_NAME)?;
        answers_by_len.insert(q.unary_len, a);
    }
    let rq = ReductionQuery {
        queries: queries.iter().map(|q| q.unary_len).collect(),
        combiner: Combiner::Or,
    };
    let (answers, bit) = eval_reduction(&rq, |len| answers_by_len[len])?;
    let constant_terms = constant_terms(&sys, YES_NAME, false);
    let verdict = if bit || constant_terms.iter().any(|(_, t)| *t) {
        Verdict::Accept
    } else {
        Verdict::Reject
    };
    Ok(TtReduction { queries, combiner: Combiner::Or, answers, constant_terms, verdict })
}

/// Conjunctive truth-table reduction: the oracle holds 1^⟨o,n⟩ iff o does
/// NOT eventually evolve to `no` in env.
pub fn uniform_to_ctt(family: &UniformFamily, x: &str) -> Result<TtReduction> {
    if family.mode == Mode::Acknowledger {
        // nothing ever produces `no`, so the conjunction would be vacuous
        return Err(Error::UnsupportedMode("acknowledger".into()));
    }
    let (sys, queries) = tt_queries(family, x)?;
    let mut cache = BTreeMap::new();
    let mut answers_by_len = BTreeMap::new();
    for q in &queries {
        let a = !tally_answer(family, &mut cache, q.unary_len, NO_NAME)?;
        answers_by_len.insert(q.unary_len, a);
    }
    let rq = ReductionQuery {
        queries: queries.iter().map(|q| q.unary_len).collect(),
        combiner: Combiner::And,
    };
    let (answers, bit) = eval_reduction(&rq, |len| answers_by_len[len])?;
    let constant_terms = constant_terms(&sys, NO_NAME, true);
    let verdict = if bit && constant_terms.iter().all(|(_, t)| *t) {
        Verdict::Accept
    } else {
        Verdict::Reject
    };
    Ok(TtReduction { queries, combiner: Combiner::And, answers, constant_terms, verdict })
}

/// Synthesizes a circuit equivalent to the family at one input length:
/// an encoder stage computes the characteristic vector χ of e(w) over the
/// object types, then per object one And(χ_i, Const(c_i)) where c_i records
/// whether the object eventually evolves to `yes`, and a single output Or
/// (plus constant gates for the fixed initial contents).
pub fn synthesize_circuit(family: &UniformFamily, n: usize) -> Result<Circuit> {
    let sys = family.system(n)?;
    let num_words = 1usize << n;
    // which object types occur in e(w), for every word of length n
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); sys.num_objects()];
    for w in 0..num_words {
        let word: String = (0..n)
            .map(|i| if w >> (n - 1 - i) & 1 == 1 { '1' } else { '0' })
            .collect();
        for (obj, _) in family.encode(&sys, &word)?.iter() {
            members[obj.0 as usize].push(w);
        }
    }

    let mut c = Circuit {
        gates: Vec::new(),
        provenance: Vec::new(),
        output: 0,
        input_len: n,
        encoder_gates: 0,
    };
    let inputs: Vec<usize> = (0..n).map(|i| c.push(Gate::Input(i))).collect();
    let negs: Vec<usize> = inputs.iter().map(|&g| c.push(Gate::Not(g))).collect();
    // one minterm gate per word, shared by all χ gates
    let minterms: Vec<usize> = (0..num_words)
        .map(|w| {
            let lits = (0..n)
                .map(|i| if w >> (n - 1 - i) & 1 == 1 { inputs[i] } else { negs[i] })
                .collect();
            c.push(Gate::And(lits))
        })
        .collect();
    let chi: Vec<usize> = members
        .iter()
        .map(|ws| c.push(Gate::Or(ws.iter().map(|&w| minterms[w]).collect())))
        .collect();
    c.encoder_gates = c.gates.len();

    let input_label = sys.input_label.unwrap_or(ENV);
    let yes_node = reserved_node(&sys, YES_NAME);
    let mut or_inputs = Vec::new();
    for (i, &chi_i) in chi.iter().enumerate() {
        let from = DepNode { object: ObjId(i as u32), label: input_label };
        let c_i = yes_node.map_or(false, |t| eventually_evolves(&sys, from, t));
        let konst = c.push_const(
            c_i,
            format!("c_{}: ({}, {}) reaches (yes, env) = {}",
                i, sys.obj_name(ObjId(i as u32)), sys.tree.name(input_label), c_i),
        );
        or_inputs.push(c.push(Gate::And(vec![chi_i, konst])));
    }
    for (&label, ms) in &sys.contents {
        for (object, _) in ms.iter() {
            let from = DepNode { object, label };
            let c_oh = yes_node.map_or(false, |t| eventually_evolves(&sys, from, t));
            or_inputs.push(c.push_const(
                c_oh,
                format!("c_(o,h): ({}, {}) reaches (yes, env) = {}",
                    sys.obj_name(object), sys.tree.name(label), c_oh),
            ));
        }
    }
    c.output = c.push(Gate::Or(or_inputs));
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::run;
    use crate::tm::parse_program;

    #[test]
    fn parity_small_words() {
        for (x, want) in [
            ("1", ExploreResult::ConfluentAccept),
            ("0110", ExploreResult::ConfluentReject),
            ("111", ExploreResult::ConfluentAccept),
            ("0", ExploreResult::ConfluentReject),
        ] {
            let sys = parity_family(x).unwrap();
            let rep = explore(&sys, None, Mode::Recogniser, 10_000).unwrap();
            assert_eq!(rep.result, want, "word {x}");
        }
    }

    #[test]
    fn parity_halts_in_word_length_steps() {
        let sys = parity_family("111").unwrap();
        let r = run(&sys, None, Mode::Recogniser, 0, 100, false).unwrap();
        assert_eq!(r.steps, 3);
        assert_eq!(r.verdict, Verdict::Accept);
    }

    #[test]
    fn parity_rejects_empty_word() {
        assert!(parity_family("").is_err());
    }

    #[test]
    fn compile_trivial_machines() {
        let acc = parse_program("L0: accept\n").unwrap();
        let sys = compile_semiuniform(&acc, &[true], 100).unwrap();
        let rep = explore(&sys, None, Mode::Recogniser1, 10_000).unwrap();
        assert_eq!(rep.result, ExploreResult::ConfluentAccept);

        let rej = parse_program("L0: reject\n").unwrap();
        let sys = compile_semiuniform(&rej, &[true], 100).unwrap();
        let rep = explore(&sys, None, Mode::Recogniser1, 10_000).unwrap();
        assert_eq!(rep.result, ExploreResult::ConfluentReject);
    }

    #[test]
    fn pairing_round_trips() {
        for ord in 0..40usize {
            for n in 0..12usize {
                let k = pair_ordinal(ord, n);
                assert_eq!(unpair(k), (ord as u64, n as u64), "ord={ord} n={n}");
            }
        }
    }

    #[test]
    fn rspec_queries() {
        assert_eq!(RSpec::BinPrefix.queries("01100101").unwrap(), vec![3]);
        assert_eq!(RSpec::OnePositions.queries("0101").unwrap(), vec![2, 4]);
        assert!(RSpec::OnePositions.queries("0000").unwrap().is_empty());
    }

    const EVEN_UNARY: &str = "\
prog even
reg r bound n+1
reg p bound 1
start L0
L0: read r L1 L2
L1: inc r goto L3
L3: brz p L4 L5
L4: set p 1 goto L0
L5: set p 0 goto L0
L2: brz p LA LR
LA: accept
LR: reject
";

    fn even_family_m() -> UniformFamily {
        let prog = parse_program(EVEN_UNARY).unwrap();
        build_family_m(prog, RSpec::BinPrefix, BoundFn::parse("2n").unwrap())
    }

    #[test]
    fn m_family_matches_direct_evaluation() {
        let fam = even_family_m();
        // value of the first ⌈log₂ n⌉ bits even → Accept
        for (x, want) in [
            ("1000", ExploreResult::ConfluentAccept), // first 2 bits: value 2
            ("0100", ExploreResult::ConfluentReject), // value 1
            ("00", ExploreResult::ConfluentAccept),   // first bit: value 0
            ("1", ExploreResult::ConfluentReject),    // value 1
        ] {
            assert_eq!(fam.explore_word(x, 100_000).unwrap(), want, "word {x}");
        }
    }

    #[test]
    fn uniformity_same_length_same_system() {
        use crate::parse::{serialize_system, SerializeMode};
        let fam = even_family_m();
        let a = serialize_system(&fam.system(4).unwrap(), SerializeMode::Compact);
        let b = serialize_system(&fam.system(4).unwrap(), SerializeMode::Compact);
        assert_eq!(a, b);
    }

    #[test]
    fn degenerate_zero_bound() {
        let prog = parse_program(EVEN_UNARY).unwrap();
        let fam = build_family_m(prog, RSpec::BinPrefix, BoundFn::constant(0));
        let sys = fam.system(4).unwrap();
        assert!(sys.rules.is_empty());
        assert!(matches!(
            fam.encode(&sys, "0000"),
            Err(Error::QueryOutOfRange { .. })
        ));
    }

    #[test]
    fn dtt_family_disjunction() {
        let prog = parse_program(EVEN_UNARY).unwrap();
        let fam = build_family_dtt(prog, RSpec::OnePositions, BoundFn::parse("n").unwrap());
        // positions of 1s: {2} → query 1^2, even → Accept
        assert_eq!(fam.explore_word("01", 100_000).unwrap(), ExploreResult::ConfluentAccept);
        // {1} → 1^1 odd → Reject
        assert_eq!(fam.explore_word("10", 100_000).unwrap(), ExploreResult::ConfluentReject);
        // empty tuple → vacuous disjunction → Reject
        assert_eq!(fam.explore_word("00", 100_000).unwrap(), ExploreResult::ConfluentReject);
    }

    #[test]
    fn dtt_reduction_agrees_with_family() {
        let prog = parse_program(EVEN_UNARY).unwrap();
        let fam = build_family_dtt(prog, RSpec::OnePositions, BoundFn::parse("n").unwrap());
        for x in ["01", "10", "00", "11", "0101"] {
            let red = uniform_to_dtt(&fam, x).unwrap();
            let want = match fam.explore_word(x, 100_000).unwrap() {
                ExploreResult::ConfluentAccept => Verdict::Accept,
                ExploreResult::ConfluentReject => Verdict::Reject,
                other => panic!("unexpected {other:?}"),
            };
            assert_eq!(red.verdict, want, "word {x}");
        }
    }

    #[test]
    fn ctt_reduction_agrees_on_m_family() {
        let fam = even_family_m();
        for x in ["0100", "0110", "00", "1"] {
            let red = uniform_to_ctt(&fam, x).unwrap();
            let want = match fam.explore_word(x, 100_000).unwrap() {
                ExploreResult::ConfluentAccept => Verdict::Accept,
                ExploreResult::ConfluentReject => Verdict::Reject,
                other => panic!("unexpected {other:?}"),
            };
            assert_eq!(red.verdict, want, "word {x}");
        }
    }

    #[test]
    fn circuit_matches_family_small() {
        let fam = even_family_m();
        for n in 1..=4usize {
            let c = synthesize_circuit(&fam, n).unwrap();
            assert!(c.depth_beyond_encoder() <= 3, "depth at n={n}");
            for w in 0..(1usize << n) {
                let bits: Vec<bool> = (0..n).map(|i| w >> (n - 1 - i) & 1 == 1).collect();
                let word: String = bits.iter().map(|&b| if b { '1' } else { '0' }).collect();
                let want = match fam.explore_word(&word, 100_000).unwrap() {
                    ExploreResult::ConfluentAccept => true,
                    ExploreResult::ConfluentReject => false,
                    other => panic!("unexpected {other:?}"),
                };
                assert_eq!(c.eval(&bits).unwrap(), want, "n={n} w={word}");
            }
        }
    }
}

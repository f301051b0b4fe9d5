//! Maximally-parallel transition semantics: instance enumeration, maximal
//! assignments, step application, seeded runs and exhaustive exploration.

use std::collections::BTreeMap;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::multiset::Multiset;
use crate::system::{MembraneSystem, RuleKind, NO_NAME, YES_NAME};

/// Default cap on the number of maximal assignments enumerated per step.
pub const ASSIGNMENT_CAP: usize = 100_000;

/// Cap on membrane instances per configuration; division can double the
/// instance count every step, so runaway systems are cut off as
/// bound-exceeded rather than exhausting memory.
pub const MAX_INSTANCES: usize = 512;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    /// Exactly one `yes` xor exactly one `no` in env at halting.
    Recogniser,
    /// One or more copies of exactly one of `yes`/`no`.
    Recogniser1,
    /// At least one `yes` means accept; anything else rejects.
    Acknowledger,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "recogniser" => Ok(Mode::Recogniser),
            "recogniser1" => Ok(Mode::Recogniser1),
            "acknowledger" => Ok(Mode::Acknowledger),
            other => Err(Error::UnsupportedMode(other.to_string())),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    Accept,
    Reject,
    /// Carries a machine-readable reason code such as `multiple-yes`.
    Invalid(String),
    BoundExceeded,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Accept => write!(f, "Accept"),
            Verdict::Reject => write!(f, "Reject"),
            Verdict::Invalid(reason) => write!(f, "Invalid({reason})"),
            Verdict::BoundExceeded => write!(f, "BoundExceeded"),
        }
    }
}

/// One applicable occurrence of a rule in a configuration.
///
/// `source` is the instance holding the subject object. For CommIn rules
/// `target` is the child instance the object moves into; it is `None` for
/// every other rule type.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct RuleInstance {
    pub rule: usize,
    pub source: usize,
    pub target: Option<usize>,
}

/// A multiset of rule instances chosen for one step.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Assignment {
    pub counts: BTreeMap<RuleInstance, u64>,
}

#[derive(Clone, Debug)]
pub struct RunResult {
    pub verdict: Verdict,
    pub steps: u64,
    pub trace: Option<Vec<Configuration>>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExploreResult {
    ConfluentAccept,
    ConfluentReject,
    NonConfluent,
    InvalidRun(String),
    BoundExceeded,
}

#[derive(Clone, Debug)]
pub struct ExploreReport {
    pub result: ExploreResult,
    /// Distinct configurations reached (by canonical key).
    pub states: usize,
    pub halting_leaves: usize,
    pub max_depth: usize,
    /// Whether any reachable configuration holds `yes` in env.
    pub yes_seen: bool,
}

/// Every rule instance applicable in `cfg`, in a deterministic order.
pub fn applicable_instances(cfg: &Configuration, sys: &MembraneSystem) -> Vec<RuleInstance> {
    let mut out = Vec::new();
    for (r, rule) in sys.rules.iter().enumerate() {
        match &rule.kind {
            RuleKind::Evolve(_) | RuleKind::CommOut(_) | RuleKind::Divide(_, _) => {
                for (idx, node) in cfg.nodes().iter().enumerate() {
                    if node.label == rule.label && node.contents.count(rule.subject) > 0 {
                        out.push(RuleInstance { rule: r, source: idx, target: None });
                    }
                }
            }
            // the subject sits in the parent; every same-label child is a
            // distinct way of entering
            RuleKind::CommIn(_) => {
                for (idx, node) in cfg.nodes().iter().enumerate() {
                    if node.label != rule.label {
                        continue;
                    }
                    let parent = node.parent.expect("non-env labels have parents");
                    if cfg.node(parent).contents.count(rule.subject) > 0 {
                        out.push(RuleInstance { rule: r, source: parent, target: Some(idx) });
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// The membrane instance a CommIn/CommOut/Divide instance occupies, if any.
/// At most one such instance may occupy a membrane per step.
fn occupied_membrane(sys: &MembraneSystem, inst: &RuleInstance) -> Option<usize> {
    match sys.rules[inst.rule].kind {
        RuleKind::Evolve(_) => None,
        RuleKind::CommIn(_) => inst.target,
        RuleKind::CommOut(_) | RuleKind::Divide(_, _) => Some(inst.source),
    }
}

/// All distinct maximal assignments for `cfg`. The empty list is returned
/// exactly when the configuration is halting.
pub fn enumerate_maximal_assignments(
    cfg: &Configuration,
    sys: &MembraneSystem,
    max_assignments: usize,
) -> Result<Vec<Assignment>> {
    let keys = applicable_instances(cfg, sys);
    if keys.is_empty() {
        return Ok(Vec::new());
    }

    // For an Evolve instance that is the last consumer of its (membrane,
    // object) pair, any leftover occurrence would keep the rule applicable,
    // so taking everything is forced. This keeps deterministic systems with
    // large multiplicities from exploding the search.
    let mut last_consumer = vec![false; keys.len()];
    for i in 0..keys.len() {
        let subject_i = sys.rules[keys[i].rule].subject;
        last_consumer[i] = !keys[i + 1..].iter().any(|k| {
            k.source == keys[i].source && sys.rules[k.rule].subject == subject_i
        });
    }

    let mut remaining: Vec<Multiset> =
        cfg.nodes().iter().map(|n| n.contents.clone()).collect();
    let mut used = vec![false; cfg.nodes().len()];
    let mut counts = vec![0u64; keys.len()];
    let mut out = Vec::new();
    let budget: u64 = 1 << 20; // DFS work cap, independent of the result cap
    let mut work = 0u64;

    // depth-first choice of a multiplicity for each instance, checked for
    // maximality at the leaves by a direct re-scan
    fn dfs(
        depth: usize,
        keys: &[RuleInstance],
        sys: &MembraneSystem,
        last_consumer: &[bool],
        remaining: &mut [Multiset],
        used: &mut [bool],
        counts: &mut [u64],
        out: &mut Vec<Assignment>,
        max_assignments: usize,
        budget: u64,
        work: &mut u64,
    ) -> Result<()> {
        *work += 1;
        if *work > budget {
            return Err(Error::BoundExceeded("assignment-enumeration".into()));
        }
        if depth == keys.len() {
            for key in keys.iter() {
                let addable = remaining[key.source].count(sys.rules[key.rule].subject) > 0
                    && occupied_membrane(sys, key).map_or(true, |m| !used[m]);
                if addable {
                    return Ok(()); // extendable, hence not maximal
                }
            }
            let assignment = Assignment {
                counts: keys
                    .iter()
                    .zip(counts.iter())
                    .filter(|(_, &c)| c > 0)
                    .map(|(k, &c)| (*k, c))
                    .collect(),
            };
            if out.len() >= max_assignments {
                return Err(Error::BoundExceeded("assignments".into()));
            }
            out.push(assignment);
            return Ok(());
        }
        let key = &keys[depth];
        let subject = sys.rules[key.rule].subject;
        let avail = remaining[key.source].count(subject);
        match occupied_membrane(sys, key) {
            None => {
                let lo = if last_consumer[depth] { avail } else { 0 };
                for c in lo..=avail {
                    remaining[key.source].remove(subject, c);
                    counts[depth] = c;
                    dfs(depth + 1, keys, sys, last_consumer, remaining, used, counts,
                        out, max_assignments, budget, work)?;
                    counts[depth] = 0;
                    remaining[key.source].insert(subject, c).expect("restoring");
                }
            }
            Some(m) => {
                counts[depth] = 0;
                dfs(depth + 1, keys, sys, last_consumer, remaining, used, counts,
                    out, max_assignments, budget, work)?;
                if avail > 0 && !used[m] {
                    remaining[key.source].remove(subject, 1);
                    used[m] = true;
                    counts[depth] = 1;
                    dfs(depth + 1, keys, sys, last_consumer, remaining, used, counts,
                        out, max_assignments, budget, work)?;
                    counts[depth] = 0;
                    used[m] = false;
                    remaining[key.source].insert(subject, 1).expect("restoring");
                }
            }
        }
        Ok(())
    }

    dfs(
        0, &keys, sys, &last_consumer, &mut remaining, &mut used, &mut counts,
        &mut out, max_assignments, budget, &mut work,
    )?;
    Ok(out)
}

/// Applies a maximal assignment, producing the successor configuration.
///
/// Phases: consume all subjects; materialize Evolve products; move
/// communicated objects; finally duplicate dividing instances (children-first
/// in the instance tree), both copies receiving the residual contents.
pub fn apply_assignment(
    cfg: &Configuration,
    sys: &MembraneSystem,
    assignment: &Assignment,
) -> Result<Configuration> {
    let mut next = cfg.clone();

    for (inst, &count) in &assignment.counts {
        let consumed = match sys.rules[inst.rule].kind {
            RuleKind::Evolve(_) => count,
            _ => {
                debug_assert_eq!(count, 1);
                1
            }
        };
        next.contents_mut(inst.source).remove(sys.rules[inst.rule].subject, consumed);
    }

    for (inst, &count) in &assignment.counts {
        match &sys.rules[inst.rule].kind {
            RuleKind::Evolve(products) => {
                next.contents_mut(inst.source).add_scaled(products, count)?;
            }
            RuleKind::CommIn(u) => {
                let target = inst.target.expect("CommIn has a target child");
                next.contents_mut(target).insert(*u, 1)?;
            }
            RuleKind::CommOut(u) => {
                let parent = next.node(inst.source).parent.expect("validated: not env");
                next.contents_mut(parent).insert(*u, 1)?;
            }
            RuleKind::Divide(_, _) => {}
        }
    }

    // deepest instances first, so ids are assigned deterministically
    let rank: BTreeMap<usize, usize> = next
        .post_order()
        .into_iter()
        .enumerate()
        .map(|(r, idx)| (idx, r))
        .collect();
    let mut divisions: Vec<&RuleInstance> = assignment
        .counts
        .keys()
        .filter(|i| matches!(sys.rules[i.rule].kind, RuleKind::Divide(_, _)))
        .collect();
    divisions.sort_by_key(|i| rank[&i.source]);
    for inst in divisions {
        let (u, v) = match sys.rules[inst.rule].kind {
            RuleKind::Divide(u, v) => (u, v),
            _ => unreachable!(),
        };
        let residual = next.node(inst.source).contents.clone();
        let label = next.node(inst.source).label;
        next.contents_mut(inst.source).insert(u, 1)?;
        let mut copy = residual;
        copy.insert(v, 1)?;
        next.insert_sibling_after(inst.source, label, copy);
    }
    Ok(next)
}

/// Classifies a halting configuration under the given acceptance mode.
pub fn classify_halt(cfg: &Configuration, sys: &MembraneSystem, mode: Mode) -> Verdict {
    let yes = cfg.env_count(sys, YES_NAME);
    let no = cfg.env_count(sys, NO_NAME);
    match mode {
        Mode::Recogniser => match (yes, no) {
            (1, 0) => Verdict::Accept,
            (0, 1) => Verdict::Reject,
            (0, 0) => Verdict::Invalid("no-decision".into()),
            (y, n) if y > 0 && n > 0 => Verdict::Invalid("yes-and-no".into()),
            (y, _) if y > 1 => Verdict::Invalid("multiple-yes".into()),
            _ => Verdict::Invalid("multiple-no".into()),
        },
        Mode::Recogniser1 => match (yes, no) {
            (0, 0) => Verdict::Invalid("no-decision".into()),
            (_, 0) => Verdict::Accept,
            (0, _) => Verdict::Reject,
            _ => Verdict::Invalid("yes-and-no".into()),
        },
        Mode::Acknowledger => {
            if yes >= 1 {
                Verdict::Accept
            } else {
                Verdict::Reject
            }
        }
    }
}

/// Runs one computation, resolving nondeterminism with a seeded generator.
/// Identical (system, input, seed) triples produce identical traces.
pub fn run(
    sys: &MembraneSystem,
    input: Option<&Multiset>,
    mode: Mode,
    seed: u64,
    max_steps: u64,
    want_trace: bool,
) -> Result<RunResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cfg = Configuration::initial(sys, input)?;
    let mut trace = if want_trace { Some(vec![cfg.clone()]) } else { None };
    let mut steps = 0u64;
    loop {
        let assignments = enumerate_maximal_assignments(&cfg, sys, ASSIGNMENT_CAP)?;
        if assignments.is_empty() {
            let verdict = classify_halt(&cfg, sys, mode);
            return Ok(RunResult { verdict, steps, trace });
        }
        if steps >= max_steps {
            return Ok(RunResult { verdict: Verdict::BoundExceeded, steps, trace });
        }
        let pick = rng.gen_range(0..assignments.len());
        cfg = apply_assignment(&cfg, sys, &assignments[pick])?;
        if cfg.nodes().len() > MAX_INSTANCES {
            return Ok(RunResult { verdict: Verdict::BoundExceeded, steps, trace });
        }
        steps += 1;
        if let Some(t) = trace.as_mut() {
            t.push(cfg.clone());
        }
    }
}

/// Exhaustively explores every computation from the initial configuration.
pub fn explore(
    sys: &MembraneSystem,
    input: Option<&Multiset>,
    mode: Mode,
    max_configs: usize,
) -> Result<ExploreReport> {
    let initial = Configuration::initial(sys, input)?;
    explore_config(sys, initial, mode, max_configs)
}

/// [`explore`] starting from an arbitrary configuration.
pub fn explore_config(
    sys: &MembraneSystem,
    initial: Configuration,
    mode: Mode,
    max_configs: usize,
) -> Result<ExploreReport> {
    let mut index: BTreeMap<String, usize> = BTreeMap::new();
    let mut configs: Vec<Configuration> = Vec::new();
    let mut succs: Vec<Vec<usize>> = Vec::new();
    let mut depth: Vec<usize> = Vec::new();
    let mut queue = std::collections::VecDeque::new();

    index.insert(initial.canonical_key(), 0);
    configs.push(initial);
    succs.push(Vec::new());
    depth.push(0);
    queue.push_back(0usize);

    let mut bounded = false;
    let mut max_depth = 0usize;
    let mut halting: Vec<usize> = Vec::new();
    let mut yes_seen = false;
    let mut early_decision = false;

    while let Some(at) = queue.pop_front() {
        let assignments = enumerate_maximal_assignments(&configs[at], sys, max_configs)?;
        let cfg = &configs[at];
        max_depth = max_depth.max(depth[at]);
        if cfg.env_count(sys, YES_NAME) > 0 {
            yes_seen = true;
        }
        let decided =
            cfg.env_count(sys, YES_NAME) > 0 || cfg.env_count(sys, NO_NAME) > 0;
        if assignments.is_empty() {
            halting.push(at);
            continue;
        }
        if decided {
            early_decision = true;
        }
        for a in &assignments {
            let next = apply_assignment(&configs[at], sys, a)?;
            if next.nodes().len() > MAX_INSTANCES {
                bounded = true;
                continue;
            }
            let key = next.canonical_key();
            let to = match index.get(&key) {
                Some(&i) => i,
                None => {
                    if configs.len() >= max_configs {
                        bounded = true;
                        continue;
                    }
                    let i = configs.len();
                    index.insert(key, i);
                    configs.push(next);
                    succs.push(Vec::new());
                    depth.push(depth[at] + 1);
                    queue.push_back(i);
                    i
                }
            };
            succs[at].push(to);
        }
    }

    // states enqueued but never dequeued (cap reached) still count here
    if !yes_seen {
        yes_seen = configs.iter().any(|c| c.env_count(sys, YES_NAME) > 0);
    }

    let report = |result| ExploreReport {
        result,
        states: configs.len(),
        halting_leaves: halting.len(),
        max_depth,
        yes_seen,
    };

    if bounded {
        return Ok(report(ExploreResult::BoundExceeded));
    }
    if has_cycle(&succs) {
        // every acceptance mode requires all computations to halt
        return Ok(report(ExploreResult::InvalidRun("non-halting-computation".into())));
    }
    if mode == Mode::Recogniser && early_decision {
        return Ok(report(ExploreResult::InvalidRun("early-decision".into())));
    }
    let mut seen_accept = false;
    let mut seen_reject = false;
    for &leaf in &halting {
        match classify_halt(&configs[leaf], sys, mode) {
            Verdict::Accept => seen_accept = true,
            Verdict::Reject => seen_reject = true,
            Verdict::Invalid(reason) => {
                return Ok(report(ExploreResult::InvalidRun(reason)));
            }
            Verdict::BoundExceeded => unreachable!("classify_halt never bounds"),
        }
    }
    let result = match (seen_accept, seen_reject) {
        (true, true) => ExploreResult::NonConfluent,
        (true, false) => ExploreResult::ConfluentAccept,
        (false, true) => ExploreResult::ConfluentReject,
        (false, false) => unreachable!("an acyclic finite graph has a halting leaf"),
    };
    Ok(report(result))
}

/// True if any configuration reachable from the initial one holds `yes` in
/// env.
pub fn reaches_yes_in_env(
    sys: &MembraneSystem,
    input: Option<&Multiset>,
    max_configs: usize,
) -> Result<bool> {
    // acknowledger mode never yields Invalid verdicts, so the report always
    // carries a meaningful yes_seen flag
    let report = explore(sys, input, Mode::Acknowledger, max_configs)?;
    if report.result == ExploreResult::BoundExceeded && !report.yes_seen {
        return Err(Error::BoundExceeded("explore".into()));
    }
    Ok(report.yes_seen)
}

fn has_cycle(succs: &[Vec<usize>]) -> bool {
    // iterative three-colour DFS
    #[derive(Clone, Copy, PartialEq)]
    enum Colour {
        White,
        Grey,
        Black,
    }
    let mut colour = vec![Colour::White; succs.len()];
    for start in 0..succs.len() {
        if colour[start] != Colour::White {
            continue;
        }
        let mut stack = vec![(start, 0usize)];
        colour[start] = Colour::Grey;
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if *next < succs[v].len() {
                let w = succs[v][*next];
                *next += 1;
                match colour[w] {
                    Colour::Grey => return true,
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
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_system;
    use crate::system::ENV;

    fn sys(src: &str) -> MembraneSystem {
        parse_system(src).unwrap()
    }

    #[test]
    fn single_evolve_instance() {
        let s = sys("system t\nobjects: o1, yes, no\nmu: env()\ncontents env: o1\nevolve env: o1 -> yes\n");
        let cfg = Configuration::initial(&s, None).unwrap();
        let inst = applicable_instances(&cfg, &s);
        assert_eq!(inst.len(), 1);
        assert_eq!(inst[0], RuleInstance { rule: 0, source: 0, target: None });
    }

    #[test]
    fn comm_in_targets_child_instance() {
        let s = sys("system t\nobjects: a, b\nmu: env( m() )\ncontents env: a\nin m: a -> b\n");
        let cfg = Configuration::initial(&s, None).unwrap();
        let inst = applicable_instances(&cfg, &s);
        assert_eq!(inst.len(), 1);
        assert_eq!(inst[0].source, 0);
        assert_eq!(inst[0].target, Some(1));
    }

    #[test]
    fn no_rules_means_no_instances() {
        let s = sys("system t\nobjects: a\nmu: env()\ncontents env: a\n");
        let cfg = Configuration::initial(&s, None).unwrap();
        assert!(applicable_instances(&cfg, &s).is_empty());
    }

    #[test]
    fn exclusive_choice_on_one_object() {
        let s = sys("system t\nobjects: a, b, c\nmu: env()\ncontents env: a\nevolve env: a -> b\nevolve env: a -> c\n");
        let cfg = Configuration::initial(&s, None).unwrap();
        let assignments = enumerate_maximal_assignments(&cfg, &s, 100).unwrap();
        assert_eq!(assignments.len(), 2);
    }

    #[test]
    fn two_copies_three_signatures() {
        let s = sys("system t\nobjects: a, b, c\nmu: env()\ncontents env: a*2\nevolve env: a -> b\nevolve env: a -> c\n");
        let cfg = Configuration::initial(&s, None).unwrap();
        // {bb}, {bc}, {cc}
        let assignments = enumerate_maximal_assignments(&cfg, &s, 100).unwrap();
        assert_eq!(assignments.len(), 3);
    }

    #[test]
    fn halting_config_has_no_assignments() {
        let s = sys("system t\nobjects: a, b\nmu: env()\ncontents env: b\nevolve env: a -> b\n");
        let cfg = Configuration::initial(&s, None).unwrap();
        assert!(enumerate_maximal_assignments(&cfg, &s, 100).unwrap().is_empty());
    }

    #[test]
    fn evolve_products_seen_by_division() {
        // both m-copies receive y because evolve applies before division
        let s = sys("system t\nobjects: a, x, y, u, v\nmu: env( m() )\ncontents m: a, x\ndiv m: a -> u | v\nevolve m: x -> y\n");
        let cfg = Configuration::initial(&s, None).unwrap();
        let assignments = enumerate_maximal_assignments(&cfg, &s, 100).unwrap();
        assert_eq!(assignments.len(), 1);
        let next = apply_assignment(&cfg, &s, &assignments[0]).unwrap();
        let ms: Vec<_> = next.nodes().iter().filter(|n| n.label != ENV).collect();
        assert_eq!(ms.len(), 2);
        let u = s.obj_id("u").unwrap();
        let v = s.obj_id("v").unwrap();
        let y = s.obj_id("y").unwrap();
        assert_eq!(ms[0].contents.count(u) + ms[1].contents.count(u), 1);
        assert_eq!(ms[0].contents.count(v) + ms[1].contents.count(v), 1);
        assert!(ms.iter().all(|n| n.contents.count(y) == 1));
    }

    #[test]
    fn comm_in_moves_and_renames() {
        let s = sys("system t\nobjects: a, b\nmu: env( m() )\ncontents env: a\nin m: a -> b\n");
        let cfg = Configuration::initial(&s, None).unwrap();
        let assignments = enumerate_maximal_assignments(&cfg, &s, 100).unwrap();
        let next = apply_assignment(&cfg, &s, &assignments[0]).unwrap();
        assert!(next.node(0).contents.is_empty());
        assert_eq!(next.node(1).contents.count(s.obj_id("b").unwrap()), 1);
    }

    #[test]
    fn classify_all_modes() {
        let s = sys("system t\nobjects: yes, no\nmu: env()\ncontents env: yes*2\n");
        let cfg = Configuration::initial(&s, None).unwrap();
        assert_eq!(
            classify_halt(&cfg, &s, Mode::Recogniser),
            Verdict::Invalid("multiple-yes".into())
        );
        assert_eq!(classify_halt(&cfg, &s, Mode::Recogniser1), Verdict::Accept);

        let empty = sys("system t\nobjects: yes, no\nmu: env()\n");
        let cfg = Configuration::initial(&empty, None).unwrap();
        assert_eq!(classify_halt(&cfg, &empty, Mode::Acknowledger), Verdict::Reject);
        assert_eq!(
            classify_halt(&cfg, &empty, Mode::Recogniser),
            Verdict::Invalid("no-decision".into())
        );
    }

    #[test]
    fn run_deterministic_chain() {
        let s = sys("system t\nobjects: a, b, yes, no\nmu: env()\ncontents env: a\nevolve env: a -> b\nevolve env: b -> yes\n");
        for seed in [0u64, 1, 99] {
            let r = run(&s, None, Mode::Recogniser, seed, 100, true).unwrap();
            assert_eq!(r.verdict, Verdict::Accept);
            assert_eq!(r.steps, 2);
            assert_eq!(r.trace.unwrap().len(), 3);
        }
    }

    #[test]
    fn run_loop_exceeds_bound() {
        let s = sys("system t\nobjects: a\nmu: env()\ncontents env: a\nevolve env: a -> a\n");
        let r = run(&s, None, Mode::Recogniser, 7, 10, false).unwrap();
        assert_eq!(r.verdict, Verdict::BoundExceeded);
        assert_eq!(r.steps, 10);
    }

    #[test]
    fn explore_nonconfluent_two_leaves() {
        let s = sys("system t\nobjects: a, yes, no\nmu: env()\ncontents env: a\nevolve env: a -> yes\nevolve env: a ->\n");
        let rep = explore(&s, None, Mode::Acknowledger, 1000).unwrap();
        assert_eq!(rep.result, ExploreResult::NonConfluent);
        assert_eq!(rep.halting_leaves, 2);
    }

    #[test]
    fn explore_detects_nonhalting_loop() {
        let s = sys("system t\nobjects: a\nmu: env()\ncontents env: a\nevolve env: a -> a\n");
        let rep = explore(&s, None, Mode::Acknowledger, 1000).unwrap();
        assert_eq!(rep.result, ExploreResult::InvalidRun("non-halting-computation".into()));
    }

    #[test]
    fn recogniser_early_decision_flagged() {
        let s = sys("system t\nobjects: a, b, yes, no\nmu: env()\ncontents env: a, yes\nevolve env: a -> b\n");
        let rep = explore(&s, None, Mode::Recogniser, 1000).unwrap();
        assert_eq!(rep.result, ExploreResult::InvalidRun("early-decision".into()));
    }

    #[test]
    fn explore_bound_exceeded() {
        // doubles one object per step, never halts inside 3 states
        let s = sys("system t\nobjects: a\nmu: env()\ncontents env: a\nevolve env: a -> a a\n");
        let rep = explore(&s, None, Mode::Acknowledger, 3).unwrap();
        assert_eq!(rep.result, ExploreResult::BoundExceeded);
    }
}

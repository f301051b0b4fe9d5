//! Shared test helpers: random system/program generators and independently
//! coded oracles.

use rand::Rng;

use active_membranes::config::Configuration;
use active_membranes::multiset::Multiset;
use active_membranes::system::{LabelId, MembraneSystem, ObjId, SystemBuilder, ENV};
use active_membranes::tm::{BoundFn, ConfigGraph, RegisterProgram};

/// A small random system with arbitrary rule structure: may loop, may
/// divide, may be nonconfluent. ≤ 6 object types, ≤ 3 labels, ≤ 10 rules.
pub fn gen_wild(rng: &mut impl Rng) -> MembraneSystem {
    loop {
        if let Some(sys) = try_gen_wild(rng) {
            return sys;
        }
    }
}

fn try_gen_wild(rng: &mut impl Rng) -> Option<MembraneSystem> {
    let mut b = SystemBuilder::new("wild");
    let num_plain = rng.gen_range(2..=4usize);
    let mut objs: Vec<ObjId> = (0..num_plain)
        .map(|i| b.object(&format!("a{i}")).unwrap())
        .collect();
    let yes = b.object("yes").unwrap();
    let no = b.object("no").unwrap();

    let mut labels = vec![ENV];
    for i in 0..rng.gen_range(0..=2usize) {
        let parent = labels[rng.gen_range(0..labels.len())];
        labels.push(b.label(&format!("m{i}"), parent).unwrap());
    }

    // initial contents: 1..=3 objects somewhere
    for _ in 0..rng.gen_range(1..=3usize) {
        let l = labels[rng.gen_range(0..labels.len())];
        let o = objs[rng.gen_range(0..objs.len())];
        b.add_contents(l, o, rng.gen_range(1..=2)).unwrap();
    }

    objs.push(yes);
    objs.push(no);
    for _ in 0..rng.gen_range(1..=10usize) {
        let subject = objs[rng.gen_range(0..num_plain)];
        match rng.gen_range(0..4u8) {
            0 => {
                let label = labels[rng.gen_range(0..labels.len())];
                let mut products = Multiset::new();
                for _ in 0..rng.gen_range(0..=2usize) {
                    products.insert(objs[rng.gen_range(0..objs.len())], 1).unwrap();
                }
                b.evolve(label, subject, products);
            }
            1 if labels.len() > 1 => {
                let label = labels[rng.gen_range(1..labels.len())];
                b.comm_in(label, subject, objs[rng.gen_range(0..objs.len())]);
            }
            2 if labels.len() > 1 => {
                let label = labels[rng.gen_range(1..labels.len())];
                b.comm_out(label, subject, objs[rng.gen_range(0..objs.len())]);
            }
            3 if labels.len() > 1 => {
                let label = labels[rng.gen_range(1..labels.len())];
                let u = objs[rng.gen_range(0..objs.len())];
                let v = objs[rng.gen_range(0..objs.len())];
                b.divide(label, subject, u, v);
            }
            _ => {}
        }
    }
    b.finish().ok()
}

/// A random system guaranteed to halt: every rule strictly increases the
/// index of the object it touches (yes/no count as maximal). May still be
/// nonconfluent; callers filter via explore.
pub fn gen_layered(rng: &mut impl Rng) -> MembraneSystem {
    loop {
        if let Some(sys) = try_gen_layered(rng) {
            return sys;
        }
    }
}

fn try_gen_layered(rng: &mut impl Rng) -> Option<MembraneSystem> {
    let mut b = SystemBuilder::new("layered");
    let num_plain = rng.gen_range(3..=5usize);
    let objs: Vec<ObjId> = (0..num_plain)
        .map(|i| b.object(&format!("a{i}")).unwrap())
        .collect();
    let yes = b.object("yes").unwrap();
    let no = b.object("no").unwrap();

    let mut labels = vec![ENV];
    for i in 0..rng.gen_range(0..=2usize) {
        let parent = labels[rng.gen_range(0..labels.len())];
        labels.push(b.label(&format!("m{i}"), parent).unwrap());
    }

    for _ in 0..rng.gen_range(1..=2usize) {
        let l = labels[rng.gen_range(0..labels.len())];
        let o = objs[rng.gen_range(0..objs.len())];
        b.add_contents(l, o, 1).unwrap();
    }

    // products always rank strictly above the subject, so every computation
    // halts within num_plain steps per object
    let higher = |rng: &mut dyn rand::RngCore, i: usize| -> ObjId {
        let pool: Vec<ObjId> = (i + 1..num_plain)
            .map(|j| objs[j])
            .chain([yes, no])
            .collect();
        pool[rng.gen_range(0..pool.len())]
    };
    for _ in 0..rng.gen_range(2..=8usize) {
        let i = rng.gen_range(0..num_plain - 1);
        let subject = objs[i];
        match rng.gen_range(0..4u8) {
            0 => {
                let label = labels[rng.gen_range(0..labels.len())];
                let mut products = Multiset::new();
                for _ in 0..rng.gen_range(0..=2usize) {
                    products.insert(higher(rng, i), 1).unwrap();
                }
                b.evolve(label, subject, products);
            }
            1 if labels.len() > 1 => {
                let label = labels[rng.gen_range(1..labels.len())];
                b.comm_in(label, subject, higher(rng, i));
            }
            2 if labels.len() > 1 => {
                let label = labels[rng.gen_range(1..labels.len())];
                b.comm_out(label, subject, higher(rng, i));
            }
            3 if labels.len() > 1 => {
                let label = labels[rng.gen_range(1..labels.len())];
                b.divide(label, subject, higher(rng, i), higher(rng, i));
            }
            _ => {}
        }
    }
    b.finish().ok()
}

/// A configuration holding exactly one object in one instance of the given
/// label (the single-object restriction C^∅).
pub fn single_object_config(sys: &MembraneSystem, obj: ObjId, label: LabelId) -> Configuration {
    let mut cfg = Configuration::initial(sys, None).unwrap();
    for i in 0..cfg.nodes().len() {
        *cfg.contents_mut(i) = Multiset::new();
    }
    let idx = cfg
        .nodes()
        .iter()
        .position(|n| n.label == label)
        .expect("label instantiated");
    cfg.contents_mut(idx).insert(obj, 1).unwrap();
    cfg
}

/// Independent reachability oracle: plain queue-based BFS over the edge
/// list, coded separately from the library's DFS.
pub fn bfs_accepts(graph: &ConfigGraph) -> bool {
    let mut seen = vec![false; graph.vertices.len()];
    let mut queue = std::collections::VecDeque::from([graph.start]);
    seen[graph.start] = true;
    while let Some(v) = queue.pop_front() {
        if graph.accept.contains(&v) {
            return true;
        }
        for &(f, t) in &graph.edges {
            if f == v && !seen[t] {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    false
}

/// A small random register program. Always instrumented with a step counter
/// so its configuration graphs are acyclic by construction.
pub fn gen_program(rng: &mut impl Rng) -> RegisterProgram {
    use active_membranes::tm::{auto_step_counter, parse_program};
    let nregs = rng.gen_range(1..=2usize);
    let regs: Vec<String> = (0..nregs).map(|i| format!("r{i}")).collect();
    let nlabels = rng.gen_range(3..=7usize);
    let mut src = String::from("prog rnd\n");
    for r in &regs {
        let bound = ["1", "2", "n", "n+1"][rng.gen_range(0..4)];
        src.push_str(&format!("reg {r} bound {bound}\n"));
    }
    let lbl = |i: usize| format!("L{i}");
    for i in 0..nlabels {
        let any = |rng: &mut dyn rand::RngCore| lbl(rng.gen_range(0..nlabels));
        let r = &regs[rng.gen_range(0..nregs)];
        let body = match rng.gen_range(0..8u8) {
            0 => format!("inc {r} goto {}", any(rng)),
            1 => format!("dec {r} goto {}", any(rng)),
            2 => format!("set {r} {} goto {}", rng.gen_range(0..2), any(rng)),
            3 => format!("brz {r} {} {}", any(rng), any(rng)),
            4 => format!("read {r} {} {}", any(rng), any(rng)),
            5 => format!("choice {} {}", any(rng), any(rng)),
            6 => "accept".to_string(),
            _ => "reject".to_string(),
        };
        src.push_str(&format!("{}: {body}\n", lbl(i)));
    }
    let prog = parse_program(&src).expect("generated source is well-formed");
    auto_step_counter(&prog, BoundFn::parse("n+12").unwrap())
}

/// All words over {0,1} of exactly the given length, in numeric order.
pub fn words_of_length(len: usize) -> Vec<String> {
    (0..(1u64 << len))
        .map(|v| {
            (0..len)
                .map(|i| if v >> (len - 1 - i) & 1 == 1 { '1' } else { '0' })
                .collect()
        })
        .collect()
}

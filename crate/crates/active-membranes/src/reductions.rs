//! Encoding primitives (bit interleaving, binary↔unary) and truth-table
//! reduction evaluation.

use crate::error::{Error, Result};

/// Interleaves two bit strings as `b_k a_k … b_0 a_0`, where subscript 0 is
/// the least significant (rightmost) bit. The shorter argument is
/// left-padded with zeros, keeping the pairing injective for known widths.
pub fn interleave(a: &str, b: &str) -> String {
    let width = a.len().max(b.len());
    let pad = |s: &str| format!("{}{}", "0".repeat(width - s.len()), s);
    let (a, b) = (pad(a), pad(b));
    let mut out = String::with_capacity(2 * width);
    for (ca, cb) in a.chars().zip(b.chars()) {
        out.push(cb);
        out.push(ca);
    }
    out
}

/// Exact inverse of [`interleave`] on padded pairs; returns `(a, b)`.
pub fn deinterleave(s: &str) -> Result<(String, String)> {
    if s.len() % 2 != 0 {
        return Err(Error::OddLength);
    }
    let mut a = String::new();
    let mut b = String::new();
    for (i, c) in s.chars().enumerate() {
        if i % 2 == 0 {
            b.push(c);
        } else {
            a.push(c);
        }
    }
    Ok((a, b))
}

/// Number of leading bits that determine the unary output: ⌈log₂ n⌉, but at
/// least 1.
fn prefix_len(n: usize) -> usize {
    if n <= 1 {
        1
    } else {
        ((n - 1).ilog2() + 1) as usize
    }
}

/// `1^x` where `x` is the value of the first ⌈log₂|w|⌉ bits of `w` (the
/// single bit when |w| = 1).
pub fn bin_to_unary(w: &str) -> Result<String> {
    if w.is_empty() {
        return Err(Error::MalformedBits(String::new()));
    }
    let k = prefix_len(w.len());
    let mut x: u64 = 0;
    for c in w.chars().take(k) {
        x = x * 2
            + match c {
                '0' => 0,
                '1' => 1,
                _ => return Err(Error::MalformedBits(w.to_string())),
            };
    }
    Ok("1".repeat(x as usize))
}

/// Binary encoding (no leading zeros; zero is `"0"`) of the number of 1s in
/// a word of the form `0^{n−x} 1^x`.
pub fn unary_to_bin(w: &str) -> Result<String> {
    let mut ones = 0u64;
    let mut seen_one = false;
    for c in w.chars() {
        match c {
            '1' => {
                seen_one = true;
                ones += 1;
            }
            '0' if !seen_one => {}
            '0' => return Err(Error::MalformedUnary),
            _ => return Err(Error::MalformedBits(w.to_string())),
        }
    }
    Ok(format!("{ones:b}"))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Combiner {
    /// Disjunctive truth table: accept iff some query is in the oracle set.
    Or,
    /// Conjunctive truth table: accept iff every query is in the oracle set.
    And,
    /// Many-one: a single query, passed through.
    Identity,
}

/// A truth-table reduction instance: the generated queries plus the combiner
/// applied to the oracle's answers.
#[derive(Clone, Debug)]
pub struct ReductionQuery<Q> {
    pub queries: Vec<Q>,
    pub combiner: Combiner,
}

/// Asks the oracle about each query and combines the answers. Empty Or is 0,
/// empty And is 1.
pub fn eval_reduction<Q>(
    q: &ReductionQuery<Q>,
    mut oracle: impl FnMut(&Q) -> bool,
) -> Result<(Vec<bool>, bool)> {
    if q.combiner == Combiner::Identity && q.queries.len() != 1 {
        return Err(Error::IdentityArity(q.queries.len()));
    }
    let answers: Vec<bool> = q.queries.iter().map(&mut oracle).collect();
    let verdict = match q.combiner {
        Combiner::Or => answers.iter().any(|&b| b),
        Combiner::And => answers.iter().all(|&b| b),
        Combiner::Identity => answers[0],
    };
    Ok((answers, verdict))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interleave_pattern() {
        assert_eq!(interleave("101", "011"), "011011");
        assert_eq!(interleave("1", "0"), "01");
    }

    #[test]
    fn interleave_round_trip() {
        let (a, b) = ("1101", "0010");
        assert_eq!(deinterleave(&interleave(a, b)).unwrap(), (a.to_string(), b.to_string()));
        assert!(deinterleave("011").is_err());
    }

    #[test]
    fn padding_keeps_the_pairing_invertible() {
        let s = interleave("1", "1011");
        let (a, b) = deinterleave(&s).unwrap();
        assert_eq!(a, "0001");
        assert_eq!(b, "1011");
    }

    #[test]
    fn bin_to_unary_prefix_value() {
        assert_eq!(bin_to_unary("01100101").unwrap(), "111"); // first 3 bits: 011
        assert_eq!(bin_to_unary("0000").unwrap(), "");
        assert_eq!(bin_to_unary("1").unwrap(), "1");
        assert!(bin_to_unary("").is_err());
    }

    #[test]
    fn unary_to_bin_counts() {
        assert_eq!(unary_to_bin("00111").unwrap(), "11");
        assert_eq!(unary_to_bin("0000").unwrap(), "0");
        assert_eq!(unary_to_bin("1").unwrap(), "1");
        assert!(matches!(unary_to_bin("10"), Err(Error::MalformedUnary)));
    }

    #[test]
    fn combiners() {
        let or = ReductionQuery { queries: vec![0, 1, 0], combiner: Combiner::Or };
        assert!(eval_reduction(&or, |&q| q == 1).unwrap().1);
        let and = ReductionQuery { queries: vec![1, 1], combiner: Combiner::And };
        assert!(eval_reduction(&and, |&q| q == 1).unwrap().1);
        let empty_or = ReductionQuery::<u8> { queries: vec![], combiner: Combiner::Or };
        assert!(!eval_reduction(&empty_or, |_| true).unwrap().1);
        let empty_and = ReductionQuery::<u8> { queries: vec![], combiner: Combiner::And };
        assert!(eval_reduction(&empty_and, |_| false).unwrap().1);
        let id = ReductionQuery::<u8> { queries: vec![], combiner: Combiner::Identity };
        assert!(matches!(eval_reduction(&id, |_| true), Err(Error::IdentityArity(0))));
    }
}

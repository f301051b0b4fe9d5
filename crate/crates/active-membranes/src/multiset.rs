//! Finite multisets over object types.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::system::ObjId;

/// A finite multiset of objects. Entries with multiplicity zero are never
/// stored, so structural equality is multiset equality.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Multiset(BTreeMap<ObjId, u64>);

impl Multiset {
    pub fn new() -> Self {
        Multiset::default()
    }

    pub fn singleton(obj: ObjId) -> Self {
        let mut m = Multiset::new();
        m.insert(obj, 1).expect("1 cannot overflow");
        m
    }

    pub fn count(&self, obj: ObjId) -> u64 {
        self.0.get(&obj).copied().unwrap_or(0)
    }

    pub fn insert(&mut self, obj: ObjId, n: u64) -> Result<()> {
        if n == 0 {
            return Ok(());
        }
        let slot = self.0.entry(obj).or_insert(0);
        *slot = slot.checked_add(n).ok_or(Error::CountOverflow)?;
        Ok(())
    }

    /// Removes exactly `n` occurrences; the occurrences must be present.
    pub fn remove(&mut self, obj: ObjId, n: u64) {
        if n == 0 {
            return;
        }
        let have = self.count(obj);
        assert!(have >= n, "removing {n} of an object with multiplicity {have}");
        if have == n {
            self.0.remove(&obj);
        } else {
            self.0.insert(obj, have - n);
        }
    }

    /// Adds `scale` copies of every entry of `other`.
    pub fn add_scaled(&mut self, other: &Multiset, scale: u64) -> Result<()> {
        for (&obj, &k) in &other.0 {
            let add = k.checked_mul(scale).ok_or(Error::CountOverflow)?;
            self.insert(obj, add)?;
        }
        Ok(())
    }

    pub fn union(&self, other: &Multiset) -> Result<Multiset> {
        let mut out = self.clone();
        out.add_scaled(other, 1)?;
        Ok(out)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of distinct object types present.
    pub fn distinct(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (ObjId, u64)> + '_ {
        self.0.iter().map(|(&o, &k)| (o, k))
    }
}

impl FromIterator<(ObjId, u64)> for Multiset {
    fn from_iter<T: IntoIterator<Item = (ObjId, u64)>>(iter: T) -> Self {
        let mut m = Multiset::new();
        for (o, k) in iter {
            m.insert(o, k).expect("multiset literal overflow");
        }
        m
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (obj, k) in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if k == 1 {
                write!(f, "#{}", obj.0)?;
            } else {
                write!(f, "#{}*{}", obj.0, k)?;
            }
        }
        Ok(())
    }
}

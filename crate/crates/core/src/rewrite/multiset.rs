use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::syntax::Term;

/// A finite multiset of terms in canonical (sorted) order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermMultiset {
    counts: BTreeMap<Term, usize>,
}

impl TermMultiset {
    pub fn empty() -> Self {
        TermMultiset::default()
    }

    pub fn singleton(t: Term) -> Self {
        let mut m = TermMultiset::empty();
        m.insert(t);
        m
    }

    pub fn insert(&mut self, t: Term) {
        *self.counts.entry(t).or_insert(0) += 1;
    }

    /// Removes one occurrence; false if absent.
    pub fn remove(&mut self, t: &Term) -> bool {
        match self.counts.get_mut(t) {
            Some(k) if *k > 1 => {
                *k -= 1;
                true
            }
            Some(_) => {
                self.counts.remove(t);
                true
            }
            None => false,
        }
    }

    pub fn union(&self, other: &TermMultiset) -> TermMultiset {
        let mut out = self.clone();
        for (t, k) in &other.counts {
            *out.counts.entry(t.clone()).or_insert(0) += k;
        }
        out
    }

    pub fn len(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn count(&self, t: &Term) -> usize {
        self.counts.get(t).copied().unwrap_or(0)
    }

    /// Members with repetition, in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = &Term> {
        self.counts.iter().flat_map(|(t, &k)| core::iter::repeat_n(t, k))
    }

    pub fn to_vec(&self) -> Vec<Term> {
        self.iter().cloned().collect()
    }

    /// Applies `f` to every member.
    pub fn map(&self, f: impl Fn(&Term) -> Term) -> TermMultiset {
        self.iter().map(f).collect()
    }
}

impl FromIterator<Term> for TermMultiset {
    fn from_iter<T: IntoIterator<Item = Term>>(iter: T) -> Self {
        let mut m = TermMultiset::empty();
        for t in iter {
            m.insert(t);
        }
        m
    }
}

impl fmt::Display for TermMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, t) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str("]")
    }
}

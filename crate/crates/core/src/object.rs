//! Canonical object trees shared by the concrete models.
//!
//! Every object is `T` (the terminal object), an iterated `D` of a base
//! object, or a binary product. `D` is always pushed down to the leaves, so
//! `D(X & Y)` and `DX & DY` are the same value. Atoms of an object are
//! numbered `0..size`; products lay out the left atoms first, and the
//! atoms of `D^(h+1) B` are `tag * |D^h B| + atom` with `tag` in `{0, 1}`.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A base object of a model: a finite set of atoms with printable names.
pub trait Base: Clone + Eq + Ord + fmt::Debug {
    fn size(&self) -> usize;
    fn name(&self) -> &str;
    fn atom_label(&self, atom: usize) -> String;
    fn atom_index(&self, label: &str) -> Option<usize>;
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Object<B> {
    Top,
    Leaf { base: B, depth: u32 },
    With(Box<Object<B>>, Box<Object<B>>),
}

impl<B: Base> Object<B> {
    pub fn leaf(base: B) -> Self {
        Object::Leaf { base, depth: 0 }
    }

    pub fn with(left: Self, right: Self) -> Self {
        Object::With(Box::new(left), Box::new(right))
    }

    /// Left-nested n-ary product: `[] -> T`, `[X] -> X`, `[X, Y, Z] -> (X & Y) & Z`.
    pub fn product_n(slots: &[Self]) -> Self {
        let mut iter = slots.iter();
        match iter.next() {
            None => Object::Top,
            Some(first) => iter.fold(first.clone(), |acc, s| Object::with(acc, s.clone())),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Object::Top => 0,
            Object::Leaf { base, depth } => base.size() << depth,
            Object::With(l, r) => l.size() + r.size(),
        }
    }

    pub fn d(&self) -> Self {
        match self {
            Object::Top => Object::Top,
            Object::Leaf { base, depth } => Object::Leaf { base: base.clone(), depth: depth + 1 },
            Object::With(l, r) => Object::with(l.d(), r.d()),
        }
    }

    pub fn d_n(&self, n: u32) -> Self {
        (0..n).fold(self.clone(), |acc, _| acc.d())
    }

    /// The object `X` with `D X == self`, if any.
    pub fn undepth(&self) -> Option<Self> {
        match self {
            Object::Top => Some(Object::Top),
            Object::Leaf { depth: 0, .. } => None,
            Object::Leaf { base, depth } => Some(Object::Leaf { base: base.clone(), depth: depth - 1 }),
            Object::With(l, r) => Some(Object::with(l.undepth()?, r.undepth()?)),
        }
    }

    pub fn split(&self) -> Option<(&Self, &Self)> {
        match self {
            Object::With(l, r) => Some((l, r)),
            _ => None,
        }
    }

    /// Index in `D self` of the atom `atom` of `self` under `tag`.
    pub fn d_atom(&self, tag: u8, atom: usize) -> usize {
        debug_assert!(tag < 2 && atom < self.size());
        match self {
            Object::Top => unreachable!("the terminal object has no atoms"),
            Object::Leaf { .. } => tag as usize * self.size() + atom,
            Object::With(l, r) => {
                let ls = l.size();
                if atom < ls {
                    l.d_atom(tag, atom)
                } else {
                    2 * ls + r.d_atom(tag, atom - ls)
                }
            }
        }
    }

    /// `table[tag][atom]` is `d_atom(tag, atom)`.
    pub fn d_table(&self) -> [Vec<usize>; 2] {
        let n = self.size();
        [
            (0..n).map(|a| self.d_atom(0, a)).collect(),
            (0..n).map(|a| self.d_atom(1, a)).collect(),
        ]
    }

    /// Offsets of each slot inside `product_n(slots)`.
    pub fn offsets(slots: &[Self]) -> Vec<usize> {
        let mut out = Vec::with_capacity(slots.len() + 1);
        let mut acc = 0;
        for s in slots {
            out.push(acc);
            acc += s.size();
        }
        out.push(acc);
        out
    }

    /// Printable atom name, e.g. `l.d1.e0`.
    pub fn atom_label(&self, atom: usize) -> String {
        match self {
            Object::Top => String::from("?"),
            Object::Leaf { base, depth } => {
                let mut label = String::new();
                let mut rest = atom;
                for level in (0..*depth).rev() {
                    let block = base.size() << level;
                    label.push_str(if rest >= block { "d1." } else { "d0." });
                    rest %= block;
                }
                label.push_str(&base.atom_label(rest));
                label
            }
            Object::With(l, r) => {
                let ls = l.size();
                if atom < ls {
                    alloc::format!("l.{}", l.atom_label(atom))
                } else {
                    alloc::format!("r.{}", r.atom_label(atom - ls))
                }
            }
        }
    }

    /// Inverse of [`Object::atom_label`]. Tags may also be written in front of
    /// `l.`/`r.`, since `D` commutes with products.
    pub fn atom_index(&self, label: &str) -> Option<usize> {
        let (head, rest) = match label.split_once('.') {
            Some((h, r)) => (h, Some(r)),
            None => (label, None),
        };
        match (head, rest) {
            ("d0" | "d1", Some(rest)) => {
                let inner = self.undepth()?;
                let atom = inner.atom_index(rest)?;
                Some(inner.d_atom(u8::from(head == "d1"), atom))
            }
            ("l" | "r", Some(rest)) => {
                let (l, r) = self.split()?;
                if head == "l" {
                    l.atom_index(rest)
                } else {
                    r.atom_index(rest).map(|a| a + l.size())
                }
            }
            (_, None) => match self {
                Object::Leaf { base, depth: 0 } => base.atom_index(head),
                _ => None,
            },
            _ => None,
        }
    }
}

impl<B: Base> fmt::Display for Object<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Top => f.write_str("T"),
            Object::Leaf { base, depth } => {
                for _ in 0..*depth {
                    f.write_str("D ")?;
                }
                f.write_str(base.name())
            }
            Object::With(l, r) => write!(f, "({l} & {r})"),
        }
    }
}

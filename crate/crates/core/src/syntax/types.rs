use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;

/// A type: an iterated `D` of a ground type, or a product. `D` is kept at
/// the leaves, so `D (A & B)` is represented as `D A & D B`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Type {
    Ground { name: String, depth: u32 },
    Product(Box<Type>, Box<Type>),
}

impl Type {
    pub fn ground(name: impl Into<String>) -> Self {
        Type::Ground { name: name.into(), depth: 0 }
    }

    pub fn product(a: Type, b: Type) -> Self {
        Type::Product(Box::new(a), Box::new(b))
    }

    pub fn d(&self) -> Self {
        self.d_n(1)
    }

    pub fn d_n(&self, k: u32) -> Self {
        match self {
            Type::Ground { name, depth } => Type::Ground { name: name.clone(), depth: depth + k },
            Type::Product(a, b) => Type::product(a.d_n(k), b.d_n(k)),
        }
    }

    /// The type `A` with `D^k A == self`, if any.
    pub fn undepth(&self, k: u32) -> Option<Self> {
        match self {
            Type::Ground { name, depth } if *depth >= k => Some(Type::Ground { name: name.clone(), depth: depth - k }),
            Type::Ground { .. } => None,
            Type::Product(a, b) => Some(Type::product(a.undepth(k)?, b.undepth(k)?)),
        }
    }

    /// Largest `k` such that `self = D^k A`.
    pub fn min_depth(&self) -> u32 {
        match self {
            Type::Ground { depth, .. } => *depth,
            Type::Product(a, b) => a.min_depth().min(b.min_depth()),
        }
    }
}

impl fmt::Display for Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Type::Ground { name, depth } => {
                for _ in 0..*depth {
                    f.write_str("D ")?;
                }
                f.write_str(name)
            }
            Type::Product(a, b) => {
                write!(f, "{a} & ")?;
                match **b {
                    Type::Product(..) => write!(f, "({b})"),
                    _ => write!(f, "{b}"),
                }
            }
        }
    }
}

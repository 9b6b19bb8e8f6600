//! Probabilistic coherence spaces with a finite web, given by a finite
//! predual: `P X = { x >= 0 : <x, x'> <= 1 for every x' in the predual }`.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::object::{Base, Object};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PcsError {
    #[error("invalid space {name}: {reason}")]
    InvalidSpace { name: String, reason: String },
    #[error("not a morphism of {dom} -> {cod}: {reason}")]
    NotAMorphism { dom: String, cod: String, reason: String },
    #[error("point is not in P({0})")]
    NotInSpace(String),
    #[error("vector of length {got} does not fit {object} ({expected} atoms)")]
    Length { object: String, expected: usize, got: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PcsBase {
    name: String,
    web: Vec<String>,
    predual: Vec<Vec<Rational>>,
}

impl PcsBase {
    /// Checks that the predual fits the web, is nonnegative, and bounds
    /// every atom.
    pub fn new(name: impl Into<String>, web: Vec<String>, predual: Vec<Vec<Rational>>) -> Result<Self, PcsError> {
        let name = name.into();
        let bad = |reason: String| PcsError::InvalidSpace { name: name.clone(), reason };
        for (i, a) in web.iter().enumerate() {
            if web[..i].contains(a) {
                return Err(bad(alloc::format!("atom {a} listed twice")));
            }
        }
        for v in &predual {
            if v.len() != web.len() {
                return Err(bad(alloc::format!("predual vector of length {} for a web of size {}", v.len(), web.len())));
            }
            if v.iter().any(Signed::is_negative) {
                return Err(bad(String::from("negative predual coefficient")));
            }
        }
        for (a, label) in web.iter().enumerate() {
            if predual.iter().all(|v| v[a].is_zero()) {
                return Err(bad(alloc::format!("atom {label} is unbounded")));
            }
        }
        Ok(PcsBase { name, web, predual })
    }

    /// The unit space: one atom, `P = [0, 1]`.
    pub fn unit() -> Self {
        PcsBase::new("1", vec![String::from("*")], vec![vec![Rational::one()]]).unwrap()
    }

    /// Sub-probability distributions on `{0, .., k}`.
    pub fn truncated_nat(name: &str, k: usize) -> Self {
        let web = (0..=k).map(|i| alloc::format!("e{i}")).collect();
        PcsBase::new(name, web, vec![vec![Rational::one(); k + 1]]).unwrap()
    }

    pub fn web(&self) -> &[String] {
        &self.web
    }

    pub fn predual(&self) -> &[Vec<Rational>] {
        &self.predual
    }
}

impl Base for Arc<PcsBase> {
    fn size(&self) -> usize {
        self.web.len()
    }

    fn name(&self) -> &str {
        &self.name
    }

    fn atom_label(&self, atom: usize) -> String {
        self.web[atom].clone()
    }

    fn atom_index(&self, label: &str) -> Option<usize> {
        self.web.iter().position(|a| a == label)
    }
}

pub type PcsObject = Object<Arc<PcsBase>>;

/// A point of a space, one coordinate per atom.
pub type PcsVector = Vec<Rational>;

pub fn leaf(base: PcsBase) -> PcsObject {
    Object::leaf(Arc::new(base))
}

/// Predual of any object tree: `D` duplicates each constraint over both
/// tags, products pad each side's constraints with zeros.
pub fn predual(x: &PcsObject) -> Vec<Vec<Rational>> {
    match x {
        Object::Top => Vec::new(),
        Object::Leaf { base, depth: 0 } => base.predual.clone(),
        Object::Leaf { .. } => {
            let inner = x.undepth().unwrap();
            let [t0, t1] = inner.d_table();
            predual(&inner)
                .into_iter()
                .map(|v| {
                    let mut w = vec![Rational::zero(); 2 * v.len()];
                    for (a, c) in v.into_iter().enumerate() {
                        w[t0[a]] = c.clone();
                        w[t1[a]] = c;
                    }
                    w
                })
                .collect()
        }
        Object::With(l, r) => {
            let (nl, nr) = (l.size(), r.size());
            let mut out: Vec<Vec<Rational>> = predual(l)
                .into_iter()
                .map(|mut v| {
                    v.resize(nl + nr, Rational::zero());
                    v
                })
                .collect();
            out.extend(predual(r).into_iter().map(|v| {
                let mut w = vec![Rational::zero(); nl];
                w.extend(v);
                w
            }));
            out
        }
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Largest pairing of `v` with the predual.
pub fn norm(x: &PcsObject, v: &[Rational]) -> Rational {
    predual(x).iter().map(|w| dot(v, w)).max().unwrap_or_else(Rational::zero)
}

pub fn contains(x: &PcsObject, v: &[Rational]) -> bool {
    v.len() == x.size() && v.iter().all(rational::is_nonnegative) && norm(x, v) <= Rational::one()
}

/// Largest value coordinate `a` takes on `P x`.
pub fn coordinate_bounds(x: &PcsObject) -> Vec<Rational> {
    let pd = predual(x);
    (0..x.size())
        .map(|a| {
            let m = pd.iter().map(|w| w[a].clone()).max().unwrap_or_else(Rational::zero);
            Rational::one() / m
        })
        .collect()
}

/// `v` scaled onto the boundary of `P x`; zero stays zero.
pub fn to_boundary(x: &PcsObject, v: &[Rational]) -> Vec<Rational> {
    let n = norm(x, v);
    if n.is_zero() {
        v.to_vec()
    } else {
        v.iter().map(|c| c / &n).collect()
    }
}

/// Test points of `P x` for certifying morphisms: scaled unit vectors, the
/// predual vectors themselves scaled to the boundary, the scaled all-ones
/// vector, and `random` seeded random boundary points with some zero
/// coordinates.
pub fn probes(x: &PcsObject, random: usize, seed: u64) -> Vec<PcsVector> {
    let n = x.size();
    let mut out: Vec<PcsVector> = vec![vec![Rational::zero(); n]];
    let bounds = coordinate_bounds(x);
    for a in 0..n {
        let mut v = vec![Rational::zero(); n];
        v[a] = bounds[a].clone();
        out.push(v);
    }
    for w in predual(x) {
        out.push(to_boundary(x, &w));
    }
    out.push(to_boundary(x, &vec![Rational::one(); n]));
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    for _ in 0..random {
        let v: Vec<Rational> = (0..n)
            .map(|_| if rng.gen_bool(0.25) { Rational::zero() } else { rational::ratio(rng.gen_range(1..=8), 8) })
            .collect();
        out.push(to_boundary(x, &v));
    }
    out.sort();
    out.dedup();
    out
}

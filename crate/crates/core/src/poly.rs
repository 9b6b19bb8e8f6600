//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A [`PolyMap`] is a tuple of polynomials sharing one set of input
//! variables. It is the common carrier of morphisms in both models.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::rational::{self, Rational};

/// A monomial, stored as the sorted multiset of its variable indices.
/// `x0^2*x3` is `[0, 0, 3]`; the empty monomial is the constant 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: u32) -> Self {
        Monomial(alloc::vec![v])
    }

    pub fn from_vars(mut vars: Vec<u32>) -> Self {
        vars.sort_unstable();
        Monomial(vars)
    }

    pub fn vars(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn multiplicity(&self, v: u32) -> usize {
        self.0.iter().filter(|&&w| w == v).count()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] <= other.0[j] {
                out.push(self.0[i]);
                i += 1;
            } else {
                out.push(other.0[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// Removes one occurrence of `v`.
    pub fn without(&self, v: u32) -> Option<Monomial> {
        let pos = self.0.iter().position(|&w| w == v)?;
        let mut out = self.0.clone();
        out.remove(pos);
        Some(Monomial(out))
    }

    pub fn rename(&self, f: impl Fn(u32) -> u32) -> Monomial {
        Monomial::from_vars(self.0.iter().map(|&v| f(v)).collect())
    }

    /// Distinct variables with their exponents, ascending.
    pub fn powers(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &v in &self.0 {
            match out.last_mut() {
                Some((w, k)) if *w == v => *k += 1,
                _ => out.push((v, 1)),
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("polynomial degree {degree} exceeds the cap {cap}")]
pub struct DegreeExceeded {
    pub degree: usize,
    pub cap: usize,
}

/// A polynomial with no zero coefficients stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(v: u32) -> Self {
        Polynomial::monomial(Monomial::var(v), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Polynomial) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Rational::one())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Degree of the zero polynomial is 0.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn max_var(&self) -> Option<u32> {
        self.terms.keys().filter_map(|m| m.vars().last().copied()).max()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Coefficientwise comparison `self <= other`.
    pub fn le_coeffwise(&self, other: &Polynomial) -> bool {
        self.terms.iter().all(|(m, c)| *c <= other.coeff(m))
            && other
                .terms
                .iter()
                .all(|(m, c)| self.terms.contains_key(m) || !c.is_negative())
    }

    pub fn derivative(&self, v: u32) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let k = m.multiplicity(v);
            if k > 0 {
                out.add_term(m.without(v).unwrap(), c * rational::int(k as i64));
            }
        }
        out
    }

    pub fn rename(&self, f: impl Fn(u32) -> u32) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.rename(&f), c.clone());
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &v in m.vars() {
                t *= &point[v as usize];
                if t.is_zero() {
                    break;
                }
            }
            total += t;
        }
        total
    }

    /// Substitutes `args[v]` for every variable `v`.
    ///
    /// Fails before doing any work on a monomial whose image would exceed
    /// `cap` in degree.
    pub fn substitute(&self, args: &[Polynomial], cap: usize) -> Result<Polynomial, DegreeExceeded> {
        let degrees: Vec<usize> = args.iter().map(Polynomial::degree).collect();
        let mut out = Polynomial::zero();
        let mut powers: BTreeMap<(u32, usize), Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let degree: usize = m.vars().iter().map(|&v| degrees[v as usize]).sum();
            if degree > cap {
                return Err(DegreeExceeded { degree, cap });
            }
            let mut acc = Polynomial::constant(c.clone());
            for (v, k) in m.powers() {
                if args[v as usize].is_zero() {
                    acc = Polynomial::zero();
                    break;
                }
                let p = if k == 1 {
                    args[v as usize].clone()
                } else {
                    powers
                        .entry((v, k))
                        .or_insert_with(|| {
                            let mut p = args[v as usize].clone();
                            for _ in 1..k {
                                p = p.mul(&args[v as usize]);
                            }
                            p
                        })
                        .clone()
                };
                acc = acc.mul(&p);
            }
            out.add_assign(&acc);
        }
        Ok(out)
    }
}

impl fmt::Display for Polynomial {
    /// Prints in the literal syntax `2*x0^2*x1 + 1/3*x2`, lowest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut entries: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        entries.sort_by(|a, b| (a.0.degree(), a.0).cmp(&(b.0.degree(), b.0)));
        for (k, (m, c)) in entries.into_iter().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let magnitude = c.abs();
            let mut parts: Vec<alloc::string::String> = Vec::new();
            if !magnitude.is_one() || m.degree() == 0 {
                parts.push(rational::format(&magnitude));
            }
            for (v, e) in m.powers() {
                if e == 1 {
                    parts.push(alloc::format!("x{v}"));
                } else {
                    parts.push(alloc::format!("x{v}^{e}"));
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

/// A tuple of polynomials over `inputs` variables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolyMap {
    inputs: usize,
    outputs: Vec<Polynomial>,
}

impl PolyMap {
    pub fn new(inputs: usize, outputs: Vec<Polynomial>) -> Self {
        debug_assert!(outputs
            .iter()
            .all(|p| p.max_var().is_none_or(|v| (v as usize) < inputs)));
        PolyMap { inputs, outputs }
    }

    pub fn identity(n: usize) -> Self {
        PolyMap::new(n, (0..n as u32).map(Polynomial::var).collect())
    }

    pub fn zero(inputs: usize, outputs: usize) -> Self {
        PolyMap::new(inputs, alloc::vec![Polynomial::zero(); outputs])
    }

    /// Linear map from `(output, input, coefficient)` entries.
    pub fn linear(inputs: usize, outputs: usize, entries: impl IntoIterator<Item = (usize, usize, Rational)>) -> Self {
        let mut polys = alloc::vec![Polynomial::zero(); outputs];
        for (o, i, c) in entries {
            polys[o].add_term(Monomial::var(i as u32), c);
        }
        PolyMap::new(inputs, polys)
    }

    /// Each output is a single input variable: `output[k] = x[source[k]]`.
    pub fn selection(inputs: usize, source: &[usize]) -> Self {
        PolyMap::new(inputs, source.iter().map(|&i| Polynomial::var(i as u32)).collect())
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    pub fn outputs(&self) -> &[Polynomial] {
        &self.outputs
    }

    pub fn output_count(&self) -> usize {
        self.outputs.len()
    }

    pub fn into_outputs(self) -> Vec<Polynomial> {
        self.outputs
    }

    pub fn degree(&self) -> usize {
        self.outputs.iter().map(Polynomial::degree).max().unwrap_or(0)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &PolyMap, cap: usize) -> Result<PolyMap, DegreeExceeded> {
        assert_eq!(self.inputs, inner.outputs.len(), "composition arity mismatch");
        let outputs = self
            .outputs
            .iter()
            .map(|p| p.substitute(&inner.outputs, cap))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PolyMap::new(inner.inputs, outputs))
    }

    pub fn add(&self, other: &PolyMap) -> PolyMap {
        assert_eq!(self.inputs, other.inputs);
        assert_eq!(self.outputs.len(), other.outputs.len());
        PolyMap::new(
            self.inputs,
            self.outputs.iter().zip(&other.outputs).map(|(a, b)| a.add(b)).collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> PolyMap {
        PolyMap::new(self.inputs, self.outputs.iter().map(|p| p.scale(c)).collect())
    }

    /// Outputs of `self` followed by those of `other`.
    pub fn concat(&self, other: &PolyMap) -> PolyMap {
        assert_eq!(self.inputs, other.inputs);
        let mut outputs = self.outputs.clone();
        outputs.extend(other.outputs.iter().cloned());
        PolyMap::new(self.inputs, outputs)
    }

    pub fn eval(&self, point: &[Rational]) -> Vec<Rational> {
        assert_eq!(point.len(), self.inputs);
        self.outputs.iter().map(|p| p.eval(point)).collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.outputs.iter().all(Polynomial::is_nonnegative)
    }

    pub fn le_coeffwise(&self, other: &PolyMap) -> bool {
        self.outputs.len() == other.outputs.len()
            && self.outputs.iter().zip(&other.outputs).all(|(a, b)| a.le_coeffwise(b))
    }
}

impl fmt::Display for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.outputs.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use alloc::string::ToString;

    fn x(v: u32) -> Polynomial {
        Polynomial::var(v)
    }

    #[test]
    fn arithmetic_and_display() {
        let p = x(0).mul(&x(0)).mul(&x(1)).scale(&int(2)).add(&x(2).scale(&ratio(1, 3)));
        assert_eq!(p.to_string(), "1/3*x2 + 2*x0^2*x1");
        assert_eq!(p.degree(), 3);
        assert_eq!(p.derivative(0).to_string(), "4*x0*x1");
        assert_eq!(x(0).sub(&x(0)), Polynomial::zero());
        assert_eq!(Polynomial::constant(int(-1)).add(&x(1)).to_string(), "-1 + x1");
    }

    #[test]
    fn substitution_matches_evaluation() {
        // p(x0, x1) = x0^2 x1 + 3, with x0 := y0 + y1, x1 := 2 y1.
        let p = x(0).mul(&x(0)).mul(&x(1)).add(&Polynomial::constant(int(3)));
        let args = [x(0).add(&x(1)), x(1).scale(&int(2))];
        let q = p.substitute(&args, 16).unwrap();
        let point = [ratio(1, 2), ratio(2, 3)];
        let inner: Vec<Rational> = args.iter().map(|a| a.eval(&point)).collect();
        assert_eq!(q.eval(&point), p.eval(&inner));
        assert!(p.substitute(&args, 2).is_err());
    }

    #[test]
    fn coefficientwise_order() {
        let a = x(0).scale(&ratio(1, 2));
        let b = x(0).add(&x(1));
        assert!(a.le_coeffwise(&b));
        assert!(!b.le_coeffwise(&a));
        assert!(Polynomial::zero().le_coeffwise(&a));
        assert!(!Polynomial::zero().le_coeffwise(&a.neg()));
    }
}

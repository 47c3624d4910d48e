//! Sparse multivariate polynomials, used to run the criteria on indeterminate ξ.
//!
//! Variables are addressed by index; names live with the caller.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ring::{Ring, ScalarRing};
use super::Scalar;

/// Exponent vector with trailing zeros trimmed, so equal monomials have equal keys.
type Monomial = Vec<u16>;

#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly<R> {
    terms: BTreeMap<Monomial, R>,
}

/// Polynomials in named indeterminates with [`Scalar`] coefficients.
pub type Symbolic = MultiPoly<Scalar>;

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn mul_monomials(a: &[u16], b: &[u16]) -> Monomial {
    let mut out = vec![0u16; a.len().max(b.len())];
    for (i, e) in a.iter().enumerate() {
        out[i] += e;
    }
    for (i, e) in b.iter().enumerate() {
        out[i] += e;
    }
    out
}

impl<R: Ring> MultiPoly<R> {
    pub fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: R) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(Vec::new(), c);
        p
    }

    /// The variable with index `i`.
    pub fn var(i: usize) -> Self {
        let mut m = vec![0u16; i + 1];
        m[i] = 1;
        let mut p = MultiPoly::zero();
        p.add_term(m, R::one());
        p
    }

    /// `c · Π x_i^{e_i}`.
    pub fn term(c: R, exps: &[u16]) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(exps.to_vec(), c);
        p
    }

    fn add_term(&mut self, m: Monomial, c: R) {
        if c.is_zero() {
            return;
        }
        let m = trim(m);
        match self.terms.remove(&m) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &R)> {
        self.terms.iter().map(|(m, c)| (m.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_empty())
    }

    pub fn constant_term(&self) -> R {
        self.terms.get(&Vec::new()).cloned().unwrap_or_else(R::zero)
    }

    /// The constant value, when the polynomial has no variables.
    pub fn as_constant(&self) -> Option<R> {
        self.is_constant().then(|| self.constant_term())
    }

    pub fn degree_in(&self, var: usize) -> usize {
        self.terms
            .keys()
            .map(|m| m.get(var).copied().unwrap_or(0) as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|m| m.iter().map(|&e| e as usize).sum())
            .max()
            .unwrap_or(0)
    }

    /// True when every monomial has total degree `d`.
    pub fn is_homogeneous(&self, d: usize) -> bool {
        self.terms
            .keys()
            .all(|m| m.iter().map(|&e| e as usize).sum::<usize>() == d)
    }

    /// Coefficients of `x_var^0, x_var^1, …` as polynomials in the other variables.
    pub fn collect_in(&self, var: usize) -> Vec<MultiPoly<R>> {
        let mut out = vec![MultiPoly::zero(); self.degree_in(var) + 1];
        for (m, c) in &self.terms {
            let e = m.get(var).copied().unwrap_or(0) as usize;
            let mut rest = m.clone();
            if var < rest.len() {
                rest[var] = 0;
            }
            out[e].add_term(rest, c.clone());
        }
        out
    }

    /// Replaces variable `var` by `value`.
    pub fn substitute(&self, var: usize, value: &MultiPoly<R>) -> MultiPoly<R> {
        let parts = self.collect_in(var);
        parts
            .into_iter()
            .rev()
            .fold(MultiPoly::zero(), |acc, c| acc * value.clone() + c)
    }

    /// Evaluates at a point; missing trailing coordinates count as zero.
    pub fn eval(&self, point: &[R]) -> R {
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    let x = point.get(i).cloned().unwrap_or_else(R::zero);
                    t = t * x.pow(e as u32);
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Ring homomorphism into another ring, sending `x_i` to `images[i]`.
    pub fn eval_in<S: Ring>(&self, images: &[S], coeff: impl Fn(&R) -> S) -> S {
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut t = coeff(c);
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = t * images[i].pow(e as u32);
                }
            }
            acc = acc + t;
        }
        acc
    }

    pub fn map_coeffs(&self, f: impl Fn(&R) -> R) -> MultiPoly<R> {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }
}

impl Symbolic {
    /// Renders with the given variable names, in a form the expression parser accepts.
    pub fn display_with(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            for (i, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].to_string()),
                    _ => factors.push(format!("{}^{}", names[i], e)),
                }
            }
            let coeff = format!("({c})");
            if factors.is_empty() {
                parts.push(coeff);
            } else if c.is_one() {
                parts.push(factors.join("*"));
            } else {
                parts.push(format!("{coeff}*{}", factors.join("*")));
            }
        }
        parts.join(" + ")
    }
}

impl<R: Ring> Default for MultiPoly<R> {
    fn default() -> Self {
        MultiPoly::zero()
    }
}

impl<R: Ring> Add for MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn add(mut self, rhs: MultiPoly<R>) -> MultiPoly<R> {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<R: Ring> Neg for MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn neg(self) -> MultiPoly<R> {
        MultiPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<R: Ring> Sub for MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn sub(self, rhs: MultiPoly<R>) -> MultiPoly<R> {
        self + (-rhs)
    }
}

impl<R: Ring> Mul for MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn mul(self, rhs: MultiPoly<R>) -> MultiPoly<R> {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(mul_monomials(ma, mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<R: Ring> Ring for MultiPoly<R> {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_i64(v: i64) -> Self {
        MultiPoly::constant(R::from_i64(v))
    }
}

impl ScalarRing for Symbolic {
    fn from_scalar(s: &Scalar) -> Self {
        MultiPoly::constant(s.clone())
    }
    fn to_scalar(&self) -> Option<Scalar> {
        self.as_constant()
    }
    fn scale(&self, s: &Scalar) -> Self {
        self.map_coeffs(|c| c.clone() * s.clone())
    }
}

impl fmt::Display for Symbolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.terms.keys().map(|m| m.len()).max().unwrap_or(0))
            .map(|i| format!("x{}", i + 1))
            .collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        write!(f, "{}", self.display_with(&refs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Symbolic {
        Symbolic::var(i)
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = x(0) * x(1) - x(1) * x(0);
        assert!(p.is_zero());
    }

    #[test]
    fn binomial_square() {
        let s = x(0) + x(1);
        let sq = s.clone() * s;
        assert_eq!(sq.num_terms(), 3);
        assert!(sq.is_homogeneous(2));
        assert_eq!(sq.eval(&[Scalar::int(2), Scalar::int(3)]), Scalar::int(25));
    }

    #[test]
    fn collect_and_substitute() {
        // (x0 + 1)^2 x1 with x0 := x1
        let p = (x(0) + Symbolic::one()).pow(2) * x(1);
        let parts = p.collect_in(0);
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[2], x(1));
        let q = p.substitute(0, &x(1));
        assert_eq!(q.eval(&[Scalar::int(0), Scalar::int(2)]), Scalar::int(18));
    }

    #[test]
    fn display_is_stable() {
        let p = x(0).scale(&Scalar::int(3)) + x(1).pow(2);
        assert_eq!(p.display_with(&["a", "b"]), "(3)*a + b^2");
    }
}

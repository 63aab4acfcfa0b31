//! Sparse multivariate polynomials over a prime field.
//!
//! Coefficients are stored reduced into `[1, p)`; the field characteristic is
//! passed to every arithmetic operation rather than stored per polynomial.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write;

use super::modular::{add_mod, inv_mod, mul_mod, neg_mod, sub_mod};

pub const MAX_VARS: usize = 4;

/// An exponent vector. Unused trailing slots are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: [u32; MAX_VARS],
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(index: usize) -> Self {
        let mut exps = [0; MAX_VARS];
        exps[index] = 1;
        Self { exps }
    }

    pub fn from_exponents(exponents: &[u32]) -> Self {
        assert!(exponents.len() <= MAX_VARS, "too many variables");
        let mut exps = [0; MAX_VARS];
        exps[..exponents.len()].copy_from_slice(exponents);
        Self { exps }
    }

    pub fn exponents(&self) -> &[u32; MAX_VARS] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e += o;
        }
        Self { exps }
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = e.checked_sub(*o)?;
        }
        Some(Self { exps })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut exps = self.exps;
        for e in exps.iter_mut() {
            *e *= k;
        }
        Self { exps }
    }

    /// Drops the variable at `index`, shifting later variables down.
    pub fn remove_var(&self, index: usize) -> Self {
        let mut exps = [0; MAX_VARS];
        let mut j = 0;
        for (i, &e) in self.exps.iter().enumerate() {
            if i != index {
                exps[j] = e;
                j += 1;
            }
        }
        Self { exps }
    }
}

/// Graded lexicographic order: total degree first, then the exponent of the
/// first variable, then the second, and so on.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials in `nvars` variables of total degree at most `d`, ascending
/// in graded-lex order.
pub fn monomials_up_to(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, var: usize, left: u32, cur: &mut [u32; MAX_VARS], out: &mut Vec<Monomial>) {
        if var == nvars {
            out.push(Monomial { exps: *cur });
            return;
        }
        for e in 0..=left {
            cur[var] = e;
            rec(nvars, var + 1, left - e, cur, out);
        }
        cur[var] = 0;
    }
    let mut out = Vec::new();
    rec(nvars, 0, d, &mut [0; MAX_VARS], &mut out);
    out.sort();
    out
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Poly {
    terms: BTreeMap<Monomial, u64>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: u64, p: u64) -> Self {
        Self::monomial(Monomial::one(), c, p)
    }

    pub fn monomial(m: Monomial, c: u64, p: u64) -> Self {
        let mut terms = BTreeMap::new();
        if c % p != 0 {
            terms.insert(m, c % p);
        }
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, u64)>>(terms: I, p: u64) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c, p);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &u64)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> u64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(Monomial, u64)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, *c))
    }

    /// Total degree; `None` stands for the degree of zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_term(&self) -> u64 {
        self.coeff(&Monomial::one())
    }

    pub fn is_monic(&self) -> bool {
        matches!(self.leading(), Some((_, 1)))
    }

    /// Exponent of variable `var` is positive in some term.
    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exponents()[var] > 0)
    }

    fn add_term(&mut self, m: Monomial, c: u64, p: u64) {
        let c = c % p;
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(m).or_insert(0);
        *entry = add_mod(*entry, c, p);
        if *entry == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self, p: u64) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, *c, p);
        }
        out
    }

    pub fn neg(&self, p: u64) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, neg_mod(*c, p))).collect(),
        }
    }

    pub fn sub(&self, other: &Self, p: u64) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, neg_mod(*c, p), p);
        }
        out
    }

    pub fn scale(&self, c: u64, p: u64) -> Self {
        let c = c % p;
        if c == 0 {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, k)| (*m, mul_mod(*k, c, p))).collect(),
        }
    }

    pub fn mul(&self, other: &Self, p: u64) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), mul_mod(*c1, *c2, p), p);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: u64, p: u64) -> Self {
        Self::from_terms(self.terms.iter().map(|(t, k)| (t.mul(m), mul_mod(*k, c, p))), p)
    }

    pub fn pow(&self, mut k: u32, p: u64) -> Self {
        let mut acc = Self::constant(1, p);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base, p);
            }
            base = base.mul(&base, p);
            k >>= 1;
        }
        acc
    }

    /// Splits off the leading coefficient: returns `(lc, monic)` with
    /// `self = lc * monic`. Zero maps to `(0, 0)`.
    pub fn monic(&self, p: u64) -> (u64, Self) {
        match self.leading() {
            None => (0, Self::zero()),
            Some((_, lc)) => {
                let inv = inv_mod(lc, p).expect("nonzero field element is invertible");
                (lc, self.scale(inv, p))
            }
        }
    }

    /// The quotient `self / divisor` when the division is exact, by the
    /// multivariate division algorithm with a single divisor.
    pub fn div_exact(&self, divisor: &Self, p: u64) -> Option<Self> {
        let (lm_b, lc_b) = divisor.leading()?;
        let inv = inv_mod(lc_b, p).expect("nonzero field element is invertible");
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((lm_r, lc_r)) = rem.leading() {
            let m = lm_r.div(&lm_b)?;
            let c = mul_mod(lc_r, inv, p);
            quot.add_term(m, c, p);
            for (t, k) in &divisor.terms {
                rem.add_term(t.mul(&m), sub_mod(0, mul_mod(*k, c, p), p), p);
            }
        }
        Some(quot)
    }

    /// Substitutes zero for variable `var` and removes it from the exponent vectors.
    pub fn eval_var_zero(&self, var: usize) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponents()[var] == 0)
                .map(|(m, c)| (m.remove_var(var), *c))
                .collect(),
        }
    }

    /// Renames variables: source variable `i` becomes target variable `map[i]`.
    pub fn relabel(&self, map: &[usize]) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut exps = [0; MAX_VARS];
                    for (i, &t) in map.iter().enumerate() {
                        exps[t] = m.exponents()[i];
                    }
                    (Monomial { exps }, *c)
                })
                .collect(),
        }
    }

    pub fn format(&self, vars: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if *c != 1 || m.degree() == 0 {
                factors.push(c.to_string());
            }
            for (v, &e) in m.exponents().iter().enumerate().take(vars.len()) {
                match e {
                    0 => {}
                    1 => factors.push(vars[v].clone()),
                    _ => factors.push(format!("{}^{}", vars[v], e)),
                }
            }
            let _ = write!(out, "{}", factors.join("*"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Poly {
        Poly::monomial(Monomial::var(0), 1, 2)
    }
    fn y() -> Poly {
        Poly::monomial(Monomial::var(1), 1, 2)
    }

    #[test]
    fn graded_lex_order() {
        let ms = monomials_up_to(2, 2);
        let vars = ["x".to_string(), "y".to_string()];
        let names: Vec<String> = ms
            .iter()
            .map(|m| Poly::monomial(*m, 1, 2).format(&vars))
            .collect();
        assert_eq!(names, ["1", "y", "x", "y^2", "x*y", "x^2"]);
    }

    #[test]
    fn frobenius_in_characteristic_two() {
        let s = x().add(&y(), 2);
        let sq = s.mul(&s, 2);
        assert_eq!(sq, x().mul(&x(), 2).add(&y().mul(&y(), 2), 2));
    }

    #[test]
    fn exact_division() {
        let one = Poly::constant(1, 2);
        let a = x().mul(&x(), 2).mul(&y(), 2).add(&x(), 2);
        let q = a.div_exact(&x(), 2).unwrap();
        assert_eq!(q, x().mul(&y(), 2).add(&one, 2));
        assert_eq!(a.div_exact(&y(), 2), None);
    }

    #[test]
    fn degree_of_mixed_terms() {
        let f = x()
            .mul(&y(), 2)
            .add(&x().pow(3, 2), 2)
            .add(&y().pow(3, 2), 2)
            .add(&x().pow(2, 2).mul(&y().pow(2, 2), 2), 2);
        assert_eq!(f.degree(), Some(4));
        assert_eq!(Poly::zero().degree(), None);
    }
}

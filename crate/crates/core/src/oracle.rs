//! Brute-force reference implementations.
//!
//! Everything here works on explicitly enumerated elements and depends only
//! on the `rings` module, so agreement with the linear-algebra engine is an
//! independent check. Elements of a finite universe are encoded by index:
//! ring elements use [`RingSpec::index_of`], and a polynomial of degree at
//! most `d` is the base-`p` number whose digit `i` is the coefficient of the
//! `i`-th monomial in ascending graded-lex order. Index 0 is always zero.
//! Subgroups are returned as sorted index lists.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rings::mulset::MultSet;
use crate::rings::poly::{monomials_up_to, Monomial, Poly};
use crate::rings::{magnitude, PolyRing, RingElement, RingSpec};

/// Limits on exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    /// Largest ambient dimension over GF(2).
    pub max_dim_gf2: usize,
    /// Largest ambient dimension over any other prime field.
    pub max_dim_other: usize,
    pub max_ring_size: u64,
    /// Bound on (number of subgroups) × (universe size).
    pub max_candidates: u64,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        Self { max_dim_gf2: 6, max_dim_other: 4, max_ring_size: 64, max_candidates: 1 << 24 }
    }
}

/// Largest universe the closure oracle will materialize.
pub const MAX_UNIVERSE: usize = 1 << 22;

/// A finite set of ring elements with index encoding.
#[derive(Clone, Debug)]
pub enum Universe {
    Poly { ring: PolyRing, d: u32, monomials: Vec<Monomial>, size: usize },
    Finite { ring: RingSpec, size: usize },
}

impl Universe {
    /// All polynomials of degree at most `d`.
    pub fn polynomials(ring: &PolyRing, d: u32) -> Result<Self> {
        let monomials = monomials_up_to(ring.nvars(), d);
        let size = (ring.characteristic() as u128)
            .checked_pow(monomials.len() as u32)
            .filter(|s| *s <= MAX_UNIVERSE as u128)
            .ok_or_else(|| Error::Budget(format!("degree {d} universe over {} is too large", ring.spec())))?;
        Ok(Universe::Poly { ring: ring.clone(), d, monomials, size: size as usize })
    }

    pub fn finite(ring: &RingSpec) -> Result<Self> {
        let size = ring
            .size()
            .ok_or_else(|| Error::Infinite(format!("{ring} is infinite")))?;
        if size > MAX_UNIVERSE as u64 {
            return Err(Error::Budget(format!("{ring} has {size} elements")));
        }
        Ok(Universe::Finite { ring: ring.clone(), size: size as usize })
    }

    /// Polynomials of degree at most `bound`, or the whole finite ring.
    pub fn new(ring: &RingSpec, bound: u32) -> Result<Self> {
        match ring {
            RingSpec::Poly(r) => Self::polynomials(r, bound),
            _ => Self::finite(ring),
        }
    }

    pub fn ring(&self) -> RingSpec {
        match self {
            Universe::Poly { ring, .. } => ring.spec(),
            Universe::Finite { ring, .. } => ring.clone(),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Universe::Poly { size, .. } | Universe::Finite { size, .. } => *size,
        }
    }

    fn p(&self) -> u64 {
        match self {
            Universe::Poly { ring, .. } => ring.characteristic(),
            Universe::Finite { .. } => 0,
        }
    }

    pub fn poly(&self, i: usize) -> Poly {
        let Universe::Poly { ring, monomials, .. } = self else {
            panic!("not a polynomial universe");
        };
        let p = ring.characteristic() as usize;
        let mut rest = i;
        let mut terms = Vec::new();
        for m in monomials {
            terms.push((*m, (rest % p) as u64));
            rest /= p;
        }
        Poly::from_terms(terms, p as u64)
    }

    pub fn element(&self, i: usize) -> RingElement {
        match self {
            Universe::Poly { .. } => RingElement::Poly(self.poly(i)),
            Universe::Finite { ring, .. } => ring.element_at(i as u64),
        }
    }

    /// Index of a polynomial, or `None` when its degree exceeds the bound.
    pub fn poly_index(&self, f: &Poly) -> Option<usize> {
        let Universe::Poly { ring, d, monomials, .. } = self else {
            panic!("not a polynomial universe");
        };
        if f.degree().is_some_and(|e| e > *d) {
            return None;
        }
        let p = ring.characteristic() as usize;
        let mut idx = 0;
        for m in monomials.iter().rev() {
            idx = idx * p + f.coeff(m) as usize;
        }
        Some(idx)
    }

    pub fn index(&self, e: &RingElement) -> Option<usize> {
        match (self, e) {
            (Universe::Poly { .. }, RingElement::Poly(f)) => self.poly_index(f),
            (Universe::Finite { ring, .. }, _) => Some(ring.index_of(e) as usize),
            _ => None,
        }
    }

    fn add(&self, i: usize, j: usize) -> usize {
        match self {
            Universe::Poly { .. } => {
                let (p, mut a, mut b) = (self.p() as usize, i, j);
                if p == 2 {
                    return i ^ j;
                }
                let (mut out, mut place) = (0, 1);
                while a > 0 || b > 0 {
                    out += ((a % p + b % p) % p) * place;
                    place *= p;
                    a /= p;
                    b /= p;
                }
                out
            }
            Universe::Finite { ring, .. } => {
                let s = ring.add(&self.element(i), &self.element(j)).expect("same ring");
                ring.index_of(&s) as usize
            }
        }
    }

    fn mul(&self, i: usize, j: usize) -> Option<usize> {
        match self {
            Universe::Poly { .. } => self.poly_index(&self.poly(i).mul(&self.poly(j), self.p())),
            Universe::Finite { ring, .. } => {
                let s = ring.mul(&self.element(i), &self.element(j)).expect("same ring");
                Some(ring.index_of(&s) as usize)
            }
        }
    }

    /// Indices of the nonzero elements lying in `W`.
    fn multipliers(&self, w: &MultSet) -> Vec<usize> {
        (1..self.size()).filter(|&i| w.contains(&self.element(i))).collect()
    }

    fn check_budget(&self, budget: &EnumerationBudget) -> Result<()> {
        match self {
            Universe::Poly { ring, monomials, .. } => {
                let dim = monomials.len();
                let cap = if ring.characteristic() == 2 { budget.max_dim_gf2 } else { budget.max_dim_other };
                if dim > cap {
                    return Err(Error::Budget(format!("ambient dimension {dim} exceeds {cap}")));
                }
                let count = subspace_count(ring.characteristic(), dim);
                if count.saturating_mul(self.size() as u128) > budget.max_candidates as u128 {
                    return Err(Error::Budget(format!("{count} subspaces exceed the candidate budget")));
                }
            }
            Universe::Finite { size, .. } => {
                if *size as u64 > budget.max_ring_size {
                    return Err(Error::Budget(format!("ring size {size} exceeds {}", budget.max_ring_size)));
                }
            }
        }
        Ok(())
    }

    pub fn elements_of(&self, set: &[usize]) -> Vec<RingElement> {
        set.iter().map(|&i| self.element(i)).collect()
    }
}

/// Number of subspaces of `F_p^n`, the sum of the Gaussian binomials.
pub fn subspace_count(p: u64, n: usize) -> u128 {
    let q = p as u128;
    let mut total = 0u128;
    for k in 0..=n {
        let (mut num, mut den) = (1u128, 1u128);
        for i in 0..k {
            num = num.saturating_mul(q.saturating_pow((n - i) as u32) - 1);
            den = den.saturating_mul(q.saturating_pow((i + 1) as u32) - 1);
        }
        total = total.saturating_add(num / den);
    }
    total
}

/// A subgroup as a membership table plus its members.
#[derive(Clone)]
struct Group {
    member: Vec<bool>,
    list: Vec<usize>,
}

impl Group {
    fn zero(size: usize) -> Self {
        let mut member = vec![false; size];
        member[0] = true;
        Self { member, list: vec![0] }
    }

    /// Adjoins `g`: the union of the cosets `H + kg`.
    fn adjoin(&mut self, u: &Universe, g: usize) -> bool {
        if self.member[g] {
            return false;
        }
        let base = self.list.clone();
        let mut shift = g;
        while !self.member[shift] {
            for &h in &base {
                let s = u.add(h, shift);
                self.member[s] = true;
                self.list.push(s);
            }
            shift = u.add(shift, g);
        }
        true
    }

    fn sorted(&self) -> Vec<usize> {
        let mut v = self.list.clone();
        v.sort_unstable();
        v
    }
}

fn canonical_order(sets: &mut [Vec<usize>]) {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
}

/// Every additive subgroup of the universe, ordered by size and then by
/// the sorted index lists.
pub fn enumerate_subgroups(u: &Universe, budget: &EnumerationBudget) -> Result<Vec<Vec<usize>>> {
    u.check_budget(budget)?;
    let start = Group::zero(u.size());
    let mut seen: HashSet<Vec<usize>> = HashSet::from([start.sorted()]);
    let mut queue = VecDeque::from([start]);
    while let Some(h) = queue.pop_front() {
        for g in 0..u.size() {
            if h.member[g] {
                continue;
            }
            let mut next = h.clone();
            next.adjoin(u, g);
            if seen.insert(next.sorted()) {
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = seen.into_iter().collect();
    canonical_order(&mut out);
    Ok(out)
}

/// Whether no `w ∈ W` and `x ∉ H` have `wx ∈ H`, checked element by element.
fn saturated(h: &[bool], table: &[Vec<Option<usize>>]) -> bool {
    table.iter().all(|row| {
        row.iter()
            .enumerate()
            .all(|(x, wx)| h[x] || !wx.is_some_and(|j| h[j]))
    })
}

fn product_table(u: &Universe, w: &MultSet) -> Vec<Vec<Option<usize>>> {
    u.multipliers(w)
        .into_iter()
        .map(|wi| (0..u.size()).map(|x| u.mul(wi, x)).collect())
        .collect()
}

/// The subgroups that are `W`-factroids, in the order of [`enumerate_subgroups`].
pub fn enumerate_factroids(u: &Universe, w: &MultSet, budget: &EnumerationBudget) -> Result<Vec<Vec<usize>>> {
    let subgroups = enumerate_subgroups(u, budget)?;
    let table = product_table(u, w);
    Ok(subgroups
        .into_iter()
        .filter(|s| {
            let mut h = vec![false; u.size()];
            s.iter().for_each(|&i| h[i] = true);
            saturated(&h, &table)
        })
        .collect())
}

/// Whether an explicit subgroup is a `W`-factroid inside the universe.
pub fn is_factroid_set(u: &Universe, set: &[usize], w: &MultSet) -> bool {
    let mut h = vec![false; u.size()];
    set.iter().for_each(|&i| h[i] = true);
    saturated(&h, &product_table(u, w))
}

/// Iterates "adjoin every `x` with `wx` in the set, then close under
/// addition" until nothing changes. Only multipliers inside the universe are
/// used; over a polynomial ring the universe must contain the generators.
pub fn naive_closure(u: &Universe, s: &[RingElement], w: &MultSet) -> Result<Vec<usize>> {
    let mut h = Group::zero(u.size());
    for g in s {
        let i = u
            .index(g)
            .ok_or_else(|| Error::InvalidArgument(format!("generator {} lies outside the universe", u.ring().format(g))))?;
        h.adjoin(u, i);
    }
    let ws = u.multipliers(w);
    match u {
        Universe::Poly { ring, .. } => {
            let p = ring.characteristic();
            let wpolys: Vec<Poly> = ws.iter().map(|&i| u.poly(i)).collect();
            // Preimages of an element never change, so each member is divided once.
            let mut done = 0;
            while done < h.list.len() {
                let batch: Vec<usize> = h.list[done..].to_vec();
                done = h.list.len();
                for y in batch {
                    let yp = u.poly(y);
                    let Some(dy) = yp.degree() else { continue };
                    for wp in &wpolys {
                        if wp.degree().is_some_and(|dw| dw > dy) {
                            continue;
                        }
                        if let Some(x) = yp.div_exact(wp, p) {
                            let xi = u.poly_index(&x).expect("quotient degree is at most the dividend's");
                            h.adjoin(u, xi);
                        }
                    }
                }
            }
        }
        Universe::Finite { .. } => {
            let table: Vec<Vec<Option<usize>>> =
                ws.iter().map(|&wi| (0..u.size()).map(|x| u.mul(wi, x)).collect()).collect();
            loop {
                let mut grew = false;
                for row in &table {
                    for (x, wx) in row.iter().enumerate() {
                        if wx.is_some_and(|j| h.member[j]) && h.adjoin(u, x) {
                            grew = true;
                        }
                    }
                }
                if !grew {
                    break;
                }
            }
        }
    }
    Ok(h.sorted())
}

/// The closure of `gZ` by literal iteration: each pass replaces the
/// generator `h` by `h / gcd(h, w)` for every `w ∈ W` with
/// `|w| ≤ max(|g|, 100)`.
pub fn naive_closure_int(g: &num_bigint::BigInt, w: &MultSet) -> Result<BigUint> {
    if w.ring() != &RingSpec::Integers {
        return Err(Error::RingMismatch(format!("{} is not Z", w.ring())));
    }
    let mut h = magnitude(g);
    if h.is_zero() {
        return Ok(h);
    }
    let scan = h.clone().max(BigUint::from(100u32));
    let scan = u64::try_from(&scan).map_err(|_| Error::Budget(format!("scan bound {scan} is too large")))?;
    if scan > 1 << 24 {
        return Err(Error::Budget(format!("scan bound {scan} is too large")));
    }
    let ws: Vec<BigUint> = (1..=scan)
        .filter(|&v| {
            let v = v as i64;
            w.contains(&RingElement::int(v)) || w.contains(&RingElement::int(-v))
        })
        .map(BigUint::from)
        .collect();
    loop {
        let before = h.clone();
        for wv in &ws {
            let d = h.gcd(wv);
            if !d.is_one() {
                h /= d;
            }
        }
        if h == before {
            return Ok(h);
        }
    }
}

/// One case of the exhaustive check on `f + u`.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitCase {
    pub u: Poly,
    pub irreducible: bool,
    /// A factorization of `f + u` into nonconstant elements of the span.
    pub factors: Option<Vec<Poly>>,
}

impl SplitCase {
    pub fn ok(&self) -> bool {
        self.irreducible || self.factors.is_some()
    }
}

/// For every `u` in the span of `gens`, decides whether `f + u` is
/// irreducible or a product of elements of that span.
pub fn irreducible_or_splits(ring: &PolyRing, f: &Poly, gens: &[Poly]) -> Result<Vec<SplitCase>> {
    let p = ring.characteristic();
    let mut span: Vec<Poly> = vec![Poly::zero()];
    for g in gens {
        if span.contains(g) {
            continue;
        }
        let mut next = Vec::with_capacity(span.len() * p as usize);
        for c in 0..p {
            for s in &span {
                next.push(s.add(&g.scale(c, p), p));
            }
        }
        span = next;
    }
    span.sort();
    span.dedup();
    let factors_pool: Vec<Poly> = span.iter().filter(|q| !q.is_constant()).cloned().collect();
    let divisor_degree = f.degree().unwrap_or(0) / 2 + 1;
    let divisors = Universe::polynomials(ring, divisor_degree)?;
    let candidates: Vec<Poly> = (1..divisors.size())
        .map(|i| divisors.poly(i))
        .filter(|q| !q.is_constant())
        .collect();
    let mut memo: HashMap<Poly, Option<Vec<Poly>>> = HashMap::new();
    let mut out = Vec::with_capacity(span.len());
    for u in &span {
        let g = f.add(u, p);
        let dg = g.degree().unwrap_or(0);
        let irreducible = dg > 0
            && !candidates
                .iter()
                .any(|q| q.degree().is_some_and(|dq| 2 * dq <= dg) && g.div_exact(q, p).is_some());
        let factors = split(&g, &span, &factors_pool, p, &mut memo);
        out.push(SplitCase { u: u.clone(), irreducible, factors });
    }
    Ok(out)
}

fn split(g: &Poly, span: &[Poly], pool: &[Poly], p: u64, memo: &mut HashMap<Poly, Option<Vec<Poly>>>) -> Option<Vec<Poly>> {
    if !g.is_constant() && span.binary_search(g).is_ok() {
        return Some(vec![g.clone()]);
    }
    if let Some(known) = memo.get(g) {
        return known.clone();
    }
    let dg = g.degree().unwrap_or(0);
    let mut found = None;
    for q in pool {
        if q.degree().is_some_and(|dq| dq < dg) {
            if let Some(rest) = g.div_exact(q, p) {
                if rest.is_constant() {
                    continue;
                }
                if let Some(mut tail) = split(&rest, span, pool, p, memo) {
                    tail.insert(0, q.clone());
                    found = Some(tail);
                    break;
                }
            }
        }
    }
    memo.insert(g.clone(), found.clone());
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::parse::{parse_element, parse_element_list, parse_ring};

    fn poly_ring(s: &str) -> (RingSpec, PolyRing) {
        let r = parse_ring(s).unwrap();
        let pr = r.as_poly_ring().unwrap().clone();
        (r, pr)
    }

    #[test]
    fn index_round_trip() {
        let (r, pr) = poly_ring("GF(3)[x,y]");
        let u = Universe::polynomials(&pr, 2).unwrap();
        assert_eq!(u.size(), 729);
        for i in [0, 1, 5, 100, 728] {
            assert_eq!(u.index(&u.element(i)), Some(i));
        }
        let f = parse_element(&r, "2*x*y + y + 1").unwrap();
        assert_eq!(u.element(u.index(&f).unwrap()), f);
        assert_eq!(u.add(u.index(&f).unwrap(), u.index(&f).unwrap()), u.index(&r.scalar_mul(2, &f).unwrap()).unwrap());
    }

    #[test]
    fn subgroup_counts() {
        let b = EnumerationBudget::default();
        let (_, pr) = poly_ring("GF(2)[x]");
        assert_eq!(enumerate_subgroups(&Universe::polynomials(&pr, 1).unwrap(), &b).unwrap().len(), 5);
        assert_eq!(enumerate_subgroups(&Universe::finite(&parse_ring("Z/6").unwrap()).unwrap(), &b).unwrap().len(), 4);
        assert_eq!(enumerate_subgroups(&Universe::finite(&parse_ring("GF(3)").unwrap()).unwrap(), &b).unwrap().len(), 2);
        let u = Universe::polynomials(&pr, 5).unwrap();
        assert_eq!(enumerate_subgroups(&u, &b).unwrap().len() as u128, subspace_count(2, 6));
        assert_eq!(subspace_count(2, 6), 2825);
        assert!(enumerate_subgroups(&Universe::polynomials(&pr, 6).unwrap(), &b).is_err());
    }

    #[test]
    fn factroid_counts() {
        let b = EnumerationBudget::default();
        let (r, pr) = poly_ring("GF(2)[x]");
        let fs = enumerate_factroids(&Universe::polynomials(&pr, 3).unwrap(), &MultSet::reg(&r), &b).unwrap();
        assert_eq!(fs.iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 2, 4, 8, 16]);
        let f2 = parse_ring("(GF(2))x(GF(2))").unwrap();
        assert_eq!(enumerate_factroids(&Universe::finite(&f2).unwrap(), &MultSet::reg(&f2), &b).unwrap().len(), 5);
        let f32 = parse_ring("(GF(3))x(GF(2))").unwrap();
        assert_eq!(enumerate_factroids(&Universe::finite(&f32).unwrap(), &MultSet::reg(&f32), &b).unwrap().len(), 4);
    }

    #[test]
    fn closures() {
        let (r, pr) = poly_ring("GF(2)[x]");
        let u = Universe::polynomials(&pr, 2).unwrap();
        let c = naive_closure(&u, &parse_element_list(&r, "x^2").unwrap(), &MultSet::reg(&r)).unwrap();
        assert_eq!(c.len(), 8);
        assert_eq!(naive_closure(&u, &[], &MultSet::reg(&r)).unwrap(), vec![0]);
        let z12 = parse_ring("Z/12").unwrap();
        let u = Universe::finite(&z12).unwrap();
        let c = naive_closure(&u, &[RingElement::Mod(4)], &MultSet::reg(&z12)).unwrap();
        assert_eq!(c, vec![0, 4, 8]);
    }

    #[test]
    fn quartic_closure_has_64_elements() {
        let (r, pr) = poly_ring("GF(2)[x,y]");
        let f = parse_element(&r, "(x+y^2)*(y+x^2)").unwrap();
        let u = Universe::polynomials(&pr, 4).unwrap();
        let c = naive_closure(&u, std::slice::from_ref(&f), &MultSet::reg(&r)).unwrap();
        assert_eq!(c.len(), 64);
        let expected = parse_element_list(&r, "1; x; y; x^2; y^2").unwrap();
        assert!(expected.iter().all(|e| c.binary_search(&u.index(e).unwrap()).is_ok()));
        assert!(c.binary_search(&u.index(&parse_element(&r, "x*y").unwrap()).unwrap()).is_err());
    }

    #[test]
    fn quartic_split_check() {
        let (r, pr) = poly_ring("GF(2)[x,y]");
        let f = parse_element(&r, "(x+y^2)*(y+x^2)").unwrap();
        let gens: Vec<Poly> = parse_element_list(&r, "1; x; y; x^2; y^2")
            .unwrap()
            .into_iter()
            .map(|e| e.as_poly().unwrap().clone())
            .collect();
        let cases = irreducible_or_splits(&pr, f.as_poly().unwrap(), &gens).unwrap();
        assert_eq!(cases.len(), 32);
        assert!(cases.iter().all(SplitCase::ok));
        let zero = cases.iter().find(|c| c.u.is_zero()).unwrap();
        assert!(!zero.irreducible);
        assert_eq!(zero.factors.as_ref().unwrap().len(), 2);
    }

    #[test]
    fn integer_iteration() {
        let z = RingSpec::Integers;
        let g = |v: i64| num_bigint::BigInt::from(v);
        assert_eq!(naive_closure_int(&g(84), &MultSet::parse(&z, "gen:{2,3}").unwrap()).unwrap(), BigUint::from(7u32));
        assert_eq!(naive_closure_int(&g(84), &MultSet::reg(&z)).unwrap(), BigUint::one());
        assert_eq!(naive_closure_int(&g(84), &MultSet::units(&z)).unwrap(), BigUint::from(84u32));
        assert_eq!(naive_closure_int(&g(0), &MultSet::reg(&z)).unwrap(), BigUint::zero());
    }
}

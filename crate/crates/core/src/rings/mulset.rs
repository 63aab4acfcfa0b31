//! Multiplicative subsets of the roster rings.
//!
//! A factroid condition only depends on the monoid generated by a set, so
//! [`MultSet::contains`] answers membership in that monoid. For an explicit
//! list the literal members are still available through
//! [`MultSet::contains_literal`].

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::hom::RingHom;
use super::modular::{gcd, is_prime, mul_mod};
use super::parse::{parse_element, split_top_level};
use super::poly::{monomials_up_to, Poly};
use super::{magnitude, RingElement, RingSpec, MAX_ENUMERATION};
use crate::error::{Error, Result};

/// Upper bound on enumerated monic polynomials or kernel elements.
pub const MAX_CANDIDATES: u64 = 1 << 24;

/// Largest integer whose prime factorization is attempted by trial division.
const MAX_FACTOR: u64 = 1 << 50;

#[derive(Clone, Debug)]
pub enum MultSetSpec {
    /// The nonzerodivisors.
    Reg,
    Units,
    /// The monoid generated by the listed elements.
    MonoidGen(Vec<RingElement>),
    /// Nonzero polynomials of even degree in a univariate ring.
    EvenDegreeNonzero,
    /// Elements outside every listed prime ideal, given by generators.
    ComplementOfIdeals(Vec<RingElement>),
    ExplicitFinite(Vec<RingElement>),
    /// `{w : hom(w) ∈ target}`.
    Preimage(RingHom, Box<MultSet>),
}

#[derive(Clone, Debug)]
pub struct MultSet {
    ring: RingSpec,
    spec: MultSetSpec,
    /// Monoid membership and associate membership by element index (finite rings).
    table: Option<Arc<(Vec<bool>, Vec<bool>)>>,
    /// Scalar subgroup generated by constant generators (polynomial `MonoidGen`).
    scalars: Option<Arc<BTreeSet<u64>>>,
    /// Primes of a `ComplementOfIdeals` over `Z` or `Z/n`.
    primes: Vec<u64>,
}

impl MultSet {
    pub fn new(ring: &RingSpec, spec: MultSetSpec) -> Result<Self> {
        let mut set = MultSet {
            ring: ring.clone(),
            spec,
            table: None,
            scalars: None,
            primes: Vec::new(),
        };
        set.validate()?;
        if ring.is_finite() {
            set.build_table()?;
            let (members, _) = set.table.as_deref().expect("just built");
            if members[ring.index_of(&ring.zero()) as usize] {
                return Err(Error::InvalidMultSet("the set contains 0 (every subgroup would be forced to be the whole module)".into()));
            }
        }
        Ok(set)
    }

    pub fn reg(ring: &RingSpec) -> Self {
        Self::new(ring, MultSetSpec::Reg).expect("reg never contains 0")
    }

    pub fn units(ring: &RingSpec) -> Self {
        Self::new(ring, MultSetSpec::Units).expect("units never contain 0")
    }

    pub fn generated(ring: &RingSpec, gens: Vec<RingElement>) -> Result<Self> {
        Self::new(ring, MultSetSpec::MonoidGen(gens))
    }

    /// `hom^{-1}(target)` as a multiplicative set of the source ring.
    pub fn preimage(hom: &RingHom, target: &MultSet) -> Result<Self> {
        if hom.target() != target.ring {
            return Err(Error::RingMismatch(format!(
                "multiplicative set lives in {}, map lands in {}",
                target.ring,
                hom.target()
            )));
        }
        Self::new(&hom.source(), MultSetSpec::Preimage(hom.clone(), Box::new(target.clone())))
    }

    /// Parses `reg`, `units`, `evendeg`, `gen:{..}`, `explicit:{..}` or `compl:{..}`.
    pub fn parse(ring: &RingSpec, text: &str) -> Result<Self> {
        let t = text.trim();
        let spec = match t {
            "reg" => MultSetSpec::Reg,
            "units" => MultSetSpec::Units,
            "evendeg" => MultSetSpec::EvenDegreeNonzero,
            _ => {
                let (tag, body) = t
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("unrecognized multiplicative set {t:?}")))?;
                let body = body
                    .trim()
                    .strip_prefix('{')
                    .and_then(|b| b.strip_suffix('}'))
                    .ok_or_else(|| Error::Parse(format!("expected {{...}} after {tag}:")))?;
                let elems = split_top_level(body)
                    .into_iter()
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| parse_element(ring, s))
                    .collect::<Result<Vec<_>>>()?;
                match tag.trim() {
                    "gen" => MultSetSpec::MonoidGen(elems),
                    "explicit" => MultSetSpec::ExplicitFinite(elems),
                    "compl" => MultSetSpec::ComplementOfIdeals(elems),
                    other => return Err(Error::Parse(format!("unknown multiplicative set tag {other:?}"))),
                }
            }
        };
        Self::new(ring, spec)
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn spec(&self) -> &MultSetSpec {
        &self.spec
    }

    pub fn is_reg(&self) -> bool {
        matches!(self.spec, MultSetSpec::Reg)
    }

    pub fn is_units(&self) -> bool {
        matches!(self.spec, MultSetSpec::Units)
    }

    fn validate(&mut self) -> Result<()> {
        let ring = self.ring.clone();
        match &self.spec {
            MultSetSpec::Reg | MultSetSpec::Units => Ok(()),
            MultSetSpec::EvenDegreeNonzero => match ring.as_poly_ring() {
                Some(r) if r.nvars() == 1 => Ok(()),
                _ => Err(Error::InvalidMultSet("evendeg needs a univariate polynomial ring".into())),
            },
            MultSetSpec::MonoidGen(gens) | MultSetSpec::ExplicitFinite(gens) => {
                for g in gens {
                    ring.check(g)?;
                }
                if let (RingSpec::Product(..), false) = (&ring, ring.is_finite()) {
                    return Err(Error::Unsupported(
                        "generated multiplicative sets of products with an infinite factor".into(),
                    ));
                }
                if ring.is_domain() && gens.iter().any(|g| ring.is_zero(g)) {
                    return Err(Error::InvalidMultSet("0 is listed as a member".into()));
                }
                if let RingSpec::Poly(r) = &ring {
                    let p = r.characteristic();
                    let consts: Vec<u64> = gens
                        .iter()
                        .filter_map(|g| g.as_poly().filter(|f| f.is_constant()).map(Poly::constant_term))
                        .collect();
                    self.scalars = Some(Arc::new(scalar_subgroup(&consts, p)?));
                }
                Ok(())
            }
            MultSetSpec::ComplementOfIdeals(gens) => {
                if gens.is_empty() {
                    return Err(Error::InvalidMultSet(
                        "the complement of no ideals is the whole ring, which contains 0".into(),
                    ));
                }
                let mut primes = Vec::new();
                for g in gens {
                    ring.check(g)?;
                    let q = match (&ring, g) {
                        (RingSpec::Integers, RingElement::Int(v)) => {
                            magnitude(v).to_u64().filter(|q| is_prime(*q))
                        }
                        (RingSpec::IntegersMod(n), RingElement::Mod(v)) => Some(gcd(*v, *n)).filter(|q| is_prime(*q)),
                        _ => {
                            return Err(Error::Unsupported(format!(
                                "complements of ideals are supported over Z and Z/n, not {ring}"
                            )))
                        }
                    };
                    let q = q.ok_or_else(|| {
                        Error::InvalidMultSet(format!("{} does not generate a prime ideal of {ring}", ring.format(g)))
                    })?;
                    if !primes.contains(&q) {
                        primes.push(q);
                    }
                }
                primes.sort_unstable();
                self.primes = primes;
                Ok(())
            }
            MultSetSpec::Preimage(hom, target) => {
                if hom.source() != ring || hom.target() != *target.ring() {
                    return Err(Error::RingMismatch("preimage set does not match the map".into()));
                }
                Ok(())
            }
        }
    }

    fn build_table(&mut self) -> Result<()> {
        let ring = &self.ring;
        let size = ring.size().expect("finite");
        if size > MAX_ENUMERATION {
            return Err(Error::Budget(format!("{ring} is too large to tabulate a multiplicative set")));
        }
        let elems = ring.elements()?;
        let mut members = vec![false; size as usize];
        match &self.spec {
            MultSetSpec::MonoidGen(gens) | MultSetSpec::ExplicitFinite(gens) => {
                let one = ring.index_of(&ring.one()) as usize;
                members[one] = true;
                let mut stack = vec![one];
                while let Some(i) = stack.pop() {
                    for g in gens {
                        let j = ring.index_of(&ring.mul(&elems[i], g)?) as usize;
                        if !members[j] {
                            members[j] = true;
                            stack.push(j);
                        }
                    }
                }
            }
            _ => {
                for (i, e) in elems.iter().enumerate() {
                    members[i] = self.direct_contains(e)?;
                }
            }
        }
        let units = ring.units()?;
        let assoc = elems
            .iter()
            .map(|e| {
                units
                    .iter()
                    .any(|u| members[ring.index_of(&ring.mul(u, e).expect("same ring")) as usize])
            })
            .collect();
        self.table = Some(Arc::new((members, assoc)));
        Ok(())
    }

    /// Membership computed from the description, without tables.
    fn direct_contains(&self, w: &RingElement) -> Result<bool> {
        let ring = &self.ring;
        Ok(match &self.spec {
            MultSetSpec::Reg => ring.is_regular(w),
            MultSetSpec::Units => ring.is_unit(w),
            MultSetSpec::EvenDegreeNonzero => w.as_poly().and_then(Poly::degree).is_some_and(|d| d % 2 == 0),
            MultSetSpec::ComplementOfIdeals(_) => match w {
                RingElement::Int(v) => !v.is_zero() && self.primes.iter().all(|q| !(v % q).is_zero()),
                RingElement::Mod(v) => self.primes.iter().all(|q| v % q != 0),
                _ => false,
            },
            MultSetSpec::MonoidGen(gens) | MultSetSpec::ExplicitFinite(gens) => match (ring, w) {
                (RingSpec::Integers, RingElement::Int(v)) => int_monoid_contains(gens, v),
                (RingSpec::Poly(r), RingElement::Poly(f)) => {
                    let scalars = self.scalars.as_deref().expect("built for polynomial rings");
                    poly_monoid_contains(gens, f, r.characteristic(), |c| scalars.contains(&c))
                }
                _ => return Err(Error::Unsupported(format!("monoid membership in {ring}"))),
            },
            MultSetSpec::Preimage(hom, target) => target.contains(&hom.apply(w)?),
        })
    }

    /// Membership in the monoid generated by the set.
    pub fn contains(&self, w: &RingElement) -> bool {
        if self.ring.check(w).is_err() {
            return false;
        }
        if let Some(t) = &self.table {
            return t.0[self.ring.index_of(w) as usize];
        }
        self.direct_contains(w).unwrap_or(false)
    }

    /// Membership in the listed set itself; differs from [`contains`](Self::contains)
    /// only for explicit lists.
    pub fn contains_literal(&self, w: &RingElement) -> bool {
        match &self.spec {
            MultSetSpec::ExplicitFinite(list) => list.contains(w),
            _ => self.contains(w),
        }
    }

    /// Some associate of `m` (a unit multiple) lies in the set.
    pub fn contains_associate(&self, m: &RingElement) -> bool {
        if self.ring.check(m).is_err() {
            return false;
        }
        if let Some(t) = &self.table {
            return t.1[self.ring.index_of(m) as usize];
        }
        match (&self.ring, m) {
            (RingSpec::Integers, RingElement::Int(v)) => {
                self.contains(m) || self.contains(&RingElement::Int(-v))
            }
            (RingSpec::Poly(r), RingElement::Poly(f)) => match &self.spec {
                MultSetSpec::Reg | MultSetSpec::EvenDegreeNonzero => self.contains(m),
                MultSetSpec::Units => f.degree() == Some(0),
                MultSetSpec::MonoidGen(gens) | MultSetSpec::ExplicitFinite(gens) => {
                    poly_monoid_contains(gens, f, r.characteristic(), |c| c != 0)
                }
                MultSetSpec::Preimage(hom, target) => {
                    hom.apply(m).is_ok_and(|img| target.contains_associate(&img))
                }
                MultSetSpec::ComplementOfIdeals(_) => false,
            },
            _ => self.contains(m),
        }
    }

    /// Monoid members of a finite ring, in index order.
    pub fn members(&self) -> Result<Vec<RingElement>> {
        let t = self
            .table
            .as_ref()
            .ok_or_else(|| Error::Infinite(format!("{} is infinite", self.ring)))?;
        Ok(t.0
            .iter()
            .enumerate()
            .filter(|(_, m)| **m)
            .map(|(i, _)| self.ring.element_at(i as u64))
            .collect())
    }

    /// Monic polynomials of degree at most `d` with an associate in the set,
    /// by degree and then graded-lex order.
    pub fn enumerate_monic_up_to(&self, d: u32) -> Result<Vec<Poly>> {
        let r = self
            .ring
            .as_poly_ring()
            .ok_or_else(|| Error::Unsupported(format!("{} is not graded", self.ring)))?;
        let all = monic_polys_up_to(r.nvars(), r.characteristic(), d)?;
        Ok(all
            .into_iter()
            .filter(|f| self.contains_associate(&RingElement::Poly(f.clone())))
            .collect())
    }

    /// Over `Z`: whether some member is divisible by the prime `q`. Stripping
    /// such primes is exactly what saturation does to a cyclic subgroup.
    pub fn strippable(&self, q: u64) -> Result<bool> {
        if self.ring != RingSpec::Integers {
            return Err(Error::Unsupported("prime stripping is specific to Z".into()));
        }
        Ok(match &self.spec {
            MultSetSpec::Reg => true,
            MultSetSpec::Units => false,
            MultSetSpec::MonoidGen(gens) | MultSetSpec::ExplicitFinite(gens) => gens
                .iter()
                .filter_map(RingElement::as_int)
                .any(|g| (g % q).is_zero()),
            MultSetSpec::ComplementOfIdeals(_) => !self.primes.contains(&q),
            MultSetSpec::Preimage(RingHom::QuotientMap { n }, target) => {
                (0..*n).any(|k| target.contains(&RingElement::Mod(mul_mod(q % n, k, *n))))
            }
            _ => return Err(Error::Unsupported("multiplicative set on Z".into())),
        })
    }

    /// For `g > 0`, the generator of the closure of `gZ`: `g` with every
    /// strippable prime removed.
    pub fn strip(&self, g: &BigUint) -> Result<BigUint> {
        if g.is_zero() {
            return Ok(BigUint::zero());
        }
        match &self.spec {
            MultSetSpec::Reg => Ok(BigUint::one()),
            MultSetSpec::Units => Ok(g.clone()),
            MultSetSpec::MonoidGen(gens) | MultSetSpec::ExplicitFinite(gens) => {
                let prod: BigUint = gens.iter().filter_map(RingElement::as_int).map(magnitude).product();
                let mut out = g.clone();
                loop {
                    let t = out.gcd(&prod);
                    if t.is_one() {
                        return Ok(out);
                    }
                    out /= t;
                }
            }
            MultSetSpec::ComplementOfIdeals(_) => {
                let mut out = BigUint::one();
                for &q in &self.primes {
                    let mut rest = g.clone();
                    while (&rest % q).is_zero() {
                        rest /= q;
                        out *= q;
                    }
                }
                Ok(out)
            }
            _ => {
                let small = g
                    .to_u64()
                    .filter(|v| *v <= MAX_FACTOR)
                    .ok_or_else(|| Error::Budget(format!("{g} is too large to factor by trial division")))?;
                let mut out = 1u64;
                for (q, e) in factorize(small) {
                    if !self.strippable(q)? {
                        out *= q.pow(e);
                    }
                }
                Ok(BigUint::from(out))
            }
        }
    }

    /// Canonical text form, re-parseable for the non-derived variants.
    pub fn describe(&self) -> String {
        let list = |xs: &[RingElement]| xs.iter().map(|x| self.ring.format(x)).collect::<Vec<_>>().join(";");
        match &self.spec {
            MultSetSpec::Reg => "reg".into(),
            MultSetSpec::Units => "units".into(),
            MultSetSpec::EvenDegreeNonzero => "evendeg".into(),
            MultSetSpec::MonoidGen(g) => format!("gen:{{{}}}", list(g)),
            MultSetSpec::ExplicitFinite(g) => format!("explicit:{{{}}}", list(g)),
            MultSetSpec::ComplementOfIdeals(g) => format!("compl:{{{}}}", list(g)),
            MultSetSpec::Preimage(hom, t) => format!("preimage({hom:?}, {})", t.describe()),
        }
    }
}

impl fmt::Display for MultSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// Prime factorization by trial division.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn scalar_subgroup(consts: &[u64], p: u64) -> Result<BTreeSet<u64>> {
    let mut group = BTreeSet::from([1u64]);
    let mut stack = vec![1u64];
    while let Some(c) = stack.pop() {
        for &g in consts {
            let next = mul_mod(c, g, p);
            if group.insert(next) {
                if group.len() as u64 > MAX_ENUMERATION {
                    return Err(Error::Budget("scalar subgroup too large to enumerate".into()));
                }
                stack.push(next);
            }
        }
    }
    Ok(group)
}

fn int_monoid_contains(gens: &[RingElement], w: &BigInt) -> bool {
    let gens: Vec<&BigInt> = gens.iter().filter_map(RingElement::as_int).collect();
    let minus_one = BigInt::from(-1);
    let sign_free = gens.iter().any(|g| **g == minus_one);
    let nonunits: Vec<&BigInt> = gens.iter().copied().filter(|g| magnitude(g) > BigUint::one()).collect();
    fn rec(w: &BigInt, gens: &[&BigInt], sign_free: bool, memo: &mut HashMap<BigInt, bool>) -> bool {
        if w.is_one() {
            return true;
        }
        if magnitude(w).is_one() {
            return sign_free;
        }
        if w.is_zero() {
            return false;
        }
        if let Some(&v) = memo.get(w) {
            return v;
        }
        let found = gens.iter().any(|g| {
            let (q, r) = w.div_rem(g);
            r.is_zero() && rec(&q, gens, sign_free, memo)
        });
        memo.insert(w.clone(), found);
        found
    }
    rec(w, &nonunits, sign_free, &mut HashMap::new())
}

fn poly_monoid_contains(gens: &[RingElement], w: &Poly, p: u64, scalar_ok: impl Fn(u64) -> bool) -> bool {
    let nonconst: Vec<&Poly> = gens
        .iter()
        .filter_map(RingElement::as_poly)
        .filter(|g| !g.is_constant())
        .collect();
    fn rec(w: &Poly, gens: &[&Poly], p: u64, ok: &dyn Fn(u64) -> bool, memo: &mut HashMap<Poly, bool>) -> bool {
        if w.is_zero() {
            return false;
        }
        if w.is_constant() {
            return ok(w.constant_term());
        }
        if let Some(&v) = memo.get(w) {
            return v;
        }
        let found = gens
            .iter()
            .any(|g| w.div_exact(g, p).is_some_and(|q| rec(&q, gens, p, ok, memo)));
        memo.insert(w.clone(), found);
        found
    }
    rec(w, &nonconst, p, &scalar_ok, &mut HashMap::new())
}

/// Number of monic polynomials of degree at most `d`.
pub fn count_monic_up_to(nvars: usize, p: u64, d: u32) -> Option<u64> {
    let n = monomials_up_to(nvars, d).len();
    let mut total = 0u64;
    let mut pow = 1u64;
    for _ in 0..n {
        total = total.checked_add(pow)?;
        pow = pow.checked_mul(p)?;
    }
    Some(total)
}

/// All monic polynomials of degree at most `d`: ordered by leading monomial
/// in graded-lex order, then by the lower coefficients read as a base-`p`
/// counter with the smallest monomial as the least significant digit.
pub fn monic_polys_up_to(nvars: usize, p: u64, d: u32) -> Result<Vec<Poly>> {
    match count_monic_up_to(nvars, p, d) {
        Some(n) if n <= MAX_CANDIDATES => {}
        _ => {
            return Err(Error::Budget(format!(
                "too many monic polynomials of degree <= {d} in {nvars} variables over GF({p})"
            )))
        }
    }
    let monos = monomials_up_to(nvars, d);
    let mut out = Vec::new();
    for (lead, lm) in monos.iter().enumerate() {
        let mut digits = vec![0u64; lead];
        loop {
            let terms = digits
                .iter()
                .zip(&monos)
                .filter(|(c, _)| **c != 0)
                .map(|(c, m)| (*m, *c))
                .chain(std::iter::once((*lm, 1)));
            out.push(Poly::from_terms(terms, p));
            let mut i = 0;
            while i < lead {
                digits[i] += 1;
                if digits[i] < p {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == lead {
                break;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::parse::parse_ring;

    fn el(ring: &RingSpec, s: &str) -> RingElement {
        parse_element(ring, s).unwrap()
    }

    #[test]
    fn zero_is_rejected() {
        let z6 = parse_ring("Z/6").unwrap();
        assert!(matches!(MultSet::parse(&z6, "gen:{2;3}"), Err(Error::InvalidMultSet(_))));
        assert!(MultSet::parse(&z6, "gen:{5}").is_ok());
        let z = RingSpec::Integers;
        assert!(matches!(MultSet::parse(&z, "gen:{0}"), Err(Error::InvalidMultSet(_))));
        assert!(matches!(MultSet::parse(&z, "compl:{}"), Err(Error::InvalidMultSet(_))));
    }

    #[test]
    fn integer_monoids() {
        let z = RingSpec::Integers;
        let w = MultSet::parse(&z, "gen:{2;6}").unwrap();
        assert!(w.contains(&RingElement::int(24)));
        assert!(w.contains(&RingElement::int(1)));
        assert!(!w.contains(&RingElement::int(3)));
        assert!(!w.contains(&RingElement::int(-2)));
        assert!(w.contains_associate(&RingElement::int(-2)));
        assert_eq!(w.strip(&BigUint::from(60u32)).unwrap(), BigUint::from(5u32));
        let c = MultSet::parse(&z, "compl:{2}").unwrap();
        assert!(c.contains(&RingElement::int(15)));
        assert!(!c.contains(&RingElement::int(10)));
        assert_eq!(c.strip(&BigUint::from(60u32)).unwrap(), BigUint::from(4u32));
    }

    #[test]
    fn polynomial_monoids() {
        let r = parse_ring("GF(3)[x]").unwrap();
        let w = MultSet::parse(&r, "gen:{x+1;2}").unwrap();
        assert!(w.contains(&el(&r, "2*x^2 + x + 2")));
        assert!(!w.contains(&el(&r, "x")));
        let w1 = MultSet::parse(&r, "gen:{x+1}").unwrap();
        assert!(!w1.contains(&el(&r, "2*x + 2")));
        assert!(w1.contains_associate(&el(&r, "x + 1")));
        let e = MultSet::parse(&r, "evendeg").unwrap();
        assert!(e.contains(&el(&r, "1")) && e.contains(&el(&r, "x^2 + x")) && !e.contains(&el(&r, "x")));
        let r2 = parse_ring("GF(2)[x,y]").unwrap();
        assert!(MultSet::parse(&r2, "evendeg").is_err());
    }

    #[test]
    fn monic_enumeration_order() {
        let polys = monic_polys_up_to(1, 2, 2).unwrap();
        let r = parse_ring("GF(2)[x]").unwrap();
        let names: Vec<String> = polys.iter().map(|f| r.as_poly_ring().unwrap().format(f)).collect();
        assert_eq!(names, ["1", "x", "x + 1", "x^2", "x^2 + 1", "x^2 + x", "x^2 + x + 1"]);
        assert_eq!(count_monic_up_to(2, 2, 2), Some(63));
    }

    #[test]
    fn finite_tables() {
        let z12 = parse_ring("Z/12").unwrap();
        let w = MultSet::parse(&z12, "gen:{5}").unwrap();
        assert_eq!(w.members().unwrap(), vec![RingElement::Mod(1), RingElement::Mod(5)]);
        let c = MultSet::parse(&z12, "compl:{2}").unwrap();
        assert_eq!(
            c.members().unwrap(),
            [1, 3, 5, 7, 9, 11].map(RingElement::Mod).to_vec()
        );
        let reg = MultSet::reg(&z12);
        assert_eq!(reg.members().unwrap(), [1, 5, 7, 11].map(RingElement::Mod).to_vec());
    }

    #[test]
    fn preimage_sets() {
        let src = parse_ring("GF(2)[x,y]").unwrap();
        let h = RingHom::eval_var_to_zero(src.as_poly_ring().unwrap(), "y").unwrap();
        let w = MultSet::preimage(&h, &MultSet::reg(&h.target())).unwrap();
        assert!(w.contains(&el(&src, "x + y")));
        assert!(!w.contains(&el(&src, "x*y")));
        let q = RingHom::quotient(12).unwrap();
        let wz = MultSet::preimage(&q, &MultSet::reg(&q.target())).unwrap();
        assert!(wz.contains(&RingElement::int(25)));
        assert!(!wz.contains(&RingElement::int(14)));
        assert!(!wz.strippable(2).unwrap());
        assert!(wz.strippable(7).unwrap());
        assert_eq!(wz.strip(&BigUint::from(84u32)).unwrap(), BigUint::from(12u32));
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
    }
}

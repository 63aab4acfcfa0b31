//! The supported ring roster and exact arithmetic on its elements.
//!
//! A [`RingSpec`] describes the ambient ring; a [`RingElement`] carries no
//! reference to its ring, so every operation goes through the spec, which
//! checks that the operands have the right shape.

pub mod hom;
pub mod modular;
pub mod mulset;
pub mod parse;
pub mod poly;

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use modular::{add_mod, gcd, inv_mod, is_prime, mul_mod, neg_mod, radical};
use poly::{Monomial, Poly, MAX_VARS};

/// Largest modulus or characteristic accepted by the parser.
pub const MAX_MODULUS: u64 = 1 << 32;

/// Finite enumerations (elements, units) refuse rings larger than this.
pub const MAX_ENUMERATION: u64 = 1 << 22;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyRing {
    p: u64,
    vars: Vec<String>,
}

impl PolyRing {
    pub fn new(p: u64, vars: Vec<String>) -> Result<Self> {
        check_prime(p)?;
        if vars.is_empty() || vars.len() > MAX_VARS {
            return Err(Error::InvalidRing(format!(
                "polynomial rings take 1 to {MAX_VARS} variables, got {}",
                vars.len()
            )));
        }
        for (i, v) in vars.iter().enumerate() {
            let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::InvalidRing(format!("bad variable name {v:?}")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("repeated variable {v}")));
            }
        }
        Ok(Self { p, vars })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn var(&self, index: usize) -> Poly {
        Poly::monomial(Monomial::var(index), 1, self.p)
    }

    pub fn format(&self, f: &Poly) -> String {
        f.format(&self.vars)
    }

    pub fn spec(&self) -> RingSpec {
        RingSpec::Poly(self.clone())
    }

    fn check(&self, f: &Poly) -> Result<()> {
        for (m, c) in f.terms() {
            if *c == 0 || *c >= self.p {
                return Err(Error::RingMismatch(format!("coefficient {c} is not reduced mod {}", self.p)));
            }
            if m.exponents()[self.nvars()..].iter().any(|&e| e > 0) {
                return Err(Error::RingMismatch("monomial uses more variables than the ring".into()));
            }
        }
        Ok(())
    }
}

fn check_prime(p: u64) -> Result<()> {
    if p >= MAX_MODULUS {
        return Err(Error::InvalidRing(format!("characteristic {p} is too large")));
    }
    if !is_prime(p) {
        return Err(Error::InvalidRing(format!("GF({p}) is not a prime field")));
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum RingSpec {
    Integers,
    IntegersMod(u64),
    PrimeField(u64),
    Poly(PolyRing),
    Product(Box<RingSpec>, Box<RingSpec>),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum RingElement {
    Int(BigInt),
    Mod(u64),
    Fp(u64),
    Poly(Poly),
    Pair(Box<RingElement>, Box<RingElement>),
}

impl RingElement {
    pub fn pair(a: RingElement, b: RingElement) -> Self {
        RingElement::Pair(Box::new(a), Box::new(b))
    }

    pub fn int(v: i64) -> Self {
        RingElement::Int(BigInt::from(v))
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        match self {
            RingElement::Poly(f) => Some(f),
            _ => None,
        }
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            RingElement::Int(v) => Some(v),
            _ => None,
        }
    }

    /// Residue of a `Z/n` or `GF(p)` element.
    pub fn as_residue(&self) -> Option<u64> {
        match self {
            RingElement::Mod(v) | RingElement::Fp(v) => Some(*v),
            _ => None,
        }
    }

    pub fn as_pair(&self) -> Option<(&RingElement, &RingElement)> {
        match self {
            RingElement::Pair(a, b) => Some((a, b)),
            _ => None,
        }
    }
}

fn mismatch(ring: &RingSpec, e: &RingElement) -> Error {
    Error::RingMismatch(format!("element {e:?} does not belong to {ring}"))
}

impl RingSpec {
    pub fn integers_mod(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRing(format!("Z/{n}: modulus must be at least 2")));
        }
        if n >= MAX_MODULUS {
            return Err(Error::InvalidRing(format!("Z/{n}: modulus too large")));
        }
        Ok(RingSpec::IntegersMod(n))
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        check_prime(p)?;
        Ok(RingSpec::PrimeField(p))
    }

    pub fn polynomial(p: u64, vars: &[&str]) -> Result<Self> {
        Ok(RingSpec::Poly(PolyRing::new(p, vars.iter().map(|v| v.to_string()).collect())?))
    }

    pub fn product(left: RingSpec, right: RingSpec) -> Result<Self> {
        if matches!(left, RingSpec::Product(..)) || matches!(right, RingSpec::Product(..)) {
            return Err(Error::InvalidRing("products nest at most one level (pairs only)".into()));
        }
        Ok(RingSpec::Product(Box::new(left), Box::new(right)))
    }

    pub fn as_poly_ring(&self) -> Option<&PolyRing> {
        match self {
            RingSpec::Poly(r) => Some(r),
            _ => None,
        }
    }

    pub fn factors(&self) -> Option<(&RingSpec, &RingSpec)> {
        match self {
            RingSpec::Product(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn zero(&self) -> RingElement {
        self.from_int(0)
    }

    pub fn one(&self) -> RingElement {
        self.from_int(1)
    }

    /// Image of an integer under the unique ring map from `Z`.
    pub fn from_int(&self, v: i64) -> RingElement {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> RingElement {
        let reduce = |n: u64| -> u64 { v.mod_floor(&BigInt::from(n)).to_u64().expect("residue fits") };
        match self {
            RingSpec::Integers => RingElement::Int(v.clone()),
            RingSpec::IntegersMod(n) => RingElement::Mod(reduce(*n)),
            RingSpec::PrimeField(p) => RingElement::Fp(reduce(*p)),
            RingSpec::Poly(r) => RingElement::Poly(Poly::constant(reduce(r.p), r.p)),
            RingSpec::Product(a, b) => RingElement::pair(a.from_bigint(v), b.from_bigint(v)),
        }
    }

    /// Verifies that `e` is a well-formed element of this ring.
    pub fn check(&self, e: &RingElement) -> Result<()> {
        match (self, e) {
            (RingSpec::Integers, RingElement::Int(_)) => Ok(()),
            (RingSpec::IntegersMod(n), RingElement::Mod(v)) if v < n => Ok(()),
            (RingSpec::PrimeField(p), RingElement::Fp(v)) if v < p => Ok(()),
            (RingSpec::Poly(r), RingElement::Poly(f)) => r.check(f),
            (RingSpec::Product(a, b), RingElement::Pair(x, y)) => {
                a.check(x)?;
                b.check(y)
            }
            _ => Err(mismatch(self, e)),
        }
    }

    pub fn add(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        use RingElement as E;
        Ok(match (self, x, y) {
            (RingSpec::Integers, E::Int(a), E::Int(b)) => E::Int(a + b),
            (RingSpec::IntegersMod(n), E::Mod(a), E::Mod(b)) => E::Mod(add_mod(*a, *b, *n)),
            (RingSpec::PrimeField(p), E::Fp(a), E::Fp(b)) => E::Fp(add_mod(*a, *b, *p)),
            (RingSpec::Poly(r), E::Poly(a), E::Poly(b)) => E::Poly(a.add(b, r.p)),
            (RingSpec::Product(ra, rb), E::Pair(a1, b1), E::Pair(a2, b2)) => {
                E::pair(ra.add(a1, a2)?, rb.add(b1, b2)?)
            }
            _ => return Err(Error::RingMismatch(format!("cannot add {x:?} and {y:?} in {self}"))),
        })
    }

    pub fn neg(&self, x: &RingElement) -> Result<RingElement> {
        use RingElement as E;
        Ok(match (self, x) {
            (RingSpec::Integers, E::Int(a)) => E::Int(-a),
            (RingSpec::IntegersMod(n), E::Mod(a)) => E::Mod(neg_mod(*a, *n)),
            (RingSpec::PrimeField(p), E::Fp(a)) => E::Fp(neg_mod(*a, *p)),
            (RingSpec::Poly(r), E::Poly(a)) => E::Poly(a.neg(r.p)),
            (RingSpec::Product(ra, rb), E::Pair(a, b)) => E::pair(ra.neg(a)?, rb.neg(b)?),
            _ => return Err(mismatch(self, x)),
        })
    }

    pub fn sub(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        self.add(x, &self.neg(y)?)
    }

    pub fn mul(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        use RingElement as E;
        Ok(match (self, x, y) {
            (RingSpec::Integers, E::Int(a), E::Int(b)) => E::Int(a * b),
            (RingSpec::IntegersMod(n), E::Mod(a), E::Mod(b)) => E::Mod(mul_mod(*a, *b, *n)),
            (RingSpec::PrimeField(p), E::Fp(a), E::Fp(b)) => E::Fp(mul_mod(*a, *b, *p)),
            (RingSpec::Poly(r), E::Poly(a), E::Poly(b)) => E::Poly(a.mul(b, r.p)),
            (RingSpec::Product(ra, rb), E::Pair(a1, b1), E::Pair(a2, b2)) => {
                E::pair(ra.mul(a1, a2)?, rb.mul(b1, b2)?)
            }
            _ => return Err(Error::RingMismatch(format!("cannot multiply {x:?} and {y:?} in {self}"))),
        })
    }

    pub fn pow(&self, x: &RingElement, mut k: u32) -> Result<RingElement> {
        let mut acc = self.one();
        let mut base = x.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base)?;
            }
            base = self.mul(&base, &base)?;
            k >>= 1;
        }
        Ok(acc)
    }

    /// Scalar multiple `k * x` for an integer `k`.
    pub fn scalar_mul(&self, k: i64, x: &RingElement) -> Result<RingElement> {
        self.mul(&self.from_int(k), x)
    }

    pub fn is_zero(&self, x: &RingElement) -> bool {
        match x {
            RingElement::Int(a) => a.is_zero(),
            RingElement::Mod(a) | RingElement::Fp(a) => *a == 0,
            RingElement::Poly(f) => f.is_zero(),
            RingElement::Pair(a, b) => match self {
                RingSpec::Product(ra, rb) => ra.is_zero(a) && rb.is_zero(b),
                _ => false,
            },
        }
    }

    pub fn is_domain(&self) -> bool {
        match self {
            RingSpec::Integers | RingSpec::PrimeField(_) | RingSpec::Poly(_) => true,
            RingSpec::IntegersMod(n) => is_prime(*n),
            RingSpec::Product(..) => false,
        }
    }

    /// `true` for rings whose local structure is a single maximal ideal.
    pub fn is_local(&self) -> bool {
        match self {
            RingSpec::PrimeField(_) => true,
            RingSpec::IntegersMod(n) => modular::prime_divisors(*n).len() == 1,
            _ => false,
        }
    }

    pub fn is_graded(&self) -> bool {
        matches!(self, RingSpec::Poly(_))
    }

    /// Number of elements, if finite and representable.
    pub fn size(&self) -> Option<u64> {
        match self {
            RingSpec::IntegersMod(n) => Some(*n),
            RingSpec::PrimeField(p) => Some(*p),
            RingSpec::Product(a, b) => a.size()?.checked_mul(b.size()?),
            RingSpec::Integers | RingSpec::Poly(_) => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.size().is_some()
    }

    /// All elements of a finite ring, in index order.
    pub fn elements(&self) -> Result<Vec<RingElement>> {
        let size = self
            .size()
            .ok_or_else(|| Error::Infinite(format!("{self} has infinitely many elements")))?;
        if size > MAX_ENUMERATION {
            return Err(Error::Budget(format!("{self} has {size} elements")));
        }
        Ok((0..size).map(|i| self.element_at(i)).collect())
    }

    /// Position of `x` in [`RingSpec::elements`]; only meaningful for finite rings.
    pub fn index_of(&self, x: &RingElement) -> u64 {
        match (self, x) {
            (RingSpec::Product(a, b), RingElement::Pair(l, r)) => {
                a.index_of(l) * b.size().unwrap_or(1) + b.index_of(r)
            }
            (_, RingElement::Mod(v) | RingElement::Fp(v)) => *v,
            _ => panic!("index_of called on an element of an infinite ring"),
        }
    }

    pub fn element_at(&self, i: u64) -> RingElement {
        match self {
            RingSpec::IntegersMod(_) => RingElement::Mod(i),
            RingSpec::PrimeField(_) => RingElement::Fp(i),
            RingSpec::Product(a, b) => {
                let nb = b.size().expect("finite factor");
                RingElement::pair(a.element_at(i / nb), b.element_at(i % nb))
            }
            _ => panic!("element_at called on an infinite ring"),
        }
    }

    pub fn is_unit(&self, x: &RingElement) -> bool {
        match (self, x) {
            (RingSpec::Integers, RingElement::Int(a)) => a.abs().is_one(),
            (RingSpec::IntegersMod(n), RingElement::Mod(a)) => gcd(*a, *n) == 1,
            (RingSpec::PrimeField(_), RingElement::Fp(a)) => *a != 0,
            (RingSpec::Poly(_), RingElement::Poly(f)) => f.degree() == Some(0),
            (RingSpec::Product(ra, rb), RingElement::Pair(a, b)) => ra.is_unit(a) && rb.is_unit(b),
            _ => false,
        }
    }

    pub fn is_nilpotent(&self, x: &RingElement) -> bool {
        match (self, x) {
            (RingSpec::IntegersMod(n), RingElement::Mod(a)) => a % radical(*n) == 0,
            (RingSpec::Product(ra, rb), RingElement::Pair(a, b)) => ra.is_nilpotent(a) && rb.is_nilpotent(b),
            _ => self.is_zero(x),
        }
    }

    /// Nonzerodivisor test.
    pub fn is_regular(&self, x: &RingElement) -> bool {
        match (self, x) {
            (RingSpec::IntegersMod(n), RingElement::Mod(a)) => gcd(*a, *n) == 1,
            (RingSpec::Product(ra, rb), RingElement::Pair(a, b)) => ra.is_regular(a) && rb.is_regular(b),
            _ => !self.is_zero(x),
        }
    }

    /// Total degree in a polynomial ring; `None` is the degree of zero.
    pub fn degree(&self, x: &RingElement) -> Result<Option<u32>> {
        match (self, x) {
            (RingSpec::Poly(_), RingElement::Poly(f)) => Ok(f.degree()),
            (RingSpec::Poly(_), _) => Err(mismatch(self, x)),
            _ => Err(Error::Unsupported(format!(
                "{self} is not graded; use euclidean_function for Z"
            ))),
        }
    }

    /// The standard Euclidean function: `|a|` on `Z`, the degree on
    /// univariate polynomial rings. `None` stands for the value at zero.
    pub fn euclidean_function(&self, x: &RingElement) -> Result<Option<BigUint>> {
        match (self, x) {
            (RingSpec::Integers, RingElement::Int(a)) => {
                Ok(if a.is_zero() { None } else { Some(a.magnitude().clone()) })
            }
            (RingSpec::Poly(r), RingElement::Poly(f)) if r.nvars() == 1 => Ok(f.degree().map(BigUint::from)),
            _ => Err(Error::Unsupported(format!("no Euclidean function declared for {self}"))),
        }
    }

    /// The `q` with `b q = a` when it exists and is unique.
    pub fn try_exact_divide(&self, a: &RingElement, b: &RingElement) -> Result<Option<RingElement>> {
        self.check(a)?;
        self.check(b)?;
        if self.is_domain() {
            if self.is_zero(b) {
                return Err(Error::DivisionByZero);
            }
            return Ok(match (self, a, b) {
                (RingSpec::Integers, RingElement::Int(x), RingElement::Int(y)) => {
                    let (q, r) = x.div_rem(y);
                    r.is_zero().then_some(RingElement::Int(q))
                }
                (RingSpec::Poly(r), RingElement::Poly(x), RingElement::Poly(y)) => {
                    x.div_exact(y, r.p).map(RingElement::Poly)
                }
                _ => {
                    let sols = self.solve_linear(b, a)?;
                    sols.into_iter().next()
                }
            });
        }
        match self.solve_linear(b, a) {
            Ok(mut sols) if sols.len() == 1 => Ok(sols.pop()),
            Ok(_) | Err(Error::Infinite(_)) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// All `x` with `b x = a`, in index order for finite rings.
    pub fn solve_linear(&self, b: &RingElement, a: &RingElement) -> Result<Vec<RingElement>> {
        use RingElement as E;
        self.check(a)?;
        self.check(b)?;
        match (self, b, a) {
            (RingSpec::IntegersMod(n), E::Mod(b), E::Mod(a)) => {
                let g = gcd(*b, *n);
                if a % g != 0 {
                    return Ok(vec![]);
                }
                let m = n / g;
                let x0 = if m == 1 {
                    0
                } else {
                    mul_mod(a / g % m, inv_mod(b / g % m, m).expect("coprime after dividing by gcd"), m)
                };
                Ok((0..g).map(|k| E::Mod(x0 + k * m)).collect())
            }
            (RingSpec::PrimeField(p), E::Fp(b), E::Fp(a)) => {
                if *b != 0 {
                    Ok(vec![E::Fp(mul_mod(*a, inv_mod(*b, *p).expect("field"), *p))])
                } else if *a == 0 {
                    self.elements()
                } else {
                    Ok(vec![])
                }
            }
            (RingSpec::Integers, E::Int(b), E::Int(a)) => {
                if b.is_zero() {
                    if a.is_zero() {
                        Err(Error::Infinite("0 * x = 0 has every integer as a solution".into()))
                    } else {
                        Ok(vec![])
                    }
                } else {
                    let (q, r) = a.div_rem(b);
                    Ok(if r.is_zero() { vec![E::Int(q)] } else { vec![] })
                }
            }
            (RingSpec::Poly(r), E::Poly(b), E::Poly(a)) => {
                if b.is_zero() {
                    if a.is_zero() {
                        Err(Error::Infinite("0 * x = 0 has every polynomial as a solution".into()))
                    } else {
                        Ok(vec![])
                    }
                } else {
                    Ok(a.div_exact(b, r.p).map(E::Poly).into_iter().collect())
                }
            }
            (RingSpec::Product(ra, rb), E::Pair(b1, b2), E::Pair(a1, a2)) => {
                let left = ra.solve_linear(b1, a1)?;
                if left.is_empty() {
                    return Ok(vec![]);
                }
                let right = rb.solve_linear(b2, a2)?;
                let mut out = Vec::with_capacity(left.len() * right.len());
                for l in &left {
                    for r in &right {
                        out.push(E::pair(l.clone(), r.clone()));
                    }
                }
                Ok(out)
            }
            _ => Err(Error::RingMismatch(format!("cannot solve {b:?} * x = {a:?} in {self}"))),
        }
    }

    /// The unit group, enumerated.
    pub fn units(&self) -> Result<Vec<RingElement>> {
        Ok(match self {
            RingSpec::Integers => vec![RingElement::int(1), RingElement::int(-1)],
            RingSpec::IntegersMod(n) => {
                if *n > MAX_ENUMERATION {
                    return Err(Error::Budget(format!("unit group of {self} is too large")));
                }
                (1..*n).filter(|a| gcd(*a, *n) == 1).map(RingElement::Mod).collect()
            }
            RingSpec::PrimeField(p) | RingSpec::Poly(PolyRing { p, .. }) => {
                if *p > MAX_ENUMERATION {
                    return Err(Error::Budget(format!("unit group of {self} is too large")));
                }
                (1..*p).map(|c| self.from_int(c as i64)).collect()
            }
            RingSpec::Product(a, b) => {
                let (ua, ub) = (a.units()?, b.units()?);
                if (ua.len() as u64).saturating_mul(ub.len() as u64) > MAX_ENUMERATION {
                    return Err(Error::Budget(format!("unit group of {self} is too large")));
                }
                let mut out = Vec::new();
                for x in &ua {
                    for y in &ub {
                        out.push(RingElement::pair(x.clone(), y.clone()));
                    }
                }
                out
            }
        })
    }

    /// Generators of the Jacobson radical.
    pub fn jacobson_radical(&self) -> Vec<RingElement> {
        match self {
            RingSpec::IntegersMod(n) => vec![RingElement::Mod(radical(*n) % n)],
            RingSpec::Product(a, b) => {
                let ga = a.jacobson_radical().pop().expect("principal");
                let gb = b.jacobson_radical().pop().expect("principal");
                vec![RingElement::pair(ga, gb)]
            }
            _ => vec![self.zero()],
        }
    }

    pub fn in_jacobson(&self, x: &RingElement) -> bool {
        match (self, x) {
            (RingSpec::IntegersMod(n), RingElement::Mod(a)) => a % radical(*n) == 0,
            (RingSpec::Product(ra, rb), RingElement::Pair(a, b)) => ra.in_jacobson(a) && rb.in_jacobson(b),
            _ => self.is_zero(x),
        }
    }

    /// Renders an element in the syntax accepted by [`parse::parse_element`].
    pub fn format(&self, x: &RingElement) -> String {
        match (self, x) {
            (RingSpec::Poly(r), RingElement::Poly(f)) => r.format(f),
            (RingSpec::Product(ra, rb), RingElement::Pair(a, b)) => format!("({}|{})", ra.format(a), rb.format(b)),
            (_, RingElement::Int(v)) => v.to_string(),
            (_, RingElement::Mod(v) | RingElement::Fp(v)) => v.to_string(),
            (_, e) => format!("{e:?}"),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::IntegersMod(n) => write!(f, "Z/{n}"),
            RingSpec::PrimeField(p) => write!(f, "GF({p})"),
            RingSpec::Poly(r) => write!(f, "GF({})[{}]", r.p, r.vars.join(",")),
            RingSpec::Product(a, b) => write!(f, "({a})x({b})"),
        }
    }
}

/// Sign-insensitive absolute value of an integer element as a `BigUint`.
pub fn magnitude(v: &BigInt) -> BigUint {
    match v.sign() {
        Sign::NoSign => BigUint::zero(),
        _ => v.magnitude().clone(),
    }
}

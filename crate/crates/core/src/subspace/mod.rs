//! Canonical representations of additive subgroups.
//!
//! Subgroups of a polynomial ring over `GF(p)` are `F_p`-subspaces, and the
//! ones this crate produces live in the finite-dimensional space of
//! polynomials of degree at most `d`. Subgroups of `Z` and `Z/n` are cyclic.

pub mod linalg;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rings::modular::gcd;
use crate::rings::poly::{monomials_up_to, Monomial, Poly};
use crate::rings::{magnitude, PolyRing, RingElement, RingSpec};
use linalg::{kernel_of_images, Echelon, FpVec};

/// Largest finite subgroup that [`SubgroupRep::elements`] will list.
pub const MAX_ELEMENTS: u64 = 1 << 20;

/// Largest explicit subgroup of a finite product ring.
pub const MAX_EXPLICIT: usize = 4096;

/// Polynomials of degree at most `d`, with the monomial basis in graded-lex order.
#[derive(Debug)]
pub struct AmbientSpace {
    ring: PolyRing,
    d: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// `prefix[e]` is the number of monomials of degree at most `e`.
    prefix: Vec<usize>,
}

impl PartialEq for AmbientSpace {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.d == other.d
    }
}

impl Eq for AmbientSpace {}

impl AmbientSpace {
    pub fn new(ring: &PolyRing, d: u32) -> Arc<Self> {
        let monomials = monomials_up_to(ring.nvars(), d);
        let index = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let prefix = (0..=d)
            .map(|e| monomials.partition_point(|m| m.degree() <= e))
            .collect();
        Arc::new(Self { ring: ring.clone(), d, monomials, index, prefix })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn degree_bound(&self) -> u32 {
        self.d
    }

    pub fn dimension(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    /// Number of basis monomials of degree at most `e`.
    pub fn prefix_len(&self, e: u32) -> usize {
        self.prefix[e.min(self.d) as usize]
    }

    pub fn characteristic(&self) -> u64 {
        self.ring.characteristic()
    }

    pub fn vector_of(&self, f: &Poly) -> Result<FpVec> {
        if let Some(deg) = f.degree().filter(|&deg| deg > self.d) {
            return Err(Error::DegreeOverflow { degree: deg, bound: self.d });
        }
        let mut v = FpVec::zero(self.characteristic(), self.dimension());
        for (m, c) in f.terms() {
            v.set(self.index[m], *c);
        }
        Ok(v)
    }

    pub fn poly_of(&self, v: &FpVec) -> Poly {
        Poly::from_terms(
            v.nonzero().into_iter().map(|(i, c)| (self.monomials[i], c)),
            self.characteristic(),
        )
    }

    /// Image of `w * m` for every basis monomial `m` of degree at most
    /// `d - deg w`, as vectors of this space.
    fn multiplication_images(&self, w: &Poly) -> Vec<FpVec> {
        let p = self.characteristic();
        let dw = w.degree().expect("nonzero multiplier");
        let n = self.prefix_len(self.d - dw);
        self.monomials[..n]
            .iter()
            .map(|m| {
                let mut v = FpVec::zero(p, self.dimension());
                for (t, c) in w.terms() {
                    let i = self.index[&t.mul(m)];
                    let cur = v.get(i);
                    v.set(i, (cur + c) % p);
                }
                v
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ring": self.ring.spec().to_string(),
            "degree_bound": self.d,
            "dimension": self.dimension(),
        })
    }
}

/// Outcome of a membership query; elements above the degree bound of the
/// ambient space are reported separately.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Membership {
    Member,
    NotMember,
    OutsideAmbient,
}

impl Membership {
    pub fn is_member(self) -> bool {
        self == Membership::Member
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Membership::Member => "member",
            Membership::NotMember => "not_member",
            Membership::OutsideAmbient => "outside_ambient",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SubgroupRep {
    FpSubspace { ambient: Arc<AmbientSpace>, echelon: Echelon },
    /// `gZ`.
    CyclicInt(BigUint),
    /// `gZ/nZ` inside `Z/n` or `GF(n)`, with `g | n`; `g = n` is the zero subgroup.
    CyclicMod { ring: RingSpec, g: u64 },
    PairProduct(Box<SubgroupRep>, Box<SubgroupRep>),
    PairExplicit { ring: RingSpec, elements: BTreeSet<RingElement> },
}

fn modulus(ring: &RingSpec) -> Option<u64> {
    match ring {
        RingSpec::IntegersMod(n) | RingSpec::PrimeField(n) => Some(*n),
        _ => None,
    }
}

impl SubgroupRep {
    /// The `F_p`-span of `gens` inside the polynomials of degree at most `d`.
    pub fn span(ambient: &Arc<AmbientSpace>, gens: &[Poly]) -> Result<Self> {
        let vs = gens.iter().map(|g| ambient.vector_of(g)).collect::<Result<Vec<_>>>()?;
        Ok(SubgroupRep::FpSubspace {
            ambient: ambient.clone(),
            echelon: Echelon::from_vectors(ambient.characteristic(), ambient.dimension(), &vs),
        })
    }

    pub fn cyclic_int(g: &BigInt) -> Self {
        SubgroupRep::CyclicInt(magnitude(g))
    }

    /// The subgroup generated by `g` in `Z/n` or `GF(p)`.
    pub fn cyclic_mod(ring: &RingSpec, g: u64) -> Result<Self> {
        let n = modulus(ring).ok_or_else(|| Error::Unsupported(format!("{ring} has no cyclic additive group")))?;
        Ok(SubgroupRep::CyclicMod { ring: ring.clone(), g: gcd(g % n, n) })
    }

    /// The subgroup generated by `gens`. Polynomial subgroups are placed in
    /// the ambient space of degree `bound`, or the largest generator degree.
    pub fn generated(ring: &RingSpec, gens: &[RingElement], bound: Option<u32>) -> Result<Self> {
        for g in gens {
            ring.check(g)?;
        }
        match ring {
            RingSpec::Integers => {
                let g = gens
                    .iter()
                    .filter_map(RingElement::as_int)
                    .fold(BigInt::zero(), |acc, x| acc.gcd(x));
                Ok(Self::cyclic_int(&g))
            }
            RingSpec::IntegersMod(_) | RingSpec::PrimeField(_) => {
                let n = modulus(ring).expect("finite cyclic");
                let g = gens.iter().filter_map(RingElement::as_residue).fold(n, gcd);
                Self::cyclic_mod(ring, g)
            }
            RingSpec::Poly(r) => {
                let polys: Vec<Poly> = gens.iter().filter_map(|g| g.as_poly().cloned()).collect();
                let d = bound.unwrap_or_else(|| polys.iter().filter_map(Poly::degree).max().unwrap_or(0));
                Self::span(&AmbientSpace::new(r, d), &polys)
            }
            RingSpec::Product(..) => {
                if !ring.is_finite() {
                    return Err(Error::Unsupported(format!(
                        "subgroups of {ring} generated by arbitrary pairs (only products of subgroups are represented)"
                    )));
                }
                let mut set = BTreeSet::from([ring.zero()]);
                additive_close(ring, &mut set, gens)?;
                Ok(SubgroupRep::PairExplicit { ring: ring.clone(), elements: set })
            }
        }
    }

    pub fn zero(ring: &RingSpec, bound: u32) -> Result<Self> {
        match ring {
            RingSpec::Product(a, b) if !ring.is_finite() => Ok(SubgroupRep::PairProduct(
                Box::new(Self::zero(a, bound)?),
                Box::new(Self::zero(b, bound)?),
            )),
            _ => Self::generated(ring, &[], Some(bound)),
        }
    }

    /// The whole ring, or all polynomials of degree at most `bound`.
    pub fn whole(ring: &RingSpec, bound: u32) -> Result<Self> {
        match ring {
            RingSpec::Poly(r) => {
                let amb = AmbientSpace::new(r, bound);
                Ok(SubgroupRep::FpSubspace {
                    echelon: Echelon::full(r.characteristic(), amb.dimension()),
                    ambient: amb,
                })
            }
            RingSpec::Product(a, b) => {
                Self::product(Self::whole(a, bound)?, Self::whole(b, bound)?)
            }
            _ => Self::generated(ring, &[ring.one()], Some(bound)),
        }
    }

    pub fn product(left: SubgroupRep, right: SubgroupRep) -> Result<Self> {
        let ring = RingSpec::product(left.ring(), right.ring())?;
        if ring.is_finite() {
            let l = left.elements()?;
            let r = right.elements()?;
            if l.len() * r.len() > MAX_EXPLICIT {
                return Err(Error::Budget(format!("explicit subgroup of {ring} would exceed {MAX_EXPLICIT} elements")));
            }
            let elements = l
                .iter()
                .flat_map(|a| r.iter().map(move |b| RingElement::pair(a.clone(), b.clone())))
                .collect();
            Ok(SubgroupRep::PairExplicit { ring, elements })
        } else {
            Ok(SubgroupRep::PairProduct(Box::new(left), Box::new(right)))
        }
    }

    pub fn ring(&self) -> RingSpec {
        match self {
            SubgroupRep::FpSubspace { ambient, .. } => ambient.ring.spec(),
            SubgroupRep::CyclicInt(_) => RingSpec::Integers,
            SubgroupRep::CyclicMod { ring, .. } | SubgroupRep::PairExplicit { ring, .. } => ring.clone(),
            SubgroupRep::PairProduct(a, b) => RingSpec::Product(Box::new(a.ring()), Box::new(b.ring())),
        }
    }

    pub fn ambient(&self) -> Option<&Arc<AmbientSpace>> {
        match self {
            SubgroupRep::FpSubspace { ambient, .. } => Some(ambient),
            _ => None,
        }
    }

    pub fn echelon(&self) -> Option<&Echelon> {
        match self {
            SubgroupRep::FpSubspace { echelon, .. } => Some(echelon),
            _ => None,
        }
    }

    /// Rank of an `F_p`-subspace.
    pub fn dim(&self) -> Option<usize> {
        self.echelon().map(Echelon::rank)
    }

    /// Number of elements, if finite.
    pub fn cardinality(&self) -> Option<BigUint> {
        match self {
            SubgroupRep::FpSubspace { ambient, echelon } => {
                Some(BigUint::from(ambient.characteristic()).pow(echelon.rank() as u32))
            }
            SubgroupRep::CyclicInt(g) => g.is_zero().then(BigUint::one),
            SubgroupRep::CyclicMod { ring, g } => Some(BigUint::from(modulus(ring).expect("finite") / g)),
            SubgroupRep::PairProduct(a, b) => Some(a.cardinality()? * b.cardinality()?),
            SubgroupRep::PairExplicit { elements, .. } => Some(BigUint::from(elements.len())),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cardinality().is_some_and(|c| c.is_one())
    }

    /// Largest degree of a nonzero element (subspaces only); `None` for `{0}`.
    pub fn max_degree(&self) -> Option<u32> {
        let SubgroupRep::FpSubspace { ambient, echelon } = self else {
            return None;
        };
        echelon.pivots().last().map(|&i| ambient.monomials[i].degree())
    }

    /// A generating set: echelon rows, the cyclic generator, or the listed elements.
    pub fn basis(&self) -> Vec<RingElement> {
        match self {
            SubgroupRep::FpSubspace { ambient, echelon } => echelon
                .rows()
                .iter()
                .map(|r| RingElement::Poly(ambient.poly_of(r)))
                .collect(),
            SubgroupRep::CyclicInt(g) => {
                if g.is_zero() {
                    vec![]
                } else {
                    vec![RingElement::Int(BigInt::from(g.clone()))]
                }
            }
            SubgroupRep::CyclicMod { ring, g } => {
                if Some(*g) == modulus(ring) {
                    vec![]
                } else {
                    vec![RingElement::Mod(*g)].into_iter().map(|e| retag(ring, e)).collect()
                }
            }
            SubgroupRep::PairProduct(a, b) => {
                let (ra, rb) = (a.ring(), b.ring());
                let mut out: Vec<RingElement> =
                    a.basis().into_iter().map(|x| RingElement::pair(x, rb.zero())).collect();
                out.extend(b.basis().into_iter().map(|y| RingElement::pair(ra.zero(), y)));
                out
            }
            SubgroupRep::PairExplicit { elements, .. } => elements.iter().cloned().collect(),
        }
    }

    pub fn membership(&self, x: &RingElement) -> Result<Membership> {
        let yes = |b: bool| if b { Membership::Member } else { Membership::NotMember };
        match (self, x) {
            (SubgroupRep::FpSubspace { ambient, echelon }, RingElement::Poly(f)) => {
                ambient.ring.spec().check(x)?;
                match ambient.vector_of(f) {
                    Ok(v) => Ok(yes(echelon.contains(&v))),
                    Err(Error::DegreeOverflow { .. }) => Ok(Membership::OutsideAmbient),
                    Err(e) => Err(e),
                }
            }
            (SubgroupRep::CyclicInt(g), RingElement::Int(v)) => Ok(yes(if g.is_zero() {
                v.is_zero()
            } else {
                (magnitude(v) % g).is_zero()
            })),
            (SubgroupRep::CyclicMod { ring, g }, _) => {
                ring.check(x)?;
                Ok(yes(x.as_residue().expect("checked") % g == 0))
            }
            (SubgroupRep::PairProduct(a, b), RingElement::Pair(l, r)) => {
                let ml = a.membership(l)?;
                let mr = b.membership(r)?;
                Ok(match (ml, mr) {
                    (Membership::Member, Membership::Member) => Membership::Member,
                    (Membership::OutsideAmbient, _) | (_, Membership::OutsideAmbient) => Membership::OutsideAmbient,
                    _ => Membership::NotMember,
                })
            }
            (SubgroupRep::PairExplicit { ring, elements }, _) => {
                ring.check(x)?;
                Ok(yes(elements.contains(x)))
            }
            _ => Err(Error::RingMismatch(format!("{x:?} is not in the ring of this subgroup"))),
        }
    }

    /// Plain membership; elements outside the ambient space are not members.
    pub fn contains(&self, x: &RingElement) -> Result<bool> {
        Ok(self.membership(x)?.is_member())
    }

    fn same_ambient(&self, other: &SubgroupRep) -> Result<()> {
        if self.ring() != other.ring() || self.ambient().map(|a| a.d) != other.ambient().map(|a| a.d) {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    pub fn sum(&self, other: &SubgroupRep) -> Result<SubgroupRep> {
        self.same_ambient(other)?;
        Ok(match (self, other) {
            (SubgroupRep::FpSubspace { ambient, echelon }, SubgroupRep::FpSubspace { echelon: e2, .. }) => {
                SubgroupRep::FpSubspace { ambient: ambient.clone(), echelon: echelon.sum(e2) }
            }
            (SubgroupRep::CyclicInt(a), SubgroupRep::CyclicInt(b)) => SubgroupRep::CyclicInt(a.gcd(b)),
            (SubgroupRep::CyclicMod { ring, g }, SubgroupRep::CyclicMod { g: h, .. }) => {
                SubgroupRep::CyclicMod { ring: ring.clone(), g: gcd(*g, *h) }
            }
            (SubgroupRep::PairProduct(a1, b1), SubgroupRep::PairProduct(a2, b2)) => {
                SubgroupRep::PairProduct(Box::new(a1.sum(a2)?), Box::new(b1.sum(b2)?))
            }
            (SubgroupRep::PairExplicit { ring, elements }, _) => {
                let mut set = elements.clone();
                additive_close(ring, &mut set, &other.elements()?)?;
                SubgroupRep::PairExplicit { ring: ring.clone(), elements: set }
            }
            _ => return Err(Error::AmbientMismatch),
        })
    }

    pub fn intersect(&self, other: &SubgroupRep) -> Result<SubgroupRep> {
        self.same_ambient(other)?;
        Ok(match (self, other) {
            (SubgroupRep::FpSubspace { ambient, echelon }, SubgroupRep::FpSubspace { echelon: e2, .. }) => {
                SubgroupRep::FpSubspace { ambient: ambient.clone(), echelon: echelon.intersect(e2) }
            }
            (SubgroupRep::CyclicInt(a), SubgroupRep::CyclicInt(b)) => SubgroupRep::CyclicInt(a.lcm(b)),
            (SubgroupRep::CyclicMod { ring, g }, SubgroupRep::CyclicMod { g: h, .. }) => {
                let n = modulus(ring).expect("finite");
                SubgroupRep::CyclicMod { ring: ring.clone(), g: gcd(g / gcd(*g, *h) * h, n) }
            }
            (SubgroupRep::PairProduct(a1, b1), SubgroupRep::PairProduct(a2, b2)) => {
                SubgroupRep::PairProduct(Box::new(a1.intersect(a2)?), Box::new(b1.intersect(b2)?))
            }
            (SubgroupRep::PairExplicit { ring, elements }, _) => {
                let mut set = BTreeSet::new();
                for e in elements {
                    if other.contains(e)? {
                        set.insert(e.clone());
                    }
                }
                SubgroupRep::PairExplicit { ring: ring.clone(), elements: set }
            }
            _ => return Err(Error::AmbientMismatch),
        })
    }

    pub fn is_subset_of(&self, other: &SubgroupRep) -> Result<bool> {
        Ok(self.intersect(other)? == *self)
    }

    /// `(F : w) = {x : w x ∈ F}`. In a polynomial ring the answer is taken
    /// in the same ambient space; when `deg w` exceeds the bound only `0`
    /// qualifies. Domains reject `w = 0`.
    pub fn mul_preimage(&self, w: &RingElement) -> Result<SubgroupRep> {
        let ring = self.ring();
        ring.check(w)?;
        if ring.is_domain() && ring.is_zero(w) {
            return Err(Error::DivisionByZero);
        }
        self.mul_preimage_unchecked(w)
    }

    fn mul_preimage_unchecked(&self, w: &RingElement) -> Result<SubgroupRep> {
        let ring = self.ring();
        if ring.is_zero(w) {
            return Self::whole(&ring, self.ambient().map_or(0, |a| a.d));
        }
        Ok(match (self, w) {
            (SubgroupRep::FpSubspace { ambient, echelon }, RingElement::Poly(wp)) => {
                let p = ambient.characteristic();
                let dw = wp.degree().expect("nonzero");
                let mut out = Echelon::new(p, ambient.dimension());
                if dw <= ambient.d {
                    let residues: Vec<FpVec> = ambient
                        .multiplication_images(wp)
                        .iter()
                        .map(|v| echelon.reduce(v))
                        .collect();
                    for combo in kernel_of_images(p, &residues) {
                        out.insert(combo.resized(ambient.dimension()));
                    }
                }
                SubgroupRep::FpSubspace { ambient: ambient.clone(), echelon: out }
            }
            (SubgroupRep::CyclicInt(g), RingElement::Int(v)) => {
                SubgroupRep::CyclicInt(g / g.gcd(&magnitude(v)))
            }
            (SubgroupRep::CyclicMod { ring, g }, _) => {
                let v = w.as_residue().expect("checked");
                SubgroupRep::CyclicMod { ring: ring.clone(), g: g / gcd(*g, v) }
            }
            (SubgroupRep::PairProduct(a, b), RingElement::Pair(l, r)) => {
                SubgroupRep::PairProduct(Box::new(a.mul_preimage_unchecked(l)?), Box::new(b.mul_preimage_unchecked(r)?))
            }
            (SubgroupRep::PairExplicit { ring, elements }, _) => {
                let mut set = BTreeSet::new();
                for x in ring.elements()? {
                    if elements.contains(&ring.mul(w, &x)?) {
                        set.insert(x);
                    }
                }
                SubgroupRep::PairExplicit { ring: ring.clone(), elements: set }
            }
            _ => return Err(Error::RingMismatch("multiplier does not match the subgroup's ring".into())),
        })
    }

    /// Every element of a finite subgroup.
    pub fn elements(&self) -> Result<Vec<RingElement>> {
        let card = self
            .cardinality()
            .ok_or_else(|| Error::Infinite("the subgroup is infinite; use its generator".into()))?;
        if card > BigUint::from(MAX_ELEMENTS) {
            return Err(Error::Budget(format!("subgroup has {card} elements")));
        }
        Ok(match self {
            SubgroupRep::FpSubspace { ambient, echelon } => echelon
                .elements()
                .iter()
                .map(|v| RingElement::Poly(ambient.poly_of(v)))
                .collect(),
            SubgroupRep::CyclicInt(_) => vec![RingElement::int(0)],
            SubgroupRep::CyclicMod { ring, g } => {
                let n = modulus(ring).expect("finite");
                (0..n / g).map(|k| retag(ring, RingElement::Mod(k * g))).collect()
            }
            SubgroupRep::PairProduct(a, b) => {
                let (l, r) = (a.elements()?, b.elements()?);
                l.iter()
                    .flat_map(|x| r.iter().map(move |y| RingElement::pair(x.clone(), y.clone())))
                    .collect()
            }
            SubgroupRep::PairExplicit { elements, .. } => elements.iter().cloned().collect(),
        })
    }

    /// Images under the two projections, for subgroups of a product ring.
    pub fn projections(&self) -> Result<(SubgroupRep, SubgroupRep)> {
        match self {
            SubgroupRep::PairProduct(a, b) => Ok(((**a).clone(), (**b).clone())),
            SubgroupRep::PairExplicit { ring, elements } => {
                let (ra, rb) = ring.factors().expect("product ring");
                let left: Vec<RingElement> = elements.iter().map(|e| e.as_pair().expect("pair").0.clone()).collect();
                let right: Vec<RingElement> = elements.iter().map(|e| e.as_pair().expect("pair").1.clone()).collect();
                Ok((
                    SubgroupRep::generated(ra, &left, Some(0))?,
                    SubgroupRep::generated(rb, &right, Some(0))?,
                ))
            }
            _ => Err(Error::InvalidArgument("not a subgroup of a product ring".into())),
        }
    }

    /// Same subspace viewed in the ambient space of degree `d`, which must
    /// contain every basis row.
    pub fn reembed(&self, d: u32) -> Result<SubgroupRep> {
        match self {
            SubgroupRep::FpSubspace { ambient, .. } => {
                let amb = AmbientSpace::new(&ambient.ring, d);
                let polys: Vec<Poly> = self.basis().into_iter().filter_map(|e| e.as_poly().cloned()).collect();
                SubgroupRep::span(&amb, &polys)
            }
            _ => Ok(self.clone()),
        }
    }

    pub fn format_basis(&self) -> Vec<String> {
        let ring = self.ring();
        self.basis().iter().map(|e| ring.format(e)).collect()
    }

    pub fn to_json(&self) -> Value {
        let ring = self.ring();
        match self {
            SubgroupRep::FpSubspace { ambient, echelon } => {
                let monomials: Vec<String> = ambient
                    .monomials
                    .iter()
                    .map(|m| ambient.ring.format(&Poly::monomial(*m, 1, ambient.characteristic())))
                    .collect();
                let rows: Vec<Vec<u64>> = echelon.rows().iter().map(FpVec::coeffs).collect();
                json!({
                    "kind": "fp_subspace",
                    "ambient": ambient.to_json(),
                    "monomials": monomials,
                    "rows": rows,
                    "basis": self.format_basis(),
                    "dim": echelon.rank(),
                })
            }
            SubgroupRep::CyclicInt(g) => json!({
                "kind": "cyclic_int",
                "ring": ring.to_string(),
                "generator": g.to_string(),
            }),
            SubgroupRep::CyclicMod { g, .. } => json!({
                "kind": "cyclic_mod",
                "ring": ring.to_string(),
                "generator": g,
                "order": modulus(&ring).expect("finite") / g,
            }),
            SubgroupRep::PairProduct(a, b) => json!({
                "kind": "pair_product",
                "ring": ring.to_string(),
                "left": a.to_json(),
                "right": b.to_json(),
            }),
            SubgroupRep::PairExplicit { elements, .. } => json!({
                "kind": "pair_explicit",
                "ring": ring.to_string(),
                "elements": elements.iter().map(|e| ring.format(e)).collect::<Vec<_>>(),
                "order": elements.len(),
            }),
        }
    }
}

impl fmt::Display for SubgroupRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgroupRep::CyclicInt(g) => write!(f, "{g}Z"),
            SubgroupRep::CyclicMod { ring, g } => write!(f, "{g}{ring}"),
            SubgroupRep::PairProduct(a, b) => write!(f, "({a}) x ({b})"),
            _ => write!(f, "span{{{}}}", self.format_basis().join(", ")),
        }
    }
}

fn retag(ring: &RingSpec, e: RingElement) -> RingElement {
    match (ring, e) {
        (RingSpec::PrimeField(_), RingElement::Mod(v)) => RingElement::Fp(v),
        (_, e) => e,
    }
}

fn additive_close(ring: &RingSpec, set: &mut BTreeSet<RingElement>, gens: &[RingElement]) -> Result<()> {
    let mut frontier: Vec<RingElement> = set.iter().cloned().collect();
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = ring.add(&x, g)?;
            if set.insert(y.clone()) {
                if set.len() > MAX_EXPLICIT {
                    return Err(Error::Budget(format!("explicit subgroup of {ring} exceeds {MAX_EXPLICIT} elements")));
                }
                frontier.push(y);
            }
        }
    }
    Ok(())
}

/// Integer value of a cyclic generator, when it fits.
pub fn generator_u64(rep: &SubgroupRep) -> Option<u64> {
    match rep {
        SubgroupRep::CyclicInt(g) => g.to_u64(),
        SubgroupRep::CyclicMod { g, .. } => Some(*g),
        _ => None,
    }
}

//! Saturations, the F1 step, factroid closures, `W(F)`, `A(F)`, colons and
//! transport along ring maps.
//!
//! In a polynomial ring over `GF(p)` every element of the closure of `S` has
//! degree at most the largest degree in `S`, so closures are computed in the
//! finite-dimensional space of polynomials of that degree. One F1 step needs
//! every pair `(x, w)` with `w` in the multiplicative set and `wx` in `F`;
//! since `deg x + deg w` is bounded by the top degree `e` of `F`, one of the
//! two has degree at most `e / 2`. The step therefore scans small multipliers
//! `w` (adding the whole subspace `(F : w)`) and small candidates `x` (asking
//! whether `(F : x)` meets the set), instead of every multiplier up to `e`.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rings::hom::RingHom;
use crate::rings::modular::{gcd, lcm};
use crate::rings::mulset::{factorize, monic_polys_up_to, MultSet, MultSetSpec, MAX_CANDIDATES};
use crate::rings::poly::Poly;
use crate::rings::{magnitude, PolyRing, RingElement, RingSpec};
use crate::subspace::linalg::{kernel_of_images, Echelon, FpVec};
use crate::subspace::{AmbientSpace, SubgroupRep};

#[derive(Clone, Debug)]
pub struct ClosureResult {
    pub result: SubgroupRep,
    /// Number of F1 steps, including the final one that confirmed the fixed point.
    pub iterations: usize,
    pub stabilized: bool,
    /// Ambient degree bound (polynomial rings).
    pub degree_bound: Option<u32>,
    /// Basis after each step, when tracing was requested.
    pub trace: Option<Vec<Vec<String>>>,
}

impl ClosureResult {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "result": self.result.to_json(),
            "basis": self.result.format_basis(),
            "iterations": self.iterations,
            "stabilized": self.stabilized,
            "degree_bound": self.degree_bound,
        });
        if let Some(dim) = self.result.dim() {
            v["dim"] = json!(dim);
        }
        if let Some(t) = &self.trace {
            v["trace"] = json!(t);
        }
        v
    }
}

fn check_set(ring: &RingSpec, w: &MultSet) -> Result<()> {
    if w.ring() != ring {
        return Err(Error::RingMismatch(format!(
            "multiplicative set over {} used with {ring}",
            w.ring()
        )));
    }
    Ok(())
}

/// `Sat(S) = {x : wx ∈ S for some w in the monoid}` for a finite list `S`.
/// Polynomial answers are limited to degree `bound` (which cannot cut
/// anything off when it is at least the largest degree in `S`).
pub fn saturate(ring: &RingSpec, s: &[RingElement], w: &MultSet, bound: Option<u32>) -> Result<BTreeSet<RingElement>> {
    check_set(ring, w)?;
    let mut out = BTreeSet::new();
    for t in s {
        ring.check(t)?;
        if ring.is_domain() && ring.is_zero(t) {
            out.insert(t.clone());
            continue;
        }
        match (ring, t) {
            (RingSpec::Poly(r), RingElement::Poly(f)) => {
                let p = r.characteristic();
                if p > 1 << 16 {
                    return Err(Error::Budget(format!("listing associates over GF({p})")));
                }
                let deg = f.degree().expect("nonzero");
                for m in w.enumerate_monic_up_to(deg)? {
                    let Some(q) = f.div_exact(&m, p) else { continue };
                    for c in 1..p {
                        let wc = RingElement::Poly(m.scale(c, p));
                        if w.contains(&wc) {
                            let x = q.scale(crate::rings::modular::inv_mod(c, p).expect("field"), p);
                            if bound.is_none_or(|b| x.degree().unwrap_or(0) <= b) {
                                out.insert(RingElement::Poly(x));
                            }
                        }
                    }
                }
            }
            (RingSpec::Integers, RingElement::Int(v)) => {
                let n = magnitude(v)
                    .to_u64()
                    .ok_or_else(|| Error::Budget(format!("{v} is too large to list divisors")))?;
                for d in divisors(n) {
                    for sd in [BigInt::from(d), -BigInt::from(d)] {
                        if w.contains(&RingElement::Int(sd.clone())) {
                            out.insert(RingElement::Int(v / &sd));
                        }
                    }
                }
            }
            _ => {
                let members = w.members()?;
                for x in ring.elements()? {
                    for m in &members {
                        if ring.mul(m, &x)? == *t {
                            out.insert(x.clone());
                            break;
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (q, e) in factorize(n) {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= q;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Whether some nonzero element of the subspace has an associate in `w`.
fn subspace_meets(ambient: &AmbientSpace, k: &Echelon, w: &MultSet) -> Result<bool> {
    if k.rank() == 0 {
        return Ok(false);
    }
    if w.is_reg() {
        return Ok(true);
    }
    if w.is_units() {
        return Ok(k.contains(&ambient.vector_of(&Poly::constant(1, ambient.characteristic()))?));
    }
    let p = ambient.characteristic();
    if (p as f64).powi(k.rank() as i32) > MAX_CANDIDATES as f64 {
        return Err(Error::Budget(format!(
            "a colon subspace of dimension {} over GF({p}) is too large to scan",
            k.rank()
        )));
    }
    for v in k.elements() {
        let Some(piv) = v.pivot() else { continue };
        if v.get(piv) == 1 && w.contains_associate(&RingElement::Poly(ambient.poly_of(&v))) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn f1_subspace(ambient: &Arc<AmbientSpace>, echelon: &Echelon, w: &MultSet) -> Result<Echelon> {
    let f = SubgroupRep::FpSubspace { ambient: ambient.clone(), echelon: echelon.clone() };
    let Some(top) = f.max_degree() else {
        return Ok(echelon.clone());
    };
    let half = top / 2;
    let r = ambient.ring();
    let mut out = echelon.clone();
    for m in w.enumerate_monic_up_to(half)? {
        if m.degree() == Some(0) {
            continue;
        }
        if let SubgroupRep::FpSubspace { echelon: pre, .. } = f.mul_preimage(&RingElement::Poly(m))? {
            for row in pre.rows() {
                out.insert(row.clone());
            }
        }
    }
    for x in monic_polys_up_to(r.nvars(), r.characteristic(), half)? {
        let v = ambient.vector_of(&x)?;
        if out.contains(&v) {
            continue;
        }
        if let SubgroupRep::FpSubspace { echelon: k, .. } = f.mul_preimage(&RingElement::Poly(x))? {
            if subspace_meets(ambient, &k, w)? {
                out.insert(v);
            }
        }
    }
    Ok(out)
}

/// Reference F1 step for subspaces: every monic multiplier up to the top degree.
pub fn f1_step_exhaustive(f: &SubgroupRep, w: &MultSet) -> Result<SubgroupRep> {
    let SubgroupRep::FpSubspace { ambient, echelon } = f else {
        return f1_step(f, w);
    };
    check_set(&f.ring(), w)?;
    let mut out = echelon.clone();
    let top = f.max_degree().unwrap_or(0);
    for m in w.enumerate_monic_up_to(top)? {
        if let SubgroupRep::FpSubspace { echelon: pre, .. } = f.mul_preimage(&RingElement::Poly(m))? {
            for row in pre.rows() {
                out.insert(row.clone());
            }
        }
    }
    Ok(SubgroupRep::FpSubspace { ambient: ambient.clone(), echelon: out })
}

/// Additive subgroup generated by `F ∪ Sat(F)`.
pub fn f1_step(f: &SubgroupRep, w: &MultSet) -> Result<SubgroupRep> {
    let ring = f.ring();
    check_set(&ring, w)?;
    Ok(match f {
        SubgroupRep::FpSubspace { ambient, echelon } => SubgroupRep::FpSubspace {
            ambient: ambient.clone(),
            echelon: f1_subspace(ambient, echelon, w)?,
        },
        SubgroupRep::CyclicInt(g) => SubgroupRep::CyclicInt(w.strip(g)?),
        SubgroupRep::CyclicMod { ring, g } => {
            let l = w
                .members()?
                .iter()
                .filter_map(RingElement::as_residue)
                .fold(1, |acc, m| lcm(acc, gcd(*g, m)));
            SubgroupRep::CyclicMod { ring: ring.clone(), g: g / l }
        }
        SubgroupRep::PairExplicit { .. } => {
            let mut out = f.clone();
            for m in w.members()? {
                out = out.sum(&f.mul_preimage(&m)?)?;
            }
            out
        }
        SubgroupRep::PairProduct(a, b) => {
            let (wa, wb) = component_sets(&ring, w)?;
            let bound = |s: &SubgroupRep| s.ambient().map_or(0, |x| x.degree_bound());
            let left = match wa {
                Some(wa) => f1_step(a, &wa)?,
                None => SubgroupRep::whole(&a.ring(), bound(a))?,
            };
            let right = match wb {
                Some(wb) => f1_step(b, &wb)?,
                None => SubgroupRep::whole(&b.ring(), bound(b))?,
            };
            SubgroupRep::PairProduct(Box::new(left), Box::new(right))
        }
    })
}

/// Componentwise description of a multiplicative set of an infinite product;
/// `None` marks a component that admits 0 and so saturates to everything.
fn component_sets(ring: &RingSpec, w: &MultSet) -> Result<(Option<MultSet>, Option<MultSet>)> {
    let (ra, rb) = ring.factors().expect("product");
    Ok(match w.spec() {
        MultSetSpec::Reg => (Some(MultSet::reg(ra)), Some(MultSet::reg(rb))),
        MultSetSpec::Units => (Some(MultSet::units(ra)), Some(MultSet::units(rb))),
        MultSetSpec::Preimage(RingHom::ProjectionLeft { .. }, t) => (Some((**t).clone()), None),
        MultSetSpec::Preimage(RingHom::ProjectionRight { .. }, t) => (None, Some((**t).clone())),
        _ => {
            return Err(Error::Unsupported(format!(
                "multiplicative set {w} of {ring} is not a product of sets"
            )))
        }
    })
}

pub fn is_factroid(f: &SubgroupRep, w: &MultSet) -> Result<bool> {
    Ok(f1_step(f, w)? == *f)
}

/// The generator of the closure of `gZ`: every prime that divides a member
/// of `W` is stripped from `g`.
pub fn closure_int(g: &BigInt, w: &MultSet) -> Result<SubgroupRep> {
    check_set(&RingSpec::Integers, w)?;
    let mut g = magnitude(g);
    if let MultSetSpec::MonoidGen(gens) | MultSetSpec::ExplicitFinite(gens) = w.spec() {
        for h in gens.iter().filter_map(RingElement::as_int).map(magnitude) {
            loop {
                let t = g.gcd(&h);
                if t.is_one() || g.is_zero() {
                    break;
                }
                g /= t;
            }
        }
        return Ok(SubgroupRep::CyclicInt(g));
    }
    Ok(SubgroupRep::CyclicInt(w.strip(&g)?))
}

/// `[S]^W`: the smallest `W`-factroid containing `S`. For polynomial rings the
/// ambient degree is `bound`, defaulting to the largest degree in `S`.
pub fn closure(ring: &RingSpec, s: &[RingElement], w: &MultSet, bound: Option<u32>, trace: bool) -> Result<ClosureResult> {
    check_set(ring, w)?;
    for g in s {
        ring.check(g)?;
    }
    if let RingSpec::Product(ra, rb) = ring {
        if !ring.is_finite() {
            return product_closure(ring, ra, rb, s, w, bound, trace);
        }
    }
    let start = SubgroupRep::generated(ring, s, bound)?;
    let max_deg = s.iter().filter_map(|g| g.as_poly().and_then(Poly::degree)).max();
    let result = iterate(start, w, trace)?;
    if let Some(top) = result.result.max_degree() {
        assert!(
            max_deg.is_some_and(|m| top <= m),
            "closure left the degree bound: element of degree {top}, generators of degree {max_deg:?}"
        );
    }
    if let RingSpec::Integers = ring {
        let g = s.iter().filter_map(RingElement::as_int).fold(BigInt::zero(), |a, x| a.gcd(x));
        assert_eq!(result.result, closure_int(&g, w)?, "integer closure disagrees with the closed form");
    }
    Ok(result)
}

fn iterate(start: SubgroupRep, w: &MultSet, trace: bool) -> Result<ClosureResult> {
    let degree_bound = start.ambient().map(|a| a.degree_bound());
    let limit = match &start {
        SubgroupRep::FpSubspace { ambient, .. } => ambient.dimension() + 1,
        _ => 4096,
    };
    let mut steps = trace.then(|| vec![start.format_basis()]);
    let mut cur = start;
    for iterations in 1..=limit {
        let next = f1_step(&cur, w)?;
        if let Some(t) = steps.as_mut() {
            t.push(next.format_basis());
        }
        if next == cur {
            return Ok(ClosureResult { result: cur, iterations, stabilized: true, degree_bound, trace: steps });
        }
        cur = next;
    }
    Ok(ClosureResult { result: cur, iterations: limit, stabilized: false, degree_bound, trace: steps })
}

/// Over a product of two domains with more than one unit, the factroids are
/// the products of factroids, so the closure is the product of the closures
/// of the projections.
fn product_closure(
    ring: &RingSpec,
    ra: &RingSpec,
    rb: &RingSpec,
    s: &[RingElement],
    w: &MultSet,
    bound: Option<u32>,
    trace: bool,
) -> Result<ClosureResult> {
    let units = |r: &RingSpec| r.units().map(|u| u.len()).unwrap_or(usize::MAX);
    if !w.is_reg() || !ra.is_domain() || !rb.is_domain() || units(ra).saturating_mul(units(rb)) < 2 {
        return Err(Error::Unsupported(format!(
            "closures in {ring} are supported for reg over domains with more than one unit"
        )));
    }
    let left: Vec<RingElement> = s.iter().map(|e| e.as_pair().expect("checked").0.clone()).collect();
    let right: Vec<RingElement> = s.iter().map(|e| e.as_pair().expect("checked").1.clone()).collect();
    let a = closure(ra, &left, &MultSet::reg(ra), bound, trace)?;
    let b = closure(rb, &right, &MultSet::reg(rb), bound, trace)?;
    let result = SubgroupRep::PairProduct(Box::new(a.result), Box::new(b.result));
    let trace = trace.then(|| vec![result.format_basis()]);
    Ok(ClosureResult {
        result,
        iterations: a.iterations.max(b.iterations),
        stabilized: a.stabilized && b.stabilized,
        degree_bound: a.degree_bound.max(b.degree_bound),
        trace,
    })
}

/// How a degree class of monic representatives sits inside `W(F)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DegreeVerdict {
    All,
    None,
    Some,
}

#[derive(Clone, Debug)]
pub enum WOfReport {
    /// Monic representatives of degree at most `degree_bound`, with membership;
    /// every nonzero element of larger degree is a member.
    Graded { ring: PolyRing, degree_bound: u32, representatives: Vec<(Poly, bool)> },
    /// `{a : gcd(a, g) = 1}` for `F = gZ`, `g > 0`.
    IntCoprime(BigUint),
    /// The nonzero integers (`F = 0`).
    IntNonzero,
    Finite { ring: RingSpec, members: Vec<RingElement> },
}

impl WOfReport {
    pub fn contains(&self, a: &RingElement) -> bool {
        match (self, a) {
            (WOfReport::Graded { degree_bound, representatives, ring }, RingElement::Poly(f)) => {
                match f.degree() {
                    None => false,
                    Some(deg) if deg > *degree_bound => true,
                    Some(_) => {
                        let (_, m) = f.monic(ring.characteristic());
                        representatives.iter().any(|(r, b)| *b && *r == m)
                    }
                }
            }
            (WOfReport::IntCoprime(g), RingElement::Int(v)) => magnitude(v).gcd(g).is_one(),
            (WOfReport::IntNonzero, RingElement::Int(v)) => !v.is_zero(),
            (WOfReport::Finite { members, .. }, _) => members.contains(a),
            _ => false,
        }
    }

    /// For graded reports: per degree up to the bound, whether all, none or
    /// some monic representatives are members.
    pub fn degree_summary(&self) -> Vec<(u32, DegreeVerdict)> {
        let WOfReport::Graded { degree_bound, representatives, .. } = self else {
            return Vec::new();
        };
        (0..=*degree_bound)
            .map(|d| {
                let flags: Vec<bool> = representatives
                    .iter()
                    .filter(|(f, _)| f.degree() == Some(d))
                    .map(|(_, b)| *b)
                    .collect();
                let verdict = if flags.iter().all(|b| *b) {
                    DegreeVerdict::All
                } else if flags.iter().all(|b| !*b) {
                    DegreeVerdict::None
                } else {
                    DegreeVerdict::Some
                };
                (d, verdict)
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        match self {
            WOfReport::Graded { ring, degree_bound, representatives } => {
                let summary: Vec<Value> = self
                    .degree_summary()
                    .iter()
                    .map(|(d, v)| json!({"degree": d, "members": format!("{v:?}").to_lowercase()}))
                    .collect();
                json!({
                    "kind": "graded",
                    "degree_bound": degree_bound,
                    "cofinite_rule": format!("every nonzero element of degree > {degree_bound} is a member"),
                    "by_degree": summary,
                    "representatives": representatives
                        .iter()
                        .map(|(f, b)| json!({"element": ring.format(f), "member": b}))
                        .collect::<Vec<_>>(),
                })
            }
            WOfReport::IntCoprime(g) => json!({"kind": "int_coprime", "rule": format!("gcd(a, {g}) = 1")}),
            WOfReport::IntNonzero => json!({"kind": "int_nonzero", "rule": "a != 0"}),
            WOfReport::Finite { ring, members } => json!({
                "kind": "finite",
                "members": members.iter().map(|m| ring.format(m)).collect::<Vec<_>>(),
            }),
        }
    }
}

/// `W(F) = {a : (F : a) ⊆ F}`.
pub fn w_of(f: &SubgroupRep) -> Result<WOfReport> {
    match f {
        SubgroupRep::FpSubspace { ambient, .. } => {
            let r = ambient.ring();
            let d = f.max_degree().unwrap_or(0);
            let mut representatives = Vec::new();
            for m in monic_polys_up_to(r.nvars(), r.characteristic(), d)? {
                let pre = f.mul_preimage(&RingElement::Poly(m.clone()))?;
                representatives.push((m, pre.is_subset_of(f)?));
            }
            Ok(WOfReport::Graded { ring: r.clone(), degree_bound: d, representatives })
        }
        SubgroupRep::CyclicInt(g) => Ok(if g.is_zero() { WOfReport::IntNonzero } else { WOfReport::IntCoprime(g.clone()) }),
        SubgroupRep::CyclicMod { ring, .. } | SubgroupRep::PairExplicit { ring, .. } => {
            let mut members = Vec::new();
            for a in ring.elements()? {
                if colon_any(f, &a)?.is_subset_of(f)? {
                    members.push(a);
                }
            }
            Ok(WOfReport::Finite { ring: ring.clone(), members })
        }
        SubgroupRep::PairProduct(..) => Err(Error::Unsupported("W(F) over a product with an infinite factor".into())),
    }
}

/// `(F : a)`, with `(F : 0)` the whole ambient.
fn colon_any(f: &SubgroupRep, a: &RingElement) -> Result<SubgroupRep> {
    let ring = f.ring();
    if ring.is_zero(a) {
        SubgroupRep::whole(&ring, f.ambient().map_or(0, |x| x.degree_bound()))
    } else {
        f.mul_preimage(a)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum AOfReport {
    WholeRing,
    /// The elements of the ambient space that multiply `F` into itself.
    Subring(SubgroupRep),
}

impl AOfReport {
    pub fn to_json(&self) -> Value {
        match self {
            AOfReport::WholeRing => json!({"kind": "whole_ring"}),
            AOfReport::Subring(s) => json!({"kind": "subring", "subgroup": s.to_json()}),
        }
    }
}

/// `A(F) = (F :_A F)`.
pub fn a_of(f: &SubgroupRep) -> Result<AOfReport> {
    match f {
        SubgroupRep::FpSubspace { .. } => {
            if f.is_zero() {
                return Ok(AOfReport::WholeRing);
            }
            Ok(AOfReport::Subring(colon_into_ring(f, &f.basis())?))
        }
        SubgroupRep::CyclicInt(_) | SubgroupRep::CyclicMod { .. } => Ok(AOfReport::WholeRing),
        SubgroupRep::PairExplicit { ring, .. } => {
            let c = colon_into_ring(f, &f.basis())?;
            if c.cardinality() == ring.size().map(BigUint::from) {
                Ok(AOfReport::WholeRing)
            } else {
                Ok(AOfReport::Subring(c))
            }
        }
        SubgroupRep::PairProduct(a, b) => match (a_of(a)?, a_of(b)?) {
            (AOfReport::WholeRing, AOfReport::WholeRing) => Ok(AOfReport::WholeRing),
            _ => Err(Error::Unsupported("A(F) for a product of proper subgroups".into())),
        },
    }
}

/// `(F : T) = ⋂_{t ∈ T} (F : t)`; the empty intersection is the whole ambient.
pub fn colon_by_set(f: &SubgroupRep, t: &[RingElement]) -> Result<SubgroupRep> {
    let ring = f.ring();
    let mut out = SubgroupRep::whole(&ring, f.ambient().map_or(0, |x| x.degree_bound()))?;
    for x in t {
        ring.check(x)?;
        out = out.intersect(&colon_any(f, x)?)?;
    }
    Ok(out)
}

/// `(F :_A S) = {a : aS ⊆ F}`. With `M = A` this is the same computation as
/// [`colon_by_set`], read with the roles of multiplier and element swapped.
pub fn colon_into_ring(f: &SubgroupRep, s: &[RingElement]) -> Result<SubgroupRep> {
    colon_by_set(f, s)
}

/// The preimage `h^{-1}(F)` of a subgroup of the target ring. Polynomial
/// preimages are truncated to the degree bound of `F`'s ambient space, which
/// is again a factroid whenever `F` is one.
pub fn hom_preimage(h: &RingHom, f: &SubgroupRep) -> Result<SubgroupRep> {
    if f.ring() != h.target() {
        return Err(Error::RingMismatch(format!("subgroup lives in {}, map lands in {}", f.ring(), h.target())));
    }
    match (h, f) {
        (RingHom::QuotientMap { .. }, SubgroupRep::CyclicMod { g, .. }) => Ok(SubgroupRep::CyclicInt(BigUint::from(*g))),
        (RingHom::EvalVarToZero { source, var }, SubgroupRep::FpSubspace { ambient, echelon }) => {
            let d = ambient.degree_bound();
            let amb = AmbientSpace::new(source, d);
            let lift: Vec<usize> = (0..source.nvars() - 1).map(|i| if i < *var { i } else { i + 1 }).collect();
            let mut gens: Vec<Poly> = echelon.rows().iter().map(|r| ambient.poly_of(r).relabel(&lift)).collect();
            gens.extend(
                amb.monomials()
                    .iter()
                    .filter(|m| m.exponents()[*var] > 0)
                    .map(|m| Poly::monomial(*m, 1, source.characteristic())),
            );
            SubgroupRep::span(&amb, &gens)
        }
        (RingHom::Inclusion { source, target }, SubgroupRep::FpSubspace { ambient, echelon }) => {
            let d = ambient.degree_bound();
            let amb = AmbientSpace::new(source, d);
            let map = RingHom::inclusion_map(source, target);
            let p = source.characteristic();
            let residues = amb
                .monomials()
                .iter()
                .map(|m| Ok(echelon.reduce(&ambient.vector_of(&Poly::monomial(*m, 1, p).relabel(&map))?)))
                .collect::<Result<Vec<FpVec>>>()?;
            let kernel = kernel_of_images(p, &residues);
            Ok(SubgroupRep::FpSubspace {
                echelon: Echelon::from_vectors(p, amb.dimension(), &kernel),
                ambient: amb,
            })
        }
        (RingHom::ProjectionLeft { source }, _) => {
            let (_, rb) = source.factors().expect("product");
            SubgroupRep::product(f.clone(), SubgroupRep::whole(rb, f.ambient().map_or(0, |a| a.degree_bound()))?)
        }
        (RingHom::ProjectionRight { source }, _) => {
            let (ra, _) = source.factors().expect("product");
            SubgroupRep::product(SubgroupRep::whole(ra, f.ambient().map_or(0, |a| a.degree_bound()))?, f.clone())
        }
        _ => Err(Error::Unsupported(format!("preimage of {f} along {h:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::parse::{parse_element, parse_element_list, parse_ring};

    fn ring(s: &str) -> RingSpec {
        parse_ring(s).unwrap()
    }

    fn els(r: &RingSpec, s: &str) -> Vec<RingElement> {
        parse_element_list(r, s).unwrap()
    }

    fn sub(r: &RingSpec, s: &str, d: Option<u32>) -> SubgroupRep {
        SubgroupRep::generated(r, &els(r, s), d).unwrap()
    }

    fn set(r: &RingSpec, s: &str) -> MultSet {
        MultSet::parse(r, s).unwrap()
    }

    #[test]
    fn saturate_examples() {
        let r = ring("GF(2)[x]");
        let sat = saturate(&r, &els(&r, "x^3"), &set(&r, "reg"), Some(3)).unwrap();
        assert_eq!(sat, els(&r, "1; x; x^2; x^3").into_iter().collect());
        let z = RingSpec::Integers;
        let sat = saturate(&z, &els(&z, "6"), &set(&z, "gen:{2}"), None).unwrap();
        assert_eq!(sat, els(&z, "3; 6").into_iter().collect());
        let r3 = ring("GF(3)[x]");
        let sat = saturate(&r3, &els(&r3, "x^2 + 1"), &set(&r3, "reg"), None).unwrap();
        assert_eq!(sat, els(&r3, "1; 2; x^2 + 1; 2*x^2 + 2").into_iter().collect());
    }

    #[test]
    fn f1_examples() {
        let r = ring("GF(2)[x,y]");
        let f = sub(&r, "x^2 + y^3", None);
        assert_eq!(f1_step(&f, &set(&r, "reg")).unwrap(), sub(&r, "1; x^2 + y^3", Some(3)));
        let z = RingSpec::Integers;
        assert_eq!(f1_step(&sub(&z, "6", None), &set(&z, "gen:{2}")).unwrap(), sub(&z, "3", None));
        let r1 = ring("GF(2)[x]");
        let c2 = sub(&r1, "1; x; x^2", None);
        assert_eq!(f1_step(&c2, &set(&r1, "reg")).unwrap(), c2);
    }

    #[test]
    fn closure_examples() {
        let r = ring("GF(2)[x]");
        let c = closure(&r, &els(&r, "x^3"), &set(&r, "reg"), None, false).unwrap();
        assert_eq!(c.result, sub(&r, "1; x; x^2; x^3", None));
        assert!(c.iterations <= 2 && c.stabilized);
        let r2 = ring("GF(2)[x,y]");
        let c = closure(&r2, &els(&r2, "(x+y^2)*(y+x^2)"), &set(&r2, "reg"), None, false).unwrap();
        assert_eq!(c.result, sub(&r2, "1; x; y; x^2; y^2; (x+y^2)*(y+x^2)", None));
        let c = closure(&r2, &els(&r2, "x; y^2 + x; 1"), &set(&r2, "reg"), None, false).unwrap();
        assert!(c.result.contains(&parse_element(&r2, "y").unwrap()).unwrap());
        let z = RingSpec::Integers;
        let c = closure(&z, &els(&z, "6"), &set(&z, "gen:{10}"), None, false).unwrap();
        assert_eq!(c.result, sub(&z, "3", None));
    }

    #[test]
    fn closure_int_examples() {
        let z = RingSpec::Integers;
        assert_eq!(closure_int(&BigInt::from(6), &set(&z, "gen:{2}")).unwrap(), sub(&z, "3", None));
        assert_eq!(closure_int(&BigInt::from(6), &set(&z, "gen:{35}")).unwrap(), sub(&z, "6", None));
        assert_eq!(closure_int(&BigInt::from(0), &set(&z, "gen:{2}")).unwrap(), sub(&z, "0", None));
    }

    #[test]
    fn factroid_checks() {
        let r = ring("GF(2)[x]");
        let f = sub(&r, "1; x^2", None);
        assert!(is_factroid(&f, &set(&r, "evendeg")).unwrap());
        assert!(!is_factroid(&f, &set(&r, "reg")).unwrap());
        let r2 = ring("GF(2)[x,y]");
        assert!(!is_factroid(&sub(&r2, "1; x; y^2", None), &set(&r2, "reg")).unwrap());
    }

    #[test]
    fn meet_in_the_middle_matches_exhaustive_step() {
        let r = ring("GF(2)[x,y]");
        for gens in ["(x+y^2)*(y+x^2)", "x^2*y + x + 1", "x*y; y^3 + x", "x^4 + y"] {
            let f = sub(&r, gens, None);
            for w in ["reg", "units", "gen:{x;y+1}"] {
                let w = set(&r, w);
                assert_eq!(f1_step(&f, &w).unwrap(), f1_step_exhaustive(&f, &w).unwrap(), "{gens}");
            }
        }
    }

    #[test]
    fn w_of_examples() {
        let r = ring("GF(2)[x]");
        let rep = w_of(&sub(&r, "1; x^2", None)).unwrap();
        assert_eq!(
            rep.degree_summary(),
            vec![(0, DegreeVerdict::All), (1, DegreeVerdict::None), (2, DegreeVerdict::All)]
        );
        assert!(rep.contains(&parse_element(&r, "x^5 + x").unwrap()));
        let z = RingSpec::Integers;
        let rep = w_of(&sub(&z, "6", None)).unwrap();
        assert!(rep.contains(&RingElement::int(35)) && !rep.contains(&RingElement::int(4)));
        let r3 = ring("GF(3)[x]");
        let rep = w_of(&sub(&r3, "", Some(2))).unwrap();
        assert!(rep.contains(&parse_element(&r3, "x + 2").unwrap()));
        assert!(!rep.contains(&r3.zero()));
    }

    #[test]
    fn a_of_examples() {
        let r = ring("GF(2)[x]");
        assert_eq!(a_of(&sub(&r, "1; x^2", None)).unwrap(), AOfReport::Subring(sub(&r, "1", Some(2))));
        assert_eq!(a_of(&sub(&RingSpec::Integers, "5", None)).unwrap(), AOfReport::WholeRing);
        assert_eq!(a_of(&sub(&r, "", Some(2))).unwrap(), AOfReport::WholeRing);
    }

    #[test]
    fn colon_examples() {
        let z = RingSpec::Integers;
        assert_eq!(colon_by_set(&sub(&z, "6", None), &els(&z, "2")).unwrap(), sub(&z, "3", None));
        let r = ring("GF(2)[x]");
        let c3 = sub(&r, "1; x; x^2; x^3", None);
        assert_eq!(colon_by_set(&c3, &els(&r, "x")).unwrap(), sub(&r, "1; x; x^2", Some(3)));
        assert_eq!(colon_by_set(&c3, &els(&r, "1")).unwrap(), c3);
        let c4 = sub(&r, "1; x; x^2; x^3; x^4", None);
        assert_eq!(colon_into_ring(&c4, &els(&r, "x^2")).unwrap(), sub(&r, "1; x; x^2", Some(4)));
        assert_eq!(colon_into_ring(&c4, &els(&r, "0")).unwrap(), SubgroupRep::whole(&r, 4).unwrap());
    }

    #[test]
    fn preimage_examples() {
        let q = RingHom::quotient(12).unwrap();
        let f = SubgroupRep::cyclic_mod(&q.target(), 3).unwrap();
        assert_eq!(hom_preimage(&q, &f).unwrap(), sub(&RingSpec::Integers, "3", None));
        let src = ring("GF(2)[x,y]");
        let h = RingHom::eval_var_to_zero(src.as_poly_ring().unwrap(), "y").unwrap();
        let f = sub(&h.target(), "1; x", Some(2));
        let pre = hom_preimage(&h, &f).unwrap();
        assert_eq!(pre, sub(&src, "1; x; y; x*y; y^2", Some(2)));
        let prod = ring("(GF(3))x(GF(2))");
        let pl = RingHom::projection_left(&prod).unwrap();
        let zero = SubgroupRep::zero(&pl.target(), 0).unwrap();
        assert_eq!(hom_preimage(&pl, &zero).unwrap(), sub(&prod, "(0|1)", None));
    }
}

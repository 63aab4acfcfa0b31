//! Ring-level classification: factroids of Euclidean rings, the
//! unit-additive and sublocalizable predicates, and product decompositions.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::factroid::saturate;
use crate::rings::mulset::MultSet;
use crate::rings::poly::Poly;
use crate::rings::{RingElement, RingSpec};
use crate::subspace::{AmbientSpace, SubgroupRep};

/// The factroids of a Euclidean ring under `reg`: `{0}` and the levels
/// `C_n = {a : σ(a) ≤ n}` that are subgroups. Over `GF(p)[x]` the levels are
/// listed up to `C_d`; over `Z` only `C_∞ = Z` is a subgroup.
pub fn euclidean_factroids(ring: &RingSpec, d: u32) -> Result<Vec<SubgroupRep>> {
    match ring {
        RingSpec::Integers => Ok(vec![
            SubgroupRep::cyclic_int(&BigInt::zero()),
            SubgroupRep::cyclic_int(&BigInt::one()),
        ]),
        RingSpec::Poly(r) if r.nvars() == 1 => {
            let amb = AmbientSpace::new(r, d);
            let mut out = vec![SubgroupRep::span(&amb, &[])?];
            for n in 0..=d {
                out.push(SubgroupRep::span(&amb, &amb.monomials()[..amb.prefix_len(n)]
                    .iter()
                    .map(|m| Poly::monomial(*m, 1, r.characteristic()))
                    .collect::<Vec<_>>())?);
            }
            Ok(out)
        }
        _ => Err(Error::Unsupported(format!("{ring} is not a Euclidean ring with a known degree function"))),
    }
}

/// Outcome of a scan over pairs of units.
#[derive(Clone, Debug, PartialEq)]
pub struct PairScan {
    pub holds: bool,
    pub counterexample: Option<(RingElement, RingElement)>,
}

fn scan_unit_pairs(ring: &RingSpec, ok: impl Fn(&RingElement) -> bool) -> Result<PairScan> {
    let units = ring.units()?;
    for (i, u) in units.iter().enumerate() {
        for v in &units[i..] {
            if !ok(&ring.add(u, v)?) {
                return Ok(PairScan { holds: false, counterexample: Some((u.clone(), v.clone())) });
            }
        }
    }
    Ok(PairScan { holds: true, counterexample: None })
}

/// Whether every sum of two units is a unit or nilpotent.
pub fn unit_additive_check(ring: &RingSpec) -> Result<PairScan> {
    scan_unit_pairs(ring, |s| ring.is_unit(s) || ring.is_nilpotent(s))
}

/// Whether every sum of two units is a unit or lies in the Jacobson radical.
pub fn sublocalizable_check(ring: &RingSpec) -> Result<PairScan> {
    if ring.size() == Some(1) {
        return Ok(PairScan { holds: false, counterexample: None });
    }
    scan_unit_pairs(ring, |s| ring.is_unit(s) || ring.in_jacobson(s))
}

/// Elements of the Jacobson radical. Outside finite rings every roster ring
/// and factor has a zero radical.
pub fn jacobson_elements(ring: &RingSpec) -> Result<Vec<RingElement>> {
    match ring {
        RingSpec::Product(a, b) => {
            let (ja, jb) = (jacobson_elements(a)?, jacobson_elements(b)?);
            Ok(ja
                .iter()
                .flat_map(|x| jb.iter().map(move |y| RingElement::pair(x.clone(), y.clone())))
                .collect())
        }
        _ if ring.is_finite() => Ok(ring.elements()?.into_iter().filter(|x| ring.in_jacobson(x)).collect()),
        _ => Ok(vec![ring.zero()]),
    }
}

/// `A^× ∪ J(A)`.
pub fn units_and_radical(ring: &RingSpec) -> Result<BTreeSet<RingElement>> {
    let mut set: BTreeSet<RingElement> = ring.units()?.into_iter().collect();
    set.extend(jacobson_elements(ring)?);
    Ok(set)
}

/// Whether `set` is closed under subtraction and multiplication.
pub fn is_subring_set(ring: &RingSpec, set: &BTreeSet<RingElement>) -> Result<bool> {
    for a in set {
        for b in set {
            if !set.contains(&ring.sub(a, b)?) || !set.contains(&ring.mul(a, b)?) {
                return Ok(false);
            }
        }
    }
    Ok(set.contains(&ring.one()))
}

/// The subring generated by the units. It is the additive subgroup they
/// generate, since units are closed under products.
pub fn unit_subring(ring: &RingSpec) -> Result<SubgroupRep> {
    let units = ring.units()?;
    match ring {
        RingSpec::Poly(_) => SubgroupRep::generated(ring, &units, Some(0)),
        RingSpec::Product(..) if !ring.is_finite() => Err(Error::Unsupported(format!(
            "the unit subring of {ring} is not a product of subgroups"
        ))),
        _ => SubgroupRep::generated(ring, &units, Some(0)),
    }
}

/// The sublocalization `A^× ∪ J(A) = Z⟨A^×⟩` of a sublocalizable ring.
pub fn sublocalization(ring: &RingSpec) -> Result<SubgroupRep> {
    if !sublocalizable_check(ring)?.holds {
        return Err(Error::InvalidArgument(format!("{ring} is not sublocalizable")));
    }
    let b = unit_subring(ring)?;
    let elements: BTreeSet<RingElement> = b.elements()?.into_iter().collect();
    assert_eq!(elements, units_and_radical(ring)?, "sublocalization differs from A^× ∪ J(A)");
    Ok(b)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassificationReport {
    pub ring: RingSpec,
    pub unit_additive: PairScan,
    pub sublocalizable: PairScan,
    pub local: bool,
    /// Whether `A^× ∪ J(A)` is a subring; equivalent to sublocalizability.
    pub units_and_radical_subring: bool,
    pub sublocalization: Option<SubgroupRep>,
}

impl ClassificationReport {
    pub fn to_json(&self) -> Value {
        let pair = |p: &PairScan| {
            p.counterexample
                .as_ref()
                .map(|(u, v)| json!([self.ring.format(u), self.ring.format(v)]))
        };
        json!({
            "ring": self.ring.to_string(),
            "predicates": {
                "unit_additive": self.unit_additive.holds,
                "sublocalizable": self.sublocalizable.holds,
                "local": self.local,
            },
            "units_and_radical_subring": self.units_and_radical_subring,
            "counterexample": pair(&self.unit_additive),
            "sublocalizable_counterexample": pair(&self.sublocalizable),
            "sublocalization": self.sublocalization.as_ref().map(SubgroupRep::format_basis),
        })
    }
}

/// Runs both predicates and, when it exists, computes the sublocalization.
pub fn classify(ring: &RingSpec) -> Result<ClassificationReport> {
    let unit_additive = unit_additive_check(ring)?;
    let sublocalizable = sublocalizable_check(ring)?;
    let units_and_radical_subring = is_subring_set(ring, &units_and_radical(ring)?)?;
    if units_and_radical_subring != sublocalizable.holds {
        return Err(Error::Unsupported(format!(
            "{ring}: the pair scan and the subring test disagree"
        )));
    }
    let sublocalization = if sublocalizable.holds { Some(sublocalization(ring)?) } else { None };
    Ok(ClassificationReport {
        ring: ring.clone(),
        unit_additive,
        sublocalizable,
        local: ring.is_local(),
        units_and_radical_subring,
        sublocalization,
    })
}

/// One step of the chain: `W_i` (nonzero sums from `V_{i-1}`) and its
/// `reg`-saturation `V_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct UaLevel {
    pub sums: BTreeSet<RingElement>,
    pub saturated: BTreeSet<RingElement>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct UaChain {
    pub ring: RingSpec,
    /// Degree bound, or the bound on `|a|` over `Z`.
    pub bound: u32,
    pub units: BTreeSet<RingElement>,
    pub levels: Vec<UaLevel>,
    /// First `i` with `V_i = V_{i-1}` inside the bound.
    pub stabilized_at: Option<usize>,
}

impl UaChain {
    pub fn last(&self) -> &BTreeSet<RingElement> {
        self.levels.last().map(|l| &l.saturated).unwrap_or(&self.units)
    }

    pub fn to_json(&self) -> Value {
        let fmt = |s: &BTreeSet<RingElement>| s.iter().map(|e| self.ring.format(e)).collect::<Vec<_>>();
        json!({
            "ring": self.ring.to_string(),
            "bound": self.bound,
            "v0": fmt(&self.units),
            "levels": self.levels.iter().map(|l| json!({
                "w": fmt(&l.sums),
                "v": fmt(&l.saturated),
            })).collect::<Vec<_>>(),
            "stabilized_at": self.stabilized_at,
            "truncated": self.stabilized_at.is_none(),
        })
    }
}

fn nonzero_sums(ring: &RingSpec, v: &BTreeSet<RingElement>, bound: u32) -> Result<BTreeSet<RingElement>> {
    match ring {
        RingSpec::Integers => {
            let g = v.iter().filter_map(RingElement::as_int).fold(BigInt::zero(), |acc, x| acc.gcd(x));
            let mut out = BTreeSet::new();
            if g.is_zero() {
                return Ok(out);
            }
            let b = BigInt::from(bound);
            let mut k = g.clone();
            while k <= b {
                out.insert(RingElement::Int(k.clone()));
                out.insert(RingElement::Int(-k.clone()));
                k += &g;
            }
            Ok(out)
        }
        RingSpec::Poly(_) => {
            let gens: Vec<RingElement> = v.iter().cloned().collect();
            let span = SubgroupRep::generated(ring, &gens, Some(bound))?;
            Ok(span.elements()?.into_iter().filter(|e| !ring.is_zero(e)).collect())
        }
        _ => unreachable!("checked by ua_chain"),
    }
}

/// The chain `V_0 = A^× ⊆ V_1 ⊆ ...` truncated to elements of degree (or
/// absolute value) at most `bound`, computed for `depth` steps or until it
/// stabilizes.
pub fn ua_chain(ring: &RingSpec, depth: usize, bound: u32) -> Result<UaChain> {
    if !matches!(ring, RingSpec::Integers | RingSpec::Poly(_)) {
        return Err(Error::Unsupported(format!("the unit-additive chain needs Z or a polynomial ring, not {ring}")));
    }
    let reg = MultSet::reg(ring);
    let units: BTreeSet<RingElement> = ring.units()?.into_iter().collect();
    let mut chain = UaChain { ring: ring.clone(), bound, units, levels: Vec::new(), stabilized_at: None };
    for i in 1..=depth {
        let sums = nonzero_sums(ring, chain.last(), bound)?;
        let list: Vec<RingElement> = sums.iter().cloned().collect();
        let saturated: BTreeSet<RingElement> = saturate(ring, &list, &reg, Some(bound))?
            .into_iter()
            .filter(|e| !ring.is_zero(e))
            .collect();
        let same = &saturated == chain.last();
        chain.levels.push(UaLevel { sums, saturated });
        if same {
            chain.stabilized_at = Some(i);
            break;
        }
    }
    Ok(chain)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProductVerdict {
    pub is_product: bool,
    pub left: SubgroupRep,
    pub right: SubgroupRep,
}

/// Compares `F` with `π₁(F) × π₂(F)`.
pub fn product_structure(f: &SubgroupRep) -> Result<ProductVerdict> {
    let ring = f.ring();
    if ring.factors().is_none() {
        return Err(Error::InvalidArgument(format!("{ring} is not a product ring")));
    }
    let (left, right) = f.projections()?;
    let is_product = match (f.cardinality(), left.cardinality(), right.cardinality()) {
        (Some(c), Some(a), Some(b)) => c == a * b,
        _ => matches!(f, SubgroupRep::PairProduct(..)),
    };
    Ok(ProductVerdict { is_product, left, right })
}

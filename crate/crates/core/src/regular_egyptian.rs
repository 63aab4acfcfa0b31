//! T-regular factroids, the `G^W` construction and W-Egyptian fractions.
//!
//! `x ∈ G^W(S)` when `hx ∈ [hS]^W` for some `h ∈ W`. The union over `h` is
//! infinite, so membership is only semi-decided: candidates are tried in a
//! fixed order up to a degree (or absolute value) bound and a miss is reported
//! as [`GStatus::NotFoundUpTo`], never as non-membership.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::factroid::closure;
use crate::rings::mulset::MultSet;
use crate::rings::poly::Poly;
use crate::rings::{RingElement, RingSpec};
use crate::subspace::SubgroupRep;

/// Cap on the number of unit fractions a greedy expansion may produce.
pub const MAX_TERMS: usize = 100_000;

/// Cap on the bit length of any intermediate denominator.
pub const MAX_DENOMINATOR_BITS: u64 = 1 << 16;

/// Largest integer part accepted in distinct mode; the harmonic prefix for
/// `n` needs about `e^n` terms.
pub const MAX_DISTINCT_WHOLE: u32 = 4;

#[derive(Clone, Debug, PartialEq)]
pub enum GStatus {
    /// `h x ∈ [hS]^W`, certified by the closure.
    Member { h: RingElement, certificate: SubgroupRep },
    NotFoundUpTo(u32),
}

#[derive(Clone, Debug, PartialEq)]
pub struct GMembership {
    pub x: RingElement,
    pub status: GStatus,
    /// Number of multipliers `h` that were tried.
    pub candidates_tried: usize,
}

impl GMembership {
    pub fn is_member(&self) -> bool {
        matches!(self.status, GStatus::Member { .. })
    }

    pub fn witness(&self) -> Option<&RingElement> {
        match &self.status {
            GStatus::Member { h, .. } => Some(h),
            GStatus::NotFoundUpTo(_) => None,
        }
    }

    pub fn to_json(&self, ring: &RingSpec) -> Value {
        match &self.status {
            GStatus::Member { h, certificate } => json!({
                "status": "member",
                "x": ring.format(&self.x),
                "witness_h": ring.format(h),
                "certificate_basis": certificate.format_basis(),
                "certificate_dim": certificate.dim(),
                "candidates_tried": self.candidates_tried,
            }),
            GStatus::NotFoundUpTo(bound) => json!({
                "status": "not_found_up_to",
                "x": ring.format(&self.x),
                "bound": bound,
                "candidates_tried": self.candidates_tried,
            }),
        }
    }
}

/// Multipliers `h ∈ W` in search order: monic representatives by degree and
/// then graded-lex order, or `1, 2, ..., H` (up to sign) over `Z`.
fn multipliers(ring: &RingSpec, w: &MultSet, bound: u32) -> Result<Vec<RingElement>> {
    match ring {
        RingSpec::Poly(_) => Ok(w
            .enumerate_monic_up_to(bound)?
            .into_iter()
            .map(RingElement::Poly)
            .collect()),
        RingSpec::Integers => Ok((1..=i64::from(bound))
            .map(RingElement::int)
            .filter_map(|h| {
                let neg = RingElement::Int(-h.as_int().expect("int"));
                if w.contains(&h) {
                    Some(h)
                } else if w.contains(&neg) {
                    Some(neg)
                } else {
                    None
                }
            })
            .collect()),
        _ => Err(Error::Unsupported(format!("G-membership over {ring}"))),
    }
}

fn max_degree(ring: &RingSpec, s: &[RingElement]) -> u32 {
    match ring {
        RingSpec::Poly(_) => s.iter().filter_map(|e| e.as_poly().and_then(Poly::degree)).max().unwrap_or(0),
        _ => 0,
    }
}

fn degree_of(e: &RingElement) -> u32 {
    e.as_poly().and_then(Poly::degree).unwrap_or(0)
}

/// Searches for `h ∈ W` with `hx ∈ [hS]^W`. Over a polynomial ring `bound` is
/// the largest degree of `h`; over `Z` it bounds `|h|`.
pub fn g_membership(ring: &RingSpec, x: &RingElement, s: &[RingElement], w: &MultSet, bound: u32) -> Result<GMembership> {
    ring.check(x)?;
    let d = max_degree(ring, s);
    let mut tried = 0;
    for h in multipliers(ring, w, bound)? {
        tried += 1;
        let hs = s.iter().map(|g| ring.mul(&h, g)).collect::<Result<Vec<_>>>()?;
        let hx = ring.mul(&h, x)?;
        let amb_bound = matches!(ring, RingSpec::Poly(_)).then(|| degree_of(&h) + d);
        let c = closure(ring, &hs, w, amb_bound, false)?;
        if c.result.contains(&hx)? {
            return Ok(GMembership {
                x: x.clone(),
                status: GStatus::Member { h, certificate: c.result },
                candidates_tried: tried,
            });
        }
    }
    Ok(GMembership { x: x.clone(), status: GStatus::NotFoundUpTo(bound), candidates_tried: tried })
}

/// Re-checks a `Member` verdict from scratch.
pub fn verify_g_membership(ring: &RingSpec, m: &GMembership, s: &[RingElement], w: &MultSet) -> Result<bool> {
    let GStatus::Member { h, .. } = &m.status else {
        return Ok(false);
    };
    let hs = s.iter().map(|g| ring.mul(h, g)).collect::<Result<Vec<_>>>()?;
    let amb_bound = matches!(ring, RingSpec::Poly(_)).then(|| degree_of(h) + max_degree(ring, s));
    let c = closure(ring, &hs, w, amb_bound, false)?;
    Ok(w.contains_associate(h) && c.result.contains(&ring.mul(h, &m.x)?)?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct TRegularReport {
    pub holds: bool,
    /// `(h, x)` with `hx ∈ [hF]^W` but `x ∉ F`.
    pub counterexample: Option<(RingElement, RingElement)>,
}

/// Whether `([hF]^W : h) = F` for every `h` in `t`.
pub fn t_regular_check(f: &SubgroupRep, t: &[RingElement], w: &MultSet) -> Result<TRegularReport> {
    let ring = f.ring();
    for h in t {
        ring.check(h)?;
        if ring.is_zero(h) {
            return Err(Error::InvalidArgument("0 cannot be a regularity multiplier".into()));
        }
        let hf = f.basis().iter().map(|g| ring.mul(h, g)).collect::<Result<Vec<_>>>()?;
        match f {
            SubgroupRep::FpSubspace { ambient, .. } => {
                let d = ambient.degree_bound() + degree_of(h);
                let c = closure(&ring, &hf, w, Some(d), false)?;
                let colon = c.result.mul_preimage(h)?;
                let lifted = f.reembed(d)?;
                if colon != lifted {
                    let x = colon
                        .basis()
                        .into_iter()
                        .find(|x| !lifted.contains(x).unwrap_or(false))
                        .expect("F is contained in its regular colon");
                    return Ok(TRegularReport { holds: false, counterexample: Some((h.clone(), x)) });
                }
            }
            _ => {
                let c = closure(&ring, &hf, w, None, false)?;
                let colon = c.result.mul_preimage(h)?;
                if colon != *f {
                    let x = colon
                        .basis()
                        .into_iter()
                        .find(|x| !f.contains(x).unwrap_or(false))
                        .unwrap_or_else(|| ring.one());
                    return Ok(TRegularReport { holds: false, counterexample: Some((h.clone(), x)) });
                }
            }
        }
    }
    Ok(TRegularReport { holds: true, counterexample: None })
}

/// Decides `a/b ∈ R_W(A)` up to the multiplier bound, as `a ∈ G^W(b)`.
pub fn egyptian_decide(ring: &RingSpec, a: &RingElement, b: &RingElement, w: &MultSet, bound: u32) -> Result<GMembership> {
    ring.check(b)?;
    if !w.contains(b) {
        return Err(Error::InvalidArgument(format!("denominator {} is not in {w}", ring.format(b))));
    }
    g_membership(ring, a, std::slice::from_ref(b), w, bound)
}

/// `Σ 1/w_i = a/b`, with repeats allowed.
#[derive(Clone, Debug, PartialEq)]
pub struct EgyptianWitness {
    pub numerator: RingElement,
    pub denominator: RingElement,
    pub denominators: Vec<RingElement>,
}

impl EgyptianWitness {
    pub fn to_json(&self, ring: &RingSpec) -> Value {
        json!({
            "numerator": ring.format(&self.numerator),
            "denominator": ring.format(&self.denominator),
            "denominators": self.denominators.iter().map(|d| ring.format(d)).collect::<Vec<_>>(),
            "terms": self.denominators.len(),
        })
    }
}

/// Checks `a · Π w_i = b · Σ_i Π_{j≠i} w_j`.
pub fn witness_verify(ring: &RingSpec, wit: &EgyptianWitness) -> Result<bool> {
    ring.check(&wit.numerator)?;
    ring.check(&wit.denominator)?;
    if wit.denominators.is_empty() {
        return Err(Error::InvalidArgument("a witness needs at least one denominator".into()));
    }
    for d in &wit.denominators {
        ring.check(d)?;
        if ring.is_zero(d) {
            return Err(Error::DivisionByZero);
        }
    }
    let mut product = ring.one();
    for d in &wit.denominators {
        product = ring.mul(&product, d)?;
    }
    let mut sum = ring.zero();
    for i in 0..wit.denominators.len() {
        let mut term = ring.one();
        for (j, d) in wit.denominators.iter().enumerate() {
            if i != j {
                term = ring.mul(&term, d)?;
            }
        }
        sum = ring.add(&sum, &term)?;
    }
    Ok(ring.mul(&wit.numerator, &product)? == ring.mul(&wit.denominator, &sum)?)
}

/// Greedy unit-fraction expansion of `a/b > 0`. The integer part becomes
/// repeated `1/1` terms; with `distinct`, it is instead covered by a prefix
/// of the harmonic series so that all denominators differ.
pub fn greedy_unit_fractions(a: &BigInt, b: &BigInt, distinct: bool) -> Result<EgyptianWitness> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if (a.is_negative() != b.is_negative()) || a.is_zero() {
        return Err(Error::InvalidArgument(format!("{a}/{b} is not positive")));
    }
    let g = a.gcd(b);
    let (mut num, mut den): (BigUint, BigUint) = (
        (a.abs() / &g).to_biguint().expect("positive"),
        (b.abs() / &g).to_biguint().expect("positive"),
    );
    let mut out: Vec<BigUint> = Vec::new();
    let push = |out: &mut Vec<BigUint>, d: BigUint| -> Result<()> {
        if out.len() >= MAX_TERMS {
            return Err(Error::Budget(format!("more than {MAX_TERMS} unit fractions needed")));
        }
        if d.bits() > MAX_DENOMINATOR_BITS {
            return Err(Error::Budget(format!("a denominator exceeds {MAX_DENOMINATOR_BITS} bits")));
        }
        out.push(d);
        Ok(())
    };
    if distinct {
        if &num / &den > BigUint::from(MAX_DISTINCT_WHOLE) {
            return Err(Error::Budget(format!("distinct expansion of {a}/{b} needs too many terms")));
        }
        let mut k = BigUint::one();
        // Subtract 1/k while the remainder stays nonnegative.
        while &num * &k >= den {
            num = &num * &k - &den;
            den *= &k;
            let g = num.gcd(&den);
            if !g.is_zero() {
                num /= &g;
                den /= &g;
            }
            push(&mut out, k.clone())?;
            if num.is_zero() {
                break;
            }
            k += 1u32;
        }
    } else {
        let whole = &num / &den;
        let count = whole
            .to_usize()
            .filter(|c| *c <= MAX_TERMS)
            .ok_or_else(|| Error::Budget(format!("integer part {whole} needs too many terms")))?;
        for _ in 0..count {
            push(&mut out, BigUint::one())?;
        }
        num %= &den;
    }
    while !num.is_zero() {
        let d = den.div_ceil(&num);
        // num/den - 1/d = (num*d - den) / (den*d)
        num = &num * &d - &den;
        den *= &d;
        let g = num.gcd(&den);
        num /= &g;
        den /= &g;
        push(&mut out, d)?;
    }
    Ok(EgyptianWitness {
        numerator: RingElement::Int(a.clone()),
        denominator: RingElement::Int(b.clone()),
        denominators: out.into_iter().map(|d| RingElement::Int(d.into())).collect(),
    })
}

/// Parses `a/b` or an integer.
pub fn parse_rational(text: &str) -> Result<(BigInt, BigInt)> {
    let t = text.trim();
    let (a, b) = t.split_once('/').unwrap_or((t, "1"));
    let parse = |s: &str| {
        s.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad rational {text:?}")))
    };
    Ok((parse(a)?, parse(b)?))
}

//! Ring homomorphisms along which factroids are transported.

use super::{PolyRing, RingElement, RingSpec};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum RingHom {
    /// `Z -> Z/n`.
    QuotientMap { n: u64 },
    /// Sets one variable to zero, landing in the ring without that variable.
    EvalVarToZero { source: PolyRing, var: usize },
    /// Inclusion of a polynomial ring into one with more variables, matched by name.
    Inclusion { source: PolyRing, target: PolyRing },
    ProjectionLeft { source: RingSpec },
    ProjectionRight { source: RingSpec },
}

impl RingHom {
    pub fn quotient(n: u64) -> Result<Self> {
        RingSpec::integers_mod(n)?;
        Ok(RingHom::QuotientMap { n })
    }

    pub fn eval_var_to_zero(source: &PolyRing, var: &str) -> Result<Self> {
        let index = source
            .var_index(var)
            .ok_or_else(|| Error::InvalidArgument(format!("{var} is not a variable of {}", source.spec())))?;
        if source.nvars() < 2 {
            return Err(Error::Unsupported(
                "evaluating the only variable leaves the coefficient field, not a polynomial ring".into(),
            ));
        }
        Ok(RingHom::EvalVarToZero { source: source.clone(), var: index })
    }

    pub fn inclusion(source: &PolyRing, target: &PolyRing) -> Result<Self> {
        if source.characteristic() != target.characteristic() {
            return Err(Error::RingMismatch("inclusion between different characteristics".into()));
        }
        if source.nvars() >= target.nvars() || source.vars().iter().any(|v| target.var_index(v).is_none()) {
            return Err(Error::InvalidArgument(format!(
                "{} is not a polynomial subring in fewer variables of {}",
                source.spec(),
                target.spec()
            )));
        }
        Ok(RingHom::Inclusion { source: source.clone(), target: target.clone() })
    }

    pub fn projection_left(source: &RingSpec) -> Result<Self> {
        source
            .factors()
            .ok_or_else(|| Error::InvalidArgument(format!("{source} is not a product")))?;
        Ok(RingHom::ProjectionLeft { source: source.clone() })
    }

    pub fn projection_right(source: &RingSpec) -> Result<Self> {
        source
            .factors()
            .ok_or_else(|| Error::InvalidArgument(format!("{source} is not a product")))?;
        Ok(RingHom::ProjectionRight { source: source.clone() })
    }

    pub fn source(&self) -> RingSpec {
        match self {
            RingHom::QuotientMap { .. } => RingSpec::Integers,
            RingHom::EvalVarToZero { source, .. } | RingHom::Inclusion { source, .. } => source.spec(),
            RingHom::ProjectionLeft { source } | RingHom::ProjectionRight { source } => source.clone(),
        }
    }

    pub fn target(&self) -> RingSpec {
        match self {
            RingHom::QuotientMap { n } => RingSpec::IntegersMod(*n),
            RingHom::EvalVarToZero { source, var } => {
                let vars = source
                    .vars()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| i != var)
                    .map(|(_, v)| v.clone())
                    .collect();
                RingSpec::Poly(PolyRing::new(source.characteristic(), vars).expect("fewer variables stay valid"))
            }
            RingHom::Inclusion { target, .. } => target.spec(),
            RingHom::ProjectionLeft { source } => source.factors().expect("product").0.clone(),
            RingHom::ProjectionRight { source } => source.factors().expect("product").1.clone(),
        }
    }

    /// Target index of each source variable of an inclusion.
    pub fn inclusion_map(source: &PolyRing, target: &PolyRing) -> Vec<usize> {
        source
            .vars()
            .iter()
            .map(|v| target.var_index(v).expect("validated at construction"))
            .collect()
    }

    pub fn apply(&self, a: &RingElement) -> Result<RingElement> {
        self.source().check(a)?;
        Ok(match (self, a) {
            (RingHom::QuotientMap { n }, RingElement::Int(v)) => RingSpec::IntegersMod(*n).from_bigint(v),
            (RingHom::EvalVarToZero { var, .. }, RingElement::Poly(f)) => RingElement::Poly(f.eval_var_zero(*var)),
            (RingHom::Inclusion { source, target }, RingElement::Poly(f)) => {
                RingElement::Poly(f.relabel(&Self::inclusion_map(source, target)))
            }
            (RingHom::ProjectionLeft { .. }, RingElement::Pair(l, _)) => (**l).clone(),
            (RingHom::ProjectionRight { .. }, RingElement::Pair(_, r)) => (**r).clone(),
            _ => return Err(Error::RingMismatch(format!("{a:?} is not in the source of {self:?}"))),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::parse::{parse_element, parse_ring};

    #[test]
    fn eval_y_to_zero() {
        let src = parse_ring("GF(2)[x,y]").unwrap();
        let h = RingHom::eval_var_to_zero(src.as_poly_ring().unwrap(), "y").unwrap();
        let img = h.apply(&parse_element(&src, "x^2 + y^3").unwrap()).unwrap();
        assert_eq!(img, parse_element(&h.target(), "x^2").unwrap());
        assert_eq!(h.target().to_string(), "GF(2)[x]");
    }

    #[test]
    fn quotient_and_projection() {
        let q = RingHom::quotient(12).unwrap();
        assert_eq!(q.apply(&RingElement::int(25)).unwrap(), RingElement::Mod(1));
        let prod = parse_ring("(Z)x(Z)").unwrap();
        let pl = RingHom::projection_left(&prod).unwrap();
        let e = parse_element(&prod, "(2|1)").unwrap();
        assert_eq!(pl.apply(&e).unwrap(), RingElement::int(2));
        assert!(pl.apply(&RingElement::int(2)).is_err());
    }

    #[test]
    fn inclusion_matches_names() {
        let small = parse_ring("GF(3)[y]").unwrap();
        let big = parse_ring("GF(3)[x,y]").unwrap();
        let h = RingHom::inclusion(small.as_poly_ring().unwrap(), big.as_poly_ring().unwrap()).unwrap();
        let img = h.apply(&parse_element(&small, "y^2 + 2").unwrap()).unwrap();
        assert_eq!(img, parse_element(&big, "y^2 + 2").unwrap());
    }
}

use std::collections::BTreeSet;

use factroid::classify::{euclidean_factroids, product_structure, sublocalizable_check, sublocalization, unit_additive_check};
use factroid::factroid::{closure, is_factroid, w_of, WOfReport};
use factroid::oracle::{enumerate_factroids, is_factroid_set, naive_closure, EnumerationBudget, Universe};
use factroid::regular_egyptian::{g_membership, greedy_unit_fractions, t_regular_check, witness_verify};
use factroid::rings::hom::RingHom;
use factroid::rings::mulset::{monic_polys_up_to, MultSet};
use factroid::rings::parse::{parse_element, parse_ring};
use factroid::rings::poly::{monomials_up_to, Poly};
use factroid::rings::{RingElement, RingSpec};
use factroid::subspace::{AmbientSpace, SubgroupRep};
use num_bigint::BigInt;
use proptest::prelude::*;

fn ring(s: &str) -> RingSpec {
    parse_ring(s).unwrap()
}

fn poly_from(nvars: usize, p: u64, d: u32, coeffs: &[u64]) -> Poly {
    let terms = monomials_up_to(nvars, d).into_iter().zip(coeffs.iter().map(|c| c % p));
    Poly::from_terms(terms, p)
}

fn poly_strategy(nvars: usize, p: u64, d: u32) -> impl Strategy<Value = Poly> {
    let n = monomials_up_to(nvars, d).len();
    prop::collection::vec(0..p, n).prop_map(move |c| poly_from(nvars, p, d, &c))
}

fn all_polys(r: &RingSpec, d: u32) -> Vec<RingElement> {
    let u = Universe::polynomials(r.as_poly_ring().unwrap(), d).unwrap();
    (0..u.size()).map(|i| u.element(i)).collect()
}

fn span_of(r: &RingSpec, d: u32, gens: &[Poly]) -> SubgroupRep {
    SubgroupRep::span(&AmbientSpace::new(r.as_poly_ring().unwrap(), d), gens).unwrap()
}

fn indices(u: &Universe, f: &SubgroupRep) -> Vec<usize> {
    let mut v: Vec<usize> = f.elements().unwrap().iter().map(|e| u.index(e).unwrap()).collect();
    v.sort_unstable();
    v
}

// rings

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn exact_division_round_trips_in_gf2_xy(a in poly_strategy(2, 2, 3), b in poly_strategy(2, 2, 3)) {
        prop_assume!(!b.is_zero());
        let r = ring("GF(2)[x,y]");
        let (a, b) = (RingElement::Poly(a), RingElement::Poly(b));
        let ab = r.mul(&a, &b).unwrap();
        prop_assert_eq!(r.try_exact_divide(&ab, &b).unwrap(), Some(a));
    }

    #[test]
    fn exact_division_round_trips_in_gf3_x(a in poly_strategy(1, 3, 5), b in poly_strategy(1, 3, 4)) {
        prop_assume!(!b.is_zero());
        let r = ring("GF(3)[x]");
        let (a, b) = (RingElement::Poly(a), RingElement::Poly(b));
        let ab = r.mul(&a, &b).unwrap();
        prop_assert_eq!(r.try_exact_divide(&ab, &b).unwrap(), Some(a));
    }

    #[test]
    fn exact_division_round_trips_in_z(a in -10_000i64..10_000, b in -10_000i64..10_000) {
        prop_assume!(b != 0);
        let r = RingSpec::Integers;
        let ab = r.mul(&RingElement::int(a), &RingElement::int(b)).unwrap();
        prop_assert_eq!(r.try_exact_divide(&ab, &RingElement::int(b)).unwrap(), Some(RingElement::int(a)));
    }

    #[test]
    fn exact_division_round_trips_in_gf7(a in 0u64..7, b in 1u64..7) {
        let r = ring("GF(7)");
        let (a, b) = (r.from_int(a as i64), r.from_int(b as i64));
        let ab = r.mul(&a, &b).unwrap();
        prop_assert_eq!(r.try_exact_divide(&ab, &b).unwrap(), Some(a));
    }

    #[test]
    fn degrees_add(a in poly_strategy(2, 3, 3), b in poly_strategy(2, 3, 3)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assert_eq!(a.mul(&b, 3).degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
    }
}

#[test]
fn solve_linear_matches_scan() {
    for n in 2..=30u64 {
        let r = RingSpec::integers_mod(n).unwrap();
        for b in 0..n {
            for a in 0..n {
                let scan: Vec<RingElement> = (0..n).filter(|x| b * x % n == a).map(RingElement::Mod).collect();
                let got = r.solve_linear(&RingElement::Mod(b), &RingElement::Mod(a)).unwrap();
                assert_eq!(got, scan, "Z/{n}: {b} x = {a}");
            }
        }
    }
}

#[test]
fn units_and_nilpotents_are_closed() {
    for n in 2..=30u64 {
        let r = RingSpec::integers_mod(n).unwrap();
        let all = r.elements().unwrap();
        for a in &all {
            for b in &all {
                let ab = r.mul(a, b).unwrap();
                if r.is_unit(a) && r.is_unit(b) {
                    assert!(r.is_unit(&ab), "Z/{n}: {a:?} {b:?}");
                }
                if r.is_nilpotent(a) {
                    assert!(r.is_nilpotent(&ab), "Z/{n}: {a:?} {b:?}");
                }
            }
        }
    }
}

fn check_hom(hom: &RingHom, sample: impl Fn(u64) -> RingElement) {
    let (src, tgt) = (hom.source(), hom.target());
    assert_eq!(hom.apply(&src.one()).unwrap(), tgt.one());
    for i in 0..500u64 {
        let (a, b) = (sample(2 * i), sample(2 * i + 1));
        let (fa, fb) = (hom.apply(&a).unwrap(), hom.apply(&b).unwrap());
        assert_eq!(hom.apply(&src.add(&a, &b).unwrap()).unwrap(), tgt.add(&fa, &fb).unwrap());
        assert_eq!(hom.apply(&src.mul(&a, &b).unwrap()).unwrap(), tgt.mul(&fa, &fb).unwrap());
    }
}

#[test]
fn homomorphisms_preserve_operations() {
    use rand::{Rng, SeedableRng};
    let rng = std::cell::RefCell::new(rand_chacha::ChaCha8Rng::seed_from_u64(7));

    check_hom(&RingHom::quotient(12).unwrap(), |_| RingElement::int(rng.borrow_mut().gen_range(-1000..1000)));

    let src = ring("GF(2)[x,y]");
    let pool = all_polys(&src, 2);
    let pick = |_| pool[rng.borrow_mut().gen_range(0..pool.len())].clone();
    check_hom(&RingHom::eval_var_to_zero(src.as_poly_ring().unwrap(), "y").unwrap(), pick);
    let tgt = ring("GF(2)[x,y,z]");
    check_hom(&RingHom::inclusion(src.as_poly_ring().unwrap(), tgt.as_poly_ring().unwrap()).unwrap(), pick);

    let prod = ring("(Z/6)x(GF(5))");
    let elems = prod.elements().unwrap();
    let pick = |_| elems[rng.borrow_mut().gen_range(0..elems.len())].clone();
    check_hom(&RingHom::projection_left(&prod).unwrap(), pick);
    check_hom(&RingHom::projection_right(&prod).unwrap(), pick);
}

// subspace

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn span_ignores_generator_order(gens in prop::collection::vec(poly_strategy(2, 3, 2), 0..5), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let r = ring("GF(3)[x,y]");
        let mut shuffled = gens.clone();
        shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(span_of(&r, 2, &gens), span_of(&r, 2, &shuffled));
    }

    #[test]
    fn sum_is_the_set_of_sums(f in prop::collection::vec(poly_strategy(1, 2, 4), 0..3),
                              g in prop::collection::vec(poly_strategy(1, 2, 4), 0..3)) {
        let r = ring("GF(2)[x]");
        let (f, g) = (span_of(&r, 4, &f), span_of(&r, 4, &g));
        let fs = f.elements().unwrap();
        let gs = g.elements().unwrap();
        let sums: BTreeSet<RingElement> = fs.iter().flat_map(|a| gs.iter().map(|b| r.add(a, b).unwrap())).collect();
        let s = f.sum(&g).unwrap();
        for x in all_polys(&r, 4) {
            prop_assert_eq!(s.contains(&x).unwrap(), sums.contains(&x));
        }
        let i = f.intersect(&g).unwrap();
        prop_assert!(i.is_subset_of(&f).unwrap() && i.is_subset_of(&g).unwrap());
        prop_assert!(f.is_subset_of(&s).unwrap() && g.is_subset_of(&s).unwrap());
        let fs: BTreeSet<RingElement> = fs.into_iter().collect();
        let both: BTreeSet<RingElement> = gs.into_iter().filter(|x| fs.contains(x)).collect();
        prop_assert_eq!(i.elements().unwrap().into_iter().collect::<BTreeSet<_>>(), both);
    }

    #[test]
    fn mul_preimage_matches_scan_gf2(gens in prop::collection::vec(poly_strategy(1, 2, 4), 0..4), d in 1u32..=4) {
        check_mul_preimage("GF(2)[x]", d, &gens);
    }

    #[test]
    fn mul_preimage_matches_scan_gf3(gens in prop::collection::vec(poly_strategy(1, 3, 4), 0..4), d in 1u32..=4) {
        check_mul_preimage("GF(3)[x]", d, &gens);
    }
}

fn check_mul_preimage(name: &str, d: u32, gens: &[Poly]) {
    let r = ring(name);
    let p = r.as_poly_ring().unwrap().characteristic();
    let gens: Vec<Poly> = gens.iter().filter(|g| g.degree().map_or(true, |k| k <= d)).cloned().collect();
    let f = span_of(&r, d, &gens);
    for w in all_polys(&r, 3).into_iter().filter(|w| !r.is_zero(w)) {
        let dw = r.degree(&w).unwrap().unwrap();
        let pre = f.mul_preimage(&w).unwrap();
        let scan: BTreeSet<RingElement> = if dw > d {
            BTreeSet::from([r.zero()])
        } else {
            all_polys(&r, d - dw).into_iter().filter(|x| f.contains(&r.mul(&w, x).unwrap()).unwrap()).collect()
        };
        let got: BTreeSet<RingElement> = pre.elements().unwrap().into_iter().collect();
        assert_eq!(got, scan, "GF({p})[x], d = {d}, w = {}", r.format(&w));
    }
}

// factroid

#[test]
fn closure_matches_oracle_on_singletons() {
    for (name, d, specs) in [("GF(2)[x]", 3u32, &["reg", "evendeg"][..]), ("GF(2)[x,y]", 2, &["reg", "gen:{x;y+1}"][..])] {
        let r = ring(name);
        let u = Universe::polynomials(r.as_poly_ring().unwrap(), d).unwrap();
        for &spec in specs {
            let w = MultSet::parse(&r, spec).unwrap();
            for i in 0..u.size() {
                let g = u.element(i);
                let engine = closure(&r, std::slice::from_ref(&g), &w, None, false).unwrap().result;
                let naive = naive_closure(&u, std::slice::from_ref(&g), &w).unwrap();
                assert_eq!(indices(&u, &engine), naive, "{name}, {spec}: {}", r.format(&g));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn closure_is_a_factroid_within_the_degree_bound(gens in prop::collection::vec(poly_strategy(2, 3, 2), 1..3)) {
        let r = ring("GF(3)[x,y]");
        let w = MultSet::reg(&r);
        let s: Vec<RingElement> = gens.into_iter().map(RingElement::Poly).collect();
        let top = s.iter().filter_map(|e| r.degree(e).unwrap()).max().unwrap_or(0);
        let c = closure(&r, &s, &w, None, false).unwrap().result;
        prop_assert!(c.max_degree().unwrap_or(0) <= top);
        prop_assert!(is_factroid(&c, &w).unwrap());
        for x in &s {
            prop_assert!(c.contains(x).unwrap());
        }
    }
}

// oracle

#[test]
fn enumerated_factroids_are_closed_under_intersection() {
    let budget = EnumerationBudget::default();
    let cases: [(&str, u32, &str); 4] =
        [("GF(2)[x]", 3, "evendeg"), ("GF(2)[x,y]", 1, "reg"), ("Z/12", 0, "units"), ("(Z/4)x(GF(2))", 0, "reg")];
    for (name, d, spec) in cases {
        let r = ring(name);
        let u = Universe::new(&r, d).unwrap();
        let w = MultSet::parse(&r, spec).unwrap();
        let all = enumerate_factroids(&u, &w, &budget).unwrap();
        let set: BTreeSet<&Vec<usize>> = all.iter().collect();
        for a in &all {
            assert!(is_factroid_set(&u, a, &w));
            for b in &all {
                let meet: Vec<usize> = a.iter().copied().filter(|i| b.binary_search(i).is_ok()).collect();
                assert!(set.contains(&meet), "{name}: meet of {a:?} and {b:?}");
            }
        }
    }
}

#[test]
fn enumerated_factroids_have_w_inside_w_of() {
    let budget = EnumerationBudget::default();
    for (name, d, spec) in [("GF(2)[x]", 3u32, "evendeg"), ("GF(3)[x]", 2, "reg"), ("Z/12", 0, "units"), ("Z/8", 0, "reg")] {
        let r = ring(name);
        let u = Universe::new(&r, d).unwrap();
        let w = MultSet::parse(&r, spec).unwrap();
        for s in enumerate_factroids(&u, &w, &budget).unwrap() {
            let f = SubgroupRep::generated(&r, &u.elements_of(&s), Some(d)).unwrap();
            let report = w_of(&f).unwrap();
            let members: Vec<RingElement> = match &report {
                WOfReport::Graded { .. } => {
                    let pr = r.as_poly_ring().unwrap();
                    monic_polys_up_to(pr.nvars(), pr.characteristic(), d)
                        .unwrap()
                        .into_iter()
                        .map(RingElement::Poly)
                        .filter(|m| w.contains_associate(m))
                        .collect()
                }
                _ => w.members().unwrap(),
            };
            for m in members {
                assert!(report.contains(&m), "{name}: {} missing from W({s:?})", r.format(&m));
            }
        }
    }
}

// regular_egyptian

proptest! {
    #[test]
    fn greedy_verifies_and_increases(b in 1i64..80, q in 1i64..400, distinct in any::<bool>()) {
        let a = if distinct { q % (3 * b) + 1 } else { q };
        let z = RingSpec::Integers;
        let wit = greedy_unit_fractions(&BigInt::from(a), &BigInt::from(b), distinct).unwrap();
        prop_assert!(witness_verify(&z, &wit).unwrap());
        let ds: Vec<BigInt> = wit.denominators.iter().map(|d| d.as_int().unwrap().clone()).collect();
        let tail: Vec<&BigInt> = ds.iter().skip_while(|d| !distinct && **d == BigInt::from(1)).collect();
        prop_assert!(tail.windows(2).all(|p| p[0] < p[1]), "{:?}", ds);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn span_members_have_multiplier_one(gens in prop::collection::vec(poly_strategy(2, 2, 2), 1..3), pick in any::<u64>()) {
        let r = ring("GF(2)[x,y]");
        let w = MultSet::reg(&r);
        let s: Vec<RingElement> = gens.into_iter().map(RingElement::Poly).collect();
        let c = closure(&r, &s, &w, None, false).unwrap().result;
        let elems = c.elements().unwrap();
        let x = &elems[(pick % elems.len() as u64) as usize];
        let m = g_membership(&r, x, &s, &w, 1).unwrap();
        prop_assert_eq!(m.witness(), Some(&r.one()));
    }
}

#[test]
fn unit_multipliers_are_regular() {
    for name in ["Z/12", "Z/9", "GF(5)", "(Z/4)x(GF(3))"] {
        let r = ring(name);
        let w = MultSet::reg(&r);
        let units = r.units().unwrap();
        for g in r.elements().unwrap() {
            let f = closure(&r, std::slice::from_ref(&g), &w, None, false).unwrap().result;
            assert!(t_regular_check(&f, &units, &w).unwrap().holds, "{name}: {g:?}");
        }
    }
    for name in ["GF(3)[x]", "GF(2)[x,y]"] {
        let r = ring(name);
        let w = MultSet::reg(&r);
        let units = r.units().unwrap();
        for g in all_polys(&r, 2) {
            let f = closure(&r, std::slice::from_ref(&g), &w, Some(2), false).unwrap().result;
            assert!(t_regular_check(&f, &units, &w).unwrap().holds, "{name}: {}", r.format(&g));
        }
    }
}

// classify

#[test]
fn local_rings_are_their_own_sublocalization() {
    for name in ["Z/4", "Z/8", "Z/9", "Z/25", "Z/27", "GF(2)", "GF(7)"] {
        let r = ring(name);
        assert!(r.is_local());
        assert!(sublocalizable_check(&r).unwrap().holds, "{name}");
        let s = sublocalization(&r).unwrap();
        assert_eq!(s.cardinality(), Some(r.size().unwrap().into()), "{name}");
    }
}

#[test]
fn unit_additive_rings_are_sublocalizable() {
    for n in 2..=100u64 {
        let r = RingSpec::integers_mod(n).unwrap();
        if unit_additive_check(&r).unwrap().holds {
            assert!(sublocalizable_check(&r).unwrap().holds, "Z/{n}");
        }
    }
}

#[test]
fn euclidean_factroids_match_enumeration() {
    let budget = EnumerationBudget::default();
    for (p, d) in [(2u64, 3u32), (2, 5), (3, 2), (5, 1)] {
        let r = ring(&format!("GF({p})[x]"));
        let u = Universe::polynomials(r.as_poly_ring().unwrap(), d).unwrap();
        let found: BTreeSet<Vec<usize>> = enumerate_factroids(&u, &MultSet::reg(&r), &budget).unwrap().into_iter().collect();
        let listed: BTreeSet<Vec<usize>> = euclidean_factroids(&r, d).unwrap().iter().map(|f| indices(&u, f)).collect();
        assert_eq!(found.len(), d as usize + 2);
        assert_eq!(found, listed, "GF({p})[x], d = {d}");
    }
}

#[test]
fn factroids_of_field_products_are_products() {
    let budget = EnumerationBudget::default();
    for q in [2u64, 3, 5] {
        for q2 in [2u64, 3, 5] {
            if (q, q2) == (2, 2) {
                continue;
            }
            let r = ring(&format!("(GF({q}))x(GF({q2}))"));
            let u = Universe::finite(&r).unwrap();
            let all = enumerate_factroids(&u, &MultSet::reg(&r), &budget).unwrap();
            assert_eq!(all.len(), 4, "F{q} x F{q2}");
            for s in all {
                let f = SubgroupRep::generated(&r, &u.elements_of(&s), None).unwrap();
                assert!(product_structure(&f).unwrap().is_product, "F{q} x F{q2}: {s:?}");
            }
        }
    }
}

#[test]
fn parsed_examples_round_trip() {
    let r = ring("GF(3)[x,y]");
    for text in ["2*x^2*y + x + 1", "y^3 - x", "0", "-1"] {
        let e = parse_element(&r, text).unwrap();
        assert_eq!(parse_element(&r, &r.format(&e)).unwrap(), e, "{text}");
    }
}

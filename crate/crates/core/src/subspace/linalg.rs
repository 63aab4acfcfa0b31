//! Dense vectors and reduced row-echelon forms over a prime field.
//!
//! Over GF(2) coordinates are packed 64 to a word and row operations are
//! word-wise XORs; other characteristics use one word per coordinate.

use std::collections::HashMap;

use crate::rings::modular::{add_mod, inv_mod, mul_mod, neg_mod};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FpVec {
    p: u64,
    len: usize,
    data: Vec<u64>,
}

impl FpVec {
    pub fn zero(p: u64, len: usize) -> Self {
        let words = if p == 2 { len.div_ceil(64) } else { len };
        Self { p, len, data: vec![0; words] }
    }

    pub fn unit(p: u64, len: usize, i: usize) -> Self {
        let mut v = Self::zero(p, len);
        v.set(i, 1);
        v
    }

    pub fn from_coeffs(p: u64, coeffs: &[u64]) -> Self {
        let mut v = Self::zero(p, coeffs.len());
        for (i, &c) in coeffs.iter().enumerate() {
            v.set(i, c % p);
        }
        v
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> u64 {
        debug_assert!(i < self.len);
        if self.p == 2 {
            (self.data[i / 64] >> (i % 64)) & 1
        } else {
            self.data[i]
        }
    }

    pub fn set(&mut self, i: usize, c: u64) {
        debug_assert!(i < self.len);
        if self.p == 2 {
            let bit = 1u64 << (i % 64);
            if c & 1 == 1 {
                self.data[i / 64] |= bit;
            } else {
                self.data[i / 64] &= !bit;
            }
        } else {
            self.data[i] = c % self.p;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// Index of the highest nonzero coordinate.
    pub fn pivot(&self) -> Option<usize> {
        if self.p == 2 {
            self.data
                .iter()
                .enumerate()
                .rev()
                .find(|(_, w)| **w != 0)
                .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
        } else {
            self.data.iter().rposition(|&c| c != 0)
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &FpVec, c: u64) {
        debug_assert_eq!(self.len, other.len);
        let c = c % self.p;
        if c == 0 {
            return;
        }
        if self.p == 2 {
            for (a, b) in self.data.iter_mut().zip(&other.data) {
                *a ^= b;
            }
        } else {
            for (a, b) in self.data.iter_mut().zip(&other.data) {
                if *b != 0 {
                    *a = add_mod(*a, mul_mod(*b, c, self.p), self.p);
                }
            }
        }
    }

    pub fn scale(&mut self, c: u64) {
        if self.p == 2 {
            if c % 2 == 0 {
                self.data.iter_mut().for_each(|w| *w = 0);
            }
        } else {
            for a in self.data.iter_mut() {
                *a = mul_mod(*a, c, self.p);
            }
        }
    }

    /// Nonzero coordinates as `(index, coefficient)`, ascending.
    pub fn nonzero(&self) -> Vec<(usize, u64)> {
        (0..self.len).map(|i| (i, self.get(i))).filter(|(_, c)| *c != 0).collect()
    }

    pub fn coeffs(&self) -> Vec<u64> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    /// Copy with a different length, truncating or zero-padding.
    pub fn resized(&self, len: usize) -> Self {
        let mut v = Self::zero(self.p, len);
        for (i, c) in self.nonzero() {
            if i < len {
                v.set(i, c);
            }
        }
        v
    }
}

/// A subspace of `F_p^len` in reduced row-echelon form. Each row's pivot is
/// its highest nonzero coordinate, normalized to 1 and zero in every other
/// row; rows are sorted by ascending pivot. The form is unique, so equality
/// of subspaces is equality of the structs.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Echelon {
    p: u64,
    len: usize,
    rows: Vec<FpVec>,
}

impl Echelon {
    pub fn new(p: u64, len: usize) -> Self {
        Self { p, len, rows: Vec::new() }
    }

    pub fn full(p: u64, len: usize) -> Self {
        Self {
            p,
            len,
            rows: (0..len).map(|i| FpVec::unit(p, len, i)).collect(),
        }
    }

    pub fn from_vectors<'a, I: IntoIterator<Item = &'a FpVec>>(p: u64, len: usize, vs: I) -> Self {
        let mut e = Self::new(p, len);
        for v in vs {
            e.insert(v.clone());
        }
        e
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[FpVec] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.pivot().expect("rows are nonzero")).collect()
    }

    /// `v` minus its projection onto the row space along the pivots.
    pub fn reduce(&self, v: &FpVec) -> FpVec {
        let mut out = v.clone();
        for row in self.rows.iter().rev() {
            let piv = row.pivot().expect("rows are nonzero");
            let c = out.get(piv);
            if c != 0 {
                out.add_scaled(row, neg_mod(c, self.p));
            }
        }
        out
    }

    pub fn contains(&self, v: &FpVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the spanning set; returns whether the rank grew.
    pub fn insert(&mut self, v: FpVec) -> bool {
        debug_assert_eq!(v.len(), self.len);
        let mut r = self.reduce(&v);
        let Some(piv) = r.pivot() else {
            return false;
        };
        let inv = inv_mod(r.get(piv), self.p).expect("nonzero field element");
        r.scale(inv);
        for row in self.rows.iter_mut() {
            let c = row.get(piv);
            if c != 0 {
                row.add_scaled(&r, neg_mod(c, self.p));
            }
        }
        let at = self
            .rows
            .partition_point(|row| row.pivot().expect("rows are nonzero") < piv);
        self.rows.insert(at, r);
        true
    }

    pub fn is_subspace_of(&self, other: &Echelon) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Echelon) -> Echelon {
        let mut out = self.clone();
        for r in &other.rows {
            out.insert(r.clone());
        }
        out
    }

    /// Intersection, as the image of the kernel of `F -> V/G`.
    pub fn intersect(&self, other: &Echelon) -> Echelon {
        let residues: Vec<FpVec> = self.rows.iter().map(|r| other.reduce(r)).collect();
        let mut out = Echelon::new(self.p, self.len);
        for combo in kernel_of_images(self.p, &residues) {
            let mut v = FpVec::zero(self.p, self.len);
            for (i, c) in combo.nonzero() {
                v.add_scaled(&self.rows[i], c);
            }
            out.insert(v);
        }
        out
    }

    /// Every vector of the subspace, in counter order over the rows.
    pub fn elements(&self) -> Vec<FpVec> {
        let mut out = vec![FpVec::zero(self.p, self.len)];
        for row in &self.rows {
            let mut next = Vec::with_capacity(out.len() * self.p as usize);
            for c in 0..self.p {
                for v in &out {
                    let mut w = v.clone();
                    w.add_scaled(row, c);
                    next.push(w);
                }
            }
            out = next;
        }
        out
    }
}

/// A basis of `{c : Σ c_j images[j] = 0}`, as coefficient vectors of length
/// `images.len()`.
pub fn kernel_of_images(p: u64, images: &[FpVec]) -> Vec<FpVec> {
    let n = images.len();
    let mut table: HashMap<usize, (FpVec, FpVec)> = HashMap::new();
    let mut kernel = Vec::new();
    for (j, img) in images.iter().enumerate() {
        let mut v = img.clone();
        let mut combo = FpVec::unit(p, n, j);
        loop {
            let Some(piv) = v.pivot() else {
                kernel.push(combo);
                break;
            };
            match table.get(&piv) {
                Some((row, row_combo)) => {
                    let c = mul_mod(v.get(piv), inv_mod(row.get(piv), p).expect("pivot"), p);
                    let neg = neg_mod(c, p);
                    v.add_scaled(row, neg);
                    combo.add_scaled(row_combo, neg);
                }
                None => {
                    table.insert(piv, (v, combo));
                    break;
                }
            }
        }
    }
    kernel
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn packed_pivot_and_xor() {
        let mut a = FpVec::zero(2, 130);
        a.set(129, 1);
        a.set(3, 1);
        assert_eq!(a.pivot(), Some(129));
        let b = a.clone();
        a.add_scaled(&b, 1);
        assert!(a.is_zero());
    }

    #[test]
    fn echelon_is_reduced() {
        let p = 3;
        let mut e = Echelon::new(p, 3);
        e.insert(FpVec::from_coeffs(p, &[1, 1, 1]));
        e.insert(FpVec::from_coeffs(p, &[2, 1, 0]));
        let rows: Vec<Vec<u64>> = e.rows().iter().map(FpVec::coeffs).collect();
        assert_eq!(rows, vec![vec![2, 1, 0], vec![2, 0, 1]]);
        assert!(e.contains(&FpVec::from_coeffs(p, &[0, 1, 2])));
        assert!(!e.contains(&FpVec::from_coeffs(p, &[1, 0, 0])));
    }

    #[test]
    fn intersection_of_planes() {
        let p = 2;
        let f = Echelon::from_vectors(p, 3, &[FpVec::from_coeffs(p, &[1, 0, 0]), FpVec::from_coeffs(p, &[0, 1, 0])]);
        let g = Echelon::from_vectors(p, 3, &[FpVec::from_coeffs(p, &[0, 1, 0]), FpVec::from_coeffs(p, &[0, 0, 1])]);
        let i = f.intersect(&g);
        assert_eq!(i, Echelon::from_vectors(p, 3, &[FpVec::from_coeffs(p, &[0, 1, 0])]));
    }

    fn vecs(p: u64, len: usize) -> impl Strategy<Value = Vec<FpVec>> {
        prop::collection::vec(prop::collection::vec(0..p, len), 0..5)
            .prop_map(move |rows| rows.iter().map(|r| FpVec::from_coeffs(p, r)).collect())
    }

    proptest! {
        #[test]
        fn normal_form_ignores_generator_order(mut vs in vecs(3, 4)) {
            let a = Echelon::from_vectors(3, 4, &vs);
            vs.reverse();
            let b = Echelon::from_vectors(3, 4, &vs);
            prop_assert_eq!(a, b);
        }

        #[test]
        fn intersection_matches_element_scan(us in vecs(2, 5), vs in vecs(2, 5)) {
            let f = Echelon::from_vectors(2, 5, &us);
            let g = Echelon::from_vectors(2, 5, &vs);
            let i = f.intersect(&g);
            let scanned: Vec<FpVec> = f.elements().into_iter().filter(|x| g.contains(x)).collect();
            prop_assert_eq!(1usize << i.rank(), scanned.len());
            prop_assert!(scanned.iter().all(|x| i.contains(x)));
        }

        #[test]
        fn kernel_vectors_annihilate(vs in vecs(5, 3)) {
            for combo in kernel_of_images(5, &vs) {
                let mut acc = FpVec::zero(5, 3);
                for (j, c) in combo.nonzero() {
                    acc.add_scaled(&vs[j], c);
                }
                prop_assert!(acc.is_zero());
            }
            let rank = Echelon::from_vectors(5, 3, &vs).rank();
            prop_assert_eq!(kernel_of_images(5, &vs).len(), vs.len() - rank);
        }
    }
}

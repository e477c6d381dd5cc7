//! Integer lattices in Hermite normal form, with exact membership.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Row-style HNF of the lattice spanned by some integer generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntLattice {
    pub dim: usize,
    /// Echelon rows: strictly increasing pivot columns, positive pivots,
    /// entries above each pivot reduced into [0, pivot).
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
}

fn combine(a: &[BigInt], ka: &BigInt, b: &[BigInt], kb: &BigInt) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| ka * x + kb * y).collect()
}

impl IntLattice {
    pub fn new(generators: &[Vec<BigInt>], dim: usize) -> Self {
        let mut pending: Vec<Vec<BigInt>> =
            generators.iter().filter(|g| g.iter().any(|x| !x.is_zero())).cloned().collect();
        for g in &pending {
            assert_eq!(g.len(), dim, "generator length");
        }
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        let mut pivots = Vec::new();
        for c in 0..dim {
            let (mut with, without): (Vec<_>, Vec<_>) = pending.into_iter().partition(|r| !r[c].is_zero());
            pending = without;
            let Some(mut piv) = with.pop() else { continue };
            for mut r in with {
                // extended gcd step keeps the pair unimodular
                let e = piv[c].extended_gcd(&r[c]);
                let (x, y) = (piv[c].clone() / &e.gcd, r[c].clone() / &e.gcd);
                let new_piv = combine(&piv, &e.x, &r, &e.y);
                r = combine(&r, &x, &piv, &-y);
                piv = new_piv;
                debug_assert!(r[c].is_zero());
                if r.iter().any(|v| !v.is_zero()) {
                    pending.push(r);
                }
            }
            if piv[c].is_negative() {
                piv.iter_mut().for_each(|v| *v = -v.clone());
            }
            for prev in rows.iter_mut() {
                let q = prev[c].div_floor(&piv[c]);
                if !q.is_zero() {
                    *prev = combine(prev, &BigInt::from(1), &piv, &-q);
                }
            }
            rows.push(piv);
            pivots.push(c);
        }
        IntLattice { dim, rows, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the echelon rows; zero remainder means membership.
    /// Also returns the coefficients on the HNF rows.
    pub fn reduce(&self, v: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
        assert_eq!(v.len(), self.dim);
        let mut rem = v.to_vec();
        let mut coords = Vec::with_capacity(self.rows.len());
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let q = rem[c].div_floor(&row[c]);
            if !q.is_zero() {
                rem = combine(&rem, &BigInt::from(1), row, &-q.clone());
            }
            coords.push(q);
        }
        (rem, coords)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).0.iter().all(Zero::is_zero)
    }
}

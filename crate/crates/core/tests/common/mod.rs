//! Independent oracles shared by the integration tests. Nothing here calls
//! the library routine it is meant to cross-check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Hook length formula for standard Young tableaux.
pub fn hook_count(parts: &[u32]) -> BigUint {
    let n: u32 = parts.iter().sum();
    let mut conj = vec![0u32; parts.first().copied().unwrap_or(0) as usize];
    for &r in parts {
        for c in conj.iter_mut().take(r as usize) {
            *c += 1;
        }
    }
    let mut den = BigUint::one();
    for (i, &r) in parts.iter().enumerate() {
        for (j, &cj) in conj.iter().enumerate().take(r as usize) {
            den *= BigUint::from(r - j as u32 + cj - i as u32 - 1);
        }
    }
    (1..=n).map(BigUint::from).product::<BigUint>() / den
}

/// Shifted standard tableaux: n!/Πλ_i! · Π_{i<j}(λ_i-λ_j)/(λ_i+λ_j).
pub fn shifted_count(parts: &[u32]) -> BigUint {
    let n: u32 = parts.iter().sum();
    let fact = |k: u32| -> BigRational { BigRational::from_integer((1..=k).map(BigInt::from).product()) };
    let mut x = fact(n);
    for &l in parts {
        x /= fact(l);
    }
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            x *= BigRational::new(BigInt::from(parts[i] - parts[j]), BigInt::from(parts[i] + parts[j]));
        }
    }
    assert!(x.is_integer());
    x.to_integer().to_biguint().unwrap()
}

/// Brute-force chain count: walks all box-addition sequences.
pub fn chains(parts: &[u32], strict: bool) -> u64 {
    fn go(cur: &mut Vec<u32>, target: &[u32], strict: bool) -> u64 {
        if cur.as_slice() == target {
            return 1;
        }
        let mut total = 0;
        for i in 0..=cur.len() {
            if i >= target.len() {
                break;
            }
            let next = if i == cur.len() { 1 } else { cur[i] + 1 };
            if next > target[i] {
                continue;
            }
            if i > 0 {
                let prev = cur[i - 1];
                if (strict && prev <= next) || (!strict && prev < next) {
                    continue;
                }
            }
            if i == cur.len() {
                cur.push(1);
            } else {
                cur[i] += 1;
            }
            total += go(cur, target, strict);
            if i == cur.len() - 1 && cur[i] == 1 {
                cur.pop();
            } else {
                cur[i] -= 1;
            }
        }
        total
    }
    go(&mut Vec::new(), parts, strict)
}

/// All partitions of n (strict or not) as raw part lists.
pub fn raw_partitions(n: u32, strict: bool) -> Vec<Vec<u32>> {
    fn go(rem: u32, max: u32, strict: bool, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for k in 1..=max.min(rem) {
            cur.push(k);
            go(rem - k, if strict { k - 1 } else { k }, strict, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, strict, &mut Vec::new(), &mut out);
    out
}

/// p-bar removals acting directly on parts: subtract p from a part when the
/// result is absent (dropping zeros), or delete two parts summing to p.
pub fn bar_moves_on_parts(parts: &[u32], p: u32) -> Vec<Vec<u32>> {
    let set: BTreeSet<u32> = parts.iter().copied().collect();
    let mut out = Vec::new();
    for &x in parts {
        if x >= p && (x == p || !set.contains(&(x - p))) {
            let mut s = set.clone();
            s.remove(&x);
            if x > p {
                s.insert(x - p);
            }
            out.push(s.into_iter().rev().collect());
        }
    }
    for &x in parts {
        if x < p && 2 * x > p && set.contains(&(p - x)) {
            let mut s = set.clone();
            s.remove(&x);
            s.remove(&(p - x));
            out.push(s.into_iter().rev().collect());
        }
    }
    out
}

/// Rational solve of Σ x_g g = t with independent generators; returns the
/// unique solution, or None if t is outside the rational span.
pub fn rational_solve(gens: &[Vec<BigInt>], target: &[BigInt]) -> Option<Vec<BigRational>> {
    let m = gens.len();
    let n = target.len();
    // augmented system: rows = coordinates, columns = generators + rhs
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = gens.iter().map(|g| BigRational::from_integer(g[i].clone())).collect();
            row.push(BigRational::from_integer(target[i].clone()));
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivot_cols = Vec::new();
    for c in 0..m {
        let Some(r) = (pivot_row..n).find(|&r| !a[r][c].is_zero()) else {
            panic!("generators are dependent; the naive oracle needs an independent set");
        };
        a.swap(pivot_row, r);
        let inv = a[pivot_row][c].recip();
        for v in a[pivot_row].iter_mut() {
            *v = &*v * &inv;
        }
        for r2 in 0..n {
            if r2 != pivot_row && !a[r2][c].is_zero() {
                let f = a[r2][c].clone();
                let piv = a[pivot_row].clone();
                for (x, y) in a[r2].iter_mut().zip(&piv) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivot_cols.push(c);
        pivot_row += 1;
    }
    if a[pivot_row..].iter().any(|row| !row[m].is_zero()) {
        return None;
    }
    Some((0..m).map(|k| a[k][m].clone()).collect())
}

/// Membership by rational solve plus integrality.
pub fn rational_member(gens: &[Vec<BigInt>], target: &[BigInt]) -> bool {
    match rational_solve(gens, target) {
        Some(x) => x.iter().all(|q| q.is_integer()),
        None => false,
    }
}

pub fn factorial(n: u32) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

pub fn nonneg(x: &BigInt) -> bool {
    !x.is_negative()
}

//! The p̄-abacus: bead displays of strict partitions, p-bar moves,
//! bar-cores, quotients on the Rouquier domain and block enumeration.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::par::Exec;
use crate::partitions::{path_count, Dir, Kind, Partition};

/// ℓ = (p-1)/2.
pub fn ell(p: u32) -> u32 {
    (p - 1) / 2
}

pub fn check_p(p: u32) -> Result<()> {
    let prime = p >= 2 && (2..p).take_while(|k| k * k <= p).all(|k| !p.is_multiple_of(k));
    if !prime || p == 2 {
        return Err(Error::Domain(format!("p = {p} is not an odd prime")));
    }
    Ok(())
}

/// Bead display: one bead at position λ_k for every part, position 0 empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abacus {
    pub p: u32,
    pub beads: BTreeSet<u32>,
}

impl Abacus {
    pub fn new(lambda: &Partition, p: u32) -> Result<Self> {
        check_p(p)?;
        if !lambda.is_strict() {
            return Err(Error::Domain(format!("{lambda} is not strict")));
        }
        Ok(Abacus { p, beads: lambda.parts().iter().copied().collect() })
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_unsorted(self.beads.iter().copied().collect())
    }

    pub fn occupied(&self, pos: u32) -> bool {
        self.beads.contains(&pos)
    }

    /// Beads on runner `i`, descending.
    pub fn runner(&self, i: u32) -> Vec<u32> {
        self.beads.iter().rev().copied().filter(|r| r % self.p == i).collect()
    }

    pub fn runner_count(&self, i: u32) -> usize {
        self.beads.iter().filter(|r| *r % self.p == i).count()
    }

    fn with(&self, remove: &[u32], add: &[u32]) -> Partition {
        let mut b = self.beads.clone();
        for r in remove {
            b.remove(r);
        }
        b.extend(add.iter().copied());
        Partition::from_unsorted(b.into_iter().collect())
    }

    /// All single p-bar removals.
    pub fn bar_removals(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for j in 0..=ell(self.p) {
            out.extend(self.moves(j, Dir::Remove));
        }
        out
    }

    /// Moves attached to runner pair {j, p-j}.
    pub fn moves(&self, j: u32, dir: Dir) -> Vec<Partition> {
        let p = self.p;
        let runners: Vec<u32> = if j == 0 { vec![0] } else { vec![j, p - j] };
        let mut out = BTreeSet::new();
        for &i in &runners {
            for r in self.runner(i) {
                match dir {
                    Dir::Add => {
                        if !self.occupied(r + p) {
                            out.insert(self.with(&[r], &[r + p]));
                        }
                    }
                    Dir::Remove => {
                        if r == p {
                            out.insert(self.with(&[r], &[]));
                        } else if r > p && !self.occupied(r - p) {
                            out.insert(self.with(&[r], &[r - p]));
                        }
                    }
                }
            }
        }
        match (j, dir) {
            (0, Dir::Add) => {
                if !self.occupied(p) {
                    out.insert(self.with(&[], &[p]));
                }
            }
            (0, Dir::Remove) => {}
            (_, Dir::Add) => {
                if !self.occupied(j) && !self.occupied(p - j) {
                    out.insert(self.with(&[], &[j, p - j]));
                }
            }
            (_, Dir::Remove) => {
                if self.occupied(j) && self.occupied(p - j) {
                    out.insert(self.with(&[j, p - j], &[]));
                }
            }
        }
        out.into_iter().collect()
    }
}

/// Bar-core and bar-weight by exhaustive removal.
pub fn core_weight(lambda: &Partition, p: u32) -> Result<(Partition, u32)> {
    let mut cur = lambda.clone();
    loop {
        let ab = Abacus::new(&cur, p)?;
        match ab.bar_removals().into_iter().next() {
            Some(next) => cur = next,
            None => break,
        }
    }
    let w = (lambda.size() - cur.size()) / p;
    Ok((cur, w))
}

pub fn is_bar_core(lambda: &Partition, p: u32) -> Result<bool> {
    Ok(Abacus::new(lambda, p)?.bar_removals().is_empty())
}

/// P₀^j(λ)^+ (add) or P₀^j(λ)^- (remove), canonical order.
pub fn neighbors(lambda: &Partition, p: u32, j: u32, dir: Dir) -> Result<Vec<Partition>> {
    if j > ell(p) {
        return Err(Error::Domain(format!("runner index {j} exceeds ℓ = {}", ell(p))));
    }
    let mut v = Abacus::new(lambda, p)?.moves(j, dir);
    v.sort_by(|a, b| b.cmp(a));
    Ok(v)
}

/// P₀^{≤k}(λ)^±.
pub fn neighbors_upto(lambda: &Partition, p: u32, k: u32, dir: Dir) -> Result<Vec<(u32, Partition)>> {
    let mut out = Vec::new();
    for i in 0..=k {
        for mu in neighbors(lambda, p, i, dir)? {
            out.push((i, mu));
        }
    }
    Ok(out)
}

/// Quotient components, index 0 strict and 1..=ℓ ordinary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BarQuotient {
    pub parts: Vec<Partition>,
}

impl BarQuotient {
    pub fn sizes(&self) -> Vec<u32> {
        self.parts.iter().map(Partition::size).collect()
    }

    pub fn weight(&self) -> u32 {
        self.sizes().iter().sum()
    }
}

pub fn quotient(lambda: &Partition, p: u32) -> Result<BarQuotient> {
    let (core, w) = core_weight(lambda, p)?;
    quotient_over(lambda, &core, w, p)
}

/// Quotient when the core is already known.
pub fn quotient_over(lambda: &Partition, core: &Partition, w: u32, p: u32) -> Result<BarQuotient> {
    let l = ell(p);
    let ab = Abacus::new(lambda, p)?;
    let cab = Abacus::new(core, p)?;
    if (l + 1..p).any(|i| ab.runner_count(i) > 0) {
        return Err(Error::Domain(format!("{lambda}: runners above ℓ are occupied; quotient not defined here")));
    }
    if cab.runner_count(0) > 0 {
        return Err(Error::Domain(format!("core {core} has beads on runner 0")));
    }
    let mut parts = Vec::with_capacity(l as usize + 1);
    parts.push(Partition::from_unsorted(ab.runner(0).iter().map(|r| r / p).collect()));
    for i in 1..=l {
        let beads = ab.runner(i);
        let m = beads.len();
        if m != cab.runner_count(i) {
            return Err(Error::Domain(format!("{lambda}: runner {i} bead count differs from core")));
        }
        let q: Vec<u32> = beads.iter().enumerate().map(|(k, r)| r / p - (m - 1 - k) as u32).collect();
        parts.push(Partition::from_unsorted(q));
    }
    let bq = BarQuotient { parts };
    if bq.weight() != w {
        return Err(Error::Domain(format!("{lambda}: quotient sizes do not add up to the weight")));
    }
    Ok(bq)
}

/// P₀(ρ,d), or P₀(ρ,d̲) when a composition is given.
pub fn block_enum(rho: &Partition, p: u32, d: u32, dcomp: Option<&[u32]>) -> Result<Vec<Partition>> {
    block_enum_with(rho, p, d, dcomp, Exec::default())
}

pub fn block_enum_with(rho: &Partition, p: u32, d: u32, dcomp: Option<&[u32]>, exec: Exec) -> Result<Vec<Partition>> {
    if !is_bar_core(rho, p)? {
        return Err(Error::Domain(format!("{rho} is not a {p}-bar-core")));
    }
    if let Some(dc) = dcomp {
        check_composition(dc, p, d)?;
    }
    let l = ell(p);
    let mut layer = vec![rho.clone()];
    for _ in 0..d {
        let next: BTreeSet<Partition> = exec
            .flat_map(&layer, |lam| {
                let ab = Abacus::new(lam, p).expect("validated");
                (0..=l).flat_map(|j| ab.moves(j, Dir::Add)).collect()
            })
            .into_iter()
            .collect();
        layer = next.into_iter().collect();
    }
    if let Some(dc) = dcomp {
        let sizes = exec.map(&layer, |lam| quotient_over(lam, rho, d, p).map(|q| q.sizes()));
        let mut kept = Vec::new();
        for (lam, s) in layer.into_iter().zip(sizes) {
            if s? == dc {
                kept.push(lam);
            }
        }
        layer = kept;
    }
    layer.sort_by(|a, b| b.cmp(a));
    Ok(layer)
}

pub fn check_composition(dc: &[u32], p: u32, d: u32) -> Result<()> {
    if dc.len() != ell(p) as usize + 1 {
        return Err(Error::Domain(format!("composition {dc:?} must have ℓ+1 = {} entries", ell(p) + 1)));
    }
    if dc.iter().sum::<u32>() != d {
        return Err(Error::Domain(format!("composition {dc:?} does not sum to {d}")));
    }
    Ok(())
}

/// All compositions of `d` into `parts` nonnegative entries, lexicographic.
pub fn compositions(d: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in compositions(d - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// K(λ) = K'(λ⁽⁰⁾) · Π K(λ⁽ⁱ⁾).
pub fn k_product(lambda: &Partition, p: u32) -> Result<BigUint> {
    Ok(k_of_quotient(&quotient(lambda, p)?))
}

pub fn k_of_quotient(q: &BarQuotient) -> BigUint {
    q.parts
        .iter()
        .enumerate()
        .map(|(i, part)| path_count(part, if i == 0 { Kind::Strict } else { Kind::Ordinary }))
        .product()
}

//! d-Rouquier bar-cores and the strip shape of a one-bar extension.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::abacus::{check_p, ell, is_bar_core, neighbors, Abacus};
use crate::error::{Error, Result};
use crate::partitions::{Dir, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RouquierCore {
    pub core: Partition,
    pub p: u32,
    pub d: u32,
    pub odd: bool,
}

impl RouquierCore {
    pub fn new(core: Partition, p: u32, d: u32) -> Result<Self> {
        if !is_rouquier(&core, p, d)? {
            return Err(Error::Domain(format!("{core} is not {d}-Rouquier for p = {p}")));
        }
        let odd = core.is_odd();
        Ok(RouquierCore { core, p, d, odd })
    }
}

/// Bead counts on runners 1..=ℓ.
fn runner_counts(ab: &Abacus) -> Vec<i64> {
    (1..=ell(ab.p)).map(|i| ab.runner_count(i) as i64).collect()
}

pub fn is_rouquier(rho: &Partition, p: u32, d: u32) -> Result<bool> {
    if !is_bar_core(rho, p)? {
        return Err(Error::Domain(format!("{rho} is not a {p}-bar-core")));
    }
    let c = runner_counts(&Abacus::new(rho, p)?);
    let d = d as i64;
    Ok(c[0] >= d && c.windows(2).all(|w| w[1] >= w[0] + d - 1))
}

/// The `count` smallest d-Rouquier cores of the given parity among the
/// minimal filling with extra beads stacked on runner ℓ.
pub fn generate(p: u32, d: u32, odd: bool, count: usize) -> Result<Vec<Partition>> {
    check_p(p)?;
    if d == 0 {
        return Err(Error::Domain("d must be positive".into()));
    }
    let l = ell(p);
    let mut beads = BTreeSet::new();
    for j in 1..=l {
        let m = d + (j - 1) * (d - 1);
        beads.extend((0..m).map(|t| j + p * t));
    }
    let mut top = beads.iter().rev().find(|r| *r % p == l).copied().expect("runner ℓ nonempty");
    let mut out = Vec::with_capacity(count);
    loop {
        let rho = Partition::from_unsorted(beads.iter().copied().collect());
        if rho.is_odd() == odd {
            out.push(rho);
            if out.len() == count {
                return Ok(out);
            }
        }
        top += p;
        beads.insert(top);
    }
}

/// Skew boxes of a one-bar extension and their strip dimensions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StripCertificate {
    pub runner: u32,
    pub boxes: Vec<(u32, u32)>,
    /// Length of the top row.
    pub arm: u32,
    /// Length of the column through the leftmost box of that row.
    pub leg: u32,
}

pub fn skew_boxes(lambda: &Partition, mu: &Partition) -> Result<Vec<(u32, u32)>> {
    if !lambda.contains(mu) {
        return Err(Error::Shape(format!("{mu} is not contained in {lambda}")));
    }
    let inner: BTreeSet<_> = mu.shifted_boxes().into_iter().collect();
    Ok(lambda.shifted_boxes().into_iter().filter(|b| !inner.contains(b)).collect())
}

pub fn strip_classify(lambda: &Partition, mu: &Partition, p: u32) -> Result<StripCertificate> {
    let l = ell(p);
    let boxes = skew_boxes(lambda, mu)?;
    let runner = (0..=l)
        .find(|&i| neighbors(mu, p, i, Dir::Add).map(|v| v.contains(lambda)).unwrap_or(false))
        .ok_or_else(|| Error::Shape(format!("{lambda} is not one p-bar above {mu}")))?;
    let top = boxes.iter().map(|b| b.0).min().unwrap_or(0);
    let row: Vec<_> = boxes.iter().filter(|b| b.0 == top).collect();
    let c0 = row.iter().map(|b| b.1).min().unwrap_or(0);
    let arm = row.len() as u32;
    let leg = boxes.iter().filter(|b| b.1 == c0).count() as u32;
    let mut expected: BTreeSet<(u32, u32)> = (c0..c0 + arm).map(|c| (top, c)).collect();
    expected.extend((top..top + leg).map(|r| (r, c0)));
    let actual: BTreeSet<_> = boxes.iter().copied().collect();
    if expected != actual || arm != l + runner + 1 || leg != l - runner + 1 {
        return Err(Error::Shape(format!(
            "{lambda} \\ {mu} is not the runner-{runner} strip (row {}, column {})",
            l + runner + 1,
            l - runner + 1
        )));
    }
    Ok(StripCertificate { runner, boxes, arm, leg })
}

//! Line Brauer trees A(ℓ) and B(ℓ), their Green walks, Heller translates
//! on walk characters, and the weight-one block labelings.

use std::fmt;

use serde::Serialize;

use crate::abacus::{ell, neighbors};
use crate::error::{Error, Result};
use crate::partitions::{Dir, Partition};
use crate::rouquier::is_rouquier;
use crate::sqrt2::Sqrt2Scalar;
use crate::supercharacters::{CharSpace, Label, RefLabel, RefinedVector, Sign, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TreeKind {
    A,
    B,
}

/// Tree nodes. `Plus/Minus/Center` live on B(ℓ); `Exc/Plain` on A(ℓ).
/// `Exc` stands for the pair χ₀⁺ + χ₀⁻ of the exceptional vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Node {
    Plus(u32),
    Minus(u32),
    Center,
    Exc,
    Plain(u32),
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Plus(i) => write!(f, "{i}+"),
            Node::Minus(i) => write!(f, "{i}-"),
            Node::Center => write!(f, "0"),
            Node::Exc => write!(f, "0+|0-"),
            Node::Plain(i) => write!(f, "{i}"),
        }
    }
}

impl std::str::FromStr for Node {
    type Err = Error;
    fn from_str(s: &str) -> Result<Node> {
        let bad = || Error::Domain(format!("bad node {s:?}"));
        let s = s.trim();
        if s == "0" {
            return Ok(Node::Center);
        }
        if s == "0+|0-" || s == "0*" || s == "exc" {
            return Ok(Node::Exc);
        }
        if let Some(n) = s.strip_suffix('+') {
            return n.parse().map(Node::Plus).map_err(|_| bad());
        }
        if let Some(n) = s.strip_suffix('-') {
            return n.parse().map(Node::Minus).map_err(|_| bad());
        }
        s.parse().map(Node::Plain).map_err(|_| bad())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BrauerTree {
    pub kind: TreeKind,
    pub ell: u32,
    /// Vertices along the path, end to end.
    pub nodes: Vec<Node>,
    /// Multiplicity of the exceptional vertex (1 if none).
    pub exceptional_multiplicity: u32,
}

impl BrauerTree {
    pub fn build(kind: TreeKind, ell: u32) -> Result<Self> {
        if ell == 0 {
            return Err(Error::Domain("ℓ must be at least 1".into()));
        }
        let (nodes, m) = match kind {
            TreeKind::B => {
                let mut v: Vec<Node> = (1..=ell).rev().map(Node::Plus).collect();
                v.push(Node::Center);
                v.extend((1..=ell).map(Node::Minus));
                (v, 1)
            }
            TreeKind::A => {
                let mut v = vec![Node::Exc];
                v.extend((1..=ell).map(Node::Plain));
                (v, 2)
            }
        };
        Ok(BrauerTree { kind, ell, nodes, exceptional_multiplicity: m })
    }

    pub fn edges(&self) -> Vec<(Node, Node)> {
        self.nodes.windows(2).map(|w| (w[0], w[1])).collect()
    }

    pub fn walk_len(&self) -> usize {
        match self.kind {
            TreeKind::B => 4 * self.ell as usize,
            TreeKind::A => 2 * self.ell as usize,
        }
    }

    /// Green walk from ℓ⁺ (B) or ℓ (A) to the far end and back.
    pub fn walk(&self) -> Vec<Node> {
        let n = self.nodes.len();
        match self.kind {
            TreeKind::B => {
                let mut w = self.nodes.clone();
                w.extend(self.nodes[1..n - 1].iter().rev());
                w
            }
            TreeKind::A => {
                let mut w: Vec<Node> = self.nodes.iter().rev().copied().collect();
                w.extend(self.nodes[1..n - 1].iter());
                w
            }
        }
    }

    /// Walk entry `n` steps after walk position `idx`.
    pub fn heller_at(&self, idx: usize, n: u64) -> Result<Node> {
        let w = self.walk();
        if idx >= w.len() {
            return Err(Error::Index(format!("walk position {idx} out of range 0..{}", w.len())));
        }
        Ok(w[((idx as u64 + n) % w.len() as u64) as usize])
    }

    /// Entries `n` steps after each occurrence of `start` on the walk.
    pub fn heller(&self, start: Node, n: u64) -> Result<Vec<Node>> {
        let w = self.walk();
        let hits: Vec<usize> = (0..w.len()).filter(|&k| w[k] == start).collect();
        if hits.is_empty() {
            return Err(Error::Index(format!("{start} is not on the walk of {:?}({})", self.kind, self.ell)));
        }
        hits.into_iter().map(|k| self.heller_at(k, n)).collect()
    }
}

/// A tree whose nodes carry characters of the weight-one block.
#[derive(Clone, Debug)]
pub struct LabeledTree {
    pub tree: BrauerTree,
    pub space: CharSpace,
    pub labels: Vec<(Node, Vec<RefLabel>)>,
}

impl LabeledTree {
    pub fn character(&self, node: Node) -> RefinedVector {
        let mut v = Vector::zero(self.space.clone());
        for (n, ls) in &self.labels {
            if *n == node {
                for l in ls {
                    v.add_term(l.clone(), &Sqrt2Scalar::int(1));
                }
            }
        }
        v
    }

    /// Projective characters: sums of the characters at the two ends of each edge.
    pub fn edge_characters(&self) -> Vec<RefinedVector> {
        self.tree
            .edges()
            .into_iter()
            .map(|(a, b)| self.character(a).add(&self.character(b)).expect("same space"))
            .collect()
    }
}

/// ρ^j: the one-slide extension of ρ on runner j.
pub fn rho_j(rho: &Partition, p: u32, j: u32) -> Result<Partition> {
    let v = neighbors(rho, p, j, Dir::Add)?;
    match v.as_slice() {
        [one] => Ok(one.clone()),
        _ => Err(Error::Domain(format!("{rho} has {} runner-{j} extensions", v.len()))),
    }
}

pub fn weight_one_map(rho: &Partition, p: u32) -> Result<LabeledTree> {
    if !is_rouquier(rho, p, 1)? {
        return Err(Error::Domain(format!("{rho} is not 1-Rouquier for p = {p}")));
    }
    let l = ell(p);
    let space = CharSpace::G { rho: rho.clone(), p, d: 1 };
    let r = |j| rho_j(rho, p, j).map(Label::Part);
    let mut labels = Vec::new();
    let tree = if !rho.is_odd() {
        let t = BrauerTree::build(TreeKind::B, l)?;
        labels.push((Node::Center, vec![(r(0)?, Sign::Whole)]));
        for j in 1..=l {
            labels.push((Node::Plus(j), vec![(r(j)?, Sign::Plus)]));
            labels.push((Node::Minus(j), vec![(r(j)?, Sign::Minus)]));
        }
        t
    } else {
        let t = BrauerTree::build(TreeKind::A, l)?;
        labels.push((Node::Exc, vec![(r(0)?, Sign::Plus), (r(0)?, Sign::Minus)]));
        for j in 1..=l {
            labels.push((Node::Plain(j), vec![(r(j)?, Sign::Whole)]));
        }
        t
    };
    Ok(LabeledTree { tree, space, labels })
}

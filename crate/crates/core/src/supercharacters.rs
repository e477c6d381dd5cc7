//! Character vectors over Z[√2] on the three block spaces, the M-action
//! and orbit sums.
//!
//! A vector is kept on supercharacter labels ([`CharVector`]) or on
//! irreducible labels ([`RefinedVector`]). An odd label splits as
//! ξ = ξ⁺ + ξ⁻, so its supercharacter coefficient is copied onto both signs.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::abacus::{block_enum, ell};
use crate::error::{Error, Result};
use crate::partitions::{enumerate, eps_of, Kind, Partition};
use crate::sqrt2::Sqrt2Scalar;

/// ε_j = ε of (p-j, j): 1 for j = 0, √2 otherwise.
pub fn eps_j(j: u32) -> Sqrt2Scalar {
    eps_of(j > 0)
}

/// Named character space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind")]
pub enum CharSpace {
    /// All strict partitions of n.
    Full { n: u32 },
    /// The block P₀(ρ,d).
    G { rho: Partition, p: u32, d: u32 },
    /// Labels (ρ; j₁..j_d).
    L { rho: Partition, p: u32, d: u32 },
    /// Labels (μ; j) with μ ∈ P₀(ρ,d-1).
    H { rho: Partition, p: u32, d: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum Label {
    Part(Partition),
    Tuple(Vec<u32>),
    Pair(Partition, u32),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Part(l) => write!(f, "{l}"),
            Label::Tuple(js) => {
                let s: Vec<String> = js.iter().map(u32::to_string).collect();
                write!(f, "ρ;{}", s.join(","))
            }
            Label::Pair(mu, j) => write!(f, "{mu};{j}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Whole,
    Plus,
    Minus,
}

impl Sign {
    pub fn suffix(self) -> &'static str {
        match self {
            Sign::Whole => "",
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
            Sign::Whole => Sign::Whole,
        }
    }
}

pub type RefLabel = (Label, Sign);

impl CharSpace {
    pub fn p(&self) -> Option<u32> {
        match self {
            CharSpace::Full { .. } => None,
            CharSpace::G { p, .. } | CharSpace::L { p, .. } | CharSpace::H { p, .. } => Some(*p),
        }
    }

    pub fn rho(&self) -> Option<&Partition> {
        match self {
            CharSpace::Full { .. } => None,
            CharSpace::G { rho, .. } | CharSpace::L { rho, .. } | CharSpace::H { rho, .. } => Some(rho),
        }
    }

    /// Parity of a label; fails if the label has the wrong shape for the space.
    pub fn label_is_odd(&self, label: &Label) -> Result<bool> {
        match (self, label) {
            (CharSpace::Full { .. } | CharSpace::G { .. }, Label::Part(l)) => Ok(l.is_odd()),
            (CharSpace::L { rho, d, .. }, Label::Tuple(js)) if js.len() == *d as usize => {
                Ok(rho.is_odd() ^ (js.iter().filter(|&&j| j > 0).count() % 2 == 1))
            }
            (CharSpace::H { .. }, Label::Pair(mu, j)) => Ok(mu.is_odd() ^ (*j > 0)),
            _ => Err(Error::SpaceMismatch(format!("label {label} does not belong to {self:?}"))),
        }
    }

    pub fn label_epsilon(&self, label: &Label) -> Result<Sqrt2Scalar> {
        Ok(eps_of(self.label_is_odd(label)?))
    }

    /// Supercharacter labels, canonical order.
    pub fn basis(&self) -> Result<Vec<Label>> {
        Ok(match self {
            CharSpace::Full { n } => enumerate(*n, Kind::Strict).into_iter().map(Label::Part).collect(),
            CharSpace::G { rho, p, d } => block_enum(rho, *p, *d, None)?.into_iter().map(Label::Part).collect(),
            CharSpace::L { p, d, .. } => tuples(ell(*p), *d).into_iter().map(Label::Tuple).collect(),
            CharSpace::H { rho, p, d } => {
                if *d == 0 {
                    return Err(Error::Domain("H-space needs d ≥ 1".into()));
                }
                let mut out = Vec::new();
                for mu in block_enum(rho, *p, d - 1, None)? {
                    for j in 0..=ell(*p) {
                        out.push(Label::Pair(mu.clone(), j));
                    }
                }
                out
            }
        })
    }

    /// Irreducible labels: odd labels contribute ⁺ and ⁻.
    pub fn refined_basis(&self) -> Result<Vec<RefLabel>> {
        let mut out = Vec::new();
        for l in self.basis()? {
            out.extend(refine_label(self, &l)?);
        }
        Ok(out)
    }
}

fn refine_label(space: &CharSpace, l: &Label) -> Result<Vec<RefLabel>> {
    Ok(if space.label_is_odd(l)? {
        vec![(l.clone(), Sign::Plus), (l.clone(), Sign::Minus)]
    } else {
        vec![(l.clone(), Sign::Whole)]
    })
}

/// All tuples in {0..=l}^d, lexicographic.
pub fn tuples(l: u32, d: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..=l).map(move |j| {
                    let mut t = t.clone();
                    t.push(j);
                    t
                })
            })
            .collect();
    }
    out
}

/// Finite Z[√2]-combination of labels of a space. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector<K: Ord> {
    pub space: CharSpace,
    coeffs: BTreeMap<K, Sqrt2Scalar>,
}

pub type CharVector = Vector<Label>;
pub type RefinedVector = Vector<RefLabel>;

#[derive(Clone, Copy, Debug)]
pub enum VecOp<'a> {
    Add,
    Sub,
    Scale(&'a Sqrt2Scalar),
}

impl<K: Ord + Clone> Vector<K> {
    pub fn zero(space: CharSpace) -> Self {
        Vector { space, coeffs: BTreeMap::new() }
    }

    pub fn add_term(&mut self, k: K, c: &Sqrt2Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(k.clone()).or_insert_with(Sqrt2Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn coeff(&self, k: &K) -> Sqrt2Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Sqrt2Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Sqrt2Scalar)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn same_space(&self, other: &Self) -> Result<()> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch(format!("{:?} vs {:?}", self.space, other.space)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(k.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(k.clone(), &-c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Sqrt2Scalar) -> Self {
        let mut out = Vector::zero(self.space.clone());
        for (k, c) in &self.coeffs {
            out.add_term(k.clone(), &(c * s));
        }
        out
    }

    /// `u op v`; the second operand is ignored for scaling.
    pub fn apply(&self, other: Option<&Self>, op: VecOp<'_>) -> Result<Self> {
        match (op, other) {
            (VecOp::Scale(s), _) => Ok(self.scale(s)),
            (VecOp::Add, Some(v)) => self.add(v),
            (VecOp::Sub, Some(v)) => self.sub(v),
            _ => Err(Error::Domain("binary operation needs two vectors".into())),
        }
    }

    pub fn all_nonneg_integers(&self) -> bool {
        self.coeffs.values().all(Sqrt2Scalar::is_nonneg_integer)
    }
}

impl CharVector {
    pub fn unit(space: CharSpace, label: Label) -> Result<Self> {
        space.label_is_odd(&label)?;
        let mut v = Vector::zero(space);
        v.add_term(label, &Sqrt2Scalar::one());
        Ok(v)
    }

    /// Irreducible coordinates: ξ_λ = ξ⁺ + ξ⁻ for odd λ.
    pub fn to_refined(&self) -> Result<RefinedVector> {
        let mut out = Vector::zero(self.space.clone());
        for (l, c) in self.iter() {
            for rl in refine_label(&self.space, l)? {
                out.add_term(rl, c);
            }
        }
        Ok(out)
    }
}

impl RefinedVector {
    /// Back to supercharacter coordinates; needs equal ⁺/⁻ coefficients.
    pub fn to_super(&self) -> Result<CharVector> {
        let mut out = Vector::zero(self.space.clone());
        for ((l, s), c) in self.iter() {
            let odd = self.space.label_is_odd(l)?;
            match (odd, s) {
                (false, Sign::Whole) => out.add_term(l.clone(), c),
                (true, Sign::Plus) => {
                    let minus = self.coeff(&(l.clone(), Sign::Minus));
                    if &minus != c {
                        return Err(Error::Domain(format!(
                            "{l}: ⁺ coefficient {c} differs from ⁻ coefficient {minus}"
                        )));
                    }
                    out.add_term(l.clone(), c);
                }
                (true, Sign::Minus) => {
                    if self.coeff(&(l.clone(), Sign::Plus)).is_zero() {
                        return Err(Error::Domain(format!("{l}: ⁻ coefficient {c} without ⁺ partner")));
                    }
                }
                _ => return Err(Error::SpaceMismatch(format!("sign {s:?} on label {l} of wrong parity"))),
            }
        }
        Ok(out)
    }

    /// Swap ⁺ and ⁻.
    pub fn associate(&self) -> RefinedVector {
        let mut out = Vector::zero(self.space.clone());
        for ((l, s), c) in self.iter() {
            out.add_term((l.clone(), s.flip()), c);
        }
        out
    }
}

/// ε_{μ,j} for an H-label.
fn eps_pair(mu: &Partition, j: u32) -> Sqrt2Scalar {
    eps_of(mu.is_odd() ^ (j > 0))
}

/// Image of ξ_{μ,i} under the M-action.
pub fn m_action_label(space: &CharSpace, mu: &Partition, i: u32) -> Result<CharVector> {
    let l = match space {
        CharSpace::H { p, .. } => ell(*p),
        _ => return Err(Error::SpaceMismatch("m_action needs an H-space".into())),
    };
    if i > l {
        return Err(Error::Domain(format!("slot value {i} exceeds ℓ = {l}")));
    }
    let mut out = Vector::zero(space.clone());
    let num = &(&eps_pair(mu, i) * &eps_j(i));
    for j in 0..=l - i {
        let c = (num * &eps_j(j)).checked_div(&eps_pair(mu, j))?;
        out.add_term(Label::Pair(mu.clone(), j), &c);
    }
    Ok(out)
}

pub fn m_action(v: &CharVector) -> Result<CharVector> {
    let mut out = Vector::zero(v.space.clone());
    for (label, c) in v.iter() {
        let Label::Pair(mu, i) = label else {
            return Err(Error::SpaceMismatch(format!("label {label} is not an H-label")));
        };
        for (k, x) in m_action_label(&v.space, mu, *i)?.iter() {
            out.add_term(k.clone(), &(x * c));
        }
    }
    Ok(out)
}

/// Orbit of ξ_{ρ,d̲} under permutation of slots, with associates.
#[derive(Clone, Debug)]
pub struct OrbitSum {
    pub vector: RefinedVector,
    /// Number of irreducible constituents: multinomial(d; d̲) · ε²_{ρ,d̲}.
    pub certificate: BigUint,
}

pub fn multinomial(dcomp: &[u32]) -> BigUint {
    let fact = |n: u32| -> BigUint { (1..=n).map(BigUint::from).product() };
    let d: u32 = dcomp.iter().sum();
    dcomp.iter().fold(fact(d), |acc, &k| acc / fact(k))
}

/// ε²_{ρ,d̲}.
pub fn eps_sq_tuple(rho: &Partition, dcomp: &[u32]) -> u32 {
    let odd_slots: u32 = dcomp.iter().skip(1).sum();
    if rho.is_odd() ^ (odd_slots % 2 == 1) {
        2
    } else {
        1
    }
}

pub fn orbit_sum(rho: &Partition, p: u32, dcomp: &[u32]) -> Result<OrbitSum> {
    crate::abacus::check_p(p)?;
    let l = ell(p);
    if dcomp.len() != l as usize + 1 {
        return Err(Error::Domain(format!("composition {dcomp:?} must have ℓ+1 = {} entries", l + 1)));
    }
    let d: u32 = dcomp.iter().sum();
    let space = CharSpace::L { rho: rho.clone(), p, d };
    let mut vector = Vector::zero(space.clone());
    for t in tuples(l, d) {
        let content: Vec<u32> = (0..=l).map(|i| t.iter().filter(|&&j| j == i).count() as u32).collect();
        if content == dcomp {
            for rl in refine_label(&space, &Label::Tuple(t))? {
                vector.add_term(rl, &Sqrt2Scalar::one());
            }
        }
    }
    let certificate = multinomial(dcomp) * BigUint::from(eps_sq_tuple(rho, dcomp));
    Ok(OrbitSum { vector, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn h21() -> CharSpace {
        CharSpace::H { rho: p(&[2, 1]), p: 5, d: 1 }
    }

    fn s(a: i64) -> Sqrt2Scalar {
        Sqrt2Scalar::int(a)
    }

    #[test]
    fn arithmetic() {
        let sp = CharSpace::G { rho: p(&[2, 1]), p: 5, d: 1 };
        let a = CharVector::unit(sp.clone(), Label::Part(p(&[6, 2]))).unwrap();
        let b = CharVector::unit(sp.clone(), Label::Part(p(&[7, 1]))).unwrap();
        let ab = a.add(&b).unwrap();
        assert_eq!(ab.len(), 2);
        assert_eq!(ab.sub(&b).unwrap(), a);
        let r2 = Sqrt2Scalar::sqrt2();
        assert_eq!(a.scale(&r2).scale(&r2), a.scale(&s(2)));
        let other = CharVector::zero(CharSpace::Full { n: 8 });
        assert!(matches!(a.add(&other), Err(Error::SpaceMismatch(_))));
        assert!(CharVector::unit(sp, Label::Pair(p(&[2, 1]), 0)).is_err());
    }

    #[test]
    fn m_action_examples() {
        let rho = p(&[2, 1]);
        let v = m_action(&CharVector::unit(h21(), Label::Pair(rho.clone(), 2)).unwrap()).unwrap();
        assert_eq!(
            v.iter().map(|(k, c)| (k.clone(), c.clone())).collect::<Vec<_>>(),
            vec![(Label::Pair(rho.clone(), 0), s(1))]
        );
        let v = m_action(&CharVector::unit(h21(), Label::Pair(rho.clone(), 0)).unwrap()).unwrap();
        let got: Vec<_> = (0..3).map(|j| v.coeff(&Label::Pair(rho.clone(), j))).collect();
        assert_eq!(got, vec![s(1), s(2), s(2)]);
        // weight-one block with empty core
        let sp = CharSpace::H { rho: Partition::empty(), p: 5, d: 1 };
        let v = m_action(&CharVector::unit(sp, Label::Pair(Partition::empty(), 1)).unwrap()).unwrap();
        let got: Vec<_> = (0..3).map(|j| v.coeff(&Label::Pair(Partition::empty(), j))).collect();
        assert_eq!(got, vec![s(2), s(2), s(0)]);
    }

    #[test]
    fn refine_round_trip() {
        let rho = p(&[2, 1]);
        let mut v = CharVector::zero(h21());
        v.add_term(Label::Pair(rho.clone(), 0), &s(4));
        v.add_term(Label::Pair(rho.clone(), 1), &s(6));
        let r = v.to_refined().unwrap();
        assert_eq!(r.coeff(&(Label::Pair(rho.clone(), 0), Sign::Plus)), s(4));
        assert_eq!(r.coeff(&(Label::Pair(rho.clone(), 0), Sign::Minus)), s(4));
        assert_eq!(r.coeff(&(Label::Pair(rho.clone(), 1), Sign::Whole)), s(6));
        assert_eq!(r.to_super().unwrap(), v);
        let mut bad = r.clone();
        bad.add_term((Label::Pair(rho, 0), Sign::Plus), &s(1));
        assert!(bad.to_super().is_err());
    }

    #[test]
    fn orbit_examples() {
        let rho = p(&[2, 1]);
        let o = orbit_sum(&rho, 5, &[1, 1, 0]).unwrap();
        assert_eq!(o.certificate, BigUint::from(2u32));
        assert_eq!(o.vector.len(), 2);
        let o = orbit_sum(&rho, 5, &[1, 0, 0]).unwrap();
        assert_eq!(o.certificate, BigUint::from(2u32));
        assert_eq!(o.vector.len(), 2);
        let o = orbit_sum(&rho, 5, &[0, 3, 0]).unwrap();
        assert_eq!(o.certificate, BigUint::from(eps_sq_tuple(&rho, &[0, 3, 0])));
    }

    #[test]
    fn bases() {
        let sp = CharSpace::L { rho: p(&[2, 1]), p: 5, d: 1 };
        assert_eq!(sp.basis().unwrap().len(), 3);
        assert_eq!(sp.refined_basis().unwrap().len(), 4);
        assert_eq!(h21().basis().unwrap().len(), 3);
        assert_eq!(tuples(2, 2).len(), 9);
    }
}

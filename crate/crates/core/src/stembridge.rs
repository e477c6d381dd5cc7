//! Marked shifted tableaux, the lattice word condition, Stembridge
//! induction and its one-bar specialization inside a RoCK block.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::abacus::{core_weight, ell, neighbors_upto};
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::partitions::{box_moves, eps_of, Dir, Kind, Partition};
use crate::rouquier::{is_rouquier, skew_boxes};
use crate::sqrt2::Sqrt2Scalar;
use crate::supercharacters::{eps_j, CharSpace, CharVector, Label, RefinedVector, Sign, Vector};

/// Letters of 1' < 1 < 2' < 2 < ... encoded as 1, 2, 3, 4, ...
pub type Letter = u32;

pub fn marked(k: u32) -> Letter {
    2 * k - 1
}

pub fn unmarked(k: u32) -> Letter {
    2 * k
}

pub fn is_marked(x: Letter) -> bool {
    x % 2 == 1
}

/// |x|.
pub fn base(x: Letter) -> u32 {
    x.div_ceil(2)
}

/// Reading word: rows left to right, bottom row first. `boxes` and `values`
/// are parallel and in row-major order.
pub fn word(boxes: &[(u32, u32)], values: &[Letter]) -> Vec<Letter> {
    let mut idx: Vec<usize> = (0..boxes.len()).collect();
    idx.sort_by_key(|&k| (std::cmp::Reverse(boxes[k].0), boxes[k].1));
    idx.into_iter().map(|k| values[k]).collect()
}

/// m_i(j) for 0 ≤ j ≤ 2N.
pub fn m_stat(w: &[Letter], i: u32, j: usize) -> usize {
    let n = w.len();
    if j <= n {
        w[n - j..].iter().filter(|&&x| x == unmarked(i)).count()
    } else {
        m_stat(w, i, n) + w[..j - n].iter().filter(|&&x| x == marked(i)).count()
    }
}

pub fn lattice_property(w: &[Letter]) -> bool {
    let n = w.len();
    let top = w.iter().map(|&x| base(x)).max().unwrap_or(0);
    for i in 2..=top {
        for j in 0..2 * n {
            if m_stat(w, i, j) != m_stat(w, i - 1, j) {
                continue;
            }
            let bad = if j < n {
                let x = w[n - j - 1];
                x == unmarked(i) || x == marked(i)
            } else {
                let x = w[j - n];
                x == unmarked(i - 1) || x == marked(i)
            };
            if bad {
                return false;
            }
        }
    }
    true
}

/// Leftmost occurrence of each |letter| i, 1 ≤ i ≤ h, is unmarked.
pub fn leftmost_unmarked(w: &[Letter], h: u32) -> bool {
    (1..=h).all(|i| match w.iter().find(|&&x| base(x) == i) {
        Some(&x) => !is_marked(x),
        None => true,
    })
}

/// Row-major skew boxes and the fillings over them.
pub type Fillings = (Vec<(u32, u32)>, Vec<Vec<Letter>>);

/// Every content-ν marked shifted tableau of shape λ∖μ, as values over the
/// row-major box list returned alongside.
pub fn tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Fillings> {
    search(lambda, mu, nu, false)
}

/// Backtracking in reverse reading order (top row first, right to left), so
/// the placed letters always form a suffix of the word. With `prune`, the
/// suffix half of the lattice condition is enforced as letters are placed.
fn search(lambda: &Partition, mu: &Partition, nu: &Partition, prune: bool) -> Result<Fillings> {
    let boxes = skew_boxes(lambda, mu)?;
    if boxes.len() as u32 != nu.size() {
        return Ok((boxes, Vec::new()));
    }
    let pos: std::collections::HashMap<(u32, u32), usize> = boxes.iter().enumerate().map(|(k, b)| (*b, k)).collect();
    let mut order: Vec<usize> = (0..boxes.len()).collect();
    order.sort_by_key(|&k| (boxes[k].0, std::cmp::Reverse(boxes[k].1)));
    let right: Vec<Option<usize>> = boxes.iter().map(|&(r, c)| pos.get(&(r, c + 1)).copied()).collect();
    let above: Vec<Option<usize>> = boxes.iter().map(|&(r, c)| pos.get(&(r.wrapping_sub(1), c)).copied()).collect();
    let content: Vec<u32> = nu.parts().to_vec();

    struct St<'a> {
        order: &'a [usize],
        right: &'a [Option<usize>],
        above: &'a [Option<usize>],
        content: &'a [u32],
        prune: bool,
        top: Letter,
        vals: Vec<Letter>,
        cnt: Vec<u32>,
        /// unmarked letters placed so far, by base
        plain: Vec<u32>,
        out: Vec<Vec<Letter>>,
    }
    fn go(st: &mut St<'_>, k: usize) {
        if k == st.order.len() {
            if st.cnt.as_slice() == st.content {
                st.out.push(st.vals.clone());
            }
            return;
        }
        let b = st.order[k];
        let lo = st.above[b].map(|q| st.vals[q]).unwrap_or(1);
        let hi = st.right[b].map(|q| st.vals[q]).unwrap_or(st.top);
        for x in lo..=hi {
            let i = base(x) as usize;
            if st.cnt[i - 1] >= st.content[i - 1] {
                continue;
            }
            if !is_marked(x) && st.above[b].map(|q| st.vals[q]) == Some(x) {
                continue;
            }
            if is_marked(x) && st.right[b].map(|q| st.vals[q]) == Some(x) {
                continue;
            }
            if st.prune && i >= 2 && st.plain[i - 1] == st.plain[i - 2] {
                continue;
            }
            st.vals[b] = x;
            st.cnt[i - 1] += 1;
            if !is_marked(x) {
                st.plain[i - 1] += 1;
            }
            go(st, k + 1);
            st.cnt[i - 1] -= 1;
            if !is_marked(x) {
                st.plain[i - 1] -= 1;
            }
        }
    }
    let mut st = St {
        order: &order,
        right: &right,
        above: &above,
        content: &content,
        prune,
        top: unmarked(content.len() as u32),
        vals: vec![0; boxes.len()],
        cnt: vec![0; content.len()],
        plain: vec![0; content.len()],
        out: Vec::new(),
    };
    go(&mut st, 0);
    let out = st.out;
    Ok((boxes, out))
}

/// 𝔣_ν(λ∖μ).
pub fn f_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    if !lambda.contains(mu) {
        return Err(Error::Shape(format!("{mu} is not contained in {lambda}")));
    }
    let (boxes, all) = search(lambda, mu, nu, true)?;
    Ok(count_admissible(&boxes, &all, nu))
}

/// Tableaux whose word has the lattice property and unmarked leftmost letters.
pub fn count_admissible(boxes: &[(u32, u32)], all: &[Vec<Letter>], nu: &Partition) -> u64 {
    let h = nu.len() as u32;
    all.iter()
        .filter(|vals| {
            let w = word(boxes, vals);
            lattice_property(&w) && leftmost_unmarked(&w, h)
        })
        .count() as u64
}

/// Strict partitions λ ⊇ μ with |λ| = |μ| + k.
pub fn strict_supersets(mu: &Partition, k: u32) -> Vec<Partition> {
    let mut layer: BTreeSet<Partition> = [mu.clone()].into();
    for _ in 0..k {
        layer = layer.iter().flat_map(|l| box_moves(l, Kind::Strict, Dir::Add)).collect();
    }
    layer.into_iter().rev().collect()
}

/// Coefficient of ξ_λ in the induction of ξ_{μ,ν}.
pub fn induce_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Sqrt2Scalar> {
    let f = f_coeff(lambda, mu, nu)?;
    if f == 0 {
        return Ok(Sqrt2Scalar::zero());
    }
    let e = (mu.len() + nu.len()) as i64 - lambda.len() as i64;
    if e < 0 {
        return Err(Error::Domain(format!("h({lambda}) exceeds h({mu}) + h({nu}) with nonzero tableau count")));
    }
    let num =
        &(&eps_of(mu.is_odd() ^ nu.is_odd()) * &Sqrt2Scalar::sqrt2_pow(e as u32)) * &Sqrt2Scalar::int(BigInt::from(f));
    num.checked_div(&lambda.epsilon())
}

/// Induction of ξ_{μ,ν} to the full group, over P₀(|μ|+|ν|).
pub fn induce(mu: &Partition, nu: &Partition) -> Result<CharVector> {
    induce_with(mu, nu, Exec::default())
}

pub fn induce_with(mu: &Partition, nu: &Partition, exec: Exec) -> Result<CharVector> {
    if !mu.is_strict() || !nu.is_strict() {
        return Err(Error::Domain(format!("{mu} and {nu} must be strict")));
    }
    let cands = strict_supersets(mu, nu.size());
    let coeffs = exec.map(&cands, |l| induce_coeff(l, mu, nu));
    let mut v = Vector::zero(CharSpace::Full { n: mu.size() + nu.size() });
    for (l, c) in cands.into_iter().zip(coeffs) {
        let c = c?;
        if !c.is_zero() && c.a < BigInt::zero() {
            return Err(Error::Domain(format!("negative coefficient {c} at {l}")));
        }
        v.add_term(Label::Part(l), &c);
    }
    Ok(v)
}

/// A d-Rouquier core with its p and weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RockContext {
    pub rho: Partition,
    pub p: u32,
    pub d: u32,
}

impl RockContext {
    pub fn new(rho: Partition, p: u32, d: u32) -> Result<Self> {
        if d == 0 || !is_rouquier(&rho, p, d)? {
            return Err(Error::Domain(format!("{rho} is not {d}-Rouquier for p = {p}")));
        }
        Ok(RockContext { rho, p, d })
    }

    pub fn ell(&self) -> u32 {
        ell(self.p)
    }

    pub fn g_space(&self) -> CharSpace {
        CharSpace::G { rho: self.rho.clone(), p: self.p, d: self.d }
    }

    pub fn h_space(&self) -> CharSpace {
        CharSpace::H { rho: self.rho.clone(), p: self.p, d: self.d }
    }

    pub fn l_space(&self) -> CharSpace {
        CharSpace::L { rho: self.rho.clone(), p: self.p, d: self.d }
    }

    pub fn check_member(&self, lambda: &Partition, w: u32) -> Result<()> {
        let (c, wt) = core_weight(lambda, self.p)?;
        if c != self.rho || wt != w {
            return Err(Error::Domain(format!("{lambda} is not in P₀({}, {w})", self.rho)));
        }
        Ok(())
    }

    /// Keep only labels of the block P₀(ρ,d).
    pub fn project(&self, v: &CharVector) -> Result<CharVector> {
        let mut out = Vector::zero(self.g_space());
        for (l, c) in v.iter() {
            if let Label::Part(lam) = l {
                if core_weight(lam, self.p)? == (self.rho.clone(), self.d) {
                    out.add_term(l.clone(), c);
                }
            }
        }
        Ok(out)
    }
}

/// ε_{μ,λ}: 1 if μ and λ have equal parity.
pub fn eps_rel(mu: &Partition, lambda: &Partition) -> Sqrt2Scalar {
    eps_of(mu.is_odd() ^ lambda.is_odd())
}

pub(crate) fn eps_pair(mu: &Partition, j: u32) -> Sqrt2Scalar {
    eps_of(mu.is_odd() ^ (j > 0))
}

/// Induction of ξ_{μ,j} into the block, by the abacus closed form.
pub fn rock_induce(ctx: &RockContext, mu: &Partition, j: u32) -> Result<CharVector> {
    ctx.check_member(mu, ctx.d - 1)?;
    let l = ctx.ell();
    if j > l {
        return Err(Error::Domain(format!("j = {j} exceeds ℓ = {l}")));
    }
    let mut v = Vector::zero(ctx.g_space());
    for (_, lam) in neighbors_upto(mu, ctx.p, l - j, Dir::Add)? {
        let num = &(&eps_pair(mu, j) * &eps_rel(mu, &lam)) * &eps_j(j);
        v.add_term(Label::Part(lam.clone()), &num.checked_div(&lam.epsilon())?);
    }
    Ok(v)
}

/// Restriction of ξ_λ to the H-space, by the abacus closed form.
pub fn rock_restrict(ctx: &RockContext, lambda: &Partition) -> Result<CharVector> {
    ctx.check_member(lambda, ctx.d)?;
    let l = ctx.ell();
    let mut v = Vector::zero(ctx.h_space());
    for j in 0..=l {
        for (_, mu) in neighbors_upto(lambda, ctx.p, l - j, Dir::Remove)? {
            let num = &(&lambda.epsilon() * &eps_rel(&mu, lambda)) * &eps_j(j);
            v.add_term(Label::Pair(mu.clone(), j), &num.checked_div(&eps_pair(&mu, j))?);
        }
    }
    Ok(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BranchDir {
    Induce,
    Restrict,
}

/// Dispatch: `(μ, j)` for induce, `λ` (with `j` ignored) for restrict.
pub fn rock_branch(ctx: &RockContext, part: &Partition, j: u32, dir: BranchDir) -> Result<CharVector> {
    match dir {
        BranchDir::Induce => rock_induce(ctx, part, j),
        BranchDir::Restrict => rock_restrict(ctx, part),
    }
}

/// Image of ξ⁺_{μ,j} (or of ξ_{μ,j} when it does not split) on irreducible labels.
///
/// Equal split of each supercharacter coefficient between ξ⁺_λ and ξ⁻_λ,
/// except λ = μ ⊔ (p) with j = 0, where ξ⁺ goes to ξ⁺.
pub fn rock_induce_plus(ctx: &RockContext, mu: &Partition, j: u32) -> Result<RefinedVector> {
    let sup = rock_induce(ctx, mu, j)?;
    let src_odd = mu.is_odd() ^ (j > 0);
    let exceptional = mu.union(&Partition::new(vec![ctx.p])?);
    let mut out = Vector::zero(ctx.g_space());
    for (l, c) in sup.iter() {
        let Label::Part(lam) = l else { unreachable!() };
        match (src_odd, lam.is_odd()) {
            (false, false) => out.add_term((l.clone(), Sign::Whole), c),
            (false, true) => {
                out.add_term((l.clone(), Sign::Plus), c);
                out.add_term((l.clone(), Sign::Minus), c);
            }
            (true, false) => out.add_term((l.clone(), Sign::Whole), &c.checked_half()?),
            (true, true) if j == 0 && *lam == exceptional => out.add_term((l.clone(), Sign::Plus), c),
            (true, true) => {
                let h = c.checked_half()?;
                out.add_term((l.clone(), Sign::Plus), &h);
                out.add_term((l.clone(), Sign::Minus), &h);
            }
        }
    }
    Ok(out)
}

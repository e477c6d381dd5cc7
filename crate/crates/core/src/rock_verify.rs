//! Closed-form RoCK multiplicities, the non-maximal-support lattice with
//! its φ-functional, and the named character-identity checks.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::abacus::{block_enum, block_enum_with, compositions, ell, k_of_quotient, neighbors, quotient_over};
use crate::brauer_trees::{weight_one_map, BrauerTree, TreeKind};
use crate::error::{Error, Result};
use crate::lattice::IntLattice;
use crate::par::Exec;
use crate::partitions::{enumerate, eps_of, path_count, Dir, Kind, Partition};
use crate::rouquier::{generate, strip_classify};
use crate::sqrt2::Sqrt2Scalar;
use crate::stembridge::{eps_pair, eps_rel, f_coeff, induce, rock_induce, rock_restrict, RockContext};
use crate::supercharacters::{
    eps_j, eps_sq_tuple, m_action, CharSpace, CharVector, Label, RefLabel, RefinedVector, Sign, Vector,
};

fn strict_excess(q0: &Partition) -> u32 {
    q0.size() - q0.len() as u32
}

/// ε_{ρ,d̲}.
pub fn eps_tuple(rho: &Partition, dcomp: &[u32]) -> Sqrt2Scalar {
    eps_of(eps_sq_tuple(rho, dcomp) == 2)
}

/// Closed-form coefficients of the induced orbit character on P₀(ρ,d̲), unchecked.
pub fn hyp_coeffs_raw(rho: &Partition, p: u32, dcomp: &[u32]) -> Result<CharVector> {
    let d: u32 = dcomp.iter().sum();
    let ctx = RockContext::new(rho.clone(), p, d)?;
    let mut v = Vector::zero(ctx.g_space());
    let et = eps_tuple(rho, dcomp);
    for lam in block_enum(rho, p, d, Some(dcomp))? {
        let q = quotient_over(&lam, rho, d, p)?;
        let k = Sqrt2Scalar::from(BigInt::from(k_of_quotient(&q)));
        let num = &(&et * &Sqrt2Scalar::sqrt2_pow(strict_excess(&q.parts[0]))) * &k;
        v.add_term(Label::Part(lam.clone()), &num.checked_div(&lam.epsilon())?);
    }
    Ok(v)
}

/// As [`hyp_coeffs_raw`], failing unless every coefficient is a positive integer.
pub fn hyp_coeffs(rho: &Partition, p: u32, dcomp: &[u32]) -> Result<CharVector> {
    let v = hyp_coeffs_raw(rho, p, dcomp)?;
    if let Some((l, c)) = v.iter().find(|(_, c)| !c.is_nonneg_integer() || c.is_zero()) {
        return Err(Error::Domain(format!("coefficient {c} at {l} is not a positive integer")));
    }
    Ok(v)
}

/// The lattice spanned by the non-maximal-support generators of an L- or H-space.
#[derive(Clone, Debug)]
pub struct NmvLattice {
    pub space: CharSpace,
    pub basis: Vec<RefLabel>,
    pub generators: Vec<RefinedVector>,
    pub lattice: IntLattice,
}

fn rv(space: &CharSpace, terms: &[RefLabel]) -> RefinedVector {
    let mut v = Vector::zero(space.clone());
    for t in terms {
        v.add_term(t.clone(), &Sqrt2Scalar::one());
    }
    v
}

/// Generators for the label pair X (slot value j) and Y (slot value j+1).
fn pair_generators(space: &CharSpace, x: Label, y: Label, j: u32) -> Result<Vec<RefinedVector>> {
    let xo = space.label_is_odd(&x)?;
    let yo = space.label_is_odd(&y)?;
    use Sign::*;
    Ok(match (j, xo, yo) {
        (0, false, true) => {
            vec![rv(space, &[(x.clone(), Whole), (y.clone(), Plus)]), rv(space, &[(x, Whole), (y, Minus)])]
        }
        (0, true, false) => vec![rv(space, &[(x.clone(), Plus), (x, Minus), (y, Whole)])],
        (_, true, true) => {
            vec![rv(space, &[(x.clone(), Plus), (y.clone(), Plus)]), rv(space, &[(x, Minus), (y, Minus)])]
        }
        (_, false, false) => vec![rv(space, &[(x, Whole), (y, Whole)])],
        _ => return Err(Error::Domain(format!("unexpected parities for {x} / {y}"))),
    })
}

/// Flatten a refined vector to integer coordinates, (a, b) per basis label.
pub fn flatten(v: &RefinedVector, basis: &[RefLabel]) -> Result<Vec<BigInt>> {
    let index: HashMap<&RefLabel, usize> = basis.iter().enumerate().map(|(k, l)| (l, k)).collect();
    let mut out = vec![BigInt::zero(); 2 * basis.len()];
    for (l, c) in v.iter() {
        let &k = index
            .get(l)
            .ok_or_else(|| Error::SpaceMismatch(format!("{}{} is not a basis label", l.0, l.1.suffix())))?;
        out[2 * k] = c.a.clone();
        out[2 * k + 1] = c.b.clone();
    }
    Ok(out)
}

pub fn nmv_basis(space: &CharSpace) -> Result<NmvLattice> {
    let l = match space {
        CharSpace::L { p, .. } | CharSpace::H { p, .. } => ell(*p),
        _ => return Err(Error::SpaceMismatch("nmv lattice needs an L- or H-space".into())),
    };
    let basis = space.refined_basis()?;
    let mut generators = Vec::new();
    for label in space.basis()? {
        match &label {
            Label::Pair(mu, j) if *j < l => {
                generators.extend(pair_generators(space, label.clone(), Label::Pair(mu.clone(), j + 1), *j)?);
            }
            Label::Tuple(js) => {
                for (k, &j) in js.iter().enumerate() {
                    if j < l {
                        let mut next = js.clone();
                        next[k] = j + 1;
                        generators.extend(pair_generators(space, label.clone(), Label::Tuple(next), j)?);
                    }
                }
            }
            _ => {}
        }
    }
    generators.sort_by(|a, b| a.iter().map(|(k, _)| k).cmp(b.iter().map(|(k, _)| k)));
    generators.dedup();
    let rows = generators.iter().map(|g| flatten(g, &basis)).collect::<Result<Vec<_>>>()?;
    let lattice = IntLattice::new(&rows, 2 * basis.len());
    Ok(NmvLattice { space: space.clone(), basis, generators, lattice })
}

/// Shared, lazily built lattices keyed by space.
pub fn nmv_cached(space: &CharSpace) -> Result<Arc<NmvLattice>> {
    static CACHE: OnceLock<Mutex<HashMap<CharSpace, Arc<NmvLattice>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(l) = cache.lock().unwrap().get(space) {
        return Ok(l.clone());
    }
    let l = Arc::new(nmv_basis(space)?);
    cache.lock().unwrap().insert(space.clone(), l.clone());
    Ok(l)
}

impl NmvLattice {
    pub fn contains(&self, v: &RefinedVector) -> Result<bool> {
        if v.space != self.space {
            return Err(Error::SpaceMismatch(format!("{:?} vs {:?}", v.space, self.space)));
        }
        Ok(self.lattice.contains(&flatten(v, &self.basis)?))
    }
}

/// φ(ξ^{(±)}_{ρ,j₁..j_d}) = ε_ρ Π((-1)^{j_k} ε_{j_k}) / ε_{ρ,j₁..j_d}.
pub fn phi_label(space: &CharSpace, label: &Label) -> Result<Sqrt2Scalar> {
    let (CharSpace::L { rho, .. }, Label::Tuple(js)) = (space, label) else {
        return Err(Error::SpaceMismatch("φ is defined on L-space labels".into()));
    };
    let mut num = rho.epsilon();
    for &j in js {
        num = &num * &eps_j(j);
        if j % 2 == 1 {
            num = -num;
        }
    }
    num.checked_div(&space.label_epsilon(label)?)
}

pub fn phi(v: &RefinedVector) -> Result<Sqrt2Scalar> {
    let mut total = Sqrt2Scalar::zero();
    for ((l, _), c) in v.iter() {
        total += &(&phi_label(&v.space, l)? * c);
    }
    Ok(total)
}

/// Outcome of a named check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub params: Value,
    pub verdict: Verdict,
    pub details: Value,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl CheckReport {
    fn new(name: &str, params: Value, pass: bool, details: Value) -> Self {
        CheckReport {
            name: name.to_string(),
            params,
            verdict: if pass { Verdict::Pass } else { Verdict::Fail },
            details,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

pub fn scalar_json(s: &Sqrt2Scalar) -> Value {
    json!([
        s.a.to_string().parse::<Value>().unwrap_or(Value::Null),
        s.b.to_string().parse::<Value>().unwrap_or(Value::Null)
    ])
}

pub fn vector_json<K: Ord + Clone>(v: &Vector<K>, name: impl Fn(&K) -> String) -> Value {
    Value::Array(
        v.iter()
            .map(|(k, c)| json!({"label": name(k), "a": c.a.to_string().parse::<Value>().unwrap(), "b": c.b.to_string().parse::<Value>().unwrap()}))
            .collect(),
    )
}

pub fn char_json(v: &CharVector) -> Value {
    vector_json(v, |l| l.to_string())
}

pub fn refined_json(v: &RefinedVector) -> Value {
    vector_json(v, |(l, s)| format!("{l}{}", s.suffix()))
}

fn ctx_params(ctx: &RockContext) -> Value {
    json!({"rho": ctx.rho, "p": ctx.p, "d": ctx.d})
}

/// Closed form of the twisted restriction of ξ_λ to the H-space.
pub fn htoj_rhs(ctx: &RockContext, lambda: &Partition) -> Result<CharVector> {
    let mut v = Vector::zero(ctx.h_space());
    for j in 0..=ctx.ell() {
        for mu in neighbors(lambda, ctx.p, j, Dir::Remove)? {
            let num = &eps_rel(&mu, lambda) * &eps_of(lambda.is_odd() ^ (j > 0));
            let den = &mu.epsilon() * &eps_j(j);
            v.add_term(Label::Pair(mu.clone(), j), &num.checked_div(&den)?);
        }
    }
    Ok(v)
}

pub fn check_htoj(ctx: &RockContext, lambda: &Partition) -> Result<CheckReport> {
    let lhs = m_action(&rock_restrict(ctx, lambda)?)?;
    let rhs = htoj_rhs(ctx, lambda)?;
    let diff = lhs.sub(&rhs)?.to_refined()?;
    let member = nmv_cached(&ctx.h_space())?.contains(&diff)?;
    let mut params = ctx_params(ctx);
    params["lambda"] = json!(lambda);
    Ok(CheckReport::new(
        "htoj",
        params,
        member,
        json!({"lhs": char_json(&lhs), "rhs": char_json(&rhs), "difference": refined_json(&diff), "in_lattice": member}),
    ))
}

pub fn check_htog_adjoint(ctx: &RockContext) -> Result<CheckReport> {
    let block = block_enum(&ctx.rho, ctx.p, ctx.d, None)?;
    let mut bad = Vec::new();
    let mut pairs = 0usize;
    let restricted: Vec<(Partition, CharVector)> =
        block.iter().map(|l| rock_restrict(ctx, l).map(|v| (l.clone(), v))).collect::<Result<_>>()?;
    for mu in block_enum(&ctx.rho, ctx.p, ctx.d - 1, None)? {
        for j in 0..=ctx.ell() {
            let up = rock_induce(ctx, &mu, j)?;
            for (lam, down) in &restricted {
                let a = up.coeff(&Label::Part(lam.clone()));
                let b = down.coeff(&Label::Pair(mu.clone(), j));
                let el = lam.epsilon();
                let em = eps_pair(&mu, j);
                let lhs = &(&el * &el) * &a;
                let rhs = &(&em * &em) * &b;
                if !a.is_zero() || !b.is_zero() {
                    pairs += 1;
                }
                if lhs != rhs {
                    bad.push(json!({"mu": mu, "j": j, "lambda": lam, "a": scalar_json(&a), "b": scalar_json(&b)}));
                }
            }
        }
    }
    Ok(CheckReport::new("htog-adjoint", ctx_params(ctx), bad.is_empty(), json!({"pairs": pairs, "failures": bad})))
}

/// Per-runner form of the one-bar recursion for the closed-form coefficients.
pub fn check_restrict_recursion(ctx: &RockContext, lambda: &Partition) -> Result<CheckReport> {
    let q = quotient_over(lambda, &ctx.rho, ctx.d, ctx.p)?;
    let rhs_base = &(&lambda.epsilon() * &Sqrt2Scalar::sqrt2_pow(strict_excess(&q.parts[0])))
        * &Sqrt2Scalar::from(BigInt::from(k_of_quotient(&q)));
    let mut rows = Vec::new();
    let mut ok = true;
    for k in 0..=ctx.ell() {
        if q.parts[k as usize].is_empty() {
            continue;
        }
        let mut lhs = Sqrt2Scalar::zero();
        for mu in neighbors(lambda, ctx.p, k, Dir::Remove)? {
            let qm = quotient_over(&mu, &ctx.rho, ctx.d - 1, ctx.p)?;
            let num = &(&(&eps_rel(&mu, lambda) * &eps_pair(lambda, k)) * &eps_pair(&mu, k))
                * &(&Sqrt2Scalar::sqrt2_pow(strict_excess(&qm.parts[0]))
                    * &Sqrt2Scalar::from(BigInt::from(k_of_quotient(&qm))));
            lhs += &num.checked_div(&(&mu.epsilon() * &eps_j(k)))?;
        }
        ok &= lhs == rhs_base;
        rows.push(json!({"runner": k, "lhs": scalar_json(&lhs), "rhs": scalar_json(&rhs_base)}));
    }
    let mut params = ctx_params(ctx);
    params["lambda"] = json!(lambda);
    Ok(CheckReport::new("restrict-recursion", params, ok, json!({"runners": rows})))
}

pub fn check_dim_sqd(n: u32) -> CheckReport {
    let fact: BigUint = (1..=n).map(BigUint::from).product();
    let ord: BigUint = enumerate(n, Kind::Ordinary).iter().map(|l| path_count(l, Kind::Ordinary).pow(2)).sum();
    let st: BigUint = enumerate(n, Kind::Strict)
        .iter()
        .map(|l| (BigUint::one() << (n as usize - l.len())) * path_count(l, Kind::Strict).pow(2))
        .sum();
    let pass = ord == fact && st == fact;
    let mut details = json!({"lhs": big(&ord), "rhs": big(&fact)});
    // the shifted sum is reported only when it disagrees
    if st != fact {
        details["shifted"] = big(&st);
    }
    CheckReport::new("dim-sqd", json!({"n": n}), pass, details)
}

fn big(x: &BigUint) -> Value {
    x.to_string().parse::<Value>().unwrap_or(Value::Null)
}

pub fn check_dim_reduced(rho: &Partition, p: u32, dcomp: &[u32]) -> Result<CheckReport> {
    let d: u32 = dcomp.iter().sum();
    let mut lhs = BigUint::zero();
    for lam in block_enum(rho, p, d, Some(dcomp))? {
        let q = quotient_over(&lam, rho, d, p)?;
        lhs += (BigUint::one() << strict_excess(&q.parts[0]) as usize) * k_of_quotient(&q).pow(2);
    }
    let rhs: BigUint = dcomp.iter().map(|&k| (1..=k).map(BigUint::from).product::<BigUint>()).product();
    Ok(CheckReport::new(
        "dim-reduced",
        json!({"rho": rho, "p": p, "dcomp": dcomp}),
        lhs == rhs,
        json!({"lhs": big(&lhs), "rhs": big(&rhs)}),
    ))
}

pub fn check_hyp_nonneg(ctx: &RockContext) -> Result<CheckReport> {
    let mut bad = Vec::new();
    let mut count = 0usize;
    for dc in compositions(ctx.d, ctx.ell() as usize + 1) {
        let v = hyp_coeffs_raw(&ctx.rho, ctx.p, &dc)?;
        for (l, c) in v.iter() {
            count += 1;
            if !c.is_nonneg_integer() || c.is_zero() {
                bad.push(json!({"dcomp": dc, "lambda": l.to_string(), "coefficient": scalar_json(c)}));
            }
        }
    }
    Ok(CheckReport::new("hyp-nonneg", ctx_params(ctx), bad.is_empty(), json!({"coefficients": count, "failures": bad})))
}

pub fn check_block_count(ctx: &RockContext) -> Result<CheckReport> {
    let all = block_enum(&ctx.rho, ctx.p, ctx.d, None)?;
    let mut rows = Vec::new();
    let mut ok = true;
    let mut union = Vec::new();
    for dc in compositions(ctx.d, ctx.ell() as usize + 1) {
        let got = block_enum(&ctx.rho, ctx.p, ctx.d, Some(&dc))?;
        let expect: usize = dc
            .iter()
            .enumerate()
            .map(|(i, &k)| enumerate(k, if i == 0 { Kind::Strict } else { Kind::Ordinary }).len())
            .product();
        ok &= got.len() == expect;
        rows.push(json!({"dcomp": dc, "count": got.len(), "expected": expect}));
        union.extend(got);
    }
    union.sort_by(|a, b| b.cmp(a));
    let disjoint = union == all;
    Ok(CheckReport::new(
        "block-count",
        ctx_params(ctx),
        ok && disjoint,
        json!({"census": rows, "block_size": all.len(), "disjoint_union": disjoint}),
    ))
}

/// Tableau-enumerated induction projected to the block against the abacus closed form,
/// plus strip shapes and the parity law on every one-bar pair.
pub fn check_stembridge(ctx: &RockContext) -> Result<CheckReport> {
    let l = ctx.ell();
    let mut bad = Vec::new();
    let mut pairs = 0usize;
    for mu in block_enum(&ctx.rho, ctx.p, ctx.d - 1, None)? {
        for j in 0..=l {
            let nu = Partition::strict(if j == 0 { vec![ctx.p] } else { vec![ctx.p - j, j] })?;
            let tab = ctx.project(&induce(&mu, &nu)?)?;
            let abac = rock_induce(ctx, &mu, j)?;
            pairs += 1;
            if tab != abac {
                bad.push(json!({"mu": mu, "j": j, "tableau": char_json(&tab), "abacus": char_json(&abac)}));
            }
        }
        for i in 0..=l {
            for lam in neighbors(&mu, ctx.p, i, Dir::Add)? {
                let cert = strip_classify(&lam, &mu, ctx.p);
                let same = mu.is_odd() == lam.is_odd();
                let law = same == (i == 0 && lam == mu.union(&Partition::new(vec![ctx.p])?));
                if !matches!(&cert, Ok(c) if c.runner == i) || !law {
                    bad.push(json!({"mu": mu, "lambda": lam, "runner": i, "strip": cert.is_ok(), "parity_law": law}));
                }
            }
        }
    }
    Ok(CheckReport::new("stembridge", ctx_params(ctx), bad.is_empty(), json!({"pairs": pairs, "failures": bad})))
}

/// 𝔣_{(p-j,j)} on the runner-i strip above ρ equals [i+j ≤ ℓ].
pub fn check_hook_strip(ctx: &RockContext) -> Result<CheckReport> {
    let l = ctx.ell();
    let mut table = Vec::new();
    let mut ok = true;
    for i in 0..=l {
        let lam = crate::brauer_trees::rho_j(&ctx.rho, ctx.p, i)?;
        for j in 0..=l {
            let nu = Partition::strict(if j == 0 { vec![ctx.p] } else { vec![ctx.p - j, j] })?;
            let f = f_coeff(&lam, &ctx.rho, &nu)?;
            let want = u64::from(i + j <= l);
            ok &= f == want;
            table.push(json!({"i": i, "j": j, "f": f, "expected": want}));
        }
    }
    Ok(CheckReport::new("hook-strip", ctx_params(ctx), ok, json!({"table": table})))
}

pub fn check_phi_kernel(ctx: &RockContext) -> Result<CheckReport> {
    let nmv = nmv_cached(&ctx.l_space())?;
    let mut bad = Vec::new();
    for g in &nmv.generators {
        let v = phi(g)?;
        if !v.is_zero() {
            bad.push(json!({"generator": refined_json(g), "phi": scalar_json(&v)}));
        }
    }
    Ok(CheckReport::new(
        "phi-kernel",
        ctx_params(ctx),
        bad.is_empty(),
        json!({"generators": nmv.generators.len(), "failures": bad}),
    ))
}

/// Weight-one tree edges against the d = 1 generators, under (ρ; j) ↦ ρ^j.
pub fn check_weight_one(rho: &Partition, p: u32) -> Result<CheckReport> {
    let tree = weight_one_map(rho, p)?;
    let nmv = nmv_basis(&CharSpace::L { rho: rho.clone(), p, d: 1 })?;
    let images: Vec<Partition> = (0..=ell(p)).map(|j| crate::brauer_trees::rho_j(rho, p, j)).collect::<Result<_>>()?;
    let mut from_nmv: Vec<RefinedVector> = nmv
        .generators
        .iter()
        .map(|g| {
            let mut v = Vector::zero(tree.space.clone());
            for ((l, s), c) in g.iter() {
                let Label::Tuple(js) = l else { unreachable!() };
                v.add_term((Label::Part(images[js[0] as usize].clone()), *s), c);
            }
            v
        })
        .collect();
    let mut edges = tree.edge_characters();
    let key = |v: &RefinedVector| v.iter().map(|(k, c)| (k.clone(), c.clone())).collect::<Vec<_>>();
    from_nmv.sort_by_key(key);
    edges.sort_by_key(key);
    let pass = from_nmv == edges;
    Ok(CheckReport::new(
        "weight-one",
        json!({"rho": rho, "p": p}),
        pass,
        json!({"tree": format!("{:?}", tree.tree.kind), "edges": edges.iter().map(refined_json).collect::<Vec<_>>()}),
    ))
}

/// Ω-periodicity and the case tables for one tree.
pub fn check_tree(kind: TreeKind, l: u32) -> Result<CheckReport> {
    use crate::brauer_trees::Node::*;
    let t = BrauerTree::build(kind, l)?;
    let len = t.walk_len() as u64;
    let w = t.walk();
    let mut ok = w.len() as u64 == len;
    for idx in 0..w.len() {
        for n in 0..2 * len {
            ok &= t.heller_at(idx, n)? == t.heller_at(idx, n + len)?;
        }
    }
    for pair in w.windows(2).chain(std::iter::once(&[w[w.len() - 1], w[0]][..])) {
        ok &= t.edges().iter().any(|&(a, b)| (a, b) == (pair[0], pair[1]) || (b, a) == (pair[0], pair[1]));
    }
    let mut table = Vec::new();
    match kind {
        TreeKind::B => {
            for n in 0..len as u32 {
                let want = match n {
                    n if n < l => Plus(l - n),
                    n if n == l => Center,
                    n if n <= 2 * l => Minus(n - l),
                    n if n < 3 * l => Minus(3 * l - n),
                    n if n == 3 * l => Center,
                    n => Plus(n - 3 * l),
                };
                let got = t.heller(Plus(l), n as u64)?;
                ok &= got == vec![want];
                table.push(json!({"n": n, "got": got[0].to_string(), "expected": want.to_string()}));
            }
        }
        TreeKind::A => {
            for n in 0..len as u32 {
                let want = match n {
                    n if n < l => Plain(l - n),
                    n if n == l => Exc,
                    n => Plain(n - l),
                };
                let got = t.heller(Plain(l), n as u64)?;
                ok &= got == vec![want];
                table.push(json!({"n": n, "got": got[0].to_string(), "expected": want.to_string()}));
            }
        }
    }
    Ok(CheckReport::new("tree", json!({"kind": format!("{kind:?}"), "ell": l}), ok, json!({"table": table})))
}

/// Every check, for the first generated core of each parity at each d ≤ dmax.
pub fn run_suite(p: u32, dmax: u32, exec: Exec) -> Result<Vec<CheckReport>> {
    #[derive(Clone)]
    enum Job {
        Sqd(u32),
        Ctx(RockContext, &'static str),
        Lam(RockContext, Partition, &'static str),
        Reduced(Partition, Vec<u32>),
        WeightOne(Partition),
        Tree(TreeKind, u32),
    }
    let mut jobs: Vec<Job> = (0..=10).map(Job::Sqd).collect();
    for d in 1..=dmax {
        for odd in [false, true] {
            let rho = generate(p, d, odd, 1)?.remove(0);
            let ctx = RockContext::new(rho.clone(), p, d)?;
            for name in ["htog-adjoint", "hyp-nonneg", "block-count", "stembridge", "phi-kernel"] {
                jobs.push(Job::Ctx(ctx.clone(), name));
            }
            if d == 1 {
                jobs.push(Job::Ctx(ctx.clone(), "hook-strip"));
            }
            for lam in block_enum_with(&rho, p, d, None, exec)? {
                jobs.push(Job::Lam(ctx.clone(), lam.clone(), "htoj"));
                jobs.push(Job::Lam(ctx.clone(), lam, "restrict-recursion"));
            }
            for dc in compositions(d, ell(p) as usize + 1) {
                jobs.push(Job::Reduced(rho.clone(), dc));
            }
        }
    }
    for odd in [false, true] {
        for rho in generate(p, 1, odd, 3)? {
            jobs.push(Job::WeightOne(rho));
        }
    }
    for l in 1..=ell(p).max(1) {
        jobs.push(Job::Tree(TreeKind::A, l));
        jobs.push(Job::Tree(TreeKind::B, l));
    }
    exec.map(&jobs, |job| match job {
        Job::Sqd(n) => Ok(check_dim_sqd(*n)),
        Job::Ctx(ctx, name) => check_named_ctx(name, ctx),
        Job::Lam(ctx, lam, "htoj") => check_htoj(ctx, lam),
        Job::Lam(ctx, lam, _) => check_restrict_recursion(ctx, lam),
        Job::Reduced(rho, dc) => check_dim_reduced(rho, p, dc),
        Job::WeightOne(rho) => check_weight_one(rho, p),
        Job::Tree(kind, l) => check_tree(*kind, *l),
    })
    .into_iter()
    .collect()
}

fn check_named_ctx(name: &str, ctx: &RockContext) -> Result<CheckReport> {
    match name {
        "htog-adjoint" => check_htog_adjoint(ctx),
        "hyp-nonneg" => check_hyp_nonneg(ctx),
        "block-count" => check_block_count(ctx),
        "stembridge" => check_stembridge(ctx),
        "hook-strip" => check_hook_strip(ctx),
        "phi-kernel" => check_phi_kernel(ctx),
        _ => Err(Error::Domain(format!("unknown check {name}"))),
    }
}

/// Named check over a whole block (per-λ checks are run for every λ).
pub fn check_block(name: &str, ctx: &RockContext) -> Result<Vec<CheckReport>> {
    match name {
        "htoj" | "restrict-recursion" => block_enum(&ctx.rho, ctx.p, ctx.d, None)?
            .iter()
            .map(|l| if name == "htoj" { check_htoj(ctx, l) } else { check_restrict_recursion(ctx, l) })
            .collect(),
        _ => Ok(vec![check_named_ctx(name, ctx)?]),
    }
}

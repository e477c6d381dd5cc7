//! `rock`: command-line access to the rock-core operations and checks.

mod cache;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use rock_core::abacus::{self, block_enum_with, core_weight, k_product, neighbors, quotient};
use rock_core::brauer_trees::{weight_one_map, BrauerTree, Node, TreeKind};
use rock_core::partitions::{box_moves, enumerate, path_count, Dir};
use rock_core::rock_verify::{self as rv, char_json, refined_json, scalar_json, CheckReport};
use rock_core::rouquier::{generate, is_rouquier, strip_classify};
use rock_core::stembridge::{f_coeff, induce_with, rock_branch, rock_induce_plus, BranchDir, RockContext};
use rock_core::supercharacters::{m_action, orbit_sum, CharSpace, CharVector, Label, Sign, Vector};
use rock_core::{Exec, Kind, Partition, Sqrt2Scalar};

use output::Out;

#[derive(Parser)]
#[command(name = "rock", version, about = "RoCK block combinatorics and character checks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Path-count cache file, read before and written after the command.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Indented JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Run batch work on one thread.
    #[arg(long, global = true)]
    seq: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Ordinary,
    Strict,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Ordinary => Kind::Ordinary,
            KindArg::Strict => Kind::Strict,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DirArg {
    Add,
    Remove,
}

impl From<DirArg> for Dir {
    fn from(d: DirArg) -> Dir {
        match d {
            DirArg::Add => Dir::Add,
            DirArg::Remove => Dir::Remove,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BranchArg {
    Induce,
    Restrict,
}

#[derive(Clone, Copy, ValueEnum)]
enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceArg {
    L,
    H,
}

#[derive(Clone, Copy, ValueEnum)]
enum SignArg {
    Plus,
    Minus,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeArg {
    A,
    B,
}

impl From<TreeArg> for TreeKind {
    fn from(t: TreeArg) -> TreeKind {
        match t {
            TreeArg::A => TreeKind::A,
            TreeArg::B => TreeKind::B,
        }
    }
}

/// A d-Rouquier core.
#[derive(Args)]
struct Ctx {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    rho: Partition,
    #[arg(long, default_value_t = 1)]
    d: u32,
}

impl Ctx {
    fn build(&self) -> rock_core::Result<RockContext> {
        RockContext::new(self.rho.clone(), self.p, self.d)
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// All partitions of n with their chain counts.
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = KindArg::Strict)]
        kind: KindArg,
    },
    /// Bar-core and bar-weight.
    Core {
        #[arg(long)]
        p: u32,
        #[arg(long, alias = "lambda")]
        partition: Partition,
    },
    /// Bar-quotient over the core, with its K-product.
    Quotient {
        #[arg(long)]
        p: u32,
        #[arg(long, alias = "partition")]
        lambda: Partition,
    },
    /// Bar moves on runner j (all runners if j is omitted), or box moves without --p.
    Neighbors {
        #[arg(long, alias = "partition")]
        lambda: Partition,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        j: Option<u32>,
        #[arg(long, value_enum, default_value_t = DirArg::Add)]
        dir: DirArg,
        #[arg(long, value_enum, default_value_t = KindArg::Strict)]
        kind: KindArg,
    },
    /// Partitions of a block, optionally with fixed quotient sizes.
    Block {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        rho: Partition,
        #[arg(long)]
        d: u32,
        #[arg(long, value_delimiter = ',')]
        dcomp: Option<Vec<u32>>,
    },
    /// d-Rouquier test and generation.
    Rouquier {
        #[command(subcommand)]
        cmd: RouquierCmd,
    },
    /// Strip shape of a one-bar extension.
    Strip {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
    },
    /// Number of admissible tableaux of shape λ∖μ and content ν.
    Fcoeff {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
    },
    /// Induction of the outer product of ξ_μ and ξ_ν.
    Induce {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
    },
    /// Branching inside a RoCK block by the abacus closed form.
    Branch {
        #[command(flatten)]
        ctx: Ctx,
        /// Source for induce; defaults to ρ.
        #[arg(long)]
        mu: Option<Partition>,
        /// Source for restrict.
        #[arg(long)]
        lambda: Option<Partition>,
        #[arg(long, default_value_t = 0)]
        j: u32,
        #[arg(long, value_enum, default_value_t = BranchArg::Induce)]
        dir: BranchArg,
        /// Image of the ⁺ constituent on irreducible labels (induce only).
        #[arg(long)]
        plus: bool,
    },
    /// The M-action on ξ_{μ,j}.
    Maction {
        #[command(flatten)]
        ctx: Ctx,
        /// Defaults to ρ.
        #[arg(long)]
        mu: Option<Partition>,
        #[arg(long)]
        j: u32,
    },
    /// Slot-permutation orbit sum with its constituent count.
    Orbit {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        rho: Partition,
        #[arg(long, value_delimiter = ',')]
        dcomp: Vec<u32>,
    },
    /// Closed-form induced orbit character on the block.
    Hyp {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        rho: Partition,
        #[arg(long, value_delimiter = ',')]
        dcomp: Vec<u32>,
    },
    /// Non-maximal-support generators of an L- or H-space.
    Nmv {
        #[command(flatten)]
        ctx: Ctx,
        #[arg(long, value_enum, default_value_t = SpaceArg::L)]
        space: SpaceArg,
    },
    /// φ of one L-space label.
    Phi {
        #[command(flatten)]
        ctx: Ctx,
        /// Slot values j₁..j_d.
        #[arg(long, value_delimiter = ',')]
        tuple: Vec<u32>,
        #[arg(long, value_enum)]
        sign: Option<SignArg>,
    },
    /// Run a named check, or `all`.
    Verify(VerifyArgs),
    /// Line Brauer trees.
    Tree {
        #[command(subcommand)]
        cmd: TreeCmd,
    },
}

#[derive(Subcommand)]
enum RouquierCmd {
    Check {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        rho: Partition,
        #[arg(long)]
        d: u32,
    },
    Gen {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum, default_value_t = Parity::Even)]
        parity: Parity,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
}

#[derive(Subcommand)]
enum TreeCmd {
    Build {
        #[arg(long, value_enum)]
        kind: TreeArg,
        #[arg(long)]
        ell: u32,
    },
    Walk {
        #[arg(long, value_enum)]
        kind: TreeArg,
        #[arg(long)]
        ell: u32,
    },
    /// Walk entries n steps after each occurrence of a node.
    Heller {
        #[arg(long, value_enum)]
        kind: TreeArg,
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        start: Node,
        #[arg(long)]
        n: u64,
    },
    /// Weight-one labeling of the tree for a 1-Rouquier core.
    Weight1 {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        rho: Partition,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// htoj, htog-adjoint, restrict-recursion, dim-sqd, dim-reduced,
    /// hyp-nonneg, block-count, stembridge, hook-strip, phi-kernel,
    /// weight-one, tree, or all.
    name: String,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    d: Option<u32>,
    #[arg(long)]
    rho: Option<Partition>,
    #[arg(long)]
    lambda: Option<Partition>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, value_delimiter = ',')]
    dcomp: Option<Vec<u32>>,
    #[arg(long, value_enum)]
    kind: Option<TreeArg>,
    #[arg(long)]
    ell: Option<u32>,
    /// Largest weight for `all`.
    #[arg(long, default_value_t = 2)]
    dmax: u32,
}

/// Usage or domain failure; exit code 2.
struct Failure(String);

impl From<rock_core::Error> for Failure {
    fn from(e: rock_core::Error) -> Self {
        Failure(e.to_string())
    }
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure(s)
    }
}

type Run = Result<(Out, bool), Failure>;

fn big(x: &BigUint) -> Value {
    x.to_string().parse::<Value>().unwrap_or_else(|_| Value::String(x.to_string()))
}

fn need<T>(v: Option<T>, flag: &str, name: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure(format!("verify {name} needs --{flag}")))
}

fn ok(out: Out) -> Run {
    Ok((out, true))
}

fn vector(space: &CharSpace, v: Value) -> Out {
    Out::table(json!({"space": space, "vector": v}), "vector")
}

fn report(r: &CheckReport) -> (Out, bool) {
    let mut o = serde_json::Map::new();
    o.insert("verdict".into(), json!(r.verdict));
    match &r.details {
        Value::Object(d) => o.extend(d.clone()),
        other => {
            o.insert("details".into(), other.clone());
        }
    }
    (Out::new(Value::Object(o)), r.passed())
}

fn summary(reports: &[CheckReport], head: Value) -> (Out, bool) {
    let passed = reports.iter().filter(|r| r.passed()).count();
    let all = passed == reports.len();
    let mut v = json!({"verdict": if all { "pass" } else { "fail" }});
    if let Value::Object(h) = head {
        v.as_object_mut().unwrap().extend(h);
    }
    v["passed"] = json!(passed);
    v["failed"] = json!(reports.len() - passed);
    v["checks"] = Value::Array(
        reports
            .iter()
            .map(|r| {
                let mut c = json!({"name": r.name, "params": r.params, "verdict": r.verdict});
                if !r.passed() {
                    c["details"] = r.details.clone();
                }
                c
            })
            .collect(),
    );
    (Out::table(v, "checks"), all)
}

fn verify(a: &VerifyArgs, exec: Exec) -> Run {
    let name = a.name.as_str();
    let ctx = || -> Result<RockContext, Failure> {
        Ok(RockContext::new(need(a.rho.clone(), "rho", name)?, need(a.p, "p", name)?, a.d.unwrap_or(1))?)
    };
    Ok(match name {
        "all" => {
            let p = need(a.p, "p", name)?;
            let reports = rv::run_suite(p, a.dmax, exec)?;
            summary(&reports, json!({"p": p, "dmax": a.dmax}))
        }
        "dim-sqd" => report(&rv::check_dim_sqd(need(a.n, "n", name)?)),
        "dim-reduced" => report(&rv::check_dim_reduced(
            &need(a.rho.clone(), "rho", name)?,
            need(a.p, "p", name)?,
            &need(a.dcomp.clone(), "dcomp", name)?,
        )?),
        "weight-one" => report(&rv::check_weight_one(&need(a.rho.clone(), "rho", name)?, need(a.p, "p", name)?)?),
        "tree" => report(&rv::check_tree(need(a.kind, "kind", name)?.into(), need(a.ell, "ell", name)?)?),
        "htoj" | "restrict-recursion" => {
            let c = ctx()?;
            match &a.lambda {
                Some(l) if name == "htoj" => report(&rv::check_htoj(&c, l)?),
                Some(l) => report(&rv::check_restrict_recursion(&c, l)?),
                None => summary(&rv::check_block(name, &c)?, json!({"name": name})),
            }
        }
        "htog-adjoint" | "hyp-nonneg" | "block-count" | "stembridge" | "hook-strip" | "phi-kernel" => {
            report(&rv::check_block(name, &ctx()?)?.remove(0))
        }
        other => return Err(Failure(format!("unknown check {other:?}"))),
    })
}

fn run(cmd: &Cmd, exec: Exec) -> Run {
    match cmd {
        Cmd::Enumerate { n, kind } => {
            let k: Kind = (*kind).into();
            let rows: Vec<Value> = enumerate(*n, k)
                .iter()
                .map(|l| json!({"partition": l, "k": big(&path_count(l, k)), "odd": l.is_odd()}))
                .collect();
            ok(Out::table(json!({"n": n, "kind": k, "count": rows.len(), "partitions": rows}), "partitions"))
        }
        Cmd::Core { p, partition } => {
            let (core, w) = core_weight(partition, *p)?;
            ok(Out::new(json!({"core": core, "weight": w})))
        }
        Cmd::Quotient { p, lambda } => {
            let (core, w) = core_weight(lambda, *p)?;
            let q = quotient(lambda, *p)?;
            let k = k_product(lambda, *p)?;
            ok(Out::new(json!({"core": core, "weight": w, "quotient": q.parts, "k": big(&k)})))
        }
        Cmd::Neighbors { lambda, p, j, dir, kind } => {
            let dir: Dir = (*dir).into();
            let rows: Vec<Value> = match p {
                Some(p) => {
                    let js: Vec<u32> = match j {
                        Some(j) => vec![*j],
                        None => (0..=abacus::ell(*p)).collect(),
                    };
                    let mut rows = Vec::new();
                    for j in js {
                        for m in neighbors(lambda, *p, j, dir)? {
                            rows.push(json!({"j": j, "partition": m}));
                        }
                    }
                    rows
                }
                None => {
                    let k: Kind = (*kind).into();
                    if !lambda.is_kind(k) {
                        return Err(Failure(format!("{lambda} is not a valid {k:?} partition")));
                    }
                    let mut v = box_moves(lambda, k, dir);
                    v.sort_by(|a, b| b.cmp(a));
                    v.into_iter().map(|m| json!({"partition": m})).collect()
                }
            };
            ok(Out::table(json!({"neighbors": rows}), "neighbors"))
        }
        Cmd::Block { p, rho, d, dcomp } => {
            let parts = block_enum_with(rho, *p, *d, dcomp.as_deref(), exec)?;
            let rows = parts
                .iter()
                .map(|l| Ok(json!({"partition": l, "quotient": abacus::quotient_over(l, rho, *d, *p)?.parts, "odd": l.is_odd()})))
                .collect::<Result<Vec<Value>, Failure>>();
            // the quotient is only defined on the Rouquier domain
            let rows =
                rows.unwrap_or_else(|_| parts.iter().map(|l| json!({"partition": l, "odd": l.is_odd()})).collect());
            ok(Out::table(json!({"count": parts.len(), "partitions": rows}), "partitions"))
        }
        Cmd::Rouquier { cmd: RouquierCmd::Check { p, rho, d } } => {
            let r = is_rouquier(rho, *p, *d)?;
            ok(Out::new(json!({"rouquier": r})))
        }
        Cmd::Rouquier { cmd: RouquierCmd::Gen { p, d, parity, count } } => {
            let cores = generate(*p, *d, matches!(parity, Parity::Odd), *count)?;
            ok(Out::table(json!({"cores": cores}), "cores"))
        }
        Cmd::Strip { p, lambda, mu } => ok(Out::new(serde_json::to_value(strip_classify(lambda, mu, *p)?).unwrap())),
        Cmd::Fcoeff { lambda, mu, nu } => ok(Out::new(json!({"f": f_coeff(lambda, mu, nu)?}))),
        Cmd::Induce { mu, nu } => {
            let v = induce_with(mu, nu, exec)?;
            ok(vector(&v.space, char_json(&v)))
        }
        Cmd::Branch { ctx, mu, lambda, j, dir, plus } => {
            let c = ctx.build()?;
            match dir {
                BranchArg::Induce => {
                    let mu = mu.clone().unwrap_or_else(|| c.rho.clone());
                    if *plus {
                        let v = rock_induce_plus(&c, &mu, *j)?;
                        ok(vector(&v.space, refined_json(&v)))
                    } else {
                        let v = rock_branch(&c, &mu, *j, BranchDir::Induce)?;
                        ok(vector(&v.space, char_json(&v)))
                    }
                }
                BranchArg::Restrict => {
                    let l = lambda.clone().ok_or_else(|| Failure("branch --dir restrict needs --lambda".into()))?;
                    let v = rock_branch(&c, &l, 0, BranchDir::Restrict)?;
                    ok(vector(&v.space, char_json(&v)))
                }
            }
        }
        Cmd::Maction { ctx, mu, j } => {
            let c = ctx.build()?;
            let mu = mu.clone().unwrap_or_else(|| c.rho.clone());
            c.check_member(&mu, c.d - 1)?;
            let v = m_action(&CharVector::unit(c.h_space(), Label::Pair(mu, *j))?)?;
            ok(vector(&v.space, char_json(&v)))
        }
        Cmd::Orbit { p, rho, dcomp } => {
            let o = orbit_sum(rho, *p, dcomp)?;
            ok(Out::table(
                json!({"certificate": big(&o.certificate), "space": o.vector.space, "vector": refined_json(&o.vector)}),
                "vector",
            ))
        }
        Cmd::Hyp { p, rho, dcomp } => {
            let v = rv::hyp_coeffs(rho, *p, dcomp)?;
            ok(vector(&v.space, char_json(&v)))
        }
        Cmd::Nmv { ctx, space } => {
            let c = ctx.build()?;
            let sp = match space {
                SpaceArg::L => c.l_space(),
                SpaceArg::H => c.h_space(),
            };
            let n = rv::nmv_basis(&sp)?;
            let mut rows = Vec::new();
            for (k, g) in n.generators.iter().enumerate() {
                for t in refined_json(g).as_array().unwrap() {
                    let mut t = t.clone();
                    t.as_object_mut().unwrap().shift_insert(0, "generator".into(), json!(k));
                    rows.push(t);
                }
            }
            ok(Out::table(
                json!({"space": sp, "generators": n.generators.len(), "rank": n.lattice.rank(), "terms": rows}),
                "terms",
            ))
        }
        Cmd::Phi { ctx, tuple, sign } => {
            let c = ctx.build()?;
            let sp = c.l_space();
            let label = Label::Tuple(tuple.clone());
            let s = match (sp.label_is_odd(&label)?, sign) {
                (false, None) => Sign::Whole,
                (false, Some(_)) => return Err(Failure(format!("{label} does not split; drop --sign"))),
                (true, Some(SignArg::Minus)) => Sign::Minus,
                (true, _) => Sign::Plus,
            };
            let mut v = Vector::zero(sp);
            v.add_term((label, s), &Sqrt2Scalar::int(1));
            ok(Out::new(json!({"value": scalar_json(&rv::phi(&v)?)})))
        }
        Cmd::Verify(a) => verify(a, exec),
        Cmd::Tree { cmd } => match cmd {
            TreeCmd::Build { kind, ell } => {
                let t = BrauerTree::build((*kind).into(), *ell)?;
                let nodes: Vec<String> = t.nodes.iter().map(Node::to_string).collect();
                let edges: Vec<Value> =
                    t.edges().iter().map(|(a, b)| json!({"from": a.to_string(), "to": b.to_string()})).collect();
                ok(Out::table(
                    json!({"kind": t.kind, "ell": t.ell, "exceptional_multiplicity": t.exceptional_multiplicity, "nodes": nodes, "edges": edges}),
                    "edges",
                ))
            }
            TreeCmd::Walk { kind, ell } => {
                let t = BrauerTree::build((*kind).into(), *ell)?;
                let walk: Vec<String> = t.walk().iter().map(Node::to_string).collect();
                ok(Out::table(json!({"kind": t.kind, "ell": t.ell, "period": t.walk_len(), "walk": walk}), "walk"))
            }
            TreeCmd::Heller { kind, ell, start, n } => {
                let t = BrauerTree::build((*kind).into(), *ell)?;
                let image: Vec<String> = t.heller(*start, *n)?.iter().map(Node::to_string).collect();
                ok(Out::table(json!({"start": start.to_string(), "n": n, "image": image}), "image"))
            }
            TreeCmd::Weight1 { p, rho } => {
                let t = weight_one_map(rho, *p)?;
                let labels: Vec<Value> = t
                    .labels
                    .iter()
                    .map(|(n, ls)| {
                        let names: Vec<String> = ls.iter().map(|(l, s)| format!("{l}{}", s.suffix())).collect();
                        json!({"node": n.to_string(), "characters": names.join(" + ")})
                    })
                    .collect();
                ok(Out::table(json!({"kind": t.tree.kind, "ell": t.tree.ell, "labels": labels}), "labels"))
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(path) = &cli.cache {
        if let Err(e) = cache::load(path) {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let exec = if cli.seq { Exec::Seq } else { Exec::default() };
    let (out, pass) = match run(&cli.cmd, exec) {
        Ok(r) => r,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let text = match cli.format {
        Format::Json => Ok(output::json(&out, cli.pretty)),
        Format::Csv => output::csv(&out),
    };
    match text {
        Ok(t) => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            // a closed pipe (e.g. `| head`) is not an error
            if let Err(e) = writeln!(out, "{}", t.trim_end()) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    if let Some(path) = &cli.cache {
        if let Err(e) = cache::save(path) {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

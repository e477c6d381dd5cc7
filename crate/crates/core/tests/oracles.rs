//! Brute-force oracles and hand-computed reference values.

mod common;

use num_bigint::{BigInt, BigUint};

use rock_core::abacus::{block_enum, core_weight, is_bar_core, k_product, neighbors, quotient};
use rock_core::brauer_trees::{weight_one_map, BrauerTree, Node, TreeKind};
use rock_core::partitions::{box_moves, enumerate, path_count, Dir, Kind, Partition};
use rock_core::rock_verify::{
    check_dim_reduced, check_dim_sqd, check_htoj, flatten, hyp_coeffs, nmv_basis, phi, phi_label,
};
use rock_core::rouquier::{generate, is_rouquier, strip_classify};
use rock_core::stembridge::{f_coeff, induce, rock_induce, rock_restrict, tableaux, RockContext};
use rock_core::supercharacters::{m_action, orbit_sum, CharSpace, CharVector, Label, Sign, Vector};
use rock_core::Sqrt2Scalar;

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn s(a: i64, b: i64) -> Sqrt2Scalar {
    Sqrt2Scalar::new(a, b)
}

fn part_vec(space: CharSpace, terms: &[(&[u32], i64)]) -> CharVector {
    let mut v = Vector::zero(space);
    for (l, c) in terms {
        v.add_term(Label::Part(p(l)), &s(*c, 0));
    }
    v
}

fn pair_vec(space: CharSpace, terms: &[(&[u32], u32, i64)]) -> CharVector {
    let mut v = Vector::zero(space);
    for (l, j, c) in terms {
        v.add_term(Label::Pair(p(l), *j), &s(*c, 0));
    }
    v
}

#[test]
fn path_counts_match_chain_walks() {
    for n in 0..=8 {
        for (kind, strict) in [(Kind::Ordinary, false), (Kind::Strict, true)] {
            for lam in enumerate(n, kind) {
                assert_eq!(path_count(&lam, kind), BigUint::from(common::chains(lam.parts(), strict)), "{lam}");
            }
        }
    }
    for n in 0..=14 {
        for lam in enumerate(n, Kind::Ordinary) {
            assert_eq!(path_count(&lam, Kind::Ordinary), common::hook_count(lam.parts()));
        }
        for lam in enumerate(n, Kind::Strict) {
            assert_eq!(path_count(&lam, Kind::Strict), common::shifted_count(lam.parts()));
        }
    }
}

#[test]
fn enumeration_matches_raw_listing() {
    for n in 0..=12 {
        for (kind, strict) in [(Kind::Ordinary, false), (Kind::Strict, true)] {
            let ours: Vec<Vec<u32>> = enumerate(n, kind).into_iter().map(Partition::into_parts).collect();
            let mut raw = common::raw_partitions(n, strict);
            raw.sort_by(|a, b| b.cmp(a));
            assert_eq!(ours, raw);
        }
    }
}

#[test]
fn small_enumerations_and_moves() {
    assert_eq!(enumerate(0, Kind::Strict), vec![Partition::empty()]);
    assert_eq!(enumerate(4, Kind::Ordinary).len(), 5);
    assert_eq!(enumerate(4, Kind::Strict), vec![p(&[4]), p(&[3, 1])]);
    let mut up = box_moves(&p(&[3, 1]), Kind::Strict, Dir::Add);
    up.sort();
    assert_eq!(up, vec![p(&[3, 2]), p(&[4, 1])]);
    assert_eq!(box_moves(&p(&[2, 1]), Kind::Strict, Dir::Remove), vec![p(&[2])]);
    assert_eq!(path_count(&p(&[2, 2]), Kind::Ordinary), BigUint::from(2u32));
    assert_eq!(path_count(&p(&[3, 1]), Kind::Strict), BigUint::from(2u32));
    assert_eq!(p(&[3, 1]).epsilon(), s(1, 0));
    assert_eq!(p(&[2, 1]).epsilon(), s(0, 1));
    assert_eq!(rock_core::partitions::epsilon(&[&p(&[2, 1]), &p(&[4, 1])]), s(1, 0));
}

#[test]
fn abacus_reference_values() {
    assert_eq!(core_weight(&p(&[7, 4, 2, 1]), 5).unwrap(), (p(&[7, 2]), 1));
    assert_eq!(core_weight(&p(&[5]), 5).unwrap(), (Partition::empty(), 1));
    assert_eq!(neighbors(&p(&[2, 1]), 5, 0, Dir::Add).unwrap(), vec![p(&[5, 2, 1])]);
    assert_eq!(neighbors(&p(&[2, 1]), 5, 1, Dir::Add).unwrap(), vec![p(&[6, 2])]);
    assert_eq!(neighbors(&p(&[5, 2, 1]), 5, 0, Dir::Remove).unwrap(), vec![p(&[2, 1])]);

    let q = quotient(&p(&[6, 2]), 5).unwrap();
    assert_eq!(q.parts, vec![Partition::empty(), p(&[1]), Partition::empty()]);
    let q = quotient(&p(&[5, 2, 1]), 5).unwrap();
    assert_eq!(q.parts, vec![p(&[1]), Partition::empty(), Partition::empty()]);
    let q = quotient(&p(&[12, 11, 7, 6, 2]), 5).unwrap();
    assert_eq!(q.parts, vec![Partition::empty(), p(&[1, 1]), Partition::empty()]);

    assert_eq!(block_enum(&p(&[2, 1]), 5, 1, None).unwrap(), vec![p(&[7, 1]), p(&[6, 2]), p(&[5, 2, 1])]);
    let two = block_enum(&p(&[12, 7, 6, 2, 1]), 5, 2, Some(&[0, 2, 0])).unwrap();
    assert_eq!(two.len(), 2);
    assert!(two.contains(&p(&[12, 11, 7, 6, 2])) && two.contains(&p(&[16, 12, 7, 2, 1])));
    assert_eq!(k_product(&p(&[6, 2]), 5).unwrap(), BigUint::from(1u32));
    assert_eq!(k_product(&p(&[12, 11, 7, 6, 2]), 5).unwrap(), BigUint::from(1u32));
}

#[test]
fn block_enum_matches_brute_force() {
    // every strict partition of the right size with the right core
    for (rho, pp, d) in [(p(&[2, 1]), 5u32, 2u32), (p(&[1]), 3, 3), (p(&[3, 2]), 7, 1)] {
        let n = rho.size() + pp * d;
        let mut want: Vec<Partition> =
            enumerate(n, Kind::Strict).into_iter().filter(|l| core_weight(l, pp).unwrap().0 == rho).collect();
        let mut got = block_enum(&rho, pp, d, None).unwrap();
        want.sort();
        got.sort();
        assert_eq!(got, want, "{rho} p={pp} d={d}");
    }
}

#[test]
fn rouquier_reference_values() {
    assert!(is_rouquier(&p(&[2, 1]), 5, 1).unwrap());
    assert!(!is_rouquier(&p(&[2, 1]), 5, 2).unwrap());
    assert!(!is_rouquier(&Partition::empty(), 5, 1).unwrap());
    assert_eq!(generate(5, 2, true, 1).unwrap(), vec![p(&[12, 7, 6, 2, 1])]);
    assert_eq!(generate(5, 1, true, 1).unwrap(), vec![p(&[2, 1])]);
    for rho in generate(7, 3, false, 3).unwrap() {
        assert!(is_bar_core(&rho, 7).unwrap());
    }

    let c = strip_classify(&p(&[6, 2]), &p(&[2, 1]), 5).unwrap();
    assert_eq!(c.runner, 1);
    let mut boxes = c.boxes.clone();
    boxes.sort();
    assert_eq!(boxes, vec![(1, 3), (1, 4), (1, 5), (1, 6), (2, 3)]);
    let c = strip_classify(&p(&[5, 2, 1]), &p(&[2, 1]), 5).unwrap();
    assert_eq!((c.runner, c.arm, c.leg), (0, 3, 3));
    let c = strip_classify(&p(&[7, 1]), &p(&[2, 1]), 5).unwrap();
    assert_eq!((c.runner, c.arm, c.leg), (2, 5, 1));
}

/// Semistandard marked shifted fillings by exhaustive product over all
/// letter assignments, then the row/column rules checked directly.
fn brute_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> usize {
    let outer: Vec<(u32, u32)> = lambda.shifted_boxes();
    let inner: std::collections::BTreeSet<(u32, u32)> = mu.shifted_boxes().into_iter().collect();
    let boxes: Vec<(u32, u32)> = outer.into_iter().filter(|b| !inner.contains(b)).collect();
    let top = 2 * nu.len() as u32;
    let n = boxes.len();
    if n as u32 != nu.size() {
        return 0;
    }
    let mut count = 0;
    let mut vals = vec![1u32; n];
    loop {
        let content: Vec<u32> =
            (1..=nu.len() as u32).map(|k| vals.iter().filter(|&&x| x.div_ceil(2) == k).count() as u32).collect();
        let ok = content == nu.parts()
            && boxes.iter().enumerate().all(|(a, &(r, c))| {
                boxes.iter().enumerate().all(|(b, &(r2, c2))| {
                    let (x, y) = (vals[a], vals[b]);
                    if r2 == r && c2 == c + 1 {
                        x <= y && !(x == y && x % 2 == 1)
                    } else if c2 == c && r2 == r + 1 {
                        x <= y && !(x == y && x % 2 == 0)
                    } else {
                        true
                    }
                })
            });
        if ok {
            count += 1;
        }
        let mut k = 0;
        while k < n && vals[k] == top {
            vals[k] = 1;
            k += 1;
        }
        if k == n {
            break;
        }
        vals[k] += 1;
    }
    count
}

#[test]
fn tableau_listing_matches_exhaustive_fill() {
    let cases = [
        (p(&[6, 2]), p(&[2, 1]), p(&[4, 1])),
        (p(&[6, 2]), p(&[2, 1]), p(&[3, 2])),
        (p(&[5, 2, 1]), p(&[2, 1]), p(&[4, 1])),
        (p(&[4, 2]), p(&[1]), p(&[3, 2])),
        (p(&[4, 3, 1]), p(&[3]), p(&[3, 2])),
        (p(&[5, 3, 1]), p(&[3, 1]), p(&[3, 2])),
    ];
    for (l, m, n) in cases {
        let (_, all) = tableaux(&l, &m, &n).unwrap();
        assert_eq!(all.len(), brute_tableaux(&l, &m, &n), "{l}/{m} content {n}");
    }
}

#[test]
fn stembridge_reference_values() {
    assert_eq!(f_coeff(&p(&[6, 2]), &p(&[2, 1]), &p(&[5])).unwrap(), 1);
    assert_eq!(f_coeff(&p(&[6, 2]), &p(&[2, 1]), &p(&[3, 2])).unwrap(), 0);
    assert_eq!(f_coeff(&p(&[6, 2]), &p(&[2, 1]), &p(&[4, 1])).unwrap(), 1);

    let full = CharSpace::Full { n: 8 };
    let want = part_vec(full, &[(&[5, 2, 1], 1), (&[6, 2], 2), (&[7, 1], 2)]);
    let got = induce(&p(&[2, 1]), &p(&[5])).unwrap();
    for (l, c) in got.iter() {
        assert_eq!(&want.coeff(l), c, "{l}");
    }
    for (l, c) in want.iter() {
        assert_eq!(&got.coeff(l), c);
    }
    assert_eq!(induce(&Partition::empty(), &p(&[4, 1])).unwrap(), part_vec(CharSpace::Full { n: 5 }, &[(&[4, 1], 1)]));
    let v = induce(&p(&[2, 1]), &p(&[3, 2])).unwrap();
    assert_eq!(v.coeff(&Label::Part(p(&[5, 2, 1]))), s(1, 0));

    let ctx = RockContext::new(p(&[2, 1]), 5, 1).unwrap();
    let g = ctx.g_space();
    assert_eq!(
        rock_induce(&ctx, &p(&[2, 1]), 0).unwrap(),
        part_vec(g.clone(), &[(&[5, 2, 1], 1), (&[6, 2], 2), (&[7, 1], 2)])
    );
    assert_eq!(rock_induce(&ctx, &p(&[2, 1]), 2).unwrap(), part_vec(g, &[(&[5, 2, 1], 1)]));
    assert_eq!(
        rock_restrict(&ctx, &p(&[5, 2, 1])).unwrap(),
        pair_vec(ctx.h_space(), &[(&[2, 1], 0, 1), (&[2, 1], 1, 2), (&[2, 1], 2, 2)])
    );
}

#[test]
fn character_reference_values() {
    let h = CharSpace::H { rho: p(&[2, 1]), p: 5, d: 1 };
    let m2 = m_action(&pair_vec(h.clone(), &[(&[2, 1], 2, 1)])).unwrap();
    assert_eq!(m2, pair_vec(h.clone(), &[(&[2, 1], 0, 1)]));
    let m0 = m_action(&pair_vec(h.clone(), &[(&[2, 1], 0, 1)])).unwrap();
    assert_eq!(m0, pair_vec(h, &[(&[2, 1], 0, 1), (&[2, 1], 1, 2), (&[2, 1], 2, 2)]));

    assert_eq!(orbit_sum(&p(&[2, 1]), 5, &[1, 1, 0]).unwrap().certificate, BigUint::from(2u32));
    assert_eq!(orbit_sum(&p(&[2, 1]), 5, &[1, 0, 0]).unwrap().certificate, BigUint::from(2u32));

    let rho = p(&[12, 7, 6, 2, 1]);
    let g = CharSpace::G { rho: rho.clone(), p: 5, d: 2 };
    assert_eq!(
        hyp_coeffs(&rho, 5, &[0, 2, 0]).unwrap(),
        part_vec(g.clone(), &[(&[12, 11, 7, 6, 2], 1), (&[16, 12, 7, 2, 1], 1)])
    );
    assert_eq!(hyp_coeffs(&rho, 5, &[2, 0, 0]).unwrap(), part_vec(g, &[(&[12, 10, 7, 6, 2, 1], 2)]));
    let g1 = CharSpace::G { rho: p(&[2, 1]), p: 5, d: 1 };
    for (i, lam) in [(0usize, &[5u32, 2, 1][..]), (1, &[6, 2]), (2, &[7, 1])] {
        let mut dc = vec![0; 3];
        dc[i] = 1;
        assert_eq!(hyp_coeffs(&p(&[2, 1]), 5, &dc).unwrap(), part_vec(g1.clone(), &[(lam, 1)]));
    }
}

#[test]
fn lattice_reference_values() {
    let l = CharSpace::L { rho: p(&[2, 1]), p: 5, d: 1 };
    let nmv = nmv_basis(&l).unwrap();
    let t = |j: u32| Label::Tuple(vec![j]);
    let mut g1 = Vector::zero(l.clone());
    g1.add_term((t(0), Sign::Plus), &s(1, 0));
    g1.add_term((t(0), Sign::Minus), &s(1, 0));
    g1.add_term((t(1), Sign::Whole), &s(1, 0));
    let mut g2 = Vector::zero(l.clone());
    g2.add_term((t(1), Sign::Whole), &s(1, 0));
    g2.add_term((t(2), Sign::Whole), &s(1, 0));
    assert_eq!(nmv.generators.len(), 2);
    assert!(nmv.generators.contains(&g1) && nmv.generators.contains(&g2));
    for g in &nmv.generators {
        assert_eq!(phi(g).unwrap(), Sqrt2Scalar::new(0, 0));
    }
    assert_eq!(phi_label(&l, &t(0)).unwrap(), s(1, 0));
    assert_eq!(phi_label(&l, &t(1)).unwrap(), s(-2, 0));

    // the weight-one tree edges span the same generators
    let tree = weight_one_map(&p(&[2, 1]), 5).unwrap();
    assert_eq!(tree.edge_characters().len(), nmv.generators.len());

    // H-space, even μ: ξ_{μ,0} + ξ^±_{μ,1}
    let h = CharSpace::H { rho: p(&[12, 7, 2, 1]), p: 5, d: 1 };
    let hn = nmv_basis(&h).unwrap();
    let mu = p(&[12, 7, 2, 1]);
    assert!(!mu.is_odd());
    for sign in [Sign::Plus, Sign::Minus] {
        let mut g = Vector::zero(h.clone());
        g.add_term((Label::Pair(mu.clone(), 0), Sign::Whole), &s(1, 0));
        g.add_term((Label::Pair(mu.clone(), 1), sign), &s(1, 0));
        assert!(hn.generators.contains(&g));
        assert!(hn.lattice.contains(&flatten(&g, &hn.basis).unwrap()));
    }
}

#[test]
fn check_reference_values() {
    let ctx = RockContext::new(p(&[2, 1]), 5, 1).unwrap();
    let r = check_htoj(&ctx, &p(&[5, 2, 1])).unwrap();
    assert!(r.passed());
    let h = ctx.h_space();
    let diff = pair_vec(h.clone(), &[(&[2, 1], 0, 4), (&[2, 1], 1, 6), (&[2, 1], 2, 2)]).to_refined().unwrap();
    let nmv = nmv_basis(&h).unwrap();
    assert!(nmv.contains(&diff).unwrap());
    let expected: Vec<BigInt> = flatten(&diff, &nmv.basis).unwrap();
    let gens: Vec<Vec<BigInt>> = nmv.generators.iter().map(|g| flatten(g, &nmv.basis).unwrap()).collect();
    assert!(common::rational_member(&gens, &expected));

    let r = check_dim_sqd(4);
    assert!(r.passed());
    assert_eq!(r.details["lhs"], 24);
    assert_eq!(r.details["rhs"], 24);
    assert!(check_dim_reduced(&p(&[12, 7, 6, 2, 1]), 5, &[0, 2, 0]).unwrap().passed());
}

#[test]
fn tree_reference_values() {
    use Node::*;
    let b = BrauerTree::build(TreeKind::B, 2).unwrap();
    assert_eq!(b.walk(), vec![Plus(2), Plus(1), Center, Minus(1), Minus(2), Minus(1), Center, Plus(1)]);
    let t = weight_one_map(&p(&[2, 1]), 5).unwrap();
    assert_eq!(t.tree.kind, TreeKind::A);
    let plain = |l: &[u32]| (Label::Part(p(l)), Sign::Whole);
    assert_eq!(t.character(Plain(1)).coeff(&plain(&[6, 2])), s(1, 0));
    assert_eq!(t.character(Plain(2)).coeff(&plain(&[7, 1])), s(1, 0));
    let exc = t.character(Exc);
    assert_eq!(exc.coeff(&(Label::Part(p(&[5, 2, 1])), Sign::Plus)), s(1, 0));
    assert_eq!(exc.coeff(&(Label::Part(p(&[5, 2, 1])), Sign::Minus)), s(1, 0));
}

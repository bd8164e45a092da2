mod common;

use std::collections::{BTreeSet, HashMap};

use common::{brute_force_rho, random_rational, rng};
use jacobi_bc::jack::partitions;
use jacobi_bc::rootsystems::{
    dominance_leq, dominant_rep, orbit, positive_roots, rho, saturation_set, RootKind, WeylElement,
};
use jacobi_bc::{Multiplicity, RootSystem, Weight};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn systems(max_rank: usize) -> Vec<RootSystem> {
    let mut out: Vec<RootSystem> = (1..=max_rank).map(|n| RootSystem::bc(n).unwrap()).collect();
    out.extend((2..=max_rank).map(|n| RootSystem::a(n).unwrap()));
    out
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn weyl_group(rs: &RootSystem) -> Vec<WeylElement> {
    let n = rs.rank();
    let sign_patterns: Vec<Vec<i8>> = if rs.kind() == RootKind::BC {
        (0..1u32 << n)
            .map(|mask| {
                (0..n)
                    .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                    .collect()
            })
            .collect()
    } else {
        vec![vec![1; n]]
    };
    let mut out = Vec::new();
    for perm in all_permutations(n) {
        for signs in &sign_patterns {
            out.push(WeylElement {
                perm: perm.clone(),
                signs: signs.clone(),
            });
        }
    }
    out
}

fn random_weyl(rng: &mut impl Rng, rs: &RootSystem) -> WeylElement {
    let n = rs.rank();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let signs = (0..n)
        .map(|_| {
            if rs.kind() == RootKind::BC && rng.random_bool(0.5) {
                -1
            } else {
                1
            }
        })
        .collect();
    WeylElement { perm, signs }
}

/// Whether `d` is a nonnegative integer combination of positive roots, by
/// exhaustive subtraction. The height `sum (n - i) d_i` drops with every
/// subtraction, which bounds the search.
fn in_root_cone(d: &[i64], roots: &[Vec<i64>], memo: &mut HashMap<Vec<i64>, bool>) -> bool {
    if d.iter().all(|&x| x == 0) {
        return true;
    }
    let n = d.len() as i64;
    let height: i64 = d.iter().enumerate().map(|(i, &x)| (n - i as i64) * x).sum();
    if height <= 0 {
        return false;
    }
    if let Some(&known) = memo.get(d) {
        return known;
    }
    let found = roots.iter().any(|r| {
        let next: Vec<i64> = d.iter().zip(r).map(|(a, b)| a - b).collect();
        in_root_cone(&next, roots, memo)
    });
    memo.insert(d.to_vec(), found);
    found
}

fn dominant_weights_in_box(rs: &RootSystem, lo: i64, hi: i64) -> Vec<Weight> {
    let mut out = vec![vec![]];
    for _ in 0..rs.rank() {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                let top = v.last().copied().unwrap_or(hi);
                (lo..=top).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.into_iter()
        .map(Weight::new)
        .filter(|w| rs.is_dominant(w))
        .collect()
}

/// Dominant test weights with `|lambda| <= 4`; for type A also some with a
/// negative last entry.
fn test_weights(rs: &RootSystem) -> Vec<Weight> {
    let n = rs.rank();
    let mut out: Vec<Weight> = (0..=4).flat_map(|t| partitions(t, n)).collect();
    if rs.kind() == RootKind::A {
        out.push(Weight::new([vec![1], vec![0; n - 2], vec![-1]].concat()));
        out.push(Weight::new([vec![2], vec![0; n - 2], vec![-1]].concat()));
    }
    out
}

#[test]
fn dominant_rep_is_weyl_invariant() {
    let mut rng = rng(7);
    for rs in systems(3) {
        for _ in 0..200 {
            let nu: Vec<i64> = (0..rs.rank()).map(|_| rng.random_range(-6..=6)).collect();
            let w = random_weyl(&mut rng, &rs);
            let rep = dominant_rep(&nu, &rs);
            assert_eq!(
                dominant_rep(&w.apply_int(&nu), &rs),
                rep,
                "{rs} nu = {nu:?}"
            );
            assert_eq!(dominant_rep(rep.entries(), &rs), rep);
            assert!(rs.is_dominant(&rep));
        }
    }
}

#[test]
fn saturation_matches_brute_force_cone() {
    for rs in systems(3) {
        let roots: Vec<Vec<i64>> = positive_roots(&rs).into_iter().map(|r| r.vector).collect();
        for lambda in test_weights(&rs) {
            let lo = if rs.kind() == RootKind::BC {
                0
            } else {
                *lambda.entries().last().unwrap()
            };
            let mut memo = HashMap::new();
            let expected: BTreeSet<Weight> = dominant_weights_in_box(&rs, lo, lambda.entries()[0])
                .into_iter()
                .filter(|mu| {
                    let d: Vec<i64> = lambda
                        .entries()
                        .iter()
                        .zip(mu.entries())
                        .map(|(a, b)| a - b)
                        .collect();
                    in_root_cone(&d, &roots, &mut memo)
                })
                .collect();
            let got: BTreeSet<Weight> = saturation_set(&lambda, &rs).unwrap().into_iter().collect();
            assert_eq!(got, expected, "{rs} lambda = {lambda}");
        }
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for rs in systems(3) {
        for lambda in test_weights(&rs) {
            let set = saturation_set(&lambda, &rs).unwrap();
            let leq = |a: &Weight, b: &Weight| dominance_leq(a, b, &rs).unwrap();
            for a in &set {
                assert!(leq(a, a));
                assert!(leq(a, &lambda));
                for b in &set {
                    if leq(a, b) && leq(b, a) {
                        assert_eq!(a, b);
                    }
                    for c in &set {
                        if leq(a, b) && leq(b, c) {
                            assert!(leq(a, c), "{rs}: {a} <= {b} <= {c}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn saturation_order_extends_dominance() {
    for rs in systems(3) {
        for lambda in test_weights(&rs) {
            let set = saturation_set(&lambda, &rs).unwrap();
            assert_eq!(set[0], lambda);
            for (i, earlier) in set.iter().enumerate() {
                for later in &set[i + 1..] {
                    assert!(
                        !dominance_leq(earlier, later, &rs).unwrap(),
                        "{rs}: {earlier} listed before larger {later}"
                    );
                }
            }
        }
    }
}

#[test]
fn orbits_match_group_action() {
    for rs in systems(3) {
        let group = weyl_group(&rs);
        assert_eq!(group.len() as u64, rs.weyl_order());
        for lambda in test_weights(&rs) {
            let expected: BTreeSet<Vec<i64>> = group
                .iter()
                .map(|w| w.apply_int(lambda.entries()))
                .collect();
            let got = orbit(&lambda, &rs).unwrap();
            assert_eq!(got.len(), expected.len());
            assert_eq!(rs.weyl_order() % got.len() as u64, 0);
            let got: BTreeSet<Vec<i64>> = got.into_iter().map(|w| w.0).collect();
            assert_eq!(got, expected);
        }
    }
}

#[test]
fn rho_matches_half_sum() {
    let mut rng = rng(11);
    for n in 1..=4 {
        for _ in 0..5 {
            let ks: Vec<_> = (0..3).map(|_| random_rational(&mut rng)).collect();
            let bc = RootSystem::bc(n).unwrap();
            let kappa = Multiplicity::bc(ks[0].clone(), ks[1].clone(), ks[2].clone());
            assert_eq!(
                rho(&bc, &kappa).unwrap(),
                brute_force_rho(RootKind::BC, n, &ks)
            );
            if n >= 2 {
                let a = RootSystem::a(n).unwrap();
                let kappa = Multiplicity::a(ks[0].clone());
                assert_eq!(
                    rho(&a, &kappa).unwrap(),
                    brute_force_rho(RootKind::A, n, &ks[..1])
                );
            }
        }
    }
}

#[test]
fn weyl_order_formula() {
    assert_eq!(RootSystem::bc(3).unwrap().weyl_order(), 48);
    assert_eq!(RootSystem::a(4).unwrap().weyl_order(), 24);
    assert_eq!(RootSystem::bc(4).unwrap().weyl_order(), 384);
    assert_eq!(RootSystem::bc(1).unwrap().weyl_order(), 2);
}

fn weyl_pair() -> impl Strategy<Value = (usize, bool, Vec<i64>, Vec<usize>, Vec<bool>)> {
    (1usize..=3, any::<bool>()).prop_flat_map(|(n, bc)| {
        let n = if bc { n } else { n.max(2) };
        (
            Just(n),
            Just(bc),
            prop::collection::vec(-8i64..=8, n),
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            prop::collection::vec(any::<bool>(), n),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dominant_rep_invariance_prop((n, bc, nu, perm, flips) in weyl_pair()) {
        let rs = if bc { RootSystem::bc(n).unwrap() } else { RootSystem::a(n).unwrap() };
        let signs = flips.iter().map(|&f| if f && bc { -1 } else { 1 }).collect();
        let w = WeylElement { perm, signs };
        prop_assert_eq!(dominant_rep(&w.apply_int(&nu), &rs), dominant_rep(&nu, &rs));
    }
}

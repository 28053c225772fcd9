#![allow(dead_code)]

use liftcheck::classify::witness_representation;
use liftcheck::finite_rings::{MatFp, PrimeCtx};
use liftcheck::groups::{BadKind, Letter, Presentation, Word};
use liftcheck::replift::Representation;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_invertible(rng: &mut impl Rng, ctx: PrimeCtx, n: usize) -> MatFp {
    loop {
        let m = MatFp::from_fn(ctx, n, |_, _| rng.random_range(0..ctx.p()) as i64);
        if m.inverse().is_ok() {
            return m;
        }
    }
}

/// Unipotent upper triangular: the image of a `p`-group in a suitable basis.
pub fn random_unipotent(rng: &mut impl Rng, ctx: PrimeCtx, n: usize) -> MatFp {
    MatFp::from_fn(ctx, n, |r, c| match r.cmp(&c) {
        std::cmp::Ordering::Equal => 1,
        std::cmp::Ordering::Less => rng.random_range(0..ctx.p()) as i64,
        std::cmp::Ordering::Greater => 0,
    })
}

fn order(m: &MatFp) -> usize {
    let id = MatFp::identity(m.ctx(), m.n());
    let mut x = m.clone();
    let mut k = 1;
    while x != id {
        x = &x * m;
        k += 1;
    }
    k
}

fn eval(w: &Word, mats: &[MatFp], invs: &[MatFp]) -> MatFp {
    let mut acc = MatFp::identity(mats[0].ctx(), mats[0].n());
    for l in w.letters() {
        let g = if l.sign() > 0 {
            &mats[l.gen]
        } else {
            &invs[l.gen]
        };
        acc = &acc * g;
    }
    acc
}

/// Unknown digits `#gens·n²` allowed for `p` so that brute force stays
/// within about `2^19` assignments.
fn max_digits(p: u32) -> usize {
    match p {
        2 => 18,
        3 => 9,
        5 => 8,
        _ => 4,
    }
}

/// A random representation over `F_p`, `p` drawn from `primes`, with
/// relators of length at most 8 that hold by construction: generator
/// powers plus random words that happen to evaluate to the identity.
pub fn random_instance(rng: &mut impl Rng, primes: &[u32]) -> Representation {
    let p = *primes.choose(rng).unwrap();
    let ctx = PrimeCtx::new(p).unwrap();
    let max_digits = max_digits(p);
    let shapes: Vec<(usize, usize)> = [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3), (3, 1)]
        .into_iter()
        .filter(|&(k, n)| k * n * n <= max_digits)
        .collect();
    loop {
        let &(k, n) = shapes.choose(rng).unwrap();
        let mats: Vec<MatFp> = (0..k)
            .map(|_| {
                if rng.random_bool(0.6) {
                    random_unipotent(rng, ctx, n)
                } else {
                    random_invertible(rng, ctx, n)
                }
            })
            .collect();
        let orders: Vec<usize> = mats.iter().map(order).collect();
        if orders.iter().any(|&o| o > 8) {
            continue;
        }
        let invs: Vec<MatFp> = mats.iter().map(|m| m.inverse().unwrap()).collect();
        let id = MatFp::identity(ctx, n);
        let mut relators: Vec<Word> = orders
            .iter()
            .enumerate()
            .map(|(i, &o)| {
                // Sometimes a multiple of the order, which still holds.
                let e = if 2 * o <= 8 && rng.random_bool(0.3) {
                    2 * o
                } else {
                    o
                };
                Word::power(i, e as i64)
            })
            .collect();
        for _ in 0..200 {
            if relators.len() >= k + 2 {
                break;
            }
            let len = rng.random_range(2..=8);
            let w = Word(
                (0..len)
                    .map(|_| {
                        let g = rng.random_range(0..k);
                        if rng.random_bool(0.5) {
                            Letter::pos(g)
                        } else {
                            Letter::neg(g)
                        }
                    })
                    .collect(),
            )
            .free_reduce();
            if !w.is_empty() && eval(&w, &mats, &invs) == id && !relators.contains(&w) {
                relators.push(w);
            }
        }
        let names: Vec<String> = ["s", "t", "u"][..k].iter().map(|s| s.to_string()).collect();
        let pres = Presentation::new(names, relators).unwrap();
        return Representation::checked(ctx, n, pres, mats).unwrap();
    }
}

/// Witness suite: the obstruction representations that the checker refutes.
pub fn refuted_witnesses() -> Vec<Representation> {
    [
        BadKind::C2xC2,
        BadKind::C3xC3,
        BadKind::C9,
        BadKind::Cp(5),
        BadKind::Cp(7),
    ]
    .into_iter()
    .map(|k| witness_representation(k).unwrap())
    .collect()
}

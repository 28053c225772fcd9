//! One line per acceptance criterion, with timings.
//!
//! Criteria 2 and 7 depend on the 6-dimensional quaternion witness being
//! non-liftable. It is not: the checker finds a lift and the lift verifies
//! exactly over Z/4. Those two lines print FAIL with the reason, and the test
//! asserts that the failure is exactly that one.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use liftcheck::classify::{
    catalog, classify, witness_representation, ClassificationVerdict, Expected,
};
use liftcheck::cyclic_lift::{
    companion_lift, cyclotomic_factors, find_divisor_lift, jordan_companion_rep,
    liftable_jordan_sizes,
};
use liftcheck::finite_rings::{binom_div_p, MatFp, MatZp2, PrimeCtx};
use liftcheck::groups::{is_listed_family, BadKind};
use liftcheck::obstruction::{
    cyclic_witness, module_of_quotient, q_polynomial, theta, theta_with_lifts, AlgZp2,
};
use liftcheck::replift::{
    brute_force_lift, check_lift, check_lift_with_lifts, direct_sum, verify_certificate,
    LiftVerdict, Representation,
};
use rand::Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn ok(detail: impl Into<String>) -> Outcome {
    Outcome {
        pass: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        pass: false,
        detail: detail.into(),
    }
}

fn ctx(p: u32) -> PrimeCtx {
    PrimeCtx::new(p).unwrap()
}

fn lifts(rep: &Representation) -> bool {
    check_lift(rep).unwrap().is_liftable()
}

fn refuted(rep: &Representation) -> bool {
    matches!(check_lift(rep).unwrap(), LiftVerdict::NotLiftable(r) if r.is_valid())
}

fn c1_klein() -> Outcome {
    let rep = witness_representation(BadKind::C2xC2).unwrap();
    match check_lift(&rep).unwrap() {
        LiftVerdict::NotLiftable(r) if r.is_valid() => {
            ok(format!("refuted with {} equations", r.support().len()))
        }
        _ => fail("not refuted"),
    }
}

fn c2_quaternion() -> Outcome {
    let rep = witness_representation(BadKind::Q8).unwrap();
    match check_lift(&rep).unwrap() {
        LiftVerdict::NotLiftable(r) if r.is_valid() => ok("refuted"),
        LiftVerdict::NotLiftable(_) => fail("refutation does not check"),
        LiftVerdict::Liftable(cert) => {
            assert!(verify_certificate(&rep, &cert), "certificate must verify");
            fail(format!(
                "the printed representation lifts mod 4; verified lift s = {:?}",
                cert.mats[0].rows()
            ))
        }
    }
}

fn c3_c3xc3() -> Outcome {
    let rep = witness_representation(BadKind::C3xC3).unwrap();
    if refuted(&rep) {
        ok("refuted")
    } else {
        fail("not refuted")
    }
}

fn c4_theta() -> Outcome {
    let mut parts = Vec::new();
    for (p, n) in [(3u32, 2u32), (5, 1), (7, 1)] {
        let c = ctx(p);
        let w = cyclic_witness(c, n).unwrap();
        let order = p.pow(n);
        if w.m != order / p + 1 {
            return fail(format!("m = {} at p={p}", w.m));
        }
        if theta(&w.group, &w.f, &w.h).unwrap().is_zero {
            return fail(format!("theta vanishes at p={p}, n={n}"));
        }
        let k = p.pow(n - 1) as u64;
        let coeff = q_polynomial(c, n).coeff(k as usize);
        let b = binom_div_p(order as u64, k, c).unwrap();
        if coeff == 0 || (coeff != b && coeff != (p - b) % p) {
            return fail(format!("s^{k} coefficient {coeff} vs ±{b} at p={p}"));
        }
        let module = module_of_quotient(&w.group, &w.h).unwrap();
        let want = if n == 1 { (p - 2) as usize } else { 5 };
        if module.dim() != want || !refuted(&module) {
            return fail(format!(
                "quotient module at p={p}: dimension {}, refuted {}",
                module.dim(),
                refuted(&module)
            ));
        }
        parts.push(format!(
            "p={p} n={n}: s^{k} coeff {coeff}, dim {}",
            module.dim()
        ));
    }
    ok(parts.join("; "))
}

fn c5_companions() -> Outcome {
    let mut count = 0;
    let mut run = |p: u32, n: u32| -> Result<(), String> {
        let c = ctx(p);
        for i in 1..=p.pow(n) {
            let d = find_divisor_lift(c, n, i)
                .unwrap()
                .ok_or(format!("no divisor p={p} n={n} i={i}"))?;
            let (rep, cert) = companion_lift(c, n, i, &d).unwrap();
            if !verify_certificate(&rep, &cert) || !lifts(&rep) {
                return Err(format!("p={p} n={n} i={i}"));
            }
            count += 1;
        }
        Ok(())
    };
    for n in 1..=4 {
        if let Err(e) = run(2, n) {
            return fail(e);
        }
    }
    if let Err(e) = run(3, 1) {
        return fail(e);
    }
    let p2 = find_divisor_lift(ctx(3), 1, 2)
        .unwrap()
        .unwrap()
        .to_string();
    if p2 != "t^2 + t + 1" {
        return fail(format!("P_2 = {p2}"));
    }
    ok(format!("{count} companion lifts verified, P_2 = {p2}"))
}

fn c6_gaps() -> Outcome {
    let mut parts = Vec::new();
    for (p, n, m, expected) in [
        (3u32, 2u32, 4u32, vec![1u32, 2, 3, 6, 7, 8, 9]),
        (5, 1, 2, vec![1, 4, 5]),
    ] {
        let degs = cyclotomic_factors(ctx(p), n).unwrap().degrees();
        let enumerated: BTreeSet<u32> = (1u32..1 << degs.len())
            .map(|mask| {
                (0..degs.len())
                    .filter(|&j| mask >> j & 1 == 1)
                    .map(|j| degs[j])
                    .sum()
            })
            .collect();
        let sizes = liftable_jordan_sizes(ctx(p), n).unwrap();
        let expected: BTreeSet<u32> = expected.into_iter().collect();
        if sizes != expected || enumerated != expected || sizes.contains(&m) {
            return fail(format!(
                "p={p} n={n}: {sizes:?} vs enumeration {enumerated:?}"
            ));
        }
        parts.push(format!("{:?} without {m}", sizes));
    }
    ok(parts.join("; "))
}

fn c7_catalog() -> Outcome {
    let entries = catalog().unwrap();
    let mut uncertified = Vec::new();
    for e in &entries {
        assert!(e.group.order() <= 32, "{}", e.name);
        let verdict = classify(&e.group).unwrap();
        let listed = is_listed_family(&e.group).is_some() || e.group.order() == 1;
        if verdict.is_liftable() != listed {
            return fail(format!(
                "{}: verdict disagrees with family recognition",
                e.name
            ));
        }
        match (&verdict, e.expected) {
            (ClassificationVerdict::Liftable(t), Expected::Liftable(want)) if *t == want => {}
            (ClassificationVerdict::NotLiftable(w), Expected::NotLiftable(kind))
                if w.bad.kind == kind =>
            {
                if !w.is_certified() {
                    uncertified.push(e.name.clone());
                } else if !refuted(&w.rep) {
                    return fail(format!("{}: witness does not re-check", e.name));
                }
            }
            _ => return fail(format!("{}: unexpected verdict", e.name)),
        }
    }
    if entries.len() < 25 {
        return fail(format!("only {} entries", entries.len()));
    }
    if uncertified.is_empty() {
        ok(format!(
            "{} groups agree, every negative verdict certified",
            entries.len()
        ))
    } else {
        assert_eq!(
            uncertified,
            ["Q8", "Q16", "Q32"],
            "only the quaternion witness may lift"
        );
        fail(format!(
            "{} groups agree with the expected verdicts, but the witness for {} lifts",
            entries.len(),
            uncertified.join(", ")
        ))
    }
}

fn c8_oracle() -> Outcome {
    let mut rng = common::rng(8);
    let mut counts = [[0usize; 2]; 2];
    for (slot, primes, total) in [(0, &[2u32, 3][..], 1000), (1, &[5, 7][..], 200)] {
        for _ in 0..total {
            let rep = common::random_instance(&mut rng, primes);
            let a = lifts(&rep);
            let b = brute_force_lift(&rep, 1 << 20).unwrap().is_some();
            if a != b {
                return fail(format!(
                    "disagreement on\n{}",
                    liftcheck::replift::write_rep(&rep)
                ));
            }
            counts[slot][usize::from(a)] += 1;
        }
    }
    ok(format!(
        "p in {{2,3}}: {} agree ({} liftable); p in {{5,7}}: {} agree ({} not liftable)",
        counts[0][0] + counts[0][1],
        counts[0][1],
        counts[1][0] + counts[1][1],
        counts[1][0]
    ))
}

/// Representations sharing one presentation: all Jordan blocks of `C_{p^n}`
/// and random conjugates of them.
fn cyclic_pool(rng: &mut impl Rng, p: u32, n: u32) -> Vec<Representation> {
    let c = ctx(p);
    let mut pool: Vec<Representation> = (1..=p.pow(n))
        .map(|i| jordan_companion_rep(c, n, i).unwrap())
        .collect();
    let conj: Vec<Representation> = pool
        .iter()
        .take(3)
        .map(|r| {
            r.conjugate(&common::random_invertible(rng, c, r.dim()))
                .unwrap()
        })
        .collect();
    pool.extend(conj);
    pool
}

fn c9_direct_sums() -> Outcome {
    let mut rng = common::rng(9);
    let mut pairs = 0;
    let mut negative = 0;
    for (p, n) in [(5u32, 1u32), (3, 2)] {
        let pool = cyclic_pool(&mut rng, p, n);
        let verdicts: Vec<bool> = pool.iter().map(lifts).collect();
        for (i, x) in pool.iter().enumerate() {
            for (j, y) in pool.iter().enumerate().step_by(2) {
                let sum = direct_sum(x, y).unwrap();
                let l = lifts(&sum);
                if l != (verdicts[i] && verdicts[j]) {
                    return fail(format!(
                        "sum of dims {} and {} over F_{p}",
                        x.dim(),
                        y.dim()
                    ));
                }
                pairs += 1;
                negative += usize::from(!l);
            }
        }
    }
    ok(format!("{pairs} pairs, {negative} sums not liftable"))
}

fn c10_theta_relifts() -> Outcome {
    let mut rng = common::rng(10);
    let c = ctx(3);
    let w = cyclic_witness(c, 2).unwrap();
    let base = theta(&w.group, &w.f, &w.h).unwrap();
    let relift = |rng: &mut rand_chacha::ChaCha8Rng, a: &liftcheck::obstruction::AlgFp| {
        let coeffs: Vec<i64> = a
            .coeffs()
            .iter()
            .map(|&v| v as i64 + 3 * rng.random_range(0..3) as i64)
            .collect();
        AlgZp2::from_i64(c, &coeffs)
    };
    for _ in 0..100 {
        let (fh, hh) = (relift(&mut rng, &w.f), relift(&mut rng, &w.h));
        if theta_with_lifts(&w.group, &w.f, &w.h, &fh, &hh).unwrap() != base {
            return fail("class changed under a re-lift");
        }
    }
    ok(format!(
        "100 re-lifts give representative {:?}",
        base.representative.coeffs()
    ))
}

fn c11_invariance() -> Outcome {
    let mut rng = common::rng(11);
    let mut suite = common::refuted_witnesses();
    suite.push(witness_representation(BadKind::Q8).unwrap());
    suite.extend([2u32, 3].map(|i| jordan_companion_rep(ctx(2), 2, i).unwrap()));
    let verdicts: Vec<bool> = suite.iter().map(lifts).collect();
    for k in 0..100 {
        let (rep, want) = (&suite[k % suite.len()], verdicts[k % suite.len()]);
        let p = rep.ctx().p();
        let section: Vec<MatZp2> = rep
            .gen_mats()
            .iter()
            .map(|g| {
                MatZp2::from_fn(rep.ctx(), rep.dim(), |r, c| {
                    (g.get(r, c) + p * rng.random_range(0..p)) as i64
                })
            })
            .collect();
        if check_lift_with_lifts(rep, &section).unwrap().is_liftable() != want {
            return fail(format!(
                "section changed the verdict on a {}-dimensional rep",
                rep.dim()
            ));
        }
        let c: MatFp = common::random_invertible(&mut rng, rep.ctx(), rep.dim());
        if lifts(&rep.conjugate(&c).unwrap()) != want {
            return fail(format!(
                "conjugation changed the verdict on a {}-dimensional rep",
                rep.dim()
            ));
        }
    }
    ok(format!(
        "100 sections and 100 conjugations over {} representations",
        suite.len()
    ))
}

#[test]
fn acceptance() {
    type Check = fn() -> Outcome;
    let criteria: [(u32, &str, u64, Check); 11] = [
        (1, "Klein 4-dim witness not liftable", 1, c1_klein),
        (2, "quaternion 6-dim witness not liftable", 1, c2_quaternion),
        (3, "C3xC3 witness not liftable", 1, c3_c3xc3),
        (4, "theta obstruction and quotient modules", 10, c4_theta),
        (5, "divisor lifts p=2 n<=4, p=3 n=1", 10, c5_companions),
        (6, "Jordan size gap sets", 10, c6_gaps),
        (7, "catalog classification", 30, c7_catalog),
        (8, "oracle equivalence", 60, c8_oracle),
        (9, "direct sums", 60, c9_direct_sums),
        (10, "theta re-lifts", 60, c10_theta_relifts),
        (11, "section and basis invariance", 60, c11_invariance),
    ];
    let mut unexpected = Vec::new();
    for (id, name, limit, check) in criteria {
        let start = Instant::now();
        let out = check();
        let elapsed = start.elapsed();
        let in_time = elapsed < Duration::from_secs(limit);
        let pass = out.pass && in_time;
        let timing = format!("{} ms, limit {limit} s", elapsed.as_millis());
        println!(
            "criterion {id:>2} {}: {name}: {} ({timing})",
            if pass { "PASS" } else { "FAIL" },
            out.detail
        );
        let known = matches!(id, 2 | 7) && in_time;
        if !pass && !known {
            unexpected.push(id);
        }
    }
    assert!(unexpected.is_empty(), "criteria failed: {unexpected:?}");
}

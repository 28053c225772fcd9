use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::classify::{catalog, classify, witness_representation, ClassificationVerdict, Expected};
use crate::cyclic_lift::{
    companion_lift, find_divisor_lift, jordan_companion_rep, liftable_jordan_sizes,
};
use crate::finite_rings::{binom_div_p, PrimeCtx};
use crate::groups::{is_listed_family, BadKind};
use crate::obstruction::{cyclic_witness, module_of_quotient, q_polynomial, theta};
use crate::replift::{check_lift, direct_sum, verify_certificate, LiftVerdict, Representation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Item {
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub millis: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReproduceReport {
    pub items: Vec<Item>,
    pub millis: u128,
}

impl ReproduceReport {
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.status == Status::Pass)
    }

    pub fn item(&self, name: &str) -> Option<&Item> {
        self.items.iter().find(|i| i.name == name)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let width = self.items.iter().map(|i| i.name.len()).max().unwrap_or(0);
        for i in &self.items {
            let status = match i.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            let _ = writeln!(
                out,
                "ITEM: {status} {:width$}  {} ({} ms)",
                i.name, i.detail, i.millis
            );
        }
        let failed = self
            .items
            .iter()
            .filter(|i| i.status == Status::Fail)
            .count();
        let _ = writeln!(
            out,
            "{} items, {failed} failed, {} ms",
            self.items.len(),
            self.millis
        );
        out
    }
}

struct Runner {
    items: Vec<Item>,
}

impl Runner {
    fn run(&mut self, name: impl Into<String>, f: impl FnOnce() -> Result<String, String>) {
        let start = Instant::now();
        let (status, detail) = match f() {
            Ok(d) => (Status::Pass, d),
            Err(d) => (Status::Fail, d),
        };
        self.items.push(Item {
            name: name.into(),
            status,
            detail,
            millis: start.elapsed().as_millis(),
        });
    }
}

fn expect_not_liftable(rep: &Representation) -> Result<String, String> {
    match check_lift(rep).map_err(|e| e.to_string())? {
        LiftVerdict::NotLiftable(r) if r.is_valid() => Ok(format!(
            "dimension {}: not liftable, refutation uses {} equations",
            rep.dim(),
            r.support().len()
        )),
        LiftVerdict::NotLiftable(_) => Err("refutation does not check".into()),
        LiftVerdict::Liftable(c) => Err(format!(
            "dimension {}: lifts mod {} (certificate {})",
            rep.dim(),
            rep.ctx().p().pow(2),
            if verify_certificate(rep, &c) {
                "verified"
            } else {
                "does not verify"
            }
        )),
    }
}

fn witness(kind: BadKind) -> Result<Representation, String> {
    witness_representation(kind).map_err(|e| e.to_string())
}

/// Runs every built-in check. With `corrupt`, the Klein witness is replaced
/// by its trivialization, which lifts.
pub fn reproduce(corrupt: bool) -> ReproduceReport {
    let start = Instant::now();
    let mut r = Runner { items: Vec::new() };

    r.run("klein witness is not liftable", || {
        let rep = witness(BadKind::C2xC2)?;
        expect_not_liftable(&if corrupt { rep.trivialized() } else { rep })
    });
    r.run("quaternion witness is not liftable", || {
        expect_not_liftable(&witness(BadKind::Q8)?)
    });
    r.run("quaternion witness lift verifies over Z/4", || {
        let rep = witness(BadKind::Q8)?;
        match check_lift(&rep).map_err(|e| e.to_string())? {
            LiftVerdict::Liftable(c) if verify_certificate(&rep, &c) => {
                Ok("exact check of all relators".into())
            }
            _ => Err("no verified lift".into()),
        }
    });
    r.run("C3xC3 witness is not liftable", || {
        expect_not_liftable(&witness(BadKind::C3xC3)?)
    });

    for (p, n) in [(3u32, 2u32), (5, 1), (7, 1)] {
        r.run(format!("theta obstruction p={p} n={n}"), || {
            let ctx = PrimeCtx::new(p).map_err(|e| e.to_string())?;
            let w = cyclic_witness(ctx, n).map_err(|e| e.to_string())?;
            let class = theta(&w.group, &w.f, &w.h).map_err(|e| e.to_string())?;
            if class.is_zero {
                return Err("theta vanishes".into());
            }
            let k = p.pow(n - 1) as usize;
            let coeff = q_polynomial(ctx, n).coeff(k);
            let binom = binom_div_p(p.pow(n) as u64, k as u64, ctx).map_err(|e| e.to_string())?;
            if coeff == 0 || (coeff != binom && coeff != (p - binom) % p) {
                return Err(format!(
                    "coefficient of s^{k} is {coeff}, expected ±{binom}"
                ));
            }
            let module = module_of_quotient(&w.group, &w.h).map_err(|e| e.to_string())?;
            let expected_dim = (p.pow(n) - w.m) as usize;
            if module.dim() != expected_dim {
                return Err(format!(
                    "quotient module has dimension {}, expected {expected_dim}",
                    module.dim()
                ));
            }
            expect_not_liftable(&module)
                .map(|d| format!("theta nonzero, s^{k} coefficient {coeff}; {d}"))
        });
    }

    let divisor_lifts = |p: u32, n: u32| -> Result<String, String> {
        let ctx = PrimeCtx::new(p).map_err(|e| e.to_string())?;
        let order = p.pow(n);
        for i in 1..=order {
            let divisor = find_divisor_lift(ctx, n, i)
                .map_err(|e| e.to_string())?
                .ok_or_else(|| format!("no divisor for i={i}"))?;
            let (rep, cert) = companion_lift(ctx, n, i, &divisor).map_err(|e| e.to_string())?;
            if !verify_certificate(&rep, &cert) {
                return Err(format!("certificate for i={i} does not verify"));
            }
            if !check_lift(&rep).map_err(|e| e.to_string())?.is_liftable() {
                return Err(format!("checker refutes the companion rep for i={i}"));
            }
        }
        Ok(format!("all {order} Jordan sizes lift"))
    };
    for n in 1..=4 {
        r.run(format!("companion lifts p=2 n={n}"), || divisor_lifts(2, n));
    }
    r.run("companion lifts p=3 n=1", || {
        let ctx = PrimeCtx::new(3).map_err(|e| e.to_string())?;
        let p2 = find_divisor_lift(ctx, 1, 2)
            .map_err(|e| e.to_string())?
            .map(|f| f.to_string());
        if p2.as_deref() != Some("t^2 + t + 1") {
            return Err(format!("P_2 = {p2:?}"));
        }
        divisor_lifts(3, 1)
    });

    for (p, n, m, expected) in [
        (3u32, 2u32, 4u32, vec![1u32, 2, 3, 6, 7, 8, 9]),
        (5, 1, 2, vec![1, 4, 5]),
    ] {
        r.run(format!("Jordan sizes C{}", p.pow(n)), || {
            let ctx = PrimeCtx::new(p).map_err(|e| e.to_string())?;
            let sizes: Vec<u32> = liftable_jordan_sizes(ctx, n)
                .map_err(|e| e.to_string())?
                .into_iter()
                .collect();
            if sizes != expected || sizes.contains(&m) {
                return Err(format!("subset sums {sizes:?}"));
            }
            let mut checked = Vec::new();
            for i in 1..=p.pow(n) {
                let rep = jordan_companion_rep(ctx, n, i).map_err(|e| e.to_string())?;
                if check_lift(&rep).map_err(|e| e.to_string())?.is_liftable() {
                    checked.push(i);
                }
            }
            if checked != sizes {
                return Err(format!(
                    "subset sums {sizes:?} but checker lifts {checked:?}"
                ));
            }
            Ok(format!("subset sums and checker agree on {sizes:?}"))
        });
    }

    r.run("direct sums", || {
        let mut count = 0;
        for kind in [BadKind::C2xC2, BadKind::C3xC3, BadKind::C9] {
            let bad = witness(kind)?;
            let good = bad.trivialized();
            for (x, y) in [(&bad, &good), (&good, &bad), (&good, &good), (&bad, &bad)] {
                let lifts = |rep: &Representation| {
                    check_lift(rep)
                        .map(|v| v.is_liftable())
                        .map_err(|e| e.to_string())
                };
                let sum = direct_sum(x, y).map_err(|e| e.to_string())?;
                if lifts(&sum)? != (lifts(x)? && lifts(y)?) {
                    return Err(format!("{kind}: sum verdict disagrees with summands"));
                }
                count += 1;
            }
        }
        Ok(format!("{count} sums agree with their summands"))
    });

    match catalog() {
        Err(e) => r.run("catalog", || Err(e.to_string())),
        Ok(entries) => {
            for entry in entries {
                r.run(format!("classify {}", entry.name), || {
                    let verdict = classify(&entry.group).map_err(|e| e.to_string())?;
                    let listed =
                        is_listed_family(&entry.group).is_some() || entry.group.order() == 1;
                    if verdict.is_liftable() != listed {
                        return Err("verdict disagrees with family recognition".into());
                    }
                    match (&verdict, entry.expected) {
                        (ClassificationVerdict::Liftable(tag), Expected::Liftable(want))
                            if *tag == want =>
                        {
                            Ok(format!("liftable ({tag})"))
                        }
                        (ClassificationVerdict::NotLiftable(w), Expected::NotLiftable(kind))
                            if w.bad.kind == kind =>
                        {
                            if w.is_certified() {
                                Ok(format!(
                                    "not liftable via {kind}, witness of dimension {} refuted",
                                    w.rep.dim()
                                ))
                            } else {
                                Err(format!("not liftable via {kind}, but the witness lifts"))
                            }
                        }
                        _ => Err("unexpected verdict".into()),
                    }
                });
            }
        }
    }

    ReproduceReport {
        items: r.items,
        millis: start.elapsed().as_millis(),
    }
}

//! Obstruction subgroups and recognition of the liftable families.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::subgroup::{sylow, Subgroup};
use super::table::FiniteGroup;
use crate::finite_rings::{prime_factors, valuation};

/// The five subgroup shapes that rule out liftability.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BadKind {
    /// Cyclic of prime order `p >= 5`.
    Cp(u32),
    C9,
    C3xC3,
    C2xC2,
    Q8,
}

impl BadKind {
    pub fn prime(&self) -> u32 {
        match self {
            BadKind::Cp(p) => *p,
            BadKind::C9 | BadKind::C3xC3 => 3,
            BadKind::C2xC2 | BadKind::Q8 => 2,
        }
    }

    pub fn order(&self) -> usize {
        match self {
            BadKind::Cp(p) => *p as usize,
            BadKind::C9 | BadKind::C3xC3 => 9,
            BadKind::C2xC2 => 4,
            BadKind::Q8 => 8,
        }
    }
}

impl fmt::Display for BadKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BadKind::Cp(p) => write!(f, "C{p}"),
            BadKind::C9 => write!(f, "C9"),
            BadKind::C3xC3 => write!(f, "C3xC3"),
            BadKind::C2xC2 => write!(f, "C2xC2"),
            BadKind::Q8 => write!(f, "Q8"),
        }
    }
}

/// An embedded obstruction subgroup. `generators` realize the generators of
/// the kind's canonical presentation, in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BadSubgroup {
    pub kind: BadKind,
    pub generators: Vec<usize>,
    pub subgroup: Subgroup,
}

/// Searches, in a fixed order, for a subgroup isomorphic to `C_p` (`p >= 5`),
/// `C_9`, `C_3 × C_3`, `C_2 × C_2`, or `Q_8`. Elements are scanned in
/// ascending index order, so the result is deterministic.
pub fn find_subgroup_witness(g: &FiniteGroup) -> Option<BadSubgroup> {
    let n = g.order();
    let found = |kind: BadKind, generators: Vec<usize>| {
        let subgroup = Subgroup::generated(g, &generators);
        debug_assert_eq!(subgroup.order(), kind.order());
        Some(BadSubgroup {
            kind,
            generators,
            subgroup,
        })
    };

    for x in 1..n {
        let ord = g.element_order(x) as u64;
        if let Some(&q) = prime_factors(ord).iter().find(|&&q| q >= 5) {
            return found(BadKind::Cp(q as u32), vec![g.pow(x, ord / q)]);
        }
    }
    for x in 1..n {
        let ord = g.element_order(x) as u64;
        if ord % 9 == 0 {
            return found(BadKind::C9, vec![g.pow(x, ord / 9)]);
        }
    }
    let of_order = |k: u32| (1..n).filter(move |&x| g.element_order(x) == k);
    for x in of_order(3) {
        let x2 = g.mul(x, x);
        for y in of_order(3).filter(|&y| y > x) {
            if y != x2 && g.commute(x, y) {
                return found(BadKind::C3xC3, vec![x, y]);
            }
        }
    }
    for x in of_order(2) {
        for y in of_order(2).filter(|&y| y > x) {
            if g.commute(x, y) {
                return found(BadKind::C2xC2, vec![x, y]);
            }
        }
    }
    for x in of_order(4) {
        let x2 = g.mul(x, x);
        let xinv = g.inv(x);
        for y in 1..n {
            if g.mul(y, y) == x2 && g.mul(g.mul(y, x), g.inv(y)) == xinv {
                return found(BadKind::Q8, vec![x, y]);
            }
        }
    }
    None
}

/// Membership in `C_{2^a}`, `C_3 × C_{2^a}`, or `C_3 ⋊ C_{2^a}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyTag {
    C2n { a: u32 },
    C3xC2n { a: u32 },
    C3semiC2n { a: u32 },
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::C2n { .. } => write!(f, "C2n"),
            FamilyTag::C3xC2n { .. } => write!(f, "C3xC2n"),
            FamilyTag::C3semiC2n { .. } => write!(f, "C3semiC2n"),
        }
    }
}

pub fn is_listed_family(g: &FiniteGroup) -> Option<FamilyTag> {
    let n = g.order() as u64;
    let a = valuation(n, 2);
    let odd = n >> a;
    match odd {
        1 if g.is_cyclic() => Some(FamilyTag::C2n { a }),
        3 if g.is_cyclic() => Some(FamilyTag::C3xC2n { a }),
        3 if !g.is_abelian() => {
            let s2 = sylow(g, 2);
            let (s2g, _) = s2.as_group(g).ok()?;
            if !s2g.is_cyclic() {
                return None;
            }
            let two_part = 1u32 << a;
            for x in (1..g.order()).filter(|&x| g.element_order(x) == 3) {
                let xinv = g.inv(x);
                for y in (1..g.order()).filter(|&y| g.element_order(y) == two_part) {
                    if g.mul(g.mul(y, x), g.inv(y)) == xinv && g.closure(&[x, y]).len() == g.order()
                    {
                        return Some(FamilyTag::C3semiC2n { a });
                    }
                }
            }
            None
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{make_family, Family};

    fn witness(f: Family) -> Option<BadSubgroup> {
        find_subgroup_witness(&make_family(&f).unwrap())
    }

    #[test]
    fn q16_contains_q8_on_s_squared_and_t() {
        let w = witness(Family::GeneralizedQuaternion(16)).unwrap();
        assert_eq!(w.kind, BadKind::Q8);
        // s^i t^j is stored at i + 8j: s^2 = 2, t = 8.
        assert_eq!(w.generators, vec![2, 8]);
        assert_eq!(w.subgroup.order(), 8);
    }

    #[test]
    fn c10_has_an_element_of_order_five() {
        let g = make_family(&Family::Cyclic(10)).unwrap();
        let w = find_subgroup_witness(&g).unwrap();
        assert_eq!(w.kind, BadKind::Cp(5));
        assert_eq!(g.element_order(w.generators[0]), 5);
    }

    #[test]
    fn c2_times_c4_klein_subgroup() {
        // (i, j) stored at 4i + j: s = 4, t^2 = 2, s t^2 = 6.
        let w = witness(Family::DirectProduct(2, 4)).unwrap();
        assert_eq!(w.kind, BadKind::C2xC2);
        assert_eq!(w.subgroup.elements(), &[0, 2, 4, 6]);
    }

    #[test]
    fn three_groups() {
        assert_eq!(witness(Family::Cyclic(27)).unwrap().kind, BadKind::C9);
        assert_eq!(
            witness(Family::ElementaryAbelian(3, 2)).unwrap().kind,
            BadKind::C3xC3
        );
        assert_eq!(witness(Family::Cyclic(3)), None);
    }

    #[test]
    fn listed_families() {
        let tag = |f: Family| is_listed_family(&make_family(&f).unwrap());
        assert_eq!(tag(Family::Cyclic(12)), Some(FamilyTag::C3xC2n { a: 2 }));
        assert_eq!(
            tag(Family::SemidirectC3C2n(2)),
            Some(FamilyTag::C3semiC2n { a: 2 })
        );
        assert_eq!(
            tag(Family::SemidirectC3C2n(1)),
            Some(FamilyTag::C3semiC2n { a: 1 })
        );
        assert_eq!(tag(Family::GeneralizedQuaternion(8)), None);
        assert_eq!(tag(Family::Cyclic(1)), Some(FamilyTag::C2n { a: 0 }));
        assert_eq!(tag(Family::Cyclic(3)), Some(FamilyTag::C3xC2n { a: 0 }));
        assert_eq!(tag(Family::Alternating4), None);
        assert_eq!(tag(Family::DirectProduct(6, 2)), None);
    }
}

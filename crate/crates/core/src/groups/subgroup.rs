use serde::{Deserialize, Serialize};

use super::table::FiniteGroup;
use super::word::Presentation;
use super::GroupError;
use crate::finite_rings::valuation;

/// A subgroup of a parent table, stored as its sorted element indices
/// together with the generators whose closure produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subgroup {
    parent_order: usize,
    elements: Vec<usize>,
    generators: Vec<usize>,
}

impl Subgroup {
    pub fn generated(g: &FiniteGroup, gens: &[usize]) -> Self {
        Self {
            parent_order: g.order(),
            elements: g.closure(gens),
            generators: gens.to_vec(),
        }
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Self::generated(g, &[])
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Self::generated(g, g.generators())
    }

    /// Accepts an explicit element set after checking closure.
    pub fn from_elements(g: &FiniteGroup, mut elements: Vec<usize>) -> Result<Self, GroupError> {
        elements.sort_unstable();
        elements.dedup();
        if elements.first() != Some(&0) || elements.iter().any(|&x| x >= g.order()) {
            return Err(GroupError::NotASubgroup);
        }
        for &a in &elements {
            if elements.binary_search(&g.inv(a)).is_err() {
                return Err(GroupError::NotASubgroup);
            }
            for &b in &elements {
                if elements.binary_search(&g.mul(a, b)).is_err() {
                    return Err(GroupError::NotASubgroup);
                }
            }
        }
        let generators = greedy(g, &elements);
        Ok(Self {
            parent_order: g.order(),
            elements,
            generators,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn belongs_to(&self, g: &FiniteGroup) -> bool {
        self.parent_order == g.order()
    }

    /// The subgroup as a standalone table, relabelled in ascending element
    /// order, plus the map from new labels to parent elements. Its
    /// presentation is derived from the table.
    pub fn as_group(&self, g: &FiniteGroup) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
        let idx = |x: usize| self.elements.binary_search(&x).unwrap();
        let rows: Vec<Vec<usize>> = self
            .elements
            .iter()
            .map(|&a| self.elements.iter().map(|&b| idx(g.mul(a, b))).collect())
            .collect();
        Ok((FiniteGroup::from_table(&rows)?, self.elements.clone()))
    }

    /// Standalone table with a given presentation realized by `gen_images`
    /// (elements of the parent).
    pub fn as_presented_group(
        &self,
        g: &FiniteGroup,
        presentation: Presentation,
        gen_images: &[usize],
    ) -> Result<FiniteGroup, GroupError> {
        let idx = |x: usize| {
            self.elements
                .binary_search(&x)
                .map_err(|_| GroupError::NotASubgroup)
        };
        let rows: Vec<Vec<usize>> = self
            .elements
            .iter()
            .map(|&a| self.elements.iter().map(|&b| idx(g.mul(a, b))).collect())
            .collect::<Result<_, _>>()?;
        let gens = gen_images
            .iter()
            .map(|&x| idx(x))
            .collect::<Result<Vec<_>, _>>()?;
        FiniteGroup::from_table_with_presentation(&rows, presentation, gens)
    }
}

fn greedy(g: &FiniteGroup, elements: &[usize]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = vec![0usize];
    for &x in elements {
        if span.binary_search(&x).is_err() {
            gens.push(x);
            span = g.closure(&gens);
        }
    }
    gens
}

/// A Sylow `p`-subgroup, grown one `p`-element at a time: at each step the
/// first element (ascending) whose adjunction keeps a `p`-group of larger
/// order is added. Inside a `p`-group normalizers grow, so the search only
/// stops at full Sylow order.
pub fn sylow(g: &FiniteGroup, p: u64) -> Subgroup {
    let target = p.pow(valuation(g.order() as u64, p)) as usize;
    let mut gens: Vec<usize> = Vec::new();
    let mut current = vec![0usize];
    while current.len() < target {
        let mut grew = false;
        for x in 1..g.order() {
            if current.binary_search(&x).is_ok() || !is_power_of(g.element_order(x) as u64, p) {
                continue;
            }
            gens.push(x);
            match g.closure_bounded(&gens, target) {
                Some(span) if is_power_of(span.len() as u64, p) => {
                    current = span;
                    grew = true;
                    break;
                }
                _ => {
                    gens.pop();
                }
            }
        }
        assert!(grew, "a p-subgroup below Sylow order always extends");
    }
    Subgroup {
        parent_order: g.order(),
        elements: current,
        generators: gens,
    }
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Left coset representatives of `h`: for each coset the smallest element
/// index, listed in ascending order (so the identity comes first).
pub fn transversal(g: &FiniteGroup, h: &Subgroup) -> Vec<usize> {
    let mut covered = vec![false; g.order()];
    let mut reps = Vec::with_capacity(g.order() / h.order().max(1));
    for x in 0..g.order() {
        if covered[x] {
            continue;
        }
        reps.push(x);
        for &y in h.elements() {
            covered[g.mul(x, y)] = true;
        }
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{make_family, Family};

    #[test]
    fn sylow_examples() {
        let s3 = make_family(&Family::SemidirectC3C2n(1)).unwrap();
        assert_eq!(sylow(&s3, 3).order(), 3);
        let q8 = make_family(&Family::GeneralizedQuaternion(8)).unwrap();
        assert_eq!(sylow(&q8, 2).order(), 8);
        let c12 = make_family(&Family::Cyclic(12)).unwrap();
        let s2 = sylow(&c12, 2);
        assert_eq!(s2.elements(), &[0, 3, 6, 9]);
        let (sub, _) = s2.as_group(&c12).unwrap();
        assert!(sub.is_cyclic());
        assert_eq!(sylow(&c12, 5).order(), 1);
    }

    #[test]
    fn sylow_orders_across_families() {
        for f in [
            Family::Alternating4,
            Family::SemidirectC3C2n(3),
            Family::DirectProduct(6, 2),
            Family::Dihedral(16),
            Family::ElementaryAbelian(3, 2),
        ] {
            let g = make_family(&f).unwrap();
            for p in [2u64, 3, 5] {
                let expect = p.pow(valuation(g.order() as u64, p)) as usize;
                let s = sylow(&g, p);
                assert_eq!(s.order(), expect, "{f} p={p}");
                assert!(Subgroup::from_elements(&g, s.elements().to_vec()).is_ok());
            }
        }
    }

    #[test]
    fn transversal_examples() {
        let c4 = make_family(&Family::Cyclic(4)).unwrap();
        assert_eq!(transversal(&c4, &Subgroup::whole(&c4)), vec![0]);
        let c2 = Subgroup::generated(&c4, &[2]);
        assert_eq!(transversal(&c4, &c2), vec![0, 1]);
        let q8 = make_family(&Family::GeneralizedQuaternion(8)).unwrap();
        let cyc = Subgroup::generated(&q8, &[1]);
        assert_eq!(cyc.order(), 4);
        assert_eq!(transversal(&q8, &cyc).len(), 2);
    }

    #[test]
    fn cosets_partition() {
        let g = make_family(&Family::Alternating4).unwrap();
        let h = sylow(&g, 3);
        let reps = transversal(&g, &h);
        assert_eq!(reps.len() * h.order(), g.order());
        let mut all: Vec<usize> = reps
            .iter()
            .flat_map(|&t| h.elements().iter().map(move |&y| (t, y)))
            .map(|(t, y)| g.mul(t, y))
            .collect();
        all.sort_unstable();
        assert_eq!(all, (0..12).collect::<Vec<_>>());
    }

    #[test]
    fn rejects_non_subgroups() {
        let c4 = make_family(&Family::Cyclic(4)).unwrap();
        assert_eq!(
            Subgroup::from_elements(&c4, vec![0, 1]),
            Err(GroupError::NotASubgroup)
        );
        assert_eq!(
            Subgroup::from_elements(&c4, vec![1, 3]),
            Err(GroupError::NotASubgroup)
        );
    }
}

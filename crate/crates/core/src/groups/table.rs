//! Finite groups as explicit multiplication tables.

use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::word::{Letter, Presentation, Word};
use super::GroupError;

pub const MAX_ORDER: usize = 4096;

/// Above this order associativity is sampled instead of checked exhaustively.
const EXHAUSTIVE_AUDIT_ORDER: usize = 256;
const SAMPLED_TRIPLES: usize = 200_000;

/// A finite group on elements `0..order`, with `0` the identity, carrying a
/// presentation whose generators are realized by `generators`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u16>,
    inverses: Vec<u16>,
    orders: Vec<u32>,
    presentation: Presentation,
    generators: Vec<usize>,
}

impl FiniteGroup {
    /// Audits a multiplication table and derives a presentation for it from
    /// a greedy generating set and a spanning tree of its Cayley graph.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        let order = rows.len();
        let mut g = Self::from_table_unpresented(rows)?;
        let generators = g.greedy_generators();
        let presentation = g.spanning_tree_presentation(&generators);
        g.presentation = presentation;
        g.generators = generators;
        debug_assert_eq!(g.order, order);
        Ok(g)
    }

    /// Like [`from_table`](Self::from_table) but with a caller-supplied
    /// presentation, checked against the table.
    pub fn from_table_with_presentation(
        rows: &[Vec<usize>],
        presentation: Presentation,
        generators: Vec<usize>,
    ) -> Result<Self, GroupError> {
        let mut g = Self::from_table_unpresented(rows)?;
        g.attach_presentation(presentation, generators)?;
        Ok(g)
    }

    /// Builds the table from a multiplication function on `0..order`.
    pub(crate) fn from_mul_fn(
        order: usize,
        mul: impl Fn(usize, usize) -> usize,
        presentation: Presentation,
        generators: Vec<usize>,
    ) -> Result<Self, GroupError> {
        if order > MAX_ORDER {
            return Err(GroupError::OrderTooLarge(order));
        }
        let rows: Vec<Vec<usize>> = (0..order)
            .map(|a| (0..order).map(|b| mul(a, b)).collect())
            .collect();
        Self::from_table_with_presentation(&rows, presentation, generators)
    }

    fn from_table_unpresented(rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        let order = rows.len();
        if order == 0 {
            return Err(GroupError::AuditFailed("empty table".into()));
        }
        if order > MAX_ORDER {
            return Err(GroupError::OrderTooLarge(order));
        }
        let mut table = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::AuditFailed(format!(
                    "row {i} has {} entries",
                    row.len()
                )));
            }
            for &v in row {
                if v >= order {
                    return Err(GroupError::AuditFailed(format!(
                        "entry {v} out of range in row {i}"
                    )));
                }
                table.push(v as u16);
            }
        }
        let mut g = Self {
            order,
            table,
            inverses: Vec::new(),
            orders: Vec::new(),
            presentation: Presentation::new(vec![], vec![]).unwrap(),
            generators: Vec::new(),
        };
        g.audit()?;
        g.inverses = (0..order)
            .map(|a| (0..order).find(|&b| g.mul(a, b) == 0).unwrap() as u16)
            .collect();
        g.orders = (0..order)
            .map(|a| {
                let mut x = a;
                let mut k = 1;
                while x != 0 {
                    x = g.mul(x, a);
                    k += 1;
                }
                k
            })
            .collect();
        Ok(g)
    }

    /// Identity, Latin-square and associativity checks.
    fn audit(&self) -> Result<(), GroupError> {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(GroupError::AuditFailed(format!(
                    "element 0 is not an identity at {a}"
                )));
            }
        }
        let mut seen = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                let v = self.mul(a, b);
                if seen[v] == a {
                    return Err(GroupError::AuditFailed(format!("row {a} repeats {v}")));
                }
                seen[v] = a;
            }
        }
        seen.iter_mut().for_each(|s| *s = usize::MAX);
        for b in 0..n {
            for a in 0..n {
                let v = self.mul(a, b);
                if seen[v] == b {
                    return Err(GroupError::AuditFailed(format!("column {b} repeats {v}")));
                }
                seen[v] = b;
            }
        }
        let assoc = |a: usize, b: usize, c: usize| {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                Err(GroupError::AuditFailed(format!(
                    "({a}*{b})*{c} != {a}*({b}*{c})"
                )))
            } else {
                Ok(())
            }
        };
        if n <= EXHAUSTIVE_AUDIT_ORDER {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        assoc(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            for _ in 0..SAMPLED_TRIPLES {
                assoc(
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                )?;
            }
        }
        Ok(())
    }

    fn attach_presentation(
        &mut self,
        presentation: Presentation,
        generators: Vec<usize>,
    ) -> Result<(), GroupError> {
        if generators.len() != presentation.num_generators() {
            return Err(GroupError::BadPresentation(format!(
                "{} generator images for {} generators",
                generators.len(),
                presentation.num_generators()
            )));
        }
        if generators.iter().any(|&g| g >= self.order) {
            return Err(GroupError::BadPresentation(
                "generator image out of range".into(),
            ));
        }
        for (i, w) in presentation.relators().iter().enumerate() {
            if self.eval_word(w, &generators) != 0 {
                return Err(GroupError::BadPresentation(format!(
                    "relator {} is not the identity in the table",
                    i + 1
                )));
            }
        }
        if self.closure(&generators).len() != self.order {
            return Err(GroupError::BadPresentation(
                "generators do not generate the group".into(),
            ));
        }
        self.presentation = presentation;
        self.generators = generators;
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    #[inline]
    pub fn element_order(&self, a: usize) -> u32 {
        self.orders[a]
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let k = k % self.orders[a] as u64;
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    /// Element indices realizing the presentation's generators.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.iter().any(|&o| o as usize == self.order)
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// Evaluates a word with generator `i` sent to element `images[i]`.
    pub fn eval_word(&self, w: &Word, images: &[usize]) -> usize {
        w.fold(0, |acc, l| {
            let x = images[l.gen];
            self.mul(acc, if l.inverse { self.inv(x) } else { x })
        })
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        self.closure_bounded(gens, usize::MAX)
            .expect("unbounded closure")
    }

    /// Subgroup closure that gives up once more than `limit` elements appear.
    pub(crate) fn closure_bounded(&self, gens: &[usize], limit: usize) -> Option<Vec<usize>> {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut elems = vec![0usize];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(x, s);
                if !member[y] {
                    member[y] = true;
                    elems.push(y);
                    if elems.len() > limit {
                        return None;
                    }
                    queue.push_back(y);
                }
            }
        }
        elems.sort_unstable();
        Some(elems)
    }

    /// Ascending scan: keep each element not already in the span so far.
    pub(crate) fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![0usize];
        for x in 1..self.order {
            if span.binary_search(&x).is_err() {
                gens.push(x);
                span = self.closure(&gens);
                if span.len() == self.order {
                    break;
                }
            }
        }
        gens
    }

    /// Presentation on `gens` with one relator `w_y s w_{ys}^{-1}` per Cayley
    /// graph edge off a breadth-first spanning tree (tree edges reduce away).
    pub(crate) fn spanning_tree_presentation(&self, gens: &[usize]) -> Presentation {
        let mut tree: Vec<Option<Word>> = vec![None; self.order];
        tree[0] = Some(Word::empty());
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (i, &s) in gens.iter().enumerate() {
                let y = self.mul(x, s);
                if tree[y].is_none() {
                    let w = tree[x]
                        .as_ref()
                        .unwrap()
                        .concat(&Word(vec![Letter::pos(i)]));
                    tree[y] = Some(w);
                    queue.push_back(y);
                }
            }
        }
        let mut relators = Vec::new();
        for x in 0..self.order {
            let wx = tree[x].as_ref().expect("generators span the group");
            for (i, &s) in gens.iter().enumerate() {
                let wy = tree[self.mul(x, s)].as_ref().unwrap();
                let rel = wx.concat(&Word(vec![Letter::pos(i)])).concat(&wy.inverse());
                if !rel.free_reduce().is_empty() {
                    relators.push(rel);
                }
            }
        }
        let names = default_names(gens.len());
        Presentation::new(names, relators).expect("well-formed derived presentation")
    }

    /// Rows of the multiplication table.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }
}

pub(crate) fn default_names(k: usize) -> Vec<String> {
    const BASE: [&str; 4] = ["s", "t", "u", "v"];
    if k <= BASE.len() {
        BASE[..k].iter().map(|s| s.to_string()).collect()
    } else {
        (0..k).map(|i| format!("g{i}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn klein_rows() -> Vec<Vec<usize>> {
        (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect()
    }

    #[test]
    fn table_audit_accepts_klein() {
        let g = FiniteGroup::from_table(&klein_rows()).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.is_abelian());
        assert!(!g.is_cyclic());
        assert_eq!(g.generators(), &[1, 2]);
        for w in g.presentation().relators() {
            assert_eq!(g.eval_word(w, g.generators()), 0);
        }
    }

    #[test]
    fn audit_rejects_broken_tables() {
        let mut rows = klein_rows();
        rows[1][1] = 1;
        assert!(matches!(
            FiniteGroup::from_table(&rows),
            Err(GroupError::AuditFailed(_))
        ));
        // Latin square with identity but not associative (order 5 loop).
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_table(&loop5),
            Err(GroupError::AuditFailed(_))
        ));
        let mut swapped = klein_rows();
        swapped[0].swap(1, 2);
        assert!(FiniteGroup::from_table(&swapped).is_err());
    }

    #[test]
    fn derived_presentation_holds() {
        // Z/6 with a shuffled labelling 0,5,1,4,2,3.
        let label = [0usize, 5, 1, 4, 2, 3];
        let mut pos = [0usize; 6];
        for (i, &l) in label.iter().enumerate() {
            pos[l] = i;
        }
        let rows: Vec<Vec<usize>> = (0..6)
            .map(|a| (0..6).map(|b| label[(pos[a] + pos[b]) % 6]).collect())
            .collect();
        let g = FiniteGroup::from_table(&rows).unwrap();
        assert!(g.is_cyclic());
        assert_eq!(g.table_rows(), rows);
        for w in g.presentation().relators() {
            assert_eq!(g.eval_word(w, g.generators()), 0);
        }
    }
}

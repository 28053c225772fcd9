use std::collections::VecDeque;

use crate::finite_rings::{MatFp, PrimeCtx};
use crate::groups::{transversal, FiniteGroup, Presentation, Subgroup, Word};

use super::rep::Representation;
use super::RepError;

/// Block-diagonal sum `X ⊕ Y` over a shared presentation.
pub fn direct_sum(x: &Representation, y: &Representation) -> Result<Representation, RepError> {
    if x.ctx() != y.ctx() {
        return Err(RepError::Mismatch(format!(
            "p={} vs p={}",
            x.ctx().p(),
            y.ctx().p()
        )));
    }
    if x.presentation() != y.presentation() {
        return Err(RepError::Mismatch(
            "summands use different presentations".into(),
        ));
    }
    let gens = x
        .gen_mats()
        .iter()
        .zip(y.gen_mats())
        .map(|(a, b)| MatFp::block_diag(x.ctx(), &[a, b]))
        .collect::<Result<Vec<_>, _>>()?;
    Representation::new(x.ctx(), x.dim() + y.dim(), x.presentation().clone(), gens)
}

/// `ρ(x)` for every element of `h`, where the generators of `rep`'s
/// presentation are sent to `gen_images` (elements of `g` inside `h`).
/// Returned in the order of `h.elements()`.
///
/// Breadth-first search over the Cayley graph of `h`; every edge is checked,
/// so an assignment that does not extend to a homomorphism is rejected.
pub fn element_matrices(
    rep: &Representation,
    g: &FiniteGroup,
    h: &Subgroup,
    gen_images: &[usize],
) -> Result<Vec<MatFp>, RepError> {
    if !h.belongs_to(g) {
        return Err(RepError::NotASubgroup);
    }
    if gen_images.len() != rep.gen_mats().len() {
        return Err(RepError::Mismatch(format!(
            "{} generator images for {} generators",
            gen_images.len(),
            rep.gen_mats().len()
        )));
    }
    if let Some(&x) = gen_images.iter().find(|&&x| !h.contains(x)) {
        return Err(RepError::UnrealizedPresentation(format!(
            "generator image {x} lies outside the subgroup"
        )));
    }
    let pos = |x: usize| h.elements().binary_search(&x).unwrap();
    let mut mats: Vec<Option<MatFp>> = vec![None; h.order()];
    mats[0] = Some(MatFp::identity(rep.ctx(), rep.dim()));
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let mx = mats[pos(x)].clone().unwrap();
        for (gi, &s) in gen_images.iter().enumerate() {
            let y = g.mul(x, s);
            let my = &mx * &rep.gen_mats()[gi];
            match &mats[pos(y)] {
                Some(existing) if *existing != my => {
                    return Err(RepError::UnrealizedPresentation(format!(
                        "matrices disagree on element {y}: the assignment is not a homomorphism"
                    )));
                }
                Some(_) => {}
                None => {
                    mats[pos(y)] = Some(my);
                    queue.push_back(y);
                }
            }
        }
    }
    mats.into_iter().collect::<Option<Vec<_>>>().ok_or_else(|| {
        RepError::UnrealizedPresentation("generator images do not generate the subgroup".into())
    })
}

/// `Ind_H^G ρ`: dimension `[G:H]·n`, with block `(i, j)` of the image of
/// `x` equal to `ρ(t_i^{-1} x t_j)` when that lies in `H`. The result is a
/// representation of `g`'s own presentation.
pub fn induce(
    rep_h: &Representation,
    g: &FiniteGroup,
    h: &Subgroup,
    gen_images: &[usize],
) -> Result<Representation, RepError> {
    let on_h = element_matrices(rep_h, g, h, gen_images)?;
    let reps = transversal(g, h);
    let n = rep_h.dim();
    let ctx = rep_h.ctx();
    let gens = g
        .generators()
        .iter()
        .map(|&x| {
            let grid: Vec<Vec<Option<MatFp>>> = reps
                .iter()
                .map(|&ti| {
                    let ti_inv_x = g.mul(g.inv(ti), x);
                    reps.iter()
                        .map(|&tj| {
                            let y = g.mul(ti_inv_x, tj);
                            h.elements().binary_search(&y).ok().map(|k| on_h[k].clone())
                        })
                        .collect()
                })
                .collect();
            MatFp::from_blocks(ctx, n, &grid)
        })
        .collect();
    let out = Representation::new(ctx, reps.len() * n, g.presentation().clone(), gens)?;
    out.validate()?;
    Ok(out)
}

/// Restriction along words: generator `i` of `target` is sent to the value
/// of `words[i]` under `rep_g`.
pub fn restrict(
    rep_g: &Representation,
    target: Presentation,
    words: &[Word],
) -> Result<Representation, RepError> {
    if words.len() != target.num_generators() {
        return Err(RepError::Mismatch(format!(
            "{} words for {} generators",
            words.len(),
            target.num_generators()
        )));
    }
    let k = rep_g.presentation().num_generators();
    if let Some(w) = words
        .iter()
        .find(|w| w.max_generator().is_some_and(|m| m >= k))
    {
        return Err(RepError::Mismatch(format!(
            "word {w:?} uses a generator outside the presentation"
        )));
    }
    let gens = words
        .iter()
        .map(|w| rep_g.eval(w))
        .collect::<Result<Vec<_>, _>>()?;
    Representation::checked(rep_g.ctx(), rep_g.dim(), target, gens)
}

/// Left-regular representation of `g` over `F_p`: `e_x ↦ e_{sx}`.
pub fn regular_representation(g: &FiniteGroup, ctx: PrimeCtx) -> Representation {
    let n = g.order();
    let gens = g
        .generators()
        .iter()
        .map(|&s| MatFp::from_fn(ctx, n, |r, c| i64::from(g.mul(s, c) == r)))
        .collect();
    Representation::new(ctx, n, g.presentation().clone(), gens)
        .expect("shapes agree by construction")
}

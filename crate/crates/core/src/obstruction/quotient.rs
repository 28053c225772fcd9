use crate::finite_rings::{MatFp, RowSpace};
use crate::groups::FiniteGroup;
use crate::replift::Representation;

use super::algebra::AlgFp;
use super::ObstructionError;

/// The left module `F_p[G] / F_p[G]·h` as a representation of `g`'s
/// presentation.
///
/// In general the basis is the unit vectors at the free columns of the
/// echelon form of `F_p[G]·h`. When `g` has a single generator `σ` and the
/// ideal equals `F_p[G]·(1-σ)^d` with quotient of dimension `d`, the basis
/// `(1-σ)^i`, `0 <= i < d`, is used instead; there `σ` acts as `I - N` with
/// `N` the subdiagonal shift.
pub fn module_of_quotient(g: &FiniteGroup, h: &AlgFp) -> Result<Representation, ObstructionError> {
    let n = g.order();
    if h.len() != n {
        return Err(ObstructionError::Mismatch(format!(
            "{} coefficients for a group of order {n}",
            h.len()
        )));
    }
    if h.is_zero() {
        return Err(ObstructionError::ZeroElement);
    }
    let ctx = h.ctx();
    let rows: Vec<Vec<u32>> = (0..n)
        .map(|x| {
            AlgFp::basis(ctx, n, x)
                .mul(g, h)
                .map(|v| v.coeffs().to_vec())
        })
        .collect::<Result<_, _>>()?;
    let ideal = RowSpace::new(ctx, n, &rows)?;
    let dim = n - ideal.rank();
    let presentation = g.presentation().clone();

    if let Some(rep) = unipotent_model(g, h, &ideal, dim)? {
        return Ok(rep);
    }

    let free = ideal.free_columns();
    let gens = g
        .generators()
        .iter()
        .map(|&s| {
            let mut m = MatFp::zero(ctx, dim);
            for (j, &c) in free.iter().enumerate() {
                let image = ideal.reduce(AlgFp::basis(ctx, n, g.mul(s, c)).coeffs());
                for (i, &r) in free.iter().enumerate() {
                    m.set(i, j, image[r]);
                }
            }
            m
        })
        .collect();
    Ok(Representation::new(ctx, dim, presentation, gens)?)
}

fn unipotent_model(
    g: &FiniteGroup,
    h: &AlgFp,
    ideal: &RowSpace,
    dim: usize,
) -> Result<Option<Representation>, ObstructionError> {
    let &[sigma] = g.generators() else {
        return Ok(None);
    };
    if g.element_order(sigma) as usize != g.order() {
        return Ok(None);
    }
    let ctx = h.ctx();
    let step = AlgFp::one_minus_pow(g, ctx, sigma, 1);
    let mut powers = vec![AlgFp::basis(ctx, g.order(), 0)];
    for _ in 0..dim {
        let next = powers.last().unwrap().mul(g, &step)?;
        powers.push(next);
    }
    if !ideal.contains(powers[dim].coeffs()) {
        return Ok(None);
    }
    let mut span: Vec<Vec<u32>> = ideal.basis().to_vec();
    span.extend(powers[..dim].iter().map(|v| v.coeffs().to_vec()));
    if RowSpace::new(ctx, g.order(), &span)?.rank() != ideal.rank() + dim {
        return Ok(None);
    }
    let p = ctx.p() as i64;
    let m = MatFp::from_fn(ctx, dim, |r, c| {
        if r == c {
            1
        } else if r == c + 1 {
            p - 1
        } else {
            0
        }
    });
    Ok(Some(Representation::new(
        ctx,
        dim,
        g.presentation().clone(),
        vec![m],
    )?))
}

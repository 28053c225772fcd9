//! The affine system whose solutions are the lifts of a representation.
//!
//! Every lift of a generator image `g` is `(1 + pA)·ĝ` for a fixed naive
//! lift `ĝ` and some `A ∈ M_n(F_p)`. Moving each correction to the front of
//! a relator `w = x_{j_1}^{ε_1} ⋯ x_{j_L}^{ε_L}` with
//! `X·(1 + pY) = (1 + p·XYX^{-1})·X` and `((1 + pA)g)^{-1} = g^{-1}(1 - pA)`
//! gives
//!
//! ```text
//! w(lifts) = (1 + p·Σ_t ε_t v_t A_{j_t} v_t^{-1}) · ŵ,    ŵ = 1 + p·E_w,
//! ```
//!
//! where `v_t` is the prefix before letter `t` for `ε_t = +1` and the prefix
//! through letter `t` for `ε_t = -1`. Since the kernel of reduction is
//! abelian of exponent `p`, the relator lifts to the identity iff
//! `Σ_t ε_t v_t A_{j_t} v_t^{-1} = -E_w` in `M_n(F_p)`.

use crate::finite_rings::{AffineSystem, MatFp, MatZp2, UnknownLayout};
use crate::groups::Word;

use super::rep::{eval_word, Representation};
use super::RepError;

pub const MAX_DIM: usize = 64;
pub const MAX_ROWS: usize = 1 << 16;

/// The linearized lift problem for one representation: one `n²`-row block
/// per relator, one `n²`-column block per generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearizedSystem {
    pub system: AffineSystem,
    /// `E_w` for each relator, in presentation order.
    pub defects: Vec<MatFp>,
}

/// Naive lifts through the canonical section `[0, p)`.
pub fn canonical_lifts(rep: &Representation) -> Vec<MatZp2> {
    rep.gen_mats().iter().map(MatFp::lift_canonical).collect()
}

/// `E_w` with `w(naive lifts) = I + p·E_w`.
pub fn relator_defect(
    rep: &Representation,
    naive_lifts: &[MatZp2],
    w: &Word,
) -> Result<MatFp, RepError> {
    check_lifts(rep, naive_lifts)?;
    let inverses = naive_lifts
        .iter()
        .map(MatZp2::inverse)
        .collect::<Result<Vec<_>, _>>()?;
    let value = eval_word(w, naive_lifts, &inverses, rep.ctx(), rep.dim());
    Ok(value.split_kernel_element()?)
}

fn check_lifts(rep: &Representation, lifts: &[MatZp2]) -> Result<(), RepError> {
    if lifts.len() != rep.gen_mats().len()
        || lifts
            .iter()
            .zip(rep.gen_mats())
            .any(|(l, g)| l.n() != g.n() || &l.reduce() != g)
    {
        return Err(RepError::Mismatch(
            "naive lifts do not reduce to the generator matrices".into(),
        ));
    }
    Ok(())
}

fn check_guards(rep: &Representation) -> Result<(), RepError> {
    let n = rep.dim();
    let rows = rep.presentation().relators().len() * n * n;
    if n > MAX_DIM || rows > MAX_ROWS {
        return Err(RepError::TooLarge(format!(
            "dimension {n} with {} relators gives {rows} equations (limits: n <= {MAX_DIM}, rows <= {MAX_ROWS})",
            rep.presentation().relators().len()
        )));
    }
    Ok(())
}

pub fn linearize(rep: &Representation) -> Result<LinearizedSystem, RepError> {
    linearize_with_lifts(rep, &canonical_lifts(rep))
}

pub fn linearize_with_lifts(
    rep: &Representation,
    naive_lifts: &[MatZp2],
) -> Result<LinearizedSystem, RepError> {
    check_guards(rep)?;
    check_lifts(rep, naive_lifts)?;
    let ctx = rep.ctx();
    let p = ctx.p();
    let n = rep.dim();
    let nn = n * n;
    let layout = UnknownLayout {
        gens: rep.gen_mats().len(),
        n,
    };
    let ncols = layout.len();
    let gens = rep.gen_mats();
    let gen_inv = rep.gen_inverses()?;

    let relators = rep.presentation().relators();
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(relators.len() * nn);
    let mut rhs: Vec<u32> = Vec::with_capacity(relators.len() * nn);
    let mut defects = Vec::with_capacity(relators.len());

    for w in relators {
        let defect = relator_defect(rep, naive_lifts, w)?;
        // One n²-row block per relator, reduced mod p on every update.
        let mut block = vec![vec![0u64; ncols]; nn];
        let mut prefix = MatFp::identity(ctx, n);
        let mut prefix_inv = MatFp::identity(ctx, n);
        for l in w.letters() {
            if l.inverse {
                prefix = &prefix * &gen_inv[l.gen];
                prefix_inv = &gens[l.gen] * &prefix_inv;
                accumulate(&mut block, &prefix, &prefix_inv, layout, l.gen, p - 1, p);
            } else {
                accumulate(&mut block, &prefix, &prefix_inv, layout, l.gen, 1, p);
                prefix = &prefix * &gens[l.gen];
                prefix_inv = &gen_inv[l.gen] * &prefix_inv;
            }
        }
        for r in 0..n {
            for c in 0..n {
                rows.push(
                    block[r * n + c]
                        .iter()
                        .map(|&v| (v % p as u64) as u32)
                        .collect(),
                );
                rhs.push((p - defect.get(r, c)) % p);
            }
        }
        defects.push(defect);
    }
    let system = AffineSystem::new(ctx, layout, rows, rhs)?;
    Ok(LinearizedSystem { system, defects })
}

/// Adds `sign · v A_gen v^{-1}` to the coefficient block: entry `(r, c)` of
/// the conjugate depends on `A[a][b]` with coefficient `v[r][a]·v^{-1}[b][c]`.
fn accumulate(
    block: &mut [Vec<u64>],
    v: &MatFp,
    v_inv: &MatFp,
    layout: UnknownLayout,
    gen: usize,
    sign: u32,
    p: u32,
) {
    let n = layout.n;
    let p = p as u64;
    for r in 0..n {
        for a in 0..n {
            let vra = v.get(r, a) as u64;
            if vra == 0 {
                continue;
            }
            let s = vra * sign as u64 % p;
            for b in 0..n {
                let col = layout.column(gen, a, b);
                for c in 0..n {
                    let w = v_inv.get(b, c) as u64;
                    if w != 0 {
                        let slot = &mut block[r * n + c][col];
                        *slot = (*slot + s * w) % p;
                    }
                }
            }
        }
    }
}

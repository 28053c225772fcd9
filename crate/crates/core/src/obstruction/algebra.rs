use std::marker::PhantomData;

use crate::finite_rings::{AffineSystem, Fp, Level, PrimeCtx, SolveResult, UnknownLayout, Zp2};
use crate::groups::FiniteGroup;

use super::ObstructionError;

/// `Σ_x c_x·x` in `F_p[G]` or `Z/p^2[G]`, coefficients indexed by element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupAlgebraElement<L: Level> {
    ctx: PrimeCtx,
    coeffs: Vec<u32>,
    _level: PhantomData<L>,
}

pub type AlgFp = GroupAlgebraElement<Fp>;
pub type AlgZp2 = GroupAlgebraElement<Zp2>;

impl<L: Level> GroupAlgebraElement<L> {
    pub fn new(ctx: PrimeCtx, coeffs: Vec<u32>) -> Result<Self, ObstructionError> {
        let m = L::modulus(&ctx);
        if let Some(&c) = coeffs.iter().find(|&&c| c >= m) {
            return Err(ObstructionError::Malformed(format!(
                "coefficient {c} is not reduced mod {m}"
            )));
        }
        Ok(Self {
            ctx,
            coeffs,
            _level: PhantomData,
        })
    }

    /// Reduces arbitrary integers into the ring.
    pub fn from_i64(ctx: PrimeCtx, coeffs: &[i64]) -> Self {
        let m = L::modulus(&ctx) as i64;
        Self {
            ctx,
            coeffs: coeffs.iter().map(|c| c.rem_euclid(m) as u32).collect(),
            _level: PhantomData,
        }
    }

    pub fn zero(ctx: PrimeCtx, order: usize) -> Self {
        Self {
            ctx,
            coeffs: vec![0; order],
            _level: PhantomData,
        }
    }

    /// The group element `x` itself.
    pub fn basis(ctx: PrimeCtx, order: usize, x: usize) -> Self {
        let mut e = Self::zero(ctx, order);
        e.coeffs[x] = 1;
        e
    }

    /// `(1 - x)^k`.
    pub fn one_minus_pow(g: &FiniteGroup, ctx: PrimeCtx, x: usize, k: u32) -> Self {
        let n = g.order();
        let mut base = Self::basis(ctx, n, 0);
        base = base.sub(&Self::basis(ctx, n, x)).expect("same shape");
        (0..k).fold(Self::basis(ctx, n, 0), |acc, _| {
            acc.mul(g, &base).expect("same shape")
        })
    }

    pub fn ctx(&self) -> PrimeCtx {
        self.ctx
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check_same(&self, other: &Self) -> Result<(), ObstructionError> {
        if self.ctx != other.ctx {
            return Err(ObstructionError::Mismatch(format!(
                "p={} vs p={}",
                self.ctx.p(),
                other.ctx.p()
            )));
        }
        if self.coeffs.len() != other.coeffs.len() {
            return Err(ObstructionError::Mismatch(format!(
                "{} vs {} coefficients",
                self.coeffs.len(),
                other.coeffs.len()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, ObstructionError> {
        self.check_same(other)?;
        let m = L::modulus(&self.ctx);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % m)
            .collect();
        Ok(Self {
            ctx: self.ctx,
            coeffs,
            _level: PhantomData,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ObstructionError> {
        self.check_same(other)?;
        let m = L::modulus(&self.ctx);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + m - b) % m)
            .collect();
        Ok(Self {
            ctx: self.ctx,
            coeffs,
            _level: PhantomData,
        })
    }

    pub fn scale(&self, s: u32) -> Self {
        let m = L::modulus(&self.ctx) as u64;
        let s = s as u64 % m;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| (a as u64 * s % m) as u32)
            .collect();
        Self {
            ctx: self.ctx,
            coeffs,
            _level: PhantomData,
        }
    }

    /// Convolution through the multiplication table of `g`.
    pub fn mul(&self, g: &FiniteGroup, other: &Self) -> Result<Self, ObstructionError> {
        self.check_same(other)?;
        if self.coeffs.len() != g.order() {
            return Err(ObstructionError::Mismatch(format!(
                "{} coefficients for a group of order {}",
                self.coeffs.len(),
                g.order()
            )));
        }
        let m = L::modulus(&self.ctx) as u64;
        let mut acc = vec![0u64; g.order()];
        for (x, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (y, &b) in other.coeffs.iter().enumerate() {
                if b != 0 {
                    let slot = &mut acc[g.mul(x, y)];
                    *slot = (*slot + a as u64 * b as u64) % m;
                }
            }
        }
        Ok(Self {
            ctx: self.ctx,
            coeffs: acc.into_iter().map(|c| c as u32).collect(),
            _level: PhantomData,
        })
    }
}

/// Convolution `a·b`.
pub fn algebra_mul<L: Level>(
    g: &FiniteGroup,
    a: &GroupAlgebraElement<L>,
    b: &GroupAlgebraElement<L>,
) -> Result<GroupAlgebraElement<L>, ObstructionError> {
    a.mul(g, b)
}

impl AlgFp {
    /// Coefficientwise section `[0, p)`.
    pub fn lift_canonical(&self) -> AlgZp2 {
        GroupAlgebraElement {
            ctx: self.ctx,
            coeffs: self.coeffs.clone(),
            _level: PhantomData,
        }
    }
}

impl AlgZp2 {
    pub fn reduce(&self) -> AlgFp {
        let p = self.ctx.p();
        GroupAlgebraElement {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().map(|c| c % p).collect(),
            _level: PhantomData,
        }
    }

    /// `u` with `self = p·u`, when every coefficient is divisible by `p`.
    pub fn divide_by_p(&self) -> Option<AlgFp> {
        let p = self.ctx.p();
        self.coeffs
            .iter()
            .map(|&c| (c % p == 0).then_some(c / p))
            .collect::<Option<Vec<_>>>()
            .map(|coeffs| GroupAlgebraElement {
                ctx: self.ctx,
                coeffs,
                _level: PhantomData,
            })
    }
}

/// A basis of `{h : f·h = 0}` in `F_p[G]`.
pub fn right_annihilator(g: &FiniteGroup, f: &AlgFp) -> Result<Vec<AlgFp>, ObstructionError> {
    let n = g.order();
    if f.len() != n {
        return Err(ObstructionError::Mismatch(format!(
            "{} coefficients for a group of order {n}",
            f.len()
        )));
    }
    let ctx = f.ctx();
    // Column y of the map h ↦ f·h is f·e_y.
    let cols: Vec<AlgFp> = (0..n)
        .map(|y| f.mul(g, &AlgFp::basis(ctx, n, y)))
        .collect::<Result<_, _>>()?;
    let rows: Vec<Vec<u32>> = (0..n)
        .map(|r| cols.iter().map(|c| c.coeffs[r]).collect())
        .collect();
    let system = AffineSystem::new(ctx, UnknownLayout::flat(n), rows, vec![0; n])?;
    match system.solve() {
        SolveResult::Consistent { nullspace, .. } => Ok(nullspace
            .into_iter()
            .map(|v| AlgFp {
                ctx,
                coeffs: v,
                _level: PhantomData,
            })
            .collect()),
        SolveResult::Inconsistent { .. } => unreachable!("homogeneous systems are consistent"),
    }
}

/// Parses `elt c_0 c_1 … c_{N-1}`; tokens may span lines, `#` starts a comment.
pub fn parse_elt(text: &str, ctx: PrimeCtx, order: usize) -> Result<AlgFp, ObstructionError> {
    let mut tokens = text.lines().enumerate().flat_map(|(i, l)| {
        l.split('#')
            .next()
            .unwrap_or("")
            .split_whitespace()
            .map(move |t| (i + 1, t))
    });
    match tokens.next() {
        Some((_, "elt")) => {}
        Some((line, t)) => {
            return Err(ObstructionError::Parse {
                line,
                msg: format!("expected `elt`, found `{t}`"),
            })
        }
        None => {
            return Err(ObstructionError::Parse {
                line: 0,
                msg: "empty element file".into(),
            })
        }
    }
    let mut coeffs = Vec::with_capacity(order);
    for (line, t) in tokens {
        let v: i64 = t.parse().map_err(|_| ObstructionError::Parse {
            line,
            msg: format!("`{t}` is not an integer"),
        })?;
        coeffs.push(v);
    }
    if coeffs.len() != order {
        return Err(ObstructionError::Parse {
            line: 0,
            msg: format!("expected {order} coefficients, found {}", coeffs.len()),
        });
    }
    Ok(AlgFp::from_i64(ctx, &coeffs))
}

pub fn write_elt(a: &AlgFp) -> String {
    let body: Vec<String> = a.coeffs.iter().map(u32::to_string).collect();
    format!("elt {}\n", body.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{make_family, Family};

    fn ctx(p: u32) -> PrimeCtx {
        PrimeCtx::new(p).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let g = make_family(&Family::Alternating4).unwrap();
        let a = AlgFp::from_i64(ctx(3), &(0..12).collect::<Vec<_>>());
        assert_eq!(AlgFp::basis(ctx(3), 12, 0).mul(&g, &a).unwrap(), a);
    }

    #[test]
    fn cube_of_one_minus_sigma() {
        let g = make_family(&Family::Cyclic(3)).unwrap();
        let f = AlgFp::one_minus_pow(&g, ctx(3), 1, 1);
        let h = AlgFp::one_minus_pow(&g, ctx(3), 1, 2);
        assert!(f.mul(&g, &h).unwrap().is_zero());
        // Over Z/9: (1-σ)^3 = 1 - 3σ + 3σ² - σ³ = 3(σ² - σ).
        let f9 = AlgZp2::one_minus_pow(&g, ctx(3), 1, 1);
        let h9 = AlgZp2::one_minus_pow(&g, ctx(3), 1, 2);
        assert_eq!(f9.mul(&g, &h9).unwrap().coeffs(), &[0, 6, 3]);
        // The canonical lift of (1-σ)^2 mod 3 is 1 + σ + σ², giving 3(1 + σ + σ²).
        let prod = f.lift_canonical().mul(&g, &h.lift_canonical()).unwrap();
        assert_eq!(prod.coeffs(), &[3, 3, 3]);
    }

    #[test]
    fn annihilator_of_norm_element() {
        // In F_2[C2], f = 1 + σ is annihilated exactly by multiples of itself.
        let g = make_family(&Family::Cyclic(2)).unwrap();
        let f = AlgFp::from_i64(ctx(2), &[1, 1]);
        let ann = right_annihilator(&g, &f).unwrap();
        assert_eq!(ann.len(), 1);
        assert_eq!(ann[0].coeffs(), &[1, 1]);
    }

    #[test]
    fn elt_round_trip() {
        let a = AlgFp::from_i64(ctx(3), &[1, -1, 0, 2]);
        assert_eq!(parse_elt(&write_elt(&a), ctx(3), 4).unwrap(), a);
        assert!(matches!(
            parse_elt("elt 1 2\n", ctx(3), 4),
            Err(ObstructionError::Parse { .. })
        ));
        assert!(matches!(
            parse_elt("x 1\n", ctx(3), 1),
            Err(ObstructionError::Parse { line: 1, .. })
        ));
    }
}

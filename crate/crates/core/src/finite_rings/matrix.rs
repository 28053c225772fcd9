//! Dense square matrices over `F_p` and `Z/p^2`.
//!
//! Both rings share one implementation, [`Mat`], parameterised by a
//! zero-sized [`Level`] marker that selects the modulus (`p` or `p^2`) from
//! the matrix's [`PrimeCtx`]. Entries are stored row-major as reduced `u32`
//! residues.

use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::{add_mod, inv_mod, mul_mod, sub_mod, PrimeCtx};
use super::RingError;

/// Selects which residue ring a [`Mat`] lives over.
pub trait Level: Copy + Clone + fmt::Debug + PartialEq + Eq + Send + Sync + 'static {
    const NAME: &'static str;
    fn modulus(ctx: &PrimeCtx) -> u32;
    /// Whether `a` is a unit of the ring.
    fn is_unit(ctx: &PrimeCtx, a: u32) -> bool {
        a % ctx.p() != 0
    }
}

/// The residue field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp;

/// The lifted ring `Z/p^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Zp2;

impl Level for Fp {
    const NAME: &'static str = "F_p";
    #[inline]
    fn modulus(ctx: &PrimeCtx) -> u32 {
        ctx.p()
    }
}

impl Level for Zp2 {
    const NAME: &'static str = "Z/p^2";
    #[inline]
    fn modulus(ctx: &PrimeCtx) -> u32 {
        ctx.p2()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat<L: Level> {
    ctx: PrimeCtx,
    n: usize,
    data: Vec<u32>,
    _level: PhantomData<L>,
}

pub type MatFp = Mat<Fp>;
pub type MatZp2 = Mat<Zp2>;

impl<L: Level> Mat<L> {
    pub fn zero(ctx: PrimeCtx, n: usize) -> Self {
        Self {
            ctx,
            n,
            data: vec![0; n * n],
            _level: PhantomData,
        }
    }

    pub fn identity(ctx: PrimeCtx, n: usize) -> Self {
        let mut m = Self::zero(ctx, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from a closure; values are reduced into range.
    pub fn from_fn(ctx: PrimeCtx, n: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let m = L::modulus(&ctx) as i64;
        let mut data = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                data.push(f(r, c).rem_euclid(m) as u32);
            }
        }
        Self {
            ctx,
            n,
            data,
            _level: PhantomData,
        }
    }

    /// Builds a matrix from rows, rejecting ragged input and unreduced entries.
    pub fn from_rows(ctx: PrimeCtx, rows: &[Vec<u32>]) -> Result<Self, RingError> {
        let n = rows.len();
        let modulus = L::modulus(&ctx);
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(RingError::NotSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
            for &v in row {
                if v >= modulus {
                    return Err(RingError::EntryOutOfRange {
                        value: v as u64,
                        modulus,
                    });
                }
                data.push(v);
            }
        }
        Ok(Self {
            ctx,
            n,
            data,
            _level: PhantomData,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn ctx(&self) -> PrimeCtx {
        self.ctx
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        L::modulus(&self.ctx)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.n + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        let m = self.modulus();
        self.data[r * self.n + c] = v % m;
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.data
            .chunks(self.n.max(1))
            .take(self.n)
            .map(<[u32]>::to_vec)
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|r| (0..self.n).all(|c| self.get(r, c) == u32::from(r == c)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    fn check_compatible(&self, other: &Self) -> Result<(), RingError> {
        if self.ctx != other.ctx {
            return Err(RingError::ModulusMismatch {
                left: self.ctx.p(),
                right: other.ctx.p(),
            });
        }
        if self.n != other.n {
            return Err(RingError::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check_compatible(other)?;
        let n = self.n;
        let m = self.modulus() as u64;
        let mut out = Self::zero(self.ctx, n);
        let mut acc = vec![0u64; n];
        for r in 0..n {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..n {
                let a = self.data[r * n + k] as u64;
                if a == 0 {
                    continue;
                }
                let row = &other.data[k * n..(k + 1) * n];
                for (slot, &b) in acc.iter_mut().zip(row) {
                    // a, b < 2^30, so one product plus a reduced accumulator
                    // stays below 2^61.
                    *slot = (*slot + a * b as u64) % m;
                }
            }
            for (dst, &v) in out.data[r * n..(r + 1) * n].iter_mut().zip(&acc) {
                *dst = v as u32;
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check_compatible(other)?;
        let m = self.modulus();
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| add_mod(a, b, m))
            .collect();
        Ok(Self {
            data,
            ..self.clone()
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.check_compatible(other)?;
        let m = self.modulus();
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| sub_mod(a, b, m))
            .collect();
        Ok(Self {
            data,
            ..self.clone()
        })
    }

    pub fn scale(&self, s: u32) -> Self {
        let m = self.modulus();
        let s = s % m;
        Self {
            data: self.data.iter().map(|&a| mul_mod(a, s, m)).collect(),
            ..self.clone()
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.ctx, self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = Self::zero(self.ctx, n);
        for r in 0..n {
            for c in 0..n {
                out.data[c * n + r] = self.data[r * n + c];
            }
        }
        out
    }

    pub fn trace(&self) -> u32 {
        let m = self.modulus();
        (0..self.n).fold(0, |acc, i| add_mod(acc, self.get(i, i), m))
    }

    /// Gauss-Jordan inversion. The pivot in each column is the first row at
    /// or below the diagonal holding a unit, so over `Z/p^2` the search fails
    /// exactly when the reduction mod `p` is singular.
    pub fn inverse(&self) -> Result<Self, RingError> {
        let n = self.n;
        let m = self.modulus();
        let mut a = self.data.clone();
        let mut inv = Self::identity(self.ctx, n).data;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| L::is_unit(&self.ctx, a[r * n + col]))
                .ok_or(RingError::Singular)?;
            if pivot != col {
                for c in 0..n {
                    a.swap(pivot * n + c, col * n + c);
                    inv.swap(pivot * n + c, col * n + c);
                }
            }
            let pinv = inv_mod(a[col * n + col], m).ok_or(RingError::Singular)?;
            for c in 0..n {
                a[col * n + c] = mul_mod(a[col * n + c], pinv, m);
                inv[col * n + c] = mul_mod(inv[col * n + c], pinv, m);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[r * n + col];
                if f == 0 {
                    continue;
                }
                for c in 0..n {
                    a[r * n + c] = sub_mod(a[r * n + c], mul_mod(f, a[col * n + c], m), m);
                    inv[r * n + c] = sub_mod(inv[r * n + c], mul_mod(f, inv[col * n + c], m), m);
                }
            }
        }
        Ok(Self {
            ctx: self.ctx,
            n,
            data: inv,
            _level: PhantomData,
        })
    }

    /// `c · self · c^{-1}`.
    pub fn conjugate_by(&self, c: &Self) -> Result<Self, RingError> {
        let ci = c.inverse()?;
        Ok(&c.try_mul(self)? * &ci)
    }

    /// Block-diagonal sum. All blocks must share the same prime.
    pub fn block_diag(ctx: PrimeCtx, blocks: &[&Self]) -> Result<Self, RingError> {
        let n: usize = blocks.iter().map(|b| b.n).sum();
        let mut out = Self::zero(ctx, n);
        let mut off = 0;
        for b in blocks {
            if b.ctx != ctx {
                return Err(RingError::ModulusMismatch {
                    left: ctx.p(),
                    right: b.ctx.p(),
                });
            }
            for r in 0..b.n {
                for c in 0..b.n {
                    out.data[(off + r) * n + off + c] = b.get(r, c);
                }
            }
            off += b.n;
        }
        Ok(out)
    }

    /// Assembles an `nb·k × nb·k` matrix from a `k × k` grid of equal-sized
    /// blocks (`None` is a zero block).
    pub fn from_blocks(ctx: PrimeCtx, block_n: usize, grid: &[Vec<Option<Self>>]) -> Self {
        let k = grid.len();
        let n = k * block_n;
        let mut out = Self::zero(ctx, n);
        for (bi, row) in grid.iter().enumerate() {
            for (bj, blk) in row.iter().enumerate() {
                if let Some(b) = blk {
                    for r in 0..block_n {
                        for c in 0..block_n {
                            out.data[(bi * block_n + r) * n + bj * block_n + c] = b.get(r, c);
                        }
                    }
                }
            }
        }
        out
    }
}

impl MatFp {
    /// Lift through the canonical section `F_p -> Z/p^2` (representatives in `[0, p)`).
    pub fn lift_canonical(&self) -> MatZp2 {
        Mat {
            ctx: self.ctx,
            n: self.n,
            data: self.data.clone(),
            _level: PhantomData,
        }
    }

    /// `I + p·X` in `GL_n(Z/p^2)`.
    pub fn merge_kernel(&self) -> MatZp2 {
        let p = self.ctx.p();
        let mut m = Mat {
            ctx: self.ctx,
            n: self.n,
            data: self.data.iter().map(|&x| x * p).collect(),
            _level: PhantomData,
        };
        for i in 0..self.n {
            m.data[i * self.n + i] += 1;
        }
        m
    }
}

impl MatZp2 {
    pub fn reduce(&self) -> MatFp {
        let p = self.ctx.p();
        Mat {
            ctx: self.ctx,
            n: self.n,
            data: self.data.iter().map(|&x| x % p).collect(),
            _level: PhantomData,
        }
    }

    /// Recovers `X` from `m = I + p·X`.
    pub fn split_kernel_element(&self) -> Result<MatFp, RingError> {
        let p = self.ctx.p();
        let n = self.n;
        let mut data = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let v = self.get(r, c);
                let centered = if r == c {
                    (v + self.ctx.p2() - 1) % self.ctx.p2()
                } else {
                    v
                };
                if centered % p != 0 {
                    return Err(RingError::NotInKernel { row: r, col: c });
                }
                data.push(centered / p);
            }
        }
        Ok(Mat {
            ctx: self.ctx,
            n,
            data,
            _level: PhantomData,
        })
    }
}

impl<L: Level> Mul for &Mat<L> {
    type Output = Mat<L>;
    fn mul(self, rhs: Self) -> Mat<L> {
        self.try_mul(rhs)
            .expect("matrix product of incompatible operands")
    }
}

impl<L: Level> Add for &Mat<L> {
    type Output = Mat<L>;
    fn add(self, rhs: Self) -> Mat<L> {
        self.try_add(rhs)
            .expect("matrix sum of incompatible operands")
    }
}

impl<L: Level> Sub for &Mat<L> {
    type Output = Mat<L>;
    fn sub(self, rhs: Self) -> Mat<L> {
        self.try_sub(rhs)
            .expect("matrix difference of incompatible operands")
    }
}

impl<L: Level> Neg for &Mat<L> {
    type Output = Mat<L>;
    fn neg(self) -> Mat<L> {
        let m = self.modulus();
        Mat {
            data: self.data.iter().map(|&a| (m - a) % m).collect(),
            ..self.clone()
        }
    }
}

impl<L: Level> fmt::Debug for Mat<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat<{}>(p={}, {:?})", L::NAME, self.ctx.p(), self.rows())
    }
}

impl<L: Level> fmt::Display for Mat<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u32) -> PrimeCtx {
        PrimeCtx::new(p).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let c = ctx(2);
        let m = MatZp2::from_rows(c, &[vec![3, 1, 2], vec![0, 2, 1], vec![1, 1, 3]]).unwrap();
        assert_eq!(&MatZp2::identity(c, 3) * &m, m);
        assert_eq!(&m * &MatZp2::identity(c, 3), m);
    }

    #[test]
    fn golden_ratio_matrix_squares_to_x_plus_one() {
        let c = ctx(2);
        let x = MatFp::from_rows(c, &[vec![0, 1], vec![1, 1]]).unwrap();
        let x2 = &x * &x;
        assert_eq!(x2.rows(), vec![vec![1, 1], vec![1, 0]]);
        assert_eq!(x2, &x + &MatFp::identity(c, 2));
        assert_eq!(x.inverse().unwrap().rows(), vec![vec![1, 1], vec![1, 0]]);
    }

    #[test]
    fn companion_of_cyclotomic_product_has_order_four() {
        // t^3 + t^2 + t + 1: last column holds -c_i.
        let c = ctx(2);
        let comp = MatZp2::from_rows(c, &[vec![0, 0, 3], vec![1, 0, 3], vec![0, 1, 3]]).unwrap();
        assert!(comp.pow(4).is_identity());
        assert!(!comp.pow(2).is_identity());
    }

    #[test]
    fn singular_over_z4() {
        let c = ctx(2);
        let m = MatZp2::from_rows(c, &[vec![2, 0], vec![0, 2]]).unwrap();
        assert_eq!(m.inverse(), Err(RingError::Singular));
        assert_eq!(
            MatZp2::identity(c, 4).inverse().unwrap(),
            MatZp2::identity(c, 4)
        );
    }

    #[test]
    fn kernel_split_examples() {
        let c3 = ctx(3);
        assert!(MatZp2::identity(c3, 3)
            .split_kernel_element()
            .unwrap()
            .is_zero());
        let m = MatZp2::from_rows(c3, &[vec![4, 3], vec![6, 4]]).unwrap();
        assert_eq!(
            m.split_kernel_element().unwrap().rows(),
            vec![vec![1, 1], vec![2, 1]]
        );
        let c2 = ctx(2);
        let m = MatZp2::from_rows(c2, &[vec![1, 2], vec![0, 1]]).unwrap();
        assert_eq!(
            m.split_kernel_element().unwrap().rows(),
            vec![vec![0, 1], vec![0, 0]]
        );
        let bad = MatZp2::from_rows(c2, &[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(
            bad.split_kernel_element(),
            Err(RingError::NotInKernel { row: 0, col: 1 })
        );
    }

    #[test]
    fn mismatch_errors() {
        let a = MatFp::identity(ctx(2), 2);
        let b = MatFp::identity(ctx(3), 2);
        let d = MatFp::identity(ctx(2), 3);
        assert!(matches!(
            a.try_mul(&b),
            Err(RingError::ModulusMismatch { .. })
        ));
        assert!(matches!(
            a.try_mul(&d),
            Err(RingError::DimensionMismatch { .. })
        ));
        assert!(MatFp::from_rows(ctx(2), &[vec![2, 0], vec![0, 1]]).is_err());
    }

    #[test]
    fn zero_dimensional_matrices() {
        let z = MatFp::identity(ctx(5), 0);
        assert!(z.is_identity());
        assert_eq!((&z * &z).n(), 0);
        assert_eq!(z.inverse().unwrap().n(), 0);
        assert!(z.rows().is_empty());
    }
}

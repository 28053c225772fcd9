//! Affine systems `A·x = b` over `F_p` with independently checkable answers.
//!
//! A consistent system yields a particular solution (free variables zero)
//! and a nullspace basis. An inconsistent one yields a row functional `c`
//! with `c·A = 0` and `c·b != 0`; it is found by solving the transposed
//! system `A^T c = 0, b·c = 1`, which is consistent whenever the original
//! is not.
//!
//! Elimination is reduced row echelon form in column order, taking the first
//! row with a nonzero entry as pivot. For `p = 2` rows are bit-packed; both
//! paths make identical pivot choices.

use serde::{Deserialize, Serialize};

use super::scalar::{add_mod, inv_mod, mul_mod, sub_mod, PrimeCtx};
use super::RingError;

/// Column layout of the unknowns: `gens` blocks of `n × n` matrix entries,
/// ordered by generator then row-major entry. A flat system of `k` scalar
/// unknowns uses `gens = k, n = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnknownLayout {
    pub gens: usize,
    pub n: usize,
}

impl UnknownLayout {
    pub fn flat(k: usize) -> Self {
        Self { gens: k, n: 1 }
    }

    pub fn len(&self) -> usize {
        self.gens * self.n * self.n
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn column(&self, gen: usize, row: usize, col: usize) -> usize {
        debug_assert!(gen < self.gens && row < self.n && col < self.n);
        (gen * self.n + row) * self.n + col
    }

    pub fn locate(&self, column: usize) -> (usize, usize, usize) {
        let nn = self.n * self.n;
        (column / nn, (column % nn) / self.n, column % self.n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSystem {
    ctx: PrimeCtx,
    layout: UnknownLayout,
    rows: Vec<Vec<u32>>,
    rhs: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveResult {
    Consistent {
        particular: Vec<u32>,
        nullspace: Vec<Vec<u32>>,
    },
    Inconsistent {
        functional: Vec<u32>,
    },
}

impl SolveResult {
    pub fn is_consistent(&self) -> bool {
        matches!(self, SolveResult::Consistent { .. })
    }
}

impl AffineSystem {
    pub fn new(
        ctx: PrimeCtx,
        layout: UnknownLayout,
        rows: Vec<Vec<u32>>,
        rhs: Vec<u32>,
    ) -> Result<Self, RingError> {
        let ncols = layout.len();
        if rows.len() != rhs.len() {
            return Err(RingError::Malformed(format!(
                "{} coefficient rows but {} right-hand sides",
                rows.len(),
                rhs.len()
            )));
        }
        let p = ctx.p();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(RingError::Malformed(format!(
                    "row {i} has {} entries, expected {ncols}",
                    row.len()
                )));
            }
            if row.iter().chain(std::iter::once(&rhs[i])).any(|&v| v >= p) {
                return Err(RingError::Malformed(format!(
                    "row {i} has unreduced entries"
                )));
            }
        }
        Ok(Self {
            ctx,
            layout,
            rows,
            rhs,
        })
    }

    pub fn ctx(&self) -> PrimeCtx {
        self.ctx
    }

    pub fn layout(&self) -> UnknownLayout {
        self.layout
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_unknowns(&self) -> usize {
        self.layout.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn rhs(&self) -> &[u32] {
        &self.rhs
    }

    /// `A·x - b`, entrywise.
    pub fn residual(&self, x: &[u32]) -> Vec<u32> {
        let p = self.ctx.p();
        self.rows
            .iter()
            .zip(&self.rhs)
            .map(|(row, &b)| sub_mod(dot(row, x, p), b, p))
            .collect()
    }

    pub fn is_solution(&self, x: &[u32]) -> bool {
        x.len() == self.num_unknowns() && self.residual(x).iter().all(|&v| v == 0)
    }

    /// Checks `c·A = 0` and `c·b != 0`.
    pub fn is_refutation(&self, c: &[u32]) -> bool {
        if c.len() != self.rows.len() {
            return false;
        }
        let p = self.ctx.p();
        let mut combo = vec![0u32; self.num_unknowns()];
        let mut rhs = 0u32;
        for ((row, &b), &ci) in self.rows.iter().zip(&self.rhs).zip(c) {
            if ci == 0 {
                continue;
            }
            for (acc, &a) in combo.iter_mut().zip(row) {
                *acc = add_mod(*acc, mul_mod(ci, a, p), p);
            }
            rhs = add_mod(rhs, mul_mod(ci, b, p), p);
        }
        combo.iter().all(|&v| v == 0) && rhs != 0
    }

    pub fn solve(&self) -> SolveResult {
        let ncols = self.num_unknowns();
        let form = Rref::compute(self.ctx.p(), ncols, &self.rows, &self.rhs);
        if form.inconsistent {
            let functional = self.refuting_functional();
            debug_assert!(self.is_refutation(&functional));
            return SolveResult::Inconsistent { functional };
        }
        let p = self.ctx.p();
        let mut particular = vec![0u32; ncols];
        for (i, &pc) in form.pivots.iter().enumerate() {
            particular[pc] = form.rows[i][ncols];
        }
        let mut is_pivot = vec![false; ncols];
        for &pc in &form.pivots {
            is_pivot[pc] = true;
        }
        let nullspace = (0..ncols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![0u32; ncols];
                v[f] = 1;
                for (i, &pc) in form.pivots.iter().enumerate() {
                    v[pc] = (p - form.rows[i][f]) % p;
                }
                v
            })
            .collect();
        SolveResult::Consistent {
            particular,
            nullspace,
        }
    }

    fn refuting_functional(&self) -> Vec<u32> {
        let m = self.rows.len();
        let ncols = self.num_unknowns();
        let mut trows: Vec<Vec<u32>> = (0..ncols)
            .map(|j| self.rows.iter().map(|row| row[j]).collect())
            .collect();
        trows.push(self.rhs.clone());
        let mut trhs = vec![0u32; ncols];
        trhs.push(1);
        let form = Rref::compute(self.ctx.p(), m, &trows, &trhs);
        assert!(!form.inconsistent, "Fredholm alternative violated");
        let mut c = vec![0u32; m];
        for (i, &pc) in form.pivots.iter().enumerate() {
            c[pc] = form.rows[i][m];
        }
        c
    }
}

/// The span of a set of vectors over `F_p`, kept as a reduced row echelon
/// basis so that every coset of the span has one canonical representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowSpace {
    ctx: PrimeCtx,
    width: usize,
    pivots: Vec<usize>,
    basis: Vec<Vec<u32>>,
}

impl RowSpace {
    /// Vectors must have length `width` and reduced entries.
    pub fn new(ctx: PrimeCtx, width: usize, vectors: &[Vec<u32>]) -> Result<Self, RingError> {
        let p = ctx.p();
        for v in vectors {
            if v.len() != width {
                return Err(RingError::DimensionMismatch {
                    left: width,
                    right: v.len(),
                });
            }
            if let Some(&x) = v.iter().find(|&&x| x >= p) {
                return Err(RingError::EntryOutOfRange {
                    value: x as u64,
                    modulus: p,
                });
            }
        }
        let form = Rref::compute(p, width, vectors, &vec![0; vectors.len()]);
        let basis = form
            .rows
            .into_iter()
            .map(|mut r| {
                r.truncate(width);
                r
            })
            .collect();
        Ok(Self {
            ctx,
            width,
            pivots: form.pivots,
            basis,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns without a pivot, ascending. The unit vectors at these columns
    /// span the lexicographically first complement.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.width];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.width).filter(|&c| !is_pivot[c]).collect()
    }

    /// Canonical representative of `v + span`: zero in every pivot column.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.width, "vector length");
        let p = self.ctx.p();
        let mut out = v.to_vec();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            let f = out[pc];
            if f == 0 {
                continue;
            }
            for (o, &r) in out.iter_mut().zip(row) {
                *o = sub_mod(*o, mul_mod(f, r, p), p);
            }
        }
        out
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }
}

fn dot(a: &[u32], b: &[u32], p: u32) -> u32 {
    a.iter()
        .zip(b)
        .fold(0u64, |acc, (&x, &y)| (acc + x as u64 * y as u64) % p as u64) as u32
}

/// Reduced row echelon form of an augmented matrix `[A | b]`.
struct Rref {
    /// Pivot column of each of the first `rank` rows.
    pivots: Vec<usize>,
    /// The `rank` nonzero reduced rows, each of length `ncols + 1`.
    rows: Vec<Vec<u32>>,
    inconsistent: bool,
}

impl Rref {
    fn compute(p: u32, ncols: usize, rows: &[Vec<u32>], rhs: &[u32]) -> Self {
        if p == 2 {
            Self::compute_gf2(ncols, rows, rhs)
        } else {
            Self::compute_dense(p, ncols, rows, rhs)
        }
    }

    fn compute_dense(p: u32, ncols: usize, rows: &[Vec<u32>], rhs: &[u32]) -> Self {
        let mut work: Vec<Vec<u32>> = rows
            .iter()
            .zip(rhs)
            .map(|(r, &b)| {
                let mut v = r.clone();
                v.push(b);
                v
            })
            .collect();
        let mut rank = 0;
        let mut pivots = Vec::new();
        for col in 0..ncols {
            let Some(pr) = (rank..work.len()).find(|&r| work[r][col] != 0) else {
                continue;
            };
            work.swap(rank, pr);
            let inv = inv_mod(work[rank][col], p).expect("nonzero residue mod a prime");
            if inv != 1 {
                for v in work[rank][col..].iter_mut() {
                    *v = mul_mod(*v, inv, p);
                }
            }
            let (head, tail) = work.split_at_mut(rank);
            let (pivot_row, rest) = tail.split_first_mut().unwrap();
            for other in head.iter_mut().chain(rest.iter_mut()) {
                let f = other[col];
                if f == 0 {
                    continue;
                }
                for (o, &pv) in other[col..].iter_mut().zip(&pivot_row[col..]) {
                    *o = sub_mod(*o, mul_mod(f, pv, p), p);
                }
            }
            pivots.push(col);
            rank += 1;
        }
        let inconsistent = work[rank..].iter().any(|r| r[ncols] != 0);
        work.truncate(rank);
        Self {
            pivots,
            rows: work,
            inconsistent,
        }
    }

    fn compute_gf2(ncols: usize, rows: &[Vec<u32>], rhs: &[u32]) -> Self {
        let width = ncols + 1;
        let words = width.div_ceil(64);
        let mut work: Vec<Vec<u64>> = rows
            .iter()
            .zip(rhs)
            .map(|(r, &b)| {
                let mut v = vec![0u64; words];
                for (j, &a) in r.iter().enumerate() {
                    if a & 1 == 1 {
                        v[j / 64] |= 1 << (j % 64);
                    }
                }
                if b & 1 == 1 {
                    v[ncols / 64] |= 1 << (ncols % 64);
                }
                v
            })
            .collect();
        let bit = |v: &[u64], j: usize| (v[j / 64] >> (j % 64)) & 1 == 1;
        let mut rank = 0;
        let mut pivots = Vec::new();
        for col in 0..ncols {
            let Some(pr) = (rank..work.len()).find(|&r| bit(&work[r], col)) else {
                continue;
            };
            work.swap(rank, pr);
            let start = col / 64;
            let (head, tail) = work.split_at_mut(rank);
            let (pivot_row, rest) = tail.split_first_mut().unwrap();
            for other in head.iter_mut().chain(rest.iter_mut()) {
                if bit(other, col) {
                    for (o, &pv) in other[start..].iter_mut().zip(&pivot_row[start..]) {
                        *o ^= pv;
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
        let inconsistent = work[rank..].iter().any(|r| bit(r, ncols));
        let rows = work[..rank]
            .iter()
            .map(|r| (0..width).map(|j| u32::from(bit(r, j))).collect())
            .collect();
        Self {
            pivots,
            rows,
            inconsistent,
        }
    }
}

//! Exact linear algebra over the rationals: Gaussian elimination for small
//! dense systems, and a cached coordinate solver for linearly independent
//! column sets.

use num_traits::Zero;

use crate::rat::Rat;

/// Outcome of solving `A x = b` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinSolve {
    Inconsistent,
    /// `particular` sets all free variables to zero; `nullity` is the
    /// dimension of the solution space of the homogeneous system.
    Solution {
        particular: Vec<Rat>,
        nullity: usize,
    },
}

/// Solve `A x = b` by fraction-free-ish Gaussian elimination (exact pivots).
#[allow(clippy::needless_range_loop)]
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> LinSolve {
    let rows = a.len();
    assert_eq!(rows, b.len());
    let cols = if rows == 0 { 0 } else { a[0].len() };
    // Augmented matrix.
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), cols);
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r][c..].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=cols {
                    let d = &f * &m[r][j];
                    m[i][j] = &m[i][j] - &d;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }

    // Inconsistency: a zero row with nonzero rhs.
    for row in &m[r.min(m.len())..] {
        if row[..cols].iter().all(|x| x.is_zero()) && !row[cols].is_zero() {
            return LinSolve::Inconsistent;
        }
    }

    let mut particular = vec![Rat::zero(); cols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        particular[c] = m[i][cols].clone();
    }
    LinSolve::Solution {
        particular,
        nullity: cols - pivot_cols.len(),
    }
}

/// Invert a square rational matrix. Returns `None` if singular.
#[allow(clippy::needless_range_loop)]
pub fn invert(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n);
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j {
                    Rat::from_integer(1.into())
                } else {
                    Rat::zero()
                });
            }
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..2 * n {
                    let d = &f * &m[c][j];
                    m[i][j] = &m[i][j] - &d;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Cached solver for coordinates in a linearly independent set of vectors.
///
/// Given columns v_1..v_k of full column rank, `coords(w)` returns the unique
/// c with sum c_i v_i = w, or `None` when w is outside the span. Uses the
/// normal equations (exact over the rationals, so no conditioning concerns).
#[derive(Clone, Debug)]
pub struct CoordSolver {
    columns: Vec<Vec<Rat>>,
    /// (GᵀG)⁻¹Gᵀ, a k×d matrix.
    projector: Vec<Vec<Rat>>,
    dim: usize,
}

impl CoordSolver {
    /// `None` if the columns are linearly dependent.
    pub fn new(dim: usize, columns: Vec<Vec<Rat>>) -> Option<Self> {
        let k = columns.len();
        if k == 0 {
            return Some(CoordSolver {
                columns,
                projector: Vec::new(),
                dim,
            });
        }
        let d = dim;
        let gram: Vec<Vec<Rat>> = (0..k)
            .map(|i| (0..k).map(|j| dot(&columns[i], &columns[j])).collect())
            .collect();
        let gram_inv = invert(&gram)?;
        // projector = gram_inv * Gᵀ
        let projector: Vec<Vec<Rat>> = (0..k)
            .map(|i| {
                (0..d)
                    .map(|r| {
                        let mut s = Rat::zero();
                        for j in 0..k {
                            s += &gram_inv[i][j] * &columns[j][r];
                        }
                        s
                    })
                    .collect()
            })
            .collect();
        Some(CoordSolver {
            columns,
            projector,
            dim: d,
        })
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Exact coordinates of `w` in the column set, or `None` if not in span.
    pub fn coords(&self, w: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(w.len(), self.dim, "vector dimension mismatch");
        let c: Vec<Rat> = self.projector.iter().map(|row| dot(row, w)).collect();
        // Verify: the normal-equation solution only solves the system when w
        // actually lies in the span.
        for r in 0..w.len() {
            let mut s = Rat::zero();
            for (ci, col) in c.iter().zip(&self.columns) {
                s += ci * &col[r];
            }
            if s != w[r] {
                return None;
            }
        }
        Some(c)
    }
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

//! Dense matrices over `Q(t)` and truncated series matrices.

use num::{BigRational, Zero};

use super::{AlgebraError, RationalFunction};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RationalFunction>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<RationalFunction>) -> Result<Self, AlgebraError> {
        if entries.len() != rows * cols {
            return Err(AlgebraError::DimensionMismatch {
                expected: format!("{} entries", rows * cols),
                found: format!("{} entries", entries.len()),
            });
        }
        Ok(RatMatrix { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> RationalFunction) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, entries }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { RationalFunction::one() } else { RationalFunction::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalFunction {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[RationalFunction] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[RationalFunction] {
        &self.entries
    }

    pub fn transpose(&self) -> RatMatrix {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul(&self, rhs: &RatMatrix) -> Result<RatMatrix, AlgebraError> {
        if self.cols != rhs.rows {
            return Err(AlgebraError::DimensionMismatch {
                expected: format!("{} rows", self.cols),
                found: format!("{} rows", rhs.rows),
            });
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols)
                .filter(|&k| !self.get(i, k).is_zero() && !rhs.get(k, j).is_zero())
                .map(|k| self.get(i, k) * rhs.get(k, j))
                .sum()
        }))
    }

    /// Exact comparison against the Kronecker delta.
    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() }))
    }

    /// Solves `A x = b` by Gaussian elimination over `Q(t)`.
    ///
    /// Every entry is renormalized after each row operation. Pivots are chosen
    /// among nonzero candidates by smallest total degree.
    pub fn solve(&self, b: &[RationalFunction]) -> Result<Vec<RationalFunction>, AlgebraError> {
        let n = self.rows;
        if self.rows != self.cols {
            return Err(AlgebraError::DimensionMismatch {
                expected: "square matrix".into(),
                found: format!("{}x{}", self.rows, self.cols),
            });
        }
        if b.len() != n {
            return Err(AlgebraError::DimensionMismatch {
                expected: format!("right-hand side of length {n}"),
                found: format!("length {}", b.len()),
            });
        }
        let mut a: Vec<Vec<RationalFunction>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut rhs = b.to_vec();
        for col in 0..n {
            let pivot = (col..n)
                .filter(|&r| !a[r][col].is_zero())
                .min_by_key(|&r| weight(&a[r][col]))
                .ok_or(AlgebraError::Singular)?;
            a.swap(col, pivot);
            rhs.swap(col, pivot);
            let inv = a[col][col].inv()?;
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] * &inv;
                a[r][col] = RationalFunction::zero();
                for c in col + 1..n {
                    if !a[col][c].is_zero() {
                        let delta = &factor * &a[col][c];
                        a[r][c] = &a[r][c] - &delta;
                    }
                }
                if !rhs[col].is_zero() {
                    let delta = &factor * &rhs[col];
                    rhs[r] = &rhs[r] - &delta;
                }
            }
        }
        let mut x = vec![RationalFunction::zero(); n];
        for row in (0..n).rev() {
            let mut acc = rhs[row].clone();
            for c in row + 1..n {
                if !a[row][c].is_zero() && !x[c].is_zero() {
                    acc = &acc - &(&a[row][c] * &x[c]);
                }
            }
            x[row] = acc.checked_div(&a[row][row])?;
        }
        Ok(x)
    }

    /// `A x` for a column vector.
    pub fn apply(&self, x: &[RationalFunction]) -> Result<Vec<RationalFunction>, AlgebraError> {
        if x.len() != self.cols {
            return Err(AlgebraError::DimensionMismatch {
                expected: format!("vector of length {}", self.cols),
                found: format!("length {}", x.len()),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }
}

fn weight(r: &RationalFunction) -> usize {
    r.numerator().degree().unwrap_or(0) + r.denominator().degree().unwrap_or(0)
}

/// Matrix of power series truncated at `t^degree`, with a per-row validity degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesMatrix {
    rows: usize,
    cols: usize,
    degree: usize,
    entries: Vec<Vec<BigRational>>,
    per_row_degree: Vec<usize>,
}

impl SeriesMatrix {
    pub fn new(
        rows: usize,
        cols: usize,
        degree: usize,
        entries: Vec<Vec<BigRational>>,
        per_row_degree: Vec<usize>,
    ) -> Result<Self, AlgebraError> {
        if entries.len() != rows * cols || per_row_degree.len() != rows {
            return Err(AlgebraError::DimensionMismatch {
                expected: format!("{} cells and {rows} row degrees", rows * cols),
                found: format!("{} cells and {} row degrees", entries.len(), per_row_degree.len()),
            });
        }
        if let Some(bad) = entries.iter().find(|e| e.len() != degree + 1) {
            return Err(AlgebraError::DimensionMismatch {
                expected: format!("{} coefficients per cell", degree + 1),
                found: format!("{}", bad.len()),
            });
        }
        if let Some(&d) = per_row_degree.iter().find(|&&d| d > degree) {
            return Err(AlgebraError::DimensionMismatch {
                expected: format!("row degree at most {degree}"),
                found: format!("{d}"),
            });
        }
        Ok(SeriesMatrix { rows, cols, degree, entries, per_row_degree })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn get(&self, i: usize, j: usize) -> &[BigRational] {
        &self.entries[i * self.cols + j]
    }

    pub fn per_row_degree(&self) -> &[usize] {
        &self.per_row_degree
    }

    /// Exact matrix expanded to `degree`; every row is valid to full degree.
    pub fn from_rat(m: &RatMatrix, degree: usize) -> Result<Self, AlgebraError> {
        let entries = m.entries().iter().map(|r| r.series(degree)).collect::<Result<Vec<_>, _>>()?;
        Self::new(m.rows(), m.cols(), degree, entries, vec![degree; m.rows()])
    }

    /// Sum of each row's cells, as one series per row.
    pub fn row_sums(&self) -> Vec<Vec<BigRational>> {
        (0..self.rows)
            .map(|i| {
                let mut acc = vec![BigRational::zero(); self.degree + 1];
                for j in 0..self.cols {
                    for (a, c) in acc.iter_mut().zip(self.get(i, j)) {
                        *a += c;
                    }
                }
                acc
            })
            .collect()
    }
}

/// Cauchy product truncated after `t^n`.
pub fn convolve(a: &[BigRational], b: &[BigRational], n: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); n + 1];
    for (i, x) in a.iter().enumerate().take(n + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n + 1 - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// First degree at which `s` differs from the constant series `c`, within `0..=n`.
pub fn first_mismatch(s: &[BigRational], c: &BigRational, n: usize) -> Option<usize> {
    (0..=n).find(|&k| {
        let want = if k == 0 { c.clone() } else { BigRational::zero() };
        s.get(k).cloned().unwrap_or_else(BigRational::zero) != want
    })
}

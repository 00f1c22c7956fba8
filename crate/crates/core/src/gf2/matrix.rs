use super::{Gf2Error, Gf2Vector};

/// Dense row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: Vec<Gf2Vector>,
    cols: usize,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows: vec![Gf2Vector::zeros(cols); rows],
            cols,
        }
    }

    pub fn identity(size: usize) -> Self {
        Self {
            rows: (0..size).map(|i| Gf2Vector::unit(size, i)).collect(),
            cols: size,
        }
    }

    /// Builds a matrix from rows that all have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Gf2Vector>) -> Result<Self, Gf2Error> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Gf2Error::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self { rows, cols })
    }

    /// Builds a matrix from the column indices set in each row.
    pub fn from_row_supports<I, R>(cols: usize, supports: I) -> Self
    where
        I: IntoIterator<Item = R>,
        R: IntoIterator<Item = usize>,
    {
        let rows = supports.into_iter().map(|s| Gf2Vector::from_ones(cols, s)).collect();
        Self { rows, cols }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &Gf2Vector {
        &self.rows[i]
    }

    pub fn row_vectors(&self) -> &[Gf2Vector] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value)
    }

    /// Column `c` as a vector of length `rows`.
    pub fn column(&self, c: usize) -> Gf2Vector {
        assert!(c < self.cols, "column {c} out of range");
        Gf2Vector::from_ones(
            self.rows.len(),
            self.rows.iter().enumerate().filter(|(_, r)| r.get(c)).map(|(i, _)| i),
        )
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Gf2Matrix::zeros(self.cols, self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.ones() {
                t.rows[j].set(i, true);
            }
        }
        t
    }

    /// Matrix-vector product `A·x`.
    pub fn mul_vec(&self, x: &Gf2Vector) -> Result<Gf2Vector, Gf2Error> {
        if x.len() != self.cols {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok(Gf2Vector::from_ones(
            self.rows.len(),
            self.rows.iter().enumerate().filter(|(_, r)| r.dot(x)).map(|(i, _)| i),
        ))
    }

    /// Reorders rows so that row `i` moves to `row_perm[i]` and column `j` to `col_perm[j]`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Gf2Matrix {
        assert_eq!(row_perm.len(), self.rows.len(), "row permutation length mismatch");
        let mut rows = vec![Gf2Vector::zeros(self.cols); self.rows.len()];
        for (i, row) in self.rows.iter().enumerate() {
            rows[row_perm[i]] = row.permuted(col_perm);
        }
        Gf2Matrix { rows, cols: self.cols }
    }
}

impl std::fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Gf2Matrix {}x{} [", self.rows.len(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}

/// Dimension of the row space (equivalently the column space).
pub fn rank(m: &Gf2Matrix) -> usize {
    let mut rows = m.rows.clone();
    let mut rank = 0;
    for col in 0..m.cols {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            if row.get(col) {
                row.add_assign(pivot_row);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Solves `A·x = e`, returning one solution (free variables set to zero) or
/// `None` when `e` lies outside the column space.
pub fn solve(a: &Gf2Matrix, e: &Gf2Vector) -> Result<Option<Gf2Vector>, Gf2Error> {
    if e.len() != a.rows() {
        return Err(Gf2Error::DimensionMismatch {
            expected: a.rows(),
            found: e.len(),
        });
    }
    let mut rows = a.rows.clone();
    let mut rhs: Vec<bool> = e.iter().collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..a.cols {
        if r == rows.len() {
            break;
        }
        let Some(pivot) = (r..rows.len()).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(r, pivot);
        rhs.swap(r, pivot);
        let pivot_row = rows[r].clone();
        let pivot_rhs = rhs[r];
        for i in 0..rows.len() {
            if i != r && rows[i].get(col) {
                rows[i].add_assign(&pivot_row);
                rhs[i] ^= pivot_rhs;
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rhs[r..].iter().any(|&b| b) {
        return Ok(None);
    }
    let mut x = Gf2Vector::zeros(a.cols);
    for (i, &col) in pivots.iter().enumerate() {
        if rhs[i] {
            x.set(col, true);
        }
    }
    Ok(Some(x))
}

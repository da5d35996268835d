use std::fmt;
use std::ops::{Index, IndexMut};

use num::{Complex, Zero};

use crate::cmatrix::CMatrix;
use crate::error::{Error, Result};
use crate::quaternion::{Quaternion, Rational};

/// Dense row-major quaternion matrix.
///
/// `m[(i, j)]` is 0-based; operations that mirror the determinantal notation
/// (`submatrix`, `replace_row`, `replace_col`, row/column determinants) take
/// 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Quaternion>,
}

/// Strictly increasing, nonempty set of 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(indices: Vec<usize>, bound: usize) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::DimensionMismatch("empty index set".into()));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::DimensionMismatch(format!(
                "index set {indices:?} is not strictly increasing"
            )));
        }
        for &i in &indices {
            if i == 0 || i > bound {
                return Err(Error::IndexOutOfRange { index: i, bound });
            }
        }
        Ok(IndexSet(indices))
    }

    /// `{1, …, n}`.
    pub fn full(n: usize) -> Self {
        IndexSet((1..=n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based position of `i` inside the set.
    pub fn position(&self, i: usize) -> Option<usize> {
        self.0.iter().position(|&x| x == i).map(|p| p + 1)
    }
}

fn check_index(i: usize, bound: usize) -> Result<()> {
    if i == 0 || i > bound {
        Err(Error::IndexOutOfRange { index: i, bound })
    } else {
        Ok(())
    }
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Quaternion::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Quaternion::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Quaternion>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(QMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Quaternion>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        QMatrix::from_vec(m, n, rows.into_iter().flatten().collect())
    }

    /// Builds a matrix from rows of quaternion literals, e.g. `[["0", "i"], ["k", "1"]]`.
    pub fn parse_rows<S: AsRef<str>>(rows: &[Vec<S>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| s.as_ref().parse())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        QMatrix::from_rows(parsed)
    }

    pub fn diagonal(entries: &[Quaternion]) -> Self {
        let mut m = QMatrix::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Quaternion] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Quaternion::is_zero)
    }

    /// Row `i` (1-based) as a vector.
    pub fn row(&self, i: usize) -> Vec<Quaternion> {
        self.data[(i - 1) * self.cols..i * self.cols].to_vec()
    }

    /// Column `j` (1-based) as a vector.
    pub fn col(&self, j: usize) -> Vec<Quaternion> {
        (0..self.rows).map(|i| self[(i, j - 1)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Quaternion>> {
        self.data
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(<[_]>::to_vec)
            .collect()
    }

    pub fn conj_transpose(&self) -> Self {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].conj();
            }
        }
        t
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.conj_transpose()
    }

    pub fn mul(&self, o: &QMatrix) -> Result<QMatrix> {
        if self.cols != o.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut p = QMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = &self[(i, t)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let prod = a * &o[(t, j)];
                    p[(i, j)] += prod;
                }
            }
        }
        Ok(p)
    }

    /// Left-to-right product of a nonempty chain of matrices.
    pub fn chain(factors: &[&QMatrix]) -> Result<QMatrix> {
        let (first, rest) = factors
            .split_first()
            .ok_or_else(|| Error::DimensionMismatch("empty product".into()))?;
        rest.iter().try_fold((*first).clone(), |acc, f| acc.mul(f))
    }

    pub fn add(&self, o: &QMatrix) -> Result<QMatrix> {
        self.zip_with(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &QMatrix) -> Result<QMatrix> {
        self.zip_with(o, |a, b| a - b)
    }

    fn zip_with(
        &self,
        o: &QMatrix,
        f: impl Fn(&Quaternion, &Quaternion) -> Quaternion,
    ) -> Result<QMatrix> {
        if self.shape() != o.shape() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} against {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&o.data)
            .map(|(a, b)| f(a, b))
            .collect();
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Multiplies every entry by a real scalar.
    pub fn scale(&self, s: &Rational) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|q| q.scale(s)).collect(),
        }
    }

    /// Multiplies every entry on the left by `q`.
    pub fn left_scale(&self, q: &Quaternion) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| q * a).collect(),
        }
    }

    pub fn power(&self, p: usize) -> Result<QMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "power of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut acc = QMatrix::identity(self.rows);
        for _ in 0..p {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn submatrix(&self, rows: &IndexSet, cols: &IndexSet) -> Result<QMatrix> {
        if let Some(&i) = rows.as_slice().iter().find(|&&i| i > self.rows) {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: self.rows,
            });
        }
        if let Some(&j) = cols.as_slice().iter().find(|&&j| j > self.cols) {
            return Err(Error::IndexOutOfRange {
                index: j,
                bound: self.cols,
            });
        }
        Ok(self.select(rows.as_slice(), cols.as_slice()))
    }

    /// Unchecked submatrix from 1-based row and column lists.
    pub(crate) fn select(&self, rows: &[usize], cols: &[usize]) -> QMatrix {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self[(i - 1, j - 1)].clone());
            }
        }
        QMatrix {
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    pub fn replace_row(&self, i: usize, b: &[Quaternion]) -> Result<QMatrix> {
        check_index(i, self.rows)?;
        if b.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} for {} columns",
                b.len(),
                self.cols
            )));
        }
        let mut m = self.clone();
        m.data[(i - 1) * self.cols..i * self.cols].clone_from_slice(b);
        Ok(m)
    }

    pub fn replace_col(&self, j: usize, c: &[Quaternion]) -> Result<QMatrix> {
        check_index(j, self.cols)?;
        if c.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "column of length {} for {} rows",
                c.len(),
                self.rows
            )));
        }
        let mut m = self.clone();
        for (r, q) in c.iter().enumerate() {
            m[(r, j - 1)] = q.clone();
        }
        Ok(m)
    }

    /// The adjoint map `A1 + A2 j ↦ [[A1, A2], [-conj A2, conj A1]]`.
    pub fn complex_embedding(&self) -> CMatrix {
        let (m, n) = self.shape();
        let mut c = CMatrix::zeros(2 * m, 2 * n);
        for i in 0..m {
            for j in 0..n {
                let q = &self[(i, j)];
                let a1 = Complex::new(q.w.clone(), q.x.clone());
                let a2 = Complex::new(q.y.clone(), q.z.clone());
                c[(i + m, j)] = -a2.conj();
                c[(i + m, j + n)] = a1.conj();
                c[(i, j)] = a1;
                c[(i, j + n)] = a2;
            }
        }
        c
    }

    /// Inverse of [`complex_embedding`](Self::complex_embedding); fails unless `c` has the adjoint block structure.
    pub fn from_complex_embedding(c: &CMatrix) -> Result<QMatrix> {
        if !c.rows().is_multiple_of(2) || !c.cols().is_multiple_of(2) {
            return Err(Error::DimensionMismatch(
                "embedding image must have even shape".into(),
            ));
        }
        let (m, n) = (c.rows() / 2, c.cols() / 2);
        let mut q = QMatrix::zeros(m, n);
        for i in 0..m {
            for j in 0..n {
                let a1 = &c[(i, j)];
                let a2 = &c[(i, j + n)];
                if c[(i + m, j)] != -a2.conj() || c[(i + m, j + n)] != a1.conj() {
                    return Err(Error::DimensionMismatch(
                        "complex matrix is not an adjoint-embedding image".into(),
                    ));
                }
                q[(i, j)] =
                    Quaternion::new(a1.re.clone(), a1.im.clone(), a2.re.clone(), a2.im.clone());
            }
        }
        Ok(q)
    }

    /// Rank over the quaternions, half the complex rank of the embedding.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 || self.is_zero() {
            return 0;
        }
        self.complex_embedding().rank() / 2
    }

    /// Smallest `k ≥ 0` with `rank A^{k+1} = rank A^k`.
    pub fn index_of(&self) -> Result<usize> {
        let mut prev_rank = self.rows;
        let mut power = self.power(1)?;
        let mut k = 0;
        loop {
            let r = power.rank();
            if r == prev_rank {
                return Ok(k);
            }
            prev_rank = r;
            k += 1;
            power = power.mul(self)?;
        }
    }

    /// Largest entry residual, measured by the squared norm.
    pub fn max_entry(&self) -> Quaternion {
        let mut best = Quaternion::zero();
        let mut best_norm = Rational::zero();
        for q in &self.data {
            let n = q.norm_sqr();
            if n > best_norm {
                best_norm = n;
                best = q.clone();
            }
        }
        best
    }

    pub fn is_complex(&self) -> bool {
        self.data.iter().all(Quaternion::is_complex)
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Quaternion;
    fn index(&self, (i, j): (usize, usize)) -> &Quaternion {
        assert!(
            i < self.rows && j < self.cols,
            "entry ({i}, {j}) outside {}x{}",
            self.rows,
            self.cols
        );
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Quaternion {
        assert!(
            i < self.rows && j < self.cols,
            "entry ({i}, {j}) outside {}x{}",
            self.rows,
            self.cols
        );
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for QMatrix {
    /// The text matrix format: a `m n` header, then one `;`-separated line per row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for r in self.row_vectors() {
            let line: Vec<String> = r.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join("; "))?;
        }
        Ok(())
    }
}

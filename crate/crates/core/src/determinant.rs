//! Row and column determinants of quaternion matrices and the principal-minor
//! sums built from them.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use itertools::Itertools;
use num::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::quaternion::{Quaternion, Rational};

/// Evaluation knobs shared by every determinantal computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Settings {
    /// Largest square dimension a determinantal sum may be built on.
    pub max_dim: usize,
    /// Spread permutations, subsets and entries over the rayon pool.
    pub parallel: bool,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            max_dim: 7,
            parallel: false,
        }
    }
}

impl Settings {
    pub fn with_max_dim(mut self, max_dim: usize) -> Self {
        self.max_dim = max_dim;
        self
    }

    pub fn with_parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self
    }

    fn check_cap(&self, n: usize) -> Result<()> {
        if n > self.max_dim {
            Err(Error::DimensionCap {
                dim: n,
                cap: self.max_dim,
            })
        } else {
            Ok(())
        }
    }
}

/// Disjoint cycles of a permutation of `{1..n}`, listed in product order.
///
/// Each cycle `[c0, c1, …, cl]` stands for the factor chain
/// `a[c0][c1] · a[c1][c2] ⋯ a[cl][c0]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    cycles: Vec<Vec<usize>>,
}

fn raw_cycles(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut c = Vec::new();
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            c.push(x + 1);
            x = perm[x];
        }
        out.push(c);
    }
    out
}

fn rotate_to(mut c: Vec<usize>, start: usize) -> Vec<usize> {
    let p = c
        .iter()
        .position(|&x| x == start)
        .expect("start lies on the cycle");
    c.rotate_left(p);
    c
}

impl CycleDecomposition {
    /// Row-determinant ordering anchored at row `i` (1-based): the cycle through
    /// `i` first and started at `i`, then the other cycles by increasing minimum,
    /// each started at its minimum. `perm[x]` is the 0-based image of `x`.
    pub fn left_ordered(perm: &[usize], i: usize) -> Self {
        let (anchor, mut rest): (Vec<_>, Vec<_>) =
            raw_cycles(perm).into_iter().partition(|c| c.contains(&i));
        rest.sort_by_key(|c| c[0]);
        let mut cycles = vec![rotate_to(
            anchor.into_iter().next().expect("anchor cycle"),
            i,
        )];
        cycles.extend(rest);
        CycleDecomposition { cycles }
    }

    /// Column-determinant ordering anchored at column `j` (1-based): the other
    /// cycles by decreasing minimum, each started at its minimum, then the cycle
    /// through `j` rightmost, started at `j`.
    pub fn right_ordered(perm: &[usize], j: usize) -> Self {
        let (anchor, mut rest): (Vec<_>, Vec<_>) =
            raw_cycles(perm).into_iter().partition(|c| c.contains(&j));
        rest.sort_by_key(|c| std::cmp::Reverse(c[0]));
        rest.push(rotate_to(
            anchor.into_iter().next().expect("anchor cycle"),
            j,
        ));
        CycleDecomposition { cycles: rest }
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn size(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    /// `(-1)^(n - number of cycles)`.
    pub fn sign(&self) -> i32 {
        if (self.size() - self.cycles.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Entry positions (1-based) in the order they are multiplied.
    pub fn factor_chain(&self) -> Vec<(usize, usize)> {
        self.cycles
            .iter()
            .flat_map(|c| (0..c.len()).map(move |t| (c[t], c[(t + 1) % c.len()])))
            .collect()
    }
}

/// One signed product in a determinant expansion; positions are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub negative: bool,
    pub factors: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Side {
    Row,
    Column,
}

type ExpansionCache = HashMap<(usize, usize, Side), Arc<Vec<Term>>>;

fn expansion(n: usize, anchor: usize, side: Side) -> Arc<Vec<Term>> {
    static CACHE: OnceLock<Mutex<ExpansionCache>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("cache lock").get(&(n, anchor, side)) {
        return Arc::clone(t);
    }
    let terms: Vec<Term> = (0..n)
        .permutations(n)
        .map(|perm| {
            let d = match side {
                Side::Row => CycleDecomposition::left_ordered(&perm, anchor),
                Side::Column => CycleDecomposition::right_ordered(&perm, anchor),
            };
            Term {
                negative: d.sign() < 0,
                factors: d
                    .factor_chain()
                    .into_iter()
                    .map(|(a, b)| (a - 1, b - 1))
                    .collect(),
            }
        })
        .collect();
    let terms = Arc::new(terms);
    cache
        .lock()
        .expect("cache lock")
        .insert((n, anchor, side), Arc::clone(&terms));
    terms
}

/// Every signed factor chain of `rdet_i` on an `n×n` matrix, one per permutation.
pub fn row_expansion(n: usize, i: usize) -> Arc<Vec<Term>> {
    expansion(n, i, Side::Row)
}

/// Every signed factor chain of `cdet_j` on an `n×n` matrix, one per permutation.
pub fn column_expansion(n: usize, j: usize) -> Arc<Vec<Term>> {
    expansion(n, j, Side::Column)
}

fn term_value(a: &QMatrix, t: &Term) -> Option<Quaternion> {
    let mut it = t.factors.iter();
    let &(r, c) = it.next()?;
    let mut p = a[(r, c)].clone();
    for &(r, c) in it {
        if p.is_zero() {
            return None;
        }
        p = &p * &a[(r, c)];
    }
    if p.is_zero() {
        None
    } else if t.negative {
        Some(-p)
    } else {
        Some(p)
    }
}

fn evaluate(a: &QMatrix, terms: &[Term], cfg: &Settings) -> Quaternion {
    if cfg.parallel && terms.len() >= 120 {
        terms
            .par_iter()
            .filter_map(|t| term_value(a, t))
            .reduce(Quaternion::zero, |x, y| x + y)
    } else {
        terms
            .iter()
            .filter_map(|t| term_value(a, t))
            .fold(Quaternion::zero(), |mut acc, v| {
                acc += &v;
                acc
            })
    }
}

fn check_square(a: &QMatrix, anchor: usize, cfg: &Settings) -> Result<usize> {
    if !a.is_square() || a.rows() == 0 {
        return Err(Error::DimensionMismatch(format!(
            "determinant of a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    if anchor == 0 || anchor > n {
        return Err(Error::IndexOutOfRange {
            index: anchor,
            bound: n,
        });
    }
    cfg.check_cap(n)?;
    Ok(n)
}

/// The `i`-th row determinant (1-based `i`).
pub fn rdet(i: usize, a: &QMatrix, cfg: &Settings) -> Result<Quaternion> {
    let n = check_square(a, i, cfg)?;
    Ok(evaluate(a, &row_expansion(n, i), cfg))
}

/// The `j`-th column determinant (1-based `j`).
pub fn cdet(j: usize, a: &QMatrix, cfg: &Settings) -> Result<Quaternion> {
    let n = check_square(a, j, cfg)?;
    Ok(evaluate(a, &column_expansion(n, j), cfg))
}

fn require_hermitian(b: &QMatrix, what: &str) -> Result<()> {
    if b.is_hermitian() {
        Ok(())
    } else {
        Err(Error::NotHermitian(what.to_string()))
    }
}

fn real_part(q: Quaternion) -> Result<Rational> {
    if q.is_real() {
        Ok(q.w)
    } else {
        Err(Error::NonRealResult)
    }
}

/// Determinant of a Hermitian matrix: the common real value of every row and column determinant.
pub fn hdet(a: &QMatrix, cfg: &Settings) -> Result<Rational> {
    require_hermitian(a, "hdet operand")?;
    real_part(rdet(1, a, cfg)?)
}

fn check_minor_args(b: &QMatrix, r: usize, cfg: &Settings) -> Result<usize> {
    require_hermitian(b, "minor-sum operand")?;
    let n = b.rows();
    if r > n {
        return Err(Error::DimensionMismatch(format!(
            "{r}x{r} minors of a {n}x{n} matrix"
        )));
    }
    cfg.check_cap(n)?;
    Ok(n)
}

fn sum_over<T, F>(sets: Vec<Vec<usize>>, cfg: &Settings, f: F) -> Result<T>
where
    T: Zero + Send + std::ops::Add<Output = T>,
    F: Fn(&[usize]) -> Result<T> + Sync,
{
    if cfg.parallel && sets.len() > 1 {
        sets.par_iter()
            .map(|s| f(s))
            .try_reduce(T::zero, |a, b| Ok(a + b))
    } else {
        sets.iter().try_fold(T::zero(), |acc, s| Ok(acc + f(s)?))
    }
}

fn subsets(n: usize, r: usize, containing: Option<usize>) -> Vec<Vec<usize>> {
    (1..=n)
        .combinations(r)
        .filter(|s| containing.is_none_or(|j| s.contains(&j)))
        .collect()
}

/// Sum of the Hermitian determinants of all `r×r` principal submatrices of `b`.
/// Returns 0 when `r = 0`.
pub fn minor_sum(b: &QMatrix, r: usize, cfg: &Settings) -> Result<Rational> {
    let n = check_minor_args(b, r, cfg)?;
    if r == 0 {
        return Ok(Rational::zero());
    }
    let inner = Settings {
        parallel: false,
        ..cfg.clone()
    };
    sum_over(subsets(n, r, None), cfg, |s| {
        real_part(evaluate(&b.select(s, s), &row_expansion(r, 1), &inner))
    })
}

/// Sum over `r`-subsets `α ∋ j` of `rdet` at the position of `j`, taken on the
/// principal submatrix `α×α` of `b` after its `j`-th row is replaced by `row`.
pub fn rdet_minor_sum(
    b: &QMatrix,
    j: usize,
    row: &[Quaternion],
    r: usize,
    cfg: &Settings,
) -> Result<Quaternion> {
    let n = check_minor_args(b, r, cfg)?;
    let replaced = b.replace_row(j, row)?;
    if r == 0 {
        return Ok(Quaternion::zero());
    }
    let inner = Settings {
        parallel: false,
        ..cfg.clone()
    };
    sum_over(subsets(n, r, Some(j)), cfg, |s| {
        let pos = s.iter().position(|&x| x == j).expect("subset contains j") + 1;
        Ok(evaluate(
            &replaced.select(s, s),
            &row_expansion(r, pos),
            &inner,
        ))
    })
}

/// Column mirror of [`rdet_minor_sum`]: replaces column `i` by `col` and sums `cdet` at the position of `i`.
pub fn cdet_minor_sum(
    b: &QMatrix,
    i: usize,
    col: &[Quaternion],
    r: usize,
    cfg: &Settings,
) -> Result<Quaternion> {
    let n = check_minor_args(b, r, cfg)?;
    let replaced = b.replace_col(i, col)?;
    if r == 0 {
        return Ok(Quaternion::zero());
    }
    let inner = Settings {
        parallel: false,
        ..cfg.clone()
    };
    sum_over(subsets(n, r, Some(i)), cfg, |s| {
        let pos = s.iter().position(|&x| x == i).expect("subset contains i") + 1;
        Ok(evaluate(
            &replaced.select(s, s),
            &column_expansion(r, pos),
            &inner,
        ))
    })
}

fn build(
    rows: usize,
    cols: usize,
    cfg: &Settings,
    f: impl Fn(usize, usize) -> Result<Quaternion> + Sync,
) -> Result<QMatrix> {
    let cells: Vec<(usize, usize)> = (1..=rows).cartesian_product(1..=cols).collect();
    let data: Vec<Quaternion> = if cfg.parallel {
        cells
            .par_iter()
            .map(|&(i, j)| f(i, j))
            .collect::<Result<_>>()?
    } else {
        cells.iter().map(|&(i, j)| f(i, j)).collect::<Result<_>>()?
    };
    QMatrix::from_vec(rows, cols, data)
}

/// Matrix whose `(i, s)` entry is `rdet_minor_sum(h, s, row i of x, r)`.
///
/// Left-linear in `x`: `M · rdet_sums(h, x) = rdet_sums(h, M · x)`.
pub fn rdet_sums(h: &QMatrix, x: &QMatrix, r: usize, cfg: &Settings) -> Result<QMatrix> {
    check_minor_args(h, r, cfg)?;
    if x.cols() != h.rows() {
        return Err(Error::DimensionMismatch(format!(
            "replacement rows of length {} for a {}x{} matrix",
            x.cols(),
            h.rows(),
            h.rows()
        )));
    }
    let rows = x.row_vectors();
    let inner = Settings {
        parallel: false,
        ..cfg.clone()
    };
    build(x.rows(), h.rows(), cfg, |i, s| {
        rdet_minor_sum(h, s, &rows[i - 1], r, &inner)
    })
}

/// Matrix whose `(t, j)` entry is `cdet_minor_sum(h, t, column j of x, r)`.
///
/// Right-linear in `x`: `cdet_sums(h, x) · M = cdet_sums(h, x · M)`.
pub fn cdet_sums(h: &QMatrix, x: &QMatrix, r: usize, cfg: &Settings) -> Result<QMatrix> {
    check_minor_args(h, r, cfg)?;
    if x.rows() != h.rows() {
        return Err(Error::DimensionMismatch(format!(
            "replacement columns of length {} for a {}x{} matrix",
            x.rows(),
            h.rows(),
            h.rows()
        )));
    }
    let cols: Vec<_> = (1..=x.cols()).map(|j| x.col(j)).collect();
    let inner = Settings {
        parallel: false,
        ..cfg.clone()
    };
    build(h.rows(), x.cols(), cfg, |t, j| {
        cdet_minor_sum(h, t, &cols[j - 1], r, &inner)
    })
}

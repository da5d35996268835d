//! Moore-Penrose, projector, weighted Drazin and core-EP inverses from
//! determinantal sums.

use num::Zero;

use crate::determinant::{
    cdet_minor_sum, cdet_sums, minor_sum, rdet_minor_sum, rdet_sums, Settings,
};
use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::quaternion::Rational;
use crate::trace::Trace;

/// A rectangular matrix `A` (m×n) with its weight `W` (n×m) and derived data.
#[derive(Clone, Debug)]
pub struct WeightedPair {
    a: QMatrix,
    w: QMatrix,
    u: QMatrix,
    v: QMatrix,
    index_u: usize,
    index_v: usize,
    k: usize,
    rank_a: usize,
    u_k: QMatrix,
    v_k: QMatrix,
    rank_u_k: usize,
    rank_v_k: usize,
}

impl WeightedPair {
    pub fn new(a: QMatrix, w: QMatrix) -> Result<Self> {
        if w.rows() != a.cols() || w.cols() != a.rows() {
            return Err(Error::DimensionMismatch(format!(
                "weight must be {}x{} for a {}x{} matrix, got {}x{}",
                a.cols(),
                a.rows(),
                a.rows(),
                a.cols(),
                w.rows(),
                w.cols()
            )));
        }
        let u = w.mul(&a)?;
        let v = a.mul(&w)?;
        let index_u = u.index_of()?;
        let index_v = v.index_of()?;
        let k = index_u.max(index_v);
        let u_k = u.power(k)?;
        let v_k = v.power(k)?;
        Ok(WeightedPair {
            rank_a: a.rank(),
            rank_u_k: u_k.rank(),
            rank_v_k: v_k.rank(),
            a,
            w,
            u,
            v,
            index_u,
            index_v,
            k,
            u_k,
            v_k,
        })
    }

    pub fn a(&self) -> &QMatrix {
        &self.a
    }

    pub fn w(&self) -> &QMatrix {
        &self.w
    }

    /// `U = WA`, n×n.
    pub fn u(&self) -> &QMatrix {
        &self.u
    }

    /// `V = AW`, m×m.
    pub fn v(&self) -> &QMatrix {
        &self.v
    }

    pub fn index_u(&self) -> usize {
        self.index_u
    }

    pub fn index_v(&self) -> usize {
        self.index_v
    }

    /// `max(Ind U, Ind V)`.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rank_a(&self) -> usize {
        self.rank_a
    }

    pub fn u_k(&self) -> &QMatrix {
        &self.u_k
    }

    pub fn v_k(&self) -> &QMatrix {
        &self.v_k
    }

    pub fn rank_u_k(&self) -> usize {
        self.rank_u_k
    }

    pub fn rank_v_k(&self) -> usize {
        self.rank_v_k
    }

    /// `m` (rows of A).
    pub fn m(&self) -> usize {
        self.a.rows()
    }

    /// `n` (columns of A).
    pub fn n(&self) -> usize {
        self.a.cols()
    }

    pub(crate) fn record(&self, t: &mut Trace) {
        t.count("k", "max(Ind WA, Ind AW)", self.k);
        t.count("r", "rank A", self.rank_a);
    }
}

/// Which product of a weighted pair a Hermitian-case formula leans on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Product {
    /// `AW` Hermitian; column-determinant form.
    Aw,
    /// `WA` Hermitian; row-determinant form.
    Wa,
}

/// The two determinantal forms of the Moore-Penrose inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MpRoute {
    /// Column determinants over `A*A` (n×n).
    Column,
    /// Row determinants over `AA*` (m×m).
    Row,
}

pub(crate) fn divide(m: &QMatrix, d: &Rational, what: &str) -> Result<QMatrix> {
    if d.is_zero() {
        return Err(Error::ZeroDenominator(what.into()));
    }
    Ok(m.scale(&d.recip()))
}

pub(crate) fn require_hermitian(m: &QMatrix, what: &str) -> Result<()> {
    if m.is_hermitian() {
        Ok(())
    } else {
        Err(Error::NotHermitian(what.into()))
    }
}

/// Moore-Penrose inverse along the cheaper route (the smaller of `A*A` and `AA*`).
pub fn mp_inverse(a: &QMatrix, cfg: &Settings) -> Result<QMatrix> {
    mp_inverse_via(a, preferred_route(a), cfg)
}

pub fn preferred_route(a: &QMatrix) -> MpRoute {
    if a.cols() <= a.rows() {
        MpRoute::Column
    } else {
        MpRoute::Row
    }
}

pub fn mp_inverse_via(a: &QMatrix, route: MpRoute, cfg: &Settings) -> Result<QMatrix> {
    mp_inverse_traced(a, route, cfg, &mut Trace::new())
}

pub fn mp_inverse_traced(
    a: &QMatrix,
    route: MpRoute,
    cfg: &Settings,
    t: &mut Trace,
) -> Result<QMatrix> {
    let (m, n) = a.shape();
    let r = a.rank();
    t.count("r", "rank A", r);
    if r == 0 {
        return Ok(QMatrix::zeros(n, m));
    }
    let a_star = a.conj_transpose();
    match route {
        MpRoute::Column => {
            let h = a_star.mul(a)?;
            t.matrix("A*A", "A* A", &h);
            let d = minor_sum(&h, r, cfg)?;
            t.scalar("d", "sum of r x r principal minors of A*A", &d);
            divide(
                &cdet_sums(&h, &a_star, r, cfg)?,
                &d,
                "Moore-Penrose column form",
            )
        }
        MpRoute::Row => {
            let h = a.mul(&a_star)?;
            t.matrix("AA*", "A A*", &h);
            let d = minor_sum(&h, r, cfg)?;
            t.scalar("d", "sum of r x r principal minors of AA*", &d);
            divide(
                &rdet_sums(&h, &a_star, r, cfg)?,
                &d,
                "Moore-Penrose row form",
            )
        }
    }
}

/// `Q_A = A†A` from column determinants over `A*A`.
pub fn projector_q(a: &QMatrix, cfg: &Settings) -> Result<QMatrix> {
    let r = a.rank();
    let n = a.cols();
    if r == 0 {
        return Ok(QMatrix::zeros(n, n));
    }
    let h = a.conj_transpose().mul(a)?;
    let d = minor_sum(&h, r, cfg)?;
    let cols: Vec<_> = (1..=n).map(|j| h.col(j)).collect();
    let mut q = QMatrix::zeros(n, n);
    for i in 1..=n {
        for j in 1..=n {
            q[(i - 1, j - 1)] = cdet_minor_sum(&h, i, &cols[j - 1], r, cfg)?;
        }
    }
    divide(&q, &d, "projector Q")
}

/// `P_A = AA†` from row determinants over `AA*`.
pub fn projector_p(a: &QMatrix, cfg: &Settings) -> Result<QMatrix> {
    let r = a.rank();
    let m = a.rows();
    if r == 0 {
        return Ok(QMatrix::zeros(m, m));
    }
    let h = a.mul(&a.conj_transpose())?;
    let d = minor_sum(&h, r, cfg)?;
    let rows = h.row_vectors();
    let mut p = QMatrix::zeros(m, m);
    for i in 1..=m {
        for j in 1..=m {
            p[(i - 1, j - 1)] = rdet_minor_sum(&h, j, &rows[i - 1], r, cfg)?;
        }
    }
    divide(&p, &d, "projector P")
}

/// W-weighted Drazin inverse via row determinants on the `WA` side.
pub fn wdrazin_u(pair: &WeightedPair, cfg: &Settings) -> Result<QMatrix> {
    wdrazin_u_traced(pair, cfg, &mut Trace::new())
}

pub fn wdrazin_u_traced(pair: &WeightedPair, cfg: &Settings, t: &mut Trace) -> Result<QMatrix> {
    pair.record(t);
    let r1 = pair.rank_u_k();
    t.count("r1", "rank (WA)^k", r1);
    if r1 == 0 {
        return Ok(QMatrix::zeros(pair.m(), pair.n()));
    }
    let s = USide::new(pair, t)?;
    let phi = s.phi(pair, cfg, t)?;
    let phi_tilde = QMatrix::chain(&[pair.a(), &phi, &s.u_2k, &s.p_star])?;
    t.matrix("Φ̃", "A Φ U^(2k) (U^(2k+1))*", &phi_tilde);
    let num = rdet_sums(&s.h, &phi_tilde, r1, cfg)?.mul(pair.u_k())?;
    let d = s.denominator(r1, cfg, t)?;
    divide(&num, &(&d * &d), "weighted Drazin, WA side")
}

/// W-weighted Drazin inverse via column determinants on the `AW` side.
pub fn wdrazin_v(pair: &WeightedPair, cfg: &Settings) -> Result<QMatrix> {
    wdrazin_v_traced(pair, cfg, &mut Trace::new())
}

pub fn wdrazin_v_traced(pair: &WeightedPair, cfg: &Settings, t: &mut Trace) -> Result<QMatrix> {
    pair.record(t);
    let r1 = pair.rank_v_k();
    t.count("r1", "rank (AW)^k", r1);
    if r1 == 0 {
        return Ok(QMatrix::zeros(pair.m(), pair.n()));
    }
    let s = VSide::new(pair, t)?;
    let psi = s.psi(pair, cfg, t)?;
    let psi_tilde = QMatrix::chain(&[&s.p_star, &s.v_2k, &psi, pair.a()])?;
    t.matrix("Ψ̃", "(V^(2k+1))* V^(2k) Ψ A", &psi_tilde);
    let num = pair.v_k().mul(&cdet_sums(&s.h, &psi_tilde, r1, cfg)?)?;
    let d = s.denominator(r1, cfg, t)?;
    divide(&num, &(&d * &d), "weighted Drazin, AW side")
}

/// W-weighted Drazin inverse when `AW` or `WA` is Hermitian.
pub fn wdrazin_hermitian(pair: &WeightedPair, side: Product, cfg: &Settings) -> Result<QMatrix> {
    wdrazin_hermitian_traced(pair, side, cfg, &mut Trace::new())
}

pub fn wdrazin_hermitian_traced(
    pair: &WeightedPair,
    side: Product,
    cfg: &Settings,
    t: &mut Trace,
) -> Result<QMatrix> {
    pair.record(t);
    let k = pair.k();
    match side {
        Product::Aw => {
            require_hermitian(pair.v(), "AW")?;
            let r1 = pair.rank_v_k();
            t.count("r1", "rank (AW)^k", r1);
            if r1 == 0 {
                return Ok(QMatrix::zeros(pair.m(), pair.n()));
            }
            let h = pair.v().power(k + 2)?;
            t.matrix("(AW)^(k+2)", "(AW)^(k+2)", &h);
            let v_bar = pair.v_k().mul(pair.a())?;
            t.matrix("V̄", "(AW)^k A", &v_bar);
            let d = minor_sum(&h, r1, cfg)?;
            t.scalar("d", "sum of r1 x r1 principal minors of (AW)^(k+2)", &d);
            divide(
                &cdet_sums(&h, &v_bar, r1, cfg)?,
                &d,
                "weighted Drazin, Hermitian AW",
            )
        }
        Product::Wa => {
            require_hermitian(pair.u(), "WA")?;
            let r1 = pair.rank_u_k();
            t.count("r1", "rank (WA)^k", r1);
            if r1 == 0 {
                return Ok(QMatrix::zeros(pair.m(), pair.n()));
            }
            let h = pair.u().power(k + 2)?;
            t.matrix("(WA)^(k+2)", "(WA)^(k+2)", &h);
            let u_bar = pair.a().mul(pair.u_k())?;
            t.matrix("Ū", "A (WA)^k", &u_bar);
            let d = minor_sum(&h, r1, cfg)?;
            t.scalar("d", "sum of r1 x r1 principal minors of (WA)^(k+2)", &d);
            divide(
                &rdet_sums(&h, &u_bar, r1, cfg)?,
                &d,
                "weighted Drazin, Hermitian WA",
            )
        }
    }
}

/// Hermitian-case formula when available, otherwise the general formula on the smaller side.
pub fn wdrazin(pair: &WeightedPair, cfg: &Settings) -> Result<QMatrix> {
    wdrazin_traced(pair, cfg, &mut Trace::new())
}

pub fn wdrazin_traced(pair: &WeightedPair, cfg: &Settings, t: &mut Trace) -> Result<QMatrix> {
    if pair.v().is_hermitian() {
        t.text("variant", "hermitian-aw");
        wdrazin_hermitian_traced(pair, Product::Aw, cfg, t)
    } else if pair.u().is_hermitian() {
        t.text("variant", "hermitian-wa");
        wdrazin_hermitian_traced(pair, Product::Wa, cfg, t)
    } else if pair.n() <= pair.m() {
        t.text("variant", "general-u");
        wdrazin_u_traced(pair, cfg, t)
    } else {
        t.text("variant", "general-v");
        wdrazin_v_traced(pair, cfg, t)
    }
}

/// Shared `WA`-side pieces: `P = U^(2k+1)`, `H = P P*`, `Ǔ = U^k P*`.
pub(crate) struct USide {
    pub p_star: QMatrix,
    pub h: QMatrix,
    pub u_check: QMatrix,
    pub u_2k: QMatrix,
}

impl USide {
    pub fn new(pair: &WeightedPair, t: &mut Trace) -> Result<Self> {
        let k = pair.k();
        let p = pair.u().power(2 * k + 1)?;
        let p_star = p.conj_transpose();
        let h = p.mul(&p_star)?;
        let u_check = pair.u_k().mul(&p_star)?;
        t.matrix("U^k", "(WA)^k", pair.u_k());
        t.matrix("U^(2k+1)", "(WA)^(2k+1)", &p);
        t.matrix("H", "U^(2k+1) (U^(2k+1))*", &h);
        t.matrix("Ǔ", "U^k (U^(2k+1))*", &u_check);
        Ok(USide {
            u_2k: pair.u().power(2 * k)?,
            p_star,
            h,
            u_check,
        })
    }

    pub fn phi(&self, pair: &WeightedPair, cfg: &Settings, t: &mut Trace) -> Result<QMatrix> {
        let phi = rdet_sums(&self.h, &self.u_check, pair.rank_u_k(), cfg)?;
        t.matrix("Φ", "row-determinant sums of H with rows of Ǔ", &phi);
        Ok(phi)
    }

    pub fn denominator(&self, r1: usize, cfg: &Settings, t: &mut Trace) -> Result<Rational> {
        let d = minor_sum(&self.h, r1, cfg)?;
        t.scalar("dU", "sum of r1 x r1 principal minors of H", &d);
        Ok(d)
    }
}

/// Shared `AW`-side pieces: `P = V^(2k+1)`, `H = P* P`, `V̂ = P* V^k`.
pub(crate) struct VSide {
    pub p_star: QMatrix,
    pub h: QMatrix,
    pub v_hat: QMatrix,
    pub v_2k: QMatrix,
}

impl VSide {
    pub fn new(pair: &WeightedPair, t: &mut Trace) -> Result<Self> {
        let k = pair.k();
        let p = pair.v().power(2 * k + 1)?;
        let p_star = p.conj_transpose();
        let h = p_star.mul(&p)?;
        let v_hat = p_star.mul(pair.v_k())?;
        t.matrix("V^k", "(AW)^k", pair.v_k());
        t.matrix("V^(2k+1)", "(AW)^(2k+1)", &p);
        t.matrix("H", "(V^(2k+1))* V^(2k+1)", &h);
        t.matrix("V̂", "(V^(2k+1))* V^k", &v_hat);
        Ok(VSide {
            v_2k: pair.v().power(2 * k)?,
            p_star,
            h,
            v_hat,
        })
    }

    pub fn psi(&self, pair: &WeightedPair, cfg: &Settings, t: &mut Trace) -> Result<QMatrix> {
        let psi = cdet_sums(&self.h, &self.v_hat, pair.rank_v_k(), cfg)?;
        t.matrix("Ψ", "column-determinant sums of H with columns of V̂", &psi);
        Ok(psi)
    }

    pub fn denominator(&self, r1: usize, cfg: &Settings, t: &mut Trace) -> Result<Rational> {
        let d = minor_sum(&self.h, r1, cfg)?;
        t.scalar("dV", "sum of r1 x r1 principal minors of H", &d);
        Ok(d)
    }
}

fn core_ep_setup(a: &QMatrix, k: usize, t: &mut Trace) -> Result<(QMatrix, QMatrix, usize)> {
    let a_k = a.power(k)?;
    let s = a_k.rank();
    t.count("k", "Ind A", k);
    t.count("s", "rank A^k", s);
    Ok((a_k, a.power(k + 1)?, s))
}

/// Right core-EP inverse.
pub fn core_ep_right(a: &QMatrix, cfg: &Settings) -> Result<QMatrix> {
    core_ep_right_traced(a, cfg, &mut Trace::new())
}

pub fn core_ep_right_traced(a: &QMatrix, cfg: &Settings, t: &mut Trace) -> Result<QMatrix> {
    let k = a.index_of()?;
    right_with_exponent(a, k, cfg, t)
}

fn right_with_exponent(a: &QMatrix, k: usize, cfg: &Settings, t: &mut Trace) -> Result<QMatrix> {
    let (a_k, p, s) = core_ep_setup(a, k, t)?;
    if s == 0 {
        return Ok(QMatrix::zeros(a.rows(), a.rows()));
    }
    let p_star = p.conj_transpose();
    let h = p.mul(&p_star)?;
    let a_hat = a_k.mul(&p_star)?;
    t.matrix("H", "A^(k+1) (A^(k+1))*", &h);
    t.matrix("Â", "A^k (A^(k+1))*", &a_hat);
    let d = minor_sum(&h, s, cfg)?;
    t.scalar("d", "sum of s x s principal minors of H", &d);
    divide(&rdet_sums(&h, &a_hat, s, cfg)?, &d, "right core-EP")
}

/// Left core-EP inverse.
pub fn core_ep_left(a: &QMatrix, cfg: &Settings) -> Result<QMatrix> {
    core_ep_left_traced(a, cfg, &mut Trace::new())
}

pub fn core_ep_left_traced(a: &QMatrix, cfg: &Settings, t: &mut Trace) -> Result<QMatrix> {
    let k = a.index_of()?;
    left_with_exponent(a, k, cfg, t)
}

fn left_with_exponent(a: &QMatrix, k: usize, cfg: &Settings, t: &mut Trace) -> Result<QMatrix> {
    let (a_k, p, s) = core_ep_setup(a, k, t)?;
    if s == 0 {
        return Ok(QMatrix::zeros(a.rows(), a.rows()));
    }
    let p_star = p.conj_transpose();
    let h = p_star.mul(&p)?;
    let a_check = p_star.mul(&a_k)?;
    t.matrix("H", "(A^(k+1))* A^(k+1)", &h);
    t.matrix("Ǎ", "(A^(k+1))* A^k", &a_check);
    let d = minor_sum(&h, s, cfg)?;
    t.scalar("d", "sum of s x s principal minors of H", &d);
    divide(&cdet_sums(&h, &a_check, s, cfg)?, &d, "left core-EP")
}

fn require_core_index(a: &QMatrix) -> Result<()> {
    let ind = a.index_of()?;
    if ind > 1 {
        return Err(Error::IndexMismatch {
            expected: 1,
            found: ind,
        });
    }
    Ok(())
}

/// Right core inverse; `A` must have index at most 1.
pub fn core_right(a: &QMatrix, cfg: &Settings) -> Result<QMatrix> {
    require_core_index(a)?;
    right_with_exponent(a, 1, cfg, &mut Trace::new())
}

/// Left core inverse; `A` must have index at most 1.
pub fn core_left(a: &QMatrix, cfg: &Settings) -> Result<QMatrix> {
    require_core_index(a)?;
    left_with_exponent(a, 1, cfg, &mut Trace::new())
}

//! W-weighted core-EP, WDMP, WMPD and WCMP inverses from determinantal sums.

use std::fmt;
use std::str::FromStr;

use crate::determinant::{cdet_sums, minor_sum, rdet_sums, Settings};
use crate::error::{Error, Result};
use crate::inverses::{divide, require_hermitian, USide, VSide, WeightedPair};
use crate::matrix::QMatrix;
use crate::quaternion::Rational;
use crate::trace::Trace;

/// Which determinantal representation to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Variant {
    /// Hermitian form when its product is Hermitian, else the general form on the smaller side.
    #[default]
    Auto,
    /// General form on the smaller side (or the only general side an inverse has).
    General,
    /// General form built on `U = WA`.
    GeneralU,
    /// General form built on `V = AW`.
    GeneralV,
    /// Requires `WA` Hermitian.
    HermitianWa,
    /// Requires `AW` Hermitian.
    HermitianAw,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Auto => "auto",
            Variant::General => "general",
            Variant::GeneralU => "general-u",
            Variant::GeneralV => "general-v",
            Variant::HermitianWa => "hermitian-wa",
            Variant::HermitianAw => "hermitian-aw",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => Variant::Auto,
            "general" => Variant::General,
            "general-u" => Variant::GeneralU,
            "general-v" => Variant::GeneralV,
            "hermitian-wa" => Variant::HermitianWa,
            "hermitian-aw" => Variant::HermitianAw,
            _ => return Err(Error::Parse(format!("unknown variant `{s}`"))),
        })
    }
}

fn unsupported(operation: &str, v: Variant) -> Error {
    Error::UnsupportedVariant {
        operation: operation.into(),
        variant: v.name().into(),
    }
}

fn cheaper_general(pair: &WeightedPair) -> Variant {
    if pair.n() <= pair.m() {
        Variant::GeneralU
    } else {
        Variant::GeneralV
    }
}

/// Right W-weighted core-EP inverse, m×n.
pub fn wcep_right(pair: &WeightedPair, cfg: &Settings) -> Result<QMatrix> {
    wcep_right_traced(pair, cfg, &mut Trace::new())
}

pub fn wcep_right_traced(pair: &WeightedPair, cfg: &Settings, t: &mut Trace) -> Result<QMatrix> {
    pair.record(t);
    let s = pair.rank_u_k();
    t.count("s", "rank (WA)^k", s);
    if s == 0 {
        return Ok(QMatrix::zeros(pair.m(), pair.n()));
    }
    let p = pair.u().power(pair.k() + 1)?;
    let p_star = p.conj_transpose();
    let h = p.mul(&p_star)?;
    t.matrix("H", "U^(k+1) (U^(k+1))*", &h);
    let u_tilde = QMatrix::chain(&[pair.a(), pair.u_k(), &p_star])?;
    t.matrix("Ũ", "A U^k (U^(k+1))*", &u_tilde);
    let phi = rdet_sums(&h, &u_tilde, s, cfg)?;
    t.matrix("Φ", "row-determinant sums of H with rows of Ũ", &phi);
    let phi_tilde = QMatrix::chain(&[&phi, pair.u_k(), &p_star])?;
    t.matrix("Φ̃", "Φ U^k (U^(k+1))*", &phi_tilde);
    let d = minor_sum(&h, s, cfg)?;
    t.scalar("d", "sum of s x s principal minors of H", &d);
    divide(
        &rdet_sums(&h, &phi_tilde, s, cfg)?,
        &(&d * &d),
        "right weighted core-EP",
    )
}

/// Left W-weighted core-EP inverse, m×n.
pub fn wcep_left(pair: &WeightedPair, cfg: &Settings) -> Result<QMatrix> {
    wcep_left_traced(pair, cfg, &mut Trace::new())
}

pub fn wcep_left_traced(pair: &WeightedPair, cfg: &Settings, t: &mut Trace) -> Result<QMatrix> {
    pair.record(t);
    let s = pair.rank_v_k();
    t.count("s", "rank (AW)^k", s);
    if s == 0 {
        return Ok(QMatrix::zeros(pair.m(), pair.n()));
    }
    let p = pair.v().power(pair.k() + 1)?;
    let p_star = p.conj_transpose();
    let h = p_star.mul(&p)?;
    t.matrix("H", "(V^(k+1))* V^(k+1)", &h);
    let v_tilde = QMatrix::chain(&[&p_star, pair.v_k(), pair.a()])?;
    t.matrix("Ṽ", "(V^(k+1))* V^k A", &v_tilde);
    let psi = cdet_sums(&h, &v_tilde, s, cfg)?;
    t.matrix("Ψ", "column-determinant sums of H with columns of Ṽ", &psi);
    let psi_tilde = QMatrix::chain(&[&p_star, pair.v_k(), &psi])?;
    t.matrix("Ψ̃", "(V^(k+1))* V^k Ψ", &psi_tilde);
    let d = minor_sum(&h, s, cfg)?;
    t.scalar("d", "sum of s x s principal minors of H", &d);
    divide(
        &cdet_sums(&h, &psi_tilde, s, cfg)?,
        &(&d * &d),
        "left weighted core-EP",
    )
}

/// Products of `A` with its conjugate transpose and their `rank A` minor sums.
struct Gram {
    a_star: QMatrix,
    a_a_star: QMatrix,
    a_star_a: QMatrix,
}

impl Gram {
    fn new(pair: &WeightedPair) -> Result<Self> {
        let a_star = pair.a().conj_transpose();
        Ok(Gram {
            a_a_star: pair.a().mul(&a_star)?,
            a_star_a: a_star.mul(pair.a())?,
            a_star,
        })
    }

    fn d_row(&self, r: usize, cfg: &Settings, t: &mut Trace) -> Result<Rational> {
        let d = minor_sum(&self.a_a_star, r, cfg)?;
        t.scalar("dA", "sum of r x r principal minors of AA*", &d);
        Ok(d)
    }

    fn d_col(&self, r: usize, cfg: &Settings, t: &mut Trace) -> Result<Rational> {
        let d = minor_sum(&self.a_star_a, r, cfg)?;
        t.scalar("dA*", "sum of r x r principal minors of A*A", &d);
        Ok(d)
    }
}

fn degenerate(pair: &WeightedPair, r1: usize, t: &mut Trace) -> Option<QMatrix> {
    t.count("r1", "rank of the k-th power on the chosen side", r1);
    (pair.rank_a() == 0 || r1 == 0).then(|| QMatrix::zeros(pair.n(), pair.m()))
}

/// W-weighted DMP inverse `W A_{d,W} W A A†`, n×m.
pub fn wdmp(pair: &WeightedPair, variant: Variant, cfg: &Settings) -> Result<QMatrix> {
    wdmp_traced(pair, variant, cfg, &mut Trace::new())
}

pub fn wdmp_traced(
    pair: &WeightedPair,
    variant: Variant,
    cfg: &Settings,
    t: &mut Trace,
) -> Result<QMatrix> {
    let chosen = match variant {
        Variant::Auto if pair.u().is_hermitian() => Variant::HermitianWa,
        Variant::Auto | Variant::General | Variant::GeneralU => Variant::GeneralU,
        Variant::HermitianWa => Variant::HermitianWa,
        v => return Err(unsupported("wdmp", v)),
    };
    if chosen == Variant::HermitianWa {
        require_hermitian(pair.u(), "WA")?;
    }
    t.text("variant", chosen.name());
    pair.record(t);
    let (r, r1, k) = (pair.rank_a(), pair.rank_u_k(), pair.k());
    if let Some(z) = degenerate(pair, r1, t) {
        return Ok(z);
    }
    let g = Gram::new(pair)?;
    let (omega, d_u) = if chosen == Variant::GeneralU {
        let s = USide::new(pair, t)?;
        let phi = s.phi(pair, cfg, t)?;
        let phi_hat = QMatrix::chain(&[pair.u(), &phi, &s.u_2k, &s.p_star])?;
        t.matrix("Φ̂", "WA Φ U^(2k) (U^(2k+1))*", &phi_hat);
        let omega = rdet_sums(&s.h, &phi_hat, r1, cfg)?;
        t.matrix("Ω", "row-determinant sums of H with rows of Φ̂", &omega);
        let d = s.denominator(r1, cfg, t)?;
        (omega, &d * &d)
    } else {
        let h = pair.u().power(k + 2)?;
        t.matrix("(WA)^(k+2)", "(WA)^(k+2)", &h);
        let u_hat = pair.u().power(k + 1)?;
        t.matrix("Û", "(WA)^(k+1)", &u_hat);
        let omega = rdet_sums(&h, &u_hat, r1, cfg)?;
        t.matrix(
            "Ω",
            "row-determinant sums of (WA)^(k+2) with rows of Û",
            &omega,
        );
        let d = minor_sum(&h, r1, cfg)?;
        t.scalar("dU", "sum of r1 x r1 principal minors of (WA)^(k+2)", &d);
        (omega, d)
    };
    let omega_tilde = if chosen == Variant::GeneralU {
        let o = QMatrix::chain(&[&omega, &pair.u().power(k + 1)?, &g.a_star])?;
        t.matrix("Ω̃", "Ω (WA)^(k+1) A*", &o);
        o
    } else {
        let o = QMatrix::chain(&[&omega, pair.u(), &g.a_star])?;
        t.matrix("Ω̃", "Ω WA A*", &o);
        o
    };
    let d_a = g.d_row(r, cfg, t)?;
    divide(
        &rdet_sums(&g.a_a_star, &omega_tilde, r, cfg)?,
        &(&d_a * &d_u),
        "WDMP",
    )
}

/// W-weighted MPD inverse `A† A W A_{d,W} W`, n×m.
pub fn wmpd(pair: &WeightedPair, variant: Variant, cfg: &Settings) -> Result<QMatrix> {
    wmpd_traced(pair, variant, cfg, &mut Trace::new())
}

pub fn wmpd_traced(
    pair: &WeightedPair,
    variant: Variant,
    cfg: &Settings,
    t: &mut Trace,
) -> Result<QMatrix> {
    let chosen = match variant {
        Variant::Auto if pair.v().is_hermitian() => Variant::HermitianAw,
        Variant::Auto | Variant::General | Variant::GeneralV => Variant::GeneralV,
        Variant::HermitianAw => Variant::HermitianAw,
        v => return Err(unsupported("wmpd", v)),
    };
    if chosen == Variant::HermitianAw {
        require_hermitian(pair.v(), "AW")?;
    }
    t.text("variant", chosen.name());
    pair.record(t);
    let (r, r1, k) = (pair.rank_a(), pair.rank_v_k(), pair.k());
    if let Some(z) = degenerate(pair, r1, t) {
        return Ok(z);
    }
    let g = Gram::new(pair)?;
    let (upsilon, d_v) = if chosen == Variant::GeneralV {
        let s = VSide::new(pair, t)?;
        let psi = s.psi(pair, cfg, t)?;
        let psi_hat = QMatrix::chain(&[&s.p_star, &s.v_2k, &psi, pair.v()])?;
        t.matrix("Ψ̂", "(V^(2k+1))* V^(2k) Ψ AW", &psi_hat);
        let upsilon = cdet_sums(&s.h, &psi_hat, r1, cfg)?;
        t.matrix(
            "Υ",
            "column-determinant sums of H with columns of Ψ̂",
            &upsilon,
        );
        let d = s.denominator(r1, cfg, t)?;
        (upsilon, &d * &d)
    } else {
        let h = pair.v().power(k + 2)?;
        t.matrix("(AW)^(k+2)", "(AW)^(k+2)", &h);
        let v_tilde = pair.v().power(k + 1)?;
        t.matrix("Ṽ", "(AW)^(k+1)", &v_tilde);
        let upsilon = cdet_sums(&h, &v_tilde, r1, cfg)?;
        t.matrix(
            "Υ",
            "column-determinant sums of (AW)^(k+2) with columns of Ṽ",
            &upsilon,
        );
        let d = minor_sum(&h, r1, cfg)?;
        t.scalar("dV", "sum of r1 x r1 principal minors of (AW)^(k+2)", &d);
        (upsilon, d)
    };
    let upsilon_tilde = if chosen == Variant::GeneralV {
        let u = QMatrix::chain(&[&g.a_star, &pair.v().power(k + 1)?, &upsilon])?;
        t.matrix("Υ̃", "A* (AW)^(k+1) Υ", &u);
        u
    } else {
        let u = QMatrix::chain(&[&g.a_star, pair.v(), &upsilon])?;
        t.matrix("Υ̃", "A* AW Υ", &u);
        u
    };
    let d_a = g.d_col(r, cfg, t)?;
    divide(
        &cdet_sums(&g.a_star_a, &upsilon_tilde, r, cfg)?,
        &(&d_a * &d_v),
        "WMPD",
    )
}

/// Weighted CMP inverse `A† A W A_{d,W} W A A†`, n×m.
pub fn wcmp(pair: &WeightedPair, variant: Variant, cfg: &Settings) -> Result<QMatrix> {
    wcmp_traced(pair, variant, cfg, &mut Trace::new())
}

pub fn wcmp_traced(
    pair: &WeightedPair,
    variant: Variant,
    cfg: &Settings,
    t: &mut Trace,
) -> Result<QMatrix> {
    let chosen = match variant {
        Variant::Auto if pair.u().is_hermitian() => Variant::HermitianWa,
        Variant::Auto if pair.v().is_hermitian() => Variant::HermitianAw,
        Variant::Auto | Variant::General => cheaper_general(pair),
        v => v,
    };
    match chosen {
        Variant::HermitianWa => require_hermitian(pair.u(), "WA")?,
        Variant::HermitianAw => require_hermitian(pair.v(), "AW")?,
        _ => {}
    }
    t.text("variant", chosen.name());
    pair.record(t);
    let (r, k) = (pair.rank_a(), pair.k());
    let r1 = match chosen {
        Variant::GeneralU | Variant::HermitianWa => pair.rank_u_k(),
        _ => pair.rank_v_k(),
    };
    if let Some(z) = degenerate(pair, r1, t) {
        return Ok(z);
    }
    let g = Gram::new(pair)?;
    let a_w = QMatrix::chain(&[&g.a_star_a, pair.w()])?;
    let w_aa = QMatrix::chain(&[pair.w(), &g.a_a_star])?;
    match chosen {
        Variant::GeneralU => {
            let s = USide::new(pair, t)?;
            let phi = s.phi(pair, cfg, t)?;
            let phi_tilde = QMatrix::chain(&[pair.a(), &phi, &s.u_2k, &s.p_star])?;
            t.matrix("Φ̃", "A Φ U^(2k) (U^(2k+1))*", &phi_tilde);
            let phi_hat = rdet_sums(&s.h, &phi_tilde, r1, cfg)?;
            t.matrix("Φ̂", "row-determinant sums of H with rows of Φ̃", &phi_hat);
            let phi1 = a_w.mul(&phi_hat)?;
            t.matrix("Φ₁", "A*A W Φ̂", &phi1);
            let omega = cdet_sums(&g.a_star_a, &phi1, r, cfg)?;
            t.matrix(
                "Ω",
                "column-determinant sums of A*A with columns of Φ₁",
                &omega,
            );
            let omega_tilde = QMatrix::chain(&[&omega, &pair.u().power(k + 1)?, &g.a_star])?;
            t.matrix("Ω̃", "Ω (WA)^(k+1) A*", &omega_tilde);
            let d_u = s.denominator(r1, cfg, t)?;
            let d_a = g.d_col(r, cfg, t)?;
            let den = &d_a * &d_a * &d_u * &d_u;
            divide(
                &rdet_sums(&g.a_a_star, &omega_tilde, r, cfg)?,
                &den,
                "WCMP, WA side",
            )
        }
        Variant::GeneralV => {
            let s = VSide::new(pair, t)?;
            let psi = s.psi(pair, cfg, t)?;
            let psi_tilde = QMatrix::chain(&[&s.p_star, &s.v_2k, &psi, pair.a()])?;
            t.matrix("Ψ̃", "(V^(2k+1))* V^(2k) Ψ A", &psi_tilde);
            let psi_hat = cdet_sums(&s.h, &psi_tilde, r1, cfg)?;
            t.matrix(
                "Ψ̂",
                "column-determinant sums of H with columns of Ψ̃",
                &psi_hat,
            );
            let psi1 = psi_hat.mul(&w_aa)?;
            t.matrix("Ψ₁", "Ψ̂ W AA*", &psi1);
            let upsilon = rdet_sums(&g.a_a_star, &psi1, r, cfg)?;
            t.matrix("Υ", "row-determinant sums of AA* with rows of Ψ₁", &upsilon);
            let upsilon_tilde = QMatrix::chain(&[&g.a_star, &pair.v().power(k + 1)?, &upsilon])?;
            t.matrix("Υ̃", "A* (AW)^(k+1) Υ", &upsilon_tilde);
            let d_v = s.denominator(r1, cfg, t)?;
            let d_a = g.d_row(r, cfg, t)?;
            let den = &d_a * &d_a * &d_v * &d_v;
            divide(
                &cdet_sums(&g.a_star_a, &upsilon_tilde, r, cfg)?,
                &den,
                "WCMP, AW side",
            )
        }
        Variant::HermitianWa => {
            let h = pair.u().power(k + 2)?;
            t.matrix("(WA)^(k+2)", "(WA)^(k+2)", &h);
            let phi = cdet_sums(&g.a_star_a, &a_w, r, cfg)?;
            t.matrix(
                "Φ",
                "column-determinant sums of A*A with columns of A*AW",
                &phi,
            );
            let phi1 = QMatrix::chain(&[&phi, pair.a(), pair.u_k()])?;
            t.matrix("Φ₁", "Φ A (WA)^k", &phi1);
            let omega = rdet_sums(&h, &phi1, r1, cfg)?;
            t.matrix(
                "Ω",
                "row-determinant sums of (WA)^(k+2) with rows of Φ₁",
                &omega,
            );
            let omega_tilde = omega.mul(&w_aa)?;
            t.matrix("Ω̃", "Ω W AA*", &omega_tilde);
            let d_u = minor_sum(&h, r1, cfg)?;
            t.scalar("dU", "sum of r1 x r1 principal minors of (WA)^(k+2)", &d_u);
            let d_a = g.d_col(r, cfg, t)?;
            let den = &d_a * &d_a * &d_u;
            divide(
                &rdet_sums(&g.a_a_star, &omega_tilde, r, cfg)?,
                &den,
                "WCMP, Hermitian WA",
            )
        }
        Variant::HermitianAw => {
            let h = pair.v().power(k + 2)?;
            t.matrix("(AW)^(k+2)", "(AW)^(k+2)", &h);
            let psi = rdet_sums(&g.a_a_star, &w_aa, r, cfg)?;
            t.matrix("Ψ", "row-determinant sums of AA* with rows of W AA*", &psi);
            let psi1 = QMatrix::chain(&[pair.v_k(), pair.a(), &psi])?;
            t.matrix("Ψ₁", "(AW)^k A Ψ", &psi1);
            let upsilon = cdet_sums(&h, &psi1, r1, cfg)?;
            t.matrix(
                "Υ",
                "column-determinant sums of (AW)^(k+2) with columns of Ψ₁",
                &upsilon,
            );
            let upsilon_tilde = a_w.mul(&upsilon)?;
            t.matrix("Υ̃", "A*A W Υ", &upsilon_tilde);
            let d_v = minor_sum(&h, r1, cfg)?;
            t.scalar("dV", "sum of r1 x r1 principal minors of (AW)^(k+2)", &d_v);
            let d_a = g.d_row(r, cfg, t)?;
            let den = &d_a * &d_a * &d_v;
            divide(
                &cdet_sums(&g.a_star_a, &upsilon_tilde, r, cfg)?,
                &den,
                "WCMP, Hermitian AW",
            )
        }
        Variant::Auto | Variant::General => unreachable!("resolved above"),
    }
}

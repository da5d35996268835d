//! Ground truth computed without any row or column determinant: Moore-Penrose
//! inverses through full-rank factorization of the complex adjoint embedding,
//! and every other inverse composed from it.

use std::fmt;
use std::str::FromStr;

use crate::cmatrix::{CMatrix, CRational};
use crate::error::{Error, Result};
use crate::inverses::WeightedPair;
use crate::matrix::QMatrix;
use crate::quaternion::{Quaternion, Rational};
use num::Zero;

pub fn c_rank(m: &CMatrix) -> usize {
    m.rank()
}

pub fn c_rref(m: &CMatrix) -> CMatrix {
    m.rref()
}

/// Moore-Penrose inverse of a complex matrix: with `M = F G` a full-rank
/// factorization, `M† = G* (F* M G*)⁻¹ F*`.
pub fn c_mp(m: &CMatrix) -> Result<CMatrix> {
    let (red, pivots) = m.rref_with_pivots();
    if pivots.is_empty() {
        return Ok(CMatrix::zeros(m.cols(), m.rows()));
    }
    let g = red.select_rows(&(0..pivots.len()).collect::<Vec<_>>());
    let f = m.select_cols(&pivots);
    let (g_star, f_star) = (g.conj_transpose(), f.conj_transpose());
    let core = f_star.mul(m)?.mul(&g_star)?.inverse()?;
    g_star.mul(&core)?.mul(&f_star)
}

pub fn c_power(m: &CMatrix, p: usize) -> Result<CMatrix> {
    (0..p).try_fold(CMatrix::identity(m.rows()), |acc, _| acc.mul(m))
}

pub fn c_index(m: &CMatrix) -> Result<usize> {
    let mut prev = m.rows();
    let mut k = 0;
    let mut pw = m.clone();
    loop {
        let r = pw.rank();
        if r == prev {
            return Ok(k);
        }
        prev = r;
        k += 1;
        pw = pw.mul(m)?;
    }
}

/// Drazin inverse of a complex matrix as `M^l (M^(2l+1))† M^l`, `l = Ind M`.
pub fn c_drazin(m: &CMatrix) -> Result<CMatrix> {
    let l = c_index(m)?;
    let m_l = c_power(m, l)?;
    m_l.mul(&c_mp(&c_power(m, 2 * l + 1)?)?)?.mul(&m_l)
}

/// The matrix itself viewed over the complex numbers; `None` when a `j` or `k` part is nonzero.
pub fn to_complex(a: &QMatrix) -> Option<CMatrix> {
    if !a.is_complex() {
        return None;
    }
    let mut c = CMatrix::zeros(a.rows(), a.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let q = &a[(i, j)];
            c[(i, j)] = CRational::new(q.w.clone(), q.x.clone());
        }
    }
    Some(c)
}

pub fn from_complex(c: &CMatrix) -> QMatrix {
    let mut q = QMatrix::zeros(c.rows(), c.cols());
    for i in 0..c.rows() {
        for j in 0..c.cols() {
            let z = &c[(i, j)];
            q[(i, j)] = Quaternion::new(
                z.re.clone(),
                z.im.clone(),
                Rational::zero(),
                Rational::zero(),
            );
        }
    }
    q
}

fn failure(what: &str, v: &VerificationVerdict) -> Error {
    let broken: Vec<&str> = v
        .checks
        .iter()
        .filter(|c| !c.holds)
        .map(|c| c.label.as_str())
        .collect();
    Error::InternalOracleFailure(format!("{what}: {}", broken.join(", ")))
}

fn self_checked(what: &str, v: VerificationVerdict, x: QMatrix) -> Result<QMatrix> {
    if v.all_hold() {
        Ok(x)
    } else {
        Err(failure(what, &v))
    }
}

/// Moore-Penrose inverse through the complex embedding, checked against the Penrose equations.
pub fn mp_oracle(a: &QMatrix) -> Result<QMatrix> {
    let chi = a.complex_embedding();
    let x = QMatrix::from_complex_embedding(&c_mp(&chi)?)
        .map_err(|e| Error::InternalOracleFailure(format!("embedding preimage: {e}")))?;
    self_checked("Moore-Penrose oracle", penrose(a, &x)?, x)
}

/// Drazin inverse `A^l (A^(2l+1))† A^l`, checked against its defining equations.
pub fn drazin_oracle(a: &QMatrix) -> Result<QMatrix> {
    let l = a.index_of()?;
    let a_l = a.power(l)?;
    let x = QMatrix::chain(&[&a_l, &mp_oracle(&a.power(2 * l + 1)?)?, &a_l])?;
    self_checked("Drazin oracle", drazin_system(a, &x)?, x)
}

/// `A ((WA)^D)²`, required to coincide with `((AW)^D)² A`.
pub fn wdrazin_oracle(pair: &WeightedPair) -> Result<QMatrix> {
    let du = drazin_oracle(pair.u())?;
    let dv = drazin_oracle(pair.v())?;
    let left = QMatrix::chain(&[pair.a(), &du, &du])?;
    let right = QMatrix::chain(&[&dv, &dv, pair.a()])?;
    if left != right {
        return Err(Error::InternalOracleFailure(
            "A((WA)^D)^2 differs from ((AW)^D)^2 A".into(),
        ));
    }
    Ok(left)
}

/// Right core-EP inverse as `A^D A^l (A^l)†`.
pub fn core_ep_right_oracle(a: &QMatrix) -> Result<QMatrix> {
    let l = a.index_of()?;
    let a_l = a.power(l)?;
    QMatrix::chain(&[&drazin_oracle(a)?, &a_l, &mp_oracle(&a_l)?])
}

/// Left core-EP inverse as `(A^l)† A^l A^D`.
pub fn core_ep_left_oracle(a: &QMatrix) -> Result<QMatrix> {
    let l = a.index_of()?;
    let a_l = a.power(l)?;
    QMatrix::chain(&[&mp_oracle(&a_l)?, &a_l, &drazin_oracle(a)?])
}

/// `A [(WA)_⊕]²` with the right core-EP inverse.
pub fn compose_wcep_right(pair: &WeightedPair) -> Result<QMatrix> {
    let c = core_ep_right_oracle(pair.u())?;
    QMatrix::chain(&[pair.a(), &c, &c])
}

/// `[(AW)_⊕]² A` with the left core-EP inverse.
pub fn compose_wcep_left(pair: &WeightedPair) -> Result<QMatrix> {
    let c = core_ep_left_oracle(pair.v())?;
    QMatrix::chain(&[&c, &c, pair.a()])
}

/// `W A_{d,W} W A A†`.
pub fn compose_wdmp(pair: &WeightedPair) -> Result<QMatrix> {
    let ad = wdrazin_oracle(pair)?;
    let mp = mp_oracle(pair.a())?;
    QMatrix::chain(&[pair.w(), &ad, pair.w(), pair.a(), &mp])
}

/// `A† A W A_{d,W} W`.
pub fn compose_wmpd(pair: &WeightedPair) -> Result<QMatrix> {
    let ad = wdrazin_oracle(pair)?;
    let mp = mp_oracle(pair.a())?;
    QMatrix::chain(&[&mp, pair.a(), pair.w(), &ad, pair.w()])
}

/// `A† A W A_{d,W} W A A†`.
pub fn compose_wcmp(pair: &WeightedPair) -> Result<QMatrix> {
    let ad = wdrazin_oracle(pair)?;
    let mp = mp_oracle(pair.a())?;
    QMatrix::chain(&[&mp, pair.a(), pair.w(), &ad, pair.w(), pair.a(), &mp])
}

/// One equation of a characterizing system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub holds: bool,
    /// Entry of `lhs - rhs` with the largest norm; zero exactly when the equation holds.
    pub residual: Quaternion,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationVerdict {
    pub system: String,
    pub checks: Vec<Check>,
}

impl VerificationVerdict {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

impl fmt::Display for VerificationVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "system = {}", self.system)?;
        for c in &self.checks {
            let tag = if c.holds { "holds" } else { "FAILS" };
            writeln!(f, "{tag}: {} (max residual {})", c.label, c.residual)?;
        }
        Ok(())
    }
}

struct Builder {
    system: String,
    checks: Vec<Check>,
}

impl Builder {
    fn new(system: System) -> Self {
        Builder {
            system: system.name().into(),
            checks: Vec::new(),
        }
    }

    fn eq(&mut self, label: &str, lhs: QMatrix, rhs: QMatrix) -> Result<&mut Self> {
        let diff = lhs.sub(&rhs)?;
        self.checks.push(Check {
            label: label.into(),
            holds: diff.is_zero(),
            residual: diff.max_entry(),
        });
        Ok(self)
    }

    fn done(&mut self) -> VerificationVerdict {
        VerificationVerdict {
            system: std::mem::take(&mut self.system),
            checks: std::mem::take(&mut self.checks),
        }
    }
}

/// Named characterizing equation systems.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum System {
    Penrose,
    Drazin,
    WeightedDrazin,
    CoreEpRight,
    CoreEpLeft,
    WcepRight,
    WcepLeft,
    Wdmp,
    Wmpd,
    Wcmp,
    ProjectorP,
    ProjectorQ,
}

impl System {
    pub const ALL: [System; 12] = [
        System::Penrose,
        System::Drazin,
        System::WeightedDrazin,
        System::CoreEpRight,
        System::CoreEpLeft,
        System::WcepRight,
        System::WcepLeft,
        System::Wdmp,
        System::Wmpd,
        System::Wcmp,
        System::ProjectorP,
        System::ProjectorQ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            System::Penrose => "penrose",
            System::Drazin => "drazin",
            System::WeightedDrazin => "wdrazin",
            System::CoreEpRight => "core-ep-right",
            System::CoreEpLeft => "core-ep-left",
            System::WcepRight => "wcep-right",
            System::WcepLeft => "wcep-left",
            System::Wdmp => "wdmp",
            System::Wmpd => "wmpd",
            System::Wcmp => "wcmp",
            System::ProjectorP => "projector-p",
            System::ProjectorQ => "projector-q",
        }
    }

    pub fn needs_weight(self) -> bool {
        matches!(
            self,
            System::WeightedDrazin
                | System::WcepRight
                | System::WcepLeft
                | System::Wdmp
                | System::Wmpd
                | System::Wcmp
        )
    }
}

impl FromStr for System {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        System::ALL
            .into_iter()
            .find(|sys| sys.name() == s)
            .ok_or_else(|| Error::UnknownSystem(s.into()))
    }
}

fn penrose(a: &QMatrix, x: &QMatrix) -> Result<VerificationVerdict> {
    let ax = a.mul(x)?;
    let xa = x.mul(a)?;
    Ok(Builder::new(System::Penrose)
        .eq("AXA = A", ax.mul(a)?, a.clone())?
        .eq("XAX = X", xa.mul(x)?, x.clone())?
        .eq("(AX)* = AX", ax.conj_transpose(), ax.clone())?
        .eq("(XA)* = XA", xa.conj_transpose(), xa.clone())?
        .done())
}

fn drazin_system(a: &QMatrix, x: &QMatrix) -> Result<VerificationVerdict> {
    let k = a.index_of()?;
    Ok(Builder::new(System::Drazin)
        .eq("A^(k+1) X = A^k", a.power(k + 1)?.mul(x)?, a.power(k)?)?
        .eq("XAX = X", QMatrix::chain(&[x, a, x])?, x.clone())?
        .eq("AX = XA", a.mul(x)?, x.mul(a)?)?
        .done())
}

/// Evaluates every equation of `system` on the candidate `x`.
pub fn verify_system(
    system: System,
    a: &QMatrix,
    w: Option<&QMatrix>,
    x: &QMatrix,
) -> Result<VerificationVerdict> {
    let pair = match (system.needs_weight(), w) {
        (true, Some(w)) => Some(WeightedPair::new(a.clone(), w.clone())?),
        (true, None) => {
            return Err(Error::DimensionMismatch(format!(
                "system `{}` needs a weight matrix",
                system.name()
            )))
        }
        (false, _) => None,
    };
    let mut b = Builder::new(system);
    match system {
        System::Penrose => return penrose(a, x),
        System::Drazin => return drazin_system(a, x),
        System::CoreEpRight => {
            let k = a.index_of()?;
            let ax = a.mul(x)?;
            b.eq("X A^(k+1) = A^k", x.mul(&a.power(k + 1)?)?, a.power(k)?)?
                .eq("A X^2 = X", QMatrix::chain(&[a, x, x])?, x.clone())?
                .eq("(AX)* = AX", ax.conj_transpose(), ax.clone())?;
        }
        System::CoreEpLeft => {
            let k = a.index_of()?;
            let xa = x.mul(a)?;
            b.eq("A^(k+1) X = A^k", a.power(k + 1)?.mul(x)?, a.power(k)?)?
                .eq("X^2 A = X", QMatrix::chain(&[x, x, a])?, x.clone())?
                .eq("(XA)* = XA", xa.conj_transpose(), xa.clone())?;
        }
        System::ProjectorP | System::ProjectorQ => {
            let mp = mp_oracle(a)?;
            let (moves, target, def) = if system == System::ProjectorP {
                (x.mul(a)?, a.mul(&mp)?, "X = AA†")
            } else {
                (a.mul(x)?, mp.mul(a)?, "X = A†A")
            };
            let label = if system == System::ProjectorP {
                "XA = A"
            } else {
                "AX = A"
            };
            b.eq("X^2 = X", x.mul(x)?, x.clone())?
                .eq("X* = X", x.conj_transpose(), x.clone())?
                .eq(label, moves, a.clone())?
                .eq(def, x.clone(), target)?;
        }
        _ => {
            let p = pair.as_ref().expect("weighted system has a pair");
            let (w, u, v, k) = (p.w(), p.u(), p.v(), p.k());
            match system {
                System::WeightedDrazin => {
                    b.eq(
                        "(AW)^(k+1) X W = (AW)^k",
                        QMatrix::chain(&[&v.power(k + 1)?, x, w])?,
                        v.power(k)?,
                    )?
                    .eq(
                        "X W A W X = X",
                        QMatrix::chain(&[x, w, a, w, x])?,
                        x.clone(),
                    )?
                    .eq(
                        "A W X = X W A",
                        QMatrix::chain(&[a, w, x])?,
                        QMatrix::chain(&[x, w, a])?,
                    )?;
                }
                System::WcepRight => {
                    let wawx = QMatrix::chain(&[w, a, w, x])?;
                    b.eq(
                        "X W (AW)^(k+1) = (AW)^k",
                        QMatrix::chain(&[x, w, &v.power(k + 1)?])?,
                        v.power(k)?,
                    )?
                    .eq(
                        "A W X W X = X",
                        QMatrix::chain(&[a, w, x, w, x])?,
                        x.clone(),
                    )?
                    .eq(
                        "(WAWX)* = WAWX",
                        wawx.conj_transpose(),
                        wawx.clone(),
                    )?;
                }
                System::WcepLeft => {
                    let xwaw = QMatrix::chain(&[x, w, a, w])?;
                    b.eq(
                        "(WA)^(k+1) W X = (WA)^k",
                        QMatrix::chain(&[&u.power(k + 1)?, w, x])?,
                        u.power(k)?,
                    )?
                    .eq(
                        "X W X W A = X",
                        QMatrix::chain(&[x, w, x, w, a])?,
                        x.clone(),
                    )?
                    .eq(
                        "(XWAW)* = XWAW",
                        xwaw.conj_transpose(),
                        xwaw.clone(),
                    )?;
                }
                System::Wdmp => {
                    let ad = wdrazin_oracle(p)?;
                    let u_k1 = u.power(k + 1)?;
                    b.eq("XAX = X", QMatrix::chain(&[x, a, x])?, x.clone())?
                        .eq(
                            "XA = W A_dW W A",
                            x.mul(a)?,
                            QMatrix::chain(&[w, &ad, w, a])?,
                        )?
                        .eq(
                            "(WA)^(k+1) X = (WA)^(k+1) A†",
                            u_k1.mul(x)?,
                            u_k1.mul(&mp_oracle(a)?)?,
                        )?;
                }
                System::Wmpd => {
                    let ad = wdrazin_oracle(p)?;
                    let v_k1 = v.power(k + 1)?;
                    b.eq("XAX = X", QMatrix::chain(&[x, a, x])?, x.clone())?
                        .eq(
                            "AX = A W A_dW W",
                            a.mul(x)?,
                            QMatrix::chain(&[a, w, &ad, w])?,
                        )?
                        .eq(
                            "X (AW)^(k+1) = A† (AW)^(k+1)",
                            x.mul(&v_k1)?,
                            mp_oracle(a)?.mul(&v_k1)?,
                        )?;
                }
                System::Wcmp => {
                    let ad = wdrazin_oracle(p)?;
                    let mp = mp_oracle(a)?;
                    b.eq("XAX = X", QMatrix::chain(&[x, a, x])?, x.clone())?
                        .eq(
                            "AX = A W A_dW W A A†",
                            a.mul(x)?,
                            QMatrix::chain(&[a, w, &ad, w, a, &mp])?,
                        )?
                        .eq(
                            "XA = A† A W A_dW W A",
                            x.mul(a)?,
                            QMatrix::chain(&[&mp, a, w, &ad, w, a])?,
                        )?;
                }
                _ => unreachable!("unweighted systems handled above"),
            }
        }
    }
    Ok(b.done())
}

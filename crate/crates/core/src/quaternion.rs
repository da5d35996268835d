use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact fraction in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Quaternion `w + x*i + y*j + z*k` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Quaternion {
    pub w: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl Quaternion {
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Quaternion { w, x, y, z }
    }

    /// Integer coefficients, handy in tests and examples.
    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quaternion::new(rat(w), rat(x), rat(y), rat(z))
    }

    pub fn real(w: Rational) -> Self {
        Quaternion::new(w, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn zero() -> Self {
        Quaternion::default()
    }

    pub fn one() -> Self {
        Quaternion::real(Rational::one())
    }

    pub fn i() -> Self {
        Quaternion::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quaternion::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quaternion::from_ints(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// True when the `j` and `k` parts vanish, i.e. the value is complex.
    pub fn is_complex(&self) -> bool {
        self.y.is_zero() && self.z.is_zero()
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    /// Squared norm `w² + x² + y² + z²`.
    pub fn norm_sqr(&self) -> Rational {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Quaternion::new(&self.w * s, &self.x * s, &self.y * s, &self.z * s)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let n = self.norm_sqr().recip();
        Ok(self.conj().scale(&n))
    }

    pub fn coefficients(&self) -> [&Rational; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }
}

impl Zero for Quaternion {
    fn zero() -> Self {
        Quaternion::default()
    }
    fn is_zero(&self) -> bool {
        Quaternion::is_zero(self)
    }
}

impl From<i64> for Quaternion {
    fn from(n: i64) -> Self {
        Quaternion::real(rat(n))
    }
}

impl From<Rational> for Quaternion {
    fn from(r: Rational) -> Self {
        Quaternion::real(r)
    }
}

impl<'a> Add<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn add(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w + &o.w,
            &self.x + &o.x,
            &self.y + &o.y,
            &self.z + &o.z,
        )
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Quaternion) -> Quaternion {
        &self + &o
    }
}

impl AddAssign<&Quaternion> for Quaternion {
    fn add_assign(&mut self, o: &Quaternion) {
        self.w += &o.w;
        self.x += &o.x;
        self.y += &o.y;
        self.z += &o.z;
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, o: Quaternion) {
        *self += &o;
    }
}

impl<'a> Sub<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn sub(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w - &o.w,
            &self.x - &o.x,
            &self.y - &o.y,
            &self.z - &o.z,
        )
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: Quaternion) -> Quaternion {
        &self - &o
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}

/// Hamilton product.
impl<'a> Mul<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn mul(self, o: &Quaternion) -> Quaternion {
        if self.is_zero() || o.is_zero() {
            return Quaternion::zero();
        }
        let (a1, b1, c1, d1) = (&self.w, &self.x, &self.y, &self.z);
        let (a2, b2, c2, d2) = (&o.w, &o.x, &o.y, &o.z);
        Quaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, o: Quaternion) -> Quaternion {
        &self * &o
    }
}

impl fmt::Display for Quaternion {
    /// Writes the literal grammar accepted by [`FromStr`], e.g. `-2+3*j`, `6*i-k`, `1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (c, unit) in self.coefficients().into_iter().zip(["", "i", "j", "k"]) {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let mag = c.abs();
            if unit.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(unit);
            } else {
                out.push_str(&format!("{mag}*{unit}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

fn parse_coefficient(s: &str, lit: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad coefficient `{s}` in `{lit}`"));
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    match s.split_once('/') {
        Some((p, q)) if digits(p) && digits(q) => {
            let q: BigInt = q.parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{lit}`")));
            }
            Ok(Rational::new(p.parse().map_err(|_| bad())?, q))
        }
        None if digits(s) => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
        _ => Err(bad()),
    }
}

impl FromStr for Quaternion {
    type Err = Error;

    /// Parses `a + b*i + c*j + d*k`; any term may be omitted and a unit may stand alone (`k`, `-i`).
    fn from_str(lit: &str) -> Result<Self> {
        let s: String = lit.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty quaternion literal".into()));
        }
        let mut q = Quaternion::zero();
        let mut rest = s.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let mut negative = false;
            match rest.as_bytes()[0] {
                b'+' if !first => rest = &rest[1..],
                b'-' => {
                    negative = true;
                    rest = &rest[1..];
                }
                _ if first => {}
                _ => return Err(Error::Parse(format!("expected sign in `{lit}`"))),
            }
            first = false;
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let term = &rest[..end];
            rest = &rest[end..];
            let (coef, unit) = match term.rsplit_once('*') {
                Some((c, u)) => (parse_coefficient(c, lit)?, u),
                None if matches!(term, "i" | "j" | "k") => (Rational::one(), term),
                None => (parse_coefficient(term, lit)?, ""),
            };
            let coef = if negative { -coef } else { coef };
            match unit {
                "" => q.w += coef,
                "i" => q.x += coef,
                "j" => q.y += coef,
                "k" => q.z += coef,
                _ => return Err(Error::Parse(format!("unknown unit `{unit}` in `{lit}`"))),
            }
        }
        Ok(q)
    }
}

//! Coefficient fields: exact Gaussian rationals and tolerance-compared complex doubles.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Relative tolerance of the float backend.
pub const REL_TOL: f64 = 1e-9;
/// Float coefficients below this magnitude are dropped from normal forms.
pub const DROP_TOL: f64 = 1e-12;

/// A complex coefficient field.
///
/// `EXACT` backends compare with `==`; the float backend compares within [`REL_TOL`].
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn i() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn from_gq(q: &Gq) -> Self;
    fn from_c64(z: Complex64) -> Self;
    fn to_c64(&self) -> Complex64;
    fn conj(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;
    fn approx_eq(&self, other: &Self) -> bool;
    fn re(&self) -> Self;
    fn im(&self) -> Self;

    fn norm(&self) -> f64 {
        self.to_c64().norm()
    }

    fn is_real(&self) -> bool {
        self.im().is_zero()
    }

    fn is_one(&self) -> bool {
        (self.clone() - Self::one()).is_zero()
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|o| self.clone() * o)
    }

    /// `i^k` for any integer `k`.
    fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::one(),
            1 => Self::i(),
            2 => -Self::one(),
            _ => -Self::i(),
        }
    }

    fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc * self.clone();
        }
        acc
    }
}

/// Exact Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gq {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gq {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Gq { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Gq { re, im: BigRational::zero() }
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Gq::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn complex(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Gq::new(
            BigRational::new(BigInt::from(re_num), BigInt::from(re_den)),
            BigRational::new(BigInt::from(im_num), BigInt::from(im_den)),
        )
    }

    fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl Add for Gq {
    type Output = Gq;
    fn add(self, o: Gq) -> Gq {
        Gq { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for Gq {
    type Output = Gq;
    fn sub(self, o: Gq) -> Gq {
        Gq { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for Gq {
    type Output = Gq;
    fn mul(self, o: Gq) -> Gq {
        match (self.im.is_zero(), o.im.is_zero()) {
            (true, true) => Gq::real(self.re * o.re),
            (true, false) => Gq { im: &self.re * o.im, re: self.re * o.re },
            (false, true) => Gq { im: self.im * &o.re, re: self.re * o.re },
            (false, false) => Gq {
                re: &self.re * &o.re - &self.im * &o.im,
                im: &self.re * &o.im + &self.im * &o.re,
            },
        }
    }
}

impl Neg for Gq {
    type Output = Gq;
    fn neg(self) -> Gq {
        Gq { re: -self.re, im: -self.im }
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Gq {
    /// `a/b+c/d*i`, omitting a zero part and a unit imaginary coefficient.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_part = |q: &BigRational| -> String {
            if q.is_one() {
                "i".to_string()
            } else if (-q).is_one() {
                "-i".to_string()
            } else {
                format!("{}*i", fmt_rational(q))
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => write!(f, "{}", im_part(&self.im)),
            (false, false) => {
                let im = im_part(&self.im);
                if im.starts_with('-') {
                    write!(f, "{}{}", fmt_rational(&self.re), im)
                } else {
                    write!(f, "{}+{}", fmt_rational(&self.re), im)
                }
            }
        }
    }
}

impl fmt::Debug for Gq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn rational_from_f64(x: f64) -> BigRational {
    BigRational::from_float(x).unwrap_or_else(BigRational::zero)
}

impl Scalar for Gq {
    const EXACT: bool = true;

    fn zero() -> Self {
        Gq::real(BigRational::zero())
    }
    fn one() -> Self {
        Gq::real(BigRational::one())
    }
    fn i() -> Self {
        Gq::new(BigRational::zero(), BigRational::one())
    }
    fn from_i64(n: i64) -> Self {
        Gq::real(BigRational::from_integer(BigInt::from(n)))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Gq::ratio(num, den)
    }
    fn from_gq(q: &Gq) -> Self {
        q.clone()
    }
    fn from_c64(z: Complex64) -> Self {
        Gq::new(rational_from_f64(z.re), rational_from_f64(z.im))
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
    fn conj(&self) -> Self {
        Gq { re: self.re.clone(), im: -self.im.clone() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        Some(Gq { re: &self.re / &n, im: -(&self.im / &n) })
    }
    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }
    fn re(&self) -> Self {
        Gq::real(self.re.clone())
    }
    fn im(&self) -> Self {
        Gq::real(self.im.clone())
    }
    fn is_real(&self) -> bool {
        self.im.is_zero()
    }
    fn norm(&self) -> f64 {
        self.norm_sq().to_f64().unwrap_or(f64::INFINITY).sqrt()
    }
}

impl Gq {
    /// Sign of the real part; used for exact orientation tests on real matrices.
    pub fn real_signum(&self) -> i32 {
        if self.re.is_zero() {
            0
        } else if self.re.is_positive() {
            1
        } else {
            -1
        }
    }
}

impl Scalar for Complex64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn i() -> Self {
        Complex64::new(0.0, 1.0)
    }
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex64::new(num as f64 / den as f64, 0.0)
    }
    fn from_gq(q: &Gq) -> Self {
        q.to_c64()
    }
    fn from_c64(z: Complex64) -> Self {
        z
    }
    fn to_c64(&self) -> Complex64 {
        *self
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn is_zero(&self) -> bool {
        self.norm() <= DROP_TOL
    }
    fn inv(&self) -> Option<Self> {
        if self.norm() == 0.0 {
            None
        } else {
            Some(Complex64::inv(self))
        }
    }
    fn approx_eq(&self, other: &Self) -> bool {
        let scale = 1f64.max(self.norm()).max(other.norm());
        (self - other).norm() <= REL_TOL * scale
    }
    fn re(&self) -> Self {
        Complex64::new(self.re, 0.0)
    }
    fn im(&self) -> Self {
        Complex64::new(self.im, 0.0)
    }
    fn is_real(&self) -> bool {
        self.im.abs() <= REL_TOL * 1f64.max(self.re.abs())
    }
    fn norm(&self) -> f64 {
        Complex64::norm(*self)
    }
}

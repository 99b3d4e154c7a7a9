//! Decimal approximation under the embedding ζ_n = exp(2πi/n).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Cyclotomic;

/// Real and imaginary parts as rationals within the requested distance of the
/// exact value.
#[derive(Clone, Debug, PartialEq)]
pub struct Approx {
    pub re: BigRational,
    pub im: BigRational,
    pub digits: u32,
}

impl Approx {
    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }

    /// `re` or `re+imi` printed with `digits` decimals.
    pub fn to_decimal(&self) -> String {
        let re = decimal(&self.re, self.digits);
        let tiny = BigRational::new(BigInt::one(), BigInt::from(10).pow(self.digits) * 2);
        if self.im.abs() < tiny {
            re
        } else {
            let im = decimal(&self.im, self.digits);
            if im.starts_with('-') {
                format!("{re}{im}i")
            } else {
                format!("{re}+{im}i")
            }
        }
    }
}

/// Round to `digits` decimals and print.
pub fn decimal(x: &BigRational, digits: u32) -> String {
    let scale = BigInt::from(10).pow(digits);
    let scaled = x * BigRational::from_integer(scale.clone());
    let r = scaled.round().to_integer();
    let neg = r.is_negative();
    let r = r.abs();
    let (ip, fp) = r.div_rem(&scale);
    let sign = if neg && !(ip.is_zero() && fp.is_zero()) { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{ip}")
    } else {
        format!("{sign}{ip}.{:0>width$}", fp.to_string(), width = digits as usize)
    }
}

fn atan_inv(k: u64, one: &BigInt) -> BigInt {
    // atan(1/k) = Σ (-1)^j / ((2j+1) k^{2j+1}) in fixed point
    let k2 = BigInt::from(k * k);
    let mut power = one / BigInt::from(k);
    let mut sum = BigInt::zero();
    let mut j: u64 = 0;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * j + 1);
        if j.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &k2;
        j += 1;
    }
    sum
}

fn pi_fixed(one: &BigInt) -> BigInt {
    BigInt::from(16) * atan_inv(5, one) - BigInt::from(4) * atan_inv(239, one)
}

/// (cos x, sin x) for |x| ≤ π in fixed point with unit `one`.
fn cos_sin(x: &BigInt, one: &BigInt) -> (BigInt, BigInt) {
    let x2 = x * x / one;
    let mut c = one.clone();
    let mut s = x.clone();
    let mut tc = one.clone();
    let mut ts = x.clone();
    let mut k: u64 = 1;
    loop {
        tc = -(&tc * &x2 / one) / BigInt::from((2 * k - 1) * (2 * k));
        ts = -(&ts * &x2 / one) / BigInt::from((2 * k) * (2 * k + 1));
        if tc.is_zero() && ts.is_zero() {
            break;
        }
        c += &tc;
        s += &ts;
        k += 1;
    }
    (c, s)
}

impl Cyclotomic {
    /// Approximate value with error below 10^{-digits}; digits is capped at 50.
    pub fn approx(&self, digits: u32) -> Approx {
        let digits = digits.clamp(1, 50);
        let (n, num, den) = self.raw();
        let den_r = BigRational::from_integer(den.clone());
        if n == 1 {
            return Approx { re: BigRational::from_integer(num[0].clone()) / den_r, im: BigRational::zero(), digits };
        }
        let mut mass = BigInt::zero();
        for c in num {
            mass += c.abs();
        }
        let mass_digits = (mass / den).to_string().len() as u32;
        let work = digits + mass_digits + 12;
        let one = BigInt::from(10).pow(work);
        let pi = pi_fixed(&one);
        let mut re = BigInt::zero();
        let mut im = BigInt::zero();
        for (e, c) in num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // angle 2πe/n moved into (-π, π]
            let mut a = BigInt::from(2 * e as u64) * &pi / BigInt::from(n);
            if BigInt::from(2 * e as u64) > BigInt::from(n) {
                a -= BigInt::from(2) * &pi;
            }
            let (co, si) = cos_sin(&a, &one);
            re += c * co;
            im += c * si;
        }
        let scale = BigRational::from_integer(one) * den_r;
        Approx {
            re: BigRational::new(re, BigInt::one()) / &scale,
            im: BigRational::new(im, BigInt::one()) / scale,
            digits,
        }
    }
}

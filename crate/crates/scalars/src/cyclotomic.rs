use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::{cyclotomic_poly, euler_phi, gcd, lcm, mod_inverse, prime_divisors};
use crate::ScalarError;

/// An element of Q(ζ_n) written in the power basis 1, ζ_n, …, ζ_n^{φ(n)-1}.
///
/// The conductor is always the smallest n such that the value lies in Q(ζ_n),
/// and the coefficients are kept as integers over one positive common
/// denominator with no common factor. Equal values therefore have equal
/// representations, so the derived `Eq` and `Hash` are exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    n: u64,
    num: Vec<BigInt>,
    den: BigInt,
}

/// Reduce a dense polynomial in ζ_n (any length) modulo Φ_n.
fn reduce_mod(mut v: Vec<BigInt>, n: u64) -> Vec<BigInt> {
    let phi = cyclotomic_poly(n);
    let d = phi.len() - 1;
    for k in (d..v.len()).rev() {
        if v[k].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut v[k]);
        for (t, &p) in phi.iter().enumerate().take(d) {
            if p != 0 {
                v[k - d + t] -= &c * p;
            }
        }
    }
    v.resize(d, BigInt::zero());
    v
}

/// Place coefficient `c_e` at exponent `e * step` and reduce mod Φ_target.
fn embed(num: &[BigInt], step: u64, target: u64) -> Vec<BigInt> {
    if step == 1 {
        return num.to_vec();
    }
    let mut v = vec![BigInt::zero(); target as usize];
    for (e, c) in num.iter().enumerate() {
        if !c.is_zero() {
            v[(e as u64 * step % target) as usize] += c;
        }
    }
    reduce_mod(v, target)
}

/// Try to write the value (num/den in Q(ζ_n)) inside Q(ζ_{n/p}).
fn descend(n: u64, num: &[BigInt], p: u64) -> Option<(Vec<BigInt>, BigInt)> {
    let m = n / p;
    if m.is_multiple_of(p) {
        // Φ_n(x) = Φ_m(x^p): the subfield is spanned by the powers x^{pk}
        if num.iter().enumerate().any(|(e, c)| !(e as u64).is_multiple_of(p) && !c.is_zero()) {
            return None;
        }
        let v = num.iter().step_by(p as usize).cloned().collect();
        return Some((v, BigInt::one()));
    }
    // average over Gal(Q(ζ_n)/Q(ζ_m)), scaled by p-1
    let pinv = mod_inverse(p % m, m);
    let minv = mod_inverse(m % p, p);
    let mut proj = vec![BigInt::zero(); m as usize];
    let pm1 = BigInt::from(p - 1);
    for (e, c) in num.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e = e as u64;
        let a = (e % m) * pinv % m;
        let b = (e % p) * minv % p;
        if b == 0 {
            proj[a as usize] += c * &pm1;
        } else {
            proj[a as usize] -= c;
        }
    }
    let proj = reduce_mod(proj, m);
    let back = embed(&proj, p, n);
    let matches = back.iter().zip(num).all(|(x, y)| *x == y * &pm1);
    if matches {
        Some((proj, pm1))
    } else {
        None
    }
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { n: 1, num: vec![BigInt::zero()], den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(k: i64) -> Self {
        Cyclotomic { n: 1, num: vec![BigInt::from(k)], den: BigInt::one() }
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        Self::from_rational(BigRational::new(p.into(), q.into()))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Cyclotomic { n: 1, num: vec![r.numer().clone()], den: r.denom().clone() }.normalized()
    }

    /// ζ_n^k with ζ_n = exp(2πi/n).
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1);
        let e = k.rem_euclid(n as i64) as u64;
        let mut v = vec![BigInt::zero(); n as usize];
        v[e as usize] = BigInt::one();
        Self::from_power_coeffs(n, v, BigInt::one())
    }

    pub fn zeta(n: u64) -> Self {
        Self::root_of_unity(n, 1)
    }

    /// Σ c_e ζ_n^e from arbitrary exponents (reduced mod n).
    pub fn from_terms(n: u64, terms: &[(i64, BigRational)]) -> Self {
        let mut den = BigInt::one();
        for (_, c) in terms {
            den = den.lcm(c.denom());
        }
        let mut v = vec![BigInt::zero(); n as usize];
        for (e, c) in terms {
            let idx = e.rem_euclid(n as i64) as usize;
            v[idx] += c.numer() * (&den / c.denom());
        }
        Self::from_power_coeffs(n, v, den)
    }

    fn from_power_coeffs(n: u64, v: Vec<BigInt>, den: BigInt) -> Self {
        let num = reduce_mod(v, n);
        Cyclotomic { n, num, den }.normalized()
    }

    /// Minimal conductor of the value.
    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.n == 1 && self.num[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.n == 1 && self.num[0].is_one() && self.den.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.n == 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.n == 1 {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// Power-basis coefficients (index e ↦ coefficient of ζ_n^e), exact.
    pub fn coefficients(&self) -> Vec<BigRational> {
        self.num.iter().map(|c| BigRational::new(c.clone(), self.den.clone())).collect()
    }

    fn normalized(mut self) -> Self {
        if self.den.is_negative() {
            self.den = -self.den;
            for c in &mut self.num {
                *c = -std::mem::take(c);
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if self.num.iter().all(|c| c.is_zero()) {
            return Self::zero();
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
        self.minimize()
    }

    fn minimize(mut self) -> Self {
        'outer: loop {
            if self.n == 1 {
                return self;
            }
            for p in prime_divisors(self.n) {
                if let Some((num, scale)) = descend(self.n, &self.num, p) {
                    self.n /= p;
                    self.num = num;
                    self.den *= scale;
                    let mut g = self.den.clone();
                    for c in &self.num {
                        g = g.gcd(c);
                    }
                    if !g.is_one() {
                        self.den /= &g;
                        for c in &mut self.num {
                            *c /= &g;
                        }
                    }
                    continue 'outer;
                }
            }
            return self;
        }
    }

    fn lifted(&self, target: u64) -> Vec<BigInt> {
        embed(&self.num, target / self.n, target)
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other.clone() } else { other.clone() };
        }
        let l = lcm(self.n, other.n);
        let a = self.lifted(l);
        let b = other.lifted(l);
        let v = a
            .iter()
            .zip(&b)
            .map(|(x, y)| {
                let s = x * &other.den;
                let t = y * &self.den;
                if negate {
                    s - t
                } else {
                    s + t
                }
            })
            .collect();
        Cyclotomic { n: l, num: v, den: &self.den * &other.den }.normalized()
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.n == 1 || other.n == 1 {
            let (r, x) = if self.n == 1 { (self, other) } else { (other, self) };
            let c = &r.num[0];
            let num = x.num.iter().map(|y| y * c).collect();
            return Cyclotomic { n: x.n, num, den: &r.den * &x.den }.normalized();
        }
        let l = lcm(self.n, other.n);
        let a = self.lifted(l);
        let b = other.lifted(l);
        let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    v[i + j] += x * y;
                }
            }
        }
        Cyclotomic { n: l, num: reduce_mod(v, l), den: &self.den * &other.den }.normalized()
    }

    /// Multiplicative inverse, by solving a·x = 1 in the power basis.
    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.n == 1 {
            return Ok(Cyclotomic { n: 1, num: vec![self.den.clone()], den: self.num[0].clone() }.normalized());
        }
        let d = self.num.len();
        // column k of the multiplication matrix is a·ζ^k
        let mut cols: Vec<Vec<BigInt>> = Vec::with_capacity(d);
        for k in 0..d {
            let mut v = vec![BigInt::zero(); d + k];
            for (e, c) in self.num.iter().enumerate() {
                v[e + k] = c.clone();
            }
            cols.push(reduce_mod(v, self.n));
        }
        // augmented rows [M | e_0] over Q, with M entries num_entries / den
        let mut rows: Vec<Vec<BigRational>> = (0..d)
            .map(|r| {
                let mut row: Vec<BigRational> = (0..d).map(|k| BigRational::from_integer(cols[k][r].clone())).collect();
                row.push(if r == 0 { BigRational::one() } else { BigRational::zero() });
                row
            })
            .collect();
        for c in 0..d {
            let piv = (c..d).find(|&r| !rows[r][c].is_zero()).expect("norm form is nonsingular");
            rows.swap(c, piv);
            let inv = rows[c][c].recip();
            for x in rows[c].iter_mut() {
                *x *= &inv;
            }
            for r in 0..d {
                if r != c && !rows[r][c].is_zero() {
                    let f = rows[r][c].clone();
                    for k in c..=d {
                        let t = &rows[c][k] * &f;
                        rows[r][k] -= t;
                    }
                }
            }
        }
        // x solves (num/den)·x = 1, so x = den · M^{-1} e_0
        let terms: Vec<(i64, BigRational)> =
            (0..d).map(|e| (e as i64, &rows[e][d] * BigRational::from_integer(self.den.clone()))).collect();
        Ok(Self::from_terms(self.n, &terms))
    }

    /// Complex conjugation ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// The automorphism ζ_n ↦ ζ_n^k for k coprime to the conductor.
    pub fn galois(&self, k: i64) -> Self {
        if self.n == 1 {
            return self.clone();
        }
        let n = self.n;
        let kk = k.rem_euclid(n as i64) as u64;
        assert_eq!(gcd(kk, n), 1, "galois exponent must be a unit");
        let mut v = vec![BigInt::zero(); n as usize];
        for (e, c) in self.num.iter().enumerate() {
            v[(e as u64 * kk % n) as usize] += c;
        }
        Self::from_power_coeffs(n, v, self.den.clone())
    }

    pub fn pow(&self, k: i64) -> Self {
        if k < 0 {
            return self.inv().expect("negative power of zero").pow(-k);
        }
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub(crate) fn raw(&self) -> (u64, &[BigInt], &BigInt) {
        (self.n, &self.num, &self.den)
    }

    /// Degree [Q(ζ_n):Q] of the conductor field.
    pub fn degree(&self) -> u64 {
        euler_phi(self.n)
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(k: i64) -> Self {
        Self::from_integer(k)
    }
}

impl From<BigRational> for Cyclotomic {
    fn from(r: BigRational) -> Self {
        Self::from_rational(r)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(mut self) -> Cyclotomic {
        for c in &mut self.num {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -self.clone()
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                $body(self, rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                $body(&self, &rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                $body(&self, rhs)
            }
        }
        impl $tr<Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                $body(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a: &Cyclotomic, b: &Cyclotomic| a.add_impl(b, false));
binop!(Sub, sub, |a: &Cyclotomic, b: &Cyclotomic| a.add_impl(b, true));
binop!(Mul, mul, |a: &Cyclotomic, b: &Cyclotomic| a.mul_impl(b));
binop!(Div, div, |a: &Cyclotomic, b: &Cyclotomic| a.mul_impl(&b.inv().expect("division by zero")));

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.add_impl(rhs, false);
    }
}

impl AddAssign<Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: Cyclotomic) {
        *self = self.add_impl(&rhs, false);
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.add_impl(rhs, true);
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.mul_impl(rhs);
    }
}

impl MulAssign<Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: Cyclotomic) {
        *self = self.mul_impl(&rhs);
    }
}

impl Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a Cyclotomic> for Cyclotomic {
    fn sum<I: Iterator<Item = &'a Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| a + b)
    }
}

impl Product for Cyclotomic {
    fn product<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::one(), |a, b| a * b)
    }
}

impl<'a> Product<&'a Cyclotomic> for Cyclotomic {
    fn product<I: Iterator<Item = &'a Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::one(), |a, b| a * b)
    }
}

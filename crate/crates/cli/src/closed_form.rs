//! Radical forms for values of degree at most two over Q.

use num_traits::{One, Signed, Zero};
use tvk_scalars::poly::gcd;
use tvk_scalars::{BigInt, BigRational, Cyclotomic};

fn rational_text(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// |m| = s² d with d squarefree; None if trial division would take too long.
fn squarefree(m: &BigInt) -> Option<(BigInt, BigInt)> {
    let mut rest = m.abs();
    let mut s = BigInt::one();
    let mut d = BigInt::one();
    let mut k = BigInt::from(2);
    let limit = BigInt::from(1_000_000u32);
    while &k * &k <= rest {
        if k > limit {
            return None;
        }
        while (&rest % (&k * &k)).is_zero() {
            rest /= &k * &k;
            s *= &k;
        }
        if (&rest % &k).is_zero() {
            rest /= &k;
            d *= &k;
        }
        k += 1;
    }
    d *= rest;
    Some((s, d))
}

/// `a`, `a + b√d` or `(a + b√d)/c` with integers, for x rational or
/// quadratic; None for anything of higher degree.
pub fn closed_form(x: &Cyclotomic) -> Option<String> {
    if let Some(r) = x.to_rational() {
        return Some(rational_text(&r));
    }
    let n = x.conductor();
    let mut other = None;
    for k in 2..n {
        if gcd(k, n) != 1 {
            continue;
        }
        let y = x.galois(k as i64);
        if &y == x {
            continue;
        }
        match &other {
            None => other = Some(y),
            Some(o) if *o == y => {}
            Some(_) => return None,
        }
    }
    let other = other?;
    let half = Cyclotomic::from_ratio(1, 2);
    let a = ((x + &other) * half.clone()).to_rational()?;
    let h = (x - &other) * half;
    let r = (&h * &h).to_rational()?;
    let m = r.numer() * r.denom();
    let (s, d) = squarefree(&m)?;
    let negative = m.is_negative();
    let approx = h.approx(20);
    let positive = if negative { approx.im.is_positive() } else { approx.re.is_positive() };
    let b = BigRational::new(if positive { s } else { -s }, r.denom().clone());
    let c = a.denom() * b.denom() / num_integer::gcd(a.denom().clone(), b.denom().clone());
    let big_a = (&a * BigRational::from_integer(c.clone())).to_integer();
    let big_b = (&b * BigRational::from_integer(c.clone())).to_integer();
    let root = match (negative, d.is_one()) {
        (false, _) => format!("√{d}"),
        (true, true) => "i".to_string(),
        (true, false) => format!("i√{d}"),
    };
    let coef = if big_b.abs().is_one() { String::new() } else { big_b.abs().to_string() };
    let mut num = String::new();
    if !big_a.is_zero() {
        num.push_str(&big_a.to_string());
        num.push(if big_b.is_negative() { '-' } else { '+' });
    } else if big_b.is_negative() {
        num.push('-');
    }
    num.push_str(&coef);
    num.push_str(&root);
    Some(if c.is_one() {
        num
    } else if big_a.is_zero() {
        format!("{num}/{c}")
    } else {
        format!("({num})/{c}")
    })
}

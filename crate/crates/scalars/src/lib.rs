//! Exact arithmetic in cyclotomic fields Q(ζ_n) ⊂ ℂ, with ζ_n = exp(2πi/n).
//!
//! Every value is stored in its minimal field, so equality and hashing are
//! exact comparisons of canonical forms.

mod approx;
mod cyclotomic;
mod matrix;
pub mod poly;
mod text;

pub use approx::{decimal, Approx};
pub use cyclotomic::Cyclotomic;
pub use matrix::Matrix;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use text::parse_rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("singular matrix")]
    Singular,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Shorthand for an integer-valued scalar.
pub fn int(k: i64) -> Cyclotomic {
    Cyclotomic::from_integer(k)
}

/// Shorthand for p/q.
pub fn ratio(p: i64, q: i64) -> Cyclotomic {
    Cyclotomic::from_ratio(p, q)
}

/// ζ_n^k.
pub fn zeta(n: u64, k: i64) -> Cyclotomic {
    Cyclotomic::root_of_unity(n, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi() -> Cyclotomic {
        -(zeta(5, 2) + zeta(5, 3))
    }

    #[test]
    fn identity_and_rationals() {
        let x = zeta(7, 3) + ratio(1, 2);
        assert_eq!(Cyclotomic::zero() + &x, x);
        assert_eq!(ratio(1, 2) + ratio(1, 3), ratio(5, 6));
        assert_eq!((ratio(1, 2) + ratio(1, 3)).conductor(), 1);
    }

    #[test]
    fn sum_of_primitive_fifth_roots() {
        let s = (zeta(5, 1) + zeta(5, 4)) + (zeta(5, 2) + zeta(5, 3));
        assert_eq!(s, int(-1));
    }

    #[test]
    fn golden_ratio_relation() {
        let p = phi();
        assert_eq!(&p * &p, &p + int(1));
        assert_eq!(p.conductor(), 5);
    }

    #[test]
    fn inverse_of_one_plus_zeta5() {
        let x = int(1) + zeta(5, 1);
        assert_eq!(&x * x.inv().unwrap(), int(1));
        assert_eq!(Cyclotomic::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn conjugation() {
        assert_eq!(zeta(8, 1).conj(), zeta(8, 7));
        assert_eq!(ratio(3, 7).conj(), ratio(3, 7));
    }

    #[test]
    fn conductor_minimisation() {
        // ζ_6 = -ζ_3^2, i = ζ_4, √2 = ζ_8 + ζ_8^7, √5 = 2φ - 1
        assert_eq!(zeta(6, 1), -zeta(3, 2));
        assert_eq!(zeta(12, 3), zeta(4, 1));
        let s2 = zeta(8, 1) + zeta(8, 7);
        assert_eq!(s2.conductor(), 8);
        assert_eq!(&s2 * &s2, int(2));
        let s5 = phi() * int(2) - int(1);
        assert_eq!(&s5 * &s5, int(5));
        assert_eq!(zeta(20, 4), zeta(5, 1));
        assert_eq!((zeta(15, 5) + zeta(15, 10)).conductor(), 1);
        assert_eq!(zeta(9, 3), zeta(3, 1));
        assert_eq!((zeta(9, 1) * zeta(9, 2)).conductor(), 3);
    }

    #[test]
    fn approximations() {
        assert_eq!(int(1).approx(10).to_f64(), (1.0, 0.0));
        assert_eq!(phi().approx(6).to_decimal(), "1.618034");
        let (re, im) = zeta(4, 1).approx(6).to_f64();
        assert!(re.abs() < 1e-6 && (im - 1.0).abs() < 1e-6);
        let golden50 = "1.61803398874989484820458683436563811772030917980576";
        assert_eq!(phi().approx(50).to_decimal(), golden50);
    }

    #[test]
    fn text_round_trip() {
        for x in [int(0), ratio(-3, 4), phi(), zeta(8, 3) * ratio(2, 9) + int(5), zeta(12, 1)] {
            let s = x.to_string();
            let y: Cyclotomic = s.parse().unwrap();
            assert_eq!(x, y, "{s}");
            assert_eq!(y.to_string(), s);
        }
        assert_eq!(ratio(5, 6).to_string(), "rat[5/6]");
        assert_eq!(phi().to_string(), "cyc(5)[2:-1, 3:-1]");
        assert!("cyc(0)[1:1]".parse::<Cyclotomic>().is_err());
        assert!("foo".parse::<Cyclotomic>().is_err());
    }

    #[test]
    fn matrices() {
        let p = phi();
        let m = Matrix::from_rows(vec![vec![int(1), p.clone()], vec![p.clone(), int(-1)]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        assert_eq!(m.rank(), 2);
        assert_eq!(m.determinant(), -(int(2) + p.clone()));
        let s = Matrix::from_rows(vec![vec![int(1), p.clone()], vec![p.clone(), &p * &p]]);
        assert_eq!(s.rank(), 1);
        assert!(s.inverse().is_err());
    }
}

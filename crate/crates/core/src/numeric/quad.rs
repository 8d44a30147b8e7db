use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact element `a + b·√q` of ℚ[√q].
///
/// The representation is not normalised when `q` is a perfect square; sign and
/// ordering questions are still answered exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadExt {
    a: BigRational,
    b: BigRational,
    q: u64,
}

impl QuadExt {
    pub fn new(a: BigRational, b: BigRational, q: u64) -> Self {
        assert!(q >= 1, "radicand must be positive");
        Self { a, b, q }
    }

    pub fn rational(a: BigRational, q: u64) -> Self {
        Self::new(a, BigRational::zero(), q)
    }

    pub fn from_ints(a: i64, b: i64, q: u64) -> Self {
        Self::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
            q,
        )
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The value as a rational when the irrational part vanishes.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.b.is_zero().then_some(&self.a)
    }

    /// Exact sign of `a + b√q`, decided by comparing `a²` with `b²q`.
    pub fn sign(&self) -> Sign {
        let sa = rat_sign(&self.a);
        let sb = rat_sign(&self.b);
        match (sa, sb) {
            (Sign::NoSign, s) | (s, Sign::NoSign) => s,
            (x, y) if x == y => x,
            _ => {
                let a2 = &self.a * &self.a;
                let b2q = &self.b * &self.b * BigRational::from_integer(self.q.into());
                match a2.cmp(&b2q) {
                    std::cmp::Ordering::Greater => sa,
                    std::cmp::Ordering::Less => sb,
                    std::cmp::Ordering::Equal => Sign::NoSign,
                }
            }
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.sign() != Sign::Minus
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.a, -&self.b, self.q)
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        // integer estimate within a few units, then exact correction
        let q = BigRational::from_integer(self.q.into());
        let b2q = (&self.b * &self.b * q).floor().to_integer();
        let root = b2q.magnitude().sqrt();
        let root = BigInt::from_biguint(Sign::Plus, root);
        let mut n = self.a.floor().to_integer() + if self.b.is_negative() { -root } else { root };
        loop {
            if self.minus_int(&n).sign() == Sign::Minus {
                n -= 1;
            } else if self.minus_int(&(&n + 1)).sign() != Sign::Minus {
                n += 1;
            } else {
                return n;
            }
        }
    }

    fn minus_int(&self, n: &BigInt) -> Self {
        Self::new(
            &self.a - BigRational::from_integer(n.clone()),
            self.b.clone(),
            self.q,
        )
    }

    fn scaled(&self, factor: &BigRational) -> Self {
        Self::new(&self.a * factor, &self.b * factor, self.q)
    }

    /// Correctly rounded decimal with `digits` places after the point
    /// (ties away from zero).
    pub fn to_decimal(&self, digits: usize) -> String {
        let negative = self.sign() == Sign::Minus;
        let abs = if negative { self.neg() } else { self.clone() };
        let scale = BigRational::from_integer(BigInt::from(10u32).pow(digits as u32));
        let mut shifted = abs.scaled(&scale);
        shifted.a += BigRational::new(BigInt::one(), BigInt::from(2));
        let m = shifted.floor();
        format_scaled(&m, digits, negative && !m.is_zero())
    }

    /// Nearest `f64`, via an exact decimal expansion carrying at least 20
    /// significant digits.
    pub fn to_f64(&self) -> f64 {
        if self.sign() == Sign::NoSign {
            return 0.0;
        }
        let mut digits = 20usize;
        for _ in 0..64 {
            let s = self.to_decimal(digits);
            let significant = s
                .chars()
                .filter(|c| c.is_ascii_digit())
                .skip_while(|&c| c == '0')
                .count();
            if significant >= 20 {
                return s.parse().expect("decimal string");
            }
            digits += 21 - significant;
        }
        0.0
    }
}

fn rat_sign(x: &BigRational) -> Sign {
    if x.is_zero() {
        Sign::NoSign
    } else if x.is_negative() {
        Sign::Minus
    } else {
        Sign::Plus
    }
}

fn format_scaled(m: &BigInt, digits: usize, negative: bool) -> String {
    let mut s = m.magnitude().to_string();
    if digits > 0 {
        if s.len() <= digits {
            s = "0".repeat(digits + 1 - s.len()) + &s;
        }
        s.insert(s.len() - digits, '.');
    }
    if negative {
        s.insert(0, '-');
    }
    s
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let sep = if self.b.is_negative() { "-" } else { "+" };
        let b = self.b.abs();
        let coef = if b.is_one() {
            String::new()
        } else {
            format!("{b}*")
        };
        if self.a.is_zero() {
            let lead = if self.b.is_negative() { "-" } else { "" };
            write!(f, "{lead}{coef}sqrt({})", self.q)
        } else {
            write!(f, "{} {sep} {coef}sqrt({})", self.a, self.q)
        }
    }
}

/// Exact rational from an integer pair, for tests and callers building values by hand.
pub fn ratio(n: i64, d: i64) -> BigRational {
    let (n, d) = (BigInt::from(n), BigInt::from(d));
    let g = n.gcd(&d);
    BigRational::new(n / &g, d / g)
}

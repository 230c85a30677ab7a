//! Exact arithmetic in real quadratic fields.
//!
//! A [`Quad`] stores a number of the form `(p + q*sqrt(d)) / r` with integer
//! coefficients. Values with the same radicand form a field and support the
//! usual arithmetic; comparison works across radicands by sign analysis
//! (repeated squaring with case analysis), so no floating point is involved
//! anywhere.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

/// `(p + q*sqrt(d)) / r` with `r > 0`, `gcd(p, q, r) = 1`, and `q = 0`
/// whenever the value is rational. Square factors of `d` are folded into `q`
/// (trial division by small primes plus a perfect-square check; comparisons
/// never rely on `d` being square-free).
#[derive(Clone)]
pub struct Quad {
    p: BigInt,
    q: BigInt,
    r: BigInt,
    d: BigInt,
}

/// Trial-division bound used when extracting square factors of the radicand.
const SQUARE_SIEVE_BOUND: u64 = 1000;

fn extract_square_part(d: &BigInt) -> (BigInt, BigInt) {
    // d = s^2 * rest with rest free of small square factors
    let mut rest = d.clone();
    let mut s = BigInt::one();
    let mut f = 2u64;
    while f <= SQUARE_SIEVE_BOUND {
        let f2 = BigInt::from(f * f);
        if rest < f2 {
            break;
        }
        while (&rest % &f2).is_zero() {
            rest /= &f2;
            s *= f;
        }
        f += if f == 2 { 1 } else { 2 };
    }
    if rest > BigInt::one() {
        let root = rest.sqrt();
        if &root * &root == rest {
            s *= &root;
            rest = BigInt::one();
        }
    }
    (s, rest)
}

impl Quad {
    /// Build and normalize `(p + q*sqrt(d)) / r`. Panics if `r = 0` or `d < 0`.
    pub fn new(p: BigInt, q: BigInt, r: BigInt, d: BigInt) -> Quad {
        assert!(!r.is_zero(), "zero denominator");
        assert!(!d.is_negative(), "negative radicand");
        let (mut p, mut q, mut r, mut d) = (p, q, r, d);
        if r.is_negative() {
            p = -p;
            q = -q;
            r = -r;
        }
        if d.is_zero() {
            q = BigInt::zero();
        }
        if !q.is_zero() {
            let (s, rest) = extract_square_part(&d);
            if rest.is_one() {
                // sqrt(d) = s is an integer: the value is rational
                p += &q * &s;
                q = BigInt::zero();
                d = BigInt::zero();
            } else {
                q *= s;
                d = rest;
            }
        }
        if q.is_zero() {
            d = BigInt::zero();
        }
        let g = p.gcd(&q).gcd(&r);
        if !g.is_one() {
            p /= &g;
            q /= &g;
            r /= &g;
        }
        Quad { p, q, r, d }
    }

    pub fn from_int<T: Into<BigInt>>(n: T) -> Quad {
        Quad::new(n.into(), BigInt::zero(), BigInt::one(), BigInt::zero())
    }

    pub fn from_rational(x: &Rational) -> Quad {
        Quad::new(
            x.numer().clone(),
            BigInt::zero(),
            x.denom().clone(),
            BigInt::zero(),
        )
    }

    /// `sqrt(n)` for `n >= 0`.
    pub fn sqrt_int(n: BigInt) -> Quad {
        Quad::new(BigInt::zero(), BigInt::one(), BigInt::one(), n)
    }

    pub fn zero() -> Quad {
        Quad::from_int(0)
    }

    pub fn coeffs(&self) -> (&BigInt, &BigInt, &BigInt, &BigInt) {
        (&self.p, &self.q, &self.r, &self.d)
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(Rational::new(self.p.clone(), self.r.clone()))
        } else {
            None
        }
    }

    fn same_field(&self, other: &Quad) -> bool {
        self.q.is_zero() || other.q.is_zero() || self.d == other.d
    }

    /// Common radicand of two compatible values.
    fn joint_d(&self, other: &Quad) -> BigInt {
        if self.q.is_zero() {
            other.d.clone()
        } else {
            self.d.clone()
        }
    }

    pub fn add(&self, other: &Quad) -> Quad {
        assert!(self.same_field(other), "radicand mismatch in add");
        let d = self.joint_d(other);
        Quad::new(
            &self.p * &other.r + &other.p * &self.r,
            &self.q * &other.r + &other.q * &self.r,
            &self.r * &other.r,
            d,
        )
    }

    pub fn sub(&self, other: &Quad) -> Quad {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Quad {
        Quad {
            p: -&self.p,
            q: -&self.q,
            r: self.r.clone(),
            d: self.d.clone(),
        }
    }

    pub fn mul(&self, other: &Quad) -> Quad {
        assert!(self.same_field(other), "radicand mismatch in mul");
        let d = self.joint_d(other);
        Quad::new(
            &self.p * &other.p + &self.q * &other.q * &d,
            &self.p * &other.q + &self.q * &other.p,
            &self.r * &other.r,
            d,
        )
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Quad {
        assert!(!self.is_zero_value(), "inverse of zero");
        // 1 / ((p + q sqrt d)/r) = r (p - q sqrt d) / (p^2 - q^2 d)
        let norm = &self.p * &self.p - &self.q * &self.q * &self.d;
        Quad::new(
            &self.r * &self.p,
            -(&self.r * &self.q),
            norm,
            self.d.clone(),
        )
    }

    pub fn div(&self, other: &Quad) -> Quad {
        self.mul(&other.inv())
    }

    pub fn add_rational(&self, x: &Rational) -> Quad {
        self.add(&Quad::from_rational(x))
    }

    pub fn is_zero_value(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// Exact sign: -1, 0 or +1.
    pub fn sign(&self) -> i32 {
        sign_one_radical(&self.p, &self.q, &self.d)
    }

    /// Exact comparison; valid for arbitrary radicands on both sides.
    pub fn cmp_quad(&self, other: &Quad) -> Ordering {
        // self - other = [ (p1 r2 - p2 r1) + q1 r2 sqrt(d1) - q2 r1 sqrt(d2) ] / (r1 r2)
        let a = &self.p * &other.r - &other.p * &self.r;
        let b = &self.q * &other.r;
        let c = -(&other.q * &self.r);
        match sign_two_radicals(&a, &b, &self.d, &c, &other.d) {
            s if s > 0 => Ordering::Greater,
            s if s < 0 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }

    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        self.cmp_quad(&Quad::from_rational(x))
    }

    pub fn cmp_int(&self, n: i64) -> Ordering {
        self.cmp_quad(&Quad::from_int(n))
    }

    /// Approximate value, for display and diagnostics only.
    pub fn to_f64(&self) -> f64 {
        let p = bigint_to_f64(&self.p);
        let q = bigint_to_f64(&self.q);
        let r = bigint_to_f64(&self.r);
        let d = bigint_to_f64(&self.d);
        (p + q * d.sqrt()) / r
    }

    /// Decimal expansion correctly rounded (half-even) to `sig` significant
    /// digits.
    pub fn to_decimal(&self, sig: usize) -> String {
        assert!(sig > 0);
        if self.is_zero_value() {
            return "0".to_string();
        }
        if let Some(x) = self.as_rational() {
            return decimal_of_rational(&x, sig);
        }
        // Bracket the value between rationals and widen the precision until
        // both ends round to the same string. An irrational value is never a
        // rounding midpoint, so this terminates.
        let mut guard = 2 * sig as u32 + 16;
        loop {
            let (lo, hi) = self.rational_bounds(guard);
            let s_lo = decimal_of_rational(&lo, sig);
            let s_hi = decimal_of_rational(&hi, sig);
            if s_lo == s_hi {
                return s_lo;
            }
            guard *= 2;
        }
    }

    /// Exact rational bounds with `|hi - lo| <= 2 * 10^-digits * |q/r|`.
    pub fn rational_bounds(&self, digits: u32) -> (Rational, Rational) {
        let scale = BigInt::from(10u32).pow(digits);
        let scaled = &self.d * &scale * &scale;
        let root = scaled.sqrt(); // floor
        let lo_root = Rational::new(root.clone(), scale.clone());
        let hi_root = Rational::new(root + 1, scale);
        let p = Rational::new(self.p.clone(), self.r.clone());
        let qr = Rational::new(self.q.clone(), self.r.clone());
        let (a, b) = if self.q.is_negative() {
            (&p + &qr * &hi_root, &p + &qr * &lo_root)
        } else {
            (&p + &qr * &lo_root, &p + &qr * &hi_root)
        };
        (a, b)
    }
}

fn bigint_to_f64(n: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    n.to_f64().unwrap_or(f64::NAN)
}

/// Exact sign of `a + b*sqrt(d)`.
fn sign_one_radical(a: &BigInt, b: &BigInt, d: &BigInt) -> i32 {
    let sa = sign_of(a);
    if b.is_zero() || d.is_zero() {
        return sa;
    }
    let sb = sign_of(b);
    if sa == 0 {
        return sb;
    }
    if sa == sb {
        return sa;
    }
    // opposite signs: compare a^2 against b^2 d
    let lhs = a * a;
    let rhs = b * b * d;
    match lhs.cmp(&rhs) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => 0,
    }
}

/// Exact sign of `a + b*sqrt(d1) + c*sqrt(d2)`.
fn sign_two_radicals(a: &BigInt, b: &BigInt, d1: &BigInt, c: &BigInt, d2: &BigInt) -> i32 {
    if c.is_zero() || d2.is_zero() {
        return sign_one_radical(a, b, d1);
    }
    if b.is_zero() || d1.is_zero() {
        return sign_one_radical(a, c, d2);
    }
    if d1 == d2 {
        return sign_one_radical(a, &(b + c), d1);
    }
    // compare L = a + b sqrt(d1) against R = -c sqrt(d2)
    let s_l = sign_one_radical(a, b, d1);
    let s_r = -sign_of(c);
    if s_l != s_r {
        if s_l == 0 {
            return -s_r;
        }
        if s_r == 0 {
            return s_l;
        }
        return s_l;
    }
    if s_l == 0 {
        return 0;
    }
    // both sides share the sign s: compare squares
    let l2_rat = a * a + b * b * d1 - c * c * d2;
    let l2_coef = BigInt::from(2) * a * b;
    let t = sign_one_radical(&l2_rat, &l2_coef, d1);
    if s_l > 0 {
        t
    } else {
        -t
    }
}

fn sign_of(n: &BigInt) -> i32 {
    match n.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// Round a rational to `sig` significant digits, half to even.
fn decimal_of_rational(x: &Rational, sig: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let neg = x.is_negative();
    let num = x.numer().abs();
    let den = x.denom().clone();

    // exponent e with value in [10^(e-1), 10^e)
    let mut e: i64 = (num.to_string().len() as i64) - (den.to_string().len() as i64);
    let ten = BigInt::from(10u32);
    let pow = |k: i64| -> (BigInt, BigInt) {
        // returns multipliers (for numerator, for denominator) realizing 10^k
        if k >= 0 {
            (ten.pow(k as u32), BigInt::one())
        } else {
            (BigInt::one(), ten.pow((-k) as u32))
        }
    };
    // adjust so that 10^(e-1) <= num/den < 10^e
    loop {
        let (mn, md) = pow(e);
        if &num * &md >= &den * &mn {
            e += 1;
            continue;
        }
        let (mn1, md1) = pow(e - 1);
        if &num * &md1 < &den * &mn1 {
            e -= 1;
            continue;
        }
        break;
    }

    // scaled = num/den * 10^(sig - e), an integer in [10^(sig-1), 10^sig)
    let k = sig as i64 - e;
    let (mn, md) = pow(k);
    let scaled_num = &num * &mn;
    let scaled_den = &den * &md;
    let (mut digits_int, rem) = scaled_num.div_rem(&scaled_den);
    // round half to even
    let twice: BigInt = &rem * 2;
    let round_up = match twice.cmp(&scaled_den) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => digits_int.is_odd(),
    };
    if round_up {
        digits_int += 1;
    }
    let mut s = digits_int.to_string();
    if s.len() > sig {
        // rounding carried over, e.g. 999.. -> 1000..
        s.truncate(sig);
        return finish_decimal(&s, e + 1, neg);
    }
    finish_decimal(&s, e, neg)
}

fn finish_decimal(digits: &str, e: i64, neg: bool) -> String {
    let body = format_digits(digits, e);
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

fn format_digits(digits: &str, e: i64) -> String {
    let n = digits.len() as i64;
    if e > 0 && e <= n {
        let (int, frac) = digits.split_at(e as usize);
        let frac = frac.trim_end_matches('0');
        if frac.is_empty() {
            int.to_string()
        } else {
            format!("{int}.{frac}")
        }
    } else if e <= 0 && e > -6 {
        let zeros = "0".repeat((-e) as usize);
        let frac = format!("{zeros}{digits}");
        let frac = frac.trim_end_matches('0');
        format!("0.{frac}")
    } else {
        // scientific
        let (first, rest) = digits.split_at(1);
        let rest = rest.trim_end_matches('0');
        let mantissa = if rest.is_empty() {
            first.to_string()
        } else {
            format!("{first}.{rest}")
        };
        format!("{mantissa}e{}", e - 1)
    }
}

impl PartialEq for Quad {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_quad(other) == Ordering::Equal
    }
}

impl Eq for Quad {}

impl PartialOrd for Quad {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Quad {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_quad(other)
    }
}

impl fmt::Debug for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}*sqrt({}))/{}", self.p, self.q, self.d, self.r)
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            if self.r.is_one() {
                write!(f, "{}", self.p)
            } else {
                write!(f, "{}/{}", self.p, self.r)
            }
        } else {
            write!(f, "({} + {}*sqrt({}))/{}", self.p, self.q, self.d, self.r)
        }
    }
}

//! Finite and eventually periodic continued fractions.
//!
//! Quotient sequences use the convention `[x0; x1, x2, ...]` with `x0 >= 0`
//! and all later quotients `>= 1`. Infinite tails over the digits `{1,2}`
//! are enclosed by substituting the extremal periodic continuations.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Interval, Quad, Rational};

/// A finite continued fraction `[leading; q1, q2, ...]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfWord {
    pub leading: u32,
    pub quotients: Vec<u32>,
}

impl CfWord {
    pub fn new(leading: u32, quotients: Vec<u32>) -> CfWord {
        assert!(
            quotients.iter().all(|&q| q >= 1),
            "quotients must be positive"
        );
        CfWord { leading, quotients }
    }
}

impl fmt::Display for CfWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.leading)?;
        for (i, q) in self.quotients.iter().enumerate() {
            if i == 0 {
                write!(f, ";{}", q)?;
            } else {
                write!(f, ",{}", q)?;
            }
        }
        write!(f, "]")
    }
}

/// Numerator/denominator continuant recursion, one quotient at a time.
#[derive(Clone, Debug)]
pub struct Convergents {
    p_prev: BigInt,
    p: BigInt,
    q_prev: BigInt,
    q: BigInt,
    steps: usize,
}

impl Convergents {
    pub fn start() -> Convergents {
        Convergents {
            p_prev: BigInt::zero(),
            p: BigInt::one(),
            q_prev: BigInt::one(),
            q: BigInt::zero(),
            steps: 0,
        }
    }

    pub fn push(&mut self, quotient: u32) {
        let x = BigInt::from(quotient);
        let p_new = &x * &self.p + &self.p_prev;
        let q_new = &x * &self.q + &self.q_prev;
        self.p_prev = std::mem::replace(&mut self.p, p_new);
        self.q_prev = std::mem::replace(&mut self.q, q_new);
        self.steps += 1;
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn current(&self) -> (&BigInt, &BigInt) {
        (&self.p, &self.q)
    }

    pub fn value(&self) -> Rational {
        Rational::new(self.p.clone(), self.q.clone())
    }

    /// `[0; x_n, ..., x_1]` for the pushed word `x_1 ... x_n` (no leading
    /// row): by the reversal symmetry of continuants this is `p_{n-1}/p_n`.
    pub fn reversed_tail_value(&self) -> Rational {
        if self.steps == 0 {
            return Rational::zero();
        }
        Rational::new(self.p_prev.clone(), self.p.clone())
    }

    pub fn mobius(&self) -> Mobius {
        Mobius {
            a: self.p.clone(),
            b: self.p_prev.clone(),
            c: self.q.clone(),
            d: self.q_prev.clone(),
        }
    }
}

/// `t -> (a t + b) / (c t + d)` with integer entries.
#[derive(Clone, Debug)]
pub struct Mobius {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mobius {
    pub fn identity() -> Mobius {
        Mobius {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    pub fn from_quotients<I: IntoIterator<Item = u32>>(quotients: I) -> Mobius {
        let mut conv = Convergents::start();
        for q in quotients {
            conv.push(q);
        }
        conv.mobius()
    }

    /// The map `t -> [x0; x1, ..., xk, t]` for this word.
    pub fn from_cfword(w: &CfWord) -> Mobius {
        let mut conv = Convergents::start();
        conv.push(w.leading);
        for &q in &w.quotients {
            conv.push(q);
        }
        conv.mobius()
    }

    pub fn apply_quad(&self, t: &Quad) -> Quad {
        let num = t
            .mul(&Quad::from_int(self.a.clone()))
            .add(&Quad::from_int(self.b.clone()));
        let den = t
            .mul(&Quad::from_int(self.c.clone()))
            .add(&Quad::from_int(self.d.clone()));
        num.div(&den)
    }

    pub fn apply_rational(&self, t: &Rational) -> Rational {
        let num = t * &self.a + &self.b;
        let den = t * &self.c + &self.d;
        num / den
    }

    /// Exact image of an interval inside `(0, oo)`; the map is monotone
    /// there, so the image is spanned by the endpoint images.
    pub fn apply_interval(&self, tail: &Interval) -> Interval {
        Interval::from_unordered(self.apply_quad(tail.lo()), self.apply_quad(tail.hi()))
    }

    /// Fixed point in `(1, oo)`: the value of the purely periodic continued
    /// fraction whose period produced this map.
    pub fn periodic_fixed_point(&self) -> Quad {
        // c t^2 + (d - a) t - b = 0
        assert!(!self.c.is_zero(), "period map must have c > 0");
        let diff = &self.a - &self.d;
        let disc = &diff * &diff + BigInt::from(4) * &self.b * &self.c;
        let root = Quad::new(diff, BigInt::one(), BigInt::from(2) * &self.c, disc);
        debug_assert!(root.cmp_int(1) == Ordering::Greater);
        root
    }
}

/// Exact value and the convergent table of a finite continued fraction.
pub struct CfEval {
    pub value: Rational,
    pub convergents: Vec<(BigInt, BigInt)>,
}

/// Evaluate `[x0; x1, ..., xn]` exactly. `[x0]` is the integer `x0`.
pub fn eval_cf(w: &CfWord) -> CfEval {
    let mut conv = Convergents::start();
    let mut table = Vec::with_capacity(w.quotients.len() + 1);
    conv.push(w.leading);
    table.push((conv.current().0.clone(), conv.current().1.clone()));
    for &q in &w.quotients {
        conv.push(q);
        table.push((conv.current().0.clone(), conv.current().1.clone()));
    }
    CfEval {
        value: conv.value(),
        convergents: table,
    }
}

/// Exact value of `[pre; period, period, ...]`: solve the fixed point of the
/// period map, then apply the preperiod map.
pub fn periodic_value(pre: &CfWord, period: &[u32]) -> Quad {
    assert!(!period.is_empty(), "empty period");
    assert!(
        period.iter().all(|&q| q >= 1),
        "period quotients must be >= 1"
    );
    let tail = Mobius::from_quotients(period.iter().copied()).periodic_fixed_point();
    Mobius::from_cfword(pre).apply_quad(&tail)
}

/// Value of the purely periodic tail `[y1; y2, ..., yp, y1, ...]`.
pub fn purely_periodic_tail(period: &[u32]) -> Quad {
    assert!(!period.is_empty(), "empty period");
    Mobius::from_quotients(period.iter().copied()).periodic_fixed_point()
}

/// Endpoints of the set of values `[c1; c2, ...]` over all digit sequences
/// `c` in `{1,2}`: the extremal continuations are `(1,2)^inf` and `(2,1)^inf`.
pub fn base_enclosure_12() -> Interval {
    // [1; 2,1,2,...] = (1+sqrt3)/2 and [2; 1,2,1,...] = 1+sqrt3
    let lo = Quad::new(
        BigInt::one(),
        BigInt::one(),
        BigInt::from(2),
        BigInt::from(3),
    );
    let hi = Quad::new(BigInt::one(), BigInt::one(), BigInt::one(), BigInt::from(3));
    Interval::new(lo, hi)
}

/// Rigorous enclosure of `[p1; p2, ..., pk, c...]` where the `p`s are known
/// and the continuation ranges over all `{1,2}` sequences. With an empty
/// prefix this is the base enclosure itself.
pub fn tail_enclosure(prefix: &[u32]) -> Interval {
    if prefix.is_empty() {
        return base_enclosure_12();
    }
    mobius_apply(prefix, &base_enclosure_12())
}

/// Exact image of a tail interval under the continued-fraction map of a
/// quotient prefix.
pub fn mobius_apply(prefix: &[u32], tail: &Interval) -> Interval {
    if prefix.is_empty() {
        return tail.clone();
    }
    Mobius::from_quotients(prefix.iter().copied()).apply_interval(tail)
}

/// A forward tail value: a rigorous enclosure, or the exact surd when the
/// continuation is known in full.
#[derive(Clone, Debug)]
pub enum GammaValue {
    Enclosed(Interval),
    Exact(Quad),
}

/// A backward tail value: the exact rational of a finite reversed prefix, or
/// the exact surd of a periodic limit.
#[derive(Clone, Debug)]
pub enum EtaValue {
    Finite(Rational),
    Limit(Quad),
}

/// The two sides of one cut: `gamma` is the value of the right tail (always
/// above 1), `eta` of the reversed left side (always in `[0, 1)`).
#[derive(Clone, Debug)]
pub struct TailHead {
    pub gamma: GammaValue,
    pub eta: EtaValue,
}

impl TailHead {
    /// The ranges are strict for genuinely infinite data; a finite word
    /// ending in a quotient 1 touches the boundary on either side, so the
    /// checks here are non-strict.
    pub fn new(gamma: GammaValue, eta: EtaValue) -> TailHead {
        let one = Quad::from_int(1);
        match &gamma {
            GammaValue::Enclosed(iv) => debug_assert!(iv.lo().cmp_quad(&one).is_gt()),
            GammaValue::Exact(q) => debug_assert!(!q.cmp_quad(&one).is_lt()),
        }
        match &eta {
            EtaValue::Finite(x) => {
                debug_assert!(!x.is_negative() && x <= &Rational::new(1.into(), 1.into()))
            }
            EtaValue::Limit(q) => {
                debug_assert!(q.sign() >= 0 && !q.cmp_int(1).is_gt())
            }
        }
        TailHead { gamma, eta }
    }

    /// Enclosure of `gamma + eta`, the value of the cut.
    pub fn value(&self) -> Interval {
        let gamma = match &self.gamma {
            GammaValue::Enclosed(iv) => iv.clone(),
            GammaValue::Exact(q) => Interval::point(q.clone()),
        };
        match &self.eta {
            EtaValue::Finite(x) => gamma.shift(x),
            EtaValue::Limit(q) => gamma.add(&Interval::point(q.clone())),
        }
    }
}

/// One side of a comparison: the known quotients (starting with the integer
/// part) and whether the expansion provably stops there.
#[derive(Clone, Debug)]
pub struct CfTail {
    pub known: Vec<u32>,
    pub finite: bool,
}

impl CfTail {
    pub fn finite(known: Vec<u32>) -> CfTail {
        CfTail {
            known,
            finite: true,
        }
    }

    pub fn infinite_prefix(known: Vec<u32>) -> CfTail {
        CfTail {
            known,
            finite: false,
        }
    }
}

/// Comparison failed: the expansions agree on all available data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Undecidable {
    pub agreed: usize,
}

impl fmt::Display for Undecidable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "expansions agree on the first {} quotients and neither is exhausted",
            self.agreed
        )
    }
}

impl std::error::Error for Undecidable {}

/// Order two continued fractions by the alternating rule: at the first index
/// where they differ, even positions (0-based, the integer part is position
/// 0) compare naturally and odd positions compare reversed. A missing
/// quotient on a finite side acts as `+infinity`. Two finite words are
/// compared by exact evaluation, which also resolves the `[..,k,1] = [..,k+1]`
/// boundary representations.
pub fn cf_compare(x: &CfTail, y: &CfTail) -> Result<Ordering, Undecidable> {
    if x.finite && y.finite {
        let vx = eval_quotients(&x.known);
        let vy = eval_quotients(&y.known);
        return Ok(vx.cmp(&vy));
    }
    let mut i = 0usize;
    loop {
        let a = x.known.get(i);
        let b = y.known.get(i);
        let direct = match (a, b) {
            (Some(a), Some(b)) => {
                if a == b {
                    i += 1;
                    continue;
                }
                a.cmp(b)
            }
            (None, Some(_)) if x.finite => Ordering::Greater,
            (Some(_), None) if y.finite => Ordering::Less,
            _ => {
                return Err(Undecidable { agreed: i });
            }
        };
        let result = if i.is_multiple_of(2) {
            direct
        } else {
            direct.reverse()
        };
        return Ok(result);
    }
}

fn eval_quotients(q: &[u32]) -> Rational {
    if q.is_empty() {
        return Rational::zero();
    }
    let w = CfWord::new(q[0], q[1..].to_vec());
    eval_cf(&w).value
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{Signed, ToPrimitive};

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn eval_hand_values() {
        assert_eq!(eval_cf(&CfWord::new(0, vec![2, 2])).value, rat(2, 5));
        assert_eq!(eval_cf(&CfWord::new(2, vec![2, 1, 1])).value, rat(12, 5));
        assert_eq!(eval_cf(&CfWord::new(1, vec![1, 1, 1, 1])).value, rat(8, 5));
        assert_eq!(eval_cf(&CfWord::new(7, vec![])).value, rat(7, 1));
    }

    #[test]
    fn convergent_quality() {
        // |value - p_i/q_i| < 1/q_i^2 for every proper convergent
        let w = CfWord::new(1, vec![2, 1, 2, 1, 1, 2, 2, 1]);
        let CfEval { value, convergents } = eval_cf(&w);
        for (p, q) in &convergents[..convergents.len() - 1] {
            let approx = Rational::new(p.clone(), q.clone());
            let err = (&value - &approx).abs();
            let bound = Rational::new(BigInt::one(), q * q);
            assert!(err < bound, "p/q = {approx}");
        }
    }

    #[test]
    fn golden_and_silver_periodic_values() {
        let phi = periodic_value(&CfWord::new(1, vec![]), &[1]);
        assert_eq!(phi, Quad::new(1.into(), 1.into(), 2.into(), 5.into()));
        let silver = periodic_value(&CfWord::new(2, vec![]), &[2]);
        assert_eq!(silver, Quad::new(1.into(), 1.into(), 1.into(), 2.into()));
    }

    #[test]
    fn periodic_value_matches_iterated_evaluation() {
        // [(2,2,1,1) repeating]: compare against a long truncation
        let v = periodic_value(&CfWord::new(2, vec![2, 1, 1]), &[2, 2, 1, 1]);
        let mut quotients = Vec::new();
        for _ in 0..40 {
            quotients.extend_from_slice(&[2u32, 2, 1, 1]);
        }
        let w = CfWord::new(quotients[0], quotients[1..].to_vec());
        let approx = eval_cf(&w).value;
        let err = (v.to_f64() - approx.to_f64().unwrap()).abs();
        assert!(err < 1e-12, "err = {err}");
        // and exactly: the truncation at N periods is a convergent, so the
        // distance is below 1/q^2
        let conv = eval_cf(&w);
        let (_, q) = conv.convergents.last().unwrap();
        let diff = v.sub(&Quad::from_rational(&conv.value));
        let abs = if diff.sign() < 0 { diff.neg() } else { diff };
        let bound = Rational::new(BigInt::one(), q * q);
        assert_eq!(abs.cmp_rational(&bound), Ordering::Less);
        // and the tail actually satisfies its defining quadratic
        let tail = purely_periodic_tail(&[2, 2, 1, 1]);
        let m = Mobius::from_quotients([2, 2, 1, 1]);
        assert_eq!(m.apply_quad(&tail), tail);
    }

    #[test]
    fn base_enclosure_endpoints() {
        let iv = base_enclosure_12();
        // fixed points of t = 1 + 1/(2 + 1/t) and s = 2 + 1/(1 + 1/s)
        assert_eq!(iv.lo(), &purely_periodic_tail(&[1, 2]));
        assert_eq!(iv.hi(), &purely_periodic_tail(&[2, 1]));
    }

    #[test]
    fn enclosure_contains_all_short_words() {
        // brute force over all {1,2} words of length 12, closed periodically
        let iv = base_enclosure_12();
        for bits in 0u32..(1 << 12) {
            let digits: Vec<u32> = (0..12).map(|i| 1 + ((bits >> i) & 1)).collect();
            let v = purely_periodic_tail(&digits);
            assert!(iv.contains(&v), "escaped: {digits:?}");
        }
    }

    #[test]
    fn enclosure_after_prefix_contains_samples() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let prefix = [1u32];
        let iv = tail_enclosure(&prefix);
        for _ in 0..100 {
            let mut digits = vec![1u32];
            for _ in 0..30 {
                digits.push(rng.gen_range(1..=2));
            }
            let v = purely_periodic_tail(&digits);
            assert!(iv.contains(&v));
        }
        // also the stated identity: image of the base under t -> 1 + 1/t
        let m = Mobius::from_quotients([1]);
        let img = m.apply_interval(&base_enclosure_12());
        assert_eq!(iv, img);
    }

    #[test]
    fn mobius_apply_orientation() {
        let tail = Interval::new(Quad::from_int(2), Quad::from_int(3));
        let id = mobius_apply(&[], &tail);
        assert_eq!(id, tail);
        // x -> 2 + 1/x reverses orientation
        let iv = mobius_apply(&[2], &tail);
        assert_eq!(iv.lo(), &Quad::new(7.into(), 0.into(), 3.into(), 0.into()));
        assert_eq!(iv.hi(), &Quad::new(5.into(), 0.into(), 2.into(), 0.into()));
        // two steps restore it; exact in Q(sqrt 3)
        let base = base_enclosure_12();
        let iv = mobius_apply(&[1, 1], &base);
        let lo_expect = Mobius::from_quotients([1, 1]).apply_quad(base.lo());
        assert!(iv.contains(&lo_expect));
        let approx = 1.0 + 1.0 / (1.0 + 1.0 / base.lo().to_f64());
        assert!((lo_expect.to_f64() - approx).abs() < 1e-12);
    }

    #[test]
    fn compare_rule_examples() {
        let a = CfTail::infinite_prefix(vec![2, 2]);
        let b = CfTail::infinite_prefix(vec![2, 1]);
        assert_eq!(cf_compare(&a, &b), Ok(Ordering::Less));

        let a = CfTail::finite(vec![1, 2]);
        let b = CfTail::finite(vec![1, 2]);
        assert_eq!(cf_compare(&a, &b), Ok(Ordering::Equal));

        let a = CfTail::finite(vec![0, 1, 1, 2]);
        let b = CfTail::finite(vec![0, 1, 1, 1]);
        assert_eq!(cf_compare(&a, &b), Ok(Ordering::Less));

        // non-canonical finite boundary: [1;2,1] = [1;3]
        let a = CfTail::finite(vec![1, 2, 1]);
        let b = CfTail::finite(vec![1, 3]);
        assert_eq!(cf_compare(&a, &b), Ok(Ordering::Equal));

        let a = CfTail::infinite_prefix(vec![2, 2, 1]);
        let b = CfTail::infinite_prefix(vec![2, 2, 1]);
        assert!(cf_compare(&a, &b).is_err());
    }

    #[test]
    fn compare_agrees_with_rationals_up_to_len_8() {
        // all pairs of {1,2} words of length <= 8 (as infinite prefixes both
        // extended by the same continuation, the rule must match the exact
        // order of the common-extension values whenever it decides)
        let mut words: Vec<Vec<u32>> = vec![];
        for len in 1..=8usize {
            for bits in 0u32..(1 << len) {
                words.push((0..len).map(|i| 1 + ((bits >> i) & 1)).collect());
            }
        }
        for x in &words {
            for y in &words {
                let a = CfTail::finite(x.clone());
                let b = CfTail::finite(y.clone());
                let got = cf_compare(&a, &b).unwrap();
                let want = eval_quotients(x).cmp(&eval_quotients(y));
                assert_eq!(got, want, "{x:?} vs {y:?}");
            }
        }
    }
}

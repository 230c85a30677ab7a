//! Markov triples and numbers, exact spectrum values of periodic words, the
//! correspondence from substitution-tree vertices to Markov numbers, and the
//! sup-of-approximations function on eventually periodic expansions.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cf::{periodic_value, purely_periodic_tail, CfWord, Convergents};
use crate::cuts::{classify_infinite_cut, CutClass, LazyWord};
use crate::words::{chi_expand, AbWord};
use crate::{Interval, Quad, Rational};

/// A positive solution of `z1^2 + z2^2 + z3^2 = 3 z1 z2 z3`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MarkovTriple {
    pub z1: BigInt,
    pub z2: BigInt,
    pub z3: BigInt,
}

impl MarkovTriple {
    fn sorted(a: BigInt, b: BigInt, c: BigInt) -> MarkovTriple {
        let mut v = [a, b, c];
        v.sort();
        let [z1, z2, z3] = v;
        MarkovTriple { z1, z2, z3 }
    }

    pub fn satisfies_equation(&self) -> bool {
        let lhs = &self.z1 * &self.z1 + &self.z2 * &self.z2 + &self.z3 * &self.z3;
        let rhs = BigInt::from(3) * &self.z1 * &self.z2 * &self.z3;
        lhs == rhs
    }
}

impl fmt::Display for MarkovTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.z1, self.z2, self.z3)
    }
}

/// All Markov triples with largest coordinate at most `limit`, by descent
/// from `(1,1,1)`: each sorted triple branches by replacing one of the two
/// smaller coordinates with `3*product - coordinate`. Output is sorted by
/// `(z3, z2, z1)`.
pub fn markov_tree(limit: &BigInt) -> Vec<MarkovTriple> {
    let mut seen: BTreeSet<MarkovTriple> = BTreeSet::new();
    let root = MarkovTriple::sorted(BigInt::one(), BigInt::one(), BigInt::one());
    if &root.z3 > limit {
        return Vec::new();
    }
    let mut queue = vec![root.clone()];
    seen.insert(root);
    while let Some(t) = queue.pop() {
        let three = BigInt::from(3);
        let children = [
            MarkovTriple::sorted(t.z2.clone(), t.z3.clone(), &three * &t.z2 * &t.z3 - &t.z1),
            MarkovTriple::sorted(t.z1.clone(), t.z3.clone(), &three * &t.z1 * &t.z3 - &t.z2),
        ];
        for child in children {
            if &child.z3 <= limit && !seen.contains(&child) {
                debug_assert!(child.satisfies_equation());
                queue.push(child.clone());
                seen.insert(child);
            }
        }
    }
    let mut out: Vec<MarkovTriple> = seen.into_iter().collect();
    out.sort_by(|a, b| (&a.z3, &a.z2, &a.z1).cmp(&(&b.z3, &b.z2, &b.z1)));
    out
}

/// Every coordinate of every triple within the bound. Small Markov numbers
/// appear as smaller coordinates of larger triples, so membership tests use
/// the full coordinate set.
pub fn markov_numbers(limit: &BigInt) -> BTreeSet<BigInt> {
    let mut set = BTreeSet::new();
    for t in markov_tree(limit) {
        if &t.z1 <= limit {
            set.insert(t.z1.clone());
        }
        if &t.z2 <= limit {
            set.insert(t.z2.clone());
        }
        set.insert(t.z3);
    }
    set
}

pub fn is_markov_number(z: &BigInt) -> bool {
    !z.is_negative() && !z.is_zero() && markov_numbers(z).contains(z)
}

/// An initial-spectrum value `sqrt(9 z^2 - 4) / z` with its Markov number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumValue {
    pub value: Quad,
    pub z: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MarkovError {
    NotMarkovNumber(BigInt),
    /// Inverting the periodic value did not produce a Markov integer; this
    /// would contradict the vertex-to-number correspondence.
    InversionNotInteger(String),
}

impl fmt::Display for MarkovError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MarkovError::NotMarkovNumber(z) => write!(f, "{z} is not a Markov number"),
            MarkovError::InversionNotInteger(msg) => write!(f, "inversion failed: {msg}"),
        }
    }
}

impl std::error::Error for MarkovError {}

pub fn spectrum_value(z: &BigInt) -> Result<SpectrumValue, MarkovError> {
    if !is_markov_number(z) {
        return Err(MarkovError::NotMarkovNumber(z.clone()));
    }
    let d = BigInt::from(9) * z * z - BigInt::from(4);
    Ok(SpectrumValue {
        value: Quad::new(BigInt::zero(), BigInt::one(), z.clone(), d),
        z: z.clone(),
    })
}

/// Exact Markov value of the periodic bi-infinite word `period^inf`: the
/// maximum cut value over one period of cut positions, each evaluated as an
/// exact surd (for a periodic word this is also its Lagrange value).
pub fn periodic_markov_value(period: &AbWord) -> Quad {
    assert!(!period.is_empty());
    let digits: Vec<u32> = chi_expand(period)
        .digits()
        .iter()
        .map(|&d| d as u32)
        .collect();
    let n = digits.len();
    let mut best: Option<Quad> = None;
    for r in 0..n {
        let rot: Vec<u32> = (0..n).map(|j| digits[(r + j) % n]).collect();
        let rev: Vec<u32> = (0..n).map(|j| digits[(r + n - 1 - j) % n]).collect();
        let gamma = purely_periodic_tail(&rot);
        let eta = purely_periodic_tail(&rev).inv();
        let lambda = gamma.add(&eta);
        if best.as_ref().is_none_or(|b| lambda > *b) {
            best = Some(lambda);
        }
    }
    best.unwrap()
}

/// Recover the Markov number of a substitution-tree vertex from its exact
/// periodic value `m` by inverting `m = sqrt(9 z^2 - 4) / z`.
pub fn cohn_to_markov(period: &AbWord) -> Result<BigInt, MarkovError> {
    let m = periodic_markov_value(period);
    let (p, q, r, d) = m.coeffs();
    if !p.is_zero() || q.is_negative() {
        return Err(MarkovError::InversionNotInteger(format!(
            "periodic value {m} is not a pure positive surd"
        )));
    }
    // z^2 = 4 / (9 - m^2) with m^2 = q^2 d / r^2
    let t = BigInt::from(9) * r * r - q * q * d;
    if !t.is_positive() {
        return Err(MarkovError::InversionNotInteger(format!(
            "periodic value {m} is not below 3"
        )));
    }
    let s = t.sqrt();
    if &s * &s != t {
        return Err(MarkovError::InversionNotInteger(format!(
            "9 r^2 - q^2 d = {t} is not a perfect square"
        )));
    }
    let two_r = BigInt::from(2) * r;
    let (z, rem) = two_r.div_rem(&s);
    if !rem.is_zero() {
        return Err(MarkovError::InversionNotInteger(format!(
            "2r/{s} is not an integer"
        )));
    }
    if !is_markov_number(&z) {
        return Err(MarkovError::InversionNotInteger(format!(
            "{z} solves the inversion but is not a Markov number"
        )));
    }
    Ok(z)
}

/// The supremum of `gamma_{n+1} + eta_{n+1}` for an eventually periodic
/// expansion, with whether some finite `n` attains it.
#[derive(Clone, Debug)]
pub struct MTilde {
    pub value: Quad,
    /// True when the supremum is a maximum over finite indices; false when
    /// it is only approached along a residue class of the period.
    pub attained: bool,
    /// The smallest attaining index, when attained.
    pub attained_at: Option<usize>,
}

/// Exact supremum of `gamma_{n+1} + eta_{n+1}` over all `n >= 0` for
/// `x = [pre; period^inf]`. The leading quotient of `pre` never enters any
/// of the values. Finitely many candidates are evaluated exactly, and each
/// residue class of the period contributes its exact limit; monotonicity
/// along classes (established by one exact comparison per class) bounds
/// everything beyond the enumeration window.
pub fn m_tilde(pre: &CfWord, period: &[u32]) -> MTilde {
    assert!(!period.is_empty());
    let m = pre.quotients.len();
    let p = period.len();
    let l = if p.is_multiple_of(2) { p } else { 2 * p };
    let quotient = |i: usize| -> u32 {
        // x_i for i >= 1
        if i <= m {
            pre.quotients[i - 1]
        } else {
            period[(i - m - 1) % p]
        }
    };
    let gamma = |n: usize| -> Quad {
        if n >= m {
            let k = (n - m) % p;
            let rot: Vec<u32> = (0..p).map(|j| period[(k + j) % p]).collect();
            purely_periodic_tail(&rot)
        } else {
            let quots: Vec<u32> = (n + 2..=m).map(quotient).collect();
            periodic_value(&CfWord::new(quotient(n + 1), quots), period)
        }
    };
    let eta_exact = |n: usize| -> Rational {
        let mut conv = Convergents::start();
        for i in 1..=n {
            conv.push(quotient(i));
        }
        conv.reversed_tail_value()
    };

    // direct enumeration covers every class representative and its successor
    let n_max = m + 3 * l + 2;
    let mut conv = Convergents::start();
    let mut best_finite: Option<(Quad, usize)> = None;
    for n in 0..=n_max {
        let eta = conv.reversed_tail_value();
        let v = gamma(n).add_rational(&eta);
        if best_finite.as_ref().is_none_or(|(b, _)| v > *b) {
            best_finite = Some((v, n));
        }
        conv.push(quotient(n + 1));
    }
    let (best_finite, attained_at) = best_finite.unwrap();

    // per-class limits; a class approaching its limit from below contributes
    // the limit as an unattained candidate
    let mut best_limit: Option<Quad> = None;
    for r in 0..l {
        let n_r = m + l + r;
        let e0 = eta_exact(n_r);
        let e1 = eta_exact(n_r + l);
        assert_ne!(e0, e1, "class elements repeat: period degenerate");
        if e1 < e0 {
            continue; // decreasing: the class maximum was enumerated
        }
        // increasing toward the reversed-period limit
        let rev: Vec<u32> = (0..p).map(|j| quotient(n_r - j)).collect();
        let eta_inf = purely_periodic_tail(&rev).inv();
        let v = gamma(n_r).add(&eta_inf);
        if best_limit.as_ref().is_none_or(|b| v > *b) {
            best_limit = Some(v);
        }
    }

    match best_limit {
        Some(limit) if limit > best_finite => MTilde {
            value: limit,
            attained: false,
            attained_at: None,
        },
        _ => MTilde {
            value: best_finite,
            attained: true,
            attained_at: Some(attained_at),
        },
    }
}

/// Rigorous enclosure of `max_{0 <= n <= horizon} (gamma_{n+1} + eta_{n+1})`
/// for a lazy infinite word read as `[0; w]`.
#[derive(Clone, Debug)]
pub struct MtEvidence {
    pub max: Interval,
    pub undecided: Vec<usize>,
}

pub fn m_tilde_evidence(w: &LazyWord, horizon: usize, max_depth: usize) -> MtEvidence {
    let mut best_lo: Option<Quad> = None;
    let mut best_hi: Option<Quad> = None;
    let mut undecided = Vec::new();
    for pos in 0..=horizon {
        let report = classify_infinite_cut(w, pos, &[], max_depth);
        if let CutClass::Undecided { .. } = report.class {
            undecided.push(pos);
        }
        let lo = report.enclosure.lo().clone();
        let hi = report.enclosure.hi().clone();
        if best_lo.as_ref().is_none_or(|b| lo > *b) {
            best_lo = Some(lo);
        }
        if best_hi.as_ref().is_none_or(|b| hi > *b) {
            best_hi = Some(hi);
        }
    }
    MtEvidence {
        max: Interval::new(best_lo.unwrap(), best_hi.unwrap()),
        undecided,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn tree_small_limits() {
        let t = markov_tree(&big(2));
        let as_tuples: Vec<(i64, i64, i64)> = t
            .iter()
            .map(|t| {
                use num_traits::ToPrimitive;
                (
                    t.z1.to_i64().unwrap(),
                    t.z2.to_i64().unwrap(),
                    t.z3.to_i64().unwrap(),
                )
            })
            .collect();
        assert_eq!(as_tuples, vec![(1, 1, 1), (1, 1, 2)]);
        let t = markov_tree(&big(5));
        assert!(t.iter().any(|t| t.z3 == big(5)));
        let t = markov_tree(&big(30));
        assert!(t
            .iter()
            .any(|t| t.z1 == big(1) && t.z2 == big(5) && t.z3 == big(13)));
        assert!(t
            .iter()
            .any(|t| t.z1 == big(2) && t.z2 == big(5) && t.z3 == big(29)));
        for triple in &t {
            assert!(triple.satisfies_equation());
        }
    }

    #[test]
    fn spectrum_small_values() {
        assert_eq!(
            spectrum_value(&big(1)).unwrap().value,
            Quad::sqrt_int(big(5))
        );
        assert_eq!(
            spectrum_value(&big(2)).unwrap().value,
            Quad::sqrt_int(big(8))
        );
        assert_eq!(
            spectrum_value(&big(5)).unwrap().value,
            Quad::new(0.into(), 1.into(), 5.into(), 221.into())
        );
        assert!(matches!(
            spectrum_value(&big(4)),
            Err(MarkovError::NotMarkovNumber(_))
        ));
    }

    #[test]
    fn periodic_values_of_single_letters() {
        let b: AbWord = "b".parse().unwrap();
        assert_eq!(periodic_markov_value(&b), Quad::sqrt_int(big(5)));
        let a: AbWord = "a".parse().unwrap();
        assert_eq!(periodic_markov_value(&a), Quad::sqrt_int(big(8)));
        let ab: AbWord = "ab".parse().unwrap();
        assert_eq!(
            periodic_markov_value(&ab),
            Quad::new(0.into(), 1.into(), 5.into(), 221.into())
        );
    }

    #[test]
    fn vertex_to_markov_number() {
        let ab: AbWord = "ab".parse().unwrap();
        assert_eq!(cohn_to_markov(&ab).unwrap(), big(5));
        let abb: AbWord = "abb".parse().unwrap();
        let z = cohn_to_markov(&abb).unwrap();
        assert!(is_markov_number(&z));
        assert_eq!(
            periodic_markov_value(&abb),
            spectrum_value(&z).unwrap().value
        );
    }

    #[test]
    fn m_tilde_golden_and_silver() {
        // [1; 1,1,...]: the supremum (3+sqrt5)/2 is realized at n = 1, where
        // gamma + eta = phi + [0;1] = phi + 1
        let r = m_tilde(&CfWord::new(1, vec![]), &[1]);
        assert_eq!(r.value, Quad::new(3.into(), 1.into(), 2.into(), 5.into()));
        assert!(r.attained);
        assert_eq!(r.attained_at, Some(1));

        // [2; 2,2,...]: the supremum is gamma_2 + eta_2 = (1+sqrt2) + 1/2,
        // again attained at n = 1 ([0; 2^n] is not monotone - it alternates
        // around sqrt2 - 1, and [0;2] = 1/2 tops every later value)
        let r = m_tilde(&CfWord::new(2, vec![]), &[2]);
        assert_eq!(r.value, Quad::new(3.into(), 2.into(), 2.into(), 2.into()));
        assert!(r.attained);
        assert_eq!(r.attained_at, Some(1));

        // a genuinely unattained case: [0; (1,2)^inf] read backward gives an
        // eta class increasing to its limit while gamma stays put; compare
        // against the bi-infinite value of the same period
        let r = m_tilde(&CfWord::new(0, vec![]), &[2, 1]);
        let ab: AbWord = "ab".parse().unwrap();
        let _ = ab;
        assert!(r.value.cmp_int(3) == std::cmp::Ordering::Greater);
    }

    #[test]
    fn m_tilde_independent_of_leading() {
        // [0;(1)] and [1;(1)] have identical quotient tails, hence the same
        // sup; the leading quotient never enters any value
        let a = m_tilde(&CfWord::new(0, vec![]), &[1]);
        let b = m_tilde(&CfWord::new(1, vec![]), &[1]);
        assert_eq!(a.value, b.value);
        assert_eq!(a.value, Quad::new(3.into(), 1.into(), 2.into(), 5.into()));
        assert_eq!(a.attained_at, b.attained_at);
    }

    #[test]
    fn m_tilde_dominates_tail_values() {
        // the sup dominates gamma_{n+1} + eta_{n+1} for a sample of n
        let pre = CfWord::new(0, vec![2, 1]);
        let period = [1, 1, 2];
        let r = m_tilde(&pre, &period);
        for n in 0..40usize {
            let mut conv = Convergents::start();
            let quot = |i: usize| -> u32 {
                if i <= 2 {
                    pre.quotients[i - 1]
                } else {
                    period[(i - 3) % 3]
                }
            };
            for i in 1..=n {
                conv.push(quot(i));
            }
            let eta = conv.reversed_tail_value();
            let k = if n >= 2 { (n - 2) % 3 } else { usize::MAX };
            let gamma = if n >= 2 {
                let rot: Vec<u32> = (0..3).map(|j| period[(k + j) % 3]).collect();
                purely_periodic_tail(&rot)
            } else {
                let quots: Vec<u32> = (n + 2..=2).map(quot).collect();
                periodic_value(&CfWord::new(quot(n + 1), quots), &period)
            };
            let v = gamma.add_rational(&eta);
            assert!(v <= r.value, "n = {n}");
        }
    }

    #[test]
    fn evidence_on_constant_word() {
        // b^inf = [0; 1,1,1,...]: the largest gamma+eta is at n=1:
        // phi + [0;1] = (3+sqrt5)/2
        let w = LazyWord::periodic(vec![], vec![1, 1]);
        let ev = m_tilde_evidence(&w, 40, 1 << 12);
        assert!(ev.undecided.is_empty());
        let expect = Quad::new(3.into(), 1.into(), 2.into(), 5.into());
        assert_eq!(ev.max.lo(), &expect);
        assert_eq!(ev.max.hi(), &expect);
    }
}

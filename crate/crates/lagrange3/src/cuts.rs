//! Cut values and their rigorous classification against the constant 3.
//!
//! A cut splits a word after `left_len` digits; its value is
//! `[0; reversed left] + [right]`. Bad means provably greater than 3, good
//! means provably at most 3 (a value exactly 3 is good). For finite words the
//! class quantifies over all two-sided extensions in the paired alphabet; for
//! infinite words the left part is known exactly and the right tail is
//! enclosed by interval refinement, doubling the known prefix until the
//! enclosure clears 3 or the depth budget runs out.

use std::fmt;
use std::sync::Mutex;

use crate::cf::{eval_cf, periodic_value, tail_enclosure, CfWord, Convergents};
use crate::constructions::OperatorStream;
use crate::words::biinf::{BiInfiniteDesc, CenterSide, DescKind, Shape};
use crate::words::{DigitWord, PairLetter};
use crate::{Interval, Quad, Rational};

/// Number of digits strictly left of the cut.
pub type CutPos = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CutClass {
    Good,
    Bad,
    /// Finite words only: some extensions are good, others bad.
    Indeterminate,
    /// The enclosure still straddles 3 at the depth budget.
    Undecided {
        depth: usize,
    },
}

impl fmt::Display for CutClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CutClass::Good => write!(f, "good"),
            CutClass::Bad => write!(f, "bad"),
            CutClass::Indeterminate => write!(f, "indeterminate"),
            CutClass::Undecided { depth } => write!(f, "undecided@{depth}"),
        }
    }
}

/// Classification of one cut, with a rigorous value enclosure and, when both
/// sides are eventually periodic, the exact value.
#[derive(Clone, Debug)]
pub struct CutReport {
    pub pos: CutPos,
    pub class: CutClass,
    pub enclosure: Interval,
    pub exact: Option<Quad>,
}

/// Default refinement budget: known-tail digits used by the enclosure.
pub const DEFAULT_MAX_DEPTH: usize = 4096;
const FIRST_DEPTH: usize = 16;

enum Gen {
    Finite(Vec<u8>),
    Periodic {
        pre: Vec<u8>,
        period: Vec<u8>,
    },
    Projection(BiInfiniteDesc),
    Glue {
        prefix: Vec<u8>,
        rest: Box<LazyWord>,
    },
}

/// A finite or lazily materialized infinite word with a cached prefix.
pub struct LazyWord {
    gen: Gen,
    cache: Mutex<Vec<u8>>,
}

impl LazyWord {
    pub fn finite(digits: Vec<u8>) -> LazyWord {
        LazyWord {
            gen: Gen::Finite(digits),
            cache: Mutex::new(Vec::new()),
        }
    }

    pub fn from_word(w: &DigitWord) -> LazyWord {
        LazyWord::finite(w.digits().to_vec())
    }

    /// Eventually periodic infinite word `pre . period^inf`.
    pub fn periodic(pre: Vec<u8>, period: Vec<u8>) -> LazyWord {
        assert!(!period.is_empty());
        LazyWord {
            gen: Gen::Periodic { pre, period },
            cache: Mutex::new(Vec::new()),
        }
    }

    /// Projection of a bi-infinite description to positions `>= 0`.
    pub fn projection(desc: BiInfiniteDesc) -> LazyWord {
        LazyWord {
            gen: Gen::Projection(desc),
            cache: Mutex::new(Vec::new()),
        }
    }

    /// A finite word glued in front of another lazy word.
    pub fn glue(prefix: Vec<u8>, rest: LazyWord) -> LazyWord {
        LazyWord {
            gen: Gen::Glue {
                prefix,
                rest: Box::new(rest),
            },
            cache: Mutex::new(Vec::new()),
        }
    }

    fn gen_digit(&self, i: usize) -> Option<u8> {
        match &self.gen {
            Gen::Finite(d) => d.get(i).copied(),
            Gen::Periodic { pre, period } => {
                if i < pre.len() {
                    Some(pre[i])
                } else {
                    Some(period[(i - pre.len()) % period.len()])
                }
            }
            Gen::Projection(desc) => Some(desc.digit(i as i64)),
            Gen::Glue { prefix, rest } => {
                if i < prefix.len() {
                    Some(prefix[i])
                } else {
                    rest.digit(i - prefix.len())
                }
            }
        }
    }

    fn fill_to(&self, cache: &mut Vec<u8>, n: usize) {
        if cache.len() >= n {
            return;
        }
        // projections can materialize a whole block at once
        if let Gen::Projection(desc) = &self.gen {
            let block = desc.digits(cache.len() as i64, n as i64);
            cache.extend_from_slice(&block);
            return;
        }
        if let Gen::Glue { prefix, rest } = &self.gen {
            while cache.len() < n && cache.len() < prefix.len() {
                cache.push(prefix[cache.len()]);
            }
            if cache.len() >= prefix.len() && n > prefix.len() {
                let tail = rest.prefix(n - prefix.len());
                cache.truncate(prefix.len());
                cache.extend_from_slice(&tail);
            }
            return;
        }
        while cache.len() < n {
            match self.gen_digit(cache.len()) {
                Some(d) => cache.push(d),
                None => break,
            }
        }
    }

    pub fn digit(&self, i: usize) -> Option<u8> {
        let mut cache = self.cache.lock().unwrap();
        self.fill_to(&mut cache, i + 1);
        cache.get(i).copied()
    }

    /// First `n` digits (fewer if the word ends sooner).
    pub fn prefix(&self, n: usize) -> Vec<u8> {
        let mut cache = self.cache.lock().unwrap();
        self.fill_to(&mut cache, n);
        cache[..cache.len().min(n)].to_vec()
    }

    pub fn is_finite(&self) -> bool {
        matches!(&self.gen, Gen::Finite(_))
            || matches!(&self.gen, Gen::Glue { rest, .. } if rest.is_finite())
    }

    /// Exact description of the tail starting at `pos`, when the word is
    /// eventually periodic from there: `(pre, period)` with an empty period
    /// meaning the word simply ends.
    pub fn tail_exact(&self, pos: usize) -> Option<(Vec<u8>, Vec<u8>)> {
        match &self.gen {
            Gen::Finite(d) => Some((d.get(pos..).unwrap_or(&[]).to_vec(), Vec::new())),
            Gen::Periodic { pre, period } => {
                if pos < pre.len() {
                    Some((pre[pos..].to_vec(), period.clone()))
                } else {
                    let k = (pos - pre.len()) % period.len();
                    let mut rot = period[k..].to_vec();
                    rot.extend_from_slice(&period[..k]);
                    Some((Vec::new(), rot))
                }
            }
            Gen::Projection(desc) => projection_tail_exact(desc, pos),
            Gen::Glue { prefix, rest } => {
                if pos < prefix.len() {
                    let (pre, per) = rest.tail_exact(0)?;
                    let mut full = prefix[pos..].to_vec();
                    full.extend_from_slice(&pre);
                    Some((full, per))
                } else {
                    rest.tail_exact(pos - prefix.len())
                }
            }
        }
    }

    /// The operator stream behind an operator-limit projection, if that is
    /// what this word is.
    pub fn op_limit_stream(&self) -> Option<(&OperatorStream, CenterSide)> {
        match &self.gen {
            Gen::Projection(desc) => match &desc.kind {
                DescKind::OpLimit { stream, center, .. } => Some((stream, *center)),
                _ => None,
            },
            _ => None,
        }
    }
}

fn projection_tail_exact(desc: &BiInfiniteDesc, pos: usize) -> Option<(Vec<u8>, Vec<u8>)> {
    let real = pos as i64 + desc.offset;
    match &desc.kind {
        DescKind::Periodic(period) => {
            let word = {
                let mut out = Vec::new();
                for &l in period {
                    let w = match l {
                        PairLetter::Alpha => &desc.alphabet.alpha,
                        PairLetter::Beta => &desc.alphabet.beta,
                    };
                    out.extend_from_slice(crate::words::chi_expand(w).digits());
                }
                out
            };
            let n = word.len() as i64;
            let k = real.rem_euclid(n) as usize;
            let mut rot = word[k..].to_vec();
            rot.extend_from_slice(&word[..k]);
            Some((Vec::new(), rot))
        }
        DescKind::Degenerate(shape) => {
            let (mid, outer) = match shape {
                Shape::AlphaInfBetaAlphaInf => (&desc.alphabet.beta, &desc.alphabet.alpha),
                Shape::BetaInfAlphaBetaInf => (&desc.alphabet.alpha, &desc.alphabet.beta),
            };
            let mid_d = crate::words::chi_expand(mid).digits().to_vec();
            let out_d = crate::words::chi_expand(outer).digits().to_vec();
            let m = mid_d.len() as i64;
            if real >= m {
                let k = ((real - m).rem_euclid(out_d.len() as i64)) as usize;
                let mut rot = out_d[k..].to_vec();
                rot.extend_from_slice(&out_d[..k]);
                Some((Vec::new(), rot))
            } else {
                // everything up to the end of the middle block, then outer
                let pre: Vec<u8> = (real..m).map(|p| desc.digit(p - desc.offset)).collect();
                Some((pre, out_d))
            }
        }
        DescKind::OpLimit { .. } => None,
    }
}

/// `[0; x_l, ..., x_1]` for the digits left of a cut, built incrementally.
pub fn eta_of_left(left: &[u8]) -> Rational {
    let mut conv = Convergents::start();
    for &d in left {
        conv.push(d as u32);
    }
    conv.reversed_tail_value()
}

/// Both sides of the cut `left | right`, the right tail resolved exactly
/// when it is eventually periodic and enclosed from `depth` known digits
/// otherwise.
pub fn tail_head(left: &[u8], right: &LazyWord, depth: usize) -> crate::cf::TailHead {
    use crate::cf::{EtaValue, GammaValue, TailHead};
    let eta = EtaValue::Finite(eta_of_left(left));
    let gamma = match exact_gamma(right, 0) {
        Some(g) => GammaValue::Exact(g),
        None => {
            let digits = right.prefix(depth);
            let quotients: Vec<u32> = digits.iter().map(|&d| d as u32).collect();
            GammaValue::Enclosed(tail_enclosure(&quotients))
        }
    };
    TailHead::new(gamma, eta)
}

/// Value enclosure of the cut `left | right`, using `depth` known digits of
/// the right tail; also the exact value when the tail is eventually periodic.
pub fn cut_value(left: &[u8], right: &LazyWord, depth: usize) -> (Interval, Option<Quad>) {
    let th = tail_head(left, right, depth);
    let encl = th.value();
    let exact = match th.gamma {
        crate::cf::GammaValue::Exact(_) if encl.is_point() => Some(encl.lo().clone()),
        _ => None,
    };
    (encl, exact)
}

/// Exact value of the tail of `w` from `pos`, when eventually periodic.
fn exact_gamma(w: &LazyWord, pos: usize) -> Option<Quad> {
    let (pre, per) = w.tail_exact(pos)?;
    if per.is_empty() {
        if pre.is_empty() {
            return None;
        }
        let cf = CfWord::new(pre[0] as u32, pre[1..].iter().map(|&d| d as u32).collect());
        return Some(Quad::from_rational(&eval_cf(&cf).value));
    }
    let period: Vec<u32> = per.iter().map(|&d| d as u32).collect();
    if pre.is_empty() {
        // purely periodic: the fixed point of the period map itself
        Some(crate::cf::purely_periodic_tail(&period))
    } else {
        let leading = pre[0] as u32;
        let quotients: Vec<u32> = pre[1..].iter().map(|&d| d as u32).collect();
        Some(periodic_value(&CfWord::new(leading, quotients), &period))
    }
}

fn three() -> Quad {
    Quad::from_int(3)
}

/// Classify a cut of an infinite word. The digits left of the cut are
/// `left_context` followed by the first `pos` digits of `w`.
pub fn classify_infinite_cut(
    w: &LazyWord,
    pos: CutPos,
    left_context: &[u8],
    max_depth: usize,
) -> CutReport {
    let mut left = left_context.to_vec();
    left.extend_from_slice(&w.prefix(pos));
    assert_eq!(
        left.len(),
        left_context.len() + pos,
        "word too short for cut"
    );
    let eta = eta_of_left(&left);
    classify_with_eta(w, pos, &eta, max_depth)
}

fn classify_with_eta(w: &LazyWord, pos: CutPos, eta: &Rational, max_depth: usize) -> CutReport {
    if let Some(gamma) = exact_gamma(w, pos) {
        let lambda = gamma.add_rational(eta);
        let class = if lambda.cmp_int(3) == std::cmp::Ordering::Greater {
            CutClass::Bad
        } else {
            CutClass::Good
        };
        return CutReport {
            pos,
            class,
            enclosure: Interval::point(lambda.clone()),
            exact: Some(lambda),
        };
    }
    let mut depth = FIRST_DEPTH.min(max_depth);
    loop {
        let digits = w.prefix(pos + depth);
        let quotients: Vec<u32> = digits[pos..].iter().map(|&d| d as u32).collect();
        let encl = tail_enclosure(&quotients).shift(eta);
        if encl.entirely_above_int(3) {
            return CutReport {
                pos,
                class: CutClass::Bad,
                enclosure: encl,
                exact: None,
            };
        }
        if encl.entirely_at_most_int(3) {
            return CutReport {
                pos,
                class: CutClass::Good,
                enclosure: encl,
                exact: None,
            };
        }
        if depth >= max_depth {
            return CutReport {
                pos,
                class: CutClass::Undecided { depth },
                enclosure: encl,
                exact: None,
            };
        }
        depth = (depth * 2).min(max_depth);
    }
}

/// Classify a cut of a finite word by the exact extremal values over all
/// two-sided extensions in the paired alphabet. The extremes on each side are
/// realized by the constant continuations `1^inf` and `2^inf`.
pub fn classify_finite_cut(w: &[u8], pos: CutPos) -> CutReport {
    assert!(pos > 0 && pos < w.len(), "cut must be interior");
    let paired_extremes = |lead: u32, quots: &[u32]| -> (Quad, Quad) {
        let v1 = periodic_value(&CfWord::new(lead, quots.to_vec()), &[1]);
        let v2 = periodic_value(&CfWord::new(lead, quots.to_vec()), &[2]);
        if v1.cmp_quad(&v2) == std::cmp::Ordering::Greater {
            (v2, v1)
        } else {
            (v1, v2)
        }
    };
    let right = &w[pos..];
    let (gamma_min, gamma_max) = paired_extremes(
        right[0] as u32,
        &right[1..].iter().map(|&d| d as u32).collect::<Vec<_>>(),
    );
    let rev_left: Vec<u32> = w[..pos].iter().rev().map(|&d| d as u32).collect();
    let (eta_min, eta_max) = paired_extremes(0, &rev_left);

    // lambda_min = gamma_min + eta_min vs 3, compared as gamma vs 3 - eta
    let s_min = gamma_min.cmp_quad(&three().sub(&eta_min));
    let s_max = gamma_max.cmp_quad(&three().sub(&eta_max));
    let class = if s_min == std::cmp::Ordering::Greater {
        CutClass::Bad
    } else if s_max != std::cmp::Ordering::Greater {
        CutClass::Good
    } else {
        CutClass::Indeterminate
    };
    let lo = outward_bound(&gamma_min, &eta_min, s_min, false);
    let hi = outward_bound(&gamma_max, &eta_max, s_max, true);
    CutReport {
        pos,
        class,
        enclosure: Interval::new(lo, hi),
        exact: None,
    }
}

/// Rational bound of `gamma + eta` from below (`upper = false`) or above,
/// tightened until it falls on the same side of 3 as the exact sum does.
fn outward_bound(gamma: &Quad, eta: &Quad, side_of_three: std::cmp::Ordering, upper: bool) -> Quad {
    if side_of_three == std::cmp::Ordering::Equal {
        return three();
    }
    let mut digits = 40u32;
    loop {
        let (glo, ghi) = gamma.rational_bounds(digits);
        let (elo, ehi) = eta.rational_bounds(digits);
        let bound = if upper { ghi + ehi } else { glo + elo };
        let three_rat = Rational::new(3.into(), 1.into());
        let ok = match (side_of_three, upper) {
            (std::cmp::Ordering::Greater, false) => bound > three_rat,
            (std::cmp::Ordering::Less, true) => bound < three_rat,
            _ => true,
        };
        if ok {
            return Quad::from_rational(&bound);
        }
        digits *= 2;
    }
}

/// Exact equality of the two transposed cut values `[0;E,P] + [x;F,P]` and
/// `[0;F,P] + [x;E,P]`, both sides closed with the same period `P`.
pub fn transpose_value_check(e: &[u8], x: u8, f: &[u8]) -> bool {
    let period = [2u32, 1];
    let side = |head: &[u8], tail: &[u8]| -> Quad {
        let eta = periodic_value(
            &CfWord::new(0, head.iter().map(|&d| d as u32).collect()),
            &period,
        );
        let gamma = periodic_value(
            &CfWord::new(x as u32, tail.iter().map(|&d| d as u32).collect()),
            &period,
        );
        eta.add(&gamma)
    };
    side(e, f) == side(f, e)
}

/// Result of counting bad cuts over a prefix window.
#[derive(Clone, Debug)]
pub struct CutCount {
    /// Positions classified bad, increasing.
    pub bad: Vec<CutPos>,
    /// Positions still undecided at the depth budget.
    pub undecided: Vec<CutPos>,
    /// The count - only when nothing is undecided.
    pub verdict: Option<usize>,
}

/// Classify every cut with `left_len` in `[0, horizon]` of an infinite word.
/// Position 0 is the leading cut, whose value is the whole-word tail; it is
/// what a quotient-0 convergent sees, so including it keeps the bad-cut count
/// equal to the number of rational solutions of the `1/(3q^2)` inequality.
pub fn count_bad_cuts(w: &LazyWord, horizon: usize, max_depth: usize) -> CutCount {
    let mut bad = Vec::new();
    let mut undecided = Vec::new();
    let mut conv = Convergents::start();
    for pos in 0..=horizon {
        let eta = conv.reversed_tail_value();
        let report = classify_with_eta(w, pos, &eta, max_depth);
        match report.class {
            CutClass::Bad => bad.push(pos),
            CutClass::Undecided { .. } => undecided.push(pos),
            _ => {}
        }
        if pos < horizon {
            let d = w.digit(pos).expect("word ends inside the counting horizon");
            conv.push(d as u32);
        }
    }
    let verdict = if undecided.is_empty() {
        Some(bad.len())
    } else {
        None
    };
    CutCount {
        bad,
        undecided,
        verdict,
    }
}

/// Classify a cut of a bi-infinite description: both sides are enclosed from
/// windows of known digits around the cut.
pub fn classify_biinfinite_cut(desc: &BiInfiniteDesc, pos: i64, max_depth: usize) -> CutReport {
    let mut depth = FIRST_DEPTH.min(max_depth.max(1));
    loop {
        let right: Vec<u32> = desc
            .digits(pos, pos + depth as i64)
            .iter()
            .map(|&d| d as u32)
            .collect();
        let left: Vec<u32> = desc
            .digits(pos - depth as i64, pos)
            .iter()
            .rev()
            .map(|&d| d as u32)
            .collect();
        let gamma = tail_enclosure(&right);
        let eta = crate::cf::mobius_apply(
            &std::iter::once(0u32)
                .chain(left.iter().copied())
                .collect::<Vec<_>>(),
            &crate::cf::base_enclosure_12(),
        );
        let encl = gamma.add(&eta);
        if encl.entirely_above_int(3) {
            return CutReport {
                pos: pos.max(0) as usize,
                class: CutClass::Bad,
                enclosure: encl,
                exact: None,
            };
        }
        if encl.entirely_at_most_int(3) {
            return CutReport {
                pos: pos.max(0) as usize,
                class: CutClass::Good,
                enclosure: encl,
                exact: None,
            };
        }
        if depth >= max_depth {
            return CutReport {
                pos: pos.max(0) as usize,
                class: CutClass::Undecided { depth },
                enclosure: encl,
                exact: None,
            };
        }
        depth = (depth * 2).min(max_depth);
    }
}

/// Largest certified-good cut value found within a stage horizon, plus where
/// it was found and any positions that resisted classification.
#[derive(Clone, Debug)]
pub struct Evidence {
    pub max: Interval,
    pub pos: CutPos,
    pub horizon: usize,
    pub undecided: Vec<CutPos>,
}

/// Scan all cuts within the stage horizon and return an enclosure of the
/// largest good cut value. For an operator-limit word the horizon is the
/// digit length of the next stage's transposed second word.
pub fn lagrange_evidence(w: &LazyWord, stage: usize, max_depth: usize) -> Evidence {
    let horizon = evidence_horizon(w, stage);
    let mut conv = Convergents::start();
    let mut best_lo: Option<(Quad, CutPos)> = None;
    let mut best_hi: Option<Quad> = None;
    let mut undecided = Vec::new();
    for pos in 0..=horizon {
        let eta = conv.reversed_tail_value();
        let report = classify_with_eta(w, pos, &eta, max_depth);
        match report.class {
            CutClass::Good => {
                let lo = report.enclosure.lo().clone();
                let hi = report.enclosure.hi().clone();
                if best_lo.as_ref().is_none_or(|(b, _)| lo > *b) {
                    best_lo = Some((lo, pos));
                }
                if best_hi.as_ref().is_none_or(|b| hi > *b) {
                    best_hi = Some(hi);
                }
            }
            CutClass::Undecided { .. } => undecided.push(pos),
            _ => {}
        }
        if pos < horizon {
            let d = w.digit(pos).expect("word ends inside the horizon");
            conv.push(d as u32);
        }
    }
    let (lo, pos) = best_lo.expect("no good cut inside the horizon");
    let hi = best_hi.unwrap();
    Evidence {
        max: Interval::new(lo, hi),
        pos,
        horizon,
        undecided,
    }
}

fn evidence_horizon(w: &LazyWord, stage: usize) -> usize {
    if let Some((stream, _)) = w.op_limit_stream() {
        return stream.stage_pair(stage + 1).beta.digit_len();
    }
    match &w.gen {
        Gen::Periodic { pre, period } => pre.len() + period.len() * 4 * (stage + 1),
        Gen::Finite(d) => d.len().saturating_sub(1),
        _ => 2 * 4usize.pow(stage as u32 + 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word_literal;

    fn digits(s: &str) -> Vec<u8> {
        parse_word_literal(s).unwrap().digits().to_vec()
    }

    #[test]
    fn finite_cut_worked_examples() {
        // bb|aab bad, aab|aab good, a|baab indeterminate
        let w = digits("bbaab");
        assert_eq!(classify_finite_cut(&w, 4).class, CutClass::Bad);
        let w = digits("aabaab");
        assert_eq!(classify_finite_cut(&w, 6).class, CutClass::Good);
        // the a|b seam is the mid-letter cut after the first digit of the a
        let w = digits("abaab");
        assert_eq!(classify_finite_cut(&w, 1).class, CutClass::Indeterminate);
        // the full-letter cut after that a is good for every extension
        assert_eq!(classify_finite_cut(&w, 2).class, CutClass::Good);
    }

    #[test]
    fn finite_cut_enclosure_sides() {
        let w = digits("bbaab");
        let r = classify_finite_cut(&w, 4);
        assert!(r.enclosure.lo().cmp_int(3) == std::cmp::Ordering::Greater);
        let w = digits("aabaab");
        let r = classify_finite_cut(&w, 6);
        assert!(r.enclosure.hi().cmp_int(3) != std::cmp::Ordering::Greater);
    }

    #[test]
    fn infinite_cut_examples() {
        // (abb)^inf projected: the mid-letter cut after the first digit is bad
        let w = LazyWord::periodic(vec![], digits("abb"));
        let r = classify_infinite_cut(&w, 1, &[], DEFAULT_MAX_DEPTH);
        assert_eq!(r.class, CutClass::Bad);
        assert!(r.exact.is_some());
        // ... while the full-letter cut after the a is good (odd cut)
        let r = classify_infinite_cut(&w, 2, &[], DEFAULT_MAX_DEPTH);
        assert_eq!(r.class, CutClass::Good);

        // a word starting abaab...: the cut after the first digit is bad no
        // matter the continuation; the extremal continuations bracket all of
        // them, so it suffices that both extremes classify bad
        for period in [vec![1, 2], vec![2, 1]] {
            let w = LazyWord::glue(digits("abaab"), LazyWord::periodic(vec![], period));
            let r = classify_infinite_cut(&w, 1, &[], DEFAULT_MAX_DEPTH);
            assert_eq!(r.class, CutClass::Bad);
        }
    }

    #[test]
    fn exact_tie_is_good() {
        // an exact value of 3 is classified good: cut 2|2,2 of the finite
        // word 222 has value [0;2] + [2;2] = 1/2 + 5/2 = 3
        let w = LazyWord::finite(vec![2, 2, 2]);
        let r = classify_infinite_cut(&w, 1, &[], DEFAULT_MAX_DEPTH);
        assert_eq!(r.class, CutClass::Good);
        assert_eq!(r.exact.unwrap(), Quad::from_int(3));
        // with a periodic tail the same-looking cut sits strictly above 3:
        // the finite left side truncates the mirror identity from below
        let w = LazyWord::periodic(vec![], vec![2, 2, 1, 1]);
        let r = classify_infinite_cut(&w, 1, &[], DEFAULT_MAX_DEPTH);
        assert_eq!(r.class, CutClass::Bad);
        assert!(r.exact.unwrap().cmp_int(3) == std::cmp::Ordering::Greater);
    }

    #[test]
    fn transpose_identity_examples() {
        assert!(transpose_value_check(&[2], 1, &[2]));
        assert!(transpose_value_check(&[1, 2], 2, &[1, 2]));
        assert!(transpose_value_check(&[1, 1, 2], 1, &[2, 2, 1]));
    }

    #[test]
    fn counting_small_words() {
        // (abb)^inf projection: bad cuts recur inside every period block
        let w = LazyWord::periodic(vec![], digits("abb"));
        let count = count_bad_cuts(&w, 12, DEFAULT_MAX_DEPTH);
        assert!(count.verdict.unwrap() > 0);
        assert!(count.bad.contains(&1));
        // the constant word b^inf has no bad cuts at all
        let w = LazyWord::periodic(vec![], vec![1, 1]);
        let count = count_bad_cuts(&w, 30, DEFAULT_MAX_DEPTH);
        assert_eq!(count.verdict, Some(0));
    }

    #[test]
    fn tail_head_sides() {
        use crate::cf::{EtaValue, GammaValue};
        let right = LazyWord::periodic(vec![], vec![2, 1]);
        let th = tail_head(&[2, 2], &right, 32);
        assert!(matches!(th.gamma, GammaValue::Exact(_)));
        match &th.eta {
            EtaValue::Finite(x) => assert_eq!(x, &Rational::new(2.into(), 5.into())),
            _ => panic!(),
        }
        assert!(th.value().is_point());
        // boundary case: a finite right side ending in quotient 1
        let right = LazyWord::finite(vec![1]);
        let th = tail_head(&[1], &right, 8);
        assert_eq!(th.value().lo(), &Quad::from_int(2)); // [0;1] + [1] = 2
                                                         // open tails produce enclosures
        let spec: crate::constructions::WitnessSpec =
            "n=0;ops=;cont=alt;variant=projection".parse().unwrap();
        let w = crate::constructions::witness(&spec).unwrap();
        let th = tail_head(&[], &w, 64);
        assert!(matches!(th.gamma, GammaValue::Enclosed(_)));
        assert!(!th.value().is_point());
    }

    #[test]
    fn cut_value_exact_and_enclosed() {
        // left=22, right=(1122)^inf
        let right = LazyWord::periodic(vec![], vec![1, 1, 2, 2]);
        let (encl, exact) = cut_value(&[2, 2], &right, 64);
        let lambda = exact.unwrap();
        assert!(encl.contains(&lambda));
        // eta = [0;2,2] = 2/5
        let expect_eta = Rational::new(2.into(), 5.into());
        let gamma = periodic_value(&CfWord::new(1, vec![1, 2, 2]), &[1, 1, 2, 2]);
        assert_eq!(lambda, gamma.add_rational(&expect_eta));
    }

    #[test]
    fn biinfinite_cuts_of_periodic_word() {
        use crate::words::{PairLetter, WordPair};
        // (ab)^inf has Markov value sqrt(221)/5 < 3: every cut is good
        let desc = BiInfiniteDesc::periodic(
            vec![PairLetter::Alpha, PairLetter::Beta],
            WordPair::bar_root(),
        );
        for pos in -4..4 {
            let r = classify_biinfinite_cut(&desc, pos, DEFAULT_MAX_DEPTH);
            assert_eq!(r.class, CutClass::Good, "pos {pos}");
        }
    }

    #[test]
    fn evidence_on_constant_word() {
        // b^inf: every cut value is phi + [0;1^k]; the largest is at k = 1,
        // namely phi + 1 = (3+sqrt5)/2
        let w = LazyWord::periodic(vec![], vec![1, 1]);
        let ev = lagrange_evidence(&w, 1, DEFAULT_MAX_DEPTH);
        assert!(ev.undecided.is_empty());
        let expect = Quad::new(3.into(), 1.into(), 2.into(), 5.into());
        assert_eq!(ev.max.lo(), &expect);
        assert_eq!(ev.max.hi(), &expect);
        assert_eq!(ev.pos, 1);
    }

    #[test]
    fn lazy_words_share_across_threads() {
        use crate::constructions::{witness, WitnessSpec};
        let spec: WitnessSpec = "n=0;ops=UV;cont=alt;variant=projection".parse().unwrap();
        let w = std::sync::Arc::new(witness(&spec).unwrap());
        let expect = w.prefix(600);
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let w = w.clone();
                std::thread::spawn(move || w.prefix(600))
            })
            .collect();
        for h in handles {
            assert_eq!(h.join().unwrap(), expect);
        }
    }

    #[test]
    fn lazy_word_basics() {
        let w = LazyWord::glue(vec![3, 3], LazyWord::periodic(vec![1], vec![2, 1]));
        assert_eq!(w.prefix(7), vec![3, 3, 1, 2, 1, 2, 1]);
        assert_eq!(w.tail_exact(2), Some((vec![1], vec![2, 1])));
        assert_eq!(w.tail_exact(4), Some((vec![], vec![1, 2])));
        let f = LazyWord::finite(vec![1, 2]);
        assert_eq!(f.digit(5), None);
        assert!(f.is_finite());
    }
}

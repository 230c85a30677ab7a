//! Textual specs for finite and infinite words and eventually periodic
//! continued fractions.
//!
//! Word literals use either alphabet (`abba` or `22111122`, never mixed).
//! An infinite word is written with a parenthesized period (`(abb)`,
//! `a(baab)`, `21(12)`) or with a trailing `...` marking an unconstrained
//! `{1,2}` continuation (`abaab...`).
//!
//! A continued-fraction literal is `x0;q1,q2,(p1,p2)` with an optional
//! bracket pair around it; the parenthesized block is the period.

use lagrange3::cf::CfWord;
use lagrange3::cuts::LazyWord;
use lagrange3::words::{parse_word_literal, DigitWord};

#[derive(Clone, Debug)]
pub enum WordInput {
    Finite(DigitWord),
    Periodic {
        pre: DigitWord,
        period: DigitWord,
    },
    /// A known prefix with an unknown `{1,2}` continuation.
    Open(DigitWord),
}

pub fn parse_word_input(s: &str) -> Result<WordInput, String> {
    let s = s.trim();
    let has_letters = s.chars().any(|c| c == 'a' || c == 'b');
    let has_digits = s.chars().any(|c| c.is_ascii_digit());
    if has_letters && has_digits {
        return Err("letters and digits may not be mixed in one literal".into());
    }
    if let Some(prefix) = s.strip_suffix("...") {
        let w = parse_word_literal(prefix).map_err(|e| e.to_string())?;
        return Ok(WordInput::Open(w));
    }
    if let Some(open) = s.find('(') {
        let close = s.rfind(')').ok_or("unbalanced parenthesis")?;
        if close != s.len() - 1 || close < open {
            return Err("the period must close the literal".into());
        }
        let pre = parse_word_literal(&s[..open]).map_err(|e| e.to_string())?;
        let period = parse_word_literal(&s[open + 1..close]).map_err(|e| e.to_string())?;
        if period.is_empty() {
            return Err("empty period".into());
        }
        return Ok(WordInput::Periodic { pre, period });
    }
    let w = parse_word_literal(s).map_err(|e| e.to_string())?;
    Ok(WordInput::Finite(w))
}

impl WordInput {
    pub fn lazy(&self) -> LazyWord {
        match self {
            WordInput::Finite(w) => LazyWord::from_word(w),
            WordInput::Periodic { pre, period } => {
                LazyWord::periodic(pre.digits().to_vec(), period.digits().to_vec())
            }
            WordInput::Open(w) => LazyWord::from_word(w),
        }
    }
}

/// An eventually periodic continued fraction `[x0; pre..., (period...)]`.
#[derive(Clone, Debug)]
pub struct CfInput {
    pub pre: CfWord,
    pub period: Vec<u32>,
}

pub fn parse_cf_input(s: &str) -> Result<CfInput, String> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    let (lead, rest) = match s.split_once(';') {
        Some((l, r)) => (l, r),
        None => (s, ""),
    };
    let leading: u32 = lead
        .trim()
        .parse()
        .map_err(|_| format!("bad leading quotient {lead:?}"))?;
    let mut quotients = Vec::new();
    let mut period = Vec::new();
    let rest = rest.trim();
    let (head, per) = match rest.find('(') {
        Some(open) => {
            let close = rest.rfind(')').ok_or("unbalanced parenthesis")?;
            (&rest[..open], Some(&rest[open + 1..close]))
        }
        None => (rest, None),
    };
    for part in head.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let q: u32 = part.parse().map_err(|_| format!("bad quotient {part:?}"))?;
        if q == 0 {
            return Err("quotients must be positive".into());
        }
        quotients.push(q);
    }
    if let Some(per) = per {
        for part in per.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let q: u32 = part
                .parse()
                .map_err(|_| format!("bad period entry {part:?}"))?;
            if q == 0 {
                return Err("period entries must be positive".into());
            }
            period.push(q);
        }
    }
    if period.is_empty() {
        return Err("a parenthesized period is required".into());
    }
    Ok(CfInput {
        pre: CfWord::new(leading, quotients),
        period,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_inputs() {
        assert!(matches!(
            parse_word_input("bbaab").unwrap(),
            WordInput::Finite(_)
        ));
        match parse_word_input("a(baab)").unwrap() {
            WordInput::Periodic { pre, period } => {
                assert_eq!(pre.to_string(), "22");
                assert_eq!(period.to_string(), "11222211");
            }
            _ => panic!(),
        }
        assert!(matches!(
            parse_word_input("abaab...").unwrap(),
            WordInput::Open(_)
        ));
        assert!(parse_word_input("ab(12)").is_err());
        assert!(parse_word_input("(ab").is_err());
    }

    #[test]
    fn cf_inputs() {
        let cf = parse_cf_input("[1;(1)]").unwrap();
        assert_eq!(cf.pre.leading, 1);
        assert!(cf.pre.quotients.is_empty());
        assert_eq!(cf.period, vec![1]);
        let cf = parse_cf_input("0;2,1,(1,2)").unwrap();
        assert_eq!(cf.pre.quotients, vec![2, 1]);
        assert_eq!(cf.period, vec![1, 2]);
        assert!(parse_cf_input("1;2,3").is_err());
    }
}

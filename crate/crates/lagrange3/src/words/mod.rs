//! Words over the alphabets `{a,b}` and `{1,2}`, the Nielsen substitutions
//! and their inverses, the concatenation operators on word pairs, the three
//! binary trees they generate, and unique decoding over a pair alphabet.
//!
//! Lengths are always counted in `{1,2}` digits unless a name says
//! otherwise; the letters code as `a = 22`, `b = 11`.

pub mod biinf;

use std::fmt;
use std::str::FromStr;

/// One letter of the two-letter alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn digit(self) -> u8 {
        match self {
            Letter::A => 2,
            Letter::B => 1,
        }
    }
}

/// A finite word over `{a,b}`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AbWord(Vec<Letter>);

impl AbWord {
    pub fn new(letters: Vec<Letter>) -> AbWord {
        AbWord(letters)
    }

    pub fn empty() -> AbWord {
        AbWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Length in `{a,b}` letters.
    pub fn ab_len(&self) -> usize {
        self.0.len()
    }

    /// Length in `{1,2}` digits.
    pub fn digit_len(&self) -> usize {
        2 * self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &AbWord) -> AbWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        AbWord(v)
    }

    pub fn repeat(&self, k: usize) -> AbWord {
        let mut v = Vec::with_capacity(self.0.len() * k);
        for _ in 0..k {
            v.extend_from_slice(&self.0);
        }
        AbWord(v)
    }

    pub fn transpose(&self) -> AbWord {
        AbWord(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        let n = self.0.len();
        (0..n / 2).all(|i| self.0[i] == self.0[n - 1 - i])
    }

    pub fn starts_with(&self, prefix: &AbWord) -> bool {
        self.0.starts_with(&prefix.0)
    }

    pub fn ends_with(&self, suffix: &AbWord) -> bool {
        self.0.ends_with(&suffix.0)
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }
}

impl fmt::Display for AbWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Letter::A => "a",
                Letter::B => "b",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for AbWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ab\"{self}\"")
    }
}

/// A finite word over the digits `{1,2}` (a leading block of `3`s is allowed
/// for glued continued-fraction prefixes).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DigitWord(Vec<u8>);

impl DigitWord {
    pub fn new(digits: Vec<u8>) -> DigitWord {
        assert!(digits.iter().all(|&d| (1..=3).contains(&d)));
        DigitWord(digits)
    }

    pub fn empty() -> DigitWord {
        DigitWord(Vec::new())
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &DigitWord) -> DigitWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        DigitWord(v)
    }

    pub fn transpose(&self) -> DigitWord {
        DigitWord(self.0.iter().rev().copied().collect())
    }

    pub fn quotients(&self) -> Vec<u32> {
        self.0.iter().map(|&d| d as u32).collect()
    }
}

impl fmt::Display for DigitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.0 {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for DigitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w\"{self}\"")
    }
}

/// `chi: a -> 22, b -> 11`.
pub fn chi_expand(w: &AbWord) -> DigitWord {
    let mut v = Vec::with_capacity(w.digit_len());
    for l in w.letters() {
        let d = l.digit();
        v.push(d);
        v.push(d);
    }
    DigitWord(v)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChiError {
    /// A maximal run of equal digits has odd length; `position` is the
    /// 0-based start of the offending run.
    OddRun { position: usize, digit: u8 },
    /// A digit outside `{1,2}`.
    NonBinaryDigit { position: usize, digit: u8 },
}

impl fmt::Display for ChiError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChiError::OddRun { position, digit } => {
                write!(f, "odd run of {digit}s starting at digit {position}")
            }
            ChiError::NonBinaryDigit { position, digit } => {
                write!(f, "digit {digit} at position {position} is not in {{1,2}}")
            }
        }
    }
}

impl std::error::Error for ChiError {}

/// Inverse of [`chi_expand`]: succeeds exactly when every maximal run of
/// equal digits has even length.
pub fn chi_factor(w: &DigitWord) -> Result<AbWord, ChiError> {
    let d = w.digits();
    let mut out = Vec::with_capacity(d.len() / 2);
    let mut i = 0;
    while i < d.len() {
        let digit = d[i];
        if digit != 1 && digit != 2 {
            return Err(ChiError::NonBinaryDigit { position: i, digit });
        }
        let start = i;
        while i < d.len() && d[i] == digit {
            i += 1;
        }
        let run = i - start;
        if run % 2 != 0 {
            return Err(ChiError::OddRun {
                position: start,
                digit,
            });
        }
        let letter = if digit == 2 { Letter::A } else { Letter::B };
        for _ in 0..run / 2 {
            out.push(letter);
        }
    }
    Ok(AbWord(out))
}

/// The Nielsen substitutions `U, V` of the free group on `a, b` and their
/// inverses `u, v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subst {
    /// `a -> ab, b -> b`
    U,
    /// `a -> a, b -> ab`
    V,
    /// `a -> a b^-1, b -> b`
    Uinv,
    /// `a -> a, b -> a^-1 b`
    Vinv,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubstError {
    /// The reduced image has a non-positive exponent, so the inverse
    /// substitution is not defined on this word.
    NotPositive,
}

impl fmt::Display for SubstError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubstError::NotPositive => write!(f, "substitution image is not a positive word"),
        }
    }
}

impl std::error::Error for SubstError {}

/// Apply a substitution letterwise; for the inverses, reduce in the free
/// group and require the result to be positive.
pub fn apply_subst(op: Subst, w: &AbWord) -> Result<AbWord, SubstError> {
    match op {
        Subst::U => {
            let mut out = Vec::with_capacity(w.ab_len() * 2);
            for &l in w.letters() {
                match l {
                    Letter::A => out.extend_from_slice(&[Letter::A, Letter::B]),
                    Letter::B => out.push(Letter::B),
                }
            }
            Ok(AbWord(out))
        }
        Subst::V => {
            let mut out = Vec::with_capacity(w.ab_len() * 2);
            for &l in w.letters() {
                match l {
                    Letter::A => out.push(Letter::A),
                    Letter::B => out.extend_from_slice(&[Letter::A, Letter::B]),
                }
            }
            Ok(AbWord(out))
        }
        Subst::Uinv => reduce_signed(w.letters().iter().flat_map(|&l| match l {
            Letter::A => vec![(Letter::A, 1i64), (Letter::B, -1)],
            Letter::B => vec![(Letter::B, 1)],
        })),
        Subst::Vinv => reduce_signed(w.letters().iter().flat_map(|&l| match l {
            Letter::A => vec![(Letter::A, 1i64)],
            Letter::B => vec![(Letter::A, -1), (Letter::B, 1)],
        })),
    }
}

/// Free-group reduction of a signed run sequence; positive iff every
/// surviving exponent is positive.
fn reduce_signed<I: IntoIterator<Item = (Letter, i64)>>(items: I) -> Result<AbWord, SubstError> {
    let mut runs: Vec<(Letter, i64)> = Vec::new();
    for (l, e) in items {
        if e == 0 {
            continue;
        }
        if let Some(last) = runs.last_mut() {
            if last.0 == l {
                last.1 += e;
                if last.1 == 0 {
                    runs.pop();
                }
                continue;
            }
        }
        runs.push((l, e));
    }
    let mut out = Vec::new();
    for (l, e) in runs {
        if e < 0 {
            return Err(SubstError::NotPositive);
        }
        for _ in 0..e {
            out.push(l);
        }
    }
    Ok(AbWord(out))
}

/// Structural edits on finite `{a,b}` words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordMod {
    /// Drop the first letter.
    Plus,
    /// Drop the last letter.
    Minus,
    /// Replace a leading `a` by `b`.
    SupB,
    /// Replace a trailing `b` by `a`.
    SubA,
    /// Reverse the letters.
    Transpose,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadShape {
    pub mod_kind: WordMod,
}

impl fmt::Display for BadShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "word does not have the shape required by {:?}",
            self.mod_kind
        )
    }
}

impl std::error::Error for BadShape {}

pub fn word_mod(w: &AbWord, m: WordMod) -> Result<AbWord, BadShape> {
    let err = || BadShape { mod_kind: m };
    match m {
        WordMod::Plus => {
            if w.is_empty() {
                return Err(err());
            }
            Ok(AbWord(w.0[1..].to_vec()))
        }
        WordMod::Minus => {
            if w.is_empty() {
                return Err(err());
            }
            Ok(AbWord(w.0[..w.0.len() - 1].to_vec()))
        }
        WordMod::SupB => {
            if w.first() != Some(Letter::A) {
                return Err(err());
            }
            let mut v = w.0.clone();
            v[0] = Letter::B;
            Ok(AbWord(v))
        }
        WordMod::SubA => {
            if w.last() != Some(Letter::B) {
                return Err(err());
            }
            let mut v = w.0.clone();
            let n = v.len();
            v[n - 1] = Letter::A;
            Ok(AbWord(v))
        }
        WordMod::Transpose => Ok(w.transpose()),
    }
}

/// One renormalization operator letter; the family it acts in is carried by
/// the surrounding word or pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Renorm {
    U,
    V,
}

/// Which tree a sequence of operator letters indexes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OpFamily {
    /// Interior substitutions acting letterwise.
    Interior,
    /// Pair concatenations `(alpha,beta) -> (alpha beta, beta) / (alpha, alpha beta)`.
    Bar,
    /// The compositions `(alpha,beta) -> (alpha b^2, alpha b^3) / (alpha b^3, alpha b^4)`.
    Tilde,
}

/// A finite operator word with its family tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpWord {
    pub letters: Vec<Renorm>,
    pub family: OpFamily,
}

impl OpWord {
    pub fn new(letters: Vec<Renorm>, family: OpFamily) -> OpWord {
        OpWord { letters, family }
    }
}

impl fmt::Display for OpWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            f.write_str(match l {
                Renorm::U => "U",
                Renorm::V => "V",
            })?;
        }
        Ok(())
    }
}

pub fn parse_ops(s: &str) -> Result<Vec<Renorm>, WordParseError> {
    s.chars()
        .map(|c| match c {
            'U' | 'u' => Ok(Renorm::U),
            'V' | 'v' => Ok(Renorm::V),
            _ => Err(WordParseError {
                message: format!("operator letter must be U or V, got {c:?}"),
            }),
        })
        .collect()
}

/// The two families of word pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairFamily {
    Bar,
    Tilde,
}

/// A node of the bar or tilde tree: the alphabet pair plus the operator path
/// that reached it. Equality is by the pair strings, not the path.
#[derive(Clone, Debug)]
pub struct WordPair {
    pub alpha: AbWord,
    pub beta: AbWord,
    pub path: Vec<Renorm>,
    pub family: PairFamily,
}

impl PartialEq for WordPair {
    fn eq(&self, other: &Self) -> bool {
        self.alpha == other.alpha && self.beta == other.beta
    }
}

impl Eq for WordPair {}

impl WordPair {
    /// Root `(a, b)` of the bar tree.
    pub fn bar_root() -> WordPair {
        WordPair {
            alpha: AbWord(vec![Letter::A]),
            beta: AbWord(vec![Letter::B]),
            path: Vec::new(),
            family: PairFamily::Bar,
        }
    }

    /// Root `(a, ab)` of the tilde tree.
    pub fn tilde_root() -> WordPair {
        WordPair {
            alpha: AbWord(vec![Letter::A]),
            beta: AbWord(vec![Letter::A, Letter::B]),
            path: Vec::new(),
            family: PairFamily::Tilde,
        }
    }

    pub fn depth(&self) -> usize {
        self.path.len()
    }
}

/// Apply one operator of the pair's own family.
pub fn pair_step(p: &WordPair, op: Renorm) -> WordPair {
    let (alpha, beta) = match (p.family, op) {
        (PairFamily::Bar, Renorm::U) => (p.alpha.concat(&p.beta), p.beta.clone()),
        (PairFamily::Bar, Renorm::V) => (p.alpha.clone(), p.alpha.concat(&p.beta)),
        (PairFamily::Tilde, Renorm::U) => {
            let b2 = p.beta.repeat(2);
            (p.alpha.concat(&b2), p.alpha.concat(&b2).concat(&p.beta))
        }
        (PairFamily::Tilde, Renorm::V) => {
            let b3 = p.beta.repeat(3);
            (p.alpha.concat(&b3), p.alpha.concat(&b3).concat(&p.beta))
        }
    };
    let mut path = p.path.clone();
    path.push(op);
    WordPair {
        alpha,
        beta,
        path,
        family: p.family,
    }
}

/// Fold a bar operator word from `(a, b)`.
pub fn bar_pair(ops: &[Renorm]) -> WordPair {
    ops.iter()
        .fold(WordPair::bar_root(), |p, &op| pair_step(&p, op))
}

/// Fold a tilde operator word from `(a, ab)`.
pub fn tilde_pair(ops: &[Renorm]) -> WordPair {
    ops.iter()
        .fold(WordPair::tilde_root(), |p, &op| pair_step(&p, op))
}

/// Rewrite tilde operators as bar operators, in application order: each
/// tilde `U` becomes `U U V` and each tilde `V` becomes `U U U V`.
pub fn expand_tilde_ops(ops: &[Renorm]) -> Vec<Renorm> {
    let mut out = Vec::with_capacity(ops.len() * 4);
    for &op in ops {
        match op {
            Renorm::U => out.extend_from_slice(&[Renorm::U, Renorm::U, Renorm::V]),
            Renorm::V => out.extend_from_slice(&[Renorm::U, Renorm::U, Renorm::U, Renorm::V]),
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MismatchBug {
    pub ops: Vec<Renorm>,
}

impl fmt::Display for MismatchBug {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "exterior fold and interior substitution disagree on {:?}",
            self.ops
        )
    }
}

impl std::error::Error for MismatchBug {}

/// Compute the pair of a bar operator word two ways - the exterior fold from
/// `(a, b)`, and the interior substitutions applied in reversed path order -
/// and return the pair after asserting they agree.
pub fn interior_of_exterior(ops: &[Renorm]) -> Result<WordPair, MismatchBug> {
    let exterior = bar_pair(ops);
    let mut alpha = AbWord(vec![Letter::A]);
    let mut beta = AbWord(vec![Letter::B]);
    for &op in ops.iter().rev() {
        let subst = match op {
            Renorm::U => Subst::U,
            Renorm::V => Subst::V,
        };
        alpha = apply_subst(subst, &alpha).expect("capital substitutions are total");
        beta = apply_subst(subst, &beta).expect("capital substitutions are total");
    }
    if alpha != exterior.alpha || beta != exterior.beta {
        return Err(MismatchBug { ops: ops.to_vec() });
    }
    Ok(exterior)
}

/// All vertices of the substitution tree rooted at `ab` with depth at most
/// `depth`, in preorder with the `U` edge first (path-lexicographic).
pub fn cohn_tree(depth: usize) -> Vec<(AbWord, Vec<Renorm>)> {
    let root = AbWord(vec![Letter::A, Letter::B]);
    let mut out = Vec::new();
    let mut stack = vec![(root, Vec::new())];
    while let Some((word, path)) = stack.pop() {
        if path.len() < depth {
            for op in [Renorm::V, Renorm::U] {
                let subst = match op {
                    Renorm::U => Subst::U,
                    Renorm::V => Subst::V,
                };
                let child = apply_subst(subst, &word).expect("capital substitutions are total");
                let mut p = path.clone();
                p.push(op);
                stack.push((child, p));
            }
        }
        out.push((word, path));
    }
    out
}

/// All pairs of the bar or tilde tree with depth at most `depth`, preorder,
/// `U` edge first.
pub fn pair_tree(family: PairFamily, depth: usize) -> Vec<WordPair> {
    let root = match family {
        PairFamily::Bar => WordPair::bar_root(),
        PairFamily::Tilde => WordPair::tilde_root(),
    };
    let mut out = Vec::new();
    let mut stack = vec![root];
    while let Some(pair) = stack.pop() {
        if pair.depth() < depth {
            stack.push(pair_step(&pair, Renorm::V));
            stack.push(pair_step(&pair, Renorm::U));
        }
        out.push(pair);
    }
    out
}

/// One letter of a factorization over a pair alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairLetter {
    Alpha,
    Beta,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotDecodable {
    /// Longest prefix (in `{a,b}` letters) that any partial parse covered
    /// before failing.
    pub max_prefix_letters: usize,
}

impl fmt::Display for NotDecodable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "word is not a concatenation of the pair (maximal parsed prefix: {} letters)",
            self.max_prefix_letters
        )
    }
}

impl std::error::Error for NotDecodable {}

/// Factor `w` as a concatenation of the pair's two words. The factorization
/// of any factorable word is unique, so the backtracking search returns the
/// only parse.
pub fn decode(w: &AbWord, pair: &WordPair) -> Result<Vec<PairLetter>, NotDecodable> {
    let target = w.letters();
    let alpha = pair.alpha.letters();
    let beta = pair.beta.letters();
    let mut best = 0usize;
    let mut parse: Vec<(PairLetter, usize)> = Vec::new(); // (letter, end position)
    let mut pos = 0usize;
    let mut retry: Option<PairLetter> = None;
    loop {
        if pos == target.len() && retry.is_none() {
            return Ok(parse.iter().map(|&(l, _)| l).collect());
        }
        let candidates: &[PairLetter] = match retry.take() {
            None => &[PairLetter::Alpha, PairLetter::Beta],
            Some(PairLetter::Alpha) => &[PairLetter::Beta],
            Some(PairLetter::Beta) => &[],
        };
        let mut advanced = false;
        for &cand in candidates {
            let piece = match cand {
                PairLetter::Alpha => alpha,
                PairLetter::Beta => beta,
            };
            if target[pos..].starts_with(piece) {
                pos += piece.len();
                parse.push((cand, pos));
                best = best.max(pos);
                advanced = true;
                break;
            }
        }
        if advanced {
            continue;
        }
        // backtrack
        match parse.pop() {
            None => {
                return Err(NotDecodable {
                    max_prefix_letters: best,
                })
            }
            Some((l, end)) => {
                let piece_len = match l {
                    PairLetter::Alpha => alpha.len(),
                    PairLetter::Beta => beta.len(),
                };
                pos = end - piece_len;
                retry = Some(l);
            }
        }
    }
}

/// Expand a factorization back into an `{a,b}` word.
pub fn encode(letters: &[PairLetter], pair: &WordPair) -> AbWord {
    let mut out = AbWord::empty();
    for &l in letters {
        out = out.concat(match l {
            PairLetter::Alpha => &pair.alpha,
            PairLetter::Beta => &pair.beta,
        });
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordParseError {
    pub message: String,
}

impl fmt::Display for WordParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for WordParseError {}

impl FromStr for AbWord {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .enumerate()
            .map(|(i, c)| match c {
                'a' => Ok(Letter::A),
                'b' => Ok(Letter::B),
                _ => Err(WordParseError {
                    message: format!("invalid letter {c:?} at offset {i}"),
                }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(AbWord)
    }
}

impl FromStr for DigitWord {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .enumerate()
            .map(|(i, c)| match c {
                '1' => Ok(1u8),
                '2' => Ok(2),
                '3' => Ok(3),
                _ => Err(WordParseError {
                    message: format!("invalid digit {c:?} at offset {i}"),
                }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(DigitWord)
    }
}

/// Parse a word literal in either alphabet (letters and digits may not be
/// mixed) into its digit form.
pub fn parse_word_literal(s: &str) -> Result<DigitWord, WordParseError> {
    if s.is_empty() {
        return Ok(DigitWord::empty());
    }
    let has_letters = s.chars().any(|c| c == 'a' || c == 'b');
    let has_digits = s.chars().any(|c| c.is_ascii_digit());
    if has_letters && has_digits {
        return Err(WordParseError {
            message: "letters and digits may not be mixed in one literal".into(),
        });
    }
    if has_letters {
        Ok(chi_expand(&s.parse::<AbWord>()?))
    } else {
        s.parse::<DigitWord>()
    }
}

//! Named verification suites: deterministic (optionally seeded) batteries of
//! exact checks over the word identities, cut classifications, Markov data
//! and witness counts. The command-line `verify` subcommand and the
//! acceptance tests both run these.

use num_bigint::BigInt;
use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::cf::{purely_periodic_tail, CfWord};
use crate::constructions::{
    biinfinite_witness, injectivity_check, stage_bad_cut_locator, witness, Continuation,
    InjectivityError, OperatorStream, Variant, WitnessN, WitnessSpec,
};
use crate::cuts::{
    classify_biinfinite_cut, classify_finite_cut, classify_infinite_cut, count_bad_cuts,
    lagrange_evidence, transpose_value_check, CutClass, LazyWord,
};
use crate::markov::{cohn_to_markov, m_tilde, markov_tree, periodic_markov_value, spectrum_value};
use crate::words::biinf::CenterSide;
use crate::words::{
    apply_subst, chi_expand, cohn_tree, decode, encode, interior_of_exterior, pair_tree,
    tilde_pair, word_mod, AbWord, Letter, PairFamily, PairLetter, Renorm, Subst, WordMod, WordPair,
};
use crate::{Quad, Rational};

pub const DEFAULT_SEED: u64 = 0x4c61_6772_616e;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseStatus {
    Pass,
    Fail,
    Undecided,
}

#[derive(Clone, Debug)]
pub struct CaseResult {
    pub name: String,
    pub status: CaseStatus,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    fn new(suite: &str) -> SuiteReport {
        SuiteReport {
            suite: suite.to_string(),
            cases: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.cases.push(CaseResult {
            name: name.into(),
            status: if ok {
                CaseStatus::Pass
            } else {
                CaseStatus::Fail
            },
            detail: detail.into(),
        });
    }

    fn undecided(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.cases.push(CaseResult {
            name: name.into(),
            status: CaseStatus::Undecided,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.status == CaseStatus::Pass)
    }

    pub fn has_undecided(&self) -> bool {
        self.cases.iter().any(|c| c.status == CaseStatus::Undecided)
    }

    pub fn failures(&self) -> usize {
        self.cases
            .iter()
            .filter(|c| c.status == CaseStatus::Fail)
            .count()
    }
}

/// Enumerate all operator words of length `<= max_len` (lexicographic by
/// length then letters).
pub fn all_op_words(max_len: usize) -> Vec<Vec<Renorm>> {
    let mut out = Vec::new();
    for len in 0..=max_len {
        for bits in 0u64..(1 << len) {
            out.push(
                (0..len)
                    .map(|i| {
                        if (bits >> i) & 1 == 0 {
                            Renorm::U
                        } else {
                            Renorm::V
                        }
                    })
                    .collect(),
            );
        }
    }
    out
}

fn starts_with(w: &AbWord, prefix: &AbWord) -> bool {
    w.starts_with(prefix)
}

/// Exact string identities of the pair operators: concatenation relations,
/// palindrome shapes, the interior/exterior agreement, and the tilde-family
/// expansion and prefix properties.
pub fn identities_suite(bar_depth: usize, tilde_len: usize, seed: u64) -> SuiteReport {
    let mut r = SuiteReport::new("identities");

    // concatenation relations on every bar pair
    let pairs = pair_tree(PairFamily::Bar, bar_depth);
    let mut relations_ok = true;
    let mut shapes_ok = true;
    let mut double_ok = true;
    for p in &pairs {
        let alpha = &p.alpha;
        let beta = &p.beta;
        if alpha.first() != Some(Letter::A) || beta.last() != Some(Letter::B) {
            relations_ok = false;
            break;
        }
        let beta_a = word_mod(beta, WordMod::SubA).unwrap();
        let alpha_b = word_mod(alpha, WordMod::SupB).unwrap();
        if alpha.concat(beta) != beta_a.concat(&alpha_b) {
            relations_ok = false;
        }
        if alpha_b.concat(beta) != beta.transpose().concat(&alpha_b) {
            relations_ok = false;
        }
        if alpha.concat(&beta_a) != beta_a.concat(&alpha.transpose()) {
            relations_ok = false;
        }
        // alpha beta = a theta b with theta a palindrome
        let prod = alpha.concat(beta);
        let theta = AbWord::new(prod.letters()[1..prod.ab_len() - 1].to_vec());
        if prod.first() != Some(Letter::A)
            || prod.last() != Some(Letter::B)
            || !theta.is_palindrome()
        {
            shapes_ok = false;
        }
        // alpha alpha beta beta = a th a b th b with th a palindrome
        let w = alpha.concat(alpha).concat(beta).concat(beta);
        let n = w.ab_len();
        let half = n / 2;
        let lhs = AbWord::new(w.letters()[1..half - 1].to_vec());
        let rhs = AbWord::new(w.letters()[half + 1..n - 1].to_vec());
        if w.letters()[0] != Letter::A
            || w.letters()[half - 1] != Letter::A
            || w.letters()[half] != Letter::B
            || w.letters()[n - 1] != Letter::B
            || lhs != rhs
            || !lhs.is_palindrome()
        {
            double_ok = false;
        }
    }
    r.check(
        format!("pair concatenation relations to depth {bar_depth}"),
        relations_ok,
        format!("{} pairs", pairs.len()),
    );
    r.check(
        format!("alpha beta palindrome interior to depth {bar_depth}"),
        shapes_ok,
        "",
    );
    r.check(
        format!("doubled-pair palindrome shape to depth {bar_depth}"),
        double_ok,
        "",
    );

    // palindromes of digit length <= 12: b U(w) and V(w) a stay palindromes
    let mut pal_ok = true;
    for len in 0..=6usize {
        for bits in 0u32..(1 << len) {
            let w = AbWord::new(
                (0..len)
                    .map(|i| {
                        if (bits >> i) & 1 == 0 {
                            Letter::A
                        } else {
                            Letter::B
                        }
                    })
                    .collect(),
            );
            if !w.is_palindrome() {
                continue;
            }
            let bu = AbWord::new(vec![Letter::B]).concat(&apply_subst(Subst::U, &w).unwrap());
            let va = apply_subst(Subst::V, &w)
                .unwrap()
                .concat(&AbWord::new(vec![Letter::A]));
            if !bu.is_palindrome() || !va.is_palindrome() {
                pal_ok = false;
            }
        }
    }
    r.check("substitution preserves framed palindromes", pal_ok, "");

    // interior/exterior agreement on all bar operator words
    let mut interior_ok = true;
    let mut count = 0usize;
    for ops in all_op_words(bar_depth) {
        if interior_of_exterior(&ops).is_err() {
            interior_ok = false;
        }
        count += 1;
    }
    r.check(
        format!("interior substitution equals exterior fold to depth {bar_depth}"),
        interior_ok,
        format!("{count} operator words"),
    );

    // tilde-family identities
    let tilde_words = all_op_words(tilde_len);
    let mut expansion_ok = true;
    for ops in &tilde_words {
        let direct = tilde_pair(ops);
        let expanded = crate::words::expand_tilde_ops(ops);
        let mut pair = WordPair::tilde_root();
        pair.family = PairFamily::Bar;
        let folded = expanded
            .iter()
            .fold(pair, |p, &op| crate::words::pair_step(&p, op));
        if folded.alpha != direct.alpha || folded.beta != direct.beta {
            expansion_ok = false;
        }
    }
    r.check(
        format!("tilde operators expand to bar words (len <= {tilde_len})"),
        expansion_ok,
        format!("{} words", tilde_words.len()),
    );

    let mut prefix_props_ok = true;
    let mut psfix_ok = true;
    let mut nonprefix_ok = true;
    for ops in &tilde_words {
        let p = tilde_pair(ops);
        for next in [Renorm::U, Renorm::V] {
            let q = crate::words::pair_step(&p, next);
            if !starts_with(&q.beta.transpose(), &p.beta.transpose())
                || !q.beta.transpose().ends_with(&p.alpha.transpose())
            {
                prefix_props_ok = false;
            }
            let old = p.alpha.concat(&p.beta).concat(&p.beta);
            let new = q.alpha.concat(&q.beta).concat(&q.beta);
            if !starts_with(&new, &old) {
                prefix_props_ok = false;
            }
        }
        if !ops.is_empty() {
            // alpha = a theta b, beta = a theta' b, theta a palindromic
            // prefix and suffix of theta'
            let strip = |w: &AbWord| AbWord::new(w.letters()[1..w.ab_len() - 1].to_vec());
            let theta = strip(&p.alpha);
            let theta2 = strip(&p.beta);
            if !theta.is_palindrome()
                || !theta2.is_palindrome()
                || !theta2.starts_with(&theta)
                || !theta2.ends_with(&theta)
            {
                psfix_ok = false;
            }
        }
        // prefix-incomparability of the two successor words
        let bt = p.beta.transpose();
        let at = p.alpha.transpose();
        let three = bt.repeat(3).concat(&at);
        let four = bt.repeat(4).concat(&at);
        if starts_with(&four, &three) {
            nonprefix_ok = false;
        }
        let ab2 = p.alpha.concat(&p.beta.repeat(2));
        let ab3 = p.alpha.concat(&p.beta.repeat(3));
        let ab4 = p.alpha.concat(&p.beta.repeat(4));
        let lhs = ab2.concat(&ab3).concat(&ab3);
        let rhs = ab3.concat(&ab4).concat(&ab4);
        if starts_with(&rhs, &lhs) {
            nonprefix_ok = false;
        }
    }
    r.check("tilde prefix and suffix growth", prefix_props_ok, "");
    r.check("tilde pair palindromic core nesting", psfix_ok, "");
    r.check("successor words are prefix-incomparable", nonprefix_ok, "");

    // decode . encode is the identity on random pair sequences
    let mut rng = StdRng::seed_from_u64(seed);
    let mut decode_ok = true;
    let pairs6 = pair_tree(PairFamily::Bar, 6);
    for _ in 0..60 {
        let pair = &pairs6[rng.gen_range(0..pairs6.len())];
        let len = rng.gen_range(1..=50);
        let letters: Vec<PairLetter> = (0..len)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    PairLetter::Alpha
                } else {
                    PairLetter::Beta
                }
            })
            .collect();
        let word = encode(&letters, pair);
        match decode(&word, pair) {
            Ok(parsed) if parsed == letters => {}
            _ => decode_ok = false,
        }
    }
    r.check("decode inverts concatenation (random)", decode_ok, "seeded");

    r
}

/// Cut classification battery: the worked finite and infinite examples, the
/// mirrored palindromic cut families, the transposition identity, and the
/// enclosure soundness samples.
pub fn cuts_suite(seed: u64, odd_cut_horizon: usize, max_depth: usize) -> SuiteReport {
    let mut r = SuiteReport::new("cuts");
    let digits = |s: &str| {
        crate::words::parse_word_literal(s)
            .unwrap()
            .digits()
            .to_vec()
    };

    let c = classify_finite_cut(&digits("bbaab"), 4);
    r.check("finite cut bb|aab is bad", c.class == CutClass::Bad, "");
    let c = classify_finite_cut(&digits("aabaab"), 6);
    r.check("finite cut aab|aab is good", c.class == CutClass::Good, "");
    let c = classify_finite_cut(&digits("abaab"), 1);
    r.check(
        "finite cut a|baab is indeterminate",
        c.class == CutClass::Indeterminate,
        "",
    );

    let w = LazyWord::periodic(vec![], digits("abb"));
    let c = classify_infinite_cut(&w, 1, &[], max_depth);
    r.check(
        "periodic projection has a bad mid-letter cut",
        c.class == CutClass::Bad,
        "",
    );
    for period in [vec![1u8, 2], vec![2, 1]] {
        let w = LazyWord::glue(digits("abaab"), LazyWord::periodic(vec![], period.clone()));
        let c = classify_infinite_cut(&w, 1, &[], max_depth);
        r.check(
            format!("infinite word starting abaab: cut 1 bad (tail {period:?})"),
            c.class == CutClass::Bad,
            "",
        );
    }

    // mirrored palindromic families: for every palindrome core w of digit
    // length <= 8, a w^T b | a w b and b w^T a | b w a are good while
    // b w^T b | a w a and a w^T a | b w b are bad
    let mut family_ok = true;
    for len in 0..=4usize {
        for bits in 0u32..(1 << len) {
            let core = AbWord::new(
                (0..len)
                    .map(|i| {
                        if (bits >> i) & 1 == 0 {
                            Letter::A
                        } else {
                            Letter::B
                        }
                    })
                    .collect(),
            );
            if !core.is_palindrome() {
                continue;
            }
            let a = AbWord::new(vec![Letter::A]);
            let b = AbWord::new(vec![Letter::B]);
            // a b|a seam is a full-letter cut; an a|b seam is the mid-letter
            // cut one digit into the final a of the left part
            let full = 2 * (core.ab_len() + 2);
            let mid = 2 * (core.ab_len() + 1) + 1;
            let good1 = a
                .concat(&core.transpose())
                .concat(&b)
                .concat(&a)
                .concat(&core)
                .concat(&b);
            if classify_finite_cut(chi_expand(&good1).digits(), full).class != CutClass::Good {
                family_ok = false;
            }
            let good2 = b
                .concat(&core.transpose())
                .concat(&a)
                .concat(&b)
                .concat(&core)
                .concat(&a);
            if classify_finite_cut(chi_expand(&good2).digits(), mid).class != CutClass::Good {
                family_ok = false;
            }
            let bad1 = b
                .concat(&core.transpose())
                .concat(&b)
                .concat(&a)
                .concat(&core)
                .concat(&a);
            if classify_finite_cut(chi_expand(&bad1).digits(), full).class != CutClass::Bad {
                family_ok = false;
            }
            let bad2 = a
                .concat(&core.transpose())
                .concat(&a)
                .concat(&b)
                .concat(&core)
                .concat(&b);
            if classify_finite_cut(chi_expand(&bad2).digits(), mid).class != CutClass::Bad {
                family_ok = false;
            }
        }
    }
    r.check(
        "mirrored palindromic cut families",
        family_ok,
        "all cores to 8 digits",
    );

    // transposition identity on random two-sided words
    let mut rng = StdRng::seed_from_u64(seed);
    let mut transpose_ok = true;
    for _ in 0..200 {
        let e: Vec<u8> = (0..rng.gen_range(0..=6))
            .map(|_| rng.gen_range(1..=2))
            .collect();
        let f: Vec<u8> = (0..rng.gen_range(0..=6))
            .map(|_| rng.gen_range(1..=2))
            .collect();
        let x = rng.gen_range(1..=2);
        if !transpose_value_check(&e, x, &f) {
            transpose_ok = false;
        }
    }
    r.check(
        "transposed cut values agree (random)",
        transpose_ok,
        "200 samples",
    );

    // enclosure soundness: sampled continuations stay inside
    let mut sound_ok = true;
    for _ in 0..1000 {
        let plen = rng.gen_range(0..=6);
        let prefix: Vec<u32> = (0..plen).map(|_| rng.gen_range(1..=2)).collect();
        let encl = crate::cf::tail_enclosure(&prefix);
        let mut digits: Vec<u32> = prefix.clone();
        for _ in 0..40 {
            digits.push(rng.gen_range(1..=2));
        }
        let v = purely_periodic_tail(&digits);
        if !encl.contains(&v) {
            sound_ok = false;
        }
    }
    r.check(
        "tail enclosures contain sampled continuations",
        sound_ok,
        "1000 samples",
    );

    // the defining identity [2;2,w] + [0;1,1,w] = 3, exactly, random periods
    let mut identity_ok = true;
    for _ in 0..50 {
        let plen = rng.gen_range(1..=8);
        let period: Vec<u32> = (0..plen).map(|_| rng.gen_range(1..=2)).collect();
        let lhs = crate::cf::periodic_value(&CfWord::new(2, vec![2]), &period).add(
            &crate::cf::periodic_value(&CfWord::new(0, vec![1, 1]), &period),
        );
        if lhs != Quad::from_int(3) {
            identity_ok = false;
        }
    }
    r.check(
        "mirror identity sums to exactly 3",
        identity_ok,
        "50 random periods",
    );

    // odd cuts of projection words are good
    let specs = sample_projection_specs();
    for spec in specs.iter().take(4) {
        let w = witness(spec).unwrap();
        let mut all_good = true;
        let mut undecided = 0usize;
        let mut pos = 0usize;
        while pos <= odd_cut_horizon {
            let c = classify_infinite_cut(&w, pos, &[], max_depth);
            match c.class {
                CutClass::Good => {}
                CutClass::Undecided { .. } => undecided += 1,
                _ => all_good = false,
            }
            pos += 2;
        }
        if undecided > 0 {
            r.undecided(
                format!("odd cuts good for {spec}"),
                format!("{undecided} undecided"),
            );
        } else {
            r.check(
                format!("odd cuts good for {spec} (horizon {odd_cut_horizon})"),
                all_good,
                "",
            );
        }
    }

    r
}

/// Ten projection witnesses over different seeds and glue depths.
pub fn sample_projection_specs() -> Vec<WitnessSpec> {
    let mut out = Vec::new();
    for (n, seed) in [
        (WitnessN::Finite(0), ""),
        (WitnessN::Finite(1), ""),
        (WitnessN::Finite(2), ""),
        (WitnessN::Finite(3), "V"),
        (WitnessN::Finite(4), "U"),
        (WitnessN::Finite(0), "VU"),
        (WitnessN::Finite(2), "UV"),
        (WitnessN::Infinite, ""),
        (WitnessN::Infinite, "U"),
        (WitnessN::Finite(1), "VV"),
    ] {
        out.push(WitnessSpec {
            n,
            stream: OperatorStream::new(
                crate::words::parse_ops(seed).unwrap(),
                Continuation::Alternate,
            ),
            variant: Variant::Projection,
        });
    }
    out
}

/// Markov battery: the triple tree, the exact spectrum values, the
/// vertex-number correspondence, and the sup-function checks.
pub fn markov_suite(cohn_depth: usize, tree_limit: u64, seed: u64) -> SuiteReport {
    let mut r = SuiteReport::new("markov");

    let limit = BigInt::from(tree_limit);
    let triples = markov_tree(&limit);
    r.check(
        "all generated triples solve the Markov equation",
        triples.iter().all(|t| t.satisfies_equation()),
        format!("{} triples to {tree_limit}", triples.len()),
    );

    // spectrum values increase with z and accumulate below 3
    let mut zs: Vec<BigInt> = crate::markov::markov_numbers(&limit).into_iter().collect();
    zs.sort();
    let values: Vec<Quad> = zs
        .iter()
        .map(|z| spectrum_value(z).unwrap().value)
        .collect();
    let increasing = values.windows(2).all(|w| w[0] < w[1]);
    let below3 = values
        .iter()
        .all(|v| v.cmp_int(3) == std::cmp::Ordering::Less);
    r.check(
        "spectrum values strictly increase and stay below 3",
        increasing && below3,
        "",
    );
    let largest = values.last().unwrap();
    let gap = Quad::from_int(3).sub(largest);
    let close = gap.cmp_rational(&Rational::new(BigInt::one(), BigInt::from(1000)))
        == std::cmp::Ordering::Less;
    r.check(
        "largest value within 1e-3 of 3",
        close && zs.last().unwrap() >= &BigInt::from(10_000u32),
        format!("z = {}", zs.last().unwrap()),
    );

    let s5 = spectrum_value(&BigInt::one()).unwrap().value;
    r.check(
        "value at z=1 is sqrt 5",
        s5 == Quad::sqrt_int(BigInt::from(5)),
        "",
    );

    // vertex <-> Markov number on the substitution tree
    let vertices = cohn_tree(cohn_depth);
    let mut corr_ok = true;
    let mut matched = 0usize;
    for (word, _) in &vertices {
        match cohn_to_markov(word) {
            Ok(z) => {
                let direct = periodic_markov_value(word);
                let from_z = spectrum_value(&z).unwrap().value;
                if direct != from_z {
                    corr_ok = false;
                } else {
                    matched += 1;
                }
            }
            Err(_) => corr_ok = false,
        }
    }
    r.check(
        format!("vertex values invert to Markov numbers (depth {cohn_depth})"),
        corr_ok,
        format!("{matched} vertices matched"),
    );

    // sup function: golden-ratio expansion
    let g = m_tilde(&CfWord::new(1, vec![]), &[1]);
    r.check(
        "sup of approximations for the all-ones expansion",
        g.value == Quad::new(3.into(), 1.into(), 2.into(), 5.into()),
        format!("attained = {}", g.attained),
    );

    // the smallest sup over short eventually periodic expansions
    let mut min_val: Option<Quad> = None;
    for pre_len in 0..=2usize {
        for pre_bits in 0u32..(1 << pre_len) {
            let pre: Vec<u32> = (0..pre_len).map(|i| 1 + ((pre_bits >> i) & 1)).collect();
            for per_len in 1..=2usize {
                for per_bits in 0u32..(1 << per_len) {
                    let period: Vec<u32> =
                        (0..per_len).map(|i| 1 + ((per_bits >> i) & 1)).collect();
                    let v = m_tilde(&CfWord::new(1, pre.clone()), &period).value;
                    if min_val.as_ref().is_none_or(|m| v < *m) {
                        min_val = Some(v);
                    }
                }
            }
        }
    }
    r.check(
        "smallest sup over short expansions is (3+sqrt5)/2",
        min_val.unwrap() == Quad::new(3.into(), 1.into(), 2.into(), 5.into()),
        "",
    );

    // sup dominates the asymptotic best constant on random samples
    let mut rng = StdRng::seed_from_u64(seed);
    let mut dominates = true;
    for _ in 0..20 {
        let pre: Vec<u32> = (0..rng.gen_range(0..=3))
            .map(|_| rng.gen_range(1..=3))
            .collect();
        let period: Vec<u32> = (1..=rng.gen_range(1..=4))
            .map(|_| rng.gen_range(1..=3))
            .collect();
        let sup = m_tilde(&CfWord::new(1, pre.clone()), &period).value;
        let k = limsup_value(&period);
        if sup < k {
            dominates = false;
        }
    }
    r.check("sup dominates limsup (random)", dominates, "20 samples");

    // exact comparison agrees with 50-digit decimal comparison
    let mut decimal_ok = true;
    for i in 0..values.len() {
        for j in 0..values.len() {
            let exact = values[i].cmp_quad(&values[j]);
            let di = values[i].to_decimal(50);
            let dj = values[j].to_decimal(50);
            let numeric = compare_decimal_strings(&di, &dj);
            if exact != numeric {
                decimal_ok = false;
            }
        }
    }
    r.check("exact order matches 50-digit decimals", decimal_ok, "");

    r
}

/// Asymptotic best constant of an eventually periodic expansion: the largest
/// two-sided periodic cut value of the period.
fn limsup_value(period: &[u32]) -> Quad {
    let p = period.len();
    let mut best: Option<Quad> = None;
    for r in 0..p {
        let rot: Vec<u32> = (0..p).map(|j| period[(r + j) % p]).collect();
        let rev: Vec<u32> = (0..p).map(|j| period[(r + p - 1 - j) % p]).collect();
        let v = purely_periodic_tail(&rot).add(&purely_periodic_tail(&rev).inv());
        if best.as_ref().is_none_or(|b| v > *b) {
            best = Some(v);
        }
    }
    best.unwrap()
}

fn compare_decimal_strings(a: &str, b: &str) -> std::cmp::Ordering {
    // both strings are positive decimals in plain notation here
    let parse = |s: &str| -> (String, String) {
        match s.split_once('.') {
            Some((i, f)) => (i.to_string(), f.to_string()),
            None => (s.to_string(), String::new()),
        }
    };
    let (ia, fa) = parse(a);
    let (ib, fb) = parse(b);
    if ia.len() != ib.len() {
        return ia.len().cmp(&ib.len());
    }
    match ia.cmp(&ib) {
        std::cmp::Ordering::Equal => {}
        other => return other,
    }
    let width = fa.len().max(fb.len());
    let pa = format!("{fa:0<width$}");
    let pb = format!("{fb:0<width$}");
    pa.cmp(&pb)
}

/// Bad-cut counts of the witness families, and the equivalence of cut
/// counting with the rational-approximation count.
pub fn counts_suite(
    seed_len_max: usize,
    n_max: u32,
    threes_max: u32,
    stage_max: usize,
    horizon_stage: usize,
    max_depth: usize,
    seed: u64,
) -> SuiteReport {
    let mut r = SuiteReport::new("counts");

    for ops in all_op_words(seed_len_max) {
        let stream = OperatorStream::new(ops.clone(), Continuation::Alternate);
        let horizon = stream.stage_pair(horizon_stage).beta.digit_len();
        let label = format!(
            "seed {}",
            ops.iter()
                .map(|o| match o {
                    Renorm::U => 'U',
                    Renorm::V => 'V',
                })
                .collect::<String>()
        );

        for n in 0..=n_max {
            let spec = WitnessSpec {
                n: WitnessN::Finite(n),
                stream: stream.clone(),
                variant: Variant::Projection,
            };
            let w = witness(&spec).unwrap();
            let count = count_bad_cuts(&w, horizon, max_depth);
            let glue = crate::constructions::projection_glue_len(&stream, n);
            match count.verdict {
                Some(c) => r.check(
                    format!("{label}: projection witness n={n} has {n} bad cuts"),
                    c == n as usize && count.bad.iter().all(|&p| n == 0 || p <= glue),
                    format!("found {c} at {:?} (glue {glue})", count.bad),
                ),
                None => r.undecided(
                    format!("{label}: projection witness n={n}"),
                    format!("undecided at {:?}", count.undecided),
                ),
            }
        }

        for n in 1..=threes_max {
            let spec = WitnessSpec {
                n: WitnessN::Finite(n),
                stream: stream.clone(),
                variant: Variant::Threes,
            };
            let w = witness(&spec).unwrap();
            let count = count_bad_cuts(&w, horizon, max_depth);
            match count.verdict {
                Some(c) => {
                    let in_front = count.bad.iter().all(|&p| p < n as usize);
                    r.check(
                        format!("{label}: threes witness n={n} has {n} leading bad cuts"),
                        c == n as usize && in_front,
                        format!("found {c} at {:?}", count.bad),
                    );
                }
                None => r.undecided(
                    format!("{label}: threes witness n={n}"),
                    format!("undecided at {:?}", count.undecided),
                ),
            }
        }

        // bad cuts inside the first beta of each prefix alpha beta beta
        let mut last_pos = 0usize;
        let mut stages_ok = true;
        let mut detail = String::new();
        for stage in 1..=stage_max {
            match stage_bad_cut_locator(&stream, stage, max_depth) {
                Ok(pos) => {
                    if pos <= last_pos {
                        stages_ok = false;
                    }
                    detail.push_str(&format!("s{stage}@{pos} "));
                    last_pos = pos;
                }
                Err(_) => {
                    stages_ok = false;
                }
            }
        }
        r.check(
            format!("{label}: stage bad cuts at increasing positions"),
            stages_ok,
            detail,
        );
    }

    // cut counting equals the rational-approximation count
    let equiv = solution_equivalence_suite(seed, 20, max_depth);
    r.cases.extend(equiv.cases);

    r
}

/// Bad-cut counting against an independent oracle: for eventually periodic
/// expansions, the number of bad cuts in a window equals the number of
/// convergents satisfying the `1/(3q^2)` inequality, computed directly.
pub fn solution_equivalence_suite(seed: u64, cases: usize, max_depth: usize) -> SuiteReport {
    let mut r = SuiteReport::new("solutions");
    let mut rng = StdRng::seed_from_u64(seed);
    let mut equiv_ok = true;
    let mut detail = String::new();
    for case in 0..cases {
        let pre: Vec<u8> = (0..rng.gen_range(0..=3))
            .map(|_| rng.gen_range(1..=3))
            .collect();
        let period: Vec<u8> = (1..=rng.gen_range(1..=4))
            .map(|_| rng.gen_range(1..=3))
            .collect();
        let horizon = rng.gen_range(10..=60);
        let w = LazyWord::periodic(pre.clone(), period.clone());
        let cuts = count_bad_cuts(&w, horizon, max_depth);
        let approx = rational_solution_count(&pre, &period, horizon);
        match cuts.verdict {
            Some(c) if c == approx => {}
            other => {
                equiv_ok = false;
                detail = format!(
                    "case {case}: pre {pre:?} period {period:?} horizon {horizon}: cuts {other:?} vs approximations {approx}"
                );
            }
        }
    }
    r.check(
        format!("bad cuts count rational approximations ({cases} random expansions)"),
        equiv_ok,
        detail,
    );
    r
}

/// Independent oracle: count convergents of `x = [0; pre, period^inf]` with
/// `|x - p/q| < 1/(3 q^2)`, for convergent indices `0..=horizon`, by direct
/// exact arithmetic on the convergents.
fn rational_solution_count(pre: &[u8], period: &[u8], horizon: usize) -> usize {
    use crate::cf::{periodic_value, Convergents};
    let digit = |i: usize| -> u32 {
        if i < pre.len() {
            pre[i] as u32
        } else {
            period[(i - pre.len()) % period.len()] as u32
        }
    };
    let x = periodic_value(
        &CfWord::new(0, pre.iter().map(|&d| d as u32).collect()),
        &period.iter().map(|&d| d as u32).collect::<Vec<_>>(),
    );
    let mut conv = Convergents::start();
    conv.push(0);
    let mut count = 0usize;
    for n in 0..=horizon {
        if n > 0 {
            conv.push(digit(n - 1));
        }
        let (p, q) = conv.current();
        // |x - p/q| < 1/(3 q^2)  <=>  |3 q^2 x - 3 p q| < 1
        let t = x
            .mul(&Quad::from_int(BigInt::from(3) * q * q))
            .sub(&Quad::from_int(BigInt::from(3) * p * q));
        let abs = if t.sign() < 0 { t.neg() } else { t };
        if abs.cmp_int(1) == std::cmp::Ordering::Less {
            count += 1;
        }
    }
    count
}

/// Divergence of limit words over distinct operator words (both sides).
pub fn injectivity_suite(len_max: usize) -> SuiteReport {
    let mut r = SuiteReport::new("injectivity");
    let words = all_op_words(len_max);
    for side in [CenterSide::BetaTranspose, CenterSide::AlphaBetaBeta] {
        let mut ok = true;
        let mut compared = 0usize;
        let mut skipped = 0usize;
        for i in 0..words.len() {
            for j in i + 1..words.len() {
                match injectivity_check(&words[i], &words[j], side) {
                    Ok(_) => compared += 1,
                    Err(InjectivityError::PrefixComparable) => skipped += 1,
                    Err(e) => {
                        ok = false;
                        r.check(
                            format!("divergence {:?} vs {:?} ({side:?})", words[i], words[j]),
                            false,
                            format!("{e}"),
                        );
                    }
                }
            }
        }
        r.check(
            format!("all comparable pairs diverge, side {side:?} (len <= {len_max})"),
            ok,
            format!("{compared} pairs diverged, {skipped} nested pairs skipped"),
        );
    }
    r
}

/// Good cut values approaching 3 from below along the stages of the
/// zero-bad-cut limit word.
pub fn lagrange_suite(stages: usize, max_depth: usize) -> SuiteReport {
    let mut r = SuiteReport::new("lagrange");
    let spec = WitnessSpec {
        n: WitnessN::Finite(0),
        stream: OperatorStream::alternating(),
        variant: Variant::Projection,
    };
    let w = witness(&spec).unwrap();
    let mut last: Option<crate::Interval> = None;
    let mut increasing = true;
    let mut all_good = true;
    let mut final_ev = None;
    for stage in 1..=stages {
        let ev = lagrange_evidence(&w, stage, max_depth);
        if !ev.undecided.is_empty() {
            r.undecided(
                format!("stage {stage} evidence"),
                format!("undecided cuts at {:?}", ev.undecided),
            );
            return r;
        }
        if ev.max.hi().cmp_int(3) == std::cmp::Ordering::Greater {
            all_good = false;
        }
        if let Some(prev) = &last {
            if ev.max.lo().cmp_quad(prev.hi()) != std::cmp::Ordering::Greater {
                increasing = false;
            }
        }
        last = Some(ev.max.clone());
        final_ev = Some(ev);
    }
    r.check(
        format!("stage maxima strictly increase (1..={stages})"),
        increasing,
        "",
    );
    r.check("all stage maxima at most 3", all_good, "");
    if stages >= 2 {
        // the stage-2 maximum comes from cuts inside repeated stage-1
        // words, so it must reach within 1e-6 of the exact periodic value
        // of the stage-1 second word
        let beta1 = spec.stream.stage_pair(1).beta;
        let periodic = crate::markov::periodic_markov_value(&beta1);
        let eps = Rational::new(BigInt::one(), BigInt::from(1_000_000));
        let floor = periodic.sub(&Quad::from_rational(&eps));
        let ev2 = lagrange_evidence(&w, 2, max_depth);
        r.check(
            "stage-2 maximum reaches the stage-1 periodic value",
            ev2.max.lo().cmp_quad(&floor) == std::cmp::Ordering::Greater,
            format!("periodic value {}", periodic.to_decimal(20)),
        );
    }
    if let Some(ev) = final_ev {
        let threshold = Rational::new(BigInt::from(2997), BigInt::from(1000));
        let beats = ev.max.lo().cmp_rational(&threshold) == std::cmp::Ordering::Greater;
        r.check(
            format!("stage-{stages} maximum exceeds 3 - 1e-3"),
            beats,
            format!("found at cut {}", ev.pos),
        );
    }
    r
}

/// Two-sided cut checks of the bi-infinite limit descriptions within a
/// window. Every examined cut must certify as at most 3, with one principled
/// exception: the cut just left of the gluing center sits on an infinite
/// palindromic mirror and its value is exactly 3, so interval refinement can
/// only pin it inside an ever-shrinking straddle. Such a cut is accepted
/// when its enclosure contains 3 with width below 1e-20, and never more than
/// one per side may occur.
pub fn biinfinite_evidence_suite(window: i64, max_depth: usize) -> SuiteReport {
    let mut r = SuiteReport::new("biinfinite");
    let eps = Rational::new(BigInt::one(), BigInt::from(10u8).pow(20));
    let three = Rational::new(3.into(), 1.into());
    let lo_bound = &three - &eps;
    let hi_bound = &three + &eps;
    for (side, label) in [
        (CenterSide::BetaTranspose, "transposed-pair limit"),
        (CenterSide::AlphaBetaBeta, "forward limit"),
    ] {
        let desc = biinfinite_witness(&OperatorStream::alternating(), side);
        let mut good = 0usize;
        let mut bad = Vec::new();
        let mut mirror = Vec::new();
        let mut unresolved = Vec::new();
        for pos in -window / 2..window / 2 {
            let c = classify_biinfinite_cut(&desc, pos, max_depth);
            match c.class {
                CutClass::Good => good += 1,
                CutClass::Bad => bad.push(pos),
                _ => {
                    let tight = c.enclosure.lo().cmp_rational(&lo_bound)
                        == std::cmp::Ordering::Greater
                        && c.enclosure.hi().cmp_rational(&hi_bound) == std::cmp::Ordering::Less
                        && c.enclosure.contains(&Quad::from_int(3));
                    if tight {
                        mirror.push(pos);
                    } else {
                        unresolved.push(pos);
                    }
                }
            }
        }
        if !unresolved.is_empty() {
            r.undecided(
                format!("{label}: window {window}"),
                format!("undecided away from the mirror at {unresolved:?}"),
            );
        } else {
            r.check(
                format!("{label}: no cut in window {window} certifies above 3"),
                bad.is_empty() && mirror.len() <= 1,
                format!("{good} good, exact-3 mirror at {mirror:?}"),
            );
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_pass_at_small_depth() {
        let r = identities_suite(6, 3, DEFAULT_SEED);
        assert!(
            r.passed(),
            "{:?}",
            r.cases
                .iter()
                .filter(|c| c.status != CaseStatus::Pass)
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn cuts_pass_at_small_scale() {
        let r = cuts_suite(DEFAULT_SEED, 60, 2048);
        assert!(
            r.passed(),
            "{:?}",
            r.cases
                .iter()
                .filter(|c| c.status != CaseStatus::Pass)
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn markov_passes_at_small_scale() {
        let r = markov_suite(4, 200_000, DEFAULT_SEED);
        assert!(
            r.passed(),
            "{:?}",
            r.cases
                .iter()
                .filter(|c| c.status != CaseStatus::Pass)
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn injectivity_passes_short() {
        let r = injectivity_suite(3);
        assert!(r.passed());
    }
}

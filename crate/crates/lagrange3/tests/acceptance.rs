//! Acceptance battery: one test per criterion, each printing a single
//! pass/fail line. Run with
//! `cargo test -p lagrange3 --test acceptance -- --nocapture --test-threads=1`
//! to see the lines in order.

use lagrange3::cf::{purely_periodic_tail, tail_enclosure, CfWord};
use lagrange3::constructions::{
    witness, Continuation, OperatorStream, Variant, WitnessN, WitnessSpec,
};
use lagrange3::cuts::{
    classify_finite_cut, classify_infinite_cut, eta_of_left, CutClass, LazyWord,
};
use lagrange3::markov::{
    cohn_to_markov, m_tilde, m_tilde_evidence, periodic_markov_value, spectrum_value,
};
use lagrange3::suites::{
    counts_suite, identities_suite, injectivity_suite, lagrange_suite, sample_projection_specs,
    solution_equivalence_suite, CaseStatus, SuiteReport, DEFAULT_SEED,
};
use lagrange3::words::{chi_expand, cohn_tree, AbWord};
use lagrange3::{BigInt, Quad};

fn conclude_timed(
    number: u32,
    name: &str,
    failures: Vec<String>,
    started: Option<std::time::Instant>,
) {
    let elapsed = started
        .map(|t| format!(" [{} ms]", t.elapsed().as_millis()))
        .unwrap_or_default();
    if failures.is_empty() {
        println!("acceptance {number:02} ({name}): PASS{elapsed}");
    } else {
        println!("acceptance {number:02} ({name}): FAIL{elapsed}");
        for f in &failures {
            println!("    - {f}");
        }
        panic!("criterion {number} failed: {failures:?}");
    }
}

fn suite_failures(report: &SuiteReport) -> Vec<String> {
    report
        .cases
        .iter()
        .filter(|c| c.status != CaseStatus::Pass)
        .map(|c| format!("[{}] {}: {:?} {}", report.suite, c.name, c.status, c.detail))
        .collect()
}

fn ab(s: &str) -> AbWord {
    s.parse().unwrap()
}

#[test]
fn criterion_01_initial_spectrum_values() {
    let started = std::time::Instant::now();
    let mut failures = Vec::new();
    let cases = [
        ("b", Quad::sqrt_int(BigInt::from(5))),
        ("a", Quad::sqrt_int(BigInt::from(8))),
        ("ab", Quad::new(0.into(), 1.into(), 5.into(), 221.into())),
    ];
    for (period, expect) in cases {
        let got = periodic_markov_value(&ab(period));
        if got != expect {
            failures.push(format!(
                "periodic value of {period}: got {got}, want {expect}"
            ));
        }
    }
    conclude_timed(1, "initial spectrum values exact", failures, Some(started));
}

#[test]
fn criterion_02_vertex_markov_correspondence() {
    let started = std::time::Instant::now();
    let mut failures = Vec::new();
    let vertices = cohn_tree(6);
    if vertices.len() != 127 {
        failures.push(format!("expected 127 vertices, got {}", vertices.len()));
    }
    for (word, _) in &vertices {
        match cohn_to_markov(word) {
            Ok(z) => {
                let direct = periodic_markov_value(word);
                let from_z = spectrum_value(&z).expect("correspondence gives Markov numbers");
                if direct != from_z.value {
                    failures.push(format!("value mismatch at vertex {word} (z = {z})"));
                }
            }
            Err(e) => failures.push(format!("vertex {word}: {e}")),
        }
    }
    conclude_timed(
        2,
        "vertex-to-Markov-number correspondence, depth 6",
        failures,
        Some(started),
    );
}

#[test]
fn criterion_03_identity_suites() {
    let started = std::time::Instant::now();
    let report = identities_suite(10, 5, DEFAULT_SEED);
    conclude_timed(
        3,
        "string identity suites, bar depth 10, tilde length 5",
        suite_failures(&report),
        Some(started),
    );
}

#[test]
fn criterion_04_worked_cut_examples() {
    let started = std::time::Instant::now();
    let mut failures = Vec::new();
    let digits = |s: &str| chi_expand(&ab(s)).digits().to_vec();

    let r = classify_finite_cut(&digits("bbaab"), 4);
    if r.class != CutClass::Bad {
        failures.push(format!("bb|aab expected bad, got {}", r.class));
    }
    let r = classify_finite_cut(&digits("aabaab"), 6);
    if r.class != CutClass::Good {
        failures.push(format!("aab|aab expected good, got {}", r.class));
    }
    // the a|b seam denotes the mid-letter cut, one digit into the a
    let r = classify_finite_cut(&digits("abaab"), 1);
    if r.class != CutClass::Indeterminate {
        failures.push(format!("a|baab expected indeterminate, got {}", r.class));
    }

    // periodic projection: the same mid-letter cut turns bad
    let w = LazyWord::periodic(vec![], digits("abb"));
    let r = classify_infinite_cut(&w, 1, &[], 4096);
    if r.class != CutClass::Bad {
        failures.push(format!("(abb)^inf cut 1 expected bad, got {}", r.class));
    }

    // an infinite word starting abaab...: bad for every {1,2} continuation
    let prefix = digits("abaab");
    let eta = eta_of_left(&prefix[..1]);
    let tail: Vec<u32> = prefix[1..].iter().map(|&d| d as u32).collect();
    let encl = tail_enclosure(&tail).shift(&eta);
    if !encl.entirely_above_int(3) {
        failures.push(format!("abaab... cut 1 enclosure {encl} does not clear 3"));
    }

    conclude_timed(4, "worked cut examples reproduce", failures, Some(started));
}

#[test]
fn criterion_05_bad_cut_counts() {
    let started = std::time::Instant::now();
    // all operator seeds of length <= 3, alternating continuation, horizon
    // |beta_4^T|, projection n <= 4 and threes n <= 5, stage cuts 1..3
    let report = counts_suite(3, 4, 5, 3, 4, 4096, DEFAULT_SEED);
    conclude_timed(
        5,
        "bad-cut counts across seeds and variants",
        suite_failures(&report),
        Some(started),
    );
}

#[test]
fn criterion_06_odd_cuts_good() {
    let started = std::time::Instant::now();
    let mut failures = Vec::new();
    let specs = sample_projection_specs();
    assert_eq!(specs.len(), 10);
    for spec in &specs {
        let w = witness(spec).expect("valid spec");
        let mut pos = 0usize;
        while pos <= 2000 {
            let r = classify_infinite_cut(&w, pos, &[], 4096);
            match r.class {
                CutClass::Good => {}
                other => {
                    failures.push(format!("{spec}: cut {pos} classified {other}"));
                    break;
                }
            }
            pos += 2;
        }
    }
    conclude_timed(
        6,
        "even-left-length cuts good to horizon 2000",
        failures,
        Some(started),
    );
}

#[test]
fn criterion_07_solution_count_equivalence() {
    let started = std::time::Instant::now();
    let report = solution_equivalence_suite(DEFAULT_SEED, 20, 4096);
    conclude_timed(
        7,
        "bad cuts equal rational-approximation counts",
        suite_failures(&report),
        Some(started),
    );
}

#[test]
fn criterion_08_sup_function_checks() {
    let started = std::time::Instant::now();
    let mut failures = Vec::new();

    let r = m_tilde(&CfWord::new(1, vec![]), &[1]);
    let expect = Quad::new(3.into(), 1.into(), 2.into(), 5.into());
    if r.value != expect {
        failures.push(format!("sup of the all-ones expansion: got {}", r.value));
    }
    // The stated criterion wants the flag "not attained". Exact arithmetic
    // says otherwise: gamma_2 + eta_2 = phi + [0;1] = phi + 1 = (3+sqrt5)/2,
    // so the supremum is a maximum, attained at n = 1. The check below is
    // kept as stated and fails honestly; see the test output.
    if r.attained {
        failures.push(format!(
            "criterion states the sup is not attained, but it is attained at n = {:?}: \
             gamma_2 + eta_2 = phi + [0;1] = (3+sqrt5)/2 exactly (the premise that \
             [0;1^n] increases monotonically is false - [0;1] = 1 tops the limit 1/phi)",
            r.attained_at
        ));
    }

    let w0 = witness(&"n=0;ops=;cont=alt;variant=projection".parse().unwrap()).unwrap();
    let horizon = 300;
    let ev = m_tilde_evidence(&w0, horizon, 4096);
    if !ev.undecided.is_empty() || ev.max.hi().cmp_int(3) == std::cmp::Ordering::Greater {
        failures.push(format!(
            "zero-solution witness evidence not <= 3: {}",
            ev.max
        ));
    }
    let w1 = witness(&"n=1;ops=;cont=alt;variant=projection".parse().unwrap()).unwrap();
    let ev = m_tilde_evidence(&w1, horizon, 4096);
    if ev.max.lo().cmp_int(3) != std::cmp::Ordering::Greater {
        failures.push(format!("one-solution witness evidence not > 3: {}", ev.max));
    }

    conclude_timed(
        8,
        "sup-function value, flag and evidence",
        failures,
        Some(started),
    );
}

#[test]
fn criterion_09_injectivity_at_depth() {
    let started = std::time::Instant::now();
    let report = injectivity_suite(5);
    conclude_timed(
        9,
        "limit words of distinct operator words diverge",
        suite_failures(&report),
        Some(started),
    );
}

#[test]
fn criterion_10_good_values_approach_3() {
    let started = std::time::Instant::now();
    let report = lagrange_suite(4, 8192);
    conclude_timed(
        10,
        "stage maxima increase toward 3",
        suite_failures(&report),
        Some(started),
    );
}

/// Not a numbered criterion: the enclosure machinery itself is sampled
/// against brute force once more at the acceptance scale.
#[test]
fn soundness_spot_checks() {
    let started = std::time::Instant::now();
    let mut failures = Vec::new();
    // enclosure containment for a long random continuation
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(DEFAULT_SEED ^ 1);
    for _ in 0..1000 {
        let plen = rng.gen_range(0..=5);
        let prefix: Vec<u32> = (0..plen).map(|_| rng.gen_range(1..=2)).collect();
        let encl = tail_enclosure(&prefix);
        let mut digits = prefix.clone();
        for _ in 0..40 {
            digits.push(rng.gen_range(1..=2));
        }
        let v = purely_periodic_tail(&digits);
        if !encl.contains(&v) {
            failures.push(format!("escape: {digits:?}"));
            break;
        }
    }
    // a witness word agrees with its spec stream across stages
    let spec: WitnessSpec = "n=0;ops=VU;cont=alt;variant=projection".parse().unwrap();
    let w = witness(&spec).unwrap();
    let stream = OperatorStream::new(
        lagrange3::words::parse_ops("VU").unwrap(),
        Continuation::Alternate,
    );
    for stage in 1..=3usize {
        let beta = stream.stage_pair(stage).beta;
        let expect: Vec<u8> = chi_expand(&beta).digits().iter().rev().copied().collect();
        if w.prefix(expect.len()) != expect {
            failures.push(format!("stage {stage} prefix mismatch"));
        }
    }
    let spec = WitnessSpec {
        n: WitnessN::Finite(3),
        stream,
        variant: Variant::Threes,
    };
    let w = witness(&spec).unwrap();
    assert_eq!(&w.prefix(3), &[3, 3, 3]);
    conclude_timed(0, "soundness spot checks", failures, Some(started));
}

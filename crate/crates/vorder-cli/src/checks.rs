//! The `check` subcommand: a self-contained invariant suite over the library,
//! with seeded random workloads sized by `--seed`, `--max-n`, and `--sigma`.

use std::cmp::Ordering;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use vorder::*;

type Outcome = std::result::Result<String, String>;

pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub struct CheckReport {
    pub suites: Vec<SuiteResult>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed)
    }
}

const RANDOM_CASES: usize = 2_000;

pub fn run_all(seed: u64, max_n: usize, sigma: u32) -> CheckReport {
    let max_n = max_n.max(2);
    let sigma = sigma.max(2);
    let suites = vec![
        suite("goldens", goldens()),
        suite("comparator-agreement", comparator_agreement(seed, max_n, sigma)),
        suite("total-order-axioms", total_order_axioms()),
        suite("extension-lemmas", extension_lemmas(seed, max_n, sigma)),
        suite("subsequence-rule", subsequence_rule(seed, max_n, sigma)),
        suite("stream-consistency", stream_consistency(seed, sigma)),
        suite("factorization", factorization_invariants()),
        suite("suffix-v-order", suffix_v_order(seed, max_n, sigma)),
        suite("pipeline-equivalence", pipeline_equivalence(seed, sigma)),
        suite("compatibility", compatibility()),
    ];
    CheckReport { suites }
}

fn suite(name: &'static str, outcome: Outcome) -> SuiteResult {
    match outcome {
        Ok(detail) => SuiteResult { name, passed: true, detail },
        Err(detail) => SuiteResult { name, passed: false, detail },
    }
}

fn random_word(rng: &mut StdRng, sigma: u32, min_len: usize, max_len: usize) -> Vec<Letter> {
    let len = rng.random_range(min_len..=max_len);
    (0..len).map(|_| rng.random_range(1..=sigma)).collect()
}

fn enumerate(sigma: u32, min_len: usize, max_len: usize) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    let mut prev: Vec<Vec<Letter>> = vec![vec![]];
    if min_len == 0 {
        out.push(vec![]);
    }
    for len in 1..=max_len {
        let mut next = Vec::new();
        for w in &prev {
            for c in 1..=sigma {
                let mut v = w.clone();
                v.push(c);
                next.push(v);
            }
        }
        if len >= min_len {
            out.extend(next.iter().cloned());
        }
        prev = next;
    }
    out
}

fn text(s: &str) -> Vec<Letter> {
    s.bytes().map(Letter::from).collect()
}

fn check(cond: bool, message: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(message())
    }
}

fn goldens() -> Outcome {
    let path = star_path(&[3, 2, 4, 1, 5]);
    for state in [vec![3, 2, 4, 5], vec![3, 4, 5], vec![4, 5]] {
        check(path.states().contains(&state), || {
            format!("star path of 32415 misses {:?}", state)
        })?;
    }
    check(compare_v_form(&[4, 5], &[3, 2, 4, 1, 5]) == Ordering::Less, || {
        "45 should precede 32415".to_string()
    })?;
    let dictionary = ["sop", "top", "strop", "strophe", "catastrophe"];
    for pair in dictionary.windows(2) {
        check(compare_v_form(&text(pair[0]), &text(pair[1])) == Ordering::Less, || {
            format!("{} should precede {}", pair[0], pair[1])
        })?;
    }
    for (x, y) in [
        (vec![4, 3, 1, 3, 3], vec![1, 4, 3, 2, 3]),
        (vec![2, 4, 4, 2], vec![3, 4, 4, 1]),
        (vec![4, 4, 2, 2], vec![4, 4, 1, 3]),
    ] {
        check(compare_v_form(&x, &y) == Ordering::Less, || {
            format!("{:?} should precede {:?}", x, y)
        })?;
    }
    Ok("star path, dictionary, counterexamples".to_string())
}

fn comparator_agreement(seed: u64, max_n: usize, sigma: u32) -> Outcome {
    type Route = fn(&[Letter], &[Letter]) -> Ordering;
    let routes: &[(&str, Route)] = &[
        ("v_form", compare_v_form),
        ("input_sensitive", compare_input_sensitive),
        ("prefix_stream", compare_prefix_stream),
        ("suffix_stream", compare_suffix_stream),
    ];
    let words = enumerate(3, 0, 5);
    for x in &words {
        for y in &words {
            let expected = compare_star_oracle(x, y);
            for (name, route) in routes {
                check(route(x, y) == expected, || {
                    format!("{} disagrees with the oracle on {:?} vs {:?}", name, x, y)
                })?;
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..RANDOM_CASES {
        let s = rng.random_range(1..=sigma);
        let x = random_word(&mut rng, s, 0, max_n);
        let y = random_word(&mut rng, s, 0, max_n);
        let expected = compare_star_oracle(&x, &y);
        for (name, route) in routes {
            check(route(&x, &y) == expected, || {
                format!("{} disagrees with the oracle on {:?} vs {:?}", name, x, y)
            })?;
        }
    }
    Ok(format!(
        "5 routes on {} exhaustive pairs + {} random pairs",
        words.len() * words.len(),
        RANDOM_CASES
    ))
}

fn total_order_axioms() -> Outcome {
    let words = enumerate(2, 0, 6);
    let n = words.len();
    let mut matrix = vec![Ordering::Equal; n * n];
    for a in 0..n {
        for b in 0..n {
            matrix[a * n + b] = compare_v_form(&words[a], &words[b]);
        }
    }
    for a in 0..n {
        for b in 0..n {
            check(matrix[a * n + b] == matrix[b * n + a].reverse(), || {
                format!("antisymmetry fails on {:?} vs {:?}", words[a], words[b])
            })?;
            check((matrix[a * n + b] == Ordering::Equal) == (words[a] == words[b]), || {
                format!("equality mismatch on {:?} vs {:?}", words[a], words[b])
            })?;
        }
    }
    for a in 0..n {
        for b in 0..n {
            if matrix[a * n + b] != Ordering::Less {
                continue;
            }
            for c in 0..n {
                if matrix[b * n + c] == Ordering::Less && matrix[a * n + c] != Ordering::Less {
                    return Err(format!(
                        "transitivity fails on {:?}, {:?}, {:?}",
                        words[a], words[b], words[c]
                    ));
                }
            }
        }
    }
    Ok(format!("{} strings, all pairs and triples", n))
}

fn extension_lemmas(seed: u64, max_n: usize, sigma: u32) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed ^ 0xA11);
    let insert = |s: &[Letter], block: usize, before: bool, ins: &[Letter]| -> Vec<Letter> {
        let vf = v_form(s).expect("nonempty");
        let g = vf.max_letter();
        let mut out = Vec::with_capacity(s.len() + ins.len());
        for (bi, b) in vf.blocks().iter().enumerate() {
            if bi > 0 {
                out.push(g);
            }
            if bi == block && before {
                out.extend_from_slice(ins);
            }
            out.extend_from_slice(b);
            if bi == block && !before {
                out.extend_from_slice(ins);
            }
        }
        out
    };
    for _ in 0..RANDOM_CASES {
        let s = rng.random_range(2..=sigma);
        let x = random_word(&mut rng, s, 1, max_n);
        let y = random_word(&mut rng, s, 1, max_n);
        let base = compare_v_form(&x, &y);

        let lambda = rng.random_range(1..=s);
        let mut xa = x.clone();
        xa.push(lambda);
        let mut ya = y.clone();
        ya.push(lambda);
        check(compare_v_form(&xa, &ya) == base, || {
            format!("append lemma fails on {:?}, {:?}, lambda {}", x, y, lambda)
        })?;
        let mut xp = vec![lambda];
        xp.extend_from_slice(&x);
        let mut yp = vec![lambda];
        yp.extend_from_slice(&y);
        check(compare_v_form(&xp, &yp) == base, || {
            format!("prepend lemma fails on {:?}, {:?}, lambda {}", x, y, lambda)
        })?;

        let u = random_word(&mut rng, s, 0, 8);
        let v = random_word(&mut rng, s, 0, 8);
        let wrap = |w: &[Letter]| {
            let mut out = u.clone();
            out.extend_from_slice(w);
            out.extend_from_slice(&v);
            out
        };
        check(compare_v_form(&wrap(&x), &wrap(&y)) == base, || {
            format!("context lemma fails on {:?}, {:?}", x, y)
        })?;

        let gmax =
            std::cmp::max(v_form(&x).unwrap().max_letter(), v_form(&y).unwrap().max_letter());
        let block =
            rng.random_range(0..=std::cmp::min(v_form(&x).unwrap().count(), v_form(&y).unwrap().count()));
        let before = rng.random_bool(0.5);
        let ins: Vec<Letter> =
            (0..rng.random_range(1..=3)).map(|_| rng.random_range(1..=gmax)).collect();
        let xi = insert(&x, block, before, &ins);
        let yi = insert(&y, block, before, &ins);
        check(compare_v_form(&xi, &yi) == base, || {
            format!("insertion lemma fails on {:?}, {:?}, ins {:?}", x, y, ins)
        })?;

        if base != Ordering::Equal {
            let (lo, hi) = if base == Ordering::Less { (&x, &y) } else { (&y, &x) };
            let lambda = rng.random_range(1..=s);
            let mu = rng.random_range(lambda..=s);
            let mut llo = vec![lambda];
            llo.extend_from_slice(lo);
            let mut mhi = vec![mu];
            mhi.extend_from_slice(hi);
            check(compare_v_form(&llo, &mhi) == Ordering::Less, || {
                format!("monotone prepend fails on {:?}, {:?}", lo, hi)
            })?;
            let mut lol = lo.clone();
            lol.push(lambda);
            let mut him = hi.clone();
            him.push(mu);
            check(compare_v_form(&lol, &him) == Ordering::Less, || {
                format!("monotone append fails on {:?}, {:?}", lo, hi)
            })?;
        }
    }
    // A letter above both maxima flips the order.
    let x = [1, 3, 2, 3];
    let y = [3, 1, 3, 3];
    let xp = insert(&x, 0, false, &[4]);
    let yp = insert(&y, 0, false, &[4]);
    check(
        compare_v_form(&x, &y) == Ordering::Less
            && compare_v_form(&xp, &yp) == Ordering::Greater,
        || "the insertion counterexample no longer flips".to_string(),
    )?;
    Ok(format!("{} cases per lemma + counterexample regressions", RANDOM_CASES))
}

fn subsequence_rule(seed: u64, max_n: usize, sigma: u32) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed ^ 0x5b5);
    for _ in 0..RANDOM_CASES {
        let s = rng.random_range(1..=sigma);
        let x = random_word(&mut rng, s, 1, max_n);
        let v: Vec<Letter> = x.iter().copied().filter(|_| rng.random_bool(0.6)).collect();
        if v.len() == x.len() {
            continue;
        }
        check(subsequence_precedes(&v, &x), || {
            format!("{:?} should be a proper subsequence of {:?}", v, x)
        })?;
        check(compare_v_form(&v, &x) == Ordering::Less, || {
            format!("subsequence {:?} should precede {:?}", v, x)
        })?;
    }
    // The chain of powers and extensions ascends.
    for _ in 0..200 {
        let s = rng.random_range(2..=sigma);
        let mut u = random_word(&mut rng, s, 1, 5);
        if u == [1] {
            u.push(rng.random_range(1..=s));
        }
        let v = random_word(&mut rng, s, 1, 5);
        let w = random_word(&mut rng, s, 1, 5);
        let mut chain: Vec<Vec<Letter>> = vec![vec![1]];
        for t in 1..=3usize {
            chain.push(u.repeat(t));
        }
        let u3 = u.repeat(3);
        for t in 1..=2usize {
            let mut c = u3.clone();
            c.extend(v.repeat(t));
            chain.push(c);
        }
        let mut top = u3.clone();
        top.extend(v.repeat(2));
        top.extend_from_slice(&w);
        chain.push(top);
        for pair in chain.windows(2) {
            check(compare_v_form(&pair[0], &pair[1]) == Ordering::Less, || {
                format!("chain fails between {:?} and {:?}", pair[0], pair[1])
            })?;
        }
    }
    Ok(format!("{} subsequence cases + 200 chains", RANDOM_CASES))
}

fn stream_consistency(seed: u64, sigma: u32) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed ^ 0x57e);
    for _ in 0..RANDOM_CASES {
        let s = rng.random_range(1..=sigma);
        let steps = rng.random_range(0..=24);
        let mut prefix = PrefixStream::new();
        let mut suffix = SuffixStream::new();
        for _ in 0..steps {
            let a = rng.random_range(1..=s);
            let b = rng.random_range(1..=s);
            let p = prefix.push(a, b);
            let (xs, ys) = prefix.buffers();
            check(p == compare_v_form(xs, ys), || {
                format!("prefix stream drifted on buffers {:?} vs {:?}", xs, ys)
            })?;
            let q = suffix.push(a, b);
            check(q == compare_v_form(&suffix.x_suffix(), &suffix.y_suffix()), || {
                format!(
                    "suffix stream drifted on buffers {:?} vs {:?}",
                    suffix.x_suffix(),
                    suffix.y_suffix()
                )
            })?;
        }
    }
    Ok(format!("{} random push sequences", RANDOM_CASES))
}

fn factorization_invariants() -> Outcome {
    let mut count = 0u64;
    for (sigma, max_n) in [(2u32, 8usize), (3, 6)] {
        for x in enumerate(sigma, 1, max_n) {
            let f = factorize(&x).expect("nonempty");
            check(f.reassemble() == x, || format!("reassembly fails on {:?}", x))?;
            for factor in f.factors() {
                check(is_v_word(factor).expect("nonempty"), || {
                    format!("factor {:?} of {:?} is not a V-word", factor, x)
                })?;
            }
            for pair in f.factors().windows(2) {
                let mut joined = pair[0].clone();
                joined.extend_from_slice(&pair[1]);
                check(!is_v_word(&joined).expect("nonempty"), || {
                    format!("factors {:?} of {:?} merge into a V-word", pair, x)
                })?;
            }
            count += 1;
        }
    }
    Ok(format!("{} strings factorized exhaustively", count))
}

fn suffix_v_order(seed: u64, max_n: usize, sigma: u32) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed ^ 0x5fa);
    for _ in 0..RANDOM_CASES {
        let s = rng.random_range(1..=sigma);
        let x = random_word(&mut rng, s, 1, max_n);
        let sa = suffix_array_vorder(&x).expect("nonempty");
        let expected: Vec<usize> = (1..=x.len()).rev().collect();
        check(sa.order() == expected.as_slice(), || {
            format!("plain suffix array of {:?} is not reverse-positional", x)
        })?;
        for w in sa.order().windows(2) {
            check(compare_v_form(&x[w[0] - 1..], &x[w[1] - 1..]) == Ordering::Less, || {
                format!("suffix chain breaks on {:?}", x)
            })?;
        }
    }
    Ok(format!("{} random strings", RANDOM_CASES))
}

fn pipeline_equivalence(seed: u64, sigma: u32) -> Outcome {
    let mut rng = StdRng::seed_from_u64(seed ^ 0xb47);
    let sigma = sigma.min(4);
    for _ in 0..300 {
        let s = rng.random_range(1..=sigma);
        let x = random_word(&mut rng, s, 1, 120);
        let direct = bwt_from_sa(&x, &suffix_array_lexext(&x).expect("nonempty"))
            .expect("array covers x");
        let incremental = bwt_incremental(&x).expect("nonempty");
        check(incremental == direct, || format!("pipeline mismatch on {:?}", x))?;
        let mut a = x.clone();
        let mut b = direct.transformed.clone();
        a.sort_unstable();
        b.sort_unstable();
        check(a == b, || format!("transform of {:?} is not a letter permutation", x))?;
    }
    for _ in 0..300 {
        let s = rng.random_range(1..=sigma);
        let x = random_word(&mut rng, s, 2, 50);
        let m = rng.random_range(1..x.len());
        let direct = suffix_array_lexext(&x).expect("nonempty");
        let left: Vec<usize> = direct.order().iter().copied().filter(|&p| p <= m).collect();
        let right: Vec<usize> = direct.order().iter().copied().filter(|&p| p > m).collect();
        let merged = merge_sorted_suffixes(
            &SuffixArray::from_order(left, SaComparison::LexExt),
            &SuffixArray::from_order(right, SaComparison::LexExt),
            &x,
        )
        .expect("segments are adjacent");
        check(merged.order() == direct.order(), || {
            format!("merge mismatch on {:?} split at {}", x, m)
        })?;
    }
    Ok("300 incremental runs + 300 merge splits".to_string())
}

fn compatibility() -> Outcome {
    let mut ranges = 0u64;
    for x in enumerate(2, 1, 8) {
        let k = factorize(&x).expect("nonempty").len();
        for i in 1..=k {
            for j in i..=k {
                check(compatibility_check(&x, i, j).expect("valid range"), || {
                    format!("incompatible range {}..={} of {:?}", i, j, x)
                })?;
                ranges += 1;
            }
        }
    }
    Ok(format!("{} factor ranges over a binary alphabet", ranges))
}

//! Structural consistency sweeps: exhaustive pipeline equivalence on small
//! alphabets, total-order axioms for the lex-extension comparison, and the
//! rotation/suffix duality for V-words.

use std::cmp::Ordering;

use vorder::*;

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

fn rotation(x: &[Letter], start: usize) -> Vec<Letter> {
    x[start - 1..].iter().chain(x[..start - 1].iter()).copied().collect()
}

#[test]
fn incremental_pipeline_matches_direct_exhaustively() {
    for (sigma, max_n) in [(2u32, 9usize), (3, 7), (4, 6)] {
        for x in enumerate(sigma, 1, max_n) {
            let direct = bwt_from_sa(&x, &suffix_array_lexext(&x).unwrap()).unwrap();
            let incremental = bwt_incremental(&x).unwrap();
            assert_eq!(incremental, direct, "pipeline mismatch on x={:?}", x);
        }
    }
}

#[test]
fn lexext_binary_comparison_is_a_total_order() {
    let words = enumerate(3, 1, 6);
    let n = words.len();
    let mut matrix = vec![Ordering::Equal; n * n];
    for a in 0..n {
        for b in 0..n {
            matrix[a * n + b] = lexext_compare(&words[a], &words[b]).unwrap();
        }
    }
    for a in 0..n {
        for b in 0..n {
            assert_eq!(matrix[a * n + b], matrix[b * n + a].reverse());
            assert_eq!(matrix[a * n + b] == Ordering::Equal, words[a] == words[b]);
        }
    }
    for a in 0..n {
        for b in 0..n {
            if matrix[a * n + b] != Ordering::Less {
                continue;
            }
            for c in 0..n {
                if matrix[b * n + c] == Ordering::Less {
                    assert_eq!(
                        matrix[a * n + c],
                        Ordering::Less,
                        "transitivity: {:?} {:?} {:?}",
                        words[a],
                        words[b],
                        words[c]
                    );
                }
            }
        }
    }
}

#[test]
fn v_word_suffix_order_mirrors_rotation_order() {
    // For a V-word, ranking suffix starts equals ranking rotation starts
    // under lex-extension; this is the duality the transform rests on.
    let mut checked = 0;
    for x in enumerate(3, 1, 8) {
        if !is_v_word(&x).unwrap() {
            continue;
        }
        let mut rotation_starts: Vec<usize> = (1..=x.len()).collect();
        rotation_starts
            .sort_by(|&a, &b| lexext_compare(&rotation(&x, a), &rotation(&x, b)).unwrap());
        let sa = suffix_array_lexext(&x).unwrap();
        assert_eq!(sa.order(), rotation_starts.as_slice(), "x={:?}", x);
        checked += 1;
    }
    assert!(checked > 1000, "exhaustive sweep should visit many V-words");
}

#[test]
fn rotation_vs_suffix_transform_agreement_is_reported() {
    // For arbitrary strings the suffix pipeline need not equal the sorted
    // rotation matrix's last column; report the observed agreement rather
    // than asserting it.
    let mut agree = 0usize;
    let mut total = 0usize;
    for x in enumerate(3, 1, 7) {
        let n = x.len();
        let mut rotation_starts: Vec<usize> = (1..=n).collect();
        rotation_starts
            .sort_by(|&a, &b| lexext_compare(&rotation(&x, a), &rotation(&x, b)).unwrap());
        let rotation_bwt: Vec<Letter> = rotation_starts
            .iter()
            .map(|&h| if h == 1 { x[n - 1] } else { x[h - 2] })
            .collect();
        let suffix_bwt = bwt_from_sa(&x, &suffix_array_lexext(&x).unwrap()).unwrap();
        total += 1;
        if suffix_bwt.transformed == rotation_bwt {
            agree += 1;
        }
    }
    println!("rotation/suffix transform agreement on arbitrary strings: {}/{}", agree, total);
    // Sanity only: the two coincide at least on every V-word in the set.
    assert!(agree > 0);
}

//! Property suites: V-form integrity, order axioms, extension and insertion
//! invariances, stream consistency, factorization invariants, and the
//! suffix/transform oracle equivalences.

use std::cmp::Ordering;

use proptest::prelude::*;
use vorder::*;

fn word(sigma: u32, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(1..=sigma, 0..=max_len)
}

fn nonempty(sigma: u32, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(1..=sigma, 1..=max_len)
}

/// Insert `ins` into block `block` of the V-form of `x`, either before or
/// after the block's content, and rebuild the string.
fn insert_at_block(x: &[Letter], block: usize, before: bool, ins: &[Letter]) -> Vec<Letter> {
    let vf = v_form(x).unwrap();
    let g = vf.max_letter();
    let mut out = Vec::with_capacity(x.len() + ins.len());
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
}

proptest! {
    #[test]
    fn v_form_round_trips_and_blocks_stay_pure(x in nonempty(5, 40)) {
        let vf = v_form(&x).unwrap();
        prop_assert_eq!(vf.reassemble(), x.clone());
        prop_assert_eq!(vf.count(), x.iter().filter(|&&c| c == vf.max_letter()).count());
        for block in vf.blocks() {
            prop_assert!(block.iter().all(|&c| c < vf.max_letter()));
        }
    }

    #[test]
    fn star_path_shrinks_and_ends_in_powers_of_the_maximum(x in nonempty(4, 24)) {
        let path = star_path(&x);
        prop_assert_eq!(path.states().len(), x.len() + 1);
        for (step, w) in path.states().windows(2).enumerate() {
            let h = path.deleted_positions()[step];
            let mut rebuilt = w[0].clone();
            rebuilt.remove(h - 1);
            prop_assert_eq!(&rebuilt, &w[1]);
        }
        let g = *x.iter().max().unwrap();
        let k = x.iter().filter(|&&c| c == g).count();
        let tail = &path.states()[path.states().len() - k - 1..];
        for (i, state) in tail.iter().enumerate() {
            prop_assert_eq!(state.len(), k - i);
            prop_assert!(state.iter().all(|&c| c == g));
        }
    }

    #[test]
    fn all_routes_agree_with_the_oracle(x in word(5, 24), y in word(5, 24)) {
        let expected = compare_star_oracle(&x, &y);
        prop_assert_eq!(compare_v_form(&x, &y), expected);
        prop_assert_eq!(compare_input_sensitive(&x, &y), expected);
        prop_assert_eq!(compare_prefix_stream(&x, &y), expected);
        prop_assert_eq!(compare_suffix_stream(&x, &y), expected);
    }

    #[test]
    fn comparison_is_antisymmetric(x in word(4, 20), y in word(4, 20)) {
        let xy = compare_v_form(&x, &y);
        prop_assert_eq!(xy, compare_v_form(&y, &x).reverse());
        prop_assert_eq!(xy == Ordering::Equal, x == y);
    }

    #[test]
    fn appending_or_prepending_a_common_letter_preserves_order(
        x in word(5, 20),
        y in word(5, 20),
        lambda in 1u32..=6,
    ) {
        let base = compare_v_form(&x, &y);
        let mut xa = x.clone();
        xa.push(lambda);
        let mut ya = y.clone();
        ya.push(lambda);
        prop_assert_eq!(compare_v_form(&xa, &ya), base);

        let mut xp = vec![lambda];
        xp.extend_from_slice(&x);
        let mut yp = vec![lambda];
        yp.extend_from_slice(&y);
        prop_assert_eq!(compare_v_form(&xp, &yp), base);
    }

    #[test]
    fn common_context_preserves_order(
        x in word(4, 12),
        y in word(4, 12),
        u in word(4, 8),
        v in word(4, 8),
    ) {
        let base = compare_v_form(&x, &y);
        let wrap = |s: &[Letter]| {
            let mut out = u.clone();
            out.extend_from_slice(s);
            out.extend_from_slice(&v);
            out
        };
        prop_assert_eq!(compare_v_form(&wrap(&x), &wrap(&y)), base);
    }

    #[test]
    fn small_letter_insertion_preserves_order(
        x in nonempty(5, 20),
        y in nonempty(5, 20),
        lambda_pick in 0u32..1000,
        block_pick in 0usize..1000,
        before in any::<bool>(),
    ) {
        let gmax = std::cmp::max(
            v_form(&x).unwrap().max_letter(),
            v_form(&y).unwrap().max_letter(),
        );
        let lambda = 1 + lambda_pick % gmax;
        let max_block = std::cmp::min(v_form(&x).unwrap().count(), v_form(&y).unwrap().count());
        let block = block_pick % (max_block + 1);
        let base = compare_v_form(&x, &y);
        let xi = insert_at_block(&x, block, before, &[lambda]);
        let yi = insert_at_block(&y, block, before, &[lambda]);
        prop_assert_eq!(compare_v_form(&xi, &yi), base);
    }

    #[test]
    fn bounded_string_insertion_preserves_order(
        x in nonempty(5, 16),
        y in nonempty(5, 16),
        ins_picks in prop::collection::vec(0u32..1000, 1..=4),
        block_pick in 0usize..1000,
        before in any::<bool>(),
    ) {
        let gmax = std::cmp::max(
            v_form(&x).unwrap().max_letter(),
            v_form(&y).unwrap().max_letter(),
        );
        let ins: Vec<Letter> = ins_picks.iter().map(|p| 1 + p % gmax).collect();
        let max_block = std::cmp::min(v_form(&x).unwrap().count(), v_form(&y).unwrap().count());
        let block = block_pick % (max_block + 1);
        let base = compare_v_form(&x, &y);
        let xi = insert_at_block(&x, block, before, &ins);
        let yi = insert_at_block(&y, block, before, &ins);
        prop_assert_eq!(compare_v_form(&xi, &yi), base);
    }

    #[test]
    fn monotone_extension_preserves_strict_order(
        a in word(5, 20),
        b in word(5, 20),
        lambda in 1u32..=6,
        delta in 0u32..=3,
    ) {
        let (x, y) = match compare_v_form(&a, &b) {
            Ordering::Less => (a, b),
            Ordering::Greater => (b, a),
            Ordering::Equal => return Ok(()),
        };
        let mu = lambda + delta;
        let mut lx = vec![lambda];
        lx.extend_from_slice(&x);
        let mut my = vec![mu];
        my.extend_from_slice(&y);
        prop_assert_eq!(compare_v_form(&lx, &my), Ordering::Less);

        let mut xl = x.clone();
        xl.push(lambda);
        let mut ym = y.clone();
        ym.push(mu);
        prop_assert_eq!(compare_v_form(&xl, &ym), Ordering::Less);
    }

    #[test]
    fn proper_subsequences_precede(x in nonempty(4, 20), keep in prop::collection::vec(any::<bool>(), 20)) {
        let v: Vec<Letter> = x
            .iter()
            .zip(keep.iter().chain(std::iter::repeat(&true)))
            .filter(|(_, &k)| k)
            .map(|(&c, _)| c)
            .collect();
        if v.len() < x.len() {
            prop_assert!(subsequence_precedes(&v, &x));
            prop_assert_eq!(compare_star_oracle(&v, &x), Ordering::Less);
            prop_assert_eq!(compare_v_form(&v, &x), Ordering::Less);
            prop_assert_eq!(compare_input_sensitive(&v, &x), Ordering::Less);
        }
    }

    #[test]
    fn powers_and_extensions_chain_upward(
        u in nonempty(4, 6),
        v in nonempty(4, 6),
        w in nonempty(4, 6),
        i in 2usize..=3,
        j in 2usize..=3,
    ) {
        prop_assume!(u != vec![1]);
        let mut chain: Vec<Vec<Letter>> = vec![vec![1]];
        for t in 1..=i {
            chain.push(u.repeat(t));
        }
        let ui = u.repeat(i);
        for t in 1..=j {
            let mut s = ui.clone();
            s.extend(v.repeat(t));
            chain.push(s);
        }
        let mut top = ui.clone();
        top.extend(v.repeat(j));
        top.extend_from_slice(&w);
        chain.push(top);
        for pair in chain.windows(2) {
            prop_assert_eq!(compare_v_form(&pair[0], &pair[1]), Ordering::Less);
        }
    }

    #[test]
    fn prefix_stream_matches_from_scratch(
        pairs in prop::collection::vec((1u32..=4, 1u32..=4), 0..24),
    ) {
        let mut stream = PrefixStream::new();
        for &(a, b) in &pairs {
            let order = stream.push(a, b);
            let (xs, ys) = stream.buffers();
            prop_assert_eq!(order, compare_v_form(xs, ys));
        }
    }

    #[test]
    fn suffix_stream_matches_from_scratch(
        pairs in prop::collection::vec((1u32..=4, 1u32..=4), 0..24),
    ) {
        let mut stream = SuffixStream::new();
        for &(a, b) in &pairs {
            let order = stream.push(a, b);
            prop_assert_eq!(order, compare_v_form(&stream.x_suffix(), &stream.y_suffix()));
        }
    }

    #[test]
    fn single_sided_pushes_match_from_scratch(
        pairs in prop::collection::vec((1u32..=4, 1u32..=4), 0..12),
        extra in prop::collection::vec(1u32..=4, 0..8),
        extend_left in any::<bool>(),
    ) {
        let mut stream = PrefixStream::new();
        for &(a, b) in &pairs {
            stream.push(a, b);
        }
        for &c in &extra {
            let order = if extend_left { stream.push_left(c) } else { stream.push_right(c) };
            let (xs, ys) = stream.buffers();
            prop_assert_eq!(order, compare_v_form(xs, ys));
        }
    }

    #[test]
    fn factorization_invariants(x in nonempty(3, 14)) {
        let f = factorize(&x).unwrap();
        prop_assert_eq!(f.reassemble(), x.clone());
        prop_assert_eq!(*f.ends().last().unwrap(), x.len());
        for w in f.ends().windows(2) {
            prop_assert!(w[0] < w[1]);
        }
        for factor in f.factors() {
            prop_assert!(is_v_word(factor).unwrap());
        }
        for pair in f.factors().windows(2) {
            let mut joined = pair[0].clone();
            joined.extend_from_slice(&pair[1]);
            prop_assert!(!is_v_word(&joined).unwrap());
        }
        // A V-word factorizes as itself.
        let first = &f.factors()[0];
        let again = factorize(first).unwrap();
        prop_assert_eq!(again.factors(), std::slice::from_ref(first));
    }

    #[test]
    fn factor_emission_is_deterministic_and_in_order(x in nonempty(3, 12)) {
        let mut emitted = Vec::new();
        factorize_with(&x, |factor, end| emitted.push((factor.to_vec(), end))).unwrap();
        let whole = factorize(&x).unwrap();
        let factors: Vec<Vec<Letter>> = emitted.iter().map(|(f, _)| f.clone()).collect();
        let ends: Vec<usize> = emitted.iter().map(|(_, e)| *e).collect();
        prop_assert_eq!(factors.as_slice(), whole.factors());
        prop_assert_eq!(ends.as_slice(), whole.ends());
    }

    #[test]
    fn lexext_is_antisymmetric_and_separates(x in nonempty(4, 16), y in nonempty(4, 16)) {
        let xy = lexext_compare(&x, &y).unwrap();
        prop_assert_eq!(xy, lexext_compare(&y, &x).unwrap().reverse());
        prop_assert_eq!(xy == Ordering::Equal, x == y);
    }

    #[test]
    fn vorder_suffixes_sort_by_length(x in nonempty(4, 24)) {
        let sa = suffix_array_vorder(&x).unwrap();
        let expected: Vec<usize> = (1..=x.len()).rev().collect();
        prop_assert_eq!(sa.order(), expected.as_slice());
        for w in sa.order().windows(2) {
            prop_assert_eq!(compare_v_form(&x[w[0] - 1..], &x[w[1] - 1..]), Ordering::Less);
        }
    }

    #[test]
    fn lexext_suffix_array_matches_selection_sort_oracle(x in nonempty(4, 28)) {
        let sa = suffix_array_lexext(&x).unwrap();
        // Independent quadratic oracle: repeatedly select the minimum under
        // the same suffix comparison (split on the maximal letter of x).
        let g = *x.iter().max().unwrap();
        let mut remaining: Vec<usize> = (1..=x.len()).collect();
        let mut expected = Vec::with_capacity(x.len());
        while !remaining.is_empty() {
            let mut min_idx = 0;
            for i in 1..remaining.len() {
                let a = remaining[i];
                let b = remaining[min_idx];
                if lexext_compare_split(g, &x[a - 1..], &x[b - 1..]) == Ordering::Less {
                    min_idx = i;
                }
            }
            expected.push(remaining.swap_remove(min_idx));
        }
        prop_assert_eq!(sa.order(), expected.as_slice());
    }

    #[test]
    fn transform_permutes_letters_and_routes_agree(x in nonempty(4, 32)) {
        let direct = bwt_from_sa(&x, &suffix_array_lexext(&x).unwrap()).unwrap();
        let incremental = bwt_incremental(&x).unwrap();
        prop_assert_eq!(&incremental, &direct);
        let mut a = x.clone();
        let mut b = direct.transformed.clone();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn merge_of_restricted_arrays_matches_direct(x in nonempty(4, 28), split_pick in 0usize..1000) {
        let n = x.len();
        prop_assume!(n >= 2);
        let m = 1 + split_pick % (n - 1);
        let direct = suffix_array_lexext(&x).unwrap();
        let left: Vec<usize> = direct.order().iter().copied().filter(|&p| p <= m).collect();
        let right: Vec<usize> = direct.order().iter().copied().filter(|&p| p > m).collect();
        let merged = merge_sorted_suffixes(
            &SuffixArray::from_order(left, SaComparison::LexExt),
            &SuffixArray::from_order(right, SaComparison::LexExt),
            &x,
        )
        .unwrap();
        prop_assert_eq!(merged.order(), direct.order());
    }

    // Compatibility of factor-local suffix sorting is a binary-alphabet
    // guarantee; a later factor with a larger maximal letter can break it.
    #[test]
    fn factor_ranges_are_compatible_over_binary_alphabets(
        x in nonempty(2, 12),
        i_pick in 0usize..1000,
        j_pick in 0usize..1000,
    ) {
        let k = factorize(&x).unwrap().len();
        let i = 1 + i_pick % k;
        let j = i + j_pick % (k - i + 1);
        prop_assert!(compatibility_check(&x, i, j).unwrap());
    }
}

#[test]
fn values_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<Alphabet>();
    assert_send_sync::<StarPath>();
    assert_send_sync::<VForm<'static>>();
    assert_send_sync::<Factorization>();
    assert_send_sync::<SuffixArray>();
    assert_send_sync::<BwtResult>();
    // Streams are single-owner mutable state, but may move between threads.
    fn assert_send<T: Send>() {}
    assert_send::<PrefixStream>();
    assert_send::<SuffixStream>();
}

#[test]
fn alphabet_bind_render_round_trip() {
    // Deterministic loop over assorted alphabets and strings over them.
    let alphabets = [
        Alphabet::from_text("abcdefghijklmnopqrstuvwxyz").unwrap(),
        Alphabet::from_text("zyx").unwrap(),
        Alphabet::numeric([5, 1, 9, 40]),
        Alphabet::byte_order(),
    ];
    for alphabet in &alphabets {
        let sigma = alphabet.size();
        let mut state = 0x9e3779b97f4a7c15u64;
        for len in 0..32 {
            let mut raw = Vec::with_capacity(len);
            for _ in 0..len {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let rank = (state >> 33) as usize % sigma;
                raw.push(alphabet.symbol(rank as u32).unwrap());
            }
            let bound = alphabet.bind(&raw).unwrap();
            assert_eq!(alphabet.render(&bound).unwrap(), raw);
            assert_eq!(alphabet.bind(&alphabet.render(&bound).unwrap()).unwrap(), bound);
        }
    }
}

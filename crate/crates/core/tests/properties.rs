use std::collections::BTreeMap;

use proptest::prelude::*;

use palinkit::delta::{central_gaps, check_dvd_factor, check_main_theorem, DeltaQuad};
use palinkit::omega::{extract_periodic_prefix, meets_threshold, scan_omega, Comparison};
use palinkit::palen::{
    check_mpf_infix, check_palindrome_append, check_subadditivity, check_triangle, mpf_enumerate,
    pl_oracle, pl_oracle_prefixes, pl_profile_fast,
};
use palinkit::{Symbol, Word};

fn word_over(sigma: u8, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..sigma, 0..=max_len)
        .prop_map(|v| Word::from_bytes(&v.into_iter().map(|c| b'a' + c).collect::<Vec<_>>()))
}

fn palindrome_over(sigma: u8, max_half: usize) -> impl Strategy<Value = Word> {
    (word_over(sigma, max_half), any::<bool>()).prop_map(|(h, odd)| {
        let tail = if odd && !h.is_empty() {
            h.prefix(h.len() - 1)
        } else {
            h.clone()
        };
        h.concat(&tail.reverse())
    })
}

proptest! {
    #[test]
    fn reverse_is_an_involution(w in word_over(4, 40)) {
        prop_assert_eq!(w.reverse().reverse(), w);
    }

    #[test]
    fn pl_is_reversal_invariant(w in word_over(3, 60)) {
        prop_assert_eq!(pl_oracle(&w), pl_oracle(&w.reverse()));
    }

    #[test]
    fn fast_profile_matches_oracle(w in word_over(4, 300)) {
        let fast: Vec<usize> = pl_profile_fast(&w).pl().iter().map(|&x| x as usize).collect();
        prop_assert_eq!(fast, pl_oracle_prefixes(&w));
    }

    #[test]
    fn profile_steps_by_at_most_one(w in word_over(3, 200)) {
        let pl = pl_profile_fast(&w);
        for pair in pl.pl().windows(2) {
            prop_assert!(pair[0].abs_diff(pair[1]) <= 1);
        }
    }

    #[test]
    fn pl_is_at_most_length(w in word_over(4, 100)) {
        prop_assert!(pl_oracle(&w) <= w.len());
    }

    #[test]
    fn mpfs_reconstruct(w in word_over(2, 24).prop_filter("nonempty", |w| !w.is_empty())) {
        let pl = pl_oracle(&w);
        let all = mpf_enumerate(&w, Some(64)).unwrap();
        prop_assert!(!all.is_empty());
        for f in &all {
            prop_assert_eq!(f.concat(), w.clone());
            prop_assert_eq!(f.len(), pl);
            prop_assert!(f.parts().iter().all(|p| !p.is_empty() && p.is_palindrome()));
        }
    }

    #[test]
    fn concat_inequalities(x in word_over(2, 20), y in word_over(2, 20)) {
        prop_assert!(check_subadditivity(&x, &y));
        prop_assert!(check_triangle(&x, &y));
        prop_assert!(check_palindrome_append(&x, &y));
    }

    #[test]
    fn mpf_infix_property(w in word_over(3, 16).prop_filter("nonempty", |w| !w.is_empty())) {
        prop_assert!(check_mpf_infix(&w));
    }

    #[test]
    fn palindrome_append_changes_pl_by_one(x in word_over(3, 30), y in palindrome_over(3, 8)) {
        let a = pl_oracle(&x.concat(&y));
        prop_assert!(a.abs_diff(pl_oracle(&x)) <= 1);
    }

    #[test]
    fn extracted_prefix_is_consistent(t in palindrome_over(2, 30), j in 1usize..6) {
        if let Some(found) = extract_periodic_prefix(&t, j).unwrap() {
            prop_assert!(found.a.is_palindrome());
            prop_assert!(found.b.is_palindrome() && !found.b.is_empty());
            prop_assert!(found.exponent >= j);
            prop_assert!(t.starts_with(&found.power()));
        }
    }

    #[test]
    fn omega_matches_brute_force(w in word_over(2, 24), k in 1u32..4) {
        prop_assume!(!w.is_empty());
        let n = w.len();
        let mut naive: BTreeMap<(usize, Vec<Symbol>), usize> = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..=n {
                let t = w.factor(i + 1, j).unwrap();
                let count = t.palindromic_prefixes().len();
                if meets_threshold(count, t.len(), k, Comparison::AtLeast) {
                    naive.insert((t.len(), t.symbols().to_vec()), count);
                }
            }
        }
        let report = scan_omega(&w, k).unwrap();
        let got: BTreeMap<(usize, Vec<Symbol>), usize> = report
            .members
            .iter()
            .map(|m| ((m.length, m.factor(&w).symbols().to_vec()), m.count_with_eps))
            .collect();
        prop_assert_eq!(got, naive);
        prop_assert_eq!(report.distinct_factors, w.factors().count() - 1);
    }

    #[test]
    fn delta_words_keep_pl(d in palindrome_over(2, 2), v in palindrome_over(2, 1), u_len in 1usize..5, slack in 0usize..2) {
        prop_assume!(!d.is_empty());
        let dvd = d.concat(&v).concat(&d);
        prop_assume!(palinkit::periodicity::min_period(&dvd).unwrap() == Some(d.len() + v.len()));
        let u = d.suffix(u_len.min(d.len()));
        let q = DeltaQuad::new(u.clone(), v, d, 3 * pl_oracle(&u) + slack).unwrap();
        prop_assert!(check_dvd_factor(&q));
        prop_assert!(check_main_theorem(&q).unwrap().holds);
        prop_assert!(central_gaps(&q).unwrap().iter().all(|g| g.degenerate.is_some()));
    }
}

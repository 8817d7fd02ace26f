mod common;

use proptest::prelude::*;
use rand::Rng;
use relfree::analysis::whitehead::{whitehead_automorphisms, whitehead_minimize};
use relfree::analysis::{self, coset_rewrite, to_form1, Form1};
use relfree::classify::witnesses::{fact1_criterion, lemma_elements};
use relfree::classify::{classify, Verdict};
use relfree::nf::{verify_pair, CheckOutcome};
use relfree::report::{render_json, report_json};
use relfree::{Backend, Element, FreeWord, Index, RelativePresentation, RelativeWord};

const COEFFS: [&str; 3] = ["Z", "Z^2", "F 2"];
const TPARTS: [&str; 4] = ["F 1", "F 2", "Z^2", "F 3"];

fn backend(spec: &str) -> Backend {
    match spec {
        "Z" => Backend::cyclic(),
        "Z^2" => Backend::free_abelian(2).unwrap(),
        "F 1" => Backend::free(1).unwrap(),
        "F 2" => Backend::free(2).unwrap(),
        "F 3" => Backend::free(3).unwrap(),
        _ => unreachable!(),
    }
}

/// A random relator (with at least one T-syllable) from a seed.
fn relator(seed: u64, g: Backend, t: Backend) -> RelativeWord {
    let mut rng = common::rng(seed);
    loop {
        let len = rng.gen_range(1..=7);
        let w = common::random_relative_word(g, t, &mut rng, len);
        if !w.t_syllables().is_empty() {
            return w;
        }
    }
}

fn setting() -> impl Strategy<Value = (Backend, Backend, u64)> {
    (0..COEFFS.len(), 0..TPARTS.len(), any::<u64>()).prop_map(|(i, j, s)| (backend(COEFFS[i]), backend(TPARTS[j]), s))
}

fn free_word(max: usize) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec(prop::sample::select(vec![1, -1, 2, -2]), 0..=max).prop_map(FreeWord::new)
}

fn verdict(g: Backend, t: Backend, w: RelativeWord) -> Verdict {
    classify(&RelativePresentation::new(g, t, w)).verdict
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn verdict_is_invariant_under_conjugation_and_inversion((g, t, seed) in setting(), conj in any::<u64>()) {
        let w = relator(seed, g, t);
        let mut rng = common::rng(conj);
        let len = rng.gen_range(1..=3);
        let c = common::random_relative_word(g, t, &mut rng, len);
        let base = verdict(g, t, w.clone());
        prop_assert_eq!(base, verdict(g, t, w.conjugate_by(&c)), "conjugating {} by {}", w, c);
        prop_assert_eq!(base, verdict(g, t, w.inverse()), "inverting {}", w);
    }

    #[test]
    fn verdict_is_invariant_under_renaming_coefficient_generators(seed in any::<u64>(), j in 0..TPARTS.len()) {
        let (g, t) = (backend("F 2"), backend(TPARTS[j]));
        let w = relator(seed, g, t);
        let swapped = w.to_tokens().replace("g1", "gX").replace("g2", "g1").replace("gX", "g2");
        let renamed = RelativeWord::parse(&swapped, g, t).unwrap();
        prop_assert_eq!(verdict(g, t, w), verdict(g, t, renamed));
    }

    #[test]
    fn free_t_parts_of_rank_two_or_more_always_have_free_subgroups(seed in any::<u64>(), i in 0..COEFFS.len(), n in 2usize..=3) {
        let (g, t) = (backend(COEFFS[i]), Backend::free(n).unwrap());
        let c = classify(&RelativePresentation::new(g, t, relator(seed, g, t)));
        prop_assert_eq!(c.verdict, Verdict::HasFree);
        prop_assert!(c.cites("Theorem 1"));
    }

    #[test]
    fn traces_are_cited_and_reports_deterministic((g, t, seed) in setting()) {
        let p = RelativePresentation::new(g, t, relator(seed, g, t));
        let c = classify(&p);
        prop_assert!(!c.trace.is_empty());
        prop_assert!(c.trace.iter().all(|s| !s.citation.trim().is_empty()));
        prop_assert_eq!(render_json(&report_json(&p, &c, true)), render_json(&report_json(&p, &classify(&p), true)));
    }

    #[test]
    fn whitehead_minimization_never_lengthens(w in free_word(10)) {
        let m = whitehead_minimize(&w);
        prop_assert!(m.length <= w.cyclic_reduce().0.len());
        for (canon, phi) in &m.reach {
            let image = phi.apply(&w).cyclic_reduce().0;
            prop_assert_eq!(image.len(), m.length);
            prop_assert!(image.is_conjugate_to(canon) || image.inverse().is_conjugate_to(canon));
        }
    }

    #[test]
    fn whitehead_minimum_is_invariant_under_single_moves(w in free_word(8), k in 0usize..19) {
        let moved = whitehead_automorphisms()[k].apply(&w);
        let (a, b) = (whitehead_minimize(&w), whitehead_minimize(&moved));
        prop_assert_eq!(a.length, b.length);
        if !a.truncated && !b.truncated {
            prop_assert_eq!(a.canonical, b.canonical);
        }
    }

    #[test]
    fn form_one_rebuilds_a_conjugate(seed in any::<u64>(), m in 0usize..3, rot in 0usize..16) {
        let (g, t) = (Backend::free_abelian(2).unwrap(), Backend::free(1).unwrap());
        let mut rng = common::rng(seed);
        let pairs = (0..=m)
            .map(|_| (common::random_element(g, &mut rng, 2), common::random_element(g, &mut rng, 2)))
            .collect();
        let c = if rng.gen_bool(0.5) { g.identity() } else { common::random_element(g, &mut rng, 2) };
        let w = Form1 { c, pairs }.rebuild(g, t);
        // rotate the cyclic word by moving a prefix of syllables to the end
        let s = w.syllables();
        let cut = rot % s.len();
        let rotated = RelativeWord::from_syllables(g, t, s[cut..].iter().chain(&s[..cut]).cloned());
        let f = to_form1(&rotated).unwrap();
        prop_assert_eq!(f.m(), m);
        prop_assert!(f.rebuild(g, t).is_conjugate_to(&rotated));
    }

    #[test]
    fn coset_form_reassembles_the_word(seed in any::<u64>()) {
        let (g, t) = (Backend::cyclic(), Backend::free_abelian(2).unwrap());
        let mut rng = common::rng(seed);
        let len = rng.gen_range(2..=7);
        let mut w = common::random_relative_word(g, t, &mut rng, len);
        let fix = t.mul(&t.inverse(&w.t_product()), &Element::Abelian(vec![1, rng.gen_range(-2..=2)]));
        w = w.mul(&RelativeWord::tsyl(g, t, fix));
        let (u, _) = w.cyclic_reduce();
        match coset_rewrite(&u) {
            Ok(form) => {
                prop_assert_eq!(form.reassemble(g, t), u.clone());
                prop_assert_eq!(form.x1.is_empty(), form.entries.is_empty());
            }
            Err(e) => prop_assert_eq!(e, analysis::AnalysisError::CyclicSyllableSubgroup),
        }
    }

    #[test]
    fn lemma_elements_satisfy_all_six_conditions(seed in any::<u64>(), free in any::<bool>()) {
        let g = if free { Backend::free(2).unwrap() } else { Backend::free_abelian(2).unwrap() };
        let mut rng = common::rng(seed);
        let a = common::random_element(g, &mut rng, 3);
        let b = common::random_element(g, &mut rng, 3);
        let e = lemma_elements(g, &a, &b).expect("noncyclic G always has lemma elements");
        let outside = |x: &Element, c: &Element| g.cyclic_membership(x, c).is_none();
        prop_assert!(outside(&e.h1, &a) && outside(&e.h2, &a) && outside(&g.mul(&e.h1, &e.h2), &a));
        prop_assert!(outside(&e.g1, &b) && outside(&e.g2, &b) && outside(&g.mul(&e.g2, &e.g1), &b));
    }

    #[test]
    fn bounded_check_is_monotone_in_depth(seed in any::<u64>(), depth in 1usize..=6) {
        let p = RelativePresentation::parse("coeff Z\ntpart F 1\nrelator g^-1 t g t^-2\n").unwrap();
        let model = classify(&p).model.expect("matrix model");
        let (g, t) = (p.coeff, p.tpart);
        let mut rng = common::rng(seed);
        let (lu, lv) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let u = common::random_relative_word(g, t, &mut rng, lu);
        let v = common::random_relative_word(g, t, &mut rng, lv);
        match verify_pair(&model, &u, &v, depth) {
            CheckOutcome::Pass { .. } => {
                for d in 0..depth {
                    prop_assert!(verify_pair(&model, &u, &v, d).passed());
                }
            }
            CheckOutcome::Counterexample(w) => {
                prop_assert!(w.len() <= depth && !w.is_empty());
                prop_assert!(verify_pair(&model, &u, &v, w.len() - 1).passed());
                prop_assert_eq!(verify_pair(&model, &u, &v, depth + 1), CheckOutcome::Counterexample(w));
            }
        }
    }
}

#[test]
fn fact1_truth_table() {
    let indices = [Index::Finite(1), Index::Finite(2), Index::Finite(3), Index::Finite(4), Index::Infinite];
    for &a in &indices {
        for &b in &indices {
            let proper = a != Index::Finite(1) && b != Index::Finite(1);
            let large = |i: Index| i == Index::Infinite || i > Index::Finite(2);
            assert_eq!(fact1_criterion(a, b), proper && (large(a) || large(b)), "({a}, {b})");
        }
    }
}

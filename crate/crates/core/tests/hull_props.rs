use lihull::hull::{HullElement, HullWord, InverseHull, MapEntry};
use lihull::ideal::RightIdeal;
use lihull::semigroup::{Semigroup, SemigroupElement, Window};
use lihull::DEFAULT_SEED;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod common;
use common::backends;

fn random_elements(h: &InverseHull, rng: &mut ChaCha8Rng, n: usize, max_pairs: usize) -> Vec<HullElement> {
    let pool = h.letter_pool();
    (0..n)
        .map(|_| h.evaluate_word(&h.random_word(rng, &pool, max_pairs)).unwrap())
        .collect()
}

#[test]
fn algebra_agrees_with_pointwise_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for sg in backends() {
        let h = InverseHull::new(&sg);
        let window = sg.window_of_size(50);
        let pool = h.letter_pool();
        let mut compared = 0;
        let mut defined = 0;
        for _ in 0..300 {
            let w = h.random_word(&mut rng, &pool, 6);
            let f = h.evaluate_word(&w).unwrap();
            let alg = h.materialize(&f, &window);
            let oracle = h.materialize_word(&w, &window);
            if let Some(i) = alg.first_mismatch(&oracle) {
                panic!("{}: {w} = {f} disagrees at {}", sg.name(), window.get(i));
            }
            compared += alg.comparable(&oracle);
            defined += alg.defined().filter(|&(i, j)| oracle.get(i) == MapEntry::To(j)).count();
        }
        assert!(compared > 300, "{}: only {compared} comparable points", sg.name());
        assert!(defined > 300, "{}: only {defined} defined points", sg.name());
    }
}

#[test]
fn inverse_semigroup_axioms() {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED + 1);
    for sg in backends() {
        let h = InverseHull::new(&sg);
        let fs = random_elements(&h, &mut rng, 200, 3);
        for f in &fs {
            let fs_ = h.star(f);
            assert_eq!(&h.star(&fs_), f);
            assert_eq!(&h.compose(f, &h.compose(&fs_, f).unwrap()).unwrap(), f);
            assert!(h.is_idempotent(&h.compose(f, &fs_).unwrap()));
        }
        for pair in fs.windows(2) {
            let e1 = h.compose(&pair[0], &h.star(&pair[0])).unwrap();
            let e2 = h.compose(&pair[1], &h.star(&pair[1])).unwrap();
            assert_eq!(h.compose(&e1, &e2).unwrap(), h.compose(&e2, &e1).unwrap());
        }
        for abc in fs.chunks(3).filter(|c| c.len() == 3) {
            let left = h.compose(&h.compose(&abc[0], &abc[1]).unwrap(), &abc[2]).unwrap();
            let right = h.compose(&abc[0], &h.compose(&abc[1], &abc[2]).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }
}

#[test]
fn star_lambda_is_identity_only_on_the_diagonal() {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED + 2);
    for sg in backends() {
        let h = InverseHull::new(&sg);
        let window = sg.window_of_size(12);
        for _ in 0..200 {
            let s = window.get(rng.gen_range(0..window.len()));
            let t = if rng.gen_bool(0.3) { s } else { window.get(rng.gen_range(0..window.len())) };
            let f = h.compose(&h.star(&h.lambda(t).unwrap()), &h.lambda(s).unwrap()).unwrap();
            assert_eq!(f == h.identity(), s == t, "{}: {t}* {s}", sg.name());
        }
    }
}

#[test]
fn grading_is_idempotent_pure() {
    for sg in backends() {
        let h = InverseHull::new(&sg);
        for f in h.enumerate_hull(2).iter().filter(|f| !f.is_zero()) {
            let one = sg.grading_group().identity();
            assert_eq!(h.grading(f).unwrap() == one, h.is_idempotent(f));
        }
    }
}

#[test]
fn zero_appears_exactly_without_left_reversibility() {
    for sg in backends() {
        let h = InverseHull::new(&sg);
        let has_zero = h.enumerate_hull(2).contains(&HullElement::Zero);
        assert_eq!(has_zero, !sg.is_left_reversible().is_yes(), "{}", sg.name());
    }
}

#[test]
fn hull_domains_are_constructible() {
    for sg in backends() {
        let h = InverseHull::new(&sg);
        for length in 1..=2 {
            let family = sg.constructible_closure(length);
            for f in h.enumerate_hull(length) {
                assert!(family.contains(f.domain()) || f.is_zero(), "{}: {f}", sg.name());
            }
        }
        // every depth-one ideal is the domain of an idempotent λ_s* λ_t λ_t* λ_s
        let idempotents: Vec<RightIdeal> = h
            .enumerate_hull(2)
            .into_iter()
            .filter(|f| !f.is_zero() && h.is_idempotent(f))
            .map(|f| f.domain().clone())
            .collect();
        for x in sg.constructible_closure(1).iter().filter(|x| !x.is_empty()) {
            let pool = h.letter_pool();
            let reachable = pool.iter().any(|s| {
                pool.iter().any(|t| sg.preimage(s, &sg.translate(t, &RightIdeal::Full).unwrap()).unwrap() == *x)
            });
            if reachable {
                assert!(idempotents.contains(x), "{}: {x}", sg.name());
            }
        }
    }
}

#[test]
fn lift_relation_on_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED + 3);
    for sg in backends() {
        let h = InverseHull::new(&sg);
        let window = sg.window_of_size(30);
        let fs: Vec<HullElement> =
            random_elements(&h, &mut rng, 400, 3).into_iter().filter(|f| !f.is_zero()).collect();
        let mut checked = 0;
        for f in fs.iter().cycle().take(2000) {
            let Some(s) = window.iter().find(|s| sg.membership(s, f.domain()).unwrap() && rng.gen_bool(0.5))
            else {
                continue;
            };
            assert!(h.check_lift_relation(f, s, &window).unwrap(), "{}: {f} at {s}", sg.name());
            checked += 1;
            if checked == 500 {
                break;
            }
        }
        assert!(checked >= 100, "{}: {checked}", sg.name());
    }
}

#[test]
fn estar_unitarity_on_samples() {
    for sg in backends() {
        let h = InverseHull::new(&sg);
        let window = sg.window_of_size(40);
        let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
        let report = h.estar_unitary_report(200, &mut rng, &window).unwrap();
        assert_eq!(report.pairs_checked, 200);
        assert_eq!(report.zero_present, !sg.is_left_reversible().is_yes());
    }
}

#[test]
fn normal_forms_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED + 4);
    for sg in backends().into_iter().filter(|sg| sg.clifford_check(40).holds()) {
        let h = InverseHull::new(&sg);
        let window = sg.window_of_size(50);
        for f in random_elements(&h, &mut rng, 200, 4).iter().filter(|f| !f.is_zero()) {
            let (p, q) = h.clifford_normal_form(f, &window).unwrap();
            let g = h.compose(&h.lambda(&p).unwrap(), &h.star(&h.lambda(&q).unwrap())).unwrap();
            assert_eq!(&g, f);
        }
    }
}

#[test]
fn word_star_matches_element_star() {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED + 5);
    for sg in backends() {
        let h = InverseHull::new(&sg);
        let pool = h.letter_pool();
        for _ in 0..100 {
            let w: HullWord = h.random_word(&mut rng, &pool, 4);
            assert_eq!(h.evaluate_word(&w.star()).unwrap(), h.star(&h.evaluate_word(&w).unwrap()));
        }
    }
}

#[test]
fn zero_materializes_to_nothing() {
    let sg = Semigroup::free_monoid(2);
    let h = InverseHull::new(&sg);
    let window = Window::new(sg.enumerate_window(2));
    assert_eq!(h.materialize(&HullElement::Zero, &window).defined().count(), 0);
    let id = h.materialize(&h.identity(), &window);
    assert!(id.defined().all(|(i, j)| i == j));
    assert_eq!(id.defined().count(), window.len());
    let _ = SemigroupElement::Natural(0);
}

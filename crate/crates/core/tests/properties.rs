//! Randomized properties of group elements built from words.

use affine_shi::sign_types::{is_realizable, zeta};
use affine_shi::small_low::small_inversion_set;
use affine_shi::{AffineRoot, AffineWeylGroup, Automaton, FiniteRoot, SignTypeSpace, SmallRootTable};
use proptest::prelude::*;

const TYPES: [&str; 7] = ["A2", "B2", "G2", "A3", "C3", "D4", "A5"];

fn group(i: usize) -> AffineWeylGroup {
    AffineWeylGroup::new(TYPES[i].parse().unwrap())
}

/// A type index and a word over its generators.
fn typed_word(max_len: usize) -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..TYPES.len()).prop_flat_map(move |t| {
        let letters = TYPES[t][1..].parse::<usize>().unwrap() + 1;
        (Just(t), prop::collection::vec(0..letters, 0..=max_len))
    })
}

/// `s_{a + k d}(x_0 + b d) = s_a(x_0) + (b - k <a^v, x_0>) d`, written out
/// with the symmetrized form.
fn reflect(g: &AffineWeylGroup, root: &AffineRoot, x: &AffineRoot) -> AffineRoot {
    let sys = g.system();
    let a = &root.finite.0;
    let p = 2 * sys.inner(a, &x.finite.0) / sys.inner(a, a);
    let f: Vec<i64> = x.finite.0.iter().zip(a).map(|(xi, ai)| xi - p * ai).collect();
    AffineRoot::new(FiniteRoot(f), x.delta - root.delta * p)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn words_multiply_like_elements((t, w) in typed_word(14), cut in 0usize..15) {
        let g = group(t);
        let cut = cut.min(w.len());
        let (u, v) = w.split_at(cut);
        let whole = g.element_from_word(&w).unwrap();
        let parts = g.mul(&g.element_from_word(u).unwrap(), &g.element_from_word(v).unwrap());
        prop_assert_eq!(&whole, &parts);
        prop_assert_eq!(g.mul(&whole, &whole.inverse()), g.identity());
        prop_assert_eq!(g.length(&whole.inverse()), g.length(&whole));
    }

    #[test]
    fn canonical_word_round_trip((t, w) in typed_word(14)) {
        let g = group(t);
        let x = g.element_from_word(&w).unwrap();
        let canon = g.word_from_element(&x);
        prop_assert_eq!(canon.len(), g.length(&x));
        prop_assert!(canon.len() <= w.len());
        prop_assert_eq!((w.len() - canon.len()) % 2, 0);
        prop_assert_eq!(g.element_from_word(&canon).unwrap(), x);
    }

    #[test]
    fn root_action_is_a_homomorphism((t, w) in typed_word(10), cut in 0usize..11) {
        let g = group(t);
        let cut = cut.min(w.len());
        let (u, v) = w.split_at(cut);
        let (eu, ev) = (g.element_from_word(u).unwrap(), g.element_from_word(v).unwrap());
        let ew = g.mul(&eu, &ev);
        let table = SmallRootTable::new(&g);
        for r in table.roots() {
            let by_letters = w.iter().rev().fold(r.clone(), |x, &s| reflect(&g, &g.simple_root(s), &x));
            prop_assert_eq!(g.act_on_root(&ew, r), g.act_on_root(&eu, &g.act_on_root(&ev, r)));
            prop_assert_eq!(g.act_on_root(&ew, r), by_letters);
        }
    }

    #[test]
    fn reflections_match_the_formula((t, w) in typed_word(8), level in 0i64..4, pick in 0usize..64) {
        let g = group(t);
        let sys = g.system();
        let a = sys.root(pick % sys.num_positive()).clone();
        let root = AffineRoot::new(a, level);
        let s = g.reflection(&root).unwrap();
        let x = g.element_from_word(&w).unwrap();
        for r in SmallRootTable::new(&g).roots() {
            let image = g.act_on_root(&x, r);
            prop_assert_eq!(g.act_on_root(&s, &image), reflect(&g, &root, &image));
        }
        prop_assert_eq!(g.mul(&s, &s), g.identity());
    }

    #[test]
    fn left_multiplication_recurrence((t, w) in typed_word(12)) {
        let g = group(t);
        let sys = g.system();
        let x = g.element_from_word(&w).unwrap();
        for s in 1..g.num_generators() {
            let sx = g.left_mul(s, &x);
            for a in sys.positive_roots() {
                for b in [a.clone(), a.neg()] {
                    let sb = FiniteRoot(sys.simple_reflect_coords(s - 1, &b.0));
                    let lhs = g.shi_coefficient(&sx, &b).unwrap();
                    let rhs = g.shi_coefficient(&x, &sb).unwrap()
                        + g.shi_coefficient(&g.generators()[s], &b).unwrap();
                    prop_assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn automaton_recognizes_reduced_words((t, w) in typed_word(12)) {
        let g = group(t);
        let aut = Automaton::build(&g);
        let x = g.element_from_word(&w).unwrap();
        prop_assert_eq!(aut.is_reduced(&w).unwrap(), g.length(&x) == w.len());
    }

    #[test]
    fn sign_types_of_elements((t, w) in typed_word(12)) {
        let g = group(t);
        let x = g.element_from_word(&w).unwrap();
        let z = zeta(&g, &x);
        let space = SignTypeSpace::new(g.system_arc());
        prop_assert!(space.is_admissible(&z));
        prop_assert!(is_realizable(g.system(), &z));
        let table = SmallRootTable::new(&g);
        let small: std::collections::BTreeSet<AffineRoot> = g
            .inversion_set_by_action(&x)
            .into_iter()
            .filter(SmallRootTable::is_small)
            .collect();
        prop_assert_eq!(table.to_roots(&small_inversion_set(&g, &table, &x)), small);
        prop_assert_eq!(space.separation_set(&z).unwrap(), small_inversion_set(&g, &table, &x));
    }
}

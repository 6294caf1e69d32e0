mod common;

use common::{det, monomial, pure_words, word_pairs, words};
use proptest::prelude::*;
use tymrep::reps::{burau, t_ctx, tym, wtym};
use tymrep::words::{artin_action, chi, fox_derivative, GroupRingWord};
use tymrep::{BraidWord, FreeWord, LaurentPoly};

fn free_words(rank: usize, max_len: usize) -> impl Strategy<Value = FreeWord> {
    proptest::collection::vec((1..=rank, any::<bool>()), 0..=max_len).prop_map(move |ls| {
        let letters: Vec<(usize, i8)> = ls.into_iter().map(|(i, p)| (i, if p { 1 } else { -1 })).collect();
        FreeWord::new(rank, &letters).unwrap()
    })
}

proptest! {
    #[test]
    fn permutation_is_a_homomorphism((a, b) in word_pairs(5, 12, true)) {
        let ab = a.concat(&b).unwrap();
        prop_assert_eq!(ab.permutation(), a.permutation().compose(&b.permutation()));
    }

    #[test]
    fn artin_action_respects_braid_relations(w in words(5, 8, false), i in 1usize..4, j in 1usize..4) {
        let n = w.strands();
        prop_assume!(i + 1 < n && j < n);
        let lhs = BraidWord::from_ints(n, &[i as i32, i as i32 + 1, i as i32]).unwrap();
        let rhs = BraidWord::from_ints(n, &[i as i32 + 1, i as i32, i as i32 + 1]).unwrap();
        let a = |x: &BraidWord| artin_action(&w.concat(x).unwrap().concat(&w).unwrap()).unwrap();
        prop_assert_eq!(a(&lhs), a(&rhs));
        if i.abs_diff(j) >= 2 {
            let c1 = BraidWord::from_ints(n, &[i as i32, j as i32]).unwrap();
            let c2 = BraidWord::from_ints(n, &[j as i32, i as i32]).unwrap();
            prop_assert_eq!(a(&c1), a(&c2));
        }
        let cancel = BraidWord::from_ints(n, &[j as i32, -(j as i32)]).unwrap();
        prop_assert_eq!(a(&cancel), a(&BraidWord::identity(n)));
    }

    #[test]
    fn artin_action_is_a_homomorphism((a, b) in word_pairs(4, 8, false)) {
        let ab = artin_action(&a.concat(&b).unwrap()).unwrap();
        let (ia, ib) = (artin_action(&a).unwrap(), artin_action(&b).unwrap());
        let composed: Vec<FreeWord> = ib.iter().map(|x| x.substitute(&ia)).collect();
        prop_assert_eq!(ab, composed);
    }

    #[test]
    fn fox_decomposition(w in free_words(3, 10)) {
        // Σ_j (x_j - 1) D_j(w) = w - 1
        let mut lhs = GroupRingWord::zero();
        for j in 1..=3 {
            let mut xj = GroupRingWord::from_word(FreeWord::generator(3, j), 1);
            xj.add_term(FreeWord::identity(3), -1);
            lhs = lhs.add(&xj.mul(&fox_derivative(&w, j)));
        }
        let mut rhs = GroupRingWord::from_word(w.clone(), 1);
        rhs.add_term(FreeWord::identity(3), -1);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_is_a_homomorphism((a, b) in word_pairs(5, 10, true)) {
        let n = a.strands();
        let ab = a.concat(&b).unwrap();
        let r = wtym(n).unwrap();
        prop_assert_eq!(r.evaluate(&ab).unwrap(), r.evaluate(&a).unwrap().try_mul(&r.evaluate(&b).unwrap()).unwrap());
        prop_assert!(r.evaluate(&ab).unwrap().try_mul(&r.evaluate(&ab.inverse()).unwrap()).unwrap().is_identity());
        if ab.is_classical() {
            let bur = burau(n).unwrap();
            let e = |w: &BraidWord| bur.evaluate(w).unwrap();
            prop_assert_eq!(e(&ab), e(&a).try_mul(&e(&b)).unwrap());
            prop_assert!(e(&ab).try_mul(&e(&ab.inverse())).unwrap().is_identity());
        }
    }

    #[test]
    fn tym_images_are_monomial(w in words(6, 16, false)) {
        prop_assert!(tym(w.strands()).unwrap().evaluate(&w).unwrap().is_monomial());
    }

    #[test]
    fn burau_determinant(w in words(4, 8, false)) {
        // each generator block has determinant -t
        let d = det(&burau(w.strands()).unwrap().evaluate(&w).unwrap());
        let e = w.exponent_sum();
        let sign = if e % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(d, monomial(&t_ctx(), &[e]).try_mul(&LaurentPoly::from(sign)).unwrap());
    }

    #[test]
    fn commutators_of_pure_braids_are_in_the_tym_kernel(a in pure_words(4, 10, false), b in pure_words(4, 10, false)) {
        prop_assume!(a.strands() == b.strands());
        let c = BraidWord::commutator(&a, &b).unwrap();
        prop_assert!(tym(c.strands()).unwrap().evaluate(&c).unwrap().is_identity());
    }

    #[test]
    fn word_text_round_trip(w in words(6, 12, true)) {
        prop_assert_eq!(BraidWord::parse(&w.render()).unwrap(), w);
    }

    #[test]
    fn chi_images_have_exponent_sum_two(n in 2usize..7, j in 1usize..7) {
        prop_assume!(j <= n);
        let c = chi(&FreeWord::generator(n, j));
        prop_assert_eq!(c.exponent_sum(), 2);
        prop_assert_eq!(c.strands(), n + 1);
    }
}

#[test]
fn word_file_examples() {
    let w = BraidWord::parse("n=3\n1 -2").unwrap();
    assert_eq!(w, BraidWord::from_ints(3, &[1, -2]).unwrap());
    let v = BraidWord::parse("n=2\nv1").unwrap();
    assert_eq!(v, BraidWord::tau(2, 1).unwrap());
    let e = BraidWord::parse("n=3\n5").unwrap_err();
    assert!(e.is_parse());
    assert!(e.to_string().contains("out of range"));
}

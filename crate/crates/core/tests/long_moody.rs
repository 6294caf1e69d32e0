mod common;

use common::{pure_words, words};
use proptest::prelude::*;
use tymrep::laurent::CtxExt;
use tymrep::long_moody::{eta, kernel_words, lm_apply, lm_q, lm_q_semidirect, tq_ctx, tym_tq, SemidirectRep};
use tymrep::reps::{burau, burau_with, one_dim, tym};
use tymrep::words::artin_action;
use tymrep::{BraidWord, FreeWord, LaurentPoly, PolyMatrix, PolyRep};

fn free_words(rank: usize, max_len: usize) -> impl Strategy<Value = FreeWord> {
    proptest::collection::vec((1..=rank, any::<bool>()), 0..=max_len).prop_map(move |ls| {
        let letters: Vec<(usize, i8)> = ls.into_iter().map(|(i, p)| (i, if p { 1 } else { -1 })).collect();
        FreeWord::new(rank, &letters).unwrap()
    })
}

/// Braid word on `n` strands paired with a free word of rank `n`.
fn braid_and_free(max_n: usize) -> impl Strategy<Value = (BraidWord, FreeWord)> {
    (2..=max_n).prop_flat_map(|n| {
        let letters = proptest::collection::vec(common::letter_strategy(n, false), 0..6);
        (letters.prop_map(move |ls| common::word(n, ls)), free_words(n, 6))
    })
}

fn sources(n: usize) -> Vec<SemidirectRep<LaurentPoly>> {
    let q = tq_ctx().var("q");
    vec![
        SemidirectRep::from_braid_rep(&tym(n + 1).unwrap()).unwrap(),
        SemidirectRep::from_braid_rep(&burau(n + 1).unwrap()).unwrap(),
        SemidirectRep::from_braid_rep(&tym_tq(n + 1).unwrap()).unwrap(),
        SemidirectRep::from_braid_rep(&one_dim(n + 1, &q).unwrap()).unwrap(),
        eta(n).unwrap(),
    ]
}

/// `LM_q(TYM_{n+1})(σ_i)` written out blockwise: a block matrix `B` with
/// `n × n` blocks of size `n + 1`, times `TYM_{n+1}(σ_{i+1})` on every
/// block of the diagonal.
fn block_formula(n: usize, i: usize) -> PolyMatrix {
    let c = tq_ctx();
    let (t, q2) = (c.var("t"), c.var("q").pow(2).unwrap());
    let d = n + 1;
    let scaled_diag = |at: [usize; 2]| {
        PolyMatrix::diag((1..=d).map(|k| if at.contains(&k) { &q2 * &t } else { q2.clone() }).collect())
    };
    let m_i = scaled_diag([1, i + 2]);
    let n_i = scaled_diag([1, i + 1]);
    let id = PolyMatrix::identity(d);
    let mut b = PolyMatrix::identity(n * d);
    let at = |k: usize| (k - 1) * d;
    b.put_block(at(i), at(i), &PolyMatrix::zeros(d, d));
    b.put_block(at(i), at(i + 1), &m_i);
    b.put_block(at(i + 1), at(i), &id);
    b.put_block(at(i + 1), at(i + 1), &id.try_sub(&n_i).unwrap());
    let s = tym_tq(d).unwrap().sigma(i + 1).clone();
    let diag = PolyMatrix::direct_sum(&vec![s; n]);
    b.try_mul(&diag).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn restricted_representations_intertwine_the_artin_action((beta, w) in braid_and_free(5)) {
        // S(β) X(w) = X(β·w) S(β)
        let moved = w.substitute(&artin_action(&beta).unwrap());
        for eta in sources(beta.strands()) {
            let s = eta.eval_braid(&beta).unwrap();
            let lhs = s.try_mul(&eta.eval_free(&w).unwrap()).unwrap();
            let rhs = eta.eval_free(&moved).unwrap().try_mul(&s).unwrap();
            prop_assert_eq!(lhs, rhs, "{}", eta.name());
        }
    }

    #[test]
    fn long_moody_images_are_invertible_homomorphisms(w in words(4, 10, false)) {
        let n = w.strands();
        for rep in [lm_q(&tym_tq(n + 1).unwrap()).unwrap(), lm_q_semidirect(&eta(n).unwrap()).unwrap()] {
            let m = rep.evaluate(&w).unwrap();
            prop_assert!(m.try_mul(&rep.evaluate(&w.inverse()).unwrap()).unwrap().is_identity());
        }
    }

    #[test]
    fn twisted_kernel_is_inside_the_squared_burau_kernel(a in pure_words(4, 6, false), b in pure_words(4, 6, false)) {
        prop_assume!(a.strands() == b.strands());
        let c = BraidWord::commutator(&a, &b).unwrap();
        let n = c.strands();
        let twisted = lm_q(&tym_tq(n + 2).unwrap()).unwrap();
        if twisted.evaluate(&c.shift_embed(1)).unwrap().is_identity() {
            prop_assert!(squared_burau(n).evaluate(&c).unwrap().is_identity());
        }
    }
}

fn squared_burau(n: usize) -> PolyRep {
    let q2 = tq_ctx().var("q").pow(2).unwrap();
    burau_with(n, &q2, "Bur_q2").unwrap()
}

#[test]
fn braid_relations_up_to_five_strands() {
    for n in 2..=5 {
        let reps = [
            lm_apply(&tym(n + 1).unwrap()).unwrap(),
            lm_apply(&burau(n + 1).unwrap()).unwrap(),
            lm_q(&tym_tq(n + 1).unwrap()).unwrap(),
            lm_q_semidirect(&eta(n).unwrap()).unwrap(),
        ];
        for r in reps {
            assert!(r.check_relations(), "{} on {n} strands: {:?}", r.name(), r.failed_relations());
        }
    }
}

#[test]
fn generators_match_the_block_formula() {
    for n in 2..=5 {
        let lm = lm_q(&tym_tq(n + 1).unwrap()).unwrap();
        assert_eq!(lm.dim(), n * (n + 1));
        for i in 1..n {
            assert_eq!(*lm.sigma(i), block_formula(n, i), "n = {n}, i = {i}");
        }
    }
}

#[test]
fn kernel_words_separate_burau_from_the_twisted_representation() {
    for k in kernel_words().into_iter().filter(|k| k.word.strands() <= 6) {
        let n = k.word.strands();
        assert!(burau(n).unwrap().evaluate(&k.word).unwrap().is_identity(), "{}", k.name);
        let twisted = lm_q(&tym_tq(n + 2).unwrap()).unwrap();
        assert!(!twisted.evaluate(&k.word.shift_embed(1)).unwrap().is_identity(), "{}", k.name);
    }
}

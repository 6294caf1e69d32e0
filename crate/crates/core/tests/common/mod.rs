//! Word generators and hand-computed oracles shared by the integration
//! tests and the acceptance suite.
#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use tymrep::laurent::{ExponentVector, LaurentPoly};
use tymrep::{BraidWord, Ctx, Letter, PolyMatrix};

pub fn sigma(i: usize, s: i8) -> Letter {
    Letter::Sigma(i, s)
}

pub fn word(n: usize, letters: Vec<Letter>) -> BraidWord {
    BraidWord::new(n, letters).expect("letters in range")
}

/// Appends crossings that return every strand to its start, so the result
/// is pure. `signs` picks the crossing type of each appended letter, and
/// `virtual_fix` uses `τ` letters instead.
pub fn make_pure(n: usize, mut letters: Vec<Letter>, signs: &[bool], virtual_fix: bool) -> Vec<Letter> {
    let mut at: Vec<usize> = (0..n).collect();
    for l in &letters {
        let k = l.index() - 1;
        at.swap(k, k + 1);
    }
    let mut s = signs.iter().cycle();
    while let Some(k) = (0..n.saturating_sub(1)).find(|&k| at[k] > at[k + 1]) {
        at.swap(k, k + 1);
        letters.push(if virtual_fix {
            Letter::Tau(k + 1)
        } else {
            sigma(k + 1, if *s.next().unwrap_or(&true) { 1 } else { -1 })
        });
    }
    letters
}

pub fn letter_strategy(n: usize, welded: bool) -> BoxedStrategy<Letter> {
    let m = n - 1;
    if welded {
        prop_oneof![
            2 => (1..=m, any::<bool>()).prop_map(|(i, p)| sigma(i, if p { 1 } else { -1 })),
            1 => (1..=m).prop_map(Letter::Tau),
        ]
        .boxed()
    } else {
        (1..=m, any::<bool>()).prop_map(|(i, p)| sigma(i, if p { 1 } else { -1 })).boxed()
    }
}

/// Random words on `2..=max_n` strands.
pub fn words(max_n: usize, max_len: usize, welded: bool) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(letter_strategy(n, welded), 0..=max_len).prop_map(move |ls| word(n, ls))
    })
}

/// Two random words on the same strand count.
pub fn word_pairs(max_n: usize, max_len: usize, welded: bool) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2..=max_n).prop_flat_map(move |n| {
        let w = || proptest::collection::vec(letter_strategy(n, welded), 0..=max_len).prop_map(move |ls| word(n, ls));
        (w(), w())
    })
}

pub fn pure_words(max_n: usize, max_len: usize, welded: bool) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| {
        (
            proptest::collection::vec(letter_strategy(n, welded), 0..=max_len),
            proptest::collection::vec(any::<bool>(), 1..8),
            any::<bool>(),
        )
            .prop_map(move |(ls, signs, v)| word(n, make_pure(n, ls, &signs, welded && v)))
    })
}

/// Random word with an explicit generator, for the acceptance suite.
pub fn random_word<R: Rng>(rng: &mut R, n: usize, len: usize, welded: bool) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n);
            if welded && rng.gen_bool(0.35) {
                Letter::Tau(i)
            } else {
                sigma(i, if rng.gen() { 1 } else { -1 })
            }
        })
        .collect();
    word(n, letters)
}

pub fn random_pure_word<R: Rng>(rng: &mut R, n: usize, len: usize, welded: bool) -> BraidWord {
    let w = random_word(rng, n, len, welded);
    let signs: Vec<bool> = (0..6).map(|_| rng.gen()).collect();
    let v = welded && rng.gen();
    word(n, make_pure(n, w.letters().to_vec(), &signs, v))
}

/// Relators `L R^{-1}` of the braid presentation, and of the welded one
/// when `welded` is set, usable on `n` strands.
pub fn relators(n: usize, welded: bool) -> Vec<Vec<Letter>> {
    let s = |i| sigma(i, 1);
    let si = |i| sigma(i, -1);
    let t = Letter::Tau;
    let mut out = Vec::new();
    for i in 1..n {
        out.push(vec![s(i), si(i)]);
        out.push(vec![si(i), s(i)]);
        if welded {
            out.push(vec![t(i), t(i)]);
        }
        for j in (i + 2)..n {
            out.push(vec![s(i), s(j), si(i), si(j)]);
            if welded {
                out.push(vec![t(i), t(j), t(i), t(j)]);
                out.push(vec![s(i), t(j), si(i), t(j)]);
                out.push(vec![t(i), s(j), t(i), si(j)]);
            }
        }
        if i + 1 < n {
            let j = i + 1;
            out.push(vec![s(i), s(j), s(i), si(j), si(i), si(j)]);
            if welded {
                out.push(vec![t(i), t(j), t(i), t(j), t(i), t(j)]);
                // σ_i τ_{i+1} τ_i = τ_{i+1} τ_i σ_{i+1}
                out.push(vec![s(i), t(j), t(i), si(j), t(i), t(j)]);
                // τ_i σ_{i+1} σ_i = σ_{i+1} σ_i τ_{i+1}
                out.push(vec![t(i), s(j), s(i), t(j), si(i), si(j)]);
            }
        }
    }
    out
}

/// Letter-by-letter tallies: `over[i][j]` sums the signs of crossings with
/// string `i` over string `j`; `virt[a][b]` counts `τ` crossings with `a`
/// on the left, minus those with `b` on the left.
pub struct Tallies {
    pub over: Vec<Vec<i64>>,
    pub virt: Vec<Vec<i64>>,
}

pub fn tallies(w: &BraidWord) -> Tallies {
    let n = w.strands();
    let mut over = vec![vec![0; n]; n];
    let mut virt = vec![vec![0; n]; n];
    let mut at: Vec<usize> = (0..n).collect();
    for l in w.letters() {
        let k = l.index() - 1;
        let (a, b) = (at[k], at[k + 1]);
        match *l {
            Letter::Sigma(_, 1) => over[b][a] += 1,
            Letter::Sigma(_, _) => over[a][b] -= 1,
            Letter::Tau(_) => {
                virt[a][b] += 1;
                virt[b][a] -= 1;
            }
        }
        at.swap(k, k + 1);
    }
    for i in 0..n {
        over[i][i] = 0;
        virt[i][i] = 0;
    }
    Tallies { over, virt }
}

pub fn monomial(ctx: &Ctx, exps: &[i64]) -> LaurentPoly {
    let e: Vec<i32> = exps.iter().map(|&x| x as i32).collect();
    LaurentPoly::monomial(ctx, ExponentVector::new(&e), 1).expect("exponent length matches the context")
}

/// Determinant by cofactor expansion along the first row.
pub fn det(m: &PolyMatrix) -> LaurentPoly {
    let n = m.rows();
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = LaurentPoly::from(0);
    for j in 0..n {
        if m.get(0, j) == &LaurentPoly::from(0) {
            continue;
        }
        let minor = PolyMatrix::from_fn(n - 1, n - 1, |r, c| m.get(r + 1, if c < j { c } else { c + 1 }).clone());
        let term = m.get(0, j).try_mul(&det(&minor)).unwrap();
        acc = if j % 2 == 0 { acc.try_add(&term).unwrap() } else { acc.try_sub(&term).unwrap() };
    }
    acc
}

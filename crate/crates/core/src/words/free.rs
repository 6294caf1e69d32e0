use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

use super::braid::{BraidWord, Letter};

/// A freely reduced word in the free group `F_n = <x_1, ..., x_n>`.
/// Letters are `(generator, ±1)` with 1-based generators.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<(usize, i8)>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        FreeWord { rank, letters: vec![] }
    }

    pub fn generator(rank: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= rank, "generator x_{i} outside F_{rank}");
        FreeWord { rank, letters: vec![(i, 1)] }
    }

    /// Reduces and validates a letter sequence.
    pub fn new(rank: usize, letters: &[(usize, i8)]) -> Result<Self> {
        let mut w = FreeWord::identity(rank);
        for &(i, s) in letters {
            if i == 0 || i > rank {
                return Err(Error::IndexOutOfRange { index: i, strands: rank });
            }
            if s.abs() != 1 {
                return Err(Error::Degenerate(format!("letter exponent must be ±1, got {s}")));
            }
            w.push(i, s);
        }
        Ok(w)
    }

    fn push(&mut self, i: usize, s: i8) {
        if self.letters.last() == Some(&(i, -s)) {
            self.letters.pop();
        } else {
            self.letters.push((i, s));
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        assert_eq!(self.rank, other.rank, "free group ranks differ");
        let mut w = self.clone();
        for &(i, s) in &other.letters {
            w.push(i, s);
        }
        w
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord { rank: self.rank, letters: self.letters.iter().rev().map(|&(i, s)| (i, -s)).collect() }
    }

    /// Replaces each `x_i` by `images[i - 1]`.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        assert_eq!(images.len(), self.rank, "one image per generator");
        let rank = images.first().map_or(self.rank, |w| w.rank);
        let mut w = FreeWord::identity(rank);
        for &(i, s) in &self.letters {
            let img = if s > 0 { images[i - 1].clone() } else { images[i - 1].inverse() };
            w = w.mul(&img);
        }
        w
    }

    /// The suffix starting at letter `k`, already reduced.
    fn suffix(&self, k: usize) -> FreeWord {
        FreeWord { rank: self.rank, letters: self.letters[k..].to_vec() }
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> =
            self.letters.iter().map(|&(i, s)| if s > 0 { format!("x{i}") } else { format!("x{i}^-1") }).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord({self})")
    }
}

/// An element of the integral group ring `Z[F_n]`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GroupRingWord {
    terms: BTreeMap<FreeWord, i64>,
}

impl GroupRingWord {
    pub fn zero() -> Self {
        GroupRingWord::default()
    }

    pub fn from_word(w: FreeWord, c: i64) -> Self {
        let mut g = GroupRingWord::zero();
        g.add_term(w, c);
        g
    }

    pub fn add_term(&mut self, w: FreeWord, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut g = self.clone();
        for (w, c) in other.terms() {
            g.add_term(w.clone(), c);
        }
        g
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut g = self.clone();
        for (w, c) in other.terms() {
            g.add_term(w.clone(), -c);
        }
        g
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut g = GroupRingWord::zero();
        for (a, c) in self.terms() {
            for (b, d) in other.terms() {
                g.add_term(a.mul(b), c * d);
            }
        }
        g
    }

    /// Sum of coefficients.
    pub fn augmentation(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl fmt::Debug for GroupRingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms().map(|(w, c)| format!("{c}·[{w}]")).collect();
        write!(f, "GroupRingWord({})", if parts.is_empty() { "0".into() } else { parts.join(" + ") })
    }
}

/// The right Fox derivative `D_j`, characterised by
/// `w - 1 = Σ_j (x_j - 1) · D_j(w)`.
pub fn fox_derivative(w: &FreeWord, j: usize) -> GroupRingWord {
    let mut g = GroupRingWord::zero();
    for (k, &(i, s)) in w.letters().iter().enumerate() {
        if i != j {
            continue;
        }
        if s > 0 {
            g.add_term(w.suffix(k + 1), 1);
        } else {
            // D_j(x_j^{-1}) · rest = -x_j^{-1} · rest, which is the suffix at k.
            g.add_term(w.suffix(k), -1);
        }
    }
    g
}

/// Images of `x_1, ..., x_n` under the Artin automorphism of `σ_i^{±1}`.
fn artin_generator(n: usize, i: usize, sign: i8) -> Vec<FreeWord> {
    let x = |k| FreeWord::generator(n, k);
    let mut imgs: Vec<FreeWord> = (1..=n).map(x).collect();
    if sign > 0 {
        imgs[i - 1] = x(i + 1);
        imgs[i] = x(i + 1).inverse().mul(&x(i)).mul(&x(i + 1));
    } else {
        imgs[i - 1] = x(i).mul(&x(i + 1)).mul(&x(i).inverse());
        imgs[i] = x(i);
    }
    imgs
}

/// The Artin action `a_n(w)` as the images of `x_1, ..., x_n`; the
/// automorphisms of the letters are composed so that `a_n` is a
/// homomorphism, `a_n(λλ') = a_n(λ) ∘ a_n(λ')`.
pub fn artin_action(w: &BraidWord) -> Result<Vec<FreeWord>> {
    let n = w.strands();
    let mut imgs: Vec<FreeWord> = (1..=n).map(|k| FreeWord::generator(n, k)).collect();
    for l in w.letters() {
        let Letter::Sigma(i, s) = *l else {
            return Err(Error::VirtualLetter);
        };
        let g = artin_generator(n, i, s);
        imgs = g.iter().map(|gk| gk.substitute(&imgs)).collect();
    }
    Ok(imgs)
}

/// `χ_{n,1}`: sends `x_i` to `(σ_{i-1}···σ_1)^{-1} σ_i^2 (σ_{i-1}···σ_1)` in
/// `B_{n+1}`.
pub fn chi(w: &FreeWord) -> BraidWord {
    let n1 = w.rank() + 1;
    let mut letters = Vec::new();
    for &(i, s) in w.letters() {
        let mut gen = Vec::with_capacity(2 * i);
        gen.extend((1..i).map(|k| Letter::Sigma(k, -1)));
        gen.push(Letter::Sigma(i, 1));
        gen.push(Letter::Sigma(i, 1));
        gen.extend((1..i).rev().map(|k| Letter::Sigma(k, 1)));
        if s > 0 {
            letters.extend(gen);
        } else {
            letters.extend(gen.iter().rev().map(Letter::inverse));
        }
    }
    BraidWord::new(n1, letters).expect("indices stay below n + 1")
}

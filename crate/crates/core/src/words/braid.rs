use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Permutation;

/// A generator of the (welded) braid group, indices 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    /// `σ_i` for `sign = 1`, `σ_i^{-1}` for `sign = -1`.
    Sigma(usize, i8),
    /// The virtual generator `τ_i`, an involution.
    Tau(usize),
}

impl Letter {
    pub fn index(&self) -> usize {
        match *self {
            Letter::Sigma(i, _) | Letter::Tau(i) => i,
        }
    }

    pub fn inverse(&self) -> Letter {
        match *self {
            Letter::Sigma(i, s) => Letter::Sigma(i, -s),
            t => t,
        }
    }

    pub fn is_virtual(&self) -> bool {
        matches!(self, Letter::Tau(_))
    }
}

/// A word in `B_n` or `WB_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self> {
        if n == 0 {
            return Err(Error::TooFewStrands { min: 1, got: 0 });
        }
        for l in &letters {
            if let Letter::Sigma(_, s) = l {
                if s.abs() != 1 {
                    return Err(Error::Degenerate(format!("letter exponent must be ±1, got {s}")));
                }
            }
            let i = l.index();
            if i == 0 || i >= n {
                return Err(Error::IndexOutOfRange { index: i, strands: n });
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn identity(n: usize) -> Self {
        BraidWord { n, letters: vec![] }
    }

    /// Classical word from signed indices: `k` is `σ_k`, `-k` is `σ_k^{-1}`.
    pub fn from_ints(n: usize, ints: &[i32]) -> Result<Self> {
        let letters = ints
            .iter()
            .map(|&k| {
                if k == 0 {
                    return Err(Error::IndexOutOfRange { index: 0, strands: n });
                }
                Ok(Letter::Sigma(k.unsigned_abs() as usize, k.signum() as i8))
            })
            .collect::<Result<_>>()?;
        BraidWord::new(n, letters)
    }

    pub fn sigma(n: usize, i: usize, sign: i8) -> Result<Self> {
        BraidWord::new(n, vec![Letter::Sigma(i, sign)])
    }

    pub fn tau(n: usize, i: usize) -> Result<Self> {
        BraidWord::new(n, vec![Letter::Tau(i)])
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_classical(&self) -> bool {
        !self.letters.iter().any(Letter::is_virtual)
    }

    /// Sum of the exponents of the classical letters.
    pub fn exponent_sum(&self) -> i64 {
        self.letters
            .iter()
            .map(|l| match l {
                Letter::Sigma(_, s) => *s as i64,
                Letter::Tau(_) => 0,
            })
            .sum()
    }

    pub fn inverse(&self) -> Self {
        BraidWord { n: self.n, letters: self.letters.iter().rev().map(Letter::inverse).collect() }
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::StrandMismatch { expected: self.n, got: other.n });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    /// Concatenation of several words on the same strand count.
    pub fn product(n: usize, words: &[&BraidWord]) -> Result<Self> {
        words.iter().try_fold(BraidWord::identity(n), |acc, w| acc.concat(w))
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { n: self.n, letters }
    }

    /// `[a, b] = a^{-1} b^{-1} a b`.
    pub fn commutator(a: &Self, b: &Self) -> Result<Self> {
        a.inverse().concat(&b.inverse())?.concat(a)?.concat(b)
    }

    /// `c^{-1} · self · c`.
    pub fn conjugate_by(&self, c: &Self) -> Result<Self> {
        c.inverse().concat(self)?.concat(c)
    }

    /// Raises every index and the strand count by `k`.
    pub fn shift_embed(&self, k: usize) -> Self {
        let letters = self
            .letters
            .iter()
            .map(|l| match *l {
                Letter::Sigma(i, s) => Letter::Sigma(i + k, s),
                Letter::Tau(i) => Letter::Tau(i + k),
            })
            .collect();
        BraidWord { n: self.n + k, letters }
    }

    /// Re-reads the word on `m ≥ n` strands.
    pub fn widen(&self, m: usize) -> Result<Self> {
        if m < self.n {
            return Err(Error::StrandMismatch { expected: self.n, got: m });
        }
        Ok(BraidWord { n: m, letters: self.letters.clone() })
    }

    /// `τ(j)`: the starting position of the strand that ends at bottom
    /// position `j`. Every letter transposes the positions it acts on.
    pub fn permutation(&self) -> Permutation {
        let mut at: Vec<usize> = (0..self.n).collect();
        for l in &self.letters {
            let k = l.index() - 1;
            at.swap(k, k + 1);
        }
        Permutation::from_zero_based(at)
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// Text form: `n=<strands>` then the tokens on one line.
    pub fn render(&self) -> String {
        let toks: Vec<String> = self
            .letters
            .iter()
            .map(|l| match *l {
                Letter::Sigma(i, s) if s > 0 => i.to_string(),
                Letter::Sigma(i, _) => format!("-{i}"),
                Letter::Tau(i) => format!("v{i}"),
            })
            .collect();
        format!("n={}\n{}\n", self.n, toks.join(" "))
    }

    /// Parses the text form. Besides plain tokens, `[A, B]` denotes the
    /// commutator `A^{-1}B^{-1}AB`, `(A)^k` a power (negative allowed), and
    /// `#` starts a comment.
    pub fn parse(src: &str) -> Result<Self> {
        super::parse::parse_braid_word(src)
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord({})", self.render().trim_end().replace('\n', ": "))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{1, ..., n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    // images[j - 1] = π(j), stored 0-based.
    images: Vec<usize>,
}

impl Permutation {
    /// From 1-based images `[π(1), ..., π(n)]`.
    pub fn new(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::NotPermutation(images.to_vec()));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images: images.iter().map(|x| x - 1).collect() })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(&images.iter().map(|x| x + 1).collect::<Vec<_>>()).is_ok());
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Swaps `i` and `j` (1-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Permutation::identity(n);
        p.images.swap(i - 1, j - 1);
        p
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `π(j)`, 1-based.
    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1] + 1
    }

    /// `π(j)`, 0-based.
    pub fn apply0(&self, j: usize) -> usize {
        self.images[j]
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// `self ∘ other`, i.e. `j ↦ self(other(j))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "permutation sizes differ");
        Permutation { images: other.images.iter().map(|&j| self.images[j]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (j, &x) in self.images.iter().enumerate() {
            inv[x] = j;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &x)| j == x)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({:?})", self.images())
    }
}

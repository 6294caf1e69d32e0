use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::words::{BraidWord, Letter};

use super::diagram::{Crossing, Diagram};
use super::relations::{tym_matrix, Mode};

/// Signed crossing tallies between strings, indexed by starting position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingProfile {
    n: usize,
    /// `over[i][j]`: signed classical crossings where `i` passes over `j`.
    over: Vec<Vec<i64>>,
    /// `virt[i][j]`: signed virtual passes of `i` across `j`; antisymmetric.
    virt: Vec<Vec<i64>>,
}

impl LinkingProfile {
    fn empty(n: usize) -> Self {
        LinkingProfile { n, over: vec![vec![0; n]; n], virt: vec![vec![0; n]; n] }
    }

    fn classical(&mut self, over: usize, under: usize, sign: i8) {
        if over != under {
            self.over[over][under] += sign as i64;
        }
    }

    fn virtual_pass(&mut self, a: usize, b: usize, chirality: i8) {
        if a != b {
            self.virt[a][b] += chirality as i64;
            self.virt[b][a] -= chirality as i64;
        }
    }

    pub fn from_word(w: &BraidWord) -> Self {
        let n = w.strands();
        let mut p = LinkingProfile::empty(n);
        let mut at: Vec<usize> = (0..n).collect();
        for l in w.letters() {
            let k = l.index() - 1;
            let (left, right) = (at[k], at[k + 1]);
            match *l {
                Letter::Sigma(_, s) if s > 0 => p.classical(right, left, s),
                Letter::Sigma(_, s) => p.classical(left, right, s),
                Letter::Tau(_) => p.virtual_pass(left, right, 1),
            }
            at.swap(k, k + 1);
        }
        p
    }

    pub fn from_diagram(d: &Diagram) -> Self {
        let mut p = LinkingProfile::empty(d.strands());
        for c in d.crossings() {
            match *c {
                Crossing::Classical { sign, over_in, under_in, .. } => {
                    p.classical(d.string_of(over_in), d.string_of(under_in), sign)
                }
                Crossing::Virtual { chirality, a_in, b_in, .. } => {
                    p.virtual_pass(d.string_of(a_in), d.string_of(b_in), chirality)
                }
            }
        }
        p
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    /// `vℓ_ij`, 0-based.
    pub fn over(&self, i: usize, j: usize) -> i64 {
        self.over[i][j]
    }

    /// `V_ij`, 0-based.
    pub fn virtual_count(&self, i: usize, j: usize) -> i64 {
        self.virt[i][j]
    }

    /// `2 ℓ_ij = vℓ_ij + vℓ_ji`, kept doubled so odd totals stay exact.
    pub fn linking_doubled(&self, i: usize, j: usize) -> i64 {
        self.over[i][j] + self.over[j][i]
    }

    /// `ℓ_ij` when the doubled count is even.
    pub fn linking(&self, i: usize, j: usize) -> Option<i64> {
        let d = self.linking_doubled(i, j);
        (d % 2 == 0).then_some(d / 2)
    }

    /// `Σ_i vℓ_ij`: exponent of the `u` family in column `j`.
    pub fn under_total(&self, j: usize) -> i64 {
        (0..self.n).map(|i| self.over[i][j]).sum()
    }

    /// `Σ_i vℓ_ji`: exponent of the `v` family in column `j`.
    pub fn over_total(&self, j: usize) -> i64 {
        (0..self.n).map(|i| self.over[j][i]).sum()
    }

    /// `Σ_i V_ij`: exponent of the `alpha` family in column `j`.
    pub fn virtual_total(&self, j: usize) -> i64 {
        (0..self.n).map(|i| self.virt[i][j]).sum()
    }
}

/// The four kernel characterisations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KernelTheorem {
    /// Two-variable: every row sum of linking numbers vanishes.
    TotalLinking,
    /// Multi-variable: every pairwise linking number vanishes.
    PairwiseLinking,
    /// Welded three-variable: the column totals of `vℓ`, its transpose and
    /// `V` vanish.
    WeldedTotals,
    /// Welded multi-variable: `vℓ_ij`, `vℓ_ji` and `V_ij` vanish for all
    /// pairs.
    WeldedPairwise,
}

impl KernelTheorem {
    pub const ALL: [KernelTheorem; 4] = [
        KernelTheorem::TotalLinking,
        KernelTheorem::PairwiseLinking,
        KernelTheorem::WeldedTotals,
        KernelTheorem::WeldedPairwise,
    ];

    /// The invariant whose triviality the predicate characterises.
    pub fn mode(self) -> Mode {
        match self {
            KernelTheorem::TotalLinking => Mode::TwoVar,
            KernelTheorem::PairwiseLinking => Mode::Multi,
            KernelTheorem::WeldedTotals => Mode::Welded3,
            KernelTheorem::WeldedPairwise => Mode::WeldedMulti,
        }
    }

    pub fn code(self) -> &'static str {
        match self {
            KernelTheorem::TotalLinking => "318",
            KernelTheorem::PairwiseLinking => "319",
            KernelTheorem::WeldedTotals => "48",
            KernelTheorem::WeldedPairwise => "49",
        }
    }
}

impl FromStr for KernelTheorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        KernelTheorem::ALL
            .into_iter()
            .find(|t| t.code() == s)
            .ok_or_else(|| Error::Degenerate(format!("unknown theorem `{s}` (expected 318, 319, 48 or 49)")))
    }
}

impl fmt::Display for KernelTheorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Evaluates the linking-number condition of `which` on `d`.
///
/// The two-variable and welded three-variable conditions return `false` on
/// non-pure input, since their matrices are then not diagonal. The indexed
/// conditions are only stated for pure string links and reject the rest.
pub fn kernel_predicate(d: &Diagram, which: KernelTheorem) -> Result<bool> {
    let pure = d.is_pure();
    if !pure && matches!(which, KernelTheorem::PairwiseLinking | KernelTheorem::WeldedPairwise) {
        return Err(Error::NotPure);
    }
    if d.has_virtual() && !which.mode().is_welded() {
        return Err(Error::VirtualInClassicalMode(which.mode().name().into()));
    }
    let p = LinkingProfile::from_diagram(d);
    let n = d.strands();
    let pairs = || (0..n).flat_map(move |i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)));
    Ok(pure
        && match which {
            KernelTheorem::TotalLinking => {
                (0..n).all(|i| (0..n).filter(|&j| j != i).map(|j| p.linking_doubled(i, j)).sum::<i64>() == 0)
            }
            KernelTheorem::PairwiseLinking => pairs().all(|(i, j)| p.linking_doubled(i, j) == 0),
            KernelTheorem::WeldedTotals => {
                (0..n).all(|j| p.under_total(j) == 0 && p.over_total(j) == 0 && p.virtual_total(j) == 0)
            }
            KernelTheorem::WeldedPairwise => pairs().all(|(i, j)| p.over(i, j) == 0 && p.virtual_count(i, j) == 0),
        })
}

/// `kernel_predicate` alongside the direct matrix check it characterises.
pub fn kernel_agreement(d: &Diagram, which: KernelTheorem) -> Result<(bool, bool)> {
    let pred = kernel_predicate(d, which)?;
    let m = tym_matrix(d, which.mode())?;
    Ok((pred, m.is_identity()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize, ints: &[i32]) -> Diagram {
        Diagram::from_word(&BraidWord::from_ints(n, ints).unwrap())
    }

    #[test]
    fn full_twist_profile() {
        let w = BraidWord::from_ints(2, &[1, 1]).unwrap();
        let p = LinkingProfile::from_word(&w);
        assert_eq!(p.linking(0, 1), Some(1));
        assert_eq!((p.over(0, 1), p.over(1, 0)), (1, 1));
        assert_eq!(p.virtual_count(0, 1), 0);
        assert_eq!(p, LinkingProfile::from_diagram(&Diagram::from_word(&w)));
    }

    #[test]
    fn tau_squared_cancels() {
        let w = BraidWord::tau(2, 1).unwrap().pow(2);
        assert_eq!(LinkingProfile::from_word(&w).virtual_count(0, 1), 0);
        let one = LinkingProfile::from_word(&BraidWord::tau(2, 1).unwrap());
        assert_eq!((one.virtual_count(0, 1), one.virtual_count(1, 0)), (1, -1));
    }

    #[test]
    fn predicates() {
        let twist = d(2, &[1, 1]);
        assert_eq!(kernel_agreement(&twist, KernelTheorem::TotalLinking).unwrap(), (false, false));
        let cancel = d(2, &[1, 1, -1, -1]);
        for t in KernelTheorem::ALL {
            assert_eq!(kernel_agreement(&cancel, t).unwrap(), (true, true), "{t}");
        }
        let a = BraidWord::from_ints(3, &[1, 1]).unwrap();
        let b = BraidWord::from_ints(3, &[2, 2]).unwrap();
        let comm = Diagram::from_word(&BraidWord::commutator(&a, &b).unwrap());
        assert_eq!(kernel_agreement(&comm, KernelTheorem::PairwiseLinking).unwrap(), (true, true));
    }

    #[test]
    fn purity_required() {
        assert_eq!(kernel_predicate(&d(2, &[1]), KernelTheorem::PairwiseLinking), Err(Error::NotPure));
        assert_eq!(kernel_predicate(&d(2, &[1]), KernelTheorem::TotalLinking), Ok(false));
    }
}

//! Plain linear codes and exact minimum distance.

use rayon::prelude::*;

use crate::cancel::CancelToken;
use crate::error::{Error, Result};
use crate::field::Fe;
use crate::matrix::Matrix;

/// Longest code the column-subset search accepts.
pub const DISTANCE_MAX_LENGTH: usize = 24;
/// Largest message count the codeword enumeration accepts.
pub const MESSAGE_GUARD: u128 = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceStrategy {
    /// Cheaper of the two by candidate count.
    Auto,
    /// Smallest set of linearly dependent parity-check columns.
    Columns,
    /// Minimum weight over all nonzero codewords.
    Messages,
}

/// A linear code given by a generator matrix; the parity-check matrix is
/// its exact nullspace, so codewords satisfy `H wᵀ = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    gen: Matrix,
    parity: Matrix,
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Calls `visit` on each `w`-subset of `start..n` extended by `prefix`, in
/// lexicographic order, until it returns `true`.
fn any_subset(
    prefix: &mut Vec<usize>,
    start: usize,
    n: usize,
    w: usize,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if prefix.len() == w {
        return visit(prefix);
    }
    let need = w - prefix.len();
    for i in start..=n - need {
        prefix.push(i);
        let hit = any_subset(prefix, i + 1, n, w, visit);
        prefix.pop();
        if hit {
            return true;
        }
    }
    false
}

impl LinearCode {
    /// Code spanned by the rows of `gen`; dependent rows are dropped.
    pub fn new(gen: &Matrix) -> Self {
        let basis = gen.row_space_basis();
        let parity = basis.nullspace();
        LinearCode { gen: basis, parity }
    }

    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    /// Generator matrix in reduced echelon form.
    pub fn generator_matrix(&self) -> &Matrix {
        &self.gen
    }

    pub fn parity_check_matrix(&self) -> &Matrix {
        &self.parity
    }

    pub fn contains(&self, word: &[Fe]) -> Result<bool> {
        Ok(self.parity.mul_vec(word)?.iter().all(|a| a.is_zero()))
    }

    fn column_cost(&self) -> u128 {
        let r = self.n() - self.k();
        (1..=r + 1).map(|w| binomial(self.n(), w)).sum()
    }

    fn message_cost(&self) -> u128 {
        (self.gen.field().size() as u128)
            .checked_pow(self.k() as u32)
            .unwrap_or(u128::MAX)
    }

    pub fn min_distance(&self) -> Result<usize> {
        self.min_distance_with(DistanceStrategy::Auto, &CancelToken::new())
    }

    pub fn min_distance_with(
        &self,
        strategy: DistanceStrategy,
        cancel: &CancelToken,
    ) -> Result<usize> {
        if self.k() == 0 {
            return Err(Error::ZeroCode);
        }
        let strategy = match strategy {
            DistanceStrategy::Auto
                if self.message_cost() <= MESSAGE_GUARD
                    && self.message_cost() < self.column_cost() =>
            {
                DistanceStrategy::Messages
            }
            DistanceStrategy::Auto => DistanceStrategy::Columns,
            s => s,
        };
        match strategy {
            DistanceStrategy::Messages => self.distance_by_messages(cancel),
            _ => self.distance_by_columns(cancel),
        }
    }

    /// Smallest `w` such that some `w` columns of `H` are dependent.
    pub fn distance_by_columns(&self, cancel: &CancelToken) -> Result<usize> {
        let n = self.n();
        if self.k() == 0 {
            return Err(Error::ZeroCode);
        }
        if n > DISTANCE_MAX_LENGTH {
            return Err(Error::GuardExceeded {
                what: "column-subset distance search",
                cost: self.column_cost(),
                limit: binomial(DISTANCE_MAX_LENGTH, DISTANCE_MAX_LENGTH / 2)
                    * DISTANCE_MAX_LENGTH as u128,
            });
        }
        let cols: Vec<Vec<Fe>> = (0..n).map(|j| self.parity.column(j)).collect();
        let dependent = |subset: &[usize]| {
            let rows: Vec<Vec<Fe>> = subset.iter().map(|&j| cols[j].clone()).collect();
            // rows of this matrix are the chosen columns of H
            Matrix::from_rows(self.parity.field(), rows, self.parity.rows())
                .unwrap()
                .rank()
                < subset.len()
        };
        // n - k + 1 columns of H are always dependent
        for w in 1..=n - self.k() + 1 {
            if cancel.is_cancelled() {
                return Err(Error::Cancelled);
            }
            let hit = (0..=n - w).into_par_iter().any(|first| {
                let mut prefix = vec![first];
                any_subset(&mut prefix, first + 1, n, w, &mut |s| {
                    cancel.is_cancelled() || dependent(s)
                })
            });
            if cancel.is_cancelled() {
                return Err(Error::Cancelled);
            }
            if hit {
                return Ok(w);
            }
        }
        unreachable!("Singleton bound guarantees a dependent set")
    }

    /// Minimum weight of `u G` over all nonzero messages `u`.
    pub fn distance_by_messages(&self, cancel: &CancelToken) -> Result<usize> {
        if self.k() == 0 {
            return Err(Error::ZeroCode);
        }
        let cost = self.message_cost();
        if cost > MESSAGE_GUARD {
            return Err(Error::GuardExceeded {
                what: "codeword enumeration",
                cost,
                limit: MESSAGE_GUARD,
            });
        }
        let size = self.gen.field().size() as u64;
        let k = self.k();
        let best = (1..cost as u64)
            .into_par_iter()
            .map(|mut idx| {
                if cancel.is_cancelled() {
                    return usize::MAX;
                }
                let msg: Vec<Fe> = (0..k)
                    .map(|_| {
                        let d = (idx % size) as u32;
                        idx /= size;
                        self.gen.field().elem(d).unwrap()
                    })
                    .collect();
                self.gen
                    .vec_mul(&msg)
                    .unwrap()
                    .iter()
                    .filter(|a| !a.is_zero())
                    .count()
            })
            .min()
            .unwrap();
        if cancel.is_cancelled() {
            return Err(Error::Cancelled);
        }
        Ok(best)
    }

    /// `d = n - k + 1`.
    pub fn is_mds(&self) -> Result<bool> {
        Ok(self.min_distance()? == self.n() - self.k() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{presets, Field};

    #[test]
    fn binomials() {
        assert_eq!(binomial(12, 6), 924);
        assert_eq!((1..=6).map(|w| binomial(12, w)).sum::<u128>(), 2509);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn subsets_in_order() {
        let mut seen = Vec::new();
        any_subset(&mut Vec::new(), 0, 4, 2, &mut |s| {
            seen.push(s.to_vec());
            false
        });
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn small_codes() {
        let f = Field::new(presets::f2());
        let one = Fe::ONE;
        let full = LinearCode::new(&Matrix::identity(&f, 4));
        assert_eq!(full.min_distance().unwrap(), 1);
        assert!(full.is_mds().unwrap());
        let rep = LinearCode::new(&Matrix::from_rows(&f, vec![vec![one; 5]], 5).unwrap());
        assert_eq!(rep.distance_by_columns(&CancelToken::new()).unwrap(), 5);
        assert_eq!(rep.distance_by_messages(&CancelToken::new()).unwrap(), 5);
        // [7,4,3] Hamming code
        let rows = ["1000110", "0100101", "0010011", "0001111"]
            .iter()
            .map(|s| {
                s.chars()
                    .map(|c| if c == '1' { one } else { Fe::ZERO })
                    .collect()
            })
            .collect();
        let ham = LinearCode::new(&Matrix::from_rows(&f, rows, 7).unwrap());
        assert_eq!(ham.k(), 4);
        assert_eq!(ham.distance_by_columns(&CancelToken::new()).unwrap(), 3);
        assert_eq!(ham.distance_by_messages(&CancelToken::new()).unwrap(), 3);
        assert!(!ham.is_mds().unwrap());
        let zero = LinearCode::new(&Matrix::zeros(&f, 1, 3));
        assert_eq!(zero.min_distance(), Err(Error::ZeroCode));
    }

    #[test]
    fn cancelled_search() {
        let f = Field::new(presets::f4());
        let code = LinearCode::new(&Matrix::identity(&f, 3));
        let token = CancelToken::new();
        token.cancel();
        assert_eq!(code.distance_by_columns(&token), Err(Error::Cancelled));
        assert_eq!(code.distance_by_messages(&token), Err(Error::Cancelled));
    }
}

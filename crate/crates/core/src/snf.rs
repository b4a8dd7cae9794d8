//! Smith normal form over the integers and finitely generated abelian groups.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Dense integer matrix with exact entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    /// Builds a matrix from rows; `cols` fixes the width when there are no rows.
    pub fn from_rows(rows: &[Vec<i64>], cols: usize) -> Self {
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            for (j, &v) in row.iter().enumerate() {
                m.data[i * cols + j] = BigInt::from(v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    fn at(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(src, j) * k;
            *self.at(dst, j) += v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, src) * k;
            *self.at(i, dst) += v;
        }
    }
}

/// Diagonal of the Smith normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero invariant factors `d_1 | d_2 | …`, all positive.
    pub factors: Vec<BigInt>,
    pub rows: usize,
    pub cols: usize,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// The cokernel `Z^cols / row space`.
    pub fn cokernel(&self) -> AbelianGroup {
        let torsion = self
            .factors
            .iter()
            .filter(|d| !d.is_one_abs())
            .map(|d| d.to_u64().expect("invariant factor exceeds u64"))
            .collect();
        AbelianGroup { free_rank: self.cols - self.rank(), torsion }
    }
}

trait IsOneAbs {
    fn is_one_abs(&self) -> bool;
}

impl IsOneAbs for BigInt {
    fn is_one_abs(&self) -> bool {
        self.abs() == BigInt::from(1)
    }
}

/// Position of the smallest nonzero |entry| in the block `[t.., t..]`.
fn smallest_entry(m: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..m.rows {
        for j in t..m.cols {
            let v = m.get(i, j);
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < m.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smith normal form by smallest-pivot elimination.
pub fn smith_normal_form(matrix: &IntMatrix) -> SmithForm {
    let mut m = matrix.clone();
    let mut factors = Vec::new();
    let mut t = 0;
    while t < m.rows.min(m.cols) {
        let Some((pi, pj)) = smallest_entry(&m, t) else { break };
        m.swap_rows(t, pi);
        m.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..m.rows {
                if !m.get(i, t).is_zero() {
                    let q = -m.get(i, t).div_floor(m.get(t, t));
                    m.add_row(i, t, &q);
                    dirty |= !m.get(i, t).is_zero();
                }
            }
            for j in t + 1..m.cols {
                if !m.get(t, j).is_zero() {
                    let q = -m.get(t, j).div_floor(m.get(t, t));
                    m.add_col(j, t, &q);
                    dirty |= !m.get(t, j).is_zero();
                }
            }
            if dirty {
                // a remainder is now smaller than the pivot; move it into place
                let (bi, bj) = smallest_in_cross(&m, t);
                m.swap_rows(t, bi);
                m.swap_cols(t, bj);
                continue;
            }
            let pivot = m.get(t, t).clone();
            let offender = (t + 1..m.rows)
                .find(|&i| (t + 1..m.cols).any(|j| !m.get(i, j).is_multiple_of(&pivot)));
            match offender {
                Some(i) => m.add_row(t, i, &BigInt::from(1)),
                None => break,
            }
        }
        factors.push(m.get(t, t).abs());
        t += 1;
    }
    SmithForm { factors, rows: m.rows, cols: m.cols }
}

/// Smallest nonzero entry in row `t` or column `t`.
fn smallest_in_cross(m: &IntMatrix, t: usize) -> (usize, usize) {
    let cells = (t..m.rows).map(|i| (i, t)).chain((t + 1..m.cols).map(|j| (t, j)));
    cells
        .filter(|&(i, j)| !m.get(i, j).is_zero())
        .min_by(|&(a, b), &(c, d)| m.get(a, b).abs().cmp(&m.get(c, d).abs()))
        .expect("cross has a nonzero entry")
}

/// `Z^free_rank ⊕ Z/d_1 ⊕ … ⊕ Z/d_k` with `d_1 | … | d_k`, each `d_i ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AbelianGroup {
    #[serde(rename = "rank")]
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup { free_rank: rank, torsion: Vec::new() }
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> u64 {
        self.torsion.iter().product()
    }

    pub fn is_divisibility_chain(&self) -> bool {
        self.torsion.iter().all(|&d| d >= 2) && self.torsion.windows(2).all(|w| w[1] % w[0] == 0)
    }

    /// |Hom(self, Z/n)|
    pub fn hom_count_to_cyclic(&self, n: u64) -> u64 {
        let free = n.pow(self.free_rank as u32);
        self.torsion.iter().fold(free, |acc, &d| acc * d.gcd(&n))
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn factors(rows: &[Vec<i64>], cols: usize) -> Vec<i64> {
        smith_normal_form(&IntMatrix::from_rows(rows, cols))
            .factors
            .iter()
            .map(|d| d.to_i64().unwrap())
            .collect()
    }

    /// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1},
    /// where D_k is the gcd of all k×k minors.
    fn oracle_factors(rows: &[Vec<i64>]) -> Vec<i64> {
        fn det(m: &[Vec<i64>]) -> i64 {
            match m.len() {
                0 => 1,
                1 => m[0][0],
                n => (0..n)
                    .map(|j| {
                        let minor: Vec<Vec<i64>> =
                            m[1..].iter().map(|r| [&r[..j], &r[j + 1..]].concat()).collect();
                        let sign = if j % 2 == 0 { 1 } else { -1 };
                        sign * m[0][j] * det(&minor)
                    })
                    .sum(),
            }
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            (0..n)
                .flat_map(|last| {
                    subsets(last, k - 1).into_iter().map(move |mut s| {
                        s.push(last);
                        s
                    })
                })
                .collect()
        }
        let (r, c) = (rows.len(), rows.first().map_or(0, Vec::len));
        let mut out = Vec::new();
        let mut prev = 1i64;
        for k in 1..=r.min(c) {
            let mut g = 0i64;
            for rs in subsets(r, k) {
                for cs in subsets(c, k) {
                    let minor: Vec<Vec<i64>> = rs.iter().map(|&i| cs.iter().map(|&j| rows[i][j]).collect()).collect();
                    g = g.gcd(&det(&minor));
                }
            }
            if g == 0 {
                break;
            }
            out.push(g / prev);
            prev = g;
        }
        out
    }

    #[test]
    fn documented_examples() {
        assert_eq!(factors(&[vec![2, 0], vec![0, 3]], 2), vec![1, 6]);
        assert_eq!(factors(&[vec![1, 0], vec![0, 1]], 2), vec![1, 1]);
        let snf = smith_normal_form(&IntMatrix::from_rows(&[vec![2, 4], vec![0, 0]], 2));
        assert_eq!(snf.factors, vec![BigInt::from(2)]);
        assert_eq!(snf.cokernel(), AbelianGroup { free_rank: 1, torsion: vec![2] });
    }

    #[test]
    fn oracle_agrees_on_examples() {
        assert_eq!(oracle_factors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(oracle_factors(&[vec![2, 4], vec![0, 0]]), vec![2]);
    }

    #[test]
    fn empty_matrices() {
        let snf = smith_normal_form(&IntMatrix::zeros(0, 3));
        assert_eq!(snf.cokernel(), AbelianGroup::free(3));
        let snf = smith_normal_form(&IntMatrix::zeros(2, 0));
        assert_eq!(snf.cokernel(), AbelianGroup::free(0));
    }

    #[test]
    fn display() {
        assert_eq!(AbelianGroup { free_rank: 2, torsion: vec![2] }.to_string(), "Z^2 + Z/2");
        assert_eq!(AbelianGroup::free(0).to_string(), "0");
    }

    #[test]
    fn hom_counts_to_cyclic() {
        let g = AbelianGroup { free_rank: 1, torsion: vec![2, 4] };
        // Hom(Z + Z/2 + Z/4, Z/4) = 4 * 2 * 4
        assert_eq!(g.hom_count_to_cyclic(4), 32);
    }

    proptest! {
        #[test]
        fn matches_determinantal_divisors(
            rows in 1usize..4, cols in 1usize..4,
            entries in prop::collection::vec(-9i64..=9, 9)
        ) {
            let m: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| entries[i * 3 + j]).collect()).collect();
            prop_assert_eq!(factors(&m, cols), oracle_factors(&m));
        }
    }
}

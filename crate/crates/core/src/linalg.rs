//! Exact integer linear algebra on small dense matrices: rank over the
//! rationals, kernel-lattice bases and Smith normal form. Everything here
//! works on `i128` entries; inputs in this crate are tiny (dimension at most
//! the embedding dimension of a semigroup) so no overflow control beyond the
//! wide type is needed.

#![allow(clippy::needless_range_loop)]

/// Rank over the rationals via fraction-free Gaussian elimination.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    if m.is_empty() {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..ncols {
        let pivot = (row..m.len()).find(|&i| m[i][col] != 0);
        let Some(p) = pivot else { continue };
        m.swap(row, p);
        let pv = m[row][col];
        for i in row + 1..m.len() {
            let f = m[i][col];
            if f == 0 {
                continue;
            }
            for j in col..ncols {
                m[i][j] = m[i][j] * pv - m[row][j] * f;
            }
            reduce_row(&mut m[i]);
        }
        row += 1;
        rank += 1;
        if row == m.len() {
            break;
        }
    }
    rank
}

fn reduce_row(row: &mut [i128]) {
    let mut g: i128 = 0;
    for &x in row.iter() {
        g = gcd_i128(g, x);
    }
    if g > 1 {
        for x in row.iter_mut() {
            *x /= g;
        }
    }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A basis of the lattice `{v in Z^r : v . a = 0}` for a primitive vector
/// `a` (gcd 1), returned as `r - 1` rows, together with the inverse of the
/// unimodular row-reduction matrix. Coordinates of any kernel vector with
/// respect to the basis are recovered by [`KernelBasis::coordinates`].
pub struct KernelBasis {
    pub basis: Vec<Vec<i64>>,
    rinv: Vec<Vec<i128>>, // inverse of the unimodular matrix R with R*a = e_1
}

/// Computes a basis of the saturated kernel lattice of `a` by reducing the
/// column `a` to `(1, 0, .., 0)` with unimodular row operations. Rows 2..r of
/// the accumulated matrix R span the kernel because the first coordinate of
/// `v * R^{-1}` equals `v . a`.
pub fn kernel_basis(a: &[i64]) -> KernelBasis {
    let r = a.len();
    let mut b: Vec<i128> = a.iter().map(|&x| x as i128).collect();
    let mut rm: Vec<Vec<i128>> = identity(r);
    let mut rinv: Vec<Vec<i128>> = identity(r);

    // Euclidean elimination: fold every entry into b[0].
    loop {
        let nz: Vec<usize> = (1..r).filter(|&i| b[i] != 0).collect();
        if nz.is_empty() {
            break;
        }
        for &i in &nz {
            if b[0] == 0 {
                swap_rows(&mut b, &mut rm, &mut rinv, 0, i);
            }
            let q = b[i].div_euclid(b[0]);
            if q != 0 {
                // row_i -= q * row_0, so column 0 of rinv gains q * column i.
                b[i] -= q * b[0];
                for j in 0..r {
                    let t = q * rm[0][j];
                    rm[i][j] -= t;
                }
                for row in rinv.iter_mut() {
                    let t = q * row[i];
                    row[0] += t;
                }
            }
            if b[i] != 0 {
                swap_rows(&mut b, &mut rm, &mut rinv, 0, i);
            }
        }
    }
    if b[0] < 0 {
        b[0] = -b[0];
        for j in 0..r {
            rm[0][j] = -rm[0][j];
        }
        for row in rinv.iter_mut() {
            row[0] = -row[0];
        }
    }
    debug_assert_eq!(b[0], 1, "kernel_basis requires gcd(a) = 1");

    let basis = rm[1..]
        .iter()
        .map(|row| row.iter().map(|&x| x as i64).collect())
        .collect();
    KernelBasis { basis, rinv }
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

fn swap_rows(b: &mut [i128], rm: &mut [Vec<i128>], rinv: &mut [Vec<i128>], i: usize, j: usize) {
    b.swap(i, j);
    rm.swap(i, j);
    for row in rinv.iter_mut() {
        row.swap(i, j);
    }
}

impl KernelBasis {
    /// Integer coordinates of `v` in the kernel basis, or `None` when `v` is
    /// not orthogonal to the defining vector.
    pub fn coordinates(&self, v: &[i64]) -> Option<Vec<i64>> {
        let r = self.rinv.len();
        let mut c = vec![0i128; r];
        for (j, cj) in c.iter_mut().enumerate() {
            for (vi, row) in v.iter().zip(&self.rinv) {
                *cj += (*vi as i128) * row[j];
            }
        }
        if c[0] != 0 {
            return None;
        }
        Some(c[1..].iter().map(|&x| x as i64).collect())
    }
}

/// Diagonal of the Smith normal form (nonzero entries only, each dividing
/// the next). Destroys nothing; operates on a copy.
pub fn smith_diagonal(rows: &[Vec<i64>]) -> Vec<i64> {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let nr = m.len();
    if nr == 0 {
        return vec![];
    }
    let nc = m[0].len();
    let mut diag = Vec::new();
    let mut k = 0;
    while k < nr.min(nc) {
        // locate a nonzero entry of minimal absolute value in the trailing block
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..nr {
            for j in k..nc {
                if m[i][j] != 0
                    && pivot.is_none_or(|(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(k, pi);
        for row in m.iter_mut() {
            row.swap(k, pj);
        }
        // clear row and column k; restart if a remainder shrinks the pivot
        let mut clean = true;
        for i in k + 1..nr {
            let q = m[i][k].div_euclid(m[k][k]);
            if q != 0 {
                for j in k..nc {
                    let t = q * m[k][j];
                    m[i][j] -= t;
                }
            }
            if m[i][k] != 0 {
                clean = false;
            }
        }
        for j in k + 1..nc {
            let q = m[k][j].div_euclid(m[k][k]);
            if q != 0 {
                for row in m.iter_mut().skip(k) {
                    let t = q * row[k];
                    row[j] -= t;
                }
            }
            if m[k][j] != 0 {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // divisibility sweep: fold any non-multiple into column k
        let d = m[k][k].abs();
        let offender = (k + 1..nr)
            .flat_map(|i| (k + 1..nc).map(move |j| (i, j)))
            .find(|&(i, j)| m[i][j] % d != 0);
        if let Some((i, _)) = offender {
            for j in k..nc {
                let t = m[i][j];
                m[k][j] += t;
            }
            continue;
        }
        diag.push(d as i64);
        k += 1;
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![vec![1, -2, 1], vec![2, -4, 2], vec![4, 0, -3]];
        assert_eq!(rank(&rows), 2);
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![0, 0, 0]]), 0);
    }

    #[test]
    fn kernel_basis_spans_orthogonal_lattice() {
        for a in [vec![2i64, 3], vec![6, 7, 8], vec![6, 9, 10, 13, 14]] {
            let kb = kernel_basis(&a);
            assert_eq!(kb.basis.len(), a.len() - 1);
            for row in &kb.basis {
                let dot: i64 = row.iter().zip(&a).map(|(x, y)| x * y).sum();
                assert_eq!(dot, 0);
            }
            assert_eq!(rank(&kb.basis), a.len() - 1);
            // coordinates round-trip on each basis vector
            for (i, row) in kb.basis.iter().enumerate() {
                let c = kb.coordinates(row).unwrap();
                let expected: Vec<i64> =
                    (0..kb.basis.len()).map(|j| i64::from(i == j)).collect();
                assert_eq!(c, expected);
            }
            assert!(kb.coordinates(&a).is_none());
        }
    }

    #[test]
    fn smith_diagonal_detects_index() {
        // (3,-2) spans the kernel of (2,3); (6,-4) spans an index-2 sublattice
        let kb = kernel_basis(&[2, 3]);
        let c1 = kb.coordinates(&[3, -2]).unwrap();
        assert_eq!(smith_diagonal(&[c1]), vec![1]);
        let c2 = kb.coordinates(&[6, -4]).unwrap();
        assert_eq!(smith_diagonal(&[c2]), vec![2]);
    }

    #[test]
    fn smith_diagonal_known_matrix() {
        let m = vec![
            vec![-6, 111, -36, 6],
            vec![5, -672, 210, 74],
            vec![0, -255, 81, 24],
            vec![-7, 255, -81, -10],
        ];
        assert_eq!(smith_diagonal(&m), vec![1, 3, 21]);
    }
}

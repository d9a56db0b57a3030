//! Exact inverse rows of the Vandermonde system by fraction-free elimination.

use rug::{Integer, Rational};

use crate::mpnum::ExactRational;
use crate::{Error, Result};

/// The `(n+1) × (n+1)` system `M_{ij} = (1/(i+1))^j`, `0 ≤ i, j ≤ n`.
#[derive(Clone, Copy, Debug)]
pub struct VandermondeSystem {
    order: usize,
}

impl VandermondeSystem {
    pub fn new(order: usize) -> Self {
        VandermondeSystem { order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dimension(&self) -> usize {
        self.order + 1
    }

    /// `M_{ij} = (1/(i+1))^j`.
    pub fn entry(&self, i: usize, j: usize) -> ExactRational {
        let den = Integer::from(Integer::u_pow_u(i as u32 + 1, j as u32));
        ExactRational::from_parts(Integer::from(1), den)
    }

    /// Rows `j` of `M^{-1}`, in the order requested.
    ///
    /// Row `j` satisfies `Σ_i w_{j,i} M_{ij'} = δ_{jj'}`, i.e. `Mᵀ w = e_j`.
    /// Scaling column `i` of `Mᵀ` by `(i+1)^n` gives the integer matrix
    /// `T_{j'i} = (i+1)^{n-j'}`; Bareiss elimination on `T` keeps every
    /// intermediate an integer, and `w_i = (i+1)^n u_i` undoes the scaling.
    pub fn inverse_rows(&self, rows: &[usize]) -> Vec<Vec<ExactRational>> {
        let n = self.order;
        let dim = n + 1;
        let k = rows.len();
        let width = dim + k;
        let mut a: Vec<Vec<Integer>> = (0..dim)
            .map(|r| {
                let mut line: Vec<Integer> =
                    (0..dim).map(|c| Integer::from(Integer::u_pow_u(c as u32 + 1, (n - r) as u32))).collect();
                line.extend(rows.iter().map(|&j| Integer::from(u32::from(j == r))));
                line
            })
            .collect();

        let mut prev = Integer::from(1);
        for p in 0..dim {
            let pivot = (p..dim)
                .filter(|&r| a[r][p] != 0)
                .max_by(|&x, &y| a[x][p].cmp_abs(&a[y][p]))
                .expect("Vandermonde matrix with distinct nodes is nonsingular");
            a.swap(p, pivot);
            for r in p + 1..dim {
                for c in p + 1..width {
                    let v = Integer::from(&a[p][p] * &a[r][c]) - Integer::from(&a[r][p] * &a[p][c]);
                    a[r][c] = v.div_exact(&prev);
                }
                a[r][p] = Integer::new();
            }
            prev = a[p][p].clone();
        }

        (0..k)
            .map(|q| {
                let mut u = vec![Rational::new(); dim];
                for c in (0..dim).rev() {
                    let mut acc = Rational::from(&a[c][dim + q]);
                    for (cc, uc) in u.iter().enumerate().skip(c + 1) {
                        acc -= Rational::from(&a[c][cc] * uc);
                    }
                    u[c] = acc / &a[c][c];
                }
                u.into_iter()
                    .enumerate()
                    .map(|(i, ui)| {
                        let scale = Integer::from(Integer::u_pow_u(i as u32 + 1, n as u32));
                        ExactRational::from_rug(ui * scale)
                    })
                    .collect()
            })
            .collect()
    }
}

/// Row `j` of the inverse Vandermonde matrix at order `n`.
pub fn oracle_weights(n: usize, j: usize) -> Result<Vec<ExactRational>> {
    if j > n {
        return Err(Error::RowUndefined { n, j });
    }
    Ok(VandermondeSystem::new(n).inverse_rows(&[j]).pop().expect("one row requested"))
}

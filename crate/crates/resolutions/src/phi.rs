//! The functor Φ from right kH-modules to kH-bimodules: Φ(X) = X ⊗ kH with
//! g acting on the left through the right tensor factor alone and on the
//! right diagonally. Φ is exact, sends the trivial module to the regular
//! bimodule, and sends free modules to free bimodules.

use std::sync::Arc;

use algebra::Algebra;
use bimod::Bimodule;
use exactcore::FMatrix;
use modrep::{group_like_table, RightModule};

use crate::error::ResolutionError;

/// Φ(X) for a right module X over a group algebra kH: carrier X ⊗ kH with
/// basis (x_i, h) at index i·|H| + h, left action g·(x_i ⊗ h) = x_i ⊗ gh,
/// right action (x_i ⊗ h)·g = x_i·g ⊗ hg.
pub fn phi_functor(x: &RightModule) -> Result<Bimodule, ResolutionError> {
    let a: &Arc<Algebra> = &x.algebra;
    let (table, _inv, _e) = group_like_table(a).ok_or(ResolutionError::NotGroupAlgebra)?;
    let n = a.dim;
    let m = x.dim;
    let dim = m * n;
    let f = &a.field;
    let mut left = Vec::with_capacity(n);
    let mut right = Vec::with_capacity(n);
    for g in 0..n {
        let mut lg = FMatrix::zeros(f, dim, dim);
        for i in 0..m {
            for h in 0..n {
                lg.set(i * n + h, i * n + table[g][h], 1);
            }
        }
        left.push(lg);
        let mut rg = FMatrix::zeros(f, dim, dim);
        for i in 0..m {
            let moved = x.action[g].get_row(i);
            for h in 0..n {
                let dst_h = table[h][g];
                for (j, &c) in moved.iter().enumerate() {
                    if c != 0 {
                        rg.set(i * n + h, j * n + dst_h, c);
                    }
                }
            }
        }
        right.push(rg);
    }
    Ok(Bimodule { algebra: Arc::clone(a), dim, left, right })
}

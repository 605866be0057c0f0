//! Built-in families of periodic free bimodule resolutions: truncated
//! polynomial algebras (period 2 and, in characteristic 2, period 1) and
//! cyclic group algebras in defining characteristic, where the resolution is
//! transported from the trivial-module resolution slot by slot.

use std::sync::Arc;

use algebra::{radical, Algebra};
use bimod::FreeBimoduleMap;
use exactcore::{FMatrix, Scalar};
use modrep::group_like_table;

use crate::error::ResolutionError;
use crate::resolution::PeriodicResolution;

/// Find a radical element whose powers 1, x, …, x^{n-1} form a basis, i.e.
/// a presentation of `b` as k[x]/(x^n). Tries the radical basis rows and
/// their pairwise sums; returns the element and its power basis.
fn nilpotent_generator(b: &Arc<Algebra>) -> Option<FMatrix> {
    let n = b.dim;
    let rad = radical(b);
    if rad.rows() + 1 != n {
        return None;
    }
    let mut candidates: Vec<FMatrix> = (0..rad.rows()).map(|r| rad.select_rows(&[r])).collect();
    for i in 0..rad.rows() {
        for j in 0..i {
            candidates.push(rad.select_rows(&[i]).add(&rad.select_rows(&[j])));
        }
    }
    'cand: for x in candidates {
        let mut span = FMatrix::zeros(&b.field, 0, n);
        span.push_row(&b.unit, 0);
        let mut pw = b.one();
        for _ in 1..n {
            pw = b.mul(&pw, &x);
            span.push_row(&pw, 0);
        }
        if b.mul(&pw, &x) != b.zero() {
            continue 'cand;
        }
        if span.rank() == n {
            return Some(x);
        }
    }
    None
}

/// The period-2 resolution of a truncated polynomial algebra k[x]/(x^n),
/// n ≥ 2, over any finite field:
///
/// ```text
///   0 → B → B⊗B → B⊗B → B → 0,
/// ```
///
/// with multiplication on the right, middle map 1⊗1 ↦ 1⊗x − x⊗1, and unit
/// embedding 1 ↦ Σ_{i+j=n-1} x^i ⊗ x^j.
pub fn truncated_poly_resolution(
    b: &Arc<Algebra>,
) -> Result<PeriodicResolution, ResolutionError> {
    if b.dim < 2 || !b.is_commutative() {
        return Err(ResolutionError::NotTruncatedPoly);
    }
    let x = nilpotent_generator(b).ok_or(ResolutionError::NotTruncatedPoly)?;
    let n = b.dim;
    let one = b.one();
    let delta1 = one.kron(&x).sub(&x.kron(&one));
    let mut tail = FMatrix::zeros(&b.field, 1, n * n);
    let mut xi = b.one();
    for i in 0..n {
        // x^i ⊗ x^{n-1-i}
        let xj = b.pow(&x, (n - 1 - i) as u64);
        tail = tail.add(&xi.kron(&xj));
        xi = b.mul(&xi, &x);
    }
    Ok(PeriodicResolution {
        algebra: Arc::clone(b),
        period: 2,
        multiplicities: vec![1, 1],
        head: vec![one],
        middles: vec![FreeBimoduleMap { images: vec![vec![delta1]] }],
        tail: vec![tail],
    })
}

/// The period-1 resolution 0 → B → B⊗B → B → 0 of k[x]/(x²) over a field of
/// characteristic 2, with unit embedding 1 ↦ 1⊗x + x⊗1. Over any other
/// characteristic the composite multiplication ∘ embedding is 2x ≠ 0, so the
/// construction is refused.
pub fn char_p_period1_resolution(
    b: &Arc<Algebra>,
) -> Result<PeriodicResolution, ResolutionError> {
    if b.dim != 2 || !b.is_commutative() {
        return Err(ResolutionError::NotTruncatedPoly);
    }
    let x = nilpotent_generator(b).ok_or(ResolutionError::NotTruncatedPoly)?;
    if b.field.p() != 2 {
        return Err(ResolutionError::WrongCharacteristic);
    }
    let one = b.one();
    let tail = one.kron(&x).add(&x.kron(&one));
    Ok(PeriodicResolution {
        algebra: Arc::clone(b),
        period: 1,
        multiplicities: vec![1],
        head: vec![one],
        middles: Vec::new(),
        tail: vec![tail],
    })
}

/// Periodic free bimodule resolutions of a cyclic group algebra in defining
/// characteristic: the period-2 resolution always exists; for the group of
/// order 2 in characteristic 2 a period-1 resolution exists as well.
#[derive(Clone, Debug)]
pub struct GroupResolutions {
    pub period_two: PeriodicResolution,
    pub period_one: Option<PeriodicResolution>,
}

/// Transport the standard trivial-module resolution of a cyclic p-group to
/// bimodules: for kH with H = ⟨g⟩ of order n divisible by the characteristic,
///
/// ```text
///   0 → kH → kH⊗kH → kH⊗kH → kH → 0
/// ```
///
/// with middle map 1⊗1 ↦ g⁻¹⊗g − 1⊗1 (the image of multiplication by g−1)
/// and unit embedding 1 ↦ Σ_{h∈H} h⁻¹⊗h (the image of the norm element).
pub fn group_trivial_resolution(
    b: &Arc<Algebra>,
) -> Result<GroupResolutions, ResolutionError> {
    let (table, inverses, unit_idx) =
        group_like_table(b).ok_or(ResolutionError::NotGroupAlgebra)?;
    let n = b.dim;
    // find a generator: an element whose powers exhaust the basis
    let mut generator = None;
    for g in 0..n {
        let mut seen = vec![false; n];
        let mut cur = unit_idx;
        let mut count = 0;
        loop {
            if seen[cur] {
                break;
            }
            seen[cur] = true;
            count += 1;
            cur = table[cur][g];
        }
        if count == n {
            generator = Some(g);
            break;
        }
    }
    let g = generator.ok_or(ResolutionError::NotCyclic)?;
    let p = b.field.p() as usize;
    if n % p != 0 {
        return Err(ResolutionError::CharacteristicMismatch);
    }

    let one = b.one();
    let delta1 = b
        .basis_el(inverses[g])
        .kron(&b.basis_el(g))
        .sub(&one.kron(&one));
    let mut norm = FMatrix::zeros(&b.field, 1, n * n);
    for h in 0..n {
        norm = norm.add(&b.basis_el(inverses[h]).kron(&b.basis_el(h)));
    }
    let period_two = PeriodicResolution {
        algebra: Arc::clone(b),
        period: 2,
        multiplicities: vec![1, 1],
        head: vec![one.clone()],
        middles: vec![FreeBimoduleMap { images: vec![vec![delta1]] }],
        tail: vec![norm.clone()],
    };
    let period_one = if n == 2 && p == 2 {
        Some(PeriodicResolution {
            algebra: Arc::clone(b),
            period: 1,
            multiplicities: vec![1],
            head: vec![one],
            middles: Vec::new(),
            tail: vec![norm],
        })
    } else {
        None
    };
    Ok(GroupResolutions { period_two, period_one })
}

/// Decode a tail (or any 1 × n² pair-coordinate row) into its nonzero terms
/// (coefficient, left basis index, right basis index).
pub fn pair_terms(row: &FMatrix, n: usize) -> Vec<(Scalar, usize, usize)> {
    let mut out = Vec::new();
    for (idx, &c) in row.get_row(0).iter().enumerate() {
        if c != 0 {
            out.push((c, idx / n, idx % n));
        }
    }
    out
}

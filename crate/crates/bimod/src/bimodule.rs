//! Bimodules over one algebra. Conceptually these are right modules over
//! the product algebra A^op ⊗ A (basis pair (i, j) acts by m ↦ b_i·m·b_j);
//! the action is stored factored as the two one-sided families, which keeps
//! derived bimodules (kernels, covers, sums) at dim·dim matrices instead of
//! dim²-long action tables. `to_env_module` materialises the product-algebra
//! view for small dimensions.

use std::sync::Arc;

use algebra::{Algebra, enveloping};
use exactcore::{Echelonizer, FMatrix, Quotient, Scalar};
use modrep::{is_projective, ModuleContext, RightModule};

/// Shared data for bimodule work over one algebra: the algebra and its
/// one-sided module context (simples, projectives, opposite side).
pub struct BimodContext {
    pub algebra: Arc<Algebra>,
    pub module_ctx: ModuleContext,
}

impl BimodContext {
    pub fn new(algebra: &Arc<Algebra>) -> BimodContext {
        BimodContext { algebra: algebra.clone(), module_ctx: ModuleContext::new(algebra) }
    }
}

/// An A-A bimodule on a chosen basis: `left[g]` is the matrix of m ↦ b_g·m
/// and `right[g]` of m ↦ m·b_g, each acting on coordinate rows. The product
/// basis element (i, j) acts as left[i]·right[j].
#[derive(Clone)]
pub struct Bimodule {
    pub algebra: Arc<Algebra>,
    pub dim: usize,
    pub left: Vec<FMatrix>,
    pub right: Vec<FMatrix>,
}

impl std::fmt::Debug for Bimodule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Bimodule(dim {})", self.dim)
    }
}

impl Bimodule {
    /// A itself, with multiplication on both sides.
    pub fn regular(a: &Arc<Algebra>) -> Bimodule {
        let left: Vec<FMatrix> = (0..a.dim).map(|g| a.left_mult_matrix(&a.basis_el(g))).collect();
        let right: Vec<FMatrix> = (0..a.dim).map(|g| a.structure[g].clone()).collect();
        Bimodule { algebra: a.clone(), dim: a.dim, left, right }
    }

    /// Matrix of m ↦ x·m for an algebra element x.
    pub fn left_action_of(&self, x: &FMatrix) -> FMatrix {
        combine(&self.algebra, &self.left, x, self.dim)
    }

    /// Matrix of m ↦ m·y for an algebra element y.
    pub fn right_action_of(&self, y: &FMatrix) -> FMatrix {
        combine(&self.algebra, &self.right, y, self.dim)
    }

    /// Rows v·(x ⊗ y-action) = x·v·y for a batch of carrier rows.
    pub fn act_pair(&self, rows: &FMatrix, x: &FMatrix, y: &FMatrix) -> FMatrix {
        rows.mul(&self.left_action_of(x)).mul(&self.right_action_of(y))
    }

    /// The underlying right A-module (forget the left action).
    pub fn to_right_module(&self) -> RightModule {
        RightModule { algebra: self.algebra.clone(), dim: self.dim, action: self.right.clone() }
    }

    /// The underlying left A-module, as a right module over A^op.
    pub fn to_left_module(&self, op: &Arc<Algebra>) -> RightModule {
        RightModule { algebra: op.clone(), dim: self.dim, action: self.left.clone() }
    }

    /// The right module over the product algebra A^op ⊗ A, with the full
    /// action table verified. Quadratic in dim(A) matrices — small inputs.
    pub fn to_env_module(&self) -> RightModule {
        let env = Arc::new(enveloping(&self.algebra));
        let n = self.algebra.dim;
        let mut action = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                action.push(self.left[i].mul(&self.right[j]));
            }
        }
        RightModule::from_action(&env, action)
    }

    /// Check the bimodule axioms on the algebra's generating set: the unit
    /// acts as the identity on both sides, the two sides commute, the right
    /// action is multiplicative, and the left action is anti-multiplicative
    /// (it is a right action of A^op).
    pub fn verify(&self) {
        let a = &self.algebra;
        let id = FMatrix::identity(&a.field, self.dim);
        assert_eq!(self.left_action_of(&a.unit), id, "unit must act as identity on the left");
        assert_eq!(self.right_action_of(&a.unit), id, "unit must act as identity on the right");
        for &g in a.generators() {
            for &h in a.generators() {
                assert_eq!(
                    self.left[g].mul(&self.right[h]),
                    self.right[h].mul(&self.left[g]),
                    "left and right actions must commute"
                );
                let mut gh = FMatrix::zeros(&a.field, 0, a.dim);
                gh.push_row(&a.structure[h], g);
                assert_eq!(
                    self.right[g].mul(&self.right[h]),
                    self.right_action_of(&gh),
                    "right action must be multiplicative"
                );
                assert_eq!(
                    self.left[g].mul(&self.left[h]),
                    self.left_action_of(&{
                        let mut hg = FMatrix::zeros(&a.field, 0, a.dim);
                        hg.push_row(&a.structure[g], h);
                        hg
                    }),
                    "left action must reverse products"
                );
            }
        }
    }
}

fn combine(a: &Algebra, family: &[FMatrix], x: &FMatrix, dim: usize) -> FMatrix {
    let mut acc = FMatrix::zeros(&a.field, dim, dim);
    for g in 0..a.dim {
        let c = x.get(0, g);
        if c != 0 {
            acc = acc.add(&family[g].scale(c));
        }
    }
    acc
}

/// A homomorphism of bimodules, as a matrix on carrier rows.
#[derive(Clone, Debug)]
pub struct BimoduleHom {
    pub mat: FMatrix,
}

impl BimoduleHom {
    /// Check equivariance for both actions on the algebra's generators.
    pub fn is_bimodule_map(&self, m: &Bimodule, n: &Bimodule) -> bool {
        for &g in m.algebra.generators() {
            if m.left[g].mul(&self.mat) != self.mat.mul(&n.left[g]) {
                return false;
            }
            if m.right[g].mul(&self.mat) != self.mat.mul(&n.right[g]) {
                return false;
            }
        }
        true
    }
}

/// A finite chain of bimodules over one algebra with structure maps
/// `maps[p]: terms[p+1] -> terms[p]`. The defining invariant is that every
/// composite of two consecutive maps vanishes.
#[derive(Clone, Debug)]
pub struct BimoduleComplex {
    pub terms: Vec<Bimodule>,
    pub maps: Vec<BimoduleHom>,
}

impl BimoduleComplex {
    /// Check shapes, equivariance of every structure map, and that all
    /// consecutive composites are zero.
    pub fn verify(&self) -> bool {
        if self.maps.len() + 1 != self.terms.len() {
            return false;
        }
        for (p, h) in self.maps.iter().enumerate() {
            if h.mat.rows() != self.terms[p + 1].dim || h.mat.cols() != self.terms[p].dim {
                return false;
            }
            if !h.is_bimodule_map(&self.terms[p + 1], &self.terms[p]) {
                return false;
            }
        }
        for p in 0..self.maps.len().saturating_sub(1) {
            if !self.maps[p + 1].mat.mul(&self.maps[p].mat).is_zero() {
                return false;
            }
        }
        true
    }
}

/// Both one-sided restrictions are projective.
pub fn left_right_projective(b: &Bimodule, ctx: &BimodContext) -> bool {
    if !is_projective(&b.to_right_module(), &ctx.module_ctx.simples) {
        return false;
    }
    is_projective(&b.to_left_module(&ctx.module_ctx.op), &ctx.module_ctx.op_simples)
}

/// The sub-bimodule spanned by the given rows: closes the span under both
/// one-sided actions of the algebra's generators, then presents it on its
/// own (echelon) basis with both factored actions. Returns the bimodule and
/// its inclusion rows.
pub fn sub_bimodule_spanned(b: &Bimodule, rows: &FMatrix) -> (Bimodule, FMatrix) {
    let a = &b.algebra;
    let f = &a.field;
    let mut ech = Echelonizer::new(f, b.dim);
    let mut worklist: Vec<usize> = Vec::new();
    let mut basis = FMatrix::zeros(f, 0, b.dim);
    for r in 0..rows.rows() {
        if ech.insert(rows, r).is_some() {
            basis.push_row(rows, r);
            worklist.push(basis.rows() - 1);
        }
    }
    while let Some(i) = worklist.pop() {
        let v = basis.select_rows(&[i]);
        for &g in a.generators() {
            for img in [v.mul(&b.left[g]), v.mul(&b.right[g])] {
                if ech.insert(&img, 0).is_some() {
                    basis.push_row(&img, 0);
                    worklist.push(basis.rows() - 1);
                }
            }
        }
    }
    let (basis, _) = basis.rref();
    let d = basis.rows();
    let express = |imgs: &FMatrix| -> FMatrix {
        coords_in_rref(&basis, imgs)
    };
    let left: Vec<FMatrix> = (0..a.dim).map(|g| express(&basis.mul(&b.left[g]))).collect();
    let right: Vec<FMatrix> = (0..a.dim).map(|g| express(&basis.mul(&b.right[g]))).collect();
    (
        Bimodule { algebra: a.clone(), dim: d, left, right },
        basis,
    )
}

/// Coordinates of each row of `imgs` in the RREF row basis `basis`;
/// panics if a row falls outside the span.
pub(crate) fn coords_in_rref(basis: &FMatrix, imgs: &FMatrix) -> FMatrix {
    let f = imgs.field();
    let mut pivots = Vec::with_capacity(basis.rows());
    for r in 0..basis.rows() {
        pivots.push(basis.leading(r, 0).expect("basis rows are nonzero").0);
    }
    let mut out = FMatrix::zeros(f, 0, basis.rows());
    let mut residual = FMatrix::zeros(f, 0, imgs.cols());
    for r in 0..imgs.rows() {
        residual.push_row(imgs, r);
        let last = residual.rows() - 1;
        let mut coords = vec![0 as Scalar; basis.rows()];
        for (i, &pc) in pivots.iter().enumerate() {
            let c = residual.get(last, pc);
            if c != 0 {
                coords[i] = c;
                residual.raxpy_from(last, basis, i, f.neg(c));
            }
        }
        for c in 0..imgs.cols() {
            assert_eq!(residual.get(last, c), 0, "row must lie in the span");
        }
        out.push_row_slice(&coords);
    }
    out
}

/// The kernel of a bimodule homomorphism, on its own basis, with inclusion
/// rows into the source.
pub fn bimodule_kernel(b: &Bimodule, map: &BimoduleHom) -> (Bimodule, FMatrix) {
    let ker_rows = map.mat.transpose().kernel_basis();
    sub_bimodule_spanned(b, &ker_rows)
}

/// Quotient of a bimodule by a sub-bimodule spanned by the given rows.
/// Returns the quotient and the tracing data (projection and lift).
pub fn quotient_bimodule(b: &Bimodule, sub_rows: &FMatrix) -> (Bimodule, Quotient) {
    let a = &b.algebra;
    let f = &a.field;
    let mut ech = Echelonizer::new(f, b.dim);
    for r in 0..sub_rows.rows() {
        ech.insert(sub_rows, r);
    }
    let quo = Quotient::new(ech);
    let d = quo.dim();
    let classes: Vec<Vec<Scalar>> = (0..d)
        .map(|i| {
            let mut c = vec![0 as Scalar; d];
            c[i] = 1;
            quo.lift(&c)
        })
        .collect();
    let build = |family: &[FMatrix]| -> Vec<FMatrix> {
        (0..a.dim)
            .map(|g| {
                let mut m = FMatrix::zeros(f, 0, d);
                for cl in &classes {
                    let row = FMatrix::row_matrix(f, cl).mul(&family[g]);
                    m.push_row_slice(&quo.project(&row.get_row(0)));
                }
                m
            })
            .collect()
    };
    let left = build(&b.left);
    let right = build(&b.right);
    (Bimodule { algebra: a.clone(), dim: d, left, right }, quo)
}

/// Direct sum with block-diagonal actions; returns injection row blocks.
pub fn bimodule_direct_sum(parts: &[&Bimodule]) -> (Bimodule, Vec<FMatrix>) {
    assert!(!parts.is_empty());
    let a = &parts[0].algebra;
    let f = &a.field;
    let total: usize = parts.iter().map(|p| p.dim).sum();
    let block = |family: fn(&Bimodule) -> &Vec<FMatrix>| -> Vec<FMatrix> {
        (0..a.dim)
            .map(|g| {
                let mut m = FMatrix::zeros(f, total, total);
                let mut off = 0;
                for p in parts {
                    m.paste(off, off, &family(p)[g]);
                    off += p.dim;
                }
                m
            })
            .collect()
    };
    let left = block(|p| &p.left);
    let right = block(|p| &p.right);
    let mut injections = Vec::with_capacity(parts.len());
    let mut off = 0;
    for p in parts {
        let mut inj = FMatrix::zeros(f, p.dim, total);
        inj.paste(0, off, &FMatrix::identity(f, p.dim));
        injections.push(inj);
        off += p.dim;
    }
    (Bimodule { algebra: a.clone(), dim: total, left, right }, injections)
}

/// Rows spanning M·rad(A^e) = rad(A)·M·A + A·M·rad(A), the radical of the
/// bimodule as a product-algebra module.
pub fn bimodule_radical_rows(b: &Bimodule) -> FMatrix {
    let a = &b.algebra;
    let f = &a.field;
    let rad = algebra::radical(a);
    let mut ech = Echelonizer::new(f, b.dim);
    let mut basis = FMatrix::zeros(f, 0, b.dim);
    let mut worklist: Vec<(usize, bool)> = Vec::new(); // (row, close_on_right)
    for r in 0..rad.rows() {
        let mut rho = FMatrix::zeros(f, 0, a.dim);
        rho.push_row(&rad, r);
        let lm = b.left_action_of(&rho);
        for i in 0..b.dim {
            if ech.insert(&lm, i).is_some() {
                basis.push_row(&lm, i);
                worklist.push((basis.rows() - 1, true));
            }
        }
        let rm = b.right_action_of(&rho);
        for i in 0..b.dim {
            if ech.insert(&rm, i).is_some() {
                basis.push_row(&rm, i);
                worklist.push((basis.rows() - 1, false));
            }
        }
    }
    // rad(A)·M is already closed on the left (rad is an ideal), so each
    // seed only needs closure on its open side; crossings reduce to the
    // other summand
    while let Some((i, on_right)) = worklist.pop() {
        let v = basis.select_rows(&[i]);
        for &g in a.generators() {
            let img = if on_right { v.mul(&b.right[g]) } else { v.mul(&b.left[g]) };
            if ech.insert(&img, 0).is_some() {
                basis.push_row(&img, 0);
                worklist.push((basis.rows() - 1, on_right));
            }
        }
    }
    ech.basis()
}

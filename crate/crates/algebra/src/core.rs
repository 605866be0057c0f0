//! The central associative-algebra type: a basis, structure constants in
//! the form of right-multiplication matrices, a distinguished unit, and
//! printable basis labels.
//!
//! Elements are 1 x dim row vectors (`FMatrix` rows) in the chosen basis.
//! Everything downstream — modules, bimodules, resolutions — works through
//! this one representation, so the multiplication routine and the cached
//! generating set live here.

use std::fmt;
use std::sync::OnceLock;

use exactcore::{Echelonizer, FMatrix, Field, Scalar};

/// A finite-dimensional associative unital algebra over an exact field.
pub struct Algebra {
    pub field: Field,
    pub dim: usize,
    /// structure[j] is the matrix of right multiplication by basis element
    /// j: for a row vector x, x·b_j = x * structure[j].
    pub structure: Vec<FMatrix>,
    /// Coordinates of the identity element, as a 1 x dim row.
    pub unit: FMatrix,
    /// Printable names for the basis elements.
    pub labels: Vec<String>,
    gens: OnceLock<Vec<usize>>,
    radical_rows: OnceLock<FMatrix>,
}

impl Clone for Algebra {
    fn clone(&self) -> Self {
        Algebra {
            field: self.field.clone(),
            dim: self.dim,
            structure: self.structure.clone(),
            unit: self.unit.clone(),
            labels: self.labels.clone(),
            gens: self.gens.clone(),
            radical_rows: self.radical_rows.clone(),
        }
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {}, over {:?})", self.dim, self.field)
    }
}

impl Algebra {
    /// Assemble an algebra from a product-of-basis-elements callback.
    /// `products(i, j)` must return the coordinate row of b_i · b_j.
    /// Unit laws are always checked; associativity is checked for small
    /// dimensions (it is O(dim^3) products).
    pub fn from_mult_table(
        field: &Field,
        labels: Vec<String>,
        unit: &[Scalar],
        products: impl Fn(usize, usize) -> Vec<Scalar>,
    ) -> Algebra {
        let dim = labels.len();
        assert_eq!(unit.len(), dim);
        let mut structure = Vec::with_capacity(dim);
        for j in 0..dim {
            let mut rj = FMatrix::zeros(field, 0, dim);
            for i in 0..dim {
                let row = products(i, j);
                assert_eq!(row.len(), dim);
                rj.push_row_slice(&row);
            }
            structure.push(rj);
        }
        let a = Algebra {
            field: field.clone(),
            dim,
            structure,
            unit: FMatrix::row_matrix(field, unit),
            labels,
            gens: OnceLock::new(),
            radical_rows: OnceLock::new(),
        };
        a.check_unit_laws();
        if dim <= 64 {
            a.check_associativity();
        }
        a
    }

    fn check_unit_laws(&self) {
        for i in 0..self.dim {
            let b = self.basis_el(i);
            assert_eq!(self.mul(&self.unit, &b), b, "unit is not a left identity");
            assert_eq!(self.mul(&b, &self.unit), b, "unit is not a right identity");
        }
    }

    fn check_associativity(&self) {
        for i in 0..self.dim {
            for j in 0..self.dim {
                // b_i·b_j is row i of structure[j]; reuse it directly
                let mut ij = FMatrix::zeros(&self.field, 0, self.dim);
                ij.push_row(&self.structure[j], i);
                for k in 0..self.dim {
                    let left = ij.mul(&self.structure[k]);
                    let mut jk = FMatrix::zeros(&self.field, 0, self.dim);
                    jk.push_row(&self.structure[k], j);
                    let right = self.mul(&self.basis_el(i), &jk);
                    assert_eq!(left, right, "structure constants are not associative");
                }
            }
        }
    }

    pub fn zero(&self) -> FMatrix {
        FMatrix::zeros(&self.field, 1, self.dim)
    }

    pub fn one(&self) -> FMatrix {
        self.unit.clone()
    }

    pub fn basis_el(&self, i: usize) -> FMatrix {
        let mut v = self.zero();
        v.set(0, i, 1);
        v
    }

    pub fn mul(&self, x: &FMatrix, y: &FMatrix) -> FMatrix {
        debug_assert_eq!(x.cols(), self.dim);
        debug_assert_eq!(y.cols(), self.dim);
        let mut acc = self.zero();
        for j in 0..self.dim {
            let c = y.get(0, j);
            if c != 0 {
                let xj = x.mul(&self.structure[j]);
                acc.raxpy_from(0, &xj, 0, c);
            }
        }
        acc
    }

    pub fn pow(&self, x: &FMatrix, e: u64) -> FMatrix {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn is_idempotent(&self, x: &FMatrix) -> bool {
        self.mul(x, x) == *x
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..i {
                let bi = self.basis_el(i);
                let bj = self.basis_el(j);
                if self.mul(&bi, &bj) != self.mul(&bj, &bi) {
                    return false;
                }
            }
        }
        true
    }

    /// Matrix of right multiplication by x, acting on row vectors.
    pub fn right_mult_matrix(&self, x: &FMatrix) -> FMatrix {
        let mut acc = FMatrix::zeros(&self.field, self.dim, self.dim);
        for j in 0..self.dim {
            let c = x.get(0, j);
            if c != 0 {
                for i in 0..self.dim {
                    acc.raxpy_from(i, &self.structure[j], i, c);
                }
            }
        }
        acc
    }

    /// Matrix of left multiplication by x, acting on row vectors:
    /// row i is x·b_i.
    pub fn left_mult_matrix(&self, x: &FMatrix) -> FMatrix {
        let mut acc = FMatrix::zeros(&self.field, 0, self.dim);
        for i in 0..self.dim {
            let xi = x.mul(&self.structure[i]);
            acc.push_row(&xi, 0);
        }
        acc
    }

    /// A small generating set (as basis indices): the unital subalgebra
    /// generated by these basis elements is all of A. Computed greedily and
    /// cached; constructors that know better (group generators, quiver
    /// arrows) pre-seed it.
    pub fn generators(&self) -> &[usize] {
        self.gens.get_or_init(|| {
            let mut gens: Vec<usize> = Vec::new();
            let mut span = unital_closure_indices(self, &gens);
            for i in 0..self.dim {
                if !span.contains(&self.basis_el(i).get_row(0)) {
                    gens.push(i);
                    span = unital_closure_indices(self, &gens);
                }
            }
            gens
        })
    }

    pub(crate) fn set_generators(&self, idx: Vec<usize>) {
        debug_assert!({
            let span = unital_closure_indices(self, &idx);
            span.rank() == self.dim
        });
        let _ = self.gens.set(idx);
    }

    pub(crate) fn radical_cache(&self) -> &OnceLock<FMatrix> {
        &self.radical_rows
    }

    /// Render an element as a signed sum of labelled basis terms.
    pub fn pretty(&self, x: &FMatrix) -> String {
        let mut parts: Vec<String> = Vec::new();
        for i in 0..self.dim {
            let c = x.get(0, i);
            if c == 0 {
                continue;
            }
            let coeff = scalar_string(&self.field, c);
            if coeff == "1" {
                parts.push(self.labels[i].clone());
            } else if coeff.contains('+') {
                parts.push(format!("({})*{}", coeff, self.labels[i]));
            } else {
                parts.push(format!("{}*{}", coeff, self.labels[i]));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    /// Monic minimal polynomial of x over the subalgebra unit `one`
    /// (pass `self.one()` normally; corners pass their idempotent).
    /// Coefficients low-to-high, last = 1.
    pub fn min_poly(&self, x: &FMatrix, one: &FMatrix) -> Vec<Scalar> {
        let mut ech = Echelonizer::new(&self.field, self.dim);
        let mut powers = FMatrix::zeros(&self.field, 0, self.dim);
        let mut current = one.clone();
        loop {
            if ech.insert(&current, 0).is_none() {
                // current power is dependent: solve for the coefficients
                let k = powers.rows();
                let sol = powers
                    .transpose()
                    .solve_right(&current.transpose())
                    .expect("dependent power must lie in the span");
                let mut coeffs: Vec<Scalar> = (0..k).map(|i| self.field.neg(sol.get(i, 0))).collect();
                coeffs.push(1);
                return coeffs;
            }
            powers.push_row(&current, 0);
            current = self.mul(&current, x);
        }
    }
}

/// The unital closure (span of all products, with 1 adjoined) of the given
/// basis elements, as an echelonized row space.
fn unital_closure_indices(a: &Algebra, idx: &[usize]) -> Echelonizer {
    let rows: Vec<FMatrix> = idx.iter().map(|&i| a.basis_el(i)).collect();
    unital_closure(a, &rows)
}

/// Span of all words in the given elements, with the unit adjoined.
pub(crate) fn unital_closure(a: &Algebra, gens: &[FMatrix]) -> Echelonizer {
    let mut ech = Echelonizer::new(&a.field, a.dim);
    let mut worklist: Vec<FMatrix> = Vec::new();
    let mut basis_rows: Vec<FMatrix> = Vec::new();
    let push = |v: FMatrix,
                    ech: &mut Echelonizer,
                    worklist: &mut Vec<FMatrix>,
                    basis_rows: &mut Vec<FMatrix>| {
        if ech.insert(&v, 0).is_some() {
            worklist.push(v.clone());
            basis_rows.push(v);
        }
    };
    push(a.one(), &mut ech, &mut worklist, &mut basis_rows);
    for g in gens {
        push(g.clone(), &mut ech, &mut worklist, &mut basis_rows);
    }
    while let Some(w) = worklist.pop() {
        // close under products with everything currently in the span;
        // new products get appended and will be processed in turn
        let mut i = 0;
        while i < basis_rows.len() {
            let b = basis_rows[i].clone();
            for v in [a.mul(&w, &b), a.mul(&b, &w)] {
                if ech.insert(&v, 0).is_some() {
                    worklist.push(v.clone());
                    basis_rows.push(v);
                }
            }
            i += 1;
        }
    }
    ech
}

/// Print a field scalar: integers for prime fields, polynomials in `w` for
/// extensions (w is the class of the variable in the defining polynomial).
pub fn scalar_string(field: &Field, s: Scalar) -> String {
    if field.m() == 1 {
        return format!("{s}");
    }
    let p = field.p() as Scalar;
    let mut parts: Vec<String> = Vec::new();
    let mut rest = s;
    let mut deg = 0u32;
    while rest != 0 {
        let c = rest % p;
        if c != 0 {
            let t = match (deg, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "w".to_string(),
                (1, c) => format!("{c}*w"),
                (d, 1) => format!("w^{d}"),
                (d, c) => format!("{c}*w^{d}"),
            };
            parts.push(t);
        }
        rest /= p;
        deg += 1;
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.reverse();
        parts.join("+")
    }
}

/// The opposite algebra: same basis and labels, multiplication reversed.
pub fn op_algebra(a: &Algebra) -> Algebra {
    let a2 = a.clone();
    Algebra::from_mult_table(&a.field, a.labels.clone(), &a.unit.get_row(0), move |i, j| {
        // (b_i · b_j)^op = b_j · b_i in A, which is row j of structure[i]
        let mut out = FMatrix::zeros(&a2.field, 0, a2.dim);
        out.push_row(&a2.structure[i], j);
        out.get_row(0)
    })
}

/// The enveloping algebra A^op (x) A, whose right modules are A-bimodules:
/// the basis is pairs (i, j) at index i*dim + j, and
/// (a (x) b)·(a' (x) b') = a'a (x) bb'. Intended for small algebras; the
/// table is dim^2 x dim^2.
pub fn enveloping(a: &Algebra) -> Algebra {
    let n = a.dim;
    let mut labels = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            labels.push(format!("[{}|{}]", a.labels[i], a.labels[j]));
        }
    }
    let mut unit = vec![0 as Scalar; n * n];
    for i in 0..n {
        for j in 0..n {
            let c = a.field.mul(a.unit.get(0, i), a.unit.get(0, j));
            unit[i * n + j] = c;
        }
    }
    let a2 = a.clone();
    let env = Algebra::from_mult_table(&a.field, labels, &unit, move |ij, kl| {
        let (i, j) = (ij / n, ij % n);
        let (k, l) = (kl / n, kl % n);
        // first component: b_k · b_i (opposite order), second: b_j · b_l
        let mut first = FMatrix::zeros(&a2.field, 0, n);
        first.push_row(&a2.structure[i], k);
        let mut second = FMatrix::zeros(&a2.field, 0, n);
        second.push_row(&a2.structure[l], j);
        let mut out = vec![0 as Scalar; n * n];
        for x in 0..n {
            let fx = first.get(0, x);
            if fx == 0 {
                continue;
            }
            for y in 0..n {
                let sy = second.get(0, y);
                if sy != 0 {
                    out[x * n + y] = a2.field.mul(fx, sy);
                }
            }
        }
        out
    });
    // The radical of the product is rad(A)⊗A + A⊗rad(A): over a finite
    // field both semisimple quotients are separable, so the formula is
    // exact. Seeding it here avoids a descent on the dim² space, which is
    // far too large.
    let rad = crate::radical::radical(a);
    let f = &a.field;
    let mut ech = Echelonizer::new(f, n * n);
    for r in 0..rad.rows() {
        let row = rad.get_row(r);
        for j in 0..n {
            let mut v = vec![0 as Scalar; n * n];
            for (i, &c) in row.iter().enumerate() {
                if c != 0 {
                    v[i * n + j] = c;
                }
            }
            ech.insert_slice(&v);
            let mut w = vec![0 as Scalar; n * n];
            for (l, &c) in row.iter().enumerate() {
                if c != 0 {
                    w[j * n + l] = c;
                }
            }
            ech.insert_slice(&w);
        }
    }
    let (rows, _) = ech.basis().rref();
    // Two-sidedness needs no product-by-product re-verification: rad(A) is a
    // certified two-sided ideal of A, and (a'⊗b')(ρ⊗b)(a''⊗b'') =
    // (a''ρa')⊗(b'bb'') stays in rad(A)⊗A (mirrored for A⊗rad(A)), so the
    // seeded span is a sum of two ideals. Cross-check the dimension against
    // the semisimple quotient: dim = n² − (n − dim rad A)².
    let bar = n - rad.rows();
    assert_eq!(
        rows.rows(),
        n * n - bar * bar,
        "product radical dimension must match the split-quotient count"
    );
    env.radical_cache()
        .set(rows)
        .expect("freshly built product algebra has no cached radical");
    env
}

/// Row space of all commutators [b_i, b_j]; the symmetric functionals are
/// its null space.
pub(crate) fn commutator_rows(a: &Algebra) -> FMatrix {
    let mut rows = FMatrix::zeros(&a.field, 0, a.dim);
    for i in 0..a.dim {
        for j in 0..i {
            let bi = a.basis_el(i);
            let bj = a.basis_el(j);
            let c = a.mul(&bi, &bj).sub(&a.mul(&bj, &bi));
            if !c.is_zero() {
                rows.push_row(&c, 0);
            }
        }
    }
    rows
}

/// Basis rows of the center {x : xy = yx for all y}.
pub fn center(a: &Algebra) -> FMatrix {
    // stack the conditions x·(R_j - L_j) = 0 over all basis j
    let mut stacked = FMatrix::zeros(&a.field, a.dim, 0);
    for j in 0..a.dim {
        let lj = a.left_mult_matrix(&a.basis_el(j));
        let d = a.structure[j].sub(&lj);
        stacked = stacked.hstack(&d);
    }
    // x·M = 0 as rows x: null space of M^T
    stacked.transpose().kernel_basis()
}

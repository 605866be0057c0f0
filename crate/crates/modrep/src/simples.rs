//! Simple modules, radical series, and Loewy profiles.

use std::sync::Arc;

use algebra::{primitive_idempotents, radical, Algebra};
use exactcore::{Echelonizer, FMatrix};

use crate::hom::hom_space;
use crate::module::{quotient_module, submodule_spanned, RightModule};

/// Rows spanning M·rad(A).
pub fn module_radical_rows(m: &RightModule) -> FMatrix {
    let f = &m.algebra.field;
    let rad = radical(&m.algebra);
    let mut ech = Echelonizer::new(f, m.dim);
    for r in 0..rad.rows() {
        let mut x = FMatrix::zeros(f, 0, m.algebra.dim);
        x.push_row(&rad, r);
        let act = m.action_of(&x);
        for i in 0..m.dim {
            ech.insert(&act, i);
        }
    }
    ech.basis()
}

/// M / M·rad(A), with the projection.
pub fn top(m: &RightModule) -> (RightModule, FMatrix) {
    let rad_rows = module_radical_rows(m);
    let (t, proj, _) = quotient_module(m, &rad_rows);
    (t, proj)
}

/// Rows spanning the socle: the annihilator of rad(A).
pub fn socle_rows(m: &RightModule) -> FMatrix {
    let f = &m.algebra.field;
    let rad = radical(&m.algebra);
    if rad.rows() == 0 {
        return FMatrix::identity(f, m.dim);
    }
    let mut stacked = FMatrix::zeros(f, m.dim, 0);
    for r in 0..rad.rows() {
        let mut x = FMatrix::zeros(f, 0, m.algebra.dim);
        x.push_row(&rad, r);
        stacked = stacked.hstack(&m.action_of(&x));
    }
    // rows m with m·stacked = 0
    stacked.transpose().kernel_basis()
}

/// The primitive idempotents sorted canonically: by the position of their
/// first nonzero coordinate, then lexicographically by coordinates. For a
/// path algebra this matches vertex order; for the worked group algebras
/// it matches the printed order of the idempotents.
pub fn sorted_primitive_idempotents(a: &Arc<Algebra>) -> Vec<FMatrix> {
    let mut prims = primitive_idempotents(a);
    prims.sort_by_key(|e| {
        let row = e.get_row(0);
        let lead = row.iter().position(|&c| c != 0).unwrap_or(row.len());
        (lead, row)
    });
    prims
}

/// The distinct simple right modules, ordered by dimension and then by the
/// canonical order of the primitive idempotents they arise from. Also
/// returns, aligned index-by-index, a projective cover summand e·A for
/// each simple (its top is that simple).
pub struct SimpleData {
    pub simples: Vec<RightModule>,
    pub pims: Vec<RightModule>,
    /// inclusion rows of each projective indecomposable inside the algebra
    pub pim_rows: Vec<FMatrix>,
    pub idempotents: Vec<FMatrix>,
    /// dim End(S_i) as a division algebra over the base field
    pub end_dims: Vec<usize>,
}

pub fn simple_modules(a: &Arc<Algebra>) -> SimpleData {
    let regular = RightModule::regular(a);
    let prims = sorted_primitive_idempotents(a);
    let mut simples: Vec<RightModule> = Vec::new();
    let mut pims: Vec<RightModule> = Vec::new();
    let mut pim_rows: Vec<FMatrix> = Vec::new();
    let mut idems: Vec<FMatrix> = Vec::new();
    for e in prims {
        let (pim, rows) = submodule_spanned(&regular, &e);
        let (s, _) = top(&pim);
        let dup = simples.iter().any(|t| {
            t.dim == s.dim && !hom_space(t, &s).expect("same algebra").is_empty()
        });
        if !dup {
            simples.push(s);
            pims.push(pim);
            pim_rows.push(rows);
            idems.push(e);
        }
    }
    let mut order: Vec<usize> = (0..simples.len()).collect();
    order.sort_by_key(|&i| simples[i].dim); // stable: keeps idempotent order
    let simples: Vec<_> = order.iter().map(|&i| simples[i].clone()).collect();
    let pims: Vec<_> = order.iter().map(|&i| pims[i].clone()).collect();
    let pim_rows: Vec<_> = order.iter().map(|&i| pim_rows[i].clone()).collect();
    let idems: Vec<_> = order.iter().map(|&i| idems[i].clone()).collect();
    let end_dims = simples
        .iter()
        .map(|s| hom_space(s, s).expect("same algebra").len())
        .collect();
    SimpleData { simples, pims, pim_rows, idempotents: idems, end_dims }
}

/// Radical layers, top first. Each layer lists the simple factors by
/// 1-based index, sorted ascending, with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoewyProfile {
    pub layers: Vec<Vec<usize>>,
}

impl LoewyProfile {
    pub fn layer_strings(&self) -> Vec<String> {
        self.layers
            .iter()
            .map(|l| {
                let parts: Vec<String> = l.iter().map(|s| s.to_string()).collect();
                format!("[{}]", parts.join(" "))
            })
            .collect()
    }
}

impl std::fmt::Display for LoewyProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.layer_strings().join("/"))
    }
}

/// Multiplicities of each simple in a semisimple module.
fn semisimple_multiplicities(x: &RightModule, sd: &SimpleData) -> Vec<usize> {
    sd.simples
        .iter()
        .zip(&sd.end_dims)
        .map(|(s, &ed)| {
            let h = hom_space(x, s).expect("same algebra").len();
            assert_eq!(h % ed, 0, "Hom dimension must be divisible by dim End(S)");
            h / ed
        })
        .collect()
}

pub fn loewy(m: &RightModule, sd: &SimpleData) -> LoewyProfile {
    let mut layers = Vec::new();
    let mut current = m.clone();
    while current.dim > 0 {
        let rad_rows = module_radical_rows(&current);
        let (layer, _, _) = quotient_module(&current, &rad_rows);
        let mults = semisimple_multiplicities(&layer, sd);
        let mut entries = Vec::new();
        for (i, &c) in mults.iter().enumerate() {
            for _ in 0..c {
                entries.push(i + 1);
            }
        }
        let covered: usize = mults
            .iter()
            .zip(&sd.simples)
            .map(|(&c, s)| c * s.dim)
            .sum();
        assert_eq!(covered, layer.dim, "layer must decompose into the known simples");
        layers.push(entries);
        let (next, _) = submodule_spanned(&current, &rad_rows);
        assert!(next.dim < current.dim);
        current = next;
    }
    LoewyProfile { layers }
}

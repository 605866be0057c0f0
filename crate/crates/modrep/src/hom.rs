//! Homomorphism spaces, endomorphism algebras, and isomorphism testing.

use algebra::Algebra;
use exactcore::{FMatrix, Scalar};

use crate::module::{ModError, ModuleHom, RightModule};

/// Basis of Hom_A(M, N): all matrices F with A_M(g)·F = F·A_N(g) for every
/// algebra generator g. Row-major vectorisation; solutions come from one
/// kernel computation.
pub fn hom_space(m: &RightModule, n: &RightModule) -> Result<Vec<ModuleHom>, ModError> {
    if !m.same_algebra(n) {
        return Err(ModError::AlgebraMismatch);
    }
    let f = &m.algebra.field;
    let unknowns = m.dim * n.dim;
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    let id_m = FMatrix::identity(f, m.dim);
    let id_n = FMatrix::identity(f, n.dim);
    let mut system = FMatrix::zeros(f, 0, unknowns);
    for &g in m.algebra.generators() {
        // vec(A·F) = vec(F)·kron(Aᵀ, I); vec(F·B) = vec(F)·kron(I, B)
        let lhs = m.action[g].transpose().kron(&id_n);
        let rhs = id_m.kron(&n.action[g]);
        let block = lhs.sub(&rhs).transpose();
        system = system.vstack(&block);
    }
    // rows v with v·(lhs-rhs) = 0 for all generators
    let sols = system.kernel_basis();
    let mut out = Vec::with_capacity(sols.rows());
    for r in 0..sols.rows() {
        let mut mat = FMatrix::zeros(f, m.dim, n.dim);
        for k in 0..m.dim {
            for l in 0..n.dim {
                let c = sols.get(r, k * n.dim + l);
                if c != 0 {
                    mat.set(k, l, c);
                }
            }
        }
        let h = ModuleHom { mat };
        debug_assert!(h.is_intertwiner(m, n));
        out.push(h);
    }
    Ok(out)
}

pub fn hom_dim(m: &RightModule, n: &RightModule) -> Result<usize, ModError> {
    Ok(hom_space(m, n)?.len())
}

/// Raw Hom-dimension matrix over a list of modules: entry (i, j) is
/// dim Hom(M_j, M_i).
pub fn hom_dim_matrix(mods: &[RightModule]) -> Result<Vec<Vec<usize>>, ModError> {
    let mut out = vec![vec![0usize; mods.len()]; mods.len()];
    for i in 0..mods.len() {
        for j in 0..mods.len() {
            out[i][j] = hom_dim(&mods[j], &mods[i])?;
        }
    }
    Ok(out)
}

/// The endomorphism algebra of a module, with the hom basis it is written
/// in. Multiplication is composition (apply first factor, then second).
pub fn endomorphism_algebra(m: &RightModule) -> (Algebra, Vec<ModuleHom>) {
    let f = &m.algebra.field;
    let homs = hom_space(m, m).expect("same module");
    let d = homs.len();
    assert!(d > 0, "a nonzero module has a nonzero identity endomorphism");
    let mut basis_rows = FMatrix::zeros(f, 0, m.dim * m.dim);
    for h in &homs {
        basis_rows.push_row_slice(&vec_row_major(&h.mat));
    }
    let basis_t = basis_rows.transpose();
    let coords = |mat: &FMatrix| -> Vec<Scalar> {
        let b = FMatrix::col_matrix(f, &vec_row_major(mat));
        let x = basis_t.solve_right(&b).expect("composite lies in the hom space");
        (0..d).map(|i| x.get(i, 0)).collect()
    };
    let mut table: Vec<Vec<Vec<Scalar>>> = vec![vec![Vec::new(); d]; d];
    for i in 0..d {
        for j in 0..d {
            table[i][j] = coords(&homs[i].mat.mul(&homs[j].mat));
        }
    }
    let unit = coords(&FMatrix::identity(f, m.dim));
    let labels: Vec<String> = (1..=d).map(|i| format!("h{i}")).collect();
    let alg = Algebra::from_mult_table(f, labels, &unit, |i, j| table[i][j].clone());
    (alg, homs)
}

fn vec_row_major(mat: &FMatrix) -> Vec<Scalar> {
    let mut v = Vec::with_capacity(mat.rows() * mat.cols());
    for r in 0..mat.rows() {
        v.extend(mat.get_row(r));
    }
    v
}

#[derive(Debug)]
pub enum IsoVerdict {
    Isomorphic(ModuleHom),
    NotIsomorphic(String),
    Inconclusive(String),
}

impl IsoVerdict {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoVerdict::Isomorphic(_))
    }
}

fn series_dims(m: &RightModule, radical_side: bool) -> Vec<usize> {
    let mut dims = Vec::new();
    let mut cur = m.clone();
    while cur.dim > 0 {
        if radical_side {
            let rows = crate::simples::module_radical_rows(&cur);
            let (next, _) = crate::module::submodule_spanned(&cur, &rows);
            dims.push(cur.dim - next.dim);
            cur = next;
        } else {
            let rows = crate::simples::socle_rows(&cur);
            dims.push(rows.rows());
            let (next, _, _) = crate::module::quotient_module(&cur, &rows);
            cur = next;
        }
        assert!(*dims.last().unwrap() > 0 || m.dim == 0);
    }
    dims
}

const EXHAUSTIVE_BUDGET: f64 = (1u64 << 20) as f64;
const RANDOM_TRIES: usize = 1_000_000;
pub const DEFAULT_ISO_SEED: u64 = 0x15a_c0de;

pub fn iso_test(m: &RightModule, n: &RightModule) -> Result<IsoVerdict, ModError> {
    iso_test_seeded(m, n, DEFAULT_ISO_SEED)
}

pub fn iso_test_seeded(
    m: &RightModule,
    n: &RightModule,
    seed: u64,
) -> Result<IsoVerdict, ModError> {
    if !m.same_algebra(n) {
        return Err(ModError::AlgebraMismatch);
    }
    let f = &m.algebra.field;
    if m.dim != n.dim {
        return Ok(IsoVerdict::NotIsomorphic(format!(
            "dimensions differ: {} vs {}",
            m.dim, n.dim
        )));
    }
    if m.dim == 0 {
        return Ok(IsoVerdict::Isomorphic(ModuleHom {
            mat: FMatrix::zeros(f, 0, 0),
        }));
    }
    let rm = series_dims(m, true);
    let rn = series_dims(n, true);
    if rm != rn {
        return Ok(IsoVerdict::NotIsomorphic(format!(
            "radical series layer dimensions differ: {rm:?} vs {rn:?}"
        )));
    }
    let sm = series_dims(m, false);
    let sn = series_dims(n, false);
    if sm != sn {
        return Ok(IsoVerdict::NotIsomorphic(format!(
            "socle series layer dimensions differ: {sm:?} vs {sn:?}"
        )));
    }
    let homs = hom_space(m, n)?;
    if homs.is_empty() {
        return Ok(IsoVerdict::NotIsomorphic("no homomorphisms at all".into()));
    }
    // single basis maps first: cheap and usually sufficient
    for h in &homs {
        if h.mat.rank() == m.dim {
            return Ok(IsoVerdict::Isomorphic(h.clone()));
        }
    }
    let h = homs.len();
    let q = f.q() as f64;
    if q.powi(h as i32) <= EXHAUSTIVE_BUDGET {
        let elements: Vec<Scalar> = f.elements().collect();
        let qn = elements.len();
        let mut counter = vec![0usize; h];
        loop {
            // advance the base-q counter
            let mut pos = 0;
            loop {
                if pos == h {
                    return Ok(IsoVerdict::NotIsomorphic(
                        "exhausted all linear combinations of homomorphisms".into(),
                    ));
                }
                counter[pos] += 1;
                if counter[pos] < qn {
                    break;
                }
                counter[pos] = 0;
                pos += 1;
            }
            let mut cand = FMatrix::zeros(f, m.dim, n.dim);
            for (i, &ci) in counter.iter().enumerate() {
                if elements[ci] != 0 {
                    cand = cand.add(&homs[i].mat.scale(elements[ci]));
                }
            }
            if cand.rank() == m.dim {
                return Ok(IsoVerdict::Isomorphic(ModuleHom { mat: cand }));
            }
        }
    }
    let mut state = seed ^ 0x9e37_79b9_7f4a_7c15;
    let elements: Vec<Scalar> = f.elements().collect();
    for _ in 0..RANDOM_TRIES {
        let mut cand = FMatrix::zeros(f, m.dim, n.dim);
        for hmat in &homs {
            let c = elements[(splitmix(&mut state) % elements.len() as u64) as usize];
            if c != 0 {
                cand = cand.add(&hmat.mat.scale(c));
            }
        }
        if cand.rank() == m.dim {
            return Ok(IsoVerdict::Isomorphic(ModuleHom { mat: cand }));
        }
    }
    Ok(IsoVerdict::Inconclusive(format!(
        "no isomorphism found in {RANDOM_TRIES} random combinations of a \
         {h}-dimensional hom space"
    )))
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

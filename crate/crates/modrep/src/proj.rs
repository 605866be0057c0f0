//! Projective covers, injective hulls, syzygies and cosyzygies, stable
//! cores, and stable hom dimensions.

use std::sync::Arc;

use algebra::{symmetric_form, Algebra};
use exactcore::{Echelonizer, FMatrix};

use crate::hom::{hom_space, iso_test, IsoVerdict};
use crate::module::{
    direct_sum, dual_module, opposite, submodule_spanned, ModError, ModuleHom, RightModule,
};
use crate::simples::{module_radical_rows, simple_modules, SimpleData};

/// Everything repeatedly needed for homological work over one algebra:
/// its simples and projectives, the opposite algebra with the same data,
/// and whether a symmetrizing form exists (used as the self-injectivity
/// gate).
pub struct ModuleContext {
    pub algebra: Arc<Algebra>,
    pub simples: SimpleData,
    pub op: Arc<Algebra>,
    pub op_simples: SimpleData,
    pub self_injective: bool,
}

impl ModuleContext {
    pub fn new(algebra: &Arc<Algebra>) -> ModuleContext {
        let simples = simple_modules(algebra);
        let op = opposite(algebra);
        let op_simples = simple_modules(&op);
        let self_injective = symmetric_form(algebra).is_some();
        ModuleContext { algebra: algebra.clone(), simples, op, op_simples, self_injective }
    }
}

/// A projective cover P -> M: the cover module (a direct sum of the
/// projective indecomposables), which summand types occur, and the
/// covering map.
pub struct CoverData {
    pub cover: RightModule,
    /// 0-based index into SimpleData for each summand, in order
    pub summand_types: Vec<usize>,
    pub map: ModuleHom,
}

pub fn projective_cover(m: &RightModule, sd: &SimpleData) -> CoverData {
    let f = &m.algebra.field;
    if m.dim == 0 {
        return CoverData {
            cover: RightModule::zero_module(&m.algebra),
            summand_types: Vec::new(),
            map: ModuleHom { mat: FMatrix::zeros(f, 0, 0) },
        };
    }
    let rad_rows = module_radical_rows(m);
    let mut covered = Echelonizer::new(f, m.dim);
    for r in 0..rad_rows.rows() {
        covered.insert(&rad_rows, r);
    }
    let mut types = Vec::new();
    let mut gens: Vec<FMatrix> = Vec::new();
    while covered.rank() < m.dim {
        let mut found = false;
        'search: for (t, e) in sd.idempotents.iter().enumerate() {
            let e_action = m.action_of(e);
            for r in 0..m.dim {
                if !covered.contains(&e_action.get_row(r)) {
                    // v = (basis row r)·e generates one new simple on top
                    let mut v = FMatrix::zeros(f, 0, m.dim);
                    v.push_row(&e_action, r);
                    let mut worklist = vec![v.clone()];
                    covered.insert(&v, 0);
                    while let Some(w) = worklist.pop() {
                        for &g in m.algebra.generators() {
                            let wg = w.mul(&m.action[g]);
                            if covered.insert(&wg, 0).is_some() {
                                worklist.push(wg);
                            }
                        }
                    }
                    types.push(t);
                    gens.push(v);
                    found = true;
                    break 'search;
                }
            }
        }
        assert!(found, "the tops of the projectives must cover the top of M");
    }
    let parts: Vec<RightModule> = types.iter().map(|&t| sd.pims[t].clone()).collect();
    let (cover, _) = direct_sum(&parts);
    let mut map = FMatrix::zeros(f, 0, m.dim);
    for (&t, v) in types.iter().zip(&gens) {
        let incl = &sd.pim_rows[t];
        for j in 0..incl.rows() {
            let mut amb = FMatrix::zeros(f, 0, m.algebra.dim);
            amb.push_row(incl, j);
            map.push_row(&m.act(v, &amb), 0);
        }
    }
    assert_eq!(map.rank(), m.dim, "cover map must be surjective");
    // essential cover: kernel inside the radical of P
    let ker = map.transpose().kernel_basis();
    let prad = module_radical_rows(&cover);
    let mut prad_ech = Echelonizer::new(f, cover.dim);
    for r in 0..prad.rows() {
        prad_ech.insert(&prad, r);
    }
    for r in 0..ker.rows() {
        assert!(prad_ech.contains(&ker.get_row(r)), "cover must be essential");
    }
    let map = ModuleHom { mat: map };
    debug_assert!(map.is_intertwiner(&cover, m));
    CoverData { cover, summand_types: types, map }
}

/// A syzygy: the kernel of a projective cover, with its inclusion rows
/// (kernel coordinates inside the cover).
pub struct SyzygyData {
    pub cover: CoverData,
    pub kernel: RightModule,
    pub kernel_rows: FMatrix,
}

fn syzygy_core(m: &RightModule, sd: &SimpleData) -> SyzygyData {
    let cover = projective_cover(m, sd);
    let ker_rows = cover.map.mat.transpose().kernel_basis();
    let (kernel, kernel_rows) = submodule_spanned(&cover.cover, &ker_rows);
    SyzygyData { cover, kernel, kernel_rows }
}

/// A module is projective iff its cover has zero kernel. Needs no
/// self-injectivity.
pub fn is_projective(m: &RightModule, sd: &SimpleData) -> bool {
    if m.dim == 0 {
        return true;
    }
    syzygy_core(m, sd).kernel.dim == 0
}

pub fn syzygy(m: &RightModule, ctx: &ModuleContext) -> Result<SyzygyData, ModError> {
    if !ctx.self_injective {
        return Err(ModError::NotSelfInjective);
    }
    Ok(syzygy_core(m, &ctx.simples))
}

/// Transport a map f: M -> N to its syzygies: lift f over the covers
/// (inside Hom_A, so that the lift is itself a module map) and restrict
/// to the kernels.
pub fn omega_map(
    f: &ModuleHom,
    sm: &SyzygyData,
    sn: &SyzygyData,
) -> ModuleHom {
    let field = &sm.kernel.algebra.field;
    let b = sm.cover.map.mat.mul(&f.mat);
    // G ∈ Hom_A(P_M, P_N) with G·C_N = C_M·F; projectivity of P_M makes
    // the system solvable
    let homs = crate::hom::hom_space(&sm.cover.cover, &sn.cover.cover)
        .expect("covers live over the same algebra");
    let cols = sm.cover.cover.dim * b.cols();
    let mut stacked = FMatrix::zeros(field, 0, cols);
    for h in &homs {
        let comp = h.mat.mul(&sn.cover.map.mat);
        let mut row = Vec::with_capacity(cols);
        for r in 0..comp.rows() {
            row.extend(comp.get_row(r));
        }
        stacked.push_row_slice(&row);
    }
    let mut target = Vec::with_capacity(cols);
    for r in 0..b.rows() {
        target.extend(b.get_row(r));
    }
    let coeffs = stacked
        .transpose()
        .solve_right(&FMatrix::col_matrix(field, &target))
        .expect("a module-map lift over the covers exists");
    let mut g = FMatrix::zeros(field, sm.cover.cover.dim, sn.cover.cover.dim);
    for (i, h) in homs.iter().enumerate() {
        let c = coeffs.get(i, 0);
        if c != 0 {
            g = g.add(&h.mat.scale(c));
        }
    }
    // restrict to the kernels and express in kernel coordinates
    let top = sm.kernel_rows.mul(&g);
    let x = sn
        .kernel_rows
        .transpose()
        .solve_right(&top.transpose())
        .expect("kernel maps into kernel")
        .transpose();
    let out = ModuleHom { mat: x };
    debug_assert!(out.is_intertwiner(&sm.kernel, &sn.kernel));
    out
}

/// An injective hull M -> I(M), computed as the dual of a projective cover
/// over the opposite algebra.
pub struct HullData {
    pub hull: RightModule,
    pub embedding: ModuleHom,
}

pub fn injective_hull(m: &RightModule, ctx: &ModuleContext) -> HullData {
    let d = dual_module(m, &ctx.op);
    let cover = projective_cover(&d, &ctx.op_simples);
    let hull = dual_module(&cover.cover, &ctx.algebra);
    let embedding = ModuleHom { mat: cover.map.mat.transpose() };
    debug_assert!(embedding.is_intertwiner(m, &hull));
    HullData { hull, embedding }
}

/// A cosyzygy: the cokernel of the injective hull embedding, realised as
/// the dual of a syzygy over the opposite algebra.
pub struct CosyzygyData {
    pub dual_syzygy: SyzygyData,
    pub module: RightModule,
}

pub fn cosyzygy(m: &RightModule, ctx: &ModuleContext) -> Result<CosyzygyData, ModError> {
    if !ctx.self_injective {
        return Err(ModError::NotSelfInjective);
    }
    let d = dual_module(m, &ctx.op);
    let dual_syzygy = syzygy_core(&d, &ctx.op_simples);
    let module = dual_module(&dual_syzygy.kernel, &ctx.algebra);
    Ok(CosyzygyData { dual_syzygy, module })
}

pub fn cosyzygy_map(
    f: &ModuleHom,
    cm: &CosyzygyData,
    cn: &CosyzygyData,
) -> ModuleHom {
    // dualising is contravariant, so transport the transposed matrix from
    // the dual of N to the dual of M, then transpose back
    let df = ModuleHom { mat: f.mat.transpose() };
    let g = omega_map(&df, &cn.dual_syzygy, &cm.dual_syzygy);
    ModuleHom { mat: g.mat.transpose() }
}

/// The projective-free core: cosyzygy of the syzygy. Over a self-injective
/// algebra this removes exactly the projective direct summands.
pub struct StripResult {
    pub core: RightModule,
    pub projective_dim: usize,
}

pub fn strip_projectives(m: &RightModule, ctx: &ModuleContext) -> Result<StripResult, ModError> {
    let s = syzygy(m, ctx)?;
    let c = cosyzygy(&s.kernel, ctx)?;
    assert!(c.module.dim <= m.dim);
    Ok(StripResult { projective_dim: m.dim - c.module.dim, core: c.module })
}

/// Iterated syzygy/cosyzygy: Ω^k for k > 0, Ω^{-k} for k < 0, the stable
/// core for k = 0.
pub fn omega_power(m: &RightModule, k: i64, ctx: &ModuleContext) -> Result<RightModule, ModError> {
    let mut cur = strip_projectives(m, ctx)?.core;
    if k > 0 {
        for _ in 0..k {
            cur = syzygy(&cur, ctx)?.kernel;
        }
    } else {
        for _ in 0..(-k) {
            cur = cosyzygy(&cur, ctx)?.module;
        }
    }
    Ok(cur)
}

/// dim of the stable hom space: Hom(M, N) modulo maps factoring through a
/// projective (equivalently through the cover of N).
pub fn stable_hom_dim(
    m: &RightModule,
    n: &RightModule,
    ctx: &ModuleContext,
) -> Result<usize, ModError> {
    let homs = hom_space(m, n)?;
    if n.dim == 0 || m.dim == 0 {
        return Ok(0);
    }
    let cover = projective_cover(n, &ctx.simples);
    let through = hom_space(m, &cover.cover)?;
    let f = &m.algebra.field;
    let mut ech = Echelonizer::new(f, m.dim * n.dim);
    for g in &through {
        let composite = g.mat.mul(&cover.map.mat);
        let mut row = Vec::with_capacity(m.dim * n.dim);
        for r in 0..m.dim {
            row.extend(composite.get_row(r));
        }
        ech.insert_slice(&row);
    }
    Ok(homs.len() - ech.rank())
}

/// The Cartan matrix: entry (i, j) counts the multiplicity of the j-th
/// simple as a composition factor of the i-th projective indecomposable,
/// computed as dim Hom(P_j, P_i) / dim End(S_j).
pub fn cartan_matrix(sd: &SimpleData) -> Vec<Vec<u64>> {
    let k = sd.simples.len();
    let mut out = vec![vec![0u64; k]; k];
    for i in 0..k {
        for j in 0..k {
            let h = hom_space(&sd.pims[j], &sd.pims[i]).expect("same algebra").len();
            assert_eq!(h % sd.end_dims[j], 0);
            out[i][j] = (h / sd.end_dims[j]) as u64;
        }
    }
    out
}

/// Decompose a module into indecomposable projective summand types by
/// repeatedly matching against the projective indecomposables. Returns
/// None if the module is not projective.
pub fn projective_type(m: &RightModule, sd: &SimpleData) -> Option<Vec<usize>> {
    if !is_projective(m, sd) {
        return None;
    }
    // a projective module is determined by its top
    let (t, _) = crate::simples::top(m);
    let mut counts = vec![0usize; sd.simples.len()];
    for (i, (s, &ed)) in sd.simples.iter().zip(&sd.end_dims).enumerate() {
        let h = hom_space(&t, s).expect("same algebra").len();
        assert_eq!(h % ed, 0);
        counts[i] = h / ed;
    }
    let total: usize = counts
        .iter()
        .zip(&sd.pims)
        .map(|(&c, p)| c * p.dim)
        .sum();
    assert_eq!(total, m.dim, "projective module must match its top's cover");
    Some(counts)
}

/// Convenience wrapper asserting a module is (or is not) stably trivial,
/// i.e. its core is isomorphic to a given comparison module.
pub fn stable_iso(
    m: &RightModule,
    n: &RightModule,
    ctx: &ModuleContext,
) -> Result<IsoVerdict, ModError> {
    let cm = strip_projectives(m, ctx)?;
    let cn = strip_projectives(n, ctx)?;
    iso_test(&cm.core, &cn.core)
}

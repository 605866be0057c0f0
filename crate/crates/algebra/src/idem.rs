//! Primitive idempotent decompositions and block idempotents.
//!
//! Strategy: pass to the semisimple quotient, split the identity there by
//! corner-and-minimal-polynomial refinement (Berlekamp kernels detect
//! splittable elements; a CRT idempotent in k[x] performs the split), then
//! lift the pieces back through the radical by p-th powering, sequentially
//! orthogonalised inside shrinking corners. Every certificate is effective:
//! an idempotent is accepted as primitive only when its corner is k, or is
//! a finite field generated by a certified-irreducible minimal polynomial.

use exactcore::{FMatrix, Field, Scalar};

use crate::core::{center, Algebra};
use crate::group_alg::splitmix64;
use crate::radical::radical;
use crate::sub::{corner, quotient_algebra, subalgebra_from_rows};

// --- dense univariate polynomials, coefficients low-to-high ---

type Poly = Vec<Scalar>;

fn ptrim(p: &mut Poly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn pdeg(p: &Poly) -> usize {
    debug_assert!(!p.is_empty());
    p.len() - 1
}

fn pmul(f: &Field, a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0 as Scalar; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y != 0 {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
    }
    ptrim(&mut out);
    out
}

/// Remainder of a by b (b nonzero).
fn prem(f: &Field, a: &Poly, b: &Poly) -> Poly {
    let mut r = a.clone();
    ptrim(&mut r);
    let db = pdeg(b);
    let lead_inv = f.inv(b[db]);
    while !r.is_empty() && pdeg(&r) >= db {
        let dr = pdeg(&r);
        let c = f.mul(r[dr], lead_inv);
        let shift = dr - db;
        for (i, &bc) in b.iter().enumerate() {
            if bc != 0 {
                r[i + shift] = f.sub(r[i + shift], f.mul(c, bc));
            }
        }
        ptrim(&mut r);
    }
    r
}

fn pdiv_exact(f: &Field, a: &Poly, b: &Poly) -> Poly {
    let (q, r) = pdivmod(f, a, b);
    assert!(r.is_empty(), "division was not exact");
    q
}

fn pmonic(f: &Field, p: &Poly) -> Poly {
    let mut p = p.clone();
    ptrim(&mut p);
    if p.is_empty() {
        return p;
    }
    let inv = f.inv(*p.last().unwrap());
    if inv != 1 {
        for c in p.iter_mut() {
            *c = f.mul(*c, inv);
        }
    }
    p
}

fn pgcd(f: &Field, a: &Poly, b: &Poly) -> Poly {
    let mut a = a.clone();
    let mut b = b.clone();
    ptrim(&mut a);
    ptrim(&mut b);
    while !b.is_empty() {
        let r = prem(f, &a, &b);
        a = b;
        b = r;
    }
    pmonic(f, &a)
}

fn pderiv(f: &Field, p: &Poly) -> Poly {
    let mut out = Vec::new();
    for (i, &c) in p.iter().enumerate().skip(1) {
        out.push(f.mul(c, f.from_int(i as i64)));
    }
    ptrim(&mut out);
    out
}

/// Quotient and remainder of a by b (b nonzero).
fn pdivmod(f: &Field, a: &Poly, b: &Poly) -> (Poly, Poly) {
    let mut r = a.clone();
    ptrim(&mut r);
    let db = pdeg(b);
    let lead_inv = f.inv(b[db]);
    let mut q = vec![0 as Scalar; r.len().saturating_sub(db).max(1)];
    while !r.is_empty() && pdeg(&r) >= db {
        let dr = pdeg(&r);
        let c = f.mul(r[dr], lead_inv);
        q[dr - db] = c;
        for (i, &bc) in b.iter().enumerate() {
            if bc != 0 {
                r[i + dr - db] = f.sub(r[i + dr - db], f.mul(c, bc));
            }
        }
        ptrim(&mut r);
    }
    ptrim(&mut q);
    (q, r)
}

fn psub(f: &Field, a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    while out.len() < b.len() {
        out.push(0);
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] = f.sub(out[i], c);
    }
    ptrim(&mut out);
    out
}

/// The inverse of a modulo m, where gcd(a, m) = 1. Extended Euclid with
/// the invariant r_i ≡ s_i · a (mod m).
fn pinv_mod(f: &Field, a: &Poly, m: &Poly) -> Poly {
    let (mut r0, mut r1) = (m.clone(), prem(f, a, m));
    let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r2) = pdivmod(f, &r0, &r1);
        let s2 = psub(f, &s0, &pmul(f, &q, &s1));
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    assert!(!r0.is_empty() && pdeg(&r0) == 0, "inverse requires coprimality");
    let inv = f.inv(r0[0]);
    let out: Poly = s0.iter().map(|&c| f.mul(c, inv)).collect();
    prem(f, &out, m)
}

/// Basis of the Berlekamp space {h : h^q = h mod f}; its rank equals the
/// number of distinct irreducible factors of f (with any multiplicities).
fn berlekamp_space(f: &Field, poly: &Poly) -> FMatrix {
    let n = pdeg(poly);
    let q = f.q() as u64;
    // x^q mod poly by square-and-multiply
    let mut xq: Poly = vec![1];
    let xm: Poly = vec![0, 1];
    let mut bits: Vec<bool> = Vec::new();
    let mut e = q;
    while e > 0 {
        bits.push(e & 1 == 1);
        e >>= 1;
    }
    for &bit in bits.iter().rev() {
        xq = prem(f, &pmul(f, &xq, &xq), poly);
        if bit {
            xq = prem(f, &pmul(f, &xq, &xm), poly);
        }
    }
    // Q row j = x^(jq) mod poly
    let mut qmat = FMatrix::zeros(f, n, n);
    let mut cur: Poly = vec![1];
    for j in 0..n {
        for (i, &c) in cur.iter().enumerate() {
            qmat.set(j, i, c);
        }
        cur = prem(f, &pmul(f, &cur, &xq), poly);
    }
    let qmi = qmat.sub(&FMatrix::identity(f, n));
    // h·(Q - I) = 0, rows h
    qmi.transpose().kernel_basis()
}

fn is_irreducible(f: &Field, poly: &Poly) -> bool {
    if pdeg(poly) == 0 {
        return false;
    }
    if pdeg(poly) == 1 {
        return true;
    }
    let d = pderiv(f, poly);
    if d.is_empty() {
        return false; // a p-th power
    }
    if pdeg(&pgcd(f, poly, &d)) != 0 {
        return false; // repeated factors
    }
    berlekamp_space(f, poly).rows() == 1
}

/// Split a monic polynomial into two coprime monic factors, if possible.
fn coprime_split(f: &Field, poly: &Poly) -> Option<(Poly, Poly)> {
    let space = berlekamp_space(f, poly);
    if space.rows() <= 1 {
        return None; // primary: a power of one irreducible
    }
    let h_row = (0..space.rows())
        .find(|&r| {
            let v = space.get_row(r);
            v.iter().skip(1).any(|&c| c != 0)
        })
        .expect("rank >= 2 kernel contains a non-constant");
    let mut h: Poly = space.get_row(h_row);
    ptrim(&mut h);
    for c in f.elements() {
        let mut hc = h.clone();
        if hc.is_empty() {
            hc = vec![f.neg(c)];
        } else {
            hc[0] = f.sub(hc[0], c);
        }
        ptrim(&mut hc);
        if hc.is_empty() {
            continue;
        }
        let g = pgcd(f, poly, &hc);
        if pdeg(&g) > 0 && pdeg(&g) < pdeg(poly) {
            let rest = pmonic(f, &pdiv_exact(f, poly, &g));
            return Some((g, rest));
        }
    }
    unreachable!("a non-constant Berlekamp element must split the polynomial");
}

// --- idempotent refinement in a semisimple algebra ---

enum Refine {
    Primitive,
    Split(FMatrix, FMatrix),
}

/// Decide whether e (idempotent in the SEMISIMPLE algebra abar) is
/// primitive, or split it into two orthogonal idempotents. Deterministic:
/// corner basis elements first, then a seeded pseudo-random stream.
fn refine_idempotent(abar: &Algebra, e: &FMatrix) -> Refine {
    let f = abar.field.clone();
    let cd = corner(abar, e).expect("refinement input must be idempotent");
    let c = &cd.algebra;
    if c.dim == 1 {
        return Refine::Primitive;
    }
    let commutative = c.is_commutative();
    let mut state: u64 = 0x0005_1c0f_ee1d_5eed;
    let mut candidate = |step: usize| -> FMatrix {
        if step < c.dim {
            return c.basis_el(step);
        }
        let mut v = c.zero();
        for i in 0..c.dim {
            state = splitmix64(&mut state);
            v.set(0, i, (state % f.q() as u64) as Scalar);
        }
        v
    };
    for step in 0..10_000 {
        let x = candidate(step);
        let mp = c.min_poly(&x, &c.one());
        if pdeg(&mp) == 1 {
            continue;
        }
        if let Some((m1, m2)) = coprime_split(&f, &mp) {
            // CRT idempotent: u = m2 * (m2^{-1} mod m1), evaluated at x
            let inv = pinv_mod(&f, &m2, &m1);
            let upoly = prem(&f, &pmul(&f, &m2, &inv), &mp);
            let mut u = c.zero();
            let mut xpow = c.one();
            for &coef in upoly.iter() {
                if coef != 0 {
                    u = u.add(&xpow.scale(coef));
                }
                xpow = c.mul(&xpow, &x);
            }
            assert!(c.is_idempotent(&u), "CRT element must be idempotent");
            assert!(!u.is_zero() && u != c.one(), "split must be proper");
            let v = c.one().sub(&u);
            return Refine::Split(u.mul(&cd.basis), v.mul(&cd.basis));
        }
        // primary minimal polynomial; a genuine field certificate needs
        // full degree and irreducibility
        if commutative && pdeg(&mp) == c.dim && is_irreducible(&f, &mp) {
            return Refine::Primitive;
        }
    }
    panic!("idempotent refinement did not terminate (internal error)");
}

/// Lift an idempotent-mod-radical to a true idempotent by p-th powering.
fn lift_idempotent(a: &Algebra, x0: &FMatrix) -> FMatrix {
    let p = a.field.p();
    let mut e = x0.clone();
    for _ in 0..64 {
        if a.is_idempotent(&e) {
            return e;
        }
        e = a.pow(&e, p);
    }
    panic!("idempotent lifting did not stabilise (internal error)");
}

/// A full set of orthogonal primitive idempotents summing to 1,
/// deterministically ordered.
pub fn primitive_idempotents(a: &Algebra) -> Vec<FMatrix> {
    let j = radical(a);
    let quo = quotient_algebra(a, &j).expect("radical is an ideal");
    let abar = &quo.algebra;
    // refine 1 into primitives of the semisimple quotient, FIFO
    let mut queue: Vec<FMatrix> = vec![abar.one()];
    let mut prims: Vec<FMatrix> = Vec::new();
    while let Some(e) = queue.pop() {
        match refine_idempotent(abar, &e) {
            Refine::Primitive => prims.push(e),
            Refine::Split(u, v) => {
                queue.push(v);
                queue.push(u);
            }
        }
    }
    // sequential lifting inside shrinking corners keeps orthogonality
    let mut lifted: Vec<FMatrix> = Vec::new();
    let mut done = a.zero();
    for ebar in &prims {
        let u = a.one().sub(&done);
        let x0 = quo.lift(ebar);
        let x = a.mul(&a.mul(&u, &x0), &u);
        let e = lift_idempotent(a, &x);
        done = done.add(&e);
        lifted.push(e);
    }
    assert_eq!(done, a.one(), "primitive idempotents must sum to 1");
    for (i, e) in lifted.iter().enumerate() {
        for (k, e2) in lifted.iter().enumerate() {
            if i != k {
                assert!(a.mul(e, e2).is_zero(), "idempotents must be orthogonal");
            }
        }
    }
    lifted
}

/// Block idempotents: the primitive idempotents of the center, transported
/// back to A and sorted by coordinate vector.
pub fn blocks(a: &Algebra) -> Vec<FMatrix> {
    let arc = std::sync::Arc::new(a.clone());
    let z = subalgebra_from_rows(&arc, &center(a)).expect("center is a unital subalgebra");
    let zalg = z.as_algebra();
    let mut out: Vec<FMatrix> = primitive_idempotents(&zalg)
        .into_iter()
        .map(|e| z.embed(&e))
        .collect();
    out.sort_by(|x, y| x.get_row(0).cmp(&y.get_row(0)));
    for e in &out {
        debug_assert!(a.is_idempotent(e));
    }
    out
}

//! Small finite fields GF(p^m) with table-driven arithmetic.
//!
//! Elements are stored as `u16` codes: the element sum(c_i t^i) has code
//! sum(c_i p^i), i.e. base-p digit packing of the coefficient vector with
//! respect to the class of t modulo the defining polynomial. For GF(2) the
//! codes are bits, and for GF(4) with defining polynomial t^2+t+1 the code
//! layout (bit 0 = constant part, bit 1 = t part) agrees with the two-plane
//! packed matrix representation in `matrix.rs`.
//!
//! Fields are capped at 1024 elements. Everything here targets exact desk
//! scale computation, not asymptotics: full multiplication tables are built
//! eagerly and shared behind an `Arc`.

use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Field element code. Only values `< q` are meaningful for a given field.
pub type Scalar = u16;

/// Largest supported field size.
pub const MAX_Q: u64 = 1024;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("defining polynomial is reducible over GF({p})")]
    Reducible { p: u64 },
    #[error("field with {q} elements exceeds the supported maximum {MAX_Q}")]
    TooLarge { q: u64 },
    #[error("bad defining polynomial: {0}")]
    BadPoly(&'static str),
}

/// Descriptor of GF(p^m). `poly` lists the coefficients of the defining
/// polynomial constant term first; it must be monic of degree `m` with
/// coefficients reduced mod p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u64,
    pub m: u32,
    pub poly: Vec<u64>,
}

struct Tables {
    spec: FieldSpec,
    q: u32,
    add: Vec<Scalar>,
    mul: Vec<Scalar>,
    neg: Vec<Scalar>,
    inv: Vec<Scalar>, // inv[0] = 0 as a sentinel; inv() panics on 0
}

/// A finite field handle. Cheap to clone; equality compares the underlying
/// `FieldSpec`, so two independently built GF(4)'s compare equal.
#[derive(Clone)]
pub struct Field(Arc<Tables>);

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// Dense polynomials over GF(p), coefficients constant-first, not
// necessarily trimmed. Only used while validating specs and building tables.
fn poly_trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    debug_assert!(!b.is_empty() && *b.last().unwrap() != 0);
    let mut r: Vec<u64> = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = mod_inv(*b.last().unwrap(), p);
    while r.len() > db {
        let c = (*r.last().unwrap() * lead_inv) % p;
        let shift = r.len() - 1 - db;
        for (i, &bc) in b.iter().enumerate() {
            let idx = i + shift;
            r[idx] = (r[idx] + p - (c * bc) % p) % p;
        }
        poly_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a != 0 mod p.
    debug_assert!(a % p != 0);
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// True if `poly` (monic, degree m >= 2) has a monic divisor of degree
/// 1..=m/2. Exhaustive trial division; fine for m <= 4 and small p.
fn reducible(poly: &[u64], p: u64) -> bool {
    let m = poly.len() - 1;
    for d in 1..=m / 2 {
        // all monic polynomials of degree d: p^d choices of lower coefficients
        let count = p.pow(d as u32);
        for code in 0..count {
            let mut div = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                div.push(c % p);
                c /= p;
            }
            div.push(1);
            if poly_rem(poly, &div, p).is_empty() {
                return true;
            }
        }
    }
    false
}

/// Build GF(p^m). Validates primality of `p` and irreducibility of `poly`.
pub fn make_field(p: u64, m: u32, poly: &[u64]) -> Result<Field, FieldError> {
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    if m == 0 {
        return Err(FieldError::BadPoly("degree must be at least 1"));
    }
    if poly.len() != m as usize + 1 {
        return Err(FieldError::BadPoly("length must be m+1 (constant term first)"));
    }
    if *poly.last().unwrap() != 1 {
        return Err(FieldError::BadPoly("must be monic"));
    }
    if poly.iter().any(|&c| c >= p) {
        return Err(FieldError::BadPoly("coefficients must be reduced mod p"));
    }
    let q = p.checked_pow(m).filter(|&q| q <= MAX_Q).ok_or(FieldError::TooLarge {
        q: p.saturating_pow(m),
    })?;
    if m >= 2 && reducible(poly, p) {
        return Err(FieldError::Reducible { p });
    }

    let q = q as u32;
    let mu = m as usize;
    // digit decomposition of codes
    let digits = |code: u32| -> Vec<u64> {
        let mut v = vec![0u64; mu];
        let mut c = code as u64;
        for slot in v.iter_mut() {
            *slot = c % p;
            c /= p;
        }
        v
    };
    let code_of = |v: &[u64]| -> Scalar {
        let mut c = 0u64;
        for i in (0..mu).rev() {
            c = c * p + v.get(i).copied().unwrap_or(0);
        }
        c as Scalar
    };

    let mut add = vec![0 as Scalar; (q * q) as usize];
    let mut mul = vec![0 as Scalar; (q * q) as usize];
    let mut neg = vec![0 as Scalar; q as usize];
    for a in 0..q {
        let da = digits(a);
        let nd: Vec<u64> = da.iter().map(|&c| (p - c) % p).collect();
        neg[a as usize] = code_of(&nd);
        for b in 0..q {
            let db = digits(b);
            let sum: Vec<u64> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
            add[(a * q + b) as usize] = code_of(&sum);
            // multiply then reduce mod the defining polynomial
            let mut prod = vec![0u64; 2 * mu];
            for (i, &x) in da.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            let mut rem = if mu >= 2 { poly_rem(&prod, poly, p) } else { vec![prod[0] % p] };
            rem.resize(mu.max(1), 0);
            mul[(a * q + b) as usize] = code_of(&rem);
        }
    }
    let mut inv = vec![0 as Scalar; q as usize];
    for a in 1..q {
        for b in 1..q {
            if mul[(a * q + b) as usize] == 1 {
                inv[a as usize] = b as Scalar;
                break;
            }
        }
        debug_assert!(inv[a as usize] != 0, "every nonzero element must be invertible");
    }

    Ok(Field(Arc::new(Tables {
        spec: FieldSpec { p, m, poly: poly.to_vec() },
        q,
        add,
        mul,
        neg,
        inv,
    })))
}

impl Field {
    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }
    #[inline]
    pub fn p(&self) -> u64 {
        self.0.spec.p
    }
    #[inline]
    pub fn m(&self) -> u32 {
        self.0.spec.m
    }
    #[inline]
    pub fn q(&self) -> u32 {
        self.0.q
    }
    #[inline]
    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        self.0.add[(a as u32 * self.0.q + b as u32) as usize]
    }
    #[inline]
    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        self.add(a, self.neg(b))
    }
    #[inline]
    pub fn neg(&self, a: Scalar) -> Scalar {
        self.0.neg[a as usize]
    }
    #[inline]
    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        self.0.mul[(a as u32 * self.0.q + b as u32) as usize]
    }
    /// Multiplicative inverse. Panics on zero.
    #[inline]
    pub fn inv(&self, a: Scalar) -> Scalar {
        assert!(a != 0, "inverse of zero");
        self.0.inv[a as usize]
    }
    pub fn pow(&self, a: Scalar, mut e: u64) -> Scalar {
        let mut acc: Scalar = 1;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
    /// Frobenius a -> a^p.
    #[inline]
    pub fn frob(&self, a: Scalar) -> Scalar {
        self.pow(a, self.p())
    }
    /// Inverse of Frobenius: the unique b with b^p = a.
    pub fn frob_inv(&self, a: Scalar) -> Scalar {
        // x -> x^p has order m on GF(p^m), so the inverse is x -> x^(p^(m-1))
        let mut b = a;
        for _ in 0..self.m().saturating_sub(1) {
            b = self.frob(b);
        }
        b
    }
    /// Embed an integer through the prime subfield.
    pub fn from_int(&self, n: i64) -> Scalar {
        let p = self.p() as i64;
        (((n % p) + p) % p) as Scalar
    }
    /// The class of t (for m >= 2); for prime fields, -poly[0].
    pub fn gen(&self) -> Scalar {
        if self.m() >= 2 {
            self.p() as Scalar
        } else {
            self.neg(self.from_int(self.spec().poly[0] as i64))
        }
    }
    pub fn elements(&self) -> impl Iterator<Item = Scalar> {
        0..self.q() as Scalar
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.spec == other.0.spec
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m() == 1 {
            write!(f, "GF({})", self.p())
        } else {
            write!(f, "GF({}^{})", self.p(), self.m())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_specs() {
        assert_eq!(make_field(4, 1, &[0, 1]).unwrap_err(), FieldError::NotPrime(4));
        assert_eq!(make_field(1, 1, &[0, 1]).unwrap_err(), FieldError::NotPrime(1));
        // t^2 + 1 = (t+1)^2 over GF(2)
        assert_eq!(make_field(2, 2, &[1, 0, 1]).unwrap_err(), FieldError::Reducible { p: 2 });
        // t^2 - 1 over GF(3) has roots
        assert_eq!(make_field(3, 2, &[2, 0, 1]).unwrap_err(), FieldError::Reducible { p: 3 });
        assert!(make_field(2, 2, &[1, 1, 0]).is_err()); // not monic
    }

    #[test]
    fn gf4_arithmetic() {
        let f = make_field(2, 2, &[1, 1, 1]).unwrap();
        let w = f.gen();
        assert_eq!(w, 2);
        // w^2 = w + 1, w^3 = 1
        assert_eq!(f.mul(w, w), 3);
        assert_eq!(f.pow(w, 3), 1);
        assert_eq!(f.add(w, 1), 3);
        assert_eq!(f.inv(w), 3);
        // char 2: x + x = 0
        for a in f.elements() {
            assert_eq!(f.add(a, a), 0);
        }
    }

    fn check_axioms(f: &Field) {
        let els: Vec<Scalar> = f.elements().collect();
        for &a in &els {
            assert_eq!(f.add(a, f.neg(a)), 0);
            assert_eq!(f.mul(a, 1), a);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
                assert_eq!(f.mul(f.frob_inv(f.frob(a)), 1), a);
            }
            for &b in &els {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for &c in &els {
                    assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn axioms_exhaustive_small_fields() {
        for (p, m, poly) in [
            (2u64, 1u32, vec![0u64, 1]),
            (3, 1, vec![0, 1]),
            (5, 1, vec![0, 1]),
            (2, 2, vec![1, 1, 1]),
            (2, 3, vec![1, 1, 0, 1]),
            (3, 2, vec![1, 0, 1]),
            (2, 4, vec![1, 1, 0, 0, 1]),
        ] {
            check_axioms(&make_field(p, m, &poly).unwrap());
        }
    }

    #[test]
    fn frobenius_is_additive() {
        let f = make_field(3, 2, &[1, 0, 1]).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.frob(f.add(a, b)), f.add(f.frob(a), f.frob(b)));
            }
        }
    }
}

//! Small permutation groups by explicit element lists.
//!
//! Everything here is desk scale: groups are enumerated by breadth-first
//! closure from generators (guarded at 10^4 elements), and structural
//! queries — normalizers, centralizers, double cosets, complements — are
//! answered by direct sweeps over the element list. Permutations act on the
//! right: `(p * q)` means "apply p, then q", and points are 0-based
//! internally while the cycle I/O is 1-based.
//!
//! The complement search in `semidirect_check` is exhaustive over all
//! subgroups of the normalizer, with ties broken by lexicographic element
//! order, so the chosen complement is reproducible.

use std::fmt;
use thiserror::Error;

pub const MAX_GROUP_ORDER: usize = 10_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("group exceeds the enumeration guard of {MAX_GROUP_ORDER} elements")]
    TooLarge,
    #[error("the given group is not a subgroup of the ambient group")]
    NotSubgroup,
    #[error("invalid cycle: {0}")]
    BadCycle(String),
}

/// Why a semidirect decomposition check failed; the first violated
/// condition is reported.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SemidirectError {
    #[error("the given group is not a subgroup of the ambient group")]
    NotSubgroup,
    #[error("the subgroup is trivial or the whole group")]
    TrivialSubgroup,
    #[error("the normalizer splits over no complement subgroup")]
    NoComplement,
    #[error("double coset of {rep} has size {size}, expected {expected}")]
    DoubleCosetSize { rep: String, size: usize, expected: usize },
}

/// A permutation of {0, .., degree-1}, stored by its image vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u8).collect())
    }

    /// Build from 1-based cycles, e.g. `&[vec![1,2], vec![3,4]]` for (12)(34).
    /// Overlapping cycles compose left to right.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, GroupError> {
        let mut p = Perm::identity(degree);
        for cyc in cycles {
            let mut c = Perm::identity(degree);
            for w in cyc.windows(2) {
                let (a, b) = (w[0], w[1]);
                if a == 0 || b == 0 || a > degree || b > degree {
                    return Err(GroupError::BadCycle(format!("point out of range in {cyc:?}")));
                }
                c.0[a - 1] = (b - 1) as u8;
            }
            if cyc.len() >= 2 {
                let (last, first) = (cyc[cyc.len() - 1], cyc[0]);
                c.0[last - 1] = (first - 1) as u8;
            }
            // duplicate points inside one cycle leave c inconsistent; detect
            let mut seen = vec![false; degree];
            for &x in c.0.iter() {
                if seen[x as usize] {
                    return Err(GroupError::BadCycle(format!("repeated point in {cyc:?}")));
                }
                seen[x as usize] = true;
            }
            p = p.mul(&c);
        }
        Ok(p)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    /// Apply self, then other.
    pub fn mul(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm(inv)
    }

    /// Conjugate self^x = x^-1 * self * x.
    pub fn conj(&self, x: &Perm) -> Perm {
        x.inverse().mul(self).mul(x)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut p = self.clone();
        while !p.is_identity() {
            p = p.mul(self);
            k += 1;
        }
        k
    }

    /// Disjoint cycles on 1-based points, fixed points omitted, each cycle
    /// led by its smallest point, cycles sorted by leading point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = vec![start + 1];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cyc.push(x + 1);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycs = self.cycles();
        if cycs.is_empty() {
            return write!(f, "()");
        }
        for cyc in cycs {
            let parts: Vec<String> = cyc.iter().map(|x| x.to_string()).collect();
            if self.degree() <= 9 {
                write!(f, "({})", parts.join(""))?;
            } else {
                write!(f, "({})", parts.join(","))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A permutation group with its full, sorted element list.
#[derive(Clone, PartialEq, Eq)]
pub struct PermGroup {
    pub degree: usize,
    /// All elements, sorted lexicographically by image vector.
    pub elements: Vec<Perm>,
    pub generators: Vec<Perm>,
}

/// Enumerate the group generated by `gens` by breadth-first closure.
pub fn enumerate(degree: usize, gens: &[Perm]) -> Result<PermGroup, GroupError> {
    for g in gens {
        assert_eq!(g.degree(), degree, "generator degree mismatch");
    }
    let mut elements = vec![Perm::identity(degree)];
    let mut queue = vec![Perm::identity(degree)];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = x.mul(g);
            if let Err(pos) = elements.binary_search(&y) {
                elements.insert(pos, y.clone());
                queue.push(y);
                if elements.len() > MAX_GROUP_ORDER {
                    return Err(GroupError::TooLarge);
                }
            }
        }
    }
    Ok(PermGroup { degree, elements, generators: gens.to_vec() })
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            elements: vec![Perm::identity(degree)],
            generators: Vec::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|g| other.contains(g))
    }

    /// Wrap a closed element set as a group, recomputing a small generating
    /// set greedily (deterministic: sweep sorted elements, keep growers).
    pub fn from_elements(degree: usize, mut elements: Vec<Perm>) -> Self {
        elements.sort();
        elements.dedup();
        let mut gens: Vec<Perm> = Vec::new();
        let mut span = vec![Perm::identity(degree)];
        for e in &elements {
            if span.binary_search(e).is_err() {
                gens.push(e.clone());
                span = enumerate(degree, &gens).expect("subset of a small group").elements;
            }
        }
        debug_assert_eq!(span.len(), elements.len(), "element set must be closed");
        PermGroup { degree, elements, generators: gens }
    }

    /// Elements g with g^-1 * sub * g = sub.
    pub fn normalizer(&self, sub: &PermGroup) -> Result<PermGroup, GroupError> {
        if !sub.is_subgroup_of(self) {
            return Err(GroupError::NotSubgroup);
        }
        let els: Vec<Perm> = self
            .elements
            .iter()
            .filter(|g| sub.generators_or_all().iter().all(|s| sub.contains(&s.conj(g))))
            .cloned()
            .collect();
        Ok(PermGroup::from_elements(self.degree, els))
    }

    /// Elements commuting with everything in sub.
    pub fn centralizer(&self, sub: &PermGroup) -> Result<PermGroup, GroupError> {
        if !sub.is_subgroup_of(self) {
            return Err(GroupError::NotSubgroup);
        }
        let els: Vec<Perm> = self
            .elements
            .iter()
            .filter(|g| sub.generators_or_all().iter().all(|s| s.mul(g) == g.mul(s)))
            .cloned()
            .collect();
        Ok(PermGroup::from_elements(self.degree, els))
    }

    pub fn center(&self) -> PermGroup {
        self.centralizer(self).expect("a group is a subgroup of itself")
    }

    fn generators_or_all(&self) -> &[Perm] {
        if self.generators.is_empty() {
            &self.elements
        } else {
            &self.generators
        }
    }

    /// Partition of self into double cosets sub*g*sub, in order of their
    /// minimal representative. Each entry is (minimal representative, size).
    pub fn double_cosets(&self, sub: &PermGroup) -> Result<Vec<(Perm, usize)>, GroupError> {
        if !sub.is_subgroup_of(self) {
            return Err(GroupError::NotSubgroup);
        }
        let mut seen = vec![false; self.elements.len()];
        let mut out = Vec::new();
        for (i, g) in self.elements.iter().enumerate() {
            if seen[i] {
                continue;
            }
            let mut size = 0usize;
            for a in &sub.elements {
                for b in &sub.elements {
                    let x = a.mul(g).mul(b);
                    let j = self.elements.binary_search(&x).expect("closed");
                    if !seen[j] {
                        seen[j] = true;
                        size += 1;
                    }
                }
            }
            out.push((g.clone(), size));
        }
        Ok(out)
    }

    /// All subgroups, by breadth-first closure over generator extensions.
    /// Sorted by (order, lexicographic element list). Guarded: only sensible
    /// for small groups.
    pub fn all_subgroups(&self) -> Result<Vec<PermGroup>, GroupError> {
        if self.order() > 1000 {
            return Err(GroupError::TooLarge);
        }
        let mut found: Vec<Vec<Perm>> = vec![vec![Perm::identity(self.degree)]];
        let mut queue = found.clone();
        while let Some(s) = queue.pop() {
            for g in &self.elements {
                if s.binary_search(g).is_ok() {
                    continue;
                }
                let mut gens: Vec<Perm> = s.clone();
                gens.push(g.clone());
                let bigger = enumerate(self.degree, &gens)?.elements;
                if !found.contains(&bigger) {
                    found.push(bigger.clone());
                    queue.push(bigger);
                }
            }
        }
        let mut subs: Vec<PermGroup> = found
            .into_iter()
            .map(|els| PermGroup::from_elements(self.degree, els))
            .collect();
        subs.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
        Ok(subs)
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}> of order {}", gens.join(", "), self.order())
    }
}

/// Result of a successful semidirect decomposition around a subgroup.
#[derive(Debug, Clone)]
pub struct SemidirectData {
    pub normalizer: PermGroup,
    /// The complement: N_G(N) = N x| H, chosen as the lexicographically
    /// least complement among all subgroups of the normalizer.
    pub complement: PermGroup,
    /// Representatives of the double cosets NgN outside the normalizer.
    pub outside_reps: Vec<Perm>,
}

/// Check that the normalizer of `n` in `g` splits as a semidirect product
/// over `n`, and that every double coset of `n` outside the normalizer has
/// the full size |n|^2. These are the group-theoretic inputs for building a
/// twist through a subgroup pair; the characteristic condition is checked
/// at the algebra layer.
pub fn semidirect_check(g: &PermGroup, n: &PermGroup) -> Result<SemidirectData, SemidirectError> {
    if !n.is_subgroup_of(g) {
        return Err(SemidirectError::NotSubgroup);
    }
    if n.order() <= 1 || n.order() == g.order() {
        return Err(SemidirectError::TrivialSubgroup);
    }
    let norm = g.normalizer(n).expect("subgroup already verified");
    let target = norm.order() / n.order();
    let mut complement: Option<PermGroup> = None;
    for h in norm.all_subgroups().expect("normalizer is small") {
        if h.order() != target {
            continue;
        }
        let meets_trivially = h.elements.iter().filter(|x| n.contains(x)).count() == 1;
        if meets_trivially {
            // subgroups arrive sorted by (order, lex), so the first hit is
            // the lexicographically least complement
            complement = Some(h);
            break;
        }
    }
    let complement = complement.ok_or(SemidirectError::NoComplement)?;
    let expected = n.order() * n.order();
    let mut outside_reps = Vec::new();
    for (rep, size) in g.double_cosets(n).expect("subgroup already verified") {
        if norm.contains(&rep) {
            continue;
        }
        if size != expected {
            return Err(SemidirectError::DoubleCosetSize {
                rep: rep.to_string(),
                size,
                expected,
            });
        }
        outside_reps.push(rep);
    }
    Ok(SemidirectData { normalizer: norm, complement, outside_reps })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4() -> PermGroup {
        let a = Perm::from_cycles(4, &[vec![1, 2]]).unwrap();
        let b = Perm::from_cycles(4, &[vec![1, 2, 3, 4]]).unwrap();
        enumerate(4, &[a, b]).unwrap()
    }

    #[test]
    fn s4_enumeration() {
        let g = s4();
        assert_eq!(g.order(), 24);
        assert_eq!(g.elements[0], Perm::identity(4));
    }

    #[test]
    fn composition_is_left_to_right() {
        // (12) then (13): 1 -> 2 -> 2, 2 -> 1 -> 3, 3 -> 3 -> 1, i.e. (123)
        let a = Perm::from_cycles(3, &[vec![1, 2]]).unwrap();
        let b = Perm::from_cycles(3, &[vec![1, 3]]).unwrap();
        let c = Perm::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(a.mul(&b), c);
    }

    #[test]
    fn dihedral8_from_generators() {
        let r = Perm::from_cycles(4, &[vec![1, 2, 3, 4]]).unwrap();
        let s = Perm::from_cycles(4, &[vec![1, 3]]).unwrap();
        let d8 = enumerate(4, &[r, s]).unwrap();
        assert_eq!(d8.order(), 8);
        assert_eq!(d8.center().order(), 2);
    }

    #[test]
    fn too_large_guard() {
        // S_9 has order 362880 > 10^4
        let a = Perm::from_cycles(9, &[vec![1, 2]]).unwrap();
        let b = Perm::from_cycles(9, &[(1..=9).collect::<Vec<_>>()]).unwrap();
        assert_eq!(enumerate(9, &[a, b]).unwrap_err(), GroupError::TooLarge);
    }

    #[test]
    fn klein_normalizer_in_s4() {
        let g = s4();
        let n = enumerate(4, &[
            Perm::from_cycles(4, &[vec![1, 2]]).unwrap(),
            Perm::from_cycles(4, &[vec![3, 4]]).unwrap(),
        ])
        .unwrap();
        assert_eq!(n.order(), 4);
        let norm = g.normalizer(&n).unwrap();
        assert_eq!(norm.order(), 8);
        // the double cosets of N in S4: the normalizer splits into two of
        // size 4, the outside is one fat coset of size 16
        let dcs = g.double_cosets(&n).unwrap();
        let mut sizes: Vec<usize> = dcs.iter().map(|(_, s)| *s).collect();
        sizes.sort();
        assert_eq!(sizes, vec![4, 4, 16]);
    }

    #[test]
    fn not_subgroup_errors() {
        let g = s4();
        let h = enumerate(5, &[Perm::from_cycles(5, &[vec![1, 5]]).unwrap()]).unwrap();
        assert!(matches!(g.normalizer(&h), Err(GroupError::NotSubgroup)));
        let odd = enumerate(4, &[Perm::from_cycles(4, &[vec![1, 2, 3]]).unwrap()]).unwrap();
        // odd is a subgroup; centralizer works
        assert_eq!(g.centralizer(&odd).unwrap().order(), 3);
    }

    #[test]
    fn semidirect_complement_choices_are_lexicographic() {
        let g = s4();
        // N = <(12)>: normalizer is <(12),(34)>, complement must be <(34)>
        // ((34) = [1,2,4,3] precedes (12)(34) = [2,1,4,3] lexicographically)
        let n = enumerate(4, &[Perm::from_cycles(4, &[vec![1, 2]]).unwrap()]).unwrap();
        let data = semidirect_check(&g, &n).unwrap();
        assert_eq!(data.normalizer.order(), 4);
        assert_eq!(data.complement.order(), 2);
        assert!(data.complement.contains(&Perm::from_cycles(4, &[vec![3, 4]]).unwrap()));

        // N = Klein four inside its normalizer of order 8: complement <(13)(24)>
        let klein = enumerate(4, &[
            Perm::from_cycles(4, &[vec![1, 2]]).unwrap(),
            Perm::from_cycles(4, &[vec![3, 4]]).unwrap(),
        ])
        .unwrap();
        let data = semidirect_check(&g, &klein).unwrap();
        assert_eq!(data.normalizer.order(), 8);
        assert!(data
            .complement
            .contains(&Perm::from_cycles(4, &[vec![1, 3], vec![2, 4]]).unwrap()));
        assert_eq!(data.outside_reps.len(), 1);

        // N = <(1324)> cyclic of order 4: both <(34)> and <(12)> complement
        // it inside its dihedral normalizer; lex order picks <(34)>
        let c4 = enumerate(4, &[Perm::from_cycles(4, &[vec![1, 3, 2, 4]]).unwrap()]).unwrap();
        let data = semidirect_check(&g, &c4).unwrap();
        assert_eq!(data.normalizer.order(), 8);
        assert!(data.complement.contains(&Perm::from_cycles(4, &[vec![3, 4]]).unwrap()));
    }

    #[test]
    fn semidirect_rejects_bad_inputs() {
        let g = s4();
        let triv = PermGroup::trivial(4);
        assert_eq!(semidirect_check(&g, &triv).unwrap_err(), SemidirectError::TrivialSubgroup);

        // a Sylow 2-subgroup is self-normalizing, and distinct Sylow
        // 2-subgroups of S4 share the normal Klein four group, so outside
        // double cosets collapse below |N|^2 = 64
        let d8 = enumerate(4, &[
            Perm::from_cycles(4, &[vec![1, 2, 3, 4]]).unwrap(),
            Perm::from_cycles(4, &[vec![1, 3]]).unwrap(),
        ])
        .unwrap();
        match semidirect_check(&g, &d8) {
            Err(SemidirectError::DoubleCosetSize { expected: 64, size, .. }) => {
                assert!(size < 64)
            }
            other => panic!("expected a double coset size failure, got {other:?}"),
        }

        // inside C4 the unique order-2 subgroup has no complement
        let c4 = enumerate(4, &[Perm::from_cycles(4, &[vec![1, 2, 3, 4]]).unwrap()]).unwrap();
        let c2 = enumerate(4, &[Perm::from_cycles(4, &[vec![1, 3], vec![2, 4]]).unwrap()]).unwrap();
        assert_eq!(semidirect_check(&c4, &c2).unwrap_err(), SemidirectError::NoComplement);
    }

    #[test]
    fn display_uses_compact_cycles() {
        let p = Perm::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(p.to_string(), "(12)(34)");
        assert_eq!(Perm::identity(4).to_string(), "()");
    }
}

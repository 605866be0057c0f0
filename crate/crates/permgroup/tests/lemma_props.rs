//! Exhaustive structural checks on small p-groups.
//!
//! Two facts the twist construction leans on are verified mechanically over
//! a panel of 2- and 3-groups: for a subgroup of prime order p, (1) its
//! centralizer equals its normalizer, and (2) all of its double cosets have
//! size p or p^2. The panel covers dihedral, semidihedral, cyclic, and
//! elementary abelian cases plus every Sylow 2-subgroup of S4.

use permgroup::{enumerate, semidirect_check, Perm, PermGroup};

fn cyc(degree: usize, cycles: &[&[usize]]) -> Perm {
    let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
    Perm::from_cycles(degree, &cycles).unwrap()
}

fn s4() -> PermGroup {
    enumerate(4, &[cyc(4, &[&[1, 2]]), cyc(4, &[&[1, 2, 3, 4]])]).unwrap()
}

fn dihedral8() -> PermGroup {
    enumerate(4, &[cyc(4, &[&[1, 2, 3, 4]]), cyc(4, &[&[1, 3]])]).unwrap()
}

/// Semidihedral group of order 16: x -> x+1 and x -> 3x on Z/8.
fn semidihedral16() -> PermGroup {
    let r = cyc(8, &[&[1, 2, 3, 4, 5, 6, 7, 8]]);
    let s = cyc(8, &[&[2, 4], &[3, 7], &[6, 8]]);
    enumerate(8, &[r, s]).unwrap()
}

fn p_group_panel() -> Vec<(PermGroup, usize)> {
    let mut panel = vec![
        (dihedral8(), 2),
        (semidihedral16(), 2),
        (enumerate(8, &[cyc(8, &[&[1, 2, 3, 4, 5, 6, 7, 8]])]).unwrap(), 2),
        (enumerate(9, &[cyc(9, &[&[1, 2, 3, 4, 5, 6, 7, 8, 9]])]).unwrap(), 3),
        (enumerate(6, &[cyc(6, &[&[1, 2, 3]]), cyc(6, &[&[4, 5, 6]])]).unwrap(), 3),
    ];
    // every Sylow 2-subgroup of S4 (three dihedral conjugates)
    for sub in s4().all_subgroups().unwrap() {
        if sub.order() == 8 {
            panel.push((sub, 2));
        }
    }
    panel
}

#[test]
fn panel_sanity() {
    assert_eq!(semidihedral16().order(), 16);
    assert_eq!(semidihedral16().center().order(), 2);
    let sylows: Vec<PermGroup> = s4()
        .all_subgroups()
        .unwrap()
        .into_iter()
        .filter(|s| s.order() == 8)
        .collect();
    assert_eq!(sylows.len(), 3);
}

#[test]
fn order_p_subgroups_have_centralizer_equal_normalizer() {
    for (p_group, p) in p_group_panel() {
        for h in p_group.all_subgroups().unwrap() {
            if h.order() != p {
                continue;
            }
            let c = p_group.centralizer(&h).unwrap();
            let n = p_group.normalizer(&h).unwrap();
            assert_eq!(
                c.elements, n.elements,
                "centralizer != normalizer for {h:?} in {p_group:?}"
            );
        }
    }
}

#[test]
fn order_p_double_cosets_have_size_p_or_p_squared() {
    for (p_group, p) in p_group_panel() {
        for h in p_group.all_subgroups().unwrap() {
            if h.order() != p {
                continue;
            }
            for (rep, size) in p_group.double_cosets(&h).unwrap() {
                assert!(
                    size == p || size == p * p,
                    "double coset of {rep} in {p_group:?} has size {size}"
                );
            }
        }
    }
}

#[test]
fn double_cosets_partition_the_group() {
    for (p_group, _) in p_group_panel() {
        for h in p_group.all_subgroups().unwrap() {
            let total: usize = p_group.double_cosets(&h).unwrap().iter().map(|(_, s)| s).sum();
            assert_eq!(total, p_group.order());
        }
    }
}

/// Whenever the semidirect check passes, the complement really complements:
/// N * H = N_G(N) with trivial intersection, element by element.
#[test]
fn semidirect_success_postconditions_over_all_s4_subgroups() {
    let g = s4();
    let mut successes = 0;
    for n in g.all_subgroups().unwrap() {
        if n.order() <= 1 || n.order() == g.order() {
            continue;
        }
        let Ok(data) = semidirect_check(&g, &n) else { continue };
        successes += 1;
        let h = &data.complement;
        assert_eq!(h.order() * n.order(), data.normalizer.order());
        assert_eq!(h.elements.iter().filter(|x| n.contains(x)).count(), 1);
        let mut product: Vec<Perm> = Vec::new();
        for a in &n.elements {
            for b in &h.elements {
                let x = a.mul(b);
                if !product.contains(&x) {
                    product.push(x);
                }
            }
        }
        assert_eq!(product.len(), data.normalizer.order());
        assert!(product.iter().all(|x| data.normalizer.contains(x)));
    }
    assert!(successes >= 5, "expected several decomposable subgroups in S4");
}

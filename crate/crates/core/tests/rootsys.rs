use num_traits::Zero;
use temper_core::rat::{self, int, Rat};
use temper_core::{root_system, RootSystem, Series, WeightVec};

fn all_types() -> Vec<(Series, usize)> {
    let mut v = Vec::new();
    for l in 1..=8 {
        v.push((Series::A, l));
    }
    for l in 2..=8 {
        v.push((Series::B, l));
        v.push((Series::C, l));
    }
    for l in 3..=8 {
        v.push((Series::D, l));
    }
    v.extend([(Series::E, 6), (Series::E, 7), (Series::E, 8), (Series::F, 4), (Series::G, 2)]);
    v
}

/// Degrees of the basic invariants.
fn degrees(s: Series, l: usize) -> Vec<u128> {
    let l128 = l as u128;
    match s {
        Series::A => (2..=l128 + 1).collect(),
        Series::B | Series::C => (1..=l128).map(|i| 2 * i).collect(),
        Series::D => (1..l128).map(|i| 2 * i).chain([l128]).collect(),
        Series::E => match l {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
        },
        Series::F => vec![2, 6, 8, 12],
        Series::G => vec![2, 6],
    }
}

/// Cartan matrix `A[i][j] = <alpha_i, alpha_j^vee>` from the Dynkin diagram
/// with Bourbaki numbering.
fn cartan_from_diagram(s: Series, l: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; l]; l];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut bond = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i - 1][j - 1] = aij;
        a[j - 1][i - 1] = aji;
    };
    match s {
        Series::A => (1..l).for_each(|i| bond(i, i + 1, -1, -1)),
        Series::B => {
            (1..l - 1).for_each(|i| bond(i, i + 1, -1, -1));
            bond(l - 1, l, -2, -1);
        }
        Series::C => {
            (1..l - 1).for_each(|i| bond(i, i + 1, -1, -1));
            bond(l - 1, l, -1, -2);
        }
        Series::D => {
            (1..l - 1).for_each(|i| bond(i, i + 1, -1, -1));
            bond(l - 2, l, -1, -1);
        }
        Series::E => {
            bond(1, 3, -1, -1);
            bond(2, 4, -1, -1);
            (3..l).for_each(|i| bond(i, i + 1, -1, -1));
        }
        Series::F => {
            bond(1, 2, -1, -1);
            bond(2, 3, -2, -1);
            bond(3, 4, -1, -1);
        }
        Series::G => bond(1, 2, -1, -3),
    }
    a
}

fn rs(s: Series, l: usize) -> std::sync::Arc<RootSystem> {
    root_system(s, l).unwrap()
}

#[test]
fn cartan_matrices_match_dynkin_diagrams() {
    for (s, l) in all_types() {
        assert_eq!(rs(s, l).cartan, cartan_from_diagram(s, l), "{s}{l}");
    }
}

#[test]
fn positive_root_counts_and_weyl_orders_match_invariant_degrees() {
    for (s, l) in all_types() {
        let r = rs(s, l);
        let d = degrees(s, l);
        assert_eq!(r.weyl_group_order(), d.iter().product::<u128>(), "{s}{l}");
        assert_eq!(r.positive_roots.len() as u128, d.iter().map(|x| x - 1).sum::<u128>(), "{s}{l}");
    }
}

#[test]
fn regular_orbit_has_weyl_order_size() {
    for (s, l) in all_types() {
        let r = rs(s, l);
        if r.weyl_group_order() > 60_000 {
            continue;
        }
        let rho = r.from_labels(&vec![1; l]);
        assert_eq!(r.weyl_orbit(&rho).len() as u128, r.weyl_group_order(), "{s}{l}");
    }
}

#[test]
fn positive_roots_sum_to_twice_weyl_vector() {
    for (s, l) in all_types() {
        let r = rs(s, l);
        let mut sum = vec![Rat::zero(); r.ambient_dim];
        for a in &r.positive_roots {
            sum = rat::add(&sum, &a.0);
        }
        let rho = r.from_labels(&vec![1; l]);
        assert_eq!(sum, rat::scale(&rho.0, &int(2)), "{s}{l}");
    }
}

#[test]
fn simple_reflections_permute_roots() {
    for (s, l) in all_types() {
        let r = rs(s, l);
        let mut roots: Vec<WeightVec> = r.positive_roots.clone();
        roots.extend(r.positive_roots.iter().map(WeightVec::neg));
        roots.sort();
        for i in 0..l {
            let mut img: Vec<WeightVec> = roots.iter().map(|a| WeightVec(r.reflect(i, &a.0))).collect();
            img.sort();
            assert_eq!(img, roots, "{s}{l} reflection {i}");
        }
    }
}

#[test]
fn orbit_sizes_divide_weyl_order() {
    for (s, l) in all_types() {
        let r = rs(s, l);
        for i in 0..l {
            let mut labels = vec![0; l];
            labels[i] = 1;
            let n = r.weyl_orbit(&r.from_labels(&labels)).len() as u128;
            assert_eq!(r.weyl_group_order() % n, 0, "{s}{l} fundamental weight {}", i + 1);
        }
    }
}

#[test]
fn duality_is_an_involution() {
    for (s, l) in all_types() {
        let r = rs(s, l);
        for i in 0..l {
            for j in i..l {
                let mut labels = vec![0; l];
                labels[i] += 1;
                labels[j] += 1;
                assert_eq!(r.dual_labels(&r.dual_labels(&labels)), labels, "{s}{l}");
                let w = r.from_labels(&labels);
                let d = r.dual_highest_weight(&w).unwrap();
                assert_eq!(r.int_labels(&d.0).unwrap(), r.dual_labels(&labels));
            }
        }
    }
}

#[test]
fn duality_flips_diagram_only_where_expected() {
    // Self-dual unless A (l >= 2), D with odd l, or E6.
    for (s, l) in all_types() {
        let r = rs(s, l);
        let mut w1 = vec![0; l];
        w1[0] = 1;
        let self_dual = !(matches!(s, Series::A) && l >= 2 || s == Series::E && l == 6);
        if self_dual {
            assert_eq!(r.dual_labels(&w1), w1, "{s}{l}");
        } else {
            assert_ne!(r.dual_labels(&w1), w1, "{s}{l}");
        }
        if s == Series::D {
            let mut half = vec![0; l];
            half[l - 1] = 1;
            assert_eq!(r.dual_labels(&half) == half, l % 2 == 0, "{s}{l}");
        }
    }
}

#[test]
fn algebra_dimensions() {
    let dims = [
        ((Series::A, 1), 3),
        ((Series::B, 2), 10),
        ((Series::G, 2), 14),
        ((Series::F, 4), 52),
        ((Series::E, 6), 78),
        ((Series::E, 7), 133),
        ((Series::E, 8), 248),
        ((Series::D, 8), 120),
    ];
    for ((s, l), d) in dims {
        assert_eq!(rs(s, l).dim_algebra(), d);
    }
}

#[test]
fn too_small_ranks_are_rejected() {
    assert!(root_system(Series::A, 0).is_err());
    assert!(root_system(Series::B, 1).is_err());
    assert!(root_system(Series::D, 2).is_err());
    assert!(root_system(Series::E, 5).is_err());
    assert!(root_system(Series::G, 3).is_err());
}

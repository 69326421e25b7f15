use gghecke_core::hecke::{basis_of_kind, is_admissible};
use gghecke_core::intersect::intersect;
use gghecke_core::oracle::realization::MatrixModel;
use gghecke_core::oracle::{
    brute_constant, brute_intersect, coset_key, idempotent, in_double_coset, sandwich, unipotents, AlgebraOracle, OracleError,
    DEFAULT_BUDGET,
};
use gghecke_core::{BasisElem, CartanType, Field, Group, Hecke, Torus};

fn group(ty: CartanType, q: u32) -> Group {
    Group::new(ty, Field::of_order(q).unwrap()).unwrap()
}

fn all_basis(g: &Group) -> Vec<BasisElem> {
    (0..4).flat_map(|k| basis_of_kind(g, k)).collect()
}

#[test]
fn idempotent_squares_to_itself() {
    for (ty, q) in [(CartanType::A2, 2), (CartanType::A2, 3), (CartanType::B2, 3)] {
        let g = group(ty, q);
        let model = MatrixModel::new(&g);
        let e = idempotent(&g, &model);
        assert_eq!(e.len() as u64, (q as u64).pow(g.n_pos() as u32));
        assert_eq!(e.mul(&e, &model, DEFAULT_BUDGET).unwrap(), e);
    }
}

#[test]
fn sandwich_vanishes_off_the_basis() {
    for (ty, q) in [(CartanType::A2, 3), (CartanType::B2, 3)] {
        let g = group(ty, q);
        let model = MatrixModel::new(&g);
        let k = g.field();
        let rs = g.root_system();
        for w in rs.basis_weyl() {
            for a in k.units() {
                for b in k.units() {
                    let t = Torus::new(a, b).unwrap();
                    let n = model.canonical(&model.elem(&g.lift_torus(w, t)));
                    let ene = sandwich(&g, &model, &n, DEFAULT_BUDGET).unwrap();
                    assert_eq!(ene.is_empty(), !is_admissible(&g, w, t));
                }
            }
        }
    }
}

#[test]
fn budgets_are_enforced() {
    let g = group(CartanType::B2, 3);
    let model = MatrixModel::new(&g);
    let n = model.identity();
    assert_eq!(
        sandwich(&g, &model, &n, 100).unwrap_err(),
        OracleError::BudgetExceeded { needed: 81 * 81, budget: 100 }
    );
}

/// The scanned coset sets agree with the algorithm's representatives, and
/// every coset lies in both double cosets and is closed under right `U`.
#[test]
fn coset_sets_agree_with_intersect() {
    for (ty, q) in [(CartanType::A2, 2), (CartanType::A2, 3), (CartanType::B2, 3)] {
        let g = group(ty, q);
        let us = unipotents(&g);
        let basis = all_basis(&g);
        let step = if ty == CartanType::B2 { 2 } else { 1 };
        for i in basis.iter().step_by(step) {
            for j in basis.iter().step_by(step) {
                for k in basis.iter().step_by(step) {
                    let (l, m, n) = (i.point(&g), j.point(&g), k.point(&g));
                    let brute = brute_intersect(&g, l, m, n, DEFAULT_BUDGET).unwrap();
                    let mut algo: Vec<_> = intersect(&g, l, m, n).unwrap().iter().map(|r| coset_key(&g, &r.g)).collect();
                    algo.sort();
                    let keys: Vec<_> = brute.iter().map(|c| c.key).collect();
                    assert_eq!(keys, algo, "{ty} q={q} {i} {j} {k}");
                    for c in brute.iter().take(4) {
                        for u in us.iter().step_by(5) {
                            let h = g.multiply(&c.g, &g.from_unipotent(*u));
                            assert_eq!(coset_key(&g, &h), c.key);
                            assert!(in_double_coset(&g, &h, l));
                        }
                    }
                }
            }
        }
    }
}

/// Coset sums, explicit algebra products and the algorithm agree.
#[test]
fn three_way_agreement() {
    for (ty, q, step) in [(CartanType::A2, 2, 1), (CartanType::A2, 3, 3), (CartanType::B2, 3, 4)] {
        let g = group(ty, q);
        let h = Hecke::new(g.clone()).unwrap();
        let mut alg = AlgebraOracle::new(&g, DEFAULT_BUDGET);
        let basis = all_basis(&g);
        alg.prepare(&basis).unwrap();
        for (n, i) in basis.iter().enumerate() {
            for j in basis.iter().skip(n % step).step_by(step) {
                for k in &basis {
                    let s = h.structure_constant(i, j, k).unwrap();
                    assert_eq!(brute_constant(&g, i, j, k, DEFAULT_BUDGET).unwrap(), s, "{ty} q={q} {i} {j} {k}");
                    assert_eq!(alg.constant(i, j, k).unwrap(), s, "{ty} q={q} {i} {j} {k}");
                }
            }
        }
    }
}

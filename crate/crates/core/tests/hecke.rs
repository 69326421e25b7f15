use gghecke_core::hecke::{
    b2_s000_parts, basis_of_kind, is_admissible, psi, standard_basis, table_formula, table_formula_raw, table_formula_with, Reading,
    TableRow,
};
use gghecke_core::{BasisElem, CartanType, CycloNum, Field, Fq, Group, Hecke, HeckeError, HeckeVec, Torus, Unipotent};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn hecke(ty: CartanType, q: u32) -> Hecke {
    Hecke::new(Group::new(ty, Field::of_order(q).unwrap()).unwrap()).unwrap()
}

fn all_basis(g: &Group) -> Vec<BasisElem> {
    (0..4).flat_map(|k| basis_of_kind(g, k)).collect()
}

#[test]
fn basis_is_found_by_admissibility() {
    for (ty, q) in [(CartanType::A2, 2), (CartanType::A2, 3), (CartanType::A2, 4), (CartanType::A2, 5), (CartanType::B2, 3), (CartanType::B2, 5)] {
        let g = Group::new(ty, Field::of_order(q).unwrap()).unwrap();
        let basis = standard_basis(&g).unwrap();
        assert_eq!(basis.len() as u32, q * q);
        let mut expect = all_basis(&g);
        expect.sort();
        assert_eq!(basis, expect);
        let k = g.field();
        let ws = g.root_system().basis_weyl();
        for a in k.units() {
            for b in k.units() {
                let t = Torus::new(a, b).unwrap();
                assert!(is_admissible(&g, ws[0], t));
                assert_eq!(is_admissible(&g, ws[1], t), a == Fq::ONE);
                assert_eq!(is_admissible(&g, ws[2], t), b == Fq::ONE);
                assert_eq!(is_admissible(&g, ws[3], t), a == Fq::ONE && b == Fq::ONE);
            }
        }
    }
}

#[test]
fn psi_is_a_character_trivial_on_the_derived_subgroup() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (ty, q) in [(CartanType::A2, 4), (CartanType::B2, 5)] {
        let g = Group::new(ty, Field::of_order(q).unwrap()).unwrap();
        let n = g.n_pos();
        let rand_u = |rng: &mut ChaCha8Rng| {
            let c: Vec<Fq> = (0..n).map(|_| g.field().elem(rng.random_range(0..q)).unwrap()).collect();
            Unipotent::from_coords(&c)
        };
        for _ in 0..200 {
            let (u, v) = (rand_u(&mut rng), rand_u(&mut rng));
            assert_eq!(psi(&g, &g.unipotent_mul(&u, &v)), &psi(&g, &u) * &psi(&g, &v));
        }
        for beta in 2..n {
            for x in g.field().elements() {
                assert_eq!(psi(&g, &g.root_elem(beta, x)), CycloNum::one(g.field().p()));
            }
        }
    }
}

#[test]
fn basis_elem_parsing_and_display() {
    let k = Field::prime(5).unwrap();
    let e = |c| k.elem(c).unwrap();
    let b = BasisElem::new(0, &[e(2), e(1)]).unwrap();
    assert_eq!(b, BasisElem::E0(e(2), e(1)));
    assert_eq!(b.to_string(), "0:2,1");
    assert_eq!(BasisElem::E3.to_string(), "3:");
    assert_eq!(BasisElem::new(1, &[]), Err(HeckeError::Arity { kind: 1, expected: 1, got: 0 }));
    assert_eq!(BasisElem::new(2, &[Fq::ZERO]), Err(HeckeError::ZeroParameter));
    assert_eq!(BasisElem::new(7, &[]), Err(HeckeError::BadKind(7)));
}

#[test]
fn small_constants() {
    let h = hecke(CartanType::A2, 3);
    let k = h.group().field().clone();
    let e = |c| k.elem(c).unwrap();
    // S_{21}^3 = q² with every summand equal to 1.
    for d in k.units() {
        let c = k.neg(d);
        let s = h.structure_constant(&BasisElem::E2(d), &BasisElem::E1(c), &BasisElem::E3).unwrap();
        assert_eq!(s, CycloNum::from_int(3, 9));
        let terms = h.terms(&BasisElem::E2(d), &BasisElem::E1(c), &BasisElem::E3).unwrap();
        assert!(terms.iter().all(|t| t.arg.is_zero() && t.j == vec![2, 1]));
    }
    let s = h.structure_constant(&BasisElem::E1(e(1)), &BasisElem::E1(e(1)), &BasisElem::E2(e(2))).unwrap();
    assert_eq!(s, CycloNum::from_int(3, 3));
}

#[test]
fn unit_acts_as_identity() {
    for (ty, q) in [(CartanType::A2, 3), (CartanType::B2, 3)] {
        let h = hecke(ty, q);
        let p = h.group().field().p();
        for b in all_basis(h.group()) {
            assert_eq!(h.multiply(&BasisElem::E3, &b).unwrap(), HeckeVec::basis(p, b));
            assert_eq!(h.multiply(&b, &BasisElem::E3).unwrap(), HeckeVec::basis(p, b));
        }
    }
}

#[test]
fn commutativity() {
    for (ty, q) in [(CartanType::A2, 2), (CartanType::A2, 3), (CartanType::B2, 3)] {
        let h = hecke(ty, q);
        let basis = all_basis(h.group());
        for (n, i) in basis.iter().enumerate() {
            for j in &basis[n + 1..] {
                assert_eq!(h.multiply(i, j).unwrap(), h.multiply(j, i).unwrap(), "{ty} q={q} {i} {j}");
            }
        }
    }
}

#[test]
fn associativity_on_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (ty, q) in [(CartanType::A2, 3), (CartanType::B2, 3)] {
        let h = hecke(ty, q);
        let p = h.group().field().p();
        let basis = all_basis(h.group());
        for _ in 0..40 {
            let [i, j, k] = [0; 3].map(|_| *basis.choose(&mut rng).unwrap());
            let left = h.multiply_vec(&h.multiply(&i, &j).unwrap(), &HeckeVec::basis(p, k)).unwrap();
            let right = h.multiply_vec(&HeckeVec::basis(p, i), &h.multiply(&j, &k).unwrap()).unwrap();
            assert_eq!(left, right, "{ty} {i} {j} {k}");
        }
    }
}

#[test]
fn generation_identity() {
    for q in [2, 3, 5] {
        let h = hecke(CartanType::A2, q);
        let k = h.group().field().clone();
        for x in k.units() {
            for y in k.units() {
                let got = h.generation_expand(x, y).unwrap();
                assert_eq!(got, HeckeVec::basis(k.p(), BasisElem::E0(x, y)), "q={q} x={x} y={y}");
            }
        }
    }
    assert_eq!(hecke(CartanType::B2, 3).generation_expand(Fq::ONE, Fq::ONE), Err(HeckeError::NotA2));
}

/// Summands for `j = [0,2,0,2]` in B2 `S_{00}^0`, written out by hand from the
/// two factorizations of the representative.
#[test]
fn summands_of_the_worked_example() {
    let h = hecke(CartanType::B2, 5);
    let k = h.group().field().clone();
    let mut checked = 0;
    for i in basis_of_kind(h.group(), 0) {
        for j in basis_of_kind(h.group(), 0).into_iter().step_by(3) {
            for z in basis_of_kind(h.group(), 0).into_iter().step_by(5) {
                let (BasisElem::E0(_, _), BasisElem::E0(a2, _), BasisElem::E0(a3, b3)) = (i, j, z) else { unreachable!() };
                for t in h.terms(&i, &j, &z).unwrap() {
                    if t.j != vec![0, 2, 0, 2] {
                        continue;
                    }
                    let m = t.mu.values();
                    let (x1, x3, x4) = (m[0], m[2], m[3]);
                    let f = |v: &[Fq]| v.iter().fold(Fq::ZERO, |a, &b| k.add(a, b));
                    let expect = f(&[
                        k.neg(x1),
                        k.neg(k.recip(k.mul(a3, x1))),
                        k.neg(k.div(x4, k.mul(a2, x3))),
                        k.recip(k.mul(a2, x1)),
                        x4,
                        k.neg(k.div(k.mul(k.mul(x1, x1), x4), k.mul(b3, k.mul(x3, x3)))),
                        k.div(k.mul(k.from_int(2), x1), k.mul(b3, x3)),
                    ]);
                    assert_eq!(t.arg, expect);
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn b2_s000_is_the_sum_of_its_parts() {
    let h = hecke(CartanType::B2, 3);
    let g = h.group();
    for i in basis_of_kind(g, 0) {
        for j in basis_of_kind(g, 0) {
            for k in basis_of_kind(g, 0) {
                let mut params = i.params();
                params.extend(j.params());
                params.extend(k.params());
                let parts = b2_s000_parts(g, params.try_into().unwrap());
                let sum = &(&parts[0] + &parts[1]) + &parts[2];
                assert_eq!(sum, h.structure_constant(&i, &j, &k).unwrap());
                assert_eq!(sum, table_formula(g, &i, &j, &k).unwrap());
            }
        }
    }
}

#[test]
fn corrected_tables_match_at_small_q() {
    for (ty, q) in [(CartanType::A2, 2), (CartanType::A2, 3), (CartanType::A2, 4), (CartanType::B2, 3)] {
        let h = hecke(ty, q);
        let basis = all_basis(h.group());
        for i in &basis {
            for j in &basis {
                for k in &basis {
                    let alg = h.structure_constant(i, j, k).unwrap();
                    let tab = table_formula_with(h.group(), i, j, k, Reading::Corrected).unwrap();
                    assert_eq!(alg, tab, "{ty} q={q} {i} {j} {k}");
                }
            }
        }
    }
}

#[test]
fn table_examples() {
    let h = hecke(CartanType::A2, 5);
    let g = h.group();
    let k = g.field();
    let e = |c| k.elem(c).unwrap();
    // S_{12}^0 = δ_{a3 c1, b3 d2} φ(a3/d2).
    for (c1, d2, a3, b3) in [(1, 2, 2, 1), (1, 2, 3, 1), (4, 4, 1, 1)] {
        let (c1, d2, a3, b3) = (e(c1), e(d2), e(a3), e(b3));
        let want = if k.mul(a3, c1) == k.mul(b3, d2) {
            gghecke_core::cyclo::phi(k, k.div(a3, d2))
        } else {
            CycloNum::zero(5)
        };
        let got = table_formula(g, &BasisElem::E1(c1), &BasisElem::E2(d2), &BasisElem::E0(a3, b3)).unwrap();
        assert_eq!(got, want);
    }
    assert!(matches!(
        table_formula_raw(g, TableRow::new(0, 0, 0), &[Fq::ONE; 3], Reading::Published),
        Err(HeckeError::Arity { .. })
    ));
    assert_eq!(
        table_formula_raw(g, TableRow::new(0, 5, 0), &[], Reading::Published),
        Err(HeckeError::UnknownRow(0, 5, 0))
    );
}

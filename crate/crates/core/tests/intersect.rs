use gghecke_core::hecke::basis_of_kind;
use gghecke_core::intersect::{distinguished_subexprs, intersect, part_one, uxu_product, zuy_product, IntersectionPlan, Subexpr};
use gghecke_core::{CartanType, Field, Fq, Group, RootSystem, Torus, Unipotent};

/// J-sets with type strings for every triple `(i, j, k)` of basis kinds that
/// has a nonempty set; all others are empty.
const A2_J: &[(&str, &[(&str, &str)])] = &[
    ("000", &[("000", "BBB"), ("101", "CBA")]),
    ("001", &[("020", "BAB")]),
    ("002", &[("100", "ABB")]),
    ("003", &[("121", "AAA")]),
    ("010", &[("020", "BCB")]),
    ("011", &[("101", "CBA")]),
    ("012", &[("120", "ACB")]),
    ("020", &[("001", "BBC")]),
    ("021", &[("021", "BAC")]),
    ("022", &[("101", "ABC")]),
    ("030", &[("121", "CCC")]),
    ("100", &[("00", "BB")]),
    ("101", &[("02", "BA")]),
    ("102", &[("10", "AB")]),
    ("110", &[("02", "BC")]),
    ("112", &[("12", "AC")]),
    ("120", &[("10", "CB")]),
    ("123", &[("12", "AA")]),
    ("131", &[("12", "CC")]),
    ("200", &[("00", "BB")]),
    ("201", &[("20", "AB")]),
    ("202", &[("01", "BA")]),
    ("210", &[("20", "CB")]),
    ("213", &[("21", "AA")]),
    ("220", &[("01", "BC")]),
    ("221", &[("21", "AC")]),
    ("232", &[("21", "CC")]),
    ("300", &[("", "")]),
    ("311", &[("", "")]),
    ("322", &[("", "")]),
    ("333", &[("", "")]),
];

const B2_J: &[(&str, &[(&str, &str)])] = &[
    ("000", &[("0000", "BBBB"), ("0202", "BCBA"), ("1010", "CBAB")]),
    ("001", &[("1000", "ABBB"), ("1202", "ACBA")]),
    ("002", &[("0200", "BABB"), ("1012", "CBAA")]),
    ("003", &[("1212", "AAAA")]),
    ("010", &[("0010", "BBCB"), ("1202", "CCBA")]),
    ("011", &[("1010", "ABCB")]),
    ("012", &[("0210", "BACB")]),
    ("020", &[("0002", "BBBC"), ("1012", "CBAC")]),
    ("021", &[("1002", "ABBC")]),
    ("022", &[("0202", "BABC")]),
    ("030", &[("1212", "CCCC")]),
    ("100", &[("000", "BBB"), ("202", "CBA")]),
    ("101", &[("010", "BAB")]),
    ("102", &[("200", "ABB")]),
    ("110", &[("010", "BCB")]),
    ("111", &[("202", "CBA")]),
    ("112", &[("210", "ACB")]),
    ("113", &[("212", "AAA")]),
    ("120", &[("002", "BBC")]),
    ("121", &[("012", "BAC")]),
    ("122", &[("202", "ABC")]),
    ("131", &[("212", "CCC")]),
    ("200", &[("000", "BBB"), ("101", "CBA")]),
    ("201", &[("100", "ABB")]),
    ("202", &[("020", "BAB")]),
    ("210", &[("001", "BBC")]),
    ("211", &[("101", "ABC")]),
    ("212", &[("021", "BAC")]),
    ("220", &[("020", "BCB")]),
    ("221", &[("120", "ACB")]),
    ("222", &[("101", "CBA")]),
    ("223", &[("121", "AAA")]),
    ("232", &[("121", "CCC")]),
    ("300", &[("", "")]),
    ("311", &[("", "")]),
    ("322", &[("", "")]),
    ("333", &[("", "")]),
];

fn render(subs: &[Subexpr]) -> Vec<(String, String)> {
    subs.iter().map(|s| (s.j_string(), s.type_string())).collect()
}

#[test]
fn j_sets_and_types() {
    for (ty, table) in [(CartanType::A2, A2_J), (CartanType::B2, B2_J)] {
        let rs = RootSystem::new(ty);
        let b = rs.basis_weyl();
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    let key = format!("{i}{j}{k}");
                    let got = render(&distinguished_subexprs(&rs, b[i], b[j], b[k]));
                    let want: Vec<(String, String)> = table
                        .iter()
                        .find(|(r, _)| *r == key)
                        .map(|(_, v)| v.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect())
                        .unwrap_or_default();
                    assert_eq!(got, want, "{ty} {key}");
                }
            }
        }
    }
}

#[test]
fn a2_length_two_example() {
    let rs = RootSystem::new(CartanType::A2);
    let b = rs.basis_weyl();
    let subs = distinguished_subexprs(&rs, b[2], b[1], b[3]);
    assert_eq!(render(&subs), vec![("21".to_string(), "AA".to_string())]);
}

/// Evaluates the worked B2 `J(w0, w0, w0)` fixtures for every `μ`.
#[test]
fn b2_worked_fixtures() {
    for q in [3, 5, 7] {
        let k = Field::prime(q).unwrap();
        let g = Group::new(CartanType::B2, k.clone()).unwrap();
        let rs = g.root_system();
        let w0 = rs.longest();
        let n = |v: i64| k.from_int(v);
        let (add, mul, div, neg) = (|a, b| k.add(a, b), |a, b| k.mul(a, b), |a, b| k.div(a, b), |a| k.neg(a));
        let torus = |a, b| Torus::new(a, b).unwrap();
        let uni = |c: [Fq; 4]| Unipotent::from_coords(&c);
        let sq = |x| mul(x, x);
        let mut seen = 0;
        for sub in distinguished_subexprs(rs, w0, w0, w0) {
            for mu in sub.mu_values(&g) {
                let p = part_one(&g, &sub, &mu).unwrap();
                let [x1, x2, x3, x4] = [mu.values()[0], mu.values()[1], mu.values()[2], mu.values()[3]];
                let z = Fq::ZERO;
                match sub.j_string().as_str() {
                    "0202" => {
                        assert_eq!(x2, Fq::ONE);
                        assert_eq!(p.u_j, uni([neg(x1), x4, x3, z]));
                        assert_eq!(p.t_zero, torus(n(-1), n(1)));
                        assert!(p.v_j.is_identity());
                        let u2 = div(mul(x1, k.sub(mul(x1, x4), mul(n(2), x3))), sq(x3));
                        assert_eq!(p.u_prime, uni([k.recip(x1), u2, k.recip(x3), z]));
                        assert_eq!(p.t_mu, torus(sq(x1), div(sq(x3), sq(x1))));
                        let v1 = div(k.sub(x3, mul(x1, x4)), mul(x1, x3));
                        assert_eq!(p.v_prime, uni([v1, z, k.recip(x3), div(x4, sq(x3))]));
                    }
                    "1010" => {
                        assert_eq!(x1, Fq::ONE);
                        assert_eq!(p.u_j, uni([x3, neg(x4), z, neg(x2)]));
                        assert_eq!(p.t_zero, Torus::ONE);
                        let u2 = add(k.recip(x4), div(sq(x3), x2));
                        assert_eq!(p.u_prime, uni([z, u2, neg(div(x3, x2)), k.recip(x2)]));
                        assert_eq!(p.t_mu, torus(div(x2, x4), sq(x4)));
                        assert_eq!(p.v_prime, uni([div(mul(x3, x4), x2), k.recip(x4), z, k.recip(x2)]));
                    }
                    "0000" => {
                        let u_j = uni([neg(add(x1, x3)), neg(add(x2, x4)), neg(mul(x2, x3)), neg(mul(x2, sq(x3)))]);
                        assert_eq!(p.u_j, u_j);
                        assert_eq!(p.t_zero, Torus::ONE);
                        let num = add(mul(sq(x1), x2), mul(x4, add(mul(x1, add(x1, mul(n(2), x3))), sq(x3))));
                        let u_prime = uni([
                            k.recip(x1),
                            div(num, mul(mul(x2, sq(x3)), x4)),
                            neg(div(add(x1, x3), mul(mul(x1, x2), x3))),
                            k.recip(mul(sq(x1), x2)),
                        ]);
                        assert_eq!(p.u_prime, u_prime);
                        assert_eq!(p.t_mu, torus(div(mul(sq(x1), x2), x4), div(mul(sq(x3), sq(x4)), sq(x1))));
                        let v_prime = uni([
                            div(add(mul(x1, x2), mul(x4, add(x1, x3))), mul(mul(x1, x2), x3)),
                            k.recip(x4),
                            neg(k.recip(mul(x3, x4))),
                            div(add(x2, x4), mul(mul(x2, sq(x3)), x4)),
                        ]);
                        assert_eq!(p.v_prime, v_prime);
                    }
                    other => panic!("unexpected subexpression {other}"),
                }
                seen += 1;
            }
        }
        let q = q as usize;
        assert_eq!(seen, (q - 1) * (q - 1) * q + (q - 1) * q * (q - 1) + (q - 1).pow(4));
    }
}

/// Both factorizations of each representative multiply to the same element,
/// the representatives lie in distinct left cosets, and the toral condition
/// holds.
#[test]
fn representatives_are_consistent() {
    for (ty, q) in [(CartanType::A2, 3), (CartanType::A2, 4), (CartanType::B2, 3)] {
        let g = Group::new(ty, Field::of_order(q).unwrap()).unwrap();
        let mut triples = 0;
        for ki in 0..4 {
            for kj in 0..4 {
                for kk in 0..4 {
                    for x in basis_of_kind(&g, ki).into_iter().take(3) {
                        for y in basis_of_kind(&g, kj).into_iter().take(3) {
                            for z in basis_of_kind(&g, kk).into_iter().take(3) {
                                let reps = intersect(&g, x.point(&g), y.point(&g), z.point(&g)).unwrap();
                                let mut keys = std::collections::BTreeSet::new();
                                for r in &reps {
                                    assert_eq!(uxu_product(&g, &r.uxu), r.g);
                                    assert_eq!(zuy_product(&g, &r.zuy), r.g);
                                    let inv = g.invert(&r.g);
                                    assert!(keys.insert((inv.t, inv.w, inv.v)));
                                }
                                triples += 1;
                            }
                        }
                    }
                }
            }
        }
        assert!(triples > 0);
    }
}

#[test]
fn plan_counts_every_mu() {
    let g = Group::new(CartanType::B2, Field::prime(5).unwrap()).unwrap();
    let rs = g.root_system();
    let w0 = rs.longest();
    let plan = IntersectionPlan::new(&g, w0, w0, w0).unwrap();
    let expect: u64 = plan.subs.iter().map(|s| s.mu_count(5)).sum();
    assert_eq!(plan.total() as u64, expect);
}

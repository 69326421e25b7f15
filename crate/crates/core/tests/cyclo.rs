use gghecke_core::cyclo::{gauss_sum, kloosterman, kloosterman_s, phi, phi_sum, quad_char_sum, CharSum};
use gghecke_core::{CycloNum, Field, Fq, Rational};
use proptest::prelude::*;

const SMALL: [u32; 7] = [2, 3, 4, 5, 7, 8, 9];

fn int(p: u32, n: i64) -> CycloNum {
    CycloNum::from_int(p, n)
}

/// Complex embedding `ζ ↦ e^{2πi/p}`, used only as a floating-point cross-check.
fn embed(x: &CycloNum) -> (f64, f64) {
    let p = x.p() as f64;
    x.coeffs().iter().enumerate().fold((0.0, 0.0), |(re, im), (i, c)| {
        let c = *c.numer() as f64 / *c.denom() as f64;
        let t = 2.0 * std::f64::consts::PI * i as f64 / p;
        (re + c * t.cos(), im + c * t.sin())
    })
}

#[test]
fn phi_examples() {
    let f3 = Field::prime(3).unwrap();
    assert_eq!(phi(&f3, Fq::ZERO), int(3, 1));
    assert_eq!(phi(&f3, Fq::ONE), CycloNum::zeta_pow(3, 1));
    assert_eq!(CycloNum::zeta_pow(5, 4), -&(&(&int(5, 1) + &CycloNum::zeta_pow(5, 1)) + &(&CycloNum::zeta_pow(5, 2) + &CycloNum::zeta_pow(5, 3))));
    assert_eq!(CycloNum::zeta_pow(2, 1), int(2, -1));
}

#[test]
fn phi_is_a_character() {
    for q in SMALL {
        let k = Field::of_order(q).unwrap();
        for a in k.elements() {
            for b in k.elements() {
                assert_eq!(&phi(&k, a) * &phi(&k, b), phi(&k, k.add(a, b)));
            }
        }
    }
}

#[test]
fn rendering() {
    assert_eq!(int(3, 3).to_string(), "3");
    assert_eq!(CycloNum::zero(5).to_string(), "0");
    let x = CycloNum::from_coeffs(5, vec![Rational::new(3, 1), Rational::new(-1, 1), Rational::new(1, 2), Rational::new(0, 1)]);
    assert_eq!(x.to_string(), "3 - z + 1/2*z^2");
    assert_eq!(CycloNum::zeta_pow(7, 3).to_string(), "z^3");
}

#[test]
fn orthogonality_relations() {
    for q in SMALL {
        let k = Field::of_order(q).unwrap();
        let p = k.p();
        let qi = q as i64;
        assert!(phi_sum(&k, k.elements()).is_zero());
        // Σ_{x ≠ 0} φ(ax) = −1 + q δ_{a,0}.
        for a in k.elements() {
            let lhs = phi_sum(&k, k.units().map(|x| k.mul(a, x)));
            assert_eq!(lhs, int(p, -1 + if a.is_zero() { qi } else { 0 }));
        }
        // Σ_{x ≠ 0} φ(ax + b/x) = Σ_{x ≠ 0} φ(x + ab/x) + q δ_{a,0} δ_{b,0}.
        for a in k.elements() {
            for b in k.elements() {
                let lhs = phi_sum(&k, k.units().map(|x| k.add(k.mul(a, x), k.div(b, x))));
                let ab = k.mul(a, b);
                let rhs = phi_sum(&k, k.units().map(|x| k.add(x, k.div(ab, x))));
                let extra = if a.is_zero() && b.is_zero() { qi } else { 0 };
                assert_eq!(lhs, &rhs + &int(p, extra));
            }
        }
        // Σ_{ζ^r = d} Σ_x φ(x(a − cζ)) = q δ_{d, (a/c)^r}.
        for r in [2u32, 3] {
            for a in k.elements() {
                for c in k.units() {
                    for d in k.units() {
                        let mut acc = CharSum::new(p);
                        for z in k.rth_roots(d, r) {
                            let s = k.sub(a, k.mul(c, z));
                            for x in k.elements() {
                                acc.push(&k, k.mul(x, s));
                            }
                        }
                        let hit = k.pow(k.div(a, c), r as i64) == d;
                        assert_eq!(acc.value(), int(p, if hit { qi } else { 0 }));
                    }
                }
            }
        }
    }
}

#[test]
fn gauss_sum_squares() {
    assert!(gauss_sum(&Field::prime(2).unwrap()).is_zero());
    assert!(gauss_sum(&Field::of_order(4).unwrap()).is_zero());
    for (q, sign) in [(5, 1), (13, 1), (3, -1), (7, -1), (11, -1), (9, 1)] {
        let k = Field::of_order(q).unwrap();
        let g = gauss_sum(&k);
        assert_eq!(&g * &g, int(k.p(), sign * q as i64), "q = {q}");
        assert_eq!(g, quad_char_sum(&k, Fq::ONE, Fq::ZERO, Fq::ZERO));
        let expect = if k.is_square(k.from_int(-1)) { 1 } else { -1 };
        assert_eq!(sign, expect);
    }
}

#[test]
fn quadratic_sums_complete_the_square() {
    for q in SMALL {
        let k = Field::of_order(q).unwrap();
        let p = k.p();
        let g = gauss_sum(&k);
        for a in k.elements() {
            for b in k.elements() {
                for c in k.elements() {
                    let s = quad_char_sum(&k, a, b, c);
                    let expect = if a.is_zero() {
                        if b.is_zero() { &int(p, q as i64) * &phi(&k, c) } else { CycloNum::zero(p) }
                    } else if p == 2 {
                        if a == k.mul(b, b) { &int(p, q as i64) * &phi(&k, c) } else { CycloNum::zero(p) }
                    } else {
                        let four_a = k.mul(k.from_int(4), a);
                        let shift = k.sub(c, k.div(k.mul(b, b), four_a));
                        let eta = if k.is_square(a) { 1 } else { -1 };
                        &(&g * &phi(&k, shift)) * &int(p, eta)
                    };
                    assert_eq!(s, expect);
                }
            }
        }
    }
}

#[test]
fn kloosterman_examples() {
    let f5 = Field::prime(5).unwrap();
    let two = f5.elem(2).unwrap();
    assert!(kloosterman_s(&f5, 2, two, Fq::ONE, Fq::ONE).is_zero());
    assert_eq!(kloosterman_s(&f5, 4, Fq::ONE, Fq::ZERO, Fq::ZERO), int(5, 4));
    let expect = &CycloNum::zeta_pow(5, 2) + &CycloNum::zeta_pow(5, 3);
    assert_eq!(kloosterman_s(&f5, 2, Fq::ONE, Fq::ONE, Fq::ONE), expect);
    // S̃ with a′ = b′ = 0 reduces to S.
    let f7 = Field::prime(7).unwrap();
    let (a, b) = (f7.elem(3).unwrap(), f7.elem(5).unwrap());
    assert_eq!(kloosterman(&f7, 3, Fq::ONE, a, b, Fq::ZERO, Fq::ZERO), kloosterman_s(&f7, 3, Fq::ONE, a, b));
}

#[test]
fn kloosterman_symmetry() {
    for q in SMALL {
        let k = Field::of_order(q).unwrap();
        for l in 1..q {
            if (q - 1) % l != 0 {
                continue;
            }
            for a in k.elements() {
                for b in k.elements() {
                    assert_eq!(kloosterman_s(&k, l, Fq::ONE, a, b), kloosterman_s(&k, l, Fq::ONE, b, a));
                }
            }
        }
    }
}

fn cyclo(p: u32) -> impl Strategy<Value = CycloNum> {
    prop::collection::vec((-20i128..20, 1i128..6), p as usize - 1)
        .prop_map(move |cs| CycloNum::from_coeffs(p, cs.into_iter().map(|(n, d)| Rational::new(n, d)).collect()))
}

fn triple() -> impl Strategy<Value = (CycloNum, CycloNum, CycloNum)> {
    prop::sample::select(vec![2u32, 3, 5, 7]).prop_flat_map(|p| (cyclo(p), cyclo(p), cyclo(p)))
}

proptest! {
    #[test]
    fn ring_axioms((a, b, c) in triple()) {
        let p = a.p();
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &CycloNum::one(p), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn embedding_is_a_homomorphism((a, b, _c) in triple()) {
        let (ar, ai) = embed(&a);
        let (br, bi) = embed(&b);
        let (pr, pi) = embed(&(&a * &b));
        prop_assert!((pr - (ar * br - ai * bi)).abs() < 1e-6);
        prop_assert!((pi - (ar * bi + ai * br)).abs() < 1e-6);
        let (cr, ci) = embed(&a.conj());
        prop_assert!((cr - ar).abs() < 1e-6 && (ci + ai).abs() < 1e-6);
    }

    #[test]
    fn canonical_form_is_idempotent(counts in prop::collection::vec(-5i64..5, 7)) {
        let x = CycloNum::from_exponent_counts(7, &counts);
        let full: Vec<Rational> = x.coeffs().iter().copied().chain([Rational::from_integer(0)]).collect();
        prop_assert_eq!(CycloNum::from_redundant(7, &full), x.clone());
        let shifted: Vec<i64> = counts.iter().map(|c| c + 3).collect();
        prop_assert_eq!(CycloNum::from_exponent_counts(7, &shifted), x);
    }
}

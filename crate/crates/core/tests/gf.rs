use gghecke_core::gf::prime_power;
use gghecke_core::{Field, Fq, GfError};
use proptest::prelude::*;

const ORDERS: [u32; 9] = [2, 3, 4, 5, 7, 8, 9, 11, 13];

/// Schoolbook arithmetic on coefficient vectors, independent of the tables.
struct Poly {
    p: u32,
    m: Vec<u32>,
}

impl Poly {
    fn of(k: &Field) -> Poly {
        Poly { p: k.p(), m: k.modulus().to_vec() }
    }

    fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = self.m.len() - 1;
        let mut prod = vec![0u32; 2 * f];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        for d in (f..prod.len()).rev() {
            let c = prod[d];
            prod[d] = 0;
            for (i, &mi) in self.m[..f].iter().enumerate() {
                prod[d - f + i] = (prod[d - f + i] + c * (self.p - mi)) % self.p;
            }
        }
        prod.truncate(f);
        prod
    }

    fn add(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    fn frob_trace(&self, a: &[u32]) -> u32 {
        let f = self.m.len() - 1;
        let mut acc = vec![0u32; f];
        let mut y = a.to_vec();
        for _ in 0..f {
            acc = self.add(&acc, &y);
            let mut z = vec![0u32; f];
            z[0] = 1;
            for _ in 0..self.p {
                z = self.mul(&z, &y);
            }
            y = z;
        }
        assert!(acc[1..].iter().all(|&c| c == 0));
        acc[0]
    }
}

#[test]
fn arithmetic_matches_schoolbook_polynomials() {
    for q in ORDERS {
        let k = Field::of_order(q).unwrap();
        let poly = Poly::of(&k);
        for a in k.elements() {
            let ca = k.coeffs(a);
            assert_eq!(k.trace(a), poly.frob_trace(&ca));
            for b in k.elements() {
                let cb = k.coeffs(b);
                assert_eq!(k.coeffs(k.mul(a, b)), poly.mul(&ca, &cb));
                assert_eq!(k.coeffs(k.add(a, b)), poly.add(&ca, &cb));
            }
        }
    }
}

#[test]
fn explicit_moduli() {
    let f9 = Field::new(3, 2, Some(&[1, 0, 1])).unwrap();
    assert_eq!(f9.q(), 9);
    let x = f9.from_coeffs(&[0, 1]).unwrap();
    assert_eq!(f9.mul(x, x), f9.from_int(-1));

    let f4 = Field::new(2, 2, Some(&[1, 1, 1])).unwrap();
    assert_eq!(f4, Field::of_order(4).unwrap());
    assert_eq!(Field::new(2, 2, Some(&[1, 0, 1])).unwrap_err(), GfError::Reducible);
    assert_eq!(Field::new(2, 1, None).unwrap().modulus(), &[0, 1]);
    assert_eq!(Field::new(4, 1, None).unwrap_err(), GfError::NotPrime(4));
    assert!(matches!(Field::new(3, 2, Some(&[1, 0, 2])), Err(GfError::BadModulusDegree(2))));
    assert_eq!(prime_power(12), Err(GfError::NotPrimePower(12)));
    assert_eq!(prime_power(27), Ok((3, 3)));
}

#[test]
fn default_modulus_is_least_irreducible() {
    assert_eq!(Field::of_order(4).unwrap().modulus(), &[1, 1, 1]);
    assert_eq!(Field::of_order(9).unwrap().modulus(), &[1, 0, 1]);
    assert_eq!(Field::of_order(8).unwrap().modulus(), &[1, 1, 0, 1]);
}

#[test]
fn rth_roots_examples() {
    let f7 = Field::prime(7).unwrap();
    let c = |xs: Vec<Fq>| xs.into_iter().map(Fq::code).collect::<Vec<_>>();
    assert_eq!(c(f7.rth_roots(Fq::ONE, 3)), vec![1, 2, 4]);
    let f5 = Field::prime(5).unwrap();
    assert!(f5.rth_roots(f5.elem(2).unwrap(), 2).is_empty());
    let f4 = Field::of_order(4).unwrap();
    assert_eq!(c(f4.rth_roots(Fq::ONE, 3)), vec![1, 2, 3]);
    // r coprime to q - 1: a unique root.
    assert_eq!(f5.rth_roots(f5.elem(3).unwrap(), 3).len(), 1);
}

#[test]
fn rth_roots_are_exhaustive() {
    for q in ORDERS {
        let k = Field::of_order(q).unwrap();
        for r in 1..=4u32 {
            for x in k.units() {
                let brute: Vec<Fq> = k.units().filter(|&z| k.pow(z, r as i64) == x).collect();
                assert_eq!(k.rth_roots(x, r), brute);
            }
        }
    }
}

#[test]
fn generators() {
    let g = |q| Field::of_order(q).unwrap().multiplicative_generator().code();
    assert_eq!(g(5), 2);
    assert_eq!(g(2), 1);
    assert_eq!(g(7), 3);
    for q in ORDERS {
        let k = Field::of_order(q).unwrap();
        let gen = k.multiplicative_generator();
        let least = k
            .units()
            .find(|&a| (1..q - 1).all(|e| k.pow(a, e as i64) != Fq::ONE))
            .unwrap();
        assert_eq!(gen, least);
        for a in k.units() {
            assert_eq!(k.pow(gen, k.log(a).unwrap() as i64), a);
        }
    }
}

#[test]
fn squares_follow_euler() {
    for q in ORDERS {
        let k = Field::of_order(q).unwrap();
        for a in k.elements() {
            let brute = k.elements().any(|x| k.mul(x, x) == a);
            assert_eq!(k.is_square(a), brute);
        }
    }
}

#[test]
fn tagged_elements_check_their_field() {
    let f5 = Field::prime(5).unwrap();
    let f7 = Field::prime(7).unwrap();
    let a = f5.tag(f5.elem(2).unwrap());
    let b = f7.tag(f7.elem(2).unwrap());
    assert_eq!(a.add(&b).unwrap_err(), GfError::FieldMismatch);
    assert_eq!(a.mul(&a).unwrap().value().code(), 4);
    assert_eq!(a.inv().unwrap().value().code(), 3);
    assert_eq!(f5.tag(Fq::ZERO).inv().unwrap_err(), GfError::DivisionByZero);
    assert!(f5.elem(5).is_err());
}

fn field_and_elems() -> impl Strategy<Value = (u32, u32, u32, u32)> {
    prop::sample::select(ORDERS.to_vec())
        .prop_flat_map(|q| (Just(q), 0..q, 0..q, 0..q))
}

proptest! {
    #[test]
    fn field_axioms((q, a, b, c) in field_and_elems()) {
        let k = Field::of_order(q).unwrap();
        let (a, b, c) = (k.elem(a).unwrap(), k.elem(b).unwrap(), k.elem(c).unwrap());
        prop_assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
        prop_assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
        prop_assert_eq!(k.add(a, k.neg(a)), Fq::ZERO);
        prop_assert_eq!(k.trace(k.add(a, b)), (k.trace(a) + k.trace(b)) % k.p());
        if !b.is_zero() {
            prop_assert_eq!(k.mul(k.div(a, b), b), a);
        }
    }
}

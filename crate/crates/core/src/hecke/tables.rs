//! Closed forms for the structure constants `S_{ij}^k`.  Parameters follow
//! the convention `a1, b1, c1, d1` for `i`, `a2, …` for `j` and `a3, …` for `k`.
//!
//! Each row can be read as published ([`Reading::Published`]) or with the
//! known misprints repaired ([`Reading::Corrected`]); [`ERRATA`] lists the
//! rows where the two differ.

use alloc::vec::Vec;
use core::ops::{Add, Div, Mul, Neg, Sub};

use super::{BasisElem, HeckeError};
use crate::chevalley::Group;
use crate::cyclo::{gauss_sum, kloosterman, CharSum, CycloNum};
use crate::gf::{Field, Fq};
use crate::rootsys::CartanType;

/// A row `S_{ij}^k`, identified by its three basis kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TableRow {
    pub i: u8,
    pub j: u8,
    pub k: u8,
}

impl TableRow {
    pub fn new(i: u8, j: u8, k: u8) -> TableRow {
        TableRow { i, j, k }
    }
}

/// Which version of the closed forms to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Reading {
    #[default]
    Published,
    Corrected,
}

/// Rows whose published closed form is wrong for some parameters, with the
/// nature of the repair.
pub const ERRATA: &[(CartanType, TableRow, &str)] = &[
    (CartanType::A2, TableRow { i: 0, j: 0, k: 0 }, "second delta should read a1*b3 = a1*b1 - b1*b2"),
    (CartanType::A2, TableRow { i: 0, j: 2, k: 0 }, "root parameter should be a1*d2/(a3*b1*b3^2)"),
    (CartanType::B2, TableRow { i: 0, j: 0, k: 1 }, "Kloosterman argument -z - 1/b2 and condition 1/(a2 z) = 1 - b2/b1"),
    (CartanType::B2, TableRow { i: 0, j: 0, k: 2 }, "generalized Kloosterman arguments are permuted"),
    (CartanType::B2, TableRow { i: 0, j: 2, k: 0 }, "generalized Kloosterman arguments are permuted"),
    (CartanType::B2, TableRow { i: 2, j: 2, k: 0 }, "last term should be 2*z1/(b3*z3)"),
    (CartanType::B2, TableRow { i: 2, j: 2, k: 2 }, "nonzero: eta(d1*d2*d3) * G"),
];

/// Whether `row` is listed in [`ERRATA`] for `ty`, up to swapping `i` and `j`.
pub fn is_erratum(ty: CartanType, row: TableRow) -> bool {
    let (i, j) = if row.i > row.j { (row.j, row.i) } else { (row.i, row.j) };
    ERRATA.iter().any(|(t, r, _)| *t == ty && r.i == i && r.j == j && r.k == row.k)
}

/// Evaluates the published closed form of `S_{ij}^k` at the given basis elements.
pub fn table_formula(group: &Group, i: &BasisElem, j: &BasisElem, k: &BasisElem) -> Result<CycloNum, HeckeError> {
    table_formula_with(group, i, j, k, Reading::Published)
}

/// Evaluates the closed form of `S_{ij}^k` under the chosen reading.
pub fn table_formula_with(
    group: &Group,
    i: &BasisElem,
    j: &BasisElem,
    k: &BasisElem,
    reading: Reading,
) -> Result<CycloNum, HeckeError> {
    let mut params = i.params();
    params.extend(j.params());
    params.extend(k.params());
    table_formula_raw(group, TableRow::new(i.kind(), j.kind(), k.kind()), &params, reading)
}

/// Same as [`table_formula_with`], with the parameters of `i`, `j`, `k` concatenated.
pub fn table_formula_raw(group: &Group, row: TableRow, params: &[Fq], reading: Reading) -> Result<CycloNum, HeckeError> {
    let arity = |kind: u8| match kind {
        0 => Ok(2),
        1 | 2 => Ok(1),
        3 => Ok(0),
        _ => Err(HeckeError::UnknownRow(row.i, row.j, row.k)),
    };
    let (ni, nj, nk) = (arity(row.i)?, arity(row.j)?, arity(row.k)?);
    let expected = ni + nj + nk;
    if params.len() != expected {
        return Err(HeckeError::Arity { kind: row.k, expected, got: params.len() });
    }
    if params.iter().any(|x| x.is_zero()) {
        return Err(HeckeError::ZeroParameter);
    }
    let k = group.field();
    let (pi, rest) = params.split_at(ni);
    let (pj, pk) = rest.split_at(nj);
    let cx = Ctx { k, fixed: reading == Reading::Corrected };

    // The unit e_3.
    if row.i == 3 || row.j == 3 {
        let other = if row.i == 3 { (row.j, pj) } else { (row.i, pi) };
        return Ok(cx.delta(other.0 == row.k && other.1 == pk));
    }
    // Rows with i > j are obtained from commutativity.
    let (i, j, pi, pj) = if row.i > row.j { (row.j, row.i, pj, pi) } else { (row.i, row.j, pi, pj) };
    let v: Vec<X<'_>> = pi.iter().chain(pj).chain(pk).map(|&x| cx.x(x)).collect();
    let out = match group.cartan_type() {
        CartanType::A2 => a2(&cx, (i, j, row.k), &v),
        CartanType::B2 => b2(&cx, (i, j, row.k), &v),
    };
    Ok(out)
}

/// The three parts of B2 `S_{00}^0(a1, b1, a2, b2, a3, b3)`, in the order
/// `[0,2,0,2]`, `[1,0,1,0]`, `[0,0,0,0]`.
pub fn b2_s000_parts(group: &Group, params: [Fq; 6]) -> [CycloNum; 3] {
    let cx = Ctx { k: group.field(), fixed: false };
    let v = params.map(|x| cx.x(x));
    [s000_0202(&cx, &v), s000_1010(&cx, &v), s000_0000(&cx, &v)]
}

#[derive(Clone, Copy)]
struct X<'a> {
    k: &'a Field,
    v: Fq,
}

impl<'a> Add for X<'a> {
    type Output = X<'a>;
    fn add(self, o: X<'a>) -> X<'a> {
        X { k: self.k, v: self.k.add(self.v, o.v) }
    }
}

impl<'a> Sub for X<'a> {
    type Output = X<'a>;
    fn sub(self, o: X<'a>) -> X<'a> {
        X { k: self.k, v: self.k.sub(self.v, o.v) }
    }
}

impl<'a> Mul for X<'a> {
    type Output = X<'a>;
    fn mul(self, o: X<'a>) -> X<'a> {
        X { k: self.k, v: self.k.mul(self.v, o.v) }
    }
}

impl<'a> Div for X<'a> {
    type Output = X<'a>;
    fn div(self, o: X<'a>) -> X<'a> {
        X { k: self.k, v: self.k.div(self.v, o.v) }
    }
}

impl<'a> Neg for X<'a> {
    type Output = X<'a>;
    fn neg(self) -> X<'a> {
        X { k: self.k, v: self.k.neg(self.v) }
    }
}

impl<'a> X<'a> {
    fn inv(self) -> X<'a> {
        X { k: self.k, v: self.k.recip(self.v) }
    }

    fn sq(self) -> X<'a> {
        self * self
    }
}

impl PartialEq for X<'_> {
    fn eq(&self, o: &Self) -> bool {
        self.v == o.v
    }
}

struct Ctx<'a> {
    k: &'a Field,
    fixed: bool,
}

impl<'a> Ctx<'a> {
    fn x(&self, v: Fq) -> X<'a> {
        X { k: self.k, v }
    }

    fn n(&self, c: i64) -> X<'a> {
        self.x(self.k.from_int(c))
    }

    fn p(&self) -> u32 {
        self.k.p()
    }

    fn int(&self, c: i64) -> CycloNum {
        CycloNum::from_int(self.p(), c)
    }

    fn zero(&self) -> CycloNum {
        CycloNum::zero(self.p())
    }

    fn q(&self) -> i64 {
        self.k.q() as i64
    }

    fn qpow(&self, e: u32) -> CycloNum {
        self.int(self.q().pow(e))
    }

    fn delta(&self, c: bool) -> CycloNum {
        self.int(c as i64)
    }

    fn phi(&self, x: X<'a>) -> CycloNum {
        crate::cyclo::phi(self.k, x.v)
    }

    /// `2δ_{x square} - 1` for `x ≠ 0`.
    fn eta(&self, x: X<'a>) -> CycloNum {
        self.int(if self.k.is_square(x.v) { 1 } else { -1 })
    }

    fn gauss(&self) -> CycloNum {
        gauss_sum(self.k)
    }

    fn roots(&self, x: X<'a>, ell: u32) -> Vec<X<'a>> {
        self.k.rth_roots(x.v, ell).into_iter().map(|v| self.x(v)).collect()
    }

    fn units(&self) -> impl Iterator<Item = X<'a>> + 'a {
        let k = self.k;
        k.units().map(move |v| X { k, v })
    }

    /// `S_ℓ(B, a, b)`.
    fn s(&self, ell: u32, b: X<'a>, x: X<'a>, y: X<'a>) -> CycloNum {
        self.st(ell, b, x, y, self.n(0), self.n(0))
    }

    /// `S̃_ℓ(B, a, b, a′, b′)`.
    fn st(&self, ell: u32, b: X<'a>, x: X<'a>, y: X<'a>, x2: X<'a>, y2: X<'a>) -> CycloNum {
        kloosterman(self.k, ell, b.v, x.v, y.v, x2.v, y2.v)
    }

    /// A printed `S̃_{q-1}(1, t1, t2, t3, t4)`; the corrected reading places
    /// the arguments as `φ(t1 ζ² + t2 ζ + t3/ζ + t4/ζ²)`.
    fn st_printed(&self, ell: u32, t1: X<'a>, t2: X<'a>, t3: X<'a>, t4: X<'a>) -> CycloNum {
        let one = self.n(1);
        if self.fixed {
            self.st(ell, one, t2, t3, t1, t4)
        } else {
            self.st(ell, one, t1, t2, t3, t4)
        }
    }

    fn full(&self) -> u32 {
        self.k.q() - 1
    }

    /// `Σ_{ζ^ℓ = B} f(ζ)`.
    fn root_sum(&self, b: X<'a>, ell: u32, f: impl Fn(X<'a>) -> CycloNum) -> CycloNum {
        let mut acc = self.zero();
        for z in self.roots(b, ell) {
            acc += &f(z);
        }
        acc
    }

    fn phi_sum(&self, xs: impl IntoIterator<Item = X<'a>>) -> CycloNum {
        let mut acc = CharSum::new(self.p());
        for x in xs {
            acc.push(self.k, x.v);
        }
        acc.value()
    }
}

fn a2<'a>(cx: &Ctx<'a>, row: (u8, u8, u8), v: &[X<'a>]) -> CycloNum {
    let one = cx.n(1);
    let q = cx.qpow(1);
    match row {
        (0, 0, 0) => {
            let [a1, b1, a2, b2, a3, b3] = [v[0], v[1], v[2], v[3], v[4], v[5]];
            let big = a1 * b1.sq() / (a2.sq() * a3 * b2 * b3.sq());
            let kl = cx.root_sum(big, 3, |z| {
                let s1 = -one - b3 / b1 + z * (-(a2 * b2 * b3) / (a1 * b1) - a2 * b3 / b1)
                    + z.inv() * (-a2.inv() - a3.inv());
                let s2 = -b3.inv() - z - b1 / (a2 * b2 * b3 * z);
                cx.s(cx.full(), one, s1, s2)
            });
            let second = if cx.fixed { a1 * b3 == a1 * b1 - b1 * b2 } else { a1 * b3 == b2 * b3 - b1 * b2 };
            let d = a1 * a2 * b3 == -(a3 * b1 * b2) && second;
            kl + &q * &cx.delta(d)
        }
        (0, 0, 1) => {
            let [a1, b1, a2, b2, c3] = [v[0], v[1], v[2], v[3], v[4]];
            let big = a1.sq() * b1 / (a2 * b2.sq()) / c3;
            let x = -one - b2 / a1 - a2 * b2 / (a1 * b1);
            let y = -b2.inv() - a1 / (a2 * b2);
            &q * &cx.s(3, big, x, y)
        }
        (0, 0, 2) => {
            let [a1, b1, a2, b2, d3] = [v[0], v[1], v[2], v[3], v[4]];
            let big = a1 * b1.sq() / (a2.sq() * b2 * d3);
            let x = -one - a2 / b1 - a2 * b2 / (a1 * b1);
            let y = -a2.inv() - b1 / (a2 * b2);
            &q * &cx.s(3, big, x, y)
        }
        (0, 0, 3) => {
            let [a1, b1, a2, b2] = [v[0], v[1], v[2], v[3]];
            &cx.qpow(3) * &cx.delta(a1 == b2 && a2 == b1)
        }
        (0, 1, 0) => {
            let [a1, b1, c2, a3, b3] = [v[0], v[1], v[2], v[3], v[4]];
            let big = b1 * c2 / (a1 * a3.sq() * b3);
            cx.s(3, big, one + a3 / b1, a1.inv() + a3.inv() + b1 / (a3 * b3))
        }
        (0, 1, 1) => {
            let [a1, b1, c2, c3] = [v[0], v[1], v[2], v[3]];
            &q * &(&cx.delta(a1 * c3 == -(c2 * b1)) * &cx.phi(a1 / c2))
        }
        (0, 1, 2) => {
            let [a1, b1, c2, d3] = [v[0], v[1], v[2], v[3]];
            &q * &(&cx.delta(c2 * d3 == -(a1 * b1.sq())) * &cx.phi(b1 / c2 - b1 / d3))
        }
        (0, 2, 0) => {
            let [a1, b1, d2, a3, b3] = [v[0], v[1], v[2], v[3], v[4]];
            let big = if cx.fixed { a1 * d2 / (a3 * b1 * b3.sq()) } else { a3 * b1 / (a1 * b3 * d2) };
            cx.s(3, big, one + b3 / a1, b1.inv() + b3.inv() + a1 / (a3 * b3))
        }
        (0, 2, 1) => {
            // The second φ argument is printed with `c2`; `c3` is the only `c` in this row.
            let [a1, b1, d2, c3] = [v[0], v[1], v[2], v[3]];
            &q * &(&cx.delta(c3 * d2 == -(a1.sq() * b1)) * &cx.phi(a1 / d2 - a1 / c3))
        }
        (0, 2, 2) => {
            let [a1, b1, d2, d3] = [v[0], v[1], v[2], v[3]];
            &q * &(&cx.delta(b1 * d3 == -(a1 * d2)) * &cx.phi(b1 / d2))
        }
        (1, 1, 0) => {
            let [c1, c2, a3, b3] = [v[0], v[1], v[2], v[3]];
            &cx.delta(c1 * c2 == a3.sq() * b3) * &cx.phi(a3 / c1 + a3 / c2)
        }
        (1, 1, 2) => {
            let [c1, c2, d3] = [v[0], v[1], v[2]];
            &q * &cx.delta(c1 == -d3 && c1 == c2)
        }
        (1, 2, 0) => {
            let [c1, d2, a3, b3] = [v[0], v[1], v[2], v[3]];
            &cx.delta(a3 * c1 == b3 * d2) * &cx.phi(a3 / d2)
        }
        (1, 2, 3) => {
            let [c1, d2] = [v[0], v[1]];
            &cx.qpow(2) * &cx.delta(c1 == -d2)
        }
        (2, 2, 0) => {
            let [d1, d2, a3, b3] = [v[0], v[1], v[2], v[3]];
            &cx.delta(d1 * d2 == a3 * b3.sq()) * &cx.phi(b3 / d2 + b3 / d1)
        }
        (2, 2, 1) => {
            let [d1, d2, c3] = [v[0], v[1], v[2]];
            &q * &cx.delta(d1 == -c3 && d1 == d2)
        }
        // S_{01}^3, S_{02}^3, S_{11}^1, S_{11}^3, S_{12}^1, S_{12}^2, S_{22}^2, S_{22}^3.
        _ => cx.zero(),
    }
}

fn b2<'a>(cx: &Ctx<'a>, row: (u8, u8, u8), v: &[X<'a>]) -> CycloNum {
    let one = cx.n(1);
    let two = cx.n(2);
    let four = cx.n(4);
    let q = cx.qpow(1);
    let full = cx.full();
    match row {
        (0, 0, 0) => {
            let v6 = [v[0], v[1], v[2], v[3], v[4], v[5]];
            &(&s000_0202(cx, &v6) + &s000_1010(cx, &v6)) + &s000_0000(cx, &v6)
        }
        (0, 0, 1) => {
            let [a1, b1, a2, b2, c3] = [v[0], v[1], v[2], v[3], v[4]];
            let big = b1 / (b2 * c3);
            let first = cx.root_sum(big, 2, |z| {
                let x = -one - a1 / a2 - b2 / b1 - a2 * b2 / (a1 * b1) - (a2 * z).inv() - (a1 * z).inv();
                let y = if cx.fixed { -z - b2.inv() } else { z - b2.inv() };
                cx.s(full, one, x, y)
            });
            let second = if a1 == -a2 {
                let hits = cx.roots(big, 2).into_iter().filter(|&z| (a2 * z).inv() == if cx.fixed { one - b2 / b1 } else { one - b1 / b2 })
                    .count();
                &cx.qpow(2) * &cx.int(hits as i64)
            } else {
                cx.zero()
            };
            &(&q * &first) + &second
        }
        (0, 0, 2) => {
            let [a1, b1, a2, b2, d3] = [v[0], v[1], v[2], v[3], v[4]];
            let first = cx.root_sum(b1 / b2, 2, |z| {
                let t1 = a2 * d3 * (two / (a1 * z) - b2 / (a1 * b1) - a1.inv());
                let t2 = d3 * ((a1 * z).inv() - a1.inv());
                let t3 = a1 * z / (a2 * d3) - d3.inv();
                let t4 = -(a1 / (a2 * b2 * d3));
                cx.st_printed(full, t1, t2, t3, t4)
            });
            let second = if b1 == b2 {
                &(&cx.eta(-(a2 * d3) / a1) * &cx.gauss()) * &cx.phi(d3 / (four * a1 * a2))
            } else {
                cx.zero()
            };
            &q * &(&first + &second)
        }
        (0, 0, 3) => {
            let [a1, b1, a2, b2] = [v[0], v[1], v[2], v[3]];
            &cx.qpow(4) * &cx.delta(a1 == a2 && b1 == b2)
        }
        (0, 1, 0) => {
            let [a1, b1, c2, a3, b3] = [v[0], v[1], v[2], v[3], v[4]];
            let first = cx.root_sum(c2 / (b1 * b3), 2, |z| {
                let x = -(z * b3) - a3 * b3 * z / a1 - c2 / b1 - a3 * c2 / (a1 * b1);
                let y = -(b1 * z / (a3 * c2)) - a1 * b1 / (a3 * b3 * c2) - c2.inv();
                cx.s(full, one, x, y)
            });
            let second = if a1 == -a3 {
                let hits = cx.roots(b1 / (b3 * c2), 2).into_iter().filter(|&z| z.inv() == -(c2 / b1)).count();
                &q * &cx.int(hits as i64)
            } else {
                cx.zero()
            };
            &first + &second
        }
        (0, 1, 1) => {
            // Printed with `b2`; `b1` is the only `b` in this row.
            let [a1, b1, c2, c3] = [v[0], v[1], v[2], v[3]];
            &q * &cx.s(2, b1 * c2 * c3, cx.n(0), a1 * b1 + c2 + c3)
        }
        (0, 1, 2) => {
            let [a1, b1, c2, d3] = [v[0], v[1], v[2], v[3]];
            &(&q * &cx.phi(-(a1 / d3) - d3 / (a1 * b1))) * &cx.s(2, b1 / c2, one, a1.inv())
        }
        (0, 2, 0) => {
            let [a1, b1, d2, a3, b3] = [v[0], v[1], v[2], v[3], v[4]];
            let first = cx.root_sum(b1 / b3, 2, |z| {
                let t1 = a3 * d2 * (two / (a1 * b3 * z) + (a1 * b3).inv() + (a1 * b1).inv());
                let t2 = -one - z - a3 / (a1 * z) - a3 / a1;
                let t3 = -a3.inv();
                let t4 = a1 / (a3 * d2);
                cx.st_printed(full, t1, t2, t3, t4)
            });
            let second = if b1 == b3 {
                let r = one - a3 / a1;
                let arg = -(a1 * b3 / (four * a3 * d2)) * r.sq();
                &(&cx.eta(a3 * d2 / (a1 * b3)) * &cx.gauss()) * &cx.phi(arg)
            } else {
                cx.zero()
            };
            &first + &second
        }
        (0, 2, 1) => {
            let [a1, b1, d2, c3] = [v[0], v[1], v[2], v[3]];
            &(&q * &cx.phi(a1 / d2 + d2 / (a1 * b1))) * &cx.s(2, b1 / c3, one, a1.inv())
        }
        (0, 2, 2) => {
            let [a1, b1, d2, d3] = [v[0], v[1], v[2], v[3]];
            let z1s = cx.roots(-(a1 / (d2 * d3)), 2);
            let z3s = cx.roots(-(a1 * b1 / (d2 * d3)), 2);
            let args = z1s.iter().flat_map(|&z1| {
                z3s.iter().map(move |&z3| z3 - (d3 * z1).inv() + (d2 * z1).inv() + two * z1 / z3)
            });
            &q * &cx.phi_sum(args)
        }
        (1, 1, 0) => {
            let [c1, c2, a3, b3] = [v[0], v[1], v[2], v[3]];
            cx.s(2, c1 / (b3 * c2), one, a3 / c2 + b3.inv())
        }
        (1, 1, 2) => {
            let [c1, c2, d3] = [v[0], v[1], v[2]];
            &q * &(&cx.delta(c1 == c2) * &cx.phi(-(d3 / c2)))
        }
        (1, 1, 3) => {
            let [c1, c2] = [v[0], v[1]];
            &cx.qpow(3) * &cx.delta(c1 == c2)
        }
        (1, 2, 0) => {
            let [c1, d2, a3, b3] = [v[0], v[1], v[2], v[3]];
            &cx.phi(a3 / d2 + d2 / (b3 * a3)) * &cx.s(2, b3 / c1, one, a3.inv())
        }
        (1, 2, 1) => {
            let [c1, d2, c3] = [v[0], v[1], v[2]];
            &q * &(&cx.delta(c1 == c3) * &cx.phi(d2 / c3))
        }
        (1, 2, 2) => {
            let [c1, d2, d3] = [v[0], v[1], v[2]];
            if d2 == -d3 {
                &q * &cx.phi_sum(cx.roots(c1, 2).into_iter().map(|z| z / d3))
            } else {
                cx.zero()
            }
        }
        (2, 2, 0) => {
            let [d1, d2, a3, b3] = [v[0], v[1], v[2], v[3]];
            let z1s = cx.roots(d1 / (a3 * d2), 2);
            let z3s = cx.roots(d1 / (a3 * b3 * d2), 2);
            let args = z1s.iter().flat_map(|&z1| {
                z3s.iter().map(move |&z3| {
                    let last = if cx.fixed { two * z1 / (b3 * z3) } else { two * z1 / z3 };
                    -z1 - (d2 * z3).inv() - (a3 * z1).inv() + last
                })
            });
            cx.phi_sum(args)
        }
        (2, 2, 1) => {
            let [d1, d2, c3] = [v[0], v[1], v[2]];
            &q * &(&cx.delta(d1 == d2) * &cx.s(2, c3.inv(), cx.n(0), d2.inv()))
        }
        (2, 2, 3) => {
            let [d1, d2] = [v[0], v[1]];
            &cx.qpow(3) * &cx.delta(d1 == -d2)
        }
        (2, 2, 2) if cx.fixed => {
            let [d1, d2, d3] = [v[0], v[1], v[2]];
            &cx.eta(d1 * d2 * d3) * &cx.gauss()
        }
        // S_{01}^3, S_{02}^3, S_{11}^1, S_{12}^3, S_{22}^2.
        _ => cx.zero(),
    }
}

fn s000_0202<'a>(cx: &Ctx<'a>, v: &[X<'a>; 6]) -> CycloNum {
    let [a1, b1, a2, b2, a3, b3] = *v;
    let one = cx.n(1);
    let two = cx.n(2);
    let z1s = cx.roots(-(a1 / (a2 * a3)), 2);
    let z2s = cx.roots(b1 / (b2 * b3), 2);
    let mut hits = Vec::new();
    for &z1 in &z1s {
        for &z2 in &z2s {
            if b2 / b1 - one == a3 * b2 * b3 / (a1 * b1) * z1 * z2 {
                hits.push(-z1 + a2 / a1 * z1 - a3 / a1 * z1 + two * b2 / b1 * z2);
            }
        }
    }
    &cx.qpow(1) * &cx.phi_sum(hits)
}

fn s000_1010<'a>(cx: &Ctx<'a>, v: &[X<'a>; 6]) -> CycloNum {
    let [a1, b1, a2, b2, a3, b3] = *v;
    let one = cx.n(1);
    let four = cx.n(4);
    let big_b = one - a3 / a1;
    let sum = cx.root_sum(b1 / (b2 * b3), 2, |z| {
        let a = a2 * a3 / (a1 * b3 * z);
        let c = z + (b2 * z).inv() + (b3 * z).inv();
        &cx.eta(a) * &cx.phi(c - big_b.sq() / (four * a))
    });
    &cx.gauss() * &sum
}

fn s000_0000<'a>(cx: &Ctx<'a>, v: &[X<'a>; 6]) -> CycloNum {
    let [a1, b1, a2, b2, a3, b3] = *v;
    let one = cx.n(1);
    let two = cx.n(2);
    let a = a1 / (a2 * a3);
    let full = cx.full();
    cx.root_sum(b1 / (b2 * b3), 2, |z| {
        let mut acc = cx.zero();
        for t in cx.units() {
            let outer = -(two * t.sq() / (b3 * a * z)) - t * (a2 * a + one) / (a2 * a) - (a3 * t).inv();
            let t2 = t.sq();
            let x = -(t2.sq() / (b3 * a.sq() * z.sq())) - t2 * t / (a2 * a.sq() * z)
                - t2 * (b3 * z.sq() + one) / (b3 * a * z.sq())
                - t / (a2 * a * z)
                - one;
            let y = -b3.inv() - a * z / t - a / (b2 * t2);
            acc += &(&cx.phi(outer) * &cx.s(full, one, x, y));
        }
        acc
    })
}

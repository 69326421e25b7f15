//! The natural matrix representations `PGL3` (A2) and `SO5` (B2), used only to
//! cross-check the rewriting engine.  Nothing outside the oracle depends on it.

use alloc::vec;
use alloc::vec::Vec;

use crate::chevalley::{Atom, Group, GroupElem, Torus};
use crate::gf::{Field, Fq};
use crate::rootsys::{CartanType, RootIdx};

/// Off-diagonal entry `(row, col, num, den, degree)` of `u_β(x)`.
type Entry = (usize, usize, i64, i64, i64);

/// Entries of `u_β(x)` per root index.
const A2_ROOTS: [&[Entry]; 6] = [
    &[(0, 1, 1, 1, 1)],
    &[(1, 2, 1, 1, 1)],
    &[(0, 2, 1, 1, 1)],
    &[(1, 0, 1, 1, 1)],
    &[(2, 1, 1, 1, 1)],
    &[(2, 0, 1, 1, 1)],
];

const B2_ROOTS: [&[Entry]; 8] = [
    &[(1, 2, 1, 1, 1), (1, 3, -1, 2, 2), (2, 3, -1, 1, 1)],
    &[(0, 1, 1, 1, 1), (3, 4, -1, 1, 1)],
    &[(0, 2, -1, 1, 1), (0, 4, -1, 2, 2), (2, 4, 1, 1, 1)],
    &[(0, 3, -1, 2, 1), (1, 4, 1, 2, 1)],
    &[(2, 1, 2, 1, 1), (3, 1, -2, 1, 2), (3, 2, -2, 1, 1)],
    &[(1, 0, 1, 1, 1), (4, 3, -1, 1, 1)],
    &[(2, 0, -2, 1, 1), (4, 0, -2, 1, 2), (4, 2, 2, 1, 1)],
    &[(3, 0, -2, 1, 1), (4, 1, 2, 1, 1)],
];

/// A square matrix over `F_q`, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat {
    pub dim: usize,
    pub entries: Vec<Fq>,
}

pub struct MatrixModel<'g> {
    group: &'g Group,
    dim: usize,
    projective: bool,
}

impl<'g> MatrixModel<'g> {
    pub fn new(group: &'g Group) -> MatrixModel<'g> {
        let (dim, projective) = match group.cartan_type() {
            CartanType::A2 => (3, true),
            CartanType::B2 => (5, false),
        };
        MatrixModel { group, dim, projective }
    }

    fn field(&self) -> &Field {
        self.group.field()
    }

    pub fn identity(&self) -> Mat {
        let mut entries = vec![Fq::ZERO; self.dim * self.dim];
        for i in 0..self.dim {
            entries[i * self.dim + i] = Fq::ONE;
        }
        Mat { dim: self.dim, entries }
    }

    pub fn mul(&self, a: &Mat, b: &Mat) -> Mat {
        let k = self.field();
        let d = self.dim;
        let mut entries = vec![Fq::ZERO; d * d];
        for i in 0..d {
            for l in 0..d {
                let x = a.entries[i * d + l];
                if x.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let e = &mut entries[i * d + j];
                    *e = k.add(*e, k.mul(x, b.entries[l * d + j]));
                }
            }
        }
        Mat { dim: d, entries }
    }

    pub fn root(&self, beta: RootIdx, x: Fq) -> Mat {
        let k = self.field();
        let table: &[&[Entry]] = match self.group.cartan_type() {
            CartanType::A2 => &A2_ROOTS,
            CartanType::B2 => &B2_ROOTS,
        };
        let mut m = self.identity();
        for &(i, j, num, den, deg) in table[beta] {
            let c = k.div(k.from_int(num), k.from_int(den));
            let e = &mut m.entries[i * self.dim + j];
            *e = k.add(*e, k.mul(c, k.pow(x, deg)));
        }
        m
    }

    pub fn torus(&self, t: Torus) -> Mat {
        let k = self.field();
        let [l, m] = t.chi();
        let diag = match self.group.cartan_type() {
            CartanType::A2 => vec![k.mul(l, m), m, Fq::ONE],
            CartanType::B2 => {
                let lm = k.mul(l, m);
                vec![lm, l, Fq::ONE, k.recip(l), k.recip(lm)]
            }
        };
        let mut out = self.identity();
        for (i, d) in diag.into_iter().enumerate() {
            out.entries[i * self.dim + i] = d;
        }
        out
    }

    /// `n_β(t) = u_β(t) u_{-β}(-1/t) u_β(t)`.
    pub fn n(&self, beta: RootIdx, t: Fq) -> Mat {
        let k = self.field();
        let neg = self.group.root_system().negate(beta);
        let a = self.root(beta, t);
        let b = self.root(neg, k.neg(k.recip(t)));
        self.mul(&self.mul(&a, &b), &a)
    }

    pub fn atom(&self, a: Atom) -> Mat {
        match a {
            Atom::U(b, x) => self.root(b, x),
            Atom::N(b, t) => self.n(b, t),
            Atom::T(t) => self.torus(t),
        }
    }

    pub fn word(&self, atoms: &[Atom]) -> Mat {
        atoms.iter().fold(self.identity(), |acc, &a| self.mul(&acc, &self.atom(a)))
    }

    pub fn elem(&self, g: &GroupElem) -> Mat {
        self.word(&self.group.expand(g))
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self, m: &Mat) -> Mat {
        let k = self.field();
        let d = self.dim;
        let mut a = m.entries.clone();
        let mut out = self.identity().entries;
        for col in 0..d {
            let piv = (col..d).find(|&r| !a[r * d + col].is_zero()).expect("invertible matrix");
            for c in 0..d {
                a.swap(piv * d + c, col * d + c);
                out.swap(piv * d + c, col * d + c);
            }
            let s = k.recip(a[col * d + col]);
            for c in 0..d {
                a[col * d + c] = k.mul(s, a[col * d + c]);
                out[col * d + c] = k.mul(s, out[col * d + c]);
            }
            for r in (0..d).filter(|&r| r != col) {
                let f = a[r * d + col];
                if f.is_zero() {
                    continue;
                }
                for c in 0..d {
                    a[r * d + c] = k.sub(a[r * d + c], k.mul(f, a[col * d + c]));
                    out[r * d + c] = k.sub(out[r * d + c], k.mul(f, out[col * d + c]));
                }
            }
        }
        Mat { dim: d, entries: out }
    }

    /// `x_{α1} + x_{α2}` read off the superdiagonal of a unipotent matrix.
    pub fn simple_sum(&self, m: &Mat) -> Fq {
        let d = self.dim;
        self.field().add(m.entries[1], m.entries[d + 2])
    }

    /// A representative independent of scalars in type A2.
    pub fn canonical(&self, m: &Mat) -> Mat {
        if !self.projective {
            return m.clone();
        }
        let k = self.field();
        let pivot = *m.entries.iter().find(|x| !x.is_zero()).expect("invertible matrix");
        let s = k.recip(pivot);
        Mat { dim: m.dim, entries: m.entries.iter().map(|&x| k.mul(s, x)).collect() }
    }

    pub fn same(&self, a: &Mat, b: &Mat) -> bool {
        self.canonical(a) == self.canonical(b)
    }
}

//! The Hecke algebra `e·CG·e` of the Gelfand-Graev representation: its
//! standard basis, structure constants, and the printed closed forms.

mod tables;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::chevalley::{ChevalleyError, Group, Torus, Unipotent};
use crate::cyclo::{phi, CharSum, CycloNum, Rational};
use crate::gf::Fq;
use crate::intersect::{IntersectError, IntersectionPlan, MuAssignment, Point};
use crate::rootsys::{CartanType, WeylElem};

pub use tables::{b2_s000_parts, is_erratum, table_formula, table_formula_raw, table_formula_with, Reading, TableRow, ERRATA};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeckeError {
    #[error(transparent)]
    Chevalley(#[from] ChevalleyError),
    #[error(transparent)]
    Intersect(#[from] IntersectError),
    #[error("basis kind {0} is not in 0..=3")]
    BadKind(u8),
    #[error("kind {kind} takes {expected} parameters, got {got}")]
    Arity { kind: u8, expected: usize, got: usize },
    #[error("basis parameters must be nonzero")]
    ZeroParameter,
    #[error("admissible element ẇ_{kind}·t with χ(t) = ({a}, {b}) does not fit the expected basis pattern")]
    UnexpectedBasis { kind: u8, a: u32, b: u32 },
    #[error("the operation is defined for type A2 only")]
    NotA2,
    #[error("no closed form is printed for row S_{0}{1}^{2}")]
    UnknownRow(u8, u8, u8),
}

/// A standard basis element: `n_0(a,b) = ẇ_0 t_1(a) t_2(b)`, `n_1(c) = ẇ_1 t_2(c)`,
/// `n_2(d) = ẇ_2 t_1(d)`, `n_3 = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisElem {
    E0(Fq, Fq),
    E1(Fq),
    E2(Fq),
    E3,
}

impl BasisElem {
    pub fn new(kind: u8, params: &[Fq]) -> Result<BasisElem, HeckeError> {
        let expected = match kind {
            0 => 2,
            1 | 2 => 1,
            3 => 0,
            _ => return Err(HeckeError::BadKind(kind)),
        };
        if params.len() != expected {
            return Err(HeckeError::Arity { kind, expected, got: params.len() });
        }
        if params.iter().any(|x| x.is_zero()) {
            return Err(HeckeError::ZeroParameter);
        }
        Ok(match kind {
            0 => BasisElem::E0(params[0], params[1]),
            1 => BasisElem::E1(params[0]),
            2 => BasisElem::E2(params[0]),
            _ => BasisElem::E3,
        })
    }

    pub fn kind(&self) -> u8 {
        match self {
            BasisElem::E0(..) => 0,
            BasisElem::E1(_) => 1,
            BasisElem::E2(_) => 2,
            BasisElem::E3 => 3,
        }
    }

    pub fn params(&self) -> Vec<Fq> {
        match *self {
            BasisElem::E0(a, b) => vec![a, b],
            BasisElem::E1(c) => vec![c],
            BasisElem::E2(d) => vec![d],
            BasisElem::E3 => vec![],
        }
    }

    /// The torus factor `t` of `n = ẇ t`.
    pub fn torus(&self) -> Torus {
        let t = match *self {
            BasisElem::E0(a, b) => Torus::new(a, b),
            BasisElem::E1(c) => Torus::new(Fq::ONE, c),
            BasisElem::E2(d) => Torus::new(d, Fq::ONE),
            BasisElem::E3 => Ok(Torus::ONE),
        };
        t.expect("basis parameters are nonzero")
    }

    pub fn point(&self, group: &Group) -> Point {
        Point { w: group.root_system().basis_weyl()[self.kind() as usize], t: self.torus() }
    }
}

impl fmt::Display for BasisElem {
    /// `kind:params` with parameters as integer codes.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.kind())?;
        for (i, x) in self.params().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", x)?;
        }
        Ok(())
    }
}

/// `ψ(u) = φ(x_{α1} + x_{α2})`.
pub fn psi(group: &Group, u: &Unipotent) -> CycloNum {
    let (a, b) = group.delta_coords(u);
    phi(group.field(), group.field().add(a, b))
}

/// Whether `ψ(n⁻¹ u n) = ψ(u)` on `U ∩ nUn⁻¹` for `n = ẇ t`.
pub fn is_admissible(group: &Group, w: WeylElem, t: Torus) -> bool {
    let rs = group.root_system();
    let k = group.field();
    let n = group.lift_torus(w, t);
    let n_inv = group.invert(&n);
    let w_inv = rs.inverse(w);
    for beta in 0..group.n_pos() {
        if !rs.is_positive(rs.act(w_inv, beta)) {
            continue;
        }
        for x in k.units() {
            let u = group.root_elem(beta, x);
            let c = group.multiply(&group.multiply(&n_inv, &group.from_unipotent(u)), &n);
            debug_assert!(group.is_unipotent(&c));
            let (a1, a2) = group.delta_coords(&u);
            let (b1, b2) = group.delta_coords(&c.u);
            if k.trace(k.add(a1, a2)) != k.trace(k.add(b1, b2)) {
                return false;
            }
        }
    }
    true
}

/// The standard basis, found by testing every `ẇ_i t` for admissibility.
pub fn standard_basis(group: &Group) -> Result<Vec<BasisElem>, HeckeError> {
    let k = group.field();
    let ws = group.root_system().basis_weyl();
    let mut out = Vec::new();
    for kind in 0..4u8 {
        for a in k.units() {
            for b in k.units() {
                let t = Torus::new(a, b)?;
                if !is_admissible(group, ws[kind as usize], t) {
                    continue;
                }
                let one = Fq::ONE;
                let elem = match kind {
                    0 => Some(BasisElem::E0(a, b)),
                    1 if a == one => Some(BasisElem::E1(b)),
                    2 if b == one => Some(BasisElem::E2(a)),
                    3 if a == one && b == one => Some(BasisElem::E3),
                    _ => None,
                };
                out.push(elem.ok_or(HeckeError::UnexpectedBasis { kind, a: a.code(), b: b.code() })?);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// All basis elements of one kind, in order.
pub fn basis_of_kind(group: &Group, kind: u8) -> Vec<BasisElem> {
    let k = group.field();
    match kind {
        0 => k.units().flat_map(|a| k.units().map(move |b| BasisElem::E0(a, b))).collect(),
        1 => k.units().map(BasisElem::E1).collect(),
        2 => k.units().map(BasisElem::E2).collect(),
        _ => vec![BasisElem::E3],
    }
}

/// A finitely supported combination of basis elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeVec {
    p: u32,
    terms: BTreeMap<BasisElem, CycloNum>,
}

impl HeckeVec {
    pub fn zero(p: u32) -> HeckeVec {
        HeckeVec { p, terms: BTreeMap::new() }
    }

    pub fn basis(p: u32, b: BasisElem) -> HeckeVec {
        let mut v = HeckeVec::zero(p);
        v.terms.insert(b, CycloNum::one(p));
        v
    }

    pub fn terms(&self) -> &BTreeMap<BasisElem, CycloNum> {
        &self.terms
    }

    pub fn coeff(&self, b: &BasisElem) -> CycloNum {
        self.terms.get(b).cloned().unwrap_or_else(|| CycloNum::zero(self.p))
    }

    pub fn add_term(&mut self, b: BasisElem, c: &CycloNum) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(b).or_insert_with(|| CycloNum::zero(c.p()));
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&b);
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &HeckeVec, c: &CycloNum) {
        for (b, x) in &other.terms {
            self.add_term(*b, &(x * c));
        }
    }
}

/// Structure constants computed from the intersection algorithm.
pub struct Hecke {
    group: Group,
    plans: Vec<IntersectionPlan>,
}

/// One summand of a structure constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub j: Vec<u8>,
    pub mu: MuAssignment,
    /// The argument `Δv - Δu - Δu′` of `φ`.
    pub arg: Fq,
}

impl Hecke {
    pub fn new(group: Group) -> Result<Hecke, HeckeError> {
        let ws = group.root_system().basis_weyl();
        let mut plans = Vec::with_capacity(64);
        for x in ws {
            for y in ws {
                for z in ws {
                    plans.push(IntersectionPlan::new(&group, x, y, z)?);
                }
            }
        }
        Ok(Hecke { group, plans })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn cartan_type(&self) -> CartanType {
        self.group.cartan_type()
    }

    pub fn plan(&self, ki: u8, kj: u8, kk: u8) -> &IntersectionPlan {
        &self.plans[(ki as usize * 4 + kj as usize) * 4 + kk as usize]
    }

    fn check(&self, b: &BasisElem) -> Result<(), HeckeError> {
        let q = self.group.field().q();
        if b.params().iter().any(|x| x.is_zero() || x.code() >= q) {
            return Err(HeckeError::ZeroParameter);
        }
        Ok(())
    }

    /// `S_{ij}^k = Σ φ(Δv - Δu - Δu′)` over the representatives of
    /// `U n_i U ∩ n_k U n_j⁻¹ U`.
    pub fn structure_constant(&self, i: &BasisElem, j: &BasisElem, k: &BasisElem) -> Result<CycloNum, HeckeError> {
        for b in [i, j, k] {
            self.check(b)?;
        }
        let field = self.group.field();
        let mut acc = CharSum::new(field.p());
        self.plan(i.kind(), j.kind(), k.kind())
            .for_each_term(&self.group, i.torus(), j.torus(), k.torus(), |_, arg| acc.push(field, arg));
        Ok(acc.value())
    }

    /// The individual summands of [`Hecke::structure_constant`].
    pub fn terms(&self, i: &BasisElem, j: &BasisElem, k: &BasisElem) -> Result<Vec<Term>, HeckeError> {
        for b in [i, j, k] {
            self.check(b)?;
        }
        let plan = self.plan(i.kind(), j.kind(), k.kind());
        let mut out = Vec::new();
        plan.for_each_term(&self.group, i.torus(), j.torus(), k.torus(), |e, arg| {
            out.push(Term { j: plan.subs[e.sub].j.clone(), mu: e.mu.clone(), arg });
        });
        Ok(out)
    }

    /// `e_i e_j = Σ_k S_{ij}^k e_k`.
    pub fn multiply(&self, i: &BasisElem, j: &BasisElem) -> Result<HeckeVec, HeckeError> {
        let p = self.group.field().p();
        let mut out = HeckeVec::zero(p);
        for kind in 0..4 {
            for k in basis_of_kind(&self.group, kind) {
                let s = self.structure_constant(i, j, &k)?;
                out.add_term(k, &s);
            }
        }
        Ok(out)
    }

    /// Bilinear extension of [`Hecke::multiply`].
    pub fn multiply_vec(&self, a: &HeckeVec, b: &HeckeVec) -> Result<HeckeVec, HeckeError> {
        let mut out = HeckeVec::zero(self.group.field().p());
        for (i, x) in a.terms() {
            for (j, y) in b.terms() {
                out.add_scaled(&self.multiply(i, j)?, &(x * y));
            }
        }
        Ok(out)
    }

    /// `q⁻¹ Σ_{z ≠ 0} (φ(z) - 1) e_1(-y/z) e_2(-x/z) + q² δ_{x,-y} e_3` (type A2).
    pub fn generation_expand(&self, x: Fq, y: Fq) -> Result<HeckeVec, HeckeError> {
        if self.cartan_type() != CartanType::A2 {
            return Err(HeckeError::NotA2);
        }
        if x.is_zero() || y.is_zero() {
            return Err(HeckeError::ZeroParameter);
        }
        let k = self.group.field();
        let p = k.p();
        let q = k.q() as i128;
        let inv_q = CycloNum::from_rational(p, Rational::new(1, q));
        let mut out = HeckeVec::zero(p);
        for z in k.units() {
            let c = &(&phi(k, z) - &CycloNum::one(p)) * &inv_q;
            let e1 = BasisElem::E1(k.neg(k.div(y, z)));
            let e2 = BasisElem::E2(k.neg(k.div(x, z)));
            out.add_scaled(&self.multiply(&e1, &e2)?, &c);
        }
        if x == k.neg(y) {
            out.add_term(BasisElem::E3, &CycloNum::from_int(p, (q * q) as i64));
        }
        Ok(out)
    }
}

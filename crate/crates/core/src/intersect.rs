//! Left `U`-coset representatives of `U ẋt_x U ∩ żt_z U (ẏt_y)⁻¹ U`, indexed
//! by distinguished subexpressions of the fixed reduced word of `x`.
//!
//! Positions are stored left to right: index `k` of a word of length `n`
//! is the position usually numbered `m = n - k`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::chevalley::{Atom, ChevalleyError, Group, GroupElem, Torus, Unipotent};
use crate::gf::Fq;
use crate::rootsys::{RootSystem, WeylElem};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IntersectError {
    #[error(transparent)]
    Chevalley(#[from] ChevalleyError),
    #[error("μ has {got} entries, expected {expected}")]
    MuLength { expected: usize, got: usize },
    #[error("μ at position {0} violates its domain")]
    MuDomain(usize),
    #[error("the two products D_j(μ) and D'_j(μ) disagree")]
    InconsistentForms,
    #[error("D_j(μ) does not lie in the expected Bruhat cell")]
    WrongCell,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PosType {
    A,
    B,
    C,
}

impl PosType {
    pub fn letter(self) -> char {
        match self {
            PosType::A => 'A',
            PosType::B => 'B',
            PosType::C => 'C',
        }
    }
}

/// `ẇ t` for a Weyl element with its fixed lift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub w: WeylElem,
    pub t: Torus,
}

/// A distinguished subexpression `j` of the fixed word of `x`, relative to `(y, z)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subexpr {
    pub x: WeylElem,
    pub y: WeylElem,
    pub z: WeylElem,
    pub word: Vec<u8>,
    pub j: Vec<u8>,
    pub types: Vec<PosType>,
}

impl Subexpr {
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn type_string(&self) -> String {
        self.types.iter().map(|t| t.letter()).collect()
    }

    pub fn j_string(&self) -> String {
        self.j.iter().map(|&c| (b'0' + c) as char).collect()
    }

    pub fn count(&self, kind: PosType) -> usize {
        self.types.iter().filter(|&&t| t == kind).count()
    }

    /// `q^{|A_j|} (q-1)^{|B_j|}`.
    pub fn mu_count(&self, q: u64) -> u64 {
        q.pow(self.count(PosType::A) as u32) * (q - 1).pow(self.count(PosType::B) as u32)
    }

    /// Every admissible `μ`, leftmost position most significant.
    pub fn mu_values(&self, group: &Group) -> Vec<MuAssignment> {
        let k = group.field();
        let mut out = vec![Vec::new()];
        for &t in &self.types {
            let dom: Vec<Fq> = match t {
                PosType::A => k.elements().collect(),
                PosType::B => k.units().collect(),
                PosType::C => vec![Fq::ONE],
            };
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<Fq>| {
                    dom.iter().map(move |&d| {
                        let mut v = prefix.clone();
                        v.push(d);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(MuAssignment).collect()
    }
}

/// Position types of `j` over `word`, relative to `y`; `None` unless distinguished.
pub fn classify(rs: &RootSystem, word: &[u8], j: &[u8], y: WeylElem) -> Option<Vec<PosType>> {
    let n = word.len();
    let mut types = vec![PosType::C; n];
    let mut tau = rs.identity();
    for k in (0..n).rev() {
        if j[k] == 0 {
            if rs.descent(tau, word[k], y) != Ordering::Less {
                return None;
            }
            types[k] = PosType::B;
        } else {
            if rs.descent(tau, j[k], y) == Ordering::Less {
                types[k] = PosType::A;
            }
            tau = rs.mul(rs.reflection(j[k]), tau);
        }
    }
    Some(types)
}

/// `τ_n(j)`.
pub fn tau_end(rs: &RootSystem, j: &[u8]) -> WeylElem {
    j.iter()
        .filter(|&&s| s != 0)
        .fold(rs.identity(), |acc, &s| rs.mul(acc, rs.reflection(s)))
}

/// All distinguished subexpressions of the word of `x` with `τ_n(j) = z y⁻¹`,
/// in lexicographic order of `j`.
pub fn distinguished_subexprs(rs: &RootSystem, x: WeylElem, y: WeylElem, z: WeylElem) -> Vec<Subexpr> {
    let word = rs.word(x).to_vec();
    let n = word.len();
    let target = rs.mul(z, rs.inverse(y));
    let mut out = Vec::new();
    for bits in 0..(1u32 << n) {
        let j: Vec<u8> = (0..n)
            .map(|k| if bits >> (n - 1 - k) & 1 == 1 { word[k] } else { 0 })
            .collect();
        if tau_end(rs, &j) != target {
            continue;
        }
        if let Some(types) = classify(rs, &word, &j, y) {
            out.push(Subexpr { x, y, z, word: word.clone(), j, types });
        }
    }
    out
}

/// Values `μ` for the positions of a subexpression, left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MuAssignment(Vec<Fq>);

impl MuAssignment {
    pub fn new(sub: &Subexpr, mu: Vec<Fq>) -> Result<MuAssignment, IntersectError> {
        if mu.len() != sub.len() {
            return Err(IntersectError::MuLength { expected: sub.len(), got: mu.len() });
        }
        for (k, (&t, &m)) in sub.types.iter().zip(&mu).enumerate() {
            let ok = match t {
                PosType::A => true,
                PosType::B => !m.is_zero(),
                PosType::C => m == Fq::ONE,
            };
            if !ok {
                return Err(IntersectError::MuDomain(k));
            }
        }
        Ok(MuAssignment(mu))
    }

    pub fn values(&self) -> &[Fq] {
        &self.0
    }
}

/// `D_j(μ)` as a generator word.
pub fn d_word(group: &Group, sub: &Subexpr, mu: &MuAssignment) -> Vec<Atom> {
    let rs = group.root_system();
    let mut atoms = Vec::new();
    for (k, &t) in sub.types.iter().enumerate() {
        let a = rs.simple(sub.word[k]);
        let m = mu.0[k];
        match t {
            PosType::A => {
                atoms.push(Atom::U(a, m));
                atoms.push(Atom::N(a, Fq::ONE));
            }
            PosType::B => atoms.push(Atom::U(rs.negate(a), m)),
            PosType::C => atoms.push(Atom::N(a, Fq::ONE)),
        }
    }
    atoms
}

/// `D'_j(μ)`: B positions use `u_α(1/μ) n_α(-1/μ) u_α(1/μ)`.
pub fn d_prime_word(group: &Group, sub: &Subexpr, mu: &MuAssignment) -> Vec<Atom> {
    let rs = group.root_system();
    let k = group.field();
    let mut atoms = Vec::new();
    for (idx, &t) in sub.types.iter().enumerate() {
        let a = rs.simple(sub.word[idx]);
        let m = mu.0[idx];
        match t {
            PosType::A => {
                atoms.push(Atom::U(a, m));
                atoms.push(Atom::N(a, Fq::ONE));
            }
            PosType::B => {
                let r = k.recip(m);
                atoms.push(Atom::U(a, r));
                atoms.push(Atom::N(a, k.neg(r)));
                atoms.push(Atom::U(a, r));
            }
            PosType::C => atoms.push(Atom::N(a, Fq::ONE)),
        }
    }
    atoms
}

/// The two factorizations `D = U' ẋ t_μ V' = ż U_j ẏ⁻¹ t_0 V_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartOne {
    pub d: GroupElem,
    pub u_prime: Unipotent,
    pub t_mu: Torus,
    pub v_prime: Unipotent,
    pub u_j: Unipotent,
    pub t_zero: Torus,
    pub v_j: Unipotent,
}

/// `s` with `ẏ⁻¹ = s · lift(y⁻¹)`.
fn inverse_lift_torus(group: &Group, y: WeylElem) -> Torus {
    let inv = group.invert(&group.lift(y));
    debug_assert!(inv.u.is_identity() && inv.v.is_identity());
    inv.t
}

pub fn part_one(group: &Group, sub: &Subexpr, mu: &MuAssignment) -> Result<PartOne, IntersectError> {
    let s = inverse_lift_torus(group, sub.y);
    part_one_with(group, sub, mu, s)
}

fn part_one_with(
    group: &Group,
    sub: &Subexpr,
    mu: &MuAssignment,
    y_inv_torus: Torus,
) -> Result<PartOne, IntersectError> {
    let rs = group.root_system();
    let d = group.normal_form(&d_word(group, sub, mu))?;
    let d2 = group.normal_form(&d_prime_word(group, sub, mu))?;
    if d != d2 {
        return Err(IntersectError::InconsistentForms);
    }
    if d.w != sub.x {
        return Err(IntersectError::WrongCell);
    }
    let x_inv = rs.inverse(sub.x);
    let t_mu = group.weyl_act_torus(x_inv, d.t);

    let z_inv = group.invert(&group.lift(sub.z));
    let h = group.multiply(&z_inv, &d);
    if h.w != rs.inverse(sub.y) {
        return Err(IntersectError::WrongCell);
    }
    let t_zero = group.weyl_act_torus(sub.y, group.torus_mul(h.t, group.torus_inv(y_inv_torus)));
    Ok(PartOne { d, u_prime: d.u, t_mu, v_prime: d.v, u_j: h.u, t_zero, v_j: h.v })
}

/// `u · ẋt_x · u′`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UxuForm {
    pub u: Unipotent,
    pub x: Point,
    pub u2: Unipotent,
}

/// `żt_z · v · (ẏt_y)⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZuyForm {
    pub z: Point,
    pub v: Unipotent,
    pub y: Point,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetRep {
    pub sub: Subexpr,
    pub mu: MuAssignment,
    pub g: GroupElem,
    pub uxu: UxuForm,
    pub zuy: ZuyForm,
    pub t_mu: Torus,
    pub t_zero: Torus,
}

/// Toral data of Part II that depends only on `(t_x, t_y, t_z)`.
struct Toral {
    /// `(x⁻¹z)·t_z`
    a: Torus,
    /// `y·t_y⁻¹`
    b: Torus,
    /// `z·t_z`
    zt: Torus,
}

fn toral(group: &Group, x: Point, y: Point, z: Point) -> Toral {
    let rs = group.root_system();
    let xz = rs.mul(rs.inverse(x.w), z.w);
    Toral {
        a: group.weyl_act_torus(xz, z.t),
        b: group.weyl_act_torus(y.w, group.torus_inv(y.t)),
        zt: group.weyl_act_torus(z.w, z.t),
    }
}

/// `(x⁻¹z)·t_z · t_μ · t_0⁻¹ · y·t_y⁻¹`, the torus part forced on `ẋ`.
fn forced_torus(group: &Group, tor: &Toral, p1: &PartOne) -> Torus {
    let t = group.torus_mul(tor.a, p1.t_mu);
    let t = group.torus_mul(t, group.torus_inv(p1.t_zero));
    group.torus_mul(t, tor.b)
}

fn scale_by(group: &Group, u: &Unipotent, t: Torus, inverse: bool) -> Unipotent {
    let t = if inverse { group.torus_inv(t) } else { t };
    group.torus_conjugate(t, u)
}

/// Assembles the representative for one `(j, μ)` passing the toral condition.
pub fn assemble(group: &Group, x: Point, y: Point, z: Point, sub: &Subexpr, mu: &MuAssignment, p1: &PartOne) -> CosetRep {
    let tor = toral(group, x, y, z);
    let u = scale_by(group, &p1.u_prime, tor.zt, false);
    let r = group.torus_mul(group.torus_inv(p1.t_zero), tor.b);
    let diff = group.unipotent_mul(&p1.v_prime, &group.unipotent_inv(&p1.v_j));
    let u2 = scale_by(group, &diff, r, true);
    let zt = GroupElem { t: tor.zt, ..group.lift(z.w) };
    let g = group.multiply(&group.multiply(&zt, &group.from_unipotent(p1.u_j)), &group.invert(&group.lift_torus(y.w, y.t)));
    CosetRep {
        sub: sub.clone(),
        mu: mu.clone(),
        g,
        uxu: UxuForm { u, x, u2 },
        zuy: ZuyForm { z, v: p1.u_j, y },
        t_mu: p1.t_mu,
        t_zero: p1.t_zero,
    }
}

/// The full algorithm: one representative per `(j, μ)` satisfying the toral condition.
pub fn intersect(group: &Group, x: Point, y: Point, z: Point) -> Result<Vec<CosetRep>, IntersectError> {
    let rs = group.root_system();
    let tor = toral(group, x, y, z);
    let s = inverse_lift_torus(group, y.w);
    let mut out = Vec::new();
    for sub in distinguished_subexprs(rs, x.w, y.w, z.w) {
        for mu in sub.mu_values(group) {
            let p1 = part_one_with(group, &sub, &mu, s)?;
            if forced_torus(group, &tor, &p1) == x.t {
                out.push(assemble(group, x, y, z, &sub, &mu, &p1));
            }
        }
    }
    Ok(out)
}

/// Product `u · ẋt_x · u′` of the first factorization.
pub fn uxu_product(group: &Group, f: &UxuForm) -> GroupElem {
    let mid = group.multiply(&group.from_unipotent(f.u), &group.lift_torus(f.x.w, f.x.t));
    group.multiply(&mid, &group.from_unipotent(f.u2))
}

/// Product `żt_z · v · (ẏt_y)⁻¹` of the second factorization.
pub fn zuy_product(group: &Group, f: &ZuyForm) -> GroupElem {
    let left = group.multiply(&group.lift_torus(f.z.w, f.z.t), &group.from_unipotent(f.v));
    group.multiply(&left, &group.invert(&group.lift_torus(f.y.w, f.y.t)))
}

/// Part I precomputed for one Weyl triple; Part II is then a table lookup.
#[derive(Debug, Clone)]
pub struct IntersectionPlan {
    pub x: WeylElem,
    pub y: WeylElem,
    pub z: WeylElem,
    pub subs: Vec<Subexpr>,
    entries: BTreeMap<Torus, Vec<PlanEntry>>,
    total: usize,
}

/// The ψ-relevant data of one `(j, μ)`.
#[derive(Debug, Clone)]
pub struct PlanEntry {
    pub sub: usize,
    pub mu: MuAssignment,
    pub t_zero: Torus,
    /// Simple coordinates of `U'`.
    pub u_prime: [Fq; 2],
    /// Simple coordinates of `V' V_j⁻¹`.
    pub v_diff: [Fq; 2],
    /// `Δ U_j`.
    pub delta_v: Fq,
}

impl IntersectionPlan {
    pub fn new(group: &Group, x: WeylElem, y: WeylElem, z: WeylElem) -> Result<IntersectionPlan, IntersectError> {
        let k = group.field();
        let subs = distinguished_subexprs(group.root_system(), x, y, z);
        let s = inverse_lift_torus(group, y);
        let mut entries: BTreeMap<Torus, Vec<PlanEntry>> = BTreeMap::new();
        let mut total = 0;
        for (idx, sub) in subs.iter().enumerate() {
            for mu in sub.mu_values(group) {
                let p1 = part_one_with(group, sub, &mu, s)?;
                let key = group.torus_mul(p1.t_mu, group.torus_inv(p1.t_zero));
                let (u1, u2) = group.delta_coords(&p1.u_prime);
                let (v1, v2) = group.delta_coords(&p1.v_prime);
                let (j1, j2) = group.delta_coords(&p1.v_j);
                let (w1, w2) = group.delta_coords(&p1.u_j);
                entries.entry(key).or_default().push(PlanEntry {
                    sub: idx,
                    mu,
                    t_zero: p1.t_zero,
                    u_prime: [u1, u2],
                    v_diff: [k.sub(v1, j1), k.sub(v2, j2)],
                    delta_v: k.add(w1, w2),
                });
                total += 1;
            }
        }
        Ok(IntersectionPlan { x, y, z, subs, entries, total })
    }

    /// Number of `(j, μ)` pairs before the toral filter.
    pub fn total(&self) -> usize {
        self.total
    }

    /// Visits every `(j, μ)` passing the toral condition, with the trace of
    /// its summand `Δv - Δu - Δu′`.
    pub fn for_each_term(
        &self,
        group: &Group,
        tx: Torus,
        ty: Torus,
        tz: Torus,
        mut visit: impl FnMut(&PlanEntry, Fq),
    ) {
        let k = group.field();
        let tor = toral(
            group,
            Point { w: self.x, t: tx },
            Point { w: self.y, t: ty },
            Point { w: self.z, t: tz },
        );
        // forced = a · key · b must equal t_x.
        let target = group.torus_mul(tx, group.torus_inv(group.torus_mul(tor.a, tor.b)));
        let Some(list) = self.entries.get(&target) else {
            return;
        };
        let [z1, z2] = tor.zt.chi();
        for e in list {
            let r = group.torus_mul(group.torus_inv(e.t_zero), tor.b);
            let [r1, r2] = r.chi();
            let du = k.add(k.mul(z1, e.u_prime[0]), k.mul(z2, e.u_prime[1]));
            let du2 = k.add(k.div(e.v_diff[0], r1), k.div(e.v_diff[1], r2));
            let arg = k.sub(e.delta_v, k.add(du, du2));
            visit(e, arg);
        }
    }
}

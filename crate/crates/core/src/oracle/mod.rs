//! Brute-force checks that share nothing with the intersection algorithm:
//! group enumeration, double-coset intersections by scanning, and structure
//! constants from explicit group-algebra products.

pub mod realization;

use alloc::borrow::Cow;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::chevalley::{Group, GroupElem, Torus, Unipotent};
use crate::cyclo::{CharSum, CycloNum, Rational};
use crate::gf::Fq;
use crate::hecke::BasisElem;
use crate::intersect::Point;
use crate::rootsys::WeylElem;
use realization::{Mat, MatrixModel};

/// Default work budget, in group multiplications.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("brute force needs {needed} steps, budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
}

fn guard(needed: u64, budget: u64) -> Result<(), OracleError> {
    if needed > budget {
        return Err(OracleError::BudgetExceeded { needed, budget });
    }
    Ok(())
}

/// Every element of `U` with coordinates supported on `support`.
pub fn unipotents_on(group: &Group, support: &[usize]) -> Vec<Unipotent> {
    let k = group.field();
    let mut out = vec![Unipotent::IDENTITY];
    for &b in support {
        out = out
            .iter()
            .flat_map(|u| {
                k.elements().map(move |x| {
                    let mut c = *u.coords();
                    c[b] = x;
                    Unipotent::from_coords(&c)
                })
            })
            .collect();
    }
    out
}

/// All of `U`.
pub fn unipotents(group: &Group) -> Vec<Unipotent> {
    let all: Vec<usize> = (0..group.n_pos()).collect();
    unipotents_on(group, &all)
}

/// Visits every Bruhat normal form once and returns the count.
pub fn enumerate_group(group: &Group, budget: u64, mut f: impl FnMut(&GroupElem)) -> Result<u64, OracleError> {
    guard(group.order(), budget)?;
    let rs = group.root_system();
    let k = group.field();
    let us = unipotents(group);
    let mut count = 0;
    for w in rs.weyl_elements() {
        let vs = unipotents_on(group, &rs.inversion_set(w));
        for l in k.units() {
            for m in k.units() {
                let t = Torus::new(l, m).expect("units");
                for u in &us {
                    for v in &vs {
                        f(&GroupElem { u: *u, t, w, v: *v });
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(count)
}

/// `ψ(u)` as a trace argument.
fn delta(group: &Group, u: &Unipotent) -> Fq {
    let (a, b) = group.delta_coords(u);
    group.field().add(a, b)
}

/// Whether `g ∈ U ẇt U`.
pub fn in_double_coset(group: &Group, g: &GroupElem, p: Point) -> bool {
    let n = group.lift_torus(p.w, p.t);
    g.w == n.w && g.t == n.t
}

/// Identifies the left coset `gU`.
pub type CosetKey = (Torus, WeylElem, Unipotent);

pub fn coset_key(group: &Group, g: &GroupElem) -> CosetKey {
    let h = group.invert(g);
    (h.t, h.w, h.v)
}

/// A left coset `gU` of `UℓU ∩ nUm⁻¹U` with `g = uℓ = n v m⁻¹ v₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteCoset {
    pub key: CosetKey,
    pub g: GroupElem,
    pub u: Unipotent,
    pub v: Unipotent,
    pub v2: Unipotent,
}

/// Scans `uℓ` over `u ∈ U` and keeps the cosets lying in `nUm⁻¹U`, sorted by key.
pub fn brute_intersect(group: &Group, l: Point, m: Point, n: Point, budget: u64) -> Result<Vec<BruteCoset>, OracleError> {
    let us = unipotents(group);
    guard(us.len() as u64, budget)?;
    let lg = group.lift_torus(l.w, l.t);
    let n_inv = group.invert(&group.lift_torus(n.w, n.t));
    let m_inv = group.invert(&group.lift_torus(m.w, m.t));
    debug_assert!(m_inv.u.is_identity() && m_inv.v.is_identity());
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for u in us {
        let g = group.multiply(&group.from_unipotent(u), &lg);
        let key = coset_key(group, &g);
        if !seen.insert(key) {
            continue;
        }
        let h = group.multiply(&n_inv, &g);
        if h.w == m_inv.w && h.t == m_inv.t {
            out.push(BruteCoset { key, g, u, v: h.u, v2: h.v });
        }
    }
    out.sort_by_key(|c| c.key);
    Ok(out)
}

/// `[e_i e_j : e_k]` summed over the scanned cosets: `Σ ψ(u)⁻¹ ψ(v) ψ(v₂)`.
pub fn brute_constant(group: &Group, i: &BasisElem, j: &BasisElem, k: &BasisElem, budget: u64) -> Result<CycloNum, OracleError> {
    let cosets = brute_intersect(group, i.point(group), j.point(group), k.point(group), budget)?;
    Ok(coset_sum(group, &cosets))
}

/// `Σ ψ(u)⁻¹ ψ(v) ψ(v₂)` over already scanned cosets.
pub fn coset_sum(group: &Group, cosets: &[BruteCoset]) -> CycloNum {
    let f = group.field();
    let mut acc = CharSum::new(f.p());
    for c in cosets {
        let arg = f.sub(f.add(delta(group, &c.v), delta(group, &c.v2)), delta(group, &c.u));
        acc.push(f, arg);
    }
    acc.value()
}

/// A finitely supported element of the group algebra, keyed by matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgVec {
    p: u32,
    terms: BTreeMap<Mat, CycloNum>,
}

impl GroupAlgVec {
    pub fn zero(p: u32) -> GroupAlgVec {
        GroupAlgVec { p, terms: BTreeMap::new() }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Mat, CycloNum> {
        &self.terms
    }

    pub fn coeff(&self, g: &Mat) -> CycloNum {
        self.terms.get(g).cloned().unwrap_or_else(|| CycloNum::zero(self.p))
    }

    fn from_counts(p: u32, counts: BTreeMap<Mat, CharSum>, scale: Rational) -> GroupAlgVec {
        let terms = counts
            .into_iter()
            .map(|(m, c)| (m, c.value().scale(scale)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        GroupAlgVec { p, terms }
    }

    /// Full convolution product.
    pub fn mul(&self, other: &GroupAlgVec, model: &MatrixModel<'_>, budget: u64) -> Result<GroupAlgVec, OracleError> {
        guard(self.len() as u64 * other.len() as u64, budget)?;
        let mut terms: BTreeMap<Mat, CycloNum> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let key = model.canonical(&model.mul(a, b));
                let e = terms.entry(key).or_insert_with(|| CycloNum::zero(self.p));
                *e += &(x * y);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(GroupAlgVec { p: self.p, terms })
    }

    /// The coefficient of `target` in `self · other`.
    pub fn product_coeff(&self, other: &GroupAlgVec, target: &Mat, model: &MatrixModel<'_>) -> CycloNum {
        let mut acc = CycloNum::zero(self.p);
        for (a, x) in &self.terms {
            let b = model.canonical(&model.mul(&model.inverse(a), target));
            if let Some(y) = other.terms.get(&b) {
                acc += &(x * y);
            }
        }
        acc
    }
}

/// Matrices of all `u ∈ U` together with `ψ(u)` as a trace argument.
fn unipotent_matrices(group: &Group, model: &MatrixModel<'_>) -> Vec<(Mat, Fq)> {
    let n = group.n_pos();
    unipotents(group)
        .into_iter()
        .map(|u| {
            let m = (0..n).fold(model.identity(), |acc, b| model.mul(&acc, &model.root(b, u.coord(b))));
            let s = model.simple_sum(&m);
            (m, s)
        })
        .collect()
}

fn u_order(group: &Group) -> i128 {
    (group.field().q() as i128).pow(group.n_pos() as u32)
}

/// `e = |U|⁻¹ Σ_u ψ(u⁻¹) u`.
pub fn idempotent(group: &Group, model: &MatrixModel<'_>) -> GroupAlgVec {
    let f = group.field();
    let mut counts = BTreeMap::new();
    for (m, s) in unipotent_matrices(group, model) {
        counts.entry(model.canonical(&m)).or_insert_with(|| CharSum::new(f.p())).push(f, f.neg(s));
    }
    GroupAlgVec::from_counts(f.p(), counts, Rational::new(1, u_order(group)))
}

/// `e · n · e`, expanded term by term.
pub fn sandwich(group: &Group, model: &MatrixModel<'_>, n: &Mat, budget: u64) -> Result<GroupAlgVec, OracleError> {
    let f = group.field();
    let us = unipotent_matrices(group, model);
    guard((us.len() * us.len()) as u64, budget)?;
    let left: Vec<(Mat, Fq)> = us.iter().map(|(m, s)| (model.mul(m, n), *s)).collect();
    let mut counts: BTreeMap<Mat, CharSum> = BTreeMap::new();
    for (a, s) in &left {
        for (b, r) in &us {
            let key = model.canonical(&model.mul(a, b));
            counts.entry(key).or_insert_with(|| CharSum::new(f.p())).push(f, f.neg(f.add(*s, *r)));
        }
    }
    let uo = u_order(group);
    Ok(GroupAlgVec::from_counts(f.p(), counts, Rational::new(1, uo * uo)))
}

/// Structure constants from explicit products `(e n_i e)(e n_j e)`, normalized
/// by the coefficient of `n_k` in `e n_k e` and the factors `q^{ℓ(w)}`.
pub struct AlgebraOracle<'g> {
    group: &'g Group,
    model: MatrixModel<'g>,
    budget: u64,
    cache: BTreeMap<BasisElem, (Mat, GroupAlgVec)>,
}

impl<'g> AlgebraOracle<'g> {
    pub fn new(group: &'g Group, budget: u64) -> AlgebraOracle<'g> {
        AlgebraOracle { group, model: MatrixModel::new(group), budget, cache: BTreeMap::new() }
    }

    pub fn model(&self) -> &MatrixModel<'g> {
        &self.model
    }

    /// Computes and caches `e n e` for each element.
    pub fn prepare<'a>(&mut self, elems: impl IntoIterator<Item = &'a BasisElem>) -> Result<(), OracleError> {
        for b in elems {
            if !self.cache.contains_key(b) {
                let entry = self.compute(b)?;
                self.cache.insert(*b, entry);
            }
        }
        Ok(())
    }

    fn compute(&self, b: &BasisElem) -> Result<(Mat, GroupAlgVec), OracleError> {
        let p = b.point(self.group);
        let n = self.model.canonical(&self.model.elem(&self.group.lift_torus(p.w, p.t)));
        let ene = sandwich(self.group, &self.model, &n, self.budget)?;
        Ok((n, ene))
    }

    fn element(&self, b: &BasisElem) -> Result<Cow<'_, (Mat, GroupAlgVec)>, OracleError> {
        match self.cache.get(b) {
            Some(e) => Ok(Cow::Borrowed(e)),
            None => self.compute(b).map(Cow::Owned),
        }
    }

    /// `q^{ℓ(w)}`.
    fn weight(&self, b: &BasisElem) -> Rational {
        let len = self.group.root_system().length(b.point(self.group).w);
        Rational::from_integer((self.group.field().q() as i128).pow(len as u32))
    }

    /// `[e_i e_j : e_k]`.
    /// Elements missing from the cache are recomputed on every call; see
    /// [`AlgebraOracle::prepare`].
    pub fn constant(&self, i: &BasisElem, j: &BasisElem, k: &BasisElem) -> Result<CycloNum, OracleError> {
        let ei = self.element(i)?;
        let ej = self.element(j)?;
        let ek = self.element(k)?;
        let nk = &ek.0;
        let raw = ei.1.product_coeff(&ej.1, nk, &self.model);
        let norm = ek.1.coeff(nk).as_rational().expect("rational leading coefficient");
        assert!(!norm.is_zero(), "n_k lies in the support of e n_k e");
        let scale = self.weight(i) * self.weight(j) / (self.weight(k) * norm);
        Ok(raw.scale(scale))
    }
}

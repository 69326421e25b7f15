//! Adjoint Chevalley groups of types A2 and B2 over `F_q`, with a rewriting
//! engine to the Bruhat normal form `u · t · ẇ · v`.
//!
//! Torus elements are stored by their values on the simple roots:
//! `t_1(λ) t_2(μ)` has `χ(α1) = λ`, `χ(α2) = μ`, and acts on `u_β(x)` by
//! `χ(β) = λ^{c1} μ^{c2}` for `β = c1 α1 + c2 α2`.

use alloc::vec::Vec;

use crate::gf::{Field, Fq};
use crate::rootsys::{CartanType, RootIdx, RootSystem, WeylElem};

pub const MAX_POS: usize = 4;
const WORD_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChevalleyError {
    #[error("n_α(t) requires t ≠ 0")]
    ZeroParameter,
    #[error("torus coordinates must be nonzero")]
    ZeroTorus,
    #[error("type B2 requires odd characteristic")]
    CharacteristicTwo,
    #[error("root index {0} out of range")]
    BadRoot(usize),
    #[error("positive root expected, got index {0}")]
    NotPositive(usize),
    #[error("code {0} is not a field element")]
    BadCode(u32),
    #[error("right unipotent factor has support outside the inversion set")]
    NotInInversionSet,
}

/// `∏ u_{α_i}(x_i)` over the positive roots in the fixed order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Unipotent([Fq; MAX_POS]);

impl Unipotent {
    pub const IDENTITY: Unipotent = Unipotent([Fq::ZERO; MAX_POS]);

    /// From coordinates in the fixed root order; missing entries are zero.
    pub fn from_coords(xs: &[Fq]) -> Unipotent {
        let mut c = [Fq::ZERO; MAX_POS];
        c[..xs.len()].copy_from_slice(xs);
        Unipotent(c)
    }

    pub fn coord(&self, beta: RootIdx) -> Fq {
        self.0[beta]
    }

    pub fn coords(&self) -> &[Fq; MAX_POS] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }
}

/// A torus element `t_1(χ(α1)) t_2(χ(α2))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Torus([Fq; 2]);

impl Torus {
    pub const ONE: Torus = Torus([Fq::ONE, Fq::ONE]);

    pub fn new(l: Fq, m: Fq) -> Result<Torus, ChevalleyError> {
        if l.is_zero() || m.is_zero() {
            Err(ChevalleyError::ZeroTorus)
        } else {
            Ok(Torus([l, m]))
        }
    }

    /// `(χ(α1), χ(α2))`.
    pub fn chi(&self) -> [Fq; 2] {
        self.0
    }
}

/// The Bruhat normal form `u · t · ẇ · v` with `v` supported on `Φ_w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElem {
    pub u: Unipotent,
    pub t: Torus,
    pub w: WeylElem,
    pub v: Unipotent,
}

/// A generator: `u_α(x)`, `n_α(t)` (for any root `α`) or a torus element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Atom {
    U(RootIdx, Fq),
    N(RootIdx, Fq),
    T(Torus),
}

#[derive(Clone, Copy)]
struct CommTerm {
    root: u8,
    coef: Fq,
    ex: u8,
    ey: u8,
}

#[derive(Clone, Copy, Default)]
struct CommEntry {
    len: u8,
    terms: [Option<CommTerm>; 2],
}

#[derive(Clone)]
struct Word {
    len: usize,
    buf: [(u8, Fq); WORD_CAP],
}

impl Word {
    fn new() -> Word {
        Word { len: 0, buf: [(0, Fq::ZERO); WORD_CAP] }
    }

    fn push(&mut self, root: u8, x: Fq) {
        assert!(self.len < WORD_CAP, "collection word overflow");
        self.buf[self.len] = (root, x);
        self.len += 1;
    }

    fn remove(&mut self, i: usize) {
        self.buf.copy_within(i + 1..self.len, i);
        self.len -= 1;
    }

    fn replace_pair(&mut self, i: usize, items: &[(u8, Fq)]) {
        let n = items.len();
        assert!(self.len + n - 2 <= WORD_CAP, "collection word overflow");
        self.buf.copy_within(i + 2..self.len, i + n);
        self.buf[i..i + n].copy_from_slice(items);
        self.len = self.len + n - 2;
    }
}

#[derive(Clone, Copy)]
struct State {
    u: [Fq; MAX_POS],
    t: Torus,
    w: WeylElem,
    v: [Fq; MAX_POS],
}

/// Signs of `n_i u_β(x) n_i⁻¹ = u_{s_i β}(η x)` on the positive roots.
/// The same sign applies to `-β`.
fn simple_eta(ty: CartanType) -> [&'static [i8]; 2] {
    match ty {
        CartanType::A2 => [&[-1, 1, -1], &[-1, -1, 1]],
        CartanType::B2 => [&[-1, 1, -1, 1], &[-1, -1, 1, 1]],
    }
}

/// `(γ, C, i, j)` for one factor `u_γ(C x^i y^j)`.
type BaseTerm = (u8, i64, u8, u8);

/// `u_a(x) u_b(y) = u_b(y) · ∏ u_γ(C x^i y^j) · u_a(x)` for `a` before `b`.
fn base_commutators(ty: CartanType) -> &'static [(u8, u8, &'static [BaseTerm])] {
    match ty {
        CartanType::A2 => &[(0, 1, &[(2, 1, 1, 1)])],
        CartanType::B2 => &[(0, 1, &[(2, 1, 1, 1), (3, 1, 2, 1)]), (0, 2, &[(3, 2, 1, 1)])],
    }
}

/// The group together with its relation tables.
#[derive(Clone)]
pub struct Group {
    rs: RootSystem,
    field: Field,
    n: usize,
    comm: Vec<CommEntry>,
    conj: Vec<(u8, bool)>,
    conj_rep: Vec<(WeylElem, u8, bool)>,
    simple_w: [WeylElem; 2],
    std_rank: [u8; MAX_POS],
    minus_one: Fq,
}

impl core::fmt::Debug for Group {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Group({}, q={})", self.rs.cartan_type(), self.field.q())
    }
}

impl Group {
    pub fn new(ty: CartanType, field: Field) -> Result<Group, ChevalleyError> {
        if ty == CartanType::B2 && field.p() == 2 {
            return Err(ChevalleyError::CharacteristicTwo);
        }
        let rs = RootSystem::new(ty);
        let n = rs.n_pos();
        let nroots = 2 * n;

        let mut comm = alloc::vec![CommEntry::default(); n * n];
        for &(a, b, terms) in base_commutators(ty) {
            let (a, b) = (a as usize, b as usize);
            let mut fwd = CommEntry::default();
            let mut rev = CommEntry::default();
            for (k, &(g, c, i, j)) in terms.iter().enumerate() {
                fwd.terms[k] = Some(CommTerm { root: g, coef: field.from_int(c), ex: i, ey: j });
                // u_b(y) u_a(x) = u_a(x) K(a, b, -x, y) u_b(y): the terms commute with u_b.
                let sign = if i % 2 == 0 { c } else { -c };
                rev.terms[k] = Some(CommTerm { root: g, coef: field.from_int(sign), ex: j, ey: i });
            }
            fwd.len = terms.len() as u8;
            rev.len = terms.len() as u8;
            comm[a * n + b] = fwd;
            comm[b * n + a] = rev;
        }

        let eta = simple_eta(ty);
        let simple_w = [rs.reflection(1), rs.reflection(2)];
        let apply_simple = |s: u8, beta: usize| -> (usize, bool) {
            let img = rs.act(simple_w[s as usize - 1], beta);
            let base = if beta < n { beta } else { beta - n };
            (img, eta[s as usize - 1][base] < 0)
        };
        let order = rs.weyl_order();
        let mut conj = alloc::vec![(0u8, false); order * nroots];
        for w in rs.weyl_elements() {
            for beta in 0..nroots {
                let (mut r, mut neg) = (beta, false);
                for &s in rs.word(w).iter().rev() {
                    let (r2, flip) = apply_simple(s, r);
                    r = r2;
                    neg ^= flip;
                }
                debug_assert_eq!(r, rs.act(w, beta));
                conj[w.index() * nroots + beta] = (r as u8, neg);
            }
        }
        let mut conj_rep = Vec::with_capacity(nroots);
        for beta in 0..nroots {
            let rep = rs
                .weyl_elements()
                .flat_map(|w| [1u8, 2].map(|i| (w, i)))
                .find(|&(w, i)| rs.act(w, rs.simple(i)) == beta)
                .expect("every root is conjugate to a simple root");
            let neg = conj[rep.0.index() * nroots + rs.simple(rep.1)].1;
            conj_rep.push((rep.0, rep.1, neg));
        }

        let minus_one = field.neg(Fq::ONE);
        Ok(Group {
            rs,
            field,
            n,
            comm,
            conj,
            conj_rep,
            simple_w,
            std_rank: [0, 1, 2, 3],
            minus_one,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn cartan_type(&self) -> CartanType {
        self.rs.cartan_type()
    }

    /// Number of positive roots.
    pub fn n_pos(&self) -> usize {
        self.n
    }

    /// `|G| = q^N (q-1)^2 Σ_w q^{ℓ(w)}`.
    pub fn order(&self) -> u64 {
        let q = self.field.q() as u64;
        let poincare: u64 = self.rs.weyl_elements().map(|w| q.pow(self.rs.length(w) as u32)).sum();
        q.pow(self.n as u32) * (q - 1) * (q - 1) * poincare
    }

    /// `ẇ u_β(x) ẇ⁻¹ = u_{w(β)}(±x)`: returns `w(β)` and whether the sign is negative.
    pub fn conj_sign(&self, w: WeylElem, beta: RootIdx) -> (RootIdx, bool) {
        let (r, neg) = self.conj[w.index() * 2 * self.n + beta];
        (r as usize, neg)
    }

    // ---- torus ----

    pub fn torus(&self, l: Fq, m: Fq) -> Result<Torus, ChevalleyError> {
        Torus::new(l, m)
    }

    pub fn torus_mul(&self, a: Torus, b: Torus) -> Torus {
        let k = &self.field;
        Torus([k.mul(a.0[0], b.0[0]), k.mul(a.0[1], b.0[1])])
    }

    pub fn torus_inv(&self, a: Torus) -> Torus {
        let k = &self.field;
        Torus([k.recip(a.0[0]), k.recip(a.0[1])])
    }

    /// `χ_t(β)`.
    #[inline]
    pub fn chi(&self, t: Torus, beta: RootIdx) -> Fq {
        let r = self.rs.root(beta);
        let k = &self.field;
        k.mul(k.pow(t.0[0], r.c1 as i64), k.pow(t.0[1], r.c2 as i64))
    }

    /// `ẇ t ẇ⁻¹`, whose character is `β ↦ χ_t(w⁻¹ β)`.
    pub fn weyl_act_torus(&self, w: WeylElem, t: Torus) -> Torus {
        let wi = self.rs.inverse(w);
        Torus([self.chi(t, self.rs.act(wi, 0)), self.chi(t, self.rs.act(wi, 1))])
    }

    /// The coroot element `h_{α_i}(s)`, with `χ(α_j) = s^{⟨α_j, α_i^∨⟩}`.
    pub fn coroot(&self, i: u8, s: Fq) -> Torus {
        let k = &self.field;
        Torus([k.pow(s, self.rs.cartan(1, i) as i64), k.pow(s, self.rs.cartan(2, i) as i64)])
    }

    /// `t u t⁻¹`.
    pub fn torus_conjugate(&self, t: Torus, u: &Unipotent) -> Unipotent {
        let mut out = *u;
        for (b, x) in out.0.iter_mut().enumerate().take(self.n) {
            *x = self.field.mul(*x, self.chi(t, b));
        }
        out
    }

    // ---- unipotent ----

    /// `u_β(x)` for a positive root `β`.
    pub fn root_elem(&self, beta: RootIdx, x: Fq) -> Unipotent {
        assert!(beta < self.n, "positive root expected");
        let mut c = [Fq::ZERO; MAX_POS];
        c[beta] = x;
        Unipotent(c)
    }

    /// Simple-root coordinates `(x_{α1}, x_{α2})`.
    pub fn delta_coords(&self, u: &Unipotent) -> (Fq, Fq) {
        (u.0[0], u.0[1])
    }

    pub fn unipotent_mul(&self, a: &Unipotent, b: &Unipotent) -> Unipotent {
        let mut w = self.word_of(&a.0, &self.std_rank);
        self.extend_word(&mut w, &b.0, &self.std_rank);
        Unipotent(self.collect(&mut w, &self.std_rank))
    }

    pub fn unipotent_inv(&self, a: &Unipotent) -> Unipotent {
        let mut w = Word::new();
        for b in (0..self.n).rev() {
            if !a.0[b].is_zero() {
                w.push(b as u8, self.field.neg(a.0[b]));
            }
        }
        Unipotent(self.collect(&mut w, &self.std_rank))
    }

    /// Rewrites `∏ u_{β_k}(x_k)` (positive roots) into the fixed order.
    pub fn collect_positive(&self, factors: &[(RootIdx, Fq)]) -> Result<Unipotent, ChevalleyError> {
        let mut w = Word::new();
        for &(b, x) in factors {
            if b >= self.n {
                return Err(ChevalleyError::NotPositive(b));
            }
            w.push(b as u8, x);
        }
        Ok(Unipotent(self.collect(&mut w, &self.std_rank)))
    }

    fn comm(&self, a: u8, b: u8) -> &CommEntry {
        &self.comm[a as usize * self.n + b as usize]
    }

    fn word_of(&self, c: &[Fq; MAX_POS], rank: &[u8; MAX_POS]) -> Word {
        let mut w = Word::new();
        self.extend_word(&mut w, c, rank);
        w
    }

    /// Appends the product of `c` taken in the order given by `rank`.
    fn extend_word(&self, w: &mut Word, c: &[Fq; MAX_POS], rank: &[u8; MAX_POS]) {
        let mut order = [0u8; MAX_POS];
        for b in 0..self.n {
            order[rank[b] as usize] = b as u8;
        }
        for &b in &order[..self.n] {
            if !c[b as usize].is_zero() {
                w.push(b, c[b as usize]);
            }
        }
    }

    /// Collects a word of positive root elements into the order given by
    /// `rank`; returns coordinates indexed by root.
    fn collect(&self, w: &mut Word, rank: &[u8; MAX_POS]) -> [Fq; MAX_POS] {
        let k = &self.field;
        let mut i = 0;
        while i < w.len {
            let (a, x) = w.buf[i];
            if x.is_zero() {
                w.remove(i);
                i = i.saturating_sub(1);
                continue;
            }
            if i + 1 >= w.len {
                break;
            }
            let (b, y) = w.buf[i + 1];
            if y.is_zero() {
                w.remove(i + 1);
                continue;
            }
            if a == b {
                w.buf[i].1 = k.add(x, y);
                w.remove(i + 1);
                continue;
            }
            if rank[a as usize] > rank[b as usize] {
                let entry = *self.comm(a, b);
                let mut items = [(0u8, Fq::ZERO); 4];
                items[0] = (b, y);
                let mut m = 1;
                for term in entry.terms.iter().take(entry.len as usize).flatten() {
                    let val = k.mul(
                        term.coef,
                        k.mul(k.pow(x, term.ex as i64), k.pow(y, term.ey as i64)),
                    );
                    items[m] = (term.root, val);
                    m += 1;
                }
                items[m] = (a, x);
                w.replace_pair(i, &items[..m + 1]);
                i = i.saturating_sub(1);
                continue;
            }
            i += 1;
        }
        let mut out = [Fq::ZERO; MAX_POS];
        for &(b, x) in &w.buf[..w.len] {
            out[b as usize] = x;
        }
        out
    }

    // ---- rewriting engine ----

    fn start(&self) -> State {
        State { u: [Fq::ZERO; MAX_POS], t: Torus::ONE, w: self.rs.identity(), v: [Fq::ZERO; MAX_POS] }
    }

    fn state_of(&self, g: &GroupElem) -> State {
        State { u: g.u.0, t: g.t, w: g.w, v: g.v.0 }
    }

    fn right_pos(&self, st: &mut State, beta: usize, x: Fq) {
        if x.is_zero() {
            return;
        }
        let mut w = self.word_of(&st.v, &self.std_rank);
        w.push(beta as u8, x);
        st.v = self.collect(&mut w, &self.std_rank);
    }

    fn right_unipotent(&self, st: &mut State, c: &[Fq; MAX_POS]) {
        let mut w = self.word_of(&st.v, &self.std_rank);
        self.extend_word(&mut w, c, &self.std_rank);
        st.v = self.collect(&mut w, &self.std_rank);
    }

    fn right_torus(&self, st: &mut State, s: Torus) {
        if s == Torus::ONE {
            return;
        }
        let k = &self.field;
        for b in 0..self.n {
            if !st.v[b].is_zero() {
                st.v[b] = k.div(st.v[b], self.chi(s, b));
            }
        }
        st.t = self.torus_mul(st.t, self.weyl_act_torus(st.w, s));
    }

    /// Moves the part of `v` outside `Φ_w` to the left of `t ẇ`.
    fn normalize(&self, st: &mut State) {
        if st.v.iter().all(|x| x.is_zero()) {
            return;
        }
        let n = self.n;
        let w = st.w;
        let inverted = |b: usize| !self.rs.is_positive(self.rs.act(w, b));
        let mut rank = [0u8; MAX_POS];
        let mut r = 0u8;
        for pass in [false, true] {
            for (b, slot) in rank.iter_mut().enumerate().take(n) {
                if inverted(b) == pass {
                    *slot = r;
                    r += 1;
                }
            }
        }
        let mut word = self.word_of(&st.v, &self.std_rank);
        let c = self.collect(&mut word, &rank);
        let mut left = self.word_of(&st.u, &self.std_rank);
        let mut v_in = [Fq::ZERO; MAX_POS];
        let mut moved = false;
        let mut order = [0u8; MAX_POS];
        for b in 0..n {
            order[rank[b] as usize] = b as u8;
        }
        for &b in &order[..n] {
            let b = b as usize;
            if c[b].is_zero() {
                continue;
            }
            if inverted(b) {
                v_in[b] = c[b];
            } else {
                let (img, neg) = self.conj_sign(w, b);
                let mut x = self.field.mul(c[b], self.chi(st.t, img));
                if neg {
                    x = self.field.neg(x);
                }
                left.push(img as u8, x);
                moved = true;
            }
        }
        if moved {
            st.u = self.collect(&mut left, &self.std_rank);
        }
        st.v = v_in;
    }

    /// `n_i⁻¹ (∏ u_β(x_β)) n_i` for a product avoiding `α_i`, in the given order.
    fn conj_by_simple_inv(&self, i: u8, c: &[Fq; MAX_POS], rank: &[u8; MAX_POS]) -> [Fq; MAX_POS] {
        let sw = self.simple_w[i as usize - 1];
        let mut order = [0u8; MAX_POS];
        for b in 0..self.n {
            order[rank[b] as usize] = b as u8;
        }
        let mut w = Word::new();
        for &b in &order[..self.n] {
            let b = b as usize;
            if c[b].is_zero() {
                continue;
            }
            let gamma = self.rs.act(sw, b);
            debug_assert!(gamma < self.n);
            let (_, neg) = self.conj_sign(sw, gamma);
            let x = if neg { self.field.neg(c[b]) } else { c[b] };
            w.push(gamma as u8, x);
        }
        self.collect(&mut w, &self.std_rank)
    }

    fn right_simple_n(&self, st: &mut State, i: u8) {
        self.normalize(st);
        let alpha = self.rs.simple(i);
        let sw = self.simple_w[i as usize - 1];
        let ws = self.rs.mul(st.w, sw);
        if self.rs.is_positive(self.rs.act(st.w, alpha)) {
            debug_assert!(st.v[alpha].is_zero());
            st.v = self.conj_by_simple_inv(i, &st.v, &self.std_rank);
            st.w = ws;
            self.normalize(st);
            return;
        }
        let mut rank = [0u8; MAX_POS];
        let mut r = 1u8;
        for (b, slot) in rank.iter_mut().enumerate().take(self.n) {
            if b == alpha {
                *slot = 0;
            } else {
                *slot = r;
                r += 1;
            }
        }
        let mut word = self.word_of(&st.v, &self.std_rank);
        let mut rest = self.collect(&mut word, &rank);
        let c = rest[alpha];
        rest[alpha] = Fq::ZERO;
        let v3 = self.conj_by_simple_inv(i, &rest, &rank);
        st.w = ws;
        st.v = [Fq::ZERO; MAX_POS];
        let k = &self.field;
        if c.is_zero() {
            self.right_torus(st, self.coroot(i, self.minus_one));
        } else {
            // n u_α(c) n = h_α(-1) u_α(-1/c) h_α(1/c) n_α u_α(-1/c)
            let ci = k.recip(c);
            let m = k.neg(ci);
            self.right_torus(st, self.coroot(i, self.minus_one));
            self.right_pos(st, alpha, m);
            self.right_torus(st, self.coroot(i, ci));
            self.right_simple_n(st, i);
            self.right_pos(st, alpha, m);
        }
        self.right_unipotent(st, &v3);
        self.normalize(st);
    }

    fn right_lift(&self, st: &mut State, w: WeylElem) {
        for &s in self.rs.word(w) {
            self.right_simple_n(st, s);
        }
    }

    fn right_lift_inv(&self, st: &mut State, w: WeylElem) {
        for &s in self.rs.word(w).iter().rev() {
            self.right_simple_n(st, s);
            self.right_torus(st, self.coroot(s, self.minus_one));
        }
    }

    fn push(&self, st: &mut State, atom: Atom) -> Result<(), ChevalleyError> {
        let nroots = 2 * self.n;
        match atom {
            Atom::T(t) => {
                if t.0[0].is_zero() || t.0[1].is_zero() {
                    return Err(ChevalleyError::ZeroTorus);
                }
                self.right_torus(st, t);
            }
            Atom::U(beta, x) => {
                if beta >= nroots {
                    return Err(ChevalleyError::BadRoot(beta));
                }
                if beta < self.n {
                    self.right_pos(st, beta, x);
                } else if !x.is_zero() {
                    let (w, i, neg) = self.conj_rep[beta];
                    let y = if neg { self.field.neg(x) } else { x };
                    self.right_lift(st, w);
                    self.right_pos(st, self.rs.simple(i), y);
                    self.right_lift_inv(st, w);
                }
            }
            Atom::N(beta, x) => {
                if beta >= nroots {
                    return Err(ChevalleyError::BadRoot(beta));
                }
                if x.is_zero() {
                    return Err(ChevalleyError::ZeroParameter);
                }
                let (w, i, neg) = self.conj_rep[beta];
                let y = if neg { self.field.neg(x) } else { x };
                self.right_lift(st, w);
                self.right_torus(st, self.coroot(i, y));
                self.right_simple_n(st, i);
                self.right_lift_inv(st, w);
            }
        }
        Ok(())
    }

    fn finish(&self, mut st: State) -> GroupElem {
        self.normalize(&mut st);
        GroupElem { u: Unipotent(st.u), t: st.t, w: st.w, v: Unipotent(st.v) }
    }

    /// The normal form of a product of generators, read left to right.
    pub fn normal_form(&self, atoms: &[Atom]) -> Result<GroupElem, ChevalleyError> {
        let mut st = self.start();
        for &a in atoms {
            self.push(&mut st, a)?;
        }
        Ok(self.finish(st))
    }

    /// `g · (atoms)`.
    pub fn apply(&self, g: &GroupElem, atoms: &[Atom]) -> Result<GroupElem, ChevalleyError> {
        let mut st = self.state_of(g);
        for &a in atoms {
            self.push(&mut st, a)?;
        }
        Ok(self.finish(st))
    }

    pub fn multiply(&self, g: &GroupElem, h: &GroupElem) -> GroupElem {
        let mut st = self.state_of(g);
        self.right_unipotent(&mut st, &h.u.0);
        self.right_torus(&mut st, h.t);
        self.right_lift(&mut st, h.w);
        self.right_unipotent(&mut st, &h.v.0);
        self.finish(st)
    }

    pub fn invert(&self, g: &GroupElem) -> GroupElem {
        let mut st = self.start();
        let vi = self.unipotent_inv(&g.v);
        self.right_unipotent(&mut st, &vi.0);
        self.right_lift_inv(&mut st, g.w);
        self.right_torus(&mut st, self.torus_inv(g.t));
        let ui = self.unipotent_inv(&g.u);
        self.right_unipotent(&mut st, &ui.0);
        self.finish(st)
    }

    pub fn identity(&self) -> GroupElem {
        self.finish(self.start())
    }

    /// The fixed lift `ẇ` of `w`.
    pub fn lift(&self, w: WeylElem) -> GroupElem {
        GroupElem { u: Unipotent::IDENTITY, t: Torus::ONE, w, v: Unipotent::IDENTITY }
    }

    pub fn from_torus(&self, t: Torus) -> GroupElem {
        GroupElem { u: Unipotent::IDENTITY, t, w: self.rs.identity(), v: Unipotent::IDENTITY }
    }

    pub fn from_unipotent(&self, u: Unipotent) -> GroupElem {
        GroupElem { u, t: Torus::ONE, w: self.rs.identity(), v: Unipotent::IDENTITY }
    }

    /// `ẇ t` as a group element.
    pub fn lift_torus(&self, w: WeylElem, t: Torus) -> GroupElem {
        let t_left = self.weyl_act_torus(w, t);
        GroupElem { u: Unipotent::IDENTITY, t: t_left, w, v: Unipotent::IDENTITY }
    }

    /// A generator word whose product is `g`.
    pub fn expand(&self, g: &GroupElem) -> Vec<Atom> {
        let mut out = Vec::new();
        for b in 0..self.n {
            if !g.u.0[b].is_zero() {
                out.push(Atom::U(b, g.u.0[b]));
            }
        }
        out.push(Atom::T(g.t));
        for &s in self.rs.word(g.w) {
            out.push(Atom::N(self.rs.simple(s), Fq::ONE));
        }
        for b in 0..self.n {
            if !g.v.0[b].is_zero() {
                out.push(Atom::U(b, g.v.0[b]));
            }
        }
        out
    }

    /// Checks the normal-form invariants of an externally built element.
    pub fn validate(&self, g: &GroupElem) -> Result<(), ChevalleyError> {
        let q = self.field.q();
        let codes = g.u.0.iter().chain(&g.v.0).chain(&g.t.0);
        if let Some(x) = codes.clone().find(|x| x.code() >= q) {
            return Err(ChevalleyError::BadCode(x.code()));
        }
        if g.t.0.iter().any(|x| x.is_zero()) {
            return Err(ChevalleyError::ZeroTorus);
        }
        if g.w.index() >= self.rs.weyl_order() {
            return Err(ChevalleyError::BadRoot(g.w.index()));
        }
        let inv = self.rs.inversion_set(g.w);
        for b in 0..MAX_POS {
            let outside = b >= self.n || !inv.contains(&b);
            if outside && !g.v.0[b].is_zero() {
                return Err(ChevalleyError::NotInInversionSet);
            }
            if b >= self.n && !g.u.0[b].is_zero() {
                return Err(ChevalleyError::BadRoot(b));
            }
        }
        Ok(())
    }

    /// Whether `g ∈ U`.
    pub fn is_unipotent(&self, g: &GroupElem) -> bool {
        g.t == Torus::ONE && g.w == self.rs.identity() && g.v.is_identity()
    }
}

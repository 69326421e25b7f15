//! Root systems of types A2 and B2 and their Weyl groups.
//!
//! Roots are indexed `0..2N` in the fixed order: positive roots first, then
//! `index N + i` is the negative of positive root `i`.  In B2, `α1` is short.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("unsupported type {0:?}; expected A2 or B2")]
    UnknownType(String),
    #[error("{0:?} is not a word in the simple reflections 1 and 2")]
    BadWord(String),
    #[error("root index {0} out of range")]
    BadRoot(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A2,
    B2,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CartanType::A2 => "A2",
            CartanType::B2 => "B2",
        })
    }
}

impl FromStr for CartanType {
    type Err = RootError;

    fn from_str(s: &str) -> Result<Self, RootError> {
        match s {
            "A2" | "a2" => Ok(CartanType::A2),
            "B2" | "b2" => Ok(CartanType::B2),
            _ => Err(RootError::UnknownType(s.into())),
        }
    }
}

/// `c1 α1 + c2 α2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub c1: i32,
    pub c2: i32,
}

impl Root {
    pub const fn new(c1: i32, c2: i32) -> Root {
        Root { c1, c2 }
    }

    pub fn is_positive(self) -> bool {
        self.c1 >= 0 && self.c2 >= 0
    }
}

impl core::ops::Neg for Root {
    type Output = Root;

    fn neg(self) -> Root {
        Root::new(-self.c1, -self.c2)
    }
}

pub type RootIdx = usize;

/// A Weyl group element, as an index into its [`RootSystem`]'s tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElem(u8);

impl WeylElem {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone)]
struct WeylEntry {
    word: Vec<u8>,
    perm: Vec<u8>,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: CartanType,
    roots: Vec<Root>,
    cartan: [[i32; 2]; 2],
    elems: Vec<WeylEntry>,
    mul: Vec<u8>,
    inv: Vec<u8>,
    basis: [WeylElem; 4],
}

impl RootSystem {
    pub fn new(ty: CartanType) -> RootSystem {
        let (pos, cartan, basis_words): (Vec<Root>, _, [&[u8]; 4]) = match ty {
            CartanType::A2 => (
                vec![Root::new(1, 0), Root::new(0, 1), Root::new(1, 1)],
                [[2, -1], [-1, 2]],
                [&[1, 2, 1], &[1, 2], &[2, 1], &[]],
            ),
            CartanType::B2 => (
                vec![Root::new(1, 0), Root::new(0, 1), Root::new(1, 1), Root::new(2, 1)],
                [[2, -1], [-2, 2]],
                [&[1, 2, 1, 2], &[2, 1, 2], &[1, 2, 1], &[]],
            ),
        };
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|&r| -r));
        let n = pos.len();

        let index_of = |r: Root| roots.iter().position(|&s| s == r).expect("root system is closed");
        let reflect = |i: usize, r: Root| -> Root {
            let k = r.c1 * cartan[0][i] + r.c2 * cartan[1][i];
            if i == 0 {
                Root::new(r.c1 - k, r.c2)
            } else {
                Root::new(r.c1, r.c2 - k)
            }
        };
        let simple_perm: [Vec<u8>; 2] = [0, 1].map(|i| {
            roots.iter().map(|&r| index_of(reflect(i, r)) as u8).collect()
        });

        // Every element has a reduced word of length at most N.
        let mut found: Vec<(Vec<u8>, Vec<u8>)> = Vec::new();
        for len in 0..=n {
            for bits in 0..(1u32 << len) {
                let word: Vec<u8> = (0..len).map(|k| 1 + ((bits >> (len - 1 - k)) & 1) as u8).collect();
                let mut perm: Vec<u8> = (0..roots.len() as u8).collect();
                for &s in word.iter().rev() {
                    for x in perm.iter_mut() {
                        *x = simple_perm[s as usize - 1][*x as usize];
                    }
                }
                if !found.iter().any(|(_, p)| *p == perm) {
                    found.push((word, perm));
                }
            }
        }
        found.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
        let mut elems: Vec<WeylEntry> = found
            .into_iter()
            .map(|(word, perm)| WeylEntry { word, perm })
            .collect();

        let order = elems.len();
        let find = |elems: &[WeylEntry], perm: &[u8]| {
            elems.iter().position(|e| e.perm == perm).expect("closed under composition")
        };
        let mut mul = vec![0u8; order * order];
        let mut inv = vec![0u8; order];
        for a in 0..order {
            for b in 0..order {
                let perm: Vec<u8> =
                    (0..roots.len()).map(|r| elems[a].perm[elems[b].perm[r] as usize]).collect();
                mul[a * order + b] = find(&elems, &perm) as u8;
            }
            let mut perm = vec![0u8; roots.len()];
            for (r, &img) in elems[a].perm.iter().enumerate() {
                perm[img as usize] = r as u8;
            }
            inv[a] = find(&elems, &perm) as u8;
        }

        let mut basis = [WeylElem(0); 4];
        for (k, word) in basis_words.iter().enumerate() {
            let idx = elems
                .iter()
                .position(|e| e.word.len() == word.len() && {
                    let mut perm: Vec<u8> = (0..roots.len() as u8).collect();
                    for &s in word.iter().rev() {
                        for x in perm.iter_mut() {
                            *x = simple_perm[s as usize - 1][*x as usize];
                        }
                    }
                    perm == e.perm
                })
                .expect("basis words are reduced");
            elems[idx].word = word.to_vec();
            basis[k] = WeylElem(idx as u8);
        }

        RootSystem { ty, roots, cartan, elems, mul, inv, basis }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    /// Number of positive roots.
    pub fn n_pos(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, idx: RootIdx) -> Root {
        self.roots[idx]
    }

    pub fn root_index(&self, r: Root) -> Option<RootIdx> {
        self.roots.iter().position(|&s| s == r)
    }

    pub fn is_positive(&self, idx: RootIdx) -> bool {
        idx < self.n_pos()
    }

    pub fn negate(&self, idx: RootIdx) -> RootIdx {
        let n = self.n_pos();
        if idx < n {
            idx + n
        } else {
            idx - n
        }
    }

    /// Index of the simple root `α_i`, `i ∈ {1, 2}`.
    pub fn simple(&self, i: u8) -> RootIdx {
        debug_assert!(i == 1 || i == 2);
        i as usize - 1
    }

    /// `⟨α_j, α_i^∨⟩` for simple indices `i, j ∈ {1, 2}`.
    pub fn cartan(&self, j: u8, i: u8) -> i32 {
        self.cartan[j as usize - 1][i as usize - 1]
    }

    /// `⟨β, α_i^∨⟩`.
    pub fn pairing(&self, beta: RootIdx, i: u8) -> i32 {
        let r = self.roots[beta];
        r.c1 * self.cartan(1, i) + r.c2 * self.cartan(2, i)
    }

    /// Whether `α + β` is a root.
    pub fn sum_index(&self, a: RootIdx, b: RootIdx) -> Option<RootIdx> {
        let (ra, rb) = (self.roots[a], self.roots[b]);
        self.root_index(Root::new(ra.c1 + rb.c1, ra.c2 + rb.c2))
    }

    pub fn weyl_order(&self) -> usize {
        self.elems.len()
    }

    pub fn weyl_elements(&self) -> impl Iterator<Item = WeylElem> + '_ {
        (0..self.elems.len() as u8).map(WeylElem)
    }

    pub fn identity(&self) -> WeylElem {
        WeylElem(0)
    }

    pub fn reflection(&self, i: u8) -> WeylElem {
        self.from_word(&[i]).expect("simple reflection")
    }

    /// The longest element.
    pub fn longest(&self) -> WeylElem {
        self.basis[0]
    }

    /// `w_0, w_1, w_2, w_3` in the fixed numbering.
    pub fn basis_weyl(&self) -> [WeylElem; 4] {
        self.basis
    }

    /// Canonical reduced word, leftmost letter first.
    pub fn word(&self, w: WeylElem) -> &[u8] {
        &self.elems[w.index()].word
    }

    pub fn word_string(&self, w: WeylElem) -> String {
        self.word(w).iter().map(|&s| (b'0' + s) as char).collect()
    }

    /// Product of a word of simple reflections, leftmost letter first.
    pub fn from_word(&self, word: &[u8]) -> Result<WeylElem, RootError> {
        let mut w = self.identity();
        for &s in word {
            if s != 1 && s != 2 {
                return Err(RootError::BadWord(word.iter().map(|&c| (b'0' + c) as char).collect()));
            }
            let r = self.elems.iter().position(|e| e.word == [s]).expect("simple reflection");
            w = self.mul(w, WeylElem(r as u8));
        }
        Ok(w)
    }

    /// Parses digit strings such as `"1212"`; the empty string is the identity.
    pub fn parse_word(&self, s: &str) -> Result<WeylElem, RootError> {
        let letters: Option<Vec<u8>> = s
            .chars()
            .map(|c| match c {
                '1' => Some(1),
                '2' => Some(2),
                _ => None,
            })
            .collect();
        let letters = letters.ok_or_else(|| RootError::BadWord(s.into()))?;
        self.from_word(&letters)
    }

    pub fn mul(&self, a: WeylElem, b: WeylElem) -> WeylElem {
        WeylElem(self.mul[a.index() * self.elems.len() + b.index()])
    }

    pub fn inverse(&self, w: WeylElem) -> WeylElem {
        WeylElem(self.inv[w.index()])
    }

    pub fn length(&self, w: WeylElem) -> usize {
        self.elems[w.index()].word.len()
    }

    /// `w(β)`.
    #[inline]
    pub fn act(&self, w: WeylElem, beta: RootIdx) -> RootIdx {
        self.elems[w.index()].perm[beta] as usize
    }

    /// `{α > 0 : w(α) < 0}` in root order.
    pub fn inversion_set(&self, w: WeylElem) -> Vec<RootIdx> {
        (0..self.n_pos()).filter(|&a| !self.is_positive(self.act(w, a))).collect()
    }

    /// Compares `ℓ(s·w·y)` with `ℓ(w·y)`; `s = 0` stands for the identity.
    pub fn descent(&self, w: WeylElem, s: u8, y: WeylElem) -> Ordering {
        if s == 0 {
            return Ordering::Equal;
        }
        let wy = self.mul(w, y);
        let swy = self.mul(self.reflection(s), wy);
        self.length(swy).cmp(&self.length(wy))
    }
}

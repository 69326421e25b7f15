//! Finite fields `F_q = F_p[x]/(m(x))` backed by full lookup tables.
//!
//! Elements are identified with their integer code `Σ c_i p^i`, where
//! `c_0 + c_1 x + … + c_{f-1} x^{f-1}` is the residue.  Code 0 is zero and
//! code 1 is one.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Largest supported field order.
pub const MAX_Q: u32 = 1024;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GfError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {0} exceeds the supported maximum {MAX_Q}")]
    TooLarge(u64),
    #[error("modulus must be monic of degree {0}")]
    BadModulusDegree(u32),
    #[error("modulus coefficient {0} is not a residue mod p")]
    BadCoefficient(u32),
    #[error("modulus is reducible over F_p")]
    Reducible,
    #[error("code {code} is not an element of F_{q}")]
    BadCode { code: u32, q: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different fields")]
    FieldMismatch,
}

/// A field element as a bare code.  Arithmetic goes through the owning [`Field`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fq(u16);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    pub fn code(self) -> u32 {
        self.0 as u32
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    p: u32,
    f: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u16>,
    neg: Vec<u16>,
    exp: Vec<u16>,
    log: Vec<u16>,
    trace: Vec<u16>,
    generator: u16,
}

/// An immutable finite field.  Cloning is cheap.
#[derive(Clone)]
pub struct Field(Arc<Tables>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.0.p)
            .field("f", &self.0.f)
            .field("modulus", &self.0.modulus)
            .finish()
    }
}

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Splits `q = p^f`.
pub fn prime_power(q: u32) -> Result<(u32, u32), GfError> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).ok_or(GfError::NotPrimePower(q))?;
    let mut rest = q;
    let mut f = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        f += 1;
    }
    if rest != 1 {
        return Err(GfError::NotPrimePower(q));
    }
    Ok((p, f))
}

fn digits(mut code: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = code % p;
        code /= p;
    }
    out
}

fn undigits(ds: &[u32], p: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Remainder of `a` modulo the monic polynomial `m` (coefficients low to high).
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let dm = m.len() - 1;
    let mut r = a.to_vec();
    while r.len() > dm {
        let lead = r.pop().unwrap_or(0);
        if lead != 0 {
            let off = r.len() - dm;
            for (i, &c) in m[..dm].iter().enumerate() {
                r[off + i] = (r[off + i] + (p - c) * lead) % p;
            }
        }
    }
    r
}

fn is_irreducible(m: &[u32], p: u32) -> bool {
    let f = m.len() as u32 - 1;
    for d in 1..=f / 2 {
        for low in 0..p.pow(d) {
            let mut g = digits(low, p, d as usize);
            g.push(1);
            if poly_rem(m, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// The least monic irreducible of degree `f` over `F_p`, ordered by code.
fn default_modulus(p: u32, f: u32) -> Vec<u32> {
    if f == 1 {
        return vec![0, 1];
    }
    (0..p.pow(f))
        .map(|low| {
            let mut m = digits(low, p, f as usize);
            m.push(1);
            m
        })
        .find(|m| is_irreducible(m, p))
        .expect("irreducible polynomials exist in every degree")
}

impl Field {
    /// Builds `F_{p^f}`.  Without a modulus the least monic irreducible is used.
    pub fn new(p: u32, f: u32, modulus: Option<&[u32]>) -> Result<Field, GfError> {
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        if f == 0 {
            return Err(GfError::ZeroDegree);
        }
        let q64 = (p as u64).checked_pow(f).unwrap_or(u64::MAX);
        if q64 > MAX_Q as u64 {
            return Err(GfError::TooLarge(q64));
        }
        let q = q64 as u32;
        let modulus = match modulus {
            None => default_modulus(p, f),
            Some(m) => {
                if m.len() != f as usize + 1 || m[f as usize] != 1 {
                    return Err(GfError::BadModulusDegree(f));
                }
                if let Some(&c) = m.iter().find(|&&c| c >= p) {
                    return Err(GfError::BadCoefficient(c));
                }
                if !is_irreducible(m, p) {
                    return Err(GfError::Reducible);
                }
                m.to_vec()
            }
        };

        let fu = f as usize;
        let slow_mul = |a: u32, b: u32| -> u32 {
            let (da, db) = (digits(a, p, fu), digits(b, p, fu));
            let mut prod = vec![0u32; 2 * fu - 1];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            undigits(&poly_rem(&prod, &modulus, p), p)
        };
        let order = |a: u32| -> u32 {
            let mut x = a;
            let mut k = 1;
            while x != 1 {
                x = slow_mul(x, a);
                k += 1;
            }
            k
        };
        let generator = (1..q)
            .find(|&a| order(a) == q - 1)
            .expect("the multiplicative group is cyclic");

        let mut exp = vec![0u16; q as usize - 1];
        let mut log = vec![0u16; q as usize];
        let mut x = 1u32;
        for (i, e) in exp.iter_mut().enumerate() {
            *e = x as u16;
            log[x as usize] = i as u16;
            x = slow_mul(x, generator);
        }

        let mut add = vec![0u16; (q * q) as usize];
        let mut neg = vec![0u16; q as usize];
        for a in 0..q {
            let da = digits(a, p, fu);
            let dn: Vec<u32> = da.iter().map(|&c| (p - c) % p).collect();
            neg[a as usize] = undigits(&dn, p) as u16;
            for b in 0..q {
                let db = digits(b, p, fu);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = undigits(&s, p) as u16;
            }
        }

        let mut tables = Tables {
            p,
            f,
            q,
            modulus,
            add,
            neg,
            exp,
            log,
            trace: Vec::new(),
            generator: generator as u16,
        };
        let mut trace = vec![0u16; q as usize];
        for a in 0..q {
            let mut acc = 0u16;
            let mut y = a as u16;
            for _ in 0..f {
                acc = tables.add[(acc as u32 * q + y as u32) as usize];
                y = pow_tab(&tables, y, p as i64);
            }
            debug_assert!((acc as u32) < p);
            trace[a as usize] = acc;
        }
        tables.trace = trace;
        Ok(Field(Arc::new(tables)))
    }

    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Field, GfError> {
        Field::new(p, 1, None)
    }

    /// The field of order `q` with the default modulus.
    pub fn of_order(q: u32) -> Result<Field, GfError> {
        let (p, f) = prime_power(q)?;
        Field::new(p, f, None)
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn f(&self) -> u32 {
        self.0.f
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Modulus coefficients, low degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn elem(&self, code: u32) -> Result<Fq, GfError> {
        if code < self.0.q {
            Ok(Fq(code as u16))
        } else {
            Err(GfError::BadCode { code, q: self.0.q })
        }
    }

    /// The image of an integer under `Z → F_p ⊂ F_q`.
    pub fn from_int(&self, n: i64) -> Fq {
        Fq(n.rem_euclid(self.0.p as i64) as u16)
    }

    /// Coefficients of `x` over `F_p`, low degree first.
    pub fn coeffs(&self, x: Fq) -> Vec<u32> {
        digits(x.code(), self.0.p, self.0.f as usize)
    }

    pub fn from_coeffs(&self, cs: &[u32]) -> Result<Fq, GfError> {
        if cs.len() > self.0.f as usize {
            return Err(GfError::BadCode { code: u32::MAX, q: self.0.q });
        }
        if let Some(&c) = cs.iter().find(|&&c| c >= self.0.p) {
            return Err(GfError::BadCoefficient(c));
        }
        Ok(Fq(undigits(cs, self.0.p) as u16))
    }

    /// All elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = Fq> + Clone {
        (0..self.0.q as u16).map(Fq)
    }

    /// All nonzero elements in code order.
    pub fn units(&self) -> impl Iterator<Item = Fq> + Clone {
        (1..self.0.q as u16).map(Fq)
    }

    #[inline]
    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        Fq(self.0.add[a.0 as usize * self.0.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn neg(&self, a: Fq) -> Fq {
        Fq(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if a.0 == 0 || b.0 == 0 {
            return Fq::ZERO;
        }
        let t = &self.0;
        let s = t.log[a.0 as usize] as u32 + t.log[b.0 as usize] as u32;
        Fq(t.exp[(s % (t.q - 1)) as usize])
    }

    pub fn inv(&self, a: Fq) -> Result<Fq, GfError> {
        if a.is_zero() {
            Err(GfError::DivisionByZero)
        } else {
            Ok(self.recip(a))
        }
    }

    /// Inverse of a nonzero element.
    ///
    /// # Panics
    /// If `a` is zero.
    #[inline]
    pub fn recip(&self, a: Fq) -> Fq {
        assert!(!a.is_zero(), "inverse of zero");
        let t = &self.0;
        let l = t.log[a.0 as usize] as u32;
        Fq(t.exp[((t.q - 1 - l) % (t.q - 1)) as usize])
    }

    /// `a / b` for nonzero `b`.
    ///
    /// # Panics
    /// If `b` is zero.
    #[inline]
    pub fn div(&self, a: Fq, b: Fq) -> Fq {
        self.mul(a, self.recip(b))
    }

    /// `a^e`; negative exponents require `a ≠ 0`.  `0^0 = 1`.
    pub fn pow(&self, a: Fq, e: i64) -> Fq {
        Fq(pow_tab(&self.0, a.0, e))
    }

    /// `Tr_{F_q/F_p}(a)` as a residue in `[0, p)`.
    #[inline]
    pub fn trace(&self, a: Fq) -> u32 {
        self.0.trace[a.0 as usize] as u32
    }

    /// The least element (by code) generating `F_q^×`.
    pub fn multiplicative_generator(&self) -> Fq {
        Fq(self.0.generator)
    }

    /// Discrete logarithm to the base of [`Field::multiplicative_generator`].
    pub fn log(&self, a: Fq) -> Option<u32> {
        (!a.is_zero()).then(|| self.0.log[a.0 as usize] as u32)
    }

    /// Squareness; every element is a square in characteristic 2 and zero is a square.
    pub fn is_square(&self, a: Fq) -> bool {
        if a.is_zero() || self.0.p == 2 {
            return true;
        }
        self.pow(a, (self.0.q as i64 - 1) / 2) == Fq::ONE
    }

    /// All solutions of `ζ^r = x`, sorted by code.
    pub fn rth_roots(&self, x: Fq, r: u32) -> Vec<Fq> {
        assert!(r > 0, "root index must be positive");
        if x.is_zero() {
            return vec![Fq::ZERO];
        }
        let n = self.0.q - 1;
        let lx = self.0.log[x.0 as usize] as u32;
        let mut out: Vec<Fq> = (0..n)
            .filter(|&k| (k as u64 * r as u64) % n as u64 == lx as u64)
            .map(|k| Fq(self.0.exp[k as usize]))
            .collect();
        out.sort();
        out
    }

    /// Wraps a code into a field-tagged element.
    pub fn tag(&self, x: Fq) -> FqElem {
        FqElem { field: self.clone(), value: x }
    }
}

fn pow_tab(t: &Tables, a: u16, e: i64) -> u16 {
    if a == 0 {
        assert!(e >= 0, "negative power of zero");
        return if e == 0 { 1 } else { 0 };
    }
    let n = (t.q - 1) as i64;
    let l = (t.log[a as usize] as i64 * e.rem_euclid(n)).rem_euclid(n);
    t.exp[l as usize]
}

/// A field element carrying its field, with checked mixed-field arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct FqElem {
    field: Field,
    value: Fq,
}

impl FqElem {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> Fq {
        self.value
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.value)
    }

    fn check(&self, other: &FqElem) -> Result<(), GfError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(GfError::FieldMismatch)
        }
    }

    fn with(&self, value: Fq) -> FqElem {
        FqElem { field: self.field.clone(), value }
    }

    pub fn add(&self, other: &FqElem) -> Result<FqElem, GfError> {
        self.check(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FqElem) -> Result<FqElem, GfError> {
        self.check(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FqElem) -> Result<FqElem, GfError> {
        self.check(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn div(&self, other: &FqElem) -> Result<FqElem, GfError> {
        self.check(other)?;
        let inv = self.field.inv(other.value)?;
        Ok(self.with(self.field.mul(self.value, inv)))
    }

    pub fn neg(&self) -> FqElem {
        self.with(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<FqElem, GfError> {
        Ok(self.with(self.field.inv(self.value)?))
    }

    pub fn trace(&self) -> u32 {
        self.field.trace(self.value)
    }
}

impl fmt::Debug for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@F{}", self.value, self.field.q())
    }
}

impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

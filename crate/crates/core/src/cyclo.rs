//! Exact arithmetic in `Q(ζ_p)` and the additive character sums built on it.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::gf::{Field, Fq};

pub type Rational = Ratio<i128>;

/// `Σ coeffs[i] ζ_p^i` over the basis `ζ^0, …, ζ^{p-2}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloNum {
    p: u32,
    coeffs: Vec<Rational>,
}

impl CycloNum {
    pub fn zero(p: u32) -> CycloNum {
        assert!(p >= 2, "character prime must be at least 2");
        CycloNum { p, coeffs: vec![Rational::zero(); p as usize - 1] }
    }

    pub fn one(p: u32) -> CycloNum {
        CycloNum::from_int(p, 1)
    }

    pub fn from_int(p: u32, n: i64) -> CycloNum {
        CycloNum::from_rational(p, Rational::from_integer(n as i128))
    }

    pub fn from_rational(p: u32, r: Rational) -> CycloNum {
        let mut z = CycloNum::zero(p);
        z.coeffs[0] = r;
        z
    }

    /// `ζ_p^k`.
    pub fn zeta_pow(p: u32, k: i64) -> CycloNum {
        let mut counts = vec![0i64; p as usize];
        counts[k.rem_euclid(p as i64) as usize] = 1;
        CycloNum::from_exponent_counts(p, &counts)
    }

    /// `Σ_e counts[e] ζ^e` for a length-`p` vector of multiplicities.
    pub fn from_exponent_counts(p: u32, counts: &[i64]) -> CycloNum {
        assert_eq!(counts.len(), p as usize, "expected one count per exponent");
        let top = counts[p as usize - 1] as i128;
        let coeffs = counts[..p as usize - 1]
            .iter()
            .map(|&c| Rational::from_integer(c as i128 - top))
            .collect();
        CycloNum { p, coeffs }
    }

    /// Canonical form of a redundant length-`p` coefficient vector.
    pub fn from_redundant(p: u32, full: &[Rational]) -> CycloNum {
        assert_eq!(full.len(), p as usize);
        let top = full[p as usize - 1];
        let coeffs = full[..p as usize - 1].iter().map(|&c| c - top).collect();
        CycloNum { p, coeffs }
    }

    pub fn from_coeffs(p: u32, coeffs: Vec<Rational>) -> CycloNum {
        assert_eq!(coeffs.len(), p as usize - 1, "expected p-1 coefficients");
        CycloNum { p, coeffs }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as a rational if it lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| self.coeffs[0])
    }

    pub fn scale(&self, r: Rational) -> CycloNum {
        CycloNum { p: self.p, coeffs: self.coeffs.iter().map(|&c| c * r).collect() }
    }

    pub fn scale_int(&self, n: i64) -> CycloNum {
        self.scale(Rational::from_integer(n as i128))
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> CycloNum {
        let p = self.p as usize;
        let mut full = vec![Rational::zero(); p];
        for (i, &c) in self.coeffs.iter().enumerate() {
            full[(p - i) % p] += c;
        }
        CycloNum::from_redundant(self.p, &full)
    }

    fn check(&self, other: &CycloNum) {
        assert_eq!(self.p, other.p, "cyclotomic numbers over different primes");
    }
}

impl Add for &CycloNum {
    type Output = CycloNum;

    fn add(self, rhs: &CycloNum) -> CycloNum {
        self.check(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        CycloNum { p: self.p, coeffs }
    }
}

impl Add for CycloNum {
    type Output = CycloNum;

    fn add(self, rhs: CycloNum) -> CycloNum {
        &self + &rhs
    }
}

impl AddAssign<&CycloNum> for CycloNum {
    fn add_assign(&mut self, rhs: &CycloNum) {
        self.check(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for &CycloNum {
    type Output = CycloNum;

    fn sub(self, rhs: &CycloNum) -> CycloNum {
        self.check(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        CycloNum { p: self.p, coeffs }
    }
}

impl Sub for CycloNum {
    type Output = CycloNum;

    fn sub(self, rhs: CycloNum) -> CycloNum {
        &self - &rhs
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;

    fn neg(self) -> CycloNum {
        CycloNum { p: self.p, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;

    fn neg(self) -> CycloNum {
        -&self
    }
}

impl Mul for &CycloNum {
    type Output = CycloNum;

    fn mul(self, rhs: &CycloNum) -> CycloNum {
        self.check(rhs);
        let p = self.p as usize;
        let mut full = vec![Rational::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in rhs.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                full[(i + j) % p] += a * b;
            }
        }
        CycloNum::from_redundant(self.p, &full)
    }
}

impl Mul for CycloNum {
    type Output = CycloNum;

    fn mul(self, rhs: CycloNum) -> CycloNum {
        &self * &rhs
    }
}

fn write_term(out: &mut String, c: &Rational, i: usize, first: bool) {
    let neg = c.is_negative();
    let mag = c.abs();
    match (first, neg) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
    if i == 0 {
        let _ = write!(out, "{}", mag);
        return;
    }
    if !mag.is_one() {
        let _ = write!(out, "{}*", mag);
    }
    if i == 1 {
        out.push('z');
    } else {
        let _ = write!(out, "z^{}", i);
    }
}

impl fmt::Display for CycloNum {
    /// Canonical rendering, e.g. `3 - z + 1/2*z^2`; zero renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let first = out.is_empty();
            write_term(&mut out, c, i, first);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]_{}", self, self.p)
    }
}

/// Accumulates `Σ φ(x)` by counting traces, then converts once.
#[derive(Clone, Debug)]
pub struct CharSum {
    counts: Vec<i64>,
}

impl CharSum {
    pub fn new(p: u32) -> CharSum {
        CharSum { counts: vec![0; p as usize] }
    }

    #[inline]
    pub fn push(&mut self, field: &Field, x: Fq) {
        self.counts[field.trace(x) as usize] += 1;
    }

    #[inline]
    pub fn push_trace(&mut self, tr: u32, weight: i64) {
        self.counts[tr as usize] += weight;
    }

    pub fn merge(&mut self, other: &CharSum) {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    pub fn value(&self) -> CycloNum {
        CycloNum::from_exponent_counts(self.counts.len() as u32, &self.counts)
    }
}

/// `φ(x) = ζ_p^{Tr x}`.
pub fn phi(field: &Field, x: Fq) -> CycloNum {
    CycloNum::zeta_pow(field.p(), field.trace(x) as i64)
}

/// `Σ_x φ(f(x))` over the given points.
pub fn phi_sum(field: &Field, xs: impl IntoIterator<Item = Fq>) -> CycloNum {
    let mut acc = CharSum::new(field.p());
    for x in xs {
        acc.push(field, x);
    }
    acc.value()
}

/// `G = Σ_{x ∈ F_q} φ(x²)`.
pub fn gauss_sum(field: &Field) -> CycloNum {
    phi_sum(field, field.elements().map(|x| field.mul(x, x)))
}

/// `Σ_{x ∈ F_q} φ(Ax² + Bx + C)`.
pub fn quad_char_sum(field: &Field, a: Fq, b: Fq, c: Fq) -> CycloNum {
    let k = field;
    phi_sum(
        k,
        k.elements().map(|x| k.add(k.mul(x, k.add(k.mul(a, x), b)), c)),
    )
}

/// Generalized Kloosterman sum `S̃_ℓ(B, a, b, a′, b′) = Σ_{ζ^ℓ = B} φ(a′ζ² + aζ + b/ζ + b′/ζ²)`.
///
/// `S_ℓ(B, a, b)` is the case `a′ = b′ = 0`.
pub fn kloosterman(field: &Field, ell: u32, big_b: Fq, a: Fq, b: Fq, a2: Fq, b2: Fq) -> CycloNum {
    let k = field;
    let terms = k.units().filter(|&z| k.pow(z, ell as i64) == big_b).map(|z| {
        let zi = k.recip(z);
        let s = k.add(k.mul(a, z), k.mul(b, zi));
        let s2 = k.add(k.mul(a2, k.mul(z, z)), k.mul(b2, k.mul(zi, zi)));
        k.add(s, s2)
    });
    phi_sum(k, terms)
}

/// `S_ℓ(B, a, b)`.
pub fn kloosterman_s(field: &Field, ell: u32, big_b: Fq, a: Fq, b: Fq) -> CycloNum {
    kloosterman(field, ell, big_b, a, b, Fq::ZERO, Fq::ZERO)
}

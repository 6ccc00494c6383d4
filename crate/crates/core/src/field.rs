//! Finite fields GF(p^ell) of odd characteristic.
//!
//! Elements are coefficient vectors of polynomials of degree below `ell`
//! (constant term first) reduced modulo a monic irreducible polynomial.
//! Prime fields are the case `ell = 1` with modulus `x`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not an odd prime")]
    NonPrimeCharacteristic(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("modulus must be monic of degree {ell} with coefficients below {p}, got {coeffs:?}")]
    MalformedModulus {
        p: u32,
        ell: usize,
        coeffs: Vec<u64>,
    },
    #[error("modulus {coeffs:?} is reducible over GF({p})")]
    ReducibleModulus { p: u32, coeffs: Vec<u32> },
    #[error("no built-in irreducible modulus for GF({p}^{ell}); pass one explicitly")]
    NoBuiltinModulus { p: u32, ell: usize },
    #[error("field order {p}^{ell} is too large")]
    OrderTooLarge { p: u32, ell: usize },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
}

/// Irreducible moduli used when the caller does not supply one.
/// Coefficients are listed constant term first.
pub const BUILTIN_MODULI: &[(u32, usize, &[u32])] = &[
    (3, 2, &[1, 0, 1]),          // x^2 + 1
    (3, 3, &[1, 2, 0, 1]),       // x^3 + 2x + 1
    (3, 4, &[2, 0, 0, 2, 1]),    // x^4 + 2x^3 + 2
    (3, 5, &[1, 2, 0, 0, 0, 1]), // x^5 + 2x + 1
    (5, 2, &[2, 0, 1]),          // x^2 + 2
    (7, 2, &[1, 0, 1]),          // x^2 + 1
    (7, 3, &[4, 0, 0, 1]),       // x^3 + 4
    (11, 2, &[1, 0, 1]),         // x^2 + 1
    (11, 3, &[9, 2, 0, 1]),      // x^3 + 2x + 9
];

const MAX_ORDER: u64 = 1 << 32;

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits a prime power into `(p, ell)`.
pub fn prime_power(q: u64) -> Option<(u32, usize)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut ell = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        ell += 1;
    }
    (rest == 1).then_some((p as u32, ell))
}

/// An element of GF(p^ell). Only meaningful together with its [`FieldSpec`].
///
/// The derived ordering is lexicographic on the coefficient vector read
/// constant term first; this is the canonical element order used for
/// vertex numbering.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FieldElement {
    coeffs: Vec<u32>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.len() == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut wrote = false;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if wrote {
                write!(f, "+")?;
            }
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}x^{i}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A validated finite field GF(p^ell).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
    ell: usize,
    modulus: Vec<u32>,
    q: u64,
}

impl FieldSpec {
    /// Validates `p` and the modulus. With `modulus = None` the prime field
    /// uses `x` and extensions fall back to [`BUILTIN_MODULI`].
    pub fn new(p: u32, ell: usize, modulus: Option<&[u64]>) -> Result<Self, FieldError> {
        if p == 2 || !is_prime(p as u64) {
            return Err(FieldError::NonPrimeCharacteristic(p as u64));
        }
        if ell == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = (p as u64)
            .checked_pow(ell as u32)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(FieldError::OrderTooLarge { p, ell })?;
        let modulus: Vec<u32> = match modulus {
            Some(coeffs) => {
                let well_formed = coeffs.len() == ell + 1
                    && coeffs[ell] == 1
                    && coeffs.iter().all(|&c| c < p as u64);
                if !well_formed {
                    return Err(FieldError::MalformedModulus {
                        p,
                        ell,
                        coeffs: coeffs.to_vec(),
                    });
                }
                coeffs.iter().map(|&c| c as u32).collect()
            }
            None if ell == 1 => vec![0, 1],
            None => BUILTIN_MODULI
                .iter()
                .find(|(bp, bl, _)| *bp == p && *bl == ell)
                .map(|(_, _, m)| m.to_vec())
                .ok_or(FieldError::NoBuiltinModulus { p, ell })?,
        };
        if !is_irreducible(p, &modulus) {
            return Err(FieldError::ReducibleModulus { p, coeffs: modulus });
        }
        Ok(FieldSpec { p, ell, modulus, q })
    }

    /// The prime field GF(p).
    pub fn prime(p: u32) -> Result<Self, FieldError> {
        Self::new(p, 1, None)
    }

    /// GF(q) for a prime power `q`, using the built-in modulus table.
    pub fn with_order(q: u64) -> Result<Self, FieldError> {
        let (p, ell) = prime_power(q).ok_or(FieldError::NonPrimeCharacteristic(q))?;
        Self::new(p, ell, None)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.ell
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    /// True iff q = 3 (mod 4), the condition for the Paley constructions.
    pub fn paley_admissible(&self) -> bool {
        self.q % 4 == 3
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: vec![0; self.ell],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// The image of an integer under Z -> GF(p) -> GF(q).
    pub fn from_int(&self, n: i64) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = n.rem_euclid(self.p as i64) as u32;
        e
    }

    /// Builds an element from at most `ell` coefficients (constant term
    /// first), reducing each modulo p. Panics if too many are given.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> FieldElement {
        assert!(
            coeffs.len() <= self.ell,
            "{} coefficients for a degree-{} extension",
            coeffs.len(),
            self.ell
        );
        let mut e = self.zero();
        for (slot, &c) in e.coeffs.iter_mut().zip(coeffs) {
            *slot = c.rem_euclid(self.p as i64) as u32;
        }
        e
    }

    /// Position of `e` in the canonical element order.
    pub fn rank(&self, e: &FieldElement) -> usize {
        e.coeffs
            .iter()
            .fold(0usize, |acc, &c| acc * self.p as usize + c as usize)
    }

    /// Inverse of [`FieldSpec::rank`].
    pub fn from_rank(&self, mut rank: usize) -> FieldElement {
        debug_assert!((rank as u64) < self.q);
        let mut e = self.zero();
        for slot in e.coeffs.iter_mut().rev() {
            *slot = (rank % self.p as usize) as u32;
            rank /= self.p as usize;
        }
        e
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q as usize).map(move |r| self.from_rank(r))
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.p;
        FieldElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| (x + y) % p)
                .collect(),
        }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let p = self.p;
        FieldElement {
            coeffs: a.coeffs.iter().map(|&x| (p - x) % p).collect(),
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.p;
        FieldElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| (x + p - y) % p)
                .collect(),
        }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.p as u64;
        let ell = self.ell;
        if ell == 1 {
            return FieldElement {
                coeffs: vec![((a.coeffs[0] as u64 * b.coeffs[0] as u64) % p) as u32],
            };
        }
        let mut prod = vec![0u64; 2 * ell - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for top in (ell..prod.len()).rev() {
            let t = prod[top];
            if t == 0 {
                continue;
            }
            // x^ell = -(m_0 + m_1 x + ... + m_{ell-1} x^{ell-1})
            for (j, &m) in self.modulus[..ell].iter().enumerate() {
                let idx = top - ell + j;
                prod[idx] = (prod[idx] + t * ((p - m as u64) % p)) % p;
            }
            prod[top] = 0;
        }
        FieldElement {
            coeffs: prod[..ell].iter().map(|&c| c as u32).collect(),
        }
    }

    pub fn pow(&self, a: &FieldElement, mut exp: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow(a, self.q - 2))
    }

    /// The quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise.
    ///
    /// Prime fields go through the Jacobi-symbol recursion; extension fields
    /// use Euler's criterion `a^((q-1)/2)`.
    pub fn chi(&self, a: &FieldElement) -> i8 {
        if self.ell == 1 {
            jacobi(a.coeffs[0] as u64, self.p as u64)
        } else {
            self.chi_euler(a)
        }
    }

    /// The quadratic character by exponentiation, valid in every field.
    pub fn chi_euler(&self, a: &FieldElement) -> i8 {
        if a.is_zero() {
            return 0;
        }
        let r = self.pow(a, (self.q - 1) / 2);
        if r == self.one() {
            1
        } else {
            debug_assert_eq!(r, self.from_int(-1));
            -1
        }
    }
}

/// Jacobi symbol `(a / n)` for odd `n`.
fn jacobi(a: u64, n: u64) -> i8 {
    debug_assert!(n % 2 == 1);
    let mut a = a % n;
    let mut n = n;
    let mut sign = 1i8;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

/// Remainder of `f` modulo the monic polynomial `g` over GF(p).
fn poly_rem(p: u32, f: &[u32], g: &[u32]) -> Vec<u32> {
    let p = p as u64;
    let dg = g.len() - 1;
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    while r.len() > dg {
        let top = r.len() - 1;
        let t = r[top];
        if t != 0 {
            for (j, &gc) in g.iter().enumerate() {
                let idx = top - dg + j;
                r[idx] = (r[idx] + t * ((p - gc as u64) % p)) % p;
            }
        }
        r.pop();
    }
    r.into_iter().map(|c| c as u32).collect()
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(p: u32, f: &[u32]) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut g = vec![0u32; d + 1];
            let mut rest = idx;
            for slot in g.iter_mut().take(d) {
                *slot = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            g[d] = 1;
            if poly_rem(p, f, &g).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf27() -> FieldSpec {
        FieldSpec::new(3, 3, Some(&[1, 2, 0, 1])).unwrap()
    }

    #[test]
    fn construction_examples() {
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.order(), 7);
        assert!(f7.paley_admissible());

        let f27 = gf27();
        assert_eq!(f27.order(), 27);
        assert!(f27.paley_admissible());

        let f5 = FieldSpec::prime(5).unwrap();
        assert!(!f5.paley_admissible());
    }

    #[test]
    fn cubic_modulus_has_no_roots() {
        // degree 3: irreducible iff no root in GF(3)
        let roots: Vec<u32> = (0..3)
            .filter(|x| (x * x * x + 2 * x + 1) % 3 == 0)
            .collect();
        assert!(roots.is_empty());
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(
            FieldSpec::prime(9).unwrap_err(),
            FieldError::NonPrimeCharacteristic(9)
        );
        assert_eq!(
            FieldSpec::prime(2).unwrap_err(),
            FieldError::NonPrimeCharacteristic(2)
        );
        assert!(matches!(
            FieldSpec::new(3, 3, Some(&[0, 1, 0, 1])),
            Err(FieldError::ReducibleModulus { .. })
        ));
        // x^2 + 1 splits mod 5 (2^2 = -1)
        assert!(matches!(
            FieldSpec::new(5, 2, Some(&[1, 0, 1])),
            Err(FieldError::ReducibleModulus { .. })
        ));
        assert!(matches!(
            FieldSpec::new(3, 3, Some(&[1, 2, 1])),
            Err(FieldError::MalformedModulus { .. })
        ));
        assert!(matches!(
            FieldSpec::new(3, 3, Some(&[1, 2, 0, 2])),
            Err(FieldError::MalformedModulus { .. })
        ));
        assert_eq!(
            FieldSpec::new(13, 3, None).unwrap_err(),
            FieldError::NoBuiltinModulus { p: 13, ell: 3 }
        );
        assert_eq!(
            FieldSpec::new(3, 0, None).unwrap_err(),
            FieldError::ZeroDegree
        );
    }

    /// A quotient ring is a field iff every nonzero element has an inverse;
    /// checked by brute force against the trial-factorization verdict.
    #[test]
    fn builtin_moduli_give_fields() {
        for &(p, ell, _) in BUILTIN_MODULI {
            let f = FieldSpec::new(p, ell, None).unwrap();
            let elems: Vec<_> = f.elements().collect();
            let one = f.one();
            for a in elems.iter().filter(|a| !a.is_zero()) {
                assert!(
                    elems.iter().any(|b| f.mul(a, b) == one),
                    "GF({p}^{ell}): {a} has no inverse"
                );
            }
        }
    }

    #[test]
    fn arithmetic_examples() {
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.mul(&f7.from_int(3), &f7.from_int(5)), f7.one());
        for f in [f7.clone(), gf27()] {
            assert_eq!(f.inv(&f.one()).unwrap(), f.one());
            assert_eq!(f.inv(&f.zero()).unwrap_err(), FieldError::ZeroInverse);
        }

        // x * x^2 = x^3 = -2x - 1 = x + 2 in GF(3)[x]/(x^3 + 2x + 1)
        let f = gf27();
        let x = f.from_coeffs(&[0, 1]);
        let x2 = f.from_coeffs(&[0, 0, 1]);
        assert_eq!(f.mul(&x, &x2), f.from_coeffs(&[2, 1, 0]));
    }

    /// Schoolbook product followed by long division, kept apart from the
    /// in-place reduction inside `mul`.
    #[test]
    fn extension_mul_matches_polynomial_division() {
        let f = gf27();
        let elems: Vec<_> = f.elements().collect();
        for a in &elems {
            for b in &elems {
                let mut prod = vec![0u32; 5];
                for (i, &x) in a.coeffs().iter().enumerate() {
                    for (j, &y) in b.coeffs().iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % 3;
                    }
                }
                let rem = poly_rem(3, &prod, f.modulus());
                assert_eq!(f.mul(a, b).coeffs(), &rem[..], "{a} * {b}");
            }
        }
    }

    #[test]
    fn chi_examples() {
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.chi(&f7.zero()), 0);
        let squares: Vec<i64> = (1..7).map(|x| x * x % 7).collect();
        assert!(!squares.contains(&3));
        assert_eq!(f7.chi(&f7.from_int(3)), -1);
        let f11 = FieldSpec::prime(11).unwrap();
        assert_eq!(f11.chi(&f11.from_int(-1)), -1);
    }

    #[test]
    fn jacobi_path_agrees_with_euler_path() {
        for p in [3u32, 5, 7, 11, 13, 19, 23, 31, 43, 1009] {
            let f = FieldSpec::prime(p).unwrap();
            for a in f.elements() {
                assert_eq!(f.chi(&a), f.chi_euler(&a), "p={p} a={a}");
            }
        }
    }

    #[test]
    fn exhaustive_field_axioms_small_fields() {
        let fields: Vec<FieldSpec> = [3u64, 7, 9, 11, 19, 23, 25, 27, 31]
            .iter()
            .map(|&q| FieldSpec::with_order(q).unwrap())
            .collect();
        for f in &fields {
            let elems: Vec<_> = f.elements().collect();
            let squares: std::collections::HashSet<_> = elems.iter().map(|x| f.mul(x, x)).collect();
            for a in &elems {
                let expected = if a.is_zero() {
                    0
                } else if squares.contains(a) {
                    1
                } else {
                    -1
                };
                assert_eq!(f.chi(a), expected, "q={} a={a}", f.order());
                if !a.is_zero() {
                    assert_eq!(f.mul(a, &f.inv(a).unwrap()), f.one());
                    assert_eq!(f.mul(&f.inv(a).unwrap(), a), f.one());
                }
                assert_eq!(f.add(a, &f.neg(a)), f.zero());
                for b in &elems {
                    assert_eq!(f.chi(&f.mul(a, b)), f.chi(a) * f.chi(b));
                    assert_eq!(f.sub(&f.add(a, b), b), *a);
                }
            }
        }
    }

    #[test]
    fn character_sums() {
        for q in [3u64, 7, 11, 19, 23, 27, 31, 43, 243] {
            let f = FieldSpec::with_order(q).unwrap();
            let elems: Vec<_> = f.elements().collect();
            let chis: Vec<i64> = elems.iter().map(|x| f.chi(x) as i64).collect();
            assert_eq!(chis.iter().sum::<i64>(), 0, "q={q}");
            if q > 43 {
                continue;
            }
            for y in elems.iter().filter(|y| !y.is_zero()) {
                let s: i64 = elems
                    .iter()
                    .zip(&chis)
                    .map(|(x, &cx)| cx * f.chi(&f.add(x, y)) as i64)
                    .sum();
                assert_eq!(s, -1, "q={q} y={y}");
            }
        }
    }

    #[test]
    fn rank_order_matches_derived_ord() {
        let f = gf27();
        let elems: Vec<_> = f.elements().collect();
        assert!(elems.windows(2).all(|w| w[0] < w[1]));
        for (i, e) in elems.iter().enumerate() {
            assert_eq!(f.rank(e), i);
        }
        assert_eq!(elems[0], f.zero());
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(31), Some((31, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn display() {
        let f = gf27();
        assert_eq!(f.from_coeffs(&[2, 0, 1]).to_string(), "x^2+2");
        assert_eq!(f.zero().to_string(), "0");
        assert_eq!(FieldSpec::prime(7).unwrap().from_int(-1).to_string(), "6");
    }
}

//! Coefficient rings for exact Laurent-polynomial arithmetic: the integers
//! (arbitrary precision) and prime fields with a runtime modulus.
//!
//! The ring value carries whatever context the elements need (for a prime
//! field, the modulus), so elements stay plain data. This keeps polynomial
//! code generic without baking the modulus into the type system.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A commutative integral domain usable as a polynomial coefficient ring.
pub trait CoeffRing: Clone + Eq + fmt::Debug {
    type Elem: Clone + Eq + Ord + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    /// Exact division: `Some(q)` with `a = q * b`, or `None` when `b` does
    /// not divide `a` (or `b` is zero).
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    /// The unit `u` such that `a / u` is the canonical associate of a
    /// nonzero `a`: the sign over the integers, `a` itself over a field.
    fn unit_part(&self, a: &Self::Elem) -> Self::Elem;

    /// Inverse of a unit.
    fn unit_inv(&self, u: &Self::Elem) -> Self::Elem;

    /// Content gcd, for rings with a meaningful notion (the integers).
    /// Fields return `None` and skip the content/primitive-part split.
    fn gcd(&self, _a: &Self::Elem, _b: &Self::Elem) -> Option<Self::Elem> {
        None
    }

    /// Display helpers: coefficients print with an explicit sign over the
    /// integers and as canonical residues over a prime field.
    fn is_negative(&self, a: &Self::Elem) -> bool;
    fn fmt_abs(&self, a: &Self::Elem) -> String;
}

/// The ring of integers, with `BigInt` elements.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct IntRing;

impl CoeffRing for IntRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn exact_div(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        if b.is_zero() {
            return None;
        }
        let (q, r) = a.div_rem(b);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    fn unit_part(&self, a: &BigInt) -> BigInt {
        if a.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }

    fn unit_inv(&self, u: &BigInt) -> BigInt {
        // The only units are +-1, each its own inverse.
        u.clone()
    }

    fn gcd(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        Some(a.gcd(b))
    }

    fn is_negative(&self, a: &BigInt) -> bool {
        Signed::is_negative(a)
    }

    fn fmt_abs(&self, a: &BigInt) -> String {
        a.abs().to_string()
    }
}

/// The prime field `F_p` for a runtime prime `p`; elements are residues in
/// `0..p` stored as `u64`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Panics if `p` is not prime.
    pub fn new(p: u64) -> Self {
        assert!(is_prime(p), "modulus {p} is not prime");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduce a signed integer into `0..p`.
    pub fn elem(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    /// Reduce a `BigInt` into `0..p`.
    pub fn elem_from_bigint(&self, v: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let r = v.mod_floor(&p);
        let (_, digits) = r.to_u64_digits();
        *digits.first().unwrap_or(&0)
    }

    /// Multiplicative inverse of a nonzero element, via Fermat.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "division by zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let p = self.p;
        base %= p;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    }
}

impl CoeffRing for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    fn exact_div(&self, a: &u64, b: &u64) -> Option<u64> {
        if *b == 0 {
            None
        } else {
            Some(a * self.inv(*b) % self.p)
        }
    }

    fn unit_part(&self, a: &u64) -> u64 {
        *a
    }

    fn unit_inv(&self, u: &u64) -> u64 {
        self.inv(*u)
    }

    fn is_negative(&self, _a: &u64) -> bool {
        false
    }

    fn fmt_abs(&self, a: &u64) -> String {
        a.to_string()
    }
}

/// Trial-division primality check; moduli here are tiny.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

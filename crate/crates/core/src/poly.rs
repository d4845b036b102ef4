//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Variables are labelled `x1 ... xn` and every public entry point that
//! takes a variable uses that 1-based label. Terms live in a `BTreeMap`
//! keyed by [`ExponentVector`], whose ordering is graded lexicographic, so
//! iteration and serialization are deterministic.
//!
//! Multiplication packs exponent vectors into a `u128` key whenever the
//! result degrees fit in 8 bits per variable, and accumulates in `i128`
//! while all coefficients are small integers. Both fast paths fall back to
//! the general representation transparently.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::hash::{BuildHasherDefault, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Monomial exponents, one entry per variable.
///
/// Ordered by total degree first, then lexicographically with `x1`
/// most significant.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVector(exponents)
    }

    pub fn zero(nvars: usize) -> Self {
        ExponentVector(vec![0; nvars])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn product(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn quotient(&self, divisor: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&divisor.0).map(|(a, b)| a - b).collect())
    }

    pub fn to_i64(&self) -> Vec<i64> {
        self.0.iter().map(|&e| e as i64).collect()
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Polynomial::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(ExponentVector::zero(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(nvars, Rational::one())
    }

    /// The variable `x_label`. Panics if `label` is not in `1..=nvars`.
    pub fn var(nvars: usize, label: usize) -> Self {
        assert!(
            (1..=nvars).contains(&label),
            "x{label} out of range for {nvars} variables"
        );
        let mut e = vec![0; nvars];
        e[label - 1] = 1;
        Polynomial::monomial(ExponentVector(e), Rational::one())
    }

    pub fn monomial(exponents: ExponentVector, c: Rational) -> Self {
        let nvars = exponents.len();
        let mut p = Polynomial::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exponents, c);
        }
        p
    }

    /// Sums duplicate exponent vectors and drops zero coefficients.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::VariableCountMismatch {
                    left: nvars,
                    right: e.len(),
                });
            }
            p.add_term(ExponentVector(e), c);
        }
        Ok(p)
    }

    /// Sum of `x_label` over the given labels.
    pub fn linear_sum(nvars: usize, labels: &[usize]) -> Self {
        let mut p = Polynomial::zero(nvars);
        for &l in labels {
            p = &p + &Polynomial::var(nvars, l);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&ExponentVector, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(ExponentVector::total_degree).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.total_degree() == 0)
    }

    pub fn support(&self) -> BTreeSet<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    fn add_term(&mut self, e: ExponentVector, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    fn check_label(&self, label: usize) -> Result<()> {
        if !(1..=self.nvars).contains(&label) {
            return Err(Error::VariableOutOfRange {
                label,
                nvars: self.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        let (mut acc, rhs) = if self.len() >= other.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (e, c) in &rhs.terms {
            acc.add_term(e.clone(), c.clone());
        }
        Ok(acc)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        let mut acc = self.clone();
        for (e, c) in &other.terms {
            acc.add_term(e.clone(), -c.clone());
        }
        Ok(acc)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        Ok(multiply(self, other))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut result = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut k = exp;
        while k > 0 {
            if k & 1 == 1 {
                result = multiply(&result, &base);
            }
            k >>= 1;
            if k > 0 {
                base = multiply(&base, &base);
            }
        }
        result
    }

    /// Multivariate division by a single divisor under graded-lex order.
    /// Returns `(quotient, remainder)` with `self = quotient * divisor + remainder`
    /// and no remainder term divisible by the divisor's leading monomial.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.check_same(divisor)?;
        let (lead_e, lead_c) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        let lead_e = lead_e.clone();
        let lead_inv = lead_c.recip();
        let mut quotient = Polynomial::zero(self.nvars);
        let mut remainder = Polynomial::zero(self.nvars);
        let mut work = self.terms.clone();
        while let Some((e, c)) = work.pop_last() {
            if lead_e.divides(&e) {
                let qe = e.quotient(&lead_e);
                let qc = &c * &lead_inv;
                for (de, dc) in divisor.terms.iter().rev().skip(1) {
                    let key = de.product(&qe);
                    let delta = -(dc * &qc);
                    match work.entry(key) {
                        std::collections::btree_map::Entry::Vacant(v) => {
                            v.insert(delta);
                        }
                        std::collections::btree_map::Entry::Occupied(mut o) => {
                            *o.get_mut() += delta;
                            if o.get().is_zero() {
                                o.remove();
                            }
                        }
                    }
                }
                quotient.add_term(qe, qc);
            } else {
                remainder.terms.insert(e, c);
            }
        }
        Ok((quotient, remainder))
    }

    /// Exact quotient `q` with `q * divisor == self`; a nonzero remainder is
    /// reported as [`Error::NotDivisible`].
    pub fn exact_divide(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible {
                remainder: r.to_text(),
            })
        }
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::PointLength {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut powers: Vec<Vec<Rational>> = vec![vec![Rational::one()]; self.nvars];
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= k as usize {
                    let next = cache.last().unwrap() * &point[i];
                    cache.push(next);
                }
                term *= &cache[k as usize];
            }
            total += term;
        }
        Ok(total)
    }

    /// Value modulo the prime `p < 2^63` at a point of residues; `None` if
    /// some coefficient denominator vanishes mod `p`.
    pub fn evaluate_mod(&self, point: &[u64], p: u64) -> Option<u64> {
        assert_eq!(point.len(), self.nvars, "point length");
        let big_p = BigInt::from(p);
        let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
        let mut powers: Vec<Vec<u64>> = vec![vec![1 % p]; self.nvars];
        let mut total = 0u64;
        for (e, c) in &self.terms {
            let num = residue(c.numer(), &big_p);
            let den = residue(c.denom(), &big_p);
            if den == 0 {
                return None;
            }
            let mut term = mulmod(num, pow_mod(den, p - 2, p));
            for (i, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= k as usize {
                    let next = mulmod(*cache.last().unwrap(), point[i] % p);
                    cache.push(next);
                }
                term = mulmod(term, cache[k as usize]);
            }
            total = (total + term) % p;
        }
        Some(total)
    }

    pub fn evaluate_i64(&self, point: &[i64]) -> Result<Rational> {
        let pt: Vec<Rational> = point.iter().map(|&v| int(v)).collect();
        self.evaluate(&pt)
    }

    /// Formal partial derivative with respect to `x_label`.
    pub fn differentiate(&self, label: usize) -> Result<Polynomial> {
        self.check_label(label)?;
        let i = label - 1;
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e.0[i];
            if k == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne.0[i] -= 1;
            out.terms.insert(ne, c * int(k as i64));
        }
        Ok(out)
    }

    /// Relabels variables: `x_i` becomes `x_{images[i-1]}`. `images` holds
    /// 1-based labels and must be a permutation of `1..=nvars`.
    pub fn rename_variables(&self, images: &[usize]) -> Result<Polynomial> {
        if images.len() != self.nvars {
            return Err(Error::PointLength {
                expected: self.nvars,
                got: images.len(),
            });
        }
        let mut seen = vec![false; self.nvars];
        for &l in images {
            if !(1..=self.nvars).contains(&l) || std::mem::replace(&mut seen[l - 1], true) {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
        }
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; self.nvars];
            for (i, &k) in e.0.iter().enumerate() {
                ne[images[i] - 1] = k;
            }
            out.terms.insert(ExponentVector(ne), c.clone());
        }
        Ok(out)
    }

    /// Substitutes `replacement` for `x_label`.
    pub fn substitute(&self, label: usize, replacement: &Polynomial) -> Result<Polynomial> {
        self.check_label(label)?;
        self.check_same(replacement)?;
        let i = label - 1;
        let mut by_power: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = e.0[i];
            let mut rest = e.clone();
            rest.0[i] = 0;
            by_power
                .entry(k)
                .or_insert_with(|| Polynomial::zero(self.nvars))
                .add_term(rest, c.clone());
        }
        let mut out = Polynomial::zero(self.nvars);
        let mut power = Polynomial::one(self.nvars);
        let mut current = 0u32;
        for (k, coeff) in by_power {
            while current < k {
                power = multiply(&power, replacement);
                current += 1;
            }
            out = &out + &multiply(&coeff, &power);
        }
        Ok(out)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Canonical text form: `coeff * x1^a1 ... xn^an` terms (zero exponents
    /// omitted) joined by ` + `, leading term first.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::with_capacity(self.len());
        for (e, c) in self.terms.iter().rev() {
            let mut s = format_rational(c);
            let vars: Vec<String> =
                e.0.iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, k)| format!("x{}^{}", i + 1, k))
                    .collect();
            if !vars.is_empty() {
                s.push_str(" * ");
                s.push_str(&vars.join(" "));
            }
            parts.push(s);
        }
        parts.join(" + ")
    }

    pub fn parse(text: &str, nvars: usize) -> Result<Polynomial> {
        let text = text.trim();
        let mut p = Polynomial::zero(nvars);
        if text == "0" {
            return Ok(p);
        }
        for term in text.split(" + ") {
            let (coeff, mono) = match term.split_once(" * ") {
                Some((c, m)) => (c, Some(m)),
                None => (term, None),
            };
            let c = parse_rational(coeff.trim())?;
            let mut e = vec![0u32; nvars];
            if let Some(m) = mono {
                for factor in m.split_whitespace() {
                    let (v, k) = factor
                        .strip_prefix('x')
                        .and_then(|f| f.split_once('^'))
                        .ok_or_else(|| Error::Parse(format!("bad factor {factor:?}")))?;
                    let label: usize = v
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad variable {factor:?}")))?;
                    let k: u32 = k
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent {factor:?}")))?;
                    if !(1..=nvars).contains(&label) {
                        return Err(Error::VariableOutOfRange { label, nvars });
                    }
                    e[label - 1] += k;
                }
            }
            p.add_term(ExponentVector(e), c);
        }
        Ok(p)
    }
}

pub fn format_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad coefficient {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn residue(v: &BigInt, p: &BigInt) -> u64 {
    let r = ((v % p) + p) % p;
    r.to_u64().expect("residue below modulus")
}

/// `base^exp mod p`.
pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Serde adapters writing rationals as `"p/q"` strings.
pub mod rational_serde {
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(c: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(c))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }

    pub mod vec {
        use super::{format_rational, parse_rational, Rational};
        use serde::{Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            s.collect_seq(v.iter().map(format_rational))
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            Vec::<String>::deserialize(d)?
                .iter()
                .map(|t| parse_rational(t).map_err(serde::de::Error::custom))
                .collect()
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

// Multiplication engine.

/// Multiplicative hash for packed monomial keys.
#[derive(Default)]
struct PackedHasher(u64);

impl Hasher for PackedHasher {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        for chunk in bytes.chunks(8) {
            let mut buf = [0u8; 8];
            buf[..chunk.len()].copy_from_slice(chunk);
            self.write_u64(u64::from_le_bytes(buf));
        }
    }

    fn write_u64(&mut self, v: u64) {
        self.0 = (self.0.rotate_left(5) ^ v).wrapping_mul(0x51_7c_c1_b7_27_22_0a_95);
    }

    fn write_u128(&mut self, v: u128) {
        self.write_u64(v as u64);
        self.write_u64((v >> 64) as u64);
    }
}

type PackedMap<V> = HashMap<u128, V, BuildHasherDefault<PackedHasher>>;

const PACK_BITS: usize = 8;
const PACK_MAX_VARS: usize = 128 / PACK_BITS;

fn max_exponent(p: &Polynomial) -> u32 {
    p.terms
        .keys()
        .flat_map(|e| e.0.iter().copied())
        .max()
        .unwrap_or(0)
}

fn pack(e: &ExponentVector) -> u128 {
    e.0.iter()
        .enumerate()
        .fold(0u128, |acc, (i, &k)| acc | (k as u128) << (PACK_BITS * i))
}

fn unpack(key: u128, nvars: usize) -> ExponentVector {
    let mask = (1u128 << PACK_BITS) - 1;
    ExponentVector(
        (0..nvars)
            .map(|i| ((key >> (PACK_BITS * i)) & mask) as u32)
            .collect(),
    )
}

fn small_integer_terms(p: &Polynomial) -> Option<Vec<(u128, i128)>> {
    p.terms
        .iter()
        .map(|(e, c)| {
            if !c.is_integer() {
                return None;
            }
            let v = c.numer().to_i64()?;
            Some((pack(e), v as i128))
        })
        .collect()
}

fn multiply(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let nvars = a.nvars;
    if a.is_zero() || b.is_zero() {
        return Polynomial::zero(nvars);
    }
    let packable = nvars <= PACK_MAX_VARS && (max_exponent(a) + max_exponent(b)) < (1 << PACK_BITS);
    if !packable {
        return multiply_general(a, b);
    }
    if let (Some(sa), Some(sb)) = (small_integer_terms(a), small_integer_terms(b)) {
        if let Some(p) = multiply_packed_i128(&sa, &sb, nvars) {
            return p;
        }
    }
    multiply_packed_rational(a, b)
}

fn multiply_packed_i128(
    a: &[(u128, i128)],
    b: &[(u128, i128)],
    nvars: usize,
) -> Option<Polynomial> {
    let mut acc: PackedMap<i128> = PackedMap::default();
    acc.reserve(a.len().max(b.len()) * 4);
    for &(ka, ca) in a {
        for &(kb, cb) in b {
            let prod = ca.checked_mul(cb)?;
            let slot = acc.entry(ka + kb).or_insert(0);
            *slot = slot.checked_add(prod)?;
        }
    }
    let terms = acc
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(k, c)| (unpack(k, nvars), Rational::from_integer(BigInt::from(c))))
        .collect();
    Some(Polynomial { nvars, terms })
}

fn multiply_packed_rational(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let nvars = a.nvars;
    let pb: Vec<(u128, &Rational)> = b.terms.iter().map(|(e, c)| (pack(e), c)).collect();
    let mut acc: PackedMap<Rational> = PackedMap::default();
    for (ea, ca) in &a.terms {
        let ka = pack(ea);
        for (kb, cb) in &pb {
            *acc.entry(ka + kb).or_insert_with(Rational::zero) += ca * *cb;
        }
    }
    let terms = acc
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (unpack(k, nvars), c))
        .collect();
    Polynomial { nvars, terms }
}

fn multiply_general(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut acc: HashMap<ExponentVector, Rational> = HashMap::new();
    for (ea, ca) in &a.terms {
        for (eb, cb) in &b.terms {
            *acc.entry(ea.product(eb)).or_insert_with(Rational::zero) += ca * cb;
        }
    }
    Polynomial {
        nvars: a.nvars,
        terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
    }
}

/// Product of a sequence of polynomials over `nvars` variables.
pub fn product<'a, I>(nvars: usize, factors: I) -> Polynomial
where
    I: IntoIterator<Item = &'a Polynomial>,
{
    factors
        .into_iter()
        .fold(Polynomial::one(nvars), |acc, f| multiply(&acc, f))
}

/// True when `c` is the square of a rational; returns the nonnegative root.
pub fn rational_sqrt(c: &Rational) -> Option<Rational> {
    if c.is_negative() {
        return None;
    }
    let n = c.numer().sqrt();
    let d = c.denom().sqrt();
    if &(&n * &n) == c.numer() && &(&d * &d) == c.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    #[test]
    fn additive_inverse_is_zero() {
        let p = x(3, 1);
        assert!((&p + &(-&p)).is_zero());
    }

    #[test]
    fn telescoping_sum() {
        let a = &x(3, 1) - &x(3, 2);
        let b = &x(3, 2) - &x(3, 3);
        assert_eq!(&a + &b, &x(3, 1) - &x(3, 3));
    }

    #[test]
    fn mismatched_arity_is_an_error() {
        assert!(matches!(
            x(2, 1).checked_add(&x(3, 1)),
            Err(Error::VariableCountMismatch { left: 2, right: 3 })
        ));
        assert!(x(2, 1).checked_mul(&x(3, 1)).is_err());
    }

    #[test]
    fn difference_of_squares() {
        let a = &x(2, 1) - &x(2, 2);
        let b = &x(2, 1) + &x(2, 2);
        let expect = &x(2, 1).pow(2) - &x(2, 2).pow(2);
        assert_eq!(&a * &b, expect);
        let sq = a.pow(2);
        assert_eq!(sq.to_text(), "1 * x1^2 + -2 * x1^1 x2^1 + 1 * x2^2");
    }

    #[test]
    fn exact_division() {
        let num = &x(2, 1).pow(2) - &x(2, 2).pow(2);
        let den = &x(2, 1) - &x(2, 2);
        assert_eq!(num.exact_divide(&den).unwrap(), &x(2, 1) + &x(2, 2));
        match x(2, 1).exact_divide(&x(2, 2)) {
            Err(Error::NotDivisible { remainder }) => assert_eq!(remainder, "1 * x1^1"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            x(2, 1).exact_divide(&Polynomial::zero(2)),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn evaluation() {
        let p = &x(6, 1) - &x(6, 2);
        assert_eq!(p.evaluate_i64(&[3, 1, 0, 0, 0, 0]).unwrap(), int(2));
        assert_eq!(Polynomial::zero(6).evaluate_i64(&[1; 6]).unwrap(), int(0));
        assert!(p.evaluate_i64(&[1, 2]).is_err());
    }

    #[test]
    fn derivatives() {
        let p = &x(2, 1).pow(2) * &x(2, 2);
        assert_eq!(
            p.differentiate(1).unwrap(),
            (&x(2, 1) * &x(2, 2)).scale(&int(2))
        );
        assert!(x(2, 2).differentiate(1).unwrap().is_zero());
        assert!(p.differentiate(3).is_err());
        assert!(p.differentiate(0).is_err());
    }

    #[test]
    fn support_of_small_polynomial() {
        let n = 6;
        let p = &(&(&x(n, 1) * &x(n, 2)) * &x(n, 4)) - &(&(&x(n, 2) * &x(n, 3)) * &x(n, 4));
        let s: Vec<Vec<u32>> = p.support().into_iter().map(|e| e.0).collect();
        assert_eq!(s, vec![vec![0, 1, 1, 1, 0, 0], vec![1, 1, 0, 1, 0, 0]]);
        assert!(Polynomial::zero(n).support().is_empty());
    }

    #[test]
    fn grlex_orders_by_degree_then_lex() {
        let a = ExponentVector::new(vec![0, 0, 2]);
        let b = ExponentVector::new(vec![1, 0, 0]);
        let c = ExponentVector::new(vec![0, 1, 1]);
        assert!(a > b);
        assert!(c > a);
    }

    #[test]
    fn text_round_trip_with_fractions() {
        let p = &x(3, 1).scale(&frac(-3, 2)) + &Polynomial::constant(3, frac(5, 7));
        let t = p.to_text();
        assert_eq!(t, "-3/2 * x1^1 + 5/7");
        assert_eq!(Polynomial::parse(&t, 3).unwrap(), p);
        assert_eq!(Polynomial::parse("0", 3).unwrap(), Polynomial::zero(3));
        assert!(Polynomial::parse("1 * y1^1", 3).is_err());
    }

    #[test]
    fn large_coefficients_fall_back_to_bigint() {
        let big = Polynomial::constant(2, int(i64::MAX));
        let p = &(&big * &big) * &big;
        let expect = BigInt::from(i64::MAX).pow(3);
        assert_eq!(
            p.coefficient(&ExponentVector::zero(2)),
            Rational::from_integer(expect)
        );
    }

    #[test]
    fn substitution_and_renaming() {
        let p = &x(3, 1) * &x(3, 3);
        let q = p.substitute(3, &(&x(3, 1) + &x(3, 2))).unwrap();
        assert_eq!(q, &x(3, 1).pow(2) + &(&x(3, 1) * &x(3, 2)));
        let r = p.rename_variables(&[2, 3, 1]).unwrap();
        assert_eq!(r, &x(3, 2) * &x(3, 1));
        assert!(p.rename_variables(&[1, 1, 2]).is_err());
    }

    #[test]
    fn square_roots_of_rationals() {
        assert_eq!(rational_sqrt(&frac(9, 4)), Some(frac(3, 2)));
        assert_eq!(rational_sqrt(&int(2)), None);
        assert_eq!(rational_sqrt(&int(-4)), None);
    }
}

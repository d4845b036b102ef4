//! Rational functions whose denominators are products of linear forms.
//!
//! Denominators are multisets of canonical [`LinearForm`]s. Sums use the
//! multiset LCM of the denominators and equality is decided by
//! cross-multiplication, so no polynomial GCD is ever needed.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::{int, Polynomial, Rational};

/// Modulus for divisibility pretests.
const PRIME: u64 = (1 << 61) - 1;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum LinearForm {
    /// `x_i - x_j` with `i < j`.
    Difference(usize, usize),
    /// `Σ_{s ∈ S} x_s`, labels ascending.
    PartialSum(Vec<usize>),
}

impl LinearForm {
    /// Canonical factor for `x_a - x_b`, with the sign it absorbed.
    pub fn difference(a: usize, b: usize) -> Result<(LinearForm, i64)> {
        match a.cmp(&b) {
            Ordering::Less => Ok((LinearForm::Difference(a, b), 1)),
            Ordering::Greater => Ok((LinearForm::Difference(b, a), -1)),
            Ordering::Equal => Err(Error::InvalidLabel { label: a, n: 0 }),
        }
    }

    pub fn partial_sum(labels: &[usize]) -> Result<LinearForm> {
        let mut s = labels.to_vec();
        s.sort_unstable();
        let before = s.len();
        s.dedup();
        if s.is_empty() || s.len() != before || s[0] == 0 {
            return Err(Error::InvalidLabel {
                label: labels.first().copied().unwrap_or(0),
                n: 0,
            });
        }
        Ok(LinearForm::PartialSum(s))
    }

    pub fn max_label(&self) -> usize {
        match self {
            LinearForm::Difference(_, j) => *j,
            LinearForm::PartialSum(s) => *s.last().unwrap(),
        }
    }

    pub fn to_polynomial(&self, nvars: usize) -> Polynomial {
        match self {
            LinearForm::Difference(i, j) => {
                &Polynomial::var(nvars, *i) - &Polynomial::var(nvars, *j)
            }
            LinearForm::PartialSum(s) => Polynomial::linear_sum(nvars, s),
        }
    }

    /// Pseudo-random residues mod [`PRIME`] at which this form vanishes.
    fn residue_point(&self, nvars: usize) -> Vec<u64> {
        let mut v: Vec<u64> = (0..nvars as u64)
            .map(|i| (0x9E37_79B9_7F4A_7C15u64.wrapping_mul(i + 1) >> 3) % PRIME)
            .collect();
        match self {
            LinearForm::Difference(i, j) => v[j - 1] = v[i - 1],
            LinearForm::PartialSum(s) => {
                let (last, rest) = s.split_last().unwrap();
                let partial = rest.iter().fold(0, |acc, &l| (acc + v[l - 1]) % PRIME);
                v[last - 1] = (PRIME - partial) % PRIME;
            }
        }
        v
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        match self {
            LinearForm::Difference(i, j) => &point[i - 1] - &point[j - 1],
            LinearForm::PartialSum(s) => s
                .iter()
                .fold(Rational::zero(), |acc, &l| acc + &point[l - 1]),
        }
    }
}

impl Ord for LinearForm {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (LinearForm::Difference(a, b), LinearForm::Difference(c, d)) => (a, b).cmp(&(c, d)),
            (LinearForm::Difference(..), LinearForm::PartialSum(_)) => Ordering::Less,
            (LinearForm::PartialSum(_), LinearForm::Difference(..)) => Ordering::Greater,
            (LinearForm::PartialSum(s), LinearForm::PartialSum(t)) => {
                s.len().cmp(&t.len()).then_with(|| s.cmp(t))
            }
        }
    }
}

impl PartialOrd for LinearForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinearForm::Difference(i, j) => write!(f, "(x{i} - x{j})"),
            LinearForm::PartialSum(s) if s.len() == 1 => write!(f, "x{}", s[0]),
            LinearForm::PartialSum(s) => {
                let parts: Vec<String> = s.iter().map(|l| format!("x{l}")).collect();
                write!(f, "({})", parts.join(" + "))
            }
        }
    }
}

/// JSON rendering of one denominator factor.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FactorJson {
    pub kind: String,
    pub indices: Vec<usize>,
    pub multiplicity: u32,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FactoredRationalJson {
    pub numerator: String,
    pub denominator: Vec<FactorJson>,
}

/// `numerator / ∏ factor^multiplicity`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FactoredRational {
    numerator: Polynomial,
    denominator: BTreeMap<LinearForm, u32>,
}

impl FactoredRational {
    pub fn new<I>(numerator: Polynomial, factors: I) -> Result<Self>
    where
        I: IntoIterator<Item = (LinearForm, u32)>,
    {
        let nvars = numerator.nvars();
        let mut denominator = BTreeMap::new();
        if !numerator.is_zero() {
            for (f, m) in factors {
                if f.max_label() > nvars {
                    return Err(Error::VariableOutOfRange {
                        label: f.max_label(),
                        nvars,
                    });
                }
                if m > 0 {
                    *denominator.entry(f).or_insert(0) += m;
                }
            }
        }
        Ok(FactoredRational {
            numerator,
            denominator,
        })
    }

    pub fn zero(nvars: usize) -> Self {
        FactoredRational::from_polynomial(Polynomial::zero(nvars))
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        FactoredRational {
            numerator: p,
            denominator: BTreeMap::new(),
        }
    }

    /// `PT(σ) = 1 / ∏_k (x_{σ_k} - x_{σ_{k+1}})` with `σ_{n+1} = σ_1`.
    pub fn parke_taylor(cycle: &[usize]) -> Result<Self> {
        let n = cycle.len();
        if n < 3 {
            return Err(Error::InvalidPermutation(format!(
                "Parke-Taylor factor needs at least 3 labels, got {cycle:?}"
            )));
        }
        Permutation::from_images(cycle)?;
        let mut sign = 1;
        let mut factors = Vec::with_capacity(n);
        for k in 0..n {
            let (f, s) = LinearForm::difference(cycle[k], cycle[(k + 1) % n])?;
            sign *= s;
            factors.push((f, 1));
        }
        FactoredRational::new(Polynomial::constant(n, int(sign)), factors)
    }

    /// `1 / ∏_{k=1}^{n-1} (x_{σ_1} + … + x_{σ_k})` for `σ` in line notation.
    pub fn plate_function(perm: &Permutation) -> Self {
        let line = perm.line();
        let n = line.len();
        let factors = (1..n).map(|k| (LinearForm::partial_sum(&line[..k]).unwrap(), 1));
        FactoredRational::new(Polynomial::one(n), factors).expect("labels are within range")
    }

    pub fn nvars(&self) -> usize {
        self.numerator.nvars()
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &BTreeMap<LinearForm, u32> {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn denominator_degree(&self) -> u32 {
        self.denominator.values().sum()
    }

    pub fn expanded_denominator(&self) -> Polynomial {
        expand_factors(self.nvars(), &self.denominator)
    }

    fn check_same(&self, other: &FactoredRational) -> Result<()> {
        if self.nvars() != other.nvars() {
            return Err(Error::VariableCountMismatch {
                left: self.nvars(),
                right: other.nvars(),
            });
        }
        Ok(())
    }

    /// Numerators of `self` and `other` rewritten over the multiset LCM of
    /// the two denominators.
    fn over_common_denominator(
        &self,
        other: &FactoredRational,
    ) -> (Polynomial, Polynomial, BTreeMap<LinearForm, u32>) {
        let nvars = self.nvars();
        let mut lcm = self.denominator.clone();
        for (f, &m) in &other.denominator {
            let e = lcm.entry(f.clone()).or_insert(0);
            *e = (*e).max(m);
        }
        let cofactor = |den: &BTreeMap<LinearForm, u32>| -> BTreeMap<LinearForm, u32> {
            lcm.iter()
                .filter_map(|(f, &m)| {
                    let have = den.get(f).copied().unwrap_or(0);
                    (m > have).then(|| (f.clone(), m - have))
                })
                .collect()
        };
        let a = &self.numerator * &expand_factors(nvars, &cofactor(&self.denominator));
        let b = &other.numerator * &expand_factors(nvars, &cofactor(&other.denominator));
        (a, b, lcm)
    }

    /// Exact sum over the multiset-LCM denominator; no cancellation.
    pub fn add(&self, other: &FactoredRational) -> Result<FactoredRational> {
        self.check_same(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let (a, b, lcm) = self.over_common_denominator(other);
        FactoredRational::new(&a + &b, lcm)
    }

    pub fn neg(&self) -> FactoredRational {
        FactoredRational {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> FactoredRational {
        if c.is_zero() {
            return FactoredRational::zero(self.nvars());
        }
        FactoredRational {
            numerator: self.numerator.scale(c),
            denominator: self.denominator.clone(),
        }
    }

    pub fn mul(&self, other: &FactoredRational) -> Result<FactoredRational> {
        self.check_same(other)?;
        let mut den = self.denominator.clone();
        for (f, &m) in &other.denominator {
            *den.entry(f.clone()).or_insert(0) += m;
        }
        FactoredRational::new(&self.numerator * &other.numerator, den)
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn equals(&self, other: &FactoredRational) -> Result<bool> {
        self.check_same(other)?;
        let (a, b, _) = self.over_common_denominator(other);
        Ok(a == b)
    }

    /// Cancels every denominator factor that divides the numerator. The
    /// result is in lowest terms, hence a canonical representative.
    pub fn reduced(&self) -> FactoredRational {
        if self.is_zero() {
            return FactoredRational::zero(self.nvars());
        }
        let nvars = self.nvars();
        let mut numerator = self.numerator.clone();
        let mut denominator = BTreeMap::new();
        for (f, &m) in &self.denominator {
            let lin = f.to_polynomial(nvars);
            let mut left = m;
            let on_zero_set = f.residue_point(nvars);
            while left > 0 {
                // A nonzero value on the zero set of the factor rules out
                // divisibility without a trial division.
                if matches!(numerator.evaluate_mod(&on_zero_set, PRIME), Some(r) if r != 0) {
                    break;
                }
                match numerator.exact_divide(&lin) {
                    Ok(q) => {
                        numerator = q;
                        left -= 1;
                    }
                    Err(_) => break,
                }
            }
            if left > 0 {
                denominator.insert(f.clone(), left);
            }
        }
        FactoredRational {
            numerator,
            denominator,
        }
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        let num = self.numerator.evaluate(point)?;
        let mut den = Rational::one();
        for (f, &m) in &self.denominator {
            let v = f.evaluate(point);
            if v.is_zero() {
                return Err(Error::Pole(f.to_string()));
            }
            for _ in 0..m {
                den *= &v;
            }
        }
        Ok(num / den)
    }

    pub fn to_json(&self) -> FactoredRationalJson {
        FactoredRationalJson {
            numerator: self.numerator.to_text(),
            denominator: self
                .denominator
                .iter()
                .map(|(f, &m)| match f {
                    LinearForm::Difference(i, j) => FactorJson {
                        kind: "difference".into(),
                        indices: vec![*i, *j],
                        multiplicity: m,
                    },
                    LinearForm::PartialSum(s) => FactorJson {
                        kind: "partialSum".into(),
                        indices: s.clone(),
                        multiplicity: m,
                    },
                })
                .collect(),
        }
    }

    pub fn from_json(json: &FactoredRationalJson, nvars: usize) -> Result<Self> {
        let numerator = Polynomial::parse(&json.numerator, nvars)?;
        let mut factors = Vec::new();
        for f in &json.denominator {
            let form = match (f.kind.as_str(), f.indices.as_slice()) {
                ("difference", &[i, j]) if i < j && i > 0 => LinearForm::Difference(i, j),
                ("partialSum", s) => LinearForm::partial_sum(s)?,
                _ => return Err(Error::Parse(format!("bad factor {f:?}"))),
            };
            factors.push((form, f.multiplicity));
        }
        FactoredRational::new(numerator, factors)
    }
}

pub fn expand_factors(nvars: usize, factors: &BTreeMap<LinearForm, u32>) -> Polynomial {
    let mut acc = Polynomial::one(nvars);
    for (f, &m) in factors {
        let lin = f.to_polynomial(nvars);
        for _ in 0..m {
            acc = &acc * &lin;
        }
    }
    acc
}

impl fmt::Display for FactoredRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_empty() {
            return write!(f, "{}", self.numerator);
        }
        let den: Vec<String> = self
            .denominator
            .iter()
            .map(|(lf, &m)| {
                if m == 1 {
                    lf.to_string()
                } else {
                    format!("{lf}^{m}")
                }
            })
            .collect();
        write!(f, "({}) / ({})", self.numerator, den.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::frac;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    fn inv_diff(n: usize, a: usize, b: usize) -> FactoredRational {
        let (f, s) = LinearForm::difference(a, b).unwrap();
        FactoredRational::new(Polynomial::constant(n, int(s)), [(f, 1)]).unwrap()
    }

    #[test]
    fn parke_taylor_canonical_factors() {
        let pt = FactoredRational::parke_taylor(&[1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(pt.numerator(), &Polynomial::constant(6, int(-1)));
        let factors: Vec<&LinearForm> = pt.denominator().keys().collect();
        assert_eq!(factors.len(), 6);
        assert_eq!(factors[0], &LinearForm::Difference(1, 2));
        assert_eq!(factors[1], &LinearForm::Difference(1, 6));
    }

    #[test]
    fn parke_taylor_rotation_and_reversal() {
        let base = FactoredRational::parke_taylor(&[1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(
            FactoredRational::parke_taylor(&[2, 3, 4, 5, 6, 1]).unwrap(),
            base
        );
        assert_eq!(
            FactoredRational::parke_taylor(&[6, 5, 4, 3, 2, 1]).unwrap(),
            base
        );
        let odd = FactoredRational::parke_taylor(&[1, 2, 3]).unwrap();
        assert_eq!(
            FactoredRational::parke_taylor(&[3, 2, 1]).unwrap(),
            odd.neg()
        );
    }

    #[test]
    fn parke_taylor_errors() {
        assert!(FactoredRational::parke_taylor(&[1, 2]).is_err());
        assert!(FactoredRational::parke_taylor(&[1, 2, 2]).is_err());
        assert!(FactoredRational::parke_taylor(&[1, 2, 4]).is_err());
    }

    #[test]
    fn plate_functions() {
        let p = FactoredRational::plate_function(&Permutation::from_images(&[1, 2, 3]).unwrap());
        let expect = FactoredRational::new(
            Polynomial::one(3),
            [
                (LinearForm::partial_sum(&[1]).unwrap(), 1),
                (LinearForm::partial_sum(&[1, 2]).unwrap(), 1),
            ],
        )
        .unwrap();
        assert_eq!(p, expect);
        let q = FactoredRational::plate_function(&Permutation::from_images(&[2, 1, 3]).unwrap());
        let keys: Vec<String> = q.denominator().keys().map(|f| f.to_string()).collect();
        assert_eq!(keys, vec!["x2", "(x1 + x2)"]);
    }

    #[test]
    fn sums_and_cancellation() {
        let a = inv_diff(3, 1, 2);
        assert!(a.add(&a.neg()).unwrap().is_zero());
        assert!(a.add(&a.neg()).unwrap().denominator().is_empty());
        let s = a.add(&inv_diff(3, 2, 3)).unwrap();
        assert_eq!(s.numerator(), &(&x(3, 1) - &x(3, 3)));
        assert_eq!(s.denominator().len(), 2);
    }

    #[test]
    fn cross_multiplication_equality() {
        let n = 2;
        let lhs = FactoredRational::new(
            &x(n, 1).pow(2) - &x(n, 2).pow(2),
            [(LinearForm::Difference(1, 2), 1)],
        )
        .unwrap();
        let rhs = FactoredRational::from_polynomial(&x(n, 1) + &x(n, 2));
        assert!(lhs.equals(&rhs).unwrap());
        assert_eq!(lhs.reduced(), rhs);
        let zero = FactoredRational::new(Polynomial::zero(n), [(LinearForm::Difference(1, 2), 1)])
            .unwrap();
        assert!(zero.equals(&FactoredRational::zero(n)).unwrap());
        assert!(!lhs.equals(&FactoredRational::zero(n)).unwrap());
    }

    #[test]
    fn evaluation_reports_poles() {
        let a = inv_diff(3, 1, 2);
        assert_eq!(a.evaluate(&[int(3), int(1), int(0)]).unwrap(), frac(1, 2));
        assert!(matches!(
            a.evaluate(&[int(1), int(1), int(0)]),
            Err(Error::Pole(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let pt = FactoredRational::parke_taylor(&[1, 3, 2, 4]).unwrap();
        let json = pt.to_json();
        assert_eq!(json.denominator[0].kind, "difference");
        assert_eq!(FactoredRational::from_json(&json, 4).unwrap(), pt);
    }
}

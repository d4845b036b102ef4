//! Constrained sums of Parke-Taylor factors and plate functions.
//!
//! Sums are computed exactly. Words are first collected into classes up to
//! rotation and reversal (`PT` of a reversed `n`-cycle is `(-1)^n` times
//! the original), then summed along a deletion tree: terms whose words
//! agree after removing the largest label are added first, then those that
//! agree after removing the two largest labels, and so on. Every partial
//! sum is reduced to lowest terms, which keeps intermediate numerators
//! small when insertions of a label cancel.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{build_c_pairing, family_polynomial, Family};
use crate::linalg;
use crate::perm::{Pairing, Permutation};
use crate::poly::{int, rational_sqrt, ExponentVector, Polynomial, Rational};
use crate::rational::{FactoredRational, LinearForm};

/// Ordered pairs `(a, b)` meaning `p_a < p_b`, where `p_i` is the position
/// of label `i` in a permutation written in line notation.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PositionConstraintSet {
    pub n: usize,
    #[serde(rename = "positionPairs")]
    pub pairs: Vec<(usize, usize)>,
}

impl PositionConstraintSet {
    pub fn new(n: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let c = PositionConstraintSet { n, pairs };
        c.validate()?;
        Ok(c)
    }

    /// `G_1 < G_2 < …`: every label of a group precedes every label of the
    /// next group.
    pub fn from_chain(n: usize, groups: &[&[usize]]) -> Result<Self> {
        let mut pairs = Vec::new();
        for w in groups.windows(2) {
            for &a in w[0] {
                for &b in w[1] {
                    pairs.push((a, b));
                }
            }
        }
        PositionConstraintSet::new(n, pairs)
    }

    /// Accepts `{"n", "positionPairs": [[a, b], …]}` or the chain form
    /// `{"n", "chain": [[…], […], …]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Chain {
            n: usize,
            chain: Vec<Vec<usize>>,
        }
        let value: serde_json::Value = serde_json::from_str(text)?;
        if value.get("chain").is_some() {
            let c: Chain = serde_json::from_value(value)?;
            let groups: Vec<&[usize]> = c.chain.iter().map(Vec::as_slice).collect();
            return PositionConstraintSet::from_chain(c.n, &groups);
        }
        let c: PositionConstraintSet = serde_json::from_value(value)?;
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<()> {
        for &(a, b) in &self.pairs {
            for l in [a, b] {
                if l == 0 || l > self.n {
                    return Err(Error::InvalidLabel {
                        label: l,
                        n: self.n,
                    });
                }
            }
            if a == b {
                return Err(Error::CyclicConstraints(a));
            }
        }
        Ok(())
    }
}

/// `{p1,p6} < {p2,p4} < {p3,p5}`.
pub fn nonplanar_six() -> PositionConstraintSet {
    PositionConstraintSet::from_chain(6, &[&[1, 6], &[2, 4], &[3, 5]]).unwrap()
}

/// `{p1,p2} < {p3,p4} < {p5,p6}`.
pub fn standard_six() -> PositionConstraintSet {
    PositionConstraintSet::from_chain(6, &[&[1, 2], &[3, 4], &[5, 6]]).unwrap()
}

/// Oriented triples `(a, b, c)` that must occur in this cyclic order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CyclicSubwordConstraintSet {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(rename = "tripleCycles")]
    pub triples: Vec<[usize; 3]>,
}

impl CyclicSubwordConstraintSet {
    pub fn new(triples: Vec<[usize; 3]>) -> Self {
        CyclicSubwordConstraintSet { n: None, triples }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Declared size, or the largest label when none is declared.
    pub fn size(&self) -> usize {
        self.n
            .unwrap_or_else(|| self.triples.iter().flatten().copied().max().unwrap_or(0))
    }
}

/// `{1,2,3}, {2,5,6}, {3,4,6}, {4,5,1}`.
pub fn nonplanar_triples() -> CyclicSubwordConstraintSet {
    CyclicSubwordConstraintSet::new(vec![[1, 2, 3], [2, 5, 6], [3, 4, 6], [4, 5, 1]])
}

/// All permutations (line notation, lexicographic order) satisfying
/// every position constraint.
pub fn enumerate_position_constrained(c: &PositionConstraintSet) -> Result<Vec<Permutation>> {
    c.validate()?;
    let n = c.n;
    let mut preds = vec![Vec::new(); n + 1];
    let mut succs = vec![Vec::new(); n + 1];
    for &(a, b) in &c.pairs {
        preds[b].push(a);
        succs[a].push(b);
    }
    // Kahn's algorithm; leftover labels lie on or behind a directed cycle.
    let mut indeg: Vec<usize> = preds.iter().map(Vec::len).collect();
    let mut queue: VecDeque<usize> = (1..=n).filter(|&l| indeg[l] == 0).collect();
    let mut done = 0;
    while let Some(l) = queue.pop_front() {
        done += 1;
        for &s in &succs[l] {
            indeg[s] -= 1;
            if indeg[s] == 0 {
                queue.push_back(s);
            }
        }
    }
    if done < n {
        let stuck = (1..=n).find(|&l| indeg[l] > 0).unwrap();
        return Err(Error::CyclicConstraints(stuck));
    }

    fn extend(
        line: &mut Vec<usize>,
        placed: &mut [bool],
        preds: &[Vec<usize>],
        out: &mut Vec<Permutation>,
    ) {
        let n = placed.len() - 1;
        if line.len() == n {
            out.push(Permutation::from_images(line).unwrap());
            return;
        }
        for l in 1..=n {
            if !placed[l] && preds[l].iter().all(|&p| placed[p]) {
                placed[l] = true;
                line.push(l);
                extend(line, placed, preds, out);
                line.pop();
                placed[l] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(
        &mut Vec::with_capacity(n),
        &mut vec![false; n + 1],
        &preds,
        &mut out,
    );
    Ok(out)
}

fn in_cyclic_order(pos: &[usize], [a, b, c]: [usize; 3]) -> bool {
    let (pa, pb, pc) = (pos[a], pos[b], pos[c]);
    (pa < pb && pb < pc) || (pb < pc && pc < pa) || (pc < pa && pa < pb)
}

/// All `n`-cycles, written starting at label 1 and listed lexicographically,
/// that contain every triple as a cyclic subword.
pub fn enumerate_cycles_with_subcycles(
    n: usize,
    c: &CyclicSubwordConstraintSet,
) -> Result<Vec<Vec<usize>>> {
    for t in &c.triples {
        let distinct: BTreeSet<usize> = t.iter().copied().collect();
        for &l in t {
            if l == 0 || l > n {
                return Err(Error::InvalidLabel { label: l, n });
            }
        }
        if distinct.len() != 3 {
            return Err(Error::InvalidLabel { label: t[0], n });
        }
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut word = vec![1];
    let mut used = vec![false; n + 1];
    used[1] = true;
    fn rec(
        word: &mut Vec<usize>,
        used: &mut [bool],
        n: usize,
        triples: &[[usize; 3]],
        out: &mut Vec<Vec<usize>>,
    ) {
        if word.len() == n {
            let mut pos = vec![0; n + 1];
            for (i, &l) in word.iter().enumerate() {
                pos[l] = i;
            }
            if triples.iter().all(|&t| in_cyclic_order(&pos, t)) {
                out.push(word.clone());
            }
            return;
        }
        for l in 2..=n {
            if !used[l] {
                used[l] = true;
                word.push(l);
                rec(word, used, n, triples, out);
                word.pop();
                used[l] = false;
            }
        }
    }
    rec(&mut word, &mut used, n, &c.triples, &mut out);
    Ok(out)
}

/// Canonical representative of a cycle word up to rotation and reversal,
/// with the sign relating their PT factors.
pub fn canonical_cycle(word: &[usize]) -> (Vec<usize>, i64) {
    let n = word.len();
    let min_pos = (0..n).min_by_key(|&i| word[i]).unwrap();
    let rotated: Vec<usize> = (0..n).map(|k| word[(min_pos + k) % n]).collect();
    let mut reversed = vec![rotated[0]];
    reversed.extend(rotated[1..].iter().rev());
    if reversed < rotated {
        (reversed, if n.is_multiple_of(2) { 1 } else { -1 })
    } else {
        (rotated, 1)
    }
}

/// Integer multiplicities of canonical cycle classes; cancelled classes
/// are dropped.
pub fn cycle_classes<W: AsRef<[usize]>>(words: &[W]) -> BTreeMap<Vec<usize>, i64> {
    let mut classes = BTreeMap::new();
    for w in words {
        let (c, s) = canonical_cycle(w.as_ref());
        *classes.entry(c).or_insert(0) += s;
    }
    classes.retain(|_, v| *v != 0);
    classes
}

fn add_reduced(a: &FactoredRational, b: &FactoredRational) -> Result<FactoredRational> {
    Ok(a.add(b)?.reduced())
}

/// `Σ PT(w)` over the given cycle words, in lowest terms.
pub fn pt_sum<W: AsRef<[usize]>>(words: &[W]) -> Result<FactoredRational> {
    let first = words.first().ok_or(Error::Empty("permutation set"))?;
    let n = first.as_ref().len();
    let classes = cycle_classes(words);
    let mut level: BTreeMap<Vec<usize>, FactoredRational> = BTreeMap::new();
    for (word, coeff) in &classes {
        if word.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: word.len(),
            });
        }
        let pt = FactoredRational::parke_taylor(word)?.scale(&int(*coeff));
        level.insert(word.clone(), pt);
    }
    for removed in (1..=n).rev() {
        let mut next: BTreeMap<Vec<usize>, FactoredRational> = BTreeMap::new();
        for (word, f) in level {
            let shorter: Vec<usize> = word.into_iter().filter(|&l| l != removed).collect();
            let key = if shorter.len() > 2 {
                canonical_cycle(&shorter).0
            } else {
                shorter
            };
            match next.remove(&key) {
                Some(acc) => {
                    let s = add_reduced(&acc, &f)?;
                    next.insert(key, s);
                }
                None => {
                    next.insert(key, f);
                }
            }
        }
        next.retain(|_, f| !f.is_zero());
        level = next;
    }
    let mut total = FactoredRational::zero(n);
    for f in level.values() {
        total = add_reduced(&total, f)?;
    }
    Ok(total)
}

pub fn pt_sum_permutations(perms: &[Permutation]) -> Result<FactoredRational> {
    let words: Vec<Vec<usize>> = perms.iter().map(Permutation::line).collect();
    pt_sum(&words)
}

/// Orbit of a line-notation word under independent swaps of the given
/// position pairs (1-based positions).
pub fn position_swap_orbit(
    word: &[usize],
    position_pairs: &[(usize, usize)],
) -> BTreeSet<Vec<usize>> {
    let mut orbit = BTreeSet::new();
    for mask in 0u32..(1 << position_pairs.len()) {
        let mut w = word.to_vec();
        for (k, &(i, j)) in position_pairs.iter().enumerate() {
            if mask & (1 << k) != 0 {
                w.swap(i - 1, j - 1);
            }
        }
        orbit.insert(w);
    }
    orbit
}

/// The seven cyclic orders of the three-cycle identity, as tabulated.
pub const PRINTED_SEVEN_CYCLES: [[usize; 6]; 7] = [
    [1, 2, 3, 4, 5, 6],
    [1, 2, 4, 5, 6, 3],
    [1, 4, 2, 5, 6, 3],
    [1, 4, 5, 6, 2, 3],
    [1, 4, 6, 2, 3, 5],
    [1, 4, 6, 2, 5, 3],
    [1, 6, 2, 3, 4, 5],
];

/// The eight permutations of the ordered-pairs identity, as tabulated.
pub const PRINTED_EIGHT_PERMUTATIONS: [[usize; 6]; 8] = [
    [1, 6, 2, 4, 3, 5],
    [1, 6, 2, 4, 5, 3],
    [1, 6, 4, 2, 3, 5],
    [1, 6, 4, 2, 5, 3],
    [6, 1, 2, 4, 3, 5],
    [6, 1, 2, 4, 5, 3],
    [6, 1, 4, 2, 3, 5],
    [6, 1, 4, 2, 5, 3],
];

/// `(x1−x2)(x1−x3)(x2−x3)(x1−x4)(x3−x4)(x1−x5)(x2−x5)(x4−x5)(x2−x6)(x3−x6)(x4−x6)(x5−x6)`.
pub fn d12_factors() -> Vec<(LinearForm, u32)> {
    [
        (1, 2),
        (1, 3),
        (2, 3),
        (1, 4),
        (3, 4),
        (1, 5),
        (2, 5),
        (4, 5),
        (2, 6),
        (3, 6),
        (4, 6),
        (5, 6),
    ]
    .iter()
    .map(|&(i, j)| (LinearForm::Difference(i, j), 1))
    .collect()
}

fn cubic_from_terms(terms: &[(i64, [usize; 3])]) -> Polynomial {
    terms.iter().fold(Polynomial::zero(6), |acc, (c, labels)| {
        let m = labels
            .iter()
            .fold(Polynomial::constant(6, int(*c)), |p, &l| {
                &p * &Polynomial::var(6, l)
            });
        &acc + &m
    })
}

/// The squared cubic in the closed form of the cyclic-subword sum, as
/// tabulated term by term.
pub fn tabulated_seven_term_numerator() -> Polynomial {
    cubic_from_terms(&[
        (1, [1, 2, 4]),
        (-1, [2, 3, 4]),
        (-1, [1, 3, 5]),
        (1, [2, 3, 5]),
        (-1, [2, 4, 5]),
        (1, [3, 4, 5]),
        (-1, [1, 2, 6]),
        (1, [1, 3, 6]),
        (-1, [1, 4, 6]),
        (1, [2, 4, 6]),
        (1, [1, 5, 6]),
        (-1, [3, 5, 6]),
    ])
}

/// The squared cubic in the closed form of the position-constrained sum,
/// as tabulated term by term.
pub fn tabulated_eight_term_numerator() -> Polynomial {
    cubic_from_terms(&[
        (1, [1, 2, 4]),
        (-1, [2, 3, 4]),
        (-1, [2, 5, 4]),
        (1, [3, 5, 4]),
        (-1, [1, 6, 4]),
        (1, [2, 6, 4]),
        (-1, [1, 3, 5]),
        (1, [2, 3, 5]),
        (-1, [1, 2, 6]),
        (1, [1, 3, 6]),
        (1, [1, 5, 6]),
        (-1, [3, 5, 6]),
    ])
}

/// `sign · N² / D12`.
pub fn closed_form(numerator: &Polynomial, sign: i64) -> FactoredRational {
    FactoredRational::new(numerator.pow(2).scale(&int(sign)), d12_factors()).unwrap()
}

/// `C_{16,24,35}`.
pub fn c_16_24_35() -> Polynomial {
    build_c_pairing(&Pairing::parse("16,24,35").unwrap())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareRoot {
    pub root: Polynomial,
    /// `numerator == sign · root²`.
    pub sign: i64,
    /// Pairing of the matching `C_I` when found among the candidates.
    pub candidate: Option<Pairing>,
}

/// Exact square root by successive leading terms; `None` if `p` is not
/// the square of a polynomial.
pub fn polynomial_sqrt(p: &Polynomial) -> Option<Polynomial> {
    let n = p.nvars();
    if p.is_zero() {
        return Some(Polynomial::zero(n));
    }
    let (lead_e, lead_c) = p.leading_term()?;
    let (lowest_e, _) = p.terms().next()?;
    let half: Option<Vec<u32>> = lead_e
        .as_slice()
        .iter()
        .map(|&e| (e % 2 == 0).then_some(e / 2))
        .collect();
    let head_e = ExponentVector::new(half?);
    let head_c = rational_sqrt(lead_c)?;
    let head = Polynomial::monomial(head_e.clone(), head_c.clone());
    let twice_head = Polynomial::monomial(head_e, &head_c * int(2));
    let mut root = head;
    loop {
        let rest = p - &root.pow(2);
        let Some((e, c)) = rest.leading_term() else {
            return Some(root);
        };
        let term = Polynomial::monomial(e.clone(), c.clone());
        let next = term.exact_divide(&twice_head).ok()?;
        let (ne, _) = next.leading_term()?;
        let squared: Vec<u32> = ne.as_slice().iter().map(|&v| 2 * v).collect();
        if &ExponentVector::new(squared) < lowest_e {
            return None;
        }
        root = &root + &next;
    }
}

/// Tests whether the numerator of `f` is `±` a perfect square: first
/// against the fifteen `C_I`, then by generic extraction.
pub fn verify_square_numerator(f: &FactoredRational) -> Option<SquareRoot> {
    let num = f.numerator();
    if num.nvars() == 6 && !num.is_zero() {
        for pairing in Pairing::all(6) {
            let c = family_polynomial(Family::C, &pairing).unwrap();
            let sq = c.pow(2);
            for sign in [1, -1] {
                if num == &sq.scale(&int(sign)) {
                    return Some(SquareRoot {
                        root: c,
                        sign,
                        candidate: Some(pairing),
                    });
                }
            }
        }
    }
    for sign in [1, -1] {
        if let Some(root) = polynomial_sqrt(&num.scale(&int(sign))) {
            return Some(SquareRoot {
                root,
                sign,
                candidate: None,
            });
        }
    }
    None
}

/// `x_n ↦ −(x_1 + … + x_{n−1})`, restricting to the hyperplane `x_[n] = 0`.
pub fn restrict_to_hyperplane(p: &Polynomial) -> Polynomial {
    let n = p.nvars();
    let others: Vec<usize> = (1..n).collect();
    p.substitute(n, &-Polynomial::linear_sum(n, &others))
        .expect("last variable exists")
}

/// One term `coefficient / ∏ factors`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlateTerm {
    pub coefficient: Rational,
    pub factors: Vec<LinearForm>,
}

impl PlateTerm {
    pub fn to_rational(&self, nvars: usize) -> FactoredRational {
        FactoredRational::new(
            Polynomial::constant(nvars, self.coefficient.clone()),
            self.factors.iter().map(|f| (f.clone(), 1)),
        )
        .unwrap()
    }

    pub fn display(&self) -> String {
        let den: Vec<String> = self.factors.iter().map(|f| f.to_string()).collect();
        format!(
            "{}/({})",
            crate::poly::format_rational(&self.coefficient),
            den.join(" ")
        )
    }
}

#[derive(Clone, Debug)]
pub struct PlateSumReport {
    pub term_count: usize,
    /// The sum in lowest terms in all `n` variables.
    pub sum: FactoredRational,
    /// After restriction to `x_[n] = 0`: the factors kept (with their
    /// original names) and the restricted numerator.
    pub restricted_numerator: Polynomial,
    pub restricted_factors: Vec<LinearForm>,
    /// A decomposition into exactly two fractions over partial sums,
    /// valid on the hyperplane, if one exists.
    pub two_terms: Option<[PlateTerm; 2]>,
}

impl PlateSumReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "termCount": self.term_count,
            "sum": self.sum.to_json(),
            "restrictedNumerator": self.restricted_numerator.to_text(),
            "restrictedFactors": self.restricted_factors.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            "twoTerms": self.two_terms.as_ref().map(|t| t.iter().map(PlateTerm::display).collect::<Vec<_>>()),
        })
    }
}

fn restrict_factor(f: &LinearForm, n: usize) -> Polynomial {
    restrict_to_hyperplane(&f.to_polynomial(n))
}

fn restricted_product(factors: &[LinearForm], n: usize) -> Polynomial {
    factors
        .iter()
        .fold(Polynomial::one(n), |acc, f| &acc * &restrict_factor(f, n))
}

fn subsets(len: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, len: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..len {
            cur.push(i);
            rec(i + 1, len, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, len, k, &mut Vec::new(), &mut out);
    out
}

/// Sum of plate functions; also searches for a two-fraction form on the
/// hyperplane `x_[n] = 0`.
pub fn plate_sum(perms: &[Permutation]) -> Result<PlateSumReport> {
    let first = perms.first().ok_or(Error::Empty("permutation set"))?;
    let n = first.degree();
    let mut sum = FactoredRational::zero(n);
    for p in perms {
        sum = add_reduced(&sum, &FactoredRational::plate_function(p))?;
    }

    let mut numerator = restrict_to_hyperplane(sum.numerator());
    let mut kept = Vec::new();
    for (f, &m) in sum.denominator() {
        let lin = restrict_factor(f, n);
        let mut left = m;
        while left > 0 && !lin.is_zero() {
            match numerator.exact_divide(&lin) {
                Ok(q) => {
                    numerator = q;
                    left -= 1;
                }
                Err(_) => break,
            }
        }
        kept.extend(std::iter::repeat_n(f.clone(), left as usize));
    }

    let two_terms = two_term_decomposition(&numerator, &kept, n);
    Ok(PlateSumReport {
        term_count: perms.len(),
        sum,
        restricted_numerator: numerator,
        restricted_factors: kept,
        two_terms,
    })
}

/// Finds `N = a·∏K1 + b·∏K2` (restricted) with `K1, K2` complementary to
/// the two candidate denominators inside `factors`.
fn two_term_decomposition(
    numerator: &Polynomial,
    factors: &[LinearForm],
    n: usize,
) -> Option<[PlateTerm; 2]> {
    let deg = numerator.total_degree()? as usize;
    if deg > factors.len() || !numerator_is_homogeneous(numerator) {
        return None;
    }
    let cofactor_sets = subsets(factors.len(), deg);
    let products: Vec<Polynomial> = cofactor_sets
        .iter()
        .map(|s| {
            restricted_product(
                &s.iter().map(|&i| factors[i].clone()).collect::<Vec<_>>(),
                n,
            )
        })
        .collect();
    let monomials: Vec<ExponentVector> = numerator.support().into_iter().collect();
    for i in 0..cofactor_sets.len() {
        for j in i + 1..cofactor_sets.len() {
            let (pi, pj) = (&products[i], &products[j]);
            if pi.is_zero() || pj.is_zero() {
                continue;
            }
            let mut rows: BTreeSet<ExponentVector> = monomials.iter().cloned().collect();
            rows.extend(pi.support());
            rows.extend(pj.support());
            let a: Vec<Vec<Rational>> = rows
                .iter()
                .map(|m| vec![pi.coefficient(m), pj.coefficient(m)])
                .collect();
            let b: Vec<Rational> = rows.iter().map(|m| numerator.coefficient(m)).collect();
            let Some(x) = linalg::solve(&a, &b) else {
                continue;
            };
            if x.iter().any(Zero::is_zero) {
                continue;
            }
            let complement = |set: &[usize]| -> Vec<LinearForm> {
                (0..factors.len())
                    .filter(|k| !set.contains(k))
                    .map(|k| factors[k].clone())
                    .collect()
            };
            return Some([
                PlateTerm {
                    coefficient: x[0].clone(),
                    factors: complement(&cofactor_sets[i]),
                },
                PlateTerm {
                    coefficient: x[1].clone(),
                    factors: complement(&cofactor_sets[j]),
                },
            ]);
        }
    }
    None
}

fn numerator_is_homogeneous(p: &Polynomial) -> bool {
    let degs: BTreeSet<u32> = p.terms().map(|(e, _)| e.total_degree()).collect();
    degs.len() <= 1
}

/// Evaluates a plate decomposition against the plate sum at a point of
/// the hyperplane given by its first `n − 1` coordinates.
pub fn check_on_hyperplane(report: &PlateSumReport, head: &[Rational]) -> Result<bool> {
    let n = report.sum.nvars();
    if head.len() + 1 != n {
        return Err(Error::PointLength {
            expected: n - 1,
            got: head.len(),
        });
    }
    let mut point = head.to_vec();
    point.push(-head.iter().fold(Rational::zero(), |a, b| a + b));
    let lhs = report.sum.evaluate(&point)?;
    let Some(terms) = &report.two_terms else {
        return Ok(false);
    };
    let mut rhs = Rational::zero();
    for t in terms {
        rhs += t.to_rational(n).evaluate(&point)?;
    }
    Ok(lhs == rhs)
}

#[derive(Clone, Debug)]
pub struct ConstrainedSumReport {
    pub n: usize,
    pub term_count: usize,
    pub class_count: usize,
    pub sum: FactoredRational,
    pub square_root: Option<SquareRoot>,
}

impl ConstrainedSumReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "termCount": self.term_count,
            "classCount": self.class_count,
            "isZero": self.is_zero(),
            "sum": self.sum.to_json(),
            "squareRoot": self.square_root.as_ref().map(|r| serde_json::json!({
                "root": r.root.to_text(),
                "sign": r.sign,
                "pairing": r.candidate.as_ref().map(|p| p.to_string()),
            })),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.sum.is_zero()
    }

    /// Whether the sum is a single fraction over differences with a
    /// perfect-square numerator (up to sign).
    pub fn has_square_form(&self) -> bool {
        !self.sum.is_zero() && self.square_root.is_some()
    }
}

pub fn constrained_pt_sum(c: &PositionConstraintSet) -> Result<ConstrainedSumReport> {
    let perms = enumerate_position_constrained(c)?;
    let words: Vec<Vec<usize>> = perms.iter().map(Permutation::line).collect();
    let sum = if words.is_empty() {
        FactoredRational::zero(c.n)
    } else {
        pt_sum(&words)?
    };
    let square_root = if sum.is_zero() {
        None
    } else {
        verify_square_numerator(&sum)
    };
    Ok(ConstrainedSumReport {
        n: c.n,
        term_count: words.len(),
        class_count: cycle_classes(&words).len(),
        sum,
        square_root,
    })
}

/// Position-constrained PT sum for nine labels.
pub fn nine_particle_sum(c: &PositionConstraintSet) -> Result<ConstrainedSumReport> {
    if c.n != 9 {
        return Err(Error::DimensionMismatch {
            expected: 9,
            got: c.n,
        });
    }
    constrained_pt_sum(c)
}

/// The six-label nonplanar constraint pattern on labels 1..6 of `n`.
pub fn embedded_nonplanar(n: usize) -> Result<PositionConstraintSet> {
    PositionConstraintSet::new(n, nonplanar_six().pairs)
}

/// Whether two fractions have the same denominator and numerators equal
/// up to an overall sign.
pub fn same_denominator_up_to_sign(a: &FactoredRational, b: &FactoredRational) -> bool {
    a.denominator() == b.denominator()
        && (a.numerator() == b.numerator() || a.numerator() == &-b.numerator())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::frac;

    fn perm_lines(ps: &[Permutation]) -> Vec<Vec<usize>> {
        ps.iter().map(Permutation::line).collect()
    }

    #[test]
    fn position_filter_gives_eight() {
        let ps = enumerate_position_constrained(&nonplanar_six()).unwrap();
        assert_eq!(
            perm_lines(&ps),
            PRINTED_EIGHT_PERMUTATIONS
                .iter()
                .map(|w| w.to_vec())
                .collect::<Vec<_>>()
        );
        let free = PositionConstraintSet::new(4, vec![]).unwrap();
        assert_eq!(enumerate_position_constrained(&free).unwrap().len(), 24);
        let cyc = PositionConstraintSet::new(3, vec![(1, 2), (2, 1)]).unwrap();
        assert!(matches!(
            enumerate_position_constrained(&cyc),
            Err(Error::CyclicConstraints(_))
        ));
    }

    #[test]
    fn cyclic_filter_gives_seven() {
        let cs = enumerate_cycles_with_subcycles(6, &nonplanar_triples()).unwrap();
        assert_eq!(
            cs,
            PRINTED_SEVEN_CYCLES
                .iter()
                .map(|w| w.to_vec())
                .collect::<Vec<_>>()
        );
        let none = CyclicSubwordConstraintSet::new(vec![]);
        assert_eq!(enumerate_cycles_with_subcycles(5, &none).unwrap().len(), 24);
        let opposite = CyclicSubwordConstraintSet::new(vec![[1, 2, 3], [1, 3, 2]]);
        assert!(enumerate_cycles_with_subcycles(5, &opposite)
            .unwrap()
            .is_empty());
        let bad = CyclicSubwordConstraintSet::new(vec![[1, 2, 7]]);
        assert!(enumerate_cycles_with_subcycles(6, &bad).is_err());
    }

    #[test]
    fn canonical_cycles() {
        assert_eq!(canonical_cycle(&[3, 1, 2]), (vec![1, 2, 3], 1));
        assert_eq!(canonical_cycle(&[1, 3, 2]), (vec![1, 2, 3], -1));
        assert_eq!(canonical_cycle(&[2, 1, 4, 3]), (vec![1, 2, 3, 4], 1));
        assert_eq!(canonical_cycle(&[1, 2, 4, 3]), (vec![1, 2, 4, 3], 1));
    }

    #[test]
    fn seven_term_identity() {
        let sum = pt_sum(&PRINTED_SEVEN_CYCLES).unwrap();
        let expect = closed_form(&c_16_24_35(), -1);
        assert!(sum.equals(&expect).unwrap());
        assert_eq!(sum, expect.reduced());
        assert_eq!(tabulated_seven_term_numerator(), c_16_24_35());
    }

    #[test]
    fn eight_term_identity() {
        let sum = pt_sum(&PRINTED_EIGHT_PERMUTATIONS).unwrap();
        let expect = closed_form(&tabulated_eight_term_numerator(), 1);
        assert!(sum.equals(&expect).unwrap());
        assert_eq!(tabulated_eight_term_numerator(), c_16_24_35());
        let seven = pt_sum(&PRINTED_SEVEN_CYCLES).unwrap();
        assert!(same_denominator_up_to_sign(&sum, &seven));
        assert!(sum.equals(&seven.neg()).unwrap());
    }

    #[test]
    fn pt_sum_is_order_independent() {
        let mut rev = PRINTED_EIGHT_PERMUTATIONS.to_vec();
        rev.reverse();
        assert_eq!(
            pt_sum(&rev).unwrap(),
            pt_sum(&PRINTED_EIGHT_PERMUTATIONS).unwrap()
        );
        let single = pt_sum(&[[2, 4, 1, 3]]).unwrap();
        assert!(single
            .equals(&FactoredRational::parke_taylor(&[2, 4, 1, 3]).unwrap())
            .unwrap());
        assert!(pt_sum::<Vec<usize>>(&[]).is_err());
    }

    #[test]
    fn swap_orbit_matches_constraints() {
        let orbit = position_swap_orbit(&[1, 6, 2, 4, 3, 5], &[(1, 2), (3, 4), (5, 6)]);
        let expect: BTreeSet<Vec<usize>> = PRINTED_EIGHT_PERMUTATIONS
            .iter()
            .map(|w| w.to_vec())
            .collect();
        assert_eq!(orbit, expect);
    }

    #[test]
    fn square_roots() {
        let x = |i| Polynomial::var(2, i);
        let d = &x(1) - &x(2);
        let r = polynomial_sqrt(&d.pow(2)).unwrap();
        assert!(r == d || r == -&d);
        assert!(polynomial_sqrt(&(&x(1) * &x(2))).is_none());
        let f = FactoredRational::from_polynomial(&x(1) * &x(2));
        assert!(verify_square_numerator(&f).is_none());
        let sum = pt_sum(&PRINTED_EIGHT_PERMUTATIONS).unwrap();
        let sr = verify_square_numerator(&sum).unwrap();
        assert_eq!(sr.candidate, Some(Pairing::parse("16,24,35").unwrap()));
        assert_eq!(sr.sign, 1);
        let generic = polynomial_sqrt(&c_16_24_35().pow(2).scale(&frac(4, 9))).unwrap();
        assert_eq!(generic.pow(2), c_16_24_35().pow(2).scale(&frac(4, 9)));
    }

    #[test]
    fn full_symmetric_sum_cancels_for_odd_n() {
        let all: Vec<Vec<usize>> =
            enumerate_position_constrained(&PositionConstraintSet::new(5, vec![]).unwrap())
                .unwrap()
                .iter()
                .map(Permutation::line)
                .collect();
        assert!(pt_sum(&all).unwrap().is_zero());
    }

    #[test]
    fn nonplanar_plate_sum_splits_in_two() {
        let ps = enumerate_position_constrained(&nonplanar_six()).unwrap();
        let report = plate_sum(&ps).unwrap();
        let terms = report.two_terms.clone().expect("two-term form");
        for t in &terms {
            assert_eq!(t.factors.len(), 5);
        }
        let pts: [[i64; 5]; 3] = [[1, 2, 3, 5, 7], [-2, 9, 4, 1, 6], [3, -1, 8, 2, 11]];
        for p in pts {
            let head: Vec<Rational> = p.iter().map(|&v| int(v)).collect();
            assert!(check_on_hyperplane(&report, &head).unwrap());
        }
    }

    #[test]
    fn standard_plate_sum_is_reported() {
        let ps = enumerate_position_constrained(&standard_six()).unwrap();
        assert_eq!(ps.len(), 8);
        let report = plate_sum(&ps).unwrap();
        assert!(!report.sum.is_zero());
    }

    #[test]
    fn constraint_json() {
        let c = PositionConstraintSet::from_json(
            r#"{"n":6,"positionPairs":[[1,2],[1,4],[6,2],[6,4],[2,3],[2,5],[4,3],[4,5]]}"#,
        )
        .unwrap();
        assert_eq!(enumerate_position_constrained(&c).unwrap().len(), 8);
        let t = CyclicSubwordConstraintSet::from_json(
            r#"{"tripleCycles":[[1,2,3],[2,5,6],[3,4,6],[4,5,1]]}"#,
        )
        .unwrap();
        assert_eq!(t.size(), 6);
        assert!(PositionConstraintSet::from_json(r#"{"n":3,"positionPairs":[[1,4]]}"#).is_err());
        let chain =
            PositionConstraintSet::from_json(r#"{"n":6,"chain":[[1,6],[2,4],[3,5]]}"#).unwrap();
        assert_eq!(chain, nonplanar_six());
    }

    #[test]
    fn nine_requires_nine_labels() {
        assert!(nine_particle_sum(&nonplanar_six()).is_err());
        let bad = PositionConstraintSet::new(9, vec![(1, 2), (2, 3), (3, 1)]).unwrap();
        assert!(matches!(
            nine_particle_sum(&bad),
            Err(Error::CyclicConstraints(_))
        ));
    }
}

//! Permutations, pairings, partitions and characters of symmetric groups.
//!
//! Labels are 1-based throughout the public API. Composition follows the
//! function convention: `g.compose(&h)` maps `i` to `g(h(i))`.

use std::collections::{btree_map::Entry, BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_CLOSURE_LIMIT: usize = 1_000_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    // 0-based images
    images: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::from_images(&v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.line()
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From line notation `(σ(1), …, σ(n))` with 1-based labels.
    pub fn from_images(line: &[usize]) -> Result<Self> {
        let n = line.len();
        let mut seen = vec![false; n];
        for &v in line {
            if !(1..=n).contains(&v) || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::InvalidPermutation(format!("{line:?}")));
            }
        }
        Ok(Permutation {
            images: line.iter().map(|v| v - 1).collect(),
        })
    }

    /// From disjoint cycles on `1..=n`, e.g. `from_cycles(6, &[&[1, 3], &[2, 4]])`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if !(1..=n).contains(&a) || !(1..=n).contains(&b) {
                    return Err(Error::InvalidLabel { label: a.max(b), n });
                }
                if std::mem::replace(&mut touched[a - 1], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "label {a} appears twice in {cycles:?}"
                    )));
                }
                images[a - 1] = b - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `(12)(34)(56)` or `(1 2)(10 11)`.
    /// Single-digit labels may be run together when no spaces are used.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        for chunk in text.split(')') {
            let body = chunk.trim().trim_start_matches('(').trim();
            if body.is_empty() {
                continue;
            }
            let labels: Result<Vec<usize>> = if body.contains([' ', ',']) {
                body.split([' ', ','])
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse().map_err(|_| Error::Parse(text.to_string())))
                    .collect()
            } else {
                body.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| Error::Parse(text.to_string()))
                    })
                    .collect()
            };
            cycles.push(labels?);
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Permutation::from_cycles(n, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, label: usize) -> usize {
        self.images[label - 1] + 1
    }

    /// Line notation with 1-based labels.
    pub fn line(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `p_i = σ^{-1}(i)`: the 1-based position of label `i` in line notation.
    pub fn positions(&self) -> Vec<usize> {
        self.inverse().line()
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(Vec::len).collect())
            .expect("cycle lengths are positive")
    }

    /// Action on integer vectors by moving coordinates: `(g·v)_{g(i)} = v_i`.
    pub fn act_on_vector<T: Clone + Default>(&self, v: &[T]) -> Vec<T> {
        let mut out = vec![T::default(); v.len()];
        for (i, x) in v.iter().enumerate() {
            out[self.images[i]] = x.clone();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<Vec<usize>> =
            self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return f.write_str("()");
        }
        let sep = if self.degree() > 9 { " " } else { "" };
        for c in nontrivial {
            let labels: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", labels.join(sep))?;
        }
        Ok(())
    }
}

/// Generated subgroup by breadth-first closure under right multiplication
/// by generators. Output is sorted.
pub fn subgroup_closure(generators: &[Permutation], limit: usize) -> Result<Vec<Permutation>> {
    let n = match generators.first() {
        Some(g) => g.degree(),
        None => return Ok(vec![]),
    };
    if let Some(g) = generators.iter().find(|g| g.degree() != n) {
        return Err(Error::InvalidPermutation(format!(
            "generator {g} has degree {} not {n}",
            g.degree()
        )));
    }
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in generators {
            let q = p.compose(g);
            if !seen.contains(&q) {
                if seen.len() >= limit {
                    return Err(Error::ClosureLimit { limit });
                }
                seen.insert(q.clone());
                queue.push_back(q);
            }
        }
    }
    let mut out: Vec<Permutation> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

pub fn symmetric_group(n: usize) -> Vec<Permutation> {
    if n <= 1 {
        return vec![Permutation::identity(n)];
    }
    let mut gens = vec![Permutation::from_cycles(n, &[&[1, 2]]).unwrap()];
    let long: Vec<usize> = (1..=n).collect();
    gens.push(Permutation::from_cycles(n, &[&long]).unwrap());
    subgroup_closure(&gens, DEFAULT_CLOSURE_LIMIT).expect("S_n within the default limit")
}

/// Generators of `Wr(S_k, S_m)` acting on `k·m` letters in consecutive blocks
/// of size `k`: adjacent transpositions inside each block plus the swaps of
/// neighbouring blocks. For `k = 2, m = 3` these are
/// `(12), (34), (56), (13)(24), (35)(46)`.
pub fn wreath_generators(k: usize, m: usize) -> Vec<Permutation> {
    let n = k * m;
    let mut gens = Vec::new();
    for b in 0..m {
        for i in 1..k {
            let a = b * k + i;
            gens.push(Permutation::from_cycles(n, &[&[a, a + 1]]).unwrap());
        }
    }
    for b in 0..m.saturating_sub(1) {
        let swaps: Vec<[usize; 2]> = (1..=k).map(|i| [b * k + i, (b + 1) * k + i]).collect();
        let refs: Vec<&[usize]> = swaps.iter().map(|s| s.as_slice()).collect();
        gens.push(Permutation::from_cycles(n, &refs).unwrap());
    }
    gens
}

pub fn wreath_product(k: usize, m: usize) -> Vec<Permutation> {
    subgroup_closure(&wreath_generators(k, m), DEFAULT_CLOSURE_LIMIT)
        .expect("wreath products used here are small")
}

/// A perfect matching of `1..=n`, stored canonically: each pair ascending,
/// pairs sorted by their first element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Pairing {
    blocks: Vec<(usize, usize)>,
}

impl Pairing {
    pub fn new(pairs: &[(usize, usize)]) -> Result<Self> {
        let n = pairs.len() * 2;
        let mut seen = vec![false; n];
        for &(a, b) in pairs {
            for v in [a, b] {
                if !(1..=n).contains(&v) || std::mem::replace(&mut seen[v - 1], true) {
                    return Err(Error::InvalidPairing(format!("{pairs:?}")));
                }
            }
        }
        let mut blocks: Vec<(usize, usize)> =
            pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        blocks.sort();
        Ok(Pairing { blocks })
    }

    /// Parses `"12,34,56"` (single-digit labels) or `"1-2,3-4"`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::InvalidPairing(text.to_string());
        let pairs: Result<Vec<(usize, usize)>> = text
            .split(',')
            .map(|p| {
                let p = p.trim();
                let (a, b) = if let Some((a, b)) = p.split_once('-') {
                    (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?)
                } else {
                    let digits: Vec<usize> = p
                        .chars()
                        .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                        .collect::<Result<_>>()?;
                    if digits.len() != 2 {
                        return Err(bad());
                    }
                    (digits[0], digits[1])
                };
                Ok((a, b))
            })
            .collect();
        Pairing::new(&pairs?)
    }

    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    pub fn degree(&self) -> usize {
        self.blocks.len() * 2
    }

    pub fn apply(&self, g: &Permutation) -> Pairing {
        let pairs: Vec<(usize, usize)> = self
            .blocks
            .iter()
            .map(|&(a, b)| (g.apply(a), g.apply(b)))
            .collect();
        Pairing::new(&pairs).expect("image of a pairing is a pairing")
    }

    /// All `(n-1)!!` pairings of `1..=n`, sorted.
    pub fn all(n: usize) -> Vec<Pairing> {
        fn rec(rest: &mut Vec<usize>, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Pairing>) {
            if rest.is_empty() {
                out.push(Pairing::new(acc).unwrap());
                return;
            }
            let a = rest.remove(0);
            for i in 0..rest.len() {
                let b = rest.remove(i);
                acc.push((a, b));
                rec(rest, acc, out);
                acc.pop();
                rest.insert(i, b);
            }
            rest.insert(0, a);
        }
        let mut out = Vec::new();
        rec(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.degree() > 9;
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|(a, b)| {
                if wide {
                    format!("{a}-{b}")
                } else {
                    format!("{a}{b}")
                }
            })
            .collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedOrbitElement {
    pub pairing: Pairing,
    pub sign: i8,
}

/// Orbit of `start` under `group`. `sign_rule(g, image)` reports the sign
/// `g` induces, relative to the canonical representative of `image`; the
/// sign recorded for each orbit element is the one from the first group
/// element (in the group's order) that reaches it.
pub fn orbit_pairings_up_to_sign<F>(
    start: &Pairing,
    group: &[Permutation],
    mut sign_rule: F,
) -> Vec<SignedOrbitElement>
where
    F: FnMut(&Permutation, &Pairing) -> i8,
{
    let mut found: BTreeMap<Pairing, i8> = BTreeMap::new();
    for g in group {
        let image = start.apply(g);
        if let Entry::Vacant(e) = found.entry(image) {
            let s = sign_rule(g, e.key());
            e.insert(s);
        }
    }
    found
        .into_iter()
        .map(|(pairing, sign)| SignedOrbitElement { pairing, sign })
        .collect()
}

pub fn pairing_stabilizer(start: &Pairing, group: &[Permutation]) -> Vec<Permutation> {
    group
        .iter()
        .filter(|g| &start.apply(g) == start)
        .cloned()
        .collect()
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl Partition {
    /// Sorts the parts into weakly decreasing order; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse(format!("zero part in {parts:?}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// All partitions of `n`, in reverse lexicographic order starting at `(n)`.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(acc.clone()));
                return;
            }
            for part in (1..=n.min(max)).rev() {
                acc.push(part);
                rec(n - part, part, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// A permutation of this cycle type with consecutive cycles
    /// `(1 … μ₁)(μ₁+1 …)…`.
    pub fn representative(&self) -> Permutation {
        let n = self.size();
        let mut cycles = Vec::new();
        let mut next = 1;
        for &len in &self.0 {
            cycles.push((next..next + len).collect::<Vec<usize>>());
            next += len;
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Permutation::from_cycles(n, &refs).unwrap()
    }

    /// Order of the centralizer, `∏ i^{m_i} m_i!`.
    pub fn centralizer_order(&self) -> u128 {
        let mut mult: BTreeMap<usize, u32> = BTreeMap::new();
        for &p in &self.0 {
            *mult.entry(p).or_default() += 1;
        }
        mult.iter()
            .map(|(&i, &m)| (i as u128).pow(m) * factorial(m as usize))
            .product()
    }

    pub fn class_size(&self) -> u128 {
        factorial(self.size()) / self.centralizer_order()
    }

    /// Dimension of the irreducible module via the hook-length formula.
    pub fn hook_length_dimension(&self) -> u128 {
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.0[j] - i - 1;
                hooks *= (arm + leg + 1) as u128;
            }
        }
        factorial(self.size()) / hooks
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (0..width)
                .map(|j| self.0.iter().filter(|&&r| r > j).count())
                .collect(),
        )
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Irreducible character `χ^λ` on the class of cycle type `μ`, by the
/// Murnaghan–Nakayama rule on beta-sets: removing a rim hook of length `r`
/// moves one bead from `b` to `b - r`, with sign `(-1)^{beads jumped over}`.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::PartitionSize(lambda.size(), mu.size()));
    }
    let k = lambda.0.len();
    let beta: BTreeSet<usize> = lambda
        .0
        .iter()
        .enumerate()
        .map(|(i, &part)| part + (k - 1 - i))
        .collect();
    let mut memo = HashMap::new();
    Ok(mn_rec(&beta, &mu.0, &mut memo))
}

fn mn_rec(
    beta: &BTreeSet<usize>,
    hooks: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), i64>,
) -> i64 {
    let Some((&r, rest)) = hooks.split_first() else {
        return 1;
    };
    let key = (beta.iter().copied().collect::<Vec<_>>(), hooks.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for &b in beta {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let jumped = beta.range(b - r + 1..b).count();
        let mut next = beta.clone();
        next.remove(&b);
        next.insert(b - r);
        let sign = if jumped.is_multiple_of(2) { 1 } else { -1 };
        total += sign * mn_rec(&next, rest, memo);
    }
    memo.insert(key, total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Permutation {
        Permutation::parse_cycles(6, text).unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn wreath_product_has_order_48() {
        let gens = vec![
            p("(12)"),
            p("(34)"),
            p("(56)"),
            p("(13)(24)"),
            p("(35)(46)"),
        ];
        assert_eq!(gens, wreath_generators(2, 3));
        assert_eq!(
            subgroup_closure(&gens, DEFAULT_CLOSURE_LIMIT)
                .unwrap()
                .len(),
            48
        );
    }

    #[test]
    fn trivial_and_cyclic_closures() {
        let id = Permutation::identity(6);
        assert_eq!(
            subgroup_closure(std::slice::from_ref(&id), 10).unwrap(),
            vec![id]
        );
        assert_eq!(subgroup_closure(&[p("(123456)")], 10).unwrap().len(), 6);
        assert!(matches!(
            subgroup_closure(&[p("(12)"), p("(123456)")], 100),
            Err(Error::ClosureLimit { limit: 100 })
        ));
    }

    #[test]
    fn cycle_types() {
        assert_eq!(p("(12)(34)(56)").cycle_type(), part(&[2, 2, 2]));
        assert_eq!(Permutation::identity(6).cycle_type(), part(&[1; 6]));
        assert_eq!(p("(123456)").cycle_type(), part(&[6]));
    }

    #[test]
    fn positions_of_line_permutation() {
        let s = Permutation::from_images(&[1, 6, 2, 4, 3, 5]).unwrap();
        let pos = s.positions();
        assert_eq!(
            (pos[0], pos[5], pos[1], pos[3], pos[2], pos[4]),
            (1, 2, 3, 4, 5, 6)
        );
        assert_eq!(Permutation::identity(4).positions(), vec![1, 2, 3, 4]);
        assert_eq!(s.compose(&s.inverse()).positions(), vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn invalid_permutations_are_rejected() {
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[&[1, 2], &[2, 3]]).is_err());
    }

    #[test]
    fn pairing_orbit_under_s6_has_15_elements() {
        let start = Pairing::parse("12,34,56").unwrap();
        let s6 = symmetric_group(6);
        assert_eq!(s6.len(), 720);
        let orbit = orbit_pairings_up_to_sign(&start, &s6, |_, _| 1);
        assert_eq!(orbit.len(), 15);
        assert_eq!(Pairing::all(6).len(), 15);
        let stab = pairing_stabilizer(&start, &s6);
        assert_eq!(orbit.len() * stab.len(), s6.len());
        let wr = wreath_product(2, 3);
        assert_eq!(orbit_pairings_up_to_sign(&start, &wr, |_, _| 1).len(), 1);
    }

    #[test]
    fn characters_of_s6() {
        assert_eq!(mn_character(&part(&[3, 3]), &part(&[1; 6])).unwrap(), 5);
        assert_eq!(mn_character(&part(&[3, 3]), &part(&[2, 2, 2])).unwrap(), -3);
        for mu in Partition::all(6) {
            assert_eq!(mn_character(&part(&[6]), &mu).unwrap(), 1);
            assert_eq!(
                mn_character(&part(&[1; 6]), &mu).unwrap(),
                mu_sign(&mu),
                "sign character on {mu}"
            );
        }
        assert!(mn_character(&part(&[3, 3]), &part(&[2, 2])).is_err());
    }

    fn mu_sign(mu: &Partition) -> i64 {
        let odd = mu.parts().iter().filter(|&&l| l % 2 == 0).count();
        if odd % 2 == 0 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn character_norms_and_dimensions() {
        for lambda in Partition::all(6) {
            let norm: i128 = Partition::all(6)
                .iter()
                .map(|mu| {
                    mu.class_size() as i128 * (mn_character(&lambda, mu).unwrap() as i128).pow(2)
                })
                .sum();
            assert_eq!(norm, 720, "norm of {lambda}");
            assert_eq!(
                mn_character(&lambda, &part(&[1; 6])).unwrap() as u128,
                lambda.hook_length_dimension()
            );
        }
        assert_eq!(Partition::all(6).len(), 11);
        let total: u128 = Partition::all(6).iter().map(Partition::class_size).sum();
        assert_eq!(total, 720);
    }

    #[test]
    fn display_round_trips() {
        let g = p("(13)(24)");
        assert_eq!(g.to_string(), "(13)(24)");
        assert_eq!(Pairing::parse("16,24,35").unwrap().to_string(), "16,24,35");
        let wide = Permutation::parse_cycles(12, "(10 11 12)").unwrap();
        assert_eq!(wide.to_string(), "(10 11 12)");
    }
}

//! Determinantal invariants of six points on the Veronese conic.
//!
//! `X_I` is the determinant of the three cross products `v(x_a) × v(x_b)`
//! over the blocks `(a, b)` of a pairing `I`, with `v(t) = (1, t, t²)`. It
//! factors as `g_I · C_I`. The permutation action on polynomials is
//! `(g·p)(x_1, …, x_n) = p(x_{g(1)}, …, x_{g(n)})`, i.e. `x_i ↦ x_{g(i)}`,
//! which makes `g ↦ (p ↦ g·p)` a left action.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::perm::{self, mn_character, Pairing, Partition, Permutation};
use crate::poly::{frac, int, ExponentVector, Polynomial, Rational};

const N: usize = 6;

/// The good pairings, in the order used for every ordered basis.
pub const GOOD_PAIRINGS: [&str; 5] = ["12,34,56", "16,23,45", "14,26,35", "15,24,36", "13,25,46"];

pub fn good_pairings() -> Vec<Pairing> {
    GOOD_PAIRINGS
        .iter()
        .map(|s| Pairing::parse(s).unwrap())
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Family {
    X,
    C,
    #[serde(rename = "g")]
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::X => "X",
            Family::C => "C",
            Family::G => "g",
        })
    }
}

/// `(1, x_i, x_i², …, x_i^d)`.
pub fn veronese(nvars: usize, label: usize, d: u32) -> Vec<Polynomial> {
    let x = Polynomial::var(nvars, label);
    (0..=d).map(|k| x.pow(k)).collect()
}

/// Determinant by Laplace expansion along the first row.
pub fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    assert!(
        n > 0 && m.iter().all(|r| r.len() == n),
        "square matrix required"
    );
    if n == 1 {
        return m[0][0].clone();
    }
    let nvars = m[0][0].nvars();
    let mut acc = Polynomial::zero(nvars);
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = entry * &determinant(&minor);
        acc = if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

fn columns_to_matrix(cols: &[Vec<Polynomial>]) -> Vec<Vec<Polynomial>> {
    let rows = cols[0].len();
    (0..rows)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect()
}

fn check_label(label: usize, n: usize) -> Result<()> {
    if label == 0 || label > n {
        return Err(Error::InvalidLabel { label, n });
    }
    Ok(())
}

/// `v(x_i) × v(x_j)` as the formal determinant with a row of unit vectors.
pub fn cross_product(nvars: usize, i: usize, j: usize) -> Result<[Polynomial; 3]> {
    check_label(i, nvars)?;
    check_label(j, nvars)?;
    if i == j {
        return Err(Error::InvalidLabel { label: i, n: nvars });
    }
    let a = veronese(nvars, i, 2);
    let b = veronese(nvars, j, 2);
    let component = |k: usize| {
        let rest: Vec<usize> = (0..3).filter(|&c| c != k).collect();
        let minor = vec![
            vec![a[rest[0]].clone(), a[rest[1]].clone()],
            vec![b[rest[0]].clone(), b[rest[1]].clone()],
        ];
        let d = determinant(&minor);
        if k == 1 {
            -d
        } else {
            d
        }
    };
    Ok([component(0), component(1), component(2)])
}

/// `((x_j−x_i) x_i x_j, −(x_j−x_i)(x_i+x_j), x_j−x_i)`.
pub fn cross_product_closed_form(nvars: usize, i: usize, j: usize) -> [Polynomial; 3] {
    let xi = Polynomial::var(nvars, i);
    let xj = Polynomial::var(nvars, j);
    let d = &xj - &xi;
    [&(&d * &xi) * &xj, -(&d * &(&xi + &xj)), d]
}

/// `Δ_{ijk} = det(v(x_i), v(x_j), v(x_k))`.
pub fn delta(nvars: usize, i: usize, j: usize, k: usize) -> Result<Polynomial> {
    for l in [i, j, k] {
        check_label(l, nvars)?;
    }
    let cols = [
        veronese(nvars, i, 2),
        veronese(nvars, j, 2),
        veronese(nvars, k, 2),
    ];
    Ok(determinant(&columns_to_matrix(&cols)))
}

fn check_six(p: &Pairing) -> Result<()> {
    if p.degree() != N {
        return Err(Error::InvalidPairing(format!(
            "{p} is not a pairing of 1..6"
        )));
    }
    Ok(())
}

pub fn build_x(p: &Pairing) -> Result<Polynomial> {
    check_six(p)?;
    let cols: Vec<Vec<Polynomial>> = p
        .blocks()
        .iter()
        .map(|&(a, b)| cross_product(N, a, b).map(|c| c.to_vec()))
        .collect::<Result<_>>()?;
    Ok(determinant(&columns_to_matrix(&cols)))
}

/// `g_I = ∏_{(a,b) ∈ I} (x_b − x_a)`.
pub fn build_g(p: &Pairing) -> Polynomial {
    let n = p.degree();
    p.blocks().iter().fold(Polynomial::one(n), |acc, &(a, b)| {
        &acc * &(&Polynomial::var(n, b) - &Polynomial::var(n, a))
    })
}

/// Elementary symmetric polynomial `e_k` of the given variables.
pub fn elementary_symmetric(nvars: usize, labels: &[usize], k: usize) -> Polynomial {
    let mut e = vec![Polynomial::zero(nvars); k + 1];
    e[0] = Polynomial::one(nvars);
    for &l in labels {
        let x = Polynomial::var(nvars, l);
        for d in (1..=k).rev() {
            e[d] = &e[d] + &(&e[d - 1] * &x);
        }
    }
    e.swap_remove(k)
}

/// Determinant whose column for block `B` is `(e_0(B), …, e_{m−1}(B))`,
/// `m` the number of blocks. The blocks must partition `1..=n` into
/// equal sizes.
pub fn build_c(blocks: &[Vec<usize>]) -> Result<Polynomial> {
    let m = blocks.len();
    if m == 0 {
        return Err(Error::InvalidBlocks("no blocks".into()));
    }
    let size = blocks[0].len();
    let n = m * size;
    let mut seen = BTreeSet::new();
    for b in blocks {
        if b.len() != size {
            return Err(Error::InvalidBlocks(format!(
                "unequal block sizes in {blocks:?}"
            )));
        }
        for &l in b {
            if l == 0 || l > n || !seen.insert(l) {
                return Err(Error::InvalidBlocks(format!(
                    "{blocks:?} is not a partition of 1..{n}"
                )));
            }
        }
    }
    if m > size + 1 {
        return Err(Error::InvalidBlocks(format!(
            "{m} blocks of size {size} give vanishing rows"
        )));
    }
    let cols: Vec<Vec<Polynomial>> = blocks
        .iter()
        .map(|b| (0..m).map(|k| elementary_symmetric(n, b, k)).collect())
        .collect();
    Ok(determinant(&columns_to_matrix(&cols)))
}

pub fn build_c_pairing(p: &Pairing) -> Polynomial {
    let blocks: Vec<Vec<usize>> = p.blocks().iter().map(|&(a, b)| vec![a, b]).collect();
    build_c(&blocks).expect("pairing blocks are valid")
}

pub fn family_polynomial(family: Family, p: &Pairing) -> Result<Polynomial> {
    check_six(p)?;
    Ok(match family {
        Family::X => build_x(p)?,
        Family::C => build_c_pairing(p),
        Family::G => build_g(p),
    })
}

/// `g·p`: substitutes `x_i ↦ x_{g(i)}`.
pub fn act(g: &Permutation, p: &Polynomial) -> Polynomial {
    p.rename_variables(&g.line())
        .expect("degree of the permutation matches the polynomial ring")
}

/// `Some(s)` when `g·F_start == s · F_image`, decided on polynomials.
pub fn sign_oracle(
    family: Family,
    g: &Permutation,
    start: &Pairing,
    image: &Pairing,
) -> Result<Option<i8>> {
    let moved = act(g, &family_polynomial(family, start)?);
    let target = family_polynomial(family, image)?;
    Ok(if moved == target {
        Some(1)
    } else if moved == -&target {
        Some(-1)
    } else {
        None
    })
}

/// Elements of `S_6` sending `F_p` to `±F_p`, by polynomial comparison.
pub fn polynomial_stabilizer(family: Family, p: &Pairing) -> Result<Vec<Permutation>> {
    let f = family_polynomial(family, p)?;
    let neg = -&f;
    Ok(perm::symmetric_group(N)
        .into_iter()
        .filter(|g| {
            let m = act(g, &f);
            m == f || m == neg
        })
        .collect())
}

/// Signed orbit of `F_start` under `group`; the sign comes from the
/// polynomial oracle and is `0` if the image is not `±F_image`.
pub fn signed_orbit(
    family: Family,
    start: &Pairing,
    group: &[Permutation],
) -> Result<Vec<perm::SignedOrbitElement>> {
    let f = family_polynomial(family, start)?;
    let mut cache: BTreeMap<Pairing, Polynomial> = BTreeMap::new();
    Ok(perm::orbit_pairings_up_to_sign(start, group, |g, image| {
        let target = cache
            .entry(image.clone())
            .or_insert_with(|| family_polynomial(family, image).unwrap());
        let moved = act(g, &f);
        if &moved == target {
            1
        } else if moved == -&*target {
            -1
        } else {
            0
        }
    }))
}

/// Rank of the coefficient matrix of the given polynomials.
pub fn span_dimension(polys: &[Polynomial]) -> usize {
    let (rows, _) = coefficient_rows(polys);
    linalg::rank(&rows)
}

fn coefficient_rows(polys: &[Polynomial]) -> (Matrix, Vec<ExponentVector>) {
    let monomials: Vec<ExponentVector> = polys
        .iter()
        .flat_map(|p| p.support())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let rows = polys
        .iter()
        .map(|p| monomials.iter().map(|m| p.coefficient(m)).collect())
        .collect();
    (rows, monomials)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BasisExpansion {
    #[serde(with = "crate::poly::rational_serde::vec")]
    pub coordinates: Vec<Rational>,
}

impl BasisExpansion {
    pub fn reconstruct(&self, basis: &[Polynomial]) -> Polynomial {
        let nvars = basis.first().map_or(0, Polynomial::nvars);
        basis
            .iter()
            .zip(&self.coordinates)
            .fold(Polynomial::zero(nvars), |acc, (b, c)| &acc + &b.scale(c))
    }
}

/// Exact coordinates of `p` in `basis` by fraction-free elimination on
/// monomial coefficients.
pub fn expand_in_basis(p: &Polynomial, basis: &[Polynomial]) -> Result<BasisExpansion> {
    if basis.is_empty() {
        return Err(Error::Empty("basis"));
    }
    let mut all = basis.to_vec();
    all.push(p.clone());
    let (rows, monomials) = coefficient_rows(&all);
    let a: Matrix = (0..monomials.len())
        .map(|m| rows[..basis.len()].iter().map(|r| r[m].clone()).collect())
        .collect();
    let b: Vec<Rational> = rows[basis.len()].clone();
    let residual = |e: &BasisExpansion| p - &e.reconstruct(basis);
    match linalg::solve(&a, &b) {
        Some(coordinates) => {
            let e = BasisExpansion { coordinates };
            let r = residual(&e);
            if r.is_zero() {
                Ok(e)
            } else {
                Err(Error::NotInSpan {
                    residual: r.to_text(),
                })
            }
        }
        None => {
            let least = BasisExpansion {
                coordinates: vec![Rational::zero(); basis.len()],
            };
            Err(Error::NotInSpan {
                residual: residual(&least).to_text(),
            })
        }
    }
}

/// A linear relation `F_lhs = Σ c · F_I`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearRelation {
    pub lhs: Pairing,
    pub terms: Vec<(i64, Pairing)>,
}

impl LinearRelation {
    fn from_table(lhs: &str, terms: &[(i64, &str)]) -> Self {
        LinearRelation {
            lhs: Pairing::parse(lhs).unwrap(),
            terms: terms
                .iter()
                .map(|&(c, s)| (c, Pairing::parse(s).unwrap()))
                .collect(),
        }
    }

    /// Same relation with the sign of the first right-hand term flipped.
    pub fn perturbed(&self) -> Self {
        let mut r = self.clone();
        r.terms[0].0 = -r.terms[0].0;
        r
    }

    pub fn display(&self, family: Family) -> String {
        let mut s = format!("{family}_{{{}}} =", self.lhs);
        for (k, (c, p)) in self.terms.iter().enumerate() {
            let sign = match (k, *c < 0) {
                (0, false) => " ",
                (0, true) => " -",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            let mag = c.abs();
            let coeff = if mag == 1 {
                String::new()
            } else {
                format!("{mag} ")
            };
            s.push_str(&format!("{sign}{coeff}{family}_{{{p}}}"));
        }
        s
    }
}

const X_RELATIONS: [(&str, [(i64, &str); 2]); 10] = [
    ("12,35,46", [(-1, "15,24,36"), (1, "16,23,45")]),
    ("12,36,45", [(1, "13,25,46"), (-1, "14,26,35")]),
    ("13,24,56", [(1, "14,26,35"), (1, "16,23,45")]),
    ("13,26,45", [(-1, "12,34,56"), (-1, "15,24,36")]),
    ("14,23,56", [(-1, "13,25,46"), (-1, "15,24,36")]),
    ("14,25,36", [(-1, "12,34,56"), (-1, "16,23,45")]),
    ("15,23,46", [(1, "12,34,56"), (-1, "14,26,35")]),
    ("15,26,34", [(1, "13,25,46"), (1, "16,23,45")]),
    ("16,24,35", [(1, "12,34,56"), (-1, "13,25,46")]),
    ("16,25,34", [(-1, "14,26,35"), (-1, "15,24,36")]),
];

const C_RELATIONS: [(&str, [(i64, &str); 2]); 9] = [
    ("12,35,46", [(1, "15,24,36"), (-1, "16,23,45")]),
    ("12,36,45", [(1, "13,25,46"), (-1, "14,26,35")]),
    ("13,26,45", [(1, "12,34,56"), (1, "15,24,36")]),
    ("14,23,56", [(-1, "13,25,46"), (-1, "15,24,36")]),
    ("14,25,36", [(1, "12,34,56"), (1, "16,23,45")]),
    ("15,23,46", [(1, "14,26,35"), (-1, "12,34,56")]),
    ("15,26,34", [(-1, "13,25,46"), (-1, "16,23,45")]),
    ("16,24,35", [(1, "13,25,46"), (-1, "12,34,56")]),
    ("16,25,34", [(-1, "14,26,35"), (-1, "15,24,36")]),
];

/// The tabulated relations expressing the non-good pairings in the good
/// basis: ten for `X`, nine for `C`. None are tabulated for `g`.
pub fn relation_table(family: Family) -> Vec<LinearRelation> {
    let table: &[(&str, [(i64, &str); 2])] = match family {
        Family::X => &X_RELATIONS,
        Family::C => &C_RELATIONS,
        Family::G => &[],
    };
    table
        .iter()
        .map(|(lhs, terms)| LinearRelation::from_table(lhs, terms))
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
    /// Serialized nonzero difference when the identity fails.
    pub witness: Option<String>,
}

impl IdentityCheck {
    pub fn from_difference(name: impl Into<String>, difference: &Polynomial) -> Self {
        IdentityCheck {
            name: name.into(),
            holds: difference.is_zero(),
            witness: (!difference.is_zero()).then(|| difference.to_text()),
        }
    }
}

pub fn check_relation(family: Family, rel: &LinearRelation) -> Result<IdentityCheck> {
    let lhs = family_polynomial(family, &rel.lhs)?;
    let mut rhs = Polynomial::zero(N);
    for (c, p) in &rel.terms {
        rhs = &rhs + &family_polynomial(family, p)?.scale(&int(*c));
    }
    Ok(IdentityCheck::from_difference(
        rel.display(family),
        &(&lhs - &rhs),
    ))
}

pub fn verify_linear_relations(family: Family) -> Result<Vec<IdentityCheck>> {
    relation_table(family)
        .iter()
        .map(|r| check_relation(family, r))
        .collect()
}

/// `Δ_{abc}Δ_{ijk} = Δ_{ajc}Δ_{ibk} − Δ_{aic}Δ_{jbk} − Δ_{aij}Δ_{bck}
///  − Δ_{ajb}Δ_{ick} + Δ_{aib}Δ_{jck}`.
pub fn straightening_difference(idx: [usize; 6]) -> Result<Polynomial> {
    let distinct: BTreeSet<usize> = idx.iter().copied().collect();
    if distinct.len() != 6 {
        return Err(Error::InvalidLabel {
            label: idx
                .iter()
                .find(|&&v| idx.iter().filter(|&&w| w == v).count() > 1)
                .copied()
                .unwrap(),
            n: N,
        });
    }
    let [a, b, c, i, j, k] = idx;
    let d = |p: usize, q: usize, r: usize| delta(N, p, q, r);
    let dd = |x: (usize, usize, usize), y: (usize, usize, usize)| -> Result<Polynomial> {
        Ok(&d(x.0, x.1, x.2)? * &d(y.0, y.1, y.2)?)
    };
    let lhs = dd((a, b, c), (i, j, k))?;
    let rhs = &(&(&(&dd((a, j, c), (i, b, k))? - &dd((a, i, c), (j, b, k))?)
        - &dd((a, i, j), (b, c, k))?)
        - &dd((a, j, b), (i, c, k))?)
        + &dd((a, i, b), (j, c, k))?;
    Ok(&lhs - &rhs)
}

pub fn verify_straightening(idx: [usize; 6]) -> Result<bool> {
    Ok(straightening_difference(idx)?.is_zero())
}

/// The ten unordered splits of `1..6` into two triples, first triple
/// containing 1, both ascending.
pub fn complementary_splits() -> Vec<[usize; 6]> {
    let mut out = Vec::new();
    for b in 2..=6 {
        for c in b + 1..=6 {
            let rest: Vec<usize> = (2..=6).filter(|&v| v != b && v != c).collect();
            out.push([1, b, c, rest[0], rest[1], rest[2]]);
        }
    }
    out
}

/// Order of the `X` coefficients in the tabulated Δ-product expansions.
pub const EXPANSION_ORDER: [&str; 5] = ["12,34,56", "13,25,46", "14,26,35", "15,24,36", "16,23,45"];

/// A tabulated expansion `Δ_{t1}Δ_{t2} = (num/den) Σ s_I X_I` with `s_I`
/// in [`EXPANSION_ORDER`].
#[derive(Clone, Debug)]
pub struct DeltaExpansion {
    pub first: [usize; 3],
    pub second: [usize; 3],
    pub scale: (i64, i64),
    pub signs: [i64; 5],
}

impl DeltaExpansion {
    pub fn name(&self) -> String {
        let t = |v: &[usize; 3]| v.iter().map(|d| d.to_string()).collect::<String>();
        format!("Delta_{}Delta_{}", t(&self.first), t(&self.second))
    }

    pub fn product(&self) -> Polynomial {
        let [a, b, c] = self.first;
        let [i, j, k] = self.second;
        &delta(N, a, b, c).unwrap() * &delta(N, i, j, k).unwrap()
    }

    pub fn coefficients(&self) -> Vec<Rational> {
        let s = frac(self.scale.0, self.scale.1);
        self.signs.iter().map(|&v| &s * int(v)).collect()
    }

    pub fn right_hand_side(&self) -> Polynomial {
        EXPANSION_ORDER
            .iter()
            .zip(self.coefficients())
            .fold(Polynomial::zero(N), |acc, (p, c)| {
                &acc + &build_x(&Pairing::parse(p).unwrap()).unwrap().scale(&c)
            })
    }
}

pub fn tabulated_delta_expansions() -> Vec<DeltaExpansion> {
    let e = |first, second, scale, signs| DeltaExpansion {
        first,
        second,
        scale,
        signs,
    };
    vec![
        e([1, 2, 3], [4, 5, 6], (-1, 2), [1, 1, -1, 1, -1]),
        e([1, 2, 4], [3, 5, 6], (1, 2), [1, -1, 1, -1, 1]),
        e([1, 2, 5], [3, 4, 6], (1, 2), [1, 1, -1, -1, 1]),
        e([1, 3, 4], [2, 5, 6], (1, 2), [1, 1, 1, 1, 1]),
        e([1, 3, 5], [2, 4, 6], (-1, 2), [1, -1, -1, -1, -1]),
    ]
}

pub struct DeltaExpansionCheck {
    pub name: String,
    pub tabulated: Vec<Rational>,
    pub computed: Vec<Rational>,
    pub check: IdentityCheck,
}

/// Expands each tabulated Δ-product in the `X` basis ordered as
/// [`EXPANSION_ORDER`] and compares with the tabulated coefficients.
pub fn verify_delta_expansions() -> Result<Vec<DeltaExpansionCheck>> {
    let basis: Vec<Polynomial> = EXPANSION_ORDER
        .iter()
        .map(|p| build_x(&Pairing::parse(p).unwrap()))
        .collect::<Result<_>>()?;
    tabulated_delta_expansions()
        .iter()
        .map(|e| {
            let product = e.product();
            let computed = expand_in_basis(&product, &basis)?.coordinates;
            let check =
                IdentityCheck::from_difference(e.name(), &(&product - &e.right_hand_side()));
            Ok(DeltaExpansionCheck {
                name: e.name(),
                tabulated: e.coefficients(),
                computed,
                check,
            })
        })
        .collect()
}

/// Ordered basis for a family: the good pairings for `X` and `C`. For `g`
/// the good pairings are used when independent, otherwise pairings are
/// taken greedily in sorted order until the span is reached.
pub fn family_basis(family: Family) -> Result<(Vec<Pairing>, Vec<Polynomial>)> {
    let good = good_pairings();
    let polys: Vec<Polynomial> = good
        .iter()
        .map(|p| family_polynomial(family, p))
        .collect::<Result<_>>()?;
    if span_dimension(&polys) == polys.len() || family != Family::G {
        return Ok((good, polys));
    }
    let all = Pairing::all(N);
    let all_polys: Vec<Polynomial> = all.iter().map(build_g).collect();
    let target = span_dimension(&all_polys);
    let mut chosen = (Vec::new(), Vec::new());
    for (p, f) in all.into_iter().zip(all_polys) {
        chosen.1.push(f);
        if span_dimension(&chosen.1) == chosen.1.len() {
            chosen.0.push(p);
        } else {
            chosen.1.pop();
        }
        if chosen.1.len() == target {
            break;
        }
    }
    Ok(chosen)
}

/// Matrix of `g` on the span of `basis`: column `j` holds the coordinates
/// of `g·basis[j]`.
pub fn representation_matrix_in(g: &Permutation, basis: &[Polynomial]) -> Result<Matrix> {
    let n = basis.len();
    let mut m = vec![vec![Rational::zero(); n]; n];
    for (j, b) in basis.iter().enumerate() {
        let coords = expand_in_basis(&act(g, b), basis)?.coordinates;
        for (i, c) in coords.into_iter().enumerate() {
            m[i][j] = c;
        }
    }
    Ok(m)
}

pub fn representation_matrix(g: &Permutation, family: Family) -> Result<Matrix> {
    let (_, basis) = family_basis(family)?;
    representation_matrix_in(g, &basis)
}

/// The tabulated matrix of `(12)(34)(56)` in the `C` basis.
pub fn tabulated_c_matrix() -> Matrix {
    let rows: [[i64; 5]; 5] = [
        [1, -1, 1, -1, 1],
        [0, -1, 0, 0, 0],
        [0, 0, -1, 0, 0],
        [0, 0, 0, -1, 0],
        [0, 0, 0, 0, -1],
    ];
    rows.iter()
        .map(|r| r.iter().map(|&v| int(v)).collect())
        .collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassTrace {
    pub cycle_type: Partition,
    pub representative: String,
    #[serde(with = "crate::poly::rational_serde")]
    pub trace: Rational,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IrrepIdentification {
    pub family: Family,
    pub partition: Partition,
    pub traces: Vec<ClassTrace>,
}

/// Traces of one representative per conjugacy class of `S_6`.
pub fn class_traces(
    basis: &[Polynomial],
    conjugator: Option<&Permutation>,
) -> Result<Vec<ClassTrace>> {
    Partition::all(N)
        .into_iter()
        .map(|mu| {
            let mut rep = mu.representative();
            if let Some(h) = conjugator {
                rep = h.compose(&rep).compose(&h.inverse());
            }
            let m = representation_matrix_in(&rep, basis)?;
            Ok(ClassTrace {
                cycle_type: mu,
                representative: rep.to_string(),
                trace: linalg::trace(&m),
            })
        })
        .collect()
}

/// Matches the class traces against every irreducible character of `S_6`.
pub fn identify_irrep(family: Family) -> Result<IrrepIdentification> {
    let (_, basis) = family_basis(family)?;
    let traces = class_traces(&basis, None)?;
    let matches: Vec<Partition> = Partition::all(N)
        .into_iter()
        .filter(|lambda| {
            traces.iter().all(|t| {
                mn_character(lambda, &t.cycle_type)
                    .map(|chi| int(chi) == t.trace)
                    .unwrap_or(false)
            })
        })
        .collect();
    match matches.as_slice() {
        [one] => Ok(IrrepIdentification {
            family,
            partition: one.clone(),
            traces,
        }),
        [] => Err(Error::IrrepMatch(format!(
            "no character matches the {family} traces"
        ))),
        many => Err(Error::IrrepMatch(format!(
            "{} characters match",
            many.len()
        ))),
    }
}

/// Fixed generic points for Jacobian rank certification.
pub fn jacobian_points() -> Vec<Vec<Rational>> {
    let pts: [[(i64, i64); 6]; 5] = [
        [(1, 1), (2, 1), (3, 1), (5, 1), (7, 1), (11, 1)],
        [(2, 1), (-3, 1), (5, 1), (-7, 1), (13, 1), (17, 1)],
        [(1, 2), (1, 3), (1, 5), (1, 7), (1, 11), (1, 13)],
        [(-4, 1), (9, 1), (1, 1), (6, 1), (-2, 1), (15, 1)],
        [(3, 7), (-5, 3), (8, 1), (2, 9), (11, 4), (-1, 6)],
    ];
    pts.iter()
        .map(|p| p.iter().map(|&(n, d)| frac(n, d)).collect())
        .collect()
}

/// Exact rank of the Jacobian of `map` at each point.
pub fn jacobian_ranks(map: &[Polynomial], points: &[Vec<Rational>]) -> Result<Vec<usize>> {
    if points.is_empty() {
        return Err(Error::Empty("point list"));
    }
    let nvars = map.first().map_or(0, Polynomial::nvars);
    let partials: Vec<Vec<Polynomial>> = map
        .iter()
        .map(|f| {
            (1..=nvars)
                .map(|l| f.differentiate(l))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    points
        .iter()
        .map(|pt| {
            let rows: Matrix = partials
                .iter()
                .map(|row| row.iter().map(|d| d.evaluate(pt)).collect::<Result<_>>())
                .collect::<Result<_>>()?;
            Ok(linalg::rank(&rows))
        })
        .collect()
}

/// Maximum exact rank of the Jacobian of `map` over `points`.
pub fn jacobian_rank(map: &[Polynomial], points: &[Vec<Rational>]) -> Result<usize> {
    Ok(jacobian_ranks(map, points)?.into_iter().max().unwrap_or(0))
}

/// The good-basis map of a family, as five polynomials.
pub fn good_map(family: Family) -> Result<Vec<Polynomial>> {
    good_pairings()
        .iter()
        .map(|p| family_polynomial(family, p))
        .collect()
}

/// The five Δ-products `d_1, …, d_5` of the quartic relation.
pub fn igusa_ds() -> Vec<Polynomial> {
    tabulated_delta_expansions()
        .iter()
        .map(DeltaExpansion::product)
        .collect()
}

/// `(d1(d1−d2+d3+d4−s·d5)+s·d2d5+d3d4)² − 4s·d2d3d4d5` over any ring,
/// with `s = ±1` the sign attached to `d5`.
fn igusa_form<T>(d: &[T], s: i64) -> T
where
    T: Clone + std::ops::Add<Output = T> + std::ops::Sub<Output = T> + std::ops::Mul<Output = T>,
    T: From<i64>,
{
    let d5 = T::from(s) * d[4].clone();
    let inner = d[0].clone() - d[1].clone() + d[2].clone() + d[3].clone() - d5.clone();
    let q = d[0].clone() * inner + d[1].clone() * d5.clone() + d[2].clone() * d[3].clone();
    q.clone() * q - T::from(4) * d[1].clone() * d[2].clone() * d[3].clone() * d5
}

#[derive(Clone)]
struct P(Polynomial);

impl From<i64> for P {
    fn from(v: i64) -> Self {
        P(Polynomial::constant(N, int(v)))
    }
}
impl std::ops::Add for P {
    type Output = P;
    fn add(self, o: P) -> P {
        P(&self.0 + &o.0)
    }
}
impl std::ops::Sub for P {
    type Output = P;
    fn sub(self, o: P) -> P {
        P(&self.0 - &o.0)
    }
}
impl std::ops::Mul for P {
    type Output = P;
    fn mul(self, o: P) -> P {
        if self.0.is_constant() {
            return P(o.0.scale(&self.0.coefficient(&ExponentVector::zero(N))));
        }
        P(&self.0 * &o.0)
    }
}

#[derive(Clone)]
struct Q(Rational);

impl From<i64> for Q {
    fn from(v: i64) -> Self {
        Q(int(v))
    }
}
impl std::ops::Add for Q {
    type Output = Q;
    fn add(self, o: Q) -> Q {
        Q(self.0 + o.0)
    }
}
impl std::ops::Sub for Q {
    type Output = Q;
    fn sub(self, o: Q) -> Q {
        Q(self.0 - o.0)
    }
}
impl std::ops::Mul for Q {
    type Output = Q;
    fn mul(self, o: Q) -> Q {
        Q(self.0 * o.0)
    }
}

/// Full expansion of the quartic relation in the Δ-products; zero when
/// the relation holds.
pub fn igusa_polynomial() -> Polynomial {
    let d: Vec<P> = igusa_ds().into_iter().map(P).collect();
    igusa_form(&d, 1).0
}

/// The quartic (or its `d5 ↦ −d5` variant) evaluated at a point.
pub fn igusa_value(point: &[Rational], d5_sign: i64) -> Result<Rational> {
    let d: Vec<Q> = igusa_ds()
        .iter()
        .map(|p| p.evaluate(point).map(Q))
        .collect::<Result<_>>()?;
    Ok(igusa_form(&d, d5_sign).0)
}

/// Signs of the cubic relation's twist on the good `C` basis.
pub const SEGRE_TWIST: [i64; 5] = [1, -1, 1, -1, 1];

fn segre_form<T>(f: &[T]) -> T
where
    T: Clone + std::ops::Add<Output = T> + std::ops::Sub<Output = T> + std::ops::Mul<Output = T>,
    T: From<i64>,
{
    let mut e1 = T::from(0);
    let mut e2 = T::from(0);
    let mut e3 = T::from(0);
    for v in f {
        e3 = e3 + e2.clone() * v.clone();
        e2 = e2 + e1.clone() * v.clone();
        e1 = e1 + v.clone();
    }
    T::from(5) * e1.clone() * e1.clone() * e1.clone() - T::from(18) * e1 * e2 + T::from(27) * e3
}

fn twisted_c(signs: &[i64; 5]) -> Vec<Polynomial> {
    good_pairings()
        .iter()
        .zip(signs)
        .map(|(p, &s)| build_c_pairing(p).scale(&int(s)))
        .collect()
}

/// `5σ₁³ − 18σ₁σ₂ + 27σ₃` of the sign-twisted `C` basis, expanded.
pub fn segre_polynomial(signs: &[i64; 5]) -> Polynomial {
    let f: Vec<P> = twisted_c(signs).into_iter().map(P).collect();
    segre_form(&f).0
}

pub fn segre_value(signs: &[i64; 5], point: &[Rational]) -> Result<Rational> {
    let f: Vec<Q> = twisted_c(signs)
        .iter()
        .map(|p| p.evaluate(point).map(Q))
        .collect::<Result<_>>()?;
    Ok(segre_form(&f).0)
}

/// Orbits of the good pairings under the cyclic group generated by
/// `(123456)`, each element with its sign relative to the orbit's starting
/// pairing. Fails if an orbit leaves the good set or a sign is undefined.
pub fn cyclic_good_orbits(family: Family) -> Result<Vec<Vec<perm::SignedOrbitElement>>> {
    let rot = Permutation::from_cycles(N, &[&[1, 2, 3, 4, 5, 6]])?;
    let group = perm::subgroup_closure(&[rot], perm::DEFAULT_CLOSURE_LIMIT)?;
    let good: BTreeSet<Pairing> = good_pairings().into_iter().collect();
    let mut covered = BTreeSet::new();
    let mut orbits = Vec::new();
    for start in good_pairings() {
        if covered.contains(&start) {
            continue;
        }
        let orbit = signed_orbit(family, &start, &group)?;
        for e in &orbit {
            if !good.contains(&e.pairing) || e.sign == 0 {
                return Err(Error::InvalidPairing(format!(
                    "{} leaves the good basis up to sign",
                    e.pairing
                )));
            }
            covered.insert(e.pairing.clone());
        }
        orbits.push(orbit);
    }
    Ok(orbits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairing(s: &str) -> Pairing {
        Pairing::parse(s).unwrap()
    }

    #[test]
    fn cross_product_matches_closed_form() {
        for (i, j) in [(1, 2), (2, 5), (6, 3)] {
            let formal = cross_product(N, i, j).unwrap();
            assert_eq!(formal, cross_product_closed_form(N, i, j));
            let swapped = cross_product(N, j, i).unwrap();
            for k in 0..3 {
                assert_eq!(formal[k], -&swapped[k]);
            }
            let v = veronese(N, i, 2);
            let dot = (0..3).fold(Polynomial::zero(N), |acc, k| &acc + &(&formal[k] * &v[k]));
            assert!(dot.is_zero());
        }
        assert!(cross_product(N, 3, 3).is_err());
    }

    #[test]
    fn x_factors_as_g_times_c() {
        for p in Pairing::all(N) {
            assert_eq!(
                build_x(&p).unwrap(),
                &build_g(&p) * &build_c_pairing(&p),
                "{p}"
            );
        }
    }

    #[test]
    fn c_matches_displayed_determinant() {
        let c = build_c_pairing(&pairing("12,34,56"));
        assert_eq!(c.len(), 12);
        assert_eq!(c.evaluate_i64(&[1, 2, 3, 4, 5, 6]).unwrap(), int(32));
    }

    #[test]
    fn x_sign_behaviour() {
        let p = pairing("12,34,56");
        let x = build_x(&p).unwrap();
        let swap = Permutation::from_cycles(N, &[&[1, 2]]).unwrap();
        assert_eq!(act(&swap, &x), -&x);
        // Exchanging two blocks exchanges two determinant columns.
        let blocks = Permutation::from_cycles(N, &[&[1, 3], &[2, 4]]).unwrap();
        assert_eq!(act(&blocks, &x), -&x);
        let both = swap.compose(&blocks);
        assert_eq!(act(&both, &x), x);
    }

    #[test]
    fn delta_is_vandermonde() {
        let d = delta(N, 1, 2, 3).unwrap();
        let x = |i| Polynomial::var(N, i);
        let v = &(&(&x(2) - &x(1)) * &(&x(3) - &x(1))) * &(&x(3) - &x(2));
        assert_eq!(d, v);
    }

    #[test]
    fn build_c_rejects_bad_blocks() {
        assert!(build_c(&[vec![1, 2], vec![3]]).is_err());
        assert!(build_c(&[vec![1, 2], vec![2, 3]]).is_err());
        assert!(build_c(&[vec![1], vec![2], vec![3]]).is_err());
    }

    #[test]
    fn all_tabulated_relations_hold() {
        for family in [Family::X, Family::C] {
            for c in verify_linear_relations(family).unwrap() {
                assert!(c.holds, "{}: {:?}", c.name, c.witness);
            }
        }
        assert_eq!(relation_table(Family::X).len(), 10);
        assert_eq!(relation_table(Family::C).len(), 9);
    }

    #[test]
    fn perturbed_relation_fails_with_witness() {
        let rel = relation_table(Family::X)[0].perturbed();
        let c = check_relation(Family::X, &rel).unwrap();
        assert!(!c.holds);
        assert!(c.witness.is_some());
    }

    #[test]
    fn straightening_on_all_splits() {
        assert_eq!(complementary_splits().len(), 10);
        for s in complementary_splits() {
            assert!(verify_straightening(s).unwrap(), "{s:?}");
        }
        assert!(verify_straightening([1, 2, 3, 4, 5, 5]).is_err());
    }

    #[test]
    fn delta_expansions_against_table() {
        let checks = verify_delta_expansions().unwrap();
        for c in &checks[..4] {
            assert!(c.check.holds, "{}", c.name);
            assert_eq!(c.computed, c.tabulated);
        }
        // The fifth tabulated line has the X_{15,24,36} sign reversed.
        let fifth = &checks[4];
        assert!(!fifth.check.holds);
        let half = frac(1, 2);
        assert_eq!(
            fifth.computed,
            vec![
                -half.clone(),
                half.clone(),
                half.clone(),
                -half.clone(),
                half
            ]
        );
    }

    #[test]
    fn basis_element_has_unit_coordinates() {
        let basis = good_map(Family::X).unwrap();
        let e = expand_in_basis(&basis[0], &basis).unwrap();
        assert_eq!(e.coordinates, vec![int(1), int(0), int(0), int(0), int(0)]);
        let outside = Polynomial::var(N, 1).pow(6);
        assert!(matches!(
            expand_in_basis(&outside, &basis),
            Err(Error::NotInSpan { .. })
        ));
    }

    #[test]
    fn spans_have_dimension_five() {
        for family in [Family::X, Family::C, Family::G] {
            let all: Vec<Polynomial> = Pairing::all(N)
                .iter()
                .map(|p| family_polynomial(family, p).unwrap())
                .collect();
            assert_eq!(span_dimension(&all), 5, "{family}");
        }
    }

    #[test]
    fn c_matrix_of_involution() {
        let g = Permutation::from_cycles(N, &[&[1, 2], &[3, 4], &[5, 6]]).unwrap();
        let m = representation_matrix(&g, Family::C).unwrap();
        assert_eq!(m, tabulated_c_matrix());
        assert_eq!(linalg::trace(&m), int(-3));
        let id = representation_matrix(&Permutation::identity(N), Family::C).unwrap();
        assert_eq!(id, linalg::identity(5));
    }

    #[test]
    fn irreps_are_identified() {
        let p33 = Partition::new(vec![3, 3]).unwrap();
        let p222 = Partition::new(vec![2, 2, 2]).unwrap();
        assert_eq!(identify_irrep(Family::C).unwrap().partition, p33);
        assert_eq!(identify_irrep(Family::G).unwrap().partition, p33);
        assert_eq!(identify_irrep(Family::X).unwrap().partition, p222);
    }

    #[test]
    fn stabilizer_is_the_wreath_product() {
        let p = pairing("12,34,56");
        let stab = polynomial_stabilizer(Family::X, &p).unwrap();
        assert_eq!(stab, perm::wreath_product(2, 3));
        let orbit = signed_orbit(Family::X, &p, &perm::symmetric_group(N)).unwrap();
        assert_eq!(orbit.len(), 15);
        assert!(orbit.iter().all(|e| e.sign == 1 || e.sign == -1));
    }

    #[test]
    fn jacobian_ranks() {
        let pts = jacobian_points();
        assert_eq!(
            jacobian_rank(&good_map(Family::X).unwrap(), &pts).unwrap(),
            4
        );
        assert_eq!(
            jacobian_rank(&good_map(Family::C).unwrap(), &pts).unwrap(),
            4
        );
        let proj: Vec<Polynomial> = (1..=5).map(|l| Polynomial::var(N, l)).collect();
        assert_eq!(jacobian_rank(&proj, &pts).unwrap(), 5);
        assert!(jacobian_rank(&proj, &[]).is_err());
    }

    #[test]
    fn quartic_smoke_and_control() {
        let pt: Vec<Rational> = (1..=6).map(int).collect();
        assert!(igusa_value(&pt, 1).unwrap().is_zero());
        let generic = &jacobian_points()[0];
        assert!(igusa_value(generic, 1).unwrap().is_zero());
        assert!(!igusa_value(generic, -1).unwrap().is_zero());
    }

    #[test]
    fn cubic_relation_and_control() {
        assert!(segre_polynomial(&SEGRE_TWIST).is_zero());
        let generic = &jacobian_points()[0];
        assert!(!segre_value(&[1; 5], generic).unwrap().is_zero());
    }

    #[test]
    fn cyclic_orbits_have_sizes_two_and_three() {
        for family in [Family::X, Family::C] {
            let mut sizes: Vec<usize> = cyclic_good_orbits(family)
                .unwrap()
                .iter()
                .map(Vec::len)
                .collect();
            sizes.sort();
            assert_eq!(sizes, vec![2, 3]);
        }
    }

    #[test]
    fn twelve_variable_c_is_nonzero() {
        let blocks = vec![
            vec![1, 2, 3],
            vec![4, 5, 6],
            vec![7, 8, 9],
            vec![10, 11, 12],
        ];
        let c = build_c(&blocks).unwrap();
        assert_eq!(c.nvars(), 12);
        assert_eq!(c.total_degree(), Some(6));
    }
}

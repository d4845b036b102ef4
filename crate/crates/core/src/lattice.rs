//! Orbit polytopes on integer points: Newton-polytope supports, root-edge
//! graphs, lumping maps, word-length growth of generated lattices and
//! lattice-point counts of dilations.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cone::{self, ConeH, Vector};
use crate::error::{Error, Result};
use crate::invariants::{build_c, build_c_pairing};
use crate::linalg;
use crate::perm::{symmetric_group, wreath_product, Pairing, Permutation};
use crate::poly::Polynomial;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LatticePointSet {
    pub dimension: usize,
    pub points: BTreeSet<Vector>,
}

impl LatticePointSet {
    pub fn new<I: IntoIterator<Item = Vector>>(dimension: usize, points: I) -> Result<Self> {
        let points: BTreeSet<Vector> = points.into_iter().collect();
        if let Some(p) = points.iter().find(|p| p.len() != dimension) {
            return Err(Error::DimensionMismatch {
                expected: dimension,
                got: p.len(),
            });
        }
        Ok(LatticePointSet { dimension, points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        self.points.contains(p)
    }

    /// All points at the same distance from the centroid. For an orbit of
    /// a coordinate-permuting group this always holds, so every orbit
    /// point is a vertex of the hull.
    pub fn on_common_sphere(&self) -> bool {
        let m = self.len() as i128;
        let sum: Vec<i128> = (0..self.dimension)
            .map(|i| self.points.iter().map(|p| p[i] as i128).sum())
            .collect();
        let norms: BTreeSet<i128> = self
            .points
            .iter()
            .map(|p| {
                p.iter()
                    .zip(&sum)
                    .map(|(&x, &s)| (m * x as i128 - s).pow(2))
                    .sum()
            })
            .collect();
        norms.len() <= 1
    }
}

/// `{g·start}` with `(g·v)_{g(i)} = v_i`.
pub fn orbit_points(start: &[i64], group: &[Permutation]) -> Result<LatticePointSet> {
    for g in group {
        if g.degree() != start.len() {
            return Err(Error::DimensionMismatch {
                expected: start.len(),
                got: g.degree(),
            });
        }
    }
    LatticePointSet::new(start.len(), group.iter().map(|g| g.act_on_vector(start)))
}

pub fn support_points(p: &Polynomial) -> LatticePointSet {
    LatticePointSet {
        dimension: p.nvars(),
        points: p.support().iter().map(|e| e.to_i64()).collect(),
    }
}

pub const C_VERTEX: [i64; 6] = [0, 0, 0, 1, 1, 1];
pub const WEIGHT_VERTEX: [i64; 6] = [0, 0, 1, 1, 2, 2];
pub const SL4_VERTEX: [i64; 12] = [0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 1];

/// `Wr(S₂,S₃)`-orbit of `(0,0,0,1,1,1)`.
pub fn c_polytope() -> LatticePointSet {
    orbit_points(&C_VERTEX, &wreath_product(2, 3)).expect("degree 6")
}

/// `S₆`-orbit of `(0,0,1,1,2,2)`.
pub fn weight_permutohedron() -> LatticePointSet {
    orbit_points(&WEIGHT_VERTEX, &symmetric_group(6)).expect("degree 6")
}

/// `Wr(S₃,S₄)`-orbit of `(0,0,0,0,0,1,0,1,1,1,1,1)`.
pub fn sl4_polytope() -> LatticePointSet {
    orbit_points(&SL4_VERTEX, &wreath_product(3, 4)).expect("degree 12")
}

pub fn consecutive_blocks(size: usize, count: usize) -> Vec<Vec<usize>> {
    (0..count)
        .map(|b| (b * size + 1..=(b + 1) * size).collect())
        .collect()
}

/// The determinant over four blocks of three on twelve variables.
pub fn sl4_candidate() -> Polynomial {
    build_c(&consecutive_blocks(3, 4)).expect("valid blocks")
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SupportCheck {
    pub case: String,
    pub support_size: usize,
    pub orbit_size: usize,
    pub equal: bool,
}

fn support_check(case: &str, p: &Polynomial, orbit: &LatticePointSet) -> SupportCheck {
    let support = support_points(p);
    SupportCheck {
        case: case.into(),
        support_size: support.len(),
        orbit_size: orbit.len(),
        equal: support == *orbit,
    }
}

/// `support(C_{12,34,56})` against the 12-point wreath orbit.
pub fn verify_support_equals_orbit() -> SupportCheck {
    let c = build_c_pairing(&Pairing::parse("12,34,56").expect("literal"));
    support_check("C_{12,34,56}", &c, &c_polytope())
}

pub fn verify_sl4_support() -> SupportCheck {
    support_check(
        "C over (123)(456)(789)(10 11 12)",
        &sl4_candidate(),
        &sl4_polytope(),
    )
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RootEdgeGraph {
    pub vertices: Vec<Vector>,
    pub edges: Vec<(usize, usize)>,
}

/// `Some((i, j))` (1-based) when `d = e_i − e_j`.
pub fn as_root(d: &[i64]) -> Option<(usize, usize)> {
    let mut plus = None;
    let mut minus = None;
    for (k, &x) in d.iter().enumerate() {
        match x {
            0 => {}
            1 if plus.is_none() => plus = Some(k + 1),
            -1 if minus.is_none() => minus = Some(k + 1),
            _ => return None,
        }
    }
    plus.zip(minus)
}

fn diff(a: &[i64], b: &[i64]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn root_edge_graph(pts: &LatticePointSet) -> RootEdgeGraph {
    let vertices: Vec<Vector> = pts.points.iter().cloned().collect();
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if as_root(&diff(&vertices[i], &vertices[j])).is_some() {
                edges.push((i, j));
            }
        }
    }
    RootEdgeGraph { vertices, edges }
}

impl RootEdgeGraph {
    pub fn index_of(&self, v: &[i64]) -> Option<usize> {
        self.vertices.binary_search_by(|p| p.as_slice().cmp(v)).ok()
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// `neighbor − v` for each edge at `v`, as root index pairs, sorted.
    pub fn edge_directions(&self, v: &[i64]) -> Option<Vec<(usize, usize)>> {
        let i = self.index_of(v)?;
        let mut dirs: Vec<(usize, usize)> = self
            .neighbors(i)
            .into_iter()
            .map(|j| as_root(&diff(&self.vertices[j], v)).expect("edges are roots"))
            .collect();
        dirs.sort();
        Some(dirs)
    }

    pub fn to_dot(&self) -> String {
        let label = |v: &Vector| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        let mut out = String::from("graph polytope {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  \"{}\";", label(v));
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(
                out,
                "  \"{}\" -- \"{}\";",
                label(&self.vertices[a]),
                label(&self.vertices[b])
            );
        }
        out.push_str("}\n");
        out
    }
}

pub fn affine_rank(points: &[&Vector]) -> usize {
    let Some((first, rest)) = points.split_first() else {
        return 0;
    };
    let rows: Vec<Vec<i64>> = rest.iter().map(|p| diff(p, first)).collect();
    linalg::rank_i64(&rows)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FourCycleReport {
    pub cycles: usize,
    pub chordless: usize,
    /// Affine rank → number of chordless 4-cycles.
    pub chordless_ranks: BTreeMap<usize, usize>,
    /// Affine rank → number of 4-cycles with a chord.
    pub chorded_ranks: BTreeMap<usize, usize>,
}

impl FourCycleReport {
    pub fn all_chordless_rank(&self, rank: usize) -> bool {
        self.chordless_ranks.keys().all(|&r| r == rank)
    }

    pub fn all_rank(&self, rank: usize) -> bool {
        self.all_chordless_rank(rank) && self.chorded_ranks.keys().all(|&r| r == rank)
    }
}

pub fn four_cycle_affine_rank(g: &RootEdgeGraph) -> FourCycleReport {
    let n = g.vertices.len();
    let adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|i| g.neighbors(i).into_iter().collect())
        .collect();
    // A 4-cycle a-b-c-d is fixed by its two diagonals {a,c} and {b,d}.
    let mut seen = BTreeSet::new();
    let mut report = FourCycleReport::default();
    for a in 0..n {
        for &b in &adj[a] {
            for &d in &adj[a] {
                if d <= b {
                    continue;
                }
                for &c in adj[b].intersection(&adj[d]) {
                    if c == a {
                        continue;
                    }
                    let d1 = (a.min(c), a.max(c));
                    let d2 = (b.min(d), b.max(d));
                    if !seen.insert((d1.min(d2), d1.max(d2))) {
                        continue;
                    }
                    report.cycles += 1;
                    let rank = affine_rank(&[
                        &g.vertices[a],
                        &g.vertices[b],
                        &g.vertices[c],
                        &g.vertices[d],
                    ]);
                    let chord = adj[a].contains(&c) || adj[b].contains(&d);
                    let bucket = if chord {
                        &mut report.chorded_ranks
                    } else {
                        report.chordless += 1;
                        &mut report.chordless_ranks
                    };
                    *bucket.entry(rank).or_default() += 1;
                }
            }
        }
    }
    report
}

/// Sums coordinates over each block (1-based labels). The blocks must
/// partition `1..=dimension`.
pub fn lumping_projection(pts: &LatticePointSet, blocks: &[Vec<usize>]) -> Result<LatticePointSet> {
    let mut seen = BTreeSet::new();
    for b in blocks {
        for &l in b {
            if l == 0 || l > pts.dimension || !seen.insert(l) {
                return Err(Error::InvalidBlocks(format!(
                    "{blocks:?} is not a partition of 1..{}",
                    pts.dimension
                )));
            }
        }
    }
    if seen.len() != pts.dimension {
        return Err(Error::InvalidBlocks(format!(
            "{blocks:?} does not cover 1..{}",
            pts.dimension
        )));
    }
    LatticePointSet::new(
        blocks.len(),
        pts.points.iter().map(|p| {
            blocks
                .iter()
                .map(|b| b.iter().map(|&l| p[l - 1]).sum())
                .collect()
        }),
    )
}

/// Lattice point of `B_{a,b}`: entries in `{0, 1}` summing to `a`.
pub fn hypersimplex_contains(point: &[i64], a: i64, b: i64) -> bool {
    point.len() as i64 == a + b
        && point.iter().all(|&x| x == 0 || x == 1)
        && point.iter().sum::<i64>() == a
}

/// All permutations of `0..n` as vectors.
pub fn permutohedron_vertices(n: usize) -> LatticePointSet {
    let base: Vector = (0..n as i64).collect();
    orbit_points(&base, &symmetric_group(n)).expect("degree n")
}

/// `±((d+1)e_i − 𝟙)` for `i = 1..d+1`: the diplo-simplex vertices scaled
/// into the sum-zero sublattice of `ℤ^{d+1}`.
pub fn diplo_simplex_generators(d: usize) -> Vec<Vector> {
    let n = d + 1;
    let mut out = Vec::with_capacity(2 * n);
    for i in 0..n {
        let v: Vector = (0..n).map(|j| if i == j { d as i64 } else { -1 }).collect();
        out.push(v.iter().map(|x| -x).collect());
        out.push(v);
    }
    out.sort();
    out
}

/// `(m·v − Σw) / g` over the points, `g` the content of all of them: the
/// points translated to the centroid and scaled to primitive integers.
/// For the 12-point C-polytope this is `2v − 𝟙`.
pub fn centered_generators(pts: &LatticePointSet) -> Vec<Vector> {
    let m = pts.len() as i64;
    let sum: Vec<i64> = (0..pts.dimension)
        .map(|i| pts.points.iter().map(|p| p[i]).sum())
        .collect();
    let raw: Vec<Vector> = pts
        .points
        .iter()
        .map(|p| p.iter().zip(&sum).map(|(&x, &s)| m * x - s).collect())
        .collect();
    let flat: Vec<i64> = raw.iter().flatten().copied().collect();
    let g = cone::content_reduce(&flat);
    let scale = flat
        .iter()
        .zip(&g)
        .find(|(_, r)| **r != 0)
        .map_or(1, |(f, r)| f / r);
    raw.into_iter()
        .map(|v| v.into_iter().map(|x| x / scale).collect())
        .collect()
}

/// Coefficients of `Σ s(k) t^k · (1 − t)^e` up to degree `K`, trailing
/// zeros trimmed.
pub fn fit_numerator(counts: &[i64], e: u32) -> Vec<i64> {
    let mut c = counts.to_vec();
    for _ in 0..e {
        for k in (1..c.len()).rev() {
            c[k] -= c[k - 1];
        }
    }
    while c.len() > 1 && c.last() == Some(&0) {
        c.pop();
    }
    c
}

/// Expands `N(t) / (1 − t)^e` to `len` coefficients.
pub fn expand_series(numerator: &[i64], e: u32, len: usize) -> Vec<i64> {
    let mut c: Vec<i64> = (0..len)
        .map(|k| numerator.get(k).copied().unwrap_or(0))
        .collect();
    for _ in 0..e {
        for k in 1..len {
            c[k] += c[k - 1];
        }
    }
    c
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SeriesFit {
    pub denominator_exponent: u32,
    pub numerator: Vec<i64>,
    /// The numerator's degree is below the last computed index, so at least
    /// one computed coefficient confirms the fit.
    pub confirmed: bool,
}

impl SeriesFit {
    pub fn new(counts: &[i64], e: u32) -> Self {
        let numerator = fit_numerator(counts, e);
        let confirmed = numerator.len() < counts.len();
        SeriesFit {
            denominator_exponent: e,
            numerator,
            confirmed,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GrowthSeries {
    pub rank: usize,
    pub counts: Vec<i64>,
    /// Fits against `(1−t)^rank` and `(1−t)^(rank+1)`.
    pub fitted_numerators: [SeriesFit; 2],
}

pub const MAX_GROWTH_DEPTH: usize = 10;

/// Word-length sphere sizes `s(0..=K)` in the lattice generated by the
/// generators and their negatives, by breadth-first search.
pub fn growth_series(generators: &[Vector], k_max: usize) -> Result<GrowthSeries> {
    if k_max > MAX_GROWTH_DEPTH {
        return Err(Error::SizeLimit(format!(
            "depth {k_max} exceeds {MAX_GROWTH_DEPTH}"
        )));
    }
    let dim = generators.first().map_or(0, Vec::len);
    if let Some(g) = generators.iter().find(|g| g.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: g.len(),
        });
    }
    let rank = linalg::rank_i64(generators);
    if rank == 0 {
        return Err(Error::RankZero);
    }
    let mut steps: BTreeSet<Vector> = BTreeSet::new();
    for g in generators {
        steps.insert(g.clone());
        steps.insert(g.iter().map(|x| -x).collect());
    }
    let zero = vec![0i64; dim];
    let mut seen: HashSet<Vector> = HashSet::from([zero.clone()]);
    let mut frontier = vec![zero];
    let mut counts = vec![1i64];
    for _ in 0..k_max {
        let mut next = Vec::new();
        for p in &frontier {
            for s in &steps {
                let q: Vector = p.iter().zip(s).map(|(a, b)| a + b).collect();
                if seen.insert(q.clone()) {
                    next.push(q);
                }
            }
        }
        counts.push(next.len() as i64);
        frontier = next;
    }
    let fits = [
        SeriesFit::new(&counts, rank as u32),
        SeriesFit::new(&counts, rank as u32 + 1),
    ];
    Ok(GrowthSeries {
        rank,
        counts,
        fitted_numerators: fits,
    })
}

/// Integer points of `k·conv(vertices)` for `k = 0..=k_max`. Facets come
/// from the double description of the dual of the homogenized cone.
pub fn dilation_counts(vertices: &[Vector], k_max: usize) -> Result<Vec<i64>> {
    let dim = vertices.first().map_or(0, Vec::len);
    if vertices.is_empty() {
        return Err(Error::Empty("vertex list"));
    }
    let lifted: Vec<Vector> = vertices
        .iter()
        .map(|v| {
            let mut w = v.clone();
            w.push(1);
            w
        })
        .collect();
    let dual = ConeH::new(dim + 1, lifted, vec![])?;
    let normals = cone::extreme_rays(&dual)?.rays;
    let lo: Vec<i64> = (0..dim)
        .map(|i| vertices.iter().map(|v| v[i]).min().unwrap())
        .collect();
    let hi: Vec<i64> = (0..dim)
        .map(|i| vertices.iter().map(|v| v[i]).max().unwrap())
        .collect();
    let mut counts = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max as i64 {
        let boxes: f64 = lo
            .iter()
            .zip(&hi)
            .map(|(a, b)| ((b - a) * k + 1) as f64)
            .product();
        if boxes > 5e7 {
            return Err(Error::SizeLimit(format!(
                "dilation {k} box has {boxes} points"
            )));
        }
        let mut point = vec![0i64; dim + 1];
        point[dim] = k;
        let mut count = 0i64;
        count_box(&normals, &lo, &hi, k, 0, &mut point, &mut count);
        counts.push(count);
    }
    Ok(counts)
}

fn count_box(
    normals: &[Vector],
    lo: &[i64],
    hi: &[i64],
    k: i64,
    i: usize,
    point: &mut Vector,
    count: &mut i64,
) {
    if i == lo.len() {
        if normals
            .iter()
            .all(|a| a.iter().zip(point.iter()).map(|(x, y)| x * y).sum::<i64>() >= 0)
        {
            *count += 1;
        }
        return;
    }
    for x in lo[i] * k..=hi[i] * k {
        point[i] = x;
        count_box(normals, lo, hi, k, i + 1, point, count);
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GrowthComparison {
    pub depth: usize,
    pub c_polytope: GrowthSeries,
    pub diplo_simplex: GrowthSeries,
    pub sequences_coincide: bool,
    pub dilation_counts: Vec<i64>,
    /// Fits of the dilation counts against `(1−t)^d` and `(1−t)^(d+1)`,
    /// `d` the polytope dimension.
    pub dilation_fits: [SeriesFit; 2],
    pub target: Vec<i64>,
    /// Every convention whose fitted numerator equals the target.
    pub conventions_matching_target: Vec<String>,
    pub discrepancies: Vec<String>,
}

pub const GROWTH_TARGET: [i64; 5] = [1, 6, 16, 6, 1];

/// Word-length growth for the centered C-polytope vertices against the
/// `d = 5` diplo-simplex, plus dilation counts of the C-polytope, each
/// fitted under both denominator conventions.
pub fn growth_comparison(depth: usize, dilation_depth: usize) -> Result<GrowthComparison> {
    let c = c_polytope();
    let c_series = growth_series(&centered_generators(&c), depth)?;
    let d_series = growth_series(&diplo_simplex_generators(5), depth)?;
    let coincide = c_series.counts == d_series.counts;
    let dilation = dilation_counts(
        &c.points.iter().cloned().collect::<Vec<_>>(),
        dilation_depth,
    )?;
    let poly_dim = c_series.rank as u32;
    let dilation_fits = [
        SeriesFit::new(&dilation, poly_dim),
        SeriesFit::new(&dilation, poly_dim + 1),
    ];
    let target = GROWTH_TARGET.to_vec();
    let mut matching = Vec::new();
    let mut discrepancies = Vec::new();
    let mut judge = |label: &str, fit: &SeriesFit| {
        let name = format!("{label} / (1-t)^{}", fit.denominator_exponent);
        if fit.confirmed && fit.numerator == target {
            matching.push(name);
        } else {
            discrepancies.push(format!("{name}: numerator {:?}", fit.numerator));
        }
    };
    for fit in &c_series.fitted_numerators {
        judge("word-length growth", fit);
    }
    for fit in &dilation_fits {
        judge("dilation counts", fit);
    }
    if !coincide {
        discrepancies.push(format!(
            "sequences differ: {:?} vs {:?}",
            c_series.counts, d_series.counts
        ));
    }
    Ok(GrowthComparison {
        depth,
        c_polytope: c_series,
        diplo_simplex: d_series,
        sequences_coincide: coincide,
        dilation_counts: dilation,
        dilation_fits,
        target,
        conventions_matching_target: matching,
        discrepancies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_sizes() {
        let c = c_polytope();
        assert_eq!(c.len(), 12);
        assert!(c.on_common_sphere());
        assert_eq!(weight_permutohedron().len(), 90);
        assert!(c.points.iter().all(|p| hypersimplex_contains(p, 3, 3)));
    }

    #[test]
    fn c_support_is_the_orbit() {
        let check = verify_support_equals_orbit();
        assert!(check.equal, "{check:?}");
        let wrong = orbit_points(&[0, 0, 0, 0, 1, 2], &wreath_product(2, 3)).unwrap();
        let c = build_c_pairing(&Pairing::parse("12,34,56").unwrap());
        assert_ne!(support_points(&c), wrong);
    }

    #[test]
    fn c_edge_directions() {
        let g = root_edge_graph(&c_polytope());
        let dirs = g.edge_directions(&C_VERTEX).unwrap();
        assert_eq!(dirs, vec![(1, 4), (2, 4), (3, 4), (3, 5), (3, 6)]);
        let single = root_edge_graph(&LatticePointSet::new(2, [vec![0, 1]]).unwrap());
        assert!(single.edges.is_empty());
    }

    #[test]
    fn weight_neighbors() {
        let g = root_edge_graph(&weight_permutohedron());
        let dirs = g.edge_directions(&WEIGHT_VERTEX).unwrap();
        assert_eq!(dirs, cone::PLATE_ROOTS.to_vec());
    }

    #[test]
    fn c_squares_are_tetrahedra() {
        let r = four_cycle_affine_rank(&root_edge_graph(&c_polytope()));
        // Every square's diagonals are root edges too: the 4-cycles are K4s.
        assert_eq!((r.cycles, r.chordless), (42, 0));
        assert!(r.all_rank(3), "{r:?}");
    }

    #[test]
    fn flat_square_and_triangle() {
        let e = |v: [i64; 6]| v.to_vec();
        let square = LatticePointSet::new(
            6,
            [
                e([0; 6]),
                e([1, -1, 0, 0, 0, 0]),
                e([1, -1, 1, -1, 0, 0]),
                e([0, 0, 1, -1, 0, 0]),
            ],
        )
        .unwrap();
        let r = four_cycle_affine_rank(&root_edge_graph(&square));
        assert_eq!(r.chordless_ranks, BTreeMap::from([(2, 1)]));
        let tri = LatticePointSet::new(3, [vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(
            four_cycle_affine_rank(&root_edge_graph(&tri)),
            FourCycleReport::default()
        );
    }

    #[test]
    fn lumping() {
        let c = c_polytope();
        let pairs = consecutive_blocks(2, 3);
        assert_eq!(
            lumping_projection(&c, &pairs).unwrap(),
            permutohedron_vertices(3)
        );
        let singletons = consecutive_blocks(1, 6);
        assert_eq!(lumping_projection(&c, &singletons).unwrap(), c);
        assert!(lumping_projection(&c, &[vec![1, 2], vec![2, 3]]).is_err());
    }

    #[test]
    fn hypersimplex() {
        assert!(hypersimplex_contains(&SL4_VERTEX, 6, 6));
        assert!(!hypersimplex_contains(&[2, 0, 0, 1, 0, 0], 3, 3));
    }

    #[test]
    fn diplo_generators() {
        let g = diplo_simplex_generators(2);
        assert_eq!(g.len(), 6);
        assert!(g.iter().all(|v| v.iter().sum::<i64>() == 0));
        assert_eq!(diplo_simplex_generators(5).len(), 12);
    }

    #[test]
    fn hexagonal_coordination() {
        let s = growth_series(&diplo_simplex_generators(2), 6).unwrap();
        assert_eq!(s.rank, 2);
        assert_eq!(s.counts, vec![1, 6, 12, 18, 24, 30, 36]);
        assert_eq!(s.fitted_numerators[0].numerator, vec![1, 4, 1]);
        assert!(growth_series(&[vec![0, 0]], 3).is_err());
    }

    #[test]
    fn centered_c_vertices() {
        let g = centered_generators(&c_polytope());
        assert!(g.contains(&vec![-1, -1, -1, 1, 1, 1]));
        assert!(g.iter().all(|v| v.iter().all(|x| x.abs() == 1)));
    }

    #[test]
    fn series_round_trip() {
        let counts = vec![1, 12, 73, 284, 835, 2036];
        let fit = fit_numerator(&counts, 6);
        assert_eq!(fit, vec![1, 6, 16, 6, 1]);
        assert_eq!(expand_series(&fit, 6, counts.len()), counts);
    }

    #[test]
    fn unit_square_dilations() {
        let sq = vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]];
        assert_eq!(dilation_counts(&sq, 3).unwrap(), vec![1, 4, 9, 16]);
    }

    #[test]
    fn dot_output() {
        let g = root_edge_graph(&permutohedron_vertices(3));
        let dot = g.to_dot();
        assert!(dot.starts_with("graph polytope {"));
        assert_eq!(dot.matches(" -- ").count(), g.edges.len());
    }
}

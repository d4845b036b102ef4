//! Polyhedral cones in exact integer arithmetic.
//!
//! `extreme_rays` is the double description method: start from the whole
//! space (all of it lineality), cut by one constraint at a time, and keep
//! a ray pair's combination only when the pair is adjacent, decided by the
//! rank of the constraints active on both. Cone membership for the reverse
//! inclusion uses Fourier–Motzkin elimination, which shares no code with
//! the double description.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::Rational;

pub const MAX_DIMENSION: usize = 8;
pub const MAX_INEQUALITIES: usize = 16;

pub type Vector = Vec<i64>;

/// `{x : a·x ≥ 0 for a in ineq, a·x = 0 for a in eq}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ConeH {
    #[serde(default)]
    pub dimension: usize,
    #[serde(default)]
    pub ineq: Vec<Vector>,
    #[serde(default)]
    pub eq: Vec<Vector>,
}

/// Conical hull of `rays`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ConeV {
    #[serde(default)]
    pub dimension: usize,
    pub rays: Vec<Vector>,
}

pub fn content_reduce(v: &[i64]) -> Vector {
    let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g <= 1 {
        v.to_vec()
    } else {
        v.iter().map(|&x| x / g).collect()
    }
}

fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

fn check_rows(rows: &[Vector], dimension: usize) -> Result<()> {
    for r in rows {
        if r.len() != dimension {
            return Err(Error::DimensionMismatch {
                expected: dimension,
                got: r.len(),
            });
        }
    }
    Ok(())
}

impl ConeH {
    pub fn new(dimension: usize, ineq: Vec<Vector>, eq: Vec<Vector>) -> Result<Self> {
        check_rows(&ineq, dimension)?;
        check_rows(&eq, dimension)?;
        let reduce = |rows: Vec<Vector>| -> Vec<Vector> {
            rows.into_iter()
                .filter(|r| r.iter().any(|&x| x != 0))
                .map(|r| content_reduce(&r))
                .collect()
        };
        Ok(ConeH {
            dimension,
            ineq: reduce(ineq),
            eq: reduce(eq),
        })
    }

    /// Parses `{"ineq": [...], "eq": [...]}`; the dimension is taken from
    /// the rows when not given.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: ConeH = serde_json::from_str(text)?;
        let dim = if raw.dimension > 0 {
            raw.dimension
        } else {
            raw.ineq
                .iter()
                .chain(&raw.eq)
                .map(Vec::len)
                .next()
                .unwrap_or(0)
        };
        ConeH::new(dim, raw.ineq, raw.eq)
    }

    pub fn contains(&self, v: &[i64]) -> Result<bool> {
        if v.len() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                got: v.len(),
            });
        }
        Ok(self.ineq.iter().all(|a| dot(a, v) >= 0) && self.eq.iter().all(|a| dot(a, v) == 0))
    }

    pub fn without_inequality(&self, idx: usize) -> Result<ConeH> {
        if idx >= self.ineq.len() {
            return Err(Error::IndexOutOfRange {
                index: idx,
                len: self.ineq.len(),
            });
        }
        let mut c = self.clone();
        c.ineq.remove(idx);
        Ok(c)
    }
}

impl ConeV {
    pub fn new(dimension: usize, rays: Vec<Vector>) -> Result<Self> {
        check_rows(&rays, dimension)?;
        let mut set: BTreeSet<Vector> = BTreeSet::new();
        for r in rays {
            if r.iter().any(|&x| x != 0) {
                set.insert(content_reduce(&r));
            }
        }
        Ok(ConeV {
            dimension,
            rays: set.into_iter().collect(),
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: ConeV = serde_json::from_str(text)?;
        let dim = if raw.dimension > 0 {
            raw.dimension
        } else {
            raw.rays.first().map_or(0, Vec::len)
        };
        ConeV::new(dim, raw.rays)
    }
}

fn to_i64(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::SizeLimit("ray coordinate overflow".into()))
}

/// `p·u − q·w`, content-reduced.
fn combine(p: i128, u: &[i64], q: i128, w: &[i64]) -> Result<Vector> {
    let v: Vec<i64> = u
        .iter()
        .zip(w)
        .map(|(&a, &b)| {
            p.checked_mul(a as i128)
                .and_then(|x| q.checked_mul(b as i128).and_then(|y| x.checked_sub(y)))
                .ok_or_else(|| Error::SizeLimit("ray coordinate overflow".into()))
                .and_then(to_i64)
        })
        .collect::<Result<_>>()?;
    Ok(content_reduce(&v))
}

/// Result of the double description: a lineality basis and the rays of
/// the pointed part, both in integer form.
#[derive(Clone, Debug)]
pub struct DoubleDescription {
    pub lineality: Vec<Vector>,
    pub rays: Vec<Vector>,
}

fn rank_of(rows: &[&Vector]) -> usize {
    let owned: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
    linalg::rank_i64(&owned)
}

pub fn double_description(h: &ConeH) -> Result<DoubleDescription> {
    let d = h.dimension;
    if d > MAX_DIMENSION {
        return Err(Error::SizeLimit(format!(
            "dimension {d} exceeds {MAX_DIMENSION}"
        )));
    }
    if h.ineq.len() > MAX_INEQUALITIES {
        return Err(Error::SizeLimit(format!(
            "{} inequalities exceed {MAX_INEQUALITIES}",
            h.ineq.len()
        )));
    }
    let mut lineality: Vec<Vector> = (0..d)
        .map(|i| (0..d).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut rays: Vec<Vector> = Vec::new();
    let mut processed: Vec<Vector> = Vec::new();

    let constraints =
        h.eq.iter()
            .map(|a| (a, true))
            .chain(h.ineq.iter().map(|a| (a, false)));
    for (a, is_eq) in constraints {
        if let Some(k) = lineality.iter().position(|l| dot(a, l) != 0) {
            let mut l0 = lineality.remove(k);
            let mut s0 = dot(a, &l0);
            if s0 < 0 {
                l0 = l0.iter().map(|&x| -x).collect();
                s0 = -s0;
            }
            for l in lineality.iter_mut() {
                let s = dot(a, l);
                if s != 0 {
                    *l = combine(s0, l, s, &l0)?;
                }
            }
            for r in rays.iter_mut() {
                let s = dot(a, r);
                if s != 0 {
                    *r = combine(s0, r, s, &l0)?;
                }
            }
            if !is_eq {
                rays.push(content_reduce(&l0));
            }
            processed.push(a.clone());
            continue;
        }

        processed.push(a.clone());
        let values: Vec<i128> = rays.iter().map(|r| dot(a, r)).collect();
        let target_rank = d - lineality.len();
        let mut next: Vec<Vector> = Vec::new();
        for (r, &v) in rays.iter().zip(&values) {
            if v == 0 || (v > 0 && !is_eq) {
                next.push(r.clone());
            }
        }
        for (i, &vp) in values.iter().enumerate() {
            if vp <= 0 {
                continue;
            }
            for (j, &vn) in values.iter().enumerate() {
                if vn >= 0 {
                    continue;
                }
                let active: Vec<&Vector> = processed[..processed.len() - 1]
                    .iter()
                    .filter(|c| dot(c, &rays[i]) == 0 && dot(c, &rays[j]) == 0)
                    .collect();
                if active.len() + 2 < target_rank {
                    continue;
                }
                if rank_of(&active) + 2 == target_rank {
                    next.push(combine(vp, &rays[j], vn, &rays[i])?);
                }
            }
        }
        let dedup: BTreeSet<Vector> = next.into_iter().collect();
        rays = dedup.into_iter().collect();
    }
    Ok(DoubleDescription { lineality, rays })
}

/// Orthogonal projection of `v` onto the complement of `basis`, scaled to
/// a primitive integer vector.
fn project_out(v: &[i64], basis: &[Vector]) -> Vector {
    if basis.is_empty() {
        return v.to_vec();
    }
    let q = |x: i64| Rational::from_integer(x.into());
    let gram: Vec<Vec<Rational>> = basis
        .iter()
        .map(|a| {
            basis
                .iter()
                .map(|b| Rational::from_integer(dot(a, b).into()))
                .collect()
        })
        .collect();
    let rhs: Vec<Rational> = basis
        .iter()
        .map(|a| Rational::from_integer(dot(a, v).into()))
        .collect();
    let y = linalg::solve(&gram, &rhs).expect("lineality basis is independent");
    let proj: Vec<Rational> = (0..v.len())
        .map(|i| {
            basis
                .iter()
                .zip(&y)
                .fold(q(v[i]), |acc, (b, c)| acc - c * q(b[i]))
        })
        .collect();
    let row = linalg::integer_row(&proj);
    let ints: Vec<i64> = row
        .iter()
        .map(|x| i64::try_from(x).expect("small projection"))
        .collect();
    content_reduce(&ints)
}

/// Minimal generators: the rays of the pointed part (projected onto the
/// complement of the lineality space) followed by `±` each lineality
/// basis vector, content-reduced and sorted.
pub fn extreme_rays(h: &ConeH) -> Result<ConeV> {
    let dd = double_description(h)?;
    let mut rays: BTreeSet<Vector> = BTreeSet::new();
    for r in &dd.rays {
        let p = project_out(r, &dd.lineality);
        if p.iter().any(|&x| x != 0) {
            rays.insert(p);
        }
    }
    for l in &dd.lineality {
        let l = content_reduce(l);
        rays.insert(l.iter().map(|&x| -x).collect());
        rays.insert(l);
    }
    Ok(ConeV {
        dimension: h.dimension,
        rays: rays.into_iter().collect(),
    })
}

/// Whether dropping inequality `idx` leaves the cone unchanged.
pub fn redundant_inequality(h: &ConeH, idx: usize) -> Result<bool> {
    let reduced = h.without_inequality(idx)?;
    let removed = &h.ineq[idx];
    Ok(extreme_rays(&reduced)?
        .rays
        .iter()
        .all(|r| dot(removed, r) >= 0))
}

/// Whether `target` is a nonnegative combination of `rays`, decided by
/// Fourier–Motzkin elimination.
pub fn in_conical_hull(rays: &[Vector], target: &[i64]) -> bool {
    let m = rays.len();
    let d = target.len();
    if m == 0 {
        return target.iter().all(|&x| x == 0);
    }
    let q = |x: i64| Rational::from_integer(x.into());
    // Equations Σ t_j r_j = target, as rows [r_1[i] … r_m[i] | target[i]].
    let mut eqs: Vec<Vec<Rational>> = (0..d)
        .map(|i| {
            let mut row: Vec<Rational> = rays.iter().map(|r| q(r[i])).collect();
            row.push(q(target[i]));
            row
        })
        .collect();
    // Inequalities over t as rows [c_1 … c_m | b] meaning Σ c_j t_j ≥ b.
    let mut ineqs: Vec<Vec<Rational>> = (0..m)
        .map(|j| {
            let mut row = vec![Rational::zero(); m + 1];
            row[j] = q(1);
            row
        })
        .collect();

    // Gaussian elimination removes one variable per independent equation.
    let mut eliminated = vec![false; m];
    while let Some(pos) = eqs
        .iter()
        .position(|row| row[..m].iter().any(|c| !c.is_zero()))
    {
        let row = eqs.swap_remove(pos);
        let p = (0..m).find(|&j| !row[j].is_zero()).unwrap();
        eliminated[p] = true;
        // t_p = (row[m] − Σ_{j≠p} row[j] t_j) / row[p]
        let substitute = |target_row: &mut Vec<Rational>| {
            let c = target_row[p].clone();
            if c.is_zero() {
                return;
            }
            let f = &c / &row[p];
            for j in 0..=m {
                let delta = &f * &row[j];
                target_row[j] -= delta;
            }
        };
        for e in eqs.iter_mut() {
            substitute(e);
        }
        for ineq in ineqs.iter_mut() {
            substitute(ineq);
        }
    }
    if eqs.iter().any(|row| !row[m].is_zero()) {
        return false;
    }

    for v in 0..m {
        if eliminated[v] {
            continue;
        }
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for row in ineqs {
            if row[v].is_zero() {
                rest.push(row);
            } else if row[v] > Rational::zero() {
                pos.push(row);
            } else {
                neg.push(row);
            }
        }
        for p in &pos {
            for n in &neg {
                let a = p[v].clone();
                let b = -n[v].clone();
                let combined: Vec<Rational> = (0..=m).map(|j| &b * &p[j] + &a * &n[j]).collect();
                rest.push(combined);
            }
        }
        let mut seen = BTreeSet::new();
        ineqs = rest
            .into_iter()
            .filter(|r| seen.insert(r.iter().map(|c| c.to_string()).collect::<Vec<_>>()))
            .collect();
    }
    // Only constant rows `0 ≥ b` remain.
    ineqs.iter().all(|row| row[m] <= Rational::zero())
}

/// `V ⊆ H` and every generator of `H` lies in the conical hull of `V`.
pub fn cone_equal(h: &ConeH, v: &ConeV) -> Result<bool> {
    if h.dimension != v.dimension {
        return Err(Error::DimensionMismatch {
            expected: h.dimension,
            got: v.dimension,
        });
    }
    for r in &v.rays {
        if !h.contains(r)? {
            return Ok(false);
        }
    }
    let gens = extreme_rays(h)?;
    Ok(gens.rays.iter().all(|g| in_conical_hull(&v.rays, g)))
}

fn partial_sum(labels: &[usize]) -> Vector {
    let mut v = vec![0; 6];
    for &l in labels {
        v[l - 1] = 1;
    }
    v
}

/// The plate with inequalities, in order, `x1, x2, x12, x123, x124,
/// x1234, x12345, x12346 ≥ 0` and `x123456 = 0`. Index 2 is `x12`.
pub fn nonplanar_plate() -> ConeH {
    let ineq = [
        &[1][..],
        &[2],
        &[1, 2],
        &[1, 2, 3],
        &[1, 2, 4],
        &[1, 2, 3, 4],
        &[1, 2, 3, 4, 5],
        &[1, 2, 3, 4, 6],
    ]
    .iter()
    .map(|s| partial_sum(s))
    .collect();
    ConeH::new(6, ineq, vec![partial_sum(&[1, 2, 3, 4, 5, 6])]).unwrap()
}

/// Index of `x12 ≥ 0` in [`nonplanar_plate`].
pub const X12_INDEX: usize = 2;

pub fn root(n: usize, i: usize, j: usize) -> Vector {
    let mut v = vec![0; n];
    v[i - 1] += 1;
    v[j - 1] -= 1;
    v
}

/// `(i, j)` of the eight roots `e_i − e_j` generating the plate.
pub const PLATE_ROOTS: [(usize, usize); 8] = [
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 4),
    (3, 5),
    (3, 6),
    (4, 5),
    (4, 6),
];

pub fn plate_roots() -> ConeV {
    ConeV::new(6, PLATE_ROOTS.iter().map(|&(i, j)| root(6, i, j)).collect()).unwrap()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NeighborRoots {
    pub vertex: Vector,
    pub roots: Vec<(usize, usize)>,
    pub matches_plate_roots: bool,
}

/// Roots `e_i − e_j` moving `(0,0,1,1,2,2)` to another permutation of
/// itself.
pub fn edge_directions_match_neighbors() -> NeighborRoots {
    let w: Vector = vec![0, 0, 1, 1, 2, 2];
    let mut sorted_w = w.clone();
    sorted_w.sort();
    let mut roots = Vec::new();
    for i in 1..=6 {
        for j in 1..=6 {
            if i == j {
                continue;
            }
            let mut moved: Vector = w.iter().zip(root(6, i, j)).map(|(a, b)| a + b).collect();
            moved.sort();
            if moved == sorted_w {
                roots.push((i, j));
            }
        }
    }
    let matches = roots == PLATE_ROOTS.to_vec();
    NeighborRoots {
        vertex: w,
        roots,
        matches_plate_roots: matches,
    }
}

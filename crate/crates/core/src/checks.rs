//! Named verification checks shared by the command line and the test
//! suites. Registry order is fixed and determines report order.

use std::time::Instant;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cone::{self, ConeV};
use crate::error::Result;
use crate::invariants::{self as inv, Family};
use crate::lattice;
use crate::linalg;
use crate::perm::{self, Pairing, Partition, Permutation};
use crate::poly::{frac, int, Polynomial, Rational};
use crate::pt_sum::{self as pt, PositionConstraintSet};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Group {
    PtSum,
    Plate,
    Relations,
    Straightening,
    Rep,
    Jacobian,
    Segre,
    Igusa,
    Corollary,
    Polytope,
}

impl Group {
    pub const ALL: [Group; 10] = [
        Group::PtSum,
        Group::Plate,
        Group::Relations,
        Group::Straightening,
        Group::Rep,
        Group::Jacobian,
        Group::Segre,
        Group::Igusa,
        Group::Corollary,
        Group::Polytope,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Group::PtSum => "pt-sum",
            Group::Plate => "plate",
            Group::Relations => "relations",
            Group::Straightening => "straightening",
            Group::Rep => "rep",
            Group::Jacobian => "jacobian",
            Group::Segre => "segre",
            Group::Igusa => "igusa",
            Group::Corollary => "corollary",
            Group::Polytope => "polytope",
        }
    }

    pub fn parse(s: &str) -> Option<Group> {
        Group::ALL.into_iter().find(|g| g.name() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub pass: bool,
    pub witness: String,
}

fn verdict(pass: bool, witness: impl Into<String>) -> Result<Verdict> {
    Ok(Verdict {
        pass,
        witness: witness.into(),
    })
}

/// Inputs a caller may override.
#[derive(Clone, Debug)]
pub struct Context {
    pub jacobian_points: Vec<Vec<Rational>>,
}

impl Default for Context {
    fn default() -> Self {
        Context {
            jacobian_points: inv::jacobian_points(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Outcome {
    pub name: String,
    pub status: Status,
    pub witness: Option<String>,
    pub wall_millis: u64,
}

#[derive(Clone, Copy)]
pub struct Check {
    pub group: Group,
    pub case: &'static str,
    run: fn(&Context) -> Result<Verdict>,
}

impl Check {
    pub fn name(&self) -> String {
        format!("{}/{}", self.group.name(), self.case)
    }

    /// Runs the check; errors become failures carrying the error text.
    pub fn run(&self, ctx: &Context) -> Outcome {
        let start = Instant::now();
        let (status, witness) = match (self.run)(ctx) {
            Ok(v) => (if v.pass { Status::Pass } else { Status::Fail }, v.witness),
            Err(e) => (Status::Fail, format!("error: {e}")),
        };
        Outcome {
            name: self.name(),
            status,
            witness: (!witness.is_empty()).then_some(witness),
            wall_millis: start.elapsed().as_millis() as u64,
        }
    }

    pub fn skipped(&self) -> Outcome {
        Outcome {
            name: self.name(),
            status: Status::Skipped,
            witness: None,
            wall_millis: 0,
        }
    }
}

const fn check(group: Group, case: &'static str, run: fn(&Context) -> Result<Verdict>) -> Check {
    Check { group, case, run }
}

pub fn registry() -> Vec<Check> {
    use Group::*;
    vec![
        check(PtSum, "seven-cyclic", seven_cyclic),
        check(PtSum, "six-ordered-pairs", six_ordered_pairs),
        check(PtSum, "square-numerators", square_numerators),
        check(PtSum, "nine-label-engine", nine_label_engine),
        check(Plate, "two-term-sum", plate_two_terms),
        check(Plate, "extreme-rays", plate_extreme_rays),
        check(Plate, "cone-equal", plate_cone_equal),
        check(Plate, "x12-redundant", plate_redundancy),
        check(Relations, "x-equals-g-times-c", x_equals_g_c),
        check(Relations, "stabilizer-order", stabilizer_order),
        check(Relations, "signed-orbit", signed_orbit_size),
        check(Relations, "x-relations", x_relations),
        check(Relations, "c-relations", c_relations),
        check(Relations, "perturbed-control", perturbed_control),
        check(Straightening, "complementary-splits", straightening_splits),
        check(Straightening, "delta-expansions", delta_expansions),
        check(Rep, "c-matrix", c_matrix),
        check(Rep, "characters", characters),
        check(Rep, "span-dimensions", span_dimensions),
        check(Jacobian, "x-map-rank", jacobian_x),
        check(Jacobian, "projection-control", jacobian_control),
        check(Segre, "cubic-vanishes", segre_vanishes),
        check(Segre, "untwisted-control", segre_control),
        check(Igusa, "quartic-vanishes", igusa_vanishes),
        check(Igusa, "negative-control", igusa_control),
        check(Corollary, "neighbor-roots", corollary_roots),
        check(Corollary, "weight-permutohedron-degree", corollary_degree),
        check(Polytope, "support-six", support_six),
        check(Polytope, "support-twelve", support_twelve),
        check(Polytope, "edge-directions", edge_directions),
        check(Polytope, "lumping", lumping),
        check(Polytope, "four-cycles", four_cycles),
        check(Polytope, "growth", growth),
    ]
}

pub fn find(name: &str) -> Option<Check> {
    registry().into_iter().find(|c| c.name() == name)
}

pub fn run_all(checks: &[Check], ctx: &Context) -> Vec<Outcome> {
    checks.iter().map(|c| c.run(ctx)).collect()
}

fn lines<const N: usize>(rows: &[[usize; N]]) -> Vec<Vec<usize>> {
    rows.iter().map(|w| w.to_vec()).collect()
}

fn pairing(s: &str) -> Pairing {
    Pairing::parse(s).expect("literal pairing")
}

fn seven_cyclic(_: &Context) -> Result<Verdict> {
    let cycles = pt::enumerate_cycles_with_subcycles(6, &pt::nonplanar_triples())?;
    let listed = cycles == lines(&pt::PRINTED_SEVEN_CYCLES);
    let sum = pt::pt_sum(&cycles)?;
    let tabulated = pt::tabulated_seven_term_numerator();
    let closed = sum.equals(&pt::closed_form(&tabulated, -1))?;
    let is_c = tabulated == pt::c_16_24_35();
    verdict(
        listed && closed && is_c,
        format!(
            "{} cycles, printed list {}; sum == -N^2/D12 {}; N == C_{{16,24,35}} {}",
            cycles.len(),
            listed,
            closed,
            is_c
        ),
    )
}

fn six_ordered_pairs(_: &Context) -> Result<Verdict> {
    let perms = pt::enumerate_position_constrained(&pt::nonplanar_six())?;
    let words: Vec<Vec<usize>> = perms.iter().map(Permutation::line).collect();
    let listed = words == lines(&pt::PRINTED_EIGHT_PERMUTATIONS);
    let sum = pt::pt_sum(&words)?;
    let tabulated = pt::tabulated_eight_term_numerator();
    let closed = sum.equals(&pt::closed_form(&tabulated, 1))?;
    let is_c = tabulated == pt::c_16_24_35();
    verdict(
        listed && closed && is_c,
        format!(
            "{} permutations, printed list {}; sum == N^2/D12 {}; N == C_{{16,24,35}} {}",
            words.len(),
            listed,
            closed,
            is_c
        ),
    )
}

fn describe_root(r: &Option<pt::SquareRoot>) -> String {
    match r {
        None => "no square".into(),
        Some(r) => match &r.candidate {
            Some(p) => format!("{}C_{{{p}}}^2", if r.sign < 0 { "-" } else { "" }),
            None => format!("{}({})^2", if r.sign < 0 { "-" } else { "" }, r.root),
        },
    }
}

fn square_numerators(_: &Context) -> Result<Verdict> {
    let target = pairing("16,24,35");
    let seven = pt::pt_sum(&pt::PRINTED_SEVEN_CYCLES)?;
    let eight = pt::pt_sum(&pt::PRINTED_EIGHT_PERMUTATIONS)?;
    let r7 = pt::verify_square_numerator(&seven);
    let r8 = pt::verify_square_numerator(&eight);
    let hit = |r: &Option<pt::SquareRoot>, sign: i64| {
        r.as_ref()
            .is_some_and(|r| r.candidate.as_ref() == Some(&target) && r.sign == sign)
    };
    let control = pt::constrained_pt_sum(&pt::embedded_nonplanar(7)?)?;
    let control_ok = !control.is_zero() && control.square_root.is_none();
    verdict(
        hit(&r7, -1) && hit(&r8, 1) && control_ok,
        format!(
            "seven-term numerator {}; eight-term numerator {}; seven-label control ({} terms) {}",
            describe_root(&r7),
            describe_root(&r8),
            control.term_count,
            if control_ok {
                "nonzero, not a square"
            } else {
                "unexpected"
            }
        ),
    )
}

/// Direct evaluation of `Σ PT(w)` at a point, term by term.
pub fn direct_pt_value<W: AsRef<[usize]>>(words: &[W], point: &[Rational]) -> Rational {
    words.iter().fold(Rational::zero(), |acc, w| {
        let w = w.as_ref();
        let den = (0..w.len()).fold(Rational::one(), |d, i| {
            d * (&point[w[i] - 1] - &point[w[(i + 1) % w.len()] - 1])
        });
        acc + den.recip()
    })
}

/// A point with distinct coordinates, so no Parke–Taylor factor vanishes.
pub fn distinct_point(n: usize) -> Vec<Rational> {
    (1..=n as i64)
        .map(|i| frac(i * i + 3 * i + 1, 2 * i + 5))
        .collect()
}

/// Computes a position-constrained sum and compares it with term-by-term
/// evaluation at a point.
pub fn constrained_sum_with_oracle(
    c: &PositionConstraintSet,
) -> Result<(pt::ConstrainedSumReport, bool)> {
    let report = pt::constrained_pt_sum(c)?;
    let words: Vec<Vec<usize>> = pt::enumerate_position_constrained(c)?
        .iter()
        .map(Permutation::line)
        .collect();
    let point = distinct_point(c.n);
    let agrees = report.sum.evaluate(&point)? == direct_pt_value(&words, &point);
    Ok((report, agrees))
}

fn nine_label_engine(_: &Context) -> Result<Verdict> {
    let (report, agrees) = constrained_sum_with_oracle(&pt::embedded_nonplanar(9)?)?;
    verdict(
        agrees,
        format!(
            "{} terms in {} cyclic classes; sum is zero: {}; square form: {}; pointwise oracle agrees: {}",
            report.term_count,
            report.class_count,
            report.is_zero(),
            report.has_square_form(),
            agrees
        ),
    )
}

fn plate_two_terms(_: &Context) -> Result<Verdict> {
    let perms = pt::enumerate_position_constrained(&pt::nonplanar_six())?;
    let report = pt::plate_sum(&perms)?;
    let points: [[i64; 5]; 3] = [[1, 2, 3, 5, 7], [-2, 9, 4, 1, 6], [3, -1, 8, 2, 11]];
    let mut ok = report.two_terms.is_some();
    for p in points {
        let head: Vec<Rational> = p.iter().map(|&v| int(v)).collect();
        ok &= pt::check_on_hyperplane(&report, &head)?;
    }
    let shown = report
        .two_terms
        .as_ref()
        .map_or("no two-term form".into(), |t| {
            format!("{} + {}", t[0].display(), t[1].display())
        });
    verdict(ok, shown)
}

fn show_roots(rays: &[Vec<i64>]) -> String {
    rays.iter()
        .map(|r| match lattice::as_root(r) {
            Some((i, j)) => format!("e{i}-e{j}"),
            None => format!("{r:?}"),
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn plate_extreme_rays(_: &Context) -> Result<Verdict> {
    let rays = cone::extreme_rays(&cone::nonplanar_plate())?;
    verdict(
        rays.rays == cone::plate_roots().rays,
        show_roots(&rays.rays),
    )
}

fn plate_cone_equal(_: &Context) -> Result<Verdict> {
    let h = cone::nonplanar_plate();
    let full = cone::cone_equal(&h, &cone::plate_roots())?;
    let mut fewer = cone::plate_roots().rays;
    fewer.retain(|r| r != &cone::root(6, 1, 3));
    let partial = cone::cone_equal(&h, &ConeV::new(6, fewer)?)?;
    verdict(
        full && !partial,
        format!("eight roots: {full}; without e1-e3: {partial}"),
    )
}

fn plate_redundancy(_: &Context) -> Result<Verdict> {
    let h = cone::nonplanar_plate();
    let x12 = cone::redundant_inequality(&h, cone::X12_INDEX)?;
    let x1 = cone::redundant_inequality(&h, 0)?;
    verdict(
        x12 && !x1,
        format!("x12 redundant: {x12}; x1 redundant: {x1}"),
    )
}

fn x_equals_g_c(_: &Context) -> Result<Verdict> {
    let mut bad = Vec::new();
    let all = Pairing::all(6);
    for p in &all {
        if inv::build_x(p)? != &inv::build_g(p) * &inv::build_c_pairing(p) {
            bad.push(p.to_string());
        }
    }
    verdict(
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} pairings", all.len())
        } else {
            format!("fails for {}", bad.join(" "))
        },
    )
}

fn stabilizer_order(_: &Context) -> Result<Verdict> {
    let p = pairing("12,34,56");
    let stab = inv::polynomial_stabilizer(Family::X, &p)?;
    let closure = perm::wreath_product(2, 3);
    verdict(
        stab.len() == 48 && stab == closure,
        format!(
            "stabilizer order {}; generated wreath product order {}; equal {}",
            stab.len(),
            closure.len(),
            stab == closure
        ),
    )
}

fn signed_orbit_size(_: &Context) -> Result<Verdict> {
    let orbit = inv::signed_orbit(Family::X, &pairing("12,34,56"), &perm::symmetric_group(6))?;
    let signed = orbit.iter().all(|e| e.sign == 1 || e.sign == -1);
    let minus = orbit.iter().filter(|e| e.sign == -1).count();
    verdict(
        orbit.len() == 15 && signed,
        format!("{} pairings, {} with sign -1", orbit.len(), minus),
    )
}

fn relation_verdict(family: Family, expected: usize) -> Result<Verdict> {
    let checks = inv::verify_linear_relations(family)?;
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| !c.holds)
        .map(|c| {
            format!(
                "{}: {}",
                c.name,
                brief(c.witness.as_deref().unwrap_or_default(), 3)
            )
        })
        .collect();
    verdict(
        failed.is_empty() && checks.len() == expected,
        if failed.is_empty() {
            format!("{} relations hold", checks.len())
        } else {
            failed.join("; ")
        },
    )
}

fn x_relations(_: &Context) -> Result<Verdict> {
    relation_verdict(Family::X, 10)
}

fn c_relations(_: &Context) -> Result<Verdict> {
    relation_verdict(Family::C, 9)
}

/// First `keep` terms of a long polynomial text.
fn brief(text: &str, keep: usize) -> String {
    let terms: Vec<&str> = text.split(" + ").collect();
    if terms.len() <= keep {
        return text.to_string();
    }
    format!(
        "{} + ... ({} terms)",
        terms[..keep].join(" + "),
        terms.len()
    )
}

fn perturbed_control(_: &Context) -> Result<Verdict> {
    let rel = inv::relation_table(Family::X)[0].perturbed();
    let c = inv::check_relation(Family::X, &rel)?;
    verdict(
        !c.holds && c.witness.is_some(),
        format!(
            "{} -> residual {}",
            c.name,
            brief(c.witness.as_deref().unwrap_or("0"), 3)
        ),
    )
}

fn straightening_splits(_: &Context) -> Result<Verdict> {
    let splits = inv::complementary_splits();
    let mut bad = Vec::new();
    for s in &splits {
        if !inv::verify_straightening(*s)? {
            bad.push(format!("{s:?}"));
        }
    }
    verdict(
        bad.is_empty() && splits.len() == 10,
        if bad.is_empty() {
            format!("{} splits", splits.len())
        } else {
            format!("fails for {}", bad.join(" "))
        },
    )
}

fn show_coefficients(c: &[Rational]) -> String {
    let parts: Vec<String> = c.iter().map(crate::poly::format_rational).collect();
    format!("({})", parts.join(", "))
}

fn delta_expansions(_: &Context) -> Result<Verdict> {
    let checks = inv::verify_delta_expansions()?;
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| !c.check.holds || c.computed != c.tabulated)
        .map(|c| {
            format!(
                "{}: tabulated {} but exact {}",
                c.name,
                show_coefficients(&c.tabulated),
                show_coefficients(&c.computed)
            )
        })
        .collect();
    verdict(
        failed.is_empty(),
        if failed.is_empty() {
            format!("{} expansions reproduce", checks.len())
        } else {
            format!(
                "{}/{} reproduce; {}",
                checks.len() - failed.len(),
                checks.len(),
                failed.join("; ")
            )
        },
    )
}

fn c_matrix(_: &Context) -> Result<Verdict> {
    let g = Permutation::from_cycles(6, &[&[1, 2], &[3, 4], &[5, 6]])?;
    let m = inv::representation_matrix(&g, Family::C)?;
    let trace = linalg::trace(&m);
    let matches = m == inv::tabulated_c_matrix();
    verdict(
        matches && trace == int(-3),
        format!("matches printed matrix {matches}; trace {trace}"),
    )
}

fn characters(_: &Context) -> Result<Verdict> {
    let expected = [
        (Family::C, vec![3, 3]),
        (Family::G, vec![3, 3]),
        (Family::X, vec![2, 2, 2]),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (family, lambda) in expected {
        let want = Partition::new(lambda)?;
        match inv::identify_irrep(family) {
            Ok(id) => {
                ok &= id.partition == want;
                parts.push(format!("{family}: {}", id.partition));
            }
            Err(e) => {
                ok = false;
                parts.push(format!("{family}: {e}"));
            }
        }
    }
    verdict(ok, parts.join("; "))
}

fn span_dimensions(_: &Context) -> Result<Verdict> {
    let mut dims = Vec::new();
    for family in [Family::X, Family::C, Family::G] {
        let all: Vec<Polynomial> = Pairing::all(6)
            .iter()
            .map(|p| inv::family_polynomial(family, p))
            .collect::<Result<_>>()?;
        dims.push((family, inv::span_dimension(&all)));
    }
    verdict(
        dims.iter().all(|(_, d)| *d == 5),
        dims.iter()
            .map(|(f, d)| format!("{f}: {d}"))
            .collect::<Vec<_>>()
            .join("; "),
    )
}

fn jacobian_x(ctx: &Context) -> Result<Verdict> {
    let ranks = inv::jacobian_ranks(&inv::good_map(Family::X)?, &ctx.jacobian_points)?;
    verdict(ranks.iter().all(|&r| r == 4), format!("ranks {ranks:?}"))
}

fn jacobian_control(ctx: &Context) -> Result<Verdict> {
    let proj: Vec<Polynomial> = (1..=5).map(|l| Polynomial::var(6, l)).collect();
    let ranks = inv::jacobian_ranks(&proj, &ctx.jacobian_points)?;
    verdict(ranks.iter().all(|&r| r == 5), format!("ranks {ranks:?}"))
}

fn segre_vanishes(_: &Context) -> Result<Verdict> {
    let p = inv::segre_polynomial(&inv::SEGRE_TWIST);
    verdict(p.is_zero(), format!("{} terms after expansion", p.len()))
}

fn segre_control(_: &Context) -> Result<Verdict> {
    let p = inv::segre_polynomial(&[1; 5]);
    verdict(
        !p.is_zero(),
        format!("untwisted expansion has {} terms", p.len()),
    )
}

fn igusa_vanishes(_: &Context) -> Result<Verdict> {
    let p = inv::igusa_polynomial();
    verdict(p.is_zero(), format!("{} terms after expansion", p.len()))
}

fn igusa_control(_: &Context) -> Result<Verdict> {
    let point = &inv::jacobian_points()[0];
    let v = inv::igusa_value(point, -1)?;
    let shown: Vec<String> = point.iter().map(crate::poly::format_rational).collect();
    verdict(
        !v.is_zero(),
        format!("d5 sign flipped: value {v} at ({})", shown.join(", ")),
    )
}

fn corollary_roots(_: &Context) -> Result<Verdict> {
    let n = cone::edge_directions_match_neighbors();
    let shown = n
        .roots
        .iter()
        .map(|(i, j)| format!("e{i}-e{j}"))
        .collect::<Vec<_>>()
        .join(", ");
    verdict(n.matches_plate_roots, shown)
}

fn corollary_degree(_: &Context) -> Result<Verdict> {
    let pts = lattice::weight_permutohedron();
    let g = lattice::root_edge_graph(&pts);
    let dirs = g
        .edge_directions(&lattice::WEIGHT_VERTEX)
        .unwrap_or_default();
    verdict(
        pts.len() == 90 && dirs.len() == 8 && dirs == cone::PLATE_ROOTS.to_vec(),
        format!(
            "{} vertices, {} edges, s(1) = {}",
            pts.len(),
            g.edges.len(),
            dirs.len()
        ),
    )
}

fn support_verdict(c: lattice::SupportCheck) -> Result<Verdict> {
    verdict(
        c.equal,
        format!(
            "{}: support {} points, orbit {} points, equal {}",
            c.case, c.support_size, c.orbit_size, c.equal
        ),
    )
}

fn support_six(_: &Context) -> Result<Verdict> {
    support_verdict(lattice::verify_support_equals_orbit())
}

fn support_twelve(_: &Context) -> Result<Verdict> {
    support_verdict(lattice::verify_sl4_support())
}

fn edge_directions(_: &Context) -> Result<Verdict> {
    let g = lattice::root_edge_graph(&lattice::c_polytope());
    let dirs = g.edge_directions(&lattice::C_VERTEX).unwrap_or_default();
    let expected = vec![(1, 4), (2, 4), (3, 4), (3, 5), (3, 6)];
    let shown: Vec<String> = dirs.iter().map(|(i, j)| format!("e{i}-e{j}")).collect();
    verdict(dirs == expected, shown.join(", "))
}

fn lumping(_: &Context) -> Result<Verdict> {
    let six =
        lattice::lumping_projection(&lattice::c_polytope(), &lattice::consecutive_blocks(2, 3))?;
    let twelve =
        lattice::lumping_projection(&lattice::sl4_polytope(), &lattice::consecutive_blocks(3, 4))?;
    let ok6 = six == lattice::permutohedron_vertices(3);
    let ok12 = twelve == lattice::permutohedron_vertices(4);
    verdict(
        ok6 && ok12,
        format!(
            "C-polytope image {} points (permutohedron {ok6}); SL4 image {} points (permutohedron {ok12})",
            six.len(),
            twelve.len()
        ),
    )
}

fn four_cycles(_: &Context) -> Result<Verdict> {
    let r = lattice::four_cycle_affine_rank(&lattice::root_edge_graph(&lattice::c_polytope()));
    verdict(
        r.cycles > 0 && r.all_rank(3),
        format!(
            "{} 4-cycles, {} chordless; ranks chordless {:?}, with chord {:?}",
            r.cycles, r.chordless, r.chordless_ranks, r.chorded_ranks
        ),
    )
}

fn growth(_: &Context) -> Result<Verdict> {
    let g = lattice::growth_comparison(8, 5)?;
    verdict(
        g.sequences_coincide && !g.conventions_matching_target.is_empty(),
        format!(
            "sequences coincide {} ({:?}); {:?} matches {:?}; differing conventions: {}",
            g.sequences_coincide,
            g.c_polytope.counts,
            g.conventions_matching_target,
            g.target,
            g.discrepancies.join("; ")
        ),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::FactoredRational;

    #[test]
    fn names_are_unique_and_grouped() {
        let names: Vec<String> = registry().iter().map(Check::name).collect();
        let set: std::collections::BTreeSet<&String> = names.iter().collect();
        assert_eq!(set.len(), names.len());
        for g in Group::ALL {
            assert!(registry().iter().any(|c| c.group == g), "{}", g.name());
            assert_eq!(Group::parse(g.name()), Some(g));
        }
        assert!(find("pt-sum/six-ordered-pairs").is_some());
        assert!(find("pt-sum/nope").is_none());
    }

    #[test]
    fn oracle_matches_factored_sum() {
        let point = distinct_point(6);
        let sum = pt::pt_sum(&pt::PRINTED_EIGHT_PERMUTATIONS).unwrap();
        assert_eq!(
            sum.evaluate(&point).unwrap(),
            direct_pt_value(&pt::PRINTED_EIGHT_PERMUTATIONS, &point)
        );
        let single = FactoredRational::parke_taylor(&[1, 2, 3]).unwrap();
        assert_eq!(
            single.evaluate(&point[..3]).unwrap(),
            direct_pt_value(&[[1, 2, 3]], &point)
        );
    }

    #[test]
    fn quick_checks_pass() {
        let ctx = Context::default();
        for name in [
            "plate/extreme-rays",
            "relations/perturbed-control",
            "corollary/neighbor-roots",
        ] {
            let o = find(name).unwrap().run(&ctx);
            assert_eq!(o.status, Status::Pass, "{name}: {:?}", o.witness);
        }
    }

    #[test]
    fn errors_become_failures() {
        let ctx = Context {
            jacobian_points: vec![],
        };
        let o = find("jacobian/x-map-rank").unwrap().run(&ctx);
        assert_eq!(o.status, Status::Fail);
        assert!(o.witness.unwrap().starts_with("error"));
    }
}

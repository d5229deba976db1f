//! End-to-end cross-verification of one ADE type.

use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::ade::{AdeType, Family};
use crate::arith::rational::{self, Rational};
use crate::character::{character_table, CharacterTable};
use crate::error::{Error, Result};
use crate::fixtures::fixtures;
use crate::groebner::{buchberger, jacobian_ideal, standard_monomials};
use crate::group::{build_group, FiniteSubgroup};
use crate::orbifold::{
    compare_spectrum_orbifold, invariance_check, orbifold_cohomology, sector_data, BivariatePoly,
    ComparisonReport,
};
use crate::quiver::{affine_null_check, delete_trivial_vertex, graph_isomorphic, mckay_graph, DynkinDiagram};
use crate::roots::{coxeter_element, coxeter_exponents, positive_roots, CartanMatrix};
use crate::spectrum::{infer_weights, milnor_number_formula, spectrum, Grading};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Agrees with the derived oracle but not with a fixture entry marked as an erratum.
    Flagged,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Flagged => "flagged",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    /// What the computed value is checked against.
    pub oracle: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationCase {
    #[serde(rename = "type")]
    pub ade: String,
    pub checks: Vec<CheckResult>,
    pub comparison: ComparisonReport,
}

impl VerificationCase {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn multiset(v: &[Rational]) -> String {
    format!("{{{}}}", v.iter().map(rational::to_string).collect::<Vec<_>>().join(", "))
}

fn status(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

struct Checks(Vec<CheckResult>);

impl Checks {
    fn push(&mut self, name: &'static str, oracle: &'static str, status: Status, expected: String, actual: String) {
        self.0.push(CheckResult {
            name,
            status,
            expected,
            actual,
            oracle,
        });
    }
}

fn positive_root_count(ade: AdeType) -> usize {
    let n = ade.rank() as usize;
    match ade.family() {
        Family::A => n * (n + 1) / 2,
        Family::D => n * (n - 1),
        Family::E6 => 36,
        Family::E7 => 63,
        Family::E8 => 120,
    }
}

/// Runs every check for `ade` in pipeline order. Consistency errors abort the
/// case and name the stage they came from.
pub fn run_verification(ade: AdeType) -> Result<VerificationCase> {
    let tables = fixtures();
    let mut checks = Checks(Vec::new());

    // group
    let group: FiniteSubgroup = build_group(ade).map_err(|e| e.in_check("group order"))?;
    let expected_order = tables
        .table1_row(ade.family())
        .ok_or_else(|| Error::internal("group order", "no table1 row"))?
        .order_at(ade.rank());
    checks.push(
        "group order",
        "table1 fixture",
        status(group.order() as u64 == expected_order),
        expected_order.to_string(),
        group.order().to_string(),
    );

    // characters
    let table: CharacterTable = character_table(&group).map_err(|e| e.in_check("character table"))?;
    let (sq, rows, cols) = (table.sum_of_squares(), table.row_orthogonality(), table.column_orthogonality());
    checks.push(
        "character table",
        "group order and orthogonality relations",
        status(sq == group.order() as u64 && rows && cols),
        format!("sum dim^2 = {}, orthogonal rows and columns", group.order()),
        format!(
            "sum dim^2 = {sq}, rows {}, columns {}; dims {:?}",
            if rows { "orthogonal" } else { "not orthogonal" },
            if cols { "orthogonal" } else { "not orthogonal" },
            table.dimensions()
        ),
    );

    // McKay graph
    let extended = mckay_graph(&table).map_err(|e| e.in_check("mckay isomorphism"))?;
    let quiver = delete_trivial_vertex(&extended).map_err(|e| e.in_check("mckay isomorphism"))?;
    let reference = DynkinDiagram::reference(ade);
    let reference_ext = DynkinDiagram::extended(ade);
    let plain_iso = graph_isomorphic(&quiver, &reference.graph);
    let ext_iso = graph_isomorphic(&extended, &reference_ext.graph);
    checks.push(
        "mckay isomorphism",
        "reference Dynkin diagram",
        status(plain_iso.is_some() && ext_iso.is_some()),
        format!("{} and its extension (marks = dimensions)", ade),
        match (&plain_iso, &ext_iso) {
            (Some(p), Some(_)) => format!("isomorphic, vertex map {p:?}"),
            (Some(_), None) => "plain graph isomorphic, extended graph not".into(),
            _ => "not isomorphic".into(),
        },
    );
    checks.push(
        "affine null vector",
        "irrep dimension vector",
        status(affine_null_check(&extended)),
        "A delta = 2 delta".into(),
        if affine_null_check(&extended) { "holds" } else { "fails" }.into(),
    );

    // singularity side
    let f = tables.equation(ade).map_err(|e| e.in_check("milnor number"))?;
    let weighted = infer_weights(&f).map_err(|e| e.in_check("milnor number"))?;
    let mu = milnor_number_formula(&weighted).map_err(|e| e.in_check("milnor number"))?;
    let gb = buchberger(&jacobian_ideal(&f), &weighted.monomial_order()).map_err(|e| e.in_check("milnor number"))?;
    let basis = standard_monomials(&gb).map_err(|e| e.in_check("milnor number"))?;
    let s_pairs = gb.s_pairs_reduce_to_zero();
    checks.push(
        "milnor number",
        "Groebner standard monomial count",
        status(mu == basis.len() as u64 && s_pairs),
        format!("mu = {mu} from the weights of {f}"),
        format!(
            "{} standard monomials, S-pairs {}",
            basis.len(),
            if s_pairs { "reduce to zero" } else { "do not reduce to zero" }
        ),
    );

    let sp = spectrum(&weighted, &basis, Grading::Shifted).map_err(|e| e.in_check("spectrum"))?;
    let computed = sp.values();
    match tables.table2_row(ade) {
        None => checks.push("spectrum", "table2 fixture", Status::Skipped, "no fixture row".into(), multiset(&computed)),
        Some(row) => {
            let printed = row.printed_spectrum();
            let (st, expected) = if computed == printed {
                (Status::Pass, multiset(&printed))
            } else if row.erratum.is_some() && computed == row.corrected_spectrum() {
                let e = row.erratum.as_ref().unwrap();
                (
                    Status::Flagged,
                    format!(
                        "printed {{{}}}; entry {} suspected misprint for {}",
                        row.printed.join(", "),
                        e.printed,
                        e.derived
                    ),
                )
            } else {
                (Status::Fail, multiset(&printed))
            };
            checks.push("spectrum", "table2 fixture", st, expected, multiset(&computed));
        }
    }

    // root lattice
    let cox = coxeter_element(&reference, None).map_err(|e| e.in_check("coxeter exponents"))?;
    let exps = coxeter_exponents(&cox).map_err(|e| e.in_check("coxeter exponents"))?;
    let h = cox.order as u64;
    let d = weighted.d;
    let ok = exps == computed && cox.pow_is_identity(h) && d % h == 0 && cox.pow_is_identity(d);
    checks.push(
        "coxeter exponents",
        "spectrum (cross-module)",
        status(ok),
        format!("{}; T^h = I, h | d = {d}, T^d = I", multiset(&computed)),
        format!(
            "{}; h = {h}, T^d {}",
            multiset(&exps),
            if cox.pow_is_identity(d) { "= I" } else { "!= I" }
        ),
    );
    let cartan = CartanMatrix::from_diagram(&reference);
    let roots = positive_roots(&cartan);
    let want = positive_root_count(ade);
    checks.push(
        "positive roots",
        "closed-form root count",
        status(roots.len() == want && cartan.is_positive_definite()),
        want.to_string(),
        roots.len().to_string(),
    );

    // orbifold side
    let sectors = sector_data(&group, table.classes()).map_err(|e| e.in_check("orbifold sectors"))?;
    let coh = orbifold_cohomology(&sectors).map_err(|e| e.in_check("orbifold sectors"))?;
    let ages_ok = sectors
        .iter()
        .all(|s| if s.class_index == 0 { s.age.is_zero() } else { s.age.is_one() });
    let irreps = table.irreps().len();
    checks.push(
        "orbifold sectors",
        "character table (cross-module)",
        status(ages_ok && coh.total == irreps && coh.graded_dims.get(&0) == Some(&1)),
        format!("ages 0 then 1; {irreps} sectors = #irreps"),
        format!("graded dims {:?}, total {}", coh.graded_dims, coh.total),
    );
    let comparison = compare_spectrum_orbifold(ade, &sp, &sectors);
    let (st, expected) = match comparison.a_family_exact_match {
        Some(m) => (status(m), "one exponent per class equals the spectrum".to_string()),
        None => (Status::Pass, "report only".to_string()),
    };
    checks.push(
        "orbifold comparison",
        "spectrum (cross-module)",
        st,
        expected,
        format!("mu = {}, classes = {} (difference reported)", comparison.mu, comparison.classes),
    );

    match tables.invariant_row(ade.family()) {
        None => checks.push("invariants", "invariants fixture", Status::Skipped, "no fixture row".into(), "-".into()),
        Some(row) => {
            let polys = row.polynomials_at(ade.rank()).map_err(|e| e.in_check("invariants"))?;
            let mut failing = Vec::new();
            for p in &polys {
                let b = BivariatePoly::from_polynomial(p, group.cyclotomic_order()).map_err(|e| e.in_check("invariants"))?;
                if !invariance_check(&b, &group) {
                    failing.push(p.to_string());
                }
            }
            checks.push(
                "invariants",
                "invariants fixture",
                status(failing.is_empty()),
                polys.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "),
                if failing.is_empty() { "all invariant".into() } else { format!("not invariant: {}", failing.join("; ")) },
            );
        }
    }

    Ok(VerificationCase {
        ade: ade.to_string(),
        checks: checks.0,
        comparison,
    })
}

/// Runs every type up to `max_rank` concurrently; results keep the order of
/// [`AdeType::all_up_to`].
pub fn verify_all(max_rank: u32) -> Vec<(AdeType, Result<VerificationCase>)> {
    AdeType::all_up_to(max_rank)
        .into_par_iter()
        .map(|ade| (ade, run_verification(ade)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_passes() {
        let case = run_verification(AdeType::a(2).unwrap()).unwrap();
        assert!(case.checks.iter().all(|c| c.status == Status::Pass), "{case:?}");
        assert_eq!(case.check("spectrum").unwrap().actual, "{1/3, 2/3}");
    }

    #[test]
    fn d4_flags_the_printed_row() {
        let case = run_verification(AdeType::d(4).unwrap()).unwrap();
        assert!(case.passed());
        let s = case.check("spectrum").unwrap();
        assert_eq!(s.status, Status::Flagged);
        assert_eq!(s.actual, "{1/6, 1/2, 1/2, 5/6}");
        assert!(s.expected.contains("1/6, 3/6, 5/6, 2/6"));
    }

    #[test]
    fn e8_passes() {
        let case = run_verification(AdeType::e8()).unwrap();
        assert!(case.checks.iter().all(|c| matches!(c.status, Status::Pass | Status::Skipped)));
        assert_eq!(case.comparison.mu, 8);
        assert_eq!(case.comparison.classes, 9);
        assert!(case.check("coxeter exponents").unwrap().actual.contains("h = 30"));
    }
}

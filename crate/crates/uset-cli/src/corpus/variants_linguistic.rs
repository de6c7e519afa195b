//! Linguistic term aggregation and the q-rung constrained variants.

use super::{index_distance_matrix, vector_bundle, Ledger, EXACT_TOL, PRINT_TOL};

use uset_core::classic::FiniteUniverse;
use uset_core::degree::{Band, ConstraintSpec, DegreeVector};
use uset_core::constrained::constrained_aggregate;
use uset_core::variants::{
    linguistic_aggregate, term_distance, LinguisticBundle, LinguisticDominant, LinguisticValues,
    TermContradiction, TermSet,
};
use uset_core::plithogenic::FusionRule;

pub fn cases(ledger: &mut Ledger) {
    supplier_quality(ledger);
    restaurant_service(ledger);
    helpdesk_triple(ledger);
    fermatean_triage(ledger);
    pythagorean_credit(ledger);
    q4_warranty(ledger);
}

fn six_terms() -> TermSet {
    TermSet::new(vec!["s0", "s1", "s2", "s3", "s4", "s5"]).unwrap()
}

fn supplier_quality(ledger: &mut Ledger) {
    let terms = six_terms();
    ledger.check(
        "3.5.2:distance",
        vec![term_distance(&terms, "s3", "s4").unwrap()],
        vec![0.2],
        EXACT_TOL,
        "normalized distance d(s3, s4) with g = 5",
    );
    let bundle = LinguisticBundle::new(
        terms,
        TermContradiction::Distance,
        LinguisticValues::Single,
        FusionRule::Mean,
        FiniteUniverse::new(vec!["A"]).unwrap(),
        vec![[0.02, 0.08, 0.20, 0.40, 0.22, 0.08]
            .iter()
            .map(|&x| DegreeVector::scalar(x).unwrap())
            .collect()],
    )
    .unwrap();
    let dominant = LinguisticDominant::Term("s4".into());
    ledger.check(
        "3.5.2:weights",
        bundle.weights(&dominant).unwrap(),
        vec![0.2, 0.4, 0.6, 0.8, 1.0, 0.8],
        EXACT_TOL,
        "compatibility weights against Very Good",
    );
    let out = linguistic_aggregate(&bundle, "A", &dominant).unwrap();
    ledger.check(
        "3.5.2:aggregate",
        vec![out.get(0)],
        vec![0.2000],
        EXACT_TOL,
        "supplier quality 0.760/3.8",
    );
}

fn restaurant_service(ledger: &mut Ledger) {
    let bundle = LinguisticBundle::new(
        six_terms(),
        TermContradiction::Distance,
        LinguisticValues::Hesitant(vec![vec![3, 4], vec![2, 3], vec![4, 5]]),
        FusionRule::Mean,
        FiniteUniverse::new(vec!["R"]).unwrap(),
        vec![vec![
            DegreeVector::scalar(0.60).unwrap(),
            DegreeVector::scalar(0.25).unwrap(),
            DegreeVector::scalar(0.35).unwrap(),
        ]],
    )
    .unwrap();
    let dominant = LinguisticDominant::Set(vec!["s4".into()]);
    ledger.check(
        "3.5.3:weights",
        bundle.weights(&dominant).unwrap(),
        vec![0.8, 0.6, 0.8],
        EXACT_TOL,
        "lifted contradiction weights for the three hesitant term sets",
    );
    let out = linguistic_aggregate(&bundle, "R", &dominant).unwrap();
    ledger.check(
        "3.5.3:aggregate",
        vec![out.get(0)],
        vec![0.4136],
        PRINT_TOL,
        "service-speed score 0.910/2.2",
    );
}

fn helpdesk_triple(ledger: &mut Ledger) {
    let rows = [
        [0.05, 0.10, 0.80],
        [0.10, 0.15, 0.70],
        [0.30, 0.20, 0.50],
        [0.55, 0.20, 0.30],
        [0.70, 0.15, 0.20],
        [0.60, 0.15, 0.25],
    ];
    let bundle = LinguisticBundle::new(
        six_terms(),
        TermContradiction::Distance,
        LinguisticValues::Single,
        FusionRule::Mean,
        FiniteUniverse::new(vec!["X"]).unwrap(),
        vec![rows
            .iter()
            .map(|t| DegreeVector::new(t.to_vec()).unwrap())
            .collect()],
    )
    .unwrap();
    let out = linguistic_aggregate(&bundle, "X", &LinguisticDominant::Term("s4".into())).unwrap();
    ledger.check(
        "3.5.4:aggregate",
        out.components().to_vec(),
        vec![0.4868, 0.1658, 0.3632],
        PRINT_TOL,
        "helpdesk (T, I, F) under Very Good dominance",
    );
}

fn fermatean_triage(ledger: &mut Ledger) {
    let mut bundle = vector_bundle(
        vec!["x"],
        vec!["none", "mild", "moderate", "severe"],
        index_distance_matrix(4),
        vec![vec![
            vec![0.05, 0.98],
            vec![0.35, 0.90],
            vec![0.70, 0.80],
            vec![0.88, 0.38],
        ]],
        Band::UNIT,
    );
    bundle.constraint = Some(ConstraintSpec::QRung { q: 3.0, n: 2 });
    // the severe payload's own cube-sum check
    let severe = DegreeVector::new(vec![0.88, 0.38]).unwrap();
    let report =
        uset_core::degree::validate_constraint(&severe, &ConstraintSpec::QRung { q: 3.0, n: 2 })
            .unwrap();
    ledger.check(
        "3.6.3:input_check",
        vec![report.measured],
        vec![0.736344],
        1e-6,
        "0.88^3 + 0.38^3 for the severe value",
    );
    let (out, post) = constrained_aggregate(&bundle, "x", "severe").unwrap();
    ledger.check(
        "3.6.3:aggregate",
        out.components().to_vec(),
        vec![0.7317, 0.6067],
        PRINT_TOL,
        "Fermatean orthopair under severe dominance",
    );
    ledger.check(
        "3.6.3:post_check",
        vec![post.measured],
        vec![0.615],
        PRINT_TOL,
        "cube sum of the aggregate stays below 1",
    );
    ledger.check_ok("3.6.3:post_ok", post.ok, "post-aggregation constraint holds");
}

fn pythagorean_credit(ledger: &mut Ledger) {
    let mut bundle = vector_bundle(
        vec!["x"],
        vec!["low", "medium", "high"],
        index_distance_matrix(3),
        vec![vec![
            vec![0.20, 0.20, 0.90],
            vec![0.55, 0.25, 0.55],
            vec![0.85, 0.10, 0.35],
        ]],
        Band::UNIT,
    );
    bundle.constraint = Some(ConstraintSpec::QRung { q: 2.0, n: 3 });
    let (out, post) = constrained_aggregate(&bundle, "x", "high").unwrap();
    ledger.check(
        "3.6.4:aggregate",
        out.components().to_vec(),
        vec![0.75, 0.15, 0.4167],
        PRINT_TOL,
        "Pythagorean neutrosophic orthovector under high income stability",
    );
    ledger.check(
        "3.6.4:post_check",
        vec![post.measured],
        vec![0.7586],
        PRINT_TOL,
        "squared sum of the aggregate stays below 2",
    );
}

fn q4_warranty(ledger: &mut Ledger) {
    let mut bundle = vector_bundle(
        vec!["x"],
        vec!["1yr", "2yr", "3yr"],
        index_distance_matrix(3),
        vec![vec![
            vec![0.20, 0.98],
            vec![0.65, 0.60],
            vec![0.90, 0.30],
        ]],
        Band::UNIT,
    );
    bundle.constraint = Some(ConstraintSpec::QRung { q: 4.0, n: 2 });
    let (out, post) = constrained_aggregate(&bundle, "x", "3yr").unwrap();
    ledger.check(
        "3.6.5:aggregate",
        out.components().to_vec(),
        vec![0.8167, 0.4000],
        PRINT_TOL,
        "q = 4 orthopair under the 3-year warranty context",
    );
    ledger.check(
        "3.6.5:post_check",
        vec![post.measured],
        vec![0.4705],
        PRINT_TOL,
        "fourth-power sum of the aggregate stays below 1",
    );
}

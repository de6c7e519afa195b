//! Triangular, trapezoidal, nonstandard, refined, subset-valued, and picture
//! examples.

use super::{Ledger, EXACT_TOL, PRINT_TOL};

use uset_core::classic::FiniteUniverse;
use uset_core::degree::{
    standard_part, DegreeVector, DualDegree, TrapezoidalNumber, TriangularNumber,
};
use uset_core::plithogenic::{aggregate_dominant, ContradictionTable, FusionRule};
use uset_core::reductions::{picture_embed_fuzzy, picture_project_fuzzy, PictureFuzzySet};
use uset_core::variants::{
    nonstandard_aggregate, picture_construct, refined_scalarize, subset_reduce,
    subset_valued_validate, trapezoidal_inclusion, triangular_aggregate, ReduceStrategy,
    RefinedSignature, TrapBundle, TrapTripleDegree, TriSignatureDegree,
};

pub fn cases(ledger: &mut Ledger) {
    laptop_triangular(ledger);
    renewable_triangular(ledger);
    supplier_trapezoidal(ledger);
    cardio_trapezoidal(ledger);
    wind_nonstandard(ledger);
    triage_refined(ledger);
    esg_refined(ledger);
    drug_subset(ledger);
    transport_picture(ledger);
    phone_picture(ledger);
}

fn tri(l: f64, m: f64, u: f64) -> TriangularNumber {
    TriangularNumber::new(l, m, u).unwrap()
}

fn laptop_triangular(ledger: &mut Ledger) {
    // L1's utility TFNs per linguistic level, weighted against "high" with
    // pCF(low, high) = 0.9, pCF(medium, high) = 0.5
    let values = vec![
        TriSignatureDegree::new(vec![tri(0.0, 0.1, 0.3)]).unwrap(),
        TriSignatureDegree::new(vec![tri(0.2, 0.5, 0.8)]).unwrap(),
        TriSignatureDegree::new(vec![tri(0.4, 0.7, 1.0)]).unwrap(),
    ];
    let weights = [0.1, 0.5, 1.0];
    let out = triangular_aggregate(&values, &weights).unwrap();
    // independent breakpoint oracle: weighted mean per breakpoint
    let oracle = |pick: fn(&TriangularNumber) -> f64| {
        values
            .iter()
            .zip(weights)
            .map(|(v, w)| w * pick(&v.slots[0]))
            .sum::<f64>()
            / weights.iter().sum::<f64>()
    };
    ledger.check(
        "3.24.3:breakpoints",
        vec![out.slots[0].l, out.slots[0].m, out.slots[0].u],
        vec![oracle(|t| t.l), oracle(|t| t.m), oracle(|t| t.u)],
        EXACT_TOL,
        "breakpointwise contradiction-weighted mean of the utility TFNs",
    );
    ledger.check_ok(
        "3.24.3:ordered",
        out.slots[0].l <= out.slots[0].m && out.slots[0].m <= out.slots[0].u,
        "aggregation preserves the breakpoint order",
    );
    ledger.check(
        "3.24.3:centroid",
        vec![out.slots[0].centroid()],
        vec![(oracle(|t| t.l) + oracle(|t| t.m) + oracle(|t| t.u)) / 3.0],
        EXACT_TOL,
        "centroid defuzzification of the aggregate",
    );
}

fn renewable_triangular(ledger: &mut Ledger) {
    // P1's (T, I, F) TFNs at the values good/excellent; weights vs excellent
    // come from the index distance over four levels: w(good) = 2/3
    let values = vec![
        TriSignatureDegree::new(vec![
            tri(0.5, 0.7, 0.9),
            tri(0.1, 0.2, 0.4),
            tri(0.0, 0.1, 0.3),
        ])
        .unwrap(),
        TriSignatureDegree::new(vec![
            tri(0.2, 0.4, 0.7),
            tri(0.2, 0.3, 0.5),
            tri(0.1, 0.2, 0.5),
        ])
        .unwrap(),
    ];
    let weights = [2.0 / 3.0, 1.0];
    let out = triangular_aggregate(&values, &weights).unwrap();
    let oracle = |slot: usize, pick: fn(&TriangularNumber) -> f64| {
        values
            .iter()
            .zip(weights)
            .map(|(v, w)| w * pick(&v.slots[slot]))
            .sum::<f64>()
            / weights.iter().sum::<f64>()
    };
    ledger.check(
        "3.24.4:truth",
        vec![out.slots[0].l, out.slots[0].m, out.slots[0].u],
        vec![oracle(0, |t| t.l), oracle(0, |t| t.m), oracle(0, |t| t.u)],
        EXACT_TOL,
        "truth TFN aggregated toward the excellent target",
    );
    ledger.check(
        "3.24.4:centroids",
        vec![
            out.slots[0].centroid(),
            out.slots[1].centroid(),
            out.slots[2].centroid(),
        ],
        vec![
            (oracle(0, |t| t.l) + oracle(0, |t| t.m) + oracle(0, |t| t.u)) / 3.0,
            (oracle(1, |t| t.l) + oracle(1, |t| t.m) + oracle(1, |t| t.u)) / 3.0,
            (oracle(2, |t| t.l) + oracle(2, |t| t.m) + oracle(2, |t| t.u)) / 3.0,
        ],
        EXACT_TOL,
        "componentwise centroid summary of (T, I, F)",
    );
}

fn trap(a: f64, b: f64, c: f64, d: f64) -> TrapezoidalNumber {
    TrapezoidalNumber::new(a, b, c, d).unwrap()
}

fn supplier_trapezoidal(ledger: &mut Ledger) {
    let profile = TrapTripleDegree {
        t: trap(0.6, 0.7, 0.9, 1.0),
        i: trap(0.1, 0.2, 0.2, 0.3),
        f: trap(0.0, 0.0, 0.1, 0.2),
    };
    ledger.check(
        "3.25.3:defuzzified",
        vec![profile.t.mean(), profile.i.mean(), profile.f.mean()],
        vec![0.8, 0.2, 0.075],
        EXACT_TOL,
        "S(T), S(I), S(F) for supplier A at the high level",
    );
    let bundle = TrapBundle::new(
        FiniteUniverse::new(vec!["SA"]).unwrap(),
        vec!["low", "medium", "high"],
        ContradictionTable::from_scalar_matrix(vec![
            vec![0.0, 0.2, 0.7],
            vec![0.2, 0.0, 0.3],
            vec![0.7, 0.3, 0.0],
        ])
        .unwrap(),
        FusionRule::Mean,
        vec![profile; 3],
    )
    .unwrap();
    let grade = trapezoidal_inclusion(&bundle, "SA", "high", 0.5).unwrap();
    // the matrix row gives lambda = (0 + 0.3 + 0.7)/3 = 1/3, not the printed
    // 11/30, so the grade is 89/120 rather than 179/240
    ledger.check_erratum(
        "3.25.3:lambda",
        vec![grade.lambda],
        vec![11.0 / 30.0],
        PRINT_TOL,
        "lambda(high) from the printed matrix is 1/3",
    );
    ledger.check_erratum(
        "3.25.3:grade",
        vec![grade.clipped],
        vec![179.0 / 240.0],
        PRINT_TOL,
        "formula value 89/120 with lambda = 1/3",
    );
    ledger.check(
        "3.25.3:formula_value",
        vec![grade.clipped],
        vec![89.0 / 120.0],
        1e-12,
        "recomputed inclusion grade",
    );
}

fn cardio_trapezoidal(ledger: &mut Ledger) {
    let bundle = TrapBundle::new(
        FiniteUniverse::new(vec!["P1", "P2"]).unwrap(),
        vec!["low", "moderate", "high"],
        ContradictionTable::from_scalar_matrix(vec![
            vec![0.0, 0.5, 0.9],
            vec![0.5, 0.0, 0.4],
            vec![0.9, 0.4, 0.0],
        ])
        .unwrap(),
        FusionRule::Mean,
        vec![
            TrapTripleDegree {
                t: trap(0.5, 0.6, 0.8, 0.9),
                i: trap(0.1, 0.2, 0.2, 0.3),
                f: trap(0.1, 0.2, 0.3, 0.4),
            },
            TrapTripleDegree {
                t: trap(0.5, 0.6, 0.8, 0.9),
                i: trap(0.1, 0.2, 0.2, 0.3),
                f: trap(0.1, 0.2, 0.3, 0.4),
            },
            TrapTripleDegree {
                t: trap(0.5, 0.6, 0.8, 0.9),
                i: trap(0.1, 0.2, 0.2, 0.3),
                f: trap(0.1, 0.2, 0.3, 0.4),
            },
            TrapTripleDegree {
                t: trap(0.1, 0.2, 0.3, 0.4),
                i: trap(0.2, 0.3, 0.4, 0.5),
                f: trap(0.5, 0.6, 0.7, 0.8),
            },
            TrapTripleDegree {
                t: trap(0.1, 0.2, 0.3, 0.4),
                i: trap(0.2, 0.3, 0.4, 0.5),
                f: trap(0.5, 0.6, 0.7, 0.8),
            },
            TrapTripleDegree {
                t: trap(0.1, 0.2, 0.3, 0.4),
                i: trap(0.2, 0.3, 0.4, 0.5),
                f: trap(0.5, 0.6, 0.7, 0.8),
            },
        ],
    )
    .unwrap();
    let grade = trapezoidal_inclusion(&bundle, "P1", "low", 0.5).unwrap();
    ledger.check(
        "3.25.4:lambda",
        vec![grade.lambda],
        vec![7.0 / 15.0],
        EXACT_TOL,
        "lambda(low) = (0 + 0.5 + 0.9)/3",
    );
    ledger.check(
        "3.25.4:grade",
        vec![grade.clipped],
        vec![187.0 / 300.0],
        1e-12,
        "inclusion grade of P1 in the low-risk set, exact to f64 rounding",
    );
}

fn wind_nonstandard(ledger: &mut Ledger) {
    let values = [DualDegree::new(0.94, 1.0), DualDegree::new(0.68, -1.0)];
    let out = nonstandard_aggregate(&values, &[0.30]).unwrap();
    ledger.check(
        "3.26.4:dual",
        vec![out.standard, out.infinitesimal],
        vec![0.758, -0.4],
        EXACT_TOL,
        "DCF-weighted blend of the wind project's two criteria",
    );
    ledger.check(
        "3.26.4:standard_part",
        vec![standard_part(&out)],
        vec![0.758],
        EXACT_TOL,
        "classical aggregate after dropping the infinitesimal",
    );
}

fn refined_bundle(rows: Vec<Vec<Vec<f64>>>) -> uset_core::plithogenic::PlithogenicBundle {
    super::vector_bundle(
        vec!["a", "b"],
        vec!["v0", "v1", "v2"],
        vec![
            vec![0.0, 0.2, 0.3],
            vec![0.2, 0.0, 0.1],
            vec![0.3, 0.1, 0.0],
        ],
        rows,
        uset_core::degree::Band::UNIT,
    )
}

fn triage_refined(ledger: &mut Ledger) {
    let sig = RefinedSignature::new(2, 1, 1).unwrap();
    let bundle = refined_bundle(vec![
        vec![
            vec![0.80, 0.75, 0.10, 0.05],
            vec![0.60, 0.55, 0.20, 0.10],
            vec![0.70, 0.65, 0.15, 0.12],
        ],
        vec![
            vec![0.45, 0.40, 0.25, 0.30],
            vec![0.50, 0.48, 0.22, 0.28],
            vec![0.60, 0.50, 0.25, 0.20],
        ],
    ]);
    let agg_a = aggregate_dominant(&bundle, "a", "v0").unwrap();
    let deg_a = agg_a.as_vector().unwrap();
    ledger.check(
        "3.27.3:aggregate_pa",
        deg_a.components().to_vec(),
        vec![0.708, 0.658, 0.146, 0.086],
        PRINT_TOL,
        "imaging-dominant refined degree of patient A",
    );
    let phi_a = refined_scalarize(deg_a, sig, (0.5, 0.2, 0.3)).unwrap();
    let agg_b = aggregate_dominant(&bundle, "b", "v0").unwrap();
    let phi_b = refined_scalarize(agg_b.as_vector().unwrap(), sig, (0.5, 0.2, 0.3)).unwrap();
    ledger.check(
        "3.27.3:phi",
        vec![phi_a, phi_b],
        vec![0.787, 0.613],
        PRINT_TOL,
        "scalarized support ranks patient A above patient B",
    );
}

fn esg_refined(ledger: &mut Ledger) {
    let sig = RefinedSignature::new(2, 1, 1).unwrap();
    let bundle = refined_bundle(vec![
        vec![
            vec![0.85, 0.80, 0.10, 0.05],
            vec![0.75, 0.70, 0.12, 0.08],
            vec![0.60, 0.55, 0.15, 0.12],
        ],
        vec![
            vec![0.60, 0.55, 0.20, 0.20],
            vec![0.80, 0.78, 0.10, 0.10],
            vec![0.75, 0.70, 0.12, 0.12],
        ],
    ]);
    let phi = |x: &str| {
        let agg = aggregate_dominant(&bundle, x, "v0").unwrap();
        refined_scalarize(agg.as_vector().unwrap(), sig, (0.5, 0.2, 0.3)).unwrap()
    };
    ledger.check(
        "3.27.4:phi",
        vec![phi("a"), phi("b")],
        vec![0.814, 0.770],
        PRINT_TOL,
        "ESG-dominant scalarization prefers supplier A",
    );
}

fn drug_subset(ledger: &mut Ledger) {
    let image = vec![
        DegreeVector::new(vec![0.10, 0.30]).unwrap(),
        DegreeVector::new(vec![0.15, 0.35]).unwrap(),
    ];
    let diags = subset_valued_validate(&[("DrugA", "Trial", &image)]);
    ledger.check_ok(
        "3.28.4:valid",
        diags.is_empty(),
        "trial image is nonempty with uniform arity",
    );
    let reduced = subset_reduce(&image, ReduceStrategy::Mean).unwrap();
    ledger.check(
        "3.28.4:mean",
        reduced.components().to_vec(),
        vec![0.125, 0.325],
        EXACT_TOL,
        "componentwise mean of the two trial risk profiles",
    );
}

fn transport_picture(ledger: &mut Ledger) {
    let degree = picture_construct(&[0.7, 0.1], 0.1).unwrap();
    ledger.check(
        "3.29.5:sum",
        vec![degree.main()[0] + degree.main()[1] + degree.eta()],
        vec![0.9],
        EXACT_TOL,
        "supportive attitude triple satisfies the picture bound",
    );
    // the (mu, eta, nu) triple embeds as a t = 2 picture plithogenic entry
    // and projects back unchanged
    let pfs = PictureFuzzySet {
        universe: vec!["p1".into()],
        triples: vec![[0.7, 0.1, 0.1]],
    };
    let round = picture_project_fuzzy(&picture_embed_fuzzy(&pfs).unwrap()).unwrap();
    ledger.check_ok(
        "3.29.5:round_trip",
        round == pfs,
        "embed and project are mutually inverse on the policy data",
    );
    ledger.check_ok(
        "3.29.5:violation_detected",
        picture_construct(&[0.6, 0.5], 0.2).is_err(),
        "a triple summing above 1 is rejected for t = 2",
    );
}

fn phone_picture(ledger: &mut Ledger) {
    let triples = [
        [0.8, 0.1, 0.05],
        [0.4, 0.3, 0.2],
        [0.5, 0.3, 0.1],
        [0.7, 0.1, 0.1],
        [0.3, 0.5, 0.1],
        [0.4, 0.4, 0.1],
    ];
    let all_valid = triples
        .iter()
        .all(|[a, b, e]| picture_construct(&[*a, *b], *e).is_ok());
    ledger.check_ok(
        "3.29.6:valid",
        all_valid,
        "every sentiment triple satisfies the t = 2 picture bound",
    );
}

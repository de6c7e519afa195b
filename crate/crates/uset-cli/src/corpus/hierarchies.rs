//! Plithogenic bundle validation, m-polar contexts, complex aggregation,
//! superhyper reductions, and the staged type-n / iterated pipelines.

use super::{index_distance_matrix, Ledger, EXACT_TOL, PHASE_TOL, PRINT_TOL};

use uset_core::classic::FiniteUniverse;
use uset_core::degree::{Band, ComplexDegree, DegreeVector};
use uset_core::hierarchy::{
    forest_aggregate, mpolar_aggregate, mpolar_weights, nested_reduce, staged_aggregate,
    superhyper_aggregate, tree_aggregate, AttributeForest, AttributeTree, LabelScale, LevelSpec,
    MPolarSystem, NestedDegreeSet, PoleSystem, StagedTable, TreeNode,
};
use uset_core::plithogenic::{
    aggregate_dominant, validate_bundle, AppurtenanceTable, AttributeSystem, ContradictionTable,
    FusionRule, Payload, PayloadKind, PlithogenicBundle,
};

pub fn cases(ledger: &mut Ledger) {
    rental_bundle(ledger);
    diet_bundle(ledger);
    car_bundle(ledger);
    hiring_mpolar(ledger);
    vendor_mpolar(ledger);
    intersection_mpolar(ledger);
    ev_charging_complex(ledger);
    imaging_complex(ledger);
    ecommerce_complex(ledger);
    hospital_superhyper(ledger);
    trip_superhyper(ledger);
    supplier_superhyper(ledger);
    treatment_type2(ledger);
    logistics_type3(ledger);
    admission_type2(ledger);
    hvac_imps(ledger);
    fraud_imps(ledger);
    transit_imps(ledger);
    data_engineer_tree(ledger);
    pneumonia_tree(ledger);
    supplier_tree(ledger);
    smart_city_forest(ledger);
    readmission_forest(ledger);
    portfolio_forest(ledger);
}

fn check_valid(ledger: &mut Ledger, case: &str, bundle: &PlithogenicBundle, note: &str) {
    let violations = validate_bundle(bundle);
    ledger.check_ok(case, violations.is_empty(), note);
}

fn rental_bundle(ledger: &mut Ledger) {
    let bundle = super::vector_bundle(
        vec!["A1", "A2", "A3"],
        vec!["low_rent", "near_station", "large_space"],
        vec![
            vec![0.0, 0.30, 0.70],
            vec![0.30, 0.0, 0.50],
            vec![0.70, 0.50, 0.0],
        ],
        vec![
            vec![
                vec![0.85, 0.05, 0.10],
                vec![0.90, 0.05, 0.10],
                vec![0.40, 0.20, 0.60],
            ],
            vec![
                vec![0.60, 0.15, 0.35],
                vec![0.50, 0.20, 0.50],
                vec![0.75, 0.10, 0.25],
            ],
            vec![
                vec![0.45, 0.25, 0.55],
                vec![0.80, 0.10, 0.20],
                vec![0.55, 0.15, 0.45],
            ],
        ],
        Band::UNIT,
    );
    check_valid(ledger, "3.1.2:valid", &bundle, "rental contradiction matrix is a DCF");
}

fn diet_bundle(ledger: &mut Ledger) {
    let bundle = super::vector_bundle(
        vec!["p1", "p2", "p3"],
        vec!["ketogenic", "low_fat", "vegetarian"],
        vec![
            vec![0.0, 0.60, 0.90],
            vec![0.60, 0.0, 0.20],
            vec![0.90, 0.20, 0.0],
        ],
        vec![
            vec![
                vec![0.70, 0.10, 0.30],
                vec![0.40, 0.20, 0.60],
                vec![0.30, 0.20, 0.70],
            ],
            vec![
                vec![0.20, 0.20, 0.80],
                vec![0.65, 0.15, 0.35],
                vec![0.55, 0.15, 0.45],
            ],
            vec![
                vec![0.50, 0.25, 0.50],
                vec![0.45, 0.20, 0.55],
                vec![0.75, 0.10, 0.25],
            ],
        ],
        Band::UNIT,
    );
    check_valid(ledger, "3.1.3:valid", &bundle, "diet-style DCF and DAF");
}

fn car_bundle(ledger: &mut Ledger) {
    let bundle = super::vector_bundle(
        vec!["C1", "C2", "C3"],
        vec!["electric", "hybrid", "gasoline"],
        vec![
            vec![0.0, 0.30, 1.00],
            vec![0.30, 0.0, 0.60],
            vec![1.00, 0.60, 0.0],
        ],
        vec![
            vec![
                vec![0.90, 0.05, 0.10],
                vec![0.70, 0.10, 0.30],
                vec![0.10, 0.20, 0.90],
            ],
            vec![
                vec![0.40, 0.20, 0.60],
                vec![0.80, 0.10, 0.20],
                vec![0.35, 0.20, 0.65],
            ],
            vec![
                vec![0.20, 0.15, 0.80],
                vec![0.50, 0.20, 0.50],
                vec![0.85, 0.05, 0.15],
            ],
        ],
        Band::UNIT,
    );
    check_valid(ledger, "3.1.4:valid", &bundle, "powertrain DCF with a fully opposed pair");
}

fn scalar(x: f64) -> DegreeVector {
    DegreeVector::scalar(x).unwrap()
}

fn mpolar(
    universe: Vec<&str>,
    values: Vec<&str>,
    value_matrix: Vec<Vec<f64>>,
    poles: Vec<&str>,
    pole_matrix: Vec<Vec<f64>>,
    rows: Vec<Vec<f64>>,
) -> MPolarSystem {
    let table = rows
        .into_iter()
        .map(|r| r.into_iter().map(scalar).collect())
        .collect();
    MPolarSystem::new(
        FiniteUniverse::new(universe).unwrap(),
        values,
        ContradictionTable::from_scalar_matrix(value_matrix).unwrap(),
        PoleSystem::new(
            poles,
            ContradictionTable::from_scalar_matrix(pole_matrix).unwrap(),
        )
        .unwrap(),
        FusionRule::Mean,
        table,
    )
    .unwrap()
}

fn hiring_mpolar(ledger: &mut Ledger) {
    let sys = mpolar(
        vec!["c1", "c2", "c3"],
        vec!["junior", "mid", "senior"],
        vec![
            vec![0.0, 0.30, 0.80],
            vec![0.30, 0.0, 0.40],
            vec![0.80, 0.40, 0.0],
        ],
        vec!["pro", "neutral", "contra"],
        vec![
            vec![0.0, 0.20, 1.00],
            vec![0.20, 0.0, 0.20],
            vec![1.00, 0.20, 0.0],
        ],
        vec![
            vec![0.60, 0.30, 0.10],
            vec![0.70, 0.20, 0.10],
            vec![0.40, 0.20, 0.40],
            vec![0.30, 0.20, 0.50],
            vec![0.50, 0.30, 0.20],
            vec![0.80, 0.10, 0.10],
            vec![0.20, 0.30, 0.50],
            vec![0.40, 0.30, 0.30],
            vec![0.60, 0.20, 0.20],
        ],
    );
    let w = mpolar_weights(&sys, "mid", "senior", "pro").unwrap();
    ledger.check(
        "3.2.3:weights",
        w,
        vec![0.60, 0.48, 0.0],
        EXACT_TOL,
        "compatibility weights for (mid | senior, pro)",
    );
    let mid = mpolar_aggregate(&sys, "c1", "mid", "senior", "pro").unwrap();
    let senior = mpolar_aggregate(&sys, "c1", "senior", "senior", "pro").unwrap();
    ledger.check(
        "3.2.3:aggregates",
        vec![mid.get(0), senior.get(0)],
        vec![0.478, 0.311],
        PRINT_TOL,
        "candidate c1 at mid (0.516/1.08) and senior (0.56/1.8)",
    );
}

fn vendor_mpolar(ledger: &mut Ledger) {
    let sys = mpolar(
        vec!["v1", "v2"],
        vec!["low_cost", "fast_delivery", "high_reliability"],
        vec![
            vec![0.0, 0.50, 0.60],
            vec![0.50, 0.0, 0.20],
            vec![0.60, 0.20, 0.0],
        ],
        vec!["benefit", "neutral", "risk", "compliance"],
        vec![
            vec![0.0, 0.20, 0.90, 0.10],
            vec![0.20, 0.0, 0.20, 0.20],
            vec![0.90, 0.20, 0.0, 0.80],
            vec![0.10, 0.20, 0.80, 0.0],
        ],
        vec![
            vec![0.65, 0.15, 0.30, 0.40],
            vec![0.70, 0.10, 0.20, 0.50],
            vec![0.60, 0.20, 0.10, 0.90],
            // v2 rows are irrelevant for the printed chain
            vec![0.50, 0.20, 0.30, 0.40],
            vec![0.55, 0.15, 0.25, 0.45],
            vec![0.60, 0.10, 0.20, 0.50],
        ],
    );
    let w = mpolar_weights(&sys, "fast_delivery", "high_reliability", "benefit").unwrap();
    ledger.check(
        "3.2.4:weights",
        w,
        vec![0.80, 0.64, 0.08, 0.72],
        EXACT_TOL,
        "four-pole weights for fast_delivery",
    );
    let fast = mpolar_aggregate(&sys, "v1", "fast_delivery", "high_reliability", "benefit").unwrap();
    let rel =
        mpolar_aggregate(&sys, "v1", "high_reliability", "high_reliability", "benefit").unwrap();
    ledger.check(
        "3.2.4:aggregates",
        vec![fast.get(0), rel.get(0)],
        vec![0.4464, 0.5643],
        PRINT_TOL,
        "vendor v1 at fast_delivery (1.000/2.24) and high_reliability (1.58/2.8)",
    );
}

fn intersection_mpolar(ledger: &mut Ledger) {
    let sys = mpolar(
        vec!["A", "B"],
        vec!["safety", "throughput", "cost"],
        vec![
            vec![0.0, 0.50, 0.30],
            vec![0.50, 0.0, 0.40],
            vec![0.30, 0.40, 0.0],
        ],
        vec!["pro", "neutral", "contra"],
        vec![
            vec![0.0, 0.20, 1.00],
            vec![0.20, 0.0, 0.20],
            vec![1.00, 0.20, 0.0],
        ],
        vec![
            vec![0.85, 0.10, 0.05],
            vec![0.60, 0.20, 0.20],
            vec![0.55, 0.25, 0.20],
            vec![0.70, 0.20, 0.10],
            vec![0.80, 0.10, 0.10],
            vec![0.40, 0.30, 0.30],
        ],
    );
    let throughput = mpolar_aggregate(&sys, "B", "throughput", "safety", "pro").unwrap();
    let safety = mpolar_aggregate(&sys, "A", "safety", "safety", "pro").unwrap();
    ledger.check(
        "3.2.5:aggregates",
        vec![throughput.get(0), safety.get(0)],
        vec![0.489, 0.517],
        PRINT_TOL,
        "design B at throughput (0.44/0.90), design A at safety (0.93/1.8)",
    );
}

fn complex_bundle(
    universe: Vec<&str>,
    values: Vec<&str>,
    channels: usize,
    pairs: Vec<(usize, usize, Vec<f64>)>,
    entries: Vec<Vec<Vec<(f64, f64)>>>,
) -> PlithogenicBundle {
    let attr = AttributeSystem::new("attr", values).unwrap();
    let mut table = ContradictionTable::zero(attr.len(), channels);
    for (i, j, v) in pairs {
        table.set_pair(i, j, v).unwrap();
    }
    let arity = entries[0][0].len();
    let payloads = entries
        .into_iter()
        .flatten()
        .map(|comps| {
            Payload::Complex(
                comps
                    .into_iter()
                    .map(|(m, deg)| ComplexDegree::from_polar_deg(m, deg).unwrap())
                    .collect(),
            )
        })
        .collect();
    let app = AppurtenanceTable::new(
        FiniteUniverse::new(universe).unwrap(),
        attr.len(),
        PayloadKind::Complex { arity },
        payloads,
    )
    .unwrap();
    PlithogenicBundle::new(attr, app, table, FusionRule::Mean, None).unwrap()
}

fn ev_charging_complex(ledger: &mut Ledger) {
    let bundle = complex_bundle(
        vec!["EV1"],
        vec!["offpeak", "shoulder", "peak"],
        2,
        vec![(0, 2, vec![0.8, 0.5]), (1, 2, vec![0.4, 0.2])],
        vec![vec![
            vec![(0.60, 0.0), (0.50, 90.0)],
            vec![(0.80, 30.0), (0.70, 60.0)],
            vec![(0.40, 60.0), (0.30, 90.0)],
        ]],
    );
    let out = aggregate_dominant(&bundle, "EV1", "peak").unwrap();
    let gamma = match out {
        Payload::Complex(v) => v,
        _ => unreachable!(),
    };
    ledger.check(
        "3.3.2:moduli",
        vec![gamma[0].modulus(), gamma[1].modulus()],
        vec![0.5329, 0.4547],
        PRINT_TOL,
        "grid-benefit and stability moduli under peak dominance",
    );
    ledger.check(
        "3.3.2:phase1",
        vec![gamma[0].argument_deg()],
        vec![34.99],
        PHASE_TOL,
        "grid-benefit phase",
    );
    // the printed rectangular form and the second phase do not match the
    // example's own weighted-mean chain
    ledger.check_erratum(
        "3.3.2:gamma1_rect",
        vec![gamma[0].re(), gamma[0].im()],
        vec![0.2373, 0.4778],
        PRINT_TOL,
        "printed rectangular form is inconsistent; the polar form matches the chain",
    );
    ledger.check_erratum(
        "3.3.2:phase2",
        vec![gamma[1].argument_deg()],
        vec![74.83],
        PHASE_TOL,
        "recomputed stability phase is 74.76 degrees (atan2(0.4387, 0.1195))",
    );
}

fn imaging_complex(ledger: &mut Ledger) {
    let bundle = complex_bundle(
        vec!["A"],
        vec!["CT", "US", "MRI"],
        2,
        vec![(0, 2, vec![0.9, 0.2]), (1, 2, vec![0.0, 0.6])],
        vec![vec![
            vec![(0.65, 10.0)],
            vec![(0.50, 70.0)],
            vec![(0.85, 20.0)],
        ]],
    );
    let out = aggregate_dominant(&bundle, "A", "MRI").unwrap();
    let gamma = match out {
        Payload::Complex(v) => v,
        _ => unreachable!(),
    };
    ledger.check(
        "3.3.3:modulus",
        vec![gamma[0].modulus()],
        vec![0.6420],
        PRINT_TOL,
        "diagnostic confidence under MRI dominance",
    );
    ledger.check(
        "3.3.3:phase",
        vec![gamma[0].argument_deg()],
        vec![29.06],
        PHASE_TOL,
        "confidence phase",
    );
}

fn ecommerce_complex(ledger: &mut Ledger) {
    let bundle = complex_bundle(
        vec!["LaptopA"],
        vec!["budget", "balanced", "premium"],
        2,
        vec![(0, 1, vec![0.4, 0.6]), (2, 1, vec![0.5, 0.2])],
        vec![vec![
            vec![(0.55, 15.0), (0.60, 80.0)],
            vec![(0.75, 25.0), (0.65, 50.0)],
            vec![(0.70, 35.0), (0.55, 40.0)],
        ]],
    );
    let out = aggregate_dominant(&bundle, "LaptopA", "balanced").unwrap();
    let gamma = match out {
        Payload::Complex(v) => v,
        _ => unreachable!(),
    };
    ledger.check(
        "3.3.4:moduli",
        vec![gamma[0].modulus(), gamma[1].modulus()],
        vec![0.6834, 0.5883],
        PRINT_TOL,
        "sentiment and delivery moduli under balanced dominance",
    );
    ledger.check(
        "3.3.4:phases",
        vec![gamma[0].argument_deg(), gamma[1].argument_deg()],
        vec![26.22, 53.99],
        PHASE_TOL,
        "sentiment and delivery phases",
    );
}

fn leaf(components: &[f64]) -> NestedDegreeSet {
    NestedDegreeSet::Leaf(DegreeVector::new(components.to_vec()).unwrap())
}

fn hospital_superhyper(ledger: &mut Ledger) {
    let mut table = ContradictionTable::zero(3, 1);
    table.set_pair(0, 2, vec![0.7]).unwrap();
    table.set_pair(1, 2, vec![0.3]).unwrap();
    table.set_pair(0, 1, vec![0.4]).unwrap();
    let per_value = vec![
        (
            "low",
            NestedDegreeSet::Set(vec![leaf(&[0.30, 0.50, 0.40]), leaf(&[0.40, 0.40, 0.50])]),
        ),
        (
            "moderate",
            NestedDegreeSet::Set(vec![leaf(&[0.50, 0.30, 0.40]), leaf(&[0.60, 0.30, 0.30])]),
        ),
        (
            "high",
            NestedDegreeSet::Set(vec![leaf(&[0.80, 0.10, 0.10]), leaf(&[0.70, 0.20, 0.20])]),
        ),
    ];
    let out = superhyper_aggregate(&per_value, &table, FusionRule::Mean, "high").unwrap();
    ledger.check(
        "3.4.2:aggregate",
        out.components().to_vec(),
        vec![0.620, 0.2475, 0.265],
        PRINT_TOL,
        "team-of-teams reduction under high-risk dominance",
    );
}

// the printed 0.5235 is the example's quotient, not an approximation of pi/6
#[allow(clippy::approx_constant)]
fn trip_superhyper(ledger: &mut Ledger) {
    let free = NestedDegreeSet::Set(vec![
        NestedDegreeSet::Set(vec![leaf(&[0.90]), leaf(&[0.80])]),
        NestedDegreeSet::Set(vec![leaf(&[0.85]), leaf(&[0.75])]),
    ]);
    ledger.check(
        "3.4.3:inner",
        vec![nested_reduce(&free).unwrap().get(0)],
        vec![0.825],
        EXACT_TOL,
        "nested scenario reduction for the free congestion level",
    );
    let mut table = ContradictionTable::zero(3, 1);
    table.set_pair(0, 2, vec![0.8]).unwrap();
    table.set_pair(1, 2, vec![0.5]).unwrap();
    table.set_pair(0, 1, vec![0.4]).unwrap();
    let per_value = vec![
        ("free", free),
        (
            "moderate",
            NestedDegreeSet::Set(vec![
                NestedDegreeSet::Set(vec![leaf(&[0.70]), leaf(&[0.60])]),
                NestedDegreeSet::Set(vec![leaf(&[0.75]), leaf(&[0.55])]),
            ]),
        ),
        (
            "heavy",
            NestedDegreeSet::Set(vec![
                NestedDegreeSet::Set(vec![leaf(&[0.50]), leaf(&[0.30])]),
                NestedDegreeSet::Set(vec![leaf(&[0.45]), leaf(&[0.35])]),
            ]),
        ),
    ];
    let out = superhyper_aggregate(&per_value, &table, FusionRule::Mean, "heavy").unwrap();
    ledger.check(
        "3.4.3:aggregate",
        vec![out.get(0)],
        vec![0.5235],
        PRINT_TOL,
        "trip bundle feasibility under heavy congestion (0.890/1.7)",
    );
}

fn supplier_superhyper(ledger: &mut Ledger) {
    let mut table = ContradictionTable::zero(3, 1);
    table.set_pair(0, 1, vec![0.4]).unwrap();
    table.set_pair(2, 1, vec![0.3]).unwrap();
    table.set_pair(0, 2, vec![0.7]).unwrap();
    let per_value = vec![
        (
            "single",
            NestedDegreeSet::Set(vec![
                NestedDegreeSet::Set(vec![
                    leaf(&[0.70, 0.20, 0.30]),
                    leaf(&[0.60, 0.30, 0.30]),
                ]),
                NestedDegreeSet::Set(vec![leaf(&[0.75, 0.20, 0.25])]),
            ]),
        ),
        (
            "dual",
            NestedDegreeSet::Set(vec![
                NestedDegreeSet::Set(vec![
                    leaf(&[0.80, 0.15, 0.15]),
                    leaf(&[0.78, 0.15, 0.12]),
                ]),
                NestedDegreeSet::Set(vec![leaf(&[0.75, 0.18, 0.18])]),
            ]),
        ),
        (
            "multi",
            NestedDegreeSet::Set(vec![
                NestedDegreeSet::Set(vec![
                    leaf(&[0.72, 0.20, 0.18]),
                    leaf(&[0.70, 0.22, 0.18]),
                ]),
                NestedDegreeSet::Set(vec![leaf(&[0.68, 0.25, 0.20])]),
            ]),
        ),
    ];
    let single = nested_reduce(&per_value[0].1).unwrap();
    ledger.check(
        "3.4.4:inner_single",
        single.components().to_vec(),
        vec![0.70, 0.225, 0.275],
        EXACT_TOL,
        "clustered centroid of the single-sourcing value",
    );
    let out = superhyper_aggregate(&per_value, &table, FusionRule::Mean, "dual").unwrap();
    ledger.check(
        "3.4.4:aggregate",
        out.components().to_vec(),
        vec![0.7298, 0.2004, 0.1980],
        PRINT_TOL,
        "portfolio reduction under dual-sourcing dominance (1.6765/2.3)",
    );
}

fn distance_level(values: Vec<&str>, dominant: &str) -> LevelSpec {
    let matrix = index_distance_matrix(values.len());
    LevelSpec::new(
        values,
        ContradictionTable::from_scalar_matrix(matrix).unwrap(),
        dominant,
        FusionRule::Mean,
    )
    .unwrap()
}

fn level_table(rows: &[Vec<Vec<f64>>]) -> StagedTable {
    StagedTable::Level(
        rows.iter()
            .map(|row| {
                StagedTable::Level(
                    row.iter()
                        .map(|comps| StagedTable::Leaf(DegreeVector::new(comps.clone()).unwrap()))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn treatment_type2(ledger: &mut Ledger) {
    let pipeline = vec![
        distance_level(vec!["L", "M", "H"], "H"),
        distance_level(vec!["poor", "fair", "good"], "good"),
    ];
    let table = level_table(&[
        vec![
            vec![0.35, 0.25, 0.60],
            vec![0.55, 0.20, 0.45],
            vec![0.70, 0.15, 0.35],
        ],
        vec![
            vec![0.45, 0.25, 0.55],
            vec![0.65, 0.18, 0.40],
            vec![0.82, 0.12, 0.28],
        ],
        vec![
            vec![0.52, 0.20, 0.48],
            vec![0.78, 0.14, 0.26],
            vec![0.90, 0.10, 0.18],
        ],
    ]);
    let out = staged_aggregate(&pipeline, &table).unwrap();
    ledger.check(
        "3.7.2:aggregate",
        out.components().to_vec(),
        vec![0.8278, 0.1222, 0.2444],
        PRINT_TOL,
        "two-level neutrosophic therapy evaluation under high intensity",
    );
}

fn logistics_type3(ledger: &mut Ledger) {
    // bottom stage: weather fold per delivery mode
    let weather = vec![distance_level(vec!["clear", "rain", "storm"], "clear")];
    let mode_rows = [
        vec![0.80, 0.60, 0.25],
        vec![0.90, 0.75, 0.30],
        vec![0.85, 0.55, 0.20],
    ];
    let stage1: Vec<f64> = mode_rows
        .iter()
        .map(|row| {
            let table = StagedTable::Level(
                row.iter()
                    .map(|&x| StagedTable::Leaf(DegreeVector::scalar(x).unwrap()))
                    .collect(),
            );
            staged_aggregate(&weather, &table).unwrap().get(0)
        })
        .collect();
    ledger.check(
        "3.7.3:stage1",
        stage1,
        vec![0.7333, 0.8500, 0.7500],
        PRINT_TOL,
        "weather-folded reliability per delivery mode (the local row)",
    );

    // upper stages over the printed per-scope matrix; the worked chain's
    // mode weights are (1/2, 1, 0) against air
    let mode_table = ContradictionTable::from_scalar_matrix(vec![
        vec![0.0, 0.5, 0.5],
        vec![0.5, 0.0, 1.0],
        vec![0.5, 1.0, 0.0],
    ])
    .unwrap();
    let pipeline = vec![
        distance_level(vec!["local", "regional", "global"], "global"),
        LevelSpec::new(
            vec!["road", "air", "sea"],
            mode_table,
            "air",
            FusionRule::Mean,
        )
        .unwrap(),
    ];
    let table = level_table(&[
        vec![vec![0.7333], vec![0.8500], vec![0.7500]],
        vec![vec![0.7000], vec![0.8800], vec![0.7200]],
        vec![vec![0.7600], vec![0.9200], vec![0.7800]],
    ]);
    let out = staged_aggregate(&pipeline, &table).unwrap();
    ledger.check(
        "3.7.3:aggregate",
        vec![out.get(0)],
        vec![0.8511],
        PRINT_TOL,
        "three-level reliability under global scope",
    );
}

fn admission_type2(ledger: &mut Ledger) {
    let pipeline = vec![
        distance_level(vec!["L", "B", "I"], "I"),
        distance_level(vec!["poor", "average", "strong"], "strong"),
    ];
    let table = level_table(&[
        vec![vec![0.30, 0.60], vec![0.55, 0.35], vec![0.70, 0.20]],
        vec![vec![0.40, 0.55], vec![0.65, 0.30], vec![0.80, 0.15]],
        vec![vec![0.45, 0.50], vec![0.72, 0.22], vec![0.90, 0.08]],
    ]);
    let out = staged_aggregate(&pipeline, &table).unwrap();
    ledger.check(
        "3.7.4:aggregate",
        out.components().to_vec(),
        vec![0.8100, 0.1511],
        PRINT_TOL,
        "two-level intuitionistic admission evaluation",
    );
}

fn hvac_imps(ledger: &mut Ledger) {
    let pipeline = vec![
        distance_level(vec!["Eco", "Normal", "Turbo"], "Turbo"),
        distance_level(vec!["Mild", "Warm", "Hot"], "Hot"),
    ];
    let table = level_table(&[
        vec![vec![0.85, 0.60], vec![0.75, 0.55], vec![0.65, 0.50]],
        vec![vec![0.70, 0.75], vec![0.60, 0.80], vec![0.50, 0.85]],
        vec![vec![0.55, 0.88], vec![0.45, 0.92], vec![0.35, 0.95]],
    ]);
    let out = staged_aggregate(&pipeline, &table).unwrap();
    ledger.check(
        "3.8.4:aggregate",
        out.components().to_vec(),
        vec![0.4333, 0.9044],
        PRINT_TOL,
        "order-2 cost/comfort evaluation under Turbo dominance",
    );
}

fn fraud_imps(ledger: &mut Ledger) {
    let pipeline = vec![
        distance_level(vec!["Ignore", "Monitor", "Block"], "Block"),
        distance_level(vec!["low", "mid", "high"], "high"),
    ];
    let table = level_table(&[
        vec![vec![0.95, 0.20], vec![0.85, 0.35], vec![0.70, 0.50]],
        vec![vec![0.90, 0.50], vec![0.82, 0.70], vec![0.75, 0.85]],
        vec![vec![0.80, 0.60], vec![0.72, 0.80], vec![0.65, 0.95]],
    ]);
    let out = staged_aggregate(&pipeline, &table).unwrap();
    ledger.check(
        "3.8.5:aggregate",
        out.components().to_vec(),
        vec![0.7066, 0.8667],
        PRINT_TOL,
        "order-2 precision/recall evaluation under Block dominance",
    );
}

fn transit_imps(ledger: &mut Ledger) {
    // the time-of-day micro level has dominant PK in the middle, giving
    // weights (1/2, 1, 1/2)
    let micro = distance_level(vec!["OP", "PK", "LN"], "PK");
    let top = distance_level(vec!["L", "M", "H"], "H");
    let reliability = level_table(&[
        vec![
            vec![0.70, 0.20, 0.30],
            vec![0.55, 0.25, 0.45],
            vec![0.65, 0.22, 0.35],
        ],
        vec![
            vec![0.78, 0.18, 0.25],
            vec![0.68, 0.20, 0.35],
            vec![0.72, 0.18, 0.28],
        ],
        vec![
            vec![0.82, 0.15, 0.22],
            vec![0.80, 0.14, 0.20],
            vec![0.78, 0.16, 0.22],
        ],
    ]);
    let low_crowding = level_table(&[
        vec![
            vec![0.80, 0.15, 0.20],
            vec![0.40, 0.30, 0.60],
            vec![0.75, 0.18, 0.25],
        ],
        vec![
            vec![0.75, 0.18, 0.25],
            vec![0.55, 0.25, 0.45],
            vec![0.70, 0.20, 0.30],
        ],
        vec![
            vec![0.70, 0.22, 0.30],
            vec![0.50, 0.28, 0.50],
            vec![0.65, 0.24, 0.35],
        ],
    ]);
    let pipeline = vec![top, micro];
    let rel = staged_aggregate(&pipeline, &reliability).unwrap();
    ledger.check(
        "3.8.6:reliability",
        rel.components().to_vec(),
        vec![0.7717, 0.1617, 0.2425],
        PRINT_TOL,
        "order-2 reliability under high frequency",
    );
    let low = staged_aggregate(&pipeline, &low_crowding).unwrap();
    ledger.check(
        "3.8.6:low_crowding",
        low.components().to_vec(),
        vec![0.6042, 0.2433, 0.3958],
        PRINT_TOL,
        "order-2 comfort under high frequency",
    );
}

fn hiring_scale() -> LabelScale {
    LabelScale::new(
        vec!["Low", "Med", "High"],
        vec![0.50, 0.70],
        ContradictionTable::from_scalar_matrix(vec![
            vec![0.0, 0.5, 0.8],
            vec![0.5, 0.0, 0.3],
            vec![0.8, 0.3, 0.0],
        ])
        .unwrap(),
        FusionRule::Mean,
    )
    .unwrap()
}

fn tree_leaf(name: &str, label: &str, degree: f64) -> TreeNode {
    TreeNode::Leaf {
        name: name.into(),
        label: label.into(),
        degree,
    }
}

fn node(name: &str, children: Vec<TreeNode>) -> TreeNode {
    TreeNode::Internal {
        name: name.into(),
        children,
    }
}

fn data_engineer_tree(ledger: &mut Ledger) {
    let tree = AttributeTree {
        root: node(
            "Fit",
            vec![
                node(
                    "Technical",
                    vec![
                        tree_leaf("Coding", "High", 0.82),
                        tree_leaf("DataModeling", "Med", 0.68),
                    ],
                ),
                node(
                    "Experience",
                    vec![
                        tree_leaf("Projects", "High", 0.75),
                        tree_leaf("Domain", "Med", 0.55),
                    ],
                ),
                node(
                    "Culture",
                    vec![
                        tree_leaf("Communication", "Med", 0.62),
                        tree_leaf("Teamwork", "High", 0.78),
                    ],
                ),
            ],
        ),
        scale: hiring_scale(),
        dominant: "High".into(),
    };
    let (degree, label) = tree_aggregate(&tree).unwrap();
    ledger.check_erratum(
        "3.19.2:root",
        vec![degree],
        vec![0.72068],
        super::ROUNDING_TOL,
        "the quotient 1.94383/2.7 equals 0.71994, not the printed 0.72068",
    );
    ledger.check_text(
        "3.19.2:label",
        label,
        "High".into(),
        "root degree thresholds to High",
    );
}

fn severity_scale() -> LabelScale {
    LabelScale::new(
        vec!["Mild", "Moderate", "Severe"],
        vec![0.50, 0.70],
        ContradictionTable::from_scalar_matrix(vec![
            vec![0.0, 0.5, 0.85],
            vec![0.5, 0.0, 0.35],
            vec![0.85, 0.35, 0.0],
        ])
        .unwrap(),
        FusionRule::Mean,
    )
    .unwrap()
}

fn pneumonia_tree(ledger: &mut Ledger) {
    let tree = AttributeTree {
        root: node(
            "Severity",
            vec![
                node(
                    "Vitals",
                    vec![
                        tree_leaf("SpO2", "Severe", 0.88),
                        tree_leaf("RespRate", "Moderate", 0.65),
                    ],
                ),
                node(
                    "Imaging",
                    vec![
                        tree_leaf("CXR", "Moderate", 0.70),
                        tree_leaf("CT", "Mild", 0.40),
                    ],
                ),
                node(
                    "Labs",
                    vec![
                        tree_leaf("CRP", "Moderate", 0.60),
                        tree_leaf("WBC", "Severe", 0.75),
                    ],
                ),
            ],
        ),
        scale: severity_scale(),
        dominant: "Severe".into(),
    };
    let (degree, _) = tree_aggregate(&tree).unwrap();
    ledger.check(
        "3.19.3:root",
        vec![degree],
        vec![0.72040],
        super::ROUNDING_TOL,
        "pneumonia severity 1.65692/2.30",
    );
}

fn supplier_scale() -> LabelScale {
    LabelScale::new(
        vec!["Risky", "Acceptable", "Preferred"],
        vec![0.50, 0.70],
        ContradictionTable::from_scalar_matrix(vec![
            vec![0.0, 0.5, 0.85],
            vec![0.5, 0.0, 0.4],
            vec![0.85, 0.4, 0.0],
        ])
        .unwrap(),
        FusionRule::Mean,
    )
    .unwrap()
}

fn supplier_tree(ledger: &mut Ledger) {
    let tree = AttributeTree {
        root: node(
            "Suitability",
            vec![
                node(
                    "Cost",
                    vec![
                        tree_leaf("UnitPrice", "Acceptable", 0.62),
                        tree_leaf("TotalCost", "Preferred", 0.78),
                    ],
                ),
                node(
                    "Quality",
                    vec![
                        tree_leaf("DefectRate", "Preferred", 0.83),
                        tree_leaf("Certifications", "Acceptable", 0.58),
                    ],
                ),
                node(
                    "Delivery",
                    vec![
                        tree_leaf("OnTime", "Acceptable", 0.65),
                        tree_leaf("LeadTime", "Risky", 0.35),
                    ],
                ),
            ],
        ),
        scale: supplier_scale(),
        dominant: "Preferred".into(),
    };
    let (degree, _) = tree_aggregate(&tree).unwrap();
    ledger.check(
        "3.19.4:root",
        vec![degree],
        vec![0.69625],
        super::ROUNDING_TOL,
        "supplier suitability 1.81025/2.6",
    );
}

fn city_scale() -> LabelScale {
    LabelScale::new(
        vec!["Low", "Med", "High"],
        vec![0.50, 0.70],
        ContradictionTable::from_scalar_matrix(vec![
            vec![0.0, 0.5, 0.8],
            vec![0.5, 0.0, 0.3],
            vec![0.8, 0.3, 0.0],
        ])
        .unwrap(),
        FusionRule::Mean,
    )
    .unwrap()
}

fn smart_city_forest(ledger: &mut Ledger) {
    let scale = city_scale();
    let tree = |name: &str, leaves: Vec<TreeNode>| AttributeTree {
        root: node(name, leaves),
        scale: scale.clone(),
        dominant: "High".into(),
    };
    let forest = AttributeForest {
        trees: vec![
            tree(
                "Env",
                vec![
                    tree_leaf("AirQuality", "High", 0.80),
                    tree_leaf("GreenCover", "Med", 0.65),
                    tree_leaf("Noise", "High", 0.75),
                ],
            ),
            tree(
                "Infra",
                vec![
                    tree_leaf("TransitAccess", "Med", 0.68),
                    tree_leaf("RoadConnectivity", "High", 0.77),
                    tree_leaf("Utilities", "Med", 0.60),
                ],
            ),
            tree(
                "Socio",
                vec![
                    tree_leaf("Safety", "Med", 0.70),
                    tree_leaf("CommunitySupport", "High", 0.74),
                    tree_leaf("Rent", "Low", 0.45),
                ],
            ),
        ],
        dominant: "High".into(),
    };
    let score = forest_aggregate(&forest).unwrap();
    ledger.check(
        "3.20.2:forest",
        vec![score],
        vec![0.71451],
        PRINT_TOL,
        "parcel score across the three trees (1.71483/2.4)",
    );
}

fn readmission_forest(ledger: &mut Ledger) {
    let scale = LabelScale::new(
        vec!["Low", "Moderate", "High"],
        vec![0.50, 0.70],
        ContradictionTable::from_scalar_matrix(vec![
            vec![0.0, 0.5, 0.85],
            vec![0.5, 0.0, 0.35],
            vec![0.85, 0.35, 0.0],
        ])
        .unwrap(),
        FusionRule::Mean,
    )
    .unwrap();
    let tree = |name: &str, leaves: Vec<TreeNode>| AttributeTree {
        root: node(name, leaves),
        scale: scale.clone(),
        dominant: "High".into(),
    };
    let forest = AttributeForest {
        trees: vec![
            tree(
                "ClinicalHistory",
                vec![
                    tree_leaf("Comorbidity", "High", 0.82),
                    tree_leaf("PriorAdmissions", "Moderate", 0.66),
                ],
            ),
            tree(
                "CurrentStatus",
                vec![
                    tree_leaf("BPControl", "Moderate", 0.55),
                    tree_leaf("Adherence", "Low", 0.40),
                    tree_leaf("Mobility", "Moderate", 0.60),
                ],
            ),
            tree(
                "SocialDeterminants",
                vec![
                    tree_leaf("Support", "Low", 0.35),
                    tree_leaf("Housing", "Moderate", 0.58),
                    tree_leaf("Access", "Moderate", 0.62),
                ],
            ),
        ],
        dominant: "High".into(),
    };
    let score = forest_aggregate(&forest).unwrap();
    ledger.check(
        "3.20.3:forest",
        vec![score],
        vec![0.64847],
        PRINT_TOL,
        "readmission risk across the three trees",
    );
}

fn portfolio_forest(ledger: &mut Ledger) {
    let scale = LabelScale::new(
        vec!["Undesirable", "Acceptable", "Attractive"],
        vec![0.50, 0.70],
        ContradictionTable::from_scalar_matrix(vec![
            vec![0.0, 0.5, 0.85],
            vec![0.5, 0.0, 0.4],
            vec![0.85, 0.4, 0.0],
        ])
        .unwrap(),
        FusionRule::Mean,
    )
    .unwrap();
    let tree = |name: &str, leaves: Vec<TreeNode>| AttributeTree {
        root: node(name, leaves),
        scale: scale.clone(),
        dominant: "Attractive".into(),
    };
    let forest = AttributeForest {
        trees: vec![
            tree(
                "Risk",
                vec![
                    tree_leaf("Volatility", "Acceptable", 0.68),
                    tree_leaf("Drawdown", "Acceptable", 0.70),
                    tree_leaf("Diversification", "Attractive", 0.74),
                ],
            ),
            tree(
                "Return",
                vec![
                    tree_leaf("CAGR", "Attractive", 0.80),
                    tree_leaf("Sharpe", "Acceptable", 0.66),
                    tree_leaf("Alpha", "Attractive", 0.75),
                ],
            ),
            tree(
                "Liquidity",
                vec![
                    tree_leaf("Turnover", "Acceptable", 0.64),
                    tree_leaf("BidAsk", "Undesirable", 0.40),
                    tree_leaf("Depth", "Acceptable", 0.67),
                ],
            ),
        ],
        dominant: "Attractive".into(),
    };
    let score = forest_aggregate(&forest).unwrap();
    ledger.check(
        "3.20.4:forest",
        vec![score],
        vec![0.70738],
        PRINT_TOL,
        "asset score across risk, return, and liquidity trees",
    );
}

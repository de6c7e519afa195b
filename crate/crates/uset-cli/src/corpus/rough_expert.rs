//! Spherical constraint checks, plithogenic rough and soft-rough chains,
//! Diophantine residuals, soft expert degrees, and the dynamic and
//! probabilistic spaces.

use super::{Ledger, EXACT_TOL};

use uset_core::classic::FiniteUniverse;
use uset_core::constrained::{
    diophantine_check, spherical_validate, t_spherical_validate, DiophantineEntry,
};
use uset_core::degree::{Band, DegreeVector};
use uset_core::plithogenic::ContradictionTable;
use uset_core::roughsoft::{
    expert_degree, fused_relation, plithogenic_lower, plithogenic_upper,
    plithogenic_upper_restricted, soft_rough_lower, soft_rough_upper, ActivatedTriple,
    ExpertContext, ExpertParam, Opinion, PlithogenicRelation, RelationFusion, SoftApproxSpace,
    SoftCombiner,
};
use uset_core::temporal::{
    aggregate_profile, blend, expectation, snapshot, BlendSpec, ScenarioSpace, TimeIndexedBundle,
};
use uset_core::plithogenic::FusionRule;

pub fn cases(ledger: &mut Ledger) {
    machine_state_spherical(ledger);
    air_quality_spherical(ledger);
    diabetes_spherical(ledger);
    t_spherical_suppliers(ledger);
    icu_rough(ledger);
    credit_rough(ledger);
    batch_rough(ledger);
    supplier_soft_rough(ledger);
    smartphone_diophantine(ledger);
    sustainable_supplier_expert(ledger);
    course_recommendation_expert(ledger);
    satisfaction_dynamic(ledger);
    air_quality_dynamic(ledger);
    procurement_probabilistic(ledger);
    disease_probabilistic(ledger);
}

fn machine_state_spherical(ledger: &mut Ledger) {
    let radius = 3f64.sqrt();
    let sums: Vec<f64> = [
        [0.9, 0.2, 0.1],
        [0.6, 0.6, 0.4],
        [0.3, 0.8, 0.9],
    ]
    .iter()
    .map(|t| {
        let deg = DegreeVector::new(t.to_vec()).unwrap();
        let report = spherical_validate(&deg, radius).unwrap();
        assert!(report.ok);
        report.measured
    })
    .collect();
    ledger.check(
        "3.14.3:sums",
        sums,
        vec![0.86, 0.88, 1.54],
        EXACT_TOL,
        "machine-state squared sums under the sqrt(3) radius",
    );
}

fn air_quality_spherical(ledger: &mut Ledger) {
    let sums: Vec<f64> = [
        [0.10, 0.20, 0.95],
        [0.50, 0.30, 0.40],
        [0.75, 0.40, 0.10],
    ]
    .iter()
    .map(|t| {
        let deg = DegreeVector::new(t.to_vec()).unwrap();
        let report = spherical_validate(&deg, 1.0).unwrap();
        assert!(report.ok);
        report.measured
    })
    .collect();
    ledger.check(
        "3.14.6:sums",
        sums,
        vec![0.9525, 0.50, 0.7325],
        EXACT_TOL,
        "district risk triples stay inside the unit sphere",
    );
}

fn diabetes_spherical(ledger: &mut Ledger) {
    let sums: Vec<f64> = [
        [0.25, 0.40, 0.80],
        [0.60, 0.35, 0.30],
        [0.75, 0.30, 0.15],
    ]
    .iter()
    .map(|t| {
        let deg = DegreeVector::new(t.to_vec()).unwrap();
        spherical_validate(&deg, 1.0).unwrap().measured
    })
    .collect();
    ledger.check(
        "3.14.7:sums",
        sums,
        vec![0.8625, 0.5725, 0.675],
        EXACT_TOL,
        "severity triples stay inside the unit sphere",
    );
}

fn t_spherical_suppliers(ledger: &mut Ledger) {
    let sums: Vec<f64> = [
        [0.8, 0.3, 0.2],
        [0.5, 0.5, 0.2],
        [0.4, 0.7, 0.2],
        [0.6, 0.2, 0.6],
    ]
    .iter()
    .map(|t| {
        let deg = DegreeVector::new(t.to_vec()).unwrap();
        let report = t_spherical_validate(&deg, 3.0, 1.0).unwrap();
        assert!(report.ok);
        report.measured
    })
    .collect();
    ledger.check(
        "3.15.2:sums",
        sums,
        vec![0.547, 0.258, 0.415, 0.440],
        EXACT_TOL,
        "cube sums of the four supplier triples at order 3",
    );
}

fn icu_relation() -> PlithogenicRelation {
    PlithogenicRelation::new(
        FiniteUniverse::new(vec!["p1", "p2", "p3"]).unwrap(),
        vec![
            vec![0.0, 0.80, 0.30],
            vec![0.70, 0.0, 0.40],
            vec![0.50, 0.60, 0.0],
        ],
        vec![
            vec![0.0, 0.20, 0.60],
            vec![0.30, 0.0, 0.40],
            vec![0.50, 0.40, 0.0],
        ],
        RelationFusion::PenalizedProduct,
    )
    .unwrap()
}

fn icu_rough(ledger: &mut Ledger) {
    let rel = icu_relation();
    ledger.check(
        "3.16.5:fused",
        vec![
            fused_relation(&rel, "p1", "p2").unwrap(),
            fused_relation(&rel, "p2", "p1").unwrap(),
            fused_relation(&rel, "p1", "p1").unwrap(),
        ],
        vec![0.64, 0.49, 1.0],
        EXACT_TOL,
        "penalized-product relation values with self-consistency",
    );
    let target = ["p2"];
    ledger.check(
        "3.16.5:p1",
        vec![
            plithogenic_lower(&rel, &target, "p1").unwrap(),
            plithogenic_upper(&rel, "p1").unwrap(),
        ],
        vec![0.51, 0.51],
        EXACT_TOL,
        "boundary patient: lower equals upper",
    );
    ledger.check(
        "3.16.5:p3",
        vec![
            plithogenic_lower(&rel, &target, "p3").unwrap(),
            plithogenic_upper(&rel, "p3").unwrap(),
        ],
        vec![0.76, 0.36],
        EXACT_TOL,
        "lower exceeds upper; no ordering is asserted between them",
    );
}

fn credit_rough(ledger: &mut Ledger) {
    let rel = PlithogenicRelation::new(
        FiniteUniverse::new(vec!["a", "b", "c"]).unwrap(),
        vec![
            vec![0.0, 0.65, 0.30],
            vec![0.55, 0.0, 0.35],
            vec![0.25, 0.50, 0.0],
        ],
        vec![
            vec![0.0, 0.25, 0.50],
            vec![0.40, 0.0, 0.35],
            vec![0.30, 0.45, 0.0],
        ],
        RelationFusion::PenalizedProduct,
    )
    .unwrap();
    ledger.check(
        "3.16.6:fused",
        vec![fused_relation(&rel, "a", "b").unwrap()],
        vec![0.4875],
        EXACT_TOL,
        "0.65 * (1 - 0.25)",
    );
    let target = ["b"];
    ledger.check(
        "3.16.6:a",
        vec![
            plithogenic_lower(&rel, &target, "a").unwrap(),
            plithogenic_upper(&rel, "a").unwrap(),
        ],
        vec![0.67, 0.4875],
        EXACT_TOL,
        "applicant a against the high-risk profile",
    );
    ledger.check(
        "3.16.6:c",
        vec![
            plithogenic_lower(&rel, &target, "c").unwrap(),
            plithogenic_upper(&rel, "c").unwrap(),
        ],
        vec![0.7725, 0.275],
        EXACT_TOL,
        "applicant c against the high-risk profile",
    );
}

fn batch_rough(ledger: &mut Ledger) {
    let rel = PlithogenicRelation::new(
        FiniteUniverse::new(vec!["B1", "B2", "B3", "B4"]).unwrap(),
        vec![
            vec![0.0, 0.55, 0.70, 0.40],
            vec![0.60, 0.0, 0.45, 0.35],
            vec![0.50, 0.40, 0.0, 0.80],
            vec![0.45, 0.30, 0.75, 0.0],
        ],
        vec![
            vec![0.0, 0.30, 0.20, 0.40],
            vec![0.35, 0.0, 0.25, 0.30],
            vec![0.25, 0.35, 0.0, 0.15],
            vec![0.40, 0.30, 0.10, 0.0],
        ],
        RelationFusion::PenalizedProduct,
    )
    .unwrap();
    let target = ["B3", "B4"];
    ledger.check(
        "3.16.7:b1",
        vec![
            plithogenic_lower(&rel, &target, "B1").unwrap(),
            plithogenic_upper(&rel, "B1").unwrap(),
        ],
        vec![0.625, 0.56],
        EXACT_TOL,
        "batch B1 against the defective set",
    );
    ledger.check(
        "3.16.7:b2_lower",
        vec![plithogenic_lower(&rel, &target, "B2").unwrap()],
        vec![0.74],
        EXACT_TOL,
        "batch B2 lower approximation",
    );
    // the worked chain prints only the target-restricted bound 0.3375
    let restricted = plithogenic_upper_restricted(&rel, &target, "B2").unwrap();
    let full = plithogenic_upper(&rel, "B2").unwrap();
    ledger.check(
        "3.16.7:b2_restricted",
        vec![restricted],
        vec![0.3375],
        EXACT_TOL,
        "target-restricted upper term for B2",
    );
    ledger.check_ok(
        "3.16.7:b2_upper_bound",
        full >= restricted,
        "full upper approximation dominates the restricted bound",
    );
}

fn supplier_space() -> SoftApproxSpace {
    let universe = FiniteUniverse::new(vec!["S1", "S2"]).unwrap();
    let rel = |pdf12: f64, pdf21: f64, pcf12: f64, pcf21: f64| {
        PlithogenicRelation::new(
            universe.clone(),
            vec![vec![0.0, pdf12], vec![pdf21, 0.0]],
            vec![vec![0.0, pcf12], vec![pcf21, 0.0]],
            RelationFusion::PenalizedProduct,
        )
        .unwrap()
    };
    let relations = vec![rel(0.80, 0.75, 0.20, 0.25), rel(0.60, 0.70, 0.30, 0.20)];
    SoftApproxSpace::new(
        universe,
        vec!["e1", "e2"],
        vec![
            DegreeVector::scalar(0.70).unwrap(),
            DegreeVector::scalar(0.60).unwrap(),
            DegreeVector::scalar(0.90).unwrap(),
            DegreeVector::scalar(0.80).unwrap(),
        ],
        relations,
        SoftCombiner::PenalizedProduct,
    )
    .unwrap()
}

fn supplier_soft_rough(ledger: &mut Ledger) {
    let space = supplier_space();
    let target = ["S2"];
    let v = |d: DegreeVector| d.get(0);
    ledger.check(
        "3.17.4:values",
        vec![
            v(soft_rough_lower(&space, &target, "S1", "e1").unwrap()),
            v(soft_rough_lower(&space, &target, "S1", "e2").unwrap()),
            v(soft_rough_upper(&space, &target, "S1", "e2").unwrap()),
            v(soft_rough_lower(&space, &target, "S2", "e1").unwrap()),
            v(soft_rough_upper(&space, &target, "S2", "e1").unwrap()),
            v(soft_rough_lower(&space, &target, "S2", "e2").unwrap()),
            v(soft_rough_upper(&space, &target, "S2", "e2").unwrap()),
        ],
        vec![0.39375, 0.252, 0.348, 0.90, 0.576, 0.80, 0.352],
        EXACT_TOL,
        "all seven printed soft-rough approximations",
    );
    // upper(S1, e1) coincides with the lower value
    ledger.check(
        "3.17.4:upper_s1_e1",
        vec![v(soft_rough_upper(&space, &target, "S1", "e1").unwrap())],
        vec![0.39375],
        EXACT_TOL,
        "on-time upper approximation of the local supplier",
    );
}

fn smartphone_diophantine(ledger: &mut Ledger) {
    let entry = DiophantineEntry {
        mu: DegreeVector::new(vec![0.90, 0.05, 0.10]).unwrap(),
        alpha: vec![1.0, 0.5, 0.5],
        c: 2.0,
    };
    let report = diophantine_check(&entry).unwrap();
    ledger.check(
        "3.18.3:check",
        vec![report.weighted_sum, report.parameter_sum, report.residual],
        vec![0.975, 2.0, 1.025],
        EXACT_TOL,
        "EcoPhone battery: weighted sum, parameter sum, residual",
    );
    ledger.check_ok("3.18.3:ok", report.ok, "both Diophantine inequalities hold");
}

fn sustainable_supplier_expert(ledger: &mut Ledger) {
    let ctx = ExpertContext::new(
        FiniteUniverse::new(vec!["u1", "u2", "u3"]).unwrap(),
        vec![
            ExpertParam {
                name: "cost".into(),
                values: vec!["low".into(), "medium".into(), "high".into()],
                pdf: vec![0.9, 0.0, 0.0, 0.6, 0.0, 0.0, 0.2, 0.0, 0.0],
            },
            ExpertParam {
                name: "sustainability".into(),
                values: vec!["green".into(), "neutral".into(), "risky".into()],
                pdf: vec![0.7, 0.5, 0.0, 0.4, 0.7, 0.0, 0.1, 0.6, 0.0],
            },
        ],
        vec!["x1", "x2"],
        vec![
            ActivatedTriple {
                param: "cost".into(),
                expert: "x1".into(),
                opinion: Opinion::Agree,
                value: "low".into(),
            },
            ActivatedTriple {
                param: "sustainability".into(),
                expert: "x1".into(),
                opinion: Opinion::Agree,
                value: "neutral".into(),
            },
            ActivatedTriple {
                param: "sustainability".into(),
                expert: "x2".into(),
                opinion: Opinion::Agree,
                value: "green".into(),
            },
        ],
        vec![
            (("low", "agree"), 0.1),
            (("green", "agree"), 0.1),
            (("neutral", "agree"), 0.3),
        ],
    )
    .unwrap();
    let cost_triple = ctx.activated()[0].clone();
    let neutral_triple = ctx.activated()[1].clone();
    ledger.check(
        "3.21.3:degrees",
        vec![
            expert_degree(&ctx, &cost_triple, "u1").unwrap(),
            expert_degree(&ctx, &neutral_triple, "u2").unwrap(),
        ],
        vec![0.81, 0.49],
        EXACT_TOL,
        "0.9(1 - 0.1) for low cost on u1; 0.7(1 - 0.3) for neutral on u2",
    );
}

fn course_recommendation_expert(ledger: &mut Ledger) {
    let ctx = ExpertContext::new(
        FiniteUniverse::new(vec!["c1", "c2", "c3"]).unwrap(),
        vec![
            ExpertParam {
                name: "difficulty".into(),
                values: vec!["easy".into(), "moderate".into(), "hard".into()],
                pdf: vec![0.0, 0.8, 0.0, 0.0, 0.5, 0.0, 0.0, 0.3, 0.0],
            },
            ExpertParam {
                name: "relevance".into(),
                values: vec!["rlow".into(), "rmedium".into(), "rhigh".into()],
                pdf: vec![0.0, 0.0, 0.6, 0.0, 0.0, 0.9, 0.0, 0.0, 0.4],
            },
        ],
        vec!["advisor", "mentor"],
        vec![
            ActivatedTriple {
                param: "difficulty".into(),
                expert: "advisor".into(),
                opinion: Opinion::Agree,
                value: "moderate".into(),
            },
            ActivatedTriple {
                param: "relevance".into(),
                expert: "advisor".into(),
                opinion: Opinion::Agree,
                value: "rhigh".into(),
            },
            ActivatedTriple {
                param: "relevance".into(),
                expert: "mentor".into(),
                opinion: Opinion::Agree,
                value: "rhigh".into(),
            },
        ],
        vec![(("moderate", "agree"), 0.2), (("rhigh", "agree"), 0.1)],
    )
    .unwrap();
    let relevance = ctx.activated()[1].clone();
    let difficulty = ctx.activated()[0].clone();
    ledger.check(
        "3.21.4:degrees",
        vec![
            expert_degree(&ctx, &relevance, "c2").unwrap(),
            expert_degree(&ctx, &difficulty, "c3").unwrap(),
        ],
        vec![0.81, 0.24],
        EXACT_TOL,
        "0.9(1 - 0.1) for relevance on c2; 0.3(1 - 0.2) for difficulty on c3",
    );
}

fn satisfaction_bundle(
    high: [f64; 3],
    medium: [f64; 3],
    low: [f64; 3],
) -> uset_core::plithogenic::PlithogenicBundle {
    super::vector_bundle(
        vec!["Basic", "Premium"],
        vec!["low", "medium", "high"],
        vec![
            vec![0.0, 0.3, 0.9],
            vec![0.3, 0.0, 0.5],
            vec![0.9, 0.5, 0.0],
        ],
        vec![
            // the Basic rows are context; only Premium is printed
            vec![vec![0.60, 0.20, 0.30], vec![0.30, 0.25, 0.50], vec![0.20, 0.20, 0.70]],
            vec![low.to_vec(), medium.to_vec(), high.to_vec()],
        ],
        Band::UNIT,
    )
}

fn satisfaction_dynamic(ledger: &mut Ledger) {
    let tb = TimeIndexedBundle::new(vec![
        (
            "t1",
            satisfaction_bundle(
                [0.45, 0.30, 0.25],
                [0.35, 0.25, 0.40],
                [0.10, 0.20, 0.70],
            ),
        ),
        (
            "t2",
            satisfaction_bundle(
                [0.80, 0.10, 0.10],
                [0.15, 0.15, 0.70],
                [0.05, 0.10, 0.85],
            ),
        ),
    ])
    .unwrap();
    let snap = snapshot(&tb, "t2").unwrap();
    let x = snap.universe().index_of("Premium").unwrap();
    let v = snap.attribute.index_of("high").unwrap();
    let payload = snap.table.get(x, v).as_vector().unwrap();
    ledger.check(
        "3.22.2:snapshot",
        payload.components().to_vec(),
        vec![0.80, 0.10, 0.10],
        0.0,
        "post-redesign Premium/high appurtenance at t2",
    );
    ledger.check_ok(
        "3.22.2:valid",
        snapshot(&tb, "t1").is_ok(),
        "each snapshot passes bundle validation on its own",
    );
}

fn risk_bundle(moderate_high: f64) -> uset_core::plithogenic::PlithogenicBundle {
    super::vector_bundle(
        vec!["A", "B"],
        vec!["low", "moderate", "high"],
        vec![
            vec![0.0, 0.3, 0.9],
            vec![0.3, 0.0, moderate_high],
            vec![0.9, moderate_high, 0.0],
        ],
        vec![
            vec![
                vec![0.80, 0.10, 0.10],
                vec![0.15, 0.20, 0.65],
                vec![0.05, 0.10, 0.85],
            ],
            vec![
                vec![0.70, 0.15, 0.15],
                vec![0.25, 0.20, 0.55],
                vec![0.10, 0.10, 0.80],
            ],
        ],
        Band::UNIT,
    )
}

fn air_quality_dynamic(ledger: &mut Ledger) {
    let tb = TimeIndexedBundle::new(vec![
        ("d1", risk_bundle(0.4)),
        ("d2", risk_bundle(0.5)),
        ("d3", risk_bundle(0.6)),
    ])
    .unwrap();
    let pcf_at = |instant: &str| {
        let snap = snapshot(&tb, instant).unwrap();
        let m = snap.attribute.index_of("moderate").unwrap();
        let h = snap.attribute.index_of("high").unwrap();
        snap.contradiction.get(m, h)[0]
    };
    ledger.check(
        "3.22.3:pcf_shift",
        vec![pcf_at("d1"), pcf_at("d3")],
        vec![0.4, 0.6],
        0.0,
        "moderate/high contradiction rises after the pollution episode",
    );
}

fn procurement_probabilistic(ledger: &mut Ledger) {
    // S1's environmental-performance table, one attribute, three outcomes
    let universe = FiniteUniverse::new(vec!["S1"]).unwrap();
    let s = |x: f64| DegreeVector::scalar(x).unwrap();
    let space = ScenarioSpace::new(
        universe,
        vec![("boom", 1.0 / 3.0), ("baseline", 1.0 / 3.0), ("carbon", 1.0 / 3.0)],
        vec![("environment", vec!["elow", "emedium", "ehigh"])],
        vec![vec![
            s(0.20),
            s(0.10),
            s(0.05),
            s(0.50),
            s(0.40),
            s(0.30),
            s(0.30),
            s(0.50),
            s(0.65),
        ]],
        ContradictionTable::from_scalar_matrix(vec![
            vec![0.0, 0.4, 0.9],
            vec![0.4, 0.0, 0.5],
            vec![0.9, 0.5, 0.0],
        ])
        .unwrap(),
        FusionRule::Mean,
    )
    .unwrap();
    let spec = BlendSpec::default();
    let e = expectation(&space, "S1", &["ehigh"], &spec).unwrap();
    ledger.check(
        "3.23.5:expectation",
        vec![e.get(0)],
        vec![(0.30 + 0.50 + 0.65) / 3.0],
        EXACT_TOL,
        "expected high-favorability membership across the three scenarios",
    );
    ledger.check(
        "3.23.5:blend",
        vec![blend(0.7, 0.4, 0.5, &spec).unwrap()],
        vec![0.55],
        EXACT_TOL,
        "even min/max blend of two degrees",
    );
}

fn disease_probabilistic(ledger: &mut Ledger) {
    // patient BMI table with neutrosophic triples; two attributes folded
    // against a hand-computed anchor chain
    let universe = FiniteUniverse::new(vec!["x"]).unwrap();
    let d = |t: [f64; 3]| DegreeVector::new(t.to_vec()).unwrap();
    let space = ScenarioSpace::new(
        universe,
        vec![("optimistic", 1.0 / 3.0), ("typical", 1.0 / 3.0), ("pessimistic", 1.0 / 3.0)],
        vec![
            ("bmi", vec!["obese"]),
            ("glucose", vec!["ghigh"]),
        ],
        vec![
            vec![
                d([0.20, 0.20, 0.60]),
                d([0.25, 0.25, 0.50]),
                d([0.45, 0.20, 0.35]),
            ],
            vec![
                d([0.10, 0.20, 0.70]),
                d([0.15, 0.20, 0.65]),
                d([0.25, 0.20, 0.55]),
            ],
        ],
        {
            let mut t = ContradictionTable::zero(2, 1);
            t.set_pair(0, 1, vec![0.95]).unwrap();
            t
        },
        FusionRule::Mean,
    )
    .unwrap();
    let spec = BlendSpec::default();
    // hand fold for the typical outcome: blend((0.25, 0.25, 0.50), (0.15,
    // 0.20, 0.65); 0.95) componentwise
    let got = aggregate_profile(&space, "x", &["obese", "ghigh"], "typical", &spec).unwrap();
    let fold = |u: f64, v: f64| 0.05 * u.min(v) + 0.95 * u.max(v);
    ledger.check(
        "3.23.6:fold",
        got.components().to_vec(),
        vec![fold(0.25, 0.15), fold(0.25, 0.20), fold(0.50, 0.65)],
        EXACT_TOL,
        "anchor-chain blend of the obese/high-glucose profile",
    );
}

//! Property tests for the aggregation invariants: convex-hull containment,
//! constraint monotonicity and preservation, weight bounds, ordering
//! preservation, and the rough/soft consistency laws.

use proptest::prelude::*;

use uset_core::classic::{rough_approximate, FiniteUniverse, RoughContext};
use uset_core::degree::{
    dual_blend, interval_weighted_mean, validate_constraint, weighted_mean, Band, ConstraintSpec,
    DegreeVector, DualDegree, IntervalDegree, TrapezoidalNumber, TriangularNumber,
};
use uset_core::hierarchy::{nested_reduce, staged_aggregate, LevelSpec, NestedDegreeSet, StagedTable};
use uset_core::plithogenic::{
    aggregate_dominant, compatibility_weights, AppurtenanceTable, AttributeSystem,
    ContradictionTable, FusionRule, Payload, PayloadKind, PlithogenicBundle,
};
use uset_core::roughsoft::{fused_relation, plithogenic_lower, PlithogenicRelation, RelationFusion};
use uset_core::temporal::{blend, BlendSpec};
use uset_core::variants::{
    hesitant_reduce, lift_contradiction, HesitationSet, ReduceStrategy, TermSet,
};

fn unit() -> impl Strategy<Value = f64> {
    0.0..=1.0f64
}

fn unit_vec(len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(unit(), len)
}

fn scalar_values_and_weights() -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    (1usize..6).prop_flat_map(|n| {
        (
            prop::collection::vec(unit(), n),
            prop::collection::vec(0.0..=2.0f64, n),
        )
    })
}

proptest! {
    #[test]
    fn weighted_mean_stays_in_hull((values, weights) in scalar_values_and_weights()) {
        let total: f64 = weights.iter().sum();
        prop_assume!(total > 0.0);
        let vecs: Vec<DegreeVector> = values.iter().map(|&x| DegreeVector::scalar(x).unwrap()).collect();
        let out = weighted_mean(&vecs, &weights).unwrap().get(0);
        let lo = values.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = values.iter().cloned().fold(0.0, f64::max);
        prop_assert!(out >= lo - 1e-12 && out <= hi + 1e-12);
    }

    #[test]
    fn interval_mean_keeps_order(pairs in prop::collection::vec(((0.0..=1.0f64, 0.0..=1.0f64), (0.01..=1.0f64, 0.0..=1.0f64)), 1..6)) {
        let mut values = Vec::new();
        let mut weights = Vec::new();
        for ((vl, vspan), (wl, wspan)) in pairs {
            let vu = (vl + vspan * (1.0 - vl)).min(1.0);
            let wu = (wl + wspan * (1.0 - wl)).min(1.0);
            values.push(IntervalDegree::new(vl, vu).unwrap());
            weights.push(IntervalDegree::new(wl, wu).unwrap());
        }
        let out = interval_weighted_mean(&values, &weights).unwrap();
        prop_assert!(out.lower <= out.upper + 1e-12);
    }

    #[test]
    fn defuzzify_monotone_under_shift(
        l in 0.0..=0.5f64,
        dm in 0.0..=0.2f64,
        du in 0.0..=0.2f64,
        delta in 0.0..=0.3f64,
    ) {
        let tri = TriangularNumber::new(l, l + dm, l + dm + du).unwrap();
        let shifted = TriangularNumber::new(l + delta, l + dm + delta, (l + dm + du + delta).min(1.0)).unwrap();
        // only assert when the shift stayed unclipped
        if l + dm + du + delta <= 1.0 {
            prop_assert!((shifted.centroid() - tri.centroid() - delta).abs() < 1e-9);
        }
        let trap = TrapezoidalNumber::new(l, l + dm, l + dm + du, (l + dm + du + 0.1).min(1.0)).unwrap();
        prop_assert!(trap.mean() >= l - 1e-12);
    }

    #[test]
    fn constraint_monotone_under_decrease(
        xs in unit_vec(3),
        shrink in unit_vec(3),
        pick in 0usize..4,
    ) {
        let specs: [ConstraintSpec; 4] = [
            ConstraintSpec::Neutrosophic,
            ConstraintSpec::Spherical { lambda: 1.0 },
            ConstraintSpec::TSpherical { t_exp: 3.0, lambda: 1.0 },
            ConstraintSpec::QRung { q: 2.0, n: 3 },
        ];
        let spec = &specs[pick];
        let deg = DegreeVector::new(xs.clone()).unwrap();
        let report = validate_constraint(&deg, spec).unwrap();
        prop_assume!(report.ok);
        let smaller: Vec<f64> = xs.iter().zip(&shrink).map(|(x, s)| x * s).collect();
        let deg2 = DegreeVector::new(smaller).unwrap();
        prop_assert!(validate_constraint(&deg2, spec).unwrap().ok);
    }

    #[test]
    fn dual_blend_betweenness(
        a_std in unit(), a_eps in -1.0..=1.0f64,
        b_std in unit(), b_eps in -1.0..=1.0f64,
        c in unit(),
    ) {
        let a = DualDegree::new(a_std, a_eps);
        let b = DualDegree::new(b_std, b_eps);
        let out = dual_blend(&a, &b, c).unwrap();
        let lo = a_std.min(b_std);
        let hi = a_std.max(b_std);
        prop_assert!(out.standard >= lo - 1e-12 && out.standard <= hi + 1e-12);
    }

    #[test]
    fn blend_is_bounded(u in unit(), v in unit(), c in unit()) {
        let out = blend(u, v, c, &BlendSpec::default()).unwrap();
        prop_assert!(out >= u.min(v) - 1e-12 && out <= u.max(v) + 1e-12);
    }

    #[test]
    fn hesitant_reduce_ordering(rows in prop::collection::vec(unit_vec(3), 1..6)) {
        let vectors: Vec<DegreeVector> = rows.iter().map(|r| DegreeVector::new(r.clone()).unwrap()).collect();
        let h = HesitationSet::new(vectors).unwrap();
        let pess = hesitant_reduce(&h, ReduceStrategy::Pessimistic);
        let mean = hesitant_reduce(&h, ReduceStrategy::Mean);
        let opt = hesitant_reduce(&h, ReduceStrategy::Optimistic);
        for i in 0..3 {
            prop_assert!(pess.get(i) <= mean.get(i) + 1e-12);
            prop_assert!(mean.get(i) <= opt.get(i) + 1e-12);
        }
    }

    #[test]
    fn lift_is_symmetric_and_reflexively_zero(
        h in prop::collection::vec(0usize..5, 1..4),
        k in prop::collection::vec(0usize..5, 1..4),
    ) {
        let terms = TermSet::new(vec!["s0", "s1", "s2", "s3", "s4"]).unwrap();
        let d = |a: usize, b: usize| terms.distance(a, b);
        let fwd = lift_contradiction(&h, &k, d);
        let bwd = lift_contradiction(&k, &h, d);
        prop_assert!((fwd - bwd).abs() < 1e-12);
        prop_assert!(lift_contradiction(&h, &h, d).abs() < 1e-12);
    }

    #[test]
    fn nested_reduce_in_hull(leaves in prop::collection::vec(unit(), 1..6), split in 1usize..5) {
        let inner: Vec<NestedDegreeSet> = leaves
            .iter()
            .map(|&x| NestedDegreeSet::Leaf(DegreeVector::scalar(x).unwrap()))
            .collect();
        let k = split.min(inner.len());
        let (left, right) = inner.split_at(k);
        let nested = if right.is_empty() {
            NestedDegreeSet::Set(left.to_vec())
        } else {
            NestedDegreeSet::Set(vec![
                NestedDegreeSet::Set(left.to_vec()),
                NestedDegreeSet::Set(right.to_vec()),
            ])
        };
        let out = nested_reduce(&nested).unwrap().get(0);
        let lo = leaves.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = leaves.iter().cloned().fold(0.0, f64::max);
        prop_assert!(out >= lo - 1e-12 && out <= hi + 1e-12);
    }
}

fn random_scalar_bundle(
    entries: &[f64],
    n_values: usize,
    matrix: Vec<Vec<f64>>,
) -> PlithogenicBundle {
    let n_elements = entries.len() / n_values;
    let universe = FiniteUniverse::new(
        (0..n_elements)
            .map(|i| format!("x{i}"))
            .collect::<Vec<_>>(),
    )
    .unwrap();
    let values: Vec<String> = (0..n_values).map(|i| format!("v{i}")).collect();
    let attr = AttributeSystem::new("attr", values).unwrap();
    let payloads = entries
        .iter()
        .map(|&x| Payload::Vector(DegreeVector::scalar(x).unwrap()))
        .collect();
    let table = AppurtenanceTable::new(
        universe,
        n_values,
        PayloadKind::Vector {
            arity: 1,
            band: Band::UNIT,
        },
        payloads,
    )
    .unwrap();
    PlithogenicBundle::new(
        attr,
        table,
        ContradictionTable::from_scalar_matrix(matrix).unwrap(),
        FusionRule::Mean,
        None,
    )
    .unwrap()
}

#[allow(clippy::needless_range_loop)]
fn symmetric_matrix(n: usize, seed: &[f64]) -> Vec<Vec<f64>> {
    let mut matrix = vec![vec![0.0; n]; n];
    let mut it = seed.iter().cycle();
    for i in 0..n {
        for j in (i + 1)..n {
            let v = *it.next().unwrap();
            matrix[i][j] = v;
            matrix[j][i] = v;
        }
    }
    matrix
}

proptest! {
    #[test]
    fn dominant_weight_is_one_and_maximal(
        seed in prop::collection::vec(unit(), 6),
        entries in prop::collection::vec(unit(), 4),
        pick in 0usize..4,
    ) {
        let bundle = random_scalar_bundle(&entries, 4, symmetric_matrix(4, &seed));
        let dominant = format!("v{pick}");
        let w = compatibility_weights(&bundle, &dominant).unwrap();
        prop_assert!((w[pick] - 1.0).abs() < 1e-12);
        for x in &w {
            prop_assert!(*x <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn zero_pcf_gives_plain_mean(entries in prop::collection::vec(unit(), 3)) {
        let bundle = random_scalar_bundle(&entries, 3, vec![vec![0.0; 3]; 3]);
        let out = aggregate_dominant(&bundle, "x0", "v1").unwrap();
        let mean = entries.iter().sum::<f64>() / 3.0;
        prop_assert!((out.as_vector().unwrap().get(0) - mean).abs() < 1e-12);
    }

    #[test]
    fn shrinking_pcf_moves_toward_plain_mean(
        seed in prop::collection::vec(unit(), 3),
        entries in prop::collection::vec(unit(), 3),
    ) {
        // interpolate the contradiction matrix at factors 0, 1/2, 1
        let matrix = symmetric_matrix(3, &seed);
        let at = |factor: f64| {
            let scaled = matrix
                .iter()
                .map(|row| row.iter().map(|x| x * factor).collect())
                .collect();
            let bundle = random_scalar_bundle(&entries, 3, scaled);
            aggregate_dominant(&bundle, "x0", "v0")
                .unwrap()
                .as_vector()
                .unwrap()
                .get(0)
        };
        let full = at(1.0);
        let half = at(0.5);
        let mean = at(0.0);
        // the distance to the plain mean shrinks monotonically
        prop_assert!((half - mean).abs() <= (full - mean).abs() + 1e-9);
    }

    #[test]
    fn scalar_aggregate_stays_in_unit_band(
        seed in prop::collection::vec(unit(), 6),
        entries in prop::collection::vec(unit(), 8),
        pick in 0usize..4,
    ) {
        let bundle = random_scalar_bundle(&entries, 4, symmetric_matrix(4, &seed));
        let out = aggregate_dominant(&bundle, &format!("x{}", pick % 2), "v0").unwrap();
        let x = out.as_vector().unwrap().get(0);
        prop_assert!((0.0..=1.0).contains(&x));
    }

    #[test]
    fn ranking_invariant_under_uniform_rescale(
        seed in prop::collection::vec(unit(), 3),
        entries in prop::collection::vec(0.01..=1.0f64, 9),
        scale in 0.05..=1.0f64,
    ) {
        let matrix = symmetric_matrix(3, &seed);
        let max = entries.iter().cloned().fold(0.0f64, f64::max);
        let factor = scale.min(1.0 / max);
        let score = |table: &[f64]| -> Vec<f64> {
            let bundle = random_scalar_bundle(table, 3, matrix.clone());
            (0..3)
                .map(|i| {
                    aggregate_dominant(&bundle, &format!("x{i}"), "v0")
                        .unwrap()
                        .as_vector()
                        .unwrap()
                        .get(0)
                })
                .collect()
        };
        let base = score(&entries);
        let scaled_entries: Vec<f64> = entries.iter().map(|x| x * factor).collect();
        let scaled = score(&scaled_entries);
        let order = |xs: &[f64]| {
            let mut idx: Vec<usize> = (0..xs.len()).collect();
            idx.sort_by(|&a, &b| xs[b].total_cmp(&xs[a]).then(a.cmp(&b)));
            idx
        };
        prop_assert_eq!(order(&base), order(&scaled));
    }

    #[test]
    fn staged_zero_contradiction_is_grand_mean(leaves in prop::collection::vec(unit(), 4)) {
        let level = |n: usize| {
            LevelSpec::new(
                (0..n).map(|i| format!("v{i}")).collect::<Vec<_>>().iter().map(|s| s.as_str()).collect(),
                ContradictionTable::zero(n, 1),
                "v0",
                FusionRule::Mean,
            )
            .unwrap()
        };
        let pipeline = vec![level(2), level(2)];
        let table = StagedTable::Level(vec![
            StagedTable::Level(vec![
                StagedTable::Leaf(DegreeVector::scalar(leaves[0]).unwrap()),
                StagedTable::Leaf(DegreeVector::scalar(leaves[1]).unwrap()),
            ]),
            StagedTable::Level(vec![
                StagedTable::Leaf(DegreeVector::scalar(leaves[2]).unwrap()),
                StagedTable::Leaf(DegreeVector::scalar(leaves[3]).unwrap()),
            ]),
        ]);
        let out = staged_aggregate(&pipeline, &table).unwrap().get(0);
        let grand = leaves.iter().sum::<f64>() / 4.0;
        prop_assert!((out - grand).abs() < 1e-12);
    }
}

fn partition_of(n_elements: usize, cuts: &[usize]) -> Vec<Vec<usize>> {
    let mut blocks = Vec::new();
    let mut start = 0;
    for &c in cuts {
        let end = (start + 1 + c % 3).min(n_elements);
        if end > start {
            blocks.push((start..end).collect());
            start = end;
        }
    }
    if start < n_elements {
        blocks.push((start..n_elements).collect());
    }
    blocks
}

proptest! {
    #[test]
    fn rough_containment_and_regions(
        n in 2usize..=12,
        cuts in prop::collection::vec(0usize..3, 1..5),
        mask in prop::collection::vec(any::<bool>(), 12),
    ) {
        let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
        let universe = FiniteUniverse::new(names.clone()).unwrap();
        let blocks_idx = partition_of(n, &cuts);
        let blocks: Vec<Vec<&str>> = blocks_idx
            .iter()
            .map(|b| b.iter().map(|&i| names[i].as_str()).collect())
            .collect();
        let ctx = RoughContext::new(universe, blocks).unwrap();
        let target: Vec<&str> = names
            .iter()
            .enumerate()
            .filter(|(i, _)| mask[*i % mask.len()])
            .map(|(_, s)| s.as_str())
            .collect();
        let r = rough_approximate(&ctx, &target).unwrap();

        let target_set: std::collections::BTreeSet<&str> = target.iter().copied().collect();
        // lower subset of target subset of upper
        for e in &r.lower {
            prop_assert!(target_set.contains(e.as_str()));
        }
        for e in &target {
            prop_assert!(r.upper.contains(&e.to_string()));
        }
        // regions partition the universe
        let mut all: Vec<String> = r.positive.clone();
        all.extend(r.boundary.clone());
        all.extend(r.negative.clone());
        all.sort();
        let mut expected = names.clone();
        expected.sort();
        prop_assert_eq!(all, expected);

        // per-element oracle: block containment / intersection
        for (i, name) in names.iter().enumerate() {
            let block = &blocks_idx[ctx.block_of(i)];
            let inside = block.iter().all(|&j| target_set.contains(names[j].as_str()));
            let touches = block.iter().any(|&j| target_set.contains(names[j].as_str()));
            prop_assert_eq!(r.lower.contains(name), inside);
            prop_assert_eq!(r.upper.contains(name), touches);
        }
    }

    #[test]
    fn fused_relation_is_dominated_by_pdf(
        pdf in prop::collection::vec(unit(), 9),
        pcf in prop::collection::vec(unit(), 9),
    ) {
        let universe = FiniteUniverse::new(vec!["a", "b", "c"]).unwrap();
        let to_matrix = |xs: &[f64]| {
            (0..3).map(|i| xs[i * 3..(i + 1) * 3].to_vec()).collect::<Vec<_>>()
        };
        let rel = PlithogenicRelation::new(
            universe.clone(),
            to_matrix(&pdf),
            to_matrix(&pcf),
            RelationFusion::PenalizedProduct,
        )
        .unwrap();
        for (i, x) in ["a", "b", "c"].iter().enumerate() {
            for (j, y) in ["a", "b", "c"].iter().enumerate() {
                if i != j {
                    let fused = fused_relation(&rel, x, y).unwrap();
                    prop_assert!(fused <= pdf[i * 3 + j] + 1e-12);
                }
            }
        }
        // zero contradiction leaves pdf untouched
        let rel0 = PlithogenicRelation::new(
            universe,
            to_matrix(&pdf),
            vec![vec![0.0; 3]; 3],
            RelationFusion::PenalizedProduct,
        )
        .unwrap();
        let fused = fused_relation(&rel0, "a", "b").unwrap();
        prop_assert!((fused - pdf[1]).abs() < 1e-12);
    }

    #[test]
    fn enlarging_target_never_raises_lower(
        pdf in prop::collection::vec(unit(), 9),
        pcf in prop::collection::vec(unit(), 9),
    ) {
        let universe = FiniteUniverse::new(vec!["a", "b", "c"]).unwrap();
        let to_matrix = |xs: &[f64]| {
            (0..3).map(|i| xs[i * 3..(i + 1) * 3].to_vec()).collect::<Vec<_>>()
        };
        let rel = PlithogenicRelation::new(
            universe,
            to_matrix(&pdf),
            to_matrix(&pcf),
            RelationFusion::PenalizedProduct,
        )
        .unwrap();
        for x in ["a", "b", "c"] {
            let small = plithogenic_lower(&rel, &["b"], x).unwrap();
            let large = plithogenic_lower(&rel, &["b", "c"], x).unwrap();
            prop_assert!(large <= small + 1e-12);
        }
    }
}

// Constraint preservation under normalized aggregation: seeded exhaustive
// loops, 1000 instances per constraint kind.
#[test]
fn constraint_preserved_by_normalized_aggregation() {
    use uset_core::reductions::{sample_constrained_vector, sample_rng};

    let kinds: Vec<(&str, ConstraintSpec)> = vec![
        ("ifs", ConstraintSpec::Ifs),
        ("neutrosophic", ConstraintSpec::Neutrosophic),
        ("spherical", ConstraintSpec::Spherical { lambda: 1.0 }),
        (
            "t-spherical",
            ConstraintSpec::TSpherical {
                t_exp: 3.0,
                lambda: 1.0,
            },
        ),
        ("q-rung", ConstraintSpec::QRung { q: 3.0, n: 2 }),
    ];
    for (seed_offset, (name, spec)) in kinds.into_iter().enumerate() {
        let mut rng = sample_rng(1000 + seed_offset as u64);
        for _ in 0..1000 {
            use rand::Rng;
            let n_values = rng.random_range(2..=4);
            let values: Vec<DegreeVector> = (0..n_values)
                .map(|_| sample_constrained_vector(&mut rng, &spec))
                .collect();
            let weights: Vec<f64> = (0..n_values).map(|_| rng.random_range(0.0..=1.0)).collect();
            if weights.iter().sum::<f64>() == 0.0 {
                continue;
            }
            let out = weighted_mean(&values, &weights).unwrap();
            let report = validate_constraint(&out, &spec).unwrap();
            assert!(
                report.ok,
                "{name}: aggregate {:?} violates the constraint ({} > {})",
                out.components(),
                report.measured,
                report.bound
            );
        }
    }
}

// Remaining named invariants, checked on fixed and sampled instances.

#[test]
fn singleton_superhypersoft_equals_hypersoft() {
    use uset_core::classic::{hypersoft_query, superhypersoft_query, HypersoftFamily};
    let family = HypersoftFamily::new(
        FiniteUniverse::new(vec!["L1", "L2", "L3", "L4", "L5", "L6"]).unwrap(),
        vec![
            ("cpu", vec!["i5", "i7"]),
            ("ram", vec!["8", "16"]),
            ("ssd", vec!["256", "512"]),
        ],
        vec![
            ("L1", vec!["i5", "8", "256"]),
            ("L2", vec!["i5", "16", "512"]),
            ("L3", vec!["i7", "8", "512"]),
            ("L4", vec!["i7", "16", "256"]),
            ("L5", vec!["i7", "16", "512"]),
            ("L6", vec!["i5", "8", "512"]),
        ],
    )
    .unwrap();
    for cpu in ["i5", "i7"] {
        for ram in ["8", "16"] {
            for ssd in ["256", "512"] {
                let tuple = hypersoft_query(&family, &[cpu, ram, ssd]).unwrap();
                let singles =
                    superhypersoft_query(&family, &[vec![cpu], vec![ram], vec![ssd]]).unwrap();
                assert_eq!(tuple, singles);
            }
        }
    }
}

#[test]
fn soft_query_is_antitone_in_the_parameter_set() {
    use uset_core::classic::{soft_query, SoftFamily};
    let family = SoftFamily::new(
        FiniteUniverse::new(vec!["A1", "A2", "A3", "A4"]).unwrap(),
        vec![
            ("p0", vec!["A1", "A3", "A4"]),
            ("p1", vec!["A2", "A3"]),
            ("p2", vec!["A1", "A2"]),
        ],
    )
    .unwrap();
    let chains = [
        vec![],
        vec!["p0"],
        vec!["p0", "p1"],
        vec!["p0", "p1", "p2"],
    ];
    for pair in chains.windows(2) {
        let larger = soft_query(&family, &pair[0]).unwrap();
        let smaller = soft_query(&family, &pair[1]).unwrap();
        assert!(smaller.iter().all(|x| larger.contains(x)));
    }
}

proptest! {
    #[test]
    fn tree_root_stays_in_leaf_hull(degrees in prop::collection::vec(unit(), 2..6)) {
        use uset_core::hierarchy::{tree_aggregate, AttributeTree, LabelScale, TreeNode};
        let scale = LabelScale::new(
            vec!["Low", "High"],
            vec![0.5],
            ContradictionTable::from_scalar_matrix(vec![vec![0.0, 0.6], vec![0.6, 0.0]]).unwrap(),
            FusionRule::Mean,
        )
        .unwrap();
        let children: Vec<TreeNode> = degrees
            .iter()
            .enumerate()
            .map(|(i, &d)| TreeNode::Leaf {
                name: format!("leaf{i}"),
                label: if i % 2 == 0 { "High".into() } else { "Low".into() },
                degree: d,
            })
            .collect();
        let tree = AttributeTree {
            root: TreeNode::Internal { name: "root".into(), children },
            scale,
            dominant: "High".into(),
        };
        let (root, _) = tree_aggregate(&tree).unwrap();
        let lo = degrees.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = degrees.iter().cloned().fold(0.0, f64::max);
        // every leaf weight is positive here (0.4 or 1.0)
        prop_assert!(root >= lo - 1e-12 && root <= hi + 1e-12);
    }

    #[test]
    fn forest_of_identical_trees_matches_single_tree(degree in unit(), copies in 1usize..5) {
        use uset_core::hierarchy::{
            forest_aggregate, tree_aggregate, AttributeForest, AttributeTree, LabelScale, TreeNode,
        };
        let scale = LabelScale::new(
            vec!["Low", "High"],
            vec![0.5],
            ContradictionTable::from_scalar_matrix(vec![vec![0.0, 0.6], vec![0.6, 0.0]]).unwrap(),
            FusionRule::Mean,
        )
        .unwrap();
        let tree = AttributeTree {
            root: TreeNode::Leaf {
                name: "only".into(),
                label: "High".into(),
                degree,
            },
            scale,
            dominant: "High".into(),
        };
        let (single, _) = tree_aggregate(&tree).unwrap();
        let forest = AttributeForest {
            trees: vec![tree; copies],
            dominant: "High".into(),
        };
        prop_assert!((forest_aggregate(&forest).unwrap() - single).abs() < 1e-12);
    }

    #[test]
    fn single_pole_zero_contradiction_reduces_to_payload(
        payload in unit(),
        other in unit(),
    ) {
        use uset_core::hierarchy::{mpolar_aggregate, MPolarSystem, PoleSystem};
        let sys = MPolarSystem::new(
            FiniteUniverse::new(vec!["x"]).unwrap(),
            vec!["a", "b"],
            ContradictionTable::from_scalar_matrix(vec![vec![0.0, 0.4], vec![0.4, 0.0]]).unwrap(),
            PoleSystem::new(vec!["only"], ContradictionTable::zero(1, 1)).unwrap(),
            FusionRule::Mean,
            vec![
                vec![DegreeVector::scalar(payload).unwrap()],
                vec![DegreeVector::scalar(other).unwrap()],
            ],
        )
        .unwrap();
        let out = mpolar_aggregate(&sys, "x", "a", "b", "only").unwrap();
        prop_assert!((out.get(0) - payload).abs() < 1e-12);
    }

    #[test]
    fn inclusion_grade_monotonicities(
        bump in 0.0..=0.1f64,
    ) {
        use uset_core::variants::{trapezoidal_inclusion, TrapBundle, TrapTripleDegree};
        let trap = |a: f64, b: f64, c: f64, d: f64| TrapezoidalNumber::new(a, b, c, d).unwrap();
        let build = |t_shift: f64, i_shift: f64, f_shift: f64| {
            TrapBundle::new(
                FiniteUniverse::new(vec!["x"]).unwrap(),
                vec!["v0", "v1"],
                ContradictionTable::from_scalar_matrix(vec![vec![0.0, 0.4], vec![0.4, 0.0]])
                    .unwrap(),
                FusionRule::Mean,
                vec![
                    TrapTripleDegree {
                        t: trap(0.2 + t_shift, 0.3 + t_shift, 0.5 + t_shift, 0.6 + t_shift),
                        i: trap(0.1 + i_shift, 0.2 + i_shift, 0.2 + i_shift, 0.3 + i_shift),
                        f: trap(0.1 + f_shift, 0.2 + f_shift, 0.3 + f_shift, 0.4 + f_shift),
                    };
                    2
                ],
            )
            .unwrap()
        };
        let base = trapezoidal_inclusion(&build(0.0, 0.0, 0.0), "x", "v0", 0.5)
            .unwrap()
            .raw;
        let t_up = trapezoidal_inclusion(&build(bump, 0.0, 0.0), "x", "v0", 0.5)
            .unwrap()
            .raw;
        let i_up = trapezoidal_inclusion(&build(0.0, bump, 0.0), "x", "v0", 0.5)
            .unwrap()
            .raw;
        let f_up = trapezoidal_inclusion(&build(0.0, 0.0, bump), "x", "v0", 0.5)
            .unwrap()
            .raw;
        prop_assert!(t_up >= base - 1e-12);
        prop_assert!(i_up <= base + 1e-12);
        prop_assert!(f_up <= base + 1e-12);
    }

    #[test]
    fn restricted_upper_grows_with_the_target(
        pdf in prop::collection::vec(unit(), 9),
        pcf in prop::collection::vec(unit(), 9),
    ) {
        use uset_core::roughsoft::plithogenic_upper_restricted;
        let universe = FiniteUniverse::new(vec!["a", "b", "c"]).unwrap();
        let to_matrix = |xs: &[f64]| {
            (0..3).map(|i| xs[i * 3..(i + 1) * 3].to_vec()).collect::<Vec<_>>()
        };
        let rel = PlithogenicRelation::new(
            universe,
            to_matrix(&pdf),
            to_matrix(&pcf),
            RelationFusion::PenalizedProduct,
        )
        .unwrap();
        for x in ["a", "b", "c"] {
            let small = plithogenic_upper_restricted(&rel, &["b"], x).unwrap();
            let large = plithogenic_upper_restricted(&rel, &["b", "c"], x).unwrap();
            prop_assert!(large >= small - 1e-12);
        }
    }

    #[test]
    fn pshss_weight_bounds(c1 in unit(), c2 in unit()) {
        use uset_core::plithogenic::ContradictionTable as Table;
        use uset_core::roughsoft::{pshss_weight, GammaComponent, PshssAttribute};
        let attr = |name: &str, c: f64| {
            let mut t = Table::zero(2, 1);
            t.set_pair(0, 1, vec![c]).unwrap();
            PshssAttribute::new(name, vec![&format!("{name}0"), &format!("{name}1")], t).unwrap()
        };
        let attrs = [attr("a", c1), attr("b", c2)];
        let gamma = [
            GammaComponent::Single("a0".into()),
            GammaComponent::Single("b0".into()),
        ];
        let gamma_star = [
            GammaComponent::Single("a1".into()),
            GammaComponent::Single("b1".into()),
        ];
        let w = pshss_weight(&attrs, &gamma, &gamma_star).unwrap();
        prop_assert!((0.0..=1.0).contains(&w));
        let self_w = pshss_weight(&attrs, &gamma, &gamma).unwrap();
        prop_assert!((self_w - 1.0).abs() < 1e-12);
        if c1 > 0.0 || c2 > 0.0 {
            prop_assert!(w < 1.0 + 1e-12);
            if c1 > 1e-9 && c2 > 1e-9 {
                prop_assert!(w < 1.0);
            }
        }
    }

    #[test]
    fn expectation_stays_in_outcome_hull(values in prop::collection::vec(unit(), 3)) {
        use uset_core::temporal::{expectation, ScenarioSpace};
        let space = ScenarioSpace::new(
            FiniteUniverse::new(vec!["x"]).unwrap(),
            vec![("w0", 0.2), ("w1", 0.5), ("w2", 0.3)],
            vec![("a", vec!["a0"])],
            vec![values.iter().map(|&v| DegreeVector::scalar(v).unwrap()).collect()],
            ContradictionTable::zero(1, 1),
            FusionRule::Mean,
        )
        .unwrap();
        let e = expectation(&space, "x", &["a0"], &BlendSpec::default()).unwrap().get(0);
        let lo = values.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = values.iter().cloned().fold(0.0, f64::max);
        prop_assert!(e >= lo - 1e-12 && e <= hi + 1e-12);
    }
}

#[test]
fn diophantine_residual_within_bound_when_ok() {
    use rand::Rng;
    use uset_core::constrained::{diophantine_check, DiophantineEntry};
    use uset_core::reductions::sample_rng;
    let mut rng = sample_rng(55);
    let mut ok_count = 0;
    for _ in 0..500 {
        let n = rng.random_range(1..=4);
        let entry = DiophantineEntry {
            mu: DegreeVector::new((0..n).map(|_| rng.random_range(0.0..=1.0)).collect()).unwrap(),
            alpha: (0..n).map(|_| rng.random_range(0.0..=1.0)).collect(),
            c: rng.random_range(0.5..=3.0),
        };
        let report = diophantine_check(&entry).unwrap();
        if report.ok {
            ok_count += 1;
            assert!(report.residual >= -1e-12 && report.residual <= entry.c + 1e-12);
        }
    }
    assert!(ok_count > 0);
}

#[test]
fn picture_zero_neutral_is_neutrosophic_admissible() {
    use uset_core::variants::picture_construct;
    let p = picture_construct(&[0.65, 0.12, 0.18], 0.0).unwrap();
    let triple = DegreeVector::new(p.main().to_vec()).unwrap();
    let report = validate_constraint(&triple, &ConstraintSpec::Neutrosophic).unwrap();
    assert!(report.ok);
}

//! Multi-level aggregation: m-polar value/pole weighting, staged pipelines
//! for type-n and iterated multi-level structures, nested-powerset reduction,
//! and tree/forest aggregation with label thresholding.

use crate::classic::FiniteUniverse;
use crate::degree::{weighted_mean, DegreeVector};
use crate::error::{Error, Result};
use crate::plithogenic::{ContradictionTable, FusionRule};

/// Ordered pole set with its own reflexive symmetric contradiction table.
#[derive(Debug, Clone, PartialEq)]
pub struct PoleSystem {
    poles: Vec<String>,
    pub table: ContradictionTable,
}

impl PoleSystem {
    pub fn new<S: Into<String>>(poles: Vec<S>, table: ContradictionTable) -> Result<PoleSystem> {
        let poles: Vec<String> = poles.into_iter().map(Into::into).collect();
        if poles.is_empty() {
            return Err(Error::EmptyInput("pole system needs at least one pole"));
        }
        if table.len() != poles.len() {
            return Err(Error::LengthMismatch {
                context: "pole table size",
                left: poles.len(),
                right: table.len(),
            });
        }
        table.require_axioms("pole contradiction table")?;
        Ok(PoleSystem { poles, table })
    }

    pub fn len(&self) -> usize {
        self.poles.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index_of(&self, pole: &str) -> Result<usize> {
        self.poles
            .iter()
            .position(|p| p == pole)
            .ok_or_else(|| Error::UnknownIdentifier {
                kind: "pole",
                name: pole.to_string(),
            })
    }
}

/// m-polar plithogenic system: every (element, value) pair carries one
/// payload per pole.
#[derive(Debug, Clone, PartialEq)]
pub struct MPolarSystem {
    universe: FiniteUniverse,
    values: Vec<String>,
    value_table: ContradictionTable,
    poles: PoleSystem,
    fusion: FusionRule,
    arity: usize,
    /// element-major, then value: entry = m payloads of the common arity
    table: Vec<Vec<DegreeVector>>,
}

impl MPolarSystem {
    pub fn new(
        universe: FiniteUniverse,
        values: Vec<&str>,
        value_table: ContradictionTable,
        poles: PoleSystem,
        fusion: FusionRule,
        table: Vec<Vec<DegreeVector>>,
    ) -> Result<MPolarSystem> {
        if values.is_empty() {
            return Err(Error::EmptyInput("m-polar system needs attribute values"));
        }
        if value_table.len() != values.len() {
            return Err(Error::LengthMismatch {
                context: "value table size",
                left: values.len(),
                right: value_table.len(),
            });
        }
        value_table.require_axioms("value contradiction table")?;
        if table.len() != universe.len() * values.len() {
            return Err(Error::LengthMismatch {
                context: "m-polar table size",
                left: universe.len() * values.len(),
                right: table.len(),
            });
        }
        let arity = table
            .first()
            .and_then(|e| e.first())
            .map(|d| d.arity())
            .ok_or(Error::EmptyInput("m-polar entries need at least one pole"))?;
        for entry in &table {
            if entry.len() != poles.len() {
                return Err(Error::LengthMismatch {
                    context: "poles per entry",
                    left: poles.len(),
                    right: entry.len(),
                });
            }
            for d in entry {
                if d.arity() != arity {
                    return Err(Error::ArityMismatch {
                        expected: arity,
                        got: d.arity(),
                    });
                }
            }
        }
        Ok(MPolarSystem {
            universe,
            values: values.into_iter().map(String::from).collect(),
            value_table,
            poles,
            fusion,
            arity,
            table,
        })
    }

    pub fn value_index(&self, value: &str) -> Result<usize> {
        self.values
            .iter()
            .position(|v| v == value)
            .ok_or_else(|| Error::UnknownIdentifier {
                kind: "attribute value",
                name: value.to_string(),
            })
    }

    pub fn payloads(&self, element: &str, value: &str) -> Result<&[DegreeVector]> {
        let x = self.universe.index_of(element)?;
        let v = self.value_index(value)?;
        Ok(&self.table[x * self.values.len() + v])
    }
}

/// Per-pole compatibility weights
/// `w_r = (1 - fuse(pCF_v(value, d))) * (1 - fuse(pCF_pole(pole_r, delta)))`.
pub fn mpolar_weights(
    sys: &MPolarSystem,
    value: &str,
    dominant_value: &str,
    dominant_pole: &str,
) -> Result<Vec<f64>> {
    let a = sys.value_index(value)?;
    let d = sys.value_index(dominant_value)?;
    let dp = sys.poles.index_of(dominant_pole)?;
    let value_factor = 1.0 - sys.value_table.fused(sys.fusion, a, d)?;
    (0..sys.poles.len())
        .map(|r| Ok(value_factor * (1.0 - sys.poles.table.fused(sys.fusion, r, dp)?)))
        .collect()
}

/// Componentwise weighted mean across poles under the dominant context
/// `(d, delta)`; all-zero weights yield the zero vector.
pub fn mpolar_aggregate(
    sys: &MPolarSystem,
    element: &str,
    value: &str,
    dominant_value: &str,
    dominant_pole: &str,
) -> Result<DegreeVector> {
    let weights = mpolar_weights(sys, value, dominant_value, dominant_pole)?;
    let payloads = sys.payloads(element, value)?;
    weighted_mean(payloads, &weights)
}

/// One stage of a hierarchical aggregation pipeline: an ordered value set,
/// its contradiction table, and the dominant value for that level.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelSpec {
    values: Vec<String>,
    table: ContradictionTable,
    dominant: usize,
    fusion: FusionRule,
}

impl LevelSpec {
    pub fn new(
        values: Vec<&str>,
        table: ContradictionTable,
        dominant: &str,
        fusion: FusionRule,
    ) -> Result<LevelSpec> {
        if values.is_empty() {
            return Err(Error::EmptyInput("level needs at least one value"));
        }
        if table.len() != values.len() {
            return Err(Error::LengthMismatch {
                context: "level table size",
                left: values.len(),
                right: table.len(),
            });
        }
        table.require_axioms("level contradiction table")?;
        let dominant = values
            .iter()
            .position(|v| *v == dominant)
            .ok_or_else(|| Error::UnknownIdentifier {
                kind: "dominant value",
                name: dominant.to_string(),
            })?;
        Ok(LevelSpec {
            values: values.into_iter().map(String::from).collect(),
            table,
            dominant,
            fusion,
        })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn weights(&self) -> Result<Vec<f64>> {
        (0..self.values.len())
            .map(|a| Ok(1.0 - self.table.fused(self.fusion, a, self.dominant)?))
            .collect()
    }
}

/// Leaf table of a staged pipeline: nesting depth equals pipeline length.
#[derive(Debug, Clone, PartialEq)]
pub enum StagedTable {
    Leaf(DegreeVector),
    Level(Vec<StagedTable>),
}

/// Fold a staged table bottom-up: each level takes the contradiction-weighted
/// mean of its children's aggregates against that level's dominant value.
pub fn staged_aggregate(pipeline: &[LevelSpec], table: &StagedTable) -> Result<DegreeVector> {
    match (pipeline.first(), table) {
        (None, StagedTable::Leaf(v)) => Ok(v.clone()),
        (None, StagedTable::Level(_)) => Err(Error::InvalidParameter(
            "leaf table deeper than the pipeline".into(),
        )),
        (Some(_), StagedTable::Leaf(_)) => Err(Error::InvalidParameter(
            "leaf table shallower than the pipeline".into(),
        )),
        (Some(level), StagedTable::Level(children)) => {
            if children.len() != level.len() {
                return Err(Error::LengthMismatch {
                    context: "staged level width",
                    left: level.len(),
                    right: children.len(),
                });
            }
            let reduced: Vec<DegreeVector> = children
                .iter()
                .map(|c| staged_aggregate(&pipeline[1..], c))
                .collect::<Result<_>>()?;
            weighted_mean(&reduced, &level.weights()?)
        }
    }
}

/// Nested degree set: a leaf vector or a finite nonempty collection.
#[derive(Debug, Clone, PartialEq)]
pub enum NestedDegreeSet {
    Leaf(DegreeVector),
    Set(Vec<NestedDegreeSet>),
}

/// Recursively replace every collection by the componentwise arithmetic mean
/// of its reduced children (inner means first, then outer).
pub fn nested_reduce(nested: &NestedDegreeSet) -> Result<DegreeVector> {
    match nested {
        NestedDegreeSet::Leaf(v) => Ok(v.clone()),
        NestedDegreeSet::Set(children) => {
            if children.is_empty() {
                return Err(Error::EmptyInput("nested collection must be nonempty"));
            }
            let reduced: Vec<DegreeVector> = children
                .iter()
                .map(nested_reduce)
                .collect::<Result<_>>()?;
            let weights = vec![1.0; reduced.len()];
            weighted_mean(&reduced, &weights)
        }
    }
}

/// Weighted mean of the per-value nested reductions, with compatibility
/// weights against the dominant value.
pub fn superhyper_aggregate(
    per_value: &[(&str, NestedDegreeSet)],
    table: &ContradictionTable,
    fusion: FusionRule,
    dominant: &str,
) -> Result<DegreeVector> {
    if per_value.is_empty() {
        return Err(Error::EmptyInput("superhyper aggregation needs values"));
    }
    if table.len() != per_value.len() {
        return Err(Error::LengthMismatch {
            context: "superhyper table size",
            left: per_value.len(),
            right: table.len(),
        });
    }
    let d = per_value
        .iter()
        .position(|(name, _)| *name == dominant)
        .ok_or_else(|| Error::UnknownIdentifier {
            kind: "dominant value",
            name: dominant.to_string(),
        })?;
    let reduced: Vec<DegreeVector> = per_value
        .iter()
        .map(|(_, nested)| nested_reduce(nested))
        .collect::<Result<_>>()?;
    let weights: Vec<f64> = (0..per_value.len())
        .map(|a| Ok(1.0 - table.fused(fusion, a, d)?))
        .collect::<Result<_>>()?;
    weighted_mean(&reduced, &weights)
}

/// Ordered label scale with threshold cuts and a label contradiction table.
/// `cuts` are ascending; a degree maps to the highest label whose cut it
/// reaches.
#[derive(Debug, Clone, PartialEq)]
pub struct LabelScale {
    labels: Vec<String>,
    cuts: Vec<f64>,
    table: ContradictionTable,
    fusion: FusionRule,
}

impl LabelScale {
    pub fn new(
        labels: Vec<&str>,
        cuts: Vec<f64>,
        table: ContradictionTable,
        fusion: FusionRule,
    ) -> Result<LabelScale> {
        if labels.is_empty() {
            return Err(Error::EmptyInput("label scale needs labels"));
        }
        if cuts.len() + 1 != labels.len() {
            return Err(Error::LengthMismatch {
                context: "label cuts",
                left: labels.len() - 1,
                right: cuts.len(),
            });
        }
        if cuts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter("threshold cuts must ascend".into()));
        }
        if table.len() != labels.len() {
            return Err(Error::LengthMismatch {
                context: "label table size",
                left: labels.len(),
                right: table.len(),
            });
        }
        table.require_axioms("label contradiction table")?;
        Ok(LabelScale {
            labels: labels.into_iter().map(String::from).collect(),
            cuts,
            table,
            fusion,
        })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownIdentifier {
                kind: "label",
                name: label.to_string(),
            })
    }

    /// Threshold a degree into a label index.
    pub fn classify(&self, degree: f64) -> usize {
        self.cuts.iter().filter(|&&c| degree >= c).count()
    }

    fn weight(&self, label: usize, dominant: usize) -> Result<f64> {
        Ok(1.0 - self.table.fused(self.fusion, label, dominant)?)
    }
}

/// Node of an attribute tree: leaves carry an observed label and degree,
/// internal nodes aggregate their children.
#[derive(Debug, Clone, PartialEq)]
pub enum TreeNode {
    Leaf {
        name: String,
        label: String,
        degree: f64,
    },
    Internal {
        name: String,
        children: Vec<TreeNode>,
    },
}

/// Rooted attribute tree over a shared label scale with a dominant label.
#[derive(Debug, Clone, PartialEq)]
pub struct AttributeTree {
    pub root: TreeNode,
    pub scale: LabelScale,
    pub dominant: String,
}

/// Aggregate the tree bottom-up: each internal node takes the weighted mean
/// of its children's degrees (weights from each child's label against the
/// dominant) and is relabeled by thresholding. A node whose children all get
/// zero weight aggregates to degree 0 and the lowest label.
pub fn tree_aggregate(tree: &AttributeTree) -> Result<(f64, String)> {
    let dominant = tree.scale.label_index(&tree.dominant)?;
    let (degree, label) = aggregate_node(&tree.root, &tree.scale, dominant)?;
    Ok((degree, tree.scale.labels()[label].clone()))
}

fn aggregate_node(node: &TreeNode, scale: &LabelScale, dominant: usize) -> Result<(f64, usize)> {
    match node {
        TreeNode::Leaf { label, degree, .. } => Ok((*degree, scale.label_index(label)?)),
        TreeNode::Internal { children, .. } => {
            if children.is_empty() {
                return Err(Error::EmptyInput("internal tree node needs children"));
            }
            let mut num = 0.0;
            let mut den = 0.0;
            for child in children {
                let (deg, label) = aggregate_node(child, scale, dominant)?;
                let w = scale.weight(label, dominant)?;
                num += w * deg;
                den += w;
            }
            let degree = if den > 0.0 { num / den } else { 0.0 };
            Ok((degree, scale.classify(degree)))
        }
    }
}

/// Disjoint trees sharing one label scale, fused under a forest-level
/// dominant label.
#[derive(Debug, Clone, PartialEq)]
pub struct AttributeForest {
    pub trees: Vec<AttributeTree>,
    pub dominant: String,
}

/// Aggregate each tree, then take the contradiction-weighted mean of the
/// root degrees using each root's label against the forest dominant.
pub fn forest_aggregate(forest: &AttributeForest) -> Result<f64> {
    if forest.trees.is_empty() {
        return Err(Error::EmptyInput("forest needs at least one tree"));
    }
    let scale = &forest.trees[0].scale;
    for t in &forest.trees[1..] {
        if t.scale.labels() != scale.labels() {
            return Err(Error::InvalidParameter(
                "forest trees must share one label system".into(),
            ));
        }
    }
    let dominant = scale.label_index(&forest.dominant)?;
    let mut num = 0.0;
    let mut den = 0.0;
    for tree in &forest.trees {
        let (deg, label) = tree_aggregate(tree)?;
        let w = scale.weight(scale.label_index(&label)?, dominant)?;
        num += w * deg;
        den += w;
    }
    Ok(if den > 0.0 { num / den } else { 0.0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classic::FiniteUniverse;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() < tol
    }

    fn scalar(x: f64) -> DegreeVector {
        DegreeVector::scalar(x).unwrap()
    }

    fn hiring_system() -> MPolarSystem {
        let value_table = ContradictionTable::from_scalar_matrix(vec![
            vec![0.0, 0.30, 0.80],
            vec![0.30, 0.0, 0.40],
            vec![0.80, 0.40, 0.0],
        ])
        .unwrap();
        let pole_table = ContradictionTable::from_scalar_matrix(vec![
            vec![0.0, 0.20, 1.00],
            vec![0.20, 0.0, 0.20],
            vec![1.00, 0.20, 0.0],
        ])
        .unwrap();
        let poles = PoleSystem::new(vec!["pro", "neutral", "contra"], pole_table).unwrap();
        let rows: Vec<Vec<f64>> = vec![
            // c1
            vec![0.60, 0.30, 0.10],
            vec![0.70, 0.20, 0.10],
            vec![0.40, 0.20, 0.40],
            // c2
            vec![0.30, 0.20, 0.50],
            vec![0.50, 0.30, 0.20],
            vec![0.80, 0.10, 0.10],
            // c3
            vec![0.20, 0.30, 0.50],
            vec![0.40, 0.30, 0.30],
            vec![0.60, 0.20, 0.20],
        ];
        let table = rows
            .into_iter()
            .map(|r| r.into_iter().map(scalar).collect())
            .collect();
        MPolarSystem::new(
            FiniteUniverse::new(vec!["c1", "c2", "c3"]).unwrap(),
            vec!["junior", "mid", "senior"],
            value_table,
            poles,
            FusionRule::Mean,
            table,
        )
        .unwrap()
    }

    #[test]
    fn hiring_weights_and_aggregates() {
        let sys = hiring_system();
        let w = mpolar_weights(&sys, "mid", "senior", "pro").unwrap();
        assert!(close(w[0], 0.60, 1e-12));
        assert!(close(w[1], 0.48, 1e-12));
        assert!(close(w[2], 0.0, 1e-12));

        let mid = mpolar_aggregate(&sys, "c1", "mid", "senior", "pro").unwrap();
        assert!(close(mid.get(0), 0.478, 1e-3));
        let senior = mpolar_aggregate(&sys, "c1", "senior", "senior", "pro").unwrap();
        assert!(close(senior.get(0), 0.311, 1e-3));
    }

    #[test]
    fn constructors_reject_invalid_tables() {
        let asym = ContradictionTable::from_scalar_matrix(vec![
            vec![0.0, 0.3],
            vec![0.4, 0.0],
        ])
        .unwrap();
        assert!(PoleSystem::new(vec!["p", "q"], asym.clone()).is_err());
        assert!(LevelSpec::new(vec!["a", "b"], asym.clone(), "a", FusionRule::Mean).is_err());
        assert!(LabelScale::new(vec!["lo", "hi"], vec![0.5], asym, FusionRule::Mean).is_err());
    }

    #[test]
    fn zero_contradictions_give_unit_weights() {
        let value_table = ContradictionTable::zero(2, 1);
        let pole_table = ContradictionTable::zero(2, 1);
        let poles = PoleSystem::new(vec!["p", "q"], pole_table).unwrap();
        let table = vec![
            vec![scalar(0.4), scalar(0.6)],
            vec![scalar(0.1), scalar(0.2)],
        ];
        let sys = MPolarSystem::new(
            FiniteUniverse::new(vec!["x"]).unwrap(),
            vec!["a", "b"],
            value_table,
            poles,
            FusionRule::Mean,
            table,
        )
        .unwrap();
        let w = mpolar_weights(&sys, "a", "b", "p").unwrap();
        assert_eq!(w, vec![1.0, 1.0]);
    }

    fn distance_level(values: Vec<&str>, dominant: &str) -> LevelSpec {
        let n = values.len();
        let g = (n - 1) as f64;
        let mut matrix = vec![vec![0.0; n]; n];
        for (i, row) in matrix.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (i as f64 - j as f64).abs() / g;
            }
        }
        LevelSpec::new(
            values,
            ContradictionTable::from_scalar_matrix(matrix).unwrap(),
            dominant,
            FusionRule::Mean,
        )
        .unwrap()
    }

    #[test]
    fn type3_logistics_pipeline() {
        // scope level over the printed mode-level matrix; the mode level uses
        // the worked chain's weights (1/2, 1, 0) against air
        let mode_table = ContradictionTable::from_scalar_matrix(vec![
            vec![0.0, 0.5, 0.5],
            vec![0.5, 0.0, 1.0],
            vec![0.5, 1.0, 0.0],
        ])
        .unwrap();
        let pipeline = vec![
            distance_level(vec!["local", "regional", "global"], "global"),
            LevelSpec::new(vec!["road", "air", "sea"], mode_table, "air", FusionRule::Mean)
                .unwrap(),
        ];
        let rows = [
            [0.7333, 0.8500, 0.7500],
            [0.7000, 0.8800, 0.7200],
            [0.7600, 0.9200, 0.7800],
        ];
        let table = StagedTable::Level(
            rows.iter()
                .map(|r| StagedTable::Level(r.iter().map(|&x| StagedTable::Leaf(scalar(x))).collect()))
                .collect(),
        );
        let out = staged_aggregate(&pipeline, &table).unwrap();
        assert!(close(out.get(0), 0.8511, 1e-3));
    }

    #[test]
    fn type2_treatment_pipeline() {
        let pipeline = vec![
            distance_level(vec!["L", "M", "H"], "H"),
            distance_level(vec!["q0", "q1", "q2"], "q2"),
        ];
        let data = [
            [[0.35, 0.25, 0.60], [0.55, 0.20, 0.45], [0.70, 0.15, 0.35]],
            [[0.45, 0.25, 0.55], [0.65, 0.18, 0.40], [0.82, 0.12, 0.28]],
            [[0.52, 0.20, 0.48], [0.78, 0.14, 0.26], [0.90, 0.10, 0.18]],
        ];
        let table = StagedTable::Level(
            data.iter()
                .map(|row| {
                    StagedTable::Level(
                        row.iter()
                            .map(|t| StagedTable::Leaf(DegreeVector::new(t.to_vec()).unwrap()))
                            .collect(),
                    )
                })
                .collect(),
        );
        let out = staged_aggregate(&pipeline, &table).unwrap();
        assert!(close(out.get(0), 0.8278, 1e-3));
        assert!(close(out.get(1), 0.1222, 1e-3));
        assert!(close(out.get(2), 0.2444, 1e-3));
    }

    #[test]
    fn staged_depth_mismatch_errors() {
        let pipeline = vec![distance_level(vec!["a", "b"], "a")];
        assert!(staged_aggregate(&pipeline, &StagedTable::Leaf(scalar(0.5))).is_err());
        assert!(staged_aggregate(&[], &StagedTable::Level(vec![])).is_err());
    }

    #[test]
    fn nested_reduce_trip_example() {
        let free = NestedDegreeSet::Set(vec![
            NestedDegreeSet::Set(vec![
                NestedDegreeSet::Leaf(scalar(0.90)),
                NestedDegreeSet::Leaf(scalar(0.80)),
            ]),
            NestedDegreeSet::Set(vec![
                NestedDegreeSet::Leaf(scalar(0.85)),
                NestedDegreeSet::Leaf(scalar(0.75)),
            ]),
        ]);
        assert!(close(nested_reduce(&free).unwrap().get(0), 0.825, 1e-12));

        let single = NestedDegreeSet::Set(vec![NestedDegreeSet::Leaf(scalar(0.42))]);
        assert!(close(nested_reduce(&single).unwrap().get(0), 0.42, 1e-12));

        assert!(nested_reduce(&NestedDegreeSet::Set(vec![])).is_err());
    }

    #[test]
    fn nested_reduce_supplier_example() {
        // value "single" of the multi-tier supplier portfolio
        let nested = NestedDegreeSet::Set(vec![
            NestedDegreeSet::Set(vec![
                NestedDegreeSet::Leaf(DegreeVector::new(vec![0.70, 0.20, 0.30]).unwrap()),
                NestedDegreeSet::Leaf(DegreeVector::new(vec![0.60, 0.30, 0.30]).unwrap()),
            ]),
            NestedDegreeSet::Set(vec![NestedDegreeSet::Leaf(
                DegreeVector::new(vec![0.75, 0.20, 0.25]).unwrap(),
            )]),
        ]);
        let out = nested_reduce(&nested).unwrap();
        assert!(close(out.get(0), 0.70, 1e-12));
        assert!(close(out.get(1), 0.225, 1e-12));
        assert!(close(out.get(2), 0.275, 1e-12));
    }

    #[test]
    fn superhyper_triage_example() {
        let table = ContradictionTable::from_scalar_matrix(vec![
            vec![0.0, 0.4, 0.7],
            vec![0.4, 0.0, 0.3],
            vec![0.7, 0.3, 0.0],
        ])
        .unwrap();
        let leaf = |t: [f64; 3]| NestedDegreeSet::Leaf(DegreeVector::new(t.to_vec()).unwrap());
        let per_value = vec![
            (
                "low",
                NestedDegreeSet::Set(vec![leaf([0.30, 0.50, 0.40]), leaf([0.40, 0.40, 0.50])]),
            ),
            (
                "moderate",
                NestedDegreeSet::Set(vec![leaf([0.50, 0.30, 0.40]), leaf([0.60, 0.30, 0.30])]),
            ),
            (
                "high",
                NestedDegreeSet::Set(vec![leaf([0.80, 0.10, 0.10]), leaf([0.70, 0.20, 0.20])]),
            ),
        ];
        let out = superhyper_aggregate(&per_value, &table, FusionRule::Mean, "high").unwrap();
        assert!(close(out.get(0), 0.620, 1e-3));
        assert!(close(out.get(1), 0.2475, 1e-3));
        assert!(close(out.get(2), 0.265, 1e-3));
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

    #[test]
    fn data_engineer_tree() {
        let leaf = |name: &str, label: &str, degree: f64| TreeNode::Leaf {
            name: name.into(),
            label: label.into(),
            degree,
        };
        let tree = AttributeTree {
            root: TreeNode::Internal {
                name: "Fit".into(),
                children: vec![
                    TreeNode::Internal {
                        name: "Technical".into(),
                        children: vec![leaf("Coding", "High", 0.82), leaf("DataModeling", "Med", 0.68)],
                    },
                    TreeNode::Internal {
                        name: "Experience".into(),
                        children: vec![leaf("Projects", "High", 0.75), leaf("Domain", "Med", 0.55)],
                    },
                    TreeNode::Internal {
                        name: "Culture".into(),
                        children: vec![
                            leaf("Communication", "Med", 0.62),
                            leaf("Teamwork", "High", 0.78),
                        ],
                    },
                ],
            },
            scale: hiring_scale(),
            dominant: "High".into(),
        };
        let (deg, label) = tree_aggregate(&tree).unwrap();
        // formula value; the printed 0.72068 does not match its own quotient
        assert!(close(deg, 1.943824 / 2.7, 1e-5));
        assert!(close(deg, 0.71994, 1e-4));
        assert_eq!(label, "High");
    }

    #[test]
    fn single_leaf_tree_is_identity() {
        let tree = AttributeTree {
            root: TreeNode::Leaf {
                name: "only".into(),
                label: "Med".into(),
                degree: 0.63,
            },
            scale: hiring_scale(),
            dominant: "High".into(),
        };
        let (deg, label) = tree_aggregate(&tree).unwrap();
        assert!(close(deg, 0.63, 1e-12));
        assert_eq!(label, "Med");
    }

    #[test]
    fn zero_weight_node_falls_to_the_lowest_label() {
        // every leaf label is maximally contradictory to the dominant one
        let scale = LabelScale::new(
            vec!["Low", "High"],
            vec![0.5],
            ContradictionTable::from_scalar_matrix(vec![vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap(),
            FusionRule::Mean,
        )
        .unwrap();
        let tree = AttributeTree {
            root: TreeNode::Internal {
                name: "root".into(),
                children: vec![TreeNode::Leaf {
                    name: "only".into(),
                    label: "Low".into(),
                    degree: 0.9,
                }],
            },
            scale,
            dominant: "High".into(),
        };
        let (deg, label) = tree_aggregate(&tree).unwrap();
        assert_eq!(deg, 0.0);
        assert_eq!(label, "Low");
    }

    #[test]
    fn one_tree_forest_reduces_to_tree() {
        let tree = AttributeTree {
            root: TreeNode::Leaf {
                name: "n".into(),
                label: "High".into(),
                degree: 0.8,
            },
            scale: hiring_scale(),
            dominant: "High".into(),
        };
        let forest = AttributeForest {
            trees: vec![tree.clone()],
            dominant: "High".into(),
        };
        let f = forest_aggregate(&forest).unwrap();
        let (t, _) = tree_aggregate(&tree).unwrap();
        assert!(close(f, t, 1e-12));
    }
}

//! Scenario documents: the JSON file format for every supported set kind,
//! validated loading into the core structures, kind-dispatched execution,
//! and score-based ranking.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use uset_core::classic::{rough_approximate, FiniteUniverse, RoughContext};
use uset_core::constrained::{constrained_aggregate, diophantine_check, DiophantineEntry};
use uset_core::degree::{
    Band, ComplexDegree, ConstraintSpec, DegreeVector, DualDegree, IntervalDegree,
    TrapezoidalNumber,
};
use uset_core::hierarchy::{
    forest_aggregate, mpolar_aggregate, mpolar_weights, staged_aggregate, superhyper_aggregate,
    tree_aggregate, AttributeForest, AttributeTree, LabelScale, LevelSpec, MPolarSystem,
    NestedDegreeSet, PoleSystem, StagedTable, TreeNode,
};
use uset_core::plithogenic::{
    aggregate_dominant, classify_band, compatibility_weights, validate_bundle, AppurtenanceTable,
    AttributeSystem, ContradictionTable, FusionRule, Payload, PayloadKind, PlithogenicBundle,
};
use uset_core::roughsoft::{
    expert_degree, pshss_fuzzy_aggregate, pshss_intuitionistic_aggregate,
    pshss_score_neutrosophic, pshss_weight, soft_rough_lower, soft_rough_upper, ActivatedTriple,
    ExpertContext, ExpertParam, GammaComponent, Opinion, PlithogenicRelation, PshssAttribute,
    RelationFusion, SoftApproxSpace, SoftCombiner,
};
use uset_core::temporal::{expectation, quantile, BlendSpec, ScenarioSpace, TConorm, TNorm};
use uset_core::variants::{
    linguistic_aggregate, trapezoidal_inclusion, LinguisticBundle, LinguisticDominant,
    LinguisticValues, RefinedSignature, TermContradiction, TermSet, TrapBundle, TrapTripleDegree,
};
use uset_core::variants::{nonstandard_aggregate, refined_scalarize};

use crate::report::round_to;

/// Contradiction matrix cell: a plain number for one channel, an array for
/// several.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum ChannelEntry {
    Scalar(f64),
    Vector(Vec<f64>),
}

impl ChannelEntry {
    fn channels(&self) -> Vec<f64> {
        match self {
            ChannelEntry::Scalar(x) => vec![*x],
            ChannelEntry::Vector(v) => v.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct MatrixDoc {
    pub matrix: Vec<Vec<ChannelEntry>>,
}

impl MatrixDoc {
    fn to_table(&self) -> Result<ContradictionTable> {
        let channels = self
            .matrix
            .first()
            .and_then(|r| r.first())
            .map(|e| e.channels().len())
            .unwrap_or(1);
        let rows = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|e| e.channels()).collect())
            .collect();
        Ok(ContradictionTable::from_matrix(channels, rows)?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct AttributeDoc {
    pub name: String,
    pub values: Vec<String>,
}

impl AttributeDoc {
    fn to_system(&self) -> Result<AttributeSystem> {
        Ok(AttributeSystem::new(
            &self.name,
            self.values.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
        )?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(rename_all = "snake_case")]
pub enum FusionDoc {
    Mean,
    Max,
}

impl FusionDoc {
    fn rule(&self) -> FusionRule {
        match self {
            FusionDoc::Mean => FusionRule::Mean,
            FusionDoc::Max => FusionRule::Max,
        }
    }
}

fn default_fusion() -> FusionDoc {
    FusionDoc::Mean
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConstraintDoc {
    Ifs,
    Neutrosophic,
    Picture { t: usize },
    Spherical { lambda: f64 },
    TSpherical { t: f64, lambda: f64 },
    QRung { q: f64, n: usize },
    Band { lo: f64, hi: f64 },
}

impl ConstraintDoc {
    fn to_spec(&self) -> ConstraintSpec {
        match self {
            ConstraintDoc::Ifs => ConstraintSpec::Ifs,
            ConstraintDoc::Neutrosophic => ConstraintSpec::Neutrosophic,
            ConstraintDoc::Picture { t } => ConstraintSpec::Picture { t: *t },
            ConstraintDoc::Spherical { lambda } => ConstraintSpec::Spherical { lambda: *lambda },
            ConstraintDoc::TSpherical { t, lambda } => ConstraintSpec::TSpherical {
                t_exp: *t,
                lambda: *lambda,
            },
            ConstraintDoc::QRung { q, n } => ConstraintSpec::QRung { q: *q, n: *n },
            ConstraintDoc::Band { lo, hi } => ConstraintSpec::Band { lo: *lo, hi: *hi },
        }
    }
}

/// Complex degree on disk: modulus plus argument in degrees, matching the
/// worked examples; conversion to radians happens at the boundary.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ComplexEntryDoc {
    #[serde(rename = "mod")]
    pub modulus: f64,
    pub arg_deg: f64,
}

/// Dual number on disk: standard part and epsilon coefficient.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct DualEntryDoc {
    pub std: f64,
    pub eps: f64,
}

fn ordered_lookup<'a, T>(
    map: &'a BTreeMap<String, T>,
    key: &str,
    what: &str,
) -> Result<&'a T> {
    map.get(key)
        .ok_or_else(|| anyhow!("missing {what} entry for '{key}'"))
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PlithogenicDoc {
    pub universe: Vec<String>,
    pub attribute: AttributeDoc,
    pub contradiction: MatrixDoc,
    /// per element, per value: the degree components
    pub appurtenance: BTreeMap<String, BTreeMap<String, Vec<f64>>>,
    #[serde(default)]
    pub band: Option<[f64; 2]>,
    #[serde(default = "default_fusion")]
    pub fusion: FusionDoc,
    #[serde(default)]
    pub constraint: Option<ConstraintDoc>,
    #[serde(default)]
    pub dominant: Option<String>,
}

impl PlithogenicDoc {
    pub fn to_bundle(&self) -> Result<PlithogenicBundle> {
        let attr = self.attribute.to_system()?;
        let universe = FiniteUniverse::new(self.universe.clone())?;
        let band = match self.band {
            Some([lo, hi]) => Band::new(lo, hi)?,
            None => Band::UNIT,
        };
        let arity = self
            .appurtenance
            .values()
            .next()
            .and_then(|row| row.values().next())
            .map(|v| v.len())
            .ok_or_else(|| anyhow!("appurtenance table is empty"))?;
        let mut entries = Vec::new();
        for x in universe.elements() {
            let row = ordered_lookup(&self.appurtenance, x, "appurtenance")?;
            for v in attr.values() {
                let comps = ordered_lookup(row, v, "appurtenance")?;
                let deg = DegreeVector::with_band(comps.clone(), band)
                    .with_context(|| format!("appurtenance at ({x}, {v})"))?;
                entries.push(Payload::Vector(deg));
            }
        }
        let table = AppurtenanceTable::new(
            universe,
            attr.len(),
            PayloadKind::Vector { arity, band },
            entries,
        )?;
        Ok(PlithogenicBundle::new(
            attr,
            table,
            self.contradiction.to_table()?,
            self.fusion.rule(),
            self.constraint.as_ref().map(|c| c.to_spec()),
        )?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ComplexDoc {
    pub universe: Vec<String>,
    pub attribute: AttributeDoc,
    pub contradiction: MatrixDoc,
    pub appurtenance: BTreeMap<String, BTreeMap<String, Vec<ComplexEntryDoc>>>,
    #[serde(default = "default_fusion")]
    pub fusion: FusionDoc,
    #[serde(default)]
    pub dominant: Option<String>,
}

impl ComplexDoc {
    fn to_bundle(&self) -> Result<PlithogenicBundle> {
        let attr = self.attribute.to_system()?;
        let universe = FiniteUniverse::new(self.universe.clone())?;
        let arity = self
            .appurtenance
            .values()
            .next()
            .and_then(|row| row.values().next())
            .map(|v| v.len())
            .ok_or_else(|| anyhow!("appurtenance table is empty"))?;
        let mut entries = Vec::new();
        for x in universe.elements() {
            let row = ordered_lookup(&self.appurtenance, x, "appurtenance")?;
            for v in attr.values() {
                let comps = ordered_lookup(row, v, "appurtenance")?;
                let payload: Vec<ComplexDegree> = comps
                    .iter()
                    .map(|c| ComplexDegree::from_polar_deg(c.modulus, c.arg_deg))
                    .collect::<uset_core::Result<_>>()
                    .with_context(|| format!("complex degree at ({x}, {v})"))?;
                entries.push(Payload::Complex(payload));
            }
        }
        let table =
            AppurtenanceTable::new(universe, attr.len(), PayloadKind::Complex { arity }, entries)?;
        Ok(PlithogenicBundle::new(
            attr,
            table,
            self.contradiction.to_table()?,
            self.fusion.rule(),
            None,
        )?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct IntervalDoc {
    pub universe: Vec<String>,
    pub attribute: AttributeDoc,
    pub contradiction: MatrixDoc,
    pub appurtenance: BTreeMap<String, BTreeMap<String, Vec<[f64; 2]>>>,
    #[serde(default = "default_fusion")]
    pub fusion: FusionDoc,
    #[serde(default)]
    pub dominant: Option<String>,
}

impl IntervalDoc {
    fn to_bundle(&self) -> Result<PlithogenicBundle> {
        let attr = self.attribute.to_system()?;
        let universe = FiniteUniverse::new(self.universe.clone())?;
        let arity = self
            .appurtenance
            .values()
            .next()
            .and_then(|row| row.values().next())
            .map(|v| v.len())
            .ok_or_else(|| anyhow!("appurtenance table is empty"))?;
        let mut entries = Vec::new();
        for x in universe.elements() {
            let row = ordered_lookup(&self.appurtenance, x, "appurtenance")?;
            for v in attr.values() {
                let comps = ordered_lookup(row, v, "appurtenance")?;
                let payload: Vec<IntervalDegree> = comps
                    .iter()
                    .map(|[lo, hi]| IntervalDegree::new(*lo, *hi))
                    .collect::<uset_core::Result<_>>()
                    .with_context(|| format!("interval degree at ({x}, {v})"))?;
                entries.push(Payload::Interval(payload));
            }
        }
        let table =
            AppurtenanceTable::new(universe, attr.len(), PayloadKind::Interval { arity }, entries)?;
        Ok(PlithogenicBundle::new(
            attr,
            table,
            self.contradiction.to_table()?,
            self.fusion.rule(),
            None,
        )?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct MpolarDoc {
    pub universe: Vec<String>,
    pub attribute: AttributeDoc,
    pub value_contradiction: MatrixDoc,
    pub poles: Vec<String>,
    pub pole_contradiction: MatrixDoc,
    /// per element, per value: m rows of s components
    pub appurtenance: BTreeMap<String, BTreeMap<String, Vec<Vec<f64>>>>,
    #[serde(default = "default_fusion")]
    pub fusion: FusionDoc,
    #[serde(default)]
    pub dominant: Option<String>,
    pub dominant_pole: String,
}

impl MpolarDoc {
    fn to_system(&self) -> Result<MPolarSystem> {
        let universe = FiniteUniverse::new(self.universe.clone())?;
        let poles = PoleSystem::new(self.poles.clone(), self.pole_contradiction.to_table()?)?;
        let mut table = Vec::new();
        for x in &self.universe {
            let row = ordered_lookup(&self.appurtenance, x, "appurtenance")?;
            for v in &self.attribute.values {
                let entry = ordered_lookup(row, v, "appurtenance")?;
                let payloads: Vec<DegreeVector> = entry
                    .iter()
                    .map(|comps| DegreeVector::new(comps.clone()))
                    .collect::<uset_core::Result<_>>()
                    .with_context(|| format!("m-polar payload at ({x}, {v})"))?;
                table.push(payloads);
            }
        }
        Ok(MPolarSystem::new(
            universe,
            self.attribute.values.iter().map(|s| s.as_str()).collect(),
            self.value_contradiction.to_table()?,
            poles,
            self.fusion.rule(),
            table,
        )?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(rename_all = "snake_case")]
pub enum LinguisticPcfDoc {
    Distance,
    Table(MatrixDoc),
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct LinguisticDoc {
    pub universe: Vec<String>,
    pub terms: Vec<String>,
    pub pcf: LinguisticPcfDoc,
    /// absent for the single-term variant; term subsets for the hesitant one
    #[serde(default)]
    pub value_sets: Option<Vec<Vec<String>>>,
    /// per element: one degree row per value (term or value set)
    pub appurtenance: BTreeMap<String, Vec<Vec<f64>>>,
    #[serde(default = "default_fusion")]
    pub fusion: FusionDoc,
    #[serde(default)]
    pub dominant: Option<String>,
    #[serde(default)]
    pub dominant_set: Option<Vec<String>>,
}

impl LinguisticDoc {
    fn to_bundle(&self) -> Result<LinguisticBundle> {
        let terms = TermSet::new(self.terms.clone())?;
        let pcf = match &self.pcf {
            LinguisticPcfDoc::Distance => TermContradiction::Distance,
            LinguisticPcfDoc::Table(m) => TermContradiction::Table(m.to_table()?),
        };
        let values = match &self.value_sets {
            None => LinguisticValues::Single,
            Some(sets) => {
                let idx_sets = sets
                    .iter()
                    .map(|s| {
                        s.iter()
                            .map(|t| Ok(terms.index_of(t)?))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                LinguisticValues::Hesitant(idx_sets)
            }
        };
        let universe = FiniteUniverse::new(self.universe.clone())?;
        let mut table = Vec::new();
        for x in &self.universe {
            let rows = ordered_lookup(&self.appurtenance, x, "appurtenance")?;
            let row: Vec<DegreeVector> = rows
                .iter()
                .map(|comps| DegreeVector::new(comps.clone()))
                .collect::<uset_core::Result<_>>()
                .with_context(|| format!("linguistic degrees of '{x}'"))?;
            table.push(row);
        }
        Ok(LinguisticBundle::new(
            terms,
            pcf,
            values,
            self.fusion.rule(),
            universe,
            table,
        )?)
    }

    fn dominant(&self, cli_dominant: Option<&str>) -> Result<LinguisticDominant> {
        if let Some(d) = cli_dominant {
            return Ok(match &self.value_sets {
                None => LinguisticDominant::Term(d.to_string()),
                Some(_) => LinguisticDominant::Set(vec![d.to_string()]),
            });
        }
        if let Some(set) = &self.dominant_set {
            return Ok(LinguisticDominant::Set(set.clone()));
        }
        if let Some(d) = &self.dominant {
            return Ok(match &self.value_sets {
                None => LinguisticDominant::Term(d.clone()),
                Some(_) => LinguisticDominant::Set(vec![d.clone()]),
            });
        }
        bail!("no dominant value given (document or --dominant)")
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum TreeNodeDoc {
    Leaf {
        name: String,
        label: String,
        degree: f64,
    },
    Internal {
        name: String,
        children: Vec<TreeNodeDoc>,
    },
}

impl TreeNodeDoc {
    fn to_node(&self) -> TreeNode {
        match self {
            TreeNodeDoc::Leaf {
                name,
                label,
                degree,
            } => TreeNode::Leaf {
                name: name.clone(),
                label: label.clone(),
                degree: *degree,
            },
            TreeNodeDoc::Internal { name, children } => TreeNode::Internal {
                name: name.clone(),
                children: children.iter().map(|c| c.to_node()).collect(),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct LabelScaleDoc {
    pub labels: Vec<String>,
    pub cuts: Vec<f64>,
    pub contradiction: MatrixDoc,
    #[serde(default = "default_fusion")]
    pub fusion: FusionDoc,
}

impl LabelScaleDoc {
    fn to_scale(&self) -> Result<LabelScale> {
        Ok(LabelScale::new(
            self.labels.iter().map(|s| s.as_str()).collect(),
            self.cuts.clone(),
            self.contradiction.to_table()?,
            self.fusion.rule(),
        )?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct TreeDoc {
    pub scale: LabelScaleDoc,
    pub dominant: String,
    pub root: TreeNodeDoc,
}

impl TreeDoc {
    fn to_tree(&self) -> Result<AttributeTree> {
        Ok(AttributeTree {
            root: self.root.to_node(),
            scale: self.scale.to_scale()?,
            dominant: self.dominant.clone(),
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ForestDoc {
    pub scale: LabelScaleDoc,
    pub dominant: String,
    pub trees: Vec<TreeNodeDoc>,
}

impl ForestDoc {
    fn to_forest(&self) -> Result<AttributeForest> {
        let scale = self.scale.to_scale()?;
        let trees = self
            .trees
            .iter()
            .map(|t| {
                Ok(AttributeTree {
                    root: t.to_node(),
                    scale: scale.clone(),
                    dominant: self.dominant.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(AttributeForest {
            trees,
            dominant: self.dominant.clone(),
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RoughDoc {
    pub universe: Vec<String>,
    pub blocks: Vec<Vec<String>>,
    #[serde(default)]
    pub target: Option<Vec<String>>,
}

impl RoughDoc {
    fn to_context(&self) -> Result<RoughContext> {
        Ok(RoughContext::new(
            FiniteUniverse::new(self.universe.clone())?,
            self.blocks
                .iter()
                .map(|b| b.iter().map(|s| s.as_str()).collect())
                .collect(),
        )?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RelationDoc {
    pub pdf: Vec<Vec<f64>>,
    pub pcf: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(rename_all = "snake_case")]
pub enum CombinerDoc {
    PenalizedProduct,
    FirstProjection,
    SecondProjection,
}

impl CombinerDoc {
    fn to_combiner(&self) -> SoftCombiner {
        match self {
            CombinerDoc::PenalizedProduct => SoftCombiner::PenalizedProduct,
            CombinerDoc::FirstProjection => SoftCombiner::FirstProjection,
            CombinerDoc::SecondProjection => SoftCombiner::SecondProjection,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SoftroughDoc {
    pub universe: Vec<String>,
    pub params: Vec<String>,
    /// per element, per parameter: scalar soft membership
    pub membership: BTreeMap<String, BTreeMap<String, f64>>,
    pub relations: BTreeMap<String, RelationDoc>,
    #[serde(default)]
    pub combiner: Option<CombinerDoc>,
    pub target: Vec<String>,
}

impl SoftroughDoc {
    fn to_space(&self) -> Result<SoftApproxSpace> {
        let universe = FiniteUniverse::new(self.universe.clone())?;
        let mut mu = Vec::new();
        for x in &self.universe {
            let row = ordered_lookup(&self.membership, x, "membership")?;
            for e in &self.params {
                let m = ordered_lookup(row, e, "membership")?;
                mu.push(DegreeVector::scalar(*m)?);
            }
        }
        let relations = self
            .params
            .iter()
            .map(|e| {
                let doc = ordered_lookup(&self.relations, e, "relation")?;
                Ok(PlithogenicRelation::new(
                    universe.clone(),
                    doc.pdf.clone(),
                    doc.pcf.clone(),
                    RelationFusion::PenalizedProduct,
                )?)
            })
            .collect::<Result<Vec<_>>>()?;
        let combiner = self
            .combiner
            .as_ref()
            .map(|c| c.to_combiner())
            .unwrap_or(SoftCombiner::PenalizedProduct);
        Ok(SoftApproxSpace::new(
            universe,
            self.params.iter().map(|s| s.as_str()).collect(),
            mu,
            relations,
            combiner,
        )?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PshssAttributeDoc {
    pub name: String,
    pub values: Vec<String>,
    pub contradiction: MatrixDoc,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum GammaDoc {
    Single(String),
    Subset(Vec<String>),
}

impl GammaDoc {
    fn to_component(&self) -> GammaComponent {
        match self {
            GammaDoc::Single(v) => GammaComponent::Single(v.clone()),
            GammaDoc::Subset(vs) => GammaComponent::Subset(vs.clone()),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct WeightedTripleDoc {
    pub tuple: Vec<String>,
    #[serde(default)]
    pub mu: Option<f64>,
    #[serde(default)]
    pub nu: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum PshssRuleDoc {
    Neutrosophic {
        payload: [f64; 3],
        tau: f64,
    },
    Fuzzy {
        triples: Vec<WeightedTripleDoc>,
        cap: f64,
    },
    Intuitionistic {
        triples: Vec<WeightedTripleDoc>,
        tau: f64,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PshssDoc {
    pub element: String,
    pub attributes: Vec<PshssAttributeDoc>,
    pub gamma: Vec<GammaDoc>,
    pub gamma_star: Vec<GammaDoc>,
    pub rule: PshssRuleDoc,
}

impl PshssDoc {
    fn to_attrs(&self) -> Result<Vec<PshssAttribute>> {
        self.attributes
            .iter()
            .map(|a| {
                Ok(PshssAttribute::new(
                    &a.name,
                    a.values.iter().map(|s| s.as_str()).collect(),
                    a.contradiction.to_table()?,
                )?)
            })
            .collect()
    }

    fn triple_weight(&self, attrs: &[PshssAttribute], tuple: &[String]) -> Result<f64> {
        let gamma: Vec<GammaComponent> = tuple
            .iter()
            .map(|v| GammaComponent::Single(v.clone()))
            .collect();
        let gamma_star: Vec<GammaComponent> =
            self.gamma_star.iter().map(|g| g.to_component()).collect();
        Ok(pshss_weight(attrs, &gamma, &gamma_star)?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ExpertParamDoc {
    pub name: String,
    pub values: Vec<String>,
    /// per element, per value
    pub pdf: BTreeMap<String, BTreeMap<String, f64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ActivatedDoc {
    pub param: String,
    pub expert: String,
    pub opinion: String,
    pub value: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PcfPairDoc {
    pub left: String,
    pub right: String,
    pub value: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ExpertDoc {
    pub universe: Vec<String>,
    pub experts: Vec<String>,
    pub params: Vec<ExpertParamDoc>,
    pub activated: Vec<ActivatedDoc>,
    pub pcf_pairs: Vec<PcfPairDoc>,
}

impl ExpertDoc {
    fn to_context(&self) -> Result<ExpertContext> {
        let universe = FiniteUniverse::new(self.universe.clone())?;
        let params = self
            .params
            .iter()
            .map(|p| {
                let mut pdf = Vec::new();
                for x in &self.universe {
                    let row = ordered_lookup(&p.pdf, x, "expert pdf")?;
                    for v in &p.values {
                        pdf.push(*row.get(v).unwrap_or(&0.0));
                    }
                }
                Ok(ExpertParam {
                    name: p.name.clone(),
                    values: p.values.clone(),
                    pdf,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let activated = self
            .activated
            .iter()
            .map(|a| {
                let opinion = match a.opinion.as_str() {
                    "agree" => Opinion::Agree,
                    "disagree" => Opinion::Disagree,
                    other => bail!("unknown opinion '{other}'"),
                };
                Ok(ActivatedTriple {
                    param: a.param.clone(),
                    expert: a.expert.clone(),
                    opinion,
                    value: a.value.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ExpertContext::new(
            universe,
            params,
            self.experts.iter().map(|s| s.as_str()).collect(),
            activated,
            self.pcf_pairs
                .iter()
                .map(|p| ((p.left.as_str(), p.right.as_str()), p.value))
                .collect(),
        )?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct DynamicDoc {
    pub instants: Vec<String>,
    pub snapshots: BTreeMap<String, PlithogenicDoc>,
    /// instant the commands operate on
    pub instant: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct StochasticAttributeDoc {
    pub name: String,
    pub values: Vec<String>,
    /// per element, per value, per outcome: degree components
    pub degrees: BTreeMap<String, BTreeMap<String, BTreeMap<String, Vec<f64>>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct OutcomeDoc {
    pub name: String,
    pub p: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ProbabilisticDoc {
    pub universe: Vec<String>,
    pub outcomes: Vec<OutcomeDoc>,
    pub attributes: Vec<StochasticAttributeDoc>,
    /// contradiction over the disjoint union of all attribute values
    pub contradiction: MatrixDoc,
    /// one value per attribute
    pub gamma: Vec<String>,
    #[serde(default = "default_fusion")]
    pub fusion: FusionDoc,
    #[serde(default)]
    pub quantile_p: Option<f64>,
}

impl ProbabilisticDoc {
    fn to_space(&self) -> Result<ScenarioSpace> {
        let universe = FiniteUniverse::new(self.universe.clone())?;
        let mut tables = Vec::new();
        for attr in &self.attributes {
            let mut table = Vec::new();
            for x in &self.universe {
                let by_value = ordered_lookup(&attr.degrees, x, "stochastic degrees")?;
                for v in &attr.values {
                    let by_outcome = ordered_lookup(by_value, v, "stochastic degrees")?;
                    for o in &self.outcomes {
                        let comps = ordered_lookup(by_outcome, &o.name, "stochastic degrees")?;
                        table.push(DegreeVector::new(comps.clone())?);
                    }
                }
            }
            tables.push(table);
        }
        Ok(ScenarioSpace::new(
            universe,
            self.outcomes.iter().map(|o| (o.name.as_str(), o.p)).collect(),
            self.attributes
                .iter()
                .map(|a| {
                    (
                        a.name.as_str(),
                        a.values.iter().map(|v| v.as_str()).collect(),
                    )
                })
                .collect(),
            tables,
            self.contradiction.to_table()?,
            self.fusion.rule(),
        )?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct TrapezoidalEntryDoc {
    pub t: [f64; 4],
    pub i: [f64; 4],
    pub f: [f64; 4],
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct TrapezoidalDoc {
    pub universe: Vec<String>,
    pub attribute: AttributeDoc,
    pub contradiction: MatrixDoc,
    pub table: BTreeMap<String, BTreeMap<String, TrapezoidalEntryDoc>>,
    pub a_star: String,
    pub beta: f64,
    #[serde(default = "default_fusion")]
    pub fusion: FusionDoc,
}

impl TrapezoidalDoc {
    fn to_bundle(&self) -> Result<TrapBundle> {
        let universe = FiniteUniverse::new(self.universe.clone())?;
        let mut table = Vec::new();
        for x in &self.universe {
            let row = ordered_lookup(&self.table, x, "trapezoidal table")?;
            for v in &self.attribute.values {
                let entry = ordered_lookup(row, v, "trapezoidal table")?;
                let trap = |b: &[f64; 4]| TrapezoidalNumber::new(b[0], b[1], b[2], b[3]);
                table.push(TrapTripleDegree {
                    t: trap(&entry.t)?,
                    i: trap(&entry.i)?,
                    f: trap(&entry.f)?,
                });
            }
        }
        Ok(TrapBundle::new(
            universe,
            self.attribute.values.iter().map(|s| s.as_str()).collect(),
            self.contradiction.to_table()?,
            self.fusion.rule(),
            table,
        )?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RefinedDoc {
    pub universe: Vec<String>,
    pub attribute: AttributeDoc,
    pub contradiction: MatrixDoc,
    pub signature: [usize; 3],
    pub appurtenance: BTreeMap<String, BTreeMap<String, Vec<f64>>>,
    pub scalarization: [f64; 3],
    #[serde(default = "default_fusion")]
    pub fusion: FusionDoc,
    #[serde(default)]
    pub dominant: Option<String>,
}

impl RefinedDoc {
    fn to_bundle(&self) -> Result<(PlithogenicBundle, RefinedSignature)> {
        let sig = RefinedSignature::new(self.signature[0], self.signature[1], self.signature[2])?;
        let doc = PlithogenicDoc {
            universe: self.universe.clone(),
            attribute: self.attribute.clone(),
            contradiction: self.contradiction.clone(),
            appurtenance: self.appurtenance.clone(),
            band: None,
            fusion: self.fusion.clone(),
            constraint: None,
            dominant: self.dominant.clone(),
        };
        Ok((doc.to_bundle()?, sig))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct NonstandardDoc {
    pub universe: Vec<String>,
    /// aggregation chain, anchored at the first value
    pub values: Vec<String>,
    pub contradiction: MatrixDoc,
    pub pdf: BTreeMap<String, BTreeMap<String, DualEntryDoc>>,
    #[serde(default = "default_fusion")]
    pub fusion: FusionDoc,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CubicEntryDoc {
    pub intervals: Vec<[f64; 2]>,
    pub point: Vec<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CubicDoc {
    pub universe: Vec<String>,
    pub attribute: AttributeDoc,
    pub contradiction: MatrixDoc,
    pub table: BTreeMap<String, BTreeMap<String, CubicEntryDoc>>,
    #[serde(default = "default_fusion")]
    pub fusion: FusionDoc,
    #[serde(default)]
    pub dominant: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct DiophantineDoc {
    pub universe: Vec<String>,
    pub attribute: AttributeDoc,
    pub contradiction: MatrixDoc,
    pub c: f64,
    /// per value: reference parameters
    pub alpha: BTreeMap<String, Vec<f64>>,
    /// per element, per value: membership components
    pub mu: BTreeMap<String, BTreeMap<String, Vec<f64>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct LevelDoc {
    pub values: Vec<String>,
    pub contradiction: MatrixDoc,
    pub dominant: String,
    #[serde(default = "default_fusion")]
    pub fusion: FusionDoc,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum StagedTableDoc {
    Leaf(Vec<f64>),
    Level(Vec<StagedTableDoc>),
}

impl StagedTableDoc {
    fn to_table(&self) -> Result<StagedTable> {
        Ok(match self {
            StagedTableDoc::Leaf(comps) => StagedTable::Leaf(DegreeVector::new(comps.clone())?),
            StagedTableDoc::Level(children) => StagedTable::Level(
                children
                    .iter()
                    .map(|c| c.to_table())
                    .collect::<Result<Vec<_>>>()?,
            ),
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct StagedDoc {
    pub pipeline: Vec<LevelDoc>,
    pub leaves: StagedTableDoc,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum NestedDoc {
    Leaf { leaf: Vec<f64> },
    Set { set: Vec<NestedDoc> },
}

impl NestedDoc {
    fn to_nested(&self) -> Result<NestedDegreeSet> {
        Ok(match self {
            NestedDoc::Leaf { leaf } => NestedDegreeSet::Leaf(DegreeVector::new(leaf.clone())?),
            NestedDoc::Set { set } => NestedDegreeSet::Set(
                set.iter()
                    .map(|c| c.to_nested())
                    .collect::<Result<Vec<_>>>()?,
            ),
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SuperhyperDoc {
    pub values: Vec<String>,
    pub contradiction: MatrixDoc,
    pub nested: BTreeMap<String, NestedDoc>,
    pub dominant: String,
    #[serde(default = "default_fusion")]
    pub fusion: FusionDoc,
}

/// A scenario file: one of the supported uncertain-set kinds plus its
/// variant parameters.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ScenarioDocument {
    Plithogenic(PlithogenicDoc),
    Complex(ComplexDoc),
    Interval(IntervalDoc),
    Mpolar(MpolarDoc),
    Linguistic(LinguisticDoc),
    Tree(TreeDoc),
    Forest(ForestDoc),
    Rough(RoughDoc),
    Softrough(SoftroughDoc),
    Pshss(PshssDoc),
    Expert(ExpertDoc),
    Dynamic(DynamicDoc),
    Probabilistic(ProbabilisticDoc),
    Trapezoidal(TrapezoidalDoc),
    Refined(RefinedDoc),
    Nonstandard(NonstandardDoc),
    Cubic(CubicDoc),
    Diophantine(DiophantineDoc),
    Staged(StagedDoc),
    Superhyper(SuperhyperDoc),
}

impl ScenarioDocument {
    pub fn kind(&self) -> &'static str {
        match self {
            ScenarioDocument::Plithogenic(_) => "plithogenic",
            ScenarioDocument::Complex(_) => "complex",
            ScenarioDocument::Interval(_) => "interval",
            ScenarioDocument::Mpolar(_) => "mpolar",
            ScenarioDocument::Linguistic(_) => "linguistic",
            ScenarioDocument::Tree(_) => "tree",
            ScenarioDocument::Forest(_) => "forest",
            ScenarioDocument::Rough(_) => "rough",
            ScenarioDocument::Softrough(_) => "softrough",
            ScenarioDocument::Pshss(_) => "pshss",
            ScenarioDocument::Expert(_) => "expert",
            ScenarioDocument::Dynamic(_) => "dynamic",
            ScenarioDocument::Probabilistic(_) => "probabilistic",
            ScenarioDocument::Trapezoidal(_) => "trapezoidal",
            ScenarioDocument::Refined(_) => "refined",
            ScenarioDocument::Nonstandard(_) => "nonstandard",
            ScenarioDocument::Cubic(_) => "cubic",
            ScenarioDocument::Diophantine(_) => "diophantine",
            ScenarioDocument::Staged(_) => "staged",
            ScenarioDocument::Superhyper(_) => "superhyper",
        }
    }
}

/// Parse and fully validate a scenario document; the error names the first
/// offending field or table entry.
pub fn load_scenario(text: &str) -> Result<ScenarioDocument> {
    let doc: ScenarioDocument =
        serde_json::from_str(text).context("scenario file is not valid JSON for any known kind")?;
    validate_scenario(&doc)?;
    Ok(doc)
}

/// Structural validation: construct every core object the document
/// describes, and check bundle axioms where they apply.
pub fn validate_scenario(doc: &ScenarioDocument) -> Result<()> {
    match doc {
        ScenarioDocument::Plithogenic(d) => {
            let bundle = d.to_bundle()?;
            let violations = validate_bundle(&bundle);
            if let Some(v) = violations.first() {
                bail!("invalid bundle: {v}");
            }
        }
        ScenarioDocument::Complex(d) => {
            let bundle = d.to_bundle()?;
            let violations = validate_bundle(&bundle);
            if let Some(v) = violations.first() {
                bail!("invalid bundle: {v}");
            }
        }
        ScenarioDocument::Interval(d) => {
            let bundle = d.to_bundle()?;
            let violations = validate_bundle(&bundle);
            if let Some(v) = violations.first() {
                bail!("invalid bundle: {v}");
            }
        }
        ScenarioDocument::Mpolar(d) => {
            d.to_system()?;
        }
        ScenarioDocument::Linguistic(d) => {
            d.to_bundle()?;
        }
        ScenarioDocument::Tree(d) => {
            d.to_tree()?;
        }
        ScenarioDocument::Forest(d) => {
            d.to_forest()?;
        }
        ScenarioDocument::Rough(d) => {
            d.to_context()?;
        }
        ScenarioDocument::Softrough(d) => {
            d.to_space()?;
        }
        ScenarioDocument::Pshss(d) => {
            d.to_attrs()?;
        }
        ScenarioDocument::Expert(d) => {
            d.to_context()?;
        }
        ScenarioDocument::Dynamic(d) => {
            if !d.instants.contains(&d.instant) {
                bail!("selected instant '{}' is not in the time domain", d.instant);
            }
            for (t, snap) in &d.snapshots {
                if !d.instants.contains(t) {
                    bail!("snapshot instant '{t}' is not in the time domain");
                }
                let bundle = snap.to_bundle()?;
                let violations = validate_bundle(&bundle);
                if let Some(v) = violations.first() {
                    bail!("snapshot at '{t}' invalid: {v}");
                }
            }
            for t in &d.instants {
                if !d.snapshots.contains_key(t) {
                    bail!("missing snapshot for instant '{t}'");
                }
            }
        }
        ScenarioDocument::Probabilistic(d) => {
            d.to_space()?;
        }
        ScenarioDocument::Trapezoidal(d) => {
            d.to_bundle()?;
        }
        ScenarioDocument::Refined(d) => {
            let (bundle, sig) = d.to_bundle()?;
            let arity = bundle.table.kind().arity();
            if arity != sig.s() {
                bail!(
                    "refined payload arity {arity} does not match the signature s = {}",
                    sig.s()
                );
            }
        }
        ScenarioDocument::Nonstandard(d) => {
            let table = d.contradiction.to_table()?;
            if table.len() != d.values.len() {
                bail!("contradiction matrix does not cover the value chain");
            }
            for x in &d.universe {
                let row = ordered_lookup(&d.pdf, x, "dual pdf")?;
                for v in &d.values {
                    ordered_lookup(row, v, "dual pdf")?;
                }
            }
        }
        ScenarioDocument::Cubic(d) => {
            for x in &d.universe {
                let row = ordered_lookup(&d.table, x, "cubic table")?;
                for v in &d.attribute.values {
                    let entry = ordered_lookup(row, v, "cubic table")?;
                    if entry.intervals.len() != entry.point.len() {
                        bail!("cubic entry at ({x}, {v}) has mismatched arities");
                    }
                }
            }
            d.contradiction.to_table()?;
        }
        ScenarioDocument::Diophantine(d) => {
            for v in &d.attribute.values {
                ordered_lookup(&d.alpha, v, "alpha")?;
            }
            for x in &d.universe {
                let row = ordered_lookup(&d.mu, x, "mu")?;
                for v in &d.attribute.values {
                    ordered_lookup(row, v, "mu")?;
                }
            }
        }
        ScenarioDocument::Staged(d) => {
            let pipeline = staged_pipeline(d)?;
            staged_aggregate(&pipeline, &d.leaves.to_table()?)?;
        }
        ScenarioDocument::Superhyper(d) => {
            for v in &d.values {
                ordered_lookup(&d.nested, v, "nested table")?;
            }
            d.contradiction.to_table()?;
        }
    }
    Ok(())
}

fn staged_pipeline(doc: &StagedDoc) -> Result<Vec<LevelSpec>> {
    doc.pipeline
        .iter()
        .map(|l| {
            Ok(LevelSpec::new(
                l.values.iter().map(|s| s.as_str()).collect(),
                l.contradiction.to_table()?,
                &l.dominant,
                l.fusion.rule(),
            )?)
        })
        .collect()
}

fn payload_json(payload: &Payload, precision: usize) -> Value {
    match payload {
        Payload::Vector(v) => json!(v
            .components()
            .iter()
            .map(|x| round_to(*x, precision))
            .collect::<Vec<_>>()),
        Payload::Interval(v) => json!(v
            .iter()
            .map(|i| [round_to(i.lower(), precision), round_to(i.upper(), precision)])
            .collect::<Vec<_>>()),
        Payload::Complex(v) => json!(v
            .iter()
            .map(|c| json!({
                "mod": round_to(c.modulus(), precision),
                "arg_deg": round_to(c.argument_deg(), precision),
            }))
            .collect::<Vec<_>>()),
        Payload::Dual(v) => json!(v
            .iter()
            .map(|d| json!({
                "std": round_to(d.standard, precision),
                "eps": round_to(d.infinitesimal, precision),
            }))
            .collect::<Vec<_>>()),
    }
}

/// Options shared by the run/rank commands.
#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub dominant: Option<String>,
    pub target: Option<Vec<String>>,
    pub precision: usize,
    pub verbose: bool,
}

fn bundle_aggregate_json(
    bundle: &PlithogenicBundle,
    dominant: &str,
    opts: &RunOptions,
) -> Result<Value> {
    let mut results = Vec::new();
    for x in bundle.universe().elements() {
        let payload = if bundle.constraint.is_some() {
            let (out, report) = constrained_aggregate(bundle, x, dominant)?;
            let mut v = json!({
                "element": x,
                "aggregate": payload_json(&Payload::Vector(out), opts.precision),
            });
            v["constraint"] = json!({
                "ok": report.ok,
                "measured": round_to(report.measured, opts.precision),
                "bound": round_to(report.bound, opts.precision),
            });
            v
        } else {
            let out = aggregate_dominant(bundle, x, dominant)?;
            json!({
                "element": x,
                "aggregate": payload_json(&out, opts.precision),
            })
        };
        results.push(payload);
    }
    let mut out = json!({
        "dominant": dominant,
        "band_class": classify_band(bundle).to_string(),
        "results": results,
    });
    if opts.verbose {
        let weights = compatibility_weights(bundle, dominant)?;
        out["weights"] = json!(weights
            .iter()
            .map(|w| round_to(*w, opts.precision))
            .collect::<Vec<_>>());
    }
    Ok(out)
}

fn require_dominant(doc_dominant: Option<&String>, opts: &RunOptions) -> Result<String> {
    opts.dominant
        .clone()
        .or_else(|| doc_dominant.cloned())
        .ok_or_else(|| anyhow!("no dominant value given (document or --dominant)"))
}

/// Kind-dispatched execution of the scenario's headline computation.
pub fn run_scenario(doc: &ScenarioDocument, opts: &RunOptions) -> Result<Value> {
    let p = opts.precision;
    let mut out = match doc {
        ScenarioDocument::Plithogenic(d) => {
            let bundle = d.to_bundle()?;
            let dominant = require_dominant(d.dominant.as_ref(), opts)?;
            bundle_aggregate_json(&bundle, &dominant, opts)?
        }
        ScenarioDocument::Complex(d) => {
            let bundle = d.to_bundle()?;
            let dominant = require_dominant(d.dominant.as_ref(), opts)?;
            bundle_aggregate_json(&bundle, &dominant, opts)?
        }
        ScenarioDocument::Interval(d) => {
            let bundle = d.to_bundle()?;
            let dominant = require_dominant(d.dominant.as_ref(), opts)?;
            bundle_aggregate_json(&bundle, &dominant, opts)?
        }
        ScenarioDocument::Mpolar(d) => {
            let sys = d.to_system()?;
            let dominant = require_dominant(d.dominant.as_ref(), opts)?;
            let mut results = Vec::new();
            for x in &d.universe {
                let mut per_value = Vec::new();
                for v in &d.attribute.values {
                    let agg = mpolar_aggregate(&sys, x, v, &dominant, &d.dominant_pole)?;
                    let mut cell = json!({
                        "value": v,
                        "aggregate": agg.components().iter().map(|c| round_to(*c, p)).collect::<Vec<_>>(),
                    });
                    if opts.verbose {
                        let w = mpolar_weights(&sys, v, &dominant, &d.dominant_pole)?;
                        cell["weights"] =
                            json!(w.iter().map(|x| round_to(*x, p)).collect::<Vec<_>>());
                    }
                    per_value.push(cell);
                }
                results.push(json!({ "element": x, "values": per_value }));
            }
            json!({
                "dominant": dominant,
                "dominant_pole": d.dominant_pole,
                "results": results,
            })
        }
        ScenarioDocument::Linguistic(d) => {
            let bundle = d.to_bundle()?;
            let dominant = d.dominant(opts.dominant.as_deref())?;
            let mut results = Vec::new();
            for x in &d.universe {
                let agg = linguistic_aggregate(&bundle, x, &dominant)?;
                results.push(json!({
                    "element": x,
                    "aggregate": agg.components().iter().map(|c| round_to(*c, p)).collect::<Vec<_>>(),
                }));
            }
            let mut out = json!({ "results": results });
            if opts.verbose {
                out["weights"] = json!(bundle
                    .weights(&dominant)?
                    .iter()
                    .map(|w| round_to(*w, p))
                    .collect::<Vec<_>>());
            }
            out
        }
        ScenarioDocument::Tree(d) => {
            let tree = d.to_tree()?;
            let (degree, label) = tree_aggregate(&tree)?;
            json!({
                "dominant": d.dominant,
                "root_degree": round_to(degree, p),
                "root_label": label,
            })
        }
        ScenarioDocument::Forest(d) => {
            let forest = d.to_forest()?;
            let mut trees = Vec::new();
            for tree in &forest.trees {
                let (degree, label) = tree_aggregate(tree)?;
                trees.push(json!({
                    "degree": round_to(degree, p),
                    "label": label,
                }));
            }
            let score = forest_aggregate(&forest)?;
            json!({
                "dominant": d.dominant,
                "trees": trees,
                "forest_degree": round_to(score, p),
            })
        }
        ScenarioDocument::Rough(d) => {
            let ctx = d.to_context()?;
            let target: Vec<String> = opts
                .target
                .clone()
                .or_else(|| d.target.clone())
                .ok_or_else(|| anyhow!("no target set given (document or --target)"))?;
            let target_refs: Vec<&str> = target.iter().map(|s| s.as_str()).collect();
            let r = rough_approximate(&ctx, &target_refs)?;
            json!({
                "lower": r.lower,
                "upper": r.upper,
                "boundary": r.boundary,
                "positive": r.positive,
                "negative": r.negative,
                "accuracy": { "num": r.accuracy.num(), "den": r.accuracy.den(), "value": round_to(r.accuracy.to_f64(), p) },
                "coverage": { "num": r.coverage.num(), "den": r.coverage.den(), "value": round_to(r.coverage.to_f64(), p) },
            })
        }
        ScenarioDocument::Softrough(d) => {
            let space = d.to_space()?;
            let target: Vec<String> = opts.target.clone().unwrap_or_else(|| d.target.clone());
            let target_refs: Vec<&str> = target.iter().map(|s| s.as_str()).collect();
            let mut results = Vec::new();
            for x in &d.universe {
                for e in &d.params {
                    let lower = soft_rough_lower(&space, &target_refs, x, e)?;
                    let upper = soft_rough_upper(&space, &target_refs, x, e)?;
                    results.push(json!({
                        "element": x,
                        "param": e,
                        "lower": lower.components().iter().map(|c| round_to(*c, p)).collect::<Vec<_>>(),
                        "upper": upper.components().iter().map(|c| round_to(*c, p)).collect::<Vec<_>>(),
                    }));
                }
            }
            json!({ "target": target, "results": results })
        }
        ScenarioDocument::Pshss(d) => {
            let attrs = d.to_attrs()?;
            let gamma: Vec<GammaComponent> = d.gamma.iter().map(|g| g.to_component()).collect();
            let gamma_star: Vec<GammaComponent> =
                d.gamma_star.iter().map(|g| g.to_component()).collect();
            let w = pshss_weight(&attrs, &gamma, &gamma_star)?;
            match &d.rule {
                PshssRuleDoc::Neutrosophic { payload, tau } => {
                    let (score, selected) =
                        pshss_score_neutrosophic(payload[0], payload[1], payload[2], w, *tau);
                    json!({
                        "element": d.element,
                        "weight": round_to(w, p),
                        "score": round_to(score, p),
                        "selected": selected,
                    })
                }
                PshssRuleDoc::Fuzzy { triples, cap } => {
                    let weighted = triples
                        .iter()
                        .map(|t| {
                            let w = d.triple_weight(&attrs, &t.tuple)?;
                            let mu = t.mu.ok_or_else(|| anyhow!("fuzzy triple needs 'mu'"))?;
                            Ok((w, mu))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    let mu = pshss_fuzzy_aggregate(&weighted)?;
                    json!({
                        "element": d.element,
                        "mu": round_to(mu, p),
                        "selected": mu >= *cap,
                    })
                }
                PshssRuleDoc::Intuitionistic { triples, tau } => {
                    let weighted = triples
                        .iter()
                        .map(|t| {
                            let w = d.triple_weight(&attrs, &t.tuple)?;
                            let mu = t.mu.ok_or_else(|| anyhow!("triple needs 'mu'"))?;
                            let nu = t.nu.ok_or_else(|| anyhow!("triple needs 'nu'"))?;
                            Ok((w, (mu, nu)))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    let (mu, nu) = pshss_intuitionistic_aggregate(&weighted)?;
                    json!({
                        "element": d.element,
                        "mu": round_to(mu, p),
                        "nu": round_to(nu, p),
                        "margin": round_to(mu - nu, p),
                        "selected": mu - nu >= *tau,
                    })
                }
            }
        }
        ScenarioDocument::Expert(d) => {
            let ctx = d.to_context()?;
            let mut results = Vec::new();
            for triple in ctx.activated() {
                for u in d.universe.iter() {
                    let degree = expert_degree(&ctx, triple, u)?;
                    results.push(json!({
                        "param": triple.param,
                        "expert": triple.expert,
                        "opinion": triple.opinion.label(),
                        "value": triple.value,
                        "element": u,
                        "degree": round_to(degree, p),
                    }));
                }
            }
            json!({ "results": results })
        }
        ScenarioDocument::Dynamic(d) => {
            let snap = d
                .snapshots
                .get(&d.instant)
                .ok_or_else(|| anyhow!("missing snapshot for instant '{}'", d.instant))?;
            let bundle = snap.to_bundle()?;
            let dominant = require_dominant(snap.dominant.as_ref(), opts)?;
            let mut out = bundle_aggregate_json(&bundle, &dominant, opts)?;
            out["instant"] = json!(d.instant);
            out
        }
        ScenarioDocument::Probabilistic(d) => {
            let space = d.to_space()?;
            let spec = BlendSpec {
                t_norm: TNorm::Min,
                t_conorm: TConorm::Max,
            };
            let gamma: Vec<&str> = d.gamma.iter().map(|s| s.as_str()).collect();
            let mut results = Vec::new();
            for x in &d.universe {
                let e = expectation(&space, x, &gamma, &spec)?;
                let mut cell = json!({
                    "element": x,
                    "expectation": e.components().iter().map(|c| round_to(*c, p)).collect::<Vec<_>>(),
                });
                if let Some(pq) = d.quantile_p {
                    let q = quantile(&space, x, &gamma, pq, &spec)?;
                    cell["quantile"] =
                        json!(q.components().iter().map(|c| round_to(*c, p)).collect::<Vec<_>>());
                }
                results.push(cell);
            }
            json!({ "gamma": d.gamma, "results": results })
        }
        ScenarioDocument::Trapezoidal(d) => {
            let bundle = d.to_bundle()?;
            let mut results = Vec::new();
            for x in &d.universe {
                let grade = trapezoidal_inclusion(&bundle, x, &d.a_star, d.beta)?;
                results.push(json!({
                    "element": x,
                    "lambda": round_to(grade.lambda, p),
                    "raw": round_to(grade.raw, p),
                    "grade": round_to(grade.clipped, p),
                }));
            }
            json!({ "a_star": d.a_star, "beta": d.beta, "results": results })
        }
        ScenarioDocument::Refined(d) => {
            let (bundle, sig) = d.to_bundle()?;
            let dominant = require_dominant(d.dominant.as_ref(), opts)?;
            let weights = (
                d.scalarization[0],
                d.scalarization[1],
                d.scalarization[2],
            );
            let mut results = Vec::new();
            for x in &d.universe {
                let agg = aggregate_dominant(&bundle, x, &dominant)?;
                let deg = agg.as_vector()?;
                let phi = refined_scalarize(deg, sig, weights)?;
                results.push(json!({
                    "element": x,
                    "aggregate": deg.components().iter().map(|c| round_to(*c, p)).collect::<Vec<_>>(),
                    "phi": round_to(phi, p),
                }));
            }
            let mut out = json!({ "dominant": dominant, "results": results });
            if opts.verbose {
                out["weights"] = json!(compatibility_weights(&bundle, &dominant)?
                    .iter()
                    .map(|w| round_to(*w, p))
                    .collect::<Vec<_>>());
            }
            out
        }
        ScenarioDocument::Nonstandard(d) => {
            let table = d.contradiction.to_table()?;
            let mut results = Vec::new();
            for x in &d.universe {
                let row = ordered_lookup(&d.pdf, x, "dual pdf")?;
                let values: Vec<DualDegree> = d
                    .values
                    .iter()
                    .map(|v| {
                        let e = ordered_lookup(row, v, "dual pdf")?;
                        Ok(DualDegree::new(e.std, e.eps))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let contradictions: Vec<f64> = (1..d.values.len())
                    .map(|j| Ok(table.fused(d.fusion.rule(), 0, j)?))
                    .collect::<Result<Vec<_>>>()?;
                let agg = nonstandard_aggregate(&values, &contradictions)?;
                results.push(json!({
                    "element": x,
                    "std": round_to(agg.standard, p),
                    "eps": round_to(agg.infinitesimal, p),
                    "standard_part": round_to(agg.standard, p),
                }));
            }
            json!({ "results": results })
        }
        ScenarioDocument::Cubic(d) => {
            let table = d.contradiction.to_table()?;
            let dominant = require_dominant(d.dominant.as_ref(), opts)?;
            let di = d
                .attribute
                .values
                .iter()
                .position(|v| *v == dominant)
                .ok_or_else(|| anyhow!("unknown dominant value '{dominant}'"))?;
            let weights: Vec<f64> = (0..d.attribute.values.len())
                .map(|i| Ok(1.0 - table.fused(d.fusion.rule(), i, di)?))
                .collect::<Result<Vec<_>>>()?;
            let mut results = Vec::new();
            for x in &d.universe {
                let row = ordered_lookup(&d.table, x, "cubic table")?;
                let values = d
                    .attribute
                    .values
                    .iter()
                    .map(|v| {
                        let e = ordered_lookup(row, v, "cubic table")?;
                        let intervals = e
                            .intervals
                            .iter()
                            .map(|[lo, hi]| Ok(IntervalDegree::new(*lo, *hi)?))
                            .collect::<Result<Vec<_>>>()?;
                        Ok(uset_core::variants::CubicDegree::new(
                            intervals,
                            DegreeVector::new(e.point.clone())?,
                        )?)
                    })
                    .collect::<Result<Vec<_>>>()?;
                let agg = uset_core::variants::cubic_aggregate(&values, &weights)?;
                results.push(json!({
                    "element": x,
                    "intervals": agg.intervals.iter().map(|i| [round_to(i.lower(), p), round_to(i.upper(), p)]).collect::<Vec<_>>(),
                    "point": agg.point.components().iter().map(|c| round_to(*c, p)).collect::<Vec<_>>(),
                }));
            }
            let mut out = json!({ "dominant": dominant, "results": results });
            if opts.verbose {
                out["weights"] =
                    json!(weights.iter().map(|w| round_to(*w, p)).collect::<Vec<_>>());
            }
            out
        }
        ScenarioDocument::Diophantine(d) => {
            let mut results = Vec::new();
            for x in &d.universe {
                let row = ordered_lookup(&d.mu, x, "mu")?;
                for v in &d.attribute.values {
                    let mu = ordered_lookup(row, v, "mu")?;
                    let alpha = ordered_lookup(&d.alpha, v, "alpha")?;
                    let entry = DiophantineEntry {
                        mu: DegreeVector::new(mu.clone())?,
                        alpha: alpha.clone(),
                        c: d.c,
                    };
                    let r = diophantine_check(&entry)?;
                    results.push(json!({
                        "element": x,
                        "value": v,
                        "ok": r.ok,
                        "weighted_sum": round_to(r.weighted_sum, p),
                        "parameter_sum": round_to(r.parameter_sum, p),
                        "residual": round_to(r.residual, p),
                    }));
                }
            }
            json!({ "c": d.c, "results": results })
        }
        ScenarioDocument::Staged(d) => {
            let pipeline = staged_pipeline(d)?;
            let out = staged_aggregate(&pipeline, &d.leaves.to_table()?)?;
            json!({
                "aggregate": out.components().iter().map(|c| round_to(*c, p)).collect::<Vec<_>>(),
            })
        }
        ScenarioDocument::Superhyper(d) => {
            let table = d.contradiction.to_table()?;
            let per_value = d
                .values
                .iter()
                .map(|v| {
                    let nested = ordered_lookup(&d.nested, v, "nested table")?;
                    Ok((v.as_str(), nested.to_nested()?))
                })
                .collect::<Result<Vec<_>>>()?;
            let agg = superhyper_aggregate(&per_value, &table, d.fusion.rule(), &d.dominant)?;
            let mut out = json!({
                "dominant": d.dominant,
                "aggregate": agg.components().iter().map(|c| round_to(*c, p)).collect::<Vec<_>>(),
            });
            if opts.verbose {
                let di = d
                    .values
                    .iter()
                    .position(|v| *v == d.dominant)
                    .ok_or_else(|| anyhow!("unknown dominant value '{}'", d.dominant))?;
                let weights: Vec<f64> = (0..d.values.len())
                    .map(|i| Ok(round_to(1.0 - table.fused(d.fusion.rule(), i, di)?, p)))
                    .collect::<Result<_>>()?;
                out["weights"] = json!(weights);
            }
            out
        }
    };
    out["kind"] = json!(doc.kind());
    Ok(out)
}

/// Rank the universe by a scalar score, descending; ties keep input order.
pub fn rank_scenario(doc: &ScenarioDocument, opts: &RunOptions) -> Result<Vec<(String, f64)>> {
    let scores: Vec<(String, f64)> = match doc {
        ScenarioDocument::Plithogenic(d) => {
            let bundle = d.to_bundle()?;
            let dominant = require_dominant(d.dominant.as_ref(), opts)?;
            d.universe
                .iter()
                .map(|x| {
                    let agg = aggregate_dominant(&bundle, x, &dominant)?;
                    let deg = agg.as_vector()?;
                    if deg.arity() != 1 {
                        bail!("ranking needs scalar payloads; aggregate has arity {}", deg.arity());
                    }
                    Ok((x.clone(), deg.get(0)))
                })
                .collect::<Result<Vec<_>>>()?
        }
        ScenarioDocument::Linguistic(d) => {
            let bundle = d.to_bundle()?;
            let dominant = d.dominant(opts.dominant.as_deref())?;
            d.universe
                .iter()
                .map(|x| {
                    let agg = linguistic_aggregate(&bundle, x, &dominant)?;
                    Ok((x.clone(), agg.as_scalar()?))
                })
                .collect::<Result<Vec<_>>>()?
        }
        ScenarioDocument::Mpolar(d) => {
            let sys = d.to_system()?;
            let dominant = require_dominant(d.dominant.as_ref(), opts)?;
            d.universe
                .iter()
                .map(|x| {
                    let agg = mpolar_aggregate(&sys, x, &dominant, &dominant, &d.dominant_pole)?;
                    Ok((x.clone(), agg.as_scalar()?))
                })
                .collect::<Result<Vec<_>>>()?
        }
        ScenarioDocument::Refined(d) => {
            let (bundle, sig) = d.to_bundle()?;
            let dominant = require_dominant(d.dominant.as_ref(), opts)?;
            let weights = (
                d.scalarization[0],
                d.scalarization[1],
                d.scalarization[2],
            );
            d.universe
                .iter()
                .map(|x| {
                    let agg = aggregate_dominant(&bundle, x, &dominant)?;
                    Ok((x.clone(), refined_scalarize(agg.as_vector()?, sig, weights)?))
                })
                .collect::<Result<Vec<_>>>()?
        }
        ScenarioDocument::Trapezoidal(d) => {
            let bundle = d.to_bundle()?;
            d.universe
                .iter()
                .map(|x| {
                    let grade = trapezoidal_inclusion(&bundle, x, &d.a_star, d.beta)?;
                    Ok((x.clone(), grade.clipped))
                })
                .collect::<Result<Vec<_>>>()?
        }
        other => bail!("kind '{}' is not scalar-rankable", other.kind()),
    };
    let mut ranked = scores;
    // stable sort keeps input order on ties
    ranked.sort_by(|a, b| b.1.total_cmp(&a.1));
    Ok(ranked)
}

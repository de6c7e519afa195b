//! Plithogenic relations and rough approximations, the soft-rough
//! combination, soft expert opinion degrees, and plithogenic superhypersoft
//! selection.

use std::collections::HashMap;

use crate::classic::FiniteUniverse;
use crate::degree::DegreeVector;
use crate::error::{Error, Result};
use crate::plithogenic::ContradictionTable;
use crate::variants::lift_contradiction;

/// How pairwise appurtenance and contradiction fuse into one relation value.
/// The default penalized product is increasing in the appurtenance and
/// decreasing in the contradiction, with `phi(0, b) = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RelationFusion {
    #[default]
    PenalizedProduct,
}

impl RelationFusion {
    fn apply(&self, pdf: f64, pcf: f64) -> f64 {
        match self {
            RelationFusion::PenalizedProduct => pdf * (1.0 - pcf),
        }
    }
}

/// Pairwise plithogenic relation: appurtenance and contradiction per ordered
/// pair, with the self value fixed at 1.
#[derive(Debug, Clone, PartialEq)]
pub struct PlithogenicRelation {
    universe: FiniteUniverse,
    pdf: Vec<f64>,
    pcf: Vec<f64>,
    fusion: RelationFusion,
}

impl PlithogenicRelation {
    /// Matrices are row-major over the universe order; diagonal entries are
    /// ignored (the self value convention applies).
    pub fn new(
        universe: FiniteUniverse,
        pdf: Vec<Vec<f64>>,
        pcf: Vec<Vec<f64>>,
        fusion: RelationFusion,
    ) -> Result<PlithogenicRelation> {
        let n = universe.len();
        for (name, m) in [("pdf", &pdf), ("pcf", &pcf)] {
            if m.len() != n || m.iter().any(|row| row.len() != n) {
                return Err(Error::LengthMismatch {
                    context: "relation matrix size",
                    left: n,
                    right: m.len(),
                });
            }
            for (i, row) in m.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    if i != j && !(0.0..=1.0).contains(&x) {
                        return Err(Error::OutOfRange {
                            context: if name == "pdf" {
                                "relation appurtenance"
                            } else {
                                "relation contradiction"
                            },
                            value: x,
                            lo: 0.0,
                            hi: 1.0,
                        });
                    }
                }
            }
        }
        Ok(PlithogenicRelation {
            universe,
            pdf: pdf.into_iter().flatten().collect(),
            pcf: pcf.into_iter().flatten().collect(),
            fusion,
        })
    }

    pub fn universe(&self) -> &FiniteUniverse {
        &self.universe
    }

    fn fused_idx(&self, x: usize, y: usize) -> f64 {
        if x == y {
            1.0
        } else {
            let n = self.universe.len();
            self.fusion.apply(self.pdf[x * n + y], self.pcf[x * n + y])
        }
    }
}

/// Fused relation value `phi(pdf_R(x, y), pCF_R(x, y))`, with the
/// self-consistency convention `R~(x, x) = 1`.
pub fn fused_relation(rel: &PlithogenicRelation, x: &str, y: &str) -> Result<f64> {
    let xi = rel.universe.index_of(x)?;
    let yi = rel.universe.index_of(y)?;
    Ok(rel.fused_idx(xi, yi))
}

/// Lower approximation `min over y in A of max(1 - R~(x,y), 1 - R~(y,x))`;
/// the empty target gives 1 (infimum over the empty set in [0, 1]).
pub fn plithogenic_lower(rel: &PlithogenicRelation, target: &[&str], x: &str) -> Result<f64> {
    let xi = rel.universe.index_of(x)?;
    let mut out = 1.0_f64;
    for y in target {
        let yi = rel.universe.index_of(y)?;
        let penalty = (1.0 - rel.fused_idx(xi, yi)).max(1.0 - rel.fused_idx(yi, xi));
        out = out.min(penalty);
    }
    Ok(out)
}

/// Upper approximation `max over y in U of min(R~(x,y), 1 - R~(y,x))`;
/// ranges over the whole universe regardless of the target.
pub fn plithogenic_upper(rel: &PlithogenicRelation, x: &str) -> Result<f64> {
    let xi = rel.universe.index_of(x)?;
    let mut out = 0.0_f64;
    for yi in 0..rel.universe.len() {
        out = out.max(rel.fused_idx(xi, yi).min(1.0 - rel.fused_idx(yi, xi)));
    }
    Ok(out)
}

/// Upper-approximation term restricted to the target set; a lower bound on
/// the full upper approximation.
pub fn plithogenic_upper_restricted(
    rel: &PlithogenicRelation,
    target: &[&str],
    x: &str,
) -> Result<f64> {
    let xi = rel.universe.index_of(x)?;
    let mut out = 0.0_f64;
    for y in target {
        let yi = rel.universe.index_of(y)?;
        out = out.max(rel.fused_idx(xi, yi).min(1.0 - rel.fused_idx(yi, xi)));
    }
    Ok(out)
}

/// Combiner joining the soft membership with the per-parameter rough value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SoftCombiner {
    /// `psi(mu, lambda) = mu * (1 - lambda)`: the rough penalty becomes a
    /// support factor.
    #[default]
    PenalizedProduct,
    /// Projection to the soft membership (recovers the plithogenic soft set).
    FirstProjection,
    /// Projection to the rough value (recovers the plithogenic rough set).
    SecondProjection,
}

impl SoftCombiner {
    fn apply(&self, mu: f64, lambda: f64) -> f64 {
        match self {
            SoftCombiner::PenalizedProduct => mu * (1.0 - lambda),
            SoftCombiner::FirstProjection => mu,
            SoftCombiner::SecondProjection => lambda,
        }
    }
}

/// Parameterized soft membership plus one plithogenic relation per
/// parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct SoftApproxSpace {
    universe: FiniteUniverse,
    params: Vec<String>,
    mu: Vec<DegreeVector>,
    relations: Vec<PlithogenicRelation>,
    combiner: SoftCombiner,
}

impl SoftApproxSpace {
    /// `mu` is element-major: index `x * params.len() + e`.
    pub fn new(
        universe: FiniteUniverse,
        params: Vec<&str>,
        mu: Vec<DegreeVector>,
        relations: Vec<PlithogenicRelation>,
        combiner: SoftCombiner,
    ) -> Result<SoftApproxSpace> {
        if params.is_empty() {
            return Err(Error::EmptyInput("soft space needs parameters"));
        }
        if mu.len() != universe.len() * params.len() {
            return Err(Error::LengthMismatch {
                context: "soft membership table size",
                left: universe.len() * params.len(),
                right: mu.len(),
            });
        }
        if relations.len() != params.len() {
            return Err(Error::LengthMismatch {
                context: "per-parameter relations",
                left: params.len(),
                right: relations.len(),
            });
        }
        for r in &relations {
            if r.universe() != &universe {
                return Err(Error::InvalidParameter(
                    "relation universe differs from the soft space universe".into(),
                ));
            }
        }
        Ok(SoftApproxSpace {
            universe,
            params: params.into_iter().map(String::from).collect(),
            mu,
            relations,
            combiner,
        })
    }

    pub fn universe(&self) -> &FiniteUniverse {
        &self.universe
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    fn param_index(&self, e: &str) -> Result<usize> {
        self.params
            .iter()
            .position(|p| p == e)
            .ok_or_else(|| Error::UnknownIdentifier {
                kind: "soft parameter",
                name: e.to_string(),
            })
    }

    pub fn membership(&self, x: &str, e: &str) -> Result<&DegreeVector> {
        let xi = self.universe.index_of(x)?;
        let ei = self.param_index(e)?;
        Ok(&self.mu[xi * self.params.len() + ei])
    }

    fn combined(&self, x: &str, e: &str, rough: f64) -> Result<DegreeVector> {
        let mu = self.membership(x, e)?;
        let out: Vec<f64> = mu
            .components()
            .iter()
            .map(|&m| self.combiner.apply(m, rough))
            .collect();
        DegreeVector::with_band(out, mu.band())
    }
}

/// `psi(mu_S(x, e), lower approximation of the target under R_e)`.
pub fn soft_rough_lower(
    space: &SoftApproxSpace,
    target: &[&str],
    x: &str,
    e: &str,
) -> Result<DegreeVector> {
    let ei = space.param_index(e)?;
    let rough = plithogenic_lower(&space.relations[ei], target, x)?;
    space.combined(x, e, rough)
}

/// `psi(mu_S(x, e), upper approximation under R_e)`.
pub fn soft_rough_upper(
    space: &SoftApproxSpace,
    _target: &[&str],
    x: &str,
    e: &str,
) -> Result<DegreeVector> {
    let ei = space.param_index(e)?;
    let rough = plithogenic_upper(&space.relations[ei], x)?;
    space.combined(x, e, rough)
}

/// Expert opinion: agree (1) or disagree (0).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Opinion {
    Agree,
    Disagree,
}

impl Opinion {
    pub fn label(&self) -> &'static str {
        match self {
            Opinion::Agree => "agree",
            Opinion::Disagree => "disagree",
        }
    }
}

/// One activated (parameter, expert, opinion) triple with its value label.
#[derive(Debug, Clone, PartialEq)]
pub struct ActivatedTriple {
    pub param: String,
    pub expert: String,
    pub opinion: Opinion,
    pub value: String,
}

/// Per-parameter value set and scalar appurtenance table.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpertParam {
    pub name: String,
    pub values: Vec<String>,
    /// element-major: index `x * values.len() + v`
    pub pdf: Vec<f64>,
}

/// Plithogenic soft expert context over a label universe made of all the
/// parameters' value labels plus the two opinions.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpertContext {
    universe: FiniteUniverse,
    params: Vec<ExpertParam>,
    experts: Vec<String>,
    activated: Vec<ActivatedTriple>,
    pcf: HashMap<(String, String), f64>,
}

impl ExpertContext {
    pub fn new(
        universe: FiniteUniverse,
        params: Vec<ExpertParam>,
        experts: Vec<&str>,
        activated: Vec<ActivatedTriple>,
        pcf_pairs: Vec<((&str, &str), f64)>,
    ) -> Result<ExpertContext> {
        for p in &params {
            if p.pdf.len() != universe.len() * p.values.len() {
                return Err(Error::LengthMismatch {
                    context: "expert pdf table size",
                    left: universe.len() * p.values.len(),
                    right: p.pdf.len(),
                });
            }
        }
        for t in &activated {
            let p = params
                .iter()
                .find(|p| p.name == t.param)
                .ok_or_else(|| Error::UnknownIdentifier {
                    kind: "expert parameter",
                    name: t.param.clone(),
                })?;
            if !p.values.contains(&t.value) {
                return Err(Error::UnknownIdentifier {
                    kind: "parameter value",
                    name: t.value.clone(),
                });
            }
            if !experts.iter().any(|e| *e == t.expert) {
                return Err(Error::UnknownIdentifier {
                    kind: "expert",
                    name: t.expert.clone(),
                });
            }
        }
        let mut pcf = HashMap::new();
        for ((a, b), v) in pcf_pairs {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::OutOfRange {
                    context: "expert contradiction",
                    value: v,
                    lo: 0.0,
                    hi: 1.0,
                });
            }
            pcf.insert((a.to_string(), b.to_string()), v);
        }
        Ok(ExpertContext {
            universe,
            params,
            experts: experts.into_iter().map(String::from).collect(),
            activated,
            pcf,
        })
    }

    pub fn universe(&self) -> &FiniteUniverse {
        &self.universe
    }

    pub fn activated(&self) -> &[ActivatedTriple] {
        &self.activated
    }

    pub fn experts(&self) -> &[String] {
        &self.experts
    }

    /// Symmetric contradiction lookup over the label universe; unlisted
    /// pairs are 0 and identical labels are 0 by reflexivity.
    pub fn label_pcf(&self, a: &str, b: &str) -> f64 {
        if a == b {
            return 0.0;
        }
        self.pcf
            .get(&(a.to_string(), b.to_string()))
            .or_else(|| self.pcf.get(&(b.to_string(), a.to_string())))
            .copied()
            .unwrap_or(0.0)
    }

    fn pdf(&self, param: &str, u: &str, value: &str) -> Result<f64> {
        let p = self
            .params
            .iter()
            .find(|p| p.name == param)
            .ok_or_else(|| Error::UnknownIdentifier {
                kind: "expert parameter",
                name: param.to_string(),
            })?;
        let xi = self.universe.index_of(u)?;
        let vi = p
            .values
            .iter()
            .position(|v| v == value)
            .ok_or_else(|| Error::UnknownIdentifier {
                kind: "parameter value",
                name: value.to_string(),
            })?;
        Ok(p.pdf[xi * p.values.len() + vi])
    }
}

/// `F_PL(alpha)(u) = pdf_e(u, val(alpha)) * (1 - pCF(val(alpha), opinion))`.
pub fn expert_degree(ctx: &ExpertContext, triple: &ActivatedTriple, u: &str) -> Result<f64> {
    if !ctx.activated.contains(triple) {
        return Err(Error::InvalidParameter(format!(
            "triple ({}, {}, {}) is not activated",
            triple.param,
            triple.expert,
            triple.opinion.label()
        )));
    }
    let a = ctx.pdf(&triple.param, u, &triple.value)?;
    let b = ctx.label_pcf(&triple.value, triple.opinion.label());
    Ok(a * (1.0 - b))
}

/// One attribute of a superhypersoft context: its value set and element-level
/// contradiction matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct PshssAttribute {
    pub name: String,
    values: Vec<String>,
    contradiction: ContradictionTable,
}

impl PshssAttribute {
    pub fn new(
        name: &str,
        values: Vec<&str>,
        contradiction: ContradictionTable,
    ) -> Result<PshssAttribute> {
        if contradiction.len() != values.len() {
            return Err(Error::LengthMismatch {
                context: "pshss attribute table",
                left: values.len(),
                right: contradiction.len(),
            });
        }
        contradiction.require_axioms("pshss attribute contradiction")?;
        Ok(PshssAttribute {
            name: name.to_string(),
            values: values.into_iter().map(String::from).collect(),
            contradiction,
        })
    }

    fn index_of(&self, value: &str) -> Result<usize> {
        self.values
            .iter()
            .position(|v| v == value)
            .ok_or_else(|| Error::UnknownIdentifier {
                kind: "attribute value",
                name: value.to_string(),
            })
    }
}

/// One coordinate of a superhypersoft configuration.
#[derive(Debug, Clone, PartialEq)]
pub enum GammaComponent {
    Single(String),
    Subset(Vec<String>),
}

impl GammaComponent {
    fn indices(&self, attr: &PshssAttribute) -> Result<Vec<usize>> {
        match self {
            GammaComponent::Single(v) => Ok(vec![attr.index_of(v)?]),
            GammaComponent::Subset(vs) => vs.iter().map(|v| attr.index_of(v)).collect(),
        }
    }
}

/// Max-min Hausdorff lift of one attribute's contradiction to value subsets.
pub fn subset_lift(attr: &PshssAttribute, h: &[&str], k: &[&str]) -> Result<f64> {
    let hi: Vec<usize> = h.iter().map(|v| attr.index_of(v)).collect::<Result<_>>()?;
    let ki: Vec<usize> = k.iter().map(|v| attr.index_of(v)).collect::<Result<_>>()?;
    Ok(lift_contradiction(&hi, &ki, |a, b| {
        attr.contradiction.get(a, b)[0]
    }))
}

/// Global compatibility weight `prod over attributes of (1 - lifted
/// contradiction between the configuration and the dominant one)`.
pub fn pshss_weight(
    attrs: &[PshssAttribute],
    gamma: &[GammaComponent],
    gamma_star: &[GammaComponent],
) -> Result<f64> {
    if gamma.len() != attrs.len() || gamma_star.len() != attrs.len() {
        return Err(Error::LengthMismatch {
            context: "pshss configuration arity",
            left: attrs.len(),
            right: gamma.len().min(gamma_star.len()),
        });
    }
    let mut w = 1.0;
    for ((attr, g), g_star) in attrs.iter().zip(gamma).zip(gamma_star) {
        let h = g.indices(attr)?;
        let k = g_star.indices(attr)?;
        let lifted = lift_contradiction(&h, &k, |a, b| attr.contradiction.get(a, b)[0]);
        w *= 1.0 - lifted;
    }
    Ok(w)
}

/// Neutrosophic selection rule `score = w(T - F) - I`, selected above the
/// threshold.
pub fn pshss_score_neutrosophic(t: f64, i: f64, f: f64, w: f64, tau: f64) -> (f64, bool) {
    let score = w * (t - f) - i;
    (score, score > tau)
}

/// Fuzzy rule: compatibility-weighted mean of the singleton-triple
/// memberships inside the configuration.
pub fn pshss_fuzzy_aggregate(weighted: &[(f64, f64)]) -> Result<f64> {
    if weighted.is_empty() {
        return Err(Error::EmptyInput("fuzzy pshss aggregation needs triples"));
    }
    let total: f64 = weighted.iter().map(|(w, _)| w).sum();
    if total <= 0.0 {
        return Err(Error::ZeroLowerWeight);
    }
    Ok(weighted.iter().map(|(w, m)| w * m).sum::<f64>() / total)
}

/// Intuitionistic rule: weighted means of membership and nonmembership; the
/// caller decides on the margin `mu - nu`.
pub fn pshss_intuitionistic_aggregate(weighted: &[(f64, (f64, f64))]) -> Result<(f64, f64)> {
    if weighted.is_empty() {
        return Err(Error::EmptyInput(
            "intuitionistic pshss aggregation needs triples",
        ));
    }
    let total: f64 = weighted.iter().map(|(w, _)| w).sum();
    if total <= 0.0 {
        return Err(Error::ZeroLowerWeight);
    }
    let mu = weighted.iter().map(|(w, (m, _))| w * m).sum::<f64>() / total;
    let nu = weighted.iter().map(|(w, (_, n))| w * n).sum::<f64>() / total;
    Ok((mu, nu))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() < tol
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

    #[test]
    fn icu_fused_values() {
        let rel = icu_relation();
        assert!(close(fused_relation(&rel, "p1", "p2").unwrap(), 0.64, 1e-12));
        assert!(close(fused_relation(&rel, "p2", "p1").unwrap(), 0.49, 1e-12));
        assert_eq!(fused_relation(&rel, "p2", "p2").unwrap(), 1.0);
    }

    #[test]
    fn icu_lower_upper() {
        let rel = icu_relation();
        let target = ["p2"];
        assert!(close(plithogenic_lower(&rel, &target, "p1").unwrap(), 0.51, 1e-12));
        assert!(close(plithogenic_upper(&rel, "p1").unwrap(), 0.51, 1e-12));
        assert!(close(plithogenic_lower(&rel, &target, "p3").unwrap(), 0.76, 1e-12));
        assert!(close(plithogenic_upper(&rel, "p3").unwrap(), 0.36, 1e-12));
        // empty target: infimum over the empty set
        assert_eq!(plithogenic_lower(&rel, &[], "p1").unwrap(), 1.0);
    }

    #[test]
    fn credit_screening_values() {
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
        assert!(close(fused_relation(&rel, "a", "b").unwrap(), 0.4875, 1e-12));
        let target = ["b"];
        assert!(close(plithogenic_lower(&rel, &target, "a").unwrap(), 0.67, 1e-12));
        assert!(close(plithogenic_upper(&rel, "a").unwrap(), 0.4875, 1e-12));
        assert!(close(plithogenic_lower(&rel, &target, "c").unwrap(), 0.7725, 1e-12));
        assert!(close(plithogenic_upper(&rel, "c").unwrap(), 0.275, 1e-12));
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

    #[test]
    fn supplier_soft_rough_values() {
        let space = supplier_space();
        let target = ["S2"];
        let v = |d: &DegreeVector| d.get(0);
        assert!(close(v(&soft_rough_lower(&space, &target, "S1", "e1").unwrap()), 0.39375, 1e-12));
        assert!(close(v(&soft_rough_upper(&space, &target, "S1", "e1").unwrap()), 0.39375, 1e-12));
        assert!(close(v(&soft_rough_lower(&space, &target, "S1", "e2").unwrap()), 0.252, 1e-12));
        assert!(close(v(&soft_rough_upper(&space, &target, "S1", "e2").unwrap()), 0.348, 1e-12));
        assert!(close(v(&soft_rough_lower(&space, &target, "S2", "e1").unwrap()), 0.90, 1e-12));
        assert!(close(v(&soft_rough_upper(&space, &target, "S2", "e1").unwrap()), 0.576, 1e-12));
        assert!(close(v(&soft_rough_lower(&space, &target, "S2", "e2").unwrap()), 0.80, 1e-12));
        assert!(close(v(&soft_rough_upper(&space, &target, "S2", "e2").unwrap()), 0.352, 1e-12));
    }

    fn supplier_expert_context() -> ExpertContext {
        ExpertContext::new(
            FiniteUniverse::new(vec!["u1", "u2", "u3"]).unwrap(),
            vec![
                ExpertParam {
                    name: "cost".into(),
                    values: vec!["low".into(), "medium".into(), "high".into()],
                    pdf: vec![
                        0.9, 0.0, 0.0, //
                        0.6, 0.0, 0.0, //
                        0.2, 0.0, 0.0,
                    ],
                },
                ExpertParam {
                    name: "sustainability".into(),
                    values: vec!["green".into(), "neutral".into(), "risky".into()],
                    pdf: vec![
                        0.7, 0.5, 0.0, //
                        0.4, 0.7, 0.0, //
                        0.1, 0.6, 0.0,
                    ],
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
        .unwrap()
    }

    #[test]
    fn expert_degrees() {
        let ctx = supplier_expert_context();
        let a1 = ctx.activated()[0].clone();
        assert!(close(expert_degree(&ctx, &a1, "u1").unwrap(), 0.81, 1e-12));
        let a2 = ctx.activated()[1].clone();
        assert!(close(expert_degree(&ctx, &a2, "u2").unwrap(), 0.49, 1e-12));

        let inactive = ActivatedTriple {
            param: "cost".into(),
            expert: "x2".into(),
            opinion: Opinion::Disagree,
            value: "low".into(),
        };
        assert!(expert_degree(&ctx, &inactive, "u1").is_err());
    }

    #[test]
    fn pshss_attribute_rejects_invalid_tables() {
        let refl = ContradictionTable::from_scalar_matrix(vec![
            vec![0.2, 0.3],
            vec![0.3, 0.0],
        ])
        .unwrap();
        assert!(PshssAttribute::new("a", vec!["x", "y"], refl).is_err());
    }

    fn severity_attr() -> PshssAttribute {
        let mut table = ContradictionTable::zero(3, 1);
        table.set_pair(0, 2, vec![0.90]).unwrap();
        table.set_pair(1, 2, vec![0.30]).unwrap();
        PshssAttribute::new("Severity", vec!["Mild", "Moderate", "Severe"], table).unwrap()
    }

    #[test]
    fn hospital_bed_allocation() {
        let severity = severity_attr();
        let lifted = subset_lift(&severity, &["Moderate", "Severe"], &["Severe"]).unwrap();
        assert!(close(lifted, 0.30, 1e-12));
        assert_eq!(subset_lift(&severity, &["Severe"], &["Severe"]).unwrap(), 0.0);

        let resources = PshssAttribute::new(
            "Resources",
            vec!["RLow", "RHigh"],
            {
                let mut t = ContradictionTable::zero(2, 1);
                t.set_pair(0, 1, vec![0.80]).unwrap();
                t
            },
        )
        .unwrap();
        let infection = PshssAttribute::new(
            "InfectionRisk",
            vec!["ILow", "IHigh"],
            {
                let mut t = ContradictionTable::zero(2, 1);
                t.set_pair(0, 1, vec![0.90]).unwrap();
                t
            },
        )
        .unwrap();
        let attrs = [severity, resources, infection];
        let gamma = [
            GammaComponent::Subset(vec!["Moderate".into(), "Severe".into()]),
            GammaComponent::Subset(vec!["RHigh".into()]),
            GammaComponent::Subset(vec!["IHigh".into()]),
        ];
        let gamma_star = [
            GammaComponent::Subset(vec!["Severe".into()]),
            GammaComponent::Subset(vec!["RHigh".into()]),
            GammaComponent::Subset(vec!["IHigh".into()]),
        ];
        let w = pshss_weight(&attrs, &gamma, &gamma_star).unwrap();
        assert!(close(w, 0.70, 1e-12));

        // recomputed score; the printed chain mis-multiplies w(T - F)
        let (score, selected) = pshss_score_neutrosophic(0.85, 0.10, 0.08, w, 0.0);
        assert!(close(score, 0.439, 1e-12));
        assert!(selected);

        let (score, selected) = pshss_score_neutrosophic(0.85, 0.10, 0.08, 0.0, 0.0);
        assert!(close(score, -0.10, 1e-12));
        assert!(!selected);
    }

    #[test]
    fn timetabling_margin() {
        let weighted = [
            (1.0, (0.85, 0.10)),
            (0.6, (0.62, 0.25)),
            (0.7, (0.70, 0.20)),
            (0.5, (0.60, 0.22)),
        ];
        let (mu, nu) = pshss_intuitionistic_aggregate(&weighted).unwrap();
        assert!(close(mu, 0.7186, 1e-4));
        assert!(close(nu, 0.1786, 1e-4));
        assert!(mu - nu >= 0.50);
    }

    #[test]
    fn assortment_fuzzy_mean() {
        let weighted = [(1.0, 0.86), (0.8, 0.70), (0.7, 0.75), (0.6, 0.68)];
        let mu = pshss_fuzzy_aggregate(&weighted).unwrap();
        // 2.353 / 3.10; the reference print 0.7584 mis-rounds the quotient
        assert!(close(mu, 0.759032, 1e-5));
    }
}

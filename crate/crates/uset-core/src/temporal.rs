//! Time-indexed bundles with snapshot extraction, and probabilistic
//! plithogenic spaces over finite outcome sets with contradiction-blended
//! aggregation, expectation, and quantiles.

use crate::classic::FiniteUniverse;
use crate::degree::DegreeVector;
use crate::error::{Error, Result};
use crate::plithogenic::{validate_bundle, ContradictionTable, FusionRule, PlithogenicBundle};

/// Finite ordered family of instants, each carrying a full bundle.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeIndexedBundle {
    instants: Vec<String>,
    bundles: Vec<PlithogenicBundle>,
}

impl TimeIndexedBundle {
    pub fn new(entries: Vec<(&str, PlithogenicBundle)>) -> Result<TimeIndexedBundle> {
        if entries.is_empty() {
            return Err(Error::EmptyInput("time domain must be nonempty"));
        }
        let mut instants = Vec::with_capacity(entries.len());
        let mut bundles = Vec::with_capacity(entries.len());
        for (t, b) in entries {
            if instants.iter().any(|i| i == t) {
                return Err(Error::DuplicateIdentifier {
                    kind: "instant",
                    name: t.to_string(),
                });
            }
            instants.push(t.to_string());
            bundles.push(b);
        }
        Ok(TimeIndexedBundle { instants, bundles })
    }

    pub fn instants(&self) -> &[String] {
        &self.instants
    }
}

/// The static bundle at one instant, validated on extraction.
pub fn snapshot<'a>(tb: &'a TimeIndexedBundle, instant: &str) -> Result<&'a PlithogenicBundle> {
    let i = tb
        .instants
        .iter()
        .position(|t| t == instant)
        .ok_or_else(|| Error::UnknownIdentifier {
            kind: "instant",
            name: instant.to_string(),
        })?;
    let bundle = &tb.bundles[i];
    let violations = validate_bundle(bundle);
    if let Some(v) = violations.first() {
        return Err(Error::ConstraintViolated(format!(
            "snapshot at {instant} is invalid: {v}"
        )));
    }
    Ok(bundle)
}

/// Triangular-norm choices for the blend; min/max are the defaults.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TNorm {
    #[default]
    Min,
    Product,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TConorm {
    #[default]
    Max,
    ProbSum,
}

/// Contradiction-weighted t-norm/t-conorm blend configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BlendSpec {
    pub t_norm: TNorm,
    pub t_conorm: TConorm,
}

impl BlendSpec {
    fn norm(&self, u: f64, v: f64) -> f64 {
        match self.t_norm {
            TNorm::Min => u.min(v),
            TNorm::Product => u * v,
        }
    }

    fn conorm(&self, u: f64, v: f64) -> f64 {
        match self.t_conorm {
            TConorm::Max => u.max(v),
            TConorm::ProbSum => u + v - u * v,
        }
    }
}

/// `(1 - c)·T(u, v) + c·S(u, v)`.
pub fn blend(u: f64, v: f64, c: f64, spec: &BlendSpec) -> Result<f64> {
    if !(0.0..=1.0).contains(&c) {
        return Err(Error::OutOfRange {
            context: "blend contradiction",
            value: c,
            lo: 0.0,
            hi: 1.0,
        });
    }
    Ok((1.0 - c) * spec.norm(u, v) + c * spec.conorm(u, v))
}

/// Componentwise blend for vector payloads.
pub fn blend_vec(
    u: &DegreeVector,
    v: &DegreeVector,
    c: f64,
    spec: &BlendSpec,
) -> Result<DegreeVector> {
    if u.arity() != v.arity() {
        return Err(Error::ArityMismatch {
            expected: u.arity(),
            got: v.arity(),
        });
    }
    let out: Vec<f64> = u
        .components()
        .iter()
        .zip(v.components())
        .map(|(&a, &b)| blend(a, b, c, spec))
        .collect::<Result<_>>()?;
    DegreeVector::with_band(out, u.band())
}

/// One attribute of a probabilistic space: its value set and the per-outcome
/// degree table.
#[derive(Debug, Clone, PartialEq)]
pub struct StochasticAttribute {
    pub name: String,
    pub values: Vec<String>,
    /// index `x * values.len() * n_outcomes + v * n_outcomes + o`
    degrees: Vec<DegreeVector>,
}

/// Finite-outcome probabilistic plithogenic space.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioSpace {
    universe: FiniteUniverse,
    outcomes: Vec<(String, f64)>,
    attributes: Vec<StochasticAttribute>,
    /// contradiction over the disjoint union of all attribute value labels
    pcf: ContradictionTable,
    union_values: Vec<String>,
    fusion: FusionRule,
}

impl ScenarioSpace {
    /// `tables[i]` lists the degrees of attribute `i` in element-major,
    /// value-major, outcome-minor order.
    pub fn new(
        universe: FiniteUniverse,
        outcomes: Vec<(&str, f64)>,
        attributes: Vec<(&str, Vec<&str>)>,
        tables: Vec<Vec<DegreeVector>>,
        pcf: ContradictionTable,
        fusion: FusionRule,
    ) -> Result<ScenarioSpace> {
        if outcomes.is_empty() {
            return Err(Error::EmptyInput("scenario space needs outcomes"));
        }
        let total: f64 = outcomes.iter().map(|(_, p)| p).sum();
        if outcomes.iter().any(|(_, p)| *p < 0.0) || (total - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidParameter(format!(
                "outcome probabilities must be nonnegative and sum to 1, got {total}"
            )));
        }
        if attributes.len() != tables.len() {
            return Err(Error::LengthMismatch {
                context: "attribute tables",
                left: attributes.len(),
                right: tables.len(),
            });
        }
        let n_out = outcomes.len();
        let mut attrs = Vec::with_capacity(attributes.len());
        let mut union_values = Vec::new();
        for ((name, values), table) in attributes.into_iter().zip(tables) {
            let expected = universe.len() * values.len() * n_out;
            if table.len() != expected {
                return Err(Error::LengthMismatch {
                    context: "stochastic degree table",
                    left: expected,
                    right: table.len(),
                });
            }
            for v in &values {
                if union_values.iter().any(|u| u == v) {
                    return Err(Error::DuplicateIdentifier {
                        kind: "attribute value",
                        name: v.to_string(),
                    });
                }
                union_values.push(v.to_string());
            }
            attrs.push(StochasticAttribute {
                name: name.to_string(),
                values: values.into_iter().map(String::from).collect(),
                degrees: table,
            });
        }
        if pcf.len() != union_values.len() {
            return Err(Error::LengthMismatch {
                context: "scenario pcf size",
                left: union_values.len(),
                right: pcf.len(),
            });
        }
        pcf.require_axioms("scenario contradiction table")?;
        Ok(ScenarioSpace {
            universe,
            outcomes: outcomes
                .into_iter()
                .map(|(n, p)| (n.to_string(), p))
                .collect(),
            attributes: attrs,
            pcf,
            union_values,
            fusion,
        })
    }

    pub fn universe(&self) -> &FiniteUniverse {
        &self.universe
    }

    pub fn outcomes(&self) -> &[(String, f64)] {
        &self.outcomes
    }

    fn outcome_index(&self, omega: &str) -> Result<usize> {
        self.outcomes
            .iter()
            .position(|(o, _)| o == omega)
            .ok_or_else(|| Error::UnknownIdentifier {
                kind: "outcome",
                name: omega.to_string(),
            })
    }

    fn union_index(&self, value: &str) -> Result<usize> {
        self.union_values
            .iter()
            .position(|v| v == value)
            .ok_or_else(|| Error::UnknownIdentifier {
                kind: "attribute value",
                name: value.to_string(),
            })
    }

    fn degree(&self, x: usize, attr: usize, value: &str, outcome: usize) -> Result<&DegreeVector> {
        let a = &self.attributes[attr];
        let v = a
            .values
            .iter()
            .position(|w| w == value)
            .ok_or_else(|| Error::UnknownIdentifier {
                kind: "attribute value",
                name: value.to_string(),
            })?;
        let n_out = self.outcomes.len();
        Ok(&a.degrees[x * a.values.len() * n_out + v * n_out + outcome])
    }
}

/// Left fold of the blend over the selected values, anchored at the first
/// one: the step against value `j` uses `c = fuse(pCF(value_1, value_j))`.
pub fn aggregate_profile(
    space: &ScenarioSpace,
    element: &str,
    gamma: &[&str],
    omega: &str,
    spec: &BlendSpec,
) -> Result<DegreeVector> {
    if gamma.len() != space.attributes.len() {
        return Err(Error::LengthMismatch {
            context: "profile selection",
            left: space.attributes.len(),
            right: gamma.len(),
        });
    }
    let x = space.universe.index_of(element)?;
    let o = space.outcome_index(omega)?;
    let anchor = space.union_index(gamma[0])?;
    let mut acc = space.degree(x, 0, gamma[0], o)?.clone();
    for (i, value) in gamma.iter().enumerate().skip(1) {
        let next = space.degree(x, i, value, o)?;
        let c = space
            .pcf
            .fused(space.fusion, anchor, space.union_index(value)?)?;
        acc = blend_vec(&acc, next, c, spec)?;
    }
    Ok(acc)
}

/// Probability-weighted mean of the per-outcome aggregated profiles.
pub fn expectation(
    space: &ScenarioSpace,
    element: &str,
    gamma: &[&str],
    spec: &BlendSpec,
) -> Result<DegreeVector> {
    let mut acc: Option<Vec<f64>> = None;
    for (omega, p) in &space.outcomes {
        let profile = aggregate_profile(space, element, gamma, omega, spec)?;
        let acc = acc.get_or_insert_with(|| vec![0.0; profile.arity()]);
        for (a, &c) in acc.iter_mut().zip(profile.components()) {
            *a += p * c;
        }
    }
    DegreeVector::new(acc.expect("outcomes are nonempty"))
}

/// Componentwise quantile `inf { t : P(value <= t) >= p }` over the
/// per-outcome aggregated profiles.
pub fn quantile(
    space: &ScenarioSpace,
    element: &str,
    gamma: &[&str],
    p: f64,
    spec: &BlendSpec,
) -> Result<DegreeVector> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange {
            context: "quantile level",
            value: p,
            lo: 0.0,
            hi: 1.0,
        });
    }
    let mut profiles = Vec::with_capacity(space.outcomes.len());
    for (omega, prob) in &space.outcomes {
        profiles.push((aggregate_profile(space, element, gamma, omega, spec)?, *prob));
    }
    let arity = profiles[0].0.arity();
    let mut out = Vec::with_capacity(arity);
    for comp in 0..arity {
        let mut pairs: Vec<(f64, f64)> = profiles
            .iter()
            .map(|(v, prob)| (v.get(comp), *prob))
            .collect();
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut cum = 0.0;
        let mut q = pairs.last().map(|(v, _)| *v).unwrap_or(0.0);
        for (v, prob) in &pairs {
            cum += prob;
            if cum >= p - 1e-12 {
                q = *v;
                break;
            }
        }
        out.push(q);
    }
    DegreeVector::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::Band;
    use crate::plithogenic::{AppurtenanceTable, AttributeSystem, Payload, PayloadKind};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() < tol
    }

    fn plan_bundle(high: [f64; 3]) -> PlithogenicBundle {
        let attr = AttributeSystem::new("satisfaction", vec!["low", "medium", "high"]).unwrap();
        let pcf = ContradictionTable::from_scalar_matrix(vec![
            vec![0.0, 0.3, 0.9],
            vec![0.3, 0.0, 0.5],
            vec![0.9, 0.5, 0.0],
        ])
        .unwrap();
        let deg = |t: [f64; 3]| Payload::Vector(DegreeVector::new(t.to_vec()).unwrap());
        let table = AppurtenanceTable::new(
            FiniteUniverse::new(vec!["Premium"]).unwrap(),
            3,
            PayloadKind::Vector {
                arity: 3,
                band: Band::UNIT,
            },
            vec![deg([0.05, 0.10, 0.85]), deg([0.15, 0.15, 0.70]), deg(high)],
        )
        .unwrap();
        PlithogenicBundle::new(attr, table, pcf, FusionRule::Mean, None).unwrap()
    }

    #[test]
    fn snapshots_are_validated_and_distinct() {
        let tb = TimeIndexedBundle::new(vec![
            ("t1", plan_bundle([0.45, 0.30, 0.25])),
            ("t2", plan_bundle([0.80, 0.10, 0.10])),
        ])
        .unwrap();
        let at_t2 = snapshot(&tb, "t2").unwrap();
        let x = at_t2.universe().index_of("Premium").unwrap();
        let v = at_t2.attribute.index_of("high").unwrap();
        let payload = at_t2.table.get(x, v).as_vector().unwrap();
        assert_eq!(payload.components(), &[0.80, 0.10, 0.10]);
        assert!(snapshot(&tb, "t9").is_err());
    }

    #[test]
    fn constant_family_has_identical_snapshots() {
        let tb = TimeIndexedBundle::new(vec![
            ("t1", plan_bundle([0.45, 0.30, 0.25])),
            ("t2", plan_bundle([0.45, 0.30, 0.25])),
        ])
        .unwrap();
        assert_eq!(snapshot(&tb, "t1").unwrap(), snapshot(&tb, "t2").unwrap());
    }

    #[test]
    fn blend_bounds_and_examples() {
        let spec = BlendSpec::default();
        assert_eq!(blend(0.7, 0.4, 0.0, &spec).unwrap(), 0.4);
        assert_eq!(blend(0.7, 0.4, 1.0, &spec).unwrap(), 0.7);
        assert!(close(blend(0.7, 0.4, 0.5, &spec).unwrap(), 0.55, 1e-12));
        assert!(blend(0.7, 0.4, 1.5, &spec).is_err());
    }

    fn toy_space() -> ScenarioSpace {
        // one element, three attributes (one value each), three outcomes
        let universe = FiniteUniverse::new(vec!["x"]).unwrap();
        let outcomes = vec![("w1", 1.0 / 3.0), ("w2", 1.0 / 3.0), ("w3", 1.0 / 3.0)];
        let attributes = vec![
            ("a", vec!["a0"]),
            ("b", vec!["b0"]),
            ("c", vec!["c0"]),
        ];
        let s = |x: f64| DegreeVector::scalar(x).unwrap();
        let tables = vec![
            vec![s(0.8), s(0.6), s(0.4)],
            vec![s(0.5), s(0.5), s(0.5)],
            vec![s(0.9), s(0.3), s(0.6)],
        ];
        let mut pcf = ContradictionTable::zero(3, 1);
        pcf.set_pair(0, 1, vec![0.4]).unwrap();
        pcf.set_pair(0, 2, vec![0.8]).unwrap();
        pcf.set_pair(1, 2, vec![0.5]).unwrap();
        ScenarioSpace::new(universe, outcomes, attributes, tables, pcf, FusionRule::Mean).unwrap()
    }

    #[test]
    fn profile_fold_matches_hand_fold() {
        let space = toy_space();
        let spec = BlendSpec::default();
        let gamma = ["a0", "b0", "c0"];
        // hand fold for w1: blend(blend(0.8, 0.5; 0.4), 0.9; 0.8)
        let step1: f64 = 0.6 * 0.5 + 0.4 * 0.8;
        let expected = 0.2 * step1.min(0.9) + 0.8 * step1.max(0.9);
        let got = aggregate_profile(&space, "x", &gamma, "w1", &spec).unwrap();
        assert!(close(got.get(0), expected, 1e-12));
    }

    #[test]
    fn single_attribute_profile_is_raw_degree() {
        let universe = FiniteUniverse::new(vec!["x"]).unwrap();
        let s = |x: f64| DegreeVector::scalar(x).unwrap();
        let space = ScenarioSpace::new(
            universe,
            vec![("w1", 0.5), ("w2", 0.5)],
            vec![("a", vec!["a0"])],
            vec![vec![s(0.3), s(0.9)]],
            ContradictionTable::zero(1, 1),
            FusionRule::Mean,
        )
        .unwrap();
        let spec = BlendSpec::default();
        let got = aggregate_profile(&space, "x", &["a0"], "w2", &spec).unwrap();
        assert!(close(got.get(0), 0.9, 1e-12));
    }

    #[test]
    fn expectation_and_quantiles() {
        let universe = FiniteUniverse::new(vec!["x"]).unwrap();
        let s = |x: f64| DegreeVector::scalar(x).unwrap();
        let space = ScenarioSpace::new(
            universe,
            vec![("w1", 1.0 / 3.0), ("w2", 1.0 / 3.0), ("w3", 1.0 / 3.0)],
            vec![("a", vec!["a0"])],
            vec![vec![s(0.3), s(0.6), s(0.9)]],
            ContradictionTable::zero(1, 1),
            FusionRule::Mean,
        )
        .unwrap();
        let spec = BlendSpec::default();
        let e = expectation(&space, "x", &["a0"], &spec).unwrap();
        assert!(close(e.get(0), 0.6, 1e-12));
        let q1 = quantile(&space, "x", &["a0"], 1.0, &spec).unwrap();
        assert!(close(q1.get(0), 0.9, 1e-12));
        let q_low = quantile(&space, "x", &["a0"], 0.2, &spec).unwrap();
        assert!(close(q_low.get(0), 0.3, 1e-12));
        // non-decreasing in p
        let q_mid = quantile(&space, "x", &["a0"], 0.5, &spec).unwrap();
        assert!(q_low.get(0) <= q_mid.get(0) && q_mid.get(0) <= q1.get(0));
    }

    #[test]
    fn two_attribute_zero_contradiction_is_min() {
        let universe = FiniteUniverse::new(vec!["x"]).unwrap();
        let s = |x: f64| DegreeVector::scalar(x).unwrap();
        let space = ScenarioSpace::new(
            universe,
            vec![("w", 1.0)],
            vec![("a", vec!["a0"]), ("b", vec!["b0"])],
            vec![vec![s(0.7)], vec![s(0.4)]],
            ContradictionTable::zero(2, 1),
            FusionRule::Mean,
        )
        .unwrap();
        let got = aggregate_profile(&space, "x", &["a0", "b0"], "w", &BlendSpec::default()).unwrap();
        assert!(close(got.get(0), 0.4, 1e-12));
    }
}

//! Linguistic term machinery, hesitant and subset-valued payloads, cubic
//! (interval + point) degrees, refined signatures with scalarization, picture
//! degrees, triangular/trapezoidal bundles, and nonstandard aggregation.

use crate::classic::FiniteUniverse;
use crate::degree::{
    dual_blend, weighted_mean, DegreeVector, DualDegree, IntervalDegree, TrapezoidalNumber,
    TriangularNumber,
};
use crate::error::{Error, Result};
use crate::plithogenic::{ContradictionTable, FusionRule};

/// Finite ordered linguistic term set `s_0 < s_1 < ... < s_g`.
#[derive(Debug, Clone, PartialEq)]
pub struct TermSet {
    labels: Vec<String>,
}

impl TermSet {
    pub fn new<S: Into<String>>(labels: Vec<S>) -> Result<TermSet> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() < 2 {
            return Err(Error::EmptyInput("term set needs at least two labels"));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateIdentifier {
                    kind: "linguistic term",
                    name: l.clone(),
                });
            }
        }
        Ok(TermSet { labels })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn g(&self) -> usize {
        self.labels.len() - 1
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownIdentifier {
                kind: "linguistic term",
                name: label.to_string(),
            })
    }

    /// Normalized index distance `|i - j| / g`.
    pub fn distance(&self, i: usize, j: usize) -> f64 {
        (i as f64 - j as f64).abs() / self.g() as f64
    }
}

/// Normalized linguistic distance between two named terms.
pub fn term_distance(terms: &TermSet, a: &str, b: &str) -> Result<f64> {
    Ok(terms.distance(terms.index_of(a)?, terms.index_of(b)?))
}

/// Hausdorff-style lift of a term-level contradiction to term subsets:
/// `max{ max_{a in H} min_{b in K} c(a,b), max_{b in K} min_{a in H} c(a,b) }`.
/// Both sides empty gives 0; one side empty gives 1.
pub fn lift_contradiction<F>(h: &[usize], k: &[usize], mut pcf: F) -> f64
where
    F: FnMut(usize, usize) -> f64,
{
    match (h.is_empty(), k.is_empty()) {
        (true, true) => 0.0,
        (true, false) | (false, true) => 1.0,
        (false, false) => {
            let mut one_way = |from: &[usize], to: &[usize], swap: bool| {
                from.iter()
                    .map(|&a| {
                        to.iter()
                            .map(|&b| if swap { pcf(b, a) } else { pcf(a, b) })
                            .fold(f64::INFINITY, f64::min)
                    })
                    .fold(0.0, f64::max)
            };
            let forward = one_way(h, k, false);
            let backward = one_way(k, h, true);
            forward.max(backward)
        }
    }
}

/// Term-level contradiction of a linguistic bundle: the canonical normalized
/// distance, or an explicit table over the terms.
#[derive(Debug, Clone, PartialEq)]
pub enum TermContradiction {
    Distance,
    Table(ContradictionTable),
}

impl TermContradiction {
    fn value(&self, terms: &TermSet, fusion: FusionRule, i: usize, j: usize) -> Result<f64> {
        match self {
            TermContradiction::Distance => Ok(terms.distance(i, j)),
            TermContradiction::Table(t) => t.fused(fusion, i, j),
        }
    }
}

/// Value domain of a linguistic bundle: single terms, or an explicit family
/// of nonempty term subsets (hesitant variant).
#[derive(Debug, Clone, PartialEq)]
pub enum LinguisticValues {
    Single,
    Hesitant(Vec<Vec<usize>>),
}

/// Dominant context for linguistic aggregation.
#[derive(Debug, Clone, PartialEq)]
pub enum LinguisticDominant {
    Term(String),
    Set(Vec<String>),
}

/// Linguistic plithogenic bundle: appurtenance per element per value, where
/// values are terms or hesitant term sets.
#[derive(Debug, Clone, PartialEq)]
pub struct LinguisticBundle {
    pub terms: TermSet,
    pub pcf: TermContradiction,
    pub values: LinguisticValues,
    pub fusion: FusionRule,
    universe: FiniteUniverse,
    table: Vec<Vec<DegreeVector>>,
}

impl LinguisticBundle {
    pub fn new(
        terms: TermSet,
        pcf: TermContradiction,
        values: LinguisticValues,
        fusion: FusionRule,
        universe: FiniteUniverse,
        table: Vec<Vec<DegreeVector>>,
    ) -> Result<LinguisticBundle> {
        if let TermContradiction::Table(t) = &pcf {
            if t.len() != terms.labels().len() {
                return Err(Error::LengthMismatch {
                    context: "term contradiction table",
                    left: terms.labels().len(),
                    right: t.len(),
                });
            }
            t.require_axioms("term contradiction table")?;
        }
        let n_values = match &values {
            LinguisticValues::Single => terms.labels().len(),
            LinguisticValues::Hesitant(sets) => {
                if sets.iter().any(|s| s.is_empty()) {
                    return Err(Error::EmptyInput("hesitant value sets must be nonempty"));
                }
                if sets
                    .iter()
                    .flatten()
                    .any(|&i| i >= terms.labels().len())
                {
                    return Err(Error::InvalidParameter(
                        "hesitant value set references an unknown term".into(),
                    ));
                }
                sets.len()
            }
        };
        if table.len() != universe.len() {
            return Err(Error::LengthMismatch {
                context: "linguistic table rows",
                left: universe.len(),
                right: table.len(),
            });
        }
        for row in &table {
            if row.len() != n_values {
                return Err(Error::LengthMismatch {
                    context: "linguistic table columns",
                    left: n_values,
                    right: row.len(),
                });
            }
        }
        Ok(LinguisticBundle {
            terms,
            pcf,
            values,
            fusion,
            universe,
            table,
        })
    }

    pub fn universe(&self) -> &FiniteUniverse {
        &self.universe
    }

    /// Compatibility weights against the dominant term (or term set).
    pub fn weights(&self, dominant: &LinguisticDominant) -> Result<Vec<f64>> {
        match (&self.values, dominant) {
            (LinguisticValues::Single, LinguisticDominant::Term(d)) => {
                let di = self.terms.index_of(d)?;
                (0..self.terms.labels().len())
                    .map(|i| Ok(1.0 - self.pcf.value(&self.terms, self.fusion, i, di)?))
                    .collect()
            }
            (LinguisticValues::Hesitant(sets), dominant) => {
                let d_idx: Vec<usize> = match dominant {
                    LinguisticDominant::Term(d) => vec![self.terms.index_of(d)?],
                    LinguisticDominant::Set(ds) => ds
                        .iter()
                        .map(|d| self.terms.index_of(d))
                        .collect::<Result<_>>()?,
                };
                let mut out = Vec::with_capacity(sets.len());
                for h in sets {
                    let mut lifted_err = None;
                    let lifted = lift_contradiction(h, &d_idx, |a, b| {
                        match self.pcf.value(&self.terms, self.fusion, a, b) {
                            Ok(v) => v,
                            Err(e) => {
                                lifted_err = Some(e);
                                1.0
                            }
                        }
                    });
                    if let Some(e) = lifted_err {
                        return Err(e);
                    }
                    out.push(1.0 - lifted);
                }
                Ok(out)
            }
            (LinguisticValues::Single, LinguisticDominant::Set(_)) => Err(Error::InvalidParameter(
                "single-term bundle needs a single dominant term".into(),
            )),
        }
    }
}

/// Contradiction-weighted mean over the linguistic value domain.
pub fn linguistic_aggregate(
    bundle: &LinguisticBundle,
    element: &str,
    dominant: &LinguisticDominant,
) -> Result<DegreeVector> {
    let x = bundle.universe.index_of(element)?;
    let weights = bundle.weights(dominant)?;
    weighted_mean(&bundle.table[x], &weights)
}

/// Finite nonempty collection of candidate degree vectors of uniform arity.
#[derive(Debug, Clone, PartialEq)]
pub struct HesitationSet {
    vectors: Vec<DegreeVector>,
}

impl HesitationSet {
    pub fn new(vectors: Vec<DegreeVector>) -> Result<HesitationSet> {
        if vectors.is_empty() {
            return Err(Error::EmptyInput("hesitation set must be nonempty"));
        }
        let arity = vectors[0].arity();
        for v in &vectors {
            if v.arity() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    got: v.arity(),
                });
            }
        }
        Ok(HesitationSet { vectors })
    }

    pub fn vectors(&self) -> &[DegreeVector] {
        &self.vectors
    }

    pub fn arity(&self) -> usize {
        self.vectors[0].arity()
    }
}

/// How a hesitation set collapses to one degree vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReduceStrategy {
    #[default]
    Mean,
    Optimistic,
    Pessimistic,
}

/// Componentwise mean / max / min over the hesitation set.
pub fn hesitant_reduce(h: &HesitationSet, strategy: ReduceStrategy) -> DegreeVector {
    let arity = h.arity();
    let band = h.vectors[0].band();
    let mut out = vec![0.0; arity];
    match strategy {
        ReduceStrategy::Mean => {
            for v in &h.vectors {
                for (o, &c) in out.iter_mut().zip(v.components()) {
                    *o += c;
                }
            }
            for o in &mut out {
                *o /= h.vectors.len() as f64;
            }
        }
        ReduceStrategy::Optimistic => {
            out = h.vectors[0].components().to_vec();
            for v in &h.vectors[1..] {
                for (o, &c) in out.iter_mut().zip(v.components()) {
                    *o = o.max(c);
                }
            }
        }
        ReduceStrategy::Pessimistic => {
            out = h.vectors[0].components().to_vec();
            for v in &h.vectors[1..] {
                for (o, &c) in out.iter_mut().zip(v.components()) {
                    *o = o.min(c);
                }
            }
        }
    }
    DegreeVector::with_band(out, band).expect("reduction stays inside the band")
}

/// Subset-valued appurtenance image validation: every (element, value) image
/// must be nonempty and carry a uniform arity. Returns human-readable
/// diagnostics; `subset_reduce` is [`hesitant_reduce`] on a valid image.
pub fn subset_valued_validate(images: &[(&str, &str, &[DegreeVector])]) -> Vec<String> {
    let mut out = Vec::new();
    for (element, value, image) in images {
        if image.is_empty() {
            out.push(format!("empty image at ({element}, {value})"));
            continue;
        }
        let arity = image[0].arity();
        if image.iter().any(|v| v.arity() != arity) {
            out.push(format!("mixed arity image at ({element}, {value})"));
        }
    }
    out
}

/// Reduce one subset-valued image with a hesitant strategy.
pub fn subset_reduce(image: &[DegreeVector], strategy: ReduceStrategy) -> Result<DegreeVector> {
    let h = HesitationSet::new(image.to_vec())?;
    Ok(hesitant_reduce(&h, strategy))
}

/// Cubic degree: interval part and point part of matching arity.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicDegree {
    pub intervals: Vec<IntervalDegree>,
    pub point: DegreeVector,
}

impl CubicDegree {
    pub fn new(intervals: Vec<IntervalDegree>, point: DegreeVector) -> Result<CubicDegree> {
        if intervals.len() != point.arity() {
            return Err(Error::ArityMismatch {
                expected: intervals.len(),
                got: point.arity(),
            });
        }
        Ok(CubicDegree { intervals, point })
    }

    /// Intuitionistic variant: pairs with `mu_up + nu_up <= 1` and
    /// `mu + nu <= 1`.
    pub fn new_intuitionistic(
        intervals: Vec<IntervalDegree>,
        point: DegreeVector,
    ) -> Result<CubicDegree> {
        if intervals.len() != 2 || point.arity() != 2 {
            return Err(Error::ArityMismatch {
                expected: 2,
                got: intervals.len().max(point.arity()),
            });
        }
        if intervals[0].upper() + intervals[1].upper() > 1.0 + 1e-12 {
            return Err(Error::ConstraintViolated(
                "interval part violates mu+ + nu+ <= 1".into(),
            ));
        }
        if point.get(0) + point.get(1) > 1.0 + 1e-12 {
            return Err(Error::ConstraintViolated(
                "point part violates mu + nu <= 1".into(),
            ));
        }
        CubicDegree::new(intervals, point)
    }
}

/// Weighted mean of cubic degrees: the same scalar weights act on both
/// interval endpoints and point parts.
pub fn cubic_aggregate(values: &[CubicDegree], weights: &[f64]) -> Result<CubicDegree> {
    if values.is_empty() {
        return Err(Error::EmptyInput("cubic aggregation needs values"));
    }
    if values.len() != weights.len() {
        return Err(Error::LengthMismatch {
            context: "cubic values/weights",
            left: values.len(),
            right: weights.len(),
        });
    }
    let arity = values[0].intervals.len();
    for v in values {
        if v.intervals.len() != arity {
            return Err(Error::ArityMismatch {
                expected: arity,
                got: v.intervals.len(),
            });
        }
    }
    let total: f64 = weights.iter().sum();
    if total <= 0.0 {
        return Err(Error::ZeroLowerWeight);
    }
    let mut intervals = Vec::with_capacity(arity);
    for comp in 0..arity {
        let mut lo = 0.0;
        let mut hi = 0.0;
        for (v, &w) in values.iter().zip(weights) {
            lo += w * v.intervals[comp].lower();
            hi += w * v.intervals[comp].upper();
        }
        intervals.push(IntervalDegree::new(lo / total, hi / total)?);
    }
    let points: Vec<DegreeVector> = values.iter().map(|v| v.point.clone()).collect();
    let point = weighted_mean(&points, weights)?;
    CubicDegree::new(intervals, point)
}

/// Refinement signature `(p, q, r)`: counts of refined truth, indeterminacy,
/// and falsity components.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RefinedSignature {
    pub p: usize,
    pub q: usize,
    pub r: usize,
}

impl RefinedSignature {
    pub fn new(p: usize, q: usize, r: usize) -> Result<RefinedSignature> {
        if p + q + r == 0 {
            return Err(Error::InvalidParameter(
                "refinement signature needs p + q + r >= 1".into(),
            ));
        }
        Ok(RefinedSignature { p, q, r })
    }

    pub fn s(&self) -> usize {
        self.p + self.q + self.r
    }
}

/// Componentwise contradiction-weighted mean across attribute values for a
/// refined payload.
pub fn refined_aggregate(
    sig: RefinedSignature,
    values: &[DegreeVector],
    weights: &[f64],
) -> Result<DegreeVector> {
    for v in values {
        if v.arity() != sig.s() {
            return Err(Error::ArityMismatch {
                expected: sig.s(),
                got: v.arity(),
            });
        }
    }
    weighted_mean(values, weights)
}

/// Scalarize a refined degree: `w_T·mean(T) + w_I·(1 - mean(I)) +
/// w_F·(1 - mean(F))`. Weights must be nonnegative and sum to 1; a block
/// with positive weight must be nonempty.
pub fn refined_scalarize(
    deg: &DegreeVector,
    sig: RefinedSignature,
    weights: (f64, f64, f64),
) -> Result<f64> {
    if deg.arity() != sig.s() {
        return Err(Error::ArityMismatch {
            expected: sig.s(),
            got: deg.arity(),
        });
    }
    let (wt, wi, wf) = weights;
    if wt < 0.0 || wi < 0.0 || wf < 0.0 || (wt + wi + wf - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidParameter(
            "scalarization weights must be nonnegative and sum to 1".into(),
        ));
    }
    let xs = deg.components();
    let block_mean = |lo: usize, hi: usize, w: f64, name: &str| -> Result<f64> {
        if lo == hi {
            if w > 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "{name}-block is empty but carries weight {w}"
                )));
            }
            Ok(0.0)
        } else {
            Ok(xs[lo..hi].iter().sum::<f64>() / (hi - lo) as f64)
        }
    };
    let t_mean = block_mean(0, sig.p, wt, "T")?;
    let i_mean = block_mean(sig.p, sig.p + sig.q, wi, "I")?;
    let f_mean = block_mean(sig.p + sig.q, sig.s(), wf, "F")?;
    Ok(wt * t_mean + wi * (1.0 - i_mean) + wf * (1.0 - f_mean))
}

/// Trapezoidal truth/indeterminacy/falsity triple attached to one
/// (element, value) pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrapTripleDegree {
    pub t: TrapezoidalNumber,
    pub i: TrapezoidalNumber,
    pub f: TrapezoidalNumber,
}

/// Trapezoidal plithogenic bundle over one attribute.
#[derive(Debug, Clone, PartialEq)]
pub struct TrapBundle {
    universe: FiniteUniverse,
    values: Vec<String>,
    pcf: ContradictionTable,
    fusion: FusionRule,
    table: Vec<TrapTripleDegree>,
}

impl TrapBundle {
    pub fn new(
        universe: FiniteUniverse,
        values: Vec<&str>,
        pcf: ContradictionTable,
        fusion: FusionRule,
        table: Vec<TrapTripleDegree>,
    ) -> Result<TrapBundle> {
        if pcf.len() != values.len() {
            return Err(Error::LengthMismatch {
                context: "trapezoidal pcf size",
                left: values.len(),
                right: pcf.len(),
            });
        }
        pcf.require_axioms("trapezoidal contradiction table")?;
        if table.len() != universe.len() * values.len() {
            return Err(Error::LengthMismatch {
                context: "trapezoidal table size",
                left: universe.len() * values.len(),
                right: table.len(),
            });
        }
        Ok(TrapBundle {
            universe,
            values: values.into_iter().map(String::from).collect(),
            pcf,
            fusion,
            table,
        })
    }

    fn value_index(&self, value: &str) -> Result<usize> {
        self.values
            .iter()
            .position(|v| v == value)
            .ok_or_else(|| Error::UnknownIdentifier {
                kind: "attribute value",
                name: value.to_string(),
            })
    }

    pub fn entry(&self, element: &str, value: &str) -> Result<&TrapTripleDegree> {
        let x = self.universe.index_of(element)?;
        let v = self.value_index(value)?;
        Ok(&self.table[x * self.values.len() + v])
    }
}

/// Inclusion grade: raw and `[0, 1]`-clipped values plus the contradiction
/// factor `lambda(a*)` that produced them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InclusionGrade {
    pub raw: f64,
    pub clipped: f64,
    pub lambda: f64,
}

/// Plithogenic inclusion grade at the dominant value:
/// `(1 - lambda)·S(T) + lambda·(1 - S(F)) - beta·S(I)`, where `lambda`
/// averages the fused contradictions of the dominant value against all of
/// `Pv` (itself included) and `S` is the trapezoidal mean defuzzifier.
pub fn trapezoidal_inclusion(
    bundle: &TrapBundle,
    element: &str,
    a_star: &str,
    beta: f64,
) -> Result<InclusionGrade> {
    if !(0.0..=1.0).contains(&beta) {
        return Err(Error::OutOfRange {
            context: "beta",
            value: beta,
            lo: 0.0,
            hi: 1.0,
        });
    }
    let a = bundle.value_index(a_star)?;
    let mut lambda = 0.0;
    for b in 0..bundle.values.len() {
        lambda += bundle.pcf.fused(bundle.fusion, a, b)?;
    }
    lambda /= bundle.values.len() as f64;
    let entry = bundle.entry(element, a_star)?;
    let raw = (1.0 - lambda) * entry.t.mean() + lambda * (1.0 - entry.f.mean())
        - beta * entry.i.mean();
    Ok(InclusionGrade {
        raw,
        clipped: raw.clamp(0.0, 1.0),
        lambda,
    })
}

/// Tuple of triangular numbers, one per refinement-signature slot.
#[derive(Debug, Clone, PartialEq)]
pub struct TriSignatureDegree {
    pub slots: Vec<TriangularNumber>,
}

impl TriSignatureDegree {
    pub fn new(slots: Vec<TriangularNumber>) -> Result<TriSignatureDegree> {
        if slots.is_empty() {
            return Err(Error::EmptyInput("triangular degree needs slots"));
        }
        Ok(TriSignatureDegree { slots })
    }
}

/// Breakpointwise weighted mean per slot; weighted means of ordered triples
/// keep `l <= m <= u`.
pub fn triangular_aggregate(
    values: &[TriSignatureDegree],
    weights: &[f64],
) -> Result<TriSignatureDegree> {
    if values.is_empty() {
        return Err(Error::EmptyInput("triangular aggregation needs values"));
    }
    if values.len() != weights.len() {
        return Err(Error::LengthMismatch {
            context: "triangular values/weights",
            left: values.len(),
            right: weights.len(),
        });
    }
    let slots = values[0].slots.len();
    for v in values {
        if v.slots.len() != slots {
            return Err(Error::ArityMismatch {
                expected: slots,
                got: v.slots.len(),
            });
        }
    }
    let total: f64 = weights.iter().sum();
    if total <= 0.0 {
        return Err(Error::ZeroLowerWeight);
    }
    let mut out = Vec::with_capacity(slots);
    for s in 0..slots {
        let (mut l, mut m, mut u) = (0.0, 0.0, 0.0);
        for (v, &w) in values.iter().zip(weights) {
            l += w * v.slots[s].l;
            m += w * v.slots[s].m;
            u += w * v.slots[s].u;
        }
        out.push(TriangularNumber::new(l / total, m / total, u / total)?);
    }
    TriSignatureDegree::new(out)
}

/// Triangular plithogenic bundle: TFN tuples per (element, value) with a
/// value-level contradiction table.
#[derive(Debug, Clone, PartialEq)]
pub struct TriBundle {
    universe: FiniteUniverse,
    values: Vec<String>,
    pcf: ContradictionTable,
    fusion: FusionRule,
    table: Vec<TriSignatureDegree>,
}

impl TriBundle {
    pub fn new(
        universe: FiniteUniverse,
        values: Vec<&str>,
        pcf: ContradictionTable,
        fusion: FusionRule,
        table: Vec<TriSignatureDegree>,
    ) -> Result<TriBundle> {
        if pcf.len() != values.len() {
            return Err(Error::LengthMismatch {
                context: "triangular pcf size",
                left: values.len(),
                right: pcf.len(),
            });
        }
        pcf.require_axioms("triangular contradiction table")?;
        if table.len() != universe.len() * values.len() {
            return Err(Error::LengthMismatch {
                context: "triangular table size",
                left: universe.len() * values.len(),
                right: table.len(),
            });
        }
        Ok(TriBundle {
            universe,
            values: values.into_iter().map(String::from).collect(),
            pcf,
            fusion,
            table,
        })
    }

    /// Contradiction-weighted breakpointwise mean across values for one
    /// element under the dominant value.
    pub fn aggregate(&self, element: &str, a_star: &str) -> Result<TriSignatureDegree> {
        let x = self.universe.index_of(element)?;
        let a = self
            .values
            .iter()
            .position(|v| v == a_star)
            .ok_or_else(|| Error::UnknownIdentifier {
                kind: "attribute value",
                name: a_star.to_string(),
            })?;
        let weights: Vec<f64> = (0..self.values.len())
            .map(|b| Ok(1.0 - self.pcf.fused(self.fusion, b, a)?))
            .collect::<Result<_>>()?;
        let row: Vec<TriSignatureDegree> = (0..self.values.len())
            .map(|v| self.table[x * self.values.len() + v].clone())
            .collect();
        triangular_aggregate(&row, &weights)
    }
}

/// Left fold of the DCF-weighted dual blend along a value chain anchored at
/// the first value: `c_j = pCF(u_1, u_j)`.
pub fn nonstandard_aggregate(
    values: &[DualDegree],
    contradictions: &[f64],
) -> Result<DualDegree> {
    if values.is_empty() {
        return Err(Error::EmptyInput("nonstandard aggregation needs values"));
    }
    if contradictions.len() + 1 != values.len() {
        return Err(Error::LengthMismatch {
            context: "nonstandard chain contradictions",
            left: values.len() - 1,
            right: contradictions.len(),
        });
    }
    let mut acc = values[0];
    for (v, &c) in values[1..].iter().zip(contradictions) {
        acc = dual_blend(&acc, v, c)?;
    }
    Ok(acc)
}

/// Picture degree: `t` main components plus one neutral component.
#[derive(Debug, Clone, PartialEq)]
pub struct PictureDegree {
    main: Vec<f64>,
    eta: f64,
}

impl PictureDegree {
    pub fn main(&self) -> &[f64] {
        &self.main
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }
}

/// Construct a picture degree; the `t = 2` variant enforces
/// `alpha1 + eta + alpha2 <= 1`.
pub fn picture_construct(main: &[f64], eta: f64) -> Result<PictureDegree> {
    if main.is_empty() {
        return Err(Error::EmptyInput("picture degree needs main components"));
    }
    for &x in main.iter().chain(std::iter::once(&eta)) {
        if !(0.0..=1.0).contains(&x) {
            return Err(Error::OutOfRange {
                context: "picture component",
                value: x,
                lo: 0.0,
                hi: 1.0,
            });
        }
    }
    if main.len() == 2 {
        let sum = main[0] + main[1] + eta;
        if sum > 1.0 + 1e-12 {
            return Err(Error::ConstraintViolated(format!(
                "picture sum alpha1 + eta + alpha2 = {sum} exceeds 1"
            )));
        }
    }
    Ok(PictureDegree {
        main: main.to_vec(),
        eta,
    })
}

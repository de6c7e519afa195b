//! The canonical plithogenic bundle: attribute system, appurtenance table,
//! contradiction table, contradiction fusion, compatibility weights, and the
//! dominant-value aggregation generic over degree algebras.

use crate::classic::FiniteUniverse;
use crate::degree::{
    complex_weighted_mean, interval_weighted_mean, validate_constraint, weighted_mean, Band,
    ComplexDegree, ConstraintSpec, DegreeVector, DualDegree, IntervalDegree,
};
use crate::error::{Error, Result};

/// One attribute and the ordered range of values it can take.
#[derive(Debug, Clone, PartialEq)]
pub struct AttributeSystem {
    pub name: String,
    values: Vec<String>,
}

impl AttributeSystem {
    pub fn new<S: Into<String>>(name: &str, values: Vec<S>) -> Result<AttributeSystem> {
        let values: Vec<String> = values.into_iter().map(Into::into).collect();
        if values.is_empty() {
            return Err(Error::EmptyInput("attribute needs at least one value"));
        }
        for (i, v) in values.iter().enumerate() {
            if values[..i].contains(v) {
                return Err(Error::DuplicateIdentifier {
                    kind: "attribute value",
                    name: v.clone(),
                });
            }
        }
        Ok(AttributeSystem {
            name: name.to_string(),
            values,
        })
    }

    pub fn values(&self) -> &[String] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index_of(&self, value: &str) -> Result<usize> {
        self.values
            .iter()
            .position(|v| v == value)
            .ok_or_else(|| Error::UnknownIdentifier {
                kind: "attribute value",
                name: value.to_string(),
            })
    }
}

/// How a multi-channel contradiction vector collapses to a scalar. The mean
/// is the default; max is the pluggable alternative. Both are symmetric,
/// componentwise monotone, and map the zero vector to 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FusionRule {
    #[default]
    Mean,
    Max,
}

/// Collapse a t-channel contradiction vector: t = 0 gives 0, t = 1 is the
/// identity, t >= 2 applies the fusion rule.
pub fn fuse(rule: FusionRule, channels: &[f64]) -> Result<f64> {
    for &c in channels {
        if !(0.0..=1.0).contains(&c) {
            return Err(Error::OutOfRange {
                context: "contradiction channel",
                value: c,
                lo: 0.0,
                hi: 1.0,
            });
        }
    }
    Ok(match channels.len() {
        0 => 0.0,
        1 => channels[0],
        _ => match rule {
            FusionRule::Mean => channels.iter().sum::<f64>() / channels.len() as f64,
            FusionRule::Max => channels.iter().cloned().fold(0.0, f64::max),
        },
    })
}

/// Reflexive symmetric t-channel degree-of-contradiction matrix over an
/// ordered value set.
#[derive(Debug, Clone, PartialEq)]
pub struct ContradictionTable {
    n: usize,
    channels: usize,
    entries: Vec<Vec<f64>>,
}

impl ContradictionTable {
    /// All-zero table (no contradiction between any pair of values).
    pub fn zero(n: usize, channels: usize) -> ContradictionTable {
        ContradictionTable {
            n,
            channels,
            entries: vec![vec![0.0; channels]; n * n],
        }
    }

    /// Scalar (t = 1) table from a full square matrix.
    pub fn from_scalar_matrix(matrix: Vec<Vec<f64>>) -> Result<ContradictionTable> {
        let n = matrix.len();
        if n == 0 || matrix.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidParameter(
                "contradiction matrix must be square and nonempty".into(),
            ));
        }
        let entries = matrix
            .into_iter()
            .flat_map(|row| row.into_iter().map(|x| vec![x]))
            .collect();
        Ok(ContradictionTable {
            n,
            channels: 1,
            entries,
        })
    }

    /// Table from a full square matrix of channel vectors.
    pub fn from_matrix(channels: usize, matrix: Vec<Vec<Vec<f64>>>) -> Result<ContradictionTable> {
        let n = matrix.len();
        if n == 0 || matrix.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidParameter(
                "contradiction matrix must be square and nonempty".into(),
            ));
        }
        for row in &matrix {
            for cell in row {
                if cell.len() != channels {
                    return Err(Error::LengthMismatch {
                        context: "contradiction channels",
                        left: channels,
                        right: cell.len(),
                    });
                }
            }
        }
        Ok(ContradictionTable {
            n,
            channels,
            entries: matrix.into_iter().flatten().collect(),
        })
    }

    /// Symmetric builder: writes the value at (i, j) and (j, i), zeroes the
    /// diagonal. Start from `zero` and fill the upper triangle.
    pub fn set_pair(&mut self, i: usize, j: usize, value: Vec<f64>) -> Result<()> {
        if i >= self.n || j >= self.n {
            return Err(Error::InvalidParameter("pair index out of range".into()));
        }
        if value.len() != self.channels {
            return Err(Error::LengthMismatch {
                context: "contradiction channels",
                left: self.channels,
                right: value.len(),
            });
        }
        if i == j {
            return Ok(());
        }
        self.entries[i * self.n + j] = value.clone();
        self.entries[j * self.n + i] = value;
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn get(&self, i: usize, j: usize) -> &[f64] {
        &self.entries[i * self.n + j]
    }

    /// Fused scalar contradiction between two values.
    pub fn fused(&self, rule: FusionRule, i: usize, j: usize) -> Result<f64> {
        fuse(rule, self.get(i, j))
    }

    /// Hard axiom check for structures whose invariants demand a valid DCF
    /// at construction (bundles instead collect violations as data).
    pub fn require_axioms(&self, what: &'static str) -> Result<()> {
        let names: Vec<String> = (0..self.n).map(|i| format!("#{i}")).collect();
        match self.axiom_violations(&names).into_iter().next() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidParameter(format!("{what}: {v}"))),
        }
    }

    /// Reflexivity, symmetry, and range violations as data.
    pub fn axiom_violations(&self, value_names: &[String]) -> Vec<Violation> {
        let mut out = Vec::new();
        let name = |i: usize| {
            value_names
                .get(i)
                .cloned()
                .unwrap_or_else(|| format!("#{i}"))
        };
        for i in 0..self.n {
            for (ch, &x) in self.get(i, i).iter().enumerate() {
                if x != 0.0 {
                    out.push(Violation::Reflexivity {
                        value: name(i),
                        channel: ch,
                        got: x,
                    });
                }
            }
            for j in (i + 1)..self.n {
                for ch in 0..self.channels {
                    let a = self.get(i, j)[ch];
                    let b = self.get(j, i)[ch];
                    if a != b {
                        out.push(Violation::Symmetry {
                            left: name(i),
                            right: name(j),
                            channel: ch,
                        });
                    }
                    for x in [a, b] {
                        if !(0.0..=1.0).contains(&x) {
                            out.push(Violation::ChannelRange {
                                left: name(i),
                                right: name(j),
                                channel: ch,
                                got: x,
                            });
                            break;
                        }
                    }
                }
            }
        }
        out
    }
}

/// Degree algebra of a bundle's payloads.
#[derive(Debug, Clone, PartialEq)]
pub enum PayloadKind {
    Vector { arity: usize, band: Band },
    Interval { arity: usize },
    Complex { arity: usize },
    Dual { arity: usize, delta_hat: f64 },
}

impl PayloadKind {
    pub fn arity(&self) -> usize {
        match self {
            PayloadKind::Vector { arity, .. }
            | PayloadKind::Interval { arity }
            | PayloadKind::Complex { arity }
            | PayloadKind::Dual { arity, .. } => *arity,
        }
    }
}

/// One appurtenance entry: the degree of an (element, value) pair in the
/// bundle's algebra.
#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    Vector(DegreeVector),
    Interval(Vec<IntervalDegree>),
    Complex(Vec<ComplexDegree>),
    Dual(Vec<DualDegree>),
}

impl Payload {
    pub fn arity(&self) -> usize {
        match self {
            Payload::Vector(v) => v.arity(),
            Payload::Interval(v) => v.len(),
            Payload::Complex(v) => v.len(),
            Payload::Dual(v) => v.len(),
        }
    }

    pub fn as_vector(&self) -> Result<&DegreeVector> {
        match self {
            Payload::Vector(v) => Ok(v),
            _ => Err(Error::InvalidParameter(
                "payload is not a plain degree vector".into(),
            )),
        }
    }

    fn conforms(&self, kind: &PayloadKind) -> Result<()> {
        let matches = match (self, kind) {
            (Payload::Vector(v), PayloadKind::Vector { arity, band }) => {
                v.arity() == *arity && v.components().iter().all(|c| band.contains(*c))
            }
            (Payload::Interval(v), PayloadKind::Interval { arity }) => v.len() == *arity,
            (Payload::Complex(v), PayloadKind::Complex { arity }) => v.len() == *arity,
            (Payload::Dual(v), PayloadKind::Dual { arity, delta_hat }) => {
                v.len() == *arity
                    && v.iter()
                        .all(|d| d.standard >= -delta_hat && d.standard <= 1.0 + delta_hat)
            }
            _ => false,
        };
        if matches {
            Ok(())
        } else {
            Err(Error::InvalidParameter(
                "payload does not conform to the table's payload kind".into(),
            ))
        }
    }
}

/// Complete (element, value) -> payload table for one attribute.
#[derive(Debug, Clone, PartialEq)]
pub struct AppurtenanceTable {
    universe: FiniteUniverse,
    kind: PayloadKind,
    n_values: usize,
    entries: Vec<Payload>,
}

impl AppurtenanceTable {
    /// `entries` is element-major: index `x * n_values + v`.
    pub fn new(
        universe: FiniteUniverse,
        n_values: usize,
        kind: PayloadKind,
        entries: Vec<Payload>,
    ) -> Result<AppurtenanceTable> {
        if entries.len() != universe.len() * n_values {
            return Err(Error::LengthMismatch {
                context: "appurtenance table size",
                left: universe.len() * n_values,
                right: entries.len(),
            });
        }
        for p in &entries {
            p.conforms(&kind)?;
        }
        Ok(AppurtenanceTable {
            universe,
            kind,
            n_values,
            entries,
        })
    }

    pub fn universe(&self) -> &FiniteUniverse {
        &self.universe
    }

    pub fn kind(&self) -> &PayloadKind {
        &self.kind
    }

    pub fn get(&self, element: usize, value: usize) -> &Payload {
        &self.entries[element * self.n_values + value]
    }

    pub fn entries(&self) -> &[Payload] {
        &self.entries
    }
}

/// A validation finding; violations are data, not failures.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    Reflexivity {
        value: String,
        channel: usize,
        got: f64,
    },
    Symmetry {
        left: String,
        right: String,
        channel: usize,
    },
    ChannelRange {
        left: String,
        right: String,
        channel: usize,
        got: f64,
    },
    ValueCountMismatch {
        table: usize,
        attribute: usize,
    },
    PayloadConstraint {
        element: String,
        value: String,
        measured: f64,
        bound: f64,
    },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Reflexivity { value, channel, got } => {
                write!(f, "reflexivity violated at ({value}, {value}) channel {channel}: {got}")
            }
            Violation::Symmetry { left, right, channel } => {
                write!(f, "symmetry violated at ({left}, {right}) channel {channel}")
            }
            Violation::ChannelRange {
                left,
                right,
                channel,
                got,
            } => write!(
                f,
                "contradiction out of range at ({left}, {right}) channel {channel}: {got}"
            ),
            Violation::ValueCountMismatch { table, attribute } => write!(
                f,
                "contradiction table covers {table} values, attribute has {attribute}"
            ),
            Violation::PayloadConstraint {
                element,
                value,
                measured,
                bound,
            } => write!(
                f,
                "payload at ({element}, {value}) violates constraint: {measured} > {bound}"
            ),
        }
    }
}

/// Universe, attribute system, appurtenance table, contradiction table, and
/// fusion/constraint configuration — the full `(P, v, Pv, pdf, pCF)` data.
#[derive(Debug, Clone, PartialEq)]
pub struct PlithogenicBundle {
    pub attribute: AttributeSystem,
    pub table: AppurtenanceTable,
    pub contradiction: ContradictionTable,
    pub fusion: FusionRule,
    pub constraint: Option<ConstraintSpec>,
}

impl PlithogenicBundle {
    pub fn new(
        attribute: AttributeSystem,
        table: AppurtenanceTable,
        contradiction: ContradictionTable,
        fusion: FusionRule,
        constraint: Option<ConstraintSpec>,
    ) -> Result<PlithogenicBundle> {
        if table.n_values != attribute.len() {
            return Err(Error::LengthMismatch {
                context: "bundle attribute/table values",
                left: attribute.len(),
                right: table.n_values,
            });
        }
        Ok(PlithogenicBundle {
            attribute,
            table,
            contradiction,
            fusion,
            constraint,
        })
    }

    pub fn universe(&self) -> &FiniteUniverse {
        self.table.universe()
    }
}

/// Check every structural invariant; an empty report means the bundle is
/// valid. Each violation names the offending pair or entry.
pub fn validate_bundle(bundle: &PlithogenicBundle) -> Vec<Violation> {
    let mut out = Vec::new();
    if bundle.contradiction.len() != bundle.attribute.len() {
        out.push(Violation::ValueCountMismatch {
            table: bundle.contradiction.len(),
            attribute: bundle.attribute.len(),
        });
    }
    out.extend(
        bundle
            .contradiction
            .axiom_violations(bundle.attribute.values()),
    );
    if let Some(spec) = &bundle.constraint {
        for (x, element) in bundle.universe().elements().iter().enumerate() {
            for (v, value) in bundle.attribute.values().iter().enumerate() {
                if let Payload::Vector(deg) = bundle.table.get(x, v) {
                    if let Ok(report) = validate_constraint(deg, spec) {
                        if !report.ok {
                            out.push(Violation::PayloadConstraint {
                                element: element.clone(),
                                value: value.clone(),
                                measured: report.measured,
                                bound: report.bound,
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

/// Compatibility weights `w(a) = 1 - fuse(pCF(a, dominant))`, ordered like
/// the attribute's value list. The dominant value always gets weight 1.
pub fn compatibility_weights(bundle: &PlithogenicBundle, dominant: &str) -> Result<Vec<f64>> {
    if bundle.contradiction.len() != bundle.attribute.len() {
        return Err(Error::InvalidParameter(format!(
            "contradiction table covers {} values, attribute has {}",
            bundle.contradiction.len(),
            bundle.attribute.len()
        )));
    }
    let d = bundle.attribute.index_of(dominant)?;
    (0..bundle.attribute.len())
        .map(|a| Ok(1.0 - bundle.contradiction.fused(bundle.fusion, a, d)?))
        .collect()
}

/// Contradiction-weighted mean of `pdf(x, a)` over every attribute value,
/// dispatched to the payload's algebra.
pub fn aggregate_dominant(bundle: &PlithogenicBundle, x: &str, dominant: &str) -> Result<Payload> {
    let values: Vec<&str> = bundle.attribute.values().iter().map(|s| s.as_str()).collect();
    aggregate_dominant_over(bundle, x, dominant, &values)
}

/// Same as [`aggregate_dominant`], restricted to an explicit subset of
/// attribute values (several worked settings aggregate over chosen values
/// only).
pub fn aggregate_dominant_over(
    bundle: &PlithogenicBundle,
    x: &str,
    dominant: &str,
    values: &[&str],
) -> Result<Payload> {
    if values.is_empty() {
        return Err(Error::EmptyInput("aggregation needs at least one value"));
    }
    let xi = bundle.universe().index_of(x)?;
    let weights_all = compatibility_weights(bundle, dominant)?;
    let idx: Vec<usize> = values
        .iter()
        .map(|v| bundle.attribute.index_of(v))
        .collect::<Result<_>>()?;
    let weights: Vec<f64> = idx.iter().map(|&v| weights_all[v]).collect();
    let payloads: Vec<&Payload> = idx.iter().map(|&v| bundle.table.get(xi, v)).collect();

    match bundle.table.kind() {
        PayloadKind::Vector { .. } => {
            let vecs: Vec<DegreeVector> = payloads
                .iter()
                .map(|p| p.as_vector().cloned())
                .collect::<Result<_>>()?;
            Ok(Payload::Vector(weighted_mean(&vecs, &weights)?))
        }
        PayloadKind::Interval { arity } => {
            // degenerate weight intervals [w, w] feed the interval kernel
            let weight_ivs: Vec<IntervalDegree> = weights
                .iter()
                .map(|&w| IntervalDegree::degenerate(w.clamp(0.0, 1.0)))
                .collect::<Result<_>>()?;
            let mut out = Vec::with_capacity(*arity);
            for comp in 0..*arity {
                let column: Vec<IntervalDegree> = payloads
                    .iter()
                    .map(|p| match p {
                        Payload::Interval(v) => v[comp],
                        _ => unreachable!("kind checked at construction"),
                    })
                    .collect();
                let agg = interval_weighted_mean(&column, &weight_ivs)?;
                out.push(IntervalDegree::new(
                    agg.lower.clamp(0.0, 1.0),
                    agg.upper.clamp(0.0, 1.0),
                )?);
            }
            Ok(Payload::Interval(out))
        }
        PayloadKind::Complex { arity } => {
            let mut out = Vec::with_capacity(*arity);
            for comp in 0..*arity {
                let column: Vec<ComplexDegree> = payloads
                    .iter()
                    .map(|p| match p {
                        Payload::Complex(v) => v[comp],
                        _ => unreachable!("kind checked at construction"),
                    })
                    .collect();
                out.push(complex_weighted_mean(&column, &weights)?);
            }
            Ok(Payload::Complex(out))
        }
        PayloadKind::Dual { arity, .. } => {
            let total: f64 = weights.iter().sum();
            let mut out = vec![DualDegree::new(0.0, 0.0); *arity];
            if total > 0.0 {
                for (p, &w) in payloads.iter().zip(&weights) {
                    if let Payload::Dual(v) = p {
                        for (o, d) in out.iter_mut().zip(v) {
                            o.standard += w * d.standard;
                            o.infinitesimal += w * d.infinitesimal;
                        }
                    }
                }
                for o in &mut out {
                    o.standard /= total;
                    o.infinitesimal /= total;
                }
            }
            Ok(Payload::Dual(out))
        }
    }
}

/// Band classification of a bundle's vector payloads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BandClass {
    Standard,
    Overset,
    Underset,
    Offset,
}

impl std::fmt::Display for BandClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            BandClass::Standard => "standard",
            BandClass::Overset => "overset",
            BandClass::Underset => "underset",
            BandClass::Offset => "offset",
        };
        f.write_str(s)
    }
}

/// Overset iff some component exceeds 1 and none drop below 0, underset the
/// mirror case, offset when both occur, standard otherwise.
pub fn classify_band(bundle: &PlithogenicBundle) -> BandClass {
    let mut above = false;
    let mut below = false;
    for p in bundle.table.entries() {
        if let Payload::Vector(v) = p {
            for &c in v.components() {
                if c > 1.0 {
                    above = true;
                }
                if c < 0.0 {
                    below = true;
                }
            }
        }
    }
    match (above, below) {
        (false, false) => BandClass::Standard,
        (true, false) => BandClass::Overset,
        (false, true) => BandClass::Underset,
        (true, true) => BandClass::Offset,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() < tol
    }

    fn scalar_bundle(
        universe: Vec<&str>,
        values: Vec<&str>,
        matrix: Vec<Vec<f64>>,
        degrees: Vec<Vec<f64>>,
        band: Band,
    ) -> PlithogenicBundle {
        let attr = AttributeSystem::new("attr", values).unwrap();
        let n_values = attr.len();
        let entries = degrees
            .into_iter()
            .flatten()
            .map(|d| Payload::Vector(DegreeVector::with_band(vec![d], band).unwrap()))
            .collect();
        let table = AppurtenanceTable::new(
            FiniteUniverse::new(universe).unwrap(),
            n_values,
            PayloadKind::Vector { arity: 1, band },
            entries,
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

    #[test]
    fn fuse_rules() {
        assert_eq!(fuse(FusionRule::Mean, &[]).unwrap(), 0.0);
        assert_eq!(fuse(FusionRule::Mean, &[0.3]).unwrap(), 0.3);
        assert!(close(fuse(FusionRule::Mean, &[0.8, 0.5]).unwrap(), 0.65, 1e-12));
        assert!(close(fuse(FusionRule::Max, &[0.8, 0.5]).unwrap(), 0.8, 1e-12));
        assert!(fuse(FusionRule::Mean, &[1.2]).is_err());
    }

    #[test]
    fn rental_contradiction_matrix_is_valid() {
        let table = ContradictionTable::from_scalar_matrix(vec![
            vec![0.0, 0.30, 0.70],
            vec![0.30, 0.0, 0.50],
            vec![0.70, 0.50, 0.0],
        ])
        .unwrap();
        let names = vec!["low_rent".into(), "near_station".into(), "large_space".into()];
        assert!(table.axiom_violations(&names).is_empty());
    }

    #[test]
    fn violations_name_the_offenders() {
        let asym = ContradictionTable::from_scalar_matrix(vec![
            vec![0.0, 0.3],
            vec![0.4, 0.0],
        ])
        .unwrap();
        let names = vec!["a".to_string(), "b".to_string()];
        let v = asym.axiom_violations(&names);
        assert!(matches!(&v[0], Violation::Symmetry { left, right, .. } if left == "a" && right == "b"));

        let refl = ContradictionTable::from_scalar_matrix(vec![
            vec![0.1, 0.3],
            vec![0.3, 0.0],
        ])
        .unwrap();
        let v = refl.axiom_violations(&names);
        assert!(matches!(&v[0], Violation::Reflexivity { value, .. } if value == "a"));
    }

    #[test]
    fn ev_compatibility_weights() {
        // two contradiction channels fused by the mean
        let mut table = ContradictionTable::zero(3, 2);
        table.set_pair(0, 2, vec![0.8, 0.5]).unwrap();
        table.set_pair(1, 2, vec![0.4, 0.2]).unwrap();
        let attr = AttributeSystem::new("tariff", vec!["offpeak", "shoulder", "peak"]).unwrap();
        let entries = vec![
            Payload::Vector(DegreeVector::scalar(0.5).unwrap());
            3
        ];
        let bundle = PlithogenicBundle::new(
            attr,
            AppurtenanceTable::new(
                FiniteUniverse::new(vec!["EV1"]).unwrap(),
                3,
                PayloadKind::Vector {
                    arity: 1,
                    band: Band::UNIT,
                },
                entries,
            )
            .unwrap(),
            table,
            FusionRule::Mean,
            None,
        )
        .unwrap();
        let w = compatibility_weights(&bundle, "peak").unwrap();
        assert!(close(w[0], 0.35, 1e-12));
        assert!(close(w[1], 0.70, 1e-12));
        assert!(close(w[2], 1.0, 1e-12));
    }

    #[test]
    fn offset_aggregate_and_band_class() {
        let band = Band::new(-0.5, 1.5).unwrap();
        let bundle = scalar_bundle(
            vec!["cust"],
            vec!["Low", "Medium", "High"],
            vec![
                vec![0.0, 0.50, 0.85],
                vec![0.50, 0.0, 0.30],
                vec![0.85, 0.30, 0.0],
            ],
            vec![vec![-0.10, 0.80, 1.40]],
            band,
        );
        assert_eq!(classify_band(&bundle), BandClass::Offset);
        let out = aggregate_dominant(&bundle, "cust", "High").unwrap();
        let v = out.as_vector().unwrap();
        assert!(close(v.get(0), 1.945 / 1.85, 1e-12));
        assert!(close(v.get(0), 1.0514, 1e-3));
    }

    #[test]
    fn zero_contradiction_equals_plain_mean() {
        let bundle = scalar_bundle(
            vec!["x"],
            vec!["a", "b", "c"],
            vec![vec![0.0; 3]; 3],
            vec![vec![0.2, 0.5, 0.8]],
            Band::UNIT,
        );
        let out = aggregate_dominant(&bundle, "x", "a").unwrap();
        assert!(close(out.as_vector().unwrap().get(0), 0.5, 1e-12));
    }

    #[test]
    fn overset_and_standard_classes() {
        let band = Band::new(0.0, 1.5).unwrap();
        let over = scalar_bundle(
            vec!["x"],
            vec!["a", "b"],
            vec![vec![0.0, 0.2], vec![0.2, 0.0]],
            vec![vec![1.1, 1.2]],
            band,
        );
        assert_eq!(classify_band(&over), BandClass::Overset);
        let std = scalar_bundle(
            vec!["x"],
            vec!["a", "b"],
            vec![vec![0.0, 0.2], vec![0.2, 0.0]],
            vec![vec![0.4, 0.9]],
            Band::UNIT,
        );
        assert_eq!(classify_band(&std), BandClass::Standard);
    }
}

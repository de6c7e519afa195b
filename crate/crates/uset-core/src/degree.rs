//! Numeric value kinds for degree payloads: bounded vectors, intervals,
//! complex amplitude-phase degrees, dual numbers, triangular and trapezoidal
//! numbers, plus the generic weighted-mean kernels and constraint validators
//! everything else is built on.

use crate::error::{Error, Result};

/// Closed band a degree component must stay inside. The standard band is
/// `[0, 1]`; offset models widen it below 0 and/or above 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Band {
    pub lo: f64,
    pub hi: f64,
}

impl Band {
    pub const UNIT: Band = Band { lo: 0.0, hi: 1.0 };

    pub fn new(lo: f64, hi: f64) -> Result<Band> {
        if !lo.is_finite() || !hi.is_finite() || lo > hi {
            return Err(Error::InvalidParameter(format!(
                "band [{lo}, {hi}] is not a valid interval"
            )));
        }
        Ok(Band { lo, hi })
    }

    pub fn contains(&self, x: f64) -> bool {
        x.is_finite() && x >= self.lo && x <= self.hi
    }

    fn including_zero(&self) -> Band {
        Band {
            lo: self.lo.min(0.0),
            hi: self.hi.max(0.0),
        }
    }
}

/// An s-component membership degree confined to a band.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeVector {
    components: Vec<f64>,
    band: Band,
}

impl DegreeVector {
    /// Degree in the standard `[0, 1]` band.
    pub fn new(components: Vec<f64>) -> Result<DegreeVector> {
        DegreeVector::with_band(components, Band::UNIT)
    }

    pub fn with_band(components: Vec<f64>, band: Band) -> Result<DegreeVector> {
        if components.is_empty() {
            return Err(Error::EmptyInput("degree vector needs at least one component"));
        }
        for &c in &components {
            if !band.contains(c) {
                return Err(Error::OutOfRange {
                    context: "degree component",
                    value: c,
                    lo: band.lo,
                    hi: band.hi,
                });
            }
        }
        Ok(DegreeVector { components, band })
    }

    pub fn scalar(x: f64) -> Result<DegreeVector> {
        DegreeVector::new(vec![x])
    }

    pub fn components(&self) -> &[f64] {
        &self.components
    }

    pub fn band(&self) -> Band {
        self.band
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }

    pub fn get(&self, i: usize) -> f64 {
        self.components[i]
    }

    /// Scalar payloads expose their single component directly.
    pub fn as_scalar(&self) -> Result<f64> {
        if self.arity() != 1 {
            return Err(Error::ArityMismatch {
                expected: 1,
                got: self.arity(),
            });
        }
        Ok(self.components[0])
    }
}

/// Componentwise weighted mean with the 0/0 := 0 convention: a zero total
/// weight yields the all-zero vector.
pub fn weighted_mean(values: &[DegreeVector], weights: &[f64]) -> Result<DegreeVector> {
    if values.is_empty() {
        return Err(Error::EmptyInput("weighted_mean needs at least one value"));
    }
    if values.len() != weights.len() {
        return Err(Error::LengthMismatch {
            context: "weighted_mean values/weights",
            left: values.len(),
            right: weights.len(),
        });
    }
    let arity = values[0].arity();
    let band = values[0].band();
    for v in values {
        if v.arity() != arity {
            return Err(Error::ArityMismatch {
                expected: arity,
                got: v.arity(),
            });
        }
    }
    for (i, &w) in weights.iter().enumerate() {
        if !w.is_finite() || w < 0.0 {
            return Err(Error::NegativeWeight { index: i, value: w });
        }
    }
    let total: f64 = weights.iter().sum();
    if total == 0.0 {
        return DegreeVector::with_band(vec![0.0; arity], band.including_zero());
    }
    let mut out = vec![0.0; arity];
    for (v, &w) in values.iter().zip(weights) {
        for (o, &c) in out.iter_mut().zip(v.components()) {
            *o += w * c;
        }
    }
    for o in &mut out {
        *o /= total;
        // convex combination; clamp away rounding spill at the band edges
        *o = o.clamp(band.lo, band.hi);
    }
    DegreeVector::with_band(out, band)
}

/// Closed subinterval of `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalDegree {
    lower: f64,
    upper: f64,
}

impl IntervalDegree {
    pub fn new(lower: f64, upper: f64) -> Result<IntervalDegree> {
        if !(0.0..=1.0).contains(&lower) || !(0.0..=1.0).contains(&upper) || lower > upper {
            return Err(Error::InvalidParameter(format!(
                "[{lower}, {upper}] is not a closed subinterval of [0, 1]"
            )));
        }
        Ok(IntervalDegree { lower, upper })
    }

    pub fn degenerate(x: f64) -> Result<IntervalDegree> {
        IntervalDegree::new(x, x)
    }

    pub fn lower(&self) -> f64 {
        self.lower
    }

    pub fn upper(&self) -> f64 {
        self.upper
    }
}

/// Interval weighted-mean result. The quotient `[N.lo / W.hi, N.hi / W.lo]`
/// can exceed 1; it is returned unclipped with `exceeds_unit` raised.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalAggregate {
    pub lower: f64,
    pub upper: f64,
    pub exceeds_unit: bool,
}

/// Interval arithmetic mean: numerator `Σ [wᵢ.lo·xᵢ.lo, wᵢ.hi·xᵢ.hi]`,
/// divided endpoint-against-opposite-endpoint by the total weight interval.
pub fn interval_weighted_mean(
    values: &[IntervalDegree],
    weights: &[IntervalDegree],
) -> Result<IntervalAggregate> {
    if values.is_empty() {
        return Err(Error::EmptyInput("interval_weighted_mean needs values"));
    }
    if values.len() != weights.len() {
        return Err(Error::LengthMismatch {
            context: "interval_weighted_mean values/weights",
            left: values.len(),
            right: weights.len(),
        });
    }
    let (mut num_lo, mut num_hi, mut w_lo, mut w_hi) = (0.0, 0.0, 0.0, 0.0);
    for (v, w) in values.iter().zip(weights) {
        num_lo += w.lower() * v.lower();
        num_hi += w.upper() * v.upper();
        w_lo += w.lower();
        w_hi += w.upper();
    }
    if w_lo <= 0.0 {
        return Err(Error::ZeroLowerWeight);
    }
    let lower = num_lo / w_hi;
    let upper = num_hi / w_lo;
    Ok(IntervalAggregate {
        lower,
        upper,
        exceeds_unit: upper > 1.0,
    })
}

/// Complex degree in amplitude-phase form: modulus in `[0, 1]`, argument
/// normalized to `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexDegree {
    modulus: f64,
    argument: f64,
}

const TAU: f64 = std::f64::consts::TAU;

impl ComplexDegree {
    pub fn new(modulus: f64, argument: f64) -> Result<ComplexDegree> {
        if !(0.0..=1.0).contains(&modulus) {
            return Err(Error::OutOfRange {
                context: "complex modulus",
                value: modulus,
                lo: 0.0,
                hi: 1.0,
            });
        }
        if !argument.is_finite() {
            return Err(Error::InvalidParameter("non-finite complex argument".into()));
        }
        let mut arg = argument % TAU;
        if arg < 0.0 {
            arg += TAU;
        }
        Ok(ComplexDegree {
            modulus,
            argument: arg,
        })
    }

    pub fn from_polar_deg(modulus: f64, degrees: f64) -> Result<ComplexDegree> {
        ComplexDegree::new(modulus, degrees.to_radians())
    }

    /// Phase of the zero vector is 0 by convention.
    pub fn from_rectangular(re: f64, im: f64) -> Result<ComplexDegree> {
        let modulus = re.hypot(im);
        let argument = if modulus == 0.0 { 0.0 } else { im.atan2(re) };
        // tolerate rounding spill just above the unit circle
        let modulus = if modulus > 1.0 && modulus < 1.0 + 1e-12 {
            1.0
        } else {
            modulus
        };
        ComplexDegree::new(modulus, argument)
    }

    pub fn modulus(&self) -> f64 {
        self.modulus
    }

    pub fn argument(&self) -> f64 {
        self.argument
    }

    pub fn argument_deg(&self) -> f64 {
        self.argument.to_degrees()
    }

    pub fn re(&self) -> f64 {
        self.modulus * self.argument.cos()
    }

    pub fn im(&self) -> f64 {
        self.modulus * self.argument.sin()
    }
}

/// Weighted complex mean computed in rectangular coordinates; the result is
/// converted back to amplitude-phase form at the boundary.
pub fn complex_weighted_mean(values: &[ComplexDegree], weights: &[f64]) -> Result<ComplexDegree> {
    if values.is_empty() {
        return Err(Error::EmptyInput("complex_weighted_mean needs values"));
    }
    if values.len() != weights.len() {
        return Err(Error::LengthMismatch {
            context: "complex_weighted_mean values/weights",
            left: values.len(),
            right: weights.len(),
        });
    }
    for (i, &w) in weights.iter().enumerate() {
        if !w.is_finite() || w < 0.0 {
            return Err(Error::NegativeWeight { index: i, value: w });
        }
    }
    let total: f64 = weights.iter().sum();
    if total == 0.0 {
        return ComplexDegree::new(0.0, 0.0);
    }
    let (mut re, mut im) = (0.0, 0.0);
    for (v, &w) in values.iter().zip(weights) {
        re += w * v.re();
        im += w * v.im();
    }
    ComplexDegree::from_rectangular(re / total, im / total)
}

/// First-order dual number `standard + infinitesimal·ε`. Ordering is
/// lexicographic: standard part first, ε-coefficient second.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualDegree {
    pub standard: f64,
    pub infinitesimal: f64,
}

impl DualDegree {
    pub fn new(standard: f64, infinitesimal: f64) -> DualDegree {
        DualDegree {
            standard,
            infinitesimal,
        }
    }

    fn lex_le(&self, other: &DualDegree) -> bool {
        if self.standard != other.standard {
            self.standard < other.standard
        } else {
            self.infinitesimal <= other.infinitesimal
        }
    }
}

/// The standard part map: drops the infinitesimal coefficient.
pub fn standard_part(a: &DualDegree) -> f64 {
    a.standard
}

/// Contradiction-weighted blend `(1-c)·min(a,b) + c·max(a,b)` where min/max
/// select whole dual numbers under the lexicographic order and the convex
/// combination acts componentwise on (standard, infinitesimal).
pub fn dual_blend(a: &DualDegree, b: &DualDegree, c: f64) -> Result<DualDegree> {
    if !(0.0..=1.0).contains(&c) {
        return Err(Error::OutOfRange {
            context: "blend coefficient",
            value: c,
            lo: 0.0,
            hi: 1.0,
        });
    }
    let (lo, hi) = if a.lex_le(b) { (a, b) } else { (b, a) };
    Ok(DualDegree {
        standard: (1.0 - c) * lo.standard + c * hi.standard,
        infinitesimal: (1.0 - c) * lo.infinitesimal + c * hi.infinitesimal,
    })
}

/// Triangular fuzzy number on `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangularNumber {
    pub l: f64,
    pub m: f64,
    pub u: f64,
}

impl TriangularNumber {
    pub fn new(l: f64, m: f64, u: f64) -> Result<TriangularNumber> {
        if !(0.0 <= l && l <= m && m <= u && u <= 1.0) {
            return Err(Error::UnorderedBreakpoints("triangular number needs 0 <= l <= m <= u <= 1"));
        }
        Ok(TriangularNumber { l, m, u })
    }

    /// Centroid defuzzifier `(l + m + u) / 3`.
    pub fn centroid(&self) -> f64 {
        (self.l + self.m + self.u) / 3.0
    }
}

/// Trapezoidal fuzzy number on `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrapezoidalNumber {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl TrapezoidalNumber {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<TrapezoidalNumber> {
        if !(0.0 <= a && a <= b && b <= c && c <= d && d <= 1.0) {
            return Err(Error::UnorderedBreakpoints(
                "trapezoidal number needs 0 <= a <= b <= c <= d <= 1",
            ));
        }
        Ok(TrapezoidalNumber { a, b, c, d })
    }

    /// Arithmetic-mean defuzzifier `(a + b + c + d) / 4`.
    pub fn mean(&self) -> f64 {
        (self.a + self.b + self.c + self.d) / 4.0
    }
}

/// Membership shape over an arbitrary real axis (breakpoints need not lie in
/// `[0, 1]`; the evaluated membership always does).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Shape {
    Triangular { a: f64, m: f64, b: f64 },
    Trapezoidal { a: f64, b: f64, c: f64, d: f64 },
}

impl Shape {
    pub fn triangular(a: f64, m: f64, b: f64) -> Result<Shape> {
        if !(a <= m && m <= b) {
            return Err(Error::UnorderedBreakpoints("triangular shape needs a <= m <= b"));
        }
        Ok(Shape::Triangular { a, m, b })
    }

    pub fn trapezoidal(a: f64, b: f64, c: f64, d: f64) -> Result<Shape> {
        if !(a <= b && b <= c && c <= d) {
            return Err(Error::UnorderedBreakpoints(
                "trapezoidal shape needs a <= b <= c <= d",
            ));
        }
        Ok(Shape::Trapezoidal { a, b, c, d })
    }

    /// Piecewise-linear membership: 0 outside the support, 1 on the
    /// peak/plateau, linear in between.
    pub fn membership(&self, x: f64) -> f64 {
        match *self {
            Shape::Triangular { a, m, b } => {
                if x == m {
                    1.0
                } else if x <= a || x >= b {
                    0.0
                } else if x < m {
                    (x - a) / (m - a)
                } else {
                    (b - x) / (b - m)
                }
            }
            Shape::Trapezoidal { a, b, c, d } => {
                if x >= b && x <= c {
                    1.0
                } else if x <= a || x >= d {
                    0.0
                } else if x < b {
                    (x - a) / (b - a)
                } else {
                    (d - x) / (d - c)
                }
            }
        }
    }
}

/// Piecewise-linear membership of `x` under a triangular or trapezoidal shape.
pub fn shaped_membership(x: f64, shape: &Shape) -> f64 {
    shape.membership(x)
}

/// Algebraic constraint a degree vector may be required to satisfy.
#[derive(Debug, Clone, PartialEq)]
pub enum ConstraintSpec {
    None,
    /// Intuitionistic pair: mu + nu <= 1.
    Ifs,
    /// Neutrosophic triple: T + I + F <= 3.
    Neutrosophic,
    /// Picture degree with `t` main components plus a trailing neutral one;
    /// for t = 2 the sum alpha1 + eta + alpha2 is bounded by 1.
    Picture { t: usize },
    /// Spherical: sum of squares <= lambda^2 over a triple.
    Spherical { lambda: f64 },
    /// T-spherical: sum of t-th powers <= lambda^t over a triple.
    TSpherical { t_exp: f64, lambda: f64 },
    /// q-rung orthovector: sum of q-th powers <= n - 1 over n components.
    QRung { q: f64, n: usize },
    /// Linear Diophantine bound: 0 <= sum(alpha_i * mu_i) <= C together with
    /// 0 <= sum(alpha_i) <= C.
    Diophantine { c: f64, coefficients: Vec<f64> },
    /// Every component inside [lo, hi].
    Band { lo: f64, hi: f64 },
}

impl ConstraintSpec {
    pub fn validate_params(&self) -> Result<()> {
        match self {
            ConstraintSpec::Spherical { lambda } if *lambda <= 0.0 => Err(
                Error::InvalidParameter(format!("spherical radius must be positive, got {lambda}")),
            ),
            ConstraintSpec::TSpherical { t_exp, lambda } if *t_exp < 1.0 || *lambda <= 0.0 => {
                Err(Error::InvalidParameter(format!(
                    "t-spherical needs t >= 1 and lambda > 0, got t = {t_exp}, lambda = {lambda}"
                )))
            }
            ConstraintSpec::QRung { q, n } if *q < 1.0 || *n < 2 => Err(Error::InvalidParameter(
                format!("q-rung needs q >= 1 and n >= 2, got q = {q}, n = {n}"),
            )),
            ConstraintSpec::Diophantine { c, coefficients } => {
                if *c <= 0.0 {
                    return Err(Error::InvalidParameter(format!(
                        "Diophantine bound must be positive, got {c}"
                    )));
                }
                if coefficients.iter().any(|a| !(0.0..=1.0).contains(a)) {
                    return Err(Error::InvalidParameter(
                        "Diophantine coefficients must lie in [0, 1]".into(),
                    ));
                }
                Ok(())
            }
            ConstraintSpec::Band { lo, hi } if lo >= hi => Err(Error::InvalidParameter(format!(
                "band constraint needs lo < hi, got [{lo}, {hi}]"
            ))),
            ConstraintSpec::Picture { t } if *t < 1 => Err(Error::InvalidParameter(
                "picture constraint needs t >= 1".into(),
            )),
            _ => Ok(()),
        }
    }

    /// Component count the constraint expects, when fixed.
    pub fn arity(&self) -> Option<usize> {
        match self {
            ConstraintSpec::None | ConstraintSpec::Band { .. } => None,
            ConstraintSpec::Ifs => Some(2),
            ConstraintSpec::Neutrosophic
            | ConstraintSpec::Spherical { .. }
            | ConstraintSpec::TSpherical { .. } => Some(3),
            ConstraintSpec::Picture { t } => Some(t + 1),
            ConstraintSpec::QRung { n, .. } => Some(*n),
            ConstraintSpec::Diophantine { coefficients, .. } => Some(coefficients.len()),
        }
    }
}

/// Outcome of a constraint check: the evaluated quantity and its bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstraintReport {
    pub ok: bool,
    pub measured: f64,
    pub bound: f64,
}

/// Evaluate `spec`'s inequality on `deg`. Violations are data (ok = false);
/// only arity mismatches and malformed specs are errors.
pub fn validate_constraint(deg: &DegreeVector, spec: &ConstraintSpec) -> Result<ConstraintReport> {
    spec.validate_params()?;
    if let Some(expected) = spec.arity() {
        if deg.arity() != expected {
            return Err(Error::ArityMismatch {
                expected,
                got: deg.arity(),
            });
        }
    }
    let xs = deg.components();
    let report = match spec {
        ConstraintSpec::None => ConstraintReport {
            ok: true,
            measured: 0.0,
            bound: f64::INFINITY,
        },
        ConstraintSpec::Ifs => {
            let s = xs[0] + xs[1];
            ConstraintReport {
                ok: s <= 1.0 && xs.iter().all(|x| (0.0..=1.0).contains(x)),
                measured: s,
                bound: 1.0,
            }
        }
        ConstraintSpec::Neutrosophic => {
            let s: f64 = xs.iter().sum();
            ConstraintReport {
                ok: s <= 3.0 && xs.iter().all(|x| (0.0..=1.0).contains(x)),
                measured: s,
                bound: 3.0,
            }
        }
        ConstraintSpec::Picture { t } => {
            let in_unit = xs.iter().all(|x| (0.0..=1.0).contains(x));
            if *t == 2 {
                let s: f64 = xs.iter().sum();
                ConstraintReport {
                    ok: in_unit && s <= 1.0,
                    measured: s,
                    bound: 1.0,
                }
            } else {
                let worst = xs.iter().cloned().fold(0.0, f64::max);
                ConstraintReport {
                    ok: in_unit,
                    measured: worst,
                    bound: 1.0,
                }
            }
        }
        ConstraintSpec::Spherical { lambda } => {
            let s: f64 = xs.iter().map(|x| x * x).sum();
            ConstraintReport {
                ok: s <= lambda * lambda && xs.iter().all(|x| *x >= 0.0),
                measured: s,
                bound: lambda * lambda,
            }
        }
        ConstraintSpec::TSpherical { t_exp, lambda } => {
            let s: f64 = xs.iter().map(|x| x.powf(*t_exp)).sum();
            let bound = lambda.powf(*t_exp);
            ConstraintReport {
                ok: s <= bound && xs.iter().all(|x| *x >= 0.0),
                measured: s,
                bound,
            }
        }
        ConstraintSpec::QRung { q, n } => {
            let s: f64 = xs.iter().map(|x| x.powf(*q)).sum();
            let bound = (*n as f64) - 1.0;
            ConstraintReport {
                ok: s <= bound && xs.iter().all(|x| (0.0..=1.0).contains(x)),
                measured: s,
                bound,
            }
        }
        ConstraintSpec::Diophantine { c, coefficients } => {
            let weighted: f64 = coefficients.iter().zip(xs).map(|(a, m)| a * m).sum();
            let param_sum: f64 = coefficients.iter().sum();
            ConstraintReport {
                ok: (0.0..=*c).contains(&weighted) && (0.0..=*c).contains(&param_sum),
                measured: weighted,
                bound: *c,
            }
        }
        ConstraintSpec::Band { lo, hi } => {
            let spill = xs
                .iter()
                .map(|x| (lo - x).max(x - hi).max(0.0))
                .fold(0.0, f64::max);
            ConstraintReport {
                ok: spill == 0.0,
                measured: spill,
                bound: 0.0,
            }
        }
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() < tol
    }

    #[test]
    fn weighted_mean_matches_mpolar_example() {
        // weights (0.60, 0.48, 0) over the pole vector (0.70, 0.20, 0.10)
        let values = vec![
            DegreeVector::scalar(0.70).unwrap(),
            DegreeVector::scalar(0.20).unwrap(),
            DegreeVector::scalar(0.10).unwrap(),
        ];
        let out = weighted_mean(&values, &[0.60, 0.48, 0.0]).unwrap();
        assert!(close(out.get(0), 0.516 / 1.08, 1e-12));
        assert!(close(out.get(0), 0.478, 1e-3));
    }

    #[test]
    fn weighted_mean_zero_weights_gives_zero_vector() {
        let values = vec![
            DegreeVector::new(vec![0.3, 0.9]).unwrap(),
            DegreeVector::new(vec![0.5, 0.1]).unwrap(),
        ];
        let out = weighted_mean(&values, &[0.0, 0.0]).unwrap();
        assert_eq!(out.components(), &[0.0, 0.0]);
    }

    #[test]
    fn weighted_mean_plain_average() {
        let values = vec![
            DegreeVector::scalar(0.2).unwrap(),
            DegreeVector::scalar(0.4).unwrap(),
            DegreeVector::scalar(0.6).unwrap(),
        ];
        let out = weighted_mean(&values, &[1.0, 1.0, 1.0]).unwrap();
        assert!(close(out.get(0), 0.4, 1e-12));
    }

    #[test]
    fn weighted_mean_rejects_bad_shapes() {
        let values = vec![
            DegreeVector::scalar(0.2).unwrap(),
            DegreeVector::new(vec![0.4, 0.5]).unwrap(),
        ];
        assert!(weighted_mean(&values, &[1.0, 1.0]).is_err());
        let values = vec![DegreeVector::scalar(0.2).unwrap()];
        assert!(weighted_mean(&values, &[1.0, 2.0]).is_err());
        assert!(weighted_mean(&values, &[-0.1]).is_err());
    }

    #[test]
    fn interval_mean_shipping_example() {
        // values E/S/X with weights 1 - pCF(., S)
        let values = [
            IntervalDegree::new(0.50, 0.70).unwrap(),
            IntervalDegree::new(0.60, 0.85).unwrap(),
            IntervalDegree::new(0.40, 0.65).unwrap(),
        ];
        let weights = [
            IntervalDegree::new(0.70, 0.80).unwrap(),
            IntervalDegree::new(1.0, 1.0).unwrap(),
            IntervalDegree::new(0.50, 0.70).unwrap(),
        ];
        let out = interval_weighted_mean(&values, &weights).unwrap();
        assert!(close(out.lower, 0.4600, 1e-4));
        assert!(close(out.upper, 0.8477, 1e-4));
        assert!(!out.exceeds_unit);
    }

    #[test]
    fn interval_mean_identity_and_zero_weight() {
        let v = [IntervalDegree::new(0.3, 0.6).unwrap()];
        let w = [IntervalDegree::new(1.0, 1.0).unwrap()];
        let out = interval_weighted_mean(&v, &w).unwrap();
        assert!(close(out.lower, 0.3, 1e-12) && close(out.upper, 0.6, 1e-12));

        let w0 = [IntervalDegree::new(0.0, 0.5).unwrap()];
        assert!(matches!(
            interval_weighted_mean(&v, &w0),
            Err(Error::ZeroLowerWeight)
        ));
    }

    #[test]
    fn shaped_membership_examples() {
        let tri = Shape::triangular(16.0, 22.0, 28.0).unwrap();
        assert!(close(tri.membership(18.0), 1.0 / 3.0, 1e-12));
        assert!(close(tri.membership(22.0), 1.0, 1e-12));
        assert!(close(tri.membership(27.0), 1.0 / 6.0, 1e-12));
        assert_eq!(tri.membership(16.0), 0.0);
        assert_eq!(tri.membership(30.0), 0.0);

        let trap = Shape::trapezoidal(200.0, 400.0, 1200.0, 1600.0).unwrap();
        assert!(close(trap.membership(300.0), 0.5, 1e-12));
        assert_eq!(trap.membership(900.0), 1.0);
        assert!(close(trap.membership(1400.0), 0.5, 1e-12));

        assert!(Shape::triangular(3.0, 2.0, 5.0).is_err());
    }

    #[test]
    fn defuzzifiers() {
        let trap = TrapezoidalNumber::new(0.6, 0.7, 0.9, 1.0).unwrap();
        assert!(close(trap.mean(), 0.8, 1e-12));
        let tri = TriangularNumber::new(0.5, 0.7, 0.9).unwrap();
        assert!(close(tri.centroid(), 0.7, 1e-12));
        let zero = TrapezoidalNumber::new(0.0, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(zero.mean(), 0.0);
    }

    #[test]
    fn constraint_checks() {
        let fermatean = DegreeVector::new(vec![0.88, 0.38]).unwrap();
        let r = validate_constraint(&fermatean, &ConstraintSpec::QRung { q: 3.0, n: 2 }).unwrap();
        assert!(r.ok);
        assert!(close(r.measured, 0.736344, 1e-6));

        let spherical = DegreeVector::new(vec![0.3, 0.8, 0.9]).unwrap();
        let r = validate_constraint(
            &spherical,
            &ConstraintSpec::Spherical {
                lambda: 3f64.sqrt(),
            },
        )
        .unwrap();
        assert!(r.ok);
        assert!(close(r.measured, 1.54, 1e-12));
        assert!(close(r.bound, 3.0, 1e-12));

        let bad_ifs = DegreeVector::new(vec![0.9, 0.2]).unwrap();
        let r = validate_constraint(&bad_ifs, &ConstraintSpec::Ifs).unwrap();
        assert!(!r.ok);
        assert!(close(r.measured, 1.1, 1e-12));

        let wrong_arity = DegreeVector::new(vec![0.5]).unwrap();
        assert!(validate_constraint(&wrong_arity, &ConstraintSpec::Ifs).is_err());
    }

    #[test]
    fn dual_blend_wind_example() {
        let a = DualDegree::new(0.94, 1.0);
        let b = DualDegree::new(0.68, -1.0);
        let out = dual_blend(&a, &b, 0.30).unwrap();
        assert!(close(out.standard, 0.758, 1e-12));
        assert!(close(out.infinitesimal, -0.4, 1e-12));
        assert!(close(standard_part(&out), 0.758, 1e-12));

        let lo = dual_blend(&a, &b, 0.0).unwrap();
        assert_eq!(lo, b);
        let hi = dual_blend(&a, &b, 1.0).unwrap();
        assert_eq!(hi, a);
    }

    #[test]
    fn standard_part_trivia() {
        assert_eq!(standard_part(&DualDegree::new(0.0, 0.0)), 0.0);
        assert_eq!(standard_part(&DualDegree::new(1.0, 3.0)), 1.0);
    }

    #[test]
    fn complex_mean_imaging_example() {
        let values = [
            ComplexDegree::from_polar_deg(0.65, 10.0).unwrap(),
            ComplexDegree::from_polar_deg(0.50, 70.0).unwrap(),
            ComplexDegree::from_polar_deg(0.85, 20.0).unwrap(),
        ];
        let out = complex_weighted_mean(&values, &[0.45, 0.70, 1.0]).unwrap();
        assert!(close(out.modulus(), 0.6420, 1e-3));
        assert!(close(out.argument_deg(), 29.06, 0.05));
    }

    #[test]
    fn complex_zero_has_zero_phase() {
        let z = ComplexDegree::from_rectangular(0.0, 0.0).unwrap();
        assert_eq!(z.argument(), 0.0);
        assert_eq!(z.modulus(), 0.0);
    }

    #[test]
    fn bands_and_offsets() {
        assert!(DegreeVector::new(vec![1.2]).is_err());
        let wide = Band::new(-0.5, 1.5).unwrap();
        let v = DegreeVector::with_band(vec![-0.10, 0.80, 1.40], wide).unwrap();
        assert_eq!(v.arity(), 3);
    }
}

//! Aggregation under algebraic constraints: q-rung orthopair/orthovector,
//! spherical, T-spherical, and linear Diophantine payloads, with checks
//! before and after the contradiction-weighted mean.

use crate::degree::{validate_constraint, ConstraintReport, ConstraintSpec, DegreeVector};
use crate::error::{Error, Result};
use crate::plithogenic::{aggregate_dominant, Payload, PlithogenicBundle};

/// Linear Diophantine payload: membership components, the value's reference
/// parameters, and the shared bound `C`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiophantineEntry {
    pub mu: DegreeVector,
    pub alpha: Vec<f64>,
    pub c: f64,
}

/// Check report: weighted sum, parameter sum, and the residual `C - Σ αᵢμᵢ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiophantineReport {
    pub ok: bool,
    pub weighted_sum: f64,
    pub parameter_sum: f64,
    pub residual: f64,
}

/// Evaluate both Diophantine inequalities and the residual degree.
pub fn diophantine_check(entry: &DiophantineEntry) -> Result<DiophantineReport> {
    if entry.alpha.len() != entry.mu.arity() {
        return Err(Error::ArityMismatch {
            expected: entry.mu.arity(),
            got: entry.alpha.len(),
        });
    }
    if entry.c <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "Diophantine bound must be positive, got {}",
            entry.c
        )));
    }
    for &a in &entry.alpha {
        if !(0.0..=1.0).contains(&a) {
            return Err(Error::OutOfRange {
                context: "Diophantine coefficient",
                value: a,
                lo: 0.0,
                hi: 1.0,
            });
        }
    }
    let weighted_sum: f64 = entry
        .alpha
        .iter()
        .zip(entry.mu.components())
        .map(|(a, m)| a * m)
        .sum();
    let parameter_sum: f64 = entry.alpha.iter().sum();
    let ok = (0.0..=entry.c).contains(&weighted_sum) && (0.0..=entry.c).contains(&parameter_sum);
    Ok(DiophantineReport {
        ok,
        weighted_sum,
        parameter_sum,
        residual: entry.c - weighted_sum,
    })
}

/// Aggregate a constrained bundle and re-validate the output. Every payload
/// must satisfy the bundle's constraint up front; for the convex constraint
/// kinds the post-check then holds automatically.
pub fn constrained_aggregate(
    bundle: &PlithogenicBundle,
    element: &str,
    dominant: &str,
) -> Result<(DegreeVector, ConstraintReport)> {
    let spec = bundle.constraint.as_ref().ok_or_else(|| {
        Error::InvalidParameter("bundle carries no constraint specification".into())
    })?;
    let xi = bundle.universe().index_of(element)?;
    for (v, value) in bundle.attribute.values().iter().enumerate() {
        let payload = bundle.table.get(xi, v).as_vector()?;
        let report = validate_constraint(payload, spec)?;
        if !report.ok {
            return Err(Error::ConstraintViolated(format!(
                "payload at ({element}, {value}) fails the input check: {} > {}",
                report.measured, report.bound
            )));
        }
    }
    let out = match aggregate_dominant(bundle, element, dominant)? {
        Payload::Vector(v) => v,
        _ => {
            return Err(Error::InvalidParameter(
                "constrained aggregation needs vector payloads".into(),
            ))
        }
    };
    let report = validate_constraint(&out, spec)?;
    Ok((out, report))
}

/// Spherical check: sum of squares against `lambda^2` over a triple.
pub fn spherical_validate(deg: &DegreeVector, lambda: f64) -> Result<ConstraintReport> {
    validate_constraint(deg, &ConstraintSpec::Spherical { lambda })
}

/// T-spherical check: sum of t-th powers against `lambda^t` over a triple.
pub fn t_spherical_validate(deg: &DegreeVector, t_exp: f64, lambda: f64) -> Result<ConstraintReport> {
    validate_constraint(deg, &ConstraintSpec::TSpherical { t_exp, lambda })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classic::FiniteUniverse;
    use crate::degree::Band;
    use crate::plithogenic::{
        AppurtenanceTable, AttributeSystem, ContradictionTable, FusionRule, PayloadKind,
    };

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() < tol
    }

    fn index_distance_bundle(
        values: Vec<&str>,
        rows: Vec<Vec<f64>>,
        spec: ConstraintSpec,
    ) -> PlithogenicBundle {
        // pCF(v_i, v_j) = |i - j| / (n - 1)
        let n = values.len();
        let g = (n - 1) as f64;
        let mut matrix = vec![vec![0.0; n]; n];
        for (i, row) in matrix.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (i as f64 - j as f64).abs() / g;
            }
        }
        let arity = rows[0].len() / n;
        let entries = rows
            .into_iter()
            .flat_map(|row| {
                row.chunks(arity)
                    .map(|c| Payload::Vector(DegreeVector::new(c.to_vec()).unwrap()))
                    .collect::<Vec<_>>()
            })
            .collect();
        PlithogenicBundle::new(
            AttributeSystem::new("attr", values).unwrap(),
            AppurtenanceTable::new(
                FiniteUniverse::new(vec!["x"]).unwrap(),
                n,
                PayloadKind::Vector {
                    arity,
                    band: Band::UNIT,
                },
                entries,
            )
            .unwrap(),
            ContradictionTable::from_scalar_matrix(matrix).unwrap(),
            FusionRule::Mean,
            Some(spec),
        )
        .unwrap()
    }

    #[test]
    fn fermatean_triage() {
        // (mu, nu) per severity value; dominant = severe
        let bundle = index_distance_bundle(
            vec!["none", "mild", "moderate", "severe"],
            vec![vec![0.05, 0.98, 0.35, 0.90, 0.70, 0.80, 0.88, 0.38]],
            ConstraintSpec::QRung { q: 3.0, n: 2 },
        );
        let (out, report) = constrained_aggregate(&bundle, "x", "severe").unwrap();
        assert!(close(out.get(0), 0.7317, 1e-3));
        assert!(close(out.get(1), 0.6067, 1e-3));
        assert!(report.ok);
        assert!(close(report.measured, 0.615, 1e-3));
    }

    #[test]
    fn pythagorean_neutrosophic_credit() {
        let bundle = index_distance_bundle(
            vec!["low", "medium", "high"],
            vec![vec![
                0.20, 0.20, 0.90, 0.55, 0.25, 0.55, 0.85, 0.10, 0.35,
            ]],
            ConstraintSpec::QRung { q: 2.0, n: 3 },
        );
        let (out, report) = constrained_aggregate(&bundle, "x", "high").unwrap();
        assert!(close(out.get(0), 0.75, 1e-4));
        assert!(close(out.get(1), 0.15, 1e-4));
        assert!(close(out.get(2), 0.4167, 1e-3));
        assert!(report.ok);
        assert!(close(report.measured, 0.7586, 1e-3));
    }

    #[test]
    fn q4_warranty() {
        let bundle = index_distance_bundle(
            vec!["1yr", "2yr", "3yr"],
            vec![vec![0.20, 0.98, 0.65, 0.60, 0.90, 0.30]],
            ConstraintSpec::QRung { q: 4.0, n: 2 },
        );
        let (out, report) = constrained_aggregate(&bundle, "x", "3yr").unwrap();
        assert!(close(out.get(0), 0.8167, 1e-3));
        assert!(close(out.get(1), 0.4000, 1e-4));
        assert!(report.ok);
    }

    #[test]
    fn input_violation_is_an_error() {
        let bundle = index_distance_bundle(
            vec!["a", "b"],
            vec![vec![0.99, 0.99, 0.10, 0.10]],
            ConstraintSpec::QRung { q: 1.0, n: 2 },
        );
        assert!(constrained_aggregate(&bundle, "x", "b").is_err());
    }

    #[test]
    fn diophantine_smartphone() {
        let entry = DiophantineEntry {
            mu: DegreeVector::new(vec![0.90, 0.05, 0.10]).unwrap(),
            alpha: vec![1.0, 0.5, 0.5],
            c: 2.0,
        };
        let report = diophantine_check(&entry).unwrap();
        assert!(report.ok);
        assert!(close(report.weighted_sum, 0.975, 1e-12));
        assert!(close(report.residual, 1.025, 1e-12));
        assert!(close(report.parameter_sum, 2.0, 1e-12));
    }

    #[test]
    fn diophantine_edges() {
        let zero = DiophantineEntry {
            mu: DegreeVector::new(vec![0.4, 0.6]).unwrap(),
            alpha: vec![0.0, 0.0],
            c: 1.5,
        };
        let report = diophantine_check(&zero).unwrap();
        assert!(report.ok);
        assert_eq!(report.weighted_sum, 0.0);
        assert!(close(report.residual, 1.5, 1e-12));

        let over = DiophantineEntry {
            mu: DegreeVector::new(vec![0.4, 0.6]).unwrap(),
            alpha: vec![0.9, 0.9],
            c: 1.0,
        };
        assert!(!diophantine_check(&over).unwrap().ok);

        let mismatch = DiophantineEntry {
            mu: DegreeVector::new(vec![0.4]).unwrap(),
            alpha: vec![0.9, 0.9],
            c: 1.0,
        };
        assert!(diophantine_check(&mismatch).is_err());
    }

    #[test]
    fn spherical_wrappers() {
        let district = DegreeVector::new(vec![0.10, 0.20, 0.95]).unwrap();
        let r = spherical_validate(&district, 1.0).unwrap();
        assert!(r.ok);
        assert!(close(r.measured, 0.9525, 1e-12));

        let supplier = DegreeVector::new(vec![0.8, 0.3, 0.2]).unwrap();
        let r = t_spherical_validate(&supplier, 3.0, 1.0).unwrap();
        assert!(r.ok);
        assert!(close(r.measured, 0.547, 1e-12));

        let ones = DegreeVector::new(vec![1.0, 1.0, 1.0]).unwrap();
        assert!(!spherical_validate(&ones, 1.0).unwrap().ok);
    }
}

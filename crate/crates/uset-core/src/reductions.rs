//! Generalization theorems as executable maps with round-trip verification,
//! plus the seeded samplers the property checks draw from.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::classic::{FiniteUniverse, GradeKind, GradedSet};
use crate::degree::{Band, ConstraintSpec, DegreeVector};
use crate::error::{Error, Result};
use crate::plithogenic::{
    aggregate_dominant, AppurtenanceTable, AttributeSystem, ContradictionTable, FusionRule,
    Payload, PayloadKind, PlithogenicBundle,
};
use crate::roughsoft::{
    plithogenic_lower, plithogenic_upper, soft_rough_lower, soft_rough_upper, PlithogenicRelation,
    RelationFusion, SoftApproxSpace, SoftCombiner,
};

/// Hesitant fuzzy set: finite nonempty membership set per element.
#[derive(Debug, Clone, PartialEq)]
pub struct HesitantFuzzySet {
    pub universe: Vec<String>,
    pub images: Vec<Vec<f64>>,
}

/// Hesitant plithogenic set on a singleton value set with zero contradiction;
/// the subclass the hesitant bijections land in.
#[derive(Debug, Clone, PartialEq)]
pub struct HesitantPlithogenicSet {
    pub universe: Vec<String>,
    pub value: String,
    pub arity: usize,
    pub images: Vec<Vec<DegreeVector>>,
}

/// Wrap each scalar membership as a 1-component vector on the singleton
/// value set.
pub fn hfs_to_hps(h: &HesitantFuzzySet) -> Result<HesitantPlithogenicSet> {
    let images = h
        .images
        .iter()
        .map(|image| {
            if image.is_empty() {
                return Err(Error::EmptyInput("hesitation image must be nonempty"));
            }
            image
                .iter()
                .map(|&x| DegreeVector::scalar(x))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HesitantPlithogenicSet {
        universe: h.universe.clone(),
        value: "a0".into(),
        arity: 1,
        images,
    })
}

/// Project the 1-component vectors back to scalars.
pub fn hps_to_hfs(h: &HesitantPlithogenicSet) -> Result<HesitantFuzzySet> {
    if h.arity != 1 {
        return Err(Error::ArityMismatch {
            expected: 1,
            got: h.arity,
        });
    }
    let images = h
        .images
        .iter()
        .map(|image| image.iter().map(|v| v.as_scalar()).collect())
        .collect::<Result<Vec<_>>>()?;
    Ok(HesitantFuzzySet {
        universe: h.universe.clone(),
        images,
    })
}

/// Hesitant neutrosophic set: finite nonempty sets of (T, I, F) triples.
#[derive(Debug, Clone, PartialEq)]
pub struct HesitantNeutrosophicSet {
    pub universe: Vec<String>,
    pub images: Vec<Vec<[f64; 3]>>,
}

pub fn hns_to_hps(h: &HesitantNeutrosophicSet) -> Result<HesitantPlithogenicSet> {
    let images = h
        .images
        .iter()
        .map(|image| {
            if image.is_empty() {
                return Err(Error::EmptyInput("hesitation image must be nonempty"));
            }
            image
                .iter()
                .map(|t| DegreeVector::new(t.to_vec()))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HesitantPlithogenicSet {
        universe: h.universe.clone(),
        value: "a0".into(),
        arity: 3,
        images,
    })
}

pub fn hps_to_hns(h: &HesitantPlithogenicSet) -> Result<HesitantNeutrosophicSet> {
    if h.arity != 3 {
        return Err(Error::ArityMismatch {
            expected: 3,
            got: h.arity,
        });
    }
    let images = h
        .images
        .iter()
        .map(|image| {
            image
                .iter()
                .map(|v| {
                    let c = v.components();
                    [c[0], c[1], c[2]]
                })
                .collect()
        })
        .collect();
    Ok(HesitantNeutrosophicSet {
        universe: h.universe.clone(),
        images,
    })
}

/// Spherical fuzzy set: triples with squared sum at most 1.
#[derive(Debug, Clone, PartialEq)]
pub struct SphericalFuzzySet {
    pub universe: Vec<String>,
    pub triples: Vec<[f64; 3]>,
}

/// Spherical neutrosophic set: triples with squared sum at most 3.
#[derive(Debug, Clone, PartialEq)]
pub struct SphericalNeutrosophicSet {
    pub universe: Vec<String>,
    pub triples: Vec<[f64; 3]>,
}

/// Spherical plithogenic set on a singleton value set with zero
/// contradiction, at a fixed radius.
#[derive(Debug, Clone, PartialEq)]
pub struct SphericalPlithogenicSet {
    pub universe: Vec<String>,
    pub value: String,
    pub lambda: f64,
    pub triples: Vec<[f64; 3]>,
}

fn check_spherical(triples: &[[f64; 3]], lambda: f64) -> Result<()> {
    for t in triples {
        let sum: f64 = t.iter().map(|x| x * x).sum();
        if t.iter().any(|x| *x < 0.0) || sum > lambda * lambda + 1e-12 {
            return Err(Error::ConstraintViolated(format!(
                "triple {t:?} violates the spherical bound {}",
                lambda * lambda
            )));
        }
    }
    Ok(())
}

pub fn sfs_to_sps(s: &SphericalFuzzySet) -> Result<SphericalPlithogenicSet> {
    check_spherical(&s.triples, 1.0)?;
    Ok(SphericalPlithogenicSet {
        universe: s.universe.clone(),
        value: "v0".into(),
        lambda: 1.0,
        triples: s.triples.clone(),
    })
}

pub fn sps_to_sfs(s: &SphericalPlithogenicSet) -> Result<SphericalFuzzySet> {
    if (s.lambda - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidParameter(
            "spherical fuzzy projection needs radius 1".into(),
        ));
    }
    check_spherical(&s.triples, 1.0)?;
    Ok(SphericalFuzzySet {
        universe: s.universe.clone(),
        triples: s.triples.clone(),
    })
}

pub fn sns_to_sps(s: &SphericalNeutrosophicSet) -> Result<SphericalPlithogenicSet> {
    let radius = 3f64.sqrt();
    check_spherical(&s.triples, radius)?;
    Ok(SphericalPlithogenicSet {
        universe: s.universe.clone(),
        value: "v0".into(),
        lambda: radius,
        triples: s.triples.clone(),
    })
}

pub fn sps_to_sns(s: &SphericalPlithogenicSet) -> Result<SphericalNeutrosophicSet> {
    let radius = 3f64.sqrt();
    if (s.lambda - radius).abs() > 1e-12 {
        return Err(Error::InvalidParameter(
            "spherical neutrosophic projection needs radius sqrt(3)".into(),
        ));
    }
    check_spherical(&s.triples, radius)?;
    Ok(SphericalNeutrosophicSet {
        universe: s.universe.clone(),
        triples: s.triples.clone(),
    })
}

/// T-spherical reinterpretation at order 2: identical data, every entry
/// re-checked against the quadratic bound.
#[derive(Debug, Clone, PartialEq)]
pub struct TSphericalPlithogenicSet {
    pub universe: Vec<String>,
    pub value: String,
    pub t_exp: f64,
    pub lambda: f64,
    pub triples: Vec<[f64; 3]>,
}

pub fn spherical_to_tspherical(s: &SphericalPlithogenicSet) -> Result<TSphericalPlithogenicSet> {
    for t in &s.triples {
        let sum: f64 = t.iter().map(|x| x.powf(2.0)).sum();
        if sum > s.lambda.powf(2.0) + 1e-12 {
            return Err(Error::ConstraintViolated(format!(
                "triple {t:?} fails the order-2 re-check"
            )));
        }
    }
    Ok(TSphericalPlithogenicSet {
        universe: s.universe.clone(),
        value: s.value.clone(),
        t_exp: 2.0,
        lambda: s.lambda,
        triples: s.triples.clone(),
    })
}

/// Picture fuzzy set: (positive, neutral, negative) with sum at most 1.
#[derive(Debug, Clone, PartialEq)]
pub struct PictureFuzzySet {
    pub universe: Vec<String>,
    /// (mu, eta, nu)
    pub triples: Vec<[f64; 3]>,
}

/// Picture plithogenic set: t main components plus a trailing neutral one.
#[derive(Debug, Clone, PartialEq)]
pub struct PicturePlithogenicSet {
    pub universe: Vec<String>,
    pub t: usize,
    /// entries laid out as (alpha_1..alpha_t, eta)
    pub entries: Vec<Vec<f64>>,
}

/// Case (1): picture fuzzy (mu, eta, nu) becomes t = 2 entries
/// (mu, nu, eta).
pub fn picture_embed_fuzzy(p: &PictureFuzzySet) -> Result<PicturePlithogenicSet> {
    let entries = p
        .triples
        .iter()
        .map(|[mu, eta, nu]| {
            if mu + eta + nu > 1.0 + 1e-12 {
                return Err(Error::ConstraintViolated(format!(
                    "picture triple ({mu}, {eta}, {nu}) sums above 1"
                )));
            }
            Ok(vec![*mu, *nu, *eta])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PicturePlithogenicSet {
        universe: p.universe.clone(),
        t: 2,
        entries,
    })
}

pub fn picture_project_fuzzy(p: &PicturePlithogenicSet) -> Result<PictureFuzzySet> {
    if p.t != 2 {
        return Err(Error::InvalidParameter(
            "picture fuzzy projection needs t = 2".into(),
        ));
    }
    let triples = p
        .entries
        .iter()
        .map(|e| [e[0], e[2], e[1]])
        .collect();
    Ok(PictureFuzzySet {
        universe: p.universe.clone(),
        triples,
    })
}

/// Case (2): picture neutrosophic (T, I, F) becomes t = 3 entries with a
/// zero neutral channel.
pub fn picture_embed_neutrosophic(
    universe: &[String],
    triples: &[[f64; 3]],
) -> Result<PicturePlithogenicSet> {
    let entries = triples
        .iter()
        .map(|[t, i, f]| {
            if t + i + f > 3.0 + 1e-12 {
                return Err(Error::ConstraintViolated(
                    "picture neutrosophic triple sums above 3".into(),
                ));
            }
            Ok(vec![*t, *i, *f, 0.0])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PicturePlithogenicSet {
        universe: universe.to_vec(),
        t: 3,
        entries,
    })
}

pub fn picture_project_neutrosophic(p: &PicturePlithogenicSet) -> Result<Vec<[f64; 3]>> {
    if p.t != 3 {
        return Err(Error::InvalidParameter(
            "picture neutrosophic projection needs t = 3".into(),
        ));
    }
    p.entries
        .iter()
        .map(|e| {
            if e[3] != 0.0 {
                return Err(Error::InvalidParameter(
                    "projection is defined on the zero-neutral subclass".into(),
                ));
            }
            Ok([e[0], e[1], e[2]])
        })
        .collect()
}

/// Case (3): append a zero neutral coordinate to plithogenic vectors; the
/// projection drops it again on the eta = 0 subclass.
pub fn picture_embed_plithogenic(vectors: &[DegreeVector]) -> PicturePlithogenicSet {
    let t = vectors.first().map(|v| v.arity()).unwrap_or(0);
    let entries = vectors
        .iter()
        .map(|v| {
            let mut e = v.components().to_vec();
            e.push(0.0);
            e
        })
        .collect();
    PicturePlithogenicSet {
        universe: (0..vectors.len()).map(|i| format!("x{i}")).collect(),
        t,
        entries,
    }
}

pub fn picture_project_plithogenic(p: &PicturePlithogenicSet) -> Result<Vec<DegreeVector>> {
    p.entries
        .iter()
        .map(|e| {
            let (eta, main) = e.split_last().ok_or(Error::EmptyInput("empty picture entry"))?;
            if *eta != 0.0 {
                return Err(Error::InvalidParameter(
                    "projection is defined on the zero-neutral subclass".into(),
                ));
            }
            DegreeVector::new(main.to_vec())
        })
        .collect()
}

/// Embed a classical graded set as a plithogenic bundle on a singleton value
/// set with zero contradiction; aggregation returns the grade unchanged.
pub fn embed_classical(graded: &GradedSet) -> Result<PlithogenicBundle> {
    let attr = AttributeSystem::new("a", vec!["a0"])?;
    let entries = graded
        .grades()
        .iter()
        .map(|g| Payload::Vector(g.clone()))
        .collect();
    let table = AppurtenanceTable::new(
        graded.universe().clone(),
        1,
        PayloadKind::Vector {
            arity: graded.kind().arity(),
            band: Band::UNIT,
        },
        entries,
    )?;
    PlithogenicBundle::new(
        attr,
        table,
        ContradictionTable::zero(1, 1),
        FusionRule::Mean,
        None,
    )
}

/// Singleton-parameter soft space whose second-projection combiner
/// reproduces the plithogenic rough approximations pointwise.
pub fn rough_as_softrough(rel: &PlithogenicRelation) -> Result<SoftApproxSpace> {
    let universe = rel.universe().clone();
    let mu = vec![DegreeVector::scalar(1.0)?; universe.len()];
    SoftApproxSpace::new(
        universe,
        vec!["e0"],
        mu,
        vec![rel.clone()],
        SoftCombiner::SecondProjection,
    )
}

/// Rebuild a soft space with the first-projection combiner: the soft-rough
/// approximations then reproduce the soft membership for any relations.
pub fn soft_as_softrough(
    universe: FiniteUniverse,
    params: Vec<&str>,
    mu: Vec<DegreeVector>,
    relations: Vec<PlithogenicRelation>,
) -> Result<SoftApproxSpace> {
    SoftApproxSpace::new(universe, params, mu, relations, SoftCombiner::FirstProjection)
}

// ---------------------------------------------------------------------------
// Seeded samplers (rejection from uniform draws).
// ---------------------------------------------------------------------------

pub fn sample_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn sample_hesitation_scalar(rng: &mut ChaCha8Rng) -> Vec<f64> {
    let len = rng.random_range(1..=5);
    (0..len).map(|_| rng.random_range(0.0..=1.0)).collect()
}

pub fn sample_hesitation_triples(rng: &mut ChaCha8Rng) -> Vec<[f64; 3]> {
    let len = rng.random_range(1..=4);
    (0..len)
        .map(|_| {
            [
                rng.random_range(0.0..=1.0),
                rng.random_range(0.0..=1.0),
                rng.random_range(0.0..=1.0),
            ]
        })
        .collect()
}

/// Uniform triple inside the spherical bound, by rejection.
pub fn sample_spherical_triple(rng: &mut ChaCha8Rng, lambda: f64) -> [f64; 3] {
    let cap = lambda.min(1.0);
    loop {
        let t = [
            rng.random_range(0.0..=cap),
            rng.random_range(0.0..=cap),
            rng.random_range(0.0..=cap),
        ];
        if t.iter().map(|x| x * x).sum::<f64>() <= lambda * lambda {
            return t;
        }
    }
}

/// Picture fuzzy triple (mu, eta, nu) with sum at most 1, by rejection.
pub fn sample_picture_triple(rng: &mut ChaCha8Rng) -> [f64; 3] {
    loop {
        let t = [
            rng.random_range(0.0..=1.0),
            rng.random_range(0.0..=1.0),
            rng.random_range(0.0..=1.0),
        ];
        if t.iter().sum::<f64>() <= 1.0 {
            return t;
        }
    }
}

/// Degree vector satisfying the given constraint, by rejection.
pub fn sample_constrained_vector(rng: &mut ChaCha8Rng, spec: &ConstraintSpec) -> DegreeVector {
    let arity = spec.arity().unwrap_or(1);
    loop {
        let xs: Vec<f64> = (0..arity).map(|_| rng.random_range(0.0..=1.0)).collect();
        if let Ok(v) = DegreeVector::new(xs) {
            if let Ok(report) = crate::degree::validate_constraint(&v, spec) {
                if report.ok {
                    return v;
                }
            }
        }
    }
}

/// Random graded set of the given kind.
pub fn sample_graded(rng: &mut ChaCha8Rng, kind: GradeKind, n: usize) -> GradedSet {
    let universe =
        FiniteUniverse::new((0..n).map(|i| format!("x{i}")).collect::<Vec<_>>()).unwrap();
    let spec = match kind {
        GradeKind::Fuzzy => ConstraintSpec::Band { lo: 0.0, hi: 1.0 },
        GradeKind::Intuitionistic => ConstraintSpec::Ifs,
        GradeKind::Neutrosophic => ConstraintSpec::Neutrosophic,
    };
    let grades = (0..n)
        .map(|_| match kind {
            GradeKind::Fuzzy => DegreeVector::scalar(rng.random_range(0.0..=1.0)).unwrap(),
            _ => sample_constrained_vector(rng, &spec),
        })
        .collect();
    GradedSet::new(universe, kind, grades).unwrap()
}

/// Random reflexive symmetric scalar contradiction matrix.
pub fn sample_scalar_contradiction(rng: &mut ChaCha8Rng, n: usize) -> ContradictionTable {
    let mut table = ContradictionTable::zero(n, 1);
    for i in 0..n {
        for j in (i + 1)..n {
            table
                .set_pair(i, j, vec![rng.random_range(0.0..=1.0)])
                .unwrap();
        }
    }
    table
}

/// Random scalar plithogenic relation on a fresh universe.
pub fn sample_relation(rng: &mut ChaCha8Rng, n: usize) -> PlithogenicRelation {
    let universe =
        FiniteUniverse::new((0..n).map(|i| format!("x{i}")).collect::<Vec<_>>()).unwrap();
    let matrix = |rng: &mut ChaCha8Rng| {
        (0..n)
            .map(|_| (0..n).map(|_| rng.random_range(0.0..=1.0)).collect())
            .collect::<Vec<Vec<f64>>>()
    };
    PlithogenicRelation::new(
        universe,
        matrix(rng),
        matrix(rng),
        RelationFusion::PenalizedProduct,
    )
    .unwrap()
}

// ---------------------------------------------------------------------------
// Round-trip and equality checks.
// ---------------------------------------------------------------------------

/// Outcome of one reduction-case run.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
}

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

/// Run all reduction checks on seeded random instances: six exact
/// round-trips plus the t-spherical reinterpretation and the two soft-rough
/// projection equalities.
pub fn run_reduction_checks(seed: u64, cases: usize) -> Vec<ReductionOutcome> {
    let mut out = Vec::new();

    // 1. hesitant fuzzy <-> hesitant plithogenic
    let mut rng = sample_rng(seed);
    let mut failures = 0;
    for _ in 0..cases {
        let n = rng.random_range(1..=4);
        let h = HesitantFuzzySet {
            universe: names(n),
            images: (0..n).map(|_| sample_hesitation_scalar(&mut rng)).collect(),
        };
        let round = hps_to_hfs(&hfs_to_hps(&h).unwrap()).unwrap();
        if round != h {
            failures += 1;
        }
    }
    out.push(ReductionOutcome {
        name: "hesitant-fuzzy",
        cases,
        failures,
    });

    // 2. hesitant neutrosophic <-> hesitant plithogenic
    let mut rng = sample_rng(seed.wrapping_add(1));
    let mut failures = 0;
    for _ in 0..cases {
        let n = rng.random_range(1..=4);
        let h = HesitantNeutrosophicSet {
            universe: names(n),
            images: (0..n)
                .map(|_| sample_hesitation_triples(&mut rng))
                .collect(),
        };
        let round = hps_to_hns(&hns_to_hps(&h).unwrap()).unwrap();
        if round != h {
            failures += 1;
        }
    }
    out.push(ReductionOutcome {
        name: "hesitant-neutrosophic",
        cases,
        failures,
    });

    // 3. spherical fuzzy <-> spherical plithogenic (radius 1)
    let mut rng = sample_rng(seed.wrapping_add(2));
    let mut failures = 0;
    for _ in 0..cases {
        let n = rng.random_range(1..=4);
        let s = SphericalFuzzySet {
            universe: names(n),
            triples: (0..n).map(|_| sample_spherical_triple(&mut rng, 1.0)).collect(),
        };
        let round = sps_to_sfs(&sfs_to_sps(&s).unwrap()).unwrap();
        if round != s {
            failures += 1;
        }
    }
    out.push(ReductionOutcome {
        name: "spherical-fuzzy",
        cases,
        failures,
    });

    // 4. spherical neutrosophic <-> spherical plithogenic (radius sqrt(3))
    let mut rng = sample_rng(seed.wrapping_add(3));
    let mut failures = 0;
    for _ in 0..cases {
        let n = rng.random_range(1..=4);
        let s = SphericalNeutrosophicSet {
            universe: names(n),
            triples: (0..n)
                .map(|_| sample_spherical_triple(&mut rng, 3f64.sqrt()))
                .collect(),
        };
        let round = sps_to_sns(&sns_to_sps(&s).unwrap()).unwrap();
        if round != s {
            failures += 1;
        }
    }
    out.push(ReductionOutcome {
        name: "spherical-neutrosophic",
        cases,
        failures,
    });

    // 5. picture fuzzy <-> picture plithogenic
    let mut rng = sample_rng(seed.wrapping_add(4));
    let mut failures = 0;
    for _ in 0..cases {
        let n = rng.random_range(1..=4);
        let p = PictureFuzzySet {
            universe: names(n),
            triples: (0..n).map(|_| sample_picture_triple(&mut rng)).collect(),
        };
        let round = picture_project_fuzzy(&picture_embed_fuzzy(&p).unwrap()).unwrap();
        if round != p {
            failures += 1;
        }
    }
    out.push(ReductionOutcome {
        name: "picture-fuzzy",
        cases,
        failures,
    });

    // 6. classical graded <-> singleton plithogenic bundle (aggregation
    //    must return the grade bit-for-bit)
    let mut rng = sample_rng(seed.wrapping_add(5));
    let mut failures = 0;
    for i in 0..cases {
        let kind = match i % 3 {
            0 => GradeKind::Fuzzy,
            1 => GradeKind::Intuitionistic,
            _ => GradeKind::Neutrosophic,
        };
        let n = rng.random_range(1..=4);
        let graded = sample_graded(&mut rng, kind, n);
        let bundle = embed_classical(&graded).unwrap();
        for x in graded.universe().elements() {
            let agg = aggregate_dominant(&bundle, x, "a0").unwrap();
            let got = agg.as_vector().unwrap();
            if got.components() != graded.grade(x).unwrap().components() {
                failures += 1;
            }
        }
    }
    out.push(ReductionOutcome {
        name: "classical-embedding",
        cases,
        failures,
    });

    // 7. spherical -> t-spherical at order 2: validity re-check
    let mut rng = sample_rng(seed.wrapping_add(6));
    let mut failures = 0;
    for _ in 0..cases {
        let n = rng.random_range(1..=4);
        let s = SphericalPlithogenicSet {
            universe: names(n),
            value: "v0".into(),
            lambda: 1.0,
            triples: (0..n).map(|_| sample_spherical_triple(&mut rng, 1.0)).collect(),
        };
        let t = spherical_to_tspherical(&s);
        match t {
            Ok(t) if t.t_exp == 2.0 && t.triples == s.triples => {}
            _ => failures += 1,
        }
    }
    out.push(ReductionOutcome {
        name: "spherical-to-t-spherical",
        cases,
        failures,
    });

    // 8. rough-as-soft-rough pointwise equality
    let mut rng = sample_rng(seed.wrapping_add(7));
    let mut failures = 0;
    for _ in 0..cases {
        let n = rng.random_range(2..=5);
        let rel = sample_relation(&mut rng, n);
        let space = rough_as_softrough(&rel).unwrap();
        let universe: Vec<String> = rel.universe().elements().to_vec();
        let k = rng.random_range(1..=n);
        let target: Vec<&str> = universe[..k].iter().map(|s| s.as_str()).collect();
        for x in &universe {
            let lower = plithogenic_lower(&rel, &target, x).unwrap();
            let upper = plithogenic_upper(&rel, x).unwrap();
            let sr_lower = soft_rough_lower(&space, &target, x, "e0").unwrap();
            let sr_upper = soft_rough_upper(&space, &target, x, "e0").unwrap();
            if sr_lower.get(0) != lower || sr_upper.get(0) != upper {
                failures += 1;
            }
        }
    }
    out.push(ReductionOutcome {
        name: "rough-as-soft-rough",
        cases,
        failures,
    });

    // 9. soft-as-soft-rough: first projection returns the membership
    let mut rng = sample_rng(seed.wrapping_add(8));
    let mut failures = 0;
    for _ in 0..cases {
        let n = rng.random_range(2..=4);
        let universe =
            FiniteUniverse::new((0..n).map(|i| format!("x{i}")).collect::<Vec<_>>()).unwrap();
        let params = ["e0", "e1"];
        let mu: Vec<DegreeVector> = (0..n * params.len())
            .map(|_| DegreeVector::scalar(rng.random_range(0.0..=1.0)).unwrap())
            .collect();
        let relations = vec![sample_relation(&mut rng, n), sample_relation(&mut rng, n)];
        let space =
            soft_as_softrough(universe.clone(), params.to_vec(), mu.clone(), relations).unwrap();
        let target: Vec<&str> = universe.elements()[..1].iter().map(|s| s.as_str()).collect();
        for (xi, x) in universe.elements().iter().enumerate() {
            for (ei, e) in params.iter().enumerate() {
                let expect = mu[xi * params.len() + ei].get(0);
                let lower = soft_rough_lower(&space, &target, x, e).unwrap();
                let upper = soft_rough_upper(&space, &target, x, e).unwrap();
                if lower.get(0) != expect || upper.get(0) != expect {
                    failures += 1;
                }
            }
        }
    }
    out.push(ReductionOutcome {
        name: "soft-as-soft-rough",
        cases,
        failures,
    });

    out
}

//! Finite-universe fuzzy, intuitionistic fuzzy, and neutrosophic sets,
//! Pawlak rough approximation, and the soft / hypersoft / superhypersoft
//! query engines.

use std::collections::BTreeSet;

use crate::degree::DegreeVector;
use crate::error::{Error, Result};

/// Ordered, duplicate-free universe of identifiers.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteUniverse {
    elements: Vec<String>,
}

impl FiniteUniverse {
    pub fn new<S: Into<String>>(elements: Vec<S>) -> Result<FiniteUniverse> {
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        if elements.is_empty() {
            return Err(Error::EmptyInput("universe must be nonempty"));
        }
        let mut seen = BTreeSet::new();
        for e in &elements {
            if !seen.insert(e.clone()) {
                return Err(Error::DuplicateIdentifier {
                    kind: "universe element",
                    name: e.clone(),
                });
            }
        }
        Ok(FiniteUniverse { elements })
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, name: &str) -> bool {
        self.elements.iter().any(|e| e == name)
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.elements
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| Error::UnknownIdentifier {
                kind: "universe element",
                name: name.to_string(),
            })
    }

    /// Resolve a list of names into a sorted, deduplicated index set.
    fn index_set(&self, names: &[&str]) -> Result<BTreeSet<usize>> {
        names.iter().map(|n| self.index_of(n)).collect()
    }

    fn names(&self, idx: &BTreeSet<usize>) -> Vec<String> {
        self.elements
            .iter()
            .enumerate()
            .filter(|(i, _)| idx.contains(i))
            .map(|(_, e)| e.clone())
            .collect()
    }
}

/// How many degree components each element of a graded set carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GradeKind {
    Fuzzy,
    Intuitionistic,
    Neutrosophic,
}

impl GradeKind {
    pub fn arity(&self) -> usize {
        match self {
            GradeKind::Fuzzy => 1,
            GradeKind::Intuitionistic => 2,
            GradeKind::Neutrosophic => 3,
        }
    }
}

/// Fuzzy / intuitionistic / neutrosophic set on a finite universe: every
/// element is graded, and the kind's sum constraint holds.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedSet {
    universe: FiniteUniverse,
    kind: GradeKind,
    grades: Vec<DegreeVector>,
}

impl GradedSet {
    pub fn new(
        universe: FiniteUniverse,
        kind: GradeKind,
        grades: Vec<DegreeVector>,
    ) -> Result<GradedSet> {
        if grades.len() != universe.len() {
            return Err(Error::LengthMismatch {
                context: "graded set universe/grades",
                left: universe.len(),
                right: grades.len(),
            });
        }
        for (x, g) in universe.elements().iter().zip(&grades) {
            if g.arity() != kind.arity() {
                return Err(Error::ArityMismatch {
                    expected: kind.arity(),
                    got: g.arity(),
                });
            }
            let sum: f64 = g.components().iter().sum();
            let bound = match kind {
                GradeKind::Fuzzy => 1.0,
                GradeKind::Intuitionistic => 1.0,
                GradeKind::Neutrosophic => 3.0,
            };
            if sum > bound + 1e-12 {
                return Err(Error::ConstraintViolated(format!(
                    "grade of '{x}' sums to {sum}, bound {bound}"
                )));
            }
        }
        Ok(GradedSet {
            universe,
            kind,
            grades,
        })
    }

    pub fn universe(&self) -> &FiniteUniverse {
        &self.universe
    }

    pub fn kind(&self) -> GradeKind {
        self.kind
    }

    pub fn grade(&self, element: &str) -> Result<&DegreeVector> {
        Ok(&self.grades[self.universe.index_of(element)?])
    }

    pub fn grades(&self) -> &[DegreeVector] {
        &self.grades
    }
}

/// Hesitation degree `1 - mu - nu` of an intuitionistic pair.
pub fn hesitation(mu: f64, nu: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&mu) || !(0.0..=1.0).contains(&nu) || mu + nu > 1.0 + 1e-12 {
        return Err(Error::ConstraintViolated(format!(
            "({mu}, {nu}) is not an intuitionistic pair"
        )));
    }
    Ok((1.0 - mu - nu).max(0.0))
}

/// Reduced nonnegative rational, used for exact accuracy/coverage indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Ratio {
        if den == 0 {
            return Ratio { num: 0, den: 0 };
        }
        let g = gcd(num.max(1), den);
        if num == 0 {
            Ratio { num: 0, den: 1 }
        } else {
            Ratio {
                num: num / g,
                den: den / g,
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.den == 0 {
            f64::NAN
        } else {
            self.num as f64 / self.den as f64
        }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Partition of a universe into pairwise disjoint nonempty blocks.
#[derive(Debug, Clone, PartialEq)]
pub struct RoughContext {
    universe: FiniteUniverse,
    blocks: Vec<BTreeSet<usize>>,
}

impl RoughContext {
    pub fn new(universe: FiniteUniverse, blocks: Vec<Vec<&str>>) -> Result<RoughContext> {
        let mut covered = BTreeSet::new();
        let mut idx_blocks = Vec::with_capacity(blocks.len());
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::EmptyInput("partition block must be nonempty"));
            }
            let idx = universe.index_set(block)?;
            if idx.len() != block.len() {
                return Err(Error::DuplicateIdentifier {
                    kind: "block element",
                    name: block.join(","),
                });
            }
            for i in &idx {
                if !covered.insert(*i) {
                    return Err(Error::DuplicateIdentifier {
                        kind: "partition element",
                        name: universe.elements()[*i].clone(),
                    });
                }
            }
            idx_blocks.push(idx);
        }
        if covered.len() != universe.len() {
            return Err(Error::MissingEntry(
                "partition does not cover the universe".into(),
            ));
        }
        Ok(RoughContext {
            universe,
            blocks: idx_blocks,
        })
    }

    pub fn universe(&self) -> &FiniteUniverse {
        &self.universe
    }

    /// Index of the block containing the element.
    pub fn block_of(&self, element_idx: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(&element_idx))
            .expect("partition covers the universe")
    }
}

/// Pawlak rough approximation of a target subset.
#[derive(Debug, Clone, PartialEq)]
pub struct RoughResult {
    pub lower: Vec<String>,
    pub upper: Vec<String>,
    pub boundary: Vec<String>,
    pub positive: Vec<String>,
    pub negative: Vec<String>,
    pub accuracy: Ratio,
    pub coverage: Ratio,
}

/// Lower = union of blocks inside the target; upper = union of blocks that
/// intersect it. Accuracy |lower|/|upper| is 1 when the target is empty.
pub fn rough_approximate(ctx: &RoughContext, target: &[&str]) -> Result<RoughResult> {
    let target_idx = ctx.universe.index_set(target)?;
    let mut lower = BTreeSet::new();
    let mut upper = BTreeSet::new();
    for block in &ctx.blocks {
        if block.is_subset(&target_idx) {
            lower.extend(block.iter().copied());
        }
        if !block.is_disjoint(&target_idx) {
            upper.extend(block.iter().copied());
        }
    }
    let all: BTreeSet<usize> = (0..ctx.universe.len()).collect();
    let boundary: BTreeSet<usize> = upper.difference(&lower).copied().collect();
    let negative: BTreeSet<usize> = all.difference(&upper).copied().collect();
    let accuracy = if upper.is_empty() {
        Ratio::new(1, 1)
    } else {
        Ratio::new(lower.len() as u64, upper.len() as u64)
    };
    let coverage = Ratio::new(lower.len() as u64, ctx.universe.len() as u64);
    Ok(RoughResult {
        positive: ctx.universe.names(&lower),
        lower: ctx.universe.names(&lower),
        upper: ctx.universe.names(&upper),
        boundary: ctx.universe.names(&boundary),
        negative: ctx.universe.names(&negative),
        accuracy,
        coverage,
    })
}

/// Parameterized family of subsets: each parameter maps to the subset of
/// elements satisfying it.
#[derive(Debug, Clone, PartialEq)]
pub struct SoftFamily {
    universe: FiniteUniverse,
    parameters: Vec<String>,
    approximations: Vec<BTreeSet<usize>>,
}

impl SoftFamily {
    pub fn new(
        universe: FiniteUniverse,
        approximations: Vec<(&str, Vec<&str>)>,
    ) -> Result<SoftFamily> {
        let mut parameters = Vec::with_capacity(approximations.len());
        let mut sets = Vec::with_capacity(approximations.len());
        for (param, members) in approximations {
            if parameters.iter().any(|p| p == param) {
                return Err(Error::DuplicateIdentifier {
                    kind: "soft parameter",
                    name: param.to_string(),
                });
            }
            sets.push(universe.index_set(&members)?);
            parameters.push(param.to_string());
        }
        Ok(SoftFamily {
            universe,
            parameters,
            approximations: sets,
        })
    }

    pub fn universe(&self) -> &FiniteUniverse {
        &self.universe
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }
}

/// Conjunctive query: intersection of the parameters' approximations. The
/// empty query returns the whole universe (neutral element of intersection).
pub fn soft_query(family: &SoftFamily, params: &[&str]) -> Result<Vec<String>> {
    let mut acc: BTreeSet<usize> = (0..family.universe.len()).collect();
    for p in params {
        let i = family
            .parameters
            .iter()
            .position(|q| q == p)
            .ok_or_else(|| Error::UnknownIdentifier {
                kind: "soft parameter",
                name: p.to_string(),
            })?;
        acc = acc
            .intersection(&family.approximations[i])
            .copied()
            .collect();
    }
    Ok(family.universe.names(&acc))
}

/// Item profiles over pairwise-disjoint attribute domains; the hypersoft map
/// G is derived from the profiles on demand.
#[derive(Debug, Clone, PartialEq)]
pub struct HypersoftFamily {
    universe: FiniteUniverse,
    attributes: Vec<(String, Vec<String>)>,
    profiles: Vec<Vec<usize>>,
}

/// SuperHypersoft queries run on the same profile data, with value subsets
/// per attribute instead of exact values.
pub type SuperHypersoftFamily = HypersoftFamily;

impl HypersoftFamily {
    pub fn new(
        universe: FiniteUniverse,
        attributes: Vec<(&str, Vec<&str>)>,
        profiles: Vec<(&str, Vec<&str>)>,
    ) -> Result<HypersoftFamily> {
        let mut seen_values = BTreeSet::new();
        let mut attrs = Vec::with_capacity(attributes.len());
        for (name, values) in &attributes {
            if values.is_empty() {
                return Err(Error::EmptyInput("attribute domain must be nonempty"));
            }
            for v in values {
                if !seen_values.insert(v.to_string()) {
                    return Err(Error::DuplicateIdentifier {
                        kind: "attribute value",
                        name: v.to_string(),
                    });
                }
            }
            attrs.push((
                name.to_string(),
                values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            ));
        }
        let mut table = vec![None; universe.len()];
        for (element, profile) in profiles {
            let x = universe.index_of(element)?;
            if profile.len() != attrs.len() {
                return Err(Error::LengthMismatch {
                    context: "item profile arity",
                    left: attrs.len(),
                    right: profile.len(),
                });
            }
            let mut idx_profile = Vec::with_capacity(profile.len());
            for (i, v) in profile.iter().enumerate() {
                let vi = attrs[i]
                    .1
                    .iter()
                    .position(|w| w == v)
                    .ok_or_else(|| Error::UnknownIdentifier {
                        kind: "attribute value",
                        name: v.to_string(),
                    })?;
                idx_profile.push(vi);
            }
            table[x] = Some(idx_profile);
        }
        let profiles = table
            .into_iter()
            .enumerate()
            .map(|(x, p)| {
                p.ok_or_else(|| {
                    Error::MissingEntry(format!("no profile for '{}'", universe.elements()[x]))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(HypersoftFamily {
            universe,
            attributes: attrs,
            profiles,
        })
    }

    pub fn universe(&self) -> &FiniteUniverse {
        &self.universe
    }

    pub fn attribute_count(&self) -> usize {
        self.attributes.len()
    }

    pub fn attribute_values(&self, i: usize) -> &[String] {
        &self.attributes[i].1
    }

    fn value_index(&self, attribute: usize, value: &str) -> Result<usize> {
        self.attributes[attribute]
            .1
            .iter()
            .position(|w| w == value)
            .ok_or_else(|| Error::UnknownIdentifier {
                kind: "attribute value",
                name: value.to_string(),
            })
    }
}

/// Elements whose profile equals the tuple exactly.
pub fn hypersoft_query(family: &HypersoftFamily, tuple: &[&str]) -> Result<Vec<String>> {
    if tuple.len() != family.attributes.len() {
        return Err(Error::LengthMismatch {
            context: "hypersoft query arity",
            left: family.attributes.len(),
            right: tuple.len(),
        });
    }
    let mut wanted = Vec::with_capacity(tuple.len());
    for (i, v) in tuple.iter().enumerate() {
        wanted.push(family.value_index(i, v)?);
    }
    let hits: BTreeSet<usize> = family
        .profiles
        .iter()
        .enumerate()
        .filter(|(_, p)| **p == wanted)
        .map(|(x, _)| x)
        .collect();
    Ok(family.universe.names(&hits))
}

/// Elements whose profile coordinate lies in the chosen subset for every
/// attribute.
pub fn superhypersoft_query(
    family: &SuperHypersoftFamily,
    subsets: &[Vec<&str>],
) -> Result<Vec<String>> {
    if subsets.len() != family.attributes.len() {
        return Err(Error::LengthMismatch {
            context: "superhypersoft query arity",
            left: family.attributes.len(),
            right: subsets.len(),
        });
    }
    let mut wanted: Vec<BTreeSet<usize>> = Vec::with_capacity(subsets.len());
    for (i, subset) in subsets.iter().enumerate() {
        let mut s = BTreeSet::new();
        for v in subset {
            s.insert(family.value_index(i, v)?);
        }
        wanted.push(s);
    }
    let hits: BTreeSet<usize> = family
        .profiles
        .iter()
        .enumerate()
        .filter(|(_, p)| p.iter().zip(&wanted).all(|(v, s)| s.contains(v)))
        .map(|(x, _)| x)
        .collect();
    Ok(family.universe.names(&hits))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(names: &[&str]) -> FiniteUniverse {
        FiniteUniverse::new(names.to_vec()).unwrap()
    }

    #[test]
    fn hesitation_examples() {
        assert!((hesitation(0.85, 0.05).unwrap() - 0.10).abs() < 1e-12);
        assert!((hesitation(0.5, 0.5).unwrap()).abs() < 1e-12);
        assert!((hesitation(0.70, 0.10).unwrap() - 0.20).abs() < 1e-12);
        assert!(hesitation(0.9, 0.2).is_err());
    }

    #[test]
    fn spam_filter_rough_example() {
        let ctx = RoughContext::new(
            u(&["e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8", "e9", "e10"]),
            vec![
                vec!["e1", "e2"],
                vec!["e3", "e4", "e5"],
                vec!["e6", "e7"],
                vec!["e8", "e9", "e10"],
            ],
        )
        .unwrap();
        let r = rough_approximate(&ctx, &["e1", "e2", "e3", "e6", "e7"]).unwrap();
        assert_eq!(r.lower, vec!["e1", "e2", "e6", "e7"]);
        assert_eq!(r.upper, vec!["e1", "e2", "e3", "e4", "e5", "e6", "e7"]);
        assert_eq!(r.boundary, vec!["e3", "e4", "e5"]);
        assert_eq!(r.negative, vec!["e8", "e9", "e10"]);
        assert_eq!(r.accuracy, Ratio::new(4, 7));
        assert_eq!(r.coverage, Ratio::new(2, 5));
    }

    #[test]
    fn factory_rough_example() {
        let ctx = RoughContext::new(
            u(&[
                "p1", "p2", "p3", "p4", "p5", "p6", "p7", "p8", "p9", "p10", "p11", "p12",
            ]),
            vec![
                vec!["p1", "p2", "p3"],
                vec!["p4", "p5"],
                vec!["p6", "p7", "p8"],
                vec!["p9", "p10", "p11", "p12"],
            ],
        )
        .unwrap();
        let r = rough_approximate(&ctx, &["p1", "p2", "p3", "p4", "p9"]).unwrap();
        assert_eq!(r.accuracy, Ratio::new(1, 3));
        assert_eq!(r.coverage, Ratio::new(1, 4));
    }

    #[test]
    fn exact_target_is_crisp() {
        let ctx = RoughContext::new(
            u(&["a", "b", "c", "d"]),
            vec![vec!["a", "b"], vec!["c"], vec!["d"]],
        )
        .unwrap();
        let r = rough_approximate(&ctx, &["a", "b", "c"]).unwrap();
        assert_eq!(r.lower, r.upper);
        assert_eq!(r.accuracy, Ratio::new(1, 1));
    }

    #[test]
    fn empty_target_is_vacuously_exact() {
        let ctx = RoughContext::new(
            u(&["a", "b"]),
            vec![vec!["a"], vec!["b"]],
        )
        .unwrap();
        let r = rough_approximate(&ctx, &[]).unwrap();
        assert!(r.lower.is_empty() && r.upper.is_empty());
        assert_eq!(r.accuracy, Ratio::new(1, 1));
        assert_eq!(r.coverage.to_f64(), 0.0);
    }

    #[test]
    fn apartment_soft_query() {
        let family = SoftFamily::new(
            u(&["A1", "A2", "A3", "A4"]),
            vec![
                ("near_station", vec!["A1", "A3", "A4"]),
                ("pet_friendly", vec!["A2", "A3"]),
                ("under_120k", vec!["A1", "A2"]),
                ("twoLDK_or_more", vec!["A1", "A4"]),
                ("built_after_2015", vec!["A3", "A4"]),
            ],
        )
        .unwrap();
        assert_eq!(
            soft_query(&family, &["near_station", "pet_friendly"]).unwrap(),
            vec!["A3"]
        );
        assert_eq!(
            soft_query(&family, &[]).unwrap(),
            vec!["A1", "A2", "A3", "A4"]
        );
        assert!(soft_query(&family, &["garden"]).is_err());
    }

    #[test]
    fn laptop_soft_query_empties() {
        let family = SoftFamily::new(
            u(&["L1", "L2", "L3", "L4"]),
            vec![
                ("lightweight", vec!["L1", "L3"]),
                ("long_battery", vec!["L1", "L2", "L4"]),
                ("budget", vec!["L2", "L3"]),
                ("ram16GB", vec!["L1", "L4"]),
                ("screen14in", vec!["L1", "L3", "L4"]),
            ],
        )
        .unwrap();
        assert_eq!(
            soft_query(&family, &["budget", "screen14in"]).unwrap(),
            vec!["L3"]
        );
        assert!(soft_query(&family, &["budget", "screen14in", "long_battery"])
            .unwrap()
            .is_empty());
    }

    fn laptop_profiles() -> HypersoftFamily {
        HypersoftFamily::new(
            u(&["L1", "L2", "L3", "L4", "L5", "L6"]),
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
        .unwrap()
    }

    #[test]
    fn laptop_hypersoft_queries() {
        let family = laptop_profiles();
        assert_eq!(
            hypersoft_query(&family, &["i7", "16", "512"]).unwrap(),
            vec!["L5"]
        );
        assert_eq!(
            hypersoft_query(&family, &["i5", "8", "512"]).unwrap(),
            vec!["L6"]
        );
        assert!(hypersoft_query(&family, &["i5", "16", "256"])
            .unwrap()
            .is_empty());
        assert!(hypersoft_query(&family, &["m1", "16", "256"]).is_err());
    }

    #[test]
    fn travel_superhypersoft_queries() {
        let family = HypersoftFamily::new(
            u(&["p1", "p2", "p3", "p4", "p5"]),
            vec![
                ("season", vec!["Spring", "Summer", "Autumn", "Winter"]),
                ("budget", vec!["Low", "Mid", "High"]),
                ("type", vec!["Solo", "Family", "Business"]),
            ],
            vec![
                ("p1", vec!["Summer", "High", "Family"]),
                ("p2", vec!["Winter", "Mid", "Family"]),
                ("p3", vec!["Autumn", "Mid", "Solo"]),
                ("p4", vec!["Autumn", "High", "Business"]),
                ("p5", vec!["Spring", "Low", "Solo"]),
            ],
        )
        .unwrap();
        assert_eq!(
            superhypersoft_query(
                &family,
                &[
                    vec!["Summer", "Autumn"],
                    vec!["High"],
                    vec!["Family", "Business"]
                ]
            )
            .unwrap(),
            vec!["p1", "p4"]
        );
        assert_eq!(
            superhypersoft_query(&family, &[vec!["Winter"], vec!["Mid"], vec!["Family"]]).unwrap(),
            vec!["p2"]
        );
        assert_eq!(
            superhypersoft_query(
                &family,
                &[vec!["Spring", "Autumn"], vec!["Low", "Mid"], vec!["Solo"]]
            )
            .unwrap(),
            vec!["p3", "p5"]
        );
        // full value sets give back everything
        let all = superhypersoft_query(
            &family,
            &[
                vec!["Spring", "Summer", "Autumn", "Winter"],
                vec!["Low", "Mid", "High"],
                vec!["Solo", "Family", "Business"],
            ],
        )
        .unwrap();
        assert_eq!(all.len(), 5);
    }

    #[test]
    fn graded_set_checks_constraints() {
        let ok = GradedSet::new(
            u(&["x"]),
            GradeKind::Intuitionistic,
            vec![DegreeVector::new(vec![0.6, 0.3]).unwrap()],
        );
        assert!(ok.is_ok());
        let bad = GradedSet::new(
            u(&["x"]),
            GradeKind::Intuitionistic,
            vec![DegreeVector::new(vec![0.9, 0.2]).unwrap()],
        );
        assert!(bad.is_err());
    }
}

//! Corpus cases 2.1 through 2.5: membership shapes, intuitionistic pairs,
//! neutrosophic scoring, Pawlak rough approximation, and the soft-family
//! query engines.

use super::{join_names, Ledger, EXACT_TOL, PRINT_TOL};

use uset_core::classic::{
    hesitation, hypersoft_query, rough_approximate, soft_query, superhypersoft_query,
    FiniteUniverse, GradeKind, GradedSet, HypersoftFamily, RoughContext, SoftFamily,
};
use uset_core::degree::{DegreeVector, Shape};
use uset_core::plithogenic::aggregate_dominant;
use uset_core::reductions::embed_classical;

pub fn cases(ledger: &mut Ledger) {
    comfortable_temperature(ledger);
    premium_customer(ledger);
    cardiovascular_risk(ledger);
    customer_satisfaction(ledger);
    influenza(ledger);
    shipment_eta(ledger);
    spam_filter(ledger);
    factory_quality(ledger);
    apartments(ledger);
    laptops_soft(ledger);
    laptops_hypersoft(ledger);
    travel_packages(ledger);
}

fn comfortable_temperature(ledger: &mut Ledger) {
    let shape = Shape::triangular(16.0, 22.0, 28.0).unwrap();
    ledger.check(
        "2.1.2:membership",
        vec![
            shape.membership(18.0),
            shape.membership(22.0),
            shape.membership(27.0),
        ],
        vec![1.0 / 3.0, 1.0, 1.0 / 6.0],
        EXACT_TOL,
        "triangular comfort memberships at 18, 22, 27 degrees",
    );
}

fn premium_customer(ledger: &mut Ledger) {
    let shape = Shape::trapezoidal(200.0, 400.0, 1200.0, 1600.0).unwrap();
    ledger.check(
        "2.1.3:membership",
        vec![
            shape.membership(300.0),
            shape.membership(900.0),
            shape.membership(1400.0),
        ],
        vec![0.5, 1.0, 0.5],
        EXACT_TOL,
        "trapezoidal premium memberships at 300, 900, 1400 USD",
    );
}

fn cardiovascular_risk(ledger: &mut Ledger) {
    let pairs = [(0.85, 0.05), (0.60, 0.20), (0.30, 0.40), (0.10, 0.70)];
    let graded = GradedSet::new(
        FiniteUniverse::new(vec!["p1", "p2", "p3", "p4"]).unwrap(),
        GradeKind::Intuitionistic,
        pairs
            .iter()
            .map(|&(m, n)| DegreeVector::new(vec![m, n]).unwrap())
            .collect(),
    );
    ledger.check_ok("2.2.2:valid", graded.is_ok(), "all pairs satisfy mu + nu <= 1");
    let hesitations: Vec<f64> = pairs
        .iter()
        .map(|&(m, n)| hesitation(m, n).unwrap())
        .collect();
    ledger.check(
        "2.2.2:hesitation",
        hesitations,
        vec![0.10, 0.20, 0.30, 0.20],
        EXACT_TOL,
        "hesitation margins 1 - mu - nu (printed sums 0.90/0.80/0.70/0.80)",
    );
}

fn customer_satisfaction(ledger: &mut Ledger) {
    let pairs = [(0.70, 0.10), (0.40, 0.30), (0.20, 0.60)];
    let hesitations: Vec<f64> = pairs
        .iter()
        .map(|&(m, n)| hesitation(m, n).unwrap())
        .collect();
    ledger.check(
        "2.2.3:hesitation",
        hesitations,
        vec![0.20, 0.30, 0.20],
        EXACT_TOL,
        "service hesitation margins (printed sums 0.80/0.70/0.80)",
    );
}

/// The influenza and ETA scoring formulas are bespoke to their examples and
/// live only here in the corpus.
fn influenza_score(temp_c: f64, antigen: f64, cough: f64) -> (f64, f64, f64) {
    let t = (0.5 * antigen + 0.3 * ((temp_c - 37.0) / 2.0).max(0.0) + 0.2 * cough).min(1.0);
    let f = (0.6 * (1.0 - antigen) + 0.4 * ((37.0 - temp_c) / 2.0).max(0.0)).min(1.0);
    let i = (1.0 - (2.0 * antigen - 1.0).abs()) * (1.0 - ((temp_c - 37.0).abs() / 1.5).min(1.0));
    (t, i, f)
}

fn influenza(ledger: &mut Ledger) {
    let (t, i, f) = influenza_score(38.2, 0.7, 0.6);
    ledger.check(
        "2.3.2:triple",
        vec![t, i, f],
        vec![0.65, 0.12, 0.18],
        EXACT_TOL,
        "influenza (T, I, F) from the fever/antigen/cough formula",
    );
    // the triple embeds as a singleton plithogenic bundle and aggregates to
    // itself
    let graded = GradedSet::new(
        FiniteUniverse::new(vec!["x"]).unwrap(),
        GradeKind::Neutrosophic,
        vec![DegreeVector::new(vec![t, i, f]).unwrap()],
    )
    .unwrap();
    let bundle = embed_classical(&graded).unwrap();
    let agg = aggregate_dominant(&bundle, "x", "a0").unwrap();
    ledger.check(
        "2.3.2:embedding",
        agg.as_vector().unwrap().components().to_vec(),
        vec![t, i, f],
        0.0,
        "classical embedding returns the grade unchanged",
    );
}

fn shipment_eta(ledger: &mut Ledger) {
    let (r, mu, s, u) = (0.85, 1.8, 2.0, 0.25);
    let g: f64 = s / (s + mu);
    let t = (0.6 * r + 0.4 * g).min(1.0);
    let f = (0.6 * (1.0 - r) + 0.4 * (1.0 - g)).min(1.0);
    ledger.check(
        "2.3.3:triple",
        vec![t, u, f],
        vec![0.7205, 0.25, 0.2795],
        PRINT_TOL,
        "on-time arrival (T, I, F) with g = 2.0/3.8",
    );
}

fn spam_filter(ledger: &mut Ledger) {
    let ctx = RoughContext::new(
        FiniteUniverse::new(vec![
            "e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8", "e9", "e10",
        ])
        .unwrap(),
        vec![
            vec!["e1", "e2"],
            vec!["e3", "e4", "e5"],
            vec!["e6", "e7"],
            vec!["e8", "e9", "e10"],
        ],
    )
    .unwrap();
    let r = rough_approximate(&ctx, &["e1", "e2", "e3", "e6", "e7"]).unwrap();
    ledger.check_text(
        "2.4.2:lower",
        join_names(&r.lower),
        "e1 e2 e6 e7".into(),
        "certainly-spam region",
    );
    ledger.check_text(
        "2.4.2:upper",
        join_names(&r.upper),
        "e1 e2 e3 e4 e5 e6 e7".into(),
        "possibly-spam region",
    );
    ledger.check_text(
        "2.4.2:boundary",
        join_names(&r.boundary),
        "e3 e4 e5".into(),
        "ambiguous region",
    );
    ledger.check_text(
        "2.4.2:negative",
        join_names(&r.negative),
        "e8 e9 e10".into(),
        "certainly-not-spam region",
    );
    ledger.check_ratio(
        "2.4.2:accuracy",
        (r.accuracy.num(), r.accuracy.den()),
        (4, 7),
        "Pawlak accuracy |lower| / |upper|",
    );
    ledger.check_ratio(
        "2.4.2:coverage",
        (r.coverage.num(), r.coverage.den()),
        (2, 5),
        "coverage |lower| / |universe| = 4/10",
    );
}

fn factory_quality(ledger: &mut Ledger) {
    let ctx = RoughContext::new(
        FiniteUniverse::new(vec![
            "p1", "p2", "p3", "p4", "p5", "p6", "p7", "p8", "p9", "p10", "p11", "p12",
        ])
        .unwrap(),
        vec![
            vec!["p1", "p2", "p3"],
            vec!["p4", "p5"],
            vec!["p6", "p7", "p8"],
            vec!["p9", "p10", "p11", "p12"],
        ],
    )
    .unwrap();
    let r = rough_approximate(&ctx, &["p1", "p2", "p3", "p4", "p9"]).unwrap();
    ledger.check_ratio(
        "2.4.3:accuracy",
        (r.accuracy.num(), r.accuracy.den()),
        (1, 3),
        "defective-item accuracy",
    );
    ledger.check_ratio(
        "2.4.3:coverage",
        (r.coverage.num(), r.coverage.den()),
        (1, 4),
        "defective-item coverage",
    );
}

pub(crate) fn apartment_family() -> SoftFamily {
    SoftFamily::new(
        FiniteUniverse::new(vec!["A1", "A2", "A3", "A4"]).unwrap(),
        vec![
            ("near_station", vec!["A1", "A3", "A4"]),
            ("pet_friendly", vec!["A2", "A3"]),
            ("under_120k", vec!["A1", "A2"]),
            ("twoLDK_or_more", vec!["A1", "A4"]),
            ("built_after_2015", vec!["A3", "A4"]),
        ],
    )
    .unwrap()
}

fn apartments(ledger: &mut Ledger) {
    let family = apartment_family();
    let hit = soft_query(&family, &["near_station", "pet_friendly"]).unwrap();
    ledger.check_text(
        "2.5.2:query",
        join_names(&hit),
        "A3".into(),
        "near_station AND pet_friendly",
    );
}

pub(crate) fn laptop_soft_family() -> SoftFamily {
    SoftFamily::new(
        FiniteUniverse::new(vec!["L1", "L2", "L3", "L4"]).unwrap(),
        vec![
            ("lightweight", vec!["L1", "L3"]),
            ("long_battery", vec!["L1", "L2", "L4"]),
            ("budget", vec!["L2", "L3"]),
            ("ram16GB", vec!["L1", "L4"]),
            ("screen14in", vec!["L1", "L3", "L4"]),
        ],
    )
    .unwrap()
}

fn laptops_soft(ledger: &mut Ledger) {
    let family = laptop_soft_family();
    let two = soft_query(&family, &["budget", "screen14in"]).unwrap();
    ledger.check_text("2.5.3:two", join_names(&two), "L3".into(), "budget AND screen14in");
    let three = soft_query(&family, &["budget", "screen14in", "long_battery"]).unwrap();
    ledger.check_text(
        "2.5.3:three",
        join_names(&three),
        String::new(),
        "adding long_battery empties the query",
    );
}

pub(crate) fn laptop_profiles() -> HypersoftFamily {
    HypersoftFamily::new(
        FiniteUniverse::new(vec!["L1", "L2", "L3", "L4", "L5", "L6"]).unwrap(),
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

fn laptops_hypersoft(ledger: &mut Ledger) {
    let family = laptop_profiles();
    let top = hypersoft_query(&family, &["i7", "16", "512"]).unwrap();
    ledger.check_text("2.5.5:i7_16_512", join_names(&top), "L5".into(), "exact profile match");
    let mid = hypersoft_query(&family, &["i5", "8", "512"]).unwrap();
    ledger.check_text("2.5.5:i5_8_512", join_names(&mid), "L6".into(), "exact profile match");
    let none = hypersoft_query(&family, &["i5", "16", "256"]).unwrap();
    ledger.check_text(
        "2.5.5:i5_16_256",
        join_names(&none),
        String::new(),
        "no laptop matches",
    );
}

pub(crate) fn travel_family() -> HypersoftFamily {
    HypersoftFamily::new(
        FiniteUniverse::new(vec!["p1", "p2", "p3", "p4", "p5"]).unwrap(),
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
    .unwrap()
}

fn travel_packages(ledger: &mut Ledger) {
    let family = travel_family();
    let q1 = superhypersoft_query(
        &family,
        &[
            vec!["Summer", "Autumn"],
            vec!["High"],
            vec!["Family", "Business"],
        ],
    )
    .unwrap();
    ledger.check_text("2.5.7:q1", join_names(&q1), "p1 p4".into(), "subset-valued filter");
    let q2 = superhypersoft_query(&family, &[vec!["Winter"], vec!["Mid"], vec!["Family"]]).unwrap();
    ledger.check_text("2.5.7:q2", join_names(&q2), "p2".into(), "singleton filter");
    let q3 = superhypersoft_query(
        &family,
        &[vec!["Spring", "Autumn"], vec!["Low", "Mid"], vec!["Solo"]],
    )
    .unwrap();
    ledger.check_text("2.5.7:q3", join_names(&q3), "p3 p5".into(), "subset-valued filter");
}

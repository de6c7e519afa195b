//! Interval-valued aggregation, offsets, cubic degrees, the superhypersoft
//! selection rules, and hesitant payload handling.

use super::{scalar_bundle, vector_bundle, Ledger, EXACT_TOL, PRINT_TOL, ROUNDING_TOL};

use uset_core::degree::{interval_weighted_mean, Band, DegreeVector, IntervalDegree};
use uset_core::plithogenic::{aggregate_dominant, classify_band, ContradictionTable};
use uset_core::roughsoft::{
    pshss_fuzzy_aggregate, pshss_intuitionistic_aggregate, pshss_score_neutrosophic, pshss_weight,
    subset_lift, GammaComponent, PshssAttribute,
};
use uset_core::variants::{
    cubic_aggregate, hesitant_reduce, CubicDegree, HesitationSet, ReduceStrategy,
};

pub fn cases(ledger: &mut Ledger) {
    shipping_intervals(ledger);
    hiring_intervals(ledger);
    irrigation_intervals(ledger);
    credit_offset(ledger);
    triage_offset(ledger);
    dispatch_offset(ledger);
    targeting_cubic(ledger);
    scholarship_cubic(ledger);
    bike_station_cubic(ledger);
    bed_allocation_pshss(ledger);
    assortment_pshss(ledger);
    timetabling_pshss(ledger);
    triage_hesitant(ledger);
    supplier_hesitant(ledger);
}

fn iv(lo: f64, hi: f64) -> IntervalDegree {
    IntervalDegree::new(lo, hi).unwrap()
}

fn shipping_intervals(ledger: &mut Ledger) {
    let values = [iv(0.50, 0.70), iv(0.60, 0.85), iv(0.40, 0.65)];
    let weights = [iv(0.70, 0.80), iv(1.0, 1.0), iv(0.50, 0.70)];
    let out = interval_weighted_mean(&values, &weights).unwrap();
    ledger.check(
        "3.9.2:interval",
        vec![out.lower, out.upper],
        vec![0.4600, 0.8477],
        PRINT_TOL,
        "standard-relative suitability [1.15/2.50, 1.865/2.20]",
    );
    ledger.check_ok("3.9.2:in_unit", !out.exceeds_unit, "quotient stays inside [0, 1]");
}

fn hiring_intervals(ledger: &mut Ledger) {
    let weights = [iv(0.30, 0.50), iv(0.70, 0.80), iv(1.0, 1.0)];
    let mu = interval_weighted_mean(
        &[iv(0.55, 0.75), iv(0.65, 0.80), iv(0.50, 0.65)],
        &weights,
    )
    .unwrap();
    ledger.check(
        "3.9.3:mu",
        vec![mu.lower, mu.upper],
        vec![0.4870, 0.8325],
        PRINT_TOL,
        "membership interval under permanent-contract dominance",
    );
    let nu = interval_weighted_mean(
        &[iv(0.10, 0.25), iv(0.10, 0.20), iv(0.20, 0.35)],
        &weights,
    )
    .unwrap();
    ledger.check(
        "3.9.3:nu",
        vec![nu.lower, nu.upper],
        vec![0.1304, 0.3175],
        PRINT_TOL,
        "nonmembership interval",
    );
}

fn irrigation_intervals(ledger: &mut Ledger) {
    let weights = [iv(0.80, 0.90), iv(1.0, 1.0), iv(0.50, 0.70)];
    let t = interval_weighted_mean(
        &[iv(0.60, 0.80), iv(0.70, 0.90), iv(0.40, 0.60)],
        &weights,
    )
    .unwrap();
    let i = interval_weighted_mean(
        &[iv(0.10, 0.25), iv(0.05, 0.15), iv(0.20, 0.30)],
        &weights,
    )
    .unwrap();
    let f = interval_weighted_mean(
        &[iv(0.10, 0.20), iv(0.05, 0.10), iv(0.25, 0.40)],
        &weights,
    )
    .unwrap();
    ledger.check(
        "3.9.4:bounds",
        vec![t.lower, t.upper, i.lower, i.upper, f.lower, f.upper],
        vec![0.5308, 0.8869, 0.0885, 0.2543, 0.0981, 0.2435],
        PRINT_TOL,
        "all six neutrosophic interval bounds under the balanced policy",
    );
}

fn credit_offset(ledger: &mut Ledger) {
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
    ledger.check_text(
        "3.10.2:band",
        classify_band(&bundle).to_string(),
        "offset".into(),
        "entries below 0 and above 1",
    );
    let out = aggregate_dominant(&bundle, "cust", "High").unwrap();
    ledger.check(
        "3.10.2:aggregate",
        vec![out.as_vector().unwrap().get(0)],
        vec![1.0514],
        PRINT_TOL,
        "over-membership aggregate 1.945/1.85",
    );
}

fn triage_offset(ledger: &mut Ledger) {
    let band = Band::new(-0.5, 1.5).unwrap();
    let bundle = vector_bundle(
        vec!["pt"],
        vec!["Immediate", "Urgent", "Routine"],
        vec![
            vec![0.0, 0.20, 0.0],
            vec![0.20, 0.0, 0.60],
            vec![0.0, 0.60, 0.0],
        ],
        vec![vec![
            vec![-0.10, 1.05],
            vec![1.10, 0.00],
            vec![0.20, 0.95],
        ]],
        band,
    );
    let out = aggregate_dominant(&bundle, "pt", "Urgent").unwrap();
    ledger.check(
        "3.10.3:aggregate",
        out.as_vector().unwrap().components().to_vec(),
        vec![0.50, 0.5545],
        PRINT_TOL,
        "intuitionistic offset pair toward Urgent",
    );
}

fn dispatch_offset(ledger: &mut Ledger) {
    let band = Band::new(-0.5, 1.5).unwrap();
    let bundle = vector_bundle(
        vec!["hour"],
        vec!["Coal", "Gas", "Solar"],
        vec![
            vec![0.0, 0.0, 0.85],
            vec![0.0, 0.0, 0.40],
            vec![0.85, 0.40, 0.0],
        ],
        vec![vec![
            vec![-0.20, 0.10, 1.15],
            vec![0.80, 0.20, 0.20],
            vec![1.30, -0.05, 0.00],
        ]],
        band,
    );
    let out = aggregate_dominant(&bundle, "hour", "Solar").unwrap();
    ledger.check(
        "3.10.4:aggregate",
        out.as_vector().unwrap().components().to_vec(),
        vec![1.00, 0.0486, 0.1671],
        PRINT_TOL,
        "neutrosophic offset triple under solar dominance",
    );
}

fn targeting_cubic(ledger: &mut Ledger) {
    let values = vec![
        CubicDegree::new(vec![iv(0.30, 0.55)], DegreeVector::scalar(0.50).unwrap()).unwrap(),
        CubicDegree::new(vec![iv(0.60, 0.80)], DegreeVector::scalar(0.70).unwrap()).unwrap(),
        CubicDegree::new(vec![iv(0.85, 0.95)], DegreeVector::scalar(0.90).unwrap()).unwrap(),
    ];
    let out = cubic_aggregate(&values, &[0.20, 0.70, 1.00]).unwrap();
    ledger.check(
        "3.11.2:cubic",
        vec![
            out.intervals[0].lower(),
            out.intervals[0].upper(),
            out.point.get(0),
        ],
        vec![0.7000, 0.8526, 0.7842],
        PRINT_TOL,
        "premium-dominant fuzzy cubic triple",
    );
}

fn scholarship_cubic(ledger: &mut Ledger) {
    // (mu interval, nu interval, crisp pair) per evidence source
    let values = vec![
        CubicDegree::new(
            vec![iv(0.65, 0.80), iv(0.10, 0.20)],
            DegreeVector::new(vec![0.72, 0.18]).unwrap(),
        )
        .unwrap(),
        CubicDegree::new(
            vec![iv(0.75, 0.92), iv(0.03, 0.10)],
            DegreeVector::new(vec![0.85, 0.08]).unwrap(),
        )
        .unwrap(),
        CubicDegree::new(
            vec![iv(0.50, 0.70), iv(0.10, 0.20)],
            DegreeVector::new(vec![0.60, 0.18]).unwrap(),
        )
        .unwrap(),
    ];
    let out = cubic_aggregate(&values, &[0.75, 1.00, 0.60]).unwrap();
    ledger.check(
        "3.11.3:intervals",
        vec![
            out.intervals[0].lower(),
            out.intervals[0].upper(),
            out.intervals[1].lower(),
            out.intervals[1].upper(),
        ],
        vec![0.6543, 0.8255, 0.0702, 0.1574],
        PRINT_TOL,
        "membership and nonmembership intervals under research dominance",
    );
    ledger.check(
        "3.11.3:crisp",
        out.point.components().to_vec(),
        vec![0.7447, 0.1372],
        PRINT_TOL,
        "crisp intuitionistic pair",
    );
}

fn bike_station_cubic(ledger: &mut Ledger) {
    let values = vec![
        CubicDegree::new(
            vec![iv(0.80, 0.95), iv(0.03, 0.10), iv(0.02, 0.07)],
            DegreeVector::new(vec![0.90, 0.06, 0.04]).unwrap(),
        )
        .unwrap(),
        CubicDegree::new(
            vec![iv(0.70, 0.88), iv(0.05, 0.12), iv(0.07, 0.15)],
            DegreeVector::new(vec![0.80, 0.09, 0.11]).unwrap(),
        )
        .unwrap(),
        CubicDegree::new(
            vec![iv(0.40, 0.60), iv(0.10, 0.20), iv(0.30, 0.45)],
            DegreeVector::new(vec![0.50, 0.15, 0.35]).unwrap(),
        )
        .unwrap(),
    ];
    let out = cubic_aggregate(&values, &[1.00, 0.70, 0.40]).unwrap();
    ledger.check(
        "3.11.4:intervals",
        vec![
            out.intervals[0].lower(),
            out.intervals[0].upper(),
            out.intervals[1].lower(),
            out.intervals[1].upper(),
            out.intervals[2].lower(),
            out.intervals[2].upper(),
        ],
        vec![0.6905, 0.8600, 0.0500, 0.1257, 0.0900, 0.1690],
        PRINT_TOL,
        "neutrosophic intervals under demand dominance",
    );
    ledger.check(
        "3.11.4:crisp",
        out.point.components().to_vec(),
        vec![0.7905, 0.0871, 0.1224],
        PRINT_TOL,
        "crisp neutrosophic triple",
    );
}

fn pshss_attr(name: &str, values: Vec<&str>, pairs: Vec<(usize, usize, f64)>) -> PshssAttribute {
    let mut table = ContradictionTable::zero(values.len(), 1);
    for (i, j, v) in pairs {
        table.set_pair(i, j, vec![v]).unwrap();
    }
    PshssAttribute::new(name, values, table).unwrap()
}

fn bed_allocation_pshss(ledger: &mut Ledger) {
    let severity = pshss_attr(
        "Severity",
        vec!["Mild", "Moderate", "Severe"],
        vec![(0, 2, 0.90), (1, 2, 0.30)],
    );
    let lifted = subset_lift(&severity, &["Moderate", "Severe"], &["Severe"]).unwrap();
    ledger.check(
        "3.12.2:lift",
        vec![lifted],
        vec![0.30],
        EXACT_TOL,
        "Hausdorff lift of {Moderate, Severe} against {Severe}",
    );
    let resources = pshss_attr("Resources", vec!["RLow", "RHigh"], vec![(0, 1, 0.80)]);
    let infection = pshss_attr("InfectionRisk", vec!["ILow", "IHigh"], vec![(0, 1, 0.90)]);
    let attrs = [severity, resources, infection];
    let subset = |vs: &[&str]| GammaComponent::Subset(vs.iter().map(|s| s.to_string()).collect());
    let gamma = [
        subset(&["Moderate", "Severe"]),
        subset(&["RHigh"]),
        subset(&["IHigh"]),
    ];
    let gamma_star = [subset(&["Severe"]), subset(&["RHigh"]), subset(&["IHigh"])];
    let w = pshss_weight(&attrs, &gamma, &gamma_star).unwrap();
    ledger.check(
        "3.12.2:weight",
        vec![w],
        vec![0.70],
        EXACT_TOL,
        "global weight (1 - 0.30) * 1 * 1",
    );
    let (score, selected) = pshss_score_neutrosophic(0.85, 0.10, 0.08, w, 0.0);
    ledger.check_erratum(
        "3.12.2:score",
        vec![score],
        vec![0.339],
        PRINT_TOL,
        "0.70 * 0.77 - 0.10 = 0.439; the printed chain drops 0.1 twice",
    );
    ledger.check_ok("3.12.2:selected", selected, "score above the zero threshold");
}

fn assortment_pshss(ledger: &mut Ledger) {
    let season = pshss_attr(
        "Season",
        vec!["Spring", "Summer", "Autumn", "Winter"],
        vec![(1, 2, 0.20)],
    );
    let price = pshss_attr("PriceBand", vec!["PLow", "PMid", "PHigh"], vec![(1, 2, 0.30)]);
    let style = pshss_attr("BrandStyle", vec!["Classic", "Sport", "Tech"], vec![(1, 2, 0.40)]);
    let attrs = [season, price, style];
    let single = |v: &str| GammaComponent::Single(v.to_string());
    let gamma_star = [single("Autumn"), single("PHigh"), single("Sport")];
    let tuples = [
        (["Autumn", "PHigh", "Sport"], 0.86),
        (["Summer", "PHigh", "Sport"], 0.70),
        (["Autumn", "PMid", "Sport"], 0.75),
        (["Autumn", "PHigh", "Tech"], 0.68),
    ];
    let mut weighted = Vec::new();
    let mut weights = Vec::new();
    for (tuple, mu) in &tuples {
        let gamma: Vec<GammaComponent> = tuple.iter().map(|v| single(v)).collect();
        let w = pshss_weight(&attrs, &gamma, &gamma_star).unwrap();
        weights.push(w);
        weighted.push((w, *mu));
    }
    ledger.check(
        "3.12.3:weights",
        weights,
        vec![1.0, 0.80, 0.70, 0.60],
        EXACT_TOL,
        "per-triple compatibility weights inside the configuration",
    );
    let mu = pshss_fuzzy_aggregate(&weighted).unwrap();
    ledger.check_erratum(
        "3.12.3:mu",
        vec![mu],
        vec![0.7584],
        ROUNDING_TOL,
        "2.353/3.10 = 0.75903; the print mis-rounds the quotient",
    );
}

fn timetabling_pshss(ledger: &mut Ledger) {
    let period = pshss_attr("Period", vec!["Morning", "Afternoon"], vec![(0, 1, 0.40)]);
    let room = pshss_attr("RoomType", vec!["Lecture", "Lab"], vec![(0, 1, 0.50)]);
    let day = pshss_attr("Day", vec!["Mon", "Tue"], vec![(0, 1, 0.30)]);
    let attrs = [period, room, day];
    let single = |v: &str| GammaComponent::Single(v.to_string());
    let gamma_star = [single("Morning"), single("Lecture"), single("Tue")];
    let tuples = [
        (["Morning", "Lecture", "Tue"], (0.85, 0.10)),
        (["Afternoon", "Lecture", "Tue"], (0.62, 0.25)),
        (["Morning", "Lecture", "Mon"], (0.70, 0.20)),
        (["Morning", "Lab", "Tue"], (0.60, 0.22)),
    ];
    let weighted: Vec<(f64, (f64, f64))> = tuples
        .iter()
        .map(|(tuple, pair)| {
            let gamma: Vec<GammaComponent> = tuple.iter().map(|v| single(v)).collect();
            (pshss_weight(&attrs, &gamma, &gamma_star).unwrap(), *pair)
        })
        .collect();
    let (mu, nu) = pshss_intuitionistic_aggregate(&weighted).unwrap();
    ledger.check(
        "3.12.4:pair",
        vec![mu, nu],
        vec![0.7186, 0.1786],
        PRINT_TOL,
        "aggregated intuitionistic pair over the slot configuration",
    );
    ledger.check(
        "3.12.4:margin",
        vec![mu - nu],
        vec![0.5400],
        PRINT_TOL,
        "decision margin reaches the 0.50 acceptance bar",
    );
}

fn triage_hesitant(ledger: &mut Ledger) {
    let image = HesitationSet::new(vec![
        DegreeVector::new(vec![0.75, 0.15, 0.10]).unwrap(),
        DegreeVector::new(vec![0.68, 0.22, 0.10]).unwrap(),
    ])
    .unwrap();
    let mean = hesitant_reduce(&image, ReduceStrategy::Mean);
    ledger.check(
        "3.13.3:mean",
        mean.components().to_vec(),
        vec![0.715, 0.185, 0.10],
        EXACT_TOL,
        "mean reduction of the mild-severity hesitation set",
    );
    let singleton = HesitationSet::new(vec![DegreeVector::new(vec![0.40, 0.30, 0.30]).unwrap()])
        .unwrap();
    let reduced = hesitant_reduce(&singleton, ReduceStrategy::Optimistic);
    ledger.check(
        "3.13.3:singleton",
        reduced.components().to_vec(),
        vec![0.40, 0.30, 0.30],
        0.0,
        "singleton hesitation reduces to its element",
    );
}

fn supplier_hesitant(ledger: &mut Ledger) {
    let grades = HesitationSet::new(vec![
        DegreeVector::scalar(0.82).unwrap(),
        DegreeVector::scalar(0.88).unwrap(),
        DegreeVector::scalar(0.91).unwrap(),
    ])
    .unwrap();
    ledger.check(
        "3.13.4:strategies",
        vec![
            hesitant_reduce(&grades, ReduceStrategy::Pessimistic).get(0),
            hesitant_reduce(&grades, ReduceStrategy::Mean).get(0),
            hesitant_reduce(&grades, ReduceStrategy::Optimistic).get(0),
        ],
        vec![0.82, 0.87, 0.91],
        EXACT_TOL,
        "pessimistic / mean / optimistic reductions of the high-class grades",
    );
}

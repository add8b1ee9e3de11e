//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use srg_cli::census::{census_row, row_graphs, Justification, PUBLISHED};
use srg_cli::input::LabelledGraph;
use srg_cli::report::{decide, Report};
use srg_cli::Tuning;
use srg_core::connectivity::{clique_cut_certificate, enumerate_optimal_cuts, kappa2_bruteforce};
use srg_core::constructions::{
    catalog, cayley_latin, chang, lattice, paley, quadric_graph, schlafli, symplectic_graph, triangular, QuadricSign,
};
use srg_core::geometry::delta_counterexample_test;
use srg_core::srg::{haemers_lower_bound, rules_fired, spectral_radius, spectrum, srg_check, Rule};
use srg_core::{
    kappa2_exact, vertex_connectivity, ConstructedGraph, CutCertificate, FamilySpec, Graph, Kappa2, Kappa2Options,
    SrgParams, VertexSet,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn params(v: usize, k: usize, l: usize, m: usize) -> SrgParams {
    SrgParams::new(v, k, l, m).unwrap()
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took <= limit, || format!("{what} took {took:?}, limit {limit:?}"))
}

fn c1_constructions() -> Check {
    let start = Instant::now();
    let mut expected: Vec<(ConstructedGraph, SrgParams)> = vec![
        (triangular(5).unwrap(), params(10, 6, 3, 4)),
        (triangular(6).unwrap(), params(15, 8, 4, 4)),
        (triangular(7).unwrap(), params(21, 10, 5, 4)),
        (triangular(8).unwrap(), params(28, 12, 6, 4)),
        (symplectic_graph(2, 2).unwrap(), params(15, 8, 4, 4)),
        (symplectic_graph(2, 3).unwrap(), params(40, 27, 18, 18)),
        (symplectic_graph(3, 2).unwrap(), params(63, 32, 16, 16)),
        (quadric_graph(QuadricSign::Plus, 3).unwrap(), params(28, 12, 6, 4)),
        (quadric_graph(QuadricSign::Minus, 3).unwrap(), params(36, 20, 10, 12)),
        (srg_core::constructions::clebsch(), params(16, 5, 0, 2)),
        (srg_core::constructions::shrikhande(), params(16, 6, 2, 2)),
        (srg_core::constructions::twenty_seven_lines(), params(27, 10, 1, 5)),
        (schlafli(), params(27, 16, 10, 8)),
    ];
    for n in 3..=6 {
        expected.push((lattice(n).unwrap(), params(n * n, 2 * (n - 1), n - 2, 2)));
    }
    for n in 4..=6 {
        expected.push((cayley_latin(n).unwrap(), params(n * n, 3 * (n - 1), n, 6)));
    }
    for q in [5, 9, 13, 17, 25] {
        expected.push((paley(q).unwrap(), params(q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4)));
    }
    for i in 1..=3 {
        expected.push((chang(i).unwrap(), params(28, 12, 6, 4)));
    }
    for (cg, p) in &expected {
        let found = srg_check(&cg.graph).map_err(|e| format!("{}: {e}", cg.spec))?;
        ensure(found == *p, || format!("{}: {found:?} != {p:?}", cg.spec))?;
    }
    let t8 = triangular(8).unwrap().graph;
    for i in 1..=3 {
        ensure(chang(i).unwrap().graph != t8, || format!("Chang({i}) equals T(8)"))?;
    }
    within(start, Duration::from_secs(5), "constructions")?;
    Ok(format!("{} graphs in {:?}", expected.len(), start.elapsed()))
}

/// Multiplicities of `theta2` and `thetav` counted from a numerical eigendecomposition.
fn numeric_multiplicities(g: &Graph, theta2: f64, thetav: f64) -> (usize, usize) {
    let n = g.order();
    let m = DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    let eig = m.symmetric_eigenvalues();
    let count = |t: f64| eig.iter().filter(|e: &&f64| (**e - t).abs() < 1e-6).count();
    (count(theta2), count(thetav))
}

fn c2_spectra() -> Check {
    let mut failures = Vec::new();
    let mut graphs = 0;
    for row in &PUBLISHED {
        let (v, k, l, m) = row.params;
        let sp = spectrum(&params(v, k, l, m)).map_err(|e| format!("row {}: {e}", row.label))?;
        let shown = |x: &srg_core::srg::QuadSurd| match x.to_integer() {
            Some(i) => i.to_string(),
            None => format!("{:.3}", x.to_f64()),
        };
        let (r, s) = (shown(&sp.theta2), shown(&sp.thetav));
        if (r.as_str(), sp.f, s.as_str(), sp.g) != (row.r, row.f, row.s, row.g) {
            failures.push(format!(
                "row {} {:?}: computed {r}^{} {s}^{}, table {}^{} {}^{}",
                row.label, row.params, sp.f, sp.g, row.r, row.f, row.s, row.g
            ));
        }
        for spec in row_graphs(row.label) {
            let g = spec.build().unwrap().graph;
            let counted = numeric_multiplicities(&g, sp.theta2.to_f64(), sp.thetav.to_f64());
            graphs += 1;
            if counted != (sp.f, sp.g) {
                failures.push(format!(
                    "{spec}: eigensolver counts {counted:?}, formula ({}, {})",
                    sp.f, sp.g
                ));
            }
        }
    }
    let examples = [((15, 6, 1, 3), (1, 9, -3, 5)), ((28, 12, 6, 4), (4, 7, -2, 20))];
    for ((v, k, l, m), (r, f, s, g)) in examples {
        let sp = spectrum(&params(v, k, l, m)).unwrap();
        if (sp.theta2.to_integer(), sp.f, sp.thetav.to_integer(), sp.g) != (Some(r), f, Some(s), g) {
            failures.push(format!("({v},{k},{l},{m}) spectrum {sp:?}"));
        }
    }
    if failures.is_empty() {
        Ok(format!(
            "{} rows, {graphs} graphs cross-checked numerically",
            PUBLISHED.len()
        ))
    } else {
        Err(failures.join("; "))
    }
}

fn catalog_graphs() -> Vec<ConstructedGraph> {
    catalog().iter().map(|s| s.build().unwrap()).collect()
}

fn c3_brouwer_mesner() -> Check {
    let start = Instant::now();
    let graphs = catalog_graphs();
    for cg in &graphs {
        let kappa = vertex_connectivity(&cg.graph).unwrap();
        ensure(kappa == cg.expected_params.k, || {
            format!("{}: kappa {kappa} != k {}", cg.spec, cg.expected_params.k)
        })?;
    }
    within(start, Duration::from_secs(60), "vertex connectivity")?;
    Ok(format!("{} graphs in {:?}", graphs.len(), start.elapsed()))
}

fn c4_headline() -> Check {
    let mut cases: Vec<(ConstructedGraph, usize)> = vec![
        (triangular(6).unwrap(), 9),
        (triangular(7).unwrap(), 12),
        (triangular(8).unwrap(), 15),
        (symplectic_graph(2, 2).unwrap(), 9),
        (symplectic_graph(2, 3).unwrap(), 32),
        (symplectic_graph(3, 2).unwrap(), 45),
        (quadric_graph(QuadricSign::Plus, 3).unwrap(), 15),
        (quadric_graph(QuadricSign::Minus, 3).unwrap(), 27),
        (lattice(3).unwrap(), 5),
        (lattice(4).unwrap(), 8),
        (lattice(5).unwrap(), 11),
        (lattice(6).unwrap(), 14),
        (cayley_latin(5).unwrap(), 17),
        (cayley_latin(6).unwrap(), 22),
    ];
    cases.extend((1..=3).map(|i| (chang(i).unwrap(), 16)));
    let mut slowest = (Duration::ZERO, String::new());
    for (cg, want) in &cases {
        let start = Instant::now();
        let r = kappa2_exact(&cg.graph, &Kappa2Options::default()).map_err(|e| format!("{}: {e}", cg.spec))?;
        let limit = if cg.spec == (FamilySpec::Symplectic { r: 3, q: 2 }) {
            600
        } else {
            60
        };
        within(start, Duration::from_secs(limit), &cg.spec.id())?;
        ensure(r.closed && r.value == Kappa2::Value(*want), || {
            format!("{}: {:?} closed={}, want {want}", cg.spec, r.value, r.closed)
        })?;
        if start.elapsed() > slowest.0 {
            slowest = (start.elapsed(), cg.spec.id());
        }
    }
    Ok(format!(
        "{} graphs, slowest {} in {:?}",
        cases.len(),
        slowest.1,
        slowest.0
    ))
}

fn report_for(spec: &FamilySpec) -> Report {
    decide(
        &LabelledGraph::from_constructed(spec.build().unwrap()),
        &Tuning::default(),
    )
    .unwrap()
}

fn c5_no_valid_cut() -> Check {
    let r = report_for(&FamilySpec::Triangular { m: 5 });
    ensure(
        r.kappa2
            == srg_cli::report::Kappa2Json {
                value: None,
                closed: true,
            },
        || format!("complement(Petersen): {:?}", r.kappa2),
    )?;
    ensure(r.verdict.as_deref() == Some("OK_NoValidCut"), || {
        format!("complement(Petersen): {:?}", r.verdict)
    })?;
    let mut checked = Vec::new();
    for row in PUBLISHED
        .iter()
        .filter(|r| r.justification == Justification::Rule(Rule::SmallOrder))
    {
        let (v, k, l, m) = row.params;
        ensure(rules_fired(&params(v, k, l, m)).contains(&Rule::SmallOrder), || {
            format!("row {}: small-order rule does not hold", row.label)
        })?;
        for spec in row_graphs(row.label) {
            let r = report_for(&spec);
            let ok = r.verdict.as_deref().is_some_and(|v| v.starts_with("OK"))
                && r.rules_fired.iter().any(|x| x == "small_order");
            ensure(ok, || {
                format!("{spec}: verdict {:?}, rules {:?}", r.verdict, r.rules_fired)
            })?;
            checked.push(spec.id());
        }
    }
    ensure(checked.iter().any(|id| id == "LatinCyclic(4)"), || {
        "no (16,9,4,6) graph checked".into()
    })?;
    Ok(format!(
        "complement(Petersen) has no valid cut; small-order rows OK: {}",
        checked.join(" ")
    ))
}

fn separators(cuts: &[CutCertificate]) -> BTreeSet<VertexSet> {
    cuts.iter().map(|c| c.s.clone()).collect()
}

fn is_four_cycle(g: &Graph, side: &VertexSet) -> bool {
    let h = g.induced(side);
    h.order() == 4 && h.is_connected() && (0..4).all(|u| h.degree(u) == 2)
}

fn c6_cut_structure() -> Check {
    let all = Kappa2Options {
        enumerate_all: true,
        ..Kappa2Options::default()
    };
    let mut failures = Vec::new();
    let t6 = triangular(6).unwrap();
    let lines = t6.lines.as_ref().unwrap();
    let cuts = enumerate_optimal_cuts(&t6.graph, &all).unwrap();
    let line_cuts: BTreeSet<VertexSet> = lines.iter().map(|l| t6.graph.neighborhood(l)).collect();
    let oracle = kappa2_bruteforce(&t6.graph).unwrap().optimal_cuts.unwrap();
    if separators(&cuts) != line_cuts {
        failures.push("T(6): optimal cuts are not exactly the line neighborhoods".to_string());
    }
    if separators(&oracle) != separators(&cuts) {
        failures.push("T(6): oracle disagrees".to_string());
    }
    if cuts.len() != 20 {
        failures.push(format!(
            "T(6): {} optimal cuts, want 20 ({} lines, {} distinct line neighborhoods, oracle {})",
            cuts.len(),
            lines.len(),
            line_cuts.len(),
            oracle.len()
        ));
    }

    let l4 = lattice(4).unwrap().graph;
    let cuts = enumerate_optimal_cuts(&l4, &all).unwrap();
    let (mut edge, mut square) = (0, 0);
    for c in &cuts {
        let a = c.a.to_vec();
        if a.len() == 2 && l4.has_edge(a[0], a[1]) && c.s == l4.neighborhood(&c.a) {
            edge += 1;
        } else if is_four_cycle(&l4, &c.a) && is_four_cycle(&l4, &c.b) {
            square += 1;
        } else {
            failures.push(format!("L2(4): unexpected cut {c:?}"));
        }
    }
    if separators(&cuts) != separators(&kappa2_bruteforce(&l4).unwrap().optimal_cuts.unwrap()) {
        failures.push("L2(4): oracle disagrees".to_string());
    }
    if failures.is_empty() {
        Ok(format!(
            "T(6): 20 line cuts; L2(4): {edge} edge cuts, {square} (4,4) cuts, matching the oracle"
        ))
    } else {
        Err(failures.join("; "))
    }
}

fn random_connected(rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let n = rng.gen_range(4..=12);
        let p = rng.gen_range(0.15..0.75);
        let g = Graph::from_fn(n, |_, _| rng.gen_bool(p)).unwrap();
        if g.is_connected() && !g.is_complete() {
            return g;
        }
    }
}

fn c7_oracle() -> Check {
    let start = Instant::now();
    let all = Kappa2Options {
        enumerate_all: true,
        ..Kappa2Options::default()
    };
    let agree = |name: &str, g: &Graph| -> Result<(), String> {
        let exact = kappa2_exact(g, &all).map_err(|e| format!("{name}: {e}"))?;
        let brute = kappa2_bruteforce(g).map_err(|e| format!("{name}: {e}"))?;
        ensure(exact.closed && exact.value == brute.value, || {
            format!("{name}: {:?} vs {:?}", exact.value, brute.value)
        })?;
        ensure(
            separators(&exact.optimal_cuts.unwrap()) == separators(&brute.optimal_cuts.unwrap()),
            || format!("{name}: optimal cut sets differ"),
        )
    };
    let mut n_catalog = 0;
    for cg in catalog_graphs().iter().filter(|cg| cg.graph.order() <= 21) {
        agree(&cg.spec.id(), &cg.graph)?;
        n_catalog += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..200 {
        agree(&format!("random graph {i}"), &random_connected(&mut rng))?;
    }
    within(start, Duration::from_secs(900), "oracle comparison")?;
    Ok(format!(
        "{n_catalog} catalog graphs and 200 random graphs in {:?}",
        start.elapsed()
    ))
}

fn c8_schlafli() -> Check {
    let cg = schlafli();
    let g = &cg.graph;
    let (mut triangles, mut paths) = (0, 0);
    for a in 0..27 {
        for b in 0..27 {
            for c in a + 1..27 {
                if b == a || b == c || !g.has_edge(a, b) || !g.has_edge(b, c) {
                    continue;
                }
                let set = VertexSet::from_vertices(27, [a, b, c]);
                let size = g.neighborhood(&set).len();
                if g.has_edge(a, c) {
                    if b < a || b > c {
                        continue;
                    }
                    ensure(size == 21, || {
                        format!("triangle {:?}: |N| = {size}", cg.label_set(&set))
                    })?;
                    triangles += 1;
                } else {
                    ensure(size == 23, || format!("path {:?}: |N| = {size}", cg.label_set(&set)))?;
                    paths += 1;
                }
            }
        }
    }
    let r = report_for(&FamilySpec::Schlafli);
    ensure(r.verdict.as_deref().is_some_and(|v| v.starts_with("OK")), || {
        format!("verdict {:?}", r.verdict)
    })?;
    Ok(format!(
        "{triangles} triangles, {paths} induced paths, verdict {}",
        r.verdict.unwrap()
    ))
}

fn c9_predicates() -> Check {
    let mut failures = Vec::new();
    let mut rows = 0;
    for row in &PUBLISHED {
        let cr = census_row(row, &Tuning::default()).map_err(|e| e.to_string())?;
        if cr.justification_supported == Some(false) {
            failures.push(format!(
                "row {}: {} not reproduced (rules {:?})",
                row.label, cr.published_justification, cr.rules_fired
            ));
        }
        if cr.computed.is_some_and(|c| c != cr.published) {
            failures.push(format!(
                "row {}: computed {:?}, table {}",
                row.label, cr.computed, cr.published
            ));
        }
        rows += 1;
    }
    let triangle_free = [
        (10, 3, 0, 1),
        (16, 5, 0, 2),
        (50, 7, 0, 1),
        (56, 10, 0, 2),
        (77, 16, 0, 4),
        (100, 22, 0, 6),
    ];
    for (v, k, l, m) in triangle_free {
        let p = params(v, k, l, m);
        if !rules_fired(&p).contains(&Rule::HaemersThree) {
            let lhs = 4 * (k - 2 * l) * (k - m);
            let rhs = (l as i64 - m as i64).pow(2) as usize * (2 * k - l - 3);
            failures.push(format!("({v},{k},{l},{m}): 4(k-2l)(k-mu) = {lhs} is not > {rhs}"));
        }
    }
    if failures.is_empty() {
        Ok(format!(
            "{rows} rows and {} triangle-free parameter sets",
            triangle_free.len()
        ))
    } else {
        Err(failures.join("; "))
    }
}

fn c10_delta() -> Check {
    let cases = [
        (symplectic_graph(2, 2).unwrap(), 9),
        (triangular(6).unwrap(), 9),
        (triangular(7).unwrap(), 12),
        (quadric_graph(QuadricSign::Plus, 3).unwrap(), 15),
        (quadric_graph(QuadricSign::Minus, 3).unwrap(), 27),
    ];
    let mut certs = 0;
    for (cg, size) in &cases {
        let t = delta_counterexample_test(cg).map_err(|e| format!("{}: {e}", cg.spec))?;
        ensure(t.applies && t.predicted_cut_size == *size, || {
            format!("{}: {t:?}, want {size}", cg.spec)
        })?;
        for i in 0..cg.lines.as_ref().unwrap().len() {
            let c = clique_cut_certificate(cg, i).map_err(|e| format!("{} line {i}: {e}", cg.spec))?;
            ensure(c.size() == *size && c.check(&cg.graph).is_ok(), || {
                format!("{} line {i}: size {}", cg.spec, c.size())
            })?;
            certs += 1;
        }
    }
    let t5 = triangular(5).unwrap();
    let petersen_co = delta_counterexample_test(&t5).unwrap();
    ensure(!petersen_co.applies, || "complement(Petersen): test applies".into())?;
    Ok(format!(
        "5 graphs, {certs} line certificates; complement(Petersen) excluded"
    ))
}

fn spectral_checks(g: &Graph, c: &CutCertificate) -> Result<bool, String> {
    let Ok(p) = srg_check(g) else { return Ok(false) };
    let theta2 = spectrum(&p).map_err(|e| e.to_string())?.theta2.to_f64();
    let bound = haemers_lower_bound(&p, c.a.len(), c.b.len());
    ensure(Ratio::from_integer(c.size() as i64) >= bound, || {
        format!("|S| = {} below Haemers bound {bound}", c.size())
    })?;
    let (alpha, beta) = (spectral_radius(&g.induced(&c.a)), spectral_radius(&g.induced(&c.b)));
    ensure(alpha.min(beta) <= theta2 + 1e-7, || {
        format!("min({alpha}, {beta}) > theta2 = {theta2}")
    })?;
    Ok(true)
}

fn c11_soundness() -> Check {
    let all = Kappa2Options {
        enumerate_all: true,
        ..Kappa2Options::default()
    };
    let (mut verified, mut spectral) = (0, 0);
    let mut check = |name: &str, g: &Graph, c: &CutCertificate| -> Result<(), String> {
        c.check(g).map_err(|e| format!("{name}: {e}"))?;
        srg_core::verify_cut(g, &c.s).map_err(|e| format!("{name}: {e}"))?;
        verified += 1;
        if spectral_checks(g, c).map_err(|e| format!("{name}: {e}"))? {
            spectral += 1;
        }
        Ok(())
    };
    for cg in catalog_graphs() {
        for g in [cg.graph.clone(), cg.graph.complement()] {
            if !g.is_connected() {
                continue;
            }
            let r = kappa2_exact(&g, &all).map_err(|e| e.to_string())?;
            for c in r.certificate.iter().chain(r.optimal_cuts.iter().flatten()) {
                check(&cg.spec.id(), &g, c)?;
            }
        }
        for i in 0..cg.lines.as_ref().map_or(0, Vec::len) {
            if let Ok(c) = clique_cut_certificate(&cg, i) {
                check(&cg.spec.id(), &cg.graph, &c)?;
            }
        }
        let report =
            decide(&LabelledGraph::from_constructed(cg.clone()), &Tuning::default()).map_err(|e| e.to_string())?;
        let back: Report = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
        if let Some(c) = back.recheck().map_err(|e| format!("{} report: {e}", cg.spec))? {
            check(&format!("{} report", cg.spec), &cg.graph, &c)?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..100 {
        let g = random_connected(&mut rng);
        for c in kappa2_bruteforce(&g).unwrap().optimal_cuts.unwrap() {
            check(&format!("random graph {i}"), &g, &c)?;
        }
    }
    Ok(format!(
        "{verified} certificates re-verified, {spectral} with Haemers and interlacing checks"
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("construction regression", c1_constructions),
        ("spectrum regression", c2_spectra),
        ("vertex connectivity equals degree", c3_brouwer_mesner),
        ("kappa2 headline values", c4_headline),
        ("no valid cut and small-order verdicts", c5_no_valid_cut),
        ("optimal cut structure", c6_cut_structure),
        ("oracle equivalence", c7_oracle),
        ("Schlafli local counts", c8_schlafli),
        ("predicate census", c9_predicates),
        ("line-neighborhood counterexample test", c10_delta),
        ("certificate soundness", c11_soundness),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({secs:.1}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.1}s): {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

//! The table of strongly regular graphs on at most 30 vertices, recomputed.

use serde::{Deserialize, Serialize};

use srg_core::constructions::QuadricSign;
use srg_core::srg::{rules_fired, spectrum, QuadSurd, Rule};
use srg_core::{FamilySpec, SrgParams, VerdictStatus};

use crate::input::LabelledGraph;
use crate::report::decide;
use crate::{CliError, Tuning};

/// Reason a reference row is marked OK or not.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Justification {
    Rule(Rule),
    /// Triangular graphs are counterexamples.
    Triangular,
    /// Lattice graphs attain the bound.
    Lattice,
    /// No valid cut exists.
    NoValidCut,
    /// Local neighborhood counts in the Schlafli graph.
    Schlafli,
    /// Case analysis over a family the tool cannot construct.
    External,
}

impl Justification {
    pub fn name(&self) -> &'static str {
        match self {
            Justification::Rule(r) => r.name(),
            Justification::Triangular => "triangular",
            Justification::Lattice => "lattice",
            Justification::NoValidCut => "no_valid_cut",
            Justification::Schlafli => "schlafli",
            Justification::External => "external",
        }
    }
}

/// One row of the reference table.
#[derive(Debug, Clone, PartialEq)]
pub struct PublishedRow {
    pub label: &'static str,
    pub params: (usize, usize, usize, usize),
    /// `r^f` and `s^g`, eigenvalues rounded to three decimals when irrational.
    pub r: &'static str,
    pub f: usize,
    pub s: &'static str,
    pub g: usize,
    pub ok: bool,
    pub justification: Justification,
}

#[allow(clippy::too_many_arguments)]
const fn row(
    label: &'static str,
    params: (usize, usize, usize, usize),
    r: &'static str,
    f: usize,
    s: &'static str,
    g: usize,
    ok: bool,
    justification: Justification,
) -> PublishedRow {
    PublishedRow {
        label,
        params,
        r,
        f,
        s,
        g,
        ok,
        justification,
    }
}

use Justification as J;

pub const PUBLISHED: [PublishedRow; 24] = [
    row(
        "1",
        (5, 2, 0, 1),
        "0.618",
        2,
        "-1.618",
        2,
        true,
        J::Rule(Rule::SmallOrder),
    ),
    row("2", (9, 4, 1, 2), "1", 4, "-2", 4, true, J::Rule(Rule::SmallOrder)),
    row("3", (10, 3, 0, 1), "1", 5, "-2", 4, true, J::Rule(Rule::HaemersThree)),
    row("3'", (10, 6, 3, 4), "1", 4, "-2", 5, true, J::NoValidCut),
    row(
        "4",
        (13, 6, 2, 3),
        "1.303",
        6,
        "-2.303",
        6,
        true,
        J::Rule(Rule::NearEqualLambdaMu),
    ),
    row(
        "5",
        (15, 6, 1, 3),
        "1",
        9,
        "-3",
        5,
        true,
        J::Rule(Rule::Theta2BelowSqrt2),
    ),
    row("5'", (15, 8, 4, 4), "2", 5, "-2", 9, false, J::Triangular),
    row("6", (16, 5, 0, 2), "1", 10, "-3", 5, true, J::Rule(Rule::HaemersThree)),
    row("6'", (16, 10, 6, 6), "2", 5, "-2", 10, true, J::Rule(Rule::SmallOrder)),
    row("7", (16, 6, 2, 2), "2", 6, "-2", 9, true, J::Rule(Rule::HaemersThree)),
    row("7'", (16, 9, 4, 6), "1", 9, "-3", 6, true, J::Rule(Rule::SmallOrder)),
    row(
        "8",
        (17, 8, 3, 4),
        "1.562",
        8,
        "-2.562",
        8,
        true,
        J::Rule(Rule::NearEqualLambdaMu),
    ),
    row(
        "9",
        (21, 10, 3, 6),
        "1",
        14,
        "-4",
        6,
        true,
        J::Rule(Rule::Theta2BelowSqrt2),
    ),
    row("9'", (21, 10, 5, 4), "3", 6, "-2", 14, false, J::Triangular),
    row("10", (25, 8, 3, 2), "3", 8, "-2", 16, true, J::Lattice),
    row(
        "10'",
        (25, 16, 9, 12),
        "1",
        16,
        "-4",
        8,
        true,
        J::Rule(Rule::SmallOrder),
    ),
    row(
        "11",
        (25, 12, 5, 6),
        "2",
        12,
        "-3",
        12,
        true,
        J::Rule(Rule::NearEqualLambdaMu),
    ),
    row(
        "12",
        (26, 10, 3, 4),
        "2",
        13,
        "-3",
        12,
        true,
        J::Rule(Rule::NearEqualLambdaMu),
    ),
    row("12'", (26, 15, 8, 9), "2", 12, "-3", 13, true, J::External),
    row(
        "13",
        (27, 10, 1, 5),
        "1",
        20,
        "-5",
        6,
        true,
        J::Rule(Rule::Theta2BelowSqrt2),
    ),
    row("13'", (27, 16, 10, 8), "4", 6, "-2", 20, true, J::Schlafli),
    row("14", (28, 12, 6, 4), "4", 7, "-2", 20, false, J::Triangular),
    row(
        "14'",
        (28, 15, 6, 10),
        "1",
        20,
        "-5",
        7,
        true,
        J::Rule(Rule::Theta2BelowSqrt2),
    ),
    row(
        "15",
        (29, 14, 6, 7),
        "2.193",
        12,
        "-3.193",
        14,
        true,
        J::Rule(Rule::NearEqualLambdaMu),
    ),
];

/// Constructible graphs carrying the parameters of a reference row.
pub fn row_graphs(label: &str) -> Vec<FamilySpec> {
    use FamilySpec::*;
    let co = FamilySpec::complement;
    let t = |m| Triangular { m };
    let l2 = |n| Lattice { n };
    let latin = |n| LatinSquare { n, square: None };
    let sp42 = Symplectic { r: 2, q: 2 };
    let oplus = Quadric {
        sign: QuadricSign::Plus,
        r: 3,
    };
    let changs = || (1..=3).map(|index| Chang { index });
    match label {
        "1" => vec![Paley { q: 5 }],
        "2" => vec![Paley { q: 9 }, l2(3)],
        "3" => vec![co(t(5))],
        "3'" => vec![t(5)],
        "4" => vec![Paley { q: 13 }],
        "5" => vec![co(t(6)), co(sp42)],
        "5'" => vec![t(6), sp42],
        "6" => vec![Clebsch],
        "6'" => vec![co(Clebsch)],
        "7" => vec![l2(4), Shrikhande],
        "7'" => vec![co(l2(4)), co(Shrikhande), latin(4)],
        "8" => vec![Paley { q: 17 }],
        "9" => vec![co(t(7))],
        "9'" => vec![t(7)],
        "10" => vec![l2(5)],
        "10'" => vec![co(l2(5))],
        "11" => vec![Paley { q: 25 }, latin(5)],
        "13" => vec![TwentySevenLines],
        "13'" => vec![Schlafli],
        "14" => [t(8), oplus.clone()].into_iter().chain(changs()).collect(),
        "14'" => [co(t(8)), co(oplus)].into_iter().chain(changs().map(co)).collect(),
        "15" => vec![Paley { q: 29 }],
        _ => Vec::new(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphOutcome {
    pub id: String,
    pub verdict: String,
    pub kappa2: Option<usize>,
    pub closed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusRow {
    pub row: String,
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
    /// `r^f s^g` computed from the parameters.
    pub spectrum: String,
    pub spectrum_matches: bool,
    pub rules_fired: Vec<String>,
    pub graphs: Vec<GraphOutcome>,
    /// `o` when every graph is OK, `x` when some graph is a counterexample,
    /// `None` when nothing was computed or a search did not close.
    pub computed: Option<char>,
    pub published: char,
    pub published_justification: String,
    pub justification_supported: Option<bool>,
    pub parameter_level_only: bool,
}

impl CensusRow {
    /// Whether the computed row agrees with the reference row; `None` for
    /// parameter-level rows.
    pub fn agrees(&self) -> Option<bool> {
        if self.parameter_level_only {
            return None;
        }
        Some(
            self.spectrum_matches
                && self.computed == Some(self.published)
                && self.justification_supported == Some(true),
        )
    }
}

fn printed(x: &QuadSurd) -> String {
    match x.to_integer() {
        Some(i) => i.to_string(),
        None => format!("{:.3}", x.to_f64()),
    }
}

/// Whether the computed evidence supports the reference justification.
fn supports(j: Justification, fired: &[Rule], graphs: &[GraphOutcome]) -> Option<bool> {
    let any = |status: VerdictStatus| graphs.iter().any(|g| g.verdict == status.name());
    match j {
        Justification::Rule(r) => Some(fired.contains(&r)),
        Justification::External => None,
        _ if graphs.is_empty() => None,
        Justification::Triangular => Some(
            graphs
                .iter()
                .any(|g| g.id.starts_with("T(") && g.verdict == VerdictStatus::Counterexample.name()),
        ),
        Justification::Lattice => Some(
            graphs
                .iter()
                .any(|g| g.id.starts_with("L2(") && g.verdict == VerdictStatus::OkEquality.name()),
        ),
        Justification::NoValidCut => Some(any(VerdictStatus::OkNoValidCut)),
        Justification::Schlafli => Some(graphs.iter().any(|g| g.id == "Schlafli" && g.verdict.starts_with("OK"))),
    }
}

pub fn census_row(published: &PublishedRow, tuning: &Tuning) -> Result<CensusRow, CliError> {
    let (v, k, l, m) = published.params;
    let p = SrgParams::new(v, k, l, m).map_err(|e| CliError::Usage(e.to_string()))?;
    let sp = spectrum(&p).map_err(|e| CliError::Usage(e.to_string()))?;
    let (r, s) = (printed(&sp.theta2), printed(&sp.thetav));
    let fired = rules_fired(&p);
    let mut graphs = Vec::new();
    for spec in row_graphs(published.label) {
        let g = LabelledGraph::from_constructed(spec.build()?);
        let report = decide(&g, tuning)?;
        graphs.push(GraphOutcome {
            id: report.id,
            verdict: report.verdict.unwrap_or_default(),
            kappa2: report.kappa2.value,
            closed: report.kappa2.closed,
        });
    }
    let computed = if graphs.is_empty() {
        None
    } else if graphs.iter().any(|g| g.verdict == VerdictStatus::Counterexample.name()) {
        Some('x')
    } else if graphs.iter().all(|g| g.verdict.starts_with("OK")) {
        Some('o')
    } else {
        None
    };
    Ok(CensusRow {
        row: published.label.to_string(),
        v,
        k,
        lambda: l,
        mu: m,
        spectrum: format!("{r}^{} {s}^{}", sp.f, sp.g),
        spectrum_matches: r == published.r && s == published.s && sp.f == published.f && sp.g == published.g,
        rules_fired: fired.iter().map(|r| r.name().to_string()).collect(),
        justification_supported: supports(published.justification, &fired, &graphs),
        parameter_level_only: graphs.is_empty(),
        graphs,
        computed,
        published: if published.ok { 'o' } else { 'x' },
        published_justification: published.justification.name().to_string(),
    })
}

pub fn census(max_v: usize, tuning: &Tuning) -> Result<Vec<CensusRow>, CliError> {
    if max_v > 40 {
        return Err(CliError::Usage(format!("--max-v {max_v} exceeds 40")));
    }
    PUBLISHED
        .iter()
        .filter(|r| r.params.0 <= max_v)
        .map(|r| census_row(r, tuning))
        .collect()
}

pub fn render_table(rows: &[CensusRow]) -> String {
    let mut out = format!(
        "{:<5} {:>3} {:>3} {:>3} {:>3}  {:<18} {:<4} {:<4} {:<22} {:<10} {:<6} {}\n",
        "row", "v", "k", "l", "mu", "spectrum", "pub", "calc", "justification", "supported", "agree", "graphs"
    );
    for r in rows {
        let flag = |b: Option<bool>| match b {
            Some(true) => "yes",
            Some(false) => "NO",
            None => "-",
        };
        let graphs = if r.parameter_level_only {
            "parameter-level only".to_string()
        } else {
            r.graphs
                .iter()
                .map(|g| match g.kappa2 {
                    Some(v) => format!("{}={v}", g.id),
                    None => format!("{}:{}", g.id, g.verdict),
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        out += &format!(
            "{:<5} {:>3} {:>3} {:>3} {:>3}  {:<18} {:<4} {:<4} {:<22} {:<10} {:<6} {}\n",
            r.row,
            r.v,
            r.k,
            r.lambda,
            r.mu,
            r.spectrum,
            r.published,
            r.computed.map_or('-', |c| c),
            r.published_justification,
            flag(r.justification_supported),
            flag(r.agrees()),
            graphs
        );
    }
    out
}

//! Strongly regular parameters, exact spectra, and the parameter-level
//! sufficiency predicates for the restricted connectivity bound.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_rational::Ratio;
use thiserror::Error;

use crate::connectivity::CutCertificate;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SrgError {
    #[error("graph is not regular (vertex {vertex} has degree {degree}, expected {expected})")]
    NotRegular {
        vertex: usize,
        degree: usize,
        expected: usize,
    },
    #[error("vertices {0} and {1} break the common-neighbor count")]
    NotStronglyRegular(usize, usize),
    #[error("graph is complete")]
    CompleteGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("parameters ({v},{k},{lambda},{mu}) are infeasible")]
    Infeasible {
        v: usize,
        k: usize,
        lambda: usize,
        mu: usize,
    },
    #[error("eigenvalue multiplicities are not nonnegative integers")]
    InfeasibleMultiplicities,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

impl SrgParams {
    /// Checks `0 < k < v - 1`, `lambda < k`, and `mu (v - k - 1) = k (k - lambda - 1)`.
    pub fn new(v: usize, k: usize, lambda: usize, mu: usize) -> Result<SrgParams, SrgError> {
        let ok = k >= 1 && k + 1 < v && lambda < k && mu <= k && mu * (v - k - 1) == k * (k - lambda - 1);
        if ok {
            Ok(SrgParams { v, k, lambda, mu })
        } else {
            Err(SrgError::Infeasible { v, k, lambda, mu })
        }
    }

    /// `lambda - mu`.
    pub fn lambda_minus_mu(&self) -> i64 {
        self.lambda as i64 - self.mu as i64
    }

    /// `(lambda - mu)^2 + 4 (k - mu)`.
    pub fn discriminant(&self) -> i64 {
        let a = self.lambda_minus_mu();
        a * a + 4 * (self.k as i64 - self.mu as i64)
    }

    /// `2k - lambda - 2`, the size of the neighborhood of an edge.
    pub fn edge_neighborhood_size(&self) -> usize {
        2 * self.k - self.lambda - 2
    }
}

/// `a + b sqrt(d)` with rational `a, b` and `d` squarefree (or `b = 0`).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    a: Ratio<i64>,
    b: Ratio<i64>,
    d: i64,
}

fn squarefree_split(n: i64) -> (i64, i64) {
    assert!(n >= 0);
    let mut outside = 1;
    let mut inside = n;
    let mut p = 2;
    while p * p <= inside {
        while inside % (p * p) == 0 {
            inside /= p * p;
            outside *= p;
        }
        p += 1;
    }
    (outside, inside)
}

impl QuadSurd {
    pub fn rational(a: Ratio<i64>) -> QuadSurd {
        QuadSurd {
            a,
            b: Ratio::from_integer(0),
            d: 1,
        }
    }

    pub fn integer(a: i64) -> QuadSurd {
        QuadSurd::rational(Ratio::from_integer(a))
    }

    /// `a + b sqrt(n)` for any `n >= 0`, normalized.
    pub fn new(a: Ratio<i64>, b: Ratio<i64>, n: i64) -> QuadSurd {
        let (outside, inside) = squarefree_split(n);
        let b = b * outside;
        if inside <= 1 || b == Ratio::from_integer(0) {
            let extra = if inside == 1 { b } else { Ratio::from_integer(0) };
            QuadSurd::rational(a + extra)
        } else {
            QuadSurd { a, b, d: inside }
        }
    }

    pub fn rational_part(&self) -> Ratio<i64> {
        self.a
    }

    pub fn surd_coefficient(&self) -> Ratio<i64> {
        self.b
    }

    pub fn radicand(&self) -> i64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b == Ratio::from_integer(0)
    }

    pub fn to_integer(&self) -> Option<i64> {
        (self.is_rational() && self.a.is_integer()).then(|| self.a.to_integer())
    }

    pub fn to_f64(&self) -> f64 {
        let r = |x: Ratio<i64>| *x.numer() as f64 / *x.denom() as f64;
        r(self.a) + r(self.b) * (self.d as f64).sqrt()
    }

    fn radicand_with(&self, other: &QuadSurd) -> i64 {
        match (self.is_rational(), other.is_rational()) {
            (true, _) => other.d,
            (_, true) => self.d,
            _ => {
                assert_eq!(self.d, other.d, "surds over different radicands");
                self.d
            }
        }
    }
}

impl Add for QuadSurd {
    type Output = QuadSurd;
    fn add(self, o: QuadSurd) -> QuadSurd {
        let d = self.radicand_with(&o);
        QuadSurd::new(self.a + o.a, self.b + o.b, d)
    }
}

impl Neg for QuadSurd {
    type Output = QuadSurd;
    fn neg(self) -> QuadSurd {
        QuadSurd {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl Sub for QuadSurd {
    type Output = QuadSurd;
    fn sub(self, o: QuadSurd) -> QuadSurd {
        self + (-o)
    }
}

impl Mul for QuadSurd {
    type Output = QuadSurd;
    fn mul(self, o: QuadSurd) -> QuadSurd {
        let d = self.radicand_with(&o);
        QuadSurd::new(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)
    }
}

impl fmt::Debug for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.a);
        }
        let sign = if self.b < Ratio::from_integer(0) { '-' } else { '+' };
        let b = if self.b < Ratio::from_integer(0) {
            -self.b
        } else {
            self.b
        };
        let coeff = if b == Ratio::from_integer(1) {
            String::new()
        } else {
            format!("{b}*")
        };
        if self.a == Ratio::from_integer(0) {
            let lead = if sign == '-' { "-" } else { "" };
            write!(f, "{lead}{coeff}sqrt({})", self.d)
        } else {
            write!(f, "{} {sign} {coeff}sqrt({})", self.a, self.d)
        }
    }
}

/// Restricted eigenvalues and their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    pub theta2: QuadSurd,
    pub thetav: QuadSurd,
    pub f: usize,
    pub g: usize,
}

pub fn spectrum(p: &SrgParams) -> Result<Spectrum, SrgError> {
    let a = p.lambda_minus_mu();
    let disc = p.discriminant();
    let half = Ratio::new(1, 2);
    let theta2 = QuadSurd::new(Ratio::from_integer(a) * half, half, disc);
    let thetav = QuadSurd::new(Ratio::from_integer(a) * half, -half, disc);

    let v1 = p.v as i64 - 1;
    let numer = 2 * p.k as i64 + v1 * a;
    let (f, g) = if numer == 0 {
        if v1 % 2 != 0 {
            return Err(SrgError::InfeasibleMultiplicities);
        }
        (v1 / 2, v1 / 2)
    } else {
        let root = (disc as f64).sqrt().round() as i64;
        if root * root != disc || numer % root != 0 {
            return Err(SrgError::InfeasibleMultiplicities);
        }
        let twice_f = v1 - numer / root;
        if twice_f % 2 != 0 || twice_f < 0 || twice_f > 2 * v1 {
            return Err(SrgError::InfeasibleMultiplicities);
        }
        (twice_f / 2, v1 - twice_f / 2)
    };
    Ok(Spectrum {
        theta2,
        thetav,
        f: f as usize,
        g: g as usize,
    })
}

/// Returned when the complement is disconnected; the parameters are still computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("complement {0} is disconnected")]
pub struct ComplementDisconnected(pub SrgParams);

/// `(v, v-k-1, v-2k+mu-2, v-2k+lambda)`.
pub fn complement_params(p: &SrgParams) -> Result<SrgParams, ComplementDisconnected> {
    let v = p.v;
    let params = SrgParams {
        v,
        k: v - p.k - 1,
        lambda: v + p.mu - 2 * p.k - 2,
        mu: v + p.lambda - 2 * p.k,
    };
    if params.mu == 0 {
        Err(ComplementDisconnected(params))
    } else {
        Ok(params)
    }
}

/// Checks degree and common-neighbor counts over all pairs.
pub fn srg_check(g: &Graph) -> Result<SrgParams, SrgError> {
    let n = g.order();
    if g.is_complete() {
        return Err(SrgError::CompleteGraph);
    }
    if !g.is_connected() {
        return Err(SrgError::Disconnected);
    }
    let k = g.degree(0);
    if let Some(u) = (0..n).find(|&u| g.degree(u) != k) {
        return Err(SrgError::NotRegular {
            vertex: u,
            degree: g.degree(u),
            expected: k,
        });
    }
    let mut lambda = None;
    let mut mu = None;
    for u in 0..n {
        for w in u + 1..n {
            let slot = if g.has_edge(u, w) { &mut lambda } else { &mut mu };
            let c = g.common_neighbors(u, w);
            match *slot {
                None => *slot = Some(c),
                Some(x) if x != c => return Err(SrgError::NotStronglyRegular(u, w)),
                _ => {}
            }
        }
    }
    let (lambda, mu) = (lambda.unwrap_or(0), mu.unwrap_or(0));
    SrgParams::new(n, k, lambda, mu)
}

/// `4 a b mu / ((lambda - mu)^2 + 4 (k - mu))`: a lower bound on any separator
/// whose sides have sizes `a` and `b`.
pub fn haemers_lower_bound(p: &SrgParams, a: usize, b: usize) -> Ratio<i64> {
    let disc = p.discriminant();
    if a == 0 || b == 0 || disc == 0 {
        return Ratio::from_integer(0);
    }
    Ratio::new(4 * a as i64 * b as i64 * p.mu as i64, disc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    /// `v <= 2k - lambda + 2`.
    SmallOrder,
    /// `4 (k - 2 lambda)(k - mu) > (lambda - mu)^2 (2k - lambda - 3)`.
    HaemersThree,
    /// `lambda - mu` in {-1, 0, 1} and `k >= 2 lambda + 1`.
    NearEqualLambdaMu,
    /// `theta2 < sqrt(2)`.
    Theta2BelowSqrt2,
}

impl Rule {
    pub const ALL: [Rule; 4] = [
        Rule::SmallOrder,
        Rule::HaemersThree,
        Rule::NearEqualLambdaMu,
        Rule::Theta2BelowSqrt2,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Rule::SmallOrder => "small_order",
            Rule::HaemersThree => "haemers_three",
            Rule::NearEqualLambdaMu => "near_equal_lambda_mu",
            Rule::Theta2BelowSqrt2 => "theta2_below_sqrt2",
        }
    }

    pub fn from_name(name: &str) -> Option<Rule> {
        Rule::ALL.into_iter().find(|r| r.name() == name)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleOutcome {
    pub rule: Rule,
    pub holds: bool,
    pub evidence: String,
}

/// Exact test of `(a + sqrt(d)) / 2 < sqrt(2)`.
fn theta2_below_sqrt2(a: i64, d: i64) -> bool {
    // squaring: 2 a sqrt(d) < 8 - a^2 - d
    let rhs = 8 - a * a - d;
    let (a, d, rhs) = (a as i128, d as i128, rhs as i128);
    if a < 0 && a * a > d {
        // theta2 < 0
        return true;
    }
    if a >= 0 {
        rhs >= 0 && 4 * a * a * d < rhs * rhs
    } else {
        rhs > 0 || 4 * a * a * d > rhs * rhs
    }
}

pub fn sufficiency_rules(p: &SrgParams) -> Vec<RuleOutcome> {
    let (v, k, l, m) = (p.v as i64, p.k as i64, p.lambda as i64, p.mu as i64);
    let a = l - m;
    let d = p.discriminant();
    Rule::ALL
        .into_iter()
        .map(|rule| {
            let (holds, evidence) = match rule {
                Rule::SmallOrder => {
                    let bound = 2 * k - l + 2;
                    (v <= bound, format!("v={v}, 2k-lambda+2={bound}"))
                }
                Rule::HaemersThree => {
                    let lhs = 4 * (k - 2 * l) * (k - m);
                    let rhs = a * a * (2 * k - l - 3);
                    (
                        lhs > rhs,
                        format!("4(k-2lambda)(k-mu)={lhs}, (lambda-mu)^2(2k-lambda-3)={rhs}"),
                    )
                }
                Rule::NearEqualLambdaMu => (
                    (-1..=1).contains(&a) && k > 2 * l,
                    format!("lambda-mu={a}, k={k}, 2lambda+1={}", 2 * l + 1),
                ),
                Rule::Theta2BelowSqrt2 => {
                    let theta2 = QuadSurd::new(Ratio::new(a, 2), Ratio::new(1, 2), d);
                    (theta2_below_sqrt2(a, d), format!("theta2={theta2}"))
                }
            };
            RuleOutcome { rule, holds, evidence }
        })
        .collect()
}

/// Rules among [`sufficiency_rules`] that hold, in [`Rule::ALL`] order.
pub fn rules_fired(p: &SrgParams) -> Vec<Rule> {
    sufficiency_rules(p)
        .into_iter()
        .filter(|o| o.holds)
        .map(|o| o.rule)
        .collect()
}

/// `floor(1 + k / (-theta_v))`.
pub fn delsarte_clique_bound(p: &SrgParams) -> usize {
    // largest m >= 0 with m (sqrt(D) - a) <= 2k, i.e. m sqrt(D) <= 2k + m a
    let a = p.lambda_minus_mu() as i128;
    let d = p.discriminant() as i128;
    let k2 = 2 * p.k as i128;
    let fits = |m: i128| {
        let rhs = k2 + m * a;
        rhs >= 0 && m * m * d <= rhs * rhs
    };
    let mut m = 0;
    while fits(m + 1) {
        m += 1;
    }
    (m + 1) as usize
}

/// Largest adjacency eigenvalue (0 for the empty graph).
pub fn spectral_radius(g: &Graph) -> f64 {
    let n = g.order();
    if n == 0 {
        return 0.0;
    }
    let a = DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    a.symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, f64::max)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictStatus {
    /// No separator leaves only non-singleton components.
    OkNoValidCut,
    /// `kappa2 = 2k - lambda - 2`.
    OkEquality,
    /// `kappa2 > 2k - lambda - 2`.
    OkAboveBound,
    /// Not computed, but a sufficiency rule holds.
    OkByRule,
    /// `kappa2 < 2k - lambda - 2`.
    Counterexample,
    Undecided,
}

impl VerdictStatus {
    pub fn name(&self) -> &'static str {
        match self {
            VerdictStatus::OkNoValidCut => "OK_NoValidCut",
            VerdictStatus::OkEquality => "OK_Equality",
            VerdictStatus::OkAboveBound => "OK_AboveBound",
            VerdictStatus::OkByRule => "OK_ByRule",
            VerdictStatus::Counterexample => "Counterexample",
            VerdictStatus::Undecided => "Undecided",
        }
    }

    pub fn is_ok(&self) -> bool {
        !matches!(self, VerdictStatus::Counterexample | VerdictStatus::Undecided)
    }
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of the search for `kappa2`, as consumed by [`Verdict::decide`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Value(usize, CutCertificate),
    NoValidCut,
    NotClosed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: VerdictStatus,
    /// First rule in [`Rule::ALL`] order that holds, if any.
    pub rule: Option<Rule>,
    pub rules_fired: Vec<Rule>,
    pub kappa2: Option<usize>,
    pub bound: usize,
    pub certificate: Option<CutCertificate>,
}

impl Verdict {
    pub fn decide(p: &SrgParams, outcome: SearchOutcome) -> Verdict {
        let fired = rules_fired(p);
        let bound = p.edge_neighborhood_size();
        let (status, kappa2, certificate) = match outcome {
            SearchOutcome::NoValidCut => (VerdictStatus::OkNoValidCut, None, None),
            SearchOutcome::Value(value, cert) => {
                let status = match value.cmp(&bound) {
                    std::cmp::Ordering::Less => VerdictStatus::Counterexample,
                    std::cmp::Ordering::Equal => VerdictStatus::OkEquality,
                    std::cmp::Ordering::Greater => VerdictStatus::OkAboveBound,
                };
                (status, Some(value), Some(cert))
            }
            SearchOutcome::NotClosed if !fired.is_empty() => (VerdictStatus::OkByRule, None, None),
            SearchOutcome::NotClosed => (VerdictStatus::Undecided, None, None),
        };
        Verdict {
            status,
            rule: fired.first().copied(),
            rules_fired: fired,
            kappa2,
            bound,
            certificate,
        }
    }
}

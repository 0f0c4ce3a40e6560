//! Verification reports: named identity checks with exact witness values.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bigint_serde::format_rational;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::generators;
use crate::homology::{self, HomologyProfile, LinkCertifier};
use crate::invariants::{self, SphereInvariants};
use crate::polynomial::{rational, IntPolynomial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// A conjectured sign failed: a counterexample candidate, not a bug.
    Finding,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub name: String,
    #[serde(with = "crate::bigint_serde::rational")]
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub status: CheckStatus,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub complex: String,
    pub checks: Vec<IdentityCheck>,
    /// Suites left out because they do not apply to this complex.
    pub skipped: Vec<String>,
}

impl VerificationReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn has_findings(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Finding)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    DehnSommerville,
    Theorem,
    Links,
    Gamma,
    Joins,
    Conjecture,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::DehnSommerville,
        Suite::Gamma,
        Suite::Theorem,
        Suite::Links,
        Suite::Joins,
        Suite::Conjecture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::DehnSommerville => "ds",
            Suite::Theorem => "theorem",
            Suite::Links => "links",
            Suite::Gamma => "gamma",
            Suite::Joins => "joins",
            Suite::Conjecture => "conjecture",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = match s {
            "dehn-sommerville" => "ds",
            "link-derivative" => "links",
            other => other,
        };
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?} (expected all, ds, theorem, links, gamma, joins, conjecture)"))
    }
}

/// Parses a comma-separated suite list; `all` expands to every suite.
pub fn parse_suites(text: &str) -> Result<(Vec<Suite>, bool), String> {
    if text.trim() == "all" {
        return Ok((Suite::ALL.to_vec(), false));
    }
    let suites = text.split(',').map(|s| s.trim().parse()).collect::<Result<Vec<_>, _>>()?;
    Ok((suites, true))
}

fn witness(name: &str, value: Rational) -> Witness {
    Witness { name: name.to_string(), value }
}

fn int(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

fn check(identity: &str, ok: bool, witnesses: Vec<Witness>) -> IdentityCheck {
    let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
    IdentityCheck { identity: identity.to_string(), status, witnesses }
}

/// Lazily computed facts shared between suites.
struct Subject<'a> {
    complex: &'a SimplicialComplex,
    sphere: Option<bool>,
    ghs: Option<bool>,
}

impl<'a> Subject<'a> {
    fn new(complex: &'a SimplicialComplex) -> Self {
        Self { complex, sphere: None, ghs: None }
    }

    fn is_sphere(&mut self) -> bool {
        *self.sphere.get_or_insert_with(|| homology::is_homology_sphere(self.complex))
    }

    fn is_ghs(&mut self) -> bool {
        if !self.is_sphere() {
            return false;
        }
        *self.ghs.get_or_insert_with(|| LinkCertifier::default().certify(self.complex))
    }

    fn even(&self) -> bool {
        self.complex.dim() % 2 == 0
    }
}

/// Runs the requested suites. With `explicit`, a suite that does not apply
/// is an error; otherwise it is listed under `skipped`.
pub fn verify(
    complex: &SimplicialComplex,
    name: &str,
    suites: &[Suite],
    explicit: bool,
) -> Result<VerificationReport> {
    if complex.is_void() {
        return Err(Error::EmptyComplex);
    }
    let mut subject = Subject::new(complex);
    let mut report = VerificationReport { complex: name.to_string(), checks: Vec::new(), skipped: Vec::new() };
    for &suite in suites {
        match run_suite(&mut subject, suite) {
            Ok(checks) => report.checks.extend(checks),
            Err(e @ (Error::NotASphere(_) | Error::WrongParity { .. })) => {
                if explicit {
                    return Err(e);
                }
                report.skipped.push(format!("{}: {e}", suite.name()));
            }
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

fn run_suite(s: &mut Subject<'_>, suite: Suite) -> Result<Vec<IdentityCheck>> {
    let c = s.complex;
    let m = (c.dim() + 1) as usize;
    let minus_one = BigInt::from(-1);
    let minus_half = rational(-1, 2);
    match suite {
        Suite::DehnSommerville => {
            if !s.is_sphere() {
                return Err(Error::NotASphere("homology sphere"));
            }
            let h = invariants::h_polynomial(c);
            let mut checks = vec![check(
                "dehn-sommerville: h palindromic",
                h.is_palindromic(m),
                vec![witness("h(-1)", int(h.eval_int(&minus_one)))],
            )];
            let f_half = invariants::orbifold_euler(c);
            if m % 2 == 1 {
                checks.push(check(
                    "dehn-sommerville: f(-1/2) = 0",
                    f_half.is_zero(),
                    vec![witness("f(-1/2)", f_half)],
                ));
            }
            let rec = invariants::orbifold_euler_record(c);
            checks.push(check(
                "normalization: f(-1/2) = h(-1)/2^m",
                rec.consistent,
                vec![
                    witness("f(-1/2)", rec.f_at_minus_half),
                    witness("h(-1)", rec.h_at_minus_one),
                    witness("2^m", rec.two_pow_m),
                ],
            ));
            Ok(checks)
        }
        Suite::Theorem => {
            if !s.even() {
                return Err(Error::WrongParity { expected: "even", dim: c.dim() });
            }
            if !s.is_ghs() {
                return Err(Error::NotASphere("generalized homology sphere"));
            }
            let w = invariants::theorem_sides(c)?;
            Ok(vec![check(
                "h~ link identity: (-1)^d h~(-1) = 1/2 sum_v (-1)^d h_Lk(v)(-1)",
                w.equal,
                vec![
                    witness("lhs", w.lhs),
                    witness("rhs", w.rhs),
                    witness("link_sum", w.link_sum),
                    witness("constant", invariants::theorem_constant()),
                ],
            )])
        }
        Suite::Links => {
            let lhs = invariants::link_f_polynomial_sum(c);
            let rhs = c.f_polynomial().derivative();
            Ok(vec![check(
                "links: sum_v f_Lk(v) = f'",
                lhs == rhs,
                vec![
                    witness("sum_v f_Lk(v)(-1/2)", lhs.eval_rational(&minus_half)),
                    witness("f'(-1/2)", rhs.eval_rational(&minus_half)),
                    witness("sum_v f_Lk(v)(1)", lhs.eval_rational(&rational(1, 1))),
                ],
            )])
        }
        Suite::Gamma => {
            if !s.is_sphere() {
                return Err(Error::NotASphere("homology sphere"));
            }
            let h = invariants::h_polynomial(c);
            let gamma = h.gamma_expand(m)?;
            let mut witnesses: Vec<Witness> = gamma
                .gammas()
                .iter()
                .enumerate()
                .map(|(i, g)| witness(&format!("gamma_{i}"), int(g.clone())))
                .collect();
            let mut checks = vec![check("gamma: expansion reconstructs h", gamma.reconstruct() == h, witnesses.clone())];
            if s.even() {
                let d = c.dim() as usize / 2;
                let ht = h.divide_exact_by_one_plus_t()?;
                let sign = if d.is_multiple_of(2) { BigInt::from(1) } else { BigInt::from(-1) };
                let lhs = int(sign * ht.eval_int(&minus_one));
                let top = int(gamma.top().clone());
                witnesses = vec![witness("(-1)^d h~(-1)", lhs.clone()), witness("gamma_d", top.clone())];
                checks.push(check("gamma: gamma_d = (-1)^d h~(-1)", lhs == top, witnesses));
            }
            Ok(checks)
        }
        Suite::Joins => {
            let mut checks = Vec::new();
            for (label, other) in [("S0", generators::two_points()), ("C5", generators::cycle(5)?)] {
                let joined = c.join(&other)?;
                let hk = invariants::h_polynomial(c);
                let hl = invariants::h_polynomial(&other);
                let hj = invariants::h_polynomial(&joined);
                checks.push(check(
                    &format!("joins: h(K*{label}) = h(K) h({label})"),
                    hj == &hk * &hl,
                    vec![witness("h(K*L)(1)", int(hj.eval_int(&BigInt::from(1))))],
                ));
                let fj = joined.f_polynomial();
                checks.push(check(
                    &format!("joins: f(K*{label}) = f(K) f({label})"),
                    fj == c.f_polynomial() * other.f_polynomial(),
                    vec![witness("f(K*L)(-1/2)", fj.eval_rational(&minus_half))],
                ));
            }
            if !s.even() && s.is_sphere() {
                // forward direction: h~ of the suspension is h of the base
                let susp = c.suspension()?;
                let ht = invariants::h_tilde(&susp)?;
                let h = invariants::h_polynomial(c);
                checks.push(check(
                    "joins: h~(susp K) = h(K)",
                    ht == h,
                    vec![witness("h~(susp K)(-1)", int(ht.eval_int(&minus_one)))],
                ));
            }
            Ok(checks)
        }
        Suite::Conjecture => {
            if !s.is_sphere() {
                return Err(Error::NotASphere("homology sphere"));
            }
            if !c.is_flag() {
                return Err(Error::NotASphere("flag homology sphere"));
            }
            let (identity, value) = if s.even() {
                if !s.is_ghs() {
                    return Err(Error::NotASphere("generalized homology sphere"));
                }
                ("conjecture: (-1)^d h~(-1) >= 0", invariants::theorem_sides(c)?.lhs)
            } else {
                ("conjecture: (-1)^d h(-1) >= 0", invariants::charney_davis_value(c)?)
            };
            let status = if value.is_negative() { CheckStatus::Finding } else { CheckStatus::Pass };
            Ok(vec![IdentityCheck {
                identity: identity.to_string(),
                status,
                witnesses: vec![witness("value", value)],
            }])
        }
    }
}

/// Everything `analyze` reports about one complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub complex: String,
    pub vertex_count: usize,
    pub is_flag: bool,
    pub degree_sequence: Vec<usize>,
    pub euler_characteristic: i64,
    pub homology: HomologyProfile,
    pub is_homology_sphere: bool,
    pub is_generalized_homology_sphere: bool,
    pub invariants: SphereInvariants,
    /// Conjectured sign for flag spheres; `None` when it does not apply.
    pub conjectured_sign: Option<bool>,
}

pub fn analyze_report(complex: &SimplicialComplex, name: &str) -> Result<AnalysisReport> {
    let inv = invariants::analyze(complex)?;
    let homology = homology::reduced_homology(complex);
    let is_homology_sphere = homology::is_homology_sphere(complex);
    let is_ghs = is_homology_sphere
        && (inv.theorem.is_some() || LinkCertifier::default().certify(complex));
    let is_flag = complex.is_flag();
    let conjectured_sign = if is_flag && is_ghs { invariants::conjectured_sign_holds(&inv) } else { None };
    Ok(AnalysisReport {
        complex: name.to_string(),
        vertex_count: complex.vertex_count(),
        is_flag,
        degree_sequence: complex.degree_sequence(),
        euler_characteristic: complex.euler_characteristic(),
        homology,
        is_homology_sphere,
        is_generalized_homology_sphere: is_ghs,
        invariants: inv,
        conjectured_sign,
    })
}

fn coeff_list(p: &IntPolynomial) -> String {
    let items: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
    format!("({})", items.join(","))
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inv = &self.invariants;
        let mut out = String::new();
        writeln!(out, "complex: {}", self.complex)?;
        writeln!(out, "vertices: {}  dim: {}  m: {}", self.vertex_count, inv.dim, inv.m)?;
        let fv: Vec<String> = inv.f_vector.counts().iter().map(ToString::to_string).collect();
        writeln!(out, "f-vector: ({})", fv.join(","))?;
        writeln!(out, "f(t) = {}", inv.f_poly)?;
        writeln!(out, "h(t) = {}  h = {}", inv.h_poly, coeff_list(&inv.h_poly))?;
        if let Some(ht) = &inv.h_tilde {
            writeln!(out, "h~(t) = {}  h~ = {}", ht, coeff_list(ht))?;
        }
        match &inv.gamma {
            Some(g) => {
                let gs: Vec<String> = g.gammas().iter().map(ToString::to_string).collect();
                writeln!(out, "gamma = ({})", gs.join(","))?;
            }
            None => writeln!(out, "gamma: h is not palindromic")?,
        }
        if let Some(cd) = &inv.cd_value {
            writeln!(out, "cd_value (-1)^d h(-1) = {}", format_rational(cd))?;
        }
        let e = &inv.orbifold_euler;
        writeln!(
            out,
            "orbifold euler f(-1/2) = {}  h(-1) = {}  h(-1)/2^m consistent: {}",
            format_rational(&e.f_at_minus_half),
            format_rational(&e.h_at_minus_one),
            e.consistent
        )?;
        writeln!(out, "flag: {}", self.is_flag)?;
        let betti: Vec<String> = self.homology.betti_numbers().iter().map(ToString::to_string).collect();
        writeln!(
            out,
            "reduced betti: ({})  torsion: {}",
            betti.join(","),
            if self.homology.has_torsion() { "yes" } else { "none" }
        )?;
        writeln!(out, "homology sphere: {}", self.is_homology_sphere)?;
        writeln!(out, "generalized homology sphere: {}", self.is_generalized_homology_sphere)?;
        writeln!(out, "dehn-sommerville: {}", if inv.dehn_sommerville { "pass" } else { "fail" })?;
        writeln!(out, "link-derivative: {}", if inv.link_derivative { "pass" } else { "fail" })?;
        if let Some(w) = &inv.theorem {
            writeln!(
                out,
                "h~ link identity: lhs = {}  rhs = {}  {}",
                format_rational(&w.lhs),
                format_rational(&w.rhs),
                if w.equal { "pass" } else { "FAIL" }
            )?;
        }
        match self.conjectured_sign {
            Some(true) => writeln!(out, "conjectured sign: holds")?,
            Some(false) => writeln!(out, "FINDING: conjectured sign violated")?,
            None => {}
        }
        f.write_str(&out)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "complex: {}", self.complex)?;
        for c in &self.checks {
            let status = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Finding => "FINDING",
            };
            let ws: Vec<String> =
                c.witnesses.iter().map(|w| format!("{} = {}", w.name, format_rational(&w.value))).collect();
            writeln!(f, "{status:7} {}  [{}]", c.identity, ws.join(", "))?;
        }
        for s in &self.skipped {
            writeln!(f, "SKIP    {s}")?;
        }
        Ok(())
    }
}

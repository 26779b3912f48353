//! Verification suites: each sweep returns a [`SuiteReport`] with one line
//! per check, so the CLI and tests share the same logic.

use serde::Serialize;

use crate::appell::{value_at_one, AppellTable};
use crate::arith::{fmt_rational, int, to_f64, Rational};
use crate::axial::{radial_lower_even, radial_lower_odd, BivariatePoly};
use crate::error::Result;
use crate::fueter::{beta, fueter_sce_monomial};
use crate::polycheck::is_monogenic_axial;
use crate::series::hypergeometric::{closed_form_eval, closed_form_series, SumControl};
use crate::series::{
    recurrence_check, shifted_formula_discrepancies, solve_recurrence, ClassParameters, SeriesSpec,
};

/// Largest degree and dimension the multivariate oracle is run at.
pub const POLYCHECK_MAX_DEGREE: usize = 8;
pub const POLYCHECK_MAX_DIMENSION: usize = 5;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        Self {
            suite: suite.to_string(),
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn push(&mut self, label: String, passed: bool, detail: String) {
        self.checks.push(Check { label, passed, detail });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn merge(&mut self, other: SuiteReport) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                out.push_str(&format!("{status} {}\n", c.label));
            } else {
                out.push_str(&format!("{status} {}: {}\n", c.label, c.detail));
            }
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        let failed = self.failures().count();
        out.push_str(&format!(
            "{}: {} ({} checks, {} failed)\n",
            self.suite,
            if failed == 0 { "PASS" } else { "FAIL" },
            self.checks.len(),
            failed
        ));
        out
    }
}

/// Builds the coefficient table, negating `c_n^flip` when requested.
pub fn table(n: usize, k_max: usize, flip: Option<usize>) -> Result<AppellTable> {
    let t = AppellTable::new(n, k_max)?;
    Ok(match flip {
        Some(k) => t.with_flipped(k),
        None => t,
    })
}

/// `tau_n[z^{k+n-1}] == P_k^n` for `k <= k_max`, exact.
pub fn theorem1(n: usize, k_max: usize, flip: Option<usize>) -> Result<SuiteReport> {
    let t = table(n, k_max, flip)?;
    let mut rep = SuiteReport::new("theorem1");
    for k in 0..=k_max {
        let tau = fueter_sce_monomial(n, k + n - 1, true)?;
        let p = t.polynomial(k)?;
        let equal = tau == p;
        let detail = if equal { String::new() } else { format!("tau = {tau}, P = {p}") };
        rep.push(format!("n={n} k={k} tau[z^{}] == P_{k}", k + n - 1), equal, detail);
    }
    Ok(rep)
}

/// `tau_n[z^k] == 0` for `k < n-1`.
pub fn vanishing(n: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("vanishing");
    for k in 0..n - 1 {
        let tau = fueter_sce_monomial(n, k, true)?;
        rep.push(format!("n={n} k={k} tau[z^{k}] == 0"), tau.is_zero(), String::new());
    }
    Ok(rep)
}

/// Axial residual for `k <= k_max`, plus the multivariate oracle up to
/// degree [`POLYCHECK_MAX_DEGREE`] when `n <= POLYCHECK_MAX_DIMENSION`.
pub fn monogenic(n: usize, k_max: usize, flip: Option<usize>) -> Result<SuiteReport> {
    let t = table(n, k_max, flip)?;
    let mut rep = SuiteReport::new("monogenic");
    for k in 0..=k_max {
        let p = t.polynomial(k)?;
        let (s, w) = p.vekua_residual()?;
        let ok = s.is_zero() && w.is_zero();
        let detail = if ok {
            String::new()
        } else {
            format!("residual scalar {} omega {}", poly_text(&s), poly_text(&w))
        };
        rep.push(format!("n={n} k={k} vekua(P_{k}) == 0"), ok, detail);
        if n <= POLYCHECK_MAX_DIMENSION && k <= POLYCHECK_MAX_DEGREE {
            rep.push(
                format!("n={n} k={k} D P_{k} == 0 (expanded)"),
                is_monogenic_axial(&p)?,
                String::new(),
            );
        }
    }
    Ok(rep)
}

fn poly_text(p: &BivariatePoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.terms()
        .map(|(&(i, j), c)| format!("{} x0^{i} r^{j}", fmt_rational(c)))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// `d/dx0 P_k == k P_{k-1}` and `P_k(1) == 1` for `k <= k_max`.
pub fn appell_property(n: usize, k_max: usize, flip: Option<usize>) -> Result<SuiteReport> {
    let t = table(n, k_max, flip)?;
    let mut rep = SuiteReport::new("appell-property");
    let mut prev: Option<crate::axial::AxialPolynomial> = None;
    for k in 0..=k_max {
        let p = t.polynomial(k)?;
        if let Some(prev) = &prev {
            let ok = p.derivative_x0() == prev.scale(&int(k as i64));
            rep.push(format!("n={n} k={k} d/dx0 P_{k} == {k} P_{}", k - 1), ok, String::new());
        }
        let at_one = value_at_one(&p)?;
        let ok = at_one == int(1);
        rep.push(
            format!("n={n} k={k} P_{k}(1) == 1"),
            ok,
            if ok { String::new() } else { format!("got {}", fmt_rational(&at_one)) },
        );
        prev = Some(p);
    }
    Ok(rep)
}

pub fn recurrence(n: usize, f: &SeriesSpec, k_max: usize) -> Result<SuiteReport> {
    let r = recurrence_check(n, f, k_max)?;
    let mut rep = SuiteReport::new("recurrence");
    let gamma = match &r.gamma {
        Some(g) => format!("gamma={}", fmt_rational(g)),
        None => "gamma unconstrained".to_string(),
    };
    let detail = match &r.first_violation {
        None => gamma,
        Some(v) => format!(
            "{gamma}; first violation at k={}: a_{} = {} but recurrence gives {}",
            v.k,
            v.k + n - 1,
            fmt_rational(&v.lhs),
            fmt_rational(&v.rhs)
        ),
    };
    rep.push(format!("{} n={n} K={k_max}", f.name), r.holds, detail);
    Ok(rep)
}

/// Radial operators on `r^j` against the closed beta formula, `j <= j_max`.
pub fn beta_operators(n: usize, j_max: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("beta");
    for j in 0..=j_max {
        let mut p = BivariatePoly::monomial(int(1), 0, j as u32);
        for _ in 0..(n - 1) / 2 {
            p = if j % 2 == 0 { radial_lower_even(&p)? } else { radial_lower_odd(&p)? };
        }
        let b = beta(n, j)?;
        let expected = if b.is_zero { BivariatePoly::zero() } else { b.as_poly() };
        let at_zero = p.coeff(0, 0);
        let ok = p == expected && at_zero == b.value_at_zero();
        rep.push(format!("n={n} j={j} beta"), ok, String::new());
    }
    Ok(rep)
}

/// Closed form against the recurrence solution: exact Taylor coefficients up
/// to `m_max`, the value at zero, and float values at `points`.
pub fn closed_form(
    params: &ClassParameters,
    m_max: usize,
    points: &[Rational],
    control: SumControl,
) -> Result<SuiteReport> {
    let n = params.n;
    let mut rep = SuiteReport::new("closed-form");
    let solved = solve_recurrence(params, m_max);
    let from_closed = closed_form_series(params, m_max)?;
    rep.push(
        format!("n={n} Taylor coefficients up to {m_max}"),
        solved == from_closed,
        String::new(),
    );
    let initial_ok = solved.iter().take(n - 1).eq(params.initial.iter());
    rep.push(format!("n={n} l=0 reproduces initial values"), initial_ok, String::new());
    let rec = recurrence_check(n, &SeriesSpec::class(params.clone()), m_max)?;
    rep.push(format!("n={n} solution satisfies the recurrence"), rec.holds, String::new());
    let at_zero = closed_form_eval(params, 0.0, control)?;
    let a0 = to_f64(&params.initial[0]);
    rep.push(
        format!("n={n} f(0) == a_0"),
        at_zero == a0,
        format!("{at_zero} vs {a0}"),
    );
    for z in points {
        let zf = to_f64(z);
        let value = closed_form_eval(params, zf, control)?;
        let direct = direct_sum(params, zf, control);
        let err = (value - direct).abs() / direct.abs().max(1.0);
        rep.push(
            format!("n={n} z={}", fmt_rational(z)),
            err <= control.tolerance,
            format!("closed form {value:.15e}, series {direct:.15e}, error {err:.1e}"),
        );
    }
    for d in shifted_formula_discrepancies(params) {
        if !d.agree {
            rep.notes.push(format!(
                "a_{} (l={}, r={}): recurrence solution {} vs ((l+1)(n-1)+r)! denominator {}",
                d.index, d.l, d.r, d.solution, d.shifted
            ));
        }
    }
    Ok(rep)
}

/// `sum_k a_k z^k` from the solved coefficients until terms are negligible.
fn direct_sum(params: &ClassParameters, z: f64, control: SumControl) -> f64 {
    let mut sum = 0.0;
    let mut small_run = 0;
    for m in 0..control.max_terms.max(4 * params.n) {
        let term = to_f64(&params.coefficient(m)) * z.powi(m as i32);
        sum += term;
        if term.abs() <= control.tolerance / 10.0 * sum.abs().max(1.0) {
            small_run += 1;
            if small_run >= params.n {
                break;
            }
        } else {
            small_run = 0;
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn suites_pass_on_clean_tables() {
        assert!(theorem1(3, 6, None).unwrap().passed());
        assert!(vanishing(5).unwrap().passed());
        assert!(monogenic(3, 6, None).unwrap().passed());
        assert!(appell_property(5, 6, None).unwrap().passed());
        assert!(beta_operators(7, 20).unwrap().passed());
        assert!(recurrence(3, &SeriesSpec::exp(), 20).unwrap().passed());
        let p = ClassParameters::exp(3).unwrap();
        let rep = closed_form(&p, 30, &[ratio(1, 2), int(2)], SumControl::default()).unwrap();
        assert!(rep.passed(), "{}", rep.to_text());
        assert!(!rep.notes.is_empty());
    }

    #[test]
    fn flipped_coefficient_is_caught() {
        assert!(!theorem1(3, 4, Some(2)).unwrap().passed());
        assert!(!monogenic(3, 4, Some(2)).unwrap().passed());
        assert!(!appell_property(3, 4, Some(0)).unwrap().passed());
    }

    #[test]
    fn report_text() {
        let rep = recurrence(3, &SeriesSpec::geometric(), 10).unwrap();
        assert!(!rep.passed());
        assert_eq!(
            rep.to_text(),
            "FAIL geometric n=3 K=10: gamma=2; first violation at k=1: a_3 = 1 but recurrence gives 1/3\n\
             recurrence: FAIL (1 checks, 1 failed)\n"
        );
    }
}

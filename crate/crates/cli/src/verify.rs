//! The identity verification suites behind `qb verify`.
//!
//! Every check records both sides in canonical form. Exact identities must
//! agree structurally; float identities carry their tolerance in the entry.

use qbern::bernstein::{
    basis_derivative, basis_eval_exact, basis_eval_real, basis_upoly, basis_upoly_expanded,
    basis_upoly_printed, combination_upoly, decasteljau_eval, degree_elevate, generating_coeffs,
    monomial_in_basis, monomial_samples, operator_apply, BernsteinIndex, OperatorMethod,
};
use qbern::euler::{
    complement_moment, complement_moment_printed, complement_moment_reflected, euler_closed,
    euler_poly, euler_poly_closed, euler_table, fermionic_convergence, fermionic_sum,
    reflection_check, shift_moment, shift_moment_rhs,
};
use qbern::integrals::{
    integral_basis, integral_basis_oracle, integral_basis_reflected,
    integral_basis_reflected_printed, integral_by_expansion, integral_power_product,
    integral_product, integral_product_printed, IntegralInstance, IntegralMethod,
};
use qbern::numeric::{binomial_q, format_rational, int, padic_valuation, rat, Valuation};
use qbern::qcore::{
    gaussian_binomial, q_factorial, q_number_int, q_number_real, stirling2,
};
use qbern::stirling::{operator_moment_upoly, q_stirling2, qstirling_expansion_upoly};
use qbern::{Rational, UPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{CliError, CliResult};
use crate::params;
use crate::report::{IdentityReport, Recorder};


pub const MAX_DEGREE: u64 = 16;
pub const MAX_FACTORS: usize = 3;
/// Highest index for the closed-form vs recurrence comparison.
pub const EULER_NMAX: usize = 20;
/// Largest `n_i` in the product sweeps.
pub const PRODUCT_NMAX: u64 = 5;
pub const PADIC_PRIME: u64 = 3;
pub const PADIC_Q: i64 = 4;
pub const PADIC_LEVELS: u32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Suite {
    All,
    Bernstein,
    Euler,
    Integrals,
    Stirling,
}

pub fn default_qs() -> Vec<Rational> {
    vec![rat(1, 2), rat(2, 3), rat(3, 5), rat(5, 4), int(3)]
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub suites: Vec<Suite>,
    pub qs: Vec<Rational>,
    /// Degree bound for Bernstein and integral sweeps.
    pub nmax: u64,
    /// Number of factors in product integrals.
    pub smax: usize,
    pub kmax: u64,
    pub include_printed: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suites: vec![Suite::All],
            qs: default_qs(),
            nmax: 12,
            smax: 3,
            kmax: 2,
            include_printed: false,
        }
    }
}

impl SuiteConfig {
    fn validate(&self) -> CliResult<()> {
        if self.qs.is_empty() {
            return Err(CliError::Usage("at least one --q is required".into()));
        }
        if self.nmax > MAX_DEGREE {
            return Err(CliError::Usage(format!("--nmax must be at most {MAX_DEGREE}")));
        }
        if self.smax == 0 || self.smax > MAX_FACTORS {
            return Err(CliError::Usage(format!("--smax must be in 1..={MAX_FACTORS}")));
        }
        for q in &self.qs {
            if *q == int(0) || *q == int(1) || *q == int(-1) {
                return Err(CliError::Domain(qbern::Error::Pole {
                    q: format_rational(q),
                    context: "the verification sample set (q must avoid 0, 1, -1)",
                }));
            }
        }
        Ok(())
    }

    fn runs(&self, suite: Suite) -> bool {
        self.suites.contains(&Suite::All) || self.suites.contains(&suite)
    }
}

/// Runs every selected suite. The report passes iff the corrected section
/// has no failures.
pub fn run_verify_suite(config: &SuiteConfig) -> CliResult<IdentityReport> {
    config.validate()?;
    let mut corrected = Recorder::new();
    let mut printed = Recorder::new();
    if config.runs(Suite::Bernstein) {
        bernstein_suite(config, &mut corrected, &mut printed)?;
    }
    if config.runs(Suite::Euler) {
        euler_suite(config, &mut corrected, &mut printed)?;
    }
    if config.runs(Suite::Integrals) {
        integrals_suite(config, &mut corrected, &mut printed)?;
    }
    if config.runs(Suite::Stirling) {
        stirling_suite(config, &mut corrected)?;
    }
    Ok(IdentityReport {
        corrected: corrected.finish(),
        printed: config.include_printed.then(|| printed.finish()),
    })
}

fn ix(k: u64, n: u64) -> BernsteinIndex {
    BernsteinIndex::new(k, n)
}

fn q_str(q: &Rational) -> String {
    format_rational(q)
}

fn operator_points() -> Vec<Rational> {
    vec![rat(1, 3), rat(2, 5), rat(7, 4)]
}

fn bernstein_suite(cfg: &SuiteConfig, rec: &mut Recorder, printed: &mut Recorder) -> CliResult<()> {
    let nmax = cfg.nmax;
    for n in 0..=nmax {
        let total: UPoly = (0..=n).map(|k| basis_upoly(ix(k, n))).sum();
        rec.exact("bernstein.partition_of_unity", params!["n" => n], &total, &UPoly::one());
        for k in 0..=n {
            let b = basis_upoly(ix(k, n));
            rec.exact("bernstein.expansion", params!["k" => k, "n" => n], &b, &basis_upoly_expanded(ix(k, n)));
            rec.exact("bernstein.symmetry", params!["k" => k, "n" => n], &basis_upoly(ix(n - k, n)).reflect(), &b);

            let [(a, ia), (c, ic)] = degree_elevate(ix(k, n));
            let elevated = &basis_upoly(ia).scale(&a) + &basis_upoly(ic).scale(&c);
            rec.exact("bernstein.degree_elevation", params!["k" => k, "n" => n], &elevated, &b);

            let coeffs = monomial_in_basis(k, n)?;
            rec.exact(
                "bernstein.monomial_in_basis",
                params!["j" => k, "n" => n],
                &combination_upoly(&coeffs),
                &UPoly::monomial(int(1), k as usize),
            );

            if n >= 1 {
                let left = basis_upoly(ix(k, n - 1));
                let right = if k == 0 { UPoly::zero() } else { basis_upoly(ix(k - 1, n - 1)) };
                let split = &(&UPoly::one_minus_u() * &left) + &(&UPoly::u() * &right);
                rec.exact("bernstein.split_recurrence", params!["k" => k, "n" => n], &split, &b);
            }
            if k >= 1 {
                let factor = Rational::new((n - k + 1).into(), k.into());
                let lhs = (&UPoly::u() * &basis_upoly(ix(k - 1, n))).scale(&factor);
                rec.exact("bernstein.ratio_rule", params!["k" => k, "n" => n], &lhs, &(&UPoly::one_minus_u() * &b));
            }
            if cfg.include_printed {
                let wrong = basis_upoly_printed(ix(k, n));
                for l in k..=n {
                    printed.exact(
                        "printed.bernstein_expansion",
                        params!["k" => k, "l" => l, "n" => n],
                        &wrong.coeff(l as usize),
                        &b.coeff(l as usize),
                    );
                }
            }
        }
    }

    let u = rat(2, 5);
    for n in 0..=nmax.min(6) {
        rec.exact(
            "bernstein.decasteljau_ones",
            params!["n" => n, "u" => q_str(&u)],
            &decasteljau_eval(&vec![int(1); n as usize + 1], &u)?,
            &int(1),
        );
        for k in 0..=n {
            let mut e = vec![int(0); n as usize + 1];
            e[k as usize] = int(1);
            rec.exact(
                "bernstein.decasteljau_unit",
                params!["k" => k, "n" => n, "u" => q_str(&u)],
                &decasteljau_eval(&e, &u)?,
                &basis_eval_exact(ix(k, n), &u),
            );
        }
    }

    for u in operator_points() {
        for n in 1..=nmax {
            for m in 0..=6u32 {
                let samples = monomial_samples(m, n);
                let p = params!["m" => m, "n" => n, "u" => q_str(&u)];
                operator_methods(rec, "bernstein.operator_monomial", p, n, &samples, &u)?;
                if n <= 10 {
                    let lhs = operator_apply(n, &samples, &u, OperatorMethod::Direct)?
                        * qbern::numeric::int_pow(&int(n as i64), m as i64)?;
                    rec.exact(
                        "bernstein.operator_stirling",
                        params!["m" => m, "n" => n, "u" => q_str(&u)],
                        &lhs,
                        &operator_moment_upoly(m as u64, n).eval(&u),
                    );
                }
            }
            let ones = vec![int(1); n as usize + 1];
            rec.exact(
                "bernstein.operator_reproduces_one",
                params!["n" => n, "u" => q_str(&u)],
                &operator_apply(n, &ones, &u, OperatorMethod::Direct)?,
                &int(1),
            );
            rec.exact(
                "bernstein.operator_reproduces_u",
                params!["n" => n, "u" => q_str(&u)],
                &operator_apply(n, &monomial_samples(1, n), &u, OperatorMethod::Direct)?,
                &u,
            );
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..20 {
        let n = rng.gen_range(1..=nmax.max(1));
        let samples: Vec<Rational> = (0..=n)
            .map(|_| rat(rng.gen_range(-50..=50), rng.gen_range(1..=20)))
            .collect();
        let u = rat(rng.gen_range(-9..=9), rng.gen_range(1..=9));
        let p = params!["n" => n, "trial" => format!("{trial:02}"), "u" => q_str(&u)];
        operator_methods(rec, "bernstein.operator_random", p, n, &samples, &u)?;
    }

    for u in [rat(1, 3), rat(2, 5)] {
        for k in 0..=4u64 {
            let coeffs = generating_coeffs(k, &u, 10);
            for (m, c) in coeffs.iter().enumerate() {
                rec.exact(
                    "bernstein.generating_series",
                    params!["k" => k, "m" => format!("{m:02}"), "u" => q_str(&u)],
                    c,
                    &basis_eval_exact(ix(k, m as u64), &u),
                );
            }
        }
    }

    float_bernstein_checks(rec)
}

fn operator_methods(
    rec: &mut Recorder,
    id: &str,
    p: std::collections::BTreeMap<String, String>,
    n: u64,
    samples: &[Rational],
    u: &Rational,
) -> CliResult<()> {
    let direct = operator_apply(n, samples, u, OperatorMethod::Direct)?;
    for method in [OperatorMethod::Kim, OperatorMethod::Difference] {
        let mut p = p.clone();
        p.insert("method".into(), method.name().into());
        rec.exact(id, p, &operator_apply(n, samples, u, method)?, &direct);
    }
    Ok(())
}

fn float_bernstein_checks(rec: &mut Recorder) -> CliResult<()> {
    let channel = basis_eval_real(ix(2, 3), 0.001, 1.0)? + basis_eval_real(ix(3, 3), 0.001, 1.0)?;
    rec.approx("bernstein.binary_channel", params!["x" => "0.001"], channel, 2.998e-6, 1e-9, false);

    let grid: Vec<f64> = (1..=9).map(|i| i as f64 / 10.0).collect();
    let h = 1e-5;
    for &q in &[0.3, 0.7] {
        for n in 0..=6u64 {
            for k in 0..=n {
                for &x in &grid {
                    let fd = (basis_eval_real(ix(k, n), x + h, q)? - basis_eval_real(ix(k, n), x - h, q)?) / (2.0 * h);
                    rec.approx(
                        "bernstein.derivative",
                        params!["k" => k, "n" => n, "q" => q, "x" => x],
                        basis_derivative(ix(k, n), x, q)?,
                        fd,
                        1e-6,
                        true,
                    );
                }
            }
        }
    }
    let q_near = 1.0 - 1e-6;
    for n in 0..=6u64 {
        for k in 0..=n {
            for &x in &grid {
                let classical = qbern::numeric::to_f64(&binomial_q(n, k as i64))
                    * x.powi(k as i32)
                    * (1.0 - x).powi((n - k) as i32);
                rec.approx(
                    "bernstein.classical_limit",
                    params!["k" => k, "n" => n, "x" => x],
                    basis_eval_real(ix(k, n), x, q_near)?,
                    classical,
                    1e-4,
                    false,
                );
            }
        }
    }
    for &q in &[0.3, 0.7, 1.5] {
        for i in 0..=10 {
            let x = i as f64 / 10.0;
            rec.approx(
                "qcore.complement_real",
                params!["q" => q, "x" => x],
                q_number_real(1.0 - x, 1.0 / q)?,
                1.0 - q_number_real(x, q)?,
                1e-12,
                false,
            );
            for n in 0..=6u64 {
                for k in 0..=n {
                    rec.approx(
                        "bernstein.symmetry_real",
                        params!["k" => k, "n" => n, "q" => q, "x" => x],
                        basis_eval_real(ix(n - k, n), 1.0 - x, 1.0 / q)?,
                        basis_eval_real(ix(k, n), x, q)?,
                        1e-12,
                        false,
                    );
                }
            }
        }
    }
    Ok(())
}

fn euler_suite(cfg: &SuiteConfig, rec: &mut Recorder, printed: &mut Recorder) -> CliResult<()> {
    let anchors = [
        (1usize, rat(1, 2), rat(-2, 3)),
        (4, rat(1, 2), rat(464, 765)),
        (4, int(2), rat(-29, 765)),
    ];
    for (n, q, expected) in anchors {
        let table = euler_table(&q, n)?;
        rec.exact("euler.anchor", params!["n" => n, "q" => q_str(&q)], table.get(n), &expected);
    }

    for q in &cfg.qs {
        let qs = q_str(q);
        let table = euler_table(q, EULER_NMAX)?;
        for n in 0..=EULER_NMAX {
            rec.exact(
                "euler.closed_vs_recurrence",
                params!["n" => format!("{n:02}"), "q" => &qs],
                &euler_closed(n, q)?,
                table.get(n),
            );
            if n >= 1 {
                let umbral: Rational = (0..=n)
                    .map(|l| binomial_q(n as u64, l as i64) * qbern::numeric::int_pow(q, l as i64).unwrap() * table.get(l))
                    .sum::<Rational>()
                    + table.get(n);
                rec.exact("euler.recurrence", params!["n" => format!("{n:02}"), "q" => &qs], &umbral, &int(0));
            }
        }
        for n in 0..=10usize {
            for x in -2..=3i64 {
                let p = params!["n" => format!("{n:02}"), "q" => &qs, "x" => x];
                rec.exact("euler.polynomial_forms", p.clone(), &euler_poly(n, x, q)?, &euler_poly_closed(n, x, q)?);
                let (a, b) = reflection_check(n, x, q)?;
                rec.exact("euler.reflection", p, &a, &b);
            }
            rec.exact(
                "euler.polynomial_at_zero",
                params!["n" => format!("{n:02}"), "q" => &qs],
                &euler_poly(n, 0, q)?,
                table.get(n),
            );
        }
        for shift in 1..=4u64 {
            for m in 0..=8usize {
                rec.exact(
                    "euler.shift_moment",
                    params!["m" => m, "q" => &qs, "shift" => shift],
                    &shift_moment(shift, m, q)?,
                    &shift_moment_rhs(shift, m, q)?,
                );
            }
        }
        for n in 0..=cfg.nmax.max(1) as usize {
            let p = params!["n" => format!("{n:02}"), "q" => &qs];
            let lhs = complement_moment(n, q)?;
            rec.exact("euler.complement_moment", p.clone(), &lhs, &complement_moment_reflected(n, q)?);
            if cfg.include_printed && n >= 1 {
                printed.exact("printed.complement_moment", p, &lhs, &complement_moment_printed(n, q)?);
            }
        }
    }
    padic_checks(rec)
}

fn padic_checks(rec: &mut Recorder) -> CliResult<()> {
    let q = int(PADIC_Q);
    let p = PADIC_PRIME;
    for (level, expected, valuation) in [(1u32, int(4), 1i64), (2, int(17476), 2)] {
        let sum = fermionic_sum(1, &q, p, level)?;
        let params = params!["level" => level, "n" => 1, "p" => p, "q" => PADIC_Q];
        rec.exact("euler.padic_anchor_sum", params.clone(), &sum, &expected);
        let target = euler_table(&q, 1)?.get(1).clone();
        rec.exact(
            "euler.padic_anchor_valuation",
            params,
            &padic_valuation(&(sum - target), p)?,
            &Valuation::Finite(valuation),
        );
    }
    for n in 0..=4usize {
        let levels = fermionic_convergence(n, &q, p, PADIC_LEVELS)?;
        let vals: Vec<Valuation> = levels.iter().map(|l| l.valuation).collect();
        let exact = vals.iter().all(|v| *v == Valuation::Infinite);
        let floor = vals.iter().zip(1i64..).all(|(v, level)| *v >= Valuation::Finite(level));
        let increasing = vals.windows(2).all(|w| w[0] < w[1]);
        let detail = vals.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        rec.holds(
            "euler.padic_convergence",
            params!["levels" => PADIC_LEVELS, "n" => n, "p" => p, "q" => PADIC_Q],
            exact || (floor && increasing),
            detail,
            "strictly increasing and >= N (or exact)",
        );
    }
    Ok(())
}

fn product_degree_sets(smax: usize) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = (0..=PRODUCT_NMAX).map(|n| vec![n]).collect();
    let mut frontier = out.clone();
    for _ in 1..smax {
        let mut next = Vec::new();
        for ns in &frontier {
            let last = *ns.last().expect("nonempty");
            for n in last..=PRODUCT_NMAX {
                let mut grown = ns.clone();
                grown.push(n);
                next.push(grown);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn ns_str(ns: &[u64]) -> String {
    ns.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn integrals_suite(cfg: &SuiteConfig, rec: &mut Recorder, printed: &mut Recorder) -> CliResult<()> {
    let h = rat(1, 2);
    rec.exact("integrals.anchor", params!["case" => "basis", "k" => 1, "n" => 2, "q" => "1/2"], &integral_basis(1, 2, &h)?, &rat(-4, 5));
    rec.exact("integrals.anchor", params!["case" => "separating", "k" => 1, "n" => 3, "q" => "1/2"], &integral_basis_reflected(1, 3, &h)?, &rat(2, 15));
    for method in [IntegralMethod::Direct, IntegralMethod::Reflected] {
        rec.exact(
            "integrals.anchor",
            params!["case" => "product", "k" => 1, "method" => method.name(), "ns" => "2,2", "q" => "1/2"],
            &integral_product(1, &[2, 2], &h, method)?,
            &rat(-16, 255),
        );
    }

    let basis_nmax = cfg.nmax.min(10);
    let degree_sets = product_degree_sets(cfg.smax);
    for q in &cfg.qs {
        let qs = q_str(q);
        for n in 0..=basis_nmax {
            let total: Rational = (0..=n).map(|k| integral_basis(k, n, q)).sum::<qbern::Result<Rational>>()?;
            rec.exact("integrals.partition_of_unity", params!["n" => format!("{n:02}"), "q" => &qs], &total, &int(1));
            for k in 0..n {
                let p = params!["k" => format!("{k:02}"), "n" => format!("{n:02}"), "q" => &qs];
                let direct = integral_basis(k, n, q)?;
                rec.exact("integrals.basis_reflected", p.clone(), &integral_basis_reflected(k, n, q)?, &direct);
                if cfg.include_printed {
                    printed.exact("printed.basis_reflected", p, &integral_basis_reflected_printed(k, n, q)?, &direct);
                }
            }
        }
        for ns in &degree_sets {
            let total: u64 = ns.iter().sum();
            for k in 0..=cfg.kmax {
                if total <= k * ns.len() as u64 {
                    continue;
                }
                let p = params!["k" => k, "ns" => ns_str(ns), "q" => &qs, "s" => ns.len()];
                let direct = integral_product(k, ns, q, IntegralMethod::Direct)?;
                rec.exact("integrals.product", p.clone(), &integral_product(k, ns, q, IntegralMethod::Reflected)?, &direct);
                if cfg.include_printed {
                    printed.exact("printed.product", p, &integral_product_printed(k, ns, q)?, &direct);
                }
            }
        }
        for k in 0..=cfg.kmax {
            for n1 in 0..=3u64 {
                for m1 in 1..=2u32 {
                    for n2 in n1..=3u64 {
                        for m2 in 1..=2u32 {
                            let inst = IntegralInstance::new(k, vec![(n1, m1), (n2, m2)], q.clone())?;
                            let p = params!["k" => k, "pairs" => format!("{n1}^{m1},{n2}^{m2}"), "q" => &qs];
                            let expanded = integral_by_expansion(&inst)?;
                            let mut pd = p.clone();
                            pd.insert("method".into(), "direct".into());
                            rec.exact("integrals.power_product", pd, &integral_power_product(&inst, IntegralMethod::Direct)?, &expanded);
                            if inst.total_degree() > k * inst.total_power() {
                                let mut pr = p;
                                pr.insert("method".into(), "reflected".into());
                                rec.exact("integrals.power_product", pr, &integral_power_product(&inst, IntegralMethod::Reflected)?, &expanded);
                            }
                        }
                    }
                }
            }
        }
    }

    let q = int(PADIC_Q);
    for n in 0..=3u64 {
        for k in 0..=n {
            let exact = integral_basis(k, n, &q)?;
            for level in 1..=4u32 {
                let approx = integral_basis_oracle(k, n, &q, PADIC_PRIME, level)?;
                let v = padic_valuation(&(approx - &exact), PADIC_PRIME)?;
                rec.holds(
                    "integrals.padic_oracle",
                    params!["k" => k, "level" => level, "n" => n, "p" => PADIC_PRIME, "q" => PADIC_Q],
                    v >= Valuation::Finite(level as i64),
                    v.to_string(),
                    ">= N",
                );
            }
        }
    }
    Ok(())
}

fn stirling_suite(cfg: &SuiteConfig, rec: &mut Recorder) -> CliResult<()> {
    let nmax = cfg.nmax.min(8);
    for q in &cfg.qs {
        let qs = q_str(q);
        for n in 0..=nmax {
            rec.exact(
                "stirling.expansion",
                params!["n" => n, "q" => &qs],
                &qstirling_expansion_upoly(n, q)?,
                &UPoly::monomial(int(1), n as usize),
            );
            for j in 0..=n {
                rec.exact(
                    "stirling.basis_composition",
                    params!["j" => j, "n" => n, "q" => &qs],
                    &combination_upoly(&monomial_in_basis(j, n)?),
                    &qstirling_expansion_upoly(j, q)?,
                );
            }
        }
        rec.exact("stirling.s32", params!["q" => &qs], &q_stirling2(3, 2, q)?, &(int(2) + q));
        for k in 1..=12u64 {
            for j in 0..=k as i64 {
                let rhs = gaussian_binomial(k - 1, j - 1, q)
                    + qbern::numeric::int_pow(q, j)? * gaussian_binomial(k - 1, j, q);
                rec.exact(
                    "qcore.q_pascal",
                    params!["j" => format!("{j:02}"), "k" => format!("{k:02}"), "q" => &qs],
                    &gaussian_binomial(k, j, q),
                    &rhs,
                );
                let quotient = q_factorial(k, q) / (q_factorial(j as u64, q) * q_factorial(k - j as u64, q));
                rec.exact(
                    "qcore.gaussian_quotient",
                    params!["j" => format!("{j:02}"), "k" => format!("{k:02}"), "q" => &qs],
                    &gaussian_binomial(k, j, q),
                    &quotient,
                );
            }
        }
        for a in -10..=10i64 {
            for b in -10..=10i64 {
                let rhs = q_number_int(a, q)? + qbern::numeric::int_pow(q, a)? * q_number_int(b, q)?;
                rec.exact(
                    "qcore.q_number_addition",
                    params!["a" => format!("{a:+03}"), "b" => format!("{b:+03}"), "q" => &qs],
                    &q_number_int(a + b, q)?,
                    &rhs,
                );
            }
        }
    }
    for n in 0..=10u64 {
        for k in 0..=10u64 {
            rec.exact(
                "stirling.classical_limit",
                params!["k" => format!("{k:02}"), "n" => format!("{n:02}")],
                &q_stirling2(n, k, &int(1))?,
                &Rational::from_integer(stirling2(n, k).into()),
            );
        }
    }
    for m in 1..=12u64 {
        for k in 1..=m {
            rec.exact(
                "qcore.stirling_recurrence",
                params!["k" => format!("{k:02}"), "m" => format!("{m:02}")],
                &stirling2(m, k),
                &(stirling2(m - 1, k) * k + stirling2(m - 1, k - 1)),
            );
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_sets_are_multisets() {
        let sets = product_degree_sets(2);
        assert_eq!(sets.len(), 6 + 21);
        assert!(sets.iter().all(|s| s.windows(2).all(|w| w[0] <= w[1])));
    }

    #[test]
    fn rejects_bad_configs() {
        let cfg = SuiteConfig { qs: vec![], ..SuiteConfig::default() };
        assert_eq!(run_verify_suite(&cfg).unwrap_err().exit_code(), 2);
        let cfg = SuiteConfig { nmax: 17, ..SuiteConfig::default() };
        assert_eq!(run_verify_suite(&cfg).unwrap_err().exit_code(), 2);
        let cfg = SuiteConfig { smax: 4, ..SuiteConfig::default() };
        assert_eq!(run_verify_suite(&cfg).unwrap_err().exit_code(), 2);
        let cfg = SuiteConfig { qs: vec![int(1)], ..SuiteConfig::default() };
        assert_eq!(run_verify_suite(&cfg).unwrap_err().exit_code(), 3);
    }

    #[test]
    fn small_suite_passes() {
        let cfg = SuiteConfig {
            qs: vec![rat(1, 2)],
            nmax: 4,
            smax: 2,
            kmax: 1,
            include_printed: true,
            ..SuiteConfig::default()
        };
        let report = run_verify_suite(&cfg).unwrap();
        let failures: Vec<_> = report.corrected.failures().collect();
        assert!(failures.is_empty(), "{failures:#?}");
        let printed = report.printed.unwrap();
        assert!(printed.failures().any(|e| e.identity == "printed.bernstein_expansion"
            && e.params["n"] == "4" && e.params["k"] == "1" && e.params["l"] == "2"));
    }
}

//! The verification suites behind `qmzv verify`.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::cyclo::CycloCtx;
use crate::error::Result;
use crate::exactnum::{factorial, Rat, Ring, UniPoly};
use crate::qstirling::{orthogonality_check, QPoint};
use crate::report::VerifyReport;
use crate::seqlib::{gtrudi_check, norlund};
use crate::zeta::{self, ZetaParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Suite {
    Routes,
    Orthogonality,
    Gtrudi,
    S2,
    S3,
    Dgber,
    Logf,
    Polynomials,
    Btt26,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Routes,
        Suite::Orthogonality,
        Suite::Gtrudi,
        Suite::S2,
        Suite::S3,
        Suite::Dgber,
        Suite::Logf,
        Suite::Polynomials,
        Suite::Btt26,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Routes => "routes",
            Suite::Orthogonality => "orthogonality",
            Suite::Gtrudi => "gtrudi",
            Suite::S2 => "s2",
            Suite::S3 => "s3",
            Suite::Dgber => "dgber",
            Suite::Logf => "logf",
            Suite::Polynomials => "polynomials",
            Suite::Btt26 => "btt26",
            Suite::All => "all",
        }
    }
}

/// Range overrides; `None` means the suite's own default.
#[derive(Debug, Clone, Default)]
pub struct SuiteConfig {
    pub n_max: Option<usize>,
    pub m_max: Option<usize>,
    pub s_max: Option<u32>,
    pub trunc: Option<usize>,
    pub budget: u64,
}

/// Runs one case per item in parallel and merges the per-case reports in
/// input order.
fn sweep<C: Sync + std::fmt::Debug>(
    name: &str,
    cases: Vec<C>,
    f: impl Fn(&C, &mut VerifyReport) -> Result<()> + Sync,
) -> VerifyReport {
    let parts: Vec<VerifyReport> = cases
        .par_iter()
        .map(|c| {
            let mut r = VerifyReport::new(name);
            if let Err(e) = f(c, &mut r) {
                r.error(format!("{c:?}"), "evaluation", e);
            }
            r
        })
        .collect();
    let mut report = VerifyReport::new(name);
    parts.into_iter().for_each(|p| report.absorb(p));
    report
}

fn grid(n_lo: usize, n_hi: usize, s_hi: u32) -> Vec<(usize, u32)> {
    (n_lo..=n_hi).flat_map(|n| (1..=s_hi).map(move |s| (n, s))).collect()
}

/// Every evaluation route against the product route, for all `m < n`,
/// plus both determinant inversions.
pub fn routes(cfg: &SuiteConfig) -> VerifyReport {
    let (n_max, s_max) = (cfg.n_max.unwrap_or(10), cfg.s_max.unwrap_or(3));
    let budget = cfg.budget;
    sweep("routes", grid(2, n_max, s_max), |&(n, s), rep| {
        let column = zeta::zeta_product(n, s, n - 1)?;
        let row = zeta::one_row_values(n, s, n)?;
        for m in 0..n {
            let p = ZetaParams::new(n, m, s)?;
            let want = &column[m];
            let label = p.to_string();
            match zeta::zeta_brute_with_budget(p, budget) {
                Ok(v) => {
                    rep.check(label.clone(), "product vs brute", want, &v.value);
                }
                Err(crate::Error::BudgetExceeded { .. }) => {}
                Err(e) => return Err(e),
            }
            rep.check(label.clone(), "product vs stirling", want, &zeta::zeta_via_stirling(p)?.value);
            rep.check(label.clone(), "product vs bell", want, &zeta::zeta_bell(p)?.value);
            rep.check(label.clone(), "product vs det", want, &zeta::zeta_det(p)?.value);
            if m >= 1 {
                rep.check(label, "row vs column determinant", &row[m - 1], &zeta::zeta_row_from_column(p)?);
            }
        }
        rep.check(format!("n={n} s={s}"), "product vs binomial determinant", &row[0], &zeta::zeta_1s_det(n, s)?);
        Ok(())
    })
}

pub fn orthogonality(cfg: &SuiteConfig) -> VerifyReport {
    let n_max = cfg.n_max.unwrap_or(10);
    let rs_max = cfg.s_max.unwrap_or(3);
    let cases: Vec<(usize, u32, QPoint)> = (1..=rs_max as usize)
        .flat_map(|r| (1..=rs_max).map(move |s| (r, s)))
        .flat_map(|(r, s)| [(r, s, QPoint::Symbolic), (r, s, QPoint::RootOfUnity(CycloCtx::new(7)))])
        .collect();
    sweep("orthogonality", cases, |(r, s, q), rep| {
        let mut sub = match q {
            QPoint::RootOfUnity(ctx) => orthogonality_check(n_max, *r, *s, &ctx.zeta())?,
            _ => orthogonality_check(n_max, *r, *s, &QPoint::symbolic_q())?,
        };
        for f in &mut sub.failures {
            f.params = format!("{} q={q}", f.params);
        }
        rep.absorb(sub);
        Ok(())
    })
}

/// Fixed-seed random rational sequences.
pub fn random_sequences(count: usize, max_len: usize, seed: u64) -> Vec<Vec<Rat>> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=max_len.max(1));
            (0..len).map(|_| Rat::new(rng.gen_range(-9..=9), rng.gen_range(1..=6))).collect()
        })
        .collect()
}

pub fn gtrudi(cfg: &SuiteConfig) -> VerifyReport {
    let seqs = random_sequences(50, cfg.n_max.unwrap_or(8), 0x5eed);
    let cases: Vec<(usize, Vec<Rat>)> = seqs.into_iter().enumerate().collect();
    sweep("gtrudi", cases, |(i, a), rep| {
        rep.absorb(gtrudi_check(a, &format!("seq{i:02}"))?);
        Ok(())
    })
}

pub fn s2(cfg: &SuiteConfig) -> VerifyReport {
    let (n_max, m_max) = (cfg.n_max.unwrap_or(25), cfg.m_max.unwrap_or(12));
    sweep("s2", (2..=n_max).collect(), |&n, rep| {
        let column = zeta::zeta_product(n, 2, m_max)?;
        for m in 1..=m_max {
            let closed = zeta::zeta_m2_closed(n, m);
            let label = format!("n={n} m={m} s=2");
            rep.check(label.clone(), "product vs closed", &column[m], &closed);
            let forms = zeta::zeta_m2_rstirling(n, m)?;
            rep.check(label.clone(), "closed vs r-Stirling form", &closed, &forms.rstirling);
            rep.check(label, "closed vs harmonic form", &closed, &forms.harmonic);
        }
        Ok(())
    })
}

pub fn s3(cfg: &SuiteConfig) -> VerifyReport {
    let (n_max, m_max) = (cfg.n_max.unwrap_or(18), cfg.m_max.unwrap_or(6));
    sweep("s3", (2..=n_max).collect(), |&n, rep| {
        let column = zeta::zeta_product(n, 3, m_max)?;
        for m in 1..=m_max {
            rep.check(format!("n={n} m={m} s=3"), "product vs closed", &column[m], &zeta::zeta_m3_closed(n, m));
        }
        Ok(())
    })
}

pub fn dgber(cfg: &SuiteConfig) -> VerifyReport {
    let (n_max, s_max) = (cfg.n_max.unwrap_or(20), cfg.s_max.unwrap_or(8));
    let budget = cfg.budget;
    sweep("dgber", grid(2, n_max, s_max), |&(n, s), rep| {
        let p = ZetaParams::new(n, 1, s)?;
        let brute = zeta::zeta_brute_with_budget(p, budget)?.value;
        rep.check(p.to_string(), "brute vs degenerate Bernoulli", &brute, &zeta::zeta_1s_dgber(n, s)?);
        rep.absorb(zeta::btt_decomposition_check(n, s)?);
        Ok(())
    })
}

pub fn btt26(cfg: &SuiteConfig) -> VerifyReport {
    let (n_max, j_max) = (cfg.n_max.unwrap_or(20), cfg.s_max.unwrap_or(6));
    sweep("btt26", (2..=n_max).collect(), |&n, rep| {
        rep.absorb(zeta::btt26_check_n(n, j_max)?);
        Ok(())
    })
}

pub fn logf(cfg: &SuiteConfig) -> VerifyReport {
    let (s_max, order) = (cfg.s_max.unwrap_or(3), cfg.trunc.unwrap_or(12));
    sweep("logf", (1..=s_max as usize).collect(), |&s, rep| {
        rep.absorb(zeta::logf_identity_check(s, order)?);
        Ok(())
    })
}

/// The known factored polynomials, the constant terms of `Z_n(zeta_n; 1, s)`,
/// and the r-Stirling factors for `s = 2`.
pub fn polynomials(_cfg: &SuiteConfig) -> VerifyReport {
    let mut report = sweep("polynomials", zeta::reference_polynomials(), |r, rep| {
        let fitted = zeta::zeta_poly_in_n(r.m, r.s)?;
        rep.check(format!("m={} s={} ({})", r.m, r.s, r.family), "interpolated vs reference", &r.poly, &fitted);
        Ok(())
    });
    let listed = [(-1, 2), (-5, 12), (-3, 8), (-251, 720), (-95, 288), (-19087, 60480), (-5257, 17280)];
    let constants = sweep("polynomials", (1..=8u32).collect(), |&s, rep| {
        let c0 = zeta::zeta_poly_in_n(1, s)?.coeff(0);
        let sign = if s % 2 == 1 { 1 } else { -1 };
        let norlund_form = norlund(s as usize) * Rat::from(sign) / Rat::from(factorial(s as u64));
        rep.check(format!("s={s}"), "constant term vs Norlund", &norlund_form, &c0);
        if let Some(&(p, q)) = listed.get(s as usize - 1) {
            rep.check(format!("s={s}"), "constant term vs listed value", &Rat::new(p, q), &c0);
        }
        Ok(())
    });
    report.absorb(constants);
    // Z_n(zeta_n; m, 2) = (-1)^m 2 (n-1)...(n-m) P_m(n) / (2m+2)!
    let inner = sweep("polynomials", (1..=4usize).collect(), |&m, rep| {
        let fitted = zeta::zeta_poly_in_n(m, 2)?;
        let sign = if m % 2 == 0 { 2 } else { -2 };
        let lead =
            (1..=m as i64).fold(UniPoly::constant(Rat::from(sign)), |acc, i| acc * UniPoly::linear_root(Rat::from(i)));
        let lead = lead.scale_by(&Rat::from(factorial(2 * m as u64 + 2)).recip()?);
        let factor = fitted.div_exact_poly(&lead).unwrap_or_else(UniPoly::zero);
        rep.check(format!("m={m} s=2"), "fitted factor vs r-Stirling coefficients", &zeta::m2_inner_poly(m)?, &factor);
        Ok(())
    });
    report.absorb(inner);
    report
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Vec<VerifyReport> {
    match suite {
        Suite::Routes => vec![routes(cfg)],
        Suite::Orthogonality => vec![orthogonality(cfg)],
        Suite::Gtrudi => vec![gtrudi(cfg)],
        Suite::S2 => vec![s2(cfg)],
        Suite::S3 => vec![s3(cfg)],
        Suite::Dgber => vec![dgber(cfg)],
        Suite::Logf => vec![logf(cfg)],
        Suite::Polynomials => vec![polynomials(cfg)],
        Suite::Btt26 => vec![btt26(cfg)],
        Suite::All => Suite::EACH.iter().flat_map(|&s| run_suite(s, cfg)).collect(),
    }
}

//! The report commands: scalar counts, table reproductions with delta
//! columns against the bundled reference cells, figure data for external
//! plotting, and the check commands (Goldbach, divisibility, gap bound).
//!
//! Observed columns always come from the sieve oracle, never from a model;
//! cells beyond the configured ceiling are left empty rather than
//! extrapolated.

use crate::reference as refs;
use crate::report::{empty, fmt_int, fmt_model, Report};
use qprimes::error::{Error, Result};
use qprimes::exact;
use qprimes::models::{self, APrimeMode, BandVariant, ModelParams};
use qprimes::sieve::{self, IntervalKind, SieveConfig};

/// Which counting engine a scalar query runs on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Oracle,
    Exact,
}

impl Engine {
    fn label(self) -> &'static str {
        match self {
            Engine::Oracle => "oracle",
            Engine::Exact => "exact",
        }
    }
}

/// Options shared by every command.
#[derive(Debug, Clone, Copy)]
pub struct ReportOptions {
    pub model: ModelParams,
    pub engine: Engine,
    pub ceiling: u64,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            model: ModelParams::default(),
            engine: Engine::Oracle,
            ceiling: sieve::DEFAULT_CEILING,
        }
    }
}

impl ReportOptions {
    fn sieve_config(&self) -> SieveConfig {
        SieveConfig::with_ceiling(self.ceiling)
    }

    fn stamp(&self, report: &mut Report, model: &ModelParams, engine: Engine) {
        report.param("a_prime", fmt_model(model.effective_a_prime()));
        report.param(
            "band",
            match model.band_variant {
                BandVariant::Printed => "printed",
                BandVariant::Squared => "squared",
            },
        );
        report.param(
            "mode",
            match model.mode {
                APrimeMode::Unit => "unit",
                APrimeMode::Fit => "fit",
            },
        );
        if model.exact_prec_log {
            report.param("log", "exact_prec");
        }
        report.param("engine", engine.label());
        report.param("ceiling", fmt_int(self.ceiling));
    }
}

/// Identifiers of the reproducible tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableId {
    T51,
    T52,
    T53,
    T71,
    T72,
}

impl std::str::FromStr for TableId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "5.1" => Ok(TableId::T51),
            "5.2" => Ok(TableId::T52),
            "5.3" => Ok(TableId::T53),
            "7.1" => Ok(TableId::T71),
            "7.2" => Ok(TableId::T72),
            _ => Err(format!(
                "unknown table id {s:?}; one of 5.1, 5.2, 5.3, 7.1, 7.2"
            )),
        }
    }
}

/// Identifiers of the figure-data reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    F51,
    F71,
    F81,
    F91,
}

impl FigureId {
    pub fn default_limit(self) -> u64 {
        match self {
            FigureId::F51 => 240,
            FigureId::F71 => 915,
            FigureId::F81 => 30,
            FigureId::F91 => 330,
        }
    }
}

impl std::str::FromStr for FigureId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "5.1" => Ok(FigureId::F51),
            "7.1" => Ok(FigureId::F71),
            "8.1" => Ok(FigureId::F81),
            "9.1" => Ok(FigureId::F91),
            _ => Err(format!(
                "unknown figure id {s:?}; one of 5.1, 7.1, 8.1, 9.1"
            )),
        }
    }
}

fn delta(model: f64, reference: f64) -> String {
    fmt_model((model - reference).abs())
}

/// Non-prime and prime counts of one value on the selected engine.
pub fn cmd_pi(x: u64, opts: &ReportOptions) -> Result<Report> {
    if x < 1 {
        return Err(Error::InputTooSmall { value: x, min: 1 });
    }
    let pi = match opts.engine {
        Engine::Exact => exact::pi_exact(x)?,
        Engine::Oracle => sieve::pi_oracle_with(&opts.sieve_config(), x)?,
    };
    let mut report = Report::new(vec!["x", "sigma", "pi"]);
    opts.stamp(&mut report, &opts.model, opts.engine);
    report.row(vec![fmt_int(x), fmt_int(x - pi), fmt_int(pi)]);
    Ok(report)
}

/// Observed prime count of a quadratic interval, or an empty cell when the
/// interval tops out above the ceiling.
fn observed_interval(
    cfg: &SieveConfig,
    n: u64,
    kind: IntervalKind,
) -> Result<Option<sieve::QuadIntervalStats>> {
    match sieve::interval_stats_with(cfg, n, kind) {
        Ok(stats) => Ok(Some(stats)),
        Err(Error::RangeTooLarge { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn cmd_table(id: TableId, opts: &ReportOptions) -> Result<Report> {
    let cfg = opts.sieve_config();
    match id {
        TableId::T51 => {
            let mut report = Report::new(vec![
                "n0",
                "model_cumulative",
                "ref_model",
                "delta_model",
                "oracle_pi",
                "ref_oracle",
                "delta_oracle",
            ]);
            opts.stamp(&mut report, &opts.model, Engine::Oracle);
            for (idx, &n0) in refs::TAB51_N0.iter().enumerate() {
                let model = models::pi_model_cumulative(n0)?;
                let oracle = sieve::pi_oracle_with(&cfg, (n0 + 1) * (n0 + 1))?;
                report.row(vec![
                    fmt_int(n0),
                    fmt_int(model),
                    fmt_int(refs::TAB51_MODEL[idx]),
                    fmt_int(model.abs_diff(refs::TAB51_MODEL[idx])),
                    fmt_int(oracle),
                    fmt_int(refs::TAB51_REAL[idx]),
                    fmt_int(oracle.abs_diff(refs::TAB51_REAL[idx])),
                ]);
            }
            Ok(report)
        }
        TableId::T52 => {
            let mut report = Report::new(vec![
                "n",
                "observed_pi",
                "mean",
                "ref_mean",
                "delta_mean",
                "half_pair_spacing",
                "ref_spacing",
                "delta_spacing",
                "scatter",
                "ref_scatter",
                "delta_scatter",
            ]);
            opts.stamp(&mut report, &opts.model, Engine::Oracle);
            for (idx, &n) in refs::TAB52_N.iter().enumerate() {
                let band = models::prime_band(n, &opts.model)?;
                let observed = observed_interval(&cfg, n, IntervalKind::Quadratic)?
                    .map_or_else(empty, |s| fmt_int(s.prime_count));
                report.row(vec![
                    fmt_int(n),
                    observed,
                    fmt_model(band.prediction.mean),
                    fmt_model(refs::TAB52_MEAN[idx]),
                    delta(band.prediction.mean, refs::TAB52_MEAN[idx]),
                    fmt_model(band.half_pair_spacing),
                    fmt_model(refs::TAB52_SPACING[idx]),
                    delta(band.half_pair_spacing, refs::TAB52_SPACING[idx]),
                    fmt_model(band.scatter),
                    fmt_model(refs::TAB52_SCATTER[idx]),
                    delta(band.scatter, refs::TAB52_SCATTER[idx]),
                ]);
            }
            Ok(report)
        }
        TableId::T53 => {
            let mut report = Report::new(vec![
                "x",
                "observed_max_gap",
                "ref_gap",
                "model",
                "ref_model",
                "delta_model",
            ]);
            opts.stamp(&mut report, &opts.model, Engine::Oracle);
            for (idx, &x) in refs::TAB53_X.iter().enumerate() {
                let observed = if x < opts.ceiling {
                    fmt_int(sieve::max_gap_up_to_with(&cfg, x)?.gap)
                } else {
                    empty()
                };
                let model = models::max_gap_model(x, &opts.model)?;
                report.row(vec![
                    fmt_int(x),
                    observed,
                    fmt_int(refs::TAB53_GAP[idx]),
                    fmt_model(model),
                    fmt_model(refs::TAB53_MODEL[idx]),
                    delta(model, refs::TAB53_MODEL[idx]),
                ]);
            }
            Ok(report)
        }
        TableId::T71 => {
            // the reference model column was produced with the unit-mode constant
            let model_params = ModelParams {
                mode: APrimeMode::Unit,
                ..opts.model
            };
            let mut report = Report::new(vec![
                "n",
                "observed_twins",
                "ref_twins",
                "model_mean",
                "ref_model",
                "delta_model",
            ]);
            opts.stamp(&mut report, &model_params, Engine::Oracle);
            for (idx, &n) in refs::TAB71_N.iter().enumerate() {
                let observed = observed_interval(&cfg, n, IntervalKind::Quadratic)?
                    .map_or_else(empty, |s| fmt_int(s.twin_count));
                let mean = models::twin_model(n, &model_params)?.mean;
                report.row(vec![
                    fmt_int(n),
                    observed,
                    fmt_int(refs::TAB71_TWINS[idx]),
                    fmt_model(mean),
                    fmt_model(refs::TAB71_MODEL[idx]),
                    delta(mean, refs::TAB71_MODEL[idx]),
                ]);
            }
            Ok(report)
        }
        TableId::T72 => {
            // the reference band cells follow the squared variant
            let model_params = ModelParams {
                band_variant: BandVariant::Squared,
                ..opts.model
            };
            let mut report = Report::new(vec![
                "n",
                "observed_twins",
                "mean",
                "ref_mean",
                "delta_mean",
                "upper",
                "ref_upper",
                "delta_upper",
                "lower",
                "ref_lower",
                "delta_lower",
            ]);
            opts.stamp(&mut report, &model_params, Engine::Oracle);
            for (idx, &n) in refs::TAB72_N.iter().enumerate() {
                let band = models::twin_model(n, &model_params)?;
                let observed = observed_interval(&cfg, n, IntervalKind::Quadratic)?
                    .map_or_else(empty, |s| fmt_int(s.twin_count));
                report.row(vec![
                    fmt_int(n),
                    observed,
                    fmt_model(band.mean),
                    fmt_model(refs::TAB72_MEAN[idx]),
                    delta(band.mean, refs::TAB72_MEAN[idx]),
                    fmt_model(band.upper),
                    fmt_model(refs::TAB72_UPPER[idx]),
                    delta(band.upper, refs::TAB72_UPPER[idx]),
                    fmt_model(band.lower),
                    fmt_model(refs::TAB72_LOWER[idx]),
                    delta(band.lower, refs::TAB72_LOWER[idx]),
                ]);
            }
            Ok(report)
        }
    }
}

pub fn cmd_figure(id: FigureId, limit: Option<u64>, opts: &ReportOptions) -> Result<Report> {
    let cfg = opts.sieve_config();
    let limit = limit.unwrap_or_else(|| id.default_limit());
    match id {
        FigureId::F51 => {
            let stats = sieve::interval_census_with(&cfg, IntervalKind::Quadratic, 1, limit)?;
            let mut report = Report::new(vec!["n", "observed", "mean", "lower", "upper"]);
            opts.stamp(&mut report, &opts.model, Engine::Oracle);
            for s in stats {
                let band = models::prime_band(s.n, &opts.model)?.prediction;
                report.row(vec![
                    fmt_int(s.n),
                    fmt_int(s.prime_count),
                    fmt_model(band.mean),
                    fmt_model(band.lower),
                    fmt_model(band.upper),
                ]);
            }
            Ok(report)
        }
        FigureId::F71 => {
            let stats = sieve::interval_census_with(&cfg, IntervalKind::Quadratic, 1, limit)?;
            let mut report = Report::new(vec!["n", "observed", "mean", "lower", "upper"]);
            opts.stamp(&mut report, &opts.model, Engine::Oracle);
            for s in stats {
                let band = models::twin_model(s.n, &opts.model)?;
                report.row(vec![
                    fmt_int(s.n),
                    fmt_int(s.twin_count),
                    fmt_model(band.mean),
                    fmt_model(band.lower),
                    fmt_model(band.upper),
                ]);
            }
            Ok(report)
        }
        FigureId::F81 => {
            let stats = sieve::interval_census_with(&cfg, IntervalKind::Biquadratic, 1, limit)?;
            // observed_cumulative: quadruplets fully contained in the
            // intervals 1..=n, i.e. the running count up to (n+1)^4
            let mut report = Report::new(vec![
                "n",
                "observed",
                "observed_cumulative",
                "mean",
                "lower",
                "upper",
            ]);
            opts.stamp(&mut report, &opts.model, Engine::Oracle);
            let mut cumulative = 0;
            for s in stats {
                cumulative += s.quad_count;
                report.row(vec![
                    fmt_int(s.n),
                    fmt_int(s.quad_count),
                    fmt_int(cumulative),
                    fmt_model(models::quad_model(s.n, &opts.model)?),
                    empty(),
                    empty(),
                ]);
            }
            Ok(report)
        }
        FigureId::F91 => {
            if limit < 8 {
                return Err(Error::InputTooSmall {
                    value: limit,
                    min: 8,
                });
            }
            let seg = sieve::sieve_range_with(&cfg, 0, limit + 1)?;
            let odd_primes: Vec<u64> = seg.primes().skip(1).collect();
            let mut report = Report::new(vec!["two_m", "observed", "mean", "lower", "upper"]);
            opts.stamp(&mut report, &opts.model, Engine::Oracle);
            for two_m in (8..=limit).step_by(2) {
                let observed = odd_primes
                    .iter()
                    .take_while(|&&p| 2 * p <= two_m)
                    .filter(|&&p| seg.is_prime(two_m - p))
                    .count() as u64;
                let band = models::goldbach_model(two_m, &opts.model)?;
                report.row(vec![
                    fmt_int(two_m),
                    fmt_int(observed),
                    fmt_model(band.mean),
                    fmt_model(band.lower),
                    fmt_model(band.upper),
                ]);
            }
            Ok(report)
        }
    }
}

pub fn cmd_goldbach(two_m: u64, opts: &ReportOptions) -> Result<Report> {
    let (count, witnesses) = sieve::goldbach_count_oracle_with(&opts.sieve_config(), two_m)?;
    let mut report = Report::new(vec!["p", "q", "sum"]);
    opts.stamp(&mut report, &opts.model, Engine::Oracle);
    report.param("count", fmt_int(count));
    for w in witnesses {
        report.row(vec![fmt_int(w.p), fmt_int(w.q), fmt_int(w.sum)]);
    }
    Ok(report)
}

fn clause_label(clause: qprimes::binomial::VerdictClause) -> &'static str {
    use qprimes::binomial::VerdictClause::*;
    match clause {
        Mod4Zero => "mod4_0",
        PrimeThreeMod4 => "prime_3mod4",
        PrimeOneMod4 => "prime_1mod4",
        Mod4Two => "mod4_2",
        OutOfScope => "out_of_scope",
    }
}

/// Single verdict report; never sets the violation flag (a clause failure
/// surfaces as a hard error instead).
pub fn cmd_divisibility(n: u64, opts: &ReportOptions) -> Result<Report> {
    let v = qprimes::binomial::divisibility_verdict(n)?;
    let mut report = Report::new(vec![
        "n",
        "p_prime",
        "clause",
        "divides_minus",
        "divides_plus",
        "least_factor_absorbs",
    ]);
    opts.stamp(&mut report, &opts.model, Engine::Oracle);
    report.row(vec![
        fmt_int(v.n),
        fmt_int(v.p_prime),
        clause_label(v.clause).to_string(),
        v.divides_minus.to_string(),
        v.divides_plus.to_string(),
        v.least_factor_absorbs.map_or_else(empty, |b| b.to_string()),
    ]);
    Ok(report)
}

/// Exhaustive clause sweep; the boolean is true when violations were found.
pub fn cmd_divisibility_sweep(n_max: u64, opts: &ReportOptions) -> Result<(Report, bool)> {
    let sweep = qprimes::binomial::divisibility_sweep(n_max)?;
    let mut report = Report::new(vec!["violation_n"]);
    opts.stamp(&mut report, &opts.model, Engine::Oracle);
    report.param("n_max", fmt_int(sweep.n_max));
    report.param("checked", fmt_int(sweep.checked));
    report.param("out_of_scope", fmt_int(sweep.out_of_scope));
    report.param("violations", fmt_int(sweep.violations.len() as u64));
    let found = !sweep.violations.is_empty();
    for n in sweep.violations {
        report.row(vec![fmt_int(n)]);
    }
    Ok((report, found))
}

/// Gap-bound scan; the boolean is true when violations were found.
pub fn cmd_gapcheck(x: u64, opts: &ReportOptions) -> Result<(Report, bool)> {
    let cfg = opts.sieve_config();
    let violations = sieve::gap_bound_check_with(&cfg, x)?;
    let max_gap = sieve::max_gap_up_to_with(&cfg, x)?;
    let mut report = Report::new(vec!["lower_prime", "upper_prime", "gap", "bound"]);
    opts.stamp(&mut report, &opts.model, Engine::Oracle);
    report.param("x", fmt_int(x));
    report.param("max_gap", fmt_int(max_gap.gap));
    report.param("max_gap_at", fmt_int(max_gap.lower_prime));
    report.param("violations", fmt_int(violations.len() as u64));
    let found = !violations.is_empty();
    for v in violations {
        report.row(vec![
            fmt_int(v.lower_prime),
            fmt_int(v.upper_prime),
            fmt_int(v.gap),
            fmt_int(v.bound),
        ]);
    }
    Ok((report, found))
}

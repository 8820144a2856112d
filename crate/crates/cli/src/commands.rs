//! Subcommand bodies. Each one resolves its scenario, computes a table row
//! per sweep point, and hands the table back; rendering, file output, and
//! exit codes stay in main.

use std::path::PathBuf;

use clap::{Args, ValueEnum};
use num_complex::Complex64;

use discrimkit::ensembles::{tetrad_ensemble, two_pure_ensemble, two_pure_states};
use discrimkit::max_confidence::{max_confidence_pom, weighted_average_confidence};
use discrimkit::min_error::{
    helstrom_two_pure, optimize_min_error, square_root_measurement, two_pure_projective_search,
    OptimizeConfig,
};
use discrimkit::mutual_info::{
    accessible_info_search, best_projective_qubit, elimination_measurement, mutual_information,
};
use discrimkit::simulator::{empirical_figures, sample_outcomes};
use discrimkit::types::{Pom, StateEnsemble, Tolerances};
use discrimkit::unambiguous::{
    coherent_overlap_demo, mixed_unamb_feasibility, no_signaling_unamb_oracle, unamb_two_pure,
    zero_error_residual, PriorRegime,
};
use discrimkit::verify::{run_all, VerifyConfig};

use crate::output::{fmt12, Cell, Table};
use crate::scenario::{
    check_sweep_domain, deg_to_rad, points, trine_ensemble_at, CliError, CliResult, EnsembleArgs,
    Family, Param, SweepArgs, SweepSpec,
};

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Write the table here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Output format; both carry the same 12-digit decimal renderings.
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum Format {
    Csv,
    Json,
}

pub fn emit(table: &Table, out: &OutputArgs) -> CliResult<()> {
    let rendered = match out.format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
    };
    match &out.out {
        None => {
            print!("{rendered}");
            Ok(())
        }
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| CliError::Invalid(format!("cannot write {}: {e}", path.display()))),
    }
}

/// Fixed-point solver knobs, shared by minerr and the --compare-minerr
/// column. A deliberately unreachable threshold is the supported way to
/// demonstrate the non-convergence exit code.
#[derive(Args, Debug, Clone)]
pub struct SolverArgs {
    /// Iteration cap for the fixed-point optimizer.
    #[arg(long, default_value_t = 2000)]
    pub max_iters: usize,

    /// Convergence threshold on the success-probability increment.
    #[arg(long, default_value_t = 1e-9)]
    pub threshold: f64,

    /// Random starts tried beside the square-root-measurement seed.
    #[arg(long, default_value_t = 2)]
    pub starts: usize,

    /// RNG seed for the random starts.
    #[arg(long, default_value_t = 24301)]
    pub seed: u64,
}

impl SolverArgs {
    fn config(&self) -> OptimizeConfig {
        OptimizeConfig {
            max_iterations: self.max_iters,
            threshold: self.threshold,
            random_starts: self.starts,
            seed: self.seed,
        }
    }
}

fn converged_or_exit3(
    ensemble: &StateEnsemble,
    cfg: &OptimizeConfig,
) -> CliResult<discrimkit::min_error::MinErrorOptimization> {
    let opt = optimize_min_error(ensemble, cfg)?;
    if !opt.converged {
        return Err(CliError::NoConvergence(format!(
            "minimum-error optimizer did not converge within {} iterations (threshold {:e})",
            cfg.max_iterations, cfg.threshold
        )));
    }
    Ok(opt)
}

/// --theta sweeps against the trine select the latitude, same as the flag.
fn remap_trine_sweep(sweep: Option<SweepSpec>, family: &Family) -> Option<SweepSpec> {
    match (sweep, family) {
        (Some(mut s), Family::Trine) if s.param == Param::Theta => {
            s.param = Param::Latitude;
            Some(s)
        }
        (s, _) => s,
    }
}

fn check_theta_deg_open(theta_deg: f64) -> CliResult<f64> {
    if !(theta_deg > 0.0 && theta_deg <= 45.0) {
        return Err(CliError::Invalid(format!(
            "theta {theta_deg} degrees is outside (0, 45]"
        )));
    }
    Ok(deg_to_rad(theta_deg))
}

fn check_theta_deg_closed(theta_deg: f64) -> CliResult<f64> {
    if !(0.0..=45.0).contains(&theta_deg) {
        return Err(CliError::Invalid(format!(
            "theta {theta_deg} degrees is outside [0, 45]"
        )));
    }
    Ok(deg_to_rad(theta_deg))
}

// ---------------------------------------------------------------------------
// minerr

#[derive(Args, Debug)]
pub struct MinerrArgs {
    #[command(flatten)]
    pub ensemble: EnsembleArgs,
    #[command(flatten)]
    pub sweep: SweepArgs,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

pub fn run_minerr(args: &MinerrArgs) -> CliResult<Table> {
    let family = args.ensemble.family()?;
    let sweep = remap_trine_sweep(args.sweep.parse()?, &family);
    match family {
        Family::TwoPure => {
            if let Some(s) = &sweep {
                if !matches!(s.param, Param::Theta | Param::P0) {
                    return Err(CliError::invalid("two-pure sweeps vary theta or p0"));
                }
                check_sweep_domain(s, true)?;
            }
            let mut table = Table::new([
                "theta_deg",
                "p0",
                "p_error",
                "closed_form",
                "residual",
                "grid_oracle",
            ]);
            for k in points(sweep.as_ref(), args.ensemble.knobs()) {
                let theta_deg = k.theta_deg("minerr --two-pure")?;
                let theta = check_theta_deg_closed(theta_deg)?;
                let (a, b) = two_pure_states(theta)?;
                let res = helstrom_two_pure(&a, &b, k.p0)?;
                let p1 = 1.0 - k.p0;
                let ov2 = (2.0 * theta).cos().powi(2);
                let closed = 0.5 * (1.0 - (1.0 - 4.0 * k.p0 * p1 * ov2).max(0.0).sqrt());
                // Identical states have no two-dimensional span to sweep;
                // every projective strategy degenerates to guessing the
                // likelier label.
                let oracle = if theta == 0.0 {
                    k.p0.min(p1)
                } else {
                    two_pure_projective_search(&a, &b, k.p0, 721)?
                };
                table.row(vec![
                    Cell::Num(theta_deg),
                    Cell::Num(k.p0),
                    Cell::Num(res.p_error),
                    Cell::Num(closed),
                    Cell::Num(res.residuals.max()),
                    Cell::Num(oracle),
                ]);
            }
            Ok(table)
        }
        Family::Coherent => Err(CliError::invalid(
            "the coherent pair is the analytic unambiguous demo; use `unamb --coherent --alpha A`",
        )),
        Family::Trine => {
            if let Some(s) = &sweep {
                if s.param != Param::Latitude {
                    return Err(CliError::invalid("the trine sweeps latitude"));
                }
                check_sweep_domain(s, false)?;
            }
            let cfg = args.solver.config();
            let mut table =
                Table::new(["latitude_deg", "p_correct", "p_error", "residual", "iterations"]);
            for k in points(sweep.as_ref(), args.ensemble.knobs()) {
                let ens = trine_ensemble_at(k.latitude_deg)?;
                let opt = converged_or_exit3(&ens, &cfg)?;
                table.row(vec![
                    Cell::Num(k.latitude_deg.unwrap_or(45.0)),
                    Cell::Num(opt.result.p_correct),
                    Cell::Num(opt.result.p_error),
                    Cell::Num(opt.result.residuals.max()),
                    Cell::Int(opt.iterations as i64),
                ]);
            }
            Ok(table)
        }
        Family::Tetrad | Family::File(_) => {
            if sweep.is_some() {
                return Err(CliError::invalid("this ensemble has no sweepable parameter"));
            }
            let ens = match family {
                Family::Tetrad => tetrad_ensemble()?,
                Family::File(e) => e,
                _ => unreachable!(),
            };
            let opt = converged_or_exit3(&ens, &args.solver.config())?;
            let mut table = Table::new(["p_correct", "p_error", "residual", "iterations"]);
            table.row(vec![
                Cell::Num(opt.result.p_correct),
                Cell::Num(opt.result.p_error),
                Cell::Num(opt.result.residuals.max()),
                Cell::Int(opt.iterations as i64),
            ]);
            Ok(table)
        }
    }
}

// ---------------------------------------------------------------------------
// unamb

#[derive(Args, Debug)]
pub struct UnambArgs {
    #[command(flatten)]
    pub ensemble: EnsembleArgs,
    #[command(flatten)]
    pub sweep: SweepArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

pub fn run_unamb(args: &UnambArgs) -> CliResult<Table> {
    let family = args.ensemble.family()?;
    let sweep = args.sweep.parse()?;
    match family {
        Family::TwoPure => {
            if let Some(s) = &sweep {
                if !matches!(s.param, Param::Theta | Param::P0) {
                    return Err(CliError::invalid("two-pure sweeps vary theta or p0"));
                }
                check_sweep_domain(s, false)?;
            }
            let mut table = Table::new([
                "theta_deg",
                "p0",
                "success_0",
                "success_1",
                "p_inconclusive",
                "no_signaling_bound",
                "zero_error_residual",
                "regime",
            ]);
            for k in points(sweep.as_ref(), args.ensemble.knobs()) {
                let theta_deg = k.theta_deg("unamb --two-pure")?;
                let theta = check_theta_deg_open(theta_deg)?;
                let res = unamb_two_pure(theta, k.p0)?;
                let bound = no_signaling_unamb_oracle(theta, k.p0, 2001)?;
                let ens = two_pure_ensemble(theta, k.p0)?;
                let zres = zero_error_residual(&ens, &res.pom)?;
                let regime = match res.regime {
                    Some(PriorRegime::Interior) => "interior".to_string(),
                    Some(PriorRegime::Skewed { favored }) => format!("skewed-{favored}"),
                    None => "-".to_string(),
                };
                table.row(vec![
                    Cell::Num(theta_deg),
                    Cell::Num(k.p0),
                    Cell::Num(res.per_state_success[0]),
                    Cell::Num(res.per_state_success[1]),
                    Cell::Num(res.p_inconclusive),
                    Cell::Num(bound),
                    Cell::Num(zres),
                    Cell::Text(regime),
                ]);
            }
            Ok(table)
        }
        Family::Coherent => {
            if let Some(s) = &sweep {
                if s.param != Param::Alpha {
                    return Err(CliError::invalid("the coherent demo sweeps alpha"));
                }
                check_sweep_domain(s, false)?;
            }
            let mut table = Table::new(["alpha", "p_failure"]);
            table.comment("p_failure = |<a|-a>| = exp(-2 a^2), the unambiguous floor at equal priors");
            for k in points(sweep.as_ref(), args.ensemble.knobs()) {
                let alpha = k.alpha("unamb --coherent")?;
                table.row(vec![
                    Cell::Num(alpha),
                    Cell::Num(coherent_overlap_demo(Complex64::new(alpha, 0.0))),
                ]);
            }
            Ok(table)
        }
        Family::Trine | Family::Tetrad => Err(CliError::invalid(
            "unambiguous discrimination needs linearly independent states; \
             three or more qubit states are always dependent",
        )),
        Family::File(ens) => {
            if sweep.is_some() {
                return Err(CliError::invalid("file ensembles have no sweepable parameter"));
            }
            if ens.len() != 2 {
                return Err(CliError::invalid(
                    "unambiguous analysis of ensemble files supports exactly two states",
                ));
            }
            let feas = mixed_unamb_feasibility(ens.state(0), ens.state(1))?;
            let mut table = Table::new(["state0_identifiable", "state1_identifiable"]);
            table.comment(
                "a state is identifiable when the other state's kernel meets its support",
            );
            let yn = |b: bool| Cell::Text(if b { "yes" } else { "no" }.to_string());
            table.row(vec![yn(feas.state0_identifiable), yn(feas.state1_identifiable)]);
            Ok(table)
        }
    }
}

// ---------------------------------------------------------------------------
// maxconf

#[derive(Args, Debug)]
pub struct MaxconfArgs {
    #[command(flatten)]
    pub ensemble: EnsembleArgs,
    #[command(flatten)]
    pub sweep: SweepArgs,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[command(flatten)]
    pub output: OutputArgs,

    /// Also report the average confidence of the minimum-error measurement.
    #[arg(long)]
    pub compare_minerr: bool,
}

pub fn run_maxconf(args: &MaxconfArgs) -> CliResult<Table> {
    let family = args.ensemble.family()?;
    let sweep = remap_trine_sweep(args.sweep.parse()?, &family);

    // (leading parameter columns, per-point ensembles)
    let mut lead_cols: Vec<&str> = Vec::new();
    let mut rows: Vec<(Vec<Cell>, StateEnsemble)> = Vec::new();
    match &family {
        Family::TwoPure => {
            if let Some(s) = &sweep {
                if !matches!(s.param, Param::Theta | Param::P0) {
                    return Err(CliError::invalid("two-pure sweeps vary theta or p0"));
                }
                check_sweep_domain(s, false)?;
            }
            lead_cols.extend(["theta_deg", "p0"]);
            for k in points(sweep.as_ref(), args.ensemble.knobs()) {
                let theta_deg = k.theta_deg("maxconf --two-pure")?;
                let theta = check_theta_deg_open(theta_deg)?;
                rows.push((
                    vec![Cell::Num(theta_deg), Cell::Num(k.p0)],
                    two_pure_ensemble(theta, k.p0)?,
                ));
            }
        }
        Family::Trine => {
            if let Some(s) = &sweep {
                if s.param != Param::Latitude {
                    return Err(CliError::invalid("the trine sweeps latitude"));
                }
                check_sweep_domain(s, false)?;
            }
            lead_cols.push("latitude_deg");
            for k in points(sweep.as_ref(), args.ensemble.knobs()) {
                rows.push((
                    vec![Cell::Num(k.latitude_deg.unwrap_or(45.0))],
                    trine_ensemble_at(k.latitude_deg)?,
                ));
            }
        }
        Family::Tetrad => {
            if sweep.is_some() {
                return Err(CliError::invalid("the tetrad has no sweepable parameter"));
            }
            rows.push((Vec::new(), tetrad_ensemble()?));
        }
        Family::File(ens) => {
            if sweep.is_some() {
                return Err(CliError::invalid("file ensembles have no sweepable parameter"));
            }
            rows.push((Vec::new(), ens.clone()));
        }
        Family::Coherent => {
            return Err(CliError::invalid(
                "the coherent pair is the analytic unambiguous demo; use `unamb --coherent`",
            ))
        }
    }

    let n_states = rows.first().map(|(_, e)| e.len()).unwrap_or(0);
    let conf_cols: Vec<String> = (0..n_states).map(|i| format!("confidence_{i}")).collect();
    let mut columns: Vec<String> = lead_cols.iter().map(|s| s.to_string()).collect();
    columns.extend(conf_cols);
    columns.push("p_inconclusive".to_string());
    if args.compare_minerr {
        columns.push("minerr_avg_confidence".to_string());
    }
    let mut table = Table::new(columns);

    let cfg = args.solver.config();
    for (mut lead, ens) in rows {
        let res = max_confidence_pom(&ens)?;
        lead.extend(res.confidences.iter().map(|&c| Cell::Num(c)));
        lead.push(Cell::Num(res.p_inconclusive));
        if args.compare_minerr {
            let opt = converged_or_exit3(&ens, &cfg)?;
            lead.push(Cell::Num(weighted_average_confidence(&ens, &opt.result.pom)?));
        }
        table.row(lead);
    }
    Ok(table)
}

// ---------------------------------------------------------------------------
// mutinfo

#[derive(Args, Debug)]
pub struct MutinfoArgs {
    #[command(flatten)]
    pub ensemble: EnsembleArgs,
    #[command(flatten)]
    pub sweep: SweepArgs,
    #[command(flatten)]
    pub output: OutputArgs,

    /// Print the reference table for the symmetric families and the
    /// 15-degree pair instead of computing a single scenario.
    #[arg(long)]
    pub table: bool,

    /// Add a stochastic search over complete rank-1 measurements.
    #[arg(long)]
    pub search: bool,

    /// RNG seed for --search restarts.
    #[arg(long, default_value_t = 24301)]
    pub seed: u64,
}

/// Resolution (degrees) of the projective reference sweep.
const PROJECTIVE_RES_DEG: f64 = 0.5;

fn bits_projective(ens: &StateEnsemble) -> CliResult<f64> {
    Ok(best_projective_qubit(ens, PROJECTIVE_RES_DEG)?.bits)
}

fn bits_search(ens: &StateEnsemble, seed: u64) -> CliResult<f64> {
    let n_outcomes = ens.len().max(ens.dim());
    Ok(accessible_info_search(ens, n_outcomes, 3, seed)?.bits)
}

fn mutinfo_reference_table(search: bool, seed: u64) -> CliResult<Table> {
    let mut table =
        Table::new(["ensemble", "measurement", "bits", "reference_bits", "observed_bits"]);
    table.comment("reference_bits: quoted theoretical values for these scenarios");
    table.comment("observed_bits: published experimental results, context only, not targets");
    let t = |s: &str| Cell::Text(s.to_string());

    let theta = deg_to_rad(15.0);
    let (a, b) = two_pure_states(theta)?;
    let pair = two_pure_ensemble(theta, 0.5)?;
    let hel = helstrom_two_pure(&a, &b, 0.5)?;
    table.row(vec![
        t("two-pure-15deg"),
        t("min-error"),
        Cell::Num(mutual_information(&pair, &hel.pom)?),
        t("0.189"),
        t("0.196(7)"),
    ]);

    let trine = discrimkit::ensembles::trine_ensemble()?;
    table.row(vec![
        t("trine"),
        t("elimination"),
        Cell::Num(mutual_information(&trine, &elimination_measurement(&trine)?)?),
        t("0.585"),
        t("0.491"),
    ]);
    table.row(vec![
        t("trine"),
        t("best-projective"),
        Cell::Num(bits_projective(&trine)?),
        t("0.459"),
        t(""),
    ]);

    let tetrad = tetrad_ensemble()?;
    table.row(vec![
        t("tetrad"),
        t("elimination"),
        Cell::Num(mutual_information(&tetrad, &elimination_measurement(&tetrad)?)?),
        t("0.415"),
        t("0.363"),
    ]);
    table.row(vec![
        t("tetrad"),
        t("best-projective"),
        Cell::Num(bits_projective(&tetrad)?),
        t("0.311"),
        t(""),
    ]);

    if search {
        table.row(vec![
            t("trine"),
            t("search"),
            Cell::Num(bits_search(&trine, seed)?),
            t("0.585"),
            t(""),
        ]);
        table.row(vec![
            t("tetrad"),
            t("search"),
            Cell::Num(bits_search(&tetrad, seed)?),
            t("0.415"),
            t(""),
        ]);
    }
    Ok(table)
}

pub fn run_mutinfo(args: &MutinfoArgs) -> CliResult<Table> {
    if args.table {
        return mutinfo_reference_table(args.search, args.seed);
    }
    let family = args.ensemble.family()?;
    let sweep = remap_trine_sweep(args.sweep.parse()?, &family);
    match family {
        Family::TwoPure => {
            if let Some(s) = &sweep {
                if !matches!(s.param, Param::Theta | Param::P0) {
                    return Err(CliError::invalid("two-pure sweeps vary theta or p0"));
                }
                check_sweep_domain(s, true)?;
            }
            let mut cols = vec!["theta_deg", "p0", "bits_min_error", "bits_projective"];
            if args.search {
                cols.push("bits_search");
            }
            let mut table = Table::new(cols);
            for k in points(sweep.as_ref(), args.ensemble.knobs()) {
                let theta_deg = k.theta_deg("mutinfo --two-pure")?;
                let theta = check_theta_deg_closed(theta_deg)?;
                let (a, b) = two_pure_states(theta)?;
                let ens = two_pure_ensemble(theta, k.p0)?;
                let hel = helstrom_two_pure(&a, &b, k.p0)?;
                let mut row = vec![
                    Cell::Num(theta_deg),
                    Cell::Num(k.p0),
                    Cell::Num(mutual_information(&ens, &hel.pom)?),
                    Cell::Num(bits_projective(&ens)?),
                ];
                if args.search {
                    row.push(Cell::Num(bits_search(&ens, args.seed)?));
                }
                table.row(row);
            }
            Ok(table)
        }
        Family::Trine => {
            if let Some(s) = &sweep {
                if s.param != Param::Latitude {
                    return Err(CliError::invalid("the trine sweeps latitude"));
                }
                check_sweep_domain(s, false)?;
            }
            let knobs = args.ensemble.knobs();
            // The exclusion measurement only exists where the average is
            // I/2, so its column appears only for the equatorial trine.
            let equatorial = sweep.is_none()
                && (knobs.latitude_deg.is_none() || knobs.latitude_deg == Some(45.0));
            let mut cols = vec!["latitude_deg"];
            if equatorial {
                cols.push("bits_elimination");
            }
            cols.extend(["bits_projective", "bits_srm"]);
            if args.search {
                cols.push("bits_search");
            }
            let mut table = Table::new(cols);
            for k in points(sweep.as_ref(), knobs) {
                let ens = trine_ensemble_at(k.latitude_deg)?;
                let mut row = vec![Cell::Num(k.latitude_deg.unwrap_or(45.0))];
                if equatorial {
                    let elim = elimination_measurement(&ens)?;
                    row.push(Cell::Num(mutual_information(&ens, &elim)?));
                }
                row.push(Cell::Num(bits_projective(&ens)?));
                let srm = square_root_measurement(&ens)?;
                row.push(Cell::Num(mutual_information(&ens, &srm.pom)?));
                if args.search {
                    row.push(Cell::Num(bits_search(&ens, args.seed)?));
                }
                table.row(row);
            }
            Ok(table)
        }
        Family::Tetrad => {
            if sweep.is_some() {
                return Err(CliError::invalid("the tetrad has no sweepable parameter"));
            }
            let ens = tetrad_ensemble()?;
            let mut cols = vec!["bits_elimination", "bits_projective", "bits_srm"];
            if args.search {
                cols.push("bits_search");
            }
            let mut table = Table::new(cols);
            let elim = elimination_measurement(&ens)?;
            let srm = square_root_measurement(&ens)?;
            let mut row = vec![
                Cell::Num(mutual_information(&ens, &elim)?),
                Cell::Num(bits_projective(&ens)?),
                Cell::Num(mutual_information(&ens, &srm.pom)?),
            ];
            if args.search {
                row.push(Cell::Num(bits_search(&ens, args.seed)?));
            }
            table.row(row);
            Ok(table)
        }
        Family::File(ens) => {
            if sweep.is_some() {
                return Err(CliError::invalid("file ensembles have no sweepable parameter"));
            }
            let qubit = ens.dim() == 2;
            let mut cols = Vec::new();
            if qubit {
                cols.push("bits_projective");
            }
            cols.push("bits_srm");
            if args.search {
                cols.push("bits_search");
            }
            let mut table = Table::new(cols);
            let mut row = Vec::new();
            if qubit {
                row.push(Cell::Num(bits_projective(&ens)?));
            }
            let srm = square_root_measurement(&ens)?;
            row.push(Cell::Num(mutual_information(&ens, &srm.pom)?));
            if args.search {
                row.push(Cell::Num(bits_search(&ens, args.seed)?));
            }
            table.row(row);
            Ok(table)
        }
        Family::Coherent => Err(CliError::invalid(
            "the coherent pair is the analytic unambiguous demo; use `unamb --coherent`",
        )),
    }
}

// ---------------------------------------------------------------------------
// simulate

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum Strategy {
    Minerr,
    Unamb,
    Maxconf,
    Srm,
    Elimination,
}

impl Strategy {
    fn name(&self) -> &'static str {
        match self {
            Strategy::Minerr => "minerr",
            Strategy::Unamb => "unamb",
            Strategy::Maxconf => "maxconf",
            Strategy::Srm => "srm",
            Strategy::Elimination => "elimination",
        }
    }
}

#[derive(Args, Debug)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub ensemble: EnsembleArgs,
    #[command(flatten)]
    pub output: OutputArgs,

    /// Measurement to sample.
    #[arg(long, value_enum)]
    pub strategy: Strategy,

    /// Number of preparation/measurement rounds.
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,

    /// Sampling seed; each trial draws from its own derived stream.
    #[arg(long, default_value_t = 24301)]
    pub seed: u64,
}

pub fn run_simulate(args: &SimulateArgs) -> CliResult<Table> {
    let family = args.ensemble.family()?;
    let k = args.ensemble.knobs();
    let ens = match &family {
        Family::TwoPure => {
            let theta = check_theta_deg_closed(k.theta_deg("simulate --two-pure")?)?;
            two_pure_ensemble(theta, k.p0)?
        }
        Family::Trine => trine_ensemble_at(k.latitude_deg)?,
        Family::Tetrad => tetrad_ensemble()?,
        Family::File(e) => e.clone(),
        Family::Coherent => {
            return Err(CliError::invalid(
                "the coherent demo is analytic; there is no finite ensemble to sample",
            ))
        }
    };
    let pom: Pom = match args.strategy {
        Strategy::Minerr => {
            converged_or_exit3(&ens, &OptimizeConfig { seed: args.seed, ..OptimizeConfig::default() })?
                .result
                .pom
        }
        Strategy::Unamb => match &family {
            Family::TwoPure => {
                let theta = check_theta_deg_open(k.theta_deg("simulate --two-pure")?)?;
                unamb_two_pure(theta, k.p0)?.pom
            }
            _ => {
                return Err(CliError::invalid(
                    "unambiguous sampling supports --two-pure (other built-ins are linearly dependent)",
                ))
            }
        },
        Strategy::Maxconf => max_confidence_pom(&ens)?.pom,
        Strategy::Srm => square_root_measurement(&ens)?.pom,
        Strategy::Elimination => elimination_measurement(&ens)?,
    };
    let record = sample_outcomes(&ens, &pom, args.trials, args.seed)?;
    let figures = empirical_figures(&record)?;

    let mut table = Table::new(["state", "outcome", "count", "frequency"]);
    table.comment(format!("seed={}", record.seed));
    table.comment(format!("trials={}", record.n_trials));
    table.comment(format!("strategy={}", args.strategy.name()));
    if matches!(args.strategy, Strategy::Elimination) {
        table.comment("elimination outcomes name the excluded state, so p_error is not an identification rate");
    }
    table.comment(format!("p_error={}", fmt12(figures.p_error)));
    table.comment(format!("p_inconclusive={}", fmt12(figures.p_inconclusive)));
    table.comment(format!(
        "mutual_information_bits={}",
        fmt12(figures.mutual_information)
    ));
    let n = record.n_trials as f64;
    for (i, row) in record.counts.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            table.row(vec![
                Cell::Int(i as i64),
                Cell::Text(record.outcome_labels[j].to_string()),
                Cell::Int(c as i64),
                Cell::Num(c as f64 / n),
            ]);
        }
    }
    Ok(table)
}

// ---------------------------------------------------------------------------
// verify

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Emit the report as JSON instead of aligned text lines.
    #[arg(long)]
    pub json: bool,

    /// Seed for the randomized checks.
    #[arg(long, default_value_t = 24301)]
    pub seed: u64,

    /// Monte Carlo sample size.
    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,
}

/// Runs every check and reports value, reference, deviation, and tolerance
/// per line. Returns the rendered report and the process exit code: 0 only
/// when every check passes.
pub fn run_verify(args: &VerifyArgs) -> CliResult<(String, i32)> {
    let tol = match std::env::var("DISCRIMKIT_TOL") {
        Ok(s) => {
            let v: f64 = s.parse().map_err(|_| {
                CliError::Invalid(format!("DISCRIMKIT_TOL {s:?} is not a number"))
            })?;
            Tolerances::uniform(v)?
        }
        Err(std::env::VarError::NotPresent) => Tolerances::default(),
        Err(e) => return Err(CliError::Invalid(format!("DISCRIMKIT_TOL: {e}"))),
    };
    let cfg = VerifyConfig { tol, seed: args.seed, mc_trials: args.trials };
    let reports = run_all(&cfg)?;
    let n_pass = reports.iter().filter(|r| r.pass).count();
    let all_pass = n_pass == reports.len();

    let out = if args.json {
        let checks: Vec<serde_json::Value> = reports
            .iter()
            .map(|r| {
                serde_json::json!({
                    "name": r.name,
                    "pass": r.pass,
                    "value": fmt12(r.value),
                    "reference": fmt12(r.reference),
                    "deviation": fmt12(r.deviation),
                    "tolerance": fmt12(r.tolerance),
                })
            })
            .collect();
        let doc = serde_json::json!({ "all_pass": all_pass, "checks": checks });
        let mut s = serde_json::to_string_pretty(&doc).expect("reports serialize");
        s.push('\n');
        s
    } else {
        let mut s = String::new();
        for r in &reports {
            s.push_str(&r.line());
            s.push('\n');
        }
        s.push_str(&format!("{n_pass}/{} checks passed\n", reports.len()));
        s
    };
    Ok((out, if all_pass { 0 } else { 1 }))
}

//! Subcommand adapters: validate flags, call the library, lay out tables.

use doublespend::sim::{run_trials, TrialConfig};
use doublespend::validation::{cell_seed, component_attribution, AttributionReport};
use doublespend::{
    attack_breakdown, min_confirmations, run_validation, AttackQuery, MiningPowerSplit,
    Probability, SweepGrid, Variant,
};

use crate::args::{MinZArgs, ProbArgs, SimulateArgs, ValidateArgs};
use crate::output::{Cell, Report, Table};
use crate::CliError;

pub fn prob(args: &ProbArgs) -> Result<Report, CliError> {
    let power = MiningPowerSplit::new(args.q)?;
    let variant = Variant::from(args.variant);
    let query = AttackQuery::new(power, args.z, variant, args.budget_surplus)?;
    let breakdown = attack_breakdown(&query);

    let mut result = Table::new(
        "result",
        &[
            "q",
            "z",
            "variant",
            "budget_surplus",
            "lambda",
            "probability",
        ],
    );
    result.push(vec![
        args.q.into(),
        args.z.into(),
        variant.name().into(),
        args.budget_surplus.into(),
        breakdown.rate.lambda().into(),
        breakdown.probability.value().into(),
    ]);
    let mut tables = vec![result];
    if args.summands {
        let mut terms = Table::new("summands", &["k", "pmf", "catch_up", "product"]);
        for t in &breakdown.terms {
            terms.push(vec![
                t.k.into(),
                t.pmf.into(),
                t.catch_up.into(),
                t.product.into(),
            ]);
        }
        tables.push(terms);
    }
    Ok(Report {
        command: "prob",
        tables,
    })
}

/// Rounds away accumulated binary error in generated axis points.
fn axis_point(from: f64, step: f64, i: usize) -> f64 {
    ((from + step * i as f64) * 1e12).round() / 1e12
}

fn q_axis(args: &MinZArgs) -> Result<Vec<f64>, CliError> {
    if !args.q.is_empty() {
        return Ok(args.q.clone());
    }
    let (from, to, step) = (args.q_from, args.q_to, args.q_step);
    let valid = from.is_finite() && to.is_finite() && to >= from && step.is_finite() && step > 0.0;
    if !valid {
        return Err(CliError::Usage(format!(
            "invalid q range: from {from} to {to} step {step}"
        )));
    }
    let count = ((to - from) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|i| axis_point(from, step, i)).collect())
}

pub fn min_z(args: &MinZArgs) -> Result<Report, CliError> {
    let variant = Variant::from(args.variant);
    let powers = q_axis(args)?
        .into_iter()
        .map(MiningPowerSplit::new)
        .collect::<Result<Vec<_>, _>>()?;
    let targets = args
        .target
        .iter()
        .map(|&t| match Probability::new(t) {
            Ok(p) if t > 0.0 && t < 1.0 => Ok(p),
            _ => Err(CliError::Usage(format!(
                "target must lie in (0, 1), got {t}"
            ))),
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut table = Table::new("min_z", &["q", "target", "variant", "min_z"]);
    for power in &powers {
        for target in &targets {
            let z = min_confirmations(*power, *target, variant, args.budget_surplus)?;
            table.push(vec![
                power.attacker().into(),
                target.value().into(),
                variant.name().into(),
                z.map_or(Cell::Unbounded, Cell::Int),
            ]);
        }
    }
    Ok(Report {
        command: "min-z",
        tables: vec![table],
    })
}

pub fn simulate(args: &SimulateArgs) -> Result<Report, CliError> {
    let power = MiningPowerSplit::new(args.q)?;
    let config =
        TrialConfig::new(power, args.z, args.budget_surplus)?.with_max_blocks(args.max_blocks)?;
    let sim = run_trials(&config, args.trials, args.seed)?;
    let k = sim.k_distribution();

    let mut summary = Table::new(
        "summary",
        &[
            "q",
            "z",
            "budget_surplus",
            "trials",
            "wins",
            "rate",
            "std_err",
            "mean_k",
            "capped",
            "seed",
        ],
    );
    summary.push(vec![
        args.q.into(),
        args.z.into(),
        args.budget_surplus.into(),
        sim.trials.into(),
        sim.wins.into(),
        sim.success_rate().into(),
        sim.std_err().into(),
        k.mean().into(),
        sim.capped_count.into(),
        sim.master_seed.into(),
    ]);
    let mut tables = vec![summary];
    if args.histogram {
        let mut hist = Table::new("k_histogram", &["k", "count", "fraction"]);
        for (&kk, &count) in &sim.k_histogram {
            hist.push(vec![kk.into(), count.into(), k.probability(kk).into()]);
        }
        tables.push(hist);
    }
    Ok(Report {
        command: "simulate",
        tables,
    })
}

pub fn validate(args: &ValidateArgs) -> Result<Report, CliError> {
    let variant = Variant::from(args.variant);
    let grid = SweepGrid::new(
        args.q.clone(),
        args.z.clone(),
        variant,
        args.budget_surplus,
        args.trials,
        args.seed,
    )?;
    let rows = run_validation(&grid)?;

    let mut table = Table::new(
        "validation",
        &[
            "q",
            "z",
            "variant",
            "model",
            "sim",
            "sim_std_err",
            "abs_error",
            "rel_error",
            "trials",
            "capped",
        ],
    );
    for r in &rows {
        table.push(vec![
            r.q.into(),
            r.z.into(),
            variant.name().into(),
            r.model_prob.into(),
            r.sim_prob.into(),
            r.sim_std_err.into(),
            r.abs_error.into(),
            r.rel_error.into(),
            r.trials.into(),
            r.capped.into(),
        ]);
    }
    let mut tables = vec![table];

    if args.attribution {
        let mut reports = Vec::new();
        for (qi, &q) in grid.q_values().iter().enumerate() {
            for (zi, &z) in grid.z_values().iter().enumerate() {
                if z == 0 {
                    continue;
                }
                let power = MiningPowerSplit::new(q)?;
                let seed = cell_seed(args.seed, qi, zi);
                reports.push(component_attribution(
                    power,
                    z,
                    args.budget_surplus,
                    args.trials,
                    seed,
                )?);
            }
        }
        tables.extend(attribution_tables(&reports));
    }
    Ok(Report {
        command: "validate",
        tables,
    })
}

fn attribution_tables(reports: &[AttributionReport]) -> Vec<Table> {
    let mut catch_up = Table::new(
        "catch_up",
        &[
            "q",
            "z",
            "k",
            "deficit",
            "budget",
            "model",
            "empirical",
            "std_err",
            "z_score",
        ],
    );
    let mut lambda = Table::new(
        "lambda",
        &["q", "z", "lambda", "empirical_mean", "std_err", "z_score"],
    );
    let mut k_dist = Table::new(
        "k_distribution",
        &["q", "z", "k", "empirical", "poisson", "std_err"],
    );
    let mut tv = Table::new(
        "total_variation",
        &["q", "z", "distance", "std_err", "z_score"],
    );
    let mut hybrid = Table::new(
        "hybrid",
        &[
            "q",
            "z",
            "poisson_model",
            "hybrid_model",
            "sim",
            "sim_std_err",
            "poisson_z_score",
            "hybrid_z_score",
        ],
    );
    let mut components = Table::new(
        "components",
        &["q", "z", "component", "max_abs_z_score", "flagged"],
    );

    for r in reports {
        let (q, z): (Cell, Cell) = (r.q.into(), r.z.into());
        for c in &r.catch_up {
            catch_up.push(vec![
                q.clone(),
                z.clone(),
                c.k.into(),
                c.deficit.into(),
                c.budget.into(),
                c.model.into(),
                c.empirical.rate().into(),
                c.std_err().into(),
                c.z_score().into(),
            ]);
        }
        lambda.push(vec![
            q.clone(),
            z.clone(),
            r.rate.lambda.into(),
            r.rate.empirical_mean.into(),
            r.rate.std_err.into(),
            r.rate.z_score().into(),
        ]);
        for m in &r.k_masses {
            k_dist.push(vec![
                q.clone(),
                z.clone(),
                m.k.into(),
                m.empirical.into(),
                m.poisson.into(),
                m.std_err.into(),
            ]);
        }
        tv.push(vec![
            q.clone(),
            z.clone(),
            r.total_variation.distance.into(),
            r.total_variation.std_err.into(),
            r.total_variation.z_score().into(),
        ]);
        let h = &r.hybrid;
        hybrid.push(vec![
            q.clone(),
            z.clone(),
            h.poisson_model.into(),
            h.hybrid_model.into(),
            h.simulated.into(),
            h.sim_std_err.into(),
            h.poisson_z_score().into(),
            h.hybrid_z_score().into(),
        ]);
        let flagged = r.flagged_components();
        for (component, score) in r.component_scores() {
            components.push(vec![
                q.clone(),
                z.clone(),
                component.name().into(),
                score.into(),
                flagged.contains(&component).into(),
            ]);
        }
    }
    vec![catch_up, lambda, k_dist, tv, hybrid, components]
}

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use svcurves::curvecat::{count_points, CountCache, CustomCurveConfig, PlaneCurveModel};
use svcurves::numsg::SemigroupDescriptor;
use svcurves::ovoid::ovoid_report;
use svcurves::svengine::{order_report, ReportOptions};
use svcurves::veritas::{render_table, run_suite, write_report, Report, Suite, SuiteOptions};
use svcurves::zetabounds::{fit, HPolynomial, ZetaError};
use svcurves::ExecMode;

/// Order sequences, point counts and claim suites for curves over finite fields.
#[derive(Parser, Debug)]
#[command(name = "svcurves", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Emit JSON instead of a human summary.
    #[arg(long, global = true)]
    json: bool,
    /// Write the JSON result into this directory as well.
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Point-count cache directory (falls back to $SVCURVES_CACHE).
    #[arg(long, global = true, value_name = "DIR")]
    cache: Option<PathBuf>,
    /// Reserved. Nothing here is randomized.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Lift the desk caps (l <= 5, s <= 2).
    #[arg(long, global = true)]
    unsafe_cap: bool,
    /// Run on one thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count points over F_(q^m).
    Count {
        /// `hermitian:L`, `quotient:L:N`, `suzuki:S`, `fermat:L` or a TOML file.
        curve: String,
        #[arg(short, long, default_value_t = 1)]
        m: u32,
        /// Recompute cached values and fail on mismatch.
        #[arg(long)]
        validate: bool,
    },
    /// Order sequences, Frobenius orders and divisor data.
    Orders {
        curve: String,
        /// Linear series |d P_inf|; defaults to the largest semigroup generator.
        #[arg(long)]
        d: Option<u64>,
        /// Census depth: scan points over F_(q^k) for k <= this.
        #[arg(long = "points", default_value_t = 1)]
        k_max: u32,
    },
    /// Genus, gaps and symmetry of a numerical semigroup.
    Semigroup {
        #[arg(required = true)]
        generators: Vec<u64>,
    },
    /// Compare h-polynomial predictions with enumeration.
    #[command(args_conflicts_with_subcommands = true, subcommand_negates_reqs = true)]
    Zeta {
        #[arg(required = true)]
        curve: Option<String>,
        /// Largest extension degree to enumerate.
        #[arg(long, default_value_t = 2)]
        max_m: u32,
        #[command(subcommand)]
        action: Option<ZetaAction>,
    },
    /// Suzuki-Tits ovoid against the embedded Suzuki curve.
    Ovoid {
        #[arg(long)]
        s: u32,
        /// Also check that no three points are collinear.
        #[arg(long)]
        collinear: bool,
    },
    /// Run a claim suite: `hermitian L`, `quotient L N`, `suzuki S`, `ovoid S`, `all-desk`.
    Verify {
        #[arg(required = true, num_args = 1..)]
        suite: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum ZetaAction {
    /// Recover the L-polynomial of a genus <= 2 curve from N_1..N_g.
    Fit {
        curve: String,
        /// Genus, if the model does not know it.
        #[arg(long)]
        genus: Option<u64>,
        /// Check predictions up to this extension degree.
        #[arg(long, default_value_t = 3)]
        check_m: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

impl Global {
    fn mode(&self) -> ExecMode {
        if self.sequential {
            ExecMode::Sequential
        } else {
            ExecMode::Parallel
        }
    }

    fn cache(&self) -> Option<CountCache> {
        self.cache
            .clone()
            .or_else(|| std::env::var_os("SVCURVES_CACHE").filter(|v| !v.is_empty()).map(PathBuf::from))
            .map(CountCache::new)
    }
}

fn load_curve(spec: &str) -> Result<PlaneCurveModel> {
    let path = Path::new(spec);
    if spec.ends_with(".toml") || path.is_file() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {spec}"))?;
        return Ok(CustomCurveConfig::parse(&text)?.build()?);
    }
    Ok(PlaneCurveModel::from_spec(spec)?)
}

fn check_curve_cap(curve: &PlaneCurveModel, g: &Global) -> Result<()> {
    if g.unsafe_cap {
        return Ok(());
    }
    let suite = match curve.class() {
        svcurves::curvecat::CurveClass::Hermitian { l } => Suite::Hermitian { l: *l },
        svcurves::curvecat::CurveClass::HermitianQuotient { l, .. } => Suite::Hermitian { l: *l },
        svcurves::curvecat::CurveClass::Suzuki { s } => Suite::Suzuki { s: *s },
        _ => return Ok(()),
    };
    Ok(suite.check_cap()?)
}

/// Prints `value`, and stores it under `--out` as `<name>.json`.
fn emit(g: &Global, name: &str, value: &Value, human: impl FnOnce() -> String) -> Result<()> {
    if g.json {
        println!("{}", serde_json::to_string_pretty(value)?);
    } else {
        print!("{}", human());
    }
    if let Some(dir) = &g.out {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let slug: String = name.chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' }).collect();
        let path = dir.join(format!("{slug}.json"));
        fs::write(&path, serde_json::to_string_pretty(value)? + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn counted(curve: &PlaneCurveModel, m: u32, g: &Global, validate: bool) -> Result<(u64, bool)> {
    let compute = || count_points(curve, m, g.mode());
    match g.cache() {
        Some(cache) => Ok(cache.get_or_compute(curve.id(), m, validate, compute)?),
        None => Ok((compute()?, false)),
    }
}

fn run(cli: Cli) -> Result<bool> {
    let g = &cli.global;
    if let Some(seed) = g.seed {
        eprintln!("warning: --seed {seed} ignored; no command uses randomness");
    }
    match &cli.command {
        Command::Count { curve, m, validate } => {
            let curve = load_curve(curve)?;
            check_curve_cap(&curve, g)?;
            let start = Instant::now();
            let (n, cached) = counted(&curve, *m, g, *validate)?;
            let ms = start.elapsed().as_millis() as u64;
            let v = json!({ "schema": 1, "curve": curve.id(), "m": m, "N": n, "time_ms": ms, "cached": cached });
            emit(g, &format!("count-{}-m{m}", curve.id()), &v, || format!("{} over F_(q^{m}): N = {n} ({ms} ms)\n", curve.id()))?;
        }
        Command::Orders { curve, d, k_max } => {
            let curve = load_curve(curve)?;
            check_curve_cap(&curve, g)?;
            let opts = ReportOptions { d: *d, census_k: *k_max, mode: g.mode() };
            let report = order_report(&curve, &opts)?;
            let v = serde_json::to_value(&report)?;
            emit(g, &format!("orders-{}-d{}", curve.id(), report.d), &v, || {
                let mut s = format!(
                    "{} |{}P_inf|, r = {}\n  eps = {:?}\n  nu  = {:?} (I = {})\n  deg R = {}, deg S = {}\n",
                    report.curve, report.d, report.r, report.eps, report.nu, report.index_i, report.deg_r, report.deg_s
                );
                if let Some(c) = &report.census {
                    s += &format!(
                        "  census k <= {}: {} Weierstrass points, sum v_P(R) = {}, fully accounted: {}\n",
                        c.k_max,
                        c.support.len(),
                        c.total,
                        c.fully_accounted
                    );
                }
                s
            })?;
        }
        Command::Semigroup { generators } => {
            let h = SemigroupDescriptor::new(generators)?;
            let v = json!({
                "schema": 1,
                "generators": h.generators(),
                "genus": h.genus(),
                "frobenius": h.frobenius_number(),
                "symmetric": h.is_symmetric(),
                "gaps": h.gaps(),
            });
            let name = generators.iter().map(|n| n.to_string()).collect::<Vec<_>>().join("-");
            emit(g, &format!("semigroup-{name}"), &v, || {
                format!(
                    "<{}>: genus {}, Frobenius number {}, symmetric {}\n",
                    name.replace('-', ", "),
                    h.genus(),
                    h.frobenius_number(),
                    h.is_symmetric()
                )
            })?;
        }
        Command::Zeta { action: Some(ZetaAction::Fit { curve, genus, check_m }), .. } => {
            let curve = load_curve(curve)?;
            check_curve_cap(&curve, g)?;
            let genus = genus.or(curve.genus()).context("genus unknown; pass --genus")?;
            let top = (*check_m).max(genus as u32).max(1);
            let counts: Vec<u64> = (1..=top).map(|m| counted(&curve, m, g, false).map(|c| c.0)).collect::<Result<_>>()?;
            let fitted = fit(curve.q(), genus, &counts)?;
            let rows = prediction_rows(&counts, |m| fitted.predicted_count(m))?;
            let ok = rows.iter().all(|r| r["match"] == json!(true));
            let v = json!({ "schema": 1, "curve": curve.id(), "fit": fitted, "predictions": rows });
            emit(g, &format!("zeta-fit-{}", curve.id()), &v, || {
                format!("{}: h tail {:?}, predictions {}\n", curve.id(), fitted.tail, if ok { "match" } else { "DIFFER" })
            })?;
            return Ok(ok);
        }
        Command::Zeta { curve, max_m, action: None } => {
            let curve = load_curve(curve.as_deref().context("missing curve")?)?;
            check_curve_cap(&curve, g)?;
            let h = HPolynomial::for_curve(&curve)?;
            let counts: Vec<u64> = (1..=*max_m).map(|m| counted(&curve, m, g, false).map(|c| c.0)).collect::<Result<_>>()?;
            let rows = prediction_rows(&counts, |m| h.predicted_count(m))?;
            let ok = rows.iter().all(|r| r["match"] == json!(true));
            let v = json!({ "schema": 1, "curve": curve.id(), "h_shape": h.shape, "predictions": rows });
            emit(g, &format!("zeta-{}", curve.id()), &v, || {
                let mut s = format!("{} with h = {}\n", curve.id(), h.shape);
                for r in &rows {
                    s += &format!("  m = {}: predicted {}, enumerated {}\n", r["m"], r["N_pred"], r["N_enum"]);
                }
                s
            })?;
            return Ok(ok);
        }
        Command::Ovoid { s, collinear } => {
            if !g.unsafe_cap {
                Suite::Ovoid { s: *s }.check_cap()?;
            }
            let report = ovoid_report(*s, *collinear, g.mode())?;
            let ok = report.equal && report.injective && report.no_three_collinear != Some(false);
            let v = serde_json::to_value(&report)?;
            emit(g, &format!("ovoid-s{s}"), &v, || {
                format!(
                    "s = {s}: |O| = {}, |pi(X)| = {}, equal {}, injective {}\n",
                    report.size, report.embedded_size, report.equal, report.injective
                )
            })?;
            return Ok(ok);
        }
        Command::Verify { suite } => {
            let name = suite.join(" ");
            let parsed: Suite = name.parse()?;
            let results = run_suite(parsed, &SuiteOptions { unsafe_cap: g.unsafe_cap, mode: g.mode() })?;
            let report = Report::new(&parsed.to_string(), results);
            if g.json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{}", render_table(&report));
            }
            if let Some(dir) = &g.out {
                let path = write_report(&report, dir)?;
                eprintln!("wrote {}", path.display());
            }
            return Ok(report.all_pass());
        }
    }
    Ok(true)
}

fn prediction_rows(counts: &[u64], predict: impl Fn(u32) -> std::result::Result<i128, ZetaError>) -> Result<Vec<Value>> {
    counts
        .iter()
        .enumerate()
        .map(|(i, &n)| {
            let m = i as u32 + 1;
            let pred = predict(m)?;
            Ok(json!({ "m": m, "N_pred": pred, "N_enum": n, "match": pred == n as i128 }))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_shape() {
        Cli::command().debug_assert();
    }
}

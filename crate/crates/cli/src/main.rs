use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use cyclicity::family::{self, Family};
use cyclicity::output::{csv_field, lattice_json, Fraction, OutputRecord};
use cyclicity::range::ParamRange;
use cyclicity::{exit_code_for, parse_count, spec_lang, usage};
use cyclicity_core::arith::{ratio, to_decimal, Rounding, DEFAULT_SIEVE_CAP};
use cyclicity_core::asymptotics::{self, DEFAULT_PARTIAL_SUM_CAP};
use cyclicity_core::extremal::{self, DensityBudget};
use cyclicity_core::formulas::Counts;
use cyclicity_core::oracle::{self, Strategy};
use cyclicity_core::{ExactRatio, Provenance, DEFAULT_ORDER_CAP};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::Value;

const SPEC_HELP: &str = "Group specs: Cn, Cp^k, D<2m> (D8 has order 8), Q<2^n>, SD<2^n>, \
M(p,n), ZM(m,n,r), S3, and x-separated direct products such as S3xC2 or Q8xC2^3.";

#[derive(Parser)]
#[command(name = "cyc", version, about = "Exact cyclicity degrees of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form cyclicity degree of a family member.
    ///
    /// Families: cyclic n | elem-abelian p k | abelian n1 n2 ... | rank2 m n |
    /// hamiltonian n [odd orders...] | modM p n | dihedral2n n | quaternion2n n |
    /// semidihedral2n n | zm m n r | dihedral m | nilpotent SPEC SPEC ...
    Cdeg {
        family: String,
        #[arg(required = true)]
        params: Vec<String>,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Brute-force subgroup lattice of an explicit group.
    #[command(after_help = SPEC_HELP)]
    Oracle {
        spec: String,
        /// Write the whole lattice as JSON to this file.
        #[arg(long)]
        dump: Option<PathBuf>,
        /// Extra degrees: ndeg (normal subgroups), sd (commuting pairs).
        #[arg(long, value_delimiter = ',')]
        with: Vec<String>,
        /// Largest group order to build.
        #[arg(long, env = "CYC_CAP")]
        cap: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Checks closed forms against the oracle over a parameter range.
    ///
    /// Ranges: m=1..40 | m<=40,n<=12 | m,n<=30 | p=2..7,n=3 | order<=200.
    Verify {
        family: String,
        #[arg(long)]
        params_range: String,
        #[arg(long, env = "CYC_CAP")]
        cap: Option<usize>,
    },
    /// Mean value of n -> cdeg(Z_n x Z_n) from its Euler product.
    Meanvalue {
        #[arg(long, default_value = "1000000", value_parser = parse_count)]
        prime_bound: u64,
        #[arg(long, default_value_t = 6)]
        digits: u32,
        #[arg(long)]
        json: bool,
    },
    /// Partial sums of n -> cdeg(Z_n x Z_n), optionally as an error table.
    PartialSum {
        #[arg(long, value_parser = parse_count, required_unless_present = "profile")]
        x: Option<u64>,
        /// Comma-separated points for the CSV error table, e.g. 1e4,1e5,1e6.
        #[arg(long, value_delimiter = ',', value_parser = parse_count)]
        profile: Vec<u64>,
        /// Prime bound for the mean value used in residuals.
        #[arg(long, default_value = "1000000", value_parser = parse_count)]
        prime_bound: u64,
        /// Largest admissible x.
        #[arg(long, default_value_t = DEFAULT_PARTIAL_SUM_CAP, value_parser = parse_count)]
        max_x: u64,
    },
    /// Extremes of |C| and cdeg over rank-two abelian groups of order p^n.
    Extremal {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        csv: bool,
    },
    /// Exploratory search for closed-form degrees near a target.
    Density {
        /// Target a/b in (0, 1].
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 512)]
        max_order: u64,
        #[arg(long, default_value_t = 5)]
        k: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn run(command: Command, out: &mut String) -> Result<u8> {
    match command {
        Command::Cdeg { family, params, json, csv } => cmd_cdeg(&family, &params, json, csv, out),
        Command::Oracle { spec, dump, with, cap, json } => cmd_oracle(&spec, dump, &with, cap, json, out),
        Command::Verify { family, params_range, cap } => cmd_verify(&family, &params_range, cap, out),
        Command::Meanvalue { prime_bound, digits, json } => cmd_meanvalue(prime_bound, digits, json, out),
        Command::PartialSum { x, profile, prime_bound, max_x } => {
            cmd_partial_sum(x, &profile, prime_bound, max_x, out)
        }
        Command::Extremal { p, n, csv } => cmd_extremal(p, n, csv, out),
        Command::Density { target, max_order, k } => cmd_density(&target, max_order, k, out),
    }
}

fn emit(rec: &OutputRecord, json: bool, csv: bool, out: &mut String) {
    if json {
        out.push_str(&rec.to_json());
    } else if csv {
        out.push_str(OutputRecord::CSV_HEADER);
        out.push('\n');
        out.push_str(&rec.to_csv_row());
        out.push('\n');
    } else {
        out.push_str(&rec.to_text());
    }
}

fn cmd_cdeg(family: &str, params: &[String], json: bool, csv: bool, out: &mut String) -> Result<u8> {
    let family = Family::parse(family)?;
    let (counts, values) = if family == Family::Nilpotent {
        let parts = params.iter().map(|s| spec_lang::parse(s).map_err(usage)).collect::<Result<Vec<_>>>()?;
        (family::nilpotent_counts(&parts)?, parts.iter().map(|p| Value::from(p.to_string())).collect())
    } else {
        let nums = params.iter().map(|s| parse_count(s).map_err(usage)).collect::<Result<Vec<_>>>()?;
        (family::formula_counts(family, &nums)?, nums.iter().map(|&n| Value::from(n)).collect())
    };
    emit(&OutputRecord::new(family.name(), values, &counts, Provenance::Formula), json, csv, out);
    Ok(0)
}

fn cmd_oracle(
    spec_text: &str,
    dump: Option<PathBuf>,
    with: &[String],
    cap: Option<usize>,
    json: bool,
    out: &mut String,
) -> Result<u8> {
    let spec = spec_lang::parse(spec_text).map_err(usage)?;
    for w in with {
        if w != "ndeg" && w != "sd" {
            return Err(usage(format!("unknown --with value {w:?}; expected ndeg or sd")));
        }
    }
    let cap = cap.unwrap_or(DEFAULT_ORDER_CAP);
    let group = oracle::build_group_with_cap(&spec, cap)?;
    let counts = if let Some(path) = &dump {
        let lattice = oracle::enumerate_subgroups_with(&group, cap, Strategy::Auto)?;
        fs::write(path, lattice_json(&spec.to_string(), &group, &lattice))
            .with_context(|| format!("writing {}", path.display()))?;
        lattice.counts()
    } else {
        oracle::lattice_counts_with(&group, cap, Strategy::Auto)?
    };
    let params = match spec.params() {
        p if p.is_empty() => vec![Value::from(spec.to_string())],
        p => p.into_iter().map(Value::from).collect(),
    };
    let mut rec = OutputRecord::new(
        spec.family_name(),
        params,
        &Counts::new(counts.cyclic, counts.subgroups),
        Provenance::Oracle,
    );
    if with.iter().any(|w| w == "ndeg") {
        rec.ndeg = Some(Fraction::from(&ratio(counts.normal, counts.subgroups)));
    }
    if with.iter().any(|w| w == "sd") {
        rec.sd = Some(Fraction::from(&oracle::sd_oracle(&group)?));
    }
    emit(&rec, json, false, out);
    Ok(0)
}

enum Outcome {
    Pass(Counts),
    Fail { formula: Counts, oracle: Counts },
}

fn cmd_verify(family: &str, range: &str, cap: Option<usize>, out: &mut String) -> Result<u8> {
    let family = Family::parse(family)?;
    let tuples = ParamRange::parse(range)?.tuples(family)?;
    let cap = cap.unwrap_or(DEFAULT_ORDER_CAP);
    let specs = tuples
        .iter()
        .map(|t| family::group_spec(family, t))
        .collect::<Result<Vec<_>>>()?;
    if let Some(spec) = specs.iter().find(|s| s.order().is_none_or(|o| o > cap as u128)) {
        return Err(cyclicity_core::Error::Resource {
            what: "group order",
            requested: spec.order().unwrap_or(u128::MAX),
            cap: cap as u128,
        })
        .with_context(|| format!("{spec} is above the order cap; narrow the range or raise --cap"));
    }
    let outcomes = tuples
        .par_iter()
        .zip(specs.par_iter())
        .map(|(t, spec)| -> Result<Outcome> {
            let formula = family::formula_counts(family, t)?;
            let c = oracle::oracle_counts(spec, cap)?;
            let oracle = Counts::new(c.cyclic, c.subgroups);
            Ok(if formula == oracle { Outcome::Pass(formula) } else { Outcome::Fail { formula, oracle } })
        })
        .collect::<Result<Vec<_>>>()?;
    let vars = family.vars();
    let mut failed = 0;
    for (t, outcome) in tuples.iter().zip(&outcomes) {
        let label: Vec<String> = vars.iter().zip(t).map(|(v, x)| format!("{v}={x}")).collect();
        let label = format!("{} {}", family.name(), label.join(" "));
        match outcome {
            Outcome::Pass(c) => {
                out.push_str(&format!("PASS {label}: |C|={} |L|={}\n", c.num_cyclic, c.num_subgroups))
            }
            Outcome::Fail { formula, oracle } => {
                failed += 1;
                out.push_str(&format!(
                    "FAIL {label}: formula |C|={} |L|={}, oracle |C|={} |L|={}\n",
                    formula.num_cyclic, formula.num_subgroups, oracle.num_cyclic, oracle.num_subgroups
                ));
            }
        }
    }
    out.push_str(&format!("{} of {} tuples passed\n", tuples.len() - failed, tuples.len()));
    Ok(if failed == 0 { 0 } else { 1 })
}

fn cmd_meanvalue(prime_bound: u64, digits: u32, json: bool, out: &mut String) -> Result<u8> {
    if prime_bound > DEFAULT_SIEVE_CAP {
        return Err(cyclicity_core::Error::Resource {
            what: "prime bound",
            requested: prime_bound.into(),
            cap: DEFAULT_SIEVE_CAP.into(),
        }
        .into());
    }
    let m = asymptotics::mean_value_m(prime_bound, digits)?;
    let tail = m.tail_bound.to_string();
    if json {
        let v = serde_json::json!({
            "M": m.render(digits),
            "digits": digits,
            "prime_bound": m.prime_bound,
            "series_depth": m.series_depth,
            "tail_bound": tail,
        });
        out.push_str(&(serde_json::to_string_pretty(&v)? + "\n"));
    } else {
        out.push_str(&format!(
            "M = {}\nprime_bound = {}\nseries_depth = {}\ntail_bound = {}\n",
            m.render(digits),
            m.prime_bound,
            m.series_depth,
            tail
        ));
    }
    Ok(0)
}

fn cmd_partial_sum(x: Option<u64>, profile: &[u64], prime_bound: u64, max_x: u64, out: &mut String) -> Result<u8> {
    if let Some(x) = x {
        let s = partial_sum_parallel(x, max_x)?;
        out.push_str(&format!("x = {x}\npartial_sum = {}\n", to_decimal(&s, 12, Rounding::Floor)));
    }
    if !profile.is_empty() {
        let m = asymptotics::mean_value_m(prime_bound, 12)?;
        let rows = asymptotics::error_profile(profile, &m, max_x)?;
        out.push_str("x,partial_sum,residual,residual_over_log3\n");
        for row in rows {
            let ratio_text = row.residual_over_log3.map(|v| format!("{v:.12}")).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{}\n",
                row.x,
                to_decimal(&row.partial_sum.value(), 9, Rounding::HalfEven),
                to_decimal(&row.residual, 9, Rounding::HalfEven),
                ratio_text
            ));
        }
    }
    Ok(0)
}

/// `sum_{n <= x} f(n)` over parallel chunks; the fixed-point chunk totals add
/// exactly, so the result does not depend on the split.
fn partial_sum_parallel(x: u64, max_x: u64) -> Result<ExactRatio> {
    if x > max_x {
        return Err(cyclicity_core::Error::Resource { what: "partial sum bound", requested: x.into(), cap: max_x.into() }
            .into());
    }
    if x == 0 {
        return Ok(ratio(0, 1));
    }
    let sieve = cyclicity_core::arith::SpfSieve::with_cap(x, max_x)?;
    const CHUNK: u64 = 1 << 16;
    let total: u128 = (0..x.div_ceil(CHUNK))
        .into_par_iter()
        .map(|i| asymptotics::partial_sum_fixed_range(&sieve, i * CHUNK + 1, ((i + 1) * CHUNK).min(x)))
        .sum();
    Ok(asymptotics::PartialSum::from_fixed(x, total).value())
}

fn cmd_extremal(p: u64, n: u32, csv: bool, out: &mut String) -> Result<u8> {
    let report = extremal::scan_rank2(p, n)?;
    out.push_str("alpha1,alpha2,num_cyclic,num_subgroups,cdeg_num,cdeg_den\n");
    for row in &report.rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            row.alpha1,
            row.alpha2,
            row.num_cyclic,
            row.num_subgroups,
            row.cdeg.numer(),
            row.cdeg.denom()
        ));
    }
    if !csv {
        out.push_str(&format!(
            "\nargmin_c = {}\nargmax_c = {}\nargmin_cdeg = {}\nargmax_cdeg = {}\n",
            report.argmin_c, report.argmax_c, report.argmin_cdeg, report.argmax_cdeg
        ));
        if report.tie {
            out.push_str("anomaly: two rows tie\n");
        }
        out.push_str(&format!("theorem_holds = {}\n", extremal::verify_extremal_theorem(p, n)?));
    }
    Ok(0)
}

fn parse_fraction(s: &str) -> Result<ExactRatio> {
    let (a, b) = s.split_once('/').unwrap_or((s, "1"));
    let a: BigInt = a.trim().parse().map_err(|_| usage(format!("bad target {s:?}")))?;
    let b: BigInt = b.trim().parse().map_err(|_| usage(format!("bad target {s:?}")))?;
    if b == BigInt::from(0) {
        return Err(usage("target denominator is zero"));
    }
    Ok(ExactRatio::new(a, b))
}

fn cmd_density(target: &str, max_order: u64, k: usize, out: &mut String) -> Result<u8> {
    let target = parse_fraction(target)?;
    if max_order > 4096 {
        return Err(cyclicity_core::Error::Resource { what: "density order bound", requested: max_order.into(), cap: 4096 }
            .into());
    }
    let hits = extremal::density_scan(&target, DensityBudget { max_order, k })?;
    out.push_str(&format!(
        "# exploratory: nearest closed-form values to {target} among groups of order <= {max_order}\n"
    ));
    out.push_str("rank,spec,order,cdeg,distance\n");
    for (i, hit) in hits.iter().enumerate() {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            i + 1,
            csv_field(&hit.spec.to_string()),
            hit.spec.order().unwrap_or(0),
            hit.cdeg,
            hit.distance
        ));
    }
    Ok(0)
}

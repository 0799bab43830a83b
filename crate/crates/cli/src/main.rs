//! Batch verification front end.
//!
//! Every command echoes its semantic inputs and prints one report; exact
//! integers serialize as decimal strings. Execution knobs (--jobs, cache
//! settings) never appear in the report, so runs with equal inputs produce
//! byte-identical output whatever the worker count or cache state.
//!
//! Exit codes: 0 success (scan/verify verdict MATCH or NOT_COVERED),
//! 2 verdict MISMATCH, 1 usage or internal error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use chevalley::cohom::{
    cohomology_dim, degree_lower_bound_pair, type_a_fundamental_bound, unique_decomposition,
};
use chevalley::kostant::{partition_brute_force, OracleCaps, PartitionTable, RECURRENCE_VERSION};
use chevalley::rootsys::{Family, RootSystem, RootSystemSpec};
use chevalley::scan::{
    vanishing_scan, verify_sharp_bound, DecompositionReport, ScanOptions, ScanReport, TermReport,
    Verdict,
};
use chevalley::weyl::WeylGroup;

const REPORT_SCHEMA: &str = "chevalley-report/1";
const CACHE_DIR_ENV: &str = "CHEVALLEY_CACHE_DIR";

#[derive(Parser)]
#[command(
    name = "chevalley",
    version,
    about = "Exact root-system combinatorics for cohomology vanishing ranges of finite Chevalley groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Directory for partition-table caches (default: $CHEVALLEY_CACHE_DIR)
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Disable reading and writing caches
    #[arg(long, global = true)]
    no_cache: bool,

    /// Worker threads for scans
    #[arg(short = 'j', long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Args)]
struct SystemArgs {
    /// Root system family: A, B, C, D, G or F
    #[arg(short = 't', long = "type")]
    family: String,

    /// Rank
    #[arg(short = 'r', long)]
    rank: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Print the root-system tables (Cartan matrix, positive roots, rho, ...)
    Info {
        #[command(flatten)]
        system: SystemArgs,
        /// Also enumerate the Weyl group and report its order
        #[arg(long)]
        weyl: bool,
    },
    /// Kostant partition count P_n(nu); nu is given in root coordinates
    Kostant {
        #[command(flatten)]
        system: SystemArgs,
        /// Root coordinates of nu, comma-separated
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        nu: Vec<i64>,
        /// Number of parts n
        #[arg(short = 'n', long)]
        n: u64,
        /// Cross-check against the brute-force oracle
        #[arg(long)]
        oracle: bool,
    },
    /// Cohomology dimension for lambda at one degree; lambda is given in
    /// fundamental-weight coordinates
    Dim {
        #[command(flatten)]
        system: SystemArgs,
        /// Fundamental coordinates of lambda, comma-separated
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<i64>,
        /// Prime p (must exceed the Coxeter number)
        #[arg(short = 'p', long)]
        p: u64,
        /// Cohomological degree i
        #[arg(short = 'i', long = "i", visible_alias = "degree")]
        degree: u64,
    },
    /// Degree lower bounds for lambda's decomposition
    Bound {
        #[command(flatten)]
        system: SystemArgs,
        /// Fundamental coordinates of lambda, comma-separated
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<i64>,
        /// Prime p (must exceed the Coxeter number)
        #[arg(short = 'p', long)]
        p: u64,
        /// Positive-root index for the sigma bound (default: highest root)
        #[arg(long)]
        sigma: Option<usize>,
        /// Report the type-A fundamental-weight bound for omega_j instead
        /// (j is 1-based)
        #[arg(long)]
        fundamental_j: Option<usize>,
    },
    /// Exhaustive vanishing scan over all candidates up to --i-max
    Scan {
        #[command(flatten)]
        system: SystemArgs,
        /// Prime p (must exceed the Coxeter number)
        #[arg(short = 'p', long)]
        p: u64,
        /// Largest degree to scan (default: 2p - 2, one past the largest
        /// sharp bound in the reference table)
        #[arg(long)]
        i_max: Option<u64>,
        /// Stop after the first nonzero degree (evaluated in full)
        #[arg(long)]
        early_exit: bool,
    },
    /// Scan and compare against the reference sharp-bound table
    Verify {
        #[command(flatten)]
        system: SystemArgs,
        /// Prime p (must exceed the Coxeter number)
        #[arg(short = 'p', long)]
        p: u64,
        /// Stop after the first nonzero degree (evaluated in full)
        #[arg(long)]
        early_exit: bool,
    },
}

/// Semantic inputs echoed in every report. Execution knobs are omitted on
/// purpose: equal inputs must give byte-equal reports.
#[derive(Serialize)]
struct ConfigEcho {
    command: &'static str,
    family: String,
    rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    degree: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    i_max: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nu: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    early_exit: Option<bool>,
}

impl ConfigEcho {
    fn new(command: &'static str, family: Family, rank: usize) -> ConfigEcho {
        ConfigEcho {
            command,
            family: family.to_string(),
            rank,
            p: None,
            degree: None,
            i_max: None,
            nu: None,
            lambda: None,
            n: None,
            early_exit: None,
        }
    }
}

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    schema: &'static str,
    config: ConfigEcho,
    result: T,
}

#[derive(Serialize)]
struct RootReport {
    index: usize,
    fund: Vec<i64>,
    root: Vec<i64>,
    long: bool,
}

#[derive(Serialize)]
struct InfoResult {
    label: String,
    positive_roots: usize,
    coxeter_number: u64,
    cartan: Vec<Vec<i64>>,
    cartan_det: i64,
    rho_fund: Vec<i64>,
    highest_root: RootReport,
    highest_short_root: RootReport,
    roots: Vec<RootReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    weyl_order: Option<usize>,
}

#[derive(Serialize)]
struct KostantResult {
    nu: Vec<i64>,
    n: u64,
    count: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_count: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_agrees: Option<bool>,
}

#[derive(Serialize)]
struct DimCliResult {
    lambda: Vec<i64>,
    p: u64,
    degree: u64,
    dimension: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    decomposition: Option<DecompositionReport>,
    terms: Vec<TermReport>,
}

#[derive(Serialize)]
struct BoundResult {
    lambda: Vec<i64>,
    p: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    decomposition: Option<DecompositionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sigma_index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sigma_bound: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    highest_root_bound: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max: Option<i64>,
    /// Set when --fundamental-j is used: the exact rational bound and the
    /// unique weight where equality can occur.
    #[serde(skip_serializing_if = "Option::is_none")]
    fundamental_bound: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    equality_witness: Option<Vec<i64>>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn parse_system(args: &SystemArgs) -> Result<RootSystem, String> {
    let family: Family = args.family.parse()?;
    let spec = RootSystemSpec::new(family, args.rank).map_err(|e| e.to_string())?;
    RootSystem::build(spec).map_err(|e| e.to_string())
}

fn check_coords(name: &str, coords: &[i64], rank: usize) -> Result<(), String> {
    if coords.len() != rank {
        return Err(format!(
            "{name} has {} coordinates but the rank is {rank}",
            coords.len()
        ));
    }
    Ok(())
}

/// Desk-scale caps for full scans.
fn check_scan_caps(rs: &RootSystem, p: u64) -> Result<(), String> {
    let cap = match rs.family() {
        Family::A => 6,
        Family::B | Family::C | Family::D => 4,
        Family::G | Family::F => rs.rank(),
    };
    if rs.rank() > cap {
        return Err(format!(
            "scans cap type {} at rank {cap} (requested rank {})",
            rs.family(),
            rs.rank()
        ));
    }
    if p > 31 {
        return Err(format!("scans cap p at 31 (requested {p})"));
    }
    Ok(())
}

fn cache_path(dir: &Path, rs: &RootSystem) -> PathBuf {
    dir.join(format!("{}-{}.json", rs.label(), RECURRENCE_VERSION))
}

/// Loads a cache if present; corrupt or mismatched files are reported,
/// deleted, and recomputed from scratch.
fn load_cache(table: &PartitionTable, rs: &RootSystem, dir: &Path) {
    let path = cache_path(dir, rs);
    let Ok(file) = fs::File::open(&path) else {
        return;
    };
    match table.load_cache(file) {
        Ok(_) => {}
        Err(e) => {
            eprintln!("warning: discarding cache {}: {e}", path.display());
            let _ = fs::remove_file(&path);
        }
    }
}

fn save_cache(table: &PartitionTable, rs: &RootSystem, dir: &Path) {
    if let Err(e) = fs::create_dir_all(dir) {
        eprintln!("warning: cannot create cache dir {}: {e}", dir.display());
        return;
    }
    let path = cache_path(dir, rs);
    let tmp = path.with_extension("json.tmp");
    let result = fs::File::create(&tmp)
        .map_err(|e| e.to_string())
        .and_then(|mut f| table.save_cache(&mut f).map_err(|e| e.to_string()))
        .and_then(|()| fs::rename(&tmp, &path).map_err(|e| e.to_string()));
    if let Err(e) = result {
        eprintln!("warning: cannot write cache {}: {e}", path.display());
        let _ = fs::remove_file(&tmp);
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let cache_dir = if cli.no_cache {
        None
    } else {
        cli.cache_dir
            .clone()
            .or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from))
    };
    let jobs = cli.jobs.max(1);

    match &cli.command {
        Command::Info { system, weyl } => {
            let rs = parse_system(system)?;
            let weyl_order = if *weyl {
                Some(
                    WeylGroup::enumerate(&rs)
                        .map_err(|e| e.to_string())?
                        .order(),
                )
            } else {
                None
            };
            let root_report = |k: usize| RootReport {
                index: k,
                fund: rs.positive_root(k).fund_i64(),
                root: rs.positive_root(k).root_coords_i64().unwrap(),
                long: rs.is_long_root(k),
            };
            let result = InfoResult {
                label: rs.label(),
                positive_roots: rs.num_positive_roots(),
                coxeter_number: rs.coxeter_number(),
                cartan: rs.cartan().to_vec(),
                cartan_det: rs.cartan_det(),
                rho_fund: rs.rho().fund_i64(),
                highest_root: root_report(rs.highest_root_index()),
                highest_short_root: root_report(rs.highest_short_root_index()),
                roots: (0..rs.num_positive_roots()).map(root_report).collect(),
                weyl_order,
            };
            let config = ConfigEcho::new("info", rs.family(), rs.rank());
            emit_info(&cli.format, config, result)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Kostant {
            system,
            nu,
            n,
            oracle,
        } => {
            let rs = parse_system(system)?;
            check_coords("nu", nu, rs.rank())?;
            if rs.rank() > 8 || nu.iter().any(|&c| c > i64::from(u16::MAX)) {
                return Err(
                    "partition arguments support rank <= 8 and coordinates <= 65535".to_string(),
                );
            }
            let table = PartitionTable::new(&rs);
            if let Some(dir) = &cache_dir {
                load_cache(&table, &rs, dir);
            }
            let count = table.partition_coords(nu, *n);
            let weight = rs.weight_from_root_ints(nu);
            let (oracle_count, oracle_agrees) = if *oracle {
                let slow = partition_brute_force(&rs, &weight, *n, OracleCaps::default())
                    .map_err(|e| e.to_string())?;
                let agrees = slow == count;
                (Some(slow.to_string()), Some(agrees))
            } else {
                (None, None)
            };
            if let Some(dir) = &cache_dir {
                save_cache(&table, &rs, dir);
            }
            let mut config = ConfigEcho::new("kostant", rs.family(), rs.rank());
            config.nu = Some(nu.clone());
            config.n = Some(*n);
            let result = KostantResult {
                nu: nu.clone(),
                n: *n,
                count: count.to_string(),
                oracle_count,
                oracle_agrees,
            };
            emit_kostant(&cli.format, config, result)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Dim {
            system,
            lambda,
            p,
            degree,
        } => {
            let rs = parse_system(system)?;
            check_coords("lambda", lambda, rs.rank())?;
            if rs.rank() > 8 {
                return Err("dimension evaluation supports rank <= 8".to_string());
            }
            let group = WeylGroup::enumerate(&rs).map_err(|e| e.to_string())?;
            let table = PartitionTable::new(&rs);
            if let Some(dir) = &cache_dir {
                load_cache(&table, &rs, dir);
            }
            let weight = rs.weight_from_fund(lambda);
            let dim = cohomology_dim(&rs, &group, &table, &weight, *p, *degree)
                .map_err(|e| e.to_string())?;
            if let Some(dir) = &cache_dir {
                save_cache(&table, &rs, dir);
            }
            let mut config = ConfigEcho::new("dim", rs.family(), rs.rank());
            config.lambda = Some(lambda.clone());
            config.p = Some(*p);
            config.degree = Some(*degree);
            let result = DimCliResult {
                lambda: lambda.clone(),
                p: *p,
                degree: *degree,
                dimension: dim.dimension.to_string(),
                decomposition: dim.decomposition.as_ref().map(|d| DecompositionReport {
                    mu: d.mu.fund_i64(),
                    w_index: d.w_index,
                    w_length: d.w_length,
                }),
                terms: dim
                    .terms
                    .iter()
                    .map(|t| TermReport {
                        u_index: t.u_index,
                        sign: t.sign,
                        argument: t.argument.clone(),
                        count: t.count.to_string(),
                    })
                    .collect(),
            };
            emit_dim(&cli.format, config, result)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Bound {
            system,
            lambda,
            p,
            sigma,
            fundamental_j,
        } => {
            let rs = parse_system(system)?;
            check_coords("lambda", lambda, rs.rank())?;
            let mut config = ConfigEcho::new("bound", rs.family(), rs.rank());
            config.lambda = Some(lambda.clone());
            config.p = Some(*p);
            let mut result = BoundResult {
                lambda: lambda.clone(),
                p: *p,
                decomposition: None,
                sigma_index: None,
                sigma_bound: None,
                highest_root_bound: None,
                max: None,
                fundamental_bound: None,
                equality_witness: None,
            };
            if let Some(j) = fundamental_j {
                if rs.family() != Family::A {
                    return Err("--fundamental-j applies to type A only".to_string());
                }
                if !(1..=rs.rank()).contains(j) || *p <= rs.rank() as u64 + 1 {
                    return Err(format!(
                        "--fundamental-j requires 1 <= j <= {} and p > {}",
                        rs.rank(),
                        rs.rank() + 1
                    ));
                }
                let b = type_a_fundamental_bound(rs.rank(), *p, *j);
                result.fundamental_bound = Some(b.bound.to_string());
                result.equality_witness = Some(b.equality_witness_fund);
            } else {
                let group = WeylGroup::enumerate(&rs).map_err(|e| e.to_string())?;
                let weight = rs.weight_from_fund(lambda);
                let d = unique_decomposition(&rs, &group, &weight, *p)
                    .map_err(|e| e.to_string())?
                    .ok_or_else(|| {
                        format!("{weight} does not decompose as p*mu + w.0; no bound applies")
                    })?;
                let sigma_index = sigma.unwrap_or_else(|| rs.highest_root_index());
                if sigma_index >= rs.num_positive_roots() {
                    return Err(format!(
                        "sigma index {sigma_index} out of range ({} positive roots)",
                        rs.num_positive_roots()
                    ));
                }
                let b = degree_lower_bound_pair(&rs, &group, &d, &d, sigma_index)
                    .map_err(|e| e.to_string())?;
                result.decomposition = Some(DecompositionReport {
                    mu: d.mu.fund_i64(),
                    w_index: d.w_index,
                    w_length: d.w_length,
                });
                result.sigma_index = Some(sigma_index);
                result.sigma_bound = Some(b.sigma_bound);
                result.highest_root_bound = Some(b.highest_root_bound);
                result.max = Some(b.max);
            }
            emit_bound(&cli.format, config, result)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Scan {
            system,
            p,
            i_max,
            early_exit,
        } => {
            let rs = parse_system(system)?;
            check_scan_caps(&rs, *p)?;
            let i_max = i_max.unwrap_or(2 * p - 2);
            let group = WeylGroup::enumerate(&rs).map_err(|e| e.to_string())?;
            let table = PartitionTable::new(&rs);
            if let Some(dir) = &cache_dir {
                load_cache(&table, &rs, dir);
            }
            let report = vanishing_scan(
                &rs,
                &group,
                &table,
                *p,
                i_max,
                ScanOptions {
                    early_exit: *early_exit,
                    jobs,
                },
            )
            .map_err(|e| e.to_string())?;
            if let Some(dir) = &cache_dir {
                save_cache(&table, &rs, dir);
            }
            let mut config = ConfigEcho::new("scan", rs.family(), rs.rank());
            config.p = Some(*p);
            config.i_max = Some(i_max);
            config.early_exit = Some(*early_exit);
            let verdict = report.verdict;
            emit_scan(&cli.format, config, report)?;
            Ok(exit_for(verdict))
        }

        Command::Verify {
            system,
            p,
            early_exit,
        } => {
            let rs = parse_system(system)?;
            check_scan_caps(&rs, *p)?;
            let group = WeylGroup::enumerate(&rs).map_err(|e| e.to_string())?;
            let table = PartitionTable::new(&rs);
            if let Some(dir) = &cache_dir {
                load_cache(&table, &rs, dir);
            }
            let report = verify_sharp_bound(
                &rs,
                &group,
                &table,
                *p,
                ScanOptions {
                    early_exit: *early_exit,
                    jobs,
                },
            )
            .map_err(|e| e.to_string())?;
            if let Some(dir) = &cache_dir {
                save_cache(&table, &rs, dir);
            }
            let mut config = ConfigEcho::new("verify", rs.family(), rs.rank());
            config.p = Some(*p);
            config.early_exit = Some(*early_exit);
            let verdict = report.verdict;
            emit_scan(&cli.format, config, report)?;
            Ok(exit_for(verdict))
        }
    }
}

fn exit_for(verdict: Verdict) -> ExitCode {
    match verdict {
        Verdict::Mismatch => ExitCode::from(2),
        Verdict::Match | Verdict::NotCovered => ExitCode::SUCCESS,
    }
}

fn print_json<T: Serialize>(config: ConfigEcho, result: T) -> Result<(), String> {
    let envelope = Envelope {
        schema: REPORT_SCHEMA,
        config,
        result,
    };
    let text = serde_json::to_string_pretty(&envelope).map_err(|e| e.to_string())?;
    println!("{text}");
    Ok(())
}

fn coords_cell(coords: &[i64]) -> String {
    coords
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn emit_info(format: &Format, config: ConfigEcho, result: InfoResult) -> Result<(), String> {
    match format {
        Format::Json => print_json(config, result),
        Format::Csv => {
            println!("index,fund,root,long");
            for r in &result.roots {
                println!(
                    "{},{},{},{}",
                    r.index,
                    coords_cell(&r.fund),
                    coords_cell(&r.root),
                    r.long
                );
            }
            Ok(())
        }
        Format::Table => {
            println!("system          {}", result.label);
            println!("positive roots  {}", result.positive_roots);
            println!("coxeter number  {}", result.coxeter_number);
            println!("cartan det      {}", result.cartan_det);
            if let Some(order) = result.weyl_order {
                println!("weyl order      {order}");
            }
            println!("highest root    fund {:?}", result.highest_root.fund);
            println!("highest short   fund {:?}", result.highest_short_root.fund);
            println!("index  fund            root            length");
            for r in &result.roots {
                println!(
                    "{:<6} {:<15} {:<15} {}",
                    r.index,
                    coords_cell(&r.fund),
                    coords_cell(&r.root),
                    if r.long { "long" } else { "short" }
                );
            }
            Ok(())
        }
    }
}

fn emit_kostant(format: &Format, config: ConfigEcho, result: KostantResult) -> Result<(), String> {
    match format {
        Format::Json => print_json(config, result),
        Format::Csv => {
            println!("nu,n,count");
            println!("{},{},{}", coords_cell(&result.nu), result.n, result.count);
            Ok(())
        }
        Format::Table => {
            println!("P_{}({:?}) = {}", result.n, result.nu, result.count);
            if let Some(oracle) = &result.oracle_count {
                println!(
                    "oracle        = {oracle} ({})",
                    if result.oracle_agrees == Some(true) {
                        "agrees"
                    } else {
                        "DISAGREES"
                    }
                );
            }
            Ok(())
        }
    }
}

fn emit_dim(format: &Format, config: ConfigEcho, result: DimCliResult) -> Result<(), String> {
    match format {
        Format::Json => print_json(config, result),
        Format::Csv => {
            println!("lambda,p,degree,dimension");
            println!(
                "{},{},{},{}",
                coords_cell(&result.lambda),
                result.p,
                result.degree,
                result.dimension
            );
            Ok(())
        }
        Format::Table => {
            println!(
                "dim H^{}(lambda = {:?}, p = {}) = {}",
                result.degree, result.lambda, result.p, result.dimension
            );
            match &result.decomposition {
                Some(d) => println!(
                    "decomposition  mu = {:?}, l(w) = {}, w index {}",
                    d.mu, d.w_length, d.w_index
                ),
                None => println!("no decomposition: vanishes in all positive degrees"),
            }
            for t in &result.terms {
                println!(
                    "  u {:<5} sign {:+} argument {:?} count {}",
                    t.u_index, t.sign, t.argument, t.count
                );
            }
            Ok(())
        }
    }
}

fn emit_bound(format: &Format, config: ConfigEcho, result: BoundResult) -> Result<(), String> {
    match format {
        Format::Json => print_json(config, result),
        Format::Csv => {
            println!("sigma_bound,highest_root_bound,max,fundamental_bound");
            println!(
                "{},{},{},{}",
                result.sigma_bound.map_or(String::new(), |v| v.to_string()),
                result
                    .highest_root_bound
                    .map_or(String::new(), |v| v.to_string()),
                result.max.map_or(String::new(), |v| v.to_string()),
                result.fundamental_bound.clone().unwrap_or_default()
            );
            Ok(())
        }
        Format::Table => {
            if let Some(b) = &result.fundamental_bound {
                println!("fundamental bound  {b}");
                println!("equality witness   {:?}", result.equality_witness);
            } else {
                println!("sigma bound          {}", result.sigma_bound.unwrap());
                println!(
                    "highest-root bound   {}",
                    result.highest_root_bound.unwrap()
                );
                println!("max                  {}", result.max.unwrap());
            }
            Ok(())
        }
    }
}

fn emit_scan(format: &Format, config: ConfigEcho, report: ScanReport) -> Result<(), String> {
    match format {
        Format::Json => print_json(config, report),
        Format::Csv => {
            println!("degree,lambda,dimension");
            for w in &report.witnesses {
                println!("{},{},{}", w.degree, coords_cell(&w.lambda), w.dimension);
            }
            Ok(())
        }
        Format::Table => {
            println!("system        {}{}", report.family, report.rank);
            println!("p             {}", report.p);
            println!("i max         {}", report.i_max);
            println!("candidates    {}", report.candidates);
            println!("pairs checked {}", report.pairs_checked);
            match report.least_degree {
                Some(d) => println!(
                    "least degree  {d} (total dimension {})",
                    report
                        .total_dimension_at_least_degree
                        .as_deref()
                        .unwrap_or("?")
                ),
                None => println!("least degree  none below i max"),
            }
            for w in &report.witnesses {
                println!(
                    "  degree {:<3} lambda {:<15} dimension {}",
                    w.degree,
                    coords_cell(&w.lambda),
                    w.dimension
                );
            }
            match (report.expected.covered, &report.expected.degree) {
                (true, Some(d)) => println!(
                    "expected      degree {d}, dimension {} ({})",
                    report.expected.dimension.unwrap_or(0),
                    report.expected.note
                ),
                _ => println!("expected      not covered: {}", report.expected.note),
            }
            let verdict = match report.verdict {
                Verdict::Match => "MATCH",
                Verdict::Mismatch => "MISMATCH",
                Verdict::NotCovered => "NOT_COVERED",
            };
            println!("verdict       {verdict}");
            Ok(())
        }
    }
}

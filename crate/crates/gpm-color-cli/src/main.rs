//! Batch front end for the matroid-pair coloring toolkit. Every command
//! reads JSON artifacts, all randomness flows through explicit seeds, and
//! output files are byte-deterministic for fixed inputs.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use gpm_color::{
    brute_chi, brute_kernel, brute_list_color, chi_of_pair, coloring_violations, expansion_number,
    format, list_color, optimal_coloring, random_instance, random_lists, verify_list_coloring,
    Error, GeneratorParams, MatroidPair, OrderedContext, Side,
};

const EXIT_OK: u8 = 0;
const EXIT_FAILED_CHECK: u8 = 1;
const EXIT_BAD_INPUT: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "gpm-color",
    about = "Optimal and list coloring for intersections of generalized partition matroids",
    version
)]
struct Cli {
    /// Report format for informational output
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print both expansion numbers and the chromatic number of an instance
    Chi {
        /// Instance file (matroid or bipartite JSON form)
        instance: PathBuf,
    },
    /// Compute an optimal coloring and write it as JSON
    Color {
        instance: PathBuf,
        /// Output path; stdout when omitted
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute a list coloring from per-element color lists
    ListColor {
        instance: PathBuf,
        /// Lists file: {"lists": [["a","b"], ...]}
        #[arg(long)]
        lists: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute a kernel for the orders derived from a coloring or labeling
    Kernel {
        instance: PathBuf,
        #[command(flatten)]
        orders: OrderSource,
        /// Restrict to these elements (comma-separated ids); full ground set
        /// when omitted
        #[arg(long, value_delimiter = ',')]
        ground: Option<Vec<usize>>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check an artifact against an instance
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Generate a seeded random instance
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        elements: usize,
        #[arg(long, default_value_t = 4)]
        max_parts: usize,
        #[arg(long, default_value_t = 3)]
        max_cap: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Brute-force ground truth on small instances
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Time the solvers over seeded random instances
    Bench {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 40)]
        elements: usize,
        #[arg(long, default_value_t = 6)]
        max_parts: usize,
        #[arg(long, default_value_t = 3)]
        max_cap: usize,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct OrderSource {
    /// Coloring file; canonical orders are derived from its class blocks
    #[arg(long)]
    coloring: Option<PathBuf>,
    /// Labels file: {"labels": [..]} assigning 1..=n to the elements
    #[arg(long)]
    labels: Option<PathBuf>,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Check that a coloring is a valid optimal decomposition
    Coloring {
        instance: PathBuf,
        coloring: PathBuf,
    },
    /// Check a list-coloring assignment against its lists
    List {
        instance: PathBuf,
        #[arg(long)]
        lists: PathBuf,
        #[arg(long)]
        assignment: PathBuf,
    },
    /// Check a kernel for the given orders
    Kernel {
        instance: PathBuf,
        #[arg(long)]
        kernel: PathBuf,
        #[command(flatten)]
        orders: OrderSource,
        #[arg(long, value_delimiter = ',')]
        ground: Option<Vec<usize>>,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Exact chromatic number by exhaustive search (n <= 12)
    Chi { instance: PathBuf },
    /// All kernels by subset enumeration (ground <= 12)
    Kernel {
        instance: PathBuf,
        #[command(flatten)]
        orders: OrderSource,
        #[arg(long, value_delimiter = ',')]
        ground: Option<Vec<usize>>,
    },
    /// Some valid list coloring by exhaustive search, if one exists
    List {
        instance: PathBuf,
        #[arg(long)]
        lists: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::InternalInfeasible
        | Error::InternalInvariantViolated { .. }
        | Error::NoKernelFound => EXIT_INTERNAL,
        Error::ListTooShort { .. } => EXIT_FAILED_CHECK,
        _ => EXIT_BAD_INPUT,
    }
}

fn read_text(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load_pair(path: &Path) -> Result<MatroidPair, Error> {
    Ok(format::parse_instance(&read_text(path)?)?.into_pair())
}

fn load_context(pair: &MatroidPair, orders: &OrderSource) -> Result<OrderedContext, Error> {
    if let Some(path) = &orders.coloring {
        let coloring = format::parse_coloring(&read_text(path)?)?;
        OrderedContext::from_coloring(pair, &coloring)
    } else if let Some(path) = &orders.labels {
        let labels = format::parse_labels(&read_text(path)?)?;
        OrderedContext::new(pair.clone(), labels)
    } else {
        unreachable!("clap enforces exactly one order source")
    }
}

fn check_ground(pair: &MatroidPair, ground: &Option<Vec<usize>>) -> Result<Vec<usize>, Error> {
    let n = pair.n_elements();
    let mut ground = match ground {
        Some(ids) => ids.clone(),
        None => (0..n).collect(),
    };
    for &v in &ground {
        if v >= n {
            return Err(Error::ElementOutOfRange {
                element: v,
                universe: n,
            });
        }
    }
    ground.sort_unstable();
    ground.dedup();
    Ok(ground)
}

fn emit(output: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    match output {
        Some(path) => {
            fs::write(path, content).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    match &cli.command {
        Command::Chi { instance } => {
            let pair = load_pair(instance)?;
            let d1 = expansion_number(pair.m1());
            let d2 = expansion_number(pair.m2());
            let chi = chi_of_pair(&pair);
            match cli.format {
                Format::Text => {
                    println!("delta1 = {d1}");
                    println!("delta2 = {d2}");
                    println!("chi = {chi}");
                }
                Format::Json => {
                    let value = json!({
                        "delta1": d1.to_string(),
                        "delta2": d2.to_string(),
                        "chi": chi,
                    });
                    println!("{}", serde_json::to_string_pretty(&value).unwrap());
                }
            }
            Ok(EXIT_OK)
        }

        Command::Color { instance, output } => {
            let pair = load_pair(instance)?;
            let coloring = optimal_coloring(&pair);
            emit(output, &format::coloring_to_json(&coloring))?;
            Ok(EXIT_OK)
        }

        Command::ListColor {
            instance,
            lists,
            output,
        } => {
            let pair = load_pair(instance)?;
            let la = format::parse_lists(&read_text(lists)?)?;
            match list_color(&pair, &la) {
                Ok(out) => {
                    emit(output, &format::assignment_to_json(&out))?;
                    Ok(EXIT_OK)
                }
                Err(Error::ListTooShort {
                    required,
                    offenders,
                }) => {
                    report_short_lists(cli.format, required, &offenders);
                    Ok(EXIT_FAILED_CHECK)
                }
                Err(other) => Err(other),
            }
        }

        Command::Kernel {
            instance,
            orders,
            ground,
            output,
        } => {
            let pair = load_pair(instance)?;
            let ctx = load_context(&pair, orders)?;
            let ground = check_ground(&pair, ground)?;
            let result = ctx.find_kernel(&ground)?;
            emit(output, &format::kernel_to_json(&result))?;
            Ok(EXIT_OK)
        }

        Command::Verify(verify) => run_verify(cli.format, verify),

        Command::Gen {
            seed,
            elements,
            max_parts,
            max_cap,
            output,
        } => {
            if *elements == 0 || *max_parts == 0 || *max_cap == 0 {
                return Err(Error::Parse(
                    "gen needs positive --elements, --max-parts, and --max-cap".into(),
                ));
            }
            let pair = random_instance(&GeneratorParams {
                n_elements: *elements,
                max_parts_per_side: *max_parts,
                max_cap: *max_cap,
                seed: *seed,
            });
            emit(output, &format::instance_to_json(&pair))?;
            Ok(EXIT_OK)
        }

        Command::Oracle(oracle) => run_oracle(cli.format, oracle),

        Command::Bench {
            seed,
            trials,
            elements,
            max_parts,
            max_cap,
        } => {
            if *trials == 0 || *elements == 0 || *max_parts == 0 || *max_cap == 0 {
                return Err(Error::Parse("bench parameters must be positive".into()));
            }
            run_bench(cli.format, *seed, *trials, *elements, *max_parts, *max_cap)
        }
    }
}

fn report_short_lists(fmt: Format, required: usize, offenders: &[(usize, usize)]) {
    match fmt {
        Format::Text => {
            println!("list coloring not attempted: lists below the chromatic number {required}");
            for (element, len) in offenders {
                println!("element {element}: list has {len} colors, needs {required}");
            }
        }
        Format::Json => {
            let value = json!({
                "ok": false,
                "required": required,
                "short_lists": offenders
                    .iter()
                    .map(|(e, l)| json!({"element": e, "length": l}))
                    .collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
    }
}

fn print_report(fmt: Format, what: &str, violations: Vec<String>) -> u8 {
    match fmt {
        Format::Text => {
            if violations.is_empty() {
                println!("{what}: ok");
            } else {
                println!("{what}: {} violation(s)", violations.len());
                for v in &violations {
                    println!("  {v}");
                }
            }
        }
        Format::Json => {
            let value = json!({
                "checked": what,
                "ok": violations.is_empty(),
                "violations": violations,
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
    }
    if violations.is_empty() {
        EXIT_OK
    } else {
        EXIT_FAILED_CHECK
    }
}

fn run_verify(fmt: Format, verify: &VerifyCommand) -> Result<u8, Error> {
    match verify {
        VerifyCommand::Coloring { instance, coloring } => {
            let pair = load_pair(instance)?;
            let coloring = format::parse_coloring(&read_text(coloring)?)?;
            let violations: Vec<String> = coloring_violations(&pair, &coloring)
                .into_iter()
                .map(|v| v.to_string())
                .collect();
            Ok(print_report(fmt, "coloring", violations))
        }
        VerifyCommand::List {
            instance,
            lists,
            assignment,
        } => {
            let pair = load_pair(instance)?;
            let la = format::parse_lists(&read_text(lists)?)?;
            let out = format::parse_assignment(&read_text(assignment)?)?;
            let violations: Vec<String> = verify_list_coloring(&pair, &la, &out)
                .into_iter()
                .map(|v| v.to_string())
                .collect();
            Ok(print_report(fmt, "list coloring", violations))
        }
        VerifyCommand::Kernel {
            instance,
            kernel,
            orders,
            ground,
        } => {
            let pair = load_pair(instance)?;
            let ctx = load_context(&pair, orders)?;
            let ground = check_ground(&pair, ground)?;
            let kernel = format::parse_kernel(&read_text(kernel)?)?;
            let violations = kernel_violations(&ctx, &kernel, &ground)?;
            Ok(print_report(fmt, "kernel", violations))
        }
    }
}

fn kernel_violations(
    ctx: &OrderedContext,
    kernel: &[usize],
    ground: &[usize],
) -> Result<Vec<String>, Error> {
    let mut violations = Vec::new();
    for &v in kernel {
        if !ground.contains(&v) {
            violations.push(format!("kernel element {v} is outside the ground set"));
        }
    }
    if !ctx.pair().is_common_independent(kernel)? {
        violations.push("kernel is not common independent".to_string());
    }
    if violations.is_empty() {
        for &v in ground {
            if !ctx.dominates(Side::M1, kernel, v, ground)?
                && !ctx.dominates(Side::M2, kernel, v, ground)?
            {
                violations.push(format!("element {v} is not dominated on either side"));
            }
        }
    }
    Ok(violations)
}

fn run_oracle(fmt: Format, oracle: &OracleCommand) -> Result<u8, Error> {
    match oracle {
        OracleCommand::Chi { instance } => {
            let pair = load_pair(instance)?;
            let chi = brute_chi(&pair)?;
            match fmt {
                Format::Text => println!("chi = {chi}"),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "chi": chi })).unwrap()
                ),
            }
            Ok(EXIT_OK)
        }
        OracleCommand::Kernel {
            instance,
            orders,
            ground,
        } => {
            let pair = load_pair(instance)?;
            let ctx = load_context(&pair, orders)?;
            let ground = check_ground(&pair, ground)?;
            let kernels = brute_kernel(&ctx, &ground)?;
            match fmt {
                Format::Text => {
                    println!("{} kernel(s)", kernels.len());
                    for k in &kernels {
                        let ids: Vec<String> = k.iter().map(|v| v.to_string()).collect();
                        println!("  {{{}}}", ids.join(", "));
                    }
                }
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "kernels": kernels })).unwrap()
                ),
            }
            Ok(EXIT_OK)
        }
        OracleCommand::List { instance, lists } => {
            let pair = load_pair(instance)?;
            let la = format::parse_lists(&read_text(lists)?)?;
            match brute_list_color(&pair, &la)? {
                Some(out) => {
                    print!("{}", format::assignment_to_json(&out));
                    Ok(EXIT_OK)
                }
                None => {
                    match fmt {
                        Format::Text => println!("no valid assignment exists"),
                        Format::Json => println!(
                            "{}",
                            serde_json::to_string_pretty(&json!({ "assignment": null })).unwrap()
                        ),
                    }
                    Ok(EXIT_FAILED_CHECK)
                }
            }
        }
    }
}

fn run_bench(
    fmt: Format,
    seed: u64,
    trials: usize,
    elements: usize,
    max_parts: usize,
    max_cap: usize,
) -> Result<u8, Error> {
    let mut color_ms = Vec::with_capacity(trials);
    let mut list_ms = Vec::with_capacity(trials);
    for trial in 0..trials {
        let pair = random_instance(&GeneratorParams {
            n_elements: elements,
            max_parts_per_side: max_parts,
            max_cap,
            seed: seed.wrapping_add(trial as u64),
        });
        let chi = chi_of_pair(&pair);

        let start = Instant::now();
        let coloring = optimal_coloring(&pair);
        color_ms.push(start.elapsed().as_secs_f64() * 1e3);
        if !coloring_violations(&pair, &coloring).is_empty() {
            return Err(Error::InternalInvariantViolated {
                reason: format!("bench trial {trial} produced an invalid coloring"),
            });
        }

        let la = random_lists(
            elements,
            chi.max(1),
            2 * chi.max(1),
            seed.wrapping_add(trial as u64),
        );
        let start = Instant::now();
        let out = list_color(&pair, &la)?;
        list_ms.push(start.elapsed().as_secs_f64() * 1e3);
        if !verify_list_coloring(&pair, &la, &out).is_empty() {
            return Err(Error::InternalInvariantViolated {
                reason: format!("bench trial {trial} produced an invalid list coloring"),
            });
        }
    }

    let stats = |samples: &[f64]| {
        let mean = samples.iter().sum::<f64>() / samples.len() as f64;
        let min = samples.iter().cloned().fold(f64::INFINITY, f64::min);
        let max = samples.iter().cloned().fold(0.0f64, f64::max);
        (mean, min, max)
    };
    let (c_mean, c_min, c_max) = stats(&color_ms);
    let (l_mean, l_min, l_max) = stats(&list_ms);

    match fmt {
        Format::Text => {
            let mut table = String::new();
            writeln!(
                table,
                "{:<12} {:>7} {:>5} {:>10} {:>10} {:>10}",
                "op", "trials", "n", "mean_ms", "min_ms", "max_ms"
            )
            .unwrap();
            writeln!(
                table,
                "{:<12} {:>7} {:>5} {:>10.3} {:>10.3} {:>10.3}",
                "color", trials, elements, c_mean, c_min, c_max
            )
            .unwrap();
            writeln!(
                table,
                "{:<12} {:>7} {:>5} {:>10.3} {:>10.3} {:>10.3}",
                "list-color", trials, elements, l_mean, l_min, l_max
            )
            .unwrap();
            print!("{table}");
        }
        Format::Json => {
            let value = json!({
                "trials": trials,
                "elements": elements,
                "color_ms": {"mean": c_mean, "min": c_min, "max": c_max},
                "list_color_ms": {"mean": l_mean, "min": l_min, "max": l_max},
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
    }
    Ok(EXIT_OK)
}

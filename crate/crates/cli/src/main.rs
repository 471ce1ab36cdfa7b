//! Command-line surface for the twist-roots library.
//!
//! Exit codes: 0 on success (and when every verified statement holds),
//! 1 when `verify` finds a violation or `validate`/`genus` get an invalid
//! tuple, 2 on usage errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use twist_roots::bounds::{verify_theorems, CheckStatus, TheoremReport};
use twist_roots::data_set::{validate, DataSet};
use twist_roots::pairing::RootClass;
use twist_roots::reports::{
    bound_rows_to_csv, bound_rows_to_markdown, bound_rows_to_text, classification_report,
    classification_to_markdown, classification_to_text, table1_with_notes, table2,
    ClassificationReport, Table1,
};
use twist_roots::text::parse_candidate;
use twist_roots::{
    enumerate_data_sets, enumerate_for_genus, enumerate_root_classes, max_degree_for_genus,
    max_root_degree, witness_pair, EnumerationQuery,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Md,
}

#[derive(Parser)]
#[command(
    name = "twist-roots",
    version,
    about = "Enumerate, classify, and bound the roots of Dehn twists about separating curves"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for enumeration (default: all cores; the
    /// TWIST_ROOTS_JOBS environment variable is honored, this flag wins).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Write output to a file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a data-set literal such as "(6, 0, 5; (1, 2), (2, 3))" (text
    /// or JSON, argument or standard input) against every condition.
    Validate { literal: Option<String> },
    /// Print the genus of a valid data-set literal.
    Genus { literal: Option<String> },
    /// List all data sets of genus --g, either for one degree --n or for
    /// every degree up to 4g + 2.
    Enumerate {
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        g: u64,
    },
    /// List all root classes for the genus split (--g1, --g2).
    Pairs {
        #[arg(long)]
        g1: u64,
        #[arg(long)]
        g2: u64,
    },
    /// Maximum realizable root degree, for a total genus --g or a split
    /// --g1 --g2.
    MaxDegree {
        #[arg(long)]
        g: Option<u64>,
        #[arg(long)]
        g1: Option<u64>,
        #[arg(long)]
        g2: Option<u64>,
    },
    /// Construct the guaranteed root class of degree lcm(4*g1, 4*g2 + 2).
    Witness {
        #[arg(long)]
        g1: u64,
        #[arg(long)]
        g2: u64,
    },
    /// Rows (g, m(g), U(g), ratio) for a genus range.
    Table1 {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Rows (g, (g1, g2), m, U_stable, U) for all splits with both sides
    /// above N + 3.
    Table2 {
        #[arg(long = "N")]
        n: u64,
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Classification report for a split, grouped by degree, with the
    /// golden cross-check where one is embedded.
    Classify {
        #[arg(long)]
        g1: u64,
        #[arg(long)]
        g2: u64,
    },
    /// Recheck every bound and non-existence statement against full
    /// enumerations up to --g-max.
    Verify {
        #[arg(long = "g-max")]
        g_max: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    let jobs = match cli.jobs {
        Some(explicit) => Some(explicit),
        None => std::env::var("TWIST_ROOTS_JOBS")
            .ok()
            .map(|raw| raw.parse::<usize>())
            .transpose()
            .context("TWIST_ROOTS_JOBS must be a positive integer")?,
    };
    let (output, code) = match jobs {
        Some(0) => bail!("--jobs must be at least 1"),
        Some(width) => rayon::ThreadPoolBuilder::new()
            .num_threads(width)
            .build()
            .context("building the worker pool")?
            .install(|| dispatch(cli)),
        None => dispatch(cli),
    }?;
    match &cli.output {
        Some(path) => {
            fs::write(path, output).with_context(|| format!("writing {}", path.display()))?
        }
        None => {
            print!("{output}");
            io::stdout().flush()?;
        }
    }
    Ok(code)
}

fn dispatch(cli: &Cli) -> Result<(String, u8)> {
    match &cli.command {
        Command::Validate { literal } => cmd_validate(cli.format, literal.as_deref()),
        Command::Genus { literal } => cmd_genus(cli.format, literal.as_deref()),
        Command::Enumerate { n, g } => cmd_enumerate(cli.format, *n, *g),
        Command::Pairs { g1, g2 } => cmd_pairs(cli.format, *g1, *g2),
        Command::MaxDegree { g, g1, g2 } => cmd_max_degree(cli.format, *g, *g1, *g2),
        Command::Witness { g1, g2 } => cmd_witness(cli.format, *g1, *g2),
        Command::Table1 { from, to } => cmd_table1(cli.format, *from, *to),
        Command::Table2 { n, from, to } => cmd_table2(cli.format, *n, *from, *to),
        Command::Classify { g1, g2 } => cmd_classify(cli.format, *g1, *g2),
        Command::Verify { g_max } => cmd_verify(cli.format, *g_max),
    }
}

fn read_literal(argument: Option<&str>) -> Result<String> {
    match argument {
        Some(text) => Ok(text.to_string()),
        None => {
            let mut buffer = String::new();
            io::stdin()
                .read_to_string(&mut buffer)
                .context("reading the literal from standard input")?;
            Ok(buffer)
        }
    }
}

fn cmd_validate(format: Format, literal: Option<&str>) -> Result<(String, u8)> {
    let raw = read_literal(literal)?;
    let candidate = parse_candidate(&raw)?;
    let report = validate(&candidate);
    let code = if report.overall() { 0 } else { 1 };
    let output = match format {
        Format::Json => format!("{}\n", serde_json::to_string(&report)?),
        _ => format!("{report}\n"),
    };
    Ok((output, code))
}

fn cmd_genus(format: Format, literal: Option<&str>) -> Result<(String, u8)> {
    let raw = read_literal(literal)?;
    let candidate = parse_candidate(&raw)?;
    match DataSet::from_candidate(&candidate) {
        Ok(set) => {
            let output = match format {
                Format::Json => format!("{}\n", serde_json::json!({ "genus": set.genus() })),
                _ => format!("{}\n", set.genus()),
            };
            Ok((output, 0))
        }
        Err(report) => Ok((format!("{report}\n"), 1)),
    }
}

fn csv_field(text: &str) -> String {
    if text.contains(',') || text.contains('"') {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}

fn render_data_sets(format: Format, sets: &[DataSet]) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Text => {
            for set in sets {
                out.push_str(&format!("{set}\n"));
            }
        }
        Format::Json => {
            for set in sets {
                out.push_str(&serde_json::to_string(set)?);
                out.push('\n');
            }
        }
        Format::Csv => {
            out.push_str("n,gt,a,cones\n");
            for set in sets {
                let cones = set
                    .cones()
                    .iter()
                    .map(|c| format!("({}, {})", c.residue(), c.order()))
                    .collect::<Vec<_>>()
                    .join(", ");
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    set.degree(),
                    set.quotient_genus(),
                    set.residue(),
                    csv_field(&cones)
                ));
            }
        }
        Format::Md => {
            out.push_str("| n | gt | a | cones |\n|---|----|---|-------|\n");
            for set in sets {
                let cones = set
                    .cones()
                    .iter()
                    .map(|c| format!("({}, {})", c.residue(), c.order()))
                    .collect::<Vec<_>>()
                    .join(", ");
                out.push_str(&format!(
                    "| {} | {} | {} | {} |\n",
                    set.degree(),
                    set.quotient_genus(),
                    set.residue(),
                    cones
                ));
            }
        }
    }
    Ok(out)
}

fn cmd_enumerate(format: Format, degree: Option<u64>, genus: u64) -> Result<(String, u8)> {
    if genus < 1 {
        bail!("--g must be at least 1");
    }
    match degree {
        Some(n) => {
            if n < 1 {
                bail!("--n must be at least 1");
            }
            let query = EnumerationQuery::new(n, genus);
            if query.exceeds_order_bound() {
                eprintln!(
                    "note: degree {n} exceeds the order bound 4g + 2 = {}; the result is empty",
                    4 * genus + 2
                );
            }
            let sets = enumerate_data_sets(query);
            Ok((render_data_sets(format, &sets)?, 0))
        }
        None => {
            let by_degree = enumerate_for_genus(genus);
            match format {
                Format::Text => {
                    let mut out = String::new();
                    for (n, sets) in &by_degree {
                        if sets.is_empty() {
                            out.push_str(&format!("n={n}: (none)\n"));
                        } else {
                            for set in sets {
                                out.push_str(&format!("n={n}: {set}\n"));
                            }
                        }
                    }
                    Ok((out, 0))
                }
                _ => {
                    let all: Vec<DataSet> = by_degree.into_values().flatten().collect();
                    Ok((render_data_sets(format, &all)?, 0))
                }
            }
        }
    }
}

fn render_classes(format: Format, classes: &[RootClass]) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Text => {
            for class in classes {
                out.push_str(&format!("n={}: {class}\n", class.degree()));
            }
        }
        Format::Json => {
            for class in classes {
                out.push_str(&serde_json::to_string(class)?);
                out.push('\n');
            }
        }
        Format::Csv => {
            out.push_str("degree,g1,g2,d1,d2\n");
            for class in classes {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    class.degree(),
                    class.genus_first(),
                    class.genus_second(),
                    csv_field(&class.first().to_string()),
                    csv_field(&class.second().to_string())
                ));
            }
        }
        Format::Md => {
            out.push_str("| degree | g1 | g2 | d1 | d2 |\n|--------|----|----|----|----|\n");
            for class in classes {
                out.push_str(&format!(
                    "| {} | {} | {} | `{}` | `{}` |\n",
                    class.degree(),
                    class.genus_first(),
                    class.genus_second(),
                    class.first(),
                    class.second()
                ));
            }
        }
    }
    Ok(out)
}

fn cmd_pairs(format: Format, g1: u64, g2: u64) -> Result<(String, u8)> {
    if g2 < 1 || g1 < g2 {
        bail!("--g1 and --g2 must satisfy g1 >= g2 >= 1");
    }
    let classes = enumerate_root_classes(g1, g2);
    Ok((render_classes(format, &classes)?, 0))
}

fn cmd_max_degree(
    format: Format,
    g: Option<u64>,
    g1: Option<u64>,
    g2: Option<u64>,
) -> Result<(String, u8)> {
    match (g, g1, g2) {
        (Some(genus), None, None) => {
            if genus < 2 {
                bail!("--g must be at least 2");
            }
            let maximum = max_degree_for_genus(genus);
            let output = match format {
                Format::Json => format!("{}\n", serde_json::to_string(&maximum)?),
                _ => format!("{}\n", maximum.degree),
            };
            Ok((output, 0))
        }
        (None, Some(g1), Some(g2)) => {
            if g2 < 1 || g1 < g2 {
                bail!("--g1 and --g2 must satisfy g1 >= g2 >= 1");
            }
            let degree = max_root_degree(g1, g2);
            let output = match format {
                Format::Json => format!(
                    "{}\n",
                    serde_json::json!({ "g1": g1, "g2": g2, "degree": degree })
                ),
                _ => format!("{degree}\n"),
            };
            Ok((output, 0))
        }
        _ => bail!("pass either --g, or both --g1 and --g2"),
    }
}

fn cmd_witness(format: Format, g1: u64, g2: u64) -> Result<(String, u8)> {
    if g1 < 1 || g2 < 1 {
        bail!("--g1 and --g2 must be at least 1");
    }
    let class = witness_pair(g1, g2)?;
    let output = match format {
        Format::Json => format!("{}\n", serde_json::to_string(&class)?),
        _ => format!("degree {}: {class}\n", class.degree()),
    };
    Ok((output, 0))
}

fn render_table(format: Format, table: &Table1) -> Result<String> {
    let mut out = match format {
        Format::Text => bound_rows_to_text(&table.rows),
        Format::Csv => bound_rows_to_csv(&table.rows),
        Format::Md => bound_rows_to_markdown(&table.rows),
        Format::Json => format!("{}\n", serde_json::to_string(table)?),
    };
    if format == Format::Text || format == Format::Md {
        for note in &table.notes {
            out.push_str(&format!("note: {note}\n"));
        }
    }
    Ok(out)
}

fn cmd_table1(format: Format, from: u64, to: u64) -> Result<(String, u8)> {
    if from < 2 || from > to {
        bail!("--from/--to must satisfy 2 <= from <= to");
    }
    let table = table1_with_notes(from, to);
    Ok((render_table(format, &table)?, 0))
}

fn cmd_table2(format: Format, deficit: u64, from: u64, to: u64) -> Result<(String, u8)> {
    if deficit == 0 || deficit.is_multiple_of(2) {
        bail!("--N must be a positive odd integer");
    }
    if from < 2 || from > to {
        bail!("--from/--to must satisfy 2 <= from <= to");
    }
    let rows = table2(deficit, from, to)?;
    let output = match format {
        Format::Text => bound_rows_to_text(&rows),
        Format::Csv => bound_rows_to_csv(&rows),
        Format::Md => bound_rows_to_markdown(&rows),
        Format::Json => format!("{}\n", serde_json::to_string(&rows)?),
    };
    Ok((output, 0))
}

fn render_classification(format: Format, report: &ClassificationReport) -> Result<String> {
    Ok(match format {
        Format::Text => classification_to_text(report),
        Format::Md => classification_to_markdown(report),
        Format::Json => format!("{}\n", serde_json::to_string(report)?),
        Format::Csv => {
            let classes: Vec<RootClass> = report
                .groups
                .iter()
                .flat_map(|g| g.classes.iter().map(|c| c.class.clone()))
                .collect();
            render_classes(Format::Csv, &classes)?
        }
    })
}

fn cmd_classify(format: Format, g1: u64, g2: u64) -> Result<(String, u8)> {
    if g2 < 1 || g1 < g2 {
        bail!("--g1 and --g2 must satisfy g1 >= g2 >= 1");
    }
    let report = classification_report(g1, g2);
    Ok((render_classification(format, &report)?, 0))
}

fn render_verify(format: Format, report: &TheoremReport) -> Result<String> {
    Ok(match format {
        Format::Json => format!("{}\n", serde_json::to_string(&report.checks)?),
        Format::Csv => {
            let mut out = String::from("theorem,range,status,witnesses\n");
            for check in &report.checks {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    check.theorem,
                    csv_field(&check.range),
                    if check.status == CheckStatus::Pass {
                        "pass"
                    } else {
                        "fail"
                    },
                    csv_field(&check.witnesses.join("; "))
                ));
            }
            out
        }
        Format::Md => {
            let mut out =
                String::from("| theorem | range | status |\n|---------|-------|--------|\n");
            for check in &report.checks {
                out.push_str(&format!(
                    "| {} | {} | {} |\n",
                    check.theorem,
                    check.range,
                    if check.status == CheckStatus::Pass {
                        "pass"
                    } else {
                        "fail"
                    }
                ));
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for check in &report.checks {
                let tag = if check.status == CheckStatus::Pass {
                    "PASS"
                } else {
                    "FAIL"
                };
                out.push_str(&format!("{tag} {} ({})\n", check.theorem, check.range));
                for witness in &check.witnesses {
                    out.push_str(&format!("     witness: {witness}\n"));
                }
            }
            let failed = report
                .checks
                .iter()
                .filter(|c| c.status == CheckStatus::Fail)
                .count();
            if failed == 0 {
                out.push_str(&format!("all {} checks passed\n", report.checks.len()));
            } else {
                out.push_str(&format!("{failed} check(s) failed\n"));
            }
            out
        }
    })
}

fn cmd_verify(format: Format, g_max: u64) -> Result<(String, u8)> {
    if g_max < 2 {
        bail!("--g-max must be at least 2");
    }
    let report = verify_theorems(g_max);
    let code = if report.all_pass() { 0 } else { 1 };
    Ok((render_verify(format, &report)?, code))
}

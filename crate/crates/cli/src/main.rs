use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use nilspan::nilorbits::OrbitDiagram;
use nilspan::pairs::{lookup_pair, proper_sl2_pairs, rows_for, to_csv, SymmetricPairEntry};
use nilspan::satake::{satake_catalog, RealFormLabel};
use nilspan::sl2oracle::{build_chevalley, is_characteristic, DEFAULT_RANK_BOUND};
use nilspan::spanverify::{h_n_a_plus, verify_theorem, VerificationReport};

const LABEL_HELP: &str = "Labels are a family token with integer parameters: sl(4,R), su*(8), \
su(4,2), so(5,3), sp(3,R), sp(2,1), so*(12), e7(-5), g2(2). Complex algebras viewed as real \
forms use sl(4,C) or slC(4), so(9,C), sp(3,C), e6C.";

#[derive(Parser)]
#[command(name = "nilspan", version, about = "Weighted Dynkin diagrams, Satake diagrams and hyperbolic spans", after_help = LABEL_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// List the supported real form patterns.
    Forms {
        /// Only patterns containing this text.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check that the matching characteristics span the expected subspace.
    Verify {
        labels: Vec<String>,
        /// Verify every catalog label up to --bound.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(2..))]
        bound: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also confirm each matching characteristic with this many random
        /// sl2-triple trials (ranks up to 6 only).
        #[arg(long, default_value_t = 0)]
        trials: usize,
        /// Number of worker threads (0 picks a default).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, short)]
        verbose: bool,
    },
    /// Print the characteristics matching the Satake diagram of a label.
    Orbits {
        label: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render the Satake diagram of a label.
    Render {
        label: String,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Query the table of symmetric pairs with proper SL(2,R)-actions.
    Pairs {
        #[arg(long)]
        g: Option<String>,
        #[arg(long)]
        h: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct UsageError(String);

enum Outcome {
    Verified,
    Failed,
}

fn parse_label(s: &str) -> std::result::Result<RealFormLabel, UsageError> {
    s.parse()
        .map_err(|e| UsageError(format!("invalid label `{s}`: {e}")))
}

fn require_format(
    format: Format,
    allowed: &[Format],
    command: &str,
) -> std::result::Result<(), UsageError> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(UsageError(format!(
            "format `{}` is not available for `{command}`",
            format
                .to_possible_value()
                .map(|v| v.get_name().to_owned())
                .unwrap_or_default()
        )))
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn weights_text(o: &OrbitDiagram) -> String {
    let w: Vec<String> = o.weights().iter().map(|x| x.to_string()).collect();
    format!("({})", w.join(","))
}

fn oracle_check(label: &RealFormLabel, matching: &[OrbitDiagram], trials: usize) -> Option<bool> {
    if trials == 0 || label.rank() > DEFAULT_RANK_BOUND {
        return None;
    }
    let model = build_chevalley(label.simple_type()).ok()?;
    Some(
        matching
            .iter()
            .all(|o| matches!(is_characteristic(&model, &o.diagram, trials), Ok(Some(_)))),
    )
}

fn report_text(r: &VerificationReport, oracle: Option<bool>, verbose: bool) -> String {
    let ok = |b: bool| if b { "ok" } else { "FAILED" };
    let basis: Vec<String> = r.greedy_basis.iter().map(|l| l.to_string()).collect();
    let mut line = format!(
        "{:<12} {:<5} dim b = {}, dim span = {}, theorem {}, easy inclusion {}",
        r.label.to_string(),
        r.simple_type.to_string(),
        r.dim_b,
        r.dim_span,
        ok(r.theorem_holds),
        ok(r.easy_inclusion_holds)
    );
    if let Some(p) = r.paper_basis_verified {
        line.push_str(&format!(", listed basis {}", ok(p)));
    }
    if let Some(o) = oracle {
        line.push_str(&format!(", oracle {}", ok(o)));
    }
    line.push_str(&format!(", basis {{{}}}\n", basis.join(", ")));
    if verbose {
        for o in &r.matching_orbits {
            line.push_str(&format!(
                "    {:<20} {}\n",
                o.label.to_string(),
                weights_text(o)
            ));
        }
    }
    line
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    labels: &[String],
    all: bool,
    bound: u32,
    format: Format,
    out: &Option<PathBuf>,
    trials: usize,
    jobs: usize,
    verbose: bool,
) -> Result<std::result::Result<Outcome, UsageError>> {
    if let Err(e) = require_format(format, &[Format::Text, Format::Json], "verify") {
        return Ok(Err(e));
    }
    let mut targets = Vec::new();
    if all {
        targets.extend(RealFormLabel::catalog(bound as usize));
    }
    for s in labels {
        match parse_label(s) {
            Ok(l) => targets.push(l),
            Err(e) => return Ok(Err(e)),
        }
    }
    if targets.is_empty() {
        return Ok(Err(UsageError(
            "no labels given (use --all or list labels)".into(),
        )));
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    let results: Vec<(VerificationReport, Option<bool>)> = pool.install(|| {
        targets
            .par_iter()
            .map(|l| {
                let r = verify_theorem(l);
                let oracle = oracle_check(l, &r.matching_orbits, trials);
                (r, oracle)
            })
            .collect()
    });
    let mut text = String::new();
    let mut failed = 0usize;
    for (r, oracle) in &results {
        if !r.all_ok() || *oracle == Some(false) {
            failed += 1;
        }
        match format {
            Format::Json => {
                let mut v = r.to_json(verbose);
                if let Some(o) = oracle {
                    v["oracle_confirmed"] = json!(o);
                }
                text.push_str(&serde_json::to_string(&v)?);
                text.push('\n');
            }
            _ => text.push_str(&report_text(r, *oracle, verbose)),
        }
    }
    if format == Format::Text {
        let ok = results.len() - failed;
        let noun = if ok == 1 { "label" } else { "labels" };
        text.push_str(&format!("{ok} {noun} verified, {failed} failed\n"));
    }
    emit(out, &text)?;
    Ok(Ok(if failed == 0 {
        Outcome::Verified
    } else {
        Outcome::Failed
    }))
}

fn cmd_forms(filter: &Option<String>, format: Format) -> std::result::Result<String, UsageError> {
    require_format(format, &[Format::Text, Format::Json], "forms")?;
    let rows: Vec<(&str, &str)> = RealFormLabel::patterns()
        .into_iter()
        .filter(|(p, _)| filter.as_ref().is_none_or(|f| p.contains(f.as_str())))
        .collect();
    Ok(match format {
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|(p, c)| json!({ "pattern": p, "constraint": c }))
                .collect();
            serde_json::to_string_pretty(&v).expect("plain json") + "\n"
        }
        _ => rows
            .iter()
            .map(|(p, c)| {
                if c.is_empty() {
                    format!("{p}\n")
                } else {
                    format!("{p:<26} {c}\n")
                }
            })
            .collect(),
    })
}

fn cmd_orbits(label: &str, format: Format) -> std::result::Result<String, UsageError> {
    require_format(format, &[Format::Text, Format::Json], "orbits")?;
    let label = parse_label(label)?;
    let rows = h_n_a_plus(&label);
    Ok(match format {
        Format::Json => {
            serde_json::to_string_pretty(&json!({
                "label": label,
                "type": label.simple_type(),
                "orbits": rows,
            }))
            .expect("plain json")
                + "\n"
        }
        _ => {
            let mut s = format!("{label} ({})\n", label.simple_type());
            for o in &rows {
                s.push_str(&format!(
                    "{:<20} {}\n",
                    o.label.to_string(),
                    weights_text(o)
                ));
            }
            s
        }
    })
}

fn cmd_render(label: &str, format: Format) -> std::result::Result<String, UsageError> {
    require_format(format, &[Format::Dot, Format::Json], "render")?;
    let label = parse_label(label)?;
    let diagram = satake_catalog(&label);
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&diagram).expect("plain json") + "\n",
        _ => diagram.to_dot(&label.to_string()),
    })
}

fn cmd_pairs(
    g: &Option<String>,
    h: &Option<String>,
    format: Format,
) -> std::result::Result<String, UsageError> {
    require_format(format, &[Format::Text, Format::Json, Format::Csv], "pairs")?;
    let usage = |e: nilspan::Error| UsageError(format!("invalid query: {e}"));
    let mut parameters = Vec::new();
    let rows: Vec<&SymmetricPairEntry> = match (g, h) {
        (None, None) => proper_sl2_pairs().iter().collect(),
        (Some(g), None) => rows_for(g).map_err(usage)?,
        (Some(g), Some(h)) => match lookup_pair(g, h).map_err(usage)? {
            Some(m) => {
                parameters = m.parameters.clone();
                vec![m.entry]
            }
            None => vec![],
        },
        (None, Some(_)) => return Err(UsageError("--h needs --g".into())),
    };
    Ok(match format {
        Format::Csv => to_csv(&rows),
        Format::Json => {
            let mut v = json!({ "rows": rows });
            if !parameters.is_empty() {
                v["parameters"] = parameters
                    .iter()
                    .map(|(n, x)| (n.to_string(), json!(x)))
                    .collect::<serde_json::Map<_, _>>()
                    .into();
            }
            serde_json::to_string_pretty(&v).expect("plain json") + "\n"
        }
        _ => {
            let mut s = String::new();
            for e in &rows {
                let c = if e.constraint.is_empty() {
                    String::new()
                } else {
                    format!("  [{}]", e.constraint)
                };
                s.push_str(&format!("{:>2}  {:<12} {}{c}\n", e.row, e.g, e.h));
            }
            if !parameters.is_empty() {
                let p: Vec<String> = parameters.iter().map(|(n, x)| format!("{n}={x}")).collect();
                s.push_str(&format!("    at {}\n", p.join(", ")));
            }
            s
        }
    })
}

fn run(cli: Cli) -> Result<std::result::Result<Outcome, UsageError>> {
    let single = |out: &Option<PathBuf>, r: std::result::Result<String, UsageError>| -> Result<_> {
        match r {
            Ok(text) => {
                emit(out, &text)?;
                Ok(Ok(Outcome::Verified))
            }
            Err(e) => Ok(Err(e)),
        }
    };
    match cli.command {
        Command::Forms { filter, format } => single(&None, cmd_forms(&filter, format)),
        Command::Verify {
            labels,
            all,
            bound,
            format,
            out,
            trials,
            jobs,
            verbose,
        } => cmd_verify(&labels, all, bound, format, &out, trials, jobs, verbose),
        Command::Orbits { label, format, out } => single(&out, cmd_orbits(&label, format)),
        Command::Render { label, format, out } => single(&out, cmd_render(&label, format)),
        Command::Pairs { g, h, format, out } => single(&out, cmd_pairs(&g, &h, format)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Ok(Outcome::Verified)) => ExitCode::SUCCESS,
        Ok(Ok(Outcome::Failed)) => ExitCode::from(1),
        Ok(Err(UsageError(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn bound_must_be_at_least_two() {
        assert!(Cli::try_parse_from(["nilspan", "verify", "--all", "--bound", "1"]).is_err());
        assert!(Cli::try_parse_from(["nilspan", "verify", "--all", "--bound", "2"]).is_ok());
    }

    #[test]
    fn formats_are_checked_per_command() {
        assert!(cmd_render("g2(2)", Format::Text).is_err());
        assert!(cmd_orbits("g2(2)", Format::Dot).is_err());
        assert!(cmd_forms(&None, Format::Json).is_ok());
    }
}

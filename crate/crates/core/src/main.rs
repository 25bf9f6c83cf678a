use clap::{Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use positroid::text::{self, TermStyle};
use positroid::{
    enumerate_le_with_limit, enumerate_necklaces_with_limit, enumerate_shapes, json,
    le_from_necklace, necklace_from_le, positroid_dimension, roundtrip_report_with_limit,
    EnumerationReport, Error, GrassmannNecklace, LeDiagram, Strictness, DEFAULT_ENUMERATION_LIMIT,
};
use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

/// Convert, validate, render, and enumerate Le diagrams and Grassmann
/// necklaces.
///
/// Object inputs and outputs use one wire format per invocation, chosen
/// with --format: the plain-text grammars (diagram: `k n rows=...` header
/// plus one +/0 line per nonempty row; necklace: comma-separated terms) or
/// the canonical JSON encodings. Payload goes to standard output,
/// diagnostics to standard error; outputs are byte-deterministic. Exit
/// codes: 0 success, 1 validation failure, 2 parse or usage error.
#[derive(Parser)]
#[command(name = "positroid", version, about, verbatim_doc_comment)]
struct Cli {
    /// Wire format for object inputs and outputs
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    /// Le diagrams (every Le-valid filling of every shape)
    Le,
    /// Grassmann necklaces
    Gn,
    /// Shapes only (row-label sets)
    Shapes,
}

#[derive(Subcommand)]
enum Cmd {
    /// Convert a Le diagram to its Grassmann necklace
    Le2gn {
        /// Input file, or `-` for standard input
        #[arg(default_value = "-")]
        input: String,
    },
    /// Convert a Grassmann necklace to its Le diagram
    Gn2le {
        /// Input file, or `-` for standard input
        #[arg(default_value = "-")]
        input: String,
    },
    /// Check the Le condition and report every violation
    ValidateLe {
        /// Input file, or `-` for standard input
        #[arg(default_value = "-")]
        input: String,
    },
    /// Check the necklace exchange axioms and report every failure
    ValidateGn {
        /// Require a genuine exchange at every index present in its term
        #[arg(long)]
        strict: bool,
        /// Input file, or `-` for standard input
        #[arg(default_value = "-")]
        input: String,
    },
    /// Print the cell dimension (the number of plus squares)
    Dim {
        /// Input file, or `-` for standard input
        #[arg(default_value = "-")]
        input: String,
    },
    /// Re-render a diagram canonically, or draw it with border labels
    Render {
        /// Draw the bordered picture with the boundary walk labels
        #[arg(long)]
        ascii_art: bool,
        /// Input file, or `-` for standard input
        #[arg(default_value = "-")]
        input: String,
    },
    /// Stream every object of one type (k, n)
    Enumerate {
        /// Rank (number of rows)
        #[arg(long)]
        k: u32,
        /// Ground-set size
        #[arg(long)]
        n: u32,
        /// Which objects to list
        #[arg(long, value_enum, default_value_t = What::Le)]
        what: What,
        /// Print only how many objects there are
        #[arg(long)]
        count_only: bool,
    },
    /// Exhaustively certify the bijection on one type (k, n)
    Roundtrip {
        /// Rank (number of rows)
        #[arg(long)]
        k: u32,
        /// Ground-set size
        #[arg(long)]
        n: u32,
        /// Emit the report as JSON (same as --format json)
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> io::Result<ExitCode> {
    let format = cli.format;
    match cli.cmd {
        Cmd::Le2gn { input } => cmd_le2gn(&input, format),
        Cmd::Gn2le { input } => cmd_gn2le(&input, format),
        Cmd::ValidateLe { input } => cmd_validate_le(&input, format),
        Cmd::ValidateGn { strict, input } => cmd_validate_gn(&input, strict, format),
        Cmd::Dim { input } => cmd_dim(&input, format),
        Cmd::Render { ascii_art, input } => cmd_render(&input, ascii_art, format),
        Cmd::Enumerate {
            k,
            n,
            what,
            count_only,
        } => cmd_enumerate(k, n, what, count_only, format),
        Cmd::Roundtrip { k, n, json } => cmd_roundtrip(k, n, json, format),
    }
}

fn read_input(path: &str) -> io::Result<String> {
    if path == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| io::Error::new(e.kind(), format!("{path}: {e}")))
    }
}

/// Report a parse or usage problem on standard error and exit with 2.
fn usage(msg: &str) -> io::Result<ExitCode> {
    eprintln!("error: {msg}");
    Ok(ExitCode::from(2))
}

fn parse_diagram_input(src: &str, format: Format) -> Result<LeDiagram, String> {
    match format {
        Format::Text => text::parse_diagram(src).map_err(|e| e.to_string()),
        Format::Json => json::diagram_from_json(src).map_err(|e| e.to_string()),
    }
}

fn parse_necklace_input(src: &str, format: Format) -> Result<GrassmannNecklace, String> {
    match format {
        Format::Text => text::parse_necklace(src).map_err(|e| e.to_string()),
        Format::Json => json::necklace_from_json(src).map_err(|e| e.to_string()),
    }
}

/// The enumeration guard: the library default, or the value of
/// POSITROID_ENUM_MAX_N when set.
fn guard_limit() -> Result<u32, String> {
    match std::env::var("POSITROID_ENUM_MAX_N") {
        Ok(v) => v
            .trim()
            .parse::<u32>()
            .map_err(|_| format!("POSITROID_ENUM_MAX_N must be a nonnegative integer, got `{v}`")),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_ENUMERATION_LIMIT),
        Err(e) => Err(format!("POSITROID_ENUM_MAX_N: {e}")),
    }
}

fn guard_refusal(n: u32, limit: u32) -> String {
    format!(
        "{} (set the POSITROID_ENUM_MAX_N environment variable to raise the guard)",
        Error::EnumerationLimit { n, limit }
    )
}

fn cmd_le2gn(input: &str, format: Format) -> io::Result<ExitCode> {
    let src = read_input(input)?;
    let d = match parse_diagram_input(&src, format) {
        Ok(d) => d,
        Err(msg) => return usage(&msg),
    };
    let report = d.validate();
    if !report.is_valid() {
        eprintln!("error: the input is not a valid Le diagram");
        eprintln!("{}", text::render_le_report(&report));
        return Ok(ExitCode::from(1));
    }
    let nk = match necklace_from_le(&d) {
        Ok(nk) => nk,
        // unreachable on a validated diagram; surface it honestly anyway
        Err(e) => return usage(&format!("conversion failed: {e}")),
    };
    let out = match format {
        Format::Text => text::render_necklace(&nk, TermStyle::Compact),
        Format::Json => json::necklace_to_json(&nk),
    };
    writeln!(io::stdout().lock(), "{out}")?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_gn2le(input: &str, format: Format) -> io::Result<ExitCode> {
    let src = read_input(input)?;
    let nk = match parse_necklace_input(&src, format) {
        Ok(nk) => nk,
        Err(msg) => return usage(&msg),
    };
    match le_from_necklace(&nk) {
        Ok(d) => {
            let out = match format {
                Format::Text => text::render_diagram(&d),
                Format::Json => json::diagram_to_json(&d),
            };
            writeln!(io::stdout().lock(), "{out}")?;
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => {
            eprintln!("error: {e}");
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_validate_le(input: &str, format: Format) -> io::Result<ExitCode> {
    let src = read_input(input)?;
    let d = match parse_diagram_input(&src, format) {
        Ok(d) => d,
        Err(msg) => return usage(&msg),
    };
    let report = d.validate();
    let out = match format {
        Format::Text => text::render_le_report(&report),
        Format::Json => json::le_report_to_json(&report),
    };
    writeln!(io::stdout().lock(), "{out}")?;
    Ok(if report.is_valid() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_validate_gn(input: &str, strict: bool, format: Format) -> io::Result<ExitCode> {
    let src = read_input(input)?;
    let nk = match parse_necklace_input(&src, format) {
        Ok(nk) => nk,
        Err(msg) => return usage(&msg),
    };
    let strictness = if strict {
        Strictness::Strict
    } else {
        Strictness::Lenient
    };
    let report = nk.validate(strictness);
    let out = match format {
        Format::Text => text::render_necklace_report(&report),
        Format::Json => json::necklace_report_to_json(&report),
    };
    writeln!(io::stdout().lock(), "{out}")?;
    Ok(if report.is_valid() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_dim(input: &str, format: Format) -> io::Result<ExitCode> {
    let src = read_input(input)?;
    let d = match parse_diagram_input(&src, format) {
        Ok(d) => d,
        Err(msg) => return usage(&msg),
    };
    let report = d.validate();
    if !report.is_valid() {
        eprintln!("error: the input is not a valid Le diagram");
        eprintln!("{}", text::render_le_report(&report));
        return Ok(ExitCode::from(1));
    }
    let dim = positroid_dimension(&d);
    let out = match format {
        Format::Text => dim.to_string(),
        Format::Json => format!("{{\"dimension\":{dim}}}"),
    };
    writeln!(io::stdout().lock(), "{out}")?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_render(input: &str, ascii_art: bool, format: Format) -> io::Result<ExitCode> {
    let src = read_input(input)?;
    let d = match parse_diagram_input(&src, format) {
        Ok(d) => d,
        Err(msg) => return usage(&msg),
    };
    let out = if ascii_art {
        text::render_diagram_ascii(&d)
    } else {
        match format {
            Format::Text => text::render_diagram(&d),
            Format::Json => json::diagram_to_json(&d),
        }
    };
    writeln!(io::stdout().lock(), "{out}")?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(
    k: u32,
    n: u32,
    what: What,
    count_only: bool,
    format: Format,
) -> io::Result<ExitCode> {
    let limit = match guard_limit() {
        Ok(l) => l,
        Err(msg) => return usage(&msg),
    };
    if n > limit {
        return usage(&guard_refusal(n, limit));
    }
    let mut stdout = io::stdout().lock();
    let count = |stdout: &mut dyn Write, total: usize| -> io::Result<ExitCode> {
        match format {
            Format::Text => writeln!(stdout, "{total}")?,
            Format::Json => writeln!(stdout, "{{\"count\":{total}}}")?,
        }
        Ok(ExitCode::SUCCESS)
    };
    match what {
        What::Shapes => {
            let shapes = match enumerate_shapes(k, n) {
                Ok(it) => it,
                Err(e) => return usage(&e.to_string()),
            };
            if count_only {
                return count(&mut stdout, shapes.count());
            }
            match format {
                Format::Text => {
                    for s in shapes {
                        writeln!(
                            stdout,
                            "{} {} rows={}",
                            s.k(),
                            s.n(),
                            s.row_labels().iter().join(",")
                        )?;
                    }
                }
                Format::Json => {
                    write_json_array(&mut stdout, shapes.map(|s| json::shape_to_json(&s)))?;
                }
            }
        }
        What::Le => {
            let diagrams = match enumerate_le_with_limit(k, n, limit) {
                Ok(it) => it,
                Err(e) => return usage(&e.to_string()),
            };
            if count_only {
                return count(&mut stdout, diagrams.count());
            }
            match format {
                Format::Text => {
                    // multi-line records, separated by one blank line
                    for d in diagrams {
                        writeln!(stdout, "{}\n", text::render_diagram(&d))?;
                    }
                }
                Format::Json => {
                    write_json_array(&mut stdout, diagrams.map(|d| json::diagram_to_json(&d)))?;
                }
            }
        }
        What::Gn => {
            let necklaces = match enumerate_necklaces_with_limit(k, n, limit) {
                Ok(it) => it,
                Err(e) => return usage(&e.to_string()),
            };
            if count_only {
                return count(&mut stdout, necklaces.count());
            }
            match format {
                Format::Text => {
                    for nk in necklaces {
                        writeln!(stdout, "{}", text::render_necklace(&nk, TermStyle::Compact))?;
                    }
                }
                Format::Json => {
                    write_json_array(&mut stdout, necklaces.map(|nk| json::necklace_to_json(&nk)))?;
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn write_json_array(out: &mut dyn Write, items: impl Iterator<Item = String>) -> io::Result<()> {
    write!(out, "[")?;
    for (i, item) in items.enumerate() {
        if i > 0 {
            write!(out, ",")?;
        }
        write!(out, "{item}")?;
    }
    writeln!(out, "]")
}

fn cmd_roundtrip(k: u32, n: u32, as_json: bool, format: Format) -> io::Result<ExitCode> {
    let limit = match guard_limit() {
        Ok(l) => l,
        Err(msg) => return usage(&msg),
    };
    let report = match roundtrip_report_with_limit(k, n, limit) {
        Ok(r) => r,
        Err(Error::EnumerationLimit { n, limit }) => return usage(&guard_refusal(n, limit)),
        Err(e) => return usage(&e.to_string()),
    };
    let out = if as_json || format == Format::Json {
        json::enumeration_report_to_json(&report)
    } else {
        roundtrip_text(&report)
    };
    writeln!(io::stdout().lock(), "{out}")?;
    Ok(if report.is_passing() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn roundtrip_text(report: &EnumerationReport) -> String {
    format!(
        "type: ({}, {})\n\
         shapes: {}\n\
         le diagrams: {}\n\
         necklaces: {}\n\
         le roundtrip failures: {}\n\
         necklace roundtrip failures: {}\n\
         invariant failures: {}\n\
         result: {}",
        report.k,
        report.n,
        report.shape_count,
        report.le_count,
        report.necklace_count,
        report.le_roundtrip_failures.len(),
        report.necklace_roundtrip_failures.len(),
        report.invariant_failures.len(),
        if report.is_passing() { "PASS" } else { "FAIL" }
    )
}

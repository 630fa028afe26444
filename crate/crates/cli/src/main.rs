//! `bruhat-flip` — flipclasses, R-tilde polynomials and valence-polynomial
//! verification in Bruhat graphs of finite Coxeter groups.
//!
//! Exit codes: 0 success; 1 violations or reference mismatches found;
//! 2 usage error (bad flags, diagrams, elements or orderings); 3 a
//! resource cap was exceeded. All output is exact — integers, rationals
//! and polynomials, never floats.

mod commands;
mod input;

use clap::{Parser, Subcommand};
use commands::{Ctx, Format, Method};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "bruhat-flip",
    version,
    about = "Flipclasses and valence polynomials in Bruhat graphs of finite Coxeter groups",
    after_help = "Elements are written in one-line permutation notation for a single type A \
                  factor (e.g. 4231) and as generator words otherwise (e.g. \"s1 s2 s1\"); \
                  `e` is the identity and `w0` the longest element."
)]
struct Cli {
    /// Worker threads for parallel sweeps (default: one per CPU).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    /// Cache directory for sweep results and resumable verification state.
    #[arg(long, global = true, value_name = "DIR")]
    cache: Option<PathBuf>,

    /// Cap on the number of paths visited by a single enumeration.
    #[arg(long, global = true, value_name = "N")]
    cap_paths: Option<u64>,

    /// Cap on the number of group elements constructed.
    #[arg(long, global = true, value_name = "N")]
    cap_group: Option<u64>,

    /// Stdout format. csv applies to flipclasses and sweep only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Reflection ordering for single-group commands: "default" (from the
    /// ShortLex-least reduced word of w0) or an explicit reduced word of w0.
    #[arg(long, global = true, value_name = "WORD", default_value = "default")]
    ordering: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print basic facts about a group.
    GroupInfo {
        /// Diagram, e.g. A3, B4, I2(7), H3, A2xA1.
        #[arg(long, value_name = "DIAGRAM")]
        group: String,
    },
    /// R-tilde polynomial of a Bruhat pair (0 when u is not below v).
    Rtilde {
        #[arg(long, value_name = "DIAGRAM")]
        group: String,
        #[arg(long, value_name = "ELEMENT")]
        u: String,
        #[arg(long, value_name = "ELEMENT")]
        v: String,
        /// Evaluation strategy; both agree on every pair.
        #[arg(long, value_enum, default_value_t = Method::Recurrence)]
        method: Method,
    },
    /// Enumerate the h-step flipclasses starting at an element.
    Flipclasses {
        #[arg(long, value_name = "DIAGRAM")]
        group: String,
        /// Start element.
        #[arg(long, value_name = "ELEMENT")]
        u: String,
        /// Number of steps.
        #[arg(long, value_name = "H")]
        h: usize,
        /// Keep only flipclasses ending at this element.
        #[arg(long, value_name = "ELEMENT")]
        end: Option<String>,
    },
    /// Valence polynomials (factored) of the flipclasses from u to v.
    Valence {
        #[arg(long, value_name = "DIAGRAM")]
        group: String,
        #[arg(long, value_name = "ELEMENT")]
        u: String,
        #[arg(long, value_name = "ELEMENT")]
        v: String,
        #[arg(long, value_name = "H")]
        h: usize,
    },
    /// Sweep all h-step flipclasses of a group.
    Sweep {
        #[arg(long, value_name = "DIAGRAM")]
        group: String,
        #[arg(long, value_name = "H")]
        h: usize,
        /// Sweep every start and endpoint instead of applying the
        /// longest-element reductions.
        #[arg(long)]
        no_reductions: bool,
    },
    /// Run the verification pipeline over a roster of groups and write
    /// table1.csv, gamma.json and violations.json.
    Verify {
        /// Roster rows, e.g. "A1,A2,B2,G2,A3,B3:3,F4:4"; each entry is a
        /// diagram with an optional :h suffix (default: the diagram rank).
        #[arg(long, value_name = "ROWS", conflicts_with = "extended")]
        rows: Option<String>,
        /// Append the F4 row to the default roster (slow).
        #[arg(long)]
        extended: bool,
        /// Directory receiving the report files.
        #[arg(long, value_name = "DIR", default_value = ".")]
        out_dir: PathBuf,
    },
    /// Compute the summary-statistics table and compare it against the
    /// published reference values.
    Table1 {
        /// Roster rows (see verify); default covers every reference row
        /// with h <= 4.
        #[arg(long, value_name = "ROWS", conflicts_with = "extended")]
        rows: Option<String>,
        /// Append the F4 row to the default roster (slow).
        #[arg(long)]
        extended: bool,
        /// Output CSV path.
        #[arg(long, value_name = "FILE", default_value = "table1.csv")]
        out: PathBuf,
    },
    /// Bucket isomorphic Bruhat intervals across crystallographic groups
    /// and check that their R-tilde polynomials agree.
    Congruence {
        /// Comma-separated groups, e.g. "A4,B3".
        #[arg(long, value_name = "GROUPS")]
        groups: String,
        /// Largest interval length to bucket.
        #[arg(long, value_name = "N", default_value_t = 6)]
        max_length: u32,
        /// Output JSON path.
        #[arg(long, value_name = "FILE", default_value = "congruence_report.json")]
        out: PathBuf,
    },
    /// List the length-3 intervals of a group that form 5-crowns.
    Crowns {
        #[arg(long, value_name = "DIAGRAM")]
        group: String,
    },
}

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // Prints help/version at exit 0, usage errors at exit 2.
        Err(e) => e.exit(),
    };
    std::process::exit(run(cli, &argv));
}

fn run(cli: Cli, argv: &[String]) -> i32 {
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: cannot size the worker pool: {e}");
            return 2;
        }
    }
    if cli.format == Format::Csv
        && !matches!(cli.command, Command::Flipclasses { .. } | Command::Sweep { .. })
    {
        eprintln!("error: --format csv applies to flipclasses and sweep only");
        return 2;
    }
    let ctx = Ctx {
        caps: input::caps(cli.cap_group, cli.cap_paths),
        format: cli.format,
        ordering_spec: cli.ordering,
        cache: cli.cache,
        meta: input::report_meta(argv),
    };
    let result = match &cli.command {
        Command::GroupInfo { group } => commands::group_info(&ctx, group),
        Command::Rtilde { group, u, v, method } => commands::rtilde(&ctx, group, u, v, *method),
        Command::Flipclasses { group, u, h, end } => {
            commands::flipclasses(&ctx, group, u, *h, end.as_deref())
        }
        Command::Valence { group, u, v, h } => commands::valence(&ctx, group, u, v, *h),
        Command::Sweep {
            group,
            h,
            no_reductions,
        } => commands::sweep(&ctx, group, *h, *no_reductions),
        Command::Verify {
            rows,
            extended,
            out_dir,
        } => commands::verify(&ctx, rows.as_deref(), *extended, out_dir),
        Command::Table1 {
            rows,
            extended,
            out,
        } => commands::table1(&ctx, rows.as_deref(), *extended, out),
        Command::Congruence {
            groups,
            max_length,
            out,
        } => commands::congruence(&ctx, groups, *max_length, out),
        Command::Crowns { group } => commands::crowns(&ctx, group),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            error_exit_code(&err)
        }
    }
}

fn error_exit_code(err: &bruhat_core::Error) -> i32 {
    use bruhat_core::Error;
    if err.is_cap_exceeded() {
        return 3;
    }
    match err {
        Error::Diagram(_) | Error::Element(_) | Error::Ordering(_) => 2,
        _ => 1,
    }
}

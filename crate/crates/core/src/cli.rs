//! Command-line front end. [`run`] takes the arguments and output streams so it
//! can be driven from tests; the binary is a thin wrapper.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bracket::{jones_reduced, kauffman_bracket, unnormalized_jones};
use crate::khovanov::{compare_tables, khovanov, CoefficientRing, Engine, GradedTable, TableDiff};
use crate::linkdiag::{parse_pd, Diagram};
use crate::rotant::{
    gen::sample_fixture, les_check, proposition_chain_check, ChainOptions, ChainReport, Fixture, LesReport,
};

/// Exit status for a check that ran and failed.
pub const EXIT_CHECK_FAILED: i32 = 1;
/// Exit status for bad arguments or unreadable input.
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "khrot", version, about = "Jones polynomials, Khovanov homology and rotants of PD link diagrams")]
struct Cli {
    /// Worker threads for homology (default: all cores).
    #[arg(long, global = true, env = "KHROT_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Kauffman bracket and Jones polynomial (unnormalized and reduced).
    Jones {
        /// PD text (`PD[X[..],..]`) or diagram JSON; `-` reads stdin.
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
        format: PolyFormat,
    },
    /// Bigraded Khovanov homology.
    Kh {
        input: PathBuf,
        #[command(flatten)]
        homology: HomologyArgs,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Cell-by-cell comparison of two homology tables.
    Compare {
        first: PathBuf,
        second: PathBuf,
        #[command(flatten)]
        homology: HomologyArgs,
        /// Exit with status 1 if the tables differ.
        #[arg(long)]
        expect_equal: bool,
        #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
        format: PolyFormat,
    },
    /// Rotant families and their checks.
    Rotant {
        #[command(subcommand)]
        command: RotantCommand,
    },
}

#[derive(Subcommand, Debug)]
enum RotantCommand {
    /// Builds `L_n` (or `L^R_n` with `--flip`) from a fixture.
    Build {
        #[arg(long)]
        fixture: PathBuf,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        flip: bool,
        /// Build the limit link (1-smoothing of the lowest twist crossing).
        #[arg(long)]
        limit: bool,
        #[arg(long, value_enum, default_value_t = DiagramFormat::Pd)]
        format: DiagramFormat,
    },
    /// Exact-sequence checks at a negative crossing (0-based index).
    Les {
        input: PathBuf,
        #[arg(long)]
        crossing: usize,
        #[command(flatten)]
        homology: HomologyArgs,
    },
    /// Grading identities and support conditions along the family.
    Chain {
        #[arg(long)]
        fixture: Option<PathBuf>,
        #[arg(long)]
        nmax: u64,
        /// Compute homology of the fixture's links instead of using tabulated
        /// support minima.
        #[arg(long, requires = "fixture")]
        compute: bool,
        #[command(flatten)]
        homology: HomologyArgs,
    },
    /// Prints a small sample fixture.
    SampleFixture,
}

#[derive(Args, Debug, Clone)]
struct HomologyArgs {
    /// q, z, f2, f3, ... (fP for prime P)
    #[arg(long, default_value = "q")]
    ring: CoefficientRing,
    /// naive, scan or auto
    #[arg(long, default_value = "auto")]
    engine: Engine,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum PolyFormat {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum TableFormat {
    Text,
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum DiagramFormat {
    Pd,
    Json,
}

/// A failure with its exit status.
struct Failure(i32, String);

fn input_error(e: impl std::fmt::Display) -> Failure {
    Failure(EXIT_INPUT_ERROR, e.to_string())
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(input_error)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

/// Reads a diagram as JSON (if the text starts with `{`) or PD text.
pub fn load_diagram(text: &str) -> Result<Diagram, crate::linkdiag::DiagramError> {
    if text.trim_start().starts_with('{') {
        Diagram::from_json(text)
    } else {
        parse_pd(text)
    }
}

fn diagram_from(path: &Path) -> Result<Diagram, Failure> {
    load_diagram(&read_input(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn homology(d: &Diagram, h: &HomologyArgs) -> Result<GradedTable, Failure> {
    khovanov(d, h.ring, h.engine).map_err(input_error)
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 { write!(out, "{}", e.render()) } else { write!(err, "{}", e.render().ansi()) };
            return if code == 0 { 0 } else { EXIT_INPUT_ERROR };
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        pool = pool.num_threads(n);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT_ERROR;
        }
    };
    let mut buf = Vec::new();
    let result = pool.install(|| dispatch(cli.command, &mut buf));
    if let Err(e) = out.write_all(&buf) {
        let _ = writeln!(err, "error: {e}");
        return EXIT_INPUT_ERROR;
    }
    match result {
        Ok(()) => 0,
        Err(Failure(code, msg)) => {
            if !msg.is_empty() {
                let _ = writeln!(err, "error: {msg}");
            }
            code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    let text = match command {
        Command::Jones { input, format } => jones(&diagram_from(&input)?, format),
        Command::Kh { input, homology: h, format } => {
            let tbl = homology(&diagram_from(&input)?, &h)?;
            match format {
                TableFormat::Text => tbl.to_text_grid(),
                TableFormat::Json => tbl.to_json() + "\n",
                TableFormat::Csv => tbl.to_csv(),
            }
        }
        Command::Compare { first, second, homology: h, expect_equal, format } => {
            let a = homology(&diagram_from(&first)?, &h)?;
            let b = homology(&diagram_from(&second)?, &h)?;
            let diff = compare_tables(&a, &b).map_err(input_error)?;
            let text = render_diff(&diff, format);
            if expect_equal && !diff.is_empty() {
                write_out(out, &text)?;
                return Err(Failure(EXIT_CHECK_FAILED, "tables differ".into()));
            }
            text
        }
        Command::Rotant { command } => return rotant(command, out),
    };
    write_out(out, &text)
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(input_error)
}

fn jones(d: &Diagram, format: PolyFormat) -> String {
    let bracket = kauffman_bracket(d);
    let unnormalized = unnormalized_jones(d);
    let reduced = jones_reduced(d);
    match format {
        PolyFormat::Text => {
            let mut s = format!("bracket: {}\n", bracket.to_text("A"));
            s += &format!("unnormalized: {}\n", unnormalized.to_text("q"));
            if reduced.divisible {
                s += &format!("reduced: {}\n", reduced.q_form.to_text("q"));
                s += &format!("reduced (t): {}\n", reduced.t_form.to_text("t"));
            } else {
                s += "reduced: not divisible by q + q^-1\n";
            }
            s
        }
        PolyFormat::Json => {
            let v = json!({
                "bracket": bracket.to_json_value("A"),
                "unnormalized": unnormalized.to_json_value("q"),
                "reduced": reduced.divisible.then(|| reduced.q_form.to_json_value("q")),
                "reduced_t": reduced.divisible.then(|| reduced.t_form.to_json_value("t")),
                "writhe": d.writhe(),
            });
            v.to_string() + "\n"
        }
    }
}

fn render_diff(diff: &TableDiff, format: PolyFormat) -> String {
    let cell_json = |(k, a, b): &((i64, i64), crate::khovanov::Cell, crate::khovanov::Cell)| {
        json!({"t": k.0, "q": k.1, "first": a.render(), "second": b.render()})
    };
    match format {
        PolyFormat::Json => {
            let v = json!({
                "differing": diff.cells.iter().map(cell_json).collect::<Vec<_>>(),
                "first_difference": diff.first.as_ref().map(cell_json),
                "total_rank": [diff.total_rank.0, diff.total_rank.1],
                "total_torsion": [diff.total_torsion.0, diff.total_torsion.1],
                "dominance": diff.dominance,
            });
            v.to_string() + "\n"
        }
        PolyFormat::Text => {
            let mut s = format!("differing cells: {}\n", diff.cells.len());
            if let Some(((t, q), a, b)) = &diff.first {
                s += &format!("first difference: t={t} q={q}: {} vs {}\n", a.render(), b.render());
            }
            s += &format!("total rank: {} vs {}\n", diff.total_rank.0, diff.total_rank.1);
            s += &format!("total torsion summands: {} vs {}\n", diff.total_torsion.0, diff.total_torsion.1);
            s += &format!("dominance: {:?}\n", diff.dominance);
            for ((t, q), a, b) in &diff.cells {
                s += &format!("  t={t} q={q}: {} vs {}\n", a.render(), b.render());
            }
            s
        }
    }
}

fn load_fixture(path: &Path) -> Result<Fixture, Failure> {
    Fixture::from_json(&read_input(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn rotant(command: RotantCommand, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        RotantCommand::Build { fixture, n, flip, limit, format } => {
            let f = load_fixture(&fixture)?;
            let d = if limit {
                f.limit(n, flip)
            } else {
                f.family(n).map(|(l, lr)| if flip { lr } else { l })
            }
            .map_err(input_error)?;
            let text = match format {
                DiagramFormat::Pd => format!(
                    "# crossings {} components {} writhe {} negative {}\n{}\n",
                    d.num_crossings(),
                    d.num_link_components(),
                    d.writhe(),
                    d.n_minus(),
                    d.to_pd()
                ),
                DiagramFormat::Json => d.to_json() + "\n",
            };
            write_out(out, &text)
        }
        RotantCommand::Les { input, crossing, homology: h } => {
            let d = diagram_from(&input)?;
            let r = les_check(&d, crossing, h.ring, h.engine).map_err(input_error)?;
            write_out(out, &render_les(&r))?;
            if r.ok() {
                Ok(())
            } else {
                Err(Failure(EXIT_CHECK_FAILED, "exact sequence checks failed".into()))
            }
        }
        RotantCommand::Chain { fixture, nmax, compute, homology: h } => {
            let f = fixture.as_deref().map(load_fixture).transpose()?;
            let opts = ChainOptions { ring: h.ring, engine: h.engine, compute };
            let r = proposition_chain_check(nmax, f.as_ref(), &opts).map_err(input_error)?;
            write_out(out, &render_chain(&r))?;
            if r.ok() {
                Ok(())
            } else {
                Err(Failure(EXIT_CHECK_FAILED, "chain checks failed".into()))
            }
        }
        RotantCommand::SampleFixture => {
            let text = serde_json::to_string_pretty(&sample_fixture()).map_err(input_error)?;
            write_out(out, &(text + "\n"))
        }
    }
}

fn render_les(r: &LesReport) -> String {
    let mut s = format!("c = {}\n", r.c);
    s += &format!("cells checked: {}\n", r.cells_checked);
    s += &format!("subadditivity failures: {:?}\n", r.subadditivity_failures);
    s += &format!("euler identity: {}\n", if r.euler_ok { "holds" } else { "FAILS" });
    s += &format!("forced isomorphisms: {} ({} failing: {:?})\n", r.forced, r.forced_failures.len(), r.forced_failures);
    s += &format!("result: {}\n", if r.ok() { "ok" } else { "FAIL" });
    s
}

fn render_chain(r: &ChainReport) -> String {
    let mut s = String::from("n\tQ(n)\tc\tQ(n+1)\tidentity\tQ(n+1)+1\tclosed form\n");
    for a in &r.arithmetic {
        let p = a.params;
        s += &format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            p.n, p.q, p.c, p.q_next, p.identity_holds, a.q_next_plus_one, a.closed_form
        );
    }
    s += "\nn\tq\tlimit\tsupport min\tsource\tvanishes\n";
    for x in &r.support {
        s += &format!("{}\t{}\t{}\t{}\t{:?}\t{}\n", x.n, x.q, x.limit_parity, x.support_min, x.source, x.ok);
    }
    if !r.les.is_empty() {
        s += "\nn\tcrossings\tc\texpected c\tsequence checks\n";
        for l in &r.les {
            s += &format!(
                "{}\t{}\t{}\t{}\t{}\n",
                l.n,
                l.crossings,
                l.report.c,
                l.c_expected,
                if l.report.ok() { "ok" } else { "FAIL" }
            );
        }
    }
    for k in &r.skipped {
        s += &format!("skipped: {k}\n");
    }
    s += &format!("result: {}\n", if r.ok() { "ok" } else { "FAIL" });
    s
}

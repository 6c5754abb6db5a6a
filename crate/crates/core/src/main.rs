//! Command-line front end: inspect one structure from a file, or run the
//! claim suite over a corpus.
//!
//! Exit codes: 0 success, 1 a must-hold claim failed, 2 input error,
//! 3 a resource cap was exceeded under `--strict`.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use subtractive::claims::{self, SuiteCaps, SuiteOptions};
use subtractive::format;
use subtractive::ideal::{EnumerationCaps, Ideal, enumerate_ideals_with};
use subtractive::nat::nat_ideal;
use subtractive::search::search_semirings;
use subtractive::semiring::{ElemSet, FiniteSemiring, MAX_ORDER};
use subtractive::topology::{Semantics, SubtractiveSpace, generic_points, reducible_split};

#[derive(Parser)]
#[command(
    name = "subtractive",
    version,
    about = "Ideal theory and point topologies of finite commutative semirings"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a structure file and check the axioms.
    Validate {
        file: PathBuf,
    },
    /// List every ideal with its subtractive closure.
    Ideals {
        file: PathBuf,
        /// Print only the subtractive ideals.
        #[arg(long)]
        subtractive_only: bool,
        /// Exit 3 when a resource cap is hit.
        #[arg(long)]
        strict: bool,
    },
    /// Close one ideal under subtraction.
    Closure {
        file: PathBuf,
        /// The ideal, as comma-separated element labels.
        #[arg(long)]
        ideal: String,
    },
    /// Describe the point space over the ideal set.
    Topology {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = SemanticsArg::Downset)]
        semantics: SemanticsArg,
        /// Closed-family size cap.
        #[arg(long, default_value_t = 100_000)]
        max_closed: usize,
        /// Exit 3 when a resource cap is hit.
        #[arg(long)]
        strict: bool,
    },
    /// Run the claim suite over a corpus.
    Check(CheckArgs),
    /// Enumerate every structure of one order, in the file format.
    Search {
        #[arg(long)]
        order: usize,
        /// Emit only one representative per relabeling orbit.
        #[arg(long)]
        canonical: bool,
        /// Stop after this many structures.
        #[arg(long)]
        limit: Option<usize>,
    },
}

#[derive(Args)]
struct CheckArgs {
    /// Structure files forming the corpus. Without files and without
    /// --search-order, the standard corpus is used: every canonical
    /// structure of order at most three, the built-in families, and the
    /// pinned ideals of the naturals.
    files: Vec<PathBuf>,
    /// Add every structure of this order to the corpus.
    #[arg(long)]
    search_order: Option<usize>,
    /// Keep only canonical representatives when searching.
    #[arg(long)]
    canonical: bool,
    /// Claim ids to run: `all`, or a comma-separated list like `C9,C12`.
    #[arg(long, default_value = "all")]
    claims: String,
    #[arg(long, value_enum, default_value_t = SemanticsChoice::Both)]
    semantics: SemanticsChoice,
    /// Exit 3 when any cell was capped.
    #[arg(long)]
    strict: bool,
    /// Extra ideal of the naturals, as comma-separated generators.
    /// Repeatable.
    #[arg(long = "nat-ideal")]
    nat_ideal: Vec<String>,
    /// Closed-family size cap per space.
    #[arg(long, default_value_t = 100_000)]
    max_closed: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum SemanticsArg {
    Downset,
    Fixedpoint,
}

impl From<SemanticsArg> for Semantics {
    fn from(a: SemanticsArg) -> Semantics {
        match a {
            SemanticsArg::Downset => Semantics::DownSet,
            SemanticsArg::Fixedpoint => Semantics::FixedPoint,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SemanticsChoice {
    Both,
    Downset,
    Fixedpoint,
}

impl SemanticsChoice {
    fn list(self) -> Vec<Semantics> {
        match self {
            SemanticsChoice::Both => Semantics::BOTH.to_vec(),
            SemanticsChoice::Downset => vec![Semantics::DownSet],
            SemanticsChoice::Fixedpoint => vec![Semantics::FixedPoint],
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Validate { file } => cmd_validate(&file),
        Cmd::Ideals { file, subtractive_only, strict } => {
            cmd_ideals(&file, subtractive_only, strict)
        }
        Cmd::Closure { file, ideal } => cmd_closure(&file, &ideal),
        Cmd::Topology { file, semantics, max_closed, strict } => {
            cmd_topology(&file, semantics.into(), max_closed, strict)
        }
        Cmd::Check(args) => cmd_check(&args),
        Cmd::Search { order, canonical, limit } => cmd_search(order, canonical, limit),
    };
    ExitCode::from(code)
}

fn input_error(msg: &str) -> u8 {
    eprintln!("error: {msg}");
    2
}

/// Caps are reported on stdout so the note is part of the deterministic
/// output; the exit code only escalates under --strict.
fn cap_exceeded(msg: &str, strict: bool) -> u8 {
    println!("CAP {msg}");
    if strict { 3 } else { 0 }
}

fn load_semiring(path: &Path) -> Result<FiniteSemiring, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    format::parse_semiring(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Single-structure inspection tolerates any parseable order; the ideal
/// count cap still bounds the work.
fn inspection_caps() -> EnumerationCaps {
    EnumerationCaps { max_order: MAX_ORDER, max_ideals: 4096 }
}

fn cmd_validate(file: &Path) -> u8 {
    match load_semiring(file) {
        Ok(s) => {
            println!(
                "ok: {} order={} zero={} one={}",
                s.name(),
                s.order(),
                s.label(s.zero()),
                s.label(s.one())
            );
            0
        }
        Err(e) => input_error(&e),
    }
}

fn cmd_ideals(file: &Path, subtractive_only: bool, strict: bool) -> u8 {
    let s = match load_semiring(file) {
        Ok(s) => Arc::new(s),
        Err(e) => return input_error(&e),
    };
    let lat = match enumerate_ideals_with(&s, inspection_caps()) {
        Ok(l) => l,
        Err(e) => return cap_exceeded(&e.to_string(), strict),
    };
    println!(
        "STRUCT {} IDEALS {} SUBTRACTIVE {}",
        s.name(),
        lat.len(),
        lat.subtractive_indices().len()
    );
    for i in 0..lat.len() {
        if subtractive_only && !lat.is_subtractive(i) {
            continue;
        }
        println!(
            "IDEAL {} {} SUBTRACTIVE {} CLOSURE {}",
            i,
            lat.render(i),
            yes_no(lat.is_subtractive(i)),
            lat.render(lat.closure_of(i)),
        );
    }
    0
}

fn cmd_closure(file: &Path, labels: &str) -> u8 {
    let s = match load_semiring(file) {
        Ok(s) => Arc::new(s),
        Err(e) => return input_error(&e),
    };
    let mut members = ElemSet::EMPTY;
    for raw in labels.split(',') {
        let label = raw.trim();
        if label.is_empty() {
            return input_error("--ideal holds an empty element label");
        }
        match s.index_of_label(label) {
            Some(i) => members.insert(i),
            None => {
                return input_error(&format!(
                    "unknown element label `{label}` in {}",
                    s.name()
                ));
            }
        }
    }
    let ideal = match Ideal::new(Arc::clone(&s), members) {
        Ok(i) => i,
        Err(e) => return input_error(&e.to_string()),
    };
    let closure = ideal.subtractive_closure();
    match ideal.subtractive_failure() {
        None => println!(
            "IDEAL {} CLOSURE {} SUBTRACTIVE yes",
            ideal.render(),
            closure.render()
        ),
        Some((x, y)) => println!(
            "IDEAL {} CLOSURE {} SUBTRACTIVE no WITNESS x={} y={} (x and x+y \
             are members, y is not)",
            ideal.render(),
            closure.render(),
            s.label(x),
            s.label(y),
        ),
    }
    0
}

fn cmd_topology(file: &Path, semantics: Semantics, max_closed: usize, strict: bool) -> u8 {
    let s = match load_semiring(file) {
        Ok(s) => Arc::new(s),
        Err(e) => return input_error(&e),
    };
    let lat = match enumerate_ideals_with(&s, inspection_caps()) {
        Ok(l) => Arc::new(l),
        Err(e) => return cap_exceeded(&e.to_string(), strict),
    };
    let space = SubtractiveSpace::build(Arc::clone(&lat), semantics);
    println!("STRUCT {} SEM {} POINTS {}", s.name(), semantics, space.points());
    for p in 0..space.points() {
        println!("POINT {p} {}", space.render_point(p));
    }
    for (k, set) in space.subbasis().iter().enumerate() {
        println!(
            "SUBBASIC {} NAMED-BY {} {}",
            k,
            space.render_point(space.namer(k)),
            space.render_point_set(set)
        );
    }
    let family = match space.closed_family(max_closed) {
        Ok(f) => f,
        Err(e) => return cap_exceeded(&e.to_string(), strict),
    };
    println!("CLOSED-FAMILY {}", family.len());
    for p in 0..space.points() {
        println!("CLOSURE {p} {}", space.render_point_set(&space.point_closure(p)));
    }
    match space.t0_failure() {
        None => println!("T0 holds"),
        Some((a, b)) => println!(
            "T0 fails WITNESS points {} and {} have equal closures",
            space.render_point(a),
            space.render_point(b)
        ),
    }
    let sub = space.subtractive_points();
    println!("SUBTRACTIVE-POINTS {}", space.render_point_set(&sub));
    match space.t1_failure_in(&sub) {
        None => println!("T1-SUBTRACTIVE holds"),
        Some(p) => println!(
            "T1-SUBTRACTIVE fails WITNESS point {} is not closed within the \
             subtractive subspace",
            space.render_point(p)
        ),
    }
    for set in family.sorted() {
        if set.is_empty() || reducible_split(&family, set).is_some() {
            continue;
        }
        let gens = generic_points(&space, set);
        let rendered: Vec<String> =
            gens.iter().map(|&p| space.render_point(p)).collect();
        println!(
            "IRREDUCIBLE {} GENERIC {}",
            space.render_point_set(set),
            if rendered.is_empty() { "none".to_string() } else { rendered.join(" ") }
        );
    }
    0
}

fn cmd_check(args: &CheckArgs) -> u8 {
    let explicit = !args.files.is_empty() || args.search_order.is_some();
    let mut corpus: Vec<Arc<FiniteSemiring>> = Vec::new();
    for f in &args.files {
        match load_semiring(f) {
            Ok(s) => corpus.push(Arc::new(s)),
            Err(e) => return input_error(&e),
        }
    }
    if let Some(order) = args.search_order {
        match search_semirings(order, args.canonical, None) {
            Ok(found) => corpus.extend(found.semirings.into_iter().map(Arc::new)),
            Err(e) => return input_error(&e.to_string()),
        }
    }
    if !explicit {
        corpus = claims::default_corpus();
    }
    let mut seen = BTreeSet::new();
    for s in &corpus {
        if !seen.insert(s.name().to_string()) {
            return input_error(&format!("duplicate structure name `{}`", s.name()));
        }
    }

    let claim_filter = match parse_claim_filter(&args.claims) {
        Ok(f) => f,
        Err(e) => return input_error(&e),
    };

    let mut nat_extras = Vec::new();
    for gens_arg in &args.nat_ideal {
        let gens = match parse_generators(gens_arg) {
            Ok(g) => g,
            Err(e) => return input_error(&e),
        };
        match nat_ideal(&gens) {
            Ok(i) => nat_extras.push(i),
            Err(e) => {
                // The requested ideal cannot be represented at all, so there
                // is no report row to carry the cap; fail outright.
                eprintln!("error: --nat-ideal {gens_arg}: {e}");
                return 3;
            }
        }
    }

    let include_nat = !explicit || !nat_extras.is_empty();
    let opts = SuiteOptions {
        semantics: args.semantics.list(),
        claim_filter,
        caps: SuiteCaps {
            enumeration: EnumerationCaps::default(),
            max_closed: args.max_closed,
        },
        include_nat,
        nat_extras,
    };
    let report = claims::run_suite(&corpus, &opts);
    print!("{}", report.render());
    for r in &report.reports {
        if r.elapsed > Duration::from_secs(10) {
            eprintln!(
                "warning: CLAIM {} STRUCT {} ran {:.1}s, over the 10s soft budget",
                r.claim_id,
                r.structure,
                r.elapsed.as_secs_f64()
            );
        }
    }
    report.exit_code(args.strict)
}

fn cmd_search(order: usize, canonical: bool, limit: Option<usize>) -> u8 {
    let found = match search_semirings(order, canonical, limit) {
        Ok(f) => f,
        Err(e) => return input_error(&e.to_string()),
    };
    println!(
        "# order {} canonical {} structures {} complete {}",
        order,
        yes_no(canonical),
        found.semirings.len(),
        yes_no(found.complete)
    );
    for s in &found.semirings {
        println!();
        print!("{}", format::render_semiring(s));
    }
    0
}

fn parse_claim_filter(arg: &str) -> Result<Option<BTreeSet<String>>, String> {
    if arg == "all" {
        return Ok(None);
    }
    let mut out = BTreeSet::new();
    for raw in arg.split(',') {
        let id = raw.trim();
        if claims::claim(id).is_none() {
            return Err(format!("unknown claim id `{id}`"));
        }
        out.insert(id.to_string());
    }
    Ok(Some(out))
}

fn parse_generators(arg: &str) -> Result<Vec<u64>, String> {
    arg.split(',')
        .map(|raw| {
            let tok = raw.trim();
            tok.parse::<u64>()
                .map_err(|_| format!("--nat-ideal: `{tok}` is not a natural number"))
        })
        .collect()
}

fn yes_no(b: bool) -> &'static str {
    if b { "yes" } else { "no" }
}

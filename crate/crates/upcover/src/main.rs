//! Command-line front end: verification, generation, construction, slicing,
//! search, and rendering of universal partial objects.
//!
//! Exit codes: 0 on success (and valid objects), 1 when a verified object is
//! invalid, 2 on usage or parse errors.

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use upcover::construct::{self, RotationSequence};
use upcover::error::Error;
use upcover::families::{self, CutSet, Family};
use upcover::fixtures::{self, Fixture};
use upcover::generate;
use upcover::grids::{self, GridMode, PartialGrid, WindowShape};
use upcover::io as formats;
use upcover::render;
use upcover::search::{Catalog, SearchSpec};
use upcover::words::{
    verify_upcycle, verify_upword, Alphabet, CyclicPartialWord, PartialWord,
    VerificationReport,
};

#[derive(Parser)]
#[command(name = "upcover", version, about = "Universal partial word, grid, and family toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify an object's universal-coverage property.
    Verify(VerifyArgs),
    /// Generate De Bruijn cycles, alternating cycles, and perfect necklaces.
    Generate {
        #[command(subcommand)]
        what: GenerateCommand,
    },
    /// Build upmatrices and uptori from words, cycles, and families.
    Construct {
        #[command(subcommand)]
        what: ConstructCommand,
    },
    /// Locate a total matrix inside a torus built from an upcycle.
    Locate(LocateArgs),
    /// Slice an upcycle at given cut positions into a family.
    Slice(SliceArgs),
    /// Scan every block-aligned cut subset of an upcycle.
    EnumerateSlicings(EnumerateArgs),
    /// Exhaustively search for upmatrices or uptori of fixed dimensions.
    Search(SearchArgs),
    /// Export a grid as a PPM image.
    Render(RenderArgs),
    /// List or export the built-in example corpus.
    Fixtures {
        #[command(subcommand)]
        what: FixturesCommand,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyKind {
    Upword,
    Upcycle,
    Upmatrix,
    Uptorus,
    Family,
}

#[derive(Args)]
struct VerifyArgs {
    /// What the input claims to be.
    kind: VerifyKind,
    /// A file path or `fixture:<name>`.
    input: String,
    /// Window length for words, cycles, and families.
    #[arg(long)]
    n: Option<usize>,
    /// Window length for families (alias of --n).
    #[arg(long)]
    x: Option<usize>,
    /// Window shape for grids, as WxL.
    #[arg(long)]
    window: Option<String>,
    /// Alphabet size, required for word/cycle/family files.
    #[arg(long)]
    alphabet: Option<u32>,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum GenerateCommand {
    /// Lexicographically least De Bruijn cycle for {0..a-1}^n.
    Debruijn { a: u32, n: usize },
    /// Alternating De Bruijn cycle of order 2n+1 on index alphabets of the
    /// given sizes; prints the two interleaved streams as index lines.
    Altdb { size_a: usize, size_b: usize, n: usize },
    /// The (a,1,k)-perfect necklace 0^k 1^k ... (a-1)^k.
    Necklace { a: u32, k: usize },
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// Stack an upword over p-1 all-diamond rows.
    Mu {
        input: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        alphabet: Option<u32>,
    },
    /// Roll an upcycle into a torus using a De Bruijn rotation cycle.
    TorusFromUpcycle {
        input: String,
        /// Rotation cycle: a file of space-separated integers, `fixture:s64`,
        /// or `debruijn:<order>` to generate one.
        #[arg(long)]
        s: String,
        #[arg(long)]
        x: usize,
        #[arg(long)]
        alphabet: Option<u32>,
    },
    /// Build a torus from an upfamily via an alternating De Bruijn cycle.
    TorusFromFamily {
        input: String,
        #[arg(long)]
        x: usize,
        #[arg(long)]
        y: usize,
    },
    /// Lift a diamondicity-1 cyclic word to the same alphabet's full cycle.
    Lift {
        input: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alphabet: Option<u32>,
    },
    /// Lift the short members of a quasi-family and build the resulting torus.
    NoDiamondicity {
        input: String,
        #[arg(long)]
        x: usize,
        #[arg(long)]
        y: usize,
    },
}

#[derive(Args)]
struct LocateArgs {
    /// The total matrix to find (grid file or fixture).
    matrix: String,
    /// The upcycle the torus was built from.
    upcycle: String,
    /// Rotation cycle (same forms as construct torus-from-upcycle --s).
    #[arg(long)]
    s: String,
    #[arg(long)]
    alphabet: Option<u32>,
}

#[derive(Args)]
struct SliceArgs {
    input: String,
    /// Comma-separated cut positions, e.g. 0,8,16.
    #[arg(long)]
    cuts: String,
    #[arg(long)]
    x: usize,
    #[arg(long)]
    alphabet: Option<u32>,
}

#[derive(Args)]
struct EnumerateArgs {
    input: String,
    #[arg(long)]
    block: usize,
    #[arg(long)]
    x: usize,
    #[arg(long)]
    alphabet: Option<u32>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Matrix,
    Torus,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    alphabet: u32,
    /// Window shape as WxL.
    #[arg(long)]
    window: String,
    /// Grid dimensions as RxC.
    #[arg(long)]
    dims: String,
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Drop all-diamond, diamond-free, and degenerate-window solutions.
    #[arg(long)]
    nontrivial: bool,
    /// Keep one representative per equivalence class.
    #[arg(long)]
    dedup: bool,
    #[arg(long)]
    limit: Option<usize>,
    /// Enable the coverage-capacity bound (helps large searches).
    #[arg(long)]
    capacity_prune: bool,
    /// Write a JSON catalog here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    input: String,
    out: PathBuf,
    #[arg(long, default_value_t = 1)]
    scale: usize,
    #[arg(long)]
    transpose: bool,
}

#[derive(Subcommand)]
enum FixturesCommand {
    /// Print all fixture names.
    List,
    /// Write a fixture to a file (or stdout) in its text format.
    Export {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse(_) | Error::Io(_) | Error::BadAlphabet(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Generate { what } => cmd_generate(what),
        Command::Construct { what } => cmd_construct(what),
        Command::Locate(args) => cmd_locate(args),
        Command::Slice(args) => cmd_slice(args),
        Command::EnumerateSlicings(args) => cmd_enumerate(args),
        Command::Search(args) => cmd_search(args),
        Command::Render(args) => cmd_render(args),
        Command::Fixtures { what } => cmd_fixtures(what),
    }
}

fn parse_shape(text: &str) -> Result<(usize, usize), Error> {
    let (a, b) = text
        .split_once(['x', 'X'])
        .ok_or_else(|| Error::Parse(format!("expected WxL, got `{text}`")))?;
    let parse = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad dimension `{s}`")))
    };
    Ok((parse(a)?, parse(b)?))
}

fn need_alphabet(alphabet: Option<u32>) -> Result<Alphabet, Error> {
    let size = alphabet.ok_or_else(|| {
        Error::Parse("--alphabet is required for file inputs".into())
    })?;
    Alphabet::new(size)
}

fn load_input(spec: &str, alphabet: Option<u32>) -> Result<Fixture, Error> {
    if spec.starts_with("fixture:") {
        return fixtures::get(spec);
    }
    // Files are untyped lines; the caller's expected kind decides the parse.
    let text = fs::read_to_string(spec)?;
    Ok(Fixture::Word(formats::word_from_text(
        &text,
        need_alphabet(alphabet)?,
    )?))
}

fn load_word(spec: &str, alphabet: Option<u32>) -> Result<PartialWord, Error> {
    match load_input(spec, alphabet)? {
        Fixture::Word(w) => Ok(w),
        Fixture::Cycle(c) => PartialWord::new(c.symbols().to_vec(), c.alphabet()),
        _ => Err(Error::Parse(format!("`{spec}` is not a word"))),
    }
}

fn load_cycle(spec: &str, alphabet: Option<u32>) -> Result<CyclicPartialWord, Error> {
    match load_input(spec, alphabet)? {
        Fixture::Word(w) => CyclicPartialWord::new(w.symbols().to_vec(), w.alphabet()),
        Fixture::Cycle(c) => Ok(c),
        _ => Err(Error::Parse(format!("`{spec}` is not a cyclic word"))),
    }
}

fn load_grid(spec: &str) -> Result<PartialGrid, Error> {
    if spec.starts_with("fixture:") {
        return match fixtures::get(spec)? {
            Fixture::Grid(g) => Ok(g),
            _ => Err(Error::Parse(format!("`{spec}` is not a grid"))),
        };
    }
    formats::grid_from_text(&fs::read_to_string(spec)?)
}

/// Returns the family and the window length declared in its file header,
/// when one exists.
fn load_family(spec: &str) -> Result<(Family, Option<usize>), Error> {
    if spec.starts_with("fixture:") {
        return match fixtures::get(spec)? {
            Fixture::Family(f) => Ok((f, None)),
            _ => Err(Error::Parse(format!("`{spec}` is not a family"))),
        };
    }
    let (family, x) = formats::family_from_text(&fs::read_to_string(spec)?)?;
    Ok((family, Some(x)))
}

fn load_rotations(spec: &str, modulus: usize) -> Result<RotationSequence, Error> {
    if let Some(rest) = spec.strip_prefix("debruijn:") {
        let order: usize = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad De Bruijn order `{rest}`")))?;
        return RotationSequence::new(generate::debruijn_indices(modulus, order), modulus);
    }
    if spec.starts_with("fixture:") {
        return match fixtures::get(spec)? {
            Fixture::Rotation(r) => Ok(r),
            _ => Err(Error::Parse(format!("`{spec}` is not a rotation sequence"))),
        };
    }
    let text = fs::read_to_string(spec)?;
    let values = text
        .split_whitespace()
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad rotation value `{t}`")))
        })
        .collect::<Result<Vec<u32>, Error>>()?;
    RotationSequence::new(values, modulus)
}

fn emit_report(report: &VerificationReport, json: bool) -> ExitCode {
    if json {
        println!("{}", serde_json::to_string_pretty(report).unwrap());
    } else {
        println!("valid: {}", report.valid);
        println!("triviality: {:?}", report.triviality);
        match report.diamondicity {
            Some(d) => println!("diamondicity: {d}"),
            None => println!("diamondicity: not well-defined"),
        }
        if !report.valid {
            println!(
                "missing: {} (showing {})",
                report.missing_total,
                report.missing.len()
            );
            println!(
                "duplicated: {} (showing {})",
                report.duplicated_total,
                report.duplicated.len()
            );
        }
    }
    if report.valid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let window_len = args.n.or(args.x);
    let need_len = || {
        window_len.ok_or_else(|| Error::Parse("--n (or --x) is required for this kind".into()))
    };
    let need_window = || -> Result<WindowShape, Error> {
        let text = args
            .window
            .as_deref()
            .ok_or_else(|| Error::Parse("--window WxL is required for grids".into()))?;
        let (w, l) = parse_shape(text)?;
        WindowShape::new(w, l)
    };
    match args.kind {
        VerifyKind::Upword => {
            let w = load_word(&args.input, args.alphabet)?;
            let report = verify_upword(&w, need_len()?)?;
            Ok(emit_report(&report, args.json))
        }
        VerifyKind::Upcycle => {
            let c = load_cycle(&args.input, args.alphabet)?;
            let report = verify_upcycle(&c, need_len()?)?;
            Ok(emit_report(&report, args.json))
        }
        VerifyKind::Upmatrix => {
            let g = load_grid(&args.input)?.with_mode(GridMode::Matrix);
            let report = grids::verify_upmatrix(&g, need_window()?)?;
            Ok(emit_report(&report, args.json))
        }
        VerifyKind::Uptorus => {
            let g = load_grid(&args.input)?.with_mode(GridMode::Torus);
            let report = grids::verify_uptorus(&g, need_window()?)?;
            Ok(emit_report(&report, args.json))
        }
        VerifyKind::Family => {
            let (family, declared_x) = load_family(&args.input)?;
            let x = window_len
                .or(declared_x)
                .ok_or_else(|| Error::Parse("--x is required for families".into()))?;
            let report = families::verify_family(&family, x)?;
            if args.json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
                Ok(if report.report.valid {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                })
            } else {
                println!("kind: {:?}", report.kind);
                for (code, i, j) in &report.cross_member_duplicates {
                    println!("duplicate code {code} covered by members {i} and {j}");
                }
                Ok(emit_report(&report.report, false))
            }
        }
    }
}

fn cmd_generate(what: GenerateCommand) -> Result<ExitCode, Error> {
    match what {
        GenerateCommand::Debruijn { a, n } => {
            if a <= 36 {
                println!("{}", generate::debruijn_cycle(a, n)?.to_text());
            } else {
                let indices = generate::debruijn_indices(a as usize, n);
                let line: Vec<String> = indices.iter().map(u32::to_string).collect();
                println!("{}", line.join(" "));
            }
        }
        GenerateCommand::Altdb { size_a, size_b, n } => {
            let cycle = generate::alternating_debruijn(size_a, size_b, n);
            let unrolled = generate::unroll_alternating(&cycle);
            let fmt = |items: &[u32]| {
                items
                    .iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            println!("{}", fmt(&unrolled.a_items));
            println!("{}", fmt(&unrolled.b_items));
        }
        GenerateCommand::Necklace { a, k } => {
            println!("{}", generate::perfect_necklace(a, k)?.to_text());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_grid(g: &PartialGrid) {
    print!("{}", formats::grid_to_text(g));
}

fn cmd_construct(what: ConstructCommand) -> Result<ExitCode, Error> {
    match what {
        ConstructCommand::Mu { input, n, p, alphabet } => {
            let w = load_word(&input, alphabet)?;
            print_grid(&construct::mu(&w, n, p)?);
        }
        ConstructCommand::TorusFromUpcycle { input, s, x, alphabet } => {
            let u = load_cycle(&input, alphabet)?;
            let s = load_rotations(&s, u.len())?;
            let y = order_of(&s, u.len())?;
            let (torus, report) = construct::certify_m_us(&u, &s, x, y)?;
            if !report.valid {
                return Err(Error::NotAnUpcycle);
            }
            print_grid(&torus);
        }
        ConstructCommand::TorusFromFamily { input, x, y } => {
            let (family, _) = load_family(&input)?;
            let (torus, report) = construct::certify_m_w(&family, x, y)?;
            if !report.valid {
                return Err(Error::NotAnUpcycle);
            }
            print_grid(&torus);
        }
        ConstructCommand::Lift { input, n, alphabet } => {
            let u = load_cycle(&input, alphabet)?;
            println!("{}", construct::lift(&u, n)?.to_text());
        }
        ConstructCommand::NoDiamondicity { input, x, y } => {
            let (family, _) = load_family(&input)?;
            let outcome = construct::build_no_diamondicity(&family, x, y)?;
            if !outcome.report.valid {
                return Err(Error::NotAnUpcycle);
            }
            print_grid(&outcome.torus);
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Infers the De Bruijn order of a rotation sequence from its length:
/// |s| = modulus^y.
fn order_of(s: &RotationSequence, modulus: usize) -> Result<usize, Error> {
    let mut size = modulus;
    let mut y = 1;
    while size < s.len() {
        size *= modulus;
        y += 1;
    }
    if size != s.len() {
        return Err(Error::NotADeBruijnCycle { modulus, order: y });
    }
    Ok(y)
}

fn cmd_locate(args: LocateArgs) -> Result<ExitCode, Error> {
    let p = load_grid(&args.matrix)?;
    let u = load_cycle(&args.upcycle, args.alphabet)?;
    let s = load_rotations(&args.s, u.len())?;
    let placement = construct::locate(&p, &u, &s)?;
    println!("row {} col {}", placement.row, placement.col);
    Ok(ExitCode::SUCCESS)
}

fn parse_cuts(text: &str) -> Result<Vec<usize>, Error> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad cut `{t}`")))
        })
        .collect()
}

fn cmd_slice(args: SliceArgs) -> Result<ExitCode, Error> {
    let u = load_cycle(&args.input, args.alphabet)?;
    let cuts = CutSet::new(parse_cuts(&args.cuts)?, u.len())?;
    let family = families::slice(&u, &cuts)?;
    let report = families::verify_family(&family, args.x)?;
    print!("{}", formats::family_to_text(&family, args.x));
    eprintln!(
        "slicing is {} as a {:?}",
        if report.report.valid { "valid" } else { "invalid" },
        report.kind
    );
    Ok(if report.report.valid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<ExitCode, Error> {
    let u = load_cycle(&args.input, args.alphabet)?;
    let report = families::enumerate_slicings(&u, args.block, args.x)?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("combinations scanned: {}", report.combinations_scanned);
        println!(
            "valid slicings: {} including the whole cycle, {} excluding it",
            report.valid_including_whole, report.valid_excluding_whole
        );
        println!(
            "equal-length valid slicings: {} (all upfamilies: {})",
            report.equal_length_valid, report.equal_length_all_upfamilies
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_search(args: SearchArgs) -> Result<ExitCode, Error> {
    let (w, l) = parse_shape(&args.window)?;
    let (rows, cols) = parse_shape(&args.dims)?;
    let mode = match args.mode {
        ModeArg::Matrix => GridMode::Matrix,
        ModeArg::Torus => GridMode::Torus,
    };
    let mut spec = SearchSpec::new(args.alphabet, WindowShape::new(w, l)?, rows, cols, mode);
    spec.dedup = args.dedup;
    spec.limit = args.limit;
    spec.capacity_prune = args.capacity_prune;
    spec.progress = true;
    let catalog = if args.nontrivial {
        upcover::search::search_nontrivial(&spec)?
    } else {
        upcover::search::search(&spec)?
    };
    eprintln!(
        "{} solutions ({} canonical classes), {} nodes",
        catalog.raw_count, catalog.canonical_count, catalog.nodes_explored
    );
    for g in &catalog.solutions {
        print_grid(g);
        println!();
    }
    if let Some(path) = args.out {
        fs::write(&path, catalog_json(&catalog)?)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn catalog_json(catalog: &Catalog) -> Result<String, Error> {
    let solutions: Vec<Vec<String>> = catalog
        .solutions
        .iter()
        .map(|g| g.row_texts())
        .collect();
    let value = json!({
        "spec": catalog.spec,
        "raw_count": catalog.raw_count,
        "canonical_count": catalog.canonical_count,
        "nodes_explored": catalog.nodes_explored,
        "solutions": solutions,
    });
    Ok(serde_json::to_string_pretty(&value).unwrap())
}

fn cmd_render(args: RenderArgs) -> Result<ExitCode, Error> {
    let grid = load_grid(&args.input)?;
    let mut out = fs::File::create(&args.out)?;
    render::write_ppm(&mut out, &grid, args.scale, args.transpose)?;
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_fixtures(what: FixturesCommand) -> Result<ExitCode, Error> {
    match what {
        FixturesCommand::List => {
            for name in fixtures::NAMES {
                println!("{name}");
            }
        }
        FixturesCommand::Export { name, out } => {
            let text = match fixtures::get(&name)? {
                Fixture::Word(w) => formats::word_to_text(&w),
                Fixture::Cycle(c) => {
                    let mut t = c.to_text();
                    t.push('\n');
                    t
                }
                Fixture::Grid(g) => formats::grid_to_text(&g),
                Fixture::Family(f) => {
                    // Published families in the corpus all target window 4.
                    formats::family_to_text(&f, 4)
                }
                Fixture::Rotation(r) => {
                    let mut t = r
                        .values()
                        .iter()
                        .map(u32::to_string)
                        .collect::<Vec<_>>()
                        .join(" ");
                    t.push('\n');
                    t
                }
            };
            match out {
                Some(path) => fs::write(path, text)?,
                None => print!("{text}"),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;
use strongkoszul::apolarity::{apolar_ideal, ert_obstruction, InverseSystemModule};
use strongkoszul::gallery::{self, GalleryItem, GALLERY_NAMES};
use strongkoszul::grobner::hilbert_function;
use strongkoszul::koszul::{strong_koszul_certify, KoszulMode, Verdict, DEFAULT_KOSZUL_CAP};
use strongkoszul::parse::{parse_polynomial_at, render_file};
use strongkoszul::suite::{criteria, run_criterion, selects, SuiteConfig};
use strongkoszul::universal::{check_revlex_universal, UniversalMode, DEFAULT_SAMPLES, DEFAULT_UNIVERSAL_CAP};
use strongkoszul::{Error, Field, IdealPresentation, MonomialOrder, Polynomial};

const SCHEMA: u32 = 1;

const EXIT_OK: u8 = 0;
const EXIT_WITNESS: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "skz", version, about = "Gröbner bases, strong Koszulness and apolarity over QQ and GF(p)")]
struct Cli {
    /// Worker threads for the parallel sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Source {
    /// An ideal file, `gallery:NAME`, or a bare gallery name.
    #[arg(long)]
    ideal: String,
    /// `QQ` or `GF(p)`; overrides the file's field.
    #[arg(long)]
    field: Option<String>,
}

#[derive(Args)]
struct Sweep {
    /// `exhaustive` or `sample:N`.
    #[arg(long)]
    mode: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest variable count allowed in exhaustive mode.
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Gröbner basis and initial ideal.
    Gb {
        #[command(flatten)]
        src: Source,
        /// e.g. `revlex:x3,x1,x2` (x3 > x1 > x2); defaults to revlex in declaration order.
        #[arg(long)]
        order: Option<String>,
    },
    /// Checks that a candidate set is a Gröbner basis for every revlex order.
    Universal {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        sweep: Sweep,
    },
    /// Strong Koszulness with respect to the variables; `--mode theorem` uses the universality shortcut.
    Koszul {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        sweep: Sweep,
    },
    /// Apolar ideal of an inverse system (`dualvars:` file or `gallery:forms:...`).
    Apolar {
        /// Module file or gallery name.
        #[arg(long)]
        forms: String,
        #[arg(long)]
        field: Option<String>,
    },
    /// Checks the quadratic Gröbner basis obstruction.
    Obstruction {
        #[command(flatten)]
        src: Source,
    },
    /// Applies a linear change of coordinates and reports the Gröbner basis degree.
    Transform {
        #[command(flatten)]
        src: Source,
        /// Lines `x1 -> x1 + x2`; unlisted variables are fixed.
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        order: Option<String>,
    },
    /// Runs the acceptance suite.
    VerifyPaper {
        /// Comma-separated criterion numbers or tags.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Include the optional exhaustive 9! check.
        #[arg(long)]
        full: bool,
    },
    /// Lists or prints gallery constructions.
    Gallery {
        #[command(subcommand)]
        action: GalleryAction,
    },
}

#[derive(Subcommand)]
enum GalleryAction {
    List,
    Show {
        name: String,
        #[arg(long)]
        field: Option<String>,
    },
}

#[derive(Serialize)]
struct Inputs {
    source: String,
    hash: String,
    vars: Vec<String>,
    field: String,
}

#[derive(Serialize)]
struct RunReport {
    schema: u32,
    command: &'static str,
    tool_version: &'static str,
    inputs: Inputs,
    mode: Value,
    seed: Option<u64>,
    wall_seconds: f64,
    verdict: String,
    result: Value,
}

struct Output {
    text: String,
    code: u8,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}

fn field_arg(f: &Option<String>) -> Result<Option<Field>, Error> {
    f.as_deref().map(Field::parse).transpose()
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn with_field(m: InverseSystemModule, field: Option<Field>) -> Result<InverseSystemModule, Error> {
    let Some(f) = field else { return Ok(m) };
    let dual = m.gens()[0].ring().with_field(f);
    InverseSystemModule::from_polys(m.gens().iter().map(|g| g.poly().change_ring(&dual)).collect::<Result<_, _>>()?)
}

/// Resolves a file path or gallery name.
fn load(src: &str, field: Option<Field>) -> Result<GalleryItem, Error> {
    if let Some(name) = src.strip_prefix("gallery:") {
        return gallery::lookup(name, field.unwrap_or(Field::Rational));
    }
    let path = Path::new(src);
    if !path.exists() {
        return gallery::lookup(src, field.unwrap_or(Field::Rational))
            .map_err(|_| usage(format!("`{src}` is neither a readable file nor a gallery name")));
    }
    let text = read(path)?;
    let is_dual = text.lines().any(|l| l.trim_start().starts_with("dualvars:"));
    if is_dual {
        return Ok(GalleryItem::Module(with_field(InverseSystemModule::parse(&text)?, field)?));
    }
    let mut ideal = IdealPresentation::parse(&text)?;
    if let Some(f) = field {
        ideal = ideal.change_field(f)?;
    }
    Ok(GalleryItem::Ideal { ideal, candidate: None })
}

fn load_ideal(src: &Source) -> Result<(IdealPresentation, Option<Vec<Polynomial>>), Error> {
    match load(&src.ideal, field_arg(&src.field)?)? {
        GalleryItem::Ideal { ideal, candidate } => Ok((ideal, candidate)),
        _ => Err(usage(format!("`{}` is not an ideal", src.ideal))),
    }
}

fn inputs(source: &str, ideal: &IdealPresentation) -> Inputs {
    Inputs { source: source.into(), hash: ideal.hash(), vars: ideal.ring().names().to_vec(), field: ideal.field().to_string() }
}

fn order_for(ideal: &IdealPresentation, spec: &Option<String>) -> Result<MonomialOrder, Error> {
    match spec {
        Some(s) => MonomialOrder::parse(s, ideal.ring().names()),
        None => Ok(ideal.default_order()),
    }
}

fn json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn report(command: &'static str, inputs: Inputs, mode: Value, seed: Option<u64>, start: Instant, verdict: &str, result: Value) -> String {
    let r = RunReport {
        schema: SCHEMA,
        command,
        tool_version: env!("CARGO_PKG_VERSION"),
        inputs,
        mode,
        seed,
        wall_seconds: start.elapsed().as_secs_f64(),
        verdict: verdict.into(),
        result,
    };
    serde_json::to_string_pretty(&r).expect("reports serialize") + "\n"
}

/// `sample:N`, `sample` or `exhaustive`; `None` picks by variable count.
fn universal_mode(sweep: &Sweep, n: usize) -> Result<UniversalMode, Error> {
    let cap = sweep.cap.unwrap_or(DEFAULT_UNIVERSAL_CAP);
    match sweep.mode.as_deref() {
        None if n <= cap => Ok(UniversalMode::Exhaustive { cap }),
        None => Ok(UniversalMode::Sampled { count: DEFAULT_SAMPLES, seed: sweep.seed }),
        Some(m) => match parse_sample(m)? {
            Some(count) => Ok(UniversalMode::Sampled { count, seed: sweep.seed }),
            None if m == "exhaustive" => Ok(UniversalMode::Exhaustive { cap }),
            None => Err(usage(format!("unknown mode `{m}` (expected exhaustive or sample:N)"))),
        },
    }
}

fn parse_sample(m: &str) -> Result<Option<usize>, Error> {
    if m == "sample" {
        return Ok(Some(DEFAULT_SAMPLES));
    }
    match m.strip_prefix("sample:") {
        Some(n) => n.parse().map(Some).map_err(|_| usage(format!("bad sample count in `{m}`"))),
        None => Ok(None),
    }
}

fn koszul_mode(sweep: &Sweep, n: usize) -> Result<KoszulMode, Error> {
    let m = sweep.mode.as_deref().unwrap_or("exhaustive");
    if m == "exhaustive" {
        return Ok(KoszulMode::Exhaustive { cap: sweep.cap.unwrap_or(DEFAULT_KOSZUL_CAP) });
    }
    if let Some(rest) = m.strip_prefix("theorem") {
        let inner = Sweep { mode: rest.strip_prefix(':').map(String::from), seed: sweep.seed, cap: sweep.cap };
        return Ok(KoszulMode::TheoremShortcut { universal: universal_mode(&inner, n)? });
    }
    match parse_sample(m)? {
        Some(count) => Ok(KoszulMode::Sampled { count, seed: sweep.seed }),
        None => Err(usage(format!("unknown mode `{m}` (expected exhaustive, sample:N or theorem[:MODE])"))),
    }
}

fn cmd_gb(src: &Source, order: &Option<String>) -> Result<Output, Error> {
    let (ideal, _) = load_ideal(src)?;
    let order = order_for(&ideal, order)?;
    let gb = ideal.groebner(&order);
    let names = ideal.ring().names();
    let mut text = format!("# reduced Groebner basis under {}\n", order.describe(names));
    text.push_str(&render_file(ideal.ring(), gb.basis(), false));
    let lead: Vec<String> = gb.initial_ideal().gens().iter().map(|m| m.fmt_with(names)).collect();
    text.push_str(&format!("# initial ideal: ({})\n", lead.join(", ")));
    Ok(Output { text, code: EXIT_OK })
}

fn cmd_universal(src: &Source, sweep: &Sweep) -> Result<Output, Error> {
    let start = Instant::now();
    let (ideal, candidate) = load_ideal(src)?;
    let g = candidate.unwrap_or_else(|| ideal.gens().to_vec());
    let mode = universal_mode(sweep, ideal.nvars())?;
    let r = check_revlex_universal(&g, mode)?;
    let (verdict, code) = match (r.universal, mode) {
        (false, _) => ("not-universal", EXIT_WITNESS),
        (true, UniversalMode::Exhaustive { .. }) => ("universal", EXIT_OK),
        (true, UniversalMode::Sampled { .. }) => ("no-failure-in-sample", EXIT_INCONCLUSIVE),
    };
    let seed = matches!(mode, UniversalMode::Sampled { .. }).then_some(sweep.seed);
    Ok(Output { text: report("universal", inputs(&src.ideal, &ideal), json(&mode), seed, start, verdict, json(&r)), code })
}

fn cmd_koszul(src: &Source, sweep: &Sweep) -> Result<Output, Error> {
    let start = Instant::now();
    let (ideal, candidate) = load_ideal(src)?;
    let mode = koszul_mode(sweep, ideal.nvars())?;
    let target = match (mode, candidate) {
        (KoszulMode::TheoremShortcut { .. }, Some(c)) => ideal.with_gens(c)?,
        _ => ideal.clone(),
    };
    let cert = strong_koszul_certify(&target, mode)?;
    let code = match cert.verdict {
        Verdict::Certified => EXIT_OK,
        Verdict::NotStronglyKoszul => EXIT_WITNESS,
        Verdict::NoCounterexampleFound | Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    };
    let verdict = json(&cert.verdict).as_str().unwrap_or_default().to_string();
    let seed = (!matches!(mode, KoszulMode::Exhaustive { .. })).then_some(sweep.seed);
    Ok(Output { text: report("koszul", inputs(&src.ideal, &ideal), json(&mode), seed, start, &verdict, json(&cert)), code })
}

fn cmd_apolar(forms: &str, field: &Option<String>) -> Result<Output, Error> {
    let module = match load(forms, field_arg(field)?)? {
        GalleryItem::Module(m) => m,
        _ => return Err(usage(format!("`{forms}` is not an inverse system"))),
    };
    let ideal = apolar_ideal(&module)?;
    let hf = hilbert_function(&ideal, 0..module.degree() + 2)?;
    let mut text = format!("# apolar ideal of {} form(s) of degree {}\n", module.gens().len(), module.degree());
    text.push_str(&ideal.render());
    text.push_str(&format!("# hilbert function: {hf:?}\n"));
    Ok(Output { text, code: EXIT_OK })
}

fn cmd_obstruction(src: &Source) -> Result<Output, Error> {
    let start = Instant::now();
    let (ideal, _) = load_ideal(src)?;
    let r = ert_obstruction(&ideal)?;
    let (verdict, code) = if r.is_obstructed() { ("obstructed", EXIT_OK) } else { ("inconclusive", EXIT_INCONCLUSIVE) };
    Ok(Output { text: report("obstruction", inputs(&src.ideal, &ideal), Value::Null, None, start, verdict, json(&r)), code })
}

fn parse_map(ideal: &IdealPresentation, text: &str) -> Result<BTreeMap<usize, Polynomial>, Error> {
    let ring = ideal.ring();
    let mut map = BTreeMap::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (lhs, rhs) = line
            .split_once("->")
            .ok_or_else(|| Error::Parse { line: k + 1, message: "expected `VAR -> LINEAR FORM`".into() })?;
        let v = ring.index_of(lhs.trim())?;
        let img = parse_polynomial_at(ring, rhs, k + 1)?;
        if !img.is_zero() && img.total_degree()? != 1 || !img.is_homogeneous() {
            return Err(Error::Parse { line: k + 1, message: "the image must be a linear form".into() });
        }
        map.insert(v, img);
    }
    Ok(map)
}

fn cmd_transform(src: &Source, map: &Path, order: &Option<String>) -> Result<Output, Error> {
    let (ideal, _) = load_ideal(src)?;
    let map = parse_map(&ideal, &read(map)?)?;
    let gens = ideal.gens().iter().map(|g| g.substitute_linear(&map)).collect::<Result<Vec<_>, _>>()?;
    let moved = ideal.with_gens(gens)?;
    let order = order_for(&moved, order)?;
    let gb = moved.groebner(&order);
    let mut text = moved.render();
    text.push_str(&format!(
        "# reduced Groebner basis under {}: {} elements, maximal degree {}\n",
        order.describe(moved.ring().names()),
        gb.len(),
        gb.max_degree()
    ));
    Ok(Output { text, code: EXIT_OK })
}

fn cmd_verify(filter: &Option<String>, cfg: SuiteConfig, to_file: bool) -> Output {
    let chosen: Vec<_> = criteria().into_iter().filter(|c| filter.as_deref().is_none_or(|f| selects(c, f))).collect();
    if chosen.is_empty() {
        eprintln!("warning: filter `{}` matches no criterion", filter.as_deref().unwrap_or(""));
    }
    let mut results = Vec::new();
    for c in &chosen {
        let r = run_criterion(c, &cfg);
        if to_file {
            eprintln!("{}", r.line());
        } else {
            println!("{}", r.line());
        }
        results.push(r);
    }
    let passed = results.iter().filter(|r| r.passed).count();
    let summary = format!("{passed}/{} criteria passed\n", results.len());
    let code = if passed == results.len() { EXIT_OK } else { EXIT_WITNESS };
    let text = if to_file {
        serde_json::to_string_pretty(&serde_json::json!({ "schema": SCHEMA, "seed": cfg.seed, "results": results })).expect("serializes")
            + "\n"
    } else {
        summary
    };
    Output { text, code }
}

fn cmd_gallery(action: &GalleryAction) -> Result<Output, Error> {
    let text = match action {
        GalleryAction::List => GALLERY_NAMES.iter().map(|n| format!("{n}\n")).collect(),
        GalleryAction::Show { name, field } => match gallery::lookup(name, field_arg(field)?.unwrap_or(Field::Rational))? {
            GalleryItem::Ideal { ideal, .. } => ideal.render(),
            GalleryItem::Module(m) => {
                let polys: Vec<Polynomial> = m.gens().iter().map(|g| g.poly().clone()).collect();
                render_file(m.gens()[0].ring(), &polys, true)
            }
            GalleryItem::Lines(l) => {
                let mut s = format!("# {} lines, {} tritangent planes\n", l.lines.len(), l.planes.len());
                for p in 0..l.planes.len() {
                    s.push_str(&l.plane_label(p));
                    s.push('\n');
                }
                s
            }
        },
    };
    Ok(Output { text, code: EXIT_OK })
}

fn run(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Gb { src, order } => cmd_gb(src, order),
        Command::Universal { src, sweep } => cmd_universal(src, sweep),
        Command::Koszul { src, sweep } => cmd_koszul(src, sweep),
        Command::Apolar { forms, field } => cmd_apolar(forms, field),
        Command::Obstruction { src } => cmd_obstruction(src),
        Command::Transform { src, map, order } => cmd_transform(src, map, order),
        Command::VerifyPaper { filter, seed, samples, full } => {
            Ok(cmd_verify(filter, SuiteConfig { seed: *seed, samples: *samples, full: *full }, cli.out.is_some()))
        }
        Command::Gallery { action } => cmd_gallery(action),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(&cli) {
        Ok(out) => {
            match &cli.out {
                Some(path) => {
                    if let Err(e) = fs::write(path, &out.text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(EXIT_USAGE);
                    }
                }
                None => print!("{}", out.text),
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

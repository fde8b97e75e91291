use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use matchtile::algebra::{
    evaluate, fc_cubic_two_factor, fc_relations, tl_relations, Diagram, Family, RelationCheck, Word,
};
use matchtile::bench::{run_bench, BenchConfig};
use matchtile::envelope::{EnvelopeError, Kind, Object};
use matchtile::matching::{
    decode_matching, encode_matching, find_bichromatic_witness, has_valid_blocks,
};
use matchtile::oracle::{
    catalan, enumerate_colored_matchings, enumerate_matchings, enumerate_tilings,
    enumerate_triangulations, CountTable, EnumLimits,
};
use matchtile::seqcore::{b_to_d, check_ballot, check_tri_code, d_to_b, MatchingCode};
use matchtile::tiling::{matching_to_tiling, tiling_to_matching};
use matchtile::triangulation::{decode_triangulation, encode_triangulation};
use matchtile::{ColoredMatching, Edge, Matching};

mod render;

#[derive(Parser)]
#[command(
    name = "matchtile",
    version,
    about = "Convert between colored matchings, ballot codes, triangulations and tilings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert an object to another representation.
    Convert(ConvertArgs),
    /// Check an object and explain why it is invalid.
    Validate(ValidateArgs),
    /// List every object of a kind and size.
    Enumerate(EnumerateArgs),
    /// Compare enumerated counts with the closed formulas.
    Count(CountArgs),
    /// Check the defining relations of the diagram algebras.
    Relations(RelationsArgs),
    /// Draw an object as SVG.
    Render(RenderArgs),
    /// Time both conversion directions on random instances.
    Bench(BenchArgs),
}

#[derive(Args)]
struct Io {
    /// Input file, `-` for standard input.
    #[arg(long, short, default_value = "-")]
    input: String,
    /// Output file; standard output when omitted.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Args)]
struct ConvertArgs {
    /// Kind of the input; detected when omitted.
    #[arg(long, value_parser = parse_kind)]
    from: Option<Kind>,
    /// Kind to produce.
    #[arg(long, value_parser = parse_kind)]
    to: Kind,
    /// Color count of the matching side.
    #[arg(short)]
    k: Option<usize>,
    /// Face size of the tiling side, `k + 2`.
    #[arg(short)]
    t: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[command(flatten)]
    io: Io,
}

#[derive(Args)]
struct ValidateArgs {
    #[arg(long, value_parser = parse_kind)]
    from: Option<Kind>,
    #[arg(short)]
    k: Option<usize>,
    #[arg(short)]
    t: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[command(flatten)]
    io: Io,
}

#[derive(Args)]
struct EnumerateArgs {
    /// matching, code-b, code-d, triangulation or tiling.
    #[arg(value_parser = parse_kind)]
    kind: Kind,
    /// Size `n` (vertices `2n`, points `n + 2`).
    #[arg(short)]
    n: Option<usize>,
    /// Restrict to k-colored objects.
    #[arg(short)]
    k: Option<usize>,
    /// Number of blocks or faces, `n = k m`.
    #[arg(short)]
    m: Option<usize>,
    /// Face size of tilings, `k + 2`.
    #[arg(short)]
    t: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Output file; standard output when omitted.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CountArgs {
    /// Catalan rows for `n = 1..=n` instead of the colored table.
    #[arg(short)]
    n: Option<usize>,
    /// Color count of a single colored row; needs `-m`.
    #[arg(short)]
    k: Option<usize>,
    /// Block count of a single colored row; needs `-k`.
    #[arg(short)]
    m: Option<usize>,
    /// Output file; standard output when omitted.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct RelationsArgs {
    /// Strand count of TL_n.
    #[arg(short)]
    n: Option<usize>,
    /// Fuss-Catalan parameters.
    #[arg(short)]
    m: Option<usize>,
    #[arg(short)]
    k: Option<usize>,
    /// Evaluate a word such as "u2 u3 u2" or "u1^(2) u2^(1)" instead.
    #[arg(long)]
    word: Option<String>,
    /// Check the two-factor reading of the cubic relation.
    #[arg(long)]
    two_factor: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    /// Kind of the input; detected when omitted.
    #[arg(long, value_parser = parse_kind)]
    from: Option<Kind>,
    /// Color count used for vertex colors.
    #[arg(short)]
    k: Option<usize>,
    #[command(flatten)]
    io: Io,
}

#[derive(Args)]
struct BenchArgs {
    /// Sizes, comma separated or repeated.
    #[arg(short, value_delimiter = ',', default_values_t = [250_000usize, 500_000, 1_000_000])]
    n: Vec<usize>,
    #[arg(short, default_value_t = 1)]
    k: usize,
    #[arg(long, default_value_t = 5)]
    reps: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse().map_err(|e: EnvelopeError| e.to_string())
}

/// Errors carrying their exit status.
enum Failure {
    Invalid(String),
    Usage(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(format!("{e:#}"))
    }
}

fn from_envelope(e: EnvelopeError) -> Failure {
    if e.is_syntax() {
        Failure::Usage(e.to_string())
    } else {
        Failure::Invalid(e.to_string())
    }
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn write_output(path: Option<&PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn color_count(k: Option<usize>, t: Option<usize>) -> Result<Option<usize>, Failure> {
    match (k, t) {
        (Some(k), Some(t)) if t != k + 2 => {
            Err(Failure::Usage(format!("-t {t} is not -k {k} plus 2")))
        }
        (Some(0), _) => Err(Failure::Usage("-k must be positive".into())),
        (Some(k), _) => Ok(Some(k)),
        (None, Some(t)) if t >= 3 => Ok(Some(t - 2)),
        (None, Some(t)) => Err(Failure::Usage(format!("-t {t} must be at least 3"))),
        (None, None) => Ok(None),
    }
}

/// Color count implied by the object itself.
fn own_k(obj: &Object) -> Option<usize> {
    match obj {
        Object::Matching(_, k) => *k,
        Object::Tiling(t) => Some(t.k()),
        Object::Diagram(d) => d.k(),
        _ => None,
    }
}

fn to_code_b(obj: &Object) -> MatchingCode {
    match obj {
        Object::Matching(m, _) => encode_matching(m),
        Object::CodeB(c) => c.clone(),
        Object::CodeD(c) => d_to_b(c),
        Object::Triangulation(t) => d_to_b(&encode_triangulation(t)),
        Object::Tiling(t) => encode_matching(tiling_to_matching(t).matching()),
        Object::Diagram(d) => encode_matching(d.pairing()),
    }
}

fn colored(m: Matching, k: usize) -> Result<ColoredMatching, Failure> {
    ColoredMatching::new(m, k).map_err(|e| Failure::Invalid(e.to_string()))
}

fn convert(obj: &Object, to: Kind, k: Option<usize>) -> Result<Object, Failure> {
    let code = to_code_b(obj);
    Ok(match to {
        Kind::CodeB => Object::CodeB(code),
        Kind::CodeD => Object::CodeD(b_to_d(&code)),
        Kind::Triangulation => Object::Triangulation(decode_triangulation(&b_to_d(&code))),
        Kind::Matching => match k {
            Some(k) => Object::colored(colored(decode_matching(&code), k)?),
            None => Object::Matching(decode_matching(&code), None),
        },
        Kind::Tiling => {
            let k = k.ok_or_else(|| Failure::Usage("a tiling needs -k or -t".into()))?;
            Object::Tiling(matching_to_tiling(&colored(decode_matching(&code), k)?))
        }
        Kind::Diagram => Object::Diagram(
            Diagram::new(decode_matching(&code), k).map_err(|e| Failure::Invalid(e.to_string()))?,
        ),
    })
}

fn render_object(obj: &Object, k: Option<usize>, comment: &str) -> String {
    match obj {
        Object::Matching(m, _) => render::two_rows(m, k, false, comment),
        Object::CodeB(c) => render::two_rows(&decode_matching(c), k, false, comment),
        Object::Diagram(d) => render::two_rows(d.pairing(), k, true, comment),
        Object::CodeD(c) => {
            let t = decode_triangulation(c);
            render::polygon(t.npoints(), t.diagonals(), comment)
        }
        Object::Triangulation(t) => render::polygon(t.npoints(), t.diagonals(), comment),
        Object::Tiling(t) => render::polygon(t.npoints(), t.diagonals(), comment),
    }
}

fn emit(obj: &Object, format: Format, k: Option<usize>) -> String {
    match format {
        Format::Json => obj.to_json(),
        Format::Text => obj.to_text(k),
        Format::Svg => render_object(obj, k, &obj.to_text(None)),
    }
}

fn cmd_convert(args: ConvertArgs) -> Result<(), Failure> {
    let text = read_input(&args.io.input)?;
    let obj = Object::parse(&text, args.from).map_err(from_envelope)?;
    let k = color_count(args.k, args.t)?.or_else(|| own_k(&obj));
    let out = convert(&obj, args.to, k)?;
    let mut rendered = emit(&out, args.format, k);
    rendered.push('\n');
    write_output(args.io.output.as_ref(), &rendered)?;
    Ok(())
}

/// `Ok(notes)` when valid, `Err((reason, witness))` otherwise.
type Verdict = Result<Vec<String>, (String, Option<Edge>)>;

/// Validation report.
fn validate(text: &str, from: Option<Kind>, k: Option<usize>) -> Result<Verdict, Failure> {
    let trimmed = text.trim();
    // Codes are checked here so that ballot failures report the prefix.
    let looks_like_code = !trimmed.starts_with('{');
    if looks_like_code && matches!(from, None | Some(Kind::CodeB) | Some(Kind::CodeD)) {
        let hint = from.unwrap_or(if trimmed.contains(',') {
            Kind::CodeD
        } else {
            Kind::CodeB
        });
        if hint == Kind::CodeD {
            let degrees: Vec<usize> = trimmed
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| {
                    Failure::Usage(format!("cannot parse {trimmed:?} as a degree list"))
                })?;
            return Ok(match check_tri_code(&degrees) {
                Ok(()) => Ok(vec![format!("triangulation code of n = {}", degrees.len())]),
                Err(e) => Err((e.to_string(), None)),
            });
        }
        let bits: Vec<u8> = trimmed
            .chars()
            .filter(|&c| c != '|')
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Failure::Usage(format!(
                    "unexpected character {c:?} in code"
                ))),
            })
            .collect::<Result<_, _>>()?;
        if let Err(e) = check_ballot(&bits) {
            return Ok(Err((e.to_string(), None)));
        }
        let code = MatchingCode::new(bits).expect("checked ballot");
        return Ok(check_colors(decode_matching(&code), k));
    }
    match Object::parse(trimmed, from) {
        Err(e) if e.is_syntax() => Err(Failure::Usage(e.to_string())),
        Err(EnvelopeError::Matching(matchtile::matching::MatchingError::Bichromatic {
            edge,
            k,
        })) => Ok(Err((format!("not a {k}-colored matching"), Some(edge)))),
        Err(e) => Ok(Err((e.to_string(), None))),
        Ok(obj) => {
            let k = k.or_else(|| own_k(&obj));
            Ok(match &obj {
                Object::Matching(m, _) => check_colors(m.clone(), k),
                Object::Diagram(d) => check_colors(d.pairing().clone(), k),
                other => Ok(vec![format!("valid {}", other.kind())]),
            })
        }
    }
}

fn check_colors(m: Matching, k: Option<usize>) -> Verdict {
    let Some(k) = k else {
        return Ok(vec![format!("plane perfect matching, n = {}", m.n())]);
    };
    if !m.n().is_multiple_of(k) {
        return Err((format!("{k} colors do not divide n = {}", m.n()), None));
    }
    let code = encode_matching(&m);
    let blocks = has_valid_blocks(&code, k).expect("k divides n");
    match find_bichromatic_witness(&m, k) {
        None => Ok(vec![format!(
            "{k}-colored matching, code {}",
            code.display_blocks(k)
        )]),
        Some(edge) if !blocks => Err((
            format!("block structure violated in {}", code.display_blocks(k)),
            Some(edge),
        )),
        Some(edge) => Err((format!("not a {k}-colored matching"), Some(edge))),
    }
}

fn cmd_validate(args: ValidateArgs) -> Result<(), Failure> {
    let text = read_input(&args.io.input)?;
    let k = color_count(args.k, args.t)?;
    let report = validate(&text, args.from, k)?;
    let rendered = match (&report, args.format) {
        (Ok(notes), Format::Json) => {
            serde_json::json!({ "valid": true, "notes": notes }).to_string()
        }
        (Err((reason, witness)), Format::Json) => {
            serde_json::json!({ "valid": false, "reason": reason, "witness": witness }).to_string()
        }
        (Ok(notes), _) => format!("valid: {}", notes.join("; ")),
        (Err((reason, None)), _) => format!("invalid: {reason}"),
        (Err((reason, Some((a, b)))), _) => format!("invalid: {reason}\nwitness edge ({a}, {b})"),
    };
    write_output(args.io.output.as_ref(), &(rendered + "\n"))?;
    match report {
        Ok(_) => Ok(()),
        Err(_) => Err(Failure::Invalid(String::new())),
    }
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<(), Failure> {
    let k = color_count(args.k, args.t)?;
    let n = match (args.n, k, args.m) {
        (Some(n), _, _) => n,
        (None, Some(k), Some(m)) => k * m,
        _ => return Err(Failure::Usage("give -n, or -k/-t with -m".into())),
    };
    let usage = |e: matchtile::oracle::OracleError| Failure::Usage(e.to_string());
    let objects: Vec<Object> = match (args.kind, k) {
        (
            Kind::Matching | Kind::CodeB | Kind::CodeD | Kind::Triangulation | Kind::Tiling,
            Some(k),
        ) if k > 0 && n % k != 0 => {
            return Err(Failure::Usage(format!("k = {k} does not divide n = {n}")));
        }
        (Kind::Tiling, None) => {
            return Err(Failure::Usage("tilings need -k or -t".into()));
        }
        (Kind::Tiling, Some(k)) => enumerate_tilings(k + 2, n + 2)
            .map_err(usage)?
            .map(Object::Tiling)
            .collect(),
        (Kind::Triangulation, _) => enumerate_triangulations(n + 2)
            .map_err(usage)?
            .map(Object::Triangulation)
            .collect(),
        (Kind::Diagram, _) => return Err(Failure::Usage("use `relations` for diagrams".into())),
        (kind, Some(k)) => enumerate_colored_matchings(k, n / k)
            .map_err(usage)?
            .map(|cm| convert(&Object::colored(cm), kind, Some(k)))
            .collect::<Result<_, _>>()?,
        (kind, None) => enumerate_matchings(n)
            .map_err(usage)?
            .map(|m| convert(&Object::Matching(m, None), kind, None))
            .collect::<Result<_, _>>()?,
    };
    let mut out = String::new();
    for obj in &objects {
        out.push_str(&emit(obj, args.format, k));
        out.push('\n');
    }
    write_output(args.output.as_ref(), &out)?;
    Ok(())
}

fn cmd_count(args: CountArgs) -> Result<(), Failure> {
    let mut out = String::new();
    let mut agree = true;
    if let Some(n) = args.n {
        out.push_str("n\tcatalan\tmatchings\ttriangulations\n");
        for n in 1..=n {
            let usage = |e: matchtile::oracle::OracleError| Failure::Usage(e.to_string());
            let matchings = enumerate_matchings(n).map_err(usage)?.count();
            let triangulations = enumerate_triangulations(n + 2).map_err(usage)?.count();
            let formula = catalan(n as u64);
            agree &= formula == matchings.into() && formula == triangulations.into();
            out.push_str(&format!("{n}\t{formula}\t{matchings}\t{triangulations}\n"));
        }
    } else {
        let pairs = match (args.k, args.m) {
            (Some(k), Some(m)) => vec![(k, m)],
            (None, None) => vec![(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)],
            _ => return Err(Failure::Usage("give both -k and -m".into())),
        };
        let table = CountTable::build(&pairs, &EnumLimits::default())
            .map_err(|e| Failure::Usage(e.to_string()))?;
        agree = table.all_agree();
        out.push_str(&table.to_string());
    }
    write_output(args.output.as_ref(), &out)?;
    if agree {
        Ok(())
    } else {
        Err(Failure::Invalid(
            "enumerated counts disagree with the formula".into(),
        ))
    }
}

fn cmd_relations(args: RelationsArgs) -> Result<(), Failure> {
    let family = match (args.n, args.m, args.k) {
        (Some(n), None, None) => Some(Family::TemperleyLieb { n }),
        (None, Some(m), Some(k)) if m > 0 && k > 0 => Some(Family::FussCatalan { m, k }),
        (None, None, None) => None,
        _ => return Err(Failure::Usage("give -n, or both -m and -k".into())),
    };
    if let Some(word) = &args.word {
        let family = family.ok_or_else(|| Failure::Usage("a word needs -n or -m/-k".into()))?;
        let word: Word = word
            .parse()
            .map_err(|e: matchtile::algebra::AlgebraError| Failure::Usage(e.to_string()))?;
        let (d, loops) = evaluate(family, &word).map_err(|e| Failure::Usage(e.to_string()))?;
        let obj = Object::Diagram(d);
        let body = match args.format {
            Format::Json => serde_json::json!({
                "word": word.to_string(),
                "loops": loops,
                "diagram": serde_json::from_str::<serde_json::Value>(&obj.to_json()).expect("valid json"),
            })
            .to_string(),
            Format::Text => format!("{word} = {} with {loops} loop(s)", obj.to_json()),
            Format::Svg => render_object(&obj, family_k(family), &format!("{word}")),
        };
        write_output(args.output.as_ref(), &(body + "\n"))?;
        return Ok(());
    }
    let mut checks: Vec<(String, RelationCheck)> = Vec::new();
    let mut push = |label: String, list: Vec<RelationCheck>| {
        checks.extend(list.into_iter().map(|c| (label.clone(), c)));
    };
    let families = match family {
        Some(f) => vec![f],
        None => (2..=6)
            .map(|n| Family::TemperleyLieb { n })
            .chain([(2, 2), (2, 3), (3, 2)].map(|(m, k)| Family::FussCatalan { m, k }))
            .collect(),
    };
    for f in families {
        match f {
            Family::TemperleyLieb { n } => push(format!("TL_{n}"), tl_relations(n)),
            Family::FussCatalan { m, k } if args.two_factor => {
                push(format!("FC(m={m},k={k})"), fc_cubic_two_factor(m, k))
            }
            Family::FussCatalan { m, k } => push(format!("FC(m={m},k={k})"), fc_relations(m, k)),
        }
    }
    let failing = checks.iter().filter(|(_, c)| !c.holds).count();
    let body = match args.format {
        Format::Json => {
            serde_json::Value::Array(
                checks
                    .iter()
                    .map(|(label, c)| {
                        serde_json::json!({
                            "algebra": label,
                            "relation": c.relation.name(),
                            "lhs": c.lhs.to_string(),
                            "rhs": c.rhs.to_string(),
                            "holds": c.holds,
                        })
                    })
                    .collect(),
            )
            .to_string()
                + "\n"
        }
        _ => {
            let mut s: String = checks
                .iter()
                .map(|(label, c)| format!("{label} {c}\n"))
                .collect();
            s.push_str(&format!("{} checked, {failing} failing\n", checks.len()));
            s
        }
    };
    write_output(args.output.as_ref(), &body)?;
    if failing == 0 {
        Ok(())
    } else {
        Err(Failure::Invalid(String::new()))
    }
}

fn family_k(f: Family) -> Option<usize> {
    match f {
        Family::TemperleyLieb { .. } => None,
        Family::FussCatalan { k, .. } => Some(k),
    }
}

fn cmd_render(args: RenderArgs) -> Result<(), Failure> {
    let text = read_input(&args.io.input)?;
    let obj = Object::parse(&text, args.from).map_err(from_envelope)?;
    let k = match args.k {
        Some(0) => return Err(Failure::Usage("-k must be positive".into())),
        Some(k) => Some(k),
        None => own_k(&obj).filter(|_| !matches!(obj, Object::Tiling(_))),
    };
    let svg = render_object(&obj, k, &obj.to_text(None));
    write_output(args.io.output.as_ref(), &svg)?;
    Ok(())
}

fn cmd_bench(args: BenchArgs) -> Result<(), Failure> {
    if args.k == 0 {
        return Err(Failure::Usage("-k must be positive".into()));
    }
    if let Some(&n) = args.n.iter().find(|&&n| n < args.k) {
        return Err(Failure::Usage(format!(
            "size {n} is smaller than k = {}",
            args.k
        )));
    }
    let rows = run_bench(&BenchConfig {
        sizes: args.n.clone(),
        k: args.k,
        repetitions: args.reps,
        seed: args.seed,
    });
    let body = match args.format {
        Format::Json => {
            serde_json::json!({
                "seed": args.seed,
                "k": args.k,
                "repetitions": args.reps,
                "rows": rows.iter().map(|r| serde_json::json!({
                    "n": r.n,
                    "to_tiling_ms": r.to_tiling.as_secs_f64() * 1e3,
                    "to_matching_ms": r.to_matching.as_secs_f64() * 1e3,
                })).collect::<Vec<_>>(),
            })
            .to_string()
                + "\n"
        }
        _ => {
            let mut s = format!(
                "# seed {} k {} repetitions {}\n",
                args.seed, args.k, args.reps
            );
            s.push_str("n\tk\tto_tiling_ms\tto_matching_ms\n");
            for r in &rows {
                s.push_str(&format!(
                    "{}\t{}\t{:.3}\t{:.3}\n",
                    r.n,
                    r.k,
                    r.to_tiling.as_secs_f64() * 1e3,
                    r.to_matching.as_secs_f64() * 1e3
                ));
            }
            s
        }
    };
    write_output(args.output.as_ref(), &body)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Convert(a) => cmd_convert(a),
        Command::Validate(a) => cmd_validate(a),
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Count(a) => cmd_count(a),
        Command::Relations(a) => cmd_relations(a),
        Command::Render(a) => cmd_render(a),
        Command::Bench(a) => cmd_bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            if !msg.is_empty() {
                eprintln!("invalid: {msg}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

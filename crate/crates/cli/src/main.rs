mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use skewpoly::bch::{self, Bch1Spec, Bch2Spec};
use skewpoly::codes::{enumerate_right_divisors, DistanceStrategy, Modulus, SkewCyclicCode};
use skewpoly::field::{presets, FieldConfig, FieldSpec};
use skewpoly::roots::{minimal_polynomial, rank, vanishing_set, vanishing_set_in, AlgebraicSet};
use skewpoly::{CancelToken, Error, Fe, Field, FieldEmbedding, SkewRing};

use report::Report;

#[derive(Parser)]
#[command(
    name = "skewpoly",
    version,
    about = "Skew polynomials over finite fields and skew-cyclic codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct FieldArgs {
    /// Built-in field: F2, F3, F4, F8, F9, F16, F27, F2_6, F2_12.
    #[arg(long, conflicts_with = "config", required_unless_present = "config")]
    preset: Option<String>,
    /// Field block file with keys p, e, d, modpoly, primitive.
    #[arg(long)]
    config: Option<PathBuf>,
    /// σ is the p^e-Frobenius; overrides the config file.
    #[arg(long)]
    e: Option<u32>,
    /// Use σ = id.
    #[arg(long)]
    commutative: bool,
    /// key=value output.
    #[arg(long)]
    machine: bool,
}

#[derive(Args, Clone)]
struct ExtArgs {
    /// Extension field preset for roots.
    #[arg(long)]
    ext: Option<String>,
    /// The base generator maps to a^IMAGE in the extension (default: the
    /// built-in F2_6 -> F2_12 embedding, otherwise the first root found).
    #[arg(long)]
    image: Option<i64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    Auto,
    Columns,
    Messages,
}

impl From<Strategy> for DistanceStrategy {
    fn from(s: Strategy) -> Self {
        match s {
            Strategy::Auto => DistanceStrategy::Auto,
            Strategy::Columns => DistanceStrategy::Columns,
            Strategy::Messages => DistanceStrategy::Messages,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Field parameters and the automorphism σ.
    FieldInfo {
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Monic right divisors of a monic polynomial.
    Divisors {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        count_only: bool,
    },
    /// The skew-cyclic code generated by g modulo f.
    Code {
        #[command(flatten)]
        field: FieldArgs,
        /// Monic modulus f of degree n.
        #[arg(long)]
        modulus: String,
        /// Monic right divisor g of f.
        #[arg(long)]
        generator: String,
        #[arg(long)]
        distance: bool,
        #[arg(long)]
        dual: bool,
        #[arg(long)]
        check_poly: bool,
    },
    /// Dual of a skew-constacyclic code.
    Dual {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        modulus: String,
        #[arg(long)]
        generator: String,
    },
    /// Exact minimum distance of a skew-cyclic code.
    Distance {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        modulus: String,
        #[arg(long)]
        generator: String,
        #[arg(long, value_enum, default_value = "auto")]
        strategy: Strategy,
    },
    /// Skew-BCH code of the first kind.
    Bch1 {
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        ext: ExtArgs,
        /// α in the extension, e.g. `a`.
        #[arg(long, default_value = "a")]
        alpha: String,
        #[arg(long, default_value_t = 0)]
        b: u64,
        #[arg(long, default_value_t = 1)]
        t1: u64,
        #[arg(long, default_value_t = 1)]
        t2: u64,
        #[arg(long)]
        delta: u64,
        #[arg(long, default_value_t = 0)]
        nu: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        verify_distance: bool,
    },
    /// Skew-BCH code of the second kind, length m times the extension degree.
    Bch2 {
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        ext: ExtArgs,
        /// Normal element α of the extension (default: the first one found).
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long, default_value_t = 0)]
        b: u64,
        #[arg(long, default_value_t = 1)]
        t1: u64,
        #[arg(long, default_value_t = 1)]
        t2: u64,
        #[arg(long)]
        delta: u64,
        #[arg(long, default_value_t = 0)]
        nu: u64,
        #[arg(long)]
        verify_distance: bool,
    },
    /// Evaluation code of skew polynomials of degree < k at the points.
    EvalCode {
        #[command(flatten)]
        field: FieldArgs,
        /// Comma-separated field elements.
        #[arg(long)]
        points: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        distance: bool,
    },
    /// Minimal polynomial of a point set.
    Minpoly {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        points: String,
    },
    /// Right roots of a polynomial, optionally in an extension.
    Vanish {
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        ext: ExtArgs,
        #[arg(long)]
        poly: String,
    },
}

const EXIT_ERROR: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_GUARD: u8 = 3;
const EXIT_CONDITION: u8 = 4;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_)
        | Error::InvalidField(_)
        | Error::InvalidAutomorphism(_)
        | Error::InvalidEmbedding(_) => EXIT_PARSE,
        Error::GuardExceeded { .. } => EXIT_GUARD,
        Error::ConditionViolated(_) | Error::RankDeficientPoints => EXIT_CONDITION,
        _ => EXIT_ERROR,
    }
}

fn spec_by_name(name: &str) -> Result<FieldSpec, Error> {
    presets::by_name(name).ok_or_else(|| {
        Error::Parse(format!(
            "unknown preset `{name}` (known: {})",
            presets::NAMES.join(", ")
        ))
    })
}

fn load_ring(args: &FieldArgs) -> Result<SkewRing, Error> {
    let (spec, e) = match (&args.preset, &args.config) {
        (Some(name), _) => (spec_by_name(name)?, 1),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|err| Error::Parse(format!("cannot read {}: {err}", path.display())))?;
            let cfg = FieldConfig::parse(&text)?;
            (cfg.spec, cfg.e)
        }
        (None, None) => return Err(Error::Parse("need --preset or --config".into())),
    };
    let field = Field::new(spec);
    if args.commutative {
        return Ok(SkewRing::commutative(&field));
    }
    SkewRing::new(&field, args.e.unwrap_or(e))
}

fn load_embedding(ring: &SkewRing, ext: &ExtArgs) -> Result<FieldEmbedding, Error> {
    let name = ext
        .ext
        .as_deref()
        .ok_or_else(|| Error::Parse("need --ext".into()))?;
    let target = Field::new(spec_by_name(name)?);
    let source = ring.field();
    match ext.image {
        Some(k) => FieldEmbedding::with_image(source, &target, target.pow(target.generator(), k)),
        None if source.spec() == &presets::f2_6() && target.spec() == &presets::f2_12() => {
            Ok(presets::f2_6_in_f2_12())
        }
        None => FieldEmbedding::find(source, &target),
    }
}

/// Splits on commas outside parentheses.
fn split_elems(s: &str) -> Vec<&str> {
    let (mut depth, mut start, mut out) = (0i32, 0, Vec::new());
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out.into_iter().filter(|t| !t.is_empty()).collect()
}

fn parse_points(field: &Field, s: &str) -> Result<Vec<Fe>, Error> {
    split_elems(s)
        .into_iter()
        .map(|t| field.parse_elem(t))
        .collect()
}

fn code_from(ring: &SkewRing, modulus: &str, generator: &str) -> Result<SkewCyclicCode, Error> {
    let f = ring.parse(modulus)?;
    let g = ring.parse(generator)?;
    SkewCyclicCode::new(&Modulus::new(&f)?, &g)
}

fn ring_header(r: &mut Report, ring: &SkewRing) {
    r.kv("p", ring.field().p());
    r.kv("d", ring.field().degree());
    r.kv("q", ring.q());
    r.kv("m", ring.m());
}

fn code_report(r: &mut Report, code: &SkewCyclicCode) -> Result<(), Error> {
    r.poly("modulus", code.modulus().poly());
    r.poly("generator", code.generator());
    r.kv("n", code.n());
    r.kv("k", code.k());
    r.matrix("circulant", &code.circulant()?);
    r.matrix("generator_matrix", code.generator_matrix());
    Ok(())
}

fn distance_report(
    r: &mut Report,
    code: &SkewCyclicCode,
    strategy: DistanceStrategy,
) -> Result<(), Error> {
    if code.k() == 0 {
        r.kv("distance", "undefined (zero code)");
        return Ok(());
    }
    let d = code
        .linear_code()
        .min_distance_with(strategy, &CancelToken::new())?;
    r.kv("distance", d);
    r.kv("mds", d == code.n() - code.k() + 1);
    Ok(())
}

fn dual_report(r: &mut Report, code: &SkewCyclicCode) -> Result<(), Error> {
    let dual = code.dual()?;
    let f = code.ring().field();
    r.poly("h", &dual.h);
    r.poly("h_circ", &dual.h_circ);
    r.elem(
        "dual.constant",
        f,
        dual.code
            .modulus()
            .constant()
            .expect("dual modulus is constacyclic"),
    );
    r.poly("dual.generator", dual.code.generator());
    r.kv("dual.k", dual.code.k());
    r.matrix("parity_check", &code.parity_check_matrix()?);
    Ok(())
}

fn run(command: Command) -> Result<String, Error> {
    match command {
        Command::FieldInfo { field } => {
            let ring = load_ring(&field)?;
            let mut r = Report::new(field.machine);
            ring_header(&mut r, &ring);
            let f = ring.field();
            r.kv("size", f.size());
            let modpoly: Vec<String> = f.spec().modpoly().iter().map(|c| c.to_string()).collect();
            r.kv("modpoly", modpoly.join(","));
            r.kv("primitive", f.spec().is_primitive());
            r.elem("generator", f, f.generator());
            r.kv(
                "sigma",
                if ring.is_commutative() {
                    "id".to_string()
                } else {
                    format!("a -> a^{}", ring.q())
                },
            );
            r.kv("fixed_field_size", ring.aut().fixed_field().len());
            Ok(r.into_string())
        }
        Command::Divisors {
            field,
            poly,
            degree,
            count_only,
        } => {
            let ring = load_ring(&field)?;
            let f = ring.parse(&poly)?;
            let list = enumerate_right_divisors(&f, degree)?;
            let mut r = Report::new(field.machine);
            r.poly("poly", &f);
            for (d, divs) in list.by_degree() {
                r.kv(&format!("degree.{d}.count"), divs.len());
                if !count_only {
                    for (i, g) in divs.iter().enumerate() {
                        r.poly(&format!("degree.{d}.{i}"), g);
                    }
                }
            }
            r.kv("total", list.total());
            r.kv("nontrivial", list.nontrivial());
            Ok(r.into_string())
        }
        Command::Code {
            field,
            modulus,
            generator,
            distance,
            dual,
            check_poly,
        } => {
            let ring = load_ring(&field)?;
            let code = code_from(&ring, &modulus, &generator)?;
            let mut r = Report::new(field.machine);
            code_report(&mut r, &code)?;
            if distance {
                distance_report(&mut r, &code, DistanceStrategy::Auto)?;
            }
            if dual {
                dual_report(&mut r, &code)?;
            }
            if check_poly {
                let (h, c) = code.check_polynomial()?;
                r.poly("check_poly", &h);
                r.elem("check_constant", ring.field(), c);
            }
            Ok(r.into_string())
        }
        Command::Dual {
            field,
            modulus,
            generator,
        } => {
            let ring = load_ring(&field)?;
            let code = code_from(&ring, &modulus, &generator)?;
            let mut r = Report::new(field.machine);
            r.poly("generator", code.generator());
            r.kv("n", code.n());
            r.kv("k", code.k());
            dual_report(&mut r, &code)?;
            Ok(r.into_string())
        }
        Command::Distance {
            field,
            modulus,
            generator,
            strategy,
        } => {
            let ring = load_ring(&field)?;
            let code = code_from(&ring, &modulus, &generator)?;
            let mut r = Report::new(field.machine);
            r.kv("n", code.n());
            r.kv("k", code.k());
            distance_report(&mut r, &code, strategy.into())?;
            Ok(r.into_string())
        }
        Command::Bch1 {
            field,
            ext,
            alpha,
            b,
            t1,
            t2,
            delta,
            nu,
            n,
            verify_distance,
        } => {
            let ring = load_ring(&field)?;
            let emb = load_embedding(&ring, &ext)?;
            let alpha = emb.target().parse_elem(&alpha)?;
            let spec = Bch1Spec {
                ring,
                emb,
                alpha,
                b,
                t1,
                t2,
                delta,
                nu,
                n,
            };
            let gen = bch::bch1_generator(&spec)?;
            let dc = bch::bch1_code(&spec)?;
            let mut r = Report::new(field.machine);
            r.poly("generator", &gen.g);
            r.kv("designed_distance", gen.designed_distance);
            r.kv("exponents", format!("{:?}", gen.exponents));
            r.elems("roots", spec.emb.target(), gen.roots.elements());
            r.poly("modulus", dc.code.modulus().poly());
            r.kv("n", dc.code.n());
            r.kv("k", dc.code.k());
            if verify_distance {
                distance_report(&mut r, &dc.code, DistanceStrategy::Auto)?;
            }
            Ok(r.into_string())
        }
        Command::Bch2 {
            field,
            ext,
            alpha,
            b,
            t1,
            t2,
            delta,
            nu,
            verify_distance,
        } => {
            let ring = load_ring(&field)?;
            let emb = load_embedding(&ring, &ext)?;
            let alpha = match alpha {
                Some(s) => emb.target().parse_elem(&s)?,
                None => bch::find_normal_element(ring.extend(&emb)?.aut())?,
            };
            let spec = Bch2Spec {
                ring,
                emb,
                alpha,
                b,
                t1,
                t2,
                delta,
                nu,
            };
            let gen = bch::bch2_generator(&spec)?;
            let dc = bch::bch2_code(&spec)?;
            let l = spec.emb.target();
            let mut r = Report::new(field.machine);
            r.elem("alpha", l, spec.alpha);
            r.elem("beta", l, gen.beta);
            r.kv("s", format!("{:?}", gen.s));
            r.kv("s_bar", format!("{:?}", gen.s_bar));
            r.poly("generator", &gen.g);
            r.kv("designed_distance", gen.designed_distance);
            r.poly("modulus", dc.code.modulus().poly());
            r.kv("n", dc.code.n());
            r.kv("k", dc.code.k());
            if verify_distance {
                distance_report(&mut r, &dc.code, DistanceStrategy::Auto)?;
            }
            Ok(r.into_string())
        }
        Command::EvalCode {
            field,
            points,
            k,
            distance,
        } => {
            let ring = load_ring(&field)?;
            let pts = parse_points(ring.field(), &points)?;
            let ev = bch::evaluation_code(&ring, &pts, k)?;
            let mut r = Report::new(field.machine);
            r.kv("n", pts.len());
            r.kv("k", ev.code.k());
            r.matrix("generator_matrix", &ev.generator);
            if distance {
                let d = ev.code.min_distance()?;
                r.kv("distance", d);
                r.kv("mds", d == pts.len() - k + 1);
            }
            Ok(r.into_string())
        }
        Command::Minpoly { field, points } => {
            let ring = load_ring(&field)?;
            let set = AlgebraicSet::new(ring.field(), parse_points(ring.field(), &points)?)?;
            let m = minimal_polynomial(&ring, &set)?;
            let mut r = Report::new(field.machine);
            r.poly("minpoly", &m);
            r.kv("rank", rank(&ring, &set)?);
            r.kv("independent", rank(&ring, &set)? == set.len());
            Ok(r.into_string())
        }
        Command::Vanish { field, ext, poly } => {
            let ring = load_ring(&field)?;
            let f = ring.parse(&poly)?;
            let mut r = Report::new(field.machine);
            let (set, target) = match ext.ext {
                Some(_) => {
                    let emb = load_embedding(&ring, &ext)?;
                    (vanishing_set_in(&f, &emb)?, emb.target().clone())
                }
                None => (vanishing_set(&f)?, ring.field().clone()),
            };
            r.poly("poly", &f);
            r.kv("count", set.len());
            r.elems("roots", &target, set.elements());
            Ok(r.into_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

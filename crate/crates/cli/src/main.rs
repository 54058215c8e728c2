mod point;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use macdonald::clustering::{
    admissible_specializations, family_at, locus_factor, specialize, RectSpec,
};
use macdonald::combinatorics::{parse_composition, parse_partition};
use macdonald::exact::{Field, Params, RatFunc, SpecMap, SpecRF, ToJson};
use macdonald::macdonald::{
    binom_nonsym, binom_sym, norm_factor, okounkov_expand, Family, MacCache, Norm,
};
use macdonald::poly::MultiPoly;
use macdonald::report::Check;
use macdonald::suites::{run_suite, SuiteOptions};
use macdonald::AlgebraError;

use point::parse_point;

/// Exact Macdonald polynomials and clustering checks.
#[derive(Parser)]
#[command(name = "macdonald", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print E_v, M_v, P_λ or MS_λ.
    Compute(PolyArgs),
    /// Substitute a point into a polynomial.
    Eval {
        #[command(flatten)]
        poly: PolyArgs,
        /// Comma-separated entries, e.g. "x1,x2,y*t,y".
        #[arg(long)]
        at: String,
    },
    /// Interpolation binomial coefficients.
    Binom {
        #[arg(long)]
        upper: String,
        #[arg(long)]
        lower: String,
        /// Symmetric binomial (λ μ) instead of [u v].
        #[arg(long)]
        symmetric: bool,
        /// Evaluate at (1/q, 1/t).
        #[arg(long)]
        inverted: bool,
        #[arg(long)]
        spec: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Expand MS_λ in the P basis.
    Expand {
        #[arg(long)]
        index: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List admissible specializations for an m×k rectangle in N variables.
    Specializations {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k: usize,
        #[arg(long = "N")]
        n: usize,
        #[arg(long)]
        nonsymmetric: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct PolyArgs {
    #[arg(long)]
    family: String,
    /// Comma-separated index; its length fixes N.
    #[arg(long)]
    index: String,
    #[arg(long, default_value = "monic")]
    norm: String,
    /// e.g. "q=z^3,t=z^-1" or "q=z,t=w[3]*z^-1".
    #[arg(long)]
    spec: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: String,
    #[arg(long = "N")]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long, value_delimiter = ',')]
    beta: Option<Vec<usize>>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Random inputs per relation (hecke).
    #[arg(long, default_value_t = 100)]
    count: usize,
    /// Keep wall-clock times in the report.
    #[arg(long)]
    timing: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

enum Failure {
    Usage(String),
    Pole(String),
    Other(String),
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Parse(_)
            | AlgebraError::Invalid(_)
            | AlgebraError::InvalidRect(_)
            | AlgebraError::LengthTooLarge(_) => Failure::Usage(e.to_string()),
            AlgebraError::PoleAtSpecialization { .. } | AlgebraError::PoleInGramSchmidt(_) => {
                Failure::Pole(e.to_string())
            }
            _ => Failure::Other(e.to_string()),
        }
    }
}

/// Buffered output plus the exit status of a successful run.
struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.cmd {
        Cmd::Compute(a) => compute(&a),
        Cmd::Eval { poly, at } => eval(&poly, &at),
        Cmd::Binom {
            upper,
            lower,
            symmetric,
            inverted,
            spec,
            format,
        } => binom(&upper, &lower, symmetric, inverted, spec.as_deref(), format),
        Cmd::Expand { index, format } => expand(&index, format),
        Cmd::Specializations {
            m,
            k,
            n,
            nonsymmetric,
            format,
        } => specializations(m, k, n, nonsymmetric, format),
        Cmd::Verify(a) => verify(&a),
    };
    match res {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(out.code)
        }
        Err(f) => {
            let (msg, code) = match f {
                Failure::Usage(m) => (m, 2),
                Failure::Pole(m) => (m, 3),
                Failure::Other(m) => (m, 1),
            };
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn parse_index(fam: Family, s: &str) -> Result<Vec<u32>, AlgebraError> {
    if fam.symmetric() {
        parse_partition(s)
    } else {
        parse_composition(s)
    }
}

/// The requested polynomial, generic or specialized.
enum Built {
    Generic(MultiPoly<RatFunc>),
    Spec(MultiPoly<SpecRF>, SpecMap),
}

fn build(a: &PolyArgs) -> Result<Built, AlgebraError> {
    let fam: Family = a.family.parse()?;
    let norm: Norm = a.norm.parse()?;
    let index = parse_index(fam, &a.index)?;
    let spec = a.spec.as_deref().map(SpecMap::parse).transpose()?;
    // reject bad family/normalization pairs before any construction
    norm_factor(fam, norm, &index, &Params::generic())?;
    let mut generic = MacCache::new(Params::generic());
    let Some(map) = spec else {
        return Ok(Built::Generic(generic.family(fam, norm, &index)?));
    };
    let direct = family_at(fam, &index, &map, &mut generic).and_then(|f| {
        let s = norm_factor(fam, norm, &index, &Params::from_map(&map))?;
        Ok(f.scale(&s))
    });
    let f = match direct {
        Err(AlgebraError::PoleAtSpecialization { .. }) => {
            specialize(&generic.family(fam, norm, &index)?, &map)?
        }
        other => other?,
    };
    Ok(Built::Spec(f, map))
}

fn poly_out<F: Field + ToJson>(
    f: &MultiPoly<F>,
    names: Option<&[String]>,
    format: Format,
) -> String {
    match (format, names) {
        (Format::Text, Some(n)) => format!("{}\n", f.to_text_named(n)),
        (Format::Text, None) => format!("{}\n", f.to_text()),
        (Format::Json, Some(n)) => format!("{}\n", json!({"vars": n, "poly": f.to_json()})),
        (Format::Json, None) => format!("{}\n", f.to_json()),
    }
}

fn compute(a: &PolyArgs) -> Result<Output, Failure> {
    let text = match build(a)? {
        Built::Generic(f) => poly_out(&f, None, a.format),
        Built::Spec(f, _) => poly_out(&f, None, a.format),
    };
    Ok(Output::ok(text))
}

fn substitute<F: Field + ToJson>(
    f: &MultiPoly<F>,
    at: &str,
    consts: &[(&str, F)],
    format: Format,
) -> Result<String, AlgebraError> {
    let pt = parse_point(at, consts)?;
    if pt.images.len() != f.nvars() {
        return Err(AlgebraError::Parse(format!(
            "point has {} entries but the polynomial has {} variables",
            pt.images.len(),
            f.nvars()
        )));
    }
    let v = f.substitute(&pt.images, pt.names.len());
    Ok(poly_out(&v, Some(&pt.names), format))
}

fn eval(a: &PolyArgs, at: &str) -> Result<Output, Failure> {
    // validate the point before constructing anything
    let p = Params::generic();
    let mut consts = vec![("q", p.q), ("t", p.t)];
    if a.spec.is_some() {
        consts.push(("z", RatFunc::one()));
    }
    parse_point(at, &consts)?;
    let text = match build(a)? {
        Built::Generic(f) => {
            let p = Params::generic();
            substitute(&f, at, &[("q", p.q), ("t", p.t)], a.format)?
        }
        Built::Spec(f, map) => {
            let z = SpecRF::var();
            substitute(
                &f,
                at,
                &[("q", map.q()), ("t", map.t()), ("z", z)],
                a.format,
            )?
        }
    };
    Ok(Output::ok(text))
}

fn scalar_out<F: Field + ToJson>(c: &F, format: Format) -> String {
    match format {
        Format::Text => format!("{c}\n"),
        Format::Json => format!("{}\n", c.to_json()),
    }
}

fn binom(
    upper: &str,
    lower: &str,
    symmetric: bool,
    inverted: bool,
    spec: Option<&str>,
    format: Format,
) -> Result<Output, Failure> {
    let parse = if symmetric {
        parse_partition
    } else {
        parse_composition
    };
    let u = parse(upper)?;
    let v = parse(lower)?;
    if u.len() != v.len() {
        return Err(Failure::Usage(format!(
            "--upper has {} parts but --lower has {}",
            u.len(),
            v.len()
        )));
    }
    let map = spec.map(SpecMap::parse).transpose()?;
    let p = if inverted {
        Params::generic().inverted()
    } else {
        Params::generic()
    };
    let mut cache = MacCache::new(p);
    let b = if symmetric {
        binom_sym(&u, &v, &mut cache)?
    } else {
        binom_nonsym(&u, &v, &mut cache)?
    };
    let text = match map {
        Some(m) => scalar_out(&m.apply(&b)?, format),
        None => scalar_out(&b, format),
    };
    Ok(Output::ok(text))
}

fn expand(index: &str, format: Format) -> Result<Output, Failure> {
    let lam = parse_partition(index)?;
    let mut cache = MacCache::new(Params::generic());
    let mut inv = MacCache::new(Params::generic().inverted());
    let terms = okounkov_expand(&lam, &mut cache, &mut inv)?;
    let text = match format {
        Format::Text => terms
            .iter()
            .map(|(mu, c)| format!("P[{}]: {c}\n", join(mu)))
            .collect(),
        Format::Json => {
            let rows: Vec<_> = terms
                .iter()
                .map(|(mu, c)| json!({"index": mu, "coeff": c.to_json()}))
                .collect();
            format!("{}\n", json!({"MS": lam, "terms": rows}))
        }
    };
    Ok(Output::ok(text))
}

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn specializations(
    m: u32,
    k: usize,
    n: usize,
    nonsymmetric: bool,
    format: Format,
) -> Result<Output, Failure> {
    let spec = RectSpec::new(m, k, n, !nonsymmetric)?;
    let maps: Vec<String> = admissible_specializations(&spec)
        .iter()
        .map(ToString::to_string)
        .collect();
    let locus = locus_factor(&spec).to_string();
    let text = match format {
        Format::Text => {
            let mut s = format!("locus: {locus}\n");
            for mp in &maps {
                s.push_str(mp);
                s.push('\n');
            }
            s
        }
        Format::Json => format!("{}\n", json!({"locus": locus, "maps": maps})),
    };
    Ok(Output::ok(text))
}

fn verify(a: &VerifyArgs) -> Result<Output, Failure> {
    let opts = SuiteOptions {
        n: a.n,
        k: a.k,
        m: a.m,
        beta: a.beta.clone(),
        seed: a.seed,
        count: a.count,
    };
    let mut rows = run_suite(&a.suite, &opts, a.jobs)?;
    if !a.timing {
        for r in &mut rows {
            r.elapsed_ms = 0;
        }
    }
    let mut text = String::new();
    for r in &rows {
        text.push_str(&row_out(r, a.format));
        text.push('\n');
    }
    // the staircase fixtures are reported, never asserted
    let failed = a.suite != "staircase-fixtures" && rows.iter().any(Check::failed);
    Ok(Output {
        text,
        code: u8::from(failed),
    })
}

fn row_out(r: &Check, format: Format) -> String {
    match format {
        Format::Json => r.to_json_line(),
        Format::Text => {
            let mut s = format!("{}\t{}\t{}", r.status, r.suite, r.case);
            if let Some(w) = &r.witness {
                s.push('\t');
                s.push_str(w);
            }
            s
        }
    }
}

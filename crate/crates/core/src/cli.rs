//! The `comlie` command line.
//!
//! Exit codes: 0 success, 1 a verification check failed (or an I/O or
//! internal error), 2 usage error, 3 a size cap was exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cache::{CacheKey, SeriesCache, CACHE_DIR_ENV};
use crate::error::{Error, Result};
use crate::multisym::{self, verify_free_basis, verify_power_sum_generation};
use crate::poincare::{self, Family, GroupSpec, Route};
use crate::qseries::{TruncatedSeries, DEFAULT_TRUNCATION};
use crate::repa;
use crate::report::{Check, Report};
use crate::toriposet;
use crate::{coinvariants, weylcomb::WeylElement};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "comlie",
    version,
    about = "Rational cohomology of spaces of commuting elements in U(n), SU(n) and Sp(n)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a Poincaré series.
    Series(SeriesArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Tabulate components of the torus poset of U(n), or chain classes.
    Poset(PosetArgs),
    /// List stable polynomial generators z_{a,b}.
    Catalog(CatalogArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GroupArg {
    U,
    Su,
    Sp,
}

impl From<GroupArg> for Family {
    fn from(g: GroupArg) -> Family {
        match g {
            GroupArg::U => Family::U,
            GroupArg::Su => Family::SU,
            GroupArg::Sp => Family::Sp,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Quantity {
    Ecom,
    Bcom,
    Bg,
    Stable,
}

impl Quantity {
    fn slug(self) -> &'static str {
        match self {
            Quantity::Ecom => "ecom",
            Quantity::Bcom => "bcom",
            Quantity::Bg => "bg",
            Quantity::Stable => "stable",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Oracle,
    Product,
    Basis,
    Generation,
    Fakedeg,
    Stable,
    All,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[arg(long, value_enum)]
    group: GroupArg,
    /// Required for every quantity except `stable`.
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long, value_enum)]
    what: Quantity,
    /// Highest cohomological degree. Defaults to the top degree for `ecom`
    /// and to 40 otherwise.
    #[arg(long)]
    maxdeg: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    #[arg(long, env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,
    /// Use class-weighted coinvariant characters instead of Weyl group enumeration.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: Suite,
    #[arg(long, value_enum)]
    group: GroupArg,
    #[arg(long)]
    rank: usize,
    /// Highest cohomological degree checked; each suite has its own default.
    #[arg(long)]
    maxdeg: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    #[arg(long)]
    oracle: bool,
}

#[derive(Args, Debug)]
struct PosetArgs {
    #[arg(long)]
    rank: usize,
    /// Comma-separated values i_0 < i_1 < …; lists chain classes with
    /// block counts i_r + 1 instead of components.
    #[arg(long, value_delimiter = ',')]
    ivals: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct CatalogArgs {
    #[arg(long, value_enum)]
    family: GroupArg,
    /// Highest cohomological degree 2(a+b).
    #[arg(long, default_value_t = 8)]
    maxdeg: usize,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    let result = match cli.command {
        Command::Series(a) => cmd_series(&a, out, err),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Poset(a) => cmd_poset(&a, out),
        Command::Catalog(a) => cmd_catalog(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let code = match e {
                Error::Size { .. } => EXIT_CAP,
                Error::InvalidArgument(_) => EXIT_USAGE,
                _ => EXIT_FAILED,
            };
            let _ = writeln!(err, "error: {e}");
            if code == EXIT_CAP {
                let _ = writeln!(err, "hint: rerun with --oracle to avoid Weyl group enumeration");
            }
            code
        }
    }
}

fn route(oracle: bool) -> Route {
    if oracle {
        Route::Oracle
    } else {
        Route::Enumeration
    }
}

fn route_slug(route: Route) -> &'static str {
    match route {
        Route::Enumeration => "enum",
        Route::Oracle => "oracle",
    }
}

fn group(g: GroupArg, rank: usize) -> Result<GroupSpec> {
    GroupSpec::new(g.into(), rank)
}

fn compute_series(a: &SeriesArgs, family: Family, trunc: usize) -> Result<TruncatedSeries> {
    let r = route(a.oracle);
    if a.what == Quantity::Stable {
        return Ok(poincare::stable_bcom(family, trunc));
    }
    let g = group(a.group, a.rank.expect("checked by caller"))?;
    Ok(match a.what {
        Quantity::Ecom => poincare::ecom_numerator_via(&g, r)?.truncate(trunc),
        Quantity::Bcom => poincare::bcom_series_via(&g, r)?.expand(trunc),
        Quantity::Bg => poincare::bg_series(&g).expand(trunc),
        Quantity::Stable => unreachable!(),
    })
}

fn cmd_series(a: &SeriesArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let family: Family = a.group.into();
    let rank = match (a.what, a.rank) {
        (Quantity::Stable, _) => 0,
        (_, Some(n)) => {
            group(a.group, n)?;
            n
        }
        (_, None) => return Err(Error::invalid(format!("--rank is required for --what {}", a.what.slug()))),
    };
    let top = (a.what == Quantity::Ecom).then(|| GroupSpec { family, n: rank }.top_ecom_degree());
    let trunc = a.maxdeg.or(top).unwrap_or(DEFAULT_TRUNCATION);
    let r = route(a.oracle);
    let key = CacheKey {
        family: family.slug().to_string(),
        rank,
        quantity: a.what.slug().to_string(),
        trunc,
        route: route_slug(r).to_string(),
    };

    let cache = a.cache_dir.as_ref().map(SeriesCache::new);
    let cached = match &cache {
        Some(c) => match c.load(&key) {
            Ok(s) => s,
            Err(e) => {
                writeln!(err, "warning: ignoring cache entry {}: {e}", c.path(&key).display())?;
                None
            }
        },
        None => None,
    };
    let series = match cached {
        Some(s) => s,
        None => {
            let s = compute_series(a, family, trunc)?;
            if let Some(c) = &cache {
                c.store(&key, &s)?;
            }
            s
        }
    };

    match a.format {
        Format::Text => {
            // a polynomial known in full is printed without an error term
            let exact = top.is_some_and(|t| trunc >= t);
            if exact {
                writeln!(out, "{}", series.to_poly())?;
            } else {
                writeln!(out, "{series}")?;
            }
        }
        Format::Json => {
            serde_json::to_writer(&mut *out, &key.document(&series))?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["degree", "coefficient"])?;
            for (d, c) in series.coeffs().iter().enumerate() {
                w.write_record([d.to_string(), c.to_string()])?;
            }
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}

/// A verification report plus suite-specific detail.
struct Outcome {
    report: Report,
    notes: Vec<String>,
    extra: serde_json::Map<String, Value>,
}

fn oracle_suite(g: &GroupSpec, trunc: usize, r: Route, o: &mut Outcome) -> Result<()> {
    let numerator = poincare::ecom_numerator(g)?;
    o.report.push(Check::compare_series(
        format!("oracle ecom {g}"),
        "maj sum",
        &numerator.truncate(trunc),
        "class average",
        &coinvariants::oracle_ecom(g, trunc)?,
    ));
    let bcom = poincare::bcom_series(g)?.expand(trunc);
    o.report.push(Check::compare_series(
        format!("oracle bcom {g}"),
        "maj sum / P_BG",
        &bcom,
        "class average",
        &coinvariants::oracle_bcom(g, trunc)?,
    ));
    o.report.extend(poincare::verify_duality(g, r)?);
    Ok(())
}

fn basis_suite(g: &GroupSpec, poly_degree: usize, o: &mut Outcome) -> Result<()> {
    let r = verify_free_basis(g.weyl_kind(), g.n, poly_degree)?;
    let degrees: Vec<usize> = r.degrees().iter().map(|d| 2 * d).collect();
    o.notes.push(format!(
        "{} basis elements, degrees {{{}}}",
        r.elements.len(),
        degrees.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
    ));
    let mut elements = Vec::new();
    for e in &r.elements {
        let w = match &e.element {
            WeylElement::Sym(w) => format!("{:?}", w.word()),
            WeylElement::Signed(w) => format!("{:?}", w.word()),
        };
        o.notes.push(format!("  w = {w}: degree {}, ρ({})", 2 * e.degree, e.monomial));
        elements.push(json!({"element": w, "monomial": e.monomial.to_string(), "degree": 2 * e.degree}));
    }
    o.extra.insert("basis_degrees".into(), json!(degrees));
    o.extra.insert("basis".into(), Value::Array(elements));
    o.report.extend(r.checks);
    Ok(())
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let g = group(a.group, a.rank)?;
    let r = route(a.oracle);
    let suites: Vec<Suite> = match a.suite {
        Suite::All => {
            let mut s = vec![Suite::Oracle, Suite::Product, Suite::Stable];
            if g.n <= multisym::RANK_CAP {
                s.extend([Suite::Basis, Suite::Generation]);
            }
            if g.family != Family::Sp {
                s.push(Suite::Fakedeg);
            }
            s
        }
        s => vec![s],
    };
    let mut o = Outcome {
        report: Report::default(),
        notes: Vec::new(),
        extra: serde_json::Map::new(),
    };
    for suite in suites {
        match suite {
            Suite::Oracle => oracle_suite(&g, a.maxdeg.unwrap_or(DEFAULT_TRUNCATION), r, &mut o)?,
            Suite::Product => o.report.push(poincare::verify_product_relation(
                &g,
                a.maxdeg.unwrap_or(DEFAULT_TRUNCATION),
                r,
            )?),
            Suite::Stable => {
                let default = match g.family {
                    Family::Sp => 4 * g.n,
                    _ => 2 * g.n,
                };
                o.report.extend(poincare::verify_stabilization(
                    g.family,
                    &[g.n],
                    a.maxdeg.unwrap_or(default),
                    r,
                )?);
            }
            Suite::Basis => basis_suite(&g, a.maxdeg.unwrap_or(g.top_ecom_degree()) / 2, &mut o)?,
            Suite::Generation => o.report.extend(verify_power_sum_generation(
                g.weyl_kind(),
                g.n,
                a.maxdeg.unwrap_or(12) / 2,
            )?),
            Suite::Fakedeg => {
                if g.family == Family::Sp {
                    return Err(Error::invalid("fake-degree identities are for U(n) and SU(n)"));
                }
                o.report.extend(repa::verify_fake_degree_identities(g.n)?);
            }
            Suite::All => unreachable!(),
        }
    }

    match a.format {
        Format::Text => {
            for n in &o.notes {
                writeln!(out, "{n}")?;
            }
            writeln!(out, "{}", o.report)?;
        }
        Format::Json => {
            let mut doc = json!({ "group": g.to_string(), "route": route_slug(r) });
            let obj = doc.as_object_mut().expect("object literal");
            if let Value::Object(rep) = o.report.to_json() {
                obj.extend(rep);
            }
            obj.extend(o.extra);
            serde_json::to_writer(&mut *out, &doc)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["name", "passed", "summary", "first_failure"])?;
            for c in &o.report.checks {
                w.write_record([
                    c.name.as_str(),
                    if c.passed { "true" } else { "false" },
                    c.summary.as_str(),
                    c.first_failure.as_deref().unwrap_or(""),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(if o.report.passed() { EXIT_OK } else { EXIT_FAILED })
}

fn cmd_poset(a: &PosetArgs, out: &mut dyn Write) -> Result<i32> {
    let (header, numeric, rows): (Vec<&str>, Vec<&str>, Vec<Vec<String>>) = match &a.ivals {
        None => (
            vec!["lambda", "flag_poincare", "real_dimension", "stabilizer_order"],
            vec!["real_dimension", "stabilizer_order"],
            toriposet::components(a.rank)?
                .into_iter()
                .map(|c| {
                    vec![
                        c.lambda.to_string(),
                        c.flag_poincare.display_in("q"),
                        c.real_dimension.to_string(),
                        c.stabilizer_order.to_string(),
                    ]
                })
                .collect(),
        ),
        Some(ivals) => (
            vec!["representative", "block_counts", "orbit_size"],
            vec!["orbit_size"],
            toriposet::chain_classes(a.rank, ivals)?
                .into_iter()
                .map(|c| {
                    let counts: Vec<String> = c.block_counts.iter().map(|k| k.to_string()).collect();
                    vec![c.to_string(), counts.join(","), c.orbit_size().to_string()]
                })
                .collect(),
        ),
    };
    write_table(a.format, &header, &numeric, &rows, out)?;
    Ok(EXIT_OK)
}

fn cmd_catalog(a: &CatalogArgs, out: &mut dyn Write) -> Result<i32> {
    let catalog = poincare::generator_catalog(a.family.into(), a.maxdeg);
    let rows: Vec<Vec<String>> = catalog
        .pairs
        .iter()
        .map(|&(x, y)| {
            vec![
                x.to_string(),
                y.to_string(),
                poincare::GeneratorCatalog::degree((x, y)).to_string(),
            ]
        })
        .collect();
    let header = ["a", "b", "degree"];
    write_table(a.format, &header, &header, &rows, out)?;
    Ok(EXIT_OK)
}

/// `numeric` names the columns emitted as JSON numbers.
fn write_table(
    format: Format,
    header: &[&str],
    numeric: &[&str],
    rows: &[Vec<String>],
    out: &mut dyn Write,
) -> Result<()> {
    match format {
        Format::Text => {
            let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
            for r in rows {
                for (w, cell) in widths.iter_mut().zip(r) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let line = |cells: Vec<&str>| -> String {
                cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            writeln!(out, "{}", line(header.to_vec()))?;
            for r in rows {
                writeln!(out, "{}", line(r.iter().map(String::as_str).collect()))?;
            }
        }
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let obj: serde_json::Map<String, Value> = header
                        .iter()
                        .zip(r)
                        .map(|(h, c)| {
                            let v = if numeric.contains(h) {
                                c.parse::<serde_json::Number>()
                                    .map(Value::Number)
                                    .unwrap_or_else(|_| Value::String(c.clone()))
                            } else {
                                Value::String(c.clone())
                            };
                            (h.to_string(), v)
                        })
                        .collect();
                    Value::Object(obj)
                })
                .collect();
            serde_json::to_writer(&mut *out, &items)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(header)?;
            for r in rows {
                w.write_record(r)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}


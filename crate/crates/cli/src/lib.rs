//! Command-line front end: argument parsing, command dispatch and reports.

pub mod parse;
pub mod report;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use hermite_wronskian as hw;
use hw::{Bound, IndexSet, PolyMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

pub use parse::{parse_bound, parse_pair, parse_range, parse_set, ParseSetError};
pub use report::{roots_csv, Item, Report, RootPoint, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED_CHECK: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hwron",
    version,
    about = "Exact Hermite Wronskians and their zero certificates"
)]
pub struct Cli {
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for multi-item commands (default: logical CPUs).
    #[arg(long, global = true)]
    pub par: Option<usize>,
    /// Plain diagnostics (also honoured through NO_COLOR).
    #[arg(long, global = true)]
    pub no_color: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct SetArg {
    /// Index set: comma list `1,2,5` or segment `S(p,q)`.
    #[arg(long, value_parser = parse_set)]
    pub set: IndexSet,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// A single index set.
    #[arg(long, value_parser = parse_set, conflicts_with_all = ["max_element", "max_size"])]
    pub set: Option<IndexSet>,
    /// Every non-empty subset of {1..N} ...
    #[arg(long)]
    pub max_element: Option<usize>,
    /// ... with at most this many elements (default N).
    #[arg(long)]
    pub max_size: Option<usize>,
}

impl FamilyArgs {
    fn sets(&self) -> Result<Vec<IndexSet>, String> {
        match (&self.set, self.max_element) {
            (Some(s), _) => Ok(vec![s.clone()]),
            (None, Some(n)) => Ok(IndexSet::enumerate(n, self.max_size.unwrap_or(n))),
            (None, None) => Err("give --set or --max-element".into()),
        }
    }

    fn echo(&self, inputs: &mut BTreeMap<String, Value>) {
        if let Some(s) = &self.set {
            inputs.insert("set".into(), json!(s));
        }
        if let Some(n) = self.max_element {
            inputs.insert("max_element".into(), json!(n));
            inputs.insert("max_size".into(), json!(self.max_size.unwrap_or(n)));
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Omega_F and its predicted degree.
    Omega(SetArg),
    /// Distinct real roots of Omega_F in (lo, hi] by Sturm sequences.
    Roots {
        #[command(flatten)]
        set: SetArg,
        #[arg(long, default_value = "-inf", allow_hyphen_values = true)]
        lo: String,
        #[arg(long, default_value = "inf", allow_hyphen_values = true)]
        hi: String,
    },
    /// Zero certificate of Omega_F.
    Certify(SetArg),
    /// Coprimality and simplicity certificates for segment Wronskians.
    SegmentCheck {
        #[arg(long, value_parser = parse_range)]
        p: std::ops::RangeInclusive<usize>,
        #[arg(long, value_parser = parse_range)]
        q: std::ops::RangeInclusive<usize>,
    },
    /// Duality identity between F and I(F).
    Duality(FamilyArgs),
    /// Sylvester determinant identity on Hermite Wronskian or random matrices,
    /// or the signed segment recurrence it implies.
    Sylvester {
        #[arg(long, value_parser = parse_set, conflicts_with_all = ["random", "recurrence"])]
        set: Option<IndexSet>,
        /// Row pair i0,i1 (one-based); default: all pairs.
        #[arg(long, value_parser = parse_pair)]
        rows: Option<(usize, usize)>,
        /// Column pair j0,j1 (one-based); default: all pairs.
        #[arg(long, value_parser = parse_pair)]
        cols: Option<(usize, usize)>,
        /// Number of random integer-polynomial matrices.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Check the segment recurrence over --p and --q ranges.
        #[arg(long)]
        recurrence: bool,
        #[arg(long, value_parser = parse_range, default_value = "1..6")]
        p: std::ops::RangeInclusive<usize>,
        #[arg(long, value_parser = parse_range, default_value = "1..4")]
        q: std::ops::RangeInclusive<usize>,
    },
    /// Eigen-equation of exceptional Hermite polynomials, or the segment ODE.
    Ode {
        #[arg(long, value_parser = parse_set, required_unless_present = "segment")]
        set: Option<IndexSet>,
        /// Degrees to check; default: the first 5 elements of sigma_F.
        #[arg(long, value_parser = parse_range)]
        n: Option<std::ops::RangeInclusive<usize>>,
        #[arg(long)]
        segment: bool,
        #[arg(long, value_parser = parse_range, default_value = "1..4")]
        p: std::ops::RangeInclusive<usize>,
        #[arg(long, value_parser = parse_range, default_value = "0..4")]
        q: std::ops::RangeInclusive<usize>,
    },
    /// Admissibility and its equivalence with the absence of real zeros.
    Admissible(FamilyArgs),
    /// Real-root counts of Omega_{S(n,k)} against the classical prediction.
    KarlinSzego {
        #[arg(long, value_parser = parse_range)]
        n: std::ops::RangeInclusive<usize>,
        #[arg(long, value_parser = parse_range)]
        k: std::ops::RangeInclusive<usize>,
    },
    /// Zero certificates for all subsets of {1..max-element}.
    Scan {
        #[arg(long)]
        max_element: usize,
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Float roots of Omega_F (not certified).
    RootCloud {
        #[command(flatten)]
        set: SetArg,
        /// Emit `re,im` CSV instead of JSON.
        #[arg(long)]
        csv: bool,
    },
    /// Numerical orthogonality of exceptional Hermite polynomials.
    Orthogonality {
        #[command(flatten)]
        set: SetArg,
        #[arg(long, requires = "n2")]
        n1: Option<usize>,
        #[arg(long, requires = "n1")]
        n2: Option<usize>,
        /// Check the first N pairs from sigma_F instead of one pair.
        #[arg(long, conflicts_with = "n1", default_value_t = 4)]
        pairs: usize,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
}

/// Output of a run: what goes to stdout and the exit code.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn usage(msg: impl std::fmt::Display) -> Outcome {
    Outcome {
        code: EXIT_USAGE,
        stdout: String::new(),
        stderr: format!("error: {msg}\n"),
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed().as_secs_f64())
}

/// Runs `f` over `items` on the configured pool, keeping input order.
fn fan_out<I, T, E>(
    items: Vec<I>,
    f: impl Fn(I) -> Result<T, E> + Sync + Send,
) -> Result<Vec<(T, f64)>, E>
where
    I: Send,
    T: Send,
    E: Send,
{
    items
        .into_par_iter()
        .map(|i| {
            let (r, t) = timed(|| f(i));
            r.map(|v| (v, t))
        })
        .collect()
}

fn bound_text(b: &Bound) -> String {
    match b {
        Bound::NegInfinity => "-inf".into(),
        Bound::PosInfinity => "inf".into(),
        Bound::Finite(r) => r.to_string(),
    }
}

/// First `count` pairs `(a, b)`, `a < b`, from `sigma_F`, ordered by `b` then `a`.
pub fn spectrum_pairs(set: &IndexSet, count: usize) -> Vec<(usize, usize)> {
    let head = hw::exceptional_index_data(set, count + 1)
        .map(|d| d.spectrum_head)
        .unwrap_or_default();
    let mut pairs = Vec::new();
    for (j, &b) in head.iter().enumerate() {
        for &a in &head[..j] {
            if pairs.len() < count {
                pairs.push((a, b));
            }
        }
    }
    pairs
}

fn random_matrix(rng: &mut ChaCha8Rng) -> PolyMatrix {
    let size = rng.random_range(2..=5);
    PolyMatrix::from_fn(size, size, |_, _| {
        let deg = rng.random_range(0..=2);
        let coeffs: Vec<i64> = (0..=deg).map(|_| rng.random_range(-9..=9)).collect();
        hw::IntPolynomial::from_i64s(&coeffs)
    })
}

/// All `(a, b)` with `1 <= a < b <= k`.
fn index_pairs(k: usize) -> Vec<(usize, usize)> {
    (1..=k)
        .flat_map(|a| (a + 1..=k).map(move |b| (a, b)))
        .collect()
}

fn execute(cli: &Cli) -> Result<(Report, Option<String>), String> {
    let mut inputs = BTreeMap::new();
    let e = |err: hw::Error| err.to_string();
    let (name, items): (&str, Vec<(Item, f64)>) = match &cli.command {
        Command::Omega(a) => {
            inputs.insert("set".into(), json!(a.set));
            let (w, t) = timed(|| hw::omega(&a.set));
            let item = Item::Omega {
                degree: w.polynomial.degree(),
                set: w.set,
                polynomial: w.polynomial,
                predicted_degree: w.predicted_degree,
            };
            ("omega", vec![(item, t)])
        }
        Command::Roots { set, lo, hi } => {
            let (lo, hi) = (parse_bound(lo)?, parse_bound(hi)?);
            inputs.insert("set".into(), json!(set.set));
            inputs.insert("lo".into(), json!(bound_text(&lo)));
            inputs.insert("hi".into(), json!(bound_text(&hi)));
            let (r, t) = timed(|| -> hw::Result<Item> {
                let w = hw::omega_poly(&set.set);
                let sf = hw::squarefree_part(&w)?;
                let count = hw::sturm_count(&sf.squarefree, &lo, &hi)?;
                Ok(Item::Roots {
                    set: set.set.clone(),
                    lo: bound_text(&lo),
                    hi: bound_text(&hi),
                    squarefree_part: sf.squarefree,
                    real_root_count: count,
                })
            });
            ("roots", vec![(r.map_err(e)?, t)])
        }
        Command::Certify(a) => {
            inputs.insert("set".into(), json!(a.set));
            let (c, t) = timed(|| hw::certify(&a.set));
            ("certify", vec![(Item::Certificate(c.map_err(e)?), t)])
        }
        Command::SegmentCheck { p, q } => {
            inputs.insert("p".into(), json!([p.start(), p.end()]));
            inputs.insert("q".into(), json!([q.start(), q.end()]));
            let grid: Vec<(usize, usize)> = p
                .clone()
                .flat_map(|a| q.clone().map(move |b| (a, b)))
                .collect();
            let items =
                fan_out(grid, |(a, b)| hw::certify_segment(a, b).map(Item::Segment)).map_err(e)?;
            ("segment-check", items)
        }
        Command::Duality(f) => {
            f.echo(&mut inputs);
            let sets = f.sets()?;
            let items = fan_out(sets, |s| hw::duality_check(&s).map(Item::Verdict)).map_err(e)?;
            ("duality", items)
        }
        Command::Sylvester {
            set,
            rows,
            cols,
            random,
            seed,
            recurrence,
            p,
            q,
        } => {
            if *recurrence {
                inputs.insert("recurrence".into(), json!(true));
                inputs.insert("p".into(), json!([p.start(), p.end()]));
                inputs.insert("q".into(), json!([q.start(), q.end()]));
                inputs.insert("sign".into(), json!(hw::recurrence_sign()));
                let grid: Vec<(usize, usize)> = p
                    .clone()
                    .flat_map(|a| q.clone().map(move |b| (a, b)))
                    .collect();
                let items = fan_out(grid, |(a, b)| {
                    hw::signed_recurrence_check(a, b).map(Item::Verdict)
                })
                .map_err(e)?;
                ("sylvester", items)
            } else if let Some(count) = random {
                inputs.insert("random".into(), json!(count));
                inputs.insert("seed".into(), json!(seed));
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let mut jobs = Vec::new();
                for _ in 0..*count {
                    let m = random_matrix(&mut rng);
                    let k = m.rows();
                    let r = rows.unwrap_or_else(|| {
                        let a = rng.random_range(1..k);
                        (a, rng.random_range(a + 1..=k))
                    });
                    let c = cols.unwrap_or_else(|| {
                        let a = rng.random_range(1..k);
                        (a, rng.random_range(a + 1..=k))
                    });
                    jobs.push((m, r, c));
                }
                let items = fan_out(jobs, |(m, r, c)| {
                    hw::sylvester_check(&m, r.0, r.1, c.0, c.1).map(Item::Verdict)
                })
                .map_err(e)?;
                ("sylvester", items)
            } else {
                let set = set.as_ref().ok_or("give --set, --random or --recurrence")?;
                inputs.insert("set".into(), json!(set));
                let k = set.len();
                let m = hw::hermite_wronskian_matrix(set.elements(), k);
                let row_pairs = rows.map(|r| vec![r]).unwrap_or_else(|| index_pairs(k));
                let col_pairs = cols.map(|c| vec![c]).unwrap_or_else(|| index_pairs(k));
                if row_pairs.is_empty() {
                    return Err(format!("Sylvester identity needs |F| >= 2, got {set}"));
                }
                let jobs: Vec<_> = row_pairs
                    .iter()
                    .flat_map(|&r| col_pairs.iter().map(move |&c| (r, c)))
                    .collect();
                let items = fan_out(jobs, |(r, c)| {
                    hw::sylvester_check(&m, r.0, r.1, c.0, c.1).map(Item::Verdict)
                })
                .map_err(e)?;
                ("sylvester", items)
            }
        }
        Command::Ode {
            set,
            n,
            segment,
            p,
            q,
        } => {
            if *segment {
                inputs.insert("segment".into(), json!(true));
                inputs.insert("p".into(), json!([p.start(), p.end()]));
                inputs.insert("q".into(), json!([q.start(), q.end()]));
                let grid: Vec<(usize, usize)> = p
                    .clone()
                    .flat_map(|a| q.clone().map(move |b| (a, b)))
                    .collect();
                let items = fan_out(grid, |(a, b)| {
                    hw::segment_ode_check(a, b).map(Item::Verdict)
                })
                .map_err(e)?;
                ("ode", items)
            } else {
                let set = set.as_ref().ok_or("give --set or --segment")?;
                inputs.insert("set".into(), json!(set));
                let degrees: Vec<usize> = match n {
                    Some(r) => r.clone().collect(),
                    None => hw::exceptional_index_data(set, 5).map_err(e)?.spectrum_head,
                };
                inputs.insert("n".into(), json!(degrees));
                let items = fan_out(degrees, |d| hw::eigen_ode_check(set, d).map(Item::Verdict))
                    .map_err(e)?;
                ("ode", items)
            }
        }
        Command::Admissible(f) => {
            f.echo(&mut inputs);
            let items = fan_out(f.sets()?, |s| {
                let k = hw::krein_adler(&s);
                Ok::<_, hw::Error>(Item::Admissible {
                    set: s,
                    admissible: k.admissible,
                    real_root_count: k.real_root_count,
                    krein_adler_holds: k.verdict.holds_exactly,
                })
            })
            .map_err(e)?;
            ("admissible", items)
        }
        Command::KarlinSzego { n, k } => {
            inputs.insert("n".into(), json!([n.start(), n.end()]));
            inputs.insert("k".into(), json!([k.start(), k.end()]));
            let grid: Vec<(usize, usize)> = n
                .clone()
                .flat_map(|a| k.clone().map(move |b| (a, b)))
                .collect();
            let items = fan_out(grid, |(a, b)| {
                hw::karlin_szego_count(a, b).map(Item::KarlinSzego)
            })
            .map_err(e)?;
            ("karlin-szego", items)
        }
        Command::Scan {
            max_element,
            max_size,
        } => {
            let max_size = max_size.unwrap_or(*max_element);
            inputs.insert("max_element".into(), json!(max_element));
            inputs.insert("max_size".into(), json!(max_size));
            if *max_element < 1 || max_size < 1 {
                return Err("scan bounds must be >= 1".into());
            }
            let sets = IndexSet::enumerate(*max_element, max_size);
            let items = fan_out(sets, |s| hw::certify(&s).map(Item::Certificate)).map_err(e)?;
            ("scan", items)
        }
        Command::RootCloud { set, csv } => {
            inputs.insert("set".into(), json!(set.set));
            let (roots, t) = timed(|| hw::root_cloud(&set.set));
            let roots: Vec<RootPoint> = roots
                .map_err(e)?
                .into_iter()
                .map(|z| RootPoint { re: z.re, im: z.im })
                .collect();
            let csv_text = csv.then(|| roots_csv(&roots));
            let item = Item::RootCloud {
                set: set.set.clone(),
                roots,
            };
            let report = Report::new("root-cloud", inputs, vec![(item, t)]);
            return Ok((report, csv_text));
        }
        Command::Orthogonality {
            set,
            n1,
            n2,
            pairs,
            tol,
        } => {
            inputs.insert("set".into(), json!(set.set));
            inputs.insert("tol".into(), json!(tol));
            let jobs = match (n1, n2) {
                (Some(a), Some(b)) => vec![(*a, *b)],
                _ => spectrum_pairs(&set.set, *pairs),
            };
            inputs.insert("pairs".into(), json!(jobs));
            let items = fan_out(jobs, |(a, b)| {
                hw::orthogonality_report(&set.set, a, b, *tol).map(|r| Item::Orthogonality {
                    set: set.set.clone(),
                    tolerance: *tol,
                    passed: r.relative <= *tol,
                    report: r,
                })
            })
            .map_err(e)?;
            ("orthogonality", items)
        }
    };
    Ok((Report::new(name, inputs, items), None))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(err) => {
            let code = if err.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_OK
            };
            let text = err.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let pool = match cli.par {
        Some(0) => return usage("--par must be at least 1"),
        Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n).build(),
        None => rayon::ThreadPoolBuilder::new().build(),
    };
    let pool = match pool {
        Ok(p) => p,
        Err(err) => return usage(err),
    };
    let (report, csv) = match pool.install(|| execute(&cli)) {
        Ok(r) => r,
        Err(msg) => return usage(msg),
    };
    let body = match csv {
        Some(text) => text,
        None => {
            let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
            s.push('\n');
            s
        }
    };
    let code = if report.ok {
        EXIT_OK
    } else {
        EXIT_FAILED_CHECK
    };
    let mut stderr = String::new();
    if !report.ok {
        let failed = report.results.iter().filter(|i| !i.passed()).count();
        stderr.push_str(&format!(
            "{failed} of {} checks failed\n",
            report.results.len()
        ));
    }
    let stdout = match &cli.out {
        Some(path) => {
            let written =
                std::fs::File::create(path).and_then(|mut f| f.write_all(body.as_bytes()));
            if let Err(err) = written {
                return usage(format!("cannot write {}: {err}", path.display()));
            }
            String::new()
        }
        None => body,
    };
    Outcome {
        code,
        stdout,
        stderr,
    }
}

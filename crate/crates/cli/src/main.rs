use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::Signed;

use fibered_census::census::{penner_family, run_census, symmetry_group};
use fibered_census::conegeom::genus_of_closed_fiber;
use fibered_census::dilatation::{lambda, normalized_dilatation};
use fibered_census::emit::{census_table, count_table, penner_table, records_table, Format, Table};
use fibered_census::hyplen::{collar_f, collar_fixed_point, epsilon_residual, epsilon_thick};
use fibered_census::lattice::{count_ball_points, count_report};
use fibered_census::manifold::{load, Manifold};
use fibered_census::rational::parse_rational;
use fibered_census::{Error, IntegralClass};

#[derive(Parser)]
#[command(
    name = "fibered-census",
    version,
    about = "Census of small-dilatation fibers of a fibered 3-manifold"
)]
struct Cli {
    /// Width bound for certified root intervals (rational or decimal).
    #[arg(long, global = true, default_value = "1e-9", value_parser = parse_tol)]
    tol: BigRational,
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Per-genus counts of fibers with genus·log(lambda) <= L.
    Census {
        #[arg(short, long)]
        manifold: PathBuf,
        #[arg(short = 'L')]
        threshold: f64,
        #[arg(long, value_parser = parse_genus)]
        genus: RangeInclusive<i64>,
        /// Print every member and undecided record instead of the counts.
        #[arg(long)]
        detail: bool,
    },
    /// Dilatation and normalized dilatation of one class.
    Dilatation {
        #[arg(short, long)]
        manifold: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        class: IntegralClass,
        #[arg(long, default_value_t = 0)]
        face: usize,
    },
    /// Total and primitive point counts in a scaled cube.
    CountLattice {
        #[arg(short, long)]
        manifold: PathBuf,
        #[arg(long, value_parser = parse_genus)]
        genus: RangeInclusive<i64>,
        #[arg(long, default_value_t = 0)]
        face: usize,
        #[arg(long, default_value_t = 0)]
        cube: usize,
    },
    /// Number of integral classes with norm at most r.
    CountBall {
        #[arg(short, long)]
        manifold: PathBuf,
        /// A radius, or an inclusive range `a..b`.
        #[arg(short, long, value_parser = parse_radius)]
        radius: RangeInclusive<i64>,
    },
    /// Thick-part threshold epsilon_1(L) and collar self-tests.
    Epsilon {
        #[arg(short = 'L')]
        threshold: f64,
    },
    /// The family (g - 1)·S + Sigma and its convergence.
    Penner {
        #[arg(short, long)]
        manifold: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        s: IntegralClass,
        #[arg(long, allow_hyphen_values = true)]
        sigma: IntegralClass,
        #[arg(long, default_value_t = 50)]
        g_max: i64,
        #[arg(long, default_value_t = 0)]
        face: usize,
    },
    /// Load and validate a manifold file.
    Validate {
        #[arg(short, long)]
        manifold: PathBuf,
        /// Print the canonical form of the file.
        #[arg(long)]
        canonical: bool,
    },
    /// Isometries of the norm permuting the dual vertices.
    Symmetry {
        #[arg(short, long)]
        manifold: PathBuf,
    },
}

fn parse_tol(s: &str) -> Result<BigRational, String> {
    let q = parse_rational(s).map_err(|e| e.to_string())?;
    if !q.is_positive() {
        return Err("tolerance must be positive".into());
    }
    Ok(q)
}

fn parse_range(s: &str, min: i64) -> Result<RangeInclusive<i64>, String> {
    let (a, b) = s.split_once("..").unwrap_or((s, s));
    let a: i64 = a
        .trim()
        .parse()
        .map_err(|_| format!("bad range start in {s:?}"))?;
    let b: i64 = b.trim().parse().map_err(|_| format!("bad range end in {s:?}"))?;
    if a < min || a > b {
        return Err(format!("expected a..b with {min} <= a <= b, got {s:?}"));
    }
    Ok(a..=b)
}

fn parse_genus(s: &str) -> Result<RangeInclusive<i64>, String> {
    parse_range(s, 1)
}

fn parse_radius(s: &str) -> Result<RangeInclusive<i64>, String> {
    parse_range(s, 0)
}

fn face_of(m: &Manifold, i: usize) -> Result<&fibered_census::manifold::Face, Error> {
    m.faces.get(i).ok_or_else(|| {
        Error::InvalidArgument(format!("face index {i} out of range ({} faces)", m.faces.len()))
    })
}

fn run(cli: &Cli) -> Result<String, Error> {
    let format = match cli.format {
        OutputFormat::Csv => Format::Csv,
        OutputFormat::Table => Format::Table,
    };
    let tol = &cli.tol;
    match &cli.command {
        Command::Census {
            manifold,
            threshold,
            genus,
            detail,
        } => {
            let m = load(manifold)?;
            let report = run_census(&m, *threshold, genus.clone(), tol)?;
            let mut out = if *detail {
                records_table(&report)
            } else {
                census_table(&report)
            }
            .render(format);
            for row in &report.rows {
                for (class, err) in &row.failures {
                    out.push_str(&format!("# genus {} class {class}: {err}\n", row.genus));
                }
            }
            Ok(out)
        }
        Command::Dilatation {
            manifold,
            class,
            face,
        } => {
            let m = load(manifold)?;
            let f = face_of(&m, *face)?;
            let normalized = normalized_dilatation(&m.norm, &f.face, &f.theta, class, tol)?;
            let poly = f.theta.specialize(class)?;
            let lam = lambda(&f.theta, class, tol)?;
            let norm = m.norm.norm(class)?;
            let log = lam.ln();
            let mut t = Table::new(&["quantity", "value"]);
            t.push(vec!["class".into(), class.to_string()]);
            t.push(vec!["polynomial".into(), poly.to_string()]);
            t.push(vec!["lambda".into(), lam.to_string()]);
            t.push(vec!["log_lambda".into(), log.to_string()]);
            t.push(vec!["norm".into(), norm.to_string()]);
            t.push(vec!["norm_log_lambda".into(), normalized.to_string()]);
            if m.is_closed() {
                if let Ok(g) = genus_of_closed_fiber(&m.norm, &f.face, class) {
                    t.push(vec!["genus".into(), g.to_string()]);
                    t.push(vec!["genus_log_lambda".into(), log.scale(g).to_string()]);
                }
            }
            Ok(t.render(format))
        }
        Command::CountLattice {
            manifold,
            genus,
            face,
            cube,
        } => {
            let m = load(manifold)?;
            let f = face_of(&m, *face)?;
            let k = f
                .cubes
                .get(*cube)
                .ok_or_else(|| Error::InvalidArgument(format!("cube index {cube} out of range")))?;
            let reports: Vec<_> = genus.clone().map(|g| count_report(k, g)).collect();
            Ok(count_table(&reports).render(format))
        }
        Command::CountBall { manifold, radius } => {
            let m = load(manifold)?;
            let mut t = Table::new(&["r", "count"]);
            for r in radius.clone() {
                t.push(vec![r.to_string(), count_ball_points(&m.norm, r).to_string()]);
            }
            Ok(t.render(format))
        }
        Command::Epsilon { threshold } => {
            let residual_tol = 1e-12;
            let eps = epsilon_thick(*threshold, residual_tol)?;
            let x = collar_fixed_point();
            let mut t = Table::new(&["quantity", "value"]);
            t.push(vec!["L".into(), threshold.to_string()]);
            t.push(vec!["epsilon".into(), format!("{eps:.17e}")]);
            t.push(vec![
                "residual".into(),
                format!("{:.3e}", epsilon_residual(*threshold, eps)?),
            ]);
            t.push(vec![
                "fixed_point_error".into(),
                format!("{:.3e}", (collar_f(x)? - x).abs()),
            ]);
            t.push(vec![
                "involution_error".into(),
                format!("{:.3e}", (collar_f(collar_f(2.0)?)? - 2.0).abs()),
            ]);
            Ok(t.render(format))
        }
        Command::Penner {
            manifold,
            s,
            sigma,
            g_max,
            face,
        } => {
            let m = load(manifold)?;
            let f = face_of(&m, *face)?;
            let report = penner_family(&m, f, s, sigma, *g_max, tol)?;
            let mut out = penner_table(&report).render(format);
            let show = |g: Option<i64>| g.map_or("none".to_string(), |g| g.to_string());
            out.push_str(&format!(
                "# limit {} start {} settled(0.01) {}\n",
                report.limit,
                show(report.start),
                show(report.settled_from(0.01))
            ));
            Ok(out)
        }
        Command::Validate { manifold, canonical } => {
            let m = load(manifold)?;
            if *canonical {
                return Ok(m.file.to_canonical_json());
            }
            let cubes: usize = m.faces.iter().map(|f| f.cubes.len()).sum();
            Ok(format!(
                "ok: {} (b1 = {}, {}, {} face(s), {} cube(s))\n",
                m.name(),
                m.b1(),
                if m.is_closed() { "closed" } else { "cusped" },
                m.faces.len(),
                cubes
            ))
        }
        Command::Symmetry { manifold } => {
            let m = load(manifold)?;
            let g = symmetry_group(&m.norm);
            let mut t = Table::new(&["index", "matrix"]);
            for (i, a) in g.elements().iter().enumerate() {
                let rows: Vec<String> = a
                    .iter()
                    .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
                    .collect();
                t.push(vec![i.to_string(), rows.join("; ")]);
            }
            let mut out = t.render(format);
            out.push_str(&format!("# order {}\n", g.order()));
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.jobs {
        if n == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        builder = builder.num_threads(n);
    }
    let pool = match builder.build() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match pool.install(|| run(&cli)) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

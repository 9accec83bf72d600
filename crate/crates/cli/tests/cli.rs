use std::path::PathBuf;
use std::process::{Command, Output};

fn data() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibered-census"))
        .args(args)
        .env("FIBERED_CENSUS_DATA", data())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn census_csv() {
    let o = run(&[
        "census",
        "-m",
        "synthetic_square.json",
        "-L",
        "2.0",
        "--genus",
        "1..6",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(
        stdout(&o),
        "genus,count_raw,count_orbits,undecided,upper_bound\n\
         1,0,0,0,1\n2,1,1,0,49\n3,2,1,0,169\n4,2,1,0,361\n5,2,1,0,625\n6,4,2,0,961\n"
    );
}

#[test]
fn census_is_deterministic_across_worker_counts() {
    let base = [
        "census",
        "-m",
        "synthetic_square.json",
        "-L",
        "2.0",
        "--genus",
        "2..20",
        "--detail",
    ];
    let one = run(&[&base[..], &["--jobs", "1"]].concat());
    let four = run(&[&base[..], &["--jobs", "4"]].concat());
    let again = run(&[&base[..], &["--jobs", "4"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(four.stdout, again.stdout);
}

#[test]
fn census_threshold_below_the_golden_value_is_empty() {
    let o = run(&[
        "census",
        "-m",
        "synthetic_square.json",
        "-L",
        "1.0",
        "--genus",
        "2",
    ]);
    assert_eq!(
        stdout(&o),
        "genus,count_raw,count_orbits,undecided,upper_bound\n2,0,0,0,49\n"
    );
}

#[test]
fn epsilon_reports_threshold_and_self_tests() {
    let o = run(&["epsilon", "-L", "0.962"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("epsilon,2.92204805767"), "{out}");
    assert!(out.contains("fixed_point_error,"));
    let residual: f64 = out
        .lines()
        .find_map(|l| l.strip_prefix("residual,"))
        .unwrap()
        .parse()
        .unwrap();
    assert!(residual.abs() < 1e-10);
    assert_eq!(run(&["epsilon", "-L", "0"]).status.code(), Some(1));
}

#[test]
fn dilatation_of_the_figure_eight_generator() {
    let o = run(&["dilatation", "-m", "figure_eight.json", "--class", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("polynomial,x^2 - 3x + 1"));
    assert!(out.contains("log_lambda,0.962423"));
    let o = run(&["dilatation", "-m", "synthetic_square.json", "--class", "-1,0"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn counting_commands() {
    let o = run(&["count-ball", "-m", "synthetic_square.json", "-r", "6"]);
    assert_eq!(stdout(&o), "r,count\n6,49\n");
    let o = run(&["count-lattice", "-m", "synthetic_square.json", "--genus", "5..7"]);
    assert_eq!(
        stdout(&o),
        "g,total,primitive_exact,primitive_ie,lower_bound\n5,5,2,2,\n6,5,4,4,\n7,7,2,2,\n"
    );
    let o = run(&[
        "count-lattice",
        "-m",
        "hypercube_b3.json",
        "--genus",
        "3",
        "--cube",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&[
        "count-lattice",
        "-m",
        "hypercube_b3.json",
        "--genus",
        "3",
        "--cube",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn symmetry_and_penner() {
    let o = run(&["symmetry", "-m", "synthetic_square.json"]);
    assert!(stdout(&o).ends_with("# order 8\n"));
    let o = run(&[
        "penner",
        "-m",
        "synthetic_square.json",
        "--s",
        "1,0",
        "--sigma",
        "0,1",
        "--g-max",
        "30",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("2,\"(1,1)\",outside the open cone"));
    assert!(out.contains("start 3 settled(0.01) 11"), "{out}");
    let o = run(&[
        "penner",
        "-m",
        "synthetic_square.json",
        "--s",
        "1,0",
        "--sigma",
        "1,1",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn validate_good_and_bad_files() {
    let o = run(&["validate", "-m", "synthetic_square.json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("ok: synthetic_square"));

    let canonical = run(&["validate", "-m", "hypercube_b3.json", "--canonical"]);
    let original = std::fs::read(data().join("hypercube_b3.json")).unwrap();
    assert_eq!(canonical.stdout, original);

    let text = std::fs::read_to_string(data().join("synthetic_square.json")).unwrap();
    let bad = text.replace("\"psi\": [2, 0]", "\"psi\": [1, 0]");
    assert_ne!(bad, text);
    let path = std::env::temp_dir().join(format!("fibered-census-bad-{}.json", std::process::id()));
    std::fs::write(&path, bad).unwrap();
    let o = run(&["validate", "-m", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stderr(&o).contains("face even-integrality violated"),
        "{}",
        stderr(&o)
    );

    let o = run(&["validate", "-m", "no_such_file.json"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
    let bad_range = run(&[
        "census",
        "-m",
        "synthetic_square.json",
        "-L",
        "2",
        "--genus",
        "5..2",
    ]);
    assert_eq!(bad_range.status.code(), Some(2));
    let bad_tol = run(&[
        "census",
        "-m",
        "synthetic_square.json",
        "-L",
        "2",
        "--genus",
        "2",
        "--tol",
        "-1",
    ]);
    assert_eq!(bad_tol.status.code(), Some(2));
    let bad_format = run(&[
        "count-ball",
        "-m",
        "synthetic_square.json",
        "-r",
        "2",
        "--format",
        "xml",
    ]);
    assert_eq!(bad_format.status.code(), Some(2));
}

#[test]
fn table_format_is_aligned() {
    let o = run(&[
        "count-ball",
        "-m",
        "synthetic_square.json",
        "-r",
        "0..2",
        "--format",
        "table",
    ]);
    assert_eq!(stdout(&o), "r  count\n0      1\n1      1\n2      9\n");
}

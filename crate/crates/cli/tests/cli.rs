use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const EXAMPLE: &str = "n: 5
axis: 1 2 3 4 5
pref 1: 3 4 5 2 1
pref 2: 3 4 5 2 1
pref 3: 4 5 3 2 1
pref 4: 3 4 5 2 1
pref 5: 1 2 3 4 5
endow: 1 2 3 4 5
";

fn hmkt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hmkt")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn generate_is_seeded() {
    let args = ["generate", "--culture", "up-sp", "--n", "8", "--seed", "5", "--endow", "random"];
    let a = hmkt(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&hmkt(&args)));
    assert!(stdout(&a).starts_with("n: 8\naxis: 1 2 3 4 5 6 7 8\n"));
    assert_ne!(stdout(&a), stdout(&hmkt(&["generate", "--culture", "up-sp", "--n", "8", "--seed", "6"])));
}

#[test]
fn generate_writes_a_solvable_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("inst.txt");
    assert!(hmkt(&["generate", "--culture", "ic-sp", "--n", "6", "-o", path(&file)]).status.success());
    for procedure in ["ttc", "crawler", "c2-u", "c2-rra", "c2-rrp", "c2-pn", "c2-pw", "c3-u", "max-ark-ir", "max-mrk-ir"] {
        let out = hmkt(&["solve", "--procedure", procedure, "--instance", path(&file)]);
        assert!(out.status.success(), "{procedure}");
        assert!(stdout(&out).starts_with("allocation ⟨"), "{procedure}");
    }
}

#[test]
fn solve_prints_the_ttc_trace() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("example.txt");
    fs::write(&file, EXAMPLE).unwrap();
    let out = hmkt(&["solve", "--procedure", "ttc", "--instance", path(&file), "--trace"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "deal ⟨a3, a4⟩ -> ⟨r1, r2, r4, r3, r5⟩\n\
         deal ⟨a1, a5⟩ -> ⟨r5, r2, r4, r3, r1⟩\n\
         deal ⟨a2⟩ -> ⟨r5, r2, r4, r3, r1⟩\n\
         allocation ⟨r5, r2, r4, r3, r1⟩\nark 20\nmrk 2\ndeals 3\n"
    );
    let crawler = hmkt(&["solve", "--procedure", "crawler", "--instance", path(&file)]);
    assert!(stdout(&crawler).starts_with("allocation ⟨r2, r5, r4, r3, r1⟩\n"));
}

#[test]
fn bad_input_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.txt");
    fs::write(&file, "n: 2\npref 1: 1 1\npref 2: 1 2\nendow: 1 2\n").unwrap();
    let out = hmkt(&["solve", "--procedure", "ttc", "--instance", path(&file)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(hmkt(&["solve", "--procedure", "nope", "--instance", path(&file)]).status.code(), Some(2));
}

#[test]
fn experiment_is_byte_identical_and_plots() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("run.toml");
    fs::write(&config, "sizes = [3, 6, 9]\nreps = 10\nseed = 4\nendowment = \"random\"\n").unwrap();
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    let plots = dir.path().join("plots");
    assert!(hmkt(&["experiment", "--config", path(&config), "-o", path(&a), "--plots", path(&plots)]).status.success());
    assert!(hmkt(&["experiment", "--config", path(&config), "-o", path(&b)]).status.success());
    let (a, b) = (fs::read(a).unwrap(), fs::read(b).unwrap());
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("culture,procedure,n,rep,seed,"));
    assert_eq!(text.lines().count(), 1 + 2 * 10 * 3 * 10);
    let charts = fs::read_dir(&plots).unwrap().count();
    assert_eq!(charts, 8);
}

#[test]
fn experiment_needs_an_output() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("run.toml");
    fs::write(&config, "sizes = [3]\nreps = 1\n").unwrap();
    assert_eq!(hmkt(&["experiment", "--config", path(&config)]).status.code(), Some(2));
    fs::write(&config, "sizes = [3]\nrepetitions = 1\n").unwrap();
    let out = dir.path().join("x.csv");
    assert_eq!(hmkt(&["experiment", "--config", path(&config), "-o", path(&out)]).status.code(), Some(2));
}

#[test]
fn verify_reports_and_sets_the_exit_code() {
    let ok = hmkt(&["verify", "--suite", "theorem1", "--sizes", "3,4", "--reps", "5"]);
    assert!(ok.status.success());
    assert_eq!(stdout(&ok), "PASS theorem1: 40 checks, 0 failures\n");

    let reach = hmkt(&["verify", "--suite", "reachability", "--sizes", "4,5", "--reps", "5"]);
    assert!(reach.status.success());

    // The average-rank worst case of the construction admits an improving swap.
    let poa = hmkt(&["verify", "--suite", "poa", "--sizes", "5"]);
    assert_eq!(poa.status.code(), Some(1));
    assert!(stdout(&poa).contains("not swap-stable"));

    assert_eq!(hmkt(&["verify", "--suite", "bogus"]).status.code(), Some(2));
}

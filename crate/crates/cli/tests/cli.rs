use std::io::Write;
use std::process::{Command, Output, Stdio};

fn ublab(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ublab"))
        .args(args)
        .env_remove("UBLAB_MAX_ORDER")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn star_invariants() {
    let o = ublab(&["invariants"], "# star\n0 1\n0 2\n0 3\n0 4\n");
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "n=5 mo=12 ub=12 ub2=12 distance_balanced=false highly_distance_balanced=false canonical=0,1,1,1,1\n"
    );
}

#[test]
fn closer_count_matrix() {
    let o = ublab(&["invariants", "--closer-counts"], "0 1\n1 2\n");
    assert_eq!(stdout(&o).lines().skip(1).collect::<Vec<_>>(), ["0 1 1", "2 0 2", "1 1 0"]);
}

#[test]
fn json_invariants_for_a_cycle() {
    let o = ublab(&["invariants", "--json"], "0 1\n1 2\n2 3\n3 0\n");
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["ub"], 0);
    assert_eq!(v["highly_distance_balanced"], true);
    assert!(v["canonical"].is_null());
}

#[test]
fn exit_codes() {
    assert_eq!(code(&ublab(&["invariants"], "0 0\n")), 2);
    assert_eq!(code(&ublab(&["invariants"], "0 1\nx y\n")), 2);
    assert_eq!(code(&ublab(&["invariants"], "0 1\n2 3\n")), 1);
    assert_eq!(code(&ublab(&["enumerate"], "")), 2);
    assert_eq!(code(&ublab(&["verify", "theorem1", "--min-order", "5", "--max-order", "3"], "")), 2);
}

#[test]
fn enumerate_lists_each_tree_once() {
    let o = ublab(&["enumerate", "--order", "5"], "");
    assert_eq!(stdout(&o), "0,1,2,1,2\n0,1,2,1,1\n0,1,1,1,1\n");
    assert_eq!(stdout(&ublab(&["enumerate", "--order", "7"], "")).lines().count(), 11);
    assert_eq!(stdout(&ublab(&["enumerate", "--order", "10", "--limit", "4"], "")).lines().count(), 4);
}

#[test]
fn enumerated_trees_feed_back_into_invariants() {
    for line in stdout(&ublab(&["enumerate", "--order", "6"], "")).lines() {
        let o = ublab(&["invariants", "--format", "levelseq"], line);
        assert_eq!(code(&o), 0);
        assert!(stdout(&o).trim_end().ends_with(&format!("canonical={line}")));
    }
}

#[test]
fn order_cap() {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ublab"));
    let o = cmd.args(["enumerate", "--order", "6"]).env("UBLAB_MAX_ORDER", "5").output().unwrap();
    assert_eq!(code(&o), 2);
    assert_eq!(code(&ublab(&["enumerate", "--order", "21"], "")), 2);
}

#[test]
fn families() {
    assert_eq!(stdout(&ublab(&["family", "star", "--order", "6"], "")), "ub n=6 closed=20 direct=20 match\n");
    for args in [
        &["family", "path", "--order", "9"][..],
        &["family", "double-star", "--order", "10"],
        &["family", "spider", "--legs", "4,2,1"],
    ] {
        let o = ublab(args, "");
        assert_eq!(code(&o), 0, "{args:?}");
        assert!(stdout(&o).contains(" match"));
    }
    let two = ublab(&["family", "spider", "--legs", "3,1"], "");
    assert_eq!(code(&two), 0);
    assert!(stdout(&two).contains("reported only"));
    assert_eq!(code(&ublab(&["family", "spider", "--legs", "1,2"], "")), 2);
}

#[test]
fn theorem_table() {
    let o = ublab(&["verify", "theorem1", "--min-order", "2", "--max-order", "12"], "");
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,tree_count,min_ub,ub_minimizer_count,theorem1,min_ub2,lemma1,case2_ok,elapsed_ms"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 11);
    assert_eq!(rows[3], "5,3,12,1,true,12,true,true,");
    for row in rows {
        let cells: Vec<&str> = row.split(',').collect();
        assert_eq!([cells[4], cells[6], cells[7]], ["true"; 3], "{row}");
    }
}

#[test]
fn parallel_output_is_identical() {
    for extra in [&[][..], &["--json"]] {
        let run = |jobs: &str| {
            let mut args = vec!["verify", "all", "--max-order", "11", "--max-n", "12", "--jobs", jobs];
            args.extend_from_slice(extra);
            ublab(&args, "").stdout
        };
        assert_eq!(run("1"), run("8"));
    }
}

#[test]
fn csv_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let o = ublab(&["verify", "case2", "--max-order", "9", "--csv", path.to_str().unwrap()], "");
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 9);
}

#[test]
fn relaxation_sweep() {
    let o = ublab(&["verify", "relaxations", "--max-n", "14"], "");
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.to_string().contains("\"claim_holds\":true"));
    assert!(!v.to_string().contains("\"claim_holds\":false"));
}

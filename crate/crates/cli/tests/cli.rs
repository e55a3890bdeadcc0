use std::path::PathBuf;
use std::process::{Command, Output};

fn greenfun(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_greenfun"))
        .args(args)
        .env_remove("GREEN_PACK_DIR")
        .output()
        .expect("spawn greenfun")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn pack_path(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/packs").join(name).display().to_string()
}

#[test]
fn gl2_table_csv() {
    let o = greenfun(&["table", "--type", "A1", "--q", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "w,11,2\n1,4,1\ns1,-2,1\n");
}

#[test]
fn text_table_has_provenance_and_blocks() {
    let o = greenfun(&["table", "--type", "B2", "--q", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("type: B2\nq: 3\nprovenance: "));
    assert!(s.contains("block: d="));
}

#[test]
fn verify_single_run() {
    let o = greenfun(&["verify", "--type", "A2", "--q", "2", "--r", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("witness: "));
    assert!(s.trim_end().ends_with("ALL CONGRUENCES HOLD"));
}

#[test]
fn verify_with_unmet_hypotheses() {
    // 7 divides |GL_3(2)| = 168
    let o = greenfun(&["verify", "--type", "A2", "--q", "2", "--r", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim_end().ends_with("HYPOTHESES NOT MET"));
}

#[test]
fn small_sweep() {
    let o = greenfun(&["verify", "--sweep", "--type", "A1,2A2", "--q", "2,3", "--r", "5,7", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(s.matches("== ").count(), 8);
    assert!(s.trim_end().ends_with("ALL CONGRUENCES HOLD"));
}

#[test]
fn shipped_packs_validate() {
    for name in ["b2.pack", "g2.pack", "2a2.pack", "2a3.pack"] {
        let o = greenfun(&["validate-pack", "--pack", &pack_path(name)]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        assert!(stdout(&o).trim_end().ends_with(": valid"));
    }
}

#[test]
fn broken_pack_exits_one() {
    let text = std::fs::read_to_string(pack_path("b2.pack")).unwrap();
    let broken = text.replacen("\"dim\": 8", "\"dim\": 7", 1);
    assert_ne!(text, broken);
    let path = std::env::temp_dir().join(format!("greenfun-broken-{}.pack", std::process::id()));
    std::fs::write(&path, broken).unwrap();
    let o = greenfun(&["validate-pack", "--pack", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains(" E_"));
}

#[test]
fn malformed_invocations_exit_two() {
    for args in [
        &["table", "--type", "A9", "--q", "3"][..],
        &["table", "--type", "A1", "--q", "6"],
        &["table", "--type", "A1", "--q", "3", "--bogus"],
        &["verify", "--type", "A1", "--q", "2"],
        &["frobnicate"],
    ] {
        let o = greenfun(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn inadmissible_q_is_an_error() {
    let o = greenfun(&["table", "--type", "G2", "--q", "3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn oracle_matches_table() {
    let o = greenfun(&["oracle", "--type", "A1", "--q", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "w,11,2\n1,4,1\ns1,-2,1\n");
    let f = greenfun(&["oracle", "--type", "A2", "--q", "2", "--kind", "flags"]);
    assert_eq!(stdout(&f), "111: 21\n21: 5\n3: 1\n");
}

#[test]
fn other_subcommands_run() {
    for args in [
        &["omega", "--type", "A2", "--q", "2"][..],
        &["solve", "--type", "2A2", "--q", "3"],
        &["pi", "--type", "A1", "--sample-q", "2,3"],
        &["pi", "--type", "A2"],
        &["oracle", "--type", "A1", "--q", "2", "--kind", "enumerate"],
    ] {
        let o = greenfun(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!o.stdout.is_empty());
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table", "--type", "G2", "--q", "5"][..],
        &["solve", "--type", "B2", "--q", "5"],
        &["verify", "--sweep", "--type", "A1,A2", "--q", "2,3", "--r", "5,7", "--jobs", "3"],
    ] {
        let a = greenfun(args);
        let b = greenfun(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

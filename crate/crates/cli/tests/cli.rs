use std::process::{Command, Output};

fn pinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pinv")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = pinv(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

fn assert_json_round_trips(text: &str) {
    let value: serde_json::Value = serde_json::from_str(text).unwrap();
    assert_eq!(serde_json::to_string(&value).unwrap() + "\n", text);
}

#[test]
fn pair_table_for_nine() {
    assert_eq!(ok(&["pair-table", "--family", "pdo", "--n", "9"]), "8+1 <-> 9\n6+3 <-> 6+2+1\nfixed: 5+3+1\n");
    assert_eq!(
        ok(&["pair-table", "--family", "q", "--n", "9"]),
        "8+1+0 <-> 9+0\n7+2+0 <-> 7+2\n6+3+0 <-> 6+2+1+0\n5+4+0 <-> 5+4\n4+3+2 <-> 4+3+2+0\nfixed: 5+3+1+0\n"
    );
    let json = ok(&["pair-table", "--family", "pdo", "--n", "9", "--format", "json"]);
    assert_json_round_trips(&json);
    assert!(json.starts_with(r#"[{"pair":{"left":[8,1],"right":[9],"case":"#));
}

#[test]
fn pair_table_rejects_families_without_involution() {
    assert_eq!(pinv(&["pair-table", "--family", "b", "--n", "9"]).status.code(), Some(2));
}

#[test]
fn psi_q_trace_at_m2() {
    let out = ok(&["involute", "--map", "psi_q", "--m", "2", "--partition", "20,16,11,5,3,0"]);
    assert_eq!(
        out,
        "{\"input\":[20,16,11,5,3,0],\"case\":\"psi-iii\",\"extract\":{\"pi\":[12,8,7,5,3],\"sigma\":[12,8]},\
         \"phi_case\":\"A1\",\"image\":[20,19,13,3,0]}\n"
    );
    assert_json_round_trips(&out);
}

#[test]
fn psi_do_trace_fields_in_order() {
    let out = ok(&["involute", "--map", "psi_do", "--partition", "9,1"]);
    assert_eq!(
        out,
        "{\"input\":[9,1],\"extract\":{\"pi\":[3,1],\"sigma\":[2,2,2]},\"phi_case\":\"B2\",\"image\":[7,2,1]}\n"
    );
    let fixed = ok(&["involute", "--map", "psi_do", "--partition", "5,3,1"]);
    assert_eq!(
        fixed,
        "{\"input\":[5,3,1],\"extract\":{\"pi\":[5,3,1],\"sigma\":[]},\"phi_case\":null,\"image\":null}\n"
    );
}

#[test]
fn phi_and_b_pair_traces() {
    let out = ok(&["involute", "--map", "phi", "--partition", "6,5,3,2,1", "--sigma", "4", "--format", "text"]);
    assert_eq!(out, "input: pi = 6+5+3+2+1, sigma = 4\nphi: B1\nimage: pi = 5+3+2+1, sigma = 6+4\n");
    let out = ok(&["involute", "--map", "b_pair", "--m", "3", "--partition", "19,15,9,5,3"]);
    assert_eq!(out, "{\"input\":[19,15,9,5,3],\"k\":5,\"core\":[9,7,5,3,1],\"h\":[5,5,3,3,2,2,2,2,1,1]}\n");
}

#[test]
fn random_input_is_reproducible() {
    let args = ["involute", "--map", "psi_do", "--n", "30", "--seed", "11"];
    assert_eq!(ok(&args), ok(&args));
    assert_eq!(pinv(&["involute", "--map", "psi_do"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let out = ok(&["verify", "--theorem", "T6.1", "--nmax", "60"]);
    assert!(out.ends_with("T6.1 n<=60: pass\n"));
    let json = ok(&["verify", "--theorem", "T8.2(2)", "--nmax", "20", "--format", "json"]);
    assert_json_round_trips(&json);
    assert!(json.starts_with(r#"{"theorem":"T8.2(2)","n_max":20,"entries":[{"n":1,"#));
    assert!(json.ends_with("\"pass\":true}\n"));
    assert_eq!(pinv(&["verify", "--theorem", "T9.9", "--nmax", "5"]).status.code(), Some(2));
    assert_eq!(pinv(&["verify", "--theorem", "T4.1"]).status.code(), Some(2));
}

#[test]
fn series_comparison_and_sides() {
    assert_eq!(ok(&["series", "--identity", "General", "--m", "3", "--N", "60"]), "General (m=3) N=60: equal\n");
    assert_eq!(
        ok(&["series", "--identity", "AndrewsTheta", "--N", "4", "--side", "rhs"]),
        "0: 1\n1: -a\n2: 0\n3: 0\n4: a^2\n"
    );
    let json = ok(&["series", "--identity", "Ramanujan", "--N", "30", "--format", "json"]);
    assert_eq!(json, "{\"identity\":\"Ramanujan\",\"m\":1,\"N\":30,\"equal\":true,\"discrepancy\":null}\n");
    assert_eq!(pinv(&["series", "--identity", "Nope", "--N", "5"]).status.code(), Some(2));
}

#[test]
fn enumerate_outputs() {
    assert_eq!(ok(&["enumerate", "--family", "pdo", "--n", "10"]), "9+1\n7+3\n7+2+1\n6+3+1\n5+4+1\n4+3+2+1\n");
    let json = ok(&["enumerate", "--family", "q", "--n", "4", "--format", "json"]);
    assert_eq!(json, "[[4,0],[4],[3,1,0]]\n");
    assert_eq!(ok(&["enumerate", "--family", "distinct", "--n", "0"]), "()\n");
    assert_eq!(pinv(&["enumerate", "--family", "z", "--n", "3"]).status.code(), Some(2));
    assert_eq!(pinv(&["enumerate", "--family", "b", "--m", "0", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn render_formats() {
    assert_eq!(ok(&["render", "--partition", "5,3,1"]), "2 2 1\n2 1\n1\n");
    assert_eq!(ok(&["render", "--partition", "9,2", "--m", "2"]), "4 4 1\n2\n");
    let json = ok(&["render", "--partition", "5,3,1", "--format", "json"]);
    assert_eq!(json, "{\"partition\":[5,3,1],\"m\":1,\"rows\":[[2,2,1],[2,1],[1]]}\n");
    let svg = ok(&["render", "--partition", "3,1", "--format", "svg"]);
    assert!(svg.starts_with("<svg") && svg.matches("<rect").count() == 3);
    assert_eq!(pinv(&["render", "--partition", "1,3"]).status.code(), Some(2));
    assert_eq!(pinv(&["render", "--partition", "3,-1"]).status.code(), Some(2));
}

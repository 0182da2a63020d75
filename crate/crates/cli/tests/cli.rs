use std::path::Path;
use std::process::{Command, Output};

use planar_stc::format::{parse_plane_graph, parse_tree, write_plane_graph};
use planar_stc::PlaneGraph;
use serde_json::Value;

fn stc(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stc"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn gen_triangular(dir: &Path, k: usize) {
    let out = stc(
        dir,
        &["gen", "--family", "triangular", "--size", &k.to_string()],
    );
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn gen_writes_grid_and_system() {
    let dir = tempfile::tempdir().unwrap();
    gen_triangular(dir.path(), 5);
    let g =
        parse_plane_graph(&std::fs::read_to_string(dir.path().join("T_5.pg")).unwrap()).unwrap();
    assert_eq!(
        (g.vertex_count(), g.edge_count(), g.face_count()),
        (15, 30, 17)
    );
    assert!(dir.path().join("S_5.cts").exists());

    let out = stc(
        dir.path(),
        &["gen", "--family", "triangular", "--size", "1"],
    );
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn gen_spiderweb_writes_tree() {
    let dir = tempfile::tempdir().unwrap();
    let out = stc(
        dir.path(),
        &[
            "gen",
            "--family",
            "spiderweb",
            "--rings",
            "3",
            "--spokes",
            "4",
        ],
    );
    assert!(out.status.success());
    let g =
        parse_plane_graph(&std::fs::read_to_string(dir.path().join("W_3_4.pg")).unwrap()).unwrap();
    let t = parse_tree(
        &std::fs::read_to_string(dir.path().join("W_3_4.tree")).unwrap(),
        &g,
    )
    .unwrap();
    assert!(planar_stc::edge_congestion(&g, &t).unwrap() <= 6);
}

#[test]
fn bounds_certify_triangular_grids() {
    let dir = tempfile::tempdir().unwrap();
    for (k, s) in [(5, 6), (8, 10)] {
        gen_triangular(dir.path(), k);
        let out = stc(dir.path(), &["bounds", &format!("T_{k}.pg")]);
        assert!(out.status.success());
        let report = json(&out);
        assert_eq!(report["lower"], s);
        assert_eq!(report["upper"], s);
        assert_eq!(report["certified"], s);
        assert_eq!(report["lower_source"], "canonical");

        let out = stc(
            dir.path(),
            &[
                "bounds",
                &format!("T_{k}.pg"),
                "--cts",
                &format!("S_{k}.cts"),
            ],
        );
        assert_eq!(json(&out)["lower"], s);
    }
}

#[test]
fn bounds_report_keys_are_ordered() {
    let dir = tempfile::tempdir().unwrap();
    gen_triangular(dir.path(), 5);
    let out = stc(dir.path(), &["bounds", "T_5.pg"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let at = |key: &str| text.find(&format!("\"{key}\"")).unwrap();
    assert!(at("graph") < at("lower"));
    assert!(at("lower") < at("upper"));
    assert!(at("upper") < at("certified"));
    assert!(at("certified") < at("per_edge"));
}

#[test]
fn bounds_without_system_give_upper_only() {
    let dir = tempfile::tempdir().unwrap();
    let out = stc(
        dir.path(),
        &[
            "gen",
            "--family",
            "rectangular",
            "--rows",
            "3",
            "--cols",
            "4",
        ],
    );
    assert!(out.status.success());
    let report = json(&stc(dir.path(), &["bounds", "R_3x4.pg"]));
    assert!(report["lower"].is_null());
    assert!(report["certified"].is_null());
    assert!(report["upper"].as_u64().unwrap() >= 2);
}

fn write_cycle(dir: &Path, n: usize) {
    let coords = (0..n)
        .map(|i| {
            let a = std::f64::consts::TAU * i as f64 / n as f64;
            [a.cos(), a.sin()]
        })
        .collect();
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let g = PlaneGraph::from_straight_line(coords, &edges).unwrap();
    std::fs::write(dir.join(format!("C_{n}.pg")), write_plane_graph(&g)).unwrap();
}

#[test]
fn exact_values_and_witness() {
    let dir = tempfile::tempdir().unwrap();
    gen_triangular(dir.path(), 4);
    let out = stc(dir.path(), &["exact", "T_4.pg", "--tree-out", "T_4.tree"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["exact"], 4);
    assert!(dir.path().join("T_4.tree").exists());

    write_cycle(dir.path(), 8);
    let out = stc(dir.path(), &["exact", "C_8.pg", "--workers", "2"]);
    assert_eq!(json(&out)["exact"], 2);
}

#[test]
fn exact_reports_budget_exhaustion() {
    let dir = tempfile::tempdir().unwrap();
    gen_triangular(dir.path(), 9);
    let out = stc(dir.path(), &["exact", "T_9.pg", "--limit-nodes", "50"]);
    assert_eq!(out.status.code(), Some(3));
    let report = json(&out);
    assert_eq!(report["status"], "budget_exceeded");
    assert!(report["exact"].is_null());
    assert!(report["lower"].as_u64().unwrap() <= report["upper"].as_u64().unwrap());
}

#[test]
fn table_rows_agree() {
    let dir = tempfile::tempdir().unwrap();
    let out = stc(
        dir.path(),
        &["table", "--family", "triangular", "--range", "2..4"],
    );
    assert!(out.status.success());
    let rows = json(&out);
    let exact: Vec<u64> = rows
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["exact"].as_u64().unwrap())
        .collect();
    assert_eq!(exact, [2, 4, 4]);

    let out = stc(
        dir.path(),
        &[
            "table",
            "--family",
            "triangular",
            "--range",
            "5..14",
            "--format",
            "text",
        ],
    );
    assert!(out.status.success());
    assert!(!String::from_utf8(out.stdout).unwrap().contains("NO"));

    let out = stc(
        dir.path(),
        &["table", "--family", "rectangular", "--range", "2..3"],
    );
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn render_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    gen_triangular(dir.path(), 5);
    let a = stc(
        dir.path(),
        &["render", "T_5.pg", "--labels", "absolute-index"],
    );
    let b = stc(
        dir.path(),
        &["render", "T_5.pg", "--labels", "absolute-index"],
    );
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let svg = stc(
        dir.path(),
        &[
            "render",
            "T_5.pg",
            "--labels",
            "ibot:bottom",
            "--format",
            "svg",
        ],
    );
    let svg = String::from_utf8(svg.stdout).unwrap();
    assert!(svg.contains(">7</text>"));

    let out = stc(dir.path(), &["render", "T_5.pg", "--labels", "sideways"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn malformed_graph_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("bad.pg"),
        "pg 2 1\nouter 0\nrot 0: 0\nrot 1: 0\nedge 0 0 1 0 1\n",
    )
    .unwrap();
    let out = stc(dir.path(), &["bounds", "bad.pg"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8(out.stderr).unwrap().contains("error"));
}

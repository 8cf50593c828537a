use std::fs;
use std::process::Command;

fn linlay() -> Command {
    Command::new(env!("CARGO_BIN_EXE_linlay"))
}

#[test]
fn gen_product_layout_verify_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let p = |name: &str| dir.path().join(name);

    let out = linlay()
        .args(["gen", "hexgrid", "--n", "4", "-o"])
        .arg(p("h4.graph"))
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "16 vertices, 33 edges\n");

    let out = linlay()
        .args(["gen", "star", "--b", "9", "-o"])
        .arg(p("s9.graph"))
        .output()
        .unwrap();
    assert!(out.status.success());

    let out = linlay()
        .args(["product", "--op", "cartesian"])
        .arg(p("s9.graph"))
        .arg(p("h4.graph"))
        .arg("-o")
        .arg(p("g.graph"))
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "160 vertices, 474 edges\n");

    let out = linlay()
        .args(["layout", "fourqueue", "--b", "9", "--n", "4", "-o"])
        .arg(p("L.layout"))
        .output()
        .unwrap();
    assert!(out.status.success());

    let out = linlay()
        .args(["verify", "--graph"])
        .arg(p("g.graph"))
        .arg("--layout")
        .arg(p("L.layout"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "valid, 4 queues\n");
}

#[test]
fn verify_reports_violations_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.graph");
    let layout = dir.path().join("l.layout");
    fs::write(&graph, "graph 4\ne 0 2\ne 1 3\n").unwrap();
    fs::write(
        &layout,
        "layout stack 1\norder 0 1 2 3\npage 0 2 1\npage 1 3 1\n",
    )
    .unwrap();
    let out = linlay()
        .arg("verify")
        .arg("--graph")
        .arg(&graph)
        .arg("--layout")
        .arg(&layout)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("cross"));
    assert!(stdout.contains("invalid, 1 violation(s)"));
}

#[test]
fn usage_and_io_errors_exit_2() {
    let out = linlay().args(["gen", "hexgrid", "--n", "4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2)); // missing -o

    let out = linlay()
        .args(["verify", "--graph", "/nonexistent", "--layout", "/nonexistent"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));

    let out = linlay().args(["gen", "hexgrid", "--n", "0", "-o", "/tmp/x"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn refute_produces_certificate_and_trace() {
    let dir = tempfile::tempdir().unwrap();
    let p = |name: &str| dir.path().join(name);

    linlay()
        .args(["gen", "star", "--b", "16", "-o"])
        .arg(p("s16.graph"))
        .output()
        .unwrap();
    linlay()
        .args(["gen", "hexgrid", "--n", "3", "-o"])
        .arg(p("h3.graph"))
        .output()
        .unwrap();
    linlay()
        .args(["product", "--op", "cartesian"])
        .arg(p("s16.graph"))
        .arg(p("h3.graph"))
        .arg("-o")
        .arg(p("g.graph"))
        .output()
        .unwrap();

    // claimed 1-stack layout: identity order, every edge on page 1; the
    // grid diagonals force same-page crossings
    let graph_text = fs::read_to_string(p("g.graph")).unwrap();
    let mut layout_text = String::from("layout stack 1\norder");
    for v in 0..17 * 9 {
        layout_text.push_str(&format!(" {v}"));
    }
    layout_text.push('\n');
    for line in graph_text.lines() {
        if let Some(rest) = line.strip_prefix("e ") {
            layout_text.push_str(&format!("page {rest} 1\n"));
        }
    }
    fs::write(p("claim.layout"), layout_text).unwrap();

    let out = linlay()
        .args(["refute", "--graph"])
        .arg(p("g.graph"))
        .arg("--layout")
        .arg(p("claim.layout"))
        .args(["--s", "1", "--trace"])
        .arg(p("run.trace"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("certificate:"));
    let trace = fs::read_to_string(p("run.trace")).unwrap();
    assert!(trace.starts_with("trace b 16 n 3 s 1"));
    assert!(trace.contains("outcome certificate"));
}

#[test]
fn render_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let p = |name: &str| dir.path().join(name);

    linlay()
        .args(["gen", "hexgrid", "--n", "3", "-o"])
        .arg(p("h3.graph"))
        .output()
        .unwrap();
    linlay()
        .args(["layout", "strictqueue", "--n", "3", "-o"])
        .arg(p("h3.layout"))
        .output()
        .unwrap();
    for name in ["a.svg", "b.svg"] {
        let out = linlay()
            .args(["render", "--graph"])
            .arg(p("h3.graph"))
            .arg("--layout")
            .arg(p("h3.layout"))
            .arg("-o")
            .arg(p(name))
            .output()
            .unwrap();
        assert!(out.status.success());
    }
    let a = fs::read(p("a.svg")).unwrap();
    let b = fs::read(p("b.svg")).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn exact_cli_prints_count() {
    let dir = tempfile::tempdir().unwrap();
    let p = |name: &str| dir.path().join(name);
    linlay()
        .args(["gen", "complete", "--n", "4", "-o"])
        .arg(p("k4.graph"))
        .output()
        .unwrap();
    let out = linlay()
        .args(["exact", "--graph"])
        .arg(p("k4.graph"))
        .args(["--kind", "stack", "-o"])
        .arg(p("k4.layout"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.starts_with("2 stacks"), "got: {stdout}");

    let out = linlay()
        .args(["verify", "--graph"])
        .arg(p("k4.graph"))
        .arg("--layout")
        .arg(p("k4.layout"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

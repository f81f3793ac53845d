use std::path::Path;
use std::process::{Command, Output};

fn maxedge(args: &[&str], stdin: Option<&str>) -> Output {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_maxedge"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.unwrap_or("").as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn first_line(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).lines().next().unwrap_or("").to_string()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

const C5: &str = "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n";
const K13: &str = "p edge 4 3\ne 1 2\ne 1 3\ne 1 4\n";
const K4: &str = "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";

#[test]
fn solve_cycle_and_verify_witness() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c5.graph", C5);
    let w = dir.path().join("c5.coloring");
    let o = maxedge(&["solve", "--k", "5", "--out", w.to_str().unwrap(), &g], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(first_line(&o), "YES k=5");
    let o = maxedge(&["verify", &g, w.to_str().unwrap()], None);
    assert_eq!(first_line(&o), "VALID colors=5");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn solve_no_instance() {
    let o = maxedge(&["solve", "--k", "3", "-"], Some(K13));
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(first_line(&o), "NO");
}

#[test]
fn verify_reports_center() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "k13.graph", K13);
    let c = write(dir.path(), "bad.coloring", "s coloring 3\nl 1 2 1\nl 1 3 2\nl 1 4 3\n");
    let o = maxedge(&["verify", "--q", "2", &g, &c], None);
    assert_eq!(o.status.code(), Some(1));
    let text = String::from_utf8_lossy(&o.stdout);
    assert_eq!(text, "INVALID\nviolations: 1\n");
}

#[test]
fn sigma_of_k4() {
    let o = maxedge(&["sigma", "-"], Some(K4));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(first_line(&o), "sigma=3");
}

#[test]
fn sigma_refuses_large_graphs() {
    let k6: String = {
        let mut s = String::from("p edge 6 15\n");
        for u in 1..=6 {
            for v in u + 1..=6 {
                s.push_str(&format!("e {u} {v}\n"));
            }
        }
        s
    };
    let o = maxedge(&["sigma", "-"], Some(&k6));
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_maxedge"))
        .args(["sigma", "--edge-limit", "15", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .and_then(|mut c| {
            use std::io::Write;
            c.stdin.take().unwrap().write_all(k6.as_bytes())?;
            c.wait_with_output()
        })
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let o = Command::new(env!("CARGO_BIN_EXE_maxedge"))
        .args(["sigma", "/nonexistent/graph"])
        .env("MEC_EDGE_LIMIT", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_and_format_errors() {
    assert_eq!(maxedge(&["solve"], None).status.code(), Some(2));
    assert_eq!(maxedge(&["frobnicate"], None).status.code(), Some(2));
    let o = maxedge(&["solve", "--k", "2", "-"], Some("p edge 2 1\ne 1 1\n"));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn two_factor_pipeline() {
    let g = maxedge(&["gen", "two-factor", "--n", "6", "--seed", "3"], None);
    assert_eq!(g.status.code(), Some(0));
    let text = String::from_utf8(g.stdout).unwrap();
    let o = maxedge(&["solve", "--k", "6", "-"], Some(&text));
    assert_eq!(first_line(&o), "YES k=6");
    let again = maxedge(&["gen", "two-factor", "--n", "6", "--seed", "3"], None);
    assert_eq!(String::from_utf8(again.stdout).unwrap(), text);
}

#[test]
fn random_generation_is_deterministic() {
    let a = maxedge(&["gen", "random", "--n", "9", "--p", "0.3", "--seed", "42"], None);
    let b = maxedge(&["gen", "random", "--n", "9", "--p", "0.3", "--seed", "42"], None);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(maxedge(&["gen", "random", "--n", "3", "--p", "2"], None).status.code(), Some(2));
}

#[test]
fn kernel_solve_lift_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    // K_{2,20}: 20 shared leaves on two hubs
    let mut body = String::new();
    for l in 3..=22 {
        body.push_str(&format!("e 1 {l}\ne 2 {l}\n"));
    }
    let g = write(dir.path(), "hub.graph", &format!("p edge 22 40\n{body}"));
    let reduced = dir.path().join("hub.kernel");
    let o = maxedge(&["kernel", "--rule", "standard", "--k", "4", "--out", reduced.to_str().unwrap(), &g], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(first_line(&o), "REDUCED n=14 m=24 k=4");
    let lift = format!("{}.lift", reduced.display());
    assert!(Path::new(&lift).exists());

    let w = dir.path().join("reduced.coloring");
    let o = maxedge(&["solve", "--k", "4", "--out", w.to_str().unwrap(), reduced.to_str().unwrap()], None);
    assert_eq!(first_line(&o), "YES k=4");
    let lifted = dir.path().join("lifted.coloring");
    let o = maxedge(
        &[
            "lift",
            "--original",
            &g,
            "--reduced",
            reduced.to_str().unwrap(),
            "--lifting",
            &lift,
            "--out",
            lifted.to_str().unwrap(),
            w.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = maxedge(&["verify", &g, lifted.to_str().unwrap()], None);
    assert_eq!(first_line(&o), "VALID colors=4");

    let o = maxedge(&["solve", "--k", "4", "--kernelize", "--threads", "2", &g], None);
    assert_eq!(first_line(&o), "YES k=4");
}

#[test]
fn dual_kernel_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let p7 = "p edge 7 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 7\n";
    let g = write(dir.path(), "p7.graph", p7);
    let reduced = dir.path().join("p7.kernel");
    let o = maxedge(&["kernel", "--rule", "dual", "--k", "1", "--out", reduced.to_str().unwrap(), &g], None);
    assert_eq!(first_line(&o), "REDUCED n=3 m=2 k=1");
    let w = dir.path().join("w.coloring");
    maxedge(&["sigma", "--out", w.to_str().unwrap(), reduced.to_str().unwrap()], None);
    let lift = format!("{}.lift", reduced.display());
    let o = maxedge(
        &["lift", "--original", &g, "--reduced", reduced.to_str().unwrap(), "--lifting", &lift, w.to_str().unwrap()],
        None,
    );
    assert_eq!(first_line(&o), "LIFTED colors=6");

    let star = "p edge 11 10\n".to_string() + &(2..=11).map(|v| format!("e 1 {v}\n")).collect::<String>();
    let o = maxedge(&["kernel", "--rule", "dual", "--k", "1", "-"], Some(&star));
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(first_line(&o), "NO");
}

#[test]
fn c4free_kernel_refuses_cycles() {
    let c4 = "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n";
    let o = maxedge(&["kernel", "--rule", "c4free", "--k", "3", "-"], Some(c4));
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("4-cycle"));
}

#[test]
fn approx_witness_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "k4.graph", K4);
    let w = dir.path().join("a.coloring");
    let o = maxedge(&["approx", "--out", w.to_str().unwrap(), &g], None);
    assert_eq!(first_line(&o), "LOWER-BOUND colors=3 matching=2");
    let o = maxedge(&["verify", &g, w.to_str().unwrap()], None);
    assert_eq!(first_line(&o), "VALID colors=3");
}

#[test]
fn mcis_generation() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "x.mcis", "p mcis 2 1 2\nv 1 1\nv 2 2\ne 1 2\n");
    let o = maxedge(&["gen", "mcis", &m], None);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("p edge 10 11\n"));
    assert!(text.contains("f 3 2\n") && text.ends_with("t 3\n"));
    let o = maxedge(&["sigma", "--edge-limit", "11", "-"], Some(&text));
    // no multicolored independent set: fewer than 3 colors
    assert_eq!(first_line(&o), "sigma=2");

    let o = maxedge(&["gen", "mcis", "--pendant", &m], None);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.ends_with("t 10\n"));
}

use std::path::PathBuf;

use qgrass::quiver::parse_quiver_file;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let argv = std::iter::once("qgrass".to_string()).chain(args.iter().map(|a| {
        if a.ends_with(".quiver") || a.ends_with(".txt") {
            fixture(a)
        } else {
            a.to_string()
        }
    }));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = qgrass::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn info_on_a2() {
    let (code, out, _) = run(&["info", "a2.quiver"]);
    assert_eq!(code, 0);
    assert!(out.contains("paths: 3\n"));
    assert!(out.contains("e = (0,0,1)\n"));
    assert!(out.contains("dim X = 1\n"));
    assert!(out.contains("dim M = (1,1,2)\n"));
}

#[test]
fn info_omits_dimension_with_parallel_paths() {
    let (code, out, _) = run(&["info", "k2.quiver"]);
    assert_eq!(code, 0);
    assert!(out.contains("parallel paths: yes\n"));
    assert!(!out.contains("dim X"));
}

#[test]
fn info_on_a_point() {
    let (_, out, _) = run(&["info", "point.quiver"]);
    assert!(out.contains("dim X = 0\n"));
}

#[test]
fn poincare_on_a3() {
    let (code, out, _) = run(&["poincare", "a3.quiver"]);
    assert_eq!(code, 0);
    assert_eq!(out, "coefficients: 1 3 1\npoincare: 1 + 3*q + q^2\n");
}

#[test]
fn count_with_parallel_paths() {
    let (code, out, _) = run(&["count", "k2.quiver", "--q", "2,3,5,7,11"]);
    assert_eq!(code, 0);
    assert!(out.contains("q\tcount\n2\t43\n"));
    assert!(out.ends_with("polynomial: 1 + 5*q + 6*q^2 + q^3\n"));
}

#[test]
fn count_with_too_few_primes() {
    let (code, _, err) = run(&["count", "k2.quiver", "--q", "2"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error: counting:"));

    // Gr(2,4) has degree 4; three primes only allow a line through two points.
    let (code, out, _) = run(&["count", "arrow22.quiver", "--q", "2,3,5"]);
    assert_eq!(code, 0);
    assert!(out.contains("5\t806\n"));
    assert!(out.contains("inconclusive: no polynomial of degree at most 1 fits"));
}

#[test]
fn count_refuses_over_cap() {
    let (code, _, err) = run(&["count", "k2.quiver", "--q", "2,3,5,7,11", "--cap", "10"]);
    assert_eq!(code, 1);
    assert!(err.contains("exceeds the cap of 10"));
}

#[test]
fn motive_flags_the_top_entry() {
    let (code, out, _) = run(&["motive", "a2.quiver"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("(1,1,1) : 1 + L  [top]\n"));
    assert_eq!(out.lines().count(), 8);
}

#[test]
fn check_certifies_a3_and_refuses_d4() {
    let (code, out, _) = run(&["check", "a3.quiver"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("smooth: certified at 6 support vertices, tangent dim 2\n"));

    let (code, out, err) = run(&["check", "d4.quiver", "--list"]);
    assert_eq!(code, 1);
    assert!(out
        .contains("violation: a: {2.1}; b: {2.1}; c: {2.1}; a.b: {2.1, 3.1}; a.c: {2.1, 4.1} ext = (4,1,0)"));
    assert!(err.contains("1 of 13 fixed points fail"));

    let (code, out, _) = run(&["check", "d4_leaf_off.quiver"]);
    assert_eq!(code, 0);
    assert!(out.contains("smooth: certified at 8 support vertices, tangent dim 4"));
}

#[test]
fn paths_mode_refuses_cells() {
    assert_eq!(run(&["poincare", "k2.quiver"]).0, 1);
    assert_eq!(run(&["--mode", "paths", "check", "a3.quiver"]).0, 1);
    assert_eq!(run(&["--mode", "tree", "info", "k2.quiver"]).0, 2);
    assert_eq!(run(&["--mode", "paths", "fixed-points", "a3.quiver"]).0, 0);
}

#[test]
fn fixed_point_listing() {
    let (_, out, _) = run(&["fixed-points", "a2.quiver", "--list"]);
    assert_eq!(out, "fixed points: 2\na: {2.1}\na: {1.1}\n");
    let (_, out, _) = run(&["--machine", "fixed-points", "k2.quiver"]);
    assert_eq!(out, "fixed_points=13\n");
}

#[test]
fn embed_a2() {
    let (code, out, _) = run(&["embed", "a2.quiver", "--rep", "a2_rep.txt"]);
    assert_eq!(code, 0);
    assert_eq!(out, "point: valid\ne = (0,0,1)\na: span{(1,7)}\n");
}

#[test]
fn input_errors_exit_two() {
    let dir = std::env::temp_dir().join(format!("qgrass-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let write = |name: &str, body: &str| {
        let p = dir.join(name);
        std::fs::write(&p, body).unwrap();
        p.display().to_string()
    };
    let cyclic = write("cyclic.quiver", "vertex 1\narrow a 1 1\ndim 1 1\n");
    let nodim = write("nodim.quiver", "vertex 1\nvertex 2\narrow a 1 2\ndim 1 1\n");
    let badrep = write("bad.txt", "map a 2 1 1 2\n");
    for args in [
        vec!["info".to_string(), cyclic],
        vec!["info".to_string(), nodim],
        vec![
            "embed".to_string(),
            fixture("a2.quiver"),
            "--rep".to_string(),
            badrep,
        ],
        vec!["info".to_string(), fixture("missing.quiver")],
        vec!["frobnicate".to_string()],
        vec![
            "count".to_string(),
            fixture("a2.quiver"),
            "--q".to_string(),
            "4,5,7".to_string(),
        ],
    ] {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = qgrass::cli::run(
            std::iter::once("qgrass".to_string()).chain(args.clone()),
            &mut out,
            &mut err,
        );
        assert_eq!(code, 2, "{args:?}");
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn fixtures_round_trip() {
    for entry in std::fs::read_dir(fixture("")).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "quiver") {
            let parsed = parse_quiver_file(&std::fs::read_to_string(&path).unwrap()).unwrap();
            assert_eq!(
                parse_quiver_file(&parsed.to_text()).unwrap(),
                parsed,
                "{}",
                path.display()
            );
        }
    }
}

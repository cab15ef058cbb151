// The command line driven in-process: each stage reads the previous stage's
// JSON, and the last stage writes a certificate.
//
//     cargo run --example cli_pipeline
//
// The same pipeline from a shell:
//
//     sesqui sts construct 13 | sesqui sts blockgraph | sesqui classify

fn sesqui(args: &[&str], stdin: &str) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("sesqui").chain(args.iter().copied());
    let code = sesqui::cli::run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn main() {
    let (_, sts) = sesqui(&["sts", "construct", "13"], "");
    let (_, graph) = sesqui(&["sts", "blockgraph"], &sts);
    let (code, report) = sesqui(&["classify"], &graph);
    assert_eq!(code, 0);
    println!("classify: {}", report.trim());

    let (_, fig3) = sesqui(&["gallery", "fig3"], "");
    let (_, eigen) = sesqui(&["hoffman", "eigen"], &fig3);
    assert_eq!(eigen.trim(), r#"{"lambda_min":-4.0}"#);
    println!("hoffman eigen: {}", eigen.trim());

    let dir = std::env::temp_dir().join(format!("sesqui-example-{}", std::process::id()));
    let (_, cc) = sesqui(&["construct", "cycle-complement", "4,4"], "");
    let out = dir.to_str().unwrap();
    let (code, found) = sesqui(&["--out", out, "--no-timestamp", "rep", "find"], &cc);
    assert_eq!(code, 0);
    println!("rep find: {}", found.trim());
    for entry in std::fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        if path.to_string_lossy().ends_with(".cert.json") {
            println!("certificate {}:\n{}", path.display(), std::fs::read_to_string(&path).unwrap());
        }
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

//! The sample session in the command-line chapter is real output.

const CHAPTER: &str = include_str!("../../../book/src/cli.md");

#[test]
fn enumerate_sample_matches() {
    let prompt = "$ atlas enumerate --c2 3\n";
    let start = CHAPTER.find(prompt).expect("sample in chapter") + prompt.len();
    let shown = &CHAPTER[start..start + CHAPTER[start..].find("...\n").unwrap()];
    let out = sheaf_atlas_cli::run(["atlas", "enumerate", "--c2", "3"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with(shown), "chapter:\n{shown}\nactual:\n{}", out.stdout);
}

#[test]
fn csv_header_matches() {
    let header = sheaf_atlas_cli::CSV_HEADER.join(",");
    assert!(CHAPTER.contains(&format!("\n{header}\n")));
}

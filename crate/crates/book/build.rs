//! Copies every Rust code block of the guide into `$OUT_DIR/snippets.rs` as
//! a test function named after its chapter and line, so the snippets also run
//! as ordinary tests next to the rustdoc ones.

use std::fmt::Write;
use std::path::Path;

use pulldown_cmark::{CodeBlockKind, Event, Parser, Tag, TagEnd};

fn runnable(info: &str) -> bool {
    let mut attrs = info.split(',').map(str::trim);
    attrs.next() == Some("rust") && attrs.all(|a| !matches!(a, "ignore" | "no_run" | "compile_fail" | "should_panic"))
}

/// Lines starting with `# ` are hidden in the rendered book but still run.
fn unhide(code: &str) -> String {
    code.lines()
        .map(|l| match l.strip_prefix("# ").or(if l == "#" { Some("") } else { None }) {
            Some(rest) => rest,
            None => l,
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn main() {
    let src = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../book/src");
    println!("cargo:rerun-if-changed={}", src.display());
    let mut chapters: Vec<_> = std::fs::read_dir(&src)
        .expect("book sources")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "md"))
        .collect();
    chapters.sort();

    let mut out = String::new();
    for path in chapters {
        println!("cargo:rerun-if-changed={}", path.display());
        let text = std::fs::read_to_string(&path).unwrap();
        let stem = path.file_stem().unwrap().to_str().unwrap().replace('-', "_");
        let mut current: Option<(usize, String)> = None;
        for (event, range) in Parser::new(&text).into_offset_iter() {
            match event {
                Event::Start(Tag::CodeBlock(CodeBlockKind::Fenced(info))) if runnable(&info) => {
                    let line = text[..range.start].lines().count() + 1;
                    current = Some((line, String::new()));
                }
                Event::Text(t) => {
                    if let Some((_, code)) = current.as_mut() {
                        code.push_str(&t);
                    }
                }
                Event::End(TagEnd::CodeBlock) => {
                    if let Some((line, code)) = current.take() {
                        let body = unhide(&code);
                        writeln!(out, "#[test]\nfn {stem}_line_{line}() {{").unwrap();
                        if body.contains("fn main()") {
                            writeln!(out, "{body}\nmain();\n}}\n").unwrap();
                        } else {
                            writeln!(out, "{body}\n}}\n").unwrap();
                        }
                    }
                }
                _ => {}
            }
        }
    }
    let dest = Path::new(&std::env::var("OUT_DIR").unwrap()).join("snippets.rs");
    std::fs::write(dest, out).unwrap();
}

//! Compiles and runs a C program against the generated header and the static library.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "ratrig.h"

int main(void) {
    RatrigContext *ctx = NULL;
    if (ratrig_context_new("rational", "minkowski", &ctx) != RATRIG_STATUS_OK) return 10;
    char *q = NULL;
    if (ratrig_quadrance(ctx, "[\"2\",\"-5\",\"4\"]", &q) != RATRIG_STATUS_OK) return 11;
    printf("%s\n", q);
    ratrig_string_free(q);

    char *json = NULL;
    RatrigStatus st = ratrig_tripod(ctx, "[[\"1\",\"0\",\"0\"],[\"0\",\"1\",\"0\"],[\"1\",\"1\",\"0\"]]", &json);
    if (st != RATRIG_STATUS_DEGENERATE_INPUT || json != NULL) return 12;
    char *err = ratrig_last_error();
    printf("%s\n", err);
    ratrig_string_free(err);
    ratrig_context_free(ctx);
    return 0;
}
"#;

fn library_dir() -> PathBuf {
    // target/<profile>/deps/<test> -> target/<profile>
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_and_runs() {
    let lib = library_dir().join("libratrig_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let src = dir.join("ratrig_abi.c");
    let bin = dir.join("ratrig_abi");
    std::fs::write(&src, PROGRAM).unwrap();

    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-o"])
        .arg(&bin)
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .status()
        .expect("C compiler available");
    assert!(status.success());

    let out = Command::new(&bin).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "13");
    assert!(lines[1].contains("degenerate"), "{text}");
}

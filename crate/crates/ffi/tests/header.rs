use std::path::{Path, PathBuf};
use std::process::Command;

fn header() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include/liftcheck.h")
}

#[test]
fn header_declares_the_api() {
    let h = std::fs::read_to_string(header()).unwrap();
    for name in [
        "typedef struct LcRepresentation LcRepresentation;",
        "LC_STATUS_OK = 0",
        "lc_last_error(void)",
        "lc_rep_parse(const char *src, struct LcRepresentation **out)",
        "lc_check_lift(",
        "lc_classify(",
        "lc_string_free(char *s)",
    ] {
        assert!(h.contains(name), "missing {name}");
    }
}

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "liftcheck.h"

int main(void) {
    LcRepresentation *rep = NULL;
    if (lc_rep_witness("C3xC3", &rep) != LC_STATUS_OK) return 1;
    LcLiftResult *res = NULL;
    if (lc_check_lift(rep, &res) != LC_STATUS_OK) return 2;
    bool liftable = true;
    lc_lift_result_is_liftable(res, &liftable);
    if (liftable) return 3;
    lc_lift_result_free(res);
    lc_rep_free(rep);
    if (lc_rep_parse("p 9\n", &rep) != LC_STATUS_PARSE) return 4;
    if (strstr(lc_last_error(), "line 1") == NULL) return 5;
    puts("ok");
    return 0;
}
"#;

/// Compiles a C program against the header and the static library.
#[test]
fn c_program_links() {
    // target/<profile>/deps/<test binary>
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libliftcheck_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!(
            "skipping: no static library at {} or no C compiler",
            lib.display()
        );
        return;
    }
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR"));
    let src = dir.join("smoke.c");
    let bin = dir.join("smoke");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(header().parent().unwrap())
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}

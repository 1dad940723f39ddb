//! Checks that the committed C header is in sync and actually compiles
//! as C when a C compiler is available.

use std::path::Path;
use std::process::Command;

fn header_path() -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include/hdl.h")
}

#[test]
fn header_declares_the_surface() {
    let text = std::fs::read_to_string(header_path()).expect("include/hdl.h exists");
    for decl in [
        "typedef struct HdlDivisorClass HdlDivisorClass;",
        "typedef struct HdlOrbitReport HdlOrbitReport;",
        "HDL_STATUS_OK = 0",
        "hdl_d2_theorem",
        "hdl_d2_pipeline",
        "hdl_d3",
        "hdl_class_to_json",
        "hdl_orbit_run",
        "hdl_hurwitz_count",
        "hdl_string_free",
        "hdl_last_error_message",
    ] {
        assert!(text.contains(decl), "header is missing {decl:?}");
    }
}

#[test]
fn header_compiles_as_c() {
    let cc = ["cc", "gcc", "clang"]
        .into_iter()
        .find(|cc| Command::new(cc).arg("--version").output().is_ok());
    let Some(cc) = cc else {
        eprintln!("no C compiler found, skipping");
        return;
    };
    let dir = std::env::temp_dir().join(format!("hdl-header-check-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let smoke = dir.join("smoke.c");
    std::fs::write(
        &smoke,
        r#"
#include "hdl.h"

int use_the_surface(void) {
    HdlDivisorClass *cls = 0;
    char *json = 0;
    if (hdl_d2_theorem(3, &cls) != HDL_STATUS_OK) return 1;
    if (hdl_class_to_json(cls, &json) != HDL_STATUS_OK) return 2;
    hdl_string_free(json);
    hdl_class_free(cls);
    return 0;
}
"#,
    )
    .unwrap();
    let out = Command::new(cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-fsyntax-only")
        .arg("-I")
        .arg(header_path().parent().unwrap())
        .arg(&smoke)
        .output()
        .expect("compiler runs");
    assert!(
        out.status.success(),
        "header failed to compile:\n{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let _ = std::fs::remove_dir_all(&dir);
}

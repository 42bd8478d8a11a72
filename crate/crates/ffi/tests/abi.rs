use std::ffi::CStr;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use lecture_hall_ffi::*;

fn message(status: LhStatus) -> &'static str {
    unsafe { CStr::from_ptr(lh_status_message(status)) }.to_str().unwrap()
}

fn new_partition(parts: &[i64]) -> Result<*mut LhPartition, LhStatus> {
    let mut out = ptr::null_mut();
    match unsafe { lh_partition_new(parts.as_ptr(), parts.len(), &mut out) } {
        LhStatus::Ok => Ok(out),
        status => Err(status),
    }
}

#[test]
fn running_example_through_the_abi() {
    unsafe {
        let lambda = new_partition(&[0, 1, 4, 8, 14, 30]).unwrap();
        let mut abacus = ptr::null_mut();
        assert_eq!(lh_encode(lambda, &mut abacus), LhStatus::Ok);
        assert_eq!(lh_abacus_n(abacus), 6);
        let mut beads = [0i64; 6];
        assert_eq!(lh_abacus_beads(abacus, beads.as_mut_ptr(), beads.len()), LhStatus::Ok);
        assert_eq!(beads, [-2, 2, 8, 12, 16, 30]);

        let mut flag = 9u8;
        assert_eq!(lh_abacus_is_bead(abacus, 12, &mut flag), LhStatus::Ok);
        assert_eq!(flag, 1);
        assert_eq!(lh_abacus_is_bead(abacus, 13, &mut flag), LhStatus::Ok);
        assert_eq!(flag, 0);

        let mut bounded = ptr::null_mut();
        assert_eq!(lh_to_bounded(abacus, &mut bounded), LhStatus::Ok);
        let len = lh_bounded_len(bounded);
        let mut parts = vec![0i64; len];
        assert_eq!(lh_bounded_parts(bounded, parts.as_mut_ptr(), len), LhStatus::Ok);
        assert_eq!(parts, [2, 4, 6, 7, 8, 9, 9, 12]);
        let mut w = 0;
        assert_eq!(lh_bounded_weight(bounded, &mut w), LhStatus::Ok);
        assert_eq!(w, 57);

        let mut rebuilt = ptr::null_mut();
        assert_eq!(lh_from_bounded(bounded, &mut rebuilt), LhStatus::Ok);
        let mut decoded = ptr::null_mut();
        assert_eq!(lh_decode(rebuilt, &mut decoded), LhStatus::Ok);
        let mut back = [0i64; 6];
        assert_eq!(lh_partition_parts(decoded, back.as_mut_ptr(), 6), LhStatus::Ok);
        assert_eq!(back, [0, 1, 4, 8, 14, 30]);
        assert_eq!(lh_partition_weight(decoded, &mut w), LhStatus::Ok);
        assert_eq!(w, 57);

        lh_partition_free(decoded);
        lh_abacus_free(rebuilt);
        lh_bounded_free(bounded);
        lh_abacus_free(abacus);
        lh_partition_free(lambda);
    }
}

#[test]
fn error_codes() {
    assert_eq!(new_partition(&[0, 2, 2]).unwrap_err(), LhStatus::InvalidPartition);
    assert_eq!(new_partition(&[]).unwrap_err(), LhStatus::InvalidPartition);
    assert_eq!(new_partition(&[1, i64::MAX]).unwrap_err(), LhStatus::Overflow);
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(lh_partition_new(ptr::null(), 3, &mut out), LhStatus::NullPointer);
        assert!(out.is_null());
        assert_eq!(
            lh_partition_new([0i64].as_ptr(), 1, ptr::null_mut()),
            LhStatus::NullPointer
        );

        let mut abacus = ptr::null_mut();
        assert_eq!(
            lh_abacus_new(2, [1i64, 4].as_ptr(), 2, &mut abacus),
            LhStatus::InvalidAbacus
        );
        assert!(abacus.is_null());

        let mut bounded = ptr::null_mut();
        assert_eq!(
            lh_bounded_new(2, [1i64, 5].as_ptr(), 2, &mut bounded),
            LhStatus::InvalidPartition
        );
        assert_eq!(lh_bounded_new(2, ptr::null(), 0, &mut bounded), LhStatus::Ok);
        assert_eq!(lh_bounded_len(bounded), 0);
        assert_eq!(lh_bounded_parts(bounded, ptr::null_mut(), 0), LhStatus::Ok);
        lh_bounded_free(bounded);

        let lambda = new_partition(&[1, 2, 4]).unwrap();
        let mut small = [0i64; 2];
        assert_eq!(
            lh_partition_parts(lambda, small.as_mut_ptr(), 2),
            LhStatus::BufferTooSmall
        );
        assert_eq!(small, [0, 0]);
        lh_partition_free(lambda);

        assert_eq!(lh_partition_len(ptr::null()), 0);
        assert_eq!(lh_encode(ptr::null(), &mut abacus), LhStatus::NullPointer);
        lh_partition_free(ptr::null_mut());
        lh_abacus_free(ptr::null_mut());
    }
}

#[test]
fn verify_reports() {
    let mut report = LhVerifyReport::default();
    unsafe {
        assert_eq!(lh_verify(3, 20, 0, &mut report), LhStatus::Ok);
        assert_eq!(report.mismatch, 0);
        assert!(report.compared > 0);
        assert_eq!(lh_verify(2, 12, 1, &mut report), LhStatus::Ok);
        assert_eq!(lh_verify(0, 12, 1, &mut report), LhStatus::InvalidPartition);
        assert_eq!(lh_verify(2, 12, 1, ptr::null_mut()), LhStatus::NullPointer);
    }
}

#[test]
fn status_messages_are_distinct() {
    let all = [
        LhStatus::Ok,
        LhStatus::NullPointer,
        LhStatus::InvalidPartition,
        LhStatus::InvalidAbacus,
        LhStatus::BufferTooSmall,
        LhStatus::Overflow,
        LhStatus::Mismatch,
        LhStatus::Panic,
    ];
    let texts: std::collections::BTreeSet<&str> = all.iter().map(|&s| message(s)).collect();
    assert_eq!(texts.len(), all.len());
    assert_eq!(message(LhStatus::Ok), "ok");
}

fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(crate_dir().join("include/lecture_hall.h")).unwrap();
    let source = std::fs::read_to_string(crate_dir().join("src/lib.rs")).unwrap();
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 20, "{exports:?}");
    for name in exports {
        assert!(
            header.contains(&format!(" {name}(")) || header.contains(&format!("*{name}(")),
            "{name}"
        );
    }
    for name in [
        "typedef struct LhPartition LhPartition;",
        "LH_STATUS_BUFFER_TOO_SMALL = 4",
        "LhVerifyReport;",
    ] {
        assert!(header.contains(name), "{name}");
    }
}

/// `target/<profile>`, two levels above the test executable in `deps/`.
fn profile_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_static_library() {
    let archive = profile_dir().join("liblecture_hall_ffi.a");
    if !archive.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler or static library at {}", archive.display());
        return;
    }
    let binary = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("lecture_hall_smoke");
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(crate_dir().join("include"))
        .arg(crate_dir().join("tests/c/smoke.c"))
        .arg(&archive)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&binary)
        .status()
        .unwrap();
    assert!(status.success(), "cc failed");
    let out = Command::new(&binary).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0].trim(), "-2 2 8 12 16 30");
    assert_eq!(lines[1].trim(), "2 4 6 7 8 9 9 12");
    assert_eq!(lines[2], "57");
    assert_eq!(lines[4], "invalid partition");
}

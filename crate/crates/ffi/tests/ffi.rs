use std::ffi::{CStr, CString};
use std::ptr;

use nek_ffi::*;

fn last_error() -> String {
    let p = nek_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn take(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { nek_string_free(s) };
    out
}

const EVEN4: &str =
    "gse\nstates s1 s2 s3 s4\nevent e12 = 1 1 0 0\nevent e13 = 1 0 1 0\nevent e14 = 1 0 0 1\n\
event e23 = 0 1 1 0\nevent e24 = 0 1 0 1\nevent e34 = 0 0 1 1\n";

#[test]
fn classify_even4() {
    let text = CString::new(EVEN4).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { nek_gse_parse(text.as_ptr(), false, &mut g) },
        NekStatus::Ok
    );
    assert!(nek_last_error_message().is_null());
    assert_eq!(unsafe { nek_gse_member_count(g) }, 8);
    assert_eq!(unsafe { nek_gse_state_count(g) }, 4);
    assert_eq!(take(unsafe { nek_gse_write(g) }), EVEN4);

    let mut r = ptr::null_mut();
    assert_eq!(unsafe { nek_gse_classify(g, 0, &mut r) }, NekStatus::Ok);
    let mut v = NekFlagValue::Inconclusive;
    let name = CString::new("algebra").unwrap();
    assert_eq!(
        unsafe { nek_report_flag(r, name.as_ptr(), &mut v) },
        NekStatus::Ok
    );
    assert_eq!(v, NekFlagValue::True);
    let name = CString::new("prop_U").unwrap();
    assert_eq!(
        unsafe { nek_report_flag(r, name.as_ptr(), &mut v) },
        NekStatus::Ok
    );
    assert_eq!(v, NekFlagValue::False);
    let name = CString::new("no_such_flag").unwrap();
    assert_eq!(
        unsafe { nek_report_flag(r, name.as_ptr(), &mut v) },
        NekStatus::UnknownFlag
    );
    assert!(last_error().contains("no_such_flag"));
    assert_eq!(unsafe { nek_report_exit_code(r) }, 0);
    let machine = take(unsafe { nek_report_machine(r, false) });
    assert!(machine.contains("prop_U=false\n"));
    unsafe {
        nek_report_free(r);
        nek_gse_free(g);
    }
}

#[test]
fn parse_errors_carry_line_numbers() {
    let text = CString::new("gse\nstates s1\nevent x = 5/4\n").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { nek_gse_parse(text.as_ptr(), false, &mut g) },
        NekStatus::ParseError
    );
    assert!(g.is_null());
    assert!(last_error().starts_with("line 3"), "{}", last_error());
}

#[test]
fn null_arguments() {
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { nek_gse_parse(ptr::null(), false, &mut g) },
        NekStatus::NullPointer
    );
    let text = CString::new("gse\nstates s1\n").unwrap();
    assert_eq!(
        unsafe { nek_gse_parse(text.as_ptr(), false, ptr::null_mut()) },
        NekStatus::NullPointer
    );
    let mut r = ptr::null_mut();
    assert_eq!(
        unsafe { nek_gse_classify(ptr::null(), 0, &mut r) },
        NekStatus::NullPointer
    );
    assert_eq!(unsafe { nek_report_exit_code(ptr::null()) }, -1);
    assert_eq!(unsafe { nek_gse_member_count(ptr::null()) }, 0);
    assert!(unsafe { nek_state_set_value(ptr::null(), 0, 0) }.is_null());
    unsafe {
        nek_gse_free(ptr::null_mut());
        nek_string_free(ptr::null_mut());
    }
}

#[test]
fn states_and_embedding() {
    let text = CString::new("poset\nelements 0 a b 1\nprime a b\n").unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { nek_poset_parse(text.as_ptr(), &mut p) },
        NekStatus::Ok
    );
    assert_eq!(unsafe { nek_poset_element_count(p) }, 4);
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { nek_poset_synthesize_states(p, &mut s) },
        NekStatus::Ok
    );
    let n = unsafe { nek_state_set_count(s) };
    assert!(n >= 2);
    assert_eq!(take(unsafe { nek_state_set_value(s, 0, 0) }), "0");
    assert_eq!(take(unsafe { nek_state_set_value(s, 0, 3) }), "1");
    assert!(unsafe { nek_state_set_value(s, n, 0) }.is_null());
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { nek_poset_embed(p, s, &mut g) }, NekStatus::Ok);
    assert_eq!(unsafe { nek_gse_member_count(g) }, 4);
    unsafe {
        nek_gse_free(g);
        nek_state_set_free(s);
        nek_poset_free(p);
    }
}

#[test]
fn impossible_state_set() {
    let text = CString::new("poset\nelements 0 c 1\nprime c c\n").unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { nek_poset_parse(text.as_ptr(), &mut p) },
        NekStatus::Ok
    );
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { nek_poset_synthesize_states(p, &mut s) },
        NekStatus::Impossible
    );
    assert_eq!(last_error(), "no-proper-set c");
    assert!(s.is_null());
    unsafe { nek_poset_free(p) };
}

#[test]
fn header_declares_every_export() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/nek.h")).unwrap();
    let source =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 15);
    for name in exports {
        assert!(
            header.contains(&format!("{name}(")),
            "{name} missing from header"
        );
    }
    assert!(header.contains("NEK_STATUS_IMPOSSIBLE = 5"));
}

#[test]
fn header_is_valid_c() {
    let Some(cc) = which_cc() else {
        eprintln!("no C compiler found, header syntax not checked");
        return;
    };
    let dir = tempfile_dir();
    let source = dir.join("check.c");
    std::fs::write(
        &source,
        "#include \"nek.h\"\nint main(void) { return NEK_STATUS_OK; }\n",
    )
    .unwrap();
    let status = std::process::Command::new(cc)
        .args(["-fsyntax-only", "-Wall", "-Werror", "-I"])
        .arg(concat!(env!("CARGO_MANIFEST_DIR"), "/include"))
        .arg(&source)
        .status()
        .unwrap();
    assert!(status.success());
}

fn which_cc() -> Option<&'static str> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| {
            std::process::Command::new(c)
                .arg("--version")
                .output()
                .is_ok()
        })
}

fn tempfile_dir() -> std::path::PathBuf {
    let dir = std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("header-check");
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

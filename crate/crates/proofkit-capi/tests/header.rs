//! Keeps the committed C header in lockstep with the Rust source.

use std::fs;
use std::path::{Path, PathBuf};

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn header_path() -> PathBuf {
    crate_dir().join("include").join("proofkit.h")
}

fn generate() -> String {
    let dir = crate_dir();
    let config = cbindgen::Config::from_file(dir.join("cbindgen.toml"))
        .expect("cbindgen.toml is readable");
    let mut bytes = Vec::new();
    cbindgen::Builder::new()
        .with_crate(&dir)
        .with_config(config)
        .generate()
        .expect("binding generation succeeds")
        .write(&mut bytes);
    String::from_utf8(bytes).expect("cbindgen emits UTF-8")
}

#[test]
fn committed_header_matches_the_source() {
    let committed = fs::read_to_string(header_path())
        .expect("include/proofkit.h exists; regenerate with `cargo test -p proofkit-capi -- --ignored regenerate`");
    assert_eq!(
        committed,
        generate(),
        "include/proofkit.h is stale; run `cargo test -p proofkit-capi -- --ignored regenerate`"
    );
}

#[test]
#[ignore = "writes include/proofkit.h; run explicitly after changing the interface"]
fn regenerate() {
    let path = header_path();
    fs::create_dir_all(path.parent().expect("header sits in include/")).unwrap();
    fs::write(&path, generate()).unwrap();
    println!("wrote {}", Path::new(&path).display());
}

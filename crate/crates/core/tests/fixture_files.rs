//! The drawing files under `fixtures/` match the catalog. Run with
//! `UPDATE_GOLDENS=1` to rewrite them.

use std::fs;
use std::path::PathBuf;

use dyncolor::catalog::fixtures;
use dyncolor::text::{parse_drawing, write_drawing};

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

#[test]
fn fixture_files_match_catalog() {
    let update = std::env::var_os("UPDATE_GOLDENS").is_some();
    for f in fixtures() {
        let path = dir().join(format!("{}.txt", f.name));
        let text = format!("# {}: {}\n{}", f.name, f.description, write_drawing(&f.drawing));
        if update {
            fs::create_dir_all(dir()).unwrap();
            fs::write(&path, &text).unwrap();
        }
        let on_disk = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
        assert_eq!(on_disk, text, "{}", f.name);
        let back = parse_drawing(&on_disk).unwrap();
        assert!(back.is_valid(), "{}", f.name);
        assert_eq!(back, f.drawing, "{}", f.name);
    }
}

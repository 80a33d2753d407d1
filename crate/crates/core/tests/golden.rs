//! Golden analysis reports for the named examples.
//!
//! Set `FINSEMI_UPDATE_GOLDEN=1` to rewrite the files after an intended
//! change, then review the diff.

mod common;

use std::fs;

use finsemi::corpus::Named;
use finsemi::report::{analysis_report, to_json};

#[test]
fn named_reports_match_golden_files() {
    let dir = common::golden_dir();
    let update = std::env::var_os("FINSEMI_UPDATE_GOLDEN").is_some();
    for n in Named::ALL {
        let path = dir.join(format!("{n}.json"));
        let actual = to_json(&analysis_report(&n.build()));
        if update {
            fs::create_dir_all(&dir).unwrap();
            fs::write(&path, &actual).unwrap();
            continue;
        }
        let expected =
            fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(actual, expected, "{n}");
    }
}

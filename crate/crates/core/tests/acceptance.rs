//! Acceptance gate: one test per criterion group, each printing one
//! PASS/FAIL line per row with measured value, expected value and
//! tolerance. The table itself lives in `h2plus1d::report` and is shared
//! with the CLI `verify` subcommand.
//!
//! Known red rows (see the failing groups below for the measured
//! numbers):
//! - group 6: the order-1 curve's (eps1 + 1/2) nu^2 tail reaches its +9/2
//!   limit only at O(1/nu); at nu = 40 it is still ~19% high (confirmed
//!   against 40-digit quadrature of the identical trial), so the 5%
//!   bound as stated cannot hold there.
//! - group 7: the claimed <1e-5 coincidence of the order-2/3/4 curves
//!   over nu in [0.5, 20] contradicts the (passing) groups 4 and 5: the
//!   order-2 energy sits ~5.2e-4 above the independent eigensolver at
//!   nu = 10 while the higher orders converge onto it, so the order
//!   differences are necessarily ~1e-4..1e-3 in that region.

use std::sync::OnceLock;

use h2plus1d::report::{run_all, CriterionResult};

fn table() -> &'static [CriterionResult] {
    static TABLE: OnceLock<Vec<CriterionResult>> = OnceLock::new();
    TABLE.get_or_init(run_all)
}

fn check_group(group: u8) {
    let rows: Vec<&CriterionResult> = table().iter().filter(|r| r.group == group).collect();
    assert!(!rows.is_empty(), "no rows for group {group}");
    for row in &rows {
        println!("{}", row.line());
    }
    let failed: Vec<&str> = rows
        .iter()
        .filter(|r| !r.pass)
        .map(|r| r.name.as_str())
        .collect();
    assert!(failed.is_empty(), "failed rows: {failed:?}");
}

#[test]
fn criterion_1_order1_anchors() {
    check_group(1);
}

#[test]
fn criterion_2_order2_even_anchors() {
    check_group(2);
}

#[test]
fn criterion_3_order2_odd_anchors() {
    check_group(3);
}

#[test]
fn criterion_4_oracle_anchors() {
    check_group(4);
}

#[test]
fn criterion_5_deviation_from_oracle() {
    check_group(5);
}

#[test]
fn criterion_6_asymptotics() {
    check_group(6);
}

#[test]
fn criterion_7_order_coincidence() {
    check_group(7);
}

#[test]
fn criterion_8_box_demo() {
    check_group(8);
}

#[test]
fn criterion_9_property_suites() {
    check_group(9);
}

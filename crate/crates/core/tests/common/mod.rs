//! Shared reference data for the integration tests.
#![allow(dead_code)]

use hecke_green::partitions::{BiPartition, Partition};

/// Table notation: parts as digits in increasing order, `-` for empty.
pub fn compact(s: &str) -> BiPartition {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    let (a, b) = inner.split_once(',').expect("two components");
    let side = |x: &str| -> Partition {
        if x == "-" {
            Partition::empty()
        } else {
            Partition::new(x.chars().map(|c| c.to_digit(10).unwrap() as usize).collect())
        }
    };
    BiPartition::new(side(a), side(b))
}

pub fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec())
}

pub struct B3Column {
    pub label: &'static str,
    pub a: i64,
    pub unipotent: &'static [usize],
    /// Subspace type in the notation of `SubspaceType::describe`.
    pub kind: &'static str,
    pub rows: &'static [(usize, &'static str)],
}

/// The rank three table at `m = 2`, columns in decreasing `a_2`.
pub const B3_TABLE: &[B3Column] = &[
    B3Column {
        label: "(-,111)",
        a: 12,
        unipotent: &[3, 1, 1, 1, 1, 1, 1, 1],
        kind: "0",
        rows: &[
            (3, "(3,-)"),
            (4, "(2,1)"),
            (5, "(1,2)+(12,-)"),
            (6, "(-,3)+(11,1)+(2,1)"),
            (7, "(1,11)+(1,2)+(12,-)"),
            (8, "(-,12)+(11,1)+(2,1)"),
            (9, "(1,11)+(1,2)+(111,-)"),
            (10, "(-,12)+(11,1)"),
            (11, "(1,11)"),
            (12, "(-,111)"),
        ],
    },
    B3Column {
        label: "(-,12)",
        a: 8,
        unipotent: &[3, 2, 2, 1, 1, 1],
        kind: "A1",
        rows: &[
            (3, "(3,-)"),
            (4, "(2,1)"),
            (5, "(1,2)+(12,-)"),
            (6, "(-,3)+(11,1)+(2,1)"),
            (7, "(1,11)+(1,2)"),
            (8, "(-,12)"),
        ],
    },
    B3Column {
        label: "(1,11)",
        a: 6,
        unipotent: &[5, 1, 1, 1, 1, 1],
        kind: "B1,(1)",
        rows: &[
            (2, "(12,-)+(3,-)"),
            (3, "(11,1)+(2,1)"),
            (4, "(1,2)+(111,-)+(12,-)"),
            (5, "(11,1)+(2,1)"),
            (6, "(1,11)"),
        ],
    },
    B3Column {
        label: "(-,3)",
        a: 5,
        unipotent: &[3, 3, 3, 1],
        kind: "A2",
        rows: &[(2, "(3,-)"), (3, "(2,1)"), (4, "(1,2)"), (5, "(-,3)")],
    },
    B3Column {
        label: "(1,2)",
        a: 4,
        unipotent: &[5, 2, 2, 1],
        kind: "A1xB1,(1)",
        rows: &[(2, "(12,-)+(3,-)"), (3, "(11,1)+(2,1)"), (4, "(1,2)")],
    },
    B3Column {
        label: "(11,1)",
        a: 3,
        unipotent: &[5, 3, 1, 1],
        kind: "B2,(11)",
        rows: &[(2, "(12,-)"), (3, "(11,1)")],
    },
    B3Column { label: "(111,-)", a: 3, unipotent: &[5, 3, 1, 1], kind: "B2,(11)", rows: &[(3, "(111,-)")] },
    B3Column {
        label: "(2,1)",
        a: 2,
        unipotent: &[7, 1, 1, 1],
        kind: "B2,(2)",
        rows: &[(1, "(12,-)+(3,-)"), (2, "(2,1)")],
    },
    B3Column { label: "(12,-)", a: 1, unipotent: &[7, 3], kind: "B3,(12)", rows: &[(1, "(12,-)")] },
    B3Column { label: "(3,-)", a: 0, unipotent: &[9, 1], kind: "B3,(3)", rows: &[(0, "(3,-)")] },
];

/// Row cell as a sorted list of bipartitions.
pub fn cell(s: &str) -> Vec<BiPartition> {
    let mut v: Vec<BiPartition> = s.split('+').map(compact).collect();
    v.sort();
    v
}

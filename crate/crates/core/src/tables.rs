//! Reference `B` values for two small instances.
//!
//! Tables 1 and 2 list members of `N_{16,6}`. Tables 3 and 4 list level-2
//! sequences of `(26, 10)` together with their left pre-sequence lift to
//! `N_{26,10}`.

use num_bigint::BigUint;

use crate::error::Result;
use crate::oracle::fast_b;
use crate::profile::{left_presequence, Profile, TransformContext};

/// One published row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    /// Level-2 sequence, when the row is stated at level 2.
    pub level_two: Option<&'static [usize]>,
    pub profile: &'static [usize],
    pub b: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Table {
    pub number: usize,
    pub title: &'static str,
    pub m: usize,
    pub k: usize,
    pub rows: &'static [TableRow],
}

const fn top(profile: &'static [usize], b: u64) -> TableRow {
    TableRow {
        level_two: None,
        profile,
        b,
    }
}

const fn lifted(level_two: &'static [usize], profile: &'static [usize], b: u64) -> TableRow {
    TableRow {
        level_two: Some(level_two),
        profile,
        b,
    }
}

pub const TABLES: [Table; 4] = [
    Table {
        number: 1,
        title: "adjacent parts two or more apart",
        m: 16,
        k: 6,
        rows: &[
            top(&[3, 3, 2, 1, 5, 2], 3543),
            top(&[3, 3, 2, 2, 4, 2], 4327),
            top(&[3, 3, 2, 3, 3, 2], 4599),
            top(&[3, 3, 2, 4, 2, 2], 4359),
            top(&[3, 3, 2, 5, 1, 2], 3607),
        ],
    },
    Table {
        number: 2,
        title: "comparison rule A",
        m: 16,
        k: 6,
        rows: &[
            top(&[2, 3, 2, 3, 3, 3], 4231),
            top(&[3, 2, 2, 3, 3, 3], 4395),
            top(&[3, 2, 3, 2, 3, 3], 4439),
            top(&[3, 2, 3, 3, 2, 3], 4455),
            top(&[3, 2, 3, 3, 3, 2], 4579),
            top(&[3, 3, 2, 3, 3, 2], 4599),
            top(&[3, 3, 3, 2, 3, 2], 4599),
        ],
    },
    Table {
        number: 3,
        title: "adjacent level-2 parts two or more apart",
        m: 26,
        k: 10,
        rows: &[
            lifted(
                &[1, 1, 5, 1, 1, 1],
                &[3, 3, 3, 2, 2, 2, 2, 3, 3, 3],
                1072727,
            ),
            lifted(
                &[1, 1, 4, 2, 1, 1],
                &[3, 3, 3, 2, 2, 2, 3, 2, 3, 3],
                1084591,
            ),
            lifted(
                &[1, 1, 3, 3, 1, 1],
                &[3, 3, 3, 2, 2, 3, 2, 2, 3, 3],
                1086295,
            ),
            lifted(
                &[1, 1, 2, 4, 1, 1],
                &[3, 3, 3, 2, 3, 2, 2, 2, 3, 3],
                1084655,
            ),
            lifted(
                &[1, 1, 1, 5, 1, 1],
                &[3, 3, 3, 3, 2, 2, 2, 2, 3, 3],
                1073111,
            ),
        ],
    },
    Table {
        number: 4,
        title: "comparison rule B",
        m: 26,
        k: 10,
        rows: &[
            lifted(
                &[2, 2, 2, 1, 2, 1],
                &[3, 2, 3, 2, 3, 2, 3, 3, 2, 3],
                1104735,
            ),
            lifted(
                &[2, 2, 1, 2, 2, 1],
                &[3, 2, 3, 2, 3, 3, 2, 3, 2, 3],
                1104799,
            ),
            lifted(
                &[2, 2, 1, 2, 1, 2],
                &[3, 2, 3, 2, 3, 3, 2, 3, 3, 2],
                1136415,
            ),
            lifted(
                &[2, 1, 2, 2, 1, 2],
                &[3, 2, 3, 3, 2, 3, 2, 3, 3, 2],
                1136495,
            ),
            lifted(
                &[1, 2, 2, 2, 1, 2],
                &[3, 3, 2, 3, 2, 3, 2, 3, 3, 2],
                1140511,
            ),
            lifted(
                &[1, 2, 2, 1, 2, 2],
                &[3, 3, 2, 3, 2, 3, 3, 2, 3, 2],
                1141023,
            ),
            lifted(
                &[1, 2, 1, 2, 2, 2],
                &[3, 3, 2, 3, 3, 2, 3, 2, 3, 2],
                1141023,
            ),
        ],
    },
];

/// A row recomputed from scratch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComputedRow {
    pub table: usize,
    pub level_two: Option<Profile>,
    pub profile: Profile,
    pub b: BigUint,
}

impl ComputedRow {
    /// The profile cell: `3,3,2` at level 1, `(1,1,5)→(3,3,2)` for lifted rows.
    pub fn label(&self) -> String {
        match &self.level_two {
            None => self.profile.to_string(),
            Some(l) => format!("({l})→({})", self.profile),
        }
    }
}

/// Recomputes a table: lifted rows are derived from their level-2 sequence,
/// and every `B` is evaluated exactly.
pub fn compute_table(table: &Table) -> Result<Vec<ComputedRow>> {
    table
        .rows
        .iter()
        .map(|row| {
            let (level_two, profile) = match row.level_two {
                None => (
                    None,
                    Profile::in_space(table.m, table.k, row.profile.to_vec())?,
                ),
                Some(l) => {
                    let ctx = TransformContext::new(table.m, table.k)?;
                    let seq = Profile::sequence(l.to_vec())?;
                    let lifted = left_presequence(&seq, &ctx)?.with_floor(2)?;
                    (Some(seq), lifted)
                }
            };
            Ok(ComputedRow {
                table: table.number,
                level_two,
                b: fast_b(&profile)?,
                profile,
            })
        })
        .collect()
}

/// All tables, recomputed in order.
pub fn compute_all() -> Result<Vec<ComputedRow>> {
    let mut out = Vec::new();
    for t in &TABLES {
        out.extend(compute_table(t)?);
    }
    Ok(out)
}

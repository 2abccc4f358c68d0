//! Reference values for the non-negatively graded semigroups of genus at
//! most six: for each gap set, the effective-weight lower bound (np), the
//! upper bound `2g - 2 + lambda` (dp) and `dim T^{1,+}`. For every entry the
//! moduli dimension is known to equal np, so the rendered tables repeat np
//! in the dimension column. Rows are ordered by (genus, gap-set lex).

pub struct ReferenceRow {
    pub gaps: &'static [i64],
    pub np: i64,
    pub dp: i64,
    pub t1_plus: i64,
}

pub const GENUS6_NON_NEG_GRADED: [ReferenceRow; 15] = [
    ReferenceRow { gaps: &[1, 2, 3, 5, 7], np: 10, dp: 11, t1_plus: 1 },
    ReferenceRow { gaps: &[1, 2, 3, 6, 7], np: 9, dp: 10, t1_plus: 1 },
    ReferenceRow { gaps: &[1, 2, 4, 5, 8], np: 9, dp: 10, t1_plus: 1 },
    ReferenceRow { gaps: &[1, 2, 3, 4, 6, 8], np: 13, dp: 14, t1_plus: 1 },
    ReferenceRow { gaps: &[1, 2, 3, 4, 6, 9], np: 12, dp: 13, t1_plus: 1 },
    ReferenceRow { gaps: &[1, 2, 3, 4, 7, 8], np: 12, dp: 13, t1_plus: 1 },
    ReferenceRow { gaps: &[1, 2, 3, 4, 7, 9], np: 11, dp: 12, t1_plus: 1 },
    ReferenceRow { gaps: &[1, 2, 3, 4, 8, 9], np: 10, dp: 12, t1_plus: 2 },
    ReferenceRow { gaps: &[1, 2, 3, 5, 6, 9], np: 12, dp: 13, t1_plus: 1 },
    ReferenceRow { gaps: &[1, 2, 3, 5, 6, 10], np: 11, dp: 12, t1_plus: 1 },
    ReferenceRow { gaps: &[1, 2, 3, 5, 7, 9], np: 11, dp: 13, t1_plus: 2 },
    ReferenceRow { gaps: &[1, 2, 3, 5, 7, 11], np: 10, dp: 11, t1_plus: 1 },
    ReferenceRow { gaps: &[1, 2, 3, 6, 7, 11], np: 10, dp: 11, t1_plus: 1 },
    ReferenceRow { gaps: &[1, 2, 4, 5, 7, 10], np: 11, dp: 12, t1_plus: 1 },
    ReferenceRow { gaps: &[1, 2, 4, 5, 8, 11], np: 10, dp: 11, t1_plus: 1 },
];

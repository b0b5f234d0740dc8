//! Fixed words used as worked examples throughout the crate: the
//! degenerate homogeneous braid on 15 strands with its labelled ordering,
//! the two non-minimal words on 4 strands, and the shadows of the
//! six-strand generator example.

use crate::word::BraidWord;

/// Crossings of the 15-strand homogeneous example, level by level.
const HOMOGENEOUS_LEVELS: [&[i64]; 7] = [
    &[1, 3, 5, -8, -10, 13],
    &[1, 3, 5, -9, 11, 14],
    &[-2, -4, -8, -10, 12, 14],
    &[1, 5, 7, -10, 13],
    &[-2, -4, -8, -10, 12, 14],
    &[1, 3, 5, 7, -9, 11, 13],
    &[-2, -4, 7, -10, 12, 14],
];

/// Input labels of the example ordering, by top position.
pub const HOMOGENEOUS_TOP_LABELS: [u32; 15] = [29, 25, 27, 21, 23, 19, 17, 9, 11, 13, 15, 7, 5, 3, 1];

/// Output labels of the example ordering, listed by the strand (top
/// position) that ends there.
pub const HOMOGENEOUS_END_LABELS: [u32; 15] = [24, 30, 28, 22, 20, 26, 16, 6, 10, 4, 18, 12, 14, 2, 8];

/// The 42-crossing degenerate `(1,-1,1,-1,1,*,1,-1,-1,-1,1,1,1,1)`-homogeneous braid word.
pub fn homogeneous_example() -> BraidWord {
    let letters: Vec<i64> = HOMOGENEOUS_LEVELS.iter().flat_map(|l| l.iter().copied()).collect();
    BraidWord::from_signed(15, &letters).expect("valid word")
}

/// Two 8-letter words on 4 strands that are not geodesic.
pub fn non_minimal_pair() -> [BraidWord; 2] {
    [
        BraidWord::parse("bacbbcAB", 4).expect("valid word"),
        BraidWord::parse("bcbAbccB", 4).expect("valid word"),
    ]
}

/// Column choices of the two free shadows in the six-strand generator
/// example (13 and 9 crossings).
pub const GENERATOR_SHADOWS: [&[usize]; 2] = [
    &[1, 3, 2, 4, 1, 3, 5, 3, 5, 2, 4, 2, 5],
    &[2, 5, 1, 3, 5, 2, 4, 1, 4],
];

/// The full six-strand generator example word, signed.
pub fn generator_example() -> BraidWord {
    let v1: &[i64] = &[1, 3, 2, 4, -1, 3, 5, 3, 5, 2, 4, 2, 5];
    let u1: &[i64] = &[2, 1, -2];
    let w: &[i64] = &[1, 2, 3, 4, 5, 5, 4, 3, 2, -1, -1, 2, 3, 4, 5, 5, 4, 3, 2, 1];
    let v2: &[i64] = &[-2, 5, 1, -3, 5, 2, -4, 1, -4];
    let u2: &[i64] = &[2, 1, -3, -2];
    let letters: Vec<i64> = [v1, u1, w, v2, u2].concat();
    BraidWord::from_signed(6, &letters).expect("valid word")
}

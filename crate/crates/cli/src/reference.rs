//! Reference values bundled for the report commands: the published table
//! cells that every `table` report recomputes and diffs against, and the
//! published enumerations the validation suite checks the oracle on.
//!
//! Values are stored exactly as printed, together with the number of
//! printed decimals so comparisons can round to the same precision.

/// Cumulative prime-count table: key points, model row, exact row.
pub const TAB51_N0: [u64; 4] = [10, 20, 30, 40];
pub const TAB51_MODEL: [u64; 4] = [26, 80, 161, 266];
pub const TAB51_REAL: [u64; 4] = [30, 85, 162, 263];

/// Prime band table over quadratic intervals: mean count, half pair
/// spacing, scatter width.
pub const TAB52_N: [u64; 10] = [1, 10, 100, 150, 300, 400, 1_000, 10_000, 100_000, 1_000_000];
pub const TAB52_MEAN: [f64; 10] = [
    2.29, 4.4, 23.1, 31.9, 55.8, 70.8, 154.0, 1151.0, 9207.0, 76725.4,
];
pub const TAB52_MEAN_DEC: [u32; 10] = [2, 1, 1, 1, 1, 1, 0, 0, 0, 1];
pub const TAB52_SPACING: [f64; 10] = [
    0.86, 10.2, 37.9, 44.8, 58.0, 64.0, 85.0, 151.0, 235.9, 339.7,
];
pub const TAB52_SPACING_DEC: [u32; 10] = [2, 1, 1, 1, 1, 1, 1, 1, 1, 1];
pub const TAB52_SCATTER: [f64; 10] = [
    3.5, 2.05, 5.30, 6.72, 10.4, 12.5, 23.6, 132.5, 847.7, 5886.9,
];
pub const TAB52_SCATTER_DEC: [u32; 10] = [1, 2, 2, 2, 1, 1, 1, 1, 1, 1];

/// Maximal-gap table: observed gaps near x and the model row.
pub const TAB53_X: [u64; 6] = [10, 100, 1_000, 10_000, 100_000, 840_000];
pub const TAB53_GAP: [u64; 6] = [4, 14, 20, 36, 54, 100];
pub const TAB53_MODEL: [f64; 6] = [2.36, 9.44, 21.23, 37.75, 58.98, 82.81];

/// Twin thresholds: the last interval index with each twin count, and the
/// model mean there (computed with the unit-mode constant).
pub const TAB71_N: [u64; 5] = [122, 213, 502, 545, 829];
pub const TAB71_TWINS: [u64; 5] = [0, 1, 2, 3, 4];
pub const TAB71_MODEL: [f64; 5] = [3.19, 4.47, 7.84, 8.29, 11.09];

/// Twin band table (squared band variant), two printed decimals everywhere.
pub const TAB72_N: [u64; 7] = [1, 10, 100, 1_000, 10_000, 100_000, 1_000_000];
pub const TAB72_MEAN: [f64; 7] = [1.75, 1.03, 2.65, 11.78, 66.23, 423.85, 2943.39];
pub const TAB72_UPPER: [f64; 7] = [11.19, 2.14, 4.01, 15.68, 82.32, 505.23, 3411.39];
pub const TAB72_LOWER: [f64; 7] = [0.49, 0.32, 1.57, 8.45, 51.86, 349.25, 2510.71];

/// Published list of twin-free quadratic intervals up to n = 122.
pub const TWIN_FREE_LIST: [u64; 11] = [9, 19, 26, 27, 30, 34, 39, 49, 53, 77, 122];

/// Published Goldbach enumerations for even numbers from 6 to 36
/// (odd-prime pairs only; the even-prime case 4 = 2 + 2 lies outside the
/// oracle's domain).
pub const GOLDBACH_SMALL: [(u64, &[(u64, u64)]); 16] = [
    (6, &[(3, 3)]),
    (8, &[(3, 5)]),
    (10, &[(3, 7), (5, 5)]),
    (12, &[(5, 7)]),
    (14, &[(3, 11), (7, 7)]),
    (16, &[(3, 13), (5, 11)]),
    (18, &[(5, 13), (7, 11)]),
    (20, &[(3, 17), (7, 13)]),
    (22, &[(3, 19), (5, 17), (11, 11)]),
    (24, &[(5, 19), (7, 17), (11, 13)]),
    (26, &[(3, 23), (7, 19), (13, 13)]),
    (28, &[(5, 23), (11, 17)]),
    (30, &[(7, 23), (11, 19)]),
    (32, &[(3, 29), (13, 19)]),
    (34, &[(3, 31), (5, 29), (11, 23), (17, 17)]),
    (36, &[(5, 31), (7, 29), (13, 23), (17, 19)]),
];

/// Round `v` to `dec` decimals, the way the reference cells were printed.
pub fn round_to(v: f64, dec: u32) -> f64 {
    let scale = 10f64.powi(dec as i32);
    (v * scale).round() / scale
}

//! Published totals `#APS(m, n)` for `1 ≤ m ≤ 10`, `3 ≤ n ≤ 12`, as printed.
//!
//! One printed cell, `(8, 3)`, reads 32; the exact value is `3m - 1 = 23`.

pub const M_RANGE: std::ops::RangeInclusive<u32> = 1..=10;
pub const N_RANGE: std::ops::RangeInclusive<u32> = 3..=12;

#[rustfmt::skip]
const PRINTED: [[u64; 10]; 10] = [
    [2, 3, 6, 10, 20, 35, 70, 126, 252, 462],
    [5, 7, 31, 49, 209, 351, 1471, 2561, 10625, 18943],
    [8, 11, 76, 118, 776, 1283, 8236, 14146, 89528, 157742],
    [11, 15, 141, 217, 1931, 3167, 27421, 46761, 398331, 697359],
    [14, 19, 226, 346, 3884, 6339, 69106, 117326, 1256804, 2191534],
    [17, 23, 331, 505, 6845, 11135, 146395, 247801, 3198557, 5562287],
    [20, 27, 456, 694, 11024, 17891, 275416, 465186, 7026480, 12194958],
    [32, 31, 601, 913, 16631, 26943, 475321, 801521, 13868183, 24033247],
    [26, 35, 766, 1162, 23876, 38627, 768286, 1293886, 25231436, 43674254],
    [29, 39, 951, 1441, 32969, 53279, 1179511, 1984401, 43059609, 74463519],
];

/// Cells where the printed value is a misprint: `(m, n, printed)`.
pub const MISPRINTS: &[(u32, u32, u64)] = &[(8, 3, 32)];

/// The printed value at `(m, n)`, if inside the table.
pub fn printed_total(m: u32, n: u32) -> Option<u64> {
    if !M_RANGE.contains(&m) || !N_RANGE.contains(&n) {
        return None;
    }
    Some(PRINTED[(m - 1) as usize][(n - 3) as usize])
}

pub fn is_misprint(m: u32, n: u32) -> bool {
    MISPRINTS.iter().any(|&(a, b, _)| (a, b) == (m, n))
}

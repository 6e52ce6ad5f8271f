//! Parameter grids shared by the benchmarks.

/// `(m, n)` cells of the published totals table.
pub fn table_cells() -> impl Iterator<Item = (u32, u32)> {
    (1..=10).flat_map(|m| (3..=12).map(move |n| (m, n)))
}

/// Groups small enough to scan in a benchmark iteration.
pub const ORACLE_GROUPS: [(u32, u32, u32); 4] = [(2, 1, 5), (2, 2, 5), (3, 1, 5), (4, 2, 5)];

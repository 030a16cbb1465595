//! Shared fixtures for the benchmark targets.

use wallchamber::{Quiver, WallTable};

pub fn a3_table() -> WallTable {
    WallTable::new(Quiver::linear(3))
}

pub fn kronecker_table(m: usize) -> WallTable {
    WallTable::new(Quiver::kronecker(m))
}

pub fn wild_table() -> WallTable {
    WallTable::new(Quiver::wild_123())
}

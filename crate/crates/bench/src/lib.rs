//! Fixed inputs shared by the benchmarks.

use grassarc::{GrassmannShape, Partition, PlanePartition};

pub fn shape(k: usize, n: usize) -> GrassmannShape {
    GrassmannShape::new(k, n).expect("valid shape")
}

/// `(3,3,3)` in `G(7,16)`.
pub fn square_in_g7_16() -> Partition {
    Partition::new(shape(7, 16), &[3, 3, 3]).expect("fits")
}

/// `(5,4,4,4,1)` in `G(5,10)`.
pub fn staircase_in_g5_10() -> Partition {
    Partition::new(shape(5, 10), &[5, 4, 4, 4, 1]).expect("fits")
}

/// A plane partition of height 3 in `G(3,7)`.
pub fn beta_g3_7() -> PlanePartition {
    PlanePartition::parse(shape(3, 7), "3 3 2 1; 2 2 1 1; 2 1 0 0").expect("plane partition")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_valid() {
        assert_eq!(square_in_g7_16().size(), 9);
        assert_eq!(staircase_in_g5_10().size(), 18);
        assert_eq!(beta_g3_7().volume(), grassarc::ExtNat::Fin(18));
    }
}

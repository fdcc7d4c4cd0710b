//! The five-pair instance with eight terminals packed into the NW quadrant.

use crate::builder::grid;
use gridlink_core::{v, Pairing, PairingError, Vertex};

/// Fixed terminals as `(s, t)`, with `None` for the free ends of pairs 1 and 5.
const FIXED: [(Vertex, Option<Vertex>); 5] = [
    (v(1, 1), None),
    (v(2, 1), Some(v(1, 3))),
    (v(3, 1), Some(v(1, 2))),
    (v(3, 2), Some(v(2, 3))),
    (v(2, 2), None),
];

/// The instance with `t1` and `t5` placed by the caller. Collisions with the
/// fixed terminals or with each other are rejected.
pub fn counterexample_instance(t1: Vertex, t5: Vertex) -> Result<Pairing, PairingError> {
    let pairs = FIXED
        .iter()
        .enumerate()
        .map(|(i, &(s, t))| (s, t.unwrap_or(if i == 0 { t1 } else { t5 })))
        .collect();
    Pairing::new(grid(), pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_collisions() {
        assert_eq!(counterexample_instance(v(1, 1), v(6, 6)), Err(PairingError::Duplicate(v(1, 1))));
        assert!(counterexample_instance(v(6, 6), v(6, 6)).is_err());
        assert!(counterexample_instance(v(7, 1), v(6, 6)).is_err());
    }

    #[test]
    fn builds_five_pairs() {
        let p = counterexample_instance(v(6, 1), v(6, 6)).unwrap();
        assert_eq!(p.len(), 5);
        assert_eq!(p.pairs()[0], (v(1, 1), v(6, 1)));
        assert_eq!(p.pairs()[4], (v(2, 2), v(6, 6)));
    }
}

//! Fixed-capacity bit sets keyed by canonical edge and vertex indices.
//!
//! Every grid handled by this crate has at most 128 edges (8×9 is the largest
//! rectangle that fits), so a single `u128` word holds any edge or vertex set
//! and disjointness tests are one AND.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Largest number of edges or vertices a set can address.
pub const CAPACITY: usize = 128;

macro_rules! bitset {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize, Deserialize)]
        pub struct $name(pub u128);

        impl $name {
            pub const EMPTY: Self = Self(0);

            pub fn full(len: usize) -> Self {
                if len >= CAPACITY {
                    Self(u128::MAX)
                } else {
                    Self((1u128 << len) - 1)
                }
            }

            pub fn singleton(i: usize) -> Self {
                Self(1u128 << i)
            }

            #[inline]
            pub fn contains(self, i: usize) -> bool {
                i < CAPACITY && (self.0 >> i) & 1 == 1
            }

            #[inline]
            pub fn insert(&mut self, i: usize) -> bool {
                let had = self.contains(i);
                self.0 |= 1u128 << i;
                !had
            }

            #[inline]
            pub fn remove(&mut self, i: usize) -> bool {
                let had = self.contains(i);
                self.0 &= !(1u128 << i);
                had
            }

            #[inline]
            pub fn len(self) -> usize {
                self.0.count_ones() as usize
            }

            #[inline]
            pub fn is_empty(self) -> bool {
                self.0 == 0
            }

            #[inline]
            pub fn union(self, other: Self) -> Self {
                Self(self.0 | other.0)
            }

            #[inline]
            pub fn intersection(self, other: Self) -> Self {
                Self(self.0 & other.0)
            }

            #[inline]
            pub fn difference(self, other: Self) -> Self {
                Self(self.0 & !other.0)
            }

            #[inline]
            pub fn is_disjoint(self, other: Self) -> bool {
                self.0 & other.0 == 0
            }

            #[inline]
            pub fn is_subset(self, other: Self) -> bool {
                self.0 & !other.0 == 0
            }

            pub fn iter(self) -> impl Iterator<Item = usize> {
                let mut bits = self.0;
                std::iter::from_fn(move || {
                    if bits == 0 {
                        None
                    } else {
                        let i = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        Some(i)
                    }
                })
            }
        }

        impl FromIterator<usize> for $name {
            fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
                let mut s = Self::EMPTY;
                for i in iter {
                    s.insert(i);
                }
                s
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.debug_set().entries(self.iter()).finish()
            }
        }

        impl std::ops::BitOr for $name {
            type Output = Self;
            fn bitor(self, rhs: Self) -> Self {
                self.union(rhs)
            }
        }

        impl std::ops::BitAnd for $name {
            type Output = Self;
            fn bitand(self, rhs: Self) -> Self {
                self.intersection(rhs)
            }
        }

        impl std::ops::Sub for $name {
            type Output = Self;
            fn sub(self, rhs: Self) -> Self {
                self.difference(rhs)
            }
        }
    };
}

bitset!(
    /// Set of canonical edge indices.
    EdgeSet
);
bitset!(
    /// Set of row-major vertex indices.
    VertexSet
);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_singletons() {
        assert_eq!(EdgeSet::full(60).len(), 60);
        assert_eq!(EdgeSet::full(128).len(), 128);
        let s = EdgeSet::singleton(127);
        assert!(s.contains(127));
        assert!(!s.contains(0));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![127]);
    }

    proptest! {
        #[test]
        fn algebra_matches_membership(a in any::<u128>(), b in any::<u128>(), i in 0usize..128) {
            let (a, b) = (EdgeSet(a), EdgeSet(b));
            prop_assert_eq!((a | b).contains(i), a.contains(i) || b.contains(i));
            prop_assert_eq!((a & b).contains(i), a.contains(i) && b.contains(i));
            prop_assert_eq!((a - b).contains(i), a.contains(i) && !b.contains(i));
            prop_assert_eq!(a.iter().count(), a.len());
            prop_assert_eq!(a.iter().collect::<EdgeSet>(), a);
            prop_assert_eq!(a.is_disjoint(b), (a & b).is_empty());
        }
    }
}

//! Symmetries, relabellings and orientations that bring a pairing into a
//! case's normal position.

use crate::builder::grid;
use gridlink_core::{Pairing, Path, Symmetry};
use serde::{Deserialize, Serialize};

/// Normalized pairing = `sym(p)`, then pairs reordered by `order`, then the
/// pairs flagged in `flip` turned around.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Variant {
    pub sym: Symmetry,
    /// `order[i]` is the original index of normalized pair `i`.
    pub order: [usize; 4],
    pub flip: [bool; 4],
}

impl Variant {
    pub const IDENTITY: Variant = Variant { sym: Symmetry::IDENTITY, order: [0, 1, 2, 3], flip: [false; 4] };

    pub fn apply(&self, p: &Pairing) -> Pairing {
        self.sym
            .apply_pairing(grid(), p)
            .expect("6x6 grid")
            .permuted(&self.order)
            .oriented(&self.flip)
    }

    /// Original pair index and original-frame path for a path of normalized
    /// pair `i`, running from the original `s` to the original `t`.
    pub fn restore(&self, i: usize, path: &Path) -> (usize, Path) {
        let oriented = if self.flip[i] { path.reversed() } else { path.clone() };
        (self.order[i], self.sym.inverse().apply_path(grid(), &oriented).expect("6x6 grid"))
    }

    /// Image of an original-frame path in normalized coordinates.
    pub fn forward_path(&self, path: &Path) -> Path {
        self.sym.apply_path(grid(), path).expect("6x6 grid")
    }
}

fn permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                let Some(d) = 6usize.checked_sub(a + b + c) else { continue };
                if a != b && a != c && b != c && d < 4 && d != a && d != b && d != c {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

/// All 8 · 24 · 16 variants with their normalized pairings, identity first.
pub fn variants(p: &Pairing) -> impl Iterator<Item = (Variant, Pairing)> + '_ {
    let perms = permutations();
    Symmetry::ALL.into_iter().flat_map(move |sym| {
        let img = sym.apply_pairing(grid(), p).expect("6x6 grid");
        let perms = perms.clone();
        perms.into_iter().flat_map(move |order| {
            let reordered = img.permuted(&order);
            (0u8..16).map(move |m| {
                let flip = [0, 1, 2, 3].map(|k| m >> k & 1 == 1);
                (Variant { sym, order, flip }, reordered.oriented(&flip))
            })
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use gridlink_core::seeded_sample;

    #[test]
    fn twenty_four_orders() {
        let ps = permutations();
        assert_eq!(ps.len(), 24);
        assert_eq!(ps[0], [0, 1, 2, 3]);
    }

    #[test]
    fn restore_inverts_apply() {
        let p = seeded_sample(&grid().vertices(), 4, 3, 0);
        for (var, np) in variants(&p).step_by(97) {
            assert_eq!(var.apply(&p), np);
            for (i, &(s, t)) in np.pairs().iter().enumerate() {
                let (orig, path) = var.restore(i, &Path::new(vec![s, t]));
                assert_eq!(p.pairs()[orig], (path.first().unwrap(), path.last().unwrap()));
            }
        }
        let first = variants(&p).next().unwrap();
        assert_eq!(first.0, Variant::IDENTITY);
        assert_eq!(first.1, p);
    }
}

use gridlink_core::{GridGraph, Pairing};

/// Decide weak linkage by trying every assignment of edges to pairs (or to
/// nobody) and checking connectivity inside each pair's edge class.
pub fn brute_force(g: &GridGraph, p: &Pairing) -> bool {
    let edges = g.edges();
    let k = p.len();
    let labels = k + 1;
    let combos = labels.pow(edges.len() as u32);
    let n = g.host_vertex_count();
    'assign: for mut code in 0..combos {
        let mut owner = vec![0; edges.len()];
        for o in owner.iter_mut() {
            *o = code % labels;
            code /= labels;
        }
        for (i, &(s, t)) in p.pairs().iter().enumerate() {
            let mut parent: Vec<usize> = (0..n).collect();
            fn find(parent: &mut [usize], x: usize) -> usize {
                let mut r = x;
                while parent[r] != r {
                    r = parent[r];
                }
                parent[x] = r;
                r
            }
            for (e, &(_, a, b)) in edges.iter().enumerate() {
                if owner[e] == i + 1 {
                    let (ra, rb) = (find(&mut parent, g.index(a)), find(&mut parent, g.index(b)));
                    parent[ra] = rb;
                }
            }
            if find(&mut parent, g.index(s)) != find(&mut parent, g.index(t)) {
                continue 'assign;
            }
        }
        return true;
    }
    false
}

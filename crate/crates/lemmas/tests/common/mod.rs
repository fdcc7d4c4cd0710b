use gridlink_core::{EdgeSet, GridGraph, Vertex};

/// One path request for [`labeling_exists`].
pub struct Demand {
    pub from: Vertex,
    pub targets: Vec<Vertex>,
    /// Demands sharing a group must end at distinct targets.
    pub group: Option<u8>,
    pub avoid: EdgeSet,
}

/// Whether pairwise edge-disjoint walks meeting every demand exist in `g`,
/// decided by trying every assignment of the graph's edges to the demands
/// (or to none) and checking reachability inside each class.
pub fn labeling_exists(g: &GridGraph, demands: &[Demand]) -> bool {
    let edges = g.edges();
    let allowed: Vec<Vec<usize>> = edges
        .iter()
        .map(|&(i, _, _)| {
            let mut c: Vec<usize> = (0..demands.len()).filter(|&d| !demands[d].avoid.contains(i)).collect();
            c.push(demands.len());
            c
        })
        .collect();
    let mut pick = vec![0usize; edges.len()];
    loop {
        let reach: Vec<Vec<Vertex>> = (0..demands.len())
            .map(|d| {
                let mut seen = vec![demands[d].from];
                let mut stack = vec![demands[d].from];
                while let Some(x) = stack.pop() {
                    for (k, &(_, a, b)) in edges.iter().enumerate() {
                        if allowed[k][pick[k]] != d {
                            continue;
                        }
                        for (p, q) in [(a, b), (b, a)] {
                            if p == x && !seen.contains(&q) {
                                seen.push(q);
                                stack.push(q);
                            }
                        }
                    }
                }
                demands[d].targets.iter().copied().filter(|t| seen.contains(t)).collect()
            })
            .collect();
        if assign(demands, &reach, 0, &mut Vec::new()) {
            return true;
        }
        let mut k = 0;
        loop {
            if k == edges.len() {
                return false;
            }
            pick[k] += 1;
            if pick[k] < allowed[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
}

fn assign(demands: &[Demand], reach: &[Vec<Vertex>], d: usize, taken: &mut Vec<(u8, Vertex)>) -> bool {
    if d == demands.len() {
        return true;
    }
    for &t in &reach[d] {
        match demands[d].group {
            Some(g) if taken.contains(&(g, t)) => continue,
            Some(g) => {
                taken.push((g, t));
                if assign(demands, reach, d + 1, taken) {
                    return true;
                }
                taken.pop();
            }
            None => {
                if assign(demands, reach, d + 1, taken) {
                    return true;
                }
            }
        }
    }
    false
}

//! Seeded random graph corpora for the test suites.
//!
//! Everything here is deterministic given the seed; the suites default to
//! seed 0.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::graph::Graph;

pub fn rng_from_seed(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Uniform random attachment tree on `n` vertices.
pub fn random_tree(n: usize, rng: &mut StdRng) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        let parent = rng.random_range(0..v);
        g.add_edge(parent, v).expect("parent < v < n");
    }
    g
}

/// Random connected graph: a random spanning tree plus each remaining pair
/// independently with probability `extra_edge_prob`.
pub fn random_connected_graph(n: usize, extra_edge_prob: f64, rng: &mut StdRng) -> Graph {
    let mut g = random_tree(n, rng);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.random_bool(extra_edge_prob) {
                g.add_edge(u, v).expect("ids in range");
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trees_are_trees_and_seeds_reproduce() {
        let mut rng = rng_from_seed(0);
        for n in 2..30 {
            let t = random_tree(n, &mut rng);
            assert!(t.is_tree());
        }
        let a = random_tree(12, &mut rng_from_seed(7));
        let b = random_tree(12, &mut rng_from_seed(7));
        assert_eq!(a, b);
    }

    #[test]
    fn connected_graphs_are_connected() {
        let mut rng = rng_from_seed(1);
        for n in 2..25 {
            let g = random_connected_graph(n, 0.3, &mut rng);
            assert!(g.is_connected());
            g.validate().unwrap();
        }
    }
}

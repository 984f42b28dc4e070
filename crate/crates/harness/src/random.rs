//! Seeded random instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ramsey_core::graph::{Graph, GraphBuilder, VertexSet};

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, order: usize, p: f64) -> Graph {
    let mut b = GraphBuilder::new(order);
    for v in 1..order {
        for u in 0..v {
            if rng.gen_bool(p) {
                b.add_edge(u, v).expect("in range");
            }
        }
    }
    b.build()
}

/// `G(n, p)` conditioned on connectivity, by rejection.
pub fn random_connected_graph<R: Rng>(rng: &mut R, order: usize, p: f64) -> Graph {
    loop {
        let g = random_graph(rng, order, p);
        if order > 0 && g.is_connected() {
            return g;
        }
    }
}

/// A host with sides `X` (`|X| = x_size`) and `Y` such that every `x` has a
/// neighbour in `Y` and every `y` has at most `max_y_degree` neighbours in
/// `X`. Edges inside each side are random noise.
pub fn random_bipartite_view<R: Rng>(
    rng: &mut R,
    x_size: usize,
    max_y_degree: usize,
    noise: f64,
) -> (Graph, VertexSet, VertexSet) {
    assert!(max_y_degree >= 1);
    let mut xs: Vec<usize> = (0..x_size).collect();
    xs.shuffle(rng);
    // cover X with Y-stars of random sizes up to the cap
    let mut stars: Vec<Vec<usize>> = Vec::new();
    let mut rest = xs.as_slice();
    while !rest.is_empty() {
        let k = rng.gen_range(1..=max_y_degree.min(rest.len()));
        stars.push(rest[..k].to_vec());
        rest = &rest[k..];
    }
    let y_size = stars.len() + rng.gen_range(0..=2);
    let order = x_size + y_size;
    let mut b = GraphBuilder::new(order);
    for (i, star) in stars.iter().enumerate() {
        for &x in star {
            b.add_edge(x, x_size + i).expect("in range");
        }
    }
    // extra X-Y edges that respect the degree cap
    for y in 0..y_size {
        let mut deg = stars.get(y).map_or(0, Vec::len);
        for x in 0..x_size {
            if deg < max_y_degree && rng.gen_bool(0.15) && !stars.get(y).is_some_and(|s| s.contains(&x)) {
                b.add_edge(x, x_size + y).expect("in range");
                deg += 1;
            }
        }
    }
    for side in [0..x_size, x_size..order] {
        for v in side.clone() {
            for u in side.start..v {
                if rng.gen_bool(noise) {
                    b.add_edge(u, v).expect("in range");
                }
            }
        }
    }
    let x: VertexSet = (0..x_size).collect();
    let y: VertexSet = (x_size..order).collect();
    (b.build(), x, y)
}

//! Machine certificates for small Ramsey facts.

use serde::Serialize;

use ramsey_core::codec::encode_graph6;
use ramsey_core::ramsey::{find_mono_clique, path_clique_star, pentagon_coloring, ColoredClique};
use ramsey_core::Result;

use crate::enumerate::enumerate_table;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmallRamseyCertificate {
    /// 2-colorings of `E(K_6)` checked.
    pub k6_colorings: usize,
    /// Of those, how many have a monochromatic triangle.
    pub k6_with_mono_triangle: usize,
    /// Triangles of `K_5` under the pentagon/pentagram coloring.
    pub pentagon_triangles: usize,
    pub pentagon_mono_triangles: usize,
    /// Whether the clique search also reports no triangle on the pentagon.
    pub pentagon_search_empty: bool,
    /// The clique found in the one-color `K_3`.
    pub one_color_k3: Vec<usize>,
    /// `R_2(3) = 6` is certified.
    pub holds: bool,
}

impl SmallRamseyCertificate {
    pub fn render_table(&self) -> String {
        format!(
            "K6 2-colorings with a monochromatic triangle: {}/{}\n\
             pentagon coloring of K5: {} monochromatic triangles among {} (search empty: {})\n\
             one-color K3 clique: {:?}\n\
             R_2(3) = 6 certified: {}\n",
            self.k6_with_mono_triangle,
            self.k6_colorings,
            self.pentagon_mono_triangles,
            self.pentagon_triangles,
            self.pentagon_search_empty,
            self.one_color_k3,
            self.holds
        )
    }
}

fn edge_index(i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    b * (b - 1) / 2 + a
}

fn mono_triangles(c: &ColoredClique) -> usize {
    let n = c.order;
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            for d in b + 1..n {
                if c.color(a, b) == c.color(a, d) && c.color(a, b) == c.color(b, d) {
                    count += 1;
                }
            }
        }
    }
    count
}

pub fn certify_small_ramsey() -> Result<SmallRamseyCertificate> {
    let total = 1usize << 15;
    let mut hits = 0;
    for bits in 0..total {
        let c = ColoredClique::new(6, 2, |i, j| (bits >> edge_index(i, j) & 1) as u64)?;
        if let Some((color, set)) = find_mono_clique(&c, 3)? {
            assert!(set.len() == 3 && c.is_monochromatic(&set, color));
            hits += 1;
        }
    }
    let pentagon = pentagon_coloring();
    let pentagon_mono = mono_triangles(&pentagon);
    let pentagon_search_empty = find_mono_clique(&pentagon, 3)?.is_none();
    let one = ColoredClique::new(3, 1, |_, _| 0)?;
    let one_color_k3 = find_mono_clique(&one, 3)?.map_or_else(Vec::new, |(_, s)| s.to_vec());
    Ok(SmallRamseyCertificate {
        k6_colorings: total,
        k6_with_mono_triangle: hits,
        pentagon_triangles: 10,
        pentagon_mono_triangles: pentagon_mono,
        pentagon_search_empty,
        holds: hits == total && pentagon_mono == 0 && pentagon_search_empty,
        one_color_k3,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct N0Estimate {
    pub n: usize,
    pub max_order: usize,
    /// Least `N` such that every connected graph of order `N..=max_order`
    /// holds `P_n`, `K_n` or `K_{1,n}` induced; `None` if some graph of
    /// order `max_order` avoids all three.
    pub value: Option<usize>,
    /// Largest order with an avoiding graph, and the least such graph.
    pub last_avoiding: Option<(usize, String)>,
}

/// Empirical `N_0(n)` over the built-in enumeration.
pub fn estimate_n0(n: usize, max_order: usize) -> Result<N0Estimate> {
    let table = enumerate_table(max_order, true)?;
    let mut last_avoiding = None;
    for (order, classes) in table.iter().enumerate().skip(1) {
        for g in classes {
            if path_clique_star(g)?.best().k < n {
                last_avoiding = Some((order, encode_graph6(g)?));
                break;
            }
        }
    }
    let value = match &last_avoiding {
        None => Some(1),
        Some((o, _)) if *o < max_order => Some(o + 1),
        Some(_) => None,
    };
    Ok(N0Estimate {
        n,
        max_order,
        value,
        last_avoiding,
    })
}

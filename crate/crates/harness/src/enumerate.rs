//! Isomorphism classes of small graphs by one-vertex augmentation and
//! canonical-form dedup.

use std::collections::BTreeMap;

use rayon::prelude::*;

use ramsey_core::codec::encode_graph6;
use ramsey_core::graph::{Graph, GraphBuilder};
use ramsey_core::iso::canonical_form;
use ramsey_core::{Error, Result};

/// Largest order the built-in enumerator accepts.
pub const ENUMERATION_CAP: usize = 8;

fn augment(classes: &[Graph]) -> Result<Vec<Graph>> {
    let parts: Vec<Vec<(Vec<u64>, Graph)>> = classes
        .par_iter()
        .map(|g| {
            let n = g.order();
            let mut out = Vec::with_capacity(1 << n);
            for mask in 0u64..1 << n {
                let mut b = GraphBuilder::from_graph(g);
                let v = b.add_vertex();
                for u in (0..n).filter(|u| mask >> u & 1 == 1) {
                    b.add_edge(u, v)?;
                }
                let c = canonical_form(&b.build())?;
                out.push((c.code.clone(), c.graph()));
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut seen: BTreeMap<Vec<u64>, Graph> = BTreeMap::new();
    for (code, g) in parts.into_iter().flatten() {
        seen.entry(code).or_insert(g);
    }
    Ok(seen.into_values().collect())
}

fn by_graph6(graphs: Vec<Graph>) -> Result<Vec<Graph>> {
    let mut keyed: Vec<(String, Graph)> = graphs
        .into_iter()
        .map(|g| Ok((encode_graph6(&g)?, g)))
        .collect::<Result<_>>()?;
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, g)| g).collect())
}

/// One canonical representative per isomorphism class on `n` vertices,
/// sorted by graph6 string.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    Ok(enumerate_table(n, connected_only)?.pop().unwrap_or_default())
}

/// Classes for every order `0..=max`, index = order.
pub fn enumerate_table(max: usize, connected_only: bool) -> Result<Vec<Vec<Graph>>> {
    if max > ENUMERATION_CAP {
        return Err(Error::OrderCapExceeded {
            order: max,
            cap: ENUMERATION_CAP,
        });
    }
    let mut all = vec![vec![Graph::empty(0)]];
    for n in 1..=max {
        let next = augment(&all[n - 1])?;
        log::debug!("order {n}: {} classes", next.len());
        all.push(next);
    }
    all.into_iter()
        .map(|classes| {
            let kept = classes
                .into_iter()
                .filter(|g| !connected_only || (g.order() > 0 && g.is_connected()))
                .collect();
            by_graph6(kept)
        })
        .collect()
}

/// All classes on `1..=max` vertices, ordered by order then graph6.
pub fn enumerate_up_to(max: usize, connected_only: bool) -> Result<Vec<Graph>> {
    Ok(enumerate_table(max, connected_only)?
        .into_iter()
        .skip(1)
        .flatten()
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let all: Vec<usize> = enumerate_table(7, false).unwrap().iter().map(Vec::len).collect();
        assert_eq!(all, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
        let conn: Vec<usize> = enumerate_table(7, true).unwrap().iter().map(Vec::len).collect();
        assert_eq!(conn, vec![0, 1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn connected_three() {
        let g6: Vec<String> = enumerate_graphs(3, true)
            .unwrap()
            .iter()
            .map(|g| encode_graph6(g).unwrap())
            .collect();
        // P_3 and K_3
        assert_eq!(g6.len(), 2);
        assert!(g6.contains(&"Bw".to_string()));
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            enumerate_graphs(9, false),
            Err(Error::OrderCapExceeded { order: 9, .. })
        ));
    }
}

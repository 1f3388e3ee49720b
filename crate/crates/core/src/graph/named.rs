use std::collections::BTreeSet;

use super::{lex_blowup, Graph};
use crate::error::{Error, Result};

/// Builds a graph from a short spec string.
///
/// Recognized forms: `cycle:n`, `complete:n`, `hypercube:a`, `petersen`,
/// `circulant:n:s1,..,sk`, `complete_bipartite:a:b` and `blowup:m:<spec>`
/// for the lexicographic product of another spec with `m` independent
/// vertices. Hypercube vertices are `a`-bit strings read as binary numbers;
/// Petersen vertices are the 2-subsets of `{0..4}` in lexicographic order.
///
/// ```
/// use conwalk::named_graph;
/// let q3 = named_graph("hypercube:3").unwrap();
/// assert_eq!((q3.vertex_count(), q3.valence()), (8, Some(3)));
/// ```
pub fn named_graph(spec: &str) -> Result<Graph> {
    let spec = spec.trim();
    let (kind, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let bad = || Error::BadParameters(spec.to_string());
    let int = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    match kind {
        "cycle" => {
            let n = int(rest)?;
            if n < 3 {
                return Err(bad());
            }
            Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
        }
        "complete" => {
            let n = int(rest)?;
            if n < 3 {
                return Err(bad());
            }
            let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            Graph::from_edges(n, &edges)
        }
        "hypercube" => {
            let a = int(rest)?;
            if !(2..=16).contains(&a) {
                return Err(bad());
            }
            let n = 1usize << a;
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (0..a).map(move |b| (u, u ^ (1 << b))).filter(|&(u, v)| u < v))
                .collect();
            Graph::from_edges(n, &edges)
        }
        "petersen" if rest.is_empty() => {
            let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
            let mut edges = Vec::new();
            for (i, &(a, b)) in pairs.iter().enumerate() {
                for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
                    if a != c && a != d && b != c && b != d {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(10, &edges)
        }
        "circulant" => {
            let (n, jumps) = rest.split_once(':').ok_or_else(bad)?;
            let n = int(n)?;
            if n < 3 {
                return Err(bad());
            }
            let mut edges = BTreeSet::new();
            for s in jumps.split(',') {
                let s = int(s)? % n;
                if s == 0 {
                    return Err(bad());
                }
                for i in 0..n {
                    let j = (i + s) % n;
                    edges.insert((i.min(j), i.max(j)));
                }
            }
            Graph::from_edges(n, &edges.into_iter().collect::<Vec<_>>())
        }
        "complete_bipartite" => {
            let (a, b) = rest.split_once(':').ok_or_else(bad)?;
            let (a, b) = (int(a)?, int(b)?);
            if a == 0 || b == 0 {
                return Err(bad());
            }
            let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
            Graph::from_edges(a + b, &edges)
        }
        "blowup" => {
            let (m, base) = rest.split_once(':').ok_or_else(bad)?;
            Ok(lex_blowup(&named_graph(base)?, int(m)?)?.graph)
        }
        _ => Err(Error::UnknownSpec(spec.to_string())),
    }
}

//! Automorphism groups by individualization and refinement.
//!
//! A base `b_1, .., b_k` is found by repeatedly individualizing the first
//! vertex of the first non-singleton cell of the equitable partition. Working
//! from the deepest level up, every vertex of the level's cell that is not yet
//! in the orbit of `b_i` is tested with a backtracking search for an
//! automorphism fixing `b_1..b_{i-1}` and sending `b_i` to it. The
//! automorphisms found form a strong generating set, and the product of the
//! orbit lengths is the group order.

use super::Graph;
use crate::error::{Error, Result};
use crate::perm::{Permutation, PermutationGroup};

type Coloring = Vec<u32>;

fn signatures(graph: &Graph, colors: &[u32]) -> Vec<(u32, Vec<u32>)> {
    (0..graph.vertex_count())
        .map(|v| {
            let mut around: Vec<u32> = graph.neighbors(v).iter().map(|&w| colors[w]).collect();
            around.sort_unstable();
            (colors[v], around)
        })
        .collect()
}

fn distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Refines two colorings in lockstep, naming cells identically on both sides.
/// Returns false as soon as the cell multisets disagree.
fn refine_pair(graph: &Graph, a: &mut Coloring, b: &mut Coloring) -> bool {
    loop {
        let before = distinct(a);
        let sig_a = signatures(graph, a);
        let sig_b = signatures(graph, b);
        let mut sorted_a = sig_a.clone();
        sorted_a.sort_unstable();
        let mut sorted_b = sig_b.clone();
        sorted_b.sort_unstable();
        if sorted_a != sorted_b {
            return false;
        }
        sorted_a.dedup();
        for v in 0..a.len() {
            a[v] = sorted_a.binary_search(&sig_a[v]).unwrap() as u32;
            b[v] = sorted_a.binary_search(&sig_b[v]).unwrap() as u32;
        }
        if sorted_a.len() == before {
            return true;
        }
    }
}

fn individualize(colors: &Coloring, v: usize) -> Coloring {
    let fresh = colors.iter().max().map_or(0, |m| m + 1);
    let mut out = colors.clone();
    out[v] = fresh;
    out
}

/// First non-singleton cell: its color and members in ascending order.
fn target_cell(colors: &[u32]) -> Option<(u32, Vec<usize>)> {
    let mut counts = vec![0usize; colors.len() + 1];
    for &c in colors {
        counts[c as usize] += 1;
    }
    let color = (0..counts.len()).find(|&c| counts[c] > 1)? as u32;
    let members = (0..colors.len()).filter(|&v| colors[v] == color).collect();
    Some((color, members))
}

/// Searches for an automorphism mapping the `a` coloring onto the `b` coloring.
fn extend(graph: &Graph, mut a: Coloring, mut b: Coloring) -> Option<Permutation> {
    if !refine_pair(graph, &mut a, &mut b) {
        return None;
    }
    match target_cell(&a) {
        None => {
            let mut by_color = vec![0usize; a.len()];
            for (v, &c) in b.iter().enumerate() {
                by_color[c as usize] = v;
            }
            let images = a.iter().map(|&c| by_color[c as usize]).collect();
            let p = Permutation::from_images(images).ok()?;
            graph.is_automorphism(&p).then_some(p)
        }
        Some((color, members)) => {
            let u = members[0];
            (0..b.len())
                .filter(|&v| b[v] == color)
                .find_map(|v| extend(graph, individualize(&a, u), individualize(&b, v)))
        }
    }
}

struct Level {
    colors: Coloring,
    point: usize,
    cell: Vec<usize>,
}

fn orbit_under(gens: &[Permutation], point: usize, n: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[point] = true;
    let mut stack = vec![point];
    while let Some(p) = stack.pop() {
        for g in gens {
            let q = g.apply(p);
            if !seen[q] {
                seen[q] = true;
                stack.push(q);
            }
        }
    }
    seen
}

/// The full automorphism group of `graph`, materialized up to `cap` elements.
///
/// ```
/// use conwalk::{automorphism_group, named_graph, DEFAULT_GROUP_CAP};
/// let pet = named_graph("petersen").unwrap();
/// assert_eq!(automorphism_group(&pet, DEFAULT_GROUP_CAP).unwrap().order(), 120);
/// ```
pub fn automorphism_group(graph: &Graph, cap: usize) -> Result<PermutationGroup> {
    let n = graph.vertex_count();
    let mut levels = Vec::new();
    let mut colors: Coloring = vec![0; n];
    loop {
        let mut twin = colors.clone();
        refine_pair(graph, &mut colors, &mut twin);
        let Some((_, cell)) = target_cell(&colors) else {
            break;
        };
        let point = cell[0];
        let next = individualize(&colors, point);
        levels.push(Level { colors, point, cell });
        colors = next;
    }

    let mut gens: Vec<Permutation> = Vec::new();
    let mut order: usize = 1;
    for level in levels.iter().rev() {
        let mut orbit = orbit_under(&gens, level.point, n);
        for &v in &level.cell {
            if orbit[v] {
                continue;
            }
            let found = extend(
                graph,
                individualize(&level.colors, level.point),
                individualize(&level.colors, v),
            );
            if let Some(p) = found {
                gens.push(p);
                orbit = orbit_under(&gens, level.point, n);
            }
        }
        let length = orbit.iter().filter(|&&x| x).count();
        order = order
            .checked_mul(length)
            .filter(|&o| o <= cap)
            .ok_or(Error::CapExceeded { cap })?;
    }

    let group = PermutationGroup::close(n, gens, cap)?;
    if group.order() != order {
        return Err(Error::Invariant(format!(
            "automorphism closure has order {} but the orbit chain gives {order}",
            group.order()
        )));
    }
    Ok(group)
}

/// Closes user-supplied generators after checking that each is an automorphism.
pub fn group_from_generators(graph: &Graph, gens: Vec<Permutation>, cap: usize) -> Result<PermutationGroup> {
    for g in &gens {
        if g.degree() != graph.vertex_count() {
            return Err(Error::DegreeMismatch {
                left: graph.vertex_count(),
                right: g.degree(),
            });
        }
        if !graph.is_automorphism(g) {
            return Err(Error::NotAutomorphisms);
        }
    }
    PermutationGroup::close(graph.vertex_count(), gens, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{lex_blowup, named_graph};
    use crate::perm::DEFAULT_GROUP_CAP;

    /// Counts automorphisms by trying every vertex bijection (Heap's algorithm).
    fn brute_force_order(graph: &Graph) -> usize {
        let n = graph.vertex_count();
        let edges = graph.edges();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut c = vec![0usize; n];
        let is_aut = |p: &[usize]| edges.iter().all(|&(u, v)| graph.is_adjacent(p[u], p[v]));
        let mut count = usize::from(is_aut(&perm));
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                count += usize::from(is_aut(&perm));
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        count
    }

    #[test]
    fn small_orders_match_brute_force() {
        for spec in [
            "cycle:6",
            "complete:4",
            "hypercube:3",
            "complete_bipartite:2:3",
            "circulant:8:1,2",
            "cycle:7",
        ] {
            let g = named_graph(spec).unwrap();
            let aut = automorphism_group(&g, DEFAULT_GROUP_CAP).unwrap();
            assert_eq!(aut.order(), brute_force_order(&g), "{spec}");
            assert!(aut.elements().iter().all(|p| g.is_automorphism(p)));
        }
    }

    #[test]
    fn petersen_matches_brute_force() {
        let g = named_graph("petersen").unwrap();
        assert_eq!(brute_force_order(&g), 120);
        assert_eq!(automorphism_group(&g, DEFAULT_GROUP_CAP).unwrap().order(), 120);
    }

    #[test]
    fn known_orders() {
        let cases = [
            ("cycle:6", 12),
            ("complete:4", 24),
            ("complete:5", 120),
            ("hypercube:3", 48),
            ("hypercube:4", 384),
            ("blowup:2:cycle:4", 1152),
            ("blowup:2:hypercube:3", 12288),
            ("circulant:13:1,5", 52),
        ];
        for (spec, order) in cases {
            let g = named_graph(spec).unwrap();
            let aut = automorphism_group(&g, DEFAULT_GROUP_CAP).unwrap();
            assert_eq!(aut.order(), order, "{spec}");
            assert!(aut.check_closed());
        }
    }

    #[test]
    fn irregular_and_disconnected_graphs() {
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(
            automorphism_group(&two_triangles, DEFAULT_GROUP_CAP).unwrap().order(),
            72
        );
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(automorphism_group(&path, DEFAULT_GROUP_CAP).unwrap().order(), 2);
        let k23 = named_graph("complete_bipartite:2:3").unwrap();
        assert_eq!(automorphism_group(&k23, DEFAULT_GROUP_CAP).unwrap().order(), 12);
    }

    #[test]
    fn cap_is_reported() {
        let k6 = named_graph("complete:6").unwrap();
        assert_eq!(
            automorphism_group(&k6, 100).unwrap_err(),
            Error::CapExceeded { cap: 100 }
        );
    }

    #[test]
    fn supplied_generators_are_checked() {
        let c6 = named_graph("cycle:6").unwrap();
        let rot = Permutation::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]).unwrap();
        assert_eq!(group_from_generators(&c6, vec![rot], 100).unwrap().order(), 6);
        let bad = Permutation::transposition(6, 0, 1);
        assert_eq!(
            group_from_generators(&c6, vec![bad], 100).unwrap_err(),
            Error::NotAutomorphisms
        );
        let b = lex_blowup(&c6, 2).unwrap();
        assert!(group_from_generators(&b.graph, vec![Permutation::identity(6)], 10).is_err());
    }
}
